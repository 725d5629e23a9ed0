//! Closed-form correlation measures for the SU(2)-invariant family.
//!
//! All logarithms are base 2, so every quantity is in bits. Zero-weight
//! entropy terms are dropped, which keeps the boundary points `F = 0`,
//! `F = 1` and the maximally mixed point finite.

use serde::{Deserialize, Serialize};

use crate::angular::{cg_pair, product_index, total_basis_labels, Branch, TwiceJ};
use crate::linalg::{binary_entropy, xlog2x, Spectrum};
use crate::oracle;
use crate::states::Su2InvariantState;

/// Width of the band used when comparing `F` against a threshold.
pub const THRESHOLD_BAND: f64 = 1e-12;

/// Spectrum of the spin-j state left after a projective measurement on the
/// qubit. It is the same for both outcomes and for every measurement axis.
#[derive(Clone, Debug, PartialEq)]
pub struct PostMeasurementSpectrum {
    /// `(λ_n^+, λ_n^-)` for each `n` with `j - n > 0`.
    pub pairs: Vec<(f64, f64)>,
    /// The unpaired `1/(2j+1)` present for integer `j`.
    pub center: Option<f64>,
}

impl PostMeasurementSpectrum {
    /// All `2j + 1` values, pairs first then the center value.
    pub fn values(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(p, m)| [p, m])
            .chain(self.center)
            .collect()
    }

    pub fn to_spectrum(&self) -> Spectrum {
        Spectrum::new(self.values())
    }

    /// `Σ λ log2 λ` over the full list.
    pub fn sum_xlogx(&self) -> f64 {
        self.values().into_iter().map(xlog2x).sum()
    }
}

fn two_j_f64(j: TwiceJ) -> f64 {
    f64::from(j.get())
}

/// `I = S(ρ_a) + S(ρ_b) - S(ρ)`.
pub fn mutual_information(s: &Su2InvariantState) -> f64 {
    let two_j = two_j_f64(s.j());
    let f = s.f();
    let mut value = 1.0 + (two_j + 1.0).log2();
    if f > 0.0 {
        value += f * (f / two_j).log2();
    }
    if f < 1.0 {
        value += (1.0 - f) * ((1.0 - f) / (two_j + 2.0)).log2();
    }
    value
}

pub fn post_measurement_spectrum(s: &Su2InvariantState) -> PostMeasurementSpectrum {
    let two_j = s.j().get();
    let j = two_j_f64(s.j()) / 2.0;
    let dim = 2.0 * j + 1.0;
    let center = 1.0 / dim;
    let slope = (s.f() * dim - j).abs() / (j * (j + 1.0) * dim);
    // n runs while j - n > 0; in units of one half, j - n = (2j - 2n) / 2.
    let pairs = (0..)
        .map(|n: u32| two_j as i64 - 2 * i64::from(n))
        .take_while(|&twice_gap| twice_gap > 0)
        .map(|twice_gap| {
            let shift = twice_gap as f64 / 2.0 * slope;
            (center + shift, center - shift)
        })
        .collect();
    PostMeasurementSpectrum {
        pairs,
        center: s.j().is_integer_spin().then_some(center),
    }
}

/// Diagonals of the unnormalized conditional states `p_0 ρ_0` and `p_1 ρ_1`
/// for a measurement along the quantization axis, assembled from the
/// Clebsch–Gordan weights. Index order is `m_a` descending.
///
/// Rotational invariance makes these representative of every measurement
/// axis, so they give the post-measurement spectrum without any
/// optimization.
pub fn post_measurement_diagonals(s: &Su2InvariantState) -> (Vec<f64>, Vec<f64>) {
    let j = s.j();
    let mut up = vec![0.0; j.dim()];
    let mut down = vec![0.0; j.dim()];
    for (branch, two_m) in total_basis_labels(j) {
        let w = match branch {
            Branch::Plus => s.upper_weight(),
            Branch::Minus => s.lower_weight(),
        };
        let cg = cg_pair(j, two_m, branch).expect("label generated in range");
        if let Some(idx) = product_index(j, two_m - 1, true) {
            up[idx / 2] += w * cg.a * cg.a;
        }
        if let Some(idx) = product_index(j, two_m + 1, false) {
            down[idx / 2] += w * cg.b * cg.b;
        }
    }
    (up, down)
}

/// Spectra of the two normalized conditional states obtained directly from
/// [`post_measurement_diagonals`] (each outcome has probability 1/2).
pub fn post_measurement_states_direct(s: &Su2InvariantState) -> (Spectrum, Spectrum) {
    let (up, down) = post_measurement_diagonals(s);
    let rescale = |v: Vec<f64>| Spectrum::new(v.into_iter().map(|x| 2.0 * x).collect());
    (rescale(up), rescale(down))
}

/// `C = log2(2j+1) + Σ λ log2 λ`; the measurement-independent spectrum makes
/// the optimization trivial.
pub fn classical_correlations(s: &Su2InvariantState) -> f64 {
    (two_j_f64(s.j()) + 1.0).log2() + post_measurement_spectrum(s).sum_xlogx()
}

/// `D = I - C`.
pub fn quantum_discord(s: &Su2InvariantState) -> f64 {
    mutual_information(s) - classical_correlations(s)
}

/// Asymptotic large-j form of the discord, with
/// `Λ_n^± = 1/2j ± (j - n)|2F - 1| / (2j²)`.
///
/// This is the limiting expression and is not normalized for finite `j`;
/// compare with [`quantum_discord`] only as `j` grows.
pub fn discord_large_j(s: &Su2InvariantState) -> f64 {
    let j = two_j_f64(s.j()) / 2.0;
    let f = s.f();
    let base = 1.0 / (2.0 * j);
    let slope = (2.0 * f - 1.0).abs() / (2.0 * j * j);
    let mut sum = 0.0;
    let mut twice_gap = i64::from(s.j().get());
    while twice_gap > 0 {
        let shift = twice_gap as f64 / 2.0 * slope;
        sum += xlog2x(base + shift) + xlog2x(base - shift);
        twice_gap -= 2;
    }
    if s.j().is_integer_spin() {
        sum += xlog2x(base);
    }
    1.0 + xlog2x(f) + xlog2x(1.0 - f) - (2.0 * j + 1.0).log2() - sum
}

/// Entanglement of formation in bits.
pub fn entanglement_of_formation(s: &Su2InvariantState) -> f64 {
    let two_j = two_j_f64(s.j());
    let f = s.f();
    if f <= separability_threshold(s.j()) + THRESHOLD_BAND {
        return 0.0;
    }
    let root = f.sqrt() - (two_j * (1.0 - f)).sqrt();
    binary_entropy(root * root / (two_j + 1.0)).expect("argument lies in [0, 1]")
}

/// `F_s = 2j / (2j + 1)`: states with `F` above it are entangled.
pub fn separability_threshold(j: TwiceJ) -> f64 {
    let two_j = two_j_f64(j);
    two_j / (two_j + 1.0)
}

/// `F_d = j / (2j + 1)`: the maximally mixed member, where discord and
/// classical correlations vanish.
pub fn discord_zero_point(j: TwiceJ) -> f64 {
    let two_j = two_j_f64(j);
    two_j / (2.0 * (two_j + 1.0))
}

/// All correlation measures for one `(j, F)` point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub two_j: u32,
    #[serde(rename = "F")]
    pub f: f64,
    pub mutual: f64,
    pub classical: f64,
    pub discord: f64,
    pub eof: f64,
    pub negativity: f64,
}

impl CorrelationReport {
    /// Closed forms for the information measures; negativity is computed
    /// numerically from the product-basis density matrix.
    pub fn evaluate(s: &Su2InvariantState) -> Self {
        let mutual = mutual_information(s);
        let classical = classical_correlations(s);
        Self {
            two_j: s.j().get(),
            f: s.f(),
            mutual,
            classical,
            discord: mutual - classical,
            eof: entanglement_of_formation(s),
            negativity: oracle::negativity(&s.build_product_basis()),
        }
    }
}
