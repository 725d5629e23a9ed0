//! Brute-force route to the correlation measures.
//!
//! Nothing here uses the closed forms: measurements on the qubit are
//! parameterized by Bloch direction, the post-measurement ensemble is built
//! by literal projection and partial trace, and the conditional entropy is
//! minimized over a sphere grid followed by a local refinement.

use std::cmp::Ordering;
use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues, pauli_x, pauli_y, pauli_z, partial_trace, von_neumann_entropy,
    ComplexMatrix, DensityMatrix, Subsystem, HERMITIAN_TOL,
};

/// Outcomes less likely than this are dropped from the entropy average.
pub const DEGENERATE_PROBABILITY: f64 = 1e-14;

const REFINEMENT_STEPS: usize = 20;

/// Unit Bloch vector selecting the measurement basis `(I ± z·σ)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementDirection {
    z: [f64; 3],
}

impl MeasurementDirection {
    pub fn new(z1: f64, z2: f64, z3: f64) -> Result<Self> {
        let norm2 = z1 * z1 + z2 * z2 + z3 * z3;
        if (norm2 - 1.0).abs() > HERMITIAN_TOL {
            return Err(Error::InvalidArgument(format!(
                "measurement direction has squared norm {norm2}"
            )));
        }
        Ok(Self { z: [z1, z2, z3] })
    }

    /// Polar angle `theta` from the z axis, azimuth `phi`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self {
            z: [st * cp, st * sp, ct],
        }
    }

    pub fn components(&self) -> [f64; 3] {
        self.z
    }

    fn lexicographic_cmp(&self, other: &Self) -> Ordering {
        self.z
            .iter()
            .zip(&other.z)
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

/// Rotation `R` with `V† σ_i V = Σ_j R[i][j] σ_j` for `V = t I + i y·σ`.
///
/// Rows are the Pauli transformation rules; the `σ_2 → σ_3` entry is
/// `2(t y1 + y2 y3)`, which is what orthogonality of `R` requires.
pub fn pauli_conjugation(t: f64, y: [f64; 3]) -> Result<[[f64; 3]; 3]> {
    let [y1, y2, y3] = y;
    let norm2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
    if (norm2 - 1.0).abs() > HERMITIAN_TOL {
        return Err(Error::NotUnitary(norm2));
    }
    Ok([
        [
            t * t + y1 * y1 - y2 * y2 - y3 * y3,
            2.0 * (t * y3 + y1 * y2),
            2.0 * (-t * y2 + y1 * y3),
        ],
        [
            2.0 * (-t * y3 + y1 * y2),
            t * t + y2 * y2 - y1 * y1 - y3 * y3,
            2.0 * (t * y1 + y2 * y3),
        ],
        [
            2.0 * (t * y2 + y1 * y3),
            2.0 * (-t * y1 + y2 * y3),
            t * t + y3 * y3 - y1 * y1 - y2 * y2,
        ],
    ])
}

/// The `σ_3` row of [`pauli_conjugation`]: the Bloch vector of `V† σ_3 V`.
///
/// The projectors `V Π_k V†` point along the third *column* instead, which
/// equals `direction_from_unitary(t, -y)`. Both sweep the whole sphere as `V`
/// ranges over SU(2).
pub fn direction_from_unitary(t: f64, y: [f64; 3]) -> Result<MeasurementDirection> {
    let r = pauli_conjugation(t, y)?;
    Ok(MeasurementDirection { z: r[2] })
}

/// `(B_0, B_1) = ((I + z·σ)/2, (I - z·σ)/2)`.
pub fn projectors(d: &MeasurementDirection) -> (ComplexMatrix, ComplexMatrix) {
    let [z1, z2, z3] = d.z;
    let zs = &(&pauli_x().scale_real(z1) + &pauli_y().scale_real(z2)) + &pauli_z().scale_real(z3);
    let id = ComplexMatrix::identity(2);
    ((&id + &zs).scale_real(0.5), (&id - &zs).scale_real(0.5))
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub probability: f64,
    /// Normalized state of subsystem `a`; `None` when the outcome is degenerate.
    pub conditional: Option<ComplexMatrix>,
}

#[derive(Clone, Debug)]
pub struct MeasurementEnsemble {
    pub outcomes: Vec<Outcome>,
}

/// `(I ⊗ B) X (I ⊗ B)` for a single-qubit operator `B` on the minor index.
fn sandwich_local(x: &ComplexMatrix, dim_a: usize, b: &ComplexMatrix) -> ComplexMatrix {
    let n = x.rows();
    let left = ComplexMatrix::from_fn(n, n, |r, c| {
        let (a, s) = (r / 2, r % 2);
        (0..2).map(|t| b[(s, t)] * x[(a * 2 + t, c)]).sum()
    });
    debug_assert_eq!(n, dim_a * 2);
    ComplexMatrix::from_fn(n, n, |r, c| {
        let (a, s) = (c / 2, c % 2);
        (0..2).map(|t| left[(r, a * 2 + t)] * b[(t, s)]).sum()
    })
}

pub fn measure(rho: &DensityMatrix, d: &MeasurementDirection) -> Result<MeasurementEnsemble> {
    if rho.dim_b() != 2 {
        return Err(Error::DimensionMismatch {
            expected: "qubit second factor".into(),
            found: format!("dim_b = {}", rho.dim_b()),
        });
    }
    let (b0, b1) = projectors(d);
    let outcomes = [b0, b1]
        .iter()
        .map(|b| {
            let projected = sandwich_local(rho.matrix(), rho.dim_a(), b);
            let probability = projected.trace().re;
            let conditional = (probability >= DEGENERATE_PROBABILITY).then(|| {
                partial_trace(&projected, rho.dim_a(), 2, Subsystem::A)
                    .expect("dimensions validated")
                    .scale_real(1.0 / probability)
            });
            Outcome {
                probability,
                conditional,
            }
        })
        .collect();
    Ok(MeasurementEnsemble { outcomes })
}

/// `Σ_k p_k S(ρ_k)` for the measurement along `d`.
pub fn conditional_entropy(rho: &DensityMatrix, d: &MeasurementDirection) -> Result<f64> {
    let ensemble = measure(rho, d)?;
    let mut total = 0.0;
    for outcome in &ensemble.outcomes {
        if let Some(state) = &outcome.conditional {
            total += outcome.probability * von_neumann_entropy(state)?;
        }
    }
    Ok(total)
}

/// Sphere grid: `n_theta` cosine-uniform polar rings times `n_phi` azimuths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub n_theta: usize,
    pub n_phi: usize,
}

impl GridSpec {
    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_theta < 8 || n_phi < 8 {
            return Err(Error::InvalidArgument(format!(
                "grid {n_theta}x{n_phi} is too coarse; need at least 8 points per angle"
            )));
        }
        Ok(Self { n_theta, n_phi })
    }

    /// `n` polar rings and `2n` azimuths.
    pub fn square(n: usize) -> Result<Self> {
        Self::new(n, 2 * n)
    }

    fn angles(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.n_theta * self.n_phi);
        for i in 0..self.n_theta {
            let cos_theta = 1.0 - 2.0 * (i as f64 + 0.5) / self.n_theta as f64;
            let theta = cos_theta.clamp(-1.0, 1.0).acos();
            for k in 0..self.n_phi {
                out.push((theta, 2.0 * PI * k as f64 / self.n_phi as f64));
            }
        }
        out
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_theta: 64,
            n_phi: 128,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Minimization {
    /// Smallest conditional entropy found, in bits.
    pub value: f64,
    pub direction: MeasurementDirection,
    /// `max - min` of the conditional entropy over the grid.
    pub spread: f64,
}

pub fn minimize_conditional_entropy(rho: &DensityMatrix, grid: GridSpec) -> Result<Minimization> {
    let angles = grid.angles();
    let values = angles
        .par_iter()
        .map(|&(theta, phi)| conditional_entropy(rho, &MeasurementDirection::from_angles(theta, phi)))
        .collect::<Result<Vec<f64>>>()?;

    let mut best = 0usize;
    let mut max = f64::NEG_INFINITY;
    for (i, &v) in values.iter().enumerate() {
        max = max.max(v);
        let ord = v.total_cmp(&values[best]).then_with(|| {
            let (ti, pi) = angles[i];
            let (tb, pb) = angles[best];
            MeasurementDirection::from_angles(ti, pi)
                .lexicographic_cmp(&MeasurementDirection::from_angles(tb, pb))
        });
        if ord == Ordering::Less {
            best = i;
        }
    }
    let spread = max - values[best];

    // Derivative-free coordinate descent from the best grid point.
    let (mut theta, mut phi) = angles[best];
    let mut value = values[best];
    let mut step_theta = PI / grid.n_theta as f64;
    let mut step_phi = 2.0 * PI / grid.n_phi as f64;
    for _ in 0..REFINEMENT_STEPS {
        for (dt, dp) in [(step_theta, 0.0), (-step_theta, 0.0), (0.0, step_phi), (0.0, -step_phi)] {
            let (t, p) = (theta + dt, phi + dp);
            let v = conditional_entropy(rho, &MeasurementDirection::from_angles(t, p))?;
            if v < value {
                value = v;
                theta = t;
                phi = p;
            }
        }
        step_theta *= 0.5;
        step_phi *= 0.5;
    }

    Ok(Minimization {
        value,
        direction: MeasurementDirection::from_angles(theta, phi),
        spread,
    })
}

/// `max - min` of the conditional entropy over the given directions.
pub fn landscape_spread(rho: &DensityMatrix, directions: &[MeasurementDirection]) -> Result<f64> {
    let values = directions
        .par_iter()
        .map(|d| conditional_entropy(rho, d))
        .collect::<Result<Vec<f64>>>()?;
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(max - min)
}

#[derive(Clone, Copy, Debug)]
pub struct NumericDiscord {
    pub discord: f64,
    pub minimization: Minimization,
}

/// `D = S(ρ_b) - S(ρ) + min_d Σ_k p_k S(ρ_k)` over qubit measurements.
pub fn numeric_discord_with(rho: &DensityMatrix, grid: GridSpec) -> Result<NumericDiscord> {
    let s_b = von_neumann_entropy(&rho.partial_trace(Subsystem::B))?;
    let s_ab = rho.entropy()?;
    let minimization = minimize_conditional_entropy(rho, grid)?;
    Ok(NumericDiscord {
        discord: s_b - s_ab + minimization.value,
        minimization,
    })
}

pub fn numeric_discord(rho: &DensityMatrix) -> Result<f64> {
    Ok(numeric_discord_with(rho, GridSpec::default())?.discord)
}

/// Sum of the moduli of the negative eigenvalues of the partial transpose
/// over the qubit.
pub fn negativity(rho: &DensityMatrix) -> f64 {
    let pt = rho.partial_transpose(Subsystem::B);
    hermitian_eigenvalues(&pt)
        .expect("partial transpose of a Hermitian matrix is Hermitian")
        .values()
        .iter()
        .filter(|&&v| v < 0.0)
        .map(|v| -v)
        .sum()
}
