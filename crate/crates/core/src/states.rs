//! SU(2)-invariant states of a spin-j ⊗ spin-1/2 pair.
//!
//! The family is fixed by one number `F`, the total weight carried by the
//! `J = j - 1/2` multiplet; the `J = j + 1/2` multiplet carries `1 - F`, and
//! each multiplet is uniformly mixed.

use serde::{Deserialize, Serialize};

use crate::angular::{cg_pair, product_index, total_basis_labels, Branch, TwiceJ};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigh, ComplexMatrix, DensityMatrix, Spectrum, C64};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Su2InvariantState {
    j: TwiceJ,
    f: f64,
}

impl Su2InvariantState {
    pub fn new(j: TwiceJ, f: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&f) {
            return Err(Error::OutOfRange { value: f, lo: 0.0, hi: 1.0 });
        }
        Ok(Self { j, f })
    }

    /// Convenience constructor from the raw integer `2j`.
    pub fn from_two_j(two_j: u32, f: f64) -> Result<Self> {
        Self::new(TwiceJ::new(two_j)?, f)
    }

    pub fn j(&self) -> TwiceJ {
        self.j
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    /// Eigenvalue `F / 2j` on each state of the `J = j - 1/2` multiplet.
    pub fn lower_weight(&self) -> f64 {
        self.f / f64::from(self.j.get())
    }

    /// Eigenvalue `(1 - F) / (2j + 2)` on each state of the `J = j + 1/2` multiplet.
    pub fn upper_weight(&self) -> f64 {
        (1.0 - self.f) / (f64::from(self.j.get()) + 2.0)
    }

    fn weight(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Plus => self.upper_weight(),
            Branch::Minus => self.lower_weight(),
        }
    }

    /// Density matrix in the total-spin basis (diagonal).
    pub fn build_total_basis(&self) -> DensityMatrix {
        let diag: Vec<f64> = total_basis_labels(self.j)
            .into_iter()
            .map(|(branch, _)| self.weight(branch))
            .collect();
        DensityMatrix::new_unchecked(ComplexMatrix::diagonal(&diag), self.j.dim(), 2)
    }

    /// Density matrix in the product basis, summed multiplet by multiplet from
    /// the Clebsch–Gordan amplitudes.
    pub fn build_product_basis(&self) -> DensityMatrix {
        let j = self.j;
        let mut rho = ComplexMatrix::zeros(j.product_dim(), j.product_dim());
        for (branch, two_m) in total_basis_labels(j) {
            let w = self.weight(branch);
            if w == 0.0 {
                continue;
            }
            let cg = cg_pair(j, two_m, branch).expect("label generated in range");
            let up = product_index(j, two_m - 1, true);
            let down = product_index(j, two_m + 1, false);
            if let Some(u) = up {
                rho[(u, u)] += C64::new(w * cg.a * cg.a, 0.0);
            }
            if let Some(d) = down {
                rho[(d, d)] += C64::new(w * cg.b * cg.b, 0.0);
            }
            if let (Some(u), Some(d)) = (up, down) {
                let off = C64::new(w * cg.a * cg.b, 0.0);
                rho[(u, d)] += off;
                rho[(d, u)] += off;
            }
        }
        DensityMatrix::new_unchecked(rho, j.dim(), 2)
    }

    /// Both marginals are maximally mixed for every member of the family.
    pub fn reduced_states(&self) -> (ComplexMatrix, ComplexMatrix) {
        let da = self.j.dim();
        (
            ComplexMatrix::identity(da).scale_real(1.0 / da as f64),
            ComplexMatrix::identity(2).scale_real(0.5),
        )
    }

    /// `{F/2j × 2j, (1-F)/(2j+2) × (2j+2)}`, zeros included.
    pub fn spectrum(&self) -> Spectrum {
        let two_j = self.j.get() as usize;
        let mut values = vec![self.lower_weight(); two_j];
        values.extend(std::iter::repeat(self.upper_weight()).take(two_j + 2));
        Spectrum::new(values)
    }
}

pub fn build_total_basis(s: &Su2InvariantState) -> DensityMatrix {
    s.build_total_basis()
}

pub fn build_product_basis(s: &Su2InvariantState) -> DensityMatrix {
    s.build_product_basis()
}

pub fn reduced_states(s: &Su2InvariantState) -> (ComplexMatrix, ComplexMatrix) {
    s.reduced_states()
}

pub fn state_spectrum(s: &Su2InvariantState) -> Spectrum {
    s.spectrum()
}

/// `exp(i angle n·S)` for spin `j`, with `n` normalized internally.
pub fn rotation_operator(j: TwiceJ, axis: [f64; 3], angle: f64) -> Result<ComplexMatrix> {
    let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::InvalidArgument("rotation axis must be a non-zero vector".into()));
    }
    let spins = crate::angular::spin_matrices(j);
    let mut generator = ComplexMatrix::zeros(j.dim(), j.dim());
    for (s, &n) in spins.iter().zip(&axis) {
        generator = &generator + &s.scale_real(n / norm);
    }
    let (values, vectors) = hermitian_eigh(&generator)?;
    let phases = ComplexMatrix::from_fn(values.len(), values.len(), |r, c| {
        if r == c {
            C64::from_polar(1.0, angle * values[r])
        } else {
            C64::new(0.0, 0.0)
        }
    });
    Ok(&(&vectors * &phases) * &vectors.adjoint())
}
