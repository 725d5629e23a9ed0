//! Clebsch–Gordan coupling of a spin-j with a spin-1/2.
//!
//! Basis conventions shared by the whole crate:
//!
//! * product basis: `m_a` descending from `j` to `-j`, and for each `m_a` the
//!   qubit states `+1/2` then `-1/2` (index `2 (j - m_a) + {0, 1}`);
//! * total-spin basis: the `J = j + 1/2` multiplet first, then `J = j - 1/2`,
//!   each with `M` descending.
//!
//! Magnetic numbers are carried as `2m` integers throughout.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// A spin label stored as the integer `2j`, with `2j >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct TwiceJ(u32);

impl TwiceJ {
    pub fn new(two_j: u32) -> Result<Self> {
        if two_j == 0 {
            return Err(Error::InvalidSpin(two_j));
        }
        Ok(Self(two_j))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn j(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// Hilbert-space dimension `2j + 1` of the spin.
    pub fn dim(self) -> usize {
        self.0 as usize + 1
    }

    /// Dimension of the coupled spin-j ⊗ spin-1/2 space.
    pub fn product_dim(self) -> usize {
        2 * self.dim()
    }

    pub fn is_integer_spin(self) -> bool {
        self.0 % 2 == 0
    }
}

impl TryFrom<u32> for TwiceJ {
    type Error = Error;

    fn try_from(v: u32) -> Result<Self> {
        Self::new(v)
    }
}

impl From<TwiceJ> for u32 {
    fn from(j: TwiceJ) -> u32 {
        j.0
    }
}

impl std::fmt::Display for TwiceJ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Total spin `J = j + 1/2` (`Plus`) or `J = j - 1/2` (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    /// `2J` for this branch.
    pub fn two_total(self, j: TwiceJ) -> i64 {
        match self {
            Branch::Plus => i64::from(j.get()) + 1,
            Branch::Minus => i64::from(j.get()) - 1,
        }
    }

    /// Number of states in the multiplet, `2J + 1`.
    pub fn multiplicity(self, j: TwiceJ) -> usize {
        (self.two_total(j) + 1) as usize
    }
}

/// Amplitudes of `|J, M>` on the two product states it touches:
/// `|J, M> = a |M - 1/2> ⊗ |+1/2> + b |M + 1/2> ⊗ |-1/2>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CgPair {
    pub a: f64,
    pub b: f64,
    pub branch: Branch,
    pub two_m: i64,
}

pub fn cg_pair(j: TwiceJ, two_m: i64, branch: Branch) -> Result<CgPair> {
    let two_total = branch.two_total(j);
    if two_m.abs() > two_total || (two_total - two_m) % 2 != 0 {
        return Err(Error::InvalidMagnetic { two_m });
    }
    let denom = 2.0 * (f64::from(j.get()) + 1.0);
    let base = f64::from(j.get()) + 1.0;
    let m = two_m as f64;
    let (a, b) = match branch {
        Branch::Plus => (((base + m) / denom).sqrt(), ((base - m) / denom).sqrt()),
        Branch::Minus => (-((base - m) / denom).sqrt(), ((base + m) / denom).sqrt()),
    };
    Ok(CgPair { a, b, branch, two_m })
}

/// Index of `|m_a> ⊗ |±1/2>` in the product basis.
pub fn product_index(j: TwiceJ, two_ma: i64, spin_up: bool) -> Option<usize> {
    let two_j = i64::from(j.get());
    if two_ma.abs() > two_j || (two_j - two_ma) % 2 != 0 {
        return None;
    }
    Some(((two_j - two_ma) / 2) as usize * 2 + usize::from(!spin_up))
}

/// Index of `|J, M>` in the total-spin basis.
pub fn total_index(j: TwiceJ, branch: Branch, two_m: i64) -> Option<usize> {
    let two_total = branch.two_total(j);
    if two_m.abs() > two_total || (two_total - two_m) % 2 != 0 {
        return None;
    }
    let offset = match branch {
        Branch::Plus => 0,
        Branch::Minus => Branch::Plus.multiplicity(j),
    };
    Some(offset + ((two_total - two_m) / 2) as usize)
}

/// Labels `(branch, 2M)` of the total-spin basis, in basis order.
pub fn total_basis_labels(j: TwiceJ) -> Vec<(Branch, i64)> {
    [Branch::Plus, Branch::Minus]
        .into_iter()
        .flat_map(|br| {
            let top = br.two_total(j);
            (0..br.multiplicity(j)).map(move |k| (br, top - 2 * k as i64))
        })
        .collect()
}

/// Orthogonal matrix whose columns are the total-spin states written in the
/// product basis.
pub fn coupling_unitary(j: TwiceJ) -> ComplexMatrix {
    let n = j.product_dim();
    let mut u = ComplexMatrix::zeros(n, n);
    for (col, (branch, two_m)) in total_basis_labels(j).into_iter().enumerate() {
        let cg = cg_pair(j, two_m, branch).expect("label generated in range");
        if let Some(row) = product_index(j, two_m - 1, true) {
            u[(row, col)] = C64::new(cg.a, 0.0);
        }
        if let Some(row) = product_index(j, two_m + 1, false) {
            u[(row, col)] = C64::new(cg.b, 0.0);
        }
    }
    u
}

/// Spin matrices `(S_x, S_y, S_z)` for spin `j` in the `m` descending basis.
pub fn spin_matrices(j: TwiceJ) -> [ComplexMatrix; 3] {
    let n = j.dim();
    let jj = j.j();
    let m_of = |i: usize| jj - i as f64;
    let mut raise = ComplexMatrix::zeros(n, n);
    // S+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>; |m+1> sits one index above |m>.
    for i in 1..n {
        let m = m_of(i);
        raise[(i - 1, i)] = C64::new((jj * (jj + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let lower = raise.adjoint();
    let sx = (&raise + &lower).scale_real(0.5);
    let sy = (&raise - &lower).scale(C64::new(0.0, -0.5));
    let sz = ComplexMatrix::diagonal(&(0..n).map(m_of).collect::<Vec<_>>());
    [sx, sy, sz]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tj(v: u32) -> TwiceJ {
        TwiceJ::new(v).unwrap()
    }

    #[test]
    fn twice_j_validation() {
        assert!(TwiceJ::new(0).is_err());
        assert_eq!(tj(3).dim(), 4);
        assert_eq!(tj(3).to_string(), "3/2");
        assert_eq!(tj(4).to_string(), "2");
        let parsed: TwiceJ = serde_json::from_str("5").unwrap();
        assert_eq!(parsed.get(), 5);
        assert!(serde_json::from_str::<TwiceJ>("0").is_err());
    }

    #[test]
    fn singlet_coefficients() {
        let cg = cg_pair(tj(1), 0, Branch::Minus).unwrap();
        assert_abs_diff_eq!(cg.a, -std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(cg.b, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn stretched_state() {
        let cg = cg_pair(tj(1), 2, Branch::Plus).unwrap();
        assert_eq!((cg.a, cg.b), (1.0, 0.0));
    }

    #[test]
    fn five_eighths_coefficients() {
        // (j + 1/2 + m)/(2j + 1) = 5/8 at j = 7/2, m = 1
        let cg = cg_pair(tj(7), 2, Branch::Plus).unwrap();
        assert_abs_diff_eq!(cg.a, (5.0f64 / 8.0).sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(cg.b, (3.0f64 / 8.0).sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(cg.a, 0.790_569, epsilon = 1e-6);
        assert_abs_diff_eq!(cg.b, 0.612_372, epsilon = 1e-6);
        // half-integer M does not exist in the integer J = 2 multiplet of j = 3/2
        assert!(cg_pair(tj(3), 1, Branch::Plus).is_err());
        let cg = cg_pair(tj(3), 2, Branch::Plus).unwrap();
        assert_abs_diff_eq!(cg.a, (3.0f64 / 4.0).sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn out_of_range_magnetic_numbers() {
        assert!(cg_pair(tj(1), 2, Branch::Minus).is_err());
        assert!(cg_pair(tj(1), 4, Branch::Plus).is_err());
        // wrong parity: 2j odd needs 2m even
        assert!(cg_pair(tj(1), 1, Branch::Plus).is_err());
        assert!(cg_pair(tj(2), 0, Branch::Plus).is_err());
    }

    #[test]
    fn branches_orthonormal_at_fixed_m() {
        for two_j in 1..=20u32 {
            let j = tj(two_j);
            for (branch, two_m) in total_basis_labels(j) {
                let p = cg_pair(j, two_m, branch).unwrap();
                assert!((p.a * p.a + p.b * p.b - 1.0).abs() < 1e-14);
                if branch == Branch::Minus {
                    let q = cg_pair(j, two_m, Branch::Plus).unwrap();
                    assert!((p.a * q.a + p.b * q.b).abs() < 1e-14);
                    assert!(p.a <= 0.0 && q.a >= 0.0);
                }
            }
        }
    }

    #[test]
    fn two_qubit_singlet_column() {
        let u = coupling_unitary(tj(1));
        let col = total_index(tj(1), Branch::Minus, 0).unwrap();
        assert_eq!(col, 3);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let want = [0.0, h, -h, 0.0];
        for (row, w) in want.iter().enumerate() {
            assert_abs_diff_eq!(u[(row, col)].re, *w, epsilon = 1e-15);
        }
    }

    #[test]
    fn coupling_unitary_is_orthogonal() {
        for two_j in [1u32, 2, 3, 4, 9, 49] {
            let j = tj(two_j);
            let u = coupling_unitary(j);
            let n = j.product_dim();
            assert!((&u.adjoint() * &u).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
            assert!(u.as_slice().iter().all(|z| z.im == 0.0));
            // J blocks have sizes 2j + 2 and 2j
            assert_eq!(Branch::Plus.multiplicity(j), two_j as usize + 2);
            assert_eq!(Branch::Minus.multiplicity(j), two_j as usize);
        }
    }

    #[test]
    fn coupled_states_are_total_spin_eigenstates() {
        // J² = (S_a + S_b)² acting on column |J, M> gives J(J+1).
        let j = tj(3);
        let u = coupling_unitary(j);
        let sa = spin_matrices(j);
        let sb = spin_matrices(tj(1));
        let ia = ComplexMatrix::identity(j.dim());
        let ib = ComplexMatrix::identity(2);
        let mut j2 = ComplexMatrix::zeros(j.product_dim(), j.product_dim());
        for k in 0..3 {
            let total = &crate::linalg::tensor(&sa[k], &ib) + &crate::linalg::tensor(&ia, &sb[k]);
            j2 = &j2 + &(&total * &total);
        }
        let in_total = &(&u.adjoint() * &j2) * &u;
        for (col, (branch, _)) in total_basis_labels(j).into_iter().enumerate() {
            let big_j = branch.two_total(j) as f64 / 2.0;
            assert_abs_diff_eq!(in_total[(col, col)].re, big_j * (big_j + 1.0), epsilon = 1e-12);
        }
        let diag = ComplexMatrix::diagonal(&in_total.real_diagonal());
        assert!(in_total.max_abs_diff(&diag) < 1e-12);
    }

    #[test]
    fn spin_matrix_algebra() {
        for two_j in [1u32, 2, 5] {
            let j = tj(two_j);
            let [sx, sy, sz] = spin_matrices(j);
            // [Sx, Sy] = i Sz
            let lhs = sx.commutator(&sy);
            assert!(lhs.max_abs_diff(&sz.scale(C64::new(0.0, 1.0))) < 1e-13);
            let casimir = &(&(&sx * &sx) + &(&sy * &sy)) + &(&sz * &sz);
            let jj = j.j();
            assert!(casimir.max_abs_diff(&ComplexMatrix::identity(j.dim()).scale_real(jj * (jj + 1.0))) < 1e-12);
        }
    }
}
