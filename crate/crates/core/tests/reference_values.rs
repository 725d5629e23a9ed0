//! Values computed once with an independent numpy implementation
//! (explicit Clebsch–Gordan construction plus Nelder–Mead over the sphere)
//! and frozen here.

use su2_discord::analytic::{mutual_information, quantum_discord};
use su2_discord::oracle::{negativity, numeric_discord};
use su2_discord::Su2InvariantState;

// (2j, F, mutual information, discord, negativity)
const REFERENCE: &[(u32, f64, f64, f64, f64)] = &[
    (1, 1.0, 2.0, 0.9999999999999996, 0.5000000000000001),
    (1, 0.7, 0.6432203505529599, 0.3651484454403221, 0.19999999999999993),
    (2, 0.3, 0.0036716014904638605, 0.0024688541856703328, 0.0),
    (3, 0.9, 0.872345346272942, 0.5447765360018237, 0.15000000000000002),
    (4, 0.05, 0.47981676208630786, 0.3502244261384089, 0.0),
    (9, 1.0, 1.1520030934450491, 0.7873700404804445, 0.09999999999999998),
    (9, 0.6, 0.06524985211238743, 0.043189649978906175, 0.0),
];

#[test]
fn closed_forms_match_frozen_values() {
    for &(two_j, f, mutual, discord, neg) in REFERENCE {
        let s = Su2InvariantState::from_two_j(two_j, f).unwrap();
        assert!((mutual_information(&s) - mutual).abs() < 1e-12, "I at 2j={two_j} F={f}");
        assert!((quantum_discord(&s) - discord).abs() < 1e-10, "D at 2j={two_j} F={f}");
        assert!((negativity(&s.build_product_basis()) - neg).abs() < 1e-12, "N at 2j={two_j} F={f}");
    }
}

#[test]
fn oracle_matches_frozen_values() {
    for &(two_j, f, _, discord, _) in REFERENCE.iter().filter(|r| r.0 <= 4) {
        let s = Su2InvariantState::from_two_j(two_j, f).unwrap();
        let numeric = numeric_discord(&s.build_product_basis()).unwrap();
        assert!((numeric - discord).abs() < 1e-10, "2j={two_j} F={f}: {numeric}");
    }
}

#[test]
fn large_spin_singlet_like_point() {
    let s = Su2InvariantState::from_two_j(49, 1.0).unwrap();
    assert!((mutual_information(&s) - 1.029146345659517).abs() < 1e-12);
    assert!((negativity(&s.build_product_basis()) - 0.02).abs() < 1e-12);
}
