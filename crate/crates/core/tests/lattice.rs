use proptest::prelude::*;

use quotsing_core::arith::dot;
use quotsing_core::lattice_core::{hilbert_basis, quotient_lattice, ratvec};
use quotsing_core::{Cone, IntMatrix, Lattice, LatticePoint};

fn cone(rows: &[Vec<i64>]) -> Option<Cone> {
    let r = rows.first()?.len();
    let c = Cone::new(Lattice::standard(r), rows.iter().cloned().map(LatticePoint::new).collect()).ok()?;
    (c.is_full_dimensional() && c.is_pointed()).then_some(c)
}

fn vec_strategy(r: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, r)
}

#[test]
fn smith_form_reconstructs() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3).unwrap();
    let s = a.smith();
    let d = s.u.mul(&a).mul(&s.v);
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { s.diagonal[i] } else { 0 };
            assert_eq!(d[(i, j)], want);
        }
    }
    assert_eq!(s.diagonal, vec![2, 6, 12]);
}

#[test]
fn model_lattice_contains_the_weight_vector() {
    let l = Lattice::from_generators(&[
        ratvec(&[1, 0], 1),
        ratvec(&[0, 1], 1),
        ratvec(&[1, 2], 3),
    ])
    .unwrap();
    assert!(l.contains_reference(&ratvec(&[1, 2], 3)));
    assert!(l.contains_reference(&ratvec(&[2, 1], 3)));
    assert!(!l.contains_reference(&ratvec(&[1, 1], 3)));
    // the dual is {u : u_1 + 2 u_2 ≡ 0 mod 3}
    let m = l.dual();
    assert!(m.contains_reference(&ratvec(&[1, 1], 1)));
    assert!(m.contains_reference(&ratvec(&[3, 0], 1)));
    assert!(!m.contains_reference(&ratvec(&[1, 0], 1)));
}

#[test]
fn quotient_by_a_primitive_vector() {
    let l = Lattice::standard(3);
    let v = LatticePoint::new(vec![1, 1, 0]);
    let (q, p) = quotient_lattice(&l, &v).unwrap();
    assert_eq!(q.rank(), 2);
    assert!(p.apply(&v).is_zero());
    // surjective: the projection matrix has unit invariant factors
    assert!(p.matrix().smith().diagonal.iter().all(|&d| d == 1));
    assert!(quotient_lattice(&l, &LatticePoint::new(vec![2, 0, 0])).is_err());
}

#[test]
fn hilbert_basis_of_the_n1_monoid() {
    // M ∩ σ∨ for 1/3(1,2): u, v >= 0 with u + 2v ≡ 0 mod 3
    let l = Lattice::from_generators(&[ratvec(&[1, 0], 1), ratvec(&[0, 1], 1), ratvec(&[1, 2], 3)]).unwrap();
    let sigma = Cone::new(l.clone(), vec![
        l.from_reference(&ratvec(&[1, 0], 1)).unwrap(),
        l.from_reference(&ratvec(&[0, 1], 1)).unwrap(),
    ])
    .unwrap();
    let hb = hilbert_basis(&sigma.dual_cone().unwrap()).unwrap();
    let m = l.dual();
    let mut got: Vec<Vec<i64>> =
        hb.elements().iter().map(|e| m.to_reference(e).iter().map(|q| q.to_integer()).collect()).collect();
    got.sort();
    assert_eq!(got, vec![vec![0, 3], vec![1, 1], vec![3, 0]]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn biduality(gens in prop::collection::vec(vec_strategy(3), 3..6)) {
        if let Some(c) = cone(&gens) {
            let back = c.dual_cone().unwrap().dual_cone().unwrap();
            prop_assert_eq!(back.normalized(), c.normalized());
        }
    }

    #[test]
    fn dual_cone_pairs_nonnegatively(gens in prop::collection::vec(vec_strategy(3), 3..6)) {
        if let Some(c) = cone(&gens) {
            let d = c.dual_cone().unwrap();
            for u in d.generators() {
                for v in c.generators() {
                    prop_assert!(dot(u, v) >= 0);
                }
            }
        }
    }

    #[test]
    fn hilbert_basis_minimal_and_generating(gens in prop::collection::vec(vec_strategy(2), 2..=2)) {
        if let Some(c) = cone(&gens) {
            let hb = hilbert_basis(&c).unwrap();
            prop_assert!(hb.is_minimal());
            // the original generators are primitive monoid elements, so they
            // belong to every generating set
            for g in c.generators() {
                prop_assert!(hb.elements().contains(g));
            }
            let dual = c.dual_cone().unwrap();
            let grading: Vec<i64> = (0..2).map(|i| dual.generators().iter().map(|g| g[i]).sum()).collect();
            let top = hb.elements().iter().map(|h| dot(&grading, h)).max().unwrap();
            for p in hb.monoid_points_up_to(&grading, top + 4).unwrap() {
                prop_assert!(hb.decomposes(&p, &grading).unwrap());
            }
        }
    }

    #[test]
    fn quotient_kills_exactly_the_line(v in vec_strategy(4), w in vec_strategy(4)) {
        let v = LatticePoint::new(v);
        prop_assume!(!v.is_zero());
        let v = v.primitive();
        let (_, p) = quotient_lattice(&Lattice::standard(4), &v).unwrap();
        prop_assert!(p.apply(&v).is_zero());
        let w = LatticePoint::new(w);
        // w maps to zero iff it is a multiple of v
        let parallel = IntMatrix::from_rows(&[v.0.clone(), w.0.clone()], 4).unwrap().rank() < 2;
        prop_assert_eq!(p.apply(&w).is_zero(), parallel);
    }
}
