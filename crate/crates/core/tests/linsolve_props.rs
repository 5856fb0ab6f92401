use proptest::prelude::*;
use superbialg::linsolve::*;
use superbialg::Rational;

fn arb_matrix() -> impl Strategy<Value = (Vec<SparseVec>, usize)> {
    (1usize..=8, 1usize..=10).prop_flat_map(|(m, n)| {
        let entry = prop_oneof![
            3 => Just(Rational::zero()),
            1 => (-4i64..=4, 1i64..=3).prop_map(|(a, b)| Rational::new(a, b)),
        ];
        (prop::collection::vec(prop::collection::vec(entry, n), m), Just(n))
            .prop_map(|(rows, n)| (rows.iter().map(|r| from_dense(r)).collect(), n))
    })
}

proptest! {
    #[test]
    fn kernel_vectors_are_solutions((rows, n) in arb_matrix()) {
        let k = kernel(&rows, n);
        for v in &k {
            for r in &rows {
                prop_assert!(dot(r, v).is_zero());
            }
        }
        prop_assert_eq!(k.len() + rank(&rows, n), n);
    }

    #[test]
    fn kernel_basis_is_reduced((rows, n) in arb_matrix()) {
        let k = kernel(&rows, n);
        let pivots: Vec<usize> = k.iter().map(|v| v[0].0).collect();
        for (i, v) in k.iter().enumerate() {
            prop_assert!(v[0].1.is_one());
            for (j, w) in k.iter().enumerate() {
                if i != j {
                    prop_assert!(w.iter().all(|(c, _)| *c != pivots[i]));
                }
            }
        }
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn span_is_order_independent((rows, n) in arb_matrix()) {
        let mut rev = rows.clone();
        rev.reverse();
        prop_assert_eq!(canonical_basis(rows.clone(), n), canonical_basis(rev, n));
    }

    #[test]
    fn membership((rows, n) in arb_matrix(), pick in 0usize..8, scale in 1i64..5) {
        let mut ech = Echelon::new(n);
        for r in &rows {
            ech.insert(r.clone());
        }
        let r = &rows[pick % rows.len()];
        let scaled: SparseVec = r.iter().map(|(c, x)| (*c, x * &Rational::from_int(scale))).collect();
        prop_assert!(ech.contains(scaled));
        prop_assert_eq!(ech.insert(r.clone()), false);
    }
}
