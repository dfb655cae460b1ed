//! Property-based invariants for the exact linear algebra layer.

use mbm::context::BraidedContext;
use mbm::linalg;
use mbm::morphism::Morphism;
use mbm::object::GradedObject;
use mbm::scalar::FieldSpec;
use proptest::prelude::*;

fn ungraded(ctx: &BraidedContext, dim: usize) -> GradedObject {
    let labels: Vec<String> = (0..dim).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    GradedObject::ungraded(ctx.group().clone(), &refs).unwrap()
}

fn mat(ctx: &BraidedContext, rows: usize, cols: usize, entries: &[i64]) -> Morphism {
    let dom = ungraded(ctx, cols);
    let cod = ungraded(ctx, rows);
    let mut m = Morphism::zero(dom, cod, ctx.field());
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, ctx.field().from_i64(entries[i * cols + j]));
        }
    }
    m
}

fn dims_and_entries(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<i64>)> {
    (proptest::collection::vec(1usize..=3, n)).prop_flat_map(|dims| {
        let need = dims.windows(2).map(|w| w[0] * w[1]).sum::<usize>().max(1)
            + dims.iter().map(|d| d * d).sum::<usize>();
        (
            Just(dims),
            proptest::collection::vec(-3i64..=3, need..=need),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// (f1.g1)(f2.g2) = (f1 f2).(g1 g2) for the left-major Kronecker tensor.
    #[test]
    fn tensor_compose_interchange(
        (dims, entries) in dims_and_entries(6),
    ) {
        let ctx = BraidedContext::vec(FieldSpec::Rational);
        let (a, b, c, d, e, f) = (dims[0], dims[1], dims[2], dims[3], dims[4], dims[5]);
        let mut it = entries.into_iter().cycle();
        let mut take = |n: usize| -> Vec<i64> { (&mut it).take(n).collect() };
        let f2 = mat(&ctx, b, a, &take(a * b));
        let f1 = mat(&ctx, c, b, &take(b * c));
        let g2 = mat(&ctx, e, d, &take(d * e));
        let g1 = mat(&ctx, f, e, &take(e * f));
        let lhs = ctx.tensor_mor(&f1, &g1)
            .compose(&ctx.tensor_mor(&f2, &g2)).unwrap();
        let rhs = ctx.tensor_mor(
            &f1.compose(&f2).unwrap(),
            &g1.compose(&g2).unwrap(),
        );
        prop_assert_eq!(lhs.to_string_rows(), rhs.to_string_rows());
    }

    /// Tensor entries follow the left-major index convention.
    #[test]
    fn tensor_entry_convention(
        fe in proptest::collection::vec(-3i64..=3, 6..=6),
        ge in proptest::collection::vec(-3i64..=3, 6..=6),
    ) {
        let ctx = BraidedContext::vec(FieldSpec::Rational);
        let f = mat(&ctx, 2, 3, &fe);
        let g = mat(&ctx, 3, 2, &ge);
        let t = ctx.tensor_mor(&f, &g);
        for i1 in 0..2 {
            for j1 in 0..3 {
                for i2 in 0..3 {
                    for j2 in 0..2 {
                        prop_assert_eq!(
                            t.get(i1 * 3 + i2, j1 * 2 + j2).clone(),
                            f.get(i1, j1).mul(g.get(i2, j2))
                        );
                    }
                }
            }
        }
    }

    /// Rank is bounded by both dimensions and unchanged by stacking a copy.
    #[test]
    fn rank_bounds_and_duplication(
        entries in proptest::collection::vec(-3i64..=3, 12..=12),
    ) {
        let ctx = BraidedContext::vec(FieldSpec::Prime(13));
        let m = mat(&ctx, 3, 4, &entries);
        let rank = linalg::rank(&m);
        prop_assert!(rank <= 3);
        let mut stacked = mat(&ctx, 3, 4, &entries);
        let doubled = {
            let mut rows = Vec::new();
            for i in 0..3 {
                rows.push((0..4).map(|j| m.get(i, j).clone()).collect::<Vec<_>>());
            }
            for i in 0..3 {
                rows.push((0..4).map(|j| stacked.get(i, j).clone()).collect::<Vec<_>>());
            }
            rows
        };
        let mut mat2 = doubled;
        let pivots = linalg::rref_in_place(&mut mat2, 4);
        prop_assert_eq!(pivots.len(), rank);
        let _ = &mut stacked;
    }

    /// Canonical scalar strings round-trip through parsing.
    #[test]
    fn scalar_strings_round_trip(p in -40i64..=40, q in 1i64..=12) {
        let field = FieldSpec::Rational;
        let s = field.from_i64(p).div(&field.from_i64(q)).unwrap();
        let text = s.to_string();
        prop_assert_eq!(field.parse_scalar(&text).unwrap(), s);
        if let Some((_, den)) = text.split_once('/') {
            // Reduced, positive denominator, never 1.
            prop_assert!(den.parse::<i64>().unwrap() > 1);
        }
    }
}
