//! Constructions of (regular) multiplier bimonoids from concrete input:
//! linear spans of finite semigroups, braided bimonoids, and duals of finite
//! monoids — plus the catalog of small instances used throughout the tests
//! and the golden files.

use crate::context::BraidedContext;
use crate::error::Error;
use crate::fusion::chain;
use crate::grade::GradeGroup;
use crate::mbm::RegularMultiplierBimonoid;
use crate::morphism::Morphism;
use crate::object::GradedObject;
use crate::report::CheckReport;
use crate::scalar::FieldSpec;

/// A finite semigroup given by its multiplication table.
#[derive(Clone, Debug, PartialEq)]
pub struct SemigroupTable {
    pub labels: Vec<String>,
    /// Row-major: `table[i * n + j]` is the index of the product `i . j`.
    pub table: Vec<usize>,
}

impl SemigroupTable {
    pub fn new(labels: Vec<String>, table: Vec<usize>) -> Result<Self, Error> {
        let n = labels.len();
        if table.len() != n * n || table.iter().any(|&k| k >= n) {
            return Err(Error::Shape(format!(
                "table must hold {} indices below {n}",
                n * n
            )));
        }
        let s = SemigroupTable { labels, table };
        s.validate_associativity()?;
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    pub fn validate_associativity(&self) -> Result<(), Error> {
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.product(self.product(i, j), k) != self.product(i, self.product(j, k)) {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Index of the two-sided unit, if any.
    pub fn unit(&self) -> Option<usize> {
        (0..self.order())
            .find(|&u| (0..self.order()).all(|i| self.product(u, i) == i && self.product(i, u) == i))
    }

    // -- named small tables ---------------------------------------------

    /// `a . b = a`.
    pub fn left_zero(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("s{i}")).collect();
        let table = (0..n).flat_map(|i| std::iter::repeat(i).take(n)).collect();
        SemigroupTable { labels, table }
    }

    /// `a . b = b`.
    pub fn right_zero(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("s{i}")).collect();
        let table = (0..n).flat_map(|_| 0..n).collect();
        SemigroupTable { labels, table }
    }

    /// `a . b = z` for an absorbing element `z` (index 0).
    pub fn zero(n: usize) -> Self {
        let mut labels: Vec<String> = vec!["z".into()];
        labels.extend((1..n).map(|i| format!("s{i}")));
        SemigroupTable {
            labels,
            table: vec![0; n * n],
        }
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic_group(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
        SemigroupTable { labels, table }
    }

    /// The two-element meet semilattice / order-2 monoid with an absorbing
    /// element: unit `top`, absorbing `bot`.
    pub fn semilattice2() -> Self {
        SemigroupTable {
            labels: vec!["bot".into(), "top".into()],
            // bot.bot = bot, bot.top = bot, top.bot = bot, top.top = top
            table: vec![0, 0, 0, 1],
        }
    }
}

/// The linear span of a finite semigroup, carrying the regular multiplier
/// bimonoid
///
/// ```text
/// t1: a.b |-> a.ab      t2: a.b |-> ab.b
/// t3: a.b |-> a.ba      t4: a.b |-> ba.b
/// ```
///
/// with the counit sending every basis element to 1. No bimonoid exists here
/// unless the semigroup is a monoid, which is the point of the construction.
pub fn from_semigroup(
    s: &SemigroupTable,
    field: FieldSpec,
) -> Result<RegularMultiplierBimonoid, Error> {
    s.validate_associativity()?;
    let ctx = BraidedContext::vec(field);
    let labels: Vec<&str> = s.labels.iter().map(String::as_str).collect();
    let a = GradedObject::ungraded(ctx.group().clone(), &labels)?;
    let a2 = ctx.tensor_obj(&a, &a);
    let n = s.order();
    let one = field.one();
    let basis_map = |img: &dyn Fn(usize, usize) -> (usize, usize)| {
        Morphism::from_basis_map(a2.clone(), a2.clone(), field, |col| {
            let (x, y) = (col / n, col % n);
            let (i, j) = img(x, y);
            (i * n + j, one.clone())
        })
    };
    let t1 = basis_map(&|x, y| (x, s.product(x, y)));
    let t2 = basis_map(&|x, y| (s.product(x, y), y));
    let t3 = basis_map(&|x, y| (x, s.product(y, x)));
    let t4 = basis_map(&|x, y| (s.product(y, x), y));
    let unit_obj = ctx.unit_object();
    let mut e = Morphism::zero(a.clone(), unit_obj, field);
    for j in 0..n {
        e.set(0, j, one.clone());
    }
    RegularMultiplierBimonoid::new(ctx, a, t1, t2, t3, t4, e)
}

/// A candidate bimonoid in a braided context: multiplication `m`, unit `u`,
/// comultiplication `d`, counit `e`.
#[derive(Clone, Debug)]
pub struct Bimonoid {
    pub ctx: BraidedContext,
    pub a: GradedObject,
    pub m: Morphism,
    pub u: Morphism,
    pub d: Morphism,
    pub e: Morphism,
}

impl Bimonoid {
    pub fn new(
        ctx: BraidedContext,
        a: GradedObject,
        m: Morphism,
        u: Morphism,
        d: Morphism,
        e: Morphism,
    ) -> Result<Self, Error> {
        let a2 = ctx.tensor_obj(&a, &a);
        let unit = ctx.unit_object();
        let shapes = [
            (&m, &a2, &a, "m: A.A -> A"),
            (&u, &unit, &a, "u: I -> A"),
            (&d, &a, &a2, "d: A -> A.A"),
            (&e, &a, &unit, "e: A -> I"),
        ];
        for (f, dom, cod, what) in shapes {
            if &f.dom != dom || &f.cod != cod {
                return Err(Error::Shape(format!(
                    "{what} expected, got {} -> {}",
                    f.dom, f.cod
                )));
            }
        }
        Ok(Bimonoid { ctx, a, m, u, d, e })
    }
}

/// The bimonoid laws: (co)associativity, (co)units, and multiplicativity of
/// `d` and `e` with respect to the braided product on `A.A`.
pub fn check_bimonoid(bi: &Bimonoid) -> CheckReport {
    let mut rep = CheckReport::new();
    let ctx = &bi.ctx;
    let id = ctx.identity(&bi.a);
    rep.push_equality(
        "associativity",
        "m(m.1) = m(1.m)",
        &bi.m.compose(&ctx.tensor_mor(&bi.m, &id)).expect("shapes agree"),
        &bi.m.compose(&ctx.tensor_mor(&id, &bi.m)).expect("shapes agree"),
    );
    rep.push_equality(
        "left unit",
        "m(u.1) = 1",
        &bi.m.compose(&ctx.tensor_mor(&bi.u, &id)).expect("shapes agree"),
        &id,
    );
    rep.push_equality(
        "right unit",
        "m(1.u) = 1",
        &bi.m.compose(&ctx.tensor_mor(&id, &bi.u)).expect("shapes agree"),
        &id,
    );
    rep.push_equality(
        "coassociativity",
        "(d.1)d = (1.d)d",
        &ctx.tensor_mor(&bi.d, &id).compose(&bi.d).expect("shapes agree"),
        &ctx.tensor_mor(&id, &bi.d).compose(&bi.d).expect("shapes agree"),
    );
    rep.push_equality(
        "left counit",
        "(e.1)d = 1",
        &ctx.tensor_mor(&bi.e, &id).compose(&bi.d).expect("shapes agree"),
        &id,
    );
    rep.push_equality(
        "right counit",
        "(1.e)d = 1",
        &ctx.tensor_mor(&id, &bi.e).compose(&bi.d).expect("shapes agree"),
        &id,
    );
    // d and e are algebra maps for the braided product on A.A.
    let b = ctx.braiding(&bi.a, &bi.a);
    let braided_product = chain(&[
        &ctx.tensor_mor(&bi.m, &bi.m),
        &ctx.tensor_mor(&id, &ctx.tensor_mor(&b, &id)),
        &ctx.tensor_mor(&bi.d, &bi.d),
    ]);
    rep.push_equality(
        "comultiplication multiplicative",
        "d m = (m.m)(1.b.1)(d.d)",
        &bi.d.compose(&bi.m).expect("shapes agree"),
        &braided_product,
    );
    rep.push_equality(
        "counit multiplicative",
        "e m = e.e",
        &bi.e.compose(&bi.m).expect("shapes agree"),
        &ctx.tensor_mor(&bi.e, &bi.e),
    );
    rep
}

/// The regular multiplier bimonoid induced by a bimonoid:
///
/// ```text
/// t1 = (1.m)(d.1)                 t2 = (m.1)(1.d)
/// t3 = (1.m)(1.b^{-1})(d.1)       t4 = (m.1)(b^{-1}.1)(1.d)
/// ```
///
/// Refuses input that fails [`check_bimonoid`].
pub fn from_bimonoid(bi: &Bimonoid) -> Result<RegularMultiplierBimonoid, Error> {
    let rep = check_bimonoid(bi);
    if !rep.overall() {
        let failed = rep
            .failed_entries()
            .map(|e| e.name.clone())
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::Precondition(format!(
            "bimonoid axioms fail: {failed}"
        )));
    }
    let ctx = &bi.ctx;
    let id = ctx.identity(&bi.a);
    let binv = ctx.braiding_inv(&bi.a, &bi.a);
    let t1 = chain(&[&ctx.tensor_mor(&id, &bi.m), &ctx.tensor_mor(&bi.d, &id)]);
    let t2 = chain(&[&ctx.tensor_mor(&bi.m, &id), &ctx.tensor_mor(&id, &bi.d)]);
    let t3 = chain(&[
        &ctx.tensor_mor(&id, &bi.m),
        &ctx.tensor_mor(&id, &binv),
        &ctx.tensor_mor(&bi.d, &id),
    ]);
    let t4 = chain(&[
        &ctx.tensor_mor(&bi.m, &id),
        &ctx.tensor_mor(&binv, &id),
        &ctx.tensor_mor(&id, &bi.d),
    ]);
    RegularMultiplierBimonoid::new(
        ctx.clone(),
        bi.a.clone(),
        t1,
        t2,
        t3,
        t4,
        bi.e.clone(),
    )
}

/// The span of a finite monoid as a bimonoid: group-like comultiplication
/// `d(a) = a.a` and counit `e = 1` on every basis element.
pub fn span_of_monoid(s: &SemigroupTable, field: FieldSpec) -> Result<Bimonoid, Error> {
    s.validate_associativity()?;
    let u_idx = s.unit().ok_or(Error::NoUnit)?;
    let ctx = BraidedContext::vec(field);
    let labels: Vec<&str> = s.labels.iter().map(String::as_str).collect();
    let a = GradedObject::ungraded(ctx.group().clone(), &labels)?;
    let a2 = ctx.tensor_obj(&a, &a);
    let unit_obj = ctx.unit_object();
    let n = s.order();
    let one = field.one();
    let m = Morphism::from_basis_map(a2.clone(), a.clone(), field, |col| {
        (s.product(col / n, col % n), one.clone())
    });
    let mut u = Morphism::zero(unit_obj.clone(), a.clone(), field);
    u.set(u_idx, 0, one.clone());
    let d = Morphism::from_basis_map(a.clone(), a2, field, |j| (j * n + j, one.clone()));
    let mut e = Morphism::zero(a.clone(), unit_obj, field);
    for j in 0..n {
        e.set(0, j, one.clone());
    }
    Bimonoid::new(ctx, a, m, u, d, e)
}

/// The dual of a finite monoid as a bimonoid: basis of delta functionals,
/// pointwise multiplication, convolution comultiplication
/// `d(delta_g) = sum_{hk = g} delta_h . delta_k`, counit evaluation at the
/// unit.
pub fn dual_of_finite_monoid(s: &SemigroupTable, field: FieldSpec) -> Result<Bimonoid, Error> {
    s.validate_associativity()?;
    let u_idx = s.unit().ok_or(Error::NoUnit)?;
    let ctx = BraidedContext::vec(field);
    let labels: Vec<String> = s.labels.iter().map(|l| format!("{l}*")).collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let a = GradedObject::ungraded(ctx.group().clone(), &label_refs)?;
    let a2 = ctx.tensor_obj(&a, &a);
    let unit_obj = ctx.unit_object();
    let n = s.order();
    let one = field.one();
    let mut m = Morphism::zero(a2.clone(), a.clone(), field);
    for g in 0..n {
        m.set(g, g * n + g, one.clone());
    }
    let mut u = Morphism::zero(unit_obj.clone(), a.clone(), field);
    for g in 0..n {
        u.set(g, 0, one.clone());
    }
    let mut d = Morphism::zero(a.clone(), a2, field);
    for h in 0..n {
        for k in 0..n {
            d.set(h * n + k, s.product(h, k), one.clone());
        }
    }
    let mut e = Morphism::zero(a.clone(), unit_obj, field);
    e.set(0, u_idx, one.clone());
    Bimonoid::new(ctx, a, m, u, d, e)
}

/// The exterior line in super vector spaces: basis `{1, x}` with `|x|` odd,
/// `x^2 = 0`, primitive comultiplication `d(x) = x.1 + 1.x`. A bimonoid only
/// because the braiding carries the sign `chi(1,1) = -1`; requires
/// characteristic different from 2.
pub fn exterior_line(field: FieldSpec) -> Result<Bimonoid, Error> {
    let group = GradeGroup::super_z2(field)?;
    let ctx = BraidedContext::base(group.clone());
    let a = GradedObject::from_atoms(group, &[("1", vec![0]), ("x", vec![1])])?;
    let a2 = ctx.tensor_obj(&a, &a);
    let unit_obj = ctx.unit_object();
    // Basis order of A.A: (1,1), (1,x), (x,1), (x,x).
    let m = Morphism::from_int_rows(
        a2.clone(),
        a.clone(),
        field,
        &[&[1, 0, 0, 0], &[0, 1, 1, 0]],
    )?;
    let u = Morphism::from_int_rows(unit_obj.clone(), a.clone(), field, &[&[1], &[0]])?;
    let d = Morphism::from_int_rows(
        a.clone(),
        a2,
        field,
        &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]],
    )?;
    let e = Morphism::from_int_rows(a.clone(), unit_obj, field, &[&[1, 0]])?;
    Bimonoid::new(ctx, a, m, u, d, e)
}

/// The named catalog of small instances: six semigroup spans, two monoid
/// spans, three finite-monoid duals, and the exterior line. Everything is
/// constructed from its defining data, never hard-coded matrices.
pub fn catalog(field: FieldSpec) -> Result<Vec<(String, RegularMultiplierBimonoid)>, Error> {
    let mut out = Vec::new();
    let semigroups = [
        ("semigroup-left-zero-2", SemigroupTable::left_zero(2)),
        ("semigroup-right-zero-2", SemigroupTable::right_zero(2)),
        ("semigroup-zero-3", SemigroupTable::zero(3)),
        ("semigroup-z2", SemigroupTable::cyclic_group(2)),
        ("semigroup-z3", SemigroupTable::cyclic_group(3)),
        ("semigroup-semilattice-2", SemigroupTable::semilattice2()),
    ];
    for (name, s) in semigroups {
        out.push((name.to_string(), from_semigroup(&s, field)?));
    }
    out.push((
        "bimonoid-z2".into(),
        from_bimonoid(&span_of_monoid(&SemigroupTable::cyclic_group(2), field)?)?,
    ));
    out.push((
        "bimonoid-z3".into(),
        from_bimonoid(&span_of_monoid(&SemigroupTable::cyclic_group(3), field)?)?,
    ));
    out.push((
        "dual-z2".into(),
        from_bimonoid(&dual_of_finite_monoid(&SemigroupTable::cyclic_group(2), field)?)?,
    ));
    out.push((
        "dual-z3".into(),
        from_bimonoid(&dual_of_finite_monoid(&SemigroupTable::cyclic_group(3), field)?)?,
    ));
    out.push((
        "dual-monoid-abs-2".into(),
        from_bimonoid(&dual_of_finite_monoid(&SemigroupTable::semilattice2(), field)?)?,
    ));
    out.push((
        "exterior-line".into(),
        from_bimonoid(&exterior_line(field)?)?,
    ));
    Ok(out)
}

/// Look up one catalog instance by name.
pub fn catalog_instance(name: &str, field: FieldSpec) -> Result<RegularMultiplierBimonoid, Error> {
    catalog(field)?
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r)
        .ok_or_else(|| Error::Precondition(format!("no catalog instance named `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mbm::{check_nondegenerate, check_regular};

    #[test]
    fn left_zero_span_matches_hand_computed_matrices() {
        let f = FieldSpec::Rational;
        let r = from_semigroup(&SemigroupTable::left_zero(2), f).unwrap();
        // t1: a.b |-> a.ab with ab = a; columns (s0,s0),(s0,s1),(s1,s0),(s1,s1).
        let a2 = r.t1.dom.clone();
        let t1 = Morphism::from_int_rows(
            a2.clone(),
            a2.clone(),
            f,
            &[
                &[1, 1, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 1, 1],
            ],
        )
        .unwrap();
        assert_eq!(r.t1, t1);
        // t2 and t3 are the identity for a left-zero semigroup.
        let id = Morphism::identity(&a2, f);
        assert_eq!(r.t2, id);
        assert_eq!(r.t3, id);
        // t4: a.b |-> ba.b = b.b.
        let t4 = Morphism::from_int_rows(
            a2.clone(),
            a2,
            f,
            &[
                &[1, 0, 1, 0],
                &[0, 0, 0, 0],
                &[0, 0, 0, 0],
                &[0, 1, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(r.t4, t4);
        // m = (e.1)t1 is the left-projection table matrix.
        let m = Morphism::from_int_rows(
            r.m().dom.clone(),
            r.a.clone(),
            f,
            &[&[1, 1, 0, 0], &[0, 0, 1, 1]],
        )
        .unwrap();
        assert_eq!(r.m(), m);
    }

    #[test]
    fn catalog_instances_all_pass_check_regular() {
        for (name, r) in catalog(FieldSpec::Rational).unwrap() {
            let rep = check_regular(&r);
            assert!(
                rep.overall(),
                "{name} failed: {:?}",
                rep.failed_entries().map(|e| &e.name).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn nonassociative_table_is_rejected_with_indices() {
        // 2-element "subtraction-like" magma is not associative.
        let err = SemigroupTable::new(
            vec!["a".into(), "b".into()],
            vec![0, 1, 1, 1],
        );
        // a.(a.b)=b vs (a.a).b: table 0,1/1,1: (0.0).1=0.1=1; 0.(0.1)=0.1=1 ok...
        // use a genuinely non-associative table instead: x.y = [1,0;0,0]
        let err2 = SemigroupTable::new(vec!["a".into(), "b".into()], vec![1, 0, 0, 0]);
        assert!(err.is_ok() || err.is_err()); // shape is fine either way
        assert!(matches!(err2, Err(Error::NotAssociative(_, _, _))));
    }

    #[test]
    fn exterior_line_is_a_bimonoid_only_with_the_sign() {
        let f = FieldSpec::Rational;
        let bi = exterior_line(f).unwrap();
        assert!(check_bimonoid(&bi).overall());
        // The same data over the trivial braiding fails multiplicativity of d.
        let ctx = BraidedContext::vec(f);
        let a = GradedObject::ungraded(ctx.group().clone(), &["1", "x"]).unwrap();
        let a2 = ctx.tensor_obj(&a, &a);
        let unit_obj = ctx.unit_object();
        let flat = Bimonoid::new(
            ctx,
            a.clone(),
            Morphism::from_int_rows(a2.clone(), a.clone(), f, &[&[1, 0, 0, 0], &[0, 1, 1, 0]])
                .unwrap(),
            Morphism::from_int_rows(unit_obj.clone(), a.clone(), f, &[&[1], &[0]]).unwrap(),
            Morphism::from_int_rows(a.clone(), a2, f, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]])
                .unwrap(),
            Morphism::from_int_rows(a, unit_obj, f, &[&[1, 0]]).unwrap(),
        )
        .unwrap();
        let rep = check_bimonoid(&flat);
        assert!(!rep.overall());
        assert!(rep
            .failed_entries()
            .any(|e| e.name == "comultiplication multiplicative"));
        assert!(matches!(from_bimonoid(&flat), Err(Error::Precondition(_))));
    }

    #[test]
    fn nondegeneracy_flags_match_expectations() {
        let f = FieldSpec::Rational;
        let cases = [
            ("semigroup-left-zero-2", (true, false)),
            ("semigroup-right-zero-2", (false, true)),
            ("semigroup-zero-3", (false, false)),
            ("bimonoid-z2", (true, true)),
            ("dual-z3", (true, true)),
            ("exterior-line", (true, true)),
        ];
        for (name, (left, right)) in cases {
            let r = catalog_instance(name, f).unwrap();
            let nd = check_nondegenerate(&r.ctx, &r.m()).unwrap();
            assert_eq!((nd.left, nd.right), (left, right), "{name}");
        }
    }

    #[test]
    fn dual_z2_comultiplication_is_convolution() {
        let f = FieldSpec::Rational;
        let bi = dual_of_finite_monoid(&SemigroupTable::cyclic_group(2), f).unwrap();
        // d(delta_{g0}) = d0.d0 + d1.d1 (solutions of h + k = 0 in Z_2).
        assert_eq!(bi.d.column(0), vec![f.one(), f.zero(), f.zero(), f.one()]);
        assert_eq!(bi.d.column(1), vec![f.zero(), f.one(), f.one(), f.zero()]);
        assert!(check_bimonoid(&bi).overall());
    }
}
