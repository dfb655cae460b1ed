//! Counital fusion morphisms and their (co)module theory.
//!
//! A counital fusion morphism on a carrier `A` in a braided context is an
//! endomorphism `t : A.A -> A.A` satisfying the fusion equation
//!
//! ```text
//! (t.1)(b^{-1}.1)(1.t)(b.1)(1.t) = (1.t)(t.1)      on A.A.A
//! ```
//!
//! together with counitality `(1.e)t = 1.e` for a counit `e : A -> I`.
//! Composition is written right to left: `f g` applies `g` first. Every
//! tensor and braiding is taken in the stored context, so the same value
//! describes a fusion morphism in the base, reverse, or mirror category.

use crate::context::BraidedContext;
use crate::error::Error;
use crate::morphism::Morphism;
use crate::object::GradedObject;
use crate::report::CheckReport;

/// A candidate counital fusion morphism. Construction checks shapes only;
/// the axioms are checked by [`check_fusion`].
#[derive(Clone, Debug)]
pub struct CounitalFusion {
    pub ctx: BraidedContext,
    pub a: GradedObject,
    pub t: Morphism,
    pub e: Morphism,
}

impl CounitalFusion {
    pub fn new(
        ctx: BraidedContext,
        a: GradedObject,
        t: Morphism,
        e: Morphism,
    ) -> Result<Self, Error> {
        let a2 = ctx.tensor_obj(&a, &a);
        if t.dom != a2 || t.cod != a2 {
            return Err(Error::Shape(format!(
                "t must be an endomorphism of A.A = {a2}, got {} -> {}",
                t.dom, t.cod
            )));
        }
        let unit = ctx.unit_object();
        if e.dom != a || e.cod != unit {
            return Err(Error::Shape(format!(
                "e must map A = {a} to the unit, got {} -> {}",
                e.dom, e.cod
            )));
        }
        Ok(CounitalFusion { ctx, a, t, e })
    }

    pub fn id_a(&self) -> Morphism {
        self.ctx.identity(&self.a)
    }

    /// `x . 1_A` in the context.
    pub fn r1(&self, x: &Morphism) -> Morphism {
        self.ctx.tensor_mor(x, &self.id_a())
    }

    /// `1_A . x` in the context.
    pub fn l1(&self, x: &Morphism) -> Morphism {
        self.ctx.tensor_mor(&self.id_a(), x)
    }

    /// The left side of the fusion equation,
    /// `(t.1)(b^{-1}.1)(1.t)(b.1)(1.t)` on `A.A.A`.
    pub fn fusion_lhs(&self) -> Morphism {
        let b = self.ctx.braiding(&self.a, &self.a);
        let binv = self.ctx.braiding_inv(&self.a, &self.a);
        chain(&[
            &self.r1(&self.t),
            &self.r1(&binv),
            &self.l1(&self.t),
            &self.r1(&b),
            &self.l1(&self.t),
        ])
    }

    /// The right side of the fusion equation, `(1.t)(t.1)`.
    pub fn fusion_rhs(&self) -> Morphism {
        chain(&[&self.l1(&self.t), &self.r1(&self.t)])
    }
}

/// Compose a chain written left to right in diagram order, i.e.
/// `chain([f, g, h]) = f . g . h` (apply `h` first).
pub fn chain(ms: &[&Morphism]) -> Morphism {
    let mut it = ms.iter().rev();
    let mut acc: Morphism = (*it.next().expect("nonempty chain")).clone();
    for m in it {
        acc = m.compose(&acc).expect("chain shapes agree");
    }
    acc
}

/// Fusion equation and counitality.
pub fn check_fusion(cf: &CounitalFusion) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.push_equality(
        "fusion equation",
        "fusion equation",
        &cf.fusion_lhs(),
        &cf.fusion_rhs(),
    );
    let one_e = cf.l1(&cf.e);
    rep.push_equality(
        "counitality",
        "counitality (1.e)t = 1.e",
        &one_e.compose(&cf.t).expect("shapes agree"),
        &one_e,
    );
    rep
}

/// The multiplication induced by a counital fusion morphism: `m = (e.1) t`.
pub fn derived_multiplication(cf: &CounitalFusion) -> Morphism {
    cf.ctx
        .tensor_mor(&cf.e, &cf.id_a())
        .compose(&cf.t)
        .expect("shapes agree")
}

/// The four derived laws of `m = (e.1)t` for a counital fusion morphism:
/// associativity, the two intertwining squares with `t`, and `e m = e.e`.
pub fn check_derived_properties(cf: &CounitalFusion) -> CheckReport {
    let mut rep = CheckReport::new();
    let m = derived_multiplication(cf);
    let b = cf.ctx.braiding(&cf.a, &cf.a);
    let binv = cf.ctx.braiding_inv(&cf.a, &cf.a);
    rep.push_equality(
        "derived multiplication associativity",
        "associativity of m = (e.1)t",
        &m.compose(&cf.r1(&m)).expect("shapes agree"),
        &m.compose(&cf.l1(&m)).expect("shapes agree"),
    );
    rep.push_equality(
        "derived intertwining (1.m)(t.1) = t(1.m)",
        "fusion/multiplication exchange",
        &chain(&[&cf.l1(&m), &cf.r1(&cf.t)]),
        &cf.t.compose(&cf.l1(&m)).expect("shapes agree"),
    );
    rep.push_equality(
        "derived intertwining (m.1)(b^{-1}.1)(1.t)(b.1)(1.t) = t(m.1)",
        "fusion/multiplication exchange",
        &chain(&[
            &cf.r1(&m),
            &cf.r1(&binv),
            &cf.l1(&cf.t),
            &cf.r1(&b),
            &cf.l1(&cf.t),
        ]),
        &cf.t.compose(&cf.r1(&m)).expect("shapes agree"),
    );
    rep.push_equality(
        "counit is multiplicative on m",
        "e m = e.e",
        &cf.e.compose(&m).expect("shapes agree"),
        &cf.ctx.tensor_mor(&cf.e, &cf.e),
    );
    rep
}

/// The short fusion equation: the fusion equation contracted with the counit
/// on the first strand, `(m.1)(b^{-1}.1)(1.t)(b.1)(1.t) = t(m.1)`. Evaluated
/// through the stored context, so rev-flavor fusion morphisms automatically
/// get the mirrored diagram.
pub fn check_short_fusion(cf: &CounitalFusion) -> CheckReport {
    let mut rep = CheckReport::new();
    let m = derived_multiplication(cf);
    let b = cf.ctx.braiding(&cf.a, &cf.a);
    let binv = cf.ctx.braiding_inv(&cf.a, &cf.a);
    rep.push_equality(
        "short fusion equation",
        "short fusion equation",
        &chain(&[
            &cf.r1(&m),
            &cf.r1(&binv),
            &cf.l1(&cf.t),
            &cf.r1(&b),
            &cf.l1(&cf.t),
        ]),
        &cf.t.compose(&cf.r1(&m)).expect("shapes agree"),
    );
    rep
}

/// Comodule law for `v : V.A -> V.A` over a counital fusion morphism:
///
/// ```text
/// (v.1)(b^{-1}.1)(1.v)(b.1)(1.t) = (1.t)(v.1)      on V.A.A
/// (1.e)v = 1.e
/// ```
///
/// with `b = b_{V,A}` of the context.
pub fn check_comodule_fusion(cf: &CounitalFusion, v_obj: &GradedObject, v: &Morphism) -> CheckReport {
    let mut rep = CheckReport::new();
    let ctx = &cf.ctx;
    let id_v = ctx.identity(v_obj);
    let id_a = cf.id_a();
    let b = ctx.braiding(v_obj, &cf.a);
    let binv = ctx.braiding_inv(v_obj, &cf.a);
    let lhs = chain(&[
        &ctx.tensor_mor(v, &id_a),
        &ctx.tensor_mor(&binv, &id_a),
        &ctx.tensor_mor(&id_a, v),
        &ctx.tensor_mor(&b, &id_a),
        &ctx.tensor_mor(&id_v, &cf.t),
    ]);
    let rhs = chain(&[&ctx.tensor_mor(&id_v, &cf.t), &ctx.tensor_mor(v, &id_a)]);
    rep.push_equality("comodule square", "fusion comodule law", &lhs, &rhs);
    let one_e = ctx.tensor_mor(&id_v, &cf.e);
    rep.push_equality(
        "comodule counitality",
        "counitality (1.e)v = 1.e",
        &one_e.compose(v).expect("shapes agree"),
        &one_e,
    );
    rep
}

/// Module law for `q : A.Q -> A.Q` over a counital fusion morphism:
///
/// ```text
/// (t.1)(b^{-1}.1)(1.q)(b.1)(1.q) = (1.q)(t.1)      on A.A.Q
/// ```
///
/// with `b = b_{A,A}`, together with `(e.1)q : A.Q -> Q` split epi.
pub fn check_module_fusion(cf: &CounitalFusion, q_obj: &GradedObject, q: &Morphism) -> CheckReport {
    let mut rep = CheckReport::new();
    let ctx = &cf.ctx;
    let id_q = ctx.identity(q_obj);
    let id_a = cf.id_a();
    let b = ctx.braiding(&cf.a, &cf.a);
    let binv = ctx.braiding_inv(&cf.a, &cf.a);
    let lhs = chain(&[
        &ctx.tensor_mor(&cf.t, &id_q),
        &ctx.tensor_mor(&binv, &id_q),
        &ctx.tensor_mor(&id_a, q),
        &ctx.tensor_mor(&b, &id_q),
        &ctx.tensor_mor(&id_a, q),
    ]);
    let rhs = chain(&[&ctx.tensor_mor(&id_a, q), &ctx.tensor_mor(&cf.t, &id_q)]);
    rep.push_equality("module square", "fusion module law", &lhs, &rhs);
    let action = ctx.tensor_mor(&cf.e, &id_q).compose(q).expect("shapes agree");
    rep.push_split_epi(
        "module action split epi",
        "(e.1)q split epi",
        &action,
    );
    rep
}

/// Tensor product of two comodules over the same counital fusion morphism:
/// on `V.W.A`,
///
/// ```text
/// (b_{V,W}^{-1}.1)(1.v)(b_{V,W}.1)(1.w)
/// ```
pub fn tensor_comodules_fusion(
    cf: &CounitalFusion,
    v_obj: &GradedObject,
    v: &Morphism,
    w_obj: &GradedObject,
    w: &Morphism,
) -> (GradedObject, Morphism) {
    let ctx = &cf.ctx;
    let id_a = cf.id_a();
    let b = ctx.braiding(v_obj, w_obj);
    let binv = ctx.braiding_inv(v_obj, w_obj);
    let id_v = ctx.identity(v_obj);
    let id_w = ctx.identity(w_obj);
    let composite = chain(&[
        &ctx.tensor_mor(&binv, &id_a),
        &ctx.tensor_mor(&id_w, v),
        &ctx.tensor_mor(&b, &id_a),
        &ctx.tensor_mor(&id_v, w),
    ]);
    (ctx.tensor_obj(v_obj, w_obj), composite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::scalar::FieldSpec;

    fn z2_span() -> crate::mbm::RegularMultiplierBimonoid {
        builders::catalog(FieldSpec::Rational)
            .unwrap()
            .into_iter()
            .find(|(name, _)| name == "bimonoid-z2")
            .unwrap()
            .1
    }

    #[test]
    fn z2_t1_is_a_counital_fusion_morphism() {
        let r = z2_span();
        let cf = CounitalFusion::new(r.ctx.clone(), r.a.clone(), r.t1.clone(), r.e.clone())
            .unwrap();
        assert!(check_fusion(&cf).overall());
        assert!(check_derived_properties(&cf).overall());
        assert!(check_short_fusion(&cf).overall());
    }

    #[test]
    fn derived_multiplication_recovers_group_product() {
        let r = z2_span();
        let cf = CounitalFusion::new(r.ctx.clone(), r.a.clone(), r.t1.clone(), r.e.clone())
            .unwrap();
        let m = derived_multiplication(&cf);
        assert_eq!(m, r.m());
    }

    #[test]
    fn regular_coaction_is_a_comodule() {
        let r = z2_span();
        let cf = CounitalFusion::new(r.ctx.clone(), r.a.clone(), r.t1.clone(), r.e.clone())
            .unwrap();
        // V = A with v = t1 coacts on itself.
        assert!(check_comodule_fusion(&cf, &r.a, &r.t1).overall());
        // A mutated coaction fails with a witness.
        let bad = r.t1.mutate_entry(0, 0, &FieldSpec::Rational.one()).unwrap();
        let rep = check_comodule_fusion(&cf, &r.a, &bad);
        assert!(!rep.overall());
        assert!(rep.failed_entries().next().unwrap().witness.is_some());
    }

    #[test]
    fn unit_module_passes_for_any_fusion_morphism() {
        let r = z2_span();
        let cf = CounitalFusion::new(r.ctx.clone(), r.a.clone(), r.t1.clone(), r.e.clone())
            .unwrap();
        let i = r.ctx.unit_object();
        let q = r.ctx.identity(&r.a); // A.I = A, so q is an endo of A
        let rep = check_module_fusion(&cf, &i, &q);
        assert!(rep.overall());
    }
}
