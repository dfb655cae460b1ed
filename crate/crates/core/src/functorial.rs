//! Functor-level structure induced by a regular multiplier bimonoid: the
//! right multiplier bicomonad on `G = (-).A`, the left multiplier bimonad on
//! `T = A.(-)`, their two-sided (multiplier) refinements, and the induced
//! (co)module structures — all evaluated exactly on a finite probe set.
//!
//! The left-handed structures are checked by instantiating the generic
//! right-handed checkers over the reverse context, so each functor diagram
//! is transcribed exactly once. Probe tuples are enumerated up to a matrix
//! dimension guard; every entry names the tuple it evaluated.

use crate::context::{seeded_endomorphism, BraidedContext};
use crate::fusion::chain;
use crate::mbm::RegularMultiplierBimonoid;
use crate::morphism::Morphism;
use crate::object::GradedObject;
use crate::repcat::{RegComodule, RegModule};
use crate::report::CheckReport;

/// Probe objects for functor-level checks, a seed for probe morphisms, and
/// the dimension guard for enumerated tuples.
#[derive(Clone, Debug)]
pub struct ProbeSet {
    pub objects: Vec<GradedObject>,
    pub seed: u64,
    /// Tuples are checked only when the evaluated matrix dimension stays at
    /// or below this bound; reports name exactly the tuples checked.
    pub max_dim: usize,
}

impl ProbeSet {
    /// Default probes `{I, A, A.A}` with seed 0.
    pub fn default_for(r: &RegularMultiplierBimonoid) -> Self {
        let a2 = r.ctx.tensor_obj(&r.a, &r.a);
        ProbeSet {
            objects: vec![r.ctx.unit_object(), r.a.clone(), a2],
            seed: 0,
            max_dim: 1000,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Closure bundle for a right multiplier bicomonad `(G, g2, eps)` relative
/// to a horizontal tensor context. `g2(X, Y) : GX.GY -> G(GX.Y)` and
/// `eps(X) : GX -> X`.
pub struct BicomonadOps<'a> {
    pub ctx: BraidedContext,
    pub g_obj: &'a dyn Fn(&GradedObject) -> GradedObject,
    pub g_mor: &'a dyn Fn(&Morphism) -> Morphism,
    pub g2: &'a dyn Fn(&GradedObject, &GradedObject) -> Morphism,
    pub eps: &'a dyn Fn(&GradedObject) -> Morphism,
}

/// Closure bundle for a left multiplier bimonad `(T, t2, t0)` relative to a
/// horizontal tensor context. `t2(X, Y) : T(X.TY) -> TX.TY` and
/// `t0 : TI -> I`.
pub struct BimonadOps<'a> {
    pub ctx: BraidedContext,
    pub t_obj: &'a dyn Fn(&GradedObject) -> GradedObject,
    pub t_mor: &'a dyn Fn(&Morphism) -> Morphism,
    pub t2: &'a dyn Fn(&GradedObject, &GradedObject) -> Morphism,
    pub t0: Morphism,
}

/// The structures induced by a regular multiplier bimonoid on the functors
/// `G = (-).A` and `T = A.(-)` (tensoring in the ambient context's
/// underlying order).
pub struct Induced<'a> {
    pub r: &'a RegularMultiplierBimonoid,
}

impl<'a> Induced<'a> {
    pub fn new(r: &'a RegularMultiplierBimonoid) -> Self {
        Induced { r }
    }

    fn ctx(&self) -> &BraidedContext {
        &self.r.ctx
    }

    fn id(&self, x: &GradedObject) -> Morphism {
        self.ctx().identity(x)
    }

    pub fn g_obj(&self, x: &GradedObject) -> GradedObject {
        self.ctx().tensor_obj(x, &self.r.a)
    }

    pub fn g_mor(&self, f: &Morphism) -> Morphism {
        self.ctx().tensor_mor(f, &self.id(&self.r.a))
    }

    /// `eps(X) = 1_X . e : GX -> X`.
    pub fn eps(&self, x: &GradedObject) -> Morphism {
        self.ctx().tensor_mor(&self.id(x), &self.r.e)
    }

    /// `g2_check(X, Y) = (1.b_{A,Y}^{-1}.1)(1.1.t1)(1.b_{A,Y}.1)` on
    /// `X.A.Y.A`, the right-handed comultiplication `GX.GY -> G(GX.Y)`.
    pub fn g2_check(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        let ctx = self.ctx();
        let a = &self.r.a;
        let idx = self.id(x);
        let ida = self.id(a);
        let b = ctx.braiding(a, y);
        let binv = ctx.braiding_inv(a, y);
        chain(&[
            &ctx.tensor_mor(&idx, &ctx.tensor_mor(&binv, &ida)),
            &ctx.tensor_mor(&idx, &ctx.tensor_mor(&ctx.identity(y), &self.r.t1)),
            &ctx.tensor_mor(&idx, &ctx.tensor_mor(&b, &ida)),
        ])
    }

    /// `g2_hat(X, Y) = (1.1.t3)(1.1.b_{A,A})(1.b_{A,Y}.1)` on `X.A.Y.A`, the
    /// left-handed comultiplication `GX.GY -> G(X.GY)`.
    pub fn g2_hat(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        let ctx = self.ctx();
        let a = &self.r.a;
        let idx = self.id(x);
        let idy = self.id(y);
        let ida = self.id(a);
        chain(&[
            &ctx.tensor_mor(&ctx.tensor_mor(&idx, &idy), &self.r.t3),
            &ctx.tensor_mor(&ctx.tensor_mor(&idx, &idy), &ctx.braiding(a, a)),
            &ctx.tensor_mor(&idx, &ctx.tensor_mor(&ctx.braiding(a, y), &ida)),
        ])
    }

    /// The common diagonal `G2(X, Y) : GX.GY -> G(X.Y)` computed from the
    /// right-handed comultiplication.
    pub fn g2_diag_from_check(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        let inner = self
            .ctx()
            .tensor_mor(&self.eps(x), &self.ctx().identity(y));
        self.g_mor(&inner)
            .compose(&self.g2_check(x, y))
            .expect("shapes agree")
    }

    /// The common diagonal computed from the left-handed comultiplication.
    pub fn g2_diag_from_hat(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        let inner = self
            .ctx()
            .tensor_mor(&self.ctx().identity(x), &self.eps(y));
        self.g_mor(&inner)
            .compose(&self.g2_hat(x, y))
            .expect("shapes agree")
    }

    pub fn t_obj(&self, x: &GradedObject) -> GradedObject {
        self.ctx().tensor_obj(&self.r.a, x)
    }

    pub fn t_mor(&self, f: &Morphism) -> Morphism {
        self.ctx().tensor_mor(&self.id(&self.r.a), f)
    }

    /// `t0 = e : TI -> I`.
    pub fn t0(&self) -> Morphism {
        self.r.e.clone()
    }

    /// `t2_hat(X, Y) = (1.b_{A,X}.1)(t1.1.1)(1.b_{A,X}^{-1}.1)` on
    /// `A.X.A.Y`, the left-handed multiplication `T(X.TY) -> TX.TY`.
    pub fn t2_hat(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        let ctx = self.ctx();
        let a = &self.r.a;
        let ida = self.id(a);
        let idy = self.id(y);
        chain(&[
            &ctx.tensor_mor(&ctx.tensor_mor(&ida, &ctx.braiding(a, x)), &idy),
            &ctx.tensor_mor(&ctx.tensor_mor(&self.r.t1, &ctx.identity(x)), &idy),
            &ctx.tensor_mor(&ctx.tensor_mor(&ida, &ctx.braiding_inv(a, x)), &idy),
        ])
    }

    /// `t2_tick(X, Y) = (1.b_{A,X}.1)(t4.1.1)(b_{A,A}.1.1)` on `A.A.X.Y`,
    /// the right-handed multiplication `T(TX.Y) -> TX.TY`.
    pub fn t2_tick(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        let ctx = self.ctx();
        let a = &self.r.a;
        let ida = self.id(a);
        let idy = self.id(y);
        let idxy = ctx.tensor_mor(&ctx.identity(x), &idy);
        chain(&[
            &ctx.tensor_mor(&ctx.tensor_mor(&ida, &ctx.braiding(a, x)), &idy),
            &ctx.tensor_mor(&self.r.t4, &idxy),
            &ctx.tensor_mor(&ctx.braiding(a, a), &idxy),
        ])
    }

    /// `mu(X) = (t0.1) t2_hat(I, X) : T^2 X -> TX`.
    pub fn mu(&self, x: &GradedObject) -> Morphism {
        let ctx = self.ctx();
        ctx.tensor_mor(&self.t0(), &self.id(&self.t_obj(x)))
            .compose(&self.t2_hat(&ctx.unit_object(), x))
            .expect("shapes agree")
    }

    /// `mu` computed from the right-handed multiplication,
    /// `(1.t0) t2_tick(X, I)`.
    pub fn mu_from_tick(&self, x: &GradedObject) -> Morphism {
        let ctx = self.ctx();
        ctx.tensor_mor(&self.id(&self.t_obj(x)), &self.t0())
            .compose(&self.t2_tick(x, &ctx.unit_object()))
            .expect("shapes agree")
    }
}

/// Both comultiplications at a probe pair together with the two evaluations
/// of the common diagonal.
pub struct G2Build {
    pub check_form: Morphism,
    pub hat_form: Morphism,
    pub diag_from_check: Morphism,
    pub diag_from_hat: Morphism,
}

pub fn build_g2s(r: &RegularMultiplierBimonoid, x: &GradedObject, y: &GradedObject) -> G2Build {
    let ind = Induced::new(r);
    G2Build {
        check_form: ind.g2_check(x, y),
        hat_form: ind.g2_hat(x, y),
        diag_from_check: ind.g2_diag_from_check(x, y),
        diag_from_hat: ind.g2_diag_from_hat(x, y),
    }
}

/// Both multiplications at a probe pair together with the two evaluations of
/// the multiplication `mu` on the first probe.
pub struct T2Build {
    pub hat_form: Morphism,
    pub tick_form: Morphism,
    pub mu_from_hat: Morphism,
    pub mu_from_tick: Morphism,
}

pub fn build_t2s(r: &RegularMultiplierBimonoid, x: &GradedObject, y: &GradedObject) -> T2Build {
    let ind = Induced::new(r);
    T2Build {
        hat_form: ind.t2_hat(x, y),
        tick_form: ind.t2_tick(x, y),
        mu_from_hat: ind.mu(x),
        mu_from_tick: ind.mu_from_tick(x),
    }
}

/// Probe morphisms for naturality checks: one seeded endomorphism per probe
/// object plus the structure morphisms `e`, `m`, and `b_{A,A}`.
fn probe_morphisms(r: &RegularMultiplierBimonoid, probes: &ProbeSet) -> Vec<(String, Morphism)> {
    let ctx = &r.ctx;
    let mut out = Vec::new();
    for (i, x) in probes.objects.iter().enumerate() {
        out.push((
            format!("seeded endo of probe {i}"),
            seeded_endomorphism(ctx, x, probes.seed.wrapping_add(i as u64)),
        ));
    }
    out.push(("counit e".into(), r.e.clone()));
    out.push(("multiplication m".into(), r.m()));
    out.push(("braiding b_{A,A}".into(), ctx.braiding(&r.a, &r.a)));
    out
}

/// The two defining diagrams of a right multiplier bicomonad on every probe
/// tuple within the dimension guard, plus naturality of `g2` against probe
/// morphisms.
pub fn check_right_bicomonad(
    prefix: &str,
    ops: &BicomonadOps,
    r: &RegularMultiplierBimonoid,
    probes: &ProbeSet,
    rep: &mut CheckReport,
) {
    let ctx = &ops.ctx;
    for (xi, x) in probes.objects.iter().enumerate() {
        for (yi, y) in probes.objects.iter().enumerate() {
            let gx = (ops.g_obj)(x);
            let gy = (ops.g_obj)(y);
            if gx.dim() * gy.dim() > probes.max_dim {
                continue;
            }
            // Counit: eps_{GX.Y} g2 = 1_{GX} . eps_Y.
            let w = ctx.tensor_obj(&gx, y);
            rep.push_equality(
                &format!("{prefix}counitality at probes ({xi}, {yi})"),
                "bicomonad counit law",
                &(ops.eps)(&w).compose(&(ops.g2)(x, y)).expect("shapes agree"),
                &ctx.tensor_mor(&ctx.identity(&gx), &(ops.eps)(y)),
            );
            for (zi, z) in probes.objects.iter().enumerate() {
                let gz = (ops.g_obj)(z);
                if gx.dim() * gy.dim() * gz.dim() > probes.max_dim {
                    continue;
                }
                // Coassociativity pentagon.
                let gxy = ctx.tensor_obj(&gx, y);
                let lhs = (ops.g2)(&gxy, z)
                    .compose(&ctx.tensor_mor(&(ops.g2)(x, y), &ctx.identity(&gz)))
                    .expect("shapes agree");
                let inner = ctx.tensor_mor(&(ops.g2)(x, y), &ctx.identity(z));
                let rhs = chain(&[
                    &(ops.g_mor)(&inner),
                    &(ops.g2)(x, &ctx.tensor_obj(&gy, z)),
                    &ctx.tensor_mor(&ctx.identity(&gx), &(ops.g2)(y, z)),
                ]);
                rep.push_equality(
                    &format!("{prefix}coassociativity at probes ({xi}, {yi}, {zi})"),
                    "bicomonad coassociativity",
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    // Naturality of g2 in both arguments against probe morphisms.
    for (fi, (fname, f)) in probe_morphisms(r, probes).iter().enumerate() {
        for (gi, (gname, g)) in probe_morphisms(r, probes).iter().enumerate() {
            let gdomf = (ops.g_obj)(&f.dom);
            let gdomg = (ops.g_obj)(&g.dom);
            if gdomf.dim() * gdomg.dim() > probes.max_dim {
                continue;
            }
            let lhs = (ops.g2)(&f.cod, &g.cod)
                .compose(&ctx.tensor_mor(&(ops.g_mor)(f), &(ops.g_mor)(g)))
                .expect("shapes agree");
            let inner = ctx.tensor_mor(&(ops.g_mor)(f), g);
            let rhs = (ops.g_mor)(&inner)
                .compose(&(ops.g2)(&f.dom, &g.dom))
                .expect("shapes agree");
            rep.push_equality(
                &format!("{prefix}naturality against morphisms ({fi}: {fname}, {gi}: {gname})"),
                "naturality of the comultiplication",
                &lhs,
                &rhs,
            );
        }
    }
}

/// The two defining diagrams of a left multiplier bimonad on every probe
/// tuple within the dimension guard.
pub fn check_left_bimonad(
    prefix: &str,
    ops: &BimonadOps,
    probes: &ProbeSet,
    rep: &mut CheckReport,
) {
    let ctx = &ops.ctx;
    let unit = ctx.unit_object();
    for (xi, x) in probes.objects.iter().enumerate() {
        let tx = (ops.t_obj)(x);
        // Counit: (1.t0) t2(X, I) = T(1_X . t0).
        rep.push_equality(
            &format!("{prefix}counitality at probe {xi}"),
            "bimonad counit law",
            &ctx.tensor_mor(&ctx.identity(&tx), &ops.t0)
                .compose(&(ops.t2)(x, &unit))
                .expect("shapes agree"),
            &(ops.t_mor)(&ctx.tensor_mor(&ctx.identity(x), &ops.t0)),
        );
        for (yi, y) in probes.objects.iter().enumerate() {
            let ty = (ops.t_obj)(y);
            for (zi, z) in probes.objects.iter().enumerate() {
                let tz = (ops.t_obj)(z);
                if tx.dim() * ty.dim() * tz.dim() > probes.max_dim {
                    continue;
                }
                // Associativity pentagon.
                let lhs = chain(&[
                    &ctx.tensor_mor(&(ops.t2)(x, y), &ctx.identity(&tz)),
                    &(ops.t2)(&ctx.tensor_obj(x, &ty), z),
                    &(ops.t_mor)(&ctx.tensor_mor(&ctx.identity(x), &(ops.t2)(y, z))),
                ]);
                let rhs = ctx
                    .tensor_mor(&ctx.identity(&tx), &(ops.t2)(y, z))
                    .compose(&(ops.t2)(x, &ctx.tensor_obj(y, &tz)))
                    .expect("shapes agree");
                rep.push_equality(
                    &format!("{prefix}associativity at probes ({xi}, {yi}, {zi})"),
                    "bimonad associativity",
                    &lhs,
                    &rhs,
                );
            }
        }
    }
}

/// The full multiplier bicomonad check: right-handed structure ambient,
/// left-handed structure over the reverse context, agreement of the two
/// common diagonals, and the mixed compatibility pentagon.
pub fn check_multiplier_bicomonad(
    r: &RegularMultiplierBimonoid,
    probes: &ProbeSet,
) -> CheckReport {
    let mut rep = CheckReport::new();
    let ind = Induced::new(r);
    let g_obj = |x: &GradedObject| ind.g_obj(x);
    let g_mor = |f: &Morphism| ind.g_mor(f);
    let eps = |x: &GradedObject| ind.eps(x);
    let g2c = |x: &GradedObject, y: &GradedObject| ind.g2_check(x, y);
    let ops = BicomonadOps {
        ctx: r.ctx.clone(),
        g_obj: &g_obj,
        g_mor: &g_mor,
        g2: &g2c,
        eps: &eps,
    };
    check_right_bicomonad("right-handed ", &ops, r, probes, &mut rep);
    // The left-handed comultiplication is a right-handed one over the
    // reverse context, with its arguments flipped.
    let g2h_rev = |x: &GradedObject, y: &GradedObject| ind.g2_hat(y, x);
    let ops_rev = BicomonadOps {
        ctx: r.ctx.rev(),
        g_obj: &g_obj,
        g_mor: &g_mor,
        g2: &g2h_rev,
        eps: &eps,
    };
    check_right_bicomonad("left-handed (rev) ", &ops_rev, r, probes, &mut rep);
    let ctx = &r.ctx;
    for (xi, x) in probes.objects.iter().enumerate() {
        for (yi, y) in probes.objects.iter().enumerate() {
            if ind.g_obj(x).dim() * ind.g_obj(y).dim() > probes.max_dim {
                continue;
            }
            rep.push_equality(
                &format!("common diagonal at probes ({xi}, {yi})"),
                "two evaluations of G2 agree",
                &ind.g2_diag_from_check(x, y),
                &ind.g2_diag_from_hat(x, y),
            );
            for (zi, z) in probes.objects.iter().enumerate() {
                let gx = ind.g_obj(x);
                let gy = ind.g_obj(y);
                let gz = ind.g_obj(z);
                if gx.dim() * gy.dim() * gz.dim() > probes.max_dim {
                    continue;
                }
                // G2_{X, GY.Z} (1.g2_check) = G2_{X.GY, Z} (g2_hat.1).
                let lhs = ind
                    .g2_diag_from_check(x, &ctx.tensor_obj(&gy, z))
                    .compose(&ctx.tensor_mor(&ctx.identity(&gx), &ind.g2_check(y, z)))
                    .expect("shapes agree");
                let rhs = ind
                    .g2_diag_from_check(&ctx.tensor_obj(x, &gy), z)
                    .compose(&ctx.tensor_mor(&ind.g2_hat(x, y), &ctx.identity(&gz)))
                    .expect("shapes agree");
                rep.push_equality(
                    &format!("mixed compatibility at probes ({xi}, {yi}, {zi})"),
                    "bicomonad mixed compatibility",
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    rep
}

/// The full multiplier bimonad check: left-handed structure ambient,
/// right-handed structure over the reverse context, the common
/// multiplication `mu`, the mixed compatibility pentagon, the three-fold
/// description of the canonical epimorphism, and associativity of `mu`.
pub fn check_multiplier_bimonad(r: &RegularMultiplierBimonoid, probes: &ProbeSet) -> CheckReport {
    let mut rep = CheckReport::new();
    let ind = Induced::new(r);
    let t_obj = |x: &GradedObject| ind.t_obj(x);
    let t_mor = |f: &Morphism| ind.t_mor(f);
    let t2h = |x: &GradedObject, y: &GradedObject| ind.t2_hat(x, y);
    let ops = BimonadOps {
        ctx: r.ctx.clone(),
        t_obj: &t_obj,
        t_mor: &t_mor,
        t2: &t2h,
        t0: ind.t0(),
    };
    check_left_bimonad("left-handed ", &ops, probes, &mut rep);
    let t2t_rev = |x: &GradedObject, y: &GradedObject| ind.t2_tick(y, x);
    let ops_rev = BimonadOps {
        ctx: r.ctx.rev(),
        t_obj: &t_obj,
        t_mor: &t_mor,
        t2: &t2t_rev,
        t0: ind.t0(),
    };
    check_left_bimonad("right-handed (rev) ", &ops_rev, probes, &mut rep);
    let ctx = &r.ctx;
    for (xi, x) in probes.objects.iter().enumerate() {
        rep.push_equality(
            &format!("common multiplication at probe {xi}"),
            "two evaluations of mu agree",
            &ind.mu(x),
            &ind.mu_from_tick(x),
        );
        // mu mu_{TX} = mu T(mu) on T^3 X.
        let tx = ind.t_obj(x);
        if ind.t_obj(&ind.t_obj(&tx)).dim() <= probes.max_dim {
            rep.push_equality(
                &format!("multiplication associativity at probe {xi}"),
                "associativity of mu",
                &ind.mu(x).compose(&ind.mu(&tx)).expect("shapes agree"),
                &ind.mu(x)
                    .compose(&ind.t_mor(&ind.mu(x)))
                    .expect("shapes agree"),
            );
        }
        for (yi, y) in probes.objects.iter().enumerate() {
            let ty = ind.t_obj(y);
            // Hexagon: three descriptions of the same epi on T(TX.TY).
            let dom_dim = ind.t_obj(&ctx.tensor_obj(&tx, &ty)).dim();
            if dom_dim <= probes.max_dim {
                let id_tx = ctx.identity(&tx);
                let id_ty = ctx.identity(&ty);
                let p1 = chain(&[
                    &ctx.tensor_mor(&ctx.tensor_mor(&ind.t0(), &id_tx), &id_ty),
                    &ctx.tensor_mor(&ind.t2_hat(&ctx.unit_object(), x), &id_ty),
                    &ind.t2_hat(&tx, y),
                ]);
                let p2 = chain(&[
                    &ctx.tensor_mor(&id_tx, &ctx.tensor_mor(&id_ty, &ind.t0())),
                    &ctx.tensor_mor(&id_tx, &ind.t2_tick(y, &ctx.unit_object())),
                    &ind.t2_tick(x, &ty),
                ]);
                let p3 = chain(&[
                    &ctx.tensor_mor(&id_tx, &ctx.tensor_mor(&ind.t0(), &id_ty)),
                    &ctx.tensor_mor(&id_tx, &ind.t2_hat(&ctx.unit_object(), y)),
                    &ind.t2_tick(x, &ty),
                ]);
                rep.push_equality(
                    &format!("canonical epi descriptions i/ii at probes ({xi}, {yi})"),
                    "three descriptions of the canonical epi",
                    &p1,
                    &p2,
                );
                rep.push_equality(
                    &format!("canonical epi descriptions ii/iii at probes ({xi}, {yi})"),
                    "three descriptions of the canonical epi",
                    &p2,
                    &p3,
                );
            }
            for (zi, z) in probes.objects.iter().enumerate() {
                let tz = ind.t_obj(z);
                if tx.dim() * ty.dim() * tz.dim() > probes.max_dim {
                    continue;
                }
                // (1.t2_hat) t2_tick_{X, Y.TZ} = (t2_tick.1) t2_hat_{TX.Y, Z}.
                let lhs = ctx
                    .tensor_mor(&ctx.identity(&tx), &ind.t2_hat(y, z))
                    .compose(&ind.t2_tick(x, &ctx.tensor_obj(y, &tz)))
                    .expect("shapes agree");
                let rhs = ctx
                    .tensor_mor(&ind.t2_tick(x, y), &ctx.identity(&tz))
                    .compose(&ind.t2_hat(&ctx.tensor_obj(&tx, y), z))
                    .expect("shapes agree");
                rep.push_equality(
                    &format!("mixed compatibility at probes ({xi}, {yi}, {zi})"),
                    "bimonad mixed compatibility",
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    rep
}

/// The coactions a comodule induces at a probe:
/// `v_check(X) = (b_{V,X}^{-1}.1)(1.v1)(b_{V,X}.1) : V.GX -> G(V.X)` and
/// `v_hat(X) = (1.v3)(1.b_{A,V}) : GX.V -> G(X.V)`.
pub fn induce_g_comodule(c: &RegComodule, x: &GradedObject) -> (Morphism, Morphism) {
    let r = &c.reg;
    let ctx = &r.ctx;
    let id_a = r.id_a();
    let id_x = ctx.identity(x);
    let v_check = chain(&[
        &ctx.tensor_mor(&ctx.braiding_inv(&c.v_obj, x), &id_a),
        &ctx.tensor_mor(&id_x, &c.v1),
        &ctx.tensor_mor(&ctx.braiding(&c.v_obj, x), &id_a),
    ]);
    let v_hat = chain(&[
        &ctx.tensor_mor(&id_x, &c.v3),
        &ctx.tensor_mor(&id_x, &ctx.braiding(&r.a, &c.v_obj)),
    ]);
    (v_check, v_hat)
}

/// Comodule laws over a right multiplier bicomonad for a coaction component
/// `v(Y) : V.GY -> G(V.Y)` (relative to the ops' context).
fn check_right_bicomonad_comodule(
    prefix: &str,
    ops: &BicomonadOps,
    v_obj: &GradedObject,
    v: &dyn Fn(&GradedObject) -> Morphism,
    probes: &ProbeSet,
    rep: &mut CheckReport,
) {
    let ctx = &ops.ctx;
    let id_v = ctx.identity(v_obj);
    for (yi, y) in probes.objects.iter().enumerate() {
        let gy = (ops.g_obj)(y);
        if v_obj.dim() * gy.dim() > probes.max_dim {
            continue;
        }
        // Counit: eps_{V.Y} v = 1_V . eps_Y.
        rep.push_equality(
            &format!("{prefix}counitality at probe {yi}"),
            "comodule counit law",
            &(ops.eps)(&ctx.tensor_obj(v_obj, y))
                .compose(&v(y))
                .expect("shapes agree"),
            &ctx.tensor_mor(&id_v, &(ops.eps)(y)),
        );
        for (zi, z) in probes.objects.iter().enumerate() {
            let gz = (ops.g_obj)(z);
            if v_obj.dim() * gy.dim() * gz.dim() > probes.max_dim {
                continue;
            }
            // Coassociativity with the comultiplication.
            let inner = ctx.tensor_mor(&v(y), &ctx.identity(z));
            let lhs = chain(&[
                &(ops.g_mor)(&inner),
                &v(&ctx.tensor_obj(&gy, z)),
                &ctx.tensor_mor(&id_v, &(ops.g2)(y, z)),
            ]);
            let rhs = (ops.g2)(&ctx.tensor_obj(v_obj, y), z)
                .compose(&ctx.tensor_mor(&v(y), &ctx.identity(&gz)))
                .expect("shapes agree");
            rep.push_equality(
                &format!("{prefix}coassociativity at probes ({yi}, {zi})"),
                "comodule coassociativity",
                &lhs,
                &rhs,
            );
        }
    }
}

/// Check the induced coaction pair of a comodule against the multiplier
/// bicomonad: right-handed laws ambient, left-handed laws over the reverse
/// context, and the mixed compatibility square through the common diagonal.
pub fn check_induced_g_comodule(c: &RegComodule, probes: &ProbeSet) -> CheckReport {
    let mut rep = CheckReport::new();
    let r = &c.reg;
    let ind = Induced::new(r);
    let g_obj = |x: &GradedObject| ind.g_obj(x);
    let g_mor = |f: &Morphism| ind.g_mor(f);
    let eps = |x: &GradedObject| ind.eps(x);
    let g2c = |x: &GradedObject, y: &GradedObject| ind.g2_check(x, y);
    let v_check = |x: &GradedObject| induce_g_comodule(c, x).0;
    let ops = BicomonadOps {
        ctx: r.ctx.clone(),
        g_obj: &g_obj,
        g_mor: &g_mor,
        g2: &g2c,
        eps: &eps,
    };
    check_right_bicomonad_comodule("right-handed ", &ops, &c.v_obj, &v_check, probes, &mut rep);
    let g2h_rev = |x: &GradedObject, y: &GradedObject| ind.g2_hat(y, x);
    let v_hat_rev = |x: &GradedObject| induce_g_comodule(c, x).1;
    let ops_rev = BicomonadOps {
        ctx: r.ctx.rev(),
        g_obj: &g_obj,
        g_mor: &g_mor,
        g2: &g2h_rev,
        eps: &eps,
    };
    check_right_bicomonad_comodule(
        "left-handed (rev) ",
        &ops_rev,
        &c.v_obj,
        &v_hat_rev,
        probes,
        &mut rep,
    );
    let ctx = &r.ctx;
    for (xi, x) in probes.objects.iter().enumerate() {
        for (yi, y) in probes.objects.iter().enumerate() {
            let gx = ind.g_obj(x);
            let gy = ind.g_obj(y);
            if gx.dim() * c.v_obj.dim() * gy.dim() > probes.max_dim {
                continue;
            }
            // G2_{X, V.Y} (1.v_check) = G2_{X.V, Y} (v_hat.1).
            let (vc, vh) = (induce_g_comodule(c, y).0, induce_g_comodule(c, x).1);
            let lhs = ind
                .g2_diag_from_check(x, &ctx.tensor_obj(&c.v_obj, y))
                .compose(&ctx.tensor_mor(&ctx.identity(&gx), &vc))
                .expect("shapes agree");
            let rhs = ind
                .g2_diag_from_check(&ctx.tensor_obj(x, &c.v_obj), y)
                .compose(&ctx.tensor_mor(&vh, &ctx.identity(&gy)))
                .expect("shapes agree");
            rep.push_equality(
                &format!("mixed compatibility at probes ({xi}, {yi})"),
                "comodule mixed compatibility",
                &lhs,
                &rhs,
            );
        }
    }
    rep
}

/// The actions a module induces at a probe:
/// `q_hat(X) = (1.b_{Q,X})(q1.1)(1.b_{Q,X}^{-1}) : T(X.Q) -> TX.Q` and
/// `q_check(X) = (q4.1)(b_{A,Q}.1) : T(Q.X) -> Q.TX`.
pub fn induce_t_module(md: &RegModule, x: &GradedObject) -> (Morphism, Morphism) {
    let r = &md.reg;
    let ctx = &r.ctx;
    let id_a = r.id_a();
    let id_x = ctx.identity(x);
    let q_hat = chain(&[
        &ctx.tensor_mor(&id_a, &ctx.braiding(&md.q_obj, x)),
        &ctx.tensor_mor(&md.q1, &id_x),
        &ctx.tensor_mor(&id_a, &ctx.braiding_inv(&md.q_obj, x)),
    ]);
    let q_check = chain(&[
        &ctx.tensor_mor(&md.q4, &id_x),
        &ctx.tensor_mor(&ctx.braiding(&r.a, &md.q_obj), &id_x),
    ]);
    (q_hat, q_check)
}

/// Module laws over a left multiplier bimonad for an action component
/// `q(X) : T(X.Q) -> TX.Q` (relative to the ops' context), including the
/// split-epi law at the unit probe.
fn check_left_bimonad_module(
    prefix: &str,
    ops: &BimonadOps,
    q_obj: &GradedObject,
    q: &dyn Fn(&GradedObject) -> Morphism,
    probes: &ProbeSet,
    rep: &mut CheckReport,
) {
    let ctx = &ops.ctx;
    let unit = ctx.unit_object();
    rep.push_split_epi(
        &format!("{prefix}action split epi"),
        "(t0.1) q_I split epi",
        &ctx.tensor_mor(&ops.t0, &ctx.identity(q_obj))
            .compose(&q(&unit))
            .expect("shapes agree"),
    );
    for (xi, x) in probes.objects.iter().enumerate() {
        let tx = (ops.t_obj)(x);
        for (yi, y) in probes.objects.iter().enumerate() {
            let ty = (ops.t_obj)(y);
            if tx.dim() * ty.dim() * q_obj.dim() > probes.max_dim {
                continue;
            }
            // Associativity with the multiplication.
            let inner = ctx.tensor_mor(&ctx.identity(x), &q(y));
            let lhs = chain(&[
                &ctx.tensor_mor(&(ops.t2)(x, y), &ctx.identity(q_obj)),
                &q(&ctx.tensor_obj(x, &ty)),
                &(ops.t_mor)(&inner),
            ]);
            let rhs = ctx
                .tensor_mor(&ctx.identity(&tx), &q(y))
                .compose(&(ops.t2)(x, &ctx.tensor_obj(y, q_obj)))
                .expect("shapes agree");
            rep.push_equality(
                &format!("{prefix}associativity at probes ({xi}, {yi})"),
                "module associativity",
                &lhs,
                &rhs,
            );
        }
    }
}

/// Check the induced action pair of a module against the multiplier bimonad:
/// left-handed laws ambient, right-handed laws over the reverse context, the
/// two mixed compatibility squares, and agreement of the diagonals at the
/// unit probe.
pub fn check_induced_t_module(md: &RegModule, probes: &ProbeSet) -> CheckReport {
    let mut rep = CheckReport::new();
    let r = &md.reg;
    let ind = Induced::new(r);
    let t_obj = |x: &GradedObject| ind.t_obj(x);
    let t_mor = |f: &Morphism| ind.t_mor(f);
    let t2h = |x: &GradedObject, y: &GradedObject| ind.t2_hat(x, y);
    let q_hat = |x: &GradedObject| induce_t_module(md, x).0;
    let ops = BimonadOps {
        ctx: r.ctx.clone(),
        t_obj: &t_obj,
        t_mor: &t_mor,
        t2: &t2h,
        t0: ind.t0(),
    };
    check_left_bimonad_module("left-handed ", &ops, &md.q_obj, &q_hat, probes, &mut rep);
    let t2t_rev = |x: &GradedObject, y: &GradedObject| ind.t2_tick(y, x);
    let q_check_rev = |x: &GradedObject| induce_t_module(md, x).1;
    let ops_rev = BimonadOps {
        ctx: r.ctx.rev(),
        t_obj: &t_obj,
        t_mor: &t_mor,
        t2: &t2t_rev,
        t0: ind.t0(),
    };
    check_left_bimonad_module(
        "right-handed (rev) ",
        &ops_rev,
        &md.q_obj,
        &q_check_rev,
        probes,
        &mut rep,
    );
    let ctx = &r.ctx;
    let unit = ctx.unit_object();
    let id_q = ctx.identity(&md.q_obj);
    rep.push_equality(
        "common diagonal at the unit probe",
        "(t0.1) q_hat_I = (1.t0) q_check_I",
        &ctx.tensor_mor(&ind.t0(), &id_q)
            .compose(&induce_t_module(md, &unit).0)
            .expect("shapes agree"),
        &ctx.tensor_mor(&id_q, &ind.t0())
            .compose(&induce_t_module(md, &unit).1)
            .expect("shapes agree"),
    );
    for (xi, x) in probes.objects.iter().enumerate() {
        let tx = ind.t_obj(x);
        for (yi, y) in probes.objects.iter().enumerate() {
            let ty = ind.t_obj(y);
            if tx.dim() * ty.dim() * md.q_obj.dim() > probes.max_dim {
                continue;
            }
            // (t2_tick.1) q_hat_{TX.Y} = (1.q_hat) t2_tick_{X, Y.Q}.
            let lhs = ctx
                .tensor_mor(&ind.t2_tick(x, y), &id_q)
                .compose(&induce_t_module(md, &ctx.tensor_obj(&tx, y)).0)
                .expect("shapes agree");
            let rhs = ctx
                .tensor_mor(&ctx.identity(&tx), &induce_t_module(md, y).0)
                .compose(&ind.t2_tick(x, &ctx.tensor_obj(y, &md.q_obj)))
                .expect("shapes agree");
            rep.push_equality(
                &format!("mixed compatibility (hat) at probes ({xi}, {yi})"),
                "module mixed compatibility",
                &lhs,
                &rhs,
            );
            // (1.t2_hat) q_check_{X.TY} = (q_check.1) t2_hat_{Q.X, Y}.
            let lhs = ctx
                .tensor_mor(&id_q, &ind.t2_hat(x, y))
                .compose(&induce_t_module(md, &ctx.tensor_obj(x, &ty)).1)
                .expect("shapes agree");
            let rhs = ctx
                .tensor_mor(&induce_t_module(md, x).1, &ctx.identity(&ty))
                .compose(&ind.t2_hat(&ctx.tensor_obj(&md.q_obj, x), y))
                .expect("shapes agree");
            rep.push_equality(
                &format!("mixed compatibility (check) at probes ({xi}, {yi})"),
                "module mixed compatibility",
                &lhs,
                &rhs,
            );
        }
    }
    rep
}
