//! Multiplier bimonoids and regular multiplier bimonoids.
//!
//! A multiplier bimonoid on a carrier `A` is a pair of counital fusion
//! morphisms — `t1` in the ambient context and `t2` in its reverse — sharing
//! a counit `e`, such that the mixing square commutes and both induce the
//! same multiplication `(e.1)t1 = (1.e)t2`. A regular multiplier bimonoid
//! extends the pair by `(t3, t4)` forming a multiplier bimonoid in the mirror
//! context, subject to the exchange axioms (A), (B), (A rev), (B rev) and the
//! twisted-multiplication axiom (C).

use crate::context::BraidedContext;
use crate::error::Error;
use crate::fusion::{chain, check_fusion, CounitalFusion};
use crate::linalg;
use crate::morphism::Morphism;
use crate::object::GradedObject;
use crate::report::{CheckReport, EntryData};
use crate::scalar::Scalar;

/// A candidate multiplier bimonoid `(t1, t2, e)`.
#[derive(Clone, Debug)]
pub struct MultiplierBimonoid {
    pub ctx: BraidedContext,
    pub a: GradedObject,
    pub t1: Morphism,
    pub t2: Morphism,
    pub e: Morphism,
}

/// A candidate regular multiplier bimonoid `(t1, t2, t3, t4, e)`.
#[derive(Clone, Debug)]
pub struct RegularMultiplierBimonoid {
    pub ctx: BraidedContext,
    pub a: GradedObject,
    pub t1: Morphism,
    pub t2: Morphism,
    pub t3: Morphism,
    pub t4: Morphism,
    pub e: Morphism,
}

/// Addressable constituent morphisms, for the mutation harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    T1,
    T2,
    T3,
    T4,
    E,
}

impl Slot {
    pub const ALL: [Slot; 5] = [Slot::T1, Slot::T2, Slot::T3, Slot::T4, Slot::E];

    pub fn name(&self) -> &'static str {
        match self {
            Slot::T1 => "t1",
            Slot::T2 => "t2",
            Slot::T3 => "t3",
            Slot::T4 => "t4",
            Slot::E => "e",
        }
    }
}

impl MultiplierBimonoid {
    pub fn new(
        ctx: BraidedContext,
        a: GradedObject,
        t1: Morphism,
        t2: Morphism,
        e: Morphism,
    ) -> Result<Self, Error> {
        // Shape validation via the fusion constructors (rev tensor of A with
        // itself is the same object, so one shape check covers both).
        CounitalFusion::new(ctx.clone(), a.clone(), t1.clone(), e.clone())?;
        CounitalFusion::new(ctx.rev(), a.clone(), t2.clone(), e.clone())?;
        Ok(MultiplierBimonoid { ctx, a, t1, t2, e })
    }

    pub fn fusion1(&self) -> CounitalFusion {
        CounitalFusion {
            ctx: self.ctx.clone(),
            a: self.a.clone(),
            t: self.t1.clone(),
            e: self.e.clone(),
        }
    }

    pub fn fusion2(&self) -> CounitalFusion {
        CounitalFusion {
            ctx: self.ctx.rev(),
            a: self.a.clone(),
            t: self.t2.clone(),
            e: self.e.clone(),
        }
    }

    pub fn id_a(&self) -> Morphism {
        self.ctx.identity(&self.a)
    }

    /// The common multiplication `m = (e.1)t1`.
    pub fn m(&self) -> Morphism {
        self.ctx
            .tensor_mor(&self.e, &self.id_a())
            .compose(&self.t1)
            .expect("shapes agree")
    }
}

/// All defining diagrams of a multiplier bimonoid: fusion and counitality of
/// `t1` (ambient) and `t2` (reverse), the mixing square, and agreement of the
/// two induced multiplications.
pub fn check_mbm(mb: &MultiplierBimonoid) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.merge_prefixed("t1 ", check_fusion(&mb.fusion1()));
    rep.merge_prefixed("t2 (rev) ", check_fusion(&mb.fusion2()));
    let id = mb.id_a();
    let one_t1 = mb.ctx.tensor_mor(&id, &mb.t1);
    let t2_one = mb.ctx.tensor_mor(&mb.t2, &id);
    rep.push_equality(
        "mixing square",
        "mixing square (1.t1)(t2.1) = (t2.1)(1.t1)",
        &chain(&[&one_t1, &t2_one]),
        &chain(&[&t2_one, &one_t1]),
    );
    rep.push_equality(
        "common multiplication",
        "(e.1)t1 = (1.e)t2",
        &mb.m(),
        &mb.ctx
            .tensor_mor(&mb.id_a(), &mb.e)
            .compose(&mb.t2)
            .expect("shapes agree"),
    );
    rep
}

/// The contracted mixing square `(m.1)(1.t1) = (1.m)(t2.1)`.
pub fn check_a12(mb: &MultiplierBimonoid) -> CheckReport {
    let mut rep = CheckReport::new();
    let id = mb.id_a();
    let m = mb.m();
    rep.push_equality(
        "contracted mixing square",
        "(m.1)(1.t1) = (1.m)(t2.1)",
        &chain(&[
            &mb.ctx.tensor_mor(&m, &id),
            &mb.ctx.tensor_mor(&id, &mb.t1),
        ]),
        &chain(&[
            &mb.ctx.tensor_mor(&id, &m),
            &mb.ctx.tensor_mor(&mb.t2, &id),
        ]),
    );
    rep
}

/// Non-degeneracy verdicts for a multiplication `m : A.A -> A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nondegeneracy {
    /// `a |-> m(a . -)` injective.
    pub left: bool,
    /// `a |-> m(- . a)` injective.
    pub right: bool,
}

/// Decide non-degeneracy of `m` by stacking the curried slices and computing
/// an exact rank: `m` is left non-degenerate when the maps `m(a . -)`, for
/// `a` running over a basis, are linearly independent, and symmetrically on
/// the right.
pub fn check_nondegenerate(ctx: &BraidedContext, m: &Morphism) -> Result<Nondegeneracy, Error> {
    let dim = m.cod.dim();
    if m.dom != ctx.tensor_obj(&m.cod, &m.cod) {
        return Err(Error::Shape(format!(
            "multiplication must map A.A -> A, got {} -> {}",
            m.dom, m.cod
        )));
    }
    let field = m.field;
    // Column a of the stacked matrix is the slice m(a . -) (resp. m(- . a))
    // flattened row-major.
    let mut left = vec![vec![field.zero(); dim]; dim * dim];
    let mut right = vec![vec![field.zero(); dim]; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            for a in 0..dim {
                left[i * dim + j][a] = m.get(i, a * dim + j).clone();
                right[i * dim + j][a] = m.get(i, j * dim + a).clone();
            }
        }
    }
    let rank_of = |mat: Vec<Vec<Scalar>>| {
        let mut mat = mat;
        linalg::rref_in_place(&mut mat, dim).len()
    };
    Ok(Nondegeneracy {
        left: rank_of(left) == dim,
        right: rank_of(right) == dim,
    })
}

impl RegularMultiplierBimonoid {
    pub fn new(
        ctx: BraidedContext,
        a: GradedObject,
        t1: Morphism,
        t2: Morphism,
        t3: Morphism,
        t4: Morphism,
        e: Morphism,
    ) -> Result<Self, Error> {
        MultiplierBimonoid::new(ctx.clone(), a.clone(), t1.clone(), t2.clone(), e.clone())?;
        MultiplierBimonoid::new(ctx.bar(), a.clone(), t3.clone(), t4.clone(), e.clone())?;
        Ok(RegularMultiplierBimonoid {
            ctx,
            a,
            t1,
            t2,
            t3,
            t4,
            e,
        })
    }

    /// The underlying multiplier bimonoid `(t1, t2, e)`.
    pub fn pair12(&self) -> MultiplierBimonoid {
        MultiplierBimonoid {
            ctx: self.ctx.clone(),
            a: self.a.clone(),
            t1: self.t1.clone(),
            t2: self.t2.clone(),
            e: self.e.clone(),
        }
    }

    /// The mirror multiplier bimonoid `(t3, t4, e)` in the bar context.
    pub fn pair34(&self) -> MultiplierBimonoid {
        MultiplierBimonoid {
            ctx: self.ctx.bar(),
            a: self.a.clone(),
            t1: self.t3.clone(),
            t2: self.t4.clone(),
            e: self.e.clone(),
        }
    }

    pub fn id_a(&self) -> Morphism {
        self.ctx.identity(&self.a)
    }

    /// `m = (e.1)t1`.
    pub fn m(&self) -> Morphism {
        self.pair12().m()
    }

    /// The twisted multiplication `mbar = (e.1)t3 = m b^{-1}`.
    pub fn mbar(&self) -> Morphism {
        self.ctx
            .tensor_mor(&self.e, &self.id_a())
            .compose(&self.t3)
            .expect("shapes agree")
    }

    /// Replace one matrix entry of one constituent morphism by adding
    /// `delta`; no validation beyond bounds, so mutants can be checked.
    pub fn mutate(&self, slot: Slot, row: usize, col: usize, delta: &Scalar) -> Result<Self, Error> {
        let mut out = self.clone();
        let target = match slot {
            Slot::T1 => &mut out.t1,
            Slot::T2 => &mut out.t2,
            Slot::T3 => &mut out.t3,
            Slot::T4 => &mut out.t4,
            Slot::E => &mut out.e,
        };
        *target = target.mutate_entry(row, col, delta)?;
        Ok(out)
    }

    pub fn slot(&self, slot: Slot) -> &Morphism {
        match slot {
            Slot::T1 => &self.t1,
            Slot::T2 => &self.t2,
            Slot::T3 => &self.t3,
            Slot::T4 => &self.t4,
            Slot::E => &self.e,
        }
    }
}

/// All defining diagrams of a regular multiplier bimonoid: the two embedded
/// multiplier bimonoids and the five exchange axioms.
pub fn check_regular(r: &RegularMultiplierBimonoid) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.merge_prefixed("(t1,t2) ", check_mbm(&r.pair12()));
    rep.merge_prefixed("(t3,t4) bar ", check_mbm(&r.pair34()));
    let ctx = &r.ctx;
    let id = r.id_a();
    let m = r.m();
    let b = ctx.braiding(&r.a, &r.a);
    let one_m = ctx.tensor_mor(&id, &m);
    let m_one = ctx.tensor_mor(&m, &id);
    rep.push_equality(
        "axiom (A)",
        "axiom (A): (1.m)(t3.1)(b.1) = (1.m)(b.1)(1.t1)",
        &chain(&[
            &one_m,
            &ctx.tensor_mor(&r.t3, &id),
            &ctx.tensor_mor(&b, &id),
        ]),
        &chain(&[
            &one_m,
            &ctx.tensor_mor(&b, &id),
            &ctx.tensor_mor(&id, &r.t1),
        ]),
    );
    rep.push_equality(
        "axiom (B)",
        "axiom (B): (t4.1)(1.t1) = (1.t1)(t4.1)",
        &chain(&[
            &ctx.tensor_mor(&r.t4, &id),
            &ctx.tensor_mor(&id, &r.t1),
        ]),
        &chain(&[
            &ctx.tensor_mor(&id, &r.t1),
            &ctx.tensor_mor(&r.t4, &id),
        ]),
    );
    rep.push_equality(
        "axiom (A rev)",
        "axiom (A rev): (m.1)(1.t4)(1.b) = (m.1)(1.b)(t2.1)",
        &chain(&[
            &m_one,
            &ctx.tensor_mor(&id, &r.t4),
            &ctx.tensor_mor(&id, &b),
        ]),
        &chain(&[
            &m_one,
            &ctx.tensor_mor(&id, &b),
            &ctx.tensor_mor(&r.t2, &id),
        ]),
    );
    rep.push_equality(
        "axiom (B rev)",
        "axiom (B rev): (1.t3)(t2.1) = (t2.1)(1.t3)",
        &chain(&[
            &ctx.tensor_mor(&id, &r.t3),
            &ctx.tensor_mor(&r.t2, &id),
        ]),
        &chain(&[
            &ctx.tensor_mor(&r.t2, &id),
            &ctx.tensor_mor(&id, &r.t3),
        ]),
    );
    let binv = ctx.braiding_inv(&r.a, &r.a);
    rep.push_equality(
        "axiom (C)",
        "axiom (C): (e.1)t1 b^{-1} = (e.1)t3",
        &r.m().compose(&binv).expect("shapes agree"),
        &r.mbar(),
    );
    rep
}

/// The four symmetry images of a regular multiplier bimonoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `(t2, t1, t4, t3)` in the reverse context.
    Rev,
    /// `(t3, t4, t1, t2)` in the mirror context.
    Bar,
    /// `(t4, t3, t2, t1)` in the reversed mirror context.
    BarRev,
}

/// Transport a regular multiplier bimonoid along one of the three symmetries.
/// Applying `Rev` (or `Bar`) twice returns a tuple equal to the original over
/// an entrywise-equal context.
pub fn transform_regular(
    r: &RegularMultiplierBimonoid,
    t: Transform,
) -> RegularMultiplierBimonoid {
    let (ctx, t1, t2, t3, t4) = match t {
        Transform::Rev => (
            r.ctx.rev(),
            r.t2.clone(),
            r.t1.clone(),
            r.t4.clone(),
            r.t3.clone(),
        ),
        Transform::Bar => (
            r.ctx.bar(),
            r.t3.clone(),
            r.t4.clone(),
            r.t1.clone(),
            r.t2.clone(),
        ),
        Transform::BarRev => (
            r.ctx.bar().rev(),
            r.t4.clone(),
            r.t3.clone(),
            r.t2.clone(),
            r.t1.clone(),
        ),
    };
    RegularMultiplierBimonoid {
        ctx,
        a: r.a.clone(),
        t1,
        t2,
        t3,
        t4,
        e: r.e.clone(),
    }
}

/// Under non-degeneracy the multiplier bimonoid axioms collapse into two
/// equivalence classes. The check evaluates each member — fusion of `t1`,
/// fusion of `t2` in reverse; counitality on either side and `e m = e.e` —
/// and asserts the members of each class agree. Refuses degenerate input.
pub fn check_mbm_nondeg_equivalences(mb: &MultiplierBimonoid) -> Result<CheckReport, Error> {
    let nd = check_nondegenerate(&mb.ctx, &mb.m())?;
    if !nd.left || !nd.right {
        return Err(Error::Precondition(format!(
            "equivalence collapse needs non-degeneracy (left: {}, right: {})",
            nd.left, nd.right
        )));
    }
    let mut rep = CheckReport::new();
    let f1 = mb.fusion1();
    let f2 = mb.fusion2();
    let c1a = f1.fusion_lhs() == f1.fusion_rhs();
    let c1b = f2.fusion_lhs() == f2.fusion_rhs();
    rep.push_bool("class 1 member (i): fusion of t1", "fusion equation", c1a);
    rep.push_bool(
        "class 1 member (ii): fusion of t2 in rev",
        "fusion equation",
        c1b,
    );
    let id = mb.id_a();
    let one_e = mb.ctx.tensor_mor(&id, &mb.e);
    let e_one = mb.ctx.tensor_mor(&mb.e, &id);
    let c2a = one_e.compose(&mb.t1).expect("shapes agree") == one_e;
    let c2b = e_one.compose(&mb.t2).expect("shapes agree") == e_one;
    let c2c = mb.e.compose(&mb.m()).expect("shapes agree")
        == mb.ctx.tensor_mor(&mb.e, &mb.e);
    rep.push_bool(
        "class 2 member (i): (1.e)t1 = 1.e",
        "counitality",
        c2a,
    );
    rep.push_bool(
        "class 2 member (ii): (e.1)t2 = e.1",
        "counitality",
        c2b,
    );
    rep.push_bool("class 2 member (iii): e m = e.e", "e m = e.e", c2c);
    rep.push_bool(
        "class 1 members agree",
        "equivalence under non-degeneracy",
        c1a == c1b,
    );
    rep.push_bool(
        "class 2 members agree",
        "equivalence under non-degeneracy",
        c2a == c2b && c2b == c2c,
    );
    Ok(rep)
}

/// With `(t1, t2, e)` a multiplier bimonoid and `m` non-degenerate, the full
/// regular axiom set is equivalent to axioms (A) and (A rev) alone. The
/// report records the preconditions, the two axioms, the full check, and the
/// implication verdict.
pub fn check_regular_nondeg_sufficiency(
    r: &RegularMultiplierBimonoid,
) -> Result<CheckReport, Error> {
    let nd = check_nondegenerate(&r.ctx, &r.m())?;
    if !nd.left || !nd.right {
        return Err(Error::Precondition(
            "sufficiency statement needs a non-degenerate multiplication".into(),
        ));
    }
    let mut rep = CheckReport::new();
    let base = check_mbm(&r.pair12());
    rep.push_bool(
        "precondition: (t1,t2,e) is a multiplier bimonoid",
        "multiplier bimonoid axioms",
        base.overall(),
    );
    let full = check_regular(r);
    let a_pass = full
        .entries
        .iter()
        .find(|e| e.name == "axiom (A)")
        .expect("entry present")
        .pass;
    let arev_pass = full
        .entries
        .iter()
        .find(|e| e.name == "axiom (A rev)")
        .expect("entry present")
        .pass;
    rep.push_bool("axiom (A)", "axiom (A)", a_pass);
    rep.push_bool("axiom (A rev)", "axiom (A rev)", arev_pass);
    rep.push_bool(
        "full regular axiom set",
        "regular multiplier bimonoid axioms",
        full.overall(),
    );
    rep.push_bool(
        "sufficiency implication",
        "(A) and (A rev) imply regularity under non-degeneracy",
        !(base.overall() && a_pass && arev_pass) || full.overall(),
    );
    Ok(rep)
}

/// The two optional exchange diagrams that hold for every regular multiplier
/// bimonoid but are not part of the minimal axiom set. Informational only.
pub fn check_minimality_diagrams(r: &RegularMultiplierBimonoid) -> CheckReport {
    let mut rep = CheckReport::new();
    let ctx = &r.ctx;
    let id = r.id_a();
    let b = ctx.braiding(&r.a, &r.a);
    rep.push_equality_informational(
        "optional exchange (i)",
        "(t3.1)(1.t1)(b.1)(1.t1) = (1.t1)(t3.1)(b.1)",
        &chain(&[
            &ctx.tensor_mor(&r.t3, &id),
            &ctx.tensor_mor(&id, &r.t1),
            &ctx.tensor_mor(&b, &id),
            &ctx.tensor_mor(&id, &r.t1),
        ]),
        &chain(&[
            &ctx.tensor_mor(&id, &r.t1),
            &ctx.tensor_mor(&r.t3, &id),
            &ctx.tensor_mor(&b, &id),
        ]),
    );
    rep.push_equality_informational(
        "optional exchange (ii)",
        "(1.t1)(b.1)(1.t3)(1.b) = (b.1)(1.t3)(1.b)(t1.1)",
        &chain(&[
            &ctx.tensor_mor(&id, &r.t1),
            &ctx.tensor_mor(&b, &id),
            &ctx.tensor_mor(&id, &r.t3),
            &ctx.tensor_mor(&id, &b),
        ]),
        &chain(&[
            &ctx.tensor_mor(&b, &id),
            &ctx.tensor_mor(&id, &r.t3),
            &ctx.tensor_mor(&id, &b),
            &ctx.tensor_mor(&r.t1, &id),
        ]),
    );
    rep
}

/// Classical multiplier bialgebra axioms in plain vector spaces: the symmetric
/// swap specialization of the fusion pair, with surjectivity and
/// non-degeneracy side conditions. Refuses non-trivially graded contexts.
pub fn check_multiplier_bialgebra(mb: &MultiplierBimonoid) -> Result<CheckReport, Error> {
    if mb.ctx.group().order() != 1 {
        return Err(Error::Precondition(
            "multiplier bialgebra comparison needs a trivially graded context".into(),
        ));
    }
    let mut rep = CheckReport::new();
    let ctx = &mb.ctx;
    let id = mb.id_a();
    let m = mb.m();
    let b = ctx.braiding(&mb.a, &mb.a);
    let m_one = ctx.tensor_mor(&m, &id);
    let one_m = ctx.tensor_mor(&id, &m);
    let b_one = ctx.tensor_mor(&b, &id);
    let one_b = ctx.tensor_mor(&id, &b);
    let one_t1 = ctx.tensor_mor(&id, &mb.t1);
    let t2_one = ctx.tensor_mor(&mb.t2, &id);
    rep.push_equality(
        "(a) multiplicativity of t1",
        "t1(m.1) = (m.1)(b.1)(1.t1)(b.1)(1.t1)",
        &mb.t1.compose(&m_one).expect("shapes agree"),
        &chain(&[&m_one, &b_one, &one_t1, &b_one, &one_t1]),
    );
    rep.push_equality(
        "(a') multiplicativity of t2",
        "t2(1.m) = (1.m)(1.b)(t2.1)(1.b)(t2.1)",
        &mb.t2.compose(&one_m).expect("shapes agree"),
        &chain(&[&one_m, &one_b, &t2_one, &one_b, &t2_one]),
    );
    rep.push_split_epi(
        "(b) left leg surjective",
        "(m.1)(b.1)(1.t1) surjective",
        &chain(&[&m_one, &b_one, &one_t1]),
    );
    rep.push_split_epi(
        "(b) right leg surjective",
        "(1.m)(1.b)(t2.1) surjective",
        &chain(&[&one_m, &one_b, &t2_one]),
    );
    rep.push_equality(
        "(c) counit multiplicative",
        "e m = e.e",
        &mb.e.compose(&m).expect("shapes agree"),
        &ctx.tensor_mor(&mb.e, &mb.e),
    );
    rep.push_equality(
        "(d) mixing square",
        "(t2.1)(1.t1) = (1.t1)(t2.1)",
        &chain(&[&t2_one, &one_t1]),
        &chain(&[&one_t1, &t2_one]),
    );
    rep.push_equality(
        "(e) common multiplication",
        "(e.1)t1 = (1.e)t2",
        &m,
        &ctx.tensor_mor(&id, &mb.e)
            .compose(&mb.t2)
            .expect("shapes agree"),
    );
    rep.push_split_epi("m surjective", "m surjective", &m);
    let nd = check_nondegenerate(ctx, &m)?;
    let mut entry_rank = |name: &str, pass: bool| {
        rep.push_bool(name, "non-degeneracy of m", pass);
    };
    entry_rank("m left non-degenerate", nd.left);
    entry_rank("m right non-degenerate", nd.right);
    Ok(rep)
}

/// Rank evidence for the split-epi hypotheses used by the induced functor
/// corollaries: `e` split epi, and the two descriptions
/// `(m.1)(b^{-1}.1)(1.t1) = (1.m)(t4.1)` of the canonical epimorphism.
pub fn check_split_epi_hypotheses(r: &RegularMultiplierBimonoid) -> CheckReport {
    let mut rep = CheckReport::new();
    let ctx = &r.ctx;
    let id = r.id_a();
    let m = r.m();
    let binv = ctx.braiding_inv(&r.a, &r.a);
    rep.push_split_epi("counit split epi", "e split epi", &r.e);
    let lhs = chain(&[
        &ctx.tensor_mor(&m, &id),
        &ctx.tensor_mor(&binv, &id),
        &ctx.tensor_mor(&id, &r.t1),
    ]);
    let rhs = chain(&[
        &ctx.tensor_mor(&id, &m),
        &ctx.tensor_mor(&r.t4, &id),
    ]);
    rep.push_equality(
        "canonical epimorphism agreement",
        "(m.1)(b^{-1}.1)(1.t1) = (1.m)(t4.1)",
        &lhs,
        &rhs,
    );
    rep.push_split_epi(
        "canonical epimorphism split epi",
        "(m.1)(b^{-1}.1)(1.t1) split epi",
        &lhs,
    );
    rep
}

/// Convenience: the rank entry of a report by name, for tests.
pub fn entry_rank(rep: &CheckReport, name: &str) -> Option<usize> {
    rep.entries.iter().find(|e| e.name == name).and_then(|e| {
        match &e.data {
            Some(EntryData::SplitEpi { rank, .. }) | Some(EntryData::Rank { rank, .. }) => {
                Some(*rank)
            }
            None => None,
        }
    })
}
