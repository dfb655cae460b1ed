//! Braided monoidal contexts over graded vector spaces.
//!
//! The base context tensors by Kronecker product and braids basis vectors by
//! `x (*) y  |->  chi(|x|, |y|) . y (*) x`. Two lazy adapters produce the
//! reverse context (tensor arguments flipped) and the mirror context
//! (braiding replaced by its inverse); adapters nest, and `bar . rev` agrees
//! entrywise with `rev . bar`. Every structure check routes its tensors and
//! braidings through a context value, so one transcription of each diagram
//! serves all four flavors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grade::GradeGroup;
use crate::morphism::Morphism;
use crate::object::GradedObject;
use crate::report::CheckReport;
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq)]
pub enum BraidedContext {
    Base { group: GradeGroup },
    Rev(Box<BraidedContext>),
    Bar(Box<BraidedContext>),
}

impl BraidedContext {
    pub fn base(group: GradeGroup) -> Self {
        BraidedContext::Base { group }
    }

    /// Plain vector spaces over `field`: trivial grading, symmetric swap.
    pub fn vec(field: FieldSpec) -> Self {
        BraidedContext::base(GradeGroup::trivial(field))
    }

    pub fn rev(&self) -> Self {
        BraidedContext::Rev(Box::new(self.clone()))
    }

    pub fn bar(&self) -> Self {
        BraidedContext::Bar(Box::new(self.clone()))
    }

    pub fn group(&self) -> &GradeGroup {
        match self {
            BraidedContext::Base { group } => group,
            BraidedContext::Rev(c) | BraidedContext::Bar(c) => c.group(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.group().field
    }

    pub fn unit_object(&self) -> GradedObject {
        GradedObject::unit(self.group().clone())
    }

    /// True when the underlying tensor order is flipped (odd number of `rev`
    /// wrappers).
    pub fn is_reversed(&self) -> bool {
        match self {
            BraidedContext::Base { .. } => false,
            BraidedContext::Rev(c) => !c.is_reversed(),
            BraidedContext::Bar(c) => c.is_reversed(),
        }
    }

    pub fn flavor(&self) -> String {
        match self {
            BraidedContext::Base { .. } => "base".into(),
            BraidedContext::Rev(c) => format!("rev({})", c.flavor()),
            BraidedContext::Bar(c) => format!("bar({})", c.flavor()),
        }
    }

    pub fn tensor_obj(&self, x: &GradedObject, y: &GradedObject) -> GradedObject {
        match self {
            BraidedContext::Base { .. } => x.tensor(y).expect("tensor over one grade group"),
            BraidedContext::Rev(c) => c.tensor_obj(y, x),
            BraidedContext::Bar(c) => c.tensor_obj(x, y),
        }
    }

    pub fn tensor_mor(&self, f: &Morphism, g: &Morphism) -> Morphism {
        match self {
            BraidedContext::Base { .. } => f.tensor(g).expect("tensor over one grade group"),
            BraidedContext::Rev(c) => c.tensor_mor(g, f),
            BraidedContext::Bar(c) => c.tensor_mor(f, g),
        }
    }

    /// The braiding `b_{X,Y} : X . Y -> Y . X` of this context.
    pub fn braiding(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        match self {
            BraidedContext::Base { group } => {
                let field = group.field;
                let dom = self.tensor_obj(x, y);
                let cod = self.tensor_obj(y, x);
                let mut m = Morphism::zero(dom, cod, field);
                for i in 0..x.dim() {
                    for j in 0..y.dim() {
                        let c = group.chi(&x.basis[i].grade, &y.basis[j].grade);
                        m.set(j * x.dim() + i, i * y.dim() + j, c);
                    }
                }
                m
            }
            BraidedContext::Rev(c) => c.braiding(y, x),
            BraidedContext::Bar(c) => c.braiding_inv(y, x),
        }
    }

    /// Inverse braiding `b_{X,Y}^{-1} : Y . X -> X . Y`.
    pub fn braiding_inv(&self, x: &GradedObject, y: &GradedObject) -> Morphism {
        match self {
            BraidedContext::Base { group } => {
                let field = group.field;
                let dom = self.tensor_obj(y, x);
                let cod = self.tensor_obj(x, y);
                let mut m = Morphism::zero(dom, cod, field);
                for i in 0..x.dim() {
                    for j in 0..y.dim() {
                        let c = group
                            .chi(&x.basis[i].grade, &y.basis[j].grade)
                            .inverse()
                            .expect("bicharacter values are invertible");
                        m.set(i * y.dim() + j, j * x.dim() + i, c);
                    }
                }
                m
            }
            BraidedContext::Rev(c) => c.braiding_inv(y, x),
            BraidedContext::Bar(c) => c.braiding(y, x),
        }
    }

    pub fn identity(&self, x: &GradedObject) -> Morphism {
        Morphism::identity(x, self.field())
    }
}

/// Deterministic degree-preserving probe endomorphism of `x` with small
/// integer entries, seeded per object so reports are reproducible.
pub fn seeded_endomorphism(ctx: &BraidedContext, x: &GradedObject, seed: u64) -> Morphism {
    let field = ctx.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (x.dim() as u64).wrapping_mul(0x9e37_79b9));
    let mut m = Morphism::zero(x.clone(), x.clone(), field);
    for i in 0..x.dim() {
        for j in 0..x.dim() {
            let v: i64 = rng.gen_range(-2..=2);
            // Only degree-zero maps are morphisms of graded objects.
            if x.basis[i].grade == x.basis[j].grade && v != 0 {
                m.set(i, j, field.from_i64(v));
            }
        }
    }
    m
}

/// Coherence audit of a context on a probe list: both hexagon identities on
/// all probe triples, unit laws, naturality of the braiding against seeded
/// probe endomorphisms, and invertibility `b^{-1} b = id = b b^{-1}` on all
/// probe pairs. A corrupted bicharacter table surfaces here.
pub fn check_coherence(ctx: &BraidedContext, probes: &[GradedObject], seed: u64) -> CheckReport {
    let mut rep = CheckReport::new();
    let unit = ctx.unit_object();
    for (xi, x) in probes.iter().enumerate() {
        rep.push_equality(
            &format!("unit law: probe {xi} tensor I"),
            "strict unit law",
            &ctx.identity(&ctx.tensor_obj(x, &unit)),
            &ctx.identity(x),
        );
        for (yi, y) in probes.iter().enumerate() {
            let b = ctx.braiding(x, y);
            let binv = ctx.braiding_inv(x, y);
            rep.push_equality(
                &format!("invertibility at probes ({xi}, {yi})"),
                "braiding invertibility",
                &binv.compose(&b).expect("shapes agree"),
                &ctx.identity(&ctx.tensor_obj(x, y)),
            );
            rep.push_equality(
                &format!("invertibility (other side) at probes ({xi}, {yi})"),
                "braiding invertibility",
                &b.compose(&binv).expect("shapes agree"),
                &ctx.identity(&ctx.tensor_obj(y, x)),
            );
            let f = seeded_endomorphism(ctx, x, seed.wrapping_add(xi as u64));
            let g = seeded_endomorphism(ctx, y, seed.wrapping_add(100 + yi as u64));
            rep.push_equality(
                &format!("naturality at probes ({xi}, {yi})"),
                "braiding naturality",
                &b.compose(&ctx.tensor_mor(&f, &g)).expect("shapes agree"),
                &ctx.tensor_mor(&g, &f).compose(&b).expect("shapes agree"),
            );
            for (zi, z) in probes.iter().enumerate() {
                let yz = ctx.tensor_obj(y, z);
                let xy = ctx.tensor_obj(x, y);
                // b_{X, Y.Z} = (1_Y . b_{X,Z}) (b_{X,Y} . 1_Z)
                let lhs = ctx.braiding(x, &yz);
                let rhs = ctx
                    .tensor_mor(&ctx.identity(y), &ctx.braiding(x, z))
                    .compose(&ctx.tensor_mor(&ctx.braiding(x, y), &ctx.identity(z)))
                    .expect("shapes agree");
                rep.push_equality(
                    &format!("hexagon (split second factor) at probes ({xi}, {yi}, {zi})"),
                    "braiding hexagon",
                    &lhs,
                    &rhs,
                );
                // b_{X.Y, Z} = (b_{X,Z} . 1_Y) (1_X . b_{Y,Z})
                let lhs = ctx.braiding(&xy, z);
                let rhs = ctx
                    .tensor_mor(&ctx.braiding(x, z), &ctx.identity(y))
                    .compose(&ctx.tensor_mor(&ctx.identity(x), &ctx.braiding(y, z)))
                    .expect("shapes agree");
                rep.push_equality(
                    &format!("hexagon (split first factor) at probes ({xi}, {yi}, {zi})"),
                    "braiding hexagon",
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    rep
}
