//! On-disk structure files: a JSON schema describing a graded base category
//! (field, grading group, bicharacter), named objects and morphisms, and the
//! algebraic structures built from them. Serialization is deterministic
//! (fixed field order, sorted maps, canonical scalar strings), so files and
//! reports can be hashed and compared byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::builders::Bimonoid;
use crate::context::BraidedContext;
use crate::error::Error;
use crate::fusion::CounitalFusion;
use crate::grade::GradeGroup;
use crate::mbm::{MultiplierBimonoid, RegularMultiplierBimonoid};
use crate::morphism::Morphism;
use crate::object::{BasisVector, GradedObject};
use crate::repcat::{RegComodule, RegModule};
use crate::scalar::FieldSpec;

pub const FILE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct BasisDecl {
    pub label: Vec<String>,
    pub grade: Vec<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ObjectDecl {
    pub name: String,
    pub basis: Vec<BasisDecl>,
}

/// A morphism with domain and codomain given as lists of object names
/// (tensored left to right; the empty list is the unit object) and entries
/// as canonical scalar strings, row major, rows indexed by the codomain.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct MorphismDecl {
    pub name: String,
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// A named structure assembled from declared objects and morphisms. `kind`
/// is one of `fusion`, `mbm`, `regular`, `bimonoid`, `comodule`, `module`;
/// `refs` maps the kind's slot names to declared names (for `comodule` and
/// `module`, the slot `of` names the underlying `regular` structure).
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct StructureDecl {
    pub name: String,
    pub kind: String,
    pub refs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct StructureFile {
    pub version: u32,
    pub field: String,
    /// Moduli of the finite abelian grading group; empty means trivial.
    pub grades: Vec<u64>,
    /// Dense bicharacter table, row major over the group order.
    pub bicharacter: Vec<Vec<String>>,
    pub objects: Vec<ObjectDecl>,
    pub morphisms: Vec<MorphismDecl>,
    pub structures: Vec<StructureDecl>,
}

/// A structure file resolved against exact arithmetic.
pub struct ResolvedFile {
    pub ctx: BraidedContext,
    pub objects: BTreeMap<String, GradedObject>,
    pub morphisms: BTreeMap<String, Morphism>,
    pub structures: Vec<(String, ResolvedStructure)>,
}

pub enum ResolvedStructure {
    Fusion(CounitalFusion),
    Mbm(MultiplierBimonoid),
    Regular(RegularMultiplierBimonoid),
    Bimonoid(Bimonoid),
    Comodule(RegComodule),
    Module(RegModule),
}

impl ResolvedStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            ResolvedStructure::Fusion(_) => "fusion",
            ResolvedStructure::Mbm(_) => "mbm",
            ResolvedStructure::Regular(_) => "regular",
            ResolvedStructure::Bimonoid(_) => "bimonoid",
            ResolvedStructure::Comodule(_) => "comodule",
            ResolvedStructure::Module(_) => "module",
        }
    }
}

impl StructureFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: StructureFile = serde_json::from_str(text)?;
        if file.version != FILE_VERSION {
            return Err(Error::Parse(format!(
                "unsupported file version {} (expected {FILE_VERSION})",
                file.version
            )));
        }
        Ok(file)
    }

    /// Deterministic serialization: fixed struct field order, sorted ref
    /// maps, canonical scalar strings, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// SHA-256 of the canonical serialization, hex encoded.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.to_canonical_json().as_bytes());
        hex::encode(h.finalize())
    }

    pub fn resolve(&self) -> Result<ResolvedFile, Error> {
        let field = FieldSpec::parse(&self.field)?;
        let order: usize = self.grades.iter().product::<u64>() as usize;
        if self.bicharacter.len() != order.max(1)
            || self.bicharacter.iter().any(|r| r.len() != order.max(1))
        {
            return Err(Error::Parse(format!(
                "bicharacter table must be {0} x {0}",
                order.max(1)
            )));
        }
        let mut chi = Vec::new();
        for row in &self.bicharacter {
            for s in row {
                chi.push(field.parse_scalar(s)?);
            }
        }
        let group = GradeGroup::new(self.grades.clone(), field.clone(), chi)?;
        let ctx = BraidedContext::base(group.clone());

        let mut objects = BTreeMap::new();
        for decl in &self.objects {
            if objects.contains_key(&decl.name) {
                return Err(Error::Parse(format!("duplicate object name {}", decl.name)));
            }
            let mut basis = Vec::new();
            for b in &decl.basis {
                if b.grade.len() != self.grades.len() {
                    return Err(Error::Parse(format!(
                        "basis grade length mismatch in object {}",
                        decl.name
                    )));
                }
                basis.push(BasisVector {
                    label: b.label.clone(),
                    grade: group.reduce(&b.grade)?,
                });
            }
            objects.insert(
                decl.name.clone(),
                GradedObject {
                    group: group.clone(),
                    basis,
                },
            );
        }

        let tensor_names = |names: &[String]| -> Result<GradedObject, Error> {
            let mut out = ctx.unit_object();
            for n in names {
                let o = objects
                    .get(n)
                    .ok_or_else(|| Error::Parse(format!("unknown object {n}")))?;
                out = ctx.tensor_obj(&out, o);
            }
            Ok(out)
        };

        let mut morphisms = BTreeMap::new();
        for decl in &self.morphisms {
            if morphisms.contains_key(&decl.name) {
                return Err(Error::Parse(format!(
                    "duplicate morphism name {}",
                    decl.name
                )));
            }
            let dom = tensor_names(&decl.dom)?;
            let cod = tensor_names(&decl.cod)?;
            if decl.rows.len() != cod.dim() || decl.rows.iter().any(|r| r.len() != dom.dim()) {
                return Err(Error::Parse(format!(
                    "morphism {} must be {} x {}",
                    decl.name,
                    cod.dim(),
                    dom.dim()
                )));
            }
            let mut m = Morphism::zero(dom, cod, field.clone());
            for (i, row) in decl.rows.iter().enumerate() {
                for (j, s) in row.iter().enumerate() {
                    m.set(i, j, field.parse_scalar(s)?);
                }
            }
            morphisms.insert(decl.name.clone(), m);
        }

        let get_obj = |refs: &BTreeMap<String, String>, slot: &str| -> Result<GradedObject, Error> {
            let n = refs
                .get(slot)
                .ok_or_else(|| Error::Parse(format!("missing ref {slot}")))?;
            objects
                .get(n)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("unknown object {n}")))
        };
        let get_mor = |refs: &BTreeMap<String, String>, slot: &str| -> Result<Morphism, Error> {
            let n = refs
                .get(slot)
                .ok_or_else(|| Error::Parse(format!("missing ref {slot}")))?;
            morphisms
                .get(n)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("unknown morphism {n}")))
        };

        let mut structures: Vec<(String, ResolvedStructure)> = Vec::new();
        for decl in &self.structures {
            if structures.iter().any(|(n, _)| n == &decl.name) {
                return Err(Error::Parse(format!(
                    "duplicate structure name {}",
                    decl.name
                )));
            }
            let refs = &decl.refs;
            let resolved = match decl.kind.as_str() {
                "fusion" => ResolvedStructure::Fusion(CounitalFusion::new(
                    ctx.clone(),
                    get_obj(refs, "a")?,
                    get_mor(refs, "t")?,
                    get_mor(refs, "e")?,
                )?),
                "mbm" => ResolvedStructure::Mbm(MultiplierBimonoid::new(
                    ctx.clone(),
                    get_obj(refs, "a")?,
                    get_mor(refs, "t1")?,
                    get_mor(refs, "t2")?,
                    get_mor(refs, "e")?,
                )?),
                "regular" => ResolvedStructure::Regular(RegularMultiplierBimonoid::new(
                    ctx.clone(),
                    get_obj(refs, "a")?,
                    get_mor(refs, "t1")?,
                    get_mor(refs, "t2")?,
                    get_mor(refs, "t3")?,
                    get_mor(refs, "t4")?,
                    get_mor(refs, "e")?,
                )?),
                "bimonoid" => ResolvedStructure::Bimonoid(Bimonoid::new(
                    ctx.clone(),
                    get_obj(refs, "a")?,
                    get_mor(refs, "m")?,
                    get_mor(refs, "u")?,
                    get_mor(refs, "d")?,
                    get_mor(refs, "e")?,
                )?),
                "comodule" | "module" => {
                    let of = refs
                        .get("of")
                        .ok_or_else(|| Error::Parse("missing ref of".into()))?;
                    let reg = structures
                        .iter()
                        .find_map(|(n, s)| match s {
                            ResolvedStructure::Regular(r) if n == of => Some(r.clone()),
                            _ => None,
                        })
                        .ok_or_else(|| {
                            Error::Parse(format!("structure {of} is not a declared regular structure"))
                        })?;
                    if decl.kind == "comodule" {
                        ResolvedStructure::Comodule(RegComodule::new(
                            reg,
                            get_obj(refs, "v")?,
                            get_mor(refs, "v1")?,
                            get_mor(refs, "v3")?,
                        )?)
                    } else {
                        ResolvedStructure::Module(RegModule::new(
                            reg,
                            get_obj(refs, "q")?,
                            get_mor(refs, "q1")?,
                            get_mor(refs, "q4")?,
                        )?)
                    }
                }
                other => {
                    return Err(Error::Parse(format!("unknown structure kind {other}")));
                }
            };
            structures.push((decl.name.clone(), resolved));
        }

        Ok(ResolvedFile {
            ctx,
            objects,
            morphisms,
            structures,
        })
    }

    /// A minimal file containing only the named structure and everything it
    /// references, used for content-addressed comparison of substructures.
    pub fn slice_for(&self, structure: &str) -> Result<StructureFile, Error> {
        let mut wanted: Vec<&StructureDecl> = Vec::new();
        let mut queue = vec![structure.to_string()];
        while let Some(name) = queue.pop() {
            let decl = self
                .structures
                .iter()
                .find(|s| s.name == name)
                .ok_or_else(|| Error::Parse(format!("unknown structure {name}")))?;
            if wanted.iter().any(|d| d.name == decl.name) {
                continue;
            }
            if let Some(of) = decl.refs.get("of") {
                queue.push(of.clone());
            }
            wanted.push(decl);
        }
        wanted.reverse();
        let mut obj_names: Vec<&str> = Vec::new();
        let mut mor_names: Vec<&str> = Vec::new();
        for decl in &wanted {
            for (slot, target) in &decl.refs {
                if slot == "of" {
                    continue;
                }
                if self.objects.iter().any(|o| &o.name == target) {
                    if !obj_names.contains(&target.as_str()) {
                        obj_names.push(target);
                    }
                } else if !mor_names.contains(&target.as_str()) {
                    mor_names.push(target);
                }
            }
        }
        for m in &self.morphisms {
            if mor_names.contains(&m.name.as_str()) {
                for n in m.dom.iter().chain(m.cod.iter()) {
                    if !obj_names.contains(&n.as_str()) {
                        obj_names.push(n);
                    }
                }
            }
        }
        Ok(StructureFile {
            version: self.version,
            field: self.field.clone(),
            grades: self.grades.clone(),
            bicharacter: self.bicharacter.clone(),
            objects: self
                .objects
                .iter()
                .filter(|o| obj_names.contains(&o.name.as_str()))
                .cloned()
                .collect(),
            morphisms: self
                .morphisms
                .iter()
                .filter(|m| mor_names.contains(&m.name.as_str()))
                .cloned()
                .collect(),
            structures: wanted.into_iter().cloned().collect(),
        })
    }
}

/// Accumulates declarations for a single base context, sharing object and
/// morphism declarations between structures and keeping output order stable.
pub struct FileBuilder {
    file: StructureFile,
}

impl FileBuilder {
    /// Start a file over the given base context. Shifted contexts have no
    /// file representation.
    pub fn new(ctx: &BraidedContext) -> Result<Self, Error> {
        let group = match ctx {
            BraidedContext::Base { group } => group,
            _ => {
                return Err(Error::Parse(
                    "only base contexts can be written to a file".into(),
                ))
            }
        };
        let order = group.order();
        let mut bicharacter = Vec::new();
        for i in 0..order {
            let mut row = Vec::new();
            for j in 0..order {
                row.push(group.chi_table()[i * order + j].to_string());
            }
            bicharacter.push(row);
        }
        Ok(FileBuilder {
            file: StructureFile {
                version: FILE_VERSION,
                field: group.field.name(),
                grades: group.moduli.clone(),
                bicharacter,
                objects: Vec::new(),
                morphisms: Vec::new(),
                structures: Vec::new(),
            },
        })
    }

    /// Continue an existing file, e.g. to append a derived structure.
    pub fn from_file(file: StructureFile) -> Self {
        FileBuilder { file }
    }

    pub fn add_object(&mut self, name: &str, obj: &GradedObject) -> Result<(), Error> {
        let decl = ObjectDecl {
            name: name.to_string(),
            basis: obj
                .basis
                .iter()
                .map(|b| BasisDecl {
                    label: b.label.clone(),
                    grade: b.grade.clone(),
                })
                .collect(),
        };
        match self.file.objects.iter().find(|o| o.name == name) {
            Some(existing) if *existing == decl => Ok(()),
            Some(_) => Err(Error::Parse(format!("conflicting object name {name}"))),
            None => {
                self.file.objects.push(decl);
                Ok(())
            }
        }
    }

    pub fn add_morphism(
        &mut self,
        name: &str,
        dom: &[&str],
        cod: &[&str],
        m: &Morphism,
    ) -> Result<(), Error> {
        let mut rows = Vec::new();
        for i in 0..m.rows() {
            let mut row = Vec::new();
            for j in 0..m.cols() {
                row.push(m.get(i, j).to_string());
            }
            rows.push(row);
        }
        let decl = MorphismDecl {
            name: name.to_string(),
            dom: dom.iter().map(|s| s.to_string()).collect(),
            cod: cod.iter().map(|s| s.to_string()).collect(),
            rows,
        };
        match self.file.morphisms.iter().find(|d| d.name == name) {
            Some(existing) if *existing == decl => Ok(()),
            Some(_) => Err(Error::Parse(format!("conflicting morphism name {name}"))),
            None => {
                self.file.morphisms.push(decl);
                Ok(())
            }
        }
    }

    fn add_structure(
        &mut self,
        name: &str,
        kind: &str,
        refs: &[(&str, String)],
    ) -> Result<(), Error> {
        if self.file.structures.iter().any(|s| s.name == name) {
            return Err(Error::Parse(format!("duplicate structure name {name}")));
        }
        self.file.structures.push(StructureDecl {
            name: name.to_string(),
            kind: kind.to_string(),
            refs: refs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        });
        Ok(())
    }

    pub fn add_regular(
        &mut self,
        name: &str,
        r: &RegularMultiplierBimonoid,
    ) -> Result<(), Error> {
        let a = format!("{name}.A");
        self.add_object(&a, &r.a)?;
        let aa: Vec<&str> = vec![&a, &a];
        for (slot, m) in [
            ("t1", &r.t1),
            ("t2", &r.t2),
            ("t3", &r.t3),
            ("t4", &r.t4),
        ] {
            self.add_morphism(&format!("{name}.{slot}"), &aa, &aa, m)?;
        }
        self.add_morphism(&format!("{name}.e"), &[&a], &[], &r.e)?;
        self.add_structure(
            name,
            "regular",
            &[
                ("a", a.clone()),
                ("t1", format!("{name}.t1")),
                ("t2", format!("{name}.t2")),
                ("t3", format!("{name}.t3")),
                ("t4", format!("{name}.t4")),
                ("e", format!("{name}.e")),
            ],
        )
    }

    pub fn add_bimonoid(&mut self, name: &str, bi: &Bimonoid) -> Result<(), Error> {
        let a = format!("{name}.A");
        self.add_object(&a, &bi.a)?;
        let aa: Vec<&str> = vec![&a, &a];
        self.add_morphism(&format!("{name}.m"), &aa, &[&a], &bi.m)?;
        self.add_morphism(&format!("{name}.u"), &[], &[&a], &bi.u)?;
        self.add_morphism(&format!("{name}.d"), &[&a], &aa, &bi.d)?;
        self.add_morphism(&format!("{name}.e"), &[&a], &[], &bi.e)?;
        self.add_structure(
            name,
            "bimonoid",
            &[
                ("a", a.clone()),
                ("m", format!("{name}.m")),
                ("u", format!("{name}.u")),
                ("d", format!("{name}.d")),
                ("e", format!("{name}.e")),
            ],
        )
    }

    /// Adds the comodule; the underlying regular structure must already have
    /// been added under `of`.
    pub fn add_comodule(&mut self, name: &str, of: &str, c: &RegComodule) -> Result<(), Error> {
        let v = format!("{name}.V");
        let a = format!("{of}.A");
        self.add_object(&v, &c.v_obj)?;
        self.add_morphism(&format!("{name}.v1"), &[&v, &a], &[&v, &a], &c.v1)?;
        self.add_morphism(&format!("{name}.v3"), &[&v, &a], &[&v, &a], &c.v3)?;
        self.add_structure(
            name,
            "comodule",
            &[
                ("of", of.to_string()),
                ("v", v.clone()),
                ("v1", format!("{name}.v1")),
                ("v3", format!("{name}.v3")),
            ],
        )
    }

    /// Adds the module; the underlying regular structure must already have
    /// been added under `of`.
    pub fn add_module(&mut self, name: &str, of: &str, md: &RegModule) -> Result<(), Error> {
        let q = format!("{name}.Q");
        let a = format!("{of}.A");
        self.add_object(&q, &md.q_obj)?;
        self.add_morphism(&format!("{name}.q1"), &[&a, &q], &[&a, &q], &md.q1)?;
        self.add_morphism(&format!("{name}.q4"), &[&q, &a], &[&q, &a], &md.q4)?;
        self.add_structure(
            name,
            "module",
            &[
                ("of", of.to_string()),
                ("q", q.clone()),
                ("q1", format!("{name}.q1")),
                ("q4", format!("{name}.q4")),
            ],
        )
    }

    pub fn finish(self) -> StructureFile {
        self.file
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::catalog_instance;
    use crate::mbm::check_regular;
    use crate::repcat::RegModule;

    #[test]
    fn regular_round_trips_through_json() {
        let r = catalog_instance("semigroup-z3", FieldSpec::Rational).unwrap();
        let mut b = FileBuilder::new(&r.ctx).unwrap();
        b.add_regular("z3", &r).unwrap();
        let file = b.finish();
        let json = file.to_canonical_json();
        let parsed = StructureFile::from_json(&json).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.content_hash(), file.content_hash());
        let resolved = parsed.resolve().unwrap();
        match &resolved.structures[0].1 {
            ResolvedStructure::Regular(r2) => {
                assert_eq!(r2.t1, r.t1);
                assert!(check_regular(r2).overall());
            }
            _ => panic!("expected regular structure"),
        }
    }

    #[test]
    fn slice_hash_distinguishes_underlying_structures() {
        let r3 = catalog_instance("semigroup-z3", FieldSpec::Rational).unwrap();
        let r2 = catalog_instance("semigroup-z2", FieldSpec::Rational).unwrap();
        let mut b = FileBuilder::new(&r3.ctx).unwrap();
        b.add_regular("z3", &r3).unwrap();
        b.add_module("z3-reg", "z3", &RegModule::regular(&r3)).unwrap();
        b.add_regular("z2", &r2).unwrap();
        b.add_module("z2-reg", "z2", &RegModule::regular(&r2)).unwrap();
        let file = b.finish();
        let h3 = file.slice_for("z3").unwrap().content_hash();
        let h2 = file.slice_for("z2").unwrap().content_hash();
        assert_ne!(h3, h2);
        // A module slice drags in its underlying structure.
        let slice = file.slice_for("z3-reg").unwrap();
        assert_eq!(slice.structures.len(), 2);
        assert_eq!(slice.slice_for("z3").unwrap().content_hash(), h3);
    }

    #[test]
    fn bad_shapes_and_kinds_are_rejected() {
        let r = catalog_instance("semigroup-z2", FieldSpec::Rational).unwrap();
        let mut b = FileBuilder::new(&r.ctx).unwrap();
        b.add_regular("z2", &r).unwrap();
        let mut file = b.finish();
        file.structures[0].kind = "mystery".into();
        assert!(matches!(file.resolve(), Err(Error::Parse(_))));
        file.structures[0].kind = "regular".into();
        file.morphisms[0].rows[0].pop();
        assert!(matches!(file.resolve(), Err(Error::Parse(_))));
    }
}
