//! Check reports: every axiom check produces a named entry with an exact
//! pass/fail verdict, the axiom it instantiates, and — on failure — a
//! counterexample witness naming a domain basis vector together with both
//! evaluated columns.

use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::morphism::Morphism;

/// Counterexample for a failed equality of morphisms: the first domain basis
/// vector on which the two composites differ, with both image columns.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub basis_index: usize,
    pub basis_label: String,
    pub lhs_column: Vec<String>,
    pub rhs_column: Vec<String>,
}

/// Numeric evidence attached to rank-style entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntryData {
    /// Surjectivity / split-epi evidence: achieved rank, required rank, and a
    /// section matrix when one exists.
    SplitEpi {
        rank: usize,
        required: usize,
        section: Option<Vec<Vec<String>>>,
    },
    /// Injectivity-style evidence from a rank computation.
    Rank { rank: usize, required: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    /// Which axiom or law the entry instantiates, by its conventional name
    /// (e.g. "fusion equation", "axiom (C)").
    pub axiom: String,
    pub pass: bool,
    /// Informational entries are reported but never affect the verdict.
    #[serde(default)]
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<EntryData>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Conjunction of all non-informational entries.
    pub fn overall(&self) -> bool {
        self.entries.iter().all(|e| e.pass || e.informational)
    }

    pub fn merge(&mut self, mut other: CheckReport) {
        self.entries.append(&mut other.entries);
    }

    /// Merge with a prefix on entry names (used when a composite check embeds
    /// a sub-structure's report).
    pub fn merge_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.name = format!("{prefix}{}", e.name);
            self.entries.push(e);
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    /// Record an exact equality of two composites as an entry.
    pub fn push_equality(&mut self, name: &str, axiom: &str, lhs: &Morphism, rhs: &Morphism) {
        self.entries.push(equality_entry(name, axiom, lhs, rhs, false));
    }

    pub fn push_equality_informational(
        &mut self,
        name: &str,
        axiom: &str,
        lhs: &Morphism,
        rhs: &Morphism,
    ) {
        self.entries.push(equality_entry(name, axiom, lhs, rhs, true));
    }

    /// Record a split-epi (surjectivity) check with rank evidence and, when
    /// available, an explicit section.
    pub fn push_split_epi(&mut self, name: &str, axiom: &str, m: &Morphism) {
        let rank = linalg::rank(m);
        let required = m.rows();
        let section = if rank == required {
            linalg::right_inverse(m).map(|s| s.to_string_rows())
        } else {
            None
        };
        self.entries.push(CheckEntry {
            name: name.to_string(),
            axiom: axiom.to_string(),
            pass: rank == required,
            informational: false,
            witness: None,
            data: Some(EntryData::SplitEpi {
                rank,
                required,
                section,
            }),
        });
    }

    pub fn push_bool(&mut self, name: &str, axiom: &str, pass: bool) {
        self.entries.push(CheckEntry {
            name: name.to_string(),
            axiom: axiom.to_string(),
            pass,
            informational: false,
            witness: None,
            data: None,
        });
    }

    pub fn failed_entries(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

/// Build an equality entry; shape mismatches count as failures with a
/// descriptive witness in the name rather than panicking.
pub fn equality_entry(
    name: &str,
    axiom: &str,
    lhs: &Morphism,
    rhs: &Morphism,
    informational: bool,
) -> CheckEntry {
    let (pass, witness) = compare(lhs, rhs);
    CheckEntry {
        name: name.to_string(),
        axiom: axiom.to_string(),
        pass,
        informational,
        witness,
        data: None,
    }
}

fn compare(lhs: &Morphism, rhs: &Morphism) -> (bool, Option<Witness>) {
    if lhs.dom != rhs.dom || lhs.cod != rhs.cod {
        return (
            false,
            Some(Witness {
                basis_index: 0,
                basis_label: "(object mismatch)".into(),
                lhs_column: vec![format!("{} -> {}", lhs.dom, lhs.cod)],
                rhs_column: vec![format!("{} -> {}", rhs.dom, rhs.cod)],
            }),
        );
    }
    for j in 0..lhs.cols() {
        let l = lhs.column(j);
        let r = rhs.column(j);
        if l != r {
            return (
                false,
                Some(Witness {
                    basis_index: j,
                    basis_label: lhs.dom.label_string(j),
                    lhs_column: l.iter().map(|s| s.to_string()).collect(),
                    rhs_column: r.iter().map(|s| s.to_string()).collect(),
                }),
            );
        }
    }
    (true, None)
}
