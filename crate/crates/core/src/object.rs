//! Finite-dimensional graded objects: an ordered basis of labelled,
//! homogeneous vectors.
//!
//! Basis labels are tuples of atoms. Tensoring concatenates tuples and the
//! monoidal unit is the one-dimensional object on the empty tuple, so the
//! category is strict on the nose: `(X . Y) . Z == X . (Y . Z)` and
//! `X . I == X` as equal values, which lets composition insist on exact
//! object equality.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::grade::{Grade, GradeGroup};

/// One basis vector: a label tuple and its grade.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisVector {
    pub label: Vec<String>,
    pub grade: Grade,
}

/// A graded object over a fixed grading group.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedObject {
    pub group: GradeGroup,
    pub basis: Vec<BasisVector>,
}

impl GradedObject {
    /// Build from atom labels with grades; labels must be distinct.
    pub fn from_atoms(
        group: GradeGroup,
        atoms: &[(&str, Grade)],
    ) -> Result<Self, Error> {
        let mut basis = Vec::with_capacity(atoms.len());
        for (label, grade) in atoms {
            basis.push(BasisVector {
                label: vec![label.to_string()],
                grade: group.reduce(grade)?,
            });
        }
        let obj = GradedObject { group, basis };
        obj.check_distinct()?;
        Ok(obj)
    }

    /// All atoms at grade zero (plain vector space on `labels`).
    pub fn ungraded(group: GradeGroup, labels: &[&str]) -> Result<Self, Error> {
        let zero = group.zero();
        let atoms: Vec<(&str, Grade)> = labels.iter().map(|l| (*l, zero.clone())).collect();
        Self::from_atoms(group, &atoms)
    }

    /// The monoidal unit: one basis vector with the empty label tuple.
    pub fn unit(group: GradeGroup) -> Self {
        let zero = group.zero();
        GradedObject {
            group,
            basis: vec![BasisVector {
                label: vec![],
                grade: zero,
            }],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_unit(&self) -> bool {
        self.dim() == 1 && self.basis[0].label.is_empty()
    }

    /// Human-readable label of basis vector `i`, e.g. `x(*)y` (`()` for the unit).
    pub fn label_string(&self, i: usize) -> String {
        if self.basis[i].label.is_empty() {
            "()".to_string()
        } else {
            self.basis[i].label.join("(*)")
        }
    }

    fn check_distinct(&self) -> Result<(), Error> {
        let mut seen = HashSet::new();
        for b in &self.basis {
            if !seen.insert(&b.label) {
                return Err(Error::DuplicateLabel(b.label.join("(*)")));
            }
        }
        Ok(())
    }

    /// Tensor product: Kronecker (left-major) ordering of concatenated labels,
    /// grades added in the group. `index(i, j) = i * dim(Y) + j`.
    pub fn tensor(&self, other: &GradedObject) -> Result<GradedObject, Error> {
        if self.group != other.group {
            return Err(Error::GradeGroupMismatch(
                "tensor of objects over different grade groups".into(),
            ));
        }
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for x in &self.basis {
            for y in &other.basis {
                let mut label = x.label.clone();
                label.extend(y.label.iter().cloned());
                basis.push(BasisVector {
                    label,
                    grade: self.group.add(&x.grade, &y.grade),
                });
            }
        }
        Ok(GradedObject {
            group: self.group.clone(),
            basis,
        })
    }
}

impl fmt::Display for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.dim()).map(|i| self.label_string(i)).collect();
        write!(f, "[{}]", labels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn two_dim() -> GradedObject {
        let g = GradeGroup::trivial(FieldSpec::Rational);
        GradedObject::ungraded(g, &["x", "y"]).unwrap()
    }

    #[test]
    fn tensor_with_unit_is_identity_on_the_nose() {
        let a = two_dim();
        let i = GradedObject::unit(a.group.clone());
        assert_eq!(a.tensor(&i).unwrap(), a);
        assert_eq!(i.tensor(&a).unwrap(), a);
        assert_eq!(i.tensor(&i).unwrap(), i);
    }

    #[test]
    fn tensor_is_strictly_associative() {
        let a = two_dim();
        let left = a.tensor(&a).unwrap().tensor(&a).unwrap();
        let right = a.tensor(&a.tensor(&a).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.dim(), 8);
        // Left-major ordering: (x, x, y) sits at index 0*4 + 0*2 + 1 = 1.
        assert_eq!(left.label_string(1), "x(*)x(*)y");
    }

    #[test]
    fn grades_add_under_tensor() {
        let g = GradeGroup::super_z2(FieldSpec::Rational).unwrap();
        let a = GradedObject::from_atoms(g, &[("1", vec![0]), ("x", vec![1])]).unwrap();
        let aa = a.tensor(&a).unwrap();
        assert_eq!(aa.basis[3].grade, vec![0]); // x . x has grade 1 + 1 = 0
        assert_eq!(aa.basis[1].grade, vec![1]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let g = GradeGroup::trivial(FieldSpec::Rational);
        assert!(GradedObject::ungraded(g, &["x", "x"]).is_err());
    }
}
