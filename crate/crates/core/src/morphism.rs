//! Morphisms of graded objects: exact matrices with explicit domain and
//! codomain. Rows index the codomain basis, columns the domain basis.
//!
//! Composition demands exact object equality and multiplies matrices;
//! `tensor` is the Kronecker product in the same left-major order used for
//! object bases. Both iterate over nonzero entries only, since almost every
//! structure matrix in this crate is sparse.

use crate::error::Error;
use crate::object::GradedObject;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub dom: GradedObject,
    pub cod: GradedObject,
    pub field: FieldSpec,
    /// Row-major, `cod.dim()` rows by `dom.dim()` columns.
    entries: Vec<Scalar>,
}

impl Morphism {
    pub fn zero(dom: GradedObject, cod: GradedObject, field: FieldSpec) -> Self {
        let entries = vec![field.zero(); dom.dim() * cod.dim()];
        Morphism {
            dom,
            cod,
            field,
            entries,
        }
    }

    pub fn identity(obj: &GradedObject, field: FieldSpec) -> Self {
        let mut m = Morphism::zero(obj.clone(), obj.clone(), field);
        for i in 0..obj.dim() {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from a row-major table of entries.
    pub fn from_rows(
        dom: GradedObject,
        cod: GradedObject,
        field: FieldSpec,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<Self, Error> {
        if rows.len() != cod.dim() || rows.iter().any(|r| r.len() != dom.dim()) {
            return Err(Error::Shape(format!(
                "matrix shape {}x{} does not match cod dim {} and dom dim {}",
                rows.len(),
                rows.first().map_or(0, Vec::len),
                cod.dim(),
                dom.dim()
            )));
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|s| s.field() != field) {
            return Err(Error::Shape("matrix entry in wrong field".into()));
        }
        Ok(Morphism {
            dom,
            cod,
            field,
            entries,
        })
    }

    /// Build from integer entries (convenience for tests and builders).
    pub fn from_int_rows(
        dom: GradedObject,
        cod: GradedObject,
        field: FieldSpec,
        rows: &[&[i64]],
    ) -> Result<Self, Error> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|n| field.from_i64(*n)).collect())
            .collect();
        Morphism::from_rows(dom, cod, field, rows)
    }

    /// Build a map that sends basis vector `j` of the domain to
    /// `coeff * basis vector image(j)` of the codomain.
    pub fn from_basis_map(
        dom: GradedObject,
        cod: GradedObject,
        field: FieldSpec,
        image: impl Fn(usize) -> (usize, Scalar),
    ) -> Self {
        let mut m = Morphism::zero(dom, cod, field);
        for j in 0..m.dom.dim() {
            let (i, c) = image(j);
            m.set(i, j, c);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.cols() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        let cols = self.cols();
        self.entries[row * cols + col] = value;
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let cols = self.cols();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(k, s)| (k / cols, k % cols, s))
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.rows()).map(|r| self.get(r, col).clone()).collect()
    }

    /// `self . other` (apply `other` first). Objects must match exactly.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism, Error> {
        if self.dom != other.cod {
            return Err(Error::ComposeMismatch {
                inner: other.cod.to_string(),
                outer: self.dom.to_string(),
            });
        }
        let mut out = Morphism::zero(other.dom.clone(), self.cod.clone(), self.field);
        // Accumulate column k of self scaled by each nonzero of other.
        for (k, j, v) in other.nonzeros() {
            for i in 0..self.rows() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    let cur = out.get(i, j).add(&a.mul(v));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self (*) other` with left-major index order:
    /// entry at (row `i1 * rows2 + i2`, col `j1 * cols2 + j2`) is
    /// `self[i1, j1] * other[i2, j2]`.
    pub fn tensor(&self, other: &Morphism) -> Result<Morphism, Error> {
        let dom = self.dom.tensor(&other.dom)?;
        let cod = self.cod.tensor(&other.cod)?;
        let mut out = Morphism::zero(dom, cod, self.field);
        for (i1, j1, a) in self.nonzeros() {
            for (i2, j2, b) in other.nonzeros() {
                out.set(
                    i1 * other.rows() + i2,
                    j1 * other.cols() + j2,
                    a.mul(b),
                );
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, Error> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::Shape("sum of morphisms with different objects".into()));
        }
        let mut out = self.clone();
        for (i, j, v) in other.nonzeros() {
            let cur = out.get(i, j).add(v);
            out.set(i, j, cur);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.mul(s);
        }
        out
    }

    /// Add `delta` to one entry (mutation harness; performs no validation
    /// beyond bounds).
    pub fn mutate_entry(&self, row: usize, col: usize, delta: &Scalar) -> Result<Morphism, Error> {
        if row >= self.rows() || col >= self.cols() {
            return Err(Error::MutationSite {
                row,
                col,
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let mut out = self.clone();
        out.set(row, col, out.get(row, col).add(delta));
        Ok(out)
    }

    /// Rows rendered as canonical scalar strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::GradeGroup;

    fn pair() -> (GradedObject, FieldSpec) {
        let f = FieldSpec::Rational;
        let g = GradeGroup::trivial(f);
        (GradedObject::ungraded(g, &["x", "y"]).unwrap(), f)
    }

    #[test]
    fn compose_multiplies_matrices() {
        let (a, f) = pair();
        let m1 = Morphism::from_int_rows(a.clone(), a.clone(), f, &[&[1, 2], &[0, 1]]).unwrap();
        let m2 = Morphism::from_int_rows(a.clone(), a.clone(), f, &[&[1, 0], &[3, 1]]).unwrap();
        let c = m1.compose(&m2).unwrap();
        assert_eq!(c, Morphism::from_int_rows(a.clone(), a, f, &[&[7, 2], &[3, 1]]).unwrap());
    }

    #[test]
    fn compose_requires_exact_objects() {
        let (a, f) = pair();
        let b = GradedObject::ungraded(a.group.clone(), &["z", "w"]).unwrap();
        let m1 = Morphism::identity(&a, f);
        let m2 = Morphism::identity(&b, f);
        assert!(m1.compose(&m2).is_err());
    }

    #[test]
    fn tensor_uses_left_major_kronecker_order() {
        let (a, f) = pair();
        let i = GradedObject::unit(a.group.clone());
        // e = row (1, 1) against the identity of a 2-dim object.
        let e = Morphism::from_int_rows(a.clone(), i, f, &[&[1, 1]]).unwrap();
        let id = Morphism::identity(&a, f);
        let ei = e.tensor(&id).unwrap();
        let expect = Morphism::from_int_rows(
            a.tensor(&a).unwrap(),
            a.clone(),
            f,
            &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
        )
        .unwrap();
        assert_eq!(ei, expect);
    }

    #[test]
    fn mutation_is_out_of_band() {
        let (a, f) = pair();
        let id = Morphism::identity(&a, f);
        let m = id.mutate_entry(0, 1, &f.one()).unwrap();
        assert_eq!(*m.get(0, 1), f.one());
        assert!(id.mutate_entry(5, 0, &f.one()).is_err());
    }
}
