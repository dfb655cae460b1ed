//! Finite abelian grading groups `Z_{n1} x ... x Z_{nk}` together with a
//! bicharacter `chi : G x G -> k^*` that twists the braiding.
//!
//! Elements are component vectors reduced mod the moduli; the empty product
//! (no moduli) is the trivial group, which recovers plain vector spaces with
//! the symmetric swap braiding when `chi` is constantly one.

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};

/// A grade is a component vector, one entry per modulus.
pub type Grade = Vec<u64>;

/// A finite abelian group with a stored bicharacter table.
///
/// The table is dense, row-major over the lexicographic enumeration of group
/// elements. [`GradeGroup::new`] validates the bicharacter laws; the unchecked
/// constructor exists so that corrupted tables can be fed to
/// [`crate::context::check_coherence`] and observed to fail.
#[derive(Clone, Debug, PartialEq)]
pub struct GradeGroup {
    pub moduli: Vec<u64>,
    pub field: FieldSpec,
    chi: Vec<Scalar>,
}

impl GradeGroup {
    /// Build and validate: every `chi` value nonzero, `chi(0, .) = chi(., 0) = 1`,
    /// and bilinearity `chi(a + b, c) = chi(a, c) chi(b, c)` and symmetrically.
    pub fn new(moduli: Vec<u64>, field: FieldSpec, chi: Vec<Scalar>) -> Result<Self, Error> {
        let g = Self::new_unchecked(moduli, field, chi)?;
        g.validate()?;
        Ok(g)
    }

    /// Build without validating the bicharacter laws (shape is still checked).
    pub fn new_unchecked(
        moduli: Vec<u64>,
        field: FieldSpec,
        chi: Vec<Scalar>,
    ) -> Result<Self, Error> {
        if moduli.iter().any(|&n| n == 0) {
            return Err(Error::Shape("grade group modulus must be positive".into()));
        }
        let order: u64 = moduli.iter().product();
        if chi.len() as u64 != order * order {
            return Err(Error::Shape(format!(
                "bicharacter table has {} entries, expected {}",
                chi.len(),
                order * order
            )));
        }
        if chi.iter().any(|s| s.field() != field) {
            return Err(Error::Shape("bicharacter entry in wrong field".into()));
        }
        Ok(GradeGroup { moduli, field, chi })
    }

    /// The trivial group over `field`: one element, `chi = 1`.
    pub fn trivial(field: FieldSpec) -> Self {
        GradeGroup {
            moduli: vec![],
            field,
            chi: vec![field.one()],
        }
    }

    /// `Z_2` with the sign bicharacter `chi(a, b) = (-1)^{ab}` (super vector
    /// spaces). Requires characteristic different from 2 so the sign matters.
    pub fn super_z2(field: FieldSpec) -> Result<Self, Error> {
        if field == FieldSpec::Prime(2) {
            return Err(Error::Precondition(
                "sign bicharacter needs characteristic != 2".into(),
            ));
        }
        let one = field.one();
        let minus = field.from_i64(-1);
        GradeGroup::new(
            vec![2],
            field,
            vec![one.clone(), one.clone(), one, minus],
        )
    }

    /// `Z_n` with bicharacter `chi(a, b) = w^{ab}` for a chosen `w` with
    /// `w^n = 1` in the field.
    pub fn cyclic_with_root(n: u64, field: FieldSpec, root: Scalar) -> Result<Self, Error> {
        let mut pw = field.one();
        let mut powers = vec![pw.clone()];
        for _ in 1..n {
            pw = pw.mul(&root);
            powers.push(pw.clone());
        }
        if powers.last().unwrap().mul(&root) != field.one() {
            return Err(Error::Precondition(format!(
                "{root} is not an {n}-th root of unity"
            )));
        }
        let chi = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a * b) % n))
            .map(|e| powers[e as usize].clone())
            .collect();
        GradeGroup::new(vec![n], field, chi)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.order();
        if self.chi.iter().any(Scalar::is_zero) {
            return Err(Error::Bicharacter("zero entry in table".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = self.index_of(&self.add(&self.elem(a), &self.elem(b)));
                    let lhs = self.chi_by_index(ab, c);
                    let rhs = self.chi_by_index(a, c).mul(&self.chi_by_index(b, c));
                    if lhs != rhs {
                        return Err(Error::Bicharacter(format!(
                            "not multiplicative in the first argument at ({a}, {b}, {c})"
                        )));
                    }
                    let bc = self.index_of(&self.add(&self.elem(b), &self.elem(c)));
                    let lhs = self.chi_by_index(a, bc);
                    let rhs = self.chi_by_index(a, b).mul(&self.chi_by_index(a, c));
                    if lhs != rhs {
                        return Err(Error::Bicharacter(format!(
                            "not multiplicative in the second argument at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    pub fn zero(&self) -> Grade {
        vec![0; self.moduli.len()]
    }

    pub fn add(&self, a: &Grade, b: &Grade) -> Grade {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((x, y), n)| (x + y) % n)
            .collect()
    }

    pub fn reduce(&self, a: &Grade) -> Result<Grade, Error> {
        if a.len() != self.moduli.len() {
            return Err(Error::Shape(format!(
                "grade {:?} has {} components, expected {}",
                a,
                a.len(),
                self.moduli.len()
            )));
        }
        Ok(a.iter().zip(&self.moduli).map(|(x, n)| x % n).collect())
    }

    /// Lexicographic index of an element (most significant component first).
    pub fn index_of(&self, a: &Grade) -> usize {
        let mut idx = 0usize;
        for (x, n) in a.iter().zip(&self.moduli) {
            idx = idx * (*n as usize) + (*x as usize);
        }
        idx
    }

    /// Inverse of [`GradeGroup::index_of`].
    pub fn elem(&self, mut idx: usize) -> Grade {
        let mut out = vec![0u64; self.moduli.len()];
        for i in (0..self.moduli.len()).rev() {
            let n = self.moduli[i] as usize;
            out[i] = (idx % n) as u64;
            idx /= n;
        }
        out
    }

    pub fn chi(&self, a: &Grade, b: &Grade) -> Scalar {
        self.chi_by_index(self.index_of(a), self.index_of(b))
    }

    fn chi_by_index(&self, a: usize, b: usize) -> Scalar {
        self.chi[a * self.order() + b].clone()
    }

    /// Mutable access to one table entry, for corruption tests.
    pub fn set_chi(&mut self, a: &Grade, b: &Grade, value: Scalar) {
        let i = self.index_of(a) * self.order() + self.index_of(b);
        self.chi[i] = value;
    }

    pub fn chi_table(&self) -> &[Scalar] {
        &self.chi
    }
}
