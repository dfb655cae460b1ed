//! Exact linear algebra: Gaussian elimination over the scalar field, and the
//! derived operations the structure checks need — rank, kernel bases, right
//! inverses (sections of epimorphisms), and factoring a morphism through an
//! epimorphism.

use crate::error::Error;
use crate::morphism::Morphism;
use crate::scalar::{FieldSpec, Scalar};

/// Dense matrix as rows of scalars.
pub type Mat = Vec<Vec<Scalar>>;

pub fn to_mat(m: &Morphism) -> Mat {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

fn transpose(m: &Mat, cols: usize) -> Mat {
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Reduced row echelon form in place, pivoting only within the first
/// `main_cols` columns (extra columns ride along as an augmented block).
/// Returns `(pivot_row, pivot_col)` pairs in order.
pub fn rref_in_place(mat: &mut Mat, main_cols: usize) -> Vec<(usize, usize)> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..main_cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let inv = mat[row][col].inverse().expect("nonzero pivot");
        for e in mat[row].iter_mut() {
            if !e.is_zero() {
                *e = e.mul(&inv);
            }
        }
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                let (head, tail) = if r < row {
                    let (a, b) = mat.split_at_mut(row);
                    (&mut a[r], &b[0])
                } else {
                    let (a, b) = mat.split_at_mut(r);
                    (&mut b[0], &a[row])
                };
                for (e, s) in head.iter_mut().zip(tail.iter()) {
                    if !s.is_zero() {
                        *e = e.sub(&factor.mul(s));
                    }
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    pivots
}

pub fn rank(m: &Morphism) -> usize {
    let mut mat = to_mat(m);
    rref_in_place(&mut mat, m.cols()).len()
}

/// A basis of `ker m` as domain coordinate vectors.
pub fn kernel_basis(m: &Morphism) -> Vec<Vec<Scalar>> {
    let cols = m.cols();
    let field = m.field;
    let mut mat = to_mat(m);
    let pivots = rref_in_place(&mut mat, cols);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for &(r, c) in &pivots {
            v[c] = mat[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Outcome of a multi-right-hand-side solve `A x = b_k`.
pub struct LinSolve {
    /// One particular solution per right-hand side (free variables zero).
    pub solutions: Vec<Vec<Scalar>>,
    /// True when `A` has full column rank, i.e. solutions are unique.
    pub unique: bool,
}

/// Solve `A x = b` for each column `b` in `bs`. On failure returns the index
/// of the first inconsistent right-hand side.
pub fn solve_many(a: &Mat, bs: &[Vec<Scalar>], field: FieldSpec) -> Result<LinSolve, usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut mat: Mat = (0..rows)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(bs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    let pivots = rref_in_place(&mut mat, cols);
    // Consistency: no nonzero augmented entry in a zero row of the main block.
    let pivot_rows: Vec<usize> = pivots.iter().map(|&(r, _)| r).collect();
    for r in 0..rows {
        if pivot_rows.contains(&r) {
            continue;
        }
        for (k, _) in bs.iter().enumerate() {
            if !mat[r][cols + k].is_zero() {
                return Err(k);
            }
        }
    }
    let solutions = (0..bs.len())
        .map(|k| {
            let mut x = vec![field.zero(); cols];
            for &(r, c) in &pivots {
                x[c] = mat[r][cols + k].clone();
            }
            x
        })
        .collect();
    Ok(LinSolve {
        solutions,
        unique: pivots.len() == cols,
    })
}

/// A right inverse (section) `r` with `m . r = id`, when `m` is surjective.
pub fn right_inverse(m: &Morphism) -> Option<Morphism> {
    let field = m.field;
    let a = to_mat(m);
    let id_cols: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|k| {
            let mut v = vec![field.zero(); m.rows()];
            v[k] = field.one();
            v
        })
        .collect();
    let solve = solve_many(&a, &id_cols, field).ok()?;
    let mut r = Morphism::zero(m.cod.clone(), m.dom.clone(), field);
    for (col, x) in solve.solutions.iter().enumerate() {
        for (row, v) in x.iter().enumerate() {
            if !v.is_zero() {
                r.set(row, col, v.clone());
            }
        }
    }
    Some(r)
}

/// Factor `s` through the epimorphism `p`: find `u` with `u . p = s`.
///
/// `s` and `p` must share a domain. The factorization exists exactly when `s`
/// kills `ker p`; otherwise the error carries a kernel witness vector on
/// which `s` does not vanish. When `p` is epi the factorization is unique.
pub fn solve_through_epi(s: &Morphism, p: &Morphism) -> Result<Morphism, Error> {
    if s.dom != p.dom {
        return Err(Error::Shape(
            "factoring through an epi needs a common domain".into(),
        ));
    }
    let field = s.field;
    // u . p = s  <=>  p^T u^T = s^T, one system per row of u.
    let a = transpose(&to_mat(p), p.cols());
    let bs: Vec<Vec<Scalar>> = (0..s.rows())
        .map(|i| (0..s.cols()).map(|j| s.get(i, j).clone()).collect())
        .collect();
    match solve_many(&a, &bs, field) {
        Ok(solve) => {
            let mut u = Morphism::zero(p.cod.clone(), s.cod.clone(), field);
            for (row, x) in solve.solutions.iter().enumerate() {
                for (col, v) in x.iter().enumerate() {
                    if !v.is_zero() {
                        u.set(row, col, v.clone());
                    }
                }
            }
            Ok(u)
        }
        Err(_) => {
            // Name a kernel vector of p not killed by s.
            for k in kernel_basis(p) {
                let image: Vec<Scalar> = (0..s.rows())
                    .map(|i| {
                        let mut acc = field.zero();
                        for (j, v) in k.iter().enumerate() {
                            if !v.is_zero() {
                                acc = acc.add(&s.get(i, j).mul(v));
                            }
                        }
                        acc
                    })
                    .collect();
                if image.iter().any(|v| !v.is_zero()) {
                    let ks: Vec<String> = k.iter().map(|v| v.to_string()).collect();
                    return Err(Error::Inconsistent(format!(
                        "kernel vector ({}) of the epimorphism is not killed",
                        ks.join(", ")
                    )));
                }
            }
            unreachable!("inconsistent system must produce a kernel witness")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::GradeGroup;
    use crate::object::GradedObject;

    fn obj(labels: &[&str]) -> GradedObject {
        let g = GradeGroup::trivial(FieldSpec::Rational);
        GradedObject::ungraded(g, labels).unwrap()
    }

    #[test]
    fn rank_and_kernel_of_a_projection() {
        let f = FieldSpec::Rational;
        let a2 = obj(&["a", "b"]);
        let a1 = obj(&["c"]);
        // (1 1): rank 1, kernel spanned by (1, -1).
        let m = Morphism::from_int_rows(a2, a1, f, &[&[1, 1]]).unwrap();
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![f.from_i64(-1), f.one()]);
    }

    #[test]
    fn right_inverse_is_a_section() {
        let f = FieldSpec::Rational;
        let a2 = obj(&["a", "b"]);
        let a1 = obj(&["c"]);
        let m = Morphism::from_int_rows(a2, a1.clone(), f, &[&[2, 1]]).unwrap();
        let r = right_inverse(&m).unwrap();
        assert_eq!(m.compose(&r).unwrap(), Morphism::identity(&a1, f));
        // A non-surjective map has no section.
        let z = Morphism::zero(obj(&["a", "b"]), a1, f);
        assert!(right_inverse(&z).is_none());
    }

    #[test]
    fn factor_through_epi_and_witness_on_failure() {
        let f = FieldSpec::Rational;
        let a2 = obj(&["a", "b"]);
        let a1 = obj(&["c"]);
        let p = Morphism::from_int_rows(a2.clone(), a1.clone(), f, &[&[1, 1]]).unwrap();
        // s = 3 * p factors as u = (3).
        let s = p.scale(&f.from_i64(3));
        let u = solve_through_epi(&s, &p).unwrap();
        assert_eq!(u.compose(&p).unwrap(), s);
        // The identity does not factor: (1, -1) is in ker p but not ker id.
        let s2 = Morphism::identity(&a2, f);
        let err = solve_through_epi(&s2, &p).unwrap_err();
        assert!(err.to_string().contains("kernel vector"));
    }

    #[test]
    fn solve_many_reports_uniqueness() {
        let f = FieldSpec::Rational;
        let a = vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]];
        let sol = solve_many(&a, &[vec![f.from_i64(4), f.from_i64(5)]], f).unwrap();
        assert!(sol.unique);
        assert_eq!(sol.solutions[0], vec![f.from_i64(4), f.from_i64(5)]);
        let a = vec![vec![f.one(), f.one()]];
        assert!(!solve_many(&a, &[vec![f.one()]], f).unwrap().unique);
    }
}
