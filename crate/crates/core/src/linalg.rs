//! Exact dense linear algebra over cyclotomic fields.
//!
//! Elimination is fraction-free (Bareiss): every update has the form
//! `(a·p − b·c) / prev`, whose division is exact in the coefficient ring.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{CycloNumber, Sign};

pub type Matrix = Vec<Vec<CycloNumber>>;

/// Counts of positive, negative and zero eigenvalues of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

fn check_square(m: &Matrix) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("matrix is not square".into()));
    }
    Ok(n)
}

/// True when `m` equals its conjugate transpose.
pub fn is_hermitian(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|i| m[i].len() == n && (i..n).all(|j| m[i][j] == m[j][i].conj()))
}

fn divide_by(x: CycloNumber, prev: &CycloNumber, prev_inv: &Option<CycloNumber>) -> CycloNumber {
    match prev_inv {
        Some(inv) => x * inv,
        None => x.checked_div(prev).expect("nonzero pivot"),
    }
}

fn inverse_hint(p: &CycloNumber) -> Option<CycloNumber> {
    // rationals divide cheaply; other pivots are inverted once per step
    if p.is_rational() {
        None
    } else {
        Some(p.inv().expect("nonzero pivot"))
    }
}

/// One fraction-free elimination step below row `row` using column `col`.
fn bareiss_step(a: &mut Matrix, row: usize, col: usize, prev: &CycloNumber) {
    let prev_inv = inverse_hint(prev);
    let (top, rest) = a.split_at_mut(row + 1);
    let pivot_row = &top[row];
    let p = pivot_row[col].clone();
    rest.par_iter_mut().for_each(|r| {
        let f = r[col].clone();
        for j in (col + 1)..r.len() {
            let mut v = &r[j] * &p;
            if !f.is_zero() && !pivot_row[j].is_zero() {
                v = v - &f * &pivot_row[j];
            }
            r[j] = divide_by(v, prev, &prev_inv);
        }
        r[col] = CycloNumber::zero();
    });
}

/// Leading principal minors by Bareiss elimination without pivoting.
/// Stops after the first vanishing minor.
pub fn leading_principal_minors(m: &Matrix) -> Result<Vec<CycloNumber>> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut prev = CycloNumber::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let p = a[k][k].clone();
        out.push(p.clone());
        if p.is_zero() {
            break;
        }
        bareiss_step(&mut a, k, k, &prev);
        prev = p;
    }
    Ok(out)
}

/// Positive definiteness of a Hermitian matrix via the signs of its
/// leading principal minors.
pub fn is_positive_definite(m: &Matrix) -> Result<bool> {
    let n = check_square(m)?;
    let minors = leading_principal_minors(m)?;
    if minors.len() < n {
        return Ok(false);
    }
    for d in &minors {
        if d.sign()? != Sign::Positive {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &Matrix) -> Result<CycloNumber> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(CycloNumber::one());
    }
    let mut a = m.clone();
    let mut prev = CycloNumber::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(CycloNumber::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        bareiss_step(&mut a, k, k, &prev);
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Row echelon form (fraction-free) and its pivot columns.
pub fn echelon(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = CycloNumber::one();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, row);
        bareiss_step(&mut a, row, col, &prev);
        prev = a[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    echelon(m).1.len()
}

/// Basis of {x : M x = 0}.
pub fn right_kernel(m: &Matrix) -> Vec<Vec<CycloNumber>> {
    let cols = m.first().map_or(0, Vec::len);
    let (u, pivots) = echelon(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![CycloNumber::zero(); cols];
            x[f] = CycloNumber::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let s: CycloNumber = ((pc + 1)..cols)
                    .filter(|&j| !x[j].is_zero() && !u[r][j].is_zero())
                    .map(|j| &u[r][j] * &x[j])
                    .sum();
                x[pc] = -(s.checked_div(&u[r][pc]).expect("pivot is nonzero"));
            }
            x
        })
        .collect()
}

/// Basis of {x : xᵀ M = 0}.
pub fn left_kernel(m: &Matrix) -> Vec<Vec<CycloNumber>> {
    right_kernel(&transpose(m))
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Inertia of a Hermitian matrix by congruence elimination with exact
/// sign decisions on the (real) pivots.
pub fn hermitian_inertia(m: &Matrix) -> Result<Inertia> {
    let n = check_square(m)?;
    if !is_hermitian(m) {
        return Err(Error::Invalid("matrix is not Hermitian".into()));
    }
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let i = active.remove(pos);
            match a[i][i].sign()? {
                Sign::Positive => inertia.positive += 1,
                Sign::Negative => inertia.negative += 1,
                Sign::Zero => unreachable!(),
            }
            let d_inv = a[i][i].inv()?;
            let col: Vec<CycloNumber> = active.iter().map(|&j| &a[j][i] * &d_inv).collect();
            let row_i: Vec<CycloNumber> = active.iter().map(|&k| a[i][k].clone()).collect();
            let updates: Vec<(usize, Vec<CycloNumber>)> = active
                .par_iter()
                .enumerate()
                .map(|(x, &j)| {
                    let new_row = active
                        .iter()
                        .enumerate()
                        .map(|(y, &k)| {
                            if col[x].is_zero() || row_i[y].is_zero() {
                                a[j][k].clone()
                            } else {
                                &a[j][k] - &col[x] * &row_i[y]
                            }
                        })
                        .collect();
                    (j, new_row)
                })
                .collect();
            for (j, new_row) in updates {
                for (y, &k) in active.iter().enumerate() {
                    a[j][k] = new_row[y].clone();
                }
            }
            continue;
        }
        let pair = active
            .iter()
            .flat_map(|&j| active.iter().map(move |&k| (j, k)))
            .find(|&(j, k)| j != k && !a[j][k].is_zero());
        let Some((j, k)) = pair else {
            inertia.zero += active.len();
            break;
        };
        // row_j += c·row_k, col_j += c̄·col_k with c = a[j][k] makes a[j][j] = 2|c|² > 0
        let c = a[j][k].clone();
        let cb = c.conj();
        for &x in &active {
            let v = &a[j][x] + &c * &a[k][x];
            a[j][x] = v;
        }
        for &x in &active {
            let v = &a[x][j] + &cb * &a[x][k];
            a[x][j] = v;
        }
    }
    Ok(inertia)
}

/// y = xᵀ M (row vector times matrix).
pub fn row_times(x: &[CycloNumber], m: &Matrix) -> Vec<CycloNumber> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            x.iter()
                .zip(m)
                .filter(|(xi, r)| !xi.is_zero() && !r[j].is_zero())
                .map(|(xi, r)| xi * &r[j])
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cyclo;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| CycloNumber::from_integer(v)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        let m = int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(determinant(&m).unwrap(), CycloNumber::from_integer(18));
        let s = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&s).unwrap(), CycloNumber::from_integer(-1));
        let z = int_matrix(&[&[1, 2], &[2, 4]]);
        assert!(determinant(&z).unwrap().is_zero());
    }

    #[test]
    fn minors_and_definiteness() {
        let m = int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let minors: Vec<_> = leading_principal_minors(&m).unwrap();
        assert_eq!(minors, vec![2.into(), 5.into(), 18.into()]);
        assert!(is_positive_definite(&m).unwrap());
        let ind = int_matrix(&[&[1, 2], &[2, 1]]);
        assert!(!is_positive_definite(&ind).unwrap());
    }

    #[test]
    fn inertia_cases() {
        let ind = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            hermitian_inertia(&ind).unwrap(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
        let psd = int_matrix(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            hermitian_inertia(&psd).unwrap(),
            Inertia {
                positive: 1,
                negative: 0,
                zero: 1
            }
        );
        let i = cyclo(4, 1);
        let herm = vec![
            vec![CycloNumber::from_integer(2), i.clone()],
            vec![-i.clone(), CycloNumber::from_integer(2)],
        ];
        assert_eq!(hermitian_inertia(&herm).unwrap().positive, 2);
    }

    #[test]
    fn kernels() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = right_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &m {
                let s: CycloNumber = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
        assert_eq!(rank(&m), 1);
        let lk = left_kernel(&m);
        assert_eq!(lk.len(), 1);
        assert!(row_times(&lk[0], &m).iter().all(CycloNumber::is_zero));
    }
}
