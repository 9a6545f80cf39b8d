//! Dense integer matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::golden::GoldenNumber;
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::from(1);
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Argument("matrix dimensions differ".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Argument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = a * o.get(k, j);
                    out.data[i * o.cols + j] += v;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Argument("only square matrices have powers".into()));
        }
        let mut out = IntMatrix::identity(self.rows);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|v| !v.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|v| v.is_positive())
    }

    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Smallest `k ≤ (n-1)² + 1` with `M^k` entrywise positive. Only the
    /// zero pattern matters, so powers are taken over booleans.
    pub fn primitivity_exponent(&self) -> Option<u32> {
        if !self.is_square() || self.rows == 0 || !self.is_nonnegative() {
            return None;
        }
        let n = self.rows;
        let pattern: Vec<bool> = self.data.iter().map(|v| !v.is_zero()).collect();
        let bound = (n - 1) * (n - 1) + 1;
        let mut power = pattern.clone();
        for k in 1..=bound {
            if power.iter().all(|&b| b) {
                return Some(k as u32);
            }
            let mut next = vec![false; n * n];
            for i in 0..n {
                for l in 0..n {
                    if power[i * n + l] {
                        for j in 0..n {
                            next[i * n + j] |= pattern[l * n + j];
                        }
                    }
                }
            }
            power = next;
        }
        None
    }

    /// `det(xI - M)` by the division-free Berkowitz recurrence.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        if !self.is_square() {
            return Err(Error::Argument(format!(
                "characteristic polynomial of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        // coefficients in descending degree
        let mut p: Vec<BigInt> = vec![BigInt::from(1)];
        for k in 0..n {
            // leading principal block of size k, column c above the diagonal,
            // row r left of it, diagonal entry a
            let a = self.get(k, k).clone();
            let c: Vec<BigInt> = (0..k).map(|i| self.get(i, k).clone()).collect();
            let r: Vec<BigInt> = (0..k).map(|j| self.get(k, j).clone()).collect();
            let mut toeplitz = Vec::with_capacity(k + 2);
            toeplitz.push(BigInt::from(1));
            toeplitz.push(-a);
            let mut v = c;
            for _ in 0..k {
                let rv: BigInt = r.iter().zip(&v).map(|(x, y)| x * y).sum();
                toeplitz.push(-rv);
                v = (0..k)
                    .map(|i| (0..k).map(|j| self.get(i, j) * &v[j]).sum())
                    .collect();
            }
            let mut next = vec![BigInt::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    if i >= j {
                        *slot += &toeplitz[i - j] * pj;
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(IntPolynomial::new(p))
    }

    /// `q(M)` by Horner's rule.
    pub fn eval_poly(&self, q: &IntPolynomial) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Argument("polynomial of a non-square matrix".into()));
        }
        let id = IntMatrix::identity(self.rows);
        let mut acc = IntMatrix::zeros(self.rows, self.rows);
        for c in q.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&id.scale(c))?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn golden_row(&self, i: usize) -> Option<Vec<GoldenNumber>> {
        (0..self.cols)
            .map(|j| self.get(i, j).to_i64().map(GoldenNumber::int))
            .collect()
    }
}

/// Which side an eigenvector multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenSide {
    Left,
    Right,
}

/// Exact check of `M v = λ v` (right) or `vᵀ M = λ vᵀ` (left) in `Z[φ]`.
pub fn golden_eigencheck(
    m: &IntMatrix,
    lambda: GoldenNumber,
    v: &[GoldenNumber],
    side: EigenSide,
) -> bool {
    let m = match side {
        EigenSide::Right => m.clone(),
        EigenSide::Left => m.transpose(),
    };
    if !m.is_square() || m.rows() != v.len() {
        return false;
    }
    (0..m.rows()).all(|i| {
        let Some(row) = m.golden_row(i) else {
            return false;
        };
        let lhs: GoldenNumber = row.iter().zip(v).map(|(&a, &x)| a * x).sum();
        lhs == lambda * v[i]
    })
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", self.get(i, j).to_string()))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_char_poly() {
        assert_eq!(
            IntMatrix::identity(3).char_poly().unwrap(),
            IntPolynomial::from_i64(&[-1, 3, -3, 1])
        );
    }

    #[test]
    fn fibonacci_char_poly() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(m.char_poly().unwrap(), IntPolynomial::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = IntMatrix::from_i64(&[vec![1, 2]]);
        assert!(m.char_poly().is_err());
        assert_eq!(m.primitivity_exponent(), None);
    }

    #[test]
    fn cayley_hamilton_small() {
        let m = IntMatrix::from_i64(&[vec![2, -1, 0], vec![4, 3, 7], vec![-5, 1, 1]]);
        let p = m.char_poly().unwrap();
        assert!(m.eval_poly(&p).unwrap().is_zero());
    }

    #[test]
    fn eigencheck_fibonacci() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 1]]);
        let v = [GoldenNumber::ONE, GoldenNumber::PHI];
        assert!(golden_eigencheck(&m, GoldenNumber::PHI, &v, EigenSide::Right));
        let w = [GoldenNumber::ONE, GoldenNumber::new(1, 1)];
        assert!(!golden_eigencheck(&m, GoldenNumber::PHI, &w, EigenSide::Right));
    }
}
