//! Perron data of primitive matrices: floating-point power iteration and the
//! exact eigenvector when the dominant eigenvalue lies in `Z[φ]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::golden::{GoldenFraction, GoldenNumber, GoldenRational};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct Perron {
    pub value: f64,
    pub right: Vec<f64>,
    pub left: Vec<f64>,
}

const MAX_STEPS: usize = 100_000;

fn normalize_first(v: &mut [f64]) {
    if let Some(&first) = v.iter().find(|x| x.abs() > 0.0) {
        v.iter_mut().for_each(|x| *x /= first);
    }
}

fn power_iteration(m: &[Vec<f64>], tolerance: f64) -> (f64, Vec<f64>) {
    let n = m.len();
    let mut v = vec![1.0; n];
    let mut previous = f64::NAN;
    let mut value = 0.0;
    for _ in 0..MAX_STEPS {
        let w: Vec<f64> = m
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
        let vv: f64 = v.iter().map(|x| x * x).sum();
        value = v.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() / vv;
        let scale = w.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        v = w.into_iter().map(|x| x / scale).collect();
        if (value - previous).abs() < tolerance {
            break;
        }
        previous = value;
    }
    normalize_first(&mut v);
    (value, v)
}

/// Dominant eigenvalue and eigenvectors of a primitive nonnegative matrix.
/// Vectors are scaled so their first nonzero entry is `1`.
pub fn perron(m: &IntMatrix, tolerance: f64) -> Result<Perron> {
    if !m.is_square() || !m.is_nonnegative() {
        return Err(Error::Argument("expected a square nonnegative matrix".into()));
    }
    m.primitivity_exponent().ok_or(Error::NotPrimitive)?;
    let (value, right) = power_iteration(&m.to_f64(), tolerance);
    let (_, left) = power_iteration(&m.transpose().to_f64(), tolerance);
    Ok(Perron { value, right, left })
}

/// Exact Perron eigenvalue in `Z[φ]`: the element of small height closest to
/// the numerical value that is a root of the characteristic polynomial.
pub fn golden_perron_value(m: &IntMatrix) -> Result<GoldenNumber> {
    const HEIGHT: i64 = 256;
    let numeric = perron(m, 1e-13)?.value;
    let chi = m.char_poly()?;
    for b in -HEIGHT..=HEIGHT {
        let a = (numeric - b as f64 * super::golden::PHI).round() as i64;
        let candidate = GoldenNumber::new(a, b);
        if (candidate.to_f64() - numeric).abs() < 1e-6 && chi.eval_golden(candidate)?.is_zero() {
            return Ok(candidate);
        }
    }
    Err(Error::Argument(format!(
        "dominant eigenvalue {numeric} is not a root in Z[φ] of small height"
    )))
}

/// Exact eigenvector for `lambda` in `Z[φ]`, scaled so the first nonzero entry
/// is `1` and then by the least common denominator.
pub fn golden_eigenvector(m: &IntMatrix, lambda: GoldenNumber, transpose: bool) -> Result<Vec<GoldenNumber>> {
    let m = if transpose { m.transpose() } else { m.clone() };
    let n = m.rows();
    let lambda: GoldenRational = lambda.into();
    let mut a: Vec<Vec<GoldenRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = GoldenRational {
                        a: BigRational::from_integer(m.get(i, j).clone()),
                        b: BigRational::zero(),
                    };
                    if i == j {
                        entry.sub(&lambda)
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().expect("nonzero pivot");
        a[row] = a[row].iter().map(|x| x.mul(&inv)).collect();
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[row].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(Error::Argument(format!(
            "eigenspace has dimension {}, expected 1",
            free.len()
        )));
    }
    let f = free[0];
    let mut v = vec![GoldenRational::zero(); n];
    v[f] = GoldenRational::one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = GoldenRational::zero().sub(&a[r][f]);
    }
    let first = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero vector");
    let inv = first.inv().expect("nonzero");
    let v: Vec<GoldenRational> = v.iter().map(|x| x.mul(&inv)).collect();
    let lcm = v
        .iter()
        .flat_map(GoldenRational::denominators)
        .fold(BigInt::one(), num_integer::lcm);
    let scale = GoldenRational {
        a: BigRational::from_integer(lcm),
        b: BigRational::zero(),
    };
    v.iter()
        .map(|x| {
            x.mul(&scale)
                .to_integral()
                .ok_or_else(|| Error::Argument("eigenvector entry exceeds 64 bits".into()))
        })
        .collect()
}

/// Letter frequencies of a primitive morphism with incidence matrix `m`.
#[derive(Clone, Debug, Serialize)]
pub struct Frequencies {
    pub eigenvalue: GoldenNumber,
    /// Right eigenvector in `Z[φ]`.
    pub vector: Vec<GoldenNumber>,
    /// Exact frequencies `vector[i] / Σ vector`.
    pub exact: Vec<GoldenFraction>,
    pub decimal: Vec<f64>,
}

pub fn frequencies(m: &IntMatrix) -> Result<Frequencies> {
    let eigenvalue = golden_perron_value(m)?;
    let vector = golden_eigenvector(m, eigenvalue, false)?;
    let total: GoldenNumber = vector.iter().copied().sum();
    let exact: Vec<GoldenFraction> = vector
        .iter()
        .map(|&x| GoldenFraction::new(x, total))
        .collect();
    let decimal = exact.iter().map(|f| f.to_f64()).collect();
    Ok(Frequencies {
        eigenvalue,
        vector,
        exact,
        decimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let p = perron(&IntMatrix::from_i64(&[vec![2]]), 1e-12).unwrap();
        assert!((p.value - 2.0).abs() < 1e-12);
        assert_eq!(p.right, vec![1.0]);
        assert_eq!(p.left, vec![1.0]);
    }

    #[test]
    fn fibonacci_value() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 1]]);
        let p = perron(&m, 1e-12).unwrap();
        assert!((p.value - super::super::golden::PHI).abs() < 1e-9);
        assert_eq!(golden_perron_value(&m).unwrap(), GoldenNumber::PHI);
        assert_eq!(
            golden_eigenvector(&m, GoldenNumber::PHI, false).unwrap(),
            vec![GoldenNumber::ONE, GoldenNumber::PHI]
        );
    }

    #[test]
    fn refuses_non_primitive() {
        assert!(matches!(
            perron(&IntMatrix::identity(2), 1e-12),
            Err(Error::NotPrimitive)
        ));
    }

    #[test]
    fn fibonacci_frequencies_sum_to_one() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 1]]);
        let f = frequencies(&m).unwrap();
        let sum: GoldenNumber = f.exact.iter().map(|x| x.num).sum();
        assert_eq!(sum, f.exact[0].den);
    }
}
