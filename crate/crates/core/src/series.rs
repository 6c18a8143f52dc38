//! Truncated power series with exact rational coefficients, and the
//! transform from level dimensions to annular multiplicities.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Power series known through degree `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl IntSeries {
    /// Series with the given coefficients, padded or truncated to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        IntSeries { coeffs }
    }

    pub fn from_integers(values: &[i64], order: usize) -> Self {
        Self::new(values.iter().map(|&v| rat(v)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![], order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![rat(1)], order)
    }

    /// c·z^k.
    pub fn monomial(c: i64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = rat(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Integer coefficients, if all are integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients as i64 where they fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.to_integers()?.iter().map(ToPrimitive::to_i64).collect()
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::new((0..=n).map(|i| self.coeff(i) + other.coeff(i)).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::new((0..=n).map(|i| self.coeff(i) - other.coeff(i)).collect(), n)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out, n)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = c0.recip();
        for i in 1..=n {
            let s: BigRational = (1..=i).map(|j| self.coeff(j) * &out[i - j]).sum();
            out[i] = -s / &c0;
        }
        Ok(Self::new(out, n))
    }

    /// f(g(z)) for g with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::Precondition("inner series must have zero constant term".into()));
        }
        let n = self.common_order(inner);
        // Horner from the top degree
        let mut acc = Self::zero(n);
        for i in (0..=n).rev() {
            acc = acc.mul(inner).add(&Self::new(vec![self.coeff(i)], n));
        }
        Ok(acc)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// C(z) = Σ Catalan(n) zⁿ.
pub fn catalan_series(order: usize) -> IntSeries {
    let c = (0..=order as u64)
        .map(|n| BigRational::from_integer(binom(2 * n, n) / (n + 1)))
        .collect();
    IntSeries::new(c, order)
}

/// 1/√(1−4z) = Σ C(2n, n) zⁿ.
pub fn sqrt_inv_series(order: usize) -> IntSeries {
    let c = (0..=order as u64)
        .map(|n| BigRational::from_integer(binom(2 * n, n)))
        .collect();
    IntSeries::new(c, order)
}

/// Which row of the module table a dimension series describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DimSeriesKind {
    LowWeight(usize),
    TemperleyLieb,
    Mu,
    ZeroPm,
}

/// Generating function of the level dimensions of a module.
pub fn module_dim_series(kind: DimSeriesKind, order: usize) -> IntSeries {
    match kind {
        DimSeriesKind::LowWeight(k) => IntSeries::monomial(1, k, order)
            .mul(&catalan_series(order).pow(2 * k))
            .mul(&sqrt_inv_series(order)),
        DimSeriesKind::TemperleyLieb => catalan_series(order),
        DimSeriesKind::Mu => sqrt_inv_series(order),
        DimSeriesKind::ZeroPm => sqrt_inv_series(order).scale(&BigRational::new(1.into(), 2.into())),
    }
}

/// Θ(q) = (1−q)/(1+q) · Φ(q/(1+q)²) + q.
pub fn theta_transform(phi: &IntSeries) -> Result<IntSeries> {
    let n = phi.order();
    let one_plus_q = IntSeries::from_integers(&[1, 1], n);
    let inv = one_plus_q.inverse()?;
    let sub = IntSeries::monomial(1, 1, n).mul(&inv).mul(&inv);
    let front = IntSeries::from_integers(&[1, -1], n).mul(&inv);
    Ok(front.mul(&phi.compose(&sub)?).add(&IntSeries::monomial(1, 1, n)))
}

/// a_0 … a_R from level dimensions by the closed formula
/// a_r = Σ_{n≤r} (−1)^{r−n} (2r/(r+n)) C(r+n, r−n) dim_n, plus 1 at r = 1.
pub fn annular_multiplicities(dims: &[i64], r_max: usize) -> Result<Vec<BigInt>> {
    annular_multiplicities_big(&dims.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>(), r_max)
}

pub fn annular_multiplicities_big(dims: &[BigInt], r_max: usize) -> Result<Vec<BigInt>> {
    if dims.first().is_none_or(|d| !d.is_one()) {
        return Err(Error::Precondition("dimension sequence must start with 1".into()));
    }
    if dims.len() <= r_max {
        return Err(Error::Precondition(format!(
            "need {} dimensions, got {}",
            r_max + 1,
            dims.len()
        )));
    }
    let mut out = vec![dims[0].clone()];
    for r in 1..=r_max as u64 {
        let mut acc = BigRational::zero();
        for n in 0..=r {
            let c = BigRational::new(BigInt::from(2 * r), BigInt::from(r + n))
                * BigRational::from_integer(binom(r + n, r - n) * &dims[n as usize]);
            if (r - n) % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        if r == 1 {
            acc += rat(1);
        }
        if !acc.is_integer() {
            return Err(Error::Invalid(format!("non-integral multiplicity at r = {r}")));
        }
        out.push(acc.to_integer());
    }
    Ok(out)
}

/// First index with a negative entry.
pub fn first_negative(a: &[BigInt]) -> Option<usize> {
    a.iter().position(Signed::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.to_i64().unwrap()
    }

    #[test]
    fn catalan_and_central() {
        assert_eq!(ints(&catalan_series(5)), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(ints(&sqrt_inv_series(4)), vec![1, 2, 6, 20, 70]);
        let c = catalan_series(12);
        let lhs = IntSeries::monomial(1, 1, 12).mul(&c).mul(&c);
        assert_eq!(lhs, c.sub(&IntSeries::one(12)));
    }

    #[test]
    fn theta_of_catalan_is_one() {
        let t = theta_transform(&catalan_series(16)).unwrap();
        assert_eq!(t, IntSeries::one(16));
    }

    #[test]
    fn e6_multiplicities() {
        let a = annular_multiplicities(&[1, 1, 2, 6, 21], 4).unwrap();
        assert_eq!(a[..4], [1, 0, 0, 1].map(BigInt::from));
        let t = theta_transform(&IntSeries::from_integers(&[1, 1, 2, 6, 21], 4)).unwrap();
        assert_eq!(t.to_integers().unwrap(), a);
    }

    #[test]
    fn module_rows() {
        let s = module_dim_series(DimSeriesKind::LowWeight(1), 6);
        for m in 1..=6u64 {
            assert_eq!(s.coeff(m as usize).to_integer(), binom(2 * m, m - 1));
        }
        assert!(annular_multiplicities(&[2, 1], 1).is_err());
    }
}
