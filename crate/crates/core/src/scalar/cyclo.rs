use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval;
use crate::error::{Error, Result};

/// Precomputed data for Q(ζ_N): the reductions of ζ^j for 0 ≤ j < N
/// in the power basis 1, ζ, …, ζ^{φ(N)-1}.
#[derive(Debug)]
pub(crate) struct Field {
    pub(crate) n: u32,
    pub(crate) degree: usize,
    pub(crate) powers: Vec<Vec<i64>>,
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn field(n: u32) -> Arc<Field> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(f) = field_cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(build_field(n));
    field_cache().write().unwrap().entry(n).or_insert(built).clone()
}

/// Integer coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let n = n as usize;
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d as u32));
        }
    }
    p
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn build_field(n: u32) -> Field {
    let phi = cyclotomic_polynomial(n);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; degree];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce by the monic Φ_N
        let top = cur[degree - 1];
        let mut next = vec![0i64; degree];
        next[1..degree].copy_from_slice(&cur[..(degree - 1)]);
        if degree == 1 {
            next[0] = 0;
        }
        for (k, slot) in next.iter_mut().enumerate() {
            *slot -= top * phi[k];
        }
        cur = next;
    }
    Field { n, degree, powers }
}

/// An exact element of the cyclotomic field Q(ζ_N).
///
/// Stored as `num / den` where `num` holds integer coefficients in the power
/// basis `1, ζ, …, ζ^{φ(N)-1}`, `den > 0` and the content of `num` is coprime
/// to `den`. The representation is canonical for a fixed conductor.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Result of an exact sign decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

fn gcd_all(num: &[BigInt], den: &BigInt) -> BigInt {
    let mut g = den.clone();
    for c in num {
        if g.is_one() {
            break;
        }
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    g
}

impl CycloNumber {
    fn from_parts(field: Arc<Field>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.degree);
        if num.iter().all(Zero::is_zero) {
            return CycloNumber {
                field,
                num,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let g = gcd_all(&num, &den);
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= g;
        }
        CycloNumber { field, num, den }
    }

    /// Zero in Q(ζ_1) = Q.
    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        CycloNumber {
            field: field(1),
            num: vec![BigInt::from(v)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(field(1), vec![q.numer().clone()], q.denom().clone())
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_parts(field(1), vec![BigInt::from(p)], BigInt::from(q))
    }

    /// ζ_N^j with ζ_N = e^{2πi/N}; negative exponents are allowed.
    pub fn cyclo(n: u32, j: i64) -> Self {
        let f = field(n);
        let idx = j.rem_euclid(n as i64) as usize;
        let num = f.powers[idx].iter().map(|&c| BigInt::from(c)).collect();
        CycloNumber {
            field: f,
            num,
            den: BigInt::one(),
        }
    }

    /// e^{iπ a/b}, a root of unity of order dividing 2b.
    pub fn exp_i_pi(a: i64, b: i64) -> Self {
        assert!(b > 0);
        Self::cyclo(2 * b as u32, a)
    }

    /// cos(aπ/b) as an exact real element.
    pub fn cos_pi(a: i64, b: i64) -> Self {
        let z = Self::exp_i_pi(a, b);
        (&z + &z.conj()) * Self::from_ratio(1, 2)
    }

    /// sin(aπ/b) as an exact real element.
    pub fn sin_pi(a: i64, b: i64) -> Self {
        let z = Self::exp_i_pi(a, b);
        let i = Self::cyclo(4, 1);
        (&z - &z.conj()) * (-i) * Self::from_ratio(1, 2)
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    /// Rational coefficients in the power basis of Q(ζ_N), lowest degree first.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Re-express in Q(ζ_M) for a multiple M of the current conductor.
    pub fn promote(&self, m: u32) -> Self {
        let n = self.field.n;
        if m == n {
            return self.clone();
        }
        assert!(m.is_multiple_of(n), "conductor {m} is not a multiple of {n}");
        let step = (m / n) as usize;
        let f = field(m);
        let mut num = vec![BigInt::zero(); f.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, &p) in f.powers[(j * step) % m as usize].iter().enumerate() {
                if p != 0 {
                    num[k] += c * p;
                }
            }
        }
        CycloNumber {
            field: f,
            num,
            den: self.den.clone(),
        }
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.field.n == b.field.n {
            return (a.clone(), b.clone());
        }
        let l = (a.field.n as u64).lcm(&(b.field.n as u64)) as u32;
        (a.promote(l), b.promote(l))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.field.n != other.field.n {
            let (a, b) = Self::align(self, other);
            return a.add_impl(&b, negate);
        }
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Self::from_parts(self.field.clone(), num, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.field.n != other.field.n {
            if self.field.n == 1 {
                return other.scale_rational(&self.num[0], &self.den);
            }
            if other.field.n == 1 {
                return self.scale_rational(&other.num[0], &other.den);
            }
            let (a, b) = Self::align(self, other);
            return a.mul_impl(&b);
        }
        let d = self.field.degree;
        if d == 1 {
            return Self::from_parts(
                self.field.clone(),
                vec![&self.num[0] * &other.num[0]],
                &self.den * &other.den,
            );
        }
        if other.is_rational() {
            return self.scale_rational(&other.num[0], &other.den);
        }
        if self.is_rational() {
            return other.scale_rational(&self.num[0], &self.den);
        }
        let mut conv = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let num = self.reduce(conv);
        Self::from_parts(self.field.clone(), num, &self.den * &other.den)
    }

    /// Reduce a coefficient vector on ζ^0, ζ^1, … to the power basis.
    fn reduce(&self, mut conv: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.field.degree;
        let n = self.field.n as usize;
        if conv.len() <= d {
            conv.resize(d, BigInt::zero());
            return conv;
        }
        let mut out: Vec<BigInt> = conv.drain(..d).collect();
        for (off, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, &p) in self.field.powers[(d + off) % n].iter().enumerate() {
                if p != 0 {
                    out[k] += &c * p;
                }
            }
        }
        out
    }

    fn scale_rational(&self, p: &BigInt, q: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * p).collect();
        Self::from_parts(self.field.clone(), num, &self.den * q)
    }

    /// Image under the Galois automorphism ζ ↦ ζ^a (gcd(a, N) = 1).
    pub fn galois(&self, a: i64) -> Self {
        let n = self.field.n as i64;
        let mut conv = vec![BigInt::zero(); n as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                conv[((j as i64) * a).rem_euclid(n) as usize] += c;
            }
        }
        let num = self.reduce(conv);
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Complex conjugation ζ^j ↦ ζ^{N-j}.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.conj() == *self
    }

    /// Multiplicative inverse via the product of the other Galois conjugates.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_parts(
                self.field.clone(),
                {
                    let mut v = vec![BigInt::zero(); self.field.degree];
                    v[0] = self.den.clone();
                    v
                },
                self.num[0].clone(),
            ));
        }
        let n = self.field.n as i64;
        let mut others = Self::from_integer(1);
        for a in 2..n {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a);
            }
        }
        let norm = (self * &others).to_rational().expect("field norm is rational");
        let inv_norm = BigRational::one() / norm;
        Ok(others.scale_rational(inv_norm.numer(), inv_norm.denom()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_rational() {
            if other.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.scale_rational(&other.den, &other.num[0]));
        }
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Real part (x + x̄)/2.
    pub fn re(&self) -> Self {
        (self + &self.conj()) * Self::from_ratio(1, 2)
    }

    /// |x|² = x·x̄, always real.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    /// Exact sign of a real element; nonzero values are separated from 0 by
    /// interval evaluation with doubling precision.
    pub fn sign(&self) -> Result<Sign> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.is_zero() {
            return Ok(Sign::Zero);
        }
        if self.is_rational() {
            return Ok(if self.num[0].is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            });
        }
        Ok(interval::real_sign(self.field.n, &self.num))
    }

    pub fn is_positive(&self) -> Result<bool> {
        Ok(self.sign()? == Sign::Positive)
    }

    /// Floating point image at ζ_N = e^{2πi/N}.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.n as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = BigRational::new(c.clone(), self.den.clone())
                .to_f64()
                .unwrap_or_else(|| c.to_f64().unwrap_or(f64::NAN) / den);
            let t = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_complex().0
    }

    /// Structural key usable for hashing (conductor-sensitive).
    pub fn key(&self) -> (u32, Vec<BigInt>, BigInt) {
        (self.field.n, self.num.clone(), self.den.clone())
    }

    /// Decimal preview such as `0.9659258263` or `0.5+0.8660254038i`.
    pub fn approx_string(&self, digits: usize) -> String {
        let (re, im) = self.to_complex();
        let clean = |v: f64| {
            if v.abs() < 0.5 * 10f64.powi(-(digits as i32)) {
                0.0
            } else {
                v
            }
        };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.digits$}")
        } else if re == 0.0 {
            format!("{im:.digits$}i")
        } else {
            format!("{re:.digits$}{im:+.digits$}i")
        }
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.field.n == other.field.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Self::align(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycloNumber {}

impl Default for CycloNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycloNumber {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigRational> for CycloNumber {
    fn from(q: BigRational) -> Self {
        Self::from_rational(&q)
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(
                f,
                "{}",
                fmt_rational(&BigRational::new(self.num[0].clone(), self.den.clone()))
            );
        }
        let n = self.field.n;
        let mut first = true;
        for (j, q) in self.coefficients().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", fmt_rational(&mag))?;
                }
                if j == 1 {
                    write!(f, "z{n}")?;
                } else {
                    write!(f, "z{n}^{j}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a CycloNumber> for &'a CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &'a CycloNumber) -> CycloNumber {
                let f: fn(&CycloNumber, &CycloNumber) -> CycloNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &'a CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycloNumber> for &'a CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloNumber> for CycloNumber {
    fn mul_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycloNumber {
    fn sum<I: Iterator<Item = CycloNumber>>(iter: I) -> Self {
        iter.fold(CycloNumber::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for CycloNumber {
    fn product<I: Iterator<Item = CycloNumber>>(iter: I) -> Self {
        iter.fold(CycloNumber::one(), |a, b| a * b)
    }
}

/// Convenience constructor for ζ_N^j.
pub fn cyclo(n: u32, j: i64) -> CycloNumber {
    CycloNumber::cyclo(n, j)
}

/// The Chebyshev numbers P_0 = 0, P_1 = 1, P_{k+1} = δP_k − P_{k−1}.
pub fn chebyshev(k: usize, delta: &CycloNumber) -> CycloNumber {
    chebyshev_table(k, delta).pop().unwrap()
}

/// P_0, …, P_k at δ.
pub fn chebyshev_table(k: usize, delta: &CycloNumber) -> Vec<CycloNumber> {
    let mut out = vec![CycloNumber::zero()];
    if k == 0 {
        return out;
    }
    out.push(CycloNumber::one());
    for i in 1..k {
        let next = delta * &out[i] - &out[i - 1];
        out.push(next);
    }
    out
}

impl serde::Serialize for CycloNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn i_squared() {
        let i = cyclo(4, 1);
        assert_eq!(&i * &i, CycloNumber::from_integer(-1));
    }

    #[test]
    fn fifth_roots_sum_to_zero() {
        let s: CycloNumber = (0..5).map(|j| cyclo(5, j)).sum();
        assert!(s.is_zero());
    }

    #[test]
    fn twice_cosine_is_real() {
        let x = cyclo(24, 1) + cyclo(24, 23);
        assert!(x.is_real());
        assert!((x.to_f64() - 2.0 * (std::f64::consts::PI / 12.0).cos()).abs() < 1e-12);
    }

    #[test]
    fn mixed_conductors_promote() {
        let a = cyclo(5, 1);
        let b = cyclo(60, 12);
        assert_eq!(a, b);
        assert_eq!((&a * &cyclo(4, 1)).conductor(), 20);
    }

    #[test]
    fn inverse_roundtrip() {
        let x = cyclo(60, 7) + CycloNumber::from_ratio(3, 2) * cyclo(60, 11);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn chebyshev_values() {
        let three = CycloNumber::from_integer(3);
        let t = chebyshev_table(4, &three);
        let ints: Vec<_> = t.iter().map(|v| v.to_rational().unwrap().to_integer()).collect();
        assert_eq!(
            ints,
            vec![0, 1, 3, 8, 21].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn chebyshev_vanishes_at_root() {
        let d = CycloNumber::cos_pi(1, 12) * CycloNumber::from_integer(2);
        assert!(chebyshev(12, &d).is_zero());
        assert!(!chebyshev(11, &d).is_zero());
    }

    #[test]
    fn signs() {
        let a = CycloNumber::cos_pi(1, 12) - CycloNumber::cos_pi(1, 11);
        assert_eq!(a.sign().unwrap(), Sign::Positive);
        assert_eq!((-a).sign().unwrap(), Sign::Negative);
        assert_eq!(CycloNumber::zero().sign().unwrap(), Sign::Zero);
        assert_eq!(cyclo(3, 1).sign(), Err(Error::NotReal));
    }

    #[test]
    fn display_forms() {
        assert_eq!(CycloNumber::from_ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(cyclo(4, 1).to_string(), "z4");
        assert_eq!(
            (cyclo(8, 1) * CycloNumber::from_integer(2) - CycloNumber::one()).to_string(),
            "-1 + 2*z8"
        );
    }
}
