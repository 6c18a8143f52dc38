//! Certified fixed-point enclosures of cos(2πj/N).
//!
//! A value `v` at precision `p` is a pair `(mid, rad)` of integers with
//! `|v·2^p − mid| ≤ rad`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclo::{field, Sign};

type Table = Arc<Vec<(BigInt, BigInt)>>;

fn table_cache() -> &'static Mutex<HashMap<(u32, u32), Table>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Table>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// arctan(1/x)·2^p with an error bound in ulps.
fn atan_inv(x: u64, p: u32) -> (BigInt, BigInt) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << p) / &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    (sum, BigInt::from(3 * k + 2))
}

/// π·2^p with an error bound.
fn pi_fixed(p: u32) -> (BigInt, BigInt) {
    let (a, ea) = atan_inv(5, p);
    let (b, eb) = atan_inv(239, p);
    (a * 16 - b * 4, ea * 16 + eb * 4)
}

/// cos(β) and sin(β) for 0 ≤ β ≤ π/4 given as an enclosure.
fn cos_sin_small(beta: &BigInt, ebeta: &BigInt, p: u32) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let one = BigInt::one() << p;
    let x2 = (beta * beta) >> p;
    let ex2 = ebeta * 2 + 2;
    let series = |start: BigInt, estart: BigInt, odd: bool| {
        let mut term = start;
        let mut eterm = estart;
        let mut sum = term.clone();
        let mut err = eterm.clone();
        let mut k: u64 = 1;
        while !term.is_zero() {
            let d = if odd {
                (2 * k) * (2 * k + 1)
            } else {
                (2 * k - 1) * (2 * k)
            };
            term = ((&term * &x2) >> p) / BigInt::from(d);
            eterm = &eterm + &ex2 + 2;
            if k % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            err += &eterm;
            k += 1;
        }
        (sum, err + 1)
    };
    let c = series(one, BigInt::zero(), false);
    let s = series(beta.clone(), ebeta.clone(), true);
    (c, s)
}

/// Enclosure of cos(2π·a/b) for 0 ≤ a/b ≤ 1/8 (as an angle fraction).
fn eval_octant(a: i64, b: i64, want_cos: bool, pi: &(BigInt, BigInt), p: u32) -> (BigInt, BigInt) {
    let beta = (&pi.0 * BigInt::from(2 * a)) / BigInt::from(b);
    let ebeta = (&pi.1 * BigInt::from(2 * a)) / BigInt::from(b) + 1;
    let (c, s) = cos_sin_small(&beta, &ebeta, p);
    if want_cos {
        c
    } else {
        s
    }
}

/// Enclosure of cos(2π j / n) at precision p.
fn cos_turn(j: i64, n: i64, pi: &(BigInt, BigInt), p: u32) -> (BigInt, BigInt) {
    // work with the fraction t = j/n in [0, 1/2] by symmetry
    let mut a = j.rem_euclid(n);
    let b = n;
    if 2 * a > b {
        a = b - a;
    }
    // now t = a/b in [0, 1/2]; compare against 1/8, 1/4, 3/8 using 8a vs b
    let a8 = 8 * a;
    if a8 <= b {
        eval_octant(a, b, true, pi, p)
    } else if a8 <= 2 * b {
        // cos(2πt) = sin(2π(1/4 − t))
        eval_octant(b - 4 * a, 4 * b, false, pi, p)
    } else if a8 <= 3 * b {
        // cos(2πt) = −sin(2π(t − 1/4))
        let (m, r) = eval_octant(4 * a - b, 4 * b, false, pi, p);
        (-m, r)
    } else {
        // cos(2πt) = −cos(2π(1/2 − t))
        let (m, r) = eval_octant(b - 2 * a, 2 * b, true, pi, p);
        (-m, r)
    }
}

fn cos_table(n: u32, p: u32) -> Table {
    if let Some(t) = table_cache().lock().unwrap().get(&(n, p)) {
        return t.clone();
    }
    let f = field(n);
    let pi = pi_fixed(p);
    let table: Vec<_> = (0..f.degree).map(|j| cos_turn(j as i64, n as i64, &pi, p)).collect();
    let table = Arc::new(table);
    table_cache().lock().unwrap().insert((n, p), table.clone());
    table
}

/// Sign of Σ num_j cos(2πj/n) for a nonzero real cyclotomic value.
pub(crate) fn real_sign(n: u32, num: &[BigInt]) -> Sign {
    let mut p = 64u32;
    loop {
        let table = cos_table(n, p);
        let mut mid = BigInt::zero();
        let mut rad = BigInt::zero();
        for (c, (m, r)) in num.iter().zip(table.iter()) {
            if c.is_zero() {
                continue;
            }
            mid += c * m;
            rad += c.abs() * r;
        }
        if mid.abs() > rad {
            return if mid.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        assert!(p < (1 << 22), "sign decision did not converge; value is probably zero");
        p *= 2;
    }
}
