//! The Temperley-Lieb algebra TL_n on the disc.
//!
//! A diagram on `2n` boundary points is a partner array in circular order:
//! index `i < n` is the i-th top point from the left, and index `2n-1-b` is
//! the b-th bottom point from the left. The product `a·b` stacks `a` above
//! `b`; each closed loop contributes a factor δ.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{chebyshev_table, CycloNumber};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TLDiagram {
    n: usize,
    partner: Vec<usize>,
}

fn is_noncrossing_matching(partner: &[usize]) -> bool {
    let mut stack = Vec::new();
    for (x, &p) in partner.iter().enumerate() {
        if p >= partner.len() || p == x || partner[p] != x {
            return false;
        }
        if p > x {
            stack.push(x);
        } else if stack.pop() != Some(p) {
            return false;
        }
    }
    stack.is_empty()
}

impl TLDiagram {
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        if !partner.len().is_multiple_of(2) || !is_noncrossing_matching(&partner) {
            return Err(Error::Invalid("not a noncrossing perfect matching".into()));
        }
        Ok(TLDiagram {
            n: partner.len() / 2,
            partner,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    pub fn top(&self, i: usize) -> usize {
        i
    }

    pub fn bottom(&self, b: usize) -> usize {
        2 * self.n - 1 - b
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|x| 2 * n - 1 - x).collect();
        TLDiagram { n, partner }
    }

    /// The generator E_i (1 ≤ i ≤ n−1) capping strands i and i+1 top and bottom.
    pub fn e(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("E_{i} in TL_{n}")));
        }
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        let (ba, bb) = (d.bottom(a), d.bottom(b));
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[ba] = bb;
        d.partner[bb] = ba;
        Ok(d)
    }

    /// Stack `self` above `other`; returns the diagram and the loop count.
    pub fn compose(&self, other: &Self) -> Result<(Self, usize)> {
        if self.n != other.n {
            return Err(Error::BoundaryMismatch(format!("TL_{} vs TL_{}", self.n, other.n)));
        }
        let n = self.n;
        let last = 2 * n - 1;
        let mut res = vec![usize::MAX; 2 * n];
        let mut seen_mid = vec![false; n];
        // Walk from a result endpoint; `in_top` says which diagram we are in.
        let walk = |start: usize, mut in_top: bool, seen: &mut Vec<bool>| -> usize {
            let mut x = start;
            loop {
                if in_top {
                    let q = self.partner[x];
                    if q < n {
                        return q;
                    }
                    let pos = last - q;
                    seen[pos] = true;
                    x = pos;
                    in_top = false;
                } else {
                    let q = other.partner[x];
                    if q >= n {
                        return q;
                    }
                    seen[q] = true;
                    x = last - q;
                    in_top = true;
                }
            }
        };
        for start in 0..2 * n {
            if res[start] != usize::MAX {
                continue;
            }
            let end = walk(start, start < n, &mut seen_mid);
            res[start] = end;
            res[end] = start;
        }
        let mut loops = 0;
        for m in 0..n {
            if seen_mid[m] {
                continue;
            }
            loops += 1;
            let mut pos = m;
            loop {
                seen_mid[pos] = true;
                // go down through `other` from its top point `pos`
                let q = other.partner[pos];
                debug_assert!(q < n);
                seen_mid[q] = true;
                // up through `self` from its bottom point at position q
                let r = self.partner[last - q];
                debug_assert!(r >= n);
                pos = last - r;
                if pos == m {
                    break;
                }
            }
        }
        Ok((TLDiagram { n, partner: res }, loops))
    }

    /// Reflection in a horizontal line.
    pub fn star(&self) -> Self {
        let last = 2 * self.n - 1;
        let mut partner = vec![0; 2 * self.n];
        for (x, &p) in self.partner.iter().enumerate() {
            partner[last - x] = last - p;
        }
        TLDiagram { n: self.n, partner }
    }

    /// Rotation of the boundary points by `k` clicks.
    pub fn rotate(&self, k: isize) -> Self {
        let m = 2 * self.n as isize;
        let sh = |x: usize| ((x as isize + k).rem_euclid(m)) as usize;
        let mut partner = vec![0; 2 * self.n];
        for (x, &p) in self.partner.iter().enumerate() {
            partner[sh(x)] = sh(p);
        }
        TLDiagram { n: self.n, partner }
    }

    /// Add a vertical strand on the right.
    pub fn extend(&self) -> Self {
        let n = self.n;
        let map = |x: usize| if x < n { x } else { x + 2 };
        let mut partner = vec![0; 2 * n + 2];
        for (x, &p) in self.partner.iter().enumerate() {
            partner[map(x)] = map(p);
        }
        partner[n] = n + 1;
        partner[n + 1] = n;
        TLDiagram { n: n + 1, partner }
    }

    /// Number of strands joining top to bottom.
    pub fn through_strings(&self) -> usize {
        (0..self.n).filter(|&i| self.partner[i] >= self.n).count()
    }
}

fn matchings(points: &[usize], out_partner: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
    if points.is_empty() {
        acc.push(out_partner.clone());
        return;
    }
    let first = points[0];
    for k in (1..points.len()).step_by(2) {
        out_partner[first] = points[k];
        out_partner[points[k]] = first;
        let inner = &points[1..k];
        let outer = &points[k + 1..];
        let mut inner_results = Vec::new();
        matchings(inner, out_partner, &mut inner_results);
        for ir in inner_results {
            let mut tmp = ir;
            matchings(outer, &mut tmp, acc);
        }
    }
}

impl std::fmt::Display for TLDiagram {
    /// Pairs of points, top points t1..tn and bottom points b1..bn from the left.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = |x: usize| {
            if x < self.n {
                format!("t{}", x + 1)
            } else {
                format!("b{}", 2 * self.n - x)
            }
        };
        let pairs: Vec<String> = (0..2 * self.n)
            .filter(|&x| x < self.partner[x])
            .map(|x| format!("{}-{}", label(x), label(self.partner[x])))
            .collect();
        write!(f, "{}", pairs.join(" "))
    }
}

/// All Catalan(n) diagrams of TL_n in a deterministic recursive order.
pub fn enumerate_tl_basis(n: usize) -> Vec<TLDiagram> {
    let pts: Vec<usize> = (0..2 * n).collect();
    let mut acc = Vec::new();
    let mut scratch = vec![0; 2 * n];
    matchings(&pts, &mut scratch, &mut acc);
    acc.into_iter().map(|partner| TLDiagram { n, partner }).collect()
}

/// A formal linear combination of TL_n diagrams.
#[derive(Debug, Clone, PartialEq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<TLDiagram, CycloNumber>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        TLElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: TLDiagram) -> Self {
        let n = d.n;
        let mut terms = BTreeMap::new();
        terms.insert(d, CycloNumber::one());
        TLElement { n, terms }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(TLDiagram::identity(n))
    }

    pub fn e(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_diagram(TLDiagram::e(n, i)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<TLDiagram, CycloNumber> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &TLDiagram) -> CycloNumber {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, d: TLDiagram, c: &CycloNumber) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::BoundaryMismatch("TL elements of different sizes".into()));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycloNumber) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        TLElement {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c * s)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&CycloNumber::from_integer(-1)))
    }

    /// Product with loop value δ.
    pub fn multiply(&self, other: &Self, delta: &CycloNumber) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::BoundaryMismatch(format!("TL_{} vs TL_{}", self.n, other.n)));
        }
        let mut powers = vec![CycloNumber::one()];
        let mut acc: HashMap<TLDiagram, CycloNumber> = HashMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let (d, loops) = da.compose(db)?;
                while powers.len() <= loops {
                    let next = powers.last().unwrap() * delta;
                    powers.push(next);
                }
                let c = ca * cb * &powers[loops];
                *acc.entry(d).or_default() += &c;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TLElement { n: self.n, terms })
    }

    /// Antilinear reflection.
    pub fn star(&self) -> Self {
        TLElement {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.star(), c.conj())).collect(),
        }
    }

    /// Linear extension of the one-click rotation of boundary points.
    pub fn rotate(&self, k: isize) -> Self {
        TLElement {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.rotate(k), c.clone())).collect(),
        }
    }

    pub fn extend(&self) -> Self {
        TLElement {
            n: self.n + 1,
            terms: self.terms.iter().map(|(d, c)| (d.extend(), c.clone())).collect(),
        }
    }
}

type JwKey = (usize, (u32, Vec<BigInt>, BigInt));

fn jw_cache() -> &'static RwLock<HashMap<JwKey, Arc<TLElement>>> {
    static CACHE: OnceLock<RwLock<HashMap<JwKey, Arc<TLElement>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Jones-Wenzl idempotent p_n by p_{k+1} = p_k − (P_k/P_{k+1}) p_k E_k p_k.
pub fn jones_wenzl(n: usize, delta: &CycloNumber) -> Result<TLElement> {
    Ok((*jones_wenzl_shared(n, delta)?).clone())
}

/// As [`jones_wenzl`] but returning the cached shared value.
pub fn jones_wenzl_shared(n: usize, delta: &CycloNumber) -> Result<Arc<TLElement>> {
    let key = |k: usize| (k, delta.key());
    if let Some(p) = jw_cache().read().unwrap().get(&key(n)) {
        return Ok(p.clone());
    }
    let cheb = chebyshev_table(n.max(1), delta);
    if let Some(k) = (2..=n).find(|&k| cheb[k].is_zero()) {
        return Err(Error::VanishingChebyshev(k));
    }
    // start from the largest cached p_k with k ≤ n
    let (mut k, mut p) = {
        let cache = jw_cache().read().unwrap();
        (1..=n)
            .rev()
            .find_map(|k| cache.get(&key(k)).map(|p| (k, (**p).clone())))
            .unwrap_or((n.min(1), TLElement::identity(n.min(1))))
    };
    while k < n {
        let ext = p.extend();
        let e = TLElement::e(k + 1, k)?;
        let pep = ext.multiply(&e, delta)?.multiply(&ext, delta)?;
        let ratio = cheb[k].checked_div(&cheb[k + 1])?;
        p = ext.sub(&pep.scale(&ratio))?;
        k += 1;
        jw_cache()
            .write()
            .unwrap()
            .entry(key(k))
            .or_insert_with(|| Arc::new(p.clone()));
    }
    Ok(jw_cache()
        .read()
        .unwrap()
        .get(&key(n))
        .cloned()
        .unwrap_or_else(|| Arc::new(p)))
}

/// The diagram of the word E_{n−1}E_{n−2}…E_r in TL_n.
pub fn chain_word(n: usize, r: usize) -> Result<TLDiagram> {
    if r == 0 || r >= n {
        return Err(Error::IndexOutOfRange(format!(
            "chain E_{}..E_{r} in TL_{n}",
            n.saturating_sub(1)
        )));
    }
    let mut d = TLDiagram::e(n, n - 1)?;
    for i in (r..n - 1).rev() {
        let (next, loops) = d.compose(&TLDiagram::e(n, i)?)?;
        debug_assert_eq!(loops, 0);
        d = next;
    }
    Ok(d)
}

/// Coefficient of E_{n−1}…E_r in p_n: (−1)^{n−r} P_r(δ)/P_n(δ).
pub fn jw_chain_coefficient(n: usize, r: usize, delta: &CycloNumber) -> Result<CycloNumber> {
    if r == 0 || r >= n {
        return Err(Error::IndexOutOfRange(format!("r = {r} for n = {n}")));
    }
    let cheb = chebyshev_table(n, delta);
    if cheb[n].is_zero() {
        return Err(Error::VanishingChebyshev(n));
    }
    let v = cheb[r].checked_div(&cheb[n])?;
    Ok(if (n - r).is_multiple_of(2) { v } else { -v })
}

fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Generic dimension of the irreducible TL_n-module with t through strings.
pub fn tl_dim(n: usize, t: usize) -> Result<u128> {
    if t > n || !(n - t).is_multiple_of(2) {
        return Err(Error::Parity(format!("n = {n}, t = {t}")));
    }
    let (n, t) = (n as i64, t as i64);
    Ok(binomial(n, (n - t) / 2) - binomial(n, (n - t - 2) / 2))
}

/// Dimension of V_n^t at δ = 2cos(π/m): the truncated Bratteli recursion
/// with V_n^n = 1 for n ≤ m−2 and nothing at t ≥ m−1.
pub fn tl_dim_at_root(n: usize, t: usize, m: usize) -> Result<u128> {
    if m < 3 {
        return Err(Error::Precondition(format!(
            "root parameter m = {m} must be at least 3"
        )));
    }
    if t > n || !(n - t).is_multiple_of(2) {
        return Err(Error::Parity(format!("n = {n}, t = {t}")));
    }
    // row[t] = dim V_k^t, built up from k = 0
    let mut row = vec![0u128; n + 2];
    row[0] = 1;
    for k in 1..=n {
        let mut next = vec![0u128; n + 2];
        for s in 0..=k {
            if s + 1 >= m || (k - s) % 2 != 0 {
                continue;
            }
            let left = if s >= 1 { row[s - 1] } else { 0 };
            next[s] = left + row[s + 1];
        }
        row = next;
    }
    Ok(row[t])
}

/// The Catalan number C_n = dim TL_n.
pub fn catalan(n: usize) -> u128 {
    binomial(2 * n as i64, n as i64) / (n as u128 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three() -> CycloNumber {
        CycloNumber::from_integer(3)
    }

    #[test]
    fn display_labels_points() {
        assert_eq!(TLDiagram::identity(2).to_string(), "t1-b1 t2-b2");
        assert_eq!(TLDiagram::e(3, 1).unwrap().to_string(), "t1-t2 t3-b3 b2-b1");
    }

    #[test]
    fn basis_sizes() {
        let sizes: Vec<usize> = (0..=8).map(|n| enumerate_tl_basis(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        let b = enumerate_tl_basis(4);
        assert!(b.iter().all(|d| is_noncrossing_matching(&d.partner)));
    }

    #[test]
    fn generator_relations() {
        let d = three();
        let n = 4;
        let e = |i| TLElement::e(n, i).unwrap();
        assert_eq!(e(1).multiply(&e(1), &d).unwrap(), e(1).scale(&d));
        assert_eq!(e(1).multiply(&e(2), &d).unwrap().multiply(&e(1), &d).unwrap(), e(1));
        assert_eq!(e(1).multiply(&e(3), &d).unwrap(), e(3).multiply(&e(1), &d).unwrap());
    }

    #[test]
    fn star_reverses_words() {
        let d = three();
        let e1 = TLElement::e(3, 1).unwrap();
        let e2 = TLElement::e(3, 2).unwrap();
        let e12 = e1.multiply(&e2, &d).unwrap();
        assert_eq!(e12.star(), e2.multiply(&e1, &d).unwrap());
        assert_eq!(e2.star(), e2);
    }

    #[test]
    fn jw_two_and_three() {
        let d = three();
        let p2 = jones_wenzl(2, &d).unwrap();
        assert_eq!(
            p2.coefficient(&TLDiagram::e(2, 1).unwrap()),
            CycloNumber::from_ratio(-1, 3)
        );
        let p3 = jones_wenzl(3, &d).unwrap();
        let w = chain_word(3, 1).unwrap();
        assert_eq!(p3.coefficient(&w), CycloNumber::from_ratio(1, 8));
        assert_eq!(jw_chain_coefficient(3, 1, &d).unwrap(), CycloNumber::from_ratio(1, 8));
        assert_eq!(jw_chain_coefficient(4, 2, &d).unwrap(), CycloNumber::from_ratio(1, 7));
    }

    #[test]
    fn jw_reports_vanishing_denominator() {
        let d = CycloNumber::cos_pi(1, 4) * CycloNumber::from_integer(2);
        assert_eq!(jones_wenzl(5, &d).unwrap_err(), Error::VanishingChebyshev(4));
    }

    #[test]
    fn dimensions() {
        assert_eq!(tl_dim(4, 2).unwrap(), 3);
        assert!(tl_dim(4, 1).is_err());
        for m in 3..10 {
            for n in 0..=(m - 2) {
                assert_eq!(tl_dim_at_root(n, n, m).unwrap(), 1);
            }
            assert_eq!(tl_dim_at_root(m - 1, m - 1, m).unwrap(), 0);
            for n in 0..14 {
                for t in (n % 2..=n).step_by(2) {
                    assert!(tl_dim_at_root(n, t, m).unwrap() <= tl_dim(n, t).unwrap());
                }
            }
        }
        assert_eq!(tl_dim_at_root(18, 10, 30).unwrap(), 2244);
    }
}
