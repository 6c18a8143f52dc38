//! Pointed bipartite graphs: loop counts, spectra, rotation censuses and the
//! annular-multiplicity screen for candidate principal graphs.
//!
//! Built-in graphs use vertices `v1 … vN`. `A_n` is the path v1–…–vn and
//! `D_n` the path v1–…–v(n−1) with vn also joined to v(n−2). `E_n` is the
//! path v1–…–v(n−1) with vn joined to v3. The basepoint is v1 for A and D,
//! and v(n−1) for E (the end farthest from the triple point).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::CycloNumber;
use crate::series::{annular_multiplicities_big, first_negative};
use crate::tlmodules::Census;

/// A bipartite graph with a distinguished even vertex. Edges are stored as
/// (even index, odd index) and may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedBipartiteGraph {
    pub name: String,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub basepoint: usize,
}

#[derive(Debug, Deserialize, Serialize)]
struct GraphJson {
    even: Vec<String>,
    odd: Vec<String>,
    edges: Vec<(String, String)>,
    basepoint: String,
}

type IntMatrix = Vec<Vec<BigInt>>;

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b.first().map_or(0, Vec::len);
    a.par_iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, r)| x * &r[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

/// Spectral information of ΛΛᵀ.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralData {
    /// Coefficients of det(t − ΛΛᵀ), constant term first.
    pub char_poly: Vec<String>,
    /// Certified bracket [lo, hi] of the largest eigenvalue ‖Λ‖².
    pub norm_sqr_bracket: (f64, f64),
    pub norm_approx: f64,
    /// Exact comparison of ‖Λ‖ with 2.
    pub norm_greater_than_two: bool,
}

/// Rotation orbits on based loops of a fixed length.
#[derive(Debug, Clone, Serialize)]
pub struct GraphCensus {
    pub k: usize,
    pub loops: usize,
    pub census: Census,
    pub edges: usize,
    /// Multiplicity of the eigenvalue e^{2πi a/k} of ρ, indexed by a.
    pub multiplicities: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    /// Some a_r is negative: not a principal graph.
    Obstruction { r: usize },
    /// All a_r ≥ 0 through the requested depth.
    Passes { through: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct ScreenReport {
    pub graph: String,
    pub loop_counts: Vec<String>,
    pub multiplicities: Vec<String>,
    pub first_negative: Option<usize>,
    /// The multiplicity test is meaningful only for ‖Λ‖ > 2.
    pub norm_greater_than_two: bool,
    pub verdict: Verdict,
}

impl ScreenReport {
    /// An obstruction that rules the graph out.
    pub fn rules_out(&self) -> bool {
        self.norm_greater_than_two && matches!(self.verdict, Verdict::Obstruction { .. })
    }
}

impl PointedBipartiteGraph {
    pub fn new(
        name: impl Into<String>,
        even: Vec<String>,
        odd: Vec<String>,
        edges: Vec<(usize, usize)>,
        basepoint: usize,
    ) -> Result<Self> {
        let g = PointedBipartiteGraph {
            name: name.into(),
            even,
            odd,
            edges,
            basepoint,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if self.basepoint >= self.even.len() {
            return Err(Error::Invalid("basepoint is not an even vertex".into()));
        }
        if let Some(&(u, v)) = self
            .edges
            .iter()
            .find(|&&(u, v)| u >= self.even.len() || v >= self.odd.len())
        {
            return Err(Error::Invalid(format!("edge ({u},{v}) out of range")));
        }
        // connectivity by union-find over even ∪ odd
        let n = self.even.len() + self.odd.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(u, v) in &self.edges {
            let a = find(&mut parent, u);
            let b = find(&mut parent, self.even.len() + v);
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if (0..n).any(|x| find(&mut parent, x) != root) {
            return Err(Error::Invalid("graph is not connected".into()));
        }
        Ok(())
    }

    /// Build from an undirected edge list on named vertices; classes are
    /// assigned by distance parity from the basepoint.
    pub fn from_edges(name: &str, vertices: &[&str], edges: &[(&str, &str)], basepoint: &str) -> Result<Self> {
        let idx: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut adj = vec![vec![]; vertices.len()];
        for (a, b) in edges {
            let (ia, ib) = (idx[a], idx[b]);
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        let base = *idx
            .get(basepoint)
            .ok_or_else(|| Error::Invalid(format!("unknown basepoint {basepoint}")))?;
        let mut parity = vec![None; vertices.len()];
        parity[base] = Some(0usize);
        let mut queue = std::collections::VecDeque::from([base]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match parity[y] {
                    None => {
                        parity[y] = Some(1 - parity[x].unwrap());
                        queue.push_back(y);
                    }
                    Some(p) if p == parity[x].unwrap() => return Err(Error::Invalid("graph is not bipartite".into())),
                    _ => {}
                }
            }
        }
        let mut even = vec![];
        let mut odd = vec![];
        let mut pos = vec![0; vertices.len()];
        for (i, v) in vertices.iter().enumerate() {
            match parity[i] {
                Some(0) => {
                    pos[i] = even.len();
                    even.push(v.to_string());
                }
                Some(_) => {
                    pos[i] = odd.len();
                    odd.push(v.to_string());
                }
                None => return Err(Error::Invalid("graph is not connected".into())),
            }
        }
        let e = edges
            .iter()
            .map(|(a, b)| {
                let (ia, ib) = (idx[a], idx[b]);
                if parity[ia] == Some(0) {
                    (pos[ia], pos[ib])
                } else {
                    (pos[ib], pos[ia])
                }
            })
            .collect();
        Self::new(name, even, odd, e, pos[base])
    }

    fn chain(name: &str, n: usize, extra: Option<(usize, usize)>, basepoint: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let path_len = if extra.is_some() { n - 1 } else { n };
        let mut edges: Vec<(&str, &str)> = (0..path_len - 1).map(|i| (refs[i], refs[i + 1])).collect();
        if let Some((a, b)) = extra {
            edges.push((refs[a - 1], refs[b - 1]));
        }
        Self::from_edges(name, &refs, &edges, refs[basepoint - 1])
    }

    pub fn a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("A_n needs n ≥ 2".into()));
        }
        Self::chain(&format!("A{n}"), n, None, 1)
    }

    pub fn d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::Invalid("D_n needs n ≥ 4".into()));
        }
        Self::chain(&format!("D{n}"), n, Some((n, n - 2)), 1)
    }

    pub fn e(n: usize) -> Result<Self> {
        if !(6..=8).contains(&n) {
            return Err(Error::Invalid("E_n is defined for n = 6, 7, 8".into()));
        }
        Self::chain(&format!("E{n}"), n, Some((n, 3)), n - 1)
    }

    /// Parse a built-in name such as `E6`, `A_5`, `d7`.
    pub fn builtin(name: &str) -> Result<Self> {
        let cleaned: String = name
            .chars()
            .filter(|c| *c != '_')
            .collect::<String>()
            .to_ascii_uppercase();
        let (family, rest) = cleaned.split_at(cleaned.chars().next().map_or(0, char::len_utf8));
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Invalid(format!("unknown graph {name}")))?;
        match family {
            "A" => Self::a(n),
            "D" => Self::d(n),
            "E" => Self::e(n),
            _ => Err(Error::Invalid(format!("unknown graph {name}"))),
        }
    }

    /// Parse the JSON form {"even", "odd", "edges", "basepoint"}.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            column: e.column(),
            message: format!("line {}: {e}", e.line()),
        })?;
        let even_idx: HashMap<&str, usize> = raw.even.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let odd_idx: HashMap<&str, usize> = raw.odd.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (i, (a, b)) in raw.edges.iter().enumerate() {
            let e = match (
                even_idx.get(a.as_str()),
                odd_idx.get(b.as_str()),
                odd_idx.get(a.as_str()),
                even_idx.get(b.as_str()),
            ) {
                (Some(&u), Some(&v), _, _) => (u, v),
                (_, _, Some(&v), Some(&u)) => (u, v),
                _ => {
                    return Err(Error::Invalid(format!(
                        "edges[{i}]: [{a}, {b}] does not join an even and an odd vertex"
                    )))
                }
            };
            edges.push(e);
        }
        let base = *even_idx
            .get(raw.basepoint.as_str())
            .ok_or_else(|| Error::Invalid(format!("basepoint: {} is not an even vertex", raw.basepoint)))?;
        Self::new("custom", raw.even, raw.odd, edges, base)
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson {
            even: self.even.clone(),
            odd: self.odd.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| (self.even[u].clone(), self.odd[v].clone()))
                .collect(),
            basepoint: self.even[self.basepoint].clone(),
        };
        serde_json::to_string_pretty(&raw).expect("graph serializes")
    }

    /// Λ, rows even vertices, columns odd vertices, entries edge multiplicities.
    pub fn lambda(&self) -> IntMatrix {
        let mut m = vec![vec![BigInt::zero(); self.odd.len()]; self.even.len()];
        for &(u, v) in &self.edges {
            m[u][v] += 1;
        }
        m
    }

    /// ΛΛᵀ.
    pub fn gram(&self) -> IntMatrix {
        let l = self.lambda();
        let lt: IntMatrix = (0..self.odd.len())
            .map(|j| l.iter().map(|r| r[j].clone()).collect())
            .collect();
        mat_mul(&l, &lt)
    }

    fn powers(&self, n_max: usize) -> Vec<IntMatrix> {
        let m = self.gram();
        let mut out = vec![identity(self.even.len())];
        for _ in 0..n_max {
            let next = mat_mul(out.last().unwrap(), &m);
            out.push(next);
        }
        out
    }

    /// w_n = number of loops of length 2n at the basepoint, n = 0..=N.
    pub fn loop_counts(&self, n_max: usize) -> Vec<BigInt> {
        self.powers(n_max)
            .iter()
            .map(|p| p[self.basepoint][self.basepoint].clone())
            .collect()
    }

    /// d_n = number of loops of length 2n based at any even vertex.
    pub fn all_starts_dims(&self, n_max: usize) -> Vec<BigInt> {
        self.powers(n_max)
            .iter()
            .map(|p| (0..p.len()).map(|i| p[i][i].clone()).sum())
            .collect()
    }

    /// Adjacency lists: even vertex → odd neighbours (with multiplicity), and back.
    fn adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut up = vec![vec![]; self.even.len()];
        let mut down = vec![vec![]; self.odd.len()];
        for &(u, v) in &self.edges {
            up[u].push(v);
            down[v].push(u);
        }
        (up, down)
    }

    /// Closed walks of length 2n from an even vertex, counted by direct search.
    pub fn count_walks(&self, start: usize, n: usize) -> u64 {
        let (up, down) = self.adjacency();
        fn go(x: usize, steps: usize, start: usize, up: &[Vec<usize>], down: &[Vec<usize>]) -> u64 {
            if steps == 0 {
                return u64::from(x == start);
            }
            up[x]
                .iter()
                .flat_map(|&y| down[y].iter())
                .map(|&z| go(z, steps - 1, start, up, down))
                .sum()
        }
        go(start, n, start, &up, &down)
    }

    /// Loops as edge sequences (e_0, …, e_{2k−1}) starting at an even vertex.
    pub fn enumerate_loops(&self, k: usize) -> Vec<Vec<usize>> {
        let mut by_even = vec![vec![]; self.even.len()];
        let mut by_odd = vec![vec![]; self.odd.len()];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            by_even[u].push(i);
            by_odd[v].push(i);
        }
        let edges = &self.edges;
        let mut out = Vec::new();
        type Adjacency<'a> = (&'a [Vec<usize>], &'a [Vec<usize>], &'a [(usize, usize)]);
        fn go(
            start: usize,
            x: usize,
            on_even: bool,
            k2: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
            ctx: Adjacency,
        ) {
            let (be, bo, edges) = ctx;
            if cur.len() == k2 {
                if on_even && x == start {
                    out.push(cur.clone());
                }
                return;
            }
            let choices = if on_even { &be[x] } else { &bo[x] };
            for &e in choices {
                let next = if on_even { edges[e].1 } else { edges[e].0 };
                cur.push(e);
                go(start, next, !on_even, k2, cur, out, ctx);
                cur.pop();
            }
        }
        for s in 0..self.even.len() {
            go(s, s, true, 2 * k, &mut Vec::new(), &mut out, (&by_even, &by_odd, edges));
        }
        out.sort();
        out
    }

    /// Orbits of the two-step rotation on level-k loops, and the eigenvalue
    /// multiplicities of that rotation as a linear map on loop space.
    pub fn rotation_census(&self, k: usize) -> Result<GraphCensus> {
        if k == 0 {
            return Err(Error::Precondition("k must be at least 1".into()));
        }
        let loops = self.enumerate_loops(k);
        let index: HashMap<&Vec<usize>, usize> = loops.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let perm: Vec<usize> = loops
            .iter()
            .map(|l| {
                let mut r = l.clone();
                r.rotate_left(2);
                index[&r]
            })
            .collect();
        // fix[j] = number of loops fixed by ρ^j
        let mut fix = vec![0i64; k];
        for (j, f) in fix.iter_mut().enumerate() {
            *f = loops
                .iter()
                .filter(|l| {
                    let mut r = (*l).clone();
                    r.rotate_left((2 * j) % l.len());
                    &r == *l
                })
                .count() as i64;
        }
        let mut multiplicities = Vec::with_capacity(k);
        for a in 0..k {
            let sum: CycloNumber = (0..k)
                .map(|j| CycloNumber::cyclo(k as u32, -((a * j) as i64)) * CycloNumber::from_integer(fix[j]))
                .sum();
            let m = (sum * CycloNumber::from_ratio(1, k as i64))
                .to_rational()
                .filter(|q| q.is_integer())
                .and_then(|q| q.to_integer().to_i64())
                .ok_or_else(|| Error::Invalid("eigenvalue multiplicity is not an integer".into()))?;
            multiplicities.push(m);
        }
        Ok(GraphCensus {
            k,
            loops: loops.len(),
            census: Census::from_permutation(&perm),
            edges: self.edges.len(),
            multiplicities,
        })
    }

    /// Characteristic polynomial det(t − ΛΛᵀ), constant term first.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let m: Vec<Vec<BigRational>> = self
            .gram()
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        faddeev_leverrier(&m)
    }

    /// Power sums Σλᵢⁿ recovered from the characteristic polynomial.
    pub fn power_sums(&self, n_max: usize) -> Vec<BigInt> {
        newton_power_sums(&self.char_poly(), n_max)
    }

    pub fn spectral_data(&self) -> SpectralData {
        let cp = self.char_poly();
        let (lo, hi) = largest_root_bracket(&cp, 40);
        SpectralData {
            char_poly: cp.iter().map(ToString::to_string).collect(),
            norm_sqr_bracket: (lo.to_f64().unwrap_or(f64::NAN), hi.to_f64().unwrap_or(f64::NAN)),
            norm_approx: hi.to_f64().unwrap_or(f64::NAN).sqrt(),
            norm_greater_than_two: roots_above(&cp, &BigRational::from_integer(4.into())) > 0,
        }
    }

    /// Exact test whether a real cyclotomic value is an eigenvalue of ΛΛᵀ.
    pub fn has_eigenvalue(&self, x: &CycloNumber) -> bool {
        let cp = self.char_poly();
        let mut acc = CycloNumber::zero();
        for c in cp.iter().rev() {
            acc = acc * x + CycloNumber::from_rational(&BigRational::from_integer(c.clone()));
        }
        acc.is_zero()
    }

    /// Annular multiplicity screen through depth R.
    pub fn screen(&self, r_max: usize) -> Result<ScreenReport> {
        let w = self.loop_counts(r_max);
        let a = annular_multiplicities_big(&w, r_max)?;
        let neg = first_negative(&a);
        let big = self.spectral_data().norm_greater_than_two;
        let verdict = if let Some(r) = neg {
            Verdict::Obstruction { r }
        } else {
            Verdict::Passes { through: r_max }
        };
        Ok(ScreenReport {
            graph: self.name.clone(),
            loop_counts: w.iter().map(ToString::to_string).collect(),
            multiplicities: a.iter().map(ToString::to_string).collect(),
            first_negative: neg,
            norm_greater_than_two: big,
            verdict,
        })
    }

    /// Distance from the basepoint to the nearest vertex of valence ≥ 3,
    /// plus one; `None` for graphs without such a vertex.
    pub fn critical_depth(&self) -> Option<usize> {
        let (up, down) = self.adjacency();
        let ne = self.even.len();
        let deg = |x: usize| if x < ne { up[x].len() } else { down[x - ne].len() };
        let mut dist = vec![usize::MAX; ne + self.odd.len()];
        dist[self.basepoint] = 0;
        let mut queue = std::collections::VecDeque::from([self.basepoint]);
        let mut best: Option<usize> = None;
        while let Some(x) = queue.pop_front() {
            if deg(x) >= 3 {
                best = Some(best.map_or(dist[x], |b: usize| b.min(dist[x])));
            }
            let nbrs: Vec<usize> = if x < ne {
                up[x].iter().map(|v| v + ne).collect()
            } else {
                down[x - ne].clone()
            };
            for y in nbrs {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        best.map(|d| d + 1)
    }
}

/// det(t·I − M) by the Faddeev–LeVerrier recursion.
fn faddeev_leverrier(m: &[Vec<BigRational>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &m[i][l] * &mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &m[i][l] * &next[l][i];
            }
        }
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
        mk = next;
    }
    coeffs.into_iter().map(|c| c.to_integer()).collect()
}

/// Newton's identities for a monic polynomial (constant term first).
fn newton_power_sums(cp: &[BigInt], n_max: usize) -> Vec<BigInt> {
    let deg = cp.len() - 1;
    // e-coefficients: t^deg + a_1 t^{deg−1} + … with a_i = cp[deg − i]
    let a = |i: usize| if i <= deg { cp[deg - i].clone() } else { BigInt::zero() };
    let mut p = vec![BigInt::from(deg)];
    for k in 1..=n_max {
        let mut s = -BigInt::from(k) * a(k);
        for i in 1..k {
            s -= a(i) * &p[k - i];
        }
        p.push(s);
    }
    p
}

type RatPoly = Vec<BigRational>;

fn eval(p: &RatPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn trim(mut p: RatPoly) -> RatPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &f * c;
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

fn sturm_chain(cp: &[BigInt]) -> Vec<RatPoly> {
    let p: RatPoly = cp.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    // square-free part is unnecessary: Sturm counts distinct roots either way
    let dp: RatPoly = trim(
        (1..p.len())
            .map(|i| &p[i] * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    );
    let mut chain = vec![trim(p), dp];
    loop {
        let n = chain.len();
        if chain[n - 1].len() == 1 && chain[n - 1][0].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].len() == 1 {
            break;
        }
        let r = poly_rem(&chain[n - 2], &chain[n - 1]);
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_changes(chain: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_changes_at_infinity(chain: &[RatPoly]) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .filter_map(|p| p.last().filter(|c| !c.is_zero()).map(|c| c.is_positive()))
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots strictly greater than x.
fn roots_above(cp: &[BigInt], x: &BigRational) -> usize {
    let chain = sturm_chain(cp);
    sign_changes(&chain, x) - sign_changes_at_infinity(&chain)
}

/// Bracket the largest real root of a polynomial with nonnegative roots.
fn largest_root_bracket(cp: &[BigInt], steps: usize) -> (BigRational, BigRational) {
    let chain = sturm_chain(cp);
    let inf = sign_changes_at_infinity(&chain);
    let above = |x: &BigRational| sign_changes(&chain, x) - inf;
    let mut hi = BigRational::one();
    while above(&hi) > 0 {
        hi *= BigRational::from_integer(2.into());
    }
    let mut lo = BigRational::zero();
    if above(&lo) == 0 {
        return (lo.clone(), lo);
    }
    for _ in 0..steps {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if above(&mid) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Convert exact counts to i64 (panics if they do not fit).
pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("fits in i64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let e6 = PointedBipartiteGraph::builtin("E6").unwrap();
        assert_eq!((e6.even.len(), e6.odd.len(), e6.edges.len()), (3, 3, 5));
        assert_eq!(e6.critical_depth(), Some(3));
        assert_eq!(PointedBipartiteGraph::builtin("e_7").unwrap().critical_depth(), Some(4));
        assert_eq!(PointedBipartiteGraph::builtin("E8").unwrap().critical_depth(), Some(5));
        assert_eq!(PointedBipartiteGraph::builtin("A5").unwrap().critical_depth(), None);
    }

    #[test]
    fn loop_counts_agree_with_walks() {
        for name in ["A2", "A5", "D5", "E6", "E7", "E8"] {
            let g = PointedBipartiteGraph::builtin(name).unwrap();
            let w = to_i64(&g.loop_counts(5));
            for (n, &wn) in w.iter().enumerate() {
                assert_eq!(g.count_walks(g.basepoint, n) as i64, wn, "{name} n={n}");
            }
        }
        let a2 = PointedBipartiteGraph::builtin("A2").unwrap();
        assert_eq!(to_i64(&a2.loop_counts(4)), vec![1; 5]);
    }

    #[test]
    fn e6_spectrum() {
        let e6 = PointedBipartiteGraph::builtin("E6").unwrap();
        // (t − 1)(t² − 4t + 1) = t³ − 5t² + 5t − 1
        assert_eq!(to_i64(&e6.char_poly()), vec![-1, 5, -5, 1]);
        assert_eq!(e6.power_sums(4), e6.all_starts_dims(4));
        let a3 = PointedBipartiteGraph::builtin("A3").unwrap().spectral_data();
        assert!((a3.norm_approx - 2f64.sqrt()).abs() < 1e-9);
        assert!(!a3.norm_greater_than_two);
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let e7 = PointedBipartiteGraph::builtin("E7").unwrap();
        let back = PointedBipartiteGraph::from_json(&e7.to_json()).unwrap();
        assert_eq!(back.loop_counts(6), e7.loop_counts(6));
        assert!(matches!(
            PointedBipartiteGraph::from_json("{\"even\": [1}"),
            Err(Error::Parse { .. })
        ));
        let bad = r#"{"even":["a","b"],"odd":["x"],"edges":[["a","b"]],"basepoint":"a"}"#;
        assert!(PointedBipartiteGraph::from_json(bad).is_err());
    }

    #[test]
    fn screening() {
        // loops of length ≤ 16 from the end of A_n are Catalan once n ≥ 9
        for n in 9..=12 {
            let r = PointedBipartiteGraph::a(n).unwrap().screen(8).unwrap();
            assert_eq!(r.verdict, Verdict::Passes { through: 8 }, "A{n}");
            assert!(!r.norm_greater_than_two);
        }
        let e7 = PointedBipartiteGraph::e(7).unwrap().screen(6).unwrap();
        assert_eq!(e7.multiplicities[1..5], ["0", "0", "0", "1"]);
        assert!(!e7.rules_out());
        let e6 = PointedBipartiteGraph::e(6).unwrap().screen(4).unwrap();
        assert_eq!(e6.multiplicities[3], "1");
    }
}
