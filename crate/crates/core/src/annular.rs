//! Annular tangles without internal labels.
//!
//! Boundary points on each circle are numbered 0, 1, … counterclockwise
//! starting just after the marked region `*`; point `i` of a boundary with
//! `P` points sits at angle `(2i+1)/(2P)` of a full turn. An arc `(a, b)`
//! encloses the counterclockwise run of points strictly between `a` and `b`
//! (on the side away from the other boundary). Through strings are listed by
//! a single offset `s`: the j-th inner through point (in increasing order) is
//! joined to the `(j+s) mod t`-th outer through point. Full twists of the
//! through strings are trivial, so `s` is taken modulo `t`.
//!
//! Shading: only the outer marked region's shading is stored. The inner one
//! is determined by the picture (parity of string crossings along a radial
//! cut at angle 0).
//!
//! Small-level conventions: for a level with two points, the cap of ϵ_1
//! (and the caps of F_1, ε_1) encloses the region between points 1 and 2,
//! which is shaded; index 2 encloses the marked region instead.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::CycloNumber;

/// A boundary circle of an annular tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Boundary {
    pub points: usize,
    /// Whether the marked region next to this boundary is shaded.
    pub shaded: bool,
}

/// A level of the annular category: `Pos(m)` has 2m points with the marked
/// region unshaded; `Plus`/`Minus` have no points and a shaded/unshaded region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    Plus,
    Minus,
    Pos(usize),
}

impl Level {
    pub fn boundary(self) -> Boundary {
        match self {
            Level::Plus => Boundary {
                points: 0,
                shaded: true,
            },
            Level::Minus => Boundary {
                points: 0,
                shaded: false,
            },
            Level::Pos(m) => Boundary {
                points: 2 * m,
                shaded: false,
            },
        }
    }

    pub fn from_boundary(b: Boundary) -> Option<Level> {
        match (b.points, b.shaded) {
            (0, true) => Some(Level::Plus),
            (0, false) => Some(Level::Minus),
            (p, false) if p % 2 == 0 => Some(Level::Pos(p / 2)),
            _ => None,
        }
    }

    /// Half the number of boundary points.
    pub fn half(self) -> usize {
        match self {
            Level::Pos(m) => m,
            _ => 0,
        }
    }
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Level::Plus => write!(f, "+"),
            Level::Minus => write!(f, "-"),
            Level::Pos(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AnnularJson", into = "AnnularJson")]
pub struct AnnularDiagram {
    outer_points: usize,
    inner_points: usize,
    outer_arcs: Vec<(usize, usize)>,
    inner_arcs: Vec<(usize, usize)>,
    offset: usize,
    circles: usize,
    outer_shaded: bool,
}

/// Shading data on both boundaries, as serialized.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Stars {
    pub outer_points: usize,
    pub inner_points: usize,
    pub outer_shaded: bool,
    pub inner_shaded: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AnnularJson {
    outer_arcs: Vec<(usize, usize)>,
    inner_arcs: Vec<(usize, usize)>,
    offset: usize,
    circles: usize,
    stars: Stars,
}

impl From<AnnularDiagram> for AnnularJson {
    fn from(d: AnnularDiagram) -> Self {
        AnnularJson {
            stars: Stars {
                outer_points: d.outer_points,
                inner_points: d.inner_points,
                outer_shaded: d.outer_shaded,
                inner_shaded: d.inner_shaded(),
            },
            outer_arcs: d.outer_arcs,
            inner_arcs: d.inner_arcs,
            offset: d.offset,
            circles: d.circles,
        }
    }
}

impl TryFrom<AnnularJson> for AnnularDiagram {
    type Error = Error;
    fn try_from(j: AnnularJson) -> Result<Self> {
        let d = AnnularDiagram::new(
            j.stars.outer_points,
            j.stars.inner_points,
            j.outer_arcs,
            j.inner_arcs,
            j.offset,
            j.circles,
            j.stars.outer_shaded,
        )?;
        if d.inner_shaded() != j.stars.inner_shaded {
            return Err(Error::ShadingMismatch(
                "inner shading inconsistent with the strings".into(),
            ));
        }
        Ok(d)
    }
}

/// A diagram with a scalar weight, the output of composition.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDiagram {
    pub diagram: AnnularDiagram,
    pub weight: CycloNumber,
}

/// Named generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// ϵ_i, an (m−1, m) tangle capping inner points i, i+1.
    Eps,
    /// ε_i, an (m+1, m) tangle capping outer points i, i+1.
    EpsBar,
    /// F_i, an (m, m) tangle capping both sides at i, i+1.
    F,
    /// ρ, rotation by two points.
    Rho,
    /// σ_+, the (+, −) tangle with one circle.
    SigmaPlus,
    /// σ_−, the (−, +) tangle with one circle.
    SigmaMinus,
    /// ρ^{1/2}, rotation by one point (shading-flipping).
    RhoHalf,
}

fn validate_side(points: usize, arcs: &[(usize, usize)]) -> Result<BTreeSet<usize>> {
    let mut used = BTreeSet::new();
    for &(a, b) in arcs {
        if a >= points || b >= points || a == b || !used.insert(a) || !used.insert(b) {
            return Err(Error::Invalid(format!("bad arc ({a},{b}) on {points} points")));
        }
    }
    let interval = |&(a, b): &(usize, usize)| -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        let mut x = a;
        loop {
            s.insert(x);
            if x == b {
                break;
            }
            x = (x + 1) % points;
        }
        s
    };
    let closed: Vec<BTreeSet<usize>> = arcs.iter().map(interval).collect();
    let inside = |c: &BTreeSet<usize>, arc: (usize, usize)| {
        let mut open = c.clone();
        open.remove(&arc.0);
        open.remove(&arc.1);
        open
    };
    for (i, ci) in closed.iter().enumerate() {
        for (j, cj) in closed.iter().enumerate().skip(i + 1) {
            let nested = ci.is_subset(&inside(cj, arcs[j])) || cj.is_subset(&inside(ci, arcs[i]));
            let disjoint = ci.is_disjoint(cj);
            if !(nested || disjoint) {
                return Err(Error::Invalid("arcs cross or enclose the annulus".into()));
            }
        }
    }
    let through: BTreeSet<usize> = (0..points).filter(|p| !used.contains(p)).collect();
    for c in &closed {
        if through.iter().any(|p| c.contains(p)) {
            return Err(Error::Invalid("arc encloses a through string".into()));
        }
    }
    Ok(through)
}

type Displacement = Ratio<i64>;

impl AnnularDiagram {
    /// Build and validate a diagram. Arcs are normalized into sorted order.
    pub fn new(
        outer_points: usize,
        inner_points: usize,
        mut outer_arcs: Vec<(usize, usize)>,
        mut inner_arcs: Vec<(usize, usize)>,
        offset: usize,
        circles: usize,
        outer_shaded: bool,
    ) -> Result<Self> {
        let to = validate_side(outer_points, &outer_arcs)?;
        let ti = validate_side(inner_points, &inner_arcs)?;
        if to.len() != ti.len() {
            return Err(Error::Invalid(
                "through-string counts differ on the two boundaries".into(),
            ));
        }
        let t = to.len();
        if circles > 0 && t > 0 {
            return Err(Error::Invalid(
                "a non-contractible circle cannot coexist with through strings".into(),
            ));
        }
        if (t == 0 && offset != 0) || (t > 0 && offset >= t) {
            return Err(Error::Invalid(format!(
                "offset {offset} out of range for {t} through strings"
            )));
        }
        if outer_points > 0 && outer_shaded && outer_points % 2 == 1 {
            return Err(Error::Invalid("odd number of boundary points".into()));
        }
        outer_arcs.sort_unstable();
        inner_arcs.sort_unstable();
        Ok(AnnularDiagram {
            outer_points,
            inner_points,
            outer_arcs,
            inner_arcs,
            offset,
            circles,
            outer_shaded,
        })
    }

    pub fn identity(level: Level) -> Self {
        let b = level.boundary();
        AnnularDiagram {
            outer_points: b.points,
            inner_points: b.points,
            outer_arcs: vec![],
            inner_arcs: vec![],
            offset: 0,
            circles: 0,
            outer_shaded: b.shaded,
        }
    }

    pub fn outer_points(&self) -> usize {
        self.outer_points
    }

    pub fn inner_points(&self) -> usize {
        self.inner_points
    }

    pub fn outer_arcs(&self) -> &[(usize, usize)] {
        &self.outer_arcs
    }

    pub fn inner_arcs(&self) -> &[(usize, usize)] {
        &self.inner_arcs
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn outer_shaded(&self) -> bool {
        self.outer_shaded
    }

    pub fn outer_boundary(&self) -> Boundary {
        Boundary {
            points: self.outer_points,
            shaded: self.outer_shaded,
        }
    }

    pub fn inner_boundary(&self) -> Boundary {
        Boundary {
            points: self.inner_points,
            shaded: self.inner_shaded(),
        }
    }

    pub fn outer_level(&self) -> Option<Level> {
        Level::from_boundary(self.outer_boundary())
    }

    pub fn inner_level(&self) -> Option<Level> {
        Level::from_boundary(self.inner_boundary())
    }

    /// Number of through strings.
    pub fn through_strings(&self) -> usize {
        self.outer_points - 2 * self.outer_arcs.len()
    }

    /// Minimal number of intersections of a core circle with the strings;
    /// for unlabeled diagrams this is the through-string count.
    pub fn rank(&self) -> usize {
        self.through_strings()
    }

    fn through_points(points: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
        let mut used = vec![false; points];
        for &(a, b) in arcs {
            used[a] = true;
            used[b] = true;
        }
        (0..points).filter(|&p| !used[p]).collect()
    }

    pub fn outer_through_points(&self) -> Vec<usize> {
        Self::through_points(self.outer_points, &self.outer_arcs)
    }

    pub fn inner_through_points(&self) -> Vec<usize> {
        Self::through_points(self.inner_points, &self.inner_arcs)
    }

    /// Parity of crossings of the radial cut at angle 0.
    fn cut_parity(&self) -> bool {
        let wraps = |arcs: &[(usize, usize)]| arcs.iter().filter(|&&(a, b)| b < a).count();
        let t = self.through_strings();
        let s = if t > 0 { self.offset } else { 0 };
        (s + wraps(&self.outer_arcs) + wraps(&self.inner_arcs) + self.circles) % 2 == 1
    }

    pub fn inner_shaded(&self) -> bool {
        self.outer_shaded ^ self.cut_parity()
    }

    /// True when the picture admits the standard shading: both marked regions
    /// unshaded whenever the boundary carries points.
    pub fn is_standard(&self) -> bool {
        (self.outer_points == 0 || !self.outer_shaded) && (self.inner_points == 0 || !self.inner_shaded())
    }

    /// Same strings with a different through-string offset.
    pub fn with_offset(&self, offset: usize) -> Result<Self> {
        let t = self.through_strings();
        if (t == 0 && offset != 0) || (t > 0 && offset >= t) {
            return Err(Error::Invalid(format!(
                "offset {offset} out of range for {t} through strings"
            )));
        }
        let mut d = self.clone();
        d.offset = offset;
        Ok(d)
    }

    /// Swap the two colours of the checkerboard shading.
    pub fn recolored(&self) -> Self {
        let mut d = self.clone();
        d.outer_shaded = !d.outer_shaded;
        d
    }

    /// Remove `k` non-contractible circles.
    pub fn without_circles(&self, k: usize) -> Self {
        let mut d = self.clone();
        d.circles -= k;
        d
    }

    /// Endpoint links: for each endpoint (outer points first), its partner and
    /// the lifted angular displacement from it to the partner, in turns.
    fn links(&self) -> Vec<(usize, Displacement)> {
        let p = self.outer_points as i64;
        let q = self.inner_points as i64;
        let np = self.outer_points;
        let mut out = vec![(usize::MAX, Displacement::from_integer(0)); np + self.inner_points];
        for &(a, b) in &self.outer_arcs {
            let d = Displacement::new((b as i64 - a as i64).rem_euclid(p), p);
            out[a] = (b, d);
            out[b] = (a, -d);
        }
        for &(a, b) in &self.inner_arcs {
            let d = Displacement::new((b as i64 - a as i64).rem_euclid(q), q);
            out[np + a] = (np + b, d);
            out[np + b] = (np + a, -d);
        }
        let oth = self.outer_through_points();
        let ith = self.inner_through_points();
        let t = oth.len();
        for (j, &i) in ith.iter().enumerate() {
            let k = j + self.offset;
            let o = oth[k % t];
            let d = Displacement::new(2 * o as i64 + 1, 2 * p) + Displacement::from_integer((k / t) as i64)
                - Displacement::new(2 * i as i64 + 1, 2 * q);
            out[np + i] = (o, d);
            out[o] = (np + i, -d);
        }
        out
    }

    /// Glue `inner` into the hole of `self`. Returns the reduced diagram and
    /// the number of contractible loops removed. Shading is checked.
    pub fn compose_raw(&self, inner: &Self) -> Result<(Self, usize)> {
        if self.inner_points != inner.outer_points {
            return Err(Error::BoundaryMismatch(format!(
                "inner boundary has {} points, next outer boundary has {}",
                self.inner_points, inner.outer_points
            )));
        }
        if self.inner_shaded() != inner.outer_shaded {
            return Err(Error::ShadingMismatch(
                "inner shading differs from the next outer shading".into(),
            ));
        }
        Ok(self.glue(inner))
    }

    /// Composition ignoring shading; the result keeps this outer shading.
    pub fn compose_unchecked(&self, inner: &Self) -> Result<(Self, usize)> {
        if self.inner_points != inner.outer_points {
            return Err(Error::BoundaryMismatch(format!(
                "inner boundary has {} points, next outer boundary has {}",
                self.inner_points, inner.outer_points
            )));
        }
        Ok(self.glue(inner))
    }

    fn glue(&self, inner: &Self) -> (Self, usize) {
        let p = self.outer_points;
        let k = self.inner_points;
        let q = inner.inner_points;
        let tl = self.links();
        let sl = inner.links();
        let zero = Displacement::from_integer(0);

        #[derive(Clone, Copy)]
        enum End {
            Outer(usize),
            Inner(usize),
        }
        let mut seen_mid = vec![false; k];
        // Continue a walk that has just arrived at mid point `m` coming from
        // `from_top`; returns the final endpoint.
        let follow = |mut m: usize, mut from_top: bool, acc: &mut Displacement, seen: &mut [bool]| -> End {
            loop {
                seen[m] = true;
                if from_top {
                    let (z, d) = sl[m];
                    *acc += d;
                    if z >= k {
                        return End::Inner(z - k);
                    }
                    m = z;
                    from_top = false;
                } else {
                    let (y, d) = tl[p + m];
                    *acc += d;
                    if y < p {
                        return End::Outer(y);
                    }
                    m = y - p;
                    from_top = true;
                }
            }
        };

        let mut outer_arcs = Vec::new();
        let mut inner_arcs = Vec::new();
        let mut through: Vec<(usize, usize)> = Vec::new(); // (inner, outer)
        let mut done_outer = vec![false; p];
        let mut done_inner = vec![false; q];
        for a in 0..p {
            if done_outer[a] {
                continue;
            }
            let (y, d) = tl[a];
            let mut acc = d;
            let end = if y < p {
                End::Outer(y)
            } else {
                follow(y - p, true, &mut acc, &mut seen_mid)
            };
            done_outer[a] = true;
            match end {
                End::Outer(b) => {
                    done_outer[b] = true;
                    outer_arcs.push(if acc > zero { (a, b) } else { (b, a) });
                }
                End::Inner(c) => {
                    done_inner[c] = true;
                    through.push((c, a));
                }
            }
        }
        for c in 0..q {
            if done_inner[c] {
                continue;
            }
            let (z, d) = sl[k + c];
            let mut acc = d;
            let end = if z >= k {
                End::Inner(z - k)
            } else {
                follow(z, false, &mut acc, &mut seen_mid)
            };
            done_inner[c] = true;
            match end {
                End::Inner(e) => {
                    done_inner[e] = true;
                    inner_arcs.push(if acc > zero { (c, e) } else { (e, c) });
                }
                End::Outer(_) => unreachable!("through strings are reached from the outside first"),
            }
        }
        let mut contractible = 0;
        let mut noncontractible = 0;
        for m0 in 0..k {
            if seen_mid[m0] {
                continue;
            }
            let mut acc = zero;
            let mut m = m0;
            loop {
                seen_mid[m] = true;
                let (z, d) = sl[m];
                acc += d;
                seen_mid[z] = true;
                let (y, d2) = tl[p + z];
                acc += d2;
                m = y - p;
                if m == m0 {
                    break;
                }
            }
            if acc == zero {
                contractible += 1;
            } else {
                noncontractible += 1;
            }
        }
        let offset = if through.is_empty() {
            0
        } else {
            through.sort_unstable();
            let mut outs: Vec<usize> = through.iter().map(|&(_, o)| o).collect();
            let first = outs[0];
            outs.sort_unstable();
            outs.iter().position(|&o| o == first).unwrap()
        };
        outer_arcs.sort_unstable();
        inner_arcs.sort_unstable();
        let d = AnnularDiagram {
            outer_points: p,
            inner_points: q,
            outer_arcs,
            inner_arcs,
            offset,
            circles: self.circles + inner.circles + noncontractible,
            outer_shaded: self.outer_shaded,
        };
        (d, contractible)
    }

    /// Composition with loop value δ.
    pub fn compose(&self, inner: &Self, delta: &CycloNumber) -> Result<WeightedDiagram> {
        let (diagram, c) = self.compose_raw(inner)?;
        let weight = delta.pow(c as i64).unwrap_or_else(|_| CycloNumber::zero());
        Ok(WeightedDiagram { diagram, weight })
    }

    /// Reflection in a circle between the boundaries.
    pub fn star(&self) -> Self {
        let t = self.through_strings();
        AnnularDiagram {
            outer_points: self.inner_points,
            inner_points: self.outer_points,
            outer_arcs: self.inner_arcs.clone(),
            inner_arcs: self.outer_arcs.clone(),
            offset: if t == 0 { 0 } else { (t - self.offset) % t },
            circles: self.circles,
            outer_shaded: self.inner_shaded(),
        }
    }

    fn rotation(points: usize, shift: usize, outer_shaded: bool) -> Self {
        AnnularDiagram {
            outer_points: points,
            inner_points: points,
            outer_arcs: vec![],
            inner_arcs: vec![],
            offset: if points == 0 { 0 } else { shift % points },
            circles: 0,
            outer_shaded,
        }
    }

    /// ρ^{-1/2} at a level with `2m` points, outer marked region unshaded.
    pub fn rho_half_inverse(m: usize) -> Self {
        Self::rotation(2 * m, 2 * m - 1, false)
    }

    /// ρ^j at level m (j may be negative).
    pub fn rho_power(m: usize, j: i64) -> Self {
        let pts = 2 * m;
        Self::rotation(pts, (2 * j).rem_euclid(pts.max(1) as i64) as usize, false)
    }

    /// The named generator at level m with index i (1-based where used).
    pub fn generator(kind: GeneratorKind, m: usize, i: usize) -> Result<Self> {
        let oob = || Error::IndexOutOfRange(format!("{kind:?} index {i} at level {m}"));
        let cap = |pts: usize, i: usize| ((i - 1), i % pts);
        match kind {
            GeneratorKind::Eps => {
                if m == 0 || i == 0 || i > 2 * m {
                    return Err(oob());
                }
                let pts = 2 * m;
                let t = pts - 2;
                let offset = if i == pts && t > 0 { t - 1 } else { 0 };
                let mut d = AnnularDiagram::new(pts - 2, pts, vec![], vec![cap(pts, i)], offset, 0, false)?;
                // an empty outer boundary takes whatever shading makes the inner standard
                if d.outer_points == 0 && d.inner_shaded() {
                    d = d.recolored();
                }
                Ok(d)
            }
            GeneratorKind::EpsBar => {
                let pts = 2 * m + 2;
                if i == 0 || i > pts {
                    return Err(oob());
                }
                let offset = if i == pts && m > 0 { 1 } else { 0 };
                AnnularDiagram::new(pts, 2 * m, vec![cap(pts, i)], vec![], offset, 0, false)
            }
            GeneratorKind::F => {
                if m == 0 || i == 0 || i > 2 * m {
                    return Err(oob());
                }
                let pts = 2 * m;
                AnnularDiagram::new(pts, pts, vec![cap(pts, i)], vec![cap(pts, i)], 0, 0, false)
            }
            GeneratorKind::Rho => {
                if m == 0 {
                    return Err(oob());
                }
                Ok(Self::rho_power(m, 1))
            }
            GeneratorKind::RhoHalf => {
                if m == 0 {
                    return Err(oob());
                }
                Ok(Self::rotation(2 * m, 1, false))
            }
            GeneratorKind::SigmaPlus => Ok(AnnularDiagram {
                outer_points: 0,
                inner_points: 0,
                outer_arcs: vec![],
                inner_arcs: vec![],
                offset: 0,
                circles: 1,
                outer_shaded: true,
            }),
            GeneratorKind::SigmaMinus => Ok(AnnularDiagram {
                outer_points: 0,
                inner_points: 0,
                outer_arcs: vec![],
                inner_arcs: vec![],
                offset: 0,
                circles: 1,
                outer_shaded: false,
            }),
        }
    }

    /// ρ^{1/2} T ρ^{-1/2} for a standard tangle between two levels with points.
    pub fn ad_rho_half(&self) -> Result<Self> {
        if self.outer_points == 0 || self.inner_points == 0 || !self.is_standard() {
            return Err(Error::Precondition(
                "needs a standard tangle with points on both boundaries".into(),
            ));
        }
        let left = Self::rotation(self.outer_points, 1, true);
        let (mid, c1) = self.compose_raw(&Self::rho_half_inverse(self.inner_points / 2))?;
        let (out, c2) = left.compose_raw(&mid)?;
        debug_assert_eq!(c1 + c2, 0);
        Ok(out.recolored())
    }
}

/// Noncrossing partial matchings of `points` (linear order) with `arcs` arcs.
fn partial_matchings(points: &[usize], arcs: usize) -> Vec<Vec<(usize, usize)>> {
    if arcs == 0 {
        return vec![vec![]];
    }
    if points.len() < 2 * arcs {
        return vec![];
    }
    // first point unmatched
    let mut out = partial_matchings(&points[1..], arcs);
    // first point matched to points[k], splitting the rest into inside and outside
    for k in 1..points.len() {
        let inside = &points[1..k];
        let outside = &points[k + 1..];
        for a in 0..arcs {
            let ins = partial_matchings(inside, a);
            if ins.is_empty() {
                continue;
            }
            let outs = partial_matchings(outside, arcs - 1 - a);
            for i in &ins {
                for o in &outs {
                    let mut m = vec![(points[0], points[k])];
                    m.extend_from_slice(i);
                    m.extend_from_slice(o);
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Oriented arc systems on one boundary with `points` points and `t` through points.
pub fn side_configurations(points: usize, t: usize) -> Vec<Vec<(usize, usize)>> {
    if t > points || !(points - t).is_multiple_of(2) {
        return vec![];
    }
    let pts: Vec<usize> = (0..points).collect();
    let raw = partial_matchings(&pts, (points - t) / 2);
    let mut out = BTreeSet::new();
    for matching in raw {
        let r = matching.len();
        // each arc (a<b) either encloses a..b or b..a
        for mask in 0u32..(1 << r) {
            let arcs: Vec<(usize, usize)> = matching
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
                .collect();
            if validate_side(points, &arcs).is_ok() {
                let mut arcs = arcs;
                arcs.sort_unstable();
                out.insert(arcs);
            }
        }
    }
    out.into_iter().collect()
}

/// All circle-free diagrams from `inner` to `outer` with `t` through strings
/// whose shading matches the two boundaries, sorted.
pub fn enumerate_between(outer: Boundary, inner: Boundary, t: usize) -> Result<Vec<AnnularDiagram>> {
    enumerate_with_circles(outer, inner, t, 0)
}

/// As [`enumerate_between`] allowing up to `max_circles` non-contractible circles
/// when there are no through strings.
pub fn enumerate_with_circles(
    outer: Boundary,
    inner: Boundary,
    t: usize,
    max_circles: usize,
) -> Result<Vec<AnnularDiagram>> {
    if !t.is_multiple_of(2) || t > outer.points.min(inner.points) {
        return Err(Error::Parity(format!(
            "t = {t} for boundaries with {} and {} points",
            outer.points, inner.points
        )));
    }
    let outs = side_configurations(outer.points, t);
    let ins = side_configurations(inner.points, t);
    let mut result = Vec::new();
    for oa in &outs {
        for ia in &ins {
            let offsets = if t == 0 { 0..1 } else { 0..t };
            let circle_range = if t == 0 { 0..=max_circles } else { 0..=0 };
            for s in offsets {
                for c in circle_range.clone() {
                    let d =
                        AnnularDiagram::new(outer.points, inner.points, oa.clone(), ia.clone(), s, c, outer.shaded)?;
                    if d.inner_shaded() == inner.shaded {
                        result.push(d);
                    }
                }
            }
        }
    }
    result.sort();
    Ok(result)
}

/// Standard (m, k) diagrams with `t` through strings and no circles.
pub fn enumerate_annular(m: usize, k: usize, t: usize) -> Result<Vec<AnnularDiagram>> {
    if m == 0 || k == 0 {
        return Err(Error::Invalid("use enumerate_between for levels without points".into()));
    }
    enumerate_between(Level::Pos(m).boundary(), Level::Pos(k).boundary(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorKind::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
    }

    fn g(kind: GeneratorKind, m: usize, i: usize) -> AnnularDiagram {
        AnnularDiagram::generator(kind, m, i).unwrap()
    }

    #[test]
    fn generators_are_standard() {
        for m in 1..5 {
            for i in 1..=2 * m {
                assert!(g(Eps, m, i).is_standard(), "eps {m} {i}");
                assert!(g(F, m, i).is_standard(), "F {m} {i}");
            }
            for i in 1..=2 * m + 2 {
                assert!(g(EpsBar, m, i).is_standard(), "epsbar {m} {i}");
            }
            assert!(g(Rho, m, 0).is_standard());
            assert!(!g(RhoHalf, m, 0).is_standard());
        }
        assert_eq!(g(Eps, 1, 1).outer_level(), Some(Level::Minus));
        assert_eq!(g(Eps, 1, 2).outer_level(), Some(Level::Plus));
        assert_eq!(g(EpsBar, 0, 1).inner_level(), Some(Level::Minus));
        assert_eq!(g(EpsBar, 0, 2).inner_level(), Some(Level::Plus));
        assert_eq!(g(SigmaPlus, 0, 0).inner_level(), Some(Level::Minus));
    }

    #[test]
    fn star_relations() {
        for m in 1..5 {
            for i in 1..=2 * m {
                assert_eq!(g(Eps, m, i).star(), g(EpsBar, m - 1, i), "m={m} i={i}");
                assert_eq!(g(F, m, i).star(), g(F, m, i));
            }
            assert_eq!(g(Rho, m, 0).star(), AnnularDiagram::rho_power(m, -1));
        }
        assert_eq!(g(SigmaPlus, 0, 0).star(), g(SigmaMinus, 0, 0));
    }

    #[test]
    fn composition_relations() {
        for m in 1..5 {
            let id = AnnularDiagram::identity(Level::Pos(m));
            for i in 1..=2 * m {
                let e = g(Eps, m, i);
                let (d, c) = e.compose_raw(&e.star()).unwrap();
                assert_eq!((c, d.circles()), (1, 0), "m={m} i={i}");
                assert_eq!(d.through_strings(), 2 * m - 2);
                assert_eq!(d, AnnularDiagram::identity(e.outer_level().unwrap()));
                let (f, c) = e.star().compose_raw(&e).unwrap();
                assert_eq!((f, c), (g(F, m, i), 0));
                let (ff, c) = g(F, m, i).compose_raw(&g(F, m, i)).unwrap();
                assert_eq!((ff, c), (g(F, m, i), 1));
            }
            let r = g(Rho, m, 0);
            assert_eq!(r.compose_raw(&r.star()).unwrap(), (id.clone(), 0));
            let h = g(RhoHalf, m, 0);
            let (rr, c) = h.recolored().compose_raw(&h).unwrap();
            assert_eq!((rr.recolored(), c), (r.clone(), 0));
            let mut p = id.clone();
            for _ in 0..m {
                p = p.compose_raw(&r).unwrap().0;
            }
            assert_eq!(p, id);
        }
    }

    #[test]
    fn sigma_products() {
        let sp = g(SigmaPlus, 0, 0);
        let sm = g(SigmaMinus, 0, 0);
        let (d, c) = sp.compose_raw(&sm).unwrap();
        assert_eq!(
            (d.circles(), c, d.outer_level(), d.inner_level()),
            (2, 0, Some(Level::Plus), Some(Level::Plus))
        );
        assert!(sp.compose_raw(&sp).is_err());
    }

    #[test]
    fn noncontractible_loops_detected() {
        // ϵ_1 ∘ ε_2 at m = 1 (via level ±): the two caps close into a loop around the hole
        let e1 = g(Eps, 1, 2);
        let b = g(EpsBar, 0, 1);
        let res = e1.compose_unchecked(&b).unwrap();
        assert_eq!((res.0.circles(), res.1), (1, 0));
        let res = g(Eps, 1, 1).compose_raw(&b).unwrap();
        assert_eq!((res.0.circles(), res.1), (0, 1));
    }

    #[test]
    fn counts() {
        for k in 1..=4 {
            for m in k..=5 {
                let n = enumerate_annular(m, k, 2 * k).unwrap().len();
                assert_eq!(n, k * binom(2 * m, m - k), "m={m} k={k}");
            }
        }
        assert_eq!(enumerate_annular(1, 1, 0).unwrap().len(), 2);
        assert_eq!(enumerate_annular(2, 2, 4).unwrap().len(), 2);
        for p in 1..6 {
            assert_eq!(side_configurations(2 * p, 0).len(), binom(2 * p, p));
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = g(EpsBar, 2, 6);
        let s = serde_json::to_string(&d).unwrap();
        let back: AnnularDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn ad_rho_half_keeps_type() {
        let e = g(Eps, 3, 2);
        let a = e.ad_rho_half().unwrap();
        assert!(a.is_standard());
        assert_eq!((a.outer_points(), a.inner_points()), (4, 6));
        let mut x = e.clone();
        for _ in 0..12 {
            x = x.ad_rho_half().unwrap();
        }
        assert_eq!(x, e);
    }
}
