//! The annular TL-modules V^{k,ω}, V^μ and V^{0,±}.
//!
//! A module is realized on diagrams leaving a fixed source level:
//! `V^{k,ω}` on (m, k) tangles with 2k through strings applied to a vector ψ
//! with ρψ = ωψ; `V^μ` on (m, +) tangles with no through strings, a pair of
//! non-contractible circles evaluating to μ²; `V^{0,±}` on (m, ±) tangles,
//! any non-contractible circle evaluating to 0.
//!
//! For `V^{k,ω}` each Z/k orbit of diagrams is represented by the element of
//! least offset. A diagram `R'∘ρ^j` is reduced to `ω^j R'`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::annular::{enumerate_between, enumerate_with_circles, AnnularDiagram, GeneratorKind, Level};
use crate::error::{Error, Result};
use crate::linalg::{self, Inertia, Matrix};
use crate::scalar::CycloNumber;
use crate::tl::{catalan, enumerate_tl_basis};

#[derive(Debug, Clone, PartialEq)]
pub enum ModuleKind {
    /// Lowest weight k ≥ 1 with rotation eigenvalue ω, ω^k = 1.
    LowWeight { k: usize, omega: CycloNumber },
    /// Weight zero, two non-contractible circles act by μ².
    Mu { mu: CycloNumber },
    /// Weight zero, non-contractible circles act by 0.
    ZeroPm { plus: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleSpec {
    pub kind: ModuleKind,
    pub delta: CycloNumber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Shape {
    LowWeight(usize),
    Mu,
    ZeroPm(bool),
}

/// A vector in one level of a module, in the diagram basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleVector {
    pub spec: ModuleSpec,
    pub level: Level,
    pub terms: BTreeMap<AnnularDiagram, CycloNumber>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite { corank: usize },
    Indefinite,
}

#[derive(Debug, Clone)]
pub struct GramResult {
    pub level: Level,
    pub matrix: Matrix,
    pub rank: usize,
    pub positive_definite: bool,
    pub positive_semidefinite: bool,
    pub inertia: Inertia,
    pub kernel_basis: Vec<ModuleVector>,
}

impl GramResult {
    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    pub fn definiteness(&self) -> Definiteness {
        if self.positive_definite {
            Definiteness::PositiveDefinite
        } else if self.positive_semidefinite {
            Definiteness::PositiveSemidefinite {
                corank: self.dimension() - self.rank,
            }
        } else {
            Definiteness::Indefinite
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelReport {
    pub level: String,
    pub dimension: usize,
    pub definiteness: Definiteness,
    pub inertia: Inertia,
}

/// Orbit structure of a cyclic action on a finite basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: usize,
    pub fixed: usize,
    /// orbit size → number of orbits
    pub orbits: BTreeMap<usize, usize>,
}

impl Census {
    pub fn from_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut orbits = BTreeMap::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            *orbits.entry(len).or_insert(0) += 1;
        }
        Census {
            total: perm.len(),
            fixed: orbits.get(&1).copied().unwrap_or(0),
            orbits,
        }
    }

    /// Orbits of the given size.
    pub fn orbits_of_size(&self, size: usize) -> usize {
        self.orbits.get(&size).copied().unwrap_or(0)
    }
}

type BasisCache = RwLock<HashMap<(Shape, Level), Arc<Vec<AnnularDiagram>>>>;

fn basis_cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn require_real(x: &CycloNumber, what: &str) -> Result<()> {
    if x.is_real() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} = {x} is not real")))
    }
}

impl ModuleSpec {
    pub fn low_weight(k: usize, omega: CycloNumber, delta: CycloNumber) -> Result<Self> {
        require_real(&delta, "delta")?;
        if k == 0 {
            return Err(Error::Precondition("lowest weight must be at least 1".into()));
        }
        if !omega.pow(k as i64)?.is_one() {
            return Err(Error::Precondition(format!(
                "omega = {omega} is not a {k}-th root of unity"
            )));
        }
        Ok(ModuleSpec {
            kind: ModuleKind::LowWeight { k, omega },
            delta,
        })
    }

    pub fn mu(mu: CycloNumber, delta: CycloNumber) -> Result<Self> {
        require_real(&delta, "delta")?;
        require_real(&mu, "mu")?;
        Ok(ModuleSpec {
            kind: ModuleKind::Mu { mu },
            delta,
        })
    }

    pub fn zero_pm(plus: bool, delta: CycloNumber) -> Result<Self> {
        require_real(&delta, "delta")?;
        Ok(ModuleSpec {
            kind: ModuleKind::ZeroPm { plus },
            delta,
        })
    }

    fn shape(&self) -> Shape {
        match &self.kind {
            ModuleKind::LowWeight { k, .. } => Shape::LowWeight(*k),
            ModuleKind::Mu { .. } => Shape::Mu,
            ModuleKind::ZeroPm { plus } => Shape::ZeroPm(*plus),
        }
    }

    /// Level of the generating vector.
    pub fn source_level(&self) -> Level {
        match &self.kind {
            ModuleKind::LowWeight { k, .. } => Level::Pos(*k),
            ModuleKind::Mu { .. } => Level::Plus,
            ModuleKind::ZeroPm { plus: true } => Level::Plus,
            ModuleKind::ZeroPm { plus: false } => Level::Minus,
        }
    }

    /// Short name such as `V^{3,ω}` used in reports.
    pub fn name(&self) -> String {
        match &self.kind {
            ModuleKind::LowWeight { k, omega } => format!("V^{{{k},{omega}}}"),
            ModuleKind::Mu { mu } => format!("V^mu(mu={mu})"),
            ModuleKind::ZeroPm { plus } => format!("V^{{0,{}}}", if *plus { '+' } else { '-' }),
        }
    }

    /// The diagram basis of a level, in a fixed order.
    pub fn basis(&self, level: Level) -> Result<Arc<Vec<AnnularDiagram>>> {
        let shape = self.shape();
        if let Shape::LowWeight(k) = shape {
            if level.half() < k {
                return Err(Error::Precondition(format!(
                    "level {level} is below the lowest weight {k}"
                )));
            }
        }
        if let Some(b) = basis_cache().read().unwrap().get(&(shape, level)) {
            return Ok(b.clone());
        }
        let src = self.source_level().boundary();
        let diagrams = match shape {
            Shape::LowWeight(k) => enumerate_between(level.boundary(), src, 2 * k)?
                .into_iter()
                .filter(|d| d.offset() < 2)
                .collect(),
            Shape::Mu => enumerate_with_circles(level.boundary(), src, 0, 1)?,
            Shape::ZeroPm(_) => enumerate_between(level.boundary(), src, 0)?,
        };
        let b = Arc::new(diagrams);
        basis_cache().write().unwrap().insert((shape, level), b.clone());
        Ok(b)
    }

    pub fn dimension(&self, level: Level) -> Result<usize> {
        Ok(self.basis(level)?.len())
    }

    /// Closed-form dimension of a level.
    pub fn expected_dimension(&self, level: Level) -> usize {
        let m = level.half();
        let binom =
            |n: usize, r: usize| -> usize { (0..r).fold(1u128, |a, i| a * (n - i) as u128 / (i + 1) as u128) as usize };
        match (&self.kind, level) {
            (ModuleKind::LowWeight { k, .. }, Level::Pos(m)) if m >= *k => binom(2 * m, m - k),
            (ModuleKind::LowWeight { .. }, _) => 0,
            (ModuleKind::Mu { .. }, Level::Plus | Level::Minus) => 1,
            (ModuleKind::Mu { .. }, _) => binom(2 * m, m),
            (ModuleKind::ZeroPm { plus }, Level::Plus) => usize::from(*plus),
            (ModuleKind::ZeroPm { plus }, Level::Minus) => usize::from(!*plus),
            (ModuleKind::ZeroPm { .. }, _) => binom(2 * m, m) / 2,
        }
    }

    /// Bring a diagram from the source level into basis form.
    fn reduce(&self, q: AnnularDiagram, contractible: usize) -> Result<Option<(AnnularDiagram, CycloNumber)>> {
        let mut w = self.delta.pow(contractible as i64)?;
        let rep = match &self.kind {
            ModuleKind::LowWeight { k, omega } => {
                if q.through_strings() < 2 * k {
                    return Ok(None);
                }
                let base = q.offset() % 2;
                let j = (q.offset() - base) / 2;
                if j > 0 {
                    w = w * omega.pow(j as i64)?;
                }
                q.with_offset(base)?
            }
            ModuleKind::Mu { mu } => {
                let pairs = q.circles() / 2;
                if pairs > 0 {
                    w = w * mu.pow(2 * pairs as i64)?;
                }
                q.without_circles(2 * pairs)
            }
            ModuleKind::ZeroPm { .. } => {
                if q.circles() > 0 {
                    return Ok(None);
                }
                q
            }
        };
        Ok(if w.is_zero() { None } else { Some((rep, w)) })
    }

    pub fn zero_vector(&self, level: Level) -> ModuleVector {
        ModuleVector {
            spec: self.clone(),
            level,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector for a diagram (which must be a basis element).
    pub fn basis_vector(&self, level: Level, d: &AnnularDiagram) -> Result<ModuleVector> {
        if !self.basis(level)?.contains(d) {
            return Err(Error::Invalid("diagram is not a basis element of this level".into()));
        }
        let mut v = self.zero_vector(level);
        v.terms.insert(d.clone(), CycloNumber::one());
        Ok(v)
    }

    /// The generating vector at the source level (ψ for lowest weight modules).
    pub fn generating_vector(&self) -> ModuleVector {
        let level = self.source_level();
        let mut v = self.zero_vector(level);
        v.terms.insert(AnnularDiagram::identity(level), CycloNumber::one());
        v
    }

    /// Vector with given coefficients on the level basis.
    pub fn vector_from_coefficients(&self, level: Level, coeffs: &[CycloNumber]) -> Result<ModuleVector> {
        let basis = self.basis(level)?;
        if coeffs.len() != basis.len() {
            return Err(Error::Invalid(format!(
                "expected {} coefficients, got {}",
                basis.len(),
                coeffs.len()
            )));
        }
        let mut v = self.zero_vector(level);
        for (d, c) in basis.iter().zip(coeffs) {
            if !c.is_zero() {
                v.terms.insert(d.clone(), c.clone());
            }
        }
        Ok(v)
    }

    /// Apply a standard annular tangle.
    pub fn act(&self, t: &AnnularDiagram, v: &ModuleVector) -> Result<ModuleVector> {
        let inner = t
            .inner_level()
            .ok_or_else(|| Error::ShadingMismatch("tangle inner boundary is not a level".into()))?;
        if inner != v.level {
            return Err(Error::BoundaryMismatch(format!(
                "tangle expects level {inner}, vector is at level {}",
                v.level
            )));
        }
        let target = t
            .outer_level()
            .ok_or_else(|| Error::ShadingMismatch("tangle outer boundary is not a level".into()))?;
        let mut out = self.zero_vector(target);
        for (r, c) in &v.terms {
            let (q, contractible) = t.compose_raw(r)?;
            if let Some((rep, w)) = self.reduce(q, contractible)? {
                out.add_term(rep, &(w * c));
            }
        }
        Ok(out)
    }

    /// ⟨S, T⟩ for two diagrams from the source level to the same level.
    pub fn diagram_inner(&self, s: &AnnularDiagram, t: &AnnularDiagram) -> Result<CycloNumber> {
        let (q, c) = t.star().compose_raw(s)?;
        Ok(match self.reduce(q, c)? {
            Some((rep, w)) => {
                debug_assert_eq!(rep, AnnularDiagram::identity(self.source_level()));
                w
            }
            None => CycloNumber::zero(),
        })
    }

    /// Sesquilinear form, linear in the first argument.
    pub fn inner(&self, v: &ModuleVector, w: &ModuleVector) -> Result<CycloNumber> {
        if v.level != w.level {
            return Err(Error::BoundaryMismatch(format!("levels {} and {}", v.level, w.level)));
        }
        let pairs: Vec<_> = v
            .terms
            .iter()
            .flat_map(|a| w.terms.iter().map(move |b| (a, b)))
            .collect();
        pairs
            .par_iter()
            .map(|((s, cs), (t, ct))| Ok(self.diagram_inner(s, t)? * *cs * ct.conj()))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().sum())
    }

    /// Gram matrix G[i][j] = ⟨b_i, b_j⟩ on the level basis.
    pub fn gram_matrix(&self, level: Level) -> Result<Matrix> {
        let basis = self.basis(level)?;
        basis
            .par_iter()
            .map(|s| {
                basis
                    .iter()
                    .map(|t| self.diagram_inner(s, t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    /// Gram matrix with exact rank, definiteness and radical.
    pub fn gram(&self, level: Level) -> Result<GramResult> {
        let matrix = self.gram_matrix(level)?;
        let n = matrix.len();
        if linalg::is_positive_definite(&matrix)? {
            return Ok(GramResult {
                level,
                matrix,
                rank: n,
                positive_definite: true,
                positive_semidefinite: true,
                inertia: Inertia {
                    positive: n,
                    negative: 0,
                    zero: 0,
                },
                kernel_basis: vec![],
            });
        }
        let inertia = linalg::hermitian_inertia(&matrix)?;
        let kernel = linalg::left_kernel(&matrix);
        let kernel_basis = kernel
            .iter()
            .map(|c| self.vector_from_coefficients(level, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(GramResult {
            level,
            rank: inertia.positive + inertia.negative,
            positive_definite: false,
            positive_semidefinite: inertia.negative == 0,
            inertia,
            kernel_basis,
            matrix,
        })
    }

    /// Levels up to `m_max` on which the module lives.
    pub fn levels(&self, m_max: usize) -> Vec<Level> {
        match &self.kind {
            ModuleKind::LowWeight { k, .. } => (*k..=m_max).map(Level::Pos).collect(),
            _ => [Level::Plus, Level::Minus]
                .into_iter()
                .chain((1..=m_max).map(Level::Pos))
                .collect(),
        }
    }

    /// Definiteness of the form on every level up to `m_max`.
    pub fn positivity_profile(&self, m_max: usize) -> Result<Vec<LevelReport>> {
        let mut out = Vec::new();
        for level in self.levels(m_max) {
            if self.dimension(level)? == 0 {
                continue;
            }
            let g = self.gram(level)?;
            out.push(LevelReport {
                level: level.to_string(),
                dimension: g.dimension(),
                definiteness: g.definiteness(),
                inertia: g.inertia,
            });
        }
        Ok(out)
    }

    /// Rotation by one click: ρ^{1/2} T ρ^{-1/2} on V^{k,ω}, μ^{-1} ρ^{1/2} T σ_+ on V^μ.
    pub fn ad_rho_half(&self, v: &ModuleVector) -> Result<ModuleVector> {
        match &self.kind {
            ModuleKind::ZeroPm { .. } => Err(Error::Precondition("no rotation by one on V^{0,±}".into())),
            ModuleKind::LowWeight { .. } => {
                let mut out = self.zero_vector(v.level);
                for (r, c) in &v.terms {
                    if let Some((rep, w)) = self.reduce(r.ad_rho_half()?, 0)? {
                        out.add_term(rep, &(w * c));
                    }
                }
                Ok(out)
            }
            ModuleKind::Mu { mu } => {
                let mu_inv = mu
                    .inv()
                    .map_err(|_| Error::Precondition("mu = 0 has no rotation by one".into()))?;
                let sigma = AnnularDiagram::generator(GeneratorKind::SigmaPlus, 0, 0)?;
                let target = match v.level {
                    Level::Plus => Level::Minus,
                    Level::Minus => Level::Plus,
                    l => l,
                };
                let mut out = self.zero_vector(target);
                for (r, c) in &v.terms {
                    let (q, c0) = r.compose_raw(&sigma)?;
                    let (q, c1) = match v.level {
                        Level::Pos(m) => {
                            let half = AnnularDiagram::generator(GeneratorKind::RhoHalf, m, 0)?.recolored();
                            half.compose_raw(&q)?
                        }
                        _ => (q, 0),
                    };
                    if let Some((rep, w)) = self.reduce(q.recolored(), c0 + c1)? {
                        out.add_term(rep, &(w * &mu_inv * c));
                    }
                }
                Ok(out)
            }
        }
    }

    /// True iff every cap ϵ_i kills the vector.
    pub fn lowest_weight_test(&self, v: &ModuleVector) -> Result<bool> {
        let Level::Pos(m) = v.level else {
            return Ok(true);
        };
        for i in 1..=2 * m {
            let e = AnnularDiagram::generator(GeneratorKind::Eps, m, i)?;
            if !self.act(&e, v)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orbits of ρ on the level basis, phases ignored.
    pub fn rotation_census(&self, m: usize) -> Result<Census> {
        let level = Level::Pos(m);
        let basis = self.basis(level)?;
        let index: HashMap<&AnnularDiagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let rho = AnnularDiagram::generator(GeneratorKind::Rho, m, 0)?;
        let perm = basis
            .iter()
            .map(|r| {
                let (q, c) = rho.compose_raw(r)?;
                let (rep, _) = self
                    .reduce(q, c)?
                    .ok_or_else(|| Error::Invalid("rotation killed a basis vector".into()))?;
                Ok(index[&rep])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Census::from_permutation(&perm))
    }
}

/// One row of the generic (δ > 2) module table.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionRow {
    pub module: String,
    pub lowest_weight: String,
    pub rho_action: String,
    pub sigma_action: String,
    pub dimension: String,
    pub generating_function: String,
    /// dims at levels 0 (or ±), 1, 2, …
    pub dims: Vec<u64>,
}

/// Rows V^{k,ω} for 1 ≤ k ≤ k_max, V^TL, V^μ and V^{0,±}, with dims through level m_max.
pub fn dimension_table(k_max: usize, m_max: usize) -> Vec<DimensionRow> {
    use crate::series::{module_dim_series, DimSeriesKind};
    let dims = |kind: DimSeriesKind| -> Vec<u64> {
        let s = module_dim_series(kind, m_max);
        (0..=m_max)
            .map(|m| s.coeff(m).to_integer().try_into().unwrap_or(u64::MAX))
            .collect()
    };
    let mut rows: Vec<DimensionRow> = (1..=k_max)
        .map(|k| DimensionRow {
            module: format!("V^{{{k},ω}}"),
            lowest_weight: k.to_string(),
            rho_action: "ω, ω^k = 1".into(),
            sigma_action: "none".into(),
            dimension: "C(2n, n−k)".into(),
            generating_function: "z^k C(z)^{2k}/√(1−4z)".into(),
            dims: dims(DimSeriesKind::LowWeight(k)),
        })
        .collect();
    rows.push(DimensionRow {
        module: "V^TL".into(),
        lowest_weight: "0".into(),
        rho_action: "1".into(),
        sigma_action: "δ".into(),
        dimension: "C(2n, n)/(n+1)".into(),
        generating_function: "C(z)".into(),
        dims: dims(DimSeriesKind::TemperleyLieb),
    });
    let mut mu = dims(DimSeriesKind::Mu);
    mu[0] = 1;
    rows.push(DimensionRow {
        module: "V^μ".into(),
        lowest_weight: "0".into(),
        rho_action: "1".into(),
        sigma_action: "σ_+σ_− = μ²".into(),
        dimension: "C(2n, n)".into(),
        generating_function: "1/√(1−4z)".into(),
        dims: mu,
    });
    let mut pm = dims(DimSeriesKind::ZeroPm);
    pm[0] = 1;
    rows.push(DimensionRow {
        module: "V^{0,±}".into(),
        lowest_weight: "0".into(),
        rho_action: "1".into(),
        sigma_action: "0".into(),
        dimension: "C(2n, n)/2, dim V_± = 1".into(),
        generating_function: "1/(2√(1−4z))".into(),
        dims: pm,
    });
    rows
}

/// Orbits of rotation by two clicks on the disc TL diagrams with 2m points
/// (the basis of the TL module H^δ_m).
pub fn tl_rotation_census(m: usize) -> Census {
    let basis = enumerate_tl_basis(m);
    debug_assert_eq!(basis.len() as u128, catalan(m));
    let index: HashMap<_, usize> = basis.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
    let perm: Vec<usize> = basis.iter().map(|d| index[&d.rotate(2)]).collect();
    Census::from_permutation(&perm)
}

impl ModuleVector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: AnnularDiagram, c: &CycloNumber) {
        match self.terms.entry(d) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c.clone());
                }
            }
        }
    }

    pub fn coefficient(&self, d: &AnnularDiagram) -> CycloNumber {
        self.terms.get(d).cloned().unwrap_or_else(CycloNumber::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::BoundaryMismatch(format!(
                "levels {} and {}",
                self.level, other.level
            )));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycloNumber) -> Self {
        let mut out = self.spec.zero_vector(self.level);
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(d, c)| (d.clone(), c * s)).collect();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&CycloNumber::from_integer(-1)))
    }

    /// Coefficients on the level basis.
    pub fn coefficients(&self) -> Result<Vec<CycloNumber>> {
        Ok(self
            .spec
            .basis(self.level)?
            .iter()
            .map(|d| self.coefficient(d))
            .collect())
    }

    pub fn act(&self, t: &AnnularDiagram) -> Result<Self> {
        self.spec.act(t, self)
    }

    pub fn inner(&self, other: &Self) -> Result<CycloNumber> {
        self.spec.inner(self, other)
    }

    pub fn norm_sqr(&self) -> Result<CycloNumber> {
        self.spec.inner(self, self)
    }

    pub fn ad_rho_half(&self) -> Result<Self> {
        self.spec.ad_rho_half(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cyclo;
    use GeneratorKind::*;

    fn three() -> CycloNumber {
        CycloNumber::from_integer(3)
    }

    #[test]
    fn dimensions_match_formulas() {
        let specs = [
            ModuleSpec::low_weight(1, CycloNumber::one(), three()).unwrap(),
            ModuleSpec::low_weight(2, CycloNumber::from_integer(-1), three()).unwrap(),
            ModuleSpec::low_weight(3, cyclo(3, 1), three()).unwrap(),
            ModuleSpec::mu(CycloNumber::one(), three()).unwrap(),
            ModuleSpec::zero_pm(true, three()).unwrap(),
            ModuleSpec::zero_pm(false, three()).unwrap(),
        ];
        for s in &specs {
            for level in s.levels(4) {
                assert_eq!(
                    s.dimension(level).unwrap(),
                    s.expected_dimension(level),
                    "{} {level}",
                    s.name()
                );
            }
        }
        let s = ModuleSpec::low_weight(2, CycloNumber::one(), three()).unwrap();
        assert_eq!(s.dimension(Level::Pos(3)).unwrap(), 6);
    }

    #[test]
    fn psi_is_lowest_weight_eigenvector() {
        let w = cyclo(3, 1);
        let s = ModuleSpec::low_weight(3, w.clone(), three()).unwrap();
        let psi = s.generating_vector();
        assert!(s.lowest_weight_test(&psi).unwrap());
        let rho = AnnularDiagram::generator(Rho, 3, 0).unwrap();
        assert_eq!(s.act(&rho, &psi).unwrap(), psi.scale(&w));
        assert!(psi.norm_sqr().unwrap().is_one());
        let up = s.act(&AnnularDiagram::generator(EpsBar, 3, 2).unwrap(), &psi).unwrap();
        assert!(!s.lowest_weight_test(&up).unwrap());
    }

    #[test]
    fn small_grams() {
        let s = ModuleSpec::low_weight(1, CycloNumber::one(), three()).unwrap();
        let g = s.gram(Level::Pos(2)).unwrap();
        assert_eq!(g.dimension(), 4);
        assert!(g.positive_definite);
        let mu = ModuleSpec::mu(CycloNumber::one(), three()).unwrap();
        let g = mu.gram(Level::Pos(1)).unwrap();
        assert_eq!(g.dimension(), 2);
        assert!(g.positive_definite);
        let sp = AnnularDiagram::generator(SigmaPlus, 0, 0).unwrap();
        let sm = AnnularDiagram::generator(SigmaMinus, 0, 0).unwrap();
        let unit = mu.generating_vector();
        let twice = mu.act(&sp, &mu.act(&sm, &unit).unwrap()).unwrap();
        assert_eq!(twice, unit);
        let mu2 = ModuleSpec::mu(CycloNumber::from_integer(2), three()).unwrap();
        let twice = mu2.act(&sp, &mu2.act(&sm, &mu2.generating_vector()).unwrap()).unwrap();
        assert_eq!(twice, mu2.generating_vector().scale(&CycloNumber::from_integer(4)));
    }

    #[test]
    fn ad_rho_half_square_and_period() {
        let w = cyclo(3, 1);
        let s = ModuleSpec::low_weight(3, w.clone(), three()).unwrap();
        let level = Level::Pos(4);
        let rho = AnnularDiagram::generator(Rho, 4, 0).unwrap();
        for d in s.basis(level).unwrap().iter() {
            let v = s.basis_vector(level, d).unwrap();
            let twice = v.ad_rho_half().unwrap().ad_rho_half().unwrap();
            assert_eq!(twice, s.act(&rho, &v).unwrap().scale(&w.conj()));
        }
        let mu = ModuleSpec::mu(CycloNumber::one(), three()).unwrap();
        for d in mu.basis(Level::Pos(2)).unwrap().iter() {
            let v = mu.basis_vector(Level::Pos(2), d).unwrap();
            let mut x = v.clone();
            for _ in 0..4 {
                x = x.ad_rho_half().unwrap();
            }
            assert_eq!(x, v);
        }
    }

    #[test]
    fn censuses() {
        assert_eq!(tl_rotation_census(5).fixed, 2);
        assert_eq!(tl_rotation_census(5).orbits_of_size(5), 8);
        let mu = ModuleSpec::mu(CycloNumber::one(), three()).unwrap();
        let c = mu.rotation_census(5).unwrap();
        assert_eq!((c.fixed, c.orbits_of_size(5)), (2, 50));
    }

    #[test]
    fn dimension_table_matches_bases() {
        let delta = CycloNumber::from_integer(3);
        let rows = dimension_table(2, 4);
        assert_eq!(rows.len(), 5);
        for k in 1..=2 {
            let spec = ModuleSpec::low_weight(k, CycloNumber::one(), delta.clone()).unwrap();
            for m in k..=4 {
                assert_eq!(rows[k - 1].dims[m] as usize, spec.dimension(Level::Pos(m)).unwrap());
            }
        }
        assert_eq!(rows[2].dims, vec![1, 1, 2, 5, 14]);
        let mu = ModuleSpec::mu(CycloNumber::one(), delta.clone()).unwrap();
        let pm = ModuleSpec::zero_pm(true, delta).unwrap();
        for m in 1..=4 {
            assert_eq!(rows[3].dims[m] as usize, mu.dimension(Level::Pos(m)).unwrap());
            assert_eq!(rows[4].dims[m] as usize, pm.dimension(Level::Pos(m)).unwrap());
        }
    }
}
