//! Dispatch from parsed arguments to the library.

use std::fs;
use std::path::Path;

use atl_core::ade::{self, AdeCase};
use atl_core::annular::{enumerate_between, AnnularDiagram};
use atl_core::graphs::{to_i64, PointedBipartiteGraph, Verdict};
use atl_core::linalg;
use atl_core::scalar::{parse_scalar, ScalarContext, ScalarMode};
use atl_core::series::{annular_multiplicities, first_negative, module_dim_series, DimSeriesKind};
use atl_core::tl::{enumerate_tl_basis, jones_wenzl, tl_dim, tl_dim_at_root};
use atl_core::tlmodules::{dimension_table, ModuleSpec};
use atl_core::CycloNumber;
use serde_json::{json, Value};

use crate::args::*;
use crate::error::{CliError, CliResult};
use crate::output::{Report, ScalarFmt};

pub struct Ctx {
    pub fmt: ScalarFmt,
    pub conductor: Option<u32>,
}

impl Ctx {
    /// Parse a scalar, checking it against --conductor.
    fn scalar(&self, name: &str, text: &str) -> CliResult<CycloNumber> {
        let x = parse_scalar(text).map_err(|e| CliError::Input(format!("--{name} {text:?}: {e}")))?;
        match self.conductor {
            Some(n) => {
                if n == 0 || n % x.conductor() != 0 {
                    return Err(CliError::Input(format!(
                        "--{name} {text:?} needs conductor {}, not a divisor of {n}",
                        x.conductor()
                    )));
                }
                Ok(x.promote(n))
            }
            None => Ok(x),
        }
    }

    /// Parse δ, which must be real.
    fn delta(&self, text: &str) -> CliResult<CycloNumber> {
        let d = self.scalar("delta", text)?;
        let mode = match self.conductor {
            Some(n) => ScalarMode::Cyclotomic(n),
            None => ScalarMode::Cyclotomic(d.conductor()),
        };
        Ok(ScalarContext::new(mode, d)
            .map_err(|e| CliError::Input(format!("--delta {text:?}: {e}")))?
            .delta)
    }

    fn s(&self, x: &CycloNumber) -> String {
        self.fmt.s(x)
    }
}

pub fn run(cmd: &Command, ctx: &Ctx) -> CliResult<Report> {
    match cmd {
        Command::Tl(c) => tl(c, ctx),
        Command::Annular(c) => annular(c, ctx),
        Command::Module(c) => module(c, ctx),
        Command::Series(c) => series(c),
        Command::Graph(c) => graph(c),
        Command::Ade(c) => ade_cmd(c, ctx),
    }
}

fn tl(cmd: &TlCommand, ctx: &Ctx) -> CliResult<Report> {
    match cmd {
        TlCommand::Jw { n, delta } => {
            let d = ctx.delta(delta)?;
            let p = jones_wenzl(*n, &d)?;
            let terms: Vec<(String, String)> = p.terms().iter().map(|(k, c)| (k.to_string(), ctx.s(c))).collect();
            let json = json!({
                "n": n,
                "delta": ctx.s(&d),
                "terms": terms.iter().map(|(k, c)| json!({"diagram": k, "coefficient": c})).collect::<Vec<_>>(),
            });
            let rows = terms.into_iter().map(|(k, c)| vec![c, k]).collect();
            Ok(Report::new(json)
                .kv("p_n", n)
                .kv("delta", ctx.s(&d))
                .table(&["coefficient", "diagram"], rows))
        }
        TlCommand::Dim { n, t, root } => {
            let generic = tl_dim(*n, *t)?;
            let at_root = root.map(|m| tl_dim_at_root(*n, *t, m)).transpose()?;
            let json = json!({"n": n, "t": t, "generic": generic.to_string(), "at_root": at_root.map(|d| d.to_string()), "root": root});
            let mut r = Report::new(json).kv("generic dimension", generic);
            if let (Some(m), Some(d)) = (root, at_root) {
                r = r.kv(&format!("dimension at 2cos(pi/{m})"), d);
            }
            Ok(r)
        }
        TlCommand::Basis { n } => {
            let basis = enumerate_tl_basis(*n);
            let names: Vec<String> = basis.iter().map(ToString::to_string).collect();
            let json = json!({"n": n, "count": names.len(), "diagrams": names});
            let rows = names
                .iter()
                .enumerate()
                .map(|(i, d)| vec![i.to_string(), d.clone()])
                .collect();
            Ok(Report::new(json)
                .kv("count", basis.len())
                .table(&["#", "diagram"], rows))
        }
    }
}

fn diagram_summary(d: &AnnularDiagram) -> Vec<String> {
    vec![
        format!("{}", d.outer_boundary().points),
        format!("{}", d.inner_boundary().points),
        d.through_strings().to_string(),
        d.offset().to_string(),
        d.circles().to_string(),
        if d.outer_shaded() { "shaded" } else { "unshaded" }.to_string(),
    ]
}

const DIAGRAM_HEADERS: [&str; 6] = ["outer", "inner", "through", "offset", "circles", "outer region"];

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn diagram_from_file(path: &Path) -> CliResult<AnnularDiagram> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: line {}: {e}", path.display(), e.line())))
}

fn annular(cmd: &AnnularCommand, ctx: &Ctx) -> CliResult<Report> {
    match cmd {
        AnnularCommand::Count {
            outer,
            inner,
            through,
            list,
        } => {
            let ds = enumerate_between(outer.boundary(), inner.boundary(), *through)?;
            let mut json =
                json!({"outer": outer.to_string(), "inner": inner.to_string(), "through": through, "count": ds.len()});
            let mut r = Report::new(Value::Null).kv("count", ds.len());
            if *list {
                json["diagrams"] = serde_json::to_value(&ds).expect("diagrams serialize");
                r = r.table(&DIAGRAM_HEADERS, ds.iter().map(diagram_summary).collect());
            }
            r.json = json;
            Ok(r)
        }
        AnnularCommand::Generator { kind, m, i } => {
            let g = AnnularDiagram::generator((*kind).into(), *m, *i)?;
            let json = serde_json::to_value(&g).expect("diagram serializes");
            Ok(Report::new(json).table(&DIAGRAM_HEADERS, vec![diagram_summary(&g)]))
        }
        AnnularCommand::Compose { left, right, delta } => {
            let d = ctx.delta(delta)?;
            let (l, r) = (diagram_from_file(left)?, diagram_from_file(right)?);
            let w = l.compose(&r, &d)?;
            let json = json!({"diagram": w.diagram, "weight": ctx.s(&w.weight)});
            Ok(Report::new(json)
                .kv("weight", ctx.s(&w.weight))
                .table(&DIAGRAM_HEADERS, vec![diagram_summary(&w.diagram)]))
        }
    }
}

fn module_spec(a: &ModuleArgs, ctx: &Ctx) -> CliResult<ModuleSpec> {
    let delta = ctx.delta(&a.delta)?;
    Ok(match a.kind {
        ModuleKindArg::LowWeight => ModuleSpec::low_weight(a.k, ctx.scalar("omega", &a.omega)?, delta)?,
        ModuleKindArg::Mu => ModuleSpec::mu(ctx.scalar("mu", &a.mu)?, delta)?,
        ModuleKindArg::ZeroPlus => ModuleSpec::zero_pm(true, delta)?,
        ModuleKindArg::ZeroMinus => ModuleSpec::zero_pm(false, delta)?,
    })
}

fn module(cmd: &ModuleCommand, ctx: &Ctx) -> CliResult<Report> {
    match cmd {
        ModuleCommand::Gram { module, level, matrix } => {
            let spec = module_spec(module, ctx)?;
            let g = spec.gram(*level)?;
            let det = linalg::determinant(&g.matrix)?;
            let mut json = json!({
                "module": spec.name(),
                "level": level.to_string(),
                "dimension": g.dimension(),
                "rank": g.rank,
                "definiteness": g.definiteness(),
                "inertia": g.inertia,
                "determinant": ctx.s(&det),
                "radical_dimension": g.kernel_basis.len(),
            });
            let mut r = Report::new(Value::Null)
                .kv("module", spec.name())
                .kv("level", level)
                .kv("dimension", g.dimension())
                .kv("rank", g.rank)
                .kv(
                    "definiteness",
                    definiteness_name(g.positive_definite, g.positive_semidefinite),
                )
                .kv(
                    "inertia",
                    format!(
                        "(+{}, -{}, 0:{})",
                        g.inertia.positive, g.inertia.negative, g.inertia.zero
                    ),
                )
                .kv("determinant", ctx.s(&det));
            if *matrix {
                let m: Vec<Vec<String>> = g
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|x| ctx.s(x)).collect())
                    .collect();
                json["matrix"] = json!(m);
                let headers: Vec<String> = (0..m.len()).map(|j| j.to_string()).collect();
                let h: Vec<&str> = headers.iter().map(String::as_str).collect();
                r = r.table(&h, m);
            }
            r.json = json;
            Ok(r.check(g.positive_semidefinite))
        }
        ModuleCommand::Profile { module, max_level } => {
            let spec = module_spec(module, ctx)?;
            let rows = spec.positivity_profile(*max_level)?;
            let ok = rows.iter().all(|l| l.inertia.negative == 0);
            let json = json!({"module": spec.name(), "levels": rows});
            let table = rows
                .iter()
                .map(|l| {
                    vec![
                        l.level.clone(),
                        l.dimension.to_string(),
                        definiteness_name(l.inertia.negative == 0 && l.inertia.zero == 0, l.inertia.negative == 0)
                            .into(),
                        format!(
                            "(+{}, -{}, 0:{})",
                            l.inertia.positive, l.inertia.negative, l.inertia.zero
                        ),
                    ]
                })
                .collect();
            Ok(Report::new(json)
                .kv("module", spec.name())
                .table(&["level", "dim", "form", "inertia"], table)
                .check(ok))
        }
        ModuleCommand::Census { module, level } => {
            let spec = module_spec(module, ctx)?;
            let c = spec.rotation_census(*level)?;
            let json = json!({"module": spec.name(), "level": level, "census": c});
            let rows = c
                .orbits
                .iter()
                .map(|(s, n)| vec![s.to_string(), n.to_string()])
                .collect();
            Ok(Report::new(json)
                .kv("module", spec.name())
                .kv("basis size", c.total)
                .kv("fixed", c.fixed)
                .table(&["orbit size", "orbits"], rows))
        }
        ModuleCommand::Table { k_max, m_max } => {
            let rows = dimension_table(*k_max, *m_max);
            let json = json!({"rows": rows});
            let table = rows
                .iter()
                .map(|r| {
                    let dims: Vec<String> = r.dims.iter().map(ToString::to_string).collect();
                    vec![
                        r.module.clone(),
                        r.rho_action.clone(),
                        r.sigma_action.clone(),
                        r.dimension.clone(),
                        dims.join(" "),
                    ]
                })
                .collect();
            Ok(Report::new(json).table(&["module", "rho", "sigma", "dim V_n", "dims"], table))
        }
    }
}

fn definiteness_name(pd: bool, psd: bool) -> &'static str {
    match (pd, psd) {
        (true, _) => "positive definite",
        (false, true) => "positive semidefinite",
        _ => "indefinite",
    }
}

fn series(cmd: &SeriesCommand) -> CliResult<Report> {
    match cmd {
        SeriesCommand::Theta { dims, max_r } => {
            if dims.is_empty() {
                return Err(CliError::Input("--dims is empty".into()));
            }
            let r = max_r.unwrap_or(dims.len() - 1);
            let a = annular_multiplicities(dims, r)?;
            let neg = first_negative(&a);
            let a: Vec<String> = a.iter().map(ToString::to_string).collect();
            let json = json!({"dims": dims, "multiplicities": a, "first_negative": neg});
            let rows = a
                .iter()
                .enumerate()
                .map(|(i, x)| vec![i.to_string(), dims[i].to_string(), x.clone()])
                .collect();
            Ok(Report::new(json)
                .table(&["r", "dim", "a_r"], rows)
                .kv("first negative", neg.map_or("none".into(), |r| r.to_string()))
                .check(neg.is_none()))
        }
        SeriesCommand::Dims { kind, k, order } => {
            let kind = match kind {
                DimKind::LowWeight => DimSeriesKind::LowWeight(*k),
                DimKind::Tl => DimSeriesKind::TemperleyLieb,
                DimKind::Mu => DimSeriesKind::Mu,
                DimKind::ZeroPm => DimSeriesKind::ZeroPm,
            };
            let s = module_dim_series(kind, *order);
            let c: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            let json = json!({"kind": kind, "coefficients": c});
            Ok(Report::new(json).kv("coefficients", c.join(", ")))
        }
    }
}

fn load_graph(src: &GraphSource) -> CliResult<PointedBipartiteGraph> {
    match (&src.builtin, &src.file) {
        (Some(name), _) => Ok(PointedBipartiteGraph::builtin(name)?),
        (None, Some(path)) => PointedBipartiteGraph::from_json(&read(path)?)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        (None, None) => Err(CliError::Input("give --builtin or --file".into())),
    }
}

fn graph(cmd: &GraphCommand) -> CliResult<Report> {
    match cmd {
        GraphCommand::Screen { source, max_r } => {
            let g = load_graph(source)?;
            let s = g.screen(*max_r)?;
            let verdict = match &s.verdict {
                Verdict::Obstruction { r } => format!("obstruction: a_{r} < 0"),
                Verdict::Passes { through } => format!("passes through r = {through}"),
            };
            let verdict = if s.norm_greater_than_two {
                verdict
            } else {
                format!("{verdict} (norm at most 2: test does not apply)")
            };
            let ok = !s.rules_out();
            let rows = s
                .loop_counts
                .iter()
                .zip(&s.multiplicities)
                .enumerate()
                .map(|(i, (w, a))| vec![i.to_string(), w.clone(), a.clone()])
                .collect();
            let json = serde_json::to_value(&s).expect("report serializes");
            Ok(Report::new(json)
                .kv("graph", &s.graph)
                .table(&["r", "w_r", "a_r"], rows)
                .kv("verdict", verdict)
                .check(ok))
        }
        GraphCommand::Census { source, k } => {
            let g = load_graph(source)?;
            let c = g.rotation_census(*k)?;
            let rows = c
                .multiplicities
                .iter()
                .enumerate()
                .map(|(a, m)| vec![format!("exp(2 pi i {a}/{k})"), m.to_string()])
                .collect();
            let json = serde_json::to_value(&c).expect("census serializes");
            Ok(Report::new(json)
                .kv("loops", c.loops)
                .kv("fixed", c.census.fixed)
                .kv("free orbits", c.census.orbits_of_size(*k))
                .table(&["eigenvalue", "multiplicity"], rows))
        }
        GraphCommand::Loops { source, n } => {
            let g = load_graph(source)?;
            let w = to_i64(&g.loop_counts(*n));
            let d = to_i64(&g.all_starts_dims(*n));
            let json = json!({"graph": g.name, "basepoint": w, "all_starts": d, "critical_depth": g.critical_depth()});
            let rows = (0..=*n)
                .map(|i| vec![i.to_string(), w[i].to_string(), d[i].to_string()])
                .collect();
            Ok(Report::new(json).table(&["n", "w_n", "d_n"], rows))
        }
        GraphCommand::Spectrum { source } => {
            let g = load_graph(source)?;
            let s = g.spectral_data();
            let json = serde_json::to_value(&s).expect("spectrum serializes");
            Ok(Report::new(json)
                .kv("char poly (constant first)", s.char_poly.join(", "))
                .kv(
                    "norm^2 in",
                    format!("[{:.12}, {:.12}]", s.norm_sqr_bracket.0, s.norm_sqr_bracket.1),
                )
                .kv("norm", format!("{:.12}", s.norm_approx))
                .kv("norm > 2", s.norm_greater_than_two))
        }
    }
}

fn case_of(a: &CaseArgs) -> AdeCase {
    AdeCase::new(a.case.into(), a.branch.into())
}

fn zero_label(x: &CycloNumber, ctx: &Ctx) -> String {
    if x.is_zero() {
        "0 (exact)".into()
    } else {
        ctx.s(x)
    }
}

fn ade_cmd(cmd: &AdeCommand, ctx: &Ctx) -> CliResult<Report> {
    match cmd {
        AdeCommand::Nullvec { case } => {
            let c = case_of(case);
            let r = ade::null_vector_report(&c)?;
            let json = json!({
                "case": r.case, "branch": r.branch, "level": r.level,
                "norm": ctx.s(&r.null_norm), "closed_form_norm": ctx.s(&r.closed_form_norm),
                "exact": true, "gram_dimension": r.gram_dimension, "gram_corank": r.gram_corank,
                "positive_semidefinite": r.positive_semidefinite, "radical_contains_nu": r.radical_contains_nu,
                "basis_terms": r.basis_terms, "rotation_phase": r.rotation_phase.as_ref().map(|z| ctx.s(z)),
                "passed": r.passed(),
            });
            Ok(Report::new(json)
                .line(format!("case = {:?} {:?}, level {}", r.case, r.branch, r.level))
                .line(format!("norm = {}", zero_label(&r.null_norm, ctx)))
                .line(format!("closed form = {}", zero_label(&r.closed_form_norm, ctx)))
                .line(format!("gram corank = {} of {}", r.gram_corank, r.gram_dimension))
                .line(format!("gram * nu = 0: {}", r.radical_contains_nu))
                .line(format!(
                    "rotation phase = {}",
                    r.rotation_phase.as_ref().map_or("none".into(), |z| ctx.s(z))
                ))
                .check(r.passed()))
        }
        AdeCommand::E7 => {
            let r = ade::e7_obstruction()?;
            let rows: Vec<Vec<String>> = r.determinants.iter().map(|(w, d)| vec![ctx.s(w), ctx.s(d)]).collect();
            let json = json!({
                "delta": ctx.s(&r.delta),
                "determinants": rows.iter().map(|x| json!({"omega": x[0], "determinant": x[1]})).collect::<Vec<_>>(),
                "all_nonzero": r.all_nonzero,
            });
            Ok(Report::new(json)
                .kv("delta", ctx.s(&r.delta))
                .table(&["omega", "det Gram V^{4,omega}_5"], rows)
                .kv("all nonzero", r.all_nonzero)
                .check(r.all_nonzero))
        }
        AdeCommand::StarEq { n, k, r, omega } => {
            let w = ctx.scalar("omega", omega)?;
            let s = ade::star_equation(*n, *k, *r, &w)?;
            let json = json!({
                "n": n, "k": k, "r": r, "omega": ctx.s(&w), "solvable": s.solvable,
                "z": s.z.as_ref().map(|z| ctx.s(z)),
                "lhs_modulus_sqr": ctx.s(&s.lhs_modulus_sqr), "rhs_modulus_sqr": ctx.s(&s.rhs_modulus_sqr),
            });
            Ok(Report::new(json)
                .kv("solvable", s.solvable)
                .kv("z", s.z.as_ref().map_or("none".into(), |z| ctx.s(z)))
                .kv("|rhs|^2", ctx.s(&s.lhs_modulus_sqr))
                .kv("sin^2", ctx.s(&s.rhs_modulus_sqr))
                .check(s.solvable))
        }
        AdeCommand::Euler { p, e, k, max_discs } => {
            let bound = ade::euler_bound(*p, *e, *k);
            let faces = ade::euler_faces(*p, *e, *k);
            let census = ade::euler_census(*p, *k, *max_discs);
            let json = json!({"p": p, "e": e, "k": k, "bound_holds": bound, "faces": faces, "census": census});
            let rows = census
                .iter()
                .map(|c| {
                    vec![
                        c.discs.to_string(),
                        c.strings.to_string(),
                        c.regions.map_or("-".into(), |f| f.to_string()),
                        c.bound_holds.to_string(),
                    ]
                })
                .collect();
            Ok(Report::new(json)
                .kv("(2p-3)k >= 3p + (p-3)e", bound)
                .kv("faces", faces.map_or("not integral".into(), |f| f.to_string()))
                .table(&["discs", "strings", "regions", "bound"], rows)
                .check(bound))
        }
        AdeCommand::Transfer {
            k,
            omega,
            a,
            case,
            branch,
        } => {
            let w = ctx.scalar("omega", omega)?;
            let a = match a {
                Some(t) => ctx.scalar("a", t)?,
                None => AdeCase::new((*case).into(), (*branch).into()).a_parameter(),
            };
            let t = ade::transfer_eigenvalue(*k, &w, &a)?;
            let json = json!({"a": ctx.s(&a), "z": ctx.s(&t.z), "delta": ctx.s(&t.delta), "modulus_is_delta": t.modulus_is_delta});
            Ok(Report::new(json)
                .kv("A", ctx.s(&a))
                .kv("z", ctx.s(&t.z))
                .kv("delta", ctx.s(&t.delta))
                .kv("|z| = delta", t.modulus_is_delta)
                .check(t.modulus_is_delta))
        }
        AdeCommand::Biunitary { a, delta } => {
            let a = ctx.scalar("a", a)?;
            let d = ctx.scalar("delta", delta)?;
            let r = ade::biunitary_check(&a, &d)?;
            let json = serde_json::to_value(&r).expect("report serializes");
            Ok(Report::new(json)
                .kv("U W = 1", r.inverse_ok)
                .kv("U unitary", r.unitary)
                .kv("rotated U unitary", r.rotated_unitary)
                .check(r.passed()))
        }
        AdeCommand::PsiSquare { tau1, tau2 } => {
            let (t1, t2) = (ctx.scalar("tau1", tau1)?, ctx.scalar("tau2", tau2)?);
            let p = ade::psi_square_coefficients(&t1, &t2)?;
            let root = |r: &ade::ScaledRoot| match r.exact() {
                Some(x) => ctx.s(&x),
                None => format!(
                    "({}) * sqrt({}) ~ {:.12}",
                    ctx.s(&r.coefficient),
                    ctx.s(&r.radicand),
                    r.approx
                ),
            };
            let (x, y, a) = (root(&p.x), root(&p.y), root(&p.a));
            let json = json!({"x": x, "y": y, "A": a, "B": ctx.s(&p.b), "verified": p.verified});
            Ok(Report::new(json)
                .kv("x", x)
                .kv("y", y)
                .kv("A", a)
                .kv("B", ctx.s(&p.b))
                .kv("verified", p.verified)
                .check(p.verified))
        }
        AdeCommand::Degenerate { k, n, first, level } => {
            let d = ade::degenerate_dims(*k, *n, *first, *level)?;
            let tl = ade::degenerate_tl_dim(*n, *level)?;
            let json = json!({"k": k, "n": n, "first": first, "level": level, "dimension": d.to_string(), "tl_dimension": tl.to_string()});
            Ok(Report::new(json)
                .kv("dim H^{k,omega}", d)
                .kv("dim H^delta", tl)
                .kv("sum", d + tl))
        }
        AdeCommand::Audit { case } => {
            let r = ade::skein_relation_audit(&case_of(case))?;
            let json = serde_json::to_value(&r).expect("audit serializes");
            Ok(Report::new(json)
                .kv("a) lowest weight", r.lowest_weight)
                .kv("b) norm 1", r.unit_norm)
                .kv("c) rho eigenvalue", r.rho_eigenvalue)
                .kv("d) null relation", r.relation_d_null)
                .kv("e)", r.relation_e)
                .check(r.passed()))
        }
    }
}
