//! Randomized invariants of the scalar field, the diagram algebras, the
//! modules, the series transform and the graph walk counts.

use atl_core::annular::{AnnularDiagram, GeneratorKind, Level};
use atl_core::graphs::PointedBipartiteGraph;
use atl_core::scalar::chebyshev;
use atl_core::series::{annular_multiplicities, module_dim_series, theta_transform, DimSeriesKind, IntSeries};
use atl_core::tl::{enumerate_tl_basis, TLElement};
use atl_core::tlmodules::ModuleSpec;
use atl_core::{cyclo, CycloNumber};
use num_bigint::BigInt;
use proptest::prelude::*;

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];
const FLOAT_TOL: f64 = 1e-9;

fn scalar() -> impl Strategy<Value = CycloNumber> {
    (
        prop::sample::select(CONDUCTORS.to_vec()),
        prop::collection::vec((-4i64..=4, 1i64..=3), 1..4),
    )
        .prop_map(|(n, cs)| {
            cs.iter()
                .enumerate()
                .map(|(j, &(p, q))| cyclo(n, j as i64) * CycloNumber::from_ratio(p, q))
                .sum()
        })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < FLOAT_TOL && (a.1 - b.1).abs() < FLOAT_TOL
}

/// A random element of TL_n with small integer coefficients.
fn tl_element(n: usize) -> impl Strategy<Value = TLElement> {
    let basis = enumerate_tl_basis(n);
    let len = basis.len();
    prop::collection::vec((0..len, -2i64..=2), 1..4).prop_map(move |terms| {
        let mut x = TLElement::zero(n);
        for (i, c) in terms {
            x.add_term(basis[i].clone(), &CycloNumber::from_integer(c));
        }
        x
    })
}

/// A generator whose inner level is Pos(m), if the draw is valid.
fn generator_at(kind: usize, m: usize, i: usize) -> Option<AnnularDiagram> {
    let kind = [
        GeneratorKind::Eps,
        GeneratorKind::EpsBar,
        GeneratorKind::F,
        GeneratorKind::Rho,
    ][kind % 4];
    let points = if kind == GeneratorKind::EpsBar {
        2 * m + 2
    } else {
        2 * m
    };
    AnnularDiagram::generator(kind, m, 1 + i % points)
        .ok()
        .filter(|g| g.inner_level() == Some(Level::Pos(m)))
}

/// Compose a word of generators starting at level m; None if a draw is invalid.
fn word(m: usize, draws: &[(usize, usize)]) -> Option<Vec<AnnularDiagram>> {
    let mut level = m;
    let mut out = Vec::new();
    for &(k, i) in draws {
        let g = generator_at(k, level, i)?;
        level = match g.outer_level()? {
            Level::Pos(h) if h >= 1 => h,
            _ => return None,
        };
        out.push(g);
    }
    Some(out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        prop_assert!(a.norm_sqr().is_real());
        prop_assert!(!a.norm_sqr().sign().unwrap().eq(&atl_core::Sign::Negative));
    }

    #[test]
    fn float_embedding(a in scalar(), b in scalar()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        let prod = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        prop_assert!(close((&a * &b).to_complex(), prod));
        prop_assert!(close((&a + &b).to_complex(), (x.0 + y.0, x.1 + y.1)));
    }

    #[test]
    fn chebyshev_at_roots(n in 3i64..=20, k in 0usize..=12) {
        let delta = CycloNumber::cos_pi(1, n) * CycloNumber::from_integer(2);
        let want = CycloNumber::sin_pi(k as i64, n).checked_div(&CycloNumber::sin_pi(1, n)).unwrap();
        prop_assert_eq!(chebyshev(k, &delta), want);
    }

    #[test]
    fn tl_associative_and_star(a in tl_element(4), b in tl_element(4), c in tl_element(4), d in -3i64..=3) {
        let delta = CycloNumber::from_integer(d);
        let ab_c = a.multiply(&b, &delta).unwrap().multiply(&c, &delta).unwrap();
        let a_bc = a.multiply(&b.multiply(&c, &delta).unwrap(), &delta).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(a.multiply(&b, &delta).unwrap().star(), b.star().multiply(&a.star(), &delta).unwrap());
        prop_assert_eq!(a.star().star(), a.clone());
    }

    #[test]
    fn tl_relations(n in 2usize..=6, d in 1i64..=4) {
        let delta = CycloNumber::from_integer(d);
        for i in 1..n {
            let e = TLElement::e(n, i).unwrap();
            prop_assert_eq!(e.multiply(&e, &delta).unwrap(), e.scale(&delta));
            for j in 1..n {
                let f = TLElement::e(n, j).unwrap();
                let ef = e.multiply(&f, &delta).unwrap();
                if i.abs_diff(j) == 1 {
                    prop_assert_eq!(ef.multiply(&e, &delta).unwrap(), e.clone());
                } else if i.abs_diff(j) > 1 {
                    prop_assert_eq!(ef, f.multiply(&e, &delta).unwrap());
                }
            }
        }
    }

    #[test]
    fn annular_words(m in 2usize..=3, draws in prop::collection::vec((0usize..4, 1usize..=8), 3)) {
        let w = word(m, &draws);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        let delta = CycloNumber::from_integer(2);
        let (s, t, u) = (&w[0], &w[1], &w[2]);
        let left = u.compose(&t.compose(s, &delta).unwrap().diagram, &delta).unwrap();
        let ut = u.compose(t, &delta).unwrap();
        let right = ut.diagram.compose(s, &delta).unwrap();
        prop_assert_eq!(&left.diagram, &right.diagram);
        prop_assert_eq!(left.weight * t.compose(s, &delta).unwrap().weight, right.weight * ut.weight);
        for g in &w {
            prop_assert_eq!(&g.star().star(), g);
        }
        let ts = t.compose(s, &delta).unwrap().diagram;
        prop_assert!(ts.through_strings() <= s.through_strings().min(t.through_strings()));
        prop_assert_eq!(t.compose(s, &delta).unwrap().diagram.star(), s.star().compose(&t.star(), &delta).unwrap().diagram);
    }

    #[test]
    fn module_action_and_form(m in 2usize..=3, draws in prop::collection::vec((0usize..4, 1usize..=8), 2), i in 0usize..64, j in 0usize..64) {
        let w = word(m, &draws);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        let delta = CycloNumber::from_integer(3);
        let spec = ModuleSpec::low_weight(1, CycloNumber::one(), delta.clone()).unwrap();
        let basis = spec.basis(Level::Pos(m)).unwrap();
        let v = spec.basis_vector(Level::Pos(m), &basis[i % basis.len()]).unwrap();
        let x = spec.basis_vector(Level::Pos(m), &basis[j % basis.len()]).unwrap();
        let (s, t) = (&w[0], &w[1]);
        let ts = t.compose(s, &delta).unwrap();
        let lhs = spec.act(t, &spec.act(s, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, spec.act(&ts.diagram, &v).unwrap().scale(&ts.weight));
        let sx = spec.act(s, &x).unwrap();
        let sv = spec.act(s, &v).unwrap();
        prop_assert_eq!(spec.inner(&sv, &sx).unwrap(), spec.inner(&v, &spec.act(&s.star(), &sx).unwrap()).unwrap());
        prop_assert_eq!(spec.inner(&v, &x).unwrap(), spec.inner(&x, &v).unwrap().conj());
    }

    #[test]
    fn ad_rho_half_isometry(m in 2usize..=4, k in 1usize..=2, i in 0usize..128, j in 0usize..128) {
        prop_assume!(m >= k);
        let spec = ModuleSpec::low_weight(k, CycloNumber::from_integer(if k == 2 { -1 } else { 1 }), CycloNumber::from_integer(3)).unwrap();
        let basis = spec.basis(Level::Pos(m)).unwrap();
        let v = spec.basis_vector(Level::Pos(m), &basis[i % basis.len()]).unwrap();
        let x = spec.basis_vector(Level::Pos(m), &basis[j % basis.len()]).unwrap();
        let (av, ax) = (spec.ad_rho_half(&v).unwrap(), spec.ad_rho_half(&x).unwrap());
        prop_assert_eq!(spec.inner(&av, &ax).unwrap(), spec.inner(&v, &x).unwrap());
        // Ad² = ω̄ρ, so Ad^{2mk} is the identity
        let mut u = v.clone();
        for _ in 0..2 * m * k {
            u = spec.ad_rho_half(&u).unwrap();
        }
        prop_assert_eq!(u, v);
    }

    #[test]
    fn theta_matches_closed_form(tail in prop::collection::vec(0i64..1000, 1..14)) {
        let mut dims = vec![1];
        dims.extend(tail);
        let r = dims.len() - 1;
        let closed = annular_multiplicities(&dims, r).unwrap();
        let theta = theta_transform(&IntSeries::from_integers(&dims, r)).unwrap();
        prop_assert_eq!(theta.to_integers().unwrap(), closed);
    }

    #[test]
    fn low_weight_dims_are_binomials(k in 1usize..=4, m in 0usize..=12) {
        let s = module_dim_series(DimSeriesKind::LowWeight(k), 12);
        let want = if m < k { BigInt::from(0) } else {
            (0..(m - k) as u64).fold(BigInt::from(1), |a, i| a * (2 * m as u64 - i) / (i + 1))
        };
        prop_assert_eq!(s.coeff(m).to_integer(), want);
    }

    #[test]
    fn walks_match_matrix_powers(n in 2usize..=8, kind in 0usize..3, len in 0usize..=6) {
        let g = match kind {
            0 => PointedBipartiteGraph::a(n),
            1 => PointedBipartiteGraph::d(n.max(4)),
            _ => PointedBipartiteGraph::e(6 + n % 3),
        }.unwrap();
        let w = g.loop_counts(len);
        prop_assert_eq!(w[len].clone(), BigInt::from(g.count_walks(g.basepoint, len)));
        let total: u64 = (0..g.even.len()).map(|v| g.count_walks(v, len)).sum();
        prop_assert_eq!(g.all_starts_dims(len)[len].clone(), BigInt::from(total));
    }
}
