//! Property-based invariants on randomized piecewise-atom functions.

use hardy_domain::funcrep::atom::Atom;
use hardy_domain::funcrep::parse;
use hardy_domain::funcrep::piecewise::{IntegralStatus, Piece, PiecewiseFn};
use hardy_domain::hardy::hardy;
use hardy_domain::numeric::log_grid;
use hardy_domain::rearrange::{check_equimeasurable, distribution, rearrangement};
use hardy_domain::spaces::{self, SpaceDescriptor};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum AtomSpec {
    Constant(f64),
    Power(f64, f64),
    Affine(f64, f64, f64),
}

fn atom_spec() -> impl Strategy<Value = AtomSpec> {
    prop_oneof![
        (0.1..3.0f64).prop_map(AtomSpec::Constant),
        (0.1..2.0f64, -0.4..1.0f64).prop_map(|(c, a)| AtomSpec::Power(c, a)),
        (0.1..2.0f64, 0.1..1.0f64, -1.5..-0.2f64).prop_map(|(c, a, al)| AtomSpec::Affine(c, a, al)),
    ]
}

#[derive(Debug, Clone)]
struct FnSpec {
    start: f64,
    pieces: Vec<(f64, f64, AtomSpec)>,
}

fn fn_spec() -> impl Strategy<Value = FnSpec> {
    (
        0.0..2.0f64,
        prop::collection::vec((0.0..1.0f64, 0.3..3.0f64, atom_spec()), 1..=3),
    )
        .prop_map(|(start, pieces)| FnSpec { start, pieces })
}

fn build(spec: &FnSpec) -> PiecewiseFn {
    let mut lo = spec.start;
    let mut out = Vec::new();
    for (gap, len, a) in &spec.pieces {
        lo += gap;
        let hi = lo + len;
        let atom = match *a {
            AtomSpec::Constant(c) => Atom::constant(c),
            AtomSpec::Power(c, alpha) => Atom::power(c, alpha),
            AtomSpec::Affine(c, a, alpha) => Atom::affine_power(c, a, 1.0, alpha),
        };
        out.push(Piece::atoms(lo, hi, vec![atom]));
        lo = hi;
    }
    PiecewiseFn::new(out).expect("ordered pieces")
}

fn finite_integral(f: &PiecewiseFn, a: f64, b: f64) -> f64 {
    match f.integrate(a, b, 1e-10).expect("integrable").status {
        IntegralStatus::Finite { value, .. } => value,
        IntegralStatus::Divergent { endpoint } => panic!("divergent at {endpoint}"),
    }
}

fn support(f: &PiecewiseFn) -> (f64, f64) {
    let lo = f.pieces().first().unwrap().lo;
    let hi = f.pieces().last().unwrap().hi;
    (lo, hi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn integral_splits_at_interior_points(spec in fn_spec(), frac in 0.1..0.9f64) {
        let f = build(&spec);
        let (a, b) = support(&f);
        let m = a + frac * (b - a);
        let whole = finite_integral(&f, a, b);
        let split = finite_integral(&f, a, m) + finite_integral(&f, m, b);
        prop_assert!((whole - split).abs() <= 1e-8 * whole.abs().max(1.0));
    }

    #[test]
    fn integral_is_homogeneous(spec in fn_spec(), c in 0.5..4.0f64) {
        let f = build(&spec);
        let (a, b) = support(&f);
        let whole = finite_integral(&f, a, b);
        let scaled = finite_integral(&f.scale(c), a, b);
        prop_assert!((scaled - c * whole).abs() <= 1e-8 * (c * whole).abs().max(1.0));
    }

    #[test]
    fn distribution_is_translation_invariant(spec in fn_spec(), delta in 0.1..5.0f64) {
        let f = build(&spec);
        let g = f.translated(delta);
        let df = distribution(&f).unwrap();
        let dg = distribution(&g).unwrap();
        let sup = df.sup_value();
        for &y in &log_grid(sup * 1e-2, sup * 0.95, 9) {
            prop_assert!((df.eval(y) - dg.eval(y)).abs() <= 1e-7);
        }
    }

    #[test]
    fn rearrangement_is_nonincreasing_and_equimeasurable(spec in fn_spec()) {
        let f = build(&spec);
        let fstar = rearrangement(&f).unwrap();
        let (_, hi) = support(&f);
        let mut prev = f64::INFINITY;
        for &t in &log_grid(1e-3, hi, 24) {
            let v = fstar.eval(t);
            prop_assert!(v <= prev * (1.0 + 1e-9) + 1e-12, "f* increases at {t}");
            prev = v;
        }
        let sup = distribution(&f).unwrap().sup_value();
        let levels = log_grid(sup * 1e-2, sup * 0.95, 9);
        prop_assert!(check_equimeasurable(&f, &fstar, &levels, 1e-6).unwrap());
    }

    #[test]
    fn transform_of_rearrangement_dominates_rearranged_transform(spec in fn_spec()) {
        let f = build(&spec);
        let sf_star = rearrangement(&hardy(&f.abs()).unwrap()).unwrap();
        let s_fstar = hardy(&rearrangement(&f).unwrap()).unwrap();
        for &t in &log_grid(1e-2, 1e2, 9) {
            let (a, b) = (sf_star.eval(t), s_fstar.eval(t));
            prop_assert!(a <= b * (1.0 + 1e-7) + 1e-9, "violated at {t}: {a} > {b}");
        }
    }

    #[test]
    fn transform_dominates_decreasing_functions(spec in fn_spec()) {
        let f = build(&spec);
        let fstar = rearrangement(&f).unwrap();
        let sfstar = hardy(&fstar).unwrap();
        for &t in &log_grid(1e-2, 1e2, 9) {
            prop_assert!(fstar.eval(t) <= sfstar.eval(t) * (1.0 + 1e-7) + 1e-9);
        }
    }

    #[test]
    fn hardy_inequality_in_l2(spec in fn_spec()) {
        let f = build(&spec);
        let l2: SpaceDescriptor = "Lp:2".parse().unwrap();
        let nf = spaces::norm(&l2, &f).unwrap();
        let nsf = spaces::norm(&l2, &hardy(&f.abs()).unwrap()).unwrap();
        prop_assert!(nsf <= 2.0 * nf * (1.0 + 1e-7) + 1e-9, "{nsf} > 2*{nf}");
    }

    #[test]
    fn norms_are_lattice_monotone(spec in fn_spec(), c in 1.0..3.0f64) {
        let f = build(&spec);
        let g = f.scale(c);
        for name in ["L1", "Lp:2", "L1+Linf"] {
            let x: SpaceDescriptor = name.parse().unwrap();
            let nf = spaces::norm(&x, &f).unwrap();
            let ng = spaces::norm(&x, &g).unwrap();
            prop_assert!(nf <= ng * (1.0 + 1e-8) + 1e-10, "{name}: {nf} > {ng}");
            // And positive homogeneity ties the two together.
            prop_assert!((ng - c * nf).abs() <= 1e-6 * ng.max(1.0));
        }
    }

    #[test]
    fn parser_round_trips_atom_functions(spec in fn_spec()) {
        let f = build(&spec);
        let printed = parse::pretty(&f);
        let reparsed = parse::parse(&printed).unwrap();
        let (a, b) = support(&f);
        for &frac in &[0.05, 0.31, 0.5, 0.77, 0.93] {
            let t = a + frac * (b - a);
            let (u, v) = (f.eval(t), reparsed.eval(t));
            prop_assert!((u - v).abs() <= 1e-12 * u.abs().max(1.0), "at {t}: {u} vs {v}");
        }
    }
}
