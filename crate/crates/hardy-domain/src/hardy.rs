//! The averaging operator `Sf(x) = (1/x) * integral of f over (0, x)` and
//! the level-set identity for its distribution function.

use crate::error::{Error, Result};
use crate::funcrep::atom::{Atom, AtomKind, Limit};
use crate::funcrep::piecewise::{
    IntegralStatus, NumericForm, Piece, PieceForm, PiecewiseFn,
};
use crate::numeric::bisect;
use crate::DEFAULT_TOL;

/// Transform bundle: the input, `Sf`, and the running integral `F` of `f`.
#[derive(Debug, Clone)]
pub struct HardyTransform {
    pub source: PiecewiseFn,
    pub result: PiecewiseFn,
    pub antiderivative: PiecewiseFn,
}

/// `Sf`, with closed-form pieces whenever the local antiderivative divided
/// by `x` stays inside the atom family.
pub fn hardy(f: &PiecewiseFn) -> Result<PiecewiseFn> {
    Ok(hardy_transform(f)?.result)
}

pub fn hardy_transform(f: &PiecewiseFn) -> Result<HardyTransform> {
    if f.is_zero() {
        return Ok(HardyTransform {
            source: f.clone(),
            result: PiecewiseFn::zero(),
            antiderivative: PiecewiseFn::zero(),
        });
    }
    // Refined breakpoints: 0 plus every piece boundary.
    let mut cuts = vec![0.0];
    for p in f.pieces() {
        cuts.push(p.lo);
        cuts.push(p.hi);
    }
    if cuts.iter().all(|c| c.is_finite()) {
        cuts.push(f64::INFINITY);
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    // Cumulative integral at each breakpoint.
    let mut cum = vec![0.0f64];
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let inc = if covering_piece(f, a, b).is_none() {
            0.0
        } else {
            match f.integrate(a, b, DEFAULT_TOL)?.status {
                IntegralStatus::Finite { value, .. } => value,
                IntegralStatus::Divergent { endpoint } => {
                    return Err(Error::domain(format!(
                        "not locally integrable: integral of f diverges at {endpoint}"
                    )))
                }
            }
        };
        cum.push(cum.last().unwrap() + inc);
    }

    let mut out_pieces = Vec::new();
    let mut cap_f_pieces = Vec::new();
    for (i, w) in cuts.windows(2).enumerate() {
        let (lo, hi) = (w[0], w[1]);
        let carried = cum[i];
        match covering_piece(f, lo, hi) {
            None => {
                if carried != 0.0 {
                    out_pieces.push(Piece::atoms(lo, hi, vec![Atom::power(carried, -1.0)]));
                    cap_f_pieces.push(Piece::atoms(lo, hi, vec![Atom::constant(carried)]));
                }
            }
            Some(src) => {
                let (sf, capf) = transform_piece(src, lo, hi, carried);
                out_pieces.push(sf);
                cap_f_pieces.push(capf);
            }
        }
    }
    Ok(HardyTransform {
        source: f.clone(),
        result: PiecewiseFn::new(out_pieces)?,
        antiderivative: PiecewiseFn::new(cap_f_pieces)?,
    })
}

fn covering_piece<'a>(f: &'a PiecewiseFn, lo: f64, hi: f64) -> Option<&'a Piece> {
    let mid = if hi.is_infinite() { lo + 1.0 } else { 0.5 * (lo + hi) };
    f.pieces().iter().find(|p| mid >= p.lo && mid < p.hi)
}

/// `Sf` and `F` on one interval `[lo, hi)` of the refined partition, where
/// `carried` is the integral of `f` over `(0, lo)`.
fn transform_piece(src: &Piece, lo: f64, hi: f64, carried: f64) -> (Piece, Piece) {
    if let PieceForm::Atoms(atoms) = &src.form {
        if let (Some(div_atoms), Some(f_lo)) = (sf_atoms(atoms), antideriv_sum_at(atoms, lo)) {
            // Sf(x) = (carried - F(lo))/x + F(x)/x with everything in family.
            let mut v = div_atoms;
            let c = carried - f_lo;
            if c != 0.0 {
                v.push(Atom::power(c, -1.0));
            }
            let sf = Piece::atoms(lo, hi, v);
            let atoms2 = atoms.to_vec();
            let capf = Piece::numeric(
                lo,
                hi,
                NumericForm::new("F", move |x| {
                    c + atoms2.iter().map(|a| a.antideriv(x)).sum::<f64>()
                }),
            );
            return (sf, capf);
        }
    }
    // Numeric fallback anchored at the interval midpoint: exact closures when
    // the source has an antiderivative, cached quadrature otherwise.
    let anchor = if hi.is_infinite() { lo + 1.0 } else { 0.5 * (lo + hi) };
    let local: Cumulative = Cumulative::new(src, anchor);
    let to_anchor = local.delta(lo);
    let base = carried - to_anchor; // integral of f over (0, anchor) shifted
    let l2 = local.clone();
    let src2 = src.clone();
    let cap = move |x: f64| base + l2.delta(x);
    let cap2 = cap.clone();
    let cap3 = cap.clone();
    let sf = Piece::numeric(
        lo,
        hi,
        NumericForm {
            eval: std::sync::Arc::new(move |x| cap(x) / x),
            deriv: Some(std::sync::Arc::new(move |x| {
                (src2.eval(x) - cap2(x) / x) / x
            })),
            antideriv: None,
            antideriv_log: None,
            label: "Sf".into(),
        },
    );
    let capf = Piece::numeric(lo, hi, NumericForm::new("F", cap3));
    (sf, capf)
}

/// Running integral of one source piece relative to an anchor point.
#[derive(Clone)]
struct Cumulative {
    piece: Piece,
    anchor: f64,
}

impl Cumulative {
    fn new(piece: &Piece, anchor: f64) -> Self {
        Cumulative {
            piece: piece.clone(),
            anchor,
        }
    }

    /// Integral of the piece from `anchor` to `x` (signed).
    fn delta(&self, x: f64) -> f64 {
        match &self.piece.form {
            PieceForm::Atoms(atoms) => {
                let fx = match antideriv_sum_at(atoms, x) {
                    Some(v) => v,
                    None => atoms.iter().map(|a| a.antideriv(x)).sum(),
                };
                let fa: f64 = atoms.iter().map(|a| a.antideriv(self.anchor)).sum();
                fx - fa
            }
            PieceForm::Numeric(n) => {
                if let Some(g) = &n.antideriv {
                    g(x) - g(self.anchor)
                } else {
                    let (a, b) = if x < self.anchor { (x, self.anchor) } else { (self.anchor, x) };
                    let e = n.eval.clone();
                    let (v, _) = crate::funcrep::quad::adaptive(&move |t| e(t), a, b, DEFAULT_TOL);
                    if x < self.anchor {
                        -v
                    } else {
                        v
                    }
                }
            }
        }
    }
}

fn antideriv_sum_at(atoms: &[Atom], x: f64) -> Option<f64> {
    let mut s = 0.0;
    for a in atoms {
        match a.antideriv_limit(x) {
            Limit::Finite(v) => s += v,
            Limit::Infinite => return None,
        }
    }
    Some(s)
}

/// `antideriv(atom)(x) / x` expressed in atoms, when possible.
fn sf_atoms(atoms: &[Atom]) -> Option<Vec<Atom>> {
    let mut out = Vec::new();
    for a in atoms {
        let v = match a.kind {
            AtomKind::Constant => Atom::constant(a.coeff),
            AtomKind::Power { alpha } => {
                if alpha == -1.0 {
                    return None; // log(x)/x leaves the family
                }
                Atom::power(a.coeff / (alpha + 1.0), alpha)
            }
            AtomKind::AffinePower { a: p, b, alpha } => {
                if b == 0.0 {
                    Atom::constant(a.coeff * p.powf(alpha))
                } else {
                    return None; // (p + b x)^(alpha+1) / x is not an atom
                }
            }
            AtomKind::LogRecip { beta, shift } => {
                if beta == 1.0 || shift != 0.0 {
                    return None;
                }
                // antideriv = u^(1-beta)/(beta-1); dividing by x gives the
                // logrecip atom of order beta-1.
                Atom::log_recip(a.coeff / (beta - 1.0), beta - 1.0)
            }
        };
        out.push(v);
    }
    Some(out)
}

/// The level-set form of the distribution function of `Sf` for `f >= 0`:
/// `(1/t) * integral of f over {Sf > t}`.
pub fn levelset_distribution(f: &PiecewiseFn, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::domain("level must be positive"));
    }
    let sf = hardy(f)?;
    let set = superlevel_set(&sf, t)?;
    let mut total = 0.0;
    for (a, b) in set {
        match f.integrate(a, b, DEFAULT_TOL)?.status {
            IntegralStatus::Finite { value, .. } => total += value,
            IntegralStatus::Divergent { endpoint } => {
                return Err(Error::domain(format!(
                    "integral of f diverges at {endpoint}"
                )))
            }
        }
    }
    Ok(total / t)
}

/// `{g > t}` as a union of intervals, found by dense sampling plus bracketed
/// root-finding on each piece of `g`. Errors when the set has infinite
/// measure (the tail of `g` stays above `t`).
pub fn superlevel_set(g: &PiecewiseFn, t: f64) -> Result<Vec<(f64, f64)>> {
    let mut edges: Vec<f64> = Vec::new();
    let mut above_regions: Vec<(f64, f64)> = Vec::new();
    for p in g.pieces() {
        let hi = if p.hi.is_infinite() {
            // Bound the tail: g must eventually fall below t.
            let mut x = p.lo.max(1.0);
            let mut bounded = false;
            for _ in 0..2000 {
                if g.eval(x) <= t {
                    bounded = true;
                    break;
                }
                x *= 2.0;
            }
            if !bounded {
                return Err(Error::domain(format!(
                    "superlevel set at {t} has infinite measure (tail beyond {x:.3e})"
                )));
            }
            x
        } else {
            p.hi
        };
        let lo = p.lo;
        let n = 256;
        let mut prev_x = lo + (hi - lo) * 1e-9;
        let mut prev_above = g.eval(prev_x) > t;
        let mut run_start = if prev_above { Some(p.lo) } else { None };
        for i in 1..=n {
            let x = lo + (hi - lo) * i as f64 / n as f64;
            let x = x.min(hi * (1.0 - 1e-12));
            let above = g.eval(x) > t;
            if above != prev_above {
                let root = bisect(|y| g.eval(y) - t, prev_x, x, 1e-12).unwrap_or(0.5 * (prev_x + x));
                edges.push(root);
                if above {
                    run_start = Some(root);
                } else if let Some(s) = run_start.take() {
                    above_regions.push((s, root));
                }
                prev_above = above;
            }
            prev_x = x;
        }
        if let Some(s) = run_start.take() {
            above_regions.push((s, hi));
        }
    }
    // Merge adjacent regions across piece boundaries.
    above_regions.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for (a, b) in above_regions {
        if let Some(last) = merged.last_mut() {
            if a <= last.1 + 1e-12 * last.1.abs().max(1.0) {
                last.1 = last.1.max(b);
                continue;
            }
        }
        merged.push((a, b));
    }
    let _ = edges;
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi01() -> PiecewiseFn {
        PiecewiseFn::indicator(0.0, 1.0)
    }

    #[test]
    fn hardy_of_unit_indicator() {
        // S chi_(0,1) = 1 on (0,1), 1/t on (1,inf).
        let sf = hardy(&chi01()).unwrap();
        assert!((sf.eval(0.5) - 1.0).abs() < 1e-15);
        assert!((sf.eval(4.0) - 0.25).abs() < 1e-15);
        assert!((sf.eval(1000.0) - 1e-3).abs() < 1e-15);
    }

    #[test]
    fn hardy_of_shifted_indicator() {
        // S chi_(a,b)(x) = (1 - a/x) on (a,b), (b-a)/x beyond, here (1,2).
        let sf = hardy(&PiecewiseFn::indicator(1.0, 2.0)).unwrap();
        assert_eq!(sf.eval(0.5), 0.0);
        assert!((sf.eval(1.5) - (1.0 - 1.0 / 1.5)).abs() < 1e-15);
        assert!((sf.eval(8.0) - 1.0 / 8.0).abs() < 1e-15);
    }

    #[test]
    fn hardy_of_falpha_matches_formula() {
        // f = (1-t)^(-1/2) chi_(0,1); Sf = (1 - (1-t)^(1/2)) / (t/2) on (0,1)
        // and 2/t beyond.
        let f = PiecewiseFn::single(0.0, 1.0, Atom::affine_power(1.0, 1.0, -1.0, -0.5));
        let sf = hardy(&f).unwrap();
        for &t in &[0.1f64, 0.4, 0.9, 0.999] {
            let expect = (1.0 - (1.0 - t).sqrt()) / (0.5 * t);
            assert!((sf.eval(t) - expect).abs() < 1e-11, "t={t}");
        }
        for &t in &[1.5, 10.0, 1e6] {
            assert!((sf.eval(t) - 2.0 / t).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn hardy_of_logrecip2_is_logrecip1() {
        // S g = 1/(t (2 - ln t)) on (0,1) for g = logrecip(2) on (0,1).
        let f = PiecewiseFn::single(0.0, 1.0, Atom::log_recip(1.0, 2.0));
        let sf = hardy(&f).unwrap();
        for &t in &[1e-6f64, 0.01, 0.5, 0.99] {
            let expect = 1.0 / (t * (2.0 - t.ln()));
            assert!(
                (sf.eval(t) - expect).abs() < 1e-12 * expect,
                "t={t}: {} vs {expect}",
                sf.eval(t)
            );
        }
        // Beyond the support: integral of g over (0,1) is 1/2.
        assert!((sf.eval(2.0) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn average_identity_at_samples() {
        let f = PiecewiseFn::single(0.0, 1.0, Atom::power(1.0, -0.5));
        let sf = hardy(&f).unwrap();
        for &x in &[0.25, 0.8, 2.0, 50.0] {
            let direct = f.integrate(0.0, x, 1e-12).unwrap().value();
            assert!((sf.eval(x) * x - direct).abs() < 1e-9, "x={x}");
        }
    }

    #[test]
    fn levelset_identity_for_indicator() {
        // f = chi_(0,1), t = 1/2: {Sf > 1/2} = (0,2), (1/t) int_f = 2.
        let v = levelset_distribution(&chi01(), 0.5).unwrap();
        assert!((v - 2.0).abs() < 1e-6);
        // t >= 1: Sf <= 1 so the set has measure 0.
        let v1 = levelset_distribution(&chi01(), 1.5).unwrap();
        assert!(v1.abs() < 1e-9);
    }

    #[test]
    fn superlevel_of_decreasing_tail() {
        let sf = hardy(&chi01()).unwrap();
        let set = superlevel_set(&sf, 0.25).unwrap();
        let measure: f64 = set.iter().map(|(a, b)| b - a).sum();
        assert!((measure - 4.0).abs() < 1e-6, "{set:?}");
    }
}
