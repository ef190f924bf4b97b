//! Distribution functions and decreasing rearrangements.
//!
//! The distribution function is computed by slicing `|f|` into monotone
//! segments and inverting each one: closed-form inverses for power-type
//! atoms, bisection otherwise. The rearrangement is the right-continuous
//! generalized inverse of the distribution function, with exact fast paths
//! when `|f|` is already monotone on a contiguous support.

use crate::error::{Error, Result};
use crate::funcrep::atom::{Atom, AtomKind};
use crate::funcrep::piecewise::{NumericForm, Piece, PieceForm, PiecewiseFn};
use crate::numeric::bisect;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    NonIncreasing,
    NonDecreasing,
    Constant,
}

/// One monotone slice of `|f|`.
#[derive(Debug, Clone)]
struct MonoSeg {
    a: f64,
    b: f64,
    piece: Piece,
    dir: Dir,
    /// `|f|` limits at the left and right ends (may be infinite).
    va: f64,
    vb: f64,
}

impl MonoSeg {
    fn vmax(&self) -> f64 {
        self.va.max(self.vb)
    }

    fn vmin(&self) -> f64 {
        self.va.min(self.vb)
    }

    fn length(&self) -> f64 {
        self.b - self.a
    }

    /// Measure of `{t in (a,b) : |f|(t) > y}` for `y > 0`.
    fn contribution(&self, y: f64) -> f64 {
        if y >= self.vmax() {
            return 0.0;
        }
        if y < self.vmin() {
            return self.length();
        }
        let t = self.invert(y);
        match self.dir {
            Dir::NonIncreasing => t - self.a,
            Dir::NonDecreasing => self.b - t,
            Dir::Constant => self.length(),
        }
    }

    /// Solve `|f|(t) = y` inside the segment.
    fn invert(&self, y: f64) -> f64 {
        if let Some(t) = self.invert_closed(y) {
            return t;
        }
        let val = |t: f64| self.piece.eval(t).abs();
        // Endpoint on the high side of the level and a far point below it.
        let (high_end, far) = match self.dir {
            Dir::NonDecreasing => (self.b, self.a),
            _ => {
                let far = if self.b.is_finite() {
                    self.b
                } else {
                    // Expand until the value falls below y (tail decreasing).
                    let mut x = self.a.max(1.0);
                    for _ in 0..200 {
                        if val(x) <= y {
                            break;
                        }
                        x *= 2.0;
                    }
                    x
                };
                (self.a, far)
            }
        };
        // March geometrically toward the high end until the level is
        // straddled; a fixed nudge overshoots when the endpoint is singular
        // and the level is large.
        let mut low_t = far;
        let mut high_t = high_end;
        let mut found = false;
        for k in 1..1080 {
            let t = high_end + (far - high_end) * 0.5f64.powi(k);
            if t == high_end {
                break;
            }
            let v = val(t);
            if v.is_nan() {
                continue;
            }
            if v < y {
                low_t = t;
            } else {
                high_t = t;
                found = true;
                break;
            }
        }
        if !found {
            return high_end;
        }
        // The far endpoint itself may be singular; walk the low bracket in
        // from it until the value is finite and below the level.
        if !(val(low_t) < y) {
            for k in 1..1080 {
                let t = far + (high_t - far) * 0.5f64.powi(k);
                if t == far {
                    break;
                }
                let v = val(t);
                if v.is_finite() && v < y {
                    low_t = t;
                    break;
                }
            }
        }
        let g = |t: f64| val(t) - y;
        bisect(g, low_t.min(high_t), low_t.max(high_t), 1e-13)
            .unwrap_or(0.5 * (low_t + high_t))
    }

    fn invert_closed(&self, y: f64) -> Option<f64> {
        let atom = match &self.piece.form {
            PieceForm::Atoms(v) if v.len() == 1 => v[0],
            _ => return None,
        };
        let c = atom.coeff.abs();
        if c == 0.0 {
            return None;
        }
        match atom.kind {
            AtomKind::Power { alpha } if alpha != 0.0 => Some((y / c).powf(1.0 / alpha)),
            AtomKind::AffinePower { a, b, alpha } if alpha != 0.0 && b != 0.0 => {
                Some(((y / c).powf(1.0 / alpha) - a) / b)
            }
            _ => None,
        }
    }

    /// Atom form (in the level variable `y`) of the contribution on a band
    /// where inversion is active, when the inverse stays closed-form.
    fn contribution_atoms(&self) -> Option<Vec<Atom>> {
        let atom = match &self.piece.form {
            PieceForm::Atoms(v) if v.len() == 1 => v[0],
            _ => return None,
        };
        let c = atom.coeff.abs();
        if c == 0.0 {
            return None;
        }
        // inv(y) = k * y^(1/alpha) + d
        let (k, inv_alpha, d) = match atom.kind {
            AtomKind::Power { alpha } if alpha != 0.0 => {
                (c.powf(-1.0 / alpha), 1.0 / alpha, 0.0)
            }
            AtomKind::AffinePower { a, b, alpha } if alpha != 0.0 && b != 0.0 => {
                (c.powf(-1.0 / alpha) / b, 1.0 / alpha, -a / b)
            }
            _ => return None,
        };
        let mut out = Vec::new();
        match self.dir {
            Dir::NonIncreasing => {
                // inv(y) - a
                out.push(Atom::power(k, inv_alpha));
                if d - self.a != 0.0 {
                    out.push(Atom::constant(d - self.a));
                }
            }
            Dir::NonDecreasing => {
                // b - inv(y)
                out.push(Atom::power(-k, inv_alpha));
                if self.b - d != 0.0 {
                    out.push(Atom::constant(self.b - d));
                }
            }
            Dir::Constant => out.push(Atom::constant(self.length())),
        }
        Some(out)
    }
}

/// Distribution function of `|f|`.
#[derive(Debug, Clone)]
pub struct DistFn {
    segments: Vec<MonoSeg>,
    lambda: PiecewiseFn,
    /// Levels below this have infinite superlevel measure.
    inf_level: f64,
    /// Total measure of the support (may be infinite).
    total_support: f64,
}

impl DistFn {
    /// `lambda(t)`: measure of `{|f| > t}`, possibly infinite.
    pub fn eval(&self, t: f64) -> f64 {
        if t < self.inf_level {
            return f64::INFINITY;
        }
        self.segments.iter().map(|s| s.contribution(t)).sum()
    }

    /// The finite part of the distribution function as a `PiecewiseFn` on
    /// levels above `inf_level`.
    pub fn as_piecewise(&self) -> &PiecewiseFn {
        &self.lambda
    }

    pub fn inf_level(&self) -> f64 {
        self.inf_level
    }

    pub fn total_support(&self) -> f64 {
        self.total_support
    }

    /// Largest finite value of `|f|` across segments (infinite when `|f|`
    /// is unbounded).
    pub fn sup_value(&self) -> f64 {
        self.segments.iter().map(|s| s.vmax()).fold(0.0, f64::max)
    }
}

const SEG_SAMPLES: usize = 96;

/// Sampling grid on a segment; unbounded pieces are probed out to a large
/// multiple of the lower endpoint.
fn sample_grid(lo: f64, hi: f64) -> Vec<f64> {
    let hi = if hi.is_infinite() {
        lo.max(1e-6) * 1e9
    } else {
        hi
    };
    let lo_adj = lo + (hi - lo) * 1e-9;
    (0..=SEG_SAMPLES)
        .map(|i| lo_adj + (hi - lo_adj) * i as f64 / SEG_SAMPLES as f64)
        .collect()
}

fn endpoint_value(p: &Piece, endpoint: f64, other: f64) -> f64 {
    let probe = |x: f64| p.eval(x).abs();
    if endpoint.is_infinite() {
        // Limit at infinity along a doubling sequence.
        let mut x = other.max(1.0);
        let v0 = probe(x);
        let mut v = v0;
        let mut grew = false;
        let mut shrank = false;
        for _ in 0..80 {
            x *= 2.0;
            let w = probe(x);
            if w.abs() < 1e-18 {
                // Below any level resolvable at working tolerance.
                return 0.0;
            }
            if (w - v).abs() <= 1e-12 * v.abs().max(1e-12) {
                return w;
            }
            grew |= w > v;
            shrank |= w < v;
            v = w;
        }
        // Never stabilized across 80 doublings: a monotone run is a slow
        // power-law trend whose limit is 0 or infinity.
        if shrank && !grew && v < 1e-3 * v0.max(1e-300) {
            return 0.0;
        }
        if grew && !shrank && v > 1e3 * v0 {
            return f64::INFINITY;
        }
        return v;
    }
    let width = (other - endpoint).abs();
    let mut h = width * 0.5;
    let v0 = probe(endpoint + h.copysign(other - endpoint));
    let mut v = v0;
    let mut grew = false;
    let mut shrank = false;
    let mut streak = 0u32;
    for _ in 0..80 {
        h *= 0.5;
        let x = endpoint + h.copysign(other - endpoint);
        if x == endpoint {
            break;
        }
        let w = probe(x);
        if !w.is_finite() || w > 1e15 {
            return f64::INFINITY;
        }
        if (w - v).abs() <= 1e-11 * v.abs().max(1e-12) {
            // Interior plateaus can mimic convergence; trust a streak only
            // once the probe sits close to the endpoint.
            streak += 1;
            if streak >= 3 && h <= 1e-6 * width {
                // One Richardson step: with h halving each probe, a linear
                // approach to the limit leaves error -(w - v).
                return w + (w - v);
            }
        } else {
            streak = 0;
            grew |= w > v;
            shrank |= w < v;
        }
        v = w;
    }
    if grew && !shrank && v > 1e3 * v0 {
        return f64::INFINITY;
    }
    if shrank && !grew && v.abs() < 1e-3 * v0.abs().max(1e-300) {
        return 0.0;
    }
    v
}

/// Split the pieces of `|f|` into monotone segments by derivative-sign
/// sampling with root-refined break points.
fn monotone_segments(f: &PiecewiseFn) -> Result<Vec<MonoSeg>> {
    let g = f.abs();
    let mut out = Vec::new();
    for p in g.pieces() {
        let grid = sample_grid(p.lo, p.hi);
        let vals: Vec<f64> = grid.iter().map(|&x| p.eval(x)).collect();
        // Locate direction changes.
        let mut breaks = vec![p.lo];
        let mut prev_dir = 0i8;
        for i in 1..vals.len() {
            let d = vals[i] - vals[i - 1];
            let dir = if d > 1e-13 * vals[i].abs().max(1e-300) {
                1
            } else if d < -1e-13 * vals[i].abs().max(1e-300) {
                -1
            } else {
                0
            };
            if dir != 0 && prev_dir != 0 && dir != prev_dir {
                // Extremum between grid[i-2] and grid[i]: refine on the
                // derivative when available, else keep the midpoint.
                let lo = grid[i.saturating_sub(2)];
                let hi = grid[i];
                let dv = |x: f64| {
                    let h = 1e-7 * x.abs().max(1e-7);
                    (p.eval(x + h) - p.eval(x - h)) / (2.0 * h)
                };
                let root = bisect(dv, lo, hi, 1e-12).unwrap_or(0.5 * (lo + hi));
                breaks.push(root);
            }
            if dir != 0 {
                prev_dir = dir;
            }
        }
        breaks.push(p.hi);
        breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * a.abs().max(1.0));
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a >= b {
                continue;
            }
            let va = endpoint_value(p, a, if b.is_infinite() { a + 1.0 } else { b });
            let vb = endpoint_value(p, b, a);
            let dir = if !va.is_finite() || !vb.is_finite() {
                if va > vb {
                    Dir::NonIncreasing
                } else if vb > va {
                    Dir::NonDecreasing
                } else {
                    Dir::Constant
                }
            } else if (va - vb).abs() <= 1e-12 * va.abs().max(vb.abs()).max(1e-300) {
                Dir::Constant
            } else if va > vb {
                Dir::NonIncreasing
            } else {
                Dir::NonDecreasing
            };
            if b.is_infinite() && vb > 0.0 && vb.is_finite() {
                // Positive limit at infinity: every level below vb has
                // infinite superlevel measure; handled via inf_level.
            }
            out.push(MonoSeg {
                a,
                b,
                piece: p.clone(),
                dir,
                va,
                vb,
            });
        }
    }
    if out.iter().any(|s| !s.va.is_finite() && !s.vb.is_finite() && s.dir == Dir::Constant) {
        return Err(Error::domain("piece with non-finite values throughout"));
    }
    Ok(out)
}

/// Distribution function `lambda_f(t) = |{ |f| > t }|`.
pub fn distribution(f: &PiecewiseFn) -> Result<DistFn> {
    let segments = monotone_segments(f)?;
    let total_support: f64 = segments.iter().map(|s| s.length()).sum();
    // Levels with infinite measure: an unbounded segment whose values stay
    // above the level.
    let inf_level = segments
        .iter()
        .filter(|s| s.length().is_infinite())
        .map(|s| s.vmin())
        .fold(0.0, f64::max);
    let lambda = assemble_lambda(&segments, inf_level)?;
    Ok(DistFn {
        segments,
        lambda,
        inf_level,
        total_support,
    })
}

fn assemble_lambda(segments: &[MonoSeg], inf_level: f64) -> Result<PiecewiseFn> {
    // Critical levels: all finite endpoint values.
    let mut cuts: Vec<f64> = vec![inf_level.max(0.0)];
    for s in segments {
        for v in [s.va, s.vb] {
            if v.is_finite() && v > inf_level {
                cuts.push(v);
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * a.abs().max(1e-300));
    let vmax_all = segments
        .iter()
        .map(|s| s.vmax())
        .fold(0.0, f64::max);
    if vmax_all.is_infinite() {
        cuts.push(f64::INFINITY);
    }
    let mut pieces: Vec<Piece> = Vec::new();
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if lo >= hi {
            continue;
        }
        let mid = if hi.is_infinite() { lo * 2.0 + 1.0 } else { 0.5 * (lo + hi) };
        // Sum contributions of active segments on this band.
        let mut atoms: Vec<Atom> = Vec::new();
        let mut closed = true;
        let mut active: Vec<&MonoSeg> = Vec::new();
        for s in segments {
            if mid >= s.vmax() {
                continue;
            }
            active.push(s);
            if mid < s.vmin() {
                if s.length().is_finite() {
                    atoms.push(Atom::constant(s.length()));
                } else {
                    closed = false;
                }
            } else if let Some(mut v) = s.contribution_atoms() {
                atoms.append(&mut v);
            } else {
                closed = false;
            }
        }
        if active.is_empty() {
            continue;
        }
        let form = if closed {
            PieceForm::Atoms(atoms)
        } else {
            let segs: Vec<MonoSeg> = active.into_iter().cloned().collect();
            PieceForm::Numeric(NumericForm::new("lambda", move |y| {
                segs.iter().map(|s| s.contribution(y)).sum()
            }))
        };
        pieces.push(Piece { lo, hi, form });
    }
    PiecewiseFn::new(pieces)
}

/// Decreasing rearrangement `f*`: the right-continuous generalized inverse
/// of the distribution function.
pub fn rearrangement(f: &PiecewiseFn) -> Result<PiecewiseFn> {
    let g = f.abs();
    if g.is_zero() {
        return Ok(PiecewiseFn::zero());
    }
    // Fast path: |f| non-increasing on a contiguous support.
    if let Some(r) = monotone_fast_path(&g)? {
        return Ok(r);
    }
    let d = distribution(f)?;
    let m = d.total_support();
    let dd = d.clone();
    let inv = move |s: f64| generalized_inverse(&dd, s);
    let piece = Piece::numeric(0.0, m, NumericForm::new("f*", inv));
    PiecewiseFn::new(vec![piece])
}

fn generalized_inverse(d: &DistFn, s: f64) -> f64 {
    if d.eval(0.0) <= s {
        return 0.0;
    }
    // Bracket: expand until lambda(hi) <= s.
    let mut hi = 1.0;
    let mut ok = false;
    for _ in 0..1100 {
        if d.eval(hi) <= s {
            ok = true;
            break;
        }
        hi *= 2.0;
    }
    if !ok {
        return f64::INFINITY;
    }
    let mut lo = 0.0f64;
    for _ in 0..100 {
        let midv = 0.5 * (lo + hi);
        if d.eval(midv) <= s {
            hi = midv;
        } else {
            lo = midv;
        }
        if hi - lo <= 1e-14 * hi.max(1e-300) {
            break;
        }
    }
    hi
}

/// `|f|` already non-increasing on contiguous support: `f*` is the
/// translate of `|f|` to the origin (exactly `|f|` when the support starts
/// at 0). Also handles a single increasing piece by reflection.
fn monotone_fast_path(g: &PiecewiseFn) -> Result<Option<PiecewiseFn>> {
    let pieces = g.pieces();
    // Contiguous support?
    for w in pieces.windows(2) {
        if (w[1].lo - w[0].hi).abs() > 1e-12 * w[1].lo.abs().max(1.0) {
            return Ok(None);
        }
    }
    let (s0, _) = g.support();
    // Non-increasing across the whole support?
    let mut non_increasing = true;
    let mut prev = f64::INFINITY;
    for p in pieces {
        for &x in &sample_grid(p.lo, p.hi) {
            let v = p.eval(x);
            if !v.is_finite() {
                continue;
            }
            if v > prev + 1e-10 * v.abs().max(1.0) {
                non_increasing = false;
                break;
            }
            prev = v;
        }
        if !non_increasing {
            break;
        }
    }
    if non_increasing {
        if s0 == 0.0 {
            return Ok(Some(g.clone()));
        }
        return Ok(Some(g.translated(-s0)));
    }
    // Single increasing piece: reflect about its right endpoint.
    if pieces.len() == 1 && pieces[0].hi.is_finite() {
        let p = &pieces[0];
        let mut increasing = true;
        let mut prev = -f64::INFINITY;
        for &x in &sample_grid(p.lo, p.hi) {
            let v = p.eval(x);
            if !v.is_finite() {
                continue;
            }
            if v < prev - 1e-10 * v.abs().max(1.0) {
                increasing = false;
                break;
            }
            prev = v;
        }
        if increasing {
            let (a, b) = (p.lo, p.hi);
            let form = match &p.form {
                PieceForm::Atoms(atoms) => {
                    match atoms.iter().map(|at| at.reflected(b)).collect::<Option<Vec<_>>>() {
                        Some(v) => PieceForm::Atoms(v),
                        None => {
                            let p2 = p.clone();
                            PieceForm::Numeric(NumericForm::new("reflect", move |t| {
                                p2.eval(b - t)
                            }))
                        }
                    }
                }
                PieceForm::Numeric(n) => {
                    let e = n.eval.clone();
                    PieceForm::Numeric(NumericForm::new(format!("reflect({})", n.label), move |t| {
                        e(b - t)
                    }))
                }
            };
            return Ok(Some(PiecewiseFn::new(vec![Piece {
                lo: 0.0,
                hi: b - a,
                form,
            }])?));
        }
    }
    Ok(None)
}

/// `|lambda_f - lambda_g| <= tol` at each level.
pub fn check_equimeasurable(
    f: &PiecewiseFn,
    g: &PiecewiseFn,
    levels: &[f64],
    tol: f64,
) -> Result<bool> {
    let df = distribution(f)?;
    let dg = distribution(g)?;
    for &y in levels {
        let (a, b) = (df.eval(y), dg.eval(y));
        if a.is_infinite() && b.is_infinite() {
            continue;
        }
        if (a - b).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcrep::atom::Atom;

    #[test]
    fn indicator_distribution_and_rearrangement() {
        let f = PiecewiseFn::indicator(3.0, 5.0);
        let d = distribution(&f).unwrap();
        assert_eq!(d.eval(0.5), 2.0);
        assert_eq!(d.eval(1.5), 0.0);
        let r = rearrangement(&f).unwrap();
        assert_eq!(r.eval(1.0), 1.0);
        assert_eq!(r.eval(2.5), 0.0);
    }

    #[test]
    fn distribution_of_hardy_indicator() {
        // f = S chi_(0,1): lambda(t) = 1/t for t < 1, 0 for t >= 1.
        let f = crate::hardy::hardy(&PiecewiseFn::indicator(0.0, 1.0)).unwrap();
        let d = distribution(&f).unwrap();
        assert!((d.eval(0.5) - 2.0).abs() < 1e-9);
        assert!((d.eval(0.25) - 4.0).abs() < 1e-9);
        assert!(d.eval(1.5).abs() < 1e-9);
    }

    #[test]
    fn falpha_distribution_closed_form() {
        // f = (1-t)^(-1/2) on (0,1): lambda(y) = 1 for y < 1, y^-2 for y >= 1.
        let f = PiecewiseFn::single(0.0, 1.0, Atom::affine_power(1.0, 1.0, -1.0, -0.5));
        let d = distribution(&f).unwrap();
        assert!((d.eval(0.5) - 1.0).abs() < 1e-12);
        assert!((d.eval(2.0) - 0.25).abs() < 1e-10);
        assert!((d.eval(10.0) - 0.01).abs() < 1e-10);
    }

    #[test]
    fn falpha_rearrangement_is_power() {
        // ((1-t)^(-1/2) chi_(0,1))* = t^(-1/2) chi_(0,1), exactly.
        let f = PiecewiseFn::single(0.0, 1.0, Atom::affine_power(1.0, 1.0, -1.0, -0.5));
        let r = rearrangement(&f).unwrap();
        match &r.pieces()[0].form {
            PieceForm::Atoms(v) => {
                assert_eq!(v.len(), 1);
                for &t in &[0.25f64, 0.5, 0.81] {
                    assert!((v[0].eval(t) - t.powf(-0.5)).abs() < 1e-13, "t={t}");
                }
            }
            other => panic!("expected closed form, got {other:?}"),
        }
    }

    #[test]
    fn decreasing_function_is_its_own_rearrangement() {
        let f = crate::hardy::hardy(&PiecewiseFn::indicator(0.0, 1.0)).unwrap();
        let r = rearrangement(&f).unwrap();
        for &t in &[0.3f64, 0.9, 2.0, 17.0] {
            assert!((r.eval(t) - f.eval(t)).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn shifted_function_equimeasurable() {
        let g = PiecewiseFn::single(0.0, 1.0, Atom::log_recip(1.0, 2.0));
        let f = g.translated(1.0);
        let levels: Vec<f64> = crate::numeric::log_grid(1e-3, 1e3, 41);
        assert!(check_equimeasurable(&f, &g, &levels, 1e-9).unwrap());
        assert!(!check_equimeasurable(
            &PiecewiseFn::indicator(0.0, 1.0),
            &PiecewiseFn::indicator(0.0, 2.0),
            &[0.5],
            1e-9
        )
        .unwrap());
    }

    #[test]
    fn translated_logrecip_rearranges_to_original() {
        // f(t) = g(t-1) on (1,2) has f* = g pointwise.
        let g = PiecewiseFn::single(0.0, 1.0, Atom::log_recip(1.0, 2.0));
        let f = g.translated(1.0);
        let r = rearrangement(&f).unwrap();
        for &t in &[0.1f64, 0.4, 0.75, 0.99] {
            let expect = g.eval(t);
            assert!(
                (r.eval(t) - expect).abs() < 1e-9 * expect.abs().max(1.0),
                "t={t}: {} vs {expect}",
                r.eval(t)
            );
        }
    }

    #[test]
    fn nonmonotone_hat_function() {
        // Tent: t on (0,1), 2-t on (1,2). Rearrangement: 2-2s on (0,1)...
        // lambda(y) = 2(1-y) for y in (0,1); inverse: f*(s) = 1 - s/2.
        let f = PiecewiseFn::new(vec![
            Piece::atoms(0.0, 1.0, vec![Atom::power(1.0, 1.0)]),
            Piece::atoms(1.0, 2.0, vec![Atom::affine_power(1.0, 2.0, -1.0, 1.0)]),
        ])
        .unwrap();
        let d = distribution(&f).unwrap();
        assert!((d.eval(0.5) - 1.0).abs() < 1e-9);
        let r = rearrangement(&f).unwrap();
        for &s in &[0.2f64, 1.0, 1.7] {
            assert!((r.eval(s) - (1.0 - s / 2.0)).abs() < 1e-7, "s={s}");
        }
    }

    #[test]
    fn mass_is_preserved() {
        let f = PiecewiseFn::single(0.0, 1.0, Atom::affine_power(1.0, 1.0, -1.0, -0.5));
        let r = rearrangement(&f).unwrap();
        let m0 = f.integrate(0.0, f64::INFINITY, 1e-10).unwrap().value();
        let m1 = r.integrate(0.0, f64::INFINITY, 1e-10).unwrap().value();
        assert!((m0 - 2.0).abs() < 1e-12);
        assert!((m1 - 2.0).abs() < 1e-9);
    }
}
