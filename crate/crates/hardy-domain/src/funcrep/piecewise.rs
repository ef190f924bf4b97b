//! Piecewise functions on the half line `(0, infinity)`.
//!
//! A `PiecewiseFn` is a finite list of disjoint pieces `[lo, hi)`, each
//! carrying either a sum of analytic atoms or a numeric closure, and is zero
//! off the listed pieces. Integration prefers closed-form antiderivatives and
//! only falls back to adaptive quadrature for numeric pieces.

use std::fmt;
use std::sync::Arc;

use super::atom::{Atom, Limit};
use super::quad::{self, QuadOutcome};
use crate::error::{Error, Result};

type DynFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A piece backed by closures instead of atoms. Optional closures unlock
/// exact derivatives and closed-form integration when available.
#[derive(Clone)]
pub struct NumericForm {
    pub eval: DynFn,
    pub deriv: Option<DynFn>,
    /// Antiderivative as a function of `t`.
    pub antideriv: Option<DynFn>,
    /// Antiderivative as a function of `ln t`, for pieces whose endpoints
    /// exceed the representable range.
    pub antideriv_log: Option<DynFn>,
    /// Short human-readable description used by `Display`.
    pub label: String,
}

impl NumericForm {
    pub fn new(label: impl Into<String>, eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        NumericForm {
            eval: Arc::new(eval),
            deriv: None,
            antideriv: None,
            antideriv_log: None,
            label: label.into(),
        }
    }

    pub fn with_antideriv(mut self, g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.antideriv = Some(Arc::new(g));
        self
    }

    pub fn with_deriv(mut self, g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.deriv = Some(Arc::new(g));
        self
    }
}

impl fmt::Debug for NumericForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericForm({})", self.label)
    }
}

#[derive(Debug, Clone)]
pub enum PieceForm {
    /// Sum of atoms.
    Atoms(Vec<Atom>),
    Numeric(NumericForm),
}

/// One piece, active on `[lo, hi)`. `hi` may be infinite.
#[derive(Debug, Clone)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub form: PieceForm,
}

impl Piece {
    pub fn atoms(lo: f64, hi: f64, atoms: Vec<Atom>) -> Self {
        Piece {
            lo,
            hi,
            form: PieceForm::Atoms(atoms),
        }
    }

    pub fn numeric(lo: f64, hi: f64, form: NumericForm) -> Self {
        Piece {
            lo,
            hi,
            form: PieceForm::Numeric(form),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match &self.form {
            PieceForm::Atoms(atoms) => atoms.iter().map(|a| a.eval(t)).sum(),
            PieceForm::Numeric(n) => (n.eval)(t),
        }
    }
}

/// How an integral was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Exact antiderivative differences.
    ClosedForm,
    /// Adaptive Gauss-Kronrod quadrature.
    AdaptiveQuadrature,
    /// Divergence decided from antiderivative endpoint limits.
    ExponentAnalysis,
    /// Combination of the above across pieces or endpoints.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegralStatus {
    Finite { value: f64, error_estimate: f64 },
    Divergent { endpoint: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub status: IntegralStatus,
    pub method: Method,
}

impl IntegralResult {
    pub fn value(&self) -> f64 {
        match self.status {
            IntegralStatus::Finite { value, .. } => value,
            IntegralStatus::Divergent { .. } => f64::INFINITY,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.status, IntegralStatus::Finite { .. })
    }
}

/// A function on `(0, infinity)`: zero outside its pieces, right-continuous
/// at piece boundaries.
#[derive(Debug, Clone, Default)]
pub struct PiecewiseFn {
    pieces: Vec<Piece>,
}

impl PiecewiseFn {
    /// Validates ordering, disjointness and absence of interior atom
    /// singularities.
    pub fn new(mut pieces: Vec<Piece>) -> Result<Self> {
        pieces.retain(|p| p.lo < p.hi);
        pieces.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        for p in &pieces {
            if !(p.lo >= 0.0) || p.lo.is_infinite() {
                return Err(Error::domain(format!("piece start {} out of range", p.lo)));
            }
            if let PieceForm::Atoms(atoms) = &p.form {
                for a in atoms {
                    let sings = a.singularities_in(p.lo, p.hi);
                    if !sings.is_empty() {
                        return Err(Error::domain(format!(
                            "atom {a:?} singular inside ({}, {}) at {:?}",
                            p.lo, p.hi, sings
                        )));
                    }
                }
            }
        }
        for w in pieces.windows(2) {
            if w[1].lo < w[0].hi {
                return Err(Error::domain(format!(
                    "pieces overlap near {}",
                    w[1].lo
                )));
            }
        }
        Ok(PiecewiseFn { pieces })
    }

    pub fn zero() -> Self {
        PiecewiseFn::default()
    }

    /// Single atom on `[lo, hi)`.
    pub fn single(lo: f64, hi: f64, atom: Atom) -> Self {
        PiecewiseFn::new(vec![Piece::atoms(lo, hi, vec![atom])]).expect("valid single piece")
    }

    /// Characteristic function of `[lo, hi)`.
    pub fn indicator(lo: f64, hi: f64) -> Self {
        PiecewiseFn::single(lo, hi, Atom::constant(1.0))
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Smallest interval `[lo, hi)` outside of which the function vanishes.
    pub fn support(&self) -> (f64, f64) {
        if self.pieces.is_empty() {
            return (0.0, 0.0);
        }
        let lo = self.pieces[0].lo;
        let hi = self
            .pieces
            .iter()
            .map(|p| p.hi)
            .fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }

    fn piece_at(&self, t: f64) -> Option<&Piece> {
        self.pieces.iter().find(|p| t >= p.lo && t < p.hi)
    }

    pub fn eval(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        self.piece_at(t).map_or(0.0, |p| p.eval(t))
    }

    pub fn eval_abs(&self, t: f64) -> f64 {
        self.eval(t).abs()
    }

    /// Derivative at `t`, exact for atoms, via the stored closure for numeric
    /// pieces, otherwise a central difference.
    pub fn deriv_at(&self, t: f64) -> f64 {
        match self.piece_at(t) {
            None => 0.0,
            Some(p) => match &p.form {
                PieceForm::Atoms(atoms) => atoms.iter().map(|a| a.deriv(t)).sum(),
                PieceForm::Numeric(n) => match &n.deriv {
                    Some(d) => d(t),
                    None => {
                        let h = 1e-6 * t.abs().max(1e-6);
                        ((n.eval)(t + h) - (n.eval)(t - h)) / (2.0 * h)
                    }
                },
            },
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        if c == 0.0 {
            return PiecewiseFn::zero();
        }
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece {
                lo: p.lo,
                hi: p.hi,
                form: match &p.form {
                    PieceForm::Atoms(atoms) => {
                        PieceForm::Atoms(atoms.iter().map(|a| a.scaled(c)).collect())
                    }
                    PieceForm::Numeric(n) => {
                        let e = n.eval.clone();
                        let mut m = NumericForm::new(format!("{c}*({})", n.label), move |t| {
                            c * e(t)
                        });
                        if let Some(d) = &n.deriv {
                            let d = d.clone();
                            m.deriv = Some(Arc::new(move |t| c * d(t)));
                        }
                        if let Some(g) = &n.antideriv {
                            let g = g.clone();
                            m.antideriv = Some(Arc::new(move |t| c * g(t)));
                        }
                        if let Some(g) = &n.antideriv_log {
                            let g = g.clone();
                            m.antideriv_log = Some(Arc::new(move |u| c * g(u)));
                        }
                        PieceForm::Numeric(m)
                    }
                },
            })
            .collect();
        PiecewiseFn { pieces }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    /// Pointwise sum. The common refinement of both partitions is formed;
    /// atom pieces merge exactly, anything else becomes a numeric piece.
    pub fn add(&self, other: &PiecewiseFn) -> Self {
        let mut cuts: Vec<f64> = Vec::new();
        for p in self.pieces.iter().chain(&other.pieces) {
            cuts.push(p.lo);
            cuts.push(p.hi);
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut pieces = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mid = if hi.is_infinite() { lo + 1.0 } else { 0.5 * (lo + hi) };
            let a = self.piece_at(mid);
            let b = other.piece_at(mid);
            let form = match (a, b) {
                (None, None) => continue,
                (Some(p), None) | (None, Some(p)) => p.form.clone(),
                (Some(p), Some(q)) => match (&p.form, &q.form) {
                    (PieceForm::Atoms(x), PieceForm::Atoms(y)) => {
                        let mut v = x.clone();
                        v.extend(y.iter().copied());
                        PieceForm::Atoms(v)
                    }
                    _ => {
                        let (p, q) = (p.clone(), q.clone());
                        PieceForm::Numeric(NumericForm::new("sum", move |t| {
                            p.eval(t) + q.eval(t)
                        }))
                    }
                },
            };
            pieces.push(Piece { lo, hi, form });
        }
        PiecewiseFn { pieces }
    }

    pub fn sub(&self, other: &PiecewiseFn) -> Self {
        self.add(&other.neg())
    }

    /// `f(t - delta)` for `delta >= 0`.
    pub fn translated(&self, delta: f64) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|p| {
                let lo = p.lo + delta;
                let hi = if p.hi.is_infinite() { p.hi } else { p.hi + delta };
                let form = match &p.form {
                    PieceForm::Atoms(atoms) => {
                        match atoms.iter().map(|a| a.translated(delta)).collect::<Option<Vec<_>>>() {
                            Some(v) => PieceForm::Atoms(v),
                            None => {
                                let atoms = atoms.clone();
                                PieceForm::Numeric(NumericForm::new("translate", move |t| {
                                    atoms.iter().map(|a| a.eval(t - delta)).sum()
                                }))
                            }
                        }
                    }
                    PieceForm::Numeric(n) => {
                        let e = n.eval.clone();
                        PieceForm::Numeric(NumericForm::new(
                            format!("shift({})", n.label),
                            move |t| e(t - delta),
                        ))
                    }
                };
                Piece { lo, hi, form }
            })
            .collect();
        PiecewiseFn { pieces }
    }

    /// `|f|^p` pointwise.
    pub fn pow_abs(&self, p: f64) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|pc| {
                let form = match &pc.form {
                    PieceForm::Atoms(atoms) if atoms.len() == 1 && self.single_signed(pc) => {
                        match atoms[0].abs_pow(p) {
                            Some(a) => PieceForm::Atoms(vec![a]),
                            None => Self::numeric_pow(pc, p),
                        }
                    }
                    _ => Self::numeric_pow(pc, p),
                };
                Piece {
                    lo: pc.lo,
                    hi: pc.hi,
                    form,
                }
            })
            .collect();
        PiecewiseFn { pieces }
    }

    fn numeric_pow(pc: &Piece, p: f64) -> PieceForm {
        let pc = pc.clone();
        PieceForm::Numeric(NumericForm::new(format!("abs^{p}"), move |t| {
            pc.eval(t).abs().powf(p)
        }))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &PiecewiseFn) -> Self {
        let mut cuts: Vec<f64> = Vec::new();
        for p in self.pieces.iter().chain(&other.pieces) {
            cuts.push(p.lo);
            cuts.push(p.hi);
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut pieces = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mid = if hi.is_infinite() { lo + 1.0 } else { 0.5 * (lo + hi) };
            let (a, b) = match (self.piece_at(mid), other.piece_at(mid)) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            let form = match (&a.form, &b.form) {
                (PieceForm::Atoms(x), PieceForm::Atoms(y)) if x.len() == 1 && y.len() == 1 => {
                    match x[0].product(&y[0]) {
                        Some(atom) => PieceForm::Atoms(vec![atom]),
                        None => Self::numeric_mul(a, b),
                    }
                }
                _ => Self::numeric_mul(a, b),
            };
            pieces.push(Piece { lo, hi, form });
        }
        PiecewiseFn { pieces }
    }

    fn numeric_mul(a: &Piece, b: &Piece) -> PieceForm {
        let (a, b) = (a.clone(), b.clone());
        PieceForm::Numeric(NumericForm::new("product", move |t| a.eval(t) * b.eval(t)))
    }

    /// `|f|` pointwise. Atom pieces keep their closed form when the piece
    /// does not change sign; otherwise the piece becomes numeric.
    pub fn abs(&self) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|pc| {
                let form = if self.single_signed(pc) {
                    let s = self.sample_sign(pc);
                    match (&pc.form, s < 0.0) {
                        (PieceForm::Atoms(atoms), true) => {
                            PieceForm::Atoms(atoms.iter().map(|a| a.scaled(-1.0)).collect())
                        }
                        (PieceForm::Atoms(atoms), false) => PieceForm::Atoms(atoms.clone()),
                        (PieceForm::Numeric(n), neg) => {
                            let e = n.eval.clone();
                            let sign = if neg { -1.0 } else { 1.0 };
                            PieceForm::Numeric(NumericForm::new(
                                format!("abs({})", n.label),
                                move |t| sign * e(t),
                            ))
                        }
                    }
                } else {
                    let pc2 = pc.clone();
                    PieceForm::Numeric(NumericForm::new("abs", move |t| pc2.eval(t).abs()))
                };
                Piece {
                    lo: pc.lo,
                    hi: pc.hi,
                    form,
                }
            })
            .collect();
        PiecewiseFn { pieces }
    }

    fn sample_points(pc: &Piece) -> Vec<f64> {
        let hi = if pc.hi.is_infinite() {
            pc.lo.max(1e-9) * 1e6
        } else {
            pc.hi
        };
        let lo = pc.lo.max(1e-12 * hi);
        (1..32)
            .map(|i| lo + (hi - lo) * i as f64 / 32.0)
            .collect()
    }

    fn sample_sign(&self, pc: &Piece) -> f64 {
        for t in Self::sample_points(pc) {
            let v = pc.eval(t);
            if v != 0.0 {
                return v.signum();
            }
        }
        1.0
    }

    fn single_signed(&self, pc: &Piece) -> bool {
        let mut sign = 0.0;
        for t in Self::sample_points(pc) {
            let v = pc.eval(t);
            if v == 0.0 || !v.is_finite() {
                continue;
            }
            if sign == 0.0 {
                sign = v.signum();
            } else if v.signum() != sign {
                return false;
            }
        }
        true
    }

    /// Integral over `(a, b)`; `b` may be infinite. Closed forms are used
    /// piece by piece wherever possible.
    pub fn integrate(&self, a: f64, b: f64, tol: f64) -> Result<IntegralResult> {
        if !(a >= 0.0) || b <= a {
            return Err(Error::domain(format!("bad integration range ({a}, {b})")));
        }
        let mut total = 0.0;
        let mut err = 0.0;
        let mut methods: Vec<Method> = Vec::new();
        for pc in &self.pieces {
            let lo = pc.lo.max(a);
            let hi = pc.hi.min(b);
            if lo >= hi {
                continue;
            }
            let r = self.integrate_piece(pc, lo, hi, tol)?;
            match r.status {
                IntegralStatus::Divergent { endpoint } => {
                    return Ok(IntegralResult {
                        status: IntegralStatus::Divergent { endpoint },
                        method: r.method,
                    });
                }
                IntegralStatus::Finite {
                    value,
                    error_estimate,
                } => {
                    total += value;
                    err += error_estimate;
                    methods.push(r.method);
                }
            }
        }
        methods.dedup();
        let method = match methods.as_slice() {
            [] | [Method::ClosedForm] => Method::ClosedForm,
            [m] => *m,
            _ => Method::Mixed,
        };
        Ok(IntegralResult {
            status: IntegralStatus::Finite {
                value: total,
                error_estimate: err,
            },
            method,
        })
    }

    fn integrate_piece(&self, pc: &Piece, lo: f64, hi: f64, tol: f64) -> Result<IntegralResult> {
        match &pc.form {
            PieceForm::Atoms(atoms) => Self::integrate_atoms(atoms, lo, hi, tol),
            PieceForm::Numeric(n) => Self::integrate_numeric(n, lo, hi, tol),
        }
    }

    fn integrate_atoms(atoms: &[Atom], lo: f64, hi: f64, tol: f64) -> Result<IntegralResult> {
        // Endpoint limits per atom. All finite: exact difference of sums.
        let lo_limits: Vec<Limit> = atoms.iter().map(|a| a.antideriv_limit(lo)).collect();
        let hi_limits: Vec<Limit> = atoms.iter().map(|a| a.antideriv_limit(hi)).collect();
        let all_finite = |ls: &[Limit]| ls.iter().all(|l| matches!(l, Limit::Finite(_)));
        if all_finite(&lo_limits) && all_finite(&hi_limits) {
            let sum = |ls: &[Limit]| -> f64 {
                ls.iter()
                    .map(|l| match l {
                        Limit::Finite(v) => *v,
                        Limit::Infinite => unreachable!(),
                    })
                    .sum()
            };
            let value = sum(&hi_limits) - sum(&lo_limits);
            return Ok(IntegralResult {
                status: IntegralStatus::Finite {
                    value,
                    error_estimate: 1e-14 * value.abs(),
                },
                method: Method::ClosedForm,
            });
        }
        // Some atom diverges individually. The combined antiderivative may
        // still have a finite limit (cancellation), so probe it numerically.
        let atoms_owned: Vec<Atom> = atoms.to_vec();
        let cap_f = move |t: f64| atoms_owned.iter().map(|a| a.antideriv(t)).sum::<f64>();
        let mid = if hi.is_infinite() { 2.0 * lo.max(0.5) } else { 0.5 * (lo + hi) };
        let at = |end: f64, limits: &[Limit]| -> Result<QuadOutcome> {
            if all_finite(limits) {
                let v: f64 = limits
                    .iter()
                    .map(|l| match l {
                        Limit::Finite(v) => *v,
                        Limit::Infinite => 0.0,
                    })
                    .sum();
                Ok(QuadOutcome::Finite { value: v, error: 0.0 })
            } else {
                quad::limit_toward(&cap_f, mid, end)
            }
        };
        let lo_v = at(lo, &lo_limits)?;
        let hi_v = at(hi, &hi_limits)?;
        match (lo_v, hi_v) {
            (QuadOutcome::Divergent { endpoint }, _) | (_, QuadOutcome::Divergent { endpoint }) => {
                Ok(IntegralResult {
                    status: IntegralStatus::Divergent { endpoint },
                    method: Method::ExponentAnalysis,
                })
            }
            (
                QuadOutcome::Finite { value: v0, error: e0 },
                QuadOutcome::Finite { value: v1, error: e1 },
            ) => Ok(IntegralResult {
                status: IntegralStatus::Finite {
                    value: v1 - v0,
                    error_estimate: e0 + e1 + tol * 1e-3,
                },
                method: Method::Mixed,
            }),
        }
    }

    fn integrate_numeric(n: &NumericForm, lo: f64, hi: f64, tol: f64) -> Result<IntegralResult> {
        if let Some(g) = &n.antideriv {
            let at = |end: f64, from: f64| -> Result<QuadOutcome> {
                let v = if end.is_finite() { g(end) } else { f64::NAN };
                if v.is_finite() {
                    Ok(QuadOutcome::Finite { value: v, error: 0.0 })
                } else {
                    let g = g.clone();
                    quad::limit_toward(&move |t| g(t), from, end)
                }
            };
            let mid = if hi.is_infinite() { 2.0 * lo.max(0.5) } else { 0.5 * (lo + hi) };
            let lo_v = at(lo, mid)?;
            let hi_v = at(hi, mid)?;
            return match (lo_v, hi_v) {
                (QuadOutcome::Divergent { endpoint }, _)
                | (_, QuadOutcome::Divergent { endpoint }) => Ok(IntegralResult {
                    status: IntegralStatus::Divergent { endpoint },
                    method: Method::ExponentAnalysis,
                }),
                (
                    QuadOutcome::Finite { value: v0, error: e0 },
                    QuadOutcome::Finite { value: v1, error: e1 },
                ) => Ok(IntegralResult {
                    status: IntegralStatus::Finite {
                        value: v1 - v0,
                        error_estimate: e0 + e1,
                    },
                    method: Method::ClosedForm,
                }),
            };
        }
        let e = n.eval.clone();
        match quad::improper(&move |t| e(t), lo, hi, tol)? {
            QuadOutcome::Finite { value, error } => Ok(IntegralResult {
                status: IntegralStatus::Finite {
                    value,
                    error_estimate: error,
                },
                method: Method::AdaptiveQuadrature,
            }),
            QuadOutcome::Divergent { endpoint } => Ok(IntegralResult {
                status: IntegralStatus::Divergent { endpoint },
                method: Method::AdaptiveQuadrature,
            }),
        }
    }

    /// Integral of `|f|` over `(a, b)`.
    pub fn integrate_abs(&self, a: f64, b: f64, tol: f64) -> Result<IntegralResult> {
        self.abs().integrate(a, b, tol)
    }
}

impl fmt::Display for PiecewiseFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.pieces {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match &p.form {
                PieceForm::Atoms(atoms) => {
                    let mut inner = true;
                    write!(f, "(")?;
                    for a in atoms {
                        if !inner {
                            write!(f, " + ")?;
                        }
                        inner = false;
                        write!(f, "{a:?}")?;
                    }
                    write!(f, ")")?;
                }
                PieceForm::Numeric(n) => write!(f, "[{}]", n.label)?,
            }
            if p.hi.is_infinite() {
                write!(f, " on [{}, inf)", p.lo)?;
            } else {
                write!(f, " on [{}, {})", p.lo, p.hi)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_integrates_to_length() {
        let f = PiecewiseFn::indicator(0.0, 3.0);
        let r = f.integrate(0.0, f64::INFINITY, 1e-10).unwrap();
        assert_eq!(r.method, Method::ClosedForm);
        assert!((r.value() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn power_piece_exact() {
        // t^-1/2 on (0,1): integral 2, exact.
        let f = PiecewiseFn::single(0.0, 1.0, Atom::power(1.0, -0.5));
        let r = f.integrate(0.0, f64::INFINITY, 1e-10).unwrap();
        assert_eq!(r.method, Method::ClosedForm);
        assert!((r.value() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn reciprocal_divergence_flagged() {
        let f = PiecewiseFn::single(0.0, 1.0, Atom::power(1.0, -1.0));
        let r = f.integrate(0.0, 1.0, 1e-10).unwrap();
        assert!(matches!(
            r.status,
            IntegralStatus::Divergent { endpoint } if endpoint == 0.0
        ));
    }

    #[test]
    fn add_refines_partitions() {
        let f = PiecewiseFn::indicator(0.0, 2.0);
        let g = PiecewiseFn::indicator(1.0, 3.0);
        let s = f.add(&g);
        assert_eq!(s.eval(0.5), 1.0);
        assert_eq!(s.eval(1.5), 2.0);
        assert_eq!(s.eval(2.5), 1.0);
        assert_eq!(s.eval(3.5), 0.0);
        let r = s.integrate(0.0, 10.0, 1e-10).unwrap();
        assert!((r.value() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn translation_of_power_keeps_closed_form() {
        let f = PiecewiseFn::single(0.0, 1.0, Atom::power(1.0, -0.5));
        let g = f.translated(2.0);
        assert!((g.eval(2.25) - 2.0).abs() < 1e-13);
        let r = g.integrate(0.0, f64::INFINITY, 1e-10).unwrap();
        assert!((r.value() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn abs_of_negative_piece() {
        let f = PiecewiseFn::single(1.0, 2.0, Atom::constant(-3.0));
        let g = f.abs();
        assert_eq!(g.eval(1.5), 3.0);
        let r = g.integrate(0.0, f64::INFINITY, 1e-10).unwrap();
        assert!((r.value() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn numeric_piece_quadrature() {
        let f = PiecewiseFn::new(vec![Piece::numeric(
            0.0,
            f64::INFINITY,
            NumericForm::new("1/(1+t^2)", |t| 1.0 / (1.0 + t * t)),
        )])
        .unwrap();
        let r = f.integrate(0.0, f64::INFINITY, 1e-10).unwrap();
        assert_eq!(r.method, Method::AdaptiveQuadrature);
        assert!((r.value() - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
    }

    #[test]
    fn numeric_piece_with_antideriv_is_exact() {
        let f = PiecewiseFn::new(vec![Piece::numeric(
            0.0,
            f64::INFINITY,
            NumericForm::new("1/(1+t^2)", |t| 1.0 / (1.0 + t * t)).with_antideriv(f64::atan),
        )])
        .unwrap();
        let r = f.integrate(0.0, f64::INFINITY, 1e-10).unwrap();
        assert!((r.value() - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
    }

    #[test]
    fn pow_abs_power_atom() {
        // (t^-1/4)^2 = t^-1/2 on (0,1), integral 2.
        let f = PiecewiseFn::single(0.0, 1.0, Atom::power(1.0, -0.25));
        let g = f.pow_abs(2.0);
        let r = g.integrate(0.0, 1.0, 1e-10).unwrap();
        assert_eq!(r.method, Method::ClosedForm);
        assert!((r.value() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn overlap_rejected() {
        let bad = PiecewiseFn::new(vec![
            Piece::atoms(0.0, 2.0, vec![Atom::constant(1.0)]),
            Piece::atoms(1.0, 3.0, vec![Atom::constant(1.0)]),
        ]);
        assert!(bad.is_err());
    }
}
