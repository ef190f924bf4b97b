//! The interval-set function `nu(A) = S(chi_A)`, viewed as a vector
//! measure into a function space: exact rational form, norms with the
//! analytic tail bound for Lorentz targets, and truncated-union probes for
//! strong additivity.

use crate::error::{Error, Result};
use crate::funcrep::atom::Atom;
use crate::funcrep::piecewise::{Piece, PiecewiseFn};
use crate::lorentz::ConcavePhi;
use crate::spaces::{self, SpaceDescriptor};
use crate::DEFAULT_TOL;

/// Finite union of half-open intervals `[a, b)`, at most one of them
/// unbounded. Sorted and pairwise disjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct BorelSet {
    intervals: Vec<(f64, f64)>,
}

impl BorelSet {
    pub fn empty() -> Self {
        BorelSet { intervals: Vec::new() }
    }

    pub fn new(mut intervals: Vec<(f64, f64)>) -> Result<Self> {
        intervals.retain(|(a, b)| b > a);
        intervals.sort_by(|x, y| x.0.total_cmp(&y.0));
        for w in intervals.windows(2) {
            if w[0].1 > w[1].0 + 1e-15 {
                return Err(Error::domain(format!(
                    "intervals [{},{}) and [{},{}) overlap",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        for (i, &(a, b)) in intervals.iter().enumerate() {
            if a < 0.0 || a.is_infinite() {
                return Err(Error::domain(format!("bad left endpoint {a}")));
            }
            if b.is_infinite() && i + 1 != intervals.len() {
                return Err(Error::domain("only the last interval may be unbounded"));
            }
        }
        Ok(BorelSet { intervals })
    }

    /// Syntax: `[1,2)+[3,inf)`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut intervals = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let inner = part
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::domain(format!("expected [a,b), got {part:?}")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::domain(format!("expected two endpoints in {part:?}")))?;
            let lo: f64 = a
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("bad endpoint {a:?}")))?;
            let hi = match b.trim() {
                "inf" => f64::INFINITY,
                t => t
                    .parse()
                    .map_err(|_| Error::domain(format!("bad endpoint {t:?}")))?,
            };
            intervals.push((lo, hi));
        }
        BorelSet::new(intervals)
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|(a, b)| b - a).sum()
    }

    /// Distance from 0 to the set.
    pub fn epsilon(&self) -> f64 {
        self.intervals.first().map_or(f64::INFINITY, |i| i.0)
    }

    /// Membership in the delta-ring the measure is defined on: finite
    /// measure and a gap at 0.
    pub fn in_r(&self) -> bool {
        !self.intervals.is_empty() && self.epsilon() > 0.0 && self.measure().is_finite()
    }

    pub fn indicator(&self) -> PiecewiseFn {
        let pieces = self
            .intervals
            .iter()
            .map(|&(a, b)| Piece::atoms(a, b, vec![Atom::constant(1.0)]))
            .collect();
        PiecewiseFn::new(pieces).expect("disjoint sorted intervals")
    }

    /// Union with a disjoint set.
    pub fn union(&self, other: &BorelSet) -> Result<BorelSet> {
        let mut v = self.intervals.clone();
        v.extend_from_slice(&other.intervals);
        BorelSet::new(v)
    }
}

/// `nu(A)(x) = |A intersect (0,x)| / x` as an exact piecewise-rational
/// function: `1 + (c-a)/x` inside an interval starting at `a` with mass
/// `c` accumulated before it, `c'/x` across gaps.
pub fn nu(a: &BorelSet) -> PiecewiseFn {
    if a.intervals.is_empty() {
        return PiecewiseFn::zero();
    }
    let mut pieces = Vec::new();
    let mut acc = 0.0;
    for (i, &(lo, hi)) in a.intervals.iter().enumerate() {
        pieces.push(Piece::atoms(
            lo,
            hi,
            vec![Atom::constant(1.0), Atom::power(acc - lo, -1.0)],
        ));
        if hi.is_finite() {
            acc += hi - lo;
            let next = a
                .intervals
                .get(i + 1)
                .map_or(f64::INFINITY, |&(nlo, _)| nlo);
            if next > hi && acc > 0.0 {
                pieces.push(Piece::atoms(hi, next, vec![Atom::power(acc, -1.0)]));
            }
        }
    }
    PiecewiseFn::new(pieces).expect("breakpoints ordered")
}

/// Norm of `nu(A)` in `X`, paired with the closed tail bound
/// `phi(0+)/eps * |A| + integral of theta over (0, |A|)` available for
/// Lorentz targets when `A` sits in the delta-ring.
#[derive(Debug, Clone)]
pub struct NuNorm {
    pub norm: f64,
    pub lambda_bound: Option<f64>,
}

pub fn nu_norm(x: &SpaceDescriptor, a: &BorelSet) -> Result<NuNorm> {
    let v = nu(a);
    let norm = spaces::norm(x, &v)?;
    let lambda_bound = match x {
        SpaceDescriptor::LambdaPhi(phi) if a.in_r() => Some(lambda_tail_bound(phi, a)?),
        _ => None,
    };
    if let Some(b) = lambda_bound {
        if norm.is_finite() && norm > b * (1.0 + 1e-6) + 1e-9 {
            return Err(Error::domain(format!(
                "norm {norm} exceeds analytic bound {b}"
            )));
        }
    }
    Ok(NuNorm { norm, lambda_bound })
}

fn lambda_tail_bound(phi: &ConcavePhi, a: &BorelSet) -> Result<f64> {
    let m = a.measure();
    let jump_term = if phi.jump > 0.0 {
        phi.jump / a.epsilon() * m
    } else {
        0.0
    };
    let th = phi.theta_fn();
    match crate::funcrep::quad::improper(&th, 0.0, m, DEFAULT_TOL)? {
        crate::funcrep::quad::QuadOutcome::Finite { value, .. } => Ok(jump_term + value),
        crate::funcrep::quad::QuadOutcome::Divergent { .. } => Ok(f64::INFINITY),
    }
}

/// Disjoint interval families used by the additivity probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetGenerator {
    /// `[2^j, 2^(j+1))`, contiguous doubling blocks.
    Dyadic,
    /// `[j, j+1)`, contiguous unit blocks.
    Unit,
    /// `[j, j + 2^-j)`, sparse blocks with geometrically small measure.
    Geometric,
}

impl SetGenerator {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "dyadic" => Ok(SetGenerator::Dyadic),
            "unit" => Ok(SetGenerator::Unit),
            "geometric" => Ok(SetGenerator::Geometric),
            _ => Err(Error::domain(format!("unknown generator {s:?}"))),
        }
    }

    /// The `j`-th block, `j >= 1`.
    pub fn block(&self, j: u32) -> (f64, f64) {
        match self {
            SetGenerator::Dyadic => (2f64.powi(j as i32), 2f64.powi(j as i32 + 1)),
            SetGenerator::Unit => (j as f64, j as f64 + 1.0),
            SetGenerator::Geometric => {
                let a = j as f64;
                (a, a + 2f64.powi(-(j as i32)))
            }
        }
    }

    /// Tail union over `j >= k`. Contiguous families take the exact
    /// half-infinite union; sparse ones truncate at `k_max`.
    pub fn tail(&self, k: u32, k_max: u32) -> Result<BorelSet> {
        match self {
            SetGenerator::Dyadic | SetGenerator::Unit => {
                let (lo, _) = self.block(k);
                BorelSet::new(vec![(lo, f64::INFINITY)])
            }
            SetGenerator::Geometric => {
                BorelSet::new((k..=k_max).map(|j| self.block(j)).collect())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Vanishing,
    BoundedAway,
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct AdditivityProbe {
    /// `||nu(union of blocks j >= k)||_X` for `k = 1..=k_max`.
    pub tail_norms: Vec<f64>,
    pub trend: Trend,
}

/// Norms of the measure of shrinking tail unions. A strongly additive
/// measure must send them to 0; a tail staying bounded away from 0 is the
/// obstruction witness.
pub fn strong_additivity_probe(
    x: &SpaceDescriptor,
    gen: SetGenerator,
    k_max: u32,
) -> Result<AdditivityProbe> {
    if k_max < 2 {
        return Err(Error::domain("need at least two tail indices"));
    }
    let mut tail_norms = Vec::new();
    for k in 1..=k_max {
        let set = gen.tail(k, k_max)?;
        tail_norms.push(nu_norm(x, &set)?.norm);
    }
    let first = tail_norms[0];
    let last = *tail_norms.last().unwrap();
    let trend = if !last.is_finite() || !first.is_finite() {
        Trend::BoundedAway
    } else if last <= (0.1 * first).max(1e-9) {
        Trend::Vanishing
    } else if last >= 0.4 * first {
        Trend::BoundedAway
    } else {
        Trend::Inconclusive
    };
    Ok(AdditivityProbe { tail_norms, trend })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_measure() {
        let a = BorelSet::parse("[1,2)+[3,4)").unwrap();
        assert_eq!(a.intervals(), &[(1.0, 2.0), (3.0, 4.0)]);
        assert!((a.measure() - 2.0).abs() < 1e-15);
        assert!(a.in_r());
        let b = BorelSet::parse("[3,inf)").unwrap();
        assert!(!b.in_r());
        assert!(BorelSet::parse("[1,3)+[2,4)").is_err());
    }

    #[test]
    fn nu_of_unit_interval_closed_form() {
        // A = [1,2): nu = 1 - 1/x on [1,2), 1/x beyond.
        let a = BorelSet::parse("[1,2)").unwrap();
        let v = nu(&a);
        assert!((v.eval(1.5) - (1.0 - 1.0 / 1.5)).abs() < 1e-15);
        assert!((v.eval(4.0) - 0.25).abs() < 1e-15);
        assert_eq!(v.eval(0.5), 0.0);
    }

    #[test]
    fn nu_of_halfline_and_its_unit_norm() {
        // A = [3, inf): nu = 1 - 3/x, rearrangement is identically 1.
        let a = BorelSet::parse("[3,inf)").unwrap();
        let v = nu(&a);
        assert!((v.eval(6.0) - 0.5).abs() < 1e-15);
        let n = spaces::norm(&"L1+Linf".parse().unwrap(), &v).unwrap();
        assert!((n - 1.0).abs() < 1e-6, "{n}");
    }

    #[test]
    fn nu_is_empty_on_null_sets() {
        assert!(nu(&BorelSet::empty()).is_zero());
    }

    #[test]
    fn nu_additive_and_monotone() {
        let a = BorelSet::parse("[1,2)").unwrap();
        let b = BorelSet::parse("[3,5)").unwrap();
        let u = a.union(&b).unwrap();
        let (va, vb, vu) = (nu(&a), nu(&b), nu(&u));
        for &x in &[0.5, 1.5, 2.5, 4.0, 7.0, 100.0] {
            let sum = va.eval(x) + vb.eval(x);
            assert!((vu.eval(x) - sum).abs() < 1e-12, "x={x}");
            assert!(va.eval(x) <= vu.eval(x) + 1e-15);
        }
    }

    #[test]
    fn nu_sup_never_exceeds_one() {
        let a = BorelSet::parse("[0.5,2)+[3,4)+[10,11)").unwrap();
        let v = nu(&a);
        for &x in &crate::numeric::log_grid(1e-3, 1e4, 200) {
            assert!(v.eval(x) <= 1.0 + 1e-12, "x={x}");
        }
    }

    #[test]
    fn dyadic_block_sup_norm_is_half() {
        // Single block [2^n, 2^(n+1)): sup of nu is 1/2, independent of n.
        for n in 1..=4 {
            let (lo, hi) = SetGenerator::Dyadic.block(n);
            let a = BorelSet::new(vec![(lo, hi)]).unwrap();
            let s = spaces::norm(&"Linf".parse().unwrap(), &nu(&a)).unwrap();
            assert!((s - 0.5).abs() < 1e-9, "n={n}: {s}");
        }
    }

    #[test]
    fn lambda_norm_respects_tail_bound() {
        let x: SpaceDescriptor = "Lambda:sqrt".parse().unwrap();
        for spec in ["[1,2)", "[0.5,2)+[3,4)", "[2,2.25)+[5,6)+[9,9.5)"] {
            let a = BorelSet::parse(spec).unwrap();
            let r = nu_norm(&x, &a).unwrap();
            let b = r.lambda_bound.unwrap();
            assert!(r.norm <= b * (1.0 + 1e-6), "{spec}: {} vs {b}", r.norm);
        }
    }

    #[test]
    fn half_window_theta_lower_bound() {
        // A = [a/2, a): (a/2) theta(a) <= integral of nu(A) phi'.
        let phi = ConcavePhi::sqrt();
        let x = SpaceDescriptor::LambdaPhi(phi.clone());
        for &a in &[0.5f64, 1.0, 8.0] {
            let set = BorelSet::new(vec![(a / 2.0, a)]).unwrap();
            let n = nu_norm(&x, &set).unwrap().norm;
            assert!(
                a / 2.0 * phi.theta(a) <= n * (1.0 + 1e-9),
                "a={a}: {n}"
            );
        }
    }

    #[test]
    fn geometric_tails_vanish_in_lambda_sqrt() {
        let x: SpaceDescriptor = "Lambda:sqrt".parse().unwrap();
        let p = strong_additivity_probe(&x, SetGenerator::Geometric, 16).unwrap();
        assert_eq!(p.trend, Trend::Vanishing, "{:?}", p.tail_norms);
        // Tail bound 2 sqrt(2^(1-k)) dominates each norm.
        for (i, &n) in p.tail_norms.iter().enumerate() {
            let m = 2f64.powi(-(i as i32));
            assert!(n <= 2.0 * m.sqrt() * (1.0 + 1e-6), "k={}", i + 1);
        }
    }

    #[test]
    fn dyadic_tails_obstruct_linf() {
        let x: SpaceDescriptor = "Linf".parse().unwrap();
        let p = strong_additivity_probe(&x, SetGenerator::Dyadic, 8).unwrap();
        assert_eq!(p.trend, Trend::BoundedAway, "{:?}", p.tail_norms);
        for &n in &p.tail_norms {
            assert!((n - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn unit_tails_stay_at_one_in_l1_plus_linf() {
        let x: SpaceDescriptor = "L1+Linf".parse().unwrap();
        let p = strong_additivity_probe(&x, SetGenerator::Unit, 6).unwrap();
        assert_eq!(p.trend, Trend::BoundedAway, "{:?}", p.tail_norms);
        for &n in &p.tail_norms {
            assert!((n - 1.0).abs() < 1e-6, "{:?}", p.tail_norms);
        }
    }
}
