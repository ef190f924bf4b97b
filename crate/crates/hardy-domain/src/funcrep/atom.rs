//! Analytic building blocks for piecewise functions.
//!
//! Each atom is one of four closed forms on the positive half line:
//! `c*t^a`, `c*(a+b*t)^p`, `c/(t*log(e^2/t)^b)` and constants. All four carry
//! closed-form antiderivatives, which is what keeps every integral in this
//! crate either exact or cheaply classified as divergent.

/// One-sided limit classification of an antiderivative at an endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    Finite(f64),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AtomKind {
    /// `t^alpha`
    Power { alpha: f64 },
    /// `(a + b*t)^alpha`
    AffinePower { a: f64, b: f64, alpha: f64 },
    /// `s^-1 * log(e^2/s)^-beta` with `s = t - shift`, defined on
    /// `(shift, shift + e^2)`
    LogRecip { beta: f64, shift: f64 },
    /// `1`
    Constant,
}

/// A scaled atom: `coeff` times the base form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub coeff: f64,
    pub kind: AtomKind,
}

impl Atom {
    pub fn power(coeff: f64, alpha: f64) -> Self {
        Atom {
            coeff,
            kind: AtomKind::Power { alpha },
        }
    }

    pub fn affine_power(coeff: f64, a: f64, b: f64, alpha: f64) -> Self {
        Atom {
            coeff,
            kind: AtomKind::AffinePower { a, b, alpha },
        }
    }

    pub fn log_recip(coeff: f64, beta: f64) -> Self {
        Atom {
            coeff,
            kind: AtomKind::LogRecip { beta, shift: 0.0 },
        }
    }

    pub fn constant(coeff: f64) -> Self {
        Atom {
            coeff,
            kind: AtomKind::Constant,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeff
            * match self.kind {
                AtomKind::Power { alpha } => t.powf(alpha),
                AtomKind::AffinePower { a, b, alpha } => (a + b * t).powf(alpha),
                AtomKind::LogRecip { beta, shift } => {
                    let s = t - shift;
                    let u = (2.0 - s.ln()).max(0.0);
                    u.powf(-beta) / s
                }
                AtomKind::Constant => 1.0,
            }
    }

    /// Pointwise derivative (valid away from the atom's singular points).
    pub fn deriv(&self, t: f64) -> f64 {
        self.coeff
            * match self.kind {
                AtomKind::Power { alpha } => alpha * t.powf(alpha - 1.0),
                AtomKind::AffinePower { a, b, alpha } => alpha * b * (a + b * t).powf(alpha - 1.0),
                AtomKind::LogRecip { beta, shift } => {
                    // d/ds [ s^-1 u^-beta ] with u = log(e^2/s), u' = -1/s.
                    let s = t - shift;
                    let u = 2.0 - s.ln();
                    u.powf(-beta - 1.0) / (s * s) * (beta - u)
                }
                AtomKind::Constant => 0.0,
            }
    }

    /// Closed-form antiderivative, valid on any interval avoiding the atom's
    /// singular points.
    pub fn antideriv(&self, t: f64) -> f64 {
        self.coeff
            * match self.kind {
                AtomKind::Power { alpha } => {
                    if alpha == -1.0 {
                        t.ln()
                    } else {
                        t.powf(alpha + 1.0) / (alpha + 1.0)
                    }
                }
                AtomKind::AffinePower { a, b, alpha } => {
                    if b == 0.0 {
                        a.powf(alpha) * t
                    } else if alpha == -1.0 {
                        (a + b * t).ln() / b
                    } else {
                        (a + b * t).powf(alpha + 1.0) / (b * (alpha + 1.0))
                    }
                }
                AtomKind::LogRecip { beta, shift } => {
                    let u = 2.0 - (t - shift).ln();
                    if beta == 1.0 {
                        -u.ln()
                    } else {
                        u.powf(1.0 - beta) / (beta - 1.0)
                    }
                }
                AtomKind::Constant => t,
            }
    }

    /// Antiderivative evaluated at `t = exp(u)` without forming `t`.
    /// Needed when piece endpoints live beyond the representable f64 range.
    pub fn antideriv_log(&self, u: f64) -> f64 {
        self.coeff
            * match self.kind {
                AtomKind::Power { alpha } => {
                    if alpha == -1.0 {
                        u
                    } else {
                        ((alpha + 1.0) * u).exp() / (alpha + 1.0)
                    }
                }
                AtomKind::AffinePower { a, b, alpha } => {
                    if b == 0.0 {
                        a.powf(alpha) * u.exp()
                    } else if alpha == -1.0 {
                        // log(a + b e^u)/b = (u + log(b + a e^-u))/b for b > 0
                        (u + (b + a * (-u).exp()).ln()) / b
                    } else {
                        let l = u + (b + a * (-u).exp()).ln(); // log(a + b e^u)
                        ((alpha + 1.0) * l).exp() / (b * (alpha + 1.0))
                    }
                }
                AtomKind::LogRecip { beta, shift } => {
                    // log(e^u - shift) = u + log1p(-shift e^-u)
                    let w = 2.0 - (u + (-shift * (-u).exp()).ln_1p());
                    if beta == 1.0 {
                        -w.ln()
                    } else {
                        w.powf(1.0 - beta) / (beta - 1.0)
                    }
                }
                AtomKind::Constant => u.exp(),
            }
    }

    /// Limit of the antiderivative as `t` approaches `endpoint` from inside a
    /// piece. `endpoint` may be `0`, a positive real, or `f64::INFINITY`.
    pub fn antideriv_limit(&self, endpoint: f64) -> Limit {
        if self.coeff == 0.0 {
            return Limit::Finite(0.0);
        }
        match self.kind {
            AtomKind::Power { alpha } => {
                if endpoint == 0.0 {
                    if alpha > -1.0 {
                        Limit::Finite(0.0)
                    } else {
                        Limit::Infinite
                    }
                } else if endpoint.is_infinite() {
                    if alpha < -1.0 {
                        Limit::Finite(0.0)
                    } else {
                        Limit::Infinite
                    }
                } else {
                    Limit::Finite(self.antideriv(endpoint))
                }
            }
            AtomKind::AffinePower { a, b, alpha } => {
                if endpoint.is_infinite() {
                    if b == 0.0 {
                        return if a.powf(alpha) == 0.0 {
                            Limit::Finite(0.0)
                        } else {
                            Limit::Infinite
                        };
                    }
                    return if alpha < -1.0 {
                        Limit::Finite(0.0)
                    } else {
                        Limit::Infinite
                    };
                }
                let s = a + b * endpoint;
                if b != 0.0 && s.abs() <= 1e-14 * (a.abs() + (b * endpoint).abs()).max(1.0) {
                    // endpoint hits the base's zero
                    if alpha > -1.0 {
                        Limit::Finite(0.0)
                    } else {
                        Limit::Infinite
                    }
                } else {
                    Limit::Finite(self.antideriv(endpoint))
                }
            }
            AtomKind::LogRecip { beta, shift } => {
                if endpoint <= shift {
                    // u -> infinity
                    if beta > 1.0 {
                        Limit::Finite(0.0)
                    } else {
                        Limit::Infinite
                    }
                } else if (endpoint - shift - std::f64::consts::E.powi(2)).abs() < 1e-12 {
                    // u -> 0
                    if beta < 1.0 {
                        Limit::Finite(0.0)
                    } else {
                        Limit::Infinite
                    }
                } else if endpoint.is_infinite() {
                    Limit::Infinite // outside the atom's domain anyway
                } else {
                    Limit::Finite(self.antideriv(endpoint))
                }
            }
            AtomKind::Constant => {
                if endpoint.is_infinite() {
                    Limit::Infinite
                } else {
                    Limit::Finite(self.antideriv(endpoint))
                }
            }
        }
    }

    /// Interior points of `(lo, hi)` where the atom's base degenerates
    /// (used to reject ill-posed pieces and to steer quadrature).
    pub fn singularities_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut out = Vec::new();
        match self.kind {
            AtomKind::Power { alpha } => {
                if alpha < 0.0 && lo < 0.0 && hi > 0.0 {
                    out.push(0.0);
                }
            }
            AtomKind::AffinePower { a, b, alpha } => {
                if alpha < 0.0 && b != 0.0 {
                    let t0 = -a / b;
                    if t0 > lo && t0 < hi {
                        out.push(t0);
                    }
                }
            }
            AtomKind::LogRecip { shift, .. } => {
                if lo < shift && hi > shift {
                    out.push(shift);
                }
                let e2 = shift + std::f64::consts::E.powi(2);
                if lo < e2 && hi > e2 {
                    out.push(e2);
                }
            }
            AtomKind::Constant => {}
        }
        out
    }

    /// Scale the coefficient.
    pub fn scaled(&self, c: f64) -> Atom {
        Atom {
            coeff: self.coeff * c,
            kind: self.kind,
        }
    }

    /// Atom representing `self(t - delta)`, when the family is closed under
    /// translation.
    pub fn translated(&self, delta: f64) -> Option<Atom> {
        match self.kind {
            AtomKind::Power { alpha } => Some(Atom::affine_power(self.coeff, -delta, 1.0, alpha)),
            AtomKind::AffinePower { a, b, alpha } => {
                Some(Atom::affine_power(self.coeff, a - b * delta, b, alpha))
            }
            AtomKind::Constant => Some(*self),
            AtomKind::LogRecip { beta, shift } => Some(Atom {
                coeff: self.coeff,
                kind: AtomKind::LogRecip {
                    beta,
                    shift: shift + delta,
                },
            }),
        }
    }

    /// Atom representing `self(pivot - t)` (reflection), when closed under it.
    pub fn reflected(&self, pivot: f64) -> Option<Atom> {
        match self.kind {
            AtomKind::Power { alpha } => Some(Atom::affine_power(self.coeff, pivot, -1.0, alpha)),
            AtomKind::AffinePower { a, b, alpha } => {
                Some(Atom::affine_power(self.coeff, a + b * pivot, -b, alpha))
            }
            AtomKind::Constant => Some(*self),
            AtomKind::LogRecip { .. } => None,
        }
    }

    /// `|self|^p` as an atom, when representable (single sign, base stays in
    /// the family under the power).
    pub fn abs_pow(&self, p: f64) -> Option<Atom> {
        let c = self.coeff.abs().powf(p);
        match self.kind {
            AtomKind::Power { alpha } => Some(Atom::power(c, alpha * p)),
            AtomKind::AffinePower { a, b, alpha } => Some(Atom::affine_power(c, a, b, alpha * p)),
            AtomKind::Constant => Some(Atom::constant(c)),
            AtomKind::LogRecip { .. } => None,
        }
    }

    /// Product of two atoms, when the family is closed under it.
    pub fn product(&self, other: &Atom) -> Option<Atom> {
        let c = self.coeff * other.coeff;
        match (self.kind, other.kind) {
            (AtomKind::Constant, k) | (k, AtomKind::Constant) => Some(Atom { coeff: c, kind: k }),
            (AtomKind::Power { alpha: a1 }, AtomKind::Power { alpha: a2 }) => {
                Some(Atom::power(c, a1 + a2))
            }
            (AtomKind::Power { alpha: ap }, AtomKind::LogRecip { beta, shift })
            | (AtomKind::LogRecip { beta, shift }, AtomKind::Power { alpha: ap })
                if ap == 1.0 && shift == 0.0 =>
            {
                // t * logrecip = log(e^2/t)^-beta ... not an atom unless beta = 0
                if beta == 0.0 {
                    Some(Atom::power(c, ap - 1.0))
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_antideriv_matches_hand_calc() {
        let a = Atom::power(1.0, -0.5);
        // integral of t^-1/2 over (0,1) = 2
        assert_eq!(a.antideriv_limit(0.0), Limit::Finite(0.0));
        assert!((a.antideriv(1.0) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn log_recip_eval_at_half() {
        // 1/(t log^2(e^2/t)) at t = 0.5
        let g = Atom::log_recip(1.0, 2.0);
        let expect = 1.0 / (0.5 * (2.0 + 2f64.ln()).powi(2));
        assert!((g.eval(0.5) - expect).abs() < 1e-15);
    }

    #[test]
    fn log_recip_divergence_classification() {
        // beta = 1 diverges at 0, beta = 2 converges
        assert_eq!(
            Atom::log_recip(1.0, 1.0).antideriv_limit(0.0),
            Limit::Infinite
        );
        assert_eq!(
            Atom::log_recip(1.0, 2.0).antideriv_limit(0.0),
            Limit::Finite(0.0)
        );
    }

    #[test]
    fn affine_translation_round_trip() {
        let a = Atom::affine_power(3.0, 1.0, -1.0, -0.5);
        let b = a.translated(2.0).unwrap();
        for t in [2.2, 2.5, 2.9] {
            assert!((b.eval(t) - a.eval(t - 2.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn antideriv_log_agrees_with_plain() {
        let atoms = [
            Atom::power(2.0, -1.0),
            Atom::affine_power(1.5, 1.0, 1.0, -1.0),
            Atom::constant(0.3),
            Atom::affine_power(1.0, 2.0, 3.0, -2.0),
        ];
        for a in atoms {
            for t in [0.5f64, 1.0, 7.0, 123.0] {
                let d = (a.antideriv_log(t.ln()) - a.antideriv(t)).abs();
                assert!(d < 1e-10 * a.antideriv(t).abs().max(1.0), "{a:?} at {t}");
            }
        }
    }
}
