//! Small numeric helpers shared across the crate: bracketed root finding,
//! logarithmic grids, least-squares line fits and printf-`%g` style formatting.

use crate::error::{Error, Result};

/// Bisection to relative tolerance `rtol`, followed by a few secant
/// refinement steps. `f` must change sign on `[a, b]`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, rtol: f64) -> Result<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.is_nan() || fb.is_nan() {
        return Err(Error::RootFind(format!(
            "endpoint value is NaN on [{a}, {b}] (f(a)={fa}, f(b)={fb})"
        )));
    }
    if fa.signum() == fb.signum() || !fa.is_finite() && !fb.is_finite() {
        return Err(Error::RootFind(format!(
            "no sign change on [{a}, {b}] (f(a)={fa}, f(b)={fb})"
        )));
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= rtol * m.abs().max(1e-300) {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    // Secant polish inside the final bracket.
    let mut x0 = a;
    let mut x1 = b;
    let mut f0 = f(x0);
    for _ in 0..8 {
        let f1 = f(x1);
        if (f1 - f0).abs() < 1e-300 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 < a || x2 > b {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
    }
    Ok(x1.clamp(a, b))
}

/// `n` log-spaced points on `[lo, hi]`, inclusive at both ends.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let (la, lb) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// `n` linearly spaced points on `[lo, hi]`.
pub fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Least-squares slope and intercept of `y` against `x`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// printf `%.*g`-style formatting (significant digits, scientific form for
/// extreme magnitudes, trailing zeros trimmed).
pub fn format_g(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        let s = format!("{:.*e}", sig.saturating_sub(1), x);
        // Trim trailing zeros in the mantissa: "1.500000e2" -> "1.5e2".
        if let Some(epos) = s.find('e') {
            let (mant, ex) = s.split_at(epos);
            let mant = mant.trim_end_matches('0').trim_end_matches('.');
            let expnum: i32 = ex[1..].parse().unwrap_or(0);
            return format!("{mant}e{expnum:+03}");
        }
        s
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn format_g_matches_printf() {
        assert_eq!(format_g(0.5, 12), "0.5");
        assert_eq!(format_g(1.0, 12), "1");
        assert_eq!(format_g(2.0, 12), "2");
        assert_eq!(format_g(f64::INFINITY, 12), "inf");
        assert_eq!(format_g(1.5e20, 12), "1.5e+20");
        assert_eq!(format_g(-0.25, 12), "-0.25");
    }

    #[test]
    fn log_grid_endpoints() {
        let g = log_grid(1e-6, 1e6, 201);
        assert_eq!(g.len(), 201);
        assert!((g[0] - 1e-6).abs() < 1e-18);
        assert!((g[200] - 1e6).abs() < 1e-4);
    }
}
