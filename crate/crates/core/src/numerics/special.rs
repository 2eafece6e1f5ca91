//! Sine and cosine integrals: Si, Ci and the entire variant Cin.
//!
//! Three evaluation regimes, chosen to keep every branch cancellation-free:
//!
//! * `|y| <= 4`   — Maclaurin series (all terms modest, no cancellation);
//! * `4 < |y| < 45` — adaptive quadrature of the smooth integrand;
//! * `|y| >= 45`  — asymptotic auxiliary-function expansion, whose optimal
//!   truncation error at y = 45 lies below 1e-16 relative.
//!
//! The identities used throughout: Cin(y) = γ + ln y − Ci(y) for y > 0,
//! Ci(y) = f(y)·sin y − g(y)·cos y and Si(y) = π/2 − f(y)·cos y − g(y)·sin y
//! with f, g the standard auxiliary functions.

use std::f64::consts::FRAC_PI_2;

use super::quadrature::integrate;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Upper end of the series regime.
const SERIES_MAX: f64 = 4.0;
/// Lower end of the asymptotic regime.
const ASYMPTOTIC_MIN: f64 = 45.0;
/// Series terms below this relative size stop the summation.
const TERM_EPS: f64 = 1e-18;

/// Entire cosine integral Cin(y) = ∫₀^y (1 − cos x)/x dx.
///
/// Even in `y`; accurate to a few ulp over the full double range, including
/// arguments as large as 1e42 where only γ + ln y survives.
pub fn cin(y: f64) -> f64 {
    let a = y.abs();
    if a == 0.0 {
        return 0.0;
    }
    if a <= SERIES_MAX {
        return cin_series(a);
    }
    if a < ASYMPTOTIC_MIN {
        return cin_quadrature(a);
    }
    let (f, g) = aux_fg(a);
    EULER_GAMMA + a.ln() - (f * a.sin() - g * a.cos())
}

/// Cosine integral Ci(y) for y > 0.
///
/// # Panics
/// Panics when `y <= 0` (Ci has a branch cut on the negative axis and a
/// logarithmic singularity at zero; no caller in this crate needs either).
pub fn ci(y: f64) -> f64 {
    assert!(y > 0.0, "ci(y) requires y > 0, got {y}");
    if y >= ASYMPTOTIC_MIN {
        let (f, g) = aux_fg(y);
        return f * y.sin() - g * y.cos();
    }
    EULER_GAMMA + y.ln() - cin(y)
}

/// Sine integral Si(y) = ∫₀^y sin(x)/x dx. Odd in `y`.
pub fn si(y: f64) -> f64 {
    let a = y.abs();
    let v = if a <= SERIES_MAX {
        si_series(a)
    } else if a < ASYMPTOTIC_MIN {
        integrate(|x| x.sin() / x, 0.0, a, 1e-13, 1e-15)
            .expect("sinc is smooth and bounded on the quadrature range")
            .value
    } else {
        let (f, g) = aux_fg(a);
        FRAC_PI_2 - f * a.cos() - g * a.sin()
    };
    if y < 0.0 { -v } else { v }
}

/// Maclaurin series Σ_{n≥1} (−1)^{n+1} y^{2n} / (2n · (2n)!).
fn cin_series(y: f64) -> f64 {
    let y2 = y * y;
    let mut term = 0.5 * y2; // y²/2! — the n = 1 factorial part
    let mut sum = 0.0;
    let mut sign = 1.0;
    for n in 1..60 {
        sum += sign * term / (2 * n) as f64;
        let next = 2.0 * n as f64;
        term *= y2 / ((next + 1.0) * (next + 2.0));
        sign = -sign;
        if term < TERM_EPS * sum.abs() {
            break;
        }
    }
    sum
}

/// Maclaurin series Σ_{n≥0} (−1)^n y^{2n+1} / ((2n+1) · (2n+1)!).
fn si_series(y: f64) -> f64 {
    let y2 = y * y;
    let mut term = y;
    let mut sum = 0.0;
    let mut sign = 1.0;
    for n in 0..60 {
        sum += sign * term / (2 * n + 1) as f64;
        let next = (2 * n + 2) as f64;
        term *= y2 / (next * (next + 1.0));
        sign = -sign;
        if term < TERM_EPS * sum.abs() {
            break;
        }
    }
    sum
}

/// Mid-range Cin by quadrature of the cancellation-free form
/// (1 − cos x)/x = 2 sin²(x/2)/x.
fn cin_quadrature(y: f64) -> f64 {
    integrate(
        |x| {
            let s = (0.5 * x).sin();
            2.0 * s * s / x
        },
        0.0,
        y,
        1e-13,
        1e-15,
    )
    .expect("Cin integrand is smooth and bounded on the quadrature range")
    .value
}

/// Auxiliary functions (f, g) of the asymptotic expansions,
/// f(y) ~ (1/y) Σ (−1)^n (2n)!/y^{2n} and g(y) ~ (1/y²) Σ (−1)^n (2n+1)!/y^{2n},
/// summed to optimal truncation (terms are added while they keep shrinking).
pub(crate) fn aux_fg(y: f64) -> (f64, f64) {
    let y2 = y * y;
    let mut f_sum = 0.0;
    let mut g_sum = 0.0;
    let mut f_term = 1.0; // (2n)!   / y^{2n}, n = 0
    let mut g_term = 1.0; // (2n+1)! / y^{2n}, n = 0
    let mut sign = 1.0;
    for n in 0..60 {
        f_sum += sign * f_term;
        g_sum += sign * g_term;
        let k = 2.0 * n as f64;
        let f_next = f_term * (k + 1.0) * (k + 2.0) / y2;
        let g_next = g_term * (k + 2.0) * (k + 3.0) / y2;
        if f_next >= f_term || f_next < TERM_EPS {
            break;
        }
        f_term = f_next;
        g_term = g_next;
        sign = -sign;
    }
    (f_sum / y, g_sum / y2)
}
