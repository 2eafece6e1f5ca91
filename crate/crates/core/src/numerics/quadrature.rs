//! Globally adaptive Gauss–Kronrod quadrature (7–15 point rule).
//!
//! The estimator is the classic pairing: the 15-point Kronrod value is the
//! result, and its difference from the embedded 7-point Gauss value is the
//! per-interval error estimate. Intervals live in a max-heap keyed on that
//! estimate, and the worst interval is bisected until the summed error meets
//! the requested tolerance or the subdivision budget runs out.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::Error;

/// Abscissae of the 15-point Kronrod rule on [-1, 1] (positive half; the
/// rule is symmetric). Odd indices are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

/// Weights of the embedded 7-point Gauss rule (nodes `XGK[1,3,5]` and the
/// midpoint).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// Maximum number of interval bisections before giving up.
const MAX_INTERVALS: usize = 20_000;

/// Value/error pair returned by the integrator.
#[derive(Debug, Clone, Copy)]
pub struct IntegralEstimate {
    /// Best estimate of the integral.
    pub value: f64,
    /// Estimated absolute error of `value`.
    pub abs_error: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        // Heap pops the interval with the largest error first; NaN errors
        // are ordered last so they never poison the refinement order.
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Less)
    }
}

/// Apply the 7–15 rule to one interval.
fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Interval {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut kronrod = WGK[7] * f_center;
    let mut gauss = WG[3] * f_center;
    for j in 0..7 {
        let x = half * XGK[j];
        let sum = f(center - x) + f(center + x);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;

    Interval {
        a,
        b,
        value: kronrod,
        error: (kronrod - gauss).abs(),
    }
}

/// Integrate `f` over `[a, b]` to the requested tolerances.
///
/// The target error is `max(abs_tol, rel_tol * |integral|)`; pass zero for
/// the tolerance you do not care about. Returns
/// [`Error::QuadratureNoConvergence`] if the subdivision budget is exhausted
/// first, and [`Error::InvalidParameter`] for a non-finite or reversed
/// interval or a non-finite integrand value.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<IntegralEstimate, Error> {
    if !a.is_finite() || !b.is_finite() || a > b {
        return Err(Error::InvalidParameter(format!(
            "integration interval [{a}, {b}] must be finite and ordered"
        )));
    }
    if a == b {
        return Ok(IntegralEstimate {
            value: 0.0,
            abs_error: 0.0,
            evaluations: 0,
        });
    }

    let mut heap = BinaryHeap::new();
    let first = gauss_kronrod(&f, a, b);
    let mut total = first.value;
    let mut total_error = first.error;
    let mut evaluations = 15;
    heap.push(first);

    loop {
        if !total.is_finite() {
            return Err(Error::InvalidParameter(
                "integrand produced a non-finite value".into(),
            ));
        }
        let target = abs_tol.max(rel_tol * total.abs());
        if total_error <= target {
            return Ok(IntegralEstimate {
                value: total,
                abs_error: total_error,
                evaluations,
            });
        }
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureNoConvergence {
                error: total_error,
                target,
                intervals: heap.len(),
            });
        }

        let worst = heap.pop().expect("heap holds at least one interval");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval is at floating-point resolution and cannot shrink.
            return Err(Error::QuadratureNoConvergence {
                error: total_error,
                target,
                intervals: heap.len() + 1,
            });
        }
        let left = gauss_kronrod(&f, worst.a, mid);
        let right = gauss_kronrod(&f, mid, worst.b);
        evaluations += 30;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
}
