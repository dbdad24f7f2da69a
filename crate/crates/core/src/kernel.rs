//! Closed forms for the test function `psi+(x) = e^{x/2}` on `[0, L/2]`.
//!
//! Everything here is a pure function of the support level `L` (or of
//! `y = e^L`). Expressions containing `log(e^{L/2} +- 1)` are rewritten as
//! `L/2 + log(1 +- e^{-L/2})` so they stay accurate for large `L`.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::optimize::{bisect_predicate, golden_section_minimize};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Constants shared by the archimedean terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelConstants {
    pub euler_gamma: f64,
    pub log2pi: f64,
    pub log8pi: f64,
    /// Horizontal asymptote of [`alpha`]: `2 log 2`.
    pub alpha_limit: f64,
    /// Horizontal asymptote of [`beta`]: `2 (gamma + log 2 pi)`.
    pub beta_limit: f64,
}

pub const CONSTANTS: KernelConstants = KernelConstants {
    euler_gamma: EULER_GAMMA,
    log2pi: 1.837_877_066_409_345_5,
    log8pi: 3.224_171_427_529_236,
    alpha_limit: 2.0 * LN_2,
    beta_limit: 2.0 * (EULER_GAMMA + 1.837_877_066_409_345_5),
};

/// Support level `L > 0`: the test function lives on `[-L, L]` and ideal
/// sums reach norms up to `e^L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportLevel {
    l: f64,
    half_exp: f64,
}

impl SupportLevel {
    pub fn new(l: f64) -> Result<Self> {
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::Domain(format!("support level must be positive and finite, got {l}")));
        }
        Ok(Self { l, half_exp: (0.5 * l).exp() })
    }

    /// Support level with `e^L = y`.
    pub fn from_ceiling(y: f64) -> Result<Self> {
        if !(y > 1.0) {
            return Err(Error::Domain(format!("norm ceiling must exceed 1, got {y}")));
        }
        Self::new(y.ln())
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// `e^{L/2}`.
    pub fn half_exp(&self) -> f64 {
        self.half_exp
    }
}

pub fn psi_plus(x: f64, level: SupportLevel) -> f64 {
    if (0.0..=0.5 * level.l).contains(&x) {
        (0.5 * x).exp()
    } else {
        0.0
    }
}

/// `psi+ * psi-` (convolution). Even, supported on `[-L/2, L/2]`.
pub fn conv_pm(x: f64, level: SupportLevel) -> f64 {
    let ax = x.abs();
    if ax > 0.5 * level.l {
        return 0.0;
    }
    // e^{(L-|x|)/2} - e^{|x|/2} = e^{|x|/2} (e^{(L-2|x|)/2} - 1)
    (0.5 * ax).exp() * (0.5 * (level.l - 2.0 * ax)).exp_m1()
}

/// `psi+ * psi+`, supported on `[0, L]`.
pub fn conv_pp(x: f64, level: SupportLevel) -> f64 {
    let l = level.l;
    if x < 0.0 || x > l {
        0.0
    } else if x <= 0.5 * l {
        (0.5 * x).exp() * x
    } else {
        (0.5 * x).exp() * (l - x)
    }
}

/// `2 * int_0^inf psi+(x) Sh(x/2) dx = e^{L/2} - 1 - L/2`.
pub fn sh_moment(level: SupportLevel) -> f64 {
    (0.5 * level.l).exp_m1() - 0.5 * level.l
}

/// `int_0^{L/2} psi+(w) e^{w/2} dw * int_0^{L/2} psi+(w) e^{-w/2} dw`,
/// which equals `2 int_0^inf (psi+ * psi-)(x) Ch(x/2) dx`.
pub fn ch_moment_product(level: SupportLevel) -> f64 {
    (0.5 * level.l).exp_m1() * 0.5 * level.l
}

/// `int_0^inf (psi+ * psi-)(x) / Ch(x/2) dx`
/// `= e^{L/2} L - 2(e^{L/2}+1) log(e^{L/2}+1) + 2(e^{L/2}+1) log 2`.
pub fn archimedean_ch_integral(level: SupportLevel) -> f64 {
    let l = level.l;
    let s = level.half_exp;
    if s >= 2.0 {
        -l + 2.0 * (s + 1.0) * (LN_2 - s.recip().ln_1p())
    } else {
        s * l - 2.0 * (s + 1.0) * (0.5 * (0.5 * l).exp_m1()).ln_1p()
    }
}

/// `I(psi+ * psi-) = int_0^inf ((psi+ * psi-)(x) - (psi+ * psi-)(0)) / Sh(x/2) dx`
/// `= -e^{L/2} L + 2(e^{L/2}-1) log(e^{L/2}-1) - 4(e^{L/2}-1) log 2`.
pub fn archimedean_sh_integral(level: SupportLevel) -> f64 {
    let l = level.l;
    let s = level.half_exp;
    if s >= 2.0 {
        -l + 2.0 * (s - 1.0) * ((-s.recip()).ln_1p() - 2.0 * LN_2)
    } else {
        let m = (0.5 * l).exp_m1();
        -s * l + 2.0 * m * m.ln() - 4.0 * m * LN_2
    }
}

fn check_ceiling(y: f64) -> Result<f64> {
    if !(y > 1.0) || !y.is_finite() {
        return Err(Error::Domain(format!("alpha/beta need y > 1, got {y}")));
    }
    Ok(y.sqrt())
}

/// `alpha(y) = [sqrt(y) log y - 2(sqrt(y)+1) log(sqrt(y)+1) + 2(sqrt(y)+1) log 2] / sqrt(y)`.
pub fn alpha(y: f64) -> Result<f64> {
    let s = check_ceiling(y)?;
    let inv = s.recip();
    Ok(-y.ln() * inv + 2.0 * (1.0 + inv) * (LN_2 - inv.ln_1p()))
}

/// `beta(y) = [-sqrt(y) log y + 2(sqrt(y)-1) log(sqrt(y)-1) + 2(sqrt(y)-1)(gamma + log 2pi)] / sqrt(y)`.
pub fn beta(y: f64) -> Result<f64> {
    let s = check_ceiling(y)?;
    let inv = s.recip();
    Ok(-y.ln() * inv + 2.0 * (1.0 - inv) * ((-inv).ln_1p() + EULER_GAMMA + CONSTANTS.log2pi))
}

/// `c - 1 - log c`, accurate for `c` close to 1.
pub fn window_excess(c: f64) -> f64 {
    let x = c - 1.0;
    if x.abs() < 0.05 {
        // x^2/2 - x^3/3 + x^4/4 - ...
        let mut term = x * x;
        let mut sum: f64 = 0.0;
        let mut k = 2.0;
        let mut sign = 1.0;
        while term.abs() > 1e-18 * sum.abs() && k < 60.0 {
            sum += sign * term / k;
            term *= x;
            sign = -sign;
            k += 1.0;
        }
        sum
    } else {
        x - x.ln_1p()
    }
}

/// `c - 2n(c - 1 - log c)`, the effective coefficient of `sqrt(T)` once
/// the prime-ideal sum is majorized.
pub fn window_denominator(c: f64, n: u32) -> f64 {
    c - 2.0 * f64::from(n) * window_excess(c)
}

/// `f(c, n) = 2 sqrt(c) / (c - 2n(c - 1 - log c))`: the resulting coefficient of `log Delta`.
pub fn f_objective(c: f64, n: u32) -> Result<f64> {
    if !(c >= 1.0) || n < 2 {
        return Err(Error::Domain(format!("f(c, n) needs c >= 1 and n >= 2, got c = {c}, n = {n}")));
    }
    let denominator = window_denominator(c, n);
    if denominator <= 0.0 {
        return Err(Error::WindowTooWide { c, n, denominator });
    }
    Ok(2.0 * c.sqrt() / denominator)
}

/// Largest `c` with a positive window denominator.
pub fn max_window(n: u32) -> f64 {
    let mut hi = 2.0;
    while window_denominator(hi, n) > 0.0 {
        hi *= 2.0;
    }
    let (lo, _) = bisect_predicate(|c| window_denominator(c, n) <= 0.0, 1.0, hi, 1e-15);
    lo
}

/// Minimizer of `f(., n)` on `(1, c_max)`.
///
/// Golden-section search localizes the minimum; the last digits come from
/// bisecting the stationarity condition
/// `2n(c - 1 + log c) = c`, which has exactly one root above 1.
pub fn minimize_c(n: u32) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::Domain(format!("minimize_c needs n >= 2, got {n}")));
    }
    let c_max = max_window(n);
    let objective = |c: f64| f_objective(c, n).unwrap_or(f64::INFINITY);
    let (c_golden, _) = golden_section_minimize(objective, 1.0 + 1e-9, c_max, 1e-7);
    let stationary = |c: f64| 2.0 * f64::from(n) * ((c - 1.0) + c.ln()) - c >= 0.0;
    let width = 1e-4 * (c_golden - 1.0).max(1e-6);
    let mut lo = (c_golden - width).max(1.0);
    let mut hi = (c_golden + width).min(c_max);
    while stationary(lo) && lo > 1.0 {
        lo = (lo - 4.0 * width).max(1.0);
    }
    while !stationary(hi) && hi < c_max {
        hi = (hi + 4.0 * width).min(c_max);
    }
    let (a, b) = bisect_predicate(stationary, lo, hi, 1e-14);
    let c_star = 0.5 * (a + b);
    Ok((c_star, f_objective(c_star, n)?))
}

/// `(4 - 1/(2n)) D^2 - 4c` at `c = 1 + 1/(4n)`, where `D` is the window
/// denominator. Positive exactly when `f(1 + 1/(4n), n)^2 < 4 - 1/(2n)`.
///
/// With `e = 1/(4n)` and `D = 1 + h`, the expression equals
/// `8 d + 4h^2 - 4eh - 2eh^2` where `d = h - 3e/4` has the series
/// `sum_{k>=3} (-1)^{k+1} e^{k-1} / (2k)`; every term is `O(e^2)`, so the
/// sign is resolved even when the gap is `~1e-14`.
pub fn f_inequality_gap(n: u32) -> f64 {
    let e = 0.25 / f64::from(n);
    let mut d: f64 = 0.0;
    let mut power = e * e;
    let mut k = 3.0;
    let mut sign = 1.0;
    while power > 1e-30 * d.abs().max(1e-300) && k < 200.0 {
        d += sign * power / (2.0 * k);
        power *= e;
        sign = -sign;
        k += 1.0;
    }
    let h = 0.75 * e + d;
    8.0 * d + 4.0 * h * h - 4.0 * e * h - 2.0 * e * h * h
}

/// `1 / (2 pi sqrt(c))`, the coefficient of `log^2 S` in the specialized tests.
pub fn log_square_coefficient(c: f64) -> f64 {
    1.0 / (c.sqrt() * 2.0 * PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lvl(l: f64) -> SupportLevel {
        SupportLevel::new(l).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn support_level_rejects_nonpositive() {
        assert!(SupportLevel::new(0.0).is_err());
        assert!(SupportLevel::new(-1.0).is_err());
        assert!(SupportLevel::new(f64::NAN).is_err());
        let s = lvl(3.0);
        assert!(rel(s.half_exp(), 1.5f64.exp()) < 1e-14);
    }

    #[test]
    fn psi_plus_values() {
        assert_eq!(psi_plus(0.0, lvl(7.0)), 1.0);
        assert!(rel(psi_plus(3.5, lvl(7.0)), 1.75f64.exp()) < 1e-15);
        assert_eq!(psi_plus(-1.0, lvl(4.0)), 0.0);
        assert_eq!(psi_plus(2.01, lvl(4.0)), 0.0);
    }

    #[test]
    fn conv_pm_values() {
        let l = lvl(2.0 * 4f64.ln());
        assert!((conv_pm(0.0, l) - 3.0).abs() < 1e-14);
        assert!(conv_pm(0.5 * l.l(), l).abs() < 1e-15);
        assert_eq!(conv_pm(3.0, lvl(4.0)), 0.0);
        let x: f64 = 0.7;
        let direct = (0.5 * (4.0 - x)).exp() - (0.5 * x).exp();
        assert!(rel(conv_pm(x, lvl(4.0)), direct) < 1e-14);
    }

    #[test]
    fn conv_pp_values() {
        let l = lvl(4.0);
        assert_eq!(conv_pp(0.0, l), 0.0);
        assert_eq!(conv_pp(4.0, l), 0.0);
        assert!(rel(conv_pp(3.0, l), 1.5f64.exp()) < 1e-15);
        assert_eq!(conv_pp(-0.1, l), 0.0);
        assert_eq!(conv_pp(4.1, l), 0.0);
    }

    // Reference values computed with 50-digit arithmetic from the unrearranged closed forms.
    const CH_REFERENCE: [(f64, f64); 7] = [
        (0.001, 1.250_312_539_065_755_5e-7),
        (0.1, 0.001_281_643_907_608_030_2),
        (1.0, 0.160_511_777_855_465_57),
        (6.907_755_278_982_137, 36.285_721_352_213_228),
        (10.0, 195.123_897_076_543_31),
        (27.631_021_115_928_548, 1_386_266.116_392_135_8),
        (60.0, 14_814_599_452_557.791),
    ];
    const SH_REFERENCE: [(f64, f64); 7] = [
        (0.001, -0.009_989_694_046_471_632),
        (0.1, -0.551_895_493_380_249_2),
        (1.0, -4.008_829_572_502_39),
        (6.907_755_278_982_137, -93.780_158_845_924_13),
        (10.0, -420.709_309_306_042_67),
        (27.631_021_115_928_548, -2_772_615.580_671_175),
        (60.0, -29_629_198_905_296.037),
    ];

    #[test]
    fn archimedean_integrals_match_high_precision() {
        for (l, expected) in CH_REFERENCE {
            let tol = if l < 0.01 { 1e-8 } else { 1e-10 };
            assert!(rel(archimedean_ch_integral(lvl(l)), expected) < tol, "ch at L = {l}");
        }
        for (l, expected) in SH_REFERENCE {
            assert!(rel(archimedean_sh_integral(lvl(l)), expected) < 1e-10, "sh at L = {l}");
        }
    }

    #[test]
    fn ch_integral_vanishes_as_support_shrinks() {
        assert!(archimedean_ch_integral(lvl(1e-6)).abs() < 1e-12);
    }

    #[test]
    fn ch_integral_is_alpha_times_half_exp() {
        let l = lvl(2.0 * 31.6228f64.ln());
        let y = l.l().exp();
        let via_alpha = alpha(y).unwrap() * l.half_exp();
        assert!(rel(archimedean_ch_integral(l), via_alpha) < 1e-12);
    }

    const AB_REFERENCE: [(f64, f64, f64); 6] = [
        (2.0, 0.050_502_030_828_836_043, 0.205_284_693_294_661_02),
        (10.0, 0.373_218_266_650_746_64, 2.054_760_127_652_017_3),
        (1000.0, 1.147_455_260_151_986_5, 4.396_764_342_405_534),
        (1e6, 1.371_864_145_256_213, 4.809_540_766_934_671),
        (1e10, 1.386_057_965_454_202_7, 4.829_886_902_357_831),
        (1e12, 1.386_266_116_392_135_8, 4.830_151_001_416_178),
    ];

    #[test]
    fn alpha_beta_match_high_precision() {
        for (y, a, b) in AB_REFERENCE {
            assert!(rel(alpha(y).unwrap(), a) < 1e-12, "alpha({y})");
            assert!(rel(beta(y).unwrap(), b) < 1e-12, "beta({y})");
        }
    }

    #[test]
    fn alpha_beta_anchor_values() {
        let a = alpha(1000.0).unwrap();
        let b = beta(1000.0).unwrap();
        assert!(a >= 1.0 && (a - 1.1473).abs() < 1e-3);
        assert!(b >= 4.39 && (b - 4.3966).abs() < 1e-3);
    }

    #[test]
    fn alpha_beta_asymptotes() {
        assert!((CONSTANTS.alpha_limit - alpha(1e10).unwrap()).abs() < 1e-3);
        assert!((CONSTANTS.beta_limit - beta(1e10).unwrap()).abs() < 1e-3);
    }

    #[test]
    fn alpha_beta_domain() {
        assert!(alpha(1.0).is_err());
        assert!(beta(0.5).is_err());
        assert!(beta(f64::INFINITY).is_err());
    }

    #[test]
    fn alpha_beta_monotone_and_bounded() {
        let mut prev = (0.0, 0.0);
        let mut y = 2.0;
        while y <= 1e10 {
            let a = alpha(y).unwrap();
            let b = beta(y).unwrap();
            assert!(a > prev.0 && b > prev.1, "not increasing at {y}");
            assert!(a < CONSTANTS.alpha_limit && b < CONSTANTS.beta_limit);
            prev = (a, b);
            y *= 1.05;
        }
    }

    #[test]
    fn constants_are_consistent() {
        assert!(CONSTANTS.euler_gamma > 0.5772156 && CONSTANTS.euler_gamma < 0.5772157);
        assert!((CONSTANTS.log2pi - (2.0 * PI).ln()).abs() < 1e-15);
        assert!((CONSTANTS.log8pi - (8.0 * PI).ln()).abs() < 1e-15);
    }

    #[test]
    fn f_objective_values() {
        for n in [2, 3, 17, 1000] {
            assert_eq!(f_objective(1.0, n).unwrap(), 2.0);
        }
        let v = f_objective(1.125, 2).unwrap().powi(2);
        assert!((v - 3.745_300_664_836_720_2).abs() < 1e-12);
        assert!(v < 3.75);
        assert!(matches!(f_objective(3.0, 2), Err(Error::WindowTooWide { .. })));
        assert!(f_objective(0.9, 2).is_err());
    }

    #[test]
    fn minimizer_matches_stationary_point() {
        // Roots of d/dc f(c, n) computed with 50-digit arithmetic.
        for (n, c_star, f_star) in [
            (2, 1.148_603_819_857_805, 1.933_871_383_558_451_3),
            (5, 1.053_355_103_636_869_8, 1.974_457_220_443_232_9),
            (9, 1.028_780_422_786_098_8, 1.985_946_684_613_023_2),
            (100, 1.002_507_839_288_890_1, 1.998_748_695_305_923_4),
        ] {
            let (c, f) = minimize_c(n).unwrap();
            assert!((c - c_star).abs() < 1e-9, "n = {n}: {c} vs {c_star}");
            assert!((f - f_star).abs() < 1e-13);
        }
    }

    #[test]
    fn minimizer_beats_fine_grid() {
        for n in [2u32, 5, 9] {
            let (c_star, f_star) = minimize_c(n).unwrap();
            let c_max = max_window(n);
            let mut best = (f64::INFINITY, 0.0);
            for i in 1..200_000 {
                let c = 1.0 + (c_max - 1.0) * f64::from(i) / 200_000.0;
                let v = f_objective(c, n).unwrap_or(f64::INFINITY);
                if v < best.0 {
                    best = (v, c);
                }
            }
            assert!(f_star <= best.0 + 1e-15);
            assert!((c_star - best.1).abs() < 5e-3);
        }
        let (c2, f2) = minimize_c(2).unwrap();
        assert!((1.0..=1.25).contains(&c2));
        assert!(f2 <= f_objective(1.125, 2).unwrap());
        let (c9, _) = minimize_c(9).unwrap();
        assert!((c9 - (1.0 + 1.0 / 36.0)).abs() < 2e-3);
    }

    #[test]
    fn minimum_below_two() {
        for n in 2..=100 {
            assert!(minimize_c(n).unwrap().1 < 2.0);
        }
    }

    #[test]
    fn inequality_gap_agrees_with_direct_evaluation() {
        for n in 2..=2000u32 {
            let c = 1.0 + 0.25 / f64::from(n);
            let d = window_denominator(c, n);
            let direct = (4.0 - 0.5 / f64::from(n)) * d * d - 4.0 * c;
            let gap = f_inequality_gap(n);
            assert!(gap > 0.0);
            assert!((gap - direct).abs() < 1e-12 + 1e-6 * gap, "n = {n}");
        }
        // leading term 7/12 e^2 with e = 1/(4n)
        let n = 1_000_000u32;
        let e = 0.25 / f64::from(n);
        assert!(rel(f_inequality_gap(n), 7.0 / 12.0 * e * e) < 1e-5);
    }

    #[test]
    fn lhs_minorant_holds() {
        let mut l: f64 = 0.1;
        while l <= 40.0 {
            let s = (0.5 * l).exp();
            let lhs = (s - 1.0 - 0.5 * l).powi(2);
            let minorant = s * s - l * s - 2.0 * s;
            assert!(lhs >= minorant, "L = {l}");
            l += 0.05;
        }
    }

    proptest! {
        #[test]
        fn conv_pm_even_and_nonnegative(x in -30.0f64..30.0, l in 0.5f64..40.0) {
            let level = lvl(l);
            let v = conv_pm(x, level);
            prop_assert!(v >= 0.0);
            prop_assert_eq!(v, conv_pm(-x, level));
            if x.abs() > 0.5 * l {
                prop_assert_eq!(v, 0.0);
            }
        }

        #[test]
        fn conv_pp_support(x in -10.0f64..50.0, l in 0.5f64..40.0) {
            let v = conv_pp(x, lvl(l));
            prop_assert!(v >= 0.0);
            if x < 0.0 || x > l {
                prop_assert_eq!(v, 0.0);
            }
        }
    }
}
