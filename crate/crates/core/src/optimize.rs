//! One-dimensional search primitives: golden-section minimization and
//! bisection on a monotone predicate.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the minimum of a unimodal `f` on `[a, b]`.
///
/// Stops once the bracket is narrower than `xtol`. Returns `(x_min, f_min)`.
pub fn golden_section_minimize<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > xtol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Bisection for the boundary of a predicate with `pred(lo) == false` and
/// `pred(hi) == true`. Returns a bracket `(lo, hi)` of width at most `xtol`
/// that keeps those two properties.
pub fn bisect_predicate<P: Fn(f64) -> bool>(pred: P, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    debug_assert!(lo < hi);
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_vertex() {
        let (x, fx) = golden_section_minimize(|x| (x - 0.3) * (x - 0.3) + 1.0, -2.0, 5.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bisection_brackets_sqrt2() {
        let (lo, hi) = bisect_predicate(|x| x * x >= 2.0, 0.0, 2.0, 1e-12);
        assert!(lo * lo < 2.0 && hi * hi >= 2.0);
        assert!(hi - lo <= 1e-12);
    }
}
