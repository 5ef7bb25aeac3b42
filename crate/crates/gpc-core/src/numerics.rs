//! Scalar numerical kernels: adaptive quadrature, root refinement and
//! cubic spline interpolation.

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// Recursion splits an interval until the Richardson-corrected Simpson
/// estimate changes by less than the local error budget; `tol` is the
/// absolute tolerance for the whole interval.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Bisection refinement of a bracketed sign change.
///
/// `f(a)` and `f(b)` must have opposite signs. Iterates until
/// `|f(mid)| <= value_tol`; the stop criterion is on the function value,
/// not on the bracket width.
pub fn bisect_root<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, value_tol: f64) -> f64 {
    let (mut lo, mut hi) = (a, b);
    let (mut flo, fhi) = (f(lo), f(hi));
    assert!(
        flo == 0.0 || fhi == 0.0 || (flo > 0.0) != (fhi > 0.0),
        "bisect_root: endpoints do not bracket a sign change"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid.abs() <= value_tol {
            return mid;
        }
        if (fmid > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if hi - lo < f64::EPSILON * (1.0 + hi.abs()) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section minimizer of `f` on `[a, b]` for locating tangential
/// zeros of `|lambda|`; returns the abscissa of the minimum.
pub fn refine_minimum<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        if hi - lo < 1e-14 * (1.0 + hi.abs()) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Natural cubic spline through strictly increasing sample points.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// Second derivatives at the knots (natural boundary: zero at ends).
    y2: Vec<f64>,
}

/// Evaluation outside the sampled range.
#[derive(Debug, Clone, thiserror::Error)]
#[error("argument {t} outside table range [{lo}, {hi}]")]
pub struct OutOfRange {
    pub t: f64,
    pub lo: f64,
    pub hi: f64,
}

impl CubicSpline {
    /// Build from knots; requires at least 4 points with strictly
    /// increasing abscissae.
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        let n = xs.len();
        assert!(n >= 4, "cubic spline needs at least 4 points");
        assert_eq!(n, ys.len());
        assert!(
            xs.windows(2).all(|w| w[1] > w[0]),
            "spline abscissae must be strictly increasing"
        );

        // Tridiagonal solve for the second derivatives.
        let mut y2 = vec![0.0; n];
        let mut u = vec![0.0; n];
        for i in 1..n - 1 {
            let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
            let p = sig * y2[i - 1] + 2.0;
            y2[i] = (sig - 1.0) / p;
            let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                - (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            u[i] = (6.0 * d / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            y2[i] = y2[i] * y2[i + 1] + u[i];
        }
        CubicSpline { xs, ys, y2 }
    }

    pub fn range(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }

    fn locate(&self, t: f64) -> Result<usize, OutOfRange> {
        let (lo, hi) = self.range();
        // tiny slack absorbs roundoff at the endpoints
        if t < lo - 1e-12 || t > hi + 1e-12 {
            return Err(OutOfRange { t, lo, hi });
        }
        let idx = match self
            .xs
            .binary_search_by(|x| x.partial_cmp(&t).expect("non-finite knot"))
        {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        };
        Ok(idx.min(self.xs.len() - 2))
    }

    /// Spline value at `t`.
    pub fn eval(&self, t: f64) -> Result<f64, OutOfRange> {
        let i = self.locate(t)?;
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - t) / h;
        let b = (t - self.xs[i]) / h;
        Ok(a * self.ys[i]
            + b * self.ys[i + 1]
            + ((a * a * a - a) * self.y2[i] + (b * b * b - b) * self.y2[i + 1]) * h * h / 6.0)
    }

    /// Analytic derivative of the interpolant at `t`.
    pub fn deriv(&self, t: f64) -> Result<f64, OutOfRange> {
        let i = self.locate(t)?;
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - t) / h;
        let b = (t - self.xs[i]) / h;
        Ok((self.ys[i + 1] - self.ys[i]) / h
            + ((3.0 * b * b - 1.0) * self.y2[i + 1] - (3.0 * a * a - 1.0) * self.y2[i]) * h / 6.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_polynomial_exactly() {
        // cubic is exact for Simpson
        let val = adaptive_simpson(&|x: f64| x * x * x - 2.0 * x, 0.0, 2.0, 1e-12);
        assert!((val - 0.0).abs() < 1e-12);
    }

    #[test]
    fn simpson_matches_known_integral() {
        let val = adaptive_simpson(&f64::sin, 0.0, std::f64::consts::PI, 1e-12);
        assert!((val - 2.0).abs() < 1e-10);
    }

    #[test]
    fn bisect_finds_cos_root() {
        let r = bisect_root(&f64::cos, 1.0, 2.0, 1e-12);
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    }

    #[test]
    fn golden_section_finds_parabola_minimum() {
        let m = refine_minimum(&|x: f64| (x - 1.3).powi(2), 0.0, 3.0);
        assert!((m - 1.3).abs() < 1e-9);
    }

    #[test]
    fn spline_reproduces_cubic_derivative_closely() {
        let xs: Vec<f64> = (0..200).map(|i| i as f64 * 0.05).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| (x).cos()).collect();
        let sp = CubicSpline::new(xs, ys);
        for &t in &[0.3, 1.7, 4.2, 8.9] {
            assert!((sp.eval(t).unwrap() - t.cos()).abs() < 1e-5);
            assert!((sp.deriv(t).unwrap() + t.sin()).abs() < 1e-3);
        }
    }

    #[test]
    fn spline_rejects_out_of_range() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys = vec![0.0; 10];
        let sp = CubicSpline::new(xs, ys);
        assert!(sp.eval(-0.5).is_err());
        assert!(sp.eval(9.5).is_err());
    }
}
