use num_complex::Complex64;

use crate::specfun::rgamma;

const MAX_TERMS: usize = 10_000;

/// `Σ_{k≥0} a_k x^k / Γ(order·k + index)` where `a_{k+1} = -2λ a_k - b a_{k-1}`.
///
/// The coefficients are the power sums (`a_0 = 1`, `a_1 = 0` up to scaling) or
/// divided differences (`a_0 = 0`, `a_1 = 1`) of the roots of
/// `z² + 2λz + b`, so the sum covers both the distinct and the double root
/// case without branching.
pub(crate) fn recurrence_series(
    order: f64,
    index: f64,
    lambda: f64,
    b: Complex64,
    x: f64,
    a0: Complex64,
    a1: Complex64,
) -> Complex64 {
    let mut prev = a0;
    let mut cur = a1;
    let mut sum = a0 * rgamma(index);
    let mut carry = Complex64::new(0.0, 0.0);
    let mut xk = 1.0;
    let mut small = 0;
    for k in 1..MAX_TERMS {
        xk *= x;
        let term = cur * (xk * rgamma(order * k as f64 + index));
        let t = sum + term;
        carry += neumaier(sum, term, t);
        sum = t;
        let total = (sum + carry).norm();
        if term.norm() <= 1e-17 * total {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
        let next = -2.0 * lambda * cur - b * prev;
        prev = cur;
        cur = next;
    }
    sum + carry
}

fn neumaier(a: Complex64, b: Complex64, s: Complex64) -> Complex64 {
    let part = |a: f64, b: f64, s: f64| if a.abs() >= b.abs() { (a - s) + b } else { (b - s) + a };
    Complex64::new(part(a.re, b.re, s.re), part(a.im, b.im, s.im))
}

/// Whether `recurrence_series` is accurate for roots of modulus `radius` at
/// argument `x`: mirrors the Taylor region of the Mittag-Leffler evaluator.
pub(crate) fn series_ok(order: f64, radius: f64, x: f64) -> bool {
    let r = radius * x;
    r <= 5.0 && r.powf(1.0 / order) <= 3.0
}
