//! Unitary single-step propagators U = exp(−i·H·dt) for small Hermitian H.
//!
//! The 2×2 case uses the closed-form Pauli rotation. Larger matrices use a
//! cos/sin Taylor expansion with scaling and squaring; at the step sizes used
//! here (‖H·dt‖ ≲ 0.1) the truncation error sits below double rounding, so
//! the step is unitary to machine precision without an eigendecomposition.

use nalgebra::{Matrix2, SMatrix};
use num_complex::Complex64;

type CMat<const N: usize> = SMatrix<Complex64, N, N>;

/// Closed-form exp(−i·H·dt) for a 2×2 Hermitian H.
pub(crate) fn unitary_step2(h: &Matrix2<Complex64>, dt: f64) -> Matrix2<Complex64> {
    let a = h[(0, 0)].re;
    let b = h[(1, 1)].re;
    let c = h[(0, 1)];
    let mean = 0.5 * (a + b);
    let d = 0.5 * (a - b);
    let r = (d * d + c.norm_sqr()).sqrt();
    let angle = r * dt;
    let cos = angle.cos();
    // sin(r·dt)/r, finite as r → 0.
    let f = if r > 0.0 { angle.sin() / r } else { dt };
    let phase = Complex64::from_polar(1.0, -mean * dt);
    let i = Complex64::new(0.0, 1.0);
    Matrix2::new(
        phase * (Complex64::new(cos, 0.0) - i * f * d),
        phase * (-i * f * c),
        phase * (-i * f * c.conj()),
        phase * (Complex64::new(cos, 0.0) + i * f * d),
    )
}

/// exp(−i·H·dt) for Hermitian H of any small dimension via
/// U = cos(A) − i·sin(A), A = H·dt, with the series truncated at A⁸/A⁹ and
/// repeated squaring when ‖A‖ exceeds 0.1.
pub(crate) fn unitary_step<const N: usize>(h: &CMat<N>, dt: f64) -> CMat<N> {
    let mut a = h * Complex64::new(dt, 0.0);
    let mut squarings = 0u32;
    let mut norm = inf_norm(&a);
    while norm > 0.1 && squarings < 64 {
        a *= Complex64::new(0.5, 0.0);
        norm *= 0.5;
        squarings += 1;
    }

    let a2 = a * a;
    let a4 = a2 * a2;
    let a6 = a4 * a2;
    let a8 = a4 * a4;
    let id = CMat::<N>::identity();
    let re = |x: f64| Complex64::new(x, 0.0);

    let cos = id - a2 * re(1.0 / 2.0) + a4 * re(1.0 / 24.0) - a6 * re(1.0 / 720.0)
        + a8 * re(1.0 / 40_320.0);
    let sin_poly = id - a2 * re(1.0 / 6.0) + a4 * re(1.0 / 120.0) - a6 * re(1.0 / 5_040.0)
        + a8 * re(1.0 / 362_880.0);
    let sin = a * sin_poly;

    let mut u = cos - sin * Complex64::new(0.0, 1.0);
    for _ in 0..squarings {
        u = u * u;
    }
    u
}

fn inf_norm<const N: usize>(m: &CMat<N>) -> f64 {
    (0..N)
        .map(|i| (0..N).map(|j| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}
