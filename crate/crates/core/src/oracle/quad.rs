//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{MellinError, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-15,
            rel_tol: 1e-12,
            max_intervals: 4000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    /// `∫|f|`, the scale against which cancellation is judged.
    pub l1: f64,
    pub intervals: usize,
}

struct Piece {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    l1: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Piece {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut l1 = fc.norm() * WGK[7];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let f1 = f(c - h * x);
        let f2 = f(c + h * x);
        kron += (f1 + f2) * w;
        l1 += (f1.norm() + f2.norm()) * w;
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    Piece {
        a,
        b,
        value: kron * h,
        error: ((kron - gauss) * h).norm(),
        l1: l1 * h.abs(),
    }
}

/// `∫_a^b f`, starting from `initial` equal pieces and bisecting the piece
/// with the largest error estimate until the total estimate is within
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    initial: usize,
    opts: QuadOptions,
) -> Result<QuadResult> {
    let initial = initial.max(1);
    let step = (b - a) / initial as f64;
    let mut heap: BinaryHeap<Piece> = (0..initial)
        .map(|i| {
            let lo = a + step * i as f64;
            let hi = if i + 1 == initial { b } else { lo + step };
            gk15(&f, lo, hi)
        })
        .collect();
    loop {
        let value: Complex64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        let l1: f64 = heap.iter().map(|p| p.l1).sum();
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(MellinError::Domain("integrand is not finite".into()));
        }
        let target = opts.abs_tol.max(opts.rel_tol * value.norm());
        if error <= target {
            return Ok(QuadResult {
                value,
                error,
                l1,
                intervals: heap.len(),
            });
        }
        if heap.len() >= opts.max_intervals {
            return Err(MellinError::Quadrature {
                error,
                intervals: heap.len(),
            });
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(gk15(&f, worst.a, mid));
        heap.push(gk15(&f, mid, worst.b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = integrate(
            |x| Complex64::new(x * x * x, -x),
            0.0,
            2.0,
            1,
            QuadOptions::default(),
        )
        .unwrap();
        assert!((r.value - Complex64::new(4.0, -2.0)).norm() < 1e-14);
    }

    #[test]
    fn oscillatory_exponential() {
        // ∫_0^10 e^{ix} dx = -i (e^{10i} - 1)
        let r = integrate(
            |x| Complex64::new(0.0, x).exp(),
            0.0,
            10.0,
            2,
            QuadOptions::default(),
        )
        .unwrap();
        let exact = Complex64::new(0.0, -1.0) * (Complex64::new(0.0, 10.0).exp() - 1.0);
        assert!((r.value - exact).norm() < 1e-12);
    }

    #[test]
    fn endpoint_singularity_converges_adaptively() {
        // ∫_0^1 x^{-1/2} = 2
        let opts = QuadOptions {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            max_intervals: 4000,
        };
        let r = integrate(|x| Complex64::new(x.powf(-0.5), 0.0), 0.0, 1.0, 1, opts).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-8);
        assert!(r.intervals > 1);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let opts = QuadOptions {
            abs_tol: 0.0,
            rel_tol: 0.0,
            max_intervals: 8,
        };
        let r = integrate(|x| Complex64::new(x.sin(), 0.0), 0.0, 100.0, 1, opts);
        assert!(matches!(r, Err(MellinError::Quadrature { .. })));
    }
}
