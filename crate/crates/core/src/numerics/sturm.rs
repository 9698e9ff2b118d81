//! Exact real-root isolation by Sturm sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{QPoly, Rational};
use crate::error::{MellinError, Result};

/// Monic greatest common divisor over ℚ. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.monic(), b.monic());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r.monic();
    }
    x.monic()
}

/// `p / gcd(p, p')`, monic. Same roots as `p`, all simple.
pub fn squarefree_part(p: &QPoly) -> QPoly {
    if p.degree().unwrap_or(0) == 0 {
        return p.monic();
    }
    let g = poly_gcd(p, &p.derivative());
    p.div_rem(&g).0.monic()
}

/// Integer coefficients with the same signs as a positive multiple of `p`.
fn primitive_integer(p: &QPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Sign of `p(x)` for an integer polynomial and rational `x = a/b`, via the
/// homogenised form `Σ c_k a^k b^{d-k}` (same sign since `b > 0`).
fn sign_at(p: &[BigInt], x: &Rational) -> i8 {
    let Some(d) = p.len().checked_sub(1) else {
        return 0;
    };
    let (a, b) = (x.numer(), x.denom());
    let mut b_pow = BigInt::one();
    let mut acc = p[d].clone();
    for k in (0..d).rev() {
        b_pow *= b;
        acc = acc * a + &p[k] * &b_pow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// A rational polynomial stored as `scale · (integer polynomial)`, so that
/// signs and values at rational points need only integer arithmetic.
#[derive(Clone, Debug)]
pub struct SignEvaluator {
    coeffs: Vec<BigInt>,
    scale: Rational,
}

impl SignEvaluator {
    pub fn new(p: &QPoly) -> Self {
        let coeffs = primitive_integer(p);
        let scale = match (p.coeffs().last(), coeffs.last()) {
            (Some(c), Some(k)) if !k.is_zero() => c / Rational::from_integer(k.clone()),
            _ => Rational::one(),
        };
        SignEvaluator { coeffs, scale }
    }

    /// Sign of `p(x)`; may differ from the sign of the primitive part only
    /// through the positive-or-negative `scale`.
    pub fn sign(&self, x: &Rational) -> i8 {
        let s = sign_at(&self.coeffs, x);
        if self.scale.is_negative() {
            -s
        } else {
            s
        }
    }

    /// `p(x)` exactly, with a single normalisation at the end.
    pub fn value(&self, x: &Rational) -> Rational {
        let Some(d) = self.coeffs.len().checked_sub(1) else {
            return Rational::zero();
        };
        let (a, b) = (x.numer(), x.denom());
        let mut b_pow = BigInt::one();
        let mut acc = self.coeffs[d].clone();
        for k in (0..d).rev() {
            b_pow *= b;
            acc = acc * a + &self.coeffs[k] * &b_pow;
        }
        &self.scale * Rational::new(acc, b_pow)
    }
}

/// Half-open isolating interval `(lo, hi]` containing exactly one distinct
/// real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "crate::serde_rational::serialize")]
    pub lo: Rational,
    #[serde(serialize_with = "crate::serde_rational::serialize")]
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }
}

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    squarefree: QPoly,
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(MellinError::ZeroPolynomial);
        }
        let squarefree = squarefree_part(p);
        let mut rational = vec![squarefree.clone()];
        if squarefree.degree().unwrap_or(0) > 0 {
            rational.push(squarefree.derivative());
            loop {
                let n = rational.len();
                let (_, r) = rational[n - 2].div_rem(&rational[n - 1]);
                if r.is_zero() {
                    break;
                }
                // Positive rescaling keeps the sign pattern and the size down.
                let r = -&r;
                let ints = primitive_integer(&r);
                rational.push(QPoly::new(
                    ints.into_iter().map(Rational::from_integer).collect(),
                ));
            }
        }
        let chain = rational.iter().map(primitive_integer).collect();
        Ok(SturmChain { squarefree, chain })
    }

    pub fn squarefree(&self) -> &QPoly {
        &self.squarefree
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign changes in the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Strict bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let coeffs = self.squarefree.coeffs();
        let Some(lead) = coeffs.last() else {
            return Rational::one();
        };
        let max = coeffs[..coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }

    /// Disjoint isolating intervals for every distinct real root, ascending.
    pub fn isolate(&self) -> Vec<RootInterval> {
        let b = self.root_bound();
        let lo = -b.clone();
        let total = self.count(&lo, &b);
        let mut out = Vec::new();
        let mut stack = vec![(lo, b, total)];
        let two = Rational::from_integer(BigInt::from(2));
        while let Some((lo, hi, n)) = stack.pop() {
            match n {
                0 => {}
                1 => out.push(RootInterval {
                    lo,
                    hi,
                    multiplicity: 1,
                }),
                _ => {
                    let mid = (&lo + &hi) / &two;
                    let left = self.count(&lo, &mid);
                    stack.push((mid.clone(), hi, n - left));
                    stack.push((lo, mid, left));
                }
            }
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// Bisect an isolating interval until its width is at most `width`.
    pub fn refine(&self, iv: &RootInterval, width: &Rational) -> RootInterval {
        let mut out = iv.clone();
        while &out.width() > width {
            let mid = out.midpoint();
            if self.count(&out.lo, &mid) == 1 {
                out.hi = mid;
            } else {
                out.lo = mid;
            }
        }
        out
    }
}

/// Isolate the distinct real roots of `p` and report each multiplicity.
pub fn sturm_isolate(p: &QPoly) -> Result<Vec<RootInterval>> {
    let chain = SturmChain::new(p)?;
    let mut intervals = chain.isolate();
    // A root of multiplicity m survives in gcd(p, p'), gcd(g, g'), ... m-1 times.
    let mut g = poly_gcd(p, &p.derivative());
    while g.degree().unwrap_or(0) > 0 {
        let gc = SturmChain::new(&g)?;
        for iv in &mut intervals {
            if gc.count(&iv.lo, &iv.hi) > 0 {
                iv.multiplicity += 1;
            }
        }
        g = poly_gcd(&g, &g.derivative());
    }
    Ok(intervals)
}
