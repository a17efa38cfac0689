//! Truncated Laurent series at infinity.
//!
//! Two shapes are used. [`LaurentTail`] is the data of an exterior map
//! `γz + γ₀ + γ₁/z + … + γ_M/z^M`. [`GradedLaurent`] is a dense series
//! running from `z^top` down to `z^{-M}`; powers of a map live there
//! before [`split_parts`] separates the polynomial part from the
//! principal part.
//!
//! Truncation is silent: products drop every exponent below `-M`. The
//! nonnegative exponents of a product of factors with tops `t₁, t₂` stay
//! exact as long as the inputs are exact down to `-t₂` and `-t₁`, which is
//! why callers pick `M` at least twice the largest power they need.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Truncation depth used for powers up to `n_max`.
pub fn default_depth(n_max: usize) -> usize {
    2 * n_max + 16
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentTail {
    /// Coefficient of `z`.
    pub lead: Complex64,
    /// Coefficient of `z⁰`.
    pub c0: Complex64,
    /// Coefficients of `z⁻¹ … z⁻ᴹ`.
    pub tail: Vec<Complex64>,
}

impl LaurentTail {
    pub fn new(lead: Complex64, c0: Complex64, tail: Vec<Complex64>) -> Self {
        LaurentTail { lead, c0, tail }
    }

    pub fn depth(&self) -> usize {
        self.tail.len()
    }

    /// Same series zero-padded or cut to exactly `depth` tail terms.
    pub fn with_depth(&self, depth: usize) -> LaurentTail {
        let mut tail = self.tail.clone();
        tail.resize(depth, ZERO);
        LaurentTail { tail, ..self.clone() }
    }

    pub fn scaled(&self, s: f64) -> LaurentTail {
        LaurentTail {
            lead: self.lead * s,
            c0: self.c0 * s,
            tail: self.tail.iter().map(|c| c * s).collect(),
        }
    }

    pub fn to_graded(&self) -> GradedLaurent {
        let mut coeffs = Vec::with_capacity(self.tail.len() + 2);
        coeffs.push(self.lead);
        coeffs.push(self.c0);
        coeffs.extend_from_slice(&self.tail);
        GradedLaurent {
            top: 1,
            depth: self.tail.len(),
            coeffs,
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let u = z.inv();
        let mut acc = ZERO;
        for c in self.tail.iter().rev() {
            acc = (acc + c) * u;
        }
        self.lead * z + self.c0 + acc
    }

    pub fn derivative(&self, z: Complex64) -> Complex64 {
        // d/dz Σ γ_k z^{-k} = -Σ k γ_k z^{-k-1}
        let u = z.inv();
        let mut acc = ZERO;
        for (k, c) in self.tail.iter().enumerate().rev() {
            acc = (acc + c * (k as f64 + 1.0)) * u;
        }
        self.lead - acc * u
    }

    /// Re-expands a series in `u = αz + β` as a series in `z`.
    ///
    /// Uses `u^{-k} = (αz)^{-k} Σ_j C(-k, j) (β/(αz))^j`, which converges for
    /// `|z| > |β/α|`. Terms below `z^{-depth}` are dropped.
    pub fn compose_affine(&self, alpha: f64, beta: f64, depth: usize) -> LaurentTail {
        let lead = self.lead * alpha;
        let c0 = self.lead * beta + self.c0;
        let mut tail = vec![ZERO; depth];
        let ratio = beta / alpha;
        for (idx, gk) in self.tail.iter().enumerate() {
            let k = idx + 1;
            if k > depth || *gk == ZERO {
                continue;
            }
            // C(-k, j) ratio^j, built incrementally.
            let mut binom = 1.0;
            let mut scale = alpha.powi(-(k as i32));
            for j in 0..=(depth - k) {
                if j > 0 {
                    binom *= -((k + j - 1) as f64) / j as f64;
                    scale *= ratio;
                }
                tail[k + j - 1] += gk * (binom * scale);
            }
        }
        LaurentTail { lead, c0, tail }
    }
}

/// Dense Laurent series `Σ_{k=-M}^{top} c_k z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLaurent {
    top: usize,
    depth: usize,
    /// `coeffs[i]` multiplies `z^{top - i}`.
    coeffs: Vec<Complex64>,
}

impl GradedLaurent {
    /// Builds a series from coefficients ordered from `z^top` downwards.
    /// The list is zero-padded or cut to reach `z^{-depth}`.
    pub fn new(top: usize, depth: usize, mut coeffs: Vec<Complex64>) -> Self {
        coeffs.resize(top + depth + 1, ZERO);
        GradedLaurent { top, depth, coeffs }
    }

    pub fn constant(c: Complex64) -> Self {
        GradedLaurent::new(0, 0, vec![c])
    }

    pub fn monomial(power: usize, c: Complex64) -> Self {
        let mut coeffs = vec![ZERO; power + 1];
        coeffs[0] = c;
        GradedLaurent::new(power, 0, coeffs)
    }

    /// Reassembles a series from the two halves produced by [`split_parts`].
    pub fn from_parts(poly: &[Complex64], principal: &[Complex64]) -> Self {
        let top = poly.len().saturating_sub(1);
        let mut coeffs: Vec<Complex64> = poly.iter().rev().copied().collect();
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        coeffs.extend_from_slice(principal);
        GradedLaurent::new(top, principal.len(), coeffs)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Coefficient of `z^k`; zero outside the stored range.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let idx = self.top as i64 - k;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            ZERO
        } else {
            self.coeffs[idx as usize]
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let (poly, principal) = split_parts(self);
        let mut p = ZERO;
        for c in poly.iter().rev() {
            p = p * z + c;
        }
        let u = z.inv();
        let mut q = ZERO;
        for c in principal.iter().rev() {
            q = (q + c) * u;
        }
        p + q
    }
}

/// Cauchy product with every exponent below `-depth` discarded.
pub fn laurent_mul(a: &GradedLaurent, b: &GradedLaurent, depth: usize) -> GradedLaurent {
    let top = a.top + b.top;
    let len = top + depth + 1;
    let mut out = vec![ZERO; len];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if i >= len || *ca == ZERO {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate().take(len - i) {
            out[i + j] += ca * cb;
        }
    }
    GradedLaurent {
        top,
        depth,
        coeffs: out,
    }
}

/// `s^n` by repeated squaring, truncating after every product.
pub fn laurent_pow(s: &GradedLaurent, n: usize, depth: usize) -> GradedLaurent {
    let mut result = GradedLaurent::new(0, depth, vec![ONE]);
    let mut base = s.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            result = laurent_mul(&result, &base, depth);
        }
        k >>= 1;
        if k > 0 {
            base = laurent_mul(&base, &base, depth);
        }
    }
    result
}

/// Splits into `(poly, principal)`: `poly[k]` multiplies `z^k` for
/// `0 <= k <= top`, `principal[k-1]` multiplies `z^{-k}`.
pub fn split_parts(s: &GradedLaurent) -> (Vec<Complex64>, Vec<Complex64>) {
    let poly = s.coeffs[..=s.top].iter().rev().copied().collect();
    let principal = s.coeffs[s.top + 1..].to_vec();
    (poly, principal)
}
