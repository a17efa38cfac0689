//! Double-double ("twofold") floating point.
//!
//! A value is the unevaluated sum `hi + lo` of two `f64`s with
//! `|lo| <= ulp(hi) / 2`, giving roughly 106 bits of significand. The
//! library stores every coefficient as a plain `f64`; this type only
//! carries intermediate results where cancellation would otherwise eat
//! the leading digits (Horner evaluation of Faber polynomials, contour
//! sums whose terms are `r^n` times larger than the result).
//!
//! Algorithms follow the classic error-free transformations of Dekker
//! and Knuth; products use a fused multiply-add for the rounding error.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{
    Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign,
};

use num_complex::{Complex, Complex64};
use num_traits::{Num, One, Zero};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub type CDd = Complex<Dd>;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn mul_f64(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = self.hi.sqrt();
        let sq = Dd::mul_f64(x, x);
        let r = self - sq;
        let (hi, lo) = quick_two_sum(x, r.hi / (2.0 * x));
        Dd { hi, lo }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}{:+e}", self.hi, self.lo)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::new(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::new(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        let q = (self / b).to_f64().trunc();
        self - b * Dd::new(q)
    }
}

impl AddAssign for Dd {
    #[inline]
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    #[inline]
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    #[inline]
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

impl DivAssign for Dd {
    fn div_assign(&mut self, b: Dd) {
        *self = *self / b;
    }
}

impl RemAssign for Dd {
    fn rem_assign(&mut self, b: Dd) {
        *self = *self % b;
    }
}

impl Zero for Dd {
    fn zero() -> Dd {
        Dd::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for Dd {
    fn one() -> Dd {
        Dd::ONE
    }
}

impl Num for Dd {
    type FromStrRadixErr = <f64 as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Dd, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(Dd::new)
    }
}

#[inline]
pub fn cdd(z: Complex64) -> CDd {
    Complex::new(Dd::new(z.re), Dd::new(z.im))
}

#[inline]
pub fn to_c64(z: CDd) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

#[inline]
pub fn cscale(z: CDd, s: f64) -> CDd {
    let s = Dd::new(s);
    Complex::new(z.re * s, z.im * s)
}

/// Modulus rounded to `f64`; enough wherever only the size matters.
#[inline]
pub fn cabs(z: CDd) -> f64 {
    z.norm_sqr().sqrt().to_f64()
}

/// Exact complex product of two `f64` complex numbers.
#[inline]
pub fn cmul_exact(a: Complex64, b: Complex64) -> CDd {
    let re = Dd::mul_f64(a.re, b.re) - Dd::mul_f64(a.im, b.im);
    let im = Dd::mul_f64(a.re, b.im) + Dd::mul_f64(a.im, b.re);
    Complex::new(re, im)
}

/// `π/2` as a double-double.
pub const FRAC_PI_2: Dd = Dd {
    hi: std::f64::consts::FRAC_PI_2,
    lo: 6.123_233_995_736_766e-17,
};

/// `(cos t, sin t)` for `0 <= t <= π/2` by Taylor series.
fn cos_sin_dd(t: Dd) -> (Dd, Dd) {
    let mut term = Dd::ONE;
    let mut c = Dd::ONE;
    let mut s = Dd::ZERO;
    let mut k = 1.0;
    loop {
        // term = t^k / k!
        term = term * t / Dd::new(k);
        if k as usize % 2 == 1 {
            if (k as usize / 2).is_multiple_of(2) {
                s += term;
            } else {
                s -= term;
            }
        } else if (k as usize / 2).is_multiple_of(2) {
            c += term;
        } else {
            c -= term;
        }
        if term.hi.abs() < 1e-34 {
            break;
        }
        k += 1.0;
    }
    (c, s)
}

/// `e^{2πi j/m}` to double-double accuracy.
///
/// The angle is reduced to a quadrant with integer arithmetic, so the
/// symmetric nodes are exact and the rest come from a series in `[0, π/2)`.
pub fn root_of_unity(j: usize, m: usize) -> CDd {
    let j = j % m;
    let q = 4 * j / m;
    let rem = 4 * j - q * m;
    let (c, s) = if rem == 0 {
        (Dd::ONE, Dd::ZERO)
    } else {
        cos_sin_dd(FRAC_PI_2 * Dd::new(rem as f64) / Dd::new(m as f64))
    };
    match q {
        0 => Complex::new(c, s),
        1 => Complex::new(-s, c),
        2 => Complex::new(-c, -s),
        _ => Complex::new(s, -c),
    }
}

/// Horner evaluation of `Σ c_k z^k` carried out in double-double.
pub fn horner(coeffs: &[Complex64], z: CDd) -> CDd {
    let mut acc: CDd = Complex::new(Dd::ZERO, Dd::ZERO);
    for c in coeffs.iter().rev() {
        acc = acc * z + cdd(*c);
    }
    acc
}

/// Horner evaluation with double-double coefficients.
pub fn horner_dd(coeffs: &[CDd], z: CDd) -> CDd {
    let mut acc: CDd = Complex::new(Dd::ZERO, Dd::ZERO);
    for c in coeffs.iter().rev() {
        acc = acc * z + *c;
    }
    acc
}
