//! Scalar abstraction for the analytic modules.
//!
//! The partition-function recursions, product-form sums and fairness formulas
//! are written once over [`Scalar`] and instantiated at `f64` for everyday use
//! and at [`num_rational::BigRational`] when bit-exact answers are wanted
//! (small state spaces, closed-form identities). Root finding and simulation
//! are inherently floating point and stay on `f64`.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, NumAssign, Signed, ToPrimitive};

pub trait Scalar:
    Num + NumAssign + Signed + Clone + PartialOrd + Debug + Display + 'static
{
    fn from_u64(v: u64) -> Self;

    /// Lossless conversion from a finite `f64` (every finite double is a
    /// dyadic rational). Returns `None` for NaN/infinite input.
    fn from_f64(x: f64) -> Option<Self>;

    fn from_biguint(v: &BigUint) -> Self;

    /// Possibly lossy readout, used for reports and CSV emission only.
    fn to_f64(&self) -> f64;

    /// Whether a running partition-function value has grown past the
    /// overflow guard and the recursion window should be rescaled.
    fn exceeds_overflow_guard(&self) -> bool {
        false
    }

    /// Multiplier (and its natural log) applied on rescale; `None` for
    /// exact types, which never overflow.
    fn overflow_rescale() -> Option<(Self, f64)> {
        None
    }

    /// Multiply by `exp(ln_shift)`. Exact types only ever see a zero shift
    /// (they never rescale), so the operation stays lossless there.
    fn apply_log_shift(self, ln_shift: f64) -> Self;
}

impl Scalar for f64 {
    fn from_u64(v: u64) -> Self {
        v as f64
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }

    fn from_biguint(v: &BigUint) -> Self {
        v.to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn exceeds_overflow_guard(&self) -> bool {
        self.abs() > 1e300
    }

    fn overflow_rescale() -> Option<(Self, f64)> {
        Some((1e-300, -690.775527898213705205397436405309513, /* ln 1e-300 */))
    }

    fn apply_log_shift(self, ln_shift: f64) -> Self {
        if ln_shift == 0.0 {
            self
        } else {
            self * ln_shift.exp()
        }
    }
}

impl Scalar for f32 {
    fn from_u64(v: u64) -> Self {
        v as f32
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x as f32)
    }

    fn from_biguint(v: &BigUint) -> Self {
        v.to_f32().unwrap_or(f32::INFINITY)
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }

    fn exceeds_overflow_guard(&self) -> bool {
        self.abs() > 1e30
    }

    fn overflow_rescale() -> Option<(Self, f64)> {
        Some((1e-30, -69.0775527898213705_f64))
    }

    fn apply_log_shift(self, ln_shift: f64) -> Self {
        if ln_shift == 0.0 {
            self
        } else {
            (f64::from(self) * ln_shift.exp()) as f32
        }
    }
}

impl Scalar for BigRational {
    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn from_biguint(v: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(v.clone()))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn apply_log_shift(self, ln_shift: f64) -> Self {
        assert_eq!(ln_shift, 0.0, "exact scalars never carry a log scale");
        self
    }
}

/// Convenience for building a scalar from a small ratio, e.g. `ratio(1, 3)`.
pub fn ratio<T: Scalar>(num: u64, den: u64) -> T {
    T::from_u64(num) / T::from_u64(den)
}

/// Compensated (Kahan) summation. For exact scalars the compensation term
/// stays zero, so the routine is valid generically.
pub fn kahan_sum<T: Scalar, I: IntoIterator<Item = T>>(items: I) -> T {
    let mut sum = T::zero();
    let mut c = T::zero();
    for x in items {
        let y = x - c.clone();
        let t = sum.clone() + y.clone();
        c = (t.clone() - sum) - y;
        sum = t;
    }
    sum
}

/// Sum in descending magnitude order with compensation; used where identical
/// multisets of weights must produce bit-identical floating-point sums
/// regardless of the order they were generated in.
pub fn sorted_kahan_sum<T: Scalar>(mut items: Vec<T>) -> T {
    items.sort_by(|a, b| {
        b.abs()
            .partial_cmp(&a.abs())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    kahan_sum(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_from_f64_is_exact() {
        let r = <BigRational as Scalar>::from_f64(0.375).unwrap();
        assert_eq!(r, ratio::<BigRational>(3, 8));
    }

    #[test]
    fn f64_guard_and_shift() {
        assert!(!1e299_f64.exceeds_overflow_guard());
        assert!(1e301_f64.exceeds_overflow_guard());
        let (m, ln_m) = <f64 as Scalar>::overflow_rescale().unwrap();
        assert!((m.ln() - ln_m).abs() < 1e-12);
        let x = 2.0_f64.apply_log_shift(ln_m).apply_log_shift(-ln_m);
        assert!((x - 2.0).abs() < 1e-12);
    }

    #[test]
    fn kahan_matches_exact_on_rationals() {
        let xs: Vec<BigRational> = (1..=20).map(|k| ratio(1, k)).collect();
        let direct: BigRational = xs.iter().cloned().fold(BigRational::from_u64(0), |a, b| a + b);
        assert_eq!(kahan_sum(xs), direct);
    }
}
