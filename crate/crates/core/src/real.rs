//! Scalar kinds used by the recurrences, the eigenvalue bisection and the
//! exact identity suites.
//!
//! [`Field`] is the minimum needed to evaluate the rational closed forms; it is
//! implemented by `f64`, [`Ext`] and `BigRational`. [`Real`] adds the
//! operations the bisection and the dense solvers need.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub trait Field:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// Nearest `f64`, for diagnostics and domain messages.
    fn approx(&self) -> f64;

    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn one() -> Self {
        Self::from_i64(1)
    }

    fn frac(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

pub trait Real: Field + Send + Sync {
    /// Significand bits of the working precision.
    const BITS: u32;

    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn sqrt(&self) -> Self;

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Unit roundoff of the working precision.
    fn epsilon() -> Self;

    /// A positive value far below any quantity the algorithms produce; used as
    /// the pivot-breakdown replacement.
    fn tiny() -> Self;

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Field for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn approx(&self) -> f64 {
        *self
    }
}

impl Real for f64 {
    const BITS: u32 = f64::MANTISSA_DIGITS;

    fn from_f64(v: f64) -> Self {
        v
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn epsilon() -> Self {
        f64::EPSILON / 2.0
    }

    fn tiny() -> Self {
        f64::MIN_POSITIVE
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
}

type Big = FBig<HalfEven, 2>;

/// Binary floating point with a 128-bit significand.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Ext(Big);

impl Ext {
    pub const PRECISION: usize = 128;

    fn wrap(v: Big) -> Self {
        Ext(v.with_precision(Self::PRECISION).value())
    }
}

impl fmt::Debug for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ext({:e})", self.to_f64())
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // dashu prints binary floats in base 2; convert for humans.
        let decimal = self.0.clone().with_base::<10>().value();
        write!(f, "{decimal}")
    }
}

impl FromStr for Ext {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let dec = FBig::<HalfEven, 10>::from_str(s).map_err(|e| e.to_string())?;
        let bin: Big = dec
            .with_precision(60)
            .value()
            .with_base::<2>()
            .value();
        Ok(Ext::wrap(bin))
    }
}

macro_rules! ext_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Ext {
            type Output = Ext;
            fn $method(self, rhs: Ext) -> Ext {
                Ext(self.0 $op rhs.0)
            }
        }
    };
}

ext_binop!(Add, add, +);
ext_binop!(Sub, sub, -);
ext_binop!(Mul, mul, *);
ext_binop!(Div, div, /);

impl Neg for Ext {
    type Output = Ext;
    fn neg(self) -> Ext {
        Ext(-self.0)
    }
}

impl Field for Ext {
    fn from_i64(v: i64) -> Self {
        Ext::wrap(Big::from(v))
    }

    fn approx(&self) -> f64 {
        self.to_f64()
    }
}

impl Real for Ext {
    const BITS: u32 = Ext::PRECISION as u32;

    fn from_f64(v: f64) -> Self {
        Ext::wrap(Big::try_from(v).expect("finite f64"))
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    fn sqrt(&self) -> Self {
        Ext(self.0.sqrt())
    }

    fn epsilon() -> Self {
        Ext::wrap(Big::from_parts(1.into(), -(Self::BITS as isize)))
    }

    fn tiny() -> Self {
        Ext::wrap(Big::from_parts(1.into(), -4000))
    }
}

/// Working precision of a numeric routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Precision {
    Double,
    Extended,
    /// Extended near the λ = −1/2 edge or for large degrees, double otherwise.
    Auto,
}

impl Precision {
    /// Resolves `Auto` for a given instance; the result is never `Auto`.
    pub fn resolve(self, n: usize, lambda: f64) -> Precision {
        match self {
            Precision::Auto if lambda + 0.5 < 1e-6 || n > 200 => Precision::Extended,
            Precision::Auto => Precision::Double,
            p => p,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Precision::Double => "double",
            Precision::Extended => "extended",
            Precision::Auto => "auto",
        }
    }
}

impl FromStr for Precision {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "double" => Ok(Precision::Double),
            "extended" => Ok(Precision::Extended),
            "auto" => Ok(Precision::Auto),
            other => Err(format!("unknown precision `{other}` (expected double, extended or auto)")),
        }
    }
}
