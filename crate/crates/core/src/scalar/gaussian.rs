use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use super::Rational;

/// `re + im·ι` with exact rational parts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub const ZERO: GaussianRational = GaussianRational {
        re: Rational::ZERO,
        im: Rational::ZERO,
    };
    pub const ONE: GaussianRational = GaussianRational {
        re: Rational::ONE,
        im: Rational::ZERO,
    };
    /// The imaginary unit ι.
    pub const I: GaussianRational = GaussianRational {
        re: Rational::ZERO,
        im: Rational::ONE,
    };

    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::ZERO,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::real(Rational::new(p as i128, q as i128))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        self.re * self.re + self.im * self.im
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "reciprocal of zero");
        GaussianRational {
            re: self.re / n,
            im: -self.im / n,
        }
    }

    pub fn scale(&self, r: Rational) -> Self {
        GaussianRational {
            re: self.re * r,
            im: self.im * r,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::ONE, |acc, _| acc * *self)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // Real-only operands dominate; skip the cross terms when possible.
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(self.re * rhs.re);
        }
        GaussianRational {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", self.im)
                }
            }
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({}-{}i)", self.re, -self.im)
                } else {
                    write!(f, "({}+{}i)", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
