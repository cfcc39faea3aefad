//! Small prime fields used by the brute-force oracle.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Inv, One, Zero};

use crate::error::{Error, Result};

/// A finite field small enough to enumerate.
pub trait FiniteField:
    Copy
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Inv<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Number of elements.
    const ORDER: u32;

    fn from_u32(v: u32) -> Self;

    fn to_u32(self) -> u32;

    /// The elements in the order `0, 1, ..., ORDER - 1`.
    fn elements() -> impl Iterator<Item = Self> {
        (0..Self::ORDER).map(Self::from_u32)
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "Fp requires a prime modulus");

    pub fn new(v: u32) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        Fp(v % P)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Inv for Fp<P> {
    type Output = Self;

    /// Panics on zero.
    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        // Fermat: a^(P-2)
        let mut acc = 1u32;
        let mut base = self.0;
        let mut e = P - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> FiniteField for Fp<P> {
    const ORDER: u32 = P;

    fn from_u32(v: u32) -> Self {
        Fp::new(v)
    }

    fn to_u32(self) -> u32 {
        self.0
    }
}

/// Runtime choice of the oracle's prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldParam {
    p: u32,
}

impl FieldParam {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) && p <= 7 {
            Ok(FieldParam { p })
        } else {
            Err(Error::InvalidField { p })
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Default for FieldParam {
    fn default() -> Self {
        FieldParam { p: 2 }
    }
}

/// Runs `$body` with the type alias `$F` bound to the field selected by a
/// [`FieldParam`].
#[macro_export]
macro_rules! with_field {
    ($param:expr, $F:ident => $body:expr) => {
        match $param.p() {
            2 => {
                type $F = $crate::Gf2;
                $body
            }
            3 => {
                type $F = $crate::Gf3;
                $body
            }
            5 => {
                type $F = $crate::Gf5;
                $body
            }
            7 => {
                type $F = $crate::Gf7;
                $body
            }
            p => unreachable!("FieldParam admits only 2, 3, 5, 7; got {p}"),
        }
    };
}
