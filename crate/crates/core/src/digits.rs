//! Digit sums and the unimodular terms built from them.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Non-negative integers accepted by the digit functions (`u32`, `u64`, `BigUint`, ...).
pub trait Natural: Integer + Clone + FromPrimitive + ToPrimitive {}

impl<N: Integer + Clone + FromPrimitive + ToPrimitive> Natural for N {}

fn check_base(p: u32) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidBase(p.into()))
    } else {
        Ok(())
    }
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum<N: Natural>(n: &N, p: u32) -> Result<u64> {
    check_base(p)?;
    let base = N::from_u32(p).ok_or(Error::InvalidBase(p.into()))?;
    let mut rest = n.clone();
    let mut sum = 0u64;
    while !rest.is_zero() {
        let (quot, digit) = rest.div_rem(&base);
        sum += digit.to_u64().expect("digit below base");
        rest = quot;
    }
    Ok(sum)
}

/// `s_p(n)` for machine integers, used on the hot paths.
pub(crate) fn digit_sum_u64(mut n: u64, p: u64) -> u64 {
    if p == 2 {
        return n.count_ones().into();
    }
    let mut sum = 0;
    while n > 0 {
        sum += n % p;
        n /= p;
    }
    sum
}

/// The Thue-Morse bit `s_2(n) mod 2`.
pub fn thue_morse<N: Natural>(n: &N) -> u8 {
    (digit_sum(n, 2).expect("base 2 is valid") % 2) as u8
}

/// An element `η_p^a η_q^b` of the group `Z_p × Z_q`, with `η_m = e^{2iπ/m}`.
///
/// For `p = 2` the first factor is the sign `(-1)^a`; for `q = 3` the second is a
/// power of `j = e^{2iπ/3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    a: u32,
    b: u32,
    p: u32,
    q: u32,
}

impl GroupElement {
    /// Builds `η_p^a η_q^b`, reducing the exponents.
    pub fn new(a: u64, b: u64, p: u32, q: u32) -> Result<Self> {
        check_base(p)?;
        check_base(q)?;
        Ok(Self::reduced(a, b, p, q))
    }

    pub(crate) fn reduced(a: u64, b: u64, p: u32, q: u32) -> Self {
        GroupElement {
            a: (a % u64::from(p)) as u32,
            b: (b % u64::from(q)) as u32,
            p,
            q,
        }
    }

    pub fn one(p: u32, q: u32) -> Result<Self> {
        Self::new(0, 0, p, q)
    }

    /// Exponent of `η_p`.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// Exponent of `η_q`.
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_one(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            a: (self.p - self.a) % self.p,
            b: (self.q - self.b) % self.q,
            ..*self
        }
    }

    /// Exchanges `η_q^b` with `η_q^{-b}` (for `q = 3`: `j ↔ j²`).
    pub fn conjugate_q(&self) -> Self {
        GroupElement {
            b: (self.q - self.b) % self.q,
            ..*self
        }
    }

    /// Product in the group; `None` when the moduli differ.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if self.p != other.p || self.q != other.q {
            return None;
        }
        Some(GroupElement {
            a: (self.a + other.a) % self.p,
            b: (self.b + other.b) % self.q,
            ..*self
        })
    }

    /// Position of the element in a row-major `p × q` table.
    pub fn index(&self) -> usize {
        self.a as usize * self.q as usize + self.b as usize
    }

    /// The complex number `e^{2iπ(a/p + b/q)}`.
    pub fn to_complex<T: Real>(&self) -> Complex<T> {
        let p = u64::from(self.p);
        let q = u64::from(self.q);
        let modulus = p * q;
        let numer = (u64::from(self.a) * q + u64::from(self.b) * p) % modulus;
        match (numer * 4) % modulus {
            // quarter turns are exact
            0 => {
                let quarter = numer * 4 / modulus;
                match quarter {
                    0 => Complex::new(T::one(), T::zero()),
                    1 => Complex::new(T::zero(), T::one()),
                    2 => Complex::new(-T::one(), T::zero()),
                    _ => Complex::new(T::zero(), -T::one()),
                }
            }
            _ => {
                let angle = T::TAU() * T::from_u64(numer).unwrap() / T::from_u64(modulus).unwrap();
                Complex::new(angle.cos(), angle.sin())
            }
        }
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.checked_mul(&rhs)
            .expect("group elements with different moduli")
    }
}

/// `1`, `-j`, `j^2` for `(p, q) = (2, 3)`; `-z^3` style for other `q` with `p = 2`;
/// `(a,b)` otherwise.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p != 2 {
            return write!(f, "({},{})", self.a, self.b);
        }
        if self.a == 1 {
            f.write_str("-")?;
        }
        let root = if self.q == 3 { "j" } else { "z" };
        match self.b {
            0 => f.write_str("1"),
            1 => f.write_str(root),
            b => write!(f, "{root}^{b}"),
        }
    }
}

/// The term `η_p^{s_p(n)} η_q^n`.
pub fn u_term<N: Natural>(n: &N, p: u32, q: u32) -> Result<GroupElement> {
    check_base(q)?;
    let a = digit_sum(n, p)?;
    let b = n
        .mod_floor(&N::from_u32(q).expect("small modulus"))
        .to_u64()
        .expect("residue below q");
    Ok(GroupElement::reduced(a, b, p, q))
}

pub(crate) fn u_term_u64(n: u64, p: u32, q: u32) -> GroupElement {
    GroupElement::reduced(digit_sum_u64(n, p.into()), n, p, q)
}

/// Euler's totient; `euler_phi(0)` is taken as 0.
pub fn euler_phi(q: u64) -> u64 {
    let mut rest = q;
    let mut phi = q;
    let mut f = 2;
    while f * f <= rest {
        if rest.is_multiple_of(f) {
            while rest.is_multiple_of(f) {
                rest /= f;
            }
            phi -= phi / f;
        }
        f += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// Least `L ≥ 1` with `p^L ≡ 1 (mod q)`, or `None` when `gcd(p, q) ≠ 1`.
pub fn mult_order(p: u64, q: u64) -> Option<u64> {
    if q < 2 || p.gcd(&q) != 1 {
        return None;
    }
    let p = u128::from(p % q);
    let q128 = u128::from(q);
    let mut power = p;
    let mut order = 1;
    while power != 1 {
        power = power * p % q128;
        order += 1;
    }
    Some(order)
}
