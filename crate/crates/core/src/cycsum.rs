//! Exact sums `Z(N, p, q) = Σ_{k<N} η_p^{s_p(k)} η_q^k`.
//!
//! Sums live in the integral group ring of `Z_p × Z_q`: a [`GroupRingVec`]
//! counts how many terms equal each `η_p^a η_q^b`. No reduction modulo a
//! cyclotomic polynomial is applied, so two vectors with the same complex value
//! may compare unequal.
//!
//! With a block `P = p^L ≡ 1 (mod q)` the summand is multiplicative across
//! base-`P` blocks, which gives
//!
//! ```text
//! Z(P·m + r) = Z(P)·Z(m) + u(m)·Z(r),   0 ≤ r < P
//! ```
//!
//! and an evaluation in `O(log_P N)` group-ring products ([`FastSum`]).

use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::digits::{euler_phi, mult_order, u_term_u64, GroupElement};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Integer combination `Σ c[a,b] η_p^a η_q^b`, stored row-major in `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingVec {
    p: u32,
    q: u32,
    coeffs: Vec<BigInt>,
}

impl GroupRingVec {
    pub fn zero(p: u32, q: u32) -> Self {
        GroupRingVec {
            p,
            q,
            coeffs: vec![BigInt::zero(); (p * q) as usize],
        }
    }

    pub fn unit(g: GroupElement) -> Self {
        let mut v = Self::zero(g.p(), g.q());
        v.coeffs[g.index()] = BigInt::from(1);
        v
    }

    /// Builds a vector from per-element term counts.
    pub fn from_counts(p: u32, q: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), (p * q) as usize, "count table shape");
        GroupRingVec {
            p,
            q,
            coeffs: counts.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn get(&self, a: u32, b: u32) -> &BigInt {
        &self.coeffs[(a * self.q + b) as usize]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Σ |c[a,b]|`.
    pub fn abs_mass(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    fn assert_same_group(&self, other: &Self) {
        assert!(
            self.p == other.p && self.q == other.q,
            "group ring vectors over different groups"
        );
    }

    /// Multiplication by a single group element (a permutation of coefficients).
    pub fn shifted(&self, g: &GroupElement) -> Self {
        assert!(
            g.p() == self.p && g.q() == self.q,
            "element from another group"
        );
        let (p, q) = (self.p as usize, self.q as usize);
        let (ga, gb) = (g.a() as usize, g.b() as usize);
        let mut out = vec![BigInt::zero(); p * q];
        for a in 0..p {
            for b in 0..q {
                out[((a + ga) % p) * q + (b + gb) % q] = self.coeffs[a * q + b].clone();
            }
        }
        GroupRingVec {
            p: self.p,
            q: self.q,
            coeffs: out,
        }
    }

    /// `self^n` as a group-ring power; `x^0` is the identity element.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::unit(GroupElement::reduced(0, 0, self.p, self.q));
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The complex value `Σ c[a,b] e^{2iπ(a/p + b/q)}`.
    pub fn eval<T: Real>(&self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for a in 0..self.p {
            for b in 0..self.q {
                let c = &self.coeffs[(a * self.q + b) as usize];
                if c.is_zero() {
                    continue;
                }
                let weight = T::from_f64(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(T::nan);
                acc = acc
                    + GroupElement::reduced(a.into(), b.into(), self.p, self.q).to_complex::<T>()
                        * weight;
            }
        }
        acc
    }

    /// `{"p":…,"q":…,"coeffs":[[…],…]}`, one inner array per `a`.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"p\":{},\"q\":{},\"coeffs\":[", self.p, self.q);
        for (row_idx, row) in self.coeffs.chunks(self.q as usize).enumerate() {
            if row_idx > 0 {
                out.push(',');
            }
            out.push('[');
            for (i, c) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "{c}").expect("write to string");
            }
            out.push(']');
        }
        out.push_str("]}");
        out
    }
}

impl Add for &GroupRingVec {
    type Output = GroupRingVec;

    fn add(self, rhs: &GroupRingVec) -> GroupRingVec {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&GroupRingVec> for GroupRingVec {
    fn add_assign(&mut self, rhs: &GroupRingVec) {
        self.assert_same_group(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x += y;
        }
    }
}

impl Sub for &GroupRingVec {
    type Output = GroupRingVec;

    fn sub(self, rhs: &GroupRingVec) -> GroupRingVec {
        self.assert_same_group(rhs);
        GroupRingVec {
            p: self.p,
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
}

impl Neg for GroupRingVec {
    type Output = GroupRingVec;

    fn neg(mut self) -> GroupRingVec {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Convolution over `Z_p × Z_q`.
impl Mul for &GroupRingVec {
    type Output = GroupRingVec;

    fn mul(self, rhs: &GroupRingVec) -> GroupRingVec {
        self.assert_same_group(rhs);
        let (p, q) = (self.p as usize, self.q as usize);
        let mut out = vec![BigInt::zero(); p * q];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (a1, b1) = (i / q, i % q);
            for (k, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (a2, b2) = (k / q, k % q);
                out[((a1 + a2) % p) * q + (b1 + b2) % q] += x * y;
            }
        }
        GroupRingVec {
            p: self.p,
            q: self.q,
            coeffs: out,
        }
    }
}

fn check_params(p: u32, q: u32) -> Result<()> {
    for m in [p, q] {
        if m < 2 {
            return Err(Error::InvalidBase(m.into()));
        }
    }
    Ok(())
}

/// Running term counts of the sum, with incremental base-`p` digits.
struct TermCounter {
    p: u32,
    q: u32,
    digits: Vec<u32>,
    digit_sum: u64,
    residue: u32,
    counts: Vec<i64>,
}

impl TermCounter {
    fn new(p: u32, q: u32) -> Self {
        TermCounter {
            p,
            q,
            digits: Vec::new(),
            digit_sum: 0,
            residue: 0,
            counts: vec![0; (p * q) as usize],
        }
    }

    /// Adds the term of the current index and advances to the next one.
    fn push(&mut self) {
        let a = (self.digit_sum % u64::from(self.p)) as usize;
        self.counts[a * self.q as usize + self.residue as usize] += 1;
        self.residue = (self.residue + 1) % self.q;
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.digits.push(1);
                self.digit_sum += 1;
                break;
            }
            if self.digits[i] + 1 < self.p {
                self.digits[i] += 1;
                self.digit_sum += 1;
                break;
            }
            self.digit_sum -= u64::from(self.digits[i]);
            self.digits[i] = 0;
            i += 1;
        }
    }

    fn snapshot(&self) -> GroupRingVec {
        GroupRingVec::from_counts(self.p, self.q, &self.counts)
    }
}

/// `Z(N, p, q)` by direct summation of all `N` terms.
pub fn z_bruteforce(n: u64, p: u32, q: u32) -> Result<GroupRingVec> {
    check_params(p, q)?;
    let mut counter = TermCounter::new(p, q);
    for _ in 0..n {
        counter.push();
    }
    Ok(counter.snapshot())
}

/// How the block length of the fast recursion is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockChoice {
    /// `P = p^{φ(q)}`, which is `2^{φ(q)}` for `p = 2`.
    #[default]
    PaperQ,
    /// `P = p^L` with `L` the multiplicative order of `p` mod `q`.
    OrderQ,
}

/// The algorithm that produced a sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    Brute,
    Fast { block: u64 },
}

impl std::fmt::Display for SumMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SumMethod::Brute => f.write_str("brute"),
            SumMethod::Fast { block } => write!(f, "fast (block {block})"),
        }
    }
}

const MAX_BLOCK: u64 = 1 << 20;

/// Largest `N` the brute-force fallback accepts.
pub const MAX_BRUTE_N: u64 = 1_000_000_000;

fn block_length(p: u32, q: u32, choice: BlockChoice) -> Result<u64> {
    check_params(p, q)?;
    let gcd = u64::from(p).gcd(&u64::from(q));
    if gcd != 1 {
        return Err(Error::NotCoprime { p, q, gcd });
    }
    let exponent = match choice {
        BlockChoice::PaperQ => euler_phi(q.into()),
        BlockChoice::OrderQ => mult_order(p.into(), q.into()).expect("coprime"),
    };
    u64::from(p)
        .checked_pow(exponent.try_into().unwrap_or(u32::MAX))
        .filter(|&b| b <= MAX_BLOCK)
        .ok_or_else(|| Error::Resource(format!("block length {p}^{exponent}")))
}

/// Precomputed tables for the logarithmic evaluation of `Z(N, p, q)`.
#[derive(Debug, Clone)]
pub struct FastSum {
    p: u32,
    q: u32,
    block: u64,
    sigma: GroupRingVec,
    prefix: Vec<GroupRingVec>,
    terms: Vec<GroupElement>,
}

impl FastSum {
    /// Fails with [`Error::NotCoprime`] when `gcd(p, q) ≠ 1`.
    pub fn new(p: u32, q: u32, choice: BlockChoice) -> Result<Self> {
        let block = block_length(p, q, choice)?;
        let mut counter = TermCounter::new(p, q);
        let mut prefix = Vec::with_capacity(block as usize);
        for _ in 0..block {
            prefix.push(counter.snapshot());
            counter.push();
        }
        let terms = (0..block).map(|r| u_term_u64(r, p, q)).collect();
        Ok(FastSum {
            p,
            q,
            block,
            sigma: counter.snapshot(),
            prefix,
            terms,
        })
    }

    pub fn block(&self) -> u64 {
        self.block
    }

    /// `Z(P)` for the block length `P`.
    pub fn sigma(&self) -> &GroupRingVec {
        &self.sigma
    }

    pub fn eval(&self, n: &BigUint) -> GroupRingVec {
        // base-P digits, most significant first
        let digits = radix_digits_be(n, self.block);
        let mut acc = GroupRingVec::zero(self.p, self.q);
        let mut lead = GroupElement::reduced(0, 0, self.p, self.q);
        for d in digits {
            let tail = self.prefix[d].shifted(&lead);
            acc = &(&self.sigma * &acc) + &tail;
            lead = lead * self.terms[d];
        }
        acc
    }
}

/// Base-`radix` digits of `n`, most significant first (`[]` for zero).
fn radix_digits_be(n: &BigUint, radix: u64) -> Vec<usize> {
    let radix = BigUint::from(radix);
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (quot, digit) = rest.div_rem(&radix);
        digits.push(digit.to_usize().expect("digit below radix"));
        rest = quot;
    }
    digits.reverse();
    digits
}

/// `Z(N, p, q)` by the block recursion; falls back to brute force when
/// `gcd(p, q) ≠ 1`, reporting the method used.
pub fn z_fast(
    n: &BigUint,
    p: u32,
    q: u32,
    choice: BlockChoice,
) -> Result<(GroupRingVec, SumMethod)> {
    match FastSum::new(p, q, choice) {
        Ok(fast) => {
            let block = fast.block();
            Ok((fast.eval(n), SumMethod::Fast { block }))
        }
        Err(Error::NotCoprime { .. }) => {
            let small = n
                .to_u64()
                .filter(|&v| v <= MAX_BRUTE_N)
                .ok_or_else(|| Error::Resource(format!("brute-force sum of {n} terms")))?;
            Ok((z_bruteforce(small, p, q)?, SumMethod::Brute))
        }
        Err(e) => Err(e),
    }
}

/// Block length, block weights and the self-similarity factor `σ = Z(Q)`.
#[derive(Debug, Clone)]
pub struct CurveSpec<T: Real> {
    pub p: u32,
    pub q: u32,
    /// `Q = p^{φ(q)}`, i.e. `2^{φ(q)}` for `p = 2`.
    pub block: u64,
    pub sigma: GroupRingVec,
    pub sigma_complex: Complex<T>,
    /// `u_r` for `0 ≤ r < Q`.
    pub weights: Vec<GroupElement>,
}

impl<T: Real> CurveSpec<T> {
    /// The weights as complex numbers.
    pub fn weights_complex(&self) -> Vec<Complex<T>> {
        self.weights.iter().map(|w| w.to_complex()).collect()
    }
}

pub fn make_curve_spec<T: Real>(p: u32, q: u32) -> Result<CurveSpec<T>> {
    let block = block_length(p, q, BlockChoice::PaperQ)?;
    let sigma = z_bruteforce(block, p, q)?;
    Ok(CurveSpec {
        p,
        q,
        block,
        sigma_complex: sigma.eval(),
        sigma,
        weights: (0..block).map(|r| u_term_u64(r, p, q)).collect(),
    })
}

/// `Σ_{k<N} (-1)^{s_2(3k)}`.
pub fn coquet_sum(n: u64) -> i64 {
    (0..n)
        .map(|k| {
            let m = u128::from(k) * 3;
            if m.count_ones() % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum()
}
