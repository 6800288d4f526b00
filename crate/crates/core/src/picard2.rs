//! The numeric core of the Picard-number-two case, in exact arithmetic.
//!
//! Inputs are `nu_1 = K_1.Gamma_2`, `nu_2 = K_2.Gamma_1`, `mu_1 = H_1.Gamma_2`,
//! `mu_2 = H_2.Gamma_1` and `m` with `dim X = m + 1`. The substitution
//! `K^2 = Delta H^2` (modulo numerical equivalence) is taken as given.
//!
//! Every check involving `4 cos^2(pi/k)` goes through [`four_cos_sq_pi_over`],
//! which decides integrality with an integer Chebyshev recurrence.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::cartan::{catalog, CartanMatrix, Family};
use crate::linalg::{rat, rat_frac, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Picard2Error {
    #[error("m = {0} is not an admissible degree (must be 2, 3 or 5)")]
    InadmissibleDegree(u32),
    #[error("nu = 0: no negative discriminant is forced")]
    ZeroNu,
    #[error("mu must be at least 1")]
    ZeroMu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rank2Data {
    pub nu1: u32,
    pub nu2: u32,
    pub mu1: u32,
    pub mu2: u32,
    pub m: u32,
}

/// `re + i sqrt(im_sq)` with `im_sq >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactComplex {
    pub re: Rational,
    pub im_sq: Rational,
}

impl ExactComplex {
    pub fn new(re: Rational, im_sq: Rational) -> Option<Self> {
        (!im_sq.is_negative()).then_some(Self { re, im_sq })
    }
}

/// `A = [[-nu1/2, (4 - nu1 nu2)/(2 mu2)], [mu1/2, mu1 nu2/(2 mu2)]]`.
pub fn basechange_matrix(d: &Rank2Data) -> Result<[[Rational; 2]; 2], Picard2Error> {
    if d.mu2 == 0 {
        return Err(Picard2Error::ZeroMu);
    }
    let (nu1, nu2, mu1, mu2) = (
        i64::from(d.nu1),
        i64::from(d.nu2),
        i64::from(d.mu1),
        i64::from(d.mu2),
    );
    Ok([
        [rat_frac(-nu1, 2), rat_frac(4 - nu1 * nu2, 2 * mu2)],
        [rat_frac(mu1, 2), rat_frac(mu1 * nu2, 2 * mu2)],
    ])
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Whether `Im(z^p) = 0`.
///
/// With `z = a + ib`, `Im(z^p) = b Q(a, b^2)` where
/// `Q = sum_{k odd} C(p,k) (-1)^((k-1)/2) a^(p-k) (b^2)^((k-1)/2)`; the
/// factor `b` only matters when it vanishes.
pub fn im_power_vanishes(z: &ExactComplex, p: u32) -> bool {
    if z.im_sq.is_zero() {
        return true;
    }
    let mut q = Rational::zero();
    for k in (1..=p).step_by(2) {
        let sign = if (k - 1) / 2 % 2 == 0 { 1 } else { -1 };
        let term = Rational::from_integer(binomial(p, k) * sign)
            * Pow::pow(&z.re, p - k)
            * Pow::pow(&z.im_sq, (k - 1) / 2);
        q += term;
    }
    q.is_zero()
}

/// Chebyshev values `C_j(y) = 2 cos(j t)` for `y = 2 cos t`:
/// `C_0 = 2`, `C_1 = y`, `C_{j+1} = y C_j - C_{j-1}`.
fn first_return_to_two(y: i64, limit: u32) -> Option<u32> {
    let (mut prev, mut cur) = (2i64, y);
    for j in 1..=limit {
        if cur == 2 {
            return Some(j);
        }
        let next = y * cur - prev;
        prev = cur;
        cur = next;
    }
    None
}

/// `4 cos^2(pi/k)` when it is an integer, `None` otherwise.
///
/// `4 cos^2(pi/k) = 2 + y` with `y = 2 cos(2 pi/k)`. An integer candidate
/// `y ∈ {-2..=2}` equals `2 cos(2 pi/k)` exactly when the recurrence first
/// returns to 2 at `j = k`.
pub fn four_cos_sq_pi_over(k: u32) -> Option<u32> {
    if k == 0 {
        return None;
    }
    (-2i64..=2)
        .find(|&y| first_return_to_two(y, k) == Some(k))
        .map(|y| (y + 2) as u32)
}

pub const DEFAULT_DEGREE_SCAN: u32 = 50;

/// Degrees `m` in `1..=scan` for which `4 cos^2(pi/(m+1)) ∈ {1, 2, 3}`.
pub fn admissible_degrees_up_to(scan: u32) -> BTreeSet<u32> {
    (1..=scan)
        .filter(|&m| matches!(four_cos_sq_pi_over(m + 1), Some(1..=3)))
        .collect()
}

pub fn admissible_degrees() -> BTreeSet<u32> {
    admissible_degrees_up_to(DEFAULT_DEGREE_SCAN)
}

fn cos_value(m: u32) -> Result<u32, Picard2Error> {
    match four_cos_sq_pi_over(m + 1) {
        Some(c @ 1..=3) => Ok(c),
        _ => Err(Picard2Error::InadmissibleDegree(m)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank2Type {
    A1xA1,
    A2,
    B2,
    G2,
}

impl Rank2Type {
    pub fn name(self) -> &'static str {
        match self {
            Rank2Type::A1xA1 => "A1xA1",
            Rank2Type::A2 => "A2",
            Rank2Type::B2 => "B2",
            Rank2Type::G2 => "G2",
        }
    }

    pub fn cartan_matrix(self) -> CartanMatrix {
        match self {
            Rank2Type::A1xA1 => {
                CartanMatrix::new(&[alloc::vec![2, 0], alloc::vec![0, 2]]).expect("valid matrix")
            }
            Rank2Type::A2 => catalog(Family::A, 2).expect("legal type"),
            Rank2Type::B2 => catalog(Family::B, 2).expect("legal type"),
            Rank2Type::G2 => catalog(Family::G, 2).expect("legal type"),
        }
    }

    /// `m` with `dim X = m + 1`; `None` for the product of lines.
    pub fn degree(self) -> Option<u32> {
        match self {
            Rank2Type::A1xA1 => None,
            Rank2Type::A2 => Some(2),
            Rank2Type::B2 => Some(3),
            Rank2Type::G2 => Some(5),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    /// `nu1 nu2 >= 4`: no `m` with `4 cos^2(pi/(m+1)) = nu1 nu2`.
    ProductTooLarge(u64),
    /// Product in `{1, 2, 3}` but neither factor is 1.
    NoUnitFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank2Class {
    Type(Rank2Type),
    Invalid(InvalidReason),
}

pub fn classify_rank2(nu1: u32, nu2: u32) -> Rank2Class {
    let product = u64::from(nu1) * u64::from(nu2);
    if product == 0 {
        return Rank2Class::Type(Rank2Type::A1xA1);
    }
    if product >= 4 {
        return Rank2Class::Invalid(InvalidReason::ProductTooLarge(product));
    }
    if nu1 != 1 && nu2 != 1 {
        return Rank2Class::Invalid(InvalidReason::NoUnitFactor);
    }
    Rank2Class::Type(match product {
        1 => Rank2Type::A2,
        2 => Rank2Type::B2,
        _ => Rank2Type::G2,
    })
}

/// `(nu1 nu2 / 4)^(m-1) = (c / 4)^(m-1)` with `c = 4 cos^2(pi/(m+1))`.
pub fn verify_cos_identity(m: u32, d: &Rank2Data) -> Result<bool, Picard2Error> {
    let c = cos_value(m)?;
    let lhs: Rational = Pow::pow(&rat_frac(i64::from(d.nu1) * i64::from(d.nu2), 4), m - 1);
    let rhs: Rational = Pow::pow(&rat_frac(i64::from(c), 4), m - 1);
    Ok(lhs == rhs)
}

/// The negative discriminant forced by `arg z = pi/(m+1)` with
/// `z = nu/mu + i b`: `-Delta = (nu/mu)^2 (4/c - 1)`.
pub fn discriminant_for(m: u32, nu: u32, mu: u32) -> Result<Rational, Picard2Error> {
    let c = cos_value(m)?;
    if nu == 0 {
        return Err(Picard2Error::ZeroNu);
    }
    if mu == 0 {
        return Err(Picard2Error::ZeroMu);
    }
    let a = rat_frac(i64::from(nu), i64::from(mu));
    let b_sq = &a * &a * (rat_frac(4, i64::from(c)) - rat(1));
    let z = ExactComplex {
        re: a,
        im_sq: b_sq.clone(),
    };
    assert!(
        im_power_vanishes(&z, m + 1),
        "discriminant fails the argument check"
    );
    Ok(-b_sq)
}

/// Row-wise bookkeeping: the combination `A` applied to
/// `((-K_2).Gamma_2, H_2.Gamma_2) = (2, 0)` reproduces
/// `((-K_1).Gamma_2, H_1.Gamma_2) = (-nu1, mu1)`.
pub fn basechange_closes(d: &Rank2Data) -> Result<bool, Picard2Error> {
    let a = basechange_matrix(d)?;
    let pair = [rat(2), rat(0)];
    let image: Vec<Rational> = a
        .iter()
        .map(|row| &row[0] * &pair[0] + &row[1] * &pair[1])
        .collect();
    Ok(image == [rat(-i64::from(d.nu1)), rat(i64::from(d.mu1))])
}
