//! Closed-form roots of `x² ± px − q = 0`: the generalized golden mean at
//! `n = 2` (`x² + x = m/2`), the metallic means family and the integer
//! metallic means `q = k(k+1)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::number::{exact_sqrt_u128, ratio, QuadraticSurd, Rational};
use crate::{Error, Result};

/// Sign `s` of the linear term `s·p·x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinearSign {
    Plus,
    Minus,
}

impl LinearSign {
    pub fn factor(self) -> i64 {
        match self {
            LinearSign::Plus => 1,
            LinearSign::Minus => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LinearSign::Plus => "plus",
            LinearSign::Minus => "minus",
        }
    }
}

/// `x² + s·p·x − q = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpec {
    p: u64,
    q: Rational,
    sign: LinearSign,
}

impl QuadraticSpec {
    pub fn new(p: u64, q: Rational, sign: LinearSign) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParameter("p must be at least 1".into()));
        }
        Ok(QuadraticSpec { p, q, sign })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn sign(&self) -> LinearSign {
        self.sign
    }

    /// `p² + 4q`.
    pub fn discriminant(&self) -> Rational {
        let p = Rational::from_integer(BigInt::from(self.p));
        &p * &p + &self.q * Rational::from_integer(BigInt::from(4))
    }
}

/// Both real roots, `x1 ≥ x2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPair {
    pub x1: QuadraticSurd,
    pub x2: QuadraticSurd,
    pub discriminant: Rational,
}

impl RootPair {
    pub fn sum(&self) -> QuadraticSurd {
        self.x1.checked_add(&self.x2).expect("conjugate roots share a field")
    }

    pub fn product(&self) -> QuadraticSurd {
        self.x1.checked_mul(&self.x2).expect("conjugate roots share a field")
    }

    /// `|x1| + |x2|`.
    pub fn abs_sum(&self) -> QuadraticSurd {
        self.x1.abs().checked_add(&self.x2.abs()).expect("conjugate roots share a field")
    }

    /// `x1² + x2²`.
    pub fn sum_of_squares(&self) -> QuadraticSurd {
        self.x1.square().checked_add(&self.x2.square()).expect("conjugate roots share a field")
    }

    pub fn is_double(&self) -> bool {
        self.x1 == self.x2
    }
}

pub fn solve_quadratic(spec: &QuadraticSpec) -> Result<RootPair> {
    let disc = spec.discriminant();
    if disc.is_negative() {
        return Err(Error::NoRealRoots(disc.to_string()));
    }
    let root = QuadraticSurd::sqrt_of(&disc)?;
    let vertex = QuadraticSurd::from_rational(ratio(-spec.sign.factor() * spec.p as i64, 2));
    let half = ratio(1, 2);
    let x1 = vertex.checked_add(&root.scale(&half))?;
    let x2 = vertex.checked_sub(&root.scale(&half))?;
    Ok(RootPair { x1, x2, discriminant: disc })
}

/// Roots of `x² + x = m/2` together with the radicand `r = 2m + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedGm {
    pub m: u64,
    pub r: u64,
    pub roots: RootPair,
}

pub fn generalized_gm(m: u64) -> Result<GeneralizedGm> {
    let q = Rational::new(BigInt::from(m), BigInt::from(2));
    let spec = QuadraticSpec::new(1, q, LinearSign::Plus)?;
    let roots = solve_quadratic(&spec)?;
    let r = m
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::RadicandOverflow)?;
    Ok(GeneralizedGm { m, r, roots })
}

/// Positive root `(p + √(p² + 4q))/2` of `x² − px − q = 0`.
pub fn metallic_mean(p: u64, q: &Rational) -> Result<QuadraticSurd> {
    if q.is_negative() {
        return Err(Error::InvalidParameter(format!("q must be non-negative, got {q}")));
    }
    let spec = QuadraticSpec::new(p, q.clone(), LinearSign::Minus)?;
    let roots = solve_quadratic(&spec)?;
    if roots.discriminant.is_zero() {
        return Err(Error::NoRealRoots(roots.discriminant.to_string()));
    }
    Ok(roots.x1)
}

/// `(k, k+1)` when `q = k(k+1)`, i.e. the absolute values of the integer
/// roots of `x² − x − q = 0`.
pub fn integer_metallic(q: u64) -> Option<(u64, u64)> {
    let disc = 1 + 4 * q as u128;
    let s = exact_sqrt_u128(disc)?;
    // disc is odd, so any square root is odd too
    let k = ((s - 1) / 2) as u64;
    Some((k, k + 1))
}
