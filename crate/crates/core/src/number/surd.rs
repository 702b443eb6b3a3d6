use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{square_free_split, Rational};
use crate::{Error, Result};

/// Largest fractional width accepted by [`QuadraticSurd::to_decimal`].
pub const MAX_DECIMAL_DIGITS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurdOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact real number `rat + coeff·√radicand`.
///
/// Always normalized: `radicand` is square-free and at least 2 whenever
/// `coeff` is non-zero, and both `coeff` and `radicand` are zero for
/// rational values. Equality is therefore structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    rat: Rational,
    coeff: Rational,
    radicand: u64,
}

impl QuadraticSurd {
    /// Builds `a + b√d` in normal form: square factors of `d` move into the
    /// coefficient and perfect squares fold into the rational part.
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::from_rational(a);
        }
        let (outer, inner) = square_free_split(d);
        let b = b * Rational::from_integer(BigInt::from(outer));
        if inner == 1 {
            Self::from_rational(a + b)
        } else {
            QuadraticSurd { rat: a, coeff: b, radicand: inner }
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadraticSurd { rat: r, coeff: Rational::zero(), radicand: 0 }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    /// Exact `√r` for a non-negative rational `r`.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NoRealRoots(r.to_string()));
        }
        // √(n/m) = √(n·m) / m
        let nm = r.numer() * r.denom();
        let d = nm.to_u64().ok_or(Error::RadicandOverflow)?;
        let inv_den = Rational::new(BigInt::one(), r.denom().clone());
        Ok(Self::new(Rational::zero(), inv_den, d))
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coeff.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rat.clone())
    }

    /// `a - b√d`.
    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            rat: self.rat.clone(),
            coeff: -self.coeff.clone(),
            radicand: self.radicand,
        }
    }

    fn field_with(&self, other: &Self) -> Result<u64> {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::MixedRadicands(a, b)),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.field_with(rhs)?;
        Ok(Self::new(&self.rat + &rhs.rat, &self.coeff + &rhs.coeff, d))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let d = self.field_with(rhs)?;
        Ok(Self::new(&self.rat - &rhs.rat, &self.coeff - &rhs.coeff, d))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.field_with(rhs)?;
        let dr = Rational::from_integer(BigInt::from(d));
        let rat = &self.rat * &rhs.rat + &self.coeff * &rhs.coeff * dr;
        let coeff = &self.rat * &rhs.coeff + &self.coeff * &rhs.rat;
        Ok(Self::new(rat, coeff, d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.field_with(rhs)?;
        // multiply through by the conjugate; the norm is a non-zero rational
        let norm = rhs.norm();
        let num = self.checked_mul(&rhs.conjugate())?;
        Ok(Self::new(&num.rat / &norm, &num.coeff / &norm, num.radicand))
    }

    pub fn combine(op: SurdOp, lhs: &Self, rhs: &Self) -> Result<Self> {
        match op {
            SurdOp::Add => lhs.checked_add(rhs),
            SurdOp::Sub => lhs.checked_sub(rhs),
            SurdOp::Mul => lhs.checked_mul(rhs),
            SurdOp::Div => lhs.checked_div(rhs),
        }
    }

    /// Field norm `a² - b²d`.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(BigInt::from(self.radicand));
        &self.rat * &self.rat - &self.coeff * &self.coeff * d
    }

    pub fn square(&self) -> Self {
        self.checked_mul(self).expect("a surd shares its own field")
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.rat * k, &self.coeff * k, self.radicand)
    }

    /// Sign of the value, decided with rational arithmetic only.
    pub fn signum(&self) -> Ordering {
        sign_in_field(&self.rat, &self.coeff, self.radicand)
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.rat.floor().to_integer();
        }
        // |b|√d = √(n/m) = √(n·m)/m, bracketed by isqrt
        let b2d = &self.coeff * &self.coeff * Rational::from_integer(BigInt::from(self.radicand));
        let m = b2d.denom().clone();
        let s = (b2d.numer() * &m).sqrt();
        let approx = if self.coeff.is_positive() {
            Rational::new(s, m)
        } else {
            -Rational::new(s + 1u32, m)
        };
        let mut t = (&self.rat + approx).floor().to_integer();
        while self.cmp(&Self::from_rational(Rational::from_integer(t.clone()))) == Ordering::Less {
            t -= 1;
        }
        loop {
            let next = Self::from_rational(Rational::from_integer(&t + 1));
            if self.cmp(&next) == Ordering::Less {
                break;
            }
            t += 1;
        }
        t
    }

    /// Decimal expansion truncated toward zero after `digits` fractional
    /// digits. Every emitted digit is exact.
    ///
    /// # Panics
    ///
    /// If `digits` exceeds [`MAX_DECIMAL_DIGITS`].
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(
            digits <= MAX_DECIMAL_DIGITS,
            "at most {MAX_DECIMAL_DIGITS} fractional digits are supported"
        );
        let negative = self.signum() == Ordering::Less;
        let pow = num_traits::pow(BigInt::from(10u32), digits);
        let scaled = self.abs().scale(&Rational::from_integer(pow.clone()));
        let truncated = scaled.floor();
        let (whole, frac) = truncated.div_rem(&pow);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&whole.to_string());
        if digits > 0 {
            out.push('.');
            out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
        }
        out
    }

    /// Nearest binary64 approximation (via a 25-digit exact expansion).
    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.to_rational() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        self.to_decimal(25).parse().unwrap_or(f64::NAN)
    }
}

/// Sign of `a + b√d` for square-free `d` (or `d = 0`).
fn sign_in_field(a: &Rational, b: &Rational, d: u64) -> Ordering {
    let sa = sign_of(a);
    if d == 0 || b.is_zero() {
        return sa;
    }
    let sb = sign_of(b);
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // opposite signs: the larger magnitude wins
    let dr = Rational::from_integer(BigInt::from(d));
    match (a * a).cmp(&(b * b * dr)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

fn sign_of(r: &Rational) -> Ordering {
    match r.numer().sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;

    fn neg(self) -> Self::Output {
        QuadraticSurd { rat: -self.rat, coeff: -self.coeff, radicand: self.radicand }
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        if let Ok(diff) = self.checked_sub(other) {
            return diff.signum();
        }
        // u + v with u = a1 + b1√d1 - a2 in one field and v = -b2√d2 in another
        let u = QuadraticSurd {
            rat: &self.rat - &other.rat,
            coeff: self.coeff.clone(),
            radicand: self.radicand,
        };
        let su = u.signum();
        let sv = sign_of(&-other.coeff.clone());
        if su == Ordering::Equal || su == sv {
            return sv;
        }
        if sv == Ordering::Equal {
            return su;
        }
        let v_sq = &other.coeff * &other.coeff * Rational::from_integer(BigInt::from(other.radicand));
        let u_sq = u.square();
        match u_sq.checked_sub(&Self::from_rational(v_sq)).map(|x| x.signum()) {
            Ok(Ordering::Greater) => su,
            Ok(Ordering::Less) => sv,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

/// Renders as `(A + B√d)/L` with integer `A`, `B`, `L`.
impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rat);
        }
        let den = self.rat.denom().lcm(self.coeff.denom());
        let a = self.rat.numer() * (&den / self.rat.denom());
        let b = self.coeff.numer() * (&den / self.coeff.denom());
        let sqrt = format!("√{}", self.radicand);
        let b_term = match (b.is_one(), (-&b).is_one()) {
            (true, _) => sqrt,
            (_, true) => format!("-{sqrt}"),
            _ => format!("{b}{sqrt}"),
        };
        let body = if a.is_zero() {
            b_term
        } else if b.is_negative() {
            format!("{a} - {}", b_term.trim_start_matches('-'))
        } else {
            format!("{a} + {b_term}")
        };
        if den.is_one() {
            write!(f, "{body}")
        } else if a.is_zero() {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}
