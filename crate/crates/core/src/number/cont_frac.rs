use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::QuadraticSurd;
use crate::{Error, Result};

/// Simple continued fraction `[a0; a1, …, (p1, …, pk)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    initial: Vec<BigUint>,
    period: Vec<BigUint>,
    truncated: bool,
}

impl ContinuedFraction {
    /// Terms before the repeating block (all terms for a rational).
    pub fn initial_terms(&self) -> &[BigUint] {
        &self.initial
    }

    /// Repeating block; empty for rationals and for truncated expansions.
    pub fn periodic_part(&self) -> &[BigUint] {
        &self.period
    }

    /// Set when `max_terms` ran out before the expansion terminated or
    /// repeated.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Expansion of a positive quadratic surd, keeping at most `max_terms`
    /// terms. The leading term `a0` is always reported in the initial part,
    /// so the period is searched from `a1` on. Periodicity is detected by a
    /// repeated `(P, Q)` state of the complete quotient `(P + √D) / Q`.
    pub fn of(value: &QuadraticSurd, max_terms: usize) -> Result<Self> {
        if value.signum() != std::cmp::Ordering::Greater {
            return Err(Error::NonPositive);
        }
        if value.is_rational() {
            return Ok(Self::of_rational(value.rat().numer(), value.rat().denom(), max_terms));
        }

        let rat = value.rat();
        let coeff = value.coeff();
        let den = rat.denom().lcm(coeff.denom());
        let a = rat.numer() * (&den / rat.denom());
        let b = coeff.numer() * (&den / coeff.denom());
        let mut disc = &b * &b * BigInt::from(value.radicand());
        let (mut p, mut q) = if b.is_positive() { (a, den) } else { (-a, -den) };
        if !(&disc - &p * &p).is_multiple_of(&q) {
            let abs_q = q.abs();
            p *= &abs_q;
            disc *= &q * &q;
            q *= abs_q;
        }
        let root = disc.sqrt();

        let mut terms: Vec<BigUint> = Vec::new();
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        while terms.len() < max_terms {
            if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
                let period = terms.split_off(start);
                return Ok(ContinuedFraction { initial: terms, period, truncated: false });
            }
            // the integer part always stays in front, as in [1; (2)] for √2
            if !terms.is_empty() {
                seen.insert((p.clone(), q.clone()), terms.len());
            }
            let n = &p + &root;
            let term = if q.is_positive() {
                n.div_floor(&q)
            } else {
                -n.div_floor(&-&q) - 1
            };
            let next_p = &term * &q - &p;
            let next_q = (&disc - &next_p * &next_p) / &q;
            terms.push(term.to_biguint().expect("continued fraction terms are non-negative"));
            p = next_p;
            q = next_q;
        }
        Ok(ContinuedFraction { initial: terms, period: Vec::new(), truncated: true })
    }

    fn of_rational(num: &BigInt, den: &BigInt, max_terms: usize) -> Self {
        let (mut num, mut den) = (num.clone(), den.clone());
        let mut terms = Vec::new();
        while !den.is_zero() {
            if terms.len() == max_terms {
                return ContinuedFraction { initial: terms, period: Vec::new(), truncated: true };
            }
            let (quot, rem) = num.div_mod_floor(&den);
            terms.push(quot.to_biguint().expect("positive rational"));
            num = den;
            den = rem;
        }
        ContinuedFraction { initial: terms, period: Vec::new(), truncated: false }
    }
}

/// `[a0; a1, a2, (p1, p2)]`, with a trailing `…` when truncated.
impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.initial.iter().map(|t| t.to_string()).collect();
        if !self.period.is_empty() {
            let block: Vec<String> = self.period.iter().map(|t| t.to_string()).collect();
            parts.push(format!("({})", block.join(", ")));
        }
        if self.truncated {
            parts.push("…".to_string());
        }
        match parts.split_first() {
            None => write!(f, "[]"),
            Some((head, [])) => write!(f, "[{head}]"),
            Some((head, rest)) => write!(f, "[{head}; {}]", rest.join(", ")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, ratio};

    fn terms(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&t| BigUint::from(t)).collect()
    }

    // Naive float expansion, independent of the (P, Q) recurrence.
    fn float_cf(mut x: f64, n: usize) -> Vec<u64> {
        let mut out = Vec::new();
        for _ in 0..n {
            let a = x.floor();
            out.push(a as u64);
            x = 1.0 / (x - a);
        }
        out
    }

    #[test]
    fn golden_mean() {
        let phi = QuadraticSurd::new(ratio(1, 2), ratio(1, 2), 5);
        let cf = ContinuedFraction::of(&phi, 50).unwrap();
        assert_eq!(cf.initial_terms(), terms(&[1]).as_slice());
        assert_eq!(cf.periodic_part(), terms(&[1]).as_slice());
        assert!(!cf.is_truncated());
        assert_eq!(cf.to_string(), "[1; (1)]");
    }

    #[test]
    fn silver_mean() {
        let silver = QuadraticSurd::new(int(1), int(1), 2);
        let cf = ContinuedFraction::of(&silver, 50).unwrap();
        assert_eq!(cf.initial_terms(), terms(&[2]).as_slice());
        assert_eq!(cf.periodic_part(), terms(&[2]).as_slice());
    }

    #[test]
    fn generalized_gm_root_three() {
        let x = QuadraticSurd::new(ratio(-1, 2), ratio(1, 2), 3);
        let oracle = float_cf(x.to_f64(), 12);
        assert_eq!(oracle, vec![0, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]);
        let cf = ContinuedFraction::of(&x, 50).unwrap();
        assert_eq!(cf.initial_terms(), terms(&[0]).as_slice());
        assert_eq!(cf.periodic_part(), terms(&[2, 1]).as_slice());
    }

    #[test]
    fn negative_coefficient_and_non_reduced_start() {
        // 3 - √2 ≈ 1.5858
        let x = QuadraticSurd::new(int(3), int(-1), 2);
        let cf = ContinuedFraction::of(&x, 50).unwrap();
        let mut unrolled: Vec<u64> = Vec::new();
        for t in cf.initial_terms() {
            unrolled.push(t.try_into().unwrap());
        }
        while unrolled.len() < 10 {
            for t in cf.periodic_part() {
                unrolled.push(t.try_into().unwrap());
            }
        }
        assert_eq!(&unrolled[..10], float_cf(x.to_f64(), 10).as_slice());
        // (2 + √7)/3 ≈ 1.5486
        let y = QuadraticSurd::new(ratio(2, 3), ratio(1, 3), 7);
        let cf = ContinuedFraction::of(&y, 50).unwrap();
        assert!(cf.is_periodic());
        let mut unrolled: Vec<u64> = cf.initial_terms().iter().map(|t| t.try_into().unwrap()).collect();
        while unrolled.len() < 10 {
            unrolled.extend(cf.periodic_part().iter().map(|t| u64::try_from(t).unwrap()));
        }
        assert_eq!(&unrolled[..10], float_cf(y.to_f64(), 10).as_slice());
    }

    #[test]
    fn metallic_means_have_period_p() {
        for p in 1..=10i64 {
            let x = QuadraticSurd::new(ratio(p, 2), ratio(1, 2), (p * p + 4) as u64);
            let cf = ContinuedFraction::of(&x, 50).unwrap();
            assert_eq!(cf.initial_terms(), terms(&[p as u64]).as_slice(), "p = {p}");
            assert_eq!(cf.periodic_part(), terms(&[p as u64]).as_slice(), "p = {p}");
        }
    }

    #[test]
    fn rationals_terminate() {
        let x = QuadraticSurd::from_rational(ratio(415, 93));
        let cf = ContinuedFraction::of(&x, 50).unwrap();
        assert_eq!(cf.initial_terms(), terms(&[4, 2, 6, 7]).as_slice());
        assert!(!cf.is_periodic());
        assert!(!cf.is_truncated());
        assert_eq!(ContinuedFraction::of(&QuadraticSurd::from_integer(2), 5).unwrap().to_string(), "[2]");
    }

    #[test]
    fn truncation_flag() {
        let x = QuadraticSurd::new(int(0), int(1), 2);
        let cf = ContinuedFraction::of(&x, 1).unwrap();
        assert!(cf.is_truncated());
        assert_eq!(cf.initial_terms(), terms(&[1]).as_slice());
        assert!(cf.periodic_part().is_empty());
    }

    #[test]
    fn non_positive_rejected() {
        let x = QuadraticSurd::new(ratio(-1, 2), ratio(-1, 2), 3);
        assert_eq!(ContinuedFraction::of(&x, 10), Err(Error::NonPositive));
        assert_eq!(ContinuedFraction::of(&QuadraticSurd::zero(), 10), Err(Error::NonPositive));
    }
}
