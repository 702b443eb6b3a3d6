//! Certified real roots of trinomials `x^n + s·p·x^e − m/2` with `e = 1` or
//! `e = n − 1`.
//!
//! The derivative of such a trinomial has at most two real zeros besides
//! `x = 0`, all available in closed form, so the real line splits into at
//! most three (or four) monotone pieces. Each piece holds at most one root,
//! which makes the isolation exhaustive. Roots are then refined with
//! bisection, taking a Newton step only when it lands inside the current
//! bracket and shrinks it fast enough.

use std::cmp::Ordering;

use num_traits::{Signed, ToPrimitive};

use crate::number::Rational;
use crate::quadratic::LinearSign;
use crate::{Error, Result};

/// Exponent of the middle term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LowerExponent {
    /// `x^n + s·p·x`
    One,
    /// `x^n + s·p·x^(n−1)`
    NMinusOne,
}

impl LowerExponent {
    pub fn as_str(self) -> &'static str {
        match self {
            LowerExponent::One => "one",
            LowerExponent::NMinusOne => "n-1",
        }
    }
}

/// `x^n + s·p·x^e = m/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrinomialSpec {
    n: u32,
    p: u64,
    sign: LinearSign,
    m: u64,
    lower: LowerExponent,
}

impl TrinomialSpec {
    pub fn new(n: u32, p: u64, sign: LinearSign, m: u64, lower: LowerExponent) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if p == 0 {
            return Err(Error::InvalidParameter("p must be at least 1".into()));
        }
        Ok(TrinomialSpec { n, p, sign, m, lower })
    }

    /// `x^n + x = m/2`.
    pub fn generalized_gm(n: u32, m: u64) -> Result<Self> {
        Self::new(n, 1, LinearSign::Plus, m, LowerExponent::One)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn sign(&self) -> LinearSign {
        self.sign
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn lower(&self) -> LowerExponent {
        self.lower
    }

    fn trinomial(&self) -> Trinomial {
        let e = match self.lower {
            LowerExponent::One => 1,
            LowerExponent::NMinusOne => self.n - 1,
        };
        Trinomial {
            n: self.n,
            k: (self.sign.factor() * self.p as i64) as f64,
            e,
            c: self.m as f64 / 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Bound on `|f(x)| / (1 + |x|^n)`.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Step multiplier when pushing outer brackets away from the critical
    /// points.
    pub bracket_growth: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { tolerance: 1e-12, max_iterations: 200, bracket_growth: 2.0 }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidParameter("tolerance must be positive".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidParameter("max_iterations must be at least 1".into()));
        }
        if !(self.bracket_growth > 1.0 && self.bracket_growth.is_finite()) {
            return Err(Error::InvalidParameter("bracket_growth must exceed 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    /// Isolating interval; degenerate `(x, x)` for a root sitting exactly on
    /// a critical point.
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    /// Ascending.
    pub roots: Vec<Root>,
    /// Every real root is listed.
    pub exhaustive: bool,
}

impl RootSet {
    pub fn values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    /// Largest root that is strictly positive.
    pub fn positive(&self) -> Option<&Root> {
        self.roots.iter().rev().find(|r| r.value > 0.0)
    }
}

/// `x^n + k·x^e − c` with `e ∈ {0, 1, n − 1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Trinomial {
    n: u32,
    k: f64,
    e: u32,
    c: f64,
}

impl Trinomial {
    fn eval(&self, x: f64) -> f64 {
        x.powi(self.n as i32) + self.k * x.powi(self.e as i32) - self.c
    }

    fn derivative(&self, x: f64) -> f64 {
        let lead = self.n as f64 * x.powi(self.n as i32 - 1);
        if self.e == 0 {
            lead
        } else {
            lead + self.k * self.e as f64 * x.powi(self.e as i32 - 1)
        }
    }

    fn allowance(&self, x: f64, tol: f64) -> f64 {
        tol * (1.0 + x.abs().powi(self.n as i32))
    }

    fn leading_coefficient(&self) -> f64 {
        if self.e == self.n {
            1.0 + self.k
        } else {
            1.0
        }
    }

    fn degenerate(&self) -> Option<Error> {
        if self.e == self.n && self.leading_coefficient() == 0.0 {
            let what = if self.c == 0.0 {
                "0 = 0 holds for every x"
            } else {
                "the left-hand side vanishes identically but the right-hand side does not"
            };
            return Some(Error::DegenerateIdentity(what.into()));
        }
        None
    }

    /// Zeros of the derivative, ascending and deduplicated.
    fn critical_points(&self) -> Vec<f64> {
        let n = self.n;
        let mut crit = if self.e == n {
            // linear: (1 + k)·x − c
            Vec::new()
        } else if self.k == 0.0 || self.e == 0 {
            if n >= 2 { vec![0.0] } else { Vec::new() }
        } else if self.e == 1 {
            // n·x^(n−1) = −k
            let t = -self.k / n as f64;
            let inv = 1.0 / (n - 1) as f64;
            if (n - 1) % 2 == 1 {
                vec![t.signum() * t.abs().powf(inv)]
            } else if t > 0.0 {
                let r = t.powf(inv);
                vec![-r, r]
            } else {
                Vec::new()
            }
        } else {
            // x^(n−2)·(n·x + k·(n−1))
            vec![0.0, -self.k * self.e as f64 / n as f64]
        };
        crit.sort_by(f64::total_cmp);
        crit.dedup();
        crit
    }

    fn limit_sign(&self, toward_positive: bool) -> Ordering {
        let lead = sign(self.leading_coefficient());
        if toward_positive || self.n.is_multiple_of(2) {
            lead
        } else {
            lead.reverse()
        }
    }

    fn isolate(&self, cfg: &SolverConfig) -> Result<Vec<(f64, f64)>> {
        cfg.validate()?;
        if let Some(err) = self.degenerate() {
            return Err(err);
        }
        let crit = self.critical_points();
        let mut brackets = Vec::new();

        if crit.is_empty() {
            // strictly monotone with opposite limits: exactly one root
            let f0 = self.eval(0.0);
            match sign(f0) {
                Ordering::Equal => brackets.push((0.0, 0.0)),
                s if s == self.limit_sign(true) => brackets.push(self.expand(0.0, false, cfg)?),
                _ => brackets.push(self.expand(0.0, true, cfg)?),
            }
            return Ok(brackets);
        }

        // sign at each critical point; zero when within tolerance
        let signs: Vec<Ordering> = crit
            .iter()
            .map(|&x| {
                let fx = self.eval(x);
                if fx.abs() <= self.allowance(x, cfg.tolerance) {
                    Ordering::Equal
                } else {
                    sign(fx)
                }
            })
            .collect();

        let first = 0;
        let last = crit.len() - 1;
        if signs[first] != Ordering::Equal && signs[first] != self.limit_sign(false) {
            brackets.push(self.expand(crit[first], false, cfg)?);
        }
        for i in 0..crit.len() {
            if signs[i] == Ordering::Equal {
                brackets.push((crit[i], crit[i]));
            }
            if i < last
                && signs[i] != Ordering::Equal
                && signs[i + 1] != Ordering::Equal
                && signs[i] != signs[i + 1]
            {
                brackets.push((crit[i], crit[i + 1]));
            }
        }
        if signs[last] != Ordering::Equal && signs[last] != self.limit_sign(true) {
            brackets.push(self.expand(crit[last], true, cfg)?);
        }
        Ok(brackets)
    }

    /// Walks away from `start` with geometrically growing steps until the
    /// sign of `f` matches its limit in that direction.
    fn expand(&self, start: f64, toward_positive: bool, cfg: &SolverConfig) -> Result<(f64, f64)> {
        let target = self.limit_sign(toward_positive);
        let dir = if toward_positive { 1.0 } else { -1.0 };
        let mut step = start.abs().max(1.0);
        let mut prev = start;
        for _ in 0..cfg.max_iterations.max(64) * 16 {
            let x = start + dir * step;
            if !x.is_finite() {
                break;
            }
            let fx = self.eval(x);
            if fx == 0.0 {
                return Ok((x, x));
            }
            if sign(fx) == target {
                return Ok(if toward_positive { (prev, x) } else { (x, prev) });
            }
            prev = x;
            step *= cfg.bracket_growth;
        }
        Err(Error::NoConvergence(cfg.max_iterations))
    }

    fn refine(&self, bracket: (f64, f64), cfg: &SolverConfig) -> Result<Root> {
        let (lo, hi) = bracket;
        let finish = |x: f64, iterations: usize| Root {
            value: x,
            bracket,
            residual: self.eval(x).abs(),
            iterations,
        };
        if lo == hi || self.eval(lo) == 0.0 {
            return Ok(finish(lo, 0));
        }
        if self.eval(hi) == 0.0 {
            return Ok(finish(hi, 0));
        }
        let (mut a, mut b) = (lo, hi);
        let sign_a = sign(self.eval(a));
        let mut step_old = b - a;
        let mut step = step_old;
        let mut x = 0.5 * (a + b);
        for it in 1..=cfg.max_iterations {
            let fx = self.eval(x);
            if fx.abs() <= self.allowance(x, cfg.tolerance) {
                return Ok(finish(x, it));
            }
            if sign(fx) == sign_a {
                a = x;
            } else {
                b = x;
            }
            let dfx = self.derivative(x);
            let newton = x - fx / dfx;
            let accept = dfx != 0.0
                && newton > a
                && newton < b
                && (2.0 * fx).abs() <= (step_old * dfx).abs();
            step_old = step;
            if accept {
                step = (x - newton).abs();
                x = newton;
            } else {
                step = 0.5 * (b - a);
                x = a + step;
            }
            if x <= a || x >= b {
                // bracket exhausted at binary64 resolution
                let best = if self.eval(a).abs() <= self.eval(b).abs() { a } else { b };
                if self.eval(best).abs() <= self.allowance(best, cfg.tolerance) {
                    return Ok(finish(best, it));
                }
                return Err(Error::NoConvergence(it));
            }
        }
        Err(Error::NoConvergence(cfg.max_iterations))
    }

    fn solve(&self, cfg: &SolverConfig) -> Result<RootSet> {
        let mut roots = self
            .isolate(cfg)?
            .into_iter()
            .map(|b| self.refine(b, cfg))
            .collect::<Result<Vec<_>>>()?;
        roots.sort_by(|l, r| l.value.total_cmp(&r.value));
        Ok(RootSet { roots, exhaustive: true })
    }
}

fn sign(x: f64) -> Ordering {
    if x > 0.0 {
        Ordering::Greater
    } else if x < 0.0 {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Disjoint brackets, one per real root, ascending.
pub fn isolate_real_roots(spec: &TrinomialSpec, cfg: &SolverConfig) -> Result<Vec<(f64, f64)>> {
    let mut brackets = spec.trinomial().isolate(cfg)?;
    brackets.sort_by(|l, r| l.0.total_cmp(&r.0));
    Ok(brackets)
}

pub fn solve_trinomial(spec: &TrinomialSpec, cfg: &SolverConfig) -> Result<RootSet> {
    spec.trinomial().solve(cfg)
}

/// All real roots of `x^n + x = m/2`.
pub fn solve_gm_general(n: u32, m: u64, cfg: &SolverConfig) -> Result<RootSet> {
    solve_trinomial(&TrinomialSpec::generalized_gm(n, m)?, cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StakhovVariant {
    /// `x^n + x = 1`
    A,
    /// `x^n + x^(n−1) = 1`
    B,
}

/// The non-negative root of the selected Stakhov equation. Both left-hand
/// sides increase strictly on `x ≥ 0`, so it is unique.
pub fn solve_stakhov(n: u32, variant: StakhovVariant, cfg: &SolverConfig) -> Result<f64> {
    let lower = match variant {
        StakhovVariant::A => LowerExponent::One,
        StakhovVariant::B => LowerExponent::NMinusOne,
    };
    let spec = TrinomialSpec::new(n, 1, LinearSign::Plus, 2, lower)?;
    let roots = solve_trinomial(&spec, cfg)?;
    roots
        .roots
        .iter()
        .rev()
        .map(|r| r.value)
        .find(|&v| v >= 0.0)
        .ok_or(Error::NoConvergence(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerMode {
    /// `b^n = n·x − a`
    Direct,
    /// `a = b`, hence `b^n + b = n·x`
    Constrained,
}

/// Real solutions `b` of `(a + b^n)/n = x`.
pub fn solve_euler(
    a: &Rational,
    n: u32,
    x: &Rational,
    mode: EulerMode,
    cfg: &SolverConfig,
) -> Result<RootSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let nx = x * Rational::from_integer(n.into());
    let poly = match mode {
        EulerMode::Direct => {
            let rhs = &nx - a;
            if n.is_multiple_of(2) && rhs.is_negative() {
                return Err(Error::NoRealRoot { n, rhs: rhs.to_string() });
            }
            Trinomial { n, k: 0.0, e: 0, c: to_f64(&rhs)? }
        }
        EulerMode::Constrained => Trinomial { n, k: 1.0, e: 1, c: to_f64(&nx)? },
    };
    poly.solve(cfg)
}

fn to_f64(r: &Rational) -> Result<f64> {
    r.to_f64()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::InvalidParameter(format!("{r} is out of binary64 range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, ratio};
    use crate::quadratic::generalized_gm;

    // Plain bisection on a sign-changing interval, used as the reference.
    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
        let flo = f(lo);
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == (flo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn spec(n: u32, p: u64, sign: LinearSign, m: u64, lower: LowerExponent) -> TrinomialSpec {
        TrinomialSpec::new(n, p, sign, m, lower).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn bisection_oracles() {
        let cubic = bisect(|x| x * x * x + x - 1.0, 0.0, 1.0, 1e-12);
        assert!((cubic - 0.6823278038).abs() < 1e-10, "{cubic}");
        let stakhov_b = bisect(|x| x * x * x + x * x - 1.0, 0.0, 1.0, 1e-12);
        assert!((stakhov_b - 0.7548776662).abs() < 1e-10, "{stakhov_b}");
    }

    #[test]
    fn isolation_counts() {
        let quad = spec(2, 1, LinearSign::Plus, 2, LowerExponent::One);
        assert_eq!(isolate_real_roots(&quad, &cfg()).unwrap().len(), 2);
        let cubic = spec(3, 1, LinearSign::Plus, 2, LowerExponent::One);
        assert_eq!(isolate_real_roots(&cubic, &cfg()).unwrap().len(), 1);
    }

    #[test]
    fn degenerate_identity() {
        let s = spec(1, 1, LinearSign::Minus, 4, LowerExponent::One);
        assert!(matches!(isolate_real_roots(&s, &cfg()), Err(Error::DegenerateIdentity(_))));
        assert!(matches!(solve_trinomial(&s, &cfg()), Err(Error::DegenerateIdentity(_))));
        let s = spec(1, 1, LinearSign::Minus, 0, LowerExponent::One);
        assert!(matches!(solve_trinomial(&s, &cfg()), Err(Error::DegenerateIdentity(_))));
    }

    #[test]
    fn third_case_roots() {
        let roots = solve_trinomial(&spec(2, 1, LinearSign::Plus, 3, LowerExponent::One), &cfg()).unwrap();
        let v = roots.values();
        assert_eq!(v.len(), 2);
        assert!((v[0] + 1.8228756555).abs() < 1e-9);
        assert!((v[1] - 0.8228756555).abs() < 1e-9);
        assert!(roots.exhaustive);
    }

    #[test]
    fn linear_case() {
        let roots = solve_trinomial(&spec(1, 1, LinearSign::Plus, 2, LowerExponent::One), &cfg()).unwrap();
        assert_eq!(roots.values(), vec![0.5]);
        // (1 - 3)x = 1
        let roots = solve_trinomial(&spec(1, 3, LinearSign::Minus, 2, LowerExponent::One), &cfg()).unwrap();
        assert_eq!(roots.values(), vec![-0.5]);
        // x + 2 = 4
        let roots = solve_trinomial(&spec(1, 2, LinearSign::Plus, 8, LowerExponent::NMinusOne), &cfg()).unwrap();
        assert_eq!(roots.values(), vec![2.0]);
    }

    #[test]
    fn quartic_with_zero_constant() {
        let roots = solve_trinomial(&spec(4, 1, LinearSign::Plus, 0, LowerExponent::One), &cfg()).unwrap();
        let v = roots.values();
        assert_eq!(v.len(), 2);
        assert!((v[0] + 1.0).abs() < 1e-12);
        assert!(v[1].abs() < 1e-12);
    }

    #[test]
    fn double_roots_on_critical_points() {
        // x³ − 3x − 2 = (x − 2)(x + 1)²
        let roots = solve_trinomial(&spec(3, 3, LinearSign::Minus, 4, LowerExponent::One), &cfg()).unwrap();
        let v = roots.values();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0], -1.0);
        assert!((v[1] - 2.0).abs() < 1e-12);
        // x³ + x² = x²(x + 1)
        let roots = solve_trinomial(&spec(3, 1, LinearSign::Plus, 0, LowerExponent::NMinusOne), &cfg()).unwrap();
        let v = roots.values();
        assert_eq!(v.len(), 2);
        assert!((v[0] + 1.0).abs() < 1e-12);
        assert_eq!(v[1], 0.0);
    }

    #[test]
    fn gm_general_examples() {
        let r = solve_gm_general(2, 1, &cfg()).unwrap();
        assert!((r.positive().unwrap().value - 0.3660254037844386).abs() < 1e-12);
        let oracle = bisect(|x| x * x * x + x - 1.0, 0.0, 1.0, 1e-13);
        let r = solve_gm_general(3, 2, &cfg()).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0].value - oracle).abs() < 1e-11);
        let r = solve_gm_general(2, 0, &cfg()).unwrap();
        let v = r.values();
        assert!((v[0] + 1.0).abs() < 1e-12 && v[1].abs() < 1e-12);
        assert!(r.positive().is_none());
    }

    #[test]
    fn stakhov_variants() {
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((solve_stakhov(2, StakhovVariant::A, &cfg()).unwrap() - golden).abs() < 1e-12);
        assert!((solve_stakhov(2, StakhovVariant::B, &cfg()).unwrap() - golden).abs() < 1e-12);
        let a3 = bisect(|x| x.powi(3) + x - 1.0, 0.0, 1.0, 1e-13);
        let b3 = bisect(|x| x.powi(3) + x * x - 1.0, 0.0, 1.0, 1e-13);
        assert!((solve_stakhov(3, StakhovVariant::A, &cfg()).unwrap() - a3).abs() < 1e-11);
        assert!((solve_stakhov(3, StakhovVariant::B, &cfg()).unwrap() - b3).abs() < 1e-11);
        assert_eq!(solve_stakhov(1, StakhovVariant::A, &cfg()).unwrap(), 0.5);
        assert_eq!(solve_stakhov(1, StakhovVariant::B, &cfg()).unwrap(), 0.0);
    }

    #[test]
    fn euler_modes() {
        let r = solve_euler(&int(0), 2, &ratio(1, 2), EulerMode::Constrained, &cfg()).unwrap();
        let gm = solve_gm_general(2, 2, &cfg()).unwrap();
        assert_eq!(r.positive().unwrap().value.to_bits(), gm.positive().unwrap().value.to_bits());

        let r = solve_euler(&int(1), 2, &int(1), EulerMode::Direct, &cfg()).unwrap();
        let v = r.values();
        assert_eq!(v.len(), 2);
        assert!((v[0] + 1.0).abs() < 1e-12 && (v[1] - 1.0).abs() < 1e-12);

        let r = solve_euler(&int(2), 3, &int(1), EulerMode::Direct, &cfg()).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0].value - 1.0).abs() < 1e-12);

        let r = solve_euler(&int(2), 2, &int(1), EulerMode::Direct, &cfg()).unwrap();
        assert_eq!(r.values(), vec![0.0]);

        assert!(matches!(
            solve_euler(&int(3), 2, &int(1), EulerMode::Direct, &cfg()),
            Err(Error::NoRealRoot { .. })
        ));
        // odd n, negative right-hand side: b³ = −8
        let r = solve_euler(&int(11), 3, &int(1), EulerMode::Direct, &cfg()).unwrap();
        assert!((r.roots[0].value + 2.0).abs() < 1e-12);
    }

    #[test]
    fn residual_and_bracket_contract() {
        let c = cfg();
        for n in 1..=7u32 {
            for p in 1..=4u64 {
                for m in 0..=10u64 {
                    for sign in [LinearSign::Plus, LinearSign::Minus] {
                        for lower in [LowerExponent::One, LowerExponent::NMinusOne] {
                            let s = spec(n, p, sign, m, lower);
                            let Ok(set) = solve_trinomial(&s, &c) else { continue };
                            for w in set.roots.windows(2) {
                                assert!(w[0].value < w[1].value, "{s:?}");
                            }
                            for r in &set.roots {
                                assert!(r.bracket.0 <= r.value && r.value <= r.bracket.1, "{s:?}");
                                let bound = c.tolerance * (1.0 + r.value.abs().powi(n as i32));
                                assert!(r.residual <= bound, "{s:?} {r:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn odd_plus_has_one_root() {
        for n in (1..=9u32).step_by(2) {
            for m in 0..=12 {
                let set = solve_gm_general(n, m, &cfg()).unwrap();
                assert_eq!(set.roots.len(), 1, "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn positive_root_increases_with_m() {
        for n in 1..=5u32 {
            let mut prev = f64::NEG_INFINITY;
            for m in 1..=10 {
                let x = solve_gm_general(n, m, &cfg()).unwrap().positive().unwrap().value;
                assert!(x > prev, "n = {n}, m = {m}");
                prev = x;
            }
        }
    }

    #[test]
    fn matches_closed_form() {
        for m in 0..=20u64 {
            let exact = generalized_gm(m).unwrap().roots;
            let v = solve_gm_general(2, m, &cfg()).unwrap().values();
            assert_eq!(v.len(), 2);
            assert!((v[0] - exact.x2.to_f64()).abs() < 1e-10);
            assert!((v[1] - exact.x1.to_f64()).abs() < 1e-10);
        }
    }

    #[test]
    fn config_validation() {
        let bad = SolverConfig { tolerance: 0.0, ..SolverConfig::default() };
        assert!(solve_gm_general(2, 2, &bad).is_err());
        let bad = SolverConfig { bracket_growth: 1.0, ..SolverConfig::default() };
        assert!(solve_gm_general(2, 2, &bad).is_err());
        assert!(TrinomialSpec::new(0, 1, LinearSign::Plus, 1, LowerExponent::One).is_err());
    }
}
