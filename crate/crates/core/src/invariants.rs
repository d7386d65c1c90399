//! Entropy and conformal module values, linked by `module = π / (2 · entropy)`.
//!
//! Positive entropies that arise here are all of the form
//! `arccosh(|t| / 2) / p` for an integer trace `|t| > 2` and a positive
//! integer period `p`. Keeping `(t, p)` lets comparisons, scaling and
//! equality run on integers; floats are derived only for display.

use std::cmp::Ordering;
use std::f64::consts::{LN_2, PI};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// `log((|t| + √(t² − 4)) / 2)`, the log of the larger eigenvalue of a
/// hyperbolic SL(2,ℤ) matrix with trace `t`.
pub fn log_dilatation(trace: &BigInt) -> f64 {
    let t = trace.abs();
    let bits = t.bits();
    if bits <= 26 {
        let x = t.to_f64().expect("small trace");
        ((x + (x * x - 4.0).sqrt()) / 2.0).ln()
    } else {
        // ln t − 1/t² − …; the correction is below f64 resolution here
        let x = t.to_f64().filter(|x| x.is_finite());
        let ln_t = match x {
            Some(x) => x.ln(),
            None => {
                let shift = bits - 64;
                let top: BigInt = &t >> shift;
                top.to_f64().expect("64-bit mantissa").ln() + shift as f64 * LN_2
            }
        };
        let inv = (-2.0 * ln_t).exp();
        ln_t - inv
    }
}

/// `s_m(t)` with `s_0 = 2`, `s_1 = t`, `s_m = t·s_{m−1} − s_{m−2}`: the trace
/// of the m-th power of any matrix with trace `t`.
pub fn power_trace(t: &BigInt, m: u64) -> BigInt {
    let mut prev = BigInt::from(2);
    let mut cur = t.clone();
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = t * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact positive entropy `arccosh(trace / 2) / period`.
#[derive(Debug, Clone)]
pub struct Spectral {
    trace: BigInt,
    period: u64,
}

impl Spectral {
    /// `None` when `|trace| ≤ 2` (zero entropy).
    pub fn new(trace: &BigInt, period: u64) -> Option<Self> {
        assert!(period >= 1, "period must be positive");
        let t = trace.abs();
        if t <= BigInt::from(2) {
            None
        } else {
            Some(Spectral { trace: t, period })
        }
    }

    pub fn trace(&self) -> &BigInt {
        &self.trace
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn entropy(&self) -> f64 {
        log_dilatation(&self.trace) / self.period as f64
    }

    pub fn module(&self) -> f64 {
        PI * self.period as f64 / (2.0 * log_dilatation(&self.trace))
    }

    /// Entropy multiplied by `m ≥ 1`.
    pub fn scaled(&self, m: u64) -> Spectral {
        assert!(m >= 1);
        Spectral {
            trace: power_trace(&self.trace, m),
            period: self.period,
        }
    }

    /// Entropy divided by `k ≥ 1`.
    pub fn divided(&self, k: u64) -> Spectral {
        assert!(k >= 1);
        Spectral {
            trace: self.trace.clone(),
            period: self.period * k,
        }
    }

    /// Exact comparison: `h1 ≤ h2` iff `s_{p2}(t1) ≤ s_{p1}(t2)`.
    pub fn exact_cmp(&self, other: &Spectral) -> Ordering {
        power_trace(&self.trace, other.period).cmp(&power_trace(&other.trace, self.period))
    }
}

impl PartialEq for Spectral {
    fn eq(&self, other: &Self) -> bool {
        self.exact_cmp(other) == Ordering::Equal
    }
}

impl Eq for Spectral {}

impl PartialOrd for Spectral {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Spectral {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exact_cmp(other)
    }
}

/// Extended nonnegative real. `exact` is present when the value is an
/// entropy or module derived from a [`Spectral`].
#[derive(Debug, Clone, PartialEq)]
pub enum ExtReal {
    Finite { value: f64, exact: Option<Spectral> },
    Infinity,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite {
        value: 0.0,
        exact: None,
    };

    pub fn value(&self) -> f64 {
        match self {
            ExtReal::Finite { value, .. } => *value,
            ExtReal::Infinity => f64::INFINITY,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtReal::Finite { value, .. } if *value == 0.0)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtReal::Infinity)
    }

    pub fn exact(&self) -> Option<&Spectral> {
        match self {
            ExtReal::Finite { exact, .. } => exact.as_ref(),
            ExtReal::Infinity => None,
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Infinity => write!(f, "inf"),
            ExtReal::Finite { value, .. } if *value == 0.0 => write!(f, "0"),
            ExtReal::Finite { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Entropy and conformal module of one conjugacy class.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantPair {
    pub entropy: ExtReal,
    pub module: ExtReal,
}

impl InvariantPair {
    /// Vanishing entropy, infinite module.
    pub fn zero() -> Self {
        InvariantPair {
            entropy: ExtReal::ZERO,
            module: ExtReal::Infinity,
        }
    }

    pub fn from_spectral(s: Spectral) -> Self {
        InvariantPair {
            entropy: ExtReal::Finite {
                value: s.entropy(),
                exact: Some(s.clone()),
            },
            module: ExtReal::Finite {
                value: s.module(),
                exact: Some(s),
            },
        }
    }

    pub fn from_optional(s: Option<Spectral>) -> Self {
        s.map_or_else(InvariantPair::zero, InvariantPair::from_spectral)
    }

    pub fn spectral(&self) -> Option<&Spectral> {
        self.entropy.exact()
    }
}
