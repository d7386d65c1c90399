//! Three-strand braids through the representation θ : B₃ → SL(2,ℤ),
//! σ₁ ↦ [[1,1],[0,1]], σ₂ ↦ [[1,0],[−1,1]].
//!
//! The kernel of θ is generated by Δ₃⁴ (exponent sum 12) and lies in the
//! center, so θ together with the exponent sum decides both the word
//! problem and the conjugacy problem exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::braid::{garside, BraidWord};
use crate::error::{Error, Result};
use crate::invariants::{log_dilatation, ExtReal, InvariantPair, Spectral};
use crate::sl2::{sl2_conjugate, sl2_type, SL2Matrix, SL2Type};

fn require_three(b: &BraidWord) -> Result<()> {
    if b.strands() != 3 {
        return Err(Error::NotThreeStrands(b.strands()));
    }
    Ok(())
}

fn generator_matrix(g: i32) -> SL2Matrix {
    match g {
        1 => SL2Matrix::r(),
        -1 => SL2Matrix::r().inverse(),
        2 => SL2Matrix::l().inverse(),
        -2 => SL2Matrix::l(),
        _ => unreachable!("not a B3 letter"),
    }
}

/// θ(b), the left-to-right product of generator images.
pub fn theta(b: &BraidWord) -> Result<SL2Matrix> {
    require_three(b)?;
    Ok(b.letters()
        .iter()
        .fold(SL2Matrix::identity(), |m, &g| &m * &generator_matrix(g)))
}

pub fn is_trivial_3(b: &BraidWord) -> Result<bool> {
    Ok(b.exponent_sum() == 0 && theta(b)?.is_identity())
}

pub fn equal_3(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    is_trivial_3(&u.compose(&v.inverse())?)
}

pub fn conjugate_3(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    let (tu, tv) = (theta(u)?, theta(v)?);
    Ok(u.exponent_sum() == v.exponent_sum() && sl2_conjugate(&tu, &tv))
}

/// Thurston type of a 3-braid conjugacy class.
#[derive(Debug, Clone, PartialEq)]
pub enum ThurstonClass3 {
    /// Class of `(σ₁σ₂)^power` when `circular`, else of `Δ₃^power`.
    /// `order` is the order of θ(b) in SL(2,ℤ).
    Periodic {
        circular: bool,
        power: i64,
        order: u8,
    },
    /// Class of `σ₁^k Δ₃^{2l}`.
    ReducibleParabolic { k: i64, l: i64 },
    PseudoAnosov {
        trace: BigInt,
        entropy: ExtReal,
        dilatation: f64,
        module: ExtReal,
    },
}

impl ThurstonClass3 {
    pub fn name(&self) -> &'static str {
        match self {
            ThurstonClass3::Periodic { .. } => "periodic",
            ThurstonClass3::ReducibleParabolic { .. } => "reducible_parabolic",
            ThurstonClass3::PseudoAnosov { .. } => "pseudo_anosov",
        }
    }

    pub fn invariants(&self) -> InvariantPair {
        match self {
            ThurstonClass3::PseudoAnosov {
                entropy, module, ..
            } => InvariantPair {
                entropy: entropy.clone(),
                module: module.clone(),
            },
            _ => InvariantPair::zero(),
        }
    }

    /// A braid in the class this verdict names.
    pub fn representative(&self) -> Option<BraidWord> {
        match self {
            ThurstonClass3::Periodic {
                circular, power, ..
            } => {
                let base = if *circular {
                    BraidWord::from_raw(3, vec![1, 2])
                } else {
                    garside(3).expect("n = 3")
                };
                Some(base.power(*power))
            }
            ThurstonClass3::ReducibleParabolic { k, l } => {
                let twist = garside(3).expect("n = 3").power(2 * l);
                Some(
                    BraidWord::from_raw(3, vec![1])
                        .power(*k)
                        .compose(&twist)
                        .expect("same strands"),
                )
            }
            ThurstonClass3::PseudoAnosov { .. } => None,
        }
    }
}

fn inconsistent(b: &BraidWord, what: &str) -> Error {
    Error::InternalInconsistency(format!("{what} for {b}"))
}

pub fn classify_3(b: &BraidWord) -> Result<ThurstonClass3> {
    let m = theta(b)?;
    let e = b.exponent_sum();
    let class = match sl2_type(&m) {
        SL2Type::Identity | SL2Type::MinusIdentity | SL2Type::Elliptic { order: 4 } => {
            // central elements are powers of Δ², order-4 elements odd powers of Δ
            if e % 3 != 0 {
                return Err(inconsistent(b, "exponent sum not divisible by 3"));
            }
            ThurstonClass3::Periodic {
                circular: false,
                power: e / 3,
                order: sl2_type(&m).order().expect("finite order"),
            }
        }
        SL2Type::Elliptic { order } => {
            if e % 2 != 0 {
                return Err(inconsistent(b, "odd exponent sum"));
            }
            ThurstonClass3::Periodic {
                circular: true,
                power: e / 2,
                order,
            }
        }
        SL2Type::Parabolic { sign, k } => {
            let k = k
                .to_i64()
                .ok_or_else(|| inconsistent(b, "twist exceeds i64"))?;
            if (e - k) % 6 != 0 {
                return Err(inconsistent(
                    b,
                    "exponent sum minus twist not divisible by 6",
                ));
            }
            let l = (e - k) / 6;
            if (l.rem_euclid(2) == 0) != (sign > 0) {
                return Err(inconsistent(b, "sign disagrees with twist parity"));
            }
            ThurstonClass3::ReducibleParabolic { k, l }
        }
        SL2Type::Hyperbolic { trace } => {
            let s = Spectral::new(&trace, 1).expect("hyperbolic");
            let pair = InvariantPair::from_spectral(s);
            let lambda_log = log_dilatation(&trace);
            ThurstonClass3::PseudoAnosov {
                trace,
                entropy: pair.entropy,
                dilatation: (2.0 * lambda_log).exp(),
                module: pair.module,
            }
        }
    };
    if let Some(rep) = class.representative() {
        if !conjugate_3(b, &rep)? {
            return Err(inconsistent(b, "normal form not conjugate to input"));
        }
    }
    Ok(class)
}

/// Entropy and conformal module for braids on at most three strands.
pub fn invariants_3(b: &BraidWord) -> Result<InvariantPair> {
    match b.strands() {
        1 | 2 => Ok(InvariantPair::zero()),
        3 => Ok(classify_3(b)?.invariants()),
        n => Err(Error::UnsupportedStrandCount(n)),
    }
}

/// Exact entropy data for braids on at most three strands; `None` for zero.
pub fn spectral_3(b: &BraidWord) -> Result<Option<Spectral>> {
    match b.strands() {
        1 | 2 => Ok(None),
        3 => Ok(Spectral::new(&theta(b)?.trace(), 1)),
        n => Err(Error::UnsupportedStrandCount(n)),
    }
}

pub const MAX_SEARCH_LEN: usize = 12;

const LETTERS: [i32; 4] = [1, -1, 2, -2];

/// Shortlex order with letters ranked σ₁ < σ₁⁻¹ < σ₂ < σ₂⁻¹.
pub fn shortlex_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let key = |g: &i32| (g.unsigned_abs(), *g < 0);
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().map(key).cmp(b.iter().map(key)))
}

/// Small fixed-width SL(2,ℤ) arithmetic for enumeration; entries of words up
/// to length 12 stay far below i64 range.
#[derive(Clone, Copy)]
struct Small([i64; 4]);

impl Small {
    const ID: Small = Small([1, 0, 0, 1]);

    fn gen(g: i32) -> Small {
        match g {
            1 => Small([1, 1, 0, 1]),
            -1 => Small([1, -1, 0, 1]),
            2 => Small([1, 0, -1, 1]),
            _ => Small([1, 0, 1, 1]),
        }
    }

    fn mul(self, o: Small) -> Small {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Small([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    fn abs_trace(self) -> i64 {
        (self.0[0] + self.0[3]).abs()
    }
}

#[derive(Clone)]
struct Best {
    trace: i64,
    word: Vec<i32>,
}

fn better(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            let ord = x
                .trace
                .cmp(&y.trace)
                .then_with(|| shortlex_cmp(&x.word, &y.word));
            Some(if ord == Ordering::Greater { y } else { x })
        }
    }
}

fn search_from(prefix: &mut Vec<i32>, m: Small, max_len: usize, best: &mut Option<Best>) {
    let t = m.abs_trace();
    if t > 2 {
        let cand = Some(Best {
            trace: t,
            word: prefix.clone(),
        });
        *best = better(best.take(), cand);
    }
    if prefix.len() == max_len {
        return;
    }
    for g in LETTERS {
        if prefix.last() == Some(&-g) {
            continue;
        }
        prefix.push(g);
        search_from(prefix, m.mul(Small::gen(g)), max_len, best);
        prefix.pop();
    }
}

fn search_threads() -> Option<usize> {
    std::env::var("BRAIDMOD_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
}

/// Among all freely reduced 3-braid words of length at most `max_len`,
/// the shortlex-least word of minimal positive entropy, or `None` when every
/// such word has zero entropy.
///
/// Entropy is increasing in |trace θ(b)|, so the search minimises the
/// trace. Work is split by two-letter prefixes; `BRAIDMOD_THREADS` caps the
/// worker count. The result does not depend on scheduling.
pub fn min_entropy_search(max_len: usize) -> Result<Option<(BraidWord, ExtReal)>> {
    if !(1..=MAX_SEARCH_LEN).contains(&max_len) {
        return Err(Error::LengthBoundExceeded(max_len));
    }
    let mut prefixes: Vec<Vec<i32>> = LETTERS.iter().map(|&g| vec![g]).collect();
    if max_len >= 2 {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                let first = p[0];
                LETTERS
                    .iter()
                    .filter(move |&&g| g != -first)
                    .map(move |&g| vec![first, g])
            })
            .collect();
    }
    let run = |prefix: &Vec<i32>| -> Option<Best> {
        let mut best = None;
        // shorter prefixes of this one are covered by the sweep below
        let m = prefix.iter().fold(Small::ID, |m, &g| m.mul(Small::gen(g)));
        let mut p = prefix.clone();
        search_from(&mut p, m, max_len, &mut best);
        best
    };
    let mut best = match search_threads() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?
            .install(|| prefixes.par_iter().map(run).reduce(|| None, better)),
        None => prefixes.par_iter().map(run).reduce(|| None, better),
    };
    // single letters, only reached directly when prefixes have length two
    if max_len >= 2 {
        for g in LETTERS {
            let m = Small::gen(g);
            if m.abs_trace() > 2 {
                best = better(
                    best,
                    Some(Best {
                        trace: m.abs_trace(),
                        word: vec![g],
                    }),
                );
            }
        }
    }
    Ok(best.map(|b| {
        let word = BraidWord::from_raw(3, b.word);
        let s = Spectral::new(&BigInt::from(b.trace), 1).expect("positive entropy");
        let entropy = ExtReal::Finite {
            value: s.entropy(),
            exact: Some(s),
        };
        (word, entropy)
    }))
}

/// Trace of θ(b) as a signed integer, convenient for reports.
pub fn theta_trace(b: &BraidWord) -> Result<BigInt> {
    Ok(theta(b)?.trace())
}

/// True when the braid has vanishing entropy (|trace θ| ≤ 2).
pub fn has_zero_entropy_3(b: &BraidWord) -> Result<bool> {
    Ok(theta(b)?.trace().abs() <= BigInt::from(2))
}
