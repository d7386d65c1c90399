//! Exact 2×2 integer matrices of determinant one.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl SL2Matrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = SL2Matrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = &m.a * &m.d - &m.b * &m.c;
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(m)
    }

    fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let m = SL2Matrix { a, b, c, d };
        debug_assert!((&m.a * &m.d - &m.b * &m.c).is_one());
        m
    }

    pub fn identity() -> Self {
        Self::raw(One::one(), Zero::zero(), Zero::zero(), One::one())
    }

    pub fn minus_identity() -> Self {
        -Self::identity()
    }

    /// `[[1, 1], [0, 1]]`, the image of σ₁.
    pub fn r() -> Self {
        Self::raw(1.into(), 1.into(), 0.into(), 1.into())
    }

    /// `[[1, 0], [1, 1]]`, the inverse of the image of σ₂.
    pub fn l() -> Self {
        Self::raw(1.into(), 0.into(), 1.into(), 1.into())
    }

    /// `[[0, -1], [1, 0]]`, of order four.
    pub fn s() -> Self {
        Self::raw(0.into(), (-1).into(), 1.into(), 0.into())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_minus_identity(&self) -> bool {
        *self == Self::minus_identity()
    }

    pub fn classify(&self) -> SL2Type {
        sl2_type(self)
    }
}

impl<'a> Mul<&'a SL2Matrix> for &'a SL2Matrix {
    type Output = SL2Matrix;

    fn mul(self, o: &SL2Matrix) -> SL2Matrix {
        SL2Matrix::raw(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl Mul for SL2Matrix {
    type Output = SL2Matrix;

    fn mul(self, o: SL2Matrix) -> SL2Matrix {
        &self * &o
    }
}

impl Neg for SL2Matrix {
    type Output = SL2Matrix;

    fn neg(self) -> SL2Matrix {
        SL2Matrix::raw(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Trace trichotomy of SL(2,ℤ), refined by the central elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SL2Type {
    Identity,
    MinusIdentity,
    /// Finite order 3, 4 or 6.
    Elliptic {
        order: u8,
    },
    /// Conjugate to `sign · [[1, k], [0, 1]]`.
    Parabolic {
        sign: i8,
        k: BigInt,
    },
    Hyperbolic {
        trace: BigInt,
    },
}

impl SL2Type {
    /// Order in SL(2,ℤ); `None` for infinite order.
    pub fn order(&self) -> Option<u8> {
        match self {
            SL2Type::Identity => Some(1),
            SL2Type::MinusIdentity => Some(2),
            SL2Type::Elliptic { order } => Some(*order),
            _ => None,
        }
    }
}

pub fn sl2_type(m: &SL2Matrix) -> SL2Type {
    let t = m.trace();
    let abs = t.abs();
    let two = BigInt::from(2);
    if abs > two {
        SL2Type::Hyperbolic { trace: t }
    } else if abs == two {
        if m.is_identity() {
            SL2Type::Identity
        } else if m.is_minus_identity() {
            SL2Type::MinusIdentity
        } else {
            let (sign, k) = parabolic_invariant(m).expect("trace ±2 and not central");
            SL2Type::Parabolic { sign, k }
        }
    } else {
        // trace -1: M³ = I; trace 0: M² = -I; trace 1: M³ = -I
        let order = match t.to_i8().expect("|trace| < 2") {
            -1 => 3,
            0 => 4,
            _ => 6,
        };
        SL2Type::Elliptic { order }
    }
}

/// Returns `(sign, k)` with `m` conjugate in SL(2,ℤ) to `sign·[[1,k],[0,1]]`.
///
/// The conjugating basis starts from the primitive integer eigenvector of
/// `sign·m` whose first nonzero coordinate is positive.
pub fn parabolic_invariant(m: &SL2Matrix) -> Result<(i8, BigInt)> {
    let t = m.trace();
    let sign: i8 = if t == BigInt::from(2) {
        1
    } else if t == BigInt::from(-2) {
        -1
    } else {
        return Err(Error::NotParabolic);
    };
    if m.is_identity() || m.is_minus_identity() {
        return Err(Error::NotParabolic);
    }
    let n = if sign > 0 { m.clone() } else { -m.clone() };
    // rows of n - I are proportional; pick a nonzero one
    let (p, q) = if !(&n.a - 1u32).is_zero() || !n.b.is_zero() {
        (&n.a - 1u32, n.b.clone())
    } else {
        (n.c.clone(), &n.d - 1u32)
    };
    let g = p.gcd(&q);
    let (mut v1, mut v2) = (-&q / &g, &p / &g);
    if v1.is_negative() || (v1.is_zero() && v2.is_negative()) {
        v1 = -v1;
        v2 = -v2;
    }
    // complete (v1, v2) to a basis with v1*w2 - v2*w1 = 1
    let eg = v1.extended_gcd(&v2);
    debug_assert!(eg.gcd.is_one());
    let (w1, w2) = (-eg.y, eg.x);
    let nw1 = &n.a * &w1 + &n.b * &w2;
    let nw2 = &n.c * &w1 + &n.d * &w2;
    let (u1, u2) = (nw1 - &w1, nw2 - &w2);
    let k = if !v1.is_zero() { u1 / &v1 } else { u2 / &v2 };
    Ok((sign, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModularLetter {
    R,
    L,
}

impl ModularLetter {
    pub fn matrix(self) -> SL2Matrix {
        match self {
            ModularLetter::R => SL2Matrix::r(),
            ModularLetter::L => SL2Matrix::l(),
        }
    }
}

/// A word in R^{±1}, L^{±1} stored as runs, times an optional −I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularWord {
    pub runs: Vec<(ModularLetter, i64)>,
    pub negated: bool,
}

impl ModularWord {
    fn push(&mut self, letter: ModularLetter, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == letter {
                last.1 += e;
                if last.1 == 0 {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push((letter, e));
    }

    pub fn recompose(&self) -> SL2Matrix {
        let mut m = SL2Matrix::identity();
        for &(letter, e) in &self.runs {
            m = &m * &letter.matrix().pow(e);
        }
        if self.negated {
            -m
        } else {
            m
        }
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty() && !self.negated
    }
}

impl fmt::Display for ModularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.negated {
            parts.push("-I".into());
        }
        for &(letter, e) in &self.runs {
            let name = match letter {
                ModularLetter::R => "R",
                ModularLetter::L => "L",
            };
            parts.push(if e == 1 {
                name.into()
            } else {
                format!("{name}^{e}")
            });
        }
        if parts.is_empty() {
            write!(f, "I")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

fn exponent(q: &BigInt) -> i64 {
    q.to_i64().expect("R/L exponent exceeds i64")
}

/// Writes `m` as a word in R = [[1,1],[0,1]] and L = [[1,0],[1,1]] by
/// Euclidean reduction of the first column, left-multiplying by powers of
/// R and L until it is ±(1, 0).
pub fn sl2_decompose(m: &SL2Matrix) -> ModularWord {
    let mut cur = m.clone();
    // inverses of the applied left factors, in application order
    let mut prefix = ModularWord {
        runs: Vec::new(),
        negated: false,
    };
    while !cur.c.is_zero() {
        if cur.a.is_zero() {
            // c = ±1 here; R^c makes a = 1
            let q = cur.c.clone();
            cur = &SL2Matrix::r().pow(exponent(&q)) * &cur;
            prefix.push(ModularLetter::R, -exponent(&q));
        } else if cur.c.abs() >= cur.a.abs() {
            let q = &cur.c / &cur.a;
            cur = &SL2Matrix::l().pow(-exponent(&q)) * &cur;
            prefix.push(ModularLetter::L, exponent(&q));
        } else {
            // |a| > |c| > 0; never reduce a to zero
            let q = if cur.c.abs().is_one() {
                (&cur.a - cur.a.signum()) * &cur.c
            } else {
                &cur.a / &cur.c
            };
            cur = &SL2Matrix::r().pow(-exponent(&q)) * &cur;
            prefix.push(ModularLetter::R, exponent(&q));
        }
    }
    // cur = ±[[1, k], [0, 1]]
    if cur.a.is_one() {
        prefix.push(ModularLetter::R, exponent(&cur.b));
    } else {
        prefix.push(ModularLetter::R, -exponent(&cur.b));
        prefix.negated = true;
    }
    prefix
}

/// A complete conjugacy invariant of SL(2,ℤ): two matrices are conjugate
/// exactly when their invariants are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConjugacyInvariant {
    Central {
        sign: i8,
    },
    /// The fixed-point form `c x² + (d−a) xy − b y²` is definite; its sign
    /// separates the two classes of each elliptic trace.
    Elliptic {
        trace: i8,
        form_sign: i8,
    },
    Parabolic {
        sign: i8,
        k: BigInt,
    },
    /// Sign of the trace, |trace|, and the lexicographically least even
    /// rotation of the primitive positive R/L cyclic word (as block lengths,
    /// R block first).
    Hyperbolic {
        sign: i8,
        trace: BigInt,
        blocks: Vec<BigInt>,
    },
}

pub fn conjugacy_invariant(m: &SL2Matrix) -> ConjugacyInvariant {
    match sl2_type(m) {
        SL2Type::Identity => ConjugacyInvariant::Central { sign: 1 },
        SL2Type::MinusIdentity => ConjugacyInvariant::Central { sign: -1 },
        SL2Type::Elliptic { .. } => ConjugacyInvariant::Elliptic {
            trace: m.trace().to_i8().expect("elliptic trace"),
            form_sign: if m.c.is_positive() { 1 } else { -1 },
        },
        SL2Type::Parabolic { sign, k } => ConjugacyInvariant::Parabolic { sign, k },
        SL2Type::Hyperbolic { trace } => {
            let sign: i8 = if trace.is_positive() { 1 } else { -1 };
            let n = if sign > 0 { m.clone() } else { -m.clone() };
            ConjugacyInvariant::Hyperbolic {
                sign,
                trace: trace.abs(),
                blocks: positive_cycle(&n),
            }
        }
    }
}

pub fn sl2_conjugate(x: &SL2Matrix, y: &SL2Matrix) -> bool {
    x.trace() == y.trace() && conjugacy_invariant(x) == conjugacy_invariant(y)
}

/// Primitive positive cyclic word of a hyperbolic matrix with trace > 2,
/// read off the periodic continued fraction of its attracting fixed point
/// `((a−d) + √D) / 2c`, `D = t² − 4`.
fn positive_cycle(n: &SL2Matrix) -> Vec<BigInt> {
    let t = n.trace();
    let disc = &t * &t - 4u32;
    let root = disc.sqrt();
    let mut p = &n.a - &n.d;
    let mut q = BigInt::from(2) * &n.c;
    debug_assert!(!q.is_zero());
    debug_assert!((&disc - &p * &p).is_multiple_of(&q));

    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients: Vec<BigInt> = Vec::new();
    let start = loop {
        if let Some(&i) = seen.get(&(p.clone(), q.clone())) {
            break i;
        }
        seen.insert((p.clone(), q.clone()), quotients.len());
        // floor((p + √D) / q), exact since √D is irrational
        let num = if q.is_negative() {
            &p + &root + 1u32
        } else {
            &p + &root
        };
        let a = num.div_floor(&q);
        let p_next = &a * &q - &p;
        let q_next = (&disc - &p_next * &p_next) / &q;
        quotients.push(a);
        p = p_next;
        q = q_next;
    };
    let period = &quotients[start..];
    // blocks at even absolute index are R-blocks
    let mut cycle: Vec<BigInt> = if start % 2 == 0 {
        period.to_vec()
    } else {
        period[1..]
            .iter()
            .chain(period[..1].iter())
            .cloned()
            .collect()
    };
    if period.len() % 2 == 1 {
        let again = cycle.clone();
        cycle.extend(again);
    }
    (0..cycle.len())
        .step_by(2)
        .map(|r| {
            cycle[r..]
                .iter()
                .chain(cycle[..r].iter())
                .cloned()
                .collect::<Vec<_>>()
        })
        .min()
        .expect("nonempty cycle")
}

/// Multiplies out a positive word given as alternating R/L block lengths.
pub fn positive_word_matrix(blocks: &[BigInt]) -> SL2Matrix {
    let mut m = SL2Matrix::identity();
    for (i, e) in blocks.iter().enumerate() {
        let g = if i % 2 == 0 {
            SL2Matrix::r()
        } else {
            SL2Matrix::l()
        };
        m = &m * &g.pow(exponent(e));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> SL2Matrix {
        SL2Matrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn determinant_is_checked() {
        assert!(matches!(
            SL2Matrix::new(2, 0, 0, 1),
            Err(Error::NotUnimodular(_))
        ));
        let x = m(2, 1, 1, 1);
        assert_eq!(&x * &x.inverse(), SL2Matrix::identity());
    }

    #[test]
    fn types() {
        assert_eq!(
            sl2_type(&m(2, 1, 1, 1)),
            SL2Type::Hyperbolic { trace: 3.into() }
        );
        assert_eq!(sl2_type(&m(0, 1, -1, 1)), SL2Type::Elliptic { order: 6 });
        assert_eq!(sl2_type(&m(0, -1, 1, 0)), SL2Type::Elliptic { order: 4 });
        assert_eq!(sl2_type(&m(-1, 1, -1, 0)), SL2Type::Elliptic { order: 3 });
        assert_eq!(
            sl2_type(&m(1, 3, 0, 1)),
            SL2Type::Parabolic {
                sign: 1,
                k: 3.into()
            }
        );
        assert_eq!(sl2_type(&SL2Matrix::identity()), SL2Type::Identity);
        assert_eq!(
            sl2_type(&SL2Matrix::minus_identity()),
            SL2Type::MinusIdentity
        );
    }

    #[test]
    fn elliptic_orders_by_direct_power() {
        for x in [
            m(0, 1, -1, 1),
            m(0, -1, 1, 0),
            m(-1, 1, -1, 0),
            m(1, -1, 1, 0),
        ] {
            let order = sl2_type(&x).order().unwrap() as i64;
            assert!(x.pow(order).is_identity());
            for e in 1..order {
                assert!(!x.pow(e).is_identity());
            }
        }
    }

    #[test]
    fn parabolic_normal_forms() {
        assert_eq!(parabolic_invariant(&m(1, 3, 0, 1)).unwrap(), (1, 3.into()));
        assert_eq!(parabolic_invariant(&m(1, 0, -3, 1)).unwrap(), (1, 3.into()));
        assert_eq!(
            parabolic_invariant(&m(-1, 2, 0, -1)).unwrap(),
            (-1, (-2).into())
        );
        assert_eq!(
            parabolic_invariant(&m(2, 1, 1, 1)),
            Err(Error::NotParabolic)
        );
        assert_eq!(
            parabolic_invariant(&SL2Matrix::identity()),
            Err(Error::NotParabolic)
        );
    }

    #[test]
    fn parabolic_invariant_is_conjugation_invariant() {
        let base = m(1, 5, 0, 1);
        let g = m(2, 3, 5, 8);
        let conj = &(&g.inverse() * &base) * &g;
        assert_eq!(parabolic_invariant(&conj).unwrap(), (1, 5.into()));
        let neg = -m(1, -4, 0, 1);
        let conj = &(&g * &neg) * &g.inverse();
        assert_eq!(parabolic_invariant(&conj).unwrap(), (-1, (-4).into()));
    }

    #[test]
    fn decompositions() {
        let rl = sl2_decompose(&m(2, 1, 1, 1));
        assert_eq!(rl.runs, vec![(ModularLetter::R, 1), (ModularLetter::L, 1)]);
        assert!(!rl.negated);
        let s = sl2_decompose(&m(0, -1, 1, 0));
        assert_eq!(
            s.runs,
            vec![
                (ModularLetter::R, -1),
                (ModularLetter::L, 1),
                (ModularLetter::R, -1)
            ]
        );
        assert!(sl2_decompose(&SL2Matrix::identity()).is_empty());
        let minus = sl2_decompose(&SL2Matrix::minus_identity());
        assert!(minus.negated && minus.runs.is_empty());
        for x in [
            m(5, 2, 7, 3),
            m(-3, 7, 2, -5),
            m(1, 0, -9, 1),
            m(13, -8, -8, 5),
        ] {
            assert_eq!(sl2_decompose(&x).recompose(), x);
        }
    }

    #[test]
    fn hyperbolic_cycle_of_positive_words() {
        // R L has fixed point with period [1, 1]
        let inv = conjugacy_invariant(&m(2, 1, 1, 1));
        match inv {
            ConjugacyInvariant::Hyperbolic { blocks, .. } => {
                assert_eq!(blocks, vec![BigInt::from(1), BigInt::from(1)]);
            }
            other => panic!("{other:?}"),
        }
        // R² L³ R L
        let blocks: Vec<BigInt> = [2, 3, 1, 1].iter().map(|&x| BigInt::from(x)).collect();
        let w = positive_word_matrix(&blocks);
        match conjugacy_invariant(&w) {
            ConjugacyInvariant::Hyperbolic { blocks: got, .. } => {
                let want: Vec<BigInt> = [1, 1, 2, 3].iter().map(|&x| BigInt::from(x)).collect();
                assert_eq!(got, want);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn conjugacy_examples() {
        let x = m(2, 1, 1, 1);
        let g = m(3, 2, 1, 1);
        let y = &(&g * &x) * &g.inverse();
        assert!(sl2_conjugate(&x, &y));
        // R L vs R² : different types
        assert!(!sl2_conjugate(&x, &m(1, 2, 0, 1)));
        // R² L and R L² share the trace 4 but are conjugate only in GL(2,Z)
        let a = positive_word_matrix(&[2.into(), 1.into()]);
        let b = positive_word_matrix(&[1.into(), 2.into()]);
        assert_eq!(a.trace(), b.trace());
        assert!(!sl2_conjugate(&a, &b));
        let c = positive_word_matrix(&[1.into(), 2.into(), 3.into(), 4.into()]);
        let d = positive_word_matrix(&[3.into(), 4.into(), 1.into(), 2.into()]);
        assert!(sl2_conjugate(&c, &d));
        // the two classes of order 4
        assert!(!sl2_conjugate(&SL2Matrix::s(), &SL2Matrix::s().inverse()));
        assert!(sl2_conjugate(
            &SL2Matrix::s(),
            &(&(&g * &SL2Matrix::s()) * &g.inverse())
        ));
    }
}
