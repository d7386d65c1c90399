//! Braid words in Artin generators and the combinatorics around them:
//! permutations, strand deletion and pairwise linking numbers.
//!
//! Conventions: strands and positions are one-based, words are read left to
//! right, and `a.compose(&b)` performs `a` first. A positive letter `g` is
//! the generator σ_g, a negative letter is its inverse.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word after checking that every letter names a generator of
    /// the braid group on `strands` strands.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BadStrandCount(0));
        }
        for &g in &letters {
            if g == 0 {
                return Err(Error::ZeroLetter);
            }
            if g.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange {
                    letter: g as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// The single generator σ_g (or its inverse for negative `g`).
    pub fn generator(strands: usize, g: i32) -> Result<Self> {
        BraidWord::new(strands, vec![g])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_raw(self.strands, letters))
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|g| -g).collect();
        BraidWord::from_raw(self.strands, letters)
    }

    /// `self` raised to an arbitrary integer power; zero gives the identity.
    pub fn power(&self, exponent: i64) -> BraidWord {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let reps = exponent.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_raw(self.strands, letters)
    }

    /// `w⁻¹ · self · w`.
    pub fn conjugate_by(&self, w: &BraidWord) -> Result<BraidWord> {
        w.inverse().compose(self)?.compose(w)
    }

    /// The commutator `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
        a.compose(b)?.compose(&a.inverse())?.compose(&b.inverse())
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord::from_raw(self.strands, out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// The underlying permutation τ(b), a homomorphism with
    /// `τ(ab) = τ(a) ∘ τ(b)`.
    ///
    /// `images[p]` is the starting position of the strand that ends at
    /// position `p`.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Keeps only the strands that start at the positions in `keep` and
    /// renumbers them 1..=|keep| by relative position.
    ///
    /// `keep` must be setwise invariant under the braid permutation.
    pub fn delete_strands(&self, keep: &BTreeSet<usize>) -> Result<BraidWord> {
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let n = self.strands;
        if let Some(&bad) = keep.iter().find(|&&s| s == 0 || s > n) {
            return Err(Error::StrandOutOfRange {
                index: bad,
                strands: n,
            });
        }
        let perm = self.permutation();
        if keep.iter().any(|&s| !keep.contains(&perm.apply(s))) {
            return Err(Error::KeepNotInvariant);
        }

        let mut kept = vec![false; n + 1];
        for &s in keep {
            kept[s] = true;
        }
        // at[p - 1] = starting label of the strand now at position p
        let mut at: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            let (left, right) = (at[i - 1], at[i]);
            if kept[left] && kept[right] {
                let rel = at[..i].iter().filter(|&&s| kept[s]).count() as i32;
                out.push(g.signum() * rel);
            }
            at.swap(i - 1, i);
        }
        Ok(BraidWord::from_raw(keep.len(), out))
    }

    /// Linking number of two strands that the braid leaves in place: the
    /// 2-strand braid left after deleting every other strand is σ^{2m};
    /// returns m.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64> {
        let n = self.strands;
        for s in [i, j] {
            if s == 0 || s > n {
                return Err(Error::StrandOutOfRange {
                    index: s,
                    strands: n,
                });
            }
        }
        let perm = self.permutation();
        if i == j || perm.apply(i) != i || perm.apply(j) != j {
            return Err(Error::StrandsNotFixed(i, j));
        }
        let pair: BTreeSet<usize> = [i, j].into_iter().collect();
        let twist = self.delete_strands(&pair)?.exponent_sum();
        debug_assert!(twist % 2 == 0, "fixed pair crossed an odd number of times");
        Ok(twist / 2)
    }
}

/// The Garside element Δ_n = (σ₁)(σ₂σ₁)…(σ_{n−1}…σ₁), the positive half twist.
pub fn garside(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::BadStrandCount(n));
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in 1..n as i32 {
        letters.extend((1..=top).rev());
    }
    Ok(BraidWord::from_raw(n, letters))
}

/// Δ_n², the full twist generating the center.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    Ok(garside(n)?.power(2))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts `B<n>: g1 g2 ...` or a bare list of letters, in which case the
    /// strand count is one more than the largest generator index.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (strands, body) = match text.strip_prefix('B') {
            Some(rest) => {
                let colon = rest
                    .find(':')
                    .ok_or_else(|| Error::MalformedToken(text.to_string()))?;
                let head = rest[..colon].trim();
                let n: usize = head
                    .parse()
                    .map_err(|_| Error::MalformedToken(format!("B{head}")))?;
                (Some(n), &rest[colon + 1..])
            }
            None => (None, text),
        };
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let g: i64 = tok
                .parse()
                .map_err(|_| Error::MalformedToken(tok.to_string()))?;
            if g == 0 {
                return Err(Error::ZeroLetter);
            }
            let g = i32::try_from(g).map_err(|_| Error::MalformedToken(tok.to_string()))?;
            letters.push(g);
        }
        let strands = match strands {
            Some(n) => n,
            None => {
                1 + letters
                    .iter()
                    .map(|g| g.unsigned_abs() as usize)
                    .max()
                    .unwrap_or(0)
            }
        };
        BraidWord::new(strands, letters)
    }
}

pub fn parse_braid(text: &str) -> Result<BraidWord> {
    text.parse()
}

/// A bijection of {1..n}, stored as one-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation of {1..n} from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n {
                    return Err(Error::InvalidPermutation(format!("{cycle:?}")));
                }
                images[x - 1] = y;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    /// All cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// The cycle through `x`, starting at `x`.
    pub fn cycle_of(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.apply(x);
        while y != x {
            cycle.push(y);
            y = self.apply(y);
        }
        cycle
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// An ordered cycle of distinct strand positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandOrbit {
    positions: Vec<usize>,
}

impl StrandOrbit {
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let set: BTreeSet<usize> = positions.iter().copied().collect();
        if set.len() != positions.len() || set.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "orbit positions must be distinct and positive: {positions:?}"
            )));
        }
        Ok(StrandOrbit { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn base(&self) -> usize {
        self.positions[0]
    }

    pub fn as_set(&self) -> BTreeSet<usize> {
        self.positions.iter().copied().collect()
    }
}
