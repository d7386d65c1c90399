//! Finite models of quasipolynomials over surfaces and of elliptic fiber
//! bundles: homomorphisms of surface groups into braid groups, monodromy
//! matrices in SL(2,ℤ), and checkers for the reducibility criteria that
//! apply to them.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::b3::{has_zero_entropy_3, is_trivial_3};
use crate::braid::{full_twist, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::invariants::{ExtReal, InvariantPair, Spectral};
use crate::sl2::{sl2_decompose, sl2_type, ModularLetter, SL2Matrix, SL2Type};

/// A homomorphism from the fundamental group of a genus-`g` surface with one
/// boundary circle into B_n, given on the standard generators
/// `a₁, b₁, …, a_g, b_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceHom {
    strands: usize,
    genus: usize,
    images: Vec<BraidWord>,
}

impl SurfaceHom {
    pub fn new(strands: usize, genus: usize, images: Vec<BraidWord>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::DegenerateSurface("genus must be at least 1".into()));
        }
        if images.len() != 2 * genus {
            return Err(Error::InvalidInput(format!(
                "genus {genus} needs {} images, got {}",
                2 * genus,
                images.len()
            )));
        }
        if let Some(b) = images.iter().find(|b| b.strands() != strands) {
            return Err(Error::StrandMismatch(strands, b.strands()));
        }
        Ok(SurfaceHom {
            strands,
            genus,
            images,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[BraidWord] {
        &self.images
    }

    /// Orbits of the permutation group generated by the images.
    pub fn orbit_partition(&self) -> Vec<Vec<usize>> {
        let perms: Vec<Permutation> = self.images.iter().map(|b| b.permutation()).collect();
        orbits(self.strands, &perms)
    }

    /// One orbit: the quasipolynomial is irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.orbit_partition().len() == 1
    }

    /// Only singleton orbits: the quasipolynomial splits into degree-one factors.
    pub fn is_solvable(&self) -> bool {
        self.orbit_partition().iter().all(|o| o.len() == 1)
    }

    /// Image of the boundary loop, `Π [Φ(a_j), Φ(b_j)]`.
    pub fn boundary_monodromy(&self) -> BraidWord {
        let mut acc = BraidWord::identity(self.strands).expect("strands >= 1");
        for pair in self.images.chunks(2) {
            let c = BraidWord::commutator(&pair[0], &pair[1]).expect("same strands");
            acc = acc.compose(&c).expect("same strands");
        }
        acc
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SurfaceHomJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let images = j
            .images
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BraidWord>>>()?;
        SurfaceHom::new(j.n, j.genus, images)
    }
}

/// JSON form: `{"n": 3, "genus": 1, "images": ["B3: 1 2", "B3:"]}`.
#[derive(Debug, Serialize, Deserialize)]
struct SurfaceHomJson {
    n: usize,
    genus: usize,
    images: Vec<String>,
}

fn orbits(n: usize, perms: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut y = x;
        while parent[y] != root {
            let next = parent[y];
            parent[y] = root;
            y = next;
        }
        root
    }
    for p in perms {
        for x in 1..=n {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, p.apply(x)));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n + 1];
    for x in 1..=n {
        let r = find(&mut parent, x);
        if index[r] == usize::MAX {
            index[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index[r]].push(x);
    }
    groups
}

/// Outcome of a checker whose conclusion is a theorem: `Contradiction` would
/// falsify it and is never expected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutatorVerdict {
    /// Hypothesis holds and `[b₁, b₂]` was confirmed trivial.
    CommutatorTrivial {
        via: &'static str,
    },
    HypothesisFails {
        which: &'static str,
    },
    Contradiction {
        witness: String,
    },
}

/// For 3-braids `b₁, b₂` with `h(b₁) = h(b₂) = h([b₁,b₂]) = 0` and either
/// one of them pure or `h(b₂b₁⁻¹) = h(b₂b₁⁻²) = 0`, the commutator is
/// trivial. Checks the hypothesis, then the conclusion with the exact word
/// problem.
pub fn zero_entropy_commutator_check(b1: &BraidWord, b2: &BraidWord) -> Result<CommutatorVerdict> {
    for b in [b1, b2] {
        if b.strands() != 3 {
            return Err(Error::NotThreeStrands(b.strands()));
        }
    }
    let comm = BraidWord::commutator(b1, b2)?;
    if !has_zero_entropy_3(b1)? {
        return Ok(CommutatorVerdict::HypothesisFails { which: "h(b1) > 0" });
    }
    if !has_zero_entropy_3(b2)? {
        return Ok(CommutatorVerdict::HypothesisFails { which: "h(b2) > 0" });
    }
    if !has_zero_entropy_3(&comm)? {
        return Ok(CommutatorVerdict::HypothesisFails {
            which: "h([b1,b2]) > 0",
        });
    }
    let via = if b1.is_pure() || b2.is_pure() {
        "pure"
    } else {
        let inv = b1.inverse();
        if !has_zero_entropy_3(&b2.compose(&inv)?)? {
            return Ok(CommutatorVerdict::HypothesisFails {
                which: "neither braid pure and h(b2 b1^-1) > 0",
            });
        }
        if !has_zero_entropy_3(&b2.compose(&inv)?.compose(&inv)?)? {
            return Ok(CommutatorVerdict::HypothesisFails {
                which: "neither braid pure and h(b2 b1^-2) > 0",
            });
        }
        "entropy"
    };
    if is_trivial_3(&comm)? {
        Ok(CommutatorVerdict::CommutatorTrivial { via })
    } else {
        Ok(CommutatorVerdict::Contradiction {
            witness: comm.to_string(),
        })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The constant `2π / log 2` in the annulus criterion.
pub const GORIN_LIN_R0: f64 = 2.0 * PI / LN_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GorinLinVerdict {
    MustBeReducible,
    Inconclusive,
}

/// A separable algebroid function of prime degree `n` on an annulus of
/// conformal module above `r₀·n` whose discriminant index is divisible by
/// `n` is reducible.
pub fn gorin_lin_check(n: u64, annulus_module: f64, disc_index: i64) -> Result<GorinLinVerdict> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    if annulus_module.is_nan() || annulus_module <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "annulus module must be positive, got {annulus_module}"
        )));
    }
    if annulus_module > GORIN_LIN_R0 * n as f64 && disc_index.rem_euclid(n as i64) == 0 {
        Ok(GorinLinVerdict::MustBeReducible)
    } else {
        Ok(GorinLinVerdict::Inconclusive)
    }
}

/// Lower bound `log 2 / (4n − 8)` on positive entropies of n-braids.
pub fn penner_bound(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::BadStrandCount(n));
    }
    Ok(LN_2 / (4 * n - 8) as f64)
}

/// Lower bound `log 2 / (12g − 12 + 4s)` for genus `g` with `s` marked points.
pub fn penner_bound_gs(genus: u64, punctures: u64) -> Result<f64> {
    let denom = 12 * genus as i128 - 12 + 4 * punctures as i128;
    if 3 * genus as i128 - 3 + punctures as i128 <= 0 {
        return Err(Error::DegenerateSurface(format!(
            "3g - 3 + s must be positive (g = {genus}, s = {punctures})"
        )));
    }
    Ok(LN_2 / denom as f64)
}

/// Type of a torus bundle over the circle, from its monodromy matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum BundleClass {
    Periodic {
        order: u8,
    },
    ParabolicTwist {
        sign: i8,
        k: BigInt,
    },
    Anosov {
        trace: BigInt,
        entropy: ExtReal,
        module: ExtReal,
    },
}

impl BundleClass {
    pub fn name(&self) -> &'static str {
        match self {
            BundleClass::Periodic { .. } => "periodic",
            BundleClass::ParabolicTwist { .. } => "parabolic_twist",
            BundleClass::Anosov { .. } => "anosov",
        }
    }

    pub fn invariants(&self) -> InvariantPair {
        match self {
            BundleClass::Anosov {
                entropy, module, ..
            } => InvariantPair {
                entropy: entropy.clone(),
                module: module.clone(),
            },
            _ => InvariantPair::zero(),
        }
    }
}

pub fn bundle_classify(m: &SL2Matrix) -> BundleClass {
    match sl2_type(m) {
        SL2Type::Hyperbolic { trace } => {
            let pair = InvariantPair::from_spectral(Spectral::new(&trace, 1).expect("hyperbolic"));
            BundleClass::Anosov {
                trace,
                entropy: pair.entropy,
                module: pair.module,
            }
        }
        SL2Type::Parabolic { sign, k } => BundleClass::ParabolicTwist { sign, k },
        other => BundleClass::Periodic {
            order: other.order().expect("finite order"),
        },
    }
}

/// A 3-braid with θ-image exactly `m`: R ↦ σ₁, L ↦ σ₂⁻¹, −I ↦ Δ₃².
pub fn project_bundle(m: &SL2Matrix) -> BraidWord {
    let word = sl2_decompose(m);
    let mut letters = Vec::new();
    for &(letter, e) in &word.runs {
        let (g, e) = match letter {
            ModularLetter::R => (1, e),
            ModularLetter::L => (2, -e),
        };
        let g = if e < 0 { -g } else { g };
        letters.extend(std::iter::repeat_n(g, e.unsigned_abs() as usize));
    }
    let mut b = BraidWord::from_raw(3, letters);
    if word.negated {
        b = b
            .compose(&full_twist(3).expect("n = 3"))
            .expect("same strands");
    }
    b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianVerdict {
    /// Abelian and transitive, and generated by this n-cycle.
    CyclicVerified {
        generator: Permutation,
    },
    HypothesisFails {
        which: &'static str,
    },
    Contradiction {
        witness: String,
    },
}

/// An abelian transitive subgroup of S_n for prime n is cyclic, generated by
/// an n-cycle.
pub fn abelian_transitive_check(perms: &[Permutation], n: u64) -> Result<AbelianVerdict> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let degree = n as usize;
    if let Some(p) = perms.iter().find(|p| p.degree() != degree) {
        return Err(Error::InvalidInput(format!(
            "permutation {p} is not on {n} points"
        )));
    }
    for (i, p) in perms.iter().enumerate() {
        for q in &perms[i + 1..] {
            if p.compose(q) != q.compose(p) {
                return Ok(AbelianVerdict::HypothesisFails {
                    which: "not abelian",
                });
            }
        }
    }
    if orbits(degree, perms).len() != 1 {
        return Ok(AbelianVerdict::HypothesisFails {
            which: "not transitive",
        });
    }
    let generator = perms
        .iter()
        .find(|p| !p.is_identity())
        .expect("transitive on a prime number of points");
    let cycles = generator.cycles();
    if cycles.len() != 1 {
        return Ok(AbelianVerdict::Contradiction {
            witness: format!("{generator} is not an {n}-cycle"),
        });
    }
    let powers: Vec<Permutation> = (0..n).map(|e| generator.pow(e)).collect();
    if let Some(p) = perms.iter().find(|p| !powers.contains(p)) {
        return Ok(AbelianVerdict::Contradiction {
            witness: format!("{p} is not a power of {generator}"),
        });
    }
    Ok(AbelianVerdict::CyclicVerified {
        generator: generator.clone(),
    })
}
