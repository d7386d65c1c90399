//! Reducible braids as trees of component braids.
//!
//! Synthesis replaces each strand of an attachment orbit by a parallel cable
//! as wide as the child braid, lets the parent word move cables rigidly
//! (block crossings carry no internal crossings) and then plays the child
//! word once on the cable sitting at the orbit's base slot. A cable in an
//! orbit of length `k` therefore meets the child word exactly once every
//! `k` passes, and deleting all other strands from the `k`-th power returns
//! the child word letter for letter.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::b3::spectral_3;
use crate::braid::{BraidWord, StrandOrbit};
use crate::error::{Error, Result};
use crate::invariants::{InvariantPair, Spectral};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub orbit: StrandOrbit,
    pub child: ComponentNode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentNode {
    pub braid: BraidWord,
    pub attachments: Vec<Attachment>,
}

impl ComponentNode {
    pub fn leaf(braid: BraidWord) -> Self {
        ComponentNode {
            braid,
            attachments: Vec::new(),
        }
    }

    pub fn attach(mut self, orbit: StrandOrbit, child: ComponentNode) -> Self {
        self.attachments.push(Attachment { orbit, child });
        self
    }

    /// Strand count after cabling every attachment.
    pub fn total_strands(&self) -> usize {
        self.braid.strands()
            + self
                .attachments
                .iter()
                .map(|a| a.orbit.len() * (a.child.total_strands() - 1))
                .sum::<usize>()
    }

    fn validate(&self) -> Result<()> {
        let n = self.braid.strands();
        let perm = self.braid.permutation();
        let mut used = BTreeSet::new();
        for att in &self.attachments {
            let set = att.orbit.as_set();
            if let Some(&bad) = set.iter().find(|&&s| s > n) {
                return Err(Error::InvalidTree(format!(
                    "orbit position {bad} exceeds {n} strands"
                )));
            }
            let cycle: BTreeSet<usize> = perm.cycle_of(att.orbit.base()).into_iter().collect();
            if cycle != set {
                return Err(Error::InvalidTree(format!(
                    "{:?} is not a cycle of {}",
                    att.orbit.positions(),
                    self.braid
                )));
            }
            if !used.is_disjoint(&set) {
                return Err(Error::InvalidTree(format!(
                    "orbit {:?} overlaps another attachment",
                    att.orbit.positions()
                )));
            }
            used.extend(set);
            att.child.validate()?;
        }
        Ok(())
    }

    fn widths(&self) -> Vec<usize> {
        let mut widths = vec![1; self.braid.strands() + 1];
        for att in &self.attachments {
            let w = att.child.total_strands();
            for &s in att.orbit.positions() {
                widths[s] = w;
            }
        }
        widths
    }

    fn synthesize_into(&self) -> Vec<i32> {
        let widths = self.widths();
        let n = self.braid.strands();
        let mut at: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        for &g in self.braid.letters() {
            let i = g.unsigned_abs() as usize;
            let (a, b) = (widths[at[i - 1]], widths[at[i]]);
            let offset: usize = at[..i - 1].iter().map(|&s| widths[s]).sum();
            block_crossing(offset, a, b, g.signum(), &mut out);
            at.swap(i - 1, i);
        }
        for att in &self.attachments {
            let slot = att.orbit.base();
            let offset: usize = at[..slot - 1].iter().map(|&s| widths[s]).sum();
            let shift = offset as i32;
            out.extend(
                att.child
                    .synthesize_into()
                    .into_iter()
                    .map(|g| g.signum() * (g.abs() + shift)),
            );
        }
        out
    }
}

/// Crossing of adjacent blocks of widths `a` (left) and `b` (right) starting
/// after `offset` strands. Each strand of the right block passes the whole
/// left block in turn, so no two strands of one block cross.
fn block_crossing(offset: usize, a: usize, b: usize, sign: i32, out: &mut Vec<i32>) {
    for j in 0..b {
        for m in (0..a).rev() {
            out.push(sign * (offset + j + m + 1) as i32);
        }
    }
}

/// One component seen from the synthesized braid.
#[derive(Debug, Clone)]
pub struct ComponentView<'a> {
    pub node: &'a ComponentNode,
    /// Strand positions the component's cable occupies at time 0.
    pub block: BTreeSet<usize>,
    /// Absolute cycle length: product of orbit lengths from the root.
    pub cycle_length: u64,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTree {
    pub root: ComponentNode,
}

impl ComponentTree {
    pub fn new(root: ComponentNode) -> Result<Self> {
        root.validate()?;
        Ok(ComponentTree { root })
    }

    pub fn total_strands(&self) -> usize {
        self.root.total_strands()
    }

    pub fn synthesize(&self) -> BraidWord {
        BraidWord::from_raw(self.total_strands(), self.root.synthesize_into())
    }

    /// Every node, depth first, with its time-0 block and cycle length.
    pub fn components(&self) -> Vec<ComponentView<'_>> {
        let mut out = Vec::new();
        collect(&self.root, 0, 1, 0, &mut out);
        out
    }
}

fn collect<'a>(
    node: &'a ComponentNode,
    base: usize,
    cycle_length: u64,
    depth: usize,
    out: &mut Vec<ComponentView<'a>>,
) {
    let width = node.total_strands();
    out.push(ComponentView {
        node,
        block: (base + 1..=base + width).collect(),
        cycle_length,
        depth,
    });
    let widths = node.widths();
    for att in &node.attachments {
        let slot = att.orbit.base();
        let inner: usize = (1..slot).map(|s| widths[s]).sum();
        collect(
            &att.child,
            base + inner,
            cycle_length * att.orbit.len() as u64,
            depth + 1,
            out,
        );
    }
}

pub fn synthesize(tree: &ComponentTree) -> BraidWord {
    tree.synthesize()
}

/// The braid traced by the strands in `block` under `b^k`, renumbered
/// 1..=|block|.
pub fn extract_component(b: &BraidWord, block: &BTreeSet<usize>, k: i64) -> Result<BraidWord> {
    if k < 1 {
        return Err(Error::BadCycleLength(k));
    }
    b.power(k).delete_strands(block)
}

/// Entropy is the maximum over nodes of `h(node) / K(node)` and the module
/// the minimum of `M(node) · K(node)`; both are read off the same maximising
/// node, so `module = π / (2 · entropy)` holds exactly.
pub fn reducible_invariants(tree: &ComponentTree) -> Result<InvariantPair> {
    let mut best: Option<Spectral> = None;
    for view in tree.components() {
        let n = view.node.braid.strands();
        if n > 3 {
            return Err(Error::UnsupportedNodeArity(n));
        }
        if let Some(s) = spectral_3(&view.node.braid)? {
            let s = s.divided(view.cycle_length);
            if best.as_ref().is_none_or(|b| s > *b) {
                best = Some(s);
            }
        }
    }
    Ok(InvariantPair::from_optional(best))
}

/// JSON form: `{"braid": "B3: ...", "attachments": [{"orbit": [2], "child": {...}}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeJson {
    pub braid: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub attachments: Vec<AttachmentJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AttachmentJson {
    pub orbit: Vec<usize>,
    pub child: NodeJson,
}

impl TryFrom<&NodeJson> for ComponentNode {
    type Error = Error;

    fn try_from(j: &NodeJson) -> Result<Self> {
        let mut node = ComponentNode::leaf(j.braid.parse()?);
        for a in &j.attachments {
            node = node.attach(StrandOrbit::new(a.orbit.clone())?, (&a.child).try_into()?);
        }
        Ok(node)
    }
}

impl From<&ComponentNode> for NodeJson {
    fn from(n: &ComponentNode) -> Self {
        NodeJson {
            braid: n.braid.to_string(),
            attachments: n
                .attachments
                .iter()
                .map(|a| AttachmentJson {
                    orbit: a.orbit.positions().to_vec(),
                    child: (&a.child).into(),
                })
                .collect(),
        }
    }
}

impl ComponentTree {
    pub fn from_json(text: &str) -> Result<Self> {
        let j: NodeJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        ComponentTree::new((&j).try_into()?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&NodeJson::from(&self.root)).expect("tree serializes")
    }
}
