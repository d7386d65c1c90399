#![allow(dead_code)]

use std::collections::BTreeMap;

use braidmod::braid::{BraidWord, StrandOrbit};
use braidmod::cabling::{ComponentNode, ComponentTree};
use rand::rngs::StdRng;
use rand::Rng;

pub const LETTERS: [i32; 4] = [1, -1, 2, -2];

pub fn w(text: &str) -> BraidWord {
    text.parse().unwrap()
}

/// Every freely reduced B₃ word of length exactly `len`.
pub fn reduced_words(len: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i32>| {
                LETTERS
                    .iter()
                    .filter(|&&g| p.last() != Some(&-g))
                    .map(|&g| {
                        let mut q = p.clone();
                        q.push(g);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

pub fn reduced_words_up_to(len: usize) -> Vec<BraidWord> {
    (0..=len)
        .flat_map(reduced_words)
        .map(|l| BraidWord::new(3, l).unwrap())
        .collect()
}

pub fn random_word(rng: &mut StdRng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

fn random_node(rng: &mut StdRng, depth: usize, max_depth: usize) -> ComponentNode {
    let strands = rng.gen_range(2..=3);
    let braid = random_word(rng, strands, 6);
    let mut node = ComponentNode::leaf(braid.clone());
    if depth < max_depth {
        for cycle in braid.permutation().cycles() {
            if rng.gen_bool(0.4) {
                let orbit = StrandOrbit::new(cycle).unwrap();
                node = node.attach(orbit, random_node(rng, depth + 1, max_depth));
            }
        }
    }
    node
}

/// Random tree of B₂/B₃ nodes with at most `max_depth` levels below the root.
pub fn random_tree(rng: &mut StdRng, max_depth: usize) -> ComponentTree {
    ComponentTree::new(random_node(rng, 0, max_depth)).unwrap()
}

/// Laurent polynomial in t with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent(BTreeMap<i32, i64>);

impl Laurent {
    pub fn mono(e: i32, c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Laurent(m)
    }

    fn add(&self, o: &Laurent) -> Laurent {
        let mut m = self.0.clone();
        for (&e, &c) in &o.0 {
            let v = m.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                m.remove(&e);
            }
        }
        Laurent(m)
    }

    fn mul(&self, o: &Laurent) -> Laurent {
        let mut acc = Laurent::default();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &o.0 {
                acc = acc.add(&Laurent::mono(e1 + e2, c1 * c2));
            }
        }
        acc
    }
}

pub type Burau = [Laurent; 4];

fn bmul(x: &Burau, y: &Burau) -> Burau {
    [
        x[0].mul(&y[0]).add(&x[1].mul(&y[2])),
        x[0].mul(&y[1]).add(&x[1].mul(&y[3])),
        x[2].mul(&y[0]).add(&x[3].mul(&y[2])),
        x[2].mul(&y[1]).add(&x[3].mul(&y[3])),
    ]
}

fn burau_letter(g: i32) -> Burau {
    let m = Laurent::mono;
    match g {
        1 => [m(1, -1), m(0, 1), m(0, 0), m(0, 1)],
        -1 => [m(-1, -1), m(-1, 1), m(0, 0), m(0, 1)],
        2 => [m(0, 1), m(0, 0), m(1, 1), m(1, -1)],
        -2 => [m(0, 1), m(0, 0), m(0, 1), m(-1, -1)],
        _ => panic!("not a B3 letter: {g}"),
    }
}

/// Reduced Burau image, faithful on B₃.
pub fn burau(b: &BraidWord) -> Burau {
    let id = [
        Laurent::mono(0, 1),
        Laurent::default(),
        Laurent::default(),
        Laurent::mono(0, 1),
    ];
    b.letters()
        .iter()
        .fold(id, |acc, &g| bmul(&acc, &burau_letter(g)))
}
