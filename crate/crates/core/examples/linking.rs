//! Permutations, strand deletion and pairwise linking numbers.

use std::collections::BTreeSet;

use braidmod::{full_twist, BraidWord};

fn main() -> Result<(), braidmod::Error> {
    let b: BraidWord = "B4: 1 2 3 1 2 1 1 2 1 3 2 1".parse()?;
    println!("{b}");
    println!("permutation {}", b.permutation());

    let p = b.power(b.permutation().order() as i64);
    println!("pure power has {} letters", p.len());
    for i in 1..=4 {
        for j in i + 1..=4 {
            print!("lk({i},{j})={} ", p.linking_number(i, j)?);
        }
    }
    println!();

    let keep: BTreeSet<usize> = [1, 3].into_iter().collect();
    println!(
        "Δ4² on strands 1,3: {}",
        full_twist(4)?.delete_strands(&keep)?.free_reduce()
    );

    // σ1^{2k} Δ3^{2l} links as (k + l, l, l)
    let (k, l) = (2, -1);
    let t = BraidWord::generator(3, 1)?
        .power(2 * k)
        .compose(&full_twist(3)?.power(l))?;
    println!(
        "k={k} l={l}: ({}, {}, {})",
        t.linking_number(1, 2)?,
        t.linking_number(1, 3)?,
        t.linking_number(2, 3)?
    );
    Ok(())
}
