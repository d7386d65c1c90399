//! Thurston type, entropy and conformal module of a few 3-braids.
//!
//! cargo run --example classify -- "B3: 1 -2 1"

use braidmod::{classify_3, BraidWord};

fn main() -> Result<(), braidmod::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() {
        vec![
            "B3: 1 -2",
            "B3: 1 1 1",
            "B3: 1 2",
            "B3: 1 2 1",
            "B3: 1 -2 1 -2",
            "B3: 1 1 -2",
        ]
        .into_iter()
        .map(String::from)
        .collect()
    } else {
        args
    };
    for text in words {
        let b: BraidWord = text.parse()?;
        let class = classify_3(&b)?;
        let inv = class.invariants();
        println!(
            "{:<16} {:<20} h={:<20} M={}",
            b.to_string(),
            class.name(),
            inv.entropy.to_string(),
            inv.module
        );
    }
    Ok(())
}
