//! Entropy and module of a reducible braid from its component tree.
//!
//! cargo run --example reducible_entropy -- tree.json

use braidmod::{reducible_invariants, ComponentTree};

const DEFAULT: &str = r#"{
  "braid": "B2: 1",
  "attachments": [{"orbit": [1, 2], "child": {"braid": "B3: 1 -2", "attachments": []}}]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let tree = ComponentTree::from_json(&text)?;
    for v in tree.components() {
        println!("node {} K={}", v.node.braid, v.cycle_length);
    }
    let inv = reducible_invariants(&tree)?;
    println!("composite {}", tree.synthesize());
    println!("entropy={} module={}", inv.entropy, inv.module);
    Ok(())
}
