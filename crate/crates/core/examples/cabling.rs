//! Build a braid from a tree of components, then pull a component back out.

use braidmod::braid::StrandOrbit;
use braidmod::{extract_component, ComponentNode, ComponentTree};

fn main() -> Result<(), braidmod::Error> {
    let inner = ComponentNode::leaf("B2: 1 1 1".parse()?);
    let child =
        ComponentNode::leaf("B3: 1 1 -2 -2".parse()?).attach(StrandOrbit::new(vec![3])?, inner);
    let tree = ComponentTree::new(
        ComponentNode::leaf("B3: 1 2".parse()?).attach(StrandOrbit::new(vec![1, 2, 3])?, child),
    )?;
    let b = tree.synthesize();
    println!("{} strands, {} letters", b.strands(), b.len());
    println!("{}", tree.to_json());

    for view in tree.components() {
        let got = extract_component(&b, &view.block, view.cycle_length as i64)?;
        println!(
            "depth {} block {:?} K={} -> {} (exp sum {})",
            view.depth,
            view.block,
            view.cycle_length,
            got.free_reduce(),
            got.exponent_sum()
        );
    }
    Ok(())
}
