//! Torus bundles from SL(2,Z) monodromy, and their 3-braid lifts.

use braidmod::monodromy::{bundle_classify, project_bundle};
use braidmod::{classify_3, sl2_decompose, theta, SL2Matrix};

fn main() -> Result<(), braidmod::Error> {
    let ms = [
        SL2Matrix::new(2, 1, 1, 1)?,
        SL2Matrix::new(1, 1, 0, 1)?,
        SL2Matrix::new(0, -1, 1, 0)?,
        SL2Matrix::new(-5, -2, -7, -3)?,
        SL2Matrix::new(13, 8, 8, 5)?,
    ];
    for m in ms {
        let class = bundle_classify(&m);
        let b = project_bundle(&m);
        let inv = class.invariants();
        println!("{m}  {}  {}", sl2_decompose(&m), class.name());
        println!(
            "    lift {b}  theta {}  {}",
            theta(&b)?,
            classify_3(&b)?.name()
        );
        println!("    h={} M={}", inv.entropy, inv.module);
    }
    Ok(())
}
