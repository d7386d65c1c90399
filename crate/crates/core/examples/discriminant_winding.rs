//! Winding of the discriminant along loops of monic polynomials.

use braidmod::poly::{discriminant, winding_index, PolyLoop};
use num_complex::Complex64;

fn main() -> Result<(), braidmod::Error> {
    let c = |x: f64| Complex64::new(x, 0.0);
    // z^3 - 4z^2 + 3z has roots 0, 1, 3
    println!("disc = {:.9}", discriminant(&[c(0.0), c(3.0), c(-4.0)])?.re);

    for n in [2, 3, 5, 7] {
        let row: Vec<String> = (1..=3)
            .map(|k| winding_index(&PolyLoop::model(n, k, 1024)?).map(|w| w.to_string()))
            .collect::<Result<_, _>>()?;
        println!("n={n}: {}", row.join(" "));
    }

    let flat = PolyLoop::constant(vec![c(-1.0), c(0.0), c(0.0)], 16)?;
    println!("constant loop: {}", winding_index(&flat)?);
    Ok(())
}
