//! Word and conjugacy problems in B3 through the map to SL(2,Z).

use braidmod::{conjugate_3, equal_3, full_twist, is_trivial_3, theta, BraidWord};

fn main() -> Result<(), braidmod::Error> {
    let w = |s: &str| s.parse::<BraidWord>();

    let braid_relation = w("B3: 1 2 1 -2 -1 -2")?;
    println!(
        "{braid_relation} trivial: {}",
        is_trivial_3(&braid_relation)?
    );

    // Δ⁴ maps to the identity matrix but is not the identity braid
    let d4 = full_twist(3)?.power(2);
    println!(
        "theta(Δ⁴) = {}, trivial: {}",
        theta(&d4)?,
        is_trivial_3(&d4)?
    );

    let c = braidmod::BraidWord::commutator(&w("B3: 1")?, &w("B3: 2")?)?;
    println!("[s1, s2] = {c}, theta = {}", theta(&c)?);

    println!(
        "(1 2 1)^2 == (1 2)^3: {}",
        equal_3(&w("B3: 1 2 1")?.power(2), &w("B3: 1 2")?.power(3))?
    );
    println!("s1 ~ s2: {}", conjugate_3(&w("B3: 1")?, &w("B3: 2")?)?);
    println!("s1 ~ s1^-1: {}", conjugate_3(&w("B3: 1")?, &w("B3: -1")?)?);
    println!(
        "1 1 -2 ~ 1 -2 -2: {}",
        conjugate_3(&w("B3: 1 1 -2")?, &w("B3: 1 -2 -2")?)?
    );
    Ok(())
}
