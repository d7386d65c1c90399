//! Boundary monodromy of surface homomorphisms and the reducibility checks
//! built on it.

use braidmod::braid::Permutation;
use braidmod::monodromy::{
    abelian_transitive_check, gorin_lin_check, penner_bound, penner_bound_gs,
    zero_entropy_commutator_check, SurfaceHom, GORIN_LIN_R0,
};
use braidmod::{equal_3, full_twist, theta, BraidWord};

fn main() -> Result<(), braidmod::Error> {
    let h = SurfaceHom::from_json(r#"{"n": 3, "genus": 1, "images": ["B3: -2 1", "B3: 2 -1"]}"#)?;
    let boundary = h.boundary_monodromy();
    let expected = "B3: -2 -2 -2 -2 -2 -2"
        .parse::<BraidWord>()?
        .compose(&full_twist(3)?)?;
    println!("boundary {boundary}");
    println!(
        "  theta {}  equals s2^-6 Δ²: {}",
        theta(&boundary)?,
        equal_3(&boundary, &expected)?
    );
    println!("  orbits {:?}", h.orbit_partition());

    let pairs = [
        ("B3: -2 1", "B3: 2 -1"),
        ("B3: 1", "B3: 1 2 1 1 2 1"),
        ("B3: 1 2", "B3: 2 1"),
        ("B3: 1", "B3: 2 2"),
    ];
    for (a, b) in pairs {
        let v = zero_entropy_commutator_check(&a.parse()?, &b.parse()?)?;
        println!("({a}, {b}) -> {v:?}");
    }

    println!("r0 = {GORIN_LIN_R0:.5}");
    for (n, m, d) in [(3, 30.0, 6), (3, 5.0, 6), (3, 30.0, 2), (5, 50.0, 10)] {
        println!(
            "degree {n} module {m} index {d}: {:?}",
            gorin_lin_check(n, m, d)?
        );
    }

    println!(
        "penner n=3: {:.10}  (g,s)=(2,0): {:.10}",
        penner_bound(3)?,
        penner_bound_gs(2, 0)?
    );

    let c5 = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]])?;
    println!(
        "{:?}",
        abelian_transitive_check(&[c5.clone(), c5.pow(2)], 5)?
    );
    Ok(())
}
