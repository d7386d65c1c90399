mod common;

use braidmod::b3::{equal_3, has_zero_entropy_3, is_trivial_3};
use braidmod::braid::{full_twist, garside, BraidWord, Permutation};
use braidmod::monodromy::{
    abelian_transitive_check, zero_entropy_commutator_check, AbelianVerdict, CommutatorVerdict,
    SurfaceHom,
};
use common::{reduced_words_up_to, w};

#[test]
fn commutator_check_never_contradicts() {
    let mut corpus = reduced_words_up_to(3);
    let d2 = full_twist(3).unwrap();
    for k in -3..=3 {
        for l in -2..=2 {
            corpus.push(w("B3: 1").power(k).compose(&d2.power(l)).unwrap());
            corpus.push(w("B3: 1 2").power(k).compose(&d2.power(l)).unwrap());
        }
    }
    let mut trivial = 0;
    for b1 in &corpus {
        for b2 in &corpus {
            match zero_entropy_commutator_check(b1, b2).unwrap() {
                CommutatorVerdict::Contradiction { witness } => panic!("({b1}, {b2}): {witness}"),
                CommutatorVerdict::CommutatorTrivial { .. } => trivial += 1,
                CommutatorVerdict::HypothesisFails { .. } => {}
            }
        }
    }
    assert!(trivial > 100, "only {trivial} verified pairs");
}

#[test]
fn pure_second_braid_alone_does_not_force_triviality() {
    let (b1, b2) = (w("B3: 1 -2"), w("B3: 1 1"));
    assert!(b2.is_pure());
    assert!(!is_trivial_3(&BraidWord::commutator(&b1, &b2).unwrap()).unwrap());
    assert!(!has_zero_entropy_3(&b1).unwrap());
}

#[test]
fn twist_images_have_trivial_boundary() {
    let d = garside(3).unwrap();
    for k in -4..=4 {
        for l in -2..=2 {
            for l2 in -2..=2 {
                let a = w("B3: 1").power(k).compose(&d.power(2 * l)).unwrap();
                let h = SurfaceHom::new(3, 1, vec![a, d.power(2 * l2)]).unwrap();
                assert!(
                    equal_3(&h.boundary_monodromy(), &BraidWord::identity(3).unwrap()).unwrap()
                );
            }
        }
    }
}

fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for x in 1..=n {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Closure of the generated subgroup by repeated multiplication.
fn generated(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    let mut i = 0;
    while i < group.len() {
        for g in gens {
            let p = group[i].compose(g);
            if !group.contains(&p) {
                group.push(p);
            }
        }
        i += 1;
    }
    group
}

#[test]
fn abelian_transitive_on_three_points() {
    let perms = all_perms(3);
    for mask in 0u32..(1 << perms.len()) {
        let gens: Vec<Permutation> = (0..perms.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| perms[i].clone())
            .collect();
        match abelian_transitive_check(&gens, 3).unwrap() {
            AbelianVerdict::Contradiction { witness } => panic!("{witness}"),
            AbelianVerdict::CyclicVerified { generator } => {
                assert_eq!(generated(3, &gens).len(), 3);
                assert_eq!(generator.cycles().len(), 1);
            }
            AbelianVerdict::HypothesisFails { .. } => {}
        }
    }
}

#[test]
fn abelian_transitive_on_five_points() {
    let perms = all_perms(5);
    let mut verified = 0;
    for (i, p) in perms.iter().enumerate() {
        for q in &perms[i..] {
            let gens = [p.clone(), q.clone()];
            match abelian_transitive_check(&gens, 5).unwrap() {
                AbelianVerdict::Contradiction { witness } => panic!("{witness}"),
                AbelianVerdict::CyclicVerified { generator } => {
                    verified += 1;
                    let sorted = |mut g: Vec<Permutation>| {
                        g.sort_by(|a, b| a.images().cmp(b.images()));
                        g
                    };
                    let group = sorted(generated(5, &gens));
                    assert_eq!(group.len(), 5);
                    assert_eq!(sorted(generated(5, &[generator])), group);
                }
                AbelianVerdict::HypothesisFails { .. } => {}
            }
        }
    }
    // six subgroups of order 5; unordered pairs inside one, minus (id, id)
    assert_eq!(verified, 6 * 14);
}
