//! Wreath products and their embeddings into automorphism groups and
//! holomorphs of powers, plus the permutative-category axioms for the three
//! monoidal families.
//!
//!     cargo run --example wreath_permutative

use hollab::holomorph::enumerate_hol;
use hollab::perm::{Perm, PermGroup};
use hollab::wreath::{
    embed_i, embed_j, permutative_axioms_check, wreath_mul, wreath_pullback_check, CategoryKind,
    Morphism, PermutativeOps, WreathElement,
};

fn main() {
    // ((12), (1, 2)) * ((12), (0, 1)) over Z_3
    let swap = Perm::new(vec![1, 0]);
    let a = WreathElement::new(swap.clone(), vec![1u64, 2]);
    let b = WreathElement::new(swap, vec![0u64, 1]);
    let c = wreath_mul(&a, &b, |x, y| (x + y) % 3);
    println!(
        "((12), (1,2)) ((12), (0,1)) = (identity: {}, parts {:?})",
        c.sigma.is_identity(),
        c.parts
    );

    // embeddings at q = 2
    let hol1 = enumerate_hol(1, 3);
    let mut count = 0;
    let mut images = std::collections::HashSet::new();
    for sigma in [Perm::identity(2), Perm::new(vec![1, 0])] {
        for h1 in &hol1 {
            for h2 in &hol1 {
                let w = WreathElement::new(sigma.clone(), vec![h1.clone(), h2.clone()]);
                images.insert(embed_j(&w));
                count += 1;
            }
        }
    }
    println!(
        "S_2 wr Hol(Z_3): {count} elements embed injectively into Hol(Z_3^2) ({} images, ambient order {})",
        images.len(),
        enumerate_hol(2, 3).len()
    );
    let units = WreathElement::new(Perm::new(vec![1, 0]), vec![2u64, 1]);
    let m = embed_i(&units, 3);
    println!(
        "embed_i((12), (2, 1)) = [{} {} / {} {}] in GL(2, Z_3)",
        m.at(0, 0),
        m.at(0, 1),
        m.at(1, 0),
        m.at(1, 1)
    );

    // pullback characterization
    let s2 = PermGroup::symmetric(2);
    println!(
        "S_2 wr Z_2 is the pullback over the coordinate action: {}",
        wreath_pullback_check(&s2.elements, 2).unwrap()
    );

    // permutative axioms for the three families
    for (kind, label) in [
        (CategoryKind::AutPowers, "Aut powers"),
        (CategoryKind::HolPowers, "Hol powers"),
        (CategoryKind::HolMatrix, "block matrices"),
    ] {
        for modulus in [2u64, 4] {
            println!(
                "{label} over Z_{modulus}: axioms 1-5 + naturality at objects <= 2: {}",
                permutative_axioms_check(kind, modulus, 2).unwrap()
            );
        }
    }

    // the twist of the matrix family squares to the identity
    let ops = PermutativeOps::new(CategoryKind::HolMatrix, 2);
    let c11 = ops.twist(1, 1);
    if let Morphism::Mat(m) = &c11 {
        println!(
            "c(1,1) = [{} {} {} / {} {} {} / {} {} {}], involution: {}",
            m.at(0, 0),
            m.at(0, 1),
            m.at(0, 2),
            m.at(1, 0),
            m.at(1, 1),
            m.at(1, 2),
            m.at(2, 0),
            m.at(2, 1),
            m.at(2, 2),
            ops.compose(&c11, &c11) == ops.identity(2)
        );
    }
}
