//! Holomorphs as pairs (automorphism, translation), their Cayley images,
//! and the classification of the groups whose holomorph is fully symmetric.
//!
//!     cargo run --example holomorph_basics

use hollab::abelian::{abelian_groups_of_order, FiniteAbelianGroup};
use hollab::holomorph::{cayley_embed, hol_order, is_hol_full_symmetric, HolElement};
use hollab::modular::{ResidueMatrix, ResidueVector};

fn main() {
    // Hol(Z_3): pair arithmetic, (mult-by-2, 1) * (mult-by-2, 2) = (1, 1)
    let f = ResidueMatrix::from_rows(vec![vec![2]], 3);
    let a = HolElement::new(f.clone(), ResidueVector::new(vec![1], 3));
    let b = HolElement::new(f, ResidueVector::new(vec![2], 3));
    let c = a.mul(&b);
    println!(
        "in Hol(Z_3): (x->2x, 1)(x->2x, 2) = (x->{}x, {})",
        c.aut.at(0, 0),
        c.trans.entries[0]
    );

    // Cayley images and identifications
    let hol3 = cayley_embed(&FiniteAbelianGroup::cyclic(3)).unwrap();
    println!(
        "Hol(Z_3): order {}, abelian: {} (the symmetric group on 3 letters)",
        hol3.order(),
        hol3.is_abelian()
    );
    let hol4 = cayley_embed(&FiniteAbelianGroup::cyclic(4)).unwrap();
    println!(
        "Hol(Z_4): order {}, element orders {:?} (dihedral of order 8)",
        hol4.order(),
        hol4.element_orders()
    );
    let hol22 = cayley_embed(&FiniteAbelianGroup::power(2, 2)).unwrap();
    println!(
        "Hol(Z_2+Z_2): order {} = |S_4|, orders match S_4: {}",
        hol22.order(),
        hol22.element_orders() == hollab::perm::PermGroup::symmetric(4).element_orders()
    );

    // which abelian K of order <= 9 have a fully symmetric holomorph?
    println!("\nK with Hol(K) = S(K), among abelian groups of order <= 9:");
    for n in 1..=9u64 {
        for k in abelian_groups_of_order(n) {
            if is_hol_full_symmetric(&k).unwrap() {
                println!(
                    "  {:?}  (|K| = {}, |Hol(K)| = {})",
                    k.moduli,
                    k.order(),
                    hol_order(&k).unwrap()
                );
            }
        }
    }
}
