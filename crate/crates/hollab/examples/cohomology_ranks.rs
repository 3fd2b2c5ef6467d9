//! Mod-p cohomology ranks of Hol(Z_{p^r}): the closed formulas, checked
//! against universal-coefficient ranks of the computed integer homology.
//!
//!     cargo run --example cohomology_ranks

use hollab::homology::computed_homology;
use hollab::tables::{mod_p_cohomology_rank, uct_mod_p_ranks};

fn main() {
    for (p, r, qmax) in [(2u64, 3u32, 12usize), (2, 4, 12), (3, 3, 10)] {
        let formula: Vec<u64> = (0..=qmax)
            .map(|q| mod_p_cohomology_rank(p, r, q).unwrap())
            .collect();
        let homology = computed_homology(p, r, qmax).unwrap();
        let uct = uct_mod_p_ranks(&homology, p);
        println!("p = {p}, r = {r}:");
        println!("  formula ranks: {formula:?}");
        println!("  UCT ranks:     {uct:?}");
        println!("  agree: {}\n", formula == uct);
    }

    // the p = 2 ranks are independent of the modulus exponent
    let base: Vec<u64> = (0..=8)
        .map(|q| mod_p_cohomology_rank(2, 3, q).unwrap())
        .collect();
    let same = (4..=9).all(|r| (0..=8).all(|q| mod_p_cohomology_rank(2, r, q).unwrap() == base[q]));
    println!("mod-2 ranks independent of the exponent r: {same}");
}
