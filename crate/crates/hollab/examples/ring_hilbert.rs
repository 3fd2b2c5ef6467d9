//! Hilbert series of the presented cohomology rings, compared with the rank
//! formulas, plus the local-confluence diagnostic for each presentation.
//!
//!     cargo run --example ring_hilbert

use hollab::graded::rings;
use hollab::tables::mod_p_cohomology_rank;

fn main() {
    let cases: Vec<(
        &str,
        hollab::graded::GradedPresentation,
        Box<dyn Fn(usize) -> u64>,
    )> = vec![
        (
            "mod-2 ring, exponent > 3",
            rings::two_power_big(),
            Box::new(|q| mod_p_cohomology_rank(2, 4, q).unwrap()),
        ),
        (
            "mod-2 ring, exponent 3",
            rings::two_power_r3(),
            Box::new(|q| mod_p_cohomology_rank(2, 3, q).unwrap()),
        ),
        (
            "mod-3 ring",
            rings::odd_power(3),
            Box::new(|q| mod_p_cohomology_rank(3, 3, q).unwrap()),
        ),
        (
            "mod-5 ring",
            rings::odd_power(5),
            Box::new(|q| mod_p_cohomology_rank(5, 3, q).unwrap()),
        ),
    ];
    for (name, pres, formula) in cases {
        let hs = pres.hilbert_series(16);
        let want: Vec<u64> = (0..=16).map(formula).collect();
        let overlaps = pres.local_confluence_failures(10).unwrap();
        println!("{name}:");
        println!("  series  {hs:?}");
        println!("  formula {want:?}");
        println!(
            "  match: {}; locally confluent through degree 10: {}",
            hs == want,
            overlaps.is_empty()
        );
    }

    let hs = rings::continuous_two().hilbert_series(12);
    println!("\nstable ring (u^2 = ux + uy): series {hs:?}");
    println!("expected from (1+t)^2/(1-t):    [1, 3, 4, 4, ...]");
}
