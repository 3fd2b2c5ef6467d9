//! First Bocksteins on the cohomology of the congruence kernels: the
//! closed generator formulas, the structure-constant route, and the
//! square-zero property.
//!
//!     cargo run --example bockstein_formulas

use hollab::congruence::{
    bockstein, bockstein_algebra, bockstein_on_generators, bockstein_on_generators_generic,
    structure_constants,
};

fn main() {
    let (n, p) = (2usize, 5u64);
    let alg = bockstein_algebra(n, p);
    let (ext, poly) = bockstein_on_generators(n, p);
    println!("generators and their first Bocksteins (n = {n}, p = {p}):");
    for (i, (name, _)) in alg.exterior.iter().enumerate() {
        println!("  beta({name}) = {}", alg.render(&ext[i]));
    }
    for (i, (name, _)) in alg.polynomial.iter().enumerate() {
        println!("  beta({name}) = {}", alg.render(&poly[i]));
    }

    // the same formulas out of the structure constants
    let sc = structure_constants(n, p).unwrap();
    let (ext2, poly2) = bockstein_on_generators_generic(&sc);
    println!(
        "\nstructure-constant route agrees with the closed formulas: {}",
        ext == ext2 && poly == poly2
    );

    // beta of beta dies on every generator across the small grid
    let mut ok = true;
    for p in [2u64, 3, 5] {
        for n in 1..=3usize {
            let alg = bockstein_algebra(n, p);
            for idx in 0..alg.exterior.len() {
                ok &= bockstein(&bockstein(&alg.exterior_gen(idx), n, p), n, p).is_zero();
            }
            for idx in 0..alg.polynomial.len() {
                ok &= bockstein(&bockstein(&alg.polynomial_gen(idx), n, p), n, p).is_zero();
            }
        }
    }
    println!("beta squared vanishes on all generators (n <= 3, p in 2, 3, 5): {ok}");
}
