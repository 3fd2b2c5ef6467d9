//! The congruence kernels of Hol(+_n Z_{p^{k+1}}) -> Hol(+_n Z_p): order
//! formula vs enumeration, the exponent-p layer, the p-power map between
//! layers, and the Lie bracket against group commutators.
//!
//!     cargo run --example congruence_tower

use hollab::congruence::{
    almost_powerfully_embedded_check, bracket, bracket_via_commutator, gamma_enumerate, lie_basis,
    mike_lemma_solve, omega1_and_kernel_check, p_power_map, GammaParams, PowerShape,
};
use hollab::holomorph::HolElement;

fn main() {
    for (n, k, p) in [(1usize, 1u32, 3u64), (1, 2, 3), (2, 1, 3), (1, 1, 5)] {
        let params = GammaParams { n, k, p };
        let els = gamma_enumerate(&params).unwrap();
        println!(
            "Gamma(n={n}, k={k}, p={p}): formula order {}, enumerated {}",
            params.order(),
            els.len()
        );
        println!(
            "  exponent-p layer = reduction kernel = central: {}",
            omega1_and_kernel_check(&params).unwrap()
        );
    }

    // the p-power map sends (1 + 3a, 3x) mod 9 to (1 + 9a, 9x) mod 27
    let lower = GammaParams { n: 1, k: 1, p: 3 };
    let g = HolElement::new(
        hollab::modular::ResidueMatrix::from_rows(vec![vec![4]], 9),
        hollab::modular::ResidueVector::new(vec![3], 9),
    );
    let img = p_power_map(&lower, &g).unwrap();
    println!(
        "\np-power map: (1+3, 3) mod 9 -> (aut {}, trans {}) mod 27",
        img.aut.at(0, 0),
        img.trans.entries[0]
    );

    // bracket on the basis vs commutators of lifts
    let (n, p) = (2usize, 3u64);
    let basis = lie_basis(n, p);
    let agree = basis.iter().all(|a| {
        basis
            .iter()
            .all(|b| bracket(a, b) == bracket_via_commutator(a, b))
    });
    println!("\nbracket = inverse-p-power of commutator on all basis pairs (n=2, p=3): {agree}");

    // power congruences behind the powerful embedding
    let b = mike_lemma_solve(3, 2, 1, PowerShape::PthPower).unwrap();
    println!("(1 + 3*{b})^3 = 1 + 9 mod 27");
    let b = mike_lemma_solve(2, 3, 1, PowerShape::Square).unwrap();
    println!("(1 + 4*{b})^2 = 1 + 8 mod 16");
    println!(
        "almost powerfully embedded, |Gamma(1,2)| = 81 at p = 3: {}",
        almost_powerfully_embedded_check(&GammaParams { n: 1, k: 2, p: 3 }).unwrap()
    );
    println!(
        "almost powerfully embedded at p = 2, k = 2: {}",
        almost_powerfully_embedded_check(&GammaParams { n: 1, k: 2, p: 2 }).unwrap()
    );
}
