//! The last Dickson generator as the coefficient of t in the product of all
//! linear forms, its GL-invariance, and its nonzero image under the
//! degree-2 transgression — the desk-scale non-collapse witness.
//!
//!     cargo run --example dickson_noncollapse

use hollab::graded::{
    apply_d2, check_gl_invariance, dickson_algebra, dickson_coefficient, dickson_coefficient_via_t,
    D2Rule,
};

fn main() {
    for (n, p) in [(1usize, 2u64), (2, 2), (3, 2), (2, 3)] {
        let alg = dickson_algebra(n, p);
        let d = dickson_coefficient(n, p).unwrap();
        let via_t = dickson_coefficient_via_t(n, p).unwrap();
        println!("n = {n}, p = {p}:");
        if n <= 2 {
            println!("  coefficient: {}", alg.render(&d));
        } else {
            println!(
                "  coefficient: {} terms of degree {}",
                d.terms.len(),
                p.pow(n as u32) - 1
            );
        }
        println!("  two expansion routes agree: {}", d == via_t);
        if n <= 3 && p <= 3 {
            println!(
                "  invariant under GL({n}, F_{p}): {}",
                check_gl_invariance(&d, n, p).unwrap()
            );
        }
        let rules: &[(D2Rule, &str)] = if p == 2 {
            &[(D2Rule::UX2, "v -> u x^2"), (D2Rule::UZ, "v -> u z")]
        } else {
            &[(D2Rule::UZ, "v -> u z")]
        };
        for (rule, label) in rules {
            let image = apply_d2(&d, n, p, *rule).unwrap();
            println!(
                "  d2 image under {label}: {} ({} terms)",
                if image.is_zero() { "zero" } else { "NONZERO" },
                image.terms.len()
            );
            if n == 2 && p == 2 {
                println!("    = {}", alg.render(&image));
            }
        }
        println!();
    }
}
