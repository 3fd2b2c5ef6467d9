//! Hol(+_n Z_m) as the block subgroup of GL(n+1, Z_m) fixing the first
//! basis vector: the embedding, its image size, maximality at m = 2, and the
//! Sylow order comparison.
//!
//!     cargo run --example matrix_embedding

use hollab::holomorph::{
    enumerate_hol, hol_to_matrix_col, hol_to_matrix_row, is_maximal, sylow_inequality_check,
    sylow_order_check,
};
use hollab::modular::{gl_elements, ResidueMatrix, ResidueVector};
use std::collections::HashSet;

fn show(m: &ResidueMatrix) -> String {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| m.at(i, j).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn main() {
    // the two block forms of one element of Hol(Z_4^2)
    let h = hollab::holomorph::HolElement::new(
        ResidueMatrix::from_rows(vec![vec![1, 2], vec![0, 3]], 4),
        ResidueVector::new(vec![1, 0], 4),
    );
    println!("row form:    [{}]", show(&hol_to_matrix_row(&h)));
    println!("column form: [{}]", show(&hol_to_matrix_col(&h)));

    // the row form fills the whole stabilizer of e_1
    for (n, m) in [(1usize, 4u64), (2, 2), (2, 3)] {
        let images: HashSet<ResidueMatrix> =
            enumerate_hol(n, m).iter().map(hol_to_matrix_row).collect();
        let e1 = ResidueVector::unit(0, n + 1, m);
        let stabilizer = gl_elements(n + 1, m)
            .into_iter()
            .filter(|g| g.apply(&e1) == e1)
            .count();
        println!(
            "n = {n}, m = {m}: image size {} = e_1-stabilizer size {}",
            images.len(),
            stabilizer
        );
    }

    // maximality: yes inside GL(3, Z_2), no inside GL(2, Z_4)
    let ambient = gl_elements(3, 2);
    let gens: Vec<ResidueMatrix> = enumerate_hol(2, 2).iter().map(hol_to_matrix_row).collect();
    println!(
        "Hol(Z_2^2) of order 24 maximal in GL(3, Z_2) of order {}: {}",
        ambient.len(),
        is_maximal(&gens, &ambient).unwrap()
    );
    let ambient = gl_elements(2, 4);
    let gens: Vec<ResidueMatrix> = enumerate_hol(1, 4).iter().map(hol_to_matrix_row).collect();
    println!(
        "Hol(Z_4) of order 8 maximal in GL(2, Z_4) of order {}: {}",
        ambient.len(),
        is_maximal(&gens, &ambient).unwrap()
    );

    // p-parts of |Hol(+_n Z_{p^r})| and |GL(n+1, Z_{p^r})|
    for n in 1..=3 {
        for p in [2u64, 3] {
            println!(
                "n = {n}, p = {p}: Sylow orders agree at r = 1: {}, differ at r = 2: {}",
                sylow_order_check(n, p),
                sylow_inequality_check(n, p, 2)
            );
        }
    }
}
