//! Test-only oracles, independent of the library's resolution pipeline.

use hollab::homology::{homology, AbelianInvariants, ChainComplex};
use hollab::modular::IntegerMatrix;
use num_bigint::BigInt;

/// Group homology H_q(G; Z) from the normalized bar complex, for a group
/// given by its multiplication table. Independent of the staircase
/// resolution machinery: the only shared code is integer Smith reduction.
///
/// C_k is free on tuples [g_1 | ... | g_k] of non-identity elements; the
/// boundary drops tuples containing the identity.
pub fn bar_homology(table: &[Vec<usize>], identity: usize, q: usize) -> AbelianInvariants {
    let n = table.len();
    let nontrivial: Vec<usize> = (0..n).filter(|&g| g != identity).collect();
    let b = nontrivial.len();
    let rank = |k: usize| b.pow(k as u32);
    assert!(rank(q + 1) <= 1 << 21, "bar oracle budget exceeded");

    // tuple index <-> mixed-radix digits over the non-identity elements
    let digits = |mut idx: usize, k: usize| -> Vec<usize> {
        let mut out = vec![0; k];
        for d in out.iter_mut() {
            *d = nontrivial[idx % b];
            idx /= b;
        }
        out
    };
    let index_of = |tuple: &[usize]| -> Option<usize> {
        let mut idx = 0;
        for &g in tuple.iter().rev() {
            let pos = nontrivial.iter().position(|&h| h == g)?;
            idx = idx * b + pos;
        }
        Some(idx)
    };

    let boundary = |k: usize| -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(rank(k - 1), rank(k));
        for col in 0..rank(k) {
            let tuple = digits(col, k);
            let mut add = |t: &[usize], sign: i64| {
                if let Some(row) = index_of(t) {
                    let cur = m.at(row, col) + BigInt::from(sign);
                    m.set(row, col, cur);
                }
            };
            // face 0 forgets g_1 (trivial coefficients)
            add(&tuple[1..], 1);
            for i in 1..k {
                let mut t = Vec::with_capacity(k - 1);
                t.extend_from_slice(&tuple[..i - 1]);
                t.push(table[tuple[i - 1]][tuple[i]]);
                t.extend_from_slice(&tuple[i + 1..]);
                if t[i - 1] != identity {
                    add(&t, if i % 2 == 0 { 1 } else { -1 });
                }
            }
            // last face forgets g_k
            add(&tuple[..k - 1], if k % 2 == 0 { 1 } else { -1 });
        }
        m
    };

    let ranks: Vec<usize> = (0..=q + 1).map(rank).collect();
    let diffs: Vec<IntegerMatrix> = (1..=q + 1).map(boundary).collect();
    let complex = ChainComplex::new(ranks, diffs).expect("bar complex");
    homology(&complex, q)
}

/// Multiplication table of a permutation group.
pub fn multiplication_table(group: &hollab::perm::PermGroup) -> (Vec<Vec<usize>>, usize) {
    let els = &group.elements;
    let index = |p: &hollab::perm::Perm| els.iter().position(|q| q == p).unwrap();
    let table = els
        .iter()
        .map(|a| els.iter().map(|b| index(&a.compose(b))).collect())
        .collect();
    let identity = index(&hollab::perm::Perm::identity(group.degree));
    (table, identity)
}
