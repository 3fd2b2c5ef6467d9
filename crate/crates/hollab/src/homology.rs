//! Homology of integer chain complexes by Smith normal form, abelian
//! invariants, and the assembled integer homology of Hol(Z_{p^r}) with its
//! closed-form cross-check.

use crate::error::{Error, Result};
use crate::group_ring::MetabelianPresentation;
use crate::modular::{smith_normal_form, IntegerMatrix};
use crate::resolution::{augment, build_resolution};
use crate::tables::{closed_form_homology, closed_form_supported};
use crate::util::factorize;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A chain complex of finitely generated free Z-modules:
/// ranks[q] = rank of C_q, diffs[q-1]: C_q -> C_{q-1}.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    diffs: Vec<IntegerMatrix>,
}

impl ChainComplex {
    /// Validates shapes and d∘d = 0.
    pub fn new(ranks: Vec<usize>, diffs: Vec<IntegerMatrix>) -> Result<Self> {
        if diffs.len() + 1 != ranks.len() && !(ranks.is_empty() && diffs.is_empty()) {
            return Err(Error::InvalidArgument(
                "need one differential per positive degree".into(),
            ));
        }
        for (q, d) in diffs.iter().enumerate() {
            if d.rows != ranks[q] || d.cols != ranks[q + 1] {
                return Err(Error::InvalidArgument(format!(
                    "differential into degree {q} has shape {}x{}, want {}x{}",
                    d.rows,
                    d.cols,
                    ranks[q],
                    ranks[q + 1]
                )));
            }
        }
        for q in 0..diffs.len().saturating_sub(1) {
            if !diffs[q].mul(&diffs[q + 1]).is_zero() {
                return Err(Error::NotAComplex(format!("degrees {} -> {q}", q + 2)));
            }
        }
        Ok(ChainComplex { ranks, diffs })
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    /// The differential C_q -> C_{q-1}; zero matrix for q = 0 or q out of range.
    pub fn differential(&self, q: usize) -> IntegerMatrix {
        if q == 0 || q > self.diffs.len() {
            let cols = self.ranks.get(q).copied().unwrap_or(0);
            let rows = if q == 0 {
                0
            } else {
                self.ranks.get(q - 1).copied().unwrap_or(0)
            };
            IntegerMatrix::zero(rows, cols)
        } else {
            self.diffs[q - 1].clone()
        }
    }
}

/// A finitely generated abelian group: free rank plus torsion as a sorted
/// multiset of prime powers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants {
            free_rank: 0,
            torsion: vec![],
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            free_rank: rank,
            torsion: vec![],
        }
    }

    /// Normalizes a list of cyclic orders into sorted prime powers.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[u64]) -> Self {
        let mut torsion = Vec::new();
        for &d in orders {
            assert!(d != 0, "zero passed as torsion order");
            for (p, e) in factorize(d) {
                torsion.push(p.pow(e));
            }
        }
        torsion.retain(|&t| t > 1);
        torsion.sort_unstable();
        AbelianInvariants { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        let mut torsion = self.torsion.clone();
        torsion.extend(&other.torsion);
        torsion.sort_unstable();
        AbelianInvariants {
            free_rank: self.free_rank + other.free_rank,
            torsion,
        }
    }

    /// Number of Z_{p^k} summands; by universal coefficients,
    /// dim_F_p H^q = free(H_q) + t_p(H_q) + t_p(H_{q-1}).
    pub fn p_torsion_count(&self, p: u64) -> usize {
        self.torsion
            .iter()
            .filter(|&&t| {
                let f = factorize(t);
                f.len() == 1 && f[0].0 == p
            })
            .count()
    }

    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for AbelianInvariants {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(AbelianInvariants::trivial());
        }
        let mut free_rank = 0usize;
        let mut torsion = Vec::new();
        for part in s.split('+').map(str::trim) {
            if let Some(k) = part.strip_prefix("Z^") {
                free_rank += k
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidArgument(format!("bad free rank: {e}")))?;
            } else if let Some(t) = part.strip_prefix("Z/") {
                torsion.push(
                    t.parse::<u64>()
                        .map_err(|e| Error::InvalidArgument(format!("bad torsion: {e}")))?,
                );
            } else if part == "Z" {
                free_rank += 1;
            } else {
                return Err(Error::InvalidArgument(format!("bad summand: {part}")));
            }
        }
        Ok(AbelianInvariants::from_cyclic_orders(free_rank, &torsion))
    }
}

/// H_q(C) = ker d_q / im d_{q+1}, by Smith normal form.
pub fn homology(c: &ChainComplex, q: usize) -> AbelianInvariants {
    if q >= c.ranks.len() {
        return AbelianInvariants::trivial();
    }
    let d_q = c.differential(q);
    let d_next = c.differential(q + 1);

    // kernel of d_q: columns j of V with diagonal entry 0 (or beyond the diagonal)
    let snf = smith_normal_form(&d_q);
    let t = d_q.rows.min(d_q.cols);
    let kernel_indices: Vec<usize> = (0..d_q.cols)
        .filter(|&j| j >= t || snf.invariants[j].is_zero())
        .collect();
    let k = kernel_indices.len();

    // image of d_{q+1} in kernel coordinates: rows of V^{-1} d_{q+1}
    let coords = snf.v_inv.mul(&d_next);
    for j in 0..d_q.cols {
        if !kernel_indices.contains(&j) {
            for col in 0..coords.cols {
                assert!(
                    coords.at(j, col).is_zero(),
                    "image not contained in kernel: not a complex"
                );
            }
        }
    }
    let mut b = IntegerMatrix::zero(k, d_next.cols);
    for (row, &j) in kernel_indices.iter().enumerate() {
        for col in 0..d_next.cols {
            b.set(row, col, coords.at(j, col).clone());
        }
    }
    let diag = smith_normal_form(&b).invariants;
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<u64> = diag
        .iter()
        .filter(|d| !d.is_zero() && **d != BigInt::from(1))
        .map(|d| u64::try_from(d).expect("torsion order fits in u64"))
        .collect();
    AbelianInvariants::from_cyclic_orders(k - nonzero, &torsion)
}

/// All homology groups of a complex up to its top degree.
pub fn homology_all(c: &ChainComplex) -> Vec<AbelianInvariants> {
    (0..c.ranks.len()).map(|q| homology(c, q)).collect()
}

/// Integer homology of Hol(Z_{p^r}) through degree qmax, assembled from the
/// resolution without any table comparison: H_q = direct sum over m of
/// H_q(A^m).
pub fn computed_homology_unchecked(p: u64, r: u32, qmax: usize) -> Result<Vec<AbelianInvariants>> {
    use rayon::prelude::*;
    let pres = presentation_for(p, r)?;
    let res = build_resolution(&pres, 2)?;
    let parts = augment(&res, qmax as u32 + 1)?;
    // the per-summand computations are independent; reduce deterministically
    let summand_tables: Vec<(u32, Vec<AbelianInvariants>)> = parts
        .par_iter()
        .map(|part| (part.ambient_offset, homology_all(&part.complex)))
        .collect();
    let mut out = vec![AbelianInvariants::trivial(); qmax + 1];
    for (offset, h) in &summand_tables {
        for (j, inv) in h.iter().enumerate() {
            let ambient = *offset as usize + j;
            if ambient <= qmax {
                out[ambient] = out[ambient].direct_sum(inv);
            }
        }
    }
    Ok(out)
}

/// Integer homology of Hol(Z_{p^r}) through degree qmax, assembled from the
/// resolution and cross-checked against the closed-form tables when these
/// are available; a mismatch is an error carrying the (p, r, q) witness.
pub fn computed_homology(p: u64, r: u32, qmax: usize) -> Result<Vec<AbelianInvariants>> {
    let out = computed_homology_unchecked(p, r, qmax)?;
    if closed_form_supported(p, r) {
        for (q, got) in out.iter().enumerate() {
            let want = closed_form_homology(p, r, q)?;
            if *got != want {
                return Err(Error::Mismatch(format!(
                    "homology table disagreement at p={p}, r={r}, q={q}: computed {got}, closed form {want}"
                )));
            }
        }
    }
    Ok(out)
}

/// The defining presentation used for the resolution of Hol(Z_{p^r}).
pub fn presentation_for(p: u64, r: u32) -> Result<MetabelianPresentation> {
    if p == 2 {
        MetabelianPresentation::hol_two_power(r)
    } else {
        MetabelianPresentation::hol_odd_power(p, r)
    }
}

/// Abelianization of the defining presentation: cokernel of the relation
/// matrix on the quotient generators x, y and kernel generator z.
pub fn presentation_abelianization(p: u64, r: u32) -> Result<AbelianInvariants> {
    let pres = presentation_for(p, r)?;
    // generators x, y, z; relations x^{s1}, y^{s2}, z^q, z^{t1 - 1}, z^{t2 - 1}
    let rows = vec![
        vec![pres.s1 as i64, 0, 0],
        vec![0, pres.s2 as i64, 0],
        vec![0, 0, pres.q as i64],
        vec![0, 0, pres.t1 as i64 - 1],
        vec![0, 0, pres.t2 as i64 - 1],
    ];
    let m = IntegerMatrix::from_rows_i64(rows);
    let diag = crate::modular::smith_invariants(&m);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<u64> = diag
        .iter()
        .filter(|d| !d.is_zero() && **d != BigInt::from(1))
        .map(|d| u64::try_from(d).expect("fits"))
        .collect();
    // three generators; columns not hit by a nonzero invariant stay free
    Ok(AbelianInvariants::from_cyclic_orders(3 - nonzero, &torsion))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The augmented staircase complex of Z_n: Z <- Z <- Z <- ... with maps
    /// alternating 0 and n.
    fn cyclic_complex(n: i64, top: usize) -> ChainComplex {
        let ranks = vec![1; top + 1];
        let diffs = (1..=top)
            .map(|q| IntegerMatrix::from_rows_i64(vec![vec![if q % 2 == 0 { n } else { 0 }]]))
            .collect();
        ChainComplex::new(ranks, diffs).unwrap()
    }

    #[test]
    fn lens_complex_homology() {
        // H_0 = Z, H_{2k+1} = Z_n, H_{2k} = 0 for k >= 1
        let c = cyclic_complex(5, 7);
        assert_eq!(homology(&c, 0), AbelianInvariants::free(1));
        assert_eq!(
            homology(&c, 1),
            AbelianInvariants::from_cyclic_orders(0, &[5])
        );
        assert_eq!(homology(&c, 2), AbelianInvariants::trivial());
        assert_eq!(
            homology(&c, 3),
            AbelianInvariants::from_cyclic_orders(0, &[5])
        );
    }

    #[test]
    fn torsion_normalization_and_display() {
        let h = AbelianInvariants::from_cyclic_orders(1, &[6, 4]);
        assert_eq!(h.torsion, vec![2, 3, 4]);
        assert_eq!(h.to_string(), "Z^1 + Z/2 + Z/3 + Z/4");
        assert_eq!(
            "Z^1 + Z/2 + Z/3 + Z/4"
                .parse::<AbelianInvariants>()
                .unwrap(),
            h
        );
        assert_eq!(
            "0".parse::<AbelianInvariants>().unwrap(),
            AbelianInvariants::trivial()
        );
        assert_eq!(h.p_torsion_count(2), 2);
        assert_eq!(h.p_torsion_count(3), 1);
    }

    #[test]
    fn rejects_non_complex() {
        let ranks = vec![1, 1, 1];
        let d1 = IntegerMatrix::from_rows_i64(vec![vec![2]]);
        let d2 = IntegerMatrix::from_rows_i64(vec![vec![3]]);
        assert!(matches!(
            ChainComplex::new(ranks, vec![d1, d2]),
            Err(Error::NotAComplex(_))
        ));
    }

    #[test]
    fn homology_invariant_under_basis_change() {
        use rand::Rng;
        let mut rng = crate::util::seeded_rng(0xbc);
        // a fixed small complex: Z^2 <- Z^2 <- Z^2 with commuting diffs
        let d1 = IntegerMatrix::from_rows_i64(vec![vec![2, 0], vec![0, 0]]);
        let d2 = IntegerMatrix::from_rows_i64(vec![vec![0, 0], vec![0, 4]]);
        let c = ChainComplex::new(vec![2, 2, 2], vec![d1.clone(), d2.clone()]).unwrap();
        let h1 = homology(&c, 1);
        for _ in 0..10 {
            // change basis of C_1 by a random unimodular u: d1' = d1 u, d2' = u^{-1} d2
            let mut u = IntegerMatrix::identity(2);
            let mut u_inv = IntegerMatrix::identity(2);
            for _ in 0..6 {
                let c0 = rng.gen_range(-2i64..=2);
                let (a, b) = if rng.gen_bool(0.5) { (0, 1) } else { (1, 0) };
                let mut e = IntegerMatrix::identity(2);
                e.set(a, b, BigInt::from(c0));
                let mut e_inv = IntegerMatrix::identity(2);
                e_inv.set(a, b, BigInt::from(-c0));
                u = u.mul(&e);
                u_inv = e_inv.mul(&u_inv);
            }
            let c2 = ChainComplex::new(vec![2, 2, 2], vec![d1.mul(&u), u_inv.mul(&d2)]).unwrap();
            assert_eq!(homology(&c2, 1), h1);
        }
    }

    #[test]
    fn summand_homology_examples() {
        use crate::group_ring::MetabelianPresentation;
        use crate::resolution::{augment, build_resolution};
        let pres = MetabelianPresentation::new(8, 2, 2, 3, 7).unwrap();
        let res = build_resolution(&pres, 2).unwrap();
        let parts = augment(&res, 9).unwrap();
        // the m = 0 summand at degree 1
        assert_eq!(
            homology(&parts[0].complex, 1),
            AbelianInvariants::from_cyclic_orders(0, &[2, 2])
        );
        // odd m: a single Z_2 in every degree of the summand
        assert_eq!(parts[1].m_index, 1);
        for j in 0..=4 {
            assert_eq!(
                homology(&parts[1].complex, j),
                AbelianInvariants::from_cyclic_orders(0, &[2]),
                "degree {j} of the m = 1 summand"
            );
        }
        // even m: Z_8 at the bottom, then growing elementary parts plus Z_2
        assert_eq!(parts[2].m_index, 2);
        assert_eq!(
            homology(&parts[2].complex, 0),
            AbelianInvariants::from_cyclic_orders(0, &[8])
        );
        assert_eq!(
            homology(&parts[2].complex, 1),
            AbelianInvariants::from_cyclic_orders(0, &[2, 2])
        );
    }

    #[test]
    fn abelianization_examples() {
        // Hol(Z_8): Z_2^3
        assert_eq!(
            presentation_abelianization(2, 3).unwrap(),
            AbelianInvariants::from_cyclic_orders(0, &[2, 2, 2])
        );
        // Hol(Z_16): Z_4 + Z_2 + Z_2
        assert_eq!(
            presentation_abelianization(2, 4).unwrap(),
            AbelianInvariants::from_cyclic_orders(0, &[2, 2, 4])
        );
        // Hol(Z_9) abelianizes to Z_6 (x free modulo x^6, y dies)
        assert_eq!(
            presentation_abelianization(3, 2).unwrap(),
            AbelianInvariants::from_cyclic_orders(0, &[6])
        );
    }
}
