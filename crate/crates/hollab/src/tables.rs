//! Closed-form evaluators: the integer homology tables of Hol(Z_{p^r}) and
//! the mod-p cohomology rank formulas, transcribed with exact arithmetic.

use crate::error::{Error, Result};
use crate::homology::AbelianInvariants;
use crate::util::is_prime;

/// Do we have a closed-form homology table for these parameters?
pub fn closed_form_supported(p: u64, r: u32) -> bool {
    if p == 2 {
        r >= 3
    } else {
        is_prime(p) && r >= 1
    }
}

/// H_q(Hol(Z_{p^r}); Z) from the closed-form tables.
///
/// Supported for p = 2 with r >= 3 and odd primes with r >= 1.
pub fn closed_form_homology(p: u64, r: u32, q: usize) -> Result<AbelianInvariants> {
    if !closed_form_supported(p, r) {
        return Err(Error::NoClosedForm(format!("p = {p}, r = {r}")));
    }
    if q == 0 {
        return Ok(AbelianInvariants::free(1));
    }
    let counts = if p == 2 {
        two_power_counts(r, q as u64)
    } else {
        odd_power_counts(p, r, q as u64)
    };
    let mut orders = Vec::new();
    for (i, n_i) in counts.iter().enumerate() {
        for _ in 0..*n_i {
            orders.push(p.pow(i as u32 + 1));
        }
    }
    if p > 2 && q % 2 == 1 {
        orders.push(p - 1); // one Z_{p-1} summand in every odd degree
    }
    Ok(AbelianInvariants::from_cyclic_orders(0, &orders))
}

/// Multiplicities (n_1, ..., n_r) of Z_{2^i} in H_q(Hol(Z_{2^r})), q >= 1.
fn two_power_counts(r: u32, q: u64) -> Vec<u64> {
    assert!(r >= 3);
    if r == 3 {
        let n = q / 4;
        let n1 = match q % 4 {
            0 => 2 * n * n + 3 * n,
            1 => 2 * n * n + 4 * n + 3,
            2 => 2 * n * n + 5 * n + 2,
            _ => 2 * n * n + 6 * n + 4,
        };
        return vec![n1, 0, if q % 4 == 3 { 1 } else { 0 }];
    }
    let n1 = shared_n1(q);
    if r == 4 {
        return vec![
            n1,
            q / 8 + u64::from(q % 2 == 1),
            u64::from(q % 8 == 3),
            u64::from(q % 8 == 7),
        ];
    }
    // r >= 5: a middle band n_i for 3 <= i <= r-3, then three top entries
    let mut counts = vec![0u64; r as usize];
    counts[0] = n1;
    counts[1] = q / 8 - q / 16;
    for i in 3..=r.saturating_sub(3) {
        let two_i = 1u64 << i;
        counts[(i - 1) as usize] =
            q / (two_i * 2) - q / (two_i * 4) + u64::from(q % two_i == two_i / 2 - 1);
    }
    counts[(r - 3) as usize] = q / (1 << (r - 1))
        + u64::from(q % 2 == 1)
        + u64::from(q % (1 << (r - 2)) == (1 << (r - 3)) - 1);
    counts[(r - 2) as usize] = u64::from(q % (1 << (r - 1)) == (1 << (r - 2)) - 1);
    counts[(r - 1) as usize] = u64::from(q % (1 << (r - 1)) == (1 << (r - 1)) - 1);
    counts
}

/// The shared n_1 expression for r >= 4 (floors and eighth-integer corrections).
fn shared_n1(q: u64) -> u64 {
    let qi = q as i64;
    let corr = match q % 4 {
        1 => 1i64,
        3 => -3,
        _ => 0,
    };
    let eight_times = qi * qi - 2 * qi + 8 * (qi / 4) - 8 * (qi / 8)
        + 8 * ((qi + 3) / 4)
        + 8 * ((qi + 1) / 2)
        + corr;
    assert!(
        eight_times >= 0 && eight_times % 8 == 0,
        "n1 not integral at q={q}"
    );
    (eight_times / 8) as u64
}

/// q = step * k - 1 for some k >= 1, optionally requiring (k, p) = 1.
fn is_step_k_minus_one(q: u64, step: u64, coprime_to: Option<u64>) -> bool {
    if (q + 1) % step != 0 {
        return false;
    }
    let k = (q + 1) / step;
    if k == 0 {
        return false;
    }
    match coprime_to {
        Some(p) => k % p != 0,
        None => true,
    }
}

/// Multiplicities (n_1, ..., n_r) of Z_{p^i} in H_q(Hol(Z_{p^r})), p odd, q >= 1.
fn odd_power_counts(p: u64, r: u32, q: u64) -> Vec<u64> {
    let a = 2 * (p - 1);
    let odd = u64::from(q % 2 == 1);
    match r {
        1 => vec![u64::from(is_step_k_minus_one(q, a, None))],
        2 => vec![
            q / (a * p) + u64::from(is_step_k_minus_one(q, a, Some(p))) + odd,
            u64::from(is_step_k_minus_one(q, a * p, None)),
        ],
        _ => {
            let mut counts = vec![0u64; r as usize];
            for i in 1..=(r - 2) {
                counts[(i - 1) as usize] = q / (a * p.pow(i)) - q / (a * p.pow(i + 1))
                    + u64::from(is_step_k_minus_one(q, a * p.pow(i - 1), Some(p)));
            }
            counts[(r - 2) as usize] = q / (a * p.pow(r - 1))
                + u64::from(is_step_k_minus_one(q, a * p.pow(r - 2), Some(p)))
                + odd;
            counts[(r - 1) as usize] = u64::from(is_step_k_minus_one(q, a * p.pow(r - 1), None));
            counts
        }
    }
}

/// dim_{F_p} H^q(Hol(Z_{p^r}); F_p) for r >= 3; independent of r.
pub fn mod_p_cohomology_rank(p: u64, r: u32, q: usize) -> Result<u64> {
    if p == 2 {
        if r < 3 {
            return Err(Error::NoClosedForm(format!("p = 2, r = {r}")));
        }
        let n = (q / 4) as u64;
        return Ok(match q % 4 {
            0 => 4 * n * n + 5 * n + 1,
            1 => 4 * n * n + 7 * n + 3,
            2 => 4 * n * n + 9 * n + 5,
            _ => 4 * n * n + 11 * n + 7,
        });
    }
    if !is_prime(p) || r < 3 {
        return Err(Error::NoClosedForm(format!("p = {p}, r = {r}")));
    }
    let q = q as u64;
    let a = 2 * (p - 1);
    let b = a * p;
    // q = bk + a*l - 1 with 1 <= l <= p, or q = bk + a*l with 1 <= l <= p-1
    if (q + 1) % a == 0 && (q + 1) / a >= 1 {
        let t = (q + 1) / a; // t = pk + l
        let k = (t - 1) / p;
        return Ok(2 * k + 2);
    }
    if q % a == 0 && q % b != 0 {
        let k = q / b;
        return Ok(2 * k + 2);
    }
    Ok(2 * (q / b) + 1)
}

/// Mod-p ranks implied by a table of integer homology, via universal
/// coefficients: dim H^q = free(H_q) + t_p(H_q) + t_p(H_{q-1}).
pub fn uct_mod_p_ranks(homology: &[AbelianInvariants], p: u64) -> Vec<u64> {
    (0..homology.len())
        .map(|q| {
            let here = &homology[q];
            let below = if q == 0 { None } else { Some(&homology[q - 1]) };
            (here.free_rank + here.p_torsion_count(p) + below.map_or(0, |h| h.p_torsion_count(p)))
                as u64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(orders: &[u64]) -> AbelianInvariants {
        AbelianInvariants::from_cyclic_orders(0, orders)
    }

    #[test]
    fn hol_z8_low_degrees() {
        assert_eq!(
            closed_form_homology(2, 3, 0).unwrap(),
            AbelianInvariants::free(1)
        );
        // H_1 = Z_2^3 (also the abelianization)
        assert_eq!(closed_form_homology(2, 3, 1).unwrap(), inv(&[2, 2, 2]));
        assert_eq!(closed_form_homology(2, 3, 2).unwrap(), inv(&[2, 2]));
        // H_3 = Z_2^4 + Z_8
        assert_eq!(
            closed_form_homology(2, 3, 3).unwrap(),
            inv(&[2, 2, 2, 2, 8])
        );
        assert_eq!(
            closed_form_homology(2, 3, 4).unwrap(),
            inv(&[2, 2, 2, 2, 2])
        );
    }

    #[test]
    fn hol_z16_low_degrees() {
        // H_1 = Z_4 + Z_2^2
        assert_eq!(closed_form_homology(2, 4, 1).unwrap(), inv(&[2, 2, 4]));
        // H_3 has n1 = 3, n2 = 1, n3 = 1
        assert_eq!(
            closed_form_homology(2, 4, 3).unwrap(),
            inv(&[2, 2, 2, 4, 8])
        );
    }

    #[test]
    fn hol_z32_h1() {
        // abelianization Z_8 + Z_2^2
        assert_eq!(closed_form_homology(2, 5, 1).unwrap(), inv(&[2, 2, 8]));
    }

    #[test]
    fn odd_prime_tables() {
        // H_3(Hol(Z_3)) = H_3(S_3) = Z_6
        assert_eq!(closed_form_homology(3, 1, 3).unwrap(), inv(&[2, 3]));
        // H_1(Hol(Z_3)) = Z_2
        assert_eq!(closed_form_homology(3, 1, 1).unwrap(), inv(&[2]));
        assert_eq!(
            closed_form_homology(3, 1, 2).unwrap(),
            AbelianInvariants::trivial()
        );
        // H_1(Hol(Z_9)) = Z_6
        assert_eq!(closed_form_homology(3, 2, 1).unwrap(), inv(&[2, 3]));
        assert!(closed_form_homology(4, 1, 1).is_err());
        assert!(closed_form_homology(2, 2, 1).is_err());
    }

    #[test]
    fn mod_two_ranks() {
        let want = [1u64, 3, 5, 7, 10, 14, 18, 22, 27];
        for (q, w) in want.iter().enumerate() {
            assert_eq!(mod_p_cohomology_rank(2, 3, q).unwrap(), *w, "q = {q}");
            assert_eq!(mod_p_cohomology_rank(2, 5, q).unwrap(), *w, "q = {q}");
        }
    }

    #[test]
    fn mod_three_ranks() {
        // p = 3, r >= 3: degree 3 has rank 2 (l = 1, k = 0)
        assert_eq!(mod_p_cohomology_rank(3, 3, 3).unwrap(), 2);
        assert_eq!(mod_p_cohomology_rank(3, 3, 0).unwrap(), 1);
        assert_eq!(mod_p_cohomology_rank(3, 3, 12).unwrap(), 3);
        assert!(mod_p_cohomology_rank(3, 2, 3).is_err());
    }
}
