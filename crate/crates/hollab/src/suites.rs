//! Named, reproducible verification suites binding the library's modules to
//! named structural claims. Each check carries a stable id and an anchor
//! stating the claim being verified; failures carry a minimal witness.

use crate::abelian::{abelian_groups_of_order, FiniteAbelianGroup};
use crate::congruence::{
    almost_powerfully_embedded_check, bockstein, bockstein_algebra, bockstein_on_generators,
    bockstein_on_generators_generic, bracket, bracket_via_commutator, gamma_enumerate,
    mike_lemma_solve, omega1_and_kernel_check, structure_constants, GammaParams, LiePair,
    PowerShape,
};
use crate::error::{Error, Result};
use crate::graded::{
    apply_d2, check_gl_invariance, dickson_coefficient, dickson_coefficient_via_t, rings, D2Rule,
};
use crate::group_ring::{normalize, Letter, MetabelianPresentation};
use crate::holomorph::{
    cayley_embed, cayley_translations, enumerate_hol, hol_order, hol_to_matrix_row,
    is_hol_full_symmetric, is_maximal, module_action_check, sylow_inequality_check,
    sylow_order_check,
};
use crate::homology::{computed_homology, presentation_abelianization};
use crate::modular::{
    aut_cyclic_generators, gl_elements, gl_order, vp, ResidueMatrix, ResidueVector,
};
use crate::perm::PermGroup;
use crate::report::{Check, SuiteReport};
use crate::resolution::{build_resolution, build_resolution_with, D2Exponent};
use crate::tables::{mod_p_cohomology_rank, uct_mod_p_ranks};
use crate::util::{pow_u64, primes_up_to, seeded_rng, unit_order};
use num_bigint::BigInt;
use rand::Rng;
use rayon::prelude::*;

pub const SUITE_NAMES: [&str; 10] = [
    "holomorph-basics",
    "resolution-acyclicity",
    "homology-tables",
    "cohomology-ranks",
    "ring-hilbert",
    "dickson-noncollapse",
    "congruence-tower",
    "bockstein",
    "wreath-permutative",
    "number-theory-lemmas",
];

type CheckTask = Box<dyn FnOnce() -> Check + Send>;

/// Runs one named suite; checks execute in parallel, the report is ordered
/// by check id and deterministic for a fixed seed and version.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let tasks: Vec<CheckTask> = match name {
        "holomorph-basics" => holomorph_basics(),
        "resolution-acyclicity" => resolution_acyclicity(seed),
        "homology-tables" => homology_tables(),
        "cohomology-ranks" => cohomology_ranks(),
        "ring-hilbert" => ring_hilbert(),
        "dickson-noncollapse" => dickson_noncollapse(seed),
        "congruence-tower" => congruence_tower(seed),
        "bockstein" => bockstein_suite(),
        "wreath-permutative" => wreath_permutative(),
        "number-theory-lemmas" => number_theory_lemmas(),
        other => return Err(Error::UnknownSuite(other.into())),
    };
    let start = std::time::Instant::now();
    let checks: Vec<Check> = tasks.into_par_iter().map(|t| t()).collect();
    Ok(SuiteReport::new(
        name,
        seed,
        checks,
        start.elapsed().as_millis() as u64,
    ))
}

pub fn run_all_suites(seed: u64) -> Result<Vec<SuiteReport>> {
    SUITE_NAMES.iter().map(|n| run_suite(n, seed)).collect()
}

fn task(f: impl FnOnce() -> Check + Send + 'static) -> CheckTask {
    Box::new(f)
}

fn holomorph_basics() -> Vec<CheckTask> {
    vec![
        task(|| {
            let g = cayley_embed(&FiniteAbelianGroup::cyclic(3)).unwrap();
            Check::from_outcome(
                "orders-z3",
                "the holomorph of Z_3 is the nonabelian group of order 6",
                g.order() == 6 && !g.is_abelian(),
                || format!("order {}", g.order()),
            )
        }),
        task(|| {
            let n = hol_order(&FiniteAbelianGroup::cyclic(4)).unwrap();
            Check::from_outcome("orders-z4", "|Hol(Z_4)| = 8", n == 8, || format!("got {n}"))
        }),
        task(|| {
            let k = FiniteAbelianGroup::power(2, 2);
            let g = cayley_embed(&k).unwrap();
            Check::from_outcome(
                "orders-z2z2",
                "Hol(Z_2 + Z_2) has order 24 and the element orders of S_4",
                g.order() == 24 && g.element_orders() == PermGroup::symmetric(4).element_orders(),
                || format!("order {}", g.order()),
            )
        }),
        task(|| {
            let mut ok = true;
            let mut witness = String::new();
            for n in 1..=9u64 {
                for k in abelian_groups_of_order(n) {
                    let expect = matches!(k.moduli.as_slice(), [] | [2] | [3] | [2, 2]);
                    let got = is_hol_full_symmetric(&k).unwrap();
                    if got != expect {
                        ok = false;
                        witness = format!("{:?}: got {got}", k.moduli);
                    }
                }
            }
            Check::from_outcome(
                "full-symmetric-classification",
                "Hol(K) is the full symmetric group exactly for K in {1, Z_2, Z_3, Z_2^2}, |K| <= 9",
                ok,
                || witness.clone(),
            )
        }),
        task(|| {
            // group axioms for pair arithmetic on an order-32 instance
            let els = enumerate_hol(1, 8);
            let id = crate::holomorph::HolElement::identity(1, 8);
            let mut ok = els.len() == 32;
            for a in &els {
                if a.mul(&a.inv()) != id {
                    ok = false;
                }
                for b in &els {
                    for c in &els {
                        if a.mul(b).mul(c) != a.mul(&b.mul(c)) {
                            ok = false;
                        }
                    }
                }
            }
            Check::from_outcome(
                "group-axioms-hol-z8",
                "pair multiplication on Hol(Z_8) is associative with two-sided inverses",
                ok,
                || "axiom violation".into(),
            )
        }),
        task(|| {
            let k = FiniteAbelianGroup::cyclic(4);
            let g = cayley_embed(&k).unwrap();
            let normal = g.is_normal_subset(&cayley_translations(&k));
            Check::from_outcome(
                "translations-normal",
                "the image of K is normal in its holomorph",
                normal,
                || "conjugate left the translation subgroup".into(),
            )
        }),
        task(|| {
            let ok = module_action_check(&FiniteAbelianGroup::cyclic(3)).unwrap()
                && module_action_check(&FiniteAbelianGroup::trivial()).unwrap()
                && module_action_check(&FiniteAbelianGroup::power(2, 2)).unwrap();
            Check::from_outcome(
                "module-action",
                "translation and automorphism actions on Z[K] satisfy f(x(m)) = f(x)(f(m))",
                ok,
                || "condition failed".into(),
            )
        }),
        task(|| {
            // maximality of the stabilizer picture for m = 2
            let ambient = gl_elements(3, 2);
            let gens: Vec<ResidueMatrix> =
                enumerate_hol(2, 2).iter().map(hol_to_matrix_row).collect();
            Check::from_outcome(
                "maximality-gl3",
                "Hol(Z_2^2) of order 24 is maximal in GL(3, Z_2) of order 168",
                ambient.len() == 168 && is_maximal(&gens, &ambient).unwrap(),
                || "closure found a proper intermediate subgroup".into(),
            )
        }),
        task(|| {
            let mut ok = true;
            for n in 1..=3 {
                for p in [2u64, 3] {
                    ok &= sylow_order_check(n, p);
                    ok &= sylow_inequality_check(n, p, 2);
                }
            }
            Check::from_outcome(
                "sylow-orders",
                "p-parts of |Hol(+_n Z_p)| and |GL(n+1, Z_p)| agree at r = 1 and differ for r >= 2",
                ok,
                || "p-part comparison failed".into(),
            )
        }),
    ]
}

fn resolution_acyclicity(seed: u64) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for (q, s1, s2, t1, t2) in [
        (8u64, 2u64, 2u64, 3u64, 7u64),
        (16, 4, 2, 3, 15),
        (32, 8, 2, 3, 31),
    ] {
        tasks.push(task(move || {
            let pres = MetabelianPresentation::new(q, s1, s2, t1, t2).unwrap();
            let res = build_resolution(&pres, 8);
            Check::from_outcome(
                &format!("acyclic-q{q}"),
                &format!(
                    "d∘d = 0 symbolically through total degree 8 for ({q},{s1},{s2},{t1},{t2})"
                ),
                res.is_ok(),
                || format!("{:?}", res.as_ref().err()),
            )
        }));
        tasks.push(task(move || {
            let pres = MetabelianPresentation::new(q, s1, s2, t1, t2).unwrap();
            let res = build_resolution(&pres, 2).unwrap();
            let planes = res.verify_plane_identities(6);
            Check::from_outcome(
                &format!("plane-identities-q{q}"),
                "the single-plane differentials satisfy the degree-1 and degree-2 identities",
                planes.is_ok(),
                || format!("{:?}", planes.as_ref().err()),
            )
        }));
    }
    tasks.push(task(move || {
        // normal form vs holomorph pair arithmetic for Hol(Z_8)
        let pres = MetabelianPresentation::new(8, 2, 2, 3, 7).unwrap();
        let letters = [
            Letter::X,
            Letter::Y,
            Letter::Z,
            Letter::XInv,
            Letter::YInv,
            Letter::ZInv,
        ];
        let eval = |m: (u64, u64, u64)| -> crate::holomorph::HolElement {
            let gx = crate::holomorph::HolElement::new(
                ResidueMatrix::from_rows(vec![vec![3]], 8),
                ResidueVector::zero(1, 8),
            );
            let gy = crate::holomorph::HolElement::new(
                ResidueMatrix::from_rows(vec![vec![7]], 8),
                ResidueVector::zero(1, 8),
            );
            let gz = crate::holomorph::HolElement::new(
                ResidueMatrix::identity(1, 8),
                ResidueVector::new(vec![1], 8),
            );
            let mut acc = crate::holomorph::HolElement::identity(1, 8);
            for _ in 0..m.0 {
                acc = acc.mul(&gx);
            }
            for _ in 0..m.1 {
                acc = acc.mul(&gy);
            }
            for _ in 0..m.2 {
                acc = acc.mul(&gz);
            }
            acc
        };
        let mut rng = seeded_rng(seed ^ 0x01);
        let mut ok = true;
        for _ in 0..1000 {
            let len = rng.gen_range(0..12);
            let word: Vec<Letter> = (0..len).map(|_| letters[rng.gen_range(0..6)]).collect();
            let direct = word.iter().fold(
                crate::holomorph::HolElement::identity(1, 8),
                |acc, &l| acc.mul(&eval(normalize(&[l], &pres))),
            );
            if direct != eval(normalize(&word, &pres)) {
                ok = false;
            }
        }
        Check::from_outcome(
            "normal-form-oracle",
            "normal forms agree with the permutation representation of Hol(Z_8) on 1000 random words",
            ok,
            || "word disagreed".into(),
        )
    }));
    tasks.push(task(|| {
        let pres = MetabelianPresentation::hol_odd_power(3, 2).unwrap();
        let res = build_resolution(&pres, 8);
        Check::from_outcome(
            "acyclic-one-factor",
            "the one-factor staircase resolution of Hol(Z_9) is acyclic through degree 8",
            res.is_ok(),
            || format!("{:?}", res.as_ref().err()),
        )
    }));
    tasks.push(task(|| {
        let pres = MetabelianPresentation::new(16, 4, 2, 3, 15).unwrap();
        let err = build_resolution_with(&pres, 4, D2Exponent::Literal);
        Check::from_outcome(
            "literal-d2-integrality",
            "the literal degree-2 exponent breaks integrality for q = 16; the plane-consistent one does not",
            matches!(err, Err(Error::Integrality(_))) && build_resolution(&pres, 4).is_ok(),
            || format!("{err:?}"),
        )
    }));
    tasks
}

fn homology_tables() -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for (p, r, qmax) in [
        (2u64, 3u32, 12usize),
        (2, 4, 12),
        (2, 5, 12),
        (3, 1, 10),
        (3, 2, 10),
        (3, 3, 10),
    ] {
        tasks.push(task(move || {
            let table = computed_homology(p, r, qmax);
            Check::from_outcome(
                &format!("grid-p{p}-r{r}"),
                &format!(
                    "assembled homology equals the closed-form table for p={p}, r={r}, q<={qmax}"
                ),
                table.is_ok(),
                || format!("{:?}", table.as_ref().err()),
            )
        }));
        tasks.push(task(move || {
            let h1 = computed_homology(p, r, 1).map(|t| t[1].clone());
            let ab = presentation_abelianization(p, r);
            Check::from_outcome(
                &format!("h1-abelianization-p{p}-r{r}"),
                "H_1 equals the abelianization computed from the relation matrix",
                matches!((&h1, &ab), (Ok(a), Ok(b)) if a == b),
                || format!("H_1 = {h1:?}, abelianization = {ab:?}"),
            )
        }));
    }
    tasks.push(task(|| {
        // the classical staircase complex of Z_n
        use crate::homology::{homology, ChainComplex};
        use crate::modular::IntegerMatrix;
        let n = 6i64;
        let ranks = vec![1usize; 8];
        let diffs = (1..8)
            .map(|q| IntegerMatrix::from_rows_i64(vec![vec![if q % 2 == 0 { n } else { 0 }]]))
            .collect();
        let c = ChainComplex::new(ranks, diffs).unwrap();
        let ok = homology(&c, 0) == crate::homology::AbelianInvariants::free(1)
            && homology(&c, 1) == crate::homology::AbelianInvariants::from_cyclic_orders(0, &[6])
            && homology(&c, 2).is_trivial()
            && homology(&c, 3) == crate::homology::AbelianInvariants::from_cyclic_orders(0, &[6]);
        Check::from_outcome(
            "staircase-z6",
            "the alternating 0, n complex has H_0 = Z, H_odd = Z_n, H_even = 0",
            ok,
            || "classical complex homology differs".into(),
        )
    }));
    tasks
}

fn cohomology_ranks() -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for (p, r, qmax) in [(2u64, 3u32, 12usize), (2, 4, 12), (2, 5, 12), (3, 3, 10)] {
        tasks.push(task(move || {
            let ranks = computed_homology(p, r, qmax).map(|t| uct_mod_p_ranks(&t, p));
            let want: Vec<u64> = (0..=qmax)
                .map(|q| mod_p_cohomology_rank(p, r, q).unwrap())
                .collect();
            Check::from_outcome(
                &format!("uct-p{p}-r{r}"),
                "universal-coefficient ranks of computed homology match the closed rank formulas",
                matches!(&ranks, Ok(got) if *got == want),
                || format!("got {ranks:?}, want {want:?}"),
            )
        }));
    }
    tasks.push(task(|| {
        let want = [1u64, 3, 5, 7];
        let ok = (0..4).all(|q| mod_p_cohomology_rank(2, 3, q).unwrap() == want[q]);
        Check::from_outcome(
            "low-degrees-p2",
            "mod-2 ranks in degrees 0..3 are 1, 3, 5, 7",
            ok,
            || "low-degree ranks changed".into(),
        )
    }));
    tasks.push(task(|| {
        // independence of r for p = 2
        let ok = (0..=16).all(|q| {
            let a = mod_p_cohomology_rank(2, 3, q).unwrap();
            mod_p_cohomology_rank(2, 4, q).unwrap() == a
                && mod_p_cohomology_rank(2, 9, q).unwrap() == a
        });
        Check::from_outcome(
            "rank-r-independence",
            "mod-2 cohomology ranks do not depend on the modulus exponent",
            ok,
            || "ranks depend on r".into(),
        )
    }));
    tasks
}

fn ring_hilbert() -> Vec<CheckTask> {
    vec![
        task(|| {
            let hs = rings::two_power_big().hilbert_series(16);
            let ok = (0..=16).all(|q| hs[q] == mod_p_cohomology_rank(2, 4, q).unwrap());
            Check::from_outcome(
                "ring-two-big",
                "the presented mod-2 ring for exponent > 3 has the formula ranks through degree 16",
                ok,
                || format!("series {hs:?}"),
            )
        }),
        task(|| {
            let hs = rings::two_power_r3().hilbert_series(16);
            let ok = (0..=16).all(|q| hs[q] == mod_p_cohomology_rank(2, 3, q).unwrap());
            Check::from_outcome(
                "ring-two-r3",
                "the presented mod-2 ring for exponent 3 has the formula ranks through degree 16",
                ok,
                || format!("series {hs:?}"),
            )
        }),
        task(|| {
            let mut ok = true;
            for p in [3u64, 5] {
                let hs = rings::odd_power(p).hilbert_series(20);
                ok &= (0..=20).all(|q| hs[q] == mod_p_cohomology_rank(p, 3, q).unwrap());
            }
            Check::from_outcome(
                "ring-odd",
                "the presented odd-p rings have the formula ranks through degree 20",
                ok,
                || "odd ring series mismatch".into(),
            )
        }),
        task(|| {
            let hs = rings::continuous_two().hilbert_series(16);
            let ok = hs[0] == 1 && hs[1] == 3 && (2..=16).all(|d| hs[d] == 4);
            Check::from_outcome(
                "ring-continuous",
                "the stable ring has series (1+t)^2/(1-t): 1, 3, 4, 4, ...",
                ok,
                || format!("series {hs:?}"),
            )
        }),
        task(|| {
            let odd_ok = rings::odd_power(3)
                .local_confluence_failures(12)
                .unwrap()
                .is_empty();
            let cont_ok = rings::continuous_two()
                .local_confluence_failures(8)
                .unwrap()
                .is_empty();
            let big_overlaps = !rings::two_power_big()
                .local_confluence_failures(8)
                .unwrap()
                .is_empty();
            Check::from_outcome(
                "confluence-diagnostic",
                "monomial and principal presentations are confluent; the mod-2 ring has a genuine overlap, counted by irreducible monomials",
                odd_ok && cont_ok && big_overlaps,
                || "confluence diagnostics changed".into(),
            )
        }),
    ]
}

fn dickson_noncollapse(seed: u64) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for (n, p) in [(2usize, 2u64), (3, 2), (2, 3)] {
        tasks.push(task(move || {
            let a = dickson_coefficient(n, p).unwrap();
            let b = dickson_coefficient_via_t(n, p).unwrap();
            Check::from_outcome(
                &format!("dual-route-n{n}-p{p}"),
                "product of nonzero linear forms equals the degree-one coefficient of the full product",
                a == b,
                || "routes disagree".into(),
            )
        }));
        tasks.push(task(move || {
            let d = dickson_coefficient(n, p).unwrap();
            Check::from_result(
                &format!("gl-invariance-n{n}-p{p}"),
                &format!("the Dickson coefficient is invariant under all of GL({n}, F_{p})"),
                check_gl_invariance(&d, n, p),
                || "some matrix moved it".into(),
            )
        }));
    }
    for (n, p, rule, label) in [
        (2usize, 2u64, D2Rule::UX2, "r3"),
        (2, 2, D2Rule::UZ, "rbig"),
        (3, 2, D2Rule::UZ, "rbig"),
        (2, 3, D2Rule::UZ, "odd"),
    ] {
        tasks.push(task(move || {
            let d = dickson_coefficient(n, p).unwrap();
            let image = apply_d2(&d, n, p, rule).unwrap();
            Check::from_outcome(
                &format!("noncollapse-n{n}-p{p}-{label}"),
                "the degree-2 transgression of the Dickson coefficient is nonzero",
                !image.is_zero(),
                || "image vanished".into(),
            )
        }));
    }
    tasks.push(task(move || {
        // d2 of d2 vanishes on the v-subalgebra
        let mut rng = seeded_rng(seed ^ 0xd2);
        let mut ok = true;
        for (n, p, rule) in [(2usize, 2u64, D2Rule::UZ), (2, 3, D2Rule::UZ)] {
            let alg = crate::graded::dickson_algebra(n, p);
            for _ in 0..200 {
                let mut el = alg.zero();
                for _ in 0..3 {
                    let mut exps = vec![0u32; alg.polynomial.len()];
                    for e in exps.iter_mut().take(n) {
                        *e = rng.gen_range(0..6);
                    }
                    el = alg.add(&el, &alg.monomial_elem((0, exps), rng.gen_range(1..p)));
                }
                let twice = apply_d2(&apply_d2(&el, n, p, rule).unwrap(), n, p, rule).unwrap();
                ok &= twice.is_zero();
            }
        }
        Check::from_outcome(
            "d2-squares-to-zero",
            "the transgression squares to zero on 200 random elements of the polynomial subalgebra",
            ok,
            || "d2 of d2 nonzero".into(),
        )
    }));
    tasks.push(task(|| {
        let alg = crate::graded::dickson_algebra(2, 2);
        let v1 = alg.polynomial_gen(0);
        Check::from_result(
            "counterexample-v1",
            "a single variable is not GL-invariant",
            check_gl_invariance(&v1, 2, 2).map(|b| !b),
            || "v1 unexpectedly invariant".into(),
        )
    }));
    tasks
}

fn congruence_tower(seed: u64) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for (n, k, p) in [(1usize, 1u32, 3u64), (1, 2, 3), (2, 1, 3), (1, 1, 5)] {
        tasks.push(task(move || {
            let params = GammaParams { n, k, p };
            let els = gamma_enumerate(&params);
            Check::from_outcome(
                &format!("order-n{n}-k{k}-p{p}"),
                "the congruence kernel order formula matches exhaustive enumeration",
                matches!(&els, Ok(e) if BigInt::from(e.len()) == params.order()),
                || format!("{:?} vs {}", els.as_ref().map(|e| e.len()), params.order()),
            )
        }));
        tasks.push(task(move || {
            let params = GammaParams { n, k, p };
            Check::from_result(
                &format!("omega1-n{n}-k{k}-p{p}"),
                "exponent-p elements = reduction kernel = central elements of the expected shape",
                omega1_and_kernel_check(&params),
                || "omega1/kernel/center mismatch".into(),
            )
        }));
    }
    tasks.push(task(|| {
        // p-power bijectivity between consecutive levels
        use crate::congruence::p_power_map;
        use crate::holomorph::HolElement;
        use std::collections::HashSet;
        let mut ok = true;
        for p in [3u64, 5] {
            let lower = GammaParams { n: 1, k: 1, p };
            let upper = GammaParams { n: 1, k: 2, p };
            let id_low = HolElement::identity(1, lower.modulus());
            let hol_pow = |g: &HolElement, e: u64| {
                let mut acc = HolElement::identity(1, g.modulus());
                for _ in 0..e {
                    acc = acc.mul(g);
                }
                acc
            };
            let omega_low: Vec<HolElement> = gamma_enumerate(&lower)
                .unwrap()
                .into_iter()
                .filter(|g| hol_pow(g, p) == id_low)
                .collect();
            let id_up = HolElement::identity(1, upper.modulus());
            let omega_up: HashSet<HolElement> = gamma_enumerate(&upper)
                .unwrap()
                .into_iter()
                .filter(|g| hol_pow(g, p) == id_up)
                .collect();
            let images: HashSet<HolElement> = omega_low
                .iter()
                .map(|g| p_power_map(&lower, g).unwrap())
                .collect();
            ok &= images.len() == omega_low.len() && images == omega_up;
        }
        Check::from_outcome(
            "p-power-bijective",
            "lift-then-power is a bijection between consecutive exponent-p layers",
            ok,
            || "p-power map not bijective".into(),
        )
    }));
    for (n, p) in [(1usize, 3u64), (1, 5), (2, 3)] {
        tasks.push(task(move || {
            let mut ok = true;
            let cells = n * n + n;
            let mut counter = vec![0u64; cells];
            let mut pairs = Vec::new();
            loop {
                let mut a = ResidueMatrix::new(n, n, p, vec![0; n * n]);
                for i in 0..n {
                    for j in 0..n {
                        a.set(i, j, counter[i * n + j]);
                    }
                }
                let x = ResidueVector::new((0..n).map(|i| counter[n * n + i]).collect(), p);
                pairs.push(LiePair::new(a, x));
                let mut i = 0;
                let mut done = false;
                loop {
                    if i == cells {
                        done = true;
                        break;
                    }
                    counter[i] += 1;
                    if counter[i] < p {
                        break;
                    }
                    counter[i] = 0;
                    i += 1;
                }
                if done {
                    break;
                }
            }
            for a in &pairs {
                for b in &pairs {
                    if bracket(a, b) != bracket_via_commutator(a, b) {
                        ok = false;
                    }
                }
            }
            Check::from_outcome(
                &format!("bracket-commutator-n{n}-p{p}"),
                "(AB-BA, Ay-Bx) equals the inverse p-power of the group commutator, exhaustively",
                ok,
                || "bracket mismatch".into(),
            )
        }));
    }
    tasks.push(task(move || {
        let mut rng = seeded_rng(seed ^ 0x7ac);
        let mut ok = true;
        for p in [2u64, 3, 5] {
            for n in 1..=3usize {
                for _ in 0..34 {
                    let rand_pair = |rng: &mut rand_chacha::ChaCha8Rng| {
                        LiePair::new(
                            ResidueMatrix::new(
                                n,
                                n,
                                p,
                                (0..n * n).map(|_| rng.gen_range(0..p)).collect(),
                            ),
                            ResidueVector::new((0..n).map(|_| rng.gen_range(0..p)).collect(), p),
                        )
                    };
                    let a = rand_pair(&mut rng);
                    let b = rand_pair(&mut rng);
                    let c = rand_pair(&mut rng);
                    let jac = bracket(&bracket(&a, &b), &c)
                        .add(&bracket(&bracket(&b, &c), &a))
                        .add(&bracket(&bracket(&c, &a), &b));
                    ok &= jac.is_zero();
                }
            }
        }
        Check::from_outcome(
            "jacobi-300",
            "the Jacobi identity holds on 300 random triples for n <= 3, p in {2, 3, 5}",
            ok,
            || "Jacobi violated".into(),
        )
    }));
    tasks.push(task(|| {
        let mut ok = true;
        for p in [2u64, 3, 5] {
            for n in 1..=3usize {
                ok &= structure_constants(n, p).is_ok();
            }
        }
        Check::from_outcome(
            "structure-constants",
            "the delta-formula table matches the bracket on every basis pair",
            ok,
            || "table construction failed".into(),
        )
    }));
    tasks.push(task(|| {
        let mut ok = true;
        for p in [3u64, 5] {
            for k in 1..=3u32 {
                let modulus = pow_u64(p, k + 1, u64::MAX);
                for a in 0..modulus / (p * p) {
                    ok &= mike_lemma_solve(p, k, a, PowerShape::PthPower).is_ok();
                }
            }
        }
        for k in 2..=4u32 {
            let modulus = 1u64 << (k + 1);
            for a in 0..modulus / 8 {
                ok &= mike_lemma_solve(2, k, a, PowerShape::Square).is_ok();
            }
            for a in 0..(modulus / 16).max(1) {
                ok &= mike_lemma_solve(2, k, a, PowerShape::FourthPower).is_ok();
            }
        }
        Check::from_outcome(
            "power-congruence-solvable",
            "every target of the stated shape is a p-th power / square / fourth power of the stated shape",
            ok,
            || "unsolvable instance".into(),
        )
    }));
    tasks.push(task(|| {
        let ok = almost_powerfully_embedded_check(&GammaParams { n: 1, k: 2, p: 3 }).unwrap()
            && almost_powerfully_embedded_check(&GammaParams { n: 1, k: 2, p: 2 }).unwrap()
            && almost_powerfully_embedded_check(&GammaParams { n: 1, k: 1, p: 5 }).unwrap();
        Check::from_outcome(
            "almost-powerful",
            "[G, N] lands in the p-th power subgroup (square/fourth-power subgroups for p = 2)",
            ok,
            || "containment failed".into(),
        )
    }));
    tasks
}

fn bockstein_suite() -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for p in [2u64, 3, 5] {
        tasks.push(task(move || {
            let mut ok = true;
            for n in 1..=3usize {
                let alg = bockstein_algebra(n, p);
                for idx in 0..alg.exterior.len() {
                    ok &= bockstein(&bockstein(&alg.exterior_gen(idx), n, p), n, p).is_zero();
                }
                for idx in 0..alg.polynomial.len() {
                    ok &= bockstein(&bockstein(&alg.polynomial_gen(idx), n, p), n, p).is_zero();
                }
            }
            Check::from_outcome(
                &format!("beta-squared-p{p}"),
                "the first Bockstein squares to zero on every generator, n <= 3",
                ok,
                || "beta^2 nonzero".into(),
            )
        }));
        tasks.push(task(move || {
            let mut ok = true;
            for n in 1..=3usize {
                let sc = structure_constants(n, p).unwrap();
                let (ea, pa) = bockstein_on_generators(n, p);
                let (eb, pb) = bockstein_on_generators_generic(&sc);
                ok &= ea == eb && pa == pb;
            }
            Check::from_outcome(
                &format!("beta-two-routes-p{p}"),
                "the closed generator formulas equal the structure-constant instantiation",
                ok,
                || "routes disagree".into(),
            )
        }));
    }
    tasks.push(task(|| {
        let (ext, _) = bockstein_on_generators(1, 5);
        let alg = bockstein_algebra(1, 5);
        let expect = alg.neg(&alg.mul(&alg.exterior_gen(0), &alg.exterior_gen(1)));
        Check::from_outcome(
            "n1-examples",
            "for n = 1: beta of the matrix class vanishes and beta(x_1) = -x_11 x_1",
            ext[0].is_zero() && ext[1] == expect,
            || "n = 1 values changed".into(),
        )
    }));
    tasks
}

fn wreath_permutative() -> Vec<CheckTask> {
    use crate::wreath::*;
    let mut tasks: Vec<CheckTask> = Vec::new();
    for m in [2u64, 3] {
        tasks.push(task(move || {
            // exhaustive homomorphism checks for q = 2
            use crate::perm::Perm;
            let hol1 = enumerate_hol(1, m);
            let mut elements = Vec::new();
            for sigma in [Perm::identity(2), Perm::new(vec![1, 0])] {
                for h1 in &hol1 {
                    for h2 in &hol1 {
                        elements.push(WreathElement::new(
                            sigma.clone(),
                            vec![h1.clone(), h2.clone()],
                        ));
                    }
                }
            }
            let mut ok = true;
            let mut images = std::collections::HashSet::new();
            for w in &elements {
                ok &= images.insert(embed_j(w));
            }
            let mul = |a: &crate::holomorph::HolElement, b: &crate::holomorph::HolElement| {
                a.mul(b)
            };
            for a in &elements {
                for b in &elements {
                    ok &= embed_j(&wreath_mul(a, b, mul)) == embed_j(a).mul(&embed_j(b));
                }
            }
            Check::from_outcome(
                &format!("embed-j-m{m}"),
                "the wreath-to-holomorph embedding is an injective homomorphism, exhaustively at q = 2",
                ok,
                || "embedding failed".into(),
            )
        }));
    }
    tasks.push(task(|| {
        let s2 = PermGroup::symmetric(2);
        let ok = wreath_pullback_check(&s2.elements, 2).unwrap()
            && wreath_pullback_check(&s2.elements, 3).unwrap()
            && wreath_pullback_check(&PermGroup::trivial(2).elements, 3).unwrap();
        Check::from_outcome(
            "pullback",
            "the wreath product is the pullback over the coordinate-permutation action",
            ok,
            || "pullback correspondence failed".into(),
        )
    }));
    for (kind, label, moduli) in [
        (CategoryKind::AutPowers, "aut", [2u64, 3]),
        (CategoryKind::HolPowers, "hol", [2, 3]),
        (CategoryKind::HolMatrix, "matrix", [2, 4]),
    ] {
        tasks.push(task(move || {
            let mut ok = true;
            for m in moduli {
                ok &= permutative_axioms_check(kind, m, 2).unwrap();
            }
            Check::from_outcome(
                &format!("axioms-{label}"),
                "permutative axioms 1-5 and naturality hold at objects <= 2",
                ok,
                || "axiom violated".into(),
            )
        }));
    }
    tasks
}

fn number_theory_lemmas() -> Vec<CheckTask> {
    vec![
        task(|| {
            // nu_2(3^m - 1): 1 for odd m, nu_2(m) + 2 for even m
            let mut pow = BigInt::from(1);
            let mut ok = true;
            for m in 1..=1024u64 {
                pow *= 3;
                let got = vp(&(&pow - 1), 2);
                let want = if m % 2 == 1 {
                    1
                } else {
                    crate::modular::vp_u64(m, 2) + 2
                };
                ok &= got == want;
            }
            Check::from_outcome(
                "nu2-of-3m",
                "nu_2(3^m - 1) is 1 for odd m and nu_2(m) + 2 for even m, m <= 1024",
                ok,
                || "valuation mismatch".into(),
            )
        }),
        task(|| {
            // nu_p(s^{(p-1)p^{q-1}k} - 1) = q for units s generating mod p^r
            let mut ok = true;
            for p in [3u64, 5] {
                for r in 2..=5u32 {
                    let m = pow_u64(p, r, u64::MAX);
                    let (s, _) = aut_cyclic_generators(m).unwrap()[0];
                    for q in 1..r {
                        for k in 1..=6u32 {
                            if k as u64 % p == 0 {
                                continue;
                            }
                            let e = (p - 1) as u32 * pow_u64(p, q - 1, u64::MAX) as u32 * k;
                            let val = BigInt::from(s).pow(e) - 1;
                            ok &= vp(&val, p) == q;
                        }
                    }
                }
            }
            Check::from_outcome(
                "nup-generator-powers",
                "nu_p(s^{(p-1)p^{q-1}k} - 1) = q for generators s and (k, p) = 1",
                ok,
                || "valuation mismatch".into(),
            )
        }),
        task(|| {
            let mut ok = true;
            for r in 3..=10u32 {
                let m = 1u64 << r;
                let gens = aut_cyclic_generators(m).unwrap();
                ok &= gens == vec![(3, 1 << (r - 2)), (m - 1, 2)];
                ok &= unit_order(3, m) == 1 << (r - 2) && unit_order(m - 1, m) == 2;
                // closure of the two generators is the full unit group
                let mut seen = std::collections::HashSet::new();
                let mut frontier = vec![1u64];
                seen.insert(1u64);
                while let Some(x) = frontier.pop() {
                    for &(g, _) in &gens {
                        let y = (x as u128 * g as u128 % m as u128) as u64;
                        if seen.insert(y) {
                            frontier.push(y);
                        }
                    }
                }
                ok &= seen.len() as u64 == m / 2;
            }
            Check::from_outcome(
                "unit-group-generators",
                "multiplication by 3 and by 2^r - 1 generate the units mod 2^r with orders 2^{r-2} and 2",
                ok,
                || "generator orders changed".into(),
            )
        }),
        task(|| {
            let mut ok = true;
            for p in primes_up_to(97) {
                let prod = (1..p).fold(1u64, |acc, c| acc * c % p);
                ok &= prod == p - 1; // -1 mod p
            }
            Check::from_outcome(
                "wilson-products",
                "the product of the nonzero residues is -1 mod p for every prime p <= 97",
                ok,
                || "product differed".into(),
            )
        }),
        task(|| {
            let ok = gl_order(2, 2, 2) == BigInt::from(gl_elements(2, 4).len())
                && gl_order(2, 3, 1) == BigInt::from(gl_elements(2, 3).len());
            Check::from_outcome(
                "gl-order-vs-enumeration",
                "the GL order formula matches exhaustive matrix counts",
                ok,
                || "order mismatch".into(),
            )
        }),
    ]
}
