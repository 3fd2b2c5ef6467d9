//! Graded-commutative F_p algebras with exterior and polynomial generators:
//! Hilbert series of presented rings, the Dickson coefficient, GL-invariance,
//! and the degree-2 transgression rules witnessing non-collapse.

use crate::error::{Error, Result};
use crate::modular::{gl_elements, ResidueMatrix};
use crate::util::is_prime;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial: bitmask over exterior generators plus exponents of polynomial
/// generators. Exterior exponents never exceed 1.
pub type MonomialKey = (u64, Vec<u32>);

/// A graded-commutative algebra over F_p: exterior generators anticommute,
/// polynomial generators are central. Monomial normal form lists exterior
/// generators in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub p: u64,
    pub exterior: Vec<(String, u32)>,
    pub polynomial: Vec<(String, u32)>,
}

impl GradedAlgebra {
    pub fn new(p: u64, exterior: Vec<(&str, u32)>, polynomial: Vec<(&str, u32)>) -> Self {
        assert!(is_prime(p), "coefficients must be a prime field");
        assert!(exterior.len() <= 64, "exterior mask is a u64");
        if p > 2 {
            for (name, d) in &polynomial {
                assert!(
                    d % 2 == 0,
                    "odd characteristic needs even polynomial degrees ({name})"
                );
            }
        }
        GradedAlgebra {
            p,
            exterior: exterior
                .into_iter()
                .map(|(n, d)| (n.to_string(), d))
                .collect(),
            polynomial: polynomial
                .into_iter()
                .map(|(n, d)| (n.to_string(), d))
                .collect(),
        }
    }

    pub fn monomial_degree(&self, key: &MonomialKey) -> u32 {
        let mut deg = 0;
        for (b, (_, d)) in self.exterior.iter().enumerate() {
            if key.0 >> b & 1 == 1 {
                deg += d;
            }
        }
        for (e, (_, d)) in key.1.iter().zip(&self.polynomial) {
            deg += e * d;
        }
        deg
    }

    pub fn zero(&self) -> GradedElement {
        GradedElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> GradedElement {
        self.monomial_elem((0, vec![0; self.polynomial.len()]), 1)
    }

    pub fn monomial_elem(&self, key: MonomialKey, coeff: u64) -> GradedElement {
        let mut terms = BTreeMap::new();
        if coeff % self.p != 0 {
            terms.insert(key, coeff % self.p);
        }
        GradedElement { terms }
    }

    pub fn exterior_gen(&self, index: usize) -> GradedElement {
        assert!(index < self.exterior.len());
        self.monomial_elem((1 << index, vec![0; self.polynomial.len()]), 1)
    }

    pub fn polynomial_gen(&self, index: usize) -> GradedElement {
        assert!(index < self.polynomial.len());
        let mut exps = vec![0; self.polynomial.len()];
        exps[index] = 1;
        self.monomial_elem((0, exps), 1)
    }

    /// Generator by name, exterior or polynomial.
    pub fn gen(&self, name: &str) -> GradedElement {
        if let Some(i) = self.exterior.iter().position(|(n, _)| n == name) {
            return self.exterior_gen(i);
        }
        if let Some(i) = self.polynomial.iter().position(|(n, _)| n == name) {
            return self.polynomial_gen(i);
        }
        panic!("no generator named {name}");
    }

    pub fn add(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let mut out = a.clone();
        for (k, c) in &b.terms {
            let entry = out.terms.entry(k.clone()).or_insert(0);
            *entry = (*entry + c) % self.p;
            if *entry == 0 {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn scale(&self, a: &GradedElement, c: u64) -> GradedElement {
        let c = c % self.p;
        if c == 0 {
            return self.zero();
        }
        GradedElement {
            terms: a
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c % self.p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &GradedElement) -> GradedElement {
        self.scale(a, self.p - 1)
    }

    /// Koszul sign for merging two exterior masks, as a unit of F_p.
    fn merge_sign(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let mut inversions = 0u32;
        for j in 0..64u32 {
            if b >> j & 1 == 1 {
                inversions += (a >> (j + 1)).count_ones();
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            self.p - 1
        }
    }

    pub fn mul(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let mut out = self.zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                if ka.0 & kb.0 != 0 {
                    continue; // exterior square
                }
                let sign = self.merge_sign(ka.0, kb.0);
                let key = (
                    ka.0 | kb.0,
                    ka.1.iter().zip(&kb.1).map(|(x, y)| x + y).collect(),
                );
                let c = ca * cb % self.p * sign % self.p;
                let entry = out.terms.entry(key).or_insert(0);
                *entry = (*entry + c) % self.p;
            }
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    pub fn pow(&self, a: &GradedElement, e: u32) -> GradedElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Degree when homogeneous.
    pub fn degree(&self, a: &GradedElement) -> Option<u32> {
        let mut deg = None;
        for k in a.terms.keys() {
            let d = self.monomial_degree(k);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Substitutes elements for the polynomial generators; exterior
    /// generators are left alone. Images must be homogeneous of the same
    /// degree as the generator they replace.
    pub fn substitute_poly(&self, a: &GradedElement, images: &[GradedElement]) -> GradedElement {
        assert_eq!(images.len(), self.polynomial.len());
        let mut out = self.zero();
        for (k, c) in &a.terms {
            let mut term = self.monomial_elem((k.0, vec![0; self.polynomial.len()]), *c);
            for (j, e) in k.1.iter().enumerate() {
                if *e > 0 {
                    term = self.mul(&term, &self.pow(&images[j], *e));
                }
            }
            out = self.add(&out, &term);
        }
        out
    }

    /// Extends generator images to a graded derivation of odd degree:
    /// d(g1 g2 ... gk) = sum_j (-1)^{deg(g1..g_{j-1})} g1.. d(g_j) .. gk.
    ///
    /// `ext_images[i]` / `poly_images[j]` give d on generators (zero allowed).
    pub fn derivation(
        &self,
        a: &GradedElement,
        ext_images: &[GradedElement],
        poly_images: &[GradedElement],
    ) -> GradedElement {
        assert_eq!(ext_images.len(), self.exterior.len());
        assert_eq!(poly_images.len(), self.polynomial.len());
        let mut out = self.zero();
        for (k, c) in &a.terms {
            let mut prefix_deg = 0u32;
            // exterior factors, in declaration order
            for (b, (_, gdeg)) in self.exterior.iter().enumerate() {
                if k.0 >> b & 1 == 0 {
                    continue;
                }
                if !ext_images[b].terms.is_empty() {
                    let before = k.0 & ((1u64 << b) - 1);
                    let after = k.0 & !((1u64 << b) - 1) & !(1u64 << b);
                    let prefix = self.monomial_elem((before, vec![0; self.polynomial.len()]), *c);
                    let suffix = self.monomial_elem((after, k.1.clone()), 1);
                    let mut term = self.mul(&self.mul(&prefix, &ext_images[b]), &suffix);
                    if self.p > 2 && prefix_deg % 2 == 1 {
                        term = self.neg(&term);
                    }
                    out = self.add(&out, &term);
                }
                prefix_deg += gdeg;
            }
            // polynomial factors: d(v^e) = e v^{e-1} d(v), even-degree v
            for (j, e) in k.1.iter().enumerate() {
                if *e == 0 || poly_images[j].terms.is_empty() {
                    continue;
                }
                let mut exps = k.1.clone();
                exps[j] -= 1;
                let rest = self.monomial_elem((k.0, exps), *c);
                let mut term = self.mul(&rest, &poly_images[j]);
                term = self.scale(&term, (*e as u64) % self.p);
                if self.p > 2 && prefix_deg % 2 == 1 {
                    term = self.neg(&term);
                }
                out = self.add(&out, &term);
            }
        }
        out
    }

    pub fn render(&self, a: &GradedElement) -> String {
        if a.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in &a.terms {
            let mut factors = Vec::new();
            if *c != 1 || (k.0 == 0 && k.1.iter().all(|e| *e == 0)) {
                factors.push(c.to_string());
            }
            for (b, (name, _)) in self.exterior.iter().enumerate() {
                if k.0 >> b & 1 == 1 {
                    factors.push(name.clone());
                }
            }
            for (j, e) in k.1.iter().enumerate() {
                if *e == 1 {
                    factors.push(self.polynomial[j].0.clone());
                } else if *e > 1 {
                    factors.push(format!("{}^{}", self.polynomial[j].0, e));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

/// An F_p combination of monomials; meaning comes from its [`GradedAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedElement {
    pub terms: BTreeMap<MonomialKey, u64>,
}

impl GradedElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} terms", self.terms.len())
    }
}

/// A presented graded ring: algebra plus rewrite rules head -> tail.
///
/// Heads must be the degree-lex largest monomial of their relation, taking
/// generator significance from declaration order (exterior first).
pub struct GradedPresentation {
    pub algebra: GradedAlgebra,
    pub relations: Vec<(MonomialKey, GradedElement)>,
}

impl GradedPresentation {
    pub fn new(
        algebra: GradedAlgebra,
        relations: Vec<(GradedElement, GradedElement)>,
    ) -> Result<Self> {
        let mut oriented = Vec::new();
        for (lhs, rhs) in relations {
            if lhs.terms.len() != 1 {
                return Err(Error::InvalidArgument(
                    "relation head must be a single monomial".into(),
                ));
            }
            let (head, c) = lhs.terms.iter().next().unwrap();
            if *c != 1 {
                return Err(Error::InvalidArgument("head must be monic".into()));
            }
            let hd = algebra.monomial_degree(head);
            for k in rhs.terms.keys() {
                if algebra.monomial_degree(k) != hd {
                    return Err(Error::InvalidArgument(
                        "relations must be homogeneous".into(),
                    ));
                }
                if degree_lex_ge(&algebra, k, head) {
                    return Err(Error::InvalidArgument(format!(
                        "head {head:?} is not the largest monomial of its relation"
                    )));
                }
            }
            oriented.push((head.clone(), rhs));
        }
        Ok(GradedPresentation {
            algebra,
            relations: oriented,
        })
    }

    fn divides(head: &MonomialKey, k: &MonomialKey) -> bool {
        head.0 & k.0 == head.0 && head.1.iter().zip(&k.1).all(|(a, b)| a <= b)
    }

    fn is_normal(&self, k: &MonomialKey) -> bool {
        self.relations
            .iter()
            .all(|(head, _)| !Self::divides(head, k))
    }

    /// Ranks of the presented ring: the number of rule-irreducible monomials
    /// in each degree 0..=max_degree.
    pub fn hilbert_series(&self, max_degree: u32) -> Vec<u64> {
        let mut counts = vec![0u64; max_degree as usize + 1];
        let polys = self.algebra.polynomial.len();
        let mut exps = vec![0u32; polys];
        // iterate over all exterior masks and bounded polynomial exponents
        let ext_count = self.algebra.exterior.len();
        let mut mask: u64 = 0;
        loop {
            let base_deg: u32 = (0..ext_count)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| self.algebra.exterior[b].1)
                .sum();
            if base_deg <= max_degree {
                self.count_poly_rec(&mut exps, 0, base_deg, max_degree, mask, &mut counts);
            }
            mask += 1;
            if mask >= 1u64 << ext_count {
                break;
            }
        }
        counts
    }

    fn count_poly_rec(
        &self,
        exps: &mut Vec<u32>,
        j: usize,
        deg: u32,
        cap: u32,
        mask: u64,
        counts: &mut [u64],
    ) {
        if j == exps.len() {
            let key = (mask, exps.clone());
            if self.is_normal(&key) {
                counts[deg as usize] += 1;
            }
            return;
        }
        let gdeg = self.algebra.polynomial[j].1;
        let mut e = 0u32;
        loop {
            let d = deg + e * gdeg;
            if d > cap {
                break;
            }
            exps[j] = e;
            self.count_poly_rec(exps, j + 1, d, cap, mask, counts);
            e += 1;
        }
        exps[j] = 0;
    }

    /// Rewrites to normal form, reducing the largest reducible monomial
    /// first. Errors if the step cap is exceeded.
    pub fn reduce(&self, a: &GradedElement) -> Result<GradedElement> {
        let alg = &self.algebra;
        let mut cur = a.clone();
        for _ in 0..20_000 {
            let target = cur
                .terms
                .keys()
                .filter(|k| !self.is_normal(k))
                .max_by(|a, b| {
                    if degree_lex_ge(&self.algebra, a, b) {
                        std::cmp::Ordering::Greater
                    } else {
                        std::cmp::Ordering::Less
                    }
                })
                .cloned();
            let Some(k) = target else {
                return Ok(cur);
            };
            let c = cur.terms[&k];
            let (head, tail) = self
                .relations
                .iter()
                .find(|(h, _)| Self::divides(h, &k))
                .expect("reducible monomial has a matching head");
            // k = head * quotient
            let quot = (
                k.0 & !head.0,
                k.1.iter().zip(&head.1).map(|(a, b)| a - b).collect(),
            );
            let sign = alg.merge_sign(head.0, quot.0);
            let quotient_elem = alg.monomial_elem(quot, c * sign % alg.p);
            let replacement = alg.mul(tail, &quotient_elem);
            let minus = alg.monomial_elem(k, alg.p - c);
            cur = alg.add(&cur, &minus);
            cur = alg.add(&cur, &replacement);
        }
        Err(Error::NonTerminatingRewrite(format!(
            "no normal form after 20000 steps ({} terms left)",
            a.terms.len()
        )))
    }

    /// Local-confluence diagnostic: for every pair of rules with overlapping
    /// heads, reduce the overlap both ways and compare. Returns the list of
    /// overlaps whose two normal forms disagree.
    pub fn local_confluence_failures(&self, max_degree: u32) -> Result<Vec<MonomialKey>> {
        let alg = &self.algebra;
        let mut bad = Vec::new();
        for (i, (h1, t1)) in self.relations.iter().enumerate() {
            for (h2, t2) in self.relations.iter().skip(i) {
                // least common multiple of the heads
                let lcm: MonomialKey = (
                    h1.0 | h2.0,
                    h1.1.iter().zip(&h2.1).map(|(a, b)| *a.max(b)).collect(),
                );
                if lcm == *h1 && lcm == *h2 {
                    continue;
                }
                if alg.monomial_degree(&lcm) > max_degree {
                    continue;
                }
                // one step with rule 1, one step with rule 2, then reduce both
                let step = |head: &MonomialKey, tail: &GradedElement| -> GradedElement {
                    let quot = (
                        lcm.0 & !head.0,
                        lcm.1
                            .iter()
                            .zip(&head.1)
                            .map(|(a, b)| a - b)
                            .collect::<Vec<u32>>(),
                    );
                    let sign = alg.merge_sign(head.0, quot.0);
                    alg.mul(tail, &alg.monomial_elem(quot, sign))
                };
                let a = self.reduce(&step(h1, t1))?;
                let b = self.reduce(&step(h2, t2))?;
                if a != b {
                    bad.push(lcm);
                }
            }
        }
        Ok(bad)
    }
}

/// Degree-lex comparison: higher degree wins, then lexicographic with
/// polynomial generators (in declaration order) more significant than
/// exterior ones. Returns a >= b.
fn degree_lex_ge(alg: &GradedAlgebra, a: &MonomialKey, b: &MonomialKey) -> bool {
    if a == b {
        return true;
    }
    let deg = (alg.monomial_degree(a), alg.monomial_degree(b));
    if deg.0 != deg.1 {
        return deg.0 > deg.1;
    }
    let ext = |m: &MonomialKey| -> Vec<u32> {
        (0..alg.exterior.len())
            .map(|bit| (m.0 >> bit & 1) as u32)
            .collect()
    };
    (&a.1, ext(a)) >= (&b.1, ext(b))
}

/// Presented ring constructors
pub mod rings {
    use super::*;

    /// H*(Hol(Z_{2^r}); F_2) for r > 3:
    /// Λ(x) ⊗ F_2[a, b, c, y, z] with a^2 = ax + ay, az = 0, ab = by,
    /// b^2 = acx + bxz + acy.
    pub fn two_power_big() -> GradedPresentation {
        // b declared first so every relation head is degree-lex largest
        let alg = GradedAlgebra::new(
            2,
            vec![("x", 1)],
            vec![("b", 3), ("a", 1), ("c", 4), ("y", 1), ("z", 2)],
        );
        let g = |s: &str| alg.gen(s);
        let m = |els: &[&GradedElement]| els.iter().fold(alg.one(), |acc, e| alg.mul(&acc, e));
        let relations = vec![
            (
                m(&[&g("a"), &g("a")]),
                alg.add(&m(&[&g("a"), &g("x")]), &m(&[&g("a"), &g("y")])),
            ),
            (m(&[&g("a"), &g("z")]), alg.zero()),
            (m(&[&g("a"), &g("b")]), m(&[&g("b"), &g("y")])),
            (
                m(&[&g("b"), &g("b")]),
                alg.add(
                    &alg.add(
                        &m(&[&g("a"), &g("c"), &g("x")]),
                        &m(&[&g("b"), &g("x"), &g("z")]),
                    ),
                    &m(&[&g("a"), &g("c"), &g("y")]),
                ),
            ),
        ];
        GradedPresentation::new(alg, relations).expect("presentation is oriented")
    }

    /// H*(Hol(Z_8); F_2):
    /// F_2[a, b, c, x, y] with a^2 = ax + ay, ax^2 = 0, ab = by,
    /// b^2 = acx + bx^3 + acy + cx^2.
    pub fn two_power_r3() -> GradedPresentation {
        let alg = GradedAlgebra::new(
            2,
            vec![],
            vec![("b", 3), ("a", 1), ("c", 4), ("x", 1), ("y", 1)],
        );
        let g = |s: &str| alg.gen(s);
        let m = |els: &[&GradedElement]| els.iter().fold(alg.one(), |acc, e| alg.mul(&acc, e));
        let relations = vec![
            (
                m(&[&g("a"), &g("a")]),
                alg.add(&m(&[&g("a"), &g("x")]), &m(&[&g("a"), &g("y")])),
            ),
            (m(&[&g("a"), &g("x"), &g("x")]), alg.zero()),
            (m(&[&g("a"), &g("b")]), m(&[&g("b"), &g("y")])),
            (
                m(&[&g("b"), &g("b")]),
                alg.add(
                    &alg.add(
                        &m(&[&g("a"), &g("c"), &g("x")]),
                        &m(&[&g("b"), &g("x"), &g("x"), &g("x")]),
                    ),
                    &alg.add(
                        &m(&[&g("a"), &g("c"), &g("y")]),
                        &m(&[&g("c"), &g("x"), &g("x")]),
                    ),
                ),
            ),
        ];
        GradedPresentation::new(alg, relations).expect("presentation is oriented")
    }

    /// H*(Hol(Z_{p^r}); F_p) for odd p, r >= 3:
    /// Λ(d_0, ..., d_{p-2}, e, x) ⊗ F_p[f, z] with d_i d_j = d_i e = d_i z = 0.
    pub fn odd_power(p: u64) -> GradedPresentation {
        assert!(p % 2 == 1 && is_prime(p));
        let mut ext: Vec<(String, u32)> = Vec::new();
        for i in 0..=(p - 2) {
            ext.push((format!("d{i}"), (2 * (p - 1) * (i + 1) - 1) as u32));
        }
        ext.push(("e".into(), (2 * p * (p - 1) - 1) as u32));
        ext.push(("x".into(), 1));
        let alg = GradedAlgebra {
            p,
            exterior: ext,
            polynomial: vec![("f".into(), (2 * p * (p - 1)) as u32), ("z".into(), 2)],
        };
        let mut relations = Vec::new();
        let e_index = (p - 1) as usize;
        let z = alg.polynomial_gen(1);
        for i in 0..(p - 1) as usize {
            for j in (i + 1)..(p - 1) as usize {
                relations.push((
                    alg.mul(&alg.exterior_gen(i), &alg.exterior_gen(j)),
                    alg.zero(),
                ));
            }
            relations.push((
                alg.mul(&alg.exterior_gen(i), &alg.exterior_gen(e_index)),
                alg.zero(),
            ));
            relations.push((alg.mul(&alg.exterior_gen(i), &z), alg.zero()));
        }
        GradedPresentation::new(alg, relations).expect("monomial relations")
    }

    /// The stable ring Λ(x) ⊗ F_2[u, y] / (u^2 = ux + uy), whose Hilbert
    /// series is (1+t)^2/(1-t).
    pub fn continuous_two() -> GradedPresentation {
        let alg = GradedAlgebra::new(2, vec![("x", 1)], vec![("u", 1), ("y", 1)]);
        let g = |s: &str| alg.gen(s);
        let u2 = alg.mul(&g("u"), &g("u"));
        let rhs = alg.add(&alg.mul(&g("u"), &g("x")), &alg.mul(&g("u"), &g("y")));
        GradedPresentation::new(alg, vec![(u2, rhs)]).expect("oriented")
    }
}

/// Transgression rule on the fiber polynomial classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum D2Rule {
    /// d2(v_i) = u_i z_i (odd p, or p = 2 with modulus exponent > 3)
    UZ,
    /// d2(v_i) = u_i x_i^2 (p = 2 with modulus exponent 3)
    UX2,
}

/// The ambient algebra for Dickson/d2 computations over F_p with n blocks:
/// exterior u_i, polynomial v_i and z_i (plus x_i of degree 1 when p = 2).
pub fn dickson_algebra(n: usize, p: u64) -> GradedAlgebra {
    let ext: Vec<(String, u32)> = (1..=n).map(|i| (format!("u{i}"), 1)).collect();
    let mut poly: Vec<(String, u32)> = (1..=n).map(|i| (format!("v{i}"), 2)).collect();
    poly.extend((1..=n).map(|i| (format!("z{i}"), 2)));
    if p == 2 {
        poly.extend((1..=n).map(|i| (format!("x{i}"), 1)));
    }
    GradedAlgebra {
        p,
        exterior: ext,
        polynomial: poly,
    }
}

fn v_index(_n: usize, i: usize) -> usize {
    i // v_1..v_n occupy polynomial slots 0..n
}

/// The coefficient of t in prod_{c in F_p^n} (t + c_1 v_1 + ... + c_n v_n):
/// the product of all nonzero linear forms in the v_i.
pub fn dickson_coefficient(n: usize, p: u64) -> Result<GradedElement> {
    let total = (p as u128).pow(n as u32);
    if total > 1 << 20 {
        return Err(Error::BudgetExceeded(format!("{total} linear forms")));
    }
    let alg = dickson_algebra(n, p);
    let mut acc = alg.one();
    let mut tuple = vec![0u64; n];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(acc);
            }
            tuple[i] += 1;
            if tuple[i] < p {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        let mut form = alg.zero();
        for (i, &c) in tuple.iter().enumerate() {
            form = alg.add(&form, &alg.scale(&alg.polynomial_gen(v_index(n, i)), c));
        }
        acc = alg.mul(&acc, &form);
    }
}

/// Independent route: expand the full product over all tuples, including
/// zero, as a polynomial in an added variable t, and take the coefficient of
/// t^1.
pub fn dickson_coefficient_via_t(n: usize, p: u64) -> Result<GradedElement> {
    let alg = dickson_algebra(n, p);
    // polynomial in t with GradedElement coefficients, truncated to t-degree 1
    // (t * higher terms can't contribute to the coefficient of t^1)
    let mut coeffs: Vec<GradedElement> = vec![alg.one()];
    let total = (p as u128).pow(n as u32);
    if total > 1 << 20 {
        return Err(Error::BudgetExceeded(format!("{total} linear forms")));
    }
    let mut tuple = vec![0u64; n];
    let mut first = true;
    loop {
        if !first {
            let mut i = 0;
            let mut done = false;
            loop {
                if i == n {
                    done = true;
                    break;
                }
                tuple[i] += 1;
                if tuple[i] < p {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if done {
                break;
            }
        }
        first = false;
        let mut form = alg.zero();
        for (i, &c) in tuple.iter().enumerate() {
            form = alg.add(&form, &alg.scale(&alg.polynomial_gen(v_index(n, i)), c));
        }
        // multiply (t + form) into the truncated polynomial
        let mut next: Vec<GradedElement> = vec![alg.zero(); (coeffs.len() + 1).min(3)];
        for (d, c) in coeffs.iter().enumerate() {
            if d + 1 < next.len() {
                let e = alg.add(&next[d + 1], c);
                next[d + 1] = e;
            }
            if d < next.len() {
                let e = alg.add(&next[d], &alg.mul(c, &form));
                next[d] = e;
            }
        }
        coeffs = next;
    }
    Ok(coeffs.into_iter().nth(1).unwrap_or_default())
}

/// Is f invariant under every substitution v -> M^T v, M in GL(n, F_p)?
pub fn check_gl_invariance(f: &GradedElement, n: usize, p: u64) -> Result<bool> {
    if n > 3 || p > 3 {
        return Err(Error::BudgetExceeded(format!("GL({n}, F_{p}) enumeration")));
    }
    let alg = dickson_algebra(n, p);
    for mat in gl_elements(n, p) {
        if !is_invariant_under(f, &alg, &mat, n, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_invariant_under(
    f: &GradedElement,
    alg: &GradedAlgebra,
    mat: &ResidueMatrix,
    n: usize,
    _p: u64,
) -> bool {
    // v_i -> sum_j M_{ji} v_j; other polynomial generators fixed
    let mut images: Vec<GradedElement> = Vec::new();
    for j in 0..alg.polynomial.len() {
        if j < n {
            let mut img = alg.zero();
            for row in 0..n {
                img = alg.add(
                    &img,
                    &alg.scale(&alg.polynomial_gen(v_index(n, row)), mat.at(row, j)),
                );
            }
            images.push(img);
        } else {
            images.push(alg.polynomial_gen(j));
        }
    }
    alg.substitute_poly(f, &images) == *f
}

/// The degree-2 transgression as a graded derivation: d2(v_i) = u_i z_i or
/// u_i x_i^2, zero on every other generator. Inputs must live in the
/// corresponding [`dickson_algebra`].
pub fn apply_d2(f: &GradedElement, n: usize, p: u64, rule: D2Rule) -> Result<GradedElement> {
    if rule == D2Rule::UX2 && p != 2 {
        return Err(Error::InvalidArgument(
            "the u x^2 rule applies only in characteristic 2".into(),
        ));
    }
    let alg = dickson_algebra(n, p);
    let ext_images = vec![alg.zero(); alg.exterior.len()];
    let mut poly_images = vec![alg.zero(); alg.polynomial.len()];
    for i in 0..n {
        let u = alg.exterior_gen(i);
        let image = match rule {
            D2Rule::UZ => alg.mul(&u, &alg.polynomial_gen(n + i)),
            D2Rule::UX2 => {
                let x = alg.polynomial_gen(2 * n + i);
                alg.mul(&u, &alg.mul(&x, &x))
            }
        };
        poly_images[i] = image;
    }
    Ok(alg.derivation(f, &ext_images, &poly_images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::mod_p_cohomology_rank;

    #[test]
    fn hilbert_exterior_line() {
        let alg = GradedAlgebra::new(2, vec![("x", 1)], vec![]);
        let pres = GradedPresentation::new(alg, vec![]).unwrap();
        assert_eq!(pres.hilbert_series(4), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn hilbert_continuous_ring() {
        // (1+t)^2/(1-t) = 1 + 3t + 4t^2 + 4t^3 + ...
        let pres = rings::continuous_two();
        let hs = pres.hilbert_series(16);
        assert_eq!(hs[0], 1);
        assert_eq!(hs[1], 3);
        for d in 2..=16 {
            assert_eq!(hs[d], 4, "degree {d}");
        }
        // a single relation is confluent
        assert!(pres.local_confluence_failures(8).unwrap().is_empty());
    }

    #[test]
    fn hilbert_two_power_rings_match_rank_formulas() {
        let big = rings::two_power_big();
        let hs = big.hilbert_series(16);
        for q in 0..=16usize {
            assert_eq!(hs[q], mod_p_cohomology_rank(2, 4, q).unwrap(), "r>3, q={q}");
        }
        let r3 = rings::two_power_r3();
        let hs = r3.hilbert_series(16);
        for q in 0..=16usize {
            assert_eq!(hs[q], mod_p_cohomology_rank(2, 3, q).unwrap(), "r=3, q={q}");
        }
    }

    #[test]
    fn hilbert_odd_rings_match_rank_formulas() {
        for p in [3u64, 5] {
            let pres = rings::odd_power(p);
            let hs = pres.hilbert_series(20);
            for q in 0..=20usize {
                assert_eq!(
                    hs[q],
                    mod_p_cohomology_rank(p, 3, q).unwrap(),
                    "p={p}, q={q}"
                );
            }
            // monomial relations are trivially confluent
            assert!(pres.local_confluence_failures(12).unwrap().is_empty());
        }
    }

    #[test]
    fn reduce_respects_relations() {
        let pres = rings::continuous_two();
        let alg = &pres.algebra;
        let u = alg.gen("u");
        // u^3 reduces to u y^2 (u^2 -> ux + uy, x^2 = 0, char 2)
        let u3 = alg.mul(&alg.mul(&u, &u), &u);
        let red = pres.reduce(&u3).unwrap();
        let expect = alg.mul(&u, &alg.mul(&alg.gen("y"), &alg.gen("y")));
        assert_eq!(red, expect);
    }

    #[test]
    fn dickson_small_cases() {
        // n = 1, p = 2: v1
        let alg = dickson_algebra(1, 2);
        let d = dickson_coefficient(1, 2).unwrap();
        assert_eq!(d, alg.polynomial_gen(0));

        // n = 2, p = 2: v1^2 v2 + v1 v2^2, by direct expansion
        let alg = dickson_algebra(2, 2);
        let d = dickson_coefficient(2, 2).unwrap();
        let v1 = alg.polynomial_gen(0);
        let v2 = alg.polynomial_gen(1);
        let expect = alg.add(
            &alg.mul(&alg.mul(&v1, &v1), &v2),
            &alg.mul(&v1, &alg.mul(&v2, &v2)),
        );
        assert_eq!(d, expect);
    }

    #[test]
    fn dickson_oracle_routes_agree() {
        for (n, p) in [(1usize, 2u64), (2, 2), (3, 2), (2, 3), (1, 3)] {
            let a = dickson_coefficient(n, p).unwrap();
            let b = dickson_coefficient_via_t(n, p).unwrap();
            assert_eq!(a, b, "(n, p) = ({n}, {p})");
            // homogeneous of v-multiplicity p^n - 1
            let total: u32 = (p as u32).pow(n as u32) - 1;
            for k in a.terms.keys() {
                let mult: u32 = k.1[..n].iter().sum();
                assert_eq!(mult, total);
            }
        }
    }

    #[test]
    fn dickson_wilson_coefficient() {
        // n = 2, p = 3: the coefficient of v1^6 v2^2 is (-1)^2 = 1
        let d = dickson_coefficient(2, 3).unwrap();
        let alg = dickson_algebra(2, 3);
        let key: MonomialKey = (0, {
            let mut e = vec![0u32; alg.polynomial.len()];
            e[0] = 6;
            e[1] = 2;
            e
        });
        assert_eq!(d.terms.get(&key), Some(&1));
        let key_swapped: MonomialKey = (0, {
            let mut e = vec![0u32; alg.polynomial.len()];
            e[0] = 2;
            e[1] = 6;
            e
        });
        assert_eq!(d.terms.get(&key_swapped), Some(&1));
    }

    #[test]
    fn gl_invariance() {
        let d22 = dickson_coefficient(2, 2).unwrap();
        assert!(check_gl_invariance(&d22, 2, 2).unwrap());
        let d23 = dickson_coefficient(2, 3).unwrap();
        assert!(check_gl_invariance(&d23, 2, 3).unwrap());
        // v1 alone is moved by the swap matrix
        let alg = dickson_algebra(2, 2);
        assert!(!check_gl_invariance(&alg.polynomial_gen(0), 2, 2).unwrap());
    }

    #[test]
    fn d2_basic_rules() {
        let alg = dickson_algebra(1, 2);
        let v = alg.polynomial_gen(0);
        // d2(v) = u z
        let d = apply_d2(&v, 1, 2, D2Rule::UZ).unwrap();
        assert_eq!(d, alg.mul(&alg.exterior_gen(0), &alg.polynomial_gen(1)));
        // d2(v^2) = 2 v d2(v) = 0 in characteristic 2
        let v2 = alg.mul(&v, &v);
        assert!(apply_d2(&v2, 1, 2, D2Rule::UZ).unwrap().is_zero());
    }

    #[test]
    fn d2_on_dickson_r3() {
        // d2(v1^2 v2 + v1 v2^2) = v1^2 u2 x2^2 + v2^2 u1 x1^2
        let alg = dickson_algebra(2, 2);
        let d = dickson_coefficient(2, 2).unwrap();
        let image = apply_d2(&d, 2, 2, D2Rule::UX2).unwrap();
        let v1 = alg.polynomial_gen(0);
        let v2 = alg.polynomial_gen(1);
        let x1 = alg.polynomial_gen(4);
        let x2 = alg.polynomial_gen(5);
        let term1 = alg.mul(
            &alg.mul(&v1, &v1),
            &alg.mul(&alg.exterior_gen(1), &alg.mul(&x2, &x2)),
        );
        let term2 = alg.mul(
            &alg.mul(&v2, &v2),
            &alg.mul(&alg.exterior_gen(0), &alg.mul(&x1, &x1)),
        );
        assert_eq!(image, alg.add(&term1, &term2));
        assert!(!image.is_zero());
    }

    #[test]
    fn d2_squares_to_zero_on_v_subalgebra() {
        use rand::Rng;
        let mut rng = crate::util::seeded_rng(0xd2);
        for (n, p, rule) in [
            (2usize, 2u64, D2Rule::UZ),
            (2, 2, D2Rule::UX2),
            (2, 3, D2Rule::UZ),
        ] {
            let alg = dickson_algebra(n, p);
            for _ in 0..200 {
                let mut el = alg.zero();
                for _ in 0..3 {
                    let mut exps = vec![0u32; alg.polynomial.len()];
                    for e in exps.iter_mut().take(n) {
                        *e = rng.gen_range(0..5);
                    }
                    el = alg.add(&el, &alg.monomial_elem((0, exps), rng.gen_range(1..p)));
                }
                let once = apply_d2(&el, n, p, rule).unwrap();
                let twice = apply_d2(&once, n, p, rule).unwrap();
                assert!(twice.is_zero());
            }
        }
    }

    #[test]
    fn d2_is_leibniz() {
        use rand::Rng;
        let mut rng = crate::util::seeded_rng(0x1b);
        for p in [2u64, 3] {
            let n = 2;
            let alg = dickson_algebra(n, p);
            let rand_el = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut el = alg.zero();
                for _ in 0..2 {
                    let mask = rng.gen_range(0..(1u64 << n));
                    let mut exps = vec![0u32; alg.polynomial.len()];
                    for e in exps.iter_mut().take(2 * n) {
                        *e = rng.gen_range(0..3);
                    }
                    el = alg.add(&el, &alg.monomial_elem((mask, exps), rng.gen_range(1..p)));
                }
                el
            };
            for _ in 0..100 {
                let a = rand_el(&mut rng);
                let b = rand_el(&mut rng);
                // restrict a to homogeneous pieces so the sign is defined
                for (k, c) in a.terms.clone() {
                    let mono = alg.monomial_elem(k.clone(), c);
                    let deg = alg.monomial_degree(&k);
                    let lhs = apply_d2(&alg.mul(&mono, &b), n, p, D2Rule::UZ).unwrap();
                    let da_b = alg.mul(&apply_d2(&mono, n, p, D2Rule::UZ).unwrap(), &b);
                    let mut a_db = alg.mul(&mono, &apply_d2(&b, n, p, D2Rule::UZ).unwrap());
                    if p > 2 && deg % 2 == 1 {
                        a_db = alg.neg(&a_db);
                    }
                    assert_eq!(lhs, alg.add(&da_b, &a_db));
                }
            }
        }
    }

    #[test]
    fn noncollapse_witnesses() {
        // the Dickson coefficient has nonzero d2 image in every listed mode
        for (n, p, rule) in [
            (2usize, 2u64, D2Rule::UX2),
            (2, 2, D2Rule::UZ),
            (3, 2, D2Rule::UZ),
            (2, 3, D2Rule::UZ),
        ] {
            let d = dickson_coefficient(n, p).unwrap();
            let image = apply_d2(&d, n, p, rule).unwrap();
            assert!(!image.is_zero(), "(n, p) = ({n}, {p})");
        }
    }

    #[test]
    fn two_power_presentation_is_not_confluent_but_counts_match() {
        // the a^2 and ab rules overlap at a^2 b and genuinely disagree after
        // reduction; the rank count uses irreducible monomials, which is what
        // the rank formulas confirm degree by degree
        let pres = rings::two_power_big();
        let failures = pres.local_confluence_failures(8).unwrap();
        assert!(!failures.is_empty());
    }
}
