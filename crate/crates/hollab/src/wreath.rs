//! Wreath products P ≀ G, their embeddings into Aut(G^q) and Hol(G^q), the
//! pullback characterization, and machine-checked permutative-category
//! axioms for the Aut-powers, Hol-powers, and block-matrix Hol families.
//!
//! Convention, shared by every oracle here: an element (sigma, x) acts on a
//! tuple by (a_k) -> (x_{sigma(k)} + a_{sigma(k)}), the product is
//! (sigma, x)(tau, y) = (sigma tau, (x_{tau^{-1}(i)} y_i)_i), and the
//! product permutation satisfies (sigma tau)(i) = tau(sigma(i)). This is the
//! unique composition under which the product formula above and the
//! embeddings i and j are simultaneously homomorphisms; with the opposite
//! composition the permutations on the right-hand sides of the definitions
//! would have to be inverted.

use crate::error::{Error, Result};
use crate::holomorph::HolElement;
use crate::modular::{ResidueMatrix, ResidueVector};
use crate::perm::Perm;
use crate::util::{gcd_u64, seeded_rng};
use rand::Rng;

/// An element (sigma, x_1, ..., x_q) of P ≀ G with parts of type T.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement<T> {
    pub sigma: Perm,
    pub parts: Vec<T>,
}

impl<T: Clone> WreathElement<T> {
    pub fn new(sigma: Perm, parts: Vec<T>) -> Self {
        assert_eq!(sigma.degree(), parts.len(), "arity mismatch");
        WreathElement { sigma, parts }
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }
}

/// (sigma, x)(tau, y) = (sigma tau, (x_{tau^{-1}(i)} y_i)_i), with
/// (sigma tau)(i) = tau(sigma(i)).
pub fn wreath_mul<T: Clone>(
    a: &WreathElement<T>,
    b: &WreathElement<T>,
    mul: impl Fn(&T, &T) -> T,
) -> WreathElement<T> {
    assert_eq!(a.arity(), b.arity(), "arity mismatch");
    let tau_inv = b.sigma.inverse();
    let parts = (0..a.arity())
        .map(|i| mul(&a.parts[tau_inv.apply(i)], &b.parts[i]))
        .collect();
    WreathElement {
        sigma: b.sigma.compose(&a.sigma),
        parts,
    }
}

/// i: S_q ≀ Aut(Z_m) -> Aut(+_q Z_m), acting by
/// (i(sigma, f))(x)_k = f_{sigma(k)} x_{sigma(k)}.
pub fn embed_i(w: &WreathElement<u64>, modulus: u64) -> ResidueMatrix {
    let q = w.arity();
    for &u in &w.parts {
        assert_eq!(gcd_u64(u % modulus, modulus), 1, "part is not a unit");
    }
    let mut m = ResidueMatrix::new(q, q, modulus, vec![0; q * q]);
    for k in 0..q {
        let s = w.sigma.apply(k);
        m.set(k, s, w.parts[s]);
    }
    m
}

/// j: S_q ≀ Hol(Z_m) -> Hol(+_q Z_m):
/// j(sigma, (f_1, x_1), ..., (f_q, x_q)) = (i(sigma, f), (x_1, ..., x_q)).
pub fn embed_j(w: &WreathElement<HolElement>) -> HolElement {
    let q = w.arity();
    assert!(q > 0, "empty wreath");
    let modulus = w.parts[0].modulus();
    let units: WreathElement<u64> = WreathElement::new(
        w.sigma.clone(),
        w.parts
            .iter()
            .map(|h| {
                assert_eq!(h.dim(), 1, "parts must be holomorphs of a cyclic group");
                h.aut.at(0, 0)
            })
            .collect(),
    );
    let aut = embed_i(&units, modulus);
    let trans = ResidueVector::new(
        w.parts.iter().map(|h| h.trans.entries[0]).collect(),
        modulus,
    );
    HolElement::new(aut, trans)
}

/// The permutation matrix of phi(sigma): (x_1, .., x_q) -> (x_{sigma(1)}, ..).
pub fn perm_action_matrix(sigma: &Perm, modulus: u64) -> ResidueMatrix {
    let q = sigma.degree();
    let mut m = ResidueMatrix::new(q, q, modulus, vec![0; q * q]);
    for k in 0..q {
        m.set(k, sigma.apply(k), 1);
    }
    m
}

/// P ≀ Z_m is the pullback of P -> Aut((Z_m)^q) <- Hol((Z_m)^q): order count
/// plus elementwise correspondence under (sigma, x) -> (phi(sigma), x).
pub fn wreath_pullback_check(p_group: &[Perm], modulus: u64) -> Result<bool> {
    if p_group.is_empty() {
        return Err(Error::InvalidArgument("empty permutation group".into()));
    }
    let q = p_group[0].degree();
    let total = (p_group.len() as u128) * (modulus as u128).pow(q as u32);
    if total > 100_000 {
        return Err(Error::BudgetExceeded(format!("{total} wreath elements")));
    }
    // enumерate P wr G
    let mut elements: Vec<WreathElement<u64>> = Vec::new();
    let mut tuple = vec![0u64; q];
    for sigma in p_group {
        loop {
            elements.push(WreathElement::new(sigma.clone(), tuple.clone()));
            let mut i = 0;
            let mut done = false;
            loop {
                if i == q {
                    done = true;
                    break;
                }
                tuple[i] += 1;
                if tuple[i] < modulus {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if done {
                break;
            }
        }
    }
    let embed = |w: &WreathElement<u64>| -> HolElement {
        HolElement::new(
            perm_action_matrix(&w.sigma, modulus),
            ResidueVector::new(w.parts.clone(), modulus),
        )
    };
    // group-element correspondence: embedding is an injective homomorphism
    let mut images = std::collections::HashSet::new();
    for w in &elements {
        if !images.insert(embed(w)) {
            return Ok(false);
        }
    }
    let add = |a: &u64, b: &u64| (a + b) % modulus;
    for a in &elements {
        for b in &elements {
            let prod = wreath_mul(a, b, add);
            if embed(&prod) != embed(a).mul(&embed(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The three permutative-category families checked here.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CategoryKind {
    /// objects n, morphisms Aut((Z_m)^n) = GL(n, Z_m), box = direct sum
    AutPowers,
    /// objects n, morphisms Hol((Z_m)^n), box = direct sum on both parts
    HolPowers,
    /// objects n, morphisms the block matrices of Hol inside GL(n+1, Z_m)
    HolMatrix,
}

/// A morphism of one of the three families.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Morphism {
    Mat(ResidueMatrix),
    Hol(HolElement),
}

/// Morphism-level operations for a permutative family over Z_m.
pub struct PermutativeOps {
    pub kind: CategoryKind,
    pub modulus: u64,
}

impl PermutativeOps {
    pub fn new(kind: CategoryKind, modulus: u64) -> Self {
        PermutativeOps { kind, modulus }
    }

    pub fn identity(&self, obj: usize) -> Morphism {
        match self.kind {
            CategoryKind::AutPowers => Morphism::Mat(ResidueMatrix::identity(obj, self.modulus)),
            CategoryKind::HolPowers => Morphism::Hol(HolElement::identity(obj, self.modulus)),
            CategoryKind::HolMatrix => {
                Morphism::Mat(ResidueMatrix::identity(obj + 1, self.modulus))
            }
        }
    }

    /// The monoidal product on morphisms sitting at objects a and b.
    pub fn tensor(&self, f: &Morphism, g: &Morphism) -> Morphism {
        match (self.kind, f, g) {
            (CategoryKind::AutPowers, Morphism::Mat(a), Morphism::Mat(b)) => {
                Morphism::Mat(block_diag(a, b))
            }
            (CategoryKind::HolPowers, Morphism::Hol(a), Morphism::Hol(b)) => {
                let mut entries = a.trans.entries.clone();
                entries.extend(&b.trans.entries);
                Morphism::Hol(HolElement::new(
                    block_diag(&a.aut, &b.aut),
                    ResidueVector::new(entries, self.modulus),
                ))
            }
            (CategoryKind::HolMatrix, Morphism::Mat(a), Morphism::Mat(b)) => {
                // [[1, x], [0, M]] box [[1, y], [0, N]] = [[1, x, y], [0, M, 0], [0, 0, N]]
                let (ma, mb) = (a.rows - 1, b.rows - 1);
                let mut out = ResidueMatrix::identity(ma + mb + 1, self.modulus);
                for j in 0..ma {
                    out.set(0, 1 + j, a.at(0, 1 + j));
                    for i in 0..ma {
                        out.set(1 + i, 1 + j, a.at(1 + i, 1 + j));
                    }
                }
                for j in 0..mb {
                    out.set(0, 1 + ma + j, b.at(0, 1 + j));
                    for i in 0..mb {
                        out.set(1 + ma + i, 1 + ma + j, b.at(1 + i, 1 + j));
                    }
                }
                Morphism::Mat(out)
            }
            _ => panic!("morphism does not belong to this family"),
        }
    }

    /// Composition f after g, i.e. the group product.
    pub fn compose(&self, f: &Morphism, g: &Morphism) -> Morphism {
        match (f, g) {
            (Morphism::Mat(a), Morphism::Mat(b)) => Morphism::Mat(a.mul(b)),
            (Morphism::Hol(a), Morphism::Hol(b)) => Morphism::Hol(a.mul(b)),
            _ => panic!("mixed morphisms"),
        }
    }

    pub fn inverse(&self, f: &Morphism) -> Morphism {
        match f {
            Morphism::Mat(a) => Morphism::Mat(a.inverse().expect("invertible")),
            Morphism::Hol(a) => Morphism::Hol(a.inv()),
        }
    }

    /// The twist c(m, n): m box n -> n box m.
    pub fn twist(&self, m: usize, n: usize) -> Morphism {
        let s = |rows: usize| -> ResidueMatrix {
            // s_{m,n}: (x_1..x_m, x_{m+1}..x_{m+n}) -> (x_{m+1}, ..., x_1..)
            let mut out = ResidueMatrix::new(rows, rows, self.modulus, vec![0; rows * rows]);
            for k in 0..n {
                out.set(k, m + k, 1);
            }
            for k in 0..m {
                out.set(n + k, k, 1);
            }
            out
        };
        match self.kind {
            CategoryKind::AutPowers => Morphism::Mat(s(m + n)),
            CategoryKind::HolPowers => Morphism::Hol(HolElement::new(
                s(m + n),
                ResidueVector::zero(m + n, self.modulus),
            )),
            CategoryKind::HolMatrix => {
                let mut out = ResidueMatrix::identity(m + n + 1, self.modulus);
                for i in 0..m + n {
                    for j in 0..m + n {
                        out.set(1 + i, 1 + j, 0);
                    }
                }
                for k in 0..n {
                    out.set(1 + k, 1 + m + k, 1);
                }
                for k in 0..m {
                    out.set(1 + n + k, 1 + k, 1);
                }
                Morphism::Mat(out)
            }
        }
    }

    /// Endomorphisms at an object: exhaustive when the group is small,
    /// otherwise a fixed-seed sample of 100.
    pub fn morphisms(&self, obj: usize) -> Vec<Morphism> {
        let gl_count: u128 = if obj == 0 {
            1
        } else {
            match crate::util::prime_power(self.modulus) {
                Some((p, r)) => u128::try_from(crate::modular::gl_order(obj as u32, p, r))
                    .unwrap_or(u128::MAX / 2),
                None => u128::MAX / 2,
            }
        };
        let hom_count = match self.kind {
            CategoryKind::AutPowers => gl_count,
            _ => gl_count.saturating_mul((self.modulus as u128).pow(obj as u32)),
        };
        if hom_count <= 200 {
            let mats = crate::modular::gl_elements(obj, self.modulus);
            match self.kind {
                CategoryKind::AutPowers => mats.into_iter().map(Morphism::Mat).collect(),
                CategoryKind::HolPowers | CategoryKind::HolMatrix => {
                    let mut out = Vec::new();
                    for m in mats {
                        let mut tuple = vec![0u64; obj];
                        loop {
                            let h = HolElement::new(
                                m.clone(),
                                ResidueVector::new(tuple.clone(), self.modulus),
                            );
                            out.push(self.pack(h));
                            let mut i = 0;
                            let mut done = false;
                            loop {
                                if i == obj {
                                    done = true;
                                    break;
                                }
                                tuple[i] += 1;
                                if tuple[i] < self.modulus {
                                    break;
                                }
                                tuple[i] = 0;
                                i += 1;
                            }
                            if done {
                                break;
                            }
                        }
                    }
                    out
                }
            }
        } else {
            let mut rng = seeded_rng(0x9e12a + obj as u64);
            (0..100)
                .map(|_| self.random_morphism(obj, &mut rng))
                .collect()
        }
    }

    fn pack(&self, h: HolElement) -> Morphism {
        match self.kind {
            CategoryKind::HolPowers => Morphism::Hol(h),
            CategoryKind::HolMatrix => Morphism::Mat(crate::holomorph::hol_to_matrix_row(&h)),
            CategoryKind::AutPowers => unreachable!(),
        }
    }

    fn random_morphism(&self, obj: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Morphism {
        let mat = loop {
            let m = ResidueMatrix::new(
                obj,
                obj,
                self.modulus,
                (0..obj * obj)
                    .map(|_| rng.gen_range(0..self.modulus))
                    .collect(),
            );
            if m.is_invertible() {
                break m;
            }
        };
        match self.kind {
            CategoryKind::AutPowers => Morphism::Mat(mat),
            _ => {
                let trans = ResidueVector::new(
                    (0..obj).map(|_| rng.gen_range(0..self.modulus)).collect(),
                    self.modulus,
                );
                self.pack(HolElement::new(mat, trans))
            }
        }
    }
}

fn block_diag(a: &ResidueMatrix, b: &ResidueMatrix) -> ResidueMatrix {
    assert_eq!(a.modulus, b.modulus);
    let n = a.rows + b.rows;
    let mut out = ResidueMatrix::new(n, n, a.modulus, vec![0; n * n]);
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(i, j, a.at(i, j));
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            out.set(a.rows + i, a.cols + j, b.at(i, j));
        }
    }
    out
}

/// Checks permutative-category axioms 1-5 and the naturality square for all
/// objects m, n, p <= max_obj, on exhaustive or fixed-seed sampled morphisms.
pub fn permutative_axioms_check(kind: CategoryKind, modulus: u64, max_obj: usize) -> Result<bool> {
    let ops = PermutativeOps::new(kind, modulus);
    for m in 0..=max_obj {
        for n in 0..=max_obj {
            // axiom 3: c(m, 0) = 1 = c(0, m)
            if n == 0 && (ops.twist(m, 0) != ops.identity(m) || ops.twist(0, m) != ops.identity(m))
            {
                return Ok(false);
            }
            // axiom 4: c(n, m) = c(m, n)^{-1}
            if ops.twist(n, m) != ops.inverse(&ops.twist(m, n)) {
                return Ok(false);
            }
            // naturality: c(m, n) (A box B) = (B box A) c(m, n)
            let fs = ops.morphisms(m);
            let gs = ops.morphisms(n);
            let c = ops.twist(m, n);
            for a in fs.iter().take(12) {
                for b in gs.iter().take(12) {
                    let lhs = ops.compose(&c, &ops.tensor(a, b));
                    let rhs = ops.compose(&ops.tensor(b, a), &c);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
            for p in 0..=max_obj {
                // axiom 5: (c(p, m) box 1_n) after c(m+n, p) = 1_m box c(n, p)
                let lhs = ops.compose(
                    &ops.tensor(&ops.twist(p, m), &ops.identity(n)),
                    &ops.twist(m + n, p),
                );
                let rhs = ops.tensor(&ops.identity(m), &ops.twist(n, p));
                if lhs != rhs {
                    return Ok(false);
                }
                // axiom 1: associativity of box on sampled morphisms
                let hs = ops.morphisms(p);
                for a in fs.iter().take(5) {
                    for b in gs.iter().take(5) {
                        for c3 in hs.iter().take(5) {
                            let left = ops.tensor(&ops.tensor(a, b), c3);
                            let right = ops.tensor(a, &ops.tensor(b, c3));
                            if left != right {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
            // axiom 2: the empty object is a unit
            for a in fs.iter().take(12) {
                if ops.tensor(a, &ops.identity(0)) != *a || ops.tensor(&ops.identity(0), a) != *a {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holomorph::enumerate_hol;
    use crate::modular::gl_elements;
    use crate::perm::PermGroup;
    use std::collections::HashSet;

    fn cyclic_add(m: u64) -> impl Fn(&u64, &u64) -> u64 {
        move |a, b| (a + b) % m
    }

    #[test]
    fn wreath_mul_example() {
        // q = 2, G = Z_3: ((12), (1,2)) ((12), (0,1)) = (id, (2, 2))
        let swap = Perm::new(vec![1, 0]);
        let a = WreathElement::new(swap.clone(), vec![1u64, 2]);
        let b = WreathElement::new(swap, vec![0u64, 1]);
        let c = wreath_mul(&a, &b, cyclic_add(3));
        assert!(c.sigma.is_identity());
        assert_eq!(c.parts, vec![2, 2]);

        // identity * a = a
        let id = WreathElement::new(Perm::identity(2), vec![0u64, 0]);
        assert_eq!(wreath_mul(&id, &a, cyclic_add(3)), a);
    }

    /// The action of a wreath element on points of G^q, used as an oracle:
    /// coordinate k of the output reads coordinate sigma(k) of the input.
    fn wreath_action(w: &WreathElement<u64>, m: u64, u: &[u64]) -> Vec<u64> {
        (0..u.len())
            .map(|k| {
                let s = w.sigma.apply(k);
                (w.parts[s] + u[s]) % m
            })
            .collect()
    }

    #[test]
    fn wreath_mul_matches_point_action() {
        // oracle: the permutation action on the 9 points of (Z_3)^2
        let m = 3u64;
        let perms = [Perm::identity(2), Perm::new(vec![1, 0])];
        let mut all = Vec::new();
        for sigma in &perms {
            for a in 0..m {
                for b in 0..m {
                    all.push(WreathElement::new(sigma.clone(), vec![a, b]));
                }
            }
        }
        let points: Vec<Vec<u64>> = (0..m)
            .flat_map(|a| (0..m).map(move |b| vec![a, b]))
            .collect();
        let mut count = 0;
        for x in &all {
            for y in &all {
                let prod = wreath_mul(x, y, cyclic_add(m));
                for u in &points {
                    let via_prod = wreath_action(&prod, m, u);
                    let via_steps = wreath_action(x, m, &wreath_action(y, m, u));
                    assert_eq!(via_prod, via_steps);
                }
                count += 1;
            }
        }
        assert_eq!(count, 324); // all 18 * 18 pairs, checked through the action
    }

    #[test]
    fn wreath_mul_associates_on_random_triples() {
        use rand::Rng;
        let mut rng = seeded_rng(0x3a0);
        let m = 4u64;
        let q = 3usize;
        let s3 = PermGroup::symmetric(q);
        let rand_el = |rng: &mut rand_chacha::ChaCha8Rng| {
            WreathElement::new(
                s3.elements[rng.gen_range(0..s3.order())].clone(),
                (0..q).map(|_| rng.gen_range(0..m)).collect::<Vec<u64>>(),
            )
        };
        for _ in 0..500 {
            let a = rand_el(&mut rng);
            let b = rand_el(&mut rng);
            let c = rand_el(&mut rng);
            let left = wreath_mul(&wreath_mul(&a, &b, cyclic_add(m)), &c, cyclic_add(m));
            let right = wreath_mul(&a, &wreath_mul(&b, &c, cyclic_add(m)), cyclic_add(m));
            assert_eq!(left, right);
        }
    }

    #[test]
    fn embed_i_is_injective_homomorphism() {
        // q = 2, G = Z_3: image order 2 * 2^2 = 8 inside GL(2, Z_3) of order 48
        let m = 3u64;
        let mut elements = Vec::new();
        for sigma in [Perm::identity(2), Perm::new(vec![1, 0])] {
            for u1 in [1u64, 2] {
                for u2 in [1u64, 2] {
                    elements.push(WreathElement::new(sigma.clone(), vec![u1, u2]));
                }
            }
        }
        let unit_mul = |a: &u64, b: &u64| a * b % m;
        let mut images = HashSet::new();
        for w in &elements {
            assert!(images.insert(embed_i(w, m)));
        }
        assert_eq!(images.len(), 8);
        assert_eq!(gl_elements(2, m).len(), 48);
        for a in &elements {
            for b in &elements {
                let prod = wreath_mul(a, b, unit_mul);
                assert_eq!(embed_i(&prod, m), embed_i(a, m).mul(&embed_i(b, m)));
            }
        }
    }

    #[test]
    fn embed_j_is_injective_homomorphism() {
        // q = 2, G = Z_2: |S_2 wr Hol(Z_2)| = 2 * 2^2 = 8 inside Hol(Z_2^2)
        // of order 24; also exhaustively for G = Z_3 (order 72)
        for m in [2u64, 3] {
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
            let mut images = HashSet::new();
            for w in &elements {
                assert!(images.insert(embed_j(w)));
            }
            assert_eq!(images.len(), elements.len());
            if m == 2 {
                assert_eq!(images.len(), 8);
                assert_eq!(enumerate_hol(2, 2).len(), 24);
            }
            let mul = |a: &HolElement, b: &HolElement| a.mul(b);
            for a in &elements {
                for b in &elements {
                    let prod = wreath_mul(a, b, mul);
                    assert_eq!(embed_j(&prod), embed_j(a).mul(&embed_j(b)));
                }
            }
        }
    }

    #[test]
    fn embed_j_restricts_to_base_inclusion() {
        // on the base G^q (trivial sigma, trivial automorphisms) the
        // embedding is the identity inclusion of translations
        for (m, q) in [(2u64, 2usize), (3, 2), (2, 3), (3, 4)] {
            let mut tuple = vec![0u64; q];
            loop {
                let w = WreathElement::new(
                    Perm::identity(q),
                    tuple
                        .iter()
                        .map(|&x| {
                            HolElement::new(
                                ResidueMatrix::identity(1, m),
                                ResidueVector::new(vec![x], m),
                            )
                        })
                        .collect(),
                );
                let h = embed_j(&w);
                assert!(h.aut.is_identity());
                assert_eq!(h.trans.entries, tuple);
                let mut i = 0;
                let mut done = false;
                loop {
                    if i == q {
                        done = true;
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] < m {
                        break;
                    }
                    tuple[i] = 0;
                    i += 1;
                }
                if done {
                    break;
                }
            }
        }
    }

    #[test]
    fn pullback_checks() {
        // P = S_2, G = Z_2: both sides order 8
        let s2 = PermGroup::symmetric(2);
        assert!(wreath_pullback_check(&s2.elements, 2).unwrap());
        // P = S_2, G = Z_3: both sides order 18
        assert!(wreath_pullback_check(&s2.elements, 3).unwrap());
        // P trivial: pullback is G^q itself
        let trivial = PermGroup::trivial(2);
        assert!(wreath_pullback_check(&trivial.elements, 3).unwrap());
    }

    #[test]
    fn double_wreath_flattening() {
        // S_q wr S_n wr Hol(G) -> S_{qn} wr Hol(G) -> Hol(G^{qn}) agrees with
        // embedding in two stages, and flattening is a homomorphism
        let (q, n, m) = (2usize, 2usize, 2u64);
        let hol1 = enumerate_hol(1, m);
        let mut rng = seeded_rng(0xd0b1e);
        let rand_inner = |rng: &mut rand_chacha::ChaCha8Rng| -> WreathElement<HolElement> {
            let sigma = if rng.gen_bool(0.5) {
                Perm::identity(n)
            } else {
                Perm::new(vec![1, 0])
            };
            WreathElement::new(
                sigma,
                (0..n)
                    .map(|_| hol1[rng.gen_range(0..hol1.len())].clone())
                    .collect(),
            )
        };
        let flatten = |w: &WreathElement<WreathElement<HolElement>>| -> WreathElement<HolElement> {
            let rho = Perm::new(
                (0..q * n)
                    .map(|idx| {
                        let (k, l) = (idx / n, idx % n);
                        let kk = w.sigma.apply(k);
                        (kk * n + w.parts[kk].sigma.apply(l)) as u16
                    })
                    .collect(),
            );
            let parts = (0..q * n)
                .map(|idx| w.parts[idx / n].parts[idx % n].clone())
                .collect();
            WreathElement::new(rho, parts)
        };
        let inner_mul = |a: &WreathElement<HolElement>, b: &WreathElement<HolElement>| {
            wreath_mul(a, b, |x: &HolElement, y: &HolElement| x.mul(y))
        };
        for _ in 0..50 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let sigma = if rng.gen_bool(0.5) {
                    Perm::identity(q)
                } else {
                    Perm::new(vec![1, 0])
                };
                WreathElement::new(sigma, (0..q).map(|_| rand_inner(rng)).collect())
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let prod = wreath_mul(&a, &b, inner_mul);
            // flatten is a homomorphism
            assert_eq!(
                flatten(&prod),
                wreath_mul(&flatten(&a), &flatten(&b), |x: &HolElement, y| x.mul(y))
            );
            // two-stage embedding agrees with the flattened embedding
            let two_stage = |w: &WreathElement<WreathElement<HolElement>>| -> HolElement {
                let inner_hols: Vec<HolElement> = w.parts.iter().map(embed_j).collect();
                // outer embedding of (sigma, inner elements of Hol(G^n))
                let aut_blocks: Vec<ResidueMatrix> =
                    inner_hols.iter().map(|h| h.aut.clone()).collect();
                let qn = q * n;
                let mut aut = ResidueMatrix::new(qn, qn, m, vec![0; qn * qn]);
                for k in 0..q {
                    let s = w.sigma.apply(k);
                    for i in 0..n {
                        for j in 0..n {
                            aut.set(k * n + i, s * n + j, aut_blocks[s].at(i, j));
                        }
                    }
                }
                let mut trans = Vec::new();
                for h in &inner_hols {
                    trans.extend(h.trans.entries.clone());
                }
                HolElement::new(aut, ResidueVector::new(trans, m))
            };
            assert_eq!(two_stage(&a), embed_j(&flatten(&a)));
            assert_eq!(two_stage(&a).mul(&two_stage(&b)), embed_j(&flatten(&prod)));
        }
    }

    #[test]
    fn permutative_axioms_all_families() {
        for modulus in [2u64, 4] {
            assert!(
                permutative_axioms_check(CategoryKind::HolMatrix, modulus, 2).unwrap(),
                "matrix family mod {modulus}"
            );
        }
        for modulus in [2u64, 3] {
            assert!(
                permutative_axioms_check(CategoryKind::AutPowers, modulus, 2).unwrap(),
                "aut powers mod {modulus}"
            );
            assert!(
                permutative_axioms_check(CategoryKind::HolPowers, modulus, 2).unwrap(),
                "hol powers mod {modulus}"
            );
        }
    }

    #[test]
    fn twist_matrix_example() {
        // c(1,1) in the matrix family: [[1,0,0],[0,0,1],[0,1,0]], squaring to 1
        let ops = PermutativeOps::new(CategoryKind::HolMatrix, 2);
        let c = ops.twist(1, 1);
        let expect = ResidueMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]], 2);
        assert_eq!(c, Morphism::Mat(expect));
        assert_eq!(ops.compose(&c, &c), ops.identity(2));
    }

    #[test]
    fn axiom5_pointwise_for_hol_powers() {
        // both sides of axiom 5 act identically on the points of G^3
        let ops = PermutativeOps::new(CategoryKind::HolPowers, 3);
        let lhs = ops.compose(
            &ops.tensor(&ops.twist(1, 1), &ops.identity(1)),
            &ops.twist(2, 1),
        );
        let rhs = ops.tensor(&ops.identity(1), &ops.twist(1, 1));
        let (Morphism::Hol(l), Morphism::Hol(r)) = (&lhs, &rhs) else {
            panic!()
        };
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    let v = ResidueVector::new(vec![a, b, c], 3);
                    assert_eq!(l.aut.apply(&v), r.aut.apply(&v));
                }
            }
        }
        assert_eq!(lhs, rhs);
    }
}
