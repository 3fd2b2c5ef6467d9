//! Finite abelian groups as direct sums of cyclic factors, their elements,
//! homomorphisms and automorphism groups, all at enumeration scale.

use crate::error::{Error, Result};
use crate::util::{factorize, EXHAUSTIVE_BUDGET};

/// A finite abelian group given by its cyclic factor moduli (m1, ..., mn).
///
/// Elements are vectors of residues, coordinate i taken mod m_i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteAbelianGroup {
    pub moduli: Vec<u64>,
}

/// An element of a [`FiniteAbelianGroup`], reduced coordinatewise.
pub type AbElement = Vec<u64>;

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1), "moduli must be >= 1");
        FiniteAbelianGroup { moduli }
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { moduli: vec![] }
    }

    pub fn cyclic(m: u64) -> Self {
        FiniteAbelianGroup::new(vec![m])
    }

    /// Direct sum of n copies of Z_m.
    pub fn power(m: u64, n: usize) -> Self {
        FiniteAbelianGroup::new(vec![m; n])
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn zero(&self) -> AbElement {
        vec![0; self.rank()]
    }

    pub fn add(&self, a: &AbElement, b: &AbElement) -> AbElement {
        assert_eq!(a.len(), self.rank());
        assert_eq!(b.len(), self.rank());
        self.moduli
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&m, (&x, &y))| (x + y) % m)
            .collect()
    }

    pub fn neg(&self, a: &AbElement) -> AbElement {
        self.moduli
            .iter()
            .zip(a)
            .map(|(&m, &x)| (m - x) % m)
            .collect()
    }

    pub fn reduce(&self, a: &[i64]) -> AbElement {
        self.moduli
            .iter()
            .zip(a)
            .map(|(&m, &x)| x.rem_euclid(m as i64) as u64)
            .collect()
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: &AbElement) -> u64 {
        let mut x = a.clone();
        let mut k = 1;
        while x.iter().any(|&c| c != 0) {
            x = self.add(&x, a);
            k += 1;
        }
        k
    }

    /// All elements in a fixed (odometer) order; the zero element comes first.
    pub fn elements(&self) -> Vec<AbElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == self.rank() {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < self.moduli[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

/// A homomorphism between finite abelian groups, as images of the standard
/// generators: column j is the image of e_j, with coordinate i mod m_i(dst).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbHom {
    pub src: FiniteAbelianGroup,
    pub dst: FiniteAbelianGroup,
    /// gen_images[j] = image of the j-th standard generator of src.
    pub gen_images: Vec<AbElement>,
}

impl AbHom {
    /// Builds the map and checks it is well defined: m_j * image(e_j) = 0.
    pub fn new(
        src: FiniteAbelianGroup,
        dst: FiniteAbelianGroup,
        gen_images: Vec<AbElement>,
    ) -> Result<Self> {
        if gen_images.len() != src.rank() {
            return Err(Error::InvalidArgument("generator image count".into()));
        }
        for (j, img) in gen_images.iter().enumerate() {
            let scaled: AbElement = dst
                .moduli
                .iter()
                .zip(img)
                .map(|(&m, &x)| (x as u128 * src.moduli[j] as u128 % m as u128) as u64)
                .collect();
            if scaled.iter().any(|&c| c != 0) {
                return Err(Error::NotAHomomorphism(format!(
                    "generator {j} image has incompatible order"
                )));
            }
        }
        Ok(AbHom {
            src,
            dst,
            gen_images,
        })
    }

    pub fn identity(g: &FiniteAbelianGroup) -> Self {
        let images = (0..g.rank())
            .map(|j| {
                let mut v = g.zero();
                v[j] = 1 % g.moduli[j];
                v
            })
            .collect();
        AbHom::new(g.clone(), g.clone(), images).expect("identity is a homomorphism")
    }

    pub fn zero_map(src: &FiniteAbelianGroup, dst: &FiniteAbelianGroup) -> Self {
        AbHom::new(src.clone(), dst.clone(), vec![dst.zero(); src.rank()])
            .expect("zero map is a homomorphism")
    }

    pub fn apply(&self, a: &AbElement) -> AbElement {
        assert_eq!(a.len(), self.src.rank());
        let mut out = self.dst.zero();
        for (j, &c) in a.iter().enumerate() {
            for (i, (&m, &g)) in self.dst.moduli.iter().zip(&self.gen_images[j]).enumerate() {
                out[i] = ((out[i] as u128 + c as u128 * g as u128) % m as u128) as u64;
            }
        }
        out
    }

    /// Composition self ∘ other.
    pub fn compose(&self, other: &AbHom) -> AbHom {
        assert_eq!(other.dst, self.src, "composition shape mismatch");
        let images = other.gen_images.iter().map(|img| self.apply(img)).collect();
        AbHom::new(other.src.clone(), self.dst.clone(), images).expect("composite of homomorphisms")
    }

    pub fn is_bijective(&self) -> bool {
        if self.src.order() != self.dst.order() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.src
            .elements()
            .iter()
            .all(|a| seen.insert(self.apply(a)))
    }
}

/// All homomorphisms src -> dst, by enumerating generator images.
pub fn all_homs(src: &FiniteAbelianGroup, dst: &FiniteAbelianGroup) -> Vec<AbHom> {
    let candidates = dst.elements();
    let mut out = Vec::new();
    let rank = src.rank();
    let mut choice = vec![0usize; rank];
    loop {
        let images: Vec<AbElement> = choice.iter().map(|&c| candidates[c].clone()).collect();
        if let Ok(h) = AbHom::new(src.clone(), dst.clone(), images) {
            out.push(h);
        }
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            choice[i] += 1;
            if choice[i] < candidates.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if rank == 0 {
            return out;
        }
    }
}

/// The automorphism group of K, enumerated. Errors when the search space
/// exceeds the enumeration budget.
pub fn automorphisms(k: &FiniteAbelianGroup) -> Result<Vec<AbHom>> {
    let space = (k.order() as u128).pow(k.rank() as u32);
    if space > EXHAUSTIVE_BUDGET as u128 * 100 {
        return Err(Error::BudgetExceeded(format!(
            "automorphism search space {space}"
        )));
    }
    Ok(all_homs(k, k)
        .into_iter()
        .filter(AbHom::is_bijective)
        .collect())
}

pub fn aut_order(k: &FiniteAbelianGroup) -> Result<u64> {
    Ok(automorphisms(k)?.len() as u64)
}

/// All abelian groups of order n, one per isomorphism class, as factor lists.
pub fn abelian_groups_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
    if n == 1 {
        return vec![FiniteAbelianGroup::trivial()];
    }
    let mut per_prime: Vec<Vec<Vec<u64>>> = Vec::new();
    for (p, e) in factorize(n) {
        let parts = partitions(e)
            .into_iter()
            .map(|part| part.into_iter().map(|a| p.pow(a)).collect::<Vec<u64>>())
            .collect::<Vec<_>>();
        per_prime.push(parts);
    }
    let mut combos: Vec<Vec<u64>> = vec![vec![]];
    for parts in per_prime {
        let mut next = Vec::new();
        for c in &combos {
            for part in &parts {
                let mut merged = c.clone();
                merged.extend(part.iter().copied());
                next.push(merged);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .map(|mut moduli| {
            moduli.sort_unstable();
            FiniteAbelianGroup::new(moduli)
        })
        .collect()
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
