//! Permutations on {0, .., n-1} and brute-force permutation groups.
//!
//! Quotient groups and Cayley images are handled uniformly as permutation
//! groups with closure computed by breadth-first multiplication, which keeps
//! order checks isomorphism-free.

use std::collections::{HashMap, HashSet};

/// A permutation, stored as its image vector: `p[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn new(images: Vec<u16>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!((i as usize) < n && !seen[i as usize], "not a bijection");
            seen[i as usize] = true;
        }
        Perm { images }
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Composition acting left-to-right on points: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            images: (0..self.degree())
                .map(|i| self.images[other.images[i] as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    pub fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }

    /// Sign of the permutation: +1 or -1.
    pub fn sign(&self) -> i32 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.apply(j);
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

/// A permutation group given by generators, with all elements enumerated.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub elements: Vec<Perm>,
}

impl PermGroup {
    /// Closure by breadth-first multiplication.
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Self {
        for g in &generators {
            assert_eq!(g.degree(), degree);
        }
        let mut elements = Vec::new();
        let mut seen = HashSet::new();
        let id = Perm::identity(degree);
        seen.insert(id.clone());
        elements.push(id);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    elements.push(y);
                }
            }
        }
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::generate(degree, vec![])
    }

    /// Cyclic group of order n acting on n points by rotation.
    pub fn cyclic(n: usize) -> Self {
        let rot = Perm::new((0..n).map(|i| ((i + 1) % n) as u16).collect());
        PermGroup::generate(n, vec![rot])
    }

    pub fn symmetric(n: usize) -> Self {
        if n <= 1 {
            return PermGroup::trivial(n.max(1));
        }
        let rot = Perm::new((0..n).map(|i| ((i + 1) % n) as u16).collect());
        let mut swap: Vec<u16> = (0..n as u16).collect();
        swap.swap(0, 1);
        PermGroup::generate(n, vec![rot, Perm::new(swap)])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    pub fn is_abelian(&self) -> bool {
        for a in &self.elements {
            for b in &self.elements {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Multiset of element orders, sorted.
    pub fn element_orders(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.elements.iter().map(|p| p.order()).collect();
        orders.sort_unstable();
        orders
    }

    /// Is `sub` (a subset of this group's elements) normal in this group?
    pub fn is_normal_subset(&self, sub: &HashSet<Perm>) -> bool {
        self.elements.iter().all(|g| {
            let gi = g.inverse();
            sub.iter().all(|h| sub.contains(&g.compose(h).compose(&gi)))
        })
    }
}

/// Closure of a set of hashable group elements under a multiplication map.
///
/// Generic worklist closure used for matrix groups and abstract pairs.
pub fn closure<T, F>(generators: &[T], mul: F) -> Vec<T>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    closure_with_limit(generators, mul, usize::MAX).expect("unbounded closure")
}

/// Closure that aborts once more than `limit` elements appear.
pub fn closure_with_limit<T, F>(generators: &[T], mul: F, limit: usize) -> Option<Vec<T>>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    if generators.is_empty() {
        return Some(vec![]);
    }
    let mut elements: Vec<T> = Vec::new();
    let mut seen: HashSet<T> = HashSet::new();
    for g in generators {
        if seen.insert(g.clone()) {
            elements.push(g.clone());
        }
    }
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in generators.iter() {
            let y = mul(g, &x);
            if seen.insert(y.clone()) {
                if elements.len() >= limit {
                    return None;
                }
                elements.push(y);
            }
        }
        // also multiply on the right so a generator set without inverses
        // still closes to the generated subgroup of a finite group
        for g in generators.iter() {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                if elements.len() >= limit {
                    return None;
                }
                elements.push(y);
            }
        }
    }
    Some(elements)
}

/// Index elements of a finite set for permutation bookkeeping.
pub struct Indexer<T> {
    pub items: Vec<T>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + std::hash::Hash> Indexer<T> {
    pub fn new(items: Vec<T>) -> Self {
        let index = items
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        Indexer { items, index }
    }

    pub fn index_of(&self, item: &T) -> usize {
        *self.index.get(item).expect("item not indexed")
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}
