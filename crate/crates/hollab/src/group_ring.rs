//! The metabelian group G(q, s1, s2, t1, t2) =
//! ⟨x, y, z | x^{s1} = y^{s2} = z^q = 1, xy = yx, zx = xz^{t1}, zy = yz^{t2}⟩
//! and its integral group ring in normal form x^a y^b z^c.

use crate::error::{Error, Result};
use crate::util::pow_u64;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Presentation data with the compatibility conditions
/// t1^{s1} = 1 (mod q) and t2^{s2} = 1 (mod q).
///
/// Powers of the twists are tabulated up front; monomial multiplication is
/// the hot path of the resolution checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetabelianPresentation {
    pub q: u64,
    pub s1: u64,
    pub s2: u64,
    pub t1: u64,
    pub t2: u64,
    t1_pows: Vec<u64>,
    t2_pows: Vec<u64>,
}

impl MetabelianPresentation {
    pub fn new(q: u64, s1: u64, s2: u64, t1: u64, t2: u64) -> Result<Self> {
        if q == 0 || s1 == 0 || s2 == 0 {
            return Err(Error::InvalidArgument("orders must be positive".into()));
        }
        if pow_u64(t1, s1 as u32, q) != 1 % q {
            return Err(Error::InvalidArgument(format!(
                "t1^s1 = {t1}^{s1} is not 1 mod {q}"
            )));
        }
        if pow_u64(t2, s2 as u32, q) != 1 % q {
            return Err(Error::InvalidArgument(format!(
                "t2^s2 = {t2}^{s2} is not 1 mod {q}"
            )));
        }
        let pows = |t: u64, s: u64| -> Vec<u64> {
            let mut v = Vec::with_capacity(s as usize);
            let mut acc = 1 % q;
            for _ in 0..s {
                v.push(acc);
                acc = (acc as u128 * t as u128 % q as u128) as u64;
            }
            v
        };
        Ok(MetabelianPresentation {
            q,
            s1,
            s2,
            t1,
            t2,
            t1_pows: pows(t1, s1),
            t2_pows: pows(t2, s2),
        })
    }

    /// The split extension presenting Hol(Z_{2^r}) for r >= 3:
    /// q = 2^r, s1 = 2^{r-2}, s2 = 2, t1 = 3, t2 = 2^r - 1.
    pub fn hol_two_power(r: u32) -> Result<Self> {
        if r < 3 {
            return Err(Error::UnsupportedModulus(format!(
                "2^{r}: presentation needs r >= 3"
            )));
        }
        let q = 1u64 << r;
        MetabelianPresentation::new(q, 1 << (r - 2), 2, 3, q - 1)
    }

    /// The metacyclic presentation of Hol(Z_{p^r}) for odd p: q = p^r,
    /// s1 = (p-1)p^{r-1}, t1 = a generator of the units, s2 = t2 = 1.
    pub fn hol_odd_power(p: u64, r: u32) -> Result<Self> {
        let gens = crate::modular::aut_cyclic_generators(pow_u64(p, r, u64::MAX / 2))?;
        if gens.len() != 1 {
            return Err(Error::UnsupportedModulus(format!(
                "{p}^{r} is not an odd prime power"
            )));
        }
        let (s, order) = gens[0];
        MetabelianPresentation::new(pow_u64(p, r, u64::MAX / 2), order, 1, s, 1)
    }

    pub fn group_order(&self) -> u64 {
        self.q * self.s1 * self.s2
    }
}

/// A normal-form monomial x^a y^b z^c with 0 <= a < s1, 0 <= b < s2, 0 <= c < q.
pub type Monomial = (u64, u64, u64);

/// Generators and inverses for words to be normalized.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    X,
    Y,
    Z,
    XInv,
    YInv,
    ZInv,
}

/// An element of Z[G] as a sparse map from normal-form monomials to integer
/// coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElement {
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::monomial((0, 0, 0), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        GroupRingElement { terms }
    }

    pub fn scalar(c: BigInt) -> Self {
        GroupRingElement::monomial((0, 0, 0), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> GroupRingElement {
        if c.is_zero() {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Ring multiplication; re-normalizes via the defining relations.
    pub fn mul(&self, other: &GroupRingElement, p: &MetabelianPresentation) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mul_monomials(*ma, *mb, p), &(ca * cb));
            }
        }
        out
    }

    /// Augmentation x, y, z -> 1: the coefficient sum.
    pub fn augment(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// (x^a y^b z^c)(x^a' y^b' z^c') = x^{a+a'} y^{b+b'} z^{c t1^{a'} t2^{b'} + c'}.
pub fn mul_monomials(a: Monomial, b: Monomial, p: &MetabelianPresentation) -> Monomial {
    let (a1, b1, c1) = a;
    let (a2, b2, c2) = b;
    let twist = p.t1_pows[a2 as usize] as u128 * p.t2_pows[b2 as usize] as u128;
    let c = (c1 as u128 * twist % p.q as u128 + c2 as u128) % p.q as u128;
    ((a1 + a2) % p.s1, (b1 + b2) % p.s2, c as u64)
}

/// Reduces a word in the generators to its unique normal form.
///
/// Multiplicative: normalize(uv) = normalize(u) * normalize(v) in the ring.
pub fn normalize(word: &[Letter], p: &MetabelianPresentation) -> Monomial {
    let mut acc: Monomial = (0, 0, 0);
    for &l in word {
        let m: Monomial = match l {
            Letter::X => (1 % p.s1, 0, 0),
            Letter::Y => (0, 1 % p.s2, 0),
            Letter::Z => (0, 0, 1 % p.q),
            Letter::XInv => ((p.s1 - 1) % p.s1, 0, 0),
            Letter::YInv => (0, (p.s2 - 1) % p.s2, 0),
            Letter::ZInv => (0, 0, (p.q - 1) % p.q),
        };
        acc = mul_monomials(acc, m, p);
    }
    acc
}

/// N_z = sum of all powers of z.
pub fn norm_z(p: &MetabelianPresentation) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for c in 0..p.q {
        out.add_term((0, 0, c), &BigInt::one());
    }
    out
}

/// L_{f, j} = sum_{i=0}^{f^j - 1} z^i, reduced mod z^q = 1.
///
/// Coefficient of z^e is floor(f^j / q), plus one when e < f^j mod q.
pub fn l_poly(f: u64, j: u64, p: &MetabelianPresentation) -> GroupRingElement {
    let total = BigInt::from(f).pow(j as u32);
    let q = BigInt::from(p.q);
    let (full_cycles, rem) = num_integer::Integer::div_rem(&total, &q);
    let rem_u: u64 = u64::try_from(&rem).expect("remainder fits");
    let mut out = GroupRingElement::zero();
    for e in 0..p.q {
        let coeff = if e < rem_u {
            &full_cycles + 1
        } else {
            full_cycles.clone()
        };
        out.add_term((0, 0, e), &coeff);
    }
    out
}

/// m-th power of L_{f, j} in the ring (a polynomial in z only).
pub fn l_poly_pow(f: u64, j: u64, m: u32, p: &MetabelianPresentation) -> GroupRingElement {
    let base = l_poly(f, j, p);
    let mut acc = GroupRingElement::one();
    for _ in 0..m {
        acc = acc.mul(&base, p);
    }
    acc
}
