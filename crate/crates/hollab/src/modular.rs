//! Exact arithmetic over Z and Z_m: residues, vectors, matrices, p-adic
//! valuations, Smith normal form, unit-group generators and GL orders.

use crate::error::{Error, Result};
use crate::util::{gcd_u64, is_prime, pow_u64, prime_power, unit_order};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A residue class, stored reduced mod `m`.
///
/// Mixed-modulus arithmetic is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Residue {
    v: u64,
    m: u64,
}

impl Residue {
    pub fn new(v: i64, m: u64) -> Self {
        assert!(m >= 1, "modulus must be >= 1");
        Residue {
            v: v.rem_euclid(m as i64) as u64,
            m,
        }
    }

    pub fn from_u64(v: u64, m: u64) -> Self {
        assert!(m >= 1);
        Residue { v: v % m, m }
    }

    pub fn value(self) -> u64 {
        self.v
    }

    pub fn modulus(self) -> u64 {
        self.m
    }

    pub fn add(self, other: Residue) -> Residue {
        assert_eq!(self.m, other.m, "mixed moduli");
        Residue::from_u64((self.v as u128 + other.v as u128) as u64 % self.m, self.m)
    }

    pub fn sub(self, other: Residue) -> Residue {
        assert_eq!(self.m, other.m, "mixed moduli");
        Residue::from_u64((self.v + self.m - other.v) % self.m, self.m)
    }

    pub fn mul(self, other: Residue) -> Residue {
        assert_eq!(self.m, other.m, "mixed moduli");
        Residue::from_u64(
            (self.v as u128 * other.v as u128 % self.m as u128) as u64,
            self.m,
        )
    }

    pub fn neg(self) -> Residue {
        Residue::from_u64((self.m - self.v) % self.m, self.m)
    }

    pub fn is_unit(self) -> bool {
        gcd_u64(self.v, self.m) == 1
    }

    /// Multiplicative inverse when it exists.
    pub fn inv(self) -> Option<Residue> {
        if !self.is_unit() {
            return None;
        }
        Some(Residue::from_u64(mod_inverse(self.v, self.m)?, self.m))
    }
}

/// Extended-Euclid inverse of a mod m, if (a, m) = 1.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

/// A vector of residues sharing one modulus.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ResidueVector {
    pub modulus: u64,
    pub entries: Vec<u64>,
}

impl ResidueVector {
    pub fn new(entries: Vec<u64>, modulus: u64) -> Self {
        assert!(modulus >= 1);
        ResidueVector {
            modulus,
            entries: entries.into_iter().map(|e| e % modulus).collect(),
        }
    }

    pub fn zero(n: usize, modulus: u64) -> Self {
        ResidueVector::new(vec![0; n], modulus)
    }

    pub fn unit(i: usize, n: usize, modulus: u64) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ResidueVector::new(v, modulus)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &ResidueVector) -> ResidueVector {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!(self.len(), other.len(), "length mismatch");
        ResidueVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + b) % self.modulus)
                .collect(),
            self.modulus,
        )
    }

    pub fn neg(&self) -> ResidueVector {
        ResidueVector::new(
            self.entries
                .iter()
                .map(|a| (self.modulus - a) % self.modulus)
                .collect(),
            self.modulus,
        )
    }

    pub fn scale(&self, c: u64) -> ResidueVector {
        ResidueVector::new(
            self.entries
                .iter()
                .map(|a| (*a as u128 * c as u128 % self.modulus as u128) as u64)
                .collect(),
            self.modulus,
        )
    }
}

/// A matrix over Z_m, entries stored reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ResidueMatrix {
    pub rows: usize,
    pub cols: usize,
    pub modulus: u64,
    data: Vec<u64>,
}

impl ResidueMatrix {
    pub fn new(rows: usize, cols: usize, modulus: u64, data: Vec<u64>) -> Self {
        assert!(modulus >= 1);
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        ResidueMatrix {
            rows,
            cols,
            modulus,
            data: data.into_iter().map(|e| e % modulus).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, modulus: u64) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ResidueMatrix::new(r, c, modulus, data)
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = ResidueMatrix::new(n, n, modulus, vec![0; n * n]);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    pub fn mul(&self, other: &ResidueMatrix) -> ResidueMatrix {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let m = self.modulus as u128;
        let mut data = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k) as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = data[i * other.cols + j] as u128;
                    data[i * other.cols + j] = ((cur + a * other.at(k, j) as u128) % m) as u64;
                }
            }
        }
        ResidueMatrix {
            rows: self.rows,
            cols: other.cols,
            modulus: self.modulus,
            data,
        }
    }

    pub fn apply(&self, v: &ResidueVector) -> ResidueVector {
        assert_eq!(self.modulus, v.modulus, "mixed moduli");
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let m = self.modulus as u128;
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc: u128 = 0;
                for j in 0..self.cols {
                    acc = (acc + self.at(i, j) as u128 * v.entries[j] as u128) % m;
                }
                acc as u64
            })
            .collect();
        ResidueVector::new(entries, self.modulus)
    }

    pub fn transpose(&self) -> ResidueMatrix {
        let mut data = vec![0u64; self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.at(i, j);
            }
        }
        ResidueMatrix {
            rows: self.cols,
            cols: self.rows,
            modulus: self.modulus,
            data,
        }
    }

    pub fn add(&self, other: &ResidueMatrix) -> ResidueMatrix {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ResidueMatrix {
            rows: self.rows,
            cols: self.cols,
            modulus: self.modulus,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a + b) % self.modulus)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ResidueMatrix) -> ResidueMatrix {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ResidueMatrix {
            rows: self.rows,
            cols: self.cols,
            modulus: self.modulus,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a + self.modulus - b) % self.modulus)
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> ResidueMatrix {
        let m = self.modulus as u128;
        ResidueMatrix {
            rows: self.rows,
            cols: self.cols,
            modulus: self.modulus,
            data: self
                .data
                .iter()
                .map(|a| (*a as u128 * c as u128 % m) as u64)
                .collect(),
        }
    }

    /// Inverse by Gaussian elimination with unit pivots.
    ///
    /// Works over Z_{p^r} (a matrix invertible mod p^r always admits a unit
    /// pivot in every elimination step). Returns None if singular or if no
    /// unit pivot can be found.
    pub fn inverse(&self) -> Option<ResidueMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let m = self.modulus;
        let mut a = self.clone();
        let mut inv = ResidueMatrix::identity(n, m);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| gcd_u64(a.at(r, col), m) == 1)?;
            if pivot_row != col {
                for j in 0..n {
                    let (x, y) = (a.at(col, j), a.at(pivot_row, j));
                    a.set(col, j, y);
                    a.set(pivot_row, j, x);
                    let (x, y) = (inv.at(col, j), inv.at(pivot_row, j));
                    inv.set(col, j, y);
                    inv.set(pivot_row, j, x);
                }
            }
            let piv_inv = mod_inverse(a.at(col, col), m)?;
            for j in 0..n {
                a.set(
                    col,
                    j,
                    (a.at(col, j) as u128 * piv_inv as u128 % m as u128) as u64,
                );
                inv.set(
                    col,
                    j,
                    (inv.at(col, j) as u128 * piv_inv as u128 % m as u128) as u64,
                );
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.at(r, col);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let sub = (f as u128 * a.at(col, j) as u128 % m as u128) as u64;
                    a.set(r, j, (a.at(r, j) + m - sub) % m);
                    let sub = (f as u128 * inv.at(col, j) as u128 % m as u128) as u64;
                    inv.set(r, j, (inv.at(r, j) + m - sub) % m);
                }
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.at(i, j) == if i == j { 1 % self.modulus } else { 0 })
            })
    }
}

/// Enumerates all of GL(n, Z_m) for small n^2 search spaces.
pub fn gl_elements(n: usize, modulus: u64) -> Vec<ResidueMatrix> {
    let total = (modulus as u128).pow((n * n) as u32);
    assert!(total <= 20_000_000, "GL enumeration too large");
    let mut out = Vec::new();
    let mut counter = vec![0u64; n * n];
    loop {
        let m = ResidueMatrix::new(n, n, modulus, counter.clone());
        if m.is_invertible() {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == counter.len() {
                return out;
            }
            counter[i] += 1;
            if counter[i] < modulus {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// An integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = IntegerMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += c * row[b]
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = self.at(a, j) + c * self.at(b, j);
            self.set(a, j, v);
        }
    }

    /// col[a] += c * col[b]
    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = self.at(i, a) + c * self.at(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.at(a, j);
            self.set(a, j, v);
        }
    }
}

/// Smith normal form decomposition: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal with the divisibility chain d1 | d2 | ...
pub struct SmithDecomposition {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    /// Inverse of `v`, maintained alongside; handy for kernel coordinates.
    pub v_inv: IntegerMatrix,
    /// Diagonal entries, nonnegative, divisibility chain, zeros last.
    pub invariants: Vec<BigInt>,
}

/// Smith normal form by unimodular row/column reduction.
///
/// Naive pivoting with smallest-absolute-value selection; entry growth is
/// accepted since matrices stay small here. The returned decomposition
/// satisfies u*m*v = d, asserted internally.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let mut v_inv = IntegerMatrix::identity(cols);

    let t = rows.min(cols);
    for k in 0..t {
        loop {
            // smallest nonzero |entry| in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !a.at(i, j).is_zero()
                        && pivot
                            .map(|(pi, pj)| a.at(i, j).abs() < a.at(pi, pj).abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap_rows(k, pi);
            u.swap_rows(k, pi);
            a.swap_cols(k, pj);
            v.swap_cols(k, pj);
            v_inv.swap_rows(k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                if !a.at(i, k).is_zero() {
                    let q = -(a.at(i, k) / a.at(k, k));
                    a.add_row(i, k, &q);
                    u.add_row(i, k, &q);
                    if !a.at(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !a.at(k, j).is_zero() {
                    let q = -(a.at(k, j) / a.at(k, k));
                    a.add_col(j, k, &q);
                    v.add_col(j, k, &q);
                    v_inv.add_row(k, j, &(-&q));
                    if !a.at(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility: pivot must divide the rest of the block
            let mut fixed = true;
            'outer: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(a.at(i, j) % a.at(k, k)).is_zero() {
                        let one = BigInt::one();
                        a.add_row(k, i, &one);
                        u.add_row(k, i, &one);
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a.at(k, k).is_negative() {
            a.negate_row(k);
            u.negate_row(k);
        }
    }

    debug_assert!(u.mul(m).mul(&v) == a, "u*m*v != d");
    debug_assert!(
        v.mul(&v_inv) == IntegerMatrix::identity(cols),
        "v*v_inv != I"
    );

    let invariants = (0..t).map(|k| a.at(k, k).clone()).collect();
    SmithDecomposition {
        d: a,
        u,
        v,
        v_inv,
        invariants,
    }
}

/// Invariant factors of the Smith normal form, zeros last.
pub fn smith_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
    let s = smith_normal_form(m);
    debug_assert!(smith_chain_ok(&s.invariants), "divisibility chain broken");
    s.invariants
}

pub fn smith_chain_ok(diag: &[BigInt]) -> bool {
    for w in diag.windows(2) {
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
        if !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return false;
        }
    }
    true
}

/// Largest e with p^e | n. Panics on n = 0 ("valuation undefined").
pub fn vp(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation undefined for 0");
    assert!(is_prime(p), "valuation base must be prime");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

pub fn vp_u64(n: u64, p: u64) -> u32 {
    vp(&BigInt::from(n), p)
}

/// Generators of the unit group of Z_m with their orders.
///
/// For m = 2^r (r >= 3): multiplication by 3 (order 2^{r-2}) and by 2^r - 1
/// (order 2). For m an odd prime power: the smallest unit of maximal order
/// (p-1)p^{r-1}, found by search.
pub fn aut_cyclic_generators(m: u64) -> Result<Vec<(u64, u64)>> {
    let Some((p, r)) = prime_power(m) else {
        return Err(Error::UnsupportedModulus(format!(
            "{m} is not a prime power"
        )));
    };
    if p == 2 {
        if r < 3 {
            return Err(Error::UnsupportedModulus(format!(
                "{m}: powers of 2 need exponent >= 3"
            )));
        }
        let order3 = 1u64 << (r - 2);
        debug_assert_eq!(unit_order(3, m), order3);
        debug_assert_eq!(unit_order(m - 1, m), 2);
        Ok(vec![(3, order3), (m - 1, 2)])
    } else {
        let target = (p - 1) * pow_u64(p, r - 1, u64::MAX / 2);
        for s in 2..m {
            if gcd_u64(s, m) == 1 && unit_order(s, m) == target {
                return Ok(vec![(s, target)]);
            }
        }
        unreachable!("unit group of Z_{{p^r}} is cyclic; a generator exists")
    }
}

/// |GL(n, Z_{p^r})| = prod_{i=0}^{n-1} (p^{rn} - p^{(r-1)n + i}).
pub fn gl_order(n: u32, p: u64, r: u32) -> BigInt {
    assert!(n >= 1 && r >= 1);
    let pb = BigInt::from(p);
    let top = pb.pow(r * n);
    let mut out = BigInt::one();
    for i in 0..n {
        out *= &top - pb.pow((r - 1) * n + i);
    }
    out
}

/// p-adic valuation of |GL(n, Z_{p^r})|: r*n^2 - n(n+1)/2.
pub fn gl_order_p_part(n: u32, p: u64, r: u32) -> u32 {
    let formula = r * n * n - n * (n + 1) / 2;
    debug_assert_eq!(vp(&gl_order(n, p, r), p), formula);
    formula
}
