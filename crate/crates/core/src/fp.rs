//! Dense linear algebra over a prime field GF(p).
//!
//! Vectors are row vectors and matrices act on the right: `v -> v * M`.
//! Matrix products therefore compose left to right, `v * (A * B) = (v * A) * B`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

fn inv_mod(a: u32, p: u32) -> Option<u32> {
    if a % p == 0 {
        return None;
    }
    // Fermat: a^(p-2)
    Some(pow_mod(a, p - 2, p))
}

fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc: u64 = 1;
    let mut b = (base % p) as u64;
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    base = acc as u32;
    base
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpVector {
    p: u32,
    entries: Vec<u32>,
}

impl FpVector {
    pub fn new(p: u32, entries: Vec<u32>) -> FpVector {
        let entries = entries.into_iter().map(|x| x % p).collect();
        FpVector { p, entries }
    }

    pub fn zero(p: u32, n: usize) -> FpVector {
        FpVector {
            p,
            entries: vec![0; n],
        }
    }

    pub fn unit(p: u32, n: usize, k: usize) -> FpVector {
        let mut v = FpVector::zero(p, n);
        v.entries[k] = 1;
        v
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &FpVector) -> FpVector {
        debug_assert_eq!(self.dim(), other.dim());
        FpVector {
            p: self.p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> FpVector {
        let c = c % self.p;
        FpVector {
            p: self.p,
            entries: self.entries.iter().map(|a| a * c % self.p).collect(),
        }
    }

    pub fn neg(&self) -> FpVector {
        self.scale(self.p - 1)
    }

    /// Row vector times matrix.
    pub fn mul_mat(&self, m: &FpMatrix) -> FpVector {
        debug_assert_eq!(self.dim(), m.n);
        let n = m.n;
        let p = self.p as u64;
        let mut out = vec![0u32; n];
        for (j, slot) in out.iter_mut().enumerate() {
            let mut acc = 0u64;
            for i in 0..n {
                acc += self.entries[i] as u64 * m.data[i * n + j] as u64;
            }
            *slot = (acc % p) as u32;
        }
        FpVector {
            p: self.p,
            entries: out,
        }
    }

    /// All `p^n` vectors of the space in lexicographic order of entries.
    pub fn all(p: u32, n: usize) -> Vec<FpVector> {
        let total = (p as usize).pow(n as u32);
        (0..total)
            .map(|mut k| {
                let mut entries = vec![0u32; n];
                for slot in entries.iter_mut().rev() {
                    *slot = (k % p as usize) as u32;
                    k /= p as usize;
                }
                FpVector { p, entries }
            })
            .collect()
    }

    /// Position of this vector in the order produced by [`FpVector::all`].
    pub fn rank_index(&self) -> usize {
        self.entries
            .iter()
            .fold(0usize, |acc, &x| acc * self.p as usize + x as usize)
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Square matrix over GF(p), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u32,
    n: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Result<FpMatrix> {
        check_prime(p)?;
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend(row.iter().map(|&x| x % p));
        }
        Ok(FpMatrix { p, n, data })
    }

    /// Convenience constructor for literal matrices in code and tests.
    pub fn from_array<const N: usize>(p: u32, rows: [[u32; N]; N]) -> FpMatrix {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        FpMatrix::from_rows(p, &rows).expect("literal matrix")
    }

    pub fn identity(p: u32, n: usize) -> FpMatrix {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FpMatrix { p, n, data }
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> FpMatrix {
        let mut m = FpMatrix::identity(p, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    pub fn diagonal(p: u32, diag: &[u32]) -> FpMatrix {
        let n = diag.len();
        let mut m = FpMatrix::identity(p, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d % p;
        }
        m
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &FpMatrix) -> FpMatrix {
        let n = self.n + other.n;
        let mut data = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                data[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                data[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        FpMatrix {
            p: self.p,
            n,
            data,
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.n + j] = x % self.p;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn row(&self, i: usize) -> FpVector {
        FpVector {
            p: self.p,
            entries: self.data[i * self.n..(i + 1) * self.n].to_vec(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == FpMatrix::identity(self.p, self.n)
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let p = self.p as u64;
        let mut data = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.data[i * n + k] as u64 * other.data[k * n + j] as u64;
                }
                data[i * n + j] = (acc % p) as u32;
            }
        }
        FpMatrix {
            p: self.p,
            n,
            data,
        }
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        let mut acc = FpMatrix::identity(self.p, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        FpMatrix {
            p: self.p,
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        FpMatrix {
            p: self.p,
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a + self.p - b) % self.p)
                .collect(),
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        FpMatrix {
            p: self.p,
            n,
            data,
        }
    }

    pub fn trace(&self) -> u32 {
        (0..self.n).map(|i| self.get(i, i)).sum::<u32>() % self.p
    }

    /// Gaussian elimination; returns (determinant, inverse if any).
    fn eliminate(&self) -> (u32, Option<FpMatrix>) {
        let n = self.n;
        let p = self.p;
        let mut a = self.data.clone();
        let mut inv = FpMatrix::identity(p, n).data;
        let mut det: u64 = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return (0, None);
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
                det = det * (p as u64 - 1) % p as u64;
            }
            let pv = a[col * n + col];
            det = det * pv as u64 % p as u64;
            let pinv = inv_mod(pv, p).expect("nonzero pivot");
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * pinv % p;
                inv[col * n + j] = inv[col * n + j] * pinv % p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + (p - f) * a[col * n + j]) % p;
                    inv[r * n + j] = (inv[r * n + j] + (p - f) * inv[col * n + j]) % p;
                }
            }
        }
        (
            det as u32,
            Some(FpMatrix {
                p,
                n,
                data: inv,
            }),
        )
    }

    pub fn det(&self) -> u32 {
        self.eliminate().0
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        self.eliminate().1.ok_or(Error::NotInvertible { p: self.p })
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    /// Monic characteristic polynomial `det(xI - M)`, coefficients low degree first.
    ///
    /// Reduces to upper Hessenberg form by similarity, then runs the
    /// standard determinant recurrence on the leading principal blocks.
    pub fn charpoly(&self) -> Poly {
        let n = self.n;
        let p = self.p;
        let mut h = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else {
                continue;
            };
            if piv != m {
                for j in 0..n {
                    h.swap(at(piv, j), at(m, j));
                }
                for i in 0..n {
                    h.swap(at(i, piv), at(i, m));
                }
            }
            let pinv = inv_mod(h[at(m, m - 1)], p).expect("nonzero pivot");
            for i in m + 1..n {
                let u = h[at(i, m - 1)] * pinv % p;
                if u == 0 {
                    continue;
                }
                // row_i -= u * row_m
                for j in 0..n {
                    h[at(i, j)] = (h[at(i, j)] + (p - u) * h[at(m, j)] % p) % p;
                }
                // col_m += u * col_i
                for r in 0..n {
                    h[at(r, m)] = (h[at(r, m)] + u * h[at(r, i)]) % p;
                }
            }
        }
        // polys[k] = charpoly of the leading k x k block
        let mut polys: Vec<Poly> = vec![Poly::one(p)];
        for m in 0..n {
            let x_minus = Poly::new(p, vec![(p - h[at(m, m)]) % p, 1]);
            let mut next = x_minus.mul(&polys[m]);
            let mut prod: u64 = 1;
            for i in (0..m).rev() {
                prod = prod * h[at(i + 1, i)] as u64 % p as u64;
                let coeff = prod * h[at(i, m)] as u64 % p as u64;
                if coeff != 0 {
                    next = next.sub(&polys[i].scale(coeff as u32));
                }
            }
            polys.push(next);
        }
        polys.pop().expect("nonempty")
    }

    /// Rank of the span of the given vectors.
    pub fn rank_of(vectors: &[FpVector]) -> usize {
        let mut basis = EchelonBasis::new();
        for v in vectors {
            basis.insert(v);
        }
        basis.rank()
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row-echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, FpVector)>,
}

impl EchelonBasis {
    pub fn new() -> EchelonBasis {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &FpVector) -> FpVector {
        let mut v = v.clone();
        let p = v.p;
        for (pivot, row) in &self.rows {
            let c = v.entries[*pivot];
            if c != 0 {
                v = v.add(&row.scale(p - c));
            }
        }
        v
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns true if the rank grew.
    pub fn insert(&mut self, v: &FpVector) -> bool {
        let r = self.reduce(v);
        let Some(pivot) = r.entries.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = r.p;
        let r = r.scale(inv_mod(r.entries[pivot], p).expect("nonzero"));
        for (_, row) in self.rows.iter_mut() {
            let c = row.entries[pivot];
            if c != 0 {
                *row = row.add(&r.scale(p - c));
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

/// Polynomial over GF(p), coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    p: u32,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(p: u32, coeffs: Vec<u32>) -> Poly {
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn one(p: u32) -> Poly {
        Poly::new(p, vec![1])
    }

    /// Product of `(x - root)` over the given roots.
    pub fn from_roots(p: u32, roots: &[u32]) -> Poly {
        roots.iter().fold(Poly::one(p), |acc, &r| {
            acc.mul(&Poly::new(p, vec![(p - r % p) % p, 1]))
        })
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += *a as u64 * *b as u64;
            }
        }
        Poly::new(
            self.p,
            out.into_iter().map(|c| (c % self.p as u64) as u32).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(0);
                let b = other.coeffs.get(k).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Poly::new(self.p, c)
    }

    pub fn scale(&self, c: u32) -> Poly {
        Poly::new(
            self.p,
            self.coeffs.iter().map(|a| a * (c % self.p) % self.p).collect(),
        )
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % self.p as u64) as u32
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}
