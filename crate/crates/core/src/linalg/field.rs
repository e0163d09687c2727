//! Prime fields, polynomials over them, and finite fields `GF(p^k)`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Arithmetic in `GF(p)`; elements are `u32` residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a non-zero element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn from_i64(&self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomials over `GF(p)`, lowest degree first, no trailing zeros.
pub mod poly {
    use super::PrimeField;

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn degree(a: &[u32]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn sub(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect();
        trim(out)
    }

    pub fn mul(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    /// Remainder of `a` modulo a non-zero `m`.
    pub fn rem(f: PrimeField, a: &[u32], m: &[u32]) -> Vec<u32> {
        let dm = degree(m).expect("division by zero polynomial");
        let lead_inv = f.inv(m[dm]);
        let mut r = trim(a.to_vec());
        while let Some(dr) = degree(&r) {
            if dr < dm {
                break;
            }
            let c = f.mul(r[dr], lead_inv);
            let shift = dr - dm;
            for i in 0..=dm {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, m[i]));
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(f, &a, &b);
            a = b;
            b = r;
        }
        if let Some(d) = degree(&a) {
            let inv = f.inv(a[d]);
            a = a.iter().map(|&c| f.mul(c, inv)).collect();
        }
        a
    }

    pub fn mulmod(f: PrimeField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        rem(f, &mul(f, a, b), m)
    }

    pub fn powmod(f: PrimeField, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut acc = rem(f, &[1], m);
        let mut b = rem(f, base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(f, &acc, &b, m);
            }
            b = mulmod(f, &b, &b, m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(f: PrimeField, a: &[u32], x: u32) -> u32 {
        a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

/// Irreducibility of a monic polynomial of degree `k` over `GF(p)`:
/// `gcd(m, x^(p^i) − x) = 1` for `1 ≤ i ≤ k/2`, which excludes every factor
/// of degree at most `k/2`.
pub fn is_irreducible(f: PrimeField, modulus: &[u32]) -> bool {
    let Some(k) = poly::degree(modulus) else {
        return false;
    };
    if k == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=k / 2 {
        xp = poly::powmod(f, &xp, f.p() as u64, modulus);
        let diff = poly::sub(f, &xp, &x);
        let g = poly::gcd(f, modulus, &diff);
        if poly::degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// The finite field `GF(p)[x]/(modulus)`.
///
/// Elements are encoded as integers `Σ cᵢ pⁱ` where `cᵢ` is the coefficient of
/// `aⁱ` and `a` is the class of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteField {
    prime: PrimeField,
    degree: usize,
    modulus: Vec<u32>,
}

impl FiniteField {
    /// `GF(p^k)` with the first primitive monic polynomial, ordering candidates
    /// by the integer encoding of their lower coefficients.
    pub fn new(p: u32, k: usize) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if k == 0 {
            return Err(Error::InvalidRing("field degree must be positive".into()));
        }
        let count = (p as u64).checked_pow(k as u32).ok_or_else(|| Error::InvalidRing("field too large".into()))?;
        for code in 0..count {
            let mut m = digits(code, p, k);
            m.push(1);
            if !is_irreducible(prime, &m) {
                continue;
            }
            let field = Self { prime, degree: k, modulus: m };
            if field.is_primitive_root(field.generator()) {
                return Ok(field);
            }
        }
        Err(Error::InvalidRing(format!("no primitive polynomial of degree {k} over GF({p})")))
    }

    /// `GF(p)[x]/(modulus)` for a given monic irreducible modulus (lowest
    /// coefficient first).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        let m: Vec<u32> = poly::trim(modulus.iter().map(|&c| c % p).collect());
        let k = poly::degree(&m).unwrap_or(0);
        if k == 0 || m[k] != 1 {
            return Err(Error::InvalidRing("modulus must be monic of positive degree".into()));
        }
        if !is_irreducible(prime, &m) {
            return Err(Error::Reducible { p, modulus: m });
        }
        Ok(Self { prime, degree: k, modulus: m })
    }

    pub fn prime_field(&self) -> PrimeField {
        self.prime
    }

    pub fn p(&self) -> u32 {
        self.prime.p()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn size(&self) -> usize {
        (self.p() as usize).pow(self.degree as u32)
    }

    /// Coordinates of an encoded element.
    pub fn coords(&self, x: usize) -> Vec<u32> {
        digits(x as u64, self.p(), self.degree)
    }

    pub fn encode(&self, coords: &[u32]) -> usize {
        coords.iter().rev().fold(0usize, |acc, &c| acc * self.p() as usize + c as usize)
    }

    /// The class of `x`.
    pub fn generator(&self) -> usize {
        if self.degree == 1 {
            // x ≡ −m₀ in degree one
            self.prime.neg(self.modulus[0]) as usize
        } else {
            self.p() as usize
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let c: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| self.prime.add(x, y)).collect();
        self.encode(&c)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = poly::mulmod(self.prime, &self.coords(a), &self.coords(b), &self.modulus);
        let mut c = prod;
        c.resize(self.degree, 0);
        self.encode(&c)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<u32> = self.coords(a).iter().map(|&x| self.prime.neg(x)).collect();
        self.encode(&c)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Inverse of a non-zero element.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "inverse of zero in {}", self.label());
        self.pow(a, self.size() as u64 - 2)
    }

    /// `x ↦ x^(p^power)`.
    pub fn frobenius(&self, a: usize, power: usize) -> usize {
        let mut x = a;
        for _ in 0..power % self.degree {
            x = self.pow(x, self.p() as u64);
        }
        x
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut acc = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn is_primitive_root(&self, a: usize) -> bool {
        if a == 0 {
            return false;
        }
        let n = self.size() as u64 - 1;
        let mut m = n;
        let mut d = 2;
        let mut primes = Vec::new();
        while d * d <= m {
            if m.is_multiple_of(d) {
                primes.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        primes.iter().all(|&q| self.pow(a, n / q) != 1)
    }

    pub fn label(&self) -> String {
        if self.degree == 1 {
            format!("GF({})", self.p())
        } else {
            format!("GF({}^{})", self.p(), self.degree)
        }
    }
}

/// Base-`p` digits of `x`, lowest first, padded to `len`.
pub fn digits(mut x: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((x % p as u64) as u32);
        x /= p as u64;
    }
    out
}
