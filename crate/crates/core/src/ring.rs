//! Finite commutative rings with full addition and multiplication tables.
//!
//! Elements are indices `0..size`; `0` is always the zero element. For a
//! finite field the index is the field encoding `Σ cᵢ pⁱ`, so the base-`p`
//! digits of an index are its coordinates on the power basis `1, a, a², …`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::field::FiniteField;

/// Largest ring for which tables are built.
pub const MAX_RING_SIZE: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingSpec {
    /// `GF(p^k)`, optionally with an explicit monic modulus (lowest
    /// coefficient first).
    Gf {
        p: u32,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
    },
    Zmod(usize),
    Product(Vec<RingSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    label: String,
    size: usize,
    one: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    field: Option<FiniteField>,
}

impl FiniteRing {
    pub fn build(spec: &RingSpec) -> Result<Self> {
        match spec {
            RingSpec::Gf { p, k, modulus } => {
                let f = match modulus {
                    Some(m) => {
                        let f = FiniteField::with_modulus(*p, m)?;
                        if f.degree() != *k {
                            return Err(Error::InvalidRing(format!("modulus has degree {} but k = {k}", f.degree())));
                        }
                        f
                    }
                    None => FiniteField::new(*p, *k)?,
                };
                Self::field(f)
            }
            RingSpec::Zmod(n) => Self::zmod(*n),
            RingSpec::Product(parts) => {
                let rings = parts.iter().map(Self::build).collect::<Result<Vec<_>>>()?;
                Self::product(&rings)
            }
        }
    }

    pub fn field(f: FiniteField) -> Result<Self> {
        let size = f.size();
        check_size(size)?;
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                add[a * size + b] = f.add(a, b) as u32;
                mul[a * size + b] = f.mul(a, b) as u32;
            }
        }
        let neg = (0..size).map(|a| f.neg(a) as u32).collect();
        Ok(Self { label: f.label(), size, one: 1, add, mul, neg, field: Some(f) })
    }

    pub fn zmod(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing("Z/n needs n >= 2".into()));
        }
        check_size(n)?;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u32;
                mul[a * n + b] = ((a * b) % n) as u32;
            }
        }
        let neg = (0..n).map(|a| ((n - a) % n) as u32).collect();
        Ok(Self { label: format!("Z/{n}"), size: n, one: 1, add, mul, neg, field: None })
    }

    /// Componentwise product; the index is mixed radix with the first factor
    /// varying fastest.
    pub fn product(parts: &[FiniteRing]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        let size = parts.iter().try_fold(1usize, |acc, r| acc.checked_mul(r.size)).unwrap_or(usize::MAX);
        check_size(size)?;
        let split = |mut x: usize| -> Vec<usize> {
            parts
                .iter()
                .map(|r| {
                    let d = x % r.size;
                    x /= r.size;
                    d
                })
                .collect()
        };
        let join = |digits: &[usize]| -> usize {
            digits.iter().zip(parts).rev().fold(0, |acc, (&d, r)| acc * r.size + d)
        };
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            let da = split(a);
            for b in 0..size {
                let db = split(b);
                let s: Vec<usize> = parts.iter().enumerate().map(|(i, r)| r.add(da[i], db[i])).collect();
                let m: Vec<usize> = parts.iter().enumerate().map(|(i, r)| r.mul(da[i], db[i])).collect();
                add[a * size + b] = join(&s) as u32;
                mul[a * size + b] = join(&m) as u32;
            }
        }
        let neg = (0..size)
            .map(|a| {
                let d: Vec<usize> = split(a).iter().zip(parts).map(|(&x, r)| r.neg(x)).collect();
                join(&d) as u32
            })
            .collect();
        let one = join(&parts.iter().map(|r| r.one).collect::<Vec<_>>());
        let label = parts.iter().map(|r| r.label.clone()).collect::<Vec<_>>().join(" x ");
        Ok(Self { label, size, one, add, mul, neg, field: None })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// The underlying finite field, when the ring is one.
    pub fn as_field(&self) -> Option<&FiniteField> {
        self.field.as_ref()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n · 1`.
    pub fn from_int(&self, n: i64) -> usize {
        let unit = if n < 0 { self.neg(self.one) } else { self.one };
        (0..n.unsigned_abs()).fold(0, |acc, _| self.add(acc, unit))
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size).find(|&b| self.mul(a, b) == self.one)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inverse(a).is_some()
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_unit(a)).collect()
    }
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_RING_SIZE {
        Err(Error::InvalidRing(format!("ring of size {size} exceeds the table bound {MAX_RING_SIZE}")))
    } else {
        Ok(())
    }
}
