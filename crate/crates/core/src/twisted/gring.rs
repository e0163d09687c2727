use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::ring::FiniteRing;

/// How the group acts on the ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionSpec {
    Trivial,
    /// The cyclic group element `gⁱ` acts as `x ↦ x^(p^(power·i))`; needs a
    /// field and a group built as `cyclic(n)`.
    Frobenius(usize),
    /// `table[g][r] = θ_g(r)` for every group element `g`.
    Table(Vec<Vec<usize>>),
}

/// Why the twisted group rings of a [`GRing`] are semisimple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semisimplicity {
    /// `|G|·1` is a unit of the ring.
    OrderInvertible,
    /// Faithful action on a field, so every `R_θ[H] ≅ End_{R^H}(R)`.
    GaloisField,
}

/// A finite commutative ring with a group acting by verified automorphisms.
#[derive(Debug, Clone)]
pub struct GRing {
    ring: Arc<FiniteRing>,
    group: Arc<FiniteGroup>,
    theta: Vec<Vec<u32>>,
    semisimplicity: Semisimplicity,
}

/// The subring `R^H` of `H`-fixed elements, listed in index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedSubring {
    pub elements: Vec<usize>,
}

impl FixedSubring {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.elements.binary_search(&r).is_ok()
    }
}

impl GRing {
    /// Builds and verifies the action, then enforces the invertibility gate:
    /// either `|G|·1` is a unit, or `R` is a field acted on faithfully.
    pub fn new(ring: Arc<FiniteRing>, group: Arc<FiniteGroup>, action: &ActionSpec) -> Result<Self> {
        let theta = Self::action_tables(&ring, &group, action)?;
        Self::verify(&ring, &group, &theta)?;
        let order_unit = ring.is_unit(ring.from_int(group.order() as i64));
        let faithful = (0..group.order()).filter(|&g| g != group.identity()).all(|g| {
            theta[g].iter().enumerate().any(|(r, &t)| r != t as usize)
        });
        let semisimplicity = if order_unit {
            Semisimplicity::OrderInvertible
        } else if faithful && ring.as_field().is_some() {
            Semisimplicity::GaloisField
        } else {
            return Err(Error::OrderNotInvertible { order: group.order(), ring: ring.label().to_string() });
        };
        Ok(Self { ring, group, theta, semisimplicity })
    }

    fn action_tables(ring: &FiniteRing, group: &FiniteGroup, action: &ActionSpec) -> Result<Vec<Vec<u32>>> {
        let n = group.order();
        let size = ring.size();
        match action {
            ActionSpec::Trivial => Ok(vec![(0..size as u32).collect(); n]),
            ActionSpec::Frobenius(power) => {
                let field = ring
                    .as_field()
                    .ok_or_else(|| Error::NotAutomorphism("Frobenius action needs a finite field".into()))?;
                let cyclic = n == 1 || (0..n).all(|i| group.mul(1 % n, i) == (i + 1) % n);
                if !cyclic {
                    return Err(Error::NotAutomorphism(
                        "Frobenius action needs a cyclic group with element i = g^i".into(),
                    ));
                }
                Ok((0..n)
                    .map(|i| (0..size).map(|r| field.frobenius(r, power * i) as u32).collect())
                    .collect())
            }
            ActionSpec::Table(t) => {
                if t.len() != n || t.iter().any(|row| row.len() != size || row.iter().any(|&x| x >= size)) {
                    return Err(Error::NotAutomorphism(format!("action table must be {n} rows of {size} ring elements")));
                }
                Ok(t.iter().map(|row| row.iter().map(|&x| x as u32).collect()).collect())
            }
        }
    }

    fn verify(ring: &FiniteRing, group: &FiniteGroup, theta: &[Vec<u32>]) -> Result<()> {
        let size = ring.size();
        for (g, t) in theta.iter().enumerate() {
            let name = group.element_label(g);
            let mut seen = vec![false; size];
            for &x in t {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::NotAutomorphism(format!("theta({name}) is not a bijection")));
                }
            }
            if t[ring.one()] as usize != ring.one() {
                return Err(Error::NotAutomorphism(format!("theta({name}) does not fix 1")));
            }
            for a in 0..size {
                for b in 0..size {
                    let (ta, tb) = (t[a] as usize, t[b] as usize);
                    if t[ring.add(a, b)] as usize != ring.add(ta, tb) {
                        return Err(Error::NotAutomorphism(format!("theta({name}) is not additive on ({a}, {b})")));
                    }
                    if t[ring.mul(a, b)] as usize != ring.mul(ta, tb) {
                        return Err(Error::NotAutomorphism(format!("theta({name}) is not multiplicative on ({a}, {b})")));
                    }
                }
            }
        }
        if theta[group.identity()].iter().enumerate().any(|(r, &t)| r != t as usize) {
            return Err(Error::NotAutomorphism("the identity does not act trivially".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                if (0..size).any(|r| theta[gh][r] != theta[g][theta[h][r] as usize]) {
                    return Err(Error::NotAutomorphism(format!(
                        "theta({}) != theta({}) o theta({})",
                        group.element_label(gh),
                        group.element_label(g),
                        group.element_label(h)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn semisimplicity(&self) -> Semisimplicity {
        self.semisimplicity
    }

    /// `θ_g(r)`.
    #[inline]
    pub fn theta(&self, g: usize, r: usize) -> usize {
        self.theta[g][r] as usize
    }

    pub fn is_trivial(&self) -> bool {
        self.theta.iter().all(|t| t.iter().enumerate().all(|(r, &x)| r == x as usize))
    }

    pub fn fixed_subring(&self, h: &Subgroup) -> FixedSubring {
        let elements = (0..self.ring.size())
            .filter(|&r| h.elements().iter().all(|&g| self.theta(g, r) == r))
            .collect();
        FixedSubring { elements }
    }

    pub fn label(&self) -> String {
        let action = if self.is_trivial() { "trivial" } else { "twisted" };
        format!("{} acting on {} ({action})", self.group.label(), self.ring.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn ring(p: u32, k: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::build(&RingSpec::Gf { p, k, modulus: None }).unwrap())
    }

    #[test]
    fn frobenius_on_gf9() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let gr = GRing::new(ring(3, 2), Arc::clone(&g), &ActionSpec::Frobenius(1)).unwrap();
        let fixed = gr.fixed_subring(&Subgroup::whole(&g));
        // x^3 = x has exactly the prime field as solutions
        let brute: Vec<usize> = (0..9).filter(|&x| gr.ring().as_field().unwrap().pow(x, 3) == x).collect();
        assert_eq!(fixed.elements, brute);
        assert_eq!(fixed.size(), 3);
        assert_eq!(gr.fixed_subring(&Subgroup::trivial(&g)).size(), 9);
        assert_eq!(gr.semisimplicity(), Semisimplicity::OrderInvertible);
    }

    #[test]
    fn galois_subfields_of_gf64() {
        let g = Arc::new(FiniteGroup::cyclic(6).unwrap());
        let gr = GRing::new(ring(2, 6), Arc::clone(&g), &ActionSpec::Frobenius(1)).unwrap();
        assert_eq!(gr.semisimplicity(), Semisimplicity::GaloisField);
        for h in crate::group::enumerate_subgroups(&g, 48).unwrap() {
            assert_eq!(gr.fixed_subring(&h).size(), 1 << (6 / h.order()));
        }
    }

    #[test]
    fn gate_rejects_non_invertible_order() {
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let r = GRing::new(ring(3, 1), g, &ActionSpec::Trivial);
        assert!(matches!(r, Err(Error::OrderNotInvertible { order: 3, .. })));
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        assert!(GRing::new(ring(2, 1), s3, &ActionSpec::Trivial).is_err());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let r = ring(5, 1);
        // x ↦ 2x is additive but not multiplicative
        let table = vec![(0..5).collect(), (0..5).map(|x| 2 * x % 5).collect()];
        assert!(matches!(GRing::new(r, Arc::clone(&g), &ActionSpec::Table(table)), Err(Error::NotAutomorphism(_))));
        // Frobenius of GF(8) has order 3, so it is not an action of C2
        assert!(GRing::new(ring(2, 3), g, &ActionSpec::Frobenius(1)).is_err());
    }
}
