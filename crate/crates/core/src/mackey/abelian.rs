use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// A value of a Mackey functor: `Zʳ` or an explicit finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbValue {
    pub label: String,
    pub kind: AbKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbKind {
    Free { rank: usize },
    /// `Z/n` on the residues `0..n`.
    Cyclic { order: usize },
    /// Elements `0..n` with `table[a][b] = a + b`.
    Table { table: Vec<Vec<usize>>, zero: usize },
}

impl AbValue {
    pub fn free(rank: usize) -> Self {
        let label = match rank {
            0 => "0".to_string(),
            1 => "Z".to_string(),
            r => format!("Z^{r}"),
        };
        Self { label, kind: AbKind::Free { rank } }
    }

    pub fn cyclic(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAbelian("Z/0 is not finite; use a free value".into()));
        }
        Ok(Self { label: format!("Z/{order}"), kind: AbKind::Cyclic { order } })
    }

    /// Verifies closure, associativity, commutativity, the identity and inverses.
    pub fn table(label: impl Into<String>, table: Vec<Vec<usize>>, zero: usize) -> Result<Self> {
        let n = table.len();
        if zero >= n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return Err(Error::InvalidAbelian("table is not a closed square".into()));
        }
        for a in 0..n {
            if table[zero][a] != a {
                return Err(Error::InvalidAbelian(format!("{zero} is not an identity at {a}")));
            }
            if !table[a].contains(&zero) {
                return Err(Error::InvalidAbelian(format!("{a} has no inverse")));
            }
            for b in 0..n {
                if table[a][b] != table[b][a] {
                    return Err(Error::InvalidAbelian(format!("{a} + {b} is not commutative")));
                }
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidAbelian(format!("({a} + {b}) + {c} is not associative")));
                    }
                }
            }
        }
        Ok(Self { label: label.into(), kind: AbKind::Table { table, zero } })
    }

    pub fn is_free(&self) -> bool {
        matches!(self.kind, AbKind::Free { .. })
    }

    /// Rank for free values, number of elements for finite ones.
    pub fn size(&self) -> usize {
        match &self.kind {
            AbKind::Free { rank } => *rank,
            AbKind::Cyclic { order } => *order,
            AbKind::Table { table, .. } => table.len(),
        }
    }

    fn zero(&self) -> usize {
        match &self.kind {
            AbKind::Table { zero, .. } => *zero,
            _ => 0,
        }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        match &self.kind {
            AbKind::Cyclic { order } => (a + b) % order,
            AbKind::Table { table, .. } => table[a][b],
            AbKind::Free { .. } => unreachable!("free values add as matrices"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapData {
    /// Acts on column vectors.
    Matrix(IntMatrix),
    /// Image of every element.
    Table(Vec<usize>),
}

/// A homomorphism between two values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbMap {
    pub source: AbValue,
    pub target: AbValue,
    pub data: MapData,
}

impl AbMap {
    /// Checks shapes, and additivity for finite values: exhaustively on
    /// tables, through the generator `1` on cyclic sources.
    pub fn new(source: AbValue, target: AbValue, data: MapData) -> Result<Self> {
        match (&source.kind, &target.kind, &data) {
            (AbKind::Free { rank: r }, AbKind::Free { rank: s }, MapData::Matrix(m)) => {
                if m.rows() != *s || m.cols() != *r {
                    return Err(Error::InvalidAbelian(format!("matrix is {}x{}, expected {s}x{r}", m.rows(), m.cols())));
                }
            }
            (AbKind::Free { .. }, _, _) | (_, AbKind::Free { .. }, _) | (_, _, MapData::Matrix(_)) => {
                return Err(Error::InvalidAbelian("free and finite values are joined only by matrices between free values".into()));
            }
            (_, _, MapData::Table(images)) => {
                if images.len() != source.size() || images.iter().any(|&y| y >= target.size()) {
                    return Err(Error::InvalidAbelian("map table does not fit its values".into()));
                }
                if images[source.zero()] != target.zero() {
                    return Err(Error::InvalidAbelian("zero is not preserved".into()));
                }
                if let AbKind::Cyclic { order } = source.kind {
                    let g = if order > 1 { images[1] } else { target.zero() };
                    let mut acc = target.zero();
                    for (a, &img) in images.iter().enumerate() {
                        if img != acc {
                            return Err(Error::InvalidAbelian(format!("f({a}) is not {a}·f(1)")));
                        }
                        acc = target.add(acc, g);
                    }
                    if acc != target.zero() {
                        return Err(Error::InvalidAbelian("the order of f(1) does not divide the source order".into()));
                    }
                } else {
                    let n = source.size();
                    for a in 0..n {
                        for b in 0..n {
                            if images[source.add(a, b)] != target.add(images[a], images[b]) {
                                return Err(Error::InvalidAbelian(format!("f({a} + {b}) != f({a}) + f({b})")));
                            }
                        }
                    }
                }
            }
        }
        Ok(Self { source, target, data })
    }

    pub fn identity(v: &AbValue) -> Self {
        let data = match v.kind {
            AbKind::Free { rank } => MapData::Matrix(IntMatrix::identity(rank)),
            _ => MapData::Table((0..v.size()).collect()),
        };
        Self { source: v.clone(), target: v.clone(), data }
    }

    pub fn zero(source: &AbValue, target: &AbValue) -> Self {
        let data = match (&source.kind, &target.kind) {
            (AbKind::Free { rank: r }, AbKind::Free { rank: s }) => MapData::Matrix(IntMatrix::zeros(*s, *r)),
            _ => MapData::Table(vec![target.zero(); source.size()]),
        };
        Self { source: source.clone(), target: target.clone(), data }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AbMap) -> Result<AbMap> {
        if self.target != other.source {
            return Err(Error::InvalidAbelian(format!("cannot compose through {} and {}", self.target.label, other.source.label)));
        }
        let data = match (&self.data, &other.data) {
            (MapData::Matrix(a), MapData::Matrix(b)) => MapData::Matrix(b.mul(a)),
            (MapData::Table(a), MapData::Table(b)) => MapData::Table(a.iter().map(|&x| b[x]).collect()),
            _ => unreachable!("kinds are checked at construction"),
        };
        Ok(AbMap { source: self.source.clone(), target: other.target.clone(), data })
    }

    /// Pointwise sum.
    pub fn add(&self, other: &AbMap) -> Result<AbMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::InvalidAbelian("adding maps with different endpoints".into()));
        }
        let data = match (&self.data, &other.data) {
            (MapData::Matrix(a), MapData::Matrix(b)) => MapData::Matrix(a.add(b)),
            (MapData::Table(a), MapData::Table(b)) => {
                MapData::Table(a.iter().zip(b).map(|(&x, &y)| self.target.add(x, y)).collect())
            }
            _ => unreachable!("kinds are checked at construction"),
        };
        Ok(AbMap { source: self.source.clone(), target: self.target.clone(), data })
    }

    pub fn matrix(&self) -> Option<&IntMatrix> {
        match &self.data {
            MapData::Matrix(m) => Some(m),
            MapData::Table(_) => None,
        }
    }

    pub fn images(&self) -> Option<&[usize]> {
        match &self.data {
            MapData::Table(t) => Some(t),
            MapData::Matrix(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_maps_are_checked_through_the_generator() {
        let (z4, z2) = (AbValue::cyclic(4).unwrap(), AbValue::cyclic(2).unwrap());
        assert!(AbMap::new(z4.clone(), z2.clone(), MapData::Table(vec![0, 1, 0, 1])).is_ok());
        // Z/2 → Z/4, 1 ↦ 1 has the wrong order
        assert!(AbMap::new(z2.clone(), z4.clone(), MapData::Table(vec![0, 1])).is_err());
        assert!(AbMap::new(z2, z4, MapData::Table(vec![0, 2])).is_ok());
    }

    #[test]
    fn tables_compose_and_add() {
        // Z/3 written multiplicatively on {1, 2, 4} mod 7 as indices 0, 1, 2
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let v = AbValue::table("mu3", table, 0).unwrap();
        let square = AbMap::new(v.clone(), v.clone(), MapData::Table(vec![0, 2, 1])).unwrap();
        let id = AbMap::identity(&v);
        assert_eq!(square.then(&square).unwrap(), id);
        assert_eq!(id.add(&id).unwrap(), square);
        assert!(AbMap::new(v.clone(), v, MapData::Table(vec![0, 1, 1])).is_err());
        assert!(AbValue::table("bad", vec![vec![0, 1], vec![1, 1]], 0).is_err());
    }

    #[test]
    fn matrices_compose_in_diagram_order() {
        let (z1, z2) = (AbValue::free(1), AbValue::free(2));
        let f = AbMap::new(z1.clone(), z2.clone(), MapData::Matrix(IntMatrix::from_rows(&[vec![1], vec![2]]))).unwrap();
        let g = AbMap::new(z2, z1, MapData::Matrix(IntMatrix::from_rows(&[vec![3, 1]]))).unwrap();
        assert_eq!(f.then(&g).unwrap().matrix().unwrap(), &IntMatrix::from_rows(&[vec![5]]));
        assert!(AbMap::new(AbValue::free(1), AbValue::cyclic(2).unwrap(), MapData::Table(vec![0])).is_err());
    }
}
