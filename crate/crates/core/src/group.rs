//! Finite groups as explicit Cayley tables, together with subgroup
//! enumeration, cosets, double cosets and conjugation.
//!
//! Every choice of representative is deterministic: the identity comes first,
//! then the smallest element index that is not yet covered.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on `|G|` for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 48;

/// Declarative description of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// Symmetric group on `n ≤ 5` points.
    Symmetric(usize),
    /// Direct product, left to right.
    Product(Vec<GroupSpec>),
    /// Explicit multiplication table, `table[i][j] = i·j`.
    Table(Vec<Vec<usize>>),
}

/// A finite group given by its multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    label: String,
    element_labels: Vec<String>,
    /// Points moved by the permutation behind each element, for symmetric groups.
    degree: Option<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates an explicit table and builds the group.
    pub fn from_table(rows: &[Vec<usize>], label: impl Into<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidGroup(format!("entry {v} in row {i} is out of range")));
                }
            }
            table.extend_from_slice(row);
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_flat(n, table, label.into(), labels, None)
    }

    fn from_flat(
        n: usize,
        table: Vec<usize>,
        label: String,
        element_labels: Vec<String>,
        degree: Option<usize>,
    ) -> Result<Self> {
        // Latin square: every row and column is a permutation.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = table[i * n + j];
                let c = table[j * n + i];
                if seen_row[r] {
                    return Err(Error::InvalidGroup(format!("row {i} repeats {r}; not a Latin square")));
                }
                if seen_col[c] {
                    return Err(Error::InvalidGroup(format!("column {i} repeats {c}; not a Latin square")));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j];
                for k in 0..n {
                    if table[ij * n + k] != table[i * n + table[j * n + k]] {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for i in 0..n {
            inverse[i] = (0..n)
                .find(|&j| table[i * n + j] == identity)
                .expect("latin square rows contain the identity");
            if table[inverse[i] * n + i] != identity {
                return Err(Error::InvalidGroup(format!("element {i} has no two-sided inverse")));
            }
        }
        Ok(Self { order: n, table, identity, inverse, label, element_labels, degree })
    }

    /// Builds a validated group from its description.
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Cyclic(n) => Self::cyclic(*n),
            GroupSpec::Dihedral(n) => Self::dihedral(*n),
            GroupSpec::Symmetric(n) => Self::symmetric(*n),
            GroupSpec::Product(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::InvalidGroup("empty product".into()))?;
                let mut acc = Self::build(first)?;
                for part in iter {
                    acc = Self::product(&acc, &Self::build(part)?)?;
                }
                Ok(acc)
            }
            GroupSpec::Table(rows) => Self::from_table(rows, "table"),
        }
    }

    /// Cyclic group of order `n`; element `i` is `g^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic(0)".into()));
        }
        let table = (0..n * n).map(|t| (t / n + t % n) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Self::from_flat(n, table, format!("C{n}"), labels, None)
    }

    /// Dihedral group of order `2n`; element `i + n·j` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dihedral(0)".into()));
        }
        let order = 2 * n;
        let mut table = vec![0; order * order];
        for a in 0..order {
            let (ai, aj) = (a % n, a / n);
            for b in 0..order {
                let (bi, bj) = (b % n, b / n);
                let rot = if aj == 0 { (ai + bi) % n } else { (ai + n - bi) % n };
                table[a * order + b] = rot + n * ((aj + bj) % 2);
            }
        }
        let labels = (0..order)
            .map(|x| {
                let (i, j) = (x % n, x / n);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "s".to_string(),
                    (1, 0) => "r".to_string(),
                    (1, 1) => "r s".to_string(),
                    (_, 0) => format!("r^{i}"),
                    _ => format!("r^{i} s"),
                }
            })
            .collect();
        Self::from_flat(order, table, format!("D{n}"), labels, None)
    }

    /// Symmetric group on `n` points, with `(σ·τ)(i) = σ(τ(i))`.
    /// Elements are the permutations in lexicographic order.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidGroup(format!("symmetric({n}) is outside 1..=5")));
        }
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).unwrap();
        let order = perms.len();
        let mut table = vec![0; order * order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..n).map(|i| pa[pb[i]]).collect();
                table[a * order + b] = index_of(&comp);
            }
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_flat(order, table, format!("S{n}"), labels, Some(n))
    }

    /// Direct product `a × b`; element `i + |a|·j` is `(i, j)`.
    pub fn product(a: &Self, b: &Self) -> Result<Self> {
        let (na, nb) = (a.order, b.order);
        let order = na * nb;
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let first = a.mul(x % na, y % na);
                let second = b.mul(x / na, y / na);
                table[x * order + y] = first + na * second;
            }
        }
        let labels = (0..order)
            .map(|x| format!("({},{})", a.element_labels[x % na], b.element_labels[x / na]))
            .collect();
        Self::from_flat(order, table, format!("{}x{}", a.label, b.label), labels, None)
    }

    /// The same group with element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n || (0..n).any(|i| !perm.contains(&i)) {
            return Err(Error::InvalidGroup("relabelling is not a permutation".into()));
        }
        let mut table = vec![0; n * n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            labels[perm[a]] = self.element_labels[a].clone();
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Self::from_flat(n, table, format!("{}'", self.label), labels, self.degree)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn element_label(&self, i: usize) -> &str {
        &self.element_labels[i]
    }

    /// Identity first, then every other element in increasing index order.
    pub fn canonical_order(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.identity).chain((0..self.order).filter(move |&i| i != self.identity))
    }

    /// Looks an element up by index (`"3"`), display label, or cycle notation
    /// for symmetric groups (`"(1 2)"`, `"(12)"`).
    pub fn find_element(&self, name: &str) -> Option<usize> {
        let trimmed = name.trim();
        let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
        let key = squash(trimmed);
        if let Some(i) = self.element_labels.iter().position(|l| squash(l) == key) {
            return Some(i);
        }
        if let Some(n) = self.degree {
            if let Some(perm) = parse_cycles(trimmed, n) {
                let label = cycle_notation(&perm);
                return self.element_labels.iter().position(|l| *l == label);
            }
        }
        match trimmed.parse::<usize>() {
            Ok(i) if i < self.order => Some(i),
            _ => None,
        }
    }

    /// Order of a single element.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycle notation with 1-based points, e.g. `(1 2 3)`; the identity is `()`.
fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = perm[x];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses a product of cycles on `n` points; the rightmost cycle acts first.
fn parse_cycles(s: &str, n: usize) -> Option<Vec<usize>> {
    let s = s.trim();
    if !s.starts_with('(') {
        return None;
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let rest_trim = rest.trim_start();
        let body_end = rest_trim.find(')')?;
        if !rest_trim.starts_with('(') {
            return None;
        }
        let body = &rest_trim[1..body_end];
        let tokens: Vec<&str> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let mut points = Vec::new();
        if tokens.len() == 1 && tokens[0].len() > 1 && n <= 9 {
            for ch in tokens[0].chars() {
                points.push(ch.to_digit(10)? as usize);
            }
        } else {
            for t in tokens {
                points.push(t.parse::<usize>().ok()?);
            }
        }
        if points.iter().any(|&p| p == 0 || p > n) {
            return None;
        }
        cycles.push(points);
        rest = &rest_trim[body_end + 1..];
        rest = rest.trim_start();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for cycle in cycles.iter().rev() {
        let mut c: Vec<usize> = (0..n).collect();
        for w in 0..cycle.len() {
            c[cycle[w] - 1] = cycle[(w + 1) % cycle.len()] - 1;
        }
        // apply c after the current permutation
        perm = perm.iter().map(|&x| c[x]).collect();
    }
    Some(perm)
}

/// A subgroup, stored as its sorted element list.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

impl Subgroup {
    fn from_sorted(group: Arc<FiniteGroup>, elements: Vec<usize>) -> Self {
        let mut member = vec![false; group.order()];
        for &e in &elements {
            member[e] = true;
        }
        Self { group, elements, member }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let n = group.order();
        let mut member = vec![false; n];
        member[group.identity()] = true;
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = group.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements = (0..n).filter(|&i| member[i]).collect();
        Self { group: Arc::clone(group), elements, member }
    }

    /// Checks closure and builds the subgroup in canonical form.
    pub fn from_elements(group: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Self> {
        let mut els: Vec<usize> = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.iter().any(|&e| e >= group.order()) {
            return Err(Error::InvalidGroup("subgroup element out of range".into()));
        }
        let sub = Self::from_sorted(Arc::clone(group), els);
        if !sub.contains(group.identity()) {
            return Err(Error::InvalidGroup("subset does not contain the identity".into()));
        }
        for &a in &sub.elements {
            if !sub.contains(group.inv(a)) {
                return Err(Error::InvalidGroup(format!("subset is not closed under inverse ({a})")));
            }
            for &b in &sub.elements {
                if !sub.contains(group.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!("subset is not closed: {a}*{b}")));
                }
            }
        }
        Ok(sub)
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted(Arc::clone(group), (0..group.order()).collect())
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted(Arc::clone(group), vec![group.identity()])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.member.get(g).copied().unwrap_or(false)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let els = self.elements.iter().copied().filter(|&e| other.contains(e)).collect();
        Self::from_sorted(Arc::clone(&self.group), els)
    }

    /// `ᵍH = g H g⁻¹`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut els: Vec<usize> = self.elements.iter().map(|&h| self.group.conj(g, h)).collect();
        els.sort_unstable();
        Self::from_sorted(Arc::clone(&self.group), els)
    }

    /// `Hˣ = x⁻¹ H x`.
    pub fn conjugate_inv(&self, x: usize) -> Subgroup {
        self.conjugate(self.group.inv(x))
    }

    /// Identity first, then ascending indices.
    pub fn canonical_order(&self) -> impl Iterator<Item = usize> + '_ {
        let e = self.group.identity();
        std::iter::once(e).chain(self.elements.iter().copied().filter(move |&x| x != e))
    }

    /// Position of `g` in the sorted element list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        other.elements.iter().all(|&g| self.conjugate(g) == *self)
    }

    /// Human readable element list.
    pub fn describe(&self) -> String {
        let labels: Vec<&str> = self.elements.iter().map(|&e| self.group.element_label(e)).collect();
        format!("{{{}}}", labels.join(", "))
    }
}

/// All subgroups of `group`, sorted by `(order, elements)`.
pub fn enumerate_subgroups(group: &Arc<FiniteGroup>, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::GroupTooLarge { order: group.order(), bound });
    }
    let cyclic: Vec<Subgroup> = {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..group.order() {
            let c = Subgroup::generated(group, &[g]);
            if seen.insert(c.elements.clone()) {
                out.push(c);
            }
        }
        out
    };
    let mut seen: HashSet<Vec<usize>> = cyclic.iter().map(|s| s.elements.clone()).collect();
    let mut all = cyclic.clone();
    let mut queue: VecDeque<usize> = (0..all.len()).collect();
    while let Some(idx) = queue.pop_front() {
        let current = all[idx].clone();
        for c in &cyclic {
            if c.is_subgroup_of(&current) {
                continue;
            }
            let mut gens = current.elements.clone();
            gens.extend_from_slice(&c.elements);
            let joined = Subgroup::generated(group, &gens);
            if seen.insert(joined.elements.clone()) {
                all.push(joined);
                queue.push_back(all.len() - 1);
            }
        }
    }
    all.sort();
    Ok(all)
}

fn require_sub(inner: &Subgroup, outer: &Subgroup, what: &str) -> Result<()> {
    if inner.is_subgroup_of(outer) {
        Ok(())
    } else {
        Err(Error::Containment(format!("{what}: {:?} is not contained in {:?}", inner.elements, outer.elements)))
    }
}

/// Right coset representatives `y₁ = e, …, yₙ` with `K = ⊔ H yᵢ`.
pub fn right_coset_reps(h: &Subgroup, k: &Subgroup) -> Result<Vec<usize>> {
    require_sub(h, k, "right cosets")?;
    let g = h.group();
    let mut claimed = vec![false; g.order()];
    let mut reps = Vec::new();
    for y in k.canonical_order() {
        if claimed[y] {
            continue;
        }
        reps.push(y);
        for &x in h.elements() {
            claimed[g.mul(x, y)] = true;
        }
    }
    Ok(reps)
}

/// Left coset representatives `z₁ = e, …, zₙ` with `K = ⊔ zⱼ H`.
pub fn left_coset_reps(h: &Subgroup, k: &Subgroup) -> Result<Vec<usize>> {
    require_sub(h, k, "left cosets")?;
    let g = h.group();
    let mut claimed = vec![false; g.order()];
    let mut reps = Vec::new();
    for z in k.canonical_order() {
        if claimed[z] {
            continue;
        }
        reps.push(z);
        for &x in h.elements() {
            claimed[g.mul(z, x)] = true;
        }
    }
    Ok(reps)
}

/// One double coset `J x K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCoset {
    pub rep: usize,
    pub size: usize,
}

/// The double cosets `J\H/K` as sorted member lists, in the order their
/// canonical representatives are discovered.
pub fn double_cosets(j: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<Vec<usize>>> {
    require_sub(j, h, "double cosets (J in H)")?;
    require_sub(k, h, "double cosets (K in H)")?;
    let g = h.group();
    let mut claimed = vec![false; g.order()];
    let mut out = Vec::new();
    for x in h.canonical_order() {
        if claimed[x] {
            continue;
        }
        let mut members = Vec::new();
        for &a in j.elements() {
            let ax = g.mul(a, x);
            for &b in k.elements() {
                let y = g.mul(ax, b);
                if !claimed[y] {
                    claimed[y] = true;
                    members.push(y);
                }
            }
        }
        // keep the discovering element first
        members.sort_unstable();
        let pos = members.iter().position(|&m| m == x).unwrap();
        members.swap(0, pos);
        members[1..].sort_unstable();
        out.push(members);
    }
    Ok(out)
}

/// Representatives of `J\H/K` together with the sizes `|J x K|`.
pub fn double_coset_reps(j: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<DoubleCoset>> {
    Ok(double_cosets(j, k, h)?
        .into_iter()
        .map(|m| DoubleCoset { rep: m[0], size: m.len() })
        .collect())
}

/// A second, deliberately different transversal of `J\H/K`: the largest
/// element index of every double coset.
pub fn alternate_double_coset_reps(j: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<usize>> {
    Ok(double_cosets(j, k, h)?
        .into_iter()
        .map(|m| *m.iter().max().unwrap())
        .collect())
}

/// `g H g⁻¹`.
pub fn conjugate_subgroup(g: usize, h: &Subgroup) -> Subgroup {
    h.conjugate(g)
}

/// The first `g` (identity first, then ascending) with `g H g⁻¹ ⊆ K`.
pub fn subconjugacy_witness(h: &Subgroup, k: &Subgroup) -> Option<usize> {
    if !k.order().is_multiple_of(h.order()) {
        return None;
    }
    let group = h.group();
    group
        .canonical_order()
        .find(|&g| h.elements().iter().all(|&x| k.contains(group.conj(g, x))))
}

/// Double coset representative `x` with the right coset representatives
/// `β` of `(Jˣ ∩ K)\K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedCoset {
    pub rep: usize,
    pub betas: Vec<usize>,
}

/// For each `x ∈ J\H/K`, right coset representatives of `(Jˣ ∩ K)\K`; the
/// products `x β` form a right transversal of `J\H`.
pub fn refined_transversal(j: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<RefinedCoset>> {
    let reps = double_coset_reps(j, k, h)?;
    reps.into_iter()
        .map(|dc| {
            let inner = j.conjugate_inv(dc.rep).intersection(k);
            Ok(RefinedCoset { rep: dc.rep, betas: right_coset_reps(&inner, k)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    fn el(g: &FiniteGroup, s: &str) -> usize {
        g.find_element(s).unwrap_or_else(|| panic!("no element {s}"))
    }

    #[test]
    fn small_groups_have_expected_orders() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(c2.table_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order(), 6);
        assert_eq!(FiniteGroup::dihedral(4).unwrap().order(), 8);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
        assert_eq!(v4.order(), 4);
        assert!((0..4).all(|x| v4.mul(x, x) == v4.identity()));
    }

    #[test]
    fn non_associative_table_names_triple() {
        // Latin square of order 3 with identity 0 that is not associative? Every
        // Latin square of order ≤ 4 with identity is a group except some of
        // order 5; use a loop of order 5.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_table(&rows, "loop") {
            Err(Error::NotAssociative(i, j, k)) => {
                let ij = rows[i][j];
                assert_ne!(rows[ij][k], rows[i][rows[j][k]]);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn non_latin_table_is_rejected() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table(&rows, "bad"), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn subgroup_counts() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        assert_eq!(enumerate_subgroups(&c2, 48).unwrap().len(), 2);
        let c6 = Arc::new(FiniteGroup::cyclic(6).unwrap());
        assert_eq!(enumerate_subgroups(&c6, 48).unwrap().len(), 4);
        let subs = enumerate_subgroups(&s3(), 48).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let d4 = Arc::new(FiniteGroup::dihedral(4).unwrap());
        assert_eq!(enumerate_subgroups(&d4, 48).unwrap().len(), 10);
        let s4 = Arc::new(FiniteGroup::symmetric(4).unwrap());
        assert_eq!(enumerate_subgroups(&s4, 48).unwrap().len(), 30);
    }

    #[test]
    fn subgroup_bound_is_enforced() {
        let s5 = Arc::new(FiniteGroup::symmetric(5).unwrap());
        assert!(matches!(
            enumerate_subgroups(&s5, DEFAULT_SUBGROUP_BOUND),
            Err(Error::GroupTooLarge { order: 120, bound: 48 })
        ));
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force_on_s3() {
        // every subset closed under multiplication containing e
        let g = s3();
        let mut brute = Vec::new();
        for mask in 0u32..(1 << 6) {
            let els: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
            if let Ok(s) = Subgroup::from_elements(&g, &els) {
                if s.elements() == els.as_slice() {
                    brute.push(s);
                }
            }
        }
        brute.sort();
        assert_eq!(brute, enumerate_subgroups(&g, 48).unwrap());
    }

    #[test]
    fn right_cosets() {
        let g = s3();
        let t = Subgroup::generated(&g, &[el(&g, "(1 2)")]);
        let whole = Subgroup::whole(&g);
        assert_eq!(right_coset_reps(&whole, &whole).unwrap(), vec![g.identity()]);
        let triv = Subgroup::trivial(&g);
        assert_eq!(right_coset_reps(&triv, &whole).unwrap(), vec![0, 1, 2, 3, 4, 5]);
        let reps = right_coset_reps(&t, &whole).unwrap();
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[0], g.identity());
        let mut cover: Vec<usize> = reps
            .iter()
            .flat_map(|&y| t.elements().iter().map(move |&x| (x, y)))
            .map(|(x, y)| g.mul(x, y))
            .collect();
        cover.sort_unstable();
        assert_eq!(cover, vec![0, 1, 2, 3, 4, 5]);
        assert!(right_coset_reps(&whole, &t).is_err());
    }

    #[test]
    fn double_cosets_in_s3() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let t = Subgroup::generated(&g, &[el(&g, "(1 2)")]);
        let dc = double_coset_reps(&t, &t, &whole).unwrap();
        let mut sizes: Vec<usize> = dc.iter().map(|d| d.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(double_coset_reps(&whole, &whole, &whole).unwrap(), vec![DoubleCoset { rep: 0, size: 6 }]);
        let triv = Subgroup::trivial(&g);
        assert_eq!(double_coset_reps(&triv, &t, &whole).unwrap().len(), 3);
    }

    #[test]
    fn conjugation_examples() {
        let g = s3();
        let t12 = Subgroup::generated(&g, &[el(&g, "(1 2)")]);
        let t23 = Subgroup::generated(&g, &[el(&g, "(2 3)")]);
        assert_eq!(conjugate_subgroup(el(&g, "(1 3)"), &t12), t23);
        assert_eq!(conjugate_subgroup(g.identity(), &t12), t12);
        assert_eq!(conjugate_subgroup(el(&g, "(1 2)"), &t12), t12);
    }

    #[test]
    fn subconjugacy() {
        let g = s3();
        let t12 = Subgroup::generated(&g, &[el(&g, "(1 2)")]);
        let t13 = Subgroup::generated(&g, &[el(&g, "(1 3)")]);
        let c3 = Subgroup::generated(&g, &[el(&g, "(1 2 3)")]);
        assert_eq!(subconjugacy_witness(&t12, &Subgroup::whole(&g)), Some(g.identity()));
        let w = subconjugacy_witness(&t12, &t13).unwrap();
        assert_eq!(t12.conjugate(w), t13);
        assert_eq!(subconjugacy_witness(&c3, &t12), None);
    }

    #[test]
    fn refined_transversal_examples() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let t = Subgroup::generated(&g, &[el(&g, "(1 2)")]);
        assert_eq!(
            refined_transversal(&whole, &whole, &whole).unwrap(),
            vec![RefinedCoset { rep: 0, betas: vec![0] }]
        );
        let rt = refined_transversal(&t, &t, &whole).unwrap();
        let counts: Vec<usize> = rt.iter().map(|r| r.betas.len()).collect();
        assert_eq!(counts.iter().sum::<usize>(), 3);
        assert!(rt.iter().all(|r| r.betas[0] == g.identity()));
        let triv = Subgroup::trivial(&g);
        let rt = refined_transversal(&triv, &whole, &whole).unwrap();
        assert_eq!(rt.len(), 1);
        assert_eq!(rt[0].betas, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn cycle_parsing() {
        let g = s3();
        assert_eq!(g.find_element("(12)"), g.find_element("(1 2)"));
        assert_eq!(g.find_element("()"), Some(g.identity()));
        assert_eq!(g.find_element("(1 2 3)"), g.find_element("(2 3 1)"));
        // (1 2)(2 3): apply (2 3) first: 1->1->2, 2->3->3, 3->2->1 => (1 2 3)
        assert_eq!(g.find_element("(1 2)(2 3)"), g.find_element("(1 2 3)"));
        let a = g.find_element("(1 2)").unwrap();
        let b = g.find_element("(2 3)").unwrap();
        assert_eq!(g.mul(a, b), g.find_element("(1 2 3)").unwrap());
    }

    #[test]
    fn relabelled_group_keeps_double_coset_sizes() {
        let g = s3();
        let perm = vec![5, 3, 1, 0, 2, 4];
        let g2 = Arc::new(g.relabel(&perm).unwrap());
        let subs = enumerate_subgroups(&g, 48).unwrap();
        for j in &subs {
            for k in &subs {
                let map = |s: &Subgroup| {
                    Subgroup::from_elements(&g2, &s.elements().iter().map(|&e| perm[e]).collect::<Vec<_>>()).unwrap()
                };
                let whole = Subgroup::whole(&g);
                let mut a: Vec<usize> = double_coset_reps(j, k, &whole).unwrap().iter().map(|d| d.size).collect();
                let mut b: Vec<usize> = double_coset_reps(&map(j), &map(k), &Subgroup::whole(&g2))
                    .unwrap()
                    .iter()
                    .map(|d| d.size)
                    .collect();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b);
            }
        }
    }
}
