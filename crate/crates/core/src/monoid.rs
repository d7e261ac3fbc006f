//! Finite monoids given by explicit multiplication tables.
//!
//! Elements are addressed by index `0..n` internally and by name at the
//! boundary (JSON files, reports). All algorithms are exhaustive, so the
//! size of a monoid is capped (see [`DEFAULT_MAX_SIZE`]).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of elements accepted by [`FiniteMonoid::new`].
pub const DEFAULT_MAX_SIZE: usize = 64;

/// A finite monoid: names, a row-major multiplication table and an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

/// On-disk form: `{"elements": [...], "identity": "...", "table": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub elements: Vec<String>,
    pub identity: String,
    pub table: Vec<Vec<String>>,
}

impl FiniteMonoid {
    /// Validates a table against the monoid axioms, using the default size cap.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        Self::with_limit(names, table, identity, DEFAULT_MAX_SIZE)
    }

    pub fn with_limit(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
        limit: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > limit {
            return Err(Error::TooLarge { size: n, limit });
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(Error::BadName(name.clone()));
            }
        }
        if table.len() != n {
            return Err(Error::Shape {
                what: "table rows".into(),
                expected: n,
                found: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape {
                    what: format!("table row {i}"),
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::BadIndex { row: i, col: j, value: v });
                }
                flat.push(v);
            }
        }
        if identity >= n {
            return Err(Error::NoIdentity { identity, witness: identity });
        }
        let m = FiniteMonoid { names, table: flat, identity };
        if let Some(w) = (0..n).find(|&i| m.op(identity, i) != i || m.op(i, identity) != i) {
            return Err(Error::NoIdentity { identity, witness: w });
        }
        if let Some((a, b, c)) = m.associativity_violation() {
            return Err(Error::NotAssociative(a, b, c));
        }
        Ok(m)
    }

    /// Builds a monoid from a closure; names default to the indices.
    pub fn from_fn(n: usize, identity: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(names, table, identity)
    }

    /// The cyclic group ℤ/n written additively.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn(n, 0, |a, b| (a + b) % n).expect("cyclic group table is valid")
    }

    /// The chain `{0, .., n-1}` with `a•b = min(a + b, n - 1)`.
    pub fn saturating(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn(n, 0, |a, b| (a + b).min(n - 1)).expect("saturating chain table is valid")
    }

    /// The cyclic monoid with the given index and period: `a•b = a + b`
    /// folded back into `{index, .., index + period - 1}` past the index.
    pub fn cyclic_monoid(index: usize, period: usize) -> Self {
        assert!(period >= 1);
        let n = index + period;
        Self::from_fn(n, 0, |a, b| {
            let s = a + b;
            if s < index {
                s
            } else {
                index + (s - index) % period
            }
        })
        .expect("cyclic monoid table is valid")
    }

    /// Direct product with pairs named `(a,b)`.
    pub fn product(&self, other: &FiniteMonoid) -> Result<Self> {
        let (n, k) = (self.len(), other.len());
        let names = (0..n * k)
            .map(|p| format!("({},{})", self.names[p / k], other.names[p % k]))
            .collect();
        let table = (0..n * k)
            .map(|p| {
                (0..n * k)
                    .map(|q| self.op(p / k, q / k) * k + other.op(p % k, q % k))
                    .collect()
            })
            .collect();
        Self::new(names, table, self.identity * k + other.identity)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.names.len() + b]
    }

    /// Table rows as index vectors.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.len()).map(|r| r.to_vec()).collect()
    }

    /// First triple (in lexicographic order) where associativity fails.
    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub(crate) fn require_commutative(&self) -> Result<()> {
        if self.is_commutative() {
            Ok(())
        } else {
            Err(Error::NotCommutative)
        }
    }

    /// `x^k`, with `x^0` the identity.
    pub fn power(&self, x: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        acc
    }

    /// Two-sided inverse of `x`, if any.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        (0..self.len()).find(|&y| self.op(x, y) == self.identity && self.op(y, x) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|x| self.inverse(x).is_some())
    }

    /// Smallest submonoid containing `generators`.
    pub fn submonoid_generated(&self, generators: &[usize]) -> Submonoid {
        let n = self.len();
        let mut member = vec![false; n];
        member[self.identity] = true;
        let mut frontier = vec![self.identity];
        for &g in generators {
            assert!(g < n, "generator {g} out of range");
            if !member[g] {
                member[g] = true;
                frontier.push(g);
            }
        }
        // Closing under right multiplication by generators reaches every word.
        while let Some(x) = frontier.pop() {
            for &g in generators {
                for y in [self.op(x, g), self.op(g, x)] {
                    if !member[y] {
                        member[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        Submonoid { parent_len: n, member }
    }

    /// True iff every `x` can be multiplied into `sub` on the right.
    pub fn is_cofinal(&self, sub: &Submonoid) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).any(|y| sub.contains(self.op(x, y))))
    }

    /// Whether the submonoid generated by `m0` is cofinal.
    pub fn is_stably_group_like(&self, m0: usize) -> bool {
        self.is_cofinal(&self.submonoid_generated(&[m0]))
    }

    /// Number of orbits of the conjugation action `g ↦ x g x⁻¹`.
    pub fn conjugacy_class_count(&self) -> Result<usize> {
        let n = self.len();
        let inverses: Vec<usize> = (0..n)
            .map(|x| self.inverse(x).ok_or(Error::NotAGroup))
            .collect::<Result<_>>()?;
        let mut seen = vec![false; n];
        let mut classes = 0;
        for g in 0..n {
            if seen[g] {
                continue;
            }
            classes += 1;
            for x in 0..n {
                seen[self.op(self.op(x, g), inverses[x])] = true;
            }
        }
        Ok(classes)
    }

    /// Quotient by the smallest congruence containing `pairs`.
    ///
    /// Classes are named `[x]` after their smallest member.
    pub fn quotient_by_congruence(&self, pairs: &[(usize, usize)]) -> (FiniteMonoid, Vec<usize>) {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    if uf.find(a) != uf.find(b) {
                        continue;
                    }
                    for c in 0..n {
                        changed |= uf.union(self.op(a, c), self.op(b, c));
                        changed |= uf.union(self.op(c, a), self.op(c, b));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let (class_of, reps) = uf.classes();
        let quotient = self
            .induced_on_classes(&class_of, &reps)
            .expect("quotient by a congruence is a monoid");
        (quotient, class_of)
    }

    /// Induced operation on a partition, given the class of each element and
    /// a representative of each class. Fails if the result is not a monoid
    /// (e.g. the partition is not a congruence).
    pub(crate) fn induced_on_classes(&self, class_of: &[usize], reps: &[usize]) -> Result<FiniteMonoid> {
        let names = reps.iter().map(|&r| format!("[{}]", self.names[r])).collect();
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| class_of[self.op(a, b)]).collect())
            .collect();
        let q = FiniteMonoid::new(names, table, class_of[self.identity])?;
        for a in 0..self.len() {
            for b in 0..self.len() {
                if class_of[self.op(a, b)] != q.op(class_of[a], class_of[b]) {
                    return Err(Error::NotHomomorphism(format!(
                        "partition is not a congruence at ({}, {})",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        Ok(q)
    }

    pub fn from_file(file: &MonoidFile) -> Result<Self> {
        let index: HashMap<&str, usize> = file
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownElement(s.to_string()));
        let table = file
            .table
            .iter()
            .map(|row| row.iter().map(|s| lookup(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let identity = lookup(&file.identity)?;
        Self::new(file.elements.clone(), table, identity)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MonoidFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> MonoidFile {
        MonoidFile {
            elements: self.names.clone(),
            identity: self.names[self.identity].clone(),
            table: self
                .table
                .chunks(self.len())
                .map(|r| r.iter().map(|&v| self.names[v].clone()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("monoid file serializes")
    }

    /// Whether `map` (indexed by elements of `self`) is a monoid homomorphism into `target`.
    pub fn homomorphism_violation(&self, target: &FiniteMonoid, map: &[usize]) -> Option<String> {
        if map.len() != self.len() {
            return Some(format!("map has {} entries for {} elements", map.len(), self.len()));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
            return Some(format!("image index {bad} is out of range"));
        }
        if map[self.identity] != target.identity {
            return Some("identity is not preserved".into());
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if map[self.op(a, b)] != target.op(map[a], map[b]) {
                    return Some(format!("f({0}•{1}) != f({0})•f({1})", self.names[a], self.names[b]));
                }
            }
        }
        None
    }
}

impl fmt::Display for FiniteMonoid {
    /// Multiplication table, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.names.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        write!(f, "{:>width$} |", "•")?;
        for name in &self.names {
            write!(f, " {name:>width$}")?;
        }
        writeln!(f)?;
        for (i, row) in self.table.chunks(self.len()).enumerate() {
            write!(f, "{:>width$} |", self.names[i])?;
            for &v in row {
                write!(f, " {:>width$}", self.names[v])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A subset of a monoid containing the identity and closed under the operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submonoid {
    parent_len: usize,
    member: Vec<bool>,
}

impl Submonoid {
    /// Checks closure and the identity against `parent`.
    pub fn new(parent: &FiniteMonoid, members: &[usize]) -> Result<Self> {
        let n = parent.len();
        let mut member = vec![false; n];
        for &m in members {
            if m >= n {
                return Err(Error::NotSubmonoid(format!("index {m} out of range")));
            }
            member[m] = true;
        }
        if !member[parent.identity()] {
            return Err(Error::NotSubmonoid("identity missing".into()));
        }
        for a in (0..n).filter(|&a| member[a]) {
            for b in (0..n).filter(|&b| member[b]) {
                if !member[parent.op(a, b)] {
                    return Err(Error::NotSubmonoid(format!(
                        "{}•{} = {} escapes",
                        parent.name(a),
                        parent.name(b),
                        parent.name(parent.op(a, b))
                    )));
                }
            }
        }
        Ok(Submonoid { parent_len: n, member })
    }

    pub fn from_names(parent: &FiniteMonoid, names: &[&str]) -> Result<Self> {
        let idx = names.iter().map(|s| parent.index_of(s)).collect::<Result<Vec<_>>>()?;
        Self::new(parent, &idx)
    }

    /// The whole monoid.
    pub fn full(parent: &FiniteMonoid) -> Self {
        Submonoid { parent_len: parent.len(), member: vec![true; parent.len()] }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.member.len()).filter(|&i| self.member[i]).collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Re-checks membership data against a (possibly different) parent.
    pub(crate) fn check_against(&self, parent: &FiniteMonoid) -> Result<()> {
        if self.parent_len != parent.len() {
            return Err(Error::NotSubmonoid(format!(
                "built for a monoid of size {}, used with size {}",
                self.parent_len,
                parent.len()
            )));
        }
        Submonoid::new(parent, &self.members()).map(|_| ())
    }
}

/// Plain union-find over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns true if the two classes were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Keep the smaller index as root so representatives are minimal.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    /// Class index of each element (classes numbered by smallest member)
    /// together with the smallest member of each class.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, Vec<usize>) {
        let n = self.parent.len();
        let mut reps = Vec::new();
        let mut root_class = HashMap::new();
        let class_of = (0..n)
            .map(|x| {
                let r = self.find(x);
                *root_class.entry(r).or_insert_with(|| {
                    reps.push(x);
                    reps.len() - 1
                })
            })
            .collect();
        (class_of, reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{quaternion_group, symmetric_group_3};

    fn z2_table() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn validates_z2_and_trivial() {
        let m = FiniteMonoid::new(names(2), z2_table(), 0).unwrap();
        assert_eq!(m.len(), 2);
        let t = FiniteMonoid::new(names(1), vec![vec![0]], 0).unwrap();
        assert!(t.is_group() && t.is_commutative());
    }

    #[test]
    fn reports_associativity_witness() {
        let table = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
        let err = FiniteMonoid::new(names(3), table.clone(), 0).unwrap_err();
        let Error::NotAssociative(a, b, c) = err else { panic!("expected NotAssociative, got {err:?}") };
        // the witness really violates associativity
        let op = |x: usize, y: usize| table[x][y];
        assert_ne!(op(op(a, b), c), op(a, op(b, c)));
        assert_eq!((a, b, c), (1, 1, 1));
    }

    #[test]
    fn rejects_bad_index_and_identity() {
        let err = FiniteMonoid::new(names(2), vec![vec![0, 1], vec![1, 2]], 0).unwrap_err();
        assert_eq!(err, Error::BadIndex { row: 1, col: 1, value: 2 });
        let err = FiniteMonoid::new(names(2), z2_table(), 1).unwrap_err();
        assert_eq!(err.name(), "NoIdentity");
        let err = FiniteMonoid::new(vec!["a".into(), "a".into()], z2_table(), 0).unwrap_err();
        assert_eq!(err.name(), "BadName");
        let err = FiniteMonoid::with_limit(names(2), z2_table(), 0, 1).unwrap_err();
        assert_eq!(err.name(), "TooLarge");
    }

    #[test]
    fn commutativity() {
        assert!(FiniteMonoid::cyclic(4).is_commutative());
        assert!(!symmetric_group_3().is_commutative());
        assert!(FiniteMonoid::saturating(3).is_commutative());
    }

    #[test]
    fn powers() {
        assert_eq!(FiniteMonoid::cyclic(3).power(1, 3), 0);
        assert_eq!(FiniteMonoid::saturating(3).power(1, 5), 2);
        let s3 = symmetric_group_3();
        for x in 0..s3.len() {
            assert_eq!(s3.power(x, 0), s3.identity());
        }
        // agrees with naive iteration
        let m = FiniteMonoid::cyclic_monoid(2, 3);
        for x in 0..m.len() {
            let mut acc = m.identity();
            for k in 0..12 {
                assert_eq!(m.power(x, k), acc);
                acc = m.op(acc, x);
            }
        }
    }

    #[test]
    fn generated_submonoids() {
        let z6 = FiniteMonoid::cyclic(6);
        assert_eq!(z6.submonoid_generated(&[2]).members(), vec![0, 2, 4]);
        assert_eq!(z6.submonoid_generated(&[]).members(), vec![0]);
        let sat = FiniteMonoid::saturating(3);
        assert_eq!(sat.submonoid_generated(&[1]).members(), vec![0, 1, 2]);
    }

    #[test]
    fn cofinality_and_stability() {
        let z3 = FiniteMonoid::cyclic(3);
        let sat = FiniteMonoid::saturating(3);
        assert!(z3.is_cofinal(&Submonoid::new(&z3, &[0]).unwrap()));
        assert!(!sat.is_cofinal(&Submonoid::new(&sat, &[0]).unwrap()));
        assert!(sat.is_cofinal(&Submonoid::full(&sat)));
        for n in 1..8 {
            assert!(FiniteMonoid::cyclic(n).is_stably_group_like(1 % n));
        }
        assert!(sat.is_stably_group_like(2));
        assert!(!sat.is_stably_group_like(0));
    }

    #[test]
    fn groups_and_conjugacy() {
        assert!(FiniteMonoid::cyclic(4).is_group());
        assert!(!FiniteMonoid::saturating(3).is_group());
        assert_eq!(FiniteMonoid::cyclic(4).conjugacy_class_count().unwrap(), 4);
        assert_eq!(symmetric_group_3().conjugacy_class_count().unwrap(), 3);
        assert_eq!(quaternion_group().conjugacy_class_count().unwrap(), 5);
        assert_eq!(FiniteMonoid::saturating(3).conjugacy_class_count(), Err(Error::NotAGroup));
    }

    #[test]
    fn submonoid_validation() {
        let z4 = FiniteMonoid::cyclic(4);
        assert!(Submonoid::new(&z4, &[0, 2]).is_ok());
        assert_eq!(Submonoid::new(&z4, &[0, 1]).unwrap_err().name(), "NotSubmonoid");
        assert_eq!(Submonoid::new(&z4, &[2]).unwrap_err().name(), "NotSubmonoid");
    }

    #[test]
    fn json_round_trip() {
        let m = FiniteMonoid::cyclic(3).product(&FiniteMonoid::saturating(2)).unwrap();
        let back = FiniteMonoid::from_json(&m.to_json()).unwrap();
        assert_eq!(m, back);
        let err = FiniteMonoid::from_json(r#"{"elements":["a"],"identity":"b","table":[["a"]]}"#).unwrap_err();
        assert_eq!(err, Error::UnknownElement("b".into()));
    }

    #[test]
    fn congruence_quotient_of_z6() {
        let (q, class_of) = FiniteMonoid::cyclic(6).quotient_by_congruence(&[(0, 3)]);
        assert_eq!(q.len(), 3);
        assert_eq!(class_of[1], class_of[4]);
        assert!(q.is_group());
    }
}
