//! Sequential colimit of `M → M → …` along right multiplication by `m₀`,
//! at the level of elements.
//!
//! A point of the colimit is a class of pairs `(x, n)` (element `x` at level
//! `n`) under `(x, n) ~ (x•m₀, n + 1)`. Two pairs agree iff
//! `x•m₀^(k+m) = y•m₀^(k+n)` for some `k`; since the images of
//! multiplication by `m₀` stabilize within `|M|` steps, `k ≤ 2|M|` suffices.
//! The colimit carries `[(a, n)] + [(b, m)] = [(a•b, n + m)]`.

use crate::error::Result;
use crate::monoid::{FiniteMonoid, UnionFind};

/// The colimit, materialized as a finite monoid.
#[derive(Debug, Clone)]
pub struct TelescopeColimit {
    pub carrier: FiniteMonoid,
    pub m0: usize,
    /// Every class is represented at this level.
    pub base_level: u64,
    /// Class of `(x, base_level)` for each `x`.
    base_class: Vec<usize>,
    /// `⋂ₖ image(x ↦ x•m₀ᵏ)`, ascending.
    pub eventual_image: Vec<usize>,
    monoid: FiniteMonoid,
}

impl TelescopeColimit {
    fn bound(&self) -> u64 {
        2 * self.monoid.len() as u64
    }

    /// Whether `(x, n)` and `(y, m)` name the same point.
    pub fn same_point(&self, (x, n): (usize, u64), (y, m): (usize, u64)) -> bool {
        pairs_agree(&self.monoid, self.m0, (x, n), (y, m), self.bound())
    }

    /// Carrier element represented by `(x, level)`.
    pub fn class_of(&self, x: usize, level: u64) -> usize {
        locate(&self.monoid, self.m0, self.base_level, &self.base_class, x, level)
    }

    /// The structure map from level `n` into the colimit.
    pub fn level_map(&self, level: u64) -> Vec<usize> {
        (0..self.monoid.len()).map(|x| self.class_of(x, level)).collect()
    }
}

fn locate(m: &FiniteMonoid, m0: usize, base_level: u64, base_class: &[usize], x: usize, level: u64) -> usize {
    let bound = 2 * m.len() as u64;
    let target = (0..m.len())
        .find(|&y| pairs_agree(m, m0, (y, base_level), (x, level), bound))
        .expect("every point is represented at the base level");
    base_class[target]
}

fn pairs_agree(m: &FiniteMonoid, m0: usize, (x, n): (usize, u64), (y, l): (usize, u64), bound: u64) -> bool {
    (0..=bound).any(|k| m.op(x, m.power(m0, k + l)) == m.op(y, m.power(m0, k + n)))
}

pub fn telescope_pi0(m: &FiniteMonoid, m0: usize) -> Result<TelescopeColimit> {
    m.require_commutative()?;
    let size = m.len();
    let base_level = size as u64;
    let bound = 2 * size as u64;
    let mut uf = UnionFind::new(size);
    for x in 0..size {
        for y in x + 1..size {
            if pairs_agree(m, m0, (x, base_level), (y, base_level), bound) {
                uf.union(x, y);
            }
        }
    }
    let (base_class, reps) = uf.classes();

    let mut image: Vec<usize> = (0..size).collect();
    for _ in 0..size {
        let mut next: Vec<usize> = image.iter().map(|&x| m.op(x, m0)).collect();
        next.sort_unstable();
        next.dedup();
        image = next;
    }

    let class_of = |x: usize, level: u64| locate(m, m0, base_level, &base_class, x, level);
    let names = reps.iter().map(|&r| format!("[{}]", m.name(r))).collect();
    // representatives sit at the base level, so products land at twice that
    let table = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| class_of(m.op(a, b), 2 * base_level)).collect())
        .collect();
    let identity = class_of(m.identity(), 0);
    let carrier = FiniteMonoid::with_limit(names, table, identity, usize::MAX)?;
    Ok(TelescopeColimit {
        carrier,
        m0,
        base_level,
        base_class,
        eventual_image: image,
        monoid: m.clone(),
    })
}

/// Whether the colimit carrier is a group.
pub fn telescope_group_check(m: &FiniteMonoid, m0: usize) -> Result<bool> {
    Ok(telescope_pi0(m, m0)?.carrier.is_group())
}
