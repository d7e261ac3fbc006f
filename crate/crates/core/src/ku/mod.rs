//! Elementary ku-modules: countable wedges of `Σⁱ ku` and `Σⁱ (ku/n)`.
//!
//! Everything here is bookkeeping on summands. Homotopy groups, the Bott map,
//! smash products over ku and free-product pushouts all act summand by
//! summand, so a module is just a multiset of summands with multiplicities in
//! ℕ ∪ {ω}.
//!
//! Per summand, in degree `m`:
//!
//! | summand      | `π_m`                       | Bott cokernel   |
//! |--------------|-----------------------------|-----------------|
//! | `Σⁱ ku`      | `ℤ` if `m ≥ i`, `m − i` even | `ℤ` iff `m = i`  |
//! | `Σⁱ (ku/n)`  | `ℤ/n` likewise               | `ℤ/n` iff `m = i`|

mod expr;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::FgAbelianGroup;

pub use expr::parse_module;

/// A natural number or ω (countably infinite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Omega,
}

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);
    pub const ONE: ExtendedNat = ExtendedNat::Finite(1);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Removes one copy; `ω − 1 = ω`. Panics on zero.
    pub fn pred(self) -> Self {
        match self {
            ExtendedNat::Finite(0) => panic!("predecessor of zero"),
            ExtendedNat::Finite(k) => ExtendedNat::Finite(k - 1),
            ExtendedNat::Omega => ExtendedNat::Omega,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(k: u64) -> Self {
        ExtendedNat::Finite(k)
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => {
                ExtendedNat::Finite(a.checked_add(b).expect("multiplicity overflow"))
            }
            _ => ExtendedNat::Omega,
        }
    }
}

impl Mul for ExtendedNat {
    type Output = ExtendedNat;
    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedNat::Finite(0), _) | (_, ExtendedNat::Finite(0)) => ExtendedNat::ZERO,
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => {
                ExtendedNat::Finite(a.checked_mul(b).expect("multiplicity overflow"))
            }
            _ => ExtendedNat::Omega,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(k) => write!(f, "{k}"),
            ExtendedNat::Omega => f.write_str("inf"),
        }
    }
}

/// `ku` itself or the mod-`n` cofiber `ku/n` (`n ≥ 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandKind {
    Free,
    Torsion(u64),
}

/// `Σ^suspension` of a kind. Ordered by (suspension, Free before Torsion, n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KuSummand {
    pub suspension: u32,
    pub kind: SummandKind,
}

impl KuSummand {
    pub fn free(suspension: u32) -> Self {
        KuSummand { suspension, kind: SummandKind::Free }
    }

    pub fn torsion(suspension: u32, n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadTorsion(n));
        }
        Ok(KuSummand { suspension, kind: SummandKind::Torsion(n) })
    }

    /// Whether this summand contributes to `π_m`.
    fn hits(self, m: i64) -> bool {
        let i = i64::from(self.suspension);
        m >= i && (m - i) % 2 == 0
    }
}

impl fmt::Display for KuSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atom = match self.kind {
            SummandKind::Free => "ku".to_string(),
            SummandKind::Torsion(n) => format!("ku/{n}"),
        };
        match self.suspension {
            0 => f.write_str(&atom),
            1 => write!(f, "S({atom})"),
            i => write!(f, "S^{i}({atom})"),
        }
    }
}

/// Canonical wedge of summands with nonzero multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementaryKuModule {
    summands: BTreeMap<KuSummand, ExtendedNat>,
}

impl ElementaryKuModule {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn ku() -> Self {
        Self::single(KuSummand::free(0), ExtendedNat::ONE)
    }

    /// `ku/n`; `ku/1` is contractible and gives the zero module.
    pub fn ku_mod(n: u64) -> Result<Self> {
        match n {
            0 => Err(Error::BadTorsion(0)),
            1 => Ok(Self::zero()),
            _ => Ok(Self::single(KuSummand::torsion(0, n)?, ExtendedNat::ONE)),
        }
    }

    pub fn single(summand: KuSummand, multiplicity: ExtendedNat) -> Self {
        let mut m = Self::zero();
        m.insert(summand, multiplicity);
        m
    }

    pub fn from_summands(items: impl IntoIterator<Item = (KuSummand, ExtendedNat)>) -> Self {
        let mut m = Self::zero();
        for (s, k) in items {
            m.insert(s, k);
        }
        m
    }

    fn insert(&mut self, summand: KuSummand, multiplicity: ExtendedNat) {
        if multiplicity.is_zero() {
            return;
        }
        let slot = self.summands.entry(summand).or_insert(ExtendedNat::ZERO);
        *slot = *slot + multiplicity;
    }

    /// Summands in canonical order.
    pub fn summands(&self) -> impl Iterator<Item = (KuSummand, ExtendedNat)> + '_ {
        self.summands.iter().map(|(s, k)| (*s, *k))
    }

    pub fn multiplicity(&self, summand: KuSummand) -> ExtendedNat {
        self.summands.get(&summand).copied().unwrap_or(ExtendedNat::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn suspend(&self, by: u32) -> Self {
        Self::from_summands(
            self.summands()
                .map(|(s, k)| (KuSummand { suspension: s.suspension + by, ..s }, k)),
        )
    }

    pub fn wedge(&self, other: &Self) -> Self {
        Self::from_summands(self.summands().chain(other.summands()))
    }

    pub fn scale(&self, by: ExtendedNat) -> Self {
        Self::from_summands(self.summands().map(|(s, k)| (s, k * by)))
    }

    /// Largest suspension of a summand with torsion kind, if any.
    pub fn max_torsion_suspension(&self) -> Option<u32> {
        self.summands()
            .filter(|(s, _)| s.kind != SummandKind::Free)
            .map(|(s, _)| s.suspension)
            .max()
    }

    pub fn max_free_suspension(&self) -> Option<u32> {
        self.summands()
            .filter(|(s, _)| s.kind == SummandKind::Free)
            .map(|(s, _)| s.suspension)
            .max()
    }

    fn without_one_unit(&self) -> Result<Self> {
        let unit = KuSummand::free(0);
        let k = self.multiplicity(unit);
        if k.is_zero() {
            return Err(Error::NoUnitSummand);
        }
        let mut rest = self.clone();
        rest.summands.remove(&unit);
        rest.insert(unit, k.pred());
        Ok(rest)
    }
}

impl fmt::Display for ElementaryKuModule {
    /// `8*ku + S^2(ku)`; the zero module prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands()
            .map(|(s, k)| match k {
                ExtendedNat::Finite(1) => s.to_string(),
                _ => format!("{k}*{s}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl std::str::FromStr for ElementaryKuModule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_module(s)
    }
}

/// One graded piece: free rank plus torsion `ℤ/n` counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomotopyGroupData {
    pub rank: ExtendedNat,
    pub torsion: BTreeMap<u64, ExtendedNat>,
}

impl Default for ExtendedNat {
    fn default() -> Self {
        ExtendedNat::ZERO
    }
}

impl HomotopyGroupData {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.rank.is_zero() && self.torsion.is_empty()
    }

    fn add_summand(&mut self, kind: SummandKind, k: ExtendedNat) {
        if k.is_zero() {
            return;
        }
        match kind {
            SummandKind::Free => self.rank = self.rank + k,
            SummandKind::Torsion(n) => {
                let slot = self.torsion.entry(n).or_insert(ExtendedNat::ZERO);
                *slot = *slot + k;
            }
        }
    }

    /// Slot-wise sum.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.rank = out.rank + other.rank;
        for (&n, &k) in &other.torsion {
            out.add_summand(SummandKind::Torsion(n), k);
        }
        out
    }

    /// The finitely generated group, when every multiplicity is finite.
    pub fn to_group(&self) -> Option<FgAbelianGroup> {
        let ExtendedNat::Finite(rank) = self.rank else { return None };
        let mut orders = Vec::new();
        for (&n, &k) in &self.torsion {
            let ExtendedNat::Finite(k) = k else { return None };
            orders.extend(std::iter::repeat_n(BigInt::from(n), k as usize));
        }
        let torsion = FgAbelianGroup::from_cyclic_orders(&orders);
        Some(FgAbelianGroup::free(rank as usize).direct_sum(&torsion))
    }
}

impl fmt::Display for HomotopyGroupData {
    /// Finite data prints as the canonical group (`Z^9`, `Z/2 + Z/4`, `0`);
    /// infinite multiplicities print as `Z^inf` and `(Z/n)^inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = self.to_group() {
            return write!(f, "{g}");
        }
        let mut parts = Vec::new();
        match self.rank {
            ExtendedNat::Finite(0) => {}
            ExtendedNat::Finite(1) => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let finite: Vec<BigInt> = self
            .torsion
            .iter()
            .filter_map(|(&n, &k)| match k {
                ExtendedNat::Finite(k) => Some(std::iter::repeat_n(BigInt::from(n), k as usize)),
                ExtendedNat::Omega => None,
            })
            .flatten()
            .collect();
        let chain = FgAbelianGroup::from_cyclic_orders(&finite);
        parts.extend(chain.invariant_factors().iter().map(|d| format!("Z/{d}")));
        for (&n, &k) in &self.torsion {
            if k == ExtendedNat::Omega {
                parts.push(format!("(Z/{n})^inf"));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Homotopy group `π_m`; zero for `m < 0`.
pub fn pi(x: &ElementaryKuModule, m: i64) -> HomotopyGroupData {
    let mut out = HomotopyGroupData::zero();
    for (s, k) in x.summands() {
        if s.hits(m) {
            out.add_summand(s.kind, k);
        }
    }
    out
}

/// Image of the Bott map `π_{m−2} → π_m`.
pub fn bott_image(x: &ElementaryKuModule, m: i64) -> HomotopyGroupData {
    let mut out = HomotopyGroupData::zero();
    for (s, k) in x.summands() {
        // nonzero source, and Bott is an isomorphism onto π_m of the summand
        if s.hits(m - 2) {
            out.add_summand(s.kind, k);
        }
    }
    out
}

/// Cokernel of Bott `π_{m−2} → π_m`: each summand contributes only in its
/// bottom degree.
pub fn bott_cokernel(x: &ElementaryKuModule, m: i64) -> HomotopyGroupData {
    let mut out = HomotopyGroupData::zero();
    for (s, k) in x.summands() {
        if i64::from(s.suspension) == m {
            out.add_summand(s.kind, k);
        }
    }
    out
}

/// Injectivity of Bott `π_{m−2} → π_m`, checked summand by summand: the
/// source group of each summand must match the part of the target it hits.
pub fn bott_injective(x: &ElementaryKuModule, m: i64) -> bool {
    x.summands().all(|(s, k)| {
        let one = ElementaryKuModule::single(s, k);
        let source = pi(&one, m - 2);
        let image = bott_image(&one, m);
        // on a single summand the image is all of π_m or zero
        source == image && (image.is_zero() || image == pi(&one, m))
    })
}

/// Largest suspension among the summands.
pub fn suspension_degree(x: &ElementaryKuModule) -> Result<u32> {
    x.summands().map(|(s, _)| s.suspension).max().ok_or(Error::ZeroModule)
}

fn smash_kinds(a: SummandKind, b: SummandKind) -> ElementaryKuModule {
    use SummandKind::*;
    match (a, b) {
        (Free, Free) => ElementaryKuModule::ku(),
        (Free, Torsion(n)) | (Torsion(n), Free) => {
            ElementaryKuModule::single(KuSummand { suspension: 0, kind: Torsion(n) }, ExtendedNat::ONE)
        }
        (Torsion(n), Torsion(m)) => {
            let g = n.gcd(&m);
            if g == 1 {
                return ElementaryKuModule::zero();
            }
            let base = KuSummand { suspension: 0, kind: Torsion(g) };
            ElementaryKuModule::from_summands([
                (base, ExtendedNat::ONE),
                (KuSummand { suspension: 1, ..base }, ExtendedNat::ONE),
            ])
        }
    }
}

/// Smash product over ku, extended bilinearly over wedges.
pub fn smash(x: &ElementaryKuModule, y: &ElementaryKuModule) -> ElementaryKuModule {
    let mut out = ElementaryKuModule::zero();
    for (s, k) in x.summands() {
        for (t, l) in y.summands() {
            let piece = smash_kinds(s.kind, t.kind)
                .suspend(s.suspension + t.suspension)
                .scale(k * l);
            out = out.wedge(&piece);
        }
    }
    out
}

/// Pushout of `X ← ku → Y` along split unit summands: `ku ∨ X′ ∨ Y′`.
pub fn free_product(x: &ElementaryKuModule, y: &ElementaryKuModule) -> Result<ElementaryKuModule> {
    let rest_x = x.without_one_unit()?;
    let rest_y = y.without_one_unit()?;
    Ok(ElementaryKuModule::ku().wedge(&rest_x).wedge(&rest_y))
}

/// A wedge of `r` copies of ku, one per irreducible representation.
pub fn kdef_finite_group(irreducibles: u64) -> Result<ElementaryKuModule> {
    if irreducibles == 0 {
        return Err(Error::NoIrreducibles);
    }
    Ok(ElementaryKuModule::single(KuSummand::free(0), irreducibles.into()))
}

/// `π_m` with the `π_m ku` summand split off (one `ℤ` in even degrees).
pub fn deformation_rho(x: &ElementaryKuModule, m: i64) -> Result<HomotopyGroupData> {
    if m < 1 {
        return Err(Error::NonPositiveDegree(m));
    }
    x.without_one_unit()?;
    let mut out = pi(x, m);
    if m % 2 == 0 {
        out.rank = out.rank.pred();
    }
    Ok(out)
}

/// Modules of groups whose deformation K-theory is known to be elementary.
pub mod examples {
    use super::*;

    /// `ℤ² ⋊ ℤ/4`: `(⋁₈ ku) ∨ Σ²ku`.
    pub fn crystallographic_p4() -> ElementaryKuModule {
        ElementaryKuModule::from_summands([
            (KuSummand::free(0), 8.into()),
            (KuSummand::free(2), 1.into()),
        ])
    }

    /// Integral Heisenberg group: `(⋁^∞ ku) ∨ (⋁^∞ Σku)`.
    pub fn heisenberg() -> ElementaryKuModule {
        ElementaryKuModule::from_summands([
            (KuSummand::free(0), ExtendedNat::Omega),
            (KuSummand::free(1), ExtendedNat::Omega),
        ])
    }

    /// Non-orientable surface group: `ku ∨ (⋁ᵢ Σku) ∨ ku/2`.
    pub fn nonorientable_surface(circles: u64) -> ElementaryKuModule {
        ElementaryKuModule::from_summands([
            (KuSummand::free(0), 1.into()),
            (KuSummand::free(1), circles.into()),
            (KuSummand { suspension: 0, kind: SummandKind::Torsion(2) }, 1.into()),
        ])
    }
}
