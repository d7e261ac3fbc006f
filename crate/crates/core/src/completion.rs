//! Group completion of finite commutative monoids and quotients by submonoids.
//!
//! Two independent completion routes live here:
//!
//! * [`gr_pairs`] builds the group of formal differences `(a, s)` directly as
//!   a multiplication table, then reads off its invariant factors by counting
//!   prime-power torsion. It is the brute-force reference for every other route.
//! * [`gr_presentation`] takes generators `x_a` for every element, relations
//!   `x_a + x_b = x_{a•b}` and `x_e = 0`, and reduces the relation matrix.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{
    abelian_group_coordinates, cokernel_with_coordinates, multiplication_relations,
    structure_of_finite_abelian_group, FgAbelianGroup, IntMatrix,
};
use crate::monoid::{FiniteMonoid, Submonoid, UnionFind};

/// A completed group together with the unit map `M → Gr(M)` in coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub group: FgAbelianGroup,
    /// `unit[x]` are the coordinates of the image of element `x`, free
    /// coordinates first, then one per invariant factor.
    pub unit: Vec<Vec<BigInt>>,
}

impl CompletionResult {
    /// Partition of the monoid induced by the unit: `kernel_classes()[x]` is
    /// the smallest element with the same image as `x`.
    pub fn kernel_classes(&self) -> Vec<usize> {
        (0..self.unit.len())
            .map(|x| (0..=x).find(|&y| self.unit[y] == self.unit[x]).unwrap())
            .collect()
    }

    /// Whether the unit respects the operation of `m`.
    pub fn unit_is_homomorphism(&self, m: &FiniteMonoid) -> bool {
        let zero = vec![BigInt::from(0); self.group.coordinate_len()];
        self.unit[m.identity()] == zero
            && (0..m.len()).all(|x| {
                (0..m.len()).all(|y| self.group.add_coords(&self.unit[x], &self.unit[y]) == self.unit[m.op(x, y)])
            })
    }
}

/// Group of formal differences: `(a, s) ~ (a′, s′)` iff `a•s′•c = a′•s•c` for some `c`.
pub fn gr_pairs(m: &FiniteMonoid) -> Result<CompletionResult> {
    m.require_commutative()?;
    let (group_table, class_of_pair) = pairs_group(m);
    let group = structure_of_finite_abelian_group(&group_table)?;
    let (coord_group, coords) = abelian_group_coordinates(&group_table)?;
    debug_assert_eq!(group, coord_group);
    let e = m.identity();
    let n = m.len();
    let unit = (0..n).map(|a| coords[class_of_pair[a * n + e]].clone()).collect();
    Ok(CompletionResult { group, unit })
}

/// Materializes `M × M / ~` as a table. Also returns the class of each pair,
/// with pair `(a, s)` stored at index `a * n + s`.
pub fn pairs_group(m: &FiniteMonoid) -> (FiniteMonoid, Vec<usize>) {
    let n = m.len();
    let mut uf = UnionFind::new(n * n);
    for a in 0..n {
        for s in 0..n {
            for a2 in 0..n {
                for s2 in 0..n {
                    let (p, q) = (a * n + s, a2 * n + s2);
                    if p >= q {
                        continue;
                    }
                    let left = m.op(a, s2);
                    let right = m.op(a2, s);
                    if (0..n).any(|c| m.op(left, c) == m.op(right, c)) {
                        uf.union(p, q);
                    }
                }
            }
        }
    }
    let (class_of, reps) = uf.classes();
    let names = reps
        .iter()
        .map(|&p| format!("{}-{}", m.name(p / n), m.name(p % n)))
        .collect();
    let table = reps
        .iter()
        .map(|&p| {
            reps.iter()
                .map(|&q| class_of[m.op(p / n, q / n) * n + m.op(p % n, q % n)])
                .collect()
        })
        .collect();
    let e = m.identity();
    let g = FiniteMonoid::with_limit(names, table, class_of[e * n + e], usize::MAX)
        .expect("pairs construction of a commutative monoid is a monoid");
    (g, class_of)
}

/// Cokernel of the relation matrix `x_a + x_b − x_{a•b}`, `x_e`.
pub fn gr_presentation(m: &FiniteMonoid) -> Result<CompletionResult> {
    m.require_commutative()?;
    let (group, unit) = cokernel_with_coordinates(&multiplication_relations(m));
    Ok(CompletionResult { group, unit })
}

/// `A / A′`: `a ~ a′` iff `a•b = a′•b′` for some `b, b′ ∈ A′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMonoid {
    /// The quotient with its induced operation; classes are named `[x]`.
    pub monoid: FiniteMonoid,
    /// Members of each class, ascending.
    pub classes: Vec<Vec<usize>>,
    /// Class index of each parent element (the projection `A → A/A′`).
    pub class_of: Vec<usize>,
}

impl QuotientMonoid {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn quotient_monoid(a: &FiniteMonoid, sub: &Submonoid) -> Result<QuotientMonoid> {
    a.require_commutative()?;
    sub.check_against(a)?;
    let n = a.len();
    let members = sub.members();
    let mut uf = UnionFind::new(n);
    let products: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut v: Vec<usize> = members.iter().map(|&b| a.op(x, b)).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            if products[x].iter().any(|p| products[y].binary_search(p).is_ok()) {
                uf.union(x, y);
            }
        }
    }
    // the seeded relation is already transitive for commutative A; the
    // union-find closes it regardless
    let (class_of, reps) = uf.classes();
    let monoid = a.induced_on_classes(&class_of, &reps)?;
    let mut classes = vec![Vec::new(); reps.len()];
    for (x, &c) in class_of.iter().enumerate() {
        classes[c].push(x);
    }
    Ok(QuotientMonoid { monoid, classes, class_of })
}

/// Whether every class has an inverse class.
pub fn is_quotient_group(q: &QuotientMonoid) -> bool {
    q.monoid.is_group()
}

/// `Gr(P)` modulo the image of `Gr(N)`.
pub fn rho(p: &FiniteMonoid, n: &Submonoid) -> Result<FgAbelianGroup> {
    Ok(rho_map(p, n)?.group)
}

/// [`rho`] together with the composite `P → Gr(P) → Gr(P)/Gr(N)` in coordinates.
pub fn rho_map(p: &FiniteMonoid, n: &Submonoid) -> Result<CompletionResult> {
    p.require_commutative()?;
    n.check_against(p)?;
    let base = multiplication_relations(p);
    let members = n.members();
    let mut a = IntMatrix::zeros(p.len(), base.cols() + members.len());
    for i in 0..p.len() {
        for j in 0..base.cols() {
            let v = base.get(i, j);
            if !v.is_zero() {
                a.set(i, j, v.clone());
            }
        }
    }
    // extra columns kill the generators coming from N
    for (k, &x) in members.iter().enumerate() {
        a.set(x, base.cols() + k, 1);
    }
    let (group, unit) = cokernel_with_coordinates(&a);
    Ok(CompletionResult { group, unit })
}

/// A map of finite monoids, given by the image of each source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMap {
    pub target: FiniteMonoid,
    pub images: Vec<usize>,
}

/// Checks that `f: A → P` killing `A′` factors through `A → A/A′`.
///
/// Returns `Ok(true)` when `f` is constant on every class (the factorization
/// exists, and is unique because the projection is surjective). Preconditions
/// are reported as errors.
pub fn universal_property_check(a: &FiniteMonoid, sub: &Submonoid, f: &MonoidMap) -> Result<bool> {
    if let Some(why) = a.homomorphism_violation(&f.target, &f.images) {
        return Err(Error::NotHomomorphism(why));
    }
    if let Some(x) = sub.members().into_iter().find(|&x| f.images[x] != f.target.identity()) {
        return Err(Error::SubmonoidNotKilled(x));
    }
    let q = quotient_monoid(a, sub)?;
    let constant = q
        .classes
        .iter()
        .all(|class| class.iter().all(|&x| f.images[x] == f.images[class[0]]));
    if !constant {
        return Ok(false);
    }
    let induced: Vec<usize> = q.classes.iter().map(|c| f.images[c[0]]).collect();
    // the factorization is itself a monoid map
    Ok(q.monoid.homomorphism_violation(&f.target, &induced).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::iso;

    fn idempotent_pair() -> FiniteMonoid {
        // {e, a | a•a = a}
        FiniteMonoid::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]], 0).unwrap()
    }

    #[test]
    fn pairs_examples() {
        for n in 1..8 {
            let r = gr_pairs(&FiniteMonoid::cyclic(n)).unwrap();
            assert_eq!(r.group, FgAbelianGroup::cyclic(n as i64));
            // unit is injective on a group
            let mut images = r.unit.clone();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), n);
        }
        assert!(gr_pairs(&FiniteMonoid::saturating(3)).unwrap().group.is_trivial());
        assert!(gr_pairs(&idempotent_pair()).unwrap().group.is_trivial());
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(gr_presentation(&FiniteMonoid::cyclic(2)).unwrap().group.to_string(), "Z/2");
        assert!(gr_presentation(&FiniteMonoid::saturating(3)).unwrap().group.is_trivial());
        assert!(gr_presentation(&FiniteMonoid::cyclic(1)).unwrap().group.is_trivial());
    }

    #[test]
    fn non_commutative_rejected() {
        let s3 = crate::corpus::symmetric_group_3();
        assert_eq!(gr_pairs(&s3).unwrap_err(), Error::NotCommutative);
        assert_eq!(gr_presentation(&s3).unwrap_err(), Error::NotCommutative);
        let sub = Submonoid::new(&s3, &[0]).unwrap();
        assert_eq!(quotient_monoid(&s3, &sub).unwrap_err(), Error::NotCommutative);
        assert_eq!(rho(&s3, &sub).unwrap_err(), Error::NotCommutative);
    }

    #[test]
    fn units_are_homomorphisms() {
        let m = FiniteMonoid::cyclic_monoid(2, 4).product(&FiniteMonoid::cyclic(3)).unwrap();
        for r in [gr_pairs(&m).unwrap(), gr_presentation(&m).unwrap()] {
            assert!(r.unit_is_homomorphism(&m));
        }
        assert_eq!(gr_pairs(&m).unwrap().kernel_classes(), gr_presentation(&m).unwrap().kernel_classes());
    }

    #[test]
    fn quotient_examples() {
        let z4 = FiniteMonoid::cyclic(4);
        let q = quotient_monoid(&z4, &Submonoid::new(&z4, &[0, 2]).unwrap()).unwrap();
        assert_eq!(q.classes, vec![vec![0, 2], vec![1, 3]]);
        assert!(is_quotient_group(&q));
        assert_eq!(structure_of_finite_abelian_group(&q.monoid).unwrap().to_string(), "Z/2");

        let sat = FiniteMonoid::saturating(3);
        let q = quotient_monoid(&sat, &Submonoid::new(&sat, &[0]).unwrap()).unwrap();
        assert_eq!(q.len(), 3);
        assert!(!is_quotient_group(&q));
        let q = quotient_monoid(&sat, &Submonoid::new(&sat, &[0, 2]).unwrap()).unwrap();
        assert_eq!(q.len(), 1);
        assert!(is_quotient_group(&q));
    }

    #[test]
    fn quotient_by_identity_is_identity() {
        let m = FiniteMonoid::saturating(4).product(&FiniteMonoid::cyclic(2)).unwrap();
        let q = quotient_monoid(&m, &Submonoid::new(&m, &[m.identity()]).unwrap()).unwrap();
        assert_eq!(q.len(), m.len());
        assert!(q.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn rho_examples() {
        let z4 = FiniteMonoid::cyclic(4);
        assert_eq!(rho(&z4, &Submonoid::new(&z4, &[0, 2]).unwrap()).unwrap().to_string(), "Z/2");
        let m = FiniteMonoid::saturating(3).product(&FiniteMonoid::cyclic(2)).unwrap();
        assert!(rho(&m, &Submonoid::full(&m)).unwrap().is_trivial());
        let z2z3 = FiniteMonoid::cyclic(2).product(&FiniteMonoid::cyclic(3)).unwrap();
        let n = Submonoid::from_names(&z2z3, &["(0,0)", "(0,1)", "(0,2)"]).unwrap();
        assert_eq!(rho(&z2z3, &n).unwrap().to_string(), "Z/2");
    }

    #[test]
    fn rho_matches_completion_of_quotient() {
        let z4 = FiniteMonoid::cyclic(4);
        let sub = Submonoid::new(&z4, &[0, 2]).unwrap();
        let q = quotient_monoid(&z4, &sub).unwrap();
        assert!(iso(&gr_pairs(&q.monoid).unwrap().group, &rho(&z4, &sub).unwrap()));
    }

    #[test]
    fn universal_property_examples() {
        let z4 = FiniteMonoid::cyclic(4);
        let z2 = FiniteMonoid::cyclic(2);
        let sub = Submonoid::new(&z4, &[0, 2]).unwrap();
        let reduce = MonoidMap { target: z2.clone(), images: vec![0, 1, 0, 1] };
        assert_eq!(universal_property_check(&z4, &sub, &reduce), Ok(true));

        let trivial_sub = Submonoid::new(&z4, &[0]).unwrap();
        assert_eq!(universal_property_check(&z4, &trivial_sub, &reduce), Ok(true));
        let id = MonoidMap { target: z4.clone(), images: vec![0, 1, 2, 3] };
        assert_eq!(universal_property_check(&z4, &trivial_sub, &id), Ok(true));
        assert_eq!(universal_property_check(&z4, &sub, &id), Err(Error::SubmonoidNotKilled(2)));

        let not_hom = MonoidMap { target: z2, images: vec![0, 1, 1, 1] };
        assert_eq!(universal_property_check(&z4, &sub, &not_hom).unwrap_err().name(), "NotHomomorphism");
    }
}
