//! The bar construction of a finite monoid, truncated at simplicial degree 2,
//! and the two computations it supports: the edge-path presentation of the
//! fundamental group and first homology with integer coefficients.

use std::fmt;

use crate::error::Result;
use crate::lattice::{cokernel, FgAbelianGroup, IntMatrix};
use crate::monoid::FiniteMonoid;

/// One vertex, a 1-cell per element, a 2-cell per ordered pair.
///
/// Faces of the 2-cell `(a, b)` are `d₀ = b`, `d₁ = a•b`, `d₂ = a`.
#[derive(Debug, Clone)]
pub struct BarTruncation {
    monoid: FiniteMonoid,
}

impl BarTruncation {
    pub fn new(monoid: &FiniteMonoid) -> Self {
        BarTruncation { monoid: monoid.clone() }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn one_cells(&self) -> Vec<usize> {
        (0..self.monoid.len()).collect()
    }

    pub fn two_cells(&self) -> Vec<(usize, usize)> {
        let n = self.monoid.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
    }

    /// `[d₀, d₁, d₂]` of a 2-cell.
    pub fn faces(&self, (a, b): (usize, usize)) -> [usize; 3] {
        [b, self.monoid.op(a, b), a]
    }

    /// `s₀(a) = (e, a)`, `s₁(a) = (a, e)`.
    pub fn degeneracies(&self, a: usize) -> [(usize, usize); 2] {
        let e = self.monoid.identity();
        [(e, a), (a, e)]
    }

    /// Whether a 1-cell or 2-cell is degenerate (involves the identity).
    pub fn is_degenerate_edge(&self, a: usize) -> bool {
        a == self.monoid.identity()
    }

    /// Checks `dᵢ sⱼ` identities on 1-cells and that all faces are 1-cells.
    /// Face identities among 1-cells are vacuous (one vertex).
    pub fn check_simplicial_identities(&self) -> bool {
        let n = self.monoid.len();
        let faces_valid = self.two_cells().into_iter().all(|c| self.faces(c).iter().all(|&f| f < n));
        let degeneracies_ok = (0..n).all(|a| {
            let [s0, s1] = self.degeneracies(a);
            let [d0s0, d1s0, _] = self.faces(s0);
            let [_, d1s1, d2s1] = self.faces(s1);
            d0s0 == a && d1s0 == a && d1s1 == a && d2s1 == a
        });
        faces_valid && degeneracies_ok
    }
}

pub fn bar_truncation(m: &FiniteMonoid) -> BarTruncation {
    BarTruncation::new(m)
}

/// A letter `x_g^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }
    fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }
}

/// Finitely presented group; relators are unreduced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    /// Exponent-sum matrix: rows are generators, columns relators.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.generators.len(), self.relators.len());
        for (j, word) in self.relators.iter().enumerate() {
            for l in word {
                a.add_to(l.generator, j, if l.inverse { -1 } else { 1 });
            }
        }
        a
    }

    /// Abelianization `ℤ^generators / ⟨exponent sums of relators⟩`.
    pub fn abelianization(&self) -> FgAbelianGroup {
        cokernel(&self.exponent_matrix())
    }

    fn write_word(&self, f: &mut fmt::Formatter<'_>, word: &[Letter]) -> fmt::Result {
        // runs of one generator collapse to a single exponent
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let g = word[i].generator;
            let mut exp: i64 = 0;
            let mut j = i;
            while j < word.len() && word[j].generator == g && word[j].inverse == word[i].inverse {
                exp += if word[j].inverse { -1 } else { 1 };
                j += 1;
            }
            let name = &self.generators[g];
            parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
            i = j;
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Display for GroupPresentation {
    /// `⟨ x_a, … | w₁, … ⟩`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨ {} | ", self.generators.join(", "))?;
        for (k, w) in self.relators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            self.write_word(f, w)?;
        }
        f.write_str(" ⟩")
    }
}

/// Edge-path presentation: generators `x_a`, relator `x_e` first, then
/// `x_a x_b x_{a•b}⁻¹` for every pair in lexicographic order.
pub fn pi1_presentation(m: &FiniteMonoid) -> GroupPresentation {
    let generators = m.names().iter().map(|s| format!("x_{s}")).collect();
    let mut relators = vec![vec![Letter::pos(m.identity())]];
    for (a, b) in bar_truncation(m).two_cells() {
        relators.push(vec![Letter::pos(a), Letter::pos(b), Letter::neg(m.op(a, b))]);
    }
    GroupPresentation { generators, relators }
}

/// Abelianized fundamental group of the bar construction.
pub fn pi1_abelianized(m: &FiniteMonoid) -> Result<FgAbelianGroup> {
    m.require_commutative()?;
    Ok(pi1_presentation(m).abelianization())
}

/// First homology from normalized chains: `C₁` free on `M ∖ {e}`, `C₂` free
/// on pairs of non-identity elements, `∂(a, b) = [b] − [a•b] + [a]` with
/// `[e] = 0`, `∂₁ = 0`.
pub fn h1_bar(m: &FiniteMonoid) -> Result<FgAbelianGroup> {
    m.require_commutative()?;
    let e = m.identity();
    let cells: Vec<usize> = (0..m.len()).filter(|&a| a != e).collect();
    let slot = |x: usize| cells.iter().position(|&c| c == x);
    let pairs: Vec<(usize, usize)> = cells
        .iter()
        .flat_map(|&a| cells.iter().map(move |&b| (a, b)))
        .collect();
    let mut boundary = IntMatrix::zeros(cells.len(), pairs.len());
    for (j, &(a, b)) in pairs.iter().enumerate() {
        for (x, sign) in [(b, 1), (m.op(a, b), -1), (a, 1)] {
            if let Some(i) = slot(x) {
                boundary.add_to(i, j, sign);
            }
        }
    }
    Ok(cokernel(&boundary))
}

/// First homology from unnormalized chains (every cell, degenerate or not).
pub fn h1_bar_unnormalized(m: &FiniteMonoid) -> Result<FgAbelianGroup> {
    m.require_commutative()?;
    let n = m.len();
    let mut boundary = IntMatrix::zeros(n, n * n);
    for (j, (a, b)) in bar_truncation(m).two_cells().into_iter().enumerate() {
        boundary.add_to(b, j, 1);
        boundary.add_to(m.op(a, b), j, -1);
        boundary.add_to(a, j, 1);
    }
    Ok(cokernel(&boundary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_follow_formula() {
        let bar = bar_truncation(&FiniteMonoid::cyclic(2));
        assert_eq!(bar.faces((1, 1))[1], 0);
        let m = FiniteMonoid::saturating(4);
        let bar = bar_truncation(&m);
        for (a, b) in bar.two_cells() {
            let [d0, d1, d2] = bar.faces((a, b));
            assert_eq!((d0, d1, d2), (b, m.op(a, b), a));
        }
        assert!(bar.check_simplicial_identities());
        let t = bar_truncation(&FiniteMonoid::cyclic(1));
        assert_eq!((t.one_cells().len(), t.two_cells().len()), (1, 1));
    }

    #[test]
    fn z2_presentation() {
        let p = pi1_presentation(&FiniteMonoid::cyclic(2));
        assert_eq!(p.relators.len(), 5);
        assert_eq!(
            p.to_string(),
            "⟨ x_0, x_1 | x_0, x_0^2 x_0^-1, x_0 x_1 x_1^-1, x_1 x_0 x_1^-1, x_1^2 x_0^-1 ⟩"
        );
        // every relator the enumeration expects is present
        let expected = [
            vec![Letter::pos(0)],
            vec![Letter::pos(1), Letter::pos(1), Letter::neg(0)],
            vec![Letter::pos(0), Letter::pos(1), Letter::neg(1)],
            vec![Letter::pos(1), Letter::pos(0), Letter::neg(1)],
            vec![Letter::pos(0), Letter::pos(0), Letter::neg(0)],
        ];
        for r in &expected {
            assert!(p.relators.contains(r));
        }
    }

    #[test]
    fn relator_counts() {
        let t = pi1_presentation(&FiniteMonoid::cyclic(1));
        assert_eq!(t.to_string(), "⟨ x_0 | x_0, x_0^2 x_0^-1 ⟩");
        assert_eq!(pi1_presentation(&FiniteMonoid::saturating(3)).relators.len(), 10);
    }

    #[test]
    fn pi1_examples() {
        assert_eq!(pi1_abelianized(&FiniteMonoid::cyclic(2)).unwrap().to_string(), "Z/2");
        assert!(pi1_abelianized(&FiniteMonoid::saturating(3)).unwrap().is_trivial());
        assert!(pi1_abelianized(&FiniteMonoid::cyclic(1)).unwrap().is_trivial());
    }

    #[test]
    fn identity_relator_is_redundant() {
        for m in [FiniteMonoid::cyclic(5), FiniteMonoid::saturating(4), FiniteMonoid::cyclic_monoid(1, 3)] {
            let mut p = pi1_presentation(&m);
            let full = p.abelianization();
            p.relators.remove(0);
            assert_eq!(p.abelianization(), full);
        }
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_bar(&FiniteMonoid::cyclic(2)).unwrap().to_string(), "Z/2");
        assert_eq!(h1_bar(&FiniteMonoid::cyclic(3)).unwrap().to_string(), "Z/3");
        assert!(h1_bar(&FiniteMonoid::cyclic(1)).unwrap().is_trivial());
    }

    #[test]
    fn normalized_and_unnormalized_agree() {
        for m in [
            FiniteMonoid::cyclic(6),
            FiniteMonoid::saturating(5),
            FiniteMonoid::cyclic_monoid(2, 2).product(&FiniteMonoid::cyclic(2)).unwrap(),
        ] {
            assert_eq!(h1_bar(&m).unwrap(), h1_bar_unnormalized(&m).unwrap());
        }
    }
}
