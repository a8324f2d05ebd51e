//! The Weyl-chamber description of the stability region inside the A_{r−1}
//! root system: base expansion of roots, the recursive simple-root set with
//! its added root, the chamber's ray matrix, and membership.

use num::{One, Signed, Zero};

use crate::arith::{primitive_scale, Int, RatMatrix, Rational};
use crate::group::GroupType;
use crate::stability::Theta;
use crate::{Error, Result};

/// The root `ε_head − ε_tail` of A_{r−1}, `head ≠ tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub head: u64,
    pub tail: u64,
}

impl Root {
    pub fn new(head: u64, tail: u64) -> Root {
        debug_assert_ne!(head, tail);
        Root { head, tail }
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e{}-e{}", self.head, self.tail)
    }
}

/// Integer coefficients of a root in the base `α_i = ε_i − ε_{i−a}`,
/// `i = 1..r−1`. Index 0 carries no coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVector {
    coeffs: Vec<i64>,
}

impl AlphaVector {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Pairing with a parameter: `θ(Σ n_i α_i) = Σ n_i θ(ρ_i)`.
    pub fn pair(&self, theta: &Theta) -> Rational {
        debug_assert_eq!(self.coeffs.len(), theta.len());
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| theta.at(i) * Rational::from_integer(Int::from(c)))
            .sum()
    }
}

/// An ordered family of `r−1` roots forming a base of A_{r−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    pub roots: Vec<Root>,
}

impl RootSet {
    pub fn as_set(&self) -> std::collections::BTreeSet<Root> {
        self.roots.iter().copied().collect()
    }
}

/// Expands `ε_head − ε_tail` in the base `α_i = ε_i − ε_{i−a}`, telescoping
/// along steps of `−a`. Of the two telescoping directions exactly one has a
/// head chain avoiding index 0 (as `gcd(a, r) = 1`); the expansion follows
/// that one, negated when it runs from tail to head.
pub fn expand_in_alpha(g: &GroupType, root: &Root) -> AlphaVector {
    let r = g.r();
    let a = g.a();
    debug_assert!(root.head < r && root.tail < r && root.head != root.tail);
    let mut coeffs = vec![0i64; r as usize];
    // walk i, i−a, i−2a, … collecting heads until hitting the target
    let chain = |from: u64, to: u64| -> Option<Vec<u64>> {
        let mut heads = Vec::new();
        let mut cur = from;
        while cur != to {
            if cur == 0 {
                return None;
            }
            heads.push(cur);
            cur = (cur + r - a) % r;
        }
        Some(heads)
    };
    if let Some(heads) = chain(root.head, root.tail) {
        for h in heads {
            coeffs[h as usize] += 1;
        }
    } else {
        let heads = chain(root.tail, root.head)
            .expect("one of the two telescoping directions avoids index 0");
        for h in heads {
            coeffs[h as usize] -= 1;
        }
    }
    AlphaVector { coeffs }
}

fn reindex_left(g: &GroupType, l: u64) -> u64 {
    // ε^L_l = ε_i with i ≡ l mod a and r−a ≤ i < r
    let a = g.a();
    let b = g.b();
    b + (l + a - b % a) % a
}

/// The recursive base of simple roots: the left child's base reindexed into
/// the top `a` weights, the added root, and the right child's base embedded
/// in the bottom `r−a` weights.
pub fn simple_roots(g: &GroupType) -> Result<RootSet> {
    if g.r() < 2 {
        return Err(Error::TrivialGroup);
    }
    let mut roots = Vec::with_capacity(g.r() as usize - 1);
    let a = g.a();
    let b = g.b();

    let left = g.child(crate::group::Side::Left);
    if !left.is_trivial() {
        for root in simple_roots(&left)?.roots {
            roots.push(Root::new(reindex_left(g, root.head), reindex_left(g, root.tail)));
        }
    }

    // added root: ε_{⌊(r−1)/a⌋·a} − ε_{⌊(r−1)/(r−a)⌋·(r−a) − a}
    let added_head = (g.r() - 1) / a * a;
    let added_tail = (g.r() - 1) / b * b - a;
    roots.push(Root::new(added_head, added_tail));

    let right = g.child(crate::group::Side::Right);
    if !right.is_trivial() {
        // ε^R_k = ε_k for 0 ≤ k < r−a
        roots.extend(simple_roots(&right)?.roots);
    }
    debug_assert_eq!(roots.len() as u64, g.r() - 1);
    Ok(RootSet { roots })
}

/// The rays of the chamber: for each simple root, the primitive integer
/// parameter pairing to 1 with it and to 0 with the others, in the order of
/// [`simple_roots`]. Rows of the paper's matrices are recovered as a set.
pub fn chamber_rays(g: &GroupType) -> Result<Vec<Vec<Int>>> {
    let roots = simple_roots(g)?;
    let expansions: Vec<AlphaVector> = roots
        .roots
        .iter()
        .map(|root| expand_in_alpha(g, root))
        .collect();
    let r = g.r() as usize;
    let mut rays = Vec::with_capacity(r - 1);
    for j in 0..r - 1 {
        let mut rows: Vec<Vec<Rational>> = expansions
            .iter()
            .map(|e| {
                e.coeffs()
                    .iter()
                    .map(|&c| Rational::from_integer(Int::from(c)))
                    .collect()
            })
            .collect();
        rows.push(vec![Rational::one(); r]); // Σθ = 0
        let mut rhs = vec![Rational::zero(); r];
        rhs[j] = Rational::one();
        let sol = crate::arith::solve_rational_system(&RatMatrix::new(rows), &rhs)
            .map_err(|_| Error::SingularBase)?;
        rays.push(primitive_scale(&sol)?);
    }
    Ok(rays)
}

/// Strict positivity of the parameter on every simple root.
pub fn in_chamber(g: &GroupType, theta: &Theta) -> Result<bool> {
    let roots = simple_roots(g)?;
    Ok(roots
        .roots
        .iter()
        .all(|root| expand_in_alpha(g, root).pair(theta).is_positive()))
}
