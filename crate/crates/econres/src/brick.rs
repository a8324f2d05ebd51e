//! Weight-indexed monomial bases of torus-invariant equivariant modules:
//! validation, border bases, semigroup generators, dual cones, closed
//! subsets, pullback along round-downs, and the per-cone recursion attaching
//! one brick to every maximal cone of the economic resolution.

use std::collections::BTreeSet;

use num::{Integer, Signed, Zero};

use crate::arith::{Int, IntVec3};
use crate::fan::{self, Cone};
use crate::group::{Character, GroupType, Side};
use crate::monomial::Monomial;
use crate::rounddown;
use crate::{Axiom, Error, Result};

/// A set of `r` Laurent monomials, one per character weight, satisfying the
/// four brick axioms. Entries are indexed by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBrick {
    group: GroupType,
    entries: Vec<Monomial>,
}

/// The weight-normalized border products: a generating set of the invariant
/// quotient semigroup of a brick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupGens {
    pub generators: BTreeSet<Monomial>,
}

/// One entry of the module action table: `f · m_ρ = s · m_ρ'` with `s`
/// invariant; `s = 1` exactly when the product stays in the brick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionEntry {
    pub generator: usize,
    pub source: Character,
    pub target: Character,
    pub factor: Monomial,
}

const COORDS: [fn() -> Monomial; 3] = [
    || Monomial::new(1, 0, 0),
    || Monomial::new(0, 1, 0),
    || Monomial::new(0, 0, 1),
];

impl GBrick {
    /// Validates a candidate monomial set against the four axioms:
    /// (i) contains 1, (ii) one monomial per weight, (iii) genuine quotients
    /// within the set are divisor-closed, (iv) the multiply/divide graph on
    /// the set is connected.
    pub fn validate(g: &GroupType, monomials: &[Monomial]) -> Result<GBrick> {
        let r = g.r() as usize;
        if monomials.len() != r {
            return Err(Error::AxiomViolation {
                axiom: Axiom::WeightBijection,
                witness: format!("{} monomials for group order {}", monomials.len(), r),
            });
        }
        let mut entries: Vec<Option<Monomial>> = vec![None; r];
        for m in monomials {
            let w = m.weight(g).index();
            if let Some(prev) = &entries[w] {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::WeightBijection,
                    witness: format!("{prev} and {m} share weight {w}"),
                });
            }
            entries[w] = Some(m.clone());
        }
        let entries: Vec<Monomial> = entries.into_iter().map(|e| e.unwrap()).collect();
        if !entries[0].is_one() {
            return Err(Error::AxiomViolation {
                axiom: Axiom::ContainsOne,
                witness: format!("weight-0 entry is {}", entries[0]),
            });
        }
        let brick = GBrick { group: *g, entries };
        brick.check_sandwich()?;
        brick.check_connected()?;
        Ok(brick)
    }

    /// Sandwich axiom: for each member `m`, the set of genuine quotients
    /// `{m''/m : m'' ∈ Γ}` must be closed under removing one coordinate.
    fn check_sandwich(&self) -> Result<()> {
        for m in &self.entries {
            for other in &self.entries {
                let d = other.div(m);
                if !d.is_genuine() {
                    continue;
                }
                for i in 0..3 {
                    if d.exponents().0[i].is_positive() {
                        let smaller = d.div(&COORDS[i]());
                        if !self.contains(&m.mul(&smaller)) {
                            return Err(Error::AxiomViolation {
                                axiom: Axiom::Sandwich,
                                witness: format!(
                                    "{other} = n'·n·{m} with n = {smaller} but n·{m} missing"
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<()> {
        let r = self.entries.len();
        let mut seen = vec![false; r];
        let mut stack = vec![0usize]; // weight 0 = the identity
        seen[0] = true;
        while let Some(w) = stack.pop() {
            let m = &self.entries[w];
            for i in 0..3 {
                for next in [m.mul(&COORDS[i]()), m.div(&COORDS[i]())] {
                    let nw = next.weight(&self.group).index();
                    if !seen[nw] && self.entries[nw] == next {
                        seen[nw] = true;
                        stack.push(nw);
                    }
                }
            }
        }
        if let Some(w) = seen.iter().position(|&s| !s) {
            return Err(Error::AxiomViolation {
                axiom: Axiom::Connected,
                witness: format!("{} unreachable from 1", self.entries[w]),
            });
        }
        Ok(())
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    /// Entries indexed by weight; `entries()[0]` is the identity.
    pub fn entries(&self) -> &[Monomial] {
        &self.entries
    }

    pub fn entry(&self, rho: Character) -> &Monomial {
        &self.entries[rho.index()]
    }

    /// The unique member of the same weight as `m`.
    pub fn weight_representative(&self, m: &Monomial) -> &Monomial {
        &self.entries[m.weight(&self.group).index()]
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.weight_representative(m) == m
    }

    pub fn as_set(&self) -> BTreeSet<Monomial> {
        self.entries.iter().cloned().collect()
    }

    /// One-step coordinate products falling outside the brick.
    pub fn border_basis(&self) -> BTreeSet<Monomial> {
        let mut out = BTreeSet::new();
        for m in &self.entries {
            for c in COORDS {
                let p = m.mul(&c());
                if !self.contains(&p) {
                    out.insert(p);
                }
            }
        }
        out
    }

    /// The weight-normalizations `b / wt(b)` of the border basis: invariant
    /// monomials generating the quotient semigroup of the brick.
    pub fn semigroup_generators(&self) -> SemigroupGens {
        let generators = self
            .border_basis()
            .into_iter()
            .map(|b| {
                let q = b.div(self.weight_representative(&b));
                debug_assert_eq!(q.weight(&self.group).0, 0);
                q
            })
            .collect();
        SemigroupGens { generators }
    }

    /// The dual cone of the semigroup generators, when it is simplicial and
    /// 3-dimensional. That the result exists is exactly the condition for the
    /// brick's chart to have a torus fixed point.
    pub fn sigma_cone(&self) -> Result<Cone> {
        let gens: Vec<IntVec3> = self
            .semigroup_generators()
            .generators
            .into_iter()
            .map(|m| m.exponents().clone())
            .collect();
        // Extremal rays of {u : <u,g> ≥ 0 ∀g}: candidates are the directions
        // orthogonal to two independent generators, kept when nonnegative on
        // all generators. Three dimensions keep this exact and tiny.
        let mut rays: BTreeSet<IntVec3> = BTreeSet::new();
        for (i, gi) in gens.iter().enumerate() {
            for gj in gens.iter().skip(i + 1) {
                let n = gi.cross(gj);
                if n.is_zero() {
                    continue;
                }
                for cand in [n.clone(), IntVec3::zero().sub(&n)] {
                    if gens.iter().all(|h| !cand.dot(h).is_negative()) {
                        rays.insert(fan::canonical_ray(&self.group, &cand)?);
                    }
                }
            }
        }
        let rays: Vec<IntVec3> = rays.into_iter().collect();
        match rays.len() {
            3 => {
                let rays: [IntVec3; 3] = rays.try_into().unwrap();
                Cone::from_scaled_rays(&self.group, rays)
            }
            0..=2 => Err(Error::NotFullDimensional),
            n => Err(Error::NotSimplicial(n)),
        }
    }

    /// Whether the dual cone is 3-dimensional (the defining condition of a
    /// brick, on top of the prebrick axioms enforced at construction).
    pub fn is_brick(&self) -> bool {
        self.sigma_cone().is_ok()
    }

    /// Closed subsets of the brick as bitmasks over weights: the subsets `A`
    /// with `m ∈ A, f·m ∈ Γ ⇒ f·m ∈ A`. They index the submodules of the
    /// brick's module, and always include the empty and the full subset.
    ///
    /// A bitmask scan covers orders up to 20; beyond that the subsets are
    /// enumerated recursively over the successor graph, capped explicitly
    /// because the count itself can explode.
    pub fn closed_subsets(&self) -> Result<Vec<u64>> {
        let r = self.group.r();
        if r > 63 {
            return Err(Error::TooLarge(r));
        }
        if r <= 20 {
            Ok(self.closed_subsets_bitmask())
        } else {
            self.closed_subsets_recursive()
        }
    }

    fn closed_subsets_bitmask(&self) -> Vec<u64> {
        let r = self.group.r() as usize;
        let succ = self.successor_masks();
        let mut out = Vec::new();
        'next: for mask in 0u64..(1u64 << r) {
            for i in 0..r {
                if mask >> i & 1 == 1 && succ[i] & !mask != 0 {
                    continue 'next;
                }
            }
            out.push(mask);
        }
        out
    }

    /// Decision enumeration over weights in decreasing entry degree. Products
    /// by a coordinate raise the degree by one, so every successor of an
    /// element is decided before the element itself: including it is legal
    /// exactly when its successors are already in.
    fn closed_subsets_recursive(&self) -> Result<Vec<u64>> {
        const CAP: usize = 1 << 22;
        let r = self.group.r() as usize;
        let succ = self.successor_masks();
        let mut order: Vec<usize> = (0..r).collect();
        let degree = |w: usize| -> Int { self.entries[w].exponents().0.iter().sum() };
        order.sort_by(|&x, &y| degree(y).cmp(&degree(x)));

        fn rec(pos: usize, order: &[usize], succ: &[u64], mask: u64, out: &mut Vec<u64>) -> bool {
            if out.len() >= CAP {
                return false;
            }
            let Some(&i) = order.get(pos) else {
                out.push(mask);
                return true;
            };
            if !rec(pos + 1, order, succ, mask, out) {
                return false;
            }
            if succ[i] & !mask == 0 {
                return rec(pos + 1, order, succ, mask | 1 << i, out);
            }
            true
        }
        let mut out = Vec::new();
        if !rec(0, &order, &succ, 0, &mut out) {
            return Err(Error::TooLarge(self.group.r()));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// For each weight `w`, the bitmask of weights of coordinate-products of
    /// `entries[w]` that stay inside the brick.
    pub fn successor_masks(&self) -> Vec<u64> {
        let r = self.group.r() as usize;
        let mut succ = vec![0u64; r];
        for (w, m) in self.entries.iter().enumerate() {
            for c in COORDS {
                let p = m.mul(&c());
                let pw = p.weight(&self.group).index();
                if self.entries[pw] == p {
                    succ[w] |= 1 << pw;
                }
            }
        }
        succ
    }

    /// Whether the semigroup of the brick is saturated, i.e. already equal to
    /// all invariant monomials of its dual cone. Requires the dual cone to be
    /// unimodular; the check expresses each chart coordinate as a product of
    /// semigroup generators by a bounded search in chart exponents.
    pub fn is_saturated(&self) -> Result<bool> {
        let cone = self.sigma_cone()?;
        let coords = fan::chart_coordinates(&self.group, &cone)?;
        let gens = self.semigroup_generators();
        // coordinates of a generator in the chart basis: pairings with rays
        let gen_coords: Vec<[Int; 3]> = gens
            .generators
            .iter()
            .map(|m| express_in_chart(&cone, m))
            .collect::<Result<_>>()?;
        for v in &gen_coords {
            if v.iter().any(|c| c.is_negative()) {
                // generators always lie in the dual cone; negative pairing
                // would mean the cone is wrong
                return Err(Error::IntegralityViolation(
                    "semigroup generator outside its dual cone".into(),
                ));
            }
        }
        for (i, coord) in coords.iter().enumerate() {
            let mut target = [Int::zero(), Int::zero(), Int::zero()];
            target[i] = Int::from(1);
            debug_assert_eq!(express_in_chart(&cone, coord)?, target);
            if !monoid_contains(&gen_coords, &target)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The full action table: for each coordinate generator and source
    /// weight, the target weight and the invariant factor.
    pub fn action_table(&self) -> Vec<ActionEntry> {
        let mut out = Vec::with_capacity(3 * self.entries.len());
        for (i, c) in COORDS.iter().enumerate() {
            for (w, m) in self.entries.iter().enumerate() {
                let p = m.mul(&c());
                let target = p.weight(&self.group);
                let factor = p.div(&self.entries[target.index()]);
                out.push(ActionEntry {
                    generator: i,
                    source: Character(w as u64),
                    target,
                    factor,
                });
            }
        }
        out
    }
}

/// Coordinates of an invariant monomial in the chart basis of a unimodular
/// cone: the pairings with the scaled rays, divided by the scale.
fn express_in_chart(cone: &Cone, m: &Monomial) -> Result<[Int; 3]> {
    let r = Int::from(cone.scale());
    let mut out = [Int::zero(), Int::zero(), Int::zero()];
    for (i, ray) in cone.rays().iter().enumerate() {
        let p = ray.dot(m.exponents());
        let (q, rem) = p.div_rem(&r);
        if !rem.is_zero() {
            return Err(Error::IntegralityViolation(format!(
                "{m} pairs fractionally with {ray}"
            )));
        }
        out[i] = q;
    }
    Ok(out)
}

/// Whether `target` is a finite nonnegative combination of `gens`, all in
/// nonnegative chart coordinates. Breadth-first over vectors dominated by the
/// target; the explicit cap reports instead of looping on bad input.
fn monoid_contains(gens: &[[Int; 3]], target: &[Int; 3]) -> Result<bool> {
    let mut frontier: BTreeSet<[Int; 3]> = BTreeSet::new();
    let mut seen: BTreeSet<[Int; 3]> = BTreeSet::new();
    let zero = [Int::zero(), Int::zero(), Int::zero()];
    frontier.insert(zero.clone());
    seen.insert(zero);
    let cap = 1_000_000usize;
    while let Some(cur) = frontier.iter().next().cloned() {
        frontier.remove(&cur);
        if &cur == target {
            return Ok(true);
        }
        for g in gens {
            if g.iter().all(|c| c.is_zero()) {
                continue;
            }
            let next = [&cur[0] + &g[0], &cur[1] + &g[1], &cur[2] + &g[2]];
            if next.iter().zip(target).all(|(n, t)| n <= t) && seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::SearchExhausted);
                }
                frontier.insert(next);
            }
        }
    }
    Ok(false)
}

/// Pulls a child brick back through the round-down of the given side: the
/// union of the fibers over the child monomials. The result is again a brick
/// with the same quotient semigroup under the chart identification.
pub fn pullback_brick(g: &GroupType, side: Side, child_brick: &GBrick) -> Result<GBrick> {
    let mut monomials = Vec::new();
    for k in child_brick.entries() {
        monomials.extend(rounddown::fiber(g, side, k));
    }
    if monomials.len() != g.r() as usize {
        return Err(Error::FiberSizeMismatch {
            got: monomials.len(),
            expected: g.r() as usize,
        });
    }
    GBrick::validate(g, &monomials)
}

/// The brick attached to each maximal cone of the economic resolution,
/// paired with its cone: the central chart carries the x-power chain, and the
/// two side charts carry pullbacks of the children's bricks.
pub fn danilov_bricks(g: &GroupType) -> Result<Vec<(Cone, GBrick)>> {
    if g.is_trivial() {
        let cone = Cone::from_scaled_rays(
            g,
            [
                fan::scaled_basis(g, 0),
                fan::scaled_basis(g, 1),
                fan::scaled_basis(g, 2),
            ],
        )?;
        let brick = GBrick::validate(g, &[Monomial::one()])?;
        return Ok(vec![(cone, brick)]);
    }
    let mut out = Vec::with_capacity(2 * g.r() as usize - 1);
    for side in Side::ALL {
        let child = g.child(side);
        for (child_cone, child_brick) in danilov_bricks(&child)? {
            let rays = child_cone.rays();
            let cone = Cone::from_scaled_rays(
                g,
                [
                    fan::transport_ray(g, side, &child, &rays[0])?,
                    fan::transport_ray(g, side, &child, &rays[1])?,
                    fan::transport_ray(g, side, &child, &rays[2])?,
                ],
            )?;
            let brick = pullback_brick(g, side, &child_brick)?;
            out.push((cone, brick));
        }
    }
    out.sort_by(|(c1, _), (c2, _)| c1.cmp(c2));
    Ok(out)
}
