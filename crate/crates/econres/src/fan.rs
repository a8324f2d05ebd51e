//! The toric fan of the economic resolution, built by the recursive tower of
//! weighted blowups, with cone-level geometry: discrepancy, smoothness and
//! chart coordinates.
//!
//! All fan data live in the lattice `L = ℤ³ + ℤ·(1/r)(1,a,r−a)`. A ray is
//! stored `r`-scaled as an integer triple, normalized so that the stored
//! vector is `r` times the primitive point of `L` on the ray.

use num::{One, Signed, Zero};

use crate::arith::{det3_int, invert_matrix3, Int, IntVec3, RatMatrix, Rational};
use crate::group::{GroupType, Side};
use crate::monomial::Monomial;
use crate::{Error, Result};

/// A simplicial 3-dimensional cone in `L ⊗ ℝ`, rays stored `r`-scaled and
/// sorted, so equality is ray-set equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    scale: u64,
    rays: [IntVec3; 3],
}

/// `r` times the `i`-th standard basis vector.
pub fn scaled_basis(g: &GroupType, i: usize) -> IntVec3 {
    let mut v = [Int::zero(), Int::zero(), Int::zero()];
    v[i] = Int::from(g.r());
    IntVec3(v)
}

/// `r · v` for the distinguished point `v = (1,a,r−a)/r`.
pub fn scaled_v(g: &GroupType) -> IntVec3 {
    IntVec3::new(1u64, g.a(), g.b())
}

/// `r · v_i` for `v_i = (i, ai mod r, (−ai) mod r)/r`, `1 ≤ i < r`.
pub fn scaled_v_i(g: &GroupType, i: u64) -> IntVec3 {
    debug_assert!(i >= 1 && i < g.r());
    let r = g.r();
    IntVec3::new(i, (g.a() * i) % r, (r - (g.a() * i) % r) % r)
}

/// Scales an integer vector `u` (an `r`-multiple of some point of `L` on its
/// ray) to `r` times the primitive point of `L` in the same direction.
pub(crate) fn canonical_ray(g: &GroupType, u: &IntVec3) -> Result<IntVec3> {
    use num::Integer;
    let w = u.primitive()?;
    let r = Int::from(g.r());
    let a = Int::from(g.a());
    let b = Int::from(g.b());
    // smallest k ≥ 1 with k·w ≡ j·(1,a,r−a) mod r for some j (then k·w ∈ r·L);
    // k = r always qualifies, so the loop cannot fall through for integer input
    for k in 1..=g.r() {
        let kw = w.scale(&Int::from(k));
        let j = kw.0[0].mod_floor(&r);
        if (&kw.0[1] - &j * &a).mod_floor(&r).is_zero()
            && (&kw.0[2] - &j * &b).mod_floor(&r).is_zero()
        {
            return Ok(kw);
        }
    }
    Err(Error::IntegralityViolation(u.to_string()))
}

impl Cone {
    /// Builds a cone from `r`-scaled ray vectors, canonicalizing and sorting.
    ///
    /// Fails with [`Error::IntegralityViolation`] when a ray is not on a line
    /// through a point of `L`, and with [`Error::NotFullDimensional`] when the
    /// rays are dependent.
    pub fn from_scaled_rays(g: &GroupType, rays: [IntVec3; 3]) -> Result<Cone> {
        let mut canon = [
            canonical_ray(g, &rays[0])?,
            canonical_ray(g, &rays[1])?,
            canonical_ray(g, &rays[2])?,
        ];
        if det3_int(&canon).is_zero() {
            return Err(Error::NotFullDimensional);
        }
        canon.sort();
        Ok(Cone { scale: g.r(), rays: canon })
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// The three `r`-scaled rays, in canonical (sorted) order.
    pub fn rays(&self) -> &[IntVec3; 3] {
        &self.rays
    }

    /// True when the rays form a basis of `L`, i.e. the chart is smooth.
    ///
    /// Since `L` has covolume `1/r`, this is `|det(scaled rays)| = r²`.
    pub fn is_unimodular(&self) -> bool {
        let r = Int::from(self.scale);
        det3_int(&self.rays).abs() == &r * &r
    }

    /// Whether the point `u/scale` lies in the cone (solves for barycentric
    /// coordinates).
    pub fn contains(&self, u: &IntVec3) -> bool {
        let m = RatMatrix::new(
            (0..3)
                .map(|j| (0..3).map(|i| ray_coord(&self.rays[i], j)).collect())
                .collect(),
        );
        let b: Vec<Rational> = u.to_rationals().to_vec();
        match crate::arith::solve_rational_system(&m, &b) {
            Ok(x) => x.iter().all(|c| !c.is_negative()),
            Err(_) => false,
        }
    }

    /// True for interior points (all barycentric coordinates positive).
    pub fn contains_interior(&self, u: &IntVec3) -> bool {
        let m = RatMatrix::new(
            (0..3)
                .map(|j| (0..3).map(|i| ray_coord(&self.rays[i], j)).collect())
                .collect(),
        );
        let b: Vec<Rational> = u.to_rationals().to_vec();
        match crate::arith::solve_rational_system(&m, &b) {
            Ok(x) => x.iter().all(|c| c.is_positive()),
            Err(_) => false,
        }
    }
}

fn ray_coord(ray: &IntVec3, j: usize) -> Rational {
    Rational::from_integer(ray.0[j].clone())
}

impl std::fmt::Display for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Cone({}/{r},{}/{r},{}/{r})",
            self.rays[0],
            self.rays[1],
            self.rays[2],
            r = self.scale
        )
    }
}

/// The fan of the economic resolution: its group and maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EconFan {
    pub group: GroupType,
    pub maximal_cones: Vec<Cone>,
}

/// Image of the child's `r'`-scaled basis under the chart identification,
/// `r`-scaled: columns are the images of the child basis vectors.
pub(crate) fn transport_columns(g: &GroupType, side: Side) -> [IntVec3; 3] {
    let (e1, e2, e3) = (scaled_basis(g, 0), scaled_basis(g, 1), scaled_basis(g, 2));
    let v = scaled_v(g);
    match side {
        Side::Central => [v, e2, e3],
        Side::Left => [e1, v, e3],
        Side::Right => [e1, e2, v],
    }
}

/// Transports an `r'`-scaled child ray into an `r`-scaled ray of the parent
/// lattice. The division is exact for genuine child lattice points.
pub(crate) fn transport_ray(
    g: &GroupType,
    side: Side,
    child: &GroupType,
    ray: &IntVec3,
) -> Result<IntVec3> {
    let cols = transport_columns(g, side);
    let num = cols[0]
        .scale(&ray.0[0])
        .add(&cols[1].scale(&ray.0[1]))
        .add(&cols[2].scale(&ray.0[2]));
    let rp = Int::from(child.r());
    let mut out = [Int::zero(), Int::zero(), Int::zero()];
    for (i, n) in num.0.iter().enumerate() {
        let (q, rem) = num::Integer::div_rem(n, &rp);
        if !rem.is_zero() {
            return Err(Error::IntegralityViolation(num.to_string()));
        }
        out[i] = q;
    }
    Ok(IntVec3(out))
}

fn transport_cone(g: &GroupType, side: Side, child: &GroupType, cone: &Cone) -> Result<Cone> {
    let rays = [
        transport_ray(g, side, child, &cone.rays[0])?,
        transport_ray(g, side, child, &cone.rays[1])?,
        transport_ray(g, side, child, &cone.rays[2])?,
    ];
    Cone::from_scaled_rays(g, rays)
}

/// The fan of the economic resolution of `ℂ³ / G`.
///
/// For the trivial group this is the single cone on the standard basis;
/// otherwise the three charts of the first weighted blowup carry transported
/// copies of the children's fans. The result has `2r−1` maximal cones, `r` of
/// which contain `e₁`, all unimodular.
pub fn econ_fan(g: &GroupType) -> Result<EconFan> {
    let mut maximal_cones = Vec::with_capacity(2 * g.r() as usize - 1);
    if g.is_trivial() {
        maximal_cones.push(Cone::from_scaled_rays(
            g,
            [scaled_basis(g, 0), scaled_basis(g, 1), scaled_basis(g, 2)],
        )?);
    } else {
        for side in Side::ALL {
            let child = g.child(side);
            for cone in econ_fan(&child)?.maximal_cones {
                maximal_cones.push(transport_cone(g, side, &child, &cone)?);
            }
        }
        maximal_cones.sort();
    }
    Ok(EconFan { group: *g, maximal_cones })
}

impl EconFan {
    /// The cones containing the given `r`-scaled lattice point.
    pub fn cones_containing(&self, u: &IntVec3) -> Vec<&Cone> {
        self.maximal_cones.iter().filter(|c| c.contains(u)).collect()
    }
}

/// Discrepancy of the exceptional divisor at a primitive point of `L`,
/// given `r`-scaled: the coordinate sum of the point minus one.
pub fn discrepancy(g: &GroupType, scaled_point: &IntVec3) -> Rational {
    let sum: Int = scaled_point.0.iter().sum();
    Rational::new(sum - Int::from(g.r()), Int::from(g.r()))
}

/// The dual basis of monomials on a unimodular cone: the unique invariant
/// Laurent monomials pairing to the identity with the rays, in ray order.
pub fn chart_coordinates(g: &GroupType, cone: &Cone) -> Result<[Monomial; 3]> {
    if !cone.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let r = Rational::from_integer(Int::from(g.r()));
    let ray_matrix = RatMatrix::new(
        (0..3)
            .map(|i| (0..3).map(|j| ray_coord(&cone.rays[i], j) / &r).collect())
            .collect(),
    );
    let inv = invert_matrix3(&ray_matrix).map_err(|_| Error::NotUnimodular)?;
    let mut out = [Monomial::one(), Monomial::one(), Monomial::one()];
    for (j, slot) in out.iter_mut().enumerate() {
        let mut exps = [Int::zero(), Int::zero(), Int::zero()];
        for (i, e) in exps.iter_mut().enumerate() {
            let q = inv.at(i, j);
            if !q.denom().is_one() {
                return Err(Error::IntegralityViolation(format!(
                    "chart coordinate has non-integer exponent {q}"
                )));
            }
            *e = q.numer().clone();
        }
        let m = Monomial(IntVec3(exps));
        if m.weight(g).0 != 0 {
            return Err(Error::IntegralityViolation(format!(
                "chart coordinate {m} is not invariant"
            )));
        }
        *slot = m;
    }
    Ok(out)
}
