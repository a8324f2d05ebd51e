//! Stability parameters on characters: the distinguished fiber-balanced
//! direction, the recursive partial-parameter construction, and the stability
//! test for bricks.

use num::{One, Signed, Zero};

use crate::arith::{rat_int, RatMatrix, Rational};
use crate::brick::GBrick;
use crate::group::{GroupType, Side};
use crate::{Error, Result};

/// A rational parameter on characters summing to zero, indexed by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta {
    values: Vec<Rational>,
}

impl Theta {
    pub fn new(values: Vec<Rational>) -> Result<Theta> {
        let sum: Rational = values.iter().sum();
        if !sum.is_zero() {
            return Err(Error::Infeasible);
        }
        Ok(Theta { values })
    }

    pub fn zero(r: u64) -> Theta {
        Theta { values: vec![Rational::zero(); r as usize] }
    }

    pub fn from_ints(values: &[i64]) -> Result<Theta> {
        Theta::new(values.iter().map(|&v| rat_int(v)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn at(&self, w: usize) -> &Rational {
        &self.values[w]
    }

    /// `base + m·direction` with explicit integer `m`.
    pub fn add_scaled(&self, other: &Theta, m: &Rational) -> Theta {
        debug_assert_eq!(self.len(), other.len());
        Theta {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b * m)
                .collect(),
        }
    }

    /// Sum of values over the weights present in `mask`.
    pub fn eval_mask(&self, mask: u64) -> Rational {
        let mut sum = Rational::zero();
        for (w, v) in self.values.iter().enumerate() {
            if mask >> w & 1 == 1 {
                sum += v;
            }
        }
        sum
    }
}

/// The fiber-balanced direction: `−1` on weights below `min(a, r−a)`, `+1`
/// on weights at or above `max(a, r−a)`, `0` between. It is, up to positive
/// scalar, the unique parameter whose sum over every pushforward fiber of
/// both side charts vanishes.
pub fn vartheta(g: &GroupType) -> Result<Theta> {
    if g.r() < 2 {
        return Err(Error::TrivialGroup);
    }
    let s = g.a().min(g.b());
    let t = g.a().max(g.b());
    let values = (0..g.r())
        .map(|w| {
            if w < s {
                -Rational::one()
            } else if w >= t {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    Ok(Theta { values })
}

/// Solves for a parameter whose pushforward fiber sums reproduce the two
/// child parameters. Free variables are zeroed, so the result is
/// deterministic; a solution always exists when both children sum to zero.
pub fn solve_theta_partial(g: &GroupType, theta2: &Theta, theta3: &Theta) -> Result<Theta> {
    debug_assert_eq!(theta2.len() as u64, g.child(Side::Left).r());
    debug_assert_eq!(theta3.len() as u64, g.child(Side::Right).r());
    let r = g.r() as usize;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (side, child_theta) in [(Side::Left, theta2), (Side::Right, theta3)] {
        for chi in 0..child_theta.len() {
            let mut row = vec![Rational::zero(); r];
            for rho in g.characters() {
                if g.pushforward(side, rho).index() == chi {
                    row[rho.index()] = Rational::one();
                }
            }
            rows.push(row);
            rhs.push(child_theta.at(chi).clone());
        }
    }
    let solution = crate::arith::solve_rational_system(&RatMatrix::new(rows), &rhs)?;
    Theta::new(solution)
}

/// `base + m·direction` for an `m` left symbolic: large enough that any
/// subset on which the direction is positive gets a positive value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicTheta {
    pub base: Theta,
    pub direction: Theta,
}

impl SymbolicTheta {
    /// Fixes `m = 1 + Σ|base(ρ)|` (rounded up). Since the direction takes
    /// integer values, `direction(A) ≥ 1` then forces `θ(A) > 0`.
    pub fn concretize(&self) -> Theta {
        let m = self.multiplier();
        self.base.add_scaled(&self.direction, &m)
    }

    /// The explicit multiplier used by [`SymbolicTheta::concretize`].
    pub fn multiplier(&self) -> Rational {
        let sum: Rational = self.base.values().iter().map(|v| v.abs()).sum();
        Rational::from_integer(sum.ceil().to_integer()) + Rational::one()
    }
}

/// The recursive stability parameter: children are solved first and
/// concretized, the partial parameter reproduces them on fibers, and the
/// direction is the fiber-balanced one.
pub fn kedzierski_theta(g: &GroupType) -> Result<SymbolicTheta> {
    if g.r() < 2 {
        return Err(Error::TrivialGroup);
    }
    let child_theta = |side: Side| -> Result<Theta> {
        let child = g.child(side);
        if child.is_trivial() {
            Ok(Theta::zero(1))
        } else {
            Ok(kedzierski_theta(&child)?.concretize())
        }
    };
    let base = solve_theta_partial(g, &child_theta(Side::Left)?, &child_theta(Side::Right)?)?;
    Ok(SymbolicTheta { base, direction: vartheta(g)? })
}

/// Sum of the parameter over the weights of a subset of the brick.
pub fn theta_eval(theta: &Theta, brick: &GBrick, mask: u64) -> Rational {
    debug_assert_eq!(theta.len(), brick.entries().len());
    theta.eval_mask(mask)
}

/// Stability: strictly positive on every nonzero proper closed subset.
pub fn is_stable(brick: &GBrick, theta: &Theta) -> Result<bool> {
    let full = if brick.entries().len() == 64 {
        u64::MAX
    } else {
        (1u64 << brick.entries().len()) - 1
    };
    for mask in brick.closed_subsets()? {
        if mask == 0 || mask == full {
            continue;
        }
        if !theta.eval_mask(mask).is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}
