//! The three round-down maps of a weighted blowup and their finite fibers.
//!
//! Writing `W(m) = m₁ + a·m₂ + (r−a)·m₃` and `F = ⌊W/r⌋`, the map of the
//! chosen side replaces one exponent by `F` and keeps the other two; the
//! result is read in the child level's eigencoordinates.

use num::BigInt;

use crate::arith::{ceil_div, floor_div, Int};
use crate::group::{GroupType, Side};
use crate::monomial::Monomial;

/// Applies the round-down map of the given side.
pub fn round_down(g: &GroupType, side: Side, m: &Monomial) -> Monomial {
    debug_assert!(g.r() >= 2);
    let f = floor_div(&m.weight_numerator(g), &BigInt::from(g.r()));
    let [m1, m2, m3] = &m.exponents().0;
    match side {
        Side::Central => Monomial::new(f, m2.clone(), m3.clone()),
        Side::Left => Monomial::new(m1.clone(), f, m3.clone()),
        Side::Right => Monomial::new(m1.clone(), m2.clone(), f),
    }
}

/// The finite fiber `{m : round_down(m) = target}`, sorted.
///
/// The free exponent is recovered by closed-form interval bounds rather than
/// search: it ranges over the integers `t` with
/// `F·r ≤ c + w·t < (F+1)·r`, where `c` collects the fixed coordinates and
/// `w` is the weight of the free one.
pub fn fiber(g: &GroupType, side: Side, target: &Monomial) -> Vec<Monomial> {
    debug_assert!(g.r() >= 2);
    let r = BigInt::from(g.r());
    let a = BigInt::from(g.a());
    let b = BigInt::from(g.b());
    let [k1, k2, k3] = &target.exponents().0;
    // (floor value F, fixed contribution c, free weight w)
    let (f, c, w): (&Int, Int, Int) = match side {
        Side::Central => (k1, &a * k2 + &b * k3, BigInt::from(1)),
        Side::Left => (k2, k1 + &b * k3, a.clone()),
        Side::Right => (k3, k1 + &a * k2, b.clone()),
    };
    let lo = ceil_div(&(f * &r - &c), &w);
    let hi = ceil_div(&((f + 1) * &r - &c), &w); // exclusive
    let mut out = Vec::new();
    let mut t = lo;
    while t < hi {
        let m = match side {
            Side::Central => Monomial::new(t.clone(), k2.clone(), k3.clone()),
            Side::Left => Monomial::new(k1.clone(), t.clone(), k3.clone()),
            Side::Right => Monomial::new(k1.clone(), k2.clone(), t.clone()),
        };
        debug_assert_eq!(&round_down(g, side, &m), target);
        out.push(m);
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Integer;

    fn m(s: &str) -> Monomial {
        Monomial::parse(s).unwrap()
    }

    fn g(r: u64, a: u64) -> GroupType {
        GroupType::new(r, a).unwrap()
    }

    /// Exhaustive oracle: scan an exponent box for fiber members.
    fn fiber_by_scan(g: &GroupType, side: Side, target: &Monomial, bound: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let [k1, k2, k3] = &target.exponents().0;
        for t in -bound..=bound {
            let cand = match side {
                Side::Central => Monomial::new(t, k2.clone(), k3.clone()),
                Side::Left => Monomial::new(k1.clone(), t, k3.clone()),
                Side::Right => Monomial::new(k1.clone(), k2.clone(), t),
            };
            if &round_down(g, side, &cand) == target {
                out.push(cand);
            }
        }
        out
    }

    #[test]
    fn round_down_examples() {
        // ⌊7/12⌋ = 0, so y maps to the second child coordinate unchanged
        assert_eq!(round_down(&g(12, 7), Side::Right, &m("y")), m("y"));
        // z²/y² at level 1/7(1,3,4) rounds down to ζ² on the left
        assert_eq!(round_down(&g(7, 3), Side::Left, &m("z2/y2")), m("z2"));
        for side in Side::ALL {
            assert_eq!(round_down(&g(7, 3), side, &Monomial::one()), Monomial::one());
        }
    }

    #[test]
    fn fiber_examples() {
        let fib = fiber(&g(7, 3), Side::Left, &m("z"));
        assert_eq!(fib, vec![m("z/y"), m("z")]);
        let fib = fiber(&g(7, 3), Side::Left, &Monomial::one());
        assert_eq!(fib, vec![Monomial::one(), m("y"), m("y2")]);
        // Central fiber over 1 is the full x-chain
        for (r, a) in [(5, 2), (7, 3), (12, 7)] {
            let fib = fiber(&g(r, a), Side::Central, &Monomial::one());
            let expect: Vec<Monomial> = (0..r as i64).map(|i| Monomial::new(i, 0, 0)).collect();
            assert_eq!(fib, expect);
        }
    }

    #[test]
    fn fiber_matches_scan_oracle() {
        for (r, a) in [(2, 1), (5, 3), (7, 3), (12, 7)] {
            let g = g(r, a);
            for side in Side::ALL {
                for e1 in -2..3i64 {
                    for e2 in -2..3i64 {
                        for e3 in -2..3i64 {
                            let target = Monomial::new(e1, e2, e3);
                            let got = fiber(&g, side, &target);
                            let want = fiber_by_scan(&g, side, &target, 4 * r as i64);
                            assert_eq!(got, want, "{g} {side:?} {target}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn equivariance_under_invariant_monomials() {
        // round_down(m·n) = round_down(m)·round_down(n) for invariant n
        for (r, a) in [(5, 2), (7, 3), (12, 7)] {
            let g = g(r, a);
            let mut invariants = Vec::new();
            for e1 in -3..4i64 {
                for e2 in -3..4i64 {
                    for e3 in -3..4i64 {
                        let n = Monomial::new(e1, e2, e3);
                        if n.weight(&g).0 == 0 {
                            invariants.push(n);
                        }
                    }
                }
            }
            for side in Side::ALL {
                for e1 in -2..3i64 {
                    for e2 in -2..3i64 {
                        let m = Monomial::new(e1, e2, 1 - e1);
                        for n in &invariants {
                            let lhs = round_down(&g, side, &m.mul(n));
                            let rhs = round_down(&g, side, &m).mul(&round_down(&g, side, n));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn collapse_lemma() {
        // Left: weight j < r−a ⇒ rounding down absorbs a factor of y;
        // Right: j < a absorbs z; Central: j < r−1 absorbs x.
        for (r, a) in [(5, 2), (7, 3), (7, 4), (12, 7)] {
            let g = g(r, a);
            for e1 in -3..4i64 {
                for e2 in -3..4i64 {
                    for e3 in -3..4i64 {
                        let m = Monomial::new(e1, e2, e3);
                        let j = m.weight(&g).0;
                        if j < r - a {
                            assert_eq!(
                                round_down(&g, Side::Left, &m.mul(&Monomial::new(0, 1, 0))),
                                round_down(&g, Side::Left, &m)
                            );
                        }
                        if j < a {
                            assert_eq!(
                                round_down(&g, Side::Right, &m.mul(&Monomial::new(0, 0, 1))),
                                round_down(&g, Side::Right, &m)
                            );
                        }
                        if j < r - 1 {
                            assert_eq!(
                                round_down(&g, Side::Central, &m.mul(&Monomial::new(1, 0, 0))),
                                round_down(&g, Side::Central, &m)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_members_comparable() {
        // any two members of a fiber divide one another by a genuine monomial
        for (r, a) in [(5, 2), (7, 3), (12, 7)] {
            let g = g(r, a);
            for side in Side::ALL {
                for e in -2..3i64 {
                    let target = Monomial::new(e, 1, 0);
                    let fib = fiber(&g, side, &target);
                    for p in &fib {
                        for q in &fib {
                            assert!(p.div(q).is_genuine() || q.div(p).is_genuine());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lifting_lemma_exhaustive() {
        // For every child monomial k (in a box) and degree-1 child coordinate
        // g, some f ∈ {x,y,z} and m with round_down(m) = k satisfy
        // round_down(f·m) = g·k.
        for r in 2..=12u64 {
            for a in 1..r {
                if r.gcd(&a) != 1 {
                    continue;
                }
                let g = g(r, a);
                for side in Side::ALL {
                    for e1 in -1..2i64 {
                        for e2 in -1..2i64 {
                            for e3 in -1..2i64 {
                                let k = Monomial::new(e1, e2, e3);
                                for coord in [
                                    Monomial::new(1, 0, 0),
                                    Monomial::new(0, 1, 0),
                                    Monomial::new(0, 0, 1),
                                ] {
                                    let goal = coord.mul(&k);
                                    let found = fiber(&g, side, &k).iter().any(|m| {
                                        [
                                            Monomial::new(1, 0, 0),
                                            Monomial::new(0, 1, 0),
                                            Monomial::new(0, 0, 1),
                                        ]
                                        .iter()
                                        .any(|f| round_down(&g, side, &f.mul(m)) == goal)
                                    });
                                    assert!(found, "{g} {side:?} k={k} goal={goal}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
