//! Laurent monomials in the three eigencoordinates of a recursion level.
//!
//! A monomial carries no group reference: the same exponent triple is
//! reinterpreted at each level of the blowup tower, so the weight is always
//! computed relative to an explicitly passed [`GroupType`].

use num::{BigInt, Integer, Signed};

use crate::arith::{Int, IntVec3};
use crate::group::{Character, GroupType};

/// `x^{m₁} y^{m₂} z^{m₃}` as its integer exponent triple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub IntVec3);

impl Monomial {
    /// The identity monomial `1`.
    pub fn one() -> Monomial {
        Monomial(IntVec3::zero())
    }

    pub fn new(m1: impl Into<Int>, m2: impl Into<Int>, m3: impl Into<Int>) -> Monomial {
        Monomial(IntVec3::new(m1, m2, m3))
    }

    pub fn exponents(&self) -> &IntVec3 {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    /// Componentwise exponent sum.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.add(&other.0))
    }

    /// Componentwise exponent difference.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.sub(&other.0))
    }

    /// True when all exponents are nonnegative.
    pub fn is_genuine(&self) -> bool {
        self.0 .0.iter().all(|e| !e.is_negative())
    }

    /// `m₁ + a·m₂ + (r−a)·m₃` before reduction mod `r`: the numerator of the
    /// value of the distinguished ray on this monomial.
    pub fn weight_numerator(&self, g: &GroupType) -> Int {
        let [m1, m2, m3] = &self.0 .0;
        m1 + m2 * BigInt::from(g.a()) + m3 * BigInt::from(g.b())
    }

    /// The weight of the monomial: `(m₁ + a·m₂ + (r−a)·m₃) mod r`.
    ///
    /// The monomial is invariant exactly when the weight is zero.
    pub fn weight(&self, g: &GroupType) -> Character {
        let r = BigInt::from(g.r());
        let w = self.weight_numerator(g).mod_floor(&r);
        Character(u64::try_from(w).expect("residue fits u64"))
    }

    /// Parses the notation used throughout for display: `1`, `y2`, `xz2/y3`,
    /// `z/y`, … Exponents are decimal, variables are `x`, `y`, `z`.
    pub fn parse(s: &str) -> Option<Monomial> {
        fn side(part: &str, sign: i64, exps: &mut [i64; 3]) -> Option<()> {
            if part == "1" {
                return Some(());
            }
            let bytes = part.as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                let var = match bytes[i] {
                    b'x' => 0,
                    b'y' => 1,
                    b'z' => 2,
                    _ => return None,
                };
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let e: i64 = if start == i { 1 } else { part[start..i].parse().ok()? };
                exps[var] += sign * e;
            }
            Some(())
        }
        let mut exps = [0i64; 3];
        match s.split_once('/') {
            Some((num, den)) => {
                side(num, 1, &mut exps)?;
                side(den, -1, &mut exps)?;
            }
            None => side(s, 1, &mut exps)?,
        }
        Some(Monomial::new(exps[0], exps[1], exps[2]))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn push(out: &mut String, var: char, e: &Int) {
            out.push(var);
            if e != &Int::from(1) {
                out.push_str(&e.to_string());
            }
        }
        let mut num = String::new();
        let mut den = String::new();
        for (i, var) in ['x', 'y', 'z'].into_iter().enumerate() {
            let e = &self.0 .0[i];
            if e.is_positive() {
                push(&mut num, var, e);
            } else if e.is_negative() {
                push(&mut den, var, &e.abs());
            }
        }
        match (num.is_empty(), den.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, true) => f.write_str(&num),
            (true, false) => write!(f, "1/{den}"),
            (false, false) => write!(f, "{num}/{den}"),
        }
    }
}
