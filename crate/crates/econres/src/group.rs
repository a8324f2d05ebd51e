//! The cyclic group of type 1/r(1,a,r−a): characters, recursion children and
//! character-level pushforwards.

use num::Integer;

use crate::{Error, Result};

/// A character of the group, i.e. a weight residue in `0..r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character(pub u64);

impl Character {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which chart of the weighted blowup a construction descends to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Below the distinguished ray: the smooth chart.
    Central,
    /// Left of the distinguished ray: singularity of order `a`.
    Left,
    /// Right of the distinguished ray: singularity of order `r−a`.
    Right,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Central, Side::Left, Side::Right];
}

/// The pair `(r, a)` encoding the group acting on ℂ³ with weights
/// `(1, a, r−a)`. The trivial group is the sentinel `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupType {
    r: u64,
    a: u64,
}

impl GroupType {
    /// Validates `(r, a)`: for `r > 1` requires `gcd(r,a) = 1` and
    /// `1 ≤ a ≤ r−1`; `r = 1` forces `a = 0`.
    pub fn new(r: u64, a: u64) -> Result<GroupType> {
        if r == 0 {
            return Err(Error::InvalidType { r, a, reason: "group order must be positive" });
        }
        if r == 1 {
            if a != 0 {
                return Err(Error::InvalidType { r, a, reason: "trivial group is encoded as (1,0)" });
            }
            return Ok(GroupType { r, a });
        }
        if a == 0 || a >= r {
            return Err(Error::InvalidType { r, a, reason: "need 1 <= a <= r-1" });
        }
        if r.gcd(&a) != 1 {
            return Err(Error::InvalidType { r, a, reason: "r and a must be coprime" });
        }
        Ok(GroupType { r, a })
    }

    pub fn trivial() -> GroupType {
        GroupType { r: 1, a: 0 }
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// The third weight `r − a` (zero for the trivial group).
    pub fn b(&self) -> u64 {
        self.r - self.a
    }

    pub fn is_trivial(&self) -> bool {
        self.r == 1
    }

    pub fn characters(&self) -> impl Iterator<Item = Character> {
        (0..self.r).map(Character)
    }

    /// The quotient type of the chosen chart of the weighted blowup.
    ///
    /// Left gives order `a` with second weight `(−r) mod a`, Right gives
    /// order `r−a` with second weight `r mod (r−a)`, Central is trivial. The
    /// children are again in normal form because the first eigencoordinate
    /// keeps weight 1.
    pub fn child(&self, side: Side) -> GroupType {
        if self.is_trivial() {
            return GroupType::trivial();
        }
        let child = |order: u64, second: u64| {
            if order == 1 {
                GroupType::trivial()
            } else {
                GroupType::new(order, second % order).expect("children of valid types are valid")
            }
        };
        match side {
            Side::Central => GroupType::trivial(),
            Side::Left => {
                let a = self.a;
                // (−r) mod a
                child(a, (a - self.r % a) % a)
            }
            Side::Right => {
                let b = self.b();
                child(b, self.r % b)
            }
        }
    }

    /// Pushforward of a character along the round-down of the given side.
    pub fn pushforward(&self, side: Side, rho: Character) -> Character {
        debug_assert!(rho.0 < self.r);
        match side {
            Side::Central => Character(0),
            Side::Left => Character(rho.0 % self.a),
            Side::Right => Character(rho.0 % self.b()),
        }
    }
}

impl std::fmt::Display for GroupType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "1/{}(1,{},{})", self.r, self.a, self.b())
    }
}
