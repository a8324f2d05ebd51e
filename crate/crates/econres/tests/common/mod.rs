//! Shared fixtures for the integration suites: golden data for 1/7(1,3,4),
//! 1/3(1,2,1) and 1/12(1,7,5), transcribed once and compared structurally
//! (as sets, never by ordering).

#![allow(dead_code)]

use std::collections::BTreeSet;

use econres::arith::IntVec3;
use econres::fan::Cone;
use econres::{GBrick, GroupType, Monomial};

pub fn g(r: u64, a: u64) -> GroupType {
    GroupType::new(r, a).unwrap()
}

pub fn m(s: &str) -> Monomial {
    Monomial::parse(s).unwrap_or_else(|| panic!("bad monomial literal {s}"))
}

pub fn mset(strs: &[&str]) -> BTreeSet<Monomial> {
    strs.iter().map(|s| m(s)).collect()
}

pub fn brick(gr: &GroupType, strs: &[&str]) -> GBrick {
    let monomials: Vec<Monomial> = strs.iter().map(|s| m(s)).collect();
    GBrick::validate(gr, &monomials).unwrap()
}

/// Scaled ray for a generator label: `e1|e2|e3` or `v<i>` in the convention
/// `v_i = (a·i mod r, i, r−i)/r` used by the 1/12(1,7,5) tables.
pub fn ray_12_7(label: &str) -> IntVec3 {
    let (r, a) = (12i64, 7i64);
    match label {
        "e1" => IntVec3::new(r, 0, 0),
        "e2" => IntVec3::new(0, r, 0),
        "e3" => IntVec3::new(0, 0, r),
        _ => {
            let i: i64 = label.strip_prefix('v').unwrap().parse().unwrap();
            IntVec3::new((a * i).rem_euclid(r), i, r - i)
        }
    }
}

/// Scaled ray for 1/7(1,3,4) in the convention `v_i = (i, 3i mod 7, −3i mod 7)/7`.
pub fn ray_7_3(label: &str) -> IntVec3 {
    let (r, a) = (7i64, 3i64);
    match label {
        "e1" => IntVec3::new(r, 0, 0),
        "e2" => IntVec3::new(0, r, 0),
        "e3" => IntVec3::new(0, 0, r),
        _ => {
            let i: i64 = label.strip_prefix('v').unwrap().parse().unwrap();
            IntVec3::new(i, (a * i).rem_euclid(r), (-a * i).rem_euclid(r))
        }
    }
}

pub fn cone_from(gr: &GroupType, rays: [IntVec3; 3]) -> Cone {
    Cone::from_scaled_rays(gr, rays).unwrap()
}

pub fn cone_7_3(labels: [&str; 3]) -> Cone {
    cone_from(&g(7, 3), labels.map(ray_7_3))
}

pub fn cone_12_7(labels: [&str; 3]) -> Cone {
    cone_from(&g(12, 7), labels.map(ray_12_7))
}

/// One row of the 1/12(1,7,5) brick table: cone generators, the twelve brick
/// monomials, and the three chart coordinates.
pub struct TableRow {
    pub generators: [&'static str; 3],
    pub brick: [&'static str; 12],
    pub coords: [&'static str; 3],
}

/// The full 23-row table for 1/12(1,7,5).
pub const TABLE_12_7: [TableRow; 23] = [
    TableRow {
        generators: ["e1", "e2", "v11"],
        brick: ["1", "z", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z10", "z11"],
        coords: ["x/z5", "y/z11", "z12"],
    },
    TableRow {
        generators: ["e1", "v10", "v11"],
        brick: ["1", "y", "y/z", "z", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9"],
        coords: ["x/z5", "y2/z10", "z11/y"],
    },
    TableRow {
        generators: ["e1", "v9", "v10"],
        brick: ["1", "y", "y/z", "y2/z", "y2/z2", "y2/z3", "y2/z4", "y2/z5", "z", "z2", "z3", "z4"],
        coords: ["xz5/y2", "y3/z9", "z10/y2"],
    },
    TableRow {
        generators: ["e1", "v8", "v9"],
        brick: ["1", "y", "y/z", "y2/z", "y2/z2", "z", "z2", "z3", "z4", "z4/y", "z5/y", "z6/y"],
        coords: ["xy/z4", "y4/z8", "z9/y3"],
    },
    TableRow {
        generators: ["e1", "v7", "v8"],
        brick: ["1", "y", "y/z", "y2/z", "y2/z2", "y3/z2", "y3/z3", "y3/z4", "y4/z4", "y4/z5", "z", "z2"],
        coords: ["xz4/y3", "y5/z7", "z8/y4"],
    },
    TableRow {
        generators: ["e1", "v6", "v7"],
        brick: ["1", "y", "z", "z2", "z2/y", "z3/y", "z3/y2", "z4/y2", "z5/y2", "z5/y3", "z6/y3", "z6/y4"],
        coords: ["xy2/z3", "y6/z6", "z7/y5"],
    },
    TableRow {
        generators: ["e1", "v5", "v6"],
        brick: ["1", "y", "y2", "y3", "z", "z2", "z2/y", "z3/y", "z3/y2", "z4/y2", "z5/y2", "z5/y3"],
        coords: ["xy2/z3", "y7/z5", "z6/y6"],
    },
    TableRow {
        generators: ["e1", "v4", "v5"],
        brick: ["1", "y", "y2", "y3", "y4", "y5", "y5/z", "y5/z2", "y6/z2", "z", "z2", "z2/y"],
        coords: ["xz2/y5", "y8/z4", "z5/y7"],
    },
    TableRow {
        generators: ["e1", "v3", "v4"],
        brick: ["1", "y", "y2", "y3", "y4", "y5", "z", "z2", "z2/y", "z2/y2", "z2/y3", "z3/y3"],
        coords: ["xy3/z2", "y9/z3", "z4/y8"],
    },
    TableRow {
        generators: ["e1", "v2", "v3"],
        brick: ["1", "y", "y2", "y3", "y4", "y5", "y6", "y6/z", "y7/z", "y8/z", "y9/z", "z"],
        coords: ["xz/y6", "y10/z2", "z3/y9"],
    },
    TableRow {
        generators: ["e1", "v1", "v2"],
        brick: ["1", "y", "y2", "y3", "y4", "y5", "y6", "z", "z/y", "z/y2", "z/y3", "z/y4"],
        coords: ["xy4/z", "y11/z", "z2/y10"],
    },
    TableRow {
        generators: ["e1", "e3", "v1"],
        brick: ["1", "y", "y2", "y3", "y4", "y5", "y6", "y7", "y8", "y9", "y10", "y11"],
        coords: ["x/y7", "y12", "z/y11"],
    },
    TableRow {
        generators: ["e2", "v9", "v11"],
        brick: ["1", "x", "xz", "xz2", "xz3", "xz4", "x2", "x2z", "z", "z2", "z3", "z4"],
        coords: ["x3/z3", "y/x2z", "z5/x"],
    },
    TableRow {
        generators: ["v9", "v10", "v11"],
        brick: ["1", "x", "z", "xz", "z2", "xz2", "z3", "xz3", "z4", "xz4", "y", "y/z"],
        coords: ["x2z/y", "y2/xz5", "z5/x"],
    },
    TableRow {
        generators: ["v7", "v8", "v9"],
        brick: ["1", "x", "xy", "xy/z", "xz", "xz2", "y", "y/z", "y2/z", "y2/z2", "z", "z2"],
        coords: ["x2z/y", "y3/xz4", "z4/xy"],
    },
    TableRow {
        generators: ["e2", "v7", "v9"],
        brick: ["1", "x", "x2", "x3", "x4", "xz", "xz2", "x2z", "x3z", "x4z", "z", "z2"],
        coords: ["x5/z", "y/x2z", "z3/x3"],
    },
    TableRow {
        generators: ["v4", "v6", "v7"],
        brick: ["1", "x", "xy", "xz", "xz2", "xz2/y", "x2", "x2y", "y", "z", "z2", "z2/y"],
        coords: ["x3y/z2", "y2/x2", "z3/xy"],
    },
    TableRow {
        generators: ["v4", "v5", "v6"],
        brick: ["1", "x", "xy", "xz", "xz2", "xz2/y", "y", "y2", "y3", "z", "z2", "z2/y"],
        coords: ["x2/y2", "y5/xz2", "z3/xy2"],
    },
    TableRow {
        generators: ["v2", "v3", "v4"],
        brick: ["1", "x", "xy", "xy2", "xy3", "xz", "y", "y2", "y3", "y4", "y5", "z"],
        coords: ["x2/y2", "y6/xz", "z2/xy3"],
    },
    TableRow {
        generators: ["v2", "v4", "v7"],
        brick: ["1", "x", "xy", "xz", "x2", "x2y", "x3", "x3y", "x4", "x4y", "y", "z"],
        coords: ["x5/z", "y2/x2", "z2/x3y"],
    },
    TableRow {
        generators: ["e3", "v1", "v2"],
        brick: ["1", "x", "xy", "xy2", "xy3", "xy4", "y", "y2", "y3", "y4", "y5", "y6"],
        coords: ["x2/y2", "y7/x", "z/xy4"],
    },
    TableRow {
        generators: ["e3", "v2", "v7"],
        brick: ["1", "x", "xy", "x2", "x2y", "x3", "x3y", "x4", "x4y", "x5", "x6", "y"],
        coords: ["x7/y", "y2/x2", "z/x5"],
    },
    TableRow {
        generators: ["e2", "e3", "v7"],
        brick: ["1", "x", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10", "x11"],
        coords: ["x12", "y/x7", "z/x5"],
    },
];

/// The 13 maximal cones of the economic resolution fan for 1/7(1,3,4): the
/// seven cones over the top boundary (containing e1) and the six below.
pub const FAN_7_3: [[&str; 3]; 13] = [
    ["e1", "e3", "v5"],
    ["e1", "v5", "v3"],
    ["e1", "v3", "v1"],
    ["e1", "v1", "v6"],
    ["e1", "v6", "v4"],
    ["e1", "v4", "v2"],
    ["e1", "v2", "e2"],
    ["v1", "e2", "e3"],
    ["e3", "v1", "v3"],
    ["e3", "v3", "v5"],
    ["e2", "v1", "v2"],
    ["v1", "v2", "v4"],
    ["v1", "v4", "v6"],
];

pub const GAMMA1_7_3: [&str; 7] = ["1", "y", "y2", "z", "z/y", "z2/y", "z2/y2"];
pub const GAMMA2_7_3: [&str; 7] = ["1", "z", "y", "y2", "y2/z", "y3/z", "y3/z2"];

pub const SGENS_GAMMA1: [&str; 3] = ["y5/z2", "z3/y4", "xy/z"];
pub const SGENS_GAMMA2: [&str; 3] = ["y4/z3", "z4/y3", "xz2/y3"];

/// Example bricks and cones for 1/3(1,2,1): `(generators, brick)` with
/// v1 = (1,2,1)/3, v2 = (2,1,2)/3.
pub fn example_3_2() -> Vec<(Cone, BTreeSet<Monomial>)> {
    let gr = g(3, 2);
    let e1 = IntVec3::new(3, 0, 0);
    let e2 = IntVec3::new(0, 3, 0);
    let e3 = IntVec3::new(0, 0, 3);
    let v1 = IntVec3::new(1, 2, 1);
    let v2 = IntVec3::new(2, 1, 2);
    vec![
        (cone_from(&gr, [e1.clone(), e2.clone(), v1.clone()]), mset(&["1", "z", "z2"])),
        (cone_from(&gr, [e1.clone(), v1.clone(), v2.clone()]), mset(&["1", "y", "z"])),
        (cone_from(&gr, [e1.clone(), v2.clone(), e3.clone()]), mset(&["1", "y", "y2"])),
        (cone_from(&gr, [e3.clone(), e2.clone(), v1.clone()]), mset(&["1", "x", "x2"])),
        (cone_from(&gr, [e3, v1, v2]), mset(&["1", "x", "y"])),
    ]
}

/// Simple roots for 1/7(1,3,4) as (head, tail) pairs.
pub const ROOTS_7_3: [(u64, u64); 6] = [(4, 5), (5, 6), (6, 1), (1, 2), (2, 3), (3, 0)];

/// The chamber ray matrix for 1/7(1,3,4), as printed.
pub const RAYS_7_3: [[i64; 7]; 6] = [
    [-1, 0, 0, 1, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 1],
    [-1, 0, -1, 0, 0, 1, 1],
    [-1, -1, -1, 0, 1, 1, 1],
    [-1, -1, 0, 0, 1, 1, 0],
    [-1, 0, 0, 0, 1, 0, 0],
];

/// Simple roots for 1/12(1,7,5) as (head, tail) pairs, added root (7,3).
pub const ROOTS_12_7: [(u64, u64); 11] = [
    (5, 6),
    (6, 10),
    (10, 11),
    (11, 8),
    (8, 9),
    (9, 7),
    (7, 3),
    (3, 4),
    (4, 1),
    (1, 2),
    (2, 0),
];

/// The chamber ray matrix for 1/12(1,7,5), as printed.
pub const RAYS_12_7: [[i64; 12]; 11] = [
    [-1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0],
    [-1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [-1, -1, -1, 0, -1, 0, 0, 1, 1, 1, 0, 1],
    [-1, -1, -1, -1, -1, 0, 0, 1, 1, 1, 1, 1],
    [-1, -1, 0, -1, -1, 0, 0, 0, 1, 1, 1, 1],
    [-1, -1, 0, -1, 0, 0, 0, 0, 1, 0, 1, 1],
    [-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [-1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [-1, -1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
];

/// All coprime pairs `(r, a)` with `2 ≤ r ≤ max_r`.
pub fn coprime_types(max_r: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for a in 1..r {
            if num::Integer::gcd(&r, &a) == 1 {
                out.push((r, a));
            }
        }
    }
    out
}
