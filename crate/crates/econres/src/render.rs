//! Deterministic serializers for the CLI: JSON, TSV and a human-readable
//! layout. All fractions are emitted as exact strings, never floats.

use num::One;
use serde_json::{json, Value};

use crate::arith::{Int, IntVec3, Rational};
use crate::brick::GBrick;
use crate::chamber::RootSet;
use crate::fan::{Cone, EconFan};
use crate::group::GroupType;
use crate::monomial::Monomial;
use crate::stability::{SymbolicTheta, Theta};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q`, with optional sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = n.parse().ok()?;
    let d: Int = d.parse().ok()?;
    if d == Int::from(0) {
        return None;
    }
    Some(Rational::new(n, d))
}

fn int_value(i: &Int) -> Value {
    // fan and chamber data stay far below 2^63 at any usable order
    match i64::try_from(i) {
        Ok(v) => json!(v),
        Err(_) => json!(i.to_string()),
    }
}

fn vec3_value(v: &IntVec3) -> Value {
    Value::Array(v.0.iter().map(int_value).collect())
}

pub fn cone_value(c: &Cone) -> Value {
    json!({
        "scale": c.scale(),
        "rays": Value::Array(c.rays().iter().map(vec3_value).collect()),
    })
}

pub fn fan_value(fan: &EconFan) -> Value {
    json!({
        "r": fan.group.r(),
        "a": fan.group.a(),
        "maximal_cones": Value::Array(fan.maximal_cones.iter().map(cone_value).collect()),
    })
}

pub fn monomial_value(m: &Monomial) -> Value {
    vec3_value(m.exponents())
}

pub fn brick_value(b: &GBrick) -> Value {
    let entries: serde_json::Map<String, Value> = b
        .entries()
        .iter()
        .enumerate()
        .map(|(w, m)| (w.to_string(), monomial_value(m)))
        .collect();
    json!({
        "r": b.group().r(),
        "a": b.group().a(),
        "entries": entries,
    })
}

pub fn theta_value(t: &Theta) -> Value {
    json!({
        "values": Value::Array(t.values().iter().map(|q| json!(rational_string(q))).collect()),
    })
}

pub fn symbolic_theta_value(t: &SymbolicTheta) -> Value {
    json!({
        "base": theta_value(&t.base),
        "direction": theta_value(&t.direction),
        "multiplier": rational_string(&t.multiplier()),
        "concrete": theta_value(&t.concretize()),
    })
}

pub fn matrix_value(rows: &[Vec<Int>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(int_value).collect()))
            .collect(),
    )
}

pub fn rootset_value(roots: &RootSet) -> Value {
    Value::Array(
        roots
            .roots
            .iter()
            .map(|root| json!({"head": root.head, "tail": root.tail}))
            .collect(),
    )
}

fn ray_pretty(v: &IntVec3, scale: u64) -> String {
    format!("{}/{}", v, scale)
}

pub fn fan_text(fan: &EconFan, tsv: bool) -> String {
    let mut out = String::new();
    if tsv {
        out.push_str("cone\tray1\tray2\tray3\n");
        for (i, c) in fan.maximal_cones.iter().enumerate() {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                i,
                ray_pretty(&c.rays()[0], c.scale()),
                ray_pretty(&c.rays()[1], c.scale()),
                ray_pretty(&c.rays()[2], c.scale()),
            ));
        }
    } else {
        out.push_str(&format!(
            "economic resolution fan for {} — {} maximal cones\n",
            fan.group,
            fan.maximal_cones.len()
        ));
        for c in &fan.maximal_cones {
            out.push_str(&format!("  {c}\n"));
        }
    }
    out
}

pub fn bricks_text(
    group: &GroupType,
    rows: &[(Cone, GBrick, [Monomial; 3])],
    tsv: bool,
) -> String {
    let mut out = String::new();
    if tsv {
        out.push_str("generators\tbrick\tchart_coordinates\n");
        for (cone, brick, coords) in rows {
            let gens: Vec<String> = cone
                .rays()
                .iter()
                .map(|v| ray_pretty(v, cone.scale()))
                .collect();
            let monos: Vec<String> = brick.entries().iter().map(|m| m.to_string()).collect();
            let cs: Vec<String> = coords.iter().map(|m| m.to_string()).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                gens.join(","),
                monos.join(","),
                cs.join(",")
            ));
        }
    } else {
        out.push_str(&format!(
            "bricks for {} — {} maximal cones\n",
            group,
            rows.len()
        ));
        for (cone, brick, coords) in rows {
            let monos: Vec<String> = brick.entries().iter().map(|m| m.to_string()).collect();
            let cs: Vec<String> = coords.iter().map(|m| m.to_string()).collect();
            out.push_str(&format!(
                "  {cone}\n    brick: {{{}}}\n    chart: {{{}}}\n",
                monos.join(", "),
                cs.join(", ")
            ));
        }
    }
    out
}

pub fn chamber_text(group: &GroupType, roots: &RootSet, rays: &[Vec<Int>], tsv: bool) -> String {
    let mut out = String::new();
    if tsv {
        out.push_str("simple_roots\t");
        let rs: Vec<String> = roots.roots.iter().map(|r| r.to_string()).collect();
        out.push_str(&rs.join(","));
        out.push('\n');
        for row in rays {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
    } else {
        out.push_str(&format!("chamber for {}\n  simple roots: ", group));
        let rs: Vec<String> = roots.roots.iter().map(|r| r.to_string()).collect();
        out.push_str(&rs.join(", "));
        out.push_str("\n  rays:\n");
        for row in rays {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
            out.push_str(&format!("    ({})\n", cells.join(",")));
        }
    }
    out
}

pub fn theta_text(t: &SymbolicTheta, tsv: bool) -> String {
    let base: Vec<String> = t.base.values().iter().map(rational_string).collect();
    let dir: Vec<String> = t.direction.values().iter().map(rational_string).collect();
    let conc: Vec<String> = t.concretize().values().iter().map(rational_string).collect();
    if tsv {
        format!(
            "base\t{}\ndirection\t{}\nmultiplier\t{}\nconcrete\t{}\n",
            base.join(","),
            dir.join(","),
            rational_string(&t.multiplier()),
            conc.join(",")
        )
    } else {
        format!(
            "base      = ({})\ndirection = ({})\nm         = {}\ntheta     = ({})\n",
            base.join(", "),
            dir.join(", "),
            rational_string(&t.multiplier()),
            conc.join(", ")
        )
    }
}
