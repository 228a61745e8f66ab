//! The named checks run by the command line and the acceptance suite.

use std::collections::BTreeMap;

use serde_json::json;

use super::census::{census_sums, dim_table, dim_table_original, orbit_census, original_deficit};
use super::realize::y_realization;
use super::variety::{
    action_axioms, burnside_orbit_count, k_independence_check, partition_induction_check,
    perm_character, perm_character_by_induction, theorem_decomposition, xbar_build,
};
use super::Lab;
use crate::chartab::n_orbits;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, Fq};
use crate::group::{check_semidirect, g2f_order};
use crate::report::CheckReport;
use crate::ring::REps;

/// Check names in dependency order.
pub const CHECKS: [&str; 9] = [
    "field",
    "ring",
    "group",
    "dim_table",
    "chartab",
    "orbits",
    "variety",
    "theorem",
    "realize",
];

/// Exhaustive field axioms, including `x^q = x`.
pub fn field_axioms(k: &FieldCtx) -> bool {
    let all: Vec<Fq> = k.elements().collect();
    let q = k.q() as u64;
    all.iter().all(|&x| {
        k.add(x, k.neg(x)) == Fq::ZERO
            && k.mul(x, Fq::ONE) == x
            && k.pow(x, q) == x
            && (x.is_zero() || k.inv(x).is_ok_and(|i| k.mul(x, i) == Fq::ONE))
            && all.iter().all(|&y| {
                k.add(x, y) == k.add(y, x)
                    && k.mul(x, y) == k.mul(y, x)
                    && all.iter().all(|&z| {
                        k.add(k.add(x, y), z) == k.add(x, k.add(y, z))
                            && k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z))
                            && k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z))
                    })
            })
    })
}

/// Exhaustive commutative-ring axioms for F_q[e]/(e^2), plus `e^2 = 0` and
/// the unit criterion.
pub fn ring_axioms(k: &FieldCtx) -> bool {
    let all: Vec<REps> = REps::all(k).collect();
    REps::EPS.mul(REps::EPS, k) == REps::ZERO
        && all.iter().all(|&x| {
            x.add(x.neg(k), k) == REps::ZERO
                && x.mul(REps::ONE, k) == x
                && (x.is_unit() == x.invert(k).is_ok())
                && x.invert(k).map_or(true, |i| x.mul(i, k) == REps::ONE)
                && all.iter().all(|&y| {
                    x.mul(y, k) == y.mul(x, k)
                        && x.add(y, k) == y.add(x, k)
                        && all.iter().all(|&z| {
                            x.mul(y.mul(z, k), k) == x.mul(y, k).mul(z, k)
                                && x.mul(y.add(z, k), k) == x.mul(y, k).add(x.mul(z, k), k)
                        })
                })
        })
}

fn degree_census(degs: &[i64]) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for &d in degs {
        *m.entry(d).or_default() += 1;
    }
    m
}

fn check_inner(lab: &Lab, name: &str) -> Result<CheckReport> {
    let q = lab.q();
    let k = lab.field();
    let g = lab.group();
    Ok(match name {
        "field" => {
            let ok = field_axioms(k);
            let traces: std::collections::BTreeSet<Fq> = k.elements().map(|x| k.trace(x)).collect();
            let squares = k.units().filter(|&x| k.is_square(x) == Ok(true)).count();
            CheckReport::new(
                name,
                q,
                ok && traces.len() == k.p() as usize && squares == (q as usize - 1) / 2,
                json!({
                    "p": k.p(), "degree": k.degree(), "modulus": k.modulus(),
                    "axioms": ok, "trace_image": traces.len(), "squares": squares,
                }),
            )
        }
        "ring" => {
            let ok = ring_axioms(k);
            let units = REps::all(k).filter(|x| x.is_unit()).count();
            CheckReport::new(
                name,
                q,
                ok && units == (q * (q - 1)) as usize,
                json!({ "elements": q * q, "units": units, "axioms": ok }),
            )
        }
        "group" => {
            let rows = dim_table(q as u64)?;
            let (count, _) = census_sums(&rows);
            let semi = check_semidirect(g)?;
            let ok = g.order() as u64 == g2f_order(q as u64)
                && g.num_classes() as i64 == count
                && semi.all_pass();
            CheckReport::new(
                name,
                q,
                ok,
                json!({
                    "order": g.order(), "formula": g2f_order(q as u64),
                    "classes": g.num_classes(), "census_count": count,
                    "exponent": g.exponent(), "semidirect": semi,
                }),
            )
        }
        "dim_table" => return dim_table_report(q as u64),
        "chartab" => {
            let t = lab.table()?;
            let degs = t.degrees(g)?;
            let (count, sq) = census_sums(&dim_table(q as u64)?);
            let mut census_rows: BTreeMap<i64, i64> = BTreeMap::new();
            for r in dim_table(q as u64)? {
                *census_rows.entry(r.dim).or_default() += r.count;
            }
            census_rows.retain(|_, c| *c != 0);
            let census: BTreeMap<i64, i64> = degree_census(&degs)
                .into_iter()
                .map(|(d, c)| (d, c as i64))
                .collect();
            let mut ok = t.len() as i64 == count
                && degs.iter().map(|d| d * d).sum::<i64>() == sq
                && census == census_rows;
            let agree = match lab.dixon() {
                Ok(d) => {
                    let same = d.same_rows(t);
                    ok &= same;
                    json!(same)
                }
                Err(Error::Budget { .. }) => json!("skipped (budget)"),
                Err(e) => return Err(e),
            };
            CheckReport::new(
                name,
                q,
                ok,
                json!({
                    "irreducibles": t.len(), "degree_census": census,
                    "sum_deg_sq": degs.iter().map(|d| d * d).sum::<i64>(),
                    "tables_agree": agree,
                }),
            )
        }
        "orbits" => {
            let c = orbit_census(g)?;
            let orbits = n_orbits(g)?;
            CheckReport::new(
                name,
                q,
                c.passed(q),
                json!({ "chi_psi": c, "n_orbits": orbits }),
            )
        }
        "variety" => {
            let axioms = action_axioms(g, q == 3)?;
            let (burnside, orbits) = burnside_orbit_count(g)?;
            let perm = perm_character(g, lab.cyc());
            let by_induction = perm_character_by_induction(g, lab.cyc())?;
            let perm_equal = perm.values() == by_induction.values();
            let kind = k_independence_check(g, lab.cyc())?;
            let part = partition_induction_check(g, lab.cyc())?;
            let points = xbar_build(k).len();
            let ok = axioms.passed()
                && burnside == orbits as i64
                && perm_equal
                && kind.passed()
                && part.passed(q)
                && points == (q * (q * q - 1)) as usize;
            CheckReport::new(
                name,
                q,
                ok,
                json!({
                    "points": points, "action_axioms": axioms,
                    "burnside_orbits": burnside, "orbits_found": orbits,
                    "perm_character": perm.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "perm_equals_induced_from_stabilizers": perm_equal,
                    "k_independence": kind, "partition": part,
                }),
            )
        }
        "theorem" => {
            let th = theorem_decomposition(g, lab.table()?)?;
            CheckReport::new(name, q, th.passed(q), &th)
        }
        "realize" => {
            let r = y_realization(g, lab.table()?)?;
            CheckReport::new(name, q, r.passed(q), &r)
        }
        other => return Err(Error::Verification(format!("unknown check `{other}`"))),
    })
}

/// The census report; needs no group.
pub fn dim_table_report(q: u64) -> Result<CheckReport> {
    let rows = dim_table(q)?;
    let (count, sq) = census_sums(&rows);
    let (_, sq0) = census_sums(&dim_table_original(q)?);
    let order = g2f_order(q) as i64;
    let ok = sq == order && order - sq0 == original_deficit(q);
    Ok(CheckReport::new(
        "dim_table",
        q as u32,
        ok,
        json!({
            "rows": rows, "sum_count": count, "sum_count_dim_sq": sq,
            "group_order": order, "original_sum_count_dim_sq": sq0,
            "original_deficit": order - sq0,
        }),
    ))
}

/// Runs one named check; errors inside the check become a FAIL report.
pub fn run_check(lab: &Lab, name: &str) -> CheckReport {
    check_inner(lab, name).unwrap_or_else(|e| CheckReport::failed(name, lab.q(), &e))
}
