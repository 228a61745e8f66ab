//! Degree census of G2^F and the orbits of the characters chi_psi(k).

use std::sync::Arc;

use serde::Serialize;

use crate::chartab::nchar_action;
use crate::error::{verify_fail, Error, Result};
use crate::gf::{FieldCtx, Fq};
use crate::group::{named_subgroup, GroupTable, Mat2, SubgroupHandle, SubgroupName};

/// One row of the census: `count` irreducibles of degree `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub dim: i64,
    pub count: i64,
    pub dim_formula: &'static str,
    pub count_formula: &'static str,
}

fn odd_q(q: u64) -> Result<i64> {
    Ok(FieldCtx::with_order(q)?.q() as i64)
}

fn rows(q: i64, last_count: i64, last_formula: &'static str) -> Vec<DimRow> {
    let row = |dim, count, dim_formula, count_formula| DimRow {
        dim,
        count,
        dim_formula,
        count_formula,
    };
    vec![
        row(1, 1, "1", "1"),
        row(q, 1, "q", "1"),
        row(q + 1, (q - 3) / 2, "q+1", "(q-3)/2"),
        row((q + 1) / 2, 2, "(q+1)/2", "2"),
        row(q - 1, (q - 1) / 2, "q-1", "(q-1)/2"),
        row((q - 1) / 2, 2, "(q-1)/2", "2"),
        row(q * q + q, (q - 1) * (q - 1) / 2, "q^2+q", "(q-1)^2/2"),
        row(q * q - q, (q * q - 1) / 2, "q^2-q", "(q^2-1)/2"),
        row((q * q - 1) / 2, last_count, "(q^2-1)/2", last_formula),
    ]
}

/// The corrected census of irreducible degrees of G2^F.
pub fn dim_table(q: u64) -> Result<Vec<DimRow>> {
    let q = odd_q(q)?;
    Ok(rows(q, 4 * q, "4q"))
}

/// The census with `2q` in the last row, as originally tabulated.
pub fn dim_table_original(q: u64) -> Result<Vec<DimRow>> {
    let q = odd_q(q)?;
    Ok(rows(q, 2 * q, "2q"))
}

/// `(sum of counts, sum of count * dim^2)`.
pub fn census_sums(rows: &[DimRow]) -> (i64, i64) {
    rows.iter().fold((0, 0), |(c, s), r| {
        (c + r.count, s + r.count * r.dim * r.dim)
    })
}

/// `2q ((q^2 - 1)/2)^2`, the shortfall of the original census.
pub fn original_deficit(q: u64) -> i64 {
    let q = q as i64;
    let d = (q * q - 1) / 2;
    2 * q * d * d
}

/// `chi_psi(k)(a, b, c) = psi_1(k c)`.
pub fn chi_psi(k: Fq) -> [Fq; 3] {
    [Fq::ZERO, Fq::ZERO, k]
}

/// Stabilizer in G^F of chi_psi(k), by brute force over G^F.
pub fn stabilizer_of_chi_psi(g2f: &Arc<GroupTable>, k: Fq) -> Result<SubgroupHandle> {
    if k.is_zero() {
        return Err(Error::NotUnit);
    }
    let field = g2f.field();
    let gf = named_subgroup(g2f, SubgroupName::GfEmbedded)?;
    let chi = chi_psi(k);
    let members = gf
        .members()
        .iter()
        .copied()
        .filter(|&g| nchar_action(field, g2f.element(g), chi) == chi)
        .collect();
    SubgroupHandle::new(g2f.clone(), members, format!("Stab(chi_psi({k}))"))
}

/// Whether `h` is exactly `{(s, y; 0, s) : s = +-1, y in F_q}`.
pub fn stabilizer_shape(h: &SubgroupHandle) -> bool {
    let g = h.parent();
    let k: &FieldCtx = g.field();
    let mut expected: Vec<u32> = Vec::new();
    for s in [Fq::ONE, k.neg(Fq::ONE)] {
        for y in k.elements() {
            match g.id_of(&Mat2::from_field(s, y, Fq::ZERO, s)) {
                Some(id) => expected.push(id),
                None => return false,
            }
        }
    }
    expected.sort_unstable();
    expected == h.members()
}

/// G^F-orbits on `{chi_psi(k) : k != 0}`.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitCensus {
    /// Each orbit as the list of its k (field element indices), sorted.
    pub orbits: Vec<Vec<u32>>,
    /// Whether the orbits are exactly the squares and the non-squares.
    pub split_by_square: bool,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub stabilizers_agree: bool,
    pub stabilizer_shape_ok: bool,
    /// Orbits times stabilizer characters: the number of irreducibles of
    /// degree (q^2 - 1)/2.
    pub induced_count: usize,
}

impl OrbitCensus {
    pub fn passed(&self, q: u32) -> bool {
        self.orbits.len() == 2
            && self.orbits.iter().all(|o| o.len() == (q as usize - 1) / 2)
            && self.split_by_square
            && self.stabilizer_order == 2 * q as usize
            && self.stabilizers_agree
            && self.stabilizer_shape_ok
            && self.induced_count == 4 * q as usize
    }
}

pub fn orbit_census(g2f: &Arc<GroupTable>) -> Result<OrbitCensus> {
    let field = g2f.field().clone();
    let q = field.q();
    let gf = named_subgroup(g2f, SubgroupName::GfEmbedded)?;
    let mut assigned = vec![false; q as usize];
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for k in field.units() {
        if assigned[k.index()] {
            continue;
        }
        let mut orbit: Vec<u32> = Vec::new();
        for &g in gf.members() {
            let img = nchar_action(&field, g2f.element(g), chi_psi(k));
            if img[0].is_zero() && img[1].is_zero() && !assigned[img[2].index()] {
                assigned[img[2].index()] = true;
                orbit.push(img[2].index() as u32);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let square = |i: u32| field.is_square(Fq(i as u8));
    let mut split_by_square = true;
    for o in &orbits {
        let first = square(o[0])?;
        for &i in o {
            split_by_square &= square(i)? == first;
        }
    }
    split_by_square &= orbits.len() == 2;

    let stabs: Vec<SubgroupHandle> = field
        .units()
        .map(|k| stabilizer_of_chi_psi(g2f, k))
        .collect::<Result<_>>()?;
    let stabilizers_agree = stabs.iter().all(|s| s.members() == stabs[0].members());
    let stabilizer_shape_ok = stabs.iter().all(stabilizer_shape);
    if !stabs[0].is_abelian() {
        return Err(verify_fail("stabilizer of chi_psi is not abelian"));
    }
    let stabilizer_order = stabs[0].order();
    Ok(OrbitCensus {
        orbit_size: orbits.first().map_or(0, Vec::len),
        induced_count: orbits.len() * stabilizer_order,
        orbits,
        split_by_square,
        stabilizer_order,
        stabilizers_agree,
        stabilizer_shape_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_identities() {
        for q in [3u64, 5, 7, 9, 11] {
            let (count, sq) = census_sums(&dim_table(q).unwrap());
            assert_eq!(sq, (q * q * q * q * (q * q - 1)) as i64);
            let (count0, sq0) = census_sums(&dim_table_original(q).unwrap());
            assert_eq!(count - count0, 2 * q as i64);
            assert_eq!(sq - sq0, original_deficit(q));
        }
        assert_eq!(census_sums(&dim_table(3).unwrap()), (25, 648));
        assert_eq!(census_sums(&dim_table(5).unwrap()), (49, 15000));
        assert_eq!(original_deficit(3), 96);
    }

    #[test]
    fn rejects_bad_q() {
        assert_eq!(dim_table(4), Err(Error::EvenCharacteristic(2)));
        assert_eq!(dim_table(6), Err(Error::NotPrimePower(6)));
    }
}
