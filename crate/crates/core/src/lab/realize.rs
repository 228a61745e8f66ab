//! The nilpotent-orbit irreducibles realized on Y = G2^F/(S,S)^F.
//!
//! S^F = {(+-1 + x1 e, y0 + y1 e; z1 e, +-1 + w1 e)} has derived subgroup
//! (S,S)^F = {(1 + x e, y e; 0, 1 - x e)}, and `s -> (x0, x0 y0, x0 z1)`
//! identifies the quotient with {+-1} x F_q x F_q. Its characters are
//! `lambda_(e,a,b)(s) = x0^e psi_a(x0 y0) psi_b(x0 z1)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use super::variety::{is_homomorphism, parent_generators, SignedRoot};
use crate::chartab::{induce, inner_product_int, CharacterTable, ClassFunction};
use crate::cyclo::CycCtx;
use crate::error::{verify_fail, Result};
use crate::gf::{FieldCtx, Fq};
use crate::group::{derived_subgroup, named_subgroup, GroupTable, Mat2, SubgroupName};

fn lambda_root(k: &FieldCtx, (e, a, b): (u8, Fq, Fq), s: &Mat2) -> SignedRoot {
    let x0 = s.a.r0;
    let sign = e % 2 == 1 && x0 != Fq::ONE;
    let arg = k.add(k.mul(a, k.mul(x0, s.b.r0)), k.mul(b, k.mul(x0, s.c.r1)));
    (sign, k.psi_exponent(Fq::ONE, arg))
}

/// `lambda_(e,a,b)` as a class function on a table of S^F.
pub fn abelianization_character(
    sf: &GroupTable,
    cyc: &CycCtx,
    (e, a, b): (u8, Fq, Fq),
) -> ClassFunction {
    let k = sf.field();
    let step = cyc.m() / k.p();
    ClassFunction::from_reps(sf, format!("lambda({e},{a},{b})"), |r| {
        let (sign, j) = lambda_root(k, (e, a, b), sf.element(r));
        let v = cyc.zeta_pow(step * j);
        if sign {
            -v
        } else {
            v
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizedCharacter {
    pub e: u8,
    pub a: u32,
    pub b: u32,
    pub degree: i64,
    pub norm: i64,
    /// Label of the equal row of the character table.
    pub table_row: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub sf_order: usize,
    pub derived_order: usize,
    pub derived_matches_shape: bool,
    /// All lambda are homomorphisms, trivial on (S,S)^F, pairwise distinct,
    /// and there are |S^F/(S,S)^F| of them.
    pub linear_characters_ok: bool,
    pub admissible_count: usize,
    pub realized: Vec<RealizedCharacter>,
    pub all_degree_ok: bool,
    pub all_irreducible: bool,
    pub pairwise_distinct: bool,
    pub matches_table: bool,
    pub same_orbit_equal: bool,
    /// `Ind_{(S,S)}(1)` equals the sum of `Ind_{S}(lambda)` over all lambda.
    pub h0_decomposition_ok: bool,
    /// Multiplicity of each realized character in the permutation character
    /// of Y.
    pub h0_multiplicities: Vec<i64>,
}

impl Realization {
    pub fn passed(&self, q: u32) -> bool {
        self.linear_characters_ok
            && self.derived_matches_shape
            && self.realized.len() == 4 * q as usize
            && self.all_degree_ok
            && self.all_irreducible
            && self.pairwise_distinct
            && self.matches_table
            && self.same_orbit_equal
            && self.h0_decomposition_ok
            && self.h0_multiplicities.iter().all(|&m| m >= 1)
    }
}

/// Induces `lambda_(e,a,b)` for `b` in {1, smallest non-square} and all
/// `(e, a)`, and compares the results with the degree-(q^2 - 1)/2 rows of
/// `table`.
pub fn y_realization(g2f: &Arc<GroupTable>, table: &CharacterTable) -> Result<Realization> {
    let k = g2f.field().clone();
    let q = k.q() as i64;
    let p = k.p();
    let cyc = table.cyc();
    let sf = named_subgroup(g2f, SubgroupName::SF)?;
    let ss = derived_subgroup(&sf);
    let derived_matches_shape = ss.members() == named_subgroup(g2f, SubgroupName::SS)?.members();
    let sf_table = sf.to_table()?;
    let ss_table = ss.to_table()?;

    let mut all_params: Vec<(u8, Fq, Fq)> = Vec::new();
    for e in 0..2u8 {
        for a in k.elements() {
            for b in k.elements() {
                all_params.push((e, a, b));
            }
        }
    }

    let gens = parent_generators(g2f, &sf_table)?;
    let mut linear_characters_ok = all_params.len() * ss.order() == sf.order();
    let mut seen_values = BTreeSet::new();
    for &par in &all_params {
        let f = |m: &Mat2| lambda_root(&k, par, m);
        linear_characters_ok &= is_homomorphism(g2f, sf.members(), &gens, p, &f);
        linear_characters_ok &= ss
            .members()
            .iter()
            .all(|&x| f(g2f.element(x)) == (false, 0));
        let vals: Vec<SignedRoot> = sf.members().iter().map(|&x| f(g2f.element(x))).collect();
        linear_characters_ok &= seen_values.insert(vals);
    }

    // admissible: the restriction to (1, 0; x e, 1) is a nontrivial psi
    let admissible: Vec<(u8, Fq, Fq)> = all_params
        .iter()
        .copied()
        .filter(|&par| {
            k.elements().any(|x| {
                let u = Mat2::from_coords([
                    Fq::ONE,
                    Fq::ZERO,
                    Fq::ZERO,
                    Fq::ONE,
                    Fq::ZERO,
                    Fq::ZERO,
                    x,
                    Fq::ZERO,
                ]);
                lambda_root(&k, par, &u) != (false, 0)
            })
        })
        .collect();

    let ind = |par: (u8, Fq, Fq)| -> Result<ClassFunction> {
        let lam = abelianization_character(&sf_table, cyc, par);
        induce(&sf_table, g2f, &lam)
    };

    let target_deg = (q * q - 1) / 2;
    let n0 = k.smallest_nonsquare();
    let mut realized = Vec::new();
    let mut chars = Vec::new();
    for &(e, a, b) in &admissible {
        if b != Fq::ONE && b != n0 {
            continue;
        }
        let c = ind((e, a, b))?;
        let degree = c.degree(g2f)?;
        let norm = inner_product_int(g2f, &c, &c)?;
        let table_row = table
            .position(&c)
            .map(|i| table.irreducibles()[i].label().to_string());
        realized.push(RealizedCharacter {
            e,
            a: a.index() as u32,
            b: b.index() as u32,
            degree,
            norm,
            table_row,
        });
        chars.push(c);
    }
    let all_degree_ok = realized.iter().all(|r| r.degree == target_deg);
    let all_irreducible = realized.iter().all(|r| r.norm == 1);
    let distinct: BTreeSet<_> = chars.iter().map(|c| c.values().to_vec()).collect();
    let pairwise_distinct = distinct.len() == chars.len();
    let degrees = table.degrees(g2f)?;
    let table_rows: BTreeSet<_> = table
        .irreducibles()
        .iter()
        .zip(&degrees)
        .filter(|(_, &d)| d == target_deg)
        .map(|(c, _)| c.values().to_vec())
        .collect();
    let matches_table = table_rows == distinct;

    // conjugation by diag(x, 1/x) moves (e, a, b) to (e, a x^-2, b x^2)
    let mut same_orbit_equal = true;
    for &(e, a, b) in &admissible {
        let base = ind((e, a, b))?;
        for x in k.units() {
            let x2 = k.mul(x, x);
            let moved = (e, k.mul(a, k.inv(x2)?), k.mul(b, x2));
            same_orbit_equal &= ind(moved)?.values() == base.values();
        }
    }

    let perm_y = induce(&ss_table, g2f, &ClassFunction::trivial(&ss_table, cyc))?;
    let mut sum: Option<ClassFunction> = None;
    for &par in &all_params {
        let c = ind(par)?;
        sum = Some(match sum {
            Some(s) => s.add(&c)?,
            None => c,
        });
    }
    let sum = sum.ok_or_else(|| verify_fail("no linear characters"))?;
    let h0_decomposition_ok = sum.values() == perm_y.values();
    let h0_multiplicities = chars
        .iter()
        .map(|c| inner_product_int(g2f, &perm_y, c))
        .collect::<Result<_>>()?;

    Ok(Realization {
        sf_order: sf.order(),
        derived_order: ss.order(),
        derived_matches_shape,
        linear_characters_ok,
        admissible_count: admissible.len(),
        realized,
        all_degree_ok,
        all_irreducible,
        pairwise_distinct,
        matches_table,
        same_orbit_equal,
        h0_decomposition_ok,
        h0_multiplicities,
    })
}
