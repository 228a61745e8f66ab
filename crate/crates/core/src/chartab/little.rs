//! The little-group construction for G2^F = G^F x| N.
//!
//! Characters of N = F_q^3 are `chi_(u,v,w)(a, b, c) = psi_1(ua + vb + wc)`,
//! indexed by `(u q + v) q + w`. For each G^F-orbit with stabilizer H, an
//! irreducible rho of H gives `theta = Ind_{HN}^{G2F}(rho x chi)`, where
//! `(rho x chi)(h n) = rho(h) chi(n)`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{dixon_table, CharacterTable, ClassFunction, Method};
use crate::cyclo::{CycCtx, ZetaSum};
use crate::error::{verify_fail, Result};
use crate::gf::{FieldCtx, Fq};
use crate::group::{
    n_coords, n_element, named_subgroup, GroupTable, Mat2, SubgroupHandle, SubgroupName,
};

/// Which family an irreducible of G2^F belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IrrepKind {
    /// Inflated from G^F: the trivial character.
    Trivial,
    /// Inflated from G^F, degree q.
    Steinberg,
    /// Inflated from G^F, degree q + 1.
    PrincipalSeries,
    /// Inflated from G^F, degree (q + 1)/2.
    HalfPrincipal,
    /// Inflated from G^F, degree q - 1.
    Discrete,
    /// Inflated from G^F, degree (q - 1)/2.
    HalfDiscrete,
    /// Split semisimple N-orbit, degree q^2 + q.
    Split,
    /// Nonsplit semisimple N-orbit, degree q^2 - q.
    Nonsplit,
    /// Orbit of chi_psi(k) with k a square, degree (q^2 - 1)/2.
    NilpotentSquare,
    /// Orbit of chi_psi(k) with k a non-square, degree (q^2 - 1)/2.
    NilpotentNonsquare,
}

impl IrrepKind {
    pub fn is_nilpotent(self) -> bool {
        matches!(
            self,
            IrrepKind::NilpotentSquare | IrrepKind::NilpotentNonsquare
        )
    }
}

/// Type of a G^F-orbit on the characters of N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    Trivial,
    Split,
    Nonsplit,
    NilpotentSquare,
    NilpotentNonsquare,
}

/// A G^F-orbit on N-characters.
#[derive(Clone, Debug, Serialize)]
pub struct NOrbit {
    /// Smallest index in the orbit.
    pub rep_index: usize,
    pub rep: [u32; 3],
    pub size: usize,
    pub kind: OrbitKind,
    /// Stabilizer of the representative, as ids in G2^F.
    #[serde(skip)]
    pub stabilizer: Vec<u32>,
    pub stabilizer_order: usize,
    #[serde(skip)]
    pub members: Vec<usize>,
}

pub fn nchar_index(q: u32, chi: [Fq; 3]) -> usize {
    let q = q as usize;
    (chi[0].index() * q + chi[1].index()) * q + chi[2].index()
}

pub fn nchar_from_index(q: u32, idx: usize) -> [Fq; 3] {
    let q = q as usize;
    [
        Fq((idx / (q * q)) as u8),
        Fq((idx / q % q) as u8),
        Fq((idx % q) as u8),
    ]
}

/// `Tr(ua + vb + wc)`, so that `chi(n) = zeta_p^exponent`.
pub fn nchar_exponent(k: &FieldCtx, chi: [Fq; 3], n: (Fq, Fq, Fq)) -> u32 {
    let s = k.add(
        k.add(k.mul(chi[0], n.0), k.mul(chi[1], n.1)),
        k.mul(chi[2], n.2),
    );
    k.psi_exponent(Fq::ONE, s)
}

/// `(g chi)(n) = chi(g^-1 n g)` for `g` in G^F.
pub fn nchar_action(k: &FieldCtx, g: &Mat2, chi: [Fq; 3]) -> [Fq; 3] {
    let gi = g.inverse_sl(k);
    let basis = [
        (Fq::ONE, Fq::ZERO, Fq::ZERO),
        (Fq::ZERO, Fq::ONE, Fq::ZERO),
        (Fq::ZERO, Fq::ZERO, Fq::ONE),
    ];
    basis.map(|(a, b, c)| {
        let n = gi.mul(&n_element(k, a, b, c), k).mul(g, k);
        let (a1, b1, c1) = n_coords(&n);
        k.add(
            k.add(k.mul(chi[0], a1), k.mul(chi[1], b1)),
            k.mul(chi[2], c1),
        )
    })
}

/// All G^F-orbits on N-characters, ordered by representative index.
pub fn n_orbits(g2f: &Arc<GroupTable>) -> Result<Vec<NOrbit>> {
    let k = g2f.field().clone();
    let q = k.q();
    let gf = named_subgroup(g2f, SubgroupName::GfEmbedded)?;
    let total = (q as usize).pow(3);
    let mut seen = vec![false; total];
    let mut orbits = Vec::new();
    let nil_square = nchar_index(q, [Fq::ZERO, Fq::ZERO, Fq::ONE]);
    for idx in 0..total {
        if seen[idx] {
            continue;
        }
        let chi = nchar_from_index(q, idx);
        let mut members = Vec::new();
        let mut stabilizer = Vec::new();
        for &g in gf.members() {
            let img = nchar_index(q, nchar_action(&k, g2f.element(g), chi));
            if img == idx {
                stabilizer.push(g);
            }
            if !seen[img] {
                seen[img] = true;
                members.push(img);
            }
        }
        members.sort_unstable();
        if members.len() * stabilizer.len() != gf.order() {
            return Err(verify_fail(format!(
                "orbit of N-character {idx}: {} * {} != |G^F|",
                members.len(),
                stabilizer.len()
            )));
        }
        let s = stabilizer.len() as u32;
        let kind = if s as usize == gf.order() {
            OrbitKind::Trivial
        } else if s == q - 1 {
            OrbitKind::Split
        } else if s == q + 1 {
            OrbitKind::Nonsplit
        } else if s == 2 * q {
            if members.contains(&nil_square) {
                OrbitKind::NilpotentSquare
            } else {
                OrbitKind::NilpotentNonsquare
            }
        } else {
            return Err(verify_fail(format!("unexpected stabilizer order {s}")));
        };
        orbits.push(NOrbit {
            rep_index: idx,
            rep: chi.map(|x| x.index() as u32),
            size: members.len(),
            kind,
            stabilizer_order: stabilizer.len(),
            stabilizer,
            members,
        });
    }
    if orbits.iter().map(|o| o.size).sum::<usize>() != total {
        return Err(verify_fail("orbits do not partition the dual of N"));
    }
    Ok(orbits)
}

fn inflated_kind(q: i64, degree: i64, principal: bool) -> Result<IrrepKind> {
    Ok(match (degree, principal) {
        (1, true) => IrrepKind::Trivial,
        (d, true) if d == q => IrrepKind::Steinberg,
        (d, true) if d == q + 1 => IrrepKind::PrincipalSeries,
        (d, true) if 2 * d == q + 1 => IrrepKind::HalfPrincipal,
        (d, false) if d == q - 1 => IrrepKind::Discrete,
        (d, false) if 2 * d == q - 1 => IrrepKind::HalfDiscrete,
        _ => {
            return Err(verify_fail(format!(
                "unexpected irreducible of G^F of degree {degree}"
            )))
        }
    })
}

fn orbit_characters(
    g2f: &Arc<GroupTable>,
    cyc: &CycCtx,
    orbit: &NOrbit,
) -> Result<Vec<(ClassFunction, IrrepKind)>> {
    let k = g2f.field().clone();
    let q = k.q();
    let p = k.p();
    let chi = nchar_from_index(q, orbit.rep_index);
    for &h in &orbit.stabilizer {
        if nchar_action(&k, g2f.element(h), chi) != chi {
            return Err(verify_fail("stabilizer does not fix its character"));
        }
    }
    let h_table = SubgroupHandle::new(g2f.clone(), orbit.stabilizer.clone(), "stab")?.to_table()?;
    let rho_table = dixon_table(&h_table, cyc, u64::MAX)?;

    // for each class of G2F: (class of h in H, exponent of chi(n)) -> count,
    // over members y = h n of the class lying in HN
    let counts: Vec<HashMap<(usize, u32), i64>> = g2f
        .classes()
        .iter()
        .map(|class| {
            let mut m: HashMap<(usize, u32), i64> = HashMap::new();
            for &y in &class.members {
                let ym = g2f.element(y);
                let h = ym.reduce();
                if let Some(hid) = h_table.id_of(&h) {
                    let n = h.inverse_sl(&k).mul(ym, &k);
                    let j = nchar_exponent(&k, chi, n_coords(&n));
                    *m.entry((h_table.class_of(hid), j)).or_default() += 1;
                }
            }
            m
        })
        .collect();
    let hn_order = BigInt::from(h_table.order() * (q as usize).pow(3));
    let step = cyc.m() / p;

    let u_ids: Vec<u32> = k
        .elements()
        .map(|x| {
            h_table
                .id_of(&Mat2::from_field(Fq::ONE, x, Fq::ZERO, Fq::ONE))
                .unwrap_or(u32::MAX)
        })
        .collect();

    let mut out = Vec::new();
    for (j, rho) in rho_table.irreducibles().iter().enumerate() {
        let values = g2f
            .classes()
            .iter()
            .zip(&counts)
            .map(|(class, m)| {
                let mut keys: Vec<_> = m.keys().copied().collect();
                keys.sort_unstable();
                let mut acc = ZetaSum::new(cyc);
                for key in keys {
                    let x = rho.value(key.0).scale(&BigInt::from(m[&key]));
                    acc.add_shifted(&x, step * key.1);
                }
                acc.finish()
                    .scale(&BigInt::from(class.centralizer_order))
                    .div_int(&hn_order)
            })
            .collect();
        let degree = rho.degree(&h_table)?;
        let kind = match orbit.kind {
            OrbitKind::Trivial => {
                let principal = u_ids.iter().all(|&u| u != u32::MAX) && {
                    let mut s = cyc.zero();
                    for &u in &u_ids {
                        s = &s + rho.value(h_table.class_of(u));
                    }
                    !s.is_zero()
                };
                inflated_kind(q as i64, degree, principal)?
            }
            OrbitKind::Split => IrrepKind::Split,
            OrbitKind::Nonsplit => IrrepKind::Nonsplit,
            OrbitKind::NilpotentSquare => IrrepKind::NilpotentSquare,
            OrbitKind::NilpotentNonsquare => IrrepKind::NilpotentNonsquare,
        };
        let label = format!("theta(({},{},{}),rho_{j})", chi[0], chi[1], chi[2]);
        out.push((ClassFunction::new(g2f, values, label), kind));
    }
    Ok(out)
}

/// The character table of G2^F by the little-group method, with every row
/// tagged by its [`IrrepKind`].
pub fn little_group_table(g2f: &Arc<GroupTable>, cyc: &CycCtx) -> Result<CharacterTable> {
    let orbits = n_orbits(g2f)?;
    let per_orbit: Vec<Vec<(ClassFunction, IrrepKind)>> = orbits
        .par_iter()
        .map(|o| orbit_characters(g2f, cyc, o))
        .collect::<Result<_>>()?;
    let (rows, kinds): (Vec<_>, Vec<_>) = per_orbit
        .into_iter()
        .flatten()
        .map(|(c, kd)| (c, Some(kd)))
        .unzip();
    if rows.len() != g2f.num_classes() {
        return Err(verify_fail(format!(
            "little-group method produced {} characters for {} classes",
            rows.len(),
            g2f.num_classes()
        )));
    }
    let table = CharacterTable::new(g2f, cyc.clone(), Method::LittleGroup, rows, kinds)?;
    table.verify(g2f)?;
    Ok(table)
}
