//! The finite variety Xbar_k = {(a0, c0, f) : f^q - f = k, (a0, c0) != 0}.
//!
//! Solutions of `f^q - f = k` form a torsor under F_q, and every group
//! action moves f by an element of F_q, so a point is stored as
//! `(a0, c0, t)` with `f = f* + t` for an unspecified solution f*.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::chartab::{decompose, induce, CharacterTable, ClassFunction, IrrepKind};
use crate::cyclo::{CycCtx, CycNum, ZetaSum};
use crate::error::{verify_fail, Result};
use crate::gf::{FieldCtx, Fq, MAX_FIELD_SIZE};
use crate::group::{named_subgroup, GroupTable, Mat2, SubgroupHandle, SubgroupName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct XbarPoint {
    pub a0: Fq,
    pub c0: Fq,
    pub t: Fq,
}

pub fn xbar_index(q: u32, pt: &XbarPoint) -> usize {
    let q = q as usize;
    (pt.a0.index() * q + pt.c0.index()) * q + pt.t.index()
}

/// All q(q^2 - 1) points, in index order.
pub fn xbar_build(k: &FieldCtx) -> Vec<XbarPoint> {
    let mut out = Vec::new();
    for a0 in k.elements() {
        for c0 in k.elements() {
            if a0.is_zero() && c0.is_zero() {
                continue;
            }
            for t in k.elements() {
                out.push(XbarPoint { a0, c0, t });
            }
        }
    }
    out
}

/// Increment of f under `g = (x0+x1e, y0+y1e; z0+z1e, w0+w1e)`:
/// `a0^2 (x0 z1 - z0 x1) + a0 c0 (x0 w1 + y0 z1 - z0 y1 - w0 x1) + c0^2 (y0 w1 - w0 y1)`.
fn f_shift(k: &FieldCtx, g: &Mat2, a0: Fq, c0: Fq) -> Fq {
    let [x0, y0, z0, w0, x1, y1, z1, w1] = g.coords();
    let m = |a, b| k.mul(a, b);
    let aa = k.sub(m(x0, z1), m(z0, x1));
    let ac = k.sub(k.add(m(x0, w1), m(y0, z1)), k.add(m(z0, y1), m(w0, x1)));
    let cc = k.sub(m(y0, w1), m(w0, y1));
    k.add(k.add(m(m(a0, a0), aa), m(m(a0, c0), ac)), m(m(c0, c0), cc))
}

/// Left action of G2^F.
pub fn xbar_g_action(k: &FieldCtx, g: &Mat2, pt: &XbarPoint) -> XbarPoint {
    let [x0, y0, z0, w0, ..] = g.coords();
    XbarPoint {
        a0: k.add(k.mul(x0, pt.a0), k.mul(y0, pt.c0)),
        c0: k.add(k.mul(z0, pt.a0), k.mul(w0, pt.c0)),
        t: k.add(pt.t, f_shift(k, g, pt.a0, pt.c0)),
    }
}

/// `(s, x)` for `a = (s, 0; x e, s)` in A.
fn a_coords(k: &FieldCtx, a: &Mat2) -> Result<(Fq, Fq)> {
    let s = a.a.r0;
    let ok = (s == Fq::ONE || s == k.neg(Fq::ONE))
        && a.a == a.d
        && a.a.r1.is_zero()
        && a.b.r0.is_zero()
        && a.b.r1.is_zero()
        && a.c.r0.is_zero();
    if !ok {
        return Err(verify_fail("element is not in A"));
    }
    Ok((s, a.c.r1))
}

/// Right action of A: `(a0, c0, t) . (s, 0; x e, s) = (s a0, s c0, t + s x)`.
pub fn xbar_a_action(k: &FieldCtx, a: &Mat2, pt: &XbarPoint) -> Result<XbarPoint> {
    let (s, x) = a_coords(k, a)?;
    Ok(XbarPoint {
        a0: k.mul(s, pt.a0),
        c0: k.mul(s, pt.c0),
        t: k.add(pt.t, k.mul(s, x)),
    })
}

/// `theta_(e,b)(s, x) = s^e psi_b(s x)` on A.
pub fn a_character(k: &FieldCtx, cyc: &CycCtx, e: u8, b: Fq, a: &Mat2) -> Result<CycNum> {
    let (s, x) = a_coords(k, a)?;
    let step = cyc.m() / k.p();
    let v = cyc.zeta_pow(step * k.psi_exponent(b, k.mul(s, x)));
    Ok(if e % 2 == 1 && s != Fq::ONE { -v } else { v })
}

/// Fixed points of `g` on `points`.
pub fn lefschetz(k: &FieldCtx, g: &Mat2, points: &[XbarPoint]) -> i64 {
    points
        .iter()
        .filter(|p| xbar_g_action(k, g, p) == **p)
        .count() as i64
}

/// The permutation character of G2^F on Xbar, by fixed-point counts.
pub fn perm_character(g2f: &GroupTable, cyc: &CycCtx) -> ClassFunction {
    let k = g2f.field();
    let pts = xbar_build(k);
    ClassFunction::from_reps(g2f, "perm(Xbar)", |r| {
        cyc.from_int(lefschetz(k, g2f.element(r), &pts))
    })
}

/// G2^F-orbits on Xbar as point-index lists.
fn g_orbits(g2f: &GroupTable, pts: &[XbarPoint]) -> Vec<Vec<usize>> {
    let k = g2f.field();
    let q = k.q();
    let pos: HashMap<usize, usize> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| (xbar_index(q, p), i))
        .collect();
    let mut seen = vec![false; pts.len()];
    let mut orbits = Vec::new();
    for start in 0..pts.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let p = pts[orbit[i]];
            for &g in g2f.generators() {
                let j = pos[&xbar_index(q, &xbar_g_action(k, g2f.element(g), &p))];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// The permutation character as a sum over orbits of `Ind_{Stab(x)}(1)`.
pub fn perm_character_by_induction(g2f: &Arc<GroupTable>, cyc: &CycCtx) -> Result<ClassFunction> {
    let k = g2f.field().clone();
    let pts = xbar_build(&k);
    let mut total: Option<ClassFunction> = None;
    for orbit in g_orbits(g2f, &pts) {
        let x = pts[orbit[0]];
        let stab: Vec<u32> = (0..g2f.order() as u32)
            .filter(|&g| xbar_g_action(&k, g2f.element(g), &x) == x)
            .collect();
        let h = SubgroupHandle::new(g2f.clone(), stab, "Stab(x)")?.to_table()?;
        let ind = induce(&h, g2f, &ClassFunction::trivial(&h, cyc))?;
        total = Some(match total {
            Some(t) => t.add(&ind)?,
            None => ind,
        });
    }
    let t = total.ok_or_else(|| verify_fail("empty variety"))?;
    Ok(t.with_label("sum Ind(Stab(x), 1)"))
}

/// `(Burnside count, orbits found by search)`. The Burnside average must be
/// an exact integer.
pub fn burnside_orbit_count(g2f: &GroupTable) -> Result<(i64, usize)> {
    let k = g2f.field();
    let pts = xbar_build(k);
    let total: i64 = g2f
        .classes()
        .iter()
        .map(|c| c.size as i64 * lefschetz(k, g2f.element(c.rep), &pts))
        .sum();
    let n = g2f.order() as i64;
    if total % n != 0 {
        return Err(verify_fail(format!(
            "Burnside sum {total} not divisible by {n}"
        )));
    }
    Ok((total / n, g_orbits(g2f, &pts).len()))
}

/// Index of the A-orbit part `Xbar^(a0, c0)` containing `pt`: the smaller of
/// `(a0, c0)` and `(-a0, -c0)`, encoded as `a0 q + c0`.
pub fn part_index(k: &FieldCtx, pt: &XbarPoint) -> usize {
    let q = k.q() as usize;
    let x = (pt.a0.index(), pt.c0.index());
    let y = (k.neg(pt.a0).index(), k.neg(pt.c0).index());
    let (a, c) = x.min(y);
    a * q + c
}

/// `L(g)_theta = (1/|A|) sum_a theta(a^-1) #{x in part : g x a = x}`.
pub fn isotypic_lefschetz(
    k: &FieldCtx,
    cyc: &CycCtx,
    g: &Mat2,
    theta: (u8, Fq),
    part: &[XbarPoint],
    a_elems: &[Mat2],
) -> Result<CycNum> {
    let mut acc = ZetaSum::new(cyc);
    let step = cyc.m() / k.p();
    for a in a_elems {
        let mut fixed = 0i64;
        for p in part {
            if xbar_g_action(k, g, &xbar_a_action(k, a, p)?) == *p {
                fixed += 1;
            }
        }
        if fixed == 0 {
            continue;
        }
        let (s, x) = a_coords(k, &a.inverse_sl(k))?;
        let sign = if theta.0 % 2 == 1 && s != Fq::ONE {
            -1
        } else {
            1
        };
        acc.add_zeta(sign * fixed, step * k.psi_exponent(theta.1, k.mul(s, x)));
    }
    Ok(acc.finish().div_int(&BigInt::from(a_elems.len())))
}

/// Outcome of the part/induction checks.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionCheck {
    pub num_parts: usize,
    pub part_sizes: Vec<usize>,
    pub a_orbit_size: usize,
    pub parts_permuted: bool,
    pub transitive_on_parts: bool,
    pub stabilizer_order: usize,
    pub stabilizer_is_sf: bool,
    pub induced_equals_perm: bool,
    pub isotypic_sums_ok: bool,
    pub proof_value_ok: bool,
}

impl PartitionCheck {
    pub fn passed(&self, q: u32) -> bool {
        let q = q as usize;
        self.num_parts == (q * q - 1) / 2
            && self.part_sizes.iter().all(|&s| s == 2 * q)
            && self.a_orbit_size == 2 * q
            && self.parts_permuted
            && self.transitive_on_parts
            && self.stabilizer_is_sf
            && self.induced_equals_perm
            && self.isotypic_sums_ok
            && self.proof_value_ok
    }
}

fn theta_list(k: &FieldCtx) -> Vec<(u8, Fq)> {
    (0..2u8)
        .flat_map(|e| k.elements().map(move |b| (e, b)))
        .collect()
}

/// Splits Xbar into A-orbit parts, checks that G2^F permutes them
/// transitively with stabilizer S^F, and that inducing the Lefschetz
/// character of one part recovers the full permutation character. Also
/// checks, on every element s of S^F, that the isotypic Lefschetz numbers of
/// the part `(+-1, 0)` sum to its fixed-point count and equal `theta(a')`
/// for `s = u a'`, `a' = (x0, 0; z1 e, x0)`.
pub fn partition_induction_check(g2f: &Arc<GroupTable>, cyc: &CycCtx) -> Result<PartitionCheck> {
    let k = g2f.field().clone();
    let pts = xbar_build(&k);
    let a = named_subgroup(g2f, SubgroupName::A)?;
    let a_elems: Vec<Mat2> = a.members().iter().map(|&i| *g2f.element(i)).collect();

    let mut parts: HashMap<usize, Vec<XbarPoint>> = HashMap::new();
    for p in &pts {
        parts.entry(part_index(&k, p)).or_default().push(*p);
    }
    let mut a_orbit_size = usize::MAX;
    for p in &pts {
        let orbit: BTreeSet<XbarPoint> = a_elems
            .iter()
            .map(|x| xbar_a_action(&k, x, p))
            .collect::<Result<_>>()?;
        if orbit.iter().any(|o| part_index(&k, o) != part_index(&k, p)) {
            return Err(verify_fail("A-orbit leaves its part"));
        }
        a_orbit_size = a_orbit_size.min(orbit.len());
    }
    let mut keys: Vec<usize> = parts.keys().copied().collect();
    keys.sort_unstable();
    let part_sizes: Vec<usize> = keys.iter().map(|i| parts[i].len()).collect();

    let parts_permuted = g2f.generators().iter().all(|&g| {
        parts.values().all(|part| {
            let imgs: BTreeSet<usize> = part
                .iter()
                .map(|p| part_index(&k, &xbar_g_action(&k, g2f.element(g), p)))
                .collect();
            imgs.len() == 1
        })
    });

    let base = XbarPoint {
        a0: Fq::ONE,
        c0: Fq::ZERO,
        t: Fq::ZERO,
    };
    let base_part = part_index(&k, &base);
    let mut reached = BTreeSet::new();
    let mut stab = Vec::new();
    for g in 0..g2f.order() as u32 {
        let img = part_index(&k, &xbar_g_action(&k, g2f.element(g), &base));
        reached.insert(img);
        if img == base_part {
            stab.push(g);
        }
    }
    let transitive_on_parts = reached.len() == parts.len();
    let sf = named_subgroup(g2f, SubgroupName::SF)?;
    let stabilizer_is_sf = stab == sf.members();

    let part0 = &parts[&base_part];
    let sf_table = sf.to_table()?;
    let part_char = ClassFunction::from_reps(&sf_table, "L(part)", |r| {
        cyc.from_int(lefschetz(&k, sf_table.element(r), part0))
    });
    let induced = induce(&sf_table, g2f, &part_char)?;
    let perm = perm_character(g2f, cyc);
    let induced_equals_perm = induced.values() == perm.values();

    let thetas = theta_list(&k);
    let mut isotypic_sums_ok = true;
    let mut proof_value_ok = true;
    for &s in sf.members() {
        let sm = g2f.element(s);
        let mut sum = cyc.zero();
        let x0 = sm.a.r0;
        let a_prime = Mat2::new(
            crate::ring::REps::lift(x0),
            crate::ring::REps::ZERO,
            crate::ring::REps::new(Fq::ZERO, sm.c.r1),
            crate::ring::REps::lift(x0),
        );
        for &th in &thetas {
            let v = isotypic_lefschetz(&k, cyc, sm, th, part0, &a_elems)?;
            if v != a_character(&k, cyc, th.0, th.1, &a_prime)? {
                proof_value_ok = false;
            }
            sum = &sum + &v;
        }
        if sum != cyc.from_int(lefschetz(&k, sm, part0)) {
            isotypic_sums_ok = false;
        }
    }

    Ok(PartitionCheck {
        num_parts: parts.len(),
        part_sizes,
        a_orbit_size,
        parts_permuted,
        transitive_on_parts,
        stabilizer_order: stab.len(),
        stabilizer_is_sf,
        induced_equals_perm,
        isotypic_sums_ok,
        proof_value_ok,
    })
}

/// One irreducible constituent of the permutation character.
#[derive(Clone, Debug, Serialize)]
pub struct Constituent {
    pub label: String,
    pub kind: Option<IrrepKind>,
    pub degree: i64,
    pub multiplicity: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremDecomposition {
    pub constituents: Vec<Constituent>,
    pub total_dimension: i64,
    /// Rows whose multiplicity differs from the expected one.
    pub mismatches: Vec<String>,
    pub nilpotent_constituents: usize,
    /// The sum over (e, b) of `s -> s^e psi_b(z1)` equals the part character
    /// on S^F.
    pub literal_sum_matches: bool,
    /// Whether the functions `s -> s^e psi_b(z1)` are all homomorphisms.
    pub literal_summands_are_characters: bool,
    /// Whether the twisted functions `s -> s^e psi_b(s z1)` are all
    /// homomorphisms, and sum to the same part character.
    pub twisted_summands_are_characters: bool,
    pub twisted_sum_matches: bool,
}

impl TheoremDecomposition {
    pub fn passed(&self, q: u32) -> bool {
        let q = q as i64;
        self.mismatches.is_empty()
            && self.nilpotent_constituents == 4
            && self.total_dimension == q * (q * q - 1)
            && self.literal_sum_matches
            && self.twisted_summands_are_characters
            && self.twisted_sum_matches
    }
}

fn expected_multiplicity(kind: IrrepKind) -> Option<i64> {
    match kind {
        IrrepKind::Trivial | IrrepKind::Steinberg | IrrepKind::HalfPrincipal => Some(1),
        IrrepKind::PrincipalSeries => Some(2),
        IrrepKind::Discrete | IrrepKind::HalfDiscrete | IrrepKind::Split | IrrepKind::Nonsplit => {
            Some(0)
        }
        // four of the 4q nilpotent irreducibles occur, each (q-1)/2 times
        IrrepKind::NilpotentSquare | IrrepKind::NilpotentNonsquare => None,
    }
}

/// `(sign, psi exponent)` of a function `S^F -> {+-1} x <zeta_p>`.
pub(crate) type SignedRoot = (bool, u32);

/// Whether `f` is multiplicative on the subgroup `members`, checked as
/// `f(x g) = f(x) f(g)` for all members x and generators g.
pub(crate) fn is_homomorphism(
    g: &GroupTable,
    members: &[u32],
    gens: &[u32],
    p: u32,
    f: &dyn Fn(&Mat2) -> SignedRoot,
) -> bool {
    let vals: HashMap<u32, SignedRoot> = members.iter().map(|&x| (x, f(g.element(x)))).collect();
    members.iter().all(|&x| {
        gens.iter().all(|&y| {
            let (sx, ex) = vals[&x];
            let (sy, ey) = vals[&y];
            vals[&g.mul(x, y)] == (sx ^ sy, (ex + ey) % p)
        })
    })
}

/// Generators of a subgroup table, as ids of the parent.
pub(crate) fn parent_generators(parent: &GroupTable, sub: &GroupTable) -> Result<Vec<u32>> {
    sub.generators()
        .iter()
        .map(|&i| {
            parent
                .id_of(sub.element(i))
                .ok_or_else(|| verify_fail("subgroup generator missing from parent"))
        })
        .collect()
}

/// Decomposes the permutation character of Xbar against `table` and checks
/// the multiplicities family by family.
pub fn theorem_decomposition(
    g2f: &Arc<GroupTable>,
    table: &CharacterTable,
) -> Result<TheoremDecomposition> {
    let k = g2f.field().clone();
    let q = k.q() as i64;
    let p = k.p();
    let cyc = table.cyc();
    let perm = perm_character(g2f, cyc);
    let dec: HashMap<usize, i64> = decompose(g2f, &perm, table)?.into_iter().collect();
    let degrees = table.degrees(g2f)?;

    let mut constituents = Vec::new();
    let mut mismatches = Vec::new();
    let mut nilpotent_constituents = 0;
    let mut total_dimension = 0;
    for (i, irr) in table.irreducibles().iter().enumerate() {
        let m = dec.get(&i).copied().unwrap_or(0);
        total_dimension += m * degrees[i];
        let kind = table.kind(i);
        let ok = match kind {
            Some(kd) => match expected_multiplicity(kd) {
                Some(e) => m == e,
                None => {
                    if m != 0 {
                        nilpotent_constituents += 1;
                    }
                    m == 0 || (m == (q - 1) / 2 && degrees[i] == (q * q - 1) / 2)
                }
            },
            None => false,
        };
        if !ok {
            mismatches.push(format!("{}: multiplicity {m}", irr.label()));
        }
        if m != 0 {
            constituents.push(Constituent {
                label: irr.label().to_string(),
                kind,
                degree: degrees[i],
                multiplicity: m,
            });
        }
    }

    // the part character of S^F against the claimed sums of linear characters
    let sf = named_subgroup(g2f, SubgroupName::SF)?;
    let part0: Vec<XbarPoint> = xbar_build(&k)
        .into_iter()
        .filter(|pt| pt.c0.is_zero() && (pt.a0 == Fq::ONE || pt.a0 == k.neg(Fq::ONE)))
        .collect();
    let minus = k.neg(Fq::ONE);
    let mut literal_sum_matches = true;
    let mut twisted_sum_matches = true;
    for &s in sf.members() {
        let m = g2f.element(s);
        let fixed = lefschetz(&k, m, &part0);
        let (x0, z1) = (m.a.r0, m.c.r1);
        let mut lit = ZetaSum::new(cyc);
        let mut tw = ZetaSum::new(cyc);
        let step = cyc.m() / p;
        for e in 0..2 {
            let sign = if e == 1 && x0 == minus { -1 } else { 1 };
            for b in k.elements() {
                lit.add_zeta(sign, step * k.psi_exponent(b, z1));
                tw.add_zeta(sign, step * k.psi_exponent(b, k.mul(x0, z1)));
            }
        }
        literal_sum_matches &= lit.finish() == cyc.from_int(fixed);
        twisted_sum_matches &= tw.finish() == cyc.from_int(fixed);
    }
    let gens = parent_generators(g2f, &sf.to_table()?)?;
    let mut literal_summands_are_characters = true;
    let mut twisted_summands_are_characters = true;
    for e in 0..2u8 {
        for b in k.elements() {
            let sign = |m: &Mat2| e == 1 && m.a.r0 == minus;
            let lit = |m: &Mat2| (sign(m), k.psi_exponent(b, m.c.r1));
            let tw = |m: &Mat2| (sign(m), k.psi_exponent(b, k.mul(m.a.r0, m.c.r1)));
            literal_summands_are_characters &= is_homomorphism(g2f, sf.members(), &gens, p, &lit);
            twisted_summands_are_characters &= is_homomorphism(g2f, sf.members(), &gens, p, &tw);
        }
    }

    Ok(TheoremDecomposition {
        constituents,
        total_dimension,
        mismatches,
        nilpotent_constituents,
        literal_sum_matches,
        literal_summands_are_characters,
        twisted_summands_are_characters,
        twisted_sum_matches,
    })
}

/// Outcome of the independence-of-k checks.
#[derive(Clone, Debug, Serialize)]
pub struct KIndependence {
    /// Torsor model: permutation characters built per k coincide.
    pub torsor_equal: bool,
    /// Whether the explicit model over F_{q^p} was built (q^p small enough).
    pub explicit_checked: bool,
    /// Solutions of `f^q - f = k` per k in the explicit model.
    pub solutions_per_k: Vec<usize>,
    /// Explicit model: shifts preserve each solution set and all
    /// permutation characters equal the torsor one.
    pub explicit_equal: bool,
}

impl KIndependence {
    pub fn passed(&self) -> bool {
        self.torsor_equal && self.explicit_equal
    }
}

/// Compares the permutation characters of Xbar_k across k. The torsor model
/// is rebuilt per k; for q prime with q^q within the field budget the
/// variety is also built literally inside F_{q^q}, where
/// `f^q - f = k` has its roots.
pub fn k_independence_check(g2f: &GroupTable, cyc: &CycCtx) -> Result<KIndependence> {
    let k = g2f.field().clone();
    let q = k.q();
    let torsor = perm_character(g2f, cyc);
    let torsor_equal = k
        .units()
        .all(|_| perm_character(g2f, cyc).values() == torsor.values());

    let big_q = (q as u64).checked_pow(q);
    let explicit = k.degree() == 1 && big_q.is_some_and(|n| n <= MAX_FIELD_SIZE as u64);
    let mut solutions_per_k = Vec::new();
    let mut explicit_equal = true;
    if explicit {
        let big = FieldCtx::new(k.p(), q)?;
        let embed = |x: Fq| big.from_int(k.prime_value(x).expect("prime field") as i64);
        for kk in k.units() {
            let target = embed(kk);
            let sols: Vec<Fq> = big
                .elements()
                .filter(|&f| big.sub(big.pow(f, q as u64), f) == target)
                .collect();
            solutions_per_k.push(sols.len());
            if sols.len() != q as usize {
                explicit_equal = false;
                continue;
            }
            let mut vals = Vec::new();
            for c in g2f.classes() {
                let g = g2f.element(c.rep);
                let mut fixed = 0;
                for a0 in k.elements() {
                    for c0 in k.elements() {
                        if a0.is_zero() && c0.is_zero() {
                            continue;
                        }
                        let [x0, y0, z0, w0, ..] = g.coords();
                        let a1 = k.add(k.mul(x0, a0), k.mul(y0, c0));
                        let c1 = k.add(k.mul(z0, a0), k.mul(w0, c0));
                        let shift = embed(f_shift(&k, g, a0, c0));
                        for &f in &sols {
                            let f1 = big.add(f, shift);
                            if big.sub(big.pow(f1, q as u64), f1) != target {
                                explicit_equal = false;
                            }
                            if a1 == a0 && c1 == c0 && f1 == f {
                                fixed += 1;
                            }
                        }
                    }
                }
                vals.push(cyc.from_int(fixed));
            }
            explicit_equal &= vals == torsor.values();
        }
    }
    Ok(KIndependence {
        torsor_equal,
        explicit_checked: explicit,
        solutions_per_k,
        explicit_equal,
    })
}

/// Outcome of the action-axiom checks on Xbar.
#[derive(Clone, Debug, Serialize)]
pub struct ActionAxioms {
    pub exhaustive: bool,
    /// `(g h) x = g (h x)`.
    pub g_action: bool,
    /// `x (a b) = (x a) b`.
    pub a_action: bool,
    /// `g (x a) = (g x) a`.
    pub commute: bool,
    /// Every A-orbit has 2q points.
    pub a_orbits_free: bool,
}

impl ActionAxioms {
    pub fn passed(&self) -> bool {
        self.g_action && self.a_action && self.commute && self.a_orbits_free
    }
}

/// Checks the action axioms on every point. With `exhaustive`, `g` ranges
/// over all of G2^F; otherwise over a generating set (which suffices for the
/// action property given that `h` ranges over generators too).
pub fn action_axioms(g2f: &Arc<GroupTable>, exhaustive: bool) -> Result<ActionAxioms> {
    let k = g2f.field().clone();
    let pts = xbar_build(&k);
    let a = named_subgroup(g2f, SubgroupName::A)?;
    let outer: Vec<u32> = if exhaustive {
        (0..g2f.order() as u32).collect()
    } else {
        g2f.generators().to_vec()
    };
    let mut g_action = pts
        .iter()
        .all(|p| xbar_g_action(&k, &Mat2::IDENTITY, p) == *p);
    for &x in &outer {
        for &y in g2f.generators() {
            let (gx, gy, gxy) = (g2f.element(x), g2f.element(y), g2f.element(g2f.mul(x, y)));
            g_action &= pts.iter().all(|p| {
                xbar_g_action(&k, gxy, p) == xbar_g_action(&k, gx, &xbar_g_action(&k, gy, p))
            });
        }
    }
    let mut a_action = true;
    let mut commute = true;
    for &x in a.members() {
        let ax = g2f.element(x);
        for &y in a.members() {
            let (ay, axy) = (g2f.element(y), g2f.element(g2f.mul(x, y)));
            for p in &pts {
                a_action &= xbar_a_action(&k, axy, p)?
                    == xbar_a_action(&k, ay, &xbar_a_action(&k, ax, p)?)?;
            }
        }
        for &s in &outer {
            let gs = g2f.element(s);
            for p in &pts {
                commute &= xbar_g_action(&k, gs, &xbar_a_action(&k, ax, p)?)
                    == xbar_a_action(&k, ax, &xbar_g_action(&k, gs, p))?;
            }
        }
    }
    let mut a_orbits_free = true;
    for p in &pts {
        let orbit: BTreeSet<XbarPoint> = a
            .members()
            .iter()
            .map(|&x| xbar_a_action(&k, g2f.element(x), p))
            .collect::<Result<_>>()?;
        a_orbits_free &= orbit.len() == 2 * k.q() as usize;
    }
    Ok(ActionAxioms {
        exhaustive,
        g_action,
        a_action,
        commute,
        a_orbits_free,
    })
}
