//! Fully enumerated matrix groups over F_q and R_q = F_q[e]/(e^2).
//!
//! Every group here is a subgroup of SL2(R_q) and stores its elements as
//! [`Mat2`] values. Groups over F_q are the elements with zero e-part, so the
//! lift F_q -> R_q is literally the identity on stored matrices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{verify_fail, Error, Result};
use crate::gf::{FieldCtx, Fq};
use crate::ring::REps;

/// Default ceiling on enumerated group orders.
pub const DEFAULT_GROUP_BUDGET: u64 = 2_000_000;

/// A 2x2 matrix over R_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Mat2 {
    pub a: REps,
    pub b: REps,
    pub c: REps,
    pub d: REps,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: REps::ONE,
        b: REps::ZERO,
        c: REps::ZERO,
        d: REps::ONE,
    };

    pub fn new(a: REps, b: REps, c: REps, d: REps) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Matrix over F_q, embedded with zero e-part.
    pub fn from_field(a: Fq, b: Fq, c: Fq, d: Fq) -> Self {
        Mat2::new(REps::lift(a), REps::lift(b), REps::lift(c), REps::lift(d))
    }

    /// Coordinates `(a0, b0, c0, d0, a1, b1, c1, d1)`.
    pub fn coords(&self) -> [Fq; 8] {
        [
            self.a.r0, self.b.r0, self.c.r0, self.d.r0, self.a.r1, self.b.r1, self.c.r1, self.d.r1,
        ]
    }

    pub fn from_coords(c: [Fq; 8]) -> Self {
        Mat2 {
            a: REps::new(c[0], c[4]),
            b: REps::new(c[1], c[5]),
            c: REps::new(c[2], c[6]),
            d: REps::new(c[3], c[7]),
        }
    }

    /// Base-q packing of [`Mat2::coords`]; the key order is lexicographic in
    /// the coordinates.
    #[inline]
    pub fn key(&self, q: u32) -> u32 {
        self.coords()
            .iter()
            .fold(0u32, |acc, x| acc * q + x.0 as u32)
    }

    #[inline]
    pub fn mul(&self, o: &Mat2, k: &FieldCtx) -> Mat2 {
        Mat2 {
            a: self.a.mul(o.a, k).add(self.b.mul(o.c, k), k),
            b: self.a.mul(o.b, k).add(self.b.mul(o.d, k), k),
            c: self.c.mul(o.a, k).add(self.d.mul(o.c, k), k),
            d: self.c.mul(o.b, k).add(self.d.mul(o.d, k), k),
        }
    }

    pub fn det(&self, k: &FieldCtx) -> REps {
        self.a.mul(self.d, k).sub(self.b.mul(self.c, k), k)
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    #[inline]
    pub fn inverse_sl(&self, k: &FieldCtx) -> Mat2 {
        Mat2 {
            a: self.d,
            b: self.b.neg(k),
            c: self.c.neg(k),
            d: self.a,
        }
    }

    /// Reduction mod e, entrywise.
    pub fn reduce(&self) -> Mat2 {
        Mat2::from_field(self.a.r0, self.b.r0, self.c.r0, self.d.r0)
    }

    pub fn is_reduced(&self) -> bool {
        self.coords()[4..].iter().all(|x| x.is_zero())
    }
}

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A conjugacy class of a [`GroupTable`].
#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Smallest element id in the class.
    pub rep: u32,
    pub size: usize,
    pub order: u32,
    pub centralizer_order: u64,
    pub members: Vec<u32>,
}

/// JSON row of the class dump.
#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub id: usize,
    pub size: usize,
    pub element_order: u32,
    /// `a0, b0, c0, d0, a1, b1, c1, d1`, each as a coefficient vector.
    pub rep: Vec<Vec<u32>>,
}

/// An enumerated finite group with its conjugacy classes.
pub struct GroupTable {
    id: u64,
    name: String,
    field: Arc<FieldCtx>,
    elements: Vec<Mat2>,
    index: HashMap<u32, u32>,
    identity: u32,
    gens: Vec<u32>,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    exponent: u32,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("q", &self.field.q())
            .field("order", &self.elements.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl GroupTable {
    /// Builds a table from a complete, closed element list. `gens` must
    /// generate the group; if `None`, a generating set is chosen greedily in
    /// element order.
    pub fn from_elements(
        name: impl Into<String>,
        field: Arc<FieldCtx>,
        mut elements: Vec<Mat2>,
        gens: Option<Vec<Mat2>>,
    ) -> Result<Self> {
        let q = field.q();
        elements.sort_by_key(|m| m.key(q));
        elements.dedup();
        let index: HashMap<u32, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.key(q), i as u32))
            .collect();
        let identity = *index
            .get(&Mat2::IDENTITY.key(q))
            .ok_or_else(|| verify_fail("element list lacks the identity"))?;
        let mut table = GroupTable {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            name: name.into(),
            field,
            elements,
            index,
            identity,
            gens: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            exponent: 1,
        };
        table.gens = match gens {
            Some(g) => g
                .iter()
                .map(|m| {
                    table
                        .id_of(m)
                        .ok_or_else(|| verify_fail("generator not in group"))
                })
                .collect::<Result<_>>()?,
            None => table.greedy_generators(),
        };
        if table.closure(&table.gens).len() != table.order() {
            return Err(verify_fail(format!(
                "{}: generators do not generate the group",
                table.name
            )));
        }
        table.compute_classes();
        Ok(table)
    }

    fn greedy_generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut reached: HashSet<u32> = HashSet::from([self.identity]);
        for id in 0..self.order() as u32 {
            if reached.len() == self.order() {
                break;
            }
            if !reached.contains(&id) {
                gens.push(id);
                reached = self.closure(&gens).into_iter().collect();
            }
        }
        gens
    }

    /// Subgroup generated by `gens`, as a sorted id list.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen: HashSet<u32> = HashSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<u32> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let unassigned = u32::MAX;
        let mut class_of = vec![unassigned; n];
        let gen_pairs: Vec<(u32, u32)> = self.gens.iter().map(|&g| (g, self.inverse(g))).collect();
        let mut raw: Vec<ConjClass> = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != unassigned {
                continue;
            }
            let cid = raw.len() as u32;
            class_of[start as usize] = cid;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(g, gi) in &gen_pairs {
                    let y = self.mul(self.mul(g, x), gi);
                    if class_of[y as usize] == unassigned {
                        class_of[y as usize] = cid;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            let size = members.len();
            raw.push(ConjClass {
                rep: start,
                size,
                order: self.element_order(start),
                centralizer_order: (n / size) as u64,
                members,
            });
        }
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&i| (raw[i].order, raw[i].size, raw[i].rep));
        let mut new_id = vec![0u32; raw.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = new_id[*c as usize];
        }
        let mut slots: Vec<Option<ConjClass>> = raw.into_iter().map(Some).collect();
        self.classes = perm.iter().map(|&i| slots[i].take().unwrap()).collect();
        self.class_of = class_of;
        self.exponent = self.classes.iter().fold(1u32, |acc, c| acc.lcm(&c.order));
    }

    pub fn uid(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn element(&self, id: u32) -> &Mat2 {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn id_of(&self, m: &Mat2) -> Option<u32> {
        self.index.get(&m.key(self.field.q())).copied()
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let m = self.elements[x as usize].mul(&self.elements[y as usize], &self.field);
        self.id_of(&m).expect("product left the group")
    }

    #[inline]
    pub fn inverse(&self, x: u32) -> u32 {
        let m = self.elements[x as usize].inverse_sl(&self.field);
        self.id_of(&m).expect("inverse left the group")
    }

    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut acc = self.identity;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x y x^-1 y^-1`-style commutator `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        let xi = self.inverse(x);
        let yi = self.inverse(y);
        self.mul(self.mul(xi, yi), self.mul(x, y))
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, x: u32) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn identity_class(&self) -> usize {
        self.class_of(self.identity)
    }

    pub fn class_sizes(&self) -> Vec<i64> {
        self.classes.iter().map(|c| c.size as i64).collect()
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of(self.inverse(self.classes[c].rep))
    }

    /// Class of `rep^k` for the representative of class `c`.
    pub fn power_class(&self, c: usize, k: u64) -> usize {
        self.class_of(self.pow(self.classes[c].rep, k))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&g| self.gens.iter().all(|&h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn class_summaries(&self) -> Vec<ClassSummary> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| ClassSummary {
                id: i,
                size: c.size,
                element_order: c.order,
                rep: self
                    .element(c.rep)
                    .coords()
                    .iter()
                    .map(|&x| self.field.coeffs(x))
                    .collect(),
            })
            .collect()
    }

    /// For a table whose elements all lie in `parent`, the parent class of
    /// each of its classes.
    pub fn fusion_into(&self, parent: &GroupTable) -> Result<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| {
                parent
                    .id_of(self.element(c.rep))
                    .map(|id| parent.class_of(id))
                    .ok_or_else(|| verify_fail("class representative missing from parent group"))
            })
            .collect()
    }
}

/// Ceiling on |G2^F| = q^4 (q^2 - 1) before enumeration is attempted.
pub fn g2f_order(q: u64) -> u64 {
    q.pow(4) * (q * q - 1)
}

fn check_budget(q: u64, budget: u64) -> Result<()> {
    let size = g2f_order(q);
    if size > budget {
        return Err(Error::Budget {
            what: "|SL2(F_q[e]/e^2)|",
            size,
            limit: budget,
        });
    }
    Ok(())
}

/// F_p-basis of F_q: the elements whose coefficient vector is a unit vector.
fn additive_basis(k: &FieldCtx) -> Vec<Fq> {
    (0..k.degree()).map(|i| Fq(k.p().pow(i) as u8)).collect()
}

/// Lifted elementary matrices generating SL2(F_q).
fn sl2_generators(k: &FieldCtx) -> Vec<Mat2> {
    let (o, z) = (Fq::ONE, Fq::ZERO);
    let mut gens = Vec::new();
    for x in additive_basis(k) {
        gens.push(Mat2::from_field(o, x, z, o));
        gens.push(Mat2::from_field(o, z, x, o));
    }
    gens
}

/// SL2(F_q) generators plus e-shears.
fn g2f_generators(k: &FieldCtx) -> Vec<Mat2> {
    let mut gens = sl2_generators(k);
    let e = |x: Fq| REps::new(Fq::ZERO, x);
    for x in additive_basis(k) {
        gens.push(Mat2::new(REps::ONE, e(x), REps::ZERO, REps::ONE));
        gens.push(Mat2::new(REps::ONE, REps::ZERO, e(x), REps::ONE));
        gens.push(Mat2::new(
            REps::new(Fq::ONE, x),
            REps::ZERO,
            REps::ZERO,
            REps::new(Fq::ONE, k.neg(x)),
        ));
    }
    gens
}

/// All determinant-one matrices over R_q, in key order.
pub fn enumerate_sl2_eps(k: &FieldCtx) -> Vec<Mat2> {
    let mut out = Vec::new();
    let all: Vec<Fq> = k.elements().collect();
    for &a0 in &all {
        for &b0 in &all {
            for &c0 in &all {
                for &d0 in &all {
                    if k.sub(k.mul(a0, d0), k.mul(b0, c0)) != Fq::ONE {
                        continue;
                    }
                    for &a1 in &all {
                        for &b1 in &all {
                            for &c1 in &all {
                                for &d1 in &all {
                                    let m = Mat2::from_coords([a0, b0, c0, d0, a1, b1, c1, d1]);
                                    if m.det(k) == REps::ONE {
                                        out.push(m);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// G2^F = SL2(F_q[e]/(e^2)), fully enumerated.
pub fn build_g2f(field: Arc<FieldCtx>, budget: u64) -> Result<GroupTable> {
    check_budget(field.q() as u64, budget)?;
    let elems = enumerate_sl2_eps(&field);
    let gens = g2f_generators(&field);
    GroupTable::from_elements("G2F", field, elems, Some(gens))
}

/// G^F = SL2(F_q), stored with zero e-part (its lift into G2^F).
pub fn build_gf(field: Arc<FieldCtx>) -> Result<GroupTable> {
    let k = &field;
    let mut elems = Vec::new();
    for a in k.elements() {
        for b in k.elements() {
            for c in k.elements() {
                for d in k.elements() {
                    if k.sub(k.mul(a, d), k.mul(b, c)) == Fq::ONE {
                        elems.push(Mat2::from_field(a, b, c, d));
                    }
                }
            }
        }
    }
    let gens = sl2_generators(k);
    GroupTable::from_elements("GF", field.clone(), elems, Some(gens))
}

/// Ids in `g2f` of the lifted elements of `gf`.
pub fn lift_ids(gf: &GroupTable, g2f: &GroupTable) -> Result<Vec<u32>> {
    gf.elements()
        .iter()
        .map(|m| g2f.id_of(m).ok_or_else(|| verify_fail("lift left G2F")))
        .collect()
}

/// Named subgroups of G2^F.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupName {
    /// Kernel of reduction: `(1+ae, be; ce, 1-ae)`.
    N,
    /// Upper unitriangular `(1, b; 0, 1)`, b in R_q.
    U2,
    /// `(1, be; 0, 1)`.
    U2_1,
    /// Diagonal torus `(t, 0; 0, t^-1)`.
    T2,
    /// Upper triangular Borel.
    B2,
    /// Center, by brute force.
    Z,
    /// Lift of SL2(F_q).
    GfEmbedded,
    /// `(+-1 + x1 e, y0 + y1 e; z1 e, +-1 + w1 e)`.
    SF,
    /// `(+-1, 0; x e, +-1)`.
    A,
    /// `(1 + x e, y e; 0, 1 - x e)`.
    SS,
}

impl SubgroupName {
    pub const ALL: [SubgroupName; 10] = [
        SubgroupName::N,
        SubgroupName::U2,
        SubgroupName::U2_1,
        SubgroupName::T2,
        SubgroupName::B2,
        SubgroupName::Z,
        SubgroupName::GfEmbedded,
        SubgroupName::SF,
        SubgroupName::A,
        SubgroupName::SS,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SubgroupName::N => "N",
            SubgroupName::U2 => "U2",
            SubgroupName::U2_1 => "U2_1",
            SubgroupName::T2 => "T2",
            SubgroupName::B2 => "B2",
            SubgroupName::Z => "Z",
            SubgroupName::GfEmbedded => "GF_embedded",
            SubgroupName::SF => "S_F",
            SubgroupName::A => "A",
            SubgroupName::SS => "SS",
        }
    }
}

impl FromStr for SubgroupName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubgroupName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSubgroup(s.to_string()))
    }
}

impl fmt::Display for SubgroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A subgroup of a [`GroupTable`], as a sorted list of parent ids.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: Arc<GroupTable>,
    members: Vec<u32>,
    name: String,
}

impl SubgroupHandle {
    /// Wraps a member list, checking closure under products and inverses.
    pub fn new(
        parent: Arc<GroupTable>,
        mut members: Vec<u32>,
        name: impl Into<String>,
    ) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let h = SubgroupHandle {
            parent,
            members,
            name: name.into(),
        };
        if !h.is_closed() {
            return Err(verify_fail(format!("{} is not a subgroup", h.name)));
        }
        Ok(h)
    }

    /// Subgroup generated by the given elements.
    pub fn generated(parent: Arc<GroupTable>, gens: &[u32], name: impl Into<String>) -> Self {
        let members = parent.closure(gens);
        SubgroupHandle {
            parent,
            members,
            name: name.into(),
        }
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, id: u32) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn is_closed(&self) -> bool {
        let g = &self.parent;
        self.contains(g.identity())
            && self.members.iter().all(|&x| self.contains(g.inverse(x)))
            && self
                .members
                .iter()
                .all(|&x| self.members.iter().all(|&y| self.contains(g.mul(x, y))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&x| self.members.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    /// Normal in the parent: stable under conjugation by its generators.
    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generators().iter().all(|&s| {
            self.members
                .iter()
                .all(|&x| self.contains(g.conjugate(s, x)))
        })
    }

    /// Normal in `over` (another subgroup of the same parent).
    pub fn is_normal_in(&self, over: &SubgroupHandle) -> bool {
        let g = &self.parent;
        over.members.iter().all(|&s| {
            self.members
                .iter()
                .all(|&x| self.contains(g.conjugate(s, x)))
        })
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Exponent of the subgroup.
    pub fn exponent(&self) -> u32 {
        self.members
            .iter()
            .fold(1u32, |acc, &x| acc.lcm(&self.parent.element_order(x)))
    }

    /// Builds a standalone table of the subgroup with its own classes.
    pub fn to_table(&self) -> Result<GroupTable> {
        let elems = self
            .members
            .iter()
            .map(|&i| *self.parent.element(i))
            .collect();
        GroupTable::from_elements(self.name.clone(), self.parent.field().clone(), elems, None)
    }
}

fn shape_predicate(name: SubgroupName, m: &Mat2, k: &FieldCtx) -> bool {
    let one = Fq::ONE;
    let minus_one = k.neg(one);
    let z = Fq::ZERO;
    let [a0, b0, c0, d0, a1, _b1, c1, d1] = m.coords();
    let pm1 = |x: Fq| x == one || x == minus_one;
    match name {
        SubgroupName::N => a0 == one && d0 == one && b0 == z && c0 == z,
        SubgroupName::U2 => m.a == REps::ONE && m.d == REps::ONE && m.c == REps::ZERO,
        SubgroupName::U2_1 => m.a == REps::ONE && m.d == REps::ONE && m.c == REps::ZERO && b0 == z,
        SubgroupName::T2 => m.b == REps::ZERO && m.c == REps::ZERO,
        SubgroupName::B2 => m.c == REps::ZERO,
        SubgroupName::GfEmbedded => m.is_reduced(),
        SubgroupName::SF => pm1(a0) && c0 == z,
        SubgroupName::A => pm1(a0) && m.b == REps::ZERO && a1 == z && d1 == z && c0 == z,
        SubgroupName::SS => a0 == one && d0 == one && b0 == z && c0 == z && c1 == z,
        SubgroupName::Z => unreachable!("center is computed, not matched"),
    }
}

/// One of the named subgroups of G2^F, by matrix shape (the center by brute
/// force).
pub fn named_subgroup(g2f: &Arc<GroupTable>, name: SubgroupName) -> Result<SubgroupHandle> {
    let k = g2f.field().clone();
    let members: Vec<u32> = match name {
        SubgroupName::Z => (0..g2f.order() as u32)
            .filter(|&x| {
                g2f.generators()
                    .iter()
                    .all(|&s| g2f.mul(s, x) == g2f.mul(x, s))
            })
            .collect(),
        _ => (0..g2f.order() as u32)
            .filter(|&x| shape_predicate(name, g2f.element(x), &k))
            .collect(),
    };
    SubgroupHandle::new(g2f.clone(), members, name.as_str())
}

/// Subgroup generated by all commutators of `h`.
pub fn derived_subgroup(h: &SubgroupHandle) -> SubgroupHandle {
    let g = h.parent();
    let mut comms: HashSet<u32> = HashSet::new();
    for &x in h.members() {
        for &y in h.members() {
            comms.insert(g.commutator(x, y));
        }
    }
    let mut comms: Vec<u32> = comms.into_iter().collect();
    comms.sort_unstable();
    // reduce to a small generating set before taking the closure
    let mut gens: Vec<u32> = Vec::new();
    let mut reached: HashSet<u32> = HashSet::from([g.identity()]);
    for c in comms {
        if !reached.contains(&c) {
            gens.push(c);
            reached = g.closure(&gens).into_iter().collect();
        }
    }
    SubgroupHandle::generated(g.clone(), &gens, format!("[{0},{0}]", h.name()))
}

/// Outcome of the semidirect-product checks on G2^F = G^F x| N.
#[derive(Clone, Debug, Serialize)]
pub struct SemidirectReport {
    pub n_normal: bool,
    pub trivial_intersection: bool,
    pub orders_multiply: bool,
    pub n_is_fq_cubed: bool,
}

impl SemidirectReport {
    pub fn all_pass(&self) -> bool {
        self.n_normal && self.trivial_intersection && self.orders_multiply && self.n_is_fq_cubed
    }
}

/// The N-element `(1 + a e, b e; c e, 1 - a e)`.
pub fn n_element(k: &FieldCtx, a: Fq, b: Fq, c: Fq) -> Mat2 {
    Mat2::new(
        REps::new(Fq::ONE, a),
        REps::new(Fq::ZERO, b),
        REps::new(Fq::ZERO, c),
        REps::new(Fq::ONE, k.neg(a)),
    )
}

/// Coordinates `(a, b, c)` of an N-element.
pub fn n_coords(m: &Mat2) -> (Fq, Fq, Fq) {
    (m.a.r1, m.b.r1, m.c.r1)
}

pub fn check_semidirect(g2f: &Arc<GroupTable>) -> Result<SemidirectReport> {
    let k = g2f.field().clone();
    let n = named_subgroup(g2f, SubgroupName::N)?;
    let gf = named_subgroup(g2f, SubgroupName::GfEmbedded)?;
    let n_normal = (0..g2f.order() as u32)
        .all(|g| n.members().iter().all(|&x| n.contains(g2f.conjugate(g, x))));
    let inter: Vec<u32> = gf
        .members()
        .iter()
        .copied()
        .filter(|&x| n.contains(x))
        .collect();
    let trivial_intersection = inter == [g2f.identity()];
    let orders_multiply = gf.order() * n.order() == g2f.order();
    // (a, b, c) -> N is a bijective homomorphism from (F_q^+)^3
    let mut image = HashSet::new();
    let mut hom = true;
    for a in k.elements() {
        for b in k.elements() {
            for c in k.elements() {
                let x = n_element(&k, a, b, c);
                let Some(id) = g2f.id_of(&x) else {
                    hom = false;
                    continue;
                };
                image.insert(id);
                for a2 in k.elements() {
                    let y = n_element(&k, a2, Fq::ONE, Fq::ZERO);
                    let yc = n_element(&k, Fq::ZERO, Fq::ZERO, a2);
                    for (yy, want) in [
                        (y, n_element(&k, k.add(a, a2), k.add(b, Fq::ONE), c)),
                        (yc, n_element(&k, a, b, k.add(c, a2))),
                    ] {
                        if x.mul(&yy, &k) != want {
                            hom = false;
                        }
                    }
                }
            }
        }
    }
    let n_is_fq_cubed = hom && image.len() == n.order() && image.iter().all(|&x| n.contains(x));
    Ok(SemidirectReport {
        n_normal,
        trivial_intersection,
        orders_multiply,
        n_is_fq_cubed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::with_order(q).unwrap())
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            build_g2f(field(5), 10_000),
            Err(Error::Budget { size: 15000, .. })
        ));
    }

    #[test]
    fn gf_orders_and_classes() {
        let g3 = build_gf(field(3)).unwrap();
        assert_eq!(g3.order(), 24);
        assert_eq!(g3.num_classes(), 7);
        assert_eq!(build_gf(field(5)).unwrap().order(), 120);
        assert_eq!(build_gf(field(9)).unwrap().order(), 720);
    }

    #[test]
    fn identity_is_alone_and_first() {
        let g = build_gf(field(5)).unwrap();
        assert_eq!(g.identity_class(), 0);
        assert_eq!(g.classes()[0].size, 1);
        for (i, c) in g.classes().iter().enumerate() {
            assert_eq!(c.size as u64 * c.centralizer_order, g.order() as u64);
            assert_eq!(g.order() % c.size, 0);
            assert!(c.members.iter().all(|&x| g.class_of(x) == i));
            assert_eq!(c.rep, c.members[0]);
        }
    }

    #[test]
    fn subgroup_name_parsing() {
        assert_eq!("S_F".parse::<SubgroupName>().unwrap(), SubgroupName::SF);
        assert_eq!(
            "B3".parse::<SubgroupName>().unwrap_err(),
            Error::UnknownSubgroup("B3".into())
        );
    }

    #[test]
    fn greedy_generators_generate() {
        let g = build_gf(field(3)).unwrap();
        let t = GroupTable::from_elements("copy", g.field().clone(), g.elements().to_vec(), None)
            .unwrap();
        assert_eq!(t.closure(t.generators()).len(), 24);
        assert_eq!(t.num_classes(), 7);
    }
}
