//! Class functions and character tables.
//!
//! Two independent constructions of the irreducible characters of G2^F live
//! here: [`little_group_table`] (orbits of G^F on the dual of the abelian
//! normal subgroup N, stabilizers, extension and induction) and
//! [`dixon_table`] (common eigenvectors of the class matrices over a prime
//! field, lifted back to Q(zeta_m)). Either can check the other.

mod dixon;
mod little;
mod modp;

pub use dixon::{dixon_prime, dixon_table, DEFAULT_DIXON_BUDGET};
pub use little::{
    little_group_table, n_orbits, nchar_action, nchar_exponent, nchar_from_index, nchar_index,
    IrrepKind, NOrbit, OrbitKind,
};

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cyclo::{CycCtx, CycNum};
use crate::error::{verify_fail, Error, Result};
use crate::group::{ClassSummary, GroupTable};

/// A function on the conjugacy classes of one group, values in Q(zeta_m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    group: u64,
    values: Vec<CycNum>,
    label: String,
}

impl ClassFunction {
    pub fn new(group: &GroupTable, values: Vec<CycNum>, label: impl Into<String>) -> Self {
        assert_eq!(values.len(), group.num_classes(), "one value per class");
        ClassFunction {
            group: group.uid(),
            values,
            label: label.into(),
        }
    }

    /// Builds a class function by evaluating `f` at class representatives.
    pub fn from_reps(
        group: &GroupTable,
        label: impl Into<String>,
        mut f: impl FnMut(u32) -> CycNum,
    ) -> Self {
        let values = group.classes().iter().map(|c| f(c.rep)).collect();
        Self::new(group, values, label)
    }

    pub fn trivial(group: &GroupTable, cyc: &CycCtx) -> Self {
        Self::new(group, vec![cyc.one(); group.num_classes()], "trivial")
    }

    pub fn regular(group: &GroupTable, cyc: &CycCtx) -> Self {
        let values = (0..group.num_classes())
            .map(|c| {
                if c == group.identity_class() {
                    cyc.from_int(group.order() as i64)
                } else {
                    cyc.zero()
                }
            })
            .collect();
        Self::new(group, values, "regular")
    }

    pub fn group_uid(&self) -> u64 {
        self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Value at the identity as an integer.
    pub fn degree(&self, group: &GroupTable) -> Result<i64> {
        self.check(group)?;
        self.values[group.identity_class()].as_i64()
    }

    fn check(&self, group: &GroupTable) -> Result<()> {
        if self.group != group.uid() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        label: String,
        f: impl Fn(&CycNum, &CycNum) -> CycNum,
    ) -> Result<ClassFunction> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
            label,
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(
            other,
            format!("{} + {}", self.label, other.label),
            |a, b| a + b,
        )
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(
            other,
            format!("{} - {}", self.label, other.label),
            |a, b| a - b,
        )
    }

    /// Pointwise product (tensor product of characters).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(
            other,
            format!("{} * {}", self.label, other.label),
            |a, b| a * b,
        )
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        ClassFunction {
            group: self.group,
            values: self
                .values
                .iter()
                .map(|v| v.scale(&BigInt::from(k)))
                .collect(),
            label: format!("{k}*{}", self.label),
        }
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            group: self.group,
            values: self.values.iter().map(CycNum::conj).collect(),
            label: format!("conj({})", self.label),
        }
    }
}

/// `<a, b> = (1/|G|) sum_C |C| a(C) conj(b(C))`.
pub fn inner_product(group: &GroupTable, a: &ClassFunction, b: &ClassFunction) -> Result<CycNum> {
    a.check(group)?;
    b.check(group)?;
    let cyc = a.values[0].ctx().clone();
    let s = cyc.hermitian_dot(&group.class_sizes(), &a.values, &b.values)?;
    Ok(s.div_int(&BigInt::from(group.order())))
}

/// Inner product that must be a rational integer.
pub fn inner_product_int(group: &GroupTable, a: &ClassFunction, b: &ClassFunction) -> Result<i64> {
    inner_product(group, a, b)?.as_i64().map_err(|e| {
        verify_fail(format!(
            "<{}, {}> is not an integer: {e}",
            a.label(),
            b.label()
        ))
    })
}

/// Frobenius induction through class fusion:
/// `Ind(g) = |C_G(g)| * sum_{c -> class(g)} chi(c) / |C_H(c)|`.
pub fn induce(sub: &GroupTable, parent: &GroupTable, chi: &ClassFunction) -> Result<ClassFunction> {
    chi.check(sub)?;
    let fusion = sub.fusion_into(parent)?;
    let cyc = chi.values[0].ctx().clone();
    // sum_c chi(c) * |C_G| / |C_H(c)|, collected over a common denominator
    let mut acc: Vec<CycNum> = vec![cyc.zero(); parent.num_classes()];
    for (c, &big) in fusion.iter().enumerate() {
        let cg = BigInt::from(parent.classes()[big].centralizer_order);
        let ch = BigInt::from(sub.classes()[c].centralizer_order);
        let term = chi.values[c].scale(&cg).div_int(&ch);
        acc[big] = &acc[big] + &term;
    }
    Ok(ClassFunction {
        group: parent.uid(),
        values: acc,
        label: format!("Ind({})", chi.label),
    })
}

/// Restriction along the class fusion of `sub` into `parent`.
pub fn restrict(
    parent: &GroupTable,
    sub: &GroupTable,
    chi: &ClassFunction,
) -> Result<ClassFunction> {
    chi.check(parent)?;
    let fusion = sub.fusion_into(parent)?;
    Ok(ClassFunction {
        group: sub.uid(),
        values: fusion.iter().map(|&c| chi.values[c].clone()).collect(),
        label: format!("Res({})", chi.label),
    })
}

/// How a table was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    LittleGroup,
    Dixon,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::LittleGroup => "little_group",
            Method::Dixon => "dixon",
        }
    }
}

/// Irreducible characters of a group, in canonical order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: u64,
    cyc: CycCtx,
    method: Method,
    irreducibles: Vec<ClassFunction>,
    kinds: Vec<Option<IrrepKind>>,
}

#[derive(Serialize)]
struct IrrJson<'a> {
    label: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<IrrepKind>,
    degree: i64,
    values: &'a [CycNum],
}

/// JSON form of a character table.
#[derive(Serialize)]
pub struct TableJson<'a> {
    q: u32,
    group_order: usize,
    method: Method,
    classes: Vec<ClassSummary>,
    irreducibles: Vec<IrrJson<'a>>,
}

impl CharacterTable {
    pub(crate) fn new(
        group: &GroupTable,
        cyc: CycCtx,
        method: Method,
        irreducibles: Vec<ClassFunction>,
        kinds: Vec<Option<IrrepKind>>,
    ) -> Result<Self> {
        assert_eq!(irreducibles.len(), kinds.len());
        let mut t = CharacterTable {
            group: group.uid(),
            cyc,
            method,
            irreducibles,
            kinds,
        };
        t.sort_canonical(group)?;
        Ok(t)
    }

    /// Orders rows by degree, then lexicographically by value vector.
    fn sort_canonical(&mut self, group: &GroupTable) -> Result<()> {
        let degs: Vec<i64> = self
            .irreducibles
            .iter()
            .map(|c| c.degree(group))
            .collect::<Result<_>>()?;
        let mut idx: Vec<usize> = (0..self.irreducibles.len()).collect();
        idx.sort_by(|&i, &j| {
            degs[i].cmp(&degs[j]).then_with(|| {
                self.irreducibles[i]
                    .values
                    .cmp(&self.irreducibles[j].values)
            })
        });
        self.irreducibles = idx.iter().map(|&i| self.irreducibles[i].clone()).collect();
        self.kinds = idx.iter().map(|&i| self.kinds[i]).collect();
        Ok(())
    }

    pub(crate) fn relabel(&mut self, f: impl Fn(usize, &ClassFunction) -> String) {
        for i in 0..self.irreducibles.len() {
            let label = f(i, &self.irreducibles[i]);
            self.irreducibles[i].label = label;
        }
    }

    pub fn group_uid(&self) -> u64 {
        self.group
    }

    pub fn cyc(&self) -> &CycCtx {
        &self.cyc
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn kind(&self, i: usize) -> Option<IrrepKind> {
        self.kinds[i]
    }

    pub fn kinds(&self) -> &[Option<IrrepKind>] {
        &self.kinds
    }

    pub fn degrees(&self, group: &GroupTable) -> Result<Vec<i64>> {
        self.irreducibles.iter().map(|c| c.degree(group)).collect()
    }

    /// Exact row and column orthogonality plus the basic counts.
    pub fn verify(&self, group: &GroupTable) -> Result<()> {
        if group.uid() != self.group {
            return Err(Error::GroupMismatch);
        }
        if self.len() != group.num_classes() {
            return Err(verify_fail(format!(
                "{} irreducibles for {} classes",
                self.len(),
                group.num_classes()
            )));
        }
        let degs = self.degrees(group)?;
        let sum_sq: i64 = degs.iter().map(|d| d * d).sum();
        if sum_sq != group.order() as i64 || degs.iter().any(|&d| d <= 0) {
            return Err(verify_fail(format!(
                "sum of squared degrees {sum_sq} != |G| = {}",
                group.order()
            )));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = inner_product_int(group, a, b)?;
                if ip != (i == j) as i64 {
                    return Err(verify_fail(format!("<chi_{i}, chi_{j}> = {ip}")));
                }
            }
        }
        for (c, class) in group.classes().iter().enumerate() {
            let col: Vec<CycNum> = self
                .irreducibles
                .iter()
                .map(|x| x.values[c].clone())
                .collect();
            let ones = vec![1i64; col.len()];
            let s = self.cyc.hermitian_dot(&ones, &col, &col)?.as_i64()?;
            if s != class.centralizer_order as i64 {
                return Err(verify_fail(format!(
                    "column {c}: sum |chi|^2 = {s} != |C_G| = {}",
                    class.centralizer_order
                )));
            }
        }
        Ok(())
    }

    /// Whether both tables have the same rows, in any order.
    pub fn same_rows(&self, other: &CharacterTable) -> bool {
        if self.group != other.group || self.len() != other.len() {
            return false;
        }
        let mut counts: HashMap<&[CycNum], i64> = HashMap::new();
        for r in &self.irreducibles {
            *counts.entry(&r.values).or_default() += 1;
        }
        for r in &other.irreducibles {
            *counts.entry(&r.values).or_default() -= 1;
        }
        counts.values().all(|&c| c == 0)
    }

    /// Index of the row equal to `chi`, if any.
    pub fn position(&self, chi: &ClassFunction) -> Option<usize> {
        self.irreducibles
            .iter()
            .position(|r| r.group == chi.group && r.values == chi.values)
    }

    /// Copies the kind labels of `other` onto equal rows of `self`.
    pub fn adopt_kinds(&mut self, other: &CharacterTable) {
        for (i, r) in self.irreducibles.iter().enumerate() {
            if let Some(j) = other.position(r) {
                self.kinds[i] = other.kinds[j];
            }
        }
    }

    pub fn to_json<'a>(&'a self, group: &GroupTable) -> Result<TableJson<'a>> {
        let degs = self.degrees(group)?;
        Ok(TableJson {
            q: group.field().q(),
            group_order: group.order(),
            method: self.method,
            classes: group.class_summaries(),
            irreducibles: self
                .irreducibles
                .iter()
                .zip(&degs)
                .zip(&self.kinds)
                .map(|((c, &degree), &kind)| IrrJson {
                    label: c.label(),
                    kind,
                    degree,
                    values: c.values(),
                })
                .collect(),
        })
    }
}

/// Multiplicities `<chi, chi_i>` of every irreducible with nonzero
/// multiplicity, as `(row, multiplicity)`.
pub fn decompose(
    group: &GroupTable,
    chi: &ClassFunction,
    table: &CharacterTable,
) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    let mut dim = 0i64;
    for (i, irr) in table.irreducibles().iter().enumerate() {
        let m = inner_product_int(group, chi, irr)?;
        if m != 0 {
            out.push((i, m));
            dim += m * irr.degree(group)?;
        }
    }
    let deg = chi.degree(group)?;
    if dim != deg {
        return Err(verify_fail(format!(
            "decomposition of {} accounts for degree {dim}, expected {deg}",
            chi.label()
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::group::build_gf;
    use std::sync::Arc;

    #[test]
    fn trivial_and_regular() {
        let g = build_gf(Arc::new(FieldCtx::with_order(3).unwrap())).unwrap();
        let cyc = CycCtx::new(g.exponent());
        let triv = ClassFunction::trivial(&g, &cyc);
        let reg = ClassFunction::regular(&g, &cyc);
        assert_eq!(inner_product_int(&g, &triv, &triv).unwrap(), 1);
        assert_eq!(inner_product_int(&g, &reg, &triv).unwrap(), 1);
        assert_eq!(reg.degree(&g).unwrap(), 24);
    }

    #[test]
    fn group_mismatch() {
        let k = Arc::new(FieldCtx::with_order(3).unwrap());
        let g = build_gf(k.clone()).unwrap();
        let h = build_gf(k).unwrap();
        let cyc = CycCtx::new(12);
        let a = ClassFunction::trivial(&g, &cyc);
        let b = ClassFunction::trivial(&h, &cyc);
        assert_eq!(inner_product(&g, &a, &b).unwrap_err(), Error::GroupMismatch);
        assert_eq!(a.add(&b).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn non_integer_multiplicity_is_an_error() {
        let g = build_gf(Arc::new(FieldCtx::with_order(3).unwrap())).unwrap();
        let cyc = CycCtx::new(g.exponent());
        let table = dixon_table(&g, &cyc, DEFAULT_DIXON_BUDGET).unwrap();
        // one class indicator is not a virtual character
        let mut vals = vec![cyc.zero(); g.num_classes()];
        vals[g.identity_class()] = cyc.one();
        let bad = ClassFunction::new(&g, vals, "delta_1");
        assert!(matches!(
            decompose(&g, &bad, &table),
            Err(Error::Verification(_))
        ));
    }

    #[test]
    fn decompose_regular_and_irreducibles() {
        let g = build_gf(Arc::new(FieldCtx::with_order(5).unwrap())).unwrap();
        let cyc = CycCtx::new(g.exponent());
        let table = dixon_table(&g, &cyc, DEFAULT_DIXON_BUDGET).unwrap();
        let degs = table.degrees(&g).unwrap();
        let reg = ClassFunction::regular(&g, &cyc);
        let dec = decompose(&g, &reg, &table).unwrap();
        assert_eq!(dec.len(), table.len());
        for (i, m) in dec {
            assert_eq!(m, degs[i]);
        }
        for (i, irr) in table.irreducibles().iter().enumerate() {
            assert_eq!(decompose(&g, irr, &table).unwrap(), vec![(i, 1)]);
        }
    }
}
