use std::collections::BTreeMap;
use std::sync::Arc;

use dualsl2::chartab::{
    decompose, dixon_table, induce, inner_product_int, little_group_table, restrict, ClassFunction,
    IrrepKind, DEFAULT_DIXON_BUDGET,
};
use dualsl2::cyclo::CycCtx;
use dualsl2::gf::FieldCtx;
use dualsl2::group::{build_g2f, named_subgroup, GroupTable, SubgroupName, DEFAULT_GROUP_BUDGET};

fn g2f(q: u64) -> Arc<GroupTable> {
    let k = Arc::new(FieldCtx::with_order(q).unwrap());
    Arc::new(build_g2f(k, DEFAULT_GROUP_BUDGET).unwrap())
}

fn census(degs: &[i64]) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for &d in degs {
        *m.entry(d).or_default() += 1;
    }
    m
}

#[test]
fn q3_tables_agree() {
    let g = g2f(3);
    let cyc = CycCtx::new(g.exponent());
    let lg = little_group_table(&g, &cyc).unwrap();
    let dx = dixon_table(&g, &cyc, DEFAULT_DIXON_BUDGET).unwrap();
    assert_eq!(lg.len(), 25);
    assert!(lg.same_rows(&dx));
    let degs = lg.degrees(&g).unwrap();
    assert_eq!(
        census(&degs),
        BTreeMap::from([(1, 3), (2, 3), (3, 1), (4, 12), (6, 4), (12, 2)])
    );
    // canonical order makes the two tables literally equal
    let a: Vec<_> = lg
        .irreducibles()
        .iter()
        .map(|c| c.values().to_vec())
        .collect();
    let b: Vec<_> = dx
        .irreducibles()
        .iter()
        .map(|c| c.values().to_vec())
        .collect();
    assert_eq!(a, b);
    let nil = lg
        .kinds()
        .iter()
        .filter(|k| k.unwrap().is_nilpotent())
        .count();
    assert_eq!(nil, 12);
}

#[test]
fn q5_little_group_table() {
    let g = g2f(5);
    let cyc = CycCtx::new(g.exponent());
    let lg = little_group_table(&g, &cyc).unwrap();
    assert_eq!(lg.len(), 49);
    let degs = lg.degrees(&g).unwrap();
    assert_eq!(degs.iter().map(|d| d * d).sum::<i64>(), 15000);
    let count = |k: IrrepKind| lg.kinds().iter().filter(|x| **x == Some(k)).count();
    assert_eq!(count(IrrepKind::NilpotentSquare), 10);
    assert_eq!(count(IrrepKind::NilpotentNonsquare), 10);
    assert_eq!(count(IrrepKind::Split), 8);
    assert_eq!(count(IrrepKind::Nonsplit), 12);
    assert_eq!(count(IrrepKind::PrincipalSeries), 1);
    assert_eq!(count(IrrepKind::HalfPrincipal), 2);
    assert_eq!(count(IrrepKind::Discrete), 2);
    assert_eq!(count(IrrepKind::HalfDiscrete), 2);
}

#[test]
fn frobenius_reciprocity_q3() {
    let g = g2f(3);
    let cyc = CycCtx::new(g.exponent());
    let big = little_group_table(&g, &cyc).unwrap();
    let sf = named_subgroup(&g, SubgroupName::SF)
        .unwrap()
        .to_table()
        .unwrap();
    let small = dixon_table(&sf, &cyc, DEFAULT_DIXON_BUDGET).unwrap();
    let index = (g.order() / sf.order()) as i64;
    for chi in small.irreducibles() {
        let ind = induce(&sf, &g, chi).unwrap();
        assert_eq!(ind.degree(&g).unwrap(), index * chi.degree(&sf).unwrap());
        for phi in big.irreducibles() {
            let res = restrict(&g, &sf, phi).unwrap();
            assert_eq!(
                inner_product_int(&g, &ind, phi).unwrap(),
                inner_product_int(&sf, chi, &res).unwrap()
            );
        }
    }
    let triv = ClassFunction::trivial(&g, &cyc);
    assert_eq!(
        restrict(&g, &sf, &triv).unwrap().values(),
        ClassFunction::trivial(&sf, &cyc).values()
    );
}

#[test]
fn nilpotent_irreducibles_restrict_to_one_orbit_on_n() {
    let g = g2f(3);
    let cyc = CycCtx::new(g.exponent());
    let table = little_group_table(&g, &cyc).unwrap();
    let n = named_subgroup(&g, SubgroupName::N)
        .unwrap()
        .to_table()
        .unwrap();
    let n_table = dixon_table(&n, &cyc, DEFAULT_DIXON_BUDGET).unwrap();
    assert_eq!(n_table.len(), 27);
    for (i, theta) in table.irreducibles().iter().enumerate() {
        if !table.kind(i).unwrap().is_nilpotent() {
            continue;
        }
        let res = restrict(&g, &n, theta).unwrap();
        let dec = decompose(&n, &res, &n_table).unwrap();
        // four N-characters forming one orbit, each once
        assert_eq!(dec.len(), 4);
        assert!(dec.iter().all(|&(_, m)| m == 1));
    }
}
