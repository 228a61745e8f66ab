use std::collections::HashSet;
use std::sync::Arc;

use dualsl2::gf::{FieldCtx, Fq};
use dualsl2::group::{
    build_g2f, build_gf, check_semidirect, derived_subgroup, enumerate_sl2_eps, lift_ids,
    named_subgroup, GroupTable, Mat2, SubgroupName, DEFAULT_GROUP_BUDGET,
};

fn g2f(q: u64) -> Arc<GroupTable> {
    let k = Arc::new(FieldCtx::with_order(q).unwrap());
    Arc::new(build_g2f(k, DEFAULT_GROUP_BUDGET).unwrap())
}

/// Conjugacy classes by brute force: orbit of each element under conjugation
/// by every group element.
fn brute_force_class_count(g: &GroupTable) -> usize {
    let n = g.order() as u32;
    let mut seen = vec![false; n as usize];
    let mut count = 0;
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        count += 1;
        for h in 0..n {
            seen[g.conjugate(h, x) as usize] = true;
        }
    }
    count
}

#[test]
fn g2f_orders_match_formula_and_raw_enumeration() {
    for q in [3u64, 5] {
        let k = FieldCtx::with_order(q).unwrap();
        // oracle: scan all q^8 matrices for determinant one
        let mut raw = 0u64;
        let all: Vec<Fq> = k.elements().collect();
        let mut coords = [Fq::ZERO; 8];
        let total = q.pow(8);
        for n in 0..total {
            let mut r = n;
            for c in coords.iter_mut() {
                *c = all[(r % q) as usize];
                r /= q;
            }
            if Mat2::from_coords(coords).det(&k) == dualsl2::ring::REps::ONE {
                raw += 1;
            }
        }
        let g = g2f(q);
        assert_eq!(g.order() as u64, q.pow(4) * (q * q - 1));
        assert_eq!(g.order() as u64, raw);
        assert_eq!(enumerate_sl2_eps(&k).len() as u64, raw);
    }
}

#[test]
fn class_counts_q3() {
    let g = g2f(3);
    assert_eq!(g.num_classes(), 25);
    assert_eq!(brute_force_class_count(&g), 25);
    assert_eq!(g.classes().iter().map(|c| c.size).sum::<usize>(), 648);
}

#[test]
fn class_count_q5() {
    let g = g2f(5);
    assert_eq!(g.num_classes(), 49);
    // (1+n)^p = 1 + n^p and n^4 = 0, so order-p^2 elements exist only for p = 3
    assert_eq!(g.exponent(), 60);
    assert_eq!(g2f(3).exponent(), 36);
}

#[test]
fn named_subgroup_orders() {
    for q in [3usize, 5] {
        let g = g2f(q as u64);
        let order = |n| named_subgroup(&g, n).unwrap().order();
        assert_eq!(order(SubgroupName::N), q.pow(3));
        assert_eq!(order(SubgroupName::A), 2 * q);
        assert_eq!(order(SubgroupName::SF), 2 * q.pow(4));
        assert_eq!(order(SubgroupName::SS), q * q);
        assert_eq!(order(SubgroupName::Z), 2);
        assert_eq!(order(SubgroupName::GfEmbedded), q * (q * q - 1));
        assert_eq!(order(SubgroupName::U2), q * q);
        assert_eq!(order(SubgroupName::T2), q * (q - 1));
        assert_eq!(order(SubgroupName::B2), q.pow(3) * (q - 1));
        let a = named_subgroup(&g, SubgroupName::A).unwrap();
        assert!(a.is_abelian());
        assert!(named_subgroup(&g, SubgroupName::N).unwrap().is_normal());
        assert!(named_subgroup(&g, SubgroupName::Z).unwrap().is_normal());
    }
}

#[test]
fn derived_subgroups() {
    for q in [3u64, 5] {
        let g = g2f(q);
        let sf = named_subgroup(&g, SubgroupName::SF).unwrap();
        let ss = derived_subgroup(&sf);
        assert_eq!(
            ss.members(),
            named_subgroup(&g, SubgroupName::SS).unwrap().members()
        );
        assert!(ss.is_normal_in(&sf));
        let n = named_subgroup(&g, SubgroupName::N).unwrap();
        assert_eq!(derived_subgroup(&n).order(), 1);
    }
}

#[test]
fn semidirect_structure() {
    for q in [3u64, 5] {
        let r = check_semidirect(&g2f(q)).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}

#[test]
fn lift_is_an_injective_homomorphism() {
    let k = Arc::new(FieldCtx::with_order(3).unwrap());
    let gf = build_gf(k.clone()).unwrap();
    let big = build_g2f(k, DEFAULT_GROUP_BUDGET).unwrap();
    let ids = lift_ids(&gf, &big).unwrap();
    assert_eq!(ids.iter().collect::<HashSet<_>>().len(), gf.order());
    for x in 0..gf.order() as u32 {
        for y in 0..gf.order() as u32 {
            assert_eq!(
                ids[gf.mul(x, y) as usize],
                big.mul(ids[x as usize], ids[y as usize])
            );
        }
    }
    // reduction mod e is a homomorphism back onto G^F
    for x in 0..big.order() as u32 {
        let r = big.element(x).reduce();
        assert!(gf.id_of(&r).is_some());
        assert_eq!(big.element(x).reduce().reduce(), r);
    }
}
