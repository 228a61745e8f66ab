use std::sync::Arc;

use dualsl2::chartab::{inner_product_int, ClassFunction};
use dualsl2::gf::{FieldCtx, Fq};
use dualsl2::group::{build_gf, SubgroupName};
use dualsl2::lab::*;

fn lab(q: u64) -> Lab {
    Lab::new(q, Budget::default()).unwrap()
}

#[test]
fn orbit_census_small_q() {
    for q in [3u64, 5, 7] {
        let gf = Arc::new(build_gf(Arc::new(FieldCtx::with_order(q).unwrap())).unwrap());
        let c = orbit_census(&gf).unwrap();
        assert!(c.passed(q as u32), "q={q}: {c:?}");
    }
    let gf = Arc::new(build_gf(Arc::new(FieldCtx::with_order(5).unwrap())).unwrap());
    let c = orbit_census(&gf).unwrap();
    assert_eq!(c.orbits, vec![vec![1, 4], vec![2, 3]]);
    let s = stabilizer_of_chi_psi(&gf, Fq::ONE).unwrap();
    assert_eq!(s.order(), 10);
    assert!(stabilizer_shape(&s));
}

#[test]
fn variety_basics_q3() {
    let l = lab(3);
    let k = l.field().clone();
    let g = l.group();
    let pts = xbar_build(&k);
    assert_eq!(pts.len(), 24);
    // g in N with lower-left c e shifts (1, 0, t) by c
    let n = dualsl2::group::n_element(&k, Fq::ZERO, Fq::ZERO, k.from_int(2));
    let p = XbarPoint {
        a0: Fq::ONE,
        c0: Fq::ZERO,
        t: Fq::ZERO,
    };
    assert_eq!(xbar_g_action(&k, &n, &p).t, k.from_int(2));
    // exhaustive action axioms
    for x in 0..g.order() as u32 {
        for &y in g.generators() {
            let gx = g.element(x);
            let gy = g.element(y);
            let xy = g.element(g.mul(x, y));
            for p in &pts {
                assert_eq!(
                    xbar_g_action(&k, xy, p),
                    xbar_g_action(&k, gx, &xbar_g_action(&k, gy, p))
                );
            }
        }
    }
    let a = l.subgroup(SubgroupName::A).unwrap();
    for &x in a.members() {
        for &y in a.members() {
            let xy = g.element(g.mul(x, y));
            for p in &pts {
                let lhs = xbar_a_action(&k, xy, p).unwrap();
                let rhs = xbar_a_action(
                    &k,
                    g.element(y),
                    &xbar_a_action(&k, g.element(x), p).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
                for s in 0..g.order() as u32 {
                    let sm = g.element(s);
                    assert_eq!(
                        xbar_g_action(&k, sm, &xbar_a_action(&k, g.element(x), p).unwrap()),
                        xbar_a_action(&k, g.element(x), &xbar_g_action(&k, sm, p)).unwrap()
                    );
                }
            }
        }
    }
    // Lefschetz numbers are class functions
    for c in g.classes() {
        let v = lefschetz(&k, g.element(c.rep), &pts);
        assert!(c
            .members
            .iter()
            .all(|&m| lefschetz(&k, g.element(m), &pts) == v));
    }
}

#[test]
fn perm_character_two_ways_and_burnside() {
    for q in [3u64, 5] {
        let l = lab(q);
        let perm = perm_character(l.group(), l.cyc());
        let ind = perm_character_by_induction(l.group(), l.cyc()).unwrap();
        assert_eq!(perm.values(), ind.values());
        assert_eq!(burnside_orbit_count(l.group()).unwrap(), (1, 1));
        let triv = ClassFunction::trivial(l.group(), l.cyc());
        assert_eq!(inner_product_int(l.group(), &perm, &triv).unwrap(), 1);
    }
}

#[test]
fn partition_and_theorem() {
    for q in [3u64, 5] {
        let l = lab(q);
        let pc = partition_induction_check(l.group(), l.cyc()).unwrap();
        assert!(pc.passed(q as u32), "q={q}: {pc:?}");
        assert_eq!(pc.stabilizer_order, 2 * (q as usize).pow(4));
        let th = theorem_decomposition(l.group(), l.table().unwrap()).unwrap();
        assert!(th.passed(q as u32), "q={q}: {th:?}");
        assert!(!th.literal_summands_are_characters);
        let kind_mult: Vec<(i64, i64)> = th
            .constituents
            .iter()
            .map(|c| (c.degree, c.multiplicity))
            .collect();
        let nil: Vec<_> = kind_mult
            .iter()
            .filter(|(d, _)| *d == (q as i64 * q as i64 - 1) / 2)
            .collect();
        assert!(nil.len() >= 4);
    }
}

#[test]
fn k_independence() {
    let l = lab(3);
    let r = k_independence_check(l.group(), l.cyc()).unwrap();
    assert!(r.explicit_checked);
    assert_eq!(r.solutions_per_k, vec![3, 3]);
    assert!(r.passed());
    let l = lab(5);
    let r = k_independence_check(l.group(), l.cyc()).unwrap();
    assert!(!r.explicit_checked);
    assert!(r.passed());
}

#[test]
fn realization() {
    for q in [3u64, 5] {
        let l = lab(q);
        let r = y_realization(l.group(), l.table().unwrap()).unwrap();
        assert!(r.passed(q as u32), "q={q}: {r:?}");
        assert_eq!(r.realized.len(), 4 * q as usize);
        assert_eq!(r.derived_order, (q * q) as usize);
    }
}

#[test]
fn every_named_check_passes_q3() {
    let l = lab(3);
    for name in CHECKS {
        let r = run_check(&l, name);
        assert!(r.passed(), "{name}: {}", r.details);
        assert_eq!(r.check, name);
    }
    let bad = run_check(&l, "nonsense");
    assert!(!bad.passed());
    assert!(bad.details["error"].as_str().unwrap().contains("nonsense"));
}

#[test]
fn dim_table_report_without_group() {
    let r = dim_table_report(27).unwrap();
    assert!(r.passed());
    assert_eq!(r.details["sum_count"], 27 * 27 + 4 * 27 + 4);
    assert!(dim_table_report(9).unwrap().passed());
}
