//! Burnside-Dixon-Schneider over a prime field.
//!
//! The normalized central characters `omega(K_i) = |C_i| chi(g_i) / chi(1)`
//! are the common eigenvectors of the class matrices
//! `M_j[k][i] = #{x in C_j : x^-1 g_i in C_k}`. Over F_l with
//! `l = 1 mod exponent` every character value reduces into F_l, and because
//! `l > 2 sqrt|G|` each value is recovered exactly from its multiset of
//! eigenvalues.

use rayon::prelude::*;

use super::modp::Fp;
use super::{CharacterTable, ClassFunction, Method};
use crate::cyclo::{CycCtx, ZetaSum};
use crate::error::{verify_fail, Error, Result};
use crate::group::GroupTable;

/// Largest group order accepted by [`dixon_table`] unless overridden.
pub const DEFAULT_DIXON_BUDGET: u64 = 20_000;

const PRIME_SEARCH_BOUND: u64 = 100_000_000;

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `l = 1 mod exponent` with `l^2 > 4 |G|`.
pub fn dixon_prime(exponent: u32, order: u64) -> Result<u64> {
    let e = exponent as u64;
    let mut l = e + 1;
    while l < PRIME_SEARCH_BOUND {
        if l * l > 4 * order && is_prime(l) {
            return Ok(l);
        }
        l += e;
    }
    Err(Error::NoDixonPrime {
        exponent,
        bound: PRIME_SEARCH_BOUND,
    })
}

/// Class matrices reduced mod l; `out[j][k][i]` as in the module docs.
fn class_matrices(g: &GroupTable, f: Fp) -> Vec<Vec<Vec<u64>>> {
    let r = g.num_classes();
    (0..r)
        .into_par_iter()
        .map(|j| {
            let mut m = vec![vec![0u64; r]; r];
            for (i, ci) in g.classes().iter().enumerate() {
                for &x in &g.classes()[j].members {
                    let k = g.class_of(g.mul(g.inverse(x), ci.rep));
                    m[k][i] += 1;
                }
            }
            for row in &mut m {
                for x in row.iter_mut() {
                    *x %= f.l;
                }
            }
            m
        })
        .collect()
}

/// Splits `space` (RREF rows) into eigenspaces of the invariant matrix `m`.
fn split(f: Fp, m: &[Vec<u64>], space: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = space.len();
    if d == 1 {
        return Ok(vec![space]);
    }
    let mut basis = space;
    let pivots = f.rref(&mut basis);
    // restriction of m to the subspace, in pivot coordinates
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            m.iter()
                .map(|row| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                })
                .collect()
        })
        .collect();
    let a: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
        .collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..f.l {
        if found == d {
            break;
        }
        let shifted: Vec<Vec<u64>> = a
            .iter()
            .enumerate()
            .map(|(s, row)| {
                row.iter()
                    .enumerate()
                    .map(|(t, &x)| if s == t { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let ns = f.nullspace(&shifted);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let mut sub: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (ct, b) in c.iter().zip(&basis) {
                    if *ct != 0 {
                        for (x, &y) in v.iter_mut().zip(b) {
                            *x = f.add(*x, f.mul(*ct, y));
                        }
                    }
                }
                v
            })
            .collect();
        f.rref(&mut sub);
        parts.push(sub);
    }
    if found != d {
        return Err(verify_fail("class matrix is not diagonalizable mod l"));
    }
    Ok(parts)
}

/// The character table of `g` with values in `cyc`, whose conductor must be
/// a multiple of the exponent of `g`.
pub fn dixon_table(g: &GroupTable, cyc: &CycCtx, budget: u64) -> Result<CharacterTable> {
    let order = g.order() as u64;
    if order > budget {
        return Err(Error::Budget {
            what: "group order for Dixon",
            size: order,
            limit: budget,
        });
    }
    let e = g.exponent();
    if !cyc.m().is_multiple_of(e) {
        return Err(Error::ContextMismatch {
            left: cyc.m(),
            right: e,
        });
    }
    let l = dixon_prime(e, order)?;
    let f = Fp { l };
    let r = g.num_classes();
    let mats = class_matrices(g, f);

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| (i == j) as u64).collect())
        .collect()];
    for m in &mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            next.extend(split(f, m, s)?);
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(verify_fail(
            "class matrices have a repeated common eigenspace",
        ));
    }

    let id = g.identity_class();
    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size as u64).collect();
    let inv_class: Vec<usize> = (0..r).map(|c| g.inverse_class(c)).collect();
    let power: Vec<Vec<usize>> = g
        .classes()
        .iter()
        .enumerate()
        .map(|(c, cl)| (0..cl.order as u64).map(|k| g.power_class(c, k)).collect())
        .collect();
    let z = f.pow(f.primitive_root(), (l - 1) / e as u64);

    let rows: Vec<ClassFunction> = spaces
        .into_par_iter()
        .map(|s| -> Result<ClassFunction> {
            let v = &s[0];
            if v[id] == 0 {
                return Err(verify_fail("eigenvector vanishes at the identity"));
            }
            let norm = f.inv(v[id]);
            let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, norm)).collect();
            // |G| / d^2 = sum_i omega_i omega_{i*} / |C_i|
            let mut t = 0;
            for i in 0..r {
                t = f.add(
                    t,
                    f.mul(f.mul(omega[i], omega[inv_class[i]]), f.inv(sizes[i] % l)),
                );
            }
            let d2 = f.mul(order % l, f.inv(t));
            let d = (1..=order)
                .take_while(|d| d * d <= order)
                .find(|d| d * d % l == d2 && order.is_multiple_of(*d))
                .ok_or_else(|| verify_fail("no integral degree"))?;
            let chi: Vec<u64> = (0..r)
                .map(|i| f.mul(f.mul(d % l, omega[i]), f.inv(sizes[i] % l)))
                .collect();
            let values = (0..r)
                .map(|c| {
                    let o = g.classes()[c].order as u64;
                    let zo = f.pow(z, e as u64 / o);
                    let inv_o = f.inv(o % l);
                    let mut acc = ZetaSum::new(cyc);
                    for a in 0..o {
                        let step = f.pow(zo, (o - a) % o);
                        let mut s = 0;
                        let mut w = 1;
                        for &pc in &power[c] {
                            s = f.add(s, f.mul(chi[pc], w));
                            w = f.mul(w, step);
                        }
                        let mu = f.mul(s, inv_o);
                        if mu > d {
                            return Err(verify_fail("eigenvalue multiplicity exceeds degree"));
                        }
                        acc.add_zeta(mu as i64, (cyc.m() as u64 / o * a) as u32);
                    }
                    Ok(acc.finish())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ClassFunction::new(g, values, String::new()))
        })
        .collect::<Result<_>>()?;

    let kinds = vec![None; rows.len()];
    let mut table = CharacterTable::new(g, cyc.clone(), Method::Dixon, rows, kinds)?;
    table.relabel(|i, _| format!("chi_{i}"));
    table.verify(g)?;
    Ok(table)
}
