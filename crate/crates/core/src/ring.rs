//! The dual numbers R_q = F_q[e]/(e^2).
//!
//! Only the truncation level r = 2 is modelled. A level-r version would carry
//! r coefficients and multiply by truncated convolution; nothing downstream
//! needs it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, Fq};

/// `r0 + r1 e` with `e^2 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct REps {
    pub r0: Fq,
    pub r1: Fq,
}

impl REps {
    pub const ZERO: REps = REps {
        r0: Fq::ZERO,
        r1: Fq::ZERO,
    };
    pub const ONE: REps = REps {
        r0: Fq::ONE,
        r1: Fq::ZERO,
    };
    /// The nilpotent generator e.
    pub const EPS: REps = REps {
        r0: Fq::ZERO,
        r1: Fq::ONE,
    };

    pub fn new(r0: Fq, r1: Fq) -> Self {
        REps { r0, r1 }
    }

    /// The section F_q -> R_q, `a -> a + 0e`. A ring map in equal characteristic.
    pub fn lift(a: Fq) -> Self {
        REps {
            r0: a,
            r1: Fq::ZERO,
        }
    }

    /// Reduction mod e.
    pub fn reduce(self) -> Fq {
        self.r0
    }

    pub fn is_unit(self) -> bool {
        !self.r0.is_zero()
    }

    #[inline]
    pub fn add(self, o: REps, k: &FieldCtx) -> REps {
        REps {
            r0: k.add(self.r0, o.r0),
            r1: k.add(self.r1, o.r1),
        }
    }

    #[inline]
    pub fn sub(self, o: REps, k: &FieldCtx) -> REps {
        REps {
            r0: k.sub(self.r0, o.r0),
            r1: k.sub(self.r1, o.r1),
        }
    }

    #[inline]
    pub fn neg(self, k: &FieldCtx) -> REps {
        REps {
            r0: k.neg(self.r0),
            r1: k.neg(self.r1),
        }
    }

    #[inline]
    pub fn mul(self, o: REps, k: &FieldCtx) -> REps {
        REps {
            r0: k.mul(self.r0, o.r0),
            r1: k.add(k.mul(self.r0, o.r1), k.mul(self.r1, o.r0)),
        }
    }

    /// `(r0 + r1 e)^-1 = r0^-1 - r0^-2 r1 e`.
    pub fn invert(self, k: &FieldCtx) -> Result<REps> {
        if !self.is_unit() {
            return Err(Error::NotUnit);
        }
        let i = k.inv_unit(self.r0);
        Ok(REps {
            r0: i,
            r1: k.neg(k.mul(k.mul(i, i), self.r1)),
        })
    }

    /// All q^2 elements, ordered by `(r0, r1)`.
    pub fn all(k: &FieldCtx) -> impl Iterator<Item = REps> + '_ {
        k.elements()
            .flat_map(move |a| k.elements().map(move |b| REps::new(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    #[test]
    fn reduce_and_lift() {
        let k = field(3);
        assert_eq!(REps::new(Fq(1), Fq(2)).reduce(), Fq(1));
        assert_eq!(REps::ZERO.reduce(), Fq(0));
        assert_eq!(REps::lift(Fq(2)), REps::new(Fq(2), Fq(0)));
        for x in REps::all(&k) {
            for y in REps::all(&k) {
                assert_eq!(x.mul(y, &k).reduce(), k.mul(x.reduce(), y.reduce()));
            }
        }
        for a in k.elements() {
            for b in k.elements() {
                assert_eq!(
                    REps::lift(a).mul(REps::lift(b), &k),
                    REps::lift(k.mul(a, b))
                );
            }
        }
        let k5 = field(5);
        assert!(k5.elements().all(|a| REps::lift(a).reduce() == a));
    }

    #[test]
    fn inverses() {
        let k = field(3);
        for a in k.elements() {
            let x = REps::new(Fq::ONE, a);
            assert_eq!(x.invert(&k).unwrap(), REps::new(Fq::ONE, k.neg(a)));
        }
        // (2 + e)^-1 = 2^-1 - 2^-2 * 1 e = 2 + 2e over F_3
        let x = REps::new(Fq(2), Fq(1));
        assert_eq!(x.invert(&k).unwrap(), REps::new(Fq(2), Fq(2)));
        assert_eq!(REps::EPS.invert(&k), Err(Error::NotUnit));
        for q in [3, 5, 9] {
            let k = field(q);
            for x in REps::all(&k).filter(|x| x.is_unit()) {
                assert_eq!(x.mul(x.invert(&k).unwrap(), &k), REps::ONE);
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_q3() {
        let k = field(3);
        let all: Vec<REps> = REps::all(&k).collect();
        assert_eq!(all.len(), 9);
        for &x in &all {
            assert_eq!(x.add(x.neg(&k), &k), REps::ZERO);
            assert_eq!(x.mul(REps::ONE, &k), x);
            for &y in &all {
                assert_eq!(x.mul(y, &k), y.mul(x, &k));
                assert_eq!(x.add(y, &k), y.add(x, &k));
                for &z in &all {
                    assert_eq!(x.mul(y.mul(z, &k), &k), x.mul(y, &k).mul(z, &k));
                    assert_eq!(x.mul(y.add(z, &k), &k), x.mul(y, &k).add(x.mul(z, &k), &k));
                    assert_eq!(x.add(y.add(z, &k), &k), x.add(y, &k).add(z, &k));
                }
            }
        }
        assert_eq!(REps::EPS.mul(REps::EPS, &k), REps::ZERO);
    }

    #[test]
    fn units_and_nilradical() {
        for q in [3u64, 5, 7] {
            let k = field(q);
            let units = REps::all(&k).filter(|x| x.is_unit()).count() as u64;
            assert_eq!(units, q * (q - 1));
            let nil = REps::all(&k)
                .filter(|x| x.mul(*x, &k) == REps::ZERO)
                .count() as u64;
            assert_eq!(nil, q);
        }
    }
}
