//! Arithmetic in the finite field F_q, q = p^f with p odd.
//!
//! Elements are stored as indices into the context's tables. The index of an
//! element is its coefficient vector read as a base-p number, constant term
//! least significant, so the enumeration order `0..q` is lexicographic in
//! `(c_{f-1}, ..., c_1, c_0)`. For prime fields the index is the residue.

use std::fmt;

use serde::Serialize;

use crate::cyclo::{CycCtx, CycNum};
use crate::error::{Error, Result};

/// Largest field size a context will be built for. Group enumeration has its
/// own, much tighter, budget.
pub const MAX_FIELD_SIZE: u32 = 27;

/// An element of F_q, as an index into its [`FieldCtx`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Fq(pub(crate) u8);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field F_q with precomputed operation tables.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    f: u32,
    q: u32,
    /// Monic modulus, coefficients from constant term up; length f + 1.
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    trace: Vec<u8>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^f`, or reports why it cannot be a field size we accept.
pub fn split_prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    if p == 2 {
        return Err(Error::EvenCharacteristic(2));
    }
    Ok((p as u32, f))
}

fn digits(mut n: u32, p: u32, f: u32) -> Vec<u32> {
    (0..f)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over F_p.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * mc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Brute-force irreducibility: no monic factor of degree 1..=deg/2.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d) {
            let mut cand = digits(low, p, d);
            cand.push(1);
            if poly_rem(m, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `f` over F_p, with
/// non-leading coefficients ordered as `(c_{f-1}, ..., c_0)`.
fn smallest_irreducible(p: u32, f: u32) -> Vec<u32> {
    for low in 0..p.pow(f) {
        let mut m = digits(low, p, f);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldCtx {
    /// Builds F_{p^f}.
    pub fn new(p: u32, f: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic(2));
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if f == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(f).unwrap_or(u64::MAX);
        if q > MAX_FIELD_SIZE as u64 {
            return Err(Error::Budget {
                what: "field size",
                size: q,
                limit: MAX_FIELD_SIZE as u64,
            });
        }
        let q = q as u32;
        let modulus = smallest_irreducible(p, f);
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        let elems: Vec<Vec<u32>> = (0..q).map(|n| digits(n, p, f)).collect();
        for x in 0..qs {
            for y in 0..qs {
                let s: Vec<u32> = (0..f as usize)
                    .map(|i| (elems[x][i] + elems[y][i]) % p)
                    .collect();
                add[x * qs + y] = from_digits(&s, p) as u8;
                let mut prod = vec![0u32; 2 * f as usize - 1];
                for i in 0..f as usize {
                    for j in 0..f as usize {
                        prod[i + j] = (prod[i + j] + elems[x][i] * elems[y][j]) % p;
                    }
                }
                let r = poly_rem(&prod, &modulus, p);
                let mut r = r;
                r.resize(f as usize, 0);
                mul[x * qs + y] = from_digits(&r, p) as u8;
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for x in 0..qs {
            for y in 0..qs {
                if add[x * qs + y] == 0 {
                    neg[x] = y as u8;
                }
                if mul[x * qs + y] == 1 {
                    inv[x] = y as u8;
                }
            }
        }
        let mut ctx = FieldCtx {
            p,
            f,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            trace: vec![0; qs],
        };
        for x in 0..qs {
            let mut acc = Fq(0);
            let mut power = Fq(x as u8);
            for _ in 0..f {
                acc = ctx.add(acc, power);
                power = ctx.pow(power, p as u64);
            }
            ctx.trace[x] = acc.0;
        }
        Ok(ctx)
    }

    /// Builds the field of size `q`, which must be an odd prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, f) = split_prime_power(q)?;
        Self::new(p, f)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic modulus, constant coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + Clone {
        (0..self.q as u8).map(Fq)
    }

    pub fn units(&self) -> impl Iterator<Item = Fq> + Clone {
        (1..self.q as u8).map(Fq)
    }

    /// Coefficient vector, constant term first.
    pub fn coeffs(&self, x: Fq) -> Vec<u32> {
        digits(x.0 as u32, self.p, self.f)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Fq {
        assert_eq!(c.len(), self.f as usize);
        Fq(from_digits(c, self.p) as u8)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u8)
    }

    /// Residue of a prime-subfield element, `None` if `x` is not in F_p.
    pub fn prime_value(&self, x: Fq) -> Option<u32> {
        ((x.0 as u32) < self.p).then_some(x.0 as u32)
    }

    #[inline]
    pub fn add(&self, x: Fq, y: Fq) -> Fq {
        Fq(self.add[x.index() * self.q as usize + y.index()])
    }

    #[inline]
    pub fn sub(&self, x: Fq, y: Fq) -> Fq {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Fq, y: Fq) -> Fq {
        Fq(self.mul[x.index() * self.q as usize + y.index()])
    }

    #[inline]
    pub fn neg(&self, x: Fq) -> Fq {
        Fq(self.neg[x.index()])
    }

    pub fn inv(&self, x: Fq) -> Result<Fq> {
        if x.is_zero() {
            return Err(Error::NotUnit);
        }
        Ok(Fq(self.inv[x.index()]))
    }

    /// Inverse of a known unit. Panics on zero.
    #[inline]
    pub(crate) fn inv_unit(&self, x: Fq) -> Fq {
        debug_assert!(!x.is_zero());
        Fq(self.inv[x.index()])
    }

    pub fn pow(&self, x: Fq, mut e: u64) -> Fq {
        let mut base = x;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace F_q -> F_p, `sum x^(p^i)`.
    #[inline]
    pub fn trace(&self, x: Fq) -> Fq {
        Fq(self.trace[x.index()])
    }

    /// Whether a nonzero `x` is a square, via Euler's criterion.
    pub fn is_square(&self, x: Fq) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroSquareTest);
        }
        Ok(self.pow(x, (self.q as u64 - 1) / 2) == Fq::ONE)
    }

    /// First non-square in enumeration order.
    pub fn smallest_nonsquare(&self) -> Fq {
        self.units()
            .find(|&x| !self.is_square(x).unwrap())
            .expect("odd q has non-squares")
    }

    /// Exponent `Tr(a x)` of the additive character `psi_a(x) = zeta_p^Tr(ax)`.
    #[inline]
    pub fn psi_exponent(&self, a: Fq, x: Fq) -> u32 {
        self.trace(self.mul(a, x)).0 as u32
    }

    /// The additive character `psi_a`, with values in `cyc`.
    pub fn additive_character<'a>(
        &'a self,
        cyc: &'a CycCtx,
        a: Fq,
    ) -> Result<impl Fn(Fq) -> CycNum + 'a> {
        if !cyc.m().is_multiple_of(self.p) {
            return Err(Error::MissingRoot {
                m: cyc.m(),
                p: self.p,
            });
        }
        let step = cyc.m() / self.p;
        Ok(move |x: Fq| cyc.zeta_pow(step * self.psi_exponent(a, x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, d: u32) -> FieldCtx {
        FieldCtx::new(p, d).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldCtx::new(2, 1).unwrap_err(),
            Error::EvenCharacteristic(2)
        );
        assert_eq!(FieldCtx::new(9, 1).unwrap_err(), Error::NotPrime(9));
        assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(FieldCtx::new(29, 1), Err(Error::Budget { .. })));
        assert_eq!(
            FieldCtx::with_order(4).unwrap_err(),
            Error::EvenCharacteristic(2)
        );
        assert_eq!(
            FieldCtx::with_order(15).unwrap_err(),
            Error::NotPrimePower(15)
        );
    }

    #[test]
    fn prime_field_f3() {
        let k = f(3, 1);
        assert_eq!(k.elements().count(), 3);
        assert_eq!(k.modulus(), &[0, 1]);
        assert_eq!(k.mul(Fq(2), Fq(2)), Fq(1));
    }

    #[test]
    fn f9_modulus_is_smallest_irreducible() {
        // Oracle: scan monic quadratics x^2 + b x + c in (b, c) order and keep
        // the first one without a root in F_3.
        let mut expected = None;
        'scan: for b in 0..3u32 {
            for c in 0..3u32 {
                if (0..3u32).all(|x| (x * x + b * x + c) % 3 != 0) {
                    expected = Some(vec![c, b, 1]);
                    break 'scan;
                }
            }
        }
        let k = f(3, 2);
        assert_eq!(k.q(), 9);
        assert_eq!(Some(k.modulus().to_vec()), expected);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, d) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)] {
            let k = f(p, d);
            for x in k.elements() {
                assert_eq!(k.pow(x, k.q() as u64), x, "Frobenius stability");
                if !x.is_zero() {
                    assert_eq!(k.mul(x, k.inv(x).unwrap()), Fq::ONE);
                }
                for y in k.elements() {
                    assert_eq!(k.add(x, y), k.add(y, x));
                    assert_eq!(k.mul(x, y), k.mul(y, x));
                    for z in k.elements() {
                        assert_eq!(k.mul(x, k.add(y, z)), k.add(k.mul(x, y), k.mul(x, z)));
                        assert_eq!(k.mul(x, k.mul(y, z)), k.mul(k.mul(x, y), z));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let k3 = f(3, 1);
        assert_eq!(k3.trace(Fq(2)), Fq(2));
        let k9 = f(3, 2);
        assert_eq!(k9.trace(Fq::ONE), Fq(2));
        assert_eq!(k9.elements().filter(|&x| k9.trace(x).is_zero()).count(), 3);
    }

    #[test]
    fn trace_is_additive_and_frobenius_invariant() {
        for (p, d) in [(3, 1), (5, 1), (3, 2), (7, 1), (5, 2)] {
            let k = f(p, d);
            for x in k.elements() {
                assert!(k.prime_value(k.trace(x)).is_some());
                assert_eq!(k.trace(k.pow(x, p as u64)), k.trace(x));
                for y in k.elements() {
                    assert_eq!(k.trace(k.add(x, y)), k.add(k.trace(x), k.trace(y)));
                }
            }
        }
    }

    #[test]
    fn squares() {
        let k3 = f(3, 1);
        assert!(k3.is_square(Fq(1)).unwrap());
        assert!(!k3.is_square(Fq(2)).unwrap());
        assert_eq!(k3.is_square(Fq(0)), Err(Error::ZeroSquareTest));
        let k5 = f(5, 1);
        assert_eq!(k5.units().filter(|&x| k5.is_square(x).unwrap()).count(), 2);
        for (p, d) in [(3, 2), (7, 1), (11, 1)] {
            let k = f(p, d);
            let sq: Vec<Fq> = k.units().filter(|&x| k.is_square(x).unwrap()).collect();
            assert_eq!(sq.len() as u32, (k.q() - 1) / 2);
            // index-2 subgroup: closed under products
            for &a in &sq {
                for &b in &sq {
                    assert!(sq.contains(&k.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn additive_characters() {
        let k = f(3, 1);
        let cyc = CycCtx::new(3);
        let psi1 = k.additive_character(&cyc, Fq::ONE).unwrap();
        assert!(psi1(Fq::ZERO).is_one());
        let total = k.elements().map(&psi1).fold(cyc.zero(), |a, b| &a + &b);
        assert!(total.is_zero());
        let psi0 = k.additive_character(&cyc, Fq::ZERO).unwrap();
        assert!(k.elements().all(|x| psi0(x).is_one()));
        assert!(k.additive_character(&CycCtx::new(4), Fq::ONE).is_err());
    }

    #[test]
    fn additive_characters_are_distinct_homomorphisms() {
        for (p, d) in [(3, 1), (5, 1), (3, 2)] {
            let k = f(p, d);
            let cyc = CycCtx::new(p);
            let tables: Vec<Vec<CycNum>> = k
                .elements()
                .map(|a| {
                    let psi = k.additive_character(&cyc, a).unwrap();
                    k.elements().map(psi).collect()
                })
                .collect();
            for (i, t) in tables.iter().enumerate() {
                for x in k.elements() {
                    for y in k.elements() {
                        assert_eq!(t[k.add(x, y).index()], &t[x.index()] * &t[y.index()]);
                    }
                }
                for u in &tables[i + 1..] {
                    assert_ne!(t, u);
                }
            }
        }
    }
}
