//! Exact arithmetic in the cyclotomic field Q(zeta_m).
//!
//! A value is a residue modulo the m-th cyclotomic polynomial, stored as an
//! integer coefficient vector of length phi(m) over one positive common
//! denominator. Products take an `i128` path when every coefficient fits in
//! `i64` and fall back to big integers on overflow, so results are always
//! exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

#[derive(Debug)]
struct CycInner {
    m: u32,
    phi: usize,
    /// Monic Phi_m, constant term first.
    poly: Vec<i64>,
    /// Reduced coordinates of zeta^j for j in 0..m.
    zeta: Vec<Vec<i64>>,
}

/// Shared handle to Q(zeta_m). Cloning is cheap.
#[derive(Clone, Debug)]
pub struct CycCtx(Arc<CycInner>);

impl PartialEq for CycCtx {
    fn eq(&self, other: &Self) -> bool {
        self.0.m == other.0.m
    }
}

impl Eq for CycCtx {}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(*den.last().unwrap(), 1);
    let mut r = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = r[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                r[k + i] -= c * d;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Phi_m by dividing x^m - 1 by Phi_d for every proper divisor d.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    let divisors: Vec<u32> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let mut known: Vec<(u32, Vec<i64>)> = Vec::with_capacity(divisors.len());
    for &n in &divisors {
        let mut p = vec![0i64; n as usize + 1];
        p[0] = -1;
        p[n as usize] = 1;
        for (d, phi_d) in &known {
            if n % d == 0 {
                p = poly_div_exact(&p, phi_d);
            }
        }
        known.push((n, p));
    }
    known.pop().unwrap().1
}

impl CycCtx {
    pub fn new(m: u32) -> Self {
        let poly = cyclotomic_polynomial(m);
        let phi = poly.len() - 1;
        let mut zeta = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..m {
            zeta.push(cur.clone());
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        CycCtx(Arc::new(CycInner { m, phi, poly, zeta }))
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn phi(&self) -> usize {
        self.0.phi
    }

    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.0.poly
    }

    fn num_from_coeffs(&self, v: &[i64]) -> CycNum {
        CycNum {
            ctx: self.clone(),
            num: v.iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    pub fn zero(&self) -> CycNum {
        CycNum {
            ctx: self.clone(),
            num: vec![BigInt::zero(); self.0.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(&self) -> CycNum {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> CycNum {
        let mut z = self.zero();
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_rational(&self, r: &BigRational) -> CycNum {
        let mut z = self.zero();
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// zeta_m^j for any integer exponent.
    pub fn zeta_pow(&self, j: u32) -> CycNum {
        self.num_from_coeffs(&self.0.zeta[(j % self.0.m) as usize])
    }

    /// A root of unity of order dividing `m`: zeta_order^j.
    pub fn root_of_unity(&self, order: u32, j: u32) -> CycNum {
        assert_eq!(self.0.m % order, 0, "order must divide the conductor");
        self.zeta_pow((self.0.m / order) * (j % order))
    }

    fn check(&self, other: &CycCtx) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                left: self.m(),
                right: other.m(),
            });
        }
        Ok(())
    }

    /// Reduces an unreduced integer vector indexed by powers of zeta.
    fn reduce_wide(&self, wide: &[i128]) -> Option<Vec<i128>> {
        let phi = self.0.phi;
        let mut out = vec![0i128; phi];
        for (j, &c) in wide.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if j < phi {
                out[j] = out[j].checked_add(c)?;
            } else {
                let z = &self.0.zeta[j % self.0.m as usize];
                for (o, &zc) in out.iter_mut().zip(z) {
                    if zc != 0 {
                        *o = o.checked_add(c.checked_mul(zc as i128)?)?;
                    }
                }
            }
        }
        Some(out)
    }

    /// `sum_i w_i * a_i * conj(b_i)`, the weighted Hermitian pairing used by
    /// character inner products.
    pub fn hermitian_dot(&self, weights: &[i64], a: &[CycNum], b: &[CycNum]) -> Result<CycNum> {
        assert_eq!(weights.len(), a.len());
        assert_eq!(a.len(), b.len());
        for x in a.iter().chain(b) {
            self.check(&x.ctx)?;
        }
        if let Some(v) = self.hermitian_dot_small(weights, a, b) {
            return Ok(v);
        }
        let mut acc = self.zero();
        for ((w, x), y) in weights.iter().zip(a).zip(b) {
            acc = &acc + &(&(x * &y.conj()) * &self.from_int(*w));
        }
        Ok(acc)
    }

    fn hermitian_dot_small(&self, weights: &[i64], a: &[CycNum], b: &[CycNum]) -> Option<CycNum> {
        let phi = self.0.phi;
        let mut wide = vec![0i128; 2 * phi];
        let mut den = BigInt::one();
        let mut dens_one = true;
        for x in a.iter().chain(b) {
            if !x.den.is_one() {
                dens_one = false;
            }
        }
        if !dens_one {
            // common denominators are rare; keep the fast path integral
            for x in a.iter().chain(b) {
                den = den.lcm(&x.den);
            }
            den.to_i64()?;
        }
        let scale = |x: &CycNum| -> Option<Vec<i64>> {
            let f = (&den / &x.den).to_i64()?;
            x.num.iter().map(|c| c.to_i64()?.checked_mul(f)).collect()
        };
        for ((&w, x), y) in weights.iter().zip(a).zip(b) {
            if x.is_zero() || y.is_zero() || w == 0 {
                continue;
            }
            let xs = scale(x)?;
            let yc = y.conj();
            let ys = scale(&yc)?;
            for (i, &xi) in xs.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                let wx = (w as i128).checked_mul(xi as i128)?;
                for (j, &yj) in ys.iter().enumerate() {
                    if yj != 0 {
                        wide[i + j] = wide[i + j].checked_add(wx.checked_mul(yj as i128)?)?;
                    }
                }
            }
        }
        let red = self.reduce_wide(&wide)?;
        let mut out = CycNum {
            ctx: self.clone(),
            num: red.into_iter().map(BigInt::from).collect(),
            den: &den * &den,
        };
        out.normalize();
        Some(out)
    }
}

/// An exact element of Q(zeta_m).
#[derive(Clone, Debug)]
pub struct CycNum {
    ctx: CycCtx,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNum {}

impl std::hash::Hash for CycNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.m().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl CycNum {
    pub fn ctx(&self) -> &CycCtx {
        &self.ctx
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Coefficient of zeta^i in the reduced basis.
    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.ctx.check(&other.ctx)?;
        let mut out = if self.den == other.den {
            CycNum {
                ctx: self.ctx.clone(),
                num: self
                    .num
                    .iter()
                    .zip(&other.num)
                    .map(|(a, b)| a + b)
                    .collect(),
                den: self.den.clone(),
            }
        } else {
            CycNum {
                ctx: self.ctx.clone(),
                num: self
                    .num
                    .iter()
                    .zip(&other.num)
                    .map(|(a, b)| a * &other.den + b * &self.den)
                    .collect(),
                den: &self.den * &other.den,
            }
        };
        out.normalize();
        Ok(out)
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.ctx.check(&other.ctx)?;
        let num = self.mul_small(other).unwrap_or_else(|| self.mul_big(other));
        let mut out = CycNum {
            ctx: self.ctx.clone(),
            num,
            den: &self.den * &other.den,
        };
        out.normalize();
        Ok(out)
    }

    fn mul_small(&self, other: &CycNum) -> Option<Vec<BigInt>> {
        let a: Vec<i64> = self
            .num
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<_>>()?;
        let b: Vec<i64> = other
            .num
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<_>>()?;
        let mut wide = vec![0i128; 2 * a.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    wide[i + j] = wide[i + j].checked_add(x as i128 * y as i128)?;
                }
            }
        }
        let red = self.ctx.reduce_wide(&wide)?;
        Some(red.into_iter().map(BigInt::from).collect())
    }

    fn mul_big(&self, other: &CycNum) -> Vec<BigInt> {
        let phi = self.ctx.phi();
        let mut wide = vec![BigInt::zero(); 2 * phi];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    wide[i + j] += x * y;
                }
            }
        }
        let mut out = vec![BigInt::zero(); phi];
        for (j, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < phi {
                out[j] += c;
            } else {
                let z = &self.ctx.0.zeta[j % self.ctx.m() as usize];
                for (o, &zc) in out.iter_mut().zip(z) {
                    if zc != 0 {
                        *o += &c * zc;
                    }
                }
            }
        }
        out
    }

    /// Complex conjugation, the automorphism zeta -> zeta^(m-1).
    pub fn conj(&self) -> CycNum {
        let m = self.ctx.m();
        let phi = self.ctx.phi();
        let mut out = vec![BigInt::zero(); phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = &self.ctx.0.zeta[((m - i as u32) % m) as usize];
            for (o, &zc) in out.iter_mut().zip(z) {
                if zc != 0 {
                    *o += c * zc;
                }
            }
        }
        CycNum {
            ctx: self.ctx.clone(),
            num: out,
            den: self.den.clone(),
        }
    }

    /// Galois action zeta -> zeta^k, for k coprime to m.
    pub fn galois(&self, k: u32) -> CycNum {
        let m = self.ctx.m();
        assert_eq!(k.gcd(&m), 1, "k must be a unit mod m");
        let mut acc = self.ctx.zero();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = self.ctx.zeta_pow(((i as u64 * k as u64) % m as u64) as u32);
            acc = &acc + &z.scale(c);
        }
        acc.den = self.den.clone();
        acc.normalize();
        acc
    }

    pub fn scale(&self, k: &BigInt) -> CycNum {
        let mut out = CycNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| c * k).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    /// Exact division by a nonzero integer.
    pub fn div_int(&self, k: &BigInt) -> CycNum {
        assert!(!k.is_zero(), "division by zero");
        let mut out = CycNum {
            ctx: self.ctx.clone(),
            num: self.num.clone(),
            den: &self.den * k,
        };
        out.normalize();
        out
    }

    /// Returns the value if it is a rational number.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeff(0))
    }

    /// Returns `n` when the value is exactly the rational integer `n`.
    pub fn as_rational_integer(&self) -> Result<BigInt> {
        match self.as_rational() {
            Some(r) if r.is_integer() => Ok(r.to_integer()),
            _ => Err(Error::NotInteger(self.to_string())),
        }
    }

    /// Convenience for small integer values.
    pub fn as_i64(&self) -> Result<i64> {
        self.as_rational_integer()?
            .to_i64()
            .ok_or_else(|| Error::NotInteger(self.to_string()))
    }

    /// Approximate complex value under zeta = exp(2 pi i / m). Display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.ctx.m() as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let ang = 2.0 * std::f64::consts::PI * i as f64 / m;
            re += c * ang.cos();
            im += c * ang.sin();
        }
        (re, im)
    }

    /// Integer numerators when the denominator is 1.
    pub(crate) fn integral_coeffs(&self) -> Option<&[BigInt]> {
        self.den.is_one().then_some(&self.num[..])
    }
}

impl PartialOrd for CycNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the reduced coefficient vector; only used to fix a
/// canonical order, it has no arithmetic meaning.
impl Ord for CycNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx.m().cmp(&other.ctx.m()).then_with(|| {
            for (a, b) in self.num.iter().zip(&other.num) {
                let ord = (a * &other.den).cmp(&(b * &self.den));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{r}")?,
                1 => write!(f, "({r})*z{}", self.ctx.m())?,
                _ => write!(f, "({r})*z{}^{i}", self.ctx.m())?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `{ "m": m, "coeffs": ["num/den", ...] }`, each coefficient in lowest terms.
impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self
            .coeffs()
            .iter()
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .collect();
        let mut st = s.serialize_struct("CycNum", 2)?;
        st.serialize_field("m", &self.ctx.m())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            /// Panics on a context mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic context mismatch")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// Accumulates sums of integer multiples of roots of unity without reducing
/// after every term.
#[derive(Clone, Debug)]
pub struct ZetaSum {
    ctx: CycCtx,
    counts: Vec<i128>,
    rest: Option<CycNum>,
}

impl ZetaSum {
    pub fn new(ctx: &CycCtx) -> Self {
        ZetaSum {
            ctx: ctx.clone(),
            counts: vec![0; ctx.m() as usize],
            rest: None,
        }
    }

    /// Adds `k * zeta^j`.
    pub fn add_zeta(&mut self, k: i64, j: u32) {
        let slot = &mut self.counts[(j % self.ctx.m()) as usize];
        *slot = slot.checked_add(k as i128).expect("ZetaSum overflow");
    }

    /// Adds `x * zeta^j`.
    pub fn add_shifted(&mut self, x: &CycNum, j: u32) {
        assert!(self.ctx == x.ctx, "cyclotomic context mismatch");
        let m = self.ctx.m();
        match x.integral_coeffs() {
            Some(cs) if cs.iter().all(|c| c.to_i64().is_some()) => {
                for (i, c) in cs.iter().enumerate() {
                    let c = c.to_i64().unwrap();
                    if c != 0 {
                        self.add_zeta(c, (i as u32 + j) % m);
                    }
                }
            }
            _ => {
                let term = x * &self.ctx.zeta_pow(j);
                self.rest = Some(match self.rest.take() {
                    Some(r) => &r + &term,
                    None => term,
                });
            }
        }
    }

    pub fn finish(self) -> CycNum {
        let phi = self.ctx.phi();
        let mut num = vec![BigInt::zero(); phi];
        for (j, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &zc) in num.iter_mut().zip(&self.ctx.0.zeta[j]) {
                if zc != 0 {
                    *o += BigInt::from(c) * zc;
                }
            }
        }
        let base = CycNum {
            ctx: self.ctx.clone(),
            num,
            den: BigInt::one(),
        };
        match self.rest {
            Some(r) => &base + &r,
            None => base,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // phi(36) = 12, phi(300) = 80
        assert_eq!(CycCtx::new(36).phi(), 12);
        assert_eq!(CycCtx::new(300).phi(), 80);
    }

    #[test]
    fn arithmetic_examples() {
        let k3 = CycCtx::new(3);
        let z = k3.zeta_pow(1);
        assert!((&(&z * &z) * &z).is_one());
        assert!((&(&k3.one() + &z) + &(&z * &z)).is_zero());
        let k4 = CycCtx::new(4);
        let i = k4.zeta_pow(1);
        let prod = &(&k4.one() + &i) * &(&k4.one() - &i);
        assert_eq!(prod, k4.from_int(2));
    }

    #[test]
    fn conjugation_examples() {
        let k5 = CycCtx::new(5);
        assert_eq!(k5.from_int(7).conj(), k5.from_int(7));
        assert_eq!(k5.zeta_pow(1).conj(), k5.zeta_pow(4));
        let k3 = CycCtx::new(3);
        let a = &k3.one() + &k3.zeta_pow(1);
        assert!((&a * &a.conj()).is_one());
    }

    #[test]
    fn rational_integer_detection() {
        let k3 = CycCtx::new(3);
        assert_eq!(k3.zero().as_rational_integer().unwrap(), BigInt::zero());
        let s = &(&k3.one() + &k3.zeta_pow(1)) + &k3.zeta_pow(2);
        assert_eq!(s.as_i64().unwrap(), 0);
        assert!(k3.zeta_pow(1).as_rational_integer().is_err());
        let half = k3.one().div_int(&BigInt::from(2));
        assert!(half.as_rational_integer().is_err());
        assert_eq!(half.scale(&BigInt::from(4)).as_i64().unwrap(), 2);
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = CycCtx::new(3).one();
        let b = CycCtx::new(4).one();
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::ContextMismatch { left: 3, right: 4 })
        ));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn zeta_order_is_m() {
        for m in [1, 2, 3, 5, 8, 12, 36, 60] {
            let k = CycCtx::new(m);
            let z = k.zeta_pow(1);
            let mut acc = k.one();
            for _ in 0..m {
                acc = &acc * &z;
            }
            assert!(acc.is_one(), "m = {m}");
            assert!(k.zeta_pow(m).is_one());
        }
    }

    #[test]
    fn big_integer_fallback_agrees() {
        let k = CycCtx::new(12);
        let big = k.from_int(i64::MAX).scale(&BigInt::from(i64::MAX));
        let x = &big + &k.zeta_pow(5);
        let sq = &x * &x;
        // (B + z)^2 = B^2 + 2 B z + z^2
        let expect =
            &(&(&big * &big) + &(&big * &k.zeta_pow(5)).scale(&BigInt::from(2))) + &k.zeta_pow(10);
        assert_eq!(sq, expect);
    }

    #[test]
    fn zeta_sum_matches_direct_sum() {
        let k = CycCtx::new(36);
        let mut acc = ZetaSum::new(&k);
        let mut direct = k.zero();
        let x = &k.from_int(3) - &k.zeta_pow(7);
        for j in 0..50u32 {
            acc.add_zeta(j as i64 - 20, j * 5);
            acc.add_shifted(&x, j);
            direct = &direct + &k.zeta_pow(j * 5).scale(&BigInt::from(j as i64 - 20));
            direct = &direct + &(&x * &k.zeta_pow(j));
        }
        assert_eq!(acc.finish(), direct);
    }

    #[test]
    fn hermitian_dot_matches_generic() {
        let k = CycCtx::new(36);
        let a: Vec<CycNum> = (0..5)
            .map(|j| &k.zeta_pow(j) + &k.from_int(j as i64))
            .collect();
        let b: Vec<CycNum> = (0..5)
            .map(|j| (&k.zeta_pow(3 * j) - &k.one()).div_int(&BigInt::from(2)))
            .collect();
        let w = [1, 2, 3, 4, 5];
        let fast = k.hermitian_dot(&w, &a, &b).unwrap();
        let mut slow = k.zero();
        for i in 0..5 {
            slow = &slow + &(&(&a[i] * &b[i].conj()) * &k.from_int(w[i]));
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn json_shape() {
        let k = CycCtx::new(4);
        let v = (&k.zeta_pow(1) + &k.from_int(3)).div_int(&BigInt::from(6));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json, serde_json::json!({"m": 4, "coeffs": ["1/2", "1/6"]}));
    }

    fn arb_cyc(m: u32) -> impl Strategy<Value = CycNum> {
        let ctx = CycCtx::new(m);
        let phi = ctx.phi();
        (prop::collection::vec(-50i64..50, phi), 1i64..6)
            .prop_map(move |(v, d)| ctx.num_from_coeffs(&v).div_int(&BigInt::from(d)))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyc(12), b in arb_cyc(12), c in arb_cyc(12)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&(&a - &b) + &b - a.clone()).is_zero());
        }

        #[test]
        fn conjugation_is_involutive_automorphism(a in arb_cyc(20), b in arb_cyc(20)) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
            prop_assert!((&a * &a.conj()).conj() == &a * &a.conj());
        }
    }
}
