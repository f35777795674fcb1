//! The cyclotomic field `Q(q)`, `q` a primitive `N`-th root of unity, `N` odd.
//!
//! Elements are stored as integer numerators over a common positive
//! denominator, reduced modulo the cyclotomic polynomial `Phi_N`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shared data for one root of unity: `N`, `phi(N)` and `Phi_N`.
#[derive(Debug)]
pub struct CycField {
    n: u32,
    /// Monic `Phi_N`, lowest degree first; length `phi + 1`.
    modulus: Vec<BigInt>,
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}
impl Eq for CycField {}

/// Integer polynomial `x^n - 1` divided by `Phi_d` for every proper divisor `d`.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_exact_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl CycField {
    pub fn new(n: u32) -> Result<Arc<CycField>> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::BadRoot(n));
        }
        Ok(Arc::new(CycField { n, modulus: cyclotomic_poly(n) }))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree of `Phi_N`.
    pub fn phi(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduce exponent modulo `N` into `0..N`.
    pub fn exp(&self, k: i64) -> usize {
        k.rem_euclid(self.n as i64) as usize
    }

    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi();
        if p.len() > phi {
            for d in (phi..p.len()).rev() {
                let c = core::mem::take(&mut p[d]);
                if c.is_zero() {
                    continue;
                }
                for i in 0..phi {
                    let m = &self.modulus[i];
                    if !m.is_zero() {
                        p[d - phi + i] -= &c * m;
                    }
                }
            }
            p.truncate(phi);
        } else {
            p.resize(phi, BigInt::zero());
        }
        p
    }
}

/// An element of `Q(q)`.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.den == other.den && self.num == other.num
    }
}
impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl CycScalar {
    fn build(field: &Arc<CycField>, num: Vec<BigInt>, den: BigInt) -> CycScalar {
        let num = field.reduce(num);
        let mut s = CycScalar { field: field.clone(), num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -core::mem::take(c);
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
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn zero(field: &Arc<CycField>) -> CycScalar {
        CycScalar { field: field.clone(), num: vec![BigInt::zero(); field.phi()], den: BigInt::one() }
    }

    pub fn one(field: &Arc<CycField>) -> CycScalar {
        CycScalar::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycField>, k: i64) -> CycScalar {
        let mut num = vec![BigInt::zero(); field.phi()];
        num[0] = BigInt::from(k);
        CycScalar { field: field.clone(), num, den: BigInt::one() }
    }

    pub fn from_rational(field: &Arc<CycField>, r: &BigRational) -> CycScalar {
        let mut num = vec![BigInt::zero(); field.phi()];
        num[0] = r.numer().clone();
        CycScalar::build(field, num, r.denom().clone())
    }

    /// `sum_i coeffs[i] q^i`; any length is accepted and reduced.
    pub fn from_coeffs(field: &Arc<CycField>, coeffs: &[BigRational]) -> CycScalar {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        CycScalar::build(field, num, den)
    }

    /// `sum_i coeffs[i] q^i` with integer coefficients.
    pub fn from_ints(field: &Arc<CycField>, coeffs: &[i64]) -> CycScalar {
        let num = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        CycScalar::build(field, num, BigInt::one())
    }

    /// `q^k` for any integer `k`.
    pub fn qpow(field: &Arc<CycField>, k: i64) -> CycScalar {
        let e = field.exp(k);
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        CycScalar::build(field, num, BigInt::one())
    }

    pub fn q(field: &Arc<CycField>) -> CycScalar {
        CycScalar::qpow(field, 1)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn n(&self) -> u32 {
        self.field.n
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Coefficient of `q^i` in the reduced representation (`i < phi(N)`).
    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    /// The value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    fn check(&self, other: &CycScalar) {
        assert_eq!(self.field.n, other.field.n, "cyclotomic scalars over different N");
    }

    /// Multiply by `q^k` (cheaper than a general product).
    pub fn mul_qpow(&self, k: i64) -> CycScalar {
        let e = self.field.exp(k);
        if e == 0 || self.is_zero() {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); e];
        num.extend(self.num.iter().cloned());
        CycScalar { field: self.field.clone(), num: self.field.reduce(num), den: self.den.clone() }
    }

    pub fn scale_int(&self, k: i64) -> CycScalar {
        let k = BigInt::from(k);
        let num = self.num.iter().map(|c| c * &k).collect();
        let mut s = CycScalar { field: self.field.clone(), num, den: self.den.clone() };
        s.normalize();
        s
    }

    /// Image under the Galois automorphism `q -> q^k` (`k` coprime to `N`).
    pub fn galois(&self, k: i64) -> CycScalar {
        let n = self.field.n as usize;
        let mut num = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                num[self.field.exp(i as i64 * k)] += c;
            }
        }
        CycScalar::build(&self.field, num, self.den.clone())
    }

    /// Complex conjugation, `q -> q^{-1}`.
    pub fn conj(&self) -> CycScalar {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field.n as i64;
        let mut rest = CycScalar::one(&self.field);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                rest = &rest * &self.galois(k);
            }
        }
        let norm = (&rest * self).as_rational().expect("field norm is rational");
        let inv_norm = CycScalar::from_rational(&self.field, &norm.recip());
        Ok(&rest * &inv_norm)
    }

    pub fn div(&self, other: &CycScalar) -> Result<CycScalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<CycScalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycScalar::one(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
    pub fn qnumber(field: &Arc<CycField>, n: i64) -> CycScalar {
        let m = n.abs();
        let mut acc = CycScalar::zero(field);
        for j in 0..m {
            acc += &CycScalar::qpow(field, m - 1 - 2 * j);
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    /// `[1][2]...[n]`, with `[0]! = 1`.
    pub fn qfactorial(field: &Arc<CycField>, n: u32) -> CycScalar {
        let mut acc = CycScalar::one(field);
        for k in 1..=n as i64 {
            acc = &acc * &CycScalar::qnumber(field, k);
        }
        acc
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.check(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            let mut s = CycScalar { field: self.field.clone(), num, den: self.den.clone() };
            s.normalize();
            return s;
        }
        let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a * &rhs.den + b * &self.den).collect();
        let mut s = CycScalar { field: self.field.clone(), num, den: &self.den * &rhs.den };
        s.normalize();
        s
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return CycScalar::zero(&self.field);
        }
        let phi = self.num.len();
        let mut num = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        let mut s = CycScalar { field: self.field.clone(), num: self.field.reduce(num), den: &self.den * &rhs.den };
        s.normalize();
        s
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(mut self) -> CycScalar {
        for c in self.num.iter_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                self.$m(&rhs)
            }
        }
        impl<'a> $atr<&'a CycScalar> for CycScalar {
            fn $am(&mut self, rhs: &CycScalar) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<CycScalar> for CycScalar {
            fn $am(&mut self, rhs: CycScalar) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

owned_ops!(Add, add, AddAssign, add_assign);
owned_ops!(Sub, sub, SubAssign, sub_assign);
owned_ops!(Mul, mul, MulAssign, mul_assign);

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Textual form: ascending powers of `q`, e.g. `1/3 + 2*q^2` or `-q`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..self.num.len() {
            if self.num[i].is_zero() {
                continue;
            }
            let c = self.coeff(i);
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => String::from("q"),
                _ => alloc::format!("q^{i}"),
            };
            if i == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{}*{power}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}
