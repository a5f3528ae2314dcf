//! Rationals with a p-adic valuation, the residue field F_p and its
//! polynomials, and the chordal distance on P¹(ℚ).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("NegativeValuation: element is not p-integral")]
    NegativeValuation,
    #[error("NotPrime: {0} is not a prime")]
    NotPrime(u64),
}

/// A valuation value: an integer, or +∞ for the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Val {
    Fin(i64),
    Inf,
}

impl Val {
    pub fn fin(self) -> Option<i64> {
        match self {
            Val::Fin(v) => Some(v),
            Val::Inf => None,
        }
    }

    pub fn unwrap_fin(self) -> i64 {
        self.fin().expect("valuation of zero")
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(v) => write!(f, "{v}"),
            Val::Inf => write!(f, "inf"),
        }
    }
}

/// An extended rational: −∞, a rational, or +∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl ExtRat {
    pub fn fin(&self) -> Option<&Rat> {
        match self {
            ExtRat::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    pub fn from_val(v: Val) -> ExtRat {
        match v {
            Val::Fin(k) => ExtRat::Fin(Rat::from_integer(k.into())),
            Val::Inf => ExtRat::PosInf,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtRat::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Fin(a), Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::NegInf => write!(f, "-inf"),
            ExtRat::PosInf => write!(f, "inf"),
            ExtRat::Fin(r) => write!(f, "{r}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

pub fn check_prime(p: u64) -> Result<(), FieldError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(FieldError::NotPrime(p))
    }
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Parse "a/b" or "a".
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        Some(Rat::new(a, b))
    } else {
        let a: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(a))
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        // huge numerators: fall back to a scaled quotient
        let shift = r.numer().bits().max(r.denom().bits()) as i64 - 60;
        let sh = shift.max(0) as usize;
        let n2 = (r.numer() >> sh).to_f64().unwrap_or(0.0);
        let d2 = (r.denom() >> sh).to_f64().unwrap_or(1.0);
        n2 / d2
    }
}

/// Valuation of a nonzero integer, or `None` for zero.
pub fn vp_int(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    if p == 2 {
        return Some(n.trailing_zeros().unwrap_or(0) as i64);
    }
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

pub fn vp(x: &Rat, p: u64) -> Val {
    if x.is_zero() {
        return Val::Inf;
    }
    let a = vp_int(x.numer(), p).unwrap();
    let b = vp_int(x.denom(), p).unwrap();
    Val::Fin(a - b)
}

/// Split x = p^v · u with u a p-unit; returns (v, u). x must be nonzero.
pub fn split_unit(x: &Rat, p: u64) -> (i64, Rat) {
    let v = vp(x, p).unwrap_fin();
    (v, x * ppow(p, -v))
}

/// p^k as an exact rational.
pub fn ppow(p: u64, k: i64) -> Rat {
    let base = BigInt::from(p).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rat::from_integer(base)
    } else {
        Rat::new(BigInt::one(), base)
    }
}

pub fn pint_pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

/// Modular inverse of a modulo m (m > 1), if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Image of a p-integral rational in Z/p^k, as an integer in [0, p^k).
pub fn rat_mod_pk(x: &Rat, p: u64, k: u32) -> Result<BigInt, FieldError> {
    let m = pint_pow(p, k);
    if x.is_zero() {
        return Ok(BigInt::zero());
    }
    if vp(x, p) < Val::Fin(0) {
        return Err(FieldError::NegativeValuation);
    }
    let inv = mod_inverse(x.denom(), &m).ok_or(FieldError::NegativeValuation)?;
    Ok((x.numer() * inv).mod_floor(&m))
}

/// Element of F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResElem {
    pub residue: u64,
    pub p: u64,
}

impl ResElem {
    pub fn new(r: i128, p: u64) -> ResElem {
        ResElem {
            residue: r.rem_euclid(p as i128) as u64,
            p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn inv(&self) -> Option<ResElem> {
        if self.residue == 0 {
            return None;
        }
        Some(ResElem {
            residue: fp_inv(self.residue, self.p),
            p: self.p,
        })
    }
}

impl Add for ResElem {
    type Output = ResElem;
    fn add(self, o: ResElem) -> ResElem {
        ResElem::new(self.residue as i128 + o.residue as i128, self.p)
    }
}

impl Sub for ResElem {
    type Output = ResElem;
    fn sub(self, o: ResElem) -> ResElem {
        ResElem::new(self.residue as i128 - o.residue as i128, self.p)
    }
}

impl Mul for ResElem {
    type Output = ResElem;
    fn mul(self, o: ResElem) -> ResElem {
        ResElem::new(self.residue as i128 * o.residue as i128, self.p)
    }
}

impl Neg for ResElem {
    type Output = ResElem;
    fn neg(self) -> ResElem {
        ResElem::new(-(self.residue as i128), self.p)
    }
}

pub fn reduce(x: &Rat, p: u64) -> Result<ResElem, FieldError> {
    let r = rat_mod_pk(x, p, 1)?;
    Ok(ResElem {
        residue: r.to_u64().unwrap(),
        p,
    })
}

fn fp_inv(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    e.x.rem_euclid(p as i128) as u64
}

/// A point of P¹(ℚ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum P1 {
    Fin(Rat),
    Inf,
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Fin(r) => write!(f, "{r}"),
            P1::Inf => write!(f, "inf"),
        }
    }
}

/// Chordal distance ‖x,y‖ normalized so that ‖0,∞‖ = 1.
pub fn chordal(x: &P1, y: &P1, p: u64) -> Rat {
    // log_p of max(1,|x|) is max(0, -vp(x))
    let lmax = |r: &Rat| -> i64 {
        match vp(r, p) {
            Val::Inf => 0,
            Val::Fin(v) => (-v).max(0),
        }
    };
    match (x, y) {
        (P1::Inf, P1::Inf) => Rat::zero(),
        (P1::Fin(a), P1::Inf) | (P1::Inf, P1::Fin(a)) => ppow(p, -lmax(a)),
        (P1::Fin(a), P1::Fin(b)) => match vp(&(a - b), p) {
            Val::Inf => Rat::zero(),
            Val::Fin(v) => ppow(p, -v - lmax(a) - lmax(b)),
        },
    }
}

/// Dense polynomial over F_p, ascending coefficients, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    pub c: Vec<u64>,
    pub p: u64,
}

impl FpPoly {
    pub fn new(mut c: Vec<u64>, p: u64) -> FpPoly {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { c, p }
    }

    pub fn zero(p: u64) -> FpPoly {
        FpPoly { c: vec![], p }
    }

    pub fn constant(a: u64, p: u64) -> FpPoly {
        FpPoly::new(vec![a], p)
    }

    pub fn monomial(a: u64, k: usize, p: u64) -> FpPoly {
        let mut c = vec![0; k + 1];
        c[k] = a;
        FpPoly::new(c, p)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.c.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let mut acc: u128 = 0;
        for &a in self.c.iter().rev() {
            acc = (acc * x as u128 + a as u128) % p;
        }
        acc as u64
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|k| (self.coeff(k) + o.coeff(k)) % self.p)
            .collect();
        FpPoly::new(c, self.p)
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|k| (self.coeff(k) + self.p - o.coeff(k)) % self.p)
            .collect();
        FpPoly::new(c, self.p)
    }

    pub fn scale(&self, a: u64) -> FpPoly {
        let p = self.p as u128;
        FpPoly::new(
            self.c
                .iter()
                .map(|&x| ((x as u128 * a as u128) % p) as u64)
                .collect(),
            self.p,
        )
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut c = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a as u128 * b as u128) % p;
            }
        }
        FpPoly::new(c.into_iter().map(|x| x as u64).collect(), self.p)
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p as u128;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| ((a as u128 * k as u128) % p) as u64)
            .collect();
        FpPoly::new(c, self.p)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(fp_inv(self.lc(), self.p))
    }

    pub fn divrem(&self, o: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!o.is_zero(), "division by zero polynomial");
        let p = self.p;
        let mut r = self.c.clone();
        let dl = o.c.len() - 1;
        let inv = fp_inv(o.lc(), p) as u128;
        if r.len() <= dl {
            return (FpPoly::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dl];
        for k in (0..q.len()).rev() {
            let coef = ((r[k + dl] as u128 * inv) % p as u128) as u64;
            q[k] = coef;
            if coef != 0 {
                for (j, &b) in o.c.iter().enumerate() {
                    let sub = (coef as u128 * b as u128) % p as u128;
                    r[k + j] = ((r[k + j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        (FpPoly::new(q, p), FpPoly::new(r, p))
    }

    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> FpPoly {
        let p = self.p;
        if self.is_zero() {
            return self.clone();
        }
        let mut h = self.monic();
        let mut r = FpPoly::constant(1, p);
        while h.degree().unwrap_or(0) > 0 {
            let d = h.derivative();
            if d.is_zero() {
                // h(w) = g(w^p) = g(w)^p over F_p
                let c: Vec<u64> = h.c.iter().step_by(p as usize).copied().collect();
                h = FpPoly::new(c, p);
                continue;
            }
            let g = h.gcd(&d);
            let (u, _) = h.divrem(&g);
            // r = lcm(r, u)
            let common = r.gcd(&u);
            let (extra, _) = u.divrem(&common);
            r = r.mul(&extra).monic();
            h = g;
        }
        r
    }
}

/// A binary form over F_p of a formal degree: `c` holds the dehomogenized
/// coefficients, and Y divides the form with multiplicity
/// `formal_deg - deg(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpForm {
    pub h: FpPoly,
    pub formal_deg: usize,
}

impl FpForm {
    pub fn new(h: FpPoly, formal_deg: usize) -> FpForm {
        debug_assert!(h.degree().map_or(true, |d| d <= formal_deg));
        FpForm { h, formal_deg }
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero()
    }

    pub fn inf_mult(&self) -> usize {
        self.formal_deg - self.h.degree().unwrap_or(0)
    }

    /// Number of distinct zeros in P¹ over the algebraic closure of F_p.
    pub fn distinct_roots(&self) -> usize {
        assert!(!self.is_zero());
        let fin = self.h.radical().degree().unwrap_or(0);
        fin + usize::from(self.inf_mult() > 0)
    }

    pub fn gcd(&self, o: &FpForm) -> FpForm {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let g = self.h.gcd(&o.h);
        let inf = self.inf_mult().min(o.inf_mult());
        let deg = g.degree().unwrap_or(0) + inf;
        FpForm::new(g, deg)
    }

    pub fn exact_div(&self, o: &FpForm) -> FpForm {
        let (q, r) = self.h.divrem(&o.h);
        debug_assert!(r.is_zero());
        FpForm::new(q, self.formal_deg - o.formal_deg)
    }
}

/// Integer content helpers used by the polynomial layers.
pub fn bigint_gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(it: I) -> BigInt {
    let mut g = BigInt::zero();
    for x in it {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

pub fn bigint_lcm_all<'a, I: IntoIterator<Item = &'a BigInt>>(it: I) -> BigInt {
    let mut l = BigInt::one();
    for x in it {
        l = l.lcm(x);
    }
    l
}

pub fn sign_of(x: &BigInt) -> Sign {
    x.sign()
}

pub fn abs_big(x: &BigInt) -> BigInt {
    x.abs()
}
