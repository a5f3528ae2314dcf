//! Rational maps over ℚ with a fixed prime p, stored as primitive integer
//! homogeneous lifts.
//!
//! A form of degree d is a coefficient vector of length d + 1 whose entry k
//! multiplies X^k Y^{d−k}; dehomogenizing at Y = 1 gives the same vector as
//! an ascending polynomial in z.

pub mod poly;
pub mod roots;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::valued_field::{
    bigint_lcm_all, check_prime, vp, vp_int, FieldError, Rat, Val, P1,
};
pub use poly::Poly;
use poly::{ip_content, ip_mul};
pub use roots::{padic_roots, rational_roots, PadicRoot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("CommonFactor: the lift has a common factor (resultant is zero)")]
    CommonFactor,
    #[error("InvalidMap: {0}")]
    InvalidMap(String),
    #[error("NotFixed: the point is not fixed")]
    NotFixed,
    #[error("NotPeriodic: the point is not periodic of the given period")]
    NotPeriodic,
    #[error("NotSplitOverQp: some roots lie in a proper extension of Q_p")]
    NotSplitOverQp,
    #[error("PrecisionCap: root isolation exceeded the precision cap")]
    PrecisionCap,
    #[error("NotPrime: {0} is not a prime")]
    NotPrime(u64),
}

impl From<FieldError> for MapError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::NotPrime(p) => MapError::NotPrime(p),
            other => MapError::InvalidMap(other.to_string()),
        }
    }
}

/// A homogeneous lift [F : G] over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub f: Vec<Rat>,
    pub g: Vec<Rat>,
    pub p: u64,
    pub normalized: bool,
}

impl Lift {
    pub fn new(f: Vec<Rat>, g: Vec<Rat>, p: u64) -> Lift {
        let n = f.len().max(g.len());
        let pad = |mut v: Vec<Rat>| {
            v.resize(n, Rat::zero());
            v
        };
        Lift {
            f: pad(f),
            g: pad(g),
            p,
            normalized: false,
        }
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    fn min_val(&self) -> Val {
        self.f
            .iter()
            .chain(self.g.iter())
            .map(|x| vp(x, self.p))
            .min()
            .unwrap_or(Val::Inf)
    }
}

/// Scale the lift by p^{−m}, m the least coefficient valuation.
pub fn normalize_lift(lift: &Lift) -> Result<Lift, MapError> {
    if resultant(&lift.f, &lift.g).is_zero() {
        return Err(MapError::CommonFactor);
    }
    let m = lift.min_val().unwrap_fin();
    let s = crate::valued_field::ppow(lift.p, -m);
    Ok(Lift {
        f: lift.f.iter().map(|x| x * &s).collect(),
        g: lift.g.iter().map(|x| x * &s).collect(),
        p: lift.p,
        normalized: true,
    })
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn sylvester_int(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let d = f.len() - 1;
    let n = 2 * d;
    if d == 0 {
        return BigInt::one();
    }
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..d {
        for k in 0..=d {
            m[i][i + (d - k)] = f[k].clone();
            m[d + i][i + (d - k)] = g[k].clone();
        }
    }
    bareiss_det(m)
}

/// Sylvester resultant of two binary forms of the same degree.
pub fn resultant(f: &[Rat], g: &[Rat]) -> Rat {
    assert_eq!(f.len(), g.len(), "forms must have equal degree");
    let d = f.len() as u32 - 1;
    let cf = bigint_lcm_all(f.iter().map(|x| x.denom()));
    let cg = bigint_lcm_all(g.iter().map(|x| x.denom()));
    let fi: Vec<BigInt> = f.iter().map(|x| x.numer() * (&cf / x.denom())).collect();
    let gi: Vec<BigInt> = g.iter().map(|x| x.numer() * (&cg / x.denom())).collect();
    Rat::new(sylvester_int(&fi, &gi), cf.pow(d) * cg.pow(d))
}

/// F(P, Q) for a form F of degree D and forms P, Q of equal degree.
pub fn form_compose(f: &[BigInt], pp: &[BigInt], qq: &[BigInt]) -> Vec<BigInt> {
    let dd = f.len() - 1;
    let e = pp.len() - 1;
    let mut ppow = vec![vec![BigInt::one()]];
    let mut qpow = vec![vec![BigInt::one()]];
    for k in 0..dd {
        ppow.push(ip_mul(&ppow[k], pp));
        qpow.push(ip_mul(&qpow[k], qq));
    }
    let mut out = vec![BigInt::zero(); dd * e + 1];
    for (k, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = ip_mul(&ppow[k], &qpow[dd - k]);
        for (i, t) in term.iter().enumerate() {
            out[i] += c * t;
        }
    }
    out
}

/// A Möbius transformation z ↦ (az + b)/(cz + d).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mobius {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Mobius {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Mobius, MapError> {
        let m = Mobius { a, b, c, d };
        if m.det().is_zero() {
            return Err(MapError::InvalidMap("singular Mobius matrix".into()));
        }
        Ok(m)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Mobius, MapError> {
        let r = |x: i64| Rat::from_integer(x.into());
        Mobius::new(r(a), r(b), r(c), r(d))
    }

    pub fn identity() -> Mobius {
        Mobius::from_ints(1, 0, 0, 1).unwrap()
    }

    /// z ↦ a + s·z
    pub fn affine(a: Rat, s: Rat) -> Mobius {
        Mobius::new(s, a, Rat::zero(), Rat::one()).expect("nonzero scale")
    }

    pub fn inversion() -> Mobius {
        Mobius::from_ints(0, 1, 1, 0).unwrap()
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_unit_integral(&self, p: u64) -> bool {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .all(|x| vp(x, p) >= Val::Fin(0))
            && vp(&self.det(), p) == Val::Fin(0)
    }

    /// self ∘ o
    pub fn compose(&self, o: &Mobius) -> Mobius {
        Mobius {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// The adjugate, which acts as the inverse on P¹.
    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    pub fn apply(&self, x: &P1) -> P1 {
        let (num, den) = match x {
            P1::Inf => (self.a.clone(), self.c.clone()),
            P1::Fin(z) => (&self.a * z + &self.b, &self.c * z + &self.d),
        };
        if den.is_zero() {
            P1::Inf
        } else {
            P1::Fin(num / den)
        }
    }

    fn integer_entries(&self) -> [BigInt; 4] {
        let l = bigint_lcm_all([&self.a, &self.b, &self.c, &self.d].iter().map(|x| x.denom()));
        let f = |x: &Rat| x.numer() * (&l / x.denom());
        [f(&self.a), f(&self.b), f(&self.c), f(&self.d)]
    }
}

/// A rational map of degree d ≥ 1. The lift is kept as a primitive integer
/// pair with the top nonzero coefficient of G positive, so it is normalized
/// up to a p-unit; `res_val` is vp of its resultant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    pub p: u64,
    pub d: usize,
    pub f: Vec<BigInt>,
    pub g: Vec<BigInt>,
    res_val: i64,
}

/// The fixed-point polynomial f − z·g with the multiplicity of ∞ as a fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointPoly {
    pub poly: Poly,
    pub inf_fixed: bool,
    pub inf_mult: usize,
}

fn canonical_pair(f: Vec<BigInt>, g: Vec<BigInt>) -> (Vec<BigInt>, Vec<BigInt>, BigInt) {
    let c = ip_content(&f).gcd(&ip_content(&g));
    let mut c = if c.is_zero() { BigInt::one() } else { c };
    let top = g
        .iter()
        .rev()
        .find(|x| !x.is_zero())
        .or_else(|| f.iter().rev().find(|x| !x.is_zero()));
    if top.is_some_and(|x| x.is_negative()) {
        c = -c;
    }
    let f = f.iter().map(|x| x / &c).collect();
    let g = g.iter().map(|x| x / &c).collect();
    (f, g, c)
}

impl RationalMap {
    /// φ = num/den with coefficients ascending in z.
    pub fn new(num: &Poly, den: &Poly, p: u64) -> Result<RationalMap, MapError> {
        check_prime(p)?;
        if den.is_zero() {
            return Err(MapError::InvalidMap("zero denominator".into()));
        }
        let d = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        if d == 0 {
            return Err(MapError::InvalidMap("constant map".into()));
        }
        let lf: Vec<Rat> = (0..=d).map(|k| num.coeff(k)).collect();
        let lg: Vec<Rat> = (0..=d).map(|k| den.coeff(k)).collect();
        Self::from_lift(&Lift::new(lf, lg, p))
    }

    pub fn from_ints(num: &[i64], den: &[i64], p: u64) -> Result<RationalMap, MapError> {
        Self::new(&Poly::from_ints(num), &Poly::from_ints(den), p)
    }

    pub fn from_lift(lift: &Lift) -> Result<RationalMap, MapError> {
        check_prime(lift.p)?;
        let d = lift.degree();
        if d == 0 {
            return Err(MapError::InvalidMap("constant map".into()));
        }
        let l = bigint_lcm_all(lift.f.iter().chain(lift.g.iter()).map(|x| x.denom()));
        let fi: Vec<BigInt> = lift.f.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let gi: Vec<BigInt> = lift.g.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let (f, g, _) = canonical_pair(fi, gi);
        let res = sylvester_int(&f, &g);
        if res.is_zero() {
            return Err(MapError::CommonFactor);
        }
        let res_val = vp_int(&res, lift.p).unwrap();
        Ok(RationalMap {
            p: lift.p,
            d,
            f,
            g,
            res_val,
        })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// The normalized lift as an exact-rational pair.
    pub fn lift(&self) -> Lift {
        let r = |v: &Vec<BigInt>| v.iter().map(|x| Rat::from_integer(x.clone())).collect();
        Lift {
            f: r(&self.f),
            g: r(&self.g),
            p: self.p,
            normalized: true,
        }
    }

    /// vp(Res) of the normalized lift.
    pub fn ord_res(&self) -> i64 {
        self.res_val
    }

    pub fn f_poly(&self) -> Poly {
        Poly::from_bigints(&self.f)
    }

    pub fn g_poly(&self) -> Poly {
        Poly::from_bigints(&self.g)
    }

    pub fn eval(&self, x: &P1) -> P1 {
        let (num, den) = match x {
            P1::Inf => (
                Rat::from_integer(self.f[self.d].clone()),
                Rat::from_integer(self.g[self.d].clone()),
            ),
            P1::Fin(z) => (self.f_poly().eval(z), self.g_poly().eval(z)),
        };
        if den.is_zero() {
            P1::Inf
        } else {
            P1::Fin(num / den)
        }
    }

    /// Build from integer forms with a known resultant valuation.
    fn from_forms(&self, f: Vec<BigInt>, g: Vec<BigInt>, d: usize, raw_res_val: i64) -> RationalMap {
        let (f, g, c) = canonical_pair(f, g);
        let cv = vp_int(&c, self.p).unwrap();
        RationalMap {
            p: self.p,
            d,
            f,
            g,
            res_val: raw_res_val - 2 * d as i64 * cv,
        }
    }

    /// The n-th iterate. Coprimality of the composed lift follows from
    /// Res(Φ∘Ψ) = ±Res(Φ)^{deg Ψ}·Res(Ψ)^{d²}, so no polynomial gcd is needed
    /// and the resultant valuation is obtained from the same identity.
    pub fn iterate(&self, n: usize) -> RationalMap {
        assert!(n >= 1, "iterate needs n >= 1");
        let mut cur = self.clone();
        for _ in 1..n {
            let e = cur.d;
            let f = form_compose(&self.f, &cur.f, &cur.g);
            let g = form_compose(&self.g, &cur.f, &cur.g);
            let raw = e as i64 * self.res_val + (self.d * self.d) as i64 * cur.res_val;
            cur = self.from_forms(f, g, self.d * e, raw);
            debug_assert_eq!(cur.f.len(), cur.d + 1);
        }
        cur
    }

    /// γ⁻¹ ∘ φ ∘ γ, computed as adj(γ)∘Φ∘γ.
    pub fn conjugate(&self, gamma: &Mobius) -> RationalMap {
        let [a, b, c, d] = gamma.integer_entries();
        // γ(X, Y) = (aX + bY, cX + dY), dehomogenized in X
        let px = vec![b.clone(), a.clone()];
        let qx = vec![d.clone(), c.clone()];
        let fg = form_compose(&self.f, &px, &qx);
        let gg = form_compose(&self.g, &px, &qx);
        let nf: Vec<BigInt> = fg.iter().zip(&gg).map(|(x, y)| &d * x - &b * y).collect();
        let ng: Vec<BigInt> = fg.iter().zip(&gg).map(|(x, y)| &a * y - &c * x).collect();
        let det = &a * &d - &b * &c;
        let dd = self.d as i64;
        let raw = self.res_val + (dd * dd + dd) * vp_int(&det, self.p).unwrap();
        self.from_forms(nf, ng, self.d, raw)
    }

    pub fn fixed_point_poly(&self) -> FixedPointPoly {
        let poly = self.f_poly().sub(&Poly::x().mul(&self.g_poly()));
        let deg = poly.degree().unwrap_or(0);
        let inf_mult = self.d + 1 - deg;
        FixedPointPoly {
            poly,
            inf_fixed: inf_mult > 0,
            inf_mult,
        }
    }

    /// The one-variable Wronskian f′g − fg′.
    pub fn critical_poly(&self) -> Poly {
        let (f, g) = (self.f_poly(), self.g_poly());
        f.derivative().mul(&g).sub(&f.mul(&g.derivative()))
    }

    /// φ′(P) at a finite fixed point.
    pub fn multiplier(&self, pt: &Rat) -> Result<Rat, MapError> {
        let (f, g) = (self.f_poly(), self.g_poly());
        let gv = g.eval(pt);
        if gv.is_zero() || f.eval(pt) != pt * &gv {
            return Err(MapError::NotFixed);
        }
        Ok(self.critical_poly().eval(pt) / (&gv * &gv))
    }

    /// Multiplier at any fixed point of P¹(ℚ), using z ↦ 1/z at ∞.
    pub fn multiplier_at(&self, pt: &P1) -> Result<Rat, MapError> {
        match pt {
            P1::Fin(x) => self.multiplier(x),
            P1::Inf => self.conjugate(&Mobius::inversion()).multiplier(&Rat::zero()),
        }
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({}) over p={}", self.f_poly(), self.g_poly(), self.p)
    }
}

/// vp of the rational resultant of a lift, for tests and reports.
pub fn res_valuation(lift: &Lift) -> Val {
    vp(&resultant(&lift.f, &lift.g), lift.p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valued_field::{rat, rat_frac};

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    /// Cofactor expansion oracle for small determinants.
    fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rat>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let s = if j % 2 == 0 { rat(1) } else { rat(-1) };
            acc += s * &m[0][j] * cofactor_det(&minor);
        }
        acc
    }

    fn sylvester_rows(f: &[Rat], g: &[Rat]) -> Vec<Vec<Rat>> {
        let d = f.len() - 1;
        let mut m = vec![vec![Rat::zero(); 2 * d]; 2 * d];
        for i in 0..d {
            for k in 0..=d {
                m[i][i + d - k] = f[k].clone();
                m[d + i][i + d - k] = g[k].clone();
            }
        }
        m
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&ints(&[0, 0, 1]), &ints(&[1, 0, 0])), rat(1));
        assert_eq!(resultant(&ints(&[0, 0, 1]), &ints(&[2, 0, 0])), rat(4));
        let f = ints(&[0, -1, 1]);
        let g = ints(&[3, 0, 0]);
        assert_eq!(resultant(&f, &g), rat(9));
        assert_eq!(cofactor_det(&sylvester_rows(&f, &g)), rat(9));
        let f2 = ints(&[0, 0, 1]);
        let g2 = ints(&[2, 0, 0]);
        assert_eq!(cofactor_det(&sylvester_rows(&f2, &g2)), rat(4));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let f = vec![rat_frac(3, 2), rat(-2), rat(5), rat(1)];
        let g = vec![rat(7), rat(0), rat_frac(-1, 3), rat(2)];
        assert_eq!(resultant(&f, &g), cofactor_det(&sylvester_rows(&f, &g)));
    }

    #[test]
    fn normalize_examples() {
        let l = Lift::new(ints(&[0, 0, 1]), ints(&[1, 0, 0]), 2);
        assert_eq!(normalize_lift(&l).unwrap().f, l.f);
        let l = Lift::new(vec![rat(0), rat(0), rat_frac(1, 2)], ints(&[1, 0, 0]), 2);
        let n = normalize_lift(&l).unwrap();
        assert_eq!(n.f, ints(&[0, 0, 1]));
        assert_eq!(n.g, ints(&[2, 0, 0]));
        let l = Lift::new(ints(&[0, -1, 1]), ints(&[3, 0, 0]), 3);
        assert_eq!(normalize_lift(&l).unwrap().f, l.f);
        let l = Lift::new(ints(&[0, 1, 1]), ints(&[0, 2, 0]), 3);
        assert_eq!(normalize_lift(&l), Err(MapError::CommonFactor));
    }

    #[test]
    fn ord_res_examples() {
        assert_eq!(RationalMap::from_ints(&[0, 0, 1], &[1], 5).unwrap().ord_res(), 0);
        let half = RationalMap::new(&Poly::new(vec![rat(0), rat(0), rat_frac(1, 2)]), &Poly::one(), 2).unwrap();
        assert_eq!(half.ord_res(), 2);
        assert_eq!(RationalMap::from_ints(&[0, -1, 1], &[3], 3).unwrap().ord_res(), 2);
    }

    #[test]
    fn iterate_examples() {
        let sq = RationalMap::from_ints(&[0, 0, 1], &[1], 2).unwrap();
        assert_eq!(sq.iterate(2).f, vec![0, 0, 0, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let half = RationalMap::new(&Poly::new(vec![rat(0), rat(0), rat_frac(1, 2)]), &Poly::one(), 2).unwrap();
        let h2 = half.iterate(2);
        // z⁴/8
        assert_eq!(h2.f_poly(), Poly::from_ints(&[0, 0, 0, 0, 1]));
        assert_eq!(h2.g_poly(), Poly::from_ints(&[8]));
        assert_eq!(h2.ord_res(), 12);
        assert_eq!(half.iterate(1), half);
        let l = h2.lift();
        assert_eq!(res_valuation(&l), Val::Fin(12));
    }

    #[test]
    fn iterate_resultant_tracks_sylvester() {
        let m = RationalMap::from_ints(&[1, -2, 3], &[2, 0, 1], 3).unwrap();
        for n in 1..=3 {
            let it = m.iterate(n);
            assert_eq!(res_valuation(&it.lift()), Val::Fin(it.ord_res()));
        }
    }

    #[test]
    fn conjugate_examples() {
        let half = RationalMap::new(&Poly::new(vec![rat(0), rat(0), rat_frac(1, 2)]), &Poly::one(), 2).unwrap();
        let c = half.conjugate(&Mobius::affine(rat(0), rat(2)));
        assert_eq!(c.f_poly(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(c.g_poly(), Poly::one());
        assert_eq!(c.ord_res(), 0);
        assert_eq!(half.conjugate(&Mobius::identity()), half);
        let g = Mobius::from_ints(1, 3, 2, 7).unwrap();
        let m = RationalMap::from_ints(&[1, -2, 3], &[2, 0, 1], 2).unwrap();
        let c = m.conjugate(&g);
        assert_eq!(res_valuation(&c.lift()), Val::Fin(c.ord_res()));
        assert_eq!(c.ord_res(), m.ord_res());
    }

    #[test]
    fn fixed_and_critical() {
        let half = RationalMap::new(&Poly::new(vec![rat(0), rat(0), rat_frac(1, 2)]), &Poly::one(), 2).unwrap();
        let fp = half.fixed_point_poly();
        let r: Vec<Rat> = rational_roots(&fp.poly).into_iter().map(|x| x.0).collect();
        assert_eq!(r, vec![rat(0), rat(2)]);
        assert!(fp.inf_fixed);
        let m = RationalMap::from_ints(&[0, -1, 1], &[3], 3).unwrap();
        let r: Vec<Rat> = rational_roots(&m.fixed_point_poly().poly).into_iter().map(|x| x.0).collect();
        assert_eq!(r, vec![rat(0), rat(4)]);
        // Wronskian of the primitive lift [X², 2Y²] is 4z
        assert_eq!(half.critical_poly(), Poly::from_ints(&[0, 4]));
        assert_eq!(m.critical_poly(), Poly::from_ints(&[-3, 6]));
    }

    #[test]
    fn multipliers() {
        let half = RationalMap::new(&Poly::new(vec![rat(0), rat(0), rat_frac(1, 2)]), &Poly::one(), 2).unwrap();
        assert_eq!(half.multiplier(&rat(2)).unwrap(), rat(2));
        let sq = RationalMap::from_ints(&[0, 0, 1], &[1], 2).unwrap();
        assert_eq!(sq.multiplier(&rat(0)).unwrap(), rat(0));
        assert_eq!(sq.multiplier(&rat(1)).unwrap(), rat(2));
        assert_eq!(sq.multiplier(&rat(3)), Err(MapError::NotFixed));
        assert_eq!(sq.multiplier_at(&P1::Inf).unwrap(), rat(0));
    }
}
