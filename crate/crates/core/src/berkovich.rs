//! Points of the Berkovich line over ℚ with the p-adic absolute value:
//! the tree structure, the metrics, the Hsia kernel, images of points,
//! reductions at disc points and the tangent action.
//!
//! A disc point ζ(a, t) is the disc centered at a of radius p^{−t}. The tree
//! is handled as rooted at ∞: every point except ∞ has a center and a
//! height t (+∞ for type I points), and the lowest common ancestor of
//! ζ(a, s) and ζ(b, u) is ζ(a, min(s, u, vp(a − b))).

use std::fmt;

use num_bigint::BigInt;

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::ordres_minresloc::GaussPoly;
use crate::rational_map::{MapError, Mobius, Poly, RationalMap};
use crate::valued_field::{
    mod_inverse, parse_rat, pint_pow, ppow, rat_mod_pk, vp, ExtRat, FpForm, FpPoly, Rat, Val, P1,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BerkError {
    #[error("TypeIPoint: operation needs a point of hyperbolic space")]
    TypeIPoint,
    #[error("NonIntegralRadius: log-radius {0} is not an integer")]
    NonIntegralRadius(String),
    #[error("ProbeExhausted: no probe located the image point")]
    ProbeExhausted,
    #[error("NotFixed: the point is not fixed")]
    NotFixed,
    #[error("IrrationalValue: p^{0} is not rational")]
    IrrationalValue(String),
    #[error("Map: {0}")]
    Map(#[from] MapError),
}

/// A point of the Berkovich line with ℚ-rational data. Disc centers are
/// canonical, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BerkPoint {
    TypeI(P1),
    Disk { center: Rat, t: Rat },
}

/// Ceiling of a rational.
pub fn ceil_rat(t: &Rat) -> BigInt {
    t.ceil().to_integer()
}

pub fn floor_rat(t: &Rat) -> BigInt {
    t.floor().to_integer()
}

/// Canonical center of the disc of log-radius t around a: the representative
/// in ℤ[1/p] ∩ [0, p^{⌈t⌉}) obtained by truncating the p-adic expansion.
pub fn canonical_center(a: &Rat, t: &Rat, p: u64) -> Rat {
    let tt = ceil_rat(t).to_i64().expect("log-radius out of range");
    let v = vp(a, p);
    if v >= Val::Fin(tt) {
        return Rat::zero();
    }
    let k = (-v.unwrap_fin()).max(0);
    let e = (tt + k) as u32;
    let pk = pint_pow(p, k as u32);
    let scaled = a * Rat::from_integer(pk.clone());
    let n = rat_mod_pk(&scaled, p, e).expect("scaled center is p-integral");
    Rat::new(n, pk)
}

impl BerkPoint {
    pub fn gauss() -> BerkPoint {
        BerkPoint::Disk {
            center: Rat::zero(),
            t: Rat::zero(),
        }
    }

    pub fn disk(center: Rat, t: Rat, p: u64) -> BerkPoint {
        let center = canonical_center(&center, &t, p);
        BerkPoint::Disk { center, t }
    }

    pub fn type_i(x: P1) -> BerkPoint {
        BerkPoint::TypeI(x)
    }

    pub fn inf() -> BerkPoint {
        BerkPoint::TypeI(P1::Inf)
    }

    pub fn fin(x: Rat) -> BerkPoint {
        BerkPoint::TypeI(P1::Fin(x))
    }

    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, BerkPoint::Disk { .. })
    }

    pub fn is_type_i(&self) -> bool {
        !self.is_hyperbolic()
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, BerkPoint::Disk { t, .. } if t.is_integer())
    }

    /// Center and height; `None` for ∞.
    pub fn key(&self) -> Option<(Rat, ExtRat)> {
        match self {
            BerkPoint::TypeI(P1::Inf) => None,
            BerkPoint::TypeI(P1::Fin(x)) => Some((x.clone(), ExtRat::PosInf)),
            BerkPoint::Disk { center, t } => Some((center.clone(), ExtRat::Fin(t.clone()))),
        }
    }

    pub fn height(&self) -> ExtRat {
        match self.key() {
            None => ExtRat::NegInf,
            Some((_, t)) => t,
        }
    }

    pub fn log_radius(&self) -> Option<&Rat> {
        match self {
            BerkPoint::Disk { t, .. } => Some(t),
            _ => None,
        }
    }

    pub fn center(&self) -> Option<&Rat> {
        match self {
            BerkPoint::Disk { center, .. } => Some(center),
            BerkPoint::TypeI(P1::Fin(x)) => Some(x),
            _ => None,
        }
    }

    fn from_key(c: &Rat, t: &ExtRat, p: u64) -> BerkPoint {
        match t {
            ExtRat::PosInf => BerkPoint::TypeI(P1::Fin(c.clone())),
            ExtRat::Fin(t) => BerkPoint::disk(c.clone(), t.clone(), p),
            ExtRat::NegInf => BerkPoint::inf(),
        }
    }
}

impl BerkPoint {
    /// Inverse of Display: "inf", "a/b", or "disk:a/b:t".
    pub fn parse(s: &str, p: u64) -> Option<BerkPoint> {
        let s = s.trim();
        if s == "inf" {
            return Some(BerkPoint::inf());
        }
        match s.strip_prefix("disk:") {
            Some(rest) => {
                let (a, t) = rest.split_once(':')?;
                Some(BerkPoint::disk(parse_rat(a)?, parse_rat(t)?, p))
            }
            None => Some(BerkPoint::fin(parse_rat(s)?)),
        }
    }
}

impl fmt::Display for BerkPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BerkPoint::TypeI(x) => write!(f, "{x}"),
            BerkPoint::Disk { center, t } => write!(f, "disk:{center}:{t}"),
        }
    }
}

/// Lowest common ancestor toward ∞.
pub fn lca(x: &BerkPoint, y: &BerkPoint, p: u64) -> BerkPoint {
    match (x.key(), y.key()) {
        (None, _) | (_, None) => BerkPoint::inf(),
        (Some((a, s)), Some((b, u))) => {
            let m = s.min(u).min(ExtRat::from_val(vp(&(&a - &b), p)));
            BerkPoint::from_key(&a, &m, p)
        }
    }
}

/// The point where the three paths between x, y, z meet.
pub fn median(x: &BerkPoint, y: &BerkPoint, z: &BerkPoint, p: u64) -> BerkPoint {
    let c = [lca(x, y, p), lca(y, z, p), lca(x, z, p)];
    c.into_iter().max_by(|u, v| u.height().cmp(&v.height())).unwrap()
}

/// x ∧_ζG y
pub fn join(x: &BerkPoint, y: &BerkPoint, p: u64) -> BerkPoint {
    median(x, y, &BerkPoint::gauss(), p)
}

/// x ∧_ζ y for an arbitrary base point ζ.
pub fn join_base(x: &BerkPoint, y: &BerkPoint, base: &BerkPoint, p: u64) -> BerkPoint {
    median(x, y, base, p)
}

/// Whether `a` lies on the path from `x` to ∞.
pub fn is_ancestor(a: &BerkPoint, x: &BerkPoint, p: u64) -> bool {
    &lca(a, x, p) == a
}

/// Path length ρ(x, y) with +∞ whenever a type I endpoint differs from the other.
pub fn rho_ext(x: &BerkPoint, y: &BerkPoint, p: u64) -> ExtRat {
    if x == y {
        return ExtRat::Fin(Rat::zero());
    }
    match (x.log_radius(), y.log_radius()) {
        (Some(s), Some(u)) => {
            let l = lca(x, y, p);
            let tl = l.log_radius().unwrap();
            ExtRat::Fin(s + u - tl * Rat::from_integer(2.into()))
        }
        _ => ExtRat::PosInf,
    }
}

pub fn rho(x: &BerkPoint, y: &BerkPoint, p: u64) -> Result<Rat, BerkError> {
    if !x.is_hyperbolic() || !y.is_hyperbolic() {
        return Err(BerkError::TypeIPoint);
    }
    Ok(rho_ext(x, y, p).fin().unwrap().clone())
}

/// p^{−e} as a rational, when e is an integer.
fn ppow_neg(e: &Rat, p: u64) -> Result<Rat, BerkError> {
    if !e.is_integer() {
        return Err(BerkError::IrrationalValue(format!("-{e}")));
    }
    Ok(ppow(p, -e.to_integer().to_i64().unwrap()))
}

/// log_p of diam_G, that is −ρ(x, ζG); −∞ at type I points.
pub fn log_diam_g(x: &BerkPoint, p: u64) -> ExtRat {
    match rho_ext(x, &BerkPoint::gauss(), p) {
        ExtRat::Fin(r) => ExtRat::Fin(-r),
        _ => ExtRat::NegInf,
    }
}

pub fn diam_g(x: &BerkPoint, p: u64) -> Result<Rat, BerkError> {
    match rho_ext(x, &BerkPoint::gauss(), p) {
        ExtRat::Fin(r) => ppow_neg(&r, p),
        _ => Ok(Rat::zero()),
    }
}

/// 2·diam(x ∧ y) − diam(x) − diam(y)
pub fn small_d(x: &BerkPoint, y: &BerkPoint, p: u64) -> Result<Rat, BerkError> {
    let j = join(x, y, p);
    Ok(diam_g(&j, p)? * Rat::from_integer(2.into()) - diam_g(x, p)? - diam_g(y, p)?)
}

/// log_p δ(x, y)_ζG = −ρ(x ∧ y, ζG), with −∞ for equal type I points.
pub fn hsia_log(x: &BerkPoint, y: &BerkPoint, p: u64) -> ExtRat {
    log_diam_g(&join(x, y, p), p)
}

fn ext_sub(a: ExtRat, b: &Rat) -> ExtRat {
    match a {
        ExtRat::Fin(x) => ExtRat::Fin(x - b),
        other => other,
    }
}

/// log_p δ(x, y)_ζ0 = hsia_log(x, y) − hsia_log(x, ζ0) − hsia_log(y, ζ0).
/// For hyperbolic arguments this equals −ρ(x ∧_ζ0 y, ζ0) + ρ(ζ0, ζG).
pub fn hsia_log_base(x: &BerkPoint, y: &BerkPoint, base: &BerkPoint, p: u64) -> ExtRat {
    assert!(base.is_hyperbolic(), "base point must be hyperbolic");
    let hx = hsia_log(x, base, p).fin().cloned().unwrap();
    let hy = hsia_log(y, base, p).fin().cloned().unwrap();
    ext_sub(hsia_log(x, y, p), &(hx + hy))
}

/// The point at ρ-distance s from x along the path to y (s within range).
pub fn walk(x: &BerkPoint, y: &BerkPoint, s: &Rat, p: u64) -> BerkPoint {
    let l = lca(x, y, p);
    let up = match (x.height(), l.height()) {
        (ExtRat::Fin(a), ExtRat::Fin(b)) => Some(a - b),
        (ExtRat::Fin(_), ExtRat::NegInf) => None,
        _ => panic!("walk needs a hyperbolic start"),
    };
    let (cx, tx) = (x.center().unwrap().clone(), x.log_radius().unwrap().clone());
    match up {
        None => BerkPoint::disk(cx, tx - s, p),
        Some(up) if *s <= up => BerkPoint::disk(cx, tx - s, p),
        Some(up) => {
            let cy = y.center().unwrap().clone();
            let tl = l.log_radius().unwrap().clone();
            BerkPoint::disk(cy, tl + (s - up), p)
        }
    }
}

/// A tangent direction at a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// toward ζ(a + p^t·r, t′) with t′ > t, at an integral point
    Residue(u64),
    /// toward ∞
    InfSide,
    /// toward the center at a point of non-integral log-radius
    Down,
    /// the unique direction at a type I point
    Inward,
}

/// Directions at ζ; the full tangent space P¹(F_p) at integral points.
pub fn directions(z: &BerkPoint, p: u64) -> Vec<Direction> {
    match z {
        BerkPoint::TypeI(_) => vec![Direction::Inward],
        BerkPoint::Disk { t, .. } if t.is_integer() => {
            let mut v: Vec<Direction> = (0..p).map(Direction::Residue).collect();
            v.push(Direction::InfSide);
            v
        }
        _ => vec![Direction::Down, Direction::InfSide],
    }
}

/// The direction at z containing y (y ≠ z).
pub fn direction_of(z: &BerkPoint, y: &BerkPoint, p: u64) -> Direction {
    match z {
        BerkPoint::TypeI(_) => Direction::Inward,
        BerkPoint::Disk { center, t } => {
            if y != z && is_ancestor(z, y, p) {
                if t.is_integer() {
                    let yc = y.center().unwrap();
                    let k = t.to_integer().to_i64().unwrap();
                    let u = (yc - center) * ppow(p, -k);
                    let r = rat_mod_pk(&u, p, 1).unwrap().to_u64().unwrap();
                    Direction::Residue(r)
                } else {
                    Direction::Down
                }
            } else {
                Direction::InfSide
            }
        }
    }
}

/// A point a small distance into direction v at z (integral z for residues).
pub fn step_into(z: &BerkPoint, v: &Direction, eps: &Rat, p: u64) -> BerkPoint {
    let (c, t) = (z.center().unwrap().clone(), z.log_radius().unwrap().clone());
    match v {
        Direction::Residue(r) => {
            let k = t.to_integer().to_i64().unwrap();
            let c2 = c + ppow(p, k) * Rat::from_integer(BigInt::from(*r));
            BerkPoint::disk(c2, t + eps, p)
        }
        Direction::Down => BerkPoint::disk(c, t + eps, p),
        Direction::InfSide => BerkPoint::disk(c, t - eps, p),
        Direction::Inward => panic!("no step from a type I point"),
    }
}

/// Coefficients of h(a + w) for an integer polynomial h.
pub fn taylor_at(h: &[BigInt], a: &Rat) -> Vec<Rat> {
    let n = a.numer();
    let m = a.denom();
    let dd = h.len() - 1;
    let lin = [n.clone(), m.clone()];
    let mut acc: Vec<BigInt> = vec![h[dd].clone()];
    let mut mpow = BigInt::one();
    for k in (0..dd).rev() {
        mpow *= m;
        let mut nxt = vec![BigInt::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            nxt[i] += c * &lin[0];
            nxt[i + 1] += c * &lin[1];
        }
        nxt[0] += &h[k] * &mpow;
        acc = nxt;
    }
    acc.into_iter().map(|x| Rat::new(x, mpow.clone())).collect()
}

/// Taylor data of a map at a center: coefficients of f(a + w) and g(a + w).
#[derive(Debug, Clone)]
pub struct LocalExpansion {
    pub a: Rat,
    pub tf: Vec<Rat>,
    pub tg: Vec<Rat>,
}

impl LocalExpansion {
    pub fn new(phi: &RationalMap, a: &Rat) -> LocalExpansion {
        LocalExpansion {
            a: a.clone(),
            tf: taylor_at(&phi.f, a),
            tg: taylor_at(&phi.g, a),
        }
    }

    /// Coefficients of f − β·g at a.
    pub fn shifted(&self, beta: &Rat) -> Vec<Rat> {
        self.tf
            .iter()
            .zip(&self.tg)
            .map(|(x, y)| x - beta * y)
            .collect()
    }

    /// Terms (coefficient, power of A) of adj(γ)∘Φ∘γ for γ(w) = a + A·w.
    pub fn conjugate_terms(&self) -> (Vec<(Rat, i64)>, Vec<(Rat, i64)>) {
        let fs = self.shifted(&self.a);
        let ft = fs.into_iter().enumerate().map(|(k, c)| (c, k as i64)).collect();
        let gt = self
            .tg
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k as i64 + 1))
            .collect();
        (ft, gt)
    }
}

fn gv(coeffs: &[Rat], t: &Rat, p: u64) -> Rat {
    GaussPoly::new(coeffs.to_vec())
        .gauss_val(t, p)
        .expect("nonzero polynomial")
}

const IMAGE_STEPS: usize = 100_000;

/// φ(ζ). At a disc point the image is ζ(b′, s′) where, for every β,
/// gv(f − βg) − gv(g) = min(s′, vp(β − b′)); b′ is found by digit descent.
pub fn image_point(phi: &RationalMap, z: &BerkPoint) -> Result<BerkPoint, BerkError> {
    let p = phi.p;
    let (a, t) = match z {
        BerkPoint::TypeI(x) => return Ok(BerkPoint::TypeI(phi.eval(x))),
        BerkPoint::Disk { center, t } => (center.clone(), t.clone()),
    };
    let ex = LocalExpansion::new(phi, &a);
    let gg = gv(&ex.tg, &t, p);
    let w = |beta: &Rat| gv(&ex.shifted(beta), &t, p) - &gg;
    let mut beta = match phi.eval(&P1::Fin(a.clone())) {
        P1::Fin(b) => b,
        P1::Inf => Rat::zero(),
    };
    let mut cur = w(&beta);
    for _ in 0..IMAGE_STEPS {
        if !cur.is_integer() {
            return Ok(BerkPoint::disk(beta, cur, p));
        }
        let k = cur.to_integer().to_i64().unwrap();
        let step = ppow(p, k);
        let mut moved = false;
        for j in 1..p {
            let cand = &beta + &step * Rat::from_integer(BigInt::from(j));
            let wc = w(&cand);
            if wc > cur {
                beta = cand;
                cur = wc;
                moved = true;
                break;
            }
        }
        if !moved {
            return Ok(BerkPoint::disk(beta, cur, p));
        }
    }
    Err(BerkError::ProbeExhausted)
}

/// A point of P¹(F_p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointFp {
    Fin(u64),
    Inf,
}

/// Reduction of φ at a disc point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedMap {
    pub p: u64,
    /// reduced normalized lift before cancellation, formal degree d
    pub ftil: FpForm,
    pub gtil: FpForm,
    /// common factor of the reduced lift
    pub common: FpForm,
    /// the reduced map after cancelling the common factor
    pub num: FpForm,
    pub den: FpForm,
    pub deg: usize,
}

impl ReducedMap {
    pub fn is_constant(&self) -> bool {
        self.deg == 0
    }

    /// The constant value when the reduction has degree 0.
    pub fn constant_value(&self) -> Option<PointFp> {
        if self.deg != 0 {
            return None;
        }
        let n = self.num.h.coeff(0);
        let d = self.den.h.coeff(0);
        Some(if d == 0 {
            PointFp::Inf
        } else {
            PointFp::Fin(n * fp_inv(d, self.p) % self.p)
        })
    }

    pub fn eval(&self, x: PointFp) -> PointFp {
        let p = self.p;
        let (n, d) = match x {
            PointFp::Fin(r) => (self.num.h.eval(r), self.den.h.eval(r)),
            PointFp::Inf => (self.num.h.coeff(self.deg), self.den.h.coeff(self.deg)),
        };
        if d == 0 {
            PointFp::Inf
        } else {
            PointFp::Fin(n * fp_inv(d, p) % p)
        }
    }

    /// Y·F̃ − X·G̃ of the full reduced lift, a form of degree d + 1.
    pub fn moved_form(&self) -> FpForm {
        let x = FpPoly::new(vec![0, 1], self.p);
        let h = self.ftil.h.sub(&x.mul(&self.gtil.h));
        FpForm::new(h, self.ftil.formal_deg + 1)
    }

    /// X·G̃1 − Y·F̃1 of the reduced map, degree deg + 1.
    pub fn fixed_form(&self) -> FpForm {
        let x = FpPoly::new(vec![0, 1], self.p);
        let h = x.mul(&self.den.h).sub(&self.num.h);
        FpForm::new(h, self.deg + 1)
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    mod_inverse(&BigInt::from(a), &BigInt::from(p))
        .unwrap()
        .to_u64()
        .unwrap()
}

/// Reduction at ζ(a, t) for any rational t. With t = r/q in lowest terms the
/// conjugating scale A satisfies A^q = p^r; after dividing by an extremal
/// coefficient every surviving ratio is a rational times an integral power
/// of p, so the reduction lands in F_p.
pub fn reduce_general(phi: &RationalMap, a: &Rat, t: &Rat) -> ReducedMap {
    let p = phi.p;
    let ex = LocalExpansion::new(phi, a);
    let (ft, gt) = ex.conjugate_terms();
    let val = |(c, e): &(Rat, i64)| -> Option<Rat> {
        match vp(c, p) {
            Val::Inf => None,
            Val::Fin(v) => Some(Rat::from_integer(v.into()) + t * Rat::from_integer((*e).into())),
        }
    };
    let m = ft
        .iter()
        .chain(gt.iter())
        .filter_map(val)
        .min()
        .expect("nonzero lift");
    let (c0, e0) = ft
        .iter()
        .chain(gt.iter())
        .find(|x| val(x).as_ref() == Some(&m))
        .cloned()
        .unwrap();
    let q = t.denom().to_i64().unwrap();
    let r = t.numer().to_i64().unwrap();
    let residue = |x: &(Rat, i64)| -> u64 {
        if val(x).as_ref() != Some(&m) {
            return 0;
        }
        let de = x.1 - e0;
        debug_assert_eq!(de % q, 0);
        let u = &x.0 / &c0 * ppow(p, r * de / q);
        rat_mod_pk(&u, p, 1).unwrap().to_u64().unwrap()
    };
    let d = phi.d;
    let fr: Vec<u64> = ft.iter().map(residue).collect();
    let gr: Vec<u64> = gt.iter().map(residue).collect();
    let ftil = FpForm::new(FpPoly::new(fr, p), d);
    let gtil = FpForm::new(FpPoly::new(gr, p), d);
    let common = ftil.gcd(&gtil);
    let num = ftil.exact_div(&common);
    let den = gtil.exact_div(&common);
    let deg = d - common.formal_deg;
    ReducedMap {
        p,
        ftil,
        gtil,
        common,
        num,
        den,
        deg,
    }
}

/// Reduction of φ at an integral disc point.
pub fn reduce_map_at(phi: &RationalMap, z: &BerkPoint) -> Result<ReducedMap, BerkError> {
    match z {
        BerkPoint::Disk { center, t } if t.is_integer() => Ok(reduce_general(phi, center, t)),
        BerkPoint::Disk { t, .. } => Err(BerkError::NonIntegralRadius(t.to_string())),
        BerkPoint::TypeI(_) => Err(BerkError::TypeIPoint),
    }
}

/// φ_* on directions at an integral point fixed by φ.
pub fn tangent_map(phi: &RationalMap, z: &BerkPoint, v: &Direction) -> Result<Direction, BerkError> {
    let red = reduce_map_at(phi, z)?;
    if red.is_constant() {
        return Err(BerkError::NotFixed);
    }
    let x = match v {
        Direction::Residue(r) => PointFp::Fin(*r),
        Direction::InfSide => PointFp::Inf,
        _ => return Err(BerkError::NonIntegralRadius(z.to_string())),
    };
    Ok(match red.eval(x) {
        PointFp::Fin(r) => Direction::Residue(r),
        PointFp::Inf => Direction::InfSide,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedClass {
    NotFixed,
    Repelling,
    MultIndifferent,
    AddIndifferent,
    IdIndifferent,
}

impl FixedClass {
    pub fn name(&self) -> &'static str {
        match self {
            FixedClass::NotFixed => "not-fixed",
            FixedClass::Repelling => "repelling",
            FixedClass::MultIndifferent => "mult-indifferent",
            FixedClass::AddIndifferent => "add-indifferent",
            FixedClass::IdIndifferent => "id-indifferent",
        }
    }
}

/// Classification from a reduction (degree, then the Möbius conjugacy type).
pub fn classify_reduction(red: &ReducedMap) -> FixedClass {
    match red.deg {
        0 => FixedClass::NotFixed,
        1 => {
            let p = red.p;
            let (al, be) = (red.num.h.coeff(1), red.num.h.coeff(0));
            let (ga, de) = (red.den.h.coeff(1), red.den.h.coeff(0));
            if be == 0 && ga == 0 && al == de {
                return FixedClass::IdIndifferent;
            }
            let tr = (al + de) % p;
            let det = ((al * de) % p + p - (be * ga) % p) % p;
            let disc = ((tr * tr) % p + 4 * p - (4 * det) % p) % p;
            if disc == 0 {
                FixedClass::AddIndifferent
            } else {
                FixedClass::MultIndifferent
            }
        }
        _ => FixedClass::Repelling,
    }
}

pub fn classify_fixed(phi: &RationalMap, z: &BerkPoint) -> Result<FixedClass, BerkError> {
    Ok(classify_reduction(&reduce_map_at(phi, z)?))
}

/// γ(ζ) for a Möbius transformation γ.
pub fn mobius_point(g: &Mobius, z: &BerkPoint, p: u64) -> Result<BerkPoint, BerkError> {
    let m = RationalMap::new(
        &Poly::new(vec![g.b.clone(), g.a.clone()]),
        &Poly::new(vec![g.d.clone(), g.c.clone()]),
        p,
    )?;
    image_point(&m, z)
}
