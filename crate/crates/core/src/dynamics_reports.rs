//! Explicit constants and inequalities attached to a map: the Lipschitz
//! upper bound L̂, the root-pole number, the constants A_φ and B_φ, radius
//! bounds for weighted points, coefficient and multiplier bounds, the
//! equidistribution integrals and the Lyapunov estimate.
//!
//! Logarithms are base p. log_p L̂ can involve log_p d, so bounds are kept as
//! q + k·log_p d with rational q, k and compared exactly through powers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::berkovich::{hsia_log, rho, BerkPoint};
use crate::crucial_measure::{crucial_measure, CrucialError, CrucialMeasure};
use crate::ordres_minresloc::{min_res_loc, GaussPoly, OrdResError};
use crate::rational_map::roots::{padic_roots, rational_roots, PadicRoot};
use crate::rational_map::{MapError, Mobius, Poly, RationalMap};
use crate::valued_field::{fmt_rat, ppow, rat_to_f64, vp, Rat, Val, P1};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("RootsNotRational: roots or poles of the iterate are not all in ℚ_p")]
    RootsNotRational,
    #[error("IrrationalCriticalPoint: some critical point is not in ℚ")]
    IrrationalCriticalPoint,
    #[error("NotPeriodic: {0} is not fixed by the iterate")]
    NotPeriodic(String),
    #[error("{0}")]
    Crucial(#[from] CrucialError),
    #[error("{0}")]
    Map(#[from] MapError),
    #[error("{0}")]
    OrdRes(#[from] OrdResError),
}

/// q + k·log_p(d)
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogBound {
    pub q: Rat,
    pub k: Rat,
    pub p: u64,
    pub d: u64,
}

fn pow_rat(base: u64, e: &BigInt) -> Rat {
    let b = BigInt::from(base);
    let m = num_traits::pow(b, e.abs().to_usize().expect("exponent size"));
    if e.is_negative() {
        Rat::new(BigInt::one(), m)
    } else {
        Rat::from_integer(m)
    }
}

impl LogBound {
    pub fn rational(q: Rat, p: u64, d: u64) -> LogBound {
        LogBound { q, k: Rat::zero(), p, d }
    }

    pub fn add(&self, o: &LogBound) -> LogBound {
        LogBound { q: &self.q + &o.q, k: &self.k + &o.k, ..self.clone() }
    }

    pub fn add_rat(&self, r: &Rat) -> LogBound {
        LogBound { q: &self.q + r, ..self.clone() }
    }

    pub fn scale(&self, c: &Rat) -> LogBound {
        LogBound { q: &self.q * c, k: &self.k * c, ..self.clone() }
    }

    pub fn max(self, o: LogBound) -> LogBound {
        if self.cmp_exact(&o) == Ordering::Less {
            o
        } else {
            self
        }
    }

    /// Exact comparison: with K = Δk and Q = −Δq the question is the sign of
    /// K·log_p d − Q, settled by comparing d^v with p^u for Q/K = u/v.
    pub fn cmp_exact(&self, o: &LogBound) -> Ordering {
        let kk = &self.k - &o.k;
        let qq = &o.q - &self.q;
        if kk.is_zero() {
            return Rat::zero().cmp(&qq);
        }
        let r = &qq / &kk;
        let (u, v) = (r.numer().clone(), r.denom().clone());
        // d^v vs p^u, that is log_p d vs r
        let lhs = pow_rat(self.d, &v);
        let rhs = pow_rat(self.p, &u);
        let logd_vs_r = lhs.cmp(&rhs);
        if kk.is_positive() {
            logd_vs_r
        } else {
            logd_vs_r.reverse()
        }
    }

    pub fn le(&self, o: &LogBound) -> bool {
        self.cmp_exact(o) != Ordering::Greater
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.q) + rat_to_f64(&self.k) * (self.d as f64).ln() / (self.p as f64).ln()
    }
}

impl fmt::Display for LogBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k.is_zero() || self.d == 1 {
            write!(f, "{}", fmt_rat(&self.q))
        } else if self.d == self.p {
            write!(f, "{}", fmt_rat(&(&self.q + &self.k)))
        } else {
            write!(f, "{} + {}*log_{}({})", fmt_rat(&self.q), fmt_rat(&self.k), self.p, self.d)
        }
    }
}

/// One checked inequality lhs ≤ rhs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl Check {
    fn new(name: &str, lhs: String, rhs: String, pass: bool) -> Check {
        Check { check: name.into(), lhs, rhs, pass, notes: vec![] }
    }

    fn note(mut self, s: &str) -> Check {
        self.notes.push(s.into());
        self
    }
}

/// L̂ = max(|Res|^{−d}, d·|Res|^{−1}) for the normalized lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lipschitz {
    pub value: Rat,
    pub log: LogBound,
}

pub fn lipschitz_upper(phi: &RationalMap) -> Lipschitz {
    let (p, d, r) = (phi.p, phi.d as u64, phi.ord_res());
    let a = ppow(p, (d as i64) * r);
    let b = Rat::from_integer(d.into()) * ppow(p, r);
    let rq = |x: i64| Rat::from_integer(x.into());
    if a >= b {
        Lipschitz { value: a, log: LogBound::rational(rq(d as i64 * r), p, d) }
    } else {
        Lipschitz { value: b, log: LogBound { q: rq(r), k: Rat::one(), p, d } }
    }
}

fn roots_of(poly: &Poly, p: u64, digits: u32) -> Result<Vec<PadicRoot>, ReportError> {
    match padic_roots(poly, p, digits) {
        Ok(r) => Ok(r),
        Err(MapError::NotSplitOverQp) => Err(ReportError::RootsNotRational),
        Err(e) => Err(e.into()),
    }
}

fn depth(r: &PadicRoot) -> Val {
    r.log_radius
}

/// min chordal distance between a zero and a pole of φⁿ.
pub fn root_pole_number(phi: &RationalMap, n: usize) -> Result<Rat, ReportError> {
    let psi = phi.iterate(n);
    let p = psi.p;
    let (f, g) = (psi.f_poly(), psi.g_poly());
    let inf_root = f.degree().unwrap_or(0) < psi.d;
    let inf_pole = g.degree().unwrap_or(0) < psi.d;
    let mut digits = 8;
    loop {
        let zs = roots_of(&f, p, digits)?;
        let ps = roots_of(&g, p, digits)?;
        let mut best: Option<Rat> = None;
        let mut exact = true;
        let mut take = |x: Rat| {
            if best.as_ref().is_none_or(|b| &x < b) {
                best = Some(x);
            }
        };
        for z in &zs {
            for w in &ps {
                let dv = vp(&(&z.approx - &w.approx), p);
                if dv >= depth(z).min(depth(w)) {
                    exact = false;
                }
                take(crate::valued_field::chordal(&P1::Fin(z.approx.clone()), &P1::Fin(w.approx.clone()), p));
            }
            if inf_pole {
                take(crate::valued_field::chordal(&P1::Fin(z.approx.clone()), &P1::Inf, p));
            }
        }
        if inf_root {
            for w in &ps {
                take(crate::valued_field::chordal(&P1::Inf, &P1::Fin(w.approx.clone()), p));
            }
        }
        if exact {
            return Ok(best.expect("a map of degree ≥ 1 has a zero and a pole"));
        }
        digits *= 2;
    }
}

pub fn rp_bound_check(phi: &RationalMap, n: usize) -> Result<Check, ReportError> {
    let l = lipschitz_upper(phi);
    let lhs = Rat::one() / num_traits::pow(l.value.clone(), n);
    let rp = root_pole_number(phi, n)?;
    let pass = lhs <= rp;
    Ok(Check::new("rp_bound", fmt_rat(&lhs), fmt_rat(&rp), pass).note("L̂ substituted for the Lipschitz constant"))
}

/// A_φ(c) for one critical point, as −log_p A_φ(c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalConstant {
    pub point: P1,
    /// index of the first nonzero Taylor coefficient past the constant term
    pub k: usize,
    pub a_k: Rat,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Przytycki {
    pub per_point: Vec<CriticalConstant>,
    /// A_φ = p^{−exponent}
    pub exponent: i64,
    pub a: Rat,
    /// B_φ = min(1, A_φ)
    pub b: Rat,
}

/// Critical points of φ in P¹(ℚ), or an error when some are irrational.
pub fn critical_points(phi: &RationalMap) -> Result<Vec<P1>, ReportError> {
    let w = phi.critical_poly();
    let deg = w.degree().unwrap_or(0);
    let roots = rational_roots(&w);
    let total: usize = roots.iter().map(|r| r.1).sum::<usize>() + (2 * phi.d - 2 - deg);
    if total < 2 * phi.d - 2 {
        return Err(ReportError::IrrationalCriticalPoint);
    }
    let mut out: Vec<P1> = roots.into_iter().map(|r| P1::Fin(r.0)).collect();
    if deg < 2 * phi.d - 2 {
        out.push(P1::Inf);
    }
    Ok(out)
}

fn is_integral(x: &P1, p: u64) -> bool {
    matches!(x, P1::Fin(a) if vp(a, p) >= Val::Fin(0))
}

fn residue(x: &Rat, p: u64) -> u64 {
    crate::valued_field::rat_mod_pk(x, p, 1).unwrap().to_u64().unwrap()
}

/// η ∈ PGL₂(O) with η(0) = c and |η⁻¹(φ(c))| ≤ 1.
fn centering(c: &P1, fc: &P1, p: u64) -> Mobius {
    let mut eta = Mobius::identity();
    let mut cw = c.clone();
    if !is_integral(c, p) || !is_integral(fc, p) {
        // send a residue class avoided by both to ∞ via σ(w) = r + 1/w
        let used: Vec<u64> = [c, fc]
            .iter()
            .filter_map(|x| match x {
                P1::Fin(a) if vp(a, p) >= Val::Fin(0) => Some(residue(a, p)),
                _ => None,
            })
            .collect();
        let r = (0..p).find(|r| !used.contains(r)).expect("p ≥ 2 leaves a free residue");
        let sigma = Mobius::from_ints(r as i64, 1, 1, 0).unwrap();
        cw = sigma.inverse().apply(c);
        eta = sigma;
    }
    let a = match cw {
        P1::Fin(a) => a,
        P1::Inf => unreachable!("centered point is integral"),
    };
    eta.compose(&Mobius::affine(a, Rat::one()))
}

/// First Taylor coefficients of f/g at 0.
fn taylor(f: &Poly, g: &Poly, terms: usize) -> Vec<Rat> {
    let g0 = g.coeff(0);
    let mut a: Vec<Rat> = vec![];
    for j in 0..terms {
        let mut s = f.coeff(j);
        for i in 0..j {
            s -= &a[i] * g.coeff(j - i);
        }
        a.push(s / &g0);
    }
    a
}

fn min_exponent(poly: &Poly, p: u64) -> Rat {
    // least t with vp(c_0) ≤ vp(c_j) + j·t for every j
    let v0 = vp(&poly.coeff(0), p).unwrap_fin();
    let mut t = Rat::zero();
    for j in 1..poly.c.len() {
        if let Val::Fin(v) = vp(&poly.coeff(j), p) {
            let need = Rat::new(BigInt::from(v0 - v), BigInt::from(j as i64));
            if need > t {
                t = need;
            }
        }
    }
    t
}

fn critical_constant(phi: &RationalMap, c: &P1) -> CriticalConstant {
    let p = phi.p;
    let eta = centering(c, &phi.eval(c), p);
    let psi = phi.conjugate(&eta);
    let (f, g) = (psi.f_poly(), psi.g_poly());
    let a = taylor(&f, &g, 2 * phi.d + 1);
    let k = (2..a.len()).find(|&j| !a[j].is_zero()).expect("critical multiplicity is at most 2d − 2");
    let ak = a[k].clone();
    // ψ − a₀ = z^k·N/g with N(0) = a_k·g(0)
    let num = f.sub(&g.scale(&a[0]));
    let nk = Poly::new(num.c[k..].to_vec());
    let vk = vp(&ak, p).unwrap_fin();
    let mut t = Rat::new(BigInt::from(-vk), BigInt::from(k as i64)).max(Rat::zero());
    t = t.max(min_exponent(&nk, p)).max(min_exponent(&g, p));
    let tt = t.ceil().to_integer().to_i64().unwrap().max(1);
    CriticalConstant { point: c.clone(), k, a_k: ak, exponent: tt.max(-vk) }
}

pub fn przytycki_constants(phi: &RationalMap) -> Result<Przytycki, ReportError> {
    let crit = critical_points(phi)?;
    let per: Vec<CriticalConstant> = crit.iter().map(|c| critical_constant(phi, c)).collect();
    let e = per.iter().map(|c| c.exponent).max().unwrap();
    let a = ppow(phi.p, -e);
    let b = a.clone().min(Rat::one());
    Ok(Przytycki { per_point: per, exponent: e, a, b })
}

/// Radius bounds for the weighted points of φⁿ.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusReport {
    pub n: usize,
    pub potential_good_reduction: bool,
    /// 2/(d−1)·ordRes(φ)
    pub branch_a: Rat,
    /// max(n·log L̂, 2(n−1)·log L̂ − log B + 1/(p−1)) when B is known
    pub branch_b: Option<LogBound>,
    /// the same maximum without the −log B term, a lower bound valid for any B ≤ 1
    pub branch_b_without_b: LogBound,
    /// 3n·log L̂
    pub simplified: LogBound,
    pub atom_distances: Vec<(BerkPoint, Rat)>,
    pub checks: Vec<Check>,
}

impl RadiusReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn crucial_radius_bound(phi: &RationalMap, n: usize, b: Option<&Przytycki>) -> Result<RadiusReport, ReportError> {
    let cm = crucial_measure(phi, n);
    radius_report(phi, n, b, cm.ok().as_ref())
}

pub fn radius_report(
    phi: &RationalMap,
    n: usize,
    b: Option<&Przytycki>,
    cm: Option<&CrucialMeasure>,
) -> Result<RadiusReport, ReportError> {
    let p = phi.p;
    let d = phi.d as u64;
    let r = phi.ord_res();
    let branch_a = Rat::new(BigInt::from(2 * r), BigInt::from(d as i64 - 1));
    let pgr = min_res_loc(phi)?.value.is_zero();
    let ll = lipschitz_upper(phi).log;
    let nn = Rat::from_integer((n as i64).into());
    let gamma = Rat::new(BigInt::one(), BigInt::from(p as i64 - 1));
    let first = ll.scale(&nn);
    let second = ll.scale(&(Rat::from_integer(2.into()) * (&nn - Rat::one()))).add_rat(&gamma);
    let without_b = first.clone().max(second.clone());
    let branch_b = b.map(|b| first.clone().max(second.add_rat(&Rat::from_integer(b.exponent.into()))));
    let simplified = ll.scale(&(Rat::from_integer(3.into()) * &nn));
    let mut checks = vec![];
    let mut dists = vec![];
    match cm {
        None => checks.push(
            Check::new("radius_atoms", "-".into(), without_b.to_string(), true)
                .note("crucial measure unavailable; atom check skipped"),
        ),
        Some(cm) => {
            for w in &cm.atoms {
                let rho_p = rho(&w.point, &BerkPoint::gauss(), p).expect("atoms are hyperbolic");
                let lhs = LogBound::rational(rho_p.clone(), p, d);
                if pgr {
                    checks.push(Check::new(
                        &format!("radius_branch_a:{}", w.point),
                        fmt_rat(&rho_p),
                        fmt_rat(&branch_a),
                        rho_p <= branch_a,
                    ));
                }
                let (rhs, note) = match &branch_b {
                    Some(bb) => (bb.clone(), "L̂ substituted for the Lipschitz constant"),
                    None => (without_b.clone(), "B unknown; −log B ≥ 0 dropped, which can only lower the bound"),
                };
                checks.push(
                    Check::new(&format!("radius_branch_b:{}", w.point), fmt_rat(&rho_p), rhs.to_string(), lhs.le(&rhs))
                        .note(note),
                );
                checks.push(Check::new(
                    &format!("radius_simplified:{}", w.point),
                    fmt_rat(&rho_p),
                    simplified.to_string(),
                    lhs.le(&simplified),
                ));
                dists.push((w.point.clone(), rho_p));
            }
        }
    }
    Ok(RadiusReport {
        n,
        potential_good_reduction: pgr,
        branch_a,
        branch_b,
        branch_b_without_b: without_b,
        simplified,
        atom_distances: dists,
        checks,
    })
}

fn val_or_inf(v: Val) -> String {
    match v {
        Val::Inf => "inf".into(),
        Val::Fin(k) => k.to_string(),
    }
}

/// min(vp α₀, vp β₀) and min(vp α_top, vp β_top) of the normalized lift of
/// φⁿ against (dⁿ − 1)/(d − 1)·ordRes(φ).
pub fn coefficient_lemma_check(phi: &RationalMap, n: usize) -> Vec<Check> {
    let psi = phi.iterate(n);
    let p = phi.p;
    let d = phi.d as i64;
    let bound = (d.pow(n as u32) - 1) / (d - 1) * phi.ord_res();
    let vpi = |x: &BigInt| vp(&Rat::from_integer(x.clone()), p);
    let top = psi.d;
    let low = vpi(&psi.f[0]).min(vpi(&psi.g[0]));
    let high = vpi(&psi.f[top]).min(vpi(&psi.g[top]));
    vec![
        Check::new("coefficient_constant", val_or_inf(low), bound.to_string(), low <= Val::Fin(bound)),
        Check::new("coefficient_leading", val_or_inf(high), bound.to_string(), high <= Val::Fin(bound)),
    ]
}

/// vp(λ_P) ≥ −(dⁿ − 1)/(d − 1)·ordRes(φ) at a rational fixed point of φⁿ.
pub fn multiplier_bound_check(phi: &RationalMap, n: usize, pt: &P1) -> Result<Check, ReportError> {
    let psi = phi.iterate(n);
    let lam = psi.multiplier_at(pt).map_err(|e| match e {
        MapError::NotFixed => ReportError::NotPeriodic(pt.to_string()),
        e => e.into(),
    })?;
    let d = phi.d as i64;
    let bound = -((d.pow(n as u32) - 1) / (d - 1)) * phi.ord_res();
    let v = vp(&lam, phi.p);
    Ok(Check::new(&format!("multiplier:{pt}"), val_or_inf(v), bound.to_string(), v >= Val::Fin(bound)))
}

/// Rational fixed points of φⁿ in P¹(ℚ).
pub fn rational_periodic_points(phi: &RationalMap, n: usize) -> Vec<P1> {
    let fp = phi.iterate(n).fixed_point_poly();
    let mut out: Vec<P1> = rational_roots(&fp.poly).into_iter().map(|r| P1::Fin(r.0)).collect();
    if fp.inf_fixed {
        out.push(P1::Inf);
    }
    out
}

/// Iₙ(ζ) = ∫ log δ(·, ζ)_ζG dν_φⁿ
pub fn log_integral(phi: &RationalMap, n: usize, z: &BerkPoint) -> Result<Rat, ReportError> {
    let cm = crucial_measure(phi, n)?;
    Ok(log_integral_of(&cm, z))
}

pub fn log_integral_of(cm: &CrucialMeasure, z: &BerkPoint) -> Rat {
    cm.measure()
        .atoms
        .iter()
        .map(|(x, m)| m * hsia_log(x, z, cm.p).fin().expect("atoms are hyperbolic").clone())
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquidistRow {
    pub n: usize,
    pub integral: Rat,
    /// |I_{n+1} − I_n|, absent on the last row
    pub difference: Option<Rat>,
    /// |I_{n+1} − I_n|·dⁿ/n
    pub scaled: Option<Rat>,
    /// 36n·log L̂, the envelope without its unknown additive constant
    pub envelope: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquidistTable {
    pub base: BerkPoint,
    pub rows: Vec<EquidistRow>,
    /// max of the scaled differences
    pub fitted: Rat,
}

pub fn equidist_table(phi: &RationalMap, z: &BerkPoint, n_max: usize) -> Result<EquidistTable, ReportError> {
    let cms = (1..=n_max).map(|n| crucial_measure(phi, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(equidist_table_of(phi, &cms, z))
}

/// The table from measures already computed for n = 1, 2, ….
pub fn equidist_table_of(phi: &RationalMap, cms: &[CrucialMeasure], z: &BerkPoint) -> EquidistTable {
    let ll = lipschitz_upper(phi).log.to_f64();
    let d = phi.d as i64;
    let ints: Vec<Rat> = cms.iter().map(|c| log_integral_of(c, z)).collect();
    let mut rows = vec![];
    let mut fitted = Rat::zero();
    for (i, c) in cms.iter().enumerate() {
        let n = c.n;
        let (diff, scaled) = match ints.get(i + 1) {
            Some(next) => {
                let df = (next - &ints[i]).abs();
                let sc = &df * Rat::from_integer(d.pow(n as u32).into()) / Rat::from_integer((n as i64).into());
                fitted = fitted.max(sc.clone());
                (Some(df), Some(sc))
            }
            None => (None, None),
        };
        rows.push(EquidistRow { n, integral: ints[i].clone(), difference: diff, scaled, envelope: 36.0 * n as f64 * ll });
    }
    EquidistTable { base: z.clone(), rows, fitted }
}

/// log_p [φ^#](ζ) = −gv(W) + 2·min(gv F, gv G) − 2·min(0, gv z).
pub fn spherical_derivative_log(phi: &RationalMap, z: &BerkPoint) -> Result<Rat, ReportError> {
    let p = phi.p;
    let (a, t) = match z {
        BerkPoint::Disk { center, t } => (center.clone(), t.clone()),
        BerkPoint::TypeI(_) => return Err(ReportError::OrdRes(crate::berkovich::BerkError::TypeIPoint.into())),
    };
    let gvp = |q: &Poly| -> Rat {
        let sh = q.compose(&Poly::new(vec![a.clone(), Rat::one()]));
        GaussPoly::new(sh.c).gauss_val(&t, p).expect("nonzero polynomial")
    };
    let (f, g) = (phi.f_poly(), phi.g_poly());
    let w = phi.critical_poly();
    let gz = gvp(&Poly::x());
    Ok(-gvp(&w) + Rat::from_integer(2.into()) * gvp(&f).min(gvp(&g)) - Rat::from_integer(2.into()) * gz.min(Rat::zero()))
}

/// ∫ log_p [φ^#] dν_φⁿ
pub fn lyapunov_estimate(phi: &RationalMap, n: usize) -> Result<Rat, ReportError> {
    let cm = crucial_measure(phi, n)?;
    lyapunov_of(phi, &cm)
}

pub fn lyapunov_of(phi: &RationalMap, cm: &CrucialMeasure) -> Result<Rat, ReportError> {
    let mut s = Rat::zero();
    for (x, m) in cm.measure().atoms {
        s += m * spherical_derivative_log(phi, &x)?;
    }
    Ok(s)
}

/// Everything above for one map and iterate.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub ord_res: i64,
    pub lipschitz: Lipschitz,
    pub rp: Vec<(usize, Result<Rat, ReportError>)>,
    pub przytycki: Result<Przytycki, ReportError>,
    /// γ_p = p^{1/(p−1)}, as its exponent
    pub gamma_exponent: Rat,
    pub radius: RadiusReport,
    pub checks: Vec<Check>,
}

impl BoundsReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn bounds_report(phi: &RationalMap, n: usize) -> Result<BoundsReport, ReportError> {
    let lip = lipschitz_upper(phi);
    let prz = przytycki_constants(phi);
    let radius = crucial_radius_bound(phi, n, prz.as_ref().ok())?;
    let mut checks = radius.checks.clone();
    let mut rp = vec![];
    for k in 1..=n {
        let r = root_pole_number(phi, k);
        if r.is_ok() {
            checks.push(rp_bound_check(phi, k)?);
        }
        rp.push((k, r));
    }
    for k in 1..=n {
        checks.extend(coefficient_lemma_check(phi, k));
        for pt in rational_periodic_points(phi, k) {
            checks.push(multiplier_bound_check(phi, k, &pt)?);
        }
    }
    Ok(BoundsReport {
        ord_res: phi.ord_res(),
        lipschitz: lip,
        rp,
        przytycki: prz,
        gamma_exponent: Rat::new(BigInt::one(), BigInt::from(phi.p as i64 - 1)),
        radius,
        checks,
    })
}
