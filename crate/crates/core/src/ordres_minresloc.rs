//! ordRes along Berkovich rays, computed tropically.
//!
//! Conjugating by z = a + A·w with vp(A) = t turns every coefficient of the
//! conjugated lift into c·A^e, so the least coefficient valuation m_a(t) is a
//! minimum of lines v + e·t and
//! ordRes_φ(ζ(a, t)) = vp(Res) + (d² + d)·t − 2d·m_a(t).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::berkovich::{
    directions, reduce_general, rho, BerkError, BerkPoint, Direction, LocalExpansion,
};
use crate::rational_map::RationalMap;
use crate::valued_field::{ppow, vp, FpPoly, Rat, Val};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdResError {
    #[error("ZeroPolynomial: Gauss valuation of the zero polynomial")]
    ZeroPolynomial,
    #[error("DirectionEnumerationInfeasible: p = {0} exceeds the direction cap")]
    DirectionEnumerationInfeasible(u64),
    #[error("DescentCap: descent did not terminate within the step cap")]
    DescentCap,
    #[error("{0}")]
    Berk(#[from] BerkError),
}

/// A polynomial in an indeterminate A, evaluated tropically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussPoly {
    pub c: Vec<Rat>,
}

impl GaussPoly {
    pub fn new(c: Vec<Rat>) -> GaussPoly {
        GaussPoly { c }
    }

    /// min_k vp(c_k) + k·t
    pub fn gauss_val(&self, t: &Rat, p: u64) -> Result<Rat, OrdResError> {
        self.c
            .iter()
            .enumerate()
            .filter_map(|(k, c)| match vp(c, p) {
                Val::Inf => None,
                Val::Fin(v) => Some(Rat::from_integer(v.into()) + t * Rat::from_integer(BigInt::from(k))),
            })
            .min()
            .ok_or(OrdResError::ZeroPolynomial)
    }
}

pub fn gauss_val(q: &GaussPoly, t: &Rat, p: u64) -> Result<Rat, OrdResError> {
    q.gauss_val(t, p)
}

/// A line v + e·t.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Line {
    v: Rat,
    e: i64,
}

impl Line {
    fn at(&self, t: &Rat) -> Rat {
        &self.v + t * Rat::from_integer(self.e.into())
    }
}

/// ordRes_φ along the ray of center a, as an exact function of t.
#[derive(Debug, Clone)]
pub struct TropicalOrdRes {
    pub center: Rat,
    d: i64,
    res: i64,
    lines: Vec<Line>,
    /// breakpoints of m_a, increasing, with the slope e of m_a to the right of each
    breaks: Vec<Rat>,
    slopes: Vec<i64>,
}

impl TropicalOrdRes {
    pub fn new(phi: &RationalMap, a: &Rat) -> TropicalOrdRes {
        let p = phi.p;
        let ex = LocalExpansion::new(phi, a);
        let (ft, gt) = ex.conjugate_terms();
        let mut lines: Vec<Line> = ft
            .iter()
            .chain(gt.iter())
            .filter_map(|(c, e)| match vp(c, p) {
                Val::Inf => None,
                Val::Fin(v) => Some(Line {
                    v: Rat::from_integer(v.into()),
                    e: *e,
                }),
            })
            .collect();
        // keep the lowest line of each slope
        lines.sort_by(|x, y| y.e.cmp(&x.e).then(x.v.cmp(&y.v)));
        lines.dedup_by(|x, y| x.e == y.e);
        let (breaks, slopes) = envelope(&lines);
        TropicalOrdRes {
            center: a.clone(),
            d: phi.d as i64,
            res: phi.ord_res(),
            lines,
            breaks,
            slopes,
        }
    }

    pub fn m(&self, t: &Rat) -> Rat {
        self.lines.iter().map(|l| l.at(t)).min().unwrap()
    }

    pub fn value(&self, t: &Rat) -> Rat {
        let d = self.d;
        Rat::from_integer((self.res).into()) + t * Rat::from_integer((d * d + d).into())
            - self.m(t) * Rat::from_integer((2 * d).into())
    }

    fn slope_of_e(&self, e: i64) -> Rat {
        Rat::from_integer((self.d * self.d + self.d - 2 * self.d * e).into())
    }

    /// Slope of m_a on the piece just right of t.
    fn e_right(&self, t: &Rat) -> i64 {
        let i = self.breaks.iter().take_while(|b| *b <= t).count();
        self.slopes[i]
    }

    fn e_left(&self, t: &Rat) -> i64 {
        let i = self.breaks.iter().take_while(|b| *b < t).count();
        self.slopes[i]
    }

    pub fn right_slope(&self, t: &Rat) -> Rat {
        self.slope_of_e(self.e_right(t))
    }

    pub fn left_slope(&self, t: &Rat) -> Rat {
        self.slope_of_e(self.e_left(t))
    }

    /// All breakpoints of the profile over ℝ.
    pub fn breakpoints(&self) -> &[Rat] {
        &self.breaks
    }

    /// The set of minimizers within [lo, hi] (either end may be open-ended).
    pub fn argmin(&self, lo: Option<&Rat>, hi: Option<&Rat>) -> (Rat, Rat, Rat) {
        let mut cands: Vec<Rat> = self.breaks.clone();
        if let Some(l) = lo {
            cands.push(l.clone());
        }
        if let Some(h) = hi {
            cands.push(h.clone());
        }
        cands.retain(|t| lo.is_none_or(|l| t >= l) && hi.is_none_or(|h| t <= h));
        cands.sort();
        cands.dedup();
        if cands.is_empty() {
            // no breakpoint inside and both ends open cannot happen for a coercive profile
            let t = lo.or(hi).cloned().unwrap_or_else(Rat::zero);
            cands.push(t);
        }
        let best = cands.iter().map(|t| self.value(t)).min().unwrap();
        let at: Vec<&Rat> = cands.iter().filter(|t| self.value(t) == best).collect();
        (at[0].clone(), at[at.len() - 1].clone(), best)
    }
}

/// Lower envelope of lines sorted by decreasing slope with one line per slope.
fn envelope(lines: &[Line]) -> (Vec<Rat>, Vec<i64>) {
    let mut breaks = vec![];
    let mut slopes = vec![lines[0].e];
    let mut cur = 0usize;
    loop {
        let c = &lines[cur];
        let mut best: Option<(Rat, usize)> = None;
        for (j, l) in lines.iter().enumerate().skip(cur + 1) {
            let t = (&l.v - &c.v) / Rat::from_integer((c.e - l.e).into());
            if let Some(bt) = breaks.last() {
                if &t <= bt {
                    continue;
                }
            }
            match &best {
                Some((bt, _)) if &t > bt => {}
                // ties resolve to the smaller slope, which is the later index
                _ => best = Some((t, j)),
            }
        }
        match best {
            None => break,
            Some((t, j)) => {
                breaks.push(t);
                slopes.push(lines[j].e);
                cur = j;
            }
        }
    }
    (breaks, slopes)
}

/// ordRes_φ(ζ) at a disc point.
pub fn ord_res_at(phi: &RationalMap, z: &BerkPoint) -> Result<Rat, OrdResError> {
    match z {
        BerkPoint::Disk { center, t } => Ok(TropicalOrdRes::new(phi, center).value(t)),
        BerkPoint::TypeI(_) => Err(BerkError::TypeIPoint.into()),
    }
}

/// One affine piece of a profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub slope: Rat,
    pub value_at_left: Rat,
}

/// Exact piecewise-affine restriction of ordRes_φ to t ∈ [t0, t1] on a ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayProfile {
    pub center: Rat,
    pub breakpoints: Vec<Rat>,
    pub pieces: Vec<Piece>,
}

impl RayProfile {
    pub fn value(&self, t: &Rat) -> Option<Rat> {
        let n = self.breakpoints.len();
        if t < &self.breakpoints[0] || t > &self.breakpoints[n - 1] {
            return None;
        }
        let i = self
            .breakpoints
            .iter()
            .skip(1)
            .take_while(|b| *b < t)
            .count()
            .min(self.pieces.len() - 1);
        let pc = &self.pieces[i];
        Some(&pc.value_at_left + &pc.slope * (t - &self.breakpoints[i]))
    }

    pub fn slopes(&self) -> Vec<Rat> {
        self.pieces.iter().map(|p| p.slope.clone()).collect()
    }

    pub fn is_convex(&self) -> bool {
        self.pieces.windows(2).all(|w| w[0].slope <= w[1].slope)
    }

    pub fn is_continuous(&self) -> bool {
        self.pieces.windows(2).enumerate().all(|(i, w)| {
            let len = &self.breakpoints[i + 1] - &self.breakpoints[i];
            &w[0].value_at_left + &w[0].slope * len == w[1].value_at_left
        })
    }
}

pub fn ray_profile(phi: &RationalMap, center: &Rat, t0: &Rat, t1: &Rat) -> RayProfile {
    assert!(t0 <= t1, "empty range");
    let tr = TropicalOrdRes::new(phi, center);
    let mut bps = vec![t0.clone()];
    for b in tr.breakpoints() {
        if b > t0 && b < t1 {
            bps.push(b.clone());
        }
    }
    if t1 > t0 {
        bps.push(t1.clone());
    }
    let pieces = if bps.len() == 1 {
        vec![Piece {
            slope: Rat::zero(),
            value_at_left: tr.value(t0),
        }]
    } else {
        bps.windows(2)
            .map(|w| Piece {
                slope: tr.right_slope(&w[0]),
                value_at_left: tr.value(&w[0]),
            })
            .collect()
    };
    let mut prof = RayProfile {
        center: center.clone(),
        breakpoints: bps,
        pieces,
    };
    if prof.breakpoints.len() == 1 {
        // a single point: keep its value as a zero-slope piece over [t, t]
        prof.breakpoints.push(t0.clone());
    }
    prof
}

/// A direction explored during descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub at: String,
    pub direction: String,
    pub slope: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinResCertificate {
    /// every explored direction with its one-sided slope
    pub explored: Vec<Probe>,
    /// the points visited by the descent
    pub path: Vec<String>,
    /// descending directions at non-integral points whose discs have no
    /// ℚ_p-rational center; the result is certified only within ℚ_p-rational
    /// directions when this is nonempty
    pub irrational_descents: Vec<Probe>,
    pub certified_rational_scope: bool,
    pub potential_good_reduction: bool,
}

/// MinResLoc as a point (equal ends) or a segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinResLoc {
    pub ends: (BerkPoint, BerkPoint),
    pub value: Rat,
    pub certificate: MinResCertificate,
}

impl MinResLoc {
    pub fn is_point(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    pub fn endpoints(&self) -> Vec<BerkPoint> {
        if self.is_point() {
            vec![self.ends.0.clone()]
        } else {
            vec![self.ends.0.clone(), self.ends.1.clone()]
        }
    }

    pub fn contains(&self, x: &BerkPoint, p: u64) -> bool {
        let (a, b) = &self.ends;
        match (rho(a, x, p), rho(x, b, p), rho(a, b, p)) {
            (Ok(u), Ok(v), Ok(w)) => u + v == w,
            _ => false,
        }
    }
}

pub const DEFAULT_DIRECTION_CAP: u64 = 97;
const DESCENT_CAP: usize = 10_000;

/// A ray leaving an integral point: its center and whether t increases.
#[derive(Debug, Clone)]
struct Ray {
    center: Rat,
    up: bool,
    dir: Direction,
}

fn rays_at(z: &BerkPoint, p: u64, cands: &[Rat], cap: u64) -> Vec<Ray> {
    let (a, t) = (z.center().unwrap().clone(), z.log_radius().unwrap().clone());
    let mut out = vec![];
    if p <= cap {
        let k = t.to_integer().to_i64().unwrap();
        for dir in directions(z, p) {
            match dir {
                Direction::Residue(r) => out.push(Ray {
                    center: &a + ppow(p, k) * Rat::from_integer(BigInt::from(r)),
                    up: true,
                    dir,
                }),
                Direction::InfSide => out.push(Ray {
                    center: a.clone(),
                    up: false,
                    dir,
                }),
                _ => {}
            }
        }
    } else {
        let mut seen = std::collections::BTreeSet::new();
        for c in cands {
            if vp(&(c - &a), p) >= Val::Fin(t.to_integer().to_i64().unwrap()) {
                let d = crate::berkovich::direction_of(z, &BerkPoint::fin(c.clone()), p);
                if seen.insert(d.clone()) {
                    out.push(Ray {
                        center: c.clone(),
                        up: true,
                        dir: d,
                    });
                }
            }
        }
        out.push(Ray {
            center: a,
            up: false,
            dir: Direction::InfSide,
        });
    }
    out
}

fn ray_slope(phi: &RationalMap, ray: &Ray, t: &Rat) -> Rat {
    let tr = TropicalOrdRes::new(phi, &ray.center);
    if ray.up {
        tr.right_slope(t)
    } else {
        -tr.left_slope(t)
    }
}

fn dir_name(d: &Direction) -> String {
    match d {
        Direction::Residue(r) => format!("residue:{r}"),
        Direction::InfSide => "inf-side".into(),
        Direction::Down => "down".into(),
        Direction::Inward => "inward".into(),
    }
}

/// Order of vanishing of an F_p polynomial at x.
fn ord_at(h: &FpPoly, x: u64) -> usize {
    if h.is_zero() {
        return usize::MAX;
    }
    let lin = FpPoly::new(vec![(h.p - x) % h.p, 1], h.p);
    let mut q = h.clone();
    let mut k = 0;
    loop {
        let (qq, r) = q.divrem(&lin);
        if !r.is_zero() {
            return k;
        }
        k += 1;
        q = qq;
    }
}

/// Slope of ordRes leaving ζ in the residue direction ω of its reduction:
/// D² + D − 2D·min(ord_ω(F̃ − ωG̃), ord_ω(G̃) + 1).
pub fn reduced_direction_slope(phi: &RationalMap, a: &Rat, t: &Rat, omega: u64) -> Rat {
    let red = reduce_general(phi, a, t);
    let p = phi.p;
    let h = red.ftil.h.sub(&red.gtil.h.scale(omega % p));
    let k1 = ord_at(&h, omega);
    let k2 = ord_at(&red.gtil.h, omega).saturating_add(1);
    let d = phi.d as i64;
    let k = k1.min(k2).min(phi.d + 1) as i64;
    Rat::from_integer((d * d + d - 2 * d * k).into())
}

/// Candidate centers for large p: rational roots of f, g and the fixed-point polynomial.
fn candidate_centers(phi: &RationalMap) -> Vec<Rat> {
    use crate::rational_map::rational_roots;
    let mut v: Vec<Rat> = vec![];
    for poly in [phi.f_poly(), phi.g_poly(), phi.fixed_point_poly().poly] {
        v.extend(rational_roots(&poly).into_iter().map(|x| x.0));
    }
    v.sort();
    v.dedup();
    v
}

/// Minimize ordRes_φ by descent from ζG along exact ray profiles.
pub fn min_res_loc(phi: &RationalMap) -> Result<MinResLoc, OrdResError> {
    min_res_loc_with_cap(phi, DEFAULT_DIRECTION_CAP)
}

pub fn min_res_loc_with_cap(phi: &RationalMap, cap: u64) -> Result<MinResLoc, OrdResError> {
    let p = phi.p;
    let cands = if p > cap { candidate_centers(phi) } else { vec![] };
    if p > cap && cands.is_empty() {
        return Err(OrdResError::DirectionEnumerationInfeasible(p));
    }
    let mut explored = vec![];
    let mut path = vec![];
    let mut z = BerkPoint::gauss();
    let mut value = ord_res_at(phi, &z)?;
    let mut steps = 0;
    // descent
    loop {
        steps += 1;
        if steps > DESCENT_CAP {
            return Err(OrdResError::DescentCap);
        }
        path.push(z.to_string());
        if !z.is_integral() {
            break;
        }
        let t = z.log_radius().unwrap().clone();
        let mut best: Option<(Rat, Ray)> = None;
        for ray in rays_at(&z, p, &cands, cap) {
            let s = ray_slope(phi, &ray, &t);
            explored.push(Probe {
                at: z.to_string(),
                direction: dir_name(&ray.dir),
                slope: s.clone(),
            });
            // strict comparison keeps the first (smallest residue, inf-side last)
            if s.is_negative() && best.as_ref().is_none_or(|(b, _)| &s < b) {
                best = Some((s, ray));
            }
        }
        let Some((_, ray)) = best else { break };
        let tr = TropicalOrdRes::new(phi, &ray.center);
        let (lo, hi, v) = if ray.up {
            tr.argmin(Some(&t), None)
        } else {
            tr.argmin(None, Some(&t))
        };
        let tt = if ray.up { lo } else { hi };
        debug_assert!(v < value);
        value = v;
        z = BerkPoint::disk(ray.center.clone(), tt, p);
    }
    // expand flat directions into a segment
    let mut ends = vec![];
    let mut irrational = vec![];
    let start = z.clone();
    let mut flat_dirs: Vec<Ray> = vec![];
    if start.is_integral() {
        let t = start.log_radius().unwrap().clone();
        for ray in rays_at(&start, p, &cands, cap) {
            if ray_slope(phi, &ray, &t).is_zero() {
                flat_dirs.push(ray);
            }
        }
    } else {
        check_irrational_directions(phi, &start, &mut irrational);
        // along-ray flatness at the minimizer
        let t = start.log_radius().unwrap().clone();
        let a = start.center().unwrap().clone();
        let tr = TropicalOrdRes::new(phi, &a);
        if tr.right_slope(&t).is_zero() {
            flat_dirs.push(Ray { center: a.clone(), up: true, dir: Direction::Down });
        }
        if tr.left_slope(&t).is_zero() {
            flat_dirs.push(Ray { center: a, up: false, dir: Direction::InfSide });
        }
    }
    for ray in flat_dirs.into_iter().take(2) {
        let e = follow_flat(phi, &start, ray, &value, &cands, cap, &mut irrational)?;
        ends.push(e);
    }
    let (e0, e1) = match ends.len() {
        0 => (start.clone(), start.clone()),
        1 => (start.clone(), ends.pop().unwrap()),
        _ => {
            let b = ends.pop().unwrap();
            (ends.pop().unwrap(), b)
        }
    };
    let certified = irrational.is_empty();
    Ok(MinResLoc {
        ends: (e0, e1),
        value: value.clone(),
        certificate: MinResCertificate {
            explored,
            path,
            irrational_descents: irrational,
            certified_rational_scope: certified,
            potential_good_reduction: value.is_zero(),
        },
    })
}

/// At ζ(a, r/q) with q a power of p, the residue directions ω ∈ F_p^× are
/// Galois-stable but their discs have no ℚ_p-rational center; record any
/// that descend.
fn check_irrational_directions(phi: &RationalMap, z: &BerkPoint, out: &mut Vec<Probe>) {
    let p = phi.p;
    let t = z.log_radius().unwrap();
    let mut q = t.denom().clone();
    let pb = BigInt::from(p);
    while (&q % &pb).is_zero() {
        q /= &pb;
    }
    if !q.is_one() {
        return;
    }
    let a = z.center().unwrap();
    for w in 1..p {
        let s = reduced_direction_slope(phi, a, t, w);
        if s.is_negative() {
            out.push(Probe {
                at: z.to_string(),
                direction: format!("residue:{w}"),
                slope: s,
            });
        }
    }
}

/// Follow a zero-slope direction while ordRes stays at the minimum.
fn follow_flat(
    phi: &RationalMap,
    start: &BerkPoint,
    first: Ray,
    value: &Rat,
    cands: &[Rat],
    cap: u64,
    irrational: &mut Vec<Probe>,
) -> Result<BerkPoint, OrdResError> {
    let p = phi.p;
    let mut z = start.clone();
    let mut ray = first;
    for _ in 0..DESCENT_CAP {
        let t = z.log_radius().unwrap().clone();
        let tr = TropicalOrdRes::new(phi, &ray.center);
        // end of the flat piece along this ray
        let (lo, hi, v) = if ray.up {
            tr.argmin(Some(&t), None)
        } else {
            tr.argmin(None, Some(&t))
        };
        debug_assert_eq!(&v, value);
        let tt = if ray.up { hi } else { lo };
        let came_from = ray.clone();
        z = BerkPoint::disk(ray.center.clone(), tt.clone(), p);
        if !z.is_integral() {
            check_irrational_directions(phi, &z, irrational);
            return Ok(z);
        }
        // look for a turn, skipping the way back
        let back = crate::berkovich::direction_of(&z, start, p);
        let mut next = None;
        for r in rays_at(&z, p, cands, cap) {
            if r.dir == back {
                continue;
            }
            if !came_from.up && !r.up {
                continue;
            }
            if ray_slope(phi, &r, &tt).is_zero() {
                next = Some(r);
                break;
            }
        }
        match next {
            Some(r) => ray = r,
            None => return Ok(z),
        }
    }
    Err(OrdResError::DescentCap)
}

/// Containment of MinResLoc(φⁿ) in the ball of radius 2/(d−1)·ordRes(φ),
/// plus monotonicity of ordRes_{φⁿ} outside that ball on sampled rays.
#[derive(Debug, Clone)]
pub struct ContainmentReport {
    pub n: usize,
    pub radius_bound: Rat,
    pub distances: Vec<Rat>,
    pub contained: bool,
    pub rays_sampled: usize,
    pub monotone_outside: bool,
    pub pass: bool,
}

pub fn containment_check(phi: &RationalMap, n: usize) -> Result<ContainmentReport, OrdResError> {
    let p = phi.p;
    let d = phi.d as i64;
    let rbound = Rat::new(BigInt::from(2 * phi.ord_res()), BigInt::from(d - 1));
    let it = phi.iterate(n);
    let loc = min_res_loc(&it)?;
    let g = BerkPoint::gauss();
    let distances: Vec<Rat> = loc
        .endpoints()
        .iter()
        .map(|x| rho(x, &g, p))
        .collect::<Result<_, _>>()?;
    let contained = distances.iter().all(|r| r <= &rbound);
    // 16 rays into residue classes below ζG and 16 that first climb toward ∞
    let far = rbound.floor().to_integer().to_i64().unwrap() + 1;
    let mut monotone = true;
    let mut rays = 0;
    for j in 1..=16i64 {
        let down = BerkPoint::disk(Rat::from_integer(j.into()), &rbound + Rat::from_integer(2.into()), p);
        let c = Rat::from_integer(j.into()) * ppow(p, -far);
        let up = BerkPoint::disk(c.clone(), Rat::from_integer((vp(&c, p).unwrap_fin() + 1).into()), p);
        for x in [down, up] {
            monotone &= nondecreasing_beyond(&it, &x, &rbound);
            rays += 1;
        }
    }
    Ok(ContainmentReport {
        n,
        radius_bound: rbound,
        distances,
        contained,
        rays_sampled: rays,
        monotone_outside: monotone,
        pass: contained && monotone,
    })
}

/// Whether ordRes_φ is nondecreasing along the geodesic from ζG to x once
/// the path leaves the ball of radius r.
fn nondecreasing_beyond(phi: &RationalMap, x: &BerkPoint, r: &Rat) -> bool {
    let p = phi.p;
    let (c, s) = (x.center().unwrap().clone(), x.log_radius().unwrap().clone());
    let tl = crate::berkovich::lca(&BerkPoint::gauss(), x, p).log_radius().unwrap().clone();
    // legs (center, start t, end t) with their starting path distance
    let legs = [(Rat::zero(), Rat::zero(), tl.clone(), Rat::zero()), (c, tl.clone(), s, -tl.clone())];
    let mut last: Option<Rat> = None;
    for (center, t0, t1, dist0) in legs {
        if t0 == t1 {
            continue;
        }
        let tr = TropicalOrdRes::new(phi, &center);
        let (lo, hi) = if t0 < t1 { (&t0, &t1) } else { (&t1, &t0) };
        let mut ts: Vec<Rat> = tr.breakpoints().iter().filter(|b| *b > lo && *b < hi).cloned().collect();
        ts.push(t0.clone());
        ts.push(t1.clone());
        // the point at distance exactly r, when it lies on this leg
        let boundary = if t0 < t1 { &t0 + (r - &dist0) } else { &t0 - (r - &dist0) };
        if &boundary > lo && &boundary < hi {
            ts.push(boundary);
        }
        ts.sort();
        if t0 > t1 {
            ts.reverse();
        }
        for t in ts {
            let dist = &dist0 + (&t - &t0).abs();
            if &dist < r {
                continue;
            }
            let v = tr.value(&t);
            if last.as_ref().is_some_and(|l| &v < l) {
                return false;
            }
            last = Some(v);
        }
    }
    true
}

/// ordRes_{φⁿ}(ζ) / (d^{2n} − d^n)
pub fn green_diag_approx(phi: &RationalMap, z: &BerkPoint, n: usize) -> Result<Rat, OrdResError> {
    let it = phi.iterate(n);
    let dn = BigInt::from(phi.d).pow(n as u32);
    let denom = &dn * &dn - &dn;
    Ok(ord_res_at(&it, z)? / Rat::from_integer(denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational_map::Poly;
    use crate::valued_field::{rat, rat_frac};

    fn half() -> RationalMap {
        RationalMap::new(&Poly::new(vec![rat(0), rat(0), rat_frac(1, 2)]), &Poly::one(), 2).unwrap()
    }

    fn z2_plus_half() -> RationalMap {
        RationalMap::new(&Poly::new(vec![rat_frac(1, 2), rat(0), rat(1)]), &Poly::one(), 2).unwrap()
    }

    #[test]
    fn gauss_val_examples() {
        let q = GaussPoly::new(vec![rat(2), rat(0), rat(1)]);
        assert_eq!(q.gauss_val(&rat(1), 2).unwrap(), rat(1));
        let q = GaussPoly::new(vec![rat(0), rat(0), rat(0), rat(1)]);
        assert_eq!(q.gauss_val(&rat_frac(2, 3), 5).unwrap(), rat(2));
        assert_eq!(GaussPoly::new(vec![]).gauss_val(&rat(0), 2), Err(OrdResError::ZeroPolynomial));
    }

    #[test]
    fn ord_res_at_examples() {
        let h = half();
        for (t, v) in [(0, 2), (1, 0), (2, 2)] {
            assert_eq!(ord_res_at(&h, &BerkPoint::disk(rat(0), rat(t), 2)).unwrap(), rat(v));
        }
        let sq = RationalMap::from_ints(&[0, 0, 1], &[1], 3).unwrap();
        assert_eq!(ord_res_at(&sq, &BerkPoint::gauss()).unwrap(), rat(0));
        let m = z2_plus_half();
        assert_eq!(m.ord_res(), 4);
        assert_eq!(ord_res_at(&m, &BerkPoint::disk(rat(0), rat_frac(-1, 2), 2)).unwrap(), rat(1));
    }

    #[test]
    fn profiles() {
        let pr = ray_profile(&half(), &rat(0), &rat(0), &rat(3));
        assert_eq!(pr.breakpoints, vec![rat(0), rat(1), rat(3)]);
        assert_eq!(pr.slopes(), vec![rat(-2), rat(2)]);
        assert!(pr.is_convex() && pr.is_continuous());
        let m = RationalMap::from_ints(&[0, -1, 1], &[3], 3).unwrap();
        let pr = ray_profile(&m, &rat(0), &rat(0), &rat(2));
        assert_eq!(pr.slopes(), vec![rat(2)]);
        assert_eq!(pr.pieces[0].value_at_left, rat(2));
        let pr = ray_profile(&m, &rat(0), &rat(1), &rat(1));
        assert_eq!(pr.value(&rat(1)), Some(rat(4)));
        assert_eq!(pr.pieces.len(), 1);
    }

    #[test]
    fn minresloc_examples() {
        let loc = min_res_loc(&half()).unwrap();
        assert_eq!(loc.endpoints(), vec![BerkPoint::disk(rat(0), rat(1), 2)]);
        assert_eq!(loc.value, rat(0));
        assert!(loc.certificate.potential_good_reduction);
        let m = RationalMap::from_ints(&[0, -1, 1], &[3], 3).unwrap();
        let loc = min_res_loc(&m).unwrap();
        assert_eq!(loc.endpoints(), vec![BerkPoint::gauss()]);
        assert_eq!(loc.value, rat(2));
        let loc = min_res_loc(&z2_plus_half()).unwrap();
        assert_eq!(loc.endpoints(), vec![BerkPoint::disk(rat(0), rat_frac(-1, 2), 2)]);
        assert_eq!(loc.value, rat(1));
        assert!(!loc.certificate.certified_rational_scope);
    }

    #[test]
    fn containment_examples() {
        let r = containment_check(&half(), 2).unwrap();
        assert_eq!(r.radius_bound, rat(4));
        assert_eq!(r.distances, vec![rat(1)]);
        assert!(r.pass);
        let r = containment_check(&z2_plus_half(), 1).unwrap();
        assert_eq!(r.radius_bound, rat(8));
        assert_eq!(r.distances, vec![rat_frac(1, 2)]);
    }

    #[test]
    fn green_diag() {
        for n in 1..=3 {
            assert_eq!(green_diag_approx(&half(), &BerkPoint::gauss(), n).unwrap(), rat(1));
            assert_eq!(green_diag_approx(&half(), &BerkPoint::disk(rat(0), rat(1), 2), n).unwrap(), rat(0));
        }
    }
}
