//! Weighted points of iterates and the crucial measures they carry.
//!
//! Weights are read off the reduction at a point. At a fixed point with
//! reduction of degree D and common factor C̃ of the reduced lift, the bad
//! directions are the zeros of C̃; a bad direction always contains a type I
//! fixed point, so the shearing directions are the zeros of C̃ that the
//! reduced map does not fix. At a moved point the directions carrying type I
//! fixed points are the zeros of Y·F̃ − X·G̃.

use thiserror::Error;

use crate::berkovich::{classify_reduction, reduce_general, BerkPoint, FixedClass, ReducedMap};
use crate::ordres_minresloc::{min_res_loc, OrdResError};
use crate::rational_map::roots::padic_roots;
use crate::rational_map::{MapError, RationalMap};
use crate::tree_potential::{span_tree, DiscreteMeasure, FiniteTree, TreeError};
use crate::valued_field::{ExtRat, Rat, Val};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrucialError {
    #[error("FixedPointsNotRational: fixed points of the iterate do not all lie in ℚ_p")]
    FixedPointsNotRational,
    #[error("NotFixed: {0} is not fixed")]
    NotFixed(String),
    #[error("TypeIPoint: weights are computed at disc points")]
    TypeIPoint,
    #[error("IncompleteEnumeration: weight deficit {deficit} after {} atoms", found.len())]
    IncompleteEnumeration {
        found: Vec<WeightedPoint>,
        deficit: i64,
        fixed_points_split: bool,
    },
    #[error("{0}")]
    Map(#[from] MapError),
    #[error("{0}")]
    OrdRes(#[from] OrdResError),
    #[error("{0}")]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightTag {
    RepellingFixed,
    IndifferentFixedWithShearing,
    MovedBranchPoint,
}

impl WeightTag {
    pub fn name(&self) -> &'static str {
        match self {
            WeightTag::RepellingFixed => "repelling-fixed",
            WeightTag::IndifferentFixedWithShearing => "indifferent-fixed-with-shearing",
            WeightTag::MovedBranchPoint => "moved-branch-point",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoint {
    pub point: BerkPoint,
    pub weight: u64,
    pub tag: WeightTag,
    /// shearing directions at a fixed point; 0 at moved points
    pub shearing: usize,
    pub reduction_degree: usize,
    pub class: FixedClass,
    /// directions carrying type I fixed points, at moved points
    pub fixed_valence: Option<usize>,
}

/// Weight data at a disc point, whether or not the weight is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightInfo {
    pub weight: u64,
    pub fixed: bool,
    pub shearing: usize,
    pub reduction_degree: usize,
    pub fixed_valence: Option<usize>,
    pub class: FixedClass,
}

fn shearing_of(red: &ReducedMap) -> usize {
    let c = &red.common;
    let fx = red.fixed_form();
    // a zero fixed form means the reduction is the identity: every direction is fixed
    let both = c.gcd(&fx);
    c.distinct_roots() - both.distinct_roots()
}

fn disk_data(z: &BerkPoint) -> Result<(Rat, Rat), CrucialError> {
    match z {
        BerkPoint::Disk { center, t } => Ok((center.clone(), t.clone())),
        BerkPoint::TypeI(_) => Err(CrucialError::TypeIPoint),
    }
}

pub fn weight_info(psi: &RationalMap, z: &BerkPoint) -> Result<WeightInfo, CrucialError> {
    let (a, t) = disk_data(z)?;
    let red = reduce_general(psi, &a, &t);
    let class = classify_reduction(&red);
    if red.is_constant() {
        let v = red.moved_form().distinct_roots();
        return Ok(WeightInfo {
            weight: v.saturating_sub(2) as u64,
            fixed: false,
            shearing: 0,
            reduction_degree: 0,
            fixed_valence: Some(v),
            class,
        });
    }
    let n = shearing_of(&red);
    Ok(WeightInfo {
        weight: (red.deg - 1 + n) as u64,
        fixed: true,
        shearing: n,
        reduction_degree: red.deg,
        fixed_valence: None,
        class,
    })
}

/// Shearing directions at a fixed disc point of ψ.
pub fn shearing_count(psi: &RationalMap, z: &BerkPoint) -> Result<usize, CrucialError> {
    let info = weight_info(psi, z)?;
    if !info.fixed {
        return Err(CrucialError::NotFixed(z.to_string()));
    }
    Ok(info.shearing)
}

/// w_φⁿ(P); 0 at type I points.
pub fn weight(phi: &RationalMap, n: usize, z: &BerkPoint) -> Result<u64, CrucialError> {
    if z.is_type_i() {
        return Ok(0);
    }
    Ok(weight_info(&phi.iterate(n), z)?.weight)
}

fn weighted(z: &BerkPoint, info: &WeightInfo) -> Option<WeightedPoint> {
    if info.weight == 0 {
        return None;
    }
    let tag = if !info.fixed {
        WeightTag::MovedBranchPoint
    } else if info.reduction_degree >= 2 {
        WeightTag::RepellingFixed
    } else {
        WeightTag::IndifferentFixedWithShearing
    };
    Some(WeightedPoint {
        point: z.clone(),
        weight: info.weight,
        tag,
        shearing: info.shearing,
        reduction_degree: info.reduction_degree,
        class: info.class,
        fixed_valence: info.fixed_valence,
    })
}

/// Type I fixed points of ψ, with the depth up to which each is known.
fn fixed_points(psi: &RationalMap, digits: u32) -> Result<Vec<(BerkPoint, ExtRat)>, CrucialError> {
    let fp = psi.fixed_point_poly();
    let roots = match padic_roots(&fp.poly, psi.p, digits) {
        Ok(r) => r,
        Err(MapError::NotSplitOverQp) => return Err(CrucialError::FixedPointsNotRational),
        Err(e) => return Err(e.into()),
    };
    let mut out: Vec<(BerkPoint, ExtRat)> = roots
        .into_iter()
        .map(|r| {
            let depth = match r.log_radius {
                Val::Inf => ExtRat::PosInf,
                Val::Fin(k) => ExtRat::Fin(Rat::from_integer(k.into())),
            };
            (BerkPoint::fin(r.approx), depth)
        })
        .collect();
    if fp.inf_fixed {
        out.push((BerkPoint::inf(), ExtRat::PosInf));
    }
    Ok(out)
}

/// The tree spanned by the type I fixed points of φⁿ.
pub fn gamma_fix(phi: &RationalMap, n: usize) -> Result<FiniteTree, CrucialError> {
    let psi = phi.iterate(n);
    let pts: Vec<BerkPoint> = fixed_points(&psi, 8)?.into_iter().map(|x| x.0).collect();
    Ok(span_tree(&pts, psi.p)?)
}

/// Fixed points of ψ on the ray of center a with log-radius strictly between
/// lo and hi where two terms of the conjugated lift tie for the minimum.
/// Between such points the reduction is a monomial, hence a point there is
/// either moved or carries no weight unless it is a tree vertex.
pub fn fixed_points_on_ray(psi: &RationalMap, a: &Rat, lo: &ExtRat, hi: &ExtRat) -> Vec<BerkPoint> {
    let p = psi.p;
    let ex = crate::berkovich::LocalExpansion::new(psi, a);
    let (ft, gt) = ex.conjugate_terms();
    let lines: Vec<(Rat, i64)> = ft
        .iter()
        .chain(gt.iter())
        .filter_map(|(c, e)| match crate::valued_field::vp(c, p) {
            Val::Inf => None,
            Val::Fin(v) => Some((Rat::from_integer(v.into()), *e)),
        })
        .collect();
    let at = |l: &(Rat, i64), t: &Rat| &l.0 + t * Rat::from_integer(l.1.into());
    let mut ts: Vec<Rat> = vec![];
    for (i, x) in lines.iter().enumerate() {
        for y in &lines[i + 1..] {
            if x.1 == y.1 {
                continue;
            }
            let t = (&y.0 - &x.0) / Rat::from_integer((x.1 - y.1).into());
            let te = ExtRat::Fin(t.clone());
            if te <= *lo || te >= *hi || ts.contains(&t) {
                continue;
            }
            let m = lines.iter().map(|l| at(l, &t)).min().unwrap();
            if at(x, &t) == m {
                ts.push(t);
            }
        }
    }
    ts.sort();
    ts.into_iter()
        .filter(|t| !reduce_general(psi, a, t).is_constant())
        .map(|t| BerkPoint::disk(a.clone(), t, p))
        .collect()
}

/// Fixed points of ψ in the open edge of Γ_Fix between vertices i and j.
pub fn fixed_points_on_edge(psi: &RationalMap, tree: &FiniteTree, child: usize, parent: usize) -> Vec<BerkPoint> {
    fixed_points_on_edge_to(psi, tree, child, parent, &ExtRat::PosInf)
}

fn fixed_points_on_edge_to(
    psi: &RationalMap,
    tree: &FiniteTree,
    child: usize,
    parent: usize,
    depth: &ExtRat,
) -> Vec<BerkPoint> {
    let c = &tree.vertices[child];
    let a = match c.center() {
        Some(a) => a.clone(),
        None => return vec![],
    };
    let hi = c.height().min(depth.clone());
    fixed_points_on_ray(psi, &a, &tree.vertices[parent].height(), &hi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrucialCertificate {
    pub weight_sum: u64,
    pub expected: u64,
    pub candidates: usize,
    /// whether the type I fixed points of φⁿ were all found in ℚ_p
    pub fixed_points_split: bool,
    /// digits of the p-adic fixed point approximations used
    pub digits: u32,
    pub type_i_fixed: Vec<BerkPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrucialMeasure {
    pub n: usize,
    pub p: u64,
    /// dⁿ
    pub degree: u64,
    pub atoms: Vec<WeightedPoint>,
    pub complete: bool,
    pub certificate: CrucialCertificate,
}

impl CrucialMeasure {
    /// ν_φⁿ with masses w/(dⁿ − 1).
    pub fn measure(&self) -> DiscreteMeasure {
        let tot = Rat::from_integer((self.degree - 1).into());
        DiscreteMeasure::new(
            self.atoms
                .iter()
                .map(|w| (w.point.clone(), Rat::from_integer(w.weight.into()) / &tot))
                .collect(),
        )
    }

    pub fn support(&self) -> Vec<BerkPoint> {
        self.atoms.iter().map(|w| w.point.clone()).collect()
    }
}

pub fn crucial_tree(m: &CrucialMeasure) -> Result<FiniteTree, CrucialError> {
    Ok(span_tree(&m.support(), m.p)?)
}

struct Candidates {
    pts: Vec<BerkPoint>,
}

impl Candidates {
    fn add(&mut self, z: BerkPoint) {
        if z.is_hyperbolic() && !self.pts.contains(&z) {
            self.pts.push(z);
        }
    }
}

fn assemble(psi: &RationalMap, cands: &[BerkPoint]) -> Result<(Vec<WeightedPoint>, u64), CrucialError> {
    let mut atoms = vec![];
    let mut sum = 0;
    for z in cands {
        if let Some(w) = weighted(z, &weight_info(psi, z)?) {
            sum += w.weight;
            atoms.push(w);
        }
    }
    Ok((atoms, sum))
}

const DIGIT_ROUNDS: [u32; 4] = [8, 16, 32, 64];

/// ν_φⁿ from candidates on Γ_Fix and MinResLoc(φⁿ), certified by Σ w = dⁿ − 1.
/// When the fixed points of φⁿ do not split over ℚ_p only the MinResLoc
/// candidates are tried; the weight sum still certifies the result.
pub fn crucial_measure(phi: &RationalMap, n: usize) -> Result<CrucialMeasure, CrucialError> {
    let psi = phi.iterate(n);
    let p = psi.p;
    let degree = (phi.d as u64).pow(n as u32);
    let expected = degree - 1;
    let loc = min_res_loc(&psi)?;
    let mut last_found = vec![];
    let mut last_sum = 0;
    let mut last_split = false;
    for digits in DIGIT_ROUNDS {
        let mut cands = Candidates { pts: vec![] };
        let fixed = match fixed_points(&psi, digits) {
            Ok(f) => Some(f),
            Err(CrucialError::FixedPointsNotRational) => None,
            Err(e) => return Err(e),
        };
        let split = fixed.is_some();
        let mut type_i = vec![];
        if let Some(fixed) = &fixed {
            type_i = fixed.iter().map(|x| x.0.clone()).collect();
            let tree = span_tree(&type_i, p)?;
            for v in &tree.vertices {
                cands.add(v.clone());
            }
            for e in &tree.edges {
                let depth = fixed
                    .iter()
                    .find(|x| x.0 == tree.vertices[e.child])
                    .map(|x| x.1.clone())
                    .unwrap_or(ExtRat::PosInf);
                for z in fixed_points_on_edge_to(&psi, &tree, e.child, e.parent, &depth) {
                    cands.add(z);
                }
            }
        }
        for z in loc.endpoints() {
            cands.add(z);
        }
        let (atoms, sum) = assemble(&psi, &cands.pts)?;
        let certificate = CrucialCertificate {
            weight_sum: sum,
            expected,
            candidates: cands.pts.len(),
            fixed_points_split: split,
            digits,
            type_i_fixed: type_i,
        };
        if sum == expected {
            return Ok(CrucialMeasure {
                n,
                p,
                degree,
                atoms,
                complete: true,
                certificate,
            });
        }
        last_found = atoms;
        last_sum = sum;
        last_split = split;
        // more digits only help when approximate fixed points were involved
        let approximate = fixed.as_ref().is_some_and(|f| f.iter().any(|x| x.1 != ExtRat::PosInf));
        if !approximate {
            break;
        }
    }
    Err(CrucialError::IncompleteEnumeration {
        found: last_found,
        deficit: expected as i64 - last_sum as i64,
        fixed_points_split: last_split,
    })
}

/// Weight sum of a list of weighted points.
pub fn weight_sum(atoms: &[WeightedPoint]) -> u64 {
    atoms.iter().map(|w| w.weight).sum()
}
