//! Finite subtrees of the Berkovich line, CPA functions on them, discrete
//! measures, potentials, Green functions and barycenters.
//!
//! A spanned tree is stored rooted toward ∞: each vertex other than the top
//! has a parent, its deepest strict ancestor in the vertex set.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::berkovich::{direction_of, hsia_log_base, is_ancestor, lca, median, rho_ext, BerkPoint, Direction};
use crate::valued_field::{ExtRat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("NotInTree: {0} is not a point of the tree")]
    NotInTree(String),
    #[error("InfiniteValue: kernel is infinite at a type I atom")]
    InfiniteValue,
    #[error("EmptyInput: at least one point is needed")]
    EmptyInput,
    #[error("NotHyperbolic: {0} is a type I vertex")]
    NotHyperbolic(String),
    #[error("NonPositiveMass: barycenters need a positive measure")]
    NonPositiveMass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub child: usize,
    pub parent: usize,
    /// ρ-length, +∞ when an endpoint is of type I
    pub length: ExtRat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTree {
    pub p: u64,
    pub vertices: Vec<BerkPoint>,
    pub edges: Vec<Edge>,
}

/// The convex hull of the given points.
pub fn span_tree(points: &[BerkPoint], p: u64) -> Result<FiniteTree, TreeError> {
    if points.is_empty() {
        return Err(TreeError::EmptyInput);
    }
    let mut verts: Vec<BerkPoint> = vec![];
    let mut push = |x: BerkPoint| {
        if !verts.contains(&x) {
            verts.push(x);
        }
    };
    for (i, x) in points.iter().enumerate() {
        push(x.clone());
        for y in &points[i + 1..] {
            push(lca(x, y, p));
        }
    }
    // deepest first: parents come later in the order
    verts.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| a.to_string().cmp(&b.to_string())));
    let mut edges = vec![];
    for (i, v) in verts.iter().enumerate() {
        let parent = verts
            .iter()
            .enumerate()
            .filter(|(j, a)| *j != i && is_ancestor(a, v, p))
            .max_by(|x, y| x.1.height().cmp(&y.1.height()))
            .map(|(j, _)| j);
        if let Some(j) = parent {
            edges.push(Edge {
                child: i,
                parent: j,
                length: rho_ext(v, &verts[j], p),
            });
        }
    }
    Ok(FiniteTree { p, vertices: verts, edges })
}

impl FiniteTree {
    pub fn index_of(&self, x: &BerkPoint) -> Option<usize> {
        self.vertices.iter().position(|v| v == x)
    }

    /// Indices of the neighbours of vertex i.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.child == i {
                    Some(e.parent)
                } else if e.parent == i {
                    Some(e.child)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn edge_length(&self, i: usize, j: usize) -> Option<&ExtRat> {
        self.edges
            .iter()
            .find(|e| (e.child == i && e.parent == j) || (e.child == j && e.parent == i))
            .map(|e| &e.length)
    }

    /// The edge whose open interior contains x.
    pub fn edge_containing(&self, x: &BerkPoint) -> Option<&Edge> {
        let p = self.p;
        self.edges.iter().find(|e| {
            let (c, a) = (&self.vertices[e.child], &self.vertices[e.parent]);
            x != c && x != a && is_ancestor(x, c, p) && is_ancestor(a, x, p)
        })
    }

    pub fn contains(&self, x: &BerkPoint) -> bool {
        self.index_of(x).is_some() || self.edge_containing(x).is_some()
    }

    pub fn valence(&self, x: &BerkPoint) -> Result<usize, TreeError> {
        if let Some(i) = self.index_of(x) {
            return Ok(self.neighbours(i).len());
        }
        if self.edge_containing(x).is_some() {
            return Ok(2);
        }
        Err(TreeError::NotInTree(x.to_string()))
    }

    pub fn branch_points(&self) -> Vec<BerkPoint> {
        (0..self.vertices.len())
            .filter(|&i| self.neighbours(i).len() >= 3)
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    /// The tree spanned by the vertices together with extra points.
    pub fn refine(&self, extra: &[BerkPoint]) -> Result<FiniteTree, TreeError> {
        let mut pts = self.vertices.clone();
        pts.extend(extra.iter().cloned());
        span_tree(&pts, self.p)
    }

    /// Vertex indices on the side of j seen from i, for adjacent i, j.
    fn side(&self, i: usize, j: usize) -> Vec<usize> {
        let mut seen = vec![i, j];
        let mut stack = vec![j];
        let mut out = vec![j];
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen.contains(&w) {
                    seen.push(w);
                    out.push(w);
                    stack.push(w);
                }
            }
        }
        out
    }
}

pub fn valence(tree: &FiniteTree, x: &BerkPoint) -> Result<usize, TreeError> {
    tree.valence(x)
}

pub fn branch_points(tree: &FiniteTree) -> Vec<BerkPoint> {
    tree.branch_points()
}

/// A function on a hyperbolic finite tree, affine on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPAFunc {
    pub tree: FiniteTree,
    pub values: Vec<Rat>,
}

impl CPAFunc {
    pub fn new(tree: FiniteTree, values: Vec<Rat>) -> Result<CPAFunc, TreeError> {
        assert_eq!(tree.vertices.len(), values.len(), "one value per vertex");
        if let Some(v) = tree.vertices.iter().find(|v| !v.is_hyperbolic()) {
            return Err(TreeError::NotHyperbolic(v.to_string()));
        }
        Ok(CPAFunc { tree, values })
    }

    /// Samples f at the vertices. The result agrees with f on the tree when
    /// f is affine between consecutive vertices.
    pub fn from_fn<F>(tree: FiniteTree, f: F) -> Result<CPAFunc, TreeError>
    where
        F: Fn(&BerkPoint) -> Result<Rat, TreeError>,
    {
        let values = tree.vertices.iter().map(&f).collect::<Result<Vec<_>, _>>()?;
        CPAFunc::new(tree, values)
    }

    /// One-sided derivative at vertex i toward neighbour j.
    pub fn slope(&self, i: usize, j: usize) -> Rat {
        let len = self.tree.edge_length(i, j).and_then(|l| l.fin()).expect("adjacent hyperbolic vertices");
        (&self.values[j] - &self.values[i]) / len
    }

    pub fn eval(&self, x: &BerkPoint) -> Result<Rat, TreeError> {
        if let Some(i) = self.tree.index_of(x) {
            return Ok(self.values[i].clone());
        }
        let e = self.tree.edge_containing(x).ok_or_else(|| TreeError::NotInTree(x.to_string()))?;
        let p = self.tree.p;
        let s = rho_ext(&self.tree.vertices[e.child], x, p).fin().unwrap().clone();
        Ok(&self.values[e.child] + self.slope(e.child, e.parent) * s)
    }
}

/// Δf = −Σ_v ∂_v f at every vertex.
pub fn laplacian(f: &CPAFunc) -> DiscreteMeasure {
    let atoms = (0..f.tree.vertices.len())
        .map(|i| {
            let m: Rat = f.tree.neighbours(i).into_iter().map(|j| f.slope(i, j)).sum();
            (f.tree.vertices[i].clone(), -m)
        })
        .collect();
    DiscreteMeasure::new(atoms)
}

/// A finite signed measure with distinct atoms and nonzero masses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteMeasure {
    pub atoms: Vec<(BerkPoint, Rat)>,
}

impl DiscreteMeasure {
    /// Merges repeated atoms and drops zero masses.
    pub fn new(atoms: Vec<(BerkPoint, Rat)>) -> DiscreteMeasure {
        let mut out: Vec<(BerkPoint, Rat)> = vec![];
        for (x, m) in atoms {
            match out.iter_mut().find(|(y, _)| *y == x) {
                Some(e) => e.1 += m,
                None => out.push((x, m)),
            }
        }
        out.retain(|(_, m)| !m.is_zero());
        DiscreteMeasure { atoms: out }
    }

    pub fn dirac(x: BerkPoint) -> DiscreteMeasure {
        DiscreteMeasure { atoms: vec![(x, Rat::one())] }
    }

    pub fn zero() -> DiscreteMeasure {
        DiscreteMeasure { atoms: vec![] }
    }

    pub fn total(&self) -> Rat {
        self.atoms.iter().map(|(_, m)| m.clone()).sum()
    }

    pub fn support(&self) -> Vec<BerkPoint> {
        self.atoms.iter().map(|(x, _)| x.clone()).collect()
    }

    pub fn mass_at(&self, x: &BerkPoint) -> Rat {
        self.atoms.iter().find(|(y, _)| y == x).map(|(_, m)| m.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn sub(&self, other: &DiscreteMeasure) -> DiscreteMeasure {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().map(|(x, m)| (x.clone(), -m)));
        DiscreteMeasure::new(atoms)
    }

    pub fn scale(&self, c: &Rat) -> DiscreteMeasure {
        DiscreteMeasure::new(self.atoms.iter().map(|(x, m)| (x.clone(), m * c)).collect())
    }

    /// Equality as measures, ignoring atom order.
    pub fn same_as(&self, other: &DiscreteMeasure) -> bool {
        self.sub(other).atoms.is_empty()
    }

    /// Mass carried by each tangent direction at z; atoms at z are not counted.
    pub fn direction_masses(&self, z: &BerkPoint, p: u64) -> BTreeMap<Direction, Rat> {
        let mut out = BTreeMap::new();
        for (x, m) in &self.atoms {
            if x != z {
                *out.entry(direction_of(z, x, p)).or_insert_with(Rat::zero) += m;
            }
        }
        out
    }
}

fn finite_or_inf(v: ExtRat) -> Result<Rat, TreeError> {
    match v {
        ExtRat::Fin(x) => Ok(x),
        _ => Err(TreeError::InfiniteValue),
    }
}

/// u_ν(z, ζ0) = −Σ mᵢ·log δ(Pᵢ, z)_ζ0
pub fn potential(nu: &DiscreteMeasure, z: &BerkPoint, base: &BerkPoint, p: u64) -> Result<Rat, TreeError> {
    let mut s = Rat::zero();
    for (x, m) in &nu.atoms {
        s -= m * finite_or_inf(hsia_log_base(x, z, base, p))?;
    }
    Ok(s)
}

/// The normalization constant of the Green function of a measure with
/// hyperbolic atoms.
pub fn green_constant(nu: &DiscreteMeasure, p: u64) -> Result<Rat, TreeError> {
    let tot = nu.total();
    let mut c = Rat::zero();
    for (a, ma) in &nu.atoms {
        for (b, mb) in &nu.atoms {
            for (base, mc) in &nu.atoms {
                if !base.is_hyperbolic() {
                    return Err(TreeError::NotHyperbolic(base.to_string()));
                }
                c += ma * mb * mc * finite_or_inf(hsia_log_base(a, b, base, p))?;
            }
        }
    }
    Ok(c / (&tot * &tot))
}

/// g_ν(x, y) = −Σ mᵢ·log δ(x, y)_Pᵢ + C, +∞ on the diagonal at type I points.
pub fn green(nu: &DiscreteMeasure, x: &BerkPoint, y: &BerkPoint, p: u64) -> Result<ExtRat, TreeError> {
    let c = green_constant(nu, p)?;
    if x == y && x.is_type_i() {
        return Ok(ExtRat::PosInf);
    }
    let mut s = c;
    for (base, m) in &nu.atoms {
        s -= m * finite_or_inf(hsia_log_base(x, y, base, p))?;
    }
    Ok(ExtRat::Fin(s))
}

/// Σ mᵢ·f(Pᵢ)
pub fn integrate<F, E>(f: F, nu: &DiscreteMeasure) -> Result<Rat, E>
where
    F: Fn(&BerkPoint) -> Result<Rat, E>,
{
    let mut s = Rat::zero();
    for (x, m) in &nu.atoms {
        s += m * f(x)?;
    }
    Ok(s)
}

/// The barycenter set: a point or a closed segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Barycenter {
    Point(BerkPoint),
    Segment(BerkPoint, BerkPoint),
}

impl Barycenter {
    pub fn endpoints(&self) -> Vec<BerkPoint> {
        match self {
            Barycenter::Point(x) => vec![x.clone()],
            Barycenter::Segment(a, b) => vec![a.clone(), b.clone()],
        }
    }

    pub fn contains(&self, x: &BerkPoint, p: u64) -> bool {
        match self {
            Barycenter::Point(a) => a == x,
            Barycenter::Segment(a, b) => &median(a, b, x, p) == x,
        }
    }
}

/// No direction at z carries more than half of the mass.
pub fn is_barycentric(nu: &DiscreteMeasure, z: &BerkPoint, p: u64) -> bool {
    let half = nu.total() / Rat::from_integer(2.into());
    nu.direction_masses(z, p).values().all(|m| *m <= half)
}

pub fn barycenter(nu: &DiscreteMeasure, p: u64) -> Result<Barycenter, TreeError> {
    if nu.atoms.is_empty() || nu.atoms.iter().any(|(_, m)| *m <= Rat::zero()) {
        return Err(TreeError::NonPositiveMass);
    }
    let tree = span_tree(&nu.support(), p)?;
    let half = nu.total() / Rat::from_integer(2.into());
    let side_mass = |i: usize, j: usize| -> Rat { tree.side(i, j).into_iter().map(|k| nu.mass_at(&tree.vertices[k])).sum() };
    // walk toward the heavy side; interior edge points are never better
    let mut v = 0usize;
    loop {
        let heavy = tree.neighbours(v).into_iter().find(|&j| side_mass(v, j) > half);
        match heavy {
            Some(j) => v = j,
            None => break,
        }
    }
    // extend through directions carrying exactly half
    let mut ends = vec![];
    for j in tree.neighbours(v) {
        if side_mass(v, j) != half {
            continue;
        }
        let (mut prev, mut cur) = (v, j);
        loop {
            let next = tree.neighbours(cur).into_iter().find(|&k| k != prev && side_mass(cur, k) == half);
            match next {
                Some(k) => {
                    prev = cur;
                    cur = k;
                }
                None => break,
            }
        }
        ends.push(cur);
    }
    Ok(match ends.as_slice() {
        [] => Barycenter::Point(tree.vertices[v].clone()),
        [a] => Barycenter::Segment(tree.vertices[v].clone(), tree.vertices[*a].clone()),
        [a, b] => Barycenter::Segment(tree.vertices[*a].clone(), tree.vertices[*b].clone()),
        _ => unreachable!("at most two directions carry half of a positive measure"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berkovich::{directions, hsia_log, rho, step_into};
    use crate::valued_field::{rat, rat_frac};
    use proptest::prelude::*;

    fn disk(c: i64, t: Rat, p: u64) -> BerkPoint {
        BerkPoint::disk(rat(c), t, p)
    }

    #[test]
    fn span_examples() {
        let tr = span_tree(&[BerkPoint::fin(rat(0)), BerkPoint::fin(rat(4)), BerkPoint::inf()], 3).unwrap();
        assert_eq!(tr.branch_points(), vec![BerkPoint::gauss()]);
        assert_eq!(tr.valence(&BerkPoint::gauss()).unwrap(), 3);
        assert_eq!(tr.vertices.len(), 4);
        let tr = span_tree(&[BerkPoint::fin(rat(0)), BerkPoint::fin(rat(2)), BerkPoint::inf()], 2).unwrap();
        assert_eq!(tr.branch_points(), vec![disk(0, rat(1), 2)]);
        let x = disk(3, rat(2), 5);
        let tr = span_tree(&[x.clone()], 5).unwrap();
        assert_eq!(tr.vertices, vec![x.clone()]);
        assert_eq!(tr.valence(&x).unwrap(), 0);
    }

    #[test]
    fn valence_on_edges() {
        let tr = span_tree(&[BerkPoint::gauss(), disk(0, rat(3), 2), disk(4, rat(3), 2)], 2).unwrap();
        assert_eq!(tr.valence(&disk(0, rat(2), 2)).unwrap(), 3);
        assert_eq!(tr.valence(&disk(0, rat(1), 2)).unwrap(), 2);
        assert_eq!(tr.valence(&disk(0, rat(3), 2)).unwrap(), 1);
        assert!(matches!(tr.valence(&disk(1, rat(1), 2)), Err(TreeError::NotInTree(_))));
    }

    #[test]
    fn laplacian_examples() {
        let p = 3;
        let tr = span_tree(&[BerkPoint::gauss(), disk(0, rat(1), p)], p).unwrap();
        let f = CPAFunc::from_fn(tr.clone(), |x| Ok(rho(x, &BerkPoint::gauss(), p).unwrap())).unwrap();
        let want = DiscreteMeasure::new(vec![(BerkPoint::gauss(), rat(-1)), (disk(0, rat(1), p), rat(1))]);
        assert!(laplacian(&f).same_as(&want));
        let c = CPAFunc::new(tr.clone(), vec![rat(5), rat(5)]).unwrap();
        assert!(laplacian(&c).atoms.is_empty());
        // −log δ(·, 0) on a truncated piece of [0, ∞]: slope +1 toward 0 below ζG, flat above
        let tr = span_tree(&[disk(0, rat(-2), p), disk(0, rat(3), p)], p).unwrap();
        let tr = tr.refine(&[BerkPoint::gauss()]).unwrap();
        let f = CPAFunc::from_fn(tr, |x| Ok(-hsia_log(x, &BerkPoint::fin(rat(0)), p).fin().unwrap().clone())).unwrap();
        let want = DiscreteMeasure::new(vec![
            (disk(0, rat(3), p), rat(1)),
            (BerkPoint::gauss(), rat(-1)),
        ]);
        assert!(laplacian(&f).same_as(&want));
    }

    #[test]
    fn potential_examples() {
        let g = BerkPoint::gauss();
        let nu = DiscreteMeasure::dirac(g.clone());
        for x in [g.clone(), disk(1, rat(3), 2), disk(0, rat(-2), 2)] {
            assert_eq!(potential(&nu, &x, &g, 2).unwrap(), rat(0));
        }
        let nu = DiscreteMeasure::dirac(BerkPoint::fin(rat(0)));
        assert_eq!(potential(&nu, &disk(0, rat_frac(5, 2), 3), &g, 3).unwrap(), rat_frac(5, 2));
        assert_eq!(potential(&nu, &BerkPoint::fin(rat(0)), &g, 3), Err(TreeError::InfiniteValue));
        let nu = DiscreteMeasure::new(vec![
            (BerkPoint::fin(rat(0)), rat_frac(1, 2)),
            (BerkPoint::fin(rat(1)), rat_frac(1, 2)),
        ]);
        assert_eq!(potential(&nu, &g, &g, 2).unwrap(), rat(0));
    }

    #[test]
    fn green_examples() {
        let p = 2;
        let g = BerkPoint::gauss();
        let nu = DiscreteMeasure::dirac(g.clone());
        assert_eq!(green_constant(&nu, p).unwrap(), rat(0));
        let (x, y) = (disk(1, rat(2), p), disk(3, rat(4), p));
        let j = crate::berkovich::join(&x, &y, p);
        assert_eq!(green(&nu, &x, &y, p).unwrap(), ExtRat::Fin(rho(&j, &g, p).unwrap()));
        let nu = DiscreteMeasure::dirac(disk(0, rat(1), p));
        assert_eq!(green(&nu, &g, &g, p).unwrap(), ExtRat::Fin(rat(1)));
        assert_eq!(green(&nu, &BerkPoint::inf(), &BerkPoint::inf(), p).unwrap(), ExtRat::PosInf);
    }

    #[test]
    fn barycenter_examples() {
        let p = 3;
        let x = disk(2, rat(2), p);
        assert_eq!(barycenter(&DiscreteMeasure::dirac(x.clone()), p).unwrap(), Barycenter::Point(x));
        let (a, b) = (disk(0, rat(1), p), disk(1, rat(1), p));
        let nu = DiscreteMeasure::new(vec![(a.clone(), rat_frac(1, 2)), (b.clone(), rat_frac(1, 2))]);
        let bc = barycenter(&nu, p).unwrap();
        assert_eq!(bc.endpoints().len(), 2);
        assert!(bc.contains(&a, p) && bc.contains(&b, p) && bc.contains(&BerkPoint::gauss(), p));
        // enumerate nearby points: the predicate holds exactly on the segment
        for c in 0..9 {
            for t in [rat(-1), rat_frac(1, 2), rat(1), rat(2)] {
                let z = disk(c, t, p);
                assert_eq!(is_barycentric(&nu, &z, p), bc.contains(&z, p), "{z}");
            }
        }
        // weights 1, 1, 2 at three leaves: heavy leaf wins ties toward its side
        let nu = DiscreteMeasure::new(vec![
            (disk(0, rat(1), p), rat(1)),
            (disk(1, rat(1), p), rat(1)),
            (disk(2, rat(1), p), rat(2)),
        ]);
        let bc = barycenter(&nu, p).unwrap();
        let mut ends = bc.endpoints();
        ends.sort_by_key(|x| x.to_string());
        assert_eq!(ends, vec![BerkPoint::gauss(), disk(2, rat(1), p)]);
    }

    #[test]
    fn integrate_sums() {
        let nu = DiscreteMeasure::new(vec![(BerkPoint::gauss(), rat_frac(1, 2)), (disk(0, rat(2), 2), rat_frac(1, 2))]);
        let s: Rat = integrate(|x| Ok::<_, TreeError>(rho(x, &BerkPoint::gauss(), 2).unwrap()), &nu).unwrap();
        assert_eq!(s, rat(1));
    }

    fn arb_point(p: u64) -> impl Strategy<Value = BerkPoint> {
        (0i64..64, -3i64..6, 1i64..3).prop_map(move |(c, t, q)| BerkPoint::disk(rat(c), rat_frac(t, q), p))
    }

    proptest! {
        #[test]
        fn laplacian_has_zero_mass(pts in proptest::collection::vec(arb_point(2), 1..6), vals in proptest::collection::vec(-20i64..20, 12)) {
            let tr = span_tree(&pts, 2).unwrap();
            let n = tr.vertices.len();
            let f = CPAFunc::new(tr, (0..n).map(|i| rat(vals[i % vals.len()])).collect()).unwrap();
            prop_assert_eq!(laplacian(&f).total(), rat(0));
        }

        #[test]
        fn potential_laplacian_identity(pts in proptest::collection::vec(arb_point(3), 1..5), base in arb_point(3)) {
            let p = 3;
            let nu = DiscreteMeasure::new(pts.iter().enumerate().map(|(i, x)| (x.clone(), rat(i as i64 + 1))).collect());
            let mut span = nu.support();
            span.push(base.clone());
            let tr = span_tree(&span, p).unwrap();
            let u = CPAFunc::from_fn(tr, |z| potential(&nu, z, &base, p)).unwrap();
            let want = nu.sub(&DiscreteMeasure::dirac(base.clone()).scale(&nu.total()));
            prop_assert!(laplacian(&u).same_as(&want));
        }

        #[test]
        fn green_is_normalized_and_symmetric(pts in proptest::collection::vec(arb_point(2), 1..5), x in arb_point(2), y in arb_point(2)) {
            let p = 2;
            let nu = DiscreteMeasure::new(pts.iter().map(|x| (x.clone(), rat(1))).collect());
            let mut s = rat(0);
            for (a, ma) in &nu.atoms {
                for (b, mb) in &nu.atoms {
                    s += ma * mb * green(&nu, a, b, p).unwrap().fin().unwrap().clone();
                }
            }
            prop_assert_eq!(s, rat(0));
            prop_assert_eq!(green(&nu, &x, &y, p).unwrap(), green(&nu, &y, &x, p).unwrap());
        }

        #[test]
        fn barycenter_predicate_sharp(pts in proptest::collection::vec(arb_point(2), 1..6), ws in proptest::collection::vec(1i64..4, 6)) {
            let p = 2;
            let nu = DiscreteMeasure::new(pts.iter().enumerate().map(|(i, x)| (x.clone(), rat(ws[i]))).collect());
            let bc = barycenter(&nu, p).unwrap();
            let eps = rat_frac(1, 7);
            for e in bc.endpoints() {
                prop_assert!(is_barycentric(&nu, &e, p));
                for v in directions(&e, p) {
                    let z = step_into(&e, &v, &eps, p);
                    prop_assert_eq!(is_barycentric(&nu, &z, p), bc.contains(&z, p));
                }
            }
        }
    }
}
