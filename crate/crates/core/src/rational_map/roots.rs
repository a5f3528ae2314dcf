//! Root isolation: p-adic roots of integer polynomials by residue descent
//! and Hensel lifting, and exact rational roots through an auxiliary prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{
    good_aux_prime, ip_deriv, ip_eval, ip_eval_mod, ip_primitive, ip_reverse, ip_squarefree,
    ip_taylor_shift, ip_trim, Poly,
};
use super::MapError;
use crate::valued_field::{mod_inverse, pint_pow, vp_int, FpPoly, Rat, Val};

/// A root in ℚ_p: either exact (`log_radius` = +∞) or known on the disc
/// D(approx, p^{−log_radius}), which contains no other root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicRoot {
    pub approx: Rat,
    pub log_radius: Val,
}

impl PadicRoot {
    pub fn is_exact(&self) -> bool {
        self.log_radius == Val::Inf
    }
}

const MAX_DEPTH: u32 = 4096;

/// A root isolated in the disc a + p^k(r + pℤ_p), where h(a + p^k y) is a
/// constant times g(y) and r is a simple root of g mod p.
#[derive(Debug, Clone)]
struct Isolated {
    g: Vec<BigInt>,
    a: BigInt,
    k: u32,
    r: u64,
}

impl Isolated {
    /// The root modulo p^m, for m ≥ k + 1.
    fn lift(&self, p: u64, m: u32) -> BigInt {
        let m = m.max(self.k + 1);
        let y = hensel(&self.g, self.r, p, m - self.k);
        &self.a + pint_pow(p, self.k) * y
    }
}

fn reduce_poly(g: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    FpPoly::new(
        g.iter()
            .map(|x| x.mod_floor(&pb).to_u64().unwrap())
            .collect(),
        p,
    )
}

/// Lift a simple root r of g mod p to a root mod p^m.
fn hensel(g: &[BigInt], r: u64, p: u64, m: u32) -> BigInt {
    let dg = ip_deriv(g);
    let mut y = BigInt::from(r);
    let mut prec = 1u32;
    while prec < m {
        prec = (2 * prec).min(m);
        let modulus = pint_pow(p, prec);
        let val = ip_eval_mod(g, &y, &modulus);
        let der = ip_eval_mod(&dg, &y, &modulus);
        let inv = mod_inverse(&der, &modulus).expect("simple root has unit derivative");
        y = (&y - val * inv).mod_floor(&modulus);
    }
    y.mod_floor(&pint_pow(p, m))
}

/// All roots in ℤ_p of a squarefree integer polynomial, restricted to the
/// residue classes in `only` (all classes when `None`).
fn isolate_zp(h: &[BigInt], p: u64, only: Option<u64>) -> Result<Vec<Isolated>, MapError> {
    let mut out = vec![];
    let mut stack = vec![(ip_primitive(h), BigInt::zero(), 0u32, only)];
    while let Some((g, a, k, restrict)) = stack.pop() {
        if k > MAX_DEPTH {
            return Err(MapError::PrecisionCap);
        }
        let gb = reduce_poly(&g, p);
        if gb.degree().unwrap_or(0) == 0 {
            continue;
        }
        let dgb = gb.derivative();
        let range: Vec<u64> = match restrict {
            Some(r) => vec![r],
            None => (0..p).collect(),
        };
        for r in range {
            if gb.eval(r) != 0 {
                continue;
            }
            if dgb.eval(r) != 0 {
                out.push(Isolated {
                    g: g.clone(),
                    a: a.clone(),
                    k,
                    r,
                });
            } else {
                let g2 = ip_primitive(&ip_taylor_shift(&g, &BigInt::from(r), &BigInt::from(p)));
                let a2 = &a + pint_pow(p, k) * BigInt::from(r);
                stack.push((g2, a2, k + 1, None));
            }
        }
    }
    Ok(out)
}

/// Find a/b ≡ u mod m with |a| ≤ nbound and 0 < b ≤ dbound.
pub fn rational_reconstruct(u: &BigInt, m: &BigInt, nbound: &BigInt, dbound: &BigInt) -> Option<Rat> {
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > nbound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > dbound {
        return None;
    }
    let x = Rat::new(r1, t1);
    if (x.numer() - u * x.denom()).mod_floor(m).is_zero() {
        Some(x)
    } else {
        None
    }
}

fn is_root(h: &[BigInt], x: &Rat) -> bool {
    // Σ c_k a^k b^{n−k}, the homogenized value at a/b
    let (a, b) = (x.numer(), x.denom());
    let n = h.len() - 1;
    let mut val = BigInt::zero();
    for (k, c) in h.iter().enumerate().rev() {
        val = val * a + c * b.pow((n - k) as u32);
    }
    val.is_zero()
}

/// Digits needed to reconstruct any rational root of h from its p-adic expansion.
fn reconstruct_digits(h: &[BigInt], p: u64) -> (u32, BigInt, BigInt) {
    let h = ip_trim(h.to_vec());
    let nb = h[0].abs();
    let db = h.last().unwrap().abs();
    let target = BigInt::from(2) * &nb * &db;
    let pb = BigInt::from(p);
    let mut e = 1u32;
    let mut pw = pb.clone();
    while pw <= target {
        pw *= &pb;
        e += 1;
    }
    (e, nb, db)
}

struct Found {
    value: BigInt,
    prec: u32,
    exact: Option<Rat>,
}

fn finish(iso: &Isolated, h: &[BigInt], p: u64, want: u32) -> Found {
    let (rr, nb, db) = reconstruct_digits(h, p);
    let m = rr.max(want).max(iso.k + 1);
    let x = iso.lift(p, m);
    let modulus = pint_pow(p, m);
    let exact = rational_reconstruct(&x, &modulus, &nb, &db).filter(|q| is_root(h, q));
    Found {
        value: x,
        prec: m,
        exact,
    }
}

/// Roots in ℚ_p of a polynomial, each exact or certified to `digits` digits
/// (more when needed to separate it from the other roots).
pub fn padic_roots(f: &Poly, p: u64, digits: u32) -> Result<Vec<PadicRoot>, MapError> {
    let mut digits = digits.max(1);
    loop {
        let roots = padic_roots_at(f, p, digits)?;
        if separated(&roots, p) {
            return Ok(roots);
        }
        if digits > MAX_DEPTH {
            return Err(MapError::PrecisionCap);
        }
        digits *= 2;
    }
}

fn separated(roots: &[PadicRoot], p: u64) -> bool {
    for (i, x) in roots.iter().enumerate() {
        for y in &roots[i + 1..] {
            let d = crate::valued_field::vp(&(&x.approx - &y.approx), p);
            if d >= x.log_radius.min(y.log_radius) {
                return false;
            }
        }
    }
    true
}

fn padic_roots_at(f: &Poly, p: u64, digits: u32) -> Result<Vec<PadicRoot>, MapError> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let mut h = ip_squarefree(&f.primitive_integer());
    let total = h.len() - 1;
    let mut out = vec![];
    if h[0].is_zero() {
        out.push(PadicRoot {
            approx: Rat::zero(),
            log_radius: Val::Inf,
        });
        h.remove(0);
    }
    for iso in isolate_zp(&h, p, None)? {
        let sep = iso.k + 1;
        let fd = finish(&iso, &h, p, digits);
        out.push(match fd.exact {
            Some(q) => PadicRoot {
                approx: q,
                log_radius: Val::Inf,
            },
            None => {
                let prec = digits.max(sep);
                PadicRoot {
                    approx: Rat::from_integer(fd.value.mod_floor(&pint_pow(p, prec))),
                    log_radius: Val::Fin(prec as i64),
                }
            }
        });
    }
    // roots of negative valuation are reciprocals of roots of the reversal in pℤ_p
    let rev = ip_reverse(&h);
    for iso in isolate_zp(&rev, p, Some(0))? {
        let fd = finish(&iso, &rev, p, 1);
        if let Some(q) = fd.exact {
            out.push(PadicRoot {
                approx: Rat::one() / q,
                log_radius: Val::Inf,
            });
            continue;
        }
        // y = p^v u; then 1/y = p^{−v} u^{−1} loses 2v digits of absolute precision
        let mut m = fd.prec;
        let mut y = fd.value;
        while y.mod_floor(&pint_pow(p, m)).is_zero() {
            m *= 2;
            y = iso.lift(p, m);
        }
        let v = vp_int(&y.mod_floor(&pint_pow(p, m)), p).unwrap() as u32;
        let m2 = (digits + 2 * v).max(m);
        let y = iso.lift(p, m2);
        let u = &y / pint_pow(p, v);
        let keep = pint_pow(p, digits + v);
        let inv_u = mod_inverse(&u, &keep).unwrap();
        out.push(PadicRoot {
            approx: Rat::new(inv_u, pint_pow(p, v)),
            log_radius: Val::Fin(digits as i64),
        });
    }
    if out.len() < total {
        return Err(MapError::NotSplitOverQp);
    }
    Ok(out)
}

/// Exact rational roots with multiplicities, ascending.
pub fn rational_roots(f: &Poly) -> Vec<(Rat, usize)> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let full = f.primitive_integer();
    let mut h = ip_squarefree(&full);
    let mut roots = vec![];
    if h[0].is_zero() {
        roots.push(Rat::zero());
        h.remove(0);
    }
    if h.len() > 1 {
        let lcv = h.last().unwrap().clone();
        let l = good_aux_prime(&h, 0).unwrap_or_else(|| {
            let mut l = 3;
            while !crate::valued_field::is_prime(l) || (&lcv % BigInt::from(l)).is_zero() {
                l += 2;
            }
            l
        });
        if let Ok(isos) = isolate_zp(&h, l, None) {
            for iso in isos {
                if let Some(q) = finish(&iso, &h, l, 1).exact {
                    roots.push(q);
                }
            }
        }
    }
    roots.sort();
    roots
        .into_iter()
        .map(|r| {
            let m = multiplicity(&full, &r);
            (r, m)
        })
        .collect()
}

/// Multiplicity of the rational root x in the integer polynomial h.
fn multiplicity(h: &[BigInt], x: &Rat) -> usize {
    let mut q = Poly::from_bigints(h);
    let lin = Poly::new(vec![-x.clone(), Rat::one()]);
    let mut m = 0;
    loop {
        let (qq, r) = q.divrem(&lin);
        if !r.is_zero() {
            return m;
        }
        m += 1;
        q = qq;
    }
}

/// Evaluate an integer polynomial at an integer; used by tests.
pub fn eval_int(h: &[BigInt], x: i64) -> BigInt {
    ip_eval(h, &BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valued_field::{rat, rat_frac};

    #[test]
    fn exact_integer_roots() {
        // z(z - 4), p = 3
        let f = Poly::from_ints(&[0, -4, 1]);
        let mut r = padic_roots(&f, 3, 5).unwrap();
        r.sort_by(|a, b| a.approx.cmp(&b.approx));
        assert_eq!(r[0], PadicRoot { approx: rat(0), log_radius: Val::Inf });
        assert_eq!(r[1], PadicRoot { approx: rat(4), log_radius: Val::Inf });
    }

    #[test]
    fn square_root_of_two_mod_49() {
        let f = Poly::from_ints(&[-2, 0, 1]);
        let mut r = padic_roots(&f, 7, 2).unwrap();
        r.sort_by(|a, b| a.approx.cmp(&b.approx));
        // oracle: search residues mod 49 directly
        let sq: Vec<i64> = (0..49).filter(|x| (x * x - 2) % 49 == 0).collect();
        assert_eq!(sq, vec![10, 39]);
        assert_eq!(r[0].approx, rat(10));
        assert_eq!(r[1].approx, rat(39));
        assert_eq!(r[0].log_radius, Val::Fin(2));
    }

    #[test]
    fn ramified_roots_are_rejected() {
        let f = Poly::new(vec![rat_frac(1, 2), rat(-1), rat(1)]);
        assert_eq!(padic_roots(&f, 2, 4), Err(MapError::NotSplitOverQp));
        // roots of 2z² + 1 have valuation −1/2
        let f = Poly::from_ints(&[1, 0, 2]);
        assert_eq!(padic_roots(&f, 2, 4), Err(MapError::NotSplitOverQp));
    }

    #[test]
    fn negative_valuation_roots() {
        // roots 1/3 and 9 plus a non-rational pair of valuation −1 at p = 3
        let f = Poly::from_ints(&[-1, 3]).mul(&Poly::from_ints(&[-9, 1]));
        let r = padic_roots(&f, 3, 3).unwrap();
        assert!(r.iter().any(|x| x.approx == rat_frac(1, 3) && x.is_exact()));
        // 9z² − 7 has roots ±√7/3, and 7 is a square mod 3
        let f = Poly::from_ints(&[-7, 0, 9]);
        let r = padic_roots(&f, 3, 4).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            let val = f.eval(&x.approx);
            // |f(x̃)| small relative to the leading term scale
            assert!(crate::valued_field::vp(&val, 3) >= Val::Fin(2));
        }
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let f = Poly::from_ints(&[-1, 3])
            .mul(&Poly::from_ints(&[-1, 3]))
            .mul(&Poly::from_ints(&[2, 1]))
            .mul(&Poly::from_ints(&[1, 0, 1]));
        let r = rational_roots(&f);
        assert_eq!(r, vec![(rat(-2), 1), (rat_frac(1, 3), 2)]);
        assert_eq!(rational_roots(&Poly::from_ints(&[0, 0, 5])), vec![(rat(0), 2)]);
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(3u64.pow(10));
        let inv2 = mod_inverse(&BigInt::from(2), &m).unwrap();
        let u = (BigInt::from(-5) * inv2).mod_floor(&m);
        let q = rational_reconstruct(&u, &m, &BigInt::from(10), &BigInt::from(10)).unwrap();
        assert_eq!(q, rat_frac(-5, 2));
    }
}
