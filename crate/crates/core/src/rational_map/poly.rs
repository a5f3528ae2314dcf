//! Dense univariate polynomials: `Poly` over ℚ and slice helpers over ℤ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::valued_field::{bigint_gcd_all, bigint_lcm_all, Rat};

/// Polynomial over ℚ, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub c: Vec<Rat>,
}

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Poly {
        Poly { c: vec![] }
    }

    pub fn one() -> Poly {
        Poly::new(vec![Rat::one()])
    }

    pub fn x() -> Poly {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Poly {
        Poly::new(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lc(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn scale(&self, a: &Rat) -> Poly {
        Poly::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// self(q(z))
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(q).add(&Poly::new(vec![a.clone()]));
        }
        acc
    }

    pub fn divrem(&self, o: &Poly) -> (Poly, Poly) {
        assert!(!o.is_zero(), "division by zero polynomial");
        let dl = o.c.len() - 1;
        if self.c.len() <= dl {
            return (Poly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let mut q = vec![Rat::zero(); r.len() - dl];
        let lc = o.lc();
        for k in (0..q.len()).rev() {
            let coef = &r[k + dl] / &lc;
            if !coef.is_zero() {
                for (j, b) in o.c.iter().enumerate() {
                    r[k + j] -= &coef * b;
                }
            }
            q[k] = coef;
        }
        r.truncate(dl);
        (Poly::new(q), Poly::new(r))
    }

    /// Integer polynomial with the same roots: denominators cleared, content removed.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = bigint_lcm_all(self.c.iter().map(|x| x.denom()));
        let v: Vec<BigInt> = self
            .c
            .iter()
            .map(|x| x.numer() * (&l / x.denom()))
            .collect();
        ip_primitive(&v)
    }

    /// Monic gcd over ℚ.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() && o.is_zero() {
            return Poly::zero();
        }
        let g = ip_gcd(&self.primitive_integer(), &o.primitive_integer());
        let p = Poly::from_bigints(&g);
        let lc = p.lc();
        p.scale(&(Rat::one() / lc))
    }

    /// Product of the distinct irreducible factors, as a primitive integer polynomial.
    pub fn squarefree_part(&self) -> Vec<BigInt> {
        ip_squarefree(&self.primitive_integer())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})z")?,
                _ => write!(f, "({a})z^{k}")?,
            }
        }
        Ok(())
    }
}

// ---- integer coefficient slices ----

pub fn ip_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

pub fn ip_degree(v: &[BigInt]) -> Option<usize> {
    v.iter().rposition(|x| !x.is_zero())
}

pub fn ip_content(v: &[BigInt]) -> BigInt {
    bigint_gcd_all(v.iter())
}

/// Divide out the content and make the leading coefficient positive.
pub fn ip_primitive(v: &[BigInt]) -> Vec<BigInt> {
    let v = ip_trim(v.to_vec());
    if v.is_empty() {
        return v;
    }
    let mut g = ip_content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn ip_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            match b.get(k) {
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

pub fn ip_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            match b.get(k) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect()
}

pub fn ip_scale(a: &[BigInt], s: &BigInt) -> Vec<BigInt> {
    a.iter().map(|x| x * s).collect()
}

pub fn ip_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                c[i + j] += x * y;
            }
        }
    }
    c
}

pub fn ip_eval(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn ip_eval_mod(a: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

pub fn ip_deriv(a: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| x * BigInt::from(k))
        .collect()
}

/// h(a + s·y) as a polynomial in y.
pub fn ip_taylor_shift(h: &[BigInt], a: &BigInt, s: &BigInt) -> Vec<BigInt> {
    let lin = vec![a.clone(), s.clone()];
    let mut acc: Vec<BigInt> = vec![];
    for c in h.iter().rev() {
        acc = ip_mul(&acc, &lin);
        if acc.is_empty() {
            acc.push(c.clone());
        } else {
            acc[0] += c;
        }
    }
    acc
}

/// y^deg · h(1/y)
pub fn ip_reverse(h: &[BigInt]) -> Vec<BigInt> {
    let mut v = ip_trim(h.to_vec());
    v.reverse();
    ip_trim(v)
}

/// Pseudo-remainder of a by b (b nonzero).
pub fn ip_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let b = ip_trim(b.to_vec());
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = ip_trim(a.to_vec());
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        r = r.iter().map(|x| x * &lb).collect();
        for (j, y) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * y;
        }
        r = ip_trim(r);
    }
    r
}

/// Primitive gcd over ℤ[z] (positive leading coefficient).
pub fn ip_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = ip_primitive(a);
    let mut b = ip_primitive(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = ip_prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        a = b;
        b = ip_primitive(&r);
    }
}

/// Exact division in ℚ[z] of integer polynomials with b | a; the result is
/// returned primitive.
pub fn ip_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (q, r) = Poly::from_bigints(a).divrem(&Poly::from_bigints(b));
    debug_assert!(r.is_zero());
    q.primitive_integer()
}

fn squarefree_mod(a: &[BigInt], l: u64) -> Option<bool> {
    use crate::valued_field::FpPoly;
    let lb = BigInt::from(l);
    let c: Vec<u64> = a
        .iter()
        .map(|x| {
            use num_traits::ToPrimitive;
            x.mod_floor(&lb).to_u64().unwrap()
        })
        .collect();
    let f = FpPoly::new(c, l);
    if f.degree() != ip_degree(a) {
        return None;
    }
    Some(f.gcd(&f.derivative()).degree() == Some(0))
}

/// A small prime ℓ modulo which `a` keeps its degree and is squarefree, if
/// one exists below the search bound.
pub fn good_aux_prime(a: &[BigInt], avoid: u64) -> Option<u64> {
    let mut l = 3u64;
    let mut seen = 0;
    while seen < 200 {
        if crate::valued_field::is_prime(l) && l != avoid {
            seen += 1;
            if squarefree_mod(a, l) == Some(true) {
                return Some(l);
            }
        }
        l += 2;
    }
    None
}

pub fn ip_squarefree(a: &[BigInt]) -> Vec<BigInt> {
    let a = ip_primitive(a);
    if ip_degree(&a).unwrap_or(0) == 0 {
        return a;
    }
    // a mod-ℓ witness settles the common case without a gcd
    for l in [1_000_003u64, 998_244_353, 3, 5, 7, 11, 13] {
        if squarefree_mod(&a, l) == Some(true) {
            return a;
        }
    }
    let g = ip_gcd(&a, &ip_deriv(&a));
    if g.len() <= 1 {
        return a;
    }
    ip_div_exact(&a, &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valued_field::rat;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn arithmetic() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.mul(&b), Poly::from_ints(&[-1, 0, 1]));
        let (q, r) = Poly::from_ints(&[-1, 0, 1]).divrem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.compose(&b), Poly::from_ints(&[0, 1]));
        assert_eq!(Poly::from_ints(&[3, 2, 1]).eval(&rat(2)), rat(11));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (z-1)^2 (z+2) and (z-1)(z+5)
        let f = ip_mul(&ip_mul(&bi(&[-1, 1]), &bi(&[-1, 1])), &bi(&[2, 1]));
        let g = ip_mul(&bi(&[-1, 1]), &bi(&[5, 1]));
        assert_eq!(ip_gcd(&f, &g), bi(&[-1, 1]));
        assert_eq!(ip_squarefree(&f), ip_mul(&bi(&[-1, 1]), &bi(&[2, 1])));
        assert_eq!(ip_squarefree(&bi(&[0, 0, 0, 2])), bi(&[0, 1]));
    }

    #[test]
    fn shift_and_reverse() {
        let h = bi(&[1, 0, 1]); // 1 + z^2
        assert_eq!(ip_taylor_shift(&h, &BigInt::from(1), &BigInt::from(2)), bi(&[2, 4, 4]));
        assert_eq!(ip_reverse(&bi(&[0, 2, 3])), bi(&[3, 2]));
    }
}
