#![allow(dead_code)]

use berkdyn::berkovich::BerkPoint;
use berkdyn::rational_map::{Mobius, Poly, RationalMap};
use berkdyn::valued_field::{ppow, rat, rat_frac, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct SuiteMap {
    pub name: String,
    pub map: RationalMap,
}

fn named(name: &str, num: Vec<Rat>, den: Vec<Rat>, p: u64) -> SuiteMap {
    SuiteMap {
        name: name.to_string(),
        map: RationalMap::new(&Poly::new(num), &Poly::new(den), p).unwrap(),
    }
}

/// The fixed examples.
pub fn named_maps() -> Vec<SuiteMap> {
    vec![
        named("z^2 p=2", vec![rat(0), rat(0), rat(1)], vec![rat(1)], 2),
        named("z^2 p=3", vec![rat(0), rat(0), rat(1)], vec![rat(1)], 3),
        named("z^2/2 p=2", vec![rat(0), rat(0), rat_frac(1, 2)], vec![rat(1)], 2),
        named("z^2+1/2 p=2", vec![rat_frac(1, 2), rat(0), rat(1)], vec![rat(1)], 2),
        named("(z^2-z)/3 p=3", vec![rat(0), rat(-1), rat(1)], vec![rat(3)], 3),
        named("2z^2+z p=2", vec![rat(0), rat(1), rat(2)], vec![rat(1)], 2),
    ]
}

pub const SEED: u64 = 20_241_014;

/// 20 maps of degree 2 or 3 with coefficients in [−3, 3] over p ∈ {2, 3, 5}.
pub fn random_maps() -> Vec<SuiteMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let primes = [2u64, 3, 5];
    let mut out = vec![];
    while out.len() < 20 {
        let d = rng.gen_range(2..=3usize);
        let p = primes[out.len() % 3];
        let f: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
        let g: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
        if f[d] == 0 && g[d] == 0 {
            continue;
        }
        let Ok(m) = RationalMap::from_ints(&f, &g, p) else { continue };
        if m.degree() != d {
            continue;
        }
        out.push(SuiteMap {
            name: format!("random#{} d={d} p={p} f={f:?} g={g:?}", out.len()),
            map: m,
        });
    }
    out
}

pub fn suite() -> Vec<SuiteMap> {
    let mut v = named_maps();
    v.extend(random_maps());
    v
}

/// A random element of GL₂(ℤ_(p)) with small entries.
pub fn random_unit_integral(rng: &mut ChaCha8Rng, p: u64) -> Mobius {
    loop {
        let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-4..=4)).collect();
        let Ok(m) = Mobius::from_ints(e[0], e[1], e[2], e[3]) else { continue };
        if m.is_unit_integral(p) {
            return m;
        }
    }
}

pub fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ tag)
}

/// ζ(a, t) with a small center, sometimes non-integral, and t of denominator ≤ 3.
pub fn random_disk(rng: &mut ChaCha8Rng, p: u64) -> BerkPoint {
    let e = [0i64, 0, 0, 1, 2][rng.gen_range(0..5)];
    let a = rat(rng.gen_range(-30..=30)) * ppow(p, -e);
    let q = rng.gen_range(1..=3i64);
    let t = rat_frac(rng.gen_range(-3 * q..=4 * q), q);
    BerkPoint::disk(a, t, p)
}
