//! Seeded random inputs shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use torus_gluing::{PrimitiveClass, Slope, UnimodularQ, UnimodularZ};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> BigRational {
    BigRational::new(rng.gen_range(-max_num..=max_num).into(), rng.gen_range(1..=max_den).into())
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> BigRational {
    loop {
        let r = rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A product of `len` random elementary generators of SL₂(Z).
pub fn sl2z(rng: &mut ChaCha8Rng, len: usize) -> UnimodularZ {
    let gens = [
        [1, 1, 0, 1],
        [1, -1, 0, 1],
        [1, 0, 1, 1],
        [1, 0, -1, 1],
        [0, -1, 1, 0],
        [-1, 0, 0, -1],
    ];
    (0..len).fold(UnimodularZ::identity(), |acc, _| {
        acc.compose(&UnimodularZ::from_i64(gens[rng.gen_range(0..gens.len())]).unwrap())
    })
}

pub fn hyperbolic(rng: &mut ChaCha8Rng) -> UnimodularZ {
    loop {
        let m = { let len = rng.gen_range(2..=6); sl2z(rng, len) };
        if torus_gluing::anosov::is_hyperbolic(&m) {
            return m;
        }
    }
}

/// `[[a, b], [c, (1 + bc)/a]]` with small random `a ≠ 0`, `b`, `c`.
pub fn generic_sl2q(rng: &mut ChaCha8Rng, max_den: i64) -> UnimodularQ {
    let a = nonzero_rational(rng, 12, max_den);
    let b = rational(rng, 12, max_den);
    let c = rational(rng, 12, max_den);
    let d = (BigRational::one() + &b * &c) / &a;
    UnimodularQ::new(a, b, c, d).unwrap()
}

/// A conjugate `P·[[λ, μ], [0, 1/λ]]·P⁻¹`, which always fixes the slope of
/// `P·(1, 0)`.
pub fn split_sl2q(rng: &mut ChaCha8Rng) -> UnimodularQ {
    let p = { let len = rng.gen_range(0..=4); sl2z(rng, len) }.to_q();
    let lambda = match rng.gen_range(0..4) {
        0 => BigRational::one(),
        1 => -BigRational::one(),
        _ => nonzero_rational(rng, 6, 6),
    };
    let mu = if rng.gen_bool(0.2) { BigRational::zero() } else { rational(rng, 6, 6) };
    let t = UnimodularQ::new(lambda.clone(), mu, BigRational::zero(), lambda.recip()).unwrap();
    p.compose(&t).compose(&p.invert())
}

pub fn any_sl2q(rng: &mut ChaCha8Rng) -> UnimodularQ {
    if rng.gen_bool(0.5) {
        generic_sl2q(rng, 12)
    } else {
        split_sl2q(rng)
    }
}

pub fn slope(rng: &mut ChaCha8Rng, max: i64) -> Slope {
    loop {
        let p = rng.gen_range(-max..=max);
        let q = rng.gen_range(0..=max);
        if num_integer::gcd(p, q) == 1 {
            return Slope::from_i64(p, q);
        }
    }
}

pub fn vector(rng: &mut ChaCha8Rng, max: i64) -> (BigInt, BigInt) {
    loop {
        let v = (rng.gen_range(-max..=max), rng.gen_range(-max..=max));
        if v != (0, 0) {
            return (v.0.into(), v.1.into());
        }
    }
}

pub fn class(v: &(BigInt, BigInt)) -> PrimitiveClass {
    PrimitiveClass::from_vector(v.0.clone(), v.1.clone()).unwrap()
}

pub fn det(u: &(BigInt, BigInt), v: &(BigInt, BigInt)) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Some `s` with `det(r, s) = target`, assuming `gcd(r)` divides `target`.
pub fn complete_to_det(rng: &mut ChaCha8Rng, r: &(BigInt, BigInt), target: &BigInt) -> (BigInt, BigInt) {
    use num_integer::Integer;
    // r.0·y − r.1·x = target
    let e = r.0.extended_gcd(&(-&r.1));
    let g = e.gcd.clone();
    assert!((target % &g).is_zero());
    let k = target / &g;
    let (y, x) = (&e.x * &k, &e.y * &k);
    let t = BigInt::from(rng.gen_range(-3..=3));
    (x + &t * &r.0, y + &t * &r.1)
}

/// Random boundary data `(r1, s1, r2, s2)` with `det(r1, s1) = det(r2, s2) ≠ 0`.
pub fn surfaces(rng: &mut ChaCha8Rng) -> [(BigInt, BigInt); 4] {
    use num_integer::Integer;
    let r1 = vector(rng, 9);
    let r2 = vector(rng, 9);
    let g1 = r1.0.gcd(&r1.1);
    let g2 = r2.0.gcd(&r2.1);
    let mut k = BigInt::from(rng.gen_range(1..=4));
    if rng.gen_bool(0.5) {
        k = -k;
    }
    let target = g1.lcm(&g2) * k;
    let s1 = complete_to_det(rng, &r1, &target);
    let s2 = complete_to_det(rng, &r2, &target);
    [r1, s1, r2, s2]
}
