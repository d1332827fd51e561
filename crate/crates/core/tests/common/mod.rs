#![allow(dead_code)]

use globfactor::bivariate::{deg_t, rings, FqT, FqTX};
use globfactor::{FqBiPoly, FqPoly, GaloisField, IntPoly, Integers, PolyRing, Ring};
use num_bigint::BigInt;
use rand::Rng;

pub fn zx() -> PolyRing<Integers> {
    PolyRing::new(Integers)
}

/// Random polynomial of exact degree `d` with coefficients in `[-bound, bound]`.
pub fn rand_int_poly<R: Rng>(rng: &mut R, d: usize, bound: i64) -> IntPoly {
    let mut cs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    while cs[d] == 0 {
        cs[d] = rng.gen_range(-bound..=bound);
    }
    zx().poly(cs.into_iter().map(BigInt::from).collect())
}

pub fn is_separable_int(f: &IntPoly) -> bool {
    let r = zx();
    r.prs_gcd(f, &r.derivative(f)).deg() == 0
}

#[derive(Clone, Debug)]
pub struct QItem {
    pub f: IntPoly,
    pub parts: Vec<IntPoly>,
}

/// Separable products of random primitive polynomials with total degree at
/// most `max_deg`.
pub fn q_corpus<R: Rng>(rng: &mut R, count: usize, max_deg: usize) -> Vec<QItem> {
    let r = zx();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(1..=4);
        let bound = [10i64, 1000, 1_000_000][rng.gen_range(0..3)];
        let mut left = max_deg;
        let mut parts = Vec::new();
        for _ in 0..k {
            if left == 0 {
                break;
            }
            let d = rng.gen_range(1..=left.min(8));
            left -= d;
            let g = r.primitive_part(&rand_int_poly(rng, d, bound));
            parts.push(g);
        }
        let f = r.product(&parts);
        if f.deg() >= 1 && is_separable_int(&f) {
            out.push(QItem { f, parts });
        }
    }
    out
}

pub fn rand_fq_poly<R: Rng>(rng: &mut R, k: &GaloisField, d: usize) -> FqPoly {
    let kt = PolyRing::new(k.clone());
    kt.poly((0..=d).map(|_| k.from_index(rng.gen_range(0..k.q()))).collect())
}

/// Random element of `F_q[t][X]` of `X`-degree exactly `dx` and `t`-degree
/// at most `dt`.
pub fn rand_bi_poly<R: Rng>(rng: &mut R, k: &GaloisField, dx: usize, dt: usize) -> FqBiPoly {
    let (kt, ktx) = rings(k);
    let mut cs: Vec<FqPoly> = (0..=dx).map(|_| rand_fq_poly(rng, k, dt)).collect();
    while cs[dx].is_zero() {
        cs[dx] = rand_fq_poly(rng, k, dt);
    }
    let _ = kt;
    ktx.poly(cs)
}

pub fn is_separable_bi(ktx: &FqTX, f: &FqBiPoly) -> bool {
    let d = ktx.derivative(f);
    !d.is_zero() && ktx.prs_gcd(f, &d).deg() == 0
}

#[derive(Clone, Debug)]
pub struct FqtItem {
    pub f: FqBiPoly,
    pub parts: Vec<FqBiPoly>,
}

/// Separable products with `deg_X <= max_x` and `deg_t <= max_t`.
pub fn fqt_corpus<R: Rng>(rng: &mut R, k: &GaloisField, count: usize, max_x: usize, max_t: usize) -> Vec<FqtItem> {
    let (_, ktx) = rings(k);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n_parts = rng.gen_range(1..=3);
        let (mut lx, mut lt) = (max_x, max_t);
        let mut parts = Vec::new();
        for _ in 0..n_parts {
            if lx == 0 {
                break;
            }
            let dx = rng.gen_range(1..=lx.min(5));
            let dt = rng.gen_range(0..=lt.min(4));
            lx -= dx;
            lt -= dt;
            parts.push(rand_bi_poly(rng, k, dx, dt));
        }
        let f = ktx.product(&parts);
        if f.deg() >= 1 && deg_t(&f) <= max_t && is_separable_bi(&ktx, &f) {
            out.push(FqtItem { f, parts });
        }
    }
    out
}

pub fn fqt_rings(k: &GaloisField) -> (FqT, FqTX) {
    rings(k)
}

/// Swinnerton-Dyer polynomial for the given primes: iterated resultants
/// `Res_y(g(x - y), y^2 - p)`, computed as `A^2 - p B^2` where
/// `g(x + y) = A + y B` modulo `y^2 - p`.
pub fn swinnerton_dyer(primes: &[i64]) -> IntPoly {
    let r = zx();
    let mut g = r.poly(vec![BigInt::from(-primes[0]), BigInt::from(0), BigInt::from(1)]);
    for &p in &primes[1..] {
        let pb = BigInt::from(p);
        // (x + y)^i = a_i + y b_i
        let mut a = r.one();
        let mut b = r.zero();
        let mut acc_a = r.zero();
        let mut acc_b = r.zero();
        for c in g.coeffs() {
            acc_a = r.add(&acc_a, &r.scale(&a, c));
            acc_b = r.add(&acc_b, &r.scale(&b, c));
            let na = r.add(&r.mul(&a, &r.x()), &r.scale(&b, &pb));
            let nb = r.add(&r.mul(&b, &r.x()), &a);
            a = na;
            b = nb;
        }
        g = r.sub(&r.mul(&acc_a, &acc_a), &r.scale(&r.mul(&acc_b, &acc_b), &pb));
    }
    g
}
