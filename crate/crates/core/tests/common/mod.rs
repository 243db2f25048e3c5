//! Test-only oracles and random generators. Nothing here calls into the
//! library's linear algebra.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use lefschetz_core::symplectic::{chain_curves, transvection, SymplecticForm};
use lefschetz_core::{CurveClass, IntMatrix, RatMatrix, SignatureTriple, SymplecticMatrix};

pub type Dense = Vec<Vec<BigRational>>;

pub fn dense_from_i64(rows: &[Vec<i64>]) -> Dense {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
}

pub fn to_rat_matrix(d: &Dense) -> RatMatrix {
    let n = d.len();
    let m = d.first().map_or(0, Vec::len);
    RatMatrix::new(n, m, d.iter().flatten().cloned().collect()).unwrap()
}

fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).fold(BigRational::zero(), |acc, t| acc + &a[i][t] * &b[t][j])).collect())
        .collect()
}

/// Coefficients `c_0..c_n` of `det(x I - A)` by Faddeev-LeVerrier.
pub fn char_poly(a: &Dense) -> Vec<BigRational> {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m: Dense = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigRational>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for c in coeffs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Inertia of a real symmetric matrix from its characteristic polynomial.
/// All roots are real, so Descartes' rule of signs is exact.
pub fn descartes_inertia(a: &Dense) -> SignatureTriple {
    let n = a.len();
    if n == 0 {
        return SignatureTriple::default();
    }
    let p = char_poly(a);
    let zero = p.iter().position(|c| !c.is_zero()).unwrap();
    let pos = sign_changes(p[zero..].iter());
    let flipped: Vec<BigRational> =
        p.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    let neg = sign_changes(flipped[zero..].iter());
    SignatureTriple { pos, zero, neg }
}

/// Rank by row reduction on a copy.
pub fn oracle_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[rank][c];
            for k in c..cols {
                let v = &m[rank][k] * &f;
                m[r][k] -= v;
            }
        }
        rank += 1;
    }
    rank
}

/// Meyer cocycle by an independent route: the solution space is spanned by
/// integer vectors found by enumeration in `[-range, range]^{4h}`, and the
/// signature comes from Descartes' rule on the characteristic polynomial.
/// The range grows until the found vectors span the kernel. Only practical
/// for genus 1.
pub fn meyer_by_enumeration(a: &SymplecticMatrix, b: &SymplecticMatrix) -> i64 {
    (1..=10)
        .find_map(|range| meyer_by_enumeration_in(a, b, range))
        .expect("kernel not spanned by vectors with entries up to 10")
}

fn meyer_by_enumeration_in(a: &SymplecticMatrix, b: &SymplecticMatrix, range: i64) -> Option<i64> {
    let n = a.matrix().rows();
    let to_i64 = |m: &IntMatrix| -> Vec<Vec<i64>> {
        (0..n).map(|r| (0..n).map(|c| i64::try_from(m.get(r, c)).unwrap()).collect()).collect()
    };
    let ai = to_i64(a.inverse().matrix());
    let bm = to_i64(b.matrix());
    let width = 2 * n;
    let side = (2 * range + 1) as usize;
    let total = side.pow(width as u32);
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    let mut chosen_rat: Vec<Vec<BigRational>> = Vec::new();
    for idx in 0..total {
        let mut t = idx;
        let v: Vec<i64> = (0..width)
            .map(|_| {
                let d = (t % side) as i64 - range;
                t /= side;
                d
            })
            .collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let (x, y) = v.split_at(n);
        let in_kernel = (0..n).all(|r| {
            let lhs: i64 = (0..n).map(|c| (ai[r][c] - i64::from(r == c)) * x[c]).sum::<i64>()
                + (0..n).map(|c| (bm[r][c] - i64::from(r == c)) * y[c]).sum::<i64>();
            lhs == 0
        });
        if !in_kernel {
            continue;
        }
        let vr: Vec<BigRational> = v.iter().map(|&e| BigRational::from_integer(e.into())).collect();
        let mut trial = chosen_rat.clone();
        trial.push(vr.clone());
        if oracle_rank(&trial) == trial.len() {
            chosen.push(v);
            chosen_rat.push(vr);
        }
    }
    let block: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| ai[r][c] - i64::from(r == c))
                .chain((0..n).map(|c| bm[r][c] - i64::from(r == c)))
                .map(|e| BigRational::from_integer(e.into()))
                .collect()
        })
        .collect();
    if chosen.len() != width - oracle_rank(&block) {
        return None;
    }
    // form (x1 + y1)^T J (B - I) y2
    let pair =
        |u: &[i64], w: &[i64]| -> i64 { (0..n / 2).map(|i| u[2 * i] * w[2 * i + 1] - u[2 * i + 1] * w[2 * i]).sum() };
    let b_minus_y = |y: &[i64]| -> Vec<i64> {
        (0..n).map(|r| (0..n).map(|c| (bm[r][c] - i64::from(r == c)) * y[c]).sum()).collect()
    };
    let d = chosen.len();
    let gram: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let (x1, y1) = chosen[i].split_at(n);
                    let (x2, y2) = chosen[j].split_at(n);
                    let s1: Vec<i64> = x1.iter().zip(y1).map(|(p, q)| p + q).collect();
                    let s2: Vec<i64> = x2.iter().zip(y2).map(|(p, q)| p + q).collect();
                    pair(&s1, &b_minus_y(y2)) + pair(&s2, &b_minus_y(y1))
                })
                .collect()
        })
        .collect();
    Some(descartes_inertia(&dense_from_i64(&gram)).signature())
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    // sprinkle zeros so degenerate and hyperbolic cases show up
    let density: f64 = rng.gen_range(0.2..1.0);
    for i in 0..n {
        for j in i..n {
            let v = if rng.gen_bool(density) { rng.gen_range(-range..=range) } else { 0 };
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

/// A unimodular integer matrix as a product of elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut q: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let k = rng.gen_range(-2..=2);
                for r in 0..n {
                    q[r][i] += k * q[r][j];
                }
            }
            1 => q.swap(i, j),
            _ => {
                for row in q.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
    }
    q
}

pub fn primitive_vector<R: Rng>(rng: &mut R, genus: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-2..=2)).collect();
        if v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x)) == 1 {
            return v;
        }
    }
}

/// Random vanishing cycle: a chain curve, a primitive class, or (for
/// genus >= 2, with probability `sep`) a separating curve.
pub fn random_cycle<R: Rng>(rng: &mut R, genus: usize, sep: f64) -> CurveClass {
    if genus >= 2 && rng.gen_bool(sep) {
        return CurveClass::Separating(rng.gen_range(1..genus as i64));
    }
    if rng.gen_bool(0.6) {
        let chain = chain_curves(genus);
        chain[rng.gen_range(0..chain.len())].clone()
    } else {
        CurveClass::Nonseparating(primitive_vector(rng, genus))
    }
}

pub fn random_cycles<R: Rng>(rng: &mut R, genus: usize, max_len: usize, sep: f64) -> Vec<CurveClass> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_cycle(rng, genus, sep)).collect()
}

/// Product of up to `max_len` random transvections and their inverses.
pub fn random_symplectic<R: Rng>(rng: &mut R, genus: usize, max_len: usize) -> SymplecticMatrix {
    let form = SymplecticForm::new(genus).unwrap();
    let len = rng.gen_range(0..=max_len);
    let mut m = SymplecticMatrix::identity(genus);
    for _ in 0..len {
        let t = transvection(&form, &random_cycle(rng, genus, 0.0)).unwrap();
        let t = if rng.gen_bool(0.3) { t.inverse() } else { t };
        m = m.mul(&t).unwrap();
    }
    m
}

pub fn twist(genus: usize, c: &CurveClass) -> SymplecticMatrix {
    transvection(&SymplecticForm::new(genus).unwrap(), c).unwrap()
}
