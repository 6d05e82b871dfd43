//! Numerical roots of `P_C(u)` for the Riemann hypothesis check
//! `|u| = q^(-1/2)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

type RatPoly = Vec<BigRational>;

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    let mut quot = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let top = r.len() - 1;
        let t = &r[top] / &b[db];
        for (k, bk) in b.iter().enumerate() {
            let i = top - db + k;
            r[i] = &r[i] - &t * bk;
        }
        quot[top - db] = t;
        r.pop();
        trim(&mut r);
    }
    (quot, r)
}

/// `p / gcd(p, p')`: the same roots, each simple.
fn squarefree_part(p: &RatPoly) -> RatPoly {
    let dp: RatPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let (mut a, mut b) = (p.clone(), dp);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = rat_rem(&a, &b);
        a = b;
        b = r;
    }
    if a.len() <= 1 {
        return p.clone();
    }
    rat_rem(p, &a).0
}

fn horner(p: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::zero();
    let mut dv = Complex64::zero();
    for &c in p.iter().rev() {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

/// All complex roots of `sum c_k u^k` (multiple roots reported once), by
/// Aberth iteration on the exact squarefree part.
pub fn weil_roots(lcoeffs: &[i128]) -> Vec<Complex64> {
    let exact: RatPoly = lcoeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    let mut sq = squarefree_part(&exact);
    trim(&mut sq);
    let deg = sq.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lead = sq[deg].clone();
    let p: Vec<Complex64> = sq
        .iter()
        .map(|c| Complex64::new((c / &lead).to_f64().expect("finite"), 0.0))
        .collect();

    // start on a circle of the root-product radius, off the real axis
    let radius = libm::pow(p[0].norm(), 1.0 / deg as f64);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, 0.4 + core::f64::consts::TAU * k as f64 / deg as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let (v, dv) = horner(&p, z[i]);
            if v.is_zero() {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(f64::MIN_POSITIVE));
        }
        if moved < 1e-15 {
            break;
        }
    }
    // Newton polish
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = horner(&p, *zi);
            if dv.is_zero() {
                break;
            }
            *zi -= v / dv;
        }
    }
    z
}

/// Largest `| |u| - q^(-1/2) |` over the roots of `P_C`.
pub fn weil_root_deviation(lcoeffs: &[i128], q: u32) -> f64 {
    let target = 1.0 / libm::sqrt(f64::from(q));
    weil_roots(lcoeffs).iter().map(|u| libm::fabs(u.norm() - target)).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supersingular_elliptic() {
        // 1 + 3u^2: roots +- i / sqrt(3)
        let roots = weil_roots(&[1, 0, 3]);
        assert_eq!(roots.len(), 2);
        assert!(weil_root_deviation(&[1, 0, 3], 3) < 1e-12);
    }

    #[test]
    fn repeated_roots_converge_tightly() {
        // (1 + 3u^2)^2 has double roots
        assert!(weil_root_deviation(&[1, 0, 6, 0, 9], 3) < 1e-12);
        assert_eq!(weil_roots(&[1, 0, 6, 0, 9]).len(), 2);
    }

    #[test]
    fn detects_off_circle_roots() {
        // (1 - u)(1 - 3u) has roots 1 and 1/3, not on |u| = 3^(-1/2)
        assert!(weil_root_deviation(&[1, -4, 3], 3) > 0.1);
    }
}
