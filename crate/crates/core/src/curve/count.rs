use alloc::vec;
use alloc::vec::Vec;

use super::Curve;
use crate::field::{ExtFieldCtx, FieldCtx};
use crate::{Error, Result};

/// `#C(F_{q^n}) = q^n + 1 + sum over x0 in P^1(F_{q^n}) of chi_n(Q(x0))`,
/// where `Q(inf)` is the coefficient of `x^(2g+2)`.
///
/// Straightforward evaluation in the extension field; see [`PointCounter`]
/// for the tabulated version used in family scans.
pub fn count_points(curve: &Curve, ext: &ExtFieldCtx) -> Result<u64> {
    if ext.base() != curve.field() {
        return Err(Error::ContextMismatch("curve and extension have different base fields"));
    }
    let mut sum = i64::from(ext.chi(&ext.embed(curve.infinity_value())));
    for idx in 0..ext.order() {
        let x0 = ext.from_index(idx);
        sum += i64::from(ext.chi(&curve.poly().eval_ext(&x0, ext)));
    }
    Ok((ext.order() as i64 + 1 + sum) as u64)
}

const LANE_BITS: u32 = 16;
const MAX_LANES: usize = (u128::BITS / LANE_BITS) as usize;

/// Precomputed quadratic character and Frobenius orbits of `F_{q^n}`.
///
/// `chi_n(Q(x0))` is constant on Frobenius orbits because `Q` has
/// coefficients in `F_q`, so one representative per orbit is evaluated and
/// weighted by the orbit size. Powers `x0^k` are stored with one 16-bit lane
/// per coordinate so `Q(x0)` is a handful of integer multiply-adds.
#[derive(Clone, Debug)]
pub struct PointCounter {
    fq: FieldCtx,
    ext: ExtFieldCtx,
    max_poly_degree: usize,
    chi: Vec<i8>,
    weights: Vec<u32>,
    reps: Vec<u64>,
    packed: Option<Packed>,
}

#[derive(Clone, Debug)]
struct Packed {
    /// `reps.len() * (max_poly_degree + 1)` packed powers
    powers: Vec<u128>,
    /// lane value -> lane value mod q
    reduce: Vec<u32>,
}

impl PointCounter {
    pub fn new(fq: FieldCtx, n: usize, max_poly_degree: usize) -> Result<Self> {
        let ext = ExtFieldCtx::build(n, fq)?;
        let order = ext.order() as usize;

        let mut chi = vec![-1i8; order];
        chi[0] = 0;
        for idx in 1..ext.order() {
            let x = ext.from_index(idx);
            chi[ext.index_of(&ext.mul(&x, &x)) as usize] = 1;
        }

        let mut seen = vec![false; order];
        let mut reps = Vec::new();
        let mut weights = Vec::new();
        for idx in 0..order {
            if seen[idx] {
                continue;
            }
            let x = ext.from_index(idx as u64);
            let mut y = x.clone();
            let mut size = 0u32;
            loop {
                seen[ext.index_of(&y) as usize] = true;
                size += 1;
                y = ext.pow(&y, u64::from(fq.q()));
                if y == x {
                    break;
                }
            }
            reps.push(idx as u64);
            weights.push(size);
        }

        let q1 = u64::from(fq.q() - 1);
        let max_lane = (max_poly_degree as u64 + 1) * q1 * q1;
        let packed = (n <= MAX_LANES && max_lane < (1 << LANE_BITS)).then(|| {
            let mut powers = Vec::with_capacity(reps.len() * (max_poly_degree + 1));
            for &r in &reps {
                let x = ext.from_index(r);
                let mut p = ext.one();
                for _ in 0..=max_poly_degree {
                    let lanes = p
                        .coeffs()
                        .iter()
                        .enumerate()
                        .fold(0u128, |acc, (i, &c)| acc | (u128::from(c) << (LANE_BITS * i as u32)));
                    powers.push(lanes);
                    p = ext.mul(&p, &x);
                }
            }
            let reduce = (0..=max_lane).map(|v| (v % u64::from(fq.q())) as u32).collect();
            Packed { powers, reduce }
        });

        Ok(PointCounter { fq, ext, max_poly_degree, chi, weights, reps, packed })
    }

    pub fn extension(&self) -> &ExtFieldCtx {
        &self.ext
    }

    pub fn orbit_count(&self) -> usize {
        self.reps.len()
    }

    /// `sum over x0 in P^1(F_{q^n}) of chi_n(Q(x0))`, which equals `-t_n`.
    pub fn character_sum(&self, curve: &Curve) -> Result<i64> {
        if curve.field() != self.fq {
            return Err(Error::ContextMismatch("curve and counter have different base fields"));
        }
        let deg = curve.poly().degree().expect("nonzero");
        if deg > self.max_poly_degree {
            return Err(Error::DegreeTooLarge { degree: deg, bound: self.max_poly_degree });
        }
        let coeffs = curve.poly().coeffs();
        let mut sum = i64::from(self.chi[curve.infinity_value() as usize]);
        match &self.packed {
            Some(packed) => {
                let stride = self.max_poly_degree + 1;
                let n = self.ext.degree();
                let q = u64::from(self.fq.q());
                for (r, &w) in self.weights.iter().enumerate() {
                    let powers = &packed.powers[r * stride..r * stride + coeffs.len()];
                    let acc = coeffs
                        .iter()
                        .zip(powers)
                        .fold(0u128, |acc, (&c, &p)| acc + u128::from(c) * p);
                    let mut idx = 0u64;
                    for lane in (0..n).rev() {
                        let v = ((acc >> (LANE_BITS * lane as u32)) & 0xffff) as usize;
                        idx = idx * q + u64::from(packed.reduce[v]);
                    }
                    sum += i64::from(w) * i64::from(self.chi[idx as usize]);
                }
            }
            None => {
                for (&r, &w) in self.reps.iter().zip(&self.weights) {
                    let x0 = self.ext.from_index(r);
                    let v = curve.poly().eval_ext(&x0, &self.ext);
                    sum += i64::from(w) * i64::from(self.chi[self.ext.index_of(&v) as usize]);
                }
            }
        }
        Ok(sum)
    }

    pub fn count(&self, curve: &Curve) -> Result<u64> {
        Ok((self.ext.order() as i64 + 1 + self.character_sum(curve)?) as u64)
    }

    /// `t_n` from the point count.
    pub fn scaled_trace(&self, curve: &Curve) -> Result<i128> {
        Ok(-i128::from(self.character_sum(curve)?))
    }
}
