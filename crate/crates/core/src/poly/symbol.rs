//! The quadratic residue symbol `(D/f)` of `F_q[x]`, evaluated by the
//! Euclidean reciprocity loop without factoring either argument.

use alloc::vec;
use alloc::vec::Vec;

use super::{monic_polys, Poly};
use crate::field::FieldCtx;
use crate::{Error, Result};

/// Largest degree the symbol loop handles (it works in fixed stack buffers).
pub const MAX_SYMBOL_DEGREE: usize = 63;
const CAP: usize = MAX_SYMBOL_DEGREE + 1;

/// Jacobi-style symbol `(D/f)` for monic `f` of positive degree.
///
/// `D` may be zero, constant or non-monic. Each round reduces `D mod f`,
/// peels the leading coefficient `c` with `(c/f) = chi(c)^deg f`, and swaps
/// the two monic arguments using
/// `(A/B) = (-1)^((q-1)/2 deg A deg B) (B/A)`.
pub fn residue_symbol(d: &Poly, f: &Poly, fq: FieldCtx) -> Result<i8> {
    let fd = f.degree().filter(|&k| k >= 1 && f.is_monic()).ok_or(Error::NotMonic)?;
    if fd > MAX_SYMBOL_DEGREE {
        return Err(Error::DegreeTooLarge { degree: fd, bound: MAX_SYMBOL_DEGREE });
    }
    if d.degree().is_some_and(|k| k > MAX_SYMBOL_DEGREE) {
        let r = d.rem(f, fq)?;
        return Ok(symbol_raw(r.coeffs(), f.coeffs(), fq));
    }
    Ok(symbol_raw(d.coeffs(), f.coeffs(), fq))
}

/// [`symbol_raw`] for a monic lower argument of degree `1..=MAX_SYMBOL_DEGREE`
/// and an upper argument of any degree.
pub(crate) fn symbol_raw_checked(num: &[u32], den: &[u32], fq: FieldCtx) -> i8 {
    if num.len() <= CAP {
        symbol_raw(num, den, fq)
    } else {
        let r = reduce_long(num, den, fq);
        symbol_raw(r.coeffs(), den, fq)
    }
}

fn reduce_long(num: &[u32], den: &[u32], fq: FieldCtx) -> Poly {
    Poly::from_residues(num.to_vec())
        .rem(&Poly::from_residues(den.to_vec()), fq)
        .expect("den is nonzero")
}

/// Core loop on raw coefficient slices. `den` must be monic of degree in
/// `1..=MAX_SYMBOL_DEGREE`, `num` of degree at most `MAX_SYMBOL_DEGREE`.
pub(crate) fn symbol_raw(num: &[u32], den: &[u32], fq: FieldCtx) -> i8 {
    dispatch(num, den, &fq)
}

/// Inverse and quadratic-character tables of `F_q` for evaluating many
/// symbols over one field.
#[derive(Clone, Debug)]
pub struct SymbolCtx {
    fq: FieldCtx,
    inv: Vec<u32>,
    chi: Vec<i8>,
    /// `a * b mod q` at `a * q + b`, for `q <= MUL_TABLE_MAX_Q`
    mul: Vec<u16>,
}

const MUL_TABLE_MAX_Q: u32 = 256;

impl SymbolCtx {
    pub fn new(fq: FieldCtx) -> Self {
        let q = fq.q();
        let mut inv = vec![0u32; q as usize];
        let mut chi = vec![-1i8; q as usize];
        chi[0] = 0;
        for a in 1..q {
            inv[a as usize] = fq.inv(a);
            chi[fq.mul(a, a) as usize] = 1;
        }
        let mul = if q <= MUL_TABLE_MAX_Q {
            (0..q * q).map(|i| fq.mul(i / q, i % q) as u16).collect()
        } else {
            Vec::new()
        };
        SymbolCtx { fq, inv, chi, mul }
    }

    pub fn field(&self) -> FieldCtx {
        self.fq
    }

    /// `(num/den)` on coefficient slices (constant term first); `den` must
    /// be monic of degree `1..=MAX_SYMBOL_DEGREE`.
    pub fn symbol(&self, num: &[u32], den: &[u32]) -> i8 {
        if num.len() <= CAP {
            dispatch(num, den, self)
        } else {
            let r = reduce_long(num, den, self.fq);
            dispatch(r.coeffs(), den, self)
        }
    }
}

impl SymbolCtx {
    /// `sum over monic B of degree beta of (D/B)`, like
    /// [`character_sum_coeff`] but without allocating per term.
    pub fn character_sum_coeff(&self, d: &Poly, beta: usize) -> Result<i64> {
        if beta == 0 {
            return Ok(1);
        }
        if beta > MAX_SYMBOL_DEGREE {
            return Err(Error::DegreeTooLarge { degree: beta, bound: MAX_SYMBOL_DEGREE });
        }
        let q = self.fq.q();
        let mut b = [0u32; CAP];
        b[beta] = 1;
        let mut s = 0i64;
        loop {
            s += i64::from(self.symbol(d.coeffs(), &b[..=beta]));
            // odometer over the lower coefficients
            let mut i = 0;
            while i < beta && b[i] == q - 1 {
                b[i] = 0;
                i += 1;
            }
            if i == beta {
                return Ok(s);
            }
            b[i] += 1;
        }
    }
}

trait Scalars {
    fn q(&self) -> u32;
    fn inv(&self, c: u32) -> u32;
    fn chi(&self, c: u32) -> i8;
    /// `a * b mod q` for reduced `a`, `b`
    fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.q()
    }
}

impl Scalars for FieldCtx {
    fn q(&self) -> u32 {
        FieldCtx::q(*self)
    }
    fn inv(&self, c: u32) -> u32 {
        FieldCtx::inv(*self, c)
    }
    fn chi(&self, c: u32) -> i8 {
        FieldCtx::chi(*self, c)
    }
}

impl Scalars for SymbolCtx {
    fn q(&self) -> u32 {
        self.fq.q()
    }
    fn inv(&self, c: u32) -> u32 {
        self.inv[c as usize]
    }
    fn chi(&self, c: u32) -> i8 {
        self.chi[c as usize]
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.mul.is_empty() {
            a * b % self.fq.q()
        } else {
            u32::from(self.mul[(a * self.fq.q() + b) as usize])
        }
    }
}

const SMALL: usize = 16;

fn dispatch<S: Scalars>(num: &[u32], den: &[u32], s: &S) -> i8 {
    if num.len() <= SMALL && den.len() <= SMALL {
        symbol_loop::<SMALL, S>(num, den, s)
    } else {
        symbol_loop::<CAP, S>(num, den, s)
    }
}

/// All intermediate values stay below `q^2 <= 2^32`.
#[inline]
fn symbol_loop<const N: usize, S: Scalars>(num_in: &[u32], den_in: &[u32], s: &S) -> i8 {
    let q = s.q();
    let flip_odd_pairs = ((q - 1) / 2) % 2 == 1;
    let mut a = [0u32; N];
    let mut b = [0u32; N];
    let (mut num, mut den) = (&mut a, &mut b);
    num[..num_in.len()].copy_from_slice(num_in);
    den[..den_in.len()].copy_from_slice(den_in);
    let (mut nlen, mut dlen) = (num_in.len(), den_in.len());
    let mut sign = 1i8;
    loop {
        let dd = dlen - 1;
        // num <- num mod den (den is monic)
        if nlen > dd {
            for top in (dd..nlen).rev() {
                let t = num[top];
                if t == 0 {
                    continue;
                }
                let base = top - dd;
                let m = q - t;
                for k in 0..dd {
                    let v = num[base + k] + s.mul(m, den[k]);
                    num[base + k] = if v >= q { v - q } else { v };
                }
                num[top] = 0;
            }
            nlen = dd;
        }
        while nlen > 0 && num[nlen - 1] == 0 {
            nlen -= 1;
        }
        if nlen == 0 {
            return 0;
        }
        let c = num[nlen - 1];
        if c != 1 {
            if dd % 2 == 1 && s.chi(c) == -1 {
                sign = -sign;
            }
            let ci = s.inv(c);
            for x in num[..nlen].iter_mut() {
                *x = s.mul(*x, ci);
            }
        }
        if nlen == 1 {
            return sign;
        }
        if flip_odd_pairs && (nlen - 1) % 2 == 1 && dd % 2 == 1 {
            sign = -sign;
        }
        core::mem::swap(&mut num, &mut den);
        core::mem::swap(&mut nlen, &mut dlen);
    }
}

/// `sum over monic B of degree beta of (D/B)`, with `(D/1) = 1`. For a
/// squarefree `D` this is the coefficient of `u^beta` in `L(u, chi_D)`.
pub fn character_sum_coeff(d: &Poly, beta: usize, fq: FieldCtx) -> Result<i64> {
    if beta == 0 {
        return Ok(1);
    }
    if beta > MAX_SYMBOL_DEGREE {
        return Err(Error::DegreeTooLarge { degree: beta, bound: MAX_SYMBOL_DEGREE });
    }
    let mut s = 0i64;
    for b in monic_polys(beta, fq) {
        s += i64::from(residue_symbol(d, &b, fq)?);
    }
    Ok(s)
}
