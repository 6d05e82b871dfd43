//! Prime fields `F_q` and their extensions `F_{q^n}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::Poly;
use crate::{Error, Result};

/// Largest extension we are willing to tabulate element-by-element.
pub const MAX_EXT_ORDER: u64 = 1 << 26;

/// The prime field `F_q` for an odd prime `q`.
///
/// Residues are always canonical integers in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    q: u32,
}

impl FieldCtx {
    pub fn new(q: u64) -> Result<Self> {
        if q < 3 || q.is_multiple_of(2) || q > u64::from(u16::MAX) || !is_prime(q) {
            return Err(Error::NotOddPrime(q));
        }
        Ok(FieldCtx { q: q as u32 })
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u32 {
        (a % u64::from(self.q)) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.q)) as u32
    }

    /// `a^e mod q`, with `0^0 = 1`.
    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.q;
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.q), "inverse of zero in F_{}", self.q);
        let (mut r0, mut r1) = (i64::from(self.q), i64::from(a % self.q));
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let t = r0 / r1;
            (r0, r1) = (r1, r0 - t * r1);
            (s0, s1) = (s1, s0 - t * s1);
        }
        s0.rem_euclid(i64::from(self.q)) as u32
    }

    /// Quadratic character by the Euler criterion: 0, +1 or -1.
    pub fn chi(self, a: u32) -> i8 {
        let a = a % self.q;
        if a == 0 {
            return 0;
        }
        if self.pow(a, u64::from((self.q - 1) / 2)) == 1 {
            1
        } else {
            -1
        }
    }

    /// `q^e`, or `None` on overflow.
    pub fn checked_power(self, e: usize) -> Option<u64> {
        u64::from(self.q).checked_pow(u32::try_from(e).ok()?)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_{q^n} = F_q[t]/(m(t))`: the `n` coefficients of its
/// reduced representative, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElem {
    coeffs: Vec<u32>,
}

impl ExtElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// The extension `F_{q^n}` built on the lexicographically smallest monic
/// irreducible of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFieldCtx {
    base: FieldCtx,
    modulus: Poly,
    order: u64,
}

impl ExtFieldCtx {
    /// Deterministic construction. Coefficient vectors of candidate moduli
    /// are compared constant term first; for `n = 1` the modulus is `x`.
    pub fn build(n: usize, base: FieldCtx) -> Result<Self> {
        assert!(n >= 1, "extension degree must be positive");
        let order = base
            .checked_power(n)
            .filter(|&o| o <= MAX_EXT_ORDER)
            .ok_or(Error::ExtensionTooLarge(n))?;
        let modulus = (0..order)
            .map(|idx| Poly::monic_from_index(n, idx, base))
            .find(|m| m.is_irreducible(base))
            .expect("an irreducible of every degree exists");
        Ok(ExtFieldCtx { base, modulus, order })
    }

    pub fn base(&self) -> FieldCtx {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.coeffs().len() - 1
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `q^n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem { coeffs: vec![0; self.degree()] }
    }

    pub fn one(&self) -> ExtElem {
        self.embed(1)
    }

    /// The image of a base-field residue.
    pub fn embed(&self, a: u32) -> ExtElem {
        let mut e = self.zero();
        e.coeffs[0] = a % self.base.q();
        e
    }

    /// The class of `t`.
    pub fn generator(&self) -> ExtElem {
        if self.degree() == 1 {
            // t = -m_0 in F_q[t]/(t + m_0)
            let m0 = self.modulus.coeffs().first().copied().unwrap_or(0);
            return self.embed(self.base.neg(m0));
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    /// Validates and wraps a coefficient vector.
    pub fn element(&self, coeffs: Vec<u32>) -> Option<ExtElem> {
        (coeffs.len() == self.degree() && coeffs.iter().all(|&c| c < self.base.q()))
            .then_some(ExtElem { coeffs })
    }

    /// Element with base-`q` digits of `index` as coefficients (constant
    /// coefficient is the least significant digit).
    pub fn from_index(&self, mut index: u64) -> ExtElem {
        let q = u64::from(self.base.q());
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = (index % q) as u32;
            index /= q;
        }
        e
    }

    pub fn index_of(&self, a: &ExtElem) -> u64 {
        let q = u64::from(self.base.q());
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * q + u64::from(c))
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = self.base;
        ExtElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect(),
        }
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = self.base;
        let n = self.degree();
        let q = u64::from(f.q());
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(x) * u64::from(y)) % q;
            }
        }
        // reduce by the monic modulus, top degree down
        let m = self.modulus.coeffs();
        for top in (n..prod.len()).rev() {
            let lead = prod[top];
            if lead == 0 {
                continue;
            }
            for (k, &mk) in m[..n].iter().enumerate() {
                let idx = top - n + k;
                prod[idx] = (prod[idx] + (q - lead) * u64::from(mk)) % q;
            }
            prod[top] = 0;
        }
        ExtElem { coeffs: prod[..n].iter().map(|&c| c as u32).collect() }
    }

    pub fn scale(&self, a: &ExtElem, c: u32) -> ExtElem {
        let f = self.base;
        ExtElem { coeffs: a.coeffs.iter().map(|&x| f.mul(x, c)).collect() }
    }

    pub fn pow(&self, a: &ExtElem, mut e: u64) -> ExtElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The quadratic character of `F_{q^n}`: `a^((q^n - 1)/2)` mapped to
    /// `{-1, 0, 1}`.
    pub fn chi(&self, a: &ExtElem) -> i8 {
        if a.is_zero() {
            return 0;
        }
        let r = self.pow(a, (self.order - 1) / 2);
        if r == self.one() {
            1
        } else {
            debug_assert_eq!(r, self.embed(self.base.q() - 1));
            -1
        }
    }
}
