use alloc::vec;
use alloc::vec::Vec;

use crate::field::FieldCtx;
use crate::{Error, Result};

/// The L-polynomial `L*(u) = det(I - u sqrt(q) Theta) = sum c_k u^k` of a
/// genus-`g` curve together with its scaled traces `t_n`.
///
/// The traces are the power sums of the inverse roots of `L*`, so
/// `k c_k = -sum_{i=1..k} t_i c_{k-i}` (Newton's identities).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    q: u32,
    genus: usize,
    lcoeffs: Vec<i128>,
    traces: Vec<i128>,
}

impl FrobeniusData {
    /// Reconstructs `L*` from `t_1..t_g` and the functional equation
    /// `c_{2g-k} = q^(g-k) c_k`. Any traces beyond `t_g` are checked
    /// against the recurrence the completed polynomial imposes.
    pub fn from_traces(genus: usize, fq: FieldCtx, traces: &[i128]) -> Result<Self> {
        assert!(genus >= 1, "genus must be positive");
        if traces.len() < genus {
            return Err(Error::TooFewTraces { needed: genus, got: traces.len() });
        }
        let q = i128::from(fq.q());
        let mut c = vec![0i128; 2 * genus + 1];
        c[0] = 1;
        for k in 1..=genus {
            let s: i128 = (1..=k).map(|i| traces[i - 1] * c[k - i]).sum();
            if s % k as i128 != 0 {
                return Err(Error::NewtonNotExact { step: k });
            }
            c[k] = -s / k as i128;
        }
        for k in 0..genus {
            c[2 * genus - k] = q.pow((genus - k) as u32) * c[k];
        }
        let mut data = FrobeniusData { q: fq.q(), genus, lcoeffs: c, traces: traces[..genus].to_vec() };
        for (i, &t) in traces.iter().enumerate().skip(genus) {
            if data.next_trace() != t {
                return Err(Error::FunctionalEquation { power: i + 1 });
            }
            data.traces.push(t);
        }
        Ok(data)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `c_0, ..., c_{2g}`.
    pub fn lcoeffs(&self) -> &[i128] {
        &self.lcoeffs
    }

    /// `t_1, t_2, ...` as far as computed.
    pub fn traces(&self) -> &[i128] {
        &self.traces
    }

    /// Extends the stored traces to `t_1..t_n` through the power-sum
    /// recurrence and returns `t_n`.
    pub fn trace(&mut self, n: usize) -> i128 {
        assert!(n >= 1);
        while self.traces.len() < n {
            let t = self.next_trace();
            self.traces.push(t);
        }
        self.traces[n - 1]
    }

    fn next_trace(&self) -> i128 {
        let n = self.traces.len() + 1;
        let deg = 2 * self.genus;
        let mut s: i128 = (1..n.min(deg + 1)).map(|i| self.lcoeffs[i] * self.traces[n - i - 1]).sum();
        if n <= deg {
            s += n as i128 * self.lcoeffs[n];
        }
        -s
    }

    /// `c_{2g-k} = q^(g-k) c_k` for all `k`.
    pub fn functional_equation_holds(&self) -> bool {
        let g = self.genus;
        let q = i128::from(self.q);
        (0..=g).all(|k| self.lcoeffs[2 * g - k] == q.pow((g - k) as u32) * self.lcoeffs[k])
    }

    /// `t_n^2 <= 4 g^2 q^n` for every stored trace.
    pub fn weil_bound_holds(&self) -> bool {
        let g2 = 4 * (self.genus as u128).pow(2);
        self.traces.iter().enumerate().all(|(i, &t)| {
            match u128::from(self.q).checked_pow(i as u32 + 1).and_then(|qn| qn.checked_mul(g2)) {
                Some(bound) => t.unsigned_abs().checked_mul(t.unsigned_abs()).is_some_and(|t2| t2 <= bound),
                None => true,
            }
        })
    }

    /// Coefficients of `(1 - lambda u) L*(u)`, the L-function of `chi_Q`
    /// padded to degree `2g + 2`.
    pub fn with_infinity_factor(&self, lambda: i8) -> Vec<i128> {
        let mut out = vec![0i128; self.lcoeffs.len() + 1];
        for (i, &c) in self.lcoeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] -= i128::from(lambda) * c;
        }
        out
    }

    /// `P_C(u)` at an integer point.
    pub fn eval(&self, u: i128) -> i128 {
        self.lcoeffs.iter().rev().fold(0, |acc, &c| acc * u + c)
    }
}
