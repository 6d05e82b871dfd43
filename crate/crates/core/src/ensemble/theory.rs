//! Predicted main terms of family averages and the random matrix values.
//!
//! All main terms are returned scaled by `q^(n/2)`, like the traces
//! themselves; the only half-integral powers of `q` occur at odd `n`, where
//! the scaling makes them integral.

use core::fmt;

use num_traits::Zero;

use super::{FamilyKind, FamilySpec};
use crate::rational::{frac, int, pow, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// below the first threshold (`n < 2g`, or `n <= 2g` for `F_even`)
    Below,
    TwoG,
    TwoGPlusOne,
    /// past the last threshold; only an error term is predicted
    Beyond,
    /// odd `n` over `Hg`, where the average vanishes exactly
    OddExact,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Below => "below-2g",
            Branch::TwoG => "n=2g",
            Branch::TwoGPlusOne => "n=2g+1",
            Branch::Beyond => "beyond",
            Branch::OddExact => "odd-exact",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Non-error terms of the predicted average, scaled by `q^(n/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTerm {
    /// the `-lambda^n` contribution (`-1`, `-q/(q+1)` or 0)
    pub constant: Rational,
    /// `eta_n sum_{deg P | n/2} deg P / (|P| + 1)` (without `deg P = 1` for `Hg`)
    pub prime_sum: Rational,
    /// the case-dependent term
    pub branch_term: Rational,
    pub branch: Branch,
}

impl MainTerm {
    pub fn scaled(&self) -> Rational {
        &self.constant + &self.prime_sum + &self.branch_term
    }
}

/// `pi_q(m)` from `m pi_q(m) = sum_{d | m} mu(d) q^(m/d)`.
pub fn prime_count_exact(q: u32, m: usize) -> Rational {
    let mut s = Rational::zero();
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        match mobius_int(d) {
            0 => {}
            mu => s += int(mu) * int(pow(q, m / d)),
        }
    }
    s / int(m as u64)
}

fn mobius_int(mut n: usize) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        -mu
    } else {
        mu
    }
}

/// `sum_{m | n/2, m >= min_degree} pi_q(m) m / (q^m + 1)`, zero for odd `n`.
fn prime_sum(q: u32, n: usize, min_degree: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let h = n / 2;
    let mut s = Rational::zero();
    for m in (min_degree..=h).filter(|m| h.is_multiple_of(*m)) {
        s += prime_count_exact(q, m) * int(m as u64) / (int(pow(q, m)) + int(1));
    }
    s
}

/// The predicted main term of the average of `t_n` over the family.
pub fn main_term(spec: &FamilySpec, n: usize) -> MainTerm {
    assert!(n >= 1, "power must be positive");
    let q = spec.field().q();
    let g = spec.genus();
    let even = n.is_multiple_of(2);
    let qi = int(q);
    let one = int(1);
    // q^(n/2) for even n
    let half = || int(pow(q, n / 2));
    let eta_half = || if even { -half() } else { Rational::zero() };

    let (constant, sum, branch, branch_term) = match spec.kind() {
        FamilyKind::FOdd => {
            let (b, t) = if n < 2 * g {
                (Branch::Below, eta_half())
            } else if n == 2 * g {
                (Branch::TwoG, -half() * &qi / (&qi - &one))
            } else {
                (Branch::Beyond, Rational::zero())
            };
            (Rational::zero(), prime_sum(q, n, 1), b, t)
        }
        FamilyKind::FEven => {
            let (b, t) = if n < 2 * g + 1 {
                (Branch::Below, eta_half())
            } else if n == 2 * g + 1 {
                (Branch::TwoGPlusOne, int(pow(q, g + 1)) / (&qi - &one))
            } else {
                (Branch::Beyond, Rational::zero())
            };
            (-one.clone(), prime_sum(q, n, 1), b, t)
        }
        FamilyKind::Union | FamilyKind::HgMonic => {
            let q2m1 = &qi * &qi - &one;
            let (b, t) = if n < 2 * g {
                (Branch::Below, eta_half())
            } else if n == 2 * g {
                (Branch::TwoG, -half() * &qi * &qi / &q2m1)
            } else if n == 2 * g + 1 {
                (Branch::TwoGPlusOne, int(pow(q, g + 2)) / &q2m1)
            } else {
                (Branch::Beyond, Rational::zero())
            };
            (-frac(q, q + 1), prime_sum(q, n, 1), b, t)
        }
        FamilyKind::Hg => {
            if !even {
                (Rational::zero(), Rational::zero(), Branch::OddExact, Rational::zero())
            } else {
                let q2m1 = &qi * &qi - &one;
                let (b, t) = if n < 2 * g {
                    (Branch::Below, -half())
                } else if n == 2 * g {
                    (Branch::TwoG, -half() * &qi * &qi / &q2m1)
                } else {
                    (Branch::Beyond, Rational::zero())
                };
                (Rational::zero(), prime_sum(q, n, 2), b, t)
            }
        }
    };
    MainTerm { constant, prime_sum: sum, branch_term, branch }
}

/// Haar average of `tr(U^n)` over `USp(2g)`: `-1` for even `n <= 2g`, else 0.
pub fn rmt_value(n: usize, g: usize) -> i32 {
    assert!(n >= 1 && g >= 1);
    if n.is_multiple_of(2) && n <= 2 * g {
        -1
    } else {
        0
    }
}
