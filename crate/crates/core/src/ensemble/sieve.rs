//! Family averages of `chi_Q(f)` by the squarefree sieve `Q = A^2 B`, without
//! enumerating the family.

use super::{FamilyKind, FamilySpec};
use crate::charsum::sigma_closed;
use crate::poly::{count_coprime, monic_polys, residue_symbol, symbol_raw_checked, IrreducibleTable, Poly};
use crate::rational::{int, Rational};
use crate::{Error, Result};

/// `<chi_Q(f)>` over the family for a prime power `f = P^k`.
pub fn avg_chi_sieve(f: &Poly, spec: &FamilySpec, table: &IrreducibleTable) -> Result<Rational> {
    let (p, k) = table.prime_power(f)?.ok_or(Error::NotPrimePower)?;
    Ok(int(chi_total(&p, k, spec)) / int(spec.cardinality()))
}

/// `sum over Q in the family of chi_Q(P^k)`.
///
/// For monic `Q` of degree `d`, writing `Q = A^2 B` and sieving with `mu(A)`:
/// `sum_{2a + b = d} sigma(P; a) sum_{deg B = b} (B/P)^k`. A leading
/// coefficient `c` contributes the extra factor `(c/P)^k`.
fn chi_total(p: &Poly, k: usize, spec: &FamilySpec) -> i128 {
    let fq = spec.field();
    let m = p.degree().expect("irreducible");
    let mut monic = 0i128;
    for d in spec.degrees().iter().map(|o| 2 * spec.genus() + 1 + o) {
        for alpha in 0..=d / 2 {
            let sigma = sigma_closed(m, alpha, fq.q());
            if sigma != 0 {
                monic += i128::from(sigma) * b_sum(p, k, d - 2 * alpha, spec);
            }
        }
    }
    let leads: i128 = if spec.kind() == FamilyKind::Hg {
        (1..fq.q()).map(|c| i128::from(fq.chi(c).pow((m * k) as u32))).sum()
    } else {
        1
    };
    leads * monic
}

/// `sum over monic B of degree beta of (B/P)^k`.
fn b_sum(p: &Poly, k: usize, beta: usize, spec: &FamilySpec) -> i128 {
    let fq = spec.field();
    if k.is_multiple_of(2) {
        return count_coprime(beta, p, fq, true) as i128;
    }
    // complete sums over residues mod P vanish
    if beta >= p.degree().expect("irreducible") {
        return 0;
    }
    monic_polys(beta, fq).map(|b| i128::from(symbol_raw_checked(b.coeffs(), p.coeffs(), fq))).sum()
}

/// `<chi_Q(f)>` by running over the whole family.
pub fn mean_chi_enumerated(f: &Poly, spec: &FamilySpec, budget: u64) -> Result<Rational> {
    let fq = spec.field();
    let mut s = 0i128;
    let mut count = 0u64;
    for curve in spec.enumerate(budget)? {
        s += i128::from(residue_symbol(curve.poly(), f, fq)?);
        count += 1;
    }
    Ok(int(s) / int(count))
}

/// `<t_n>` split by the shape of `f` in `-lambda^n - sum Lambda(f) chi_Q(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `-<lambda_Q^n>`
    pub lambda_part: Rational,
    /// `f = P` with `deg P = n`
    pub prime_part: Rational,
    /// `f = P^k`, `k` even
    pub square_part: Rational,
    /// `f = P^k`, `k >= 3` odd
    pub higher_part: Rational,
}

impl Decomposition {
    pub fn total(&self) -> Rational {
        &self.lambda_part + &self.prime_part + &self.square_part + &self.higher_part
    }
}

/// The average of `t_n` assembled from [`avg_chi_sieve`]-style sums over all
/// prime powers of degree `n`.
pub fn decompose_avg(spec: &FamilySpec, n: usize, table: &IrreducibleTable) -> Result<Decomposition> {
    if n > table.max_degree() {
        return Err(Error::DegreeTooLarge { degree: n, bound: table.max_degree() });
    }
    if table.field() != spec.field() {
        return Err(Error::ContextMismatch("table and family have different base fields"));
    }
    let fq = spec.field();
    let q = u128::from(fq.q());
    let card = int(spec.cardinality());

    let mut lam = 0i128;
    for c in 1..=spec.lead_count() as u32 {
        for d in spec.degrees().iter().map(|o| 2 * spec.genus() + 1 + o).filter(|d| d % 2 == 0) {
            let squarefree = ((q - 1) * q.pow(d as u32 - 1)) as i128;
            lam += squarefree * i128::from(fq.chi(c).pow(n as u32));
        }
    }

    let (mut prime, mut square, mut higher) = (0i128, 0i128, 0i128);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let k = n / d;
        let s: i128 = table.irreducibles(d).iter().map(|p| d as i128 * chi_total(p, k, spec)).sum();
        match k {
            1 => prime -= s,
            _ if k.is_multiple_of(2) => square -= s,
            _ => higher -= s,
        }
    }
    Ok(Decomposition {
        lambda_part: -int(lam) / &card,
        prime_part: int(prime) / &card,
        square_part: int(square) / &card,
        higher_part: int(higher) / card,
    })
}
