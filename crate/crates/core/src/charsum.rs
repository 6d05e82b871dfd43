//! Möbius sums `sigma(f; alpha)` and the double character sums `S(beta; n)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{character_sum_coeff, monic_polys, IrreducibleTable, Poly};
use crate::rational::{int, pow, Rational};
use crate::{Error, Result};

/// `sum of mu(A)` over monic `A` of degree `alpha` coprime to the monic `f`,
/// by inclusion-exclusion over the prime factors of `f` and explicit
/// enumeration of the multiples of each squarefree divisor.
pub fn sigma_brute(f: &Poly, alpha: usize, table: &IrreducibleTable) -> Result<i64> {
    if alpha > table.max_degree() {
        return Err(Error::DegreeTooLarge { degree: alpha, bound: table.max_degree() });
    }
    let fq = table.field();
    let primes: Vec<Poly> = table.factor(f)?.into_iter().map(|(p, _)| p).collect();
    let mut total = 0i64;
    for mask in 0u32..(1 << primes.len()) {
        let mut m = Poly::one();
        for (i, p) in primes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                m = m.mul(p, fq);
            }
        }
        let dm = m.degree().expect("monic");
        if dm > alpha {
            continue;
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * mobius_sum_of_multiples(&m, alpha - dm, table)?;
    }
    Ok(total)
}

/// `sum of mu(m * B)` over monic `B` of degree `k`.
fn mobius_sum_of_multiples(m: &Poly, k: usize, table: &IrreducibleTable) -> Result<i64> {
    let fq = table.field();
    let q = u64::from(fq.q());
    let d = m.degree().expect("monic") + k;
    if m.is_one() {
        return table.mobius_sum(d);
    }
    let mc = m.coeffs();
    let mut b = vec![0u32; k + 1];
    let mut prod = vec![0u64; d + 1];
    let mut s = 0i64;
    for idx in 0..fq.checked_power(k).expect("within table") {
        b[k] = 1;
        let mut r = idx;
        for c in b[..k].iter_mut().rev() {
            *c = (r % q) as u32;
            r /= q;
        }
        prod.fill(0);
        for (i, &x) in mc.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += u64::from(x) * u64::from(y);
            }
        }
        let key = prod[..d].iter().fold(0u64, |acc, &c| acc * q + c % q);
        s += i64::from(table.mobius_at(d, key));
    }
    Ok(s)
}

/// `sigma_n(alpha)`: the value of `sigma(P^k; alpha)` for any irreducible `P`
/// of degree `n` and any `k >= 1`.
pub fn sigma_closed(n: usize, alpha: usize, q: u32) -> i64 {
    assert!(n >= 1, "degree of P must be positive");
    let q = i64::from(q);
    if n == 1 {
        return if alpha == 0 { 1 } else { 1 - q };
    }
    match alpha % n {
        0 => 1,
        1 => -q,
        _ => 0,
    }
}

/// `S(beta; n)`: sum over irreducible `P` of degree `n` and monic `B` of
/// degree `beta` of `(B/P)`.
pub fn s_brute(beta: usize, n: usize, table: &IrreducibleTable) -> Result<i128> {
    let primes = primes_of_degree(n, table)?;
    let symbols = table.symbols();
    let mut s = 0i128;
    for b in monic_polys(beta, table.field()) {
        for p in primes {
            s += i128::from(symbols.symbol(b.coeffs(), p.coeffs()));
        }
    }
    Ok(s)
}

/// `[S(0; n), ..., S(beta_max; n)]`.
pub fn s_row(beta_max: usize, n: usize, table: &IrreducibleTable) -> Result<Vec<i128>> {
    (0..=beta_max).map(|beta| s_brute(beta, n, table)).collect()
}

/// Whether the exact duality between `S(beta; n)` and `S(n-1-beta; n)`
/// holds, all terms computed by [`s_brute`].
pub fn s_dual_check(beta: usize, n: usize, table: &IrreducibleTable) -> Result<bool> {
    if n == 0 || beta >= n {
        return Err(Error::BetaOutOfRange { beta, n });
    }
    let row = s_row(n - 1, n, table)?;
    Ok(duality_holds(beta, n, &row, table.field().q()))
}

/// The duality on a precomputed row `S(0..n; n)`.
///
/// Odd `n`: `S(beta) = q^(beta-(n-1)/2) S(n-1-beta)`.
/// Even `n`: `S(beta) = q^(beta-n/2) (-S(n-1-beta) + (q-1) sum_{j<=n-beta-2} S(j))`.
/// Both sides are cross-multiplied so everything stays integral.
pub fn duality_holds(beta: usize, n: usize, row: &[i128], q: u32) -> bool {
    let qi = |e: usize| i128::from(q).pow(e as u32);
    let (rhs, shift) = if n % 2 == 1 {
        (row[n - 1 - beta], (n - 1) / 2)
    } else {
        let tail: i128 = row[..n - beta - 1].iter().sum();
        (-row[n - 1 - beta] + i128::from(q - 1) * tail, n / 2)
    };
    // S(beta) * q^shift == q^beta * rhs
    row[beta] * qi(shift) == qi(beta) * rhs
}

/// Closed endpoint `S(n-1; n)`: `pi q^((n-1)/2)` for odd `n`,
/// `-pi q^((n-2)/2)` for even `n`.
pub fn s_endpoint(n: usize, table: &IrreducibleTable) -> Result<i128> {
    let pi = i128::from(table.prime_count(n)?);
    let q = i128::from(table.field().q());
    Ok(if n % 2 == 1 { pi * q.pow((n as u32 - 1) / 2) } else { -pi * q.pow((n as u32 - 2) / 2) })
}

/// Main term of `S(beta; n)` for `beta < n`: `pi (q^(beta/2) - eta_n q^(beta-n/2))`
/// for even `beta > 0`, `pi` for `beta = 0` (exact), and 0 for odd `beta`.
pub fn s_main_term(beta: usize, n: usize, table: &IrreducibleTable) -> Result<Rational> {
    if beta >= n {
        return Err(Error::BetaOutOfRange { beta, n });
    }
    let pi = int(table.prime_count(n)?);
    let q = table.field().q();
    if beta == 0 {
        return Ok(pi);
    }
    if beta % 2 == 1 {
        return Ok(Rational::zero());
    }
    let mut inner = int(pow(q, beta / 2));
    if n.is_multiple_of(2) {
        inner -= q_power(q, beta as i64 - (n / 2) as i64);
    }
    Ok(pi * inner)
}

/// `q^e` for a possibly negative exponent.
pub(crate) fn q_power(q: u32, e: i64) -> Rational {
    if e >= 0 {
        int(pow(q, e as usize))
    } else {
        int(pow(q, (-e) as usize)).recip()
    }
}

/// `S(beta; n)` via reciprocity: `(-1)^((q-1)/2 beta n) sum_P A_P(beta)`,
/// with `A_P(beta) = sum over monic B of degree beta of (P/B)`.
pub fn s_by_reciprocity(beta: usize, n: usize, table: &IrreducibleTable) -> Result<i128> {
    let fq = table.field();
    let mut s = 0i128;
    for p in primes_of_degree(n, table)? {
        s += i128::from(character_sum_coeff(p, beta, fq)?);
    }
    let odd = ((fq.q() as usize - 1) / 2 * beta * n) % 2 == 1;
    Ok(if odd { -s } else { s })
}

fn primes_of_degree(n: usize, table: &IrreducibleTable) -> Result<&[Poly]> {
    table.prime_count(n)?;
    Ok(table.irreducibles(n))
}

/// One cell of the `S(beta; n)` grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSumRecord {
    pub q: u32,
    pub n: usize,
    pub beta: usize,
    pub value: i128,
    /// Zero when `beta >= n`, where the sum vanishes identically.
    pub main_term: Rational,
    pub eta_n: u8,
    pub eta_beta: u8,
}

impl CharSumRecord {
    pub fn compute(beta: usize, n: usize, table: &IrreducibleTable) -> Result<Self> {
        let value = s_brute(beta, n, table)?;
        let main_term = if beta < n { s_main_term(beta, n, table)? } else { Rational::zero() };
        Ok(CharSumRecord {
            q: table.field().q(),
            n,
            beta,
            value,
            main_term,
            eta_n: u8::from(n.is_multiple_of(2)),
            eta_beta: u8::from(beta.is_multiple_of(2)),
        })
    }

    pub fn residual(&self) -> Rational {
        int(self.value) - &self.main_term
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn table(q: u64, d: usize) -> IrreducibleTable {
        IrreducibleTable::build(d, FieldCtx::new(q).unwrap()).unwrap()
    }

    /// Möbius by trial-division factoring, independent of the sieve.
    fn mobius_trial(a: &Poly, fq: FieldCtx) -> i64 {
        let mut rest = a.clone();
        let mut mu = 1;
        for d in 1..=a.degree().unwrap() {
            for p in monic_polys(d, fq).filter(|p| p.is_irreducible(fq)) {
                let (qt, r) = rest.divrem(&p, fq).unwrap();
                if r.is_zero() {
                    if qt.divrem(&p, fq).unwrap().1.is_zero() {
                        return 0;
                    }
                    rest = qt;
                    mu = -mu;
                }
            }
        }
        mu
    }

    fn sigma_gcd(f: &Poly, alpha: usize, fq: FieldCtx) -> i64 {
        monic_polys(alpha, fq)
            .filter(|a| f.gcd(a, fq).is_one())
            .map(|a| mobius_trial(&a, fq))
            .sum()
    }

    #[test]
    fn sigma_examples() {
        let t = table(3, 6);
        let fq = t.field();
        for f in [Poly::x(), Poly::new(&[1, 1], fq), Poly::new(&[2, 0, 1, 0, 1], fq)] {
            assert_eq!(sigma_brute(&f, 0, &t).unwrap(), 1);
        }
        let p1 = &t.irreducibles(1)[0];
        for alpha in 1..=6 {
            assert_eq!(sigma_brute(p1, alpha, &t).unwrap(), -2);
        }
        let p3 = &t.irreducibles(3)[0];
        // 4 = 1 mod 3
        assert_eq!(sigma_brute(p3, 4, &t).unwrap(), -3);
        assert_eq!(sigma_brute(p3, 5, &t).unwrap(), 0);
        assert_eq!(sigma_closed(2, 5, 7), -7);
        assert_eq!(sigma_closed(4, 8, 5), 1);
        assert_eq!(sigma_closed(1, 0, 3), 1);
    }

    #[test]
    fn sigma_brute_matches_gcd_oracle() {
        let t = table(3, 5);
        let fq = t.field();
        let fs = [
            Poly::new(&[0, 1, 1], fq),
            Poly::new(&[1, 0, 1], fq).mul(&Poly::new(&[1, 0, 1], fq), fq),
            Poly::new(&[0, 2, 0, 1], fq),
        ];
        for f in &fs {
            for alpha in 0..=4 {
                assert_eq!(sigma_brute(f, alpha, &t).unwrap(), sigma_gcd(f, alpha, fq), "{f} {alpha}");
            }
        }
    }

    #[test]
    fn sigma_closed_on_prime_powers() {
        let t = table(3, 8);
        let fq = t.field();
        for n in 1..=3 {
            for p in t.irreducibles(n) {
                let p2 = p.mul(p, fq);
                for alpha in 0..=8 {
                    let want = sigma_closed(n, alpha, 3);
                    assert_eq!(sigma_brute(p, alpha, &t).unwrap(), want);
                    assert_eq!(sigma_brute(&p2, alpha, &t).unwrap(), want);
                }
            }
        }
        assert!(sigma_brute(&t.irreducibles(1)[0], 9, &t).is_err());
    }

    #[test]
    fn s_examples() {
        let t = table(3, 5);
        for n in 1..=5 {
            assert_eq!(s_brute(0, n, &t).unwrap(), i128::from(t.prime_count(n).unwrap()));
            for beta in n..=n + 2 {
                assert_eq!(s_brute(beta, n, &t).unwrap(), 0, "S({beta};{n})");
            }
            assert_eq!(s_brute(n - 1, n, &t).unwrap(), s_endpoint(n, &t).unwrap());
        }
        assert_eq!(s_brute(1, 2, &t).unwrap(), -3);
    }

    #[test]
    fn dualities_q3() {
        let t = table(3, 5);
        for n in 1..=5 {
            for beta in 0..n {
                assert!(s_dual_check(beta, n, &t).unwrap(), "beta={beta} n={n}");
            }
        }
        assert_eq!(s_dual_check(3, 3, &t), Err(Error::BetaOutOfRange { beta: 3, n: 3 }));
    }

    #[test]
    fn reciprocity_transfer() {
        for q in [3, 5] {
            let t = table(q, 4);
            for n in 1..=4 {
                for beta in 0..=3 {
                    assert_eq!(s_by_reciprocity(beta, n, &t).unwrap(), s_brute(beta, n, &t).unwrap());
                }
            }
        }
    }

    #[test]
    fn main_terms() {
        let t = table(3, 5);
        let pi4 = int(t.prime_count(4).unwrap());
        assert_eq!(s_main_term(2, 4, &t).unwrap(), pi4 * int(2));
        assert_eq!(s_main_term(3, 4, &t).unwrap(), Rational::zero());
        assert_eq!(s_main_term(2, 5, &t).unwrap(), int(t.prime_count(5).unwrap() * 3));
        assert!(s_main_term(4, 4, &t).is_err());
        let rec = CharSumRecord::compute(2, 4, &t).unwrap();
        assert_eq!(rec.residual(), int(rec.value) - int(2 * t.prime_count(4).unwrap()));
        assert_eq!((rec.eta_n, rec.eta_beta), (1, 1));
    }
}
