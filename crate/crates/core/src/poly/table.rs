use alloc::vec;
use alloc::vec::Vec;

use super::{lex_index, Poly, SymbolCtx};
use crate::field::FieldCtx;
use crate::{Error, Result};

/// Upper bound on the number of monic polynomials a table may cover.
pub const MAX_TABLE_ENTRIES: u64 = 1 << 25;

const NO_FACTOR: u32 = u32::MAX;

/// Smallest-irreducible-factor sieve over all monic polynomials of degree
/// at most `max_degree`, with Möbius and von Mangoldt values.
///
/// Irreducibles are numbered by degree, then lexicographic index; the
/// "smallest" factor of `f` is the one with the smallest number.
#[derive(Clone, Debug)]
pub struct IrreducibleTable {
    fq: FieldCtx,
    max_degree: usize,
    irreducibles: Vec<Vec<Poly>>,
    id_offset: Vec<u32>,
    smallest: Vec<Vec<u32>>,
    mobius: Vec<Vec<i8>>,
    mangoldt: Vec<Vec<u8>>,
    mobius_sums: Vec<i64>,
    symbols: SymbolCtx,
}

impl IrreducibleTable {
    pub fn build(max_degree: usize, fq: FieldCtx) -> Result<Self> {
        assert!(max_degree >= 1, "sieve bound must be positive");
        let too_large = Error::TableTooLarge { q: fq.q(), degree: max_degree };
        let mut total = 0u64;
        for d in 0..=max_degree {
            total = fq
                .checked_power(d)
                .and_then(|n| total.checked_add(n))
                .filter(|&t| t <= MAX_TABLE_ENTRIES)
                .ok_or(too_large.clone())?;
        }

        let q = fq.q();
        let mut irreducibles: Vec<Vec<Poly>> = vec![Vec::new()];
        let mut id_offset = vec![0u32];
        let mut smallest = vec![vec![NO_FACTOR]];
        let mut mobius = vec![vec![1i8]];
        let mut mangoldt = vec![vec![0u8]];
        // irreducible id -> (degree, lexicographic index)
        let mut by_id: Vec<(usize, u64)> = Vec::new();

        let mut prod = vec![0u64; max_degree + 1];
        let mut cof = vec![0u32; max_degree + 1];
        for d in 1..=max_degree {
            let size = fq.checked_power(d).expect("checked above") as usize;
            let mut spf = vec![NO_FACTOR; size];
            let mut mu = vec![0i8; size];
            let mut lam = vec![0u8; size];

            for (id, &(m, p_idx)) in by_id.iter().enumerate() {
                if 2 * m > d {
                    break;
                }
                let p = &irreducibles[m][p_idx as usize];
                let k = d - m;
                for a_idx in 0..fq.checked_power(k).expect("k < d") {
                    decode_monic(k, a_idx, q, &mut cof[..=k]);
                    multiply_into(p.coeffs(), &cof[..=k], q, &mut prod[..=d]);
                    let key = lex_index_u64(&prod[..d], q) as usize;
                    if spf[key] != NO_FACTOR {
                        continue;
                    }
                    let id = id as u32;
                    spf[key] = id;
                    // p is the smallest factor of p*a, so p | a iff spf(a) = p
                    let a_spf = smallest[k][a_idx as usize];
                    mu[key] = if a_spf == id { 0 } else { -mobius[k][a_idx as usize] };
                    lam[key] = if a_spf == id && usize::from(mangoldt[k][a_idx as usize]) == m {
                        m as u8
                    } else {
                        0
                    };
                }
            }

            id_offset.push(by_id.len() as u32);
            let mut irr_d = Vec::new();
            for (key, slot) in spf.iter_mut().enumerate() {
                if *slot == NO_FACTOR {
                    *slot = by_id.len() as u32;
                    mu[key] = -1;
                    lam[key] = u8::try_from(d).map_err(|_| too_large.clone())?;
                    by_id.push((d, irr_d.len() as u64));
                    irr_d.push(Poly::monic_from_index(d, key as u64, fq));
                }
            }
            irreducibles.push(irr_d);
            smallest.push(spf);
            mobius.push(mu);
            mangoldt.push(lam);
        }

        Ok(IrreducibleTable {
            fq,
            max_degree,
            irreducibles,
            id_offset,
            smallest,
            mangoldt,
            mobius_sums: mobius.iter().map(|row| row.iter().map(|&m| i64::from(m)).sum()).collect(),
            mobius,
            symbols: SymbolCtx::new(fq),
        })
    }

    pub fn field(&self) -> FieldCtx {
        self.fq
    }

    /// Residue-symbol tables for the table's field.
    pub fn symbols(&self) -> &SymbolCtx {
        &self.symbols
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Monic irreducibles of degree `d`, in lexicographic order.
    pub fn irreducibles(&self, d: usize) -> &[Poly] {
        self.irreducibles.get(d).map_or(&[], Vec::as_slice)
    }

    /// `pi_q(n)`, the number of monic irreducibles of degree `n`.
    pub fn prime_count(&self, n: usize) -> Result<u64> {
        self.check_degree(n)?;
        Ok(self.irreducibles[n].len() as u64)
    }

    /// Möbius function of a monic polynomial.
    pub fn mobius(&self, f: &Poly) -> Result<i8> {
        let (d, key) = self.locate(f)?;
        Ok(self.mobius[d][key])
    }

    /// Möbius function of the `index`-th monic polynomial of degree `d`.
    pub fn mobius_at(&self, d: usize, index: u64) -> i8 {
        self.mobius[d][index as usize]
    }

    /// `sum of mu(A)` over all monic `A` of degree `d`.
    pub fn mobius_sum(&self, d: usize) -> Result<i64> {
        self.check_degree(d)?;
        Ok(self.mobius_sums[d])
    }

    /// `deg P` if `f = P^k` for an irreducible `P` and `k >= 1`, else 0.
    pub fn von_mangoldt(&self, f: &Poly) -> Result<usize> {
        let (d, key) = self.locate(f)?;
        Ok(usize::from(self.mangoldt[d][key]))
    }

    pub fn is_irreducible(&self, f: &Poly) -> Result<bool> {
        let (d, _) = self.locate(f)?;
        Ok(d >= 1 && self.von_mangoldt(f)? == d)
    }

    /// Smallest monic irreducible factor; `None` for `f = 1`.
    pub fn smallest_factor(&self, f: &Poly) -> Result<Option<&Poly>> {
        let (d, key) = self.locate(f)?;
        let id = self.smallest[d][key];
        if id == NO_FACTOR {
            return Ok(None);
        }
        let deg = self.id_offset.partition_point(|&off| off <= id) - 1;
        Ok(Some(&self.irreducibles[deg][(id - self.id_offset[deg]) as usize]))
    }

    /// Factorization into monic irreducibles with multiplicities, smallest
    /// factor first.
    pub fn factor(&self, f: &Poly) -> Result<Vec<(Poly, usize)>> {
        let mut rest = f.clone();
        let mut out: Vec<(Poly, usize)> = Vec::new();
        while let Some(p) = self.smallest_factor(&rest)? {
            let p = p.clone();
            rest = rest.divrem(&p, self.fq)?.0;
            match out.last_mut() {
                Some((last, k)) if *last == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        Ok(out)
    }

    /// `Some((P, k))` when `f = P^k` with `k >= 1`.
    pub fn prime_power(&self, f: &Poly) -> Result<Option<(Poly, usize)>> {
        let lam = self.von_mangoldt(f)?;
        if lam == 0 {
            return Ok(None);
        }
        let p = self.smallest_factor(f)?.expect("deg f >= 1").clone();
        Ok(Some((p, f.degree().expect("nonzero") / lam)))
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeTooLarge { degree: d, bound: self.max_degree });
        }
        Ok(())
    }

    fn locate(&self, f: &Poly) -> Result<(usize, usize)> {
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = f.degree().expect("monic is nonzero");
        self.check_degree(d)?;
        Ok((d, lex_index(&f.coeffs()[..d], self.fq.q()) as usize))
    }
}

/// Number of `B` of degree `beta` not divisible by the irreducible `p`:
/// `q^beta` if `deg p > beta`, else `q^beta (1 - 1/|p|)`; multiplied by
/// `q - 1` when `B` ranges over all (not only monic) polynomials.
pub fn count_coprime(beta: usize, p: &Poly, fq: FieldCtx, monic: bool) -> u128 {
    let q = u128::from(fq.q());
    let m = p.degree().expect("p is irreducible");
    let all = q.pow(beta as u32);
    let coprime = if m > beta { all } else { all - q.pow((beta - m) as u32) };
    if monic {
        coprime
    } else {
        coprime * (q - 1)
    }
}

fn decode_monic(k: usize, mut index: u64, q: u32, out: &mut [u32]) {
    out[k] = 1;
    for c in out[..k].iter_mut().rev() {
        *c = (index % u64::from(q)) as u32;
        index /= u64::from(q);
    }
}

fn multiply_into(a: &[u32], b: &[u32], q: u32, out: &mut [u64]) {
    out.fill(0);
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += u64::from(x) * u64::from(y);
        }
    }
    for c in out.iter_mut() {
        *c %= u64::from(q);
    }
}

fn lex_index_u64(coeffs: &[u64], q: u32) -> u64 {
    coeffs.iter().fold(0u64, |acc, &c| acc * u64::from(q) + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monic_polys;

    fn table(q: u64, d: usize) -> IrreducibleTable {
        IrreducibleTable::build(d, FieldCtx::new(q).unwrap()).unwrap()
    }

    /// Brute-force irreducibility: no monic factor of degree 1..=deg/2.
    fn irreducible_by_trial_division(f: &Poly, fq: FieldCtx) -> bool {
        let d = f.degree().unwrap();
        d >= 1
            && (1..=d / 2).all(|k| monic_polys(k, fq).all(|g| !f.rem(&g, fq).unwrap().is_zero()))
    }

    #[test]
    fn prime_counts_small() {
        let t = table(3, 4);
        assert_eq!(t.prime_count(1).unwrap(), 3);
        assert_eq!(t.prime_count(2).unwrap(), 3);
        let total: u64 = [1usize, 2, 4].iter().map(|&d| d as u64 * t.prime_count(d).unwrap()).sum();
        assert_eq!(total, 81);
    }

    #[test]
    fn quadratics_over_f3_by_root_test() {
        let f = FieldCtx::new(3).unwrap();
        let rootless = monic_polys(2, f).filter(|p| (0..3).all(|x| p.eval(x, f) != 0)).count();
        assert_eq!(rootless, 3);
    }

    #[test]
    fn sieve_agrees_with_trial_division_and_rabin() {
        for (q, d) in [(3u64, 6usize), (5, 4), (7, 3)] {
            let t = table(q, d);
            let fq = t.field();
            for k in 1..=d {
                for f in monic_polys(k, fq) {
                    let expect = irreducible_by_trial_division(&f, fq);
                    assert_eq!(t.is_irreducible(&f).unwrap(), expect, "{f}");
                    assert_eq!(f.is_irreducible(fq), expect, "{f}");
                }
            }
        }
    }

    #[test]
    fn divisor_identity() {
        for (q, d) in [(3u64, 8usize), (5, 6)] {
            let t = table(q, d);
            for n in 1..=d {
                let s: u64 = (1..=n).filter(|k| n % k == 0).map(|k| k as u64 * t.prime_count(k).unwrap()).sum();
                assert_eq!(s, q.pow(n as u32));
            }
        }
    }

    #[test]
    fn mobius_values() {
        let t = table(3, 4);
        let f = t.field();
        assert_eq!(t.mobius(&Poly::one()).unwrap(), 1);
        for p in t.irreducibles(3) {
            assert_eq!(t.mobius(p).unwrap(), -1);
        }
        assert_eq!(t.mobius(&Poly::new(&[0, 1, 1], f)).unwrap(), 1);
        assert_eq!(t.mobius(&Poly::new(&[0, 0, 1], f)).unwrap(), 0);
        assert_eq!(t.mobius(&Poly::new(&[0, 2, 2], f)), Err(Error::NotMonic));
    }

    #[test]
    fn mobius_matches_factorization() {
        let t = table(3, 6);
        let f = t.field();
        for d in 0..=6 {
            for p in monic_polys(d, f) {
                let fac = t.factor(&p).unwrap();
                let expect = if fac.iter().any(|&(_, k)| k > 1) {
                    0
                } else if fac.len().is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                assert_eq!(t.mobius(&p).unwrap(), expect, "{p}");
                // factorization multiplies back
                let back = fac.iter().fold(Poly::one(), |acc, (p, k)| {
                    (0..*k).fold(acc, |a, _| a.mul(p, f))
                });
                assert_eq!(back, p);
            }
        }
    }

    #[test]
    fn mangoldt_values() {
        let t = table(3, 6);
        let f = t.field();
        assert_eq!(t.von_mangoldt(&Poly::new(&[0, 0, 1], f)).unwrap(), 1);
        assert_eq!(t.von_mangoldt(&Poly::new(&[0, 1, 1], f)).unwrap(), 0);
        assert_eq!(t.von_mangoldt(&Poly::one()).unwrap(), 0);
        for n in 1..=6 {
            let s: usize = monic_polys(n, f).map(|p| t.von_mangoldt(&p).unwrap()).sum();
            assert_eq!(s as u64, 3u64.pow(n as u32));
        }
    }

    #[test]
    fn squarefree_sieve_identity() {
        // sum over monic A with A^2 | Q of mu(A) is [Q squarefree]
        let t = table(3, 6);
        let f = t.field();
        for d in 0..=6 {
            for qp in monic_polys(d, f) {
                let mut s = 0i32;
                for a_deg in 0..=d / 2 {
                    for a in monic_polys(a_deg, f) {
                        if qp.rem(&a.mul(&a, f), f).unwrap().is_zero() {
                            s += i32::from(t.mobius(&a).unwrap());
                        }
                    }
                }
                assert_eq!(s, i32::from(qp.is_squarefree(f).unwrap()), "{qp}");
            }
        }
    }

    #[test]
    fn mobius_row_sums() {
        // 1, -q, then 0 for every degree >= 2
        for q in [3, 5] {
            let t = table(q, 5);
            assert_eq!(t.mobius_sum(0).unwrap(), 1);
            assert_eq!(t.mobius_sum(1).unwrap(), -(q as i64));
            for d in 2..=5 {
                assert_eq!(t.mobius_sum(d).unwrap(), 0);
            }
            assert!(t.mobius_sum(6).is_err());
        }
    }

    #[test]
    fn degree_bound_enforced() {
        let t = table(3, 3);
        let p = Poly::monic_from_index(4, 0, t.field());
        assert_eq!(t.mobius(&p), Err(Error::DegreeTooLarge { degree: 4, bound: 3 }));
    }

    #[test]
    fn oversized_table_refused() {
        let fq = FieldCtx::new(97).unwrap();
        assert!(matches!(IrreducibleTable::build(6, fq), Err(Error::TableTooLarge { .. })));
    }

    #[test]
    fn coprime_counts() {
        let f = FieldCtx::new(3).unwrap();
        let quad = Poly::new(&[1, 0, 1], f);
        assert_eq!(count_coprime(1, &quad, f, true), 3);
        assert_eq!(count_coprime(2, &Poly::x(), f, true), 6);
        assert_eq!(count_coprime(0, &Poly::x(), f, true), 1);
        assert_eq!(count_coprime(2, &Poly::x(), f, false), 12);
        // against enumeration
        for beta in 0..=4 {
            for p in [Poly::x(), quad.clone()] {
                let brute = monic_polys(beta, f).filter(|b| !b.rem(&p, f).unwrap().is_zero()).count();
                assert_eq!(count_coprime(beta, &p, f, true), brute as u128);
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        let t = table(3, 6);
        let f = t.field();
        let p = Poly::new(&[1, 0, 1], f);
        let p3 = p.mul(&p, f).mul(&p, f);
        assert_eq!(t.prime_power(&p3).unwrap(), Some((p.clone(), 3)));
        assert_eq!(t.prime_power(&p.mul(&Poly::x(), f)).unwrap(), None);
    }
}
