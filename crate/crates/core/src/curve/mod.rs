//! Hyperelliptic curves `y^2 = Q(x)` and their Frobenius data.
//!
//! Scaled traces `t_n = q^(n/2) tr(Theta^n) = q^n + 1 - #C(F_{q^n})` are
//! computed two ways: by counting points over `F_{q^n}` ([`count_points`],
//! [`PointCounter`]) and by the von Mangoldt weighted character sum over
//! monic polynomials of degree `n` ([`trace_via_character_sum`],
//! [`CurveCharacters`]). The two must agree exactly.

mod count;
mod lpoly;
mod roots;

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::field::FieldCtx;
use crate::poly::{character_sum_coeff, monic_polys, residue_symbol, IrreducibleTable, Poly, SymbolCtx};
use crate::{Error, Result};

pub use count::{count_points, PointCounter};
pub use lpoly::FrobeniusData;
pub use roots::{weil_root_deviation, weil_roots};

/// `y^2 = Q(x)` with `Q` squarefree of degree `2g + 1` or `2g + 2`, `g >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    poly: Poly,
    genus: usize,
    lambda: i8,
    fq: FieldCtx,
}

impl Curve {
    pub fn new(poly: Poly, fq: FieldCtx) -> Result<Self> {
        let deg = poly.degree().ok_or(Error::ZeroPolynomial)?;
        if deg < 3 {
            return Err(Error::GenusZero(deg));
        }
        if let Some(gcd) = poly.squarefree_witness(fq)? {
            return Err(Error::NotSquarefree { gcd: gcd.to_string() });
        }
        Ok(Self::new_unchecked(poly, fq))
    }

    /// Skips the squarefree test; the caller guarantees it.
    pub(crate) fn new_unchecked(poly: Poly, fq: FieldCtx) -> Self {
        let deg = poly.degree().expect("nonzero");
        let lambda = if deg % 2 == 1 { 0 } else { fq.chi(poly.leading().expect("nonzero")) };
        Curve { genus: (deg - 1) / 2, poly, lambda, fq }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn field(&self) -> FieldCtx {
        self.fq
    }

    /// 0 for odd degree, otherwise the quadratic character of the leading
    /// coefficient.
    pub fn lambda(&self) -> i8 {
        self.lambda
    }

    /// Points at infinity on the smooth model over `F_q`: `lambda + 1`.
    pub fn points_at_infinity(&self) -> u32 {
        (self.lambda + 1) as u32
    }

    /// Coefficient of `x^(2g+2)`, i.e. the value of `x^(2g+2) Q(1/x)` at 0.
    pub fn infinity_value(&self) -> u32 {
        self.poly.coeff(2 * self.genus + 2)
    }
}

/// `t_n = q^n + 1 - #C(F_{q^n})`.
pub fn scaled_trace_from_count(count: u64, n: usize, fq: FieldCtx) -> i128 {
    i128::from(fq.checked_power(n).expect("q^n fits")) + 1 - i128::from(count)
}

/// `t_n = -lambda^n - sum over monic f of degree n of Lambda(f) (Q/f)`,
/// evaluated literally over every monic `f`.
pub fn trace_via_character_sum(curve: &Curve, n: usize, table: &IrreducibleTable) -> Result<i128> {
    if n > table.max_degree() {
        return Err(Error::DegreeTooLarge { degree: n, bound: table.max_degree() });
    }
    let fq = curve.field();
    let mut s = -i128::from(curve.lambda().pow(n as u32));
    for f in monic_polys(n, fq) {
        let lam = table.von_mangoldt(&f)?;
        if lam != 0 {
            s -= lam as i128 * i128::from(residue_symbol(curve.poly(), &f, fq)?);
        }
    }
    Ok(s)
}

/// `chi_Q(P)` for every monic irreducible `P` up to a degree bound, from
/// which `t_n` follows for all `n` up to that bound using
/// `chi_Q(P^k) = chi_Q(P)^k`.
#[derive(Clone, Debug)]
pub struct CurveCharacters {
    lambda: i8,
    by_degree: Vec<Vec<i8>>,
}

impl CurveCharacters {
    pub fn new(curve: &Curve, table: &IrreducibleTable, max_degree: usize) -> Result<Self> {
        if max_degree > table.max_degree() {
            return Err(Error::DegreeTooLarge { degree: max_degree, bound: table.max_degree() });
        }
        if curve.field() != table.field() {
            return Err(Error::ContextMismatch("curve and table have different base fields"));
        }
        let symbols = table.symbols();
        let qc = curve.poly().coeffs();
        let by_degree = (0..=max_degree)
            .map(|d| {
                table
                    .irreducibles(d)
                    .iter()
                    .map(|p| symbols.symbol(qc, p.coeffs()))
                    .collect()
            })
            .collect();
        Ok(CurveCharacters { lambda: curve.lambda(), by_degree })
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    /// `chi_Q` of the irreducibles of degree `d`, in table order.
    pub fn characters(&self, d: usize) -> &[i8] {
        &self.by_degree[d]
    }

    pub fn scaled_trace(&self, n: usize) -> i128 {
        assert!(n >= 1 && n <= self.max_degree(), "power {n} outside 1..={}", self.max_degree());
        let mut s = -i128::from(self.lambda.pow(n as u32));
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            let even_power = (n / d).is_multiple_of(2);
            let sum: i64 = if even_power {
                self.by_degree[d].iter().map(|&c| i64::from(c != 0)).sum()
            } else {
                self.by_degree[d].iter().map(|&c| i64::from(c)).sum()
            };
            s -= d as i128 * i128::from(sum);
        }
        s
    }
}

/// `A_Q(beta) = sum over monic B of degree beta of chi_Q(B)` for
/// `0 <= beta <= deg Q`; the last entry must vanish.
pub fn lfunc_coeffs(curve: &Curve) -> Result<Vec<i64>> {
    let deg = curve.poly().degree().expect("nonzero");
    (0..=deg).map(|beta| character_sum_coeff(curve.poly(), beta, curve.field())).collect()
}

/// [`lfunc_coeffs`] using precomputed field tables.
pub fn lfunc_coeffs_with(curve: &Curve, symbols: &SymbolCtx) -> Result<Vec<i64>> {
    if curve.field() != symbols.field() {
        return Err(Error::ContextMismatch("curve and symbol tables have different base fields"));
    }
    let deg = curve.poly().degree().expect("nonzero");
    (0..=deg).map(|beta| symbols.character_sum_coeff(curve.poly(), beta)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldCtx {
        FieldCtx::new(3).unwrap()
    }

    #[test]
    fn construction_checks() {
        let f = f3();
        assert_eq!(Curve::new(Poly::new(&[0, 0, 1], f), f), Err(Error::GenusZero(2)));
        assert!(matches!(
            Curve::new(Poly::new(&[0, 0, 0, 1], f), f),
            Err(Error::NotSquarefree { .. })
        ));
        let c = Curve::new(Poly::new(&[0, 2, 0, 1], f), f).unwrap();
        assert_eq!((c.genus(), c.lambda(), c.points_at_infinity()), (1, 0, 1));
        // x^4 + x + 1 is squarefree? degree 4, leading 1 -> lambda = 1
        let c = Curve::new(Poly::new(&[2, 1, 0, 0, 1], f), f).unwrap();
        assert_eq!((c.genus(), c.lambda(), c.points_at_infinity()), (1, 1, 2));
        let c = Curve::new(Poly::new(&[1, 2, 0, 0, 2], f), f).unwrap();
        assert_eq!((c.lambda(), c.points_at_infinity()), (-1, 0));
    }

    #[test]
    fn odd_degree_has_no_lambda_term() {
        let f = f3();
        let t = IrreducibleTable::build(4, f).unwrap();
        let c = Curve::new(Poly::new(&[0, 2, 0, 1], f), f).unwrap();
        assert_eq!(c.lambda(), 0);
        // t_1 = -(chi(Q(0)) + chi(Q(1)) + chi(Q(2)))
        let direct: i128 = (0..3).map(|x| -i128::from(f.chi(c.poly().eval(x, f)))).sum();
        assert_eq!(trace_via_character_sum(&c, 1, &t).unwrap(), direct);
        assert_eq!(direct, 0);
    }

    #[test]
    fn cached_characters_match_literal_sum() {
        let f = FieldCtx::new(5).unwrap();
        let t = IrreducibleTable::build(6, f).unwrap();
        for coeffs in [[1i64, 2, 0, 3, 0, 1], [2, 0, 1, 1, 4, 3], [0, 1, 0, 0, 0, 2]] {
            let c = Curve::new(Poly::new(&coeffs, f), f).unwrap();
            let cache = CurveCharacters::new(&c, &t, 6).unwrap();
            for n in 1..=6 {
                assert_eq!(cache.scaled_trace(n), trace_via_character_sum(&c, n, &t).unwrap(), "n={n}");
            }
        }
    }

    #[test]
    fn trace_from_count_trivial() {
        assert_eq!(scaled_trace_from_count(4, 1, f3()), 0);
        assert_eq!(scaled_trace_from_count(16, 2, f3()), -6);
    }

    #[test]
    fn lfunc_coeffs_basic() {
        let f = f3();
        let c = Curve::new(Poly::new(&[0, 2, 0, 1], f), f).unwrap();
        let a = lfunc_coeffs(&c).unwrap();
        assert_eq!(a[0], 1);
        assert_eq!(*a.last().unwrap(), 0);
        // L = L* for odd degree: 1 + 0 u + 3 u^2
        assert_eq!(a, vec![1, 0, 3, 0]);
        assert_eq!(lfunc_coeffs_with(&c, &SymbolCtx::new(f)).unwrap(), a);
    }

    #[test]
    fn tabulated_lfunc_matches_plain() {
        let f = FieldCtx::new(5).unwrap();
        for idx in [7u64, 123, 2024, 3000] {
            let poly = Poly::monic_from_index(5, idx, f).scale(2, f);
            if let Ok(c) = Curve::new(poly, f) {
                assert_eq!(lfunc_coeffs_with(&c, &SymbolCtx::new(f)).unwrap(), lfunc_coeffs(&c).unwrap());
            }
        }
    }
}
