//! Frobenius data of a single curve.

use hyperzeta_core::curve::{
    lfunc_coeffs_with, scaled_trace_from_count, weil_root_deviation, CurveCharacters, PointCounter,
};
use hyperzeta_core::{Curve, Error, FieldCtx, FrobeniusData, IrreducibleTable, Poly};
use serde::Serialize;

use crate::AppError;

/// Largest `q^deg Q` for which the L-function of `chi_Q` is summed directly.
const LFUNC_LIMIT: u64 = 10_000_000;

pub const WEIL_TOLERANCE: f64 = 1e-9;

/// Comma-separated coefficients, constant term first.
pub fn parse_poly(s: &str, fq: FieldCtx) -> Result<Poly, AppError> {
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| AppError::Usage(format!("bad polynomial {s:?}: {e}")))?;
    Ok(Poly::new(&coeffs, fq))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaReport {
    pub poly: String,
    pub q: u32,
    pub genus: usize,
    pub lambda: i8,
    /// `#C(F_{q^n})` for `n = 1..=2g`
    pub points: Vec<u64>,
    /// `L*(u) = 1 + c_1 u + ... + c_{2g} u^{2g}`
    pub lcoeffs: Vec<i128>,
    /// `t_1..t_{n_max}`
    pub traces: Vec<i128>,
    /// coefficients of `L(u, chi_Q)`, when small enough to sum directly
    pub lfunc: Option<Vec<i64>>,
    /// counts and character sums give the same `t_n`, `n <= 2g`
    pub routes_agree: bool,
    /// `t_{g+1}..t_{2g}` match the polynomial rebuilt from `t_1..t_g`
    pub functional_equation: bool,
    /// `L(u, chi_Q) = (1 - lambda u) L*(u)`
    pub lfunc_factorization: Option<bool>,
    pub weil_deviation: f64,
    pub weil: bool,
}

impl ZetaReport {
    pub fn passed(&self) -> bool {
        self.routes_agree && self.functional_equation && self.lfunc_factorization != Some(false) && self.weil
    }
}

pub fn analyze(curve: &Curve, n_max: usize) -> Result<ZetaReport, AppError> {
    let fq = curve.field();
    let g = curve.genus();
    let deg = curve.poly().degree().expect("curve polynomial is nonzero");

    let mut points = Vec::with_capacity(2 * g);
    for n in 1..=2 * g {
        points.push(PointCounter::new(fq, n, deg)?.count(curve)?);
    }
    let counted: Vec<i128> = points.iter().zip(1..).map(|(&c, n)| scaled_trace_from_count(c, n, fq)).collect();

    let table = IrreducibleTable::build(2 * g, fq)?;
    let chars = CurveCharacters::new(curve, &table, 2 * g)?;
    let routes_agree = (1..=2 * g).all(|n| chars.scaled_trace(n) == counted[n - 1]);

    let (mut data, functional_equation) = match FrobeniusData::from_traces(g, fq, &counted) {
        Ok(d) => {
            let holds = d.functional_equation_holds();
            (d, holds)
        }
        Err(Error::FunctionalEquation { .. }) => (FrobeniusData::from_traces(g, fq, &counted[..g])?, false),
        Err(e) => return Err(e.into()),
    };
    let traces: Vec<i128> = (1..=n_max).map(|n| data.trace(n)).collect();

    let small = fq.checked_power(deg).is_some_and(|s| s <= LFUNC_LIMIT);
    let lfunc = if small { Some(lfunc_coeffs_with(curve, table.symbols())?) } else { None };
    let lfunc_factorization = lfunc.as_ref().map(|l| same_coeffs(l, &data.with_infinity_factor(curve.lambda())));

    let weil_deviation = weil_root_deviation(data.lcoeffs(), fq.q());
    Ok(ZetaReport {
        poly: curve.poly().to_string(),
        q: fq.q(),
        genus: g,
        lambda: curve.lambda(),
        points,
        lcoeffs: data.lcoeffs().to_vec(),
        traces,
        lfunc,
        routes_agree,
        functional_equation,
        lfunc_factorization,
        weil_deviation,
        weil: weil_deviation < WEIL_TOLERANCE,
    })
}

/// Coefficient-wise equality, missing coefficients read as zero.
pub fn same_coeffs(a: &[i64], b: &[i128]) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|i| i128::from(a.get(i).copied().unwrap_or(0)) == b.get(i).copied().unwrap_or(0))
}
