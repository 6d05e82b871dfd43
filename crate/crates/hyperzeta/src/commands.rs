//! The four subcommands, as functions from a configuration to rows.

use hyperzeta_core::charsum::{duality_holds, s_endpoint, s_main_term, s_row};
use hyperzeta_core::ensemble::{FamilyAverage, FamilyScanner};
use hyperzeta_core::rational::{int, to_f64};
use hyperzeta_core::{Curve, FamilyKind, FamilySpec, FieldCtx, IrreducibleTable};

use crate::parallel::scan_family;
use crate::report::{check_label, round12, CharsumRow, Format, ReportRow};
use crate::zeta::{analyze, parse_poly, ZetaReport};
use crate::AppError;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub fq: FieldCtx,
    pub g: usize,
    pub n_max: usize,
    pub families: Vec<FamilyKind>,
    pub format: Format,
    pub workers: usize,
    pub budget: u64,
    /// 0 disables the point-count cross-check
    pub check_stride: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), AppError> {
        if self.g == 0 {
            return Err(AppError::Usage("--g must be at least 1".into()));
        }
        if self.n_max == 0 || self.n_max > 4 * self.g + 4 {
            return Err(AppError::Usage(format!("--n-max must lie in 1..={}", 4 * self.g + 4)));
        }
        if self.workers == 0 {
            return Err(AppError::Usage("--workers must be positive".into()));
        }
        Ok(())
    }
}

/// One row per family and power `n <= n_max`, family order as given.
pub fn cmd_avg(cfg: &RunConfig) -> Result<Vec<ReportRow>, AppError> {
    let specs: Vec<FamilySpec> = cfg.families.iter().map(|&k| FamilySpec::new(k, cfg.fq, cfg.g)).collect();
    for spec in &specs {
        spec.check_budget(cfg.budget)?;
    }
    let table = IrreducibleTable::build(cfg.n_max, cfg.fq)?;
    let mut rows = Vec::new();
    for spec in specs {
        let scanner = FamilyScanner::new(spec, &table, cfg.n_max, cfg.check_stride)?;
        let sums = scan_family(&scanner, cfg.workers)?;
        for n in 1..=cfg.n_max {
            rows.push(ReportRow::from_average(&FamilyAverage::from_sums(spec, n, &sums)));
        }
    }
    Ok(rows)
}

/// `S(beta; n)` for `1 <= n <= n_max`, `0 <= beta <= n`.
pub fn cmd_charsum(cfg: &RunConfig) -> Result<Vec<CharsumRow>, AppError> {
    let table = IrreducibleTable::build(cfg.n_max, cfg.fq)?;
    let q = cfg.fq.q();
    let mut rows = Vec::new();
    for n in 1..=cfg.n_max {
        let row = s_row(n, n, &table)?;
        let endpoint = s_endpoint(n, &table)?;
        for (beta, &s) in row.iter().enumerate() {
            let main = if beta < n { s_main_term(beta, n, &table)? } else { int(0) };
            rows.push(CharsumRow {
                q,
                n,
                beta,
                s: i64::try_from(s).map_err(|_| AppError::Output(format!("S({beta};{n}) overflows")))?,
                main_num: main.numer().to_string(),
                main_den: main.denom().to_string(),
                residual: round12(to_f64(&(int(s) - &main))),
                duality: check_label((beta < n).then(|| duality_holds(beta, n, &row, q))),
                endpoint: check_label((beta + 1 == n).then_some(s == endpoint)),
            });
        }
    }
    Ok(rows)
}

/// Zeta data of `y^2 = Q(x)`; `n_max = None` means `2g`.
pub fn cmd_zeta(fq: FieldCtx, poly: &str, n_max: Option<usize>) -> Result<ZetaReport, AppError> {
    let curve = Curve::new(parse_poly(poly, fq)?, fq)?;
    let n_max = n_max.unwrap_or(2 * curve.genus());
    if n_max == 0 || n_max > 4 * curve.genus() + 4 {
        return Err(AppError::Usage(format!("--n-max must lie in 1..={}", 4 * curve.genus() + 4)));
    }
    analyze(&curve, n_max)
}
