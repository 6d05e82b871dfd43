use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::theory::{main_term, rmt_value, MainTerm};
use super::FamilySpec;
use crate::curve::{Curve, CurveCharacters, PointCounter};
use crate::poly::IrreducibleTable;
use crate::rational::{int, pow, to_f64, trace_units, Rational};
use crate::{Error, Result};

/// Exact sums of `t_1..t_{n_max}` over part of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSums {
    pub curves: u64,
    /// curves whose traces were also checked against point counts
    pub checked: u64,
    /// `sums[n - 1] = sum of t_n`
    pub sums: Vec<i128>,
}

impl TraceSums {
    pub fn empty(n_max: usize) -> Self {
        TraceSums { curves: 0, checked: 0, sums: vec![0; n_max] }
    }

    /// Combine two partial scans; order does not matter.
    pub fn merge(mut self, other: &TraceSums) -> Self {
        self.curves += other.curves;
        self.checked += other.checked;
        for (a, b) in self.sums.iter_mut().zip(&other.sums) {
            *a += b;
        }
        self
    }
}

/// Computes `t_n` for every curve in a candidate range through the
/// character-sum route, checking every `stride`-th candidate against
/// extension-field point counts.
#[derive(Clone, Debug)]
pub struct FamilyScanner<'a> {
    spec: FamilySpec,
    table: &'a IrreducibleTable,
    n_max: usize,
    stride: u64,
    counters: Vec<PointCounter>,
}

impl<'a> FamilyScanner<'a> {
    /// `check_stride = 0` disables the point-count cross-check; 1 checks
    /// every curve. Counts are checked for `n <= min(n_max, 2g + 2)`.
    pub fn new(spec: FamilySpec, table: &'a IrreducibleTable, n_max: usize, check_stride: u64) -> Result<Self> {
        assert!(n_max >= 1, "need at least one power");
        if n_max > table.max_degree() {
            return Err(Error::DegreeTooLarge { degree: n_max, bound: table.max_degree() });
        }
        if table.field() != spec.field() {
            return Err(Error::ContextMismatch("table and family have different base fields"));
        }
        let deg = 2 * spec.genus() + 2;
        let counters = if check_stride == 0 {
            Vec::new()
        } else {
            (1..=n_max.min(deg)).map(|n| PointCounter::new(spec.field(), n, deg)).collect::<Result<_>>()?
        };
        Ok(FamilyScanner { spec, table, n_max, stride: check_stride, counters })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Traces `t_1..t_{n_max}` of every curve with candidate index in
    /// `range`, passed to `visit` in candidate order.
    pub fn for_each(&self, range: Range<u64>, mut visit: impl FnMut(u64, &Curve, &[i128])) -> Result<u64> {
        let mut traces = vec![0i128; self.n_max];
        let mut checked = 0;
        for (idx, curve) in self.spec.curves(range) {
            let chars = CurveCharacters::new(&curve, self.table, self.n_max)?;
            for (n, t) in traces.iter_mut().enumerate() {
                *t = chars.scaled_trace(n + 1);
            }
            if self.stride != 0 && idx % self.stride == 0 {
                for (i, counter) in self.counters.iter().enumerate() {
                    let count = counter.scaled_trace(&curve)?;
                    if count != traces[i] {
                        return Err(Error::RouteMismatch { power: i + 1, charsum: traces[i], count });
                    }
                }
                checked += 1;
            }
            visit(idx, &curve, &traces);
        }
        Ok(checked)
    }

    pub fn scan(&self, range: Range<u64>) -> Result<TraceSums> {
        let mut out = TraceSums::empty(self.n_max);
        let checked = self.for_each(range, |_, _, t| {
            out.curves += 1;
            for (s, x) in out.sums.iter_mut().zip(t) {
                *s += x;
            }
        })?;
        out.checked = checked;
        Ok(out)
    }

    pub fn scan_all(&self) -> Result<TraceSums> {
        self.scan(0..self.spec.candidate_count())
    }
}

/// The exact average of `t_n` over a family, with its predictions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyAverage {
    pub spec: FamilySpec,
    pub n: usize,
    pub curves: u64,
    /// `sum of t_n / #family`
    pub avg_scaled: Rational,
    pub main_term: MainTerm,
    pub rmt: i32,
}

impl FamilyAverage {
    pub fn from_sums(spec: FamilySpec, n: usize, sums: &TraceSums) -> Self {
        assert!(sums.curves > 0, "empty family");
        FamilyAverage {
            spec,
            n,
            curves: sums.curves,
            avg_scaled: int(sums.sums[n - 1]) / int(sums.curves),
            main_term: main_term(&spec, n),
            rmt: rmt_value(n, spec.genus()),
        }
    }

    fn q(&self) -> u32 {
        self.spec.field().q()
    }

    /// The average trace of `Theta^n`.
    pub fn avg_trace(&self) -> f64 {
        trace_units(&self.avg_scaled, self.q(), self.n)
    }

    pub fn main_term_trace(&self) -> f64 {
        trace_units(&self.main_term.scaled(), self.q(), self.n)
    }

    /// Exact `avg - main term`, scaled.
    pub fn deviation_scaled(&self) -> Rational {
        &self.avg_scaled - self.main_term.scaled()
    }

    pub fn deviation(&self) -> f64 {
        trace_units(&self.deviation_scaled(), self.q(), self.n)
    }

    /// Average number of points over `F_{q^n}`: `q^n + 1 - <t_n>`.
    pub fn avg_point_count(&self) -> Rational {
        int(pow(self.q(), self.n)) + int(1) - &self.avg_scaled
    }

    pub fn avg_point_count_f64(&self) -> f64 {
        to_f64(&self.avg_point_count())
    }
}

/// Scans the whole family and averages `t_n` exactly.
pub fn avg_trace_brute(
    spec: FamilySpec,
    n: usize,
    table: &IrreducibleTable,
    budget: u64,
    check_stride: u64,
) -> Result<FamilyAverage> {
    spec.check_budget(budget)?;
    let sums = FamilyScanner::new(spec, table, n, check_stride)?.scan_all()?;
    Ok(FamilyAverage::from_sums(spec, n, &sums))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{FamilyKind, DEFAULT_BUDGET};
    use crate::field::FieldCtx;
    use num_traits::Zero;

    fn setup(q: u64, d: usize) -> (FieldCtx, IrreducibleTable) {
        let fq = FieldCtx::new(q).unwrap();
        (fq, IrreducibleTable::build(d, fq).unwrap())
    }

    #[test]
    fn hg_odd_powers_vanish() {
        let (fq, t) = setup(3, 5);
        let spec = FamilySpec::new(FamilyKind::Hg, fq, 1);
        let sums = FamilyScanner::new(spec, &t, 5, 1).unwrap().scan_all().unwrap();
        assert_eq!(sums.curves, 144);
        assert_eq!(sums.checked, 144);
        for n in [1, 3, 5] {
            let avg = FamilyAverage::from_sums(spec, n, &sums);
            assert!(avg.avg_scaled.is_zero());
            assert_eq!(avg.avg_point_count(), int(pow(3, n) + 1));
        }
    }

    #[test]
    fn chunked_scan_equals_full_scan() {
        let (fq, t) = setup(3, 6);
        let spec = FamilySpec::new(FamilyKind::Union, fq, 2);
        let s = FamilyScanner::new(spec, &t, 6, 97).unwrap();
        let full = s.scan_all().unwrap();
        let total = spec.candidate_count();
        let mut merged = TraceSums::empty(6);
        let starts: Vec<u64> = (0..total).step_by(500).collect();
        for &start in starts.iter().rev() {
            merged = merged.merge(&s.scan(start..(start + 500).min(total)).unwrap());
        }
        assert_eq!(merged, full);
        assert_eq!(u128::from(full.curves), spec.cardinality());
    }

    #[test]
    fn hg_matches_monic_for_even_powers() {
        let (fq, t) = setup(3, 6);
        for n in [2, 4, 6] {
            let a = avg_trace_brute(FamilySpec::new(FamilyKind::Hg, fq, 2), n, &t, DEFAULT_BUDGET, 0).unwrap();
            let b = avg_trace_brute(FamilySpec::new(FamilyKind::HgMonic, fq, 2), n, &t, DEFAULT_BUDGET, 0).unwrap();
            assert_eq!(a.avg_scaled, b.avg_scaled);
        }
    }

    #[test]
    fn budget_and_table_errors() {
        let (fq, t) = setup(3, 4);
        let spec = FamilySpec::new(FamilyKind::FOdd, fq, 2);
        assert!(matches!(avg_trace_brute(spec, 2, &t, 10, 0), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(FamilyScanner::new(spec, &t, 5, 0), Err(Error::DegreeTooLarge { .. })));
        let (f5, _) = setup(5, 1);
        let other = FamilySpec::new(FamilyKind::FOdd, f5, 1);
        assert!(matches!(FamilyScanner::new(other, &t, 2, 0), Err(Error::ContextMismatch(_))));
    }
}
