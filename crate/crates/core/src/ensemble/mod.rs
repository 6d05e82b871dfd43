//! Families of hyperelliptic curves of fixed genus and exact averages of
//! their scaled traces.
//!
//! Every family is enumerated through a dense candidate index: leading
//! coefficient block, then degree block, then the lexicographic index of
//! the monic part. Non-squarefree candidates are skipped, so a range of
//! candidate indices is a natural unit of parallel work.

mod scan;
mod sieve;
mod theory;

use core::fmt;
use core::str::FromStr;

use crate::curve::Curve;
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::{Error, Result};

pub use scan::{avg_trace_brute, FamilyAverage, FamilyScanner, TraceSums};
pub use sieve::{avg_chi_sieve, decompose_avg, mean_chi_enumerated, Decomposition};
pub use theory::{main_term, prime_count_exact, rmt_value, Branch, MainTerm};

/// Default cap on `(q - 1) q^(2g+2)`, the size of the largest family.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// monic squarefree of degree `2g + 1`
    FOdd,
    /// monic squarefree of degree `2g + 2`
    FEven,
    /// the union of the two monic families
    Union,
    /// squarefree of degree `2g + 1` or `2g + 2`, any leading coefficient
    Hg,
    /// the monic part of `Hg`; the same set of polynomials as `Union`
    HgMonic,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] =
        [FamilyKind::FOdd, FamilyKind::FEven, FamilyKind::Union, FamilyKind::Hg, FamilyKind::HgMonic];

    pub fn label(self) -> &'static str {
        match self {
            FamilyKind::FOdd => "f-odd",
            FamilyKind::FEven => "f-even",
            FamilyKind::Union => "union",
            FamilyKind::Hg => "hg",
            FamilyKind::HgMonic => "hg-monic",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FamilyKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        FamilyKind::ALL.into_iter().find(|k| k.label() == s).ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    kind: FamilyKind,
    fq: FieldCtx,
    genus: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, fq: FieldCtx, genus: usize) -> Self {
        assert!(genus >= 1, "genus must be positive");
        FamilySpec { kind, fq, genus }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn field(&self) -> FieldCtx {
        self.fq
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Degrees of `Q` in the family, ascending.
    pub fn degrees(&self) -> &'static [usize] {
        // offsets from 2g + 1
        match self.kind {
            FamilyKind::FOdd => &[0],
            FamilyKind::FEven => &[1],
            _ => &[0, 1],
        }
    }

    fn degree_list(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees().iter().map(move |o| 2 * self.genus + 1 + o)
    }

    /// Number of admissible leading coefficients.
    pub fn lead_count(&self) -> u64 {
        if self.kind == FamilyKind::Hg {
            u64::from(self.fq.q() - 1)
        } else {
            1
        }
    }

    /// `#F_d = (q - 1) q^(d-1)` squarefree monics per degree, times leads.
    pub fn cardinality(&self) -> u128 {
        let q = u128::from(self.fq.q());
        let monic: u128 = self.degree_list().map(|d| (q - 1) * q.pow(d as u32 - 1)).sum();
        monic * u128::from(self.lead_count())
    }

    /// Size of the candidate index space, squarefree or not.
    pub fn candidate_count(&self) -> u64 {
        let q = u64::from(self.fq.q());
        self.lead_count() * self.degree_list().map(|d| q.pow(d as u32)).sum::<u64>()
    }

    /// `(q - 1) q^(2g+2)` against the cap; refuses rather than sampling.
    pub fn check_budget(&self, budget: u64) -> Result<()> {
        let q = u128::from(self.fq.q());
        let requested = (q - 1).saturating_mul(q.saturating_pow(2 * self.genus as u32 + 2));
        if requested > u128::from(budget) {
            return Err(Error::BudgetExceeded { requested, budget });
        }
        Ok(())
    }

    /// The polynomial at a candidate index.
    pub fn candidate(&self, index: u64) -> Poly {
        let q = u64::from(self.fq.q());
        let per_lead = self.candidate_count() / self.lead_count();
        let lead = (index / per_lead) as u32 + 1;
        let mut r = index % per_lead;
        let mut degree = 0;
        for d in self.degree_list() {
            degree = d;
            let block = q.pow(d as u32);
            if r < block {
                break;
            }
            r -= block;
        }
        let monic = Poly::monic_from_index(degree, r, self.fq);
        if lead == 1 {
            monic
        } else {
            monic.scale(lead, self.fq)
        }
    }

    /// The curve at a candidate index, or `None` if the candidate is not
    /// squarefree.
    pub fn curve_at(&self, index: u64) -> Option<Curve> {
        let poly = self.candidate(index);
        poly.is_squarefree(self.fq)
            .expect("candidates are nonzero")
            .then(|| Curve::new_unchecked(poly, self.fq))
    }

    /// Curves with candidate index in `range`, with their indices.
    pub fn curves(&self, range: core::ops::Range<u64>) -> impl Iterator<Item = (u64, Curve)> + '_ {
        range.filter_map(move |i| self.curve_at(i).map(|c| (i, c)))
    }

    /// Every curve of the family, in candidate order, after the budget check.
    pub fn enumerate(&self, budget: u64) -> Result<impl Iterator<Item = Curve> + '_> {
        self.check_budget(budget)?;
        Ok(self.curves(0..self.candidate_count()).map(|(_, c)| c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: FamilyKind, q: u64, g: usize) -> FamilySpec {
        FamilySpec::new(kind, FieldCtx::new(q).unwrap(), g)
    }

    #[test]
    fn cardinalities_match_enumeration() {
        for (q, g) in [(3, 1), (3, 2), (5, 1)] {
            for kind in FamilyKind::ALL {
                let s = spec(kind, q, g);
                let n = s.enumerate(DEFAULT_BUDGET).unwrap().count() as u128;
                assert_eq!(n, s.cardinality(), "{kind} q={q} g={g}");
            }
        }
        assert_eq!(spec(FamilyKind::FOdd, 3, 1).cardinality(), 18);
        assert_eq!(spec(FamilyKind::FEven, 3, 1).cardinality(), 54);
        assert_eq!(spec(FamilyKind::Hg, 3, 1).cardinality(), 144);
        let (q, g) = (5u128, 2u32);
        assert_eq!(spec(FamilyKind::Union, 5, 2).cardinality(), q.pow(2 * g) * (q - 1) * (q + 1));
        assert_eq!(spec(FamilyKind::Hg, 5, 2).cardinality(), (q - 1) * spec(FamilyKind::HgMonic, 5, 2).cardinality());
    }

    #[test]
    fn enumeration_is_distinct_and_in_family() {
        let s = spec(FamilyKind::Hg, 3, 1);
        let curves: Vec<Curve> = s.enumerate(DEFAULT_BUDGET).unwrap().collect();
        let set: std::collections::HashSet<_> = curves.iter().map(|c| c.poly().clone()).collect();
        assert_eq!(set.len(), curves.len());
        assert!(curves.iter().all(|c| c.genus() == 1 && c.poly().is_squarefree(s.field()).unwrap()));
        assert!(curves.iter().any(|c| c.poly().leading() == Some(2)));
    }

    #[test]
    fn budget_guard() {
        let s = spec(FamilyKind::FOdd, 3, 2);
        assert!(s.check_budget(1458).is_ok());
        assert_eq!(s.check_budget(1457), Err(Error::BudgetExceeded { requested: 1458, budget: 1457 }));
        assert!(s.enumerate(100).is_err());
    }

    #[test]
    fn labels_roundtrip() {
        for k in FamilyKind::ALL {
            assert_eq!(k.label().parse::<FamilyKind>(), Ok(k));
        }
        assert!("all".parse::<FamilyKind>().is_err());
    }
}
