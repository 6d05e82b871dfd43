//! Self-check suites run by `hyperzeta verify`.

use std::time::Instant;

use hyperzeta_core::charsum::{duality_holds, s_by_reciprocity, s_endpoint, s_row, sigma_brute, sigma_closed};
use hyperzeta_core::curve::{lfunc_coeffs_with, weil_root_deviation};
use hyperzeta_core::ensemble::{
    avg_chi_sieve, decompose_avg, prime_count_exact, FamilyAverage, FamilyScanner, TraceSums,
};
use hyperzeta_core::poly::{monic_polys, residue_symbol, MAX_TABLE_ENTRIES};
use hyperzeta_core::rational::{int, pow, Rational};
use hyperzeta_core::{ExtFieldCtx, FamilyKind, FamilySpec, FieldCtx, FrobeniusData, IrreducibleTable, Poly};
use serde::{Deserialize, Serialize};

use crate::commands::RunConfig;
use crate::parallel::{map_chunks, scan_family};
use crate::zeta::{same_coeffs, WEIL_TOLERANCE};
use crate::AppError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: u64,
    pub failures: u64,
    pub seconds: f64,
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.notes.len() < 8 {
                self.notes.push(what());
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures += other.failures;
        self.notes.extend(other.notes.into_iter().take(8usize.saturating_sub(self.notes.len())));
    }
}

/// Runs every suite; failure descriptions go to `log`.
pub fn run_all(cfg: &RunConfig, log: &mut dyn std::io::Write) -> Result<Vec<SuiteResult>, AppError> {
    type Suite = fn(&RunConfig, &mut Tally) -> Result<(), AppError>;
    let suites: [(&str, Suite); 6] = [
        ("field", field_suite),
        ("poly", poly_suite),
        ("curve", curve_suite),
        ("charsum", charsum_suite),
        ("ensemble", ensemble_suite),
        ("prime_polynomial", prime_polynomial_suite),
    ];
    let mut out = Vec::new();
    for (name, suite) in suites {
        let start = Instant::now();
        let mut t = Tally::default();
        suite(cfg, &mut t)?;
        for note in &t.notes {
            writeln!(log, "{name}: {note}")?;
        }
        out.push(SuiteResult {
            suite: name.to_string(),
            cases: t.cases,
            failures: t.failures,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Ok(out)
}

fn field_suite(cfg: &RunConfig, t: &mut Tally) -> Result<(), AppError> {
    let fq = cfg.fq;
    let m = fq.q().min(211);
    let mut square = vec![false; fq.q() as usize];
    for a in 1..fq.q() {
        square[fq.mul(a, a) as usize] = true;
    }
    for a in 0..m {
        let want = if a == 0 { 0 } else if square[a as usize] { 1 } else { -1 };
        t.check(fq.chi(a) == want, || format!("chi({a})"));
        if a != 0 {
            t.check(fq.mul(a, fq.inv(a)) == 1, || format!("inverse of {a}"));
        }
        for b in 0..m {
            t.check(fq.chi(fq.mul(a, b)) == fq.chi(a) * fq.chi(b), || format!("chi({a}*{b})"));
        }
    }
    for n in 2..=3 {
        if fq.checked_power(n).is_none_or(|s| s > 1_000_000) {
            continue;
        }
        let ext = ExtFieldCtx::build(n, fq)?;
        for a in 1..m {
            let want = if n % 2 == 0 { 1 } else { fq.chi(a) };
            t.check(ext.chi(&ext.embed(a)) == want, || format!("chi_{n}({a})"));
        }
        let sample = ext.order().min(300);
        for i in 0..sample {
            let x = ext.from_index(i);
            let y = ext.from_index((i * 7 + 3) % ext.order());
            t.check(ext.chi(&ext.mul(&x, &y)) == ext.chi(&x) * ext.chi(&y), || format!("chi_{n} product {i}"));
        }
    }
    Ok(())
}

fn euler_symbol(d: &Poly, p: &Poly, fq: FieldCtx) -> Result<i8, AppError> {
    if d.rem(p, fq)?.is_zero() {
        return Ok(0);
    }
    let norm = fq.checked_power(p.degree().expect("monic")).expect("small");
    let r = d.pow_mod((norm - 1) / 2, p, fq)?;
    Ok(if r.is_one() { 1 } else { -1 })
}

fn poly_suite(cfg: &RunConfig, t: &mut Tally) -> Result<(), AppError> {
    let fq = cfg.fq;
    let q = fq.q();
    let top = (2..=6).rev().find(|&d| fq.checked_power(d).is_some_and(|s| s <= 200_000)).unwrap_or(1);
    let table = IrreducibleTable::build(top, fq)?;
    for d in 1..=top.min(4) {
        for f in monic_polys(d, fq).take(20_000) {
            t.check(table.is_irreducible(&f)? == f.is_irreducible(fq), || format!("irreducibility of {f}"));
        }
    }
    for n in 1..=top {
        let total: u64 = (1..=n).filter(|d| n % d == 0).map(|d| d as u64 * table.prime_count(d).unwrap_or(0)).sum();
        t.check(Some(total) == fq.checked_power(n), || format!("sum d pi(d) for n={n}"));
        t.check(int(table.prime_count(n)?) == prime_count_exact(q, n), || format!("pi({n})"));
    }
    let nonresidue = (1..q).find(|&c| fq.chi(c) == -1).expect("odd q has non-residues");
    let small: Vec<Poly> = (0..=2).flat_map(|d| monic_polys(d, fq)).take(400).collect();
    for p in table.irreducibles(1).iter().chain(table.irreducibles(2)).take(60) {
        for b in &small {
            for c in [1, nonresidue] {
                let d = b.scale(c, fq);
                t.check(residue_symbol(&d, p, fq)? == euler_symbol(&d, p, fq)?, || format!("({d}/{p})"));
            }
        }
    }
    let sign = |da: usize, db: usize| if ((q as usize - 1) / 2 * da * db) % 2 == 1 { -1 } else { 1 };
    let monic: Vec<&Poly> = small.iter().filter(|p| p.degree().is_some_and(|d| d >= 1)).take(120).collect();
    for a in &monic {
        for b in &monic {
            let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
            let lhs = residue_symbol(a, b, fq)?;
            let rhs = sign(da, db) * residue_symbol(b, a, fq)?;
            t.check(lhs == rhs, || format!("reciprocity for {a}, {b}"));
        }
    }
    Ok(())
}

fn curve_suite(cfg: &RunConfig, t: &mut Tally) -> Result<(), AppError> {
    let fq = cfg.fq;
    let g = cfg.g;
    let spec = FamilySpec::new(FamilyKind::Hg, fq, g);
    spec.check_budget(cfg.budget)?;
    let table = IrreducibleTable::build(2 * g + 2, fq)?;
    let scanner = FamilyScanner::new(spec, &table, 2 * g + 2, 1)?;
    let parts = map_chunks(spec.candidate_count(), cfg.workers, |range| {
        let mut local = Tally::default();
        let mut err = None;
        let checked = scanner.for_each(range, |_, curve, traces| {
            let data = match FrobeniusData::from_traces(g, fq, traces) {
                Ok(d) => d,
                Err(e) => {
                    local.check(false, || format!("{}: {e}", curve.poly()));
                    return;
                }
            };
            local.check(data.functional_equation_holds(), || format!("functional equation for {}", curve.poly()));
            let dev = weil_root_deviation(data.lcoeffs(), fq.q());
            local.check(dev < WEIL_TOLERANCE, || format!("Weil deviation {dev:e} for {}", curve.poly()));
            match lfunc_coeffs_with(curve, table.symbols()) {
                Ok(l) => {
                    let ok = same_coeffs(&l, &data.with_infinity_factor(curve.lambda()));
                    local.check(ok, || format!("L = (1 - lambda u) L* for {}", curve.poly()));
                }
                Err(e) => err = Some(e),
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        // each checked curve compared 2g + 2 traces with point counts
        local.cases += checked * (2 * g as u64 + 2);
        Ok(local)
    })?;
    for p in parts {
        t.absorb(p);
    }
    Ok(())
}

fn charsum_suite(cfg: &RunConfig, t: &mut Tally) -> Result<(), AppError> {
    let fq = cfg.fq;
    let q = fq.q();
    let fits = |d: usize| (0..=d).map(|k| fq.checked_power(k).unwrap_or(u64::MAX)).try_fold(0u64, |a, b| a.checked_add(b)).is_some_and(|s| s <= MAX_TABLE_ENTRIES);
    let alpha_max = (1..=10).rev().find(|&d| fits(d)).unwrap_or(1);
    let table = IrreducibleTable::build(alpha_max, fq)?;
    for n in 1..=alpha_max.min(5) {
        for p in table.irreducibles(n).iter().take(64) {
            for alpha in 0..=alpha_max {
                let ok = sigma_brute(p, alpha, &table)? == sigma_closed(n, alpha, q);
                t.check(ok, || format!("sigma({p}; {alpha})"));
            }
        }
    }
    let n_top = match q {
        3 => 5,
        5 => 4,
        _ => (1..=5).rev().find(|&n| fq.checked_power(2 * n).is_some_and(|s| s <= 10_000_000)).unwrap_or(1),
    }
    .min(alpha_max);
    for n in 1..=n_top {
        let row = s_row(n + 2, n, &table)?;
        for (beta, &s) in row.iter().enumerate().skip(n) {
            t.check(s == 0, || format!("S({beta};{n}) = 0"));
        }
        for beta in 0..n {
            t.check(duality_holds(beta, n, &row, q), || format!("duality at beta={beta}, n={n}"));
        }
        t.check(row[0] == i128::from(table.prime_count(n)?), || format!("S(0;{n})"));
        t.check(row[n - 1] == s_endpoint(n, &table)?, || format!("S({};{n})", n - 1));
        if n <= 4 {
            for (beta, &s) in row.iter().enumerate().take(4.min(n + 2)) {
                let ok = s_by_reciprocity(beta, n, &table)? == s;
                t.check(ok, || format!("reciprocity transfer at beta={beta}, n={n}"));
            }
        }
    }
    Ok(())
}

fn ensemble_suite(cfg: &RunConfig, t: &mut Tally) -> Result<(), AppError> {
    let fq = cfg.fq;
    let g = cfg.g;
    let n_max = 2 * g + 2;
    let table = IrreducibleTable::build(n_max, fq)?;
    let spec = |k| FamilySpec::new(k, fq, g);
    let mut sums: Vec<(FamilyKind, TraceSums)> = Vec::new();
    for kind in FamilyKind::ALL {
        spec(kind).check_budget(cfg.budget)?;
        let scanner = FamilyScanner::new(spec(kind), &table, n_max, cfg.check_stride)?;
        let s = scan_family(&scanner, cfg.workers)?;
        t.check(u128::from(s.curves) == spec(kind).cardinality(), || format!("#{kind}"));
        sums.push((kind, s));
    }
    let avg = |kind: FamilyKind, n: usize| {
        let s = &sums.iter().find(|(k, _)| *k == kind).expect("all kinds scanned").1;
        FamilyAverage::from_sums(spec(kind), n, s)
    };
    let q = fq.q();
    for n in 1..=n_max {
        let hg = avg(FamilyKind::Hg, n);
        let monic = avg(FamilyKind::HgMonic, n);
        if n % 2 == 1 {
            t.check(hg.avg_scaled == int(0), || format!("Hg average at odd n={n}"));
            t.check(hg.avg_point_count() == int(pow(q, n)) + int(1), || format!("Hg point count at n={n}"));
        } else {
            t.check(hg.avg_scaled == monic.avg_scaled, || format!("Hg vs monic at n={n}"));
        }
        let odd = avg(FamilyKind::FOdd, n);
        let even = avg(FamilyKind::FEven, n);
        let union = avg(FamilyKind::Union, n);
        let (co, ce) = (int(spec(FamilyKind::FOdd).cardinality()), int(spec(FamilyKind::FEven).cardinality()));
        let mix: Rational = (&odd.avg_scaled * &co + &even.avg_scaled * &ce) / (co + ce);
        t.check(union.avg_scaled == mix, || format!("union as weighted combination at n={n}"));
        t.check(union.avg_scaled == monic.avg_scaled, || format!("union vs monic at n={n}"));
        for kind in FamilyKind::ALL {
            let dec = decompose_avg(&spec(kind), n, &table)?;
            t.check(dec.total() == avg(kind, n).avg_scaled, || format!("decomposition for {kind} at n={n}"));
        }
    }

    // sieve against direct enumeration, restricted so that the work stays
    // below ~2e7 symbol evaluations per family
    let mut fs: Vec<Poly> = Vec::new();
    for d in 1..=n_max {
        for p in table.irreducibles(d) {
            let mut f = p.clone();
            for _ in 1..=n_max / d {
                fs.push(f.clone());
                f = f.mul(p, fq);
            }
        }
    }
    fs.sort_by_key(|f| f.degree());
    for kind in FamilyKind::ALL {
        let s = spec(kind);
        let card = s.cardinality();
        let keep = ((20_000_000 / card.max(1)) as usize).min(fs.len());
        let fs = &fs[..keep];
        let mut totals = vec![0i128; fs.len()];
        for curve in s.enumerate(cfg.budget)? {
            for (tot, f) in totals.iter_mut().zip(fs) {
                *tot += i128::from(residue_symbol(curve.poly(), f, fq)?);
            }
        }
        for (tot, f) in totals.into_iter().zip(fs) {
            let ok = avg_chi_sieve(f, &s, &table)? == int(tot) / int(card);
            t.check(ok, || format!("sieve for {kind} at f={f}"));
        }
    }
    Ok(())
}

fn prime_polynomial_suite(cfg: &RunConfig, t: &mut Tally) -> Result<(), AppError> {
    let q = cfg.fq.q();
    for n in 2..=8 {
        let pi = prime_count_exact(q, n);
        let main = int(pow(q, n)) / int(n as u64);
        let diff = pi - main;
        // |diff| <= 2 q^(n/2) / n, squared to stay rational
        let lhs = &diff * &diff * int(n as u64) * int(n as u64);
        let rhs = int(4) * int(pow(q, n));
        t.check(lhs <= rhs, || format!("prime polynomial bound at n={n}"));
    }
    Ok(())
}
