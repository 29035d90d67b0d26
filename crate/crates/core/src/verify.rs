//! Cross-validation suites. Each suite walks a parameter grid, compares two
//! or more independent computations at every point, and reports the first
//! disagreement in grid order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bqa::Resolution;
use crate::classifier::{is_drf_formula, ClassRecord};
use crate::cluster::bruteforce_with;
use crate::constructions::{tubular_n, wild_family_n, TubularType};
use crate::error::{Error, Result};
use crate::nakayama::{NakAlgebra, NakEngine, NakModule};
use crate::polygon::{
    centrangulation_formula, centrangulation_in, criterion_invariant_exists, disangulation_formula,
    disangulation_in, enumerate_angulations, gcd_equivalence_holds, invariant_angulation_in,
    maximal_noncrossing_sets, rotate, PolygonCtx,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Threeway,
    Points,
    Constructions,
    Engine,
    Polygon,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Threeway,
        Suite::Points,
        Suite::Constructions,
        Suite::Engine,
        Suite::Polygon,
        Suite::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Threeway => "threeway",
            Suite::Points => "points",
            Suite::Constructions => "constructions",
            Suite::Engine => "engine",
            Suite::Polygon => "polygon",
            Suite::Lemmas => "lemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::input(format!("unknown suite {s:?}")))
    }
}

/// Grid bounds for the suites. The defaults are the desk-scale bounds used
/// by the acceptance run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub brute_n_max: usize,
    pub brute_loewy_max: usize,
    pub brute_d_max: usize,
    /// Largest polygon for the invariant-angulation scan and Fuss–Catalan counts.
    pub corners_max: usize,
    pub polygon_n_max: usize,
    /// Largest polygon for the exhaustive maximal-set search and the lemmas.
    pub small_corners_max: usize,
    pub engine_n_max: usize,
    pub engine_loewy_max: usize,
    pub engine_degree_max: usize,
    pub gcd_d_max: usize,
    pub gcd_loewy_max: usize,
    pub gcd_n_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_n_max: 6,
            brute_loewy_max: 4,
            brute_d_max: 5,
            corners_max: 14,
            polygon_n_max: 12,
            small_corners_max: 12,
            engine_n_max: 4,
            engine_loewy_max: 4,
            engine_degree_max: 4,
            gcd_d_max: 8,
            gcd_loewy_max: 8,
            gcd_n_max: 40,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn from_suites(suites: Vec<SuiteReport>) -> Self {
        VerifyReport {
            passed: suites.iter().all(|s| s.passed),
            suites,
        }
    }
}

/// Outcome of one grid point: how many comparisons it made, and a
/// description of the first mismatch.
type Cell = (usize, Option<String>);

fn merge(name: &str, start: Instant, cells: Vec<Cell>) -> SuiteReport {
    let checks = cells.iter().map(|c| c.0).sum();
    let counterexample = cells.into_iter().find_map(|c| c.1);
    SuiteReport {
        suite: name.to_string(),
        passed: counterexample.is_none(),
        checks,
        counterexample,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Compares `got` with `want` and describes a mismatch.
fn expect<T: PartialEq + fmt::Debug>(
    what: impl FnOnce() -> String,
    got: T,
    want: T,
) -> Option<String> {
    (got != want).then(|| format!("{}: got {got:?}, expected {want:?}", what()))
}

pub fn run(suites: &[Suite], limits: &Limits) -> Result<VerifyReport> {
    let reports = suites
        .iter()
        .map(|&s| run_suite(s, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport::from_suites(reports))
}

pub fn run_suite(suite: Suite, limits: &Limits) -> Result<SuiteReport> {
    let start = Instant::now();
    let cells = match suite {
        Suite::Threeway => threeway(limits)?,
        Suite::Points => points()?,
        Suite::Constructions => constructions()?,
        Suite::Engine => engine(limits)?,
        Suite::Polygon => polygon(limits),
        Suite::Lemmas => lemmas(limits)?,
    };
    Ok(merge(suite.name(), start, cells))
}

fn brute_vs_formula(n: usize, loewy: usize, d_max: usize) -> Result<Cell> {
    let engine = NakEngine::new(NakAlgebra::new(n, loewy)?);
    let mut checks = 0;
    for d in 1..=d_max {
        let brute = bruteforce_with(&engine, d)?.drf;
        let formula = is_drf_formula(n, loewy, d)?.drf;
        checks += 2;
        if let Some(e) = expect(
            || format!("brute force at n={n} loewy={loewy} d={d}"),
            brute,
            formula,
        ) {
            return Ok((checks, Some(e)));
        }
        if let Some(e) = expect(
            || format!("polygon criterion at n={n} loewy={loewy} d={d}"),
            criterion_invariant_exists(d, loewy, n),
            formula,
        ) {
            return Ok((checks, Some(e)));
        }
    }
    Ok((checks, None))
}

fn invariant_scan(ctx: PolygonCtx, n_max: usize) -> Cell {
    let all = enumerate_angulations(&ctx);
    for n in 1..=n_max {
        let (found, witness) = invariant_angulation_in(&ctx, &all, n * (ctx.d - 1));
        if let Some(w) = &witness {
            if rotate(&ctx, w, (n * (ctx.d - 1)) as i64) != *w {
                return (
                    n,
                    Some(format!("witness at {ctx:?} n={n} is not invariant")),
                );
            }
        }
        let want = criterion_invariant_exists(ctx.d, ctx.pieces, n);
        if let Some(e) = expect(
            || {
                format!(
                    "invariant angulation at d={} pieces={} n={n}",
                    ctx.d, ctx.pieces
                )
            },
            found,
            want,
        ) {
            return (n, Some(e));
        }
    }
    (n_max, None)
}

fn threeway(limits: &Limits) -> Result<Vec<Cell>> {
    let grid: Vec<(usize, usize)> = (1..=limits.brute_n_max)
        .flat_map(|n| (2..=limits.brute_loewy_max).map(move |l| (n, l)))
        .collect();
    let mut cells = grid
        .par_iter()
        .map(|&(n, l)| brute_vs_formula(n, l, limits.brute_d_max))
        .collect::<Result<Vec<_>>>()?;
    let contexts = PolygonCtx::all_up_to(limits.corners_max);
    cells.extend(
        contexts
            .par_iter()
            .map(|&ctx| invariant_scan(ctx, limits.polygon_n_max))
            .collect::<Vec<_>>(),
    );
    Ok(cells)
}

fn points() -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    let mut check = |what: String, got: bool, want: bool| {
        cells.push((1, expect(|| what, got, want)));
    };
    for (n, l, d, want) in [(2, 2, 2, true), (1, 2, 2, false)] {
        let engine = NakEngine::new(NakAlgebra::new(n, l)?);
        check(
            format!("formula ({n},{l},{d})"),
            is_drf_formula(n, l, d)?.drf,
            want,
        );
        check(
            format!("brute force ({n},{l},{d})"),
            bruteforce_with(&engine, d)?.drf,
            want,
        );
    }
    for n in 3..=6 {
        let engine = NakEngine::new(NakAlgebra::new(n, n - 1)?);
        check(
            format!("formula ({n},{},3)", n - 1),
            is_drf_formula(n, n - 1, 3)?.drf,
            true,
        );
        check(
            format!("brute force ({n},{},3)", n - 1),
            bruteforce_with(&engine, 3)?.drf,
            true,
        );
    }
    for (d, l) in [(2, 1), (2, 2), (3, 1), (4, 1)] {
        let n = d * l;
        let engine = NakEngine::new(NakAlgebra::new(n, 2)?);
        let r = bruteforce_with(&engine, d)?;
        check(
            format!("formula ({n},2,{d})"),
            is_drf_formula(n, 2, d)?.drf,
            true,
        );
        check(format!("brute force ({n},2,{d})"), r.drf, true);
        let size = r.witness.map_or(0, |w| w.len());
        check(
            format!("witness size {size} for ({n},2,{d})"),
            size == (d + 1) * l,
            true,
        );
    }
    Ok(cells)
}

fn constructions() -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    for ty in TubularType::ALL {
        for d in 2..=12 {
            let p = ty.weight();
            let want = p * (d - 1) / (2 * p).gcd(&(d + 1));
            cells.push((
                1,
                expect(|| format!("tubular {ty} d={d}"), tubular_n(ty, d)?, want),
            ));
        }
    }
    for m in 2..=10 {
        for l in 1..=5 {
            cells.push((
                1,
                expect(
                    || format!("wild m={m} d=2 ell={l}"),
                    wild_family_n(m, 2, l)?,
                    4 * l,
                ),
            ));
            cells.push((
                1,
                expect(
                    || format!("wild m={m} d={} ell={l}", 3 * m - 2),
                    wild_family_n(m, 3 * m - 2, l)?,
                    m * l,
                ),
            ));
        }
    }
    Ok(cells)
}

/// Resolution-route Ext against the stable-Hom route, and the combinatorial
/// Ω, ν, τ against the engine.
fn engine_cell(n: usize, loewy: usize, degree_max: usize) -> Result<Cell> {
    let engine = NakEngine::new(NakAlgebra::new(n, loewy)?);
    let alg = engine.algebra();
    let mut checks = 0;
    let modules = engine.modules().to_vec();
    for &x in &modules {
        let mut res = Resolution::new(engine.to_representation(x)?);
        for &y in &modules {
            let ry = engine.representation(y);
            for i in 1..=degree_max {
                checks += 1;
                let want = engine.ext_dim_nak(x, y, i)?;
                let got = res.ext_dim(ry, i)?;
                if let Some(e) = expect(
                    || format!("Ext^{i}({x}, {y}) over ({n},{loewy})"),
                    got,
                    want,
                ) {
                    return Ok((checks, Some(e)));
                }
            }
            if let Some(tx) = alg.tau(x) {
                checks += 1;
                let ar = engine.stable_hom_dim(y, tx);
                if let Some(e) = expect(
                    || format!("AR formula for ({x}, {y}) over ({n},{loewy})"),
                    engine.ext_dim_nak(x, y, 1)?,
                    ar,
                ) {
                    return Ok((checks, Some(e)));
                }
            }
        }
        checks += 3;
        let omega = engine.engine_omega(x)?;
        if let Some(e) = expect(|| format!("Ω {x} over ({n},{loewy})"), omega, alg.omega(x)) {
            return Ok((checks, Some(e)));
        }
        let nu = engine.engine_nu(x)?;
        if let Some(e) = expect(|| format!("ν {x} over ({n},{loewy})"), nu, alg.nu(x)) {
            return Ok((checks, Some(e)));
        }
        let tau = engine_tau(&engine, x)?;
        if let Some(e) = expect(|| format!("τ {x} over ({n},{loewy})"), tau, alg.tau(x)) {
            return Ok((checks, Some(e)));
        }
    }
    Ok((checks, None))
}

/// τ = Ω²ν computed entirely by the engine.
fn engine_tau(engine: &NakEngine, x: NakModule) -> Result<Option<NakModule>> {
    let Some(w) = engine.engine_omega(engine.engine_nu(x)?)? else {
        return Ok(None);
    };
    engine.engine_omega(w)
}

fn engine(limits: &Limits) -> Result<Vec<Cell>> {
    let grid: Vec<(usize, usize)> = (1..=limits.engine_n_max)
        .flat_map(|n| (1..=limits.engine_loewy_max).map(move |l| (n, l)))
        .collect();
    grid.par_iter()
        .map(|&(n, l)| engine_cell(n, l, limits.engine_degree_max))
        .collect()
}

/// Independent count: (1/((d-1)ℓ+1))·binom(dℓ, ℓ).
fn fuss_catalan(d: usize, pieces: usize) -> u128 {
    let (d, l) = (d as u128, pieces as u128);
    let mut binom: u128 = 1;
    for k in 0..l {
        binom = binom * (d * l - k) / (k + 1);
    }
    binom / ((d - 1) * l + 1)
}

fn polygon(limits: &Limits) -> Vec<Cell> {
    PolygonCtx::all_up_to(limits.corners_max)
        .par_iter()
        .map(|&ctx| {
            let all = enumerate_angulations(&ctx);
            let what = |s: &str| format!("{s} at d={} pieces={}", ctx.d, ctx.pieces);
            if let Some(e) = expect(
                || what("angulation count"),
                all.len() as u128,
                fuss_catalan(ctx.d, ctx.pieces),
            ) {
                return (1, Some(e));
            }
            let n = ctx.corners() as i64;
            if let Some(a) = all.iter().find(|a| rotate(&ctx, a, n) != **a) {
                return (
                    2,
                    Some(format!("{}: {a:?}", what("ρ^N moves an angulation"))),
                );
            }
            if ctx.corners() > limits.small_corners_max {
                return (2, None);
            }
            let maximal = maximal_noncrossing_sets(&ctx);
            if let Some(a) = maximal.iter().find(|a| a.len() != ctx.pieces - 1) {
                return (
                    3,
                    Some(format!("{}: {a:?}", what("maximal set of wrong size"))),
                );
            }
            (
                3,
                expect(|| what("maximal set count"), maximal.len(), all.len()),
            )
        })
        .collect()
}

fn lemmas(limits: &Limits) -> Result<Vec<Cell>> {
    let mut cells: Vec<Cell> = PolygonCtx::all_up_to(limits.small_corners_max)
        .par_iter()
        .map(|&ctx| -> Result<Cell> {
            let all = enumerate_angulations(&ctx);
            let n = ctx.corners();
            let mut checks = 0;
            for q in (1..=n).filter(|q| n % q == 0) {
                checks += 1;
                let want = centrangulation_formula(&ctx, q)?;
                if let Some(e) = expect(
                    || format!("centrangulation at d={} pieces={} q={q}", ctx.d, ctx.pieces),
                    centrangulation_in(&ctx, &all, q),
                    want,
                ) {
                    return Ok((checks, Some(e)));
                }
            }
            checks += 1;
            let e = expect(
                || format!("disangulation at d={} pieces={}", ctx.d, ctx.pieces),
                disangulation_in(&ctx, &all).0,
                disangulation_formula(&ctx)?,
            );
            Ok((checks, e))
        })
        .collect::<Result<_>>()?;
    for d in 1..=limits.gcd_d_max {
        for l in 1..=limits.gcd_loewy_max {
            let bad = (1..=limits.gcd_n_max).find(|&n| !gcd_equivalence_holds(d, l, n));
            cells.push((
                limits.gcd_n_max,
                bad.map(|n| format!("gcd equivalence fails at d={d} pieces={l} n={n}")),
            ));
        }
    }
    Ok(cells)
}

/// Checks a supplied classification table: every record must match the
/// formula exactly, and records inside the brute-force grid must also
/// match the brute-force search.
pub fn check_table(records: &[ClassRecord], limits: &Limits) -> Result<SuiteReport> {
    let start = Instant::now();
    let cells = records
        .par_iter()
        .map(|r| -> Result<Cell> {
            let want = is_drf_formula(r.n, r.loewy, r.d)?;
            let tag = || format!("record n={} loewy={} d={}", r.n, r.loewy, r.d);
            // CSV tables do not carry the outside-hypothesis flag.
            let got = ClassRecord {
                outside_hypothesis: want.outside_hypothesis,
                ..*r
            };
            if let Some(e) = expect(tag, got, want) {
                return Ok((1, Some(e)));
            }
            let in_grid = r.n <= limits.brute_n_max
                && (2..=limits.brute_loewy_max).contains(&r.loewy)
                && r.d <= limits.brute_d_max;
            if !in_grid {
                return Ok((1, None));
            }
            let engine = NakEngine::new(NakAlgebra::new(r.n, r.loewy)?);
            let brute = bruteforce_with(&engine, r.d)?.drf;
            Ok((
                2,
                expect(|| format!("brute force for {}", tag()), r.drf, brute),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge("table", start, cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Limits {
        Limits {
            brute_n_max: 3,
            brute_loewy_max: 3,
            brute_d_max: 3,
            corners_max: 9,
            polygon_n_max: 6,
            small_corners_max: 8,
            engine_n_max: 2,
            engine_loewy_max: 3,
            engine_degree_max: 3,
            gcd_d_max: 4,
            gcd_loewy_max: 4,
            gcd_n_max: 10,
        }
    }

    #[test]
    fn suites_pass_on_small_grid() {
        let report = run(&Suite::ALL, &small()).unwrap();
        for s in &report.suites {
            assert!(s.passed, "{s:?}");
            assert!(s.checks > 0, "{s:?}");
        }
        assert!(report.passed);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut table = crate::classifier::rf_table(3, 3, 3).unwrap();
        let report = check_table(&table, &small()).unwrap();
        assert!(report.passed, "{report:?}");
        let i = table
            .iter()
            .position(|r| r.n == 2 && r.loewy == 2 && r.d == 2)
            .unwrap();
        table[i].drf = false;
        let report = check_table(&table, &small()).unwrap();
        assert!(!report.passed);
        assert!(report.counterexample.unwrap().contains("n=2 loewy=2 d=2"));
    }

    #[test]
    fn fuss_catalan_small_values() {
        assert_eq!(fuss_catalan(2, 3), 5);
        assert_eq!(fuss_catalan(3, 2), 3);
        assert_eq!(fuss_catalan(2, 12), 208012);
    }
}
