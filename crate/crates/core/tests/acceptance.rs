//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Expected values come from small oracles written here, not from
//! the library's own closed forms.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nakrf::bqa::Resolution;
use nakrf::cluster::{bruteforce_with, is_drf_bruteforce};
use nakrf::constructions::{preproj_nakayama, tubular_n, wild_family_n, TubularType};
use nakrf::polygon::{
    centrangulation_exists, disangulation_exists, enumerate_angulations, gcd_equivalence_holds,
    invariant_angulation_exists, maximal_noncrossing_sets, rotate,
};
use nakrf::{is_drf_formula, NakAlgebra, NakEngine, NakModule, PolygonCtx};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// N | 2n or N | tn, written out from the statement.
fn divisibility(n: usize, l: usize, d: usize) -> bool {
    let big_n = l * (d - 1) + 2;
    let t = gcd(d + 1, 2 * (l - 1));
    (2 * n) % big_n == 0 || (t * n) % big_n == 0
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

struct Outcome {
    failures: Vec<String>,
    checks: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=6 {
        for l in 2..=4 {
            let engine = NakEngine::new(NakAlgebra::new(n, l).unwrap());
            for d in 1..=5 {
                let brute = bruteforce_with(&engine, d).unwrap().drf;
                let formula = is_drf_formula(n, l, d).unwrap().drf;
                o.check(brute == formula, || {
                    format!("brute {brute} vs formula {formula} at ({n},{l},{d})")
                });
                o.check(formula == divisibility(n, l, d), || {
                    format!("formula disagrees with oracle at ({n},{l},{d})")
                });
            }
        }
    }
    let mut contexts: Vec<PolygonCtx> = (1..=12).map(|l| PolygonCtx::new(1, l).unwrap()).collect();
    contexts.extend(PolygonCtx::all_up_to(14));
    for ctx in contexts {
        assert!(ctx.corners() <= 14);
        for n in 1..=12 {
            let m = n * (ctx.d - 1);
            let (found, _) = invariant_angulation_exists(&ctx, m);
            let want = divisibility(n, ctx.pieces, ctx.d);
            o.check(found == want, || {
                format!(
                    "invariant angulation {found} vs criterion {want} at d={} pieces={} n={n}",
                    ctx.d, ctx.pieces
                )
            });
        }
    }
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    for (n, l, d, want) in [(2, 2, 2, true), (1, 2, 2, false)] {
        o.check(is_drf_formula(n, l, d).unwrap().drf == want, || {
            format!("formula ({n},{l},{d})")
        });
        o.check(is_drf_bruteforce(n, l, d).unwrap().drf == want, || {
            format!("brute force ({n},{l},{d})")
        });
    }
    for n in 3..=6 {
        o.check(is_drf_formula(n, n - 1, 3).unwrap().drf, || {
            format!("formula Nakayama({n},{})", n - 1)
        });
        o.check(is_drf_bruteforce(n, n - 1, 3).unwrap().drf, || {
            format!("brute force Nakayama({n},{})", n - 1)
        });
        o.check(preproj_nakayama(n).unwrap().verdict.unwrap().drf, || {
            format!("preproj report n={n}")
        });
    }
    for (d, l) in [(2, 1), (2, 2), (3, 1), (4, 1)] {
        let r = is_drf_bruteforce(d * l, 2, d).unwrap();
        o.check(is_drf_formula(d * l, 2, d).unwrap().drf, || {
            format!("formula ({},2,{d})", d * l)
        });
        let size = r.witness.as_ref().map_or(0, Vec::len);
        o.check(r.drf && size == (d + 1) * l, || {
            format!("witness of size {size} for ({},2,{d})", d * l)
        });
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    // n = p(d-1)/gcd(2p, d+1), per type.
    let table = [
        (TubularType::T2222, 2),
        (TubularType::T333, 3),
        (TubularType::T244, 4),
        (TubularType::T236, 6),
    ];
    for (ty, p) in table {
        for d in [2, 3] {
            let want = p * (d - 1) / gcd(2 * p, d + 1);
            let got = tubular_n(ty, d).unwrap();
            o.check(got == want, || {
                format!("tubular {ty} d={d}: {got} vs {want}")
            });
        }
    }
    for (ty, d, want) in [
        (TubularType::T333, 2, 1),
        (TubularType::T2222, 3, 1),
        (TubularType::T236, 2, 2),
        (TubularType::T244, 3, 2),
    ] {
        o.check(tubular_n(ty, d).unwrap() == want, || {
            format!("tubular {ty} d={d} != {want}")
        });
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    for m in 2..=10 {
        for l in 1..=5 {
            o.check(wild_family_n(m, 2, l).unwrap() == 4 * l, || {
                format!("wild m={m} d=2 ell={l}")
            });
            o.check(wild_family_n(m, 3 * m - 2, l).unwrap() == m * l, || {
                format!("wild m={m} d={} ell={l}", 3 * m - 2)
            });
        }
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=4 {
        for l in 1..=4 {
            let engine = NakEngine::new(NakAlgebra::new(n, l).unwrap());
            let alg = engine.algebra();
            let perm = engine.engine_nakayama_permutation().unwrap();
            for &x in engine.modules() {
                let mut res = Resolution::new(engine.to_representation(x).unwrap());
                for &y in engine.modules() {
                    for i in 1..=4 {
                        let a = res.ext_dim(engine.representation(y), i).unwrap();
                        let b = engine.ext_dim_nak(x, y, i).unwrap();
                        o.check(a == b, || {
                            format!("Ext^{i}({x},{y}) over ({n},{l}): resolution {a}, stable {b}")
                        });
                    }
                }
                // Ω, ν, τ from the engine against M(a+t, ℓ-t), M(a-ℓ+1, t), M(a+1, t).
                let (a, t) = (x.top, x.len);
                let projective = t == l;
                let omega = engine.engine_omega(x).unwrap();
                let want = (!projective).then(|| NakModule::new((a + t) % n, l - t));
                o.check(omega == want, || format!("Ω {x} over ({n},{l})"));
                let nu = NakModule::new(perm[a], t);
                let want = NakModule::new((a + n * l + 1 - l) % n, t);
                o.check(nu == want && alg.nu(x) == want, || {
                    format!("ν {x} over ({n},{l})")
                });
                let tau = engine
                    .engine_omega(nu)
                    .unwrap()
                    .and_then(|w| engine.engine_omega(w).unwrap());
                let want = (!projective).then(|| NakModule::new((a + 1) % n, t));
                o.check(tau == want && alg.tau(x) == want, || {
                    format!("τ {x} over ({n},{l})")
                });
                o.check(alg.omega(x) == omega, || {
                    format!("combinatorial Ω {x} over ({n},{l})")
                });
            }
        }
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for ctx in PolygonCtx::all_up_to(14) {
        let (d, l) = (ctx.d as u128, ctx.pieces as u128);
        let want = binom(d * l, l) / ((d - 1) * l + 1);
        let all = enumerate_angulations(&ctx);
        o.check(all.len() as u128 == want, || {
            format!("count {} vs {want} at {ctx:?}", all.len())
        });
        let n = ctx.corners() as i64;
        o.check(all.iter().all(|a| rotate(&ctx, a, n) == *a), || {
            format!("ρ^N not identity at {ctx:?}")
        });
        if ctx.corners() <= 12 {
            let maximal = maximal_noncrossing_sets(&ctx);
            o.check(maximal.iter().all(|a| a.len() == ctx.pieces - 1), || {
                format!("maximal set size at {ctx:?}")
            });
            o.check(maximal.len() as u128 == want, || {
                format!("maximal set count at {ctx:?}")
            });
        }
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    for ctx in PolygonCtx::all_up_to(12) {
        let n = ctx.corners();
        for q in (1..=n).filter(|q| n % q == 0) {
            let r = centrangulation_exists(&ctx, q);
            o.check(r.is_ok(), || {
                format!("centrangulation routes at {ctx:?} q={q}: {r:?}")
            });
        }
        let r = disangulation_exists(&ctx);
        o.check(r.is_ok(), || {
            format!("disangulation routes at {ctx:?}: {r:?}")
        });
    }
    for d in 1..=8 {
        for l in 1..=8 {
            for n in 1..=40 {
                let big_n = (d - 1) * l + 2;
                let r = gcd(d + 1, l - 1);
                let t = gcd(d + 1, 2 * (l - 1));
                let lhs = (n * r * (d - 1)) % big_n == 0;
                let rhs = (n * t) % big_n == 0;
                o.check(lhs == rhs, || {
                    format!("gcd equivalence at d={d} ell={l} n={n}")
                });
                o.check(gcd_equivalence_holds(d, l, n), || {
                    format!("library gcd check at d={d} ell={l} n={n}")
                });
            }
        }
    }
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 7] = [
        (
            "three-way agreement",
            criterion_1,
            Some(Duration::from_secs(600)),
        ),
        ("point values", criterion_2, None),
        ("tubular table", criterion_3, None),
        ("wild family", criterion_4, None),
        (
            "engine consistency",
            criterion_5,
            Some(Duration::from_secs(300)),
        ),
        ("polygon structure", criterion_6, None),
        ("lemma-level checks", criterion_7, None),
    ];
    let mut all_pass = true;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = budget.is_none_or(|b| elapsed <= b);
        let pass = outcome.failures.is_empty() && in_time;
        all_pass &= pass;
        println!(
            "criterion {}: {} {name} ({} checks, {} failures, {:.2}s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            outcome.checks,
            outcome.failures.len(),
            elapsed.as_secs_f64()
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {f}");
        }
        if !in_time {
            println!("    over time budget of {}s", budget.unwrap().as_secs());
        }
    }
    println!("criterion 8: excluded (not reproducible at desk scale)");
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
