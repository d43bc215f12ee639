//! Acceptance criteria, one line each. Runs as its own binary so the lines
//! are printed whether or not a criterion fails.

mod common;

use std::time::{Duration, Instant};

use leray::complex::SimplicialComplex;
use leray::harness::{self, Guards, Outcome};
use leray::helly::{check_amenta, check_hl, AtomFamily, AxisBox, BoxFamily};
use leray::homology::reduced_betti;
use leray::icss::e1_page;
use leray::leray::{check_chordal_characterization, leray_by_definition, leray_by_links};
use leray::multiproj::{extremal_example, fiber_bound, project, PartitionedComplex};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: leray::Error) -> String {
    e.to_string()
}

fn tally(outcomes: &[Outcome]) -> (usize, usize, usize, usize) {
    let checked = outcomes.iter().filter(|o| !o.is_skipped()).count();
    let skipped = outcomes.len() - checked;
    let failed = outcomes.iter().filter(|o| !o.holds()).count();
    let disagree = outcomes.iter().filter(|o| !o.oracle_agrees()).count();
    (checked, skipped, failed, disagree)
}

fn batch(outcomes: Vec<Outcome>, what: &str) -> Verdict {
    let (checked, skipped, failed, disagree) = tally(&outcomes);
    ensure(failed == 0 && disagree == 0, || {
        let first = outcomes.iter().find(|o| !o.holds() || !o.oracle_agrees());
        format!("{failed} violations, {disagree} oracle disagreements in {what}; first: {first:?}")
    })?;
    Ok(format!("{checked} claims hold on {what}, {skipped} skipped by guards"))
}

fn collect<T>(
    seeds: std::ops::Range<u64>,
    make: impl Fn(u64) -> leray::Result<T>,
    check: impl Fn(&T) -> leray::Result<Vec<Outcome>>,
) -> Result<Vec<Outcome>, String> {
    let mut out = Vec::new();
    for s in seeds {
        out.extend(check(&make(s).map_err(err)?).map_err(|e| format!("seed {s}: {e}"))?);
    }
    Ok(out)
}

fn sphere_homology() -> Verdict {
    for n in 2..=5 {
        let start = Instant::now();
        let b = reduced_betti(&SimplicialComplex::boundary_complex(n).map_err(err)?).map_err(err)?;
        let elapsed = start.elapsed();
        let expected: Vec<usize> = (0..=n - 2).map(|q| usize::from(q == n - 2)).collect();
        ensure(b.reduced == expected && b.minus_one == 0, || {
            format!("|A| = {n}: got {:?}", b.reduced)
        })?;
        ensure(elapsed < Duration::from_secs(1), || {
            format!("|A| = {n} took {elapsed:?}")
        })?;
    }
    Ok("boundary of the simplex on 2..5 vertices is a homology sphere".into())
}

fn leray_agreement() -> Verdict {
    let start = Instant::now();
    let mut exhaustive = 0;
    for n in 1..=5 {
        for facets in common::all_complexes(n) {
            let x = SimplicialComplex::from_facets(facets).map_err(err)?;
            let a = leray_by_definition(&x).map_err(err)?;
            let b = leray_by_links(&x).map_err(err)?;
            ensure(a.value == b.value, || {
                format!("{x:?}: {} by definition, {} by links", a.value, b.value)
            })?;
            ensure(a.recheck(&x).map_err(err)? && b.recheck(&x).map_err(err)?, || {
                format!("{x:?}: bad witness")
            })?;
            exhaustive += 1;
        }
    }
    let guards = Guards::default();
    let random = collect(
        0..200,
        |s| harness::leray_instance(s, 9),
        |x| harness::check_leray_agreement(x, &guards),
    )?;
    let (checked, skipped, failed, _) = tally(&random);
    ensure(failed == 0 && skipped == 0 && checked == 200, || {
        format!("{failed} disagreements, {skipped} skipped among random complexes")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "both algorithms agree on all {exhaustive} complexes on at most 5 vertices and 200 random ones ({:.1}s)",
        elapsed.as_secs_f64()
    ))
}

fn chordal() -> Verdict {
    let mut chordal = 0;
    for s in 0..100 {
        let g = harness::graph_instance(s, 9).map_err(err)?;
        let rep = check_chordal_characterization(&g).map_err(err)?;
        ensure(rep.holds, || format!("seed {s}: {rep:?}"))?;
        ensure(
            rep.chordal == common::chordal_by_cycles(g.vertex_count(), &g.edges()),
            || format!("seed {s}: chordality disagrees with the induced-cycle oracle"),
        )?;
        chordal += usize::from(rep.chordal);
    }
    Ok(format!("chordal iff L <= 1 on 100 graphs ({chordal} chordal)"))
}

fn extremal() -> Verdict {
    let mut seen = Vec::new();
    for (r, d) in [(2, 2), (2, 3), (3, 2)] {
        let start = Instant::now();
        let px = extremal_example(r, d).map_err(err)?;
        let lx = leray_by_links(px.complex()).map_err(err)?.value;
        let fb = fiber_bound(&px).map_err(err)?.r;
        let ly = leray_by_links(&project(&px)).map_err(err)?.value;
        let elapsed = start.elapsed();
        ensure(
            lx == d - 1 && fb == r && ly == r * d - 1 && ly == r * lx + r - 1,
            || format!("(r, d) = ({r}, {d}): L(X) = {lx}, r = {fb}, L(Y) = {ly}"),
        )?;
        ensure(elapsed < Duration::from_secs(300), || {
            format!("(r, d) = ({r}, {d}) took {elapsed:?}")
        })?;
        seen.push(format!("({r},{d}): {lx},{fb},{ly}"));
    }
    Ok(format!("L(X), r, L(pi(X)) = {}", seen.join("; ")))
}

fn projection_bound() -> Verdict {
    let guards = Guards::default();
    let out = collect(
        0..100,
        |s| harness::projection_instance(s, 9),
        |px| harness::check_lproj(px, &guards),
    )?;
    let tight = out.iter().filter_map(Outcome::claim).filter(|c| c.tight).count();
    batch(out, "100 partitioned complexes").map(|m| format!("{m}, {tight} tight"))
}

fn mps_vanishing() -> Verdict {
    let guards = Guards::default();
    let out = collect(
        0..50,
        |s| harness::mps_instance(s, 9),
        |pxs| harness::check_hmps(pxs, &guards),
    )?;
    batch(out, "50 pairs and triples")
}

fn intersections() -> Verdict {
    let guards = Guards::default();
    let out = collect(
        0..100,
        |s| harness::intersection_instance(s, 9),
        |xs| harness::check_inter(xs, &guards),
    )?;
    batch(out, "100 pairs")
}

fn icss() -> Verdict {
    let x = SimplicialComplex::from_facets([[0usize], [1]]).map_err(err)?;
    let px = PartitionedComplex::new(x, vec![vec![0, 1]]).map_err(err)?;
    let page = e1_page(&px).map_err(err)?;
    ensure(
        page.table == vec![vec![2], vec![1]] && page.column_r_vanishes() && page.euler_sum() == 1,
        || format!("two points over one part: {page:?}"),
    )?;
    let guards = Guards::default();
    let out = collect(
        0..100,
        |s| harness::projection_instance(s, 9),
        |px| harness::check_icss(px, &guards),
    )?;
    batch(out, "the 100 partitioned complexes").map(|m| format!("micro page {{(0,0): 2, (1,0): 1}}; {m}"))
}

fn helly() -> Verdict {
    let intervals = BoxFamily::new(
        1,
        [(0, 2), (1, 3), (4, 5)]
            .iter()
            .enumerate()
            .map(|(i, &(lo, hi))| (format!("I{}", i + 1), Some(AxisBox::from_ints(&[(lo, hi)]).unwrap())))
            .collect(),
    )
    .map_err(err)?;
    let h = check_hl(&intervals).map_err(err)?;
    ensure(h.helly.helly_number == 2 && h.holds, || format!("intervals: {h:?}"))?;
    let triangle = AtomFamily::new(
        3,
        vec![
            ("ab".into(), vec![0, 1]),
            ("bc".into(), vec![1, 2]),
            ("ca".into(), vec![2, 0]),
        ],
    )
    .map_err(err)?;
    let t = check_hl(&triangle).map_err(err)?;
    ensure(t.helly.helly_number == 3 && t.helly.bound == 3 && t.tight, || {
        format!("triangle: {t:?}")
    })?;
    let mut worst = [0usize; 2];
    for (slot, d) in [(0, 1), (1, 2)] {
        for s in 0..50 {
            let g = harness::amenta_instance(s, d, 2).map_err(err)?;
            let rep = check_amenta(&g).map_err(err)?;
            ensure(rep.holds && rep.chain_holds && rep.projection.holds, || {
                format!("d = {d}, seed {s}: {rep:?}")
            })?;
            ensure(rep.helly_number <= 2 * (d + 1), || {
                format!("d = {d}, seed {s}: h = {}", rep.helly_number)
            })?;
            worst[slot] = worst[slot].max(rep.helly_number);
        }
    }
    Ok(format!(
        "intervals h = 2, triangle h = 3 = 1 + 2; 50 + 50 (F,2)-families with max h = {} (d = 1) and {} (d = 2), chains hold",
        worst[0], worst[1]
    ))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut sink = Vec::new();
    let code = leray::cli::run_with(args, &mut std::io::empty(), &mut out, &mut sink);
    (code, out)
}

fn determinism() -> Verdict {
    let batches: [&[&str]; 4] = [
        &[
            "leray",
            "check",
            "lproj",
            "--seed",
            "11",
            "--count",
            "30",
            "--no-timings",
        ],
        &[
            "leray",
            "check",
            "hmps",
            "--seed",
            "11",
            "--count",
            "20",
            "--no-timings",
        ],
        &[
            "leray",
            "check",
            "icss",
            "--seed",
            "11",
            "--count",
            "10",
            "--no-timings",
        ],
        &[
            "leray",
            "check",
            "amenta",
            "--seed",
            "11",
            "--count",
            "10",
            "--d",
            "2",
            "--no-timings",
        ],
    ];
    for args in batches {
        let (c1, a) = run_cli(args);
        let (c2, b) = run_cli(&[args, &["--workers", "1"]].concat());
        let (c3, c) = run_cli(&[args, &["--workers", "2"]].concat());
        ensure(c1 == 0 && c2 == 0 && c3 == 0, || {
            format!("{args:?}: exit codes {c1}, {c2}, {c3}")
        })?;
        ensure(!a.is_empty() && a == b && a == c, || {
            format!("{args:?}: reports differ")
        })?;
    }
    Ok("4 seeded batches byte-identical across 3 runs and worker counts".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("homology of simplex boundaries", sphere_homology),
        ("leray algorithms agree", leray_agreement),
        ("chordal characterization", chordal),
        ("extremal example attains the projection bound", extremal),
        ("projection bound on random instances", projection_bound),
        ("multiple-point vanishing", mps_vanishing),
        ("intersection bound", intersections),
        ("spectral sequence consistency", icss),
        ("helly layer", helly),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria pass", criteria.len());
}
