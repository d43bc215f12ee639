//! Seeded instance generators and claim checks shared by the `check`
//! commands and the test suites.
//!
//! Every generator derives all of its randomness from one `u64` seed, so a
//! batch is reproduced exactly by its first seed and its count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{Graph, SimplicialComplex, DEFAULT_SIMPLEX_GUARD};
use crate::error::{Error, Result};
use crate::helly::{check_amenta, check_hl, random_box_family, random_fr_family, BoxFamily, FrFamily, SetFamily};
use crate::icss::{check_alt_chain_iso_with, e1_page_with, euler_report, page_vanishing_report, IcssConfig};
use crate::leray::{leray_by_definition_with, leray_by_links_with, LerayConfig, DEFAULT_DEFINITION_CAP};
use crate::multiproj::{
    check_intersection_bound, check_mps_vanishing, check_projection_theorem, multiple_point_complex_with,
    random_complex, random_partitioned_complex, PartitionedComplex, DEFAULT_MPC_VERTEX_GUARD,
};

/// Default cap on simplices materialized for the `D^k` comparison.
pub const DEFAULT_MATERIALIZE_GUARD: usize = 200_000;

/// Default vertex bound for generated instances.
pub const DEFAULT_MAX_VERTICES: usize = 9;

/// Resource limits for a check run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub simplex: usize,
    pub mpc_vertices: usize,
    pub definition_cap: usize,
    pub materialize: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            simplex: DEFAULT_SIMPLEX_GUARD,
            mpc_vertices: DEFAULT_MPC_VERTEX_GUARD,
            definition_cap: DEFAULT_DEFINITION_CAP,
            materialize: DEFAULT_MATERIALIZE_GUARD,
        }
    }
}

impl Guards {
    fn leray(&self) -> LerayConfig {
        LerayConfig {
            definition_cap: self.definition_cap,
            simplex_guard: self.simplex,
        }
    }

    fn icss(&self) -> IcssConfig {
        IcssConfig {
            simplex_guard: self.simplex,
            vertex_guard: self.mpc_vertices,
        }
    }
}

/// One verified inequality or identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: &'static str,
    pub statement: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub tight: bool,
    /// Agreement of an independent recomputation, where one was run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    pub details: Value,
}

/// A claim that could not be checked within the guards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub claim: &'static str,
    pub statement: &'static str,
    pub skipped: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Checked(Claim),
    Skipped(Skip),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        match self {
            Outcome::Checked(c) => c.holds,
            Outcome::Skipped(_) => true,
        }
    }

    pub fn oracle_agrees(&self) -> bool {
        match self {
            Outcome::Checked(c) => c.oracle_agrees != Some(false),
            Outcome::Skipped(_) => true,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Outcome::Skipped(_))
    }

    pub fn claim(&self) -> Option<&Claim> {
        match self {
            Outcome::Checked(c) => Some(c),
            Outcome::Skipped(_) => None,
        }
    }
}

/// True for errors raised by a resource guard rather than by bad input.
pub fn is_guard_error(e: &Error) -> bool {
    matches!(e, Error::CapExceeded { .. } | Error::SimplexGuard { .. })
}

fn guarded(claim: &'static str, statement: &'static str, run: impl FnOnce() -> Result<Claim>) -> Result<Outcome> {
    match run() {
        Ok(c) => Ok(Outcome::Checked(c)),
        Err(e) if is_guard_error(&e) => Ok(Outcome::Skipped(Skip {
            claim,
            statement,
            skipped: e.to_string(),
        })),
        Err(e) => Err(e),
    }
}

fn int(v: usize) -> i64 {
    v as i64
}

fn part_sizes(rng: &mut ChaCha8Rng, max_vertices: usize) -> Vec<usize> {
    let m = rng.gen_range(1..=4);
    let mut sizes: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=3)).collect();
    while sizes.iter().sum::<usize>() > max_vertices.max(1) {
        if let Some(big) = sizes.iter_mut().filter(|s| **s > 1).max() {
            *big -= 1;
        } else {
            sizes.pop();
        }
    }
    sizes
}

/// A random partitioned complex: at most 4 parts of at most 3 vertices,
/// dimension at most 2.
pub fn projection_instance(seed: u64, max_vertices: usize) -> Result<PartitionedComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes = part_sizes(&mut rng, max_vertices);
    let dimension = rng.gen_range(0..=2);
    let density = rng.gen_range(0.2..0.9);
    random_partitioned_complex(&sizes, dimension, density, rng.gen())
}

/// Two or three random complexes over one shared partition.
pub fn mps_instance(seed: u64, max_vertices: usize) -> Result<Vec<PartitionedComplex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(2..=3);
    let budget = match k {
        2 => max_vertices.min(6),
        _ => max_vertices.min(4),
    };
    let sizes = part_sizes(&mut rng, budget);
    (0..k)
        .map(|_| {
            let dimension = rng.gen_range(0..=2);
            let density = rng.gen_range(0.2..0.9);
            random_partitioned_complex(&sizes, dimension, density, rng.gen())
        })
        .collect()
}

/// A pair of random complexes on one vertex set of at most `max_vertices`.
pub fn intersection_instance(seed: u64, max_vertices: usize) -> Result<Vec<SimplicialComplex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices.max(1));
    (0..2)
        .map(|_| {
            let dimension = rng.gen_range(1..=3);
            let density = rng.gen_range(0.2..0.9);
            random_complex(n, dimension, density, rng.gen())
        })
        .collect()
}

/// A random complex on at most `max_vertices` vertices.
pub fn leray_instance(seed: u64, max_vertices: usize) -> Result<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices.max(1));
    let dimension = rng.gen_range(1..=4);
    let density = rng.gen_range(0.1..0.9);
    random_complex(n, dimension, density, rng.gen())
}

/// A random graph on at most `max_vertices` vertices.
pub fn graph_instance(seed: u64, max_vertices: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices.max(1));
    let density = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen::<f64>() < density {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Between 3 and 8 random boxes in `[0, 10]^d`.
pub fn helly_instance(seed: u64, d: usize) -> Result<BoxFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=8);
    random_box_family(d, n, 10, rng.gen())
}

/// A random `(F, r)`-family of 3 to 6 members in `[0, 12]^d`.
pub fn amenta_instance(seed: u64, d: usize, r: usize) -> Result<FrFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(3..=6);
    random_fr_family(d, r, m, 12, rng.gen())
}

pub const LERAY_AGREE: &str = "leray by definition = leray by links";
pub const LPROJ: &str = "L(pi(X)) <= r L(X) + r - 1";
pub const HMPS: &str = "reduced H_j(M(X_1, ..., X_k)) = 0 for j >= L(X_1) + ... + L(X_k)";
pub const INTER: &str = "L(X_1 cap ... cap X_k) <= L(X_1) + ... + L(X_k)";
pub const HL: &str = "h(F) <= 1 + L(N(F))";
pub const AMENTA: &str = "h(G) <= r (d + 1)";
pub const AMENTA_CHAIN: &str = "h(G) <= 1 + L(N(G)) = 1 + L(pi(X)) <= r L(X) + r <= r (d + 1)";
pub const AMENTA_PIECES: &str = "pi(X) = N(G) with r(X, pi) <= r";
pub const ICSS_COLUMN: &str = "E1_{r,q} = 0 for every q";
pub const ICSS_REGION: &str = "E1_{p,q} = 0 for p <= r - 1 and p + q >= r L(X) + r - 1";
pub const ICSS_EULER: &str = "chi(Y) = sum of (-1)^(p+q) dim E1_{p,q}";
pub const ICSS_ALT: &str = "Alt C_q(D^k) = Alt C_q(M_k) for 1 <= k <= r";

/// The two Leray algorithms on one complex.
pub fn check_leray_agreement(x: &SimplicialComplex, guards: &Guards) -> Result<Vec<Outcome>> {
    let cfg = guards.leray();
    Ok(vec![guarded("leray", LERAY_AGREE, || {
        let a = leray_by_definition_with(x, &cfg)?;
        let b = leray_by_links_with(x, &cfg)?;
        Ok(Claim {
            claim: "leray",
            statement: LERAY_AGREE,
            lhs: int(a.value),
            rhs: int(b.value),
            holds: a.value == b.value,
            tight: a.value == b.value,
            oracle_agrees: Some(a.value == b.value && a.recheck(x)? && b.recheck(x)?),
            details: json!({ "definition": a, "links": b }),
        })
    })?])
}

fn definition_oracle(x: &SimplicialComplex, value: usize, guards: &Guards) -> Result<Option<bool>> {
    if x.vertex_count() > guards.definition_cap {
        return Ok(None);
    }
    Ok(Some(leray_by_definition_with(x, &guards.leray())?.value == value))
}

pub fn check_lproj(px: &PartitionedComplex, guards: &Guards) -> Result<Vec<Outcome>> {
    Ok(vec![guarded("lproj", LPROJ, || {
        let rep = check_projection_theorem(px)?;
        let image = crate::multiproj::project(px);
        let oracle = match (
            definition_oracle(px.complex(), rep.leray_x, guards)?,
            definition_oracle(&image, rep.leray_y, guards)?,
        ) {
            (Some(a), Some(b)) => Some(a && b),
            _ => None,
        };
        Ok(Claim {
            claim: "lproj",
            statement: LPROJ,
            lhs: int(rep.leray_y),
            rhs: int(rep.bound),
            holds: rep.holds,
            tight: rep.tight,
            oracle_agrees: oracle,
            details: serde_json::to_value(&rep)?,
        })
    })?])
}

pub fn check_hmps(pxs: &[PartitionedComplex], _guards: &Guards) -> Result<Vec<Outcome>> {
    Ok(vec![guarded("hmps", HMPS, || {
        let rep = check_mps_vanishing(pxs)?;
        let top = rep.betti.top_degree().map_or(-1, int);
        Ok(Claim {
            claim: "hmps",
            statement: HMPS,
            lhs: top,
            rhs: int(rep.leray_sum),
            holds: rep.holds,
            tight: top + 1 == int(rep.leray_sum),
            oracle_agrees: None,
            details: serde_json::to_value(&rep)?,
        })
    })?])
}

pub fn check_inter(xs: &[SimplicialComplex], guards: &Guards) -> Result<Vec<Outcome>> {
    Ok(vec![guarded("inter", INTER, || {
        let rep = check_intersection_bound(xs)?;
        let mut oracle = Some(true);
        for (x, &l) in xs.iter().zip(&rep.factor_leray) {
            match definition_oracle(x, l, guards)? {
                Some(ok) => oracle = oracle.map(|o| o && ok),
                None => oracle = None,
            }
        }
        Ok(Claim {
            claim: "inter",
            statement: INTER,
            lhs: int(rep.leray_intersection),
            rhs: int(rep.bound),
            holds: rep.holds,
            tight: rep.tight,
            oracle_agrees: oracle,
            details: serde_json::to_value(&rep)?,
        })
    })?])
}

pub fn check_hl_claim<F: SetFamily>(f: &F, _guards: &Guards) -> Result<Vec<Outcome>> {
    Ok(vec![guarded("hl", HL, || {
        let rep = check_hl(f)?;
        Ok(Claim {
            claim: "hl",
            statement: HL,
            lhs: int(rep.helly.helly_number),
            rhs: int(rep.helly.bound),
            holds: rep.holds,
            tight: rep.tight,
            oracle_agrees: rep.helly.by_definition.map(|_| rep.helly.algorithms_agree()),
            details: serde_json::to_value(&rep)?,
        })
    })?])
}

pub fn check_amenta_claims(g: &FrFamily, _guards: &Guards) -> Result<Vec<Outcome>> {
    let rep = match check_amenta(g) {
        Ok(rep) => rep,
        Err(e) if is_guard_error(&e) => {
            return Ok(
                [("amenta", AMENTA), ("amenta", AMENTA_CHAIN), ("amenta", AMENTA_PIECES)]
                    .into_iter()
                    .map(|(claim, statement)| {
                        Outcome::Skipped(Skip {
                            claim,
                            statement,
                            skipped: e.to_string(),
                        })
                    })
                    .collect(),
            )
        }
        Err(e) => return Err(e),
    };
    let details = serde_json::to_value(&rep)?;
    Ok(vec![
        Outcome::Checked(Claim {
            claim: "amenta",
            statement: AMENTA,
            lhs: int(rep.helly_number),
            rhs: int(rep.bound),
            holds: rep.holds,
            tight: rep.helly_number == rep.bound,
            oracle_agrees: None,
            details: details.clone(),
        }),
        Outcome::Checked(Claim {
            claim: "amenta",
            statement: AMENTA_CHAIN,
            lhs: int(rep.chain[0]),
            rhs: int(rep.chain[3]),
            holds: rep.chain_holds,
            tight: rep.chain[0] == rep.chain[3],
            oracle_agrees: None,
            details: json!({ "chain": rep.chain, "leray_nerve": rep.leray_nerve, "leray_image": rep.leray_image, "leray_pieces": rep.leray_pieces }),
        }),
        Outcome::Checked(Claim {
            claim: "amenta",
            statement: AMENTA_PIECES,
            lhs: int(rep.projection.fiber_bound),
            rhs: int(rep.r),
            holds: rep.projection.holds,
            tight: rep.projection.fiber_bound == rep.r,
            oracle_agrees: None,
            details: serde_json::to_value(&rep.projection)?,
        }),
    ])
}

/// Page consistency checks; the `D^k` comparison materializes `M_k` and is
/// skipped on its own when that exceeds `guards.materialize`.
pub fn check_icss(px: &PartitionedComplex, guards: &Guards) -> Result<Vec<Outcome>> {
    let page = match e1_page_with(px, &guards.icss()) {
        Ok(p) => p,
        Err(e) if is_guard_error(&e) => {
            return Ok([ICSS_COLUMN, ICSS_REGION, ICSS_EULER, ICSS_ALT]
                .into_iter()
                .map(|statement| {
                    Outcome::Skipped(Skip {
                        claim: "icss",
                        statement,
                        skipped: e.to_string(),
                    })
                })
                .collect())
        }
        Err(e) => return Err(e),
    };
    let column_sum: usize = page.column_r.iter().sum();
    let mut out = vec![Outcome::Checked(Claim {
        claim: "icss",
        statement: ICSS_COLUMN,
        lhs: int(column_sum),
        rhs: 0,
        holds: column_sum == 0,
        tight: column_sum == 0,
        oracle_agrees: None,
        details: json!({ "r": page.r, "column_r": page.column_r }),
    })];
    out.push(guarded("icss", ICSS_REGION, || {
        let rep = page_vanishing_report(px, &page)?;
        Ok(Claim {
            claim: "icss",
            statement: ICSS_REGION,
            lhs: int(rep.violations.len()),
            rhs: 0,
            holds: rep.holds,
            tight: rep.violations.is_empty(),
            oracle_agrees: None,
            details: json!({ "page": page.table, "report": rep }),
        })
    })?);
    out.push(guarded("icss", ICSS_EULER, || {
        let rep = euler_report(px, &page)?;
        Ok(Claim {
            claim: "icss",
            statement: ICSS_EULER,
            lhs: rep.euler_image,
            rhs: rep.page_sum,
            holds: rep.holds,
            tight: rep.holds,
            oracle_agrees: None,
            details: json!({ "image_betti": page.image_betti }),
        })
    })?);
    out.push(guarded("icss", ICSS_ALT, || {
        let mut full = 0usize;
        let mut double = 0usize;
        let mut holds = true;
        let mut oracle = true;
        let mut reports = Vec::new();
        for k in 1..=page.r {
            let m = multiple_point_complex_with(px, k, guards.mpc_vertices)?;
            let rep = check_alt_chain_iso_with(&m, guards.materialize)?;
            full += rep.dims_full.iter().sum::<usize>();
            double += rep.dims_double_point.iter().sum::<usize>();
            holds &= rep.holds;
            let sections = crate::icss::alt_chain_complex_from_sections_with(&m, guards.simplex)?;
            oracle &= sections.dims() == rep.dims_full;
            reports.push(rep);
        }
        Ok(Claim {
            claim: "icss",
            statement: ICSS_ALT,
            lhs: int(double),
            rhs: int(full),
            holds,
            tight: holds,
            oracle_agrees: Some(oracle),
            details: serde_json::to_value(&reports)?,
        })
    })?);
    Ok(out)
}
