use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{make_fr_family, AxisBox, BoxFamily, FrFamily};
use crate::error::{Error, Result};

/// Attempts before the rejection sampler gives up.
const MAX_ATTEMPTS: usize = 10_000;

/// A box with integer corners in `[0, grid]^d`, each side at most `grid / 3`.
fn random_box(rng: &mut ChaCha8Rng, d: usize, grid: i64) -> AxisBox {
    let bounds: Vec<(i64, i64)> = (0..d)
        .map(|_| {
            let len = rng.gen_range(0..=grid / 3);
            let lo = rng.gen_range(0..=grid - len);
            (lo, lo + len)
        })
        .collect();
    AxisBox::from_ints(&bounds).expect("lo <= hi by construction")
}

/// `n` seeded random boxes in `[0, grid]^d`, named `F1, F2, ...`.
pub fn random_box_family(d: usize, n: usize, grid: i64, seed: u64) -> Result<BoxFamily> {
    if d == 0 || grid < 1 {
        return Err(Error::InvalidArgument("boxes need d >= 1 and grid >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BoxFamily::new(
        d,
        (0..n)
            .map(|i| (format!("F{}", i + 1), Some(random_box(&mut rng, d, grid))))
            .collect(),
    )
}

/// A seeded random `(F, r)`-family of `m` members in `[0, grid]^d`.
///
/// Each member gets between 1 and `r` pairwise disjoint boxes; candidates
/// failing validation are rejected and redrawn from the same stream.
pub fn random_fr_family(d: usize, r: usize, m: usize, grid: i64, seed: u64) -> Result<FrFamily> {
    if d == 0 || r == 0 || grid < 1 {
        return Err(Error::InvalidArgument(
            "families need d >= 1, r >= 1 and grid >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut pieces: Vec<(String, Option<AxisBox>)> = Vec::new();
        let mut groups = Vec::new();
        for i in 0..m {
            let want = rng.gen_range(1..=r);
            let mut own: Vec<AxisBox> = Vec::new();
            let mut group = Vec::new();
            for _ in 0..100 {
                if own.len() == want {
                    break;
                }
                let b = random_box(&mut rng, d, grid);
                if own.iter().all(|o| !o.meets(&b)) {
                    group.push(pieces.len());
                    pieces.push((format!("G{}.{}", i + 1, own.len() + 1), Some(b.clone())));
                    own.push(b);
                }
            }
            groups.push((format!("G{}", i + 1), group));
        }
        match make_fr_family(BoxFamily::new(d, pieces)?, groups, r) {
            Ok(f) => return Ok(f),
            Err(Error::NotFrFamily(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InvalidArgument(format!(
        "no valid (F, {r})-family with {m} members found in {MAX_ATTEMPTS} attempts"
    )))
}
