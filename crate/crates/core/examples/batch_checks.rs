//! Seeded batch verification through the library, without the command line.

use leray::harness::{self, Guards};

fn main() -> leray::Result<()> {
    let guards = Guards::default();
    let mut checked = 0;
    let mut skipped = 0;
    for seed in 0..20 {
        let px = harness::projection_instance(seed, 9)?;
        for outcome in harness::check_lproj(&px, &guards)?
            .into_iter()
            .chain(harness::check_icss(&px, &guards)?)
        {
            assert!(outcome.holds() && outcome.oracle_agrees());
            match outcome.claim() {
                Some(_) => checked += 1,
                None => skipped += 1,
            }
        }
    }
    println!("20 seeded instances: {checked} claims hold, {skipped} skipped by guards");
    Ok(())
}
