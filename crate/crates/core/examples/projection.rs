//! The projection bound L(pi(X)) <= r L(X) + r - 1 and the complexes attaining it.

use leray::multiproj::{check_projection_theorem, extremal_example, fiber_bound, project, random_partitioned_complex};

fn main() -> leray::Result<()> {
    for (r, d) in [(2, 2), (2, 3), (3, 2)] {
        let px = extremal_example(r, d)?;
        let rep = check_projection_theorem(&px)?;
        let fb = fiber_bound(&px)?;
        println!(
            "r = {r}, d = {d}: L(X) = {}, r(X, pi) = {} over {:?}, L(pi(X)) = {} = bound {}",
            rep.leray_x, rep.fiber_bound, fb.witness, rep.leray_y, rep.bound
        );
    }

    let px = random_partitioned_complex(&[2, 2, 2], 2, 0.3, 5)?;
    let rep = check_projection_theorem(&px)?;
    let image = project(&px);
    println!(
        "random: {} facets onto {} facets, L(X) = {}, r = {}, L(pi(X)) = {} <= {}",
        px.complex().facets().len(),
        image.facets().len(),
        rep.leray_x,
        rep.fiber_bound,
        rep.leray_y,
        rep.bound
    );
    Ok(())
}
