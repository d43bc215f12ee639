//! First page of the image computing spectral sequence for a projection.

use leray::icss::{e1_page, euler_report, page_vanishing_report};
use leray::multiproj::{extremal_example, PartitionedComplex};
use leray::SimplicialComplex;

fn show(name: &str, px: &PartitionedComplex) -> leray::Result<()> {
    let page = e1_page(px)?;
    println!("{name}: r = {}", page.r);
    for (p, column) in page.table.iter().enumerate() {
        println!("  p = {p}: {column:?}");
    }
    let euler = euler_report(px, &page)?;
    let region = page_vanishing_report(px, &page)?;
    println!(
        "  column r vanishes: {}, page sum {} = chi(image) {}, zero for p + q >= {}: {}",
        page.column_r_vanishes(),
        euler.page_sum,
        euler.euler_image,
        region.threshold,
        region.violations.is_empty()
    );
    Ok(())
}

fn main() -> leray::Result<()> {
    let two_points = PartitionedComplex::new(SimplicialComplex::from_facets([[0usize], [1]])?, vec![vec![0, 1]])?;
    show("two points over one part", &two_points)?;
    show("extremal example r = 2, d = 2", &extremal_example(2, 2)?)?;
    Ok(())
}
