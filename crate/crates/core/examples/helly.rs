//! Helly numbers of box families, the nerve bound, and (F, r)-families.

use leray::helly::{check_amenta, check_hl, random_fr_family, AtomFamily, AxisBox, BoxFamily};

fn main() -> leray::Result<()> {
    let boxes = BoxFamily::new(
        2,
        vec![
            ("A".into(), Some(AxisBox::from_ints(&[(0, 2), (0, 2)])?)),
            ("B".into(), Some(AxisBox::from_ints(&[(1, 3), (1, 3)])?)),
            ("C".into(), Some(AxisBox::from_ints(&[(3, 4), (0, 1)])?)),
        ],
    )?;
    let rep = check_hl(&boxes)?;
    println!(
        "boxes: h = {}, witness {:?}, 1 + L(nerve) = {}",
        rep.helly.helly_number, rep.helly.witness, rep.helly.bound
    );

    let triangle = AtomFamily::new(
        3,
        vec![
            ("ab".into(), vec![0, 1]),
            ("bc".into(), vec![1, 2]),
            ("ca".into(), vec![2, 0]),
        ],
    )?;
    let rep = check_hl(&triangle)?;
    println!(
        "triangle sides: h = {} = 1 + L(nerve), tight: {}",
        rep.helly.helly_number, rep.tight
    );

    for d in 1..=2 {
        let g = random_fr_family(d, 2, 5, 12, 3)?;
        let rep = check_amenta(&g)?;
        println!(
            "(F, 2)-family in dimension {d}: chain {:?}, h <= r (d + 1): {}",
            rep.chain, rep.holds
        );
    }
    Ok(())
}
