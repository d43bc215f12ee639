//! Reading and writing the JSON formats.

use leray::io::{complex_from_json, complex_to_json, family_from_json, family_to_json, partitioned_from_json};
use leray::multiproj::fiber_bound;

fn main() -> leray::Result<()> {
    let x = complex_from_json(r#"{"vertices":["a","b","c"],"facets":[[1,2],[0],[0,1],[2,0]]}"#)?;
    print!("canonical complex: {}", complex_to_json(&x));

    let px = partitioned_from_json(r#"{"facets":[[0,2],[1,2]],"parts":[[0,1],[2]]}"#)?;
    println!("fiber bound of the partitioned complex: {}", fiber_bound(&px)?.r);

    let fam = family_from_json(r#"{"d":1,"members":{"G1":[[[0,1]],[["5/2",3]]],"G2":[[["1/2",2]]]}}"#)?;
    print!("family: {}", family_to_json(&fam));

    match complex_from_json(r#"{"vertices":["a"],"facets":[[0,1]]}"#) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
