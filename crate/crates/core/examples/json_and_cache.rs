//! Serializes results as JSON documents and reuses lattices through the cache.

use dnbranch::io::{parse_json, serialize_json, Cache, Document, Payload};
use dnbranch::prelude::*;

fn main() -> Result<()> {
    let params = classify_regime(5, Modulus::Infinite)?;
    let lattice = Lattice::build(5, params)?;
    let label = label_for(&"2,1|1,1".parse()?, None, &lattice)?;
    let socle = socle_restriction(&label, &lattice)?;

    let doc = Document::new(params, Payload::Branching { n: 5, socles: vec![socle] });
    let text = serialize_json(&doc);
    print!("{text}");
    assert_eq!(parse_json(&text)?, doc);

    // A cache filled at level 5 also serves level 3.
    let dir = std::env::temp_dir().join(format!("dnbranch-example-{}", std::process::id()));
    let cache = Cache::new(&dir);
    let stored = cache.store(&lattice)?;
    let smaller = cache.load(&params, 3)?;
    println!("stored {}; reloaded levels 0..={} with {} vertices", stored.display(), smaller.n(), smaller.vertex_count());
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
