// `F_p × F_p` inside `F_{p²}` has `q` points, yet every pinned dot set has only `p = √q` values.
//
// `cargo run --example sharpness`

use pinned_dot::pinned::threshold;
use pinned_dot::{pinned_extremes, pinned_pair, subfield_example, Error};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2, 3, 5, 7] {
        let e = subfield_example(p)?;
        let q = e.spec().q();
        let ext = pinned_extremes(&e);
        println!(
            "p = {p}: |E| = {} = q, {} pairs, pinned sizes in [{}, {}], q/2 threshold {}",
            e.len(),
            ext.pairs,
            ext.min,
            ext.max,
            threshold(q)
        );
        assert_eq!((ext.min, ext.max), (p as usize, p as usize));
        assert!(matches!(pinned_pair(&e), Err(Error::BelowThreshold { .. })));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
