// Reading and writing the plain-text point and scalar set formats.
//
// `cargo run --example set_files`

use pinned_dot::format::{parse_point_set, parse_scalar_set, write_point_set, write_scalar_set};
use pinned_dot::{pinned_pair, subfield_example};

const SQUARE: &str = "\
# four corners of a unit square and the center
3,1
0 0
1 0
0 1
1 1
2 2
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = parse_point_set(SQUARE)?;
    println!("parsed {} points over GF({})", e.len(), e.spec().q());
    let w = pinned_pair(&e)?;
    println!("pinned pair {} -> {}, {} dot values", w.x, w.y, w.dot_count);

    let text = write_point_set(&e);
    assert_eq!(parse_point_set(&text)?, e);
    print!("{text}");

    let s = parse_scalar_set("5,1\n0 1 4\n")?;
    println!("scalar set round trip: {}", write_scalar_set(&s).trim_end());

    let sub = subfield_example(3)?;
    println!(
        "subfield example file has {} lines",
        write_point_set(&sub).lines().count()
    );

    match parse_point_set("3,1\n0 0\n0 0\n") {
        Err(err) => println!("duplicate rejected: {err}"),
        Ok(_) => unreachable!("duplicates are rejected"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
