// Arithmetic in GF(9): canonical codes, the modulus, inverses and the prime subfield.
//
// `cargo run --example field_arithmetic`

use pinned_dot::{make_field, Elem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(3, 2)?;
    println!(
        "GF({}) with modulus coefficients {:?} (constant term first)",
        f.q(),
        f.modulus()
    );
    println!("generator code {}", f.generator());

    let a = f.elem(4)?; // 1 + x
    let b = f.elem(7)?; // 1 + 2x
    println!("{a} + {b} = {}", f.add(a, b));
    println!("{a} * {b} = {}", f.mul(a, b));
    assert_eq!(f.mul(a, b), f.mul_by_reduction(a, b));

    for x in f.elements().skip(1) {
        let inv = f.inv(x)?;
        assert_eq!(f.mul(x, inv), Elem::ONE);
        assert_eq!(f.pow(x, f.q() as u64 - 1), Elem::ONE);
    }
    println!("every nonzero element has an inverse and satisfies x^(q-1) = 1");

    let prime = f.subfield_elements(1)?;
    println!(
        "prime subfield: {:?}",
        prime.iter().map(|e| e.code()).collect::<Vec<_>>()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
