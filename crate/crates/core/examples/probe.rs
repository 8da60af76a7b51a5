use gvm_core::dirac::analyze_orbit;
use gvm_core::emit::{emit_dot, emit_json};

fn main() {
    let report = analyze_orbit::<i64>(2, 7).unwrap();
    print!("{}", emit_dot(&report));
    println!("=====");
    print!("{}", emit_json(&report));
}
