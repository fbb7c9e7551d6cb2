//! The so_12 probe: the projected top of F_4 factors through the two
//! degree-1 semi-invariants, F_6 collapses with a degree drop, and the top
//! of F_8 is a square.

use parabolica::budget::Budget;
use parabolica::classical::d6_suite;

fn main() {
    let report = d6_suite(&Budget::default()).unwrap();
    for id in &report.identities {
        println!("[{}] {}", if id.equal { "ok" } else { "FAIL" }, id.name);
    }
    for cert in &report.certificates {
        println!("\n{}", serde_json::to_string_pretty(cert).unwrap());
    }
}
