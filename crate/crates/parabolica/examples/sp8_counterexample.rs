//! The sp_8 suite: factoring through the surviving odd factor e[1,8]
//! produces seven semi-invariants bound by an exact quadratic relation, so
//! the generated algebra is a hypersurface, not a polynomial ring.

use parabolica::budget::Budget;
use parabolica::classical::counterexample_sp8;

fn main() {
    let report = counterexample_sp8(&Budget::default()).unwrap();
    for id in &report.identities {
        println!("[{}] {}", if id.equal { "ok" } else { "FAIL" }, id.name);
    }
    for cert in &report.certificates {
        println!("\n{}", serde_json::to_string_pretty(cert).unwrap());
    }
}
