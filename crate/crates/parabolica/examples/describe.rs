//! Block combinatorics of a contraction: intervals, the m_i/ρ_i/κ_i table,
//! the factor counts r_m and the dimension/index closed forms.

use parabolica::cli::{cmd_describe, RunConfig};

fn main() {
    let cfg = RunConfig::default();
    for descriptor in ["gl:4,1,4,2,1", "gl:1,1,1", "gl:2,2", "sp:1,2,2,1"] {
        print!("{}", cmd_describe(descriptor, &cfg).output);
        println!();
    }
}
