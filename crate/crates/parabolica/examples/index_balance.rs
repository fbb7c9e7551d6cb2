//! Truncation bases and index balance: the estimate for the full
//! contraction matches the rank of gl_n, the truncation gains s − p, and
//! dim + ind is conserved.

use parabolica::cli::index_report;

fn main() {
    for desc in ["gl:1,1", "gl:2,1", "gl:2,2", "gl:1,2,1", "gl:3,2,1"] {
        let r = index_report(desc, 5, 0).unwrap();
        println!(
            "{desc}: ind q = {} (rank {}), dim q_L = {}, ind q_L = {}, balance {}",
            r.ind_q_estimate,
            r.ind_q_formula,
            r.dim_q_lambda,
            r.ind_q_lambda_estimate,
            r.ovdb_balanced
        );
    }
}
