//! The companion form of the running example: the pebbling v-sequence, the
//! fan-plus-chain pathway (DOT output), and the certified coordinate lines
//! `F_m^•(q) = c · X_m`.

use parabolica::budget::Budget;
use parabolica::contraction::ParabolicContraction;
use parabolica::pathways::{companion_q, graph_of_gl, verify_hypothesis_i};

fn main() {
    let run = ParabolicContraction::new(vec![4, 1, 4, 2, 1]).unwrap();
    let budget = Budget::default();

    let (q, v) = companion_q(&run, 4);
    println!("v-sequence from block 4: {v:?}");

    let pathway = graph_of_gl(&q, run.n);
    println!("\npathway (DOT):\n{}", pathway.to_dot());

    let cert = verify_hypothesis_i(&run, 4, &budget).unwrap();
    for line in &cert.lines {
        println!("F_{}^bullet(q) = {} * X{}", line.m, line.constant, line.m);
    }
    println!("certified: {}", cert.certified);
}
