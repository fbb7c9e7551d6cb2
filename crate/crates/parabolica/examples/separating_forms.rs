//! Indivisibility witnesses and separating linear forms for nontrivial
//! factors: hypothesis (II) finds a generator of partial degree one, and the
//! specialized companion form isolates a single factor into the
//! indeterminate while every other factor stays a nonzero constant.

use parabolica::budget::Budget;
use parabolica::contraction::ParabolicContraction;
use parabolica::invariants::factor_components;
use parabolica::pathways::{hypothesis_ii_witness, separating_q_gl};

fn main() {
    let budget = Budget::default();
    let borel = ParabolicContraction::new(vec![1, 1, 1]).unwrap();
    let certs: Vec<_> = (1..=3)
        .map(|m| factor_components(&borel, m, &budget).unwrap())
        .collect();

    for cert in &certs {
        for f in &cert.factors {
            if let Some(g) = hypothesis_ii_witness(&f.poly) {
                println!(
                    "F_{{{},{}}} has degree-1 witness {}",
                    f.label.0, f.label.1, g
                );
            }
        }
    }

    println!();
    for t in 1..=3 {
        let form = separating_q_gl(&borel, 3, t, &certs).unwrap();
        println!(
            "factor (3,{t}): xi = {}, F_{{3,{t}}}(q) = {}",
            form.xi, form.isolated_value
        );
        for (m, tt, v) in &form.other_values {
            println!("    F_{{{m},{tt}}}(q) = {v}");
        }
    }
}
