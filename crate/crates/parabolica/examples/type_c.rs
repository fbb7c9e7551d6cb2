//! The symplectic family over a symmetric contraction with an even number
//! of blocks: squared factors, the exact decomposition, epsilon-coordinate
//! weights, antidiagonal witnesses and a separating form.

use parabolica::budget::Budget;
use parabolica::classical::{separating_q_c, type_c_family, type_c_truncation_data};
use parabolica::contraction::ParabolicContraction;

fn main() {
    let budget = Budget::default();
    let c = ParabolicContraction::new(vec![1, 2, 2, 1]).unwrap();
    let fam = type_c_family(&c, &budget).unwrap();

    println!(
        "blocks (1,2,2,1) over sp_6: family of {} (= n' + s'), decomposition exact: {}",
        fam.family_size, fam.decomposition_verified
    );
    for entry in &fam.entries {
        println!("  f_{} = c' * product, c' = {}", entry.m_prime, entry.c_prime);
        for (t, poly, w) in &entry.factors {
            println!(
                "    f_{{{},{}}} ({} terms) weight {}",
                entry.m_prime,
                t,
                poly.num_terms(),
                w
            );
        }
    }
    for (m, t, g) in &fam.witnesses {
        println!("antidiagonal witness for f_{{{m},{t}}}: {g}");
    }
    println!("independence: {:?}", fam.independence);

    let (dim, index) = type_c_truncation_data(&c, 5, 0).unwrap();
    println!("dim (q^C)' = {dim}, index = {index}");

    // a separating form for the top split invariant
    let np = c.n / 2;
    let last_split = fam
        .entries
        .iter()
        .rev()
        .find(|e| e.factors.len() > 1)
        .map(|e| e.m_prime)
        .unwrap_or(np);
    match separating_q_c(&c, &fam, last_split, 1, 0, 100) {
        Ok(form) => println!(
            "separating form for f_{{{last_split},1}}: X-degree {}",
            form.isolated_degree
        ),
        Err(e) => println!("separating search: {e}"),
    }
}
