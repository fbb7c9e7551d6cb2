//! Factorization of the top components `F_m^•` into semi-invariants, with
//! the computed sign, the weights and the JSON certificate.

use parabolica::budget::Budget;
use parabolica::contraction::ParabolicContraction;
use parabolica::invariants::factor_components;

fn main() {
    let budget = Budget::default();

    // the Borel chain: F_n^• splits into the subdiagonal entries and e[1,n]
    let borel = ParabolicContraction::new(vec![1, 1, 1]).unwrap();
    let cert = factor_components(&borel, 3, &budget).unwrap();
    println!("Borel gl_3, m = 3 (c = {}, verified {}):", cert.c_m, cert.verified);
    for f in &cert.factors {
        println!("  F_{{3,{}}} = {}   weight {}", f.label.1, f.poly, f.weight);
    }

    // the central-root case: two corner determinants
    let rc = ParabolicContraction::new(vec![2, 2]).unwrap();
    let cert = factor_components(&rc, 4, &budget).unwrap();
    println!("\ngl_4 blocks (2,2), m = 4 (c = {}):", cert.c_m);
    for f in &cert.factors {
        println!("  F_{{4,{}}} = {}", f.label.1, f.poly);
    }

    // the running 12-dimensional example, m = 5: two factors, the first
    // supported on the abelianized nilradical
    let run = ParabolicContraction::new(vec![4, 1, 4, 2, 1]).unwrap();
    let cert = factor_components(&run, 5, &budget).unwrap();
    println!("\ngl_12 blocks (4,1,4,2,1), m = 5 (c = {}):", cert.c_m);
    for f in &cert.factors {
        println!(
            "  F_{{5,{}}}: {} terms, n-minus-only {}, weight {}",
            f.label.1,
            f.poly.num_terms(),
            f.n_minus_only(&run),
            f.weight
        );
    }
    println!(
        "\nJSON certificate:\n{}",
        serde_json::to_string_pretty(&cert.to_json(&run)).unwrap()
    );
}
