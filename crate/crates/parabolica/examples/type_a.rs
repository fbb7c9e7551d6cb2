//! The traceless projection: tops commute with the projection, and the
//! projected factor family (without the identity) is certified
//! algebraically independent.

use parabolica::budget::Budget;
use parabolica::classical::{bullet_commutes, type_a_family, Projection};
use parabolica::contraction::ParabolicContraction;

fn main() {
    let budget = Budget::default();
    let c = ParabolicContraction::new(vec![2, 1]).unwrap();
    let pr = Projection::special_linear(c.n);

    for m in 1..=c.n {
        let cert = bullet_commutes(&pr, &c, m, &budget).unwrap();
        println!("pr(F_{m})^bullet = pr(F_{m}^bullet): {:?}", cert);
    }

    let fam = type_a_family(&c, &budget).unwrap();
    println!("\nfamily of {} projected factors:", fam.members.len());
    for f in &fam.members {
        println!(
            "  pr(F_{{{},{}}}) = {}",
            f.label.0, f.label.1, f.poly
        );
    }
    println!("independence: {:?}", fam.independence);
}
