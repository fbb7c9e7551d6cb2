//! Degree-1 semi-invariants: the brute-force eigenvector scan over a root
//! basis, cross-checked against the cyclic extended-Dynkin criterion in
//! type A.

use parabolica::classical::{degree1_criterion_type_a, degree1_semiinvariants};
use parabolica::contraction::ParabolicContraction;
use parabolica::poly::Poly;

fn main() {
    for blocks in [vec![1, 1, 1], vec![2, 2], vec![1, 2, 1], vec![4, 1, 4, 2, 1]] {
        let c = ParabolicContraction::new(blocks.clone()).unwrap();
        let basis = c.q_basis();
        let candidates: Vec<Poly> = (1..=c.n)
            .flat_map(|u| (1..=c.n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| Poly::entry(u, v))
            .collect();
        let brute = degree1_semiinvariants(&c, &basis, &candidates).unwrap();
        let criterion = degree1_criterion_type_a(&c);
        println!(
            "{blocks:?}: scan finds {:?}, criterion {:?}",
            brute.iter().map(|(p, _)| p.to_string()).collect::<Vec<_>>(),
            criterion.iter().map(|p| p.to_string()).collect::<Vec<_>>()
        );
    }
}
