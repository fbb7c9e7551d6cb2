//! The exact polynomial substrate: the text grammar, canonical forms,
//! exact division and evaluation at a linear form.

use parabolica::poly::{LinearForm, Poly};

fn main() {
    let f: Poly = "e[2,1]*e[1,3] - 1/4*X2".parse().unwrap();
    println!("parsed:     {f}");

    let g = Poly::entry(2, 1);
    let product = f.mul(&g);
    println!("product:    {product}");
    println!("quotient:   {}", product.exact_divide(&g).unwrap());
    match Poly::entry(1, 1).add(&Poly::entry(2, 2)).exact_divide(&g) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("division of a sum by e[2,1]: {e}"),
    }

    // evaluation substitutes matrix entries and keeps the auxiliaries
    let mut q = LinearForm::new();
    q.set(2, 1, Poly::one());
    q.set(1, 3, Poly::aux(1));
    println!("evaluated:  {}", f.evaluate(&q));

    // canonical equality: same polynomial, any construction order
    let lhs = Poly::entry(1, 2).add(&Poly::entry(2, 1));
    let rhs = Poly::entry(2, 1).add(&Poly::entry(1, 2));
    assert_eq!(lhs, rhs);
    println!("canonical:  {lhs}");
}
