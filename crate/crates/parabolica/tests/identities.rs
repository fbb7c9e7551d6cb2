//! Cross-module identity checks: degree sums against the dimension/index
//! budget, minor sums evaluated through dicyclic subgraphs, and the
//! compatibilities of the symplectic projection.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parabolica::budget::Budget;
use parabolica::classical::{sp_basis, Projection};
use parabolica::contraction::{compositions, ParabolicContraction};
use parabolica::invariants::{bullet_f, factor_poly, f_m, minor};
use parabolica::pathways::{dicyclic_subgraphs, graph_of_gl, subgraph_monomial, MonomialFlavor};
use parabolica::poly::{rat, LinearForm, Poly};

/// Σ_{f ∈ 𝐅} deg f = (dim q + ind q)/2 = (n² + n)/2 for every composition
/// of every n ≤ 7.
#[test]
fn factor_degree_sum_matches_the_index_budget() {
    let budget = Budget::default();
    for n in 2..=7usize {
        for blocks in compositions(n) {
            let c = ParabolicContraction::new(blocks.clone()).unwrap();
            let mut total = 0usize;
            for m in 1..=n {
                match c.size_for_m(m) {
                    None => {
                        let top = bullet_f(&c, m, &budget).unwrap();
                        total += top.partial_degree(|_| true).unwrap() as usize;
                    }
                    Some(i) => {
                        for t in 1..=c.rho[i] {
                            let f = factor_poly(&c, m, t, &budget).unwrap();
                            total += f.partial_degree(|_| true).unwrap() as usize;
                        }
                    }
                }
            }
            assert_eq!(total, n * (n + 1) / 2, "{blocks:?}");
        }
    }
}

/// Evaluating `F_m` at any linear form equals the signed sum of the
/// dicyclic-subgraph monomials of its pathway, for n ≤ 5.
#[test]
fn minor_sums_evaluate_through_dicyclic_subgraphs() {
    let budget = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=5usize {
        let c = ParabolicContraction::new(vec![1; n]).unwrap();
        for _ in 0..5 {
            let mut q = LinearForm::new();
            for _ in 0..rng.gen_range(3..=2 * n) {
                q.set(
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    Poly::constant(rat(rng.gen_range(-3..=3))),
                );
            }
            let pathway = graph_of_gl(&q, n);
            for m in 1..=n {
                let direct = f_m(&c, m, &budget).unwrap().evaluate(&q);
                let mut through_graphs = Poly::zero();
                for h in dicyclic_subgraphs(&pathway, m, &budget).unwrap() {
                    let mono = subgraph_monomial(&h, MonomialFlavor::Gl, n);
                    through_graphs = through_graphs
                        .add(&mono.evaluate(&q).scale(&rat(h.permutation_sign())));
                }
                assert_eq!(direct, through_graphs, "n={n} m={m}");
            }
        }
    }
}

/// The symplectic projection is a module morphism over the symmetric
/// contraction: pr([x, y]_q) = [x, pr(y)] for x in the sp basis.
#[test]
fn symplectic_projection_is_a_module_morphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for blocks in [vec![1, 1], vec![2, 2], vec![1, 2, 1], vec![1, 1, 1, 1], vec![3, 3]] {
        let c = ParabolicContraction::new(blocks.clone()).unwrap();
        let n = c.n;
        let pr = Projection::symplectic(n).unwrap();
        let (cartan, off) = sp_basis(n).unwrap();
        let mut basis = cartan;
        basis.extend(off);
        for _ in 0..40 {
            let x = &basis[rng.gen_range(0..basis.len())];
            let y = (rng.gen_range(1..=n), rng.gen_range(1..=n));
            let lhs = pr.project(&c.act_linear(x, &Poly::entry(y.0, y.1)).unwrap());
            let rhs = c.act_linear(x, &pr.entry_image(y.0, y.1)).unwrap();
            assert_eq!(lhs, rhs, "{blocks:?} x={x} y={y:?}");
        }
    }
}

/// The projection preserves bidegrees or kills: for a bihomogeneous input,
/// either pr(s) = 0 or both partial degrees survive.
#[test]
fn projection_preserves_bidegrees_or_kills() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let c = ParabolicContraction::new(vec![2, 2]).unwrap();
    let pr = Projection::symplectic(4).unwrap();
    for _ in 0..300 {
        // a random monomial is bihomogeneous by construction
        let mut mono = Poly::one();
        for _ in 0..rng.gen_range(1..=3) {
            mono = mono.mul(&Poly::entry(rng.gen_range(1..=4), rng.gen_range(1..=4)));
        }
        let p = pr.project(&mono);
        if p.is_zero() {
            continue;
        }
        assert_eq!(
            p.partial_degree(c.nminus_gens()),
            mono.partial_degree(c.nminus_gens())
        );
        assert_eq!(p.partial_degree(|_| true), mono.partial_degree(|_| true));
    }
}

/// Symmetric-monomial survival: a γ-symmetric monomial of `F_m` projects to
/// a genuine monomial of `pr(F_m)` (no cancellation), checked by comparing
/// coefficients on the projected support.
#[test]
fn symmetric_monomials_survive_projection() {
    let budget = Budget::default();
    for blocks in [vec![2, 2], vec![1, 2, 1], vec![1, 1, 1, 1]] {
        let c = ParabolicContraction::new(blocks.clone()).unwrap();
        let n = c.n;
        let pr = Projection::symplectic(n).unwrap();
        for m in [2usize, 4] {
            let full = f_m(&c, m, &budget).unwrap();
            let projected = pr.project(&full);
            for (mono, coeff) in full.terms() {
                // symmetric: the multiset of entries is γ-stable
                let entries: Vec<(usize, usize)> = mono
                    .factors()
                    .iter()
                    .flat_map(|&(g, e)| {
                        let (u, v) = g.as_entry().unwrap();
                        std::iter::repeat((u, v)).take(e as usize)
                    })
                    .collect();
                let mut mirrored: Vec<(usize, usize)> = entries
                    .iter()
                    .map(|&(u, v)| (n + 1 - v, n + 1 - u))
                    .collect();
                mirrored.sort_unstable();
                let mut sorted = entries.clone();
                sorted.sort_unstable();
                if mirrored != sorted {
                    continue;
                }
                let single = Poly::from_term(mono.clone(), coeff.clone());
                let image = pr.project(&single);
                assert!(!image.is_zero(), "{blocks:?} m={m} mono {mono:?}");
                // the projections of distinct canonical monomials have
                // disjoint expansions, so the coefficients must agree on the
                // image's support
                for (im, ic) in image.terms() {
                    assert_eq!(projected.coefficient(im), *ic, "{blocks:?} m={m}");
                }
            }
        }
    }
}

/// Spot factorization certificates beyond the exhaustive range: a few
/// partitions of 7 and 8 verify under the default budget.
#[test]
fn spot_certificates_at_n7_and_n8() {
    let budget = Budget::default();
    for blocks in [vec![3, 2, 2], vec![1, 2, 2, 2], vec![3, 3, 2], vec![2, 2, 2, 2]] {
        let c = ParabolicContraction::new(blocks.clone()).unwrap();
        for m in 1..=c.n {
            let cert = parabolica::invariants::factor_components(&c, m, &budget).unwrap();
            assert!(cert.verified, "{blocks:?} m={m}");
        }
    }
}

/// The corner-minor shapes of the central-root case, frozen.
#[test]
fn central_root_corner_minors() {
    let budget = Budget::default();
    let c = ParabolicContraction::new(vec![3, 3]).unwrap();
    let cert = parabolica::invariants::factor_components(&c, 6, &budget).unwrap();
    assert_eq!(cert.factors[0].poly, minor(&[4, 5, 6], &[1, 2, 3]).unwrap());
    assert_eq!(cert.factors[1].poly, minor(&[1, 2, 3], &[4, 5, 6]).unwrap());
    // weights are ∓2ϖ_{n/2} on the diagonal coordinates
    let w = cert.factors[1].weight.clone();
    let pi3 = c.fundamental_weight(3);
    assert_eq!(w, pi3.scale(&rat(2)));
    assert!(!cert.factors[0].weight.coords.iter().all(|x| x.is_zero()));
}
