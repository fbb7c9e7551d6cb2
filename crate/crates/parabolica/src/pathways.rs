//! Weighted complete digraphs ("pathways") attached to linear forms, the
//! enumeration of vertex-disjoint cycle unions, the pebbling construction of
//! companion forms, and the executable polynomiality hypotheses for `gl_n`.

use num_traits::Zero;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::classical::Projection;
use crate::contraction::{ContractionError, ParabolicContraction};
use crate::invariants::{bullet_f, factor_components, FactorizationCertificate, InvariantsError};
use crate::poly::{Generator, LinearForm, Poly, Rational};

#[derive(Debug, Error)]
pub enum PathwaysError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error("the symplectic pathway needs even n")]
    OddDimension,
    #[error("separating form verification failed: {0}")]
    VerificationFailed(String),
}

/// A complete weighted digraph on `1..=n`: exactly one edge per ordered
/// pair, with polynomial weights. Only nonzero-weight edges are meaningful.
#[derive(Debug, Clone)]
pub struct Pathway {
    pub n: usize,
    weights: Vec<Poly>,
}

impl Pathway {
    pub fn empty(n: usize) -> Self {
        Pathway {
            n,
            weights: vec![Poly::zero(); n * n],
        }
    }

    pub fn weight(&self, x: usize, y: usize) -> &Poly {
        &self.weights[(x - 1) * self.n + (y - 1)]
    }

    pub fn set_weight(&mut self, x: usize, y: usize, w: Poly) {
        self.weights[(x - 1) * self.n + (y - 1)] = w;
    }

    /// Vertices incident to some nonzero-weight edge.
    pub fn support(&self) -> Vec<usize> {
        let mut in_support = vec![false; self.n + 1];
        for x in 1..=self.n {
            for y in 1..=self.n {
                if !self.weight(x, y).is_zero() {
                    in_support[x] = true;
                    in_support[y] = true;
                }
            }
        }
        (1..=self.n).filter(|&v| in_support[v]).collect()
    }

    /// DOT-compatible text with polynomial edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph pathway {\n");
        for v in self.support() {
            out.push_str(&format!("  v{v} [label=\"{v}\"];\n"));
        }
        for x in 1..=self.n {
            for y in 1..=self.n {
                let w = self.weight(x, y);
                if !w.is_zero() {
                    out.push_str(&format!("  v{x} -> v{y} [label=\"{w}\"];\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The pathway of a linear form on `gl_n`: the edge `x -> y` carries
/// `e[x,y](q)`.
pub fn graph_of_gl(q: &LinearForm, n: usize) -> Pathway {
    let mut p = Pathway::empty(n);
    for x in 1..=n {
        for y in 1..=n {
            p.set_weight(x, y, Poly::entry(x, y).evaluate(q));
        }
    }
    p
}

/// The pathway of a linear form restricted to `sp_n`: the edge `x -> y`
/// carries `pr^C(e[x,y])(q)`. Supports come in antidiagonally mirrored
/// pairs.
pub fn graph_of_c(q: &LinearForm, n: usize) -> Result<Pathway, PathwaysError> {
    if !n.is_multiple_of(2) {
        return Err(PathwaysError::OddDimension);
    }
    let pr = Projection::symplectic(n).expect("even n");
    let mut p = Pathway::empty(n);
    for x in 1..=n {
        for y in 1..=n {
            p.set_weight(x, y, pr.entry_image(x, y).evaluate(q));
        }
    }
    Ok(p)
}

/// A vertex-disjoint union of directed cycles. Each cycle `[a, b, c]` stands
/// for the edges `a -> b -> c -> a`; cycles are rotated to start at their
/// minimal vertex and listed by increasing anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicyclicSubgraph {
    pub cycles: Vec<Vec<usize>>,
}

impl DicyclicSubgraph {
    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for cycle in &self.cycles {
            for i in 0..cycle.len() {
                out.push((cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
        out
    }

    /// Sign of the permutation the subgraph encodes: each `k`-cycle
    /// contributes `(-1)^(k-1)`.
    pub fn permutation_sign(&self) -> i64 {
        let mut s = 1i64;
        for cycle in &self.cycles {
            if cycle.len() % 2 == 0 {
                s = -s;
            }
        }
        s
    }
}

/// Which product a subgraph monomial takes over its edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialFlavor {
    Gl,
    C,
}

/// The monomial `Π pr(e[x,y])` over the edges of `h`.
pub fn subgraph_monomial(
    h: &DicyclicSubgraph,
    flavor: MonomialFlavor,
    n: usize,
) -> Poly {
    let mut out = Poly::one();
    for (x, y) in h.edges() {
        let factor = match flavor {
            MonomialFlavor::Gl => Poly::entry(x, y),
            MonomialFlavor::C => Projection::symplectic(n)
                .expect("even n for C monomials")
                .entry_image(x, y),
        };
        out = out.mul(&factor);
    }
    out
}

/// All dicyclic subgraphs of `p` with exactly `m` vertices, each reported
/// once in canonical form.
pub fn dicyclic_subgraphs(
    p: &Pathway,
    m: usize,
    budget: &Budget,
) -> Result<Vec<DicyclicSubgraph>, PathwaysError> {
    if m > p.n {
        return Ok(Vec::new());
    }
    let n = p.n;
    let nonzero = |x: usize, y: usize| !p.weight(x, y).is_zero();

    struct Search<'a> {
        n: usize,
        nonzero: &'a dyn Fn(usize, usize) -> bool,
        used: Vec<bool>,
        cycles: Vec<Vec<usize>>,
        path: Vec<usize>,
        out: Vec<DicyclicSubgraph>,
        budget: &'a Budget,
    }

    impl Search<'_> {
        fn choose_anchor(
            &mut self,
            min_anchor: usize,
            remaining: usize,
        ) -> Result<(), PathwaysError> {
            self.budget.charge(1)?;
            if remaining == 0 {
                self.out.push(DicyclicSubgraph {
                    cycles: self.cycles.clone(),
                });
                return Ok(());
            }
            for anchor in min_anchor..=self.n {
                if self.used[anchor] {
                    continue;
                }
                self.used[anchor] = true;
                self.path.push(anchor);
                self.extend_cycle(anchor, anchor, remaining - 1)?;
                self.path.pop();
                self.used[anchor] = false;
            }
            Ok(())
        }

        fn extend_cycle(
            &mut self,
            anchor: usize,
            at: usize,
            remaining: usize,
        ) -> Result<(), PathwaysError> {
            self.budget.charge(1)?;
            // close the cycle here; the path buffer restarts for the next
            // anchor and is restored before this cycle keeps growing
            if (self.nonzero)(at, anchor) {
                self.cycles.push(self.path.clone());
                let saved = std::mem::take(&mut self.path);
                self.choose_anchor(anchor + 1, remaining)?;
                self.path = saved;
                self.cycles.pop();
            }
            if remaining == 0 {
                return Ok(());
            }
            // extend through unused vertices above the anchor
            for next in anchor + 1..=self.n {
                if self.used[next] || !(self.nonzero)(at, next) {
                    continue;
                }
                self.used[next] = true;
                self.path.push(next);
                self.extend_cycle(anchor, next, remaining - 1)?;
                self.path.pop();
                self.used[next] = false;
            }
            Ok(())
        }
    }

    let mut search = Search {
        n,
        nonzero: &nonzero,
        used: vec![false; n + 1],
        cycles: Vec::new(),
        path: Vec::new(),
        out: Vec::new(),
        budget,
    };
    search.choose_anchor(1, m)?;
    Ok(search.out)
}

/// The pebbling process over the cyclic block graph: starting at block `xi`,
/// repeatedly advance to the next block with remaining capacity and take its
/// minimal unchosen element. Returns the vertex sequence `(v_1..v_n)` and
/// the block sequence `(t_1..t_n)`.
pub fn v_sequence(c: &ParabolicContraction, xi: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(xi >= 1 && xi <= c.s(), "xi out of range");
    let s = c.s();
    let mut capacity: Vec<usize> = c.blocks.clone();
    let mut next_free: Vec<Box<dyn Iterator<Item = usize>>> = Vec::new();
    for k in 1..=s {
        next_free.push(Box::new(c.interval(k)));
    }
    let mut v = Vec::with_capacity(c.n);
    let mut t = Vec::with_capacity(c.n);
    let mut cur = xi;
    for step in 0..c.n {
        if step > 0 {
            // advance cyclically to the next block with capacity, moving at
            // least one step
            cur = cur % s + 1;
            while capacity[cur - 1] == 0 {
                cur = cur % s + 1;
            }
        }
        let chosen = next_free[cur - 1].next().expect("capacity tracked");
        capacity[cur - 1] -= 1;
        v.push(chosen);
        t.push(cur);
    }
    (v, t)
}

/// The companion linear form
/// `q = Σ_ℓ X_ℓ e*[v_1, v_ℓ] + Σ_ℓ e*[v_{ℓ+1}, v_ℓ]`.
pub fn companion_q(c: &ParabolicContraction, xi: usize) -> (LinearForm, Vec<usize>) {
    let (v, _) = v_sequence(c, xi);
    let mut q = LinearForm::new();
    for (l, &vl) in v.iter().enumerate() {
        q.set(v[0], vl, Poly::aux((l + 1) as u32));
    }
    for l in 0..c.n - 1 {
        q.set(v[l + 1], v[l], Poly::one());
    }
    (q, v)
}

/// One certified Kostant–Weierstrass line: `F_m^•(q) = c · X_m`.
#[derive(Debug, Clone)]
pub struct KwLine {
    pub m: usize,
    pub constant: Rational,
    pub nminus_degree_matches: bool,
}

/// Certificate for hypothesis (I'): the companion form restricts the free
/// generators to coordinates.
#[derive(Debug)]
pub struct KwCertificate {
    pub xi: usize,
    pub v: Vec<usize>,
    pub lines: Vec<KwLine>,
    pub certified: bool,
    pub failures: Vec<String>,
}

/// Builds the companion form for `xi` and checks, for every `m`, that the
/// pathway has a unique `m`-vertex dicyclic subgraph whose monomial has the
/// `n⁻`-degree of `F_m`, and that `F_m^•` evaluates to a nonzero multiple of
/// `X_m`.
pub fn verify_hypothesis_i(
    c: &ParabolicContraction,
    xi: usize,
    budget: &Budget,
) -> Result<KwCertificate, PathwaysError> {
    let (q, v) = companion_q(c, xi);
    let pathway = graph_of_gl(&q, c.n);
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for m in 1..=c.n {
        let subs = dicyclic_subgraphs(&pathway, m, budget)?;
        if subs.len() != 1 {
            failures.push(format!("m={m}: {} dicyclic subgraphs", subs.len()));
            continue;
        }
        let mono = subgraph_monomial(&subs[0], MonomialFlavor::Gl, c.n);
        let sdeg = mono.partial_degree(c.nminus_gens()).unwrap_or(0) as usize;
        let expected = crate::invariants::deg_nminus_f(c, m);
        let deg_ok = sdeg == expected;
        if !deg_ok {
            failures.push(format!("m={m}: monomial degree {sdeg} != {expected}"));
        }
        let value = bullet_f(c, m, budget)?.evaluate(&q);
        match value.proportional(&Poly::aux(m as u32)) {
            Some(cst) => lines.push(KwLine {
                m,
                constant: cst,
                nminus_degree_matches: deg_ok,
            }),
            None => failures.push(format!("m={m}: F_m^•(q) = {value} is not ∝ X{m}")),
        }
    }
    let certified = failures.is_empty() && lines.len() == c.n;
    Ok(KwCertificate {
        xi,
        v,
        lines,
        certified,
        failures,
    })
}

/// Searches `f` for a generator of partial degree exactly one — a witness
/// that `f` is not a proper power, by additivity of partial degrees.
pub fn hypothesis_ii_witness(f: &Poly) -> Option<Generator> {
    f.support()
        .into_iter()
        .find(|g| f.partial_degree(|h| h == g) == Some(1))
}

/// A verified separating form for the factor `F_{m,t}`.
#[derive(Debug)]
pub struct SeparatingForm {
    pub xi: usize,
    pub q: LinearForm,
    /// `F_{m,t}(q)` itself, a nonzero multiple of `X1`.
    pub isolated_value: Poly,
    /// `(μ, τ, value)` for the other factors, all nonzero constants.
    pub other_values: Vec<(usize, usize, Rational)>,
}

/// Substitutes each auxiliary indeterminate through `f`.
pub fn specialize_aux(p: &Poly, f: &impl Fn(u32) -> Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let mut acc = Poly::constant(c.clone());
        for &(g, e) in m.factors() {
            let factor = match g {
                Generator::Aux(l) => f(l),
                Generator::MatrixEntry { .. } => Poly::generator(g),
            };
            for _ in 0..e {
                acc = acc.mul(&factor);
            }
        }
        out.add_assign(&acc);
    }
    out
}

/// The admissible pebbling starts for the factor `t` of `m`: the blocks
/// whose interval lies inside the row segment `I^{(t)}`.
fn xi_range(c: &ParabolicContraction, m: usize, t: usize) -> Vec<usize> {
    let i = c.size_for_m(m).expect("m in M_1");
    let kappa = &c.kappa[i];
    let r = kappa.len();
    if t < r {
        (kappa[t - 1] + 1..=kappa[t]).collect()
    } else {
        (1..=kappa[0]).chain(kappa[r - 1] + 1..=c.s()).collect()
    }
}

/// Builds a companion form with `xi` inside the `t`-th window, specializes
/// `X_m -> X1`, all other `X_μ -> 1`, and verifies that exactly the factor
/// `F_{m,t}` picks up the indeterminate. Every admissible `xi` is tried in
/// increasing order; the first verified form is returned.
pub fn separating_q_gl(
    c: &ParabolicContraction,
    m: usize,
    t: usize,
    certificates: &[FactorizationCertificate],
) -> Result<SeparatingForm, PathwaysError> {
    if !c.m_sets[2].contains(&m) {
        return Err(PathwaysError::VerificationFailed(format!(
            "m={m} is not in M_2"
        )));
    }
    let mut last_failure = String::new();
    for xi in xi_range(c, m, t) {
        let (q0, _) = companion_q(c, xi);
        let subst = |l: u32| -> Poly {
            if l as usize == m {
                Poly::aux(1)
            } else {
                Poly::one()
            }
        };
        let q = q0.map_images(|p| specialize_aux(p, &subst));
        match verify_separating(m, t, &q, certificates) {
            Ok(form) => {
                return Ok(SeparatingForm {
                    xi,
                    q,
                    isolated_value: form.0,
                    other_values: form.1,
                })
            }
            Err(msg) => last_failure = format!("xi={xi}: {msg}"),
        }
    }
    Err(PathwaysError::VerificationFailed(last_failure))
}

type SeparatingValues = (Poly, Vec<(usize, usize, Rational)>);

fn verify_separating(
    m: usize,
    t: usize,
    q: &LinearForm,
    certificates: &[FactorizationCertificate],
) -> Result<SeparatingValues, String> {
    let mut isolated = None;
    let mut others = Vec::new();
    for cert in certificates {
        for factor in &cert.factors {
            let (mu, tau) = factor.label;
            let value = factor.poly.evaluate(q);
            if (mu, tau) == (m, t) {
                match value.proportional(&Poly::aux(1)) {
                    Some(_) => isolated = Some(value),
                    None => {
                        return Err(format!("F_{{{mu},{tau}}}(q) = {value} not ∝ X1"));
                    }
                }
            } else {
                match value.as_constant() {
                    Some(cst) if !cst.is_zero() => others.push((mu, tau, cst)),
                    _ => {
                        return Err(format!("F_{{{mu},{tau}}}(q) = {value} not a nonzero constant"));
                    }
                }
            }
        }
    }
    match isolated {
        Some(v) => Ok((v, others)),
        None => Err(format!("factor ({m},{t}) absent from certificates")),
    }
}

/// Convenience wrapper computing the certificates it needs.
pub fn separating_q_gl_fresh(
    c: &ParabolicContraction,
    m: usize,
    t: usize,
    budget: &Budget,
) -> Result<SeparatingForm, PathwaysError> {
    let certificates: Vec<FactorizationCertificate> = (1..=c.n)
        .map(|mu| factor_components(c, mu, budget))
        .collect::<Result<_, _>>()?;
    separating_q_gl(c, m, t, &certificates)
}
