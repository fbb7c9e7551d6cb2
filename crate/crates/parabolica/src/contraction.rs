//! Standard parabolic contractions of `gl_n`: block combinatorics, the
//! contracted Lie bracket, the adjoint action on polynomials, weights,
//! truncation bases and randomized index estimation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::{rat, Generator, Poly, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContractionError {
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("a contraction needs at least two blocks")]
    TooFewBlocks,
    #[error("blocks must be positive")]
    EmptyBlock,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("not a semi-invariant")]
    NotSemiInvariant,
    #[error("basis is not closed under the bracket")]
    NotClosedUnderBracket,
    #[error("cannot parse descriptor: {0}")]
    BadDescriptor(String),
    #[error("symplectic flavor requires a symmetric block sequence")]
    NotSymmetric,
    #[error("symplectic flavor requires even n")]
    OddDimension,
}

/// Which side of the contraction a matrix entry lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// The parabolic subalgebra (block upper triangle including the Levi).
    P,
    /// The abelianized opposite nilradical (strict block lower triangle).
    NMinus,
}

/// A weight expressed by its values on the diagonal matrix units
/// `e[1,1], ..., e[n,n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub coords: Vec<Rational>,
}

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector {
            coords: vec![Rational::zero(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> WeightVector {
        WeightVector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// A standard parabolic contraction `q = p ⋉ n⁻` of `gl_n`, described by the
/// block sizes `(i_1, ..., i_s)` of a Levi factor, with every derived
/// combinatorial datum computed up front.
#[derive(Debug, Clone)]
pub struct ParabolicContraction {
    pub n: usize,
    pub blocks: Vec<usize>,
    /// Cut points `0 = ι_0 < ι_1 < ... < ι_s = n`.
    pub iota: Vec<usize>,
    /// `block_of[x-1]` is the 1-based block index k(x).
    block_of: Vec<usize>,
    pub i_max: usize,
    /// `rho[i]` = number of blocks of size `i`, for `i` in `0..=i_max`.
    pub rho: Vec<usize>,
    /// `m[i] = Σ_k min(i, i_k)`, for `i` in `0..=i_max`.
    pub m: Vec<usize>,
    /// `kappa[i]` = ordered 1-based block indices `k` with `i_k = i`.
    pub kappa: Vec<Vec<usize>>,
    /// `big_k[i]` = ordered 1-based block indices `k` with `i_k >= i`.
    pub big_k: Vec<Vec<usize>>,
    /// Block sizes that occur (`𝐈`), ascending.
    pub sizes: Vec<usize>,
    /// `m_sets[j]` = `𝐌_j` = `{ m_i : ρ_i >= j }` for j = 0, 1, 2.
    pub m_sets: [Vec<usize>; 3],
}

impl ParabolicContraction {
    pub fn new(blocks: Vec<usize>) -> Result<Self, ContractionError> {
        if blocks.len() < 2 {
            return Err(ContractionError::TooFewBlocks);
        }
        if blocks.contains(&0) {
            return Err(ContractionError::EmptyBlock);
        }
        let n: usize = blocks.iter().sum();
        let s = blocks.len();
        let mut iota = Vec::with_capacity(s + 1);
        iota.push(0);
        let mut acc = 0;
        for &b in &blocks {
            acc += b;
            iota.push(acc);
        }
        let mut block_of = vec![0usize; n];
        for k in 1..=s {
            for x in iota[k - 1] + 1..=iota[k] {
                block_of[x - 1] = k;
            }
        }
        let i_max = *blocks.iter().max().unwrap();
        let mut rho = vec![0usize; i_max + 1];
        for &b in &blocks {
            rho[b] += 1;
        }
        let m: Vec<usize> = (0..=i_max)
            .map(|i| blocks.iter().map(|&ik| ik.min(i)).sum())
            .collect();
        let kappa: Vec<Vec<usize>> = (0..=i_max)
            .map(|i| {
                (1..=s)
                    .filter(|&k| blocks[k - 1] == i)
                    .collect()
            })
            .collect();
        let big_k: Vec<Vec<usize>> = (0..=i_max)
            .map(|i| {
                (1..=s)
                    .filter(|&k| blocks[k - 1] >= i)
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = (1..=i_max).filter(|&i| rho[i] >= 1).collect();
        let m_sets = [
            (0..=i_max).map(|i| m[i]).collect::<Vec<_>>(),
            (1..=i_max).filter(|&i| rho[i] >= 1).map(|i| m[i]).collect(),
            (1..=i_max).filter(|&i| rho[i] >= 2).map(|i| m[i]).collect(),
        ];
        Ok(ParabolicContraction {
            n,
            blocks,
            iota,
            block_of,
            i_max,
            rho,
            m,
            kappa,
            big_k,
            sizes,
            m_sets,
        })
    }

    pub fn s(&self) -> usize {
        self.blocks.len()
    }

    /// Number of isomorphism classes of Levi blocks (`p = |𝐈|`).
    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    /// The interval `I_k` (1-based block index) as an inclusive range.
    pub fn interval(&self, k: usize) -> std::ops::RangeInclusive<usize> {
        self.iota[k - 1] + 1..=self.iota[k]
    }

    /// The 1-based block index `k(x)`.
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x - 1]
    }

    /// Number of factors `r_m` in the decomposition of `F_m^•`.
    pub fn r(&self, m: usize) -> usize {
        match (1..=self.i_max).find(|&i| self.rho[i] >= 1 && self.m[i] == m) {
            Some(i) => self.rho[i],
            None => 1,
        }
    }

    /// The unique `i` with `m_{i-1} < m <= m_i` (for `1 <= m <= n`).
    pub fn level_of(&self, m: usize) -> usize {
        (1..=self.i_max)
            .find(|&i| self.m[i - 1] < m && m <= self.m[i])
            .expect("m within 1..=n")
    }

    /// Whether `m` lies in `𝐌_1`, returning the associated block size.
    pub fn size_for_m(&self, m: usize) -> Option<usize> {
        (1..=self.i_max).find(|&i| self.rho[i] >= 1 && self.m[i] == m)
    }

    pub fn check_range(&self, x: usize) -> Result<(), ContractionError> {
        if x >= 1 && x <= self.n {
            Ok(())
        } else {
            Err(ContractionError::IndexOutOfRange(x, self.n))
        }
    }

    /// Places `e[p,q]` in the parabolic or in the opposite nilradical.
    pub fn membership(&self, p: usize, q: usize) -> Result<Region, ContractionError> {
        self.check_range(p)?;
        self.check_range(q)?;
        if self.block_of(p) > self.block_of(q) {
            Ok(Region::NMinus)
        } else {
            Ok(Region::P)
        }
    }

    pub fn in_nminus(&self, p: usize, q: usize) -> bool {
        self.block_of(p) > self.block_of(q)
    }

    /// Predicate describing the generators that span `n⁻`.
    pub fn nminus_gens(&self) -> impl Fn(&Generator) -> bool + '_ {
        move |g| match g.as_entry() {
            Some((p, q)) => self.in_nminus(p, q),
            None => false,
        }
    }

    /// Predicate describing the diagonal generators.
    pub fn diagonal_gens(&self) -> impl Fn(&Generator) -> bool {
        |g| matches!(g.as_entry(), Some((p, q)) if p == q)
    }

    /// The contracted bracket `[e[a], e[b]]_q`.
    ///
    /// Computes the `gl_n` bracket and then projects: both arguments in `p`
    /// keep every term, a mixed pair keeps only the `n⁻` part, and two `n⁻`
    /// arguments commute.
    pub fn bracket(
        &self,
        a: (usize, usize),
        b: (usize, usize),
    ) -> Result<Poly, ContractionError> {
        let ra = self.membership(a.0, a.1)?;
        let rb = self.membership(b.0, b.1)?;
        if ra == Region::NMinus && rb == Region::NMinus {
            return Ok(Poly::zero());
        }
        let keep_all = ra == Region::P && rb == Region::P;
        let mut out = Poly::zero();
        let mut push = |p: usize, q: usize, c: i64| {
            if keep_all || self.in_nminus(p, q) {
                out.add_term(
                    crate::poly::Monomial::generator(Generator::entry(p, q)),
                    rat(c),
                );
            }
        };
        // [e_{a0,a1}, e_{b0,b1}] = δ_{a1,b0} e_{a0,b1} − δ_{b1,a0} e_{b0,a1}
        if a.1 == b.0 {
            push(a.0, b.1, 1);
        }
        if b.1 == a.0 {
            push(b.0, a.1, -1);
        }
        Ok(out)
    }

    /// Adjoint action of the generator `x`, extended as a derivation.
    pub fn act(&self, x: (usize, usize), f: &Poly) -> Result<Poly, ContractionError> {
        self.check_range(x.0)?;
        self.check_range(x.1)?;
        let mut out = Poly::zero();
        for (m, c) in f.terms() {
            for (idx, &(g, e)) in m.factors().iter().enumerate() {
                let (p, q) = match g.as_entry() {
                    Some(pq) => pq,
                    None => continue, // aux indeterminates are constants for the action
                };
                let br = self.bracket(x, (p, q))?;
                if br.is_zero() {
                    continue;
                }
                // the cofactor monomial with one copy of g removed
                let mut rest: Vec<(Generator, u32)> = m.factors().to_vec();
                if rest[idx].1 == 1 {
                    rest.remove(idx);
                } else {
                    rest[idx].1 -= 1;
                }
                let coeff = c * rat(e as i64);
                let cof = Poly::from_term(crate::poly::Monomial::from_pairs(rest), coeff);
                out.add_assign(&br.mul(&cof));
            }
        }
        Ok(out)
    }

    /// Adjoint action of a degree-1 element (a linear combination of matrix
    /// entries) on `f`.
    pub fn act_linear(&self, x: &Poly, f: &Poly) -> Result<Poly, ContractionError> {
        let mut out = Poly::zero();
        for (m, c) in x.terms() {
            let factors = m.factors();
            assert!(
                factors.len() == 1 && factors[0].1 == 1,
                "act_linear expects a degree-1 polynomial"
            );
            let (p, q) = factors[0].0.as_entry().expect("matrix entry");
            out.add_assign(&self.act((p, q), f)?.scale(c));
        }
        Ok(out)
    }

    /// The weight of a semi-invariant: eigenvalues on the diagonal matrix
    /// units, with every off-diagonal generator required to annihilate `f`.
    ///
    /// Any weight vanishes on `q' ⊇ span{e[u,v] : u ≠ v}`, so off-Cartan
    /// eigenvalues can only be zero; this makes the test finite and exact.
    pub fn weight_of(&self, f: &Poly) -> Result<WeightVector, ContractionError> {
        if f.is_zero() {
            return Err(ContractionError::ZeroPolynomial);
        }
        // the diagonal acts monomial-wise: eigenvector <=> all monomials share
        // one weight vector
        let mut weight: Option<Vec<Rational>> = None;
        for (m, _) in f.terms() {
            let mut w = vec![Rational::zero(); self.n];
            for &(g, e) in m.factors() {
                if let Some((p, q)) = g.as_entry() {
                    w[p - 1] += rat(e as i64);
                    w[q - 1] -= rat(e as i64);
                }
            }
            match &weight {
                None => weight = Some(w),
                Some(prev) if *prev == w => {}
                Some(_) => return Err(ContractionError::NotSemiInvariant),
            }
        }
        for u in 1..=self.n {
            for v in 1..=self.n {
                if u != v && !self.act((u, v), f)?.is_zero() {
                    return Err(ContractionError::NotSemiInvariant);
                }
            }
        }
        Ok(WeightVector {
            coords: weight.unwrap(),
        })
    }

    /// The fundamental weight `ϖ_ℓ` on the diagonal basis:
    /// `ϖ_ℓ(e[j,j]) = [j <= ℓ] − ℓ/n`, with `ϖ_0 = ϖ_n = 0`.
    pub fn fundamental_weight(&self, l: usize) -> WeightVector {
        let n = self.n;
        if l == 0 || l == n {
            return WeightVector::zero(n);
        }
        WeightVector {
            coords: (1..=n)
                .map(|j| {
                    let ind = if j <= l { rat(1) } else { rat(0) };
                    ind - Rational::new(BigInt::from(l as i64), BigInt::from(n as i64))
                })
                .collect(),
        }
    }

    /// `w_k = ϖ_{ι_{k−1}} − ϖ_{ι_k}`.
    pub fn w(&self, k: usize) -> WeightVector {
        self.fundamental_weight(self.iota[k - 1])
            .sub(&self.fundamental_weight(self.iota[k]))
    }

    /// All subsets `J` of size `m` whose largest part `|J ∩ I_k|` equals the
    /// level `i` of `m` — exactly the minors of maximal degree in `n⁻`.
    pub fn jcal(&self, m: usize) -> Result<Vec<Vec<usize>>, ContractionError> {
        self.check_range(m)?;
        let i = self.level_of(m);
        let caps: Vec<usize> = self.blocks.iter().map(|&ik| ik.min(i)).collect();
        let mut out = Vec::new();
        let mut profile = vec![0usize; self.s()];
        self.profiles(&caps, m, 0, &mut profile, &mut |profile| {
            let mut subsets: Vec<Vec<usize>> = vec![Vec::new()];
            for (k, &jk) in profile.iter().enumerate() {
                let elems: Vec<usize> = self.interval(k + 1).collect();
                let mut next = Vec::new();
                for base in &subsets {
                    for combo in combinations(&elems, jk) {
                        let mut j = base.clone();
                        j.extend(combo);
                        next.push(j);
                    }
                }
                subsets = next;
            }
            out.extend(subsets);
        });
        Ok(out)
    }

    /// Enumerates block profiles `(j_1..j_s)` with `j_k <= caps[k]` summing
    /// to `m`, invoking `emit` for each.
    fn profiles(
        &self,
        caps: &[usize],
        m: usize,
        k: usize,
        profile: &mut Vec<usize>,
        emit: &mut impl FnMut(&[usize]),
    ) {
        if k == caps.len() {
            if m == 0 {
                emit(profile);
            }
            return;
        }
        let rest: usize = caps[k + 1..].iter().sum();
        let lo = m.saturating_sub(rest);
        let hi = caps[k].min(m);
        for jk in lo..=hi {
            profile[k] = jk;
            self.profiles(caps, m - jk, k + 1, profile, emit);
        }
        profile[k] = 0;
    }

    /// A basis of the canonical truncation
    /// `q_Λ = q' ⊕ ⊕_i ℂ·id^{(i)}`, as degree-1 polynomials:
    /// all off-diagonal matrix units, the interior coroots
    /// `h_ι = e[ι,ι] − e[ι+1,ι+1]` for `ι ∉ I_p`, and the block-class
    /// identities `id^{(i)} = Σ_{|I_k|=i} Σ_{l∈I_k} e[l,l]`.
    pub fn q_lambda_basis(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in 1..=self.n {
                if u != v {
                    out.push(Poly::entry(u, v));
                }
            }
        }
        for l in 1..self.n {
            if !self.iota.contains(&l) {
                out.push(Poly::entry(l, l).sub(&Poly::entry(l + 1, l + 1)));
            }
        }
        for &i in &self.sizes {
            let mut id_i = Poly::zero();
            for &k in &self.kappa[i] {
                for l in self.interval(k) {
                    id_i.add_assign(&Poly::entry(l, l));
                }
            }
            out.push(id_i);
        }
        out
    }

    /// A basis of the full contraction `q` itself.
    pub fn q_basis(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in 1..=self.n {
                out.push(Poly::entry(u, v));
            }
        }
        out
    }

    /// Estimates the index of the Lie algebra spanned by `basis` (which must
    /// be closed under the contracted bracket): the minimum over seeded
    /// random functionals `f` of `dim − rank(f([x_i, x_j]))`.
    ///
    /// Entries are drawn uniformly from `-10^4..=10^4`. The result is an
    /// upper bound on the index that is exact for generic functionals.
    pub fn index_estimate(
        &self,
        basis: &[Poly],
        trials: usize,
        seed: u64,
    ) -> Result<usize, ContractionError> {
        let dim = basis.len();
        let brackets = self.closure_table(basis)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best = dim;
        for _ in 0..trials.max(1) {
            let f: Vec<i64> = (0..self.n * self.n)
                .map(|_| rng.gen_range(-10_000..=10_000))
                .collect();
            let mut denom_lcm = BigInt::from(1);
            let mut rat_mat = vec![vec![Rational::zero(); dim]; dim];
            for i in 0..dim {
                for j in i + 1..dim {
                    let mut v = Rational::zero();
                    for (m, c) in brackets[i][j].terms() {
                        let (p, q) = m.factors()[0].0.as_entry().unwrap();
                        v += c * rat(f[(p - 1) * self.n + (q - 1)]);
                    }
                    denom_lcm = num_integer::lcm(denom_lcm, v.denom().clone());
                    rat_mat[i][j] = v.clone();
                    rat_mat[j][i] = -v;
                }
            }
            // a global scaling keeps the matrix integral without moving rank
            let mat: Vec<Vec<BigInt>> = rat_mat
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|v| (v * Rational::from_integer(denom_lcm.clone())).to_integer())
                        .collect()
                })
                .collect();
            let rank = bareiss_rank(mat);
            best = best.min(dim - rank);
        }
        Ok(best)
    }

    /// The table of pairwise brackets, failing when some bracket leaves the
    /// span of `basis`.
    fn closure_table(&self, basis: &[Poly]) -> Result<Vec<Vec<Poly>>, ContractionError> {
        let dim = basis.len();
        // row-echelon form of the basis in e-coordinates, for span membership
        let coords = |p: &Poly| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); self.n * self.n];
            for (m, c) in p.terms() {
                let fs = m.factors();
                assert!(fs.len() == 1 && fs[0].1 == 1, "basis must be degree 1");
                let (r, q) = fs[0].0.as_entry().expect("matrix entry basis");
                v[(r - 1) * self.n + (q - 1)] = c.clone();
            }
            v
        };
        let mut echelon: Vec<Vec<Rational>> = Vec::new();
        for b in basis {
            let mut v = coords(b);
            reduce_against(&mut v, &echelon);
            if v.iter().any(|c| !c.is_zero()) {
                insert_echelon(&mut echelon, v);
            }
        }
        let mut table = vec![vec![Poly::zero(); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let br = self.bracket_linear(&basis[i], &basis[j])?;
                if !br.is_zero() {
                    let mut v = coords(&br);
                    reduce_against(&mut v, &echelon);
                    if v.iter().any(|c| !c.is_zero()) {
                        return Err(ContractionError::NotClosedUnderBracket);
                    }
                }
                table[i][j] = br;
            }
        }
        Ok(table)
    }

    /// Bracket of two degree-1 polynomials, extended bilinearly.
    pub fn bracket_linear(&self, x: &Poly, y: &Poly) -> Result<Poly, ContractionError> {
        let mut out = Poly::zero();
        for (mx, cx) in x.terms() {
            let (p, q) = mx.factors()[0].0.as_entry().expect("matrix entry");
            for (my, cy) in y.terms() {
                let (r, t) = my.factors()[0].0.as_entry().expect("matrix entry");
                out.add_assign(&self.bracket((p, q), (r, t))?.scale(&(cx * cy)));
            }
        }
        Ok(out)
    }
}

/// All `k`-element subsets of `elems`, in lexicographic order.
pub fn combinations(elems: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(elems: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=elems.len().saturating_sub(need) {
            cur.push(elems[i]);
            rec(elems, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(elems, k, 0, &mut cur, &mut out);
    out
}

/// Reduces `v` against rows in echelon form (each row led by a 1 at a column
/// where all other rows vanish).
fn reduce_against(v: &mut [Rational], echelon: &[Vec<Rational>]) {
    for row in echelon {
        let lead = row.iter().position(|c| !c.is_zero()).unwrap();
        if !v[lead].is_zero() {
            let factor = v[lead].clone() / &row[lead];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &factor * b;
            }
        }
    }
}

fn insert_echelon(echelon: &mut Vec<Vec<Rational>>, v: Vec<Rational>) {
    echelon.push(v);
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut mat: Vec<Vec<BigInt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        // find a pivot
        let pivot = (row..rows).find(|&r| !mat[r][col].is_zero());
        let Some(p) = pivot else { continue };
        mat.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &mat[row][col] * &mat[r][c] - &mat[r][col] * &mat[row][c];
                mat[r][c] = num / &prev;
            }
            mat[r][col] = BigInt::zero();
        }
        prev = mat[row][col].clone();
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Exact rank of a rational matrix (rows are vectors).
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        reduce_against(&mut v, &echelon);
        if v.iter().any(|c| !c.is_zero()) {
            insert_echelon(&mut echelon, v);
        }
    }
    echelon.len()
}

/// Whether `v` lies in the span of `rows`.
pub fn in_span(v: &[Rational], rows: &[Vec<Rational>]) -> bool {
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for r in rows {
        let mut w = r.clone();
        reduce_against(&mut w, &echelon);
        if w.iter().any(|c| !c.is_zero()) {
            insert_echelon(&mut echelon, w);
        }
    }
    let mut w = v.to_vec();
    reduce_against(&mut w, &echelon);
    w.iter().all(|c| c.is_zero())
}

/// The flavor selected by a contraction descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Gl,
    Sl,
    Sp,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Gl => write!(f, "gl"),
            Flavor::Sl => write!(f, "sl"),
            Flavor::Sp => write!(f, "sp"),
        }
    }
}

/// Parses a descriptor such as `gl:4,1,4,2,1`. The `sp` prefix additionally
/// requires the block sequence to be a palindrome (the symmetric condition
/// for a contraction sitting above `sp_n`).
pub fn parse_descriptor(desc: &str) -> Result<(Flavor, ParabolicContraction), ContractionError> {
    let (prefix, rest) = desc
        .split_once(':')
        .ok_or_else(|| ContractionError::BadDescriptor(format!("missing ':' in {desc:?}")))?;
    let flavor = match prefix {
        "gl" => Flavor::Gl,
        "sl" => Flavor::Sl,
        "sp" => Flavor::Sp,
        other => {
            return Err(ContractionError::BadDescriptor(format!(
                "unknown prefix {other:?} (expected gl, sl or sp)"
            )))
        }
    };
    let blocks: Vec<usize> = rest
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| ContractionError::BadDescriptor(format!("bad block {t:?}: {e}")))
        })
        .collect::<Result<_, _>>()?;
    let c = ParabolicContraction::new(blocks)?;
    if flavor == Flavor::Sp {
        if c.n % 2 != 0 {
            return Err(ContractionError::OddDimension);
        }
        let rev: Vec<usize> = c.blocks.iter().rev().copied().collect();
        if rev != c.blocks {
            return Err(ContractionError::NotSymmetric);
        }
    }
    Ok((flavor, c))
}

/// Whether the block sequence is symmetric under the antidiagonal flip.
pub fn is_symmetric_cpss(c: &ParabolicContraction) -> bool {
    let rev: Vec<usize> = c.blocks.iter().rev().copied().collect();
    rev == c.blocks
}

/// All proper block compositions of `n` (at least two blocks).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=left {
            cur.push(first);
            rec(left - first, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_example() -> ParabolicContraction {
        ParabolicContraction::new(vec![4, 1, 4, 2, 1]).unwrap()
    }

    #[test]
    fn derived_combinatorics_of_running_example() {
        let c = running_example();
        assert_eq!(c.n, 12);
        assert_eq!(c.iota, vec![0, 4, 5, 9, 11, 12]);
        assert_eq!(c.sizes, vec![1, 2, 4]);
        assert_eq!(c.m_sets[1], vec![5, 8, 12]);
        assert_eq!(c.m[1], 5);
        assert_eq!(c.m[2], 8);
        assert_eq!(c.m[3], 10);
        assert_eq!(c.m[4], 12);
        assert_eq!(c.kappa[1], vec![2, 5]);
        assert_eq!(c.kappa[2], vec![4]);
        assert_eq!(c.kappa[4], vec![1, 3]);
        assert!(!c.m_sets[1].contains(&10));
    }

    #[test]
    fn elementary_block_identities_hold_for_n_up_to_7() {
        for n in 2..=7 {
            for blocks in compositions(n) {
                let c = ParabolicContraction::new(blocks.clone()).unwrap();
                assert_eq!(c.rho[0], 0);
                assert_eq!(c.m[0], 0);
                assert_eq!(c.m[1], c.s(), "m_1 = s for {blocks:?}");
                assert_eq!(c.m[c.i_max], n, "m_imax = n for {blocks:?}");
                for i in 1..=c.i_max {
                    assert_eq!(c.big_k[i].len(), c.m[i] - c.m[i - 1], "{blocks:?}");
                }
                // (m_i − m_{i−1}) non-increasing, strictly across i in 𝐈
                for i in 1..c.i_max {
                    let d1 = c.m[i] - c.m[i - 1];
                    let d2 = c.m[i + 1] - c.m[i];
                    assert!(d2 <= d1);
                    if c.rho[i] >= 1 {
                        assert!(d2 < d1, "{blocks:?} at i={i}");
                    }
                }
                // m ∈ 𝐌_1, m ≠ n implies m−1 ∉ 𝐌_0
                for &m in &c.m_sets[1] {
                    if m != n {
                        assert!(!c.m_sets[0].contains(&(m - 1)), "{blocks:?} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let c = running_example();
        assert_eq!(c.membership(5, 1).unwrap(), Region::NMinus);
        assert_eq!(c.membership(1, 5).unwrap(), Region::P);
        assert_eq!(c.membership(3, 3).unwrap(), Region::P);
        assert!(c.membership(0, 3).is_err());
        assert!(c.membership(1, 13).is_err());
    }

    #[test]
    fn bracket_examples() {
        let borel2 = ParabolicContraction::new(vec![1, 1]).unwrap();
        // the diagonal part of a mixed bracket projects away
        assert!(borel2.bracket((1, 2), (2, 1)).unwrap().is_zero());
        assert!(borel2.bracket((2, 1), (1, 2)).unwrap().is_zero());
        // Cartan action is preserved
        assert_eq!(
            borel2.bracket((1, 1), (2, 1)).unwrap(),
            Poly::entry(2, 1).neg()
        );
    }

    #[test]
    fn act_examples() {
        let borel3 = ParabolicContraction::new(vec![1, 1, 1]).unwrap();
        let f = Poly::entry(2, 1).mul(&Poly::entry(1, 2));
        assert!(borel3.act((1, 1), &f).unwrap().is_zero());
        assert!(borel3.act((1, 2), &Poly::constant(rat(5))).unwrap().is_zero());
        assert_eq!(
            borel3.act((2, 2), &Poly::entry(2, 1)).unwrap(),
            Poly::entry(2, 1)
        );
    }

    #[test]
    fn weight_of_examples() {
        let borel3 = ParabolicContraction::new(vec![1, 1, 1]).unwrap();
        let w = borel3.weight_of(&Poly::entry(2, 1)).unwrap();
        assert_eq!(w.coords, vec![rat(-1), rat(1), rat(0)]);

        let borel2 = ParabolicContraction::new(vec![1, 1]).unwrap();
        let mixed = Poly::entry(2, 1).add(&Poly::entry(1, 2));
        assert_eq!(
            borel2.weight_of(&mixed),
            Err(ContractionError::NotSemiInvariant)
        );
        assert_eq!(
            borel2.weight_of(&Poly::zero()),
            Err(ContractionError::ZeroPolynomial)
        );
    }

    #[test]
    fn jcal_running_example_profile() {
        let c = running_example();
        let js = c.jcal(8).unwrap();
        // every J in 𝒥(8) has block profile (2,1,2,2,1)
        for j in &js {
            let mut profile = vec![0usize; c.s()];
            for &x in j {
                profile[c.block_of(x) - 1] += 1;
            }
            assert_eq!(profile, vec![2, 1, 2, 2, 1]);
        }
        assert_eq!(js.len(), 36);
    }

    #[test]
    fn jcal_borel_full_set() {
        let c = ParabolicContraction::new(vec![1, 1, 1]).unwrap();
        assert_eq!(c.jcal(3).unwrap(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn jcal_two_blocks_brute_force() {
        // oracle: filter all 2-subsets of [1,4] on max part = 1
        let c = ParabolicContraction::new(vec![2, 2]).unwrap();
        let mut expected = Vec::new();
        for a in 1..=4usize {
            for b in a + 1..=4 {
                let max_part = if c.block_of(a) == c.block_of(b) { 2 } else { 1 };
                if max_part == 1 {
                    expected.push(vec![a, b]);
                }
            }
        }
        let mut got = c.jcal(2).unwrap();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(expected.len(), 4);
    }

    #[test]
    fn q_lambda_basis_counts() {
        assert_eq!(running_example().q_lambda_basis().len(), 144 - 2);
        for n in 2..=6 {
            let borel = ParabolicContraction::new(vec![1; n]).unwrap();
            assert_eq!(borel.q_lambda_basis().len(), n * n - (n - 1));
        }
        let rc = ParabolicContraction::new(vec![2, 2]).unwrap();
        assert_eq!(rc.q_lambda_basis().len(), 15);
    }

    #[test]
    fn index_of_abelian_algebra_is_its_dimension() {
        // n⁻ of the Borel of gl_3 is abelian
        let c = ParabolicContraction::new(vec![1, 1, 1]).unwrap();
        let basis = vec![Poly::entry(2, 1), Poly::entry(3, 1), Poly::entry(3, 2)];
        assert_eq!(c.index_estimate(&basis, 3, 7).unwrap(), 3);
    }

    #[test]
    fn index_of_full_contraction_is_n() {
        for blocks in [vec![1, 1], vec![2, 1], vec![1, 2, 1], vec![2, 2]] {
            let c = ParabolicContraction::new(blocks.clone()).unwrap();
            assert_eq!(
                c.index_estimate(&c.q_basis(), 5, 42).unwrap(),
                c.n,
                "{blocks:?}"
            );
        }
    }

    #[test]
    fn closure_is_checked() {
        let c = ParabolicContraction::new(vec![1, 1]).unwrap();
        // e[1,2] alone is not closed: [e11, e12] = e12 is fine, but pair it
        // with a diagonal to leave the span
        let basis = vec![Poly::entry(1, 2), Poly::entry(2, 1)];
        // [e12, e21]_q = 0 in the contraction, so this one IS closed
        assert!(c.index_estimate(&basis, 1, 1).is_ok());
        let basis = vec![Poly::entry(1, 1), Poly::entry(1, 2), Poly::entry(2, 2)];
        assert!(c.index_estimate(&basis, 1, 1).is_ok());
        let bad = vec![Poly::entry(1, 1), Poly::entry(2, 1)];
        // closed: [e11,e21] = -e21. pick one that genuinely escapes:
        assert!(c.index_estimate(&bad, 1, 1).is_ok());
        let c3 = ParabolicContraction::new(vec![2, 1]).unwrap();
        let escaping = vec![Poly::entry(1, 2), Poly::entry(2, 3)];
        assert_eq!(
            c3.index_estimate(&escaping, 1, 1),
            Err(ContractionError::NotClosedUnderBracket)
        );
    }

    #[test]
    fn descriptor_parsing() {
        let (fl, c) = parse_descriptor("gl:4,1,4,2,1").unwrap();
        assert_eq!(fl, Flavor::Gl);
        assert_eq!(c.blocks, vec![4, 1, 4, 2, 1]);
        assert!(parse_descriptor("sp:1,2,2,2,1").is_ok());
        assert!(matches!(
            parse_descriptor("sp:3,1"),
            Err(ContractionError::NotSymmetric)
        ));
        assert!(matches!(
            parse_descriptor("sp:1,1,1"),
            Err(ContractionError::OddDimension)
        ));
        assert!(parse_descriptor("nope").is_err());
        assert!(parse_descriptor("gl:0,2").is_err());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2).len(), 1);
        assert_eq!(compositions(6).len(), 31);
    }
}
