//! Exact sparse multivariate polynomials over the rationals.
//!
//! Generators are matrix entries `e[p,q]` of `gl_n` together with auxiliary
//! indeterminates `X1, X2, ...`. Coefficients are arbitrary-precision
//! rationals, so every identity checked downstream is a strict equality of
//! canonical forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial generator: a matrix entry `e[p,q]` (1-based) or an auxiliary
/// indeterminate `X_l`.
///
/// The derived order puts all matrix entries (lexicographically by `(p,q)`)
/// before all auxiliary indeterminates (by index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    MatrixEntry { row: u16, col: u16 },
    Aux(u32),
}

impl Generator {
    pub fn entry(row: usize, col: usize) -> Self {
        Generator::MatrixEntry {
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn aux(index: u32) -> Self {
        Generator::Aux(index)
    }

    pub fn as_entry(&self) -> Option<(usize, usize)> {
        match self {
            Generator::MatrixEntry { row, col } => Some((*row as usize, *col as usize)),
            Generator::Aux(_) => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::MatrixEntry { row, col } => write!(f, "e[{},{}]", row, col),
            Generator::Aux(l) => write!(f, "X{}", l),
        }
    }
}

/// A monomial: a sorted sequence of `(generator, exponent)` pairs with no
/// zero exponents and no duplicates. The empty sequence is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Generator, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn generator(g: Generator) -> Self {
        Monomial {
            factors: vec![(g, 1)],
        }
    }

    /// Builds a canonical monomial from arbitrary (generator, exponent) pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut map: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in pairs {
            if e > 0 {
                *map.entry(g).or_insert(0) += e;
            }
        }
        Monomial {
            factors: map.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, g: &Generator) -> u32 {
        self.factors
            .binary_search_by(|(h, _)| h.cmp(g))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    out.push(self.factors[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.factors[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.factors[i].0, self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Exponent-wise quotient, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut i = 0;
        for &(g, e) in &other.factors {
            loop {
                if i >= self.factors.len() {
                    return None;
                }
                let (h, d) = self.factors[i];
                match h.cmp(&g) {
                    Ordering::Less => {
                        out.push((h, d));
                        i += 1;
                    }
                    Ordering::Equal => {
                        if d < e {
                            return None;
                        }
                        if d > e {
                            out.push((h, d - e));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Greater => return None,
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        Some(Monomial { factors: out })
    }

    /// Sum of exponents of generators satisfying `pred`.
    pub fn degree_where(&self, pred: impl Fn(&Generator) -> bool) -> u32 {
        self.factors
            .iter()
            .filter(|(g, _)| pred(g))
            .map(|(_, e)| e)
            .sum()
    }
}

// Graded-lexicographic order: total degree first, then lexicographic with the
// smallest generator dominating. This is a genuine monomial order, so leading
// terms are multiplicative and single-divisor division terminates.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                // the side that still has factors on an earlier generator is larger
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(g, e)), Some(&(h, d))) => match g.cmp(&h) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match e.cmp(&d) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// An exact sparse polynomial: a canonical mapping monomial -> coefficient
/// with no zero coefficients stored. Equality of maps is equality of
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Poly::from_term(Monomial::generator(g), Rational::one())
    }

    pub fn entry(row: usize, col: usize) -> Self {
        Poly::generator(Generator::entry(row, col))
    }

    pub fn aux(index: u32) -> Self {
        Poly::generator(Generator::aux(index))
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term viewed as a rational, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Leading term under the graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m.mul(m2), c * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `h` with `self = g * h`, or `NotDivisible`.
    ///
    /// Single-divisor multivariate division under the canonical monomial
    /// order; any nonzero remainder step aborts.
    pub fn exact_divide(&self, g: &Poly) -> Result<Poly, PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivisorZero);
        }
        let (gm, gc) = g.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.checked_div(&gm).ok_or(PolyError::NotDivisible)?;
            let qc = rc / &gc;
            let t = Poly::from_term(qm, qc);
            rem = rem.sub(&t.mul(g));
            quot.add_assign(&t);
        }
        Ok(quot)
    }

    /// Max over monomials of the summed exponents of generators in `set`;
    /// `None` encodes minus infinity (the zero polynomial).
    pub fn partial_degree(&self, set: impl Fn(&Generator) -> bool) -> Option<u32> {
        self.terms.keys().map(|m| m.degree_where(&set)).max()
    }

    /// Per-monomial degrees in `set`, with multiplicity, sorted ascending.
    pub fn degrees_in(&self, set: impl Fn(&Generator) -> bool) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().map(|m| m.degree_where(&set)).collect();
        v.sort_unstable();
        v
    }

    /// Sum of the monomials whose degree in `set` is exactly `d`.
    pub fn component_of_degree(&self, set: impl Fn(&Generator) -> bool, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_where(&set) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes every matrix-entry generator by its image under `q`
    /// (missing entries default to zero); auxiliary generators pass through.
    pub fn evaluate(&self, q: &LinearForm) -> Poly {
        let mut out = Poly::zero();
        'terms: for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for &(g, e) in m.factors() {
                match g {
                    Generator::Aux(_) => {
                        acc = acc.mul(&Poly::from_term(Monomial::from_pairs([(g, e)]), Rational::one()));
                    }
                    Generator::MatrixEntry { .. } => {
                        let img = match q.image(&g) {
                            Some(p) if !p.is_zero() => p,
                            _ => continue 'terms,
                        };
                        for _ in 0..e {
                            acc = acc.mul(img);
                        }
                    }
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Returns `c != 0` with `self = c * g`, if it exists. `(0,0)` yields 1.
    pub fn proportional(&self, g: &Poly) -> Option<Rational> {
        match (self.is_zero(), g.is_zero()) {
            (true, true) => return Some(Rational::one()),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        if self.terms.len() != g.terms.len() {
            return None;
        }
        let (gm, gc) = g.leading_term().unwrap();
        let c = self.terms.get(gm)? / gc;
        if self == &g.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// All generators that occur in some monomial.
    pub fn support(&self) -> Vec<Generator> {
        let mut set: Vec<Generator> = Vec::new();
        for m in self.terms.keys() {
            for (g, _) in m.factors() {
                if let Err(i) = set.binary_search(g) {
                    set.insert(i, *g);
                }
            }
        }
        set
    }
}

/// An element of `A (x) q*`: a finite mapping from matrix-entry generators to
/// polynomials in the auxiliary indeterminates. Unmapped generators are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearForm {
    images: BTreeMap<Generator, Poly>,
}

impl LinearForm {
    pub fn new() -> Self {
        LinearForm::default()
    }

    pub fn set(&mut self, row: usize, col: usize, image: Poly) {
        let g = Generator::entry(row, col);
        if image.is_zero() {
            self.images.remove(&g);
        } else {
            self.images.insert(g, image);
        }
    }

    pub fn image(&self, g: &Generator) -> Option<&Poly> {
        self.images.get(g)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Generator, &Poly)> {
        self.images.iter()
    }

    /// Applies `f` to every image polynomial.
    pub fn map_images(&self, f: impl Fn(&Poly) -> Poly) -> LinearForm {
        let mut out = LinearForm::new();
        for (g, p) in &self.images {
            let q = f(p);
            if !q.is_zero() {
                out.images.insert(*g, q);
            }
        }
        out
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Canonical text form, round-trippable through [`Poly::from_str`].
    ///
    /// Terms are printed in descending graded-lexicographic order; repeated
    /// generators stand for powers (the grammar has no exponent syntax).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_unit() {
                parts.push(fmt_rational(&mag));
            }
            for &(g, e) in m.factors() {
                for _ in 0..e {
                    parts.push(g.to_string());
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), PolyError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            got => Err(PolyError::Parse(format!(
                "expected '{}', found {:?}",
                c as char,
                got.map(|b| b as char)
            ))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(PolyError::Parse("expected integer".into()));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        BigInt::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))
    }

    fn generator(&mut self) -> Result<Generator, PolyError> {
        match self.peek() {
            Some(b'e') => {
                self.bump();
                self.expect(b'[')?;
                let row = self.integer()?;
                self.expect(b',')?;
                let col = self.integer()?;
                self.expect(b']')?;
                let to_idx = |v: BigInt| -> Result<usize, PolyError> {
                    let (sign, digits) = v.to_u64_digits();
                    if sign == num_bigint::Sign::Minus || digits.len() > 1 {
                        return Err(PolyError::Parse("matrix index out of range".into()));
                    }
                    Ok(digits.first().copied().unwrap_or(0) as usize)
                };
                Ok(Generator::entry(to_idx(row)?, to_idx(col)?))
            }
            Some(b'X') => {
                self.bump();
                let idx = self.integer()?;
                let (sign, digits) = idx.to_u64_digits();
                if sign == num_bigint::Sign::Minus || digits.len() > 1 {
                    return Err(PolyError::Parse("aux index out of range".into()));
                }
                Ok(Generator::aux(digits.first().copied().unwrap_or(0) as u32))
            }
            got => Err(PolyError::Parse(format!(
                "expected generator, found {:?}",
                got.map(|b| b as char)
            ))),
        }
    }

    // term := coeff ('*' gen)* | gen ('*' gen)*
    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coeff = Rational::one();
        let mut gens: Vec<(Generator, u32)> = Vec::new();
        match self.peek() {
            Some(c) if c == b'e' || c == b'X' => gens.push((self.generator()?, 1)),
            _ => {
                let numer = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.bump();
                    let denom = self.integer()?;
                    if denom.is_zero() {
                        return Err(PolyError::Parse("zero denominator".into()));
                    }
                    coeff = Rational::new(numer, denom);
                } else {
                    coeff = Rational::from_integer(numer);
                }
            }
        }
        while self.peek() == Some(b'*') {
            self.bump();
            gens.push((self.generator()?, 1));
        }
        Ok((Monomial::from_pairs(gens), coeff))
    }
}

impl FromStr for Poly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer::new(s);
        let mut out = Poly::zero();
        let mut sign = Rational::one();
        if lx.peek() == Some(b'-') {
            // leading minus only when followed by a generator; a numeric
            // coefficient carries its own sign
            let save = lx.pos;
            lx.bump();
            match lx.peek() {
                Some(b'e') | Some(b'X') => sign = -Rational::one(),
                _ => lx.pos = save,
            }
        }
        loop {
            let (m, c) = lx.term()?;
            out.add_term(m, c * &sign);
            match lx.peek() {
                Some(b'+') => {
                    lx.bump();
                    sign = Rational::one();
                }
                Some(b'-') => {
                    lx.bump();
                    sign = -Rational::one();
                }
                None => break,
                got => {
                    return Err(PolyError::Parse(format!(
                        "unexpected {:?}",
                        got.map(|b| b as char)
                    )))
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(r: usize, c: usize) -> Poly {
        Poly::entry(r, c)
    }

    #[test]
    fn additive_inverse_cancels() {
        let f = e(1, 2).add(&e(1, 2).neg());
        assert!(f.is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = e(1, 2).add(&e(2, 1)).mul(&e(1, 2).sub(&e(2, 1)));
        let rhs = e(1, 2).mul(&e(1, 2)).sub(&e(2, 1).mul(&e(2, 1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_merge() {
        let t = Poly::aux(1).mul(&e(2, 1));
        let sum = t.add(&t);
        assert_eq!(sum, t.scale(&rat(2)));
        assert_eq!(sum.num_terms(), 1);
    }

    #[test]
    fn exact_divide_monomial() {
        let f = e(2, 1).mul(&e(1, 3));
        assert_eq!(f.exact_divide(&e(2, 1)).unwrap(), e(1, 3));
    }

    #[test]
    fn exact_divide_rejects_sum() {
        let f = e(2, 1).add(&e(1, 3));
        assert_eq!(f.exact_divide(&e(2, 1)), Err(PolyError::NotDivisible));
    }

    #[test]
    fn exact_divide_square() {
        let f = e(1, 2).mul(&e(1, 2));
        assert_eq!(f.exact_divide(&e(1, 2)).unwrap(), e(1, 2));
    }

    #[test]
    fn divisor_zero_is_an_error() {
        assert_eq!(e(1, 1).exact_divide(&Poly::zero()), Err(PolyError::DivisorZero));
    }

    #[test]
    fn partial_degree_examples() {
        let f = e(2, 1).mul(&e(3, 2));
        let in_s = |g: &Generator| *g == Generator::entry(2, 1);
        assert_eq!(f.partial_degree(in_s), Some(1));

        assert_eq!(Poly::zero().partial_degree(|_| true), None);

        let f = e(2, 1).pow(2).mul(&Poly::aux(1)).add(&e(3, 1));
        let set = |g: &Generator| *g == Generator::entry(2, 1) || *g == Generator::entry(3, 1);
        assert_eq!(f.partial_degree(set), Some(2));
    }

    #[test]
    fn component_of_degree_examples() {
        let f = e(2, 1).add(&e(1, 2));
        let in_s = |g: &Generator| *g == Generator::entry(2, 1);
        assert_eq!(f.component_of_degree(in_s, 1), e(2, 1));
        assert_eq!(f.component_of_degree(in_s, 0), e(1, 2));
        assert!(f.component_of_degree(in_s, 5).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let mut q = LinearForm::new();
        q.set(1, 2, Poly::aux(1));
        q.set(2, 1, Poly::one());
        assert_eq!(e(1, 2).mul(&e(2, 1)).evaluate(&q), Poly::aux(1));

        assert!(e(1, 1).evaluate(&LinearForm::new()).is_zero());

        let mut q = LinearForm::new();
        q.set(2, 1, Poly::aux(1));
        q.set(1, 2, Poly::aux(1).neg());
        assert!(e(2, 1).add(&e(1, 2)).evaluate(&q).is_zero());
    }

    #[test]
    fn proportional_examples() {
        assert_eq!(e(1, 2).scale(&rat(2)).proportional(&e(1, 2)), Some(rat(2)));
        assert_eq!(e(1, 2).proportional(&e(2, 1)), None);
        assert_eq!(Poly::zero().proportional(&e(1, 2)), None);
        assert_eq!(Poly::zero().proportional(&Poly::zero()), Some(rat(1)));
    }

    #[test]
    fn grammar_round_trip() {
        // factors print in generator order; any factor order parses back
        let text = "e[1,3]*e[2,1] - 1/4*X2";
        let p: Poly = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
        let shuffled: Poly = "e[2,1]*e[1,3] - 1/4*X2".parse().unwrap();
        assert_eq!(shuffled, p);
        assert_eq!(shuffled.to_string(), text);

        let zero: Poly = "0".parse().unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "0");

        let sq: Poly = "e[1,2]*e[1,2]".parse().unwrap();
        assert_eq!(sq, e(1, 2).pow(2));
        assert_eq!(sq.to_string(), "e[1,2]*e[1,2]");

        let neg: Poly = "-e[1,2] + 3".parse().unwrap();
        assert_eq!(neg, Poly::constant(rat(3)).sub(&e(1, 2)));
    }

    #[test]
    fn leading_term_is_graded_lex() {
        // degree dominates, then earlier generators
        let f = e(3, 3).add(&e(1, 1).mul(&e(2, 2)));
        let (m, _) = f.leading_term().unwrap();
        assert_eq!(m, &Monomial::from_pairs([(Generator::entry(1, 1), 1), (Generator::entry(2, 2), 1)]));
        // matrix entries sort before aux
        let g = Poly::aux(1).add(&e(9, 9));
        assert_eq!(g.leading_term().unwrap().0, &Monomial::generator(Generator::entry(9, 9)));
    }
}
