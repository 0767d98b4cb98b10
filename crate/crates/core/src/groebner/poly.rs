use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::Vertex;

/// A variable of `K[x_1..x_n, y_1..y_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X(Vertex),
    Y(Vertex),
}

impl Var {
    /// Position in the exponent vector; `x_1 > … > x_n > y_1 > … > y_n`.
    pub fn index(self, n: usize) -> usize {
        match self {
            Var::X(i) => i - 1,
            Var::Y(i) => n + i - 1,
        }
    }

    pub fn from_index(idx: usize, n: usize) -> Var {
        if idx < n {
            Var::X(idx + 1)
        } else {
            Var::Y(idx - n + 1)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Exponent vector over `2n` variables. The derived ordering compares
/// position by position, which is exactly lex with `x_1` largest and `y_n`
/// smallest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(v: Var, n: usize) -> Self {
        let mut m = Monomial::one(2 * n);
        m.0[v.index(n)] = 1;
        m
    }

    pub fn from_vars(vars: &[Var], n: usize) -> Self {
        let mut m = Monomial::one(2 * n);
        for v in vars {
            m.0[v.index(n)] += 1;
        }
        m
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn contains_var(&self, v: Var, n: usize) -> bool {
        self.0[v.index(n)] > 0
    }

    /// Support as a bit mask over variable positions.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (k, _)| m | 1u64 << k)
    }

    /// Squarefree monomial from a support mask.
    pub fn from_mask(mask: u64, nvars: usize) -> Self {
        Monomial((0..nvars).map(|k| (mask >> k & 1) as u16).collect())
    }

    pub fn display(&self, n: usize) -> String {
        let mut s = String::new();
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            s.push_str(&Var::from_index(k, n).to_string());
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(self.0.len() / 2))
    }
}

/// Polynomial with exact rational coefficients. Terms are kept in an ordered
/// map, so the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (BigRational, Monomial)>>(nvars: usize, it: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (c, m) in it {
            p.add_term(c, m);
        }
        p
    }

    pub fn term(c: i64, m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial::from_terms(nvars, [(rat(c), m)])
    }

    /// `f_ij = x_i y_j - x_j y_i`.
    pub fn edge_binomial(i: Vertex, j: Vertex, n: usize) -> Self {
        Polynomial::from_terms(
            2 * n,
            [
                (rat(1), Monomial::from_vars(&[Var::X(i), Var::Y(j)], n)),
                (rat(-1), Monomial::from_vars(&[Var::X(j), Var::Y(i)], n)),
            ],
        )
    }

    /// `a - b` for two variables.
    pub fn var_difference(a: Var, b: Var, n: usize) -> Self {
        Polynomial::from_terms(
            2 * n,
            [(rat(1), Monomial::var(a, n)), (rat(-1), Monomial::var(b, n))],
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, c: BigRational, m: Monomial) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self - c·m·other`.
    pub fn sub_scaled(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        for (om, oc) in &other.terms {
            self.add_term(-(c * oc), m.mul(om));
        }
    }

    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(om, oc)| (c * oc, m.mul(om))))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(c.clone(), m.clone());
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.sub_scaled(&rat(1), &Monomial::one(self.nvars), other);
        p
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, k)| (k * &inv, m.clone())))
            }
        }
    }

    /// S-polynomial of two nonzero polynomials.
    pub fn s_polynomial(&self, other: &Polynomial) -> Polynomial {
        let (m1, c1) = self.leading_term().expect("nonzero");
        let (m2, c2) = other.leading_term().expect("nonzero");
        let l = m1.lcm(m2);
        let mut s = self.mul_term(&c1.recip(), &m1.quotient_of(&l));
        s.sub_scaled(&c2.recip(), &m2.quotient_of(&l), other);
        s
    }

    pub fn display(&self, n: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.display(n);
            if abs.is_one() {
                s.push_str(&mono);
            } else if mono == "1" {
                s.push_str(&abs.to_string());
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(self.nvars / 2))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    /// Orders by terms from the top down; used only to sort bases.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.terms.iter().rev();
        let b = other.terms.iter().rev();
        for ((ma, ca), (mb, cb)) in a.zip(b) {
            let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}
