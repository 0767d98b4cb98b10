//! Exact polynomial arithmetic and Gröbner bases for binomial edge ideals.
//!
//! The monomial order is lex with `x_1 > … > x_n > y_1 > … > y_n`; no other
//! order is exposed. [`buchberger`] is a general engine used to validate the
//! closed-form bases built from admissible paths in [`paths`].

mod paths;
mod poly;

pub use paths::{
    admissible_paths, arrange_for_gluing, edge_ideal_generators, gb_from_admissible_paths,
    glued_union_basis, initial_squarefree_masks, is_admissible, prime_ideal_generators,
    AdmissiblePath, GluedUnionBasis,
};
pub use poly::{Monomial, Polynomial, Var};

use num_rational::BigRational;

/// A list of generators believed (or verified) to form a Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps a claimed basis without checking it.
    pub fn claimed(generators: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            generators: generators.into_iter().filter(|p| !p.is_zero()).collect(),
            reduced: false,
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Remainder of `p` under division by the generators in stored order.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.generators)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Buchberger's criterion: every S-pair reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| {
                let (a, b) = (g[i].leading_monomial().unwrap(), g[j].leading_monomial().unwrap());
                a.is_coprime(b) || normal_form(&g[i].s_polynomial(&g[j]), g).is_zero()
            })
        })
    }

    /// Interreduces into the unique reduced monic basis. Only meaningful when
    /// the generators already form a Gröbner basis.
    pub fn into_reduced(self) -> GroebnerBasis {
        if self.reduced {
            return self;
        }
        GroebnerBasis {
            generators: interreduce(self.generators),
            reduced: true,
        }
    }

    /// Minimal generators of the ideal of leading monomials.
    pub fn initial_ideal(&self) -> Vec<Monomial> {
        initial_ideal(&self.generators)
    }
}

/// Multivariate division. The divisor for each step is the first generator
/// whose leading monomial divides the current leading monomial.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero(p.nvars());
    while let Some((m, c)) = rest.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        match divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)))
        {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero divisor");
                let factor: BigRational = &c / lc;
                rest.sub_scaled(&factor, &lm.quotient_of(&m), g);
            }
            None => {
                let single = Polynomial::from_terms(p.nvars(), [(c.clone(), m.clone())]);
                remainder = remainder.add(&single);
                rest = rest.sub(&single);
            }
        }
    }
    remainder
}

/// Minimal monomial generators of the leading-term ideal, sorted.
pub fn initial_ideal(gens: &[Polynomial]) -> Vec<Monomial> {
    let mut lts: Vec<Monomial> = gens
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    lts.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
    lts.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in lts {
        if !minimal.iter().any(|k| k.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal.sort();
    minimal
}

/// True iff `v` divides none of the given monomials.
pub fn variable_avoids_initial_generators(ini: &[Monomial], v: Var) -> bool {
    ini.iter().all(|m| {
        let n = m.nvars() / 2;
        !m.contains_var(v, n)
    })
}

fn interreduce(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    // Drop generators whose leading monomial is divisible by another's.
    let mut gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in gens {
        let lm = g.leading_monomial().expect("nonzero").clone();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(&lm))
        {
            minimal.retain(|h| !lm.divides(h.leading_monomial().expect("nonzero")));
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p.clone())
            .collect();
        out.push(normal_form(&minimal[k], &others).monic());
    }
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    out
}

/// Reduced monic Gröbner basis of the ideal generated by `gens`, using the
/// coprime-leading-term and chain criteria to skip S-pairs.
pub fn buchberger(gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    while !pending.is_empty() {
        // Normal selection strategy: smallest lcm first.
        let pos = (0..pending.len())
            .min_by(|&a, &b| {
                let la = pair_lcm(&basis, pending[a]);
                let lb = pair_lcm(&basis, pending[b]);
                la.degree().cmp(&lb.degree()).then(la.cmp(&lb)).then(pending[a].cmp(&pending[b]))
            })
            .expect("nonempty");
        let (i, j) = pending.swap_remove(pos);
        let (li, lj) = (
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        if li.is_coprime(lj) || chain_criterion(&basis, &pending, i, j) {
            continue;
        }
        let r = normal_form(&basis[i].s_polynomial(&basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            for i in 0..k {
                pending.push((i, k));
            }
        }
    }
    GroebnerBasis {
        generators: interreduce(basis),
        reduced: true,
    }
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    basis[i]
        .leading_monomial()
        .expect("nonzero")
        .lcm(basis[j].leading_monomial().expect("nonzero"))
}

fn chain_criterion(basis: &[Polynomial], pending: &[(usize, usize)], i: usize, j: usize) -> bool {
    let l = pair_lcm(basis, (i, j));
    let has = |a: usize, b: usize| pending.contains(&(a.min(b), a.max(b)));
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_monomial().expect("nonzero").divides(&l)
            && !has(i, k)
            && !has(j, k)
    })
}
