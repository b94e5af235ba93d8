//! Buchberger's algorithm in its standard form and with early stopping,
//! plus Gröbner-basis predicates, reduced bases, and ideal equality.
//!
//! Both variants process S-pairs first-in-lexicographic-order on index pairs
//! and apply the coprimality and chain criteria before dividing. The early
//! stopping variant divides with [`divide_early_stopping`] and normalizes
//! every appended element to leading coefficient one; the standard variant
//! divides with [`divide_standard`] and appends remainders as they are.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;
use thiserror::Error;

use crate::polyring::{
    compare, divide_early_stopping, divide_standard, leading, s_polynomial, Monomial, PolyError,
    Polynomial, Rat, VarOrder,
};

#[derive(Debug, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("iteration ceiling of {0} exceeded")]
    IterationCeiling(usize),
    #[error("input is not a Gröbner basis")]
    NotAGroebnerBasis,
}

/// An ordered generating set together with the order it was computed under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    pub polys: Vec<Polynomial>,
    pub order: VarOrder,
}

impl Basis {
    pub fn new(polys: Vec<Polynomial>, order: VarOrder) -> Basis {
        Basis { polys, order }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Elements as a set of monic polynomials.
    pub fn monic_set(&self) -> Result<BTreeSet<Polynomial>, PolyError> {
        self.polys.iter().map(|p| p.monic(&self.order)).collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BuchbergerConfig {
    /// Upper bound on processed pairs; ascending-chain termination means this
    /// is a safety net that real runs never hit.
    pub max_iterations: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { max_iterations: 1_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    Standard,
    EarlyStopping,
}

/// Pair queue: index pairs `(i, j)` with `i < j`, processed in lexicographic
/// order. Elements refer to positions in the growing basis; polynomials are
/// frozen at their append index and never mutated.
type PairQueue = BTreeSet<(usize, usize)>;

fn criterion(
    i: usize,
    j: usize,
    leads: &[Monomial],
    pairs: &PairQueue,
    lcm_ij: &Monomial,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    for k in 0..leads.len() {
        if k == i || k == j {
            continue;
        }
        if !pairs.contains(&key(i, k))
            && !pairs.contains(&key(j, k))
            && leads[k].divides(lcm_ij)
        {
            return true;
        }
    }
    false
}

fn buchberger(
    generators: &[Polynomial],
    order: &VarOrder,
    variant: Variant,
    config: BuchbergerConfig,
) -> Result<Basis, GroebnerError> {
    for g in generators {
        if g.is_zero() {
            return Err(GroebnerError::Poly(PolyError::ZeroDivisor));
        }
    }
    let mut basis: Vec<Polynomial> = generators.to_vec();
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| leading(g, order).map(|l| l.monomial))
        .collect::<Result<_, _>>()?;
    let mut pairs: PairQueue = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert((i, j));
        }
    }

    let mut iterations = 0usize;
    while let Some(&(i, j)) = pairs.iter().next() {
        iterations += 1;
        if iterations > config.max_iterations {
            return Err(GroebnerError::IterationCeiling(config.max_iterations));
        }
        let lcm_ij = leads[i].lcm(&leads[j]);
        let product = leads[i].mul(&leads[j]);
        if lcm_ij != product && !criterion(i, j, &leads, &pairs, &lcm_ij) {
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            let remainder = match variant {
                Variant::Standard => divide_standard(&s, &basis, order)?.remainder,
                Variant::EarlyStopping => divide_early_stopping(&s, &basis, order)?.remainder,
            };
            if !remainder.is_zero() {
                let appended = match variant {
                    Variant::Standard => remainder,
                    Variant::EarlyStopping => remainder.monic(order)?,
                };
                leads.push(leading(&appended, order)?.monomial);
                basis.push(appended);
                let t = basis.len() - 1;
                for k in 0..t {
                    pairs.insert((k, t));
                }
            }
        }
        pairs.remove(&(i, j));
    }
    Ok(Basis::new(basis, order.clone()))
}

/// The standard Buchberger algorithm. The output contains the input as a
/// prefix and is a Gröbner basis of the generated ideal.
pub fn buchberger_standard(
    generators: &[Polynomial],
    order: &VarOrder,
) -> Result<Basis, GroebnerError> {
    buchberger(generators, order, Variant::Standard, BuchbergerConfig::default())
}

/// Buchberger with early stopping: early-stopping division and monic
/// normalization of every appended element.
pub fn buchberger_es(generators: &[Polynomial], order: &VarOrder) -> Result<Basis, GroebnerError> {
    buchberger(generators, order, Variant::EarlyStopping, BuchbergerConfig::default())
}

pub fn buchberger_standard_with(
    generators: &[Polynomial],
    order: &VarOrder,
    config: BuchbergerConfig,
) -> Result<Basis, GroebnerError> {
    buchberger(generators, order, Variant::Standard, config)
}

pub fn buchberger_es_with(
    generators: &[Polynomial],
    order: &VarOrder,
    config: BuchbergerConfig,
) -> Result<Basis, GroebnerError> {
    buchberger(generators, order, Variant::EarlyStopping, config)
}

/// Buchberger's criterion by division: every S-pair must leave remainder
/// zero under standard division by the basis.
pub fn is_groebner(basis: &Basis) -> Result<bool, GroebnerError> {
    for i in 0..basis.polys.len() {
        for j in (i + 1)..basis.polys.len() {
            let s = s_polynomial(&basis.polys[i], &basis.polys[j], &basis.order)?;
            if s.is_zero() {
                continue;
            }
            let r = divide_standard(&s, &basis.polys, &basis.order)?.remainder;
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Gröbner basis is minimal when every leading coefficient is one and no
/// leading monomial divides another element's leading monomial.
pub fn is_minimal_groebner(basis: &Basis) -> Result<bool, GroebnerError> {
    if !is_groebner(basis)? {
        return Ok(false);
    }
    let leads: Vec<Monomial> = basis
        .polys
        .iter()
        .map(|g| leading(g, &basis.order).map(|l| l.monomial))
        .collect::<Result<_, _>>()?;
    for i in 0..leads.len() {
        for j in 0..leads.len() {
            if i != j && leads[j].divides(&leads[i]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f` reduces to zero modulo the basis; witnessed by standard division.
pub fn reduces_to_zero(f: &Polynomial, basis: &Basis) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    Ok(divide_standard(f, &basis.polys, &basis.order)?.remainder.is_zero())
}

/// The unique reduced monic Gröbner basis of the ideal, used as the
/// canonical form for ideal-equality tests. Errors if the input is not a
/// Gröbner basis.
pub fn reduced_basis(basis: &Basis) -> Result<Basis, GroebnerError> {
    if !is_groebner(basis)? {
        return Err(GroebnerError::NotAGroebnerBasis);
    }
    // minimalize: drop elements whose leading monomial is generated by another
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut kept_leads: Vec<Monomial> = Vec::new();
    let mut candidates: Vec<(Monomial, Polynomial)> = basis
        .polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Ok((leading(p, &basis.order)?.monomial, p.monic(&basis.order)?)))
        .collect::<Result<_, PolyError>>()?;
    candidates.sort_by(|a, b| {
        compare(&a.0, &b.0, &basis.order).unwrap_or(std::cmp::Ordering::Equal)
    });
    for (lm, p) in candidates {
        if !kept_leads.iter().any(|k| k.divides(&lm)) {
            kept_leads.push(lm);
            kept.push(p);
        }
    }
    // reduce tails against the other elements until stable
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = divide_standard(&kept[i], &others, &basis.order)?.remainder;
            let r = r.monic(&basis.order)?;
            if r != kept[i] {
                kept[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.sort_by(|a, b| {
        let la = leading(a, &basis.order).expect("nonzero").monomial;
        let lb = leading(b, &basis.order).expect("nonzero").monomial;
        compare(&la, &lb, &basis.order).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(Basis::new(kept, basis.order.clone()))
}

/// Canonical-form comparison: two generating lists span the same ideal iff
/// their reduced Gröbner bases coincide as sets.
pub fn ideal_equal(
    f1: &[Polynomial],
    f2: &[Polynomial],
    order: &VarOrder,
) -> Result<bool, GroebnerError> {
    let nonzero = |fs: &[Polynomial]| -> Vec<Polynomial> {
        fs.iter().filter(|p| !p.is_zero()).cloned().collect()
    };
    let (f1, f2) = (nonzero(f1), nonzero(f2));
    if f1.is_empty() || f2.is_empty() {
        return Ok(f1.is_empty() && f2.is_empty());
    }
    let b1 = reduced_basis(&buchberger_standard(&f1, order)?)?;
    let b2 = reduced_basis(&buchberger_standard(&f2, order)?)?;
    let s1: BTreeSet<Polynomial> = b1.polys.into_iter().collect();
    let s2: BTreeSet<Polynomial> = b2.polys.into_iter().collect();
    Ok(s1 == s2)
}

/// Hook for callers that index basis elements back to their origin.
pub fn leading_monomials(basis: &Basis) -> Result<BTreeMap<usize, Monomial>, GroebnerError> {
    let mut out = BTreeMap::new();
    for (i, p) in basis.polys.iter().enumerate() {
        out.insert(i, leading(p, &basis.order)?.monomial);
    }
    Ok(out)
}

/// Check that every appended element of an early-stopping run is monic.
pub fn appended_are_monic(basis: &Basis, input_len: usize) -> Result<bool, GroebnerError> {
    for p in basis.polys.iter().skip(input_len) {
        if leading(p, &basis.order)?.coefficient != Rat::one() {
            return Ok(false);
        }
    }
    Ok(true)
}
