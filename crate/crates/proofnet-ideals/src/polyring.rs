//! Exact sparse multivariate polynomials over the rationals, lexicographic
//! monomial orders induced by variable rankings, and Euclidean division in
//! the standard and early-stopping variants.
//!
//! Coefficients are arbitrary-precision rationals so that reconstruction
//! identities and set-equality checks hold without tolerance. Monomial
//! comparison is purely lexicographic in a [`VarOrder`]: graded orders are
//! out of scope.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::proofnet::AtomVar;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {0} is not ranked by the order")]
    UnrankedVariable(AtomVar),
    #[error("duplicate variable {0} in order")]
    DuplicateVariable(AtomVar),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by a zero polynomial")]
    ZeroDivisor,
}

/// A total order on variables: a ranked list, lowest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarOrder {
    ranked: Vec<AtomVar>,
    rank: BTreeMap<AtomVar, usize>,
}

impl VarOrder {
    pub fn new(ranked: Vec<AtomVar>) -> Result<VarOrder, PolyError> {
        let mut rank = BTreeMap::new();
        for (i, v) in ranked.iter().enumerate() {
            if rank.insert(*v, i).is_some() {
                return Err(PolyError::DuplicateVariable(*v));
            }
        }
        Ok(VarOrder { ranked, rank })
    }

    pub fn rank(&self, v: &AtomVar) -> Option<usize> {
        self.rank.get(v).copied()
    }

    pub fn vars(&self) -> &[AtomVar] {
        &self.ranked
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }

    pub fn contains(&self, v: &AtomVar) -> bool {
        self.rank.contains_key(v)
    }

    pub fn cmp_vars(&self, a: &AtomVar, b: &AtomVar) -> Result<Ordering, PolyError> {
        let ra = self.rank(a).ok_or(PolyError::UnrankedVariable(*a))?;
        let rb = self.rank(b).ok_or(PolyError::UnrankedVariable(*b))?;
        Ok(ra.cmp(&rb))
    }

    /// Restriction of the order to a subset of its variables.
    pub fn restricted_to(&self, keep: &BTreeSet<AtomVar>) -> VarOrder {
        let ranked: Vec<AtomVar> = self.ranked.iter().filter(|v| keep.contains(v)).copied().collect();
        VarOrder::new(ranked).expect("restriction preserves uniqueness")
    }
}

/// A monomial: finitely many variables with positive integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: BTreeMap<AtomVar, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: AtomVar) -> Monomial {
        let mut exps = BTreeMap::new();
        exps.insert(v, 1);
        Monomial { exps }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (AtomVar, u32)>) -> Monomial {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, v: &AtomVar) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &AtomVar> + '_ {
        self.exps.keys()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in other.exps.iter() {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Exact division, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (v, e) in other.exps.iter() {
            let slot = exps.get_mut(v)?;
            if *slot < *e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exps.remove(v);
            }
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.checked_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in other.exps.iter() {
            let slot = exps.entry(*v).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Monomial { exps }
    }
}

/// Lexicographic comparison under `o`: the highest-ranked variable on which
/// the exponents differ decides.
pub fn compare(m1: &Monomial, m2: &Monomial, o: &VarOrder) -> Result<Ordering, PolyError> {
    let mut decisive: Option<(usize, Ordering)> = None;
    for v in m1.exps.keys().chain(m2.exps.keys()) {
        let e1 = m1.exponent(v);
        let e2 = m2.exponent(v);
        if e1 == e2 {
            continue;
        }
        let r = o.rank(v).ok_or(PolyError::UnrankedVariable(*v))?;
        let ord = e1.cmp(&e2);
        match decisive {
            Some((best, _)) if best >= r => {}
            _ => decisive = Some((r, ord)),
        }
    }
    Ok(decisive.map(|(_, ord)| ord).unwrap_or(Ordering::Equal))
}

/// A polynomial: monomials with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(c: Rat) -> Polynomial {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rat::one())
    }

    pub fn var(v: AtomVar) -> Polynomial {
        Polynomial::from_term(Monomial::var(v), Rat::one())
    }

    /// The binomial `a − b`.
    pub fn difference(a: AtomVar, b: AtomVar) -> Polynomial {
        let mut p = Polynomial::var(a);
        p.sub_assign(&Polynomial::var(b));
        p
    }

    pub fn from_term(m: Monomial, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn vars(&self) -> BTreeSet<AtomVar> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().copied())
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &Polynomial) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), &-c.clone());
        }
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.iter() {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in self.terms.iter() {
            out.add_term(m1.mul(m), &(c1 * c));
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    /// Divide by the leading coefficient so that `LC = 1` under `o`.
    pub fn monic(&self, o: &VarOrder) -> Result<Polynomial, PolyError> {
        let lead = leading(self, o)?;
        Ok(self.scale(&(Rat::one() / lead.coefficient)))
    }

    /// For `a − b` with unit coefficients, the pair `(a, b)`.
    pub fn as_difference(&self) -> Option<(AtomVar, AtomVar)> {
        if self.terms.len() != 2 {
            return None;
        }
        let mut pos = None;
        let mut neg = None;
        for (m, c) in self.terms.iter() {
            let mut vars = m.vars();
            let v = *vars.next()?;
            if vars.next().is_some() || m.exponent(&v) != 1 {
                return None;
            }
            if c == &Rat::one() {
                pos = Some(v);
            } else if c == &-Rat::one() {
                neg = Some(v);
            } else {
                return None;
            }
        }
        Some((pos?, neg?))
    }

    /// Render with a custom variable namer, terms in descending `o`-order.
    pub fn display_with(&self, o: Option<&VarOrder>, name: &dyn Fn(&AtomVar) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monomials: Vec<&Monomial> = self.terms.keys().collect();
        if let Some(o) = o {
            monomials.sort_by(|a, b| {
                compare(b, a, o).unwrap_or_else(|_| b.cmp(a))
            });
        } else {
            monomials.sort_by(|a, b| b.cmp(a));
        }
        let mut out = String::new();
        for (i, m) in monomials.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for v in m.vars() {
                let e = m.exponent(v);
                if e == 1 {
                    factors.push(name(v));
                } else {
                    factors.push(format!("{}^{}", name(v), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(None, &|v| v.to_string()))
    }
}

/// Leading data of a nonzero polynomial under an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leading {
    pub monomial: Monomial,
    pub coefficient: Rat,
}

impl Leading {
    pub fn term(&self) -> Polynomial {
        Polynomial::from_term(self.monomial.clone(), self.coefficient.clone())
    }

    /// The multidegree is the exponent vector of the leading monomial.
    pub fn multidegree(&self) -> &Monomial {
        &self.monomial
    }
}

pub fn leading(f: &Polynomial, o: &VarOrder) -> Result<Leading, PolyError> {
    let mut best: Option<&Monomial> = None;
    for m in f.terms.keys() {
        best = Some(match best {
            None => m,
            Some(b) => {
                if compare(m, b, o)? == Ordering::Greater {
                    m
                } else {
                    b
                }
            }
        });
    }
    let m = best.ok_or(PolyError::ZeroPolynomial)?;
    Ok(Leading { monomial: m.clone(), coefficient: f.terms[m].clone() })
}

/// Quotients (one per divisor) and remainder with `f = Σ qᵢfᵢ + r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl DivisionResult {
    /// Recompute `Σ qᵢfᵢ + r`; equals the dividend by construction.
    pub fn reconstruct(&self, divisors: &[Polynomial]) -> Polynomial {
        let mut acc = self.remainder.clone();
        for (q, f) in self.quotients.iter().zip(divisors) {
            acc.add_assign(&q.mul(f));
        }
        acc
    }
}

fn divide_inner(
    f: &Polynomial,
    divisors: &[Polynomial],
    o: &VarOrder,
    early_stopping: bool,
) -> Result<DivisionResult, PolyError> {
    let leads: Vec<Leading> = divisors
        .iter()
        .map(|g| {
            if g.is_zero() {
                Err(PolyError::ZeroDivisor)
            } else {
                leading(g, o)
            }
        })
        .collect::<Result<_, _>>()?;

    let mut p = f.clone();
    let mut quotients = vec![Polynomial::zero(); divisors.len()];
    let mut remainder = Polynomial::zero();

    while !p.is_zero() {
        let lt = leading(&p, o)?;
        let mut occurred = false;
        for (i, lead_i) in leads.iter().enumerate() {
            if lead_i.monomial.divides(&lt.monomial) {
                let qm = lt.monomial.checked_div(&lead_i.monomial).expect("divisibility checked");
                let qc = &lt.coefficient / &lead_i.coefficient;
                quotients[i].add_term(qm.clone(), &qc);
                p.sub_assign(&divisors[i].mul_term(&qm, &qc));
                occurred = true;
                break;
            }
        }
        if !occurred {
            if early_stopping {
                // the whole current dividend becomes the remainder
                remainder = p;
                p = Polynomial::zero();
            } else {
                remainder.add_term(lt.monomial.clone(), &lt.coefficient);
                p.sub_assign(&lt.term());
            }
        }
    }
    Ok(DivisionResult { quotients, remainder })
}

/// The standard multivariate division algorithm: irreducible leading terms
/// move to the remainder one at a time and division continues on the tail.
pub fn divide_standard(
    f: &Polynomial,
    divisors: &[Polynomial],
    o: &VarOrder,
) -> Result<DivisionResult, PolyError> {
    divide_inner(f, divisors, o, false)
}

/// Euclidean division with early stopping: at the first irreducible leading
/// term the entire current dividend is returned as the remainder.
pub fn divide_early_stopping(
    f: &Polynomial,
    divisors: &[Polynomial],
    o: &VarOrder,
) -> Result<DivisionResult, PolyError> {
    divide_inner(f, divisors, o, true)
}

/// `S(g,h) = (X^γ / LT(g))·g − (X^γ / LT(h))·h` with `X^γ = LCM(LM(g), LM(h))`.
pub fn s_polynomial(g: &Polynomial, h: &Polynomial, o: &VarOrder) -> Result<Polynomial, PolyError> {
    let lg = leading(g, o)?;
    let lh = leading(h, o)?;
    let gamma = lg.monomial.lcm(&lh.monomial);
    let mg = gamma.checked_div(&lg.monomial).expect("lcm divisible by lm");
    let mh = gamma.checked_div(&lh.monomial).expect("lcm divisible by lm");
    let mut out = g.mul_term(&mg, &(Rat::one() / &lg.coefficient));
    out.sub_assign(&h.mul_term(&mh, &(Rat::one() / &lh.coefficient)));
    Ok(out)
}
