//! Canonical sparse polynomials.
//!
//! Terms are kept strictly descending in the ring's monomial ordering, without
//! zero coefficients, so the leading term is always `terms[0]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrdering};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coefficient,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Coefficient, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Sorts descending and merges equal monomials, dropping zeros.
fn normalize(ord: MonomialOrdering, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.monomial == t.monomial => {
                last.coeff = &last.coeff + &t.coeff;
                if last.coeff.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !t.coeff.is_zero() {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Merges two descending term sequences.
fn merge(ord: MonomialOrdering, a: &[Term], b: impl Iterator<Item = Term>) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len());
    let mut a = a.iter().peekable();
    let mut b = b.peekable();
    loop {
        let step = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => ord.cmp(&x.monomial, &y.monomial),
        };
        match step {
            Ordering::Greater => out.push(a.next().unwrap().clone()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let y = b.next().unwrap();
                let c = &x.coeff + &y.coeff;
                if !c.is_zero() {
                    out.push(Term::new(c, y.monomial));
                }
            }
        }
    }
    out
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coefficient) -> Result<Self> {
        Polynomial::from_terms(ring, vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::term(ring, ring.field().one(), Monomial::one(ring.nvars()))
    }

    /// The variable with index `var`.
    pub fn variable(ring: &Ring, var: usize) -> Self {
        Polynomial::term(
            ring,
            ring.field().one(),
            Monomial::variable_power(ring.nvars(), var, 1),
        )
    }

    fn term(ring: &Ring, c: Coefficient, m: Monomial) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![Term::new(c, m)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coefficient, Monomial)>,
    {
        let mut ts = Vec::new();
        for (c, m) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::VariableCount {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            if !ring.field().contains(&c) {
                return Err(Error::FieldMismatch);
            }
            ts.push(Term::new(c, m));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: normalize(ring.ordering(), ts),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
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

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial("leading term"))
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.monomial)
    }

    pub fn leading_coefficient(&self) -> Result<&Coefficient> {
        Ok(&self.leading_term()?.coeff)
    }

    /// `(lm, lc, lt)`.
    pub fn leading_data(&self) -> Result<(Monomial, Coefficient, Term)> {
        let lt = self.leading_term()?.clone();
        Ok((lt.monomial.clone(), lt.coeff.clone(), lt))
    }

    pub(crate) fn lt(&self) -> &Term {
        &self.terms[0]
    }

    /// Minimum total degree of a term.
    pub fn order(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|t| t.monomial.degree())
            .min()
            .ok_or(Error::ZeroPolynomial("order"))
    }

    /// Maximum total degree of a term.
    pub fn max_degree(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|t| t.monomial.degree())
            .max()
            .ok_or(Error::ZeroPolynomial("degree"))
    }

    /// Sum of the terms of lowest total degree. `In(0) = 0`.
    pub fn initial_form(&self) -> Polynomial {
        let Ok(ord) = self.order() else {
            return self.clone();
        };
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| t.monomial.degree() == ord)
                .cloned()
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].monomial.degree() == w[1].monomial.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// Value at the origin.
    pub fn constant_coefficient(&self) -> Coefficient {
        self.terms
            .iter()
            .find(|t| t.monomial.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Whether any term has a positive exponent in variable `var`.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.exponents()[var] > 0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(self.ring.ordering(), &self.terms, other.terms.iter().cloned()),
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge(
                self.ring.ordering(),
                &self.terms,
                other.terms.iter().map(|t| Term::new(-&t.coeff, t.monomial.clone())),
            ),
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(Term::new(&a.coeff * &b.coeff, a.monomial.mul(&b.monomial)));
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: normalize(self.ring.ordering(), products),
        })
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.clone()))
                .collect(),
        }
    }

    /// `c * m * self`. Term order survives because orderings are multiplicative.
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.mul(m)))
                .collect(),
        }
    }

    /// `self - c * m * other`, the workhorse of every reduction step.
    pub(crate) fn sub_mul_term(&self, c: &Coefficient, m: &Monomial, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let neg = -c;
        Polynomial {
            ring: self.ring.clone(),
            terms: merge(
                self.ring.ordering(),
                &self.terms,
                other
                    .terms
                    .iter()
                    .map(|t| Term::new(&t.coeff * &neg, t.monomial.mul(m))),
            ),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(lt) if lt.coeff.is_one() => self.clone(),
            Some(lt) => self.scale(&lt.coeff.inverse().expect("nonzero")),
        }
    }

    /// Re-expresses the polynomial in `target`, which must carry the same
    /// variables followed by zero or more new ones, and the same field.
    pub fn lift(&self, target: &Ring) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if target.nvars() < n
            || target.variables()[..n] != *self.ring.variables()
            || target.field() != self.ring.field()
        {
            return Err(Error::RingMismatch);
        }
        let extra = target.nvars() - n;
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| {
                let mut m = t.monomial.clone();
                for _ in 0..extra {
                    m = m.extend();
                }
                (t.coeff.clone(), m)
            }),
        )
    }
}

impl Polynomial {
    /// The same formal sum in a ring that differs only in its ordering.
    pub fn reorder(&self, target: &Ring) -> Result<Polynomial> {
        if target.variables() != self.ring.variables() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial {
            ring: target.clone(),
            terms: normalize(target.ordering(), self.terms.clone()),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics if the operands live in different rings; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.monomial.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.variables();
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", t.monomial.display(names))?;
            } else {
                write!(f, "{c}*{}", t.monomial.display(names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn ring(vars: &[&str]) -> Ring {
        RingContext::local(vars).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn leading_data_examples() {
        let r2 = ring(&["x", "y"]);
        let r3 = ring(&["x", "y", "z"]);
        let f = p(&r2, "x^3 + y^4");
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::new(vec![3, 0]));
        assert!(f.leading_coefficient().unwrap().is_one());
        let g = p(&r3, "x^3 - z^2");
        let (lm, lc, lt) = g.leading_data().unwrap();
        assert_eq!(lm, Monomial::new(vec![0, 0, 2]));
        assert_eq!(lc, r3.field().from_i64(-1));
        assert_eq!(lt.coeff, lc);
        let h = p(&r2, "7*x");
        assert_eq!(h.leading_coefficient().unwrap(), &r2.field().from_i64(7));
        assert!(Polynomial::zero(&r2).leading_term().is_err());
    }

    #[test]
    fn order_and_initial_form() {
        let r2 = ring(&["x", "y"]);
        let r3 = ring(&["x", "y", "z"]);
        assert_eq!(p(&r2, "x^3 + y^4").order().unwrap(), 3);
        assert_eq!(p(&r2, "5").order().unwrap(), 0);
        assert_eq!(p(&r2, "y^4 - x^4").order().unwrap(), 4);
        assert!(Polynomial::zero(&r2).order().is_err());
        assert_eq!(p(&r2, "x^3 + y^4").initial_form(), p(&r2, "x^3"));
        assert_eq!(p(&r3, "x^3 - z^2").initial_form(), p(&r3, "-z^2"));
        assert!(Polynomial::zero(&r2).initial_form().is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(&p(&r, "x + 1") + &p(&r, "-x"), p(&r, "1"));
        assert_eq!(&p(&r, "x + y") * &p(&r, "x - y"), p(&r, "x^2 - y^2"));
        assert!((&Polynomial::zero(&r) * &p(&r, "x^2 + y")).is_zero());
        let other = ring(&["x", "z"]);
        assert_eq!(
            p(&r, "x").checked_add(&p(&other, "x")),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn lift_keeps_formal_sum() {
        let r = ring(&["x", "y"]);
        let e = r.extend("z").unwrap();
        let f = p(&r, "x^3 + y^4").lift(&e).unwrap();
        assert!(f.terms().iter().all(|t| t.monomial.exponents()[2] == 0));
        assert_eq!(f, p(&e, "x^3 + y^4"));
        let z2 = p(&e, "z^2");
        let x3 = p(&e, "x^3");
        assert_eq!(
            e.ordering().cmp(z2.leading_monomial().unwrap(), x3.leading_monomial().unwrap()),
            Ordering::Greater
        );
    }

    #[test]
    fn printing() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "y^4 + x^3").to_string(), "x^3 + y^4");
        assert_eq!(p(&r, "-2/3*x*y^2").to_string(), "-2/3*x*y^2");
        assert_eq!(p(&r, "x - x^2 + 3").to_string(), "3 + x - x^2");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
