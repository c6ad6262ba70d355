//! Standard bases with respect to local (and, for cross-checks, global) degree
//! orderings.

mod completion;
mod normal_form;

pub use completion::{standard_basis, StandardBasis};
pub use normal_form::{
    mora_normal_form, s_normal_form, NormalFormStep, NormalFormTrace, SnfOutcome,
    DEFAULT_SNF_STEP_CAP,
};

use crate::error::{Error, Result};
use crate::hilbert::MonomialIdeal;
use crate::monomial::MonomialOrdering;
use crate::parse::parse_polynomial;
use crate::poly::{same_ring, Polynomial};
use crate::ring::Ring;

pub(crate) use normal_form::mora_reduce;

/// A finite list of nonzero generators in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !same_ring(ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial("ideal generator"));
            }
        }
        Ok(IdealBasis {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn empty(ring: &Ring) -> Self {
        IdealBasis {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, texts: &[S]) -> Result<Self> {
        let gens = texts
            .iter()
            .map(|t| parse_polynomial(t.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
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

    pub(crate) fn push(&mut self, p: Polynomial) {
        debug_assert!(!p.is_zero());
        self.generators.push(p);
    }

    pub(crate) fn check_member_ring(&self, f: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, f.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Lifts every generator into a ring with extra trailing variables.
    pub fn lift(&self, target: &Ring) -> Result<IdealBasis> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.lift(target))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(target, gens)
    }

    pub fn reorder(&self, target: &Ring) -> Result<IdealBasis> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.reorder(target))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(target, gens)
    }
}

/// `x^(g-a) f - (lc f / lc g) x^(g-b) g` where `x^a = lm f`, `x^b = lm g` and
/// `g = lcm(a, b)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let ft = f.leading_term()?;
    let gt = g.leading_term()?;
    let lcm = ft.monomial.lcm(&gt.monomial);
    let f_shift = lcm.div(&ft.monomial).expect("lcm is a multiple");
    let g_shift = lcm.div(&gt.monomial).expect("lcm is a multiple");
    let one = f.ring().field().one();
    let ratio = &ft.coeff / &gt.coeff;
    Ok(f.mul_term(&one, &f_shift).sub_mul_term(&ratio, &g_shift, g))
}

/// Spread between the largest and smallest term degree.
pub fn ecart(f: &Polynomial) -> Result<u32> {
    Ok(f.max_degree()? - f.order()?)
}

/// Minimal generators of the monomial ideal spanned by the leading monomials.
pub fn leading_ideal(basis: &IdealBasis) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        basis.ring().nvars(),
        basis.generators().iter().map(|g| g.lt().monomial.clone()),
    )
}

/// Initial forms of the basis elements, made monic and deduplicated. When the
/// input is a standard basis these generate the initial ideal.
pub fn initial_ideal_generators(basis: &IdealBasis) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for g in basis.generators() {
        let form = g.initial_form().monic();
        if !out.contains(&form) {
            out.push(form);
        }
    }
    out
}

/// Outcome of testing that every s-polynomial has Mora normal form zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionVerdict {
    Holds,
    Fails {
        i: usize,
        j: usize,
        remainder: Polynomial,
    },
}

impl CriterionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CriterionVerdict::Holds)
    }
}

/// Checks `NF(spo(g_i, g_j) | G) = 0` for all pairs, reporting the first failure.
pub fn buchberger_check(basis: &IdealBasis) -> CriterionVerdict {
    let gens = basis.generators();
    for j in 0..gens.len() {
        for i in 0..j {
            let s = s_polynomial(&gens[i], &gens[j]).expect("validated basis");
            let (r, _) = mora_reduce(&s, gens, None);
            if !r.is_zero() {
                return CriterionVerdict::Fails { i, j, remainder: r };
            }
        }
    }
    CriterionVerdict::Holds
}

/// Drops every generator whose leading monomial is divisible by that of another
/// generator (keeping the first among equal leading monomials). Optional; the
/// threshold computation never uses it.
pub fn minimize_basis(basis: &IdealBasis) -> IdealBasis {
    let gens = basis.generators();
    let keep = gens
        .iter()
        .enumerate()
        .filter(|(i, g)| {
            let lm = &g.lt().monomial;
            !gens.iter().enumerate().any(|(j, h)| {
                let hm = &h.lt().monomial;
                j != *i && hm.divides(lm) && (hm != lm || j < *i)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();
    IdealBasis {
        ring: basis.ring.clone(),
        generators: keep,
    }
}

/// Whether `f` lies in the ideal generated by the standard basis `sb`, in the
/// sense of the ring's ordering (local ordering: membership in the localization).
pub fn reduces_to_zero(f: &Polynomial, sb: &IdealBasis) -> Result<bool> {
    sb.check_member_ring(f)?;
    Ok(mora_reduce(f, sb.generators(), None).0.is_zero())
}

/// Ideal equality by mutual normal-form membership, computed in the ring's own
/// ordering.
pub fn same_ideal(a: &IdealBasis, b: &IdealBasis) -> Result<bool> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let sa = standard_basis(a).basis;
    let sb = standard_basis(b).basis;
    for g in b.generators() {
        if !reduces_to_zero(g, &sa)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !reduces_to_zero(g, &sb)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals generated by homogeneous forms, decided with Gröbner bases
/// for the global ordering `dp`.
pub fn same_homogeneous_ideal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let ring = match a.first().or(b.first()) {
        Some(p) => p.ring().clone(),
        None => return Ok(true),
    };
    if a.iter().chain(b).any(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let global = ring.with_ordering(MonomialOrdering::GlobalDegRevLex);
    let nonzero = |ps: &[Polynomial]| -> Result<IdealBasis> {
        let gens = ps
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.reorder(&global))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(&global, gens)
    };
    same_ideal(&nonzero(a)?, &nonzero(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::ring::RingContext;

    fn ring(v: &[&str]) -> Ring {
        RingContext::local(v).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring(&["x", "y", "z"]);
        let f = p(&r, "x^3 + y^4");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        // lm's x^3 and z^2, lcm x^3 z^2:
        // z^2 (x^3 + y^4) + x^3 (x^3 - z^2) = x^6 + y^4 z^2
        let g = p(&r, "x^3 - z^2");
        assert_eq!(s_polynomial(&f, &g).unwrap(), p(&r, "x^6 + y^4*z^2"));
        assert!(s_polynomial(&p(&r, "x*y"), &p(&r, "x^2")).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn ecart_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(ecart(&p(&r, "x^3 + y^4")).unwrap(), 1);
        assert_eq!(ecart(&p(&r, "x - x^2")).unwrap(), 1);
        assert_eq!(ecart(&p(&r, "5*x^2*y^7")).unwrap(), 0);
        assert!(ecart(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn buchberger_check_examples() {
        let r2 = ring(&["x", "y"]);
        let r3 = ring(&["x", "y", "z"]);
        assert!(buchberger_check(&IdealBasis::parse(&r2, &["x^3", "y^4"]).unwrap()).holds());
        assert!(buchberger_check(&IdealBasis::parse(&r3, &["x^3 + y^4", "x^3 - z^2"]).unwrap()).holds());
        match buchberger_check(&IdealBasis::parse(&r2, &["x^3 + y^4", "x^3"]).unwrap()) {
            CriterionVerdict::Fails { i, j, remainder } => {
                assert_eq!((i, j), (0, 1));
                assert_eq!(remainder, p(&r2, "y^4"));
            }
            CriterionVerdict::Holds => panic!("should fail"),
        }
    }

    #[test]
    fn leading_ideal_examples() {
        let r = ring(&["x", "y", "z"]);
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        let li = leading_ideal(&IdealBasis::parse(&r, &["x^3 + y^4", "x^3 - z^2"]).unwrap());
        assert_eq!(li.generators(), &[m(&[0, 0, 2]), m(&[3, 0, 0])]);
        let li = leading_ideal(&IdealBasis::parse(&r, &["x", "x^2", "x^3"]).unwrap());
        assert_eq!(li.generators(), &[m(&[1, 0, 0])]);
        let li = leading_ideal(&IdealBasis::parse(&r, &["x*y", "x^2 - z^3", "y*z^3"]).unwrap());
        assert_eq!(
            li,
            MonomialIdeal::minimalize(3, [m(&[1, 1, 0]), m(&[2, 0, 0]), m(&[0, 1, 3])])
        );
    }

    #[test]
    fn initial_ideal_generator_examples() {
        let r2 = ring(&["x", "y"]);
        let r3 = ring(&["x", "y", "z"]);
        let got = initial_ideal_generators(&IdealBasis::parse(&r3, &["x^3 + y^4", "x^3 - z^2"]).unwrap());
        assert_eq!(got, vec![p(&r3, "x^3"), p(&r3, "z^2")]);
        let got = initial_ideal_generators(&IdealBasis::parse(&r2, &["x^3", "y^4"]).unwrap());
        assert_eq!(got, vec![p(&r2, "x^3"), p(&r2, "y^4")]);
        let got = initial_ideal_generators(&IdealBasis::parse(&r3, &["x*y", "x^2 - z^3", "y*z^3"]).unwrap());
        assert_eq!(got, vec![p(&r3, "x*y"), p(&r3, "x^2"), p(&r3, "y*z^3")]);
        let got = initial_ideal_generators(&IdealBasis::parse(&r2, &["x^2 + y^3", "-2*x^2"]).unwrap());
        assert_eq!(got, vec![p(&r2, "x^2")]);
    }

    #[test]
    fn minimize_drops_redundant_elements() {
        let r = ring(&["x", "y"]);
        let b = IdealBasis::parse(&r, &["x^3 + y^4", "x^3", "y^4", "x*y^5"]).unwrap();
        let m = minimize_basis(&b);
        assert_eq!(m.generators(), &[p(&r, "x^3 + y^4"), p(&r, "y^4")]);
    }

    #[test]
    fn homogeneous_ideal_equality() {
        let r = ring(&["x", "y", "z"]);
        let a = [p(&r, "x^3 + z^3"), p(&r, "z^3")];
        let b = [p(&r, "x^3"), p(&r, "-z^3")];
        assert!(same_homogeneous_ideal(&a, &b).unwrap());
        let c = [p(&r, "x^3"), p(&r, "y^4 - z^4")];
        let d = [p(&r, "x^3"), p(&r, "y^4 + z^4")];
        assert!(!same_homogeneous_ideal(&c, &d).unwrap());
        assert_eq!(
            same_homogeneous_ideal(&[p(&r, "x + x^2")], &b),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn local_ideal_equality_sees_units() {
        let r = ring(&["x", "y"]);
        let a = IdealBasis::parse(&r, &["x - x^2"]).unwrap();
        let b = IdealBasis::parse(&r, &["x"]).unwrap();
        assert!(same_ideal(&a, &b).unwrap());
    }

    #[test]
    fn basis_rejects_zero_and_foreign_generators() {
        let r = ring(&["x", "y"]);
        assert!(IdealBasis::new(&r, vec![Polynomial::zero(&r)]).is_err());
        let other = ring(&["u"]);
        assert_eq!(
            IdealBasis::new(&r, vec![Polynomial::variable(&other, 0)]),
            Err(Error::RingMismatch)
        );
    }
}
