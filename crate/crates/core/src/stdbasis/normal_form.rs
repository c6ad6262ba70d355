//! Mora's polynomial weak normal form and the ecart-free s-normal form.

use std::fmt::Write as _;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

use super::IdealBasis;

/// One reduction `h_{i+1} = spo(h_i, reducer)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormStep {
    pub reducee: Polynomial,
    pub reducer: Polynomial,
    /// Whether `reducee` joined the working set before this step.
    pub added: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormTrace {
    pub steps: Vec<NormalFormStep>,
    pub result: Polynomial,
    /// The initial generators followed by every reducee that was added.
    pub working_set: Vec<Polynomial>,
}

impl NormalFormTrace {
    /// One tab-separated line per step: index, reducee, reducer, added flag.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(out, "{i}\t{}\t{}\t{}", s.reducee, s.reducer, s.added).unwrap();
        }
        out
    }
}

/// `h - (lc h / lc g) * (lm h / lm g) * g`, i.e. `spo(h, g)` when `lm g | lm h`.
pub(crate) fn reduce_step(h: &Polynomial, g: &Polynomial) -> Polynomial {
    let (ht, gt) = (h.lt(), g.lt());
    let shift = ht.monomial.div(&gt.monomial).expect("reducer divides");
    let c = &ht.coeff / &gt.coeff;
    h.sub_mul_term(&c, &shift, g)
}

fn ecart_of(p: &Polynomial) -> u32 {
    let t = p.terms();
    let (mut lo, mut hi) = (u32::MAX, 0);
    for term in t {
        let d = term.monomial.degree();
        lo = lo.min(d);
        hi = hi.max(d);
    }
    hi - lo
}

/// Mora reduction of `f` against `basis`. Returns the remainder and the reducees
/// that were appended to the working set.
pub(crate) fn mora_reduce(
    f: &Polynomial,
    basis: &[Polynomial],
    mut steps: Option<&mut Vec<NormalFormStep>>,
) -> (Polynomial, Vec<Polynomial>) {
    let base_ecarts: Vec<u32> = basis.iter().map(ecart_of).collect();
    let mut added: Vec<Polynomial> = Vec::new();
    let mut added_ecarts: Vec<u32> = Vec::new();
    let mut h = f.clone();
    while !h.is_zero() {
        let lm = &h.lt().monomial;
        // minimal ecart among eligible reducers, earliest insertion on ties
        let mut best: Option<(usize, u32)> = None;
        let working = basis.iter().zip(&base_ecarts).chain(added.iter().zip(&added_ecarts));
        for (idx, (g, &e)) in working.enumerate() {
            if g.lt().monomial.divides(lm) && best.is_none_or(|(_, b)| e < b) {
                best = Some((idx, e));
            }
        }
        let Some((idx, reducer_ecart)) = best else {
            break;
        };
        let reducer = if idx < basis.len() {
            &basis[idx]
        } else {
            &added[idx - basis.len()]
        };
        let next = reduce_step(&h, reducer);
        let h_ecart = ecart_of(&h);
        let add = reducer_ecart > h_ecart;
        if let Some(s) = steps.as_deref_mut() {
            s.push(NormalFormStep {
                reducee: h.clone(),
                reducer: reducer.clone(),
                added: add,
            });
        }
        if add {
            added.push(h);
            added_ecarts.push(h_ecart);
        }
        h = next;
    }
    (h, added)
}

/// Mora's normal form of `f` with respect to `basis`, with the full trace.
///
/// The working set starts as the basis; a reducee joins it whenever the chosen
/// reducer has strictly larger ecart. Among eligible reducers the one of minimal
/// ecart is used, earliest-inserted first.
pub fn mora_normal_form(f: &Polynomial, basis: &IdealBasis) -> Result<(Polynomial, NormalFormTrace)> {
    basis.check_member_ring(f)?;
    let mut steps = Vec::new();
    let (result, added) = mora_reduce(f, basis.generators(), Some(&mut steps));
    let mut working_set = basis.generators().to_vec();
    working_set.extend(added);
    Ok((
        result.clone(),
        NormalFormTrace {
            steps,
            result,
            working_set,
        },
    ))
}

/// Terminal state of an s-normal-form computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SnfOutcome {
    Zero,
    /// A nonzero remainder whose leading monomial no element of the grown set divides.
    Irreducible(Polynomial),
    CapExceeded,
}

pub const DEFAULT_SNF_STEP_CAP: usize = 10_000;

/// Minimal-ecart eligible element of `set` restricted to `allowed`, earliest first.
fn min_ecart_reducer(set: &[(Polynomial, u32)], allowed: impl Iterator<Item = usize>, lm: &Monomial) -> Option<usize> {
    let mut best: Option<(usize, u32)> = None;
    for i in allowed {
        let (g, e) = &set[i];
        if g.lt().monomial.divides(lm) && best.is_none_or(|(_, b)| *e < b) {
            best = Some((i, *e));
        }
    }
    best.map(|(i, _)| i)
}

/// An s-normal form: every reducee joins the set. The ecart rule does not
/// constrain the sequence, so it is used only to pick reducers: Mora's choice
/// from the subset his algorithm would keep, otherwise the minimal-ecart element
/// of the whole set. A sequence that Mora's algorithm drives to zero is found.
/// Termination is not guaranteed once the whole set is consulted, hence the cap.
pub fn s_normal_form(f: &Polynomial, basis: &IdealBasis, step_cap: usize) -> Result<SnfOutcome> {
    basis.check_member_ring(f)?;
    let mut set: Vec<(Polynomial, u32)> = basis.generators().iter().map(|g| (g.clone(), ecart_of(g))).collect();
    let mut mora_set: Vec<usize> = (0..set.len()).collect();
    let mut h = f.clone();
    let mut steps = 0;
    loop {
        if h.is_zero() {
            return Ok(SnfOutcome::Zero);
        }
        let lm = h.lt().monomial.clone();
        let idx = match min_ecart_reducer(&set, mora_set.iter().copied(), &lm) {
            Some(i) => i,
            None => match min_ecart_reducer(&set, 0..set.len(), &lm) {
                Some(i) => i,
                None => return Ok(SnfOutcome::Irreducible(h)),
            },
        };
        if steps == step_cap {
            return Ok(SnfOutcome::CapExceeded);
        }
        let next = reduce_step(&h, &set[idx].0);
        let h_ecart = ecart_of(&h);
        if set[idx].1 > h_ecart {
            mora_set.push(set.len());
        }
        set.push((h, h_ecart));
        h = next;
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stdbasis::ecart;
    use crate::ring::{Ring, RingContext};

    fn ring(v: &[&str]) -> Ring {
        RingContext::local(v).unwrap()
    }

    #[test]
    fn unit_multiple_reduces_to_zero() {
        let r = ring(&["x"]);
        let g = IdealBasis::parse(&r, &["x - x^2"]).unwrap();
        let f = IdealBasis::parse(&r, &["x"]).unwrap().generators()[0].clone();
        let (nf, trace) = mora_normal_form(&f, &g).unwrap();
        assert!(nf.is_zero());
        let reducees: Vec<String> = trace.steps.iter().map(|s| s.reducee.to_string()).collect();
        assert_eq!(reducees, vec!["x", "x^2"]);
        assert!(trace.steps[0].added);
        assert_eq!(trace.steps[1].reducer.to_string(), "x");
        assert_eq!(trace.dump(), "0\tx\tx - x^2\ttrue\n1\tx^2\tx\tfalse\n");
        assert_eq!(s_normal_form(&f, &g, 100).unwrap(), SnfOutcome::Zero);
    }

    #[test]
    fn zero_has_zero_normal_form() {
        let r = ring(&["x", "y"]);
        let g = IdealBasis::parse(&r, &["x^3 + y^4"]).unwrap();
        let zero = Polynomial::zero(&r);
        let (nf, trace) = mora_normal_form(&zero, &g).unwrap();
        assert!(nf.is_zero());
        assert!(trace.steps.is_empty());
        assert_eq!(s_normal_form(&zero, &g, 10).unwrap(), SnfOutcome::Zero);
    }

    #[test]
    fn difference_of_generators_reduces() {
        let r = ring(&["x", "y", "z"]);
        let g = IdealBasis::parse(&r, &["x^3 + y^4", "x^3 - z^2"]).unwrap();
        let f = crate::parse::parse_polynomial("y^4 + z^2", &r).unwrap();
        let (nf, trace) = mora_normal_form(&f, &g).unwrap();
        assert!(nf.is_zero());
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.steps[0].reducer.to_string(), "-z^2 + x^3");
        assert_eq!(trace.steps[1].reducee.to_string(), "x^3 + y^4");
    }

    #[test]
    fn irreducible_remainder_is_reported() {
        let r = ring(&["x", "y"]);
        let g = IdealBasis::parse(&r, &["x^3"]).unwrap();
        let f = crate::parse::parse_polynomial("y^4 + x^3", &r).unwrap();
        match s_normal_form(&f, &g, 10).unwrap() {
            SnfOutcome::Irreducible(h) => assert_eq!(h.to_string(), "y^4"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cap_is_reported_not_truncated() {
        let r = ring(&["x"]);
        let g = IdealBasis::parse(&r, &["x - x^2"]).unwrap();
        let f = crate::parse::parse_polynomial("x", &r).unwrap();
        assert_eq!(s_normal_form(&f, &g, 1).unwrap(), SnfOutcome::CapExceeded);
    }

    #[test]
    fn ecart_helper_matches_public_fn() {
        let r = ring(&["x", "y"]);
        for s in ["x^3 + y^4", "x - x^2", "x*y", "1 + x^5*y"] {
            let p = crate::parse::parse_polynomial(s, &r).unwrap();
            assert_eq!(ecart_of(&p), ecart(&p).unwrap());
        }
    }
}
