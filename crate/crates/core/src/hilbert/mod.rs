//! Hilbert series of monomial quotients, and the Hilbert–Samuel multiplicity of
//! a local ring computed through the leading ideal of a standard basis.

mod oracle;

pub use oracle::{finite_difference_asymptotics, hs_function_oracle, hs_function_values};

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrdering};
use crate::stdbasis::{leading_ideal, standard_basis, IdealBasis, StandardBasis};

/// A monomial ideal given by its minimal generators, sorted ascending in `dp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The divisibility-minimal generators of the ideal spanned by `gens`.
    pub fn minimalize<I: IntoIterator<Item = Monomial>>(nvars: usize, gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|m| m.nvars() == nvars));
        all.sort_by(|a, b| MonomialOrdering::GlobalDegRevLex.cmp(a, b));
        all.dedup();
        // ascending degree: a divisor always precedes its multiples
        let mut min: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialIdealDisplay<'a> {
        MonomialIdealDisplay { ideal: self, names }
    }
}

pub struct MonomialIdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for MonomialIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, m) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m.display(self.names))?;
        }
        write!(f, ">")
    }
}

// Dense integer polynomials in t, lowest degree first.

fn poly_trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(out)
}

fn poly_shift(a: &[i64], k: usize) -> Vec<i64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

/// `p * (1 - t^k)`.
fn poly_mul_one_minus(p: &[i64], k: usize) -> Vec<i64> {
    let neg: Vec<i64> = p.iter().map(|c| -c).collect();
    poly_add(p, &poly_shift(&neg, k))
}

/// Numerator `Q(t)` of the Hilbert series `Q(t) / (1 - t)^n` of `K[x]/I`.
///
/// Pivot recursion `Q(I) = Q(I + <p>) + t^deg(p) Q(I : p)` on a pure power
/// `p = x_v^e` of the variable occurring in the most generators, with `e` the
/// least positive exponent of `x_v` among them.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    let gens = ideal.generators();
    if gens.is_empty() {
        return vec![1];
    }
    if ideal.contains_one() {
        return Vec::new();
    }
    let n = ideal.nvars();
    let mut counts = vec![0usize; n];
    for g in gens {
        for (v, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    // first variable among those of maximal frequency
    let (pivot_var, &freq) = counts
        .iter()
        .enumerate()
        .rev()
        .max_by_key(|(_, c)| **c)
        .expect("at least one variable");
    if freq <= 1 {
        // pairwise coprime
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul_one_minus(&acc, g.degree() as usize));
    }
    let power = gens
        .iter()
        .map(|g| g.exponents()[pivot_var])
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    let pivot = Monomial::variable_power(n, pivot_var, power);

    let sum = MonomialIdeal::minimalize(n, gens.iter().cloned().chain([pivot.clone()]));
    let quotient = MonomialIdeal::minimalize(
        n,
        gens.iter()
            .map(|g| g.div(&g.gcd(&pivot)).expect("gcd divides")),
    );
    poly_add(
        &hilbert_numerator(&sum),
        &poly_shift(&hilbert_numerator(&quotient), power as usize),
    )
}

/// `Q(t)` together with the dimension `d` and multiplicity `P(1)` where
/// `Q(t) / (1 - t)^n = P(t) / (1 - t)^d` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSummary {
    pub numerator: Vec<i64>,
    pub dimension: usize,
    pub multiplicity: u64,
}

pub fn hilbert_summary(ideal: &MonomialIdeal) -> Result<HilbertSummary> {
    let numerator = hilbert_numerator(ideal);
    if numerator.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let mut p = numerator.clone();
    let mut dimension = ideal.nvars();
    while dimension > 0 && p.iter().sum::<i64>() == 0 {
        // exact division by (1 - t): prefix sums, the last of which is zero
        let mut acc = 0;
        let mut q: Vec<i64> = p
            .iter()
            .map(|c| {
                acc += c;
                acc
            })
            .collect();
        debug_assert_eq!(q.last(), Some(&0));
        q.pop();
        p = poly_trim(q);
        dimension -= 1;
    }
    let value: i64 = p.iter().sum();
    assert!(value > 0, "Hilbert numerator has non-positive P(1) = {value}");
    Ok(HilbertSummary {
        numerator,
        dimension,
        multiplicity: value as u64,
    })
}

/// `(dimension, multiplicity)` of `K[x]/I`.
pub fn dim_and_mult(ideal: &MonomialIdeal) -> Result<(usize, u64)> {
    let s = hilbert_summary(ideal)?;
    Ok((s.dimension, s.multiplicity))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMultiplicity {
    pub dimension: usize,
    pub multiplicity: u64,
    pub std_basis: StandardBasis,
}

/// Dimension and Hilbert–Samuel multiplicity of `R / <G0>` for the localization
/// `R` at the origin, read off from the leading ideal of a standard basis.
pub fn multiplicity_of_local_ring(g0: &IdealBasis) -> Result<LocalMultiplicity> {
    if !g0.ring().ordering().is_local() {
        return Err(Error::NotLocalOrdering);
    }
    let std_basis = standard_basis(g0);
    let li = leading_ideal(&std_basis.basis);
    if li.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let (dimension, multiplicity) = dim_and_mult(&li)?;
    Ok(LocalMultiplicity {
        dimension,
        multiplicity,
        std_basis,
    })
}
