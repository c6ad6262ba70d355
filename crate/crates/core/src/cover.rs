//! Cyclic covers `I_n = I + <g - y^n>` and the threshold `N` past which their
//! tangent cones stop changing.
//!
//! With `F` a standard basis of `I`, the completion of `F ∪ {g}` yields a
//! standard basis `{g_1, …, g_t}` of `I + <g>`; `N` is the largest order among
//! the `g_i`, and for `n > N` the tangent cone of `I_n` is presented by the
//! initial forms `In(g_i)` (which never involve `y`). This requires `g` to be a
//! non-zero-divisor modulo `I`, which is assumed rather than checked.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::{dim_and_mult, MonomialIdeal};
use crate::monomial::Monomial;
use crate::poly::{same_ring, Polynomial};
use crate::ring::Ring;
use crate::stdbasis::{
    initial_ideal_generators, leading_ideal, reduces_to_zero, same_homogeneous_ideal,
    standard_basis, IdealBasis, StandardBasis,
};

pub const REGULARITY_WARNING: &str =
    "WARNING: g is assumed to be a non-zero-divisor modulo I (e.g. I prime and g not in I); this is not verified";

/// `y`, or the first of `z`, `w`, `t`, `y1`, `y2`, … not already a variable.
pub fn default_cover_var(base: &Ring) -> String {
    ["y", "z", "w", "t"]
        .into_iter()
        .map(String::from)
        .chain((1..).map(|i| format!("y{i}")))
        .find(|v| base.index_of(v).is_none())
        .expect("infinitely many candidates")
}

/// A base ideal `I`, a branch function `g ∈ <x> \ I`, and the cover variable.
#[derive(Clone, Debug)]
pub struct CoverProblem {
    ideal_gens: IdealBasis,
    branch: Polynomial,
    cover_var: String,
    extended: Ring,
    base_std: StandardBasis,
}

impl CoverProblem {
    pub fn new(ideal_gens: IdealBasis, branch: Polynomial, cover_var: Option<&str>) -> Result<Self> {
        let base = ideal_gens.ring().clone();
        if !base.ordering().is_local() {
            return Err(Error::NotLocalOrdering);
        }
        if !same_ring(&base, branch.ring()) {
            return Err(Error::RingMismatch);
        }
        if branch.is_zero() {
            return Err(Error::InvalidCover("the branch function is zero".into()));
        }
        if !branch.constant_coefficient().is_zero() {
            return Err(Error::InvalidCover(
                "the branch function does not vanish at the origin".into(),
            ));
        }
        let base_std = standard_basis(&ideal_gens);
        if reduces_to_zero(&branch, &base_std.basis)? {
            return Err(Error::InvalidCover(
                "the branch function lies in the ideal".into(),
            ));
        }
        let cover_var = cover_var.map_or_else(|| default_cover_var(&base), String::from);
        let extended = base.extend(&cover_var)?;
        Ok(CoverProblem {
            ideal_gens,
            branch,
            cover_var,
            extended,
            base_std,
        })
    }

    pub fn base_ring(&self) -> &Ring {
        self.ideal_gens.ring()
    }

    pub fn extended_ring(&self) -> &Ring {
        &self.extended
    }

    pub fn ideal_gens(&self) -> &IdealBasis {
        &self.ideal_gens
    }

    pub fn branch(&self) -> &Polynomial {
        &self.branch
    }

    pub fn cover_var(&self) -> &str {
        &self.cover_var
    }

    fn cover_index(&self) -> usize {
        self.extended.nvars() - 1
    }
}

/// Generators of `I + <g - y^n>` in the extended ring.
pub fn cover_ideal(p: &CoverProblem, n: u32) -> Result<IdealBasis> {
    if n == 0 {
        return Err(Error::InvalidRange { lo: n, hi: n });
    }
    let ring = &p.extended;
    let mut gens = p.ideal_gens.lift(ring)?.generators().to_vec();
    let y_n = Polynomial::from_terms(
        ring,
        [(
            ring.field().one(),
            Monomial::variable_power(ring.nvars(), p.cover_index(), n),
        )],
    )?;
    gens.push(&p.branch.lift(ring)? - &y_n);
    IdealBasis::new(ring, gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRow {
    pub n: u32,
    /// The standard basis of `I_n` the row was read from.
    pub std_basis: IdealBasis,
    /// Monic initial forms of a standard basis of `I_n`.
    pub cone_gens: Vec<Polynomial>,
    pub leading_ideal: MonomialIdeal,
    pub dimension: usize,
    pub multiplicity: u64,
    /// `<cone_gens> = <stable cone generators>` as ideals.
    pub matches_stable_cone: bool,
}

impl CoverRow {
    /// Whether the row agrees with the predicted stable cone in every respect.
    pub fn is_stable(&self, a: &CoverAnalysis) -> bool {
        self.matches_stable_cone
            && self.dimension == a.stable_dimension
            && self.multiplicity == a.stable_multiplicity
    }
}

#[derive(Clone, Debug)]
pub struct CoverAnalysis {
    pub problem: CoverProblem,
    /// Standard basis `F` of `I` in the base ring.
    pub base_std_basis: IdealBasis,
    /// `G_0 = F ∪ {g} ⊊ G_1 ⊊ … ⊊ G_k`.
    pub chain: Vec<IdealBasis>,
    /// `G_k`, a standard basis of `I + <g>`.
    pub final_basis: IdealBasis,
    pub threshold: u32,
    /// Monic initial forms of `G_k`, lifted to the extended ring.
    pub stable_cone_gens: Vec<Polynomial>,
    pub stable_dimension: usize,
    pub stable_multiplicity: u64,
    /// Sorted by `n`.
    pub rows: Vec<CoverRow>,
}

impl CoverAnalysis {
    /// True when the range reaches past `N` and every row there is stable.
    pub fn stabilized_in_range(&self) -> bool {
        let past: Vec<&CoverRow> = self.rows.iter().filter(|r| r.n > self.threshold).collect();
        !past.is_empty() && past.iter().all(|r| r.is_stable(self))
    }

    /// Smallest computed `n` from which every row has the stable dimension and
    /// multiplicity. This can be at or below `N`.
    pub fn multiplicity_onset(&self) -> Option<u32> {
        let mut onset = None;
        for r in self.rows.iter().rev() {
            if r.dimension == self.stable_dimension && r.multiplicity == self.stable_multiplicity {
                onset = Some(r.n);
            } else {
                break;
            }
        }
        onset
    }
}

/// Computes `F`, the chain from `F ∪ {g}`, the threshold `N` and the stable cone.
/// The returned analysis has no rows.
pub fn stabilization_threshold(p: &CoverProblem) -> Result<CoverAnalysis> {
    let base_std_basis = p.base_std.basis.clone();
    let mut g0 = base_std_basis.clone();
    g0.push(p.branch.clone());
    let run = standard_basis(&g0);
    let final_basis = run.basis;
    let threshold = final_basis
        .generators()
        .iter()
        .map(|g| g.order())
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .expect("G_0 contains g");
    let lifted = final_basis.lift(&p.extended)?;
    let stable_cone_gens = initial_ideal_generators(&lifted);
    let (stable_dimension, stable_multiplicity) = dim_and_mult(&leading_ideal(&lifted))?;
    Ok(CoverAnalysis {
        problem: p.clone(),
        base_std_basis,
        chain: run.chain,
        final_basis,
        threshold,
        stable_cone_gens,
        stable_dimension,
        stable_multiplicity,
        rows: Vec::new(),
    })
}

fn compute_row(p: &CoverProblem, stable: &[Polynomial], n: u32) -> Result<CoverRow> {
    let sb = standard_basis(&cover_ideal(p, n)?);
    let cone_gens = initial_ideal_generators(&sb.basis);
    let li = leading_ideal(&sb.basis);
    let (dimension, multiplicity) = dim_and_mult(&li)?;
    let matches_stable_cone = same_homogeneous_ideal(&cone_gens, stable)?;
    Ok(CoverRow {
        n,
        std_basis: sb.basis,
        cone_gens,
        leading_ideal: li,
        dimension,
        multiplicity,
        matches_stable_cone,
    })
}

/// The threshold analysis plus one row per `n` in `lo..=hi`, each from an
/// independent standard-basis computation of `I_n`.
pub fn mult_table(p: &CoverProblem, lo: u32, hi: u32) -> Result<CoverAnalysis> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let mut analysis = stabilization_threshold(p)?;
    let stable = analysis.stable_cone_gens.clone();
    analysis.rows = (lo..=hi)
        .into_par_iter()
        .map(|n| compute_row(p, &stable, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(analysis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductVerdict {
    Holds,
    /// A stable cone generator that involves the cover variable.
    InvolvesCoverVar(Polynomial),
}

impl ProductVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ProductVerdict::Holds)
    }
}

/// The stable cone is a product with the affine line exactly when none of its
/// generators involves the cover variable.
pub fn product_structure_check(a: &CoverAnalysis) -> ProductVerdict {
    let y = a.problem.cover_index();
    match a.stable_cone_gens.iter().find(|g| g.involves(y)) {
        Some(g) => ProductVerdict::InvolvesCoverVar(g.clone()),
        None => ProductVerdict::Holds,
    }
}

/// `mult(B_n) <= n * base_mult` on every row (vacuously true without rows).
pub fn degree_bound_check(a: &CoverAnalysis, base_mult: u64) -> bool {
    a.rows.iter().all(|r| r.multiplicity <= r.n as u64 * base_mult)
}
