//! Shared fixtures and reference implementations for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use covercone::{
    Coefficient, FieldSpec, IdealBasis, Monomial, MonomialIdeal, MonomialOrdering, Polynomial, Ring,
    RingContext,
};
use num_bigint::BigInt;
use rand::Rng;

pub const VARS: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring(n: usize) -> Ring {
    RingContext::local(&VARS[..n]).unwrap()
}

pub fn ring_over(n: usize, field: &FieldSpec) -> Ring {
    RingContext::new(&VARS[..n], MonomialOrdering::LocalDegRevLex, *field).unwrap()
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    covercone::parse_polynomial(s, r).unwrap()
}

pub fn basis(r: &Ring, gens: &[&str]) -> IdealBasis {
    IdealBasis::parse(r, gens).unwrap()
}

/// Over Q a rational `p/q` with `q` in 1..=3 and `|p/q| <= 3`; over F_p a
/// uniform residue. Never zero.
pub fn random_coeff<R: Rng>(rng: &mut R, field: &FieldSpec) -> Coefficient {
    if let FieldSpec::Prime(p) = field {
        return field.from_i64(rng.gen_range(1..*p) as i64);
    }
    loop {
        let q: i64 = rng.gen_range(1..=3);
        let p: i64 = rng.gen_range(-3 * q..=3 * q);
        if p != 0 {
            return FieldSpec::Rationals
                .from_ratio(&BigInt::from(p), &BigInt::from(q))
                .unwrap();
        }
    }
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, min_deg: u32, max_deg: u32) -> Monomial {
    let d = rng.gen_range(min_deg..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// A nonzero polynomial without constant term, degrees 1..=max_deg.
pub fn random_poly<R: Rng>(rng: &mut R, r: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..k)
            .map(|_| (random_coeff(rng, &r.field()), random_monomial(rng, r.nvars(), 1, max_deg)))
            .collect();
        let p = Polynomial::from_terms(r, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_basis<R: Rng>(rng: &mut R, max_vars: usize, max_gens: usize, max_deg: u32) -> IdealBasis {
    random_basis_over(rng, &FieldSpec::Rationals, max_vars, max_gens, max_deg)
}

pub fn random_basis_over<R: Rng>(
    rng: &mut R,
    field: &FieldSpec,
    max_vars: usize,
    max_gens: usize,
    max_deg: u32,
) -> IdealBasis {
    let n = rng.gen_range(1..=max_vars);
    let r = ring_over(n, field);
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_poly(rng, &r, 4, max_deg)).collect();
    IdealBasis::new(&r, gens).unwrap()
}

pub fn random_monomial_ideal<R: Rng>(rng: &mut R, max_vars: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars);
    let k = rng.gen_range(0..=max_gens);
    MonomialIdeal::minimalize(n, (0..k).map(|_| random_monomial(rng, n, 1, max_deg)))
}

// ---- reference implementations ----

/// Q(t) by inclusion–exclusion over subsets of generators.
pub fn inclusion_exclusion_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    let gens = ideal.generators();
    let n = ideal.nvars();
    let mut q: BTreeMap<u32, i64> = BTreeMap::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut lcm = Monomial::one(n);
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *q.entry(lcm.degree()).or_default() += sign;
    }
    let top = q.keys().max().copied().unwrap_or(0) as usize;
    let mut out = vec![0i64; top + 1];
    for (d, c) in q {
        out[d as usize] = c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Number of degree-`d` monomials outside the ideal, by enumeration.
pub fn count_standard_monomials(ideal: &MonomialIdeal, d: u32) -> u64 {
    fn rec(ideal: &MonomialIdeal, cur: &mut Vec<u32>, var: usize, left: u32) -> u64 {
        if var + 1 == cur.len() {
            cur[var] = left;
            let m = Monomial::new(cur.clone());
            cur[var] = 0;
            return u64::from(!ideal.contains(&m));
        }
        (0..=left)
            .map(|e| {
                cur[var] = e;
                let c = rec(ideal, cur, var + 1, left - e);
                cur[var] = 0;
                c
            })
            .sum()
    }
    rec(ideal, &mut vec![0; ideal.nvars()], 0, d)
}

/// Coefficients of Q(t) / (1 - t)^n up to degree `d_max`.
pub fn expand_series(numerator: &[i64], n: usize, d_max: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..=d_max).map(|i| numerator.get(i).copied().unwrap_or(0)).collect();
    for _ in 0..n {
        for i in 1..s.len() {
            s[i] += s[i - 1];
        }
    }
    s
}

/// Polynomials as plain exponent-to-coefficient maps, for checking arithmetic.
pub type Dense = BTreeMap<Vec<u32>, Coefficient>;

pub fn to_dense(p: &Polynomial) -> Dense {
    p.terms()
        .iter()
        .map(|t| (t.monomial.exponents().to_vec(), t.coeff.clone()))
        .collect()
}

pub fn dense_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (m, c) in b {
        let v = match out.get(m) {
            Some(x) => x + c,
            None => c.clone(),
        };
        if v.is_zero() {
            out.remove(m);
        } else {
            out.insert(m.clone(), v);
        }
    }
    out
}

pub fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let single: Dense = [(m, ca * cb)].into_iter().collect();
            out = dense_add(&out, &single);
        }
    }
    out
}

pub fn distinct_count<T: std::hash::Hash + Eq>(items: impl IntoIterator<Item = T>) -> usize {
    items.into_iter().collect::<HashSet<_>>().len()
}
