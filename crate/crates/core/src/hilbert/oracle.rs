//! Hilbert–Samuel function by plain linear algebra.
//!
//! `dim_K R / (I + m^(s+1))` is computed inside the finite-dimensional space
//! `K[x] / m^(s+1)`: the image of `I` there is spanned by the truncations of
//! `x^a * g` over generators `g` and monomials with `deg x^a + ord g <= s`. No
//! standard bases are involved, so this serves as an independent check on the
//! leading-ideal route.

use std::collections::HashMap;

use crate::coeff::Coefficient;
use crate::error::Result;
use crate::stdbasis::IdealBasis;

/// All exponent vectors in `n` variables of total degree at most `s`,
/// grouped by ascending degree.
fn monomials_up_to(n: usize, s: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=s {
        let mut cur = vec![0u32; n];
        push_degree(&mut out, &mut cur, 0, d);
    }
    out
}

fn push_degree(out: &mut Vec<Vec<u32>>, cur: &mut [u32], var: usize, left: u32) {
    if var + 1 == cur.len() {
        cur[var] = left;
        out.push(cur.to_vec());
        return;
    }
    for e in (0..=left).rev() {
        cur[var] = e;
        push_degree(out, cur, var + 1, left - e);
    }
    cur[var] = 0;
}

type SparseRow = Vec<(usize, Coefficient)>;

/// `a + c * b` for rows sorted by column.
fn axpy(a: &SparseRow, c: &Coefficient, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Values `dim_K R/(I + m^(s+1))` for `s = 0..=s_max`.
///
/// Columns are ordered by ascending degree, so after echelon reduction the image
/// of `I` in `K[x]/m^(s+1)` has dimension equal to the number of pivots of degree
/// at most `s`; one elimination yields every value up to `s_max`.
pub fn hs_function_values(g0: &IdealBasis, s_max: u32) -> Result<Vec<u64>> {
    let n = g0.ring().nvars();
    let monos = monomials_up_to(n, s_max);
    let index: HashMap<&[u32], usize> = monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let degree_of = |col: usize| -> u32 { monos[col].iter().sum() };

    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    let mut shifted = vec![0u32; n];
    for g in g0.generators() {
        let ord = g.order()?;
        if ord > s_max {
            continue;
        }
        for m in &monos {
            let dm: u32 = m.iter().sum();
            if dm + ord > s_max {
                // monomials are grouped by degree
                break;
            }
            let mut row: SparseRow = Vec::with_capacity(g.len());
            for t in g.terms() {
                if t.monomial.degree() + dm > s_max {
                    continue;
                }
                for (k, e) in t.monomial.exponents().iter().enumerate() {
                    shifted[k] = e + m[k];
                }
                row.push((index[shifted.as_slice()], t.coeff.clone()));
            }
            row.sort_by_key(|(c, _)| *c);
            // echelon reduction on the leading column
            while let Some((lead, coeff)) = row.first().cloned() {
                match pivots.get(&lead) {
                    Some(p) => {
                        let factor = -&(&coeff / &p[0].1);
                        row = axpy(&row, &factor, p);
                    }
                    None => {
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
    }

    let mut pivots_by_degree = vec![0u64; s_max as usize + 1];
    for &col in pivots.keys() {
        pivots_by_degree[degree_of(col) as usize] += 1;
    }
    let mut monos_by_degree = vec![0u64; s_max as usize + 1];
    for m in &monos {
        monos_by_degree[m.iter().sum::<u32>() as usize] += 1;
    }
    let (mut total, mut rank) = (0u64, 0u64);
    Ok((0..=s_max as usize)
        .map(|s| {
            total += monos_by_degree[s];
            rank += pivots_by_degree[s];
            total - rank
        })
        .collect())
}

/// `dim_K R/(I + m^(s+1))`.
pub fn hs_function_oracle(g0: &IdealBasis, s: u32) -> Result<u64> {
    Ok(*hs_function_values(g0, s)?.last().expect("s + 1 values"))
}

/// Reads `(d, e)` off the tail of a Hilbert–Samuel sequence: `d` is the least
/// order whose finite differences are constant and nonzero on the last `window`
/// values, and `e` is that constant. `None` if no order up to `max_dim` settles.
pub fn finite_difference_asymptotics(
    values: &[u64],
    max_dim: usize,
    window: usize,
) -> Option<(usize, u64)> {
    let mut diff: Vec<i128> = values.iter().map(|&v| v as i128).collect();
    for d in 0..=max_dim {
        if diff.len() < window.max(1) {
            return None;
        }
        let tail = &diff[diff.len() - window.max(1)..];
        if tail[0] != 0 && tail.iter().all(|v| *v == tail[0]) {
            return u64::try_from(tail[0]).ok().map(|e| (d, e));
        }
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn enumerates_every_monomial_once() {
        let ms = monomials_up_to(3, 5);
        assert_eq!(ms.len() as u64, binomial(8, 3));
        let mut sorted = ms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ms.len());
    }

    #[test]
    fn full_ring_counts_all_monomials() {
        let r = RingContext::local(&["x", "y", "z"]).unwrap();
        let empty = IdealBasis::empty(&r);
        for s in 0..8u64 {
            assert_eq!(hs_function_oracle(&empty, s as u32).unwrap(), binomial(s + 3, 3));
        }
    }

    #[test]
    fn smooth_point_of_a_line() {
        let r = RingContext::local(&["x"]).unwrap();
        let g = IdealBasis::parse(&r, &["x"]).unwrap();
        assert_eq!(hs_function_values(&g, 6).unwrap(), vec![1; 7]);
    }

    #[test]
    fn cusp_slope_is_three() {
        let r = RingContext::local(&["x", "y"]).unwrap();
        let g = IdealBasis::parse(&r, &["x^3 + y^4"]).unwrap();
        let v = hs_function_values(&g, 10).unwrap();
        // 1, 3, 6, then 3 new monomials per degree
        assert_eq!(v, vec![1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30]);
        assert_eq!(finite_difference_asymptotics(&v, 2, 3), Some((1, 3)));
    }

    #[test]
    fn unit_generator_kills_everything() {
        let r = RingContext::local(&["x", "y"]).unwrap();
        let g = IdealBasis::parse(&r, &["1 + x"]).unwrap();
        assert_eq!(hs_function_values(&g, 4).unwrap(), vec![0; 5]);
    }

    #[test]
    fn prefix_values_match_direct_computation() {
        let r = RingContext::local(&["x", "y", "z"]).unwrap();
        let g = IdealBasis::parse(&r, &["x^2 - y*z + z^3", "x*y + y^4"]).unwrap();
        let all = hs_function_values(&g, 9).unwrap();
        for s in 0..=9 {
            assert_eq!(hs_function_oracle(&g, s).unwrap(), all[s as usize]);
        }
    }

    #[test]
    fn asymptotics_of_known_sequences() {
        assert_eq!(finite_difference_asymptotics(&[1, 2, 4, 4, 4, 4], 3, 3), Some((0, 4)));
        // binomial(s + 2, 2): second differences are 1
        let v: Vec<u64> = (0..10).map(|s| binomial(s + 2, 2)).collect();
        assert_eq!(finite_difference_asymptotics(&v, 3, 3), Some((2, 1)));
        assert_eq!(finite_difference_asymptotics(&[1, 2, 4, 8, 16, 32], 2, 3), None);
    }
}
