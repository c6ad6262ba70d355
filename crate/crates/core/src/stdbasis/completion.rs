use std::collections::VecDeque;

use super::normal_form::mora_reduce;
use super::{s_polynomial, IdealBasis};

/// The output of the completion loop: the final set together with every
/// intermediate set `G_0 ⊊ G_1 ⊊ … ⊊ G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    pub basis: IdealBasis,
    pub chain: Vec<IdealBasis>,
    /// For each appended element, the index pair whose s-polynomial produced it.
    pub origins: Vec<(usize, usize)>,
}

/// Completes `g0` to a standard basis by appending every nonzero Mora normal form
/// of an s-polynomial, pairs being processed first-in first-out.
///
/// The result is neither minimized nor interreduced: the last set of the chain is
/// returned exactly as the loop produced it.
pub fn standard_basis(g0: &IdealBasis) -> StandardBasis {
    let mut current = g0.clone();
    let mut chain = vec![current.clone()];
    let mut origins = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = (0..current.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = queue.pop_front() {
        let gens = current.generators();
        let s = s_polynomial(&gens[i], &gens[j]).expect("validated basis");
        if s.is_zero() {
            continue;
        }
        let (h, _) = mora_reduce(&s, gens, None);
        if h.is_zero() {
            continue;
        }
        let k = current.len();
        current.push(h);
        origins.push((i, j));
        queue.extend((0..k).map(|i| (i, k)));
        chain.push(current.clone());
    }
    StandardBasis {
        basis: current,
        chain,
        origins,
    }
}
