//! Enumeration of semimodules over a numerical semigroup and their
//! generating function.
//!
//! A semimodule here is a subset `D` of the semigroup `S` with
//! `D + S` contained in `D` and finite complement inside `S`. It is stored
//! by that finite complement, which is exactly an order ideal (down-set)
//! of the poset on `S` with `a <= b` iff `b - a` lies in `S`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, LaurentSeries, RationalFn};
use crate::semigroup::NumericalSemigroup;

/// A semimodule of finite codimension, stored by its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiModule {
    complement: Vec<u64>,
    min_generators: Vec<u64>,
}

impl SemiModule {
    /// Elements of the semigroup not in the semimodule, sorted.
    pub fn complement(&self) -> &[u64] {
        &self.complement
    }

    /// Minimal generators: members not reachable as `member + gamma` with
    /// `gamma` a nonzero semigroup element.
    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn codim(&self) -> u64 {
        self.complement.len() as u64
    }

    /// Recompute the complement from the generators alone; used as a
    /// round-trip check.
    pub fn complement_from_generators(s: &NumericalSemigroup, gens: &[u64]) -> Vec<u64> {
        let bound = gens.iter().copied().max().unwrap_or(0) + s.conductor();
        (0..bound)
            .filter(|&x| {
                s.contains(x)
                    && !gens
                        .iter()
                        .any(|&g| g <= x && s.contains_i64(x as i64 - g as i64))
            })
            .collect()
    }
}

/// All semimodules of codimension `l`, complements in lexicographic order.
pub fn enumerate_semimodules(s: &NumericalSemigroup, l: u64) -> Vec<SemiModule> {
    let mut out = Vec::new();
    walk_down_sets(s, l, &mut |complement| {
        out.push(SemiModule {
            complement: complement.to_vec(),
            min_generators: generators_of(s, complement),
        });
    });
    out.sort_by(|a, b| a.complement.cmp(&b.complement));
    out
}

/// Number of semimodules of codimension `l`, without materializing them.
pub fn count_semimodules(s: &NumericalSemigroup, l: u64) -> u64 {
    let mut n = 0u64;
    walk_down_sets(s, l, &mut |_| n += 1);
    n
}

/// Visit every size-`l` down-set of the divisibility poset once.
///
/// The search window `S ∩ [0, c + l*m)` is sufficient: a complement element
/// `u` forces the whole chain `u, u-m, u-2m, ...` (intersected with `S`)
/// into the complement, so elements beyond the window would make it larger
/// than `l`.
fn walk_down_sets(s: &NumericalSemigroup, l: u64, visit: &mut impl FnMut(&[u64])) {
    if l == 0 {
        visit(&[]);
        return;
    }
    let window = s.conductor() + l * s.multiplicity();
    let elems = s.elements_upto(window);
    let n = elems.len();
    if (l as usize) > n {
        return;
    }
    // predecessors of each element inside the window, as indices
    let preds: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..i)
                .filter(|&j| s.contains(elems[i] - elems[j]))
                .collect()
        })
        .collect();
    let mut chosen_idx: Vec<usize> = Vec::with_capacity(l as usize);
    let mut in_set = vec![false; n];
    dfs(&elems, &preds, l as usize, 0, &mut chosen_idx, &mut in_set, visit);
}

fn dfs(
    elems: &[u64],
    preds: &[Vec<usize>],
    l: usize,
    i: usize,
    chosen_idx: &mut Vec<usize>,
    in_set: &mut [bool],
    visit: &mut impl FnMut(&[u64]),
) {
    if chosen_idx.len() == l {
        let complement: Vec<u64> = chosen_idx.iter().map(|&j| elems[j]).collect();
        visit(&complement);
        return;
    }
    if chosen_idx.len() + (elems.len() - i) < l {
        return;
    }
    // include elems[i] when all of its predecessors are already in
    if preds[i].iter().all(|&j| in_set[j]) {
        chosen_idx.push(i);
        in_set[i] = true;
        dfs(elems, preds, l, i + 1, chosen_idx, in_set, visit);
        in_set[i] = false;
        chosen_idx.pop();
    }
    dfs(elems, preds, l, i + 1, chosen_idx, in_set, visit);
}

/// Minimal generators of the semimodule with the given complement.
fn generators_of(s: &NumericalSemigroup, complement: &[u64]) -> Vec<u64> {
    let top = complement.iter().copied().max().unwrap_or(0);
    // beyond this bound g - multiplicity is always a member of the module
    let bound = top.max(s.conductor()) + s.multiplicity() + 1;
    let in_module =
        |x: i64| -> bool { x >= 0 && s.contains(x as u64) && !complement.contains(&(x as u64)) };
    (0..bound)
        .filter(|&g| {
            in_module(g as i64)
                && !(1..=g)
                    .any(|gamma| s.contains(gamma) && in_module(g as i64 - gamma as i64))
        })
        .collect()
}

/// The generating function `I(q) = sum_l #Mod_l q^l` as a truncated series
/// together with its exact rational normal form `f(q)/(1-q)`.
///
/// Coefficients stabilize at codimension `c`, so the counts up to the
/// conductor determine the whole series; `n` must reach past `c`.
pub fn igen(s: &NumericalSemigroup, n: i64) -> Result<(LaurentSeries, RationalFn)> {
    let c = s.conductor() as i64;
    if n <= c {
        return Err(Error::TruncationTooShort);
    }
    let counts: Vec<u64> = (0..=c as u64).map(|l| count_semimodules(s, l)).collect();
    let series_coeffs: Vec<i64> = (0..n)
        .map(|l| counts[(l.min(c)) as usize] as i64)
        .collect();
    let series = LaurentSeries::from_int_coeffs(&series_coeffs, n);
    // f = (1-q) * I : f_0 = 1, f_l = count_l - count_{l-1}
    let mut f = Vec::with_capacity(counts.len());
    f.push(BigInt::from(counts[0]));
    for l in 1..counts.len() {
        f.push(BigInt::from(counts[l]) - BigInt::from(counts[l - 1]));
    }
    let f = IntPoly::new(f);
    let normal_form = RationalFn::new(f, IntPoly::from_i64(&[1, -1]))?;
    Ok((series, normal_form))
}
