//! Numerical semigroups and their gap/conductor invariants.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A cofinite additive submonoid of the non-negative integers, minimally
/// generated by `min_generators`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    min_generators: Vec<u64>,
    gaps: Vec<u64>,
    conductor: u64,
    delta: u64,
    multiplicity: u64,
    // membership sieve through conductor + 2 * max(gens); everything at or
    // beyond the conductor is a member anyway
    table: Vec<bool>,
}

impl NumericalSemigroup {
    /// Build from any generating set; generators are reduced to the minimal
    /// ones. Fails unless the gcd of the generators is 1.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.iter().any(|&g| g == 0) {
            return Err(Error::InvalidInput("generators must be positive"));
        }
        let mut g = 0u64;
        for &x in gens {
            g = num_integer::gcd(g, x);
        }
        if g != 1 {
            return Err(Error::NotNumerical);
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let multiplicity = sorted[0];
        let max_gen = *sorted.last().unwrap();

        // sieve until a run of `multiplicity` consecutive members appears;
        // from the start of such a run onward everything is a member
        let mut bound = (2 * max_gen + 2) as usize;
        let (table, run_start) = loop {
            let mut table = vec![false; bound];
            table[0] = true;
            for i in 1..bound {
                table[i] = sorted
                    .iter()
                    .take_while(|&&gg| gg as usize <= i)
                    .any(|&gg| table[i - gg as usize]);
            }
            let mut run = 0usize;
            let mut found = None;
            for (i, &m) in table.iter().enumerate() {
                run = if m { run + 1 } else { 0 };
                if run == multiplicity as usize {
                    found = Some(i + 1 - run);
                    break;
                }
            }
            match found {
                Some(s) => break (table, s),
                None => bound *= 2,
            }
        };

        let gaps: Vec<u64> = (0..run_start).filter(|&i| !table[i]).map(|i| i as u64).collect();
        let conductor = gaps.last().map_or(0, |&f| f + 1);
        let delta = gaps.len() as u64;

        // extend the sieve to the documented bound so membership queries
        // below the conductor never re-sieve
        let full = (conductor + 2 * max_gen + 1) as usize;
        let mut table = table;
        if table.len() < full {
            let old = table.len();
            table.resize(full, false);
            for i in old..full {
                table[i] = i as u64 >= conductor
                    || sorted.iter().any(|&gg| gg as usize <= i && table[i - gg as usize]);
            }
        }

        // a generator is redundant exactly when it splits as a sum of two
        // nonzero members
        let min_generators: Vec<u64> = sorted
            .iter()
            .copied()
            .filter(|&gen| {
                !(1..gen).any(|a| {
                    table[a as usize] && table[(gen - a) as usize]
                })
            })
            .collect();

        Ok(NumericalSemigroup {
            min_generators,
            gaps,
            conductor,
            delta,
            multiplicity,
            table,
        })
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Least element `c` with `c + n` a member for every `n >= 0`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn contains(&self, n: u64) -> bool {
        if n >= self.conductor {
            return true;
        }
        self.table[n as usize]
    }

    /// Signed-input convenience; negative integers are never members.
    pub fn contains_i64(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    /// Members in `[0, bound)`, sorted.
    pub fn elements_upto(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }
}
