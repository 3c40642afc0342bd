//! Desk-scale generation of finite constellations and the theorem
//! cross-checking harness.

use thiserror::Error;

use crate::covering::{backtracking_cover_oracle, find_exact_covering, CoveringError};
use crate::graph::ProfileGraph;
use crate::perm::{Constellation, Permutation, Sheet};

pub const ENUM_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration budget exceeded: (n!)^q = {0} > {1}")]
    BudgetExceeded(u128, u128),
    #[error(transparent)]
    Covering(#[from] CoveringError),
}

/// Post-filters applied while enumerating.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub require_transitive: bool,
    pub require_identity_product: bool,
}

impl EnumFilter {
    pub fn none() -> Self {
        EnumFilter::default()
    }

    fn accepts(&self, c: &Constellation) -> bool {
        (!self.require_identity_product || c.monodromy_product().is_identity())
            && (!self.require_transitive || c.is_transitive())
    }
}

fn factorial(n: usize) -> u128 {
    // saturates so the budget guard stays sound for absurd n
    (1..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

/// All permutations of `1..=n` as image vectors, in lexicographic order.
fn all_permutations(n: usize) -> Vec<Permutation> {
    fn build(n: usize, prefix: &mut Vec<Sheet>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::finite_from_images(prefix.clone()).unwrap());
            return;
        }
        for v in 1..=n as Sheet {
            if !used[(v - 1) as usize] {
                used[(v - 1) as usize] = true;
                prefix.push(v);
                build(n, prefix, used, out);
                prefix.pop();
                used[(v - 1) as usize] = false;
            }
        }
    }
    let mut out = Vec::with_capacity(factorial(n) as usize);
    build(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lexicographic stream of all constellations over `Finite(n)` with `q`
/// columns, subject to the filter. Errors when `(n!)^q` exceeds the budget.
pub fn enumerate_constellations(
    n: usize,
    q: usize,
    filter: EnumFilter,
) -> Result<ConstellationIter, EnumError> {
    assert!(n >= 1 && q >= 1, "n and q must be positive");
    let space = factorial(n).checked_pow(q as u32).unwrap_or(u128::MAX);
    if space > ENUM_BUDGET {
        return Err(EnumError::BudgetExceeded(space, ENUM_BUDGET));
    }
    Ok(ConstellationIter {
        perms: all_permutations(n),
        digits: vec![0; q],
        done: false,
        filter,
    })
}

pub struct ConstellationIter {
    perms: Vec<Permutation>,
    digits: Vec<usize>,
    done: bool,
    filter: EnumFilter,
}

impl Iterator for ConstellationIter {
    type Item = Constellation;

    fn next(&mut self) -> Option<Constellation> {
        while !self.done {
            let sigmas: Vec<Permutation> =
                self.digits.iter().map(|&d| self.perms[d].clone()).collect();
            // advance the odometer, last column fastest
            let mut k = self.digits.len();
            loop {
                if k == 0 {
                    self.done = true;
                    break;
                }
                k -= 1;
                self.digits[k] += 1;
                if self.digits[k] < self.perms.len() {
                    break;
                }
                self.digits[k] = 0;
            }
            let c = Constellation::new(sigmas).unwrap();
            if self.filter.accepts(&c) {
                return Some(c);
            }
        }
        None
    }
}

/// Result of running the theorem experiment over every transitive
/// constellation at the given size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckSummary {
    pub instances: usize,
    pub coverable: usize,
    pub disagreements: Vec<String>,
}

/// For every transitive constellation: the forced-walk decision, the
/// backtracking oracle and the identity-product test must agree, and when a
/// covering exists both routes must produce the same paths.
pub fn cross_check_theorem(n: usize, q: usize) -> Result<CrossCheckSummary, EnumError> {
    let filter = EnumFilter {
        require_transitive: true,
        require_identity_product: false,
    };
    let mut summary = CrossCheckSummary {
        instances: 0,
        coverable: 0,
        disagreements: Vec::new(),
    };
    for c in enumerate_constellations(n, q, filter)? {
        summary.instances += 1;
        let identity = c.monodromy_product().is_identity();
        let profile = ProfileGraph::from_constellation(c.clone());
        let walk = find_exact_covering(&profile);
        let oracle = backtracking_cover_oracle(&profile)?;
        let agree = walk.is_coverable() == identity && oracle.is_some() == identity;
        let same_paths = match (walk.covering(), &oracle) {
            (Some(a), Some(b)) => a == b,
            (None, None) => true,
            _ => false,
        };
        if !agree || !same_paths {
            summary.disagreements.push(format!(
                "{c:?}: walk={}, oracle={}, identity={identity}",
                walk.is_coverable(),
                oracle.is_some()
            ));
        }
        if identity {
            summary.coverable += 1;
        }
    }
    Ok(summary)
}

/// SplitMix64, the documented pseudo-random generator behind
/// `random_constellation`. The stream is part of the external contract so
/// other implementations can replay it.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// A uniform random constellation over `Finite(n)`, deterministic in the
/// seed: each column is drawn by a Fisher-Yates shuffle of `[1..n]` whose
/// swap indices are `next_u64() % (j + 1)` for `j = n-1 .. 1`.
pub fn random_constellation(n: usize, q: usize, seed: u64) -> Constellation {
    assert!(n >= 1 && q >= 1, "n and q must be positive");
    let mut rng = SplitMix64::new(seed);
    let sigmas = (0..q)
        .map(|_| {
            let mut image: Vec<Sheet> = (1..=n as Sheet).collect();
            for j in (1..n).rev() {
                let k = (rng.next_u64() % (j as u64 + 1)) as usize;
                image.swap(j, k);
            }
            Permutation::finite_from_images(image).unwrap()
        })
        .collect();
    Constellation::new(sigmas).unwrap()
}
