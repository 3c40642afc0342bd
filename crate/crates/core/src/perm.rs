//! Sheet sets, sheet permutations and constellations.
//!
//! Sheets are the parallel lines of a profile. A finite sheet set carries
//! labels `1..=n`; a periodic sheet set is the set of all integers acted on
//! by permutations that commute with translation by the period `p`. Such a
//! permutation is stored as the images of the residues `0..p-1` and extended
//! by `sigma(j + p) = sigma(j) + p`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A sheet label. Finite sheet sets use `1..=n`; periodic sets use all integers.
pub type Sheet = i64;

/// The label set a permutation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SheetSet {
    /// Sheets `1..=n`.
    Finite(usize),
    /// All integers, with translation symmetry of the given period.
    PeriodicIntegers(usize),
}

impl SheetSet {
    pub fn is_finite(&self) -> bool {
        matches!(self, SheetSet::Finite(_))
    }

    /// Sheet labels of a finite set, in order. Panics on periodic sets.
    pub fn finite_sheets(&self) -> impl Iterator<Item = Sheet> {
        match self {
            SheetSet::Finite(n) => 1..=(*n as Sheet),
            SheetSet::PeriodicIntegers(_) => panic!("periodic sheet set has no finite sheet list"),
        }
    }

    pub fn contains(&self, j: Sheet) -> bool {
        match self {
            SheetSet::Finite(n) => 1 <= j && j <= *n as Sheet,
            SheetSet::PeriodicIntegers(_) => true,
        }
    }
}

impl fmt::Display for SheetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheetSet::Finite(n) => write!(f, "FINITE {n}"),
            SheetSet::PeriodicIntegers(p) => write!(f, "PERIODIC {p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("sheet set mismatch: {0} vs {1}")]
    SheetSetMismatch(SheetSet, SheetSet),
    #[error("empty sheet set")]
    EmptySheetSet,
    #[error("image vector is not a bijection: {0}")]
    NotBijective(String),
    #[error("sheet label {0} out of range for {1}")]
    LabelOutOfRange(Sheet, SheetSet),
    #[error("label {0} repeated in cycle notation")]
    RepeatedLabel(Sheet),
    #[error("constellation needs at least one column")]
    NoColumns,
}

/// A bijection of a sheet set.
///
/// Finite permutations store the full image vector. Periodic permutations
/// store the images of the residues `0..p-1`; the residues of those images
/// mod `p` must themselves form a permutation of the residues, which is
/// necessary and sufficient for the extension to be a bijection of the
/// integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Finite { image: Vec<Sheet> },
    Periodic { period: usize, image0: Vec<Sheet> },
}

fn residue(j: Sheet, p: usize) -> usize {
    j.rem_euclid(p as Sheet) as usize
}

impl Permutation {
    pub fn identity(sheets: SheetSet) -> Self {
        match sheets {
            SheetSet::Finite(n) => Permutation {
                repr: Repr::Finite {
                    image: (1..=n as Sheet).collect(),
                },
            },
            SheetSet::PeriodicIntegers(p) => Permutation {
                repr: Repr::Periodic {
                    period: p,
                    image0: (0..p as Sheet).collect(),
                },
            },
        }
    }

    /// Finite permutation from its image vector: `image[j-1]` is the image of `j`.
    pub fn finite_from_images(image: Vec<Sheet>) -> Result<Self, PermError> {
        let n = image.len();
        if n == 0 {
            return Err(PermError::EmptySheetSet);
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n as Sheet {
                return Err(PermError::LabelOutOfRange(v, SheetSet::Finite(n)));
            }
            if seen[(v - 1) as usize] {
                return Err(PermError::NotBijective(format!("image {v} repeated")));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation {
            repr: Repr::Finite { image },
        })
    }

    /// Finite permutation from disjoint cycles. Labels not mentioned are fixed.
    pub fn finite_from_cycles(n: usize, cycles: &[Vec<Sheet>]) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::EmptySheetSet);
        }
        let mut image: Vec<Sheet> = (1..=n as Sheet).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a < 1 || a > n as Sheet {
                    return Err(PermError::LabelOutOfRange(a, SheetSet::Finite(n)));
                }
                if touched[(a - 1) as usize] {
                    return Err(PermError::RepeatedLabel(a));
                }
                touched[(a - 1) as usize] = true;
                let b = cycle[(k + 1) % cycle.len()];
                image[(a - 1) as usize] = b;
            }
        }
        Permutation::finite_from_images(image)
    }

    /// Periodic permutation from the images of the residues `0..p-1`.
    pub fn periodic_from_images(period: usize, image0: Vec<Sheet>) -> Result<Self, PermError> {
        if period == 0 || image0.len() != period {
            return Err(PermError::NotBijective(format!(
                "expected {period} residue images, got {}",
                image0.len()
            )));
        }
        let mut seen = vec![false; period];
        for &v in &image0 {
            let r = residue(v, period);
            if seen[r] {
                return Err(PermError::NotBijective(format!(
                    "residue {r} hit twice mod {period}"
                )));
            }
            seen[r] = true;
        }
        Ok(Permutation {
            repr: Repr::Periodic { period, image0 },
        })
    }

    pub fn sheet_set(&self) -> SheetSet {
        match &self.repr {
            Repr::Finite { image } => SheetSet::Finite(image.len()),
            Repr::Periodic { period, .. } => SheetSet::PeriodicIntegers(*period),
        }
    }

    pub fn apply(&self, j: Sheet) -> Sheet {
        match &self.repr {
            Repr::Finite { image } => {
                assert!(
                    1 <= j && j <= image.len() as Sheet,
                    "sheet {j} out of range 1..={}",
                    image.len()
                );
                image[(j - 1) as usize]
            }
            Repr::Periodic { period, image0 } => {
                let p = *period as Sheet;
                let r = residue(j, *period);
                // j = r + k*p  =>  sigma(j) = image0[r] + k*p
                let k = (j - r as Sheet) / p;
                image0[r] + k * p
            }
        }
    }

    /// Composition applying `self` first, then `then`: `j -> then(self(j))`.
    pub fn compose(&self, then: &Permutation) -> Result<Permutation, PermError> {
        if self.sheet_set() != then.sheet_set() {
            return Err(PermError::SheetSetMismatch(
                self.sheet_set(),
                then.sheet_set(),
            ));
        }
        Ok(match &self.repr {
            Repr::Finite { image } => Permutation {
                repr: Repr::Finite {
                    image: image.iter().map(|&v| then.apply(v)).collect(),
                },
            },
            Repr::Periodic { period, image0 } => Permutation {
                repr: Repr::Periodic {
                    period: *period,
                    image0: image0.iter().map(|&v| then.apply(v)).collect(),
                },
            },
        })
    }

    pub fn inverse(&self) -> Permutation {
        match &self.repr {
            Repr::Finite { image } => {
                let mut inv = vec![0; image.len()];
                for (j, &v) in image.iter().enumerate() {
                    inv[(v - 1) as usize] = (j + 1) as Sheet;
                }
                Permutation {
                    repr: Repr::Finite { image: inv },
                }
            }
            Repr::Periodic { period, image0 } => {
                let p = *period;
                let mut inv = vec![0; p];
                for (r, &v) in image0.iter().enumerate() {
                    // sigma(r) = v, so sigma^-1(v) = r; shift back to the residue of v.
                    let rv = residue(v, p);
                    inv[rv] = r as Sheet - (v - rv as Sheet);
                }
                Permutation {
                    repr: Repr::Periodic {
                        period: p,
                        image0: inv,
                    },
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.repr {
            Repr::Finite { image } => image
                .iter()
                .enumerate()
                .all(|(j, &v)| v == (j + 1) as Sheet),
            Repr::Periodic { image0, .. } => {
                image0.iter().enumerate().all(|(r, &v)| v == r as Sheet)
            }
        }
    }

    /// Re-express a periodic permutation with a period that is a multiple of
    /// its own. Errors on finite permutations or a non-multiple target.
    pub fn with_period(&self, target: usize) -> Result<Permutation, PermError> {
        match &self.repr {
            Repr::Finite { .. } => Err(PermError::SheetSetMismatch(
                self.sheet_set(),
                SheetSet::PeriodicIntegers(target),
            )),
            Repr::Periodic { period, .. } => {
                if target == 0 || !target.is_multiple_of(*period) {
                    return Err(PermError::SheetSetMismatch(
                        self.sheet_set(),
                        SheetSet::PeriodicIntegers(target),
                    ));
                }
                let image0 = (0..target as Sheet).map(|r| self.apply(r)).collect();
                Permutation::periodic_from_images(target, image0)
            }
        }
    }

    /// Orbit decomposition. Finite: the disjoint cycles, each starting at its
    /// smallest sheet, ordered by that sheet. Periodic: one descriptor per
    /// translation class of orbits, keyed by the residue cycle of the induced
    /// permutation of residues; the class is finite when the net shift over
    /// the residue cycle vanishes and consists of `|shift| / p` bi-infinite
    /// orbits otherwise.
    pub fn cycles(&self) -> Vec<Orbit> {
        match &self.repr {
            Repr::Finite { image } => {
                let n = image.len();
                let mut seen = vec![false; n];
                let mut out = Vec::new();
                for start in 1..=n as Sheet {
                    if seen[(start - 1) as usize] {
                        continue;
                    }
                    let mut cycle = Vec::new();
                    let mut j = start;
                    loop {
                        seen[(j - 1) as usize] = true;
                        cycle.push(j);
                        j = self.apply(j);
                        if j == start {
                            break;
                        }
                    }
                    out.push(Orbit::Cycle { sheets: cycle });
                }
                out
            }
            Repr::Periodic { period, .. } => {
                let p = *period;
                let mut seen = vec![false; p];
                let mut out = Vec::new();
                for start in 0..p {
                    if seen[start] {
                        continue;
                    }
                    let mut residues = Vec::new();
                    let mut j = start as Sheet;
                    loop {
                        let r = residue(j, p);
                        seen[r] = true;
                        residues.push(r as Sheet);
                        j = self.apply(j);
                        if residue(j, p) == start {
                            break;
                        }
                    }
                    // After one lap of the residue cycle the start sheet lands
                    // on itself shifted by a multiple of p.
                    let shift = j - start as Sheet;
                    debug_assert_eq!(shift.rem_euclid(p as Sheet), 0);
                    if shift == 0 {
                        out.push(Orbit::CycleFamily { residues });
                    } else {
                        let orbit_count = (shift.unsigned_abs() as usize) / p;
                        out.push(Orbit::InfiniteFamily {
                            residues,
                            orbit_count,
                        });
                    }
                }
                out
            }
        }
    }
}

/// One entry of a cycle decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orbit {
    /// A finite cycle, listed from its smallest sheet (finite sheet sets).
    Cycle { sheets: Vec<Sheet> },
    /// Periodic: a translation class of finite cycles. Every orbit in the
    /// class has length `residues.len()`; there is one orbit per translate.
    CycleFamily { residues: Vec<Sheet> },
    /// Periodic: a translation class of bi-infinite orbits. `orbit_count`
    /// is the number of distinct orbits in the class.
    InfiniteFamily {
        residues: Vec<Sheet>,
        orbit_count: usize,
    },
}

impl Orbit {
    /// Length of a single orbit in this entry; `None` for bi-infinite orbits.
    pub fn length(&self) -> Option<usize> {
        match self {
            Orbit::Cycle { sheets } => Some(sheets.len()),
            Orbit::CycleFamily { residues } => Some(residues.len()),
            Orbit::InfiniteFamily { .. } => None,
        }
    }
}

/// The tuple of per-column sheet permutations of a profile.
///
/// Column `i` of the profile transitions sheets by `sigmas[i-1]`. All
/// permutations share one sheet set; periodic inputs are normalized to the
/// least common multiple of their periods on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constellation {
    sheets: SheetSet,
    sigmas: Vec<Permutation>,
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(mut a: usize, mut b: usize) -> usize {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    a / gcd(a, b) * b
}

impl Constellation {
    pub fn new(sigmas: Vec<Permutation>) -> Result<Self, PermError> {
        if sigmas.is_empty() {
            return Err(PermError::NoColumns);
        }
        match sigmas[0].sheet_set() {
            SheetSet::Finite(_) => {
                let sheets = sigmas[0].sheet_set();
                for s in &sigmas {
                    if s.sheet_set() != sheets {
                        return Err(PermError::SheetSetMismatch(sheets, s.sheet_set()));
                    }
                }
                Ok(Constellation { sheets, sigmas })
            }
            SheetSet::PeriodicIntegers(_) => {
                let mut p = 1;
                for s in &sigmas {
                    match s.sheet_set() {
                        SheetSet::PeriodicIntegers(q) => p = lcm(p, q),
                        other => {
                            return Err(PermError::SheetSetMismatch(sigmas[0].sheet_set(), other))
                        }
                    }
                }
                let sigmas = sigmas
                    .into_iter()
                    .map(|s| s.with_period(p))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Constellation {
                    sheets: SheetSet::PeriodicIntegers(p),
                    sigmas,
                })
            }
        }
    }

    /// The identity constellation with `q` columns.
    pub fn identity(sheets: SheetSet, q: usize) -> Result<Self, PermError> {
        if q == 0 {
            return Err(PermError::NoColumns);
        }
        Constellation::new(vec![Permutation::identity(sheets); q])
    }

    pub fn sheet_set(&self) -> SheetSet {
        self.sheets
    }

    /// Number of columns (base points).
    pub fn columns(&self) -> usize {
        self.sigmas.len()
    }

    /// Permutation at the 1-based column index.
    pub fn sigma(&self, column: usize) -> &Permutation {
        assert!(
            1 <= column && column <= self.sigmas.len(),
            "column {column} out of range 1..={}",
            self.sigmas.len()
        );
        &self.sigmas[column - 1]
    }

    pub fn sigmas(&self) -> &[Permutation] {
        &self.sigmas
    }

    /// The monodromy around all base points: apply column 1 first, so the
    /// result is `sigma_q o ... o sigma_1`.
    pub fn monodromy_product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.sheets);
        for s in &self.sigmas {
            acc = acc.compose(s).expect("normalized sheet sets");
        }
        acc
    }

    /// Whether the group generated by the columns acts transitively on the
    /// sheet set. Finite: orbit flood fill from sheet 1. Periodic: the
    /// residue graph must be one component and the net shifts around its
    /// cycles must generate the full translation lattice (gcd 1), otherwise
    /// the integers split into several orbits.
    pub fn is_transitive(&self) -> bool {
        match self.sheets {
            SheetSet::Finite(n) => {
                let mut seen = vec![false; n];
                let mut stack = vec![1 as Sheet];
                seen[0] = true;
                let mut count = 1;
                while let Some(j) = stack.pop() {
                    for s in &self.sigmas {
                        let next = s.apply(j);
                        if !seen[(next - 1) as usize] {
                            seen[(next - 1) as usize] = true;
                            count += 1;
                            stack.push(next);
                        }
                    }
                }
                count == n
            }
            SheetSet::PeriodicIntegers(p) => {
                // Potential function on residues: phi[r] is an integer with
                // residue r reachable from sheet 0 at value phi[r]. Every
                // extra connection between reached residues contributes its
                // discrepancy (a multiple of p) to the lattice of shifts
                // fixing a residue.
                let mut phi: Vec<Option<Sheet>> = vec![None; p];
                phi[0] = Some(0);
                let mut stack = vec![0usize];
                let mut shift_gcd: Sheet = 0;
                let inverses: Vec<Permutation> = self.sigmas.iter().map(|s| s.inverse()).collect();
                while let Some(r) = stack.pop() {
                    let at = phi[r].unwrap();
                    for s in self.sigmas.iter().chain(inverses.iter()) {
                        let v = s.apply(at);
                        let rv = residue(v, p);
                        match phi[rv] {
                            None => {
                                phi[rv] = Some(v);
                                stack.push(rv);
                            }
                            Some(known) => {
                                shift_gcd = gcd_i64(shift_gcd, v - known);
                            }
                        }
                    }
                }
                phi.iter().all(|x| x.is_some()) && shift_gcd.unsigned_abs() as usize == p
            }
        }
    }
}

fn gcd_i64(a: Sheet, b: Sheet) -> Sheet {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(images: &[Sheet]) -> Permutation {
        Permutation::finite_from_images(images.to_vec()).unwrap()
    }

    fn per(p: usize, image0: &[Sheet]) -> Permutation {
        Permutation::periodic_from_images(p, image0.to_vec()).unwrap()
    }

    #[test]
    fn compose_identity_is_neutral() {
        let s = fin(&[2, 3, 1]);
        let id = Permutation::identity(SheetSet::Finite(3));
        assert_eq!(id.compose(&s).unwrap(), s);
        assert_eq!(s.compose(&id).unwrap(), s);
    }

    #[test]
    fn compose_involution() {
        let t = fin(&[2, 1]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_shifts_cancel() {
        let up = per(1, &[1]);
        let down = per(1, &[-1]);
        assert!(up.compose(&down).unwrap().is_identity());
        assert!(down.compose(&up).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mismatch() {
        let a = fin(&[2, 1]);
        let b = fin(&[2, 3, 1]);
        assert!(matches!(
            a.compose(&b),
            Err(PermError::SheetSetMismatch(_, _))
        ));
        let c = per(2, &[1, 0]);
        assert!(a.compose(&c).is_err());
    }

    #[test]
    fn compose_applies_left_first() {
        // sigma = (1 2), tau = (2 3): 1 -sigma-> 2 -tau-> 3.
        let sigma = fin(&[2, 1, 3]);
        let tau = fin(&[1, 3, 2]);
        assert_eq!(sigma.compose(&tau).unwrap().apply(1), 3);
    }

    #[test]
    fn inverse_reverses_cycle() {
        let c = Permutation::finite_from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let r = Permutation::finite_from_cycles(3, &[vec![1, 3, 2]]).unwrap();
        assert_eq!(c.inverse(), r);
        let id = Permutation::identity(SheetSet::Finite(4));
        assert_eq!(id.inverse(), id);
    }

    #[test]
    fn inverse_periodic_swap_is_involution() {
        let s = per(2, &[1, 0]);
        assert_eq!(s.inverse(), s);
        // window simulation cross-check
        for j in -6..=6 {
            assert_eq!(s.inverse().apply(s.apply(j)), j);
        }
    }

    #[test]
    fn inverse_periodic_with_drift() {
        let s = per(2, &[-1, 2]);
        let inv = s.inverse();
        for j in -8..=8 {
            assert_eq!(inv.apply(s.apply(j)), j);
            assert_eq!(s.apply(inv.apply(j)), j);
        }
    }

    #[test]
    fn periodic_rejects_residue_collision() {
        assert!(Permutation::periodic_from_images(2, vec![0, 2]).is_err());
        assert!(Permutation::periodic_from_images(2, vec![3, 0]).is_ok());
    }

    #[test]
    fn cycles_of_three_cycle() {
        let c = Permutation::finite_from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(
            c.cycles(),
            vec![Orbit::Cycle {
                sheets: vec![1, 2, 3]
            }]
        );
    }

    #[test]
    fn cycles_of_identity_are_fixed_points() {
        let id = Permutation::identity(SheetSet::Finite(2));
        assert_eq!(
            id.cycles(),
            vec![
                Orbit::Cycle { sheets: vec![1] },
                Orbit::Cycle { sheets: vec![2] }
            ]
        );
    }

    #[test]
    fn cycles_even_down_odd_up() {
        // evens shift down, odds shift up: two bi-infinite orbits
        let s = per(2, &[-2, 3]);
        let orbits = s.cycles();
        assert_eq!(
            orbits,
            vec![
                Orbit::InfiniteFamily {
                    residues: vec![0],
                    orbit_count: 1
                },
                Orbit::InfiniteFamily {
                    residues: vec![1],
                    orbit_count: 1
                }
            ]
        );
    }

    #[test]
    fn cycle_family_covers_translates() {
        // pairwise swap {2k, 2k+1}: one translation class of 2-cycles
        let s = per(2, &[1, 0]);
        assert_eq!(
            s.cycles(),
            vec![Orbit::CycleFamily {
                residues: vec![0, 1]
            }]
        );
    }

    #[test]
    fn multi_orbit_infinite_class() {
        // p=1, shift by +3: three distinct bi-infinite orbits mod 3
        let s = per(1, &[3]);
        assert_eq!(
            s.cycles(),
            vec![Orbit::InfiniteFamily {
                residues: vec![0],
                orbit_count: 3
            }]
        );
    }

    #[test]
    fn monodromy_of_four_transpositions_is_identity() {
        let t = fin(&[2, 1]);
        let c = Constellation::new(vec![t.clone(), t.clone(), t.clone(), t]).unwrap();
        assert!(c.monodromy_product().is_identity());
    }

    #[test]
    fn monodromy_of_two_three_cycles() {
        let c3 = Permutation::finite_from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let c = Constellation::new(vec![c3.clone(), c3]).unwrap();
        let prod = c.monodromy_product();
        assert_eq!(prod.apply(1), 3);
        assert_eq!(prod.apply(2), 1);
        assert_eq!(prod.apply(3), 2);
    }

    fn arcsin() -> Constellation {
        Constellation::new(vec![per(2, &[1, 0]), per(2, &[-1, 2]), per(2, &[-2, 3])]).unwrap()
    }

    #[test]
    fn arcsin_monodromy_is_identity() {
        let prod = arcsin().monodromy_product();
        assert!(prod.is_identity());
        for j in -8..=8 {
            assert_eq!(prod.apply(j), j);
        }
    }

    #[test]
    fn with_period_requires_a_multiple() {
        let s = per(2, &[1, 0]);
        assert!(s.with_period(3).is_err());
        assert!(s.with_period(0).is_err());
        let wide = s.with_period(6).unwrap();
        for j in -12..=12 {
            assert_eq!(wide.apply(j), s.apply(j));
        }
    }

    #[test]
    fn constellation_normalizes_periods() {
        let a = per(2, &[1, 0]);
        let b = per(3, &[1, 2, 0]);
        let c = Constellation::new(vec![a.clone(), b.clone()]).unwrap();
        assert_eq!(c.sheet_set(), SheetSet::PeriodicIntegers(6));
        // pointwise agreement with the originals
        for j in -12..=12 {
            assert_eq!(c.sigma(1).apply(j), a.apply(j));
            assert_eq!(c.sigma(2).apply(j), b.apply(j));
        }
    }

    #[test]
    fn transitivity_finite() {
        let t = fin(&[2, 1]);
        let c = Constellation::new(vec![t.clone(), t.clone(), t.clone(), t]).unwrap();
        assert!(c.is_transitive());

        let id2 = Permutation::identity(SheetSet::Finite(2));
        let c = Constellation::new(vec![id2.clone(), id2]).unwrap();
        assert!(!c.is_transitive());

        let a = Permutation::finite_from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::finite_from_cycles(3, &[vec![2, 3]]).unwrap();
        let c = Constellation::new(vec![a, b]).unwrap();
        assert!(c.is_transitive());
    }

    #[test]
    fn transitivity_periodic() {
        assert!(arcsin().is_transitive());
        // identity on periodic integers: every integer is its own orbit
        let c = Constellation::identity(SheetSet::PeriodicIntegers(2), 2).unwrap();
        assert!(!c.is_transitive());
        // shift by 2 with p=1: evens and odds never mix
        let c = Constellation::new(vec![per(1, &[2])]).unwrap();
        assert!(!c.is_transitive());
        // shift by 1 alone is transitive
        let c = Constellation::new(vec![per(1, &[1])]).unwrap();
        assert!(c.is_transitive());
    }
}
