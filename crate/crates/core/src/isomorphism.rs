//! Isomorphism search between spread- and star-based designs.
//!
//! The spread search fixes one spanning choice of flats and bases in the first
//! design (giving `C_{x,B}`, which sends that basis to `F_1, ..., F_n`), then
//! walks every way of sending the canonical basis into the second design:
//! spanning subsets of flats, an ordered basis of each chosen flat, and an
//! assignment of chosen flats to blocks. A candidate `C_{B,y} * C_{x,B}` is an
//! isomorphism-establishing collineation (IEC) when it carries every flat of
//! the first design onto a flat of the second.
//!
//! Iteration order, and therefore the "first" IEC, is fixed: subsets in
//! lexicographic index order, then bases in [`FlatBases`] order (first chosen
//! flat outermost), then block assignments in lexicographic order.
//!
//! Stars are reduced to spreads by moving the nucleus onto the trailing basic
//! factors; IECs of the reduced spreads are lifted block-diagonally (identity
//! on the nucleus coordinates) and conjugated back.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::collineation::{collineation_from_basis_map, compose, Collineation};
use crate::error::{Error, Result};
use crate::geometry::{Defect, Flat, Spread, Star, StarParams};
use crate::gf2::{point_count, EchelonBasis, Gf2Matrix, Point};
use crate::signature::{check_spread_equivalence, check_star_equivalence};

/// Receives the percentage of the outer search loop completed.
pub type ProgressFn = Arc<dyn Fn(f64) + Send + Sync>;

#[derive(Clone)]
pub struct SearchOptions {
    /// Enumerate every IEC instead of stopping at the first.
    pub find_all: bool,
    /// Spread the outer loop over the rayon thread pool.
    pub parallel: bool,
    pub progress: Option<ProgressFn>,
}

impl SearchOptions {
    pub fn find_all() -> Self {
        Self {
            find_all: true,
            parallel: false,
            progress: None,
        }
    }

    pub fn find_first() -> Self {
        Self {
            find_all: false,
            ..Self::find_all()
        }
    }

    pub fn parallel(mut self, yes: bool) -> Self {
        self.parallel = yes;
        self
    }

    pub fn with_progress(mut self, f: impl Fn(f64) + Send + Sync + 'static) -> Self {
        self.progress = Some(Arc::new(f));
        self
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self::find_all()
    }
}

impl fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchOptions")
            .field("find_all", &self.find_all)
            .field("parallel", &self.parallel)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Spanning subsets of the second design visited.
    pub subsets: u64,
    /// Candidate collineations examined.
    pub candidates: u64,
    /// Full signature comparisons performed on accepted candidates.
    pub equivalence_checks: u64,
    /// Accepted candidates before deduplication.
    pub raw_accepted: u64,
}

/// The two designs cannot be isomorphic because their parameters differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mismatch {
    Spread { left: (usize, usize), right: (usize, usize) },
    Star { left: StarParams, right: StarParams },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Spread { .. } => f.write_str("spreads are not of same dimension"),
            Mismatch::Star { .. } => f.write_str("stars are not of same dimension"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IsoResult {
    pub result: bool,
    /// Distinct IECs in search order; empty iff `result` is false.
    pub iecs: Vec<Collineation>,
    pub stats: SearchStats,
    pub mismatch: Option<Mismatch>,
}

impl IsoResult {
    fn mismatch(m: Mismatch) -> Self {
        Self {
            result: false,
            iecs: Vec::new(),
            stats: SearchStats::default(),
            mismatch: Some(m),
        }
    }
}

/// Sorted index tuples of `l0` flats whose union spans `P_n`.
pub fn enumerate_spanning_subsets(
    d: &Spread,
    l0: usize,
) -> Result<impl Iterator<Item = Vec<usize>> + '_> {
    if l0 == 0 || l0 * d.t() != d.n() {
        return Err(Error::BadSubsetSize {
            l0,
            t: d.t(),
            n: d.n(),
        });
    }
    let bases: Vec<Vec<Point>> = d.flats().iter().map(Flat::basis).collect();
    let n = d.n();
    Ok((0..d.mu()).combinations(l0).filter(move |subset| {
        let mut echelon = EchelonBasis::new();
        for &i in subset {
            for p in &bases[i] {
                echelon.insert(p.bits());
            }
        }
        echelon.rank() == n
    }))
}

/// All ordered bases of a flat, lexicographic in the flat's Yates order.
#[derive(Debug, Clone)]
pub struct FlatBases<'a> {
    points: &'a [Point],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> FlatBases<'a> {
    pub fn new(flat: &'a Flat) -> Self {
        let mut it = Self {
            points: flat.points(),
            idx: vec![0; flat.t()],
            done: false,
        };
        it.done = !it.fill_from(0);
        it
    }

    fn prefix_echelon(&self, level: usize) -> EchelonBasis {
        let mut e = EchelonBasis::new();
        for &i in &self.idx[..level] {
            e.insert(self.points[i].bits());
        }
        e
    }

    fn next_independent(&self, level: usize, start: usize) -> Option<usize> {
        let e = self.prefix_echelon(level);
        (start..self.points.len()).find(|&j| !e.contains(self.points[j].bits()))
    }

    fn fill_from(&mut self, level: usize) -> bool {
        for l in level..self.idx.len() {
            match self.next_independent(l, 0) {
                Some(j) => self.idx[l] = j,
                None => return false,
            }
        }
        true
    }
}

impl Iterator for FlatBases<'_> {
    type Item = Vec<Point>;

    fn next(&mut self) -> Option<Vec<Point>> {
        if self.done {
            return None;
        }
        let current = self.idx.iter().map(|&i| self.points[i]).collect();
        self.done = true;
        for level in (0..self.idx.len()).rev() {
            if let Some(j) = self.next_independent(level, self.idx[level] + 1) {
                self.idx[level] = j;
                if self.fill_from(level + 1) {
                    self.done = false;
                    break;
                }
            }
        }
        Some(current)
    }
}

pub fn enumerate_flat_bases(f: &Flat) -> FlatBases<'_> {
    FlatBases::new(f)
}

/// Precomputed state for one spread search.
struct SpreadSearch<'a> {
    d1: &'a Spread,
    d2: &'a Spread,
    t: usize,
    cxb: Collineation,
    /// Basis of each flat of `C_{x,B}(d1)`, packed.
    d1_bases: Vec<Vec<u32>>,
    /// Flat index of every point of `d2`, indexed by Yates index.
    d2_flat_of: Vec<u32>,
    subsets: Vec<Vec<usize>>,
    candidates: AtomicU64,
    checks: AtomicU64,
    done: AtomicUsize,
}

impl<'a> SpreadSearch<'a> {
    fn new(d1: &'a Spread, d2: &'a Spread) -> Result<Self> {
        let n = d1.n();
        let t = d1.t();
        let l0 = n / t;
        let first = enumerate_spanning_subsets(d1, l0)?
            .next()
            .expect("every spread has a spanning subset");
        let x: Vec<Point> = first
            .iter()
            .flat_map(|&i| {
                FlatBases::new(&d1.flats()[i])
                    .next()
                    .expect("flats have a basis")
            })
            .collect();
        let canonical: Vec<Point> = (0..n).map(|i| Point::from_raw(1 << i, n)).collect();
        let cxb = collineation_from_basis_map(&x, &canonical)?;
        let d1_bases = d1
            .flats()
            .iter()
            .map(|f| f.basis().iter().map(|p| cxb.apply_bits(p.bits())).collect())
            .collect();
        let mut d2_flat_of = vec![u32::MAX; point_count(n) + 1];
        for (k, f) in d2.flats().iter().enumerate() {
            for p in f.points() {
                d2_flat_of[p.bits() as usize] = k as u32;
            }
        }
        let subsets = enumerate_spanning_subsets(d2, l0)?.collect();
        Ok(Self {
            d1,
            d2,
            t,
            cxb,
            d1_bases,
            d2_flat_of,
            subsets,
            candidates: AtomicU64::new(0),
            checks: AtomicU64::new(0),
            done: AtomicUsize::new(0),
        })
    }

    /// Does `C_{B,y}` (columns `y`) carry every flat of `C_{x,B}(d1)` onto a flat of `d2`?
    #[inline]
    fn maps_onto(&self, y: &[u32]) -> bool {
        let image = |v: u32| {
            let mut out = 0;
            let mut v = v;
            while v != 0 {
                out ^= y[v.trailing_zeros() as usize];
                v &= v - 1;
            }
            out
        };
        self.d1_bases.iter().all(|basis| {
            let target = self.d2_flat_of[image(basis[0]) as usize];
            basis[1..]
                .iter()
                .all(|&b| self.d2_flat_of[image(b) as usize] == target)
        })
    }

    /// Builds and re-verifies the IEC for accepted columns `y`.
    fn accept(&self, y: &[u32]) -> Option<Collineation> {
        let n = self.d1.n();
        let images: Vec<Point> = y.iter().map(|&b| Point::from_raw(b, n)).collect();
        let cby = Collineation::from_images(&images).ok()?;
        let c = compose(&cby, &self.cxb).ok()?;
        self.checks.fetch_add(1, Ordering::Relaxed);
        let image = c.apply_spread(self.d1).ok()?;
        debug_assert!(check_spread_equivalence(&image, self.d2));
        check_spread_equivalence(&image, self.d2).then_some(c)
    }

    /// Runs every candidate from one spanning subset of `d2`.
    fn run_subset(&self, subset: &[usize], first_only: bool) -> Vec<Collineation> {
        let flats: Vec<&Flat> = subset.iter().map(|&i| &self.d2.flats()[i]).collect();
        let l0 = flats.len();
        let mut walk = SubsetWalk {
            search: self,
            perms: (0..l0).permutations(l0).collect(),
            flats,
            chosen: Vec::with_capacity(l0),
            y: vec![0; self.d1.n()],
            examined: 0,
            found: Vec::new(),
            first_only,
        };
        let _ = walk.descend();
        self.candidates.fetch_add(walk.examined, Ordering::Relaxed);
        walk.found
    }

    fn report(&self, opts: &SearchOptions) {
        let done = self.done.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(cb) = &opts.progress {
            cb(100.0 * done as f64 / self.subsets.len() as f64);
        }
    }

    fn run(&self, opts: &SearchOptions) -> Vec<Collineation> {
        let first_only = !opts.find_all;
        let task = |s: &Vec<usize>| {
            let found = self.run_subset(s, first_only);
            self.report(opts);
            found
        };
        match (opts.parallel, first_only) {
            (false, false) => self.subsets.iter().flat_map(task).collect(),
            (false, true) => self
                .subsets
                .iter()
                .map(task)
                .find(|f| !f.is_empty())
                .unwrap_or_default(),
            (true, false) => self
                .subsets
                .par_iter()
                .map(task)
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect(),
            // the earliest subset with a hit wins, whichever worker finishes first
            (true, true) => self
                .subsets
                .par_iter()
                .map(task)
                .find_first(|f| !f.is_empty())
                .unwrap_or_default(),
        }
    }

    fn stats(&self, raw_accepted: usize) -> SearchStats {
        SearchStats {
            subsets: self.done.load(Ordering::Relaxed) as u64,
            candidates: self.candidates.load(Ordering::Relaxed),
            equivalence_checks: self.checks.load(Ordering::Relaxed),
            raw_accepted: raw_accepted as u64,
        }
    }
}

/// Depth-first walk over one basis per chosen flat, then every block assignment.
struct SubsetWalk<'s, 'a> {
    search: &'s SpreadSearch<'a>,
    flats: Vec<&'a Flat>,
    perms: Vec<Vec<usize>>,
    chosen: Vec<Vec<u32>>,
    y: Vec<u32>,
    examined: u64,
    found: Vec<Collineation>,
    first_only: bool,
}

impl SubsetWalk<'_, '_> {
    fn descend(&mut self) -> ControlFlow<()> {
        let level = self.chosen.len();
        if level == self.flats.len() {
            return self.assign();
        }
        for basis in FlatBases::new(self.flats[level]) {
            self.chosen.push(basis.iter().map(|p| p.bits()).collect());
            let flow = self.descend();
            self.chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn assign(&mut self) -> ControlFlow<()> {
        let t = self.search.t;
        for sigma in &self.perms {
            self.examined += 1;
            for (block, &src) in sigma.iter().enumerate() {
                self.y[block * t..(block + 1) * t].copy_from_slice(&self.chosen[src]);
            }
            if self.search.maps_onto(&self.y) {
                if let Some(c) = self.search.accept(&self.y) {
                    self.found.push(c);
                    if self.first_only {
                        return ControlFlow::Break(());
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }
}

fn dedup_in_order(iecs: Vec<Collineation>) -> Vec<Collineation> {
    let mut seen = HashSet::new();
    iecs.into_iter().filter(|c| seen.insert(c.clone())).collect()
}

/// Searches for collineations `C` with `C(d1)` equivalent to `d2`.
pub fn check_spread_isomorphism(d1: &Spread, d2: &Spread, opts: &SearchOptions) -> Result<IsoResult> {
    if (d1.n(), d1.t()) != (d2.n(), d2.t()) {
        return Ok(IsoResult::mismatch(Mismatch::Spread {
            left: (d1.n(), d1.t()),
            right: (d2.n(), d2.t()),
        }));
    }
    let search = SpreadSearch::new(d1, d2)?;
    let raw = search.run(opts);
    let raw_len = raw.len();
    let iecs = dedup_in_order(raw);
    Ok(IsoResult {
        result: !iecs.is_empty(),
        iecs,
        stats: search.stats(raw_len),
        mismatch: None,
    })
}

/// A star `psi x pi` split into its spread and the relabelling that isolates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    /// `((t - t0) - 1)`-spread of `P_{n-t0}`.
    pub spread: Spread,
    /// Sends the nucleus basis onto `F_{n-t0+1}, ..., F_n`.
    pub collineation: Collineation,
    pub nucleus: Flat,
    pub nucleus_basis: Vec<Point>,
}

/// Basic factors completing `nucleus_basis` to a basis of `P_n`.
///
/// The nucleus basis is reduced with the highest coordinate as pivot; the
/// remaining basic factors are returned in descending letter order.
fn complement_factors(nucleus_basis: &[Point], n: usize) -> Vec<Point> {
    let mut echelon = EchelonBasis::new();
    for p in nucleus_basis {
        echelon.insert(p.bits());
    }
    let pivots = echelon.pivots();
    (0..n)
        .rev()
        .filter(|i| (pivots >> i) & 1 == 0)
        .map(|i| Point::from_raw(1 << i, n))
        .collect()
}

pub fn star_to_spread(s: &Star) -> Result<StarDecomposition> {
    if !s.is_covering() {
        return Err(Error::InvalidStar(Defect::NotCovering));
    }
    let n = s.n();
    let t0 = s.t0();
    let reduced_n = n - t0;
    let nucleus_basis = s.nucleus().basis();
    let mut sources = complement_factors(&nucleus_basis, n);
    sources.extend_from_slice(&nucleus_basis);
    let canonical: Vec<Point> = (0..n).map(|i| Point::from_raw(1 << i, n)).collect();
    let collineation = collineation_from_basis_map(&sources, &canonical)?;

    let sets = s
        .rays()
        .iter()
        .map(|ray| {
            ray.points()
                .iter()
                .map(|p| collineation.apply_bits(p.bits()))
                .filter(|b| b >> reduced_n == 0)
                .map(|b| Point::from_raw(b, reduced_n))
                .collect()
        })
        .collect();
    let spread = Spread::from_sets(reduced_n, s.t() - t0, sets)?;
    Ok(StarDecomposition {
        spread,
        collineation,
        nucleus: s.nucleus().clone(),
        nucleus_basis,
    })
}

/// Embeds a collineation of `P_{n-t0}` into `P_n`, fixing the trailing factors.
pub fn lift_collineation(c: &Collineation, n: usize) -> Result<Collineation> {
    let m = c.n();
    if m > n {
        return Err(Error::DimensionMismatch { expected: n, found: m });
    }
    let mut rows = c.matrix().packed_rows().to_vec();
    rows.extend((m..n).map(|r| 1u32 << r));
    Collineation::new(Gf2Matrix::from_packed_rows(rows, n)?)
}

pub fn check_star_isomorphism(s1: &Star, s2: &Star, opts: &SearchOptions) -> Result<IsoResult> {
    if s1.params() != s2.params() {
        return Ok(IsoResult::mismatch(Mismatch::Star {
            left: s1.params(),
            right: s2.params(),
        }));
    }
    let dec1 = star_to_spread(s1)?;
    let dec2 = star_to_spread(s2)?;
    let reduced = check_spread_isomorphism(&dec1.spread, &dec2.spread, opts)?;
    let back = dec2.collineation.inverse();
    let mut stats = reduced.stats;
    let mut iecs = Vec::with_capacity(reduced.iecs.len());
    for c in &reduced.iecs {
        let lifted = lift_collineation(c, s1.n())?;
        let full = compose(&back, &compose(&lifted, &dec1.collineation)?)?;
        stats.equivalence_checks += 1;
        if check_star_equivalence(&full.apply_star(s1)?, s2) {
            iecs.push(full);
        }
    }
    let iecs = dedup_in_order(iecs);
    Ok(IsoResult {
        result: !iecs.is_empty(),
        iecs,
        stats,
        mismatch: None,
    })
}
