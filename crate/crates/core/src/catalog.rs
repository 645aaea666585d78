//! Random-relabelling catalog search and the V-criterion ranking.
//!
//! Permutation `k` of a search is drawn by a Fisher-Yates shuffle (rand's
//! `SliceRandom::shuffle`) driven by `ChaCha8Rng` seeded with `rng_seed` on
//! stream `k`, so each draw is reproducible on its own and results do not
//! depend on thread count.

use std::collections::{BTreeSet, HashSet};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{build_star, check_spread, Design, Spread};
use crate::gf2::{point_count, Point};
use crate::isomorphism::{check_spread_isomorphism, SearchOptions};
use crate::signature::DesignSignature;

pub type Rational = Ratio<i128>;

/// Word length of an effect.
pub fn effect_order(p: Point) -> u32 {
    p.weight()
}

/// Proportion of main effects and two-factor interactions in each set.
pub fn p_values<S: AsRef<[Point]>>(sets: &[S]) -> Result<Vec<Rational>> {
    if sets.is_empty() {
        return Err(Error::EmptyInput);
    }
    sets.iter()
        .map(|s| {
            let s = s.as_ref();
            if s.is_empty() {
                return Err(Error::EmptyInput);
            }
            let low = s.iter().filter(|&&p| effect_order(p) <= 2).count();
            Ok(Rational::new(low as i128, s.len() as i128))
        })
        .collect()
}

/// `sum (p_i - mean p)^2` over the sets.
pub fn v_criterion<S: AsRef<[Point]>>(sets: &[S]) -> Result<Rational> {
    Ok(variance_sum(&p_values(sets)?))
}

fn variance_sum(p: &[Rational]) -> Rational {
    let mean = p.iter().sum::<Rational>() / Rational::from_integer(p.len() as i128);
    p.iter().map(|&x| (x - mean) * (x - mean)).sum()
}

/// The sets the criterion is taken over: flats, or rays minus the nucleus.
pub fn criterion_sets(d: &Design) -> Vec<Vec<Point>> {
    match d {
        Design::Spread(s) => s.flats().iter().map(|f| f.points().to_vec()).collect(),
        Design::Star(s) => s.ray_complements(),
    }
}

/// Rounds a nonnegative rational half-up to two decimals.
pub fn format_decimal(r: Rational) -> String {
    let (num, den) = (*r.numer(), *r.denom());
    let sign = if num < 0 { "-" } else { "" };
    let hundredths = (200 * num.abs() + den) / (2 * den);
    format!("{sign}{}.{:02}", hundredths / 100, hundredths % 100)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedDesign {
    pub design: Design,
    pub v_value: Rational,
    pub p_values: Vec<Rational>,
}

impl RankedDesign {
    pub fn new(design: Design) -> Result<Self> {
        let p_values = p_values(&criterion_sets(&design))?;
        Ok(Self {
            v_value: variance_sum(&p_values),
            p_values,
            design,
        })
    }

    pub fn v_decimal(&self) -> String {
        format_decimal(self.v_value)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// First design found in the class.
    pub representative: RankedDesign,
    pub signature: DesignSignature,
    /// Designs found in the class, the seed included.
    pub found_count: u64,
    /// Member with the smallest V seen.
    pub best: RankedDesign,
    /// Distinct V values among the members seen.
    pub v_values: BTreeSet<Rational>,
    signatures: HashSet<DesignSignature>,
    profile: Vec<Vec<usize>>,
}

impl CatalogEntry {
    fn new(ranked: RankedDesign, found_count: u64) -> Self {
        let signature = ranked.design.signature();
        Self {
            profile: word_length_profile(&ranked.design),
            v_values: BTreeSet::from([ranked.v_value]),
            signatures: HashSet::from([signature.clone()]),
            best: ranked.clone(),
            signature,
            found_count,
            representative: ranked,
        }
    }

    fn absorb(&mut self, ranked: RankedDesign, signature: DesignSignature) {
        self.found_count += 1;
        self.v_values.insert(ranked.v_value);
        self.signatures.insert(signature);
        if ranked.v_value < self.best.v_value {
            self.best = ranked;
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    /// Pairwise non-isomorphic classes, by representative V ascending.
    pub entries: Vec<CatalogEntry>,
    /// Permutations drawn.
    pub permutations: u64,
    /// Permutations that produced a spread.
    pub spread_hits: u64,
}

/// Sorted per-flat counts of effects of each word length.
///
/// Not a collineation invariant; only used to try likely matches first.
fn word_length_profile(d: &Design) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut profile: Vec<Vec<usize>> = d
        .flats()
        .iter()
        .map(|f| {
            let mut counts = vec![0; n + 1];
            for p in f.points() {
                counts[p.weight() as usize] += 1;
            }
            counts
        })
        .collect();
    profile.sort();
    profile
}

/// Relabels every point `p` of `d` as `rho[yates(p) - 1]`.
///
/// The result is a family of point sets that need not be a spread.
pub fn permute_design(d: &Spread, rho: &[Point]) -> Result<Vec<Vec<Point>>> {
    let n = d.n();
    let total = point_count(n);
    if rho.len() != total {
        return Err(Error::NotABijection);
    }
    let mut seen = vec![false; total + 1];
    for p in rho {
        if p.dim() != n || std::mem::replace(&mut seen[p.bits() as usize], true) {
            return Err(Error::NotABijection);
        }
    }
    Ok(d.flats()
        .iter()
        .map(|f| f.points().iter().map(|p| rho[p.bits() as usize - 1]).collect())
        .collect())
}

fn draw_permutation(points: &[Point], rng_seed: u64, k: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(k);
    let mut rho = points.to_vec();
    rho.shuffle(&mut rng);
    rho
}

/// Draws `budget` random relabellings of `seed`, keeps those that are spreads
/// and sorts them into isomorphism classes.
pub fn catalog_search(seed: &Spread, budget: u64, rng_seed: u64) -> Result<Catalog> {
    catalog_search_with(seed, budget, rng_seed, RankedDesign::new)
}

/// As [`catalog_search`] with a custom ranking; entries sort by `v_value`.
pub fn catalog_search_with<F>(seed: &Spread, budget: u64, rng_seed: u64, rank: F) -> Result<Catalog>
where
    F: Fn(Design) -> Result<RankedDesign> + Sync,
{
    let n = seed.n();
    let t = seed.t();
    let points: Vec<Point> = (1..=point_count(n) as u32)
        .map(|b| Point::new(b, n))
        .collect::<Result<_>>()?;

    let hits: Vec<Spread> = (0..budget)
        .into_par_iter()
        .filter_map(|k| {
            let rho = draw_permutation(&points, rng_seed, k);
            let sets = permute_design(seed, &rho).ok()?;
            check_spread(&sets, n, t).ok()?;
            Spread::from_sets(n, t, sets).ok()
        })
        .collect();

    let mut entries = vec![CatalogEntry::new(rank(seed.clone().into())?, 1)];
    let spread_hits = hits.len() as u64;
    for s in hits {
        let signature = s.signature();
        if let Some(e) = entries.iter_mut().find(|e| e.signatures.contains(&signature)) {
            e.absorb(rank(s.into())?, signature);
            continue;
        }
        let design: Design = s.into();
        let profile = word_length_profile(&design);
        let Design::Spread(s) = &design else { unreachable!() };
        let mut order: Vec<usize> = (0..entries.len()).collect();
        order.sort_by_key(|&i| entries[i].profile != profile);
        let mut matched = None;
        for i in order {
            let rep = entries[i].representative.design.as_spread().expect("spread catalog");
            if check_spread_isomorphism(s, rep, &SearchOptions::find_first())?.result {
                matched = Some(i);
                break;
            }
        }
        let ranked = rank(design)?;
        match matched {
            Some(i) => entries[i].absorb(ranked, signature),
            None => entries.push(CatalogEntry::new(ranked, 1)),
        }
    }
    entries.sort_by_key(|e| e.representative.v_value);
    Ok(Catalog {
        entries,
        permutations: budget,
        spread_hits,
    })
}

/// Joins each spread class with a nucleus, giving a catalog of stars.
pub fn star_catalog_from_spreads(entries: &[CatalogEntry], nucleus_basis: &[Point]) -> Result<Vec<CatalogEntry>> {
    entries
        .iter()
        .map(|e| {
            let lift = |r: &RankedDesign| -> Result<RankedDesign> {
                let spread = r.design.as_spread().ok_or(Error::InvalidSpread(crate::geometry::Defect::TooFewSets))?;
                RankedDesign::new(build_star(spread, nucleus_basis)?.into())
            };
            let representative = lift(&e.representative)?;
            let best = lift(&e.best)?;
            let mut entry = CatalogEntry::new(representative, e.found_count);
            entry.v_values.insert(best.v_value);
            if best.v_value < entry.best.v_value {
                entry.best = best;
            }
            Ok(entry)
        })
        .collect()
}
