//! Flats, spreads and stars of `PG(n - 1, 2)`.
//!
//! # Cyclic construction and letters
//!
//! [`cyclic_spread`] works in `GF(2^n)` built from a primitive polynomial.
//! A field element `a_0 w^0 + a_1 w^1 + ... + a_{n-1} w^{n-1}` becomes the
//! point whose letter `n - i` is set when `a_i = 1`; that is, `a_0` is the
//! *last* letter. With `w^4 + w + 1` this reproduces the familiar 1-spread of
//! `PG(3, 2)` column by column (`w^0 = D`, `w^5 = BC`, `w^10 = BCD`, ...).
//!
//! # Stars
//!
//! [`build_star`] embeds `P_{n-t0}` as the leading `n - t0` coordinates of
//! `P_n` and joins every flat of the given spread with the nucleus.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{check_dim, point_count, rank_of_points, span, EchelonBasis, Point};
use crate::signature::{get_bitstrings, Bitstring, DesignSignature};

/// Why a family of point sets is not a spread or a star.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    /// No sets, or fewer than two rays for a star.
    TooFewSets,
    /// A point has the wrong number of coordinates.
    DimensionMismatch,
    /// A set does not have `2^t - 1` points, or sets differ in size.
    WrongSize,
    /// A set is not closed under addition (not a flat).
    NotClosed,
    /// Two spread flats share a point.
    NotDisjoint,
    /// Some point of the geometry is missed.
    NotCovering,
    /// Rays have no common point.
    EmptyNucleus,
    /// Some pair of rays meets outside the common intersection.
    NotCommonIntersection,
}

impl Defect {
    pub fn code(self) -> &'static str {
        match self {
            Defect::TooFewSets => "too-few-sets",
            Defect::DimensionMismatch => "dimension-mismatch",
            Defect::WrongSize => "wrong-size",
            Defect::NotClosed => "not-closed",
            Defect::NotDisjoint => "not-disjoint",
            Defect::NotCovering => "not-covering",
            Defect::EmptyNucleus => "empty-nucleus",
            Defect::NotCommonIntersection => "not-common-intersection",
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A `(t-1)`-flat: the nonzero points of a `t`-dimensional subspace,
/// kept sorted by Yates index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    n: usize,
    t: usize,
    points: Vec<Point>,
}

impl Flat {
    pub fn from_points(mut points: Vec<Point>) -> Result<Self> {
        let n = points.first().ok_or(Error::EmptyInput)?.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
        points.sort_unstable();
        points.dedup();
        let t = rank_of_points(&points);
        if points.len() != point_count(t) {
            return Err(Error::NotAFlat);
        }
        Ok(Self { n, t, points })
    }

    /// Caller guarantees the points form a sorted flat.
    pub(crate) fn from_sorted_unchecked(n: usize, t: usize, points: Vec<Point>) -> Self {
        debug_assert_eq!(points.len(), point_count(t));
        Self { n, t, points }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vector-space dimension of the flat (a `(t-1)`-flat has `t`).
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn bitstring(&self) -> Bitstring {
        Bitstring::from_points(self.n, &self.points)
    }

    /// First basis in Yates order: greedily keep independent points.
    pub fn basis(&self) -> Vec<Point> {
        let mut echelon = EchelonBasis::new();
        self.points
            .iter()
            .copied()
            .filter(|p| echelon.insert(p.bits()))
            .collect()
    }

    pub fn is_subset(&self, other: &Flat) -> bool {
        self.points.iter().all(|&p| other.contains(p))
    }
}

impl AsRef<[Point]> for Flat {
    fn as_ref(&self) -> &[Point] {
        &self.points
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

pub fn flat_from_basis(basis: &[Point]) -> Result<Flat> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    if rank_of_points(basis) != basis.len() {
        return Err(Error::DependentBasis);
    }
    let n = basis[0].dim();
    Ok(Flat::from_sorted_unchecked(n, basis.len(), span(basis)?))
}

/// Checks one point set: right dimension, right size, closed.
fn check_flat_set(points: &[Point], n: usize, size: usize) -> std::result::Result<(), Defect> {
    if points.iter().any(|p| p.dim() != n) {
        return Err(Defect::DimensionMismatch);
    }
    if points.len() != size {
        return Err(Defect::WrongSize);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    // size distinct points inside a span of that size are the whole span
    if sorted.len() != size || point_count(rank_of_points(&sorted)) != size {
        return Err(Defect::NotClosed);
    }
    Ok(())
}

/// Reason-coded spread check: pairwise disjoint `(t-1)`-flats covering `P_n`.
pub fn check_spread<S: AsRef<[Point]>>(
    sets: &[S],
    n: usize,
    t: usize,
) -> std::result::Result<(), Defect> {
    if sets.is_empty() {
        return Err(Defect::TooFewSets);
    }
    if n == 0 || n > crate::gf2::MAX_DIM || t == 0 || t > n {
        return Err(Defect::DimensionMismatch);
    }
    let size = point_count(t);
    for s in sets {
        check_flat_set(s.as_ref(), n, size)?;
    }
    let mut seen = vec![false; point_count(n) + 1];
    for s in sets {
        for p in s.as_ref() {
            let k = p.bits() as usize;
            if seen[k] {
                return Err(Defect::NotDisjoint);
            }
            seen[k] = true;
        }
    }
    if seen[1..].iter().all(|&b| b) {
        Ok(())
    } else {
        Err(Defect::NotCovering)
    }
}

pub fn is_spread<S: AsRef<[Point]>>(sets: &[S], n: usize, t: usize) -> bool {
    check_spread(sets, n, t).is_ok()
}

/// A `(t-1)`-spread of `PG(n - 1, 2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spread {
    n: usize,
    t: usize,
    flats: Vec<Flat>,
}

impl Spread {
    pub fn new(n: usize, t: usize, flats: Vec<Flat>) -> Result<Self> {
        check_spread(&flats, n, t).map_err(Error::InvalidSpread)?;
        Ok(Self { n, t, flats })
    }

    pub fn from_sets(n: usize, t: usize, sets: Vec<Vec<Point>>) -> Result<Self> {
        check_spread(&sets, n, t).map_err(Error::InvalidSpread)?;
        let flats = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                Flat::from_sorted_unchecked(n, t, s)
            })
            .collect();
        Ok(Self { n, t, flats })
    }

    /// Parses flats written as effect labels, e.g. `[["D", "BC", "BCD"], ...]`.
    pub fn from_labels<S: AsRef<str>>(n: usize, t: usize, flats: &[Vec<S>]) -> Result<Self> {
        let sets = flats
            .iter()
            .map(|f| f.iter().map(|l| Point::parse(l.as_ref(), n)).collect())
            .collect::<Result<Vec<Vec<Point>>>>()?;
        Self::from_sets(n, t, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of flats, `(2^n - 1)/(2^t - 1)`.
    pub fn mu(&self) -> usize {
        self.flats.len()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn signature(&self) -> DesignSignature {
        get_bitstrings(self.n, &self.flats)
    }
}

impl fmt::Debug for Spread {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spread(n={}, t={}, {:?})", self.n, self.t, self.flats)
    }
}

/// Reason-coded star check. On success returns the nucleus.
///
/// With `require_cover` unset, a family of rays sharing a common nucleus but
/// not covering `P_n` is accepted (a partial star).
pub fn check_star_with<S: AsRef<[Point]>>(
    sets: &[S],
    n: usize,
    require_cover: bool,
) -> std::result::Result<Flat, Defect> {
    if sets.len() < 2 {
        return Err(Defect::TooFewSets);
    }
    if n == 0 || n > crate::gf2::MAX_DIM {
        return Err(Defect::DimensionMismatch);
    }
    let size = sets[0].as_ref().len();
    if size == 0 || !(size + 1).is_power_of_two() {
        return Err(Defect::WrongSize);
    }
    for s in sets {
        check_flat_set(s.as_ref(), n, size)?;
    }
    let bits: Vec<Bitstring> = sets
        .iter()
        .map(|s| Bitstring::from_points(n, s.as_ref()))
        .collect();
    let common = bits[1..].iter().fold(bits[0].clone(), |acc, b| acc.and(b));
    if common.is_empty() {
        return Err(Defect::EmptyNucleus);
    }
    // pairwise intersections equal the common part iff the rays minus it are disjoint
    let mut union = common.clone();
    let mut total = common.count_ones();
    for b in &bits {
        total += b.count_ones() - common.count_ones();
        union.or_assign(b);
    }
    if union.count_ones() != total {
        return Err(Defect::NotCommonIntersection);
    }
    if require_cover && !union.is_full() {
        return Err(Defect::NotCovering);
    }
    let nucleus_points: Vec<Point> = common
        .positions()
        .map(|k| Point::from_raw(k as u32, n))
        .collect();
    Flat::from_points(nucleus_points).map_err(|_| Defect::NotClosed)
}

pub fn check_star<S: AsRef<[Point]>>(sets: &[S], n: usize) -> std::result::Result<Flat, Defect> {
    check_star_with(sets, n, true)
}

/// `(true, nucleus)` for a covering star, `(false, None)` otherwise.
pub fn is_star<S: AsRef<[Point]>>(sets: &[S], n: usize) -> (bool, Option<Flat>) {
    match check_star(sets, n) {
        Ok(nucleus) => (true, Some(nucleus)),
        Err(_) => (false, None),
    }
}

/// Intersection of all the given flats.
pub fn nucleus_of(rays: &[Flat]) -> Result<Flat> {
    if rays.len() < 2 {
        return Err(Error::EmptyInput);
    }
    let n = rays[0].n();
    if let Some(r) = rays.iter().find(|r| r.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: r.n(),
        });
    }
    let common: Vec<Point> = rays[0]
        .points()
        .iter()
        .copied()
        .filter(|&p| rays[1..].iter().all(|r| r.contains(p)))
        .collect();
    if common.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    Flat::from_points(common)
}

/// `(n, mu, t, t0)` of a star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarParams {
    pub n: usize,
    pub mu: usize,
    pub t: usize,
    pub t0: usize,
}

impl fmt::Display for StarParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "St({}, {}, {}, {})", self.n, self.mu, self.t, self.t0)
    }
}

/// A balanced star `St(n, mu, t, t0)`: rays meeting pairwise in the nucleus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Star {
    n: usize,
    rays: Vec<Flat>,
    nucleus: Flat,
    covering: bool,
}

impl Star {
    /// A covering star.
    pub fn new(n: usize, rays: Vec<Flat>) -> Result<Self> {
        let nucleus = check_star(&rays, n).map_err(Error::InvalidStar)?;
        Ok(Self {
            n,
            rays,
            nucleus,
            covering: true,
        })
    }

    /// Rays with a common pairwise intersection that need not cover `P_n`.
    /// Such a family can be compared by parameters but not searched for isomorphisms.
    pub fn partial(n: usize, rays: Vec<Flat>) -> Result<Self> {
        let nucleus = check_star_with(&rays, n, false).map_err(Error::InvalidStar)?;
        let covering = check_star(&rays, n).is_ok();
        Ok(Self {
            n,
            rays,
            nucleus,
            covering,
        })
    }

    /// Degenerate one-ray star. A single ray has no pairwise intersections to
    /// recover the nucleus from, so it is given explicitly.
    pub fn single_ray(n: usize, ray: Flat, nucleus: Flat) -> Result<Self> {
        if ray.n() != n || nucleus.n() != n {
            return Err(Error::InvalidStar(Defect::DimensionMismatch));
        }
        if ray.len() != point_count(n) {
            return Err(Error::InvalidStar(Defect::NotCovering));
        }
        if nucleus.t() >= ray.t() {
            return Err(Error::InvalidStar(Defect::WrongSize));
        }
        Ok(Self {
            n,
            rays: vec![ray],
            nucleus,
            covering: true,
        })
    }

    pub fn from_sets(n: usize, sets: Vec<Vec<Point>>) -> Result<Self> {
        let rays = sets
            .into_iter()
            .map(Flat::from_points)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::InvalidStar(Defect::NotClosed))?;
        Self::new(n, rays)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.rays[0].t()
    }

    pub fn t0(&self) -> usize {
        self.nucleus.t()
    }

    pub fn mu(&self) -> usize {
        self.rays.len()
    }

    pub fn params(&self) -> StarParams {
        StarParams {
            n: self.n,
            mu: self.mu(),
            t: self.t(),
            t0: self.t0(),
        }
    }

    pub fn rays(&self) -> &[Flat] {
        &self.rays
    }

    pub fn nucleus(&self) -> &Flat {
        &self.nucleus
    }

    pub fn is_covering(&self) -> bool {
        self.covering
    }

    pub fn signature(&self) -> DesignSignature {
        get_bitstrings(self.n, &self.rays)
    }

    /// Each ray with the nucleus removed.
    pub fn ray_complements(&self) -> Vec<Vec<Point>> {
        self.rays
            .iter()
            .map(|r| {
                r.points()
                    .iter()
                    .copied()
                    .filter(|&p| !self.nucleus.contains(p))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Star({}, rays={:?}, nucleus={:?})",
            self.params(),
            self.rays,
            self.nucleus
        )
    }
}

/// Joins every flat of `psi` (over `P_{n-t0}`) with the nucleus spanned by
/// `nucleus_basis` (points of `P_n`).
pub fn build_star(psi: &Spread, nucleus_basis: &[Point]) -> Result<Star> {
    if nucleus_basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = psi.n() + nucleus_basis.len();
    check_dim(n)?;
    if let Some(p) = nucleus_basis.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.dim(),
        });
    }
    if rank_of_points(nucleus_basis) != nucleus_basis.len() {
        return Err(Error::DependentBasis);
    }
    let mut echelon = EchelonBasis::new();
    for i in 0..psi.n() {
        echelon.insert(1 << i);
    }
    for p in nucleus_basis {
        if !echelon.insert(p.bits()) {
            return Err(Error::NucleusMeetsSubspace);
        }
    }
    let nucleus = flat_from_basis(nucleus_basis)?;
    let rays = psi
        .flats()
        .iter()
        .map(|f| {
            let mut gens = f
                .basis()
                .into_iter()
                .map(|p| p.extend(n))
                .collect::<Result<Vec<_>>>()?;
            gens.extend_from_slice(nucleus_basis);
            flat_from_basis(&gens)
        })
        .collect::<Result<Vec<_>>>()?;
    if rays.len() == 1 {
        return Star::single_ray(n, rays.into_iter().next().unwrap(), nucleus);
    }
    Star::new(n, rays)
}

/// Either kind of design.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Design {
    Spread(Spread),
    Star(Star),
}

impl Design {
    pub fn n(&self) -> usize {
        match self {
            Design::Spread(s) => s.n(),
            Design::Star(s) => s.n(),
        }
    }

    pub fn flats(&self) -> &[Flat] {
        match self {
            Design::Spread(s) => s.flats(),
            Design::Star(s) => s.rays(),
        }
    }

    pub fn signature(&self) -> DesignSignature {
        match self {
            Design::Spread(s) => s.signature(),
            Design::Star(s) => s.signature(),
        }
    }

    pub fn as_spread(&self) -> Option<&Spread> {
        match self {
            Design::Spread(s) => Some(s),
            Design::Star(_) => None,
        }
    }

    pub fn as_star(&self) -> Option<&Star> {
        match self {
            Design::Star(s) => Some(s),
            Design::Spread(_) => None,
        }
    }
}

impl From<Spread> for Design {
    fn from(s: Spread) -> Self {
        Design::Spread(s)
    }
}

impl From<Star> for Design {
    fn from(s: Star) -> Self {
        Design::Star(s)
    }
}

/// Built-in primitive polynomials (bit `k` = coefficient of `w^k`), the
/// numerically least primitive polynomial of each degree 2..=12.
const BUILTIN_PRIMITIVE: [u32; 11] = [
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b100_0011,
    0b1000_0011,
    0b1_0001_1101,
    0b10_0001_0001,
    0b100_0000_1001,
    0b1000_0000_0101,
    0b1_0000_0101_0011,
];

/// Primitive polynomial over GF(2) of degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimitivePoly {
    degree: usize,
    mask: u32,
}

impl PrimitivePoly {
    /// From a packed mask where bit `k` is the coefficient of `w^k`.
    pub fn from_mask(mask: u32) -> Result<Self> {
        if mask < 0b11 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        let degree = 31 - mask.leading_zeros() as usize;
        check_dim(degree)?;
        if mask & 1 == 0 {
            return Err(Error::InvalidPolynomial("constant coefficient must be 1".into()));
        }
        let poly = Self { degree, mask };
        let order = poly.root_order();
        let expected = point_count(degree) as u64;
        if order != expected {
            return Err(Error::NotPrimitive { order, expected });
        }
        Ok(poly)
    }

    /// Coefficients listed from the constant term up to the leading term.
    pub fn from_coefficients(coeffs: &[u8]) -> Result<Self> {
        if coeffs.len() > 32 {
            return Err(Error::InvalidPolynomial("degree too large".into()));
        }
        let mut mask = 0u32;
        for (k, &c) in coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => mask |= 1 << k,
                _ => return Err(Error::InvalidPolynomial(format!("coefficient {c} is not a bit"))),
            }
        }
        if coeffs.last() != Some(&1) {
            return Err(Error::InvalidPolynomial("leading coefficient must be 1".into()));
        }
        Self::from_mask(mask)
    }

    pub fn builtin(n: usize) -> Result<Self> {
        n.checked_sub(2)
            .and_then(|i| BUILTIN_PRIMITIVE.get(i))
            .ok_or(Error::UnsupportedDimension(n))
            .and_then(|&m| Self::from_mask(m))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    fn times_root(&self, a: u32) -> u32 {
        let shifted = a << 1;
        if (shifted >> self.degree) & 1 == 1 {
            shifted ^ self.mask
        } else {
            shifted
        }
    }

    /// Multiplicative order of the root `w` (0 if `w` is not a unit).
    fn root_order(&self) -> u64 {
        let limit = 1u64 << self.degree;
        let mut x = 1u32;
        for k in 1..=limit {
            x = self.times_root(x);
            if x == 1 {
                return k;
            }
        }
        0
    }

    /// `w^0, w^1, ..., w^(2^n - 2)` as coefficient vectors.
    pub fn powers(&self) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(point_count(self.degree));
        let mut x = 1u32;
        for _ in 0..point_count(self.degree) {
            out.push(FieldElement(x));
            x = self.times_root(x);
        }
        out
    }
}

impl fmt::Display for PrimitivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in (0..=self.degree).rev() {
            if (self.mask >> k) & 1 == 1 {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                match k {
                    0 => f.write_str("1")?,
                    1 => f.write_str("w")?,
                    _ => write!(f, "w^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Element of `GF(2^n)`: bit `i` is the coefficient of `w^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    /// Coefficient vector `(a_0, ..., a_{n-1})`.
    pub fn coefficients(self, n: usize) -> Vec<u8> {
        (0..n).map(|i| ((self.0 >> i) & 1) as u8).collect()
    }

    /// The point with letter `n - i` set for each nonzero `a_i`.
    pub fn to_point(self, n: usize) -> Result<Point> {
        let bits = self.0.reverse_bits() >> (32 - n);
        Point::new(bits, n)
    }
}

/// Product in `GF(2)[w] / p(w)`.
pub fn gf_multiply(a: FieldElement, b: FieldElement, p: &PrimitivePoly) -> Result<FieldElement> {
    let n = p.degree;
    for x in [a, b] {
        if x.0 >> n != 0 {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: 32 - x.0.leading_zeros() as usize,
            });
        }
    }
    let mut acc = 0u32;
    let mut shifted = a.0;
    for i in 0..n {
        if (b.0 >> i) & 1 == 1 {
            acc ^= shifted;
        }
        shifted = p.times_root(shifted);
    }
    Ok(FieldElement(acc))
}

/// Cyclic `(t-1)`-spread: flat `j` holds `w^(j-1 + k*mu)` for `k = 0..2^t - 2`.
pub fn cyclic_spread(n: usize, t: usize, p: &PrimitivePoly) -> Result<Spread> {
    check_dim(n)?;
    if t == 0 || !n.is_multiple_of(t) {
        return Err(Error::TDoesNotDivideN { n, t });
    }
    if p.degree() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.degree(),
        });
    }
    let mu = point_count(n) / point_count(t);
    let powers = p.powers();
    let sets = (0..mu)
        .map(|j| {
            (0..point_count(t))
                .map(|k| powers[j + k * mu].to_point(n))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Spread::from_sets(n, t, sets)
}
