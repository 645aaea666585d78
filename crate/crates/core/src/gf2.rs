//! GF(2) vectors and matrices.
//!
//! A [`Point`] is a nonzero binary vector of length `n`, packed into a `u32`:
//! bit `i` is the coefficient of basic factor `F_{i+1}`, i.e. letter `i` of
//! `A, B, C, ...`. The packed value is therefore also the Yates index of the
//! effect (`A = 1`, `B = 2`, `AB = 3`, `C = 4`, ...).
//!
//! Matrices are stored row-major, one `u32` per row with bit `c` holding the
//! entry in column `c`. A matrix acts on column vectors, so column `j` of a
//! collineation is the image of `F_{j+1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported geometry dimension. Bitstrings have `2^n - 1` positions,
/// so this keeps signatures at a few hundred kilobytes per flat.
pub const MAX_DIM: usize = 20;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        Err(Error::UnsupportedDimension(n))
    } else {
        Ok(())
    }
}

/// Number of points of `PG(n - 1, 2)`.
#[inline]
pub fn point_count(n: usize) -> usize {
    (1usize << n) - 1
}

/// A point of `PG(n - 1, 2)`: one factorial effect.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    // Field order matters for the derived `Ord`: dimension first, then Yates index.
    dim: u8,
    bits: u32,
}

impl Point {
    pub fn new(bits: u32, n: usize) -> Result<Self> {
        check_dim(n)?;
        if bits == 0 {
            return Err(Error::ZeroVector);
        }
        if bits >> n != 0 {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: 32 - bits.leading_zeros() as usize,
            });
        }
        Ok(Self { dim: n as u8, bits })
    }

    /// Caller guarantees `bits != 0` and `bits < 2^n`.
    #[inline]
    pub(crate) fn from_raw(bits: u32, n: usize) -> Self {
        debug_assert!(bits != 0 && (bits >> n) == 0);
        Self { dim: n as u8, bits }
    }

    /// The basic factor `F_{index+1}`.
    pub fn basic(index: usize, n: usize) -> Result<Self> {
        if index >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: index + 1,
            });
        }
        Self::new(1 << index, n)
    }

    /// Parses an effect label such as `"BCD"` for dimension `n`.
    pub fn parse(label: &str, n: usize) -> Result<Self> {
        label_to_point(&EffectLabel::new(label)?, n)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn coord(self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    /// Number of letters in the effect (main effect = 1, 2-fi = 2, ...).
    #[inline]
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn coords(self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.coord(i) as u8).collect()
    }

    pub fn label(self) -> EffectLabel {
        point_to_label(self)
    }

    /// Same coordinates, viewed in a larger geometry.
    pub fn extend(self, n: usize) -> Result<Self> {
        Self::new(self.bits, n)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.label(), f)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Human readable effect name: an ascending string of uppercase letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EffectLabel(String);

impl EffectLabel {
    pub fn new(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyLabel);
        }
        let mut prev: Option<char> = None;
        for c in s.chars() {
            if !c.is_ascii_uppercase() {
                return Err(Error::InvalidLetter(c));
            }
            if prev.is_some_and(|p| p >= c) {
                return Err(Error::UnsortedLabel(s.to_owned()));
            }
            prev = Some(c);
        }
        Ok(Self(s.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn letter_indices(&self) -> impl Iterator<Item = (char, usize)> + '_ {
        self.0.chars().map(|c| (c, (c as u8 - b'A') as usize))
    }
}

impl fmt::Display for EffectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for EffectLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

pub fn label_to_point(label: &EffectLabel, n: usize) -> Result<Point> {
    check_dim(n)?;
    let mut bits = 0u32;
    for (letter, i) in label.letter_indices() {
        if i >= n {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        bits |= 1 << i;
    }
    Point::new(bits, n)
}

pub fn point_to_label(p: Point) -> EffectLabel {
    let s: String = (0..p.dim())
        .filter(|&i| p.coord(i))
        .map(|i| (b'A' + i as u8) as char)
        .collect();
    EffectLabel(s)
}

/// Componentwise XOR. `None` is the zero vector.
pub fn add_points(p: Point, q: Point) -> Result<Option<Point>> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let bits = p.bits ^ q.bits;
    Ok((bits != 0).then(|| Point::from_raw(bits, p.dim())))
}

fn common_dim(points: &[Point]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if let Some(bad) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }
    Ok(n)
}

/// Incremental row-echelon basis keyed by leading (highest) bit.
#[derive(Clone, Debug, Default)]
pub(crate) struct EchelonBasis {
    rows: Vec<u32>,
}

impl EchelonBasis {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.rows {
            let lead = 31 - r.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Inserts `v` if it is independent of the current rows; returns whether it was.
    pub(crate) fn insert(&mut self, v: u32) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        // keep rows sorted by decreasing leading bit so `reduce` is a single pass
        let lead = r.leading_zeros();
        let pos = self.rows.partition_point(|x| x.leading_zeros() < lead);
        self.rows.insert(pos, r);
        true
    }

    pub(crate) fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivots(&self) -> u32 {
        self.rows
            .iter()
            .fold(0, |acc, r| acc | (1 << (31 - r.leading_zeros())))
    }
}

/// Rank of a family of points.
pub fn rank_of_points(points: &[Point]) -> usize {
    let mut basis = EchelonBasis::new();
    for p in points {
        basis.insert(p.bits);
    }
    basis.rank()
}

/// All nonzero GF(2) combinations of `basis`, sorted by Yates index.
pub fn span(basis: &[Point]) -> Result<Vec<Point>> {
    let n = common_dim(basis)?;
    let mut indep = Vec::new();
    let mut echelon = EchelonBasis::new();
    for p in basis {
        if echelon.insert(p.bits) {
            indep.push(p.bits);
        }
    }
    Ok(span_bits(&indep)
        .into_iter()
        .map(|b| Point::from_raw(b, n))
        .collect())
}

/// Span of independent vectors, zero excluded, sorted ascending.
pub(crate) fn span_bits(indep: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity((1 << indep.len()) - 1);
    out.push(0u32);
    for &v in indep {
        let len = out.len();
        for i in 0..len {
            out.push(out[i] ^ v);
        }
    }
    out.swap_remove(0);
    out.sort_unstable();
    out
}

/// Dense GF(2) matrix with at most 32 columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    rows: Vec<u32>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= 32, "at most 32 columns are supported");
        Self {
            rows: vec![0; rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        m
    }

    /// Rows given as packed bits (bit `c` = column `c`).
    pub fn from_packed_rows(rows: Vec<u32>, cols: usize) -> Result<Self> {
        if cols > 32 {
            return Err(Error::UnsupportedDimension(cols));
        }
        if rows.iter().any(|r| cols < 32 && r >> cols != 0) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: 32,
            });
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut packed = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            let mut bits = 0u32;
            for (c, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 => bits |= 1 << c,
                    _ => return Err(Error::InvalidLetter((b'0' + e) as char)),
                }
            }
            packed.push(bits);
        }
        Self::from_packed_rows(packed, cols)
    }

    /// Matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[Point]) -> Result<Self> {
        let n = common_dim(columns)?;
        let mut m = Self::zeros(n, columns.len());
        for (j, p) in columns.iter().enumerate() {
            for (r, row) in m.rows.iter_mut().enumerate() {
                if p.coord(r) {
                    *row |= 1 << j;
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows() == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.rows[r] >> c) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if value {
            self.rows[r] |= 1 << c;
        } else {
            self.rows[r] &= !(1 << c);
        }
    }

    pub fn packed_rows(&self) -> &[u32] {
        &self.rows
    }

    /// Column `j` packed with bit `r` = row `r`.
    pub fn column_bits(&self, j: usize) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (r, row)| acc | (((row >> j) & 1) << r))
    }

    /// Matrix–vector product on a packed column vector.
    #[inline]
    pub fn mul_bits(&self, v: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (r, row)| acc | (((row & v).count_ones() & 1) << r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|row| (0..self.cols).map(|c| ((row >> c) & 1) as u8).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.n_rows());
        for j in 0..self.cols {
            t.rows[j] = self.column_bits(j);
        }
        t
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", (row >> c) & 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix[")?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for e in row {
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

/// Parses whitespace-separated 0/1 entries, one row per line.
impl FromStr for Gf2Matrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (li, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                row.push(match tok {
                    "0" => 0,
                    "1" => 1,
                    _ => {
                        return Err(Error::Parse {
                            line: li + 1,
                            column: 1,
                            message: format!("expected 0 or 1, found {tok:?}"),
                        })
                    }
                });
            }
            rows.push(row);
        }
        Self::from_rows(&rows)
    }
}

/// Row rank over GF(2), by Gauss–Jordan elimination.
pub fn rank(m: &Gf2Matrix) -> usize {
    let mut rows = m.rows.clone();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> c) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && (*row >> c) & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

pub fn invert(m: &Gf2Matrix) -> Result<Gf2Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.n_rows(),
            cols: m.cols,
        });
    }
    let n = m.cols;
    let mut a = m.rows.clone();
    let mut inv = Gf2Matrix::identity(n).rows;
    for c in 0..n {
        let p = (c..n)
            .find(|&r| (a[r] >> c) & 1 == 1)
            .ok_or(Error::Singular)?;
        a.swap(c, p);
        inv.swap(c, p);
        for r in 0..n {
            if r != c && (a[r] >> c) & 1 == 1 {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
        }
    }
    Ok(Gf2Matrix { rows: inv, cols: n })
}

pub fn mat_mul(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    if a.cols != b.n_rows() {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: b.n_rows(),
        });
    }
    // row r of a·b is the XOR of the rows of b selected by row r of a
    let rows = a
        .rows
        .iter()
        .map(|&ar| {
            b.rows
                .iter()
                .enumerate()
                .filter(|(k, _)| (ar >> k) & 1 == 1)
                .fold(0, |acc, (_, br)| acc ^ br)
        })
        .collect();
    Ok(Gf2Matrix { rows, cols: b.cols })
}

/// `m · p`; `None` when the product is the zero vector.
pub fn mat_vec(m: &Gf2Matrix, p: Point) -> Result<Option<Point>> {
    if m.cols != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.cols,
            found: p.dim(),
        });
    }
    check_dim(m.n_rows())?;
    let bits = m.mul_bits(p.bits);
    Ok((bits != 0).then(|| Point::from_raw(bits, m.n_rows())))
}
