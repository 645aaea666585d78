//! Collineations of `PG(n - 1, 2)`: invertible `n x n` matrices over GF(2)
//! acting on column vectors. Column `j` is the image of basic factor `F_{j+1}`.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{Design, Flat, Spread, Star};
use crate::gf2::{check_dim, invert, mat_mul, rank, Gf2Matrix, Point};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Collineation {
    matrix: Gf2Matrix,
    // cached images of the basic factors
    columns: Vec<u32>,
}

impl Collineation {
    pub fn new(matrix: Gf2Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.n_rows(),
                cols: matrix.n_cols(),
            });
        }
        check_dim(matrix.n_cols())?;
        if rank(&matrix) != matrix.n_cols() {
            return Err(Error::Singular);
        }
        Ok(Self::from_matrix_unchecked(matrix))
    }

    fn from_matrix_unchecked(matrix: Gf2Matrix) -> Self {
        let columns = (0..matrix.n_cols()).map(|j| matrix.column_bits(j)).collect();
        Self { matrix, columns }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_matrix_unchecked(Gf2Matrix::identity(n))
    }

    /// The collineation sending `F_{j+1}` to `images[j]`.
    pub fn from_images(images: &[Point]) -> Result<Self> {
        let m = Gf2Matrix::from_columns(images)?;
        Self::new(m).map_err(|e| match e {
            Error::Singular => Error::DependentBasis,
            e => e,
        })
    }

    /// Rows of 0/1 entries, as printed in matrix listings.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        Self::new(Gf2Matrix::from_rows(rows)?)
    }

    /// Uniformly random invertible matrix by rejection sampling.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        assert!((1..=crate::gf2::MAX_DIM).contains(&n));
        let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        loop {
            let rows = (0..n).map(|_| rng.random::<u32>() & mask).collect();
            let m = Gf2Matrix::from_packed_rows(rows, n).expect("rows are masked to n bits");
            if rank(&m) == n {
                return Self::from_matrix_unchecked(m);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Gf2Matrix {
        self.matrix
    }

    #[inline]
    pub(crate) fn apply_bits(&self, v: u32) -> u32 {
        let mut out = 0;
        let mut v = v;
        while v != 0 {
            let j = v.trailing_zeros() as usize;
            out ^= self.columns[j];
            v &= v - 1;
        }
        out
    }

    pub fn apply_point(&self, p: Point) -> Result<Point> {
        self.check_dim(p.dim())?;
        Ok(Point::from_raw(self.apply_bits(p.bits()), self.n()))
    }

    pub fn apply_flat(&self, f: &Flat) -> Result<Flat> {
        self.check_dim(f.n())?;
        let mut points: Vec<Point> = f
            .points()
            .iter()
            .map(|p| Point::from_raw(self.apply_bits(p.bits()), self.n()))
            .collect();
        points.sort_unstable();
        Ok(Flat::from_sorted_unchecked(f.n(), f.t(), points))
    }

    pub fn apply_spread(&self, s: &Spread) -> Result<Spread> {
        let flats = s
            .flats()
            .iter()
            .map(|f| self.apply_flat(f))
            .collect::<Result<Vec<_>>>()?;
        Spread::new(s.n(), s.t(), flats)
    }

    pub fn apply_star(&self, s: &Star) -> Result<Star> {
        let rays = s
            .rays()
            .iter()
            .map(|f| self.apply_flat(f))
            .collect::<Result<Vec<_>>>()?;
        if s.mu() == 1 {
            let nucleus = self.apply_flat(s.nucleus())?;
            return Star::single_ray(s.n(), rays.into_iter().next().unwrap(), nucleus);
        }
        if s.is_covering() {
            Star::new(s.n(), rays)
        } else {
            Star::partial(s.n(), rays)
        }
    }

    pub fn inverse(&self) -> Self {
        Self::from_matrix_unchecked(invert(&self.matrix).expect("collineations are invertible"))
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Collineation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.matrix, f)
    }
}

impl fmt::Debug for Collineation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.matrix, f)
    }
}

/// A square matrix is a collineation iff it is invertible over GF(2).
pub fn is_collineation(m: &Gf2Matrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.n_rows(),
            cols: m.n_cols(),
        });
    }
    Ok(rank(m) == m.n_cols())
}

pub fn apply_collineation(c: &Collineation, d: &Design) -> Result<Design> {
    Ok(match d {
        Design::Spread(s) => Design::Spread(c.apply_spread(s)?),
        Design::Star(s) => Design::Star(c.apply_star(s)?),
    })
}

/// The collineation with `c * sources[k] = targets[k]`, i.e. `T * S^-1`.
pub fn collineation_from_basis_map(sources: &[Point], targets: &[Point]) -> Result<Collineation> {
    let n = sources.first().ok_or(Error::EmptyInput)?.dim();
    for family in [sources, targets] {
        if family.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: family.len(),
            });
        }
    }
    let s = Gf2Matrix::from_columns(sources)?;
    let t = Gf2Matrix::from_columns(targets)?;
    if t.n_rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.n_rows(),
        });
    }
    let s_inv = invert(&s).map_err(|_| Error::DependentBasis)?;
    if rank(&t) != n {
        return Err(Error::DependentBasis);
    }
    Ok(Collineation::from_matrix_unchecked(mat_mul(&t, &s_inv)?))
}

/// `outer * inner`: apply `inner` first.
pub fn compose(outer: &Collineation, inner: &Collineation) -> Result<Collineation> {
    if outer.n() != inner.n() {
        return Err(Error::DimensionMismatch {
            expected: outer.n(),
            found: inner.n(),
        });
    }
    Ok(Collineation::from_matrix_unchecked(mat_mul(
        &outer.matrix,
        &inner.matrix,
    )?))
}
