//! Bitstring signatures.
//!
//! Each flat is encoded as a `2^n - 1` bit indicator in Yates order (position
//! `k` is the effect with Yates index `k`). A design's signature is the sorted
//! list of its flats' bitstrings, so two designs are equivalent exactly when
//! their signatures are equal.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{Flat, Spread, Star};
use crate::gf2::{point_count, Point};

/// Yates index of an effect: `sum(bit_i * 2^(i-1))`, in `1..=2^n - 1`.
#[inline]
pub fn yates_index(p: Point) -> usize {
    p.bits() as usize
}

/// The effect at a Yates index.
pub fn point_at(index: usize, n: usize) -> Result<Point> {
    if index > point_count(n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: usize::BITS as usize - index.leading_zeros() as usize,
        });
    }
    Point::new(index as u32, n)
}

/// Indicator vector over the points of `PG(n - 1, 2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitstring {
    len: usize,
    words: Vec<u64>,
}

impl Bitstring {
    pub fn empty(n: usize) -> Self {
        let len = point_count(n);
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_points<'a>(n: usize, points: impl IntoIterator<Item = &'a Point>) -> Self {
        let mut b = Self::empty(n);
        for &p in points {
            b.insert(p);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, p: Point) {
        let k = yates_index(p) - 1;
        self.words[k / 64] |= 1 << (k % 64);
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        let k = yates_index(p) - 1;
        k < self.len && (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    /// Number of positions, `2^n - 1`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.count_ones() == 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Self) -> Self {
        Self {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn or_assign(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// 1-indexed positions of the set bits.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b + 1)
            })
        })
    }

    pub fn is_full(&self) -> bool {
        self.count_ones() == self.len
    }
}

/// Lexicographic on the `'0'/'1'` text form, position 1 first.
impl Ord for Bitstring {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let bit = diff.trailing_zeros();
                    return if (a >> bit) & 1 == 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Bitstring {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.len);
        for k in 0..self.len {
            s.push(if (self.words[k / 64] >> (k % 64)) & 1 == 1 { '1' } else { '0' });
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstring({self})")
    }
}

/// Sorted bitstrings of a design's flats.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DesignSignature(Vec<Bitstring>);

impl DesignSignature {
    pub fn bitstrings(&self) -> &[Bitstring] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DesignSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Signature of a family of point sets over a common `n`.
pub fn get_bitstrings<S: AsRef<[Point]>>(n: usize, sets: &[S]) -> DesignSignature {
    let mut bits: Vec<Bitstring> = sets
        .iter()
        .map(|s| Bitstring::from_points(n, s.as_ref()))
        .collect();
    bits.sort_unstable();
    DesignSignature(bits)
}

pub fn flat_signature(n: usize, flats: &[Flat]) -> DesignSignature {
    get_bitstrings(n, flats)
}

pub fn check_spread_equivalence(s1: &Spread, s2: &Spread) -> bool {
    s1.n() == s2.n()
        && s1.t() == s2.t()
        && s1.mu() == s2.mu()
        && s1.signature() == s2.signature()
}

/// Rays match as sorted bitstrings and the nuclei are the same point set.
pub fn check_star_equivalence(s1: &Star, s2: &Star) -> bool {
    s1.params() == s2.params()
        && s1.nucleus() == s2.nucleus()
        && s1.signature() == s2.signature()
}

/// Size of an equivalence class, `mu! * ((2^t - 1)!)^mu`.
pub fn equivalence_class_size(mu: u64, t: u32) -> Result<u128> {
    fn factorial(k: u128) -> Result<u128> {
        (1..=k).try_fold(1u128, |acc, i| acc.checked_mul(i).ok_or(Error::Overflow))
    }
    if mu == 0 || t == 0 {
        return Err(Error::EmptyInput);
    }
    let flat_size = 1u128
        .checked_shl(t)
        .filter(|_| t < 128)
        .ok_or(Error::Overflow)?
        - 1;
    let per_flat = factorial(flat_size)?;
    let mut total = factorial(mu as u128)?;
    for _ in 0..mu {
        total = total.checked_mul(per_flat).ok_or(Error::Overflow)?;
    }
    Ok(total)
}
