use std::fmt;

use crate::error::{Error, Result};

/// Dense binary matrix with at most 128 columns; each row is one `u128`,
/// bit `j` holding column `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    data: Vec<u128>,
}

/// A generator in the form `(I_k | A)` and the column permutation that
/// produced it: column `j` of `matrix` is column `permutation[j]` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Systematic {
    pub matrix: BitMatrix,
    pub permutation: Vec<usize>,
}

pub const MAX_COLS: usize = 128;

#[inline]
fn mask(cols: usize) -> u128 {
    if cols == 128 {
        u128::MAX
    } else {
        (1u128 << cols) - 1
    }
}

impl BitMatrix {
    pub fn new(cols: usize, data: Vec<u128>) -> Result<Self> {
        if cols > MAX_COLS {
            return Err(Error::InvalidArgument(format!("{cols} columns exceed {MAX_COLS}")));
        }
        if data.iter().any(|&r| r & !mask(cols) != 0) {
            return Err(Error::InvalidArgument("row has bits beyond the column count".into()));
        }
        Ok(BitMatrix { cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_COLS);
        BitMatrix { cols, data: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix { cols: n, data: (0..n).map(|i| 1u128 << i).collect() }
    }

    /// Rows given as strings of `0`/`1`, leftmost character = column 0.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            data.push(parse_row(r.as_ref(), cols)?);
        }
        Self::new(cols, data)
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u128 {
        self.data[i]
    }

    pub fn row_words(&self) -> &[u128] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn push_row(&mut self, row: u128) {
        assert_eq!(row & !mask(self.cols), 0);
        self.data.push(row);
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()
    }

    pub fn rank(&self) -> usize {
        self.independent_rows().len()
    }

    /// Rows that each increase the rank, in their original order.
    pub fn independent_rows(&self) -> Vec<u128> {
        // reduced basis keyed by lowest set bit
        let mut reduced: Vec<u128> = Vec::new();
        let mut keep = Vec::new();
        for &r in &self.data {
            let mut x = r;
            for &b in &reduced {
                if x & (b & b.wrapping_neg()) != 0 {
                    x ^= b;
                }
            }
            if x != 0 {
                let low = x & x.wrapping_neg();
                for b in reduced.iter_mut() {
                    if *b & low != 0 {
                        *b ^= x;
                    }
                }
                reduced.push(x);
                keep.push(r);
            }
        }
        keep
    }

    /// A basis of the row space made of original rows.
    pub fn basis(&self) -> BitMatrix {
        BitMatrix { cols: self.cols, data: self.independent_rows() }
    }

    /// Whether `row` lies in the row space.
    pub fn spans(&self, row: u128) -> bool {
        let mut ext = self.basis();
        let r = ext.rows();
        ext.data.push(row);
        ext.rank() == r
    }

    /// Whether both matrices have the same row space.
    pub fn same_row_space(&self, other: &BitMatrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let r = self.rank();
        if r != other.rank() {
            return false;
        }
        let mut joined = self.clone();
        joined.data.extend_from_slice(&other.data);
        joined.rank() == r
    }

    /// `G·Gᵀ = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.data.iter().enumerate().all(|(i, &a)| self.data[i..].iter().all(|&b| (a & b).count_ones() % 2 == 0))
    }

    pub fn transpose(&self) -> BitMatrix {
        assert!(self.rows() <= MAX_COLS);
        let mut t = BitMatrix::zeros(self.cols, self.rows());
        for (i, &r) in self.data.iter().enumerate() {
            for j in 0..self.cols {
                if (r >> j) & 1 == 1 {
                    t.data[j] |= 1 << i;
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows() {
            return Err(Error::LengthMismatch { left: self.cols, right: other.rows() });
        }
        let data = self
            .data
            .iter()
            .map(|&r| {
                let mut acc = 0u128;
                let mut bits = r;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    acc ^= other.data[j];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        Ok(BitMatrix { cols: other.cols, data })
    }

    /// Reorder columns: new column `j` is old column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> BitMatrix {
        assert_eq!(perm.len(), self.cols);
        let data = self
            .data
            .iter()
            .map(|&r| perm.iter().enumerate().fold(0u128, |acc, (j, &p)| acc | (((r >> p) & 1) << j)))
            .collect();
        BitMatrix { cols: self.cols, data }
    }

    /// Gaussian elimination to `(I_k | A)`, permuting columns where a pivot
    /// is missing from the leading block. Requires full row rank.
    pub fn systematic_form(&self) -> Result<Systematic> {
        let k = self.rows();
        if k > self.cols {
            return Err(Error::RankDeficient { rank: self.rank(), expected: k });
        }
        let mut rows = self.data.clone();
        let mut perm: Vec<usize> = (0..self.cols).collect();
        for r in 0..k {
            let mut pivot = None;
            'search: for col in r..self.cols {
                for (i, row) in rows.iter().enumerate().skip(r) {
                    if (row >> col) & 1 == 1 {
                        pivot = Some((i, col));
                        break 'search;
                    }
                }
            }
            let (pr, pc) = pivot.ok_or(Error::RankDeficient { rank: r, expected: k })?;
            if pc != r {
                for row in rows.iter_mut() {
                    let (x, y) = ((*row >> pc) & 1, (*row >> r) & 1);
                    if x != y {
                        *row ^= (1 << pc) | (1 << r);
                    }
                }
                perm.swap(pc, r);
            }
            rows.swap(pr, r);
            let p = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && (*row >> r) & 1 == 1 {
                    *row ^= p;
                }
            }
        }
        Ok(Systematic { matrix: BitMatrix { cols: self.cols, data: rows }, permutation: perm })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows(), self.cols)?;
        for i in 0..self.rows() {
            writeln!(f, "  {}", self.row_string(i))?;
        }
        Ok(())
    }
}

pub(crate) fn parse_row(s: &str, cols: usize) -> Result<u128> {
    if s.len() != cols {
        return Err(Error::LengthMismatch { left: cols, right: s.len() });
    }
    if cols > MAX_COLS {
        return Err(Error::InvalidArgument(format!("{cols} columns exceed {MAX_COLS}")));
    }
    let mut r = 0u128;
    for (j, ch) in s.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => r |= 1 << j,
            _ => return Err(Error::Parse(format!("invalid bit {ch:?} at column {j}"))),
        }
    }
    Ok(r)
}

/// Inverse of a square binary matrix given as `k ≤ 64` rows of `u64`.
pub(crate) fn invert_square(rows: &[u64]) -> Option<Vec<u64>> {
    let k = rows.len();
    assert!(k <= 64);
    let mut a = rows.to_vec();
    let mut inv: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
    for col in 0..k {
        let pr = (col..k).find(|&i| (a[i] >> col) & 1 == 1)?;
        a.swap(col, pr);
        inv.swap(col, pr);
        for i in 0..k {
            if i != col && (a[i] >> col) & 1 == 1 {
                a[i] ^= a[col];
                inv[i] ^= inv[col];
            }
        }
    }
    Some(inv)
}
