use super::dense::Matrix;
use super::field::Gf2;

/// GF(2) matrix with rows packed 64 entries per word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix { rows, cols, words_per_row, data: vec![0; rows * words_per_row] }
    }

    pub fn from_dense(m: &Matrix<Gf2>) -> Self {
        let mut b = Self::zeros(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if *m.get(r, c) == 1 {
                    b.set(r, c, true);
                }
            }
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words_per_row + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.words_per_row + c / 64] ^= 1 << (c % 64);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Rank by row elimination; each row's pivot is its lowest set bit.
    pub fn rank(&self) -> usize {
        let w = self.words_per_row;
        // pivot column -> reduced row
        let mut pivot_rows: Vec<Option<Vec<u64>>> = vec![None; self.cols];
        let mut rank = 0;
        let mut row = vec![0u64; w];
        for r in 0..self.rows {
            row.copy_from_slice(self.row(r));
            while let Some(col) = lowest_set_bit(&row) {
                match &pivot_rows[col] {
                    Some(p) => {
                        for (a, b) in row.iter_mut().zip(p) {
                            *a ^= *b;
                        }
                    }
                    None => {
                        pivot_rows[col] = Some(row.clone());
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

#[inline]
fn lowest_set_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}
