//! Dense bit-packed matrices over GF(2).

const W: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(W);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    /// Matrix whose row `i` has ones exactly at `supports[i]`.
    pub fn from_rows(cols: usize, supports: &[Vec<usize>]) -> Self {
        let mut m = BitMatrix::zeros(supports.len(), cols);
        for (i, s) in supports.iter().enumerate() {
            for &j in s {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.stride + j / W] >> (j % W) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        let word = &mut self.data[i * self.stride + j / W];
        if bit {
            *word |= 1 << (j % W);
        } else {
            *word &= !(1 << (j % W));
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// `row[dst] ^= row[src]`, `dst != src`.
    fn xor_into(&mut self, dst: usize, src: usize) {
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..dst * s + s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..src * s + s])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.stride {
                self.data.swap(a * self.stride + w, b * self.stride + w);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_into(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// `self * v` for a bit vector `v` of length `cols`.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = 0u8;
                for (j, &b) in v.iter().enumerate() {
                    if b & 1 == 1 && row[j / W] >> (j % W) & 1 == 1 {
                        acc ^= 1;
                    }
                }
                acc
            })
            .collect()
    }
}

pub fn gf2_rank(m: &BitMatrix) -> usize {
    m.clone().rref().len()
}

/// A basis of `{x : M x = 0}`, one 0/1 vector per free column.
pub fn null_space(m: &BitMatrix) -> Vec<Vec<u8>> {
    let mut e = m.clone();
    let pivots = e.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![0u8; m.cols()];
            x[f] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                if e.get(i, f) {
                    x[p] = 1;
                }
            }
            x
        })
        .collect()
}
