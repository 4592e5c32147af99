//! Exact rational matrices: rank via fraction-free integer elimination
//! and null spaces via rational Gauss-Jordan.

use num::{BigInt, Integer, One, Zero};

use super::Rational;

/// A dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> RationalMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.get_mut(r, c) = self.get(r, c).clone();
            }
            for c in 0..other.cols {
                *out.get_mut(r, self.cols + c) = other.get(r, c).clone();
            }
        }
        out
    }

    /// Vertical concatenation, stacking `other` below `self`.
    pub fn vstack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Exact rank via fraction-free (Bareiss) elimination: each row is
    /// first scaled to integers, then elimination stays in `BigInt` with
    /// exact divisions only, avoiding rational denominator blowup.
    pub fn rank(&self) -> usize {
        // Clear denominators row by row (row scaling preserves rank).
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let lcm = (0..self.cols).fold(BigInt::one(), |acc, c| {
                    acc.lcm(self.get(r, c).denom())
                });
                (0..self.cols)
                    .map(|c| {
                        let v = self.get(r, c);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect();
        let (nr, nc) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev_pivot = BigInt::one();
        let mut row = 0;
        for col in 0..nc {
            // find a pivot row at or below `row`
            let Some(p) = (row..nr).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let pivot = m[row][col].clone();
            for r in row + 1..nr {
                for c in col + 1..nc {
                    // Bareiss update: exact division by the previous pivot
                    let num = &pivot * &m[r][c] - &m[r][col] * &m[row][c];
                    let (q, rem) = num.div_rem(&prev_pivot);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[r][c] = q;
                }
                m[r][col] = BigInt::zero();
            }
            prev_pivot = pivot;
            rank += 1;
            row += 1;
            if row == nr {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form over the rationals; returns the RREF and
    /// the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            // swap rows p and row
            for c in 0..m.cols {
                let tmp = m.get(p, c).clone();
                *m.get_mut(p, c) = m.get(row, c).clone();
                *m.get_mut(row, c) = tmp;
            }
            let inv = m.get(row, col).clone();
            for c in 0..m.cols {
                let v = m.get(row, c) / &inv;
                *m.get_mut(row, c) = v;
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c) - &factor * m.get(row, c);
                        *m.get_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// A basis of the right null space `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(r, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// True when the column spans of two matrices with equal row counts
    /// coincide (checked exactly through ranks of concatenations).
    pub fn same_column_span(&self, other: &RationalMatrix) -> bool {
        let ra = self.rank();
        let rb = other.rank();
        ra == rb && self.hstack(other).rank() == ra
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(m(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
        // wide matrix: 2x6 with independent rows
        assert_eq!(
            m(&[&[1, 0, 2, 3, 5, 0], &[0, 1, 1, 1, 0, -5]]).rank(),
            2
        );
    }

    #[test]
    fn rank_handles_fractions_exactly() {
        let a = RationalMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(1)],
        ]);
        // det = 1/2 - 1/2 = 0, so rank 1
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn nullspace_solves_exactly() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in 0..a.nrows() {
                let dot: Rational = (0..a.ncols()).map(|c| a.get(r, c) * &v[c]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn column_span_comparison() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let b = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        assert!(a.same_column_span(&b));
        let c = m(&[&[1], &[0], &[0]]);
        assert!(!a.same_column_span(&c));
    }
}
