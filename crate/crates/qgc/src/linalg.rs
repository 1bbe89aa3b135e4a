//! Dense row-major matrices over GF(q) with reduced row echelon form and
//! kernel computation. Sizes here are desk scale; no packing.

use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<FieldElement>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            a: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<FieldElement>>) -> Mat {
        let r = rows.len();
        let mut a = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            a.extend(row);
        }
        Mat {
            field,
            rows: r,
            cols,
            a,
        }
    }

    pub fn at(&self, i: usize, j: usize) -> FieldElement {
        self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Mat::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.at(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, f.mul(v, other.at(k, j))));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let tmp = self.at(r, j);
                    self.set(r, j, self.at(pr, j));
                    self.set(pr, j, tmp);
                }
            }
            let inv = f.inv(self.at(r, c));
            for j in c..self.cols {
                self.set(r, j, f.mul(self.at(r, j), inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.at(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.at(i, j), f.mul(factor, self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// RREF with zero rows dropped; returns (matrix, pivots).
    pub fn rref_compact(mut self) -> (Mat, Vec<usize>) {
        let pivots = self.rref();
        let k = pivots.len();
        self.a.truncate(k * self.cols);
        self.rows = k;
        (self, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {v : M v^T = 0}, as rows, in RREF.
    pub fn kernel(&self) -> Mat {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut rows = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free] = FieldElement::ONE;
            for (r, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = f.neg(m.at(r, free));
            }
            rows.push(v);
        }
        let (out, _) = Mat::from_rows(f, self.cols, rows).rref_compact();
        out
    }

    /// Solve x * M = target for x (row vector), if consistent.
    /// Returns the coefficient vector over the rows of M.
    pub fn solve_row_combination(&self, target: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(target.len(), self.cols);
        let f = &self.field;
        // augment: [M^T | target^T], reduce, read combination
        let mut aug = Mat::zeros(self.field.clone(), self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(j, i, self.at(i, j));
            }
        }
        for j in 0..self.cols {
            aug.set(j, self.rows, target[j]);
        }
        let pivots = aug.rref();
        // inconsistent iff a pivot lands in the last column
        if pivots.contains(&self.rows) {
            return None;
        }
        let mut x = vec![FieldElement::ZERO; self.rows];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(r, self.rows);
        }
        // verify (guards against rank-deficient corner cases)
        let mut check = vec![FieldElement::ZERO; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                check[j] = f.add(check[j], f.mul(xi, self.at(i, j)));
            }
        }
        if check == target {
            Some(x)
        } else {
            None
        }
    }
}

/// Incremental row-space tracker: feeds rows one at a time, keeping a reduced
/// basis; reports whether each new row was independent.
pub struct SpanTracker {
    field: Field,
    cols: usize,
    /// Reduced rows, sorted by pivot column.
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl SpanTracker {
    pub fn new(field: Field, cols: usize) -> SpanTracker {
        SpanTracker {
            field,
            cols,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduce `row` against the basis in place; returns the pivot column if a
    /// nonzero remainder survives.
    fn reduce(&self, row: &mut [FieldElement]) -> Option<usize> {
        let f = &self.field;
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = row[p];
            if c.is_zero() {
                continue;
            }
            for j in p..self.cols {
                row[j] = f.sub(row[j], f.mul(c, b[j]));
            }
        }
        row.iter().position(|c| !c.is_zero())
    }

    pub fn contains(&self, row: &[FieldElement]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r).is_none()
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, row: &[FieldElement]) -> bool {
        assert_eq!(row.len(), self.cols);
        let f = self.field.clone();
        let mut r = row.to_vec();
        let Some(p) = self.reduce(&mut r) else {
            return false;
        };
        let inv = f.inv(r[p]);
        for v in r.iter_mut() {
            *v = f.mul(*v, inv);
        }
        // back-substitute into existing rows
        for (b, &bp) in self.basis.iter_mut().zip(&self.pivots) {
            let _ = bp;
            let c = b[p];
            if !c.is_zero() {
                for j in 0..self.cols {
                    b[j] = f.sub(b[j], f.mul(c, r[j]));
                }
            }
        }
        let pos = self.pivots.partition_point(|&x| x < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, r);
        true
    }

    pub fn into_mat(self) -> Mat {
        Mat::from_rows(self.field, self.cols, self.basis)
    }

    pub fn basis_rows(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }
}
