//! Dense matrices over the Laurent ring and their exact determinants.

use std::ops::{Index, IndexMut};

use super::{ExponentVec, LaurentError, LaurentPoly};

/// Row-major dense matrix with entries in a fixed Laurent ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    nrows: usize,
    ncols: usize,
    nvars: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(nrows: usize, ncols: usize, nvars: usize) -> Self {
        PolyMatrix {
            nrows,
            ncols,
            nvars,
            entries: vec![LaurentPoly::zero(nvars); nrows * ncols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one(nvars);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length and all
    /// entries `nvars` variables.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>, nvars: usize) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            for e in row {
                assert_eq!(e.nvars(), nvars, "entry lives in a different ring");
                entries.push(e);
            }
        }
        PolyMatrix {
            nrows,
            ncols,
            nvars,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> + '_ {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.rows().map(<[_]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let entries: Vec<_> = self.entries.iter().map(f).collect();
        let nvars = entries.first().map_or(self.nvars, LaurentPoly::nvars);
        PolyMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            nvars,
            entries,
        }
    }

    /// Embeds every entry into a ring with more variables.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        let mut m = self.map(|e| e.extend_vars(nvars));
        m.nvars = nvars;
        m
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        self.map(|e| e * s)
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, rhs.nrows, "inner dimensions differ");
        assert_eq!(self.nvars, rhs.nvars, "matrices live over different rings");
        let mut out = PolyMatrix::zeros(self.nrows, rhs.ncols, self.nvars);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a -= b;
        }
        out
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> PolyMatrix {
        assert!(self.is_square());
        self.sub(&PolyMatrix::identity(self.nrows, self.nvars))
    }

    /// Row vector times matrix.
    pub fn left_mul_row(&self, row: &[LaurentPoly]) -> Vec<LaurentPoly> {
        assert_eq!(row.len(), self.nrows);
        (0..self.ncols)
            .map(|j| {
                let mut acc = LaurentPoly::zero(self.nvars);
                for (i, r) in row.iter().enumerate() {
                    acc += &(r * &self[(i, j)]);
                }
                acc
            })
            .collect()
    }

    fn check_square(&self) -> Result<(), LaurentError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LaurentError::NotSquare {
                rows: self.nrows,
                cols: self.ncols,
            })
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first shifted by a monomial so its entries are ordinary
    /// polynomials; the accumulated shift is divided back out at the end.
    /// The empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<LaurentPoly, LaurentError> {
        self.check_square()?;
        let n = self.nrows;
        let one = LaurentPoly::one(self.nvars);
        if n == 0 {
            return Ok(one);
        }
        let mut total_shift = ExponentVec::zeros(self.nvars);
        let mut a: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        for row in self.rows() {
            let mut lo: Option<ExponentVec> = None;
            for e in row.iter().filter(|e| !e.is_zero()) {
                let m = e.min_exponents();
                lo = Some(match lo {
                    None => m,
                    Some(l) => l.meet(&m),
                });
            }
            let Some(lo) = lo else {
                return Ok(LaurentPoly::zero(self.nvars));
            };
            let neg = lo.map(|x| -x);
            a.push(row.iter().map(|e| e.shift(&neg)).collect());
            total_shift = total_shift.add(&lo);
        }

        let mut negate = false;
        let mut prev = one;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero(self.nvars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].shift(&total_shift);
        Ok(if negate { -det } else { det })
    }

    /// Determinant by cofactor expansion along the first row. Exponential in
    /// the size; kept as an independent reference for small matrices.
    pub fn determinant_cofactor(&self) -> Result<LaurentPoly, LaurentError> {
        self.check_square()?;
        let idx: Vec<usize> = (0..self.ncols).collect();
        Ok(self.cofactor(0, &idx))
    }

    fn cofactor(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        if cols.is_empty() {
            return LaurentPoly::one(self.nvars);
        }
        let mut acc = LaurentPoly::zero(self.nvars);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &self[(row, c)];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.cofactor(row + 1, &rest);
            if pos % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.nrows && j < self.ncols, "index out of bounds");
        &self.entries[i * self.ncols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.nrows && j < self.ncols, "index out of bounds");
        &mut self.entries[i * self.ncols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, nvars: usize) -> LaurentPoly {
        LaurentPoly::parse(s, nvars).unwrap()
    }

    #[test]
    fn empty_determinant_is_one() {
        let m = PolyMatrix::identity(0, 3);
        assert!(m.determinant().unwrap().is_one());
        assert!(m.determinant_cofactor().unwrap().is_one());
    }

    #[test]
    fn identity_minus_identity_is_singular() {
        let m = PolyMatrix::identity(4, 2).minus_identity();
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn two_by_two_formula() {
        let (a, b, c, d) = (p("t1", 2), p("t2 - 1", 2), p("t1^-1 + 3", 2), p("t2^-2", 2));
        let m = PolyMatrix::from_rows(
            vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]],
            2,
        );
        assert_eq!(m.determinant().unwrap(), &a * &d - &b * &c);
    }

    #[test]
    fn one_by_one_hopf_entry() {
        let m = PolyMatrix::from_rows(vec![vec![p("t1^-1*t2^-1", 2)]], 2).minus_identity();
        assert_eq!(m.determinant().unwrap(), p("t1^-1*t2^-1 - 1", 2));
    }

    #[test]
    fn pivoting_on_zero_diagonal() {
        let m = PolyMatrix::from_rows(
            vec![
                vec![p("0", 1), p("t1", 1), p("1", 1)],
                vec![p("t1^-1", 1), p("0", 1), p("2", 1)],
                vec![p("1", 1), p("1", 1), p("0", 1)],
            ],
            1,
        );
        assert_eq!(m.determinant().unwrap(), m.determinant_cofactor().unwrap());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = PolyMatrix::zeros(2, 3, 1);
        assert_eq!(
            m.determinant(),
            Err(LaurentError::NotSquare { rows: 2, cols: 3 })
        );
    }
}
