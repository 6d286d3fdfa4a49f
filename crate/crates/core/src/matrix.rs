//! Exact matrices over [`Scalar`] (rank, minors, kernels) and over
//! [`Poly`] (determinants).

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, VarSpace};
use crate::scalar::{Field, Scalar};
use std::collections::HashMap;
use std::sync::Arc;

/// Rectangular matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, field: Field, data: Vec<Scalar>) -> Result<ScalarMatrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::Incompatible("matrix entries in mixed fields".into()));
        }
        Ok(ScalarMatrix { rows, cols, field, data })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> ScalarMatrix {
        ScalarMatrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> ScalarMatrix {
        let mut m = ScalarMatrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Result<ScalarMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        ScalarMatrix::new(r, c, field, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut out = ScalarMatrix::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<ScalarMatrix> {
        for &i in rows {
            if i >= self.rows {
                return Err(Error::Selection(format!("row {i} out of range")));
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(Error::Selection(format!("column {j} out of range")));
            }
        }
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.at(i, j).clone()))
            .collect();
        ScalarMatrix::new(rows.len(), cols.len(), self.field, data)
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            // find pivot
            let pivot = (row..m.rows).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inverse().expect("pivot nonzero");
            for j in col..m.cols {
                let v = m.at(row, j).mul(&inv).unwrap();
                *m.at_mut(row, j) = v;
            }
            for i in 0..m.rows {
                if i != row && !m.at(i, col).is_zero() {
                    let factor = m.at(i, col).clone();
                    for j in col..m.cols {
                        let v = m.at(i, j).sub(&factor.mul(m.at(row, j)).unwrap()).unwrap();
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("det of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else { return Ok(self.field.zero()) };
            if p != col {
                m.swap_rows(col, p);
                det = det.neg();
            }
            let piv = m.at(col, col).clone();
            det = det.mul(&piv)?;
            let inv = piv.inverse()?;
            for i in col + 1..n {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).mul(&inv)?;
                for j in col..n {
                    let v = m.at(i, j).sub(&factor.mul(m.at(col, j))?)?;
                    *m.at_mut(i, j) = v;
                }
            }
        }
        Ok(det)
    }

    /// Determinant of the selected square submatrix; the empty selection
    /// gives 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Scalar> {
        if rows.len() != cols.len() {
            return Err(Error::Selection(format!(
                "minor needs equal row/column counts, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        if rows.len() > self.rows.min(self.cols) {
            return Err(Error::Selection("minor larger than the matrix".into()));
        }
        self.submatrix(rows, cols)?.det()
    }

    /// Basis of the right null space in deterministic form: each vector is
    /// scaled so its first nonzero entry is 1, ordered by that position.
    /// Returns the empty list when the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        // reduced row echelon form
        let mut m = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inverse().expect("pivot nonzero");
            for j in 0..m.cols {
                let v = m.at(row, j).mul(&inv).unwrap();
                *m.at_mut(row, j) = v;
            }
            for i in 0..m.rows {
                if i != row && !m.at(i, col).is_zero() {
                    let factor = m.at(i, col).clone();
                    for j in 0..m.cols {
                        let v = m.at(i, j).sub(&factor.mul(m.at(row, j)).unwrap()).unwrap();
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; m.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); m.cols];
            v[free] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(r, free).neg();
            }
            // normalize the first nonzero entry to 1
            if let Some(first) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[first].inverse().unwrap();
                for x in v.iter_mut() {
                    *x = x.mul(&inv).unwrap();
                }
            }
            basis.push(v);
        }
        basis.sort_by_key(|v| v.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX));
        basis
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length mismatch".into()));
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j])?)?;
                }
                Ok(acc)
            })
            .collect()
    }
}

/// Rectangular matrix of polynomials sharing one variable space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    space: Arc<VarSpace>,
    field: Field,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        space: Arc<VarSpace>,
        field: Field,
        entries: Vec<Poly>,
    ) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|p| *p.space().as_ref() != *space || p.field() != field) {
            return Err(Error::Incompatible("matrix entries in mixed contexts".into()));
        }
        Ok(PolyMatrix { rows, cols, space, field, entries })
    }

    pub fn zero(rows: usize, cols: usize, space: Arc<VarSpace>, field: Field) -> PolyMatrix {
        let entries = (0..rows * cols).map(|_| Poly::zero(space.clone(), field)).collect();
        PolyMatrix { rows, cols, space, field, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn space(&self) -> &Arc<VarSpace> {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Poly {
        &mut self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<PolyMatrix> {
        for &j in cols {
            if j >= self.cols {
                return Err(Error::Selection(format!("column {j} out of range")));
            }
        }
        let entries = (0..self.rows)
            .flat_map(|i| cols.iter().map(move |&j| self.at(i, j).clone()))
            .collect();
        PolyMatrix::new(self.rows, cols.len(), self.space.clone(), self.field, entries)
    }

    /// Exact determinant. Cofactor expansion with memoization over column
    /// subsets up to size 6 (fast on the sparse bidiagonal shapes used
    /// here), fraction-free Bareiss elimination beyond that.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("det of {}x{} matrix", self.rows, self.cols)));
        }
        if self.rows <= 6 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Determinant by expansion along rows, memoized on the column subset.
    pub fn det_cofactor(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("det of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(self.space.clone(), self.field));
        }
        if n > 32 {
            return Err(Error::Shape("cofactor determinant limited to 32 columns".into()));
        }
        let mut memo: HashMap<u32, Poly> = HashMap::new();
        memo.insert(0, Poly::one(self.space.clone(), self.field));
        self.det_rec(((1u64 << n) - 1) as u32, &mut memo)
    }

    fn det_rec(&self, mask: u32, memo: &mut HashMap<u32, Poly>) -> Result<Poly> {
        if let Some(p) = memo.get(&mask) {
            return Ok(p.clone());
        }
        let k = mask.count_ones() as usize;
        let row = k - 1; // expand along the last of the first k rows
        let mut acc = Poly::zero(self.space.clone(), self.field);
        let mut sign_pos = (k - 1) % 2 == 0;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = self.at(row, j);
            if !entry.is_zero() {
                let sub = self.det_rec(mask & !(1 << j), memo)?;
                let term = entry.mul(&sub)?;
                acc = if sign_pos { acc.add(&term)? } else { acc.sub(&term)? };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(mask, acc.clone());
        Ok(acc)
    }

    /// Fraction-free Bareiss elimination over the polynomial ring; all
    /// divisions are exact by construction.
    pub fn det_bareiss(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("det of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(self.space.clone(), self.field));
        }
        let mut m = self.clone();
        let mut sign_pos = true;
        let mut prev_pivot = Poly::one(self.space.clone(), self.field);
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !m.at(i, k).is_zero());
                match swap {
                    None => return Ok(Poly::zero(self.space.clone(), self.field)),
                    Some(i) => {
                        for j in 0..n {
                            let a = i * n + j;
                            let b = k * n + j;
                            m.entries.swap(a, b);
                        }
                        sign_pos = !sign_pos;
                    }
                }
            }
            let pivot = m.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot
                        .mul(m.at(i, j))?
                        .sub(&m.at(i, k).mul(m.at(k, j))?)?;
                    let q = num
                        .div_exact(&prev_pivot)
                        .ok_or_else(|| Error::Internal("Bareiss division not exact".into()))?;
                    *m.at_mut(i, j) = q;
                }
                *m.at_mut(i, k) = Poly::zero(self.space.clone(), self.field);
            }
            prev_pivot = pivot;
        }
        let d = m.at(n - 1, n - 1).clone();
        Ok(if sign_pos { d } else { d.neg() })
    }
}

/// Promote a scalar matrix row-set describing linear forms into form
/// polynomials in the x-block of `space`.
pub fn linear_form(space: &Arc<VarSpace>, coeffs: &[Scalar]) -> Poly {
    let field = coeffs.first().map(|c| c.field()).unwrap_or(Field::Q);
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (Monomial::var(space.dim(), j), c.clone()))
        .collect();
    Poly::from_terms(space.clone(), field, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use proptest::prelude::*;

    fn umat() -> ScalarMatrix {
        ScalarMatrix::from_i64_rows(Field::Q, &[vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3]])
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(umat().rank(), 2);
        assert_eq!(ScalarMatrix::zero(3, 2, Field::Q).rank(), 0);
        assert_eq!(ScalarMatrix::identity(4, Field::Q).rank(), 4);
    }

    #[test]
    fn minor_examples() {
        let u = umat();
        // rows {2,3}, cols {1,2} in 1-based labels
        let m = u.minor(&[1, 2], &[0, 1]).unwrap();
        assert_eq!(m, Field::Q.from_i64(1));
        assert_eq!(u.minor(&[], &[]).unwrap(), Field::Q.one());
        assert_eq!(u.minor(&[0], &[1]).unwrap(), Field::Q.zero());
        assert!(u.minor(&[0, 1], &[0]).is_err());
        assert!(u.minor(&[9], &[0]).is_err());
    }

    #[test]
    fn kernel_examples() {
        // columns are the §-style form family {x1..x4, L1, L2}
        let a = ScalarMatrix::from_i64_rows(
            Field::Q,
            &[
                vec![1, 0, 0, 0, 1, 0],
                vec![0, 1, 0, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 2],
                vec![0, 0, 0, 1, 1, 3],
            ],
        )
        .unwrap();
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 2);
        let want0: Vec<Scalar> = [1, 1, 1, 1, -1, 0].iter().map(|&v| Field::Q.from_i64(v)).collect();
        let want1: Vec<Scalar> = [0, 1, 2, 3, 0, -1].iter().map(|&v| Field::Q.from_i64(v)).collect();
        assert_eq!(basis[0], want0);
        assert_eq!(basis[1], want1);
        for v in &basis {
            assert!(a.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }

        assert!(ScalarMatrix::identity(3, Field::Q).kernel_basis().is_empty());

        let row = ScalarMatrix::from_i64_rows(Field::Q, &[vec![1, 1]]).unwrap();
        let want: Vec<Scalar> = [1, -1].iter().map(|&v| Field::Q.from_i64(v)).collect();
        assert_eq!(row.kernel_basis(), vec![want]);
    }

    #[test]
    fn poly_det_examples() {
        let sp = VarSpace::new(0, 2);
        let f = Field::Q;
        let t1 = parse_poly("T1", &sp, f).unwrap();
        let t2 = parse_poly("T2", &sp, f).unwrap();
        let z = Poly::zero(sp.clone(), f);
        let m = PolyMatrix::new(2, 2, sp.clone(), f, vec![t1.clone(), z.clone(), t2.neg(), t2.clone()])
            .unwrap();
        let expect = parse_poly("T1*T2", &sp, f).unwrap();
        assert_eq!(m.det().unwrap(), expect);
        assert_eq!(m.det_bareiss().unwrap(), expect);

        // two equal columns
        let m2 = PolyMatrix::new(2, 2, sp.clone(), f, vec![t1.clone(), t1.clone(), t2.clone(), t2]).unwrap();
        assert!(m2.det().unwrap().is_zero());

        let non_square = PolyMatrix::zero(2, 3, sp, f);
        assert!(non_square.det().is_err());
    }

    fn arb_entry() -> impl Strategy<Value = i64> {
        -3i64..4
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_transpose(rows in proptest::collection::vec(
            proptest::collection::vec(arb_entry(), 4), 3))
        {
            let m = ScalarMatrix::from_i64_rows(Field::Q, &rows).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_annihilate(rows in proptest::collection::vec(
            proptest::collection::vec(arb_entry(), 5), 3))
        {
            let m = ScalarMatrix::from_i64_rows(Field::Fp(101), &rows).unwrap();
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn det_routes_agree(vals in proptest::collection::vec(arb_entry(), 16)) {
            // polynomial matrix with entries a + b*T1 style
            let sp = VarSpace::new(1, 1);
            let f = Field::Q;
            let entries: Vec<Poly> = vals
                .chunks(1)
                .take(16)
                .map(|ch| {
                    let c = Poly::constant(sp.clone(), f.from_i64(ch[0]));
                    let t = Poly::var(sp.clone(), f, 1).scale(&f.from_i64(ch[0] % 2 + 1)).unwrap();
                    c.add(&t).unwrap()
                })
                .collect();
            let m = PolyMatrix::new(4, 4, sp, f, entries).unwrap();
            prop_assert_eq!(m.det_cofactor().unwrap(), m.det_bareiss().unwrap());
        }

        #[test]
        fn laplace_rows_consistent(vals in proptest::collection::vec(arb_entry(), 9)) {
            let m = ScalarMatrix::from_i64_rows(
                Field::Q,
                &[vals[0..3].to_vec(), vals[3..6].to_vec(), vals[6..9].to_vec()],
            )
            .unwrap();
            // expansion along each row must agree with Gaussian determinant
            let det = m.det().unwrap();
            for row in 0..3 {
                let mut acc = Field::Q.zero();
                for col in 0..3 {
                    let rows: Vec<usize> = (0..3).filter(|&i| i != row).collect();
                    let cols: Vec<usize> = (0..3).filter(|&j| j != col).collect();
                    let minor = m.minor(&rows, &cols).unwrap();
                    let mut term = m.at(row, col).mul(&minor).unwrap();
                    if (row + col) % 2 == 1 {
                        term = term.neg();
                    }
                    acc = acc.add(&term).unwrap();
                }
                prop_assert_eq!(acc, det.clone());
            }
        }
    }
}
