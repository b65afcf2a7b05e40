//! Dense arbitrary-precision integer matrices and Smith normal form.
//!
//! Everything downstream (saturations, quotient lattices, cokernels,
//! annihilators) reduces to the SNF computed here, so the decomposition
//! tracks the unimodular factors and their inverses.

use num::traits::{One, Signed, Zero};

use crate::rational::{Int, Rat};

/// Row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        IntMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| Int::from(v)));
        }
        IntMatrix::new(r, c, data)
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_cols(ambient: usize, cols: &[Vec<Int>]) -> Self {
        let mut m = IntMatrix::zero(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient, "column length mismatch");
            for i in 0..ambient {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    /// Builds the matrix whose rows are the given vectors.
    pub fn from_row_vectors(width: usize, rows: &[Vec<Int>]) -> Self {
        let mut m = IntMatrix::zero(rows.len(), width);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), width, "row length mismatch");
            for j in 0..width {
                m[(i, j)] = row[j].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn mul_vec_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec_rat");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| Rat::from_integer(self[(i, j)].clone()) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Selects a contiguous block of rows as a new matrix.
    pub fn row_block(&self, from: usize, to: usize) -> IntMatrix {
        let mut out = IntMatrix::zero(to - from, self.cols);
        for i in from..to {
            for j in 0..self.cols {
                out[(i - from, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn col_block(&self, from: usize, to: usize) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows, to - from);
        for i in 0..self.rows {
            for j in from..to {
                out[(i, j - from)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = Int::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn rank(&self) -> usize {
        self.snf().rank()
    }

    /// Smith normal form with unimodular factors and their inverses.
    pub fn snf(&self) -> SnfDecomposition {
        snf_impl(self)
    }

    /// Basis of the integer kernel `{x : A x = 0}`, as columns. The kernel
    /// of an integer matrix is automatically saturated.
    pub fn kernel(&self) -> IntMatrix {
        let snf = self.snf();
        let r = snf.rank();
        snf.v.col_block(r, self.cols)
    }

    /// One integer solution of `A x = b`, if any exists.
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let snf = self.snf();
        let ub = snf.u.mul_vec(b);
        let r = snf.rank();
        let mut y = vec![Int::zero(); self.cols];
        for i in 0..self.rows.min(self.cols) {
            let d = &snf.s[(i, i)];
            if i < r {
                if (&ub[i] % d).is_zero() {
                    y[i] = &ub[i] / d;
                } else {
                    return None;
                }
            }
        }
        if ub.iter().take(self.rows).skip(r).any(|item| !item.is_zero()) {
            return None;
        }
        Some(snf.v.mul_vec(&y))
    }

    /// Right inverse of a surjective map `Z^cols -> Z^rows`; `None` when the
    /// map is not surjective over the integers.
    pub fn right_inverse(&self) -> Option<IntMatrix> {
        let mut cols = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut e = vec![Int::zero(); self.rows];
            e[i] = Int::one();
            cols.push(self.solve(&e)?);
        }
        Some(IntMatrix::from_cols(self.cols, &cols))
    }

    /// Invariant factors of the cokernel `Z^rows / im(A)`.
    pub fn cokernel(&self) -> Cokernel {
        let snf = self.snf();
        let r = snf.rank();
        let torsion: Vec<Int> = (0..r)
            .map(|i| snf.s[(i, i)].clone())
            .filter(|d| !d.is_one())
            .collect();
        Cokernel {
            torsion,
            free_rank: self.rows - r,
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * a * v = s` with `u`, `v` unimodular and `s` diagonal, nonnegative,
/// each diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfDecomposition {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors, including the trailing zeros of a rank-deficient
    /// square-ish shape only while nonzero.
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Cokernel data: torsion invariant factors (each > 1) plus free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cokernel {
    pub torsion: Vec<Int>,
    pub free_rank: usize,
}

impl Cokernel {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<Int> {
        if !self.is_finite() {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

struct SnfState {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.s.cols() {
            let tmp = self.s[(a, j)].clone();
            self.s[(a, j)] = self.s[(b, j)].clone();
            self.s[(b, j)] = tmp;
        }
        for j in 0..self.u.cols() {
            let tmp = self.u[(a, j)].clone();
            self.u[(a, j)] = self.u[(b, j)].clone();
            self.u[(b, j)] = tmp;
        }
        // (E_swap)^-1 = E_swap acting on columns of u_inv.
        for i in 0..self.u_inv.rows() {
            let tmp = self.u_inv[(i, a)].clone();
            self.u_inv[(i, a)] = self.u_inv[(i, b)].clone();
            self.u_inv[(i, b)] = tmp;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.s.rows() {
            let tmp = self.s[(i, a)].clone();
            self.s[(i, a)] = self.s[(i, b)].clone();
            self.s[(i, b)] = tmp;
        }
        for i in 0..self.v.rows() {
            let tmp = self.v[(i, a)].clone();
            self.v[(i, a)] = self.v[(i, b)].clone();
            self.v[(i, b)] = tmp;
        }
        for j in 0..self.v_inv.cols() {
            let tmp = self.v_inv[(a, j)].clone();
            self.v_inv[(a, j)] = self.v_inv[(b, j)].clone();
            self.v_inv[(b, j)] = tmp;
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.s.cols() {
            let add = q * &self.s[(src, j)];
            self.s[(dst, j)] += add;
        }
        for j in 0..self.u.cols() {
            let add = q * &self.u[(src, j)];
            self.u[(dst, j)] += add;
        }
        // Inverse op on u_inv columns: col[src] -= q * col[dst].
        for i in 0..self.u_inv.rows() {
            let sub = q * &self.u_inv[(i, dst)];
            self.u_inv[(i, src)] -= sub;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.s.rows() {
            let add = q * &self.s[(i, src)];
            self.s[(i, dst)] += add;
        }
        for i in 0..self.v.rows() {
            let add = q * &self.v[(i, src)];
            self.v[(i, dst)] += add;
        }
        for j in 0..self.v_inv.cols() {
            let sub = q * &self.v_inv[(dst, j)];
            self.v_inv[(src, j)] -= sub;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.s.cols() {
            let neg = -self.s[(r, j)].clone();
            self.s[(r, j)] = neg;
        }
        for j in 0..self.u.cols() {
            let neg = -self.u[(r, j)].clone();
            self.u[(r, j)] = neg;
        }
        for i in 0..self.u_inv.rows() {
            let neg = -self.u_inv[(i, r)].clone();
            self.u_inv[(i, r)] = neg;
        }
    }
}

fn snf_impl(a: &IntMatrix) -> SnfDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut st = SnfState {
        s: a.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        u_inv: IntMatrix::identity(m),
        v_inv: IntMatrix::identity(n),
    };

    for k in 0..m.min(n) {
        loop {
            // Smallest nonzero |entry| in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    if st.s[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if st.s[(i, j)].abs() < st.s[(pi, pj)].abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // Trailing block is zero; done with the whole matrix.
                return finish(st);
            };
            st.swap_rows(k, pi);
            st.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..m {
                if !st.s[(i, k)].is_zero() {
                    let q = -(&st.s[(i, k)] / &st.s[(k, k)]);
                    st.add_row(i, k, &q);
                    if !st.s[(i, k)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..n {
                if !st.s[(k, j)].is_zero() {
                    let q = -(&st.s[(k, j)] / &st.s[(k, k)]);
                    st.add_col(j, k, &q);
                    if !st.s[(k, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any non-multiple into the working row.
            let mut folded = false;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if !(&st.s[(i, j)] % &st.s[(k, k)]).is_zero() {
                        st.add_row(k, i, &Int::one());
                        folded = true;
                        break 'scan;
                    }
                }
            }
            if !folded {
                break;
            }
        }
        if st.s[(k, k)].is_negative() {
            st.negate_row(k);
        }
    }
    finish(st)
}

fn finish(mut st: SnfState) -> SnfDecomposition {
    // A fully processed matrix can still carry negative diagonal entries if
    // the loop exited early on an all-zero trailing block.
    for k in 0..st.s.rows().min(st.s.cols()) {
        if st.s[(k, k)].is_negative() {
            st.negate_row(k);
        }
    }
    SnfDecomposition {
        u: st.u,
        s: st.s,
        v: st.v,
        u_inv: st.u_inv,
        v_inv: st.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use num::Signed;

    fn check_snf(a: &IntMatrix) {
        let snf = a.snf();
        // u a v = s by direct multiplication.
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s);
        // Unimodularity.
        assert_eq!(snf.u.det().abs(), int(1));
        assert_eq!(snf.v.det().abs(), int(1));
        assert!(snf.u.mul(&snf.u_inv).is_identity());
        assert!(snf.v.mul(&snf.v_inv).is_identity());
        // Diagonal shape, nonnegative, divisibility chain.
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero(), "off-diagonal {i},{j}");
                }
            }
        }
        let d = snf.diagonal();
        for w in d.windows(2) {
            assert!(!w[0].is_negative());
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility {w:?}");
            } else {
                assert!(w[1].is_zero(), "zero must trail");
            }
        }
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let snf = a.snf();
        assert!(snf.u.is_identity());
        assert!(snf.s.is_identity());
        assert!(snf.v.is_identity());
    }

    #[test]
    fn snf_zero_1x1() {
        let a = IntMatrix::from_rows_i64(&[vec![0]]);
        let snf = a.snf();
        assert!(snf.s.is_zero());
        check_snf(&a);
    }

    #[test]
    fn snf_diag_2_3_gives_1_6() {
        let a = IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 3]]);
        check_snf(&a);
        let snf = a.snf();
        assert_eq!(snf.diagonal(), vec![int(1), int(6)]);
    }

    #[test]
    fn snf_rectangular_and_rank() {
        let a = IntMatrix::from_rows_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        check_snf(&a);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        for j in 0..k.cols() {
            assert!(a.mul_vec(&k.col(j)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn snf_random_small_matrices() {
        // Deterministic pseudo-random scan, entries in [-5, 5], dims <= 5.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let r = (next() % 5 + 1) as usize;
            let c = (next() % 5 + 1) as usize;
            let data: Vec<Int> = (0..r * c)
                .map(|_| Int::from((next() % 11) as i64 - 5))
                .collect();
            let a = IntMatrix::new(r, c, data);
            check_snf(&a);
        }
    }

    #[test]
    fn solve_and_right_inverse() {
        let a = IntMatrix::from_rows_i64(&[vec![1, 1, 0], vec![0, 2, 1]]);
        let x = a.solve(&[int(3), int(5)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(3), int(5)]);
        let r = a.right_inverse().unwrap();
        assert!(a.mul(&r).is_identity());
        // 2x: Z -> Z is not surjective.
        let b = IntMatrix::from_rows_i64(&[vec![2]]);
        assert!(b.right_inverse().is_none());
        assert!(b.solve(&[int(3)]).is_none());
        assert_eq!(b.solve(&[int(4)]).unwrap(), vec![int(2)]);
    }

    #[test]
    fn cokernel_examples() {
        // identity -> trivial group
        assert!(IntMatrix::identity(3).cokernel().is_trivial());
        // [[2]] -> Z/2
        let c = IntMatrix::from_rows_i64(&[vec![2]]).cokernel();
        assert_eq!(c.torsion, vec![int(2)]);
        assert!(c.is_finite());
        assert_eq!(c.order().unwrap(), int(2));
        // column (1,0): Z -> Z^2, free rank 1, infinite
        let c = IntMatrix::from_rows_i64(&[vec![1], vec![0]]).cokernel();
        assert_eq!(c.free_rank, 1);
        assert!(!c.is_finite());
    }

    #[test]
    fn cokernel_order_equals_det_for_nonsingular() {
        let a = IntMatrix::from_rows_i64(&[vec![2, 1], vec![0, 3]]);
        assert_eq!(a.cokernel().order().unwrap(), a.det().abs());
        let b = IntMatrix::from_rows_i64(&[vec![4, 2], vec![2, 4]]);
        assert_eq!(b.cokernel().order().unwrap(), b.det().abs());
    }

    #[test]
    fn det_bareiss() {
        let a = IntMatrix::from_rows_i64(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, 5, 0]]);
        // det = 0*(0*0-3*5) - 1*(1*0-3*4) + 2*(1*5-0*4) = 12 + 10 = 22
        assert_eq!(a.det(), int(22));
    }
}
