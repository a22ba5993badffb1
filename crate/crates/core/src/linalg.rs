//! Exact integer and rational linear algebra.
//!
//! Everything here works on arbitrary-precision values. Matrices are dense and
//! row-major; the sizes this crate deals with stay in the low hundreds.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::LinalgError;

pub type Int = BigInt;
pub type Rat = BigRational;

/// A lattice vector (element of `N` or `M`).
pub type IntVec = Vec<Int>;
/// A vector over the rationals, entries always in lowest terms.
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}

pub fn to_rat_vec(v: &[Int]) -> RatVec {
    v.iter().map(rat_from_int).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Pairing of a rational functional with a lattice vector.
pub fn pair(u: &[Rat], v: &[Int]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in u.iter().zip(v) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * rat_from_int(y);
        }
    }
    acc
}

/// Dense integer matrix. Zero rows are allowed (an empty kernel basis, say);
/// the column count is always tracked.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<IntVec>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Shape {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMat { rows: r, cols, data })
    }

    /// Convenience constructor for small literal matrices.
    ///
    /// Panics if the rows are ragged or empty.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| int_vec(r)).collect()).expect("ragged literal matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[IntVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<IntVec, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot_int(self.row(i), v)).collect())
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Result<RatVec, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| pair(v, self.row(i))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j];
            if !v.is_zero() {
                let add = k * v;
                self.data[dst * self.cols + j] += add;
            }
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src];
            if !v.is_zero() {
                let add = k * v;
                self.data[i * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[r * self.cols + j];
            *v = -core::mem::take(v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + c];
            *v = -core::mem::take(v);
        }
    }

    /// Replaces rows (a, b) by (p*a + q*b, r*a + s*b).
    fn combine_rows(&mut self, a: usize, b: usize, [p, q, r, s]: [&Int; 4]) {
        for j in 0..self.cols {
            let x = self.data[a * self.cols + j].clone();
            let y = self.data[b * self.cols + j].clone();
            self.data[a * self.cols + j] = p * &x + q * &y;
            self.data[b * self.cols + j] = r * &x + s * &y;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, [p, q, r, s]: [&Int; 4]) {
        for i in 0..self.rows {
            let x = self.data[i * self.cols + a].clone();
            let y = self.data[i * self.cols + b].clone();
            self.data[i * self.cols + a] = p * &x + q * &y;
            self.data[i * self.cols + b] = r * &x + s * &y;
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Extended gcd with a nonnegative gcd: returns (g, x, y) with a*x + b*y = g.
fn xgcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `H = U * A`, `U`
/// unimodular, `H` in echelon form with positive pivots and the entries above
/// each pivot reduced into `[0, pivot)`.
pub fn hnf(a: &IntMat) -> (IntMat, IntMat) {
    let mut h = a.clone();
    let mut u = IntMat::identity(a.rows());
    let mut pivot_row = 0;
    for col in 0..h.cols() {
        if pivot_row == h.rows() {
            break;
        }
        // Fold every lower entry of this column into the pivot row with
        // unimodular 2x2 row operations.
        for r in pivot_row + 1..h.rows() {
            if h[(r, col)].is_zero() {
                continue;
            }
            let x = h[(pivot_row, col)].clone();
            let y = h[(r, col)].clone();
            let (g, s, t) = xgcd(&x, &y);
            let xg = &x / &g;
            let yg = &y / &g;
            let ny = -yg;
            let ops = [&s, &t, &ny, &xg];
            h.combine_rows(pivot_row, r, ops);
            u.combine_rows(pivot_row, r, ops);
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h[(pivot_row, col)].clone();
        for r in 0..pivot_row {
            let q = h[(r, col)].div_floor(&p);
            if !q.is_zero() {
                let k = -q;
                h.add_row_multiple(r, pivot_row, &k);
                u.add_row_multiple(r, pivot_row, &k);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `S = U * A * V` diagonal,
/// nonnegative, and each diagonal entry dividing the next.
pub fn snf(a: &IntMat) -> (IntMat, IntMat, IntMat) {
    let mut s = a.clone();
    let mut u = IntMat::identity(a.rows());
    let mut v = IntMat::identity(a.cols());
    let diag = a.rows().min(a.cols());
    let mut t = 0;
    while t < diag {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..s.rows() {
            for j in t..s.cols() {
                if s[(i, j)].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => s[(i, j)].abs() < s[(bi, bj)].abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut changed = false;
            for i in t + 1..s.rows() {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let x = s[(t, t)].clone();
                let y = s[(i, t)].clone();
                if y.is_multiple_of(&x) {
                    let q = -(&y / &x);
                    s.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    continue;
                }
                changed = true;
                let (g, a1, b1) = xgcd(&x, &y);
                let xg = &x / &g;
                let yg = &y / &g;
                let ny = -yg;
                let ops = [&a1, &b1, &ny, &xg];
                s.combine_rows(t, i, ops);
                u.combine_rows(t, i, ops);
            }
            for j in t + 1..s.cols() {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let x = s[(t, t)].clone();
                let y = s[(t, j)].clone();
                if y.is_multiple_of(&x) {
                    let q = -(&y / &x);
                    s.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    continue;
                }
                changed = true;
                let (g, a1, b1) = xgcd(&x, &y);
                let xg = &x / &g;
                let yg = &y / &g;
                let ny = -yg;
                let ops = [&a1, &b1, &ny, &xg];
                s.combine_cols(t, j, ops);
                v.combine_cols(t, j, ops);
            }
            if changed {
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            let p = s[(t, t)].clone();
            let mut offender = None;
            'scan: for i in t + 1..s.rows() {
                for j in t + 1..s.cols() {
                    if !s[(i, j)].is_multiple_of(&p) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = Int::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_col(t);
            v.negate_col(t);
        }
        t += 1;
    }
    (s, u, v)
}

/// Diagonal of the Smith form, zeros included, of length `min(rows, cols)`.
pub fn invariant_factors(a: &IntMat) -> IntVec {
    let (s, _, _) = snf(a);
    (0..a.rows().min(a.cols())).map(|i| s[(i, i)].clone()).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMat) -> Result<Int, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Int::one());
    }
    let mut m = a.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                return Ok(Int::zero());
            };
            m.swap_rows(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = v / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    Ok(sign * &m[(n - 1, n - 1)])
}

/// Z-basis (as rows, in Hermite normal form) of the integer kernel
/// `{v : A v = 0}`.
pub fn kernel_basis_z(a: &IntMat) -> IntMat {
    let (h, u) = hnf(&a.transpose());
    let rank = (0..h.rows()).filter(|&i| !h.row(i).iter().all(Zero::is_zero)).count();
    let basis: Vec<IntVec> = (rank..u.rows()).map(|i| u.row(i).to_vec()).collect();
    let k = IntMat::from_rows(a.cols(), basis).expect("kernel rows have matching width");
    if k.rows() == 0 {
        return k;
    }
    hnf(&k).0
}

/// Rank over the rationals.
pub fn rank_int(a: &IntMat) -> usize {
    let rows: Vec<RatVec> = (0..a.rows()).map(|i| to_rat_vec(a.row(i))).collect();
    rank_rat(&rows)
}

pub fn rank_rat(rows: &[RatVec]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row; those rows come first, in order.
pub fn rref(m: &mut [RatVec]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Some exact solution of `A x = b` over the rationals, or `None` when the
/// system is inconsistent. Free variables are set to zero.
pub fn solve_rat(a: &[RatVec], cols: usize, b: &[Rat]) -> Option<RatVec> {
    debug_assert_eq!(a.len(), b.len());
    let mut aug: Vec<RatVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    if aug.is_empty() {
        return Some(vec![Rat::zero(); cols]);
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Integer-matrix front end for [`solve_rat`].
pub fn solve_rational(a: &IntMat, b: &[Rat]) -> Result<Option<RatVec>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::Shape {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let rows: Vec<RatVec> = (0..a.rows()).map(|i| to_rat_vec(a.row(i))).collect();
    Ok(solve_rat(&rows, a.cols(), b))
}

/// Integer solution of `A x = b`, if one exists (via the Smith form).
pub fn solve_integer(a: &IntMat, b: &[Int]) -> Result<Option<IntVec>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::Shape {
            expected: a.rows(),
            found: b.len(),
        });
    }
    // U A V = S, so A x = b  <=>  S y = U b with x = V y.
    let (s, u, v) = snf(a);
    let ub = u.mul_vec(b)?;
    let zero = Int::zero();
    let mut y = vec![Int::zero(); a.cols()];
    for (i, c) in ub.iter().enumerate() {
        let d = if i < a.cols() { &s[(i, i)] } else { &zero };
        if d.is_zero() {
            if !c.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(v.mul_vec(&y)?))
}

/// Whether every row of `a` is an integer combination of the rows of `b`.
pub fn row_lattice_contains(b: &IntMat, a: &IntMat) -> bool {
    let bt = b.transpose();
    (0..a.rows()).all(|i| matches!(solve_integer(&bt, a.row(i)), Ok(Some(_))))
}

/// Equality of the integer row lattices of `a` and `b`.
pub fn same_row_lattice(a: &IntMat, b: &IntMat) -> bool {
    a.cols() == b.cols() && row_lattice_contains(a, b) && row_lattice_contains(b, a)
}

/// Divides out the content of a nonzero integer vector.
pub fn primitive(v: &[Int]) -> Result<IntVec, LinalgError> {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(LinalgError::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_from_rat(v: &[Rat]) -> Result<IntVec, LinalgError> {
    let l = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: IntVec = v.iter().map(|x| (x * rat_from_int(&l)).to_integer()).collect();
    primitive(&scaled)
}

/// Inverse of a unimodular integer matrix, or `None` when `|det| != 1`.
pub fn unimodular_inverse(a: &IntMat) -> Option<IntMat> {
    if !a.is_square() {
        return None;
    }
    let d = det(a).ok()?;
    if d.abs() != Int::one() {
        return None;
    }
    let n = a.rows();
    let rows: Vec<RatVec> = (0..n).map(|i| to_rat_vec(a.row(i))).collect();
    let mut inv = IntMat::zeros(n, n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        let x = solve_rat(&rows, n, &e)?;
        for i in 0..n {
            inv[(i, j)] = x[i].to_integer();
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64(rows)
    }

    fn is_hnf(h: &IntMat) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let lead = (0..h.cols()).find(|&j| !h[(i, j)].is_zero());
            match lead {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last_pivot.is_some_and(|p| c <= p) || !h[(i, c)].is_positive() {
                        return false;
                    }
                    for r in 0..i {
                        if h[(r, c)].is_negative() || h[(r, c)] >= h[(i, c)] {
                            return false;
                        }
                    }
                    last_pivot = Some(c);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_identity_and_swap() {
        let (h, u) = hnf(&IntMat::identity(2));
        assert_eq!(h, IntMat::identity(2));
        assert_eq!(u, IntMat::identity(2));
        let (h, u) = hnf(&m(&[&[0, 1], &[1, 0]]));
        assert_eq!(h, IntMat::identity(2));
        assert_eq!(u, m(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn hnf_rowspace_preserved() {
        let a = m(&[&[2, 4], &[0, 4]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(det(&u).unwrap().abs(), Int::one());
        assert!(is_hnf(&h));
        assert!(same_row_lattice(&a, &h));
        assert_eq!(h, m(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn snf_examples() {
        let (s, u, v) = snf(&IntMat::identity(3));
        assert_eq!(s, IntMat::identity(3));
        assert_eq!(u, IntMat::identity(3));
        assert_eq!(v, IntMat::identity(3));
        let a = m(&[&[2, 0], &[0, 3]]);
        let (s, u, v) = snf(&a);
        assert_eq!(s, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), s);
    }

    #[test]
    fn snf_of_sigma3_ray_matrix_is_free() {
        let a = m(&[
            &[-1, 0, -1, -1, 1, 0, 0],
            &[-1, -1, 0, -1, 0, 1, 0],
            &[-1, -1, -1, 0, 0, 0, 1],
        ]);
        let (s, u, v) = snf(&a);
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), s);
        let mut expected = IntMat::zeros(3, 7);
        for i in 0..3 {
            expected[(i, i)] = Int::one();
        }
        assert_eq!(s, expected);
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&IntMat::identity(4)).unwrap(), int(1));
        // columns a2, a3, b2
        let a = IntMat::from_columns(3, &[int_vec(&[0, 1, 0]), int_vec(&[0, 0, 1]), int_vec(&[-1, 0, -1])]);
        assert_eq!(det(&a).unwrap(), int(-1));
        assert_eq!(det(&m(&[&[1, 1], &[1, 1]])).unwrap(), int(0));
        assert!(matches!(
            det(&m(&[&[1, 2, 3]])),
            Err(LinalgError::NotSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn kernels() {
        let k = kernel_basis_z(&m(&[&[1, -1]]));
        assert_eq!(k, m(&[&[1, 1]]));
        let k = kernel_basis_z(&IntMat::identity(2));
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 2);
        let k = kernel_basis_z(&m(&[&[1, 0, -1], &[0, 1, -1]]));
        assert_eq!(k, m(&[&[1, 1, 1]]));
    }

    #[test]
    fn kernel_of_sigma3_ray_matrix() {
        let a = m(&[
            &[-1, 0, -1, -1, 1, 0, 0],
            &[-1, -1, 0, -1, 0, 1, 0],
            &[-1, -1, -1, 0, 0, 0, 1],
        ]);
        let k = kernel_basis_z(&a);
        let expected = m(&[
            &[1, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 0, 0, 1, 1],
            &[0, 0, 1, 0, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1, 0],
        ]);
        assert_eq!(k.rows(), 4);
        assert!(a.mul(&k.transpose()).unwrap().is_zero());
        assert!(same_row_lattice(&k, &expected));
    }

    #[test]
    fn rational_solving() {
        let x = solve_rational(&IntMat::identity(2), &[rat(1, 2), rat(3, 1)]).unwrap();
        assert_eq!(x, Some(vec![rat(1, 2), rat(3, 1)]));
        let x = solve_rational(&m(&[&[1, 1]]), &[rat(1, 1)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], rat(1, 1));
        let x = solve_rational(&m(&[&[1], &[1]]), &[rat(0, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, None);
    }

    #[test]
    fn integer_solving() {
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_integer(&a, &int_vec(&[4, 9])).unwrap(), Some(int_vec(&[2, 3])));
        assert_eq!(solve_integer(&a, &int_vec(&[1, 0])).unwrap(), None);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&int_vec(&[2, -4, 6])).unwrap(), int_vec(&[1, -2, 3]));
        assert_eq!(primitive(&int_vec(&[1, 0, 0])).unwrap(), int_vec(&[1, 0, 0]));
        assert_eq!(primitive(&int_vec(&[0, 0])), Err(LinalgError::ZeroVector));
        // b'_2 = b_2 / 2 generates the same ray as b_2
        let b2_half = vec![rat(-1, 2), rat(0, 1), rat(-1, 2)];
        assert_eq!(primitive_from_rat(&b2_half).unwrap(), int_vec(&[-1, 0, -1]));
    }

    #[test]
    fn unimodular_inverses() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = unimodular_inverse(&a).unwrap();
        assert_eq!(a.mul(&inv).unwrap(), IntMat::identity(2));
        assert!(unimodular_inverse(&m(&[&[2, 0], &[0, 1]])).is_none());
    }
}
