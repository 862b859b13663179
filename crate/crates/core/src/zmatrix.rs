//! Exact integer matrix algorithms: fraction-free determinants and
//! lattice-membership solving over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.at(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = BigInt::zero();
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

/// Solve `sum_i x_i * columns[i] = target` over Z, if possible.
///
/// Column-style Hermite reduction: integer column operations bring the
/// generator matrix to echelon form while the same operations are tracked on
/// the identity, then forward substitution with exact divisibility checks
/// recovers a preimage. Returns None when the target is outside the lattice.
pub fn solve_in_lattice(columns: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = columns.len();
    if k == 0 {
        return if target.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let m = target.len();
    assert!(columns.iter().all(|c| c.len() == m));

    // a: m x k generator matrix (columns generate the lattice);
    // u: k x k tracking matrix, initially identity, so a_orig * u = a holds.
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..k).map(|j| columns[j][i].clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let col_op = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        // column dst -= q * column src
        for row in a.iter_mut() {
            let v = &row[dst] - q * &row[src];
            row[dst] = v;
        }
        for row in u.iter_mut() {
            let v = &row[dst] - q * &row[src];
            row[dst] = v;
        }
    };
    let col_swap = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in u.iter_mut() {
            row.swap(x, y);
        }
    };

    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut lead = 0usize; // next column to place a pivot in
    for row in 0..m {
        if lead >= k {
            break;
        }
        // gcd-reduce the row across columns lead..k
        loop {
            let mut nonzero: Vec<usize> = (lead..k).filter(|&j| !a[row][j].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let j = nonzero[0];
                col_swap(&mut a, &mut u, lead, j);
                break;
            }
            // pick the column with the smallest nonzero magnitude as pivot
            nonzero.sort_by(|&x, &y| a[row][x].abs().cmp(&a[row][y].abs()));
            let p = nonzero[0];
            for &j in &nonzero[1..] {
                let q = a[row][j].div_floor(&a[row][p]);
                if !q.is_zero() {
                    col_op(&mut a, &mut u, j, p, &q);
                }
            }
        }
        if !a[row][lead].is_zero() {
            if a[row][lead].is_negative() {
                for r in a.iter_mut() {
                    let v = -&r[lead];
                    r[lead] = v;
                }
                for r in u.iter_mut() {
                    let v = -&r[lead];
                    r[lead] = v;
                }
            }
            pivot_rows.push(row);
            lead += 1;
        }
    }

    // Forward substitution: target must reduce to zero using pivot columns.
    let mut residue: Vec<BigInt> = target.to_vec();
    let mut y = vec![BigInt::zero(); k];
    for (col, &prow) in pivot_rows.iter().enumerate() {
        let piv = &a[prow][col];
        let (q, r) = residue[prow].div_rem(piv);
        if !r.is_zero() {
            return None;
        }
        for i in 0..m {
            let v = &residue[i] - &q * &a[i][col];
            residue[i] = v;
        }
        y[col] = q;
    }
    if residue.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // x = u * y
    let x: Vec<BigInt> = (0..k)
        .map(|i| (0..k).map(|j| &u[i][j] * &y[j]).sum())
        .collect();
    Some(x)
}
