//! Integer linear algebra: Smith normal form, solving modulo N, kernels
//! modulo N, lattice bases and quotients of nested lattices.
//!
//! Everything runs over `BigInt` so coefficient growth during elimination is
//! never a correctness concern at desk scale. Pivoting always selects the
//! absolutely smallest nonzero entry, which keeps intermediate entries small
//! and makes every output deterministic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense column-major-agnostic integer matrix (row index first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[BigInt]) {
        for i in 0..self.rows {
            self[(i, j)] = col[i].clone();
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !x[j].is_zero() {
                        acc += &self[(i, j)] * &x[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &IMat) -> IMat {
        assert_eq!(self.rows, other.rows);
        let mut m = IMat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of a Smith reduction `U * A * V = diag(d)`; `U` itself is never
/// materialized, only its action on a carried right-hand side and, when
/// requested, its inverse.
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub v: Option<IMat>,
    pub u_inv: Option<IMat>,
    pub rhs: Option<IMat>,
}

/// Smith normal form with the usual divisibility chain d1 | d2 | ... .
/// `rhs` columns are transformed alongside (they become `U * rhs`).
pub fn smith(mut a: IMat, mut rhs: Option<IMat>, want_v: bool, want_u_inv: bool) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut v = want_v.then(|| IMat::identity(n));
    let mut u_inv = want_u_inv.then(|| IMat::identity(m));

    let swap_rows = |a: &mut IMat,
                     rhs: &mut Option<IMat>,
                     u_inv: &mut Option<IMat>,
                     i: usize,
                     j: usize| {
        if i == j {
            return;
        }
        for c in 0..a.cols {
            let tmp = a[(i, c)].clone();
            a[(i, c)] = a[(j, c)].clone();
            a[(j, c)] = tmp;
        }
        if let Some(b) = rhs {
            for c in 0..b.cols {
                let tmp = b[(i, c)].clone();
                b[(i, c)] = b[(j, c)].clone();
                b[(j, c)] = tmp;
            }
        }
        if let Some(w) = u_inv {
            // inverse of a row swap is the same swap, applied as a column op
            for r in 0..w.rows {
                let tmp = w[(r, i)].clone();
                w[(r, i)] = w[(r, j)].clone();
                w[(r, j)] = tmp;
            }
        }
    };
    let swap_cols = |a: &mut IMat, v: &mut Option<IMat>, i: usize, j: usize| {
        if i == j {
            return;
        }
        for r in 0..a.rows {
            let tmp = a[(r, i)].clone();
            a[(r, i)] = a[(r, j)].clone();
            a[(r, j)] = tmp;
        }
        if let Some(w) = v {
            for r in 0..w.rows {
                let tmp = w[(r, i)].clone();
                w[(r, i)] = w[(r, j)].clone();
                w[(r, j)] = tmp;
            }
        }
    };
    // row_i -= q * row_j
    let add_row = |a: &mut IMat,
                   rhs: &mut Option<IMat>,
                   u_inv: &mut Option<IMat>,
                   i: usize,
                   j: usize,
                   q: &BigInt| {
        if q.is_zero() {
            return;
        }
        for c in 0..a.cols {
            let delta = q * &a[(j, c)];
            a[(i, c)] -= delta;
        }
        if let Some(b) = rhs {
            for c in 0..b.cols {
                let delta = q * &b[(j, c)];
                b[(i, c)] -= delta;
            }
        }
        if let Some(w) = u_inv {
            // (I - q e_ij)^-1 = I + q e_ij acting on columns: col_j += q * col_i
            for r in 0..w.rows {
                let delta = q * &w[(r, i)];
                w[(r, j)] += delta;
            }
        }
    };
    // col_i -= q * col_j
    let add_col = |a: &mut IMat, v: &mut Option<IMat>, i: usize, j: usize, q: &BigInt| {
        if q.is_zero() {
            return;
        }
        for r in 0..a.rows {
            let delta = q * &a[(r, j)];
            a[(r, i)] -= delta;
        }
        if let Some(w) = v {
            for r in 0..w.rows {
                let delta = q * &w[(r, j)];
                w[(r, i)] -= delta;
            }
        }
    };
    let negate_row = |a: &mut IMat, rhs: &mut Option<IMat>, u_inv: &mut Option<IMat>, i: usize| {
        for c in 0..a.cols {
            let v = -a[(i, c)].clone();
            a[(i, c)] = v;
        }
        if let Some(b) = rhs {
            for c in 0..b.cols {
                let v = -b[(i, c)].clone();
                b[(i, c)] = v;
            }
        }
        if let Some(w) = u_inv {
            for r in 0..w.rows {
                let v = -w[(r, i)].clone();
                w[(r, i)] = v;
            }
        }
    };

    let mut t = 0usize;
    while t < m.min(n) {
        // smallest nonzero |entry| in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[(i, j)].is_zero()
                    && pivot.map_or(true, |(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, &mut rhs, &mut u_inv, t, pi);
        swap_cols(&mut a, &mut v, t, pj);

        // clear row and column t; repeat while remainders pop up
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[(i, t)].is_zero() {
                    let q = div_round(&a[(i, t)], &a[(t, t)]);
                    add_row(&mut a, &mut rhs, &mut u_inv, i, t, &q);
                    if !a[(i, t)].is_zero() {
                        swap_rows(&mut a, &mut rhs, &mut u_inv, t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if !a[(t, j)].is_zero() {
                    let q = div_round(&a[(t, j)], &a[(t, t)]);
                    add_col(&mut a, &mut v, j, t, &q);
                    if !a[(t, j)].is_zero() {
                        swap_cols(&mut a, &mut v, t, j);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }

        // divisibility fix-up: pivot must divide the trailing submatrix
        let mut offender: Option<usize> = None;
        'scan: for i in t + 1..m {
            for j in t + 1..n {
                if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            let one = BigInt::from(-1);
            add_row(&mut a, &mut rhs, &mut u_inv, t, i, &one); // row_t += row_i
            continue; // redo position t
        }

        if a[(t, t)].is_negative() {
            negate_row(&mut a, &mut rhs, &mut u_inv, t);
        }
        t += 1;
    }

    let rank = t;
    let diag = (0..m.min(n)).map(|i| a[(i, i)].clone()).collect();
    Smith {
        diag,
        rank,
        v,
        u_inv,
        rhs,
    }
}

/// Rounded division used so remainders have at most half the pivot size.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = (a / b, a % b);
    if (&r * 2i32).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

pub fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor_ref(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.is_one() {
        Some(s0.mod_floor_ref(m))
    } else {
        None
    }
}

trait ModFloor {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m.abs()
        } else {
            r
        }
    }
}

/// One solution of `A x = b (mod modulus)`, deterministic under the solver's
/// canonical pivot order (free coordinates are zero, bound coordinates take
/// the minimal nonnegative residue). `None` if the system is inconsistent.
pub fn solve_mod(a: &IMat, b: &[BigInt], modulus: &BigInt) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.rows);
    let mut rhs = IMat::zero(a.rows, 1);
    for (i, v) in b.iter().enumerate() {
        rhs[(i, 0)] = v.clone();
    }
    let s = smith(a.clone(), Some(rhs), true, false);
    let c = s.rhs.unwrap();
    let v = s.v.unwrap();
    let n = a.cols;
    let mut y = vec![BigInt::zero(); n];
    for i in 0..a.rows {
        let ci = c[(i, 0)].mod_floor_ref(modulus);
        if i < s.rank {
            let si = &s.diag[i];
            let g = gcd(si, modulus);
            if !(&ci % &g).is_zero() {
                return None;
            }
            let m2 = modulus / &g;
            let inv = modinv(&(si / &g), &m2)?;
            y[i] = ((&ci / &g) * inv).mod_floor_ref(&m2);
        } else if !ci.is_zero() {
            return None;
        }
    }
    let x = v.apply(&y);
    Some(x.into_iter().map(|e| e.mod_floor_ref(modulus)).collect())
}

/// Generators of `{x : A x = 0 (mod modulus)}` as vectors of residues.
/// Together with `modulus * e_i` these generate the full preimage lattice.
pub fn kernel_mod(a: &IMat, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let s = smith(a.clone(), None, true, false);
    let v = s.v.unwrap();
    let n = a.cols;
    let mut gens = Vec::new();
    for i in 0..n {
        let scale = if i < s.rank {
            modulus / gcd(&s.diag[i], modulus)
        } else {
            BigInt::one()
        };
        if &scale % modulus == BigInt::zero() {
            continue; // scaled generator is 0 mod modulus
        }
        let col: Vec<BigInt> = (0..n)
            .map(|r| (&v[(r, i)] * &scale).mod_floor_ref(modulus))
            .collect();
        if col.iter().any(|e| !e.is_zero()) {
            gens.push(col);
        }
    }
    gens
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// Triangular basis of the column lattice of `gens` via unimodular column
/// operations; requires the lattice to have full rank (rows).
pub fn lattice_basis(gens: &IMat) -> IMat {
    let d = gens.rows;
    let mut a = gens.clone();
    let mut c = 0usize; // next basis column to fill
    for r in 0..d {
        loop {
            // smallest nonzero entry in row r among columns >= c
            let mut best: Option<usize> = None;
            for j in c..a.cols {
                if !a[(r, j)].is_zero()
                    && best.map_or(true, |bj| a[(r, j)].abs() < a[(r, bj)].abs())
                {
                    best = Some(j);
                }
            }
            let Some(bj) = best else { break };
            // swap into place
            if bj != c {
                for i in 0..d {
                    let tmp = a[(i, c)].clone();
                    a[(i, c)] = a[(i, bj)].clone();
                    a[(i, bj)] = tmp;
                }
            }
            // reduce the other columns
            let mut done = true;
            for j in c + 1..a.cols {
                if !a[(r, j)].is_zero() {
                    let q = div_round(&a[(r, j)], &a[(r, c)]);
                    for i in 0..d {
                        let delta = &q * &a[(i, c)];
                        a[(i, j)] -= delta;
                    }
                    if !a[(r, j)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !a[(r, c)].is_zero() {
            if a[(r, c)].is_negative() {
                for i in 0..d {
                    let v = -a[(i, c)].clone();
                    a[(i, c)] = v;
                }
            }
            c += 1;
            if c == d {
                break;
            }
        }
    }
    assert_eq!(c, d, "lattice generators do not have full rank");
    let mut basis = IMat::zero(d, d);
    for j in 0..d {
        basis.set_column(j, &a.column(j));
    }
    basis
}

/// Integer solution of `B x = b` for a full-rank square `B`; `None` when `b`
/// is outside the column lattice of `B`. Used as a lattice membership test.
pub fn solve_exact(b_mat: &IMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b_mat.rows, b_mat.cols);
    let mut rhs = IMat::zero(b_mat.rows, 1);
    for (i, v) in b.iter().enumerate() {
        rhs[(i, 0)] = v.clone();
    }
    let s = smith(b_mat.clone(), Some(rhs), true, false);
    let c = s.rhs.unwrap();
    let v = s.v.unwrap();
    if s.rank < b_mat.rows {
        return None; // not full rank; treat as non-member
    }
    let mut y = vec![BigInt::zero(); b_mat.cols];
    for i in 0..b_mat.rows {
        if (&c[(i, 0)] % &s.diag[i]).is_zero() {
            y[i] = &c[(i, 0)] / &s.diag[i];
        } else {
            return None;
        }
    }
    Some(v.apply(&y))
}

/// Structure of the finite quotient `L(big) / L(sub)` for nested full-rank
/// lattices: cyclic orders (including 1s) with matching basis columns of the
/// big lattice, so that representatives are the integer combinations
/// `sum c_i * basis_i` with `0 <= c_i < order_i`.
pub struct LatticeQuotient {
    pub orders: Vec<BigInt>,
    pub basis: IMat,
}

pub fn lattice_quotient(big: &IMat, sub_gens: &IMat) -> LatticeQuotient {
    let d = big.rows;
    assert_eq!(big.cols, d);
    // express sub generators in the big basis: big * C = sub_gens
    let s = smith(big.clone(), Some(sub_gens.clone()), true, false);
    assert_eq!(s.rank, d, "big lattice must have full rank");
    let carried = s.rhs.unwrap();
    let v = s.v.unwrap();
    let mut c = IMat::zero(d, sub_gens.cols);
    for j in 0..sub_gens.cols {
        let mut y = vec![BigInt::zero(); d];
        for i in 0..d {
            assert!(
                (&carried[(i, j)] % &s.diag[i]).is_zero(),
                "sub lattice is not contained in the big lattice"
            );
            y[i] = &carried[(i, j)] / &s.diag[i];
        }
        c.set_column(j, &v.apply(&y));
    }
    // SNF of C: quotient is generated by (big * U^-1) columns with the
    // diagonal entries as cyclic orders
    let sc = smith(c, None, false, true);
    let u_inv = sc.u_inv.unwrap();
    let mut basis = IMat::zero(d, d);
    let mut orders = Vec::with_capacity(d);
    for i in 0..d {
        let col = u_inv.column(i);
        basis.set_column(i, &big.apply(&col));
        let o = if i < sc.diag.len() {
            sc.diag[i].clone()
        } else {
            BigInt::zero()
        };
        assert!(!o.is_zero(), "quotient of full-rank nested lattices is finite");
        orders.push(o);
    }
    LatticeQuotient { orders, basis }
}

/// Nullity of a matrix over the prime field F_p (entries already reduced).
pub fn nullity_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows.len() {
            break;
        }
        let Some(pivot) = (row..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(row, pivot);
        let inv = pow_mod(rows[row][col], p - 2, p);
        for c in col..cols {
            rows[row][c] = mul_mod(rows[row][c], inv, p);
        }
        for r in 0..rows.len() {
            if r != row && rows[r][col] % p != 0 {
                let factor = rows[r][col];
                for c in col..cols {
                    let sub = mul_mod(factor, rows[row][c], p);
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        row += 1;
        rank += 1;
    }
    cols - rank
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    // deterministic Miller-Rabin for u64
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
