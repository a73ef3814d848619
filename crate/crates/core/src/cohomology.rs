//! Coboundary solving and cohomology invariants via Smith normal form.
//!
//! `H^k(G, Z/N)` is computed as `ker(d_k) / im(d_{k-1})` with the modulus
//! folded into both lattices; solving `d(theta) = z` over `Z/(N*Q)` realizes
//! the U(1)-triviality heuristic with lift factor `Q` (a mu_N-cocycle that
//! dies in U(1) may need a coboundary witness in a larger root-of-unity
//! group; Q = |G| is the default bound and callers may raise it).

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cochain::{coboundary, decode_tuple, require_cocycle, tuple_index, Cochain};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{self, IMat};

/// Integer matrix of the degree-`k` coboundary `C^k -> C^{k+1}` for the
/// trivial action, rows indexed by `G^{k+1}` tuples, columns by `G^k` tuples.
pub(crate) fn coboundary_matrix(group: &FiniteGroup, k: usize) -> IMat {
    let n = group.order();
    let rows = n.pow((k + 1) as u32);
    let cols = n.pow(k as u32);
    let mut m = vec![vec![0i64; cols]; rows];
    let mut t = vec![0usize; k + 1];
    for (r, row) in m.iter_mut().enumerate() {
        decode_tuple(r, k + 1, n, &mut t);
        match k {
            0 => {} // trivial action: d(omega) = 0
            1 => {
                let (a, b) = (t[0], t[1]);
                row[b] += 1;
                row[a] += 1;
                row[group.mul(a, b)] -= 1;
            }
            2 => {
                let (a, b, c) = (t[0], t[1], t[2]);
                row[tuple_index(&[group.mul(a, b), c], n)] += 1;
                row[tuple_index(&[a, b], n)] += 1;
                row[tuple_index(&[a, group.mul(b, c)], n)] -= 1;
                row[tuple_index(&[b, c], n)] -= 1;
            }
            3 => {
                let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
                row[tuple_index(&[group.mul(a, b), c, d], n)] += 1;
                row[tuple_index(&[a, b, group.mul(c, d)], n)] += 1;
                row[tuple_index(&[b, c, d], n)] -= 1;
                row[tuple_index(&[a, group.mul(b, c), d], n)] -= 1;
                row[tuple_index(&[a, b, c], n)] -= 1;
            }
            _ => unreachable!("degrees above 3 are rejected before matrix assembly"),
        }
    }
    IMat::from_rows_i64(&m)
}

const SOLVE_ENTRY_BOUND: usize = 2_000_000;

/// Solves `d(theta) = z` over `Z/(N*Q)` after embedding `z` via `e -> Q*e`.
/// Returns a cochain of one degree lower with modulus `N*Q`, or `None` when
/// the lifted system is inconsistent. The solution is the canonical one
/// produced by the Smith pivot order.
pub fn solve_coboundary(z: &Cochain, lift_factor: u32) -> Result<Option<Cochain>> {
    if !(2..=3).contains(&z.degree()) {
        return Err(Error::UnsupportedDegree(z.degree()));
    }
    if lift_factor == 0 {
        return Err(Error::BadSpec("lift factor must be >= 1".into()));
    }
    require_cocycle(z)?;
    let group = z.group();
    let n = group.order();
    let k = z.degree();
    let rows = n.pow(k as u32);
    let cols = n.pow((k - 1) as u32);
    if rows * cols > SOLVE_ENTRY_BOUND {
        return Err(Error::ResourceBound(format!(
            "coboundary system {}x{} exceeds {} entries",
            rows, cols, SOLVE_ENTRY_BOUND
        )));
    }
    let a = coboundary_matrix(group, k - 1);
    let modulus = BigInt::from(z.modulus() as u64 * lift_factor as u64);
    let b: Vec<BigInt> = z
        .entries()
        .iter()
        .map(|&e| BigInt::from(e as u64 * lift_factor as u64))
        .collect();
    let Some(x) = linalg::solve_mod(&a, &b, &modulus) else {
        return Ok(None);
    };
    let m = (z.modulus() as u64 * lift_factor as u64) as u32;
    let entries: Vec<u32> = x
        .iter()
        .map(|v| v.to_u32().expect("residue fits in u32"))
        .collect();
    let theta = Cochain::new(Arc::clone(group), k - 1, m, entries)?;
    debug_assert_eq!(coboundary(&theta)?, z.lift(lift_factor));
    Ok(Some(theta))
}

const INVARIANT_ENTRY_BOUND: usize = 500_000;

/// Invariant factors of `H^k(G, Z/N)` for `k` in 1..=3, ascending under
/// divisibility, with trivial factors dropped (so the trivial group is `[]`).
pub fn cohomology_invariants(
    group: &Arc<FiniteGroup>,
    modulus: u32,
    k: usize,
) -> Result<Vec<u64>> {
    if !(1..=3).contains(&k) {
        return Err(Error::UnsupportedDegree(k));
    }
    if modulus == 0 {
        return Err(Error::BadSpec("modulus must be positive".into()));
    }
    let n = group.order();
    let dim = n.pow(k as u32);
    let rows_top = n.pow((k + 1) as u32);
    if rows_top * dim > INVARIANT_ENTRY_BOUND {
        return Err(Error::ResourceBound(format!(
            "coboundary matrix {}x{} exceeds {} entries",
            rows_top, dim, INVARIANT_ENTRY_BOUND
        )));
    }
    let m = BigInt::from(modulus);

    // cocycle lattice: preimage of ker(d_k mod N) in Z^dim
    let d_top = coboundary_matrix(group, k);
    let kernel_gens = linalg::kernel_mod(&d_top, &m);
    let mut gens = IMat::zero(dim, kernel_gens.len() + dim);
    for (j, g) in kernel_gens.iter().enumerate() {
        gens.set_column(j, g);
    }
    for i in 0..dim {
        gens[(i, kernel_gens.len() + i)] = m.clone();
    }
    let z_basis = linalg::lattice_basis(&gens);

    // coboundary lattice: im(d_{k-1}) + N Z^dim
    let d_bot = coboundary_matrix(group, k - 1);
    let mut b_gens = IMat::zero(dim, d_bot.cols + dim);
    for j in 0..d_bot.cols {
        b_gens.set_column(j, &d_bot.column(j));
    }
    for i in 0..dim {
        b_gens[(i, d_bot.cols + i)] = m.clone();
    }

    let q = linalg::lattice_quotient(&z_basis, &b_gens);
    let mut factors: Vec<u64> = q
        .orders
        .iter()
        .filter(|o| **o != BigInt::from(1))
        .map(|o| o.to_u64().expect("invariant factor fits in u64"))
        .collect();
    factors.sort_unstable();
    Ok(factors)
}
