//! Module categories over the categorified twisted group algebra as
//! `(H, theta)` labels: a subgroup `H` and a normalized 2-cochain with
//! `d(theta) = alpha|_H` at the working modulus `N * Q`.
//!
//! Enumeration works on the affine solution set of the linear system over
//! `Z/(N*Q)`, quotiented by the sublattice of cocycles that become
//! coboundaries after a further lift by `Q` (the U(1)-triviality heuristic)
//! and by conjugation under the normalizer. Everything runs through Smith
//! normal form; no random search.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cochain::{coboundary, restrict, Cochain};
use crate::cohomology::solve_coboundary;
use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, normalizer, FiniteGroup, SubgroupRef};
use crate::linalg::{self, IMat};

/// A module-category label: a subgroup together with a trivializing
/// 2-cochain for the restricted 3-cocycle, at the lifted modulus.
#[derive(Clone, Debug)]
pub struct ModuleCategoryLabel {
    pub subgroup: SubgroupRef,
    /// Normalized cochain on `subgroup.as_group()` with modulus `N * Q`.
    pub theta: Cochain,
}

impl ModuleCategoryLabel {
    /// `d(theta) = alpha|_H` exactly at the working modulus.
    pub fn is_valid(&self, alpha: &Cochain, lift_factor: u32) -> Result<bool> {
        if self.theta.degree() != 2 {
            return Ok(false);
        }
        let restricted = restrict(alpha, &self.subgroup)?;
        if self.theta.modulus() != restricted.modulus() * lift_factor
            || self.theta.group().order() != self.subgroup.order()
        {
            return Ok(false);
        }
        Ok(coboundary(&self.theta)? == restricted.lift(lift_factor))
    }
}

/// Whether any `theta` with `d(theta) = alpha|_H` exists at the given lift
/// factor (defaulting to `|G|` in the CLI).
pub fn obstruction(
    alpha: &Cochain,
    h: &SubgroupRef,
    lift_factor: u32,
) -> Result<bool> {
    let restricted = restrict(alpha, h)?;
    Ok(solve_coboundary(&restricted, lift_factor)?.is_some())
}

const ORDER_BOUND: usize = 16;
const CLASS_BOUND: u64 = 4096;

/// Free coordinates of a normalized 2-cochain on a group of order `n`:
/// pairs with both arguments nonzero, indexed `(a-1)*(n-1) + (b-1)`.
fn free_index(a: usize, b: usize, n: usize) -> Option<usize> {
    (a != 0 && b != 0).then(|| (a - 1) * (n - 1) + (b - 1))
}

/// Degree-2 coboundary matrix restricted to normalized cochains: all `n^3`
/// rows, columns only for the free coordinates.
fn d2_matrix_normalized(group: &FiniteGroup) -> IMat {
    let n = group.order();
    let d_free = (n - 1) * (n - 1);
    let rows = n * n * n;
    let mut m = vec![vec![0i64; d_free]; rows];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let row = &mut m[(a * n + b) * n + c];
                let mut bump = |x: usize, y: usize, sign: i64| {
                    if let Some(idx) = free_index(x, y, n) {
                        row[idx] += sign;
                    }
                };
                bump(group.mul(a, b), c, 1);
                bump(a, b, 1);
                bump(a, group.mul(b, c), -1);
                bump(b, c, -1);
            }
        }
    }
    IMat::from_rows_i64(&m)
}

/// Degree-1 coboundary matrix on normalized cochains: rows are the free
/// 2-coordinates, columns the nonidentity elements.
fn d1_matrix_normalized(group: &FiniteGroup) -> IMat {
    let n = group.order();
    let d_free = (n - 1) * (n - 1);
    let mut m = vec![vec![0i64; n - 1]; d_free];
    for a in 1..n {
        for b in 1..n {
            let row = &mut m[free_index(a, b, n).unwrap()];
            row[a - 1] += 1;
            row[b - 1] += 1;
            let ab = group.mul(a, b);
            if ab != 0 {
                row[ab - 1] -= 1;
            }
        }
    }
    IMat::from_rows_i64(&m)
}

fn theta_from_free(group: Arc<FiniteGroup>, modulus: u32, free: &[BigInt]) -> Cochain {
    let n = group.order();
    let mut entries = vec![0u32; n * n];
    for a in 1..n {
        for b in 1..n {
            let v = &free[free_index(a, b, n).unwrap()];
            entries[a * n + b] = v.to_u32().expect("residue fits");
        }
    }
    Cochain::new(group, 2, modulus, entries).expect("table entries reduced")
}

fn reduce_mod(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    v.iter()
        .map(|x| {
            let r = x % m;
            if r < BigInt::zero() {
                r + m
            } else {
                r
            }
        })
        .collect()
}

/// Per-subgroup enumeration state: the canonical solution plus the quotient
/// of the cocycle lattice by the heuristically-trivial sublattice.
struct ThetaClasses {
    theta0: Vec<BigInt>,
    basis: IMat,
    orders: Vec<u64>,
    k_basis: IMat,
}

fn theta_classes(
    h_group: &Arc<FiniteGroup>,
    target: &Cochain,
    modulus: u64,
    lift_factor: u32,
) -> Result<Option<ThetaClasses>> {
    let n = h_group.order();
    let d_free = (n - 1) * (n - 1);
    let m_big = BigInt::from(modulus);

    let d2 = d2_matrix_normalized(h_group);
    let b: Vec<BigInt> = target
        .entries()
        .iter()
        .map(|&e| BigInt::from(e))
        .collect();
    let Some(theta0) = linalg::solve_mod(&d2, &b, &m_big) else {
        return Ok(None);
    };
    if d_free == 0 {
        return Ok(Some(ThetaClasses {
            theta0,
            basis: IMat::zero(0, 0),
            orders: vec![],
            k_basis: IMat::zero(0, 0),
        }));
    }

    // cocycle lattice Z = {z : d2 z = 0 mod M} + M Z^d
    let kernel_gens = linalg::kernel_mod(&d2, &m_big);
    let mut z_gens = IMat::zero(d_free, kernel_gens.len() + d_free);
    for (j, g) in kernel_gens.iter().enumerate() {
        z_gens.set_column(j, g);
    }
    for i in 0..d_free {
        z_gens[(i, kernel_gens.len() + i)] = m_big.clone();
    }
    let z_basis = linalg::lattice_basis(&z_gens);

    // heuristically-trivial sublattice K = {z : Q z in im(d1) + MQ Z^d}
    let mq = BigInt::from(modulus * lift_factor as u64);
    let d1 = d1_matrix_normalized(h_group);
    let mut b_gens = IMat::zero(d_free, d1.cols + d_free);
    for j in 0..d1.cols {
        b_gens.set_column(j, &d1.column(j));
    }
    for i in 0..d_free {
        b_gens[(i, d1.cols + i)] = mq.clone();
    }
    let b_basis = linalg::lattice_basis(&b_gens);
    let q_big = BigInt::from(lift_factor);
    let w_gens = linalg::kernel_mod(&b_basis, &q_big);
    let mut k_gens = IMat::zero(d_free, d_free + w_gens.len());
    for j in 0..d_free {
        k_gens.set_column(j, &b_basis.column(j));
    }
    for (j, w) in w_gens.iter().enumerate() {
        let img = b_basis.apply(w);
        let col: Vec<BigInt> = img.iter().map(|x| x / &q_big).collect();
        k_gens.set_column(d_free + j, &col);
    }
    let k_basis = linalg::lattice_basis(&k_gens);

    let quotient = linalg::lattice_quotient(&z_basis, &k_basis);
    let orders: Vec<u64> = quotient
        .orders
        .iter()
        .map(|o| o.to_u64().expect("class order fits in u64"))
        .collect();
    let class_count: u64 = orders.iter().product();
    if class_count > CLASS_BOUND {
        return Err(Error::ResourceBound(format!(
            "{} theta classes exceed the bound {}",
            class_count, CLASS_BOUND
        )));
    }
    Ok(Some(ThetaClasses {
        theta0,
        basis: quotient.basis,
        orders,
        k_basis,
    }))
}

/// One label per equivalence class of `(H, theta)` pairs: `H` up to
/// conjugacy, `theta` up to heuristically-trivial cocycles and up to
/// normalizer conjugation (applied only where the conjugate solves the same
/// restricted system). Deterministic: subgroup classes by (order, members),
/// thetas by their table.
pub fn enumerate_indecomposables(
    group: &Arc<FiniteGroup>,
    alpha: &Cochain,
    lift_factor: u32,
) -> Result<Vec<ModuleCategoryLabel>> {
    if group.order() > ORDER_BOUND {
        return Err(Error::OrderBound {
            order: group.order(),
            bound: ORDER_BOUND,
        });
    }
    if lift_factor == 0 {
        return Err(Error::BadSpec("lift factor must be >= 1".into()));
    }
    let modulus = alpha.modulus() as u64 * lift_factor as u64;
    let mut labels = Vec::new();

    for class in enumerate_subgroups(group, Some(ORDER_BOUND))? {
        let h = &class[0];
        let h_group = h.as_group();
        let restricted = restrict(alpha, h)?;
        let target = restricted.lift(lift_factor);
        let Some(classes) = theta_classes(&h_group, &target, modulus, lift_factor)? else {
            continue;
        };

        let n = h_group.order();
        let m_big = BigInt::from(modulus);
        // representatives of the theta classes as free-coordinate vectors
        let active: Vec<usize> = (0..classes.orders.len())
            .filter(|&i| classes.orders[i] > 1)
            .collect();
        let mut reps: Vec<Vec<BigInt>> = Vec::new();
        let mut combo = vec![0u64; active.len()];
        loop {
            let mut vec = classes.theta0.clone();
            for (pos, &i) in active.iter().enumerate() {
                if combo[pos] != 0 {
                    let col = classes.basis.column(i);
                    for (r, c) in vec.iter_mut().zip(col) {
                        *r += c * BigInt::from(combo[pos]);
                    }
                }
            }
            reps.push(reduce_mod(&vec, &m_big));
            // odometer over the class orders
            let mut pos = 0;
            loop {
                if pos == active.len() {
                    break;
                }
                combo[pos] += 1;
                if combo[pos] < classes.orders[active[pos]] {
                    break;
                }
                combo[pos] = 0;
                pos += 1;
            }
            if pos == active.len() {
                break;
            }
        }

        // normalizer conjugation merges classes when the conjugate solves
        // the same system (always, when alpha restricts invariantly)
        let nm = normalizer(group, h);
        let mut parent: Vec<usize> = (0..reps.len()).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        if n > 1 {
            for &g in nm.members() {
                if g == 0 {
                    continue;
                }
                let ginv = group.inv(g);
                // position map x -> g^-1 x g in local indices
                let conj_pos: Vec<usize> = (0..n)
                    .map(|x| {
                        let xg = h.members()[x];
                        h.position(group.conj(ginv, xg)).expect("normalizer")
                    })
                    .collect();
                for (i, rep) in reps.iter().enumerate() {
                    // conjugate of the full theta in free coordinates
                    let mut conj = vec![BigInt::zero(); rep.len()];
                    let mut solves = true;
                    for a in 1..n {
                        for bx in 1..n {
                            let (ca, cb) = (conj_pos[a], conj_pos[bx]);
                            let idx = free_index(a, bx, n).unwrap();
                            if ca == 0 || cb == 0 {
                                // conjugation fixes the identity, so this
                                // cannot happen for a, b nonzero
                                solves = false;
                                break;
                            }
                            conj[idx] = rep[free_index(ca, cb, n).unwrap()].clone();
                        }
                    }
                    if !solves {
                        continue;
                    }
                    // does the conjugate solve d theta = target?
                    let theta_c = theta_from_free(Arc::clone(&h_group), modulus as u32, &conj);
                    if coboundary(&theta_c)? != target {
                        continue;
                    }
                    for (j, other) in reps.iter().enumerate() {
                        if find(&mut parent, i) == find(&mut parent, j) {
                            continue;
                        }
                        let delta: Vec<BigInt> = conj
                            .iter()
                            .zip(other)
                            .map(|(x, y)| x - y)
                            .collect();
                        if classes.k_basis.rows > 0
                            && linalg::solve_exact(&classes.k_basis, &delta).is_some()
                        {
                            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                            parent[ri] = rj;
                        }
                    }
                }
            }
        }

        // canonical label per orbit: lexicographically smallest theta table
        let mut orbit_best: std::collections::BTreeMap<usize, Vec<BigInt>> = Default::default();
        for i in 0..reps.len() {
            let root = find(&mut parent, i);
            let entry = orbit_best.entry(root).or_insert_with(|| reps[i].clone());
            if reps[i] < *entry {
                *entry = reps[i].clone();
            }
        }
        for rep in orbit_best.into_values() {
            let theta = theta_from_free(Arc::clone(&h_group), modulus as u32, &rep);
            labels.push(ModuleCategoryLabel {
                subgroup: h.clone(),
                theta,
            });
        }
    }

    labels.sort_by(|a, b| {
        (a.subgroup.order(), a.subgroup.members(), a.theta.entries()).cmp(&(
            b.subgroup.order(),
            b.subgroup.members(),
            b.theta.entries(),
        ))
    });
    Ok(labels)
}

/// Induction descriptor: the label plus its simple-object count `[G : H]`.
#[derive(Clone, Debug)]
pub struct InducedDescriptor {
    pub label: ModuleCategoryLabel,
    pub simple_count: usize,
}

/// Induces a label to the ambient group; the count is the subgroup index.
pub fn induce(
    alpha: &Cochain,
    lift_factor: u32,
    label: &ModuleCategoryLabel,
) -> Result<InducedDescriptor> {
    if !label.is_valid(alpha, lift_factor)? {
        return Err(Error::Structural(
            "label does not trivialize the restricted cocycle".into(),
        ));
    }
    Ok(InducedDescriptor {
        label: label.clone(),
        simple_count: label.subgroup.index_in_parent(),
    })
}

/// A decomposition into induced labels with multiplicities.
#[derive(Clone, Debug, Default)]
pub struct DecompositionReport {
    pub items: Vec<(ModuleCategoryLabel, usize)>,
}

impl DecompositionReport {
    pub fn total_simple_count(&self) -> usize {
        self.items
            .iter()
            .map(|(label, mult)| mult * label.subgroup.index_in_parent())
            .sum()
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionVerdict {
    pub valid: bool,
    pub total: usize,
    /// Indices of items whose labels fail their invariant.
    pub invalid_items: Vec<usize>,
}

/// Checks every label's invariant and the total simple-object count.
pub fn verify_decomposition(
    alpha: &Cochain,
    lift_factor: u32,
    report: &DecompositionReport,
    expected_total: usize,
) -> Result<DecompositionVerdict> {
    let mut invalid_items = Vec::new();
    for (i, (label, _)) in report.items.iter().enumerate() {
        if !label.is_valid(alpha, lift_factor)? {
            invalid_items.push(i);
        }
    }
    let total = report.total_simple_count();
    Ok(DecompositionVerdict {
        valid: invalid_items.is_empty() && total == expected_total,
        total,
        invalid_items,
    })
}

/// Subgroup conjugacy classes admitting a label, with their class counts;
/// used by reports and tests.
pub fn label_census(
    group: &Arc<FiniteGroup>,
    alpha: &Cochain,
    lift_factor: u32,
) -> Result<Vec<(Vec<usize>, usize)>> {
    let labels = enumerate_indecomposables(group, alpha, lift_factor)?;
    let mut census: Vec<(Vec<usize>, usize)> = Vec::new();
    for label in &labels {
        let members = label.subgroup.members().to_vec();
        match census.iter_mut().find(|(m, _)| *m == members) {
            Some((_, c)) => *c += 1,
            None => census.push((members, 1)),
        }
    }
    Ok(census)
}

#[allow(dead_code)]
fn members_set(h: &SubgroupRef) -> BTreeSet<usize> {
    h.members().iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{random_normalized, standard_cyclic_3cocycle};
    use crate::group::load_group;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn v4() -> Arc<FiniteGroup> {
        load_group("product:(cyclic:2,cyclic:2)").unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    #[test]
    fn obstruction_trivial_subgroup_always_passes() {
        let alpha = standard_cyclic_3cocycle(4, 1);
        let h = SubgroupRef::trivial(Arc::clone(alpha.group()));
        assert!(obstruction(&alpha, &h, 4).unwrap());
    }

    #[test]
    fn obstruction_z4_generator_on_index_two_subgroup() {
        // oracle first: exhaustive scan over all full theta tables mod 16
        // on the order-2 subgroup; no theta satisfies d theta = lift(alpha)
        let alpha = standard_cyclic_3cocycle(4, 1);
        let z4 = Arc::clone(alpha.group());
        let h = SubgroupRef::new(Arc::clone(&z4), vec![0, 2]).unwrap();
        let target = restrict(&alpha, &h).unwrap().lift(4);
        let h_group = h.as_group();
        let mut found = false;
        for code in 0u64..16u64.pow(4) {
            let mut c = code;
            let mut entries = vec![0u32; 4];
            for e in entries.iter_mut() {
                *e = (c % 16) as u32;
                c /= 16;
            }
            let theta = Cochain::new(Arc::clone(&h_group), 2, 16, entries).unwrap();
            if coboundary(&theta).unwrap() == target {
                found = true;
                break;
            }
        }
        assert!(!found, "exhaustive oracle: system is inconsistent");
        assert!(!obstruction(&alpha, &h, 4).unwrap());
    }

    #[test]
    fn global_coboundary_passes_every_subgroup() {
        let g = s3();
        let theta0 = random_normalized(Arc::clone(&g), 2, 4, 21).unwrap();
        let alpha = coboundary(&theta0).unwrap();
        for class in enumerate_subgroups(&g, None).unwrap() {
            for h in class {
                assert!(obstruction(&alpha, &h, 6).unwrap());
            }
        }
    }

    #[test]
    fn enumerate_z2_untwisted() {
        let g = z(2);
        let alpha = Cochain::zero(Arc::clone(&g), 3, 1);
        let labels = enumerate_indecomposables(&g, &alpha, 2).unwrap();
        assert_eq!(labels.len(), 2);
        assert_eq!(labels[0].subgroup.members(), &[0]);
        assert_eq!(labels[1].subgroup.members(), &[0, 1]);
        assert!(labels.iter().all(|l| l.theta.is_zero()));
        for l in &labels {
            assert!(l.is_valid(&alpha, 2).unwrap());
        }
    }

    #[test]
    fn enumerate_z2_twisted() {
        let alpha = standard_cyclic_3cocycle(2, 1);
        let g = Arc::clone(alpha.group());
        let labels = enumerate_indecomposables(&g, &alpha, 2).unwrap();
        assert_eq!(labels.len(), 1);
        assert_eq!(labels[0].subgroup.members(), &[0]);
    }

    #[test]
    fn enumerate_z4_generator() {
        let alpha = standard_cyclic_3cocycle(4, 1);
        let g = Arc::clone(alpha.group());
        let labels = enumerate_indecomposables(&g, &alpha, 4).unwrap();
        assert_eq!(labels.len(), 1);
        assert_eq!(labels[0].subgroup.members(), &[0]);
    }

    #[test]
    fn enumerate_v4_untwisted_with_oracle() {
        let g = v4();
        // oracle: count theta classes on H = V4 directly. Normalized
        // 2-cochains mod 4 with d theta = 0, modulo those whose lift by 4
        // is a coboundary mod 16.
        let h_group = g.clone();
        let mut cocycles = 0u64;
        for code in 0u64..4u64.pow(9) {
            let mut c = code;
            let mut entries = vec![0u32; 16];
            for a in 1..4 {
                for b in 1..4 {
                    entries[a * 4 + b] = (c % 4) as u32;
                    c /= 4;
                }
            }
            let theta = Cochain::new(Arc::clone(&h_group), 2, 4, entries).unwrap();
            if coboundary(&theta).unwrap().is_zero() {
                cocycles += 1;
            }
        }
        // trivial-after-lift subgroup: images d(eta)/4 of eta mod 16 with
        // d(eta) divisible by 4
        let mut trivial: BTreeSet<Vec<u32>> = BTreeSet::new();
        for code in 0u64..16u64.pow(3) {
            let mut c = code;
            let mut entries = vec![0u32; 4];
            for e in entries.iter_mut().skip(1) {
                *e = (c % 16) as u32;
                c /= 16;
            }
            let eta = Cochain::new(Arc::clone(&h_group), 1, 16, entries).unwrap();
            let d = coboundary(&eta).unwrap();
            if d.entries().iter().all(|&e| e % 4 == 0) {
                trivial.insert(d.entries().iter().map(|&e| e / 4).collect());
            }
        }
        let classes = cocycles / trivial.len() as u64;
        assert_eq!(classes, 2, "oracle: two theta classes on V4");

        let alpha = Cochain::zero(Arc::clone(&g), 3, 1);
        let labels = enumerate_indecomposables(&g, &alpha, 4).unwrap();
        // 1 (trivial) + 3 (three Z/2 subgroups, one class each) + 2 (V4)
        assert_eq!(labels.len(), 6);
        let census = label_census(&g, &alpha, 4).unwrap();
        assert_eq!(census.len(), 5);
        assert_eq!(census.iter().map(|(_, c)| c).sum::<usize>(), 6);
        assert_eq!(census.last().unwrap().1, 2, "V4 itself carries 2 classes");
        for l in &labels {
            assert!(l.is_valid(&alpha, 4).unwrap());
        }
    }

    #[test]
    fn enumerate_cyclic_and_s3_untwisted() {
        // Schur multipliers of 1, Z/2, Z/4, Z/3, S3 are all trivial, so the
        // label count equals the subgroup class count
        let z4 = z(4);
        let alpha = Cochain::zero(Arc::clone(&z4), 3, 1);
        assert_eq!(enumerate_indecomposables(&z4, &alpha, 4).unwrap().len(), 3);

        let g = s3();
        let alpha = Cochain::zero(Arc::clone(&g), 3, 1);
        let labels = enumerate_indecomposables(&g, &alpha, 6).unwrap();
        assert_eq!(labels.len(), 4);
    }

    #[test]
    fn enumerate_d4_untwisted() {
        // 8 subgroup classes; the two V4s and D4 itself have Schur
        // multiplier Z/2, all other classes are trivial: 11 labels
        let g = load_group("dihedral:4").unwrap();
        let alpha = Cochain::zero(Arc::clone(&g), 3, 1);
        let labels = enumerate_indecomposables(&g, &alpha, 8).unwrap();
        let census = label_census(&g, &alpha, 8).unwrap();
        assert_eq!(census.len(), 8, "eight subgroup conjugacy classes");
        assert_eq!(labels.len(), 11);
        let two_class_subgroups: Vec<usize> = census
            .iter()
            .filter(|(_, c)| *c == 2)
            .map(|(m, _)| m.len())
            .collect();
        assert_eq!(two_class_subgroups, vec![4, 4, 8]);
    }

    #[test]
    fn labels_pass_obstruction_and_obstructed_subgroups_are_absent() {
        let alpha = standard_cyclic_3cocycle(4, 2);
        let g = Arc::clone(alpha.group());
        let labels = enumerate_indecomposables(&g, &alpha, 4).unwrap();
        let present: BTreeSet<Vec<usize>> = labels
            .iter()
            .map(|l| l.subgroup.members().to_vec())
            .collect();
        for class in enumerate_subgroups(&g, None).unwrap() {
            for h in class {
                let passes = obstruction(&alpha, &h, 4).unwrap();
                assert_eq!(present.contains(&h.members().to_vec()), passes);
            }
        }
    }

    #[test]
    fn induce_counts() {
        let g = s3();
        let theta0 = random_normalized(Arc::clone(&g), 2, 2, 3).unwrap();
        let alpha = coboundary(&theta0).unwrap();
        let labels = enumerate_indecomposables(&g, &alpha, 6).unwrap();
        for label in &labels {
            let d = induce(&alpha, 6, label).unwrap();
            assert_eq!(d.simple_count, 6 / label.subgroup.order());
        }
        let full = labels.iter().find(|l| l.subgroup.order() == 6).unwrap();
        assert_eq!(induce(&alpha, 6, full).unwrap().simple_count, 1);
        let order2 = labels.iter().find(|l| l.subgroup.order() == 2).unwrap();
        assert_eq!(induce(&alpha, 6, order2).unwrap().simple_count, 3);
    }

    #[test]
    fn induce_chain_multiplicative() {
        // [G : K] = [G : H] * [H : K] for K <= H <= G
        let g = z(4);
        let alpha = Cochain::zero(Arc::clone(&g), 3, 1);
        let h = SubgroupRef::new(Arc::clone(&g), vec![0, 2]).unwrap();
        let h_group = h.as_group();
        let alpha_h = restrict(&alpha, &h).unwrap();
        let k_in_h = SubgroupRef::trivial(Arc::clone(&h_group));

        let label_h = ModuleCategoryLabel {
            subgroup: h.clone(),
            theta: Cochain::zero(Arc::clone(&h_group), 2, 4),
        };
        let label_k_in_h = ModuleCategoryLabel {
            subgroup: k_in_h,
            theta: Cochain::zero(SubgroupRef::trivial(Arc::clone(&h_group)).as_group(), 2, 4),
        };
        let label_k_in_g = ModuleCategoryLabel {
            subgroup: SubgroupRef::trivial(Arc::clone(&g)),
            theta: Cochain::zero(SubgroupRef::trivial(Arc::clone(&g)).as_group(), 2, 4),
        };
        let a = induce(&alpha, 4, &label_h).unwrap().simple_count;
        let b = induce(&alpha_h, 4, &label_k_in_h).unwrap().simple_count;
        let c = induce(&alpha, 4, &label_k_in_g).unwrap().simple_count;
        assert_eq!(c, a * b);
    }

    #[test]
    fn decomposition_verdicts() {
        let g = z(2);
        let alpha0 = Cochain::zero(Arc::clone(&g), 3, 1);
        // empty report, expected 0
        let empty = DecompositionReport::default();
        assert!(verify_decomposition(&alpha0, 2, &empty, 0).unwrap().valid);

        // {(1, 0) x 1} with expected total 2
        let label = ModuleCategoryLabel {
            subgroup: SubgroupRef::trivial(Arc::clone(&g)),
            theta: Cochain::zero(SubgroupRef::trivial(Arc::clone(&g)).as_group(), 2, 2),
        };
        let report = DecompositionReport {
            items: vec![(label, 1)],
        };
        let verdict = verify_decomposition(&alpha0, 2, &report, 2).unwrap();
        assert!(verdict.valid);
        assert_eq!(verdict.total, 2);
        // wrong expected total
        assert!(!verify_decomposition(&alpha0, 2, &report, 3).unwrap().valid);

        // full subgroup with theta = 0 against the generator: invalid label
        let alpha_gen = standard_cyclic_3cocycle(2, 1);
        let bad = ModuleCategoryLabel {
            subgroup: SubgroupRef::full(Arc::clone(&g)),
            theta: Cochain::zero(SubgroupRef::full(Arc::clone(&g)).as_group(), 2, 4),
        };
        let report = DecompositionReport {
            items: vec![(bad, 1)],
        };
        let verdict = verify_decomposition(&alpha_gen, 2, &report, 1).unwrap();
        assert!(!verdict.valid);
        assert_eq!(verdict.invalid_items, vec![0]);
    }

    #[test]
    fn order_bound_enforced() {
        let g = load_group("product:(cyclic:4,product:(cyclic:4,cyclic:2))").unwrap();
        let alpha = Cochain::zero(Arc::clone(&g), 3, 1);
        assert!(matches!(
            enumerate_indecomposables(&g, &alpha, 2),
            Err(Error::OrderBound { .. })
        ));
    }
}
