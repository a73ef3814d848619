//! Cochains on a finite group with values in Z/N, written additively.
//!
//! A value `e` stands for the N-th root of unity `zeta_N^e`; all cocycle
//! identities below are the multiplicative ones with exponents spelled out.
//! The degree-2 coboundary is
//! `d(theta)(g,h,k) = theta(gh,k) + theta(g,h) - theta(g,hk) - theta(h,k)`
//! and the other degrees follow the same orientation, so that `d . d = 0`
//! holds on the nose in every degree supported here.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A residue `e` modulo `N`, standing for `zeta_N^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentScalar {
    pub modulus: u32,
    pub value: u32,
}

impl ExponentScalar {
    pub fn new(modulus: u32, value: i64) -> Self {
        assert!(modulus > 0);
        ExponentScalar {
            modulus,
            value: value.rem_euclid(modulus as i64) as u32,
        }
    }
}

/// Dense cochain `G^k -> Z/N`. Entries are indexed by the mixed-radix
/// encoding of the argument tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: Arc<FiniteGroup>,
    degree: usize,
    modulus: u32,
    entries: Vec<u32>,
    normalized: bool,
}

pub const MAX_DEGREE: usize = 4;

impl Cochain {
    pub fn new(
        group: Arc<FiniteGroup>,
        degree: usize,
        modulus: u32,
        entries: Vec<u32>,
    ) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        if modulus == 0 {
            return Err(Error::BadSpec("modulus must be positive".into()));
        }
        let expected = group.order().pow(degree as u32);
        if entries.len() != expected {
            return Err(Error::BadSpec(format!(
                "cochain table has {} entries, expected {}",
                entries.len(),
                expected
            )));
        }
        for &e in &entries {
            if e >= modulus {
                return Err(Error::EntryOutOfRange {
                    value: e,
                    modulus,
                });
            }
        }
        let mut c = Cochain {
            group,
            degree,
            modulus,
            entries,
            normalized: false,
        };
        c.normalized = c.compute_normalized();
        Ok(c)
    }

    pub fn zero(group: Arc<FiniteGroup>, degree: usize, modulus: u32) -> Self {
        let len = group.order().pow(degree as u32);
        Cochain::new(group, degree, modulus, vec![0; len]).expect("zero table is valid")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn compute_normalized(&self) -> bool {
        let n = self.group.order();
        self.indices()
            .all(|idx| !tuple_of(idx, self.degree, n).contains(&0) || self.entries[idx] == 0)
    }

    fn indices(&self) -> std::ops::Range<usize> {
        0..self.entries.len()
    }

    #[inline]
    pub fn eval(&self, args: &[usize]) -> u32 {
        debug_assert_eq!(args.len(), self.degree);
        self.entries[tuple_index(args, self.group.order())]
    }

    pub fn eval_scalar(&self, args: &[usize]) -> ExponentScalar {
        ExponentScalar {
            modulus: self.modulus,
            value: self.eval(args),
        }
    }

    /// Entrywise sum (same group, degree, modulus).
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + b) % m)
            .collect();
        Cochain::new(Arc::clone(&self.group), self.degree, m, entries)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = self.modulus as i64;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a as i64 - b as i64).rem_euclid(m) as u32)
            .collect();
        Cochain::new(Arc::clone(&self.group), self.degree, self.modulus, entries)
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree
            || self.modulus != other.modulus
            || self.group.order() != other.group.order()
        {
            return Err(Error::DimensionMismatch(
                "cochains have different shape".into(),
            ));
        }
        Ok(())
    }

    /// Embeds exponents into Z/(N*Q) via `e -> Q*e`.
    pub fn lift(&self, factor: u32) -> Cochain {
        assert!(factor >= 1);
        let modulus = self.modulus * factor;
        let entries = self.entries.iter().map(|&e| e * factor).collect();
        Cochain::new(Arc::clone(&self.group), self.degree, modulus, entries)
            .expect("lift preserves validity")
    }

    /// Re-indexes entries along a map `phi: H -> G` of groups; used for both
    /// restriction along a subgroup embedding and inflation along a quotient.
    fn pull_back(&self, target: Arc<FiniteGroup>, phi: &[usize]) -> Cochain {
        let k = self.degree;
        let n = target.order();
        let len = n.pow(k as u32);
        let mut entries = vec![0u32; len];
        let mut args = vec![0usize; k];
        let mut image = vec![0usize; k];
        for idx in 0..len {
            decode_tuple(idx, k, n, &mut args);
            for (i, &a) in args.iter().enumerate() {
                image[i] = phi[a];
            }
            entries[idx] = self.eval(&image);
        }
        Cochain::new(target, k, self.modulus, entries).expect("pullback table is valid")
    }
}

#[inline]
pub(crate) fn tuple_index(args: &[usize], n: usize) -> usize {
    let mut idx = 0usize;
    for &a in args {
        idx = idx * n + a;
    }
    idx
}

pub(crate) fn tuple_of(mut idx: usize, k: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (0..k).rev() {
        out[i] = idx % n;
        idx /= n;
    }
    out
}

#[inline]
pub(crate) fn decode_tuple(mut idx: usize, k: usize, n: usize, out: &mut [usize]) {
    for i in (0..k).rev() {
        out[i] = idx % n;
        idx /= n;
    }
}

/// Action of `G` on Z/N by unit multipliers; `None` means the trivial action.
/// Used by the two-group verifiers. The cohomology operations in this module
/// are for the trivial action only.
pub(crate) fn coboundary_with_action(c: &Cochain, action: Option<&[u32]>) -> Result<Cochain> {
    if c.degree >= MAX_DEGREE {
        return Err(Error::UnsupportedDegree(c.degree));
    }
    let g = &c.group;
    let n = g.order();
    let m = c.modulus as i64;
    let unit = |x: usize| -> i64 {
        match action {
            Some(u) => u[x] as i64,
            None => 1,
        }
    };
    let k = c.degree;
    let len = n.pow((k + 1) as u32);
    let mut entries = vec![0u32; len];
    let mut t = vec![0usize; k + 1];
    for idx in 0..len {
        decode_tuple(idx, k + 1, n, &mut t);
        let v: i64 = match k {
            // d(omega)(g) = omega^g - omega
            0 => (unit(t[0]) * c.entries[0] as i64) - c.entries[0] as i64,
            // d(eta)(g,h) = eta(h)^g + eta(g) - eta(gh)
            1 => {
                let (a, b) = (t[0], t[1]);
                unit(a) * c.eval(&[b]) as i64 + c.eval(&[a]) as i64
                    - c.eval(&[g.mul(a, b)]) as i64
            }
            // d(theta)(g,h,k) = theta(gh,k) + theta(g,h) - theta(g,hk) - theta(h,k)^g
            2 => {
                let (a, b, cc) = (t[0], t[1], t[2]);
                c.eval(&[g.mul(a, b), cc]) as i64 + c.eval(&[a, b]) as i64
                    - c.eval(&[a, g.mul(b, cc)]) as i64
                    - unit(a) * c.eval(&[b, cc]) as i64
            }
            // d(alpha)(a,b,c,d) =
            //   alpha(ab,c,d) + alpha(a,b,cd) - alpha(b,c,d)^a - alpha(a,bc,d) - alpha(a,b,c)
            3 => {
                let (a, b, cc, d) = (t[0], t[1], t[2], t[3]);
                c.eval(&[g.mul(a, b), cc, d]) as i64 + c.eval(&[a, b, g.mul(cc, d)]) as i64
                    - unit(a) * c.eval(&[b, cc, d]) as i64
                    - c.eval(&[a, g.mul(b, cc), d]) as i64
                    - c.eval(&[a, b, cc]) as i64
            }
            _ => unreachable!(),
        };
        entries[idx] = v.rem_euclid(m) as u32;
    }
    Cochain::new(Arc::clone(g), k + 1, c.modulus, entries)
}

/// Simplicial coboundary for the trivial action, degrees 0 through 3.
pub fn coboundary(c: &Cochain) -> Result<Cochain> {
    coboundary_with_action(c, None)
}

/// Outcome of a cocycle test; `witness` is the lexicographically first
/// failing argument tuple of the coboundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleVerdict {
    pub is_cocycle: bool,
    pub witness: Option<Vec<usize>>,
}

/// True iff `coboundary(c) = 0`; degree must be 1, 2 or 3.
pub fn is_cocycle(c: &Cochain) -> Result<CocycleVerdict> {
    if c.degree == 0 || c.degree >= MAX_DEGREE {
        return Err(Error::UnsupportedDegree(c.degree));
    }
    let d = coboundary(c)?;
    let n = c.group.order();
    match d.entries.iter().position(|&e| e != 0) {
        None => Ok(CocycleVerdict {
            is_cocycle: true,
            witness: None,
        }),
        Some(idx) => Ok(CocycleVerdict {
            is_cocycle: false,
            witness: Some(tuple_of(idx, c.degree + 1, n)),
        }),
    }
}

pub(crate) fn require_cocycle(c: &Cochain) -> Result<()> {
    let v = is_cocycle(c)?;
    if v.is_cocycle {
        Ok(())
    } else {
        Err(Error::NotCocycle(v.witness.unwrap_or_default()))
    }
}

/// Restriction of a cochain to a subgroup, re-indexed to the subgroup's own
/// element numbering (the embedding is `H.members()`).
pub fn restrict(c: &Cochain, h: &crate::group::SubgroupRef) -> Result<Cochain> {
    if !Arc::ptr_eq(h.parent(), c.group()) && h.parent().table() != c.group().table() {
        return Err(Error::DimensionMismatch(
            "subgroup does not live in the cochain's group".into(),
        ));
    }
    // SubgroupRef is closed by construction; re-validate to honor the contract
    crate::group::SubgroupRef::new(Arc::clone(h.parent()), h.members().to_vec())?;
    Ok(c.pull_back(h.as_group(), h.members()))
}

/// Pullback along a homomorphism `phi: G -> Q` given elementwise; the map
/// is validated but need not be surjective.
pub fn pullback(c: &Cochain, group: Arc<FiniteGroup>, phi: &[usize]) -> Result<Cochain> {
    if phi.len() != group.order() {
        return Err(Error::BadSpec(format!(
            "map has {} entries, expected {}",
            phi.len(),
            group.order()
        )));
    }
    let q = c.group();
    for &v in phi {
        if v >= q.order() {
            return Err(Error::BadSpec("map value out of range".into()));
        }
    }
    if phi[0] != 0 {
        return Err(Error::BadSpec("map must send identity to identity".into()));
    }
    for a in group.elements() {
        for b in group.elements() {
            if phi[group.mul(a, b)] != q.mul(phi[a], phi[b]) {
                return Err(Error::BadSpec(format!(
                    "map is not a homomorphism at ({}, {})",
                    a, b
                )));
            }
        }
    }
    Ok(c.pull_back(group, phi))
}

/// Inflation along a surjective homomorphism `pi: G -> Q` given elementwise.
pub fn inflate(c: &Cochain, group: Arc<FiniteGroup>, pi: &[usize]) -> Result<Cochain> {
    let q_order = c.group().order();
    if !(0..q_order).all(|x| pi.contains(&x)) {
        return Err(Error::BadSpec("quotient map is not surjective".into()));
    }
    pullback(c, group, pi)
}

/// External product of cochains on the factors of a direct product:
/// `(u x v)((a1,b1),...,(ap,bp),(ap+1,bp+1),...) = u(a1..ap) * v(bp+1..)`
/// with exponents multiplied mod N. Cocycles map to cocycles.
pub fn external_product(left: &Cochain, right: &Cochain) -> Result<Cochain> {
    if left.modulus != right.modulus {
        return Err(Error::DimensionMismatch(
            "external product needs matching moduli".into(),
        ));
    }
    let a = left.group();
    let b = right.group();
    let product = Arc::new(FiniteGroup::product(a, b));
    let (p, q) = (left.degree, right.degree);
    let k = p + q;
    if k > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(k));
    }
    let n = product.order();
    let nb = b.order();
    let m = left.modulus as u64;
    let len = n.pow(k as u32);
    let mut entries = vec![0u32; len];
    let mut t = vec![0usize; k];
    let mut la = vec![0usize; p];
    let mut rb = vec![0usize; q];
    for idx in 0..len {
        decode_tuple(idx, k, n, &mut t);
        for i in 0..p {
            la[i] = t[i] / nb;
        }
        for j in 0..q {
            rb[j] = t[p + j] % nb;
        }
        let prod = (left.eval(&la) as u64 * right.eval(&rb) as u64) % m;
        entries[idx] = prod as u32;
    }
    Cochain::new(product, k, left.modulus, entries)
}

/// The standard generator-style 3-cocycle on the cyclic group of order `n`:
/// `alpha(a,b,c) = k*a*floor((b+c)/n) mod n` with arguments as representatives
/// in `0..n-1`. Normalized; a cocycle for every `k`.
pub fn standard_cyclic_3cocycle(n: usize, k: u32) -> Cochain {
    assert!(n >= 1);
    let group = Arc::new(FiniteGroup::cyclic(n));
    let modulus = n as u32;
    let k = k % modulus.max(1);
    let mut entries = vec![0u32; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let carry = ((b + c) / n) as u64;
                let v = (k as u64 * a as u64 * carry) % n as u64;
                entries[(a * n + b) * n + c] = v as u32;
            }
        }
    }
    Cochain::new(group, 3, modulus, entries).expect("cyclic cocycle table is valid")
}

/// Seeded uniformly random normalized cochain; identical seeds give
/// identical tables on every platform.
pub fn random_normalized(
    group: Arc<FiniteGroup>,
    degree: usize,
    modulus: u32,
    seed: u64,
) -> Result<Cochain> {
    if degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(degree));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let n = group.order();
    let len = n.pow(degree as u32);
    let mut entries = vec![0u32; len];
    let mut t = vec![0usize; degree];
    for (idx, e) in entries.iter_mut().enumerate() {
        decode_tuple(idx, degree, n, &mut t);
        let v = rng.gen_range(0..modulus);
        if !t.contains(&0) {
            *e = v;
        }
    }
    Cochain::new(group, degree, modulus, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SubgroupRef;
    use proptest::prelude::*;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn v4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(2),
        ))
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    #[test]
    fn zero_theta_has_zero_coboundary() {
        let theta = Cochain::zero(s3(), 2, 4);
        assert!(coboundary(&theta).unwrap().is_zero());
    }

    #[test]
    fn coboundary_of_z2_theta_vanishes() {
        // theta(1,1) = 1 mod 2 on Z/2: all 8 triples give 0
        let theta = Cochain::new(z(2), 2, 2, vec![0, 0, 0, 1]).unwrap();
        let d = coboundary(&theta).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn degree_four_coboundary_unsupported() {
        let c = Cochain::zero(z(2), 4, 2);
        assert_eq!(coboundary(&c).unwrap_err(), Error::UnsupportedDegree(4));
    }

    #[test]
    fn dd_is_zero_on_seeded_random_cochains() {
        let groups = [z(4), v4(), s3()];
        let mut count = 0;
        for group in &groups {
            for degree in 0..=2usize {
                for seed in 0..23u64 {
                    let c =
                        random_normalized(Arc::clone(group), degree, 4, seed + 1000 * degree as u64)
                            .unwrap();
                    let dd = coboundary(&coboundary(&c).unwrap()).unwrap();
                    assert!(dd.is_zero(), "d.d != 0 for {:?} degree {}", group, degree);
                    count += 1;
                }
            }
        }
        assert!(count >= 200);
    }

    proptest! {
        #[test]
        fn dd_zero_property(seed in any::<u64>(), degree in 0usize..3, modulus in 1u32..6) {
            let c = random_normalized(s3(), degree, modulus, seed).unwrap();
            let dd = coboundary(&coboundary(&c).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }

        #[test]
        fn coboundaries_are_cocycles(seed in any::<u64>(), degree in 1usize..3) {
            let c = random_normalized(v4(), degree, 4, seed).unwrap();
            let d = coboundary(&c).unwrap();
            prop_assert!(is_cocycle(&d).unwrap().is_cocycle);
        }
    }

    #[test]
    fn standard_cyclic_cocycles_pass() {
        for n in [2usize, 3, 4, 6, 8] {
            for k in 0..n as u32 {
                let alpha = standard_cyclic_3cocycle(n, k);
                assert!(alpha.is_normalized());
                assert!(is_cocycle(&alpha).unwrap().is_cocycle, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn standard_cyclic_z2_single_entry() {
        let alpha = standard_cyclic_3cocycle(2, 1);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let expect = if (a, b, c) == (1, 1, 1) { 1 } else { 0 };
                    assert_eq!(alpha.eval(&[a, b, c]), expect);
                }
            }
        }
    }

    #[test]
    fn zero_scale_gives_zero_cochain() {
        assert!(standard_cyclic_3cocycle(5, 0).is_zero());
    }

    #[test]
    fn corrupting_one_entry_breaks_cocycle_with_witness() {
        let alpha = standard_cyclic_3cocycle(4, 1);
        let mut entries = alpha.entries().to_vec();
        entries[alpha_index(&alpha, &[1, 2, 3])] = (entries[alpha_index(&alpha, &[1, 2, 3])] + 1) % 4;
        let corrupted = Cochain::new(Arc::clone(alpha.group()), 3, 4, entries).unwrap();
        let verdict = is_cocycle(&corrupted).unwrap();
        assert!(!verdict.is_cocycle);
        assert!(verdict.witness.is_some());
    }

    fn alpha_index(c: &Cochain, args: &[usize]) -> usize {
        tuple_index(args, c.group().order())
    }

    #[test]
    fn degree_zero_cocycle_test_is_error() {
        let c = Cochain::zero(z(2), 0, 2);
        assert!(is_cocycle(&c).is_err());
    }

    #[test]
    fn restriction_examples() {
        let alpha = standard_cyclic_3cocycle(4, 1);
        let z4 = Arc::clone(alpha.group());
        let h = SubgroupRef::new(z4, vec![0, 2]).unwrap();
        let r = restrict(&alpha, &h).unwrap();
        assert_eq!(r.group().order(), 2);
        assert_eq!(r.modulus(), 4);
        // alpha(2,2,2) = 1*2*floor(4/4) = 2
        assert_eq!(r.eval(&[1, 1, 1]), 2);
        assert!(r.is_normalized());

        let trivial = SubgroupRef::trivial(Arc::clone(alpha.group()));
        assert!(restrict(&alpha, &trivial).unwrap().is_zero());
    }

    #[test]
    fn restriction_commutes_with_coboundary() {
        let s3 = s3();
        let classes = crate::group::enumerate_subgroups(&s3, None).unwrap();
        for seed in 0..10u64 {
            let theta = random_normalized(Arc::clone(&s3), 2, 4, seed).unwrap();
            let d_theta = coboundary(&theta).unwrap();
            for class in &classes {
                for h in class {
                    let lhs = restrict(&d_theta, h).unwrap();
                    let rhs = coboundary(&restrict(&theta, h).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn inflation_of_z2_generator_to_v4() {
        let gen = standard_cyclic_3cocycle(2, 1);
        let v4 = v4();
        // first projection V4 -> Z/2 in the product indexing (a,b) = 2a + b
        let pi: Vec<usize> = (0..4).map(|x| x / 2).collect();
        let inflated = inflate(&gen, Arc::clone(&v4), &pi).unwrap();
        assert!(inflated.is_normalized());
        assert!(is_cocycle(&inflated).unwrap().is_cocycle);
        assert!(!inflated.is_zero());
    }

    #[test]
    fn inflation_rejects_non_homomorphisms() {
        let gen = standard_cyclic_3cocycle(2, 1);
        let v4 = v4();
        assert!(inflate(&gen, Arc::clone(&v4), &[0, 1, 1, 1]).is_err());
        assert!(inflate(&gen, v4, &[0, 0, 0, 0]).is_err()); // not surjective
    }

    #[test]
    fn external_product_bilinear_theta_on_v4() {
        // id cochains on the two Z/2 factors multiply to theta((a1,a2),(b1,b2)) = a1*b2
        let id1 = Cochain::new(z(2), 1, 2, vec![0, 1]).unwrap();
        let id2 = Cochain::new(z(2), 1, 2, vec![0, 1]).unwrap();
        let theta = external_product(&id1, &id2).unwrap();
        assert_eq!(theta.group().order(), 4);
        // (1,0) has index 2, (0,1) has index 1
        assert_eq!(theta.eval(&[2, 1]), 1);
        assert_eq!(theta.eval(&[1, 2]), 0);
        assert!(is_cocycle(&theta).unwrap().is_cocycle);
    }

    #[test]
    fn random_cochain_is_reproducible() {
        let a = random_normalized(s3(), 2, 6, 42).unwrap();
        let b = random_normalized(s3(), 2, 6, 42).unwrap();
        let c = random_normalized(s3(), 2, 6, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.is_normalized());
    }

    #[test]
    fn entry_out_of_range_rejected() {
        assert!(matches!(
            Cochain::new(z(2), 1, 2, vec![0, 2]),
            Err(Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn lift_scales_entries_and_modulus() {
        let theta = Cochain::new(z(2), 2, 2, vec![0, 0, 0, 1]).unwrap();
        let lifted = theta.lift(3);
        assert_eq!(lifted.modulus(), 6);
        assert_eq!(lifted.eval(&[1, 1]), 3);
        assert!(lifted.is_normalized());
    }
}
