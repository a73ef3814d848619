//! Twisted group algebras, twisted groupoid algebras and the twisted
//! Drinfeld double as basis-indexed structure constants.
//!
//! Products of basis elements are either zero or a root-of-unity monomial
//! times a basis element, so associativity checks stay exact. The double
//! `D^alpha(G)` is the groupoid algebra of the inertia groupoid twisted by
//! the transgression of `alpha`; its product composes arrows with the right
//! factor acting first, which is the convention that makes categorical
//! characters left modules.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::cochain::{require_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::inertia::{transgress3, Arrow, GroupoidCochain2};
use crate::linalg::nullity_mod_p;
use crate::scalar::{CycInt, ModularEmbedding, FLOAT_TOL};

/// Basis label: a group element or an inertia-groupoid arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisLabel {
    Element(usize),
    Arrow(Arrow),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Element(g) => write!(f, "{}", g),
            BasisLabel::Arrow(a) => write!(f, "{},{}", a.object, a.conjugator),
        }
    }
}

/// A finite-dimensional algebra presented by structure constants: each
/// product of basis elements is zero or `zeta_N^e` times a basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    name: String,
    labels: Vec<BasisLabel>,
    modulus: u32,
    product: Vec<Option<(usize, u32)>>,
    unit: Vec<usize>,
}

impl StructureConstants {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<BasisLabel>,
        modulus: u32,
        product: Vec<Option<(usize, u32)>>,
        unit: Vec<usize>,
    ) -> Result<Self> {
        let dim = labels.len();
        if product.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "product table has {} entries, expected {}",
                product.len(),
                dim * dim
            )));
        }
        for e in product.iter().flatten() {
            if e.0 >= dim {
                return Err(Error::UnknownBasisLabel(format!("index {}", e.0)));
            }
            if e.1 >= modulus {
                return Err(Error::EntryOutOfRange {
                    value: e.1,
                    modulus,
                });
            }
        }
        for &u in &unit {
            if u >= dim {
                return Err(Error::UnknownBasisLabel(format!("unit index {}", u)));
            }
        }
        let sc = StructureConstants {
            name: name.into(),
            labels,
            modulus,
            product,
            unit,
        };
        sc.check_unit()?;
        Ok(sc)
    }

    fn check_unit(&self) -> Result<()> {
        // the unit must act as identity on every basis element, from both sides
        let dim = self.dim();
        for b in 0..dim {
            for (side, err) in [(true, "left"), (false, "right")] {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &u in &self.unit {
                    let p = if side {
                        self.product(u, b)
                    } else {
                        self.product(b, u)
                    };
                    if let Some((k, e)) = p {
                        if e != 0 {
                            return Err(Error::Structural(format!(
                                "unit component {} twists basis {}",
                                u, b
                            )));
                        }
                        *acc.entry(k).or_insert(0) += 1;
                    }
                }
                if acc != BTreeMap::from([(b, 1)]) {
                    return Err(Error::Structural(format!(
                        "unit is not a {} identity on basis {}",
                        err, b
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn unit(&self) -> &[usize] {
        &self.unit
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> Option<(usize, u32)> {
        self.product[i * self.labels.len() + j]
    }

    pub fn label_index(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// `k^theta[G]`: basis `e_g`, product `e_g e_h = zeta^theta(g,h) e_gh`.
/// Refuses a non-cocycle twist (the table would not be associative).
pub fn twisted_group_algebra(group: &Arc<FiniteGroup>, theta: &Cochain) -> Result<StructureConstants> {
    if theta.degree() != 2 {
        return Err(Error::UnsupportedDegree(theta.degree()));
    }
    if !theta.is_normalized() {
        return Err(Error::Structural("theta must be normalized".into()));
    }
    require_cocycle(theta)?;
    let sc = group_algebra_from_two_cochain(group, theta);
    debug_assert!(check_associativity(&sc).is_associative);
    Ok(sc)
}

/// Table assembly without the cocycle gate; callers own the consequences.
pub(crate) fn group_algebra_from_two_cochain(
    group: &Arc<FiniteGroup>,
    theta: &Cochain,
) -> StructureConstants {
    let n = group.order();
    let labels: Vec<BasisLabel> = (0..n).map(BasisLabel::Element).collect();
    let mut product = vec![None; n * n];
    for g in 0..n {
        for h in 0..n {
            product[g * n + h] = Some((group.mul(g, h), theta.eval(&[g, h])));
        }
    }
    StructureConstants {
        name: format!("k^theta[{}]", group.name()),
        labels,
        modulus: theta.modulus(),
        product,
        unit: vec![0],
    }
}

/// The twisted Drinfeld double `D^alpha(G)` as the groupoid algebra of the
/// inertia groupoid twisted by the transgression of `alpha`. Basis arrows
/// `(g, s)` multiply by `x * y = zeta^psi(g_y, s_y, s_x) e_(g_y, s_x s_y)`
/// when the right factor's target is the left factor's source, else zero.
pub fn twisted_drinfeld_double(
    group: &Arc<FiniteGroup>,
    alpha: &Cochain,
) -> Result<StructureConstants> {
    let psi = transgress3(alpha)?; // validates normalized cocycle
    Ok(groupoid_algebra(group, &psi))
}

pub(crate) fn groupoid_algebra(
    group: &Arc<FiniteGroup>,
    psi: &GroupoidCochain2,
) -> StructureConstants {
    let n = group.order();
    let dim = n * n;
    let labels: Vec<BasisLabel> = (0..n)
        .flat_map(|g| (0..n).map(move |s| BasisLabel::Arrow(Arrow::new(g, s))))
        .collect();
    let mut product = vec![None; dim * dim];
    for (i, li) in labels.iter().enumerate() {
        let BasisLabel::Arrow(x) = li else { unreachable!() };
        for (j, lj) in labels.iter().enumerate() {
            let BasisLabel::Arrow(y) = lj else { unreachable!() };
            // right factor first: defined when y ends where x starts
            if x.object == group.conj(y.conjugator, y.object) {
                let composite = Arrow::new(y.object, group.mul(x.conjugator, y.conjugator));
                let k = composite.object * n + composite.conjugator;
                let e = psi.eval(y.object, y.conjugator, x.conjugator);
                product[i * dim + j] = Some((k, e));
            }
        }
    }
    let unit: Vec<usize> = (0..n).map(|g| g * n).collect();
    StructureConstants {
        name: format!("D^alpha[{}]", group.name()),
        labels,
        modulus: psi.modulus(),
        product,
        unit,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityVerdict {
    pub is_associative: bool,
    pub witness: Option<(usize, usize, usize)>,
}

/// Exhaustive scan of basis triples in the exact monomial world,
/// parallelized over the first index with an order-preserving reduction.
pub fn check_associativity(sc: &StructureConstants) -> AssociativityVerdict {
    use rayon::prelude::*;
    let dim = sc.dim();
    let m = sc.modulus;
    let compose = |p: Option<(usize, u32)>, right: usize, flip: bool| -> Option<(usize, u32)> {
        let (mid, e1) = p?;
        let q = if flip {
            sc.product(right, mid)
        } else {
            sc.product(mid, right)
        };
        let (out, e2) = q?;
        Some((out, (e1 + e2) % m))
    };
    let witness = (0..dim).into_par_iter().find_map_first(|i| {
        for j in 0..dim {
            let ij = sc.product(i, j);
            for k in 0..dim {
                let lhs = compose(ij, k, false);
                let rhs = compose(sc.product(j, k), i, true);
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
        None
    });
    AssociativityVerdict {
        is_associative: witness.is_none(),
        witness,
    }
}

/// Dimension over `F_p` of the center `{x : xb = bx for all basis b}`,
/// computed as the null space of the commutator system in a modular
/// embedding. Requires `p > dim * N` as a guard against small-characteristic
/// artifacts; cross-check across several primes for Monte-Carlo exactness.
pub fn center_dimension(sc: &StructureConstants, emb: &ModularEmbedding) -> Result<usize> {
    if emb.modulus != sc.modulus {
        return Err(Error::BadPrime {
            p: emb.prime,
            n: sc.modulus,
        });
    }
    let dim = sc.dim();
    if emb.prime <= (dim as u64) * sc.modulus as u64 {
        return Err(Error::BadSpec(format!(
            "prime {} too small; need p > dim * N = {}",
            emb.prime,
            dim * sc.modulus as usize
        )));
    }
    let p = emb.prime;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(dim * dim);
    for j in 0..dim {
        for k in 0..dim {
            let mut row = vec![0u64; dim];
            for (i, cell) in row.iter_mut().enumerate() {
                let mut v: i64 = 0;
                if let Some((l, e)) = sc.product(i, j) {
                    if l == k {
                        v += emb.root_power(e) as i64;
                    }
                }
                if let Some((l, e)) = sc.product(j, i) {
                    if l == k {
                        v -= emb.root_power(e) as i64;
                    }
                }
                *cell = v.rem_euclid(p as i64) as u64;
            }
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(dim); // commutative
    }
    Ok(nullity_mod_p(rows, p))
}

/// Sparse element in a chosen scalar embedding; no explicit zeros stored.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S> {
    coeffs: BTreeMap<usize, S>,
}

impl<S: Clone + PartialEq> AlgebraElement<S> {
    pub fn zero() -> Self {
        AlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(index: usize, one: S) -> Self {
        AlgebraElement {
            coeffs: BTreeMap::from([(index, one)]),
        }
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (usize, S)>) -> Self {
        AlgebraElement {
            coeffs: pairs.into_iter().collect(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, S> {
        &self.coeffs
    }
}

/// A scalar system the algebra can be evaluated in.
pub trait ScalarEmbedding {
    type Elem: Clone + PartialEq;
    fn root_power(&self, e: u32) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// Exact cyclotomic integers.
pub struct ExactEmbedding {
    pub modulus: u32,
}

impl ScalarEmbedding for ExactEmbedding {
    type Elem = CycInt;
    fn root_power(&self, e: u32) -> CycInt {
        CycInt::root_power(self.modulus, e)
    }
    fn add(&self, a: &CycInt, b: &CycInt) -> CycInt {
        a.add(b)
    }
    fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        a.mul(b)
    }
    fn is_zero(&self, a: &CycInt) -> bool {
        a.is_zero()
    }
}

impl ScalarEmbedding for ModularEmbedding {
    type Elem = u64;
    fn root_power(&self, e: u32) -> u64 {
        ModularEmbedding::root_power(self, e)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.prime
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        crate::linalg::mul_mod(*a, *b, self.prime)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a % self.prime == 0
    }
}

/// Complex doubles with the crate-wide tolerance.
pub struct FloatEmbedding {
    pub modulus: u32,
}

impl ScalarEmbedding for FloatEmbedding {
    type Elem = Complex64;
    fn root_power(&self, e: u32) -> Complex64 {
        Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI * (e % self.modulus) as f64 / self.modulus as f64,
        )
    }
    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }
    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }
    fn is_zero(&self, a: &Complex64) -> bool {
        a.norm() <= FLOAT_TOL
    }
}

/// Bilinear extension of the product table in the chosen embedding.
pub fn multiply<E: ScalarEmbedding>(
    sc: &StructureConstants,
    emb: &E,
    x: &AlgebraElement<E::Elem>,
    y: &AlgebraElement<E::Elem>,
) -> Result<AlgebraElement<E::Elem>> {
    let dim = sc.dim();
    let mut acc: BTreeMap<usize, E::Elem> = BTreeMap::new();
    for (&i, xi) in &x.coeffs {
        if i >= dim {
            return Err(Error::UnknownBasisLabel(format!("index {}", i)));
        }
        for (&j, yj) in &y.coeffs {
            if j >= dim {
                return Err(Error::UnknownBasisLabel(format!("index {}", j)));
            }
            if let Some((k, e)) = sc.product(i, j) {
                let term = emb.mul(&emb.mul(xi, yj), &emb.root_power(e));
                acc.entry(k)
                    .and_modify(|v| *v = emb.add(v, &term))
                    .or_insert(term);
            }
        }
    }
    acc.retain(|_, v| !emb.is_zero(v));
    Ok(AlgebraElement { coeffs: acc })
}

/// The unit as an element in a given embedding.
pub fn unit_element<E: ScalarEmbedding>(
    sc: &StructureConstants,
    emb: &E,
) -> AlgebraElement<E::Elem> {
    AlgebraElement {
        coeffs: sc.unit.iter().map(|&u| (u, emb.root_power(0))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{coboundary, external_product, random_normalized, standard_cyclic_3cocycle};
    use crate::inertia::transgress2;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn v4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(2),
        ))
    }

    fn bilinear_theta_v4() -> Cochain {
        let id = Cochain::new(z(2), 1, 2, vec![0, 1]).unwrap();
        external_product(&id, &id).unwrap()
    }

    #[test]
    fn trivial_twist_recovers_group_algebra() {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let theta = Cochain::zero(Arc::clone(&g), 2, 4);
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        assert_eq!(sc.dim(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(sc.product(a, b), Some((g.mul(a, b), 0)));
            }
        }
        assert!(check_associativity(&sc).is_associative);
    }

    #[test]
    fn z2_twisted_square_is_minus_one() {
        let g = z(2);
        let theta = Cochain::new(Arc::clone(&g), 2, 2, vec![0, 0, 0, 1]).unwrap();
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        assert_eq!(sc.product(1, 1), Some((0, 1)));
    }

    #[test]
    fn v4_nondegenerate_theta_gives_matrix_algebra() {
        let g = v4();
        let theta = bilinear_theta_v4();
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        for p in ModularEmbedding::admissible_primes(2, sc.dim() as u64 * 2, 3) {
            let emb = ModularEmbedding::new(p, 2).unwrap();
            assert_eq!(center_dimension(&sc, &emb).unwrap(), 1);
        }
    }

    #[test]
    fn group_algebra_center_of_z3() {
        let g = z(3);
        let theta = Cochain::zero(Arc::clone(&g), 2, 3);
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        for p in ModularEmbedding::admissible_primes(3, 9, 3) {
            let emb = ModularEmbedding::new(p, 3).unwrap();
            assert_eq!(center_dimension(&sc, &emb).unwrap(), 3);
        }
    }

    #[test]
    fn double_dimension_is_order_squared() {
        for (g, alpha) in [
            (z(2), standard_cyclic_3cocycle(2, 1)),
            (z(3), standard_cyclic_3cocycle(3, 2)),
            (z(4), standard_cyclic_3cocycle(4, 1)),
        ] {
            let sc = twisted_drinfeld_double(&g, &alpha).unwrap();
            assert_eq!(sc.dim(), g.order() * g.order());
            assert!(check_associativity(&sc).is_associative);
        }
    }

    #[test]
    fn untwisted_double_of_z2() {
        let g = z(2);
        let alpha = Cochain::zero(Arc::clone(&g), 3, 2);
        let sc = twisted_drinfeld_double(&g, &alpha).unwrap();
        assert_eq!(sc.dim(), 4);
        // commutative: every product commutes
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(sc.product(i, j), sc.product(j, i));
            }
        }
        for p in ModularEmbedding::admissible_primes(2, 8, 3) {
            let emb = ModularEmbedding::new(p, 2).unwrap();
            assert_eq!(center_dimension(&sc, &emb).unwrap(), 4);
        }
    }

    #[test]
    fn twisted_double_of_z2_blocks() {
        let g = z(2);
        let alpha = standard_cyclic_3cocycle(2, 1);
        let sc = twisted_drinfeld_double(&g, &alpha).unwrap();
        // labels: (0,0), (0,1), (1,0), (1,1)
        let idx = |g_: usize, s: usize| {
            sc.label_index(&BasisLabel::Arrow(Arrow::new(g_, s))).unwrap()
        };
        // g = 0 component is the plain group algebra of Z/2
        assert_eq!(sc.product(idx(0, 1), idx(0, 1)), Some((idx(0, 0), 0)));
        // g = 1 component squares to -1
        assert_eq!(sc.product(idx(1, 1), idx(1, 1)), Some((idx(1, 0), 1)));
        // cross products vanish
        assert_eq!(sc.product(idx(0, 1), idx(1, 1)), None);
        for p in ModularEmbedding::admissible_primes(2, 8, 3) {
            let emb = ModularEmbedding::new(p, 2).unwrap();
            assert_eq!(center_dimension(&sc, &emb).unwrap(), 4);
        }
    }

    #[test]
    fn abelian_double_blocks_sum_to_order_squared() {
        let g = z(4);
        let alpha = standard_cyclic_3cocycle(4, 3);
        let sc = twisted_drinfeld_double(&g, &alpha).unwrap();
        // one block per object; block dims sum to |G|^2
        let mut block = vec![0usize; 4];
        for l in sc.labels() {
            let BasisLabel::Arrow(a) = l else { panic!() };
            block[a.object] += 1;
        }
        assert_eq!(block.iter().sum::<usize>(), 16);
        assert!(block.iter().all(|&b| b == 4));
    }

    #[test]
    fn associativity_iff_cocycle_for_group_twists() {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        for seed in 0..8u64 {
            let raw = random_normalized(Arc::clone(&g), 2, 4, seed).unwrap();
            let cocycle = crate::cochain::is_cocycle(&raw).unwrap().is_cocycle;
            let sc = group_algebra_from_two_cochain(&g, &raw);
            assert_eq!(check_associativity(&sc).is_associative, cocycle);
            // coboundaries of random 1-cochains are always cocycles
            let eta = random_normalized(Arc::clone(&g), 1, 4, seed).unwrap();
            let d_eta = coboundary(&eta).unwrap();
            let sc2 = group_algebra_from_two_cochain(&g, &d_eta);
            assert!(check_associativity(&sc2).is_associative);
        }
    }

    #[test]
    fn associativity_iff_groupoid_cocycle_for_doubles() {
        let g = z(4);
        let theta = random_normalized(Arc::clone(&g), 2, 4, 11).unwrap();
        let psi = crate::inertia::groupoid_coboundary(&transgress2(&theta).unwrap());
        let sc = groupoid_algebra(&g, &psi);
        assert!(check_associativity(&sc).is_associative);

        // corrupt one entry of psi
        let n = 4;
        let mut entries = Vec::new();
        for gg in 0..n {
            for s in 0..n {
                for t in 0..n {
                    entries.push(psi.eval(gg, s, t));
                }
            }
        }
        entries[(1 * n + 2) * n + 3] = (entries[(1 * n + 2) * n + 3] + 1) % 4;
        let bad = GroupoidCochain2::new(Arc::clone(&g), 4, entries).unwrap();
        assert!(!crate::inertia::is_groupoid_2cocycle(&bad).is_cocycle);
        let sc_bad = groupoid_algebra(&g, &bad);
        let verdict = check_associativity(&sc_bad);
        assert!(!verdict.is_associative);
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn corrupted_table_yields_witness() {
        let g = z(3);
        let theta = Cochain::zero(Arc::clone(&g), 2, 3);
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        let mut product: Vec<Option<(usize, u32)>> = (0..9)
            .map(|i| sc.product(i / 3, i % 3))
            .collect();
        product[4] = product[4].map(|(k, e)| (k, (e + 1) % 3)); // corrupt (1,1)
        let bad = StructureConstants::new("bad", sc.labels().to_vec(), 3, product, vec![0]).unwrap();
        let verdict = check_associativity(&bad);
        assert!(!verdict.is_associative);
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn multiply_unit_and_basis() {
        let g = z(2);
        let theta = Cochain::new(Arc::clone(&g), 2, 2, vec![0, 0, 0, 1]).unwrap();
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        let emb = ExactEmbedding { modulus: 2 };
        let one = unit_element(&sc, &emb);
        let y = AlgebraElement::from_coeffs([
            (0, CycInt::from_integer(2, 3)),
            (1, CycInt::one(2)),
        ]);
        assert_eq!(multiply(&sc, &emb, &one, &y).unwrap(), y);
        assert_eq!(multiply(&sc, &emb, &y, &one).unwrap(), y);

        // basis-by-basis reproduces the table entry
        let e1 = AlgebraElement::basis(1, CycInt::one(2));
        let sq = multiply(&sc, &emb, &e1, &e1).unwrap();
        assert_eq!(
            sq,
            AlgebraElement::from_coeffs([(0, CycInt::from_integer(2, -1))])
        );
    }

    #[test]
    fn hand_expansion_in_twisted_z2() {
        // (e1 + e0)(e1 - e0) = -2 e0 when e1^2 = -e0
        let g = z(2);
        let theta = Cochain::new(Arc::clone(&g), 2, 2, vec![0, 0, 0, 1]).unwrap();
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        let emb = ExactEmbedding { modulus: 2 };
        let x = AlgebraElement::from_coeffs([(0, CycInt::one(2)), (1, CycInt::one(2))]);
        let y = AlgebraElement::from_coeffs([
            (0, CycInt::from_integer(2, -1)),
            (1, CycInt::one(2)),
        ]);
        let prod = multiply(&sc, &emb, &x, &y).unwrap();
        assert_eq!(
            prod,
            AlgebraElement::from_coeffs([(0, CycInt::from_integer(2, -2))])
        );
    }

    #[test]
    fn unknown_label_rejected() {
        let g = z(2);
        let theta = Cochain::zero(Arc::clone(&g), 2, 2);
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        let emb = ExactEmbedding { modulus: 2 };
        let bad = AlgebraElement::basis(7, CycInt::one(2));
        assert!(matches!(
            multiply(&sc, &emb, &bad, &bad),
            Err(Error::UnknownBasisLabel(_))
        ));
    }

    #[test]
    fn center_dimension_guards() {
        let g = z(2);
        let theta = Cochain::zero(Arc::clone(&g), 2, 2);
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        // p = 3: admissible for N = 2 but below dim * N = 4
        let emb = ModularEmbedding::new(3, 2).unwrap();
        assert!(center_dimension(&sc, &emb).is_err());
        // wrong modulus
        let emb4 = ModularEmbedding::new(13, 4).unwrap();
        assert!(center_dimension(&sc, &emb4).is_err());
    }

    #[test]
    fn float_embedding_multiplies() {
        let g = z(4);
        let theta = Cochain::zero(Arc::clone(&g), 2, 4);
        let sc = twisted_group_algebra(&g, &theta).unwrap();
        let emb = FloatEmbedding { modulus: 4 };
        let x = AlgebraElement::basis(1, emb.root_power(1));
        let y = AlgebraElement::basis(3, emb.root_power(3));
        let p = multiply(&sc, &emb, &x, &y).unwrap();
        // zeta * zeta^3 = 1 on basis e_0
        let c = p.coeffs().get(&0).unwrap();
        assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }
}
