//! Categorical characters of projective 2-representations: the spaces
//! `X(g)` through their dimensions, the conjugation isomorphisms
//! `beta_{g,h}: X(g) -> X(h g h^-1)` as matrices, the joint trace on
//! commuting pairs, and the verification that the `beta` compose up to the
//! transgressed 3-cocycle — equivalently, that the character is a module
//! over the twisted Drinfeld double.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{BasisLabel, StructureConstants};
use crate::cochain::{require_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::inertia::{transgress2, Arrow};
use crate::scalar::{CycInt, Scalar, FLOAT_TOL};

/// A matrix over either the exact cyclotomic integers or complex doubles.
#[derive(Clone, Debug)]
pub struct CMatrix {
    pub rows: usize,
    pub cols: usize,
    data: MatrixData,
}

#[derive(Clone, Debug)]
enum MatrixData {
    Exact(Vec<CycInt>),
    Float(Vec<Complex64>),
}

impl CMatrix {
    pub fn exact(rows: usize, cols: usize, entries: Vec<CycInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(CMatrix {
            rows,
            cols,
            data: MatrixData::Exact(entries),
        })
    }

    pub fn float(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(CMatrix {
            rows,
            cols,
            data: MatrixData::Float(entries),
        })
    }

    pub fn identity_exact(n: usize, modulus: u32) -> Self {
        let mut entries = vec![CycInt::zero(modulus); n * n];
        for i in 0..n {
            entries[i * n + i] = CycInt::one(modulus);
        }
        CMatrix {
            rows: n,
            cols: n,
            data: MatrixData::Exact(entries),
        }
    }

    pub fn scalar_1x1(modulus: u32, exponent: u32) -> Self {
        CMatrix {
            rows: 1,
            cols: 1,
            data: MatrixData::Exact(vec![CycInt::root_power(modulus, exponent)]),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.data, MatrixData::Exact(_))
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        match &self.data {
            MatrixData::Exact(v) => Scalar::Exact(v[i * self.cols + j].clone()),
            MatrixData::Float(v) => Scalar::Float(v[i * self.cols + j]),
        }
    }

    fn to_float_vec(&self) -> Vec<Complex64> {
        match &self.data {
            MatrixData::Exact(v) => v.iter().map(|c| c.to_complex()).collect(),
            MatrixData::Float(v) => v.clone(),
        }
    }

    /// `self * other` (matrix composition: `self` applied after `other`).
    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (r, k, c) = (self.rows, self.cols, other.cols);
        match (&self.data, &other.data) {
            (MatrixData::Exact(a), MatrixData::Exact(b)) => {
                let modulus = a
                    .first()
                    .or_else(|| b.first())
                    .map(|x| x.modulus())
                    .unwrap_or(1);
                let mut out = vec![CycInt::zero(modulus); r * c];
                for i in 0..r {
                    for l in 0..k {
                        let ail = &a[i * k + l];
                        if ail.is_zero() {
                            continue;
                        }
                        for j in 0..c {
                            let t = ail.mul(&b[l * c + j]);
                            out[i * c + j] = out[i * c + j].add(&t);
                        }
                    }
                }
                CMatrix::exact(r, c, out)
            }
            _ => {
                let a = self.to_float_vec();
                let b = other.to_float_vec();
                let mut out = vec![Complex64::new(0.0, 0.0); r * c];
                for i in 0..r {
                    for l in 0..k {
                        for j in 0..c {
                            out[i * c + j] += a[i * k + l] * b[l * c + j];
                        }
                    }
                }
                CMatrix::float(r, c, out)
            }
        }
    }

    /// Multiply every entry by `zeta^exponent`.
    pub fn scale_root(&self, modulus: u32, exponent: u32) -> CMatrix {
        match &self.data {
            MatrixData::Exact(v) => {
                let z = CycInt::root_power(modulus, exponent);
                CMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    data: MatrixData::Exact(v.iter().map(|c| c.mul(&z)).collect()),
                }
            }
            MatrixData::Float(v) => {
                let z = Complex64::from_polar(
                    1.0,
                    2.0 * std::f64::consts::PI * (exponent % modulus) as f64 / modulus as f64,
                );
                CMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    data: MatrixData::Float(v.iter().map(|c| c * z).collect()),
                }
            }
        }
    }

    pub fn approx_eq(&self, other: &CMatrix) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        match (&self.data, &other.data) {
            (MatrixData::Exact(a), MatrixData::Exact(b)) => a.iter().zip(b).all(|(x, y)| x == y),
            _ => {
                let a = self.to_float_vec();
                let b = other.to_float_vec();
                a.iter().zip(&b).all(|(x, y)| (x - y).norm() <= FLOAT_TOL)
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        match &self.data {
            MatrixData::Exact(v) => {
                let modulus = v.first().map(|x| x.modulus()).unwrap_or(1);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let expect = if i == j {
                            CycInt::one(modulus)
                        } else {
                            CycInt::zero(modulus)
                        };
                        if v[i * self.cols + j] != expect {
                            return false;
                        }
                    }
                }
                true
            }
            MatrixData::Float(v) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let expect = if i == j { 1.0 } else { 0.0 };
                        if (v[i * self.cols + j] - Complex64::new(expect, 0.0)).norm() > FLOAT_TOL {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            MatrixData::Exact(v) => v.iter().all(|c| c.is_zero()),
            MatrixData::Float(v) => v.iter().all(|c| c.norm() <= FLOAT_TOL),
        }
    }

    /// Invertibility over the complex numbers. Exact matrices use a
    /// division-free determinant for small sizes; larger or float matrices
    /// fall back to a numeric determinant with the crate tolerance.
    pub fn is_invertible(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        if n == 0 {
            return true;
        }
        if let MatrixData::Exact(v) = &self.data {
            if n <= 10 {
                return !det_exact(v, n).is_zero();
            }
        }
        let mut a = self.to_float_vec();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col]
                        .norm()
                        .partial_cmp(&a[j * n + col].norm())
                        .unwrap()
                })
                .unwrap();
            if a[pivot * n + col].norm() <= FLOAT_TOL {
                return false;
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            det *= a[col * n + col];
            for i in col + 1..n {
                let f = a[i * n + col] / a[col * n + col];
                for j in col..n {
                    let sub = f * a[col * n + j];
                    a[i * n + j] -= sub;
                }
            }
        }
        det.norm() > FLOAT_TOL
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        match &self.data {
            MatrixData::Exact(v) => {
                let modulus = v.first().map(|x| x.modulus()).unwrap_or(1);
                let mut acc = CycInt::zero(modulus);
                for i in 0..self.rows {
                    acc = acc.add(&v[i * self.cols + i]);
                }
                Scalar::Exact(acc)
            }
            MatrixData::Float(v) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..self.rows {
                    acc += v[i * self.cols + i];
                }
                Scalar::Float(acc)
            }
        }
    }
}

/// Division-free determinant by subset dynamic programming; exact in any
/// commutative ring.
fn det_exact(a: &[CycInt], n: usize) -> CycInt {
    let modulus = a.first().map(|x| x.modulus()).unwrap_or(1);
    let full = 1usize << n;
    let mut f = vec![None::<CycInt>; full];
    f[0] = Some(CycInt::one(modulus));
    for mask in 0..full {
        let Some(acc) = f[mask].clone() else { continue };
        let row = (mask as u32).count_ones() as usize;
        if row == n {
            continue;
        }
        for j in 0..n {
            if mask & (1 << j) != 0 {
                continue;
            }
            // parity of set bits above j gives the permutation sign step
            let higher = mask >> (j + 1);
            let sign = if (higher as u32).count_ones() % 2 == 0 {
                1
            } else {
                -1
            };
            let term = acc.mul(&a[row * n + j]).scale(sign);
            let slot = &mut f[mask | (1 << j)];
            *slot = Some(match slot.take() {
                Some(prev) => prev.add(&term),
                None => term,
            });
        }
    }
    f[full - 1].clone().unwrap_or_else(|| CycInt::zero(modulus))
}

/// Character data: dimensions of the `X(g)` and the conjugation matrices.
#[derive(Clone, Debug)]
pub struct CategoricalCharacter {
    group: Arc<FiniteGroup>,
    modulus: u32,
    dims: Vec<usize>,
    beta: Vec<CMatrix>, // indexed g * n + h, shape dims(hgh^-1) x dims(g)
}

impl CategoricalCharacter {
    pub fn new(
        group: Arc<FiniteGroup>,
        modulus: u32,
        dims: Vec<usize>,
        beta: Vec<CMatrix>,
    ) -> Result<Self> {
        let n = group.order();
        if dims.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} dims for a group of order {}",
                dims.len(),
                n
            )));
        }
        if beta.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} beta matrices, expected {}",
                beta.len(),
                n * n
            )));
        }
        let c = CategoricalCharacter {
            group,
            modulus,
            dims,
            beta,
        };
        c.check_shapes()?;
        Ok(c)
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.group.order();
        for g in 0..n {
            for h in 0..n {
                let b = self.beta(g, h);
                let target = self.group.conj(h, g);
                if b.rows != self.dims[target] || b.cols != self.dims[g] {
                    return Err(Error::Structural(format!(
                        "beta({},{}) has shape {}x{}, expected {}x{}",
                        g, h, b.rows, b.cols, self.dims[target], self.dims[g]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn beta(&self, g: usize, h: usize) -> &CMatrix {
        &self.beta[g * self.group.order() + h]
    }

    pub fn total_dimension(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Replaces one beta matrix; used for corrupted negatives and loaders.
    pub fn with_beta(mut self, g: usize, h: usize, m: CMatrix) -> Self {
        let n = self.group.order();
        self.beta[g * n + h] = m;
        self
    }
}

/// Report of a character verification run.
#[derive(Clone, Debug)]
pub struct CharacterReport {
    pub valid: bool,
    /// Failing `(r, g, h)` triples of the composition law, capped.
    pub witnesses: Vec<[usize; 3]>,
    /// Invariant violations (class function, invertibility, unit
    /// normalization), capped.
    pub invariant_failures: Vec<String>,
    pub checked: usize,
}

pub const WITNESS_CAP: usize = 10;

/// Checks that the character's `beta` maps compose according to the
/// 3-cocycle: for all `(r, g, h)`,
/// `beta_{r,hg} = zeta^E * beta_{grg^-1,h} . beta_{r,g}` with
/// `E = alpha(h,g,r) + alpha(hgrg^-1h^-1,h,g) - alpha(h,grg^-1,g)`,
/// and re-checks the type invariants (dims a class function, invertible
/// betas, `beta_{g,1} = id`). Shape mismatches error out before any scalar
/// comparison.
pub fn verify_character(c: &CategoricalCharacter, alpha: &Cochain) -> Result<CharacterReport> {
    if alpha.degree() != 3 {
        return Err(Error::UnsupportedDegree(alpha.degree()));
    }
    if !alpha.is_normalized() {
        return Err(Error::Structural("alpha must be normalized".into()));
    }
    if alpha.group().order() != c.group.order() {
        return Err(Error::DimensionMismatch(
            "character and cocycle live on different groups".into(),
        ));
    }
    if alpha.modulus() != c.modulus {
        return Err(Error::DimensionMismatch(
            "character and cocycle have different moduli".into(),
        ));
    }
    require_cocycle(alpha)?;
    c.check_shapes()?;

    let group = &c.group;
    let n = group.order();
    let m = c.modulus as i64;
    let mut invariant_failures = Vec::new();
    for g in 0..n {
        for h in 0..n {
            if c.dims[g] != c.dims[group.conj(h, g)] && invariant_failures.len() < WITNESS_CAP {
                invariant_failures.push(format!("dims is not a class function at ({}, {})", g, h));
            }
            if !c.beta(g, h).is_invertible() && invariant_failures.len() < WITNESS_CAP {
                invariant_failures.push(format!("beta({},{}) is not invertible", g, h));
            }
        }
        if !c.beta(g, 0).is_identity() && invariant_failures.len() < WITNESS_CAP {
            invariant_failures.push(format!("beta({},1) is not the identity", g));
        }
    }

    // parallel over the first index; concatenation preserves lexicographic
    // order, so the reported witnesses are deterministic
    use rayon::prelude::*;
    let per_r: Vec<Result<Vec<[usize; 3]>>> = (0..n)
        .into_par_iter()
        .map(|r| {
            let mut local = Vec::new();
            for g in 0..n {
                let mid = group.conj(g, r);
                for h in 0..n {
                    let far = group.conj(h, mid);
                    let hg = group.mul(h, g);
                    let e = (alpha.eval(&[h, g, r]) as i64 + alpha.eval(&[far, h, g]) as i64
                        - alpha.eval(&[h, mid, g]) as i64)
                        .rem_euclid(m) as u32;
                    let composite = c.beta(mid, h).matmul(c.beta(r, g))?;
                    let rhs = composite.scale_root(c.modulus, e);
                    if !c.beta(r, hg).approx_eq(&rhs) && local.len() < WITNESS_CAP {
                        local.push([r, g, h]);
                    }
                }
            }
            Ok(local)
        })
        .collect();
    let mut witnesses = Vec::new();
    for chunk in per_r {
        for w in chunk? {
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(w);
            }
        }
    }
    let checked = n * n * n;

    Ok(CharacterReport {
        valid: witnesses.is_empty() && invariant_failures.is_empty(),
        witnesses,
        invariant_failures,
        checked,
    })
}

/// The character of the one-dimensional twist family: every `X(g)` is a
/// line and `beta_{g,h}` is multiplication by the transgression of `theta`
/// at the arrow `(g, h)`. Verifies against `alpha = d(theta)`.
pub fn basic_character(group: &Arc<FiniteGroup>, theta: &Cochain) -> Result<CategoricalCharacter> {
    if theta.degree() != 2 {
        return Err(Error::UnsupportedDegree(theta.degree()));
    }
    if !theta.is_normalized() {
        return Err(Error::Structural("theta must be normalized".into()));
    }
    let tau = transgress2(theta)?;
    let n = group.order();
    let mut beta = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            beta.push(CMatrix::scalar_1x1(theta.modulus(), tau.eval(g, h)));
        }
    }
    CategoricalCharacter::new(Arc::clone(group), theta.modulus(), vec![1; n], beta)
}

/// The 2-character: traces of `beta_{g,h}` over commuting pairs only.
#[derive(Clone, Debug)]
pub struct TwoCharacter {
    pub entries: BTreeMap<(usize, usize), Scalar>,
}

impl TwoCharacter {
    pub fn get(&self, g: usize, h: usize) -> Option<&Scalar> {
        self.entries.get(&(g, h))
    }
}

pub fn joint_trace(c: &CategoricalCharacter) -> TwoCharacter {
    let group = &c.group;
    let n = group.order();
    let mut entries = BTreeMap::new();
    for g in 0..n {
        for h in 0..n {
            if group.mul(g, h) == group.mul(h, g) {
                entries.insert((g, h), c.beta(g, h).trace());
            }
        }
    }
    TwoCharacter { entries }
}

/// The module structure on the direct sum of the `X(g)` induced by a
/// character: the basis arrow `(g, s)` acts by `beta_{g,s}` from the `X(g)`
/// block to the `X(sgs^-1)` block and by zero elsewhere.
#[derive(Clone, Debug)]
pub struct ModuleReport {
    pub valid: bool,
    pub total_dimension: usize,
    /// Failing `(x, y)` arrow pairs of `(xy)v = x(yv)`, capped.
    pub witnesses: Vec<(Arrow, Arrow)>,
    /// Action of each arrow with a nonzero source block.
    pub actions: Vec<(Arrow, CMatrix)>,
}

/// Builds the action tables and brute-forces the module axioms
/// `(xy) v = x (y v)` over all basis-arrow pairs, plus the unit axiom.
/// The verdict is true exactly when `verify_character` accepts the pair.
pub fn character_to_module(
    c: &CategoricalCharacter,
    double: &StructureConstants,
) -> Result<ModuleReport> {
    let group = &c.group;
    let n = group.order();
    if double.dim() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "double has dimension {}, expected {}",
            double.dim(),
            n * n
        )));
    }
    if double.modulus() != c.modulus {
        return Err(Error::DimensionMismatch(
            "character and double have different moduli".into(),
        ));
    }
    for label in double.labels() {
        let BasisLabel::Arrow(a) = label else {
            return Err(Error::Structural(
                "double basis must consist of arrows".into(),
            ));
        };
        if a.object >= n || a.conjugator >= n {
            return Err(Error::DimensionMismatch(
                "double arrows reference a larger group".into(),
            ));
        }
    }
    c.check_shapes()?;

    // action of a basis arrow on the block it starts at
    let act = |a: Arrow, block: usize| -> Option<&CMatrix> {
        (a.object == block).then(|| c.beta(a.object, a.conjugator))
    };

    let arrows: Vec<Arrow> = double
        .labels()
        .iter()
        .map(|l| match l {
            BasisLabel::Arrow(a) => *a,
            BasisLabel::Element(_) => unreachable!(),
        })
        .collect();

    let mut witnesses: Vec<(Arrow, Arrow)> = Vec::new();
    for (ix, &x) in arrows.iter().enumerate() {
        for (iy, &y) in arrows.iter().enumerate() {
            let mut pair_ok = true;
            for block in 0..n {
                if c.dims[block] == 0 {
                    continue;
                }
                // left side: (x * y) acting on the block
                let lhs: Option<CMatrix> = double.product(ix, iy).and_then(|(k, e)| {
                    let BasisLabel::Arrow(xy) = double.labels()[k] else {
                        unreachable!()
                    };
                    act(xy, block).map(|b| b.scale_root(c.modulus, e))
                });
                // right side: y first, then x
                let rhs: Option<CMatrix> = act(y, block).and_then(|by| {
                    let mid = group.conj(y.conjugator, block);
                    act(x, mid).map(|bx| bx.matmul(by).expect("shapes validated"))
                });
                let equal = match (&lhs, &rhs) {
                    (None, None) => true,
                    (Some(a), Some(b)) => a.approx_eq(b),
                    (Some(a), None) | (None, Some(a)) => a.is_zero(),
                };
                if !equal {
                    pair_ok = false;
                    break;
                }
            }
            if !pair_ok && witnesses.len() < WITNESS_CAP {
                witnesses.push((x, y));
            }
        }
    }

    // unit acts as the identity on every block
    let mut unit_ok = true;
    for &u in double.unit() {
        let BasisLabel::Arrow(a) = double.labels()[u] else {
            unreachable!()
        };
        if c.dims[a.object] > 0 && !c.beta(a.object, a.conjugator).is_identity() {
            unit_ok = false;
        }
    }

    let actions: Vec<(Arrow, CMatrix)> = arrows
        .iter()
        .filter(|a| c.dims[a.object] > 0)
        .map(|&a| (a, c.beta(a.object, a.conjugator).clone()))
        .collect();

    Ok(ModuleReport {
        valid: witnesses.is_empty() && unit_ok,
        total_dimension: c.total_dimension(),
        witnesses,
        actions,
    })
}
