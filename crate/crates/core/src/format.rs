//! On-disk JSON schemas: groups, cochains and cochain constructors,
//! groupoid cochains, structure constants, characters and module-category
//! labels. Sparse tables use comma-joined index keys with omitted entries
//! equal to zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::StructureConstants;
use crate::character::{CMatrix, CategoricalCharacter};
use crate::cochain::{external_product, inflate, is_cocycle, random_normalized, Cochain};
use crate::cochain::standard_cyclic_3cocycle;
use crate::error::{Error, Result};
use crate::group::{load_group, FiniteGroup, SubgroupRef};
use crate::inertia::{GroupoidCochain1, GroupoidCochain2};
use crate::modcat::{DecompositionReport, ModuleCategoryLabel};
use crate::scalar::CycInt;
use crate::twogroup::{SkeletalTwoGroup, TwoGroupHom, TwoGroupTransformation};

/// `{"name": ..., "order": n, "table": [[..]; n]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        if self.table.len() != self.order {
            return Err(Error::MalformedTable(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        Ok(Arc::new(FiniteGroup::from_table(
            self.name.clone(),
            self.table.clone(),
        )?))
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson {
            name: g.name().to_string(),
            order: g.order(),
            table: g.table(),
        }
    }
}

/// A group reference: a constructor string or an inline table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupField {
    Spec(String),
    Inline(GroupJson),
}

impl GroupField {
    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        match self {
            GroupField::Spec(s) => load_group(s),
            GroupField::Inline(j) => j.build(),
        }
    }
}

fn parse_tuple_key(key: &str, degree: usize, order: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = if key.is_empty() {
        vec![]
    } else {
        key.split(',').collect()
    };
    if parts.len() != degree {
        return Err(Error::BadSpec(format!(
            "key '{}' has {} components, expected {}",
            key,
            parts.len(),
            degree
        )));
    }
    let mut out = Vec::with_capacity(degree);
    for p in parts {
        let v: usize = p
            .trim()
            .parse()
            .map_err(|_| Error::BadSpec(format!("bad index '{}' in key '{}'", p, key)))?;
        if v >= order {
            return Err(Error::IndexOutOfRange {
                index: v,
                order,
            });
        }
        out.push(v);
    }
    Ok(out)
}

fn dense_from_sparse(
    entries: &BTreeMap<String, u32>,
    degree: usize,
    order: usize,
    modulus: u32,
) -> Result<Vec<u32>> {
    let mut table = vec![0u32; order.pow(degree as u32)];
    for (key, &value) in entries {
        let tuple = parse_tuple_key(key, degree, order)?;
        if value >= modulus {
            return Err(Error::EntryOutOfRange { value, modulus });
        }
        table[crate::cochain::tuple_index(&tuple, order)] = value;
    }
    Ok(table)
}

fn sparse_from_dense(entries: &[u32], degree: usize, order: usize) -> BTreeMap<String, u32> {
    let mut out = BTreeMap::new();
    for (idx, &v) in entries.iter().enumerate() {
        if v != 0 {
            let tuple = crate::cochain::tuple_of(idx, degree, order);
            let key = tuple
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.insert(key, v);
        }
    }
    out
}

/// `{"group": ..., "degree": k, "modulus": N, "entries": {"g1,g2": e}}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainJson {
    pub group: GroupField,
    pub degree: usize,
    pub modulus: u32,
    #[serde(default)]
    pub entries: BTreeMap<String, u32>,
}

impl CochainJson {
    pub fn to_cochain(&self) -> Result<Cochain> {
        let group = self.group.build()?;
        let table = dense_from_sparse(&self.entries, self.degree, group.order(), self.modulus)?;
        Cochain::new(group, self.degree, self.modulus, table)
    }

    pub fn from_cochain(c: &Cochain) -> Self {
        CochainJson {
            group: GroupField::Inline(GroupJson::from_group(c.group())),
            degree: c.degree(),
            modulus: c.modulus(),
            entries: sparse_from_dense(c.entries(), c.degree(), c.group().order()),
        }
    }
}

/// Constructor forms accepted wherever a cochain is expected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CochainSpecJson {
    StandardCyclic {
        standard_cyclic: CyclicSpec,
    },
    Inflation {
        inflation: Box<InflationSpec>,
    },
    External {
        external: Box<ExternalSpec>,
    },
    Random {
        random: RandomSpec,
    },
    Table(CochainJson),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclicSpec {
    pub n: usize,
    pub k: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InflationSpec {
    pub group: GroupField,
    /// Elementwise quotient map from the group onto the inner cochain's group.
    pub map: Vec<usize>,
    pub inner: CochainSpecJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExternalSpec {
    pub left: CochainSpecJson,
    pub right: CochainSpecJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RandomSpec {
    pub group: GroupField,
    pub degree: usize,
    pub modulus: u32,
    pub seed: u64,
}

/// Builds a cochain from any accepted spec form. Inflation and external
/// products of cocycles are checked to remain cocycles.
pub fn build_cochain(spec: &CochainSpecJson) -> Result<Cochain> {
    match spec {
        CochainSpecJson::Table(j) => j.to_cochain(),
        CochainSpecJson::StandardCyclic { standard_cyclic } => {
            if standard_cyclic.n == 0 {
                return Err(Error::BadSpec("cyclic order must be positive".into()));
            }
            Ok(standard_cyclic_3cocycle(standard_cyclic.n, standard_cyclic.k))
        }
        CochainSpecJson::Inflation { inflation } => {
            let inner = build_cochain(&inflation.inner)?;
            let group = inflation.group.build()?;
            let out = inflate(&inner, group, &inflation.map)?;
            check_cocycle_preserved(&inner, &out)?;
            Ok(out)
        }
        CochainSpecJson::External { external } => {
            let left = build_cochain(&external.left)?;
            let right = build_cochain(&external.right)?;
            let out = external_product(&left, &right)?;
            if (1..=3).contains(&left.degree())
                && (1..=3).contains(&right.degree())
                && is_cocycle(&left)?.is_cocycle
                && is_cocycle(&right)?.is_cocycle
                && (1..=3).contains(&out.degree())
            {
                let v = is_cocycle(&out)?;
                if !v.is_cocycle {
                    return Err(Error::NotCocycle(v.witness.unwrap_or_default()));
                }
            }
            Ok(out)
        }
        CochainSpecJson::Random { random } => {
            let group = random.group.build()?;
            random_normalized(group, random.degree, random.modulus, random.seed)
        }
    }
}

fn check_cocycle_preserved(inner: &Cochain, out: &Cochain) -> Result<()> {
    if (1..=3).contains(&inner.degree()) && is_cocycle(inner)?.is_cocycle {
        let v = is_cocycle(out)?;
        if !v.is_cocycle {
            return Err(Error::NotCocycle(v.witness.unwrap_or_default()));
        }
    }
    Ok(())
}

/// Groupoid cochain JSON, mirroring the cochain schema with arrow keys
/// `"g,s"` (degree 1) or composable-pair keys `"g,s,t"` (degree 2).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupoidCochainJson {
    pub group: GroupField,
    pub degree: usize,
    pub modulus: u32,
    #[serde(default)]
    pub entries: BTreeMap<String, u32>,
}

impl GroupoidCochainJson {
    pub fn from_degree1(x: &GroupoidCochain1) -> Self {
        let n = x.group().order();
        let mut entries = BTreeMap::new();
        for g in 0..n {
            for s in 0..n {
                let v = x.eval(g, s);
                if v != 0 {
                    entries.insert(format!("{},{}", g, s), v);
                }
            }
        }
        GroupoidCochainJson {
            group: GroupField::Inline(GroupJson::from_group(x.group())),
            degree: 1,
            modulus: x.modulus(),
            entries,
        }
    }

    pub fn from_degree2(x: &GroupoidCochain2) -> Self {
        let n = x.group().order();
        let mut entries = BTreeMap::new();
        for g in 0..n {
            for s in 0..n {
                for t in 0..n {
                    let v = x.eval(g, s, t);
                    if v != 0 {
                        entries.insert(format!("{},{},{}", g, s, t), v);
                    }
                }
            }
        }
        GroupoidCochainJson {
            group: GroupField::Inline(GroupJson::from_group(x.group())),
            degree: 2,
            modulus: x.modulus(),
            entries,
        }
    }

    pub fn to_degree1(&self) -> Result<GroupoidCochain1> {
        if self.degree != 1 {
            return Err(Error::UnsupportedDegree(self.degree));
        }
        let group = self.group.build()?;
        let table = dense_from_sparse(&self.entries, 2, group.order(), self.modulus)?;
        GroupoidCochain1::new(group, self.modulus, table)
    }

    pub fn to_degree2(&self) -> Result<GroupoidCochain2> {
        if self.degree != 2 {
            return Err(Error::UnsupportedDegree(self.degree));
        }
        let group = self.group.build()?;
        let table = dense_from_sparse(&self.entries, 3, group.order(), self.modulus)?;
        GroupoidCochain2::new(group, self.modulus, table)
    }
}

/// Structure constants export:
/// `{"basis": [...], "modulus": N, "products": [[i,j,k,e] | [i,j,"zero"]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub basis: Vec<String>,
    pub modulus: u32,
    pub products: Vec<ProductEntryJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProductEntryJson {
    Nonzero(usize, usize, usize, u32),
    Zero(usize, usize, String),
}

impl StructureConstantsJson {
    pub fn from_structure_constants(sc: &StructureConstants) -> Self {
        let basis = sc.labels().iter().map(|l| l.to_string()).collect();
        let mut products = Vec::with_capacity(sc.dim() * sc.dim());
        for i in 0..sc.dim() {
            for j in 0..sc.dim() {
                products.push(match sc.product(i, j) {
                    Some((k, e)) => ProductEntryJson::Nonzero(i, j, k, e),
                    None => ProductEntryJson::Zero(i, j, "zero".to_string()),
                });
            }
        }
        StructureConstantsJson {
            basis,
            modulus: sc.modulus(),
            products,
        }
    }
}

/// Character JSON entry: a root-of-unity exponent, a complex double, or a
/// literal `0` for a vanishing entry.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntryJson {
    Exp { e: u32 },
    Complex { re: f64, im: f64 },
    Zero(i64),
}

/// `{"group": ..., "modulus": N, "dims": {"g": d}, "beta": {"g,h": [[..]]}}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterJson {
    pub group: GroupField,
    pub modulus: u32,
    pub dims: BTreeMap<String, usize>,
    pub beta: BTreeMap<String, Vec<Vec<MatrixEntryJson>>>,
}

impl CharacterJson {
    pub fn to_character(&self) -> Result<CategoricalCharacter> {
        let group = self.group.build()?;
        let n = group.order();
        let mut dims = vec![0usize; n];
        for (key, &d) in &self.dims {
            let idx = parse_tuple_key(key, 1, n)?[0];
            dims[idx] = d;
        }
        let mut beta: Vec<Option<CMatrix>> = vec![None; n * n];
        for (key, rows) in &self.beta {
            let pair = parse_tuple_key(key, 2, n)?;
            let (g, h) = (pair[0], pair[1]);
            let target = group.conj(h, g);
            let m = build_matrix(rows, dims[target], dims[g], self.modulus)?;
            beta[g * n + h] = Some(m);
        }
        let beta: Vec<CMatrix> = beta
            .into_iter()
            .enumerate()
            .map(|(idx, m)| {
                m.unwrap_or_else(|| {
                    // omitted matrices default to the identity where shapes
                    // allow; a zero-dimensional block is the empty matrix
                    let g = idx / n;
                    let h = idx % n;
                    let target = group.conj(h, g);
                    if dims[g] == dims[target] {
                        CMatrix::identity_exact(dims[g], self.modulus)
                    } else {
                        CMatrix::exact(dims[target], dims[g], vec![]).unwrap_or_else(|_| {
                            CMatrix::identity_exact(0, self.modulus)
                        })
                    }
                })
            })
            .collect();
        CategoricalCharacter::new(group, self.modulus, dims, beta)
    }

    pub fn from_character(c: &CategoricalCharacter) -> Self {
        let n = c.group().order();
        let mut dims = BTreeMap::new();
        for g in 0..n {
            dims.insert(g.to_string(), c.dims()[g]);
        }
        let mut beta = BTreeMap::new();
        for g in 0..n {
            for h in 0..n {
                let m = c.beta(g, h);
                let mut rows = Vec::with_capacity(m.rows);
                for i in 0..m.rows {
                    let mut row = Vec::with_capacity(m.cols);
                    for j in 0..m.cols {
                        row.push(entry_to_json(c.modulus(), &m.entry(i, j)));
                    }
                    rows.push(row);
                }
                beta.insert(format!("{},{}", g, h), rows);
            }
        }
        CharacterJson {
            group: GroupField::Inline(GroupJson::from_group(c.group())),
            modulus: c.modulus(),
            dims,
            beta,
        }
    }
}

fn entry_to_json(modulus: u32, s: &crate::scalar::Scalar) -> MatrixEntryJson {
    match s {
        crate::scalar::Scalar::Exact(c) => {
            if c.is_zero() {
                return MatrixEntryJson::Zero(0);
            }
            for e in 0..modulus {
                if *c == CycInt::root_power(modulus, e) {
                    return MatrixEntryJson::Exp { e };
                }
            }
            let z = c.to_complex();
            MatrixEntryJson::Complex { re: z.re, im: z.im }
        }
        crate::scalar::Scalar::Float(z) => MatrixEntryJson::Complex { re: z.re, im: z.im },
    }
}

fn build_matrix(
    rows: &[Vec<MatrixEntryJson>],
    expect_rows: usize,
    expect_cols: usize,
    modulus: u32,
) -> Result<CMatrix> {
    if rows.len() != expect_rows || rows.iter().any(|r| r.len() != expect_cols) {
        return Err(Error::Structural(format!(
            "matrix shape mismatch: expected {}x{}",
            expect_rows, expect_cols
        )));
    }
    let any_float = rows
        .iter()
        .flatten()
        .any(|e| matches!(e, MatrixEntryJson::Complex { .. }));
    if any_float {
        let mut data = Vec::with_capacity(expect_rows * expect_cols);
        for row in rows {
            for e in row {
                data.push(match e {
                    MatrixEntryJson::Exp { e } => Complex64::from_polar(
                        1.0,
                        2.0 * std::f64::consts::PI * (*e % modulus) as f64 / modulus as f64,
                    ),
                    MatrixEntryJson::Complex { re, im } => Complex64::new(*re, *im),
                    MatrixEntryJson::Zero(v) => {
                        if *v != 0 {
                            return Err(Error::BadSpec(
                                "numeric matrix entries must be 0".into(),
                            ));
                        }
                        Complex64::new(0.0, 0.0)
                    }
                });
            }
        }
        CMatrix::float(expect_rows, expect_cols, data)
    } else {
        let mut data = Vec::with_capacity(expect_rows * expect_cols);
        for row in rows {
            for e in row {
                data.push(match e {
                    MatrixEntryJson::Exp { e } => {
                        if *e >= modulus {
                            return Err(Error::EntryOutOfRange {
                                value: *e,
                                modulus,
                            });
                        }
                        CycInt::root_power(modulus, *e)
                    }
                    MatrixEntryJson::Zero(v) => {
                        if *v != 0 {
                            return Err(Error::BadSpec(
                                "numeric matrix entries must be 0".into(),
                            ));
                        }
                        CycInt::zero(modulus)
                    }
                    MatrixEntryJson::Complex { .. } => unreachable!(),
                });
            }
        }
        CMatrix::exact(expect_rows, expect_cols, data)
    }
}

/// Module-category label: `{"subgroup": [members], "theta": {...}}` with the
/// theta table indexed in the subgroup's own element numbering.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LabelJson {
    pub subgroup: Vec<usize>,
    pub theta: SubgroupCochainJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubgroupCochainJson {
    pub degree: usize,
    pub modulus: u32,
    #[serde(default)]
    pub entries: BTreeMap<String, u32>,
}

impl LabelJson {
    pub fn to_label(&self, parent: &Arc<FiniteGroup>) -> Result<ModuleCategoryLabel> {
        let subgroup = SubgroupRef::new(Arc::clone(parent), self.subgroup.clone())?;
        let h_group = subgroup.as_group();
        let table = dense_from_sparse(
            &self.theta.entries,
            self.theta.degree,
            h_group.order(),
            self.theta.modulus,
        )?;
        let theta = Cochain::new(h_group, self.theta.degree, self.theta.modulus, table)?;
        Ok(ModuleCategoryLabel { subgroup, theta })
    }

    pub fn from_label(label: &ModuleCategoryLabel) -> Self {
        LabelJson {
            subgroup: label.subgroup.members().to_vec(),
            theta: SubgroupCochainJson {
                degree: label.theta.degree(),
                modulus: label.theta.modulus(),
                entries: sparse_from_dense(
                    label.theta.entries(),
                    label.theta.degree(),
                    label.theta.group().order(),
                ),
            },
        }
    }
}

/// Decomposition report: labels with multiplicities.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionReportJson {
    pub labels: Vec<LabelMultiplicityJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LabelMultiplicityJson {
    #[serde(flatten)]
    pub label: LabelJson,
    pub multiplicity: usize,
}

impl DecompositionReportJson {
    pub fn to_report(&self, parent: &Arc<FiniteGroup>) -> Result<DecompositionReport> {
        let mut items = Vec::new();
        for lm in &self.labels {
            items.push((lm.label.to_label(parent)?, lm.multiplicity));
        }
        Ok(DecompositionReport { items })
    }
}

/// Skeletal two-group JSON: group, modulus, optional action (default
/// trivial), and the 3-cocycle as a sparse table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwoGroupJson {
    pub group: GroupField,
    pub modulus: u32,
    #[serde(default)]
    pub action: Option<Vec<u32>>,
    #[serde(default)]
    pub alpha: BTreeMap<String, u32>,
}

impl TwoGroupJson {
    pub fn to_two_group(&self) -> Result<SkeletalTwoGroup> {
        let group = self.group.build()?;
        let table = dense_from_sparse(&self.alpha, 3, group.order(), self.modulus)?;
        let alpha = Cochain::new(Arc::clone(&group), 3, self.modulus, table)?;
        match &self.action {
            Some(a) => SkeletalTwoGroup::new(group, self.modulus, a.clone(), alpha),
            None => SkeletalTwoGroup::with_trivial_action(group, self.modulus, alpha),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomJson {
    pub source: TwoGroupJson,
    pub target: TwoGroupJson,
    pub rho: Vec<usize>,
    #[serde(default)]
    pub f: u32,
    #[serde(default)]
    pub gamma: BTreeMap<String, u32>,
}

impl HomJson {
    pub fn to_hom(&self) -> Result<TwoGroupHom> {
        let source = self.source.to_two_group()?;
        let target = self.target.to_two_group()?;
        let table = dense_from_sparse(
            &self.gamma,
            2,
            source.group().order(),
            target.modulus(),
        )?;
        let gamma = Cochain::new(
            Arc::clone(source.group()),
            2,
            target.modulus(),
            table,
        )?;
        TwoGroupHom::new(source, target, self.rho.clone(), self.f, gamma)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransformationJson {
    pub s: usize,
    #[serde(default)]
    pub eta: BTreeMap<String, u32>,
}

impl TransformationJson {
    pub fn to_transformation(&self, hom: &TwoGroupHom) -> Result<TwoGroupTransformation> {
        let table = dense_from_sparse(
            &self.eta,
            1,
            hom.source.group().order(),
            hom.target.modulus(),
        )?;
        let eta = Cochain::new(
            Arc::clone(hom.source.group()),
            1,
            hom.target.modulus(),
            table,
        )?;
        Ok(TwoGroupTransformation { s: self.s, eta })
    }
}

/// Input for the two-group verifier subcommand, tagged by `check`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "check")]
pub enum TwoGroupInstanceJson {
    #[serde(rename = "hom")]
    Hom { hom: HomJson },
    #[serde(rename = "transformation")]
    Transformation {
        from: HomJson,
        to: HomJson,
        transformation: TransformationJson,
    },
    #[serde(rename = "modification")]
    Modification {
        from: HomJson,
        to: HomJson,
        t1: TransformationJson,
        t2: TransformationJson,
        omega: u32,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::coboundary;

    #[test]
    fn group_json_roundtrip() {
        let g = FiniteGroup::dihedral(3);
        let json = GroupJson::from_group(&g);
        let rebuilt = json.build().unwrap();
        assert_eq!(rebuilt.table(), g.table());
    }

    #[test]
    fn group_field_spec_strings() {
        let g = GroupField::Spec("product:(cyclic:2,cyclic:3)".into())
            .build()
            .unwrap();
        assert_eq!(g.order(), 6);
        assert!(GroupField::Spec("nope:1".into()).build().is_err());
    }

    #[test]
    fn cochain_json_roundtrip_sparse() {
        let alpha = standard_cyclic_3cocycle(4, 1);
        let json = CochainJson::from_cochain(&alpha);
        // omitted zeros: entries only where nonzero
        assert!(json.entries.values().all(|&v| v != 0));
        let back = json.to_cochain().unwrap();
        assert_eq!(back, alpha);
    }

    #[test]
    fn cochain_spec_forms() {
        let parsed: CochainSpecJson =
            serde_json::from_str(r#"{"standard_cyclic": {"n": 4, "k": 1}}"#).unwrap();
        let c = build_cochain(&parsed).unwrap();
        assert_eq!(c, standard_cyclic_3cocycle(4, 1));

        let parsed: CochainSpecJson = serde_json::from_str(
            r#"{"random": {"group": "symmetric:3", "degree": 2, "modulus": 4, "seed": 7}}"#,
        )
        .unwrap();
        let c1 = build_cochain(&parsed).unwrap();
        let c2 = build_cochain(&parsed).unwrap();
        assert_eq!(c1, c2);

        let parsed: CochainSpecJson = serde_json::from_str(
            r#"{"inflation": {"group": "product:(cyclic:2,cyclic:2)",
                               "map": [0, 0, 1, 1],
                               "inner": {"standard_cyclic": {"n": 2, "k": 1}}}}"#,
        )
        .unwrap();
        let c = build_cochain(&parsed).unwrap();
        assert_eq!(c.group().order(), 4);
        assert!(is_cocycle(&c).unwrap().is_cocycle);

        let parsed: CochainSpecJson = serde_json::from_str(
            r#"{"external": {"left": {"group": "cyclic:2", "degree": 1, "modulus": 2,
                                       "entries": {"1": 1}},
                              "right": {"group": "cyclic:2", "degree": 1, "modulus": 2,
                                        "entries": {"1": 1}}}}"#,
        )
        .unwrap();
        let c = build_cochain(&parsed).unwrap();
        assert_eq!(c.degree(), 2);
        assert_eq!(c.group().order(), 4);

        // explicit table with all defaults is the zero cochain
        let parsed: CochainSpecJson =
            serde_json::from_str(r#"{"group": "cyclic:3", "degree": 2, "modulus": 5}"#).unwrap();
        assert!(build_cochain(&parsed).unwrap().is_zero());
    }

    #[test]
    fn malformed_specs_rejected() {
        let j: CochainJson = serde_json::from_str(
            r#"{"group": "cyclic:2", "degree": 2, "modulus": 2, "entries": {"1,1": 5}}"#,
        )
        .unwrap();
        assert!(matches!(
            j.to_cochain(),
            Err(Error::EntryOutOfRange { .. })
        ));
        let j: CochainJson = serde_json::from_str(
            r#"{"group": "cyclic:2", "degree": 2, "modulus": 2, "entries": {"1": 1}}"#,
        )
        .unwrap();
        assert!(j.to_cochain().is_err());
        let j: CochainJson = serde_json::from_str(
            r#"{"group": "cyclic:2", "degree": 2, "modulus": 2, "entries": {"1,7": 1}}"#,
        )
        .unwrap();
        assert!(j.to_cochain().is_err());
    }

    #[test]
    fn groupoid_cochain_roundtrip() {
        let theta = crate::cochain::random_normalized(
            Arc::new(FiniteGroup::symmetric(3).unwrap()),
            2,
            4,
            3,
        )
        .unwrap();
        let tau = crate::inertia::transgress2(&theta).unwrap();
        let json = GroupoidCochainJson::from_degree1(&tau);
        assert_eq!(json.to_degree1().unwrap(), tau);

        let psi = crate::inertia::groupoid_coboundary(&tau);
        let json2 = GroupoidCochainJson::from_degree2(&psi);
        assert_eq!(json2.to_degree2().unwrap(), psi);
    }

    #[test]
    fn character_json_roundtrip() {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let theta = crate::cochain::random_normalized(Arc::clone(&g), 2, 4, 5).unwrap();
        let c = crate::character::basic_character(&g, &theta).unwrap();
        let json = CharacterJson::from_character(&c);
        let back = json.to_character().unwrap();
        let alpha = coboundary(&theta).unwrap();
        assert!(crate::character::verify_character(&back, &alpha)
            .unwrap()
            .valid);
    }

    #[test]
    fn character_json_with_floats() {
        let text = r#"{
            "group": "cyclic:2",
            "modulus": 2,
            "dims": {"0": 1, "1": 1},
            "beta": {
                "0,0": [[{"e": 0}]],
                "0,1": [[{"re": 1.0, "im": 0.0}]],
                "1,0": [[{"e": 0}]],
                "1,1": [[{"re": -1.0, "im": 0.0}]]
            }
        }"#;
        let json: CharacterJson = serde_json::from_str(text).unwrap();
        let c = json.to_character().unwrap();
        assert_eq!(c.dims(), &[1, 1]);
        assert!(c.beta(0, 1).is_invertible());
    }

    #[test]
    fn label_json_roundtrip() {
        let alpha = standard_cyclic_3cocycle(2, 0);
        let g = Arc::clone(alpha.group());
        let labels =
            crate::modcat::enumerate_indecomposables(&g, &alpha, 2).unwrap();
        for label in &labels {
            let json = LabelJson::from_label(label);
            let back = json.to_label(&g).unwrap();
            assert!(back.is_valid(&alpha, 2).unwrap());
            assert_eq!(back.subgroup.members(), label.subgroup.members());
        }
    }

    #[test]
    fn structure_constants_export_shape() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let alpha = standard_cyclic_3cocycle(2, 1);
        let sc = crate::algebra::twisted_drinfeld_double(&g, &alpha).unwrap();
        let json = StructureConstantsJson::from_structure_constants(&sc);
        assert_eq!(json.basis.len(), 4);
        assert_eq!(json.products.len(), 16);
        let zeros = json
            .products
            .iter()
            .filter(|p| matches!(p, ProductEntryJson::Zero(..)))
            .count();
        assert_eq!(zeros, 8, "half the products are non-composable");
        // serde emits [i,j,k,e] and [i,j,"zero"] arrays
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains(r#"["#));
        assert!(text.contains(r#""zero""#));
    }

    #[test]
    fn two_group_instance_parsing() {
        let text = r#"{
            "check": "hom",
            "hom": {
                "source": {"group": "cyclic:2", "modulus": 2},
                "target": {"group": "cyclic:2", "modulus": 2},
                "rho": [0, 1],
                "f": 1
            }
        }"#;
        let inst: TwoGroupInstanceJson = serde_json::from_str(text).unwrap();
        let TwoGroupInstanceJson::Hom { hom } = inst else {
            panic!("expected hom");
        };
        let hom = hom.to_hom().unwrap();
        assert!(crate::twogroup::verify_hom(&hom).unwrap().valid);
    }
}
