//! Finite group engine backed by Cayley tables.
//!
//! Every structure in this crate is indexed by the elements of a
//! [`FiniteGroup`]: element `0` is always the identity, multiplication is a
//! dense `n x n` table and inverses are precomputed. Groups are immutable
//! after validation and shared through [`Arc`].

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Validates a raw table and builds the group. The identity is re-indexed
    /// to 0 if the table has it elsewhere.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {} has length {}, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry {} out of range in row {}",
                        v, i
                    )));
                }
            }
        }

        // locate the two-sided identity, then relabel it to index 0
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::NoIdentity)?;
        let table = if identity == 0 {
            table
        } else {
            let swap = |x: usize| {
                if x == identity {
                    0
                } else if x == 0 {
                    identity
                } else {
                    x
                }
            };
            let mut t = vec![vec![0usize; n]; n];
            for a in 0..n {
                for b in 0..n {
                    t[swap(a)][swap(b)] = swap(table[a][b]);
                }
            }
            t
        };

        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0) {
                Some(h) => inv[g] = h,
                None => return Err(Error::NoInverse(g)),
            }
        }

        let mult: Vec<usize> = table.into_iter().flatten().collect();
        let group = FiniteGroup {
            name,
            order: n,
            mult,
            inv,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Conjugation `s g s^-1`.
    #[inline]
    pub fn conj(&self, s: usize, g: usize) -> usize {
        self.mul(self.mul(s, g), self.inv(s))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn check_index(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: g,
                order: self.order,
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Order of a single element.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Conjugacy classes, each sorted, ordered by their minimal element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n).map(|s| self.conj(s, g)).collect();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(format!("cyclic:{}", n), table).expect("cyclic table is a group")
    }

    /// Dihedral group of the n-gon, order 2n. Index `i` is the rotation
    /// `r^i`, index `n + i` is the reflection `r^i s`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral parameter must be positive");
        let idx = |rot: usize, refl: bool| if refl { n + rot } else { rot };
        let mut table = vec![vec![0usize; 2 * n]; 2 * n];
        for a in 0..2 * n {
            for b in 0..2 * n {
                let (ra, fa) = if a < n { (a, false) } else { (a - n, true) };
                let (rb, fb) = if b < n { (b, false) } else { (b - n, true) };
                // (r^ra s^fa)(r^rb s^fb): s r^k = r^{-k} s
                let rot = if fa { (ra + n - rb % n) % n } else { (ra + rb) % n };
                table[a][b] = idx(rot, fa ^ fb);
            }
        }
        FiniteGroup::from_table(format!("dihedral:{}", n), table).expect("dihedral table is a group")
    }

    /// Symmetric group on n letters, n <= 4. Permutations are indexed by the
    /// lexicographic rank of their one-line notation, so the identity is 0.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::BadSpec(format!(
                "symmetric:{} not supported (1 <= n <= 4)",
                n
            )));
        }
        let perms = permutations(n);
        let rank = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation listed");
        let order = perms.len();
        let mut table = vec![vec![0usize; order]; order];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                // composition p after q
                let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                table[a][b] = rank(&comp);
            }
        }
        Ok(FiniteGroup::from_table(format!("symmetric:{}", n), table)
            .expect("symmetric table is a group"))
    }

    /// Quaternion group of order 8: 1, i, j, k, -1, -i, -j, -k.
    pub fn quaternion8() -> Self {
        // element = (axis, sign) with axis in {1, i, j, k}
        let mul = |a: usize, b: usize| -> usize {
            let (ax, asgn) = (a % 4, a / 4);
            let (bx, bsgn) = (b % 4, b / 4);
            let (cx, csgn) = match (ax, bx) {
                (0, x) => (x, 0),
                (x, 0) => (x, 0),
                (x, y) if x == y => (0, 1),
                (1, 2) => (3, 0),
                (2, 1) => (3, 1),
                (2, 3) => (1, 0),
                (3, 2) => (1, 1),
                (3, 1) => (2, 0),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            };
            cx + 4 * ((asgn + bsgn + csgn) % 2)
        };
        let table = (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect();
        FiniteGroup::from_table("quaternion:8", table).expect("quaternion table is a group")
    }

    /// Direct product; element `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut table = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                table[x][y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        FiniteGroup::from_table(format!("product:({},{})", a.name, b.name), table)
            .expect("product table is a group")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// A subgroup of a parent group, stored as a sorted member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRef {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl SubgroupRef {
    /// Validates closure under multiplication and inverse (and 0 membership).
    pub fn new(parent: Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            parent.check_index(m)?;
        }
        if members.first() != Some(&0) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        let set: BTreeSet<usize> = members.iter().copied().collect();
        for &a in &members {
            if !set.contains(&parent.inv(a)) {
                return Err(Error::NotSubgroup(format!("missing inverse of {}", a)));
            }
            for &b in &members {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "not closed: {} * {} escapes",
                        a, b
                    )));
                }
            }
        }
        Ok(SubgroupRef { parent, members })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Position of a parent element in the member list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    /// Whole group as a subgroup of itself.
    pub fn full(parent: Arc<FiniteGroup>) -> Self {
        let members = (0..parent.order()).collect();
        SubgroupRef { parent, members }
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        SubgroupRef {
            parent,
            members: vec![0],
        }
    }

    /// Materializes the subgroup as a group in its own right, with element
    /// `i` corresponding to `members()[i]` (the recorded embedding).
    pub fn as_group(&self) -> Arc<FiniteGroup> {
        let k = self.members.len();
        let table: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let prod = self.parent.mul(self.members[i], self.members[j]);
                        self.position(prod).expect("closure validated")
                    })
                    .collect()
            })
            .collect();
        Arc::new(
            FiniteGroup::from_table(
                format!("{}<{:?}>", self.parent.name(), self.members),
                table,
            )
            .expect("subgroup table is a group"),
        )
    }

    /// Conjugate subgroup `g H g^-1`.
    pub fn conjugate(&self, g: usize) -> SubgroupRef {
        let mut members: Vec<usize> = self
            .members
            .iter()
            .map(|&h| self.parent.conj(g, h))
            .collect();
        members.sort_unstable();
        SubgroupRef {
            parent: Arc::clone(&self.parent),
            members,
        }
    }
}

/// `{h : hg = gh}`, sorted; always a subgroup.
pub fn centralizer(group: &Arc<FiniteGroup>, g: usize) -> Result<SubgroupRef> {
    group.check_index(g)?;
    let members: Vec<usize> = group
        .elements()
        .filter(|&h| group.mul(h, g) == group.mul(g, h))
        .collect();
    Ok(SubgroupRef {
        parent: Arc::clone(group),
        members,
    })
}

/// `{g : g H g^-1 = H}`.
pub fn normalizer(group: &Arc<FiniteGroup>, h: &SubgroupRef) -> SubgroupRef {
    let members: Vec<usize> = group
        .elements()
        .filter(|&g| {
            h.members()
                .iter()
                .all(|&x| h.contains(group.conj(g, x)))
        })
        .collect();
    SubgroupRef {
        parent: Arc::clone(group),
        members,
    }
}

fn closure(group: &FiniteGroup, seed: &BTreeSet<usize>) -> Vec<usize> {
    let mut set = seed.clone();
    set.insert(0);
    loop {
        let mut grew = false;
        let current: Vec<usize> = set.iter().copied().collect();
        for &a in &current {
            for &b in &current {
                if set.insert(group.mul(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    set.into_iter().collect()
}

/// All subgroups, grouped into conjugacy classes. Classes are ordered by
/// (order, lexicographic member list of the minimal representative) and each
/// class lists its members in lexicographic order.
///
/// Enumeration closes the cyclic subgroups under pairwise joins, which is
/// exhaustive; the default order bound keeps this at desk scale.
pub fn enumerate_subgroups(
    group: &Arc<FiniteGroup>,
    bound: Option<usize>,
) -> Result<Vec<Vec<SubgroupRef>>> {
    let bound = bound.unwrap_or(64);
    if group.order() > bound {
        return Err(Error::OrderBound {
            order: group.order(),
            bound,
        });
    }

    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    all.insert(vec![0]);
    for g in group.elements() {
        all.insert(closure(group, &BTreeSet::from([g])));
    }
    loop {
        let snapshot: Vec<Vec<usize>> = all.iter().cloned().collect();
        let mut grew = false;
        for a in &snapshot {
            for b in &snapshot {
                let seed: BTreeSet<usize> = a.iter().chain(b.iter()).copied().collect();
                if all.insert(closure(group, &seed)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for members in &all {
        if seen.contains(members) {
            continue;
        }
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in group.elements() {
            let mut conj: Vec<usize> = members.iter().map(|&h| group.conj(g, h)).collect();
            conj.sort_unstable();
            orbit.insert(conj);
        }
        for m in &orbit {
            seen.insert(m.clone());
        }
        classes.push(orbit.into_iter().collect());
    }
    classes.sort_by(|a, b| (a[0].len(), &a[0]).cmp(&(b[0].len(), &b[0])));

    Ok(classes
        .into_iter()
        .map(|class| {
            class
                .into_iter()
                .map(|members| SubgroupRef {
                    parent: Arc::clone(group),
                    members,
                })
                .collect()
        })
        .collect())
}

/// One representative per left coset `rH`, each the minimal index in its
/// coset, in increasing order. The identity coset comes first.
pub fn coset_representatives(group: &Arc<FiniteGroup>, h: &SubgroupRef) -> Result<Vec<usize>> {
    // re-validate closure: the spec wants an error, not garbage cosets
    SubgroupRef::new(Arc::clone(group), h.members().to_vec())?;
    let n = group.order();
    let mut covered = vec![false; n];
    let mut reps = Vec::with_capacity(n / h.order());
    for g in 0..n {
        if covered[g] {
            continue;
        }
        reps.push(g);
        for &x in h.members() {
            covered[group.mul(g, x)] = true;
        }
    }
    Ok(reps)
}

/// Parsed form of a group constructor string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Grammar: `cyclic:4`, `dihedral:3`, `symmetric:3`, `quaternion:8`,
    /// `product:(A,B)` with nesting.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::BadSpec(format!("missing ':' in group spec '{}'", s)))?;
        let arg_num = |rest: &str| -> Result<usize> {
            rest.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadSpec(format!("bad numeric argument '{}'", rest)))
        };
        match head {
            "cyclic" => {
                let n = arg_num(rest)?;
                if n == 0 {
                    return Err(Error::BadSpec("cyclic order must be positive".into()));
                }
                Ok(GroupSpec::Cyclic(n))
            }
            "dihedral" => {
                let n = arg_num(rest)?;
                if n == 0 {
                    return Err(Error::BadSpec("dihedral parameter must be positive".into()));
                }
                Ok(GroupSpec::Dihedral(n))
            }
            "symmetric" => {
                let n = arg_num(rest)?;
                if n == 0 || n > 4 {
                    return Err(Error::BadSpec("symmetric:n needs 1 <= n <= 4".into()));
                }
                Ok(GroupSpec::Symmetric(n))
            }
            "quaternion" => {
                if arg_num(rest)? != 8 {
                    return Err(Error::BadSpec("only quaternion:8 is supported".into()));
                }
                Ok(GroupSpec::Quaternion8)
            }
            "product" => {
                let rest = rest.trim();
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| {
                        Error::BadSpec("product spec needs the form product:(A,B)".into())
                    })?;
                let mut depth = 0usize;
                let mut split = None;
                for (i, c) in inner.char_indices() {
                    match c {
                        '(' => depth += 1,
                        ')' => {
                            depth = depth.checked_sub(1).ok_or_else(|| {
                                Error::BadSpec("unbalanced parentheses".into())
                            })?
                        }
                        ',' if depth == 0 => {
                            split = Some(i);
                            break;
                        }
                        _ => {}
                    }
                }
                let i = split
                    .ok_or_else(|| Error::BadSpec("product spec needs two components".into()))?;
                Ok(GroupSpec::Product(
                    Box::new(GroupSpec::parse(&inner[..i])?),
                    Box::new(GroupSpec::parse(&inner[i + 1..])?),
                ))
            }
            other => Err(Error::BadSpec(format!("unknown group constructor '{}'", other))),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        Ok(match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n)?,
            GroupSpec::Quaternion8 => FiniteGroup::quaternion8(),
            GroupSpec::Product(a, b) => FiniteGroup::product(&a.build()?, &b.build()?),
        })
    }
}

/// Builds a group from a constructor string, validating the result.
pub fn load_group(spec: &str) -> Result<Arc<FiniteGroup>> {
    Ok(Arc::new(GroupSpec::parse(spec)?.build()?))
}
