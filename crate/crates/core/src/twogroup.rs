//! Skeletal categorical groups `(G, Z/N, action, alpha)` and the three
//! defining equations of their homomorphisms, transformations and
//! modifications: the hexagon equation, the eight-term equation and the
//! conjugation equation on 0-cochains. All three verifiers are decision
//! procedures over the full tuple range.

use std::sync::Arc;

use crate::cochain::{coboundary_with_action, Cochain, ExponentScalar};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A skeletal categorical group: a group `G`, coefficients `Z/N`, an action
/// of `G` on `Z/N` by unit multipliers, and a normalized 3-cocycle for that
/// action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletalTwoGroup {
    group: Arc<FiniteGroup>,
    modulus: u32,
    action: Vec<u32>,
    alpha: Cochain,
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

impl SkeletalTwoGroup {
    pub fn new(
        group: Arc<FiniteGroup>,
        modulus: u32,
        action: Vec<u32>,
        alpha: Cochain,
    ) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "action has {} entries for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        for &u in &action {
            if u >= modulus.max(1) || gcd_u64(u as u64, modulus as u64) != 1 {
                // for modulus 1 the only residue 0 is the unit
                if !(modulus == 1 && u == 0) {
                    return Err(Error::Structural(format!(
                        "action value {} is not a unit mod {}",
                        u, modulus
                    )));
                }
            }
        }
        let one = 1 % modulus;
        if action[0] != one {
            return Err(Error::Structural("action must send identity to 1".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let lhs = action[group.mul(a, b)] as u64;
                let rhs = (action[a] as u64 * action[b] as u64) % modulus as u64;
                if lhs != rhs {
                    return Err(Error::Structural(format!(
                        "action is not a homomorphism at ({}, {})",
                        a, b
                    )));
                }
            }
        }
        if alpha.degree() != 3
            || alpha.modulus() != modulus
            || alpha.group().order() != group.order()
        {
            return Err(Error::DimensionMismatch(
                "alpha must be a degree-3 cochain on the group with the stated modulus".into(),
            ));
        }
        if !alpha.is_normalized() {
            return Err(Error::Structural("alpha must be normalized".into()));
        }
        let d = coboundary_with_action(&alpha, Some(&action))?;
        if !d.is_zero() {
            return Err(Error::NotCocycle(vec![]));
        }
        Ok(SkeletalTwoGroup {
            group,
            modulus,
            action,
            alpha,
        })
    }

    /// Group with trivial coefficients `Z/1` (a plain group).
    pub fn plain(group: Arc<FiniteGroup>) -> Self {
        let action = vec![0; group.order()];
        let alpha = Cochain::zero(Arc::clone(&group), 3, 1);
        SkeletalTwoGroup {
            group,
            modulus: 1,
            action,
            alpha,
        }
    }

    /// Trivial action on `Z/N`.
    pub fn with_trivial_action(
        group: Arc<FiniteGroup>,
        modulus: u32,
        alpha: Cochain,
    ) -> Result<Self> {
        let action = vec![1 % modulus; group.order()];
        SkeletalTwoGroup::new(group, modulus, action, alpha)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn action(&self) -> &[u32] {
        &self.action
    }

    pub fn alpha(&self) -> &Cochain {
        &self.alpha
    }

    fn unit(&self, g: usize) -> i64 {
        self.action[g] as i64
    }
}

/// A homomorphism of skeletal categorical groups: a group map `rho`, an
/// equivariant coefficient map `f` (multiplication by a residue), and a
/// 2-cochain `gamma` subject to the hexagon equation.
#[derive(Clone, Debug)]
pub struct TwoGroupHom {
    pub source: SkeletalTwoGroup,
    pub target: SkeletalTwoGroup,
    /// `rho[h]` is the image of `h` in the target group.
    pub rho: Vec<usize>,
    /// The additive map `Z/M -> Z/N`, `e -> f * e`.
    pub f: u32,
    /// Degree-2 cochain on the source group with the target modulus.
    pub gamma: Cochain,
}

impl TwoGroupHom {
    pub fn new(
        source: SkeletalTwoGroup,
        target: SkeletalTwoGroup,
        rho: Vec<usize>,
        f: u32,
        gamma: Cochain,
    ) -> Result<Self> {
        if rho.len() != source.group.order() {
            return Err(Error::DimensionMismatch(
                "rho must assign an image to every source element".into(),
            ));
        }
        for &v in &rho {
            target.group.check_index(v)?;
        }
        if gamma.degree() != 2
            || gamma.modulus() != target.modulus
            || gamma.group().order() != source.group.order()
        {
            return Err(Error::DimensionMismatch(
                "gamma must be a degree-2 cochain on the source with the target modulus".into(),
            ));
        }
        if f >= target.modulus {
            return Err(Error::EntryOutOfRange {
                value: f,
                modulus: target.modulus,
            });
        }
        Ok(TwoGroupHom {
            source,
            target,
            rho,
            f,
            gamma,
        })
    }

    /// Identity homomorphism of a two-group.
    pub fn identity(tg: &SkeletalTwoGroup) -> Self {
        let rho = (0..tg.group.order()).collect();
        let gamma = Cochain::zero(Arc::clone(&tg.group), 2, tg.modulus);
        TwoGroupHom {
            source: tg.clone(),
            target: tg.clone(),
            rho,
            f: 1 % tg.modulus,
            gamma,
        }
    }
}

/// A transformation between homomorphisms: an element `s` of the target
/// group and a 1-cochain `eta` subject to the eight-term equation.
#[derive(Clone, Debug)]
pub struct TwoGroupTransformation {
    pub s: usize,
    /// Degree-1 cochain on the source group with the target modulus.
    pub eta: Cochain,
}

/// A modification between transformations with equal `s`: a 0-cochain.
#[derive(Clone, Debug)]
pub struct TwoGroupModification {
    pub omega: ExponentScalar,
}

/// One failing tuple of a verifier, tagged with the check it broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: String,
    pub tuple: Vec<usize>,
}

/// Decision report: valid iff no tuple fails; witnesses are capped.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub valid: bool,
    pub witnesses: Vec<Witness>,
    pub checked: usize,
}

pub const WITNESS_CAP: usize = 10;

struct WitnessSink {
    witnesses: Vec<Witness>,
}

impl WitnessSink {
    fn new() -> Self {
        WitnessSink {
            witnesses: Vec::new(),
        }
    }

    fn push(&mut self, kind: &str, tuple: Vec<usize>) {
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness {
                kind: kind.to_string(),
                tuple,
            });
        }
    }

    fn any(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Verifies a homomorphism: `rho` a group map, `f` additive and
/// equivariant, and the hexagon equation
/// `gamma(gh,k) + gamma(g,h) - gamma(g,hk) - gamma(h,k)^rho(g)
///  = alpha(rho g, rho h, rho k) - f(beta(g,h,k))`
/// over all source triples.
pub fn verify_hom(hom: &TwoGroupHom) -> Result<VerifyReport> {
    let h_group = &hom.source.group;
    let g_group = &hom.target.group;
    let n = hom.target.modulus as i64;
    let m = hom.source.modulus as i64;
    let mut sink = WitnessSink::new();
    let mut failed_structure = false;

    for a in h_group.elements() {
        for b in h_group.elements() {
            if hom.rho[h_group.mul(a, b)] != g_group.mul(hom.rho[a], hom.rho[b]) {
                sink.push("rho-not-homomorphism", vec![a, b]);
                failed_structure = true;
            }
        }
    }
    // f well-defined on Z/M: f * M = 0 mod N
    if (hom.f as i64 * m).rem_euclid(n) != 0 {
        sink.push("f-not-additive", vec![]);
        failed_structure = true;
    }
    // equivariance through rho: f * u_h = u_(rho h) * f mod N
    for a in h_group.elements() {
        let lhs = (hom.f as i64 * hom.source.unit(a)).rem_euclid(n);
        let rhs = (hom.target.unit(hom.rho[a]) * hom.f as i64).rem_euclid(n);
        if lhs != rhs {
            sink.push("f-not-equivariant", vec![a]);
            failed_structure = true;
        }
    }

    let order = h_group.order();
    let checked = order * order * order;
    let mut hexagon_ok = true;
    for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                let lhs = hom.gamma.eval(&[h_group.mul(a, b), c]) as i64
                    + hom.gamma.eval(&[a, b]) as i64
                    - hom.gamma.eval(&[a, h_group.mul(b, c)]) as i64
                    - hom.target.unit(hom.rho[a]) * hom.gamma.eval(&[b, c]) as i64;
                let rhs = hom.target.alpha.eval(&[hom.rho[a], hom.rho[b], hom.rho[c]]) as i64
                    - hom.f as i64 * hom.source.alpha.eval(&[a, b, c]) as i64;
                if (lhs - rhs).rem_euclid(n) != 0 {
                    sink.push("hexagon", vec![a, b, c]);
                    hexagon_ok = false;
                }
            }
        }
    }

    if hexagon_ok && !failed_structure {
        // the unit constraints follow from the hexagon; a failure here is an
        // implementation bug, not bad input
        let unit_value = hom.gamma.eval(&[0, 0]) as i64;
        for a in h_group.elements() {
            debug_assert_eq!(
                (hom.gamma.eval(&[0, a]) as i64 - unit_value).rem_euclid(n),
                0,
                "derived unit gamma(1,h) = gamma(1,1) must follow from the hexagon"
            );
            debug_assert_eq!(
                (hom.gamma.eval(&[a, 0]) as i64
                    - hom.target.unit(hom.rho[a]) * unit_value)
                    .rem_euclid(n),
                0,
                "derived unit gamma(h,1) = gamma(1,1)^rho(h) must follow from the hexagon"
            );
        }
    }

    Ok(VerifyReport {
        valid: !sink.any(),
        witnesses: sink.witnesses,
        checked,
    })
}

/// Verifies a transformation `(s, eta)` from `from` to `to`: the eight-term
/// equation
/// `eta(h)^sigma(g) + eta(g) - eta(gh)
///  = gamma1(g,h)^s - gamma2(g,h)
///    + alpha(sigma g, sigma h, s) + alpha(s, rho g, rho h)
///    - alpha(sigma g, s, rho h)`
/// over all source pairs, where `rho`, `sigma` underlie `from`, `to`.
pub fn verify_transformation(
    t: &TwoGroupTransformation,
    from: &TwoGroupHom,
    to: &TwoGroupHom,
) -> Result<VerifyReport> {
    if from.source != to.source || from.target != to.target {
        return Err(Error::Structural(
            "transformations need homomorphisms with shared source and target".into(),
        ));
    }
    let h_group = &from.source.group;
    let target = &from.target;
    target.group.check_index(t.s)?;
    if t.eta.degree() != 1
        || t.eta.modulus() != target.modulus
        || t.eta.group().order() != h_group.order()
    {
        return Err(Error::DimensionMismatch(
            "eta must be a degree-1 cochain on the source with the target modulus".into(),
        ));
    }

    let n = target.modulus as i64;
    let alpha = &target.alpha;
    let unit_s = target.unit(t.s);
    let mut sink = WitnessSink::new();
    let order = h_group.order();
    for a in 0..order {
        for b in 0..order {
            let sigma_a = to.rho[a];
            let lhs = target.unit(sigma_a) * t.eta.eval(&[b]) as i64 + t.eta.eval(&[a]) as i64
                - t.eta.eval(&[h_group.mul(a, b)]) as i64;
            let rhs = unit_s * from.gamma.eval(&[a, b]) as i64 - to.gamma.eval(&[a, b]) as i64
                + alpha.eval(&[sigma_a, to.rho[b], t.s]) as i64
                + alpha.eval(&[t.s, from.rho[a], from.rho[b]]) as i64
                - alpha.eval(&[sigma_a, t.s, from.rho[b]]) as i64;
            if (lhs - rhs).rem_euclid(n) != 0 {
                sink.push("eight-term", vec![a, b]);
            }
        }
    }

    if !sink.any() {
        // derived from the eight-term equation at (1,1) for normalized alpha
        debug_assert_eq!(
            (to.gamma.eval(&[0, 0]) as i64
                - (unit_s * from.gamma.eval(&[0, 0]) as i64 - t.eta.eval(&[0]) as i64))
                .rem_euclid(n),
            0,
            "derived unit gamma2(1,1) = gamma1(1,1)^s - eta(1) must follow"
        );
    }

    Ok(VerifyReport {
        valid: !sink.any(),
        witnesses: sink.witnesses,
        checked: order * order,
    })
}

/// Verifies a modification `omega` between `(s, eta)` and `(s, zeta)`:
/// `omega^sigma(g) - omega = zeta(g) - eta(g)` for every source element.
/// Transformations with different `s` cannot be compared.
pub fn verify_modification(
    m: &TwoGroupModification,
    t1: &TwoGroupTransformation,
    t2: &TwoGroupTransformation,
    to: &TwoGroupHom,
) -> Result<VerifyReport> {
    if t1.s != t2.s {
        return Err(Error::Structural(format!(
            "modification requires equal underlying elements, got {} and {}",
            t1.s, t2.s
        )));
    }
    let target = &to.target;
    if m.omega.modulus != target.modulus {
        return Err(Error::DimensionMismatch(
            "omega must live in the target coefficients".into(),
        ));
    }
    let n = target.modulus as i64;
    let h_group = &to.source.group;
    let mut sink = WitnessSink::new();
    for a in h_group.elements() {
        let sigma_a = to.rho[a];
        let lhs = (target.unit(sigma_a) - 1) * m.omega.value as i64;
        let rhs = t2.eta.eval(&[a]) as i64 - t1.eta.eval(&[a]) as i64;
        if (lhs - rhs).rem_euclid(n) != 0 {
            sink.push("conjugation", vec![a]);
        }
    }
    Ok(VerifyReport {
        valid: !sink.any(),
        witnesses: sink.witnesses,
        checked: h_group.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{
        coboundary, is_cocycle, pullback, random_normalized, standard_cyclic_3cocycle,
    };
    use crate::inertia::transgress2;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    fn cyclic_target(n: usize, k: u32) -> SkeletalTwoGroup {
        let alpha = standard_cyclic_3cocycle(n, k);
        SkeletalTwoGroup::with_trivial_action(Arc::clone(alpha.group()), n as u32, alpha).unwrap()
    }

    #[test]
    fn two_group_validation() {
        // nontrivial action: Z/2 acting on Z/4 by negation
        let g = z(2);
        let alpha = Cochain::zero(Arc::clone(&g), 3, 4);
        let tg = SkeletalTwoGroup::new(Arc::clone(&g), 4, vec![1, 3], alpha).unwrap();
        assert_eq!(tg.action(), &[1, 3]);
        // 2 is not a unit mod 4
        let alpha = Cochain::zero(Arc::clone(&g), 3, 4);
        assert!(SkeletalTwoGroup::new(Arc::clone(&g), 4, vec![1, 2], alpha).is_err());
        // action must fix the identity
        let alpha = Cochain::zero(Arc::clone(&g), 3, 4);
        assert!(SkeletalTwoGroup::new(g, 4, vec![3, 1], alpha).is_err());
    }

    #[test]
    fn twisted_cocycle_condition_checked() {
        // the standard Z/4 generator has odd entries, so it is a cocycle for
        // the trivial action but not for negation (the twisted terms differ
        // by 2 * alpha at odd conjugators)
        let alpha = standard_cyclic_3cocycle(4, 1);
        let g = Arc::clone(alpha.group());
        assert!(is_cocycle(&alpha).unwrap().is_cocycle);
        assert!(
            SkeletalTwoGroup::with_trivial_action(Arc::clone(&g), 4, alpha.clone()).is_ok()
        );
        assert!(SkeletalTwoGroup::new(g, 4, vec![1, 3, 1, 3], alpha).is_err());
    }

    #[test]
    fn identity_hom_is_valid() {
        let tg = cyclic_target(4, 1);
        let report = verify_hom(&TwoGroupHom::identity(&tg)).unwrap();
        assert!(report.valid);
        assert_eq!(report.checked, 64);
    }

    #[test]
    fn trivial_rho_with_cocycle_gamma_is_valid() {
        // rho trivial, f = 0, gamma any 2-cocycle on H: both hexagon sides vanish
        let target = cyclic_target(4, 3);
        let h = s3();
        let source = SkeletalTwoGroup::plain(Arc::clone(&h));
        for seed in 0..6u64 {
            let eta = random_normalized(Arc::clone(&h), 1, 4, seed).unwrap();
            let gamma = coboundary(&eta).unwrap();
            let hom = TwoGroupHom::new(
                source.clone(),
                target.clone(),
                vec![0; 6],
                0,
                gamma,
            )
            .unwrap();
            assert!(verify_hom(&hom).unwrap().valid);
        }
    }

    #[test]
    fn perturbed_gamma_fails_with_witness() {
        let tg = cyclic_target(4, 1);
        let mut hom = TwoGroupHom::identity(&tg);
        let mut entries = hom.gamma.entries().to_vec();
        entries[5] = (entries[5] + 1) % 4;
        hom.gamma = Cochain::new(Arc::clone(&tg.group), 2, 4, entries).unwrap();
        let report = verify_hom(&hom).unwrap();
        assert!(!report.valid);
        assert!(report.witnesses.iter().any(|w| w.kind == "hexagon"));
    }

    #[test]
    fn rho_must_be_homomorphism() {
        let tg = cyclic_target(4, 0);
        let mut hom = TwoGroupHom::identity(&tg);
        hom.rho = vec![0, 1, 1, 3];
        let report = verify_hom(&hom).unwrap();
        assert!(!report.valid);
        assert!(report
            .witnesses
            .iter()
            .any(|w| w.kind == "rho-not-homomorphism"));
    }

    #[test]
    fn identity_transformation_is_valid() {
        let tg = cyclic_target(4, 1);
        let hom = TwoGroupHom::identity(&tg);
        let t = TwoGroupTransformation {
            s: 0,
            eta: Cochain::zero(Arc::clone(&tg.group), 1, 4),
        };
        let report = verify_transformation(&t, &hom, &hom).unwrap();
        assert!(report.valid);
        assert_eq!(report.checked, 16);
    }

    #[test]
    fn self_transformations_at_identity_are_one_cocycles() {
        // from = to, s = 1, trivial action: valid eta are exactly 1-cocycles
        let tg = cyclic_target(4, 1);
        let hom = TwoGroupHom::identity(&tg);
        let g = Arc::clone(&tg.group);
        for code in 0..64u32 {
            // eta(0) = 0 forced separately; enumerate all tables
            let entries: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
            let Ok(eta) = Cochain::new(Arc::clone(&g), 1, 4, entries) else {
                continue;
            };
            let t = TwoGroupTransformation { s: 0, eta: eta.clone() };
            let accepted = verify_transformation(&t, &hom, &hom).unwrap().valid;
            let is_cocycle = coboundary(&eta).unwrap().is_zero();
            assert_eq!(accepted, is_cocycle, "eta {:?}", eta.entries());
        }
    }

    #[test]
    fn perturbed_eta_fails_with_witness() {
        let tg = cyclic_target(4, 1);
        let hom = TwoGroupHom::identity(&tg);
        let eta = Cochain::new(Arc::clone(&tg.group), 1, 4, vec![0, 1, 0, 0]).unwrap();
        let t = TwoGroupTransformation { s: 0, eta };
        let report = verify_transformation(&t, &hom, &hom).unwrap();
        assert!(!report.valid);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn inertia_window_transformations_cross_check() {
        // target: (G, d theta); source: a plain cyclic window mapping onto
        // the powers of g. The transgression of theta along the window
        // supplies a valid transformation from the g-window to the
        // (s g s^-1)-window for every conjugator s.
        let g_group = s3();
        for seed in 0..8u64 {
            let theta = random_normalized(Arc::clone(&g_group), 2, 4, seed).unwrap();
            let alpha = coboundary(&theta).unwrap();
            let target =
                SkeletalTwoGroup::with_trivial_action(Arc::clone(&g_group), 4, alpha).unwrap();
            let tau = transgress2(&theta).unwrap();
            for g in g_group.elements() {
                let d = g_group.element_order(g);
                let window = z(d);
                let source = SkeletalTwoGroup::plain(Arc::clone(&window));
                // rho_k = g^k
                let mut rho = vec![0usize; d];
                for k in 1..d {
                    rho[k] = g_group.mul(rho[k - 1], g);
                }
                for s in g_group.elements() {
                    let sg = g_group.conj(s, g);
                    let mut sigma = vec![0usize; d];
                    for k in 1..d {
                        sigma[k] = g_group.mul(sigma[k - 1], sg);
                    }
                    let gamma1 = pullback(&theta, Arc::clone(&window), &rho).unwrap();
                    let gamma2 = pullback(&theta, Arc::clone(&window), &sigma).unwrap();
                    let from = TwoGroupHom::new(
                        source.clone(),
                        target.clone(),
                        rho.clone(),
                        0,
                        gamma1,
                    )
                    .unwrap();
                    let to = TwoGroupHom::new(
                        source.clone(),
                        target.clone(),
                        sigma.clone(),
                        0,
                        gamma2,
                    )
                    .unwrap();
                    // both window homs satisfy the hexagon
                    assert!(verify_hom(&from).unwrap().valid);
                    assert!(verify_hom(&to).unwrap().valid);
                    // eta(k) = tau(theta) at the arrow (g^k, s)
                    let eta_entries: Vec<u32> = (0..d).map(|k| tau.eval(rho[k], s)).collect();
                    let eta = Cochain::new(Arc::clone(&window), 1, 4, eta_entries).unwrap();
                    let t = TwoGroupTransformation { s, eta };
                    let report = verify_transformation(&t, &from, &to).unwrap();
                    assert!(
                        report.valid,
                        "window transformation fails: seed {} g {} s {} witnesses {:?}",
                        seed, g, s, report.witnesses
                    );
                }
            }
        }
    }

    #[test]
    fn modification_trivial_action_cases() {
        let tg = cyclic_target(4, 1);
        let hom = TwoGroupHom::identity(&tg);
        let eta = Cochain::zero(Arc::clone(&tg.group), 1, 4);
        let t1 = TwoGroupTransformation { s: 2, eta: eta.clone() };
        let t2 = TwoGroupTransformation { s: 2, eta: eta.clone() };
        // zeta = eta: omega = 0 works
        let ok = verify_modification(
            &TwoGroupModification {
                omega: ExponentScalar::new(4, 0),
            },
            &t1,
            &t2,
            &hom,
        )
        .unwrap();
        assert!(ok.valid);

        // zeta != eta: no omega can exist under the trivial action
        let zeta = Cochain::new(Arc::clone(&tg.group), 1, 4, vec![0, 1, 2, 3]).unwrap();
        let t3 = TwoGroupTransformation { s: 2, eta: zeta };
        for omega in 0..4 {
            let r = verify_modification(
                &TwoGroupModification {
                    omega: ExponentScalar::new(4, omega),
                },
                &t1,
                &t3,
                &hom,
            )
            .unwrap();
            assert!(!r.valid);
            assert!(!r.witnesses.is_empty());
        }
    }

    #[test]
    fn modification_with_negation_action() {
        // target Z/2 acting on Z/4 by negation; sigma = id so the identity
        // element acts trivially and the generator negates
        let g = z(2);
        let alpha = Cochain::zero(Arc::clone(&g), 3, 4);
        let target = SkeletalTwoGroup::new(Arc::clone(&g), 4, vec![1, 3], alpha).unwrap();
        let source = target.clone();
        let gamma = Cochain::zero(Arc::clone(&g), 2, 4);
        let hom = TwoGroupHom::new(source, target, vec![0, 1], 1, gamma).unwrap();
        assert!(verify_hom(&hom).unwrap().valid);

        // difference zeta - eta = (0, 2): need (u_sigma(g) - 1) omega = 2 at g = 1,
        // i.e. -2 omega = 2 mod 4: omega in {1, 3}; exhaustive scan
        let eta = Cochain::zero(Arc::clone(&g), 1, 4);
        let zeta = Cochain::new(Arc::clone(&g), 1, 4, vec![0, 2]).unwrap();
        let t1 = TwoGroupTransformation { s: 0, eta };
        let t2 = TwoGroupTransformation { s: 0, eta: zeta };
        let mut admissible = Vec::new();
        for omega in 0..4 {
            let r = verify_modification(
                &TwoGroupModification {
                    omega: ExponentScalar::new(4, omega),
                },
                &t1,
                &t2,
                &hom,
            )
            .unwrap();
            if r.valid {
                admissible.push(omega);
            }
        }
        assert_eq!(admissible, vec![1, 3]);
    }

    #[test]
    fn modification_s_mismatch_is_structural() {
        let tg = cyclic_target(4, 0);
        let hom = TwoGroupHom::identity(&tg);
        let eta = Cochain::zero(Arc::clone(&tg.group), 1, 4);
        let t1 = TwoGroupTransformation { s: 0, eta: eta.clone() };
        let t2 = TwoGroupTransformation { s: 1, eta };
        let err = verify_modification(
            &TwoGroupModification {
                omega: ExponentScalar::new(4, 0),
            },
            &t1,
            &t2,
            &hom,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn corrupt_one_entry_mutations_all_detected() {
        // every single-entry mutation of a valid instance must be rejected
        let tg = cyclic_target(4, 1);
        let hom = TwoGroupHom::identity(&tg);

        let mut detected = 0;
        // gamma mutations (hexagon)
        for idx in 0..16 {
            for delta in 1..4 {
                let mut entries = hom.gamma.entries().to_vec();
                entries[idx] = (entries[idx] + delta) % 4;
                let mut bad = hom.clone();
                bad.gamma = Cochain::new(Arc::clone(&tg.group), 2, 4, entries).unwrap();
                if !verify_hom(&bad).unwrap().valid {
                    detected += 1;
                }
            }
        }
        assert_eq!(detected, 48, "all gamma mutations detected");

        // eta mutations (eight-term)
        let eta0 = Cochain::zero(Arc::clone(&tg.group), 1, 4);
        let mut detected = 0;
        for idx in 0..4 {
            for delta in 1..4 {
                let mut entries = eta0.entries().to_vec();
                entries[idx] = (entries[idx] + delta) % 4;
                let t = TwoGroupTransformation {
                    s: 0,
                    eta: Cochain::new(Arc::clone(&tg.group), 1, 4, entries).unwrap(),
                };
                // eta must remain a 1-cocycle for validity; mutations break it
                if !verify_transformation(&t, &hom, &hom).unwrap().valid {
                    detected += 1;
                }
            }
        }
        assert_eq!(detected, 12, "all eta mutations detected");
    }
}
