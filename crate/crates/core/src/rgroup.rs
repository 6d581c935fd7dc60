//! Scenario model: an R-group acting on a_M through exact rational matrices,
//! a central extension of it, fixed-space geometry, regular elements, the
//! Levi-support partition, per-Levi subgroups with inherited extensions, and
//! the sign map.

use crate::chartheory::{CentralExtension, ClassFunction, Subgroup};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result, Violation};
use crate::linalg::{dot, primitive_same_ray, q, vec_is_zero, QMat, QVec, Subspace};
use crate::rootspace::{
    arthur_compatible, levi_from_subset, levi_lattice_within, phi_levi, Levi, RootSystem,
};
use std::collections::BTreeSet;
use std::sync::Arc;

pub const EXPONENT_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyPolicy {
    Arthur,
    All,
    Support,
}

impl FamilyPolicy {
    pub fn parse(s: &str) -> Result<FamilyPolicy> {
        match s {
            "arthur" => Ok(FamilyPolicy::Arthur),
            "all" => Ok(FamilyPolicy::All),
            "support" => Ok(FamilyPolicy::Support),
            other => Err(Error::Document(format!(
                "unknown levi_family policy `{other}` (expected arthur|all|support)"
            ))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyPolicy::Arthur => "arthur",
            FamilyPolicy::All => "all",
            FamilyPolicy::Support => "support",
        }
    }
}

pub struct RegularStratum {
    pub levi: Levi,
    pub elements: Vec<usize>,
}

impl std::fmt::Debug for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Scenario({})", self.id)
    }
}

pub struct Scenario {
    id: String,
    rs: Arc<RootSystem>,
    levi_m: Levi,
    ambient: Levi,
    delta_sigma: Vec<QVec>,
    extension: CentralExtension,
    /// matrix on a_M coordinates, per quotient element
    action: Vec<QMat>,
    policy: FamilyPolicy,
    /// designated isotypic-basis index per Levi, for nontrivial chi
    base_characters: Vec<(Levi, usize)>,
    /// flats of the Levi lattice between M and the ambient Levi
    lattice: Vec<Levi>,
    /// restrictions to a_M of the ambient Levi's roots
    restricted: Vec<QVec>,
}

#[allow(clippy::too_many_arguments)]
impl Scenario {
    pub fn new(
        id: String,
        rs: Arc<RootSystem>,
        levi_m: Levi,
        ambient: Option<Levi>,
        delta_sigma: Vec<QVec>,
        extension: CentralExtension,
        action: Vec<QMat>,
        policy: FamilyPolicy,
        base_characters: Vec<(Levi, usize)>,
    ) -> Result<Scenario> {
        let ambient = match ambient {
            Some(l) => l,
            None => levi_from_subset(&rs, &(0..rs.rank()).collect::<Vec<_>>())?,
        };
        let mut v: Vec<Violation> = Vec::new();

        if !levi_m.is_standard() {
            v.push(viol("levi-not-standard", "base Levi lacks a simple-root subset".into()));
        }
        if !levi_m.split_component().contains_subspace(ambient.split_component()) {
            v.push(viol(
                "ambient-outside-base",
                "ambient split component is not inside a_M".into(),
            ));
        }

        let quotient = extension.quotient().clone();
        let k = levi_m.dim_a();
        if action.len() != quotient.order() {
            v.push(viol(
                "action-count",
                format!("{} matrices for {} elements", action.len(), quotient.order()),
            ));
        }
        for (r, m) in action.iter().enumerate() {
            if m.rows != k || m.cols != k {
                v.push(viol(
                    "action-shape",
                    format!("matrix for {} is not {k}x{k}", quotient.name(r)),
                ));
            }
        }
        if !v.is_empty() {
            return Err(Error::ScenarioInvalid(v));
        }

        if !action[quotient.id()].is_identity() {
            v.push(viol("action-identity", "identity element acts nontrivially".into()));
        }
        for a in 0..quotient.order() {
            for b in 0..quotient.order() {
                let prod = action[a].mul(&action[b]);
                if prod != action[quotient.mul(a, b)] {
                    v.push(viol(
                        "action-not-homomorphism",
                        format!("at ({}, {})", quotient.name(a), quotient.name(b)),
                    ));
                    break;
                }
            }
        }
        for r in 1..quotient.order() {
            if r != quotient.id() && action[r].is_identity() {
                v.push(viol("action-not-faithful", quotient.name(r).to_string()));
            }
        }

        if extension.total().exponent() > EXPONENT_CAP {
            v.push(viol(
                "exponent-cap",
                format!(
                    "exp = {} exceeds {EXPONENT_CAP}",
                    extension.total().exponent()
                ),
            ));
        }
        if extension.chi_conductor() > EXPONENT_CAP {
            v.push(viol(
                "chi-conductor-cap",
                format!("conductor {} exceeds {EXPONENT_CAP}", extension.chi_conductor()),
            ));
        }

        // ambient split component is fixed pointwise by everything
        let amb_coords: Vec<QVec> = ambient
            .split_component()
            .basis()
            .iter()
            .map(|c| levi_m.split_component().coords(c).expect("containment"))
            .collect();
        'amb: for (r, m) in action.iter().enumerate() {
            for x in &amb_coords {
                if &m.mul_vec(x) != x {
                    v.push(viol("moves-ambient-split", quotient.name(r).to_string()));
                    continue 'amb;
                }
            }
        }

        // restriction data relative to the ambient Levi
        let restricted: Vec<QVec> = {
            let cutters = phi_levi(&rs, &ambient);
            let mut set: BTreeSet<QVec> = BTreeSet::new();
            for ri in cutters {
                let vres: QVec = levi_m
                    .split_component()
                    .basis()
                    .iter()
                    .map(|b| dot(rs.root(ri), b))
                    .collect();
                if !vec_is_zero(&vres) {
                    set.insert(primitive_same_ray(&vres));
                }
            }
            set.into_iter().collect()
        };

        // covectors transform through the inverse matrix
        let covector_image = |r: usize, d: &[crate::linalg::Q]| -> QVec {
            let inv = &action[quotient.inv(r)];
            primitive_same_ray(&inv.vec_mul(d))
        };
        'perm: for r in 0..quotient.order() {
            for d in &restricted {
                let img = covector_image(r, d);
                if !restricted.contains(&img) {
                    v.push(viol(
                        "restricted-roots-not-permuted",
                        format!("{} sends {} off the list", quotient.name(r), fmt_vec(d)),
                    ));
                    continue 'perm;
                }
            }
        }

        let mut delta: Vec<QVec> = Vec::new();
        for d in &delta_sigma {
            if d.len() != k || vec_is_zero(d) {
                v.push(viol("delta-sigma-shape", fmt_vec(d)));
                continue;
            }
            let p = primitive_same_ray(d);
            if !restricted.contains(&p) {
                v.push(viol("delta-sigma-not-restricted-root", fmt_vec(d)));
                continue;
            }
            if !delta.contains(&p) {
                delta.push(p);
            }
        }
        delta.sort();
        if v.is_empty() {
            'stable: for r in 0..quotient.order() {
                for d in &delta {
                    let img = covector_image(r, d);
                    if !delta.contains(&img) {
                        v.push(viol(
                            "delta-sigma-not-stable",
                            format!("{} moves {}", quotient.name(r), fmt_vec(d)),
                        ));
                        continue 'stable;
                    }
                }
            }
            // joint strict feasibility on a_M keeps both ends of the lattice
            // arthur-compatible
            if !crate::linalg::feasible_strict(&delta) {
                v.push(viol(
                    "delta-sigma-infeasible",
                    "no X in a_M makes every member strictly positive".into(),
                ));
            }
        }

        // conjugate elements must cut out fixed spaces of equal dimension
        if v.is_empty() {
            let dims: Vec<usize> = (0..quotient.order())
                .map(|r| fixed_space_of(&action[r], &levi_m).dim())
                .collect();
            for c in 0..quotient.num_classes() {
                let members = quotient.class_members(c);
                if members.iter().any(|&m| dims[m] != dims[members[0]]) {
                    v.push(viol(
                        "conjugate-fixed-dims",
                        format!("class of {}", quotient.name(members[0])),
                    ));
                }
            }
        }

        if !v.is_empty() {
            return Err(Error::ScenarioInvalid(v));
        }

        let lattice = levi_lattice_within(&rs, &levi_m, &ambient)?;
        for (l, _) in &base_characters {
            if !lattice.iter().any(|x| x == l) {
                return Err(Error::ScenarioInvalid(vec![Violation {
                    kind: "base-character-levi".into(),
                    witness: "designated Levi is not in the lattice".into(),
                }]));
            }
        }

        Ok(Scenario {
            id,
            rs,
            levi_m,
            ambient,
            delta_sigma: delta,
            extension,
            action,
            policy,
            base_characters,
            lattice,
            restricted,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn levi_m(&self) -> &Levi {
        &self.levi_m
    }

    pub fn ambient(&self) -> &Levi {
        &self.ambient
    }

    pub fn delta_sigma(&self) -> &[QVec] {
        &self.delta_sigma
    }

    pub fn extension(&self) -> &CentralExtension {
        &self.extension
    }

    pub fn action(&self, r: usize) -> &QMat {
        &self.action[r]
    }

    pub fn policy(&self) -> FamilyPolicy {
        self.policy
    }

    pub fn lattice(&self) -> &[Levi] {
        &self.lattice
    }

    pub fn restricted_roots(&self) -> &[QVec] {
        &self.restricted
    }

    pub fn base_character_for(&self, l: &Levi) -> Option<usize> {
        self.base_characters.iter().find(|(k, _)| k == l).map(|(_, i)| *i)
    }

    pub fn base_characters(&self) -> &[(Levi, usize)] {
        &self.base_characters
    }

    pub fn dim_a_m(&self) -> usize {
        self.levi_m.dim_a()
    }

    pub fn dim_a_g(&self) -> usize {
        self.ambient.dim_a()
    }

    /// Stable display name for a lattice member.
    pub fn levi_label(&self, l: &Levi) -> String {
        if l == &self.ambient {
            return "G".into();
        }
        if l == &self.levi_m {
            return "M".into();
        }
        match self.lattice.iter().position(|x| x == l) {
            Some(i) => format!("L{i}"),
            None => "L?".into(),
        }
    }

    pub fn fixed_space(&self, r: usize) -> Subspace {
        fixed_space_of(&self.action[r], &self.levi_m)
    }

    /// The unique lattice Levi whose split component is the fixed space of
    /// r; checks the Arthur compatibility the construction promises.
    pub fn levi_of(&self, r: usize) -> Result<&Levi> {
        let f = self.fixed_space(r);
        let l = self
            .lattice
            .iter()
            .find(|l| *l.split_component() == f)
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "fixed space of {} is not a lattice flat",
                    self.extension.quotient().name(r)
                ))
            })?;
        if !arthur_compatible(&self.rs, &self.levi_m, &self.delta_sigma, l)? {
            return Err(Error::Inconsistent(format!(
                "fixed-space Levi of {} fails Arthur compatibility",
                self.extension.quotient().name(r)
            )));
        }
        Ok(l)
    }

    /// Quotient elements whose fixed space is exactly the ambient split
    /// component, and whether any exist.
    pub fn regular_set(&self) -> (Vec<usize>, bool) {
        let target = self.ambient.split_component();
        let set: Vec<usize> = (0..self.extension.quotient().order())
            .filter(|&r| self.fixed_space(r) == *target)
            .collect();
        let elliptic = !set.is_empty();
        (set, elliptic)
    }

    /// Group the R-group elements by their fixed-space Levi, in lattice
    /// order; the strata partition the group.
    pub fn levi_support_partition(&self) -> Result<Vec<RegularStratum>> {
        let n = self.extension.quotient().order();
        let mut of: Vec<usize> = Vec::with_capacity(n);
        for r in 0..n {
            let l = self.levi_of(r)?;
            of.push(self.lattice.iter().position(|x| x == l).unwrap());
        }
        let mut strata = Vec::new();
        for (i, l) in self.lattice.iter().enumerate() {
            let elements: Vec<usize> = (0..n).filter(|&r| of[r] == i).collect();
            if !elements.is_empty() {
                strata.push(RegularStratum { levi: l.clone(), elements });
            }
        }
        let total: usize = strata.iter().map(|s| s.elements.len()).sum();
        assert_eq!(total, n, "support strata must partition the group");
        Ok(strata)
    }

    /// Flats of the lattice to sum over, per the configured policy.
    pub fn active_levi_family(&self) -> Result<Vec<Levi>> {
        match self.policy {
            FamilyPolicy::All => Ok(self.lattice.clone()),
            FamilyPolicy::Arthur => {
                let mut out = Vec::new();
                for l in &self.lattice {
                    if arthur_compatible(&self.rs, &self.levi_m, &self.delta_sigma, l)? {
                        out.push(l.clone());
                    }
                }
                Ok(out)
            }
            FamilyPolicy::Support => {
                let strata = self.levi_support_partition()?;
                Ok(strata.into_iter().map(|s| s.levi).collect())
            }
        }
    }

    /// Pointwise stabilizer R^L of a_L, with its preimage extension.
    pub fn subgroup_for_levi(&self, l: &Levi) -> Result<(Subgroup, CentralExtension)> {
        let family = self.active_levi_family()?;
        if !family.iter().any(|x| x == l) {
            return Err(Error::NotInFamily(self.levi_label(l)));
        }
        let coords: Vec<QVec> = l
            .split_component()
            .basis()
            .iter()
            .map(|c| self.levi_m.split_component().coords(c).expect("lattice flat"))
            .collect();
        let elems: Vec<usize> = (0..self.extension.quotient().order())
            .filter(|&r| coords.iter().all(|x| &self.action[r].mul_vec(x) == x))
            .collect();
        self.extension.restrict_to_preimage(&elems)
    }

    /// xi(r~) = (-1)^{dim a_{L_r}} as a class function on the total group.
    pub fn sign_map(&self) -> Result<ClassFunction> {
        let total = self.extension.total().clone();
        let mut values = Vec::with_capacity(total.num_classes());
        for c in 0..total.num_classes() {
            let mut val: Option<i64> = None;
            for &g in total.class_members(c) {
                let l = self.levi_of(self.extension.proj(g))?;
                let s = if l.dim_a() % 2 == 0 { 1 } else { -1 };
                match val {
                    None => val = Some(s),
                    // conjugate elements were validated to agree
                    Some(prev) => assert_eq!(prev, s, "sign map must be a class function"),
                }
            }
            values.push(Cyclotomic::from_int(val.unwrap()));
        }
        Ok(ClassFunction::new(total, values))
    }

    /// Scenario for the pair (M, sigma) inside the Levi L: same base Levi,
    /// ambient shrunk to L, delta_sigma cut down to the members vanishing on
    /// a_L, the extension replaced by the preimage of R^L.
    pub fn sub_scenario(&self, l: &Levi) -> Result<Scenario> {
        let (pre, sub_ext) = self.subgroup_for_levi(l)?;
        let sub_quotient = sub_ext.quotient().clone();
        let mut action = Vec::with_capacity(sub_quotient.order());
        for r in 0..sub_quotient.order() {
            let total_idx = pre.element(sub_ext.section(r));
            let parent_r = self.extension.proj(total_idx);
            action.push(self.action[parent_r].clone());
        }
        let delta: Vec<QVec> = self
            .delta_sigma
            .iter()
            .filter(|d| {
                l.split_component().basis().iter().all(|c| {
                    let x = self.levi_m.split_component().coords(c).unwrap();
                    dot(d, &x) == q(0)
                })
            })
            .cloned()
            .collect();
        Scenario::new(
            format!("{}/{}", self.id, self.levi_label(l)),
            self.rs.clone(),
            self.levi_m.clone(),
            Some(l.clone()),
            delta,
            sub_ext,
            action,
            self.policy,
            self.base_characters.clone(),
        )
    }

    /// Quotient elements that are neither the identity nor a reflection of
    /// a_M (order 2 with a codimension-1 fixed space); reports flag these
    /// because the pointwise-stabilizer reading of R^L is only textbook-
    /// justified inside reflection groups.
    pub fn non_reflection_elements(&self) -> Vec<usize> {
        let quotient = self.extension.quotient();
        (0..quotient.order())
            .filter(|&r| {
                r != quotient.id()
                    && !(quotient.order_of(r) == 2
                        && self.fixed_space(r).dim() + 1 == self.dim_a_m())
            })
            .collect()
    }
}

fn fixed_space_of(m: &QMat, levi_m: &Levi) -> Subspace {
    let k = levi_m.dim_a();
    let mut diff = m.clone();
    for i in 0..k {
        let d = diff[(i, i)].clone() - q(1);
        diff[(i, i)] = d;
    }
    let coords_basis = diff.kernel();
    let rows: Vec<QVec> =
        coords_basis.iter().map(|x| levi_m.split_component().from_coords(x)).collect();
    Subspace::from_rows(levi_m.split_component().ambient_dim(), rows)
}

fn viol(kind: &str, witness: String) -> Violation {
    Violation { kind: kind.into(), witness }
}

fn fmt_vec(v: &[crate::linalg::Q]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}
