//! Central extensions 1 -> Z -> G~ -> G -> 1 with a character chi of Z:
//! the quotient is derived from the center's cosets, and the chi-isotypic
//! irreducible family drives the triplet Fourier transform.

use super::group::{FiniteGroupTable, Subgroup};
use super::table::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg::qr;
use std::sync::Arc;

#[derive(Clone)]
pub struct CentralExtension {
    total: Arc<FiniteGroupTable>,
    center: Subgroup,
    quotient: Arc<FiniteGroupTable>,
    /// total element -> quotient element
    proj: Vec<usize>,
    /// quotient element -> smallest coset representative in total
    section: Vec<usize>,
    /// chi value per center element, aligned with center.elements()
    chi: Vec<Cyclotomic>,
}

impl CentralExtension {
    /// Trivial center: the quotient is the total group itself.
    pub fn split(group: Arc<FiniteGroupTable>) -> Self {
        let center = Subgroup::trivial(group.clone());
        let n = group.order();
        CentralExtension {
            total: group.clone(),
            center,
            quotient: group,
            proj: (0..n).collect(),
            section: (0..n).collect(),
            chi: vec![Cyclotomic::one()],
        }
    }

    pub fn new(
        total: Arc<FiniteGroupTable>,
        center_elements: Vec<usize>,
        chi: Vec<Cyclotomic>,
    ) -> Result<Self> {
        let center = Subgroup::from_elements(total.clone(), center_elements)
            .map_err(|e| Error::InvalidExtension(format!("center: {e}")))?;
        for &z in center.elements() {
            for g in 0..total.order() {
                if total.mul(z, g) != total.mul(g, z) {
                    return Err(Error::InvalidExtension(format!(
                        "center element {} does not commute with {}",
                        total.name(z),
                        total.name(g)
                    )));
                }
            }
        }
        if chi.len() != center.order() {
            return Err(Error::InvalidExtension(format!(
                "chi has {} values for a center of order {}",
                chi.len(),
                center.order()
            )));
        }
        let zg = center.group();
        if chi[zg.id()] != Cyclotomic::one() {
            return Err(Error::InvalidExtension(
                "chi at the identity is not 1".into(),
            ));
        }
        for a in 0..zg.order() {
            for b in 0..zg.order() {
                if chi[a].mul(&chi[b]) != chi[zg.mul(a, b)] {
                    return Err(Error::InvalidExtension(
                        "chi is not a homomorphism".into(),
                    ));
                }
            }
        }
        // hom into roots of unity is automatic once chi(z)^{ord z} = 1 holds
        for a in 0..zg.order() {
            let mut p = Cyclotomic::one();
            for _ in 0..zg.order_of(a) {
                p = p.mul(&chi[a]);
            }
            if p != Cyclotomic::one() {
                return Err(Error::InvalidExtension(
                    "chi value is not a root of unity".into(),
                ));
            }
        }

        // quotient by Z-cosets; reps picked in ascending scan order, so each
        // rep is the smallest member of its coset
        let n = total.order();
        let mut proj = vec![usize::MAX; n];
        let mut section = Vec::new();
        for g in 0..n {
            if proj[g] != usize::MAX {
                continue;
            }
            let q = section.len();
            section.push(g);
            for &z in center.elements() {
                proj[total.mul(g, z)] = q;
            }
        }
        let m = section.len();
        let mut qmult = vec![vec![0usize; m]; m];
        for a in 0..m {
            for b in 0..m {
                qmult[a][b] = proj[total.mul(section[a], section[b])];
            }
        }
        let qnames = section
            .iter()
            .map(|&g| format!("[{}]", total.name(g)))
            .collect::<Vec<_>>();
        let quotient = FiniteGroupTable::from_mult_table_internal(qmult, Some(qnames));
        Ok(CentralExtension { total, center, quotient, proj, section, chi })
    }

    pub fn total(&self) -> &Arc<FiniteGroupTable> {
        &self.total
    }

    pub fn quotient(&self) -> &Arc<FiniteGroupTable> {
        &self.quotient
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    pub fn proj(&self, g: usize) -> usize {
        self.proj[g]
    }

    pub fn section(&self, q: usize) -> usize {
        self.section[q]
    }

    pub fn chi_at(&self, center_index: usize) -> &Cyclotomic {
        &self.chi[center_index]
    }

    pub fn chi_values(&self) -> &[Cyclotomic] {
        &self.chi
    }

    pub fn is_split(&self) -> bool {
        self.center.order() == 1
    }

    pub fn chi_is_trivial(&self) -> bool {
        self.chi.iter().all(|v| *v == Cyclotomic::one())
    }

    pub fn chi_is_real(&self) -> bool {
        self.chi.iter().all(|v| *v == v.conjugate())
    }

    pub fn chi_conductor(&self) -> usize {
        self.chi.iter().map(|v| v.conductor()).max().unwrap_or(1)
    }

    /// Indices (into `table`) of the irreducibles whose central character on
    /// Z is chi: theta(z g) = chi(z) theta(g), equivalently theta(z) =
    /// chi(z) theta(1).
    pub fn chi_isotypic(&self, table: &CharacterTable) -> Vec<usize> {
        assert_eq!(table.group.order(), self.total.order());
        let mut out = Vec::new();
        for i in 0..table.num_chars() {
            let deg = Cyclotomic::from_int(table.degrees[i] as i64);
            let ok = (0..self.center.order()).all(|j| {
                let z = self.center.element(j);
                table.values[i][self.total.class_of(z)] == self.chi[j].mul(&deg)
            });
            if ok {
                out.push(i);
            }
        }
        out
    }

    /// Coefficient vector of the triplet character attached to r~ in the
    /// chi-isotypic basis: entry for rho is theta_{rho-dual}(r~).
    pub fn triplet_expand(
        &self,
        table: &CharacterTable,
        iso: &[usize],
        rt: usize,
    ) -> Vec<Cyclotomic> {
        let c = self.total.class_of(rt);
        iso.iter().map(|&i| table.values[i][c].conjugate()).collect()
    }

    /// Coefficient vector over total elements expressing the rho-th isotypic
    /// irreducible in the triplet basis: |G~|^{-1} theta_rho(r~).
    pub fn triplet_invert(
        &self,
        table: &CharacterTable,
        iso: &[usize],
        rho_pos: usize,
    ) -> Vec<Cyclotomic> {
        let i = iso[rho_pos];
        let n = self.total.order() as i64;
        (0..self.total.order())
            .map(|g| table.values[i][self.total.class_of(g)].scale(&qr(1, n)))
            .collect()
    }

    /// chi is trivial on the Z-stabilizer of the conjugacy class of r~.
    pub fn is_essential(&self, rt: usize) -> bool {
        let c = self.total.class_of(rt);
        (0..self.center.order()).all(|j| {
            let z = self.center.element(j);
            self.total.class_of(self.total.mul(z, rt)) != c
                || self.chi[j] == Cyclotomic::one()
        })
    }

    pub fn essential_classes(&self) -> Vec<usize> {
        (0..self.total.num_classes())
            .filter(|&c| self.is_essential(self.total.class_rep(c)))
            .collect()
    }

    /// Orbits of Z-translation acting on the essential classes.
    pub fn essential_orbit_count(&self) -> usize {
        let ess = self.essential_classes();
        let mut seen = vec![false; self.total.num_classes()];
        let mut orbits = 0;
        for &c in &ess {
            if seen[c] {
                continue;
            }
            orbits += 1;
            let rep = self.total.class_rep(c);
            for &z in self.center.elements() {
                let c2 = self.total.class_of(self.total.mul(z, rep));
                // translation by Z preserves essentiality
                assert!(self.is_essential(self.total.class_rep(c2)));
                seen[c2] = true;
            }
        }
        orbits
    }

    /// Given a subgroup S of the quotient (as quotient element indices),
    /// return its full preimage in the total group together with the induced
    /// extension of S by the same center and chi.
    pub fn restrict_to_preimage(
        &self,
        quotient_elements: &[usize],
    ) -> Result<(Subgroup, CentralExtension)> {
        let keep: std::collections::BTreeSet<usize> =
            quotient_elements.iter().copied().collect();
        let elems: Vec<usize> =
            (0..self.total.order()).filter(|&g| keep.contains(&self.proj[g])).collect();
        let pre = Subgroup::from_elements(self.total.clone(), elems)?;
        // center.elements() is ascending and index_of is monotone, so the
        // mapped center stays aligned with the chi values
        let mapped: Vec<usize> = self
            .center
            .elements()
            .iter()
            .map(|&z| pre.index_of(z).expect("center lies in every preimage"))
            .collect();
        let sub = CentralExtension::new(pre.group().clone(), mapped, self.chi.clone())?;
        Ok((pre, sub))
    }
}
