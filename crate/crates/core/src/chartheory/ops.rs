//! Class functions with exact cyclotomic values: inner products,
//! restriction, induction, contragredient.

use super::group::{FiniteGroupTable, Subgroup};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg::Q;
use std::sync::Arc;

fn same_group(a: &Arc<FiniteGroupTable>, b: &Arc<FiniteGroupTable>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.order() == b.order()
            && (0..a.order()).all(|x| (0..a.order()).all(|y| a.mul(x, y) == b.mul(x, y))))
}

#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroupTable>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

impl std::fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ClassFunction{:?}", self.values)
    }
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroupTable>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.num_classes());
        ClassFunction { group, values }
    }

    pub fn trivial(group: Arc<FiniteGroupTable>) -> Self {
        let n = group.num_classes();
        ClassFunction { group, values: vec![Cyclotomic::one(); n] }
    }

    pub fn zero(group: Arc<FiniteGroupTable>) -> Self {
        let n = group.num_classes();
        ClassFunction { group, values: vec![Cyclotomic::zero(); n] }
    }

    pub fn group(&self) -> &Arc<FiniteGroupTable> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn at_class(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    pub fn at_element(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert!(same_group(&self.group, &other.group));
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        assert!(same_group(&self.group, &other.group));
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn neg(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.neg()).collect(),
        }
    }

    pub fn scale(&self, r: &Q) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn scale_cyc(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.mul(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// |G|^{-1} sum_g theta(g) conj(psi(g)), exact.
    pub fn inner(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let g = &self.group;
        let mut s = Cyclotomic::zero();
        for c in 0..g.num_classes() {
            let term = self.values[c].mul(&other.values[c].conjugate());
            s = s.add(&term.scale(&crate::linalg::q(g.class_size(c) as i64)));
        }
        Ok(s.scale(&Q::new(1.into(), (g.order() as i64).into())))
    }

    /// Complex conjugation of values (the character of the contragredient).
    pub fn contragredient(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.conjugate()).collect(),
        }
    }

    /// Restriction along a subgroup of this function's group.
    pub fn restrict(&self, sub: &Subgroup) -> Result<ClassFunction> {
        if !same_group(&self.group, sub.parent()) {
            return Err(Error::GroupMismatch);
        }
        let h = sub.group();
        let values = (0..h.num_classes())
            .map(|c| self.at_element(sub.element(h.class_rep(c))).clone())
            .collect();
        Ok(ClassFunction { group: h.clone(), values })
    }

    /// Induction: this function lives on `sub.group()`; the result lives on
    /// `sub.parent()`, by the classical formula
    /// Ind f(g) = |H|^{-1} sum_{x in G, x^{-1} g x in H} f(x^{-1} g x).
    pub fn induce(&self, sub: &Subgroup) -> Result<ClassFunction> {
        if !same_group(&self.group, sub.group()) {
            return Err(Error::GroupMismatch);
        }
        let g = sub.parent();
        let mut values = Vec::with_capacity(g.num_classes());
        for c in 0..g.num_classes() {
            let rep = g.class_rep(c);
            let mut s = Cyclotomic::zero();
            for x in 0..g.order() {
                let t = g.mul(g.mul(g.inv(x), rep), x);
                if let Some(ti) = sub.index_of(t) {
                    s = s.add(&self.values[self.group.class_of(ti)]);
                }
            }
            values.push(s.scale(&Q::new(1.into(), (sub.order() as i64).into())));
        }
        Ok(ClassFunction { group: g.clone(), values })
    }
}
