//! Finite groups given by multiplication tables: conjugacy classes,
//! element orders, and subgroups with their own tables.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone)]
pub struct FiniteGroupTable {
    order: usize,
    mult: Vec<u16>,
    identity: usize,
    inverse: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    names: Vec<String>,
}

impl std::fmt::Debug for FiniteGroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroupTable(order {}, {} classes)", self.order, self.classes.len())
    }
}

pub const GROUP_ORDER_CAP: usize = 512;

impl FiniteGroupTable {
    /// Full checked loader for untrusted tables: identity, inverses,
    /// associativity, all verified.
    pub fn from_mult_table(mult: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Arc<Self>> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::GroupLaw("empty multiplication table".into()));
        }
        if n > GROUP_ORDER_CAP {
            return Err(Error::ResourceCap(format!(
                "group order {} exceeds cap {}",
                n, GROUP_ORDER_CAP
            )));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupLaw(format!("row {} has length {}, expected {}", i, row.len(), n)));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::GroupLaw(format!("entry ({},{}) = {} out of range", i, j, v)));
                }
            }
        }
        let flat: Vec<u16> = mult.iter().flatten().map(|&v| v as u16).collect();
        let mul = |a: usize, b: usize| flat[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| Error::GroupLaw("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| mul(g, h) == identity && mul(h, g) == identity) {
                Some(h) => inverse[g] = h,
                None => return Err(Error::GroupLaw(format!("element {} has no inverse", g))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::GroupLaw(format!(
                            "associativity fails at ({},{},{})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(Self::finish(n, flat, identity, inverse, names)))
    }

    /// Loader for internally generated tables (closures of verified
    /// generators): checks the latin-square property but not associativity.
    pub fn from_mult_table_internal(mult: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Arc<Self> {
        let n = mult.len();
        let flat: Vec<u16> = mult.iter().flatten().map(|&v| v as u16).collect();
        assert_eq!(flat.len(), n * n);
        let mul = |a: usize, b: usize| flat[a * n + b] as usize;
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                seen_row[mul(a, b)] = true;
                seen_col[mul(b, a)] = true;
            }
            assert!(seen_row.iter().all(|&x| x) && seen_col.iter().all(|&x| x), "not a latin square");
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .expect("internal table lacks identity");
        let inverse: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| mul(g, h) == identity).unwrap())
            .collect();
        Arc::new(Self::finish(n, flat, identity, inverse, names))
    }

    fn finish(
        n: usize,
        mult: Vec<u16>,
        identity: usize,
        inverse: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Self {
        let mul = |a: usize, b: usize| mult[a * n + b] as usize;
        // Conjugacy classes, discovered in order of their smallest member.
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = Vec::new();
            for x in 0..n {
                let y = mul(mul(x, g), inverse[x]);
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let names = names.unwrap_or_else(|| (0..n).map(|g| format!("g{}", g)).collect());
        assert_eq!(names.len(), n);
        FiniteGroupTable { order: n, mult, identity, inverse, class_of, classes, names }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn id(&self) -> usize {
        self.identity
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn power(&self, g: usize, k: i64) -> usize {
        let mut base = if k < 0 { self.inv(g) } else { g };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn order_of(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| num::integer::lcm(acc, self.order_of(g)))
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// For each class index, the class of the elementwise inverses.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inverse[self.classes[c][0]]]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }
}

#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroupTable>,
    elements: Vec<usize>,
    group: Arc<FiniteGroupTable>,
    to_sub: HashMap<usize, usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.elements.len(), self.parent.order())
    }
}

impl Subgroup {
    pub fn from_elements(parent: Arc<FiniteGroupTable>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !elements.contains(&parent.id()) {
            return Err(Error::NotSubgroup("subset does not contain the identity".into()));
        }
        let inside: std::collections::HashSet<usize> = elements.iter().copied().collect();
        for &a in &elements {
            if !inside.contains(&parent.inv(a)) {
                return Err(Error::NotSubgroup(format!(
                    "subset not closed under inverse at {}",
                    parent.name(a)
                )));
            }
            for &b in &elements {
                if !inside.contains(&parent.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "subset not closed under product at {}*{}",
                        parent.name(a),
                        parent.name(b)
                    )));
                }
            }
        }
        Ok(Self::build(parent, elements))
    }

    pub fn generated(parent: Arc<FiniteGroupTable>, gens: &[usize]) -> Self {
        let mut elements = vec![parent.id()];
        let mut frontier = vec![parent.id()];
        let mut seen = vec![false; parent.order()];
        seen[parent.id()] = true;
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = parent.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        elements.sort_unstable();
        Self::build(parent, elements)
    }

    pub fn trivial(parent: Arc<FiniteGroupTable>) -> Self {
        let id = parent.id();
        Self::build(parent, vec![id])
    }

    pub fn full(parent: Arc<FiniteGroupTable>) -> Self {
        let elements: Vec<usize> = (0..parent.order()).collect();
        let to_sub = elements.iter().map(|&g| (g, g)).collect();
        Subgroup { parent: parent.clone(), elements, group: parent, to_sub }
    }

    fn build(parent: Arc<FiniteGroupTable>, elements: Vec<usize>) -> Self {
        if elements.len() == parent.order() {
            return Self::full(parent);
        }
        let to_sub: HashMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let n = elements.len();
        let mut mult = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j] = to_sub[&parent.mul(elements[i], elements[j])];
            }
        }
        let names = elements.iter().map(|&g| parent.name(g).to_string()).collect();
        let group = FiniteGroupTable::from_mult_table_internal(mult, Some(names));
        Subgroup { parent, elements, group, to_sub }
    }

    pub fn parent(&self) -> &Arc<FiniteGroupTable> {
        &self.parent
    }

    pub fn group(&self) -> &Arc<FiniteGroupTable> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.to_sub.contains_key(&g)
    }

    /// Sub-table index of a parent element, if it lies in the subgroup.
    pub fn index_of(&self, g: usize) -> Option<usize> {
        self.to_sub.get(&g).copied()
    }

    /// Parent element of a sub-table index.
    pub fn element(&self, i: usize) -> usize {
        self.elements[i]
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    /// Is every element of the subgroup central in the parent?
    pub fn is_central(&self) -> bool {
        self.elements
            .iter()
            .all(|&z| (0..self.parent.order()).all(|g| self.parent.mul(z, g) == self.parent.mul(g, z)))
    }
}

/// Convenience constructor: the cyclic group Z/n with elements 0..n.
pub fn cyclic_group(n: usize) -> Arc<FiniteGroupTable> {
    let mult = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let names = (0..n).map(|k| if k == 0 { "1".into() } else { format!("t^{}", k) }).collect();
    FiniteGroupTable::from_mult_table_internal(mult, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn s3() -> Arc<FiniteGroupTable> {
        // Permutations of {0,1,2} in lex order: e, (12), (01), (012), (021), (02)
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let mult = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx(&[a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroupTable::from_mult_table(mult, None).unwrap()
    }

    pub fn q8() -> Arc<FiniteGroupTable> {
        // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        let base = |g: usize| g / 2; // 0:1 1:i 2:j 3:k
        let sign = |g: usize| g % 2;
        let mult_base = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let mult = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (c, s) = mult_base[base(a)][base(b)];
                         2 * c + (sign(a) + sign(b) + s) % 2
                    })
                    .collect()
            })
            .collect();
        FiniteGroupTable::from_mult_table(mult, Some(names.iter().map(|s| s.to_string()).collect()))
            .unwrap()
    }

    #[test]
    fn cyclic_four_classes() {
        let g = cyclic_group(4);
        assert_eq!(g.num_classes(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.order_of(1), 4);
        assert_eq!(g.order_of(2), 2);
        assert_eq!(g.power(1, -1), 3);
    }

    #[test]
    fn s3_classes_sizes_1_3_2() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        let mut sizes: Vec<usize> = (0..3).map(|c| g.class_size(c)).collect();
        assert_eq!(sizes[0], 1); // identity class first (element 0 is e)
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn q8_classes_sizes_1_1_2_2_2() {
        let g = q8();
        assert_eq!(g.num_classes(), 5);
        let sizes: Vec<usize> = (0..5).map(|c| g.class_size(c)).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        // class of i contains -i
        assert_eq!(g.class_of(2), g.class_of(3));
        assert_eq!(g.exponent(), 4);
        // i * j = k
        assert_eq!(g.mul(2, 4), 6);
        // j * i = -k
        assert_eq!(g.mul(4, 2), 7);
    }

    #[test]
    fn bad_tables_rejected() {
        // Not associative: xor-like fiddle.
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroupTable::from_mult_table(bad, None).is_err());
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(FiniteGroupTable::from_mult_table(ragged, None).is_err());
    }

    #[test]
    fn subgroups_of_s3() {
        let g = s3();
        let h = Subgroup::generated(g.clone(), &[1]); // (12)
        assert_eq!(h.order(), 2);
        assert!(Subgroup::from_elements(g.clone(), vec![0, 1]).is_ok());
        assert!(Subgroup::from_elements(g.clone(), vec![0, 1, 2]).is_err());
        let rot = Subgroup::generated(g.clone(), &[3]);
        assert_eq!(rot.order(), 3);
        let full = Subgroup::full(g.clone());
        assert_eq!(full.order(), 6);
        assert!(!h.is_central());
        assert!(Subgroup::trivial(g).is_central());
    }

    #[test]
    fn q8_center() {
        let g = q8();
        let z = Subgroup::from_elements(g.clone(), vec![0, 1]).unwrap();
        assert!(z.is_central());
        let i_sub = Subgroup::generated(g, &[2]);
        assert_eq!(i_sub.order(), 4);
        assert!(!i_sub.is_central());
    }
}
