//! Root systems in their standard rational realizations, Levi split
//! components as kernel-intersection subspaces, restricted roots, the Levi
//! lattice, Weyl groups with root permutations, and exact Arthur-type
//! feasibility on flats.

use crate::chartheory::group::FiniteGroupTable;
use crate::error::{Error, Result};
use crate::linalg::{dot, feasible_strict, primitive_same_ray, q, vec_is_zero, QMat, QVec, Subspace, Q};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

pub const RANK_CAP: usize = 5;
pub const WEYL_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::UnsupportedFamily(format!("family `{other}`"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        write!(f, "{c}")
    }
}

pub struct RootSystem {
    ambient: usize,
    roots: Vec<QVec>,
    simple: Vec<QVec>,
    /// indices into `roots` of the simple roots
    simple_indices: Vec<usize>,
    positive: Vec<bool>,
    index: BTreeMap<QVec, usize>,
    label: String,
}

fn unit(ambient: usize, i: usize) -> QVec {
    let mut v = vec![q(0); ambient];
    v[i] = q(1);
    v
}

fn scaled_add(a: &[Q], ca: i64, b: &[Q], cb: i64) -> QVec {
    a.iter().zip(b).map(|(x, y)| x * q(ca) + y * q(cb)).collect()
}

impl RootSystem {
    pub fn classical(family: Family, rank: usize) -> Result<Arc<RootSystem>> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        };
        if rank < min || rank > RANK_CAP {
            return Err(Error::UnsupportedFamily(format!(
                "{family}_{rank} (supported: A_1.., B_2.., C_2.., D_3.., rank <= {RANK_CAP})"
            )));
        }
        let mut roots: Vec<QVec> = Vec::new();
        let mut simple: Vec<QVec> = Vec::new();
        match family {
            Family::A => {
                let n = rank + 1;
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            roots.push(scaled_add(&unit(n, i), 1, &unit(n, j), -1));
                        }
                    }
                }
                for i in 0..rank {
                    simple.push(scaled_add(&unit(n, i), 1, &unit(n, i + 1), -1));
                }
            }
            Family::B | Family::C => {
                let n = rank;
                let short = if family == Family::B { 1 } else { 2 };
                for i in 0..n {
                    roots.push(scaled_add(&unit(n, i), short, &unit(n, i), 0));
                    roots.push(scaled_add(&unit(n, i), -short, &unit(n, i), 0));
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        for (ci, cj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(scaled_add(&unit(n, i), ci, &unit(n, j), cj));
                        }
                    }
                }
                for i in 0..rank - 1 {
                    simple.push(scaled_add(&unit(n, i), 1, &unit(n, i + 1), -1));
                }
                simple.push(scaled_add(&unit(n, rank - 1), short, &unit(n, 0), 0));
            }
            Family::D => {
                let n = rank;
                for i in 0..n {
                    for j in (i + 1)..n {
                        for (ci, cj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(scaled_add(&unit(n, i), ci, &unit(n, j), cj));
                        }
                    }
                }
                for i in 0..rank - 1 {
                    simple.push(scaled_add(&unit(n, i), 1, &unit(n, i + 1), -1));
                }
                simple.push(scaled_add(&unit(n, rank - 2), 1, &unit(n, rank - 1), 1));
            }
        }
        RootSystem::build(roots[0].len(), roots, simple, format!("{family}{rank}"))
    }

    pub fn explicit(
        ambient: usize,
        roots: Vec<QVec>,
        simple: Vec<QVec>,
        label: String,
    ) -> Result<Arc<RootSystem>> {
        RootSystem::build(ambient, roots, simple, label)
    }

    fn build(
        ambient: usize,
        roots: Vec<QVec>,
        simple: Vec<QVec>,
        label: String,
    ) -> Result<Arc<RootSystem>> {
        let bad = |msg: String| Err(Error::InvalidRootSystem(msg));
        if ambient == 0 && !roots.is_empty() {
            return bad("roots in a 0-dimensional ambient space".into());
        }
        if roots.is_empty() {
            return bad("empty root list".into());
        }
        for r in &roots {
            if r.len() != ambient {
                return bad(format!("root {:?} has wrong length", fmt_vec(r)));
            }
            if vec_is_zero(r) {
                return bad("zero vector listed as a root".into());
            }
        }
        let mut index: BTreeMap<QVec, usize> = BTreeMap::new();
        for (i, r) in roots.iter().enumerate() {
            if index.insert(r.clone(), i).is_some() {
                return bad(format!("duplicate root {}", fmt_vec(r)));
            }
        }
        // reduced + closed under negation: every line through the origin
        // meets the root list in exactly {alpha, -alpha}
        let mut lines: BTreeMap<QVec, Vec<usize>> = BTreeMap::new();
        for (i, r) in roots.iter().enumerate() {
            lines.entry(crate::linalg::line_key(r)).or_default().push(i);
        }
        for (_, members) in lines {
            if members.len() != 2 {
                return bad(format!(
                    "root line through {} does not consist of exactly one +/- pair",
                    fmt_vec(&roots[members[0]])
                ));
            }
            let (a, b) = (members[0], members[1]);
            let neg: QVec = roots[a].iter().map(|x| -x.clone()).collect();
            if roots[b] != neg {
                return bad(format!(
                    "roots {} and {} on one line are not negatives (non-reduced system)",
                    fmt_vec(&roots[a]),
                    fmt_vec(&roots[b])
                ));
            }
        }
        // simple roots: must be roots, linearly independent
        let mut simple_indices = Vec::new();
        for s in &simple {
            match index.get(s) {
                Some(&i) => simple_indices.push(i),
                None => return bad(format!("simple vector {} is not a root", fmt_vec(s))),
            }
        }
        let simple_span = Subspace::from_rows(ambient, simple.clone());
        if simple_span.dim() != simple.len() {
            return bad("simple roots are linearly dependent".into());
        }
        // every root = integer combination of simple roots, uniform sign
        let mut positive = vec![false; roots.len()];
        for (i, r) in roots.iter().enumerate() {
            let coords = match crate::linalg::coords_in_rowspace(&simple, r) {
                Some(c) => c,
                None => {
                    return bad(format!(
                        "root {} is outside the span of the simple roots",
                        fmt_vec(r)
                    ))
                }
            };
            if !coords.iter().all(|c| c.is_integer()) {
                return bad(format!(
                    "root {} is not an integer combination of simple roots",
                    fmt_vec(r)
                ));
            }
            let pos = coords.iter().all(|c| *c >= q(0));
            let negv = coords.iter().all(|c| *c <= q(0));
            if !pos && !negv {
                return bad(format!(
                    "root {} has mixed-sign simple coordinates",
                    fmt_vec(r)
                ));
            }
            positive[i] = pos;
        }
        let rs = RootSystem { ambient, roots, simple, simple_indices, positive, index, label };
        // reflection closure
        for a in 0..rs.roots.len() {
            let m = rs.reflection_matrix(a);
            for b in 0..rs.roots.len() {
                let img = m.mul_vec(&rs.roots[b]);
                if !rs.index.contains_key(&img) {
                    return bad(format!(
                        "reflection in {} sends {} outside the root list",
                        fmt_vec(&rs.roots[a]),
                        fmt_vec(&rs.roots[b])
                    ));
                }
            }
        }
        Ok(Arc::new(rs))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn roots(&self) -> &[QVec] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &[Q] {
        &self.roots[i]
    }

    pub fn simple(&self) -> &[QVec] {
        &self.simple
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn simple_index(&self, i: usize) -> usize {
        self.simple_indices[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn root_index(&self, v: &[Q]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Ambient matrix of the reflection in the given root.
    pub fn reflection_matrix(&self, root_idx: usize) -> QMat {
        let a = &self.roots[root_idx];
        let na = dot(a, a);
        let mut m = QMat::identity(self.ambient);
        for i in 0..self.ambient {
            for j in 0..self.ambient {
                let corr = q(2) * &a[i] * &a[j] / &na;
                m[(i, j)] = if i == j { q(1) - corr } else { -corr };
            }
        }
        m
    }
}

fn fmt_vec(v: &[Q]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// A Levi datum: its split component inside the ambient space, plus the
/// generating subset of simple roots when it is subset-standard.
#[derive(Debug, Clone)]
pub struct Levi {
    a: Subspace,
    subset: Option<Vec<usize>>,
}

impl PartialEq for Levi {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
    }
}

impl Levi {
    pub fn split_component(&self) -> &Subspace {
        &self.a
    }

    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    pub fn subset(&self) -> Option<&[usize]> {
        self.subset.as_deref()
    }

    pub fn is_standard(&self) -> bool {
        self.subset.is_some()
    }
}

/// Split component cut out by a subset of simple roots (0-based indices).
pub fn levi_from_subset(rs: &RootSystem, subset: &[usize]) -> Result<Levi> {
    let mut seen = BTreeSet::new();
    for &i in subset {
        if i >= rs.rank() {
            return Err(Error::Inconsistent(format!(
                "simple-root index {} out of range (rank {})",
                i + 1,
                rs.rank()
            )));
        }
        seen.insert(i);
    }
    let covectors: Vec<QVec> = seen.iter().map(|&i| rs.simple()[i].clone()).collect();
    let a = Subspace::kernel_of(rs.ambient(), &covectors);
    Ok(Levi { a, subset: Some(seen.into_iter().collect()) })
}

/// Wrap a kernel-intersection subspace as a Levi, tagging it with a simple
/// subset when it coincides with a subset-standard one.
pub fn levi_from_subspace(rs: &RootSystem, a: Subspace) -> Levi {
    let rank = rs.rank();
    for mask in 0..(1usize << rank) {
        let subset: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
        let covectors: Vec<QVec> =
            subset.iter().map(|&i| rs.simple()[i].clone()).collect();
        if Subspace::kernel_of(rs.ambient(), &covectors) == a {
            return Levi { a, subset: Some(subset) };
        }
    }
    Levi { a, subset: None }
}

/// Root indices vanishing identically on the Levi's split component.
pub fn phi_levi(rs: &RootSystem, levi: &Levi) -> Vec<usize> {
    (0..rs.num_roots())
        .filter(|&r| levi.a.basis().iter().all(|b| dot(rs.root(r), b) == q(0)))
        .collect()
}

/// Nonzero restrictions of the roots to a_M, written in the coordinates of
/// the canonical basis of a_M, scaled primitive (positive scaling only, so
/// +/- pairs stay distinct), deduplicated, and sorted lexicographically.
pub fn restricted_roots(rs: &RootSystem, m: &Levi) -> Vec<QVec> {
    let mut set: BTreeSet<QVec> = BTreeSet::new();
    for r in 0..rs.num_roots() {
        let v = restrict_root(rs, m, r);
        if !vec_is_zero(&v) {
            set.insert(primitive_same_ray(&v));
        }
    }
    set.into_iter().collect()
}

/// Restriction of one root to a_M in canonical-basis coordinates (not
/// primitivized; may be zero).
pub fn restrict_root(rs: &RootSystem, m: &Levi, root_idx: usize) -> QVec {
    m.a.basis().iter().map(|b| dot(rs.root(root_idx), b)).collect()
}

/// All distinct flats of the form a_M ∩ ⋂ ker(alpha) with alpha ranging over
/// roots of the ambient Levi, ordered by decreasing dimension then
/// lexicographically on the canonical basis. The ambient Levi plays the role
/// of G; pass the full-subset Levi for the whole group.
pub fn levi_lattice_within(rs: &RootSystem, m: &Levi, ambient: &Levi) -> Result<Vec<Levi>> {
    if !m.a.contains_subspace(&ambient.a) {
        return Err(Error::Inconsistent(
            "ambient Levi does not contain the base Levi".into(),
        ));
    }
    let cutters: Vec<usize> = phi_levi(rs, ambient);
    let mut found: Vec<Subspace> = vec![m.a.clone()];
    let mut queue: Vec<Subspace> = vec![m.a.clone()];
    while let Some(s) = queue.pop() {
        for &r in &cutters {
            let root = rs.root(r);
            if s.basis().iter().all(|b| dot(root, b) == q(0)) {
                continue;
            }
            let hyper = Subspace::kernel_of(rs.ambient(), &[root.to_vec()]);
            let cut = s.intersect(&hyper);
            if !found.contains(&cut) {
                found.push(cut.clone());
                queue.push(cut);
            }
        }
    }
    let mut levis: Vec<Levi> =
        found.into_iter().map(|a| levi_from_subspace(rs, a)).collect();
    levis.sort_by(|x, y| {
        y.a.dim()
            .cmp(&x.a.dim())
            .then_with(|| basis_lex_key(&x.a).cmp(&basis_lex_key(&y.a)))
    });
    Ok(levis)
}

pub fn levi_lattice(rs: &RootSystem, m: &Levi) -> Result<Vec<Levi>> {
    let g = levi_from_subset(rs, &(0..rs.rank()).collect::<Vec<_>>())?;
    levi_lattice_within(rs, m, &g)
}

fn basis_lex_key(s: &Subspace) -> Vec<Q> {
    s.basis().iter().flat_map(|r| r.iter().cloned()).collect()
}

pub struct WeylElt {
    pub mat: QMat,
    pub perm: Vec<u16>,
    pub word: Vec<usize>,
}

pub struct WeylGroup {
    rs: Arc<RootSystem>,
    elements: Vec<WeylElt>,
    by_perm: HashMap<Vec<u16>, usize>,
}

impl WeylGroup {
    pub fn generate(rs: &Arc<RootSystem>) -> Result<WeylGroup> {
        let nroots = rs.num_roots();
        let gen_perm = |mat: &QMat| -> Vec<u16> {
            (0..nroots)
                .map(|r| {
                    rs.root_index(&mat.mul_vec(rs.root(r))).expect("reflection closure")
                        as u16
                })
                .collect()
        };
        let gens: Vec<(QMat, Vec<u16>)> = (0..rs.rank())
            .map(|i| {
                let m = rs.reflection_matrix(rs.simple_index(i));
                let p = gen_perm(&m);
                (m, p)
            })
            .collect();
        let id = WeylElt {
            mat: QMat::identity(rs.ambient()),
            perm: (0..nroots as u16).collect(),
            word: vec![],
        };
        let mut by_perm = HashMap::new();
        by_perm.insert(id.perm.clone(), 0usize);
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            for (i, (gm, gp)) in gens.iter().enumerate() {
                let perm: Vec<u16> =
                    gp.iter().map(|&r| elements[head].perm[r as usize]).collect();
                if by_perm.contains_key(&perm) {
                    continue;
                }
                if elements.len() >= WEYL_CAP {
                    return Err(Error::ResourceCap(format!(
                        "Weyl group larger than {WEYL_CAP}"
                    )));
                }
                let mat = elements[head].mat.mul(gm);
                let mut word = elements[head].word.clone();
                word.push(i);
                by_perm.insert(perm.clone(), elements.len());
                elements.push(WeylElt { mat, perm, word });
            }
            head += 1;
        }
        Ok(WeylGroup { rs: rs.clone(), elements, by_perm })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &WeylElt {
        &self.elements[i]
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let pa = &self.elements[a].perm;
        let pb = &self.elements[b].perm;
        let perm: Vec<u16> = pb.iter().map(|&r| pa[r as usize]).collect();
        self.by_perm[&perm]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let pa = &self.elements[a].perm;
        let mut perm = vec![0u16; pa.len()];
        for (r, &img) in pa.iter().enumerate() {
            perm[img as usize] = r as u16;
        }
        self.by_perm[&perm]
    }

    /// Element index whose ambient matrix equals the given one, when the
    /// matrix lies in the group.
    pub fn index_of_matrix(&self, m: &QMat) -> Option<usize> {
        let mut perm = Vec::with_capacity(self.rs.num_roots());
        for r in 0..self.rs.num_roots() {
            perm.push(self.rs.root_index(&m.mul_vec(self.rs.root(r)))? as u16);
        }
        let &i = self.by_perm.get(&perm)?;
        if matrices_equal(&self.elements[i].mat, m) {
            Some(i)
        } else {
            None
        }
    }

    /// Product of simple reflections given by 0-based indices.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut e = 0usize;
        for &i in word {
            if i >= self.rs.rank() {
                return Err(Error::Inconsistent(format!(
                    "simple-reflection index {} out of range",
                    i + 1
                )));
            }
            let gen = self.by_perm[&gen_perm_of(self, i)];
            e = self.compose(e, gen);
        }
        Ok(e)
    }

    pub fn word_name(&self, e: usize) -> String {
        if self.elements[e].word.is_empty() {
            "e".to_string()
        } else {
            self.elements[e]
                .word
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Multiplication table with word names; the table order matches element
    /// enumeration order.
    pub fn to_group_table(&self) -> Result<Arc<FiniteGroupTable>> {
        let n = self.order();
        if n > crate::chartheory::group::GROUP_ORDER_CAP {
            return Err(Error::ResourceCap(format!(
                "Weyl group of order {n} exceeds the group-table cap"
            )));
        }
        let mult: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| self.compose(a, b)).collect()).collect();
        let names = (0..n).map(|e| self.word_name(e)).collect();
        Ok(FiniteGroupTable::from_mult_table_internal(mult, Some(names)))
    }
}

fn matrices_equal(a: &QMat, b: &QMat) -> bool {
    a.to_rows() == b.to_rows()
}

fn gen_perm_of(w: &WeylGroup, i: usize) -> Vec<u16> {
    let rs = &w.rs;
    let m = rs.reflection_matrix(rs.simple_index(i));
    (0..rs.num_roots())
        .map(|r| rs.root_index(&m.mul_vec(rs.root(r))).unwrap() as u16)
        .collect()
}

/// Minimal-length representatives {w : w(Phi_M^+) > 0 and w^{-1}(Phi_L^+) > 0}
/// of the double cosets W^L \ W / W^M, in element-enumeration order.
pub fn coset_representatives(
    w: &WeylGroup,
    m: &Levi,
    l: &Levi,
) -> Result<Vec<usize>> {
    if !m.is_standard() || !l.is_standard() {
        return Err(Error::NotStandardLevi);
    }
    let rs = w.root_system();
    let pos_m: Vec<usize> =
        phi_levi(rs, m).into_iter().filter(|&r| rs.is_positive(r)).collect();
    let pos_l: Vec<usize> =
        phi_levi(rs, l).into_iter().filter(|&r| rs.is_positive(r)).collect();
    let mut out = Vec::new();
    for e in 0..w.order() {
        let perm = &w.element(e).perm;
        let inv = &w.element(w.inverse(e)).perm;
        let ok_m = pos_m.iter().all(|&r| rs.is_positive(perm[r] as usize));
        let ok_l = pos_l.iter().all(|&r| rs.is_positive(inv[r] as usize));
        if ok_m && ok_l {
            out.push(e);
        }
    }
    Ok(out)
}

/// Pointwise stabilizer {w : w x = x for all x in a_L} as element indices.
pub fn weyl_levi_subgroup(w: &WeylGroup, l: &Levi) -> Vec<usize> {
    (0..w.order())
        .filter(|&e| {
            l.split_component()
                .basis()
                .iter()
                .all(|b| w.element(e).mat.mul_vec(b) == *b)
        })
        .collect()
}

/// True iff some X in a_L satisfies alpha(X) > 0 for every member of
/// delta_sigma whose restriction to a_L is nonzero. The covectors live in
/// a_M coordinates and must be restricted roots up to positive scaling.
pub fn arthur_compatible(
    rs: &RootSystem,
    m: &Levi,
    delta_sigma: &[QVec],
    l: &Levi,
) -> Result<bool> {
    if !m.a.contains_subspace(&l.a) {
        return Err(Error::Inconsistent(
            "the flat is not contained in the base split component".into(),
        ));
    }
    let legal = restricted_roots(rs, m);
    for d in delta_sigma {
        if d.len() != m.a.dim() || vec_is_zero(d) {
            return Err(Error::NotRestrictedRoot(fmt_vec(d)));
        }
        if !legal.contains(&primitive_same_ray(d)) {
            return Err(Error::NotRestrictedRoot(fmt_vec(d)));
        }
    }
    // a_L basis vectors expressed in a_M coordinates parametrize the flat
    let param: Vec<QVec> = l
        .a
        .basis()
        .iter()
        .map(|c| m.a.coords(c).expect("containment checked above"))
        .collect();
    let mut constraints = Vec::new();
    for d in delta_sigma {
        let row: QVec = param.iter().map(|x| dot(d, x)).collect();
        if !vec_is_zero(&row) {
            constraints.push(row);
        }
    }
    Ok(feasible_strict(&constraints))
}
