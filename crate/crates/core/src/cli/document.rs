//! Scenario document grammar: a TOML file with sections for the root
//! system, the Levi, the R-group action, the central extension, and the
//! policy options. All numbers are exact: rationals are written as "p" or
//! "p/q" strings, characters of the center as root-of-unity exponents.
//!
//! Index conventions: simple roots, restricted roots, lattice positions and
//! character positions are 1-based (matching `info` output); group element
//! indices (mult tables, center lists, action assignments) are 0-based.

use crate::chartheory::group::GROUP_ORDER_CAP;
use crate::chartheory::{CentralExtension, FiniteGroupTable};
use crate::error::{Error, Result};
use crate::linalg::{dot, primitive_same_ray, vec_is_zero, QMat, QVec, Q};
use crate::rgroup::{FamilyPolicy, Scenario};
use crate::rootspace::{
    levi_from_subset, levi_lattice_within, phi_levi, Family, Levi, RootSystem,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    // scalar keys first: in TOML they must precede the section headers
    pub id: String,
    /// 1-based simple-root indices of the base Levi M
    #[serde(default)]
    pub levi_subset: Vec<usize>,
    /// 1-based simple-root indices of the ambient Levi; defaults to all
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_subset: Option<Vec<usize>>,
    /// 1-based indices into the canonical restricted-root list
    #[serde(default)]
    pub delta_sigma: Vec<usize>,
    pub root_system: RootSystemSection,
    pub r_group: RGroupSection,
    pub extension: ExtensionSection,
    #[serde(default)]
    pub options: OptionsSection,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RootSystemSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RGroupSection {
    /// "matrices" or "weyl_words"
    pub mode: String,
    /// generators as k x k rational matrices on a_M coordinates; the group
    /// is their closure, ordered identity first, then the given elements,
    /// then products
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<String>>>>,
    /// generators as words in the simple reflections (1-based)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_words: Option<Vec<Vec<usize>>>,
    /// optional names for the closed element list
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSection {
    /// "split" or "explicit"
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// 0-based element indices, strictly ascending
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_conductor: Option<usize>,
    /// chi(center[i]) = zeta_{chi_conductor}^{chi_exponents[i]}
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_exponents: Option<Vec<i64>>,
    /// per total element, the position of its matrix in the closed R-group
    /// element list; must be constant on center cosets
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct OptionsSection {
    /// "arthur" | "all" | "support"; default arthur
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi_family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub base_characters: Vec<BaseCharacter>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct BaseCharacter {
    /// 1-based position in the Levi lattice as printed by `info`
    pub levi: usize,
    /// 1-based position in the chi-isotypic family of that Levi's group
    pub character: usize,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

pub fn parse_document(text: &str) -> Result<ScenarioDocument> {
    toml::from_str(text).map_err(|e| doc_err(e.to_string()))
}

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    build(&parse_document(text)?, None)
}

fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: num::BigInt =
        num.parse().map_err(|_| doc_err(format!("bad rational {t:?}")))?;
    let d: num::BigInt =
        den.parse().map_err(|_| doc_err(format!("bad rational {t:?}")))?;
    if d == num::BigInt::from(0) {
        return Err(doc_err(format!("zero denominator in {t:?}")));
    }
    Ok(Q::new(n, d))
}

fn parse_vector(v: &[String]) -> Result<QVec> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<QMat> {
    if rows.is_empty() {
        return Ok(QMat::identity(0));
    }
    let parsed: Result<Vec<QVec>> = rows.iter().map(|r| parse_vector(r)).collect();
    let parsed = parsed?;
    let w = parsed[0].len();
    if parsed.iter().any(|r| r.len() != w) {
        return Err(doc_err("ragged matrix rows"));
    }
    Ok(QMat::from_rows(parsed))
}

fn render_rational(x: &Q) -> String {
    x.to_string()
}

fn render_vector(v: &[Q]) -> Vec<String> {
    v.iter().map(render_rational).collect()
}

fn render_matrix(m: &QMat) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| render_vector(r)).collect()
}

fn build_root_system(sec: &RootSystemSection) -> Result<Arc<RootSystem>> {
    match (&sec.family, &sec.roots) {
        (Some(fam), None) => {
            let rank = sec
                .rank
                .ok_or_else(|| doc_err("root_system.family needs root_system.rank"))?;
            if sec.ambient.is_some() || sec.simple.is_some() || sec.label.is_some() {
                return Err(doc_err(
                    "classical root_system takes only family and rank",
                ));
            }
            RootSystem::classical(Family::parse(fam)?, rank)
        }
        (None, Some(roots)) => {
            let ambient = sec
                .ambient
                .ok_or_else(|| doc_err("explicit root_system needs ambient"))?;
            let simple = sec
                .simple
                .as_ref()
                .ok_or_else(|| doc_err("explicit root_system needs simple"))?;
            if sec.rank.is_some() {
                return Err(doc_err("explicit root_system does not take rank"));
            }
            let roots: Result<Vec<QVec>> = roots.iter().map(|r| parse_vector(r)).collect();
            let simple: Result<Vec<QVec>> = simple.iter().map(|r| parse_vector(r)).collect();
            let label = sec.label.clone().unwrap_or_else(|| "explicit".into());
            RootSystem::explicit(ambient, roots?, simple?, label)
        }
        _ => Err(doc_err(
            "root_system must give either {family, rank} or {ambient, roots, simple}",
        )),
    }
}

fn subset_from_doc(rs: &RootSystem, indices: &[usize], what: &str) -> Result<Levi> {
    let mut zero_based = Vec::with_capacity(indices.len());
    for &i in indices {
        if i == 0 || i > rs.rank() {
            return Err(doc_err(format!(
                "{what}: simple-root index {i} out of range 1..={}",
                rs.rank()
            )));
        }
        if zero_based.contains(&(i - 1)) {
            return Err(doc_err(format!("{what}: repeated index {i}")));
        }
        zero_based.push(i - 1);
    }
    levi_from_subset(rs, &zero_based)
}

/// Canonical restricted-root list of (M, ambient): primitive nonzero
/// restrictions of the ambient Levi's roots, ascending. Mirrors the list a
/// Scenario caches, and `info` prints it with 1-based indices.
pub fn canonical_restricted(rs: &RootSystem, m: &Levi, ambient: &Levi) -> Vec<QVec> {
    let mut set: BTreeSet<QVec> = BTreeSet::new();
    for ri in phi_levi(rs, ambient) {
        let v: QVec =
            m.split_component().basis().iter().map(|b| dot(rs.root(ri), b)).collect();
        if !vec_is_zero(&v) {
            set.insert(primitive_same_ray(&v));
        }
    }
    set.into_iter().collect()
}

/// Close a generating set of k x k matrices; element order is identity
/// first, then the given elements in document order, then products.
fn close_matrix_group(gens: &[QMat], k: usize) -> Result<Vec<QMat>> {
    let mut elems: Vec<QMat> = vec![QMat::identity(k)];
    for g in gens {
        if g.rows != k || g.cols != k {
            return Err(doc_err(format!(
                "r_group matrix is {}x{}, expected {k}x{k}",
                g.rows, g.cols
            )));
        }
        if !elems.contains(g) {
            elems.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elems.len() {
        if elems.len() > GROUP_ORDER_CAP {
            return Err(Error::ResourceCap(format!(
                "r_group closure exceeds {GROUP_ORDER_CAP} elements"
            )));
        }
        for g in gens {
            let p = elems[i].mul(g);
            if !elems.contains(&p) {
                elems.push(p);
            }
        }
        i += 1;
    }
    Ok(elems)
}

fn matrix_group_table(
    elems: &[QMat],
    names: Option<Vec<String>>,
) -> Result<Arc<FiniteGroupTable>> {
    let n = elems.len();
    let mut mult = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let p = elems[a].mul(&elems[b]);
            mult[a][b] = elems
                .iter()
                .position(|e| *e == p)
                .ok_or_else(|| doc_err("r_group element list is not closed"))?;
        }
    }
    if let Some(ns) = &names {
        if ns.len() != n {
            return Err(doc_err(format!(
                "r_group.names has {} entries for {} elements",
                ns.len(),
                n
            )));
        }
    }
    FiniteGroupTable::from_mult_table(mult, names)
}

/// The R-group as matrices on a_M, from either input mode.
fn build_r_matrices(
    sec: &RGroupSection,
    rs: &RootSystem,
    levi_m: &Levi,
) -> Result<(Vec<QMat>, Vec<String>)> {
    let k = levi_m.dim_a();
    match sec.mode.as_str() {
        "matrices" => {
            let given = sec
                .matrices
                .as_ref()
                .ok_or_else(|| doc_err("r_group.mode = \"matrices\" needs r_group.matrices"))?;
            if sec.weyl_words.is_some() {
                return Err(doc_err("r_group takes matrices or weyl_words, not both"));
            }
            let gens: Result<Vec<QMat>> = given.iter().map(|m| parse_matrix(m)).collect();
            let elems = close_matrix_group(&gens?, k)?;
            let names = default_names(elems.len());
            Ok((elems, names))
        }
        "weyl_words" => {
            let words = sec
                .weyl_words
                .as_ref()
                .ok_or_else(|| doc_err("r_group.mode = \"weyl_words\" needs r_group.weyl_words"))?;
            if sec.matrices.is_some() {
                return Err(doc_err("r_group takes matrices or weyl_words, not both"));
            }
            let mut gens = Vec::with_capacity(words.len());
            for w in words {
                gens.push(word_matrix_on_levi(rs, levi_m, w)?);
            }
            let elems = close_matrix_group(&gens, k)?;
            let mut names = default_names(elems.len());
            for (w, g) in words.iter().zip(&gens) {
                let pos = elems.iter().position(|e| e == g).unwrap();
                if pos != 0 {
                    names[pos] = word_label(w);
                }
            }
            Ok((elems, names))
        }
        other => Err(doc_err(format!(
            "r_group.mode {other:?} is not \"matrices\" or \"weyl_words\""
        ))),
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
        .collect()
}

fn word_label(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("*")
    }
}

/// Product of simple reflections (1-based word), restricted to a_M
/// coordinates; the word must stabilize a_M.
fn word_matrix_on_levi(rs: &RootSystem, levi_m: &Levi, word: &[usize]) -> Result<QMat> {
    let n = rs.ambient();
    let mut mat = QMat::identity(n);
    for &i in word {
        if i == 0 || i > rs.rank() {
            return Err(doc_err(format!(
                "weyl word letter {i} out of range 1..={}",
                rs.rank()
            )));
        }
        mat = mat.mul(&rs.reflection_matrix(rs.simple_index(i - 1)));
    }
    let a = levi_m.split_component();
    let mut rows = Vec::with_capacity(levi_m.dim_a());
    for b in a.basis() {
        let img = mat.mul_vec(b);
        let coords = a.coords(&img).ok_or_else(|| {
            doc_err(format!("weyl word {} does not stabilize a_M", word_label(word)))
        })?;
        rows.push(coords);
    }
    // rows[i] = coords of image of basis vector i; the action matrix sends
    // coordinate vectors by left multiplication, so transpose
    Ok(QMat::from_rows(rows).transpose())
}

fn build_extension(
    sec: &ExtensionSection,
    elems: &[QMat],
    r_names: &[String],
) -> Result<(CentralExtension, Vec<QMat>)> {
    match sec.kind.as_str() {
        "split" => {
            for f in [
                sec.order.is_some(),
                sec.mult.is_some(),
                sec.names.is_some(),
                sec.center.is_some(),
                sec.chi_conductor.is_some(),
                sec.chi_exponents.is_some(),
                sec.action.is_some(),
            ] {
                if f {
                    return Err(doc_err("split extension takes no other extension fields"));
                }
            }
            let table = matrix_group_table(elems, Some(r_names.to_vec()))?;
            Ok((CentralExtension::split(table), elems.to_vec()))
        }
        "explicit" => {
            let order = sec.order.ok_or_else(|| doc_err("explicit extension needs order"))?;
            let mult =
                sec.mult.clone().ok_or_else(|| doc_err("explicit extension needs mult"))?;
            if mult.len() != order || mult.iter().any(|r| r.len() != order) {
                return Err(doc_err(format!("mult table is not {order}x{order}")));
            }
            let total = FiniteGroupTable::from_mult_table(mult, sec.names.clone())?;
            let center =
                sec.center.clone().ok_or_else(|| doc_err("explicit extension needs center"))?;
            if center.windows(2).any(|w| w[0] >= w[1]) {
                return Err(doc_err("center indices must be strictly ascending"));
            }
            let conductor = sec
                .chi_conductor
                .ok_or_else(|| doc_err("explicit extension needs chi_conductor"))?;
            if conductor == 0 || conductor > 64 {
                return Err(doc_err("chi_conductor must be in 1..=64"));
            }
            let exps = sec
                .chi_exponents
                .clone()
                .ok_or_else(|| doc_err("explicit extension needs chi_exponents"))?;
            if exps.len() != center.len() {
                return Err(doc_err(format!(
                    "{} chi_exponents for {} center elements",
                    exps.len(),
                    center.len()
                )));
            }
            let chi = exps
                .iter()
                .map(|&k| crate::cyclotomic::Cyclotomic::root_of_unity(conductor, k))
                .collect();
            let ext = CentralExtension::new(total, center, chi)?;

            let action_doc = sec
                .action
                .clone()
                .ok_or_else(|| doc_err("explicit extension needs action"))?;
            if action_doc.len() != order {
                return Err(doc_err(format!(
                    "{} action entries for {} elements",
                    action_doc.len(),
                    order
                )));
            }
            for (g, &a) in action_doc.iter().enumerate() {
                if a >= elems.len() {
                    return Err(doc_err(format!(
                        "action[{g}] = {a} exceeds the r_group element list"
                    )));
                }
                let rep = ext.section(ext.proj(g));
                if action_doc[rep] != a {
                    return Err(doc_err(format!(
                        "action is not constant on the center coset of element {g}"
                    )));
                }
            }
            let quotient_action: Vec<QMat> = (0..ext.quotient().order())
                .map(|r| elems[action_doc[ext.section(r)]].clone())
                .collect();
            Ok((ext, quotient_action))
        }
        other => Err(doc_err(format!(
            "extension.kind {other:?} is not \"split\" or \"explicit\""
        ))),
    }
}

pub fn build(doc: &ScenarioDocument, policy_override: Option<FamilyPolicy>) -> Result<Scenario> {
    let rs = build_root_system(&doc.root_system)?;
    let levi_m = subset_from_doc(&rs, &doc.levi_subset, "levi_subset")?;
    let ambient = match &doc.ambient_subset {
        None => levi_from_subset(&rs, &(0..rs.rank()).collect::<Vec<_>>())?,
        Some(idx) => subset_from_doc(&rs, idx, "ambient_subset")?,
    };

    let restricted = canonical_restricted(&rs, &levi_m, &ambient);
    let mut delta = Vec::with_capacity(doc.delta_sigma.len());
    for &i in &doc.delta_sigma {
        if i == 0 || i > restricted.len() {
            return Err(doc_err(format!(
                "delta_sigma index {i} out of range 1..={}",
                restricted.len()
            )));
        }
        delta.push(restricted[i - 1].clone());
    }

    let (elems, r_names) = build_r_matrices(&doc.r_group, &rs, &levi_m)?;
    let names_final = match &doc.r_group.names {
        None => r_names,
        Some(ns) => {
            if ns.len() != elems.len() {
                return Err(doc_err(format!(
                    "r_group.names has {} entries but the closure has {}",
                    ns.len(),
                    elems.len()
                )));
            }
            ns.clone()
        }
    };
    let (extension, action) = build_extension(&doc.extension, &elems, &names_final)?;

    let policy = match policy_override {
        Some(p) => p,
        None => match &doc.options.levi_family {
            None => FamilyPolicy::Arthur,
            Some(s) => FamilyPolicy::parse(s)?,
        },
    };

    let lattice = levi_lattice_within(&rs, &levi_m, &ambient)?;
    let mut base_characters = Vec::with_capacity(doc.options.base_characters.len());
    for bc in &doc.options.base_characters {
        if bc.levi == 0 || bc.levi > lattice.len() {
            return Err(doc_err(format!(
                "base_characters.levi {} out of range 1..={}",
                bc.levi,
                lattice.len()
            )));
        }
        if bc.character == 0 {
            return Err(doc_err("base_characters.character is 1-based"));
        }
        base_characters.push((lattice[bc.levi - 1].clone(), bc.character - 1));
    }

    Scenario::new(
        doc.id.clone(),
        rs,
        levi_m,
        Some(ambient),
        delta,
        extension,
        action,
        policy,
        base_characters,
    )
}

/// Reconstruct a document from a validated scenario; parsing it back yields
/// an equal scenario.
pub fn emit_document(s: &Scenario) -> Result<ScenarioDocument> {
    let rs = s.root_system();
    let root_system = classical_section(rs).unwrap_or_else(|| RootSystemSection {
        family: None,
        rank: None,
        ambient: Some(rs.ambient()),
        roots: Some(rs.roots().iter().map(|r| render_vector(r)).collect()),
        simple: Some(rs.simple().iter().map(|r| render_vector(r)).collect()),
        label: Some(rs.label().to_string()),
    });

    let levi_subset = subset_indices(s.levi_m(), "base Levi")?;
    let full: Vec<usize> = (0..rs.rank()).collect();
    let ambient_subset = if s.ambient().subset() == Some(full.as_slice()) {
        None
    } else {
        Some(subset_indices(s.ambient(), "ambient Levi")?)
    };

    let restricted = s.restricted_roots();
    let mut delta_sigma = Vec::new();
    for d in s.delta_sigma() {
        let pos = restricted
            .iter()
            .position(|r| r == d)
            .ok_or_else(|| doc_err("stored delta is not a canonical restricted root"))?;
        delta_sigma.push(pos + 1);
    }

    let quotient = s.extension().quotient();
    let matrices: Vec<Vec<Vec<String>>> =
        (0..quotient.order()).map(|r| render_matrix(s.action(r))).collect();
    let r_group = RGroupSection {
        mode: "matrices".into(),
        matrices: Some(matrices),
        weyl_words: None,
        names: Some((0..quotient.order()).map(|r| quotient.name(r).to_string()).collect()),
    };

    let extension = if s.extension().is_split() {
        ExtensionSection {
            kind: "split".into(),
            order: None,
            mult: None,
            names: None,
            center: None,
            chi_conductor: None,
            chi_exponents: None,
            action: None,
        }
    } else {
        let total = s.extension().total();
        let n = total.order();
        let mult: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| total.mul(a, b)).collect()).collect();
        let center = s.extension().center().elements().to_vec();
        // smallest m with chi(z)^m = 1 for all z; p/q conductor of the
        // values can be smaller (e.g. -1 lies in Q)
        let mut conductor = 1usize;
        for v in s.extension().chi_values() {
            let ord = multiplicative_order(v)
                .ok_or_else(|| doc_err("chi value is not a root of unity"))?;
            conductor = num::integer::lcm(conductor, ord);
        }
        let mut exps = Vec::with_capacity(center.len());
        for v in s.extension().chi_values() {
            let k = (0..conductor as i64)
                .find(|&k| crate::cyclotomic::Cyclotomic::root_of_unity(conductor, k) == *v)
                .ok_or_else(|| doc_err("chi value is not a root of unity"))?;
            exps.push(k);
        }
        ExtensionSection {
            kind: "explicit".into(),
            order: Some(n),
            mult: Some(mult),
            names: Some((0..n).map(|g| total.name(g).to_string()).collect()),
            center: Some(center),
            chi_conductor: Some(conductor),
            chi_exponents: Some(exps),
            action: Some((0..n).map(|g| s.extension().proj(g)).collect()),
        }
    };

    let lattice = s.lattice();
    let base_characters = s
        .base_characters()
        .iter()
        .map(|(l, c)| {
            let pos = lattice.iter().position(|x| x == l).expect("validated");
            BaseCharacter { levi: pos + 1, character: c + 1 }
        })
        .collect();

    Ok(ScenarioDocument {
        id: s.id().to_string(),
        root_system,
        levi_subset,
        ambient_subset,
        delta_sigma,
        r_group,
        extension,
        options: OptionsSection {
            levi_family: Some(s.policy().as_str().to_string()),
            base_characters,
        },
    })
}

pub fn emit_text(s: &Scenario) -> Result<String> {
    let doc = emit_document(s)?;
    toml::to_string(&doc).map_err(|e| doc_err(e.to_string()))
}

fn multiplicative_order(v: &crate::cyclotomic::Cyclotomic) -> Option<usize> {
    let one = crate::cyclotomic::Cyclotomic::one();
    let mut p = v.clone();
    for t in 1..=GROUP_ORDER_CAP {
        if p == one {
            return Some(t);
        }
        p = p.mul(v);
    }
    None
}

fn subset_indices(l: &Levi, what: &str) -> Result<Vec<usize>> {
    match l.subset() {
        Some(sub) => Ok(sub.iter().map(|i| i + 1).collect()),
        None => Err(doc_err(format!("{what} has no simple-root description"))),
    }
}

fn classical_section(rs: &RootSystem) -> Option<RootSystemSection> {
    let label = rs.label();
    if label.len() < 2 {
        return None;
    }
    let family = Family::parse(&label[..1]).ok()?;
    let rank: usize = label[1..].parse().ok()?;
    let again = RootSystem::classical(family, rank).ok()?;
    if again.roots() == rs.roots() && again.simple() == rs.simple() {
        Some(RootSystemSection {
            family: Some(label[..1].to_string()),
            rank: Some(rank),
            ambient: None,
            roots: None,
            simple: None,
            label: None,
        })
    } else {
        None
    }
}
