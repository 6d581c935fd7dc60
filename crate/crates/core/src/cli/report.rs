//! Rendering of command results. Two formats: `table` for people, and a
//! line-oriented `machine` format whose bytes are a pure function of
//! (scenario, family policy, format version). All values print exactly, as
//! rationals and root-of-unity polynomials, never as decimals.

use crate::chartheory::character_table;
use crate::duality::{
    claim_matrix, duality_operator, is_elliptic_character, steinberg, ClaimStatus,
    DualityReport,
};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rgroup::Scenario;

pub const MACHINE_FORMAT: &str = "steindual-machine/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Machine,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "table" => Ok(Format::Table),
            "machine" => Ok(Format::Machine),
            other => Err(Error::Document(format!(
                "unknown format `{other}` (expected table|machine)"
            ))),
        }
    }
}

fn machine_header(out: &mut String, command: &str, scenario: Option<&str>, policy: &str) {
    out.push_str(&format!("format: {MACHINE_FORMAT}\n"));
    out.push_str(&format!("command: {command}\n"));
    if let Some(id) = scenario {
        out.push_str(&format!("scenario: {id}\n"));
    }
    out.push_str(&format!("policy: {policy}\n"));
}

/// Machine lines separate fields with `|`, so embedded pipes are rewritten.
fn field(s: &str) -> String {
    s.replace('|', "/")
}

fn vec_str(v: &[Q]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn pad(s: &str, w: usize) -> String {
    format!("{s:<w$}")
}

pub fn render_verify(rep: &DualityReport, fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Machine => {
            machine_header(&mut out, "verify", Some(&rep.scenario_id), rep.policy);
            let fam: Vec<String> = rep.family_labels.iter().map(|l| field(l)).collect();
            out.push_str(&format!("family: {}\n", fam.join("|")));
            let nr = if rep.non_reflection.is_empty() {
                "none".to_string()
            } else {
                let names: Vec<String> =
                    rep.non_reflection.iter().map(|l| field(l)).collect();
                names.join("|")
            };
            out.push_str(&format!("non-reflection: {nr}\n"));
            out.push_str("contragredient: value-conjugation\n");
            for c in &rep.claims {
                out.push_str(&format!(
                    "claim: {}|{}|{}\n",
                    c.id,
                    c.status.as_str(),
                    field(&c.witness)
                ));
            }
            out.push_str(&format!(
                "result: {}\n",
                if rep.all_executed_pass() { "pass" } else { "fail" }
            ));
        }
        Format::Table => {
            out.push_str(&format!(
                "scenario {} (family policy: {})\n",
                rep.scenario_id, rep.policy
            ));
            out.push_str(&format!("active family: {}\n", rep.family_labels.join(", ")));
            let nr = if rep.non_reflection.is_empty() {
                "none".to_string()
            } else {
                rep.non_reflection.join(", ")
            };
            out.push_str(&format!("non-reflection elements: {nr}\n"));
            out.push_str("contragredient: value-conjugation\n\n");
            let idw = rep.claims.iter().map(|c| c.id.len()).max().unwrap_or(5).max(5);
            out.push_str(&format!(
                "  {}  {}  witness\n",
                pad("claim", idw),
                pad("status", 14)
            ));
            for c in &rep.claims {
                out.push_str(&format!(
                    "  {}  {}  {}\n",
                    pad(c.id, idw),
                    pad(c.status.as_str(), 14),
                    c.witness
                ));
            }
            let (mut p, mut f, mut na) = (0, 0, 0);
            for c in &rep.claims {
                match c.status {
                    ClaimStatus::Pass => p += 1,
                    ClaimStatus::Fail => f += 1,
                    ClaimStatus::NotApplicable => na += 1,
                }
            }
            out.push_str(&format!(
                "\nresult: {} ({p} pass, {f} fail, {na} not applicable)\n",
                if rep.all_executed_pass() { "pass" } else { "fail" }
            ));
        }
    }
    out
}

pub fn render_scan(policy_label: &str, reports: &[DualityReport], fmt: Format) -> String {
    let matrix = claim_matrix(reports);
    let all_pass = reports.iter().all(|r| r.all_executed_pass());
    let mut out = String::new();
    match fmt {
        Format::Machine => {
            machine_header(&mut out, "scan", None, policy_label);
            out.push_str(&format!("scenarios: {}\n", matrix.scenarios.join("|")));
            for (id, statuses) in &matrix.rows {
                let cells: Vec<&str> = statuses.iter().map(|s| s.as_str()).collect();
                out.push_str(&format!("claim: {}|{}\n", id, cells.join("|")));
            }
            out.push_str(&format!("result: {}\n", if all_pass { "pass" } else { "fail" }));
        }
        Format::Table => {
            out.push_str(&format!(
                "claim matrix over builtin scenarios (family policy: {policy_label})\n\n"
            ));
            let idw = matrix.rows.iter().map(|(id, _)| id.len()).max().unwrap_or(5);
            let colw: Vec<usize> =
                matrix.scenarios.iter().map(|s| s.len().max(4) + 2).collect();
            out.push_str(&pad("", idw + 2));
            for (s, w) in matrix.scenarios.iter().zip(&colw) {
                out.push_str(&pad(s, *w));
            }
            out.push('\n');
            for (id, statuses) in &matrix.rows {
                out.push_str(&pad(id, idw + 2));
                for (st, w) in statuses.iter().zip(&colw) {
                    let cell = match st {
                        ClaimStatus::Pass => "pass",
                        ClaimStatus::Fail => "FAIL",
                        ClaimStatus::NotApplicable => "n/a",
                    };
                    out.push_str(&pad(cell, *w));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "\nresult: {}\n",
                if all_pass { "pass" } else { "fail" }
            ));
        }
    }
    out
}

pub fn render_info(s: &Scenario, fmt: Format) -> Result<String> {
    let rs = s.root_system();
    let policy = s.policy().as_str();
    let restricted = s.restricted_roots();
    let delta = s.delta_sigma();
    let family = s.active_levi_family()?;
    let (regular, elliptic) = s.regular_set();
    let strata = s.levi_support_partition()?;
    let quotient = s.extension().quotient().clone();
    let nr = s.non_reflection_elements();
    let ext = s.extension();
    let mut out = String::new();
    match fmt {
        Format::Machine => {
            machine_header(&mut out, "info", Some(s.id()), policy);
            out.push_str(&format!("root-system: {}\n", field(rs.label())));
            out.push_str(&format!("ambient-dim: {}\n", rs.ambient()));
            out.push_str(&format!("root-count: {}\n", rs.roots().len()));
            out.push_str(&format!("rank: {}\n", rs.rank()));
            out.push_str(&format!("dim-a-m: {}\n", s.dim_a_m()));
            out.push_str(&format!("dim-a-g: {}\n", s.dim_a_g()));
            let rr: Vec<String> = restricted.iter().map(|v| vec_str(v)).collect();
            out.push_str(&format!("restricted-roots: {}\n", rr.join("|")));
            let ds: Vec<String> = delta.iter().map(|v| vec_str(v)).collect();
            out.push_str(&format!(
                "delta-sigma: {}\n",
                if ds.is_empty() { "none".into() } else { ds.join("|") }
            ));
            let lat: Vec<String> = s
                .lattice()
                .iter()
                .map(|l| format!("{}:{}", s.levi_label(l), l.dim_a()))
                .collect();
            out.push_str(&format!("lattice: {}\n", lat.join("|")));
            let fam: Vec<String> = family.iter().map(|l| s.levi_label(l)).collect();
            out.push_str(&format!("family: {}\n", fam.join("|")));
            out.push_str(&format!("r-order: {}\n", quotient.order()));
            let reg: Vec<String> =
                regular.iter().map(|&r| field(quotient.name(r))).collect();
            out.push_str(&format!(
                "regular-set: {}\n",
                if reg.is_empty() { "none".into() } else { reg.join("|") }
            ));
            out.push_str(&format!("elliptic: {elliptic}\n"));
            for st in &strata {
                let els: Vec<String> =
                    st.elements.iter().map(|&r| quotient.name(r).to_string()).collect();
                out.push_str(&format!(
                    "stratum: {}|{}\n",
                    field(&s.levi_label(&st.levi)),
                    field(&els.join(","))
                ));
            }
            let nrn: Vec<String> = nr.iter().map(|&r| field(quotient.name(r))).collect();
            out.push_str(&format!(
                "non-reflection: {}\n",
                if nrn.is_empty() { "none".into() } else { nrn.join("|") }
            ));
            out.push_str(&format!(
                "extension: {}\n",
                if ext.is_split() { "split" } else { "nonsplit" }
            ));
            out.push_str(&format!("total-order: {}\n", ext.total().order()));
            out.push_str(&format!("center-order: {}\n", ext.center().order()));
            out.push_str(&format!("chi-trivial: {}\n", ext.chi_is_trivial()));
            out.push_str(&format!("chi-real: {}\n", ext.chi_is_real()));
        }
        Format::Table => {
            out.push_str(&format!("scenario {} (family policy: {})\n", s.id(), policy));
            out.push_str(&format!(
                "root system: {} (ambient dim {}, {} roots, rank {})\n",
                rs.label(),
                rs.ambient(),
                rs.roots().len(),
                rs.rank()
            ));
            out.push_str(&format!(
                "dim a_M = {}, dim a_G = {}\n",
                s.dim_a_m(),
                s.dim_a_g()
            ));
            out.push_str("restricted roots:\n");
            for (i, v) in restricted.iter().enumerate() {
                let mark = if delta.contains(v) { "  [delta]" } else { "" };
                out.push_str(&format!("  {}: {}{}\n", i + 1, vec_str(v), mark));
            }
            out.push_str("levi lattice:\n");
            for (i, l) in s.lattice().iter().enumerate() {
                let mark = if family.contains(l) { "  [family]" } else { "" };
                out.push_str(&format!(
                    "  {}: {} (dim {}){}\n",
                    i + 1,
                    s.levi_label(l),
                    l.dim_a(),
                    mark
                ));
            }
            out.push_str(&format!("R-group order: {}\n", quotient.order()));
            let reg: Vec<String> =
                regular.iter().map(|&r| quotient.name(r).to_string()).collect();
            out.push_str(&format!(
                "regular set: {} (elliptic: {})\n",
                if reg.is_empty() { "empty".into() } else { reg.join(", ") },
                elliptic
            ));
            out.push_str("strata:\n");
            for st in &strata {
                let els: Vec<String> =
                    st.elements.iter().map(|&r| quotient.name(r).to_string()).collect();
                out.push_str(&format!(
                    "  {}: {}\n",
                    s.levi_label(&st.levi),
                    els.join(", ")
                ));
            }
            let nrn: Vec<String> = nr.iter().map(|&r| quotient.name(r).to_string()).collect();
            out.push_str(&format!(
                "non-reflection elements: {}\n",
                if nrn.is_empty() { "none".into() } else { nrn.join(", ") }
            ));
            out.push_str(&format!(
                "extension: {}, total order {}, center order {}, chi {}\n",
                if ext.is_split() { "split" } else { "nonsplit" },
                ext.total().order(),
                ext.center().order(),
                if ext.chi_is_trivial() {
                    "trivial"
                } else if ext.chi_is_real() {
                    "real"
                } else {
                    "complex"
                }
            ));
        }
    }
    Ok(out)
}

pub fn render_chartable(s: &Scenario, fmt: Format) -> Result<String> {
    let total = s.extension().total().clone();
    let table = character_table(&total)?;
    let iso = s.extension().chi_isotypic(&table);
    let classes: Vec<String> = (0..total.num_classes())
        .map(|c| total.name(total.class_members(c)[0]).to_string())
        .collect();
    let sizes: Vec<usize> =
        (0..total.num_classes()).map(|c| total.class_members(c).len()).collect();
    let mut out = String::new();
    match fmt {
        Format::Machine => {
            machine_header(&mut out, "chartable", Some(s.id()), s.policy().as_str());
            out.push_str(&format!("group-order: {}\n", total.order()));
            let cls: Vec<String> = classes.iter().map(|c| field(c)).collect();
            out.push_str(&format!("classes: {}\n", cls.join("|")));
            let sz: Vec<String> = sizes.iter().map(|z| z.to_string()).collect();
            out.push_str(&format!("sizes: {}\n", sz.join("|")));
            for i in 0..table.num_chars() {
                let vals: Vec<String> =
                    table.values[i].iter().map(|v| field(&v.to_string())).collect();
                out.push_str(&format!(
                    "char: {}|{}|{}\n",
                    i + 1,
                    table.degrees[i],
                    vals.join("|")
                ));
            }
            let isol: Vec<String> = iso.iter().map(|&i| (i + 1).to_string()).collect();
            out.push_str(&format!(
                "isotypic: {}\n",
                if isol.is_empty() { "none".into() } else { isol.join("|") }
            ));
        }
        Format::Table => {
            out.push_str(&format!(
                "character table of the total group (order {}, {} classes)\n",
                total.order(),
                total.num_classes()
            ));
            out.push_str("rows marked * lie in the chi-isotypic family\n\n");
            let mut cells: Vec<Vec<String>> = Vec::new();
            let mut head = vec!["#".to_string(), "deg".to_string()];
            head.extend(classes.iter().cloned());
            cells.push(head);
            let mut szrow = vec!["".to_string(), "size".to_string()];
            szrow.extend(sizes.iter().map(|z| z.to_string()));
            cells.push(szrow);
            for i in 0..table.num_chars() {
                let star = if iso.contains(&i) { "*" } else { "" };
                let mut row =
                    vec![format!("{}{}", star, i + 1), table.degrees[i].to_string()];
                row.extend(table.values[i].iter().map(|v| v.to_string()));
                cells.push(row);
            }
            let cols = cells[0].len();
            let widths: Vec<usize> = (0..cols)
                .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
                .collect();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(&format!("  {}\n", line.join("  ")));
            }
        }
    }
    Ok(out)
}

/// Errors that mean "this scenario has no such object", not "the run broke".
fn not_applicable_reason(e: &Error) -> Option<String> {
    match e {
        Error::MissingBaseCharacter | Error::EmptyIsotypic => Some(e.to_string()),
        _ => None,
    }
}

pub fn render_dual(s: &Scenario, fmt: Format) -> Result<String> {
    let mut out = String::new();
    let op = match duality_operator(s) {
        Ok(op) => op,
        Err(e) => match not_applicable_reason(&e) {
            Some(reason) => {
                match fmt {
                    Format::Machine => {
                        machine_header(&mut out, "dual", Some(s.id()), s.policy().as_str());
                        out.push_str("dual: not-applicable\n");
                        out.push_str(&format!("reason: {}\n", field(&reason)));
                    }
                    Format::Table => {
                        out.push_str(&format!("dual: not applicable ({reason})\n"));
                    }
                }
                return Ok(out);
            }
            None => return Err(e),
        },
    };
    let table = character_table(s.extension().total())?;
    match fmt {
        Format::Machine => {
            machine_header(&mut out, "dual", Some(s.id()), s.policy().as_str());
            let basis: Vec<String> = op.basis.iter().map(|&i| (i + 1).to_string()).collect();
            out.push_str(&format!("basis: {}\n", basis.join("|")));
            let degs: Vec<String> =
                op.basis.iter().map(|&i| table.degrees[i].to_string()).collect();
            out.push_str(&format!("degrees: {}\n", degs.join("|")));
            for row in &op.entries {
                let vals: Vec<String> = row.iter().map(|v| field(&v.to_string())).collect();
                out.push_str(&format!("row: {}\n", vals.join("|")));
            }
        }
        Format::Table => {
            out.push_str(&format!(
                "duality operator on the chi-isotypic basis (dim {})\n",
                op.basis.len()
            ));
            let names: Vec<String> = op
                .basis
                .iter()
                .map(|&i| format!("#{} (deg {})", i + 1, table.degrees[i]))
                .collect();
            out.push_str(&format!("basis: {}\n\n", names.join(", ")));
            let mut cells: Vec<Vec<String>> = Vec::new();
            let mut head = vec!["".to_string()];
            head.extend(op.basis.iter().map(|&i| format!("#{}", i + 1)));
            cells.push(head);
            for (r, row) in op.entries.iter().enumerate() {
                let mut line = vec![format!("#{}", op.basis[r] + 1)];
                line.extend(row.iter().map(|v| v.to_string()));
                cells.push(line);
            }
            let cols = cells[0].len();
            let widths: Vec<usize> = (0..cols)
                .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
                .collect();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(&format!("  {}\n", line.join("  ")));
            }
        }
    }
    Ok(out)
}

pub fn render_steinberg(s: &Scenario, fmt: Format) -> Result<String> {
    let mut out = String::new();
    let st = match steinberg(s) {
        Ok(st) => st,
        Err(e) => match not_applicable_reason(&e) {
            Some(reason) => {
                match fmt {
                    Format::Machine => {
                        machine_header(
                            &mut out,
                            "steinberg",
                            Some(s.id()),
                            s.policy().as_str(),
                        );
                        out.push_str("steinberg: not-applicable\n");
                        out.push_str(&format!("reason: {}\n", field(&reason)));
                    }
                    Format::Table => {
                        out.push_str(&format!("steinberg: not applicable ({reason})\n"));
                    }
                }
                return Ok(out);
            }
            None => return Err(e),
        },
    };
    let total = s.extension().total().clone();
    let table = character_table(&total)?;
    let iso = s.extension().chi_isotypic(&table);
    let classes: Vec<String> = (0..total.num_classes())
        .map(|c| total.name(total.class_members(c)[0]).to_string())
        .collect();
    let elliptic = is_elliptic_character(s, &st.function);
    match fmt {
        Format::Machine => {
            machine_header(&mut out, "steinberg", Some(s.id()), s.policy().as_str());
            let basis: Vec<String> = iso.iter().map(|&i| (i + 1).to_string()).collect();
            out.push_str(&format!("basis: {}\n", basis.join("|")));
            let coords: Vec<String> =
                st.coords.iter().map(|v| field(&v.to_string())).collect();
            out.push_str(&format!("coords: {}\n", coords.join("|")));
            let cls: Vec<String> = classes.iter().map(|c| field(c)).collect();
            out.push_str(&format!("classes: {}\n", cls.join("|")));
            let vals: Vec<String> =
                st.function.values().iter().map(|v| field(&v.to_string())).collect();
            out.push_str(&format!("values: {}\n", vals.join("|")));
            out.push_str(&format!("elliptic: {elliptic}\n"));
        }
        Format::Table => {
            out.push_str("Steinberg character (alternating sum over the active family)\n");
            let coords: Vec<String> = iso
                .iter()
                .zip(&st.coords)
                .map(|(&i, v)| format!("#{}: {}", i + 1, v))
                .collect();
            out.push_str(&format!("coords in isotypic basis: {}\n", coords.join(", ")));
            out.push_str("class values:\n");
            for (c, v) in classes.iter().zip(st.function.values()) {
                out.push_str(&format!("  {c}: {v}\n"));
            }
            out.push_str(&format!("elliptic: {elliptic}\n"));
        }
    }
    Ok(out)
}
