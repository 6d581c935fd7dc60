//! Acceptance suite. Each test exercises one criterion end to end and
//! prints a single `criterion N ...: pass|FAIL` line (run with
//! `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Checks are written against public API only and recompute expected
//! values through independent routes (plain Frobenius expansions, brute
//! double-coset enumeration) rather than trusting the engine under test.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use steindual::chartheory::{
    character_table, cyclic_group, CentralExtension, CharacterTable, ClassFunction,
    FiniteGroupTable, Subgroup,
};
use steindual::cli::builtin::{builtin_scenario, BUILTIN_NAMES};
use steindual::cyclotomic::Cyclotomic;
use steindual::duality::{
    duality_operator, euler_check, is_elliptic_character, isotypic_context, steinberg,
};
use steindual::rgroup::FamilyPolicy;
use steindual::rootspace::{
    coset_representatives, levi_from_subset, weyl_levi_subgroup, Family, RootSystem,
    WeylGroup,
};

struct Criterion {
    n: usize,
    what: &'static str,
    failures: Vec<String>,
    started: Instant,
}

impl Criterion {
    fn new(n: usize, what: &'static str) -> Self {
        Criterion { n, what, failures: Vec::new(), started: Instant::now() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn finish(self) {
        self.finish_within(Duration::from_secs(60));
    }

    fn finish_within(mut self, budget: Duration) {
        let elapsed = self.started.elapsed();
        if elapsed > budget {
            self.failures.push(format!("runtime {elapsed:?} exceeds budget {budget:?}"));
        }
        let status = if self.failures.is_empty() { "pass" } else { "FAIL" };
        println!(
            "criterion {} ({}): {} [{:.2?}]",
            self.n, self.what, status, elapsed
        );
        assert!(
            self.failures.is_empty(),
            "criterion {} failed:\n{}",
            self.n,
            self.failures.join("\n")
        );
    }
}

fn klein_table() -> Arc<FiniteGroupTable> {
    FiniteGroupTable::from_mult_table(
        vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
        Some(vec!["e".into(), "a".into(), "b".into(), "ab".into()]),
    )
    .unwrap()
}

fn s3_table() -> Arc<FiniteGroupTable> {
    // permutations of {0,1,2}; composition (p*q)(x) = p(q(x))
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let index = |p: &[usize; 3]| perms.iter().position(|x| x == p).unwrap();
    let mult: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index(&[p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    let names = vec!["e", "(01)", "(02)", "(12)", "(012)", "(021)"];
    FiniteGroupTable::from_mult_table(
        mult,
        Some(names.into_iter().map(String::from).collect()),
    )
    .unwrap()
}

fn q8_table() -> Arc<FiniteGroupTable> {
    let mult = vec![
        vec![0, 1, 2, 3, 4, 5, 6, 7],
        vec![1, 0, 3, 2, 5, 4, 7, 6],
        vec![2, 3, 1, 0, 6, 7, 5, 4],
        vec![3, 2, 0, 1, 7, 6, 4, 5],
        vec![4, 5, 7, 6, 1, 0, 2, 3],
        vec![5, 4, 6, 7, 0, 1, 3, 2],
        vec![6, 7, 4, 5, 3, 2, 1, 0],
        vec![7, 6, 5, 4, 2, 3, 0, 1],
    ];
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    FiniteGroupTable::from_mult_table(
        mult,
        Some(names.iter().map(|s| s.to_string()).collect()),
    )
    .unwrap()
}

fn weyl_table(family: Family, rank: usize) -> (Arc<RootSystem>, WeylGroup, Arc<FiniteGroupTable>) {
    let rs = RootSystem::classical(family, rank).unwrap();
    let w = WeylGroup::generate(&rs).unwrap();
    let t = w.to_group_table().unwrap();
    (rs, w, t)
}

fn chars(table: &CharacterTable) -> Vec<ClassFunction> {
    (0..table.num_chars())
        .map(|i| ClassFunction::new(table.group.clone(), table.values[i].clone()))
        .collect()
}

type CMat = Vec<Vec<Cyclotomic>>;

fn cmat_mul(a: &CMat, b: &CMat) -> CMat {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut s = Cyclotomic::zero();
                    for t in 0..k {
                        s = s.add(&a[i][t].mul(&b[t][j]));
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn cmat_identity(n: usize) -> CMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() })
                .collect()
        })
        .collect()
}

/// Matrix of a linear map between isotypic spans, column j = coefficients
/// of image(theta_j) on the target isotypic basis; checks the image stays
/// in the span.
fn span_matrix(
    images: &[ClassFunction],
    target: &CharacterTable,
    target_iso: &[usize],
    ctx: &mut Criterion,
    what: &str,
) -> CMat {
    let cols: Vec<Vec<Cyclotomic>> = images
        .iter()
        .map(|f| {
            let coeffs = target.decompose(f.values());
            for (i, c) in coeffs.iter().enumerate() {
                if !target_iso.contains(&i) {
                    ctx.check(c.is_zero(), || {
                        format!("{what}: image leaves the isotypic span at #{i}")
                    });
                }
            }
            target_iso.iter().map(|&i| coeffs[i].clone()).collect()
        })
        .collect();
    // transpose columns to rows
    (0..target_iso.len())
        .map(|i| cols.iter().map(|col| col[i].clone()).collect())
        .collect()
}

fn iso_basis(table: &CharacterTable, iso: &[usize]) -> Vec<ClassFunction> {
    iso.iter()
        .map(|&i| ClassFunction::new(table.group.clone(), table.values[i].clone()))
        .collect()
}

#[test]
fn criterion_1_character_theory_core() {
    let mut c = Criterion::new(1, "character-theory core");

    let (_, wa2, wa2_t) = weyl_table(Family::A, 2);
    let (_, wb2, wb2_t) = weyl_table(Family::B, 2);
    let (_, wa3, wa3_t) = weyl_table(Family::A, 3);
    let a2_rs = wa2.root_system().clone();
    let b2_rs = wb2.root_system().clone();
    let a3_rs = wa3.root_system().clone();

    // (group, list of subgroup element sets to test reciprocity over)
    let cases: Vec<(&str, Arc<FiniteGroupTable>, Vec<Vec<usize>>)> = vec![
        ("Z/2", cyclic_group(2), vec![vec![0]]),
        ("Z/4", cyclic_group(4), vec![vec![0, 2]]),
        ("Klein", klein_table(), vec![vec![0, 1], vec![0, 3]]),
        ("S3", s3_table(), vec![vec![0, 4, 5], vec![0, 1]]),
        ("Q8", q8_table(), vec![vec![0, 1], vec![0, 1, 2, 3]]),
        (
            "W(A2)",
            wa2_t.clone(),
            vec![weyl_levi_subgroup(&wa2, &levi_from_subset(&a2_rs, &[0]).unwrap())],
        ),
        (
            "W(B2)",
            wb2_t.clone(),
            vec![
                weyl_levi_subgroup(&wb2, &levi_from_subset(&b2_rs, &[0]).unwrap()),
                weyl_levi_subgroup(&wb2, &levi_from_subset(&b2_rs, &[1]).unwrap()),
            ],
        ),
        (
            "W(A3)",
            wa3_t.clone(),
            vec![
                weyl_levi_subgroup(&wa3, &levi_from_subset(&a3_rs, &[0]).unwrap()),
                weyl_levi_subgroup(&wa3, &levi_from_subset(&a3_rs, &[0, 1]).unwrap()),
            ],
        ),
    ];

    for (name, table, subgroup_sets) in &cases {
        let ct = character_table(table).unwrap();
        let irr = chars(&ct);

        // row orthogonality
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                let expect =
                    if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                c.check(a.inner(b).unwrap() == expect, || {
                    format!("{name}: <chi_{i}, chi_{j}> != delta")
                });
            }
        }

        // column orthogonality: sum_i chi_i(x) conj(chi_i(y)) = delta * |C(x)|
        let ncl = table.num_classes();
        for x in 0..ncl {
            for y in 0..ncl {
                let mut s = Cyclotomic::zero();
                for row in &ct.values {
                    s = s.add(&row[x].mul(&row[y].conjugate()));
                }
                let expect = if x == y {
                    Cyclotomic::from_int(
                        (table.order() / table.class_members(x).len()) as i64,
                    )
                } else {
                    Cyclotomic::zero()
                };
                c.check(s == expect, || {
                    format!("{name}: column orthogonality fails at classes {x},{y}")
                });
            }
        }

        // sum of squared degrees
        let degsum: usize = ct.degrees.iter().map(|d| d * d).sum();
        c.check(degsum == table.order(), || {
            format!("{name}: sum deg^2 = {degsum} != {}", table.order())
        });

        // Frobenius reciprocity for all irreducible pairs over each inclusion
        for els in subgroup_sets {
            let sub = Subgroup::from_elements(table.clone(), els.clone()).unwrap();
            let sct = character_table(sub.group()).unwrap();
            let sirr = chars(&sct);
            for (i, chi) in irr.iter().enumerate() {
                let res = chi.restrict(&sub).unwrap();
                for (j, rho) in sirr.iter().enumerate() {
                    let ind = rho.induce(&sub).unwrap();
                    let lhs = res.inner(rho).unwrap();
                    let rhs = chi.inner(&ind).unwrap();
                    c.check(lhs == rhs, || {
                        format!(
                            "{name}: reciprocity fails for chi_{i}, rho_{j} over H of order {}",
                            sub.order()
                        )
                    });
                }
            }
        }
    }

    c.finish_within(Duration::from_secs(10));
}

#[test]
fn criterion_2_root_space_core() {
    let mut c = Criterion::new(2, "root-space core");

    let fact = |n: usize| -> usize { (1..=n).product() };
    let mut expected: Vec<(Family, usize, usize)> = Vec::new();
    for r in 1..=4 {
        expected.push((Family::A, r, fact(r + 1)));
    }
    for r in 2..=4 {
        expected.push((Family::B, r, (1 << r) * fact(r)));
        expected.push((Family::C, r, (1 << r) * fact(r)));
    }
    for r in 3..=4 {
        expected.push((Family::D, r, (1 << (r - 1)) * fact(r)));
    }
    for (fam, rank, order) in expected {
        let rs = RootSystem::classical(fam, rank).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        c.check(w.order() == order, || {
            format!("|W({fam:?}{rank})| = {} != {order}", w.order())
        });
    }

    // double-coset partition: W = disjoint union of W_L w W_M over the
    // minimal representatives, for every standard Levi pair
    for (fam, rank) in [(Family::A, 2), (Family::B, 2), (Family::A, 3)] {
        let rs = RootSystem::classical(fam, rank).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        let subsets: Vec<Vec<usize>> = (0..(1 << rank))
            .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        for sm in &subsets {
            for sl in &subsets {
                let m = levi_from_subset(&rs, sm).unwrap();
                let l = levi_from_subset(&rs, sl).unwrap();
                let reps = coset_representatives(&w, &m, &l).unwrap();
                let wm = weyl_levi_subgroup(&w, &m);
                let wl = weyl_levi_subgroup(&w, &l);
                let mut owner: Vec<Option<usize>> = vec![None; w.order()];
                for (ri, &rep) in reps.iter().enumerate() {
                    for &a in &wl {
                        for &b in &wm {
                            let g = w.compose(w.compose(a, rep), b);
                            match owner[g] {
                                None => owner[g] = Some(ri),
                                Some(prev) => c.check(prev == ri, || {
                                    format!(
                                        "{fam:?}{rank} M={sm:?} L={sl:?}: cosets of reps {prev} and {ri} overlap"
                                    )
                                }),
                            }
                        }
                    }
                }
                c.check(owner.iter().all(|o| o.is_some()), || {
                    format!("{fam:?}{rank} M={sm:?} L={sl:?}: cosets do not cover W")
                });
            }
        }
    }

    c.finish_within(Duration::from_secs(10));
}

#[test]
fn criterion_3_triplet_transform() {
    let mut c = Criterion::new(3, "triplet expand/invert");

    for name in BUILTIN_NAMES {
        let s = builtin_scenario(name, None).unwrap();
        let ext = s.extension();
        let table = character_table(ext.total()).unwrap();
        let iso = ext.chi_isotypic(&table);
        for p in 0..iso.len() {
            let inv = ext.triplet_invert(&table, &iso, p);
            let mut acc = vec![Cyclotomic::zero(); iso.len()];
            for g in 0..ext.total().order() {
                let exp = ext.triplet_expand(&table, &iso, g);
                for (a, e) in acc.iter_mut().zip(&exp) {
                    *a = a.add(&inv[g].mul(e));
                }
            }
            for (k, a) in acc.iter().enumerate() {
                let expect =
                    if k == p { Cyclotomic::one() } else { Cyclotomic::zero() };
                c.check(*a == expect, || {
                    format!("{name}: expand(invert(rho_{p}))[{k}] = {a} != {expect}")
                });
            }
        }
    }

    // essential Z-orbit count vs isotypic size on the quaternion extension
    let s = builtin_scenario("q8-klein", None).unwrap();
    let table = character_table(s.extension().total()).unwrap();
    let iso = s.extension().chi_isotypic(&table);
    c.check(iso.len() == 1, || format!("q8 chi(-1)=-1: |Pi| = {} != 1", iso.len()));
    let orbits = s.extension().essential_orbit_count();
    c.check(orbits == 1, || format!("q8 chi(-1)=-1: {orbits} essential orbits != 1"));

    let flipped = CentralExtension::new(
        q8_table(),
        vec![0, 1],
        vec![Cyclotomic::one(), Cyclotomic::one()],
    )
    .unwrap();
    let iso2 = flipped.chi_isotypic(&table);
    c.check(iso2.len() == 4, || format!("q8 chi(-1)=+1: |Pi| = {} != 4", iso2.len()));
    let orbits2 = flipped.essential_orbit_count();
    c.check(orbits2 == 4, || format!("q8 chi(-1)=+1: {orbits2} essential orbits != 4"));

    c.finish();
}

#[test]
fn criterion_4_z2_corank1_goldens() {
    let mut c = Criterion::new(4, "z2-corank1 goldens vs Frobenius oracle");

    let s = builtin_scenario("z2-corank1", None).unwrap();
    let ctx = isotypic_context(&s).unwrap();
    let basis = iso_basis(&ctx.table, &ctx.iso);
    c.check(ctx.iso.len() == 2, || format!("|Pi| = {} != 2", ctx.iso.len()));

    // locate triv and sgn within the isotypic basis
    let triv = basis
        .iter()
        .position(|f| f.values().iter().all(|v| *v == Cyclotomic::one()))
        .expect("trivial character present");
    let sgn = 1 - triv;

    // independent oracle: coefficient of theta_i in D(theta_j) is
    //   sum_L (-1)^{dim a_L} <Res theta_j, Res theta_i>_L
    // by Frobenius reciprocity and orthonormality, using only restriction
    // and inner products
    let fam = s.active_levi_family().unwrap();
    let n = basis.len();
    let mut oracle = vec![vec![Cyclotomic::zero(); n]; n];
    for l in &fam {
        let (pre, _) = s.subgroup_for_levi(l).unwrap();
        let sign = Cyclotomic::from_int(if l.dim_a() % 2 == 0 { 1 } else { -1 });
        for j in 0..n {
            let rj = basis[j].restrict(&pre).unwrap();
            for i in 0..n {
                let ri = basis[i].restrict(&pre).unwrap();
                let term = rj.inner(&ri).unwrap().mul(&sign);
                oracle[i][j] = oracle[i][j].add(&term);
            }
        }
    }

    let op = duality_operator(&s).unwrap();
    c.check(op.entries == oracle, || {
        "operator disagrees with the Frobenius-expansion oracle".into()
    });

    // golden matrix [[0,-1],[-1,0]] on the (triv, sgn) ordering
    let minus = Cyclotomic::from_int(-1);
    let zero = Cyclotomic::zero();
    c.check(
        op.entries[triv][triv] == zero
            && op.entries[sgn][sgn] == zero
            && op.entries[triv][sgn] == minus
            && op.entries[sgn][triv] == minus,
        || format!("D is not the golden matrix: {:?}", op.entries),
    );

    let d2 = cmat_mul(&op.entries, &op.entries);
    c.check(d2 == cmat_identity(2), || "D^2 != I".into());

    // D(triv) = xi = -sgn
    let d_triv = basis[triv]
        .scale_cyc(&op.entries[triv][triv])
        .add(&basis[sgn].scale_cyc(&op.entries[sgn][triv]));
    let xi = s.sign_map().unwrap();
    let minus_sgn = basis[sgn].neg();
    c.check(d_triv == xi, || "D(triv) != xi".into());
    c.check(xi == minus_sgn, || "xi != -sgn".into());

    // xi matches exactly one irreducible up to sign: witness sgn, sign -1
    let coeffs = ctx.table.decompose(xi.values());
    let nonzero: Vec<usize> =
        (0..coeffs.len()).filter(|&i| !coeffs[i].is_zero()).collect();
    c.check(nonzero == vec![ctx.iso[sgn]], || {
        format!("xi decomposition supported on {nonzero:?}, expected sgn only")
    });
    c.check(coeffs[ctx.iso[sgn]] == minus, || {
        format!("xi = {} * sgn, expected -1", coeffs[ctx.iso[sgn]])
    });

    // St = D(triv), elliptic
    let st = steinberg(&s).unwrap();
    c.check(st.function == d_triv, || "St != D(triv)".into());
    c.check(is_elliptic_character(&s, &st.function), || "St not elliptic".into());

    // exactly two irreducibles, both elliptic
    c.check(
        basis.iter().all(|f| is_elliptic_character(&s, f)),
        || "some isotypic irreducible is not elliptic".into(),
    );

    // euler_check(M) = 0
    let m = s.lattice()[0].clone();
    let e = euler_check(&s, &m).unwrap();
    c.check(e == 0, || format!("euler(M) = {e} != 0"));

    c.finish();
}

#[test]
fn criterion_5_klein4_goldens() {
    let mut c = Criterion::new(5, "klein4 goldens");

    let s = builtin_scenario("klein4", None).unwrap();

    let strata = s.levi_support_partition().unwrap();
    c.check(strata.len() == 4, || format!("{} strata != 4", strata.len()));
    c.check(
        strata.iter().all(|st| st.elements.len() == 1),
        || "some stratum is not a singleton".into(),
    );

    let xi = s.sign_map().unwrap();
    let expect: Vec<Cyclotomic> =
        [1, -1, -1, 1].iter().map(|&v| Cyclotomic::from_int(v)).collect();
    c.check(xi.values() == expect.as_slice(), || {
        format!("xi = {:?}, expected (1,-1,-1,1)", xi.values())
    });

    // xi is plus-or-minus a linear character
    let table = character_table(s.extension().total()).unwrap();
    let neg: Vec<Cyclotomic> = expect.iter().map(|v| v.neg()).collect();
    let hit = (0..table.num_chars()).any(|i| {
        table.degrees[i] == 1
            && (table.values[i] == expect || table.values[i] == neg)
    });
    c.check(hit, || "xi is not +/- a linear character".into());

    // involution under the support family
    c.check(s.policy() == FamilyPolicy::Support, || "policy is not support".into());
    let op = duality_operator(&s).unwrap();
    c.check(op.basis.len() == 4, || format!("|Pi| = {} != 4", op.basis.len()));
    c.check(
        cmat_mul(&op.entries, &op.entries) == cmat_identity(4),
        || "D^2 != I".into(),
    );

    // restriction compatibility of St to both intermediate Levis
    let st = steinberg(&s).unwrap();
    let mids: Vec<_> = s
        .active_levi_family()
        .unwrap()
        .into_iter()
        .filter(|l| l.dim_a() == 1)
        .collect();
    c.check(mids.len() == 2, || format!("{} intermediate Levis != 2", mids.len()));
    for l in &mids {
        let sub = s.sub_scenario(l).unwrap();
        let st_l = steinberg(&sub).unwrap();
        let (pre, _) = s.subgroup_for_levi(l).unwrap();
        let res = st.function.restrict(&pre).unwrap();
        c.check(res == st_l.function, || {
            format!("Res_{} St != St^L", s.levi_label(l))
        });
    }

    c.finish();
}

#[test]
fn criterion_6_negative_control() {
    let mut c = Criterion::new(6, "negative control: a2-full euler");

    let s = builtin_scenario("a2-full", Some(FamilyPolicy::All)).unwrap();
    let m0 = s.lattice()[0].clone();
    let e = euler_check(&s, &m0).unwrap();
    c.check(e == -1, || format!("euler(M_0) = {e} != -1 under family = all"));

    // the scan command marks the euler failure and exits nonzero
    let out = Command::new(env!("CARGO_BIN_EXE_steindual"))
        .args(["scan", "--family", "all", "--format", "machine"])
        .output()
        .expect("scan runs");
    c.check(out.status.code() == Some(1), || {
        format!("scan --family all exited {:?}, expected 1", out.status.code())
    });
    let text = String::from_utf8(out.stdout).unwrap();
    let scen_line = text
        .lines()
        .find(|l| l.starts_with("scenarios: "))
        .expect("scenarios line")
        .trim_start_matches("scenarios: ")
        .to_string();
    let scenarios: Vec<&str> = scen_line.split('|').collect();
    let col = scenarios.iter().position(|s| *s == "a2-full").expect("a2-full column");
    let euler_line = text
        .lines()
        .find(|l| l.starts_with("claim: euler-vanishing|"))
        .expect("euler claim line");
    let cells: Vec<&str> = euler_line.trim_start_matches("claim: euler-vanishing|").split('|').collect();
    c.check(cells.get(col) == Some(&"fail"), || {
        format!("scan euler cell for a2-full is {:?}, expected fail", cells.get(col))
    });

    c.finish();
}

#[test]
fn criterion_7_commutation_suite() {
    let mut c = Criterion::new(7, "commutation suite on split scenarios");

    let split: Vec<&str> = BUILTIN_NAMES
        .iter()
        .copied()
        .filter(|n| {
            builtin_scenario(n, None).unwrap().extension().is_split()
        })
        .collect();
    c.check(split.len() == 6, || format!("{} split builtins != 6", split.len()));

    for name in &split {
        let s = builtin_scenario(name, None).unwrap();
        let ctx = isotypic_context(&s).unwrap();
        let basis = iso_basis(&ctx.table, &ctx.iso);
        let d = duality_operator(&s).unwrap().entries;

        // contragredient matrix on the isotypic basis
        let conj_images: Vec<ClassFunction> =
            basis.iter().map(|f| f.contragredient()).collect();
        let e = span_matrix(&conj_images, &ctx.table, &ctx.iso, &mut c, name);
        c.check(
            cmat_mul(&d, &e) == cmat_mul(&e, &d),
            || format!("{name}: D E != E D"),
        );

        for l in s.active_levi_family().unwrap() {
            let label = s.levi_label(&l);
            let sub = s.sub_scenario(&l).unwrap();
            let sub_ctx = isotypic_context(&sub).unwrap();
            let sub_basis = iso_basis(&sub_ctx.table, &sub_ctx.iso);
            let dl = duality_operator(&sub).unwrap().entries;
            let (pre, _) = s.subgroup_for_levi(&l).unwrap();

            // restriction matrix: parent isotypic span -> sub isotypic span
            let res_images: Vec<ClassFunction> = basis
                .iter()
                .map(|f| {
                    let r = f.restrict(&pre).unwrap();
                    ClassFunction::new(sub_ctx.table.group.clone(), r.values().to_vec())
                })
                .collect();
            let rmat = span_matrix(
                &res_images,
                &sub_ctx.table,
                &sub_ctx.iso,
                &mut c,
                &format!("{name}/{label} Res"),
            );

            // induction matrix: sub isotypic span -> parent isotypic span
            let ind_images: Vec<ClassFunction> = sub_basis
                .iter()
                .map(|f| {
                    let on_pre =
                        ClassFunction::new(pre.group().clone(), f.values().to_vec());
                    on_pre.induce(&pre).unwrap()
                })
                .collect();
            let imat = span_matrix(
                &ind_images,
                &ctx.table,
                &ctx.iso,
                &mut c,
                &format!("{name}/{label} Ind"),
            );

            c.check(
                cmat_mul(&rmat, &d) == cmat_mul(&dl, &rmat),
                || format!("{name}/{label}: Res D != D^L Res"),
            );
            c.check(
                cmat_mul(&imat, &dl) == cmat_mul(&d, &imat),
                || format!("{name}/{label}: Ind D^L != D Ind"),
            );
        }
    }

    c.finish();
}
