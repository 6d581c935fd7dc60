//! Exact irreducible character tables.  The class algebra is split over a
//! prime field GF(p) with p = 1 mod exp(G) (class-matrix common
//! eigenvectors), degrees and modular values are recovered there, and the
//! genuine cyclotomic values are lifted via root-of-unity multiplicities.
//! Everything downstream of the modular pass is verified exactly.

use super::group::FiniteGroupTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use std::sync::Arc;

mod fp {
    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b, p);
            }
            b = mul(b, b, p);
            e >>= 1;
        }
        acc
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn neg(a: u64, p: u64) -> u64 {
        (p - a % p) % p
    }

    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }
}

/// Smallest prime p with p = 1 mod m and p^2 > 4n (Dixon's bound).
fn dixon_prime(m: usize, n: usize) -> u64 {
    let m = m as u64;
    let n = n as u64;
    let mut p = m + 1;
    loop {
        if p * p > 4 * n && fp::is_prime(p) {
            return p;
        }
        p += m;
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut t = p - 1;
    let mut d = 2;
    while d * d <= t {
        if t % d == 0 {
            factors.push(d);
            while t % d == 0 {
                t /= d;
            }
        }
        d += 1;
    }
    if t > 1 {
        factors.push(t);
    }
    'outer: for g in 2..p {
        for &f in &factors {
            if fp::pow(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    1 // p = 2 or 3 degenerate
}

/// Coordinates of `v` in a reduced-echelon basis, or None if outside its span.
fn coords_mod_p(basis: &[Vec<u64>], pivots: &[usize], v: &[u64], p: u64) -> Option<Vec<u64>> {
    let coords: Vec<u64> = pivots.iter().map(|&c| v[c]).collect();
    let mut check = v.to_vec();
    for (x, b) in coords.iter().zip(basis) {
        for (c, bv) in check.iter_mut().zip(b) {
            *c = (*c + fp::mul(fp::neg(*x, p), *bv, p)) % p;
        }
    }
    if check.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

/// Reduced echelon form mod p; returns (rows, pivot columns).
fn rref_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] % p != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = fp::inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = fp::mul(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] % p != 0 {
                let f = rows[i][c];
                for c2 in 0..ncols {
                    let sub = fp::mul(f, rows[r][c2], p);
                    rows[i][c2] = (rows[i][c2] + fp::neg(sub, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(pivots.len());
    (rows, pivots)
}

fn kernel_mod_p(mat: &[Vec<u64>], dim: usize, p: u64) -> Vec<Vec<u64>> {
    let (rr, pivots) = rref_mod_p(mat.to_vec(), p);
    let mut basis = Vec::new();
    for fc in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; dim];
        v[fc] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = fp::neg(rr[ri][fc], p);
        }
        basis.push(v);
    }
    basis
}

/// Monic minimal polynomial of the square matrix `a` acting on GF(p)^dim,
/// ascending coefficients.
fn minimal_polynomial(a: &[Vec<u64>], dim: usize, p: u64) -> Vec<u64> {
    let apply = |v: &[u64]| -> Vec<u64> {
        (0..dim)
            .map(|i| {
                let mut s = 0u64;
                for j in 0..dim {
                    s = (s + fp::mul(a[i][j], v[j], p)) % p;
                }
                s
            })
            .collect()
    };
    let mut acc = vec![1u64]; // polynomial 1
    for s in 0..dim {
        if acc.len() - 1 == dim {
            break;
        }
        let mut e = vec![0u64; dim];
        e[s] = 1;
        // Krylov chain from e_s with coefficient tracking.
        let mut chain: Vec<Vec<u64>> = vec![e.clone()];
        let mut v = e;
        loop {
            v = apply(&v);
            // Is v in the span of the chain?
            let (rr, pivots) = rref_mod_p(chain.clone(), p);
            if let Some(mut coeffs) = solve_combination(&chain, &rr, &pivots, &v, p) {
                // x^t = sum coeffs_i x^i  =>  annihilator x^t - sum coeffs_i x^i
                let t = chain.len();
                let mut poly = vec![0u64; t + 1];
                poly[t] = 1;
                for (i, c) in coeffs.drain(..).enumerate() {
                    poly[i] = fp::neg(c, p);
                }
                acc = poly_lcm(&acc, &poly, p);
                break;
            }
            chain.push(v.clone());
        }
    }
    acc
}

/// Express v as a combination of the original chain vectors (not the rref
/// rows), or None if outside the span.
fn solve_combination(
    chain: &[Vec<u64>],
    rr: &[Vec<u64>],
    pivots: &[usize],
    v: &[u64],
    p: u64,
) -> Option<Vec<u64>> {
    coords_mod_p(rr, pivots, v, p)?;
    // Solve chain^T x = v by Gaussian elimination on the augmented system.
    let dim = v.len();
    let k = chain.len();
    let mut aug: Vec<Vec<u64>> = (0..dim)
        .map(|i| {
            let mut row: Vec<u64> = chain.iter().map(|c| c[i]).collect();
            row.push(v[i]);
            row
        })
        .collect();
    let (rr2, piv2) = rref_mod_p(std::mem::take(&mut aug), p);
    if piv2.contains(&k) {
        return None;
    }
    let mut x = vec![0u64; k];
    for (ri, &pc) in piv2.iter().enumerate() {
        x[pc] = rr2[ri][k];
    }
    Some(x)
}

fn poly_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dn = den.len() - 1;
    let lead_inv = fp::inv(den[dn], p);
    let mut rem = num.to_vec();
    let mut quot = vec![0u64; num.len().saturating_sub(dn)];
    while rem.len() > dn && rem.iter().any(|&x| x != 0) {
        let rd = rem.len() - 1;
        if rem[rd] == 0 {
            rem.pop();
            continue;
        }
        let c = fp::mul(rem[rd], lead_inv, p);
        quot[rd - dn] = c;
        for i in 0..=dn {
            let sub = fp::mul(c, den[i], p);
            rem[rd - dn + i] = (rem[rd - dn + i] + fp::neg(sub, p)) % p;
        }
        rem.pop();
    }
    while rem.len() > 1 && *rem.last().unwrap() == 0 {
        rem.pop();
    }
    (quot, rem)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while y.iter().any(|&c| c != 0) {
        let (_, r) = poly_divmod(&x, &y, p);
        x = y;
        y = r;
    }
    // normalize monic
    let lead = *x.last().unwrap();
    if lead != 0 && lead != 1 {
        let inv = fp::inv(lead, p);
        for c in x.iter_mut() {
            *c = fp::mul(*c, inv, p);
        }
    }
    x
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + fp::mul(x, y, p)) % p;
        }
    }
    out
}

fn poly_lcm(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.len() == 1 {
        return b.to_vec();
    }
    if b.len() == 1 {
        return a.to_vec();
    }
    let g = poly_gcd(a, b, p);
    let (quo, rem) = poly_divmod(a, &g, p);
    assert!(rem.iter().all(|&x| x == 0));
    poly_mul(&quo, b, p)
}

fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = (fp::mul(acc, x, p) + c) % p;
    }
    acc
}

/// The full list of irreducible characters of `group`, exact values, in the
/// canonical order (degree ascending, then the display order of the value
/// vectors).
pub struct CharacterTable {
    pub group: Arc<FiniteGroupTable>,
    /// chars[i][k] = value of the i-th irreducible on class k.
    pub values: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<usize>,
}

/// Display ordering of cyclotomic values used for the canonical character
/// order: smaller conductor first, then coefficient vectors compared with
/// larger rationals first (so 1 sorts before -1 and the trivial character
/// leads its degree block).
pub fn display_cmp(a: &Cyclotomic, b: &Cyclotomic) -> std::cmp::Ordering {
    let m = num::integer::lcm(a.conductor(), b.conductor());
    a.conductor().cmp(&b.conductor()).then_with(|| {
        let av = a.lift_coeffs(m);
        let bv = b.lift_coeffs(m);
        for (x, y) in av.iter().zip(&bv) {
            let c = y.cmp(x);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    })
}

pub fn character_table(group: &Arc<FiniteGroupTable>) -> Result<CharacterTable> {
    let n = group.order();
    if n > super::group::GROUP_ORDER_CAP {
        return Err(Error::ResourceCap(format!(
            "character table for order {} exceeds cap {}",
            n,
            super::group::GROUP_ORDER_CAP
        )));
    }
    let r = group.num_classes();
    let m = group.exponent();
    let p = dixon_prime(m, n);
    let g0 = primitive_root(p);
    let z = fp::pow(g0, (p - 1) / m as u64, p);

    // Class matrices: (M_i)[j][k] = #{x in C_i : x^{-1} g_k in C_j}.
    let mut class_mats: Vec<Vec<Vec<u64>>> = vec![vec![vec![0; r]; r]; r];
    for i in 0..r {
        for k in 0..r {
            let gk = group.class_rep(k);
            for &x in group.class_members(i) {
                let y = group.mul(group.inv(x), gk);
                class_mats[i][group.class_of(y)][k] += 1;
            }
        }
    }
    let class_mats: Vec<Vec<Vec<u64>>> = class_mats
        .into_iter()
        .map(|mat| mat.into_iter().map(|row| row.into_iter().map(|x| x % p).collect()).collect())
        .collect();

    // Split GF(p)^r into common eigenlines of all class matrices.
    let full: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![rref_mod_p(full, p)];
    for mat in &class_mats {
        let mut next = Vec::new();
        for (basis, pivots) in spaces.drain(..) {
            let dim = basis.len();
            if dim == 1 {
                next.push((basis, pivots));
                continue;
            }
            // Action of mat in basis coordinates.
            let mut action = vec![vec![0u64; dim]; dim];
            for (t, b) in basis.iter().enumerate() {
                let img: Vec<u64> = (0..r)
                    .map(|i| {
                        let mut s = 0u64;
                        for j in 0..r {
                            s = (s + fp::mul(mat[i][j], b[j], p)) % p;
                        }
                        s
                    })
                    .collect();
                let coords = coords_mod_p(&basis, &pivots, &img, p)
                    .expect("class matrix must preserve the invariant subspace");
                for (s, c) in coords.into_iter().enumerate() {
                    action[s][t] = c;
                }
            }
            let mp = minimal_polynomial(&action, dim, p);
            let roots: Vec<u64> = (0..p).filter(|&lam| poly_eval(&mp, lam, p) == 0).collect();
            if roots.len() <= 1 {
                next.push((basis, pivots));
                continue;
            }
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|j| {
                                if i == j {
                                    (action[i][j] + fp::neg(lam, p)) % p
                                } else {
                                    action[i][j]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel_mod_p(&shifted, dim, p);
                // Lift coordinate vectors back to GF(p)^r.
                let lifted: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|cv| {
                        let mut v = vec![0u64; r];
                        for (c, b) in cv.iter().zip(&basis) {
                            for (vi, bi) in v.iter_mut().zip(b) {
                                *vi = (*vi + fp::mul(*c, *bi, p)) % p;
                            }
                        }
                        v
                    })
                    .collect();
                if !lifted.is_empty() {
                    next.push(rref_mod_p(lifted, p));
                }
            }
        }
        spaces = next;
    }
    assert_eq!(spaces.len(), r, "class algebra did not split completely");

    let c_id = group.class_of(group.id());
    let inv_class: Vec<usize> = (0..r).map(|c| group.inverse_class(c)).collect();
    let class_sizes: Vec<u64> = (0..r).map(|c| group.class_size(c) as u64).collect();

    let mut table: Vec<(usize, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    for (basis, _) in &spaces {
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_ne!(v[c_id], 0, "eigenvector vanishes at the identity class");
        let norm = fp::inv(v[c_id], p);
        let omega: Vec<u64> = v.iter().map(|&x| fp::mul(x, norm, p)).collect();
        // chi(1)^2 = |G| / sum_j omega_j omega_{j'} / h_j.
        let mut s = 0u64;
        for j in 0..r {
            let t = fp::mul(omega[j], omega[inv_class[j]], p);
            s = (s + fp::mul(t, fp::inv(class_sizes[j], p), p)) % p;
        }
        let d2 = fp::mul(n as u64 % p, fp::inv(s, p), p);
        let mut degree = None;
        let mut d = 1u64;
        while d * d <= n as u64 {
            if fp::mul(d, d, p) == d2 {
                assert!(degree.is_none(), "ambiguous degree lift");
                degree = Some(d);
            }
            d += 1;
        }
        let degree = degree.expect("no integer degree matches the modular value") as usize;
        // Modular character values x_k = d omega_k / h_k.
        let x: Vec<u64> = (0..r)
            .map(|k| fp::mul(degree as u64, fp::mul(omega[k], fp::inv(class_sizes[k], p), p), p))
            .collect();
        // Lift each class value as a multiset of e-th roots of unity.
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let gk = group.class_rep(k);
            let e = group.order_of(gk);
            let ze = fp::pow(z, (m / e) as u64, p);
            let ze_inv = fp::inv(ze, p);
            let e_inv = fp::inv(e as u64, p);
            let mut mults = Vec::with_capacity(e);
            let mut total = 0usize;
            for t in 0..e {
                let mut s = 0u64;
                for j in 0..e {
                    let cls = group.class_of(group.power(gk, j as i64));
                    s = (s + fp::mul(x[cls], fp::pow(ze_inv, (j * t) as u64, p), p)) % p;
                }
                let mu = fp::mul(e_inv, s, p);
                assert!(
                    mu <= degree as u64,
                    "root-of-unity multiplicity exceeds the degree"
                );
                total += mu as usize;
                mults.push(Q::from_integer(num::BigInt::from(mu)));
            }
            assert_eq!(total, degree, "multiplicities do not sum to the degree");
            values.push(Cyclotomic::from_coeffs(e, mults));
        }
        table.push((degree, values));
    }

    table.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| {
            for (x, y) in a.1.iter().zip(&b.1) {
                let c = display_cmp(x, y);
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });

    let degrees: Vec<usize> = table.iter().map(|(d, _)| *d).collect();
    let values: Vec<Vec<Cyclotomic>> = table.into_iter().map(|(_, v)| v).collect();

    // Exact sanity: degree sum and, at desk scale, full row orthogonality.
    assert_eq!(degrees.iter().map(|d| d * d).sum::<usize>(), n);
    for (d, vals) in degrees.iter().zip(&values) {
        assert_eq!(vals[c_id], Cyclotomic::from_int(*d as i64));
    }
    if n <= 100 {
        for a in 0..r {
            for b in a..r {
                let mut s = Cyclotomic::zero();
                for k in 0..r {
                    let term = values[a][k].mul(&values[b][k].conjugate());
                    s = s.add(&term.scale(&q(class_sizes[k] as i64)));
                }
                let expect = if a == b { Cyclotomic::from_int(n as i64) } else { Cyclotomic::zero() };
                assert_eq!(s, expect, "row orthogonality failed ({},{})", a, b);
            }
        }
    }

    Ok(CharacterTable { group: group.clone(), values, degrees })
}

impl CharacterTable {
    pub fn num_chars(&self) -> usize {
        self.values.len()
    }

    /// Multiplicities of each irreducible in the class function given by
    /// per-class values; exact, with a zero-residual guarantee.
    pub fn decompose(&self, values: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let g = &self.group;
        let n = g.order() as i64;
        let mults: Vec<Cyclotomic> = self
            .values
            .iter()
            .map(|chi| {
                let mut s = Cyclotomic::zero();
                for k in 0..g.num_classes() {
                    let term = values[k].mul(&chi[k].conjugate());
                    s = s.add(&term.scale(&q(g.class_size(k) as i64)));
                }
                s.scale(&Q::new(1.into(), n.into()))
            })
            .collect();
        // The irreducibles form a basis of class functions, so the
        // reconstruction must be exact.
        for k in 0..g.num_classes() {
            let mut recon = Cyclotomic::zero();
            for (mu, chi) in mults.iter().zip(&self.values) {
                recon = recon.add(&mu.mul(&chi[k]));
            }
            assert_eq!(recon, values[k], "decomposition residual at class {}", k);
        }
        mults
    }
}
