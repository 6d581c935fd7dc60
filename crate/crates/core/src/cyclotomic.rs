//! Exact arithmetic in cyclotomic fields.  An element is a rational
//! polynomial in a primitive m-th root of unity, stored reduced modulo the
//! m-th cyclotomic polynomial and normalized to the smallest conductor that
//! contains it, so structural equality is field equality.

use crate::linalg::{coords_in_rowspace, Q};
use num::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub fn phi(m: usize) -> usize {
    (1..=m).filter(|k| num::integer::gcd(*k, m) == 1).count()
}

pub fn divisors(m: usize) -> Vec<usize> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// Coefficients of the m-th cyclotomic polynomial, ascending powers, monic.
pub fn cyclotomic_poly(m: usize) -> Vec<Q> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Q>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by the product of all lower cyclotomics of divisors.
    let mut num = vec![Q::zero(); m + 1];
    num[0] = -Q::one();
    num[m] = Q::one();
    let mut poly = num;
    for d in divisors(m) {
        if d < m {
            poly = poly_div_exact(&poly, &cyclotomic_poly(d));
        }
    }
    cache.lock().unwrap().insert(m, poly.clone());
    poly
}

/// Exact division of polynomials (ascending coeffs), divisor monic trailing.
fn poly_div_exact(num: &[Q], den: &[Q]) -> Vec<Q> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![Q::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            quot[k] = c.clone();
            for (i, d) in den.iter().enumerate() {
                let t = &rem[k + i] - &c * d;
                rem[k + i] = t;
            }
        }
    }
    assert!(rem.iter().all(|x| x.is_zero()), "inexact polynomial division");
    quot
}

/// Element of Q(zeta_conductor); `coeffs` has length `conductor` with all
/// entries at index >= phi(conductor) zero, and no smaller conductor works.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<Q>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Q::zero()] }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Q::one())
    }

    pub fn from_rational(r: Q) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(crate::linalg::q(n))
    }

    /// zeta_m^k.
    pub fn root_of_unity(m: usize, k: i64) -> Self {
        assert!(m >= 1);
        let mut coeffs = vec![Q::zero(); m];
        let idx = (k.rem_euclid(m as i64)) as usize;
        coeffs[idx] = Q::one();
        Cyclotomic::reduce_new(m, coeffs)
    }

    /// Build from raw power-basis coefficients (index i multiplies zeta_m^i).
    pub fn from_coeffs(m: usize, coeffs: Vec<Q>) -> Self {
        let mut folded = vec![Q::zero(); m];
        for (i, c) in coeffs.into_iter().enumerate() {
            folded[i % m] += c;
        }
        Cyclotomic::reduce_new(m, folded)
    }

    fn reduce_new(m: usize, mut coeffs: Vec<Q>) -> Self {
        reduce_mod_cyclotomic(m, &mut coeffs);
        let mut v = Cyclotomic { conductor: m, coeffs };
        v.minimize_conductor();
        v
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Q> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Coefficients in the power basis at conductor `m` (self.conductor | m).
    pub fn lift_coeffs(&self, m: usize) -> Vec<Q> {
        assert!(m % self.conductor == 0, "can only lift to a multiple conductor");
        let step = m / self.conductor;
        let mut out = vec![Q::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(i * step) % m] += c.clone();
            }
        }
        reduce_mod_cyclotomic(m, &mut out);
        out
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let m = num::integer::lcm(self.conductor, other.conductor);
        let mut a = self.lift_coeffs(m);
        for (x, y) in a.iter_mut().zip(other.lift_coeffs(m)) {
            *x += y;
        }
        Cyclotomic::reduce_new(m, a)
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let m = num::integer::lcm(self.conductor, other.conductor);
        let a = self.lift_coeffs(m);
        let b = other.lift_coeffs(m);
        // Cyclic convolution: zeta_m^m = 1.
        let mut out = vec![Q::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[(i + j) % m] += x * y;
                }
            }
        }
        Cyclotomic::reduce_new(m, out)
    }

    pub fn scale(&self, r: &Q) -> Cyclotomic {
        let mut v = Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| x * r).collect(),
        };
        if r.is_zero() {
            v = Cyclotomic::zero();
        }
        v.minimize_conductor();
        v
    }

    /// Complex conjugation: zeta |-> zeta^{-1}.
    pub fn conjugate(&self) -> Cyclotomic {
        let m = self.conductor;
        let mut out = vec![Q::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(m - i) % m] += c.clone();
        }
        Cyclotomic::reduce_new(m, out)
    }

    /// Galois twist zeta |-> zeta^t; requires gcd(t, conductor) = 1.
    pub fn galois(&self, t: i64) -> Cyclotomic {
        let m = self.conductor;
        let tm = t.rem_euclid(m as i64) as usize;
        assert_eq!(num::integer::gcd(tm, m), 1, "galois exponent not coprime");
        let mut out = vec![Q::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(i * tm) % m] += c.clone();
        }
        Cyclotomic::reduce_new(m, out)
    }

    /// Drop to the smallest conductor d | m whose field contains the value.
    fn minimize_conductor(&mut self) {
        let m = self.conductor;
        if m == 1 {
            return;
        }
        for d in divisors(m) {
            if d == m {
                break;
            }
            // Basis of Q(zeta_d) inside Q(zeta_m): powers zeta_m^{(m/d) j}.
            let deg = phi(d);
            let basis: Vec<Vec<Q>> = (0..deg)
                .map(|j| {
                    let mut v = vec![Q::zero(); m];
                    v[(j * (m / d)) % m] = Q::one();
                    reduce_mod_cyclotomic(m, &mut v);
                    v
                })
                .collect();
            if let Some(x) = coords_in_rowspace(&basis, &self.coeffs) {
                let mut coeffs = vec![Q::zero(); d];
                coeffs[..deg].clone_from_slice(&x);
                reduce_mod_cyclotomic(d, &mut coeffs);
                self.conductor = d;
                self.coeffs = coeffs;
                return;
            }
        }
    }
}

/// Reduce a length-m power-basis vector modulo the m-th cyclotomic
/// polynomial, in place; afterwards entries at index >= phi(m) are zero.
fn reduce_mod_cyclotomic(m: usize, coeffs: &mut Vec<Q>) {
    assert_eq!(coeffs.len(), m);
    let cp = cyclotomic_poly(m);
    let deg = cp.len() - 1; // = phi(m)
    for k in (deg..m).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[k], Q::zero());
        for (i, d) in cp.iter().enumerate().take(deg) {
            let t = &coeffs[k - deg + i] - &c * d;
            coeffs[k - deg + i] = t;
        }
    }
}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", r);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_coeff = mag.is_one() && i != 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i >= 1 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if i >= 2 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qr};

    fn zeta(m: usize, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, k)
    }

    #[test]
    fn cyclotomic_polys_match_known_tables() {
        let as_i64 = |p: Vec<Q>| -> Vec<i64> {
            p.iter()
                .map(|c| {
                    assert!(c.is_integer());
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect()
        };
        assert_eq!(as_i64(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn primitive_root_sums_follow_moebius() {
        // Sum of primitive m-th roots of unity = mu(m).
        let mu = [(1i64, 1usize), (-1, 2), (-1, 3), (0, 4), (-1, 5), (1, 6), (0, 8), (0, 9), (1, 10), (0, 12), (1, 15)];
        for (expect, m) in mu {
            let mut s = Cyclotomic::zero();
            for k in 1..=m {
                if num::integer::gcd(k, m) == 1 {
                    s = s.add(&zeta(m, k as i64));
                }
            }
            assert_eq!(s, Cyclotomic::from_int(expect), "m={}", m);
        }
    }

    #[test]
    fn classic_identities() {
        // i + i^3 = 0
        assert!(zeta(4, 1).add(&zeta(4, 3)).is_zero());
        // zeta_3 + zeta_3^2 = -1
        assert_eq!(zeta(3, 1).add(&zeta(3, 2)), Cyclotomic::from_int(-1));
        // 1 + zeta_5 + ... + zeta_5^4 = 0
        let mut s = Cyclotomic::zero();
        for k in 0..5 {
            s = s.add(&zeta(5, k));
        }
        assert!(s.is_zero());
        // zeta_8 * zeta_8^7 = 1
        assert_eq!(zeta(8, 1).mul(&zeta(8, 7)), Cyclotomic::one());
        // (zeta_8 + zeta_8^7)^2 = 2
        let c = zeta(8, 1).add(&zeta(8, 7));
        assert_eq!(c.mul(&c), Cyclotomic::from_int(2));
    }

    #[test]
    fn conductor_is_minimized() {
        assert_eq!(zeta(6, 1).conductor(), 3); // zeta_6 = -zeta_3^2
        assert_eq!(zeta(4, 2).conductor(), 1); // zeta_4^2 = -1
        assert_eq!(zeta(4, 2), Cyclotomic::from_int(-1));
        assert_eq!(zeta(12, 3).conductor(), 4); // zeta_12^3 = i
        assert_eq!(zeta(12, 3), zeta(4, 1));
        let half = Cyclotomic::from_rational(qr(1, 2));
        assert_eq!(zeta(8, 1).scale(&q(0)), Cyclotomic::zero());
        assert_eq!(half.conductor(), 1);
    }

    #[test]
    fn conjugation_is_an_involution_and_norm_positive() {
        for (m, k) in [(4, 1), (8, 3), (12, 5), (7, 2)] {
            let z = zeta(m, k);
            assert_eq!(z.conjugate().conjugate(), z);
            assert_eq!(z.mul(&z.conjugate()), Cyclotomic::one());
        }
        let v = zeta(4, 1).scale(&q(2)).add(&Cyclotomic::from_int(3));
        // (3+2i)(3-2i) = 13
        assert_eq!(v.mul(&v.conjugate()), Cyclotomic::from_int(13));
    }

    #[test]
    fn galois_twists_permute_roots() {
        assert_eq!(zeta(5, 1).galois(2), zeta(5, 2));
        assert_eq!(zeta(8, 1).galois(3), zeta(8, 3));
        // galois(-1 mod m) is conjugation
        let v = zeta(7, 1).add(&zeta(7, 5).scale(&qr(2, 3)));
        assert_eq!(v.galois(6), v.conjugate());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(zeta(4, 1).to_string(), "z4");
        assert_eq!(zeta(4, 3).to_string(), "-z4");
        assert_eq!(zeta(3, 2).to_string(), "-1-z3");
        assert_eq!(Cyclotomic::from_int(0).to_string(), "0");
        assert_eq!(qv_half_plus().to_string(), "1/2+2*z8-z8^3");
        assert_eq!(Cyclotomic::from_rational(qr(-3, 2)).to_string(), "-3/2");
    }

    fn qv_half_plus() -> Cyclotomic {
        Cyclotomic::from_rational(qr(1, 2))
            .add(&zeta(8, 1).scale(&q(2)))
            .add(&zeta(8, 3).neg())
    }

    #[test]
    fn ring_laws_spot_checks() {
        let xs = [
            Cyclotomic::from_int(2),
            zeta(3, 1),
            zeta(4, 1).add(&Cyclotomic::one()),
            zeta(8, 5).scale(&qr(-2, 7)),
            zeta(6, 1).sub(&zeta(12, 1)),
        ];
        for a in &xs {
            for b in &xs {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in &xs {
                    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
                assert_eq!(a.mul(b).conjugate(), a.conjugate().mul(&b.conjugate()));
                assert_eq!(a.add(b).conjugate(), a.conjugate().add(&b.conjugate()));
            }
        }
    }
}
