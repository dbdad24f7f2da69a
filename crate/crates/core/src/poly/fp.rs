//! Polynomials over the prime field `F_p` and their factorization.
//!
//! Factorization is square-free decomposition, then distinct-degree, then
//! equal-degree splitting. The equal-degree step walks a fixed sequence of
//! candidate polynomials instead of drawing random ones, so outputs are
//! reproducible.

use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    /// Constant term first, no trailing zeros.
    c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, coeffs: &[u64]) -> Self {
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    /// Reduce an integer polynomial mod `p`.
    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        let reduced: Vec<u64> = coeffs.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        Self::new(p, &reduced)
    }

    pub fn zero(p: u64) -> Self {
        Self { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, &[1])
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, &[0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &k| (mulmod(acc, x, self.p) + k) % self.p)
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let li = inv(lc, self.p);
                Self { p: self.p, c: self.c.iter().map(|&k| mulmod(k, li, self.p)).collect() }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v: Vec<u64> = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Self::new(self.p, &v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v: Vec<u64> = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + self.p - o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Self::new(self.p, &v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        let p = self.p as u128;
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % p;
            }
        }
        let v: Vec<u64> = v.into_iter().map(|x| x as u64).collect();
        Self::new(self.p, &v)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.c.len() < d.c.len() {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let li = inv(*d.c.last().unwrap(), p);
        let dd = d.degree();
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mulmod(r[k + dd], li, p);
            if coef == 0 {
                continue;
            }
            q[k] = coef;
            for (j, &dj) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulmod(coef, dj, p)) % p;
            }
        }
        (Self::new(p, &q), Self::new(p, &r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let v: Vec<u64> = self.c.iter().enumerate().skip(1).map(|(i, &k)| mulmod(k, i as u64 % self.p, self.p)).collect();
        Self::new(self.p, &v)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    fn cmp_key(&self, o: &Self) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| self.c.iter().rev().cmp(o.c.iter().rev()))
    }

    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub fn factor(&self) -> Vec<(FpPoly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let f = self.monic();
        let mut out = Vec::new();
        for (part, mult) in squarefree_decomposition(&f) {
            for (block, d) in distinct_degree(&part) {
                for g in equal_degree(&block, d) {
                    out.push((g, mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp_key(&b.0).then(a.1.cmp(&b.1)));
        out
    }

    /// Distinct roots in `F_p`, ascending.
    pub fn roots(&self) -> Vec<u64> {
        let mut r: Vec<u64> = self
            .factor()
            .into_iter()
            .filter(|(g, _)| g.degree() == 1)
            .map(|(g, _)| (self.p - g.c[0]) % self.p)
            .collect();
        r.sort_unstable();
        r
    }
}

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with `f = prod g^m`.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.degree() > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if c.degree() > 0 {
        // c is a p-th power
        let root: Vec<u64> = c.c.iter().step_by(p as usize).copied().collect();
        let root = FpPoly::new(p, &root);
        for (g, m) in squarefree_decomposition(&root.monic()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a square-free monic polynomial:
/// pairs `(g, d)` where `g` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree() >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let d = rest.degree();
        out.push((rest.monic(), d));
    }
    out
}

/// Candidate splitting polynomial number `k`: coefficients are the base-`p` digits of `k`.
fn candidate(p: u64, mut k: u64, max_len: usize) -> FpPoly {
    let mut v = Vec::new();
    while k > 0 && v.len() < max_len {
        v.push(k % p);
        k /= p;
    }
    FpPoly::new(p, &v)
}

/// Split a monic product of irreducibles all of degree `d`.
pub fn equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    if f.degree() == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let mut k = p;
    loop {
        let a = candidate(p, k, f.degree());
        k += 1;
        if a.degree() == 0 {
            continue;
        }
        let probe = if p == 2 {
            // absolute trace a + a^2 + ... + a^{2^{d-1}}
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^{(p^d - 1)/2} = (a * a^p * ... * a^{p^{d-1}})^{(p-1)/2}
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, f);
                norm = norm.mul(&t).rem(f);
            }
            norm.pow_mod((p - 1) / 2, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&probe);
        if g.degree() > 0 && g.degree() < f.degree() {
            let other = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&other.monic(), d));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_irreducible(f: &FpPoly) -> bool {
        // no factor of degree 1..=deg/2 among all monic polynomials
        let p = f.p;
        let n = f.degree();
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for k in 0..count {
                let mut coeffs = vec![0u64; d + 1];
                let mut kk = k;
                for c in coeffs.iter_mut().take(d) {
                    *c = kk % p;
                    kk /= p;
                }
                coeffs[d] = 1;
                let g = FpPoly::new(p, &coeffs);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn gaussian_integers_mod_small_primes() {
        let f = FpPoly::from_signed(5, &[1, 0, 1]);
        let fac = f.factor();
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(g, m)| g.degree() == 1 && *m == 1));
        assert_eq!(f.roots(), vec![2, 3]);

        let fac = FpPoly::from_signed(2, &[1, 0, 1]).factor();
        assert_eq!(fac, vec![(FpPoly::new(2, &[1, 1]), 2)]);

        let fac = FpPoly::from_signed(3, &[1, 0, 1]).factor();
        assert_eq!(fac.len(), 1);
        assert_eq!((fac[0].0.degree(), fac[0].1), (2, 1));
    }

    #[test]
    fn pth_powers_are_handled() {
        // (x^2 + 1)^3 * (x + 2) over F_3
        let base = FpPoly::new(3, &[1, 0, 1]);
        let f = base.mul(&base).mul(&base).mul(&FpPoly::new(3, &[2, 1]));
        let fac = f.factor();
        assert_eq!(fac, vec![(FpPoly::new(3, &[2, 1]), 1), (base, 3)]);
    }

    #[test]
    fn cyclotomic_eight_splits_into_linears_mod_17() {
        let fac = FpPoly::from_signed(17, &[1, 0, 0, 0, 1]).factor();
        assert_eq!(fac.len(), 4);
        assert!(fac.iter().all(|(g, _)| g.degree() == 1));
    }

    #[test]
    fn large_prime_quadratic_factors() {
        // x^4 + 1 mod 1000003 (= 3 mod 8): two quadratic factors
        let fac = FpPoly::from_signed(1_000_003, &[1, 0, 0, 0, 1]).factor();
        assert_eq!(fac.iter().map(|(g, _)| g.degree()).collect::<Vec<_>>(), vec![2, 2]);
    }

    proptest! {
        #[test]
        fn factorization_reconstructs_and_is_irreducible(
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
            coeffs in prop::collection::vec(0u64..13, 1..7),
        ) {
            let mut c = coeffs.clone();
            c.push(1);
            let f = FpPoly::new(p, &c);
            let fac = f.factor();
            let mut prod = FpPoly::one(p);
            for (g, m) in &fac {
                prop_assert!(brute_irreducible(g));
                prop_assert_eq!(g.monic(), g.clone());
                for _ in 0..*m {
                    prod = prod.mul(g);
                }
            }
            prop_assert_eq!(prod, f);
        }
    }
}
