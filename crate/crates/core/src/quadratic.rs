//! Class groups of quadratic fields through binary quadratic forms.
//!
//! Definite discriminants use the classical reduced forms. Indefinite ones
//! use cycles of reduced forms under the `rho` operator, and a cycle is
//! identified with the cycle of `(-a, b, -c)`, which gives the wide class
//! group (ideals modulo all principal ideals).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::is_prime;

fn squarefree(m: u64) -> bool {
    let mut q = 2u64;
    while q * q <= m {
        if m % (q * q) == 0 {
            return false;
        }
        q += 1;
    }
    true
}

pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Discriminant of a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self> {
        if is_fundamental(d) {
            Ok(Self(d))
        } else {
            Err(Error::NotFundamental(d))
        }
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

/// All fundamental discriminants with `0 < |d| < bound`, ordered by `|d|`, negative first.
pub fn enumerate_fundamental_discriminants(bound: i64) -> Vec<FundamentalDiscriminant> {
    let mut out = Vec::new();
    for m in 1..bound.max(1) {
        for d in [-m, m] {
            if is_fundamental(d) {
                out.push(FundamentalDiscriminant(d));
            }
        }
    }
    out
}

/// Kronecker symbol `(d / n)` for `n > 0`.
pub fn kronecker(d: i64, n: u64) -> i32 {
    assert!(n > 0);
    let mut n = n;
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        if d % 2 == 0 {
            return 0;
        }
        if matches!(d.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    if n == 1 {
        return result;
    }
    let mut a = d.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// The form with `b` negated, which represents the inverse class.
    pub fn inverse(&self) -> Self {
        Self::new(self.a, -self.b, self.c)
    }

    fn negated(&self) -> Self {
        Self::new(-self.a, self.b, -self.c)
    }

    /// Principal form of discriminant `d`.
    pub fn principal(d: i64) -> Self {
        let b = d.rem_euclid(2);
        Self::new(1, b, (b * b - d) / 4)
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }
}

/// Exact comparisons against `sqrt(d)` for non-square `d > 0`.
#[derive(Debug, Clone, Copy)]
struct Root {
    d: i64,
    floor: i64,
}

impl Root {
    fn new(d: i64) -> Self {
        let mut r = (d as f64).sqrt() as i64;
        while r * r > d {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= d {
            r += 1;
        }
        Self { d, floor: r }
    }

    fn below(&self, x: i64) -> bool {
        x <= self.floor
    }

    fn above(&self, x: i64) -> bool {
        x > self.floor && x * x > self.d
    }
}

fn is_reduced_indefinite(f: &QuadForm, root: Root) -> bool {
    let a2 = 2 * f.a.abs();
    f.b > 0 && root.below(f.b) && root.above(a2 + f.b) && root.below(a2 - f.b)
}

fn rho(f: &QuadForm, root: Root) -> QuadForm {
    let c = f.c;
    let m = 2 * c.abs();
    let r = (-f.b).rem_euclid(m);
    let b = if root.above(c.abs()) {
        // -|c| < b <= |c|
        if r > c.abs() {
            r - m
        } else {
            r
        }
    } else {
        // largest b < sqrt(d) in the residue class
        r + Integer::div_floor(&(root.floor - r), &m) * m
    };
    QuadForm::new(c, b, (b * b - root.d) / (4 * c))
}

fn reduce_definite(f: QuadForm) -> QuadForm {
    let QuadForm { mut a, mut b, .. } = f;
    let mut c;
    let d = f.disc();
    loop {
        let m = 2 * a;
        let mut nb = b.rem_euclid(m);
        if nb > a {
            nb -= m;
        }
        b = nb;
        c = (b * b - d) / (4 * a);
        if a > c {
            std::mem::swap(&mut a, &mut c);
            b = -b;
        } else {
            break;
        }
    }
    if (a == c || b == -a) && b < 0 {
        b = -b;
    }
    QuadForm::new(a, b, c)
}

/// Reduce a form: the unique reduced form for `d < 0` (positive definite),
/// some reduced form in the same proper class for `d > 0`.
pub fn reduce(f: QuadForm) -> QuadForm {
    let d = f.disc();
    if d < 0 {
        let f = if f.a < 0 { f.negated() } else { f };
        reduce_definite(f)
    } else {
        let root = Root::new(d);
        let mut g = f;
        while !is_reduced_indefinite(&g, root) {
            g = rho(&g, root);
        }
        g
    }
}

fn cycle(f: QuadForm, root: Root) -> Vec<QuadForm> {
    let mut out = vec![f];
    let mut g = rho(&f, root);
    while g != f {
        out.push(g);
        g = rho(&g, root);
    }
    out
}

/// Canonical representative of the (wide) class of `f`.
pub fn canonical(f: QuadForm) -> QuadForm {
    let d = f.disc();
    let g = reduce(f);
    if d < 0 {
        return g;
    }
    let root = Root::new(d);
    cycle(g, root)
        .into_iter()
        .flat_map(|h| [h, h.negated()])
        .min()
        .unwrap()
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Dirichlet composition of two primitive forms of the same discriminant (unreduced).
pub fn compose(f: &QuadForm, g: &QuadForm) -> QuadForm {
    let d = f.disc() as i128;
    debug_assert_eq!(f.disc(), g.disc());
    let (a1, b1) = (f.a as i128, f.b as i128);
    let (a2, b2) = (g.a as i128, g.b as i128);
    let s = (b1 + b2) / 2;
    let (g1, x1, y1) = ext_gcd(a1, a2);
    let (e, x2, y2) = ext_gcd(g1, s);
    let (u, v, w) = (x2 * x1, x2 * y1, y2);
    let a = a1 * a2 / (e * e);
    let m = 2 * a.abs();
    let b = ((u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + d) / 2) / e).rem_euclid(m);
    let c = (b * b - d) / (4 * a);
    QuadForm::new(a as i64, b as i64, c as i64)
}

/// Class of a prime ideal above `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeClass {
    /// `p` is inert; its ideal `(p)` is principal.
    Inert,
    /// Index of the class of a prime ideal above a split or ramified `p`.
    Class(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationReport {
    pub generates: bool,
    pub subgroup_order: usize,
    pub class_number: usize,
    pub primes_used: Vec<u64>,
}

/// Class group of a quadratic field as a set of canonical forms with composition.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    d: i64,
    classes: Vec<QuadForm>,
    index: HashMap<QuadForm, usize>,
    identity: usize,
    invariant_factors: Vec<u64>,
}

fn reduced_forms(d: i64) -> Vec<QuadForm> {
    let mut out = Vec::new();
    let parity = d.rem_euclid(2);
    if d < 0 {
        let mut a = 1;
        while 3 * a * a <= -d {
            let mut b = -a + 1;
            while b <= a {
                if b.rem_euclid(2) == parity && (b * b - d) % (4 * a) == 0 {
                    let c = (b * b - d) / (4 * a);
                    let f = QuadForm::new(a, b, c);
                    if c >= a && !(a == c && b < 0) && f.is_primitive() {
                        out.push(f);
                    }
                }
                b += 1;
            }
            a += 1;
        }
    } else {
        let root = Root::new(d);
        for a in -root.floor..=root.floor {
            if a == 0 {
                continue;
            }
            for b in 1..=root.floor {
                if b.rem_euclid(2) != parity || (b * b - d) % (4 * a) != 0 {
                    continue;
                }
                let f = QuadForm::new(a, b, (b * b - d) / (4 * a));
                if is_reduced_indefinite(&f, root) && f.is_primitive() {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn canonical_classes(d: i64) -> Vec<QuadForm> {
    let forms = reduced_forms(d);
    if d < 0 {
        return forms;
    }
    let root = Root::new(d);
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for f in forms {
        if seen.contains(&f) {
            continue;
        }
        let mut members = cycle(f, root);
        let negated: Vec<QuadForm> = members.iter().map(QuadForm::negated).collect();
        members.extend(negated);
        let rep = *members.iter().min().unwrap();
        seen.extend(members);
        if !reps.contains(&rep) {
            reps.push(rep);
        }
    }
    reps.sort();
    reps
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Class group of `Q(sqrt d)`.
pub fn class_group(d: FundamentalDiscriminant) -> ClassGroup {
    ClassGroup::new(d)
}

impl ClassGroup {
    pub fn new(d: FundamentalDiscriminant) -> Self {
        let d = d.value();
        let mut classes = canonical_classes(d);
        classes.sort();
        let index: HashMap<QuadForm, usize> = classes.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let identity = index[&canonical(QuadForm::principal(d))];
        let mut group = Self { d, classes, index, identity, invariant_factors: Vec::new() };
        group.invariant_factors = group.compute_invariant_factors();
        group
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[QuadForm] {
        &self.classes
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn class_of(&self, f: &QuadForm) -> usize {
        assert_eq!(f.disc(), self.d, "form has the wrong discriminant");
        self.index[&canonical(*f)]
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.class_of(&compose(&self.classes[i], &self.classes[j]))
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.class_of(&self.classes[i].inverse())
    }

    pub fn pow(&self, i: usize, mut k: u64) -> usize {
        let mut base = i;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.compose(acc, base);
            }
            base = self.compose(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut m = self.order() as u64;
        for p in prime_factors(m) {
            while m % p == 0 && self.pow(i, m / p) == self.identity {
                m /= p;
            }
        }
        m
    }

    fn compute_invariant_factors(&self) -> Vec<u64> {
        let h = self.order() as u64;
        let orders: Vec<u64> = (0..self.order()).map(|i| self.element_order(i)).collect();
        // exponents[p] = partition of the p-part, largest first
        let mut parts: Vec<(u64, Vec<u32>)> = Vec::new();
        for p in prime_factors(h) {
            let mut ranks = Vec::new();
            let mut prev = 1usize;
            let mut pk = p;
            loop {
                let count = orders.iter().filter(|&&o| pk % o == 0).count();
                if count == prev {
                    break;
                }
                let mut ratio = count / prev;
                let mut r = 0;
                while ratio > 1 {
                    ratio /= p as usize;
                    r += 1;
                }
                ranks.push(r);
                prev = count;
                pk *= p;
            }
            let mut exps = Vec::new();
            let mut j = 1;
            loop {
                let e = ranks.iter().filter(|&&r| r >= j).count() as u32;
                if e == 0 {
                    break;
                }
                exps.push(e);
                j += 1;
            }
            parts.push((p, exps));
        }
        let len = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len)
            .map(|i| parts.iter().map(|(p, e)| p.pow(e.get(i).copied().unwrap_or(0))).product())
            .collect();
        factors.reverse();
        factors
    }

    /// Invariant factors `d_1 | d_2 | ...`; empty for the trivial group.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// Prime-power cyclic factors, ascending.
    pub fn elementary_divisors(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &m in &self.invariant_factors {
            let mut rest = m;
            for p in prime_factors(m) {
                let mut q = 1;
                while rest % p == 0 {
                    rest /= p;
                    q *= p;
                }
                out.push(q);
            }
        }
        out.sort_unstable();
        out
    }

    /// Class of a prime ideal above `p`.
    pub fn prime_class(&self, p: u64) -> Result<PrimeClass> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if kronecker(self.d, p) == -1 {
            return Ok(PrimeClass::Inert);
        }
        let p = p as i64;
        let parity = self.d.rem_euclid(2);
        let b = (0..2 * p)
            .find(|&b| b.rem_euclid(2) == parity && (b * b - self.d).rem_euclid(4 * p) == 0)
            .expect("split or ramified prime has a square root of d mod 4p");
        let f = QuadForm::new(p, b, (b * b - self.d) / (4 * p));
        Ok(PrimeClass::Class(self.class_of(&f)))
    }

    /// Subgroup generated by the given classes, as a sorted index list.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.compose(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// Does the set of prime ideals of norm at most `bound` generate the group?
    pub fn generated_by_primes_up_to(&self, bound: f64) -> GenerationReport {
        let mut generators = Vec::new();
        let mut primes_used = Vec::new();
        let mut p = 2u64;
        while (p as f64) <= bound {
            if is_prime(p) {
                if let Ok(PrimeClass::Class(i)) = self.prime_class(p) {
                    generators.push(i);
                    primes_used.push(p);
                }
            }
            p += 1;
        }
        let subgroup_order = self.generated_subgroup(&generators).len();
        GenerationReport {
            generates: subgroup_order == self.order(),
            subgroup_order,
            class_number: self.order(),
            primes_used,
        }
    }
}
