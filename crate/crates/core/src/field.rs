//! Number fields given by a monic integral defining polynomial.
//!
//! Everything here works in the equation order `Z[theta]`. Primes where that
//! order might fail to be maximal are tested with the Dedekind criterion;
//! when the test fails, splitting at that prime is refused.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::int::{self, IntPoly};
use crate::poly::FpPoly;
use crate::sieve::{SieveTable, WeightedSum};

const IRREDUCIBILITY_PRIME_LIMIT: u64 = 200;
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut q = 17u64;
    while q.saturating_mul(q) <= n {
        if n % q == 0 {
            return false;
        }
        q += 2;
    }
    true
}

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| SieveTable::new(TRIAL_DIVISION_LIMIT).primes().to_vec())
}

fn small_primes(limit: u64) -> Vec<u64> {
    if limit <= TRIAL_DIVISION_LIMIT {
        let end = trial_primes().partition_point(|&p| p <= limit);
        trial_primes()[..end].to_vec()
    } else {
        SieveTable::new(limit).primes().to_vec()
    }
}

/// A monic integer polynomial of degree at least 2, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningPolynomial {
    coeffs: Vec<i64>,
}

impl DefiningPolynomial {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 3 {
            return Err(Error::InvalidPolynomial(format!("degree must be at least 2, got {coeffs:?}")));
        }
        if coeffs.last() != Some(&1) {
            return Err(Error::InvalidPolynomial("leading coefficient must be 1".into()));
        }
        Ok(Self { coeffs })
    }

    /// Parse `"c0,c1,...,cn"`. A trailing leading coefficient of 1 may be
    /// omitted: if the last listed coefficient is not 1, a leading 1 is appended.
    pub fn parse(text: &str) -> Result<Self> {
        let normalized = text.replace('\u{2212}', "-");
        let mut coeffs = Vec::new();
        for part in normalized.split(',') {
            let part = part.trim();
            let v: i64 = part
                .parse()
                .map_err(|_| Error::InvalidPolynomial(format!("cannot parse coefficient {part:?}")))?;
            coeffs.push(v);
        }
        if coeffs.last() != Some(&1) {
            coeffs.push(1);
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn to_int_poly(&self) -> IntPoly {
        int::from_i64(&self.coeffs)
    }

    pub fn reduce_mod(&self, p: u64) -> FpPoly {
        FpPoly::from_signed(p, &self.coeffs)
    }

    pub fn discriminant(&self) -> BigInt {
        int::discriminant(&self.to_int_poly())
    }

    /// `(r1, r2)` from a Sturm real-root count.
    pub fn signature(&self) -> (u32, u32) {
        let r1 = int::count_real_roots(&self.to_int_poly()) as u32;
        (r1, (self.degree() as u32 - r1) / 2)
    }
}

impl std::fmt::Display for DefiningPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// How irreducibility over the rationals was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// Irreducible modulo this prime, which does not divide the discriminant.
    InertPrime(u64),
    /// Factorization degree patterns modulo these primes leave no room for a rational factor.
    DegreePatterns(Vec<u64>),
    /// No monic integer factor exists within the coefficient bounds.
    FactorSearch,
}

/// Degrees `d` in `1..=n/2` that are a sub-sum of `degrees`.
fn reachable_degrees(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            out.push(d);
            if d != m / d {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out
}

/// Search for a monic rational factor of degree 1 or 2.
fn has_small_factor(poly: &DefiningPolynomial, degree: usize) -> bool {
    let c = poly.coefficients();
    let f = poly.to_int_poly();
    if c[0] == 0 {
        return true;
    }
    let consts: Vec<i64> = divisors(c[0].unsigned_abs())
        .into_iter()
        .flat_map(|d| [d as i64, -(d as i64)])
        .collect();
    match degree {
        1 => consts.iter().any(|&r| int::eval(&f, &BigInt::from(-r)).is_zero()),
        2 => {
            let norm2: f64 = c.iter().map(|&x| (x as f64).powi(2)).sum::<f64>().sqrt();
            let bound = (2.0 * norm2).ceil() as i64;
            consts.iter().any(|&b| {
                (-bound..=bound).any(|a| int::div_exact_monic(&f, &int::from_i64(&[b, a, 1])).is_some())
            })
        }
        _ => unreachable!("factor search only covers degrees 1 and 2"),
    }
}

fn certify_irreducible(poly: &DefiningPolynomial, disc: &BigInt) -> Result<IrreducibilityCertificate> {
    let n = poly.degree();
    let mut possible = vec![true; n / 2 + 1];
    possible[0] = false;
    let mut used = Vec::new();
    for p in small_primes(IRREDUCIBILITY_PRIME_LIMIT) {
        if (disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let degrees: Vec<usize> = poly.reduce_mod(p).factor().iter().map(|(g, _)| g.degree()).collect();
        if degrees.len() == 1 {
            return Ok(IrreducibilityCertificate::InertPrime(p));
        }
        let reach = reachable_degrees(&degrees, n);
        let before = possible.clone();
        for (d, ok) in possible.iter_mut().enumerate().skip(1) {
            *ok &= reach[d];
        }
        if possible != before {
            used.push(p);
        }
        if possible.iter().all(|&ok| !ok) {
            return Ok(IrreducibilityCertificate::DegreePatterns(used));
        }
    }
    if n > 4 {
        return Err(Error::Uncertified(n));
    }
    for d in 1..=n / 2 {
        if possible[d] && has_small_factor(poly, d) {
            return Err(Error::Reducible(format!("{poly} has a rational factor of degree {d}")));
        }
    }
    Ok(IrreducibilityCertificate::FactorSearch)
}

/// Ramification index, inertia degree and residue factor of one prime ideal above `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdealFactor {
    pub e: u32,
    pub f: u32,
    /// Monic irreducible factor of the defining polynomial mod `p`.
    pub residue: FpPoly,
}

impl PrimeIdealFactor {
    /// `theta mod` this ideal, when the residue field is `F_p`.
    pub fn root(&self) -> Option<u64> {
        (self.f == 1).then(|| {
            let p = self.residue.modulus();
            (p - self.residue.coeffs()[0]) % p
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingDatum {
    pub p: u64,
    pub factors: Vec<PrimeIdealFactor>,
}

impl SplittingDatum {
    /// `(e, f)` pairs in factor order.
    pub fn ef_pairs(&self) -> Vec<(u32, u32)> {
        self.factors.iter().map(|x| (x.e, x.f)).collect()
    }

    pub fn is_ramified(&self) -> bool {
        self.factors.iter().any(|x| x.e >= 2)
    }
}

/// One prime-power ideal `p^m` with its von Mangoldt weight `log Norm p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealPowerEntry {
    pub norm: u64,
    pub lambda: f64,
    pub p: u64,
    pub f: u32,
    pub m: u32,
}

/// A prime ideal of the maximal order, identified by its residue data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub norm: u64,
    pub p: u64,
    pub e: u32,
    pub f: u32,
}

/// All prime ideals of norm at most `bound`, sorted by norm.
#[derive(Debug, Clone)]
pub struct IdealTable {
    bound: u64,
    degree: usize,
    ideals: Vec<PrimeIdeal>,
}

impl IdealTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn ideals(&self) -> &[PrimeIdeal] {
        &self.ideals
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn ensure(&self, x: f64) -> Result<()> {
        if x.floor() > self.bound as f64 {
            return Err(Error::Capacity { needed: x.floor() as u64, limit: self.bound });
        }
        Ok(())
    }

    /// Prime-power ideals of norm at most `x`, sorted by norm.
    pub fn lambda_stream(&self, x: f64) -> Result<Vec<IdealPowerEntry>> {
        self.ensure(x)?;
        let mut out = Vec::new();
        for ideal in &self.ideals {
            let lambda = (ideal.norm as f64).ln();
            let mut norm = ideal.norm;
            let mut m = 1;
            while (norm as f64) <= x {
                out.push(IdealPowerEntry { norm, lambda, p: ideal.p, f: ideal.f, m });
                match norm.checked_mul(ideal.norm) {
                    Some(next) => norm = next,
                    None => break,
                }
                m += 1;
            }
        }
        out.sort_by(|a, b| a.norm.cmp(&b.norm).then(a.p.cmp(&b.p)));
        Ok(out)
    }

    /// Field Chebyshev function `psi_K(x)`.
    pub fn psi(&self, x: f64) -> Result<f64> {
        Ok(self.lambda_stream(x)?.iter().map(|e| e.lambda).sum())
    }

    /// `sum_{low < Norm p <= high} log(Norm p) log(high / Norm p)` over prime ideals.
    pub fn weighted_sum(&self, low: f64, high: f64) -> Result<WeightedSum> {
        if !(low >= 1.0 && low < high) {
            return Err(Error::Precondition(format!("need 1 <= T < cT, got T = {low}, cT = {high}")));
        }
        self.ensure(high)?;
        let mut value = 0.0;
        let mut term_count = 0;
        for ideal in &self.ideals {
            let norm = ideal.norm as f64;
            if norm > low && norm <= high {
                value += norm.ln() * (high / norm).ln();
                term_count += 1;
            }
        }
        Ok(WeightedSum { value, term_count, low, high })
    }
}

/// How one small prime ideal was shown to be principal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrincipalityProof {
    /// The ideal is `(p)` itself.
    Inert,
    /// An element of exactly this norm lies in the ideal.
    Generator(Vec<i64>),
    /// All other ideals above `p` are principal and this one is unramified.
    Complement,
    /// Nothing found within the search height.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassNumberOneCertificate {
    pub minkowski_bound: f64,
    pub entries: Vec<(PrimeIdeal, PrincipalityProof)>,
}

impl ClassNumberOneCertificate {
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|(_, proof)| *proof != PrincipalityProof::Unresolved)
    }
}

/// A number field `Q(theta)` with `theta` a root of the defining polynomial.
#[derive(Debug, Clone)]
pub struct NumberField {
    poly: DefiningPolynomial,
    disc_poly: BigInt,
    field_disc: Option<BigInt>,
    r1: u32,
    r2: u32,
    index_square_divisors: Vec<u64>,
    certificate: IrreducibilityCertificate,
}

impl NumberField {
    pub fn new(poly: DefiningPolynomial) -> Result<Self> {
        let disc_poly = poly.discriminant();
        if disc_poly.is_zero() {
            return Err(Error::Reducible(format!("{poly} has a repeated factor")));
        }
        let certificate = certify_irreducible(&poly, &disc_poly)?;
        let (r1, r2) = poly.signature();
        let (index_square_divisors, fully_factored) = square_divisors(&disc_poly);
        let mut field = Self {
            poly,
            disc_poly,
            field_disc: None,
            r1,
            r2,
            index_square_divisors,
            certificate,
        };
        if fully_factored && field.index_square_divisors.iter().all(|&p| field.dedekind_certified(p)) {
            field.field_disc = Some(field.disc_poly.clone());
        }
        Ok(field)
    }

    pub fn from_coefficients(coeffs: &[i64]) -> Result<Self> {
        Self::new(DefiningPolynomial::new(coeffs.to_vec())?)
    }

    /// Supply the field discriminant when it could not be certified.
    pub fn with_field_discriminant(mut self, disc: BigInt) -> Result<Self> {
        let sign_ok = disc.is_negative() == (self.r2 % 2 == 1);
        if disc.is_zero() || !sign_ok {
            return Err(Error::Precondition(format!("discriminant {disc} has the wrong sign for r2 = {}", self.r2)));
        }
        let (q, r) = self.disc_poly.div_rem(&disc);
        if !r.is_zero() || !q.is_positive() || q.sqrt().pow(2) != q {
            return Err(Error::Precondition(format!(
                "{disc} does not divide {} with a square cofactor",
                self.disc_poly
            )));
        }
        for &p in &self.index_square_divisors {
            if self.dedekind_certified(p) && (&q % BigInt::from(p)).is_zero() {
                return Err(Error::Precondition(format!("Z[theta] is maximal at {p}, so the index cannot be divisible by it")));
            }
        }
        self.field_disc = Some(disc);
        Ok(self)
    }

    pub fn poly(&self) -> &DefiningPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn disc_poly(&self) -> &BigInt {
        &self.disc_poly
    }

    pub fn field_disc(&self) -> Option<&BigInt> {
        self.field_disc.as_ref()
    }

    pub fn signature(&self) -> (u32, u32) {
        (self.r1, self.r2)
    }

    pub fn index_square_divisors(&self) -> &[u64] {
        &self.index_square_divisors
    }

    pub fn irreducibility_certificate(&self) -> &IrreducibilityCertificate {
        &self.certificate
    }

    /// `log |Delta_K|`.
    pub fn log_abs_disc(&self) -> Result<f64> {
        let d = self.field_disc.as_ref().ok_or(Error::UnverifiedDiscriminant)?;
        let bits = d.bits();
        if bits < 1000 {
            Ok(d.abs().to_f64().unwrap_or(f64::INFINITY).ln())
        } else {
            let shift = bits - 60;
            Ok((d.abs() >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2)
        }
    }

    /// Dedekind criterion: `true` if `p` does not divide `[O_K : Z[theta]]`.
    pub fn dedekind_certified(&self, p: u64) -> bool {
        if !(&self.disc_poly % BigInt::from(p * p)).is_zero() {
            return true;
        }
        let f = self.poly.to_int_poly();
        let fbar = self.poly.reduce_mod(p);
        let lift = |g: &FpPoly| -> IntPoly { g.coeffs().iter().map(|&c| BigInt::from(c)).collect() };
        let mut g = vec![BigInt::one()];
        let mut h = vec![BigInt::one()];
        let mut gbar = FpPoly::one(p);
        let mut hbar = FpPoly::one(p);
        for (t, e) in fbar.factor() {
            let tl = lift(&t);
            g = int::mul(&g, &tl);
            gbar = gbar.mul(&t);
            for _ in 1..e {
                h = int::mul(&h, &tl);
                hbar = hbar.mul(&t);
            }
        }
        let diff = int::sub(&int::mul(&g, &h), &f);
        let pb = BigInt::from(p);
        let big_f: Vec<i64> = diff
            .iter()
            .map(|c| {
                let q = c / &pb;
                q.mod_floor(&pb).to_i64().unwrap()
            })
            .collect();
        let big_f = FpPoly::from_signed(p, &big_f);
        big_f.gcd(&gbar).gcd(&hbar).is_one()
    }

    /// Factor `p O_K` via the residue factorization of the defining polynomial.
    pub fn split_prime(&self, p: u64) -> Result<SplittingDatum> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if !self.dedekind_certified(p) {
            return Err(Error::SplittingUnavailable(p));
        }
        let factors = self
            .poly
            .reduce_mod(p)
            .factor()
            .into_iter()
            .map(|(g, e)| PrimeIdealFactor { e, f: g.degree() as u32, residue: g })
            .collect();
        Ok(SplittingDatum { p, factors })
    }

    /// Prime ideals of norm at most `bound`.
    pub fn ideal_table(&self, bound: u64) -> Result<IdealTable> {
        let mut ideals = Vec::new();
        for p in small_primes(bound.max(2)) {
            if p > bound {
                break;
            }
            for factor in self.split_prime(p)?.factors {
                let norm = match p.checked_pow(factor.f) {
                    Some(norm) if norm <= bound => norm,
                    _ => continue,
                };
                ideals.push(PrimeIdeal { norm, p, e: factor.e, f: factor.f });
            }
        }
        ideals.sort_by(|a, b| a.norm.cmp(&b.norm).then(a.p.cmp(&b.p)));
        Ok(IdealTable { bound, degree: self.degree(), ideals })
    }

    /// Prime-power ideals of norm at most `x`.
    pub fn ideal_lambda_stream(&self, x: f64) -> Result<Vec<IdealPowerEntry>> {
        if x < 2.0 {
            return Ok(Vec::new());
        }
        self.ideal_table(x.floor() as u64)?.lambda_stream(x)
    }

    /// `sum_{T < Norm p <= cT} log(Norm p) log(cT / Norm p)` over prime ideals.
    pub fn prime_ideal_weighted_sum(&self, t: f64, ct: f64) -> Result<WeightedSum> {
        if !(t >= 1.0 && t < ct) {
            return Err(Error::Precondition(format!("need 1 <= T < cT, got T = {t}, cT = {ct}")));
        }
        self.ideal_table(ct.floor() as u64)?.weighted_sum(t, ct)
    }

    /// Look for `a = sum a_i theta^i` with `|a_i| <= height`, `a(root) = 0 mod p`
    /// and `|Norm a| = norm_target`. Smaller heights are searched first.
    pub fn principality_search(&self, p: u64, root: u64, norm_target: u64, height: u32) -> Result<Option<Vec<i64>>> {
        if !is_prime(p) || self.poly.reduce_mod(p).eval(root % p) != 0 {
            return Err(Error::UnsupportedRepresentation(format!(
                "(p, theta - {root}) with p = {p} is not a degree-one prime ideal"
            )));
        }
        let n = self.degree();
        let f = self.poly.to_int_poly();
        let target = BigInt::from(norm_target);
        let h = height as i64;
        let mut a = vec![0i64; n];
        for shell in 0..=h {
            let width = (2 * shell + 1) as u64;
            let total = width.pow(n as u32);
            for k in 0..total {
                let mut kk = k;
                for slot in a.iter_mut() {
                    *slot = (kk % width) as i64 - shell;
                    kk /= width;
                }
                if a.iter().all(|x| x.abs() < shell) {
                    continue;
                }
                let residue = a
                    .iter()
                    .rev()
                    .fold(0i128, |acc, &x| (acc * root as i128 + x as i128).rem_euclid(p as i128));
                if residue != 0 {
                    continue;
                }
                let elem = int::from_i64(&a);
                if elem.is_empty() {
                    continue;
                }
                if int::resultant(&f, &elem).abs() == target {
                    return Ok(Some(a.clone()));
                }
            }
        }
        Ok(None)
    }

    /// `(n! / n^n) (4 / pi)^{r2} sqrt|Delta|`.
    pub fn minkowski_bound(&self) -> Result<f64> {
        let n = self.degree() as i32;
        let log_disc = self.log_abs_disc()?;
        let log_fact: f64 = (1..=n).map(|k| f64::from(k).ln()).sum();
        Ok((log_fact - f64::from(n) * f64::from(n).ln() + f64::from(self.r2) * (4.0 / PI).ln() + 0.5 * log_disc).exp())
    }

    /// Show every prime ideal of norm below the Minkowski bound is principal.
    pub fn class_number_one_certificate(&self, height: u32) -> Result<ClassNumberOneCertificate> {
        let bound = self.minkowski_bound()?;
        let mut entries = Vec::new();
        for p in small_primes(bound.floor().max(2.0) as u64) {
            if p as f64 > bound {
                break;
            }
            let datum = self.split_prime(p)?;
            let mut proofs: Vec<PrincipalityProof> = datum
                .factors
                .iter()
                .map(|fac| {
                    if datum.factors.len() == 1 && fac.e == 1 {
                        Ok(PrincipalityProof::Inert)
                    } else if let Some(root) = fac.root() {
                        Ok(self
                            .principality_search(p, root, p, height)?
                            .map_or(PrincipalityProof::Unresolved, PrincipalityProof::Generator))
                    } else {
                        Ok(PrincipalityProof::Unresolved)
                    }
                })
                .collect::<Result<_>>()?;
            let open: Vec<usize> = (0..proofs.len()).filter(|&i| proofs[i] == PrincipalityProof::Unresolved).collect();
            if let [i] = open[..] {
                if datum.factors[i].e == 1 {
                    proofs[i] = PrincipalityProof::Complement;
                }
            }
            for (fac, proof) in datum.factors.iter().zip(proofs) {
                let norm = p.pow(fac.f);
                if norm as f64 <= bound {
                    entries.push((PrimeIdeal { norm, p, e: fac.e, f: fac.f }, proof));
                }
            }
        }
        Ok(ClassNumberOneCertificate { minkowski_bound: bound, entries })
    }
}

/// Primes `p` with `p^2 | d`, and whether `d` was factored completely.
fn square_divisors(d: &BigInt) -> (Vec<u64>, bool) {
    let mut rest = d.abs();
    let mut out = Vec::new();
    for &p in trial_primes() {
        let pb = BigInt::from(p);
        if BigInt::from(p * p) > rest {
            break;
        }
        let mut k = 0;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            k += 1;
        }
        if k >= 2 {
            out.push(p);
        }
    }
    let limit = BigInt::from(TRIAL_DIVISION_LIMIT);
    let fully = rest <= &limit * &limit;
    (out, fully)
}

/// Fields from a fixture file: `c0,c1,...,cn expected_abs_disc` per line, `#` comments.
pub fn parse_field_fixture(text: &str) -> Result<Vec<(DefiningPolynomial, u64)>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let poly = DefiningPolynomial::parse(parts.next().unwrap())?;
        let disc = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidPolynomial(format!("missing discriminant in {line:?}")))?;
        out.push((poly, disc));
    }
    Ok(out)
}

/// The fixture of cubic fields with `|Delta| < 77`.
pub const CUBIC_FIXTURE: &str = include_str!("../data/cubic_fields.txt");
