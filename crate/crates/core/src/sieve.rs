//! Prime table and rational von Mangoldt sums.
//!
//! A [`SieveTable`] is built once by a segmented sieve of Eratosthenes and is
//! read-only afterwards. Queries beyond its limit fail with
//! [`Error::Capacity`] instead of silently truncating.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000_000;

/// Lower end of the range where the bound `psi(u) <= u + sqrt(u) log^2 u / (4 pi)` is used.
pub const SCHOENFELD_THRESHOLD: f64 = 73.2;

const CACHE_MAGIC: &[u8; 8] = b"GPRIMES1";
const SEGMENT: u64 = 1 << 18;

#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    bits: Vec<u64>,
    primes: Vec<u64>,
    /// Prime powers `p^k <= limit`, ascending, with `log p` and a running `psi`.
    powers: Vec<u64>,
    power_logs: Vec<f64>,
    psi_prefix: Vec<f64>,
}

/// A rational sum `sum_{low < a <= high} Lambda(a) log(high / a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedSum {
    pub value: f64,
    pub term_count: usize,
    pub low: f64,
    pub high: f64,
}

/// Worst case of `u + sqrt(u) log^2 u / (4 pi) - psi(u)` over a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchoenfeldReport {
    pub worst_margin: f64,
    pub worst_at: f64,
    pub points_checked: usize,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl SieveTable {
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(2);
        let root = isqrt(limit);
        let mut small = vec![true; (root + 1) as usize];
        let mut base = Vec::new();
        for i in 2..=root {
            if small[i as usize] {
                base.push(i);
                let mut j = i * i;
                while j <= root {
                    small[j as usize] = false;
                    j += i;
                }
            }
        }

        let mut bits = vec![0u64; (limit as usize >> 6) + 1];
        let mut primes = Vec::new();
        let mut segment = vec![true; SEGMENT as usize];
        let mut low = 0u64;
        while low <= limit {
            let high = (low + SEGMENT - 1).min(limit);
            let len = (high - low + 1) as usize;
            segment[..len].fill(true);
            for &p in &base {
                let start = (p * p).max(low.div_ceil(p) * p);
                let mut j = start;
                while j <= high {
                    segment[(j - low) as usize] = false;
                    j += p;
                }
            }
            for (offset, &flag) in segment[..len].iter().enumerate() {
                let v = low + offset as u64;
                if flag && v >= 2 {
                    bits[(v >> 6) as usize] |= 1 << (v & 63);
                    primes.push(v);
                }
            }
            low += SEGMENT;
        }
        Self::assemble(limit, bits, primes)
    }

    fn assemble(limit: u64, bits: Vec<u64>, primes: Vec<u64>) -> Self {
        let mut pairs: Vec<(u64, f64)> = Vec::with_capacity(primes.len() + 512);
        for &p in &primes {
            let lp = (p as f64).ln();
            let mut q = p;
            loop {
                pairs.push((q, lp));
                match q.checked_mul(p) {
                    Some(next) if next <= limit => q = next,
                    _ => break,
                }
            }
        }
        pairs.sort_by_key(|&(v, _)| v);
        let mut psi_prefix = Vec::with_capacity(pairs.len() + 1);
        psi_prefix.push(0.0);
        let mut acc = 0.0;
        for &(_, lp) in &pairs {
            acc += lp;
            psi_prefix.push(acc);
        }
        let (powers, power_logs) = pairs.into_iter().unzip();
        Self { limit, bits, primes, powers, power_logs, psi_prefix }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes `<= bound`.
    pub fn primes_up_to(&self, bound: u64) -> Result<&[u64]> {
        self.ensure(bound as f64)?;
        let end = self.primes.partition_point(|&p| p <= bound);
        Ok(&self.primes[..end])
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.ensure(n as f64)?;
        Ok(self.bits[(n >> 6) as usize] >> (n & 63) & 1 == 1)
    }

    fn ensure(&self, x: f64) -> Result<()> {
        if x > self.limit as f64 {
            return Err(Error::Capacity { needed: x.ceil() as u64, limit: self.limit });
        }
        Ok(())
    }

    /// Prime powers `a <= x` (ascending) with `Lambda(a)`.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.powers.iter().copied().zip(self.power_logs.iter().copied())
    }

    fn count_powers_le(&self, x: f64) -> usize {
        self.powers.partition_point(|&a| (a as f64) <= x)
    }

    /// Chebyshev `psi(x) = sum_{p^k <= x} log p`.
    pub fn chebyshev_psi(&self, x: f64) -> Result<f64> {
        self.ensure(x)?;
        Ok(self.psi_prefix[self.count_powers_le(x)])
    }

    /// `sum_{low < a <= high} Lambda(a) log(high / a)`.
    pub fn weighted_lambda_sum(&self, low: f64, high: f64) -> Result<WeightedSum> {
        if !(low >= 1.0 && low < high) {
            return Err(Error::Precondition(format!("need 1 <= T < cT, got T = {low}, cT = {high}")));
        }
        self.ensure(high)?;
        let start = self.count_powers_le(low);
        let end = self.count_powers_le(high);
        let value = (start..end)
            .map(|i| self.power_logs[i] * (high / self.powers[i] as f64).ln())
            .sum();
        Ok(WeightedSum { value, term_count: end - start, low, high })
    }

    /// `int_low^high (psi(u) - psi(low)) du / u`, integrated exactly between
    /// consecutive prime powers where `psi` is constant.
    pub fn psi_increment_integral(&self, low: f64, high: f64) -> Result<f64> {
        if !(low >= 1.0 && low < high) {
            return Err(Error::Precondition(format!("need 1 <= T < cT, got T = {low}, cT = {high}")));
        }
        self.ensure(high)?;
        let base = self.chebyshev_psi(low)?;
        let start = self.count_powers_le(low);
        let end = self.count_powers_le(high);
        let mut total = 0.0;
        for i in start..end {
            let from = self.powers[i] as f64;
            let to = if i + 1 < end { self.powers[i + 1] as f64 } else { high };
            total += (self.psi_prefix[i + 1] - base) * (to / from).ln();
        }
        Ok(total)
    }

    /// Minimum of `u + sqrt(u) log^2 u / (4 pi) - psi(u)` over `u = 73.2` and
    /// every prime power in `[73.2, u_max]`. Between jumps `psi` is constant
    /// while the bound increases, so these points realize the minimum.
    pub fn schoenfeld_check(&self, u_max: u64) -> Result<SchoenfeldReport> {
        if (u_max as f64) < SCHOENFELD_THRESHOLD {
            return Err(Error::EmptyScan(format!("u_max = {u_max} is below {SCHOENFELD_THRESHOLD}")));
        }
        self.ensure(u_max as f64)?;
        let bound = |u: f64| u + u.sqrt() * u.ln().powi(2) / (4.0 * PI);
        let first = self.count_powers_le(SCHOENFELD_THRESHOLD);
        let mut report = SchoenfeldReport {
            worst_margin: bound(SCHOENFELD_THRESHOLD) - self.psi_prefix[first],
            worst_at: SCHOENFELD_THRESHOLD,
            points_checked: 1,
        };
        for i in first..self.count_powers_le(u_max as f64) {
            let u = self.powers[i] as f64;
            let margin = bound(u) - self.psi_prefix[i + 1];
            report.points_checked += 1;
            if margin < report.worst_margin {
                report.worst_margin = margin;
                report.worst_at = u;
            }
        }
        Ok(report)
    }

    /// Write the prime list: magic `GPRIMES1`, little-endian `u64` count, then the primes.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let mut out = Vec::with_capacity(16 + 8 * self.primes.len());
        out.extend_from_slice(CACHE_MAGIC);
        out.extend_from_slice(&(self.primes.len() as u64).to_le_bytes());
        for &p in &self.primes {
            out.extend_from_slice(&p.to_le_bytes());
        }
        let mut file = fs::File::create(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        file.write_all(&out).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    /// Load a prime list written by [`SieveTable::save_cache`].
    ///
    /// The file only tells us the primes it holds, so the loaded table's limit
    /// is its last prime; queries past it report a capacity error.
    pub fn load_cache(path: &Path, limit: u64) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if bytes.len() < 16 || &bytes[..8] != CACHE_MAGIC {
            return Err(Error::Cache("bad magic header".into()));
        }
        let count = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
        if bytes.len() != 16 + 8 * count {
            return Err(Error::Cache(format!("count {count} does not match file length {}", bytes.len())));
        }
        let primes: Vec<u64> = bytes[16..]
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        if primes.first() != Some(&2) || primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Cache("prime list must start at 2 and increase".into()));
        }
        let last = *primes.last().unwrap();
        if last > limit {
            return Err(Error::Cache(format!("last prime {last} exceeds limit {limit}")));
        }
        let mut bits = vec![0u64; (last as usize >> 6) + 1];
        for &p in &primes {
            bits[(p >> 6) as usize] |= 1 << (p & 63);
        }
        Ok(Self::assemble(last, bits, primes))
    }

    /// Like [`SieveTable::load_cache`], but the table covers all of `[2, limit]`.
    /// Fails unless no prime lies between the last cached prime and `limit`.
    pub fn load_cache_covering(path: &Path, limit: u64) -> Result<Self> {
        let loaded = Self::load_cache(path, limit)?;
        let is_prime = |m: u64| m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0);
        if let Some(m) = (loaded.limit + 1..=limit).find(|&m| is_prime(m)) {
            return Err(Error::Cache(format!("cache ends at {}, but {m} <= {limit} is prime", loaded.limit)));
        }
        let mut bits = loaded.bits;
        bits.resize((limit as usize >> 6) + 1, 0);
        Ok(Self::assemble(limit, bits, loaded.primes))
    }
}

/// Rational majorant of a prime-ideal window sum in degree `n`:
/// `n (c - 1 - log c) T + n (c - 1)/(4 pi) sqrt(T) log^2(cT)`, valid for `T >= 73.2`.
pub fn window_sum_majorant(t: f64, c: f64, n: u32) -> Result<f64> {
    if t < SCHOENFELD_THRESHOLD {
        return Err(Error::Precondition(format!("majorant needs T >= {SCHOENFELD_THRESHOLD}, got {t}")));
    }
    if !(c >= 1.0) {
        return Err(Error::Precondition(format!("majorant needs c >= 1, got {c}")));
    }
    let n = f64::from(n);
    Ok(n * crate::kernel::window_excess(c) * t + n * (c - 1.0) / (4.0 * PI) * t.sqrt() * (c * t).ln().powi(2))
}
