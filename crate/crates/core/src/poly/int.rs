//! Exact integer polynomial arithmetic. Coefficients are stored constant term first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn from_i64(coeffs: &[i64]) -> IntPoly {
    let mut p: IntPoly = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    trim(&mut p);
    p
}

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[BigInt]) -> IntPoly {
    let mut d: IntPoly = p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    trim(&mut d);
    d
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Horner evaluation at an integer.
pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Exact division by a monic divisor; `None` if the remainder is nonzero.
pub fn div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = degree(b)?;
    debug_assert!(b[db].is_one());
    let Some(da) = degree(a) else { return Some(Vec::new()) };
    if da < db {
        return None;
    }
    let mut rem: IntPoly = a[..=da].to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let coef = rem[k + db].clone();
        if coef.is_zero() {
            continue;
        }
        for (j, bj) in b[..=db].iter().enumerate() {
            rem[k + j] -= &coef * bj;
        }
        q[k] = coef;
    }
    if rem.iter().all(Zero::is_zero) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant `Res(a, b)` as the Sylvester determinant. For monic `a` this is
/// `prod b(theta)` over the roots of `a`.
pub fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (Some(da), Some(db)) = (degree(a), degree(b)) else {
        return BigInt::zero();
    };
    if da == 0 {
        return a[0].pow(db as u32);
    }
    if db == 0 {
        return b[0].pow(da as u32);
    }
    let size = da + db;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for row in 0..db {
        for (i, c) in a[..=da].iter().rev().enumerate() {
            m[row][row + i] = c.clone();
        }
    }
    for row in 0..da {
        for (i, c) in b[..=db].iter().rev().enumerate() {
            m[db + row][row + i] = c.clone();
        }
    }
    determinant(m)
}

/// `disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant(f: &[BigInt]) -> BigInt {
    let n = degree(f).unwrap_or(0);
    if n == 0 {
        return BigInt::zero();
    }
    let r = resultant(f, &derivative(f)) / &f[n];
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Pseudo-remainder of `a` by `b`, scaled by `|lc(b)|^{da-db+1}` so that
/// signs are preserved.
fn signed_prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = degree(b).expect("nonzero divisor");
    let lc = b[db].clone();
    let mut r: IntPoly = a.to_vec();
    trim(&mut r);
    let Some(da) = degree(&r) else { return r };
    if da < db {
        return r;
    }
    let steps = da - db + 1;
    for _ in 0..steps {
        let Some(dr) = degree(&r) else { break };
        if dr < db {
            for c in r.iter_mut() {
                *c *= &lc;
            }
            continue;
        }
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (j, bj) in b[..=db].iter().enumerate() {
            r[dr - db + j] -= &lead * bj;
        }
        trim(&mut r);
    }
    if lc.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    trim(&mut r);
    r
}

/// Number of distinct real roots, by a Sturm sequence.
pub fn count_real_roots(f: &[BigInt]) -> usize {
    let mut seq: Vec<IntPoly> = vec![f.to_vec(), derivative(f)];
    seq[0].truncate(degree(f).map_or(0, |d| d + 1));
    while degree(seq.last().unwrap()).is_some_and(|d| d > 0) {
        let n = seq.len();
        let mut r = signed_prem(&seq[n - 2], &seq[n - 1]);
        if degree(&r).is_none() {
            break;
        }
        let g = content(&r);
        for c in r.iter_mut() {
            *c = -(&*c / &g);
        }
        seq.push(r);
    }
    let signs_at = |neg: bool| -> usize {
        let signs: Vec<bool> = seq
            .iter()
            .filter_map(|p| {
                let d = degree(p)?;
                let positive = p[d].is_positive();
                Some(if neg && d % 2 == 1 { !positive } else { positive })
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    signs_at(true) - signs_at(false)
}
