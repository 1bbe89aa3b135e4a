//! Exact arithmetic in GF(p^m) with table-backed multiplication.
//!
//! Elements are stored packed: the coefficient list (a_0, …, a_{m-1}) of the
//! polynomial representation in the generator `z` is read as the integer
//! a_0 + a_1 p + … + a_{m-1} p^{m-1}. That integer is also the canonical
//! enumeration order used for every "smallest witness" tie-break.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, packed base-p with the least significant digit first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldData {
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus over GF(p), length m+1, little-endian digits.
    modulus: Vec<u64>,
    /// exp[k] = gen^k for k in 0..2(q-1); doubled to avoid a reduction on lookup.
    exp: Vec<u32>,
    /// log[e] = k with gen^k = e, for e in 1..q; log[0] is unused.
    log: Vec<u32>,
    gen: u32,
    /// z (the modulus root) as a packed element; equals p for m > 1.
    z: u32,
}

/// Handle to GF(p^m); cheap to clone and share.
#[derive(Clone)]
pub struct Field {
    data: Arc<FieldData>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.p == other.data.p
                && self.data.m == other.data.m
                && self.data.modulus == other.data.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.data.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.data.m == 1 {
            write!(f, "GF({})", self.data.p)
        } else {
            write!(f, "GF({}^{})", self.data.p, self.data.m)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut n = p - 1;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'outer: for g in 2..p {
        for &f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Raw polynomial arithmetic over GF(p), used to bootstrap the tables.
mod raw {
    /// Multiply two reduced digit vectors modulo `modulus` (monic, little-endian).
    pub fn mul(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
        let m = modulus.len() - 1;
        let mut prod = vec![0u64; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        // reduce: subtract x^k * modulus for leading terms
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mj) in modulus.iter().enumerate().take(m) {
                let idx = k - m + j;
                prod[idx] = (prod[idx] + (p - mj % p) % p * c) % p;
            }
        }
        prod.truncate(m.max(1));
        prod
    }

    pub fn pow(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
        let m = modulus.len() - 1;
        let mut acc = vec![0u64; m.max(1)];
        acc[0] = 1;
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &b, modulus, p);
            }
            b = mul(&b, &b, modulus, p);
            e >>= 1;
        }
        acc
    }
}

fn pack(digits: &[u64], p: u64) -> u32 {
    let mut v = 0u64;
    for &d in digits.iter().rev() {
        v = v * p + d;
    }
    v as u32
}

fn unpack(mut v: u64, p: u64, m: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Irreducibility over GF(p): x^(p^m) == x mod f, and x^(p^(m/r)) != x for prime r | m.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let m = (modulus.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    let x = {
        let mut v = vec![0u64; m as usize];
        v[1] = 1;
        v
    };
    // x^(p^k) computed by k successive p-th powers
    let frob = |poly: &[u64], k: u32| -> Vec<u64> {
        let mut acc = poly.to_vec();
        for _ in 0..k {
            acc = raw::pow(&acc, p, modulus, p);
        }
        acc
    };
    if frob(&x, m) != x {
        return false;
    }
    let mut n = m;
    let mut r = 2u32;
    let mut primes = Vec::new();
    while r * r <= n {
        if n % r == 0 {
            primes.push(r);
            while n % r == 0 {
                n /= r;
            }
        }
        r += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    for &r in &primes {
        if frob(&x, m / r) == x {
            return false;
        }
    }
    true
}

/// Smallest (in packed enumeration order) monic irreducible of degree m over GF(p).
/// For GF(4) this yields z^2+z+1 and for GF(32) z^5+z^2+1, matching the labels
/// used throughout the worked examples.
fn builtin_modulus(p: u64, m: u32) -> Result<Vec<u64>> {
    if m == 1 {
        // x - g for the smallest primitive root g, so that z = g generates GF(p)*.
        let g = smallest_primitive_root(p);
        return Ok(vec![(p - g) % p, 1]);
    }
    let q = p.checked_pow(m).ok_or(Error::FieldTooLarge(u64::MAX))?;
    if q > 1 << 16 {
        return Err(Error::NoBuiltinModulus { p, m });
    }
    let lower = p.pow(m - 1); // ensure low part nonzero in constant term handled below
    let _ = lower;
    for v in 0..p.pow(m) {
        let mut digits = unpack(v, p, m);
        if digits[0] == 0 {
            continue; // divisible by x
        }
        digits.push(1); // monic
        if is_irreducible(&digits, p) {
            return Ok(digits);
        }
    }
    Err(Error::NoBuiltinModulus { p, m })
}

impl Field {
    /// GF(p^m) with the deterministic built-in modulus.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        let modulus = builtin_modulus_checked(p, m)?;
        Field::with_modulus(p, m, &modulus)
    }

    /// GF(p) shorthand.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    /// GF(p^m) with an explicit monic modulus (little-endian digits, length m+1).
    pub fn with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || modulus.len() != m as usize + 1 {
            return Err(Error::BadModulusDegree {
                expected: m as usize,
                got: modulus.len().saturating_sub(1),
            });
        }
        let modulus: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        if *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulusDegree {
                expected: m as usize,
                got: modulus.len() - 1,
            });
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::FieldTooLarge(p.saturating_pow(m)))?;
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }

        // find a multiplicative generator by enumeration order
        let mut factors = Vec::new();
        let mut n = q - 1;
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                factors.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        let mut gen = 0u32;
        'cand: for v in 1..q {
            let digits = unpack(v, p, m);
            if q == 2 {
                gen = 1;
                break;
            }
            for &f in &factors {
                let e = (q - 1) / f;
                let r = raw::pow(&digits, e, &modulus, p);
                if pack(&r, p) == 1 {
                    continue 'cand;
                }
            }
            gen = v as u32;
            break;
        }

        let gen_digits = unpack(gen as u64, p, m);
        let mut exp = Vec::with_capacity(2 * (q as usize - 1));
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; m as usize];
        cur[0] = 1;
        for k in 0..(q - 1) {
            let v = pack(&cur, p);
            exp.push(v);
            log[v as usize] = k as u32;
            cur = raw::mul(&cur, &gen_digits, &modulus, p);
        }
        debug_assert_eq!(pack(&cur, p), 1, "generator order must be q-1");
        exp.extend_from_slice(&exp.clone());

        let z = if m == 1 {
            // z is the root of x - g, i.e. the primitive root itself
            ((p - modulus[0]) % p) as u32
        } else {
            p as u32 // the polynomial "x"
        };

        Ok(Field {
            data: Arc::new(FieldData {
                p,
                m,
                q,
                modulus,
                exp,
                log,
                gen,
                z,
            }),
        })
    }

    /// Parse "p", "p^m" or "p^m:c0,c1,...,cm" into a field.
    pub fn parse_spec(spec: &str) -> Result<Field> {
        let (base, modulus) = match spec.split_once(':') {
            Some((b, m)) => (b, Some(m)),
            None => (spec, None),
        };
        let (p, m) = match base.split_once('^') {
            Some((p, m)) => (
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::BadFieldLiteral(spec.into()))?,
                m.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::BadFieldLiteral(spec.into()))?,
            ),
            None => {
                // allow a prime power like "4" or "32"
                let q = base
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::BadFieldLiteral(spec.into()))?;
                if q < 2 {
                    return Err(Error::BadFieldLiteral(spec.into()));
                }
                let p = (2..=q).find(|d| q % d == 0).unwrap();
                let mut m = 0u32;
                let mut t = q;
                while t % p == 0 {
                    t /= p;
                    m += 1;
                }
                if t != 1 {
                    return Err(Error::BadFieldLiteral(spec.into()));
                }
                (p, m)
            }
        };
        match modulus {
            None => Field::new(p, m),
            Some(list) => {
                let digits: Vec<u64> = list
                    .split(',')
                    .map(|s| s.trim().parse::<u64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::BadFieldLiteral(spec.into()))?;
                Field::with_modulus(p, m, &digits)
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.data.p
    }
    pub fn m(&self) -> u32 {
        self.data.m
    }
    pub fn q(&self) -> u64 {
        self.data.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.data.modulus
    }
    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }
    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }
    /// The modulus root z (for m = 1, the chosen primitive root).
    pub fn z(&self) -> FieldElement {
        FieldElement(self.data.z)
    }
    /// The table generator (smallest primitive element in enumeration order).
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.data.gen)
    }

    pub fn element(&self, v: u64) -> Result<FieldElement> {
        if v < self.data.q {
            Ok(FieldElement(v as u32))
        } else {
            Err(Error::BadFieldLiteral(v.to_string()))
        }
    }

    /// All q elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.data.q as u32).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let d = &*self.data;
        if d.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let mut out = 0u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut mult = 1u64;
        for _ in 0..d.m {
            out += (x % d.p + y % d.p) % d.p * mult;
            x /= d.p;
            y /= d.p;
            mult *= d.p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let d = &*self.data;
        if d.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut x = a.0 as u64;
        let mut mult = 1u64;
        for _ in 0..d.m {
            out += (d.p - x % d.p) % d.p * mult;
            x /= d.p;
            mult *= d.p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let d = &*self.data;
        FieldElement(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "division by zero");
        let d = &*self.data;
        let l = d.log[a.0 as usize] as usize;
        FieldElement(d.exp[(d.q as usize - 1 - l) % (d.q as usize - 1)])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let d = &*self.data;
        let l = d.log[a.0 as usize] as u64;
        let k = (l * (e % (d.q - 1))) % (d.q - 1);
        FieldElement(d.exp[k as usize])
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.data.p)
    }

    /// x with x^2 = -1, smallest in enumeration order; absent iff q = 3 mod 4.
    pub fn solve_sqrt_neg1(&self) -> Option<FieldElement> {
        let minus_one = self.neg(FieldElement::ONE);
        self.elements().find(|&x| self.mul(x, x) == minus_one)
    }

    /// (x, y) with x^2 + y^2 = -1, smallest pair in (x, y) enumeration order.
    /// Always solvable over a finite field.
    pub fn solve_two_squares_neg1(&self) -> (FieldElement, FieldElement) {
        let minus_one = self.neg(FieldElement::ONE);
        for x in self.elements() {
            let need = self.sub(minus_one, self.mul(x, x));
            for y in self.elements() {
                if self.mul(y, y) == need {
                    return (x, y);
                }
            }
        }
        unreachable!("x^2 + y^2 = -1 is always solvable over a finite field")
    }

    /// Canonical literal: the packed decimal value.
    pub fn fmt_element(&self, a: FieldElement) -> String {
        a.0.to_string()
    }

    /// Pretty form: 0, 1, z, z^k when a is a power of z, else the decimal.
    pub fn fmt_element_pretty(&self, a: FieldElement) -> String {
        if a.0 == 0 {
            return "0".into();
        }
        if a.0 == 1 {
            return "1".into();
        }
        let z = self.z();
        if !z.is_zero() && z.0 != 1 {
            let mut acc = z;
            for k in 1..self.data.q {
                if acc == a {
                    return if k == 1 { "z".into() } else { format!("z^{}", k) };
                }
                acc = self.mul(acc, z);
            }
        }
        a.0.to_string()
    }

    /// Parse "0", a decimal packed value, "z" or "z^k".
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s == "z" {
            return Ok(self.z());
        }
        if let Some(k) = s.strip_prefix("z^") {
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| Error::BadFieldLiteral(s.into()))?;
            return Ok(self.pow(self.z(), k));
        }
        let v: u64 = s.parse().map_err(|_| Error::BadFieldLiteral(s.into()))?;
        self.element(v)
    }
}

fn builtin_modulus_checked(p: u64, m: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    builtin_modulus(p, m)
}
