//! Dense univariate polynomials over GF(q): division, gcd, modular powers and
//! full factorization (squarefree split, distinct-degree, equal-degree).
//! Degrees here stay below the group order, so dense arithmetic is fine.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElement};

/// Little-endian coefficient vector, always trimmed of trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(pub Vec<FieldElement>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn constant(c: FieldElement) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    pub fn x() -> Poly {
        Poly(vec![FieldElement::ZERO, FieldElement::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> FieldElement {
        *self.0.last().expect("lead of zero polynomial")
    }
}

pub fn add(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    let mut out = vec![FieldElement::ZERO; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.0.get(i).copied().unwrap_or(FieldElement::ZERO);
        let y = b.0.get(i).copied().unwrap_or(FieldElement::ZERO);
        *o = f.add(x, y);
    }
    Poly::from_coeffs(out)
}

pub fn sub(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    let mut out = vec![FieldElement::ZERO; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.0.get(i).copied().unwrap_or(FieldElement::ZERO);
        let y = b.0.get(i).copied().unwrap_or(FieldElement::ZERO);
        *o = f.sub(x, y);
    }
    Poly::from_coeffs(out)
}

pub fn mul(f: &Field, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![FieldElement::ZERO; a.0.len() + b.0.len() - 1];
    for (i, &ai) in a.0.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.0.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ai, bj));
        }
    }
    Poly::from_coeffs(out)
}

pub fn scale(f: &Field, a: &Poly, c: FieldElement) -> Poly {
    Poly::from_coeffs(a.0.iter().map(|&x| f.mul(x, c)).collect())
}

/// (quotient, remainder) with b nonzero.
pub fn divmod(f: &Field, a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.degree() < b.degree() || a.is_zero() {
        return (Poly::zero(), a.clone());
    }
    let mut rem = a.0.clone();
    let db = b.degree();
    let inv_lead = f.inv(b.lead());
    let mut quot = vec![FieldElement::ZERO; a.degree() - db + 1];
    for k in (db..rem.len()).rev() {
        let c = f.mul(rem[k], inv_lead);
        if c.is_zero() {
            continue;
        }
        quot[k - db] = c;
        for (j, &bj) in b.0.iter().enumerate() {
            rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, bj));
        }
    }
    (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
}

pub fn rem(f: &Field, a: &Poly, b: &Poly) -> Poly {
    divmod(f, a, b).1
}

pub fn monic(f: &Field, a: &Poly) -> Poly {
    if a.is_zero() {
        return Poly::zero();
    }
    scale(f, a, f.inv(a.lead()))
}

pub fn gcd(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
pub fn ext_gcd(f: &Field, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::constant(FieldElement::ONE), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::constant(FieldElement::ONE));
    while !r1.is_zero() {
        let (q, r) = divmod(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (Poly::zero(), s0, t0);
    }
    let c = f.inv(r0.lead());
    (scale(f, &r0, c), scale(f, &s0, c), scale(f, &t0, c))
}

pub fn pow_mod(f: &Field, base: &Poly, mut e: u64, modulus: &Poly) -> Poly {
    let mut acc = Poly::constant(FieldElement::ONE);
    let mut b = rem(f, base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), modulus);
        }
        b = rem(f, &mul(f, &b, &b), modulus);
        e >>= 1;
    }
    acc
}

pub fn derivative(f: &Field, a: &Poly) -> Poly {
    if a.0.len() <= 1 {
        return Poly::zero();
    }
    let mut out = Vec::with_capacity(a.0.len() - 1);
    for (i, &c) in a.0.iter().enumerate().skip(1) {
        let mut k = FieldElement::ZERO;
        for _ in 0..(i as u64 % f.p()) {
            k = f.add(k, FieldElement::ONE);
        }
        out.push(f.mul(c, k));
    }
    Poly::from_coeffs(out)
}

/// p-th root of a polynomial of the form g(x^p) (all exponents divisible by p).
fn pth_root(f: &Field, a: &Poly) -> Poly {
    let p = f.p() as usize;
    let mut out = Vec::new();
    let mut i = 0;
    while i < a.0.len() {
        // coefficient root: c^(q/p) is the p-th root in GF(q)
        let e = f.q() / f.p();
        out.push(f.pow(a.0[i], e));
        i += p;
    }
    Poly::from_coeffs(out)
}

/// Full factorization into monic irreducibles with multiplicities.
/// Deterministic: the equal-degree splitting RNG is seeded per call.
pub fn factor(f: &Field, a: &Poly) -> Vec<(Poly, u32)> {
    assert!(!a.is_zero());
    let mut out: Vec<(Poly, u32)> = Vec::new();
    factor_rec(f, &monic(f, a), 1, &mut out);
    // canonical order: by degree, then coefficient tuple
    out.sort_by(|x, y| {
        x.0.degree()
            .cmp(&y.0.degree())
            .then_with(|| x.0 .0.cmp(&y.0 .0))
    });
    // merge duplicates
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (p, e) in out {
        if let Some(last) = merged.last_mut() {
            if last.0 == p {
                last.1 += e;
                continue;
            }
        }
        merged.push((p, e));
    }
    merged
}

fn factor_rec(f: &Field, a: &Poly, mult: u32, out: &mut Vec<(Poly, u32)>) {
    if a.degree() == 0 {
        return;
    }
    if a.degree() == 1 {
        out.push((a.clone(), mult));
        return;
    }
    let da = derivative(f, a);
    if da.is_zero() {
        // a = g(x^p): factor the p-th root with multiplicity * p
        let root = pth_root(f, a);
        factor_rec(f, &monic(f, &root), mult * f.p() as u32, out);
        return;
    }
    let g = gcd(f, a, &da);
    if g.degree() > 0 {
        let (sf, r) = divmod(f, a, &g);
        debug_assert!(r.is_zero());
        // sf is squarefree; factor it, then divide each factor out of g as often as possible
        let mut sub_out = Vec::new();
        factor_squarefree(f, &sf, &mut sub_out);
        let mut rest = g;
        for p in sub_out {
            let mut extra = 0;
            loop {
                let (q, r) = divmod(f, &rest, &p);
                if r.is_zero() {
                    rest = q;
                    extra += 1;
                } else {
                    break;
                }
            }
            out.push((p, mult * (1 + extra)));
        }
        if rest.degree() > 0 {
            factor_rec(f, &monic(f, &rest), mult, out);
        }
        return;
    }
    let mut sub_out = Vec::new();
    factor_squarefree(f, a, &mut sub_out);
    for p in sub_out {
        out.push((p, mult));
    }
}

/// Distinct-degree then equal-degree factorization of a squarefree monic polynomial.
fn factor_squarefree(f: &Field, a: &Poly, out: &mut Vec<Poly>) {
    let q = f.q();
    let mut rest = a.clone();
    let mut xq = pow_mod(f, &Poly::x(), q, &rest); // x^(q^1) mod rest
    let mut d = 1usize;
    while rest.degree() >= 2 * d {
        let split = gcd(f, &sub(f, &xq, &Poly::x()), &rest);
        if split.degree() > 0 {
            equal_degree(f, &split, d, out);
            let (qt, r) = divmod(f, &rest, &split);
            debug_assert!(r.is_zero());
            rest = qt;
            xq = rem(f, &xq, &rest);
        }
        d += 1;
        if rest.degree() < 2 * d {
            break;
        }
        xq = pow_mod(f, &xq, q, &rest);
    }
    if rest.degree() > 0 {
        out.push(rest);
    }
}

/// Cantor–Zassenhaus equal-degree splitting: `a` is a squarefree product of
/// irreducibles all of degree d.
fn equal_degree(f: &Field, a: &Poly, d: usize, out: &mut Vec<Poly>) {
    if a.degree() == d {
        out.push(a.clone());
        return;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9c6_0dd5 ^ (a.degree() as u64) << 8 ^ d as u64);
    let q = f.q();
    loop {
        let deg = a.degree() - 1;
        let h = Poly::from_coeffs(
            (0..=deg)
                .map(|_| FieldElement(rng.gen_range(0..q) as u32))
                .collect(),
        );
        if h.degree() == 0 || h.is_zero() {
            continue;
        }
        let g = if f.p() == 2 {
            // trace map over GF(2^k): T(h) = h + h^q + h^(q^2) + ... (d terms)
            let mut t = rem(f, &h, a);
            let mut acc = t.clone();
            for _ in 1..(d as u64 * f.m() as u64) {
                acc = rem(f, &mul(f, &acc, &acc), a); // square (p = 2)
                t = add(f, &t, &acc);
            }
            gcd(f, &t, a)
        } else {
            let e = (q.pow(d as u32) - 1) / 2;
            let hp = pow_mod(f, &h, e, a);
            gcd(f, &sub(f, &hp, &Poly::constant(FieldElement::ONE)), a)
        };
        if g.degree() > 0 && g.degree() < a.degree() {
            equal_degree(f, &g, d, out);
            let (qt, r) = divmod(f, a, &g);
            debug_assert!(r.is_zero());
            equal_degree(f, &qt, d, out);
            return;
        }
    }
}

pub fn eval(f: &Field, a: &Poly, x: FieldElement) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for &c in a.0.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}
