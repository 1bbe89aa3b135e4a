//! Arithmetic in the group algebra KG, the coefficient-vector isomorphism to
//! K^n, the Euclidean form on tuples, and the central primitive idempotents.
//!
//! The idempotent computation makes no semisimplicity assumption. It splits
//! central idempotents by factoring minimal polynomials of central elements
//! (class sums first, then seeded random combinations) and certifies
//! completeness by counting: the number of blocks equals the dimension of the
//! Frobenius-fixed subspace of Z(KG) modulo its nilradical.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::FiniteGroup;
use crate::linalg::{Mat, SpanTracker};
use crate::poly::{self, Poly};

/// An element of KG: one coefficient per group element, in the group ordering.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraElement {
    pub coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Number of nonzero coefficients; equals wt of the phi image by definition.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

/// KG for a fixed field and group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebra {
    pub field: Field,
    pub group: FiniteGroup,
}

impl GroupAlgebra {
    pub fn new(field: Field, group: FiniteGroup) -> GroupAlgebra {
        GroupAlgebra { field, group }
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: vec![FieldElement::ZERO; self.dim()],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(self.group.identity())
    }

    /// The group element g as an algebra element.
    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        let mut coeffs = vec![FieldElement::ZERO; self.dim()];
        coeffs[g] = FieldElement::ONE;
        AlgebraElement { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElement>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::BadLength {
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        Ok(AlgebraElement { coeffs })
    }

    /// Sum of the group elements in `support`, each with coefficient 1.
    pub fn from_support(&self, support: &[usize]) -> AlgebraElement {
        let mut coeffs = vec![FieldElement::ZERO; self.dim()];
        for &g in support {
            coeffs[g] = self.field.add(coeffs[g], FieldElement::ONE);
        }
        AlgebraElement { coeffs }
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.field.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.field.sub(x, y))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: FieldElement, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: a.coeffs.iter().map(|&x| self.field.mul(c, x)).collect(),
        }
    }

    /// Convolution product: (ab)_g = sum_h a_h b_{h^-1 g}.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let k = self.group.mul(i, j);
                out[k] = f.add(out[k], f.mul(ai, bj));
            }
        }
        AlgebraElement { coeffs: out }
    }

    pub fn pow(&self, a: &AlgebraElement, mut e: u64) -> AlgebraElement {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// The coefficient vector in the fixed group ordering (Hamming-weight
    /// preserving by construction).
    pub fn phi(&self, a: &AlgebraElement) -> Vec<FieldElement> {
        a.coeffs.clone()
    }

    pub fn phi_inv(&self, v: &[FieldElement]) -> Result<AlgebraElement> {
        self.from_coeffs(v.to_vec())
    }

    /// The antipode: sum a_g g  ->  sum a_g g^-1.
    pub fn antipode(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut coeffs = vec![FieldElement::ZERO; self.dim()];
        for (g, &c) in a.coeffs.iter().enumerate() {
            coeffs[self.group.inv(g)] = c;
        }
        AlgebraElement { coeffs }
    }

    /// Euclidean form on KG^l: sum over components of the standard inner
    /// product of coefficient vectors.
    pub fn euclidean_form(
        &self,
        a: &[AlgebraElement],
        b: &[AlgebraElement],
    ) -> Result<FieldElement> {
        if a.len() != b.len() {
            return Err(Error::BadLength {
                expected: a.len(),
                got: b.len(),
            });
        }
        let f = &self.field;
        let mut acc = FieldElement::ZERO;
        for (x, y) in a.iter().zip(b) {
            if x.coeffs.len() != self.dim() || y.coeffs.len() != self.dim() {
                return Err(Error::AlgebraMismatch);
            }
            for (&xc, &yc) in x.coeffs.iter().zip(&y.coeffs) {
                acc = f.add(acc, f.mul(xc, yc));
            }
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self, a: &AlgebraElement) -> bool {
        self.mul(a, a) == *a
    }

    /// Central: commutes with every group basis element.
    pub fn is_central(&self, a: &AlgebraElement) -> bool {
        (0..self.dim()).all(|g| {
            let e = self.basis_element(g);
            self.mul(a, &e) == self.mul(&e, a)
        })
    }

    /// Conjugacy classes of the group, each ascending, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let g = &self.group;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut class = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                class.push(x);
                for h in 0..n {
                    let y = g.mul(g.mul(g.inv(h), x), h);
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// Class sums: the canonical basis of the center Z(KG).
    pub fn class_sums(&self) -> Vec<AlgebraElement> {
        self.conjugacy_classes()
            .iter()
            .map(|c| self.from_support(c))
            .collect()
    }

    /// Coordinates of a central element in the class-sum basis (class supports
    /// are disjoint, so this reads one coefficient per class).
    fn central_coords(&self, classes: &[Vec<usize>], a: &AlgebraElement) -> Vec<FieldElement> {
        classes.iter().map(|c| a.coeffs[c[0]]).collect()
    }

    /// Number of blocks: dim of the Frobenius-fixed subspace of Z(KG)/nilradical.
    fn block_count_certificate(&self, classes: &[Vec<usize>], sums: &[AlgebraElement]) -> usize {
        let f = &self.field;
        let zdim = sums.len();
        let q = f.q();
        // matrix of F: z -> z^q on Z in the class-sum basis (columns = images)
        let mut fm = Mat::zeros(f.clone(), zdim, zdim);
        for (j, s) in sums.iter().enumerate() {
            let img = self.pow(s, q);
            for (i, c) in self.central_coords(classes, &img).into_iter().enumerate() {
                fm.set(i, j, c);
            }
        }
        // nilradical = kernel of F^t once q^t >= zdim
        let mut t = 0u32;
        let mut qt = 1u64;
        while qt < zdim as u64 {
            qt = qt.saturating_mul(q);
            t += 1;
        }
        let mut ft = Mat::zeros(f.clone(), zdim, zdim);
        for i in 0..zdim {
            ft.set(i, i, FieldElement::ONE);
        }
        for _ in 0..t.max(1) {
            ft = fm.mul(&ft);
        }
        let nil = ft.kernel(); // rows = basis of nilradical in class-sum coordinates
        let nil_dim = nil.rows;
        // quotient matrix of F on Z/N: extend nil basis to a full basis
        let mut full = SpanTracker::new(f.clone(), zdim);
        for i in 0..nil.rows {
            full.insert(nil.row(i));
        }
        let mut complement: Vec<Vec<FieldElement>> = Vec::new();
        for j in 0..zdim {
            let mut e = vec![FieldElement::ZERO; zdim];
            e[j] = FieldElement::ONE;
            if full.insert(&e) {
                complement.push(e);
            }
        }
        let cdim = complement.len();
        debug_assert_eq!(nil_dim + cdim, zdim);
        // basis-change matrix rows: nil rows then complement rows
        let mut basis_rows: Vec<Vec<FieldElement>> = Vec::new();
        for i in 0..nil.rows {
            basis_rows.push(nil.row(i).to_vec());
        }
        basis_rows.extend(complement.iter().cloned());
        let basis = Mat::from_rows(f.clone(), zdim, basis_rows);
        // images of complement vectors under F, in the new basis; keep the
        // complement components (the quotient action)
        let mut quo = Mat::zeros(f.clone(), cdim, cdim);
        for (jj, v) in complement.iter().enumerate() {
            // F * v (v given in class-sum coords, as a column)
            let mut img = vec![FieldElement::ZERO; zdim];
            for i in 0..zdim {
                let mut acc = FieldElement::ZERO;
                for k in 0..zdim {
                    acc = f.add(acc, f.mul(fm.at(i, k), v[k]));
                }
                img[i] = acc;
            }
            let x = basis
                .solve_row_combination(&img)
                .expect("image lies in the span of the full basis");
            for ii in 0..cdim {
                quo.set(ii, jj, x[nil_dim + ii]);
            }
        }
        // fixed space of the quotient Frobenius: kernel of (quo - I)
        let mut shifted = quo;
        for i in 0..cdim {
            let v = f.sub(shifted.at(i, i), FieldElement::ONE);
            shifted.set(i, i, v);
        }
        shifted.kernel().rows
    }

    /// The complete set of central primitive idempotents, sorted so that the
    /// packed phi vectors descend (this reproduces the customary f0, f1, …
    /// labelling where f0 is the block containing the all-group sum).
    pub fn central_primitive_idempotents(&self) -> Vec<AlgebraElement> {
        let f = self.field.clone();
        let classes = self.conjugacy_classes();
        let sums = self.class_sums();
        let target = self.block_count_certificate(&classes, &sums);
        let q = f.q();
        let dim = self.dim();
        let mut t = 0u32;
        let mut qt = 1u64;
        while qt < dim as u64 {
            qt = qt.saturating_mul(q);
            t += 1;
        }
        let finalize = |e: &AlgebraElement| -> AlgebraElement {
            // q-power map fixes idempotents and kills nilpotent error terms
            let mut cur = e.clone();
            for _ in 0..=t {
                cur = self.pow(&cur, q);
            }
            cur
        };

        let mut idems = vec![self.one()];
        let mut rng = ChaCha8Rng::seed_from_u64(0x51dc_0de5);
        let mut rounds = 0usize;
        while idems.len() < target {
            rounds += 1;
            assert!(
                rounds < 1000,
                "idempotent search failed to reach the certified block count"
            );
            let mut progressed = false;
            'split: for pos in 0..idems.len() {
                let e = idems[pos].clone();
                // candidates: class sums first, then random central combinations
                let mut candidates: Vec<AlgebraElement> = sums.clone();
                for _ in 0..4 * rounds {
                    let mut z = self.zero();
                    for s in &sums {
                        let c = FieldElement(rng.gen_range(0..q) as u32);
                        z = self.add(&z, &self.scalar_mul(c, s));
                    }
                    candidates.push(z);
                }
                for z in &candidates {
                    let x = self.mul(&self.mul(&e, z), &e);
                    let Some(parts) = self.split_by_minimal_poly(&e, &x) else {
                        continue;
                    };
                    let parts: Vec<AlgebraElement> =
                        parts.iter().map(&finalize).collect();
                    debug_assert!(parts.iter().all(|p| self.is_idempotent(p)));
                    idems.splice(pos..=pos, parts);
                    progressed = true;
                    break 'split;
                }
            }
            let _ = progressed;
        }
        // order: descending packed phi vector (first coordinate least significant)
        idems.sort_by(|a, b| packed_key(&f, b).cmp(&packed_key(&f, a)));
        debug_assert!(self.idempotent_set_valid(&idems));
        idems
    }

    /// Split e along the coprime factor-power components of the minimal
    /// polynomial of x inside e·Z(KG); None when the polynomial has a single
    /// component (no split from this candidate).
    fn split_by_minimal_poly(
        &self,
        e: &AlgebraElement,
        x: &AlgebraElement,
    ) -> Option<Vec<AlgebraElement>> {
        let f = &self.field;
        // minimal polynomial: first linear dependency among e, x, x^2, ...
        let mut tracker = SpanTracker::new(f.clone(), self.dim());
        let mut powers: Vec<AlgebraElement> = Vec::new();
        let mut cur = e.clone();
        loop {
            if !tracker.insert(&cur.coeffs) {
                break;
            }
            powers.push(cur.clone());
            cur = self.mul(&cur, x);
        }
        let deg = powers.len();
        // express cur (= x^deg with x^0 := e) over the stored powers
        let mat = Mat::from_rows(
            f.clone(),
            self.dim(),
            powers.iter().map(|p| p.coeffs.clone()).collect(),
        );
        let combo = mat.solve_row_combination(&cur.coeffs)?;
        // minimal polynomial mu = y^deg - sum combo_i y^i
        let mut mu = vec![FieldElement::ZERO; deg + 1];
        mu[deg] = FieldElement::ONE;
        for (i, &c) in combo.iter().enumerate() {
            mu[i] = f.neg(c);
        }
        let mu = Poly::from_coeffs(mu);
        let factors = poly::factor(f, &mu);
        if factors.len() < 2 {
            return None;
        }
        // CRT idempotents of K[y]/(mu): u_i = M_i * (M_i^{-1} mod m_i^{e_i})
        let mut out = Vec::with_capacity(factors.len());
        for (p, mult) in &factors {
            let mut pe = Poly::constant(FieldElement::ONE);
            for _ in 0..*mult {
                pe = poly::mul(f, &pe, p);
            }
            let (mi, rem0) = poly::divmod(f, &mu, &pe);
            debug_assert!(rem0.is_zero());
            let (g, s, _) = poly::ext_gcd(f, &mi, &pe);
            debug_assert_eq!(g.degree(), 0);
            let ginv = f.inv(g.0[0]);
            let u = poly::rem(f, &poly::mul(f, &poly::scale(f, &s, ginv), &mi), &mu);
            // evaluate u at x with unit e (Horner)
            let mut acc = self.zero();
            for &c in u.0.iter().rev() {
                acc = self.mul(&acc, x);
                acc = self.add(&acc, &self.scalar_mul(c, e));
            }
            out.push(acc);
        }
        Some(out)
    }

    /// All IdempotentSet invariants: idempotent, pairwise orthogonal, central,
    /// complete.
    pub fn idempotent_set_valid(&self, idems: &[AlgebraElement]) -> bool {
        let mut sum = self.zero();
        for (i, e) in idems.iter().enumerate() {
            if !self.is_idempotent(e) || !self.is_central(e) {
                return false;
            }
            for e2 in idems.iter().skip(i + 1) {
                if !self.mul(e, e2).is_zero() {
                    return false;
                }
            }
            sum = self.add(&sum, e);
        }
        sum == self.one()
    }

    /// Render an element as a symbolic sum over group labels.
    pub fn fmt_element(&self, a: &AlgebraElement) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (g, &c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.group.label(g);
            if c == FieldElement::ONE {
                terms.push(label.to_string());
            } else {
                terms.push(format!("{}*{}", self.field.fmt_element_pretty(c), label));
            }
        }
        terms.join(" + ")
    }

    /// Parse either a list of field literals (one per group element) or a
    /// symbolic sum of group labels like "1 + a + a^2".
    pub fn parse_element(&self, s: &str) -> Result<AlgebraElement> {
        let s = s.trim();
        if s == "0" {
            return Ok(self.zero());
        }
        if s.contains('+') || (0..self.dim()).any(|g| self.group.label(g) == s) {
            let mut out = self.zero();
            for term in s.split('+') {
                let term = term.trim();
                let (coeff, label) = match term.split_once('*') {
                    Some((c, l)) => (self.field.parse_element(c.trim())?, l.trim()),
                    None => (FieldElement::ONE, term),
                };
                let g = (0..self.dim())
                    .find(|&g| self.group.label(g) == label)
                    .ok_or_else(|| Error::BadRingLiteral(s.into()))?;
                out.coeffs[g] = self.field.add(out.coeffs[g], coeff);
            }
            return Ok(out);
        }
        let parts: Vec<&str> = s.split_whitespace().collect();
        let coeffs: Result<Vec<FieldElement>> = parts
            .iter()
            .map(|t| self.field.parse_element(t))
            .collect();
        self.from_coeffs(coeffs?)
    }
}

/// Packed base-q integer value of a coefficient vector, first coordinate least
/// significant. Used for deterministic ordering of idempotents.
fn packed_key(field: &Field, a: &AlgebraElement) -> Vec<u64> {
    // little-endian limbs of sum coeff_i * q^i, big integers avoided by
    // comparing reversed digit sequences instead
    let q = field.q();
    let _ = q;
    a.coeffs.iter().rev().map(|c| c.0 as u64).collect()
}
