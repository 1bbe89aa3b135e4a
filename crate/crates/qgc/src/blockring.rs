//! Blocks B_i = f_i·KG as explicit rings, abstract presentations (F + uF with
//! u² = 0, and full matrix rings over extension fields), and verified K-linear
//! ring isomorphisms into the blocks that power concatenation.
//!
//! Outer codes follow the right-module convention: the codewords of an outer
//! code with rows r_1, …, r_s are exactly the sums Σ r_j·x_j with x_j ranging
//! over the ring, scalars acting on the right of every component.

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{Mat, SpanTracker};

/// Abstract ring shape: F + uF (u² = 0) or a k×k matrix ring over F.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingKind {
    FieldPlusU,
    MatrixRing { k: usize },
}

/// An abstract presentation over an extension field `ext` of the base field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingPresentation {
    pub kind: RingKind,
    pub base: Field,
    pub ext: Field,
}

/// An element of a presented ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingElement {
    /// a + u·b with u² = 0.
    Pair(FieldElement, FieldElement),
    /// k×k row-major entries.
    Matrix(Vec<FieldElement>),
}

impl RingPresentation {
    pub fn field_plus_u(base: Field, ext: Field) -> Result<RingPresentation> {
        check_ext(&base, &ext)?;
        Ok(RingPresentation {
            kind: RingKind::FieldPlusU,
            base,
            ext,
        })
    }

    pub fn matrix_ring(base: Field, ext: Field, k: usize) -> Result<RingPresentation> {
        if k == 0 {
            return Err(Error::UnsupportedRing("matrix ring of size 0".into()));
        }
        check_ext(&base, &ext)?;
        Ok(RingPresentation {
            kind: RingKind::MatrixRing { k },
            base,
            ext,
        })
    }

    /// Parse "pair:q" (F_q + u F_q) or "matrix:k:q" (M_k(F_q)).
    pub fn parse(spec: &str, base: &Field) -> Result<RingPresentation> {
        let parts: Vec<&str> = spec.split(':').collect();
        match parts.as_slice() {
            ["pair", q] => {
                let ext = Field::parse_spec(q)?;
                RingPresentation::field_plus_u(base.clone(), ext)
            }
            ["matrix", k, q] => {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::UnsupportedRing(spec.into()))?;
                let ext = Field::parse_spec(q)?;
                RingPresentation::matrix_ring(base.clone(), ext, k)
            }
            _ => Err(Error::UnsupportedRing(spec.into())),
        }
    }

    pub fn spec_string(&self) -> String {
        match self.kind {
            RingKind::FieldPlusU => format!("pair:{}", self.ext.q()),
            RingKind::MatrixRing { k } => format!("matrix:{}:{}", k, self.ext.q()),
        }
    }

    /// Extension degree [F : K].
    pub fn ext_degree(&self) -> usize {
        (self.ext.m() / self.base.m()) as usize
    }

    /// Dimension over the base field K.
    pub fn dim_k(&self) -> usize {
        match self.kind {
            RingKind::FieldPlusU => 2 * self.ext_degree(),
            RingKind::MatrixRing { k } => k * k * self.ext_degree(),
        }
    }

    pub fn zero(&self) -> RingElement {
        match self.kind {
            RingKind::FieldPlusU => RingElement::Pair(FieldElement::ZERO, FieldElement::ZERO),
            RingKind::MatrixRing { k } => RingElement::Matrix(vec![FieldElement::ZERO; k * k]),
        }
    }

    pub fn one(&self) -> RingElement {
        match self.kind {
            RingKind::FieldPlusU => RingElement::Pair(FieldElement::ONE, FieldElement::ZERO),
            RingKind::MatrixRing { k } => {
                let mut m = vec![FieldElement::ZERO; k * k];
                for i in 0..k {
                    m[i * k + i] = FieldElement::ONE;
                }
                RingElement::Matrix(m)
            }
        }
    }

    pub fn is_zero(&self, x: &RingElement) -> bool {
        match x {
            RingElement::Pair(a, b) => a.is_zero() && b.is_zero(),
            RingElement::Matrix(m) => m.iter().all(|c| c.is_zero()),
        }
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let f = &self.ext;
        match (x, y) {
            (RingElement::Pair(a, b), RingElement::Pair(c, d)) => {
                RingElement::Pair(f.add(*a, *c), f.add(*b, *d))
            }
            (RingElement::Matrix(a), RingElement::Matrix(b)) => RingElement::Matrix(
                a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect(),
            ),
            _ => panic!("mixed ring elements"),
        }
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let f = &self.ext;
        match (&self.kind, x, y) {
            (RingKind::FieldPlusU, RingElement::Pair(a, b), RingElement::Pair(c, d)) => {
                // (a + ub)(c + ud) = ac + u(ad + bc)
                RingElement::Pair(f.mul(*a, *c), f.add(f.mul(*a, *d), f.mul(*b, *c)))
            }
            (RingKind::MatrixRing { k }, RingElement::Matrix(a), RingElement::Matrix(b)) => {
                let k = *k;
                let mut out = vec![FieldElement::ZERO; k * k];
                for i in 0..k {
                    for l in 0..k {
                        let v = a[i * k + l];
                        if v.is_zero() {
                            continue;
                        }
                        for j in 0..k {
                            out[i * k + j] = f.add(out[i * k + j], f.mul(v, b[l * k + j]));
                        }
                    }
                }
                RingElement::Matrix(out)
            }
            _ => panic!("ring element does not match presentation"),
        }
    }

    pub fn transpose(&self, x: &RingElement) -> RingElement {
        match (&self.kind, x) {
            (RingKind::MatrixRing { k }, RingElement::Matrix(a)) => {
                let k = *k;
                let mut out = vec![FieldElement::ZERO; k * k];
                for i in 0..k {
                    for j in 0..k {
                        out[j * k + i] = a[i * k + j];
                    }
                }
                RingElement::Matrix(out)
            }
            _ => x.clone(),
        }
    }

    /// K-basis in a fixed order: for pairs, 1·z^i then u·z^i; for matrix rings,
    /// E_rs·z^i in row-major entry order, z-power minor.
    pub fn k_basis(&self) -> Vec<RingElement> {
        let deg = self.ext_degree();
        let zpows: Vec<FieldElement> = (0..deg as u64).map(|i| self.ext.pow(self.ext.z(), i)).collect();
        match self.kind {
            RingKind::FieldPlusU => {
                let mut out = Vec::with_capacity(2 * deg);
                for &z in &zpows {
                    out.push(RingElement::Pair(z, FieldElement::ZERO));
                }
                for &z in &zpows {
                    out.push(RingElement::Pair(FieldElement::ZERO, z));
                }
                out
            }
            RingKind::MatrixRing { k } => {
                let mut out = Vec::with_capacity(k * k * deg);
                for e in 0..k * k {
                    for &z in &zpows {
                        let mut m = vec![FieldElement::ZERO; k * k];
                        m[e] = z;
                        out.push(RingElement::Matrix(m));
                    }
                }
                out
            }
        }
    }

    /// K-coordinates of an element in the `k_basis` order.
    pub fn coords(&self, x: &RingElement) -> Vec<FieldElement> {
        let deg = self.ext_degree();
        let expand = |c: FieldElement| -> Vec<FieldElement> {
            if deg == 1 {
                vec![c]
            } else {
                // base field is prime here (checked at construction): digits of
                // the packed value are the coordinates over K in the z-power basis
                let p = self.ext.p();
                let mut v = c.0 as u64;
                (0..deg)
                    .map(|_| {
                        let d = v % p;
                        v /= p;
                        FieldElement(d as u32)
                    })
                    .collect()
            }
        };
        match x {
            RingElement::Pair(a, b) => {
                let mut out = expand(*a);
                out.extend(expand(*b));
                out
            }
            RingElement::Matrix(m) => {
                let mut out = Vec::with_capacity(m.len() * deg);
                for &c in m {
                    out.extend(expand(c));
                }
                out
            }
        }
    }

    /// Parse "(a,b)" for pairs or "[[a,b],[c,d]]" for matrices; entries use
    /// field literals over the extension field (decimal packed or z-powers).
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        let s = s.trim();
        match &self.kind {
            RingKind::FieldPlusU => {
                let body = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::BadRingLiteral(s.into()))?;
                let parts: Vec<&str> = body.split(',').collect();
                if parts.len() != 2 {
                    return Err(Error::BadRingLiteral(s.into()));
                }
                Ok(RingElement::Pair(
                    self.ext.parse_element(parts[0])?,
                    self.ext.parse_element(parts[1])?,
                ))
            }
            RingKind::MatrixRing { k } => {
                let body = s
                    .strip_prefix("[[")
                    .and_then(|t| t.strip_suffix("]]"))
                    .ok_or_else(|| Error::BadRingLiteral(s.into()))?;
                let rows: Vec<&str> = body.split("],[").collect();
                if rows.len() != *k {
                    return Err(Error::BadRingLiteral(s.into()));
                }
                let mut out = Vec::with_capacity(k * k);
                for row in rows {
                    let entries: Vec<&str> = row.split(',').collect();
                    if entries.len() != *k {
                        return Err(Error::BadRingLiteral(s.into()));
                    }
                    for e in entries {
                        out.push(self.ext.parse_element(e)?);
                    }
                }
                Ok(RingElement::Matrix(out))
            }
        }
    }

    pub fn fmt_element(&self, x: &RingElement) -> String {
        match x {
            RingElement::Pair(a, b) => format!(
                "({},{})",
                self.ext.fmt_element_pretty(*a),
                self.ext.fmt_element_pretty(*b)
            ),
            RingElement::Matrix(m) => {
                let k = match self.kind {
                    RingKind::MatrixRing { k } => k,
                    _ => unreachable!(),
                };
                let rows: Vec<String> = (0..k)
                    .map(|i| {
                        let entries: Vec<String> = (0..k)
                            .map(|j| self.ext.fmt_element_pretty(m[i * k + j]))
                            .collect();
                        format!("[{}]", entries.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
        }
    }
}

fn check_ext(base: &Field, ext: &Field) -> Result<()> {
    if base == ext {
        return Ok(());
    }
    if base.p() != ext.p() || base.m() != 1 || ext.m() % base.m() != 0 {
        return Err(Error::UnsupportedRing(format!(
            "extension GF({}) over GF({}) needs an explicit subfield embedding",
            ext.q(),
            base.q()
        )));
    }
    Ok(())
}

/// A block B = f·KG with its row-reduced K-basis.
#[derive(Clone, Debug)]
pub struct BlockRing {
    pub algebra: GroupAlgebra,
    pub idem: AlgebraElement,
    basis: Vec<AlgebraElement>,
}

impl BlockRing {
    /// Build the block of a central idempotent by row-reducing {f·g : g in G}.
    pub fn new(algebra: &GroupAlgebra, f: &AlgebraElement) -> Result<BlockRing> {
        if !algebra.is_idempotent(f) || !algebra.is_central(f) {
            return Err(Error::NotCentralIdempotent);
        }
        let n = algebra.dim();
        let mut span = SpanTracker::new(algebra.field.clone(), n);
        for g in 0..n {
            let row = algebra.mul(f, &algebra.basis_element(g));
            span.insert(&row.coeffs);
        }
        let basis = span
            .basis_rows()
            .iter()
            .map(|r| AlgebraElement { coeffs: r.clone() })
            .collect();
        Ok(BlockRing {
            algebra: algebra.clone(),
            idem: f.clone(),
            basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[AlgebraElement] {
        &self.basis
    }

    pub fn contains(&self, a: &AlgebraElement) -> bool {
        // f acts as the identity on the block
        self.algebra.mul(&self.idem, a) == *a
    }

    /// The block as a linear code of length |G| (phi images of the basis).
    pub fn block_code(&self) -> crate::code::LinearCode {
        crate::code::LinearCode::from_rows(
            self.algebra.field.clone(),
            self.algebra.dim(),
            self.basis.iter().map(|b| b.coeffs.clone()).collect(),
        )
    }
}

/// A verified K-linear unital ring isomorphism from a presentation onto a block.
#[derive(Clone, Debug)]
pub struct ConcatenationMap {
    pub ring: RingPresentation,
    pub block: BlockRing,
    /// Images of the presentation's `k_basis`, as algebra elements.
    basis_images: Vec<AlgebraElement>,
}

impl ConcatenationMap {
    /// Close the given generator images under ring multiplication and K-linear
    /// span until a full K-basis of the presentation is matched, then verify
    /// unitality, multiplicativity on a basis-pair grid, and injectivity.
    pub fn hom_completion(
        ring: RingPresentation,
        block: BlockRing,
        generators: &[(RingElement, AlgebraElement)],
    ) -> Result<ConcatenationMap> {
        let dim = ring.dim_k();
        if dim != block.dim() {
            return Err(Error::DimensionMismatch {
                ring: dim,
                block: block.dim(),
            });
        }
        let alg = block.algebra.clone();
        let n = alg.dim();
        let base = ring.base.clone();

        // matched pairs; spans over the source coordinates alone and over
        // [source | image] jointly, so a repeated source with a different
        // image is rejected on first sight
        let mut pairs: Vec<(RingElement, AlgebraElement)> = Vec::new();
        let mut src_span = SpanTracker::new(base.clone(), dim);
        let mut joint = SpanTracker::new(base.clone(), dim + n);
        fn add_pair(
            ring: &RingPresentation,
            src_span: &mut SpanTracker,
            joint: &mut SpanTracker,
            pairs: &mut Vec<(RingElement, AlgebraElement)>,
            x: RingElement,
            y: AlgebraElement,
        ) -> Result<bool> {
            let src = ring.coords(&x);
            let mut row = src.clone();
            row.extend(y.coeffs.iter().copied());
            if src_span.contains(&src) {
                if joint.contains(&row) {
                    Ok(false)
                } else {
                    Err(Error::InconsistentImages)
                }
            } else {
                src_span.insert(&src);
                joint.insert(&row);
                pairs.push((x, y));
                Ok(true)
            }
        }

        for (x, y) in generators {
            if !block.contains(y) {
                return Err(Error::InconsistentImages);
            }
            add_pair(&ring, &mut src_span, &mut joint, &mut pairs, x.clone(), y.clone())?;
        }
        // multiplicative closure
        while src_span.dim() < dim {
            let mut grew = false;
            let len = pairs.len();
            'products: for a in 0..len {
                for b in 0..len {
                    let xc = ring.mul(&pairs[a].0, &pairs[b].0);
                    let yc = alg.mul(&pairs[a].1, &pairs[b].1);
                    if add_pair(&ring, &mut src_span, &mut joint, &mut pairs, xc, yc)? {
                        grew = true;
                    }
                    if src_span.dim() == dim {
                        break 'products;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        if src_span.dim() < dim {
            return Err(Error::IncompleteSpan {
                expected: dim,
                got: src_span.dim(),
            });
        }

        // solve images for the canonical k_basis
        let src_mat = Mat::from_rows(
            base.clone(),
            dim,
            pairs.iter().map(|(x, _)| ring.coords(x)).collect(),
        );
        let mut basis_images = Vec::with_capacity(dim);
        for b in ring.k_basis() {
            let combo = src_mat
                .solve_row_combination(&ring.coords(&b))
                .ok_or(Error::InconsistentImages)?;
            let mut img = alg.zero();
            for (c, (_, y)) in combo.into_iter().zip(&pairs) {
                if !c.is_zero() {
                    img = alg.add(&img, &alg.scalar_mul(c, y));
                }
            }
            basis_images.push(img);
        }
        let map = ConcatenationMap {
            ring,
            block,
            basis_images,
        };
        map.verify()?;
        Ok(map)
    }

    fn verify(&self) -> Result<()> {
        let alg = &self.block.algebra;
        // unitality
        if self.apply(&self.ring.one()) != self.block.idem {
            return Err(Error::NotUnital);
        }
        // multiplicativity on the full basis-pair grid
        let basis = self.ring.k_basis();
        for xa in &basis {
            for xb in &basis {
                let lhs = self.apply(&self.ring.mul(xa, xb));
                let rhs = alg.mul(&self.apply(xa), &self.apply(xb));
                if lhs != rhs {
                    return Err(Error::NotMultiplicative);
                }
            }
        }
        // injectivity: image rank equals the ring dimension
        let m = Mat::from_rows(
            alg.field.clone(),
            alg.dim(),
            self.basis_images.iter().map(|a| a.coeffs.clone()).collect(),
        );
        if m.rank() != self.ring.dim_k() {
            return Err(Error::NotInjective);
        }
        Ok(())
    }

    pub fn apply(&self, x: &RingElement) -> AlgebraElement {
        let alg = &self.block.algebra;
        let coords = self.ring.coords(x);
        let mut out = alg.zero();
        for (c, img) in coords.into_iter().zip(&self.basis_images) {
            if !c.is_zero() {
                out = alg.add(&out, &alg.scalar_mul(c, img));
            }
        }
        out
    }
}

/// An outer code over a presented ring: right spans of generator rows.
#[derive(Clone, Debug)]
pub struct OuterCode {
    pub ring: RingPresentation,
    pub len: usize,
    pub rows: Vec<Vec<RingElement>>,
}

impl OuterCode {
    pub fn new(ring: RingPresentation, len: usize, rows: Vec<Vec<RingElement>>) -> Result<OuterCode> {
        for r in &rows {
            if r.len() != len {
                return Err(Error::BadLength {
                    expected: len,
                    got: r.len(),
                });
            }
        }
        Ok(OuterCode { ring, len, rows })
    }

    /// K-spanning tuples: every row multiplied on the right by every K-basis
    /// element of the ring.
    pub fn k_spanning_tuples(&self) -> Vec<Vec<RingElement>> {
        let basis = self.ring.k_basis();
        let mut out = Vec::with_capacity(self.rows.len() * basis.len());
        for row in &self.rows {
            for b in &basis {
                out.push(row.iter().map(|e| self.ring.mul(e, b)).collect());
            }
        }
        out
    }

    /// K-coordinates of a tuple: concatenated ring coordinates per component.
    fn tuple_coords(&self, t: &[RingElement]) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(self.len * self.ring.dim_k());
        for e in t {
            out.extend(self.ring.coords(e));
        }
        out
    }

    /// K-dimension of the codeword set.
    pub fn span_dim_k(&self) -> usize {
        let cols = self.len * self.ring.dim_k();
        let mut span = SpanTracker::new(self.ring.base.clone(), cols);
        for t in self.k_spanning_tuples() {
            span.insert(&self.tuple_coords(&t));
        }
        span.dim()
    }

    /// Exact minimum Hamming distance over the ring alphabet (positions with a
    /// nonzero ring entry).
    pub fn min_ring_distance(&self) -> Option<usize> {
        let rows: Vec<Vec<FieldElement>> = self
            .k_spanning_tuples()
            .iter()
            .map(|t| self.tuple_coords(t))
            .collect();
        ring_alphabet_distance(&self.ring.base, self.ring.dim_k(), self.len, &rows)
    }
}

/// Exact minimum Hamming distance over a block alphabet of the code K-spanned
/// by `rows` in K^(len·comp_width), counting positions whose comp_width-wide
/// component is nonzero. Computed by support-subset rank tests: for each
/// candidate support, the codewords vanishing outside it form the kernel of a
/// K-linear system, so codewords are never enumerated. The first support size
/// with a nonzero kernel is exactly the distance.
pub fn ring_alphabet_distance(
    base: &Field,
    comp_width: usize,
    len: usize,
    rows: &[Vec<FieldElement>],
) -> Option<usize> {
    let cols = len * comp_width;
    let mut span = SpanTracker::new(base.clone(), cols);
    for r in rows {
        span.insert(r);
    }
    let k = span.dim();
    if k == 0 {
        return None;
    }
    let gen = Mat::from_rows(base.clone(), cols, span.basis_rows().to_vec());
    for w in 1..=len {
        for support in combinations(len, w) {
            // constraint: components outside the support are zero
            let mut outside = Vec::new();
            for pos in 0..len {
                if !support.contains(&pos) {
                    for j in 0..comp_width {
                        outside.push(pos * comp_width + j);
                    }
                }
            }
            let mut m = Mat::zeros(base.clone(), outside.len(), k);
            for (i, &c) in outside.iter().enumerate() {
                for r in 0..k {
                    m.set(i, r, gen.at(r, c));
                }
            }
            if m.kernel().rows > 0 {
                return Some(w);
            }
        }
    }
    None
}

fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(w);
    fn rec(n: usize, w: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == w {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            rec(n, w, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, w, 0, &mut cur, &mut out);
    out
}

/// Concatenate an outer code through a verified map: codewords are the tuples
/// (pi(c_1), …, pi(c_l)) flattened into length l·|G|.
pub fn concat(pi: &ConcatenationMap, outer: &OuterCode) -> Result<crate::code::LinearCode> {
    if pi.ring != outer.ring {
        return Err(Error::RingMismatch);
    }
    let alg = &pi.block.algebra;
    let n = alg.dim();
    let length = outer.len * n;
    let mut rows = Vec::new();
    for t in outer.k_spanning_tuples() {
        let mut row = Vec::with_capacity(length);
        for e in &t {
            row.extend(pi.apply(e).coeffs);
        }
        rows.push(row);
    }
    Ok(crate::code::LinearCode::from_rows(
        alg.field.clone(),
        length,
        rows,
    ))
}

/// Lower bound on the distance of a blockwise concatenation: with blocks sorted
/// ascending by block-code distance, min over occupied blocks of
/// d(outer_i) · d(B_(0) + … + B_(i)).
pub fn concat_distance_bound(
    blocks: &[BlockRing],
    outer_dist: &[Option<usize>],
) -> Result<usize> {
    assert_eq!(blocks.len(), outer_dist.len());
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    let dists: Vec<usize> = blocks
        .iter()
        .map(|b| {
            let code = b.block_code();
            code.min_distance(&crate::code::DistanceOptions::default())
                .map(|r| r.upper)
        })
        .collect::<Result<_>>()?;
    order.sort_by_key(|&i| dists[i]);
    let mut best: Option<usize> = None;
    let mut prefix: Option<crate::code::LinearCode> = None;
    for &i in &order {
        let code = blocks[i].block_code();
        prefix = Some(match prefix {
            None => code,
            Some(p) => p.sum(&code),
        });
        if let Some(d_outer) = outer_dist[i] {
            let p = prefix.as_ref().unwrap();
            let d_prefix = p
                .min_distance(&crate::code::DistanceOptions::default())?
                .upper;
            let term = d_outer * d_prefix;
            best = Some(best.map_or(term, |b| b.min(term)));
        }
    }
    best.ok_or(Error::ZeroCode)
}
