//! Quasi-G codes: right KG-submodules of KG^l, with blockwise assembly and
//! decomposition, free-action recognition in both directions, subgroup
//! restriction, duals, and the constructive self-duality criterion.
//!
//! Coordinates carry a labeling (block j, group element i); the underlying
//! linear code is never permuted, only relabeled, so restriction to a subgroup
//! keeps the code identical while re-gridding the coordinates.

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::blockring::{BlockRing, ConcatenationMap, OuterCode};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::{FiniteGroup, Permutation};
use crate::linalg::SpanTracker;

/// A linear code together with the witness that it is a right KG-submodule.
#[derive(Clone, Debug)]
pub struct QuasiGroupCode {
    pub algebra: GroupAlgebra,
    pub index: usize,
    pub code: LinearCode,
    /// coord_of[j * |G| + i] = column of the underlying code holding
    /// (block j, group element i).
    pub coord_of: Vec<usize>,
}

/// Free-action witness: the coordinate permutations of every group element,
/// the orbits, and the chosen orbit representatives.
#[derive(Clone, Debug)]
pub struct FreeActionWitness {
    pub perms: Vec<Permutation>,
    pub orbits: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
}

/// One blockwise component of an assembly.
pub enum Part {
    /// An outer code over an abstract presentation, fed through a verified
    /// concatenation map.
    Presented {
        map: ConcatenationMap,
        outer: OuterCode,
    },
    /// An outer code written directly over the block: rows are tuples of
    /// algebra elements lying in the block.
    Direct {
        block: BlockRing,
        rows: Vec<Vec<AlgebraElement>>,
    },
}

impl Part {
    fn block(&self) -> &BlockRing {
        match self {
            Part::Presented { map, .. } => &map.block,
            Part::Direct { block, .. } => block,
        }
    }

    /// K-spanning tuples over the block (right-module spanning set).
    fn spanning_tuples(&self, l: usize) -> Result<Vec<Vec<AlgebraElement>>> {
        match self {
            Part::Presented { map, outer } => {
                if map.ring != outer.ring {
                    return Err(Error::RingMismatch);
                }
                if outer.len != l {
                    return Err(Error::BadLength {
                        expected: l,
                        got: outer.len,
                    });
                }
                Ok(outer
                    .k_spanning_tuples()
                    .iter()
                    .map(|t| t.iter().map(|e| map.apply(e)).collect())
                    .collect())
            }
            Part::Direct { block, rows } => {
                let alg = &block.algebra;
                for row in rows {
                    if row.len() != l {
                        return Err(Error::BadLength {
                            expected: l,
                            got: row.len(),
                        });
                    }
                    for c in row {
                        if !block.contains(c) {
                            return Err(Error::NotAModule);
                        }
                    }
                }
                let mut out = Vec::new();
                for row in rows {
                    for b in block.basis() {
                        out.push(row.iter().map(|c| alg.mul(c, b)).collect());
                    }
                }
                Ok(out)
            }
        }
    }
}

impl QuasiGroupCode {
    pub fn group(&self) -> &FiniteGroup {
        &self.algebra.group
    }

    pub fn length(&self) -> usize {
        self.code.length()
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    /// Column index of (block j, group element i).
    pub fn coord(&self, block: usize, element: usize) -> usize {
        self.coord_of[block * self.algebra.dim() + element]
    }

    /// The underlying code with columns re-ordered to the (block, element) grid.
    pub fn relabeled_code(&self) -> LinearCode {
        let n = self.length();
        let rows: Vec<Vec<FieldElement>> = self
            .code
            .generator()
            .row_vecs()
            .into_iter()
            .map(|r| (0..n).map(|c| r[self.coord_of[c]]).collect())
            .collect();
        LinearCode::from_rows(self.algebra.field.clone(), n, rows)
    }

    /// Rows of the code as tuples of algebra elements (grid layout).
    pub fn basis_tuples(&self) -> Vec<Vec<AlgebraElement>> {
        let n = self.algebra.dim();
        let gen = self.code.generator();
        (0..self.dim())
            .map(|r| {
                (0..self.index)
                    .map(|j| AlgebraElement {
                        coeffs: (0..n).map(|i| gen.at(r, self.coord(j, i))).collect(),
                    })
                    .collect()
            })
            .collect()
    }

    /// Blockwise decomposition: C_i = C·f_i, returned as direct parts over the
    /// blocks; the parts re-assemble to the original code.
    pub fn decompose(&self, idempotents: &[AlgebraElement]) -> Result<Vec<Part>> {
        let alg = &self.algebra;
        let tuples = self.basis_tuples();
        let mut parts = Vec::new();
        let mut total = 0usize;
        let cols = self.length();
        let mut stacked = SpanTracker::new(alg.field.clone(), cols);
        for f in idempotents {
            let block = BlockRing::new(alg, f)?;
            let mut span = SpanTracker::new(alg.field.clone(), cols);
            let mut rows = Vec::new();
            for t in &tuples {
                let projected: Vec<AlgebraElement> =
                    t.iter().map(|c| alg.mul(c, f)).collect();
                let flat = self.grid_to_columns(&projected);
                if span.insert(&flat) {
                    rows.push(projected);
                    stacked.insert(&flat);
                }
            }
            total += rows.len();
            parts.push(Part::Direct { block, rows });
        }
        // direct-sum reconstruction must equal the original code
        if total != self.dim() || stacked.dim() != self.dim() {
            return Err(Error::NotAModule);
        }
        Ok(parts)
    }

    /// Flatten a grid tuple back into original column order.
    fn grid_to_columns(&self, tuple: &[AlgebraElement]) -> Vec<FieldElement> {
        let n = self.algebra.dim();
        let mut out = vec![FieldElement::ZERO; self.length()];
        for (j, comp) in tuple.iter().enumerate() {
            for i in 0..n {
                out[self.coord(j, i)] = comp.coeffs[i];
            }
        }
        out
    }

    /// The dual code, re-wrapped; module invariance is re-verified, not assumed.
    pub fn quasi_dual(&self) -> Result<QuasiGroupCode> {
        let dual = self.code.dual();
        let out = QuasiGroupCode {
            algebra: self.algebra.clone(),
            index: self.index,
            code: dual,
            coord_of: self.coord_of.clone(),
        };
        verify_module(&out.code, &out.algebra, out.index, &out.coord_of)?;
        Ok(out)
    }

    pub fn is_self_dual(&self) -> bool {
        self.code.is_self_dual()
    }

    /// Re-express the same underlying code as a quasi-H code of index
    /// l·[G:H] for a subgroup H given by generators.
    pub fn restrict_to_subgroup(&self, gens: &[usize]) -> Result<QuasiGroupCode> {
        let g = self.group().clone();
        let n = g.order();
        let (h, members) = g.subgroup(gens)?;
        let hsize = h.order();
        if n % hsize != 0 {
            return Err(Error::BadSubgroup);
        }
        // left cosets t·H, representatives ascending
        let mut coset_of = vec![usize::MAX; n];
        let mut pos_in_coset = vec![usize::MAX; n];
        let mut cosets = 0usize;
        for t in 0..n {
            if coset_of[t] != usize::MAX {
                continue;
            }
            for (s, &hm) in members.iter().enumerate() {
                let e = g.mul(t, hm);
                coset_of[e] = cosets;
                pos_in_coset[e] = s;
            }
            cosets += 1;
        }
        let new_index = self.index * cosets;
        let mut coord_of = vec![0usize; new_index * hsize];
        for j in 0..self.index {
            for i in 0..n {
                let c = self.coord(j, i);
                let block = j * cosets + coset_of[i];
                coord_of[block * hsize + pos_in_coset[i]] = c;
            }
        }
        let alg = GroupAlgebra::new(self.algebra.field.clone(), h);
        let out = QuasiGroupCode {
            algebra: alg,
            index: new_index,
            code: self.code.clone(),
            coord_of,
        };
        verify_module(&out.code, &out.algebra, out.index, &out.coord_of)?;
        Ok(out)
    }
}

/// Direct sum of per-block concatenations; module invariance is verified
/// before returning.
pub fn assemble(
    algebra: &GroupAlgebra,
    index: usize,
    parts: &[Part],
) -> Result<QuasiGroupCode> {
    let n = algebra.dim();
    let length = n * index;
    // at most one part per block
    for (i, p) in parts.iter().enumerate() {
        for p2 in parts.iter().skip(i + 1) {
            if p.block().idem == p2.block().idem {
                return Err(Error::OverlappingBlocks);
            }
        }
        if p.block().algebra != *algebra {
            return Err(Error::AlgebraMismatch);
        }
    }
    let mut rows = Vec::new();
    for p in parts {
        for t in p.spanning_tuples(index)? {
            let mut row = Vec::with_capacity(length);
            for comp in &t {
                row.extend(comp.coeffs.iter().copied());
            }
            rows.push(row);
        }
    }
    let code = LinearCode::from_rows(algebra.field.clone(), length, rows);
    let coord_of: Vec<usize> = (0..length).collect();
    verify_module(&code, algebra, index, &coord_of)?;
    Ok(QuasiGroupCode {
        algebra: algebra.clone(),
        index,
        code,
        coord_of,
    })
}

/// The block-diagonal permutation of the right regular action of g, expressed
/// on the underlying code's columns through the labeling.
pub fn action_permutation(
    algebra: &GroupAlgebra,
    index: usize,
    coord_of: &[usize],
    g: usize,
) -> Permutation {
    let n = algebra.dim();
    let len = n * index;
    let mut images = vec![0u32; len];
    for j in 0..index {
        for i in 0..n {
            let from = coord_of[j * n + i];
            let to = coord_of[j * n + algebra.group.mul(i, g)];
            images[from] = to as u32;
        }
    }
    Permutation(images)
}

fn permute_word(word: &[FieldElement], perm: &Permutation) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ZERO; word.len()];
    for (i, &v) in word.iter().enumerate() {
        out[perm.apply(i)] = v;
    }
    out
}

/// Check that the code is invariant under the block-diagonal regular action
/// (group generators suffice) and return the free-action witness.
pub fn verify_module(
    code: &LinearCode,
    algebra: &GroupAlgebra,
    index: usize,
    coord_of: &[usize],
) -> Result<FreeActionWitness> {
    let n = algebra.dim();
    if code.length() != n * index {
        return Err(Error::BadLength {
            expected: n * index,
            got: code.length(),
        });
    }
    for &g in algebra.group.generators() {
        let perm = action_permutation(algebra, index, coord_of, g);
        for r in 0..code.dim() {
            let permuted = permute_word(code.generator().row(r), &perm);
            if !code.contains(&permuted) {
                return Err(Error::NotAModule);
            }
        }
    }
    // full witness
    let perms: Vec<Permutation> = (0..n)
        .map(|g| action_permutation(algebra, index, coord_of, g))
        .collect();
    witness_from_perms(&algebra.group, perms, code.length())
}

fn witness_from_perms(
    group: &FiniteGroup,
    perms: Vec<Permutation>,
    len: usize,
) -> Result<FreeActionWitness> {
    let n = group.order();
    // freeness
    for (g, p) in perms.iter().enumerate() {
        if g != 0 {
            if let Some(&fixed) = p.fixed_points().first() {
                return Err(Error::NotFree(fixed));
            }
        }
    }
    // orbits, ordered by smallest member, each listed ascending
    let mut seen = vec![false; len];
    let mut orbits = Vec::new();
    for s in 0..len {
        if seen[s] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..n).map(|g| perms[g].apply(s)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit.len() != n {
            return Err(Error::NotFree(s));
        }
        for &x in &orbit {
            seen[x] = true;
        }
        orbits.push(orbit);
    }
    let representatives = orbits.iter().map(|o| o[0]).collect();
    Ok(FreeActionWitness {
        perms,
        orbits,
        representatives,
    })
}

/// Wrap a linear code invariant under a free homomorphic action of G as a
/// quasi-G code: pick orbit representatives (smallest index, orbits by
/// smallest member) and relabel coordinates to the (block, element) grid.
pub fn from_free_action(
    code: &LinearCode,
    field: &Field,
    group: &FiniteGroup,
    perms: &[Permutation],
) -> Result<QuasiGroupCode> {
    let n = group.order();
    let len = code.length();
    if perms.len() != n {
        return Err(Error::BadLength {
            expected: n,
            got: perms.len(),
        });
    }
    if len % n != 0 {
        return Err(Error::NotFree(0));
    }
    if !perms[0].is_identity() {
        return Err(Error::NotAHomomorphism);
    }
    for g in 0..n {
        if perms[g].len() != len {
            return Err(Error::BadLength {
                expected: len,
                got: perms[g].len(),
            });
        }
        for h in 0..n {
            if perms[g].then(&perms[h]) != perms[group.mul(g, h)] {
                return Err(Error::NotAHomomorphism);
            }
        }
    }
    let witness = witness_from_perms(group, perms.to_vec(), len)?;
    // invariance under generators
    for &g in group.generators() {
        for r in 0..code.dim() {
            let permuted = permute_word(code.generator().row(r), &perms[g]);
            if !code.contains(&permuted) {
                return Err(Error::NotAModule);
            }
        }
    }
    let index = len / n;
    let mut coord_of = vec![0usize; len];
    for (j, &rep) in witness.representatives.iter().enumerate() {
        for g in 0..n {
            coord_of[j * n + g] = perms[g].apply(rep);
        }
    }
    let algebra = GroupAlgebra::new(field.clone(), group.clone());
    let out = QuasiGroupCode {
        algebra,
        index,
        code: code.clone(),
        coord_of,
    };
    verify_module(&out.code, &out.algebra, out.index, &out.coord_of)?;
    Ok(out)
}

/// The blockwise lower bound on the distance of the code assembled from
/// `parts`: blocks of KG sorted ascending by block-code distance, min over
/// occupied blocks of d(outer, ring alphabet) · d(prefix sum of blocks).
pub fn concat_distance_bound_for_parts(
    algebra: &GroupAlgebra,
    idempotents: &[AlgebraElement],
    index: usize,
    parts: &[Part],
) -> Result<usize> {
    let blocks: Vec<BlockRing> = idempotents
        .iter()
        .map(|f| BlockRing::new(algebra, f))
        .collect::<Result<_>>()?;
    let mut outer_dist: Vec<Option<usize>> = vec![None; blocks.len()];
    for part in parts {
        let idx = blocks
            .iter()
            .position(|b| b.idem == part.block().idem)
            .ok_or(Error::NotCentralIdempotent)?;
        let d = match part {
            Part::Presented { outer, .. } => outer.min_ring_distance(),
            Part::Direct { block, rows } => {
                let alg = &block.algebra;
                let n = alg.dim();
                let mut flat = Vec::new();
                for row in rows {
                    for b in block.basis() {
                        let mut r = Vec::with_capacity(index * n);
                        for comp in row {
                            r.extend(alg.mul(comp, b).coeffs);
                        }
                        flat.push(r);
                    }
                }
                crate::blockring::ring_alphabet_distance(&alg.field, n, index, &flat)
            }
        };
        if d.is_some() {
            outer_dist[idx] = d;
        }
    }
    crate::blockring::concat_distance_bound(&blocks, &outer_dist)
}

/// Existence of a self-dual quasi-G code over K of index l, by the exact case
/// split on |K| mod 4 (and |G| for even |K|).
pub fn selfdual_exists(field: &Field, group: &FiniteGroup, index: usize) -> bool {
    let q = field.q();
    if q % 2 == 0 {
        index % 2 == 0 || group.order() % 2 == 0
    } else if q % 4 == 1 {
        index % 2 == 0
    } else {
        index % 4 == 0
    }
}

/// Human-readable reason when `selfdual_exists` is false.
pub fn selfdual_violation(field: &Field, group: &FiniteGroup, index: usize) -> String {
    let q = field.q();
    if q % 2 == 0 {
        format!(
            "case (iii) with |K| = {} even requires 2 | index or 2 | |G| (index = {}, |G| = {})",
            q,
            index,
            group.order()
        )
    } else if q % 4 == 1 {
        format!("case (i) with |K| = {} = 1 mod 4 requires 2 | index (index = {})", q, index)
    } else {
        format!("case (ii) with |K| = {} = 3 mod 4 requires 4 | index (index = {})", q, index)
    }
}

/// Construct a self-dual quasi-G code of the given index; the result is
/// verified self-dual and module-invariant before returning.
pub fn selfdual_construct(
    field: &Field,
    group: &FiniteGroup,
    index: usize,
) -> Result<QuasiGroupCode> {
    if !selfdual_exists(field, group, index) {
        return Err(Error::SelfDualCase(selfdual_violation(field, group, index)));
    }
    let algebra = GroupAlgebra::new(field.clone(), group.clone());
    let n = group.order();
    let q = field.q();
    let length = n * index;
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    let push_block_rows = |rows: &mut Vec<Vec<FieldElement>>,
                           blocks: &[(usize, FieldElement)]| {
        // one row per group basis element: scalar·e_g placed in each listed block
        for g in 0..n {
            let mut row = vec![FieldElement::ZERO; length];
            for &(j, c) in blocks {
                row[j * n + g] = c;
            }
            rows.push(row);
        }
    };
    if q % 2 == 1 && q % 4 == 1 {
        // doubling {a + x·a} on consecutive block pairs
        let x = field
            .solve_sqrt_neg1()
            .expect("q = 1 mod 4 has a square root of -1");
        for pair in 0..index / 2 {
            push_block_rows(&mut rows, &[(2 * pair, FieldElement::ONE), (2 * pair + 1, x)]);
        }
    } else if q % 2 == 1 {
        // four-fold construction {(xa, ya, a, 0), (0, -b, yb, xb)}
        let (x, y) = field.solve_two_squares_neg1();
        for quad in 0..index / 4 {
            let base = 4 * quad;
            push_block_rows(
                &mut rows,
                &[(base, x), (base + 1, y), (base + 2, FieldElement::ONE)],
            );
            push_block_rows(
                &mut rows,
                &[
                    (base + 1, field.neg(FieldElement::ONE)),
                    (base + 2, y),
                    (base + 3, x),
                ],
            );
        }
    } else if index % 2 == 0 {
        // characteristic 2, even index: doubling with x = 1
        for pair in 0..index / 2 {
            push_block_rows(
                &mut rows,
                &[(2 * pair, FieldElement::ONE), (2 * pair + 1, FieldElement::ONE)],
            );
        }
    } else {
        // characteristic 2, odd index, |G| even: D^(+l) with D = (1+t)KG for
        // the smallest involution t
        let t = *group
            .involutions()
            .first()
            .expect("even group order implies an involution");
        let d_gen = algebra.add(&algebra.one(), &algebra.basis_element(t));
        let mut span = SpanTracker::new(field.clone(), n);
        let mut d_rows = Vec::new();
        for g in 0..n {
            let row = algebra.mul(&d_gen, &algebra.basis_element(g));
            if span.insert(&row.coeffs) {
                d_rows.push(row);
            }
        }
        for j in 0..index {
            for r in &d_rows {
                let mut row = vec![FieldElement::ZERO; length];
                row[j * n..(j + 1) * n].copy_from_slice(&r.coeffs);
                rows.push(row);
            }
        }
    }
    let code = LinearCode::from_rows(field.clone(), length, rows);
    let coord_of: Vec<usize> = (0..length).collect();
    verify_module(&code, &algebra, index, &coord_of)?;
    let out = QuasiGroupCode {
        algebra,
        index,
        code,
        coord_of,
    };
    if out.dim() * 2 != length || !out.is_self_dual() {
        return Err(Error::SelfDualCase(
            "constructed code failed the runtime self-duality check".into(),
        ));
    }
    Ok(out)
}

/// Exhaustive search for a self-dual module-invariant code, independent of the
/// constructive criterion. Explores module-generated self-orthogonal subspaces
/// with a minimal-new-vector canonicity rule; `None` means none exists.
/// Only runs when q^N stays within `cap`.
pub fn exhaustive_selfdual_search(
    field: &Field,
    group: &FiniteGroup,
    index: usize,
    cap: f64,
) -> Result<Option<LinearCode>> {
    let n = group.order();
    let len = n * index;
    let q = field.q();
    if (len as f64) * (q as f64).log2() > cap.log2() {
        return Err(Error::Config(format!(
            "search space {}^{} exceeds the cap",
            q, len
        )));
    }
    if len % 2 != 0 {
        return Ok(None); // self-dual needs dimension N/2
    }
    let algebra = GroupAlgebra::new(field.clone(), group.clone());
    let coord_of: Vec<usize> = (0..len).collect();
    let gen_perms: Vec<Permutation> = algebra
        .group
        .generators()
        .iter()
        .map(|&g| action_permutation(&algebra, index, &coord_of, g))
        .collect();
    let target = len / 2;

    let dot = |a: &[FieldElement], b: &[FieldElement]| -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for (&x, &y) in a.iter().zip(b) {
            acc = field.add(acc, field.mul(x, y));
        }
        acc
    };

    // module span of a set of vectors (closure under the generator permutations)
    let module_span = |vectors: &[Vec<FieldElement>]| -> SpanTracker {
        let mut span = SpanTracker::new(field.clone(), len);
        let mut queue: Vec<Vec<FieldElement>> = Vec::new();
        for v in vectors {
            if span.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for p in &gen_perms {
                let w = permute_word(&v, p);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    };

    let self_orthogonal = |span: &SpanTracker| -> bool {
        let rows = span.basis_rows();
        for (i, a) in rows.iter().enumerate() {
            for b in rows.iter().skip(i) {
                if !dot(a, b).is_zero() {
                    return false;
                }
            }
        }
        true
    };

    // enumerate vectors of a subspace given its basis rows
    fn subspace_vectors(
        field: &Field,
        rows: &[Vec<FieldElement>],
        len: usize,
    ) -> Vec<Vec<FieldElement>> {
        let q = field.q();
        let k = rows.len();
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total as usize);
        for m in 0..total {
            let mut v = vec![FieldElement::ZERO; len];
            let mut mm = m;
            for row in rows {
                let c = FieldElement((mm % q) as u32);
                mm /= q;
                if !c.is_zero() {
                    for (a, &b) in v.iter_mut().zip(row) {
                        *a = field.add(*a, field.mul(c, b));
                    }
                }
            }
            out.push(v);
        }
        out
    }

    let mut memo: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    let signature = |span: &SpanTracker| -> Vec<u32> {
        let mut sig = Vec::new();
        for row in span.basis_rows() {
            for c in row {
                sig.push(c.0);
            }
            sig.push(u32::MAX);
        }
        sig
    };

    struct Ctx<'a> {
        field: &'a Field,
        len: usize,
        target: usize,
    }
    let ctx = Ctx {
        field,
        len,
        target,
    };

    // depth-first extension; candidates come from the orthogonal complement of
    // the current space. Each extension vector must be the lex-minimal vector
    // of the enlarged subspace outside the current one, so every subspace is
    // visited along exactly one chain. The minimal vector always has leading
    // coefficient 1, so only monic candidates are generated.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        ctx: &Ctx,
        current: &SpanTracker,
        gen_perms: &[Permutation],
        module_span: &dyn Fn(&[Vec<FieldElement>]) -> SpanTracker,
        self_orthogonal: &dyn Fn(&SpanTracker) -> bool,
        memo: &mut std::collections::HashSet<Vec<u32>>,
        signature: &dyn Fn(&SpanTracker) -> Vec<u32>,
    ) -> Option<Vec<Vec<FieldElement>>> {
        if current.dim() == ctx.target {
            return Some(current.basis_rows().to_vec());
        }
        // orthogonal complement of the current space (candidates must be
        // orthogonal to everything already chosen)
        let perp = if current.dim() == 0 {
            let mut rows = Vec::with_capacity(ctx.len);
            for i in 0..ctx.len {
                let mut e = vec![FieldElement::ZERO; ctx.len];
                e[i] = FieldElement::ONE;
                rows.push(e);
            }
            rows
        } else {
            let m = crate::linalg::Mat::from_rows(
                ctx.field.clone(),
                ctx.len,
                current.basis_rows().to_vec(),
            );
            m.kernel().row_vecs()
        };
        let q = ctx.field.q();
        let kp = perp.len();
        if (kp as f64) * (q as f64).log2() > 52.0 {
            return None; // unreachable under the cap, defensive only
        }
        let total = q.pow(kp as u32);
        for m in 1..total {
            // candidate vector in the complement
            let mut v = vec![FieldElement::ZERO; ctx.len];
            let mut mm = m;
            for row in &perp {
                let c = FieldElement((mm % q) as u32);
                mm /= q;
                if !c.is_zero() {
                    for (a, &b) in v.iter_mut().zip(row) {
                        *a = ctx.field.add(*a, ctx.field.mul(c, b));
                    }
                }
            }
            // monic filter: the minimal new vector has leading coefficient 1
            match v.iter().find(|c| !c.is_zero()) {
                Some(&c) if c == FieldElement::ONE => {}
                _ => continue,
            }
            // isotropic
            {
                let mut acc = FieldElement::ZERO;
                for &x in &v {
                    acc = ctx.field.add(acc, ctx.field.mul(x, x));
                }
                if !acc.is_zero() {
                    continue;
                }
            }
            if current.contains(&v) {
                continue;
            }
            // cheap necessary condition: no generator image of v may be both
            // new and lexicographically smaller
            let mut orbit_minimal = true;
            for p in gen_perms {
                let u = permute_word(&v, p);
                if u < v && !current.contains(&u) {
                    orbit_minimal = false;
                    break;
                }
            }
            if !orbit_minimal {
                continue;
            }
            let mut seed: Vec<Vec<FieldElement>> = current.basis_rows().to_vec();
            seed.push(v.clone());
            let closed = module_span(&seed);
            if closed.dim() > ctx.target {
                continue;
            }
            if !self_orthogonal(&closed) {
                continue;
            }
            // full canonicity: v must be the minimal vector of closed \ current
            let all = subspace_vectors(ctx.field, closed.basis_rows(), ctx.len);
            let min_new = all
                .iter()
                .filter(|u| !u.iter().all(|c| c.is_zero()) && !current.contains(u))
                .min()
                .cloned();
            if min_new.as_ref() != Some(&v) {
                continue;
            }
            let sig = signature(&closed);
            if !memo.insert(sig) {
                continue;
            }
            if let Some(found) = extend(
                ctx,
                &closed,
                gen_perms,
                module_span,
                self_orthogonal,
                memo,
                signature,
            ) {
                return Some(found);
            }
        }
        None
    }

    let start = SpanTracker::new(field.clone(), len);
    let found = extend(
        &ctx,
        &start,
        &gen_perms,
        &module_span,
        &self_orthogonal,
        &mut memo,
        &signature,
    );
    Ok(found.map(|rows| LinearCode::from_rows(field.clone(), len, rows)))
}
