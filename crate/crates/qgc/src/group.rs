//! Finite groups as ordered element lists with Cayley tables.
//!
//! Orderings are frozen because coefficient vectors are compared positionally:
//! - `cyclic(n)`: 1, g, g^2, …
//! - `dihedral(2m)`: 1, a, …, a^(m-1), b, ab, …, a^(m-1)b
//!   (position m+i holds a^i·b).
//! - `direct_product(A, B)`: pairs sorted by (reflection grade of a, b, rotation
//!   index of a) when A is dihedral, so dihedral×cyclic products enumerate as
//!   1, a, a^2, g, ag, a^2g, …, b, ab, a^2b, bg, …; plain b-major otherwise.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A permutation of {0, …, N-1} given by its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(pub Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || seen[i as usize] {
                return Err(Error::BadPresentation("image list is not a bijection".into()));
            }
            seen[i as usize] = true;
        }
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// self then other: (self * other)(i) = other(self(i)).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 == j)
            .map(|(i, _)| i)
            .collect()
    }

    /// Cycle notation on 1-based points, e.g. "(1 2 3)(5 6)".
    pub fn cycle_string(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.0[start] as usize;
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.0[cur] as usize;
            }
            out.push('(');
            out.push_str(
                &cyc.iter()
                    .map(|&i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Parse "(1 2 3)(4 5)" into a permutation on n points (1-based in the text).
    pub fn parse_cycles(s: &str, n: usize) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let body = s.trim();
        if body == "()" || body.is_empty() {
            return Ok(Permutation(images));
        }
        for cyc in body.split(')') {
            let cyc = cyc.trim();
            if cyc.is_empty() {
                continue;
            }
            let cyc = cyc
                .strip_prefix('(')
                .ok_or_else(|| Error::BadGroupSpec(s.into()))?;
            let points: Vec<usize> = cyc
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::BadGroupSpec(s.into()))?;
            if points.iter().any(|&p| p == 0 || p > n) {
                return Err(Error::BadGroupSpec(s.into()));
            }
            for w in 0..points.len() {
                let from = points[w] - 1;
                let to = points[(w + 1) % points.len()] - 1;
                images[from] = to as u32;
            }
        }
        Permutation::from_images(images)
    }
}

struct GroupData {
    n: usize,
    labels: Vec<String>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    /// Rotation-block size when this group is dihedral (drives product ordering).
    dihedral_half: Option<usize>,
    spec: String,
}

/// A finite group with a fixed element ordering; identity at index 0.
#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.n == other.data.n && self.data.mul == other.data.mul)
    }
}
impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, n={})", self.data.spec, self.data.n)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data.spec)
    }
}

fn validate_table(
    n: usize,
    labels: Vec<String>,
    mul: Vec<u32>,
    generators: Vec<usize>,
    dihedral_half: Option<usize>,
    spec: String,
) -> Result<FiniteGroup> {
    assert_eq!(mul.len(), n * n);
    let at = |i: usize, j: usize| mul[i * n + j] as usize;
    // identity at index 0
    for i in 0..n {
        if at(0, i) != i || at(i, 0) != i {
            return Err(Error::BadPresentation("index 0 is not a two-sided identity".into()));
        }
    }
    // Latin square
    for i in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for j in 0..n {
            let r = at(i, j);
            let c = at(j, i);
            if r >= n || seen_row[r] || c >= n || seen_col[c] {
                return Err(Error::BadPresentation("multiplication table is not a Latin square".into()));
            }
            seen_row[r] = true;
            seen_col[c] = true;
        }
    }
    // inverses
    let mut inv = vec![0u32; n];
    for i in 0..n {
        let j = (0..n)
            .find(|&j| at(i, j) == 0)
            .ok_or_else(|| Error::BadPresentation("missing inverse".into()))?;
        if at(j, i) != 0 {
            return Err(Error::BadPresentation("one-sided inverse".into()));
        }
        inv[i] = j as u32;
    }
    // associativity: exhaustive up to order 256, seeded spot checks above
    if n <= 256 {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::BadPresentation("associativity fails".into()));
                    }
                }
            }
        }
    } else {
        let mut state = 0x853c49e6748fea9bu64;
        for _ in 0..500 {
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % n
            };
            let (a, b, c) = (next(), next(), next());
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::BadPresentation("associativity fails".into()));
            }
        }
    }
    Ok(FiniteGroup {
        data: Arc::new(GroupData {
            n,
            labels,
            mul,
            inv,
            generators,
            dihedral_half,
            spec,
        }),
    })
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = ((i + j) % n) as u32;
            }
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{}", i),
            })
            .collect();
        let generators = if n > 1 { vec![1] } else { vec![] };
        validate_table(n, labels, mul, generators, None, format!("cyclic:{}", n)).unwrap()
    }

    /// Dihedral group of the given (even) order 2m, m >= 1.
    pub fn dihedral(order: usize) -> Result<FiniteGroup> {
        if order < 2 || order % 2 != 0 {
            return Err(Error::BadGroupSpec(format!("dihedral:{}", order)));
        }
        let m = order / 2;
        let n = order;
        // index e*m + i holds a^i b^e; products follow b a = a^(m-1) b
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            let (ex, ix) = (x / m, x % m);
            for y in 0..n {
                let (ey, iy) = (y / m, y % m);
                let i2 = if ex == 0 {
                    (ix + iy) % m
                } else {
                    (ix + m - iy % m) % m
                };
                let e2 = (ex + ey) % 2;
                mul[x * n + y] = (e2 * m + i2) as u32;
            }
        }
        let labels = (0..n)
            .map(|x| {
                let (e, i) = (x / m, x % m);
                match (e, i) {
                    (0, 0) => "1".to_string(),
                    (0, 1) => "a".to_string(),
                    (0, i) => format!("a^{}", i),
                    (_, 0) => "b".to_string(),
                    (_, 1) => "ab".to_string(),
                    (_, i) => format!("a^{}b", i),
                }
            })
            .collect();
        let generators = if m == 1 { vec![m] } else { vec![1, m] };
        validate_table(
            n,
            labels,
            mul,
            generators,
            Some(m),
            format!("dihedral:{}", order),
        )
    }

    /// Direct product with the frozen ordering.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        // slot order: (grade(a), b, fine(a)); grade = reflection bit for dihedral A
        let (grades, fine): (Vec<usize>, Vec<usize>) = match a.data.dihedral_half {
            Some(m) => (0..na).map(|i| (i / m, i % m)).unzip(),
            None => (0..na).map(|i| (0, i)).unzip(),
        };
        let mut slots: Vec<(usize, usize)> = Vec::with_capacity(n); // (a_idx, b_idx)
        let max_grade = *grades.iter().max().unwrap();
        for g in 0..=max_grade {
            for jb in 0..nb {
                let mut row: Vec<usize> =
                    (0..na).filter(|&ia| grades[ia] == g).collect();
                row.sort_by_key(|&ia| fine[ia]);
                for ia in row {
                    slots.push((ia, jb));
                }
            }
        }
        let mut index_of = vec![0usize; n];
        for (s, &(ia, jb)) in slots.iter().enumerate() {
            index_of[ia * nb + jb] = s;
        }
        let mut mul = vec![0u32; n * n];
        for (x, &(ax, bx)) in slots.iter().enumerate() {
            for (y, &(ay, by)) in slots.iter().enumerate() {
                let am = a.mul(ax, ay);
                let bm = b.mul(bx, by);
                mul[x * n + y] = index_of[am * nb + bm] as u32;
            }
        }
        // relabel B's letters when they collide with A's
        let a_letters: std::collections::HashSet<char> = a
            .data
            .labels
            .iter()
            .flat_map(|l| l.chars().filter(|c| c.is_ascii_alphabetic()))
            .collect();
        let fresh: Vec<char> = "ghcdefklmnop".chars().filter(|c| !a_letters.contains(c)).collect();
        let b_letters: Vec<char> = {
            let mut v: Vec<char> = b
                .data
                .labels
                .iter()
                .flat_map(|l| l.chars().filter(|c| c.is_ascii_alphabetic()))
                .collect::<std::collections::HashSet<_>>()
                .into_iter()
                .collect();
            v.sort();
            v
        };
        let map_label = |l: &str| -> String {
            l.chars()
                .map(|c| {
                    if let Some(pos) = b_letters.iter().position(|&x| x == c) {
                        *fresh.get(pos).unwrap_or(&c)
                    } else {
                        c
                    }
                })
                .collect()
        };
        let labels: Vec<String> = slots
            .iter()
            .map(|&(ia, jb)| {
                let la = &a.data.labels[ia];
                let lb = map_label(&b.data.labels[jb]);
                match (la.as_str(), lb.as_str()) {
                    ("1", "1") => "1".to_string(),
                    (_, "1") => la.clone(),
                    ("1", _) => lb,
                    _ => format!("{} {}", la, lb),
                }
            })
            .collect();
        let mut generators: Vec<usize> = a
            .data
            .generators
            .iter()
            .map(|&g| index_of[g * nb])
            .collect();
        generators.extend(b.data.generators.iter().map(|&g| index_of[g]));
        validate_table(
            n,
            labels,
            mul,
            generators,
            None,
            format!("product:({},{})", a.data.spec, b.data.spec),
        )
        .unwrap()
    }

    /// Closure of explicit generator permutations under composition (order bound 2000).
    pub fn from_generators(gens: &[Permutation]) -> Result<FiniteGroup> {
        const BOUND: usize = 2000;
        if gens.is_empty() {
            return Err(Error::BadGroupSpec("perm:[]".into()));
        }
        let deg = gens[0].len();
        if gens.iter().any(|g| g.len() != deg) {
            return Err(Error::BadPresentation("generator degrees differ".into()));
        }
        let id = Permutation::identity(deg);
        let mut elements = vec![id.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(id, 0usize);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for g in gens {
                let nxt = cur.then(g);
                if !index.contains_key(&nxt) {
                    if elements.len() >= BOUND {
                        return Err(Error::ClosureBound(BOUND));
                    }
                    index.insert(nxt.clone(), elements.len());
                    elements.push(nxt);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = elements[i].then(&elements[j]);
                mul[i * n + j] = index[&prod] as u32;
            }
        }
        let labels = elements.iter().map(|p| p.cycle_string()).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        validate_table(n, labels, mul, generators, None, "perm".into())
    }

    /// Parse "cyclic:n", "dihedral:2m", "product:(A,B)" or "perm:[(1 2)(3 4), (1 3)]".
    pub fn parse_spec(spec: &str) -> Result<FiniteGroup> {
        let spec = spec.trim();
        if let Some(n) = spec.strip_prefix("cyclic:") {
            let n: usize = n.trim().parse().map_err(|_| Error::BadGroupSpec(spec.into()))?;
            if n == 0 {
                return Err(Error::BadGroupSpec(spec.into()));
            }
            return Ok(FiniteGroup::cyclic(n));
        }
        if let Some(n) = spec.strip_prefix("dihedral:") {
            let n: usize = n.trim().parse().map_err(|_| Error::BadGroupSpec(spec.into()))?;
            return FiniteGroup::dihedral(n);
        }
        if let Some(body) = spec.strip_prefix("product:") {
            let body = body
                .trim()
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::BadGroupSpec(spec.into()))?;
            // split at the top-level comma
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in body.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split.ok_or_else(|| Error::BadGroupSpec(spec.into()))?;
            let a = FiniteGroup::parse_spec(&body[..i])?;
            let b = FiniteGroup::parse_spec(&body[i + 1..])?;
            return Ok(FiniteGroup::direct_product(&a, &b));
        }
        if let Some(body) = spec.strip_prefix("perm:") {
            let body = body
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::BadGroupSpec(spec.into()))?;
            // degree = largest point mentioned
            let deg = body
                .split(|c: char| !c.is_ascii_digit())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().unwrap_or(0))
                .max()
                .ok_or_else(|| Error::BadGroupSpec(spec.into()))?;
            let mut gens = Vec::new();
            for part in body.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                gens.push(Permutation::parse_cycles(part, deg)?);
            }
            return FiniteGroup::from_generators(&gens);
        }
        Err(Error::BadGroupSpec(spec.into()))
    }

    pub fn order(&self) -> usize {
        self.data.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.data.mul[i * self.data.n + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.data.inv[i] as usize
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.labels[i]
    }

    pub fn spec_string(&self) -> &str {
        &self.data.spec
    }

    pub fn generators(&self) -> &[usize] {
        &self.data.generators
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut cur = g;
        let mut k = 1;
        while cur != 0 {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    /// Permutation realizing right multiplication by g in the fixed ordering.
    pub fn regular_rep(&self, g: usize) -> Permutation {
        Permutation((0..self.data.n).map(|i| self.mul(i, g) as u32).collect())
    }

    /// All t != 1 with t^2 = 1, ascending.
    pub fn involutions(&self) -> Vec<usize> {
        (1..self.data.n).filter(|&t| self.mul(t, t) == 0).collect()
    }

    /// Subgroup generated by the given element indices, in BFS discovery order
    /// (identity first).
    pub fn subgroup_closure(&self, gens: &[usize]) -> Result<Vec<usize>> {
        if gens.iter().any(|&g| g >= self.data.n) {
            return Err(Error::BadSubgroup);
        }
        let mut members = vec![0usize];
        let mut seen = vec![false; self.data.n];
        seen[0] = true;
        let mut head = 0;
        while head < members.len() {
            let cur = members[head];
            for &g in gens {
                let nxt = self.mul(cur, g);
                if !seen[nxt] {
                    seen[nxt] = true;
                    members.push(nxt);
                }
            }
            head += 1;
        }
        Ok(members)
    }

    /// The abstract group on a subgroup's elements, preserving closure order.
    pub fn subgroup(&self, gens: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let members = self.subgroup_closure(gens)?;
        let n = members.len();
        let mut pos = std::collections::HashMap::new();
        for (i, &m) in members.iter().enumerate() {
            pos.insert(m, i);
        }
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = pos[&self.mul(members[i], members[j])] as u32;
            }
        }
        let labels = members.iter().map(|&m| self.label(m).to_string()).collect();
        let sub_gens: Vec<usize> = gens
            .iter()
            .map(|g| pos[g])
            .filter(|&g| g != 0)
            .collect::<std::collections::HashSet<_>>()
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let group = validate_table(
            n,
            labels,
            mul,
            sub_gens,
            None,
            format!("subgroup-of:{}", self.data.spec),
        )?;
        Ok((group, members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral6_ordering() {
        let g = FiniteGroup::dihedral(6).unwrap();
        assert_eq!(g.order(), 6);
        let labels: Vec<&str> = (0..6).map(|i| g.label(i)).collect();
        assert_eq!(labels, ["1", "a", "a^2", "b", "ab", "a^2b"]);
        // a * b = ab at position 4
        assert_eq!(g.mul(1, 3), 4);
        // b * a = a^2 b (since b a = a^-1 b)
        assert_eq!(g.mul(3, 1), 5);
        // relations: a^3 = 1, b^2 = 1, b a b = a^2
        assert_eq!(g.mul(g.mul(1, 1), 1), 0);
        assert_eq!(g.mul(3, 3), 0);
        assert_eq!(g.mul(g.mul(3, 1), 3), 2);
    }

    #[test]
    fn trivial_and_product_groups() {
        let t = FiniteGroup::cyclic(1);
        assert_eq!(t.order(), 1);
        let p = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4));
        assert_eq!(p.order(), 8);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(p.mul(i, j), p.mul(j, i), "abelian");
            }
        }
    }

    #[test]
    fn product_with_dihedral_matches_fixed_ordering() {
        // dihedral(6) x cyclic(3): 1, a, a^2, g, ag, a^2g, g^2, ..., b, ab, a^2b, bg...
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let c3 = FiniteGroup::cyclic(3);
        let g = FiniteGroup::direct_product(&d6, &c3);
        assert_eq!(g.order(), 18);
        let labels: Vec<&str> = (0..18).map(|i| g.label(i)).collect();
        assert_eq!(
            labels,
            [
                "1", "a", "a^2", "g", "a g", "a^2 g", "g^2", "a g^2", "a^2 g^2", "b", "ab",
                "a^2b", "b g", "ab g", "a^2b g", "b g^2", "ab g^2", "a^2b g^2"
            ]
        );
        // gamma is central
        let gamma = 3;
        for i in 0..18 {
            assert_eq!(g.mul(gamma, i), g.mul(i, gamma));
        }
    }

    #[test]
    fn regular_rep_properties() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        assert!(d6.regular_rep(0).is_identity());
        let c3 = FiniteGroup::cyclic(3);
        assert_eq!(c3.regular_rep(1).0, vec![1, 2, 0]);
        // homomorphism over all 36 pairs
        for g in 0..6 {
            for h in 0..6 {
                let lhs = d6.regular_rep(g).then(&d6.regular_rep(h));
                assert_eq!(lhs, d6.regular_rep(d6.mul(g, h)));
            }
        }
        // free for g != 1
        for g in 1..6 {
            assert!(d6.regular_rep(g).fixed_points().is_empty());
        }
    }

    #[test]
    fn involutions_examples() {
        assert_eq!(FiniteGroup::cyclic(2).involutions(), vec![1]);
        assert!(FiniteGroup::cyclic(3).involutions().is_empty());
        // D6: the three reflections occupy positions 3, 4, 5
        assert_eq!(FiniteGroup::dihedral(6).unwrap().involutions(), vec![3, 4, 5]);
    }

    #[test]
    fn subgroup_restriction_orbits() {
        // restriction of the regular rep of G to H acts freely with |G|/|H| orbits
        let g = FiniteGroup::dihedral(12).unwrap();
        let (h, members) = g.subgroup(&[1]).unwrap(); // <a> = C6
        assert_eq!(h.order(), 6);
        assert_eq!(members.len(), 6);
        let perm = g.regular_rep(1);
        let mut seen = vec![false; 12];
        let mut orbits = 0;
        for s in 0..12 {
            if seen[s] {
                continue;
            }
            orbits += 1;
            let mut cur = s;
            loop {
                seen[cur] = true;
                cur = perm.apply(cur);
                if cur == s {
                    break;
                }
            }
        }
        assert_eq!(orbits, 12 / 6);
    }

    #[test]
    fn permutation_closure() {
        let p1 = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let p2 = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let s3 = FiniteGroup::from_generators(&[p1, p2]).unwrap();
        assert_eq!(s3.order(), 6);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(FiniteGroup::parse_spec("cyclic:4").unwrap().order(), 4);
        assert_eq!(FiniteGroup::parse_spec("dihedral:22").unwrap().order(), 22);
        assert_eq!(
            FiniteGroup::parse_spec("product:(dihedral:6,cyclic:3)")
                .unwrap()
                .order(),
            18
        );
        assert_eq!(
            FiniteGroup::parse_spec("perm:[(1 2 3)(4 5), (1 2)]")
                .unwrap()
                .order(),
            12
        );
        assert!(FiniteGroup::parse_spec("frobnicate:9").is_err());
        assert!(FiniteGroup::parse_spec("dihedral:7").is_err());
    }

    #[test]
    fn element_orders() {
        let d22 = FiniteGroup::dihedral(22).unwrap();
        assert_eq!(d22.element_order(1), 11);
        assert_eq!(d22.element_order(11), 2);
    }
}
