//! Construction-job configs and quasi-code bundles (TOML).
//!
//! A job names the field, the group, the index, and one part per occupied
//! block. Each part gives the block index (in the canonical idempotent
//! order), the abstract ring ("pair:q" or "matrix:k:q"), the generator
//! images defining the concatenation map, and the outer generator rows.
//!
//! Ring element literals: "(a,b)" means a + u·b; "[[a,b],[c,d]]" is row-major;
//! entries are field literals (packed decimal or z-powers).

use std::path::Path;

use serde::Deserialize;

use crate::algebra::GroupAlgebra;
use crate::blockring::{BlockRing, ConcatenationMap, OuterCode, RingPresentation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::quasi::{self, Part, QuasiGroupCode};

#[derive(Deserialize, Debug)]
pub struct JobConfig {
    pub field: String,
    pub group: String,
    pub index: usize,
    #[serde(default)]
    pub parts: Vec<PartConfig>,
}

#[derive(Deserialize, Debug)]
pub struct PartConfig {
    /// Index into the canonical (descending phi order) idempotent list.
    pub block: usize,
    /// "pair:q" or "matrix:k:q".
    pub ring: String,
    /// Generator images for the concatenation map.
    pub images: Vec<ImageConfig>,
    /// Outer generator rows, one list of ring literals per row.
    pub rows: Vec<Vec<String>>,
}

#[derive(Deserialize, Debug)]
pub struct ImageConfig {
    pub elem: String,
    /// Whitespace-separated field literals of length |G|.
    pub row: String,
}

/// A resolved job: the algebra, idempotents, and assembled parts.
pub struct ResolvedJob {
    pub algebra: GroupAlgebra,
    pub index: usize,
    pub parts: Vec<Part>,
    /// (block index, concatenation map, outer) for reporting.
    pub presented: Vec<(usize, RingPresentation)>,
}

impl JobConfig {
    pub fn from_path(path: &Path) -> Result<JobConfig> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_str_toml(text: &str) -> Result<JobConfig> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn resolve(&self) -> Result<ResolvedJob> {
        let field = Field::parse_spec(&self.field)?;
        let group = FiniteGroup::parse_spec(&self.group)?;
        let algebra = GroupAlgebra::new(field.clone(), group);
        let idems = algebra.central_primitive_idempotents();
        let mut parts = Vec::new();
        let mut presented = Vec::new();
        for pc in &self.parts {
            let f = idems.get(pc.block).ok_or_else(|| {
                Error::Config(format!(
                    "block {} out of range (the algebra has {} blocks)",
                    pc.block,
                    idems.len()
                ))
            })?;
            let block = BlockRing::new(&algebra, f)?;
            let ring = RingPresentation::parse(&pc.ring, &field)?;
            let gens: Result<Vec<_>> = pc
                .images
                .iter()
                .map(|img| {
                    let elem = ring.parse_element(&img.elem)?;
                    let row = algebra.parse_element(&img.row)?;
                    Ok((elem, row))
                })
                .collect();
            let map = ConcatenationMap::hom_completion(ring.clone(), block, &gens?)?;
            let rows: Result<Vec<Vec<_>>> = pc
                .rows
                .iter()
                .map(|row| row.iter().map(|s| ring.parse_element(s)).collect())
                .collect();
            let outer = OuterCode::new(ring.clone(), self.index, rows?)?;
            presented.push((pc.block, ring));
            parts.push(Part::Presented { map, outer });
        }
        Ok(ResolvedJob {
            algebra,
            index: self.index,
            parts,
            presented,
        })
    }
}

impl ResolvedJob {
    pub fn assemble(&self) -> Result<QuasiGroupCode> {
        quasi::assemble(&self.algebra, self.index, &self.parts)
    }
}

/// Bundle file tying a matrix file to its quasi-group structure.
#[derive(Deserialize, Debug)]
pub struct Bundle {
    pub field: String,
    pub group: String,
    pub index: usize,
    /// Matrix file path, relative to the bundle's directory.
    pub matrix: String,
    /// coord_of labeling; identity when omitted.
    #[serde(default)]
    pub labeling: Vec<usize>,
}

impl Bundle {
    pub fn from_path(path: &Path) -> Result<Bundle> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Config(e.to_string()))
    }
}

/// Serialize a bundle by hand (stable field order, no extra metadata).
pub fn write_bundle(
    path: &Path,
    field: &Field,
    group: &FiniteGroup,
    index: usize,
    matrix: &str,
    labeling: &[usize],
) -> Result<()> {
    let mut out = String::new();
    out.push_str(&format!("field = \"{}\"\n", field_spec_string(field)));
    out.push_str(&format!("group = \"{}\"\n", group.spec_string()));
    out.push_str(&format!("index = {}\n", index));
    out.push_str(&format!("matrix = \"{}\"\n", matrix));
    let identity = labeling.iter().enumerate().all(|(i, &c)| i == c);
    if !identity {
        let items: Vec<String> = labeling.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("labeling = [{}]\n", items.join(", ")));
    }
    std::fs::write(path, out)?;
    Ok(())
}

pub fn field_spec_string(field: &Field) -> String {
    if field.m() == 1 {
        format!("{}", field.p())
    } else {
        format!("{}^{}", field.p(), field.m())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_minimal_job() {
        let text = r#"
field = "2"
group = "dihedral:6"
index = 4

[[parts]]
block = 0
ring = "pair:2"
images = [
  { elem = "(1,0)", row = "1 1 1 0 0 0" },
  { elem = "(1,1)", row = "0 0 0 1 1 1" },
]
rows = [["(1,0)", "(0,0)", "(1,1)", "(0,1)"], ["(0,0)", "(1,0)", "(0,1)", "(1,1)"]]
"#;
        let job = JobConfig::from_str_toml(text).unwrap();
        let resolved = job.resolve().unwrap();
        let code = resolved.assemble().unwrap();
        assert_eq!(code.length(), 24);
        assert_eq!(code.dim(), 4);
    }

    #[test]
    fn empty_parts_give_the_zero_code() {
        let text = "field = \"2\"\ngroup = \"cyclic:3\"\nindex = 2\n";
        let job = JobConfig::from_str_toml(text).unwrap();
        let code = job.resolve().unwrap().assemble().unwrap();
        assert_eq!(code.dim(), 0);
        assert_eq!(code.length(), 6);
    }

    #[test]
    fn bad_block_index_is_a_config_error() {
        let text = r#"
field = "2"
group = "cyclic:3"
index = 1

[[parts]]
block = 7
ring = "pair:2"
images = []
rows = []
"#;
        let job = JobConfig::from_str_toml(text).unwrap();
        assert!(matches!(job.resolve(), Err(Error::Config(_))));
    }
}
