//! JSON mesh files. Coordinates are strings so rationals stay exact.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use spline_split::fixtures;
use spline_split::linalg::Rational;
use spline_split::mesh::{Point, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshFile {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub cells: Vec<Vec<usize>>,
}

impl MeshFile {
    pub fn from_complex(mesh: &SimplicialComplex) -> Self {
        MeshFile {
            ambient_dim: mesh.dim(),
            vertices: mesh.vertices().iter().map(|p| p.coords().iter().map(|x| x.to_string()).collect()).collect(),
            cells: mesh.cells().iter().map(|c| c.vertices().to_vec()).collect(),
        }
    }

    /// Builds the complex without checking geometric validity.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, coords)| parse_point(coords).with_context(|| format!("vertex {i}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::new(self.ambient_dim, vertices, self.cells.clone())?)
    }
}

pub fn parse_point<S: AsRef<str>>(coords: &[S]) -> Result<Point> {
    let xs = coords
        .iter()
        .map(|s| s.as_ref().trim().parse::<Rational>().with_context(|| format!("bad rational {:?}", s.as_ref())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Point::new(xs))
}

/// `"1/5,1/10"` or `"0.2 0.1"`.
pub fn parse_point_arg(s: &str) -> Result<Point> {
    let parts: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
    parse_point(&parts)
}

/// `T<k>`, `A<k>`, `F<k>`, `AA<k>` or `P<k>`.
pub fn builtin(name: &str) -> Option<SimplicialComplex> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (tag, k) = name.split_at(split);
    let k: usize = k.parse().ok()?;
    if !(1..=6).contains(&k) {
        return None;
    }
    let needs_two = tag != "T";
    if needs_two && k < 2 {
        return None;
    }
    Some(match tag {
        "T" => fixtures::simplex(k),
        "A" => fixtures::alfeld_split(k),
        "F" => fixtures::facet_split_mesh(k),
        "AA" => fixtures::double_alfeld_mesh(k),
        "P" => fixtures::pyramid(k),
        _ => return None,
    })
}

/// Loads a builtin name or a JSON file; does not validate geometry.
pub fn load_unchecked(source: &str) -> Result<SimplicialComplex> {
    if let Some(m) = builtin(source) {
        return Ok(m);
    }
    let path = Path::new(source);
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file: MeshFile = serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    file.to_complex().with_context(|| format!("bad mesh in {}", path.display()))
}

pub fn load(source: &str) -> Result<SimplicialComplex> {
    let mesh = load_unchecked(source)?;
    let report = mesh.validate();
    if !report.is_valid() {
        bail!("{source} is not a valid mesh:\n{report}");
    }
    Ok(mesh)
}

pub fn to_json(mesh: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&MeshFile::from_complex(mesh)).expect("plain data serializes")
}

pub fn write(mesh: &SimplicialComplex, path: &Path) -> Result<()> {
    fs::write(path, to_json(mesh) + "\n").with_context(|| format!("cannot write {}", path.display()))
}
