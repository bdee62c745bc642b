//! Vocabulary shared by the flag and half-edge models.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The three kinds of cells of a hypermap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellType {
    Vertex,
    Hyperedge,
    Face,
}

impl CellType {
    pub const ALL: [CellType; 3] = [CellType::Vertex, CellType::Hyperedge, CellType::Face];

    /// The pair of flag involutions (color indices) whose orbits are the cells
    /// of this type. The remaining color is [`CellType::opposite_color`].
    pub fn colors(self) -> (usize, usize) {
        match self {
            CellType::Vertex => (1, 2),
            CellType::Hyperedge => (0, 2),
            CellType::Face => (0, 1),
        }
    }

    /// The color not used by cells of this type: vertex 0, hyperedge 1, face 2.
    pub fn opposite_color(self) -> usize {
        match self {
            CellType::Vertex => 0,
            CellType::Hyperedge => 1,
            CellType::Face => 2,
        }
    }

    pub fn from_colors(a: usize, b: usize) -> Option<CellType> {
        match (a.min(b), a.max(b)) {
            (1, 2) => Some(CellType::Vertex),
            (0, 2) => Some(CellType::Hyperedge),
            (0, 1) => Some(CellType::Face),
            _ => None,
        }
    }
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellType::Vertex => "vertex",
            CellType::Hyperedge => "hyperedge",
            CellType::Face => "face",
        })
    }
}

impl FromStr for CellType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" | "v" => Ok(CellType::Vertex),
            "edge" | "hyperedge" | "e" => Ok(CellType::Hyperedge),
            "face" | "f" => Ok(CellType::Face),
            other => Err(format!("unknown cell type `{other}`")),
        }
    }
}

/// Names a cell by its type and the smallest flag (or half-edge) it contains.
///
/// Partial duality with respect to cells of one type keeps the flag support of
/// every cell of that type, so the id survives dualization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellRef {
    pub cell_type: CellType,
    pub id: usize,
}

impl CellRef {
    pub fn new(cell_type: CellType, id: usize) -> Self {
        CellRef { cell_type, id }
    }
}

/// A cell together with its support.
///
/// For the flag model `elements` is the flag orbit and `valency` is half its
/// size; for the half-edge model `elements` is the cycle (in cyclic order) and
/// `valency` is its length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub cell: CellRef,
    pub elements: Vec<usize>,
    pub valency: usize,
}

/// Topological type of a closed connected surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInfo {
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Genus if orientable, number of cross-caps otherwise.
    pub genus: i64,
}

impl SurfaceInfo {
    pub fn new(euler_characteristic: i64, orientable: bool) -> Self {
        let genus = if orientable {
            (2 - euler_characteristic) / 2
        } else {
            2 - euler_characteristic
        };
        SurfaceInfo {
            euler_characteristic,
            orientable,
            genus,
        }
    }
}

impl fmt::Display for SurfaceInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(
                f,
                "chi={} orientable genus={}",
                self.euler_characteristic, self.genus
            )
        } else {
            write!(
                f,
                "chi={} non-orientable crosscaps={}",
                self.euler_characteristic, self.genus
            )
        }
    }
}
