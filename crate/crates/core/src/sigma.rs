//! Oriented hypermaps as permutation triples `(sigma_v, sigma_e, sigma_f)` of
//! half-edges with `sigma_f sigma_e sigma_v = 1`.
//!
//! Half-edges are a label set inside `{1..degree}`; the permutations live on
//! the whole of `{1..degree}` and fix every other point. This lets the
//! half-edge model of a flag hypermap keep its flag labels.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Cell, CellRef, CellType, SurfaceInfo};
use crate::perm::{orbits, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedHypermap {
    labels: Vec<usize>,
    sigma_v: Permutation,
    sigma_e: Permutation,
    sigma_f: Permutation,
}

impl OrientedHypermap {
    /// Half-edges `{1..n}`; `sigma_f` is derived as `(sigma_e sigma_v)^-1`.
    pub fn make(n: usize, sigma_v: Permutation, sigma_e: Permutation) -> Result<Self> {
        Self::with_labels((1..=n).collect(), sigma_v, sigma_e)
    }

    /// Half-edges `labels`; `sigma_f` is derived.
    pub fn with_labels(
        labels: Vec<usize>,
        sigma_v: Permutation,
        sigma_e: Permutation,
    ) -> Result<Self> {
        sigma_v.check_degree(&sigma_e)?;
        let sigma_f = sigma_e.compose(&sigma_v)?.inverse();
        Self::from_parts(labels, sigma_v, sigma_e, sigma_f)
    }

    /// Validates all three permutations, including the product relation.
    pub fn from_parts(
        labels: Vec<usize>,
        sigma_v: Permutation,
        sigma_e: Permutation,
        sigma_f: Permutation,
    ) -> Result<Self> {
        let degree = sigma_v.degree();
        sigma_v.check_degree(&sigma_e)?;
        sigma_v.check_degree(&sigma_f)?;
        if labels.is_empty() {
            return Err(Error::InvalidHypermap("no half-edges".into()));
        }
        let mut member = vec![false; degree + 1];
        for &x in &labels {
            if x == 0 || x > degree {
                return Err(Error::InvalidHypermap(format!(
                    "half-edge {x} outside 1..={degree}"
                )));
            }
            if member[x] {
                return Err(Error::InvalidHypermap(format!("half-edge {x} repeated")));
            }
            member[x] = true;
        }
        for (name, s) in [
            ("sigma_v", &sigma_v),
            ("sigma_e", &sigma_e),
            ("sigma_f", &sigma_f),
        ] {
            if let Some(x) = (1..=degree).find(|&x| !member[x] && s.apply(x) != x) {
                return Err(Error::InvalidHypermap(format!(
                    "{name} moves {x}, which is not a half-edge"
                )));
            }
        }
        if !sigma_f.compose(&sigma_e)?.compose(&sigma_v)?.is_identity() {
            return Err(Error::InvalidHypermap(
                "sigma_f sigma_e sigma_v is not the identity".into(),
            ));
        }
        let mut labels = labels;
        labels.sort_unstable();
        Ok(OrientedHypermap {
            labels,
            sigma_v,
            sigma_e,
            sigma_f,
        })
    }

    /// Convenience constructor from cycle notation.
    pub fn parse(degree: usize, labels: &[usize], sigma_v: &str, sigma_e: &str) -> Result<Self> {
        Self::with_labels(
            labels.to_vec(),
            Permutation::parse(sigma_v, degree)?,
            Permutation::parse(sigma_e, degree)?,
        )
    }

    /// Size of the ambient label range `{1..degree}`.
    pub fn degree(&self) -> usize {
        self.sigma_v.degree()
    }

    /// Sorted half-edge labels.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn n_halfedges(&self) -> usize {
        self.labels.len()
    }

    /// True when the half-edges are exactly `{1..degree}`.
    pub fn has_compact_labels(&self) -> bool {
        self.labels.len() == self.degree()
    }

    pub fn sigma_v(&self) -> &Permutation {
        &self.sigma_v
    }

    pub fn sigma_e(&self) -> &Permutation {
        &self.sigma_e
    }

    pub fn sigma_f(&self) -> &Permutation {
        &self.sigma_f
    }

    pub fn sigma(&self, t: CellType) -> &Permutation {
        match t {
            CellType::Vertex => &self.sigma_v,
            CellType::Hyperedge => &self.sigma_e,
            CellType::Face => &self.sigma_f,
        }
    }

    pub fn triple(&self) -> [&Permutation; 3] {
        [&self.sigma_v, &self.sigma_e, &self.sigma_f]
    }

    /// Cycles of the permutation for `t` on the half-edges, fixed points
    /// included, sorted by smallest half-edge.
    pub fn cells(&self, t: CellType) -> Vec<Cell> {
        let s = self.sigma(t);
        let mut member = vec![false; self.degree() + 1];
        for &x in &self.labels {
            member[x] = true;
        }
        s.cycle_decomposition()
            .cycles()
            .iter()
            .filter(|c| member[c[0]])
            .map(|c| Cell {
                cell: CellRef::new(t, c[0]),
                elements: c.clone(),
                valency: c.len(),
            })
            .collect()
    }

    pub fn cycle_count(&self, t: CellType) -> usize {
        self.cells(t).len()
    }

    /// Connected components as sorted half-edge sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut member = vec![false; self.degree() + 1];
        for &x in &self.labels {
            member[x] = true;
        }
        orbits(&[self.sigma_v.clone(), self.sigma_e.clone()], self.degree())
            .expect("same degree")
            .into_iter()
            .filter(|o| member[o[0]])
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `c_V + c_E + c_F - n`.
    pub fn euler_characteristic(&self) -> i64 {
        let cycles: usize = CellType::ALL.iter().map(|&t| self.cycle_count(t)).sum();
        cycles as i64 - self.n_halfedges() as i64
    }

    /// Surface of each component, ordered by smallest half-edge.
    pub fn genus_info(&self) -> Vec<SurfaceInfo> {
        let components = self.components();
        let mut component_of = vec![0; self.degree() + 1];
        for (c, hs) in components.iter().enumerate() {
            for &x in hs {
                component_of[x] = c;
            }
        }
        let mut chi: Vec<i64> = components.iter().map(|hs| -(hs.len() as i64)).collect();
        for t in CellType::ALL {
            for cell in self.cells(t) {
                chi[component_of[cell.cell.id]] += 1;
            }
        }
        chi.into_iter().map(|c| SurfaceInfo::new(c, true)).collect()
    }

    /// Genus of a connected hypermap; `None` if disconnected.
    pub fn genus(&self) -> Option<i64> {
        match self.genus_info().as_slice() {
            [one] => Some(one.genus),
            _ => None,
        }
    }

    pub fn resolve_cells(&self, cell_type: CellType, selection: &[CellRef]) -> Result<Vec<Cell>> {
        let cells = self.cells(cell_type);
        let mut chosen = BTreeSet::new();
        for r in selection {
            if r.cell_type != cell_type {
                return Err(Error::CellTypeMismatch {
                    cell: *r,
                    expected: cell_type,
                });
            }
            let idx = cells
                .binary_search_by_key(&r.id, |c| c.cell.id)
                .map_err(|_| Error::CellNotFound(*r))?;
            chosen.insert(idx);
        }
        Ok(chosen.into_iter().map(|i| cells[i].clone()).collect())
    }

    /// Partial dual relative to a set of cells of one type.
    ///
    /// With `s` the product of the selected cycles and `s_bar` the product of
    /// the others:
    ///
    /// * vertices: `(s_bar s^-1, sigma_e s, s sigma_f)`
    /// * hyperedges: `(s sigma_v, s_bar s^-1, sigma_f s)`
    /// * faces: `(sigma_v s, s sigma_e, s_bar s^-1)`
    pub fn partial_dual(&self, cell_type: CellType, selection: &[CellRef]) -> Result<Self> {
        let chosen = self.resolve_cells(cell_type, selection)?;
        let n = self.degree();
        let selected_cycles: Vec<&[usize]> = chosen.iter().map(|c| c.elements.as_slice()).collect();
        let mut is_selected = vec![false; n + 1];
        for c in &chosen {
            is_selected[c.cell.id] = true;
        }
        let others: Vec<Vec<usize>> = self
            .cells(cell_type)
            .into_iter()
            .filter(|c| !is_selected[c.cell.id])
            .map(|c| c.elements)
            .collect();
        let s = Permutation::from_cycles(n, &selected_cycles)?;
        let s_bar = Permutation::from_cycles(n, &others)?;
        let s_inv = s.inverse();
        let inverted = s_bar.compose(&s_inv)?;
        let (v, e, f) = (&self.sigma_v, &self.sigma_e, &self.sigma_f);
        let [nv, ne, nf] = match cell_type {
            CellType::Vertex => [inverted, e.compose(&s)?, s.compose(f)?],
            CellType::Hyperedge => [s.compose(v)?, inverted, f.compose(&s)?],
            CellType::Face => [v.compose(&s)?, s.compose(e)?, inverted],
        };
        Self::from_parts(self.labels.clone(), nv, ne, nf)
    }

    /// Partial dual relative to all cells of `cell_type`.
    pub fn total_dual(&self, cell_type: CellType) -> Self {
        let all: Vec<CellRef> = self.cells(cell_type).iter().map(|c| c.cell).collect();
        self.partial_dual(cell_type, &all).expect("all cells exist")
    }

    /// Closed form of the total dual: the untouched types swap places and
    /// every permutation is inverted.
    pub fn total_dual_closed_form(&self, cell_type: CellType) -> Self {
        let (v, e, f) = (
            self.sigma_v.inverse(),
            self.sigma_e.inverse(),
            self.sigma_f.inverse(),
        );
        let [nv, ne, nf] = match cell_type {
            CellType::Vertex => [v, f, e],
            CellType::Hyperedge => [f, e, v],
            CellType::Face => [e, v, f],
        };
        OrientedHypermap {
            labels: self.labels.clone(),
            sigma_v: nv,
            sigma_e: ne,
            sigma_f: nf,
        }
    }

    /// The same hypermap with the opposite orientation:
    /// `(sigma_v^-1, sigma_e^-1, sigma_v sigma_e)`.
    pub fn reverse_orientation(&self) -> Self {
        let sigma_f = self.sigma_v.compose(&self.sigma_e).expect("same degree");
        OrientedHypermap {
            labels: self.labels.clone(),
            sigma_v: self.sigma_v.inverse(),
            sigma_e: self.sigma_e.inverse(),
            sigma_f,
        }
    }
}
