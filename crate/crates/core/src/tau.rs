//! Hypermaps as three fixed-point-free involutions on flags.
//!
//! `tau[0]`, `tau[1]`, `tau[2]` pair up the flags along the hyperedge/face,
//! vertex/face and vertex/hyperedge boundary arcs. Vertices are orbits of
//! `<tau1, tau2>`, hyperedges of `<tau0, tau2>`, faces of `<tau0, tau1>`.
//! Orientability is read off the subgroup of even words, generated by
//! `tau2 tau1`, `tau0 tau2` and `tau1 tau0`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Cell, CellRef, CellType, SurfaceInfo};
use crate::perm::{orbits, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Permutation; 3]", into = "[Permutation; 3]")]
pub struct FlagHypermap {
    tau: [Permutation; 3],
}

impl FlagHypermap {
    pub fn new(tau0: Permutation, tau1: Permutation, tau2: Permutation) -> Result<Self> {
        let n = tau0.degree();
        for (i, t) in [&tau0, &tau1, &tau2].into_iter().enumerate() {
            if t.degree() != n {
                return Err(Error::DomainMismatch {
                    expected: n,
                    found: t.degree(),
                });
            }
            if !t.is_involution() || !t.is_fixed_point_free() {
                return Err(Error::InvalidHypermap(format!(
                    "tau{i} = {t} is not a fixed-point-free involution"
                )));
            }
        }
        Ok(FlagHypermap {
            tau: [tau0, tau1, tau2],
        })
    }

    /// Convenience constructor from cycle notation.
    pub fn parse(n_flags: usize, tau0: &str, tau1: &str, tau2: &str) -> Result<Self> {
        Self::new(
            Permutation::parse(tau0, n_flags)?,
            Permutation::parse(tau1, n_flags)?,
            Permutation::parse(tau2, n_flags)?,
        )
    }

    pub fn n_flags(&self) -> usize {
        self.tau[0].degree()
    }

    pub fn tau(&self, i: usize) -> &Permutation {
        &self.tau[i]
    }

    pub fn taus(&self) -> &[Permutation; 3] {
        &self.tau
    }

    pub fn into_taus(self) -> [Permutation; 3] {
        self.tau
    }

    /// Flag orbits of the given type, sorted by smallest flag.
    pub fn cells(&self, cell_type: CellType) -> Vec<Cell> {
        let (a, b) = cell_type.colors();
        orbits(&[self.tau[a].clone(), self.tau[b].clone()], self.n_flags())
            .expect("involutions share the flag set")
            .into_iter()
            .map(|flags| Cell {
                cell: CellRef::new(cell_type, flags[0]),
                valency: flags.len() / 2,
                elements: flags,
            })
            .collect()
    }

    pub fn cell_count(&self, cell_type: CellType) -> usize {
        self.cells(cell_type).len()
    }

    /// Connected components as sorted flag sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        orbits(&self.tau, self.n_flags()).expect("involutions share the flag set")
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Hyperedges are genuine edges exactly when `tau0 tau2` is an involution.
    pub fn is_map(&self) -> bool {
        self.tau[0]
            .compose(&self.tau[2])
            .expect("same degree")
            .is_involution()
    }

    /// Generators `tau2 tau1`, `tau0 tau2`, `tau1 tau0` of the even subgroup.
    pub fn even_generators(&self) -> [Permutation; 3] {
        let [t0, t1, t2] = &self.tau;
        [
            t2.compose(t1).expect("same degree"),
            t0.compose(t2).expect("same degree"),
            t1.compose(t0).expect("same degree"),
        ]
    }

    /// Orbits of the even subgroup.
    pub fn even_orbits(&self) -> Vec<Vec<usize>> {
        orbits(&self.even_generators(), self.n_flags()).expect("same degree")
    }

    /// True iff the even subgroup has two orbits on every component.
    pub fn is_orientable(&self) -> bool {
        self.even_orbits().len() == 2 * self.components().len()
    }

    /// `v + e + f - n_flags / 2`, summed over all components.
    pub fn euler_characteristic(&self) -> i64 {
        let cells: usize = CellType::ALL.iter().map(|&t| self.cell_count(t)).sum();
        cells as i64 - (self.n_flags() / 2) as i64
    }

    /// Surface type of each connected component, ordered by smallest flag.
    pub fn genus_info(&self) -> Vec<SurfaceInfo> {
        let components = self.components();
        let mut component_of = vec![0; self.n_flags() + 1];
        for (c, flags) in components.iter().enumerate() {
            for &x in flags {
                component_of[x] = c;
            }
        }
        let mut chi: Vec<i64> = components
            .iter()
            .map(|flags| -((flags.len() / 2) as i64))
            .collect();
        for t in CellType::ALL {
            for cell in self.cells(t) {
                chi[component_of[cell.cell.id]] += 1;
            }
        }
        let mut even = vec![0usize; components.len()];
        for orbit in self.even_orbits() {
            even[component_of[orbit[0]]] += 1;
        }
        chi.into_iter()
            .zip(even)
            .map(|(chi, orbits)| SurfaceInfo::new(chi, orbits == 2))
            .collect()
    }

    /// Looks up the flag sets of `selection`, which must all be cells of
    /// `cell_type`. Duplicates are ignored.
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

    /// Partial dual relative to a set of cells of one type: inside the
    /// selected cells the two involutions defining that type exchange their
    /// transpositions; the third involution is untouched.
    pub fn partial_dual(&self, cell_type: CellType, selection: &[CellRef]) -> Result<FlagHypermap> {
        let chosen = self.resolve_cells(cell_type, selection)?;
        let mut inside = vec![false; self.n_flags() + 1];
        for cell in &chosen {
            for &x in &cell.elements {
                inside[x] = true;
            }
        }
        Ok(self.swap_on(cell_type, |x| inside[x]))
    }

    /// Partial dual relative to every cell of `cell_type`; for vertices this
    /// is `(tau0, tau2, tau1)`.
    pub fn total_dual(&self, cell_type: CellType) -> FlagHypermap {
        self.swap_on(cell_type, |_| true)
    }

    fn swap_on(&self, cell_type: CellType, inside: impl Fn(usize) -> bool) -> FlagHypermap {
        let (a, b) = cell_type.colors();
        let mut tau = self.tau.clone();
        let (ia, ib) = (self.tau[a].images(), self.tau[b].images());
        let mut new_a = ia.clone();
        let mut new_b = ib.clone();
        for x in 1..=self.n_flags() {
            if inside(x) {
                new_a[x - 1] = ib[x - 1];
                new_b[x - 1] = ia[x - 1];
            }
        }
        tau[a] = Permutation::from_images(new_a).expect("swap of closed orbits");
        tau[b] = Permutation::from_images(new_b).expect("swap of closed orbits");
        FlagHypermap { tau }
    }

    /// Applies a flag relabeling: flag `x` becomes `relabel(x)`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<FlagHypermap> {
        let inv = relabel.inverse();
        let tau = [0, 1, 2].map(|i| relabel.compose(&self.tau[i]).and_then(|p| p.compose(&inv)));
        let [t0, t1, t2] = tau;
        FlagHypermap::new(t0?, t1?, t2?)
    }

    /// Disjoint union; the flags of `other` are shifted by `self.n_flags()`.
    pub fn disjoint_union(&self, other: &FlagHypermap) -> FlagHypermap {
        let shift = self.n_flags();
        let tau = [0, 1, 2].map(|i| {
            let mut images = self.tau[i].images();
            images.extend(other.tau[i].images().into_iter().map(|y| y + shift));
            Permutation::from_images(images).expect("block-diagonal permutation")
        });
        FlagHypermap { tau }
    }
}

impl TryFrom<[Permutation; 3]> for FlagHypermap {
    type Error = Error;
    fn try_from([t0, t1, t2]: [Permutation; 3]) -> Result<Self> {
        FlagHypermap::new(t0, t1, t2)
    }
}

impl From<FlagHypermap> for [Permutation; 3] {
    fn from(hm: FlagHypermap) -> Self {
        hm.tau
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn rejects_non_involutions_and_fixed_points() {
        let id = Permutation::identity(2);
        let swap = p("(1 2)", 2);
        assert!(FlagHypermap::new(id, swap.clone(), swap.clone()).is_err());
        let three = p("(1 2 3)", 4);
        assert!(FlagHypermap::new(three, p("(1 2)(3 4)", 4), p("(1 2)(3 4)", 4)).is_err());
        assert!(matches!(
            FlagHypermap::new(swap.clone(), swap, p("(1 2)(3 4)", 4)),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn cells_of_hm0() {
        let hm0 = fixtures::hm0();
        let v = hm0.cells(CellType::Vertex);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].elements, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(v[0].valency, 3);
        let f: Vec<_> = hm0
            .cells(CellType::Face)
            .into_iter()
            .map(|c| c.elements)
            .collect();
        assert_eq!(f, vec![vec![1, 2], vec![3, 4, 5, 6]]);
    }

    #[test]
    fn hyperedges_of_m1_are_edges() {
        let e = fixtures::m1().cells(CellType::Hyperedge);
        assert_eq!(e.len(), 3);
        assert!(e.iter().all(|c| c.valency == 2));
    }

    #[test]
    fn connectivity() {
        assert!(fixtures::m1().is_connected());
        assert!(fixtures::hm0().is_connected());
        let two = fixtures::hm1().disjoint_union(&fixtures::hm1());
        assert!(!two.is_connected());
        assert_eq!(two.components().len(), 2);
        assert!(two.is_orientable());
    }

    #[test]
    fn map_predicate() {
        assert!(fixtures::m0().is_map());
        assert!(fixtures::m1().is_map());
        let hm0 = fixtures::hm0();
        assert!(!hm0.is_map());
        assert_eq!(
            hm0.tau(0).compose(hm0.tau(2)).unwrap().to_string(),
            "(1 4 3)(2 5 6)"
        );
        assert!(!fixtures::hm1().is_map());
    }

    #[test]
    fn orientability() {
        assert!(!fixtures::m0().is_orientable());
        assert!(!fixtures::hm0().is_orientable());
        assert!(fixtures::hm1().is_orientable());
        let m1 = fixtures::m1();
        assert!(m1.is_orientable());
        assert_eq!(m1.even_orbits()[0], vec![1, 3, 5, 7, 8, 12]);
    }

    #[test]
    fn printed_even_products_of_hm0() {
        // tau1 tau0 printed with a typo; the involutions themselves give this
        let hm0 = fixtures::hm0();
        let [t21, t02, t10] = hm0.even_generators();
        assert_eq!(t21.to_string(), "(1 3 5)(2 6 4)");
        assert_eq!(t02.to_string(), "(1 4 3)(2 5 6)");
        assert_eq!(t10.to_string(), "(3 6)(4 5)");
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(fixtures::hm0().euler_characteristic(), 1);
        assert_eq!(fixtures::m0().euler_characteristic(), 1);
        assert_eq!(fixtures::m1().euler_characteristic(), 2);
        assert_eq!(fixtures::hm1().euler_characteristic(), 2);
        assert_eq!(
            fixtures::hm0().genus_info(),
            vec![SurfaceInfo {
                euler_characteristic: 1,
                orientable: false,
                genus: 1
            }]
        );
        let m1v = fixtures::m1()
            .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
            .unwrap();
        assert_eq!(m1v.euler_characteristic(), -2);
        assert_eq!(m1v.genus_info()[0].genus, 2);
    }

    #[test]
    fn genus_info_is_per_component() {
        let u = fixtures::hm0().disjoint_union(&fixtures::m1());
        let info = u.genus_info();
        assert_eq!(info.len(), 2);
        assert_eq!(info[0], SurfaceInfo::new(1, false));
        assert_eq!(info[1], SurfaceInfo::new(2, true));
        assert_eq!(u.euler_characteristic(), 3);
        assert!(!u.is_orientable());
    }

    #[test]
    fn partial_dual_of_m1_at_left_vertex() {
        let m1 = fixtures::m1();
        let d = m1
            .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
            .unwrap();
        assert_eq!(d.tau(0), m1.tau(0));
        assert_eq!(d.tau(1).to_string(), "(1 6)(2 3)(4 5)(7 9)(8 10)(11 12)");
        assert_eq!(d.tau(2).to_string(), "(1 2)(3 4)(5 6)(7 11)(8 9)(10 12)");
    }

    #[test]
    fn partial_dual_matches_transposition_product_formula() {
        // A' = A A^S B^S, B' = B B^S A^S with A^S, B^S the transpositions
        // supported on the selected flags
        let m1 = fixtures::m1();
        let sel = [1usize, 2, 3, 4, 5, 6];
        let (a, b) = (m1.tau(1), m1.tau(2));
        let a_s = a.restrict(&sel).unwrap().permutation;
        let b_s = b.restrict(&sel).unwrap().permutation;
        let a2 = a.compose(&a_s).unwrap().compose(&b_s).unwrap();
        let b2 = b.compose(&b_s).unwrap().compose(&a_s).unwrap();
        let d = m1
            .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
            .unwrap();
        assert_eq!(d.tau(1), &a2);
        assert_eq!(d.tau(2), &b2);
    }

    #[test]
    fn empty_selection_is_identity() {
        for hm in fixtures::all_tau() {
            for t in CellType::ALL {
                assert_eq!(hm.partial_dual(t, &[]).unwrap(), hm);
            }
        }
    }

    #[test]
    fn single_vertex_of_hm0_is_total_dual() {
        let hm0 = fixtures::hm0();
        let d = hm0
            .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
            .unwrap();
        assert_eq!(d.tau(1), hm0.tau(2));
        assert_eq!(d.tau(2), hm0.tau(1));
        assert_eq!(d, hm0.total_dual(CellType::Vertex));
    }

    #[test]
    fn total_dual_swaps_involutions() {
        let m1 = fixtures::m1();
        let d = m1.total_dual(CellType::Vertex);
        assert_eq!(
            d.taus(),
            &[m1.tau(0).clone(), m1.tau(2).clone(), m1.tau(1).clone()]
        );
        for t in CellType::ALL {
            assert_eq!(m1.total_dual(t).total_dual(t), m1);
        }
    }

    #[test]
    fn dual_errors() {
        let m1 = fixtures::m1();
        assert_eq!(
            m1.partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 2)]),
            Err(Error::CellNotFound(CellRef::new(CellType::Vertex, 2)))
        );
        assert!(matches!(
            m1.partial_dual(CellType::Vertex, &[CellRef::new(CellType::Face, 1)]),
            Err(Error::CellTypeMismatch { .. })
        ));
    }

    #[test]
    fn m0_dual_at_one_vertex_is_nonorientable_chi_minus_two() {
        let m0v = fixtures::m0()
            .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
            .unwrap();
        assert_eq!(m0v.euler_characteristic(), -2);
        assert!(!m0v.is_orientable());
        assert_eq!(m0v.cell_count(CellType::Face), 1);
        assert_eq!(m0v.genus_info()[0].genus, 4);
    }
}
