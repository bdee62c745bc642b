//! Conversions among the three models.
//!
//! Half-edge to flag model doubles every half-edge: the half-edge of rank
//! `r` (0-based, in increasing label order) becomes the flags `2r + 1` (its
//! `+` side) and `2r + 2` (its `-` side). `tau2` joins the two sides,
//!
//! ```text
//! tau0(i-) = sigma_e(i)+      tau0(i+) = sigma_e^-1(i)-
//! tau1(i-) = sigma_v^-1(i)+   tau1(i+) = sigma_v(i)-
//! ```
//!
//! The flag to colored-graph direction is a reinterpretation: vertices are
//! flags and the color `i` edges are the transpositions of `tau_i`.

use crate::colored::ColoredGraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sigma::OrientedHypermap;
use crate::tau::FlagHypermap;

/// Flag index of the `+` side of the half-edge with the given rank.
pub fn plus_flag(rank: usize) -> usize {
    2 * rank + 1
}

/// Flag index of the `-` side of the half-edge with the given rank.
pub fn minus_flag(rank: usize) -> usize {
    2 * rank + 2
}

/// Doubling construction.
pub fn sigma_to_tau(hm: &OrientedHypermap) -> FlagHypermap {
    let labels = hm.labels();
    let n = labels.len();
    let mut rank = vec![usize::MAX; hm.degree() + 1];
    for (r, &x) in labels.iter().enumerate() {
        rank[x] = r;
    }
    let (sv, se) = (hm.sigma_v(), hm.sigma_e());
    let (sv_inv, se_inv) = (sv.inverse(), se.inverse());
    let mut t0 = vec![0; 2 * n];
    let mut t1 = vec![0; 2 * n];
    let mut t2 = vec![0; 2 * n];
    for (r, &i) in labels.iter().enumerate() {
        let (plus, minus) = (plus_flag(r), minus_flag(r));
        t2[plus - 1] = minus;
        t2[minus - 1] = plus;
        t0[minus - 1] = plus_flag(rank[se.apply(i)]);
        t0[plus - 1] = minus_flag(rank[se_inv.apply(i)]);
        t1[minus - 1] = plus_flag(rank[sv_inv.apply(i)]);
        t1[plus - 1] = minus_flag(rank[sv.apply(i)]);
    }
    let perm = |v| Permutation::from_images(v).expect("doubling yields permutations");
    FlagHypermap::new(perm(t0), perm(t1), perm(t2)).expect("doubling yields involutions")
}

/// Result of reading off the half-edge model of an orientable flag hypermap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedView {
    pub hypermap: OrientedHypermap,
    /// The chosen `+` orbit: the even-word orbit through the smallest flag of
    /// each component.
    pub plus_orbit: Vec<usize>,
}

/// Restricts `tau2 tau1`, `tau0 tau2`, `tau1 tau0` to the `+` orbit. Labels
/// are the flag labels of that orbit.
pub fn tau_to_sigma(hm: &FlagHypermap) -> Result<OrientedView> {
    if !hm.is_orientable() {
        return Err(Error::NotOrientable);
    }
    let n = hm.n_flags();
    let mut in_plus = vec![false; n + 1];
    let even = hm.even_orbits();
    let mut orbit_of = vec![0; n + 1];
    for (k, o) in even.iter().enumerate() {
        for &x in o {
            orbit_of[x] = k;
        }
    }
    for component in hm.components() {
        for &x in &even[orbit_of[component[0]]] {
            in_plus[x] = true;
        }
    }
    let plus_orbit: Vec<usize> = (1..=n).filter(|&x| in_plus[x]).collect();
    let [v, e, f] = hm.even_generators();
    let restrict =
        |p: Permutation| -> Result<Permutation> { Ok(p.restrict(&plus_orbit)?.permutation) };
    let hypermap =
        OrientedHypermap::from_parts(plus_orbit.clone(), restrict(v)?, restrict(e)?, restrict(f)?)?;
    Ok(OrientedView {
        hypermap,
        plus_orbit,
    })
}

impl From<FlagHypermap> for ColoredGraph {
    fn from(hm: FlagHypermap) -> Self {
        ColoredGraph::new(hm.into_taus().to_vec()).expect("flag involutions are matchings")
    }
}

impl TryFrom<ColoredGraph> for FlagHypermap {
    type Error = Error;

    fn try_from(g: ColoredGraph) -> Result<Self> {
        colored_to_tau(&g)
    }
}

pub fn tau_to_colored(hm: &FlagHypermap) -> ColoredGraph {
    ColoredGraph::from(hm.clone())
}

pub fn colored_to_tau(g: &ColoredGraph) -> Result<FlagHypermap> {
    if g.dimension() != 2 {
        return Err(Error::BadDimension {
            expected: 2,
            found: g.dimension(),
        });
    }
    let [t0, t1, t2]: [Permutation; 3] =
        g.matchings().to_vec().try_into().expect("three matchings");
    FlagHypermap::new(t0, t1, t2)
}

pub fn sigma_to_colored(hm: &OrientedHypermap) -> ColoredGraph {
    ColoredGraph::from(sigma_to_tau(hm))
}
