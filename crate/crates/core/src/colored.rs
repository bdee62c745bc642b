//! `[D]`-colored graphs: every vertex meets exactly one edge of each color
//! `0..=D`. Each color class is stored as a fixed-point-free involution on
//! the vertices, so for `D = 2` the graph is literally the flag model.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{orbits, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Permutation>", into = "Vec<Permutation>")]
pub struct ColoredGraph {
    matchings: Vec<Permutation>,
}

impl TryFrom<Vec<Permutation>> for ColoredGraph {
    type Error = Error;

    fn try_from(matchings: Vec<Permutation>) -> Result<Self> {
        Self::new(matchings)
    }
}

impl From<ColoredGraph> for Vec<Permutation> {
    fn from(g: ColoredGraph) -> Self {
        g.matchings
    }
}

/// A connected component of the subgraph spanned by the edges whose colors
/// lie in `colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bubble {
    pub colors: Vec<usize>,
    pub vertices: Vec<usize>,
    pub canonical_id: usize,
}

impl ColoredGraph {
    /// One matching per color, all on the same vertex set.
    pub fn new(matchings: Vec<Permutation>) -> Result<Self> {
        if matchings.len() < 2 {
            return Err(Error::BadColorSet(format!(
                "need at least 2 colors, got {}",
                matchings.len()
            )));
        }
        let n = matchings[0].degree();
        for (c, m) in matchings.iter().enumerate() {
            if m.degree() != n {
                return Err(Error::DomainMismatch {
                    expected: n,
                    found: m.degree(),
                });
            }
            if !m.is_involution() || !m.is_fixed_point_free() {
                return Err(Error::InvalidHypermap(format!(
                    "color {c} is not a perfect matching"
                )));
            }
        }
        Ok(ColoredGraph { matchings })
    }

    /// Builds a graph from `(u, v, color)` edges.
    pub fn from_edges(
        n_vertices: usize,
        colors: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let mut pairs = vec![Vec::new(); colors];
        for &(u, v, c) in edges {
            if c >= colors {
                return Err(Error::BadColor { color: c, colors });
            }
            pairs[c].push((u, v));
        }
        let matchings = pairs
            .iter()
            .map(|ps| Permutation::from_pairs(n_vertices, ps))
            .collect::<Result<Vec<_>>>()?;
        Self::new(matchings)
    }

    pub fn n_vertices(&self) -> usize {
        self.matchings[0].degree()
    }

    /// Number of colors, `D + 1`.
    pub fn n_colors(&self) -> usize {
        self.matchings.len()
    }

    /// `D`, the top color.
    pub fn dimension(&self) -> usize {
        self.matchings.len() - 1
    }

    pub fn matching(&self, color: usize) -> &Permutation {
        &self.matchings[color]
    }

    pub fn matchings(&self) -> &[Permutation] {
        &self.matchings
    }

    pub fn into_matchings(self) -> Vec<Permutation> {
        self.matchings
    }

    /// All edges as `(min endpoint, max endpoint, color)`, sorted by color
    /// then by smaller endpoint.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.n_vertices() / 2 * self.n_colors());
        for (c, m) in self.matchings.iter().enumerate() {
            for u in 1..=self.n_vertices() {
                let v = m.apply(u);
                if u < v {
                    out.push((u, v, c));
                }
            }
        }
        out
    }

    /// The uncolored edge multiset, sorted.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
        e.sort_unstable();
        e
    }

    fn check_colors(&self, colors: &[usize]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = colors.iter().copied().collect();
        if let Some(&c) = set.iter().find(|&&c| c >= self.n_colors()) {
            return Err(Error::BadColor {
                color: c,
                colors: self.n_colors(),
            });
        }
        Ok(set.into_iter().collect())
    }

    /// Bubbles of the given colors, sorted by smallest vertex. The empty color
    /// set gives one bubble per vertex.
    pub fn bubbles(&self, colors: &[usize]) -> Result<Vec<Bubble>> {
        let colors = self.check_colors(colors)?;
        let gens: Vec<Permutation> = colors.iter().map(|&c| self.matchings[c].clone()).collect();
        Ok(orbits(&gens, self.n_vertices())?
            .into_iter()
            .map(|vertices| Bubble {
                colors: colors.clone(),
                canonical_id: vertices[0],
                vertices,
            })
            .collect())
    }

    /// Bubbles over every color subset of size `k`, subsets in
    /// lexicographic order.
    pub fn all_bubbles(&self, k: usize) -> Result<Vec<Bubble>> {
        if k > self.n_colors() {
            return Err(Error::BadColorSet(format!(
                "no {k}-subsets of {} colors",
                self.n_colors()
            )));
        }
        let mut out = Vec::new();
        for subset in combinations(self.n_colors(), k) {
            out.extend(self.bubbles(&subset)?);
        }
        Ok(out)
    }

    /// Bubble counts `B^I` for every color subset `I`, indexed by bitmask.
    pub fn bubble_count_vector(&self) -> Vec<usize> {
        (0u64..(1 << self.n_colors()))
            .map(|mask| {
                let colors: Vec<usize> = (0..self.n_colors())
                    .filter(|c| mask >> c & 1 == 1)
                    .collect();
                self.bubbles(&colors).expect("colors in range").len()
            })
            .collect()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        orbits(&self.matchings, self.n_vertices()).expect("same degree")
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Breadth-first two-coloring over all color classes.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n_vertices();
        let mut side = vec![u8::MAX; n + 1];
        let mut queue = VecDeque::new();
        for start in 1..=n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for m in &self.matchings {
                    let v = m.apply(u);
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn resolve_bubbles(&self, colors: &[usize], ids: &[usize]) -> Result<Vec<bool>> {
        let bubbles = self.bubbles(colors)?;
        let mut inside = vec![false; self.n_vertices() + 1];
        for &id in ids {
            let b = bubbles
                .binary_search_by_key(&id, |b| b.canonical_id)
                .map_err(|_| Error::BubbleNotFound {
                    colors: bubbles
                        .first()
                        .map(|b| b.colors.clone())
                        .unwrap_or_default(),
                    id,
                })?;
            for &x in &bubbles[b].vertices {
                inside[x] = true;
            }
        }
        Ok(inside)
    }

    /// Exchanges colors `c1` and `c2` on every edge inside the selected
    /// `{c1, c2}`-bubbles, named by their smallest vertex.
    pub fn swap_colors_in_bubbles(
        &self,
        c1: usize,
        c2: usize,
        bubble_ids: &[usize],
    ) -> Result<Self> {
        if c1 == c2 {
            return Err(Error::BadColorSet(format!(
                "cannot swap color {c1} with itself"
            )));
        }
        let inside = self.resolve_bubbles(&[c1, c2], bubble_ids)?;
        let (m1, m2) = (self.matchings[c1].images(), self.matchings[c2].images());
        let (mut n1, mut n2) = (m1.clone(), m2.clone());
        for x in 1..=self.n_vertices() {
            if inside[x] {
                n1[x - 1] = m2[x - 1];
                n2[x - 1] = m1[x - 1];
            }
        }
        let mut matchings = self.matchings.clone();
        matchings[c1] = Permutation::from_images(n1)?;
        matchings[c2] = Permutation::from_images(n2)?;
        Ok(ColoredGraph { matchings })
    }

    /// Recolors the edges inside selected `I`-bubbles, `|I| = D`: an edge of
    /// color `c` in `I` takes color `pi[c]`. `pi` is indexed by color, has
    /// length `D + 1`, permutes `I` and fixes the remaining color.
    pub fn recolor_bubbles(
        &self,
        colors: &[usize],
        bubble_ids: &[usize],
        pi: &[usize],
    ) -> Result<Self> {
        let colors = self.check_colors(colors)?;
        if colors.len() != self.dimension() {
            return Err(Error::BadColorSet(format!(
                "need {} colors, got {:?}",
                self.dimension(),
                colors
            )));
        }
        check_color_permutation(pi, &colors, self.n_colors())?;
        let inside = self.resolve_bubbles(&colors, bubble_ids)?;
        let mut images: Vec<Vec<usize>> = self.matchings.iter().map(|m| m.images()).collect();
        for &c in &colors {
            let target = pi[c];
            for x in 1..=self.n_vertices() {
                if inside[x] {
                    images[target][x - 1] = self.matchings[c].apply(x);
                }
            }
        }
        let matchings = images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        let out = ColoredGraph::new(matchings)?;
        debug_assert_eq!(
            self.bubbles(&colors).map(|b| b.len()).ok(),
            out.bubbles(&colors).map(|b| b.len()).ok(),
            "recoloring inside I-bubbles keeps them closed"
        );
        Ok(out)
    }

    /// `B_2 - n / 2` for a `[2]`-colored graph.
    pub fn euler_characteristic_2d(&self) -> Result<i64> {
        if self.dimension() != 2 {
            return Err(Error::BadDimension {
                expected: 2,
                found: self.dimension(),
            });
        }
        let b2 = self.all_bubbles(2)?.len() as i64;
        Ok(b2 - (self.n_vertices() / 2) as i64)
    }

    /// Applies a vertex relabeling: vertex `x` becomes `relabel(x)`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<Self> {
        let inv = relabel.inverse();
        let matchings = self
            .matchings
            .iter()
            .map(|m| relabel.compose(m)?.compose(&inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(ColoredGraph { matchings })
    }
}

fn check_color_permutation(pi: &[usize], colors: &[usize], n_colors: usize) -> Result<()> {
    if pi.len() != n_colors {
        return Err(Error::BadColorSet(format!(
            "color permutation has length {}, expected {n_colors}",
            pi.len()
        )));
    }
    let mut hit = vec![false; n_colors];
    for (c, &img) in pi.iter().enumerate() {
        if img >= n_colors || hit[img] {
            return Err(Error::BadColorSet("color map is not a permutation".into()));
        }
        hit[img] = true;
        let in_set = colors.contains(&c);
        if in_set != colors.contains(&img) || (!in_set && img != c) {
            return Err(Error::BadColorSet(format!(
                "color permutation must permute {colors:?} and fix the rest"
            )));
        }
    }
    Ok(())
}

/// Parses cycle notation over colors `0..n_colors` into an image table.
pub fn parse_color_permutation(text: &str, n_colors: usize) -> Result<Vec<usize>> {
    let cycles = crate::perm::parse_cycle_list(text, n_colors, 0)?;
    let mut pi: Vec<usize> = (0..n_colors).collect();
    for cycle in cycles {
        for (k, &c) in cycle.iter().enumerate() {
            pi[c] = cycle[(k + 1) % cycle.len()];
        }
    }
    Ok(pi)
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for c in start..n {
            current.push(c);
            go(c + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}
