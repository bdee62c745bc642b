//! Permutations of `{1..n}` and the orbit machinery the hypermap models are
//! built on.
//!
//! Every public interface speaks 1-based labels. Products read right to left:
//! `p.compose(&q)` is the permutation `x ↦ p(q(x))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1..degree}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

/// Canonical cycle decomposition: each cycle starts at its minimum, cycles are
/// sorted by minimum, fixed points are included as 1-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

/// A permutation restricted to an invariant subset. Labels are kept; points
/// outside `support` are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub permutation: Permutation,
    pub support: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be positive");
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list: `images[i - 1] = p(i)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} of {} is outside 1..={n}",
                    i + 1
                )));
            }
            if seen[img - 1] {
                return Err(Error::InvalidPermutation(format!("{img} is hit twice")));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation of `{1..degree}` from disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "{x} is outside 1..={degree}"
                    )));
                }
                if used[x - 1] {
                    return Err(Error::InvalidPermutation(format!("{x} appears twice")));
                }
                used[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Product of disjoint transpositions.
    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let cycles: Vec<[usize; 2]> = pairs.iter().map(|&(a, b)| [a, b]).collect();
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based label `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `x ↦ self(other(x))`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| self.images[j] == i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i != j)
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// Cycles of length at least two, in canonical order.
    pub fn nontrivial_cycles(&self) -> Vec<Vec<usize>> {
        self.cycle_decomposition()
            .cycles
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// Restriction to a subset that `self` maps into itself.
    pub fn restrict(&self, subset: &[usize]) -> Result<Restriction> {
        let n = self.degree();
        let mut member = vec![false; n];
        for &x in subset {
            if x == 0 || x > n {
                return Err(Error::DomainMismatch {
                    expected: n,
                    found: x,
                });
            }
            member[x - 1] = true;
        }
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &inside) in member.iter().enumerate() {
            if inside {
                let j = self.images[i];
                if !member[j] {
                    return Err(Error::NotInvariant { element: i + 1 });
                }
                images[i] = j;
            }
        }
        let support = (1..=n).filter(|&x| member[x - 1]).collect();
        Ok(Restriction {
            permutation: Permutation { images },
            support,
        })
    }

    /// Parses cycle notation (`"id"` or `"(1 3 5)(7 8 12)"`) over `{1..degree}`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text, degree, 1)?;
        Self::from_cycles(degree, &cycles)
    }

    pub(crate) fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DomainMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation with fixed points omitted; `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.nontrivial_cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of cycles, fixed points included.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles)
            .expect("canonical decomposition is a partition")
    }
}

/// Orbits of the group generated by `generators` on `{1..n}`.
///
/// Blocks are sorted internally and ordered by minimum. With no generators
/// every point is its own orbit.
pub fn orbits(generators: &[Permutation], n: usize) -> Result<Vec<Vec<usize>>> {
    for g in generators {
        if g.degree() != n {
            return Err(Error::DomainMismatch {
                expected: n,
                found: g.degree(),
            });
        }
    }
    let mut block = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if block[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![start + 1];
        block[start] = id;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for g in generators {
                let y = g.images[x];
                if block[y] == usize::MAX {
                    block[y] = id;
                    members.push(y + 1);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    Ok(blocks)
}

/// Parses a list of cycles. `base` is the smallest admissible element
/// (1 for permutation labels, 0 for color indices); elements range over
/// `base..base + size`.
pub(crate) fn parse_cycle_list(text: &str, size: usize, base: usize) -> Result<Vec<Vec<usize>>> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if trimmed == "id" {
        return Ok(Vec::new());
    }
    let bytes = text.as_bytes();
    let mut pos = offset;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let col = |p: usize| p + 1;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(1, col(pos), "expected `id` or a cycle"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::parse(1, col(pos), "expected `(`"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(Error::parse(1, col(pos), "unterminated cycle"));
            }
            if bytes[pos] == b')' {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::parse(
                    1,
                    col(pos),
                    format!("unexpected character `{}`", bytes[pos] as char),
                ));
            }
            let value: usize = text[start..pos]
                .parse()
                .map_err(|_| Error::parse(1, col(start), "integer out of range"))?;
            if value < base || value >= base + size {
                return Err(Error::parse(
                    1,
                    col(start),
                    format!("{value} is outside {base}..={}", base + size - 1),
                ));
            }
            if !seen.insert(value) {
                return Err(Error::parse(1, col(start), format!("{value} repeated")));
            }
            cycle.push(value);
            // elements inside a cycle are separated by whitespace
            if pos < bytes.len() && bytes[pos] != b')' && !bytes[pos].is_ascii_whitespace() {
                return Err(Error::parse(
                    1,
                    col(pos),
                    format!("unexpected character `{}`", bytes[pos] as char),
                ));
            }
        }
        if cycle.is_empty() {
            return Err(Error::parse(1, col(pos - 1), "empty cycle"));
        }
        cycles.push(cycle);
        skip_ws(&mut pos);
    }
    Ok(cycles)
}
