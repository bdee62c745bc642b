//! Random instances and the property suite for partial duality.
//!
//! Instance `i` of a run with seed `s` draws everything from
//! `Lcg64::new(s + i)` (wrapping): first a flag hypermap with an even number
//! of flags in `2..=max_size` and a selection scenario for it, then a
//! half-edge hypermap on `1..=max(1, max_size / 2)` half-edges and its
//! scenario. A failure is reported with that seed.
//!
//! A scenario picks a cell type uniformly, two independent uniform subsets of
//! its cells (each cell kept with probability 1/2), and one extra cell
//! outside the first subset when there is one.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::colored::ColoredGraph;
use crate::convert::{colored_to_tau, plus_flag, sigma_to_tau, tau_to_sigma};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::isomorphism::are_isomorphic;
use crate::model::{Cell, CellRef, CellType};
use crate::perm::Permutation;
use crate::rng::Lcg64;
use crate::sigma::OrientedHypermap;
use crate::tau::FlagHypermap;

const MAX_CONNECT_ATTEMPTS: usize = 1000;

fn random_matching(rng: &mut Lcg64, n: usize) -> Permutation {
    let mut points: Vec<usize> = (1..=n).collect();
    rng.shuffle(&mut points);
    let pairs: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
    Permutation::from_pairs(n, &pairs).expect("disjoint pairs")
}

fn random_permutation(rng: &mut Lcg64, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    rng.shuffle(&mut images);
    Permutation::from_images(images).expect("shuffled identity")
}

fn draw_flag_hypermap(rng: &mut Lcg64, n_flags: usize, connected: bool) -> Result<FlagHypermap> {
    if n_flags < 2 || !n_flags.is_multiple_of(2) {
        return Err(Error::BadSize(format!(
            "number of flags must be even and at least 2, got {n_flags}"
        )));
    }
    for _ in 0..MAX_CONNECT_ATTEMPTS {
        let t0 = random_matching(rng, n_flags);
        let t1 = random_matching(rng, n_flags);
        let t2 = random_matching(rng, n_flags);
        let hm = FlagHypermap::new(t0, t1, t2)?;
        if !connected || hm.is_connected() {
            return Ok(hm);
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_CONNECT_ATTEMPTS,
    })
}

/// Three independent uniform perfect matchings (shuffle and pair). With
/// `connected`, draws are repeated until the result is connected.
pub fn random_flag_hypermap(n_flags: usize, seed: u64, connected: bool) -> Result<FlagHypermap> {
    draw_flag_hypermap(&mut Lcg64::new(seed), n_flags, connected)
}

fn draw_oriented_hypermap(rng: &mut Lcg64, n: usize) -> Result<OrientedHypermap> {
    if n == 0 {
        return Err(Error::BadSize("need at least one half-edge".into()));
    }
    let v = random_permutation(rng, n);
    let e = random_permutation(rng, n);
    OrientedHypermap::make(n, v, e)
}

/// Uniform `sigma_v` and `sigma_e` on `1..=n`; `sigma_f` completes the triple.
pub fn random_oriented_hypermap(n: usize, seed: u64) -> Result<OrientedHypermap> {
    draw_oriented_hypermap(&mut Lcg64::new(seed), n)
}

/// The partial-duality operations under test. The provided methods are the
/// library's own; a test can substitute a faulty one to check that the suite
/// notices.
pub trait Dualizer {
    fn tau_dual(&self, hm: &FlagHypermap, t: CellType, cells: &[CellRef]) -> Result<FlagHypermap> {
        hm.partial_dual(t, cells)
    }

    fn sigma_dual(
        &self,
        hm: &OrientedHypermap,
        t: CellType,
        cells: &[CellRef],
    ) -> Result<OrientedHypermap> {
        hm.partial_dual(t, cells)
    }

    fn colored_swap(
        &self,
        g: &ColoredGraph,
        c1: usize,
        c2: usize,
        ids: &[usize],
    ) -> Result<ColoredGraph> {
        g.swap_colors_in_bubbles(c1, c2, ids)
    }
}

/// The library's partial duality.
pub struct Reference;

impl Dualizer for Reference {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub count: usize,
    pub max_size: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyStats {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    /// Instance seed, or `None` for a fixture.
    pub seed: Option<u64>,
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub instances: usize,
    pub properties: BTreeMap<String, PropertyStats>,
    pub failures: Vec<Failure>,
    /// Recorded but never asserted.
    pub observations: BTreeMap<String, Observation>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub held: usize,
    pub total: usize,
}

#[derive(Serialize)]
struct Summary<'a> {
    passed: bool,
    instances: usize,
    checks: usize,
    properties: &'a BTreeMap<String, PropertyStats>,
    observations: &'a BTreeMap<String, Observation>,
    failing_seeds: Vec<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checks(&self) -> usize {
        self.properties.values().map(|s| s.checked).sum()
    }

    pub fn failing_seeds(&self) -> Vec<u64> {
        let mut seeds: Vec<u64> = self.failures.iter().filter_map(|f| f.seed).collect();
        seeds.sort_unstable();
        seeds.dedup();
        seeds
    }

    pub fn merge(&mut self, other: Report) {
        self.instances += other.instances;
        for (name, stats) in other.properties {
            let entry = self.properties.entry(name).or_default();
            entry.checked += stats.checked;
            entry.failed += stats.failed;
        }
        self.failures.extend(other.failures);
        for (name, o) in other.observations {
            let entry = self.observations.entry(name).or_default();
            entry.held += o.held;
            entry.total += o.total;
        }
        self.sort();
    }

    fn sort(&mut self) {
        self.failures.sort_by(|a, b| {
            (a.seed, &a.subject, &a.property).cmp(&(b.seed, &b.subject, &b.property))
        });
    }

    /// One line per property, one per failure, and a closing result line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, s) in &self.properties {
            let _ = writeln!(
                out,
                "property {name}: {} checked, {} failed",
                s.checked, s.failed
            );
        }
        for (name, o) in &self.observations {
            let _ = writeln!(out, "observed {name}: held in {} of {}", o.held, o.total);
        }
        for f in &self.failures {
            match f.seed {
                Some(seed) => {
                    let _ = writeln!(
                        out,
                        "FAIL {} seed={} {}: {}",
                        f.property, seed, f.subject, f.detail
                    );
                }
                None => {
                    let _ = writeln!(out, "FAIL {} {}: {}", f.property, f.subject, f.detail);
                }
            }
        }
        let _ = writeln!(
            out,
            "result: {} (instances={}, checks={}, failures={})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.checks(),
            self.failures.len()
        );
        out
    }

    /// Machine-readable summary: counts per property and failing seeds.
    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&Summary {
            passed: self.passed(),
            instances: self.instances,
            checks: self.checks(),
            properties: &self.properties,
            observations: &self.observations,
            failing_seeds: self.failing_seeds(),
        })
        .expect("summary serializes")
    }
}

/// Which cells a check dualizes.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub cell_type: CellType,
    pub first: Vec<CellRef>,
    pub second: Vec<CellRef>,
    pub extra: Option<CellRef>,
}

impl Scenario {
    fn draw(rng: &mut Lcg64, cells_of: impl Fn(CellType) -> Vec<Cell>) -> Self {
        let cell_type = CellType::ALL[rng.below(3) as usize];
        let cells: Vec<CellRef> = cells_of(cell_type).into_iter().map(|c| c.cell).collect();
        let first: Vec<CellRef> = cells.iter().copied().filter(|_| rng.coin()).collect();
        let second: Vec<CellRef> = cells.iter().copied().filter(|_| rng.coin()).collect();
        let rest: Vec<CellRef> = cells
            .iter()
            .copied()
            .filter(|c| !first.contains(c))
            .collect();
        let extra = if rest.is_empty() {
            None
        } else {
            Some(rest[rng.below(rest.len() as u32) as usize])
        };
        Scenario {
            cell_type,
            first,
            second,
            extra,
        }
    }

    /// Every subset of cells of every type, paired with the next subset in
    /// binary order.
    fn exhaustive(cells_of: impl Fn(CellType) -> Vec<Cell>) -> Vec<Self> {
        let mut out = Vec::new();
        for t in CellType::ALL {
            let cells: Vec<CellRef> = cells_of(t).into_iter().map(|c| c.cell).collect();
            let k = cells.len().min(10);
            let total = 1usize << k;
            for mask in 0..total {
                let pick = |m: usize| -> Vec<CellRef> {
                    (0..k)
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| cells[i])
                        .collect()
                };
                let first = pick(mask);
                let extra = cells.iter().copied().find(|c| !first.contains(c));
                out.push(Scenario {
                    cell_type: t,
                    first,
                    second: pick((mask + 1) % total),
                    extra,
                });
            }
        }
        out
    }
}

fn symmetric_difference(a: &[CellRef], b: &[CellRef]) -> Vec<CellRef> {
    a.iter()
        .filter(|c| !b.contains(c))
        .chain(b.iter().filter(|c| !a.contains(c)))
        .copied()
        .collect()
}

fn supports(cells: Vec<Cell>) -> Vec<(Vec<usize>, usize)> {
    let mut out: Vec<(Vec<usize>, usize)> = cells
        .into_iter()
        .map(|c| {
            let mut e = c.elements;
            e.sort_unstable();
            (e, c.valency)
        })
        .collect();
    out.sort();
    out
}

fn isomorphic(a: &FlagHypermap, b: &FlagHypermap) -> Result<bool> {
    Ok(are_isomorphic(
        &ColoredGraph::from(a.clone()),
        &ColoredGraph::from(b.clone()),
    )?
    .is_some())
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

type Outcome = Result<(), String>;

fn err(e: Error) -> String {
    e.to_string()
}

struct Checker<'a> {
    dualizer: &'a dyn Dualizer,
    report: Report,
    seed: Option<u64>,
    subject: String,
}

impl Checker<'_> {
    fn check(&mut self, property: &str, f: impl FnOnce() -> Outcome) {
        let stats = self
            .report
            .properties
            .entry(property.to_string())
            .or_default();
        stats.checked += 1;
        if let Err(detail) = f() {
            stats.failed += 1;
            self.report.failures.push(Failure {
                property: property.to_string(),
                seed: self.seed,
                subject: self.subject.clone(),
                detail,
            });
        }
    }

    fn flag_checks(&mut self, hm: &FlagHypermap, sc: &Scenario) {
        let d = self.dualizer;
        let t = sc.cell_type;
        let dual = match d.tau_dual(hm, t, &sc.first) {
            Ok(dual) => dual,
            Err(e) => {
                self.check("tau.well_formed", || Err(err(e)));
                return;
            }
        };
        self.check("tau.well_formed", || {
            ensure(
                dual.taus()
                    .iter()
                    .all(|p| p.is_involution() && p.is_fixed_point_free()),
                || "dual has an involution with fixed points".into(),
            )
        });
        self.check("tau.involution", || {
            let back = d.tau_dual(&dual, t, &sc.first).map_err(err)?;
            ensure(&back == hm, || format!("double dual differs: {back:?}"))
        });
        if let Some(s) = sc.extra {
            self.check("tau.single_cell", || {
                let mut bigger = sc.first.clone();
                bigger.push(s);
                let direct = d.tau_dual(hm, t, &bigger).map_err(err)?;
                let stepwise = d.tau_dual(&dual, t, &[s]).map_err(err)?;
                ensure(direct == stepwise, || {
                    format!("adding {} {} one at a time differs", t, s.id)
                })
            });
        }
        self.check("tau.symmetric_difference", || {
            let twice = d.tau_dual(&dual, t, &sc.second).map_err(err)?;
            let once = d
                .tau_dual(hm, t, &symmetric_difference(&sc.first, &sc.second))
                .map_err(err)?;
            ensure(twice == once, || {
                "composition differs from dual at symmetric difference".into()
            })
        });
        self.check("tau.valency_support", || {
            ensure(supports(hm.cells(t)) == supports(dual.cells(t)), || {
                format!("{t} supports changed")
            })
        });
        self.check("tau.orientability", || {
            ensure(hm.is_orientable() == dual.is_orientable(), || {
                format!(
                    "orientable {} became {}",
                    hm.is_orientable(),
                    dual.is_orientable()
                )
            })
        });
        self.check("tau.total_dual", || {
            let all: Vec<CellRef> = hm.cells(t).iter().map(|c| c.cell).collect();
            let total = d.tau_dual(hm, t, &all).map_err(err)?;
            let (a, b) = t.colors();
            let mut swapped = hm.taus().clone();
            swapped.swap(a, b);
            ensure(total.taus() == &swapped, || {
                "total dual is not an involution swap".into()
            })?;
            ensure(
                total.euler_characteristic() == hm.euler_characteristic(),
                || "total dual changed the Euler characteristic".into(),
            )
        });
        for (label, h) in [("input", hm), ("dual", &dual)] {
            self.check("model.euler_agreement", || {
                let chi = h.euler_characteristic();
                let g = ColoredGraph::from(h.clone());
                let chi_g = g.euler_characteristic_2d().map_err(err)?;
                ensure(chi == chi_g, || {
                    format!("{label}: flag chi {chi} vs colored chi {chi_g}")
                })?;
                if h.is_orientable() {
                    let chi_s = tau_to_sigma(h)
                        .map_err(err)?
                        .hypermap
                        .euler_characteristic();
                    ensure(chi == chi_s, || {
                        format!("{label}: flag chi {chi} vs half-edge chi {chi_s}")
                    })?;
                }
                Ok(())
            });
            self.check("colored.bipartite_orientable", || {
                let g = ColoredGraph::from(h.clone());
                ensure(g.is_bipartite() == h.is_orientable(), || {
                    format!(
                        "{label}: bipartite {} but orientable {}",
                        g.is_bipartite(),
                        h.is_orientable()
                    )
                })
            });
        }
        self.check("colored.swap_matches_tau", || {
            let g = ColoredGraph::from(hm.clone());
            let (a, b) = t.colors();
            let ids: Vec<usize> = sc.first.iter().map(|c| c.id).collect();
            let swapped = d.colored_swap(&g, a, b, &ids).map_err(err)?;
            ensure(swapped.underlying_edges() == g.underlying_edges(), || {
                "underlying graph changed".into()
            })?;
            let back = colored_to_tau(&swapped).map_err(err)?;
            ensure(back == dual, || "color swap differs from flag dual".into())
        });
        if hm.is_orientable() {
            self.check("convert.round_trip", || {
                let view = tau_to_sigma(hm).map_err(err)?;
                ensure(
                    isomorphic(&sigma_to_tau(&view.hypermap), hm).map_err(err)?,
                    || "doubling the half-edge model is not isomorphic to the input".into(),
                )
            });
            self.check("model.duality_commutes", || {
                let view = tau_to_sigma(hm).map_err(err)?;
                let sigma = &view.hypermap;
                let flag_cells = hm.resolve_cells(t, &sc.first).map_err(err)?;
                let mut chosen = Vec::new();
                for cell in sigma.cells(t) {
                    if flag_cells
                        .iter()
                        .any(|fc| fc.elements.binary_search(&cell.cell.id).is_ok())
                    {
                        chosen.push(cell.cell);
                    }
                }
                let sdual = d.sigma_dual(sigma, t, &chosen).map_err(err)?;
                ensure(
                    isomorphic(&sigma_to_tau(&sdual), &dual).map_err(err)?,
                    || "half-edge dual is not isomorphic to flag dual".into(),
                )
            });
        }
    }

    fn oriented_checks(&mut self, hm: &OrientedHypermap, sc: &Scenario) {
        let d = self.dualizer;
        let t = sc.cell_type;
        let dual = match d.sigma_dual(hm, t, &sc.first) {
            Ok(dual) => dual,
            Err(e) => {
                self.check("sigma.relation", || Err(err(e)));
                return;
            }
        };
        self.check("sigma.relation", || {
            let [v, e, f] = dual.triple();
            let product = f.compose(e).and_then(|fe| fe.compose(v)).map_err(err)?;
            ensure(product.is_identity(), || {
                format!("sigma_f sigma_e sigma_v = {product}")
            })?;
            ensure(dual.n_halfedges() == hm.n_halfedges(), || {
                "half-edge count changed".into()
            })
        });
        self.check("sigma.involution", || {
            let back = d.sigma_dual(&dual, t, &sc.first).map_err(err)?;
            ensure(&back == hm, || "double dual differs".into())
        });
        if let Some(s) = sc.extra {
            self.check("sigma.single_cell", || {
                let mut bigger = sc.first.clone();
                bigger.push(s);
                let direct = d.sigma_dual(hm, t, &bigger).map_err(err)?;
                let stepwise = d.sigma_dual(&dual, t, &[s]).map_err(err)?;
                ensure(direct == stepwise, || {
                    format!("adding {} {} one at a time differs", t, s.id)
                })
            });
        }
        self.check("sigma.symmetric_difference", || {
            let twice = d.sigma_dual(&dual, t, &sc.second).map_err(err)?;
            let once = d
                .sigma_dual(hm, t, &symmetric_difference(&sc.first, &sc.second))
                .map_err(err)?;
            ensure(twice == once, || {
                "composition differs from dual at symmetric difference".into()
            })
        });
        self.check("sigma.valency_support", || {
            ensure(supports(hm.cells(t)) == supports(dual.cells(t)), || {
                format!("{t} supports changed")
            })
        });
        self.check("sigma.total_dual", || {
            let all: Vec<CellRef> = hm.cells(t).iter().map(|c| c.cell).collect();
            let total = d.sigma_dual(hm, t, &all).map_err(err)?;
            ensure(total == hm.total_dual_closed_form(t), || {
                "total dual differs from the closed form".into()
            })
        });
        self.check("sigma.orientability", || {
            ensure(sigma_to_tau(&dual).is_orientable(), || {
                "doubled dual is not orientable".into()
            })
        });
        self.check("model.euler_agreement", || {
            let chi = hm.euler_characteristic();
            let flags = sigma_to_tau(hm);
            let chi_t = flags.euler_characteristic();
            let chi_g = ColoredGraph::from(flags)
                .euler_characteristic_2d()
                .map_err(err)?;
            ensure(chi == chi_t && chi == chi_g, || {
                format!("half-edge chi {chi}, flag chi {chi_t}, colored chi {chi_g}")
            })
        });
        self.check("model.duality_commutes", || {
            let flags = sigma_to_tau(hm);
            let mut chosen = Vec::new();
            let flag_cells = flags.cells(t);
            for c in &sc.first {
                let rank = hm
                    .labels()
                    .binary_search(&c.id)
                    .map_err(|_| "unknown half-edge".to_string())?;
                let flag = plus_flag(rank);
                let cell = flag_cells
                    .iter()
                    .find(|fc| fc.elements.binary_search(&flag).is_ok())
                    .ok_or_else(|| format!("no flag cell holds flag {flag}"))?;
                chosen.push(cell.cell);
            }
            let tdual = d.tau_dual(&flags, t, &chosen).map_err(err)?;
            ensure(
                isomorphic(&sigma_to_tau(&dual), &tdual).map_err(err)?,
                || "doubled half-edge dual is not isomorphic to flag dual of the doubling".into(),
            )
        });
        self.check("sigma.reverse_orientation", || {
            let rev = hm.reverse_orientation();
            ensure(
                isomorphic(&sigma_to_tau(&rev), &sigma_to_tau(hm)).map_err(err)?,
                || "reversed hypermap is not isomorphic as a colored graph".into(),
            )
        });
    }
}

/// Recoloring in a `[3]`-colored graph: does recoloring bubbles `S1` and
/// then `S2` with the same color permutation equal recoloring `S1 xor S2`?
/// Counted per order of the permutation.
fn observe_recoloring(rng: &mut Lcg64, n: usize, into: &mut BTreeMap<String, Observation>) {
    let matchings = (0..4).map(|_| random_matching(rng, n)).collect();
    let g = ColoredGraph::new(matchings).expect("random matchings");
    let mut all = vec![0, 1, 2, 3];
    rng.shuffle(&mut all);
    let mut colors = all[..3].to_vec();
    colors.sort_unstable();
    let mut targets = colors.clone();
    rng.shuffle(&mut targets);
    let mut pi: Vec<usize> = (0..4).collect();
    for (&c, &t) in colors.iter().zip(&targets) {
        pi[c] = t;
    }
    let order = match colors.iter().filter(|&&c| pi[c] != c).count() {
        0 => return,
        2 => 2,
        _ => 3,
    };
    let ids: Vec<usize> = g
        .bubbles(&colors)
        .expect("valid colors")
        .iter()
        .map(|b| b.canonical_id)
        .collect();
    let first: Vec<usize> = ids.iter().copied().filter(|_| rng.coin()).collect();
    let second: Vec<usize> = ids.iter().copied().filter(|_| rng.coin()).collect();
    let both: Vec<usize> = first
        .iter()
        .filter(|c| !second.contains(c))
        .chain(second.iter().filter(|c| !first.contains(c)))
        .copied()
        .collect();
    let twice = g
        .recolor_bubbles(&colors, &first, &pi)
        .and_then(|h| h.recolor_bubbles(&colors, &second, &pi));
    let once = g.recolor_bubbles(&colors, &both, &pi);
    let entry = into
        .entry(format!("recolor.symmetric_difference.order{order}"))
        .or_default();
    entry.total += 1;
    if matches!((twice, once), (Ok(a), Ok(b)) if a == b) {
        entry.held += 1;
    }
}

/// Runs every property on `config.count` random flag hypermaps and
/// `config.count` random half-edge hypermaps.
pub fn run_property_suite(config: SuiteConfig) -> Report {
    run_property_suite_with(config, &Reference)
}

pub fn run_property_suite_with(config: SuiteConfig, dualizer: &dyn Dualizer) -> Report {
    let max_flags = config.max_size.max(2);
    let max_halfedges = (config.max_size / 2).max(1);
    let mut checker = Checker {
        dualizer,
        report: Report::default(),
        seed: None,
        subject: String::new(),
    };
    for i in 0..config.count {
        let seed = config.seed.wrapping_add(i as u64);
        let mut rng = Lcg64::new(seed);
        checker.seed = Some(seed);

        let n_flags = 2 * rng.range_inclusive(1, max_flags / 2);
        let hm = draw_flag_hypermap(&mut rng, n_flags, false).expect("even size");
        let sc = Scenario::draw(&mut rng, |t| hm.cells(t));
        checker.subject = format!("tau n_flags={n_flags} type={}", sc.cell_type);
        checker.flag_checks(&hm, &sc);

        let n = rng.range_inclusive(1, max_halfedges);
        let shm = draw_oriented_hypermap(&mut rng, n).expect("positive size");
        let sc = Scenario::draw(&mut rng, |t| shm.cells(t));
        checker.subject = format!("sigma n={n} type={}", sc.cell_type);
        checker.oriented_checks(&shm, &sc);

        let n = 2 * rng.range_inclusive(1, max_flags / 2);
        observe_recoloring(&mut rng, n, &mut checker.report.observations);

        checker.report.instances += 1;
    }
    let mut report = checker.report;
    report.sort();
    report
}

/// Runs every property on the worked examples, over all cell subsets.
pub fn run_fixture_suite() -> Report {
    run_fixture_suite_with(&Reference)
}

pub fn run_fixture_suite_with(dualizer: &dyn Dualizer) -> Report {
    let mut checker = Checker {
        dualizer,
        report: Report::default(),
        seed: None,
        subject: String::new(),
    };
    for (name, hm) in fixtures::named_tau() {
        for sc in Scenario::exhaustive(|t| hm.cells(t)) {
            checker.subject = format!("{name} (tau) type={}", sc.cell_type);
            checker.flag_checks(&hm, &sc);
        }
        checker.report.instances += 1;
    }
    for (name, hm) in fixtures::named_sigma() {
        for sc in Scenario::exhaustive(|t| hm.cells(t)) {
            checker.subject = format!("{name} (sigma) type={}", sc.cell_type);
            checker.oriented_checks(&hm, &sc);
        }
        checker.report.instances += 1;
    }
    checker.report.sort();
    checker.report
}
