//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Every comparison is exact (tolerance 0); the
//! property suite requires zero failures.

use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use hypermap::fixtures::{hm0, hm1, hm1_sigma, m0, m1, m1_sigma};
use hypermap::io::{parse, serialize};
use hypermap::{
    are_isomorphic, colored_to_tau, export_dot, random_flag_hypermap, run_fixture_suite,
    run_property_suite, sigma_to_tau, tau_to_sigma, CellRef, CellType, ColoredGraph, Document,
    Error, FlagHypermap, Lcg64, OrientedHypermap, Permutation, SuiteConfig,
};

const SUITE_COUNT: usize = 1000;
const SUITE_MAX_SIZE: usize = 24;
const SUITE_SEED: u64 = 1;
const COLORED_RANDOM_INSTANCES: usize = 200;
const COLORED_SEED: u64 = 7_000;

type Check = Result<(), String>;

type Criterion = (&'static str, fn() -> Check);

/// Colors, bubble ids, color permutation, expected order.
type RecolorCase<'a> = (&'a [usize], &'a [usize], [usize; 4], usize);

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).expect("literal permutation")
}

fn isomorphic(a: &FlagHypermap, b: &FlagHypermap) -> bool {
    are_isomorphic(
        &ColoredGraph::from(a.clone()),
        &ColoredGraph::from(b.clone()),
    )
    .expect("same number of colors")
    .is_some()
}

fn all_cells(hm: &FlagHypermap, t: CellType) -> Vec<CellRef> {
    hm.cells(t).into_iter().map(|c| c.cell).collect()
}

fn criterion_1() -> Check {
    let dual = m1_sigma()
        .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
        .map_err(|e| e.to_string())?;
    expect(
        "sigma_v",
        dual.sigma_v().to_string(),
        "(1 5 3)(7 8 12)".into(),
    )?;
    expect(
        "sigma_e",
        dual.sigma_e().to_string(),
        "(1 12 3 8 5 7)".into(),
    )?;
    expect(
        "sigma_f",
        dual.sigma_f().to_string(),
        "(1 12 3 8 5 7)".into(),
    )
}

fn criterion_2() -> Check {
    let dual = m1()
        .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
        .map_err(|e| e.to_string())?;
    let want = [
        p("(1 11)(2 12)(3 10)(4 8)(5 9)(6 7)", 12),
        p("(1 6)(2 3)(4 5)(7 9)(8 10)(11 12)", 12),
        p("(1 2)(3 4)(5 6)(7 11)(8 9)(10 12)", 12),
    ];
    expect("taus", dual.taus(), &want)
}

fn criterion_3() -> Check {
    for (name, hm, chi, orientable, is_map) in [
        ("m1", m1(), 2, true, true),
        ("hm1", hm1(), 2, true, false),
        ("hm0", hm0(), 1, false, false),
        ("m0", m0(), 1, false, true),
    ] {
        expect(&format!("chi({name})"), hm.euler_characteristic(), chi)?;
        expect(
            &format!("orientable({name})"),
            hm.is_orientable(),
            orientable,
        )?;
        expect(&format!("is_map({name})"), hm.is_map(), is_map)?;
    }
    expect("chi(m1 sigma)", m1_sigma().euler_characteristic(), 2)?;
    expect("chi(hm1 sigma)", hm1_sigma().euler_characteristic(), 2)?;
    let v = m1()
        .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
        .map_err(|e| e.to_string())?;
    expect("chi(m1^{v})", v.euler_characteristic(), -2)?;
    let surface = &v.genus_info()[0];
    expect("m1^{v} orientable", surface.orientable, true)?;
    expect("genus(m1^{v})", surface.genus, 2)?;
    let s = m1_sigma()
        .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
        .map_err(|e| e.to_string())?;
    expect("genus(m1^{v} sigma)", s.genus(), Some(2))?;
    let w = m0()
        .partial_dual(CellType::Vertex, &[CellRef::new(CellType::Vertex, 1)])
        .map_err(|e| e.to_string())?;
    expect("chi(m0^{v})", w.euler_characteristic(), -2)?;
    expect("orientable(m0^{v})", w.is_orientable(), false)?;
    expect("crosscaps(m0^{v})", w.genus_info()[0].genus, 4)
}

fn criterion_4() -> Check {
    let view = tau_to_sigma(&m1()).map_err(|e| e.to_string())?;
    expect(
        "plus orbit",
        view.plus_orbit.clone(),
        vec![1, 3, 5, 7, 8, 12],
    )?;
    let hm = &view.hypermap;
    expect(
        "sigma_v",
        hm.sigma_v().to_string(),
        "(1 3 5)(7 8 12)".into(),
    )?;
    expect(
        "sigma_e",
        hm.sigma_e().to_string(),
        "(1 7)(3 12)(5 8)".into(),
    )?;
    expect(
        "sigma_f",
        hm.sigma_f().to_string(),
        "(1 12)(3 8)(5 7)".into(),
    )?;
    expect(
        "hm0",
        tau_to_sigma(&hm0()).map(|_| ()),
        Err(Error::NotOrientable),
    )
}

/// Product forms of the total duals, composed here from the input triple.
fn total_dual_products(hm: &OrientedHypermap, t: CellType) -> [Permutation; 3] {
    let (v, e, f) = (hm.sigma_v(), hm.sigma_e(), hm.sigma_f());
    let c = |a: &Permutation, b: &Permutation| a.compose(b).expect("same degree");
    match t {
        CellType::Vertex => [v.inverse(), c(e, v), c(v, f)],
        CellType::Hyperedge => [c(e, v), e.inverse(), c(f, e)],
        CellType::Face => [c(v, f), c(f, e), f.inverse()],
    }
}

fn criterion_5() -> Check {
    for (name, hm) in [("m1", m1_sigma()), ("hm1", hm1_sigma())] {
        for t in CellType::ALL {
            let all: Vec<CellRef> = hm.cells(t).into_iter().map(|c| c.cell).collect();
            let dual = hm.partial_dual(t, &all).map_err(|e| e.to_string())?;
            let closed = hm.total_dual_closed_form(t);
            expect(&format!("{name}^{t} closed form"), &dual, &closed)?;
            let [v, e, f] = dual.triple();
            let got = [v.clone(), e.clone(), f.clone()];
            expect(
                &format!("{name}^{t} product form"),
                got,
                total_dual_products(&hm, t),
            )?;
        }
    }
    let hm1_v = hm1_sigma().total_dual(CellType::Vertex);
    let valencies: Vec<usize> = hm1_v
        .cells(CellType::Hyperedge)
        .iter()
        .map(|c| c.valency)
        .collect();
    expect("hyperedge valencies of hm1^V", valencies, vec![1, 1, 1])?;
    let hm1_f = hm1_sigma().total_dual(CellType::Face);
    if !isomorphic(&sigma_to_tau(&hm1_f), &sigma_to_tau(&hm1_sigma())) {
        return Err("hm1^F (sigma) is not isomorphic to hm1".into());
    }
    if !isomorphic(&hm1().total_dual(CellType::Face), &hm1()) {
        return Err("hm1^F (tau) is not isomorphic to hm1".into());
    }
    Ok(())
}

fn criterion_6() -> Check {
    let report = run_property_suite(SuiteConfig {
        count: SUITE_COUNT,
        max_size: SUITE_MAX_SIZE,
        seed: SUITE_SEED,
    });
    let fixtures = run_fixture_suite();
    if !report.passed() || !fixtures.passed() {
        let mut text = report.to_text();
        text.push_str(&fixtures.to_text());
        return Err(text
            .lines()
            .filter(|l| l.starts_with("FAIL"))
            .take(5)
            .collect::<Vec<_>>()
            .join("; "));
    }
    expect("instances", report.instances, SUITE_COUNT)?;
    for name in [
        "tau.involution",
        "tau.symmetric_difference",
        "tau.valency_support",
        "tau.orientability",
        "sigma.relation",
        "sigma.involution",
        "sigma.symmetric_difference",
        "sigma.valency_support",
        "sigma.orientability",
    ] {
        let checked = report.properties.get(name).map_or(0, |s| s.checked);
        if checked < SUITE_COUNT {
            return Err(format!("{name} checked only {checked} times"));
        }
    }
    for name in [
        "tau.single_cell",
        "sigma.single_cell",
        "model.euler_agreement",
        "model.duality_commutes",
    ] {
        if report.properties.get(name).map_or(0, |s| s.checked) == 0 {
            return Err(format!("{name} never checked"));
        }
    }
    Ok(())
}

fn colored_swap_agrees(hm: &FlagHypermap, t: CellType, ids: &[usize]) -> Check {
    let g = ColoredGraph::from(hm.clone());
    let (a, b) = t.colors();
    let swapped = g
        .swap_colors_in_bubbles(a, b, ids)
        .map_err(|e| e.to_string())?;
    // uncolored edge multiset, rebuilt from the matchings
    let multiset = |g: &ColoredGraph| {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for c in 0..g.n_colors() {
            for x in 1..=g.n_vertices() {
                let y = g.matching(c).apply(x);
                if x < y {
                    edges.push((x, y));
                }
            }
        }
        edges.sort_unstable();
        edges
    };
    expect("uncolored edges", multiset(&swapped), multiset(&g))?;
    let refs: Vec<CellRef> = ids.iter().map(|&id| CellRef::new(t, id)).collect();
    let want = hm.partial_dual(t, &refs).map_err(|e| e.to_string())?;
    expect(
        "colored swap vs tau dual",
        colored_to_tau(&swapped).map_err(|e| e.to_string())?,
        want,
    )
}

fn criterion_7() -> Check {
    let fixtures = [
        m0(),
        m1(),
        hm0(),
        hm1(),
        sigma_to_tau(&m1_sigma()),
        sigma_to_tau(&hm1_sigma()),
    ];
    for hm in &fixtures {
        for t in CellType::ALL {
            let cells = all_cells(hm, t);
            for mask in 0..1usize << cells.len() {
                let ids: Vec<usize> = (0..cells.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| cells[i].id)
                    .collect();
                colored_swap_agrees(hm, t, &ids)?;
            }
        }
    }
    for i in 0..COLORED_RANDOM_INSTANCES {
        let seed = COLORED_SEED + i as u64;
        let mut rng = Lcg64::new(seed);
        let n_flags = 2 * rng.range_inclusive(1, SUITE_MAX_SIZE / 2);
        let hm = random_flag_hypermap(n_flags, seed, false).map_err(|e| e.to_string())?;
        let t = CellType::ALL[rng.below(3) as usize];
        let ids: Vec<usize> = all_cells(&hm, t)
            .iter()
            .filter(|_| rng.coin())
            .map(|c| c.id)
            .collect();
        colored_swap_agrees(&hm, t, &ids).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(())
}

/// Two copies of K4 (colors 0, 1, 2 on 1..4 and 5..8) joined by color 3.
fn twin_k4() -> ColoredGraph {
    let mut edges = Vec::new();
    for base in [0, 4] {
        edges.extend([
            (base + 1, base + 2, 0),
            (base + 3, base + 4, 0),
            (base + 1, base + 3, 1),
            (base + 2, base + 4, 1),
            (base + 1, base + 4, 2),
            (base + 2, base + 3, 2),
        ]);
    }
    for i in 1..=4 {
        edges.push((i, i + 4, 3));
    }
    ColoredGraph::from_edges(8, 4, &edges).expect("valid graph")
}

fn criterion_8() -> Check {
    let g = twin_k4();
    let cases: [RecolorCase; 4] = [
        (&[0, 1, 2], &[1], [1, 2, 0, 3], 3),
        (&[0, 1, 2], &[1, 5], [2, 0, 1, 3], 3),
        (&[0, 1, 3], &[1], [1, 0, 2, 3], 2),
        (&[0, 2, 3], &[1], [0, 1, 3, 2], 2),
    ];
    for (colors, ids, pi, order) in cases {
        let spans = |g: &ColoredGraph| -> Vec<Vec<usize>> {
            g.bubbles(colors)
                .expect("valid colors")
                .into_iter()
                .map(|b| b.vertices)
                .collect()
        };
        let before = spans(&g);
        let mut h = g.clone();
        for step in 1..=order {
            h = h
                .recolor_bubbles(colors, ids, &pi)
                .map_err(|e| e.to_string())?;
            expect(
                "bubbles spanned by the recolored colors",
                spans(&h),
                before.clone(),
            )?;
            if step < order && h == g {
                return Err(format!(
                    "pi={pi:?} on {colors:?} returned early at step {step}"
                ));
            }
        }
        expect(
            &format!("pi={pi:?} on {colors:?} after {order} steps"),
            &h,
            &g,
        )?;
    }
    Ok(())
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hypermap"))
        .args(args)
        .current_dir(fixtures_dir())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_9() -> Check {
    let mut files: Vec<PathBuf> = fs::read_dir(fixtures_dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.expect("entry").path())
        .collect();
    files.sort();
    if files.len() < 10 {
        return Err(format!("only {} fixture files", files.len()));
    }
    for path in &files {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let doc = parse(&text).map_err(|e| format!("{name}: {e}"))?;
        expect(
            &format!("{name} library round trip"),
            serialize(&doc),
            text.clone(),
        )?;
        let format = doc.format_name();
        expect(&format!("{name} validate"), cli(&["validate", &name]).0, 0)?;
        expect(
            &format!("{name} cli round trip"),
            cli(&["convert", &name, "--to", format]),
            (0, text.clone()),
        )?;
        if !matches!(doc, Document::Colored(ref g) if g.dimension() != 2) {
            for t in ["vertex", "edge", "face"] {
                let (code, once) = cli(&["dual", &name, "--type", t, "--all"]);
                expect("dual exit", code, 0)?;
                let tmp = std::env::temp_dir()
                    .join(format!("hypermap-acceptance-{}-{name}", std::process::id()));
                fs::write(&tmp, &once).map_err(|e| e.to_string())?;
                let twice = cli(&["dual", tmp.to_str().unwrap(), "--type", t, "--all"]);
                let _ = fs::remove_file(&tmp);
                expect(
                    &format!("{name} dual --all twice ({t})"),
                    twice,
                    (0, text.clone()),
                )?;
            }
        }
    }
    expect(
        "iso hm1F.tau hm1.tau",
        cli(&["iso", "hm1F.tau", "hm1.tau"]).0,
        0,
    )?;
    expect(
        "iso hm0.colored hm1.colored",
        cli(&["iso", "hm0.colored", "hm1.colored"]).0,
        1,
    )?;

    let first = cli(&["export-dot", "hm0.colored"]);
    let second = cli(&["export-dot", "hm0.colored"]);
    expect("export-dot exit", first.0, 0)?;
    expect("export-dot deterministic", &first, &second)?;
    expect(
        "export-dot matches library",
        first.1.clone(),
        export_dot(&ColoredGraph::from(hm0())),
    )?;
    // one node per flag, one edge statement per transposition of each tau
    let nodes = first
        .1
        .lines()
        .filter(|l| l.trim_end().ends_with(';') && !l.contains("--") && !l.contains('['))
        .count();
    let edges = first.1.lines().filter(|l| l.contains("--")).count();
    let parallel = first
        .1
        .lines()
        .filter(|l| l.trim_start().starts_with("1 -- 2 "))
        .count();
    let transpositions: usize = hm0()
        .taus()
        .iter()
        .map(|t| t.nontrivial_cycles().len())
        .sum();
    expect("dot nodes", nodes, hm0().n_flags())?;
    expect("dot edges", edges, transpositions)?;
    let shared = (0..3).filter(|&i| hm0().tau(i).apply(1) == 2).count();
    expect("parallel 1--2 edges", parallel, shared)
}

fn main() {
    let start = Instant::now();
    let criteria: [Criterion; 9] = [
        (
            "golden half-edge dual of m1 at vertex 1 (exact)",
            criterion_1,
        ),
        ("golden flag dual of m1 at vertex 1 (exact)", criterion_2),
        (
            "Euler characteristic, genus, orientability, is_map (exact)",
            criterion_3,
        ),
        (
            "flag to half-edge conversion of m1, hm0 not orientable (exact)",
            criterion_4,
        ),
        (
            "total duals equal closed and product forms (exact)",
            criterion_5,
        ),
        (
            "property suite: 1000 instances, max size 24, seed 1, 0 failures",
            criterion_6,
        ),
        (
            "colored swap equals flag dual on fixtures and 200 random instances (exact)",
            criterion_7,
        ),
        (
            "higher-dimensional recoloring orders 3 and 2 (exact)",
            criterion_8,
        ),
        (
            "CLI round trips, iso exit codes, deterministic DOT (byte-exact)",
            criterion_9,
        ),
    ];
    let mut failed = 0;
    for (k, (description, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {}: PASS {description}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL {description}: {reason}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
