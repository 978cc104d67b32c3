//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use repdim::embed::{build_distance_matrix, minimal_embedding, schoenberg_test};
use repdim::graph::{
    all_graphs, classify_clique_union, complete, cycle, disjoint_union, empty, path, petersen, random_gnp,
};
use repdim::oracle::{brute_force_rep, complement_charpoly_residual, sachs_complement_check, verify_embedding, DEFAULT_GRID};
use repdim::repnum::{
    critical_ratio, m2_prime, multiplicity_bounds, representation_number, srg_rep, tau2_condition, Tau2Verdict,
};
use repdim::spectral::{summarize, SpectrumSummary};
use repdim::{Graph, Result, ToleranceConfig};

type Outcome = Result<(bool, String)>;

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn rep(g: &Graph) -> Result<usize> {
    Ok(representation_number(g, &cfg())?.rep)
}

/// Every graph on at most 6 vertices, then 200 seeded random graphs on 7.
fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=6).flat_map(all_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    out.extend((0..200).map(|_| random_gnp(7, 0.5, &mut rng)));
    out
}

fn complete_and_empty() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=8 {
        for (name, g) in [("K", complete(n)), ("E", empty(n))] {
            let r = rep(&g)?;
            if r != n - 1 {
                bad.push(format!("{name}{n}: {r}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("n = 2..8, mismatches {bad:?}")))
}

fn petersen_embedding() -> Outcome {
    let c = ToleranceConfig { tol_equality: 1e-8, ..cfg() };
    let g = petersen();
    let (e, r) = minimal_embedding(&g, &c)?;
    let v = verify_embedding(&g, &e, &c);
    let ok = r.rep == 4 && e.dim == 4 && e.points.len() == 10 && e.points.iter().all(|p| p.len() == 4) && v.ok;
    Ok((ok, format!("rep {}, {} points in R^{}, verify {:?}", r.rep, e.points.len(), e.dim, v.reasons)))
}

fn cycles() -> Outcome {
    let mut got = Vec::new();
    let mut ok = true;
    for n in 5..=12 {
        let r = rep(&cycle(n))?;
        ok &= r == n - 3;
        got.push(r);
    }
    Ok((ok, format!("C5..C12 -> {got:?}")))
}

fn clique_unions() -> Outcome {
    let mut ok = true;
    let mut got = Vec::new();
    for (r, s) in [(2, 3), (3, 2), (2, 4)] {
        let g = disjoint_union(&vec![complete(s); r]);
        let n = r * s;
        let (a, b) = (rep(&g)?, rep(&g.complement())?);
        ok &= a == n - r && b == n - r;
        got.push(format!("{r}K{s}: {a}/{b}"));
    }
    Ok((ok, got.join(", ")))
}

fn example_distance_matrices() -> Outcome {
    let c = cfg();
    let a = schoenberg_test(&build_distance_matrix(&cycle(6).complement(), 2.0)?, &c)?;
    let two_p3 = disjoint_union(&[path(3), path(3)]);
    let b = schoenberg_test(&build_distance_matrix(&two_p3, 2.0 + 2f64.sqrt())?, &c)?;
    let ok = a.is_edm && a.embedding_dim == 3 && b.is_edm && b.embedding_dim == 4;
    Ok((ok, format!("complement of C6: edm {} dim {}; 2P3: edm {} dim {}", a.is_edm, a.embedding_dim, b.is_edm, b.embedding_dim)))
}

fn example_spectral_data() -> Outcome {
    let c = ToleranceConfig { tol_equality: 1e-6, ..cfg() };
    let g1 = SpectrumSummary::from_parts(&[
        (-1.946, 1, 0.269),
        (-1.618, 2, 0.0),
        (-1.0, 1, 0.0),
        (0.618, 2, 0.0),
        (1.252, 1, 0.124),
        (3.694, 1, 0.955),
    ])?;
    let (r21, r5) = (21f64.sqrt(), 5f64.sqrt());
    let g2 = SpectrumSummary::from_parts(&[
        ((1.0 - r21) / 2.0, 1, ((34.0 - 6.0 * r21) / (105.0 + 5.0 * r21)).sqrt()),
        ((-1.0 - r5) / 2.0, 1, 0.0),
        (0.0, 3, (1.0f64 / 5.0).sqrt()),
        ((-1.0 + r5) / 2.0, 1, 0.0),
        ((1.0 + r21) / 2.0, 1, ((10.0 + 2.0 * r21) / (21.0 + r21)).sqrt()),
    ])?;
    let (v1, v2) = (tau2_condition(&g1, &c), tau2_condition(&g2, &c));
    let (d1, d2) = (g1.n - m2_prime(&g1, &c), g2.n - m2_prime(&g2, &c));
    let b2 = critical_ratio(g2.distinct[1].tau);
    let ok = v1 == Tau2Verdict::StrictInequality
        && d1 == 5
        && v2 == Tau2Verdict::Equality
        && d2 == 4
        && (b2 - (3.0 + r5) / 2.0).abs() < 1e-12;
    Ok((ok, format!("G1 {v1:?} dim {d1}; G2 {v2:?} dim {d2}, b = {b2:.6}")))
}

fn strongly_regular() -> Outcome {
    let s = srg_rep(10, 3, 0, 1)?;
    let (p, c5) = (rep(&petersen())?, rep(&cycle(5))?);
    let s5 = srg_rep(5, 2, 0, 1)?;
    Ok((s == 4 && p == s && c5 == s5, format!("srg(10,3,0,1) = {s}, Petersen {p}; srg(5,2,0,1) = {s5}, C5 {c5}")))
}

/// For complete and empty graphs every pair is equidistant: a regular simplex.
fn simplex_dim(g: &Graph) -> Result<usize> {
    Ok(schoenberg_test(&build_distance_matrix(g, 2.0)?, &cfg())?.embedding_dim)
}

fn oracle_equivalence(corpus: &[Graph]) -> Result<(bool, String, bool)> {
    let c = cfg();
    let mut mismatches = Vec::new();
    let mut critical_only = true;
    let mut scanned = 0;
    for g in corpus {
        let theorem = representation_number(g, &c)?.rep;
        let oracle = if g.n() < 3 || g.is_complete() || g.is_empty() {
            simplex_dim(g)?
        } else {
            let r = brute_force_rep(g, DEFAULT_GRID, &c)?;
            critical_only &= r.critical_only;
            scanned += 1;
            r.rep_oracle
        };
        if oracle != theorem {
            mismatches.push(format!("{g:?}: theorem {theorem}, oracle {oracle}"));
        }
    }
    let detail = format!("{} graphs ({scanned} scanned), mismatches {mismatches:?}", corpus.len());
    Ok((mismatches.is_empty(), detail, critical_only))
}

/// Clique unions and their complements: `n - max{r, 2}`. Otherwise the
/// multiplicity bounds, and the exact value `n - 1 - max{m1, m1_bar}` for
/// regular graphs.
fn sandwich(corpus: &[Graph]) -> Outcome {
    let c = cfg();
    let mut bad = Vec::new();
    let (mut bounded, mut exact) = (0, 0);
    for g in corpus.iter().filter(|g| g.n() >= 2 && !g.is_complete() && !g.is_empty()) {
        let n = g.n();
        let r = rep(g)?;
        let cu = classify_clique_union(g).or_else(|| classify_clique_union(&g.complement()));
        if let Some(info) = cu {
            exact += 1;
            if r != n - info.r.max(2) {
                bad.push(format!("{g:?}: clique union rep {r}"));
            }
            continue;
        }
        bounded += 1;
        let (s, sb) = (summarize(g, &c)?, summarize(&g.complement(), &c)?);
        let (lo, hi) = multiplicity_bounds(&s, &sb);
        if !(lo <= r && r <= hi) {
            bad.push(format!("{g:?}: {lo} <= {r} <= {hi}"));
        }
        if g.regularity().is_some() && r != n - 1 - s.smallest().mult.max(sb.smallest().mult) {
            bad.push(format!("{g:?}: regular rep {r}"));
        }
    }
    Ok((bad.is_empty(), format!("{exact} clique-union cases, {bounded} bounded cases, violations {bad:?}")))
}

/// At the smallest critical ratio the dimension is `n - m1 - 1` when the
/// eigenspace is orthogonal to the all-ones vector and `n - m1` otherwise.
fn first_critical_law(corpus: &[Graph]) -> Result<(usize, usize)> {
    let c = cfg();
    let (mut checked, mut bad) = (0, 0);
    for g in corpus {
        for h in [g.clone(), g.complement()] {
            if h.n() < 2 || classify_clique_union(&h).is_some() {
                continue;
            }
            let s = summarize(&h, &c)?;
            let d = s.smallest();
            let r = schoenberg_test(&build_distance_matrix(&h, critical_ratio(d.tau))?, &c)?;
            let want = if d.main_angle == 0.0 { h.n() - d.mult - 1 } else { h.n() - d.mult };
            checked += 1;
            if !(r.is_edm && r.embedding_dim == want) {
                bad += 1;
            }
        }
    }
    Ok((checked, bad))
}

fn charpoly_and_sachs(corpus: &[Graph]) -> Outcome {
    let c = cfg();
    let candidates = [0.3, 5.0, -0.4, 1.7, -3.3, 2.25];
    let mut worst = 0.0f64;
    let mut sachs_checked = 0;
    let mut sachs_bad = 0;
    for g in corpus {
        let (s, sb) = (summarize(g, &c)?, summarize(&g.complement(), &c)?);
        let samples: Vec<f64> = candidates
            .iter()
            .copied()
            .filter(|x| s.distinct.iter().all(|d| (x + 1.0 + d.tau).abs() >= 1e-2))
            .collect();
        worst = worst.max(complement_charpoly_residual(&s, &sb, &samples)?);
        if g.regularity().is_some() {
            sachs_checked += 1;
            if !sachs_complement_check(g, &c)? {
                sachs_bad += 1;
            }
        }
    }
    Ok((
        worst < 1e-8 && sachs_bad == 0,
        format!("max residual {worst:.2e}; Sachs {sachs_checked} regular graphs, {sachs_bad} failures"),
    ))
}

fn random_graphs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut hits = 0;
    for _ in 0..200 {
        if rep(&random_gnp(12, 0.5, &mut rng))? == 10 {
            hits += 1;
        }
    }
    Ok((hits >= 180, format!("{hits}/200 samples of G(12, 1/2) have rep 10")))
}

fn line_graph() -> Outcome {
    let l = complete(5).line_graph()?;
    let r = rep(&l)?;
    Ok((r == 4, format!("L(K5) on {} vertices, rep {r}", l.n())))
}

fn exhaustive_seven() -> Outcome {
    let c = cfg();
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=7 {
        for g in all_graphs(n) {
            count += 1;
            let (e, r) = minimal_embedding(&g, &c)?;
            let v = verify_embedding(&g, &e, &c);
            if e.dim != r.rep || !v.ok {
                bad.push(format!("{g:?}: dim {} rep {} {:?}", e.dim, r.rep, v.reasons));
            }
        }
    }
    Ok((bad.is_empty(), format!("{count} graphs on 2..7 vertices, failures {bad:?}")))
}

fn oracle_seven() -> Outcome {
    let all: Vec<Graph> = all_graphs(7);
    let (ok, detail, critical_only) = oracle_equivalence(&all)?;
    Ok((ok && critical_only, format!("{detail}, critical only {critical_only}")))
}

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, label: &str, outcome: Outcome, started: Instant) {
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok((true, detail)) => println!("PASS  {label}: {detail} ({secs:.1}s)"),
            Ok((false, detail)) => {
                self.failed += 1;
                println!("FAIL  {label}: {detail} ({secs:.1}s)");
            }
            Err(e) => {
                self.failed += 1;
                println!("FAIL  {label}: error {e} ({secs:.1}s)");
            }
        }
    }
}

fn main() {
    let mut report = Report { failed: 0 };
    let t = Instant::now();
    let corpus = corpus();

    report.line("1 complete and empty graphs", complete_and_empty(), t);
    let t = Instant::now();
    report.line("2 Petersen graph in R^4", petersen_embedding(), t);
    let t = Instant::now();
    report.line("3 cycles", cycles(), t);
    let t = Instant::now();
    report.line("4 clique unions and complements", clique_unions(), t);
    let t = Instant::now();
    report.line("5 example distance matrices", example_distance_matrices(), t);
    let t = Instant::now();
    report.line("6 second critical ratio on spectral data", example_spectral_data(), t);
    let t = Instant::now();
    report.line("7 strongly regular formula", strongly_regular(), t);

    let t = Instant::now();
    let equivalence = oracle_equivalence(&corpus);
    let critical_only = equivalence.as_ref().map(|e| e.2).unwrap_or(false);
    report.line("8 oracle equivalence", equivalence.map(|(ok, d, _)| (ok, d)), t);
    let t = Instant::now();
    report.line("9 multiplicity sandwich", sandwich(&corpus), t);
    let t = Instant::now();
    let law = first_critical_law(&corpus).map(|(checked, bad)| {
        (bad == 0 && critical_only, format!("first critical law {checked} checks, {bad} violations; critical only {critical_only}"))
    });
    report.line("10 dimension law and floor", law, t);
    let t = Instant::now();
    report.line("11 complement identities", charpoly_and_sachs(&corpus), t);
    let t = Instant::now();
    report.line("12 random graphs", random_graphs(), t);
    let t = Instant::now();
    report.line("13 line graph of K5", line_graph(), t);

    let t = Instant::now();
    report.line("extra: minimal embeddings on every graph up to 7 vertices", exhaustive_seven(), t);
    let t = Instant::now();
    report.line("extra: oracle equivalence on every graph on 7 vertices", oracle_seven(), t);

    if report.failed > 0 {
        println!("{} acceptance checks failed", report.failed);
        std::process::exit(1);
    }
    println!("all acceptance checks passed");
}
