use std::io::Write;
use std::path::Path;

use serde::Serialize;
use vtcycle_core::bounds::{BoundReport, GroupSource, Verdict};
use vtcycle_core::corpus::{corpus, coxeter_action, lift_to_truncation, petersen_s5_action};
use vtcycle_core::counting::{EnumeratedGroup, LemmaError};
use vtcycle_core::graph::{cayley_graph, circulant, coxeter, cycle_graph, petersen};
use vtcycle_core::group::automorphism_generators;
use vtcycle_core::oracle::{brute_force_circumference, brute_force_connectivity, brute_force_girth};
use vtcycle_core::{
    analyze, read_graph, read_group, write_graph, write_group, Graph, GroupAction, SolverError,
};

use crate::{read_text, write_json, CliError, Config, Exit, Family, OracleKind};

pub(crate) fn load_graph(path: &Path) -> Result<Graph, CliError> {
    read_graph(&read_text(path)?).map_err(|source| CliError::Graph { path: path.to_path_buf(), source })
}

pub(crate) fn load_group(path: &Path) -> Result<GroupAction, CliError> {
    read_group(&read_text(path)?).map_err(|source| CliError::GroupFile { path: path.to_path_buf(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Comma-separated vertex list such as `0,1,2`; the empty string is the
/// empty set.
pub fn parse_vertex_set(s: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| CliError::BadArgument(format!("bad vertex `{}` in set `{s}`", tok.trim())))
        })
        .collect()
}

pub fn cmd_generate(family: &Family, config: &Config, out: &mut dyn Write) -> Result<Exit, CliError> {
    let (graph, action, output) = match family {
        Family::Cycle { n, output } => (cycle_graph(*n)?, Some(GroupAction::cyclic(*n)), output),
        Family::Petersen { output } => (petersen(), Some(petersen_s5_action()), output),
        Family::Coxeter { output } => {
            let g = coxeter();
            let a = output.with_group.then(|| coxeter_action(&g)).transpose()?;
            (g, a, output)
        }
        Family::Circulant { n, offsets, output } => {
            let offsets = parse_vertex_set(offsets)?;
            (circulant(*n, &offsets)?, Some(GroupAction::cyclic(*n)), output)
        }
        Family::Cayley { generators, connection, output } => {
            let gens = load_group(generators)?;
            let conn = match connection {
                Some(p) => load_group(p)?,
                None => gens.clone(),
            };
            let c = cayley_graph(gens.generators(), conn.generators(), config.group_cap)?;
            (c.graph, Some(c.action), output)
        }
        Family::Truncate { input, output } => {
            let g = load_graph(input)?;
            let sidecar = input.with_extension("grp");
            let base = if sidecar.exists() {
                load_group(&sidecar)?
            } else if output.with_group {
                automorphism_generators(&g, g.n())?
            } else {
                GroupAction::trivial(g.n())
            };
            let (t, a) = lift_to_truncation(&g, &base)?;
            (t, Some(a), output)
        }
    };
    write_file(&output.out, &write_graph(&graph))?;
    if output.with_group {
        let action = action.expect("every family provides an action");
        write_file(&output.out.with_extension("grp"), &write_group(&action))?;
    }
    if !config.quiet {
        let _ = writeln!(out, "wrote {} ({} vertices, {} edges)", output.out.display(), graph.n(), graph.m());
    }
    Ok(Exit::Ok)
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "not applicable",
        Verdict::Unavailable => "unavailable",
    }
}

fn or_unavailable<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "unavailable".to_string(), |x| x.to_string())
}

/// Human-readable rendering of a report.
pub fn summary(r: &BoundReport) -> String {
    let mut s = String::new();
    let transitive = match r.transitive {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    s += &format!("n = {}, m = {}\n", r.n, r.m);
    let source = match r.group_source {
        GroupSource::Supplied => "supplied group",
        GroupSource::AutomorphismSearch => "automorphism search",
        GroupSource::None => "no group",
    };
    s += &format!("vertex-transitive: {transitive} ({source}, order {})\n", or_unavailable(r.group_order));
    s += &format!(
        "connectivity: {} (2-connected: {}, 3-connected: {})\n",
        r.connectivity,
        verdict_word(r.two_connected_verdict()),
        verdict_word(r.three_connected_verdict())
    );
    s += &format!("circumference t: {}\n", or_unavailable(r.circumference));
    if let Some(q) = r.ratio() {
        s += &format!("t/n: {}/{}\n", q.numer(), q.denom());
    }
    s += &format!("longest cycles: {}\n", or_unavailable(r.longest_cycle_count));
    s += &format!(
        "k (min pairwise intersection): {}{}\n",
        or_unavailable(r.k),
        if r.k_degenerate == Some(true) { " (single longest cycle)" } else { "" }
    );
    if let Some(h) = &r.hitting_set {
        s += &format!("hitting set |B| = {} (k^2+k = {})\n", h.size(), h.k * h.k + h.k);
    }
    if let Some(b) = r.babai() {
        s += &format!("t^2 >= 3n: {} ({} vs {})\n", verdict_word(r.babai_verdict()), b.t_squared, b.three_n);
    }
    if let Some(c) = r.combined() {
        s += &format!("t^2 >= kn: {} ({} vs {})\n", verdict_word(r.sqrt_kn_verdict()), c.t * c.t, c.kn());
        s += &format!(
            "t (k^2+k) >= n: {} ({} vs {})\n",
            verdict_word(r.quotient_verdict()),
            c.t as u128 * c.k2_plus_k(),
            c.n
        );
    }
    s += &format!("longest cycles intersect: {}\n", verdict_word(r.intersection_verdict()));
    s += &format!("hitting set: {}\n", verdict_word(r.hitting_set_verdict()));
    for c in &r.lemma2_checks {
        s += &format!("counting check {}: {}\n", c.name, verdict_word(c.status));
    }
    for c in &r.caps_hit {
        s += &format!("cap hit: {c}\n");
    }
    for n in &r.notes {
        s += &format!("note: {n}\n");
    }
    s
}

pub(crate) fn report_exit(r: &BoundReport) -> Exit {
    if !r.failures().is_empty() {
        Exit::CheckFailed
    } else if r.incomplete() {
        Exit::Incomplete
    } else {
        Exit::Ok
    }
}

pub fn cmd_analyze(
    graph: &Path,
    group: Option<&Path>,
    config: &Config,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Exit, CliError> {
    let g = load_graph(graph)?;
    let a = group.map(load_group).transpose()?;
    let report = analyze(&g, a.as_ref(), &config.analysis())?;
    let to_file = write_json(config, &(report.to_json() + "\n"), out)?;
    if !config.quiet {
        let sink: &mut dyn Write = if to_file { out } else { err };
        let _ = sink.write_all(summary(&report).as_bytes());
    }
    Ok(report_exit(&report))
}

#[derive(Serialize)]
struct LemmaReport {
    b: Vec<usize>,
    c: Vec<usize>,
    n: usize,
    group_order: usize,
    k_min: usize,
    product_b_c: u128,
    k_times_n: u128,
    s_count: u128,
    b_c_stabilizer: u128,
    stabilizer_order: usize,
    holds: bool,
    identity_holds: bool,
}

pub fn cmd_verify_lemma2(
    graph: &Path,
    group: &Path,
    b: &str,
    c: &str,
    config: &Config,
    out: &mut dyn Write,
) -> Result<Exit, CliError> {
    let g = load_graph(graph)?;
    let a = load_group(group)?;
    let b = parse_vertex_set(b)?;
    let c = parse_vertex_set(c)?;
    let t = a.is_vertex_transitive(&g)?;
    if !t.is_transitive() {
        return Err(LemmaError::NotTransitive(t).into());
    }
    let elements = EnumeratedGroup::new(&a, config.group_cap)?;
    let verdict = elements.verify(&b, &c)?;
    let count = elements.double_count(&b, &c)?;
    let report = LemmaReport {
        b: sorted_set(&b),
        c: sorted_set(&c),
        n: verdict.n,
        group_order: count.group_order,
        k_min: verdict.k,
        product_b_c: verdict.product(),
        k_times_n: verdict.required(),
        s_count: count.s_count,
        b_c_stabilizer: count.b_size as u128 * count.c_size as u128 * count.stabilizer_order as u128,
        stabilizer_order: count.stabilizer_order,
        holds: verdict.holds(),
        identity_holds: count.identity_holds() && count.lower_bound_holds(),
    };
    let ok = report.holds && report.identity_holds;
    if let Some(path) = &config.json {
        let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        write_file(path, &json)?;
    }
    if !config.quiet {
        let _ = writeln!(out, "k_min = {}", report.k_min);
        let _ = writeln!(out, "|B||C| = {}", report.product_b_c);
        let _ = writeln!(out, "k n = {}", report.k_times_n);
        let _ = writeln!(
            out,
            "|S| = {}, |B||C||G_y| = {} (|G| = {}, |G_y| = {})",
            report.s_count, report.b_c_stabilizer, report.group_order, report.stabilizer_order
        );
    }
    let _ = writeln!(out, "{}", if ok { "pass" } else { "FAIL" });
    Ok(if ok { Exit::Ok } else { Exit::CheckFailed })
}

fn sorted_set(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn cmd_oracle(kind: OracleKind, graph: &Path, out: &mut dyn Write) -> Result<Exit, CliError> {
    let g = load_graph(graph)?;
    let value = match kind {
        OracleKind::Circumference => match brute_force_circumference(&g) {
            Ok(t) => Some(t),
            Err(SolverError::NoCycle) => None,
            Err(e) => return Err(e.into()),
        },
        OracleKind::Girth => brute_force_girth(&g),
        OracleKind::Connectivity => Some(brute_force_connectivity(&g)?),
    };
    let _ = writeln!(out, "{}", value.map_or_else(|| "none".to_string(), |v| v.to_string()));
    Ok(Exit::Ok)
}

pub fn cmd_write_corpus(dir: &Path, out: &mut dyn Write) -> Result<Exit, CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let entries = corpus()?;
    for e in &entries {
        write_file(&dir.join(format!("{}.g", e.name)), &write_graph(&e.graph))?;
        write_file(&dir.join(format!("{}.grp", e.name)), &write_group(&e.action))?;
    }
    let _ = writeln!(out, "wrote {} graphs to {}", entries.len(), dir.display());
    Ok(Exit::Ok)
}
