use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use vtcycle_core::analyze;
use vtcycle_core::bounds::BoundReport;

use crate::commands::{load_graph, load_group, report_exit};
use crate::{write_json, CliError, Config, Exit};

/// Result for one graph file in a batch.
#[derive(Debug, Clone)]
pub struct BatchEntry {
    pub file: String,
    pub group_file: Option<String>,
    pub outcome: Result<BoundReport, String>,
    pub exit: Exit,
}

#[derive(Debug, Clone)]
pub struct BatchOutcome {
    pub entries: Vec<BatchEntry>,
}

#[derive(Serialize)]
struct EntryView<'a> {
    file: &'a str,
    group_file: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

#[derive(Serialize)]
struct MinRatio<'a> {
    file: &'a str,
    ratio: String,
}

#[derive(Serialize)]
struct BatchView<'a> {
    graphs: Vec<EntryView<'a>>,
    min_ratio_t_over_n: Option<MinRatio<'a>>,
    check_failures: Vec<&'a str>,
    incomplete: Vec<&'a str>,
    input_errors: Vec<&'a str>,
}

impl BatchOutcome {
    pub fn exit(&self) -> Exit {
        self.entries.iter().map(|e| e.exit).max().unwrap_or(Exit::Ok)
    }

    /// Smallest `t / n` over the batch, first file on ties.
    pub fn min_ratio(&self) -> Option<(&str, Ratio<u64>)> {
        let mut best: Option<(&str, Ratio<u64>)> = None;
        for e in &self.entries {
            if let Some(q) = e.outcome.as_ref().ok().and_then(|r| r.ratio()) {
                if best.is_none_or(|(_, b)| q < b) {
                    best = Some((&e.file, q));
                }
            }
        }
        best
    }

    fn files_with(&self, exit: Exit) -> Vec<&str> {
        self.entries.iter().filter(|e| e.exit == exit).map(|e| e.file.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        let view = BatchView {
            graphs: self
                .entries
                .iter()
                .map(|e| EntryView {
                    file: &e.file,
                    group_file: e.group_file.as_deref(),
                    report: e.outcome.as_ref().ok().map(|r| r.to_json_value()),
                    error: e.outcome.as_ref().err().map(String::as_str),
                })
                .collect(),
            min_ratio_t_over_n: self
                .min_ratio()
                .map(|(file, q)| MinRatio { file, ratio: format!("{}/{}", q.numer(), q.denom()) }),
            check_failures: self.files_with(Exit::CheckFailed),
            incomplete: self.files_with(Exit::Incomplete),
            input_errors: self.files_with(Exit::InputError),
        };
        serde_json::to_string_pretty(&view).expect("batch serializes") + "\n"
    }

    /// One row per graph; the row attaining the minimum `t / n` is starred.
    pub fn table(&self) -> String {
        let min = self.min_ratio().map(|(f, _)| f.to_string());
        let mut s = format!(
            "{:<32} {:>4} {:>4} {:>4} {:>4} {:>10} {:>10} {:>8}\n",
            "file", "n", "t", "k", "|B|", "t^2>=3n", "combined", "t/n"
        );
        let dash = |o: Option<usize>| o.map_or_else(|| "-".to_string(), |v| v.to_string());
        for e in &self.entries {
            match &e.outcome {
                Ok(r) => {
                    let ratio =
                        r.ratio().map_or_else(|| "-".into(), |q| format!("{}/{}", q.numer(), q.denom()));
                    let star = if min.as_deref() == Some(e.file.as_str()) { " *" } else { "" };
                    s += &format!(
                        "{:<32} {:>4} {:>4} {:>4} {:>4} {:>10} {:>10} {:>8}{star}\n",
                        e.file,
                        r.n,
                        dash(r.circumference),
                        dash(r.k),
                        dash(r.hitting_set.as_ref().map(|h| h.size())),
                        format!("{:?}", r.babai_verdict()).to_lowercase(),
                        format!("{:?}", r.combined_verdict()).to_lowercase(),
                        ratio,
                    );
                }
                Err(msg) => s += &format!("{:<32} error: {msg}\n", e.file),
            }
        }
        if let Some((file, q)) = self.min_ratio() {
            s += &format!("minimum t/n: {}/{} ({file})\n", q.numer(), q.denom());
        }
        s
    }

    pub(crate) fn emit(
        &self,
        config: &Config,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> Result<Exit, CliError> {
        let to_file = write_json(config, &self.to_json(), out)?;
        if !config.quiet {
            let sink: &mut dyn Write = if to_file { out } else { err };
            let _ = sink.write_all(self.table().as_bytes());
        }
        Ok(self.exit())
    }
}

fn analyze_file(path: &Path, config: &Config) -> BatchEntry {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let sidecar = path.with_extension("grp");
    let group_file = sidecar
        .exists()
        .then(|| sidecar.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default());
    let result = (|| {
        let g = load_graph(path)?;
        let a = group_file.as_ref().map(|_| load_group(&sidecar)).transpose()?;
        Ok::<_, CliError>(analyze(&g, a.as_ref(), &config.analysis())?)
    })();
    match result {
        Ok(r) => {
            let exit = report_exit(&r);
            BatchEntry { file, group_file, outcome: Ok(r), exit }
        }
        Err(e) => BatchEntry { file, group_file, exit: e.exit(), outcome: Err(e.to_string()) },
    }
}

/// Analyzes every `*.g` file in `dir`, sorted by file name. Per-file errors
/// are recorded and the batch continues.
pub fn cmd_batch(dir: &Path, config: &Config) -> Result<BatchOutcome, CliError> {
    let read = std::fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let mut files: Vec<PathBuf> = Vec::new();
    for entry in read {
        let entry = entry.map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        let path = entry.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "g") {
            files.push(path);
        }
    }
    files.sort();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = config.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| CliError::BadArgument(format!("thread pool: {e}")))?;
    let entries = pool.install(|| files.par_iter().map(|p| analyze_file(p, config)).collect());
    Ok(BatchOutcome { entries })
}
