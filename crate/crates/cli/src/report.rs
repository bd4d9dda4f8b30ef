//! Report assembly and output: every subcommand builds one `Report`
//! carrying a JSON value, a flat table (for CSV) and a pretty rendering,
//! and `emit` writes it in the requested format.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use serde_json::Value;

/// Version tag carried by every JSON document; see docs/schemas.md.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub struct Report {
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
}

impl Report {
    pub fn new(json: Value, headers: &[&str], rows: Vec<Vec<String>>, pretty: String) -> Self {
        Report {
            json,
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
            pretty,
        }
    }

    pub fn with_headers(
        json: Value,
        headers: Vec<String>,
        rows: Vec<Vec<String>>,
        pretty: String,
    ) -> Self {
        Report {
            json,
            headers,
            rows,
            pretty,
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn emit(report: &Report, format: Format, output: Option<&PathBuf>) -> io::Result<()> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            s.push_str(&report.headers.join(","));
            s.push('\n');
            for row in &report.rows {
                let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                s.push_str(&fields.join(","));
                s.push('\n');
            }
            s
        }
        Format::Pretty => {
            let mut s = report.pretty.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    };
    match output {
        Some(path) => File::create(path)?.write_all(text.as_bytes()),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

/// Run `f` over `items` with up to `jobs` worker threads, preserving
/// input order in the result.
pub fn run_parallel<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = Vec::new();
    slots.resize_with(items.len(), || None);
    let slots_mutex = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if idx >= items.len() {
                    break;
                }
                let out = f(&items[idx]);
                slots_mutex.lock().unwrap()[idx] = Some(out);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("worker filled every slot"))
        .collect()
}
