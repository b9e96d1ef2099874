//! `survey`: classify many graphs with input-order output.

use std::io::{self, BufRead, BufWriter, Write};

use quasiforest::graph::{labeled_count, MAX_ENUMERATION_VERTICES};
use quasiforest::{classify, parse_graph6, Error, Graph};
use rayon::prelude::*;

use crate::output::{to_json, SummaryLine, SurveyLine, SurveySummary};
use crate::{Failure, SurveyArgs, EXIT_PARTIAL};

const CHUNK: usize = 4096;

enum Item {
    Graph(Graph),
    Bad { line: usize, error: Error },
}

struct Survey<'a, W: Write> {
    args: &'a SurveyArgs,
    pool: rayon::ThreadPool,
    out: W,
    summary: SurveySummary,
}

impl<W: Write> Survey<'_, W> {
    fn process(&mut self, batch: Vec<Item>) -> Result<(), Failure> {
        let only_2linear = self.args.only_2linear;
        let results: Vec<Result<Option<SurveyLine>, (usize, Error)>> = self.pool.install(|| {
            batch
                .into_par_iter()
                .map(|item| match item {
                    Item::Bad { line, error } => Err((line, error)),
                    Item::Graph(g) => {
                        let report = classify(&g).map_err(|e| (0, e))?;
                        Ok((report.has_2linear || !only_2linear).then(|| SurveyLine::from(&report)))
                    }
                })
                .collect()
        });
        for r in results {
            match r {
                Ok(Some(line)) => {
                    self.summary.record(&line);
                    writeln!(self.out, "{}", to_json(&line))?;
                }
                Ok(None) => {}
                Err((line, error)) => {
                    self.summary.skipped += 1;
                    eprintln!("quasiforest: line {line}: {error}");
                }
            }
        }
        Ok(())
    }
}

pub fn run(args: &SurveyArgs) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Failure { code: crate::EXIT_MALFORMED, message: Some(e.to_string()) })?;
    let stdout = io::stdout();
    let mut survey = Survey { args, pool, out: BufWriter::new(stdout.lock()), summary: SurveySummary::default() };

    if let Some(n) = args.all_labeled {
        if n > MAX_ENUMERATION_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "--all-labeled is capped at {MAX_ENUMERATION_VERTICES}, got {n}"
            ))
            .into());
        }
        let total = labeled_count(n);
        let mut start = 0u64;
        while start < total {
            let end = (start + CHUNK as u64).min(total);
            let batch =
                (start..end).map(|m| Item::Graph(Graph::from_edge_mask(n, m).expect("mask in range"))).collect();
            survey.process(batch)?;
            start = end;
        }
    } else {
        let stdin = io::stdin();
        let mut batch = Vec::with_capacity(CHUNK);
        for (idx, line) in stdin.lock().lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            batch.push(match parse_graph6(line.as_bytes()) {
                Ok(g) if g.n() == 0 => {
                    Item::Bad { line: idx + 1, error: Error::UndefinedInput("graph on zero vertices".into()) }
                }
                Ok(g) => Item::Graph(g),
                Err(error) => Item::Bad { line: idx + 1, error },
            });
            if batch.len() == CHUNK {
                survey.process(std::mem::take(&mut batch))?;
            }
        }
        survey.process(batch)?;
    }

    let summary = std::mem::take(&mut survey.summary);
    writeln!(survey.out, "{}", to_json(&SummaryLine { summary: &summary }))?;
    survey.out.flush()?;
    if summary.skipped > 0 {
        return Err(Failure { code: EXIT_PARTIAL, message: Some(format!("{} line(s) skipped", summary.skipped)) });
    }
    Ok(())
}
