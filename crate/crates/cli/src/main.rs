//! `hookcontent`: exhaustive verification and exploration of the hook/content bijection.
//!
//! Exit status: 0 on success, 1 when a verification or cross-check fails, 2 on
//! usage or parse errors, 130 when a verification run is interrupted.

mod commands;

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use hookcontent::verify::{verify, Check, VerifyConfig, VerifyReport};
use hookcontent::{Family, Mutant, Partition};

use crate::commands::Direction;

#[derive(Parser)]
#[command(name = "hookcontent", version, about = "Hook lengths, contents and the bijection between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the identities and maps on every partition up to a size.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Powers for the class and power checks (repeatable or comma separated).
        #[arg(long = "k", value_delimiter = ',', default_values_t = [1u32, 2, 3])]
        ks: Vec<u32>,
        /// Comma list of bijection,identity,classes,rects,powers,restriction.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Suppress progress on stderr.
        #[arg(long)]
        quiet: bool,
        /// Corrupt one case branch of the maps (mutation testing).
        #[arg(long, hide = true)]
        mutant: Option<Mutant>,
    },
    /// Apply the maps to JSON-lines elements.
    Map {
        /// Apply inverse maps instead.
        #[arg(long)]
        inverse: bool,
        /// Omit the class tag on output lines.
        #[arg(long)]
        no_class: bool,
        /// Input file; stdin when absent.
        input: Option<PathBuf>,
    },
    /// Stream every element of a labeled family as JSON lines.
    Enumerate {
        /// Parts, comma separated, e.g. 5,5,4,2.
        partition: Partition,
        /// H, N or C.
        family: Family,
        /// Number of labels.
        k: usize,
    },
    /// Count rectangles by brute force and by formula.
    Rects { partition: Partition },
    /// Draw elements as ASCII diagrams.
    Render {
        /// An element line; stdin lines when absent.
        element: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        // downstream closed the pipe (e.g. `| head`); not an error
        Err(e)
            if e
                .downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Verify { max_n, ks, checks, jobs, json, quiet, mutant } => {
            if max_n == 0 {
                return Err("--max-n must be at least 1".into());
            }
            let config = VerifyConfig {
                max_n,
                ks,
                checks: checks.unwrap_or_else(|| Check::ALL.to_vec()),
                jobs,
                mutant,
            };
            let cancel = Arc::new(AtomicBool::new(false));
            {
                let cancel = Arc::clone(&cancel);
                // a second handler cannot be installed in the same process; ignore
                let _ = ctrlc::set_handler(move || cancel.store(true, Ordering::Relaxed));
            }
            let report = verify(&config, &cancel, |n, count| {
                if !quiet {
                    eprintln!("n = {n}: {count} partitions");
                }
            })?;
            if json {
                serde_json::to_writer_pretty(&mut out, &report)?;
                writeln!(out)?;
            } else {
                write_summary(&mut out, &report)?;
            }
            Ok(if report.interrupted {
                ExitCode::from(130)
            } else if report.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Map { inverse, no_class, input } => {
            let direction = if inverse { Direction::Inverse } else { Direction::Forward };
            let reader: Box<dyn BufRead> = match input {
                Some(path) => Box::new(BufReader::new(File::open(path)?)),
                None => Box::new(io::stdin().lock()),
            };
            let failed = commands::map_lines(reader, &mut out, io::stderr(), direction, !no_class)?;
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Enumerate { partition, family, k } => {
            commands::enumerate(&partition, family, k, io::BufWriter::new(&mut out))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rects { partition } => {
            let (value, consistent) = commands::rects(&partition)?;
            writeln!(out, "{value}")?;
            Ok(if consistent { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Render { element } => {
            let lines: Vec<String> = match element {
                Some(line) => vec![line],
                None => io::stdin().lock().lines().collect::<io::Result<_>>()?,
            };
            let mut failed = false;
            let mut first = true;
            for (index, line) in lines.iter().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                match commands::render_line(line) {
                    Ok(picture) => {
                        if !first {
                            writeln!(out)?;
                        }
                        first = false;
                        write!(out, "{picture}")?;
                    }
                    Err(e) => {
                        failed = true;
                        eprintln!("line {}: {e}", index + 1);
                    }
                }
            }
            Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
    }
}

fn write_summary(out: &mut impl Write, report: &VerifyReport) -> io::Result<()> {
    let checks: Vec<&str> = report.checks.iter().map(|c| c.name()).collect();
    writeln!(out, "max n:      {}", report.max_n)?;
    writeln!(out, "k:          {:?}", report.ks)?;
    writeln!(out, "checks:     {}", checks.join(","))?;
    if let Some(m) = &report.mutant {
        writeln!(out, "mutant:     {m}")?;
    }
    writeln!(out, "partitions: {}", report.partitions_checked)?;
    writeln!(out, "elements:   {}", report.elements_checked)?;
    writeln!(out, "failures:   {}", report.failure_count)?;
    for f in &report.failures {
        writeln!(out, "  [{}] ({}) {}", f.check, f.partition, f.detail)?;
    }
    if report.interrupted {
        writeln!(out, "interrupted before completion")?;
    }
    writeln!(out, "elapsed:    {} ms", report.elapsed_ms)?;
    writeln!(out, "{}", if report.success() { "OK" } else { "FAILED" })
}
