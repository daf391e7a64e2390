//! `ringlab`: property checks, catalog verification and Groebner certificates
//! from the command line.
//!
//! Exit status: 0 when every check passed, 1 when a check failed, 2 on usage
//! or input errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use ringlab_core::classifier::CheckStatus;
use ringlab_core::groebner::{
    buchberger, example1_certificate, ideal_member, parse_poly, parse_polys, radical_member,
    variables_in, MonomialOrder,
};
use ringlab_core::report::Failure;
use ringlab_core::spectra::pure_spectrum;
use ringlab_core::{
    check_ring, default_catalog, parse_ring_spec, verify_catalog, Bounds, Execution, FiniteRing,
    Ideal, Outcome, Property, PropertyReport, ReportDocument, ReportOptions, RingContext, Witness,
};

#[derive(Parser, Debug)]
#[command(
    name = "ringlab",
    version,
    about = "Ideal-theoretic property checks for finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct BoundArgs {
    /// Largest order for full ideal-lattice enumeration.
    #[arg(long, default_value_t = Bounds::default().lattice_order)]
    lattice_bound: usize,
    /// Largest order for element-level deciders.
    #[arg(long, default_value_t = Bounds::default().element_order)]
    element_bound: usize,
    /// Largest order for the pure-spectrum comparison.
    #[arg(long, default_value_t = Bounds::default().spp_order)]
    spp_bound: usize,
}

impl BoundArgs {
    fn bounds(self) -> Bounds {
        Bounds {
            lattice_order: self.lattice_bound,
            element_order: self.element_bound,
            spp_order: self.spp_bound,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full property report for one ring.
    Check {
        /// Ring spec, e.g. `Z/12` or `product(Z/4, Z/3)`.
        spec: String,
        /// Comma-separated properties (mid, pf, vnr, ...). Restricts the
        /// report to these properties.
        #[arg(long, value_delimiter = ',')]
        properties: Option<Vec<Property>>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Method agreement and structural checks over the default catalog.
    VerifyCatalog {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        #[arg(long, default_value_t = Bounds::default().lattice_order)]
        lattice_bound: usize,
        #[arg(long, default_value_t = Bounds::default().element_order)]
        element_bound: usize,
        #[arg(long, default_value_t = Bounds::default().spp_order)]
        spp_bound: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Process rings one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Spec, minimal and maximal primes, and the pure spectrum.
    Spectrum {
        spec: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Membership certificate for (x, z^2, x^3 - yz) over F_p.
    Example1 {
        #[arg(short, default_value_t = 2)]
        p: u64,
    },
    /// Reduced Groebner basis and membership tests over F_p.
    Groebner {
        #[arg(short)]
        p: u64,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
        /// Comma-separated generators.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        member: Option<String>,
        #[arg(long)]
        radical_member: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

/// Input errors exit with status 2; check outcomes are returned as a bool.
fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<bool> {
    let mut out = String::new();
    let passed = match command {
        Command::Check {
            spec,
            properties,
            json,
            bounds,
        } => {
            let ring = build(&spec)?;
            let opts = match properties {
                Some(ps) => ReportOptions {
                    properties: ps,
                    ideals: false,
                    theorems: false,
                },
                None => ReportOptions::default(),
            };
            let bounds = bounds.bounds();
            let report =
                check_ring(&ring, bounds, &opts).with_context(|| format!("ring {spec}"))?;
            render_report(&mut out, &ring, &report);
            let doc = ReportDocument::new(bounds, vec![Ok(report)]);
            render_failures(&mut out, &doc.failures);
            if let Some(path) = json {
                write_atomic(&path, &doc.to_json())?;
            }
            doc.passed()
        }
        Command::VerifyCatalog {
            max_order,
            lattice_bound,
            element_bound,
            spp_bound,
            json,
            sequential,
        } => {
            if max_order < 4 {
                bail!("--max-order must be at least 4");
            }
            let bounds = Bounds {
                lattice_order: lattice_bound,
                element_order: element_bound,
                spp_order: spp_bound,
            };
            let catalog = default_catalog(max_order);
            let mode = if sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let start = Instant::now();
            let doc = verify_catalog(&catalog, bounds, mode);
            let a = doc.aggregate;
            writeln!(
                out,
                "rings: {}",
                doc.rings.len() + doc.failures.iter().filter(|f| is_build_failure(f)).count()
            )?;
            writeln!(
                out,
                "checks run: {}  passed: {}  failed: {}  skipped: {}",
                a.run, a.passed, a.failed, a.skipped
            )?;
            render_failures(&mut out, &doc.failures);
            writeln!(out, "elapsed: {:.2}s", start.elapsed().as_secs_f64())?;
            if let Some(path) = json {
                write_atomic(&path, &doc.to_json())?;
            }
            doc.passed()
        }
        Command::Spectrum { spec, bounds } => {
            let ring = build(&spec)?;
            let bounds = bounds.bounds();
            let ctx = RingContext::new(&ring, bounds);
            let s = ctx.spectrum();
            writeln!(out, "ring: {} (order {})", ring.spec(), ring.order())?;
            writeln!(out, "Spec: {}", ideal_list(&ring, &s.primes))?;
            writeln!(out, "Min: {}", ideal_list(&ring, &s.minimal))?;
            writeln!(out, "Max: {}", ideal_list(&ring, &s.maximal))?;
            if !s.complete {
                writeln!(
                    out,
                    "(primes found via idempotents; order exceeds lattice bound {})",
                    bounds.lattice_order
                )?;
            }
            if ring.order() <= bounds.spp_order {
                let spp = pure_spectrum(&ring, bounds.lattice_order)?;
                writeln!(out, "Spp: {}", ideal_list(&ring, &spp.members))?;
            } else {
                writeln!(
                    out,
                    "Spp: skipped (order exceeds spp bound {})",
                    bounds.spp_order
                )?;
            }
            true
        }
        Command::Example1 { p } => {
            let cert = example1_certificate(p).with_context(|| format!("p = {p}"))?;
            writeln!(out, "{} over F_{p}", cert.ideal)?;
            writeln!(out, "lex basis (x > y > z): {{{}}}", cert.basis.join(", "))?;
            for c in &cert.clauses {
                writeln!(
                    out,
                    "  [{}] {}",
                    if c.passed { "pass" } else { "FAIL" },
                    c.statement
                )?;
            }
            let ok = cert.clauses.iter().filter(|c| c.passed).count();
            writeln!(out, "{ok}/{} clauses pass", cert.clauses.len())?;
            cert.passed()
        }
        Command::Groebner {
            p,
            order,
            ideal,
            member,
            radical_member: rad,
        } => {
            let mut texts = vec![ideal.as_str()];
            texts.extend(member.as_deref());
            texts.extend(rad.as_deref());
            let vars = variables_in(texts);
            let vars = if vars.is_empty() { vec!['x'] } else { vars };
            let order = match order {
                OrderArg::Lex => MonomialOrder::lex(vars.len()),
                OrderArg::Grevlex => MonomialOrder::grevlex(vars.len()),
            };
            let gens = parse_polys(&ideal, p, &vars).context("--ideal")?;
            let gb = buchberger(&gens, &order)?;
            let names: String = vars
                .iter()
                .map(char::to_string)
                .collect::<Vec<_>>()
                .join(" > ");
            writeln!(out, "basis ({names}): {{{}}}", gb.to_texts().join(", "))?;
            if let Some(m) = member {
                let f = parse_poly(&m, p, &vars).context("--member")?;
                writeln!(out, "{m} in ideal: {}", ideal_member(&f, &gb)?)?;
            }
            if let Some(r) = rad {
                let f = parse_poly(&r, p, &vars).context("--radical-member")?;
                writeln!(
                    out,
                    "{r} in radical: {}",
                    radical_member(&f, &gens, &order)?
                )?;
            }
            true
        }
    };
    std::io::stdout().write_all(out.as_bytes())?;
    Ok(passed)
}

fn build(text: &str) -> anyhow::Result<FiniteRing> {
    let spec = parse_ring_spec(text).with_context(|| format!("parsing ring spec {text:?}"))?;
    spec.build()
        .with_context(|| format!("building ring {spec}"))
}

fn is_build_failure(f: &Failure) -> bool {
    f.check == "build" || f.check == "classify"
}

/// Atomic write: a temp file in the target directory, then rename.
fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temp file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn ideal_text(ring: &FiniteRing, ideal: &Ideal) -> String {
    let gens = ring.minimal_generators(ideal);
    if gens.is_empty() {
        return format!("({})", ring.label(ring.zero()));
    }
    let labels: Vec<&str> = gens.iter().map(|&g| ring.label(g)).collect();
    format!("({})", labels.join(", "))
}

fn ideal_list(ring: &FiniteRing, ideals: &[Ideal]) -> String {
    let items: Vec<String> = ideals.iter().map(|i| ideal_text(ring, i)).collect();
    format!("{{{}}}", items.join(", "))
}

fn witness_text(w: &Witness) -> String {
    serde_json::to_string(&serde_json::to_value(w).expect("witness serializes"))
        .expect("value serializes")
}

fn render_report(out: &mut String, ring: &FiniteRing, rep: &PropertyReport) {
    let _ = writeln!(out, "ring: {} (order {})", rep.spec, rep.order);
    for (name, entry) in &rep.properties {
        let decided = entry.methods.iter().filter(|o| o.value().is_some()).count();
        let value = entry
            .value
            .map_or("undecided".to_string(), |v| v.to_string());
        let agree = if entry.consistent {
            "agree"
        } else {
            "DISAGREE"
        };
        let _ = writeln!(
            out,
            "{name}: {value} ({decided}/{} methods decided, {agree})",
            entry.methods.len()
        );
        for o in &entry.methods {
            match o {
                Outcome::Decided(v) => {
                    let _ = write!(out, "  {}: {}", v.method, v.value);
                    if v.sampled {
                        let _ = write!(out, " (sampled)");
                    }
                    if !matches!(v.witness, Witness::None) {
                        let _ = write!(out, "  witness {}", witness_text(&v.witness));
                    }
                    let _ = writeln!(out);
                }
                Outcome::Skipped { method, reason } => {
                    let _ = writeln!(out, "  {method}: skipped ({reason})");
                }
            }
        }
    }
    if !rep.ideals.is_empty() {
        let sampled = if rep.ideals_sampled == Some(true) {
            " (sampled family)"
        } else {
            ""
        };
        let _ = writeln!(out, "ideals{sampled}:");
        for e in &rep.ideals {
            let npure = e.npure.first().is_some_and(|v| v.value);
            let agree = if e.consistent { "" } else { "  DISAGREE" };
            let _ = writeln!(
                out,
                "  {}: pure={} npure={npure}{agree}",
                ideal_text(ring, &e.ideal),
                e.pure.value
            );
        }
    }
    if let Some(s) = &rep.spectrum {
        let _ = writeln!(out, "Spec: {}", ideal_list(ring, &s.primes));
    }
    if let Some(ps) = &rep.npure_primes {
        let _ = writeln!(out, "N-pure primes: {}", ideal_list(ring, ps));
    }
    for t in &rep.theorem_checks {
        let status = match t.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "skip",
        };
        let _ = write!(out, "check {}: {status}", t.id);
        if let Some(d) = &t.detail {
            let _ = write!(out, " ({d})");
        }
        let _ = writeln!(out);
    }
    let c = rep.counts;
    let _ = writeln!(
        out,
        "checks run: {}  passed: {}  failed: {}  skipped: {}",
        c.run, c.passed, c.failed, c.skipped
    );
}

fn render_failures(out: &mut String, failures: &[Failure]) {
    for f in failures {
        let _ = write!(out, "FAILED {} [{}]: {}", f.ring, f.check, f.detail);
        if let Some(w) = &f.witness {
            let _ = write!(out, " witness {}", witness_text(w));
        }
        let _ = writeln!(out);
    }
}
