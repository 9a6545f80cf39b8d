use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context as _, Result};
use clap::{Parser, Subcommand};

use wang_cli::certify::{certify, Plan};
use wang_cli::suite::{self, Corpus};
use wang_core::corpus::{self, builtin};
use wang_core::render::{render, render_morphism, stone_render, Format, Labels, StoneGeometry};
use wang_core::spectral::{frequencies, golden_eigenvector, golden_perron_value, perron};
use wang_core::{
    derive, dominoes_with_surrounding, find_marker_candidates, patterns_with_surrounding,
    verify_markers, Axis, MarkerSet, Morphism2d, WangTileSet, Word2d,
};

#[derive(Parser)]
#[command(name = "wang", version, about = "Wang tile sets, their derivations and self-similarities")]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dominoes admitting a surrounding of the given radius.
    Dominoes {
        set: String,
        #[arg(long, value_parser = ["1", "2"])]
        dir: String,
        #[arg(long)]
        radius: usize,
    },
    /// Rectangular patterns admitting a surrounding of the given radius.
    Patterns {
        set: String,
        /// Shape as WIDTHxHEIGHT.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        radius: usize,
    },
    /// Marker candidates, or verification of one marker set.
    Markers {
        set: String,
        #[arg(long, value_parser = ["1", "2"])]
        dir: String,
        #[arg(long)]
        radius: usize,
        /// Check these markers instead of searching, e.g. `0-7` or `0,1,3`.
        #[arg(long)]
        verify: Option<String>,
    },
    /// Derived tile set from markers; the morphism goes to `--morphism`.
    Derive {
        set: String,
        /// Markers with direction, e.g. `0-7@2`.
        #[arg(long)]
        markers: String,
        #[arg(long)]
        radius: usize,
        /// Write the morphism JSON here.
        #[arg(long)]
        morphism: Option<PathBuf>,
        /// Reindex the derived tiles by this tile set.
        #[arg(long)]
        target: Option<String>,
    },
    /// The word `m^n(letter)`.
    Iterate {
        morphism: String,
        letter: usize,
        n: usize,
        /// `words` prints indices; other formats draw tiles of `--set`.
        #[arg(long, default_value = "words")]
        format: String,
        #[arg(long, default_value = "U")]
        set: String,
        #[arg(long, default_value = "index")]
        labels: String,
    },
    /// Draw patterns, morphisms and stone inflations.
    Render {
        #[command(subcommand)]
        what: RenderCommand,
    },
    /// Incidence matrix, characteristic polynomial, Perron data and frequencies.
    Spectral {
        morphism: String,
        #[arg(long)]
        json: bool,
    },
    /// Built-in artifacts.
    Corpus {
        #[command(subcommand)]
        what: CorpusCommand,
    },
    /// Certify self-similarity, aperiodicity and minimality.
    Certify {
        set: String,
        /// `auto`, or two `DIRECTION:RADIUS` steps such as `2:2,1:1`.
        #[arg(long, default_value = "auto")]
        plan: String,
    },
    /// Run the acceptance criteria.
    Suite {
        /// Criterion id, group or part of its name.
        #[arg(long)]
        filter: Option<String>,
        #[arg(short, long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
        /// Directory with U.txt, V.txt, W.txt, alpha.json and beta.json.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RenderCommand {
    /// A pattern file: rows of tile indices, top row first.
    Pattern {
        file: PathBuf,
        #[arg(long, default_value = "U")]
        set: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long, default_value = "colors")]
        labels: String,
    },
    /// The image table of a morphism.
    Morphism {
        morphism: String,
        #[arg(long)]
        domain: Option<String>,
        #[arg(long)]
        codomain: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// `omega^n(letter)` as rectangles with sides in Z[φ].
    Stone {
        #[arg(long, default_value = "omega")]
        morphism: String,
        letter: usize,
        n: usize,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    List,
    Export { name: String },
}

/// Usage or input problem: exit code 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

/// A result that was computed but a claim did not hold: exit code 1.
struct Output {
    text: String,
    claims_hold: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, claims_hold: true }
    }
}

fn load_set(name: &str) -> Result<WangTileSet> {
    if let Ok(a) = builtin(name) {
        return a
            .tileset()
            .cloned()
            .ok_or_else(|| anyhow!("{name} is a morphism, not a tile set"));
    }
    let text = std::fs::read_to_string(name).with_context(|| format!("reading tile set {name}"))?;
    WangTileSet::parse(&text).with_context(|| format!("parsing tile set {name}"))
}

fn load_morphism(name: &str) -> Result<Morphism2d> {
    if let Ok(a) = builtin(name) {
        return a
            .morphism()
            .cloned()
            .ok_or_else(|| anyhow!("{name} is a tile set, not a morphism"));
    }
    let text = std::fs::read_to_string(name).with_context(|| format!("reading morphism {name}"))?;
    Morphism2d::from_json(&text, None).with_context(|| format!("parsing morphism {name}"))
}

fn axis(dir: &str) -> Result<Axis> {
    Ok(dir.parse::<Axis>()?)
}

fn parse_shape(s: &str) -> Result<(usize, usize)> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("shape {s:?} is not WIDTHxHEIGHT"))?;
    Ok((w.trim().parse()?, h.trim().parse()?))
}

fn rows_text(w: &Word2d) -> String {
    let mut out = String::new();
    for row in w.cartesian_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn read_pattern(path: &Path) -> Result<Word2d> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().with_context(|| format!("bad tile index {t:?}")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word2d::from_cartesian_rows(&rows)?)
}

/// Domain and codomain tile sets of a built-in morphism.
fn default_sets(name: &str) -> Option<(&'static str, &'static str)> {
    match name {
        "alpha" => Some(("V", "U")),
        "beta" => Some(("W", "V")),
        "gamma" => Some(("U", "W")),
        "omega" => Some(("U", "U")),
        _ => None,
    }
}

fn run(cli: Cli) -> Result<Output, InputError> {
    let input = InputError;
    let text = match cli.command {
        Command::Dominoes { set, dir, radius } => {
            let set = load_set(&set).map_err(input)?;
            let d = dominoes_with_surrounding(&set, axis(&dir).map_err(input)?, radius);
            let mut out = String::new();
            for (a, b) in d {
                writeln!(out, "{a} {b}").expect("string");
            }
            out
        }
        Command::Patterns { set, shape, radius } => {
            let set = load_set(&set).map_err(input)?;
            let shape = parse_shape(&shape).map_err(input)?;
            let patterns = patterns_with_surrounding(&set, shape, radius).map_err(|e| input(e.into()))?;
            patterns.iter().map(rows_text).collect::<Vec<_>>().join("\n")
        }
        Command::Markers { set, dir, radius, verify } => {
            let set = load_set(&set).map_err(input)?;
            let axis = axis(&dir).map_err(input)?;
            match verify {
                Some(spec) => {
                    let spec = if spec.contains('@') { spec } else { format!("{spec}@{}", axis.number()) };
                    let markers = MarkerSet::parse(&spec).map_err(|e| input(e.into()))?;
                    let report = verify_markers(&set, &markers, radius).map_err(|e| input(e.into()))?;
                    return Ok(Output {
                        text: format!("{markers}: {report}\n"),
                        claims_hold: report.passed(),
                    });
                }
                None => find_marker_candidates(&set, axis, radius)
                    .iter()
                    .map(|m| format!("{m}\n"))
                    .collect(),
            }
        }
        Command::Derive { set, markers, radius, morphism, target } => {
            let set = load_set(&set).map_err(input)?;
            let markers = MarkerSet::parse(&markers).map_err(|e| input(e.into()))?;
            let d = match derive(&set, &markers, radius) {
                Ok(d) => d,
                Err(e @ wang_core::Error::Markers(_)) => {
                    eprintln!("{e}");
                    return Ok(Output { text: String::new(), claims_hold: false });
                }
                Err(e) => return Err(input(e.into())),
            };
            eprintln!(
                "{} derived tiles: {} singles, {} fusions",
                d.derived.len(),
                d.singles.len(),
                d.fusions.len()
            );
            let (tiles, m) = match target {
                Some(t) => {
                    let t = load_set(&t).map_err(input)?;
                    let Some(m) = d.morphism_for(&t) else {
                        eprintln!("derived set does not equal the target");
                        return Ok(Output { text: d.derived.to_text(), claims_hold: false });
                    };
                    (t, m)
                }
                None => (d.derived.clone(), d.morphism.clone()),
            };
            if let Some(path) = morphism {
                std::fs::write(&path, m.to_json())
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(input)?;
            }
            tiles.to_text()
        }
        Command::Iterate { morphism, letter, n, format, set, labels } => {
            let m = load_morphism(&morphism).map_err(input)?;
            let w = m.iterate(letter, n).map_err(|e| input(e.into()))?;
            if format == "words" {
                rows_text(&w)
            } else {
                let set = load_set(&set).map_err(input)?;
                let format: Format = format.parse().map_err(|e: wang_core::Error| input(e.into()))?;
                let labels: Labels = labels.parse().map_err(|e: wang_core::Error| input(e.into()))?;
                render(&w, &set, format, labels).map_err(|e| input(e.into()))?
            }
        }
        Command::Render { what } => match what {
            RenderCommand::Pattern { file, set, format, labels } => {
                let w = read_pattern(&file).map_err(input)?;
                let set = load_set(&set).map_err(input)?;
                let format: Format = format.parse().map_err(|e: wang_core::Error| input(e.into()))?;
                let labels: Labels = labels.parse().map_err(|e: wang_core::Error| input(e.into()))?;
                render(&w, &set, format, labels).map_err(|e| input(e.into()))?
            }
            RenderCommand::Morphism { morphism, domain, codomain, format } => {
                let m = load_morphism(&morphism).map_err(input)?;
                let defaults = default_sets(&morphism);
                let pick = |given: Option<String>, default: Option<&str>, what: &str| {
                    given
                        .or_else(|| default.map(str::to_string))
                        .ok_or_else(|| anyhow!("--{what} is required for {morphism}"))
                        .and_then(|s| load_set(&s))
                };
                let domain = pick(domain, defaults.map(|d| d.0), "domain").map_err(input)?;
                let codomain = pick(codomain, defaults.map(|d| d.1), "codomain").map_err(input)?;
                let format: Format = format.parse().map_err(|e: wang_core::Error| input(e.into()))?;
                render_morphism(&m, &domain, &codomain, format).map_err(|e| input(e.into()))?
            }
            RenderCommand::Stone { morphism, letter, n } => {
                let m = load_morphism(&morphism).map_err(input)?;
                let w = m.iterate(letter, n).map_err(|e| input(e.into()))?;
                stone_render(&w, &StoneGeometry::for_u(), n as u32).map_err(|e| input(e.into()))?
            }
        },
        Command::Spectral { morphism, json } => spectral(&morphism, json).map_err(input)?,
        Command::Corpus { what } => match what {
            CorpusCommand::List => corpus::NAMES
                .iter()
                .map(|n| {
                    let a = builtin(n).expect("listed");
                    format!("{:<6} {:<9} {}\n", a.name, a.kind(), a.provenance)
                })
                .collect(),
            CorpusCommand::Export { name } => builtin(&name).map_err(|e| input(e.into()))?.export(),
        },
        Command::Certify { set, plan } => {
            let plan: Plan = plan.parse().map_err(|e: wang_core::Error| input(e.into()))?;
            let tiles = load_set(&set).map_err(input)?;
            let c = certify(&tiles, &set, &plan);
            return Ok(Output {
                text: c.to_json(),
                claims_hold: c.passed(),
            });
        }
        Command::Suite { filter, verbose, json, corpus } => {
            let corpus = match corpus {
                Some(dir) => match Corpus::load(&dir) {
                    Ok(c) => c,
                    Err(e) => {
                        eprintln!("suite: {e}");
                        return Ok(Output {
                            text: format!("corpus FAIL {e}\n"),
                            claims_hold: false,
                        });
                    }
                },
                None => Corpus::builtin(),
            };
            let results = suite::run(&corpus, filter.as_deref());
            let passed = results.iter().all(|r| r.passed);
            let text = if json {
                let mut s = serde_json::to_string_pretty(&results).expect("serializable");
                s.push('\n');
                s
            } else {
                let mut s = String::new();
                for r in &results {
                    writeln!(s, "{r}").expect("string");
                    if verbose {
                        for c in &r.checks {
                            writeln!(s, "    [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name).expect("string");
                        }
                        for d in &r.detail {
                            writeln!(s, "    {d}").expect("string");
                        }
                    }
                }
                writeln!(
                    s,
                    "{} of {} criteria passed",
                    results.iter().filter(|r| r.passed).count(),
                    results.len()
                )
                .expect("string");
                s
            };
            return Ok(Output { text, claims_hold: passed });
        }
    };
    Ok(Output::ok(text))
}

fn spectral(name: &str, json: bool) -> Result<String> {
    let m = load_morphism(name)?;
    let matrix = m.incidence_matrix();
    let exponent = matrix.primitivity_exponent();
    let chi = matrix.char_poly()?;
    let value = perron(&matrix, 1e-13).ok().map(|p| p.value);
    let exact = golden_perron_value(&matrix).ok();
    let right = exact.and_then(|l| golden_eigenvector(&matrix, l, false).ok());
    let left = exact.and_then(|l| golden_eigenvector(&matrix, l, true).ok());
    let freq = frequencies(&matrix).ok();
    let show = |v: &Option<Vec<_>>| -> Option<Vec<String>> {
        v.as_ref().map(|v: &Vec<wang_core::spectral::GoldenNumber>| v.iter().map(ToString::to_string).collect())
    };
    if json {
        let doc = serde_json::json!({
            "incidence": matrix.to_i64(),
            "primitivityExponent": exponent,
            "charPoly": chi.to_string(),
            "perronValue": value,
            "perronValueExact": exact.map(|l| l.to_string()),
            "rightEigenvector": show(&right),
            "leftEigenvector": show(&left),
            "frequencies": freq.as_ref().map(|f| f.exact.iter().map(ToString::to_string).collect::<Vec<_>>()),
            "frequencyDecimals": freq.as_ref().map(|f| f.decimal.clone()),
        });
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        return Ok(s);
    }
    let mut s = String::new();
    writeln!(s, "incidence matrix:\n{matrix}")?;
    match exponent {
        Some(e) => writeln!(s, "primitive, M^{e} > 0")?,
        None => writeln!(s, "not primitive")?,
    }
    writeln!(s, "characteristic polynomial: {chi}")?;
    if let Some(v) = value {
        writeln!(s, "Perron value: {v:.12}")?;
    }
    if let Some(l) = exact {
        writeln!(s, "Perron value, exact: {l}")?;
    }
    if let Some(v) = show(&right) {
        writeln!(s, "right eigenvector: ({})", v.join(", "))?;
    }
    if let Some(v) = show(&left) {
        writeln!(s, "left eigenvector: ({})", v.join(", "))?;
    }
    if let Some(f) = freq {
        writeln!(s, "frequencies:")?;
        for (i, (q, d)) in f.exact.iter().zip(&f.decimal).enumerate() {
            writeln!(s, "  {i:>2}  {q}  {d:.4}")?;
        }
    }
    Ok(s)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(o) => {
            if let Err(e) = emit(out.as_deref(), &o.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if o.claims_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
