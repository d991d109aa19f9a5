//! Command-line front end.
//!
//! Arguments are parsed with clap, merged with an optional flat
//! `key = value` config file (flags win over the file, the file wins over
//! defaults), validated into a [`RunConfig`], and executed. Execution is
//! split from I/O: [`execute`] returns the artifacts as strings, [`run`]
//! writes them.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::cantor::{self, Params2};
use crate::error::{Error, Result};
use crate::export::json::surd_value;
use crate::export::{
    export_obj, parse_loop, render_svg, HoleSetDocument, LoopDocument, LoopOverlay, ObjOptions,
    Renderable, StageDocument, SvgOptions,
};
use crate::geom::{parse_rational, rat, Loop, Rational};
use crate::planar::{self, PlanarVariant};
use crate::spatial::{self, SpatialVariant};
use crate::toeplitz::{self, Symbol};
use crate::topology::{index_vector, reverse_orientation, HoleSet};

#[derive(Debug, Parser)]
#[command(name = "quasifractal", version, about = "Exact quasi-fractal constructions, loop indices and Toeplitz symbols")]
pub struct Cli {
    /// Flat `key = value` file supplying defaults for any flag.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Worker threads for parallel generation (outputs do not depend on it).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Seed for randomized batches.
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Corner-squares Cantor stage with retained boundaries.
    Gen2d(Gen2dArgs),
    /// Sierpinski carpet stage and its removed pieces.
    Carpet(PlanarArgs),
    /// Sierpinski gasket stage and its removed pieces.
    Gasket(PlanarArgs),
    /// Cube-wireframe or tetrahedral stage in space.
    Gen3d(Gen3dArgs),
    /// Measures, thresholds and connectivity of a stage.
    Measure(MeasureArgs),
    /// Index vector of a loop around the removed pieces.
    Index(IndexArgs),
    /// Winding and Fredholm index of a Laurent symbol.
    Toeplitz(ToeplitzArgs),
    /// SVG or OBJ rendering of a stage document.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct Gen2dArgs {
    /// Scale factor as `p/q`, 0 < a <= 1/2.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub depth: Option<usize>,
    /// Depth cap guarding the 4^n cell count.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Stage document path; `-` or absent writes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlanarArgs {
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Gen3dArgs {
    #[arg(long, value_enum)]
    pub variant: Option<Variant3>,
    /// Cube scale factor as `p/q`, 0 < a < 1/2.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub obj: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long, value_enum)]
    pub kind: Option<Variant2>,
    #[arg(long)]
    pub depth: Option<usize>,
    /// Loop vertices as `x,y; x,y; ...` with rational coordinates.
    #[arg(long = "loop", conflicts_with = "loop_file")]
    pub curve: Option<String>,
    /// File holding a loop in the `--loop` syntax or a loop document.
    #[arg(long)]
    pub loop_file: Option<PathBuf>,
    #[arg(long)]
    pub reverse: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ToeplitzArgs {
    /// Terms `k:re[,+im]` separated by commas, e.g. `-1:1, 0:4, 1:1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "random")]
    pub symbol: Option<String>,
    /// Samples for the argument-principle winding.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Size of a finite Toeplitz section to report on.
    #[arg(long)]
    pub truncate: Option<usize>,
    /// Cross-check this many seeded random symbols instead.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Stage document written by gen2d, carpet, gasket or gen3d.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format; inferred from the `--out` extension when absent.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant3 {
    Cube,
    Tetra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant2 {
    Carpet,
    Gasket,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Cantor,
    Carpet,
    Gasket,
    Cube,
    Tetra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Obj,
}

impl From<Variant2> for PlanarVariant {
    fn from(v: Variant2) -> Self {
        match v {
            Variant2::Carpet => PlanarVariant::Carpet,
            Variant2::Gasket => PlanarVariant::Gasket,
        }
    }
}

/// Destination of an artifact; `None` is standard output.
pub type Target = Option<PathBuf>;

/// A validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub threads: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Gen2d {
        params: Params2,
        out: Target,
        svg: Option<PathBuf>,
    },
    Planar {
        variant: PlanarVariant,
        depth: usize,
        cap: usize,
        out: Target,
        svg: Option<PathBuf>,
    },
    Gen3d {
        variant: SpatialVariant,
        depth: usize,
        cap: usize,
        out: Target,
        obj: Option<PathBuf>,
    },
    Measure {
        kind: Kind,
        a: Option<Rational>,
        depth: usize,
        out: Target,
    },
    Index {
        variant: PlanarVariant,
        depth: usize,
        curve: Option<Loop>,
        reverse: bool,
        out: Target,
        svg: Option<PathBuf>,
    },
    Toeplitz {
        mode: ToeplitzMode,
        out: Target,
    },
    Render {
        input: PathBuf,
        out: Target,
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ToeplitzMode {
    Single {
        symbol: Symbol,
        samples: Option<usize>,
        truncate: Option<usize>,
    },
    Batch {
        count: usize,
    },
}

/// One output of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub target: Target,
    pub contents: String,
}

const CONFIG_KEYS: &[&str] = &[
    "a", "cap", "depth", "format", "input", "kind", "loop", "loop-file", "obj", "out", "random",
    "reverse", "samples", "seed", "svg", "symbol", "threads", "truncate", "variant",
];

/// Flat `key = value` settings; `#` starts a comment, `_` and `-` are
/// interchangeable in keys.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", n + 1)))?;
            let key = key.trim().replace('_', "-");
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(Error::Parse(format!(
                    "config line {}: unknown key {key:?} (known: {})",
                    n + 1,
                    CONFIG_KEYS.join(", ")
                )));
            }
            let value = value.trim().trim_matches('"').to_string();
            if values.insert(key.clone(), value).is_some() {
                return Err(Error::Parse(format!("config line {}: duplicate key {key:?}", n + 1)));
            }
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("reading config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::Parse(format!("config key {key}: cannot parse {v:?}")))
            })
            .transpose()
    }

    fn choice<T: ValueEnum>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                T::from_str(v, true)
                    .map_err(|_| Error::Parse(format!("config key {key}: unknown value {v:?}")))
            })
            .transpose()
    }

    fn flag(&self, key: &str) -> Result<bool> {
        Ok(self.parsed::<bool>(key)?.unwrap_or(false))
    }
}

struct Resolver<'a> {
    file: &'a ConfigFile,
}

impl Resolver<'_> {
    fn num<T: FromStr>(&self, cli: Option<T>, key: &str) -> Result<Option<T>> {
        match cli {
            Some(v) => Ok(Some(v)),
            None => self.file.parsed(key),
        }
    }

    fn choice<T: ValueEnum>(&self, cli: Option<T>, key: &str) -> Result<Option<T>> {
        match cli {
            Some(v) => Ok(Some(v)),
            None => self.file.choice(key),
        }
    }

    fn text(&self, cli: Option<String>, key: &str) -> Option<String> {
        cli.or_else(|| self.file.get(key).map(str::to_string))
    }

    fn path(&self, cli: Option<PathBuf>, key: &str) -> Option<PathBuf> {
        cli.or_else(|| self.file.get(key).map(PathBuf::from))
    }

    fn target(&self, cli: Option<PathBuf>) -> Target {
        self.path(cli, "out").filter(|p| p.as_os_str() != "-")
    }

    fn depth(&self, cli: Option<usize>, command: &str) -> Result<usize> {
        self.num(cli, "depth")?
            .ok_or_else(|| Error::Usage(format!("{command} needs --depth N")))
    }

    fn scale(&self, cli: Option<String>, command: &str) -> Result<Rational> {
        let a = self
            .text(cli, "a")
            .ok_or_else(|| Error::Usage(format!("{command} needs --a p/q")))?;
        parse_rational(&a)
    }
}

fn no_cli_scale(a: &Option<String>, what: &str) -> Result<()> {
    match a {
        Some(_) => Err(Error::Usage(format!("--a does not apply to {what}"))),
        None => Ok(()),
    }
}

fn read_loop_file(path: &Path) -> Result<Loop> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("reading loop {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let doc: LoopDocument =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("loop document: {e}")))?;
        doc.to_loop()
    } else {
        parse_loop(text.trim())
    }
}

impl RunConfig {
    /// Validates parsed arguments against an optional config file.
    pub fn resolve(cli: Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        Self::resolve_with(cli, &file)
    }

    pub fn resolve_with(cli: Cli, file: &ConfigFile) -> Result<Self> {
        let r = Resolver { file };
        let threads = r.num(cli.threads, "threads")?;
        if threads == Some(0) {
            return Err(Error::Parameter("--threads must be at least 1".into()));
        }
        let seed = r.num(cli.seed, "seed")?.unwrap_or(0);
        let command = match cli.command {
            CommandArgs::Gen2d(args) => {
                let a = r.scale(args.a, "gen2d")?;
                let depth = r.depth(args.depth, "gen2d")?;
                let cap = r.num(args.cap, "cap")?.unwrap_or(cantor::DEFAULT_DEPTH_CAP);
                Command::Gen2d {
                    params: Params2::with_cap(a, depth, cap)?,
                    out: r.target(args.out),
                    svg: r.path(args.svg, "svg"),
                }
            }
            CommandArgs::Carpet(args) => planar_command(&r, PlanarVariant::Carpet, args)?,
            CommandArgs::Gasket(args) => planar_command(&r, PlanarVariant::Gasket, args)?,
            CommandArgs::Gen3d(args) => {
                let kind = r
                    .choice(args.variant, "variant")?
                    .ok_or_else(|| Error::Usage("gen3d needs --variant cube|tetra".into()))?;
                let variant = match kind {
                    Variant3::Cube => SpatialVariant::cube(r.scale(args.a, "gen3d --variant cube")?)?,
                    Variant3::Tetra => {
                        no_cli_scale(&args.a, "the tetrahedral variant")?;
                        SpatialVariant::TetraGasket
                    }
                };
                let depth = r.depth(args.depth, "gen3d")?;
                let cap = r.num(args.cap, "cap")?.unwrap_or(variant.default_cap());
                check_depth(depth, cap)?;
                Command::Gen3d {
                    variant,
                    depth,
                    cap,
                    out: r.target(args.out),
                    obj: r.path(args.obj, "obj"),
                }
            }
            CommandArgs::Measure(args) => {
                let kind = r.choice(args.kind, "kind")?.unwrap_or(Kind::Cantor);
                let depth = r.depth(args.depth, "measure")?;
                let a = match kind {
                    Kind::Cantor | Kind::Cube => {
                        let a = r.scale(args.a, "measure")?;
                        match kind {
                            Kind::Cantor => cantor::validate_scale(&a, true)?,
                            _ => {
                                SpatialVariant::cube(a.clone())?;
                            }
                        }
                        Some(a)
                    }
                    _ => {
                        no_cli_scale(&args.a, "this kind")?;
                        None
                    }
                };
                let cap = match kind {
                    Kind::Cantor => cantor::DEFAULT_DEPTH_CAP,
                    Kind::Carpet => planar::CARPET_DEPTH_CAP,
                    Kind::Gasket => planar::GASKET_DEPTH_CAP,
                    Kind::Cube => spatial::CUBE_DEPTH_CAP,
                    Kind::Tetra => spatial::TETRA_DEPTH_CAP,
                };
                check_depth(depth, cap)?;
                Command::Measure {
                    kind,
                    a,
                    depth,
                    out: r.target(args.out),
                }
            }
            CommandArgs::Index(args) => {
                let variant: PlanarVariant = r
                    .choice(args.kind, "kind")?
                    .ok_or_else(|| Error::Usage("index needs --kind carpet|gasket".into()))?
                    .into();
                let depth = r.depth(args.depth, "index")?;
                check_depth(depth, variant.default_cap())?;
                let curve = match (args.curve, args.loop_file) {
                    (Some(text), _) => Some(parse_loop(&text)?),
                    (None, Some(path)) => Some(read_loop_file(&path)?),
                    (None, None) => match (file.get("loop"), file.get("loop-file")) {
                        (Some(_), Some(_)) => {
                            return Err(Error::Usage("config sets both loop and loop-file".into()))
                        }
                        (Some(text), None) => Some(parse_loop(text)?),
                        (None, Some(path)) => Some(read_loop_file(Path::new(path))?),
                        (None, None) => None,
                    },
                };
                Command::Index {
                    variant,
                    depth,
                    curve,
                    reverse: args.reverse || file.flag("reverse")?,
                    out: r.target(args.out),
                    svg: r.path(args.svg, "svg"),
                }
            }
            CommandArgs::Toeplitz(args) => {
                let from_cli = args.symbol.is_some() || args.random.is_some();
                let symbol = if from_cli { args.symbol } else { file.get("symbol").map(str::to_string) };
                let random = if from_cli { args.random } else { file.parsed("random")? };
                let mode = match (symbol, random) {
                    (Some(_), Some(_)) => {
                        return Err(Error::Usage("config sets both symbol and random".into()))
                    }
                    (Some(text), None) => ToeplitzMode::Single {
                        symbol: text.parse()?,
                        samples: r.num(args.samples, "samples")?,
                        truncate: r.num(args.truncate, "truncate")?,
                    },
                    (None, Some(count)) => {
                        if args.samples.is_some() || args.truncate.is_some() {
                            return Err(Error::Usage(
                                "--samples and --truncate apply to a single --symbol".into(),
                            ));
                        }
                        ToeplitzMode::Batch { count }
                    }
                    (None, None) => {
                        return Err(Error::Usage("toeplitz needs --symbol TERMS or --random N".into()))
                    }
                };
                Command::Toeplitz {
                    mode,
                    out: r.target(args.out),
                }
            }
            CommandArgs::Render(args) => {
                let input = r
                    .path(args.input, "input")
                    .ok_or_else(|| Error::Usage("render needs --input DOC.json".into()))?;
                let out = r.target(args.out);
                let inferred = out.as_ref().and_then(|p| p.extension()).and_then(|e| {
                    match e.to_str()?.to_ascii_lowercase().as_str() {
                        "svg" => Some(Format::Svg),
                        "obj" => Some(Format::Obj),
                        _ => None,
                    }
                });
                let format = r.choice(args.format, "format")?.or(inferred).ok_or_else(|| {
                    Error::Usage("render needs --format svg|obj or an --out ending in .svg/.obj".into())
                })?;
                Command::Render { input, out, format }
            }
        };
        Ok(RunConfig {
            command,
            threads,
            seed,
        })
    }
}

fn check_depth(depth: usize, cap: usize) -> Result<()> {
    if depth > cap {
        return Err(Error::Capacity(format!("depth {depth} exceeds the cap {cap}")));
    }
    Ok(())
}

fn planar_command(r: &Resolver<'_>, variant: PlanarVariant, args: PlanarArgs) -> Result<Command> {
    let depth = r.depth(args.depth, variant.name())?;
    let cap = r.num(args.cap, "cap")?.unwrap_or(variant.default_cap());
    check_depth(depth, cap)?;
    Ok(Command::Planar {
        variant,
        depth,
        cap,
        out: r.target(args.out),
        svg: r.path(args.svg, "svg"),
    })
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

fn artifact(target: &Target, contents: String) -> Artifact {
    Artifact {
        target: target.clone(),
        contents,
    }
}

fn side_artifact(path: &Option<PathBuf>, contents: impl FnOnce() -> Result<String>) -> Result<Option<Artifact>> {
    path.as_ref()
        .map(|p| {
            Ok(Artifact {
                target: Some(p.clone()),
                contents: contents()?,
            })
        })
        .transpose()
}

/// Runs a validated configuration and returns its artifacts without
/// touching the file system (apart from reading `render` inputs).
pub fn execute(config: &RunConfig) -> Result<Vec<Artifact>> {
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?
            .install(|| execute_command(config)),
        None => execute_command(config),
    }
}

fn execute_command(config: &RunConfig) -> Result<Vec<Artifact>> {
    let mut out = Vec::new();
    match &config.command {
        Command::Gen2d { params, out: target, svg } => {
            let stage = cantor::build(params)?;
            out.push(artifact(target, StageDocument::from_stage2(&stage)?.to_json()));
            out.extend(side_artifact(svg, || {
                render_svg(Renderable::Cantor(&stage), &SvgOptions::default())
            })?);
        }
        Command::Planar {
            variant,
            depth,
            cap,
            out: target,
            svg,
        } => {
            let ps = planar::build_planar_with_cap(*variant, *depth, *cap)?;
            out.push(artifact(target, StageDocument::from_piece_set(&ps).to_json()));
            out.extend(side_artifact(svg, || {
                render_svg(Renderable::Planar(&ps), &SvgOptions::default())
            })?);
        }
        Command::Gen3d {
            variant,
            depth,
            cap,
            out: target,
            obj,
        } => {
            let stage = spatial::build_spatial_with_cap(variant, *depth, *cap)?;
            out.push(artifact(target, StageDocument::from_stage3(&stage)?.to_json()));
            out.extend(side_artifact(obj, || Ok(export_obj(&stage, &ObjOptions::all())))?);
        }
        Command::Measure {
            kind,
            a,
            depth,
            out: target,
        } => out.push(artifact(target, pretty(&measure(*kind, a.as_ref(), *depth)?))),
        Command::Index {
            variant,
            depth,
            curve,
            reverse,
            out: target,
            svg,
        } => {
            let ps = planar::build_planar(*variant, *depth)?;
            let holes = HoleSet::from_pieces(&ps)?;
            let mut curve = curve.clone().unwrap_or_else(|| variant.base_tile().boundary);
            if *reverse {
                curve = reverse_orientation(&curve);
            }
            let index = index_vector(&curve, &holes)?;
            let report = json!({
                "kind": variant.name(),
                "depth": depth,
                "loop": LoopDocument::from_loop(&curve),
                "holes": HoleSetDocument::from_holes(&holes),
                "index": index.entries(),
            });
            out.push(artifact(target, pretty(&report)));
            out.extend(side_artifact(svg, || {
                let options = SvgOptions {
                    overlay: Some(LoopOverlay {
                        curve: curve.clone(),
                        holes: holes.clone(),
                    }),
                    ..SvgOptions::default()
                };
                render_svg(Renderable::Planar(&ps), &options)
            })?);
        }
        Command::Toeplitz { mode, out: target } => {
            let value = match mode {
                ToeplitzMode::Single {
                    symbol,
                    samples,
                    truncate,
                } => toeplitz_report(symbol, *samples, *truncate)?,
                ToeplitzMode::Batch { count } => {
                    serde_json::to_value(toeplitz::cross_check_batch(config.seed, *count))
                        .expect("report serializes")
                }
            };
            out.push(artifact(target, pretty(&value)));
        }
        Command::Render {
            input,
            out: target,
            format,
        } => out.push(artifact(target, render_document(input, *format)?)),
    }
    Ok(out)
}

fn measure(kind: Kind, a: Option<&Rational>, depth: usize) -> Result<Value> {
    let mut m = Map::new();
    m.insert("depth".into(), json!(depth));
    match kind {
        Kind::Cantor => {
            let a = a.expect("validated scale");
            let stage = cantor::build(&Params2::new(a.clone(), depth)?)?;
            m.insert("kind".into(), json!("cantor2d"));
            m.insert("a".into(), json!(a.to_string()));
            m.insert("cell_count".into(), json!(stage.cells().len()));
            m.insert("dimension".into(), json!(cantor::hausdorff_dimension(a)?));
            m.insert(
                "union_length".into(),
                json!(crate::geom::union_length(stage.segments())?.to_string()),
            );
            m.insert("components".into(), json!(cantor::connectivity(&stage).components));
            if *a < rat(1, 2) {
                let series = cantor::perimeter_series(a, depth)?;
                m.insert("perimeter_partial_sum".into(), json!(series.partial_sum.to_string()));
                m.insert(
                    "perimeter_limit".into(),
                    json!(series.limit.map(|l| l.to_string())),
                );
                m.insert("finite".into(), json!(series.finite));
            } else {
                m.insert("perimeter_partial_sum".into(), Value::Null);
                m.insert("perimeter_limit".into(), Value::Null);
                m.insert("finite".into(), json!(false));
            }
        }
        Kind::Carpet | Kind::Gasket => {
            let variant = if kind == Kind::Carpet {
                PlanarVariant::Carpet
            } else {
                PlanarVariant::Gasket
            };
            let ps = planar::build_planar(variant, depth)?;
            let areas = planar::area_accounting(&ps);
            let total = &areas.kept_area + &areas.removed_area;
            let per_level: Vec<usize> = (1..=depth).map(|k| ps.removed_at(k).count()).collect();
            m.insert("kind".into(), json!(variant.name()));
            m.insert("kept_count".into(), json!(ps.kept().len()));
            m.insert("removed_count".into(), json!(ps.removed().len()));
            m.insert("removed_per_level".into(), json!(per_level));
            m.insert("kept_area".into(), json!(areas.kept_area.to_string()));
            m.insert("removed_area".into(), json!(areas.removed_area.to_string()));
            m.insert("initial_area".into(), json!(variant.initial_area().to_string()));
            m.insert("area_complete".into(), json!(total == variant.initial_area()));
            m.insert("dimension".into(), json!(planar::similarity_dimension(variant)));
        }
        Kind::Cube | Kind::Tetra => {
            let variant = match a {
                Some(a) => SpatialVariant::cube(a.clone())?,
                None => SpatialVariant::TetraGasket,
            };
            let stage = spatial::build_spatial(&variant, depth)?;
            let series = spatial::series_measures(&variant, depth)?;
            let dimension = (variant.branching() as f64).ln() / -cantor::ln_rational(&variant.contraction());
            m.insert("kind".into(), json!(variant.name()));
            if let Some(a) = a {
                m.insert("a".into(), json!(a.to_string()));
            }
            m.insert("cell_count".into(), json!(stage.cells().len()));
            m.insert("skeleton_count".into(), json!(stage.skeleton().len()));
            m.insert("piece_count".into(), json!(stage.pieces().len()));
            m.insert("dimension".into(), json!(dimension));
            m.insert("edge_length_sum".into(), surd_value(&series.edge_length_sum));
            m.insert("face_area_sum".into(), surd_value(&series.face_area_sum));
            m.insert("edge_finite".into(), json!(series.edge_finite));
            m.insert("area_finite".into(), json!(series.area_finite));
            m.insert(
                "edge_limit".into(),
                series.edge_limit.as_ref().map_or(Value::Null, surd_value),
            );
            m.insert(
                "area_limit".into(),
                series.area_limit.as_ref().map_or(Value::Null, surd_value),
            );
            m.insert("components".into(), json!(spatial::connectivity3(&stage).components));
            m.insert(
                "violations".into(),
                json!(spatial::boundary_incidence(&stage).violations),
            );
        }
    }
    Ok(Value::Object(m))
}

fn toeplitz_report(symbol: &Symbol, samples: Option<usize>, truncate: Option<usize>) -> Result<Value> {
    let mut report = toeplitz::fredholm_index(symbol)?;
    if let Some(n) = samples {
        report.winding_arg = toeplitz::winding_by_argument(symbol, n)?;
        report.methods_agree = report.winding_arg == report.winding_roots;
    }
    let flipped = symbol.orientation_flip();
    let flip_index = toeplitz::fredholm_index(&flipped)?.fredholm_index;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    let obj = value.as_object_mut().expect("report is an object");
    obj.insert("symbol".into(), json!(symbol.to_string()));
    obj.insert("m".into(), json!(symbol.m()));
    obj.insert("p".into(), json!(symbol.p()));
    obj.insert(
        "orientation_flip".into(),
        json!({ "symbol": flipped.to_string(), "fredholm_index": flip_index }),
    );
    if let Some(n) = truncate {
        let t = toeplitz::truncate(symbol, n)?;
        obj.insert(
            "truncation".into(),
            json!({
                "n": t.n,
                "numerical_rank": t.numerical_rank,
                "smallest_singular_value": t.smallest_singular_value,
            }),
        );
    }
    Ok(value)
}

fn render_document(input: &Path, format: Format) -> Result<String> {
    let text = fs::read_to_string(input)
        .map_err(|e| Error::Io(format!("reading {}: {e}", input.display())))?;
    let doc = StageDocument::from_json(&text)?;
    let depth = || -> Result<usize> {
        doc.params
            .get("depth")
            .ok_or_else(|| Error::Parse("document has no depth parameter".into()))?
            .parse()
            .map_err(|_| Error::Parse("document depth is not an integer".into()))
    };
    match (doc.kind.as_str(), format) {
        ("cantor2d", Format::Svg) => {
            let stage = doc.to_stage2()?;
            render_svg(Renderable::Cantor(&stage), &SvgOptions::default())
        }
        (kind @ ("carpet" | "gasket"), Format::Svg) => {
            let variant = if kind == "carpet" {
                PlanarVariant::Carpet
            } else {
                PlanarVariant::Gasket
            };
            let ps = planar::build_planar(variant, depth()?)?;
            if StageDocument::from_piece_set(&ps) != doc {
                return Err(Error::Parse("document contents do not match its parameters".into()));
            }
            render_svg(Renderable::Planar(&ps), &SvgOptions::default())
        }
        ("cube_wireframe" | "tetra_gasket", Format::Obj) => {
            let variant = match doc.params.get("a") {
                Some(a) => SpatialVariant::cube(parse_rational(a)?)?,
                None => SpatialVariant::TetraGasket,
            };
            let stage = spatial::build_spatial(&variant, depth()?)?;
            if StageDocument::from_stage3(&stage)? != doc {
                return Err(Error::Parse("document contents do not match its parameters".into()));
            }
            Ok(export_obj(&stage, &ObjOptions::all()))
        }
        ("cube_wireframe" | "tetra_gasket", Format::Svg) => Err(Error::UnsupportedGeometry(
            "SVG export needs a planar stage; use --format obj".into(),
        )),
        ("cantor2d" | "carpet" | "gasket", Format::Obj) => Err(Error::UnsupportedGeometry(
            "OBJ export needs a spatial stage; use --format svg".into(),
        )),
        (kind, _) => Err(Error::Parse(format!("unknown document kind {kind:?}"))),
    }
}

/// Executes and writes every artifact; standard-output artifacts are
/// returned concatenated.
pub fn run(config: &RunConfig) -> Result<String> {
    let mut stdout = String::new();
    for a in execute(config)? {
        match &a.target {
            Some(path) => fs::write(path, &a.contents)
                .map_err(|e| Error::Io(format!("writing {}: {e}", path.display())))?,
            None => stdout.push_str(&a.contents),
        }
    }
    Ok(stdout)
}

/// Full front end: parses `args` (including the program name), runs, and
/// returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match RunConfig::resolve(cli).and_then(|config| run(&config)) {
        Ok(stdout) => {
            print!("{stdout}");
            0
        }
        Err(e) => {
            eprintln!("quasifractal: {e}");
            e.exit_code()
        }
    }
}

/// Parses a command line into a validated configuration.
pub fn parse_args<I, T>(args: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Usage(e.to_string()))?;
    RunConfig::resolve(cli)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig> {
        parse_args(std::iter::once("quasifractal").chain(args.iter().copied()))
    }

    fn stdout(args: &[&str]) -> Value {
        let out = execute(&cfg(args).unwrap()).unwrap();
        serde_json::from_str(&out[0].contents).unwrap()
    }

    #[test]
    fn gen2d_cell_count() {
        let doc = stdout(&["gen2d", "--a", "1/5", "--depth", "3"]);
        assert_eq!(doc["cells"].as_array().unwrap().len(), 64);
    }

    #[test]
    fn measure_threshold() {
        let m = stdout(&["measure", "--a", "3/10", "--depth", "5"]);
        assert_eq!(m["finite"], json!(false));
        let m = stdout(&["measure", "--a", "1/5", "--depth", "2"]);
        assert_eq!(m["finite"], json!(true));
        assert_eq!(m["perimeter_limit"], json!("20"));
        assert_eq!(m["components"], json!(1));
    }

    #[test]
    fn toeplitz_shift() {
        let r = stdout(&["toeplitz", "--symbol", "1:1"]);
        assert_eq!(r["winding_roots"], json!(1));
        assert_eq!(r["winding_arg"], json!(1));
        assert_eq!(r["fredholm_index"], json!(-1));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cfg(&["gen2d", "--depth", "2"]).unwrap_err().exit_code(), 1);
        assert_eq!(cfg(&["gen2d", "--a", "3/5", "--depth", "2"]).unwrap_err().exit_code(), 2);
        assert_eq!(cfg(&["gen2d", "--a", "1/5", "--depth", "11"]).unwrap_err().exit_code(), 3);
        assert_eq!(cfg(&["bogus"]).unwrap_err().exit_code(), 1);
        assert_eq!(cfg(&["measure", "--kind", "carpet", "--a", "1/3", "--depth", "1"]).unwrap_err().exit_code(), 1);
        let c = cfg(&["toeplitz", "--symbol", "0:1, 1:-1"]).unwrap();
        assert_eq!(execute(&c).unwrap_err().exit_code(), 4);
        let missing = cfg(&["render", "--input", "/nonexistent/doc.json", "--format", "svg"]).unwrap();
        assert_eq!(execute(&missing).unwrap_err().exit_code(), 5);
    }

    #[test]
    fn config_precedence() {
        let file = ConfigFile::parse("# defaults\na = 1/3\ndepth = 2\n").unwrap();
        let cli = Cli::try_parse_from(["q", "gen2d", "--depth", "1"]).unwrap();
        let c = RunConfig::resolve_with(cli, &file).unwrap();
        match c.command {
            Command::Gen2d { params, .. } => {
                assert_eq!(params.a, rat(1, 3));
                assert_eq!(params.depth, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("depth 3").is_err());
        assert!(ConfigFile::parse("depth = 1\ndepth = 2").is_err());
    }

    #[test]
    fn index_default_loop_encircles_every_hole() {
        let r = stdout(&["index", "--kind", "carpet", "--depth", "2"]);
        let index = r["index"].as_array().unwrap();
        assert_eq!(index.len(), 9);
        assert!(index.iter().all(|v| v == &json!(1)));
        let r = stdout(&["index", "--kind", "gasket", "--depth", "1", "--reverse"]);
        assert_eq!(r["index"], json!([-1]));
    }

    #[test]
    fn render_rejects_mismatched_format() {
        let dir = tempfile::tempdir().unwrap();
        let doc = dir.path().join("t.json");
        run(&cfg(&["gen3d", "--variant", "tetra", "--depth", "1", "--out", doc.to_str().unwrap()]).unwrap()).unwrap();
        let svg = cfg(&["render", "--input", doc.to_str().unwrap(), "--format", "svg"]).unwrap();
        assert!(matches!(execute(&svg), Err(Error::UnsupportedGeometry(_))));
        let obj = cfg(&["render", "--input", doc.to_str().unwrap(), "--out", "x.obj"]).unwrap();
        assert!(execute(&obj).unwrap()[0].contents.starts_with("# tetra_gasket level 1"));
    }
}
