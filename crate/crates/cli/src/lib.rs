//! Command-line front end for `vonkoch`.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 domain error,
//! 4 size budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_complex::Complex;
use vonkoch::cycsum::MAX_BRUTE_N;
use vonkoch::render::intervals_to_svg;
use vonkoch::turtle::paper_scale;
use vonkoch::{
    builtin_morphism, cantor_intervals, coquet_sum, make_curve_spec, partial_sum_polyline,
    renormalize, run_turtle, substitution_polyline, tm_prefix_word, to_csv, to_json, to_svg,
    z_bruteforce, z_fast, BlockChoice, CantorSet64, Error, ErrorKind, Polyline64, RenderStyle,
    SumMethod, TurtleLetter, TurtleProgram64,
};

mod numfmt;

use numfmt::format_complex;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "vonkoch",
    version,
    about = "Thue-Morse, uniform morphisms and von Koch curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a prefix of a built-in fixed point.
    Seq {
        /// thue-morse, lambda, dekking8, dekking6 or cantor
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        length: usize,
        /// Apply the morphism's coding to the prefix.
        #[arg(long)]
        coded: bool,
    },
    /// Evaluate Z(N, p, q) = sum over k < N of eta_p^{s_p(k)} eta_q^k.
    Sum {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long = "N", value_parser = parse_biguint)]
        n: BigUint,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Also print the exact group-ring coefficients as JSON.
        #[arg(long)]
        exact: bool,
    },
    /// Print the sum over k < N of (-1)^{s_2(3k)}.
    Coquet {
        #[arg(long = "N")]
        n: u64,
    },
    /// Generate a generalised von Koch curve (p = 2).
    Curve {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        gen: u32,
        #[arg(long, value_enum, default_value_t = Scale::Natural)]
        scale: Scale,
        #[arg(long, value_enum, default_value_t = Construction::Substitution)]
        construction: Construction,
        /// Output file (.svg, .csv or .json); SVG on standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the raw turtle track of a Thue-Morse prefix of length 2^K.
    Turtle {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = ZeroLetter::F)]
        zero_letter: ZeroLetter,
        #[arg(long, default_value_t = 60.0)]
        angle_degrees: f64,
        /// Turn counterclockwise (default).
        #[arg(long, conflicts_with = "cw")]
        ccw: bool,
        /// Turn clockwise.
        #[arg(long)]
        cw: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw Cantor generations 0..=K stacked vertically.
    Cantor {
        #[arg(long)]
        gen: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Fast,
    Brute,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Scale {
    Natural,
    Paper,
    None,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    Substitution,
    PartialSum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ZeroLetter {
    F,
    L,
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

/// Failure of a subcommand, already classified by exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Resource => EXIT_RESOURCE,
            ErrorKind::Domain | ErrorKind::Render => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Svg,
    Csv,
    Json,
}

fn output_format(out: Option<&Path>, allowed: &[Format]) -> Result<Format, Failure> {
    let Some(path) = out else {
        return Ok(Format::Svg);
    };
    let format = match path.extension().and_then(|e| e.to_str()) {
        Some("svg") => Format::Svg,
        Some("csv") => Format::Csv,
        Some("json") => Format::Json,
        _ => {
            return Err(usage(format!(
                "cannot infer output format from `{}` (use .svg, .csv or .json)",
                path.display()
            )))
        }
    };
    if !allowed.contains(&format) {
        return Err(usage(format!(
            "`{}`: this subcommand writes {}",
            path.display(),
            allowed
                .iter()
                .map(|f| format!("{f:?}").to_lowercase())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(format)
}

/// What a successful subcommand produced.
enum Output {
    Stdout(String),
    File(PathBuf, String),
}

fn polyline_output(poly: &Polyline64, out: Option<PathBuf>) -> Result<Output, Failure> {
    let format = output_format(out.as_deref(), &[Format::Svg, Format::Csv, Format::Json])?;
    let text = match format {
        Format::Svg => to_svg(std::slice::from_ref(poly), &RenderStyle::default())?,
        Format::Csv => to_csv(poly),
        Format::Json => to_json(poly),
    };
    Ok(match out {
        Some(path) => Output::File(path, text),
        None => Output::Stdout(text),
    })
}

fn run_seq(morphism: &str, length: usize, coded: bool) -> Result<Output, Failure> {
    let builtin = builtin_morphism(morphism)?;
    let prefix = builtin.morphism.fixed_point_prefix(&builtin.seed, length)?;
    let text = if coded {
        let coding = builtin.coding.as_ref().ok_or_else(|| {
            Failure::from(Error::Domain(format!(
                "morphism `{morphism}` has no coding"
            )))
        })?;
        coding.target_alphabet().render(&coding.apply(&prefix)?)
    } else {
        builtin.morphism.render(&prefix)
    };
    Ok(Output::Stdout(text + "\n"))
}

fn run_sum(p: u32, q: u32, n: &BigUint, method: Method, exact: bool) -> Result<Output, Failure> {
    let (z, used) = match method {
        Method::Fast => z_fast(n, p, q, BlockChoice::PaperQ)?,
        Method::Brute => {
            let small = u64::try_from(n)
                .ok()
                .filter(|&v| v <= MAX_BRUTE_N)
                .ok_or_else(|| {
                    Failure::from(Error::Resource(format!(
                        "brute-force sum of {n} terms (limit {MAX_BRUTE_N})"
                    )))
                })?;
            (z_bruteforce(small, p, q)?, SumMethod::Brute)
        }
    };
    let mut text = format!(
        "method: {used}\nvalue: {}\n",
        format_complex(z.eval::<f64>(), 12)
    );
    if exact {
        text.push_str(&format!("exact: {}\n", z.to_json()));
    }
    Ok(Output::Stdout(text))
}

fn run_curve(
    q: u32,
    gen: u32,
    scale: Scale,
    construction: Construction,
    out: Option<PathBuf>,
) -> Result<Output, Failure> {
    output_format(out.as_deref(), &[Format::Svg, Format::Csv, Format::Json])?;
    let spec = make_curve_spec::<f64>(2, q)?;
    let paper_factor = match scale {
        Scale::Paper if q != 3 => {
            return Err(Error::Domain(format!(
                "paper scaling S_2n is defined for the Koch curve (q = 3), not q = {q}"
            ))
            .into())
        }
        Scale::Paper => Some(paper_scale::<f64>(2 * gen)?),
        _ => None,
    };
    let raw = match construction {
        Construction::Substitution => substitution_polyline(&spec, gen)?,
        Construction::PartialSum => {
            let count = spec
                .block
                .checked_pow(gen)
                .ok_or_else(|| Error::Resource(format!("{}^{gen} segments", spec.block)))?;
            partial_sum_polyline(&spec, count)?
        }
    };
    let poly = match scale {
        Scale::Natural => renormalize(&raw, &spec, gen)?,
        Scale::Paper => raw.transformed(
            Complex::new(paper_factor.expect("computed above"), 0.0),
            Complex::new(0.0, 0.0),
        ),
        Scale::None => raw,
    };
    polyline_output(&poly, out)
}

fn run_turtle_cmd(
    k: u32,
    zero_letter: ZeroLetter,
    angle_degrees: f64,
    cw: bool,
    out: Option<PathBuf>,
) -> Result<Output, Failure> {
    output_format(out.as_deref(), &[Format::Svg, Format::Csv, Format::Json])?;
    let zero = match zero_letter {
        ZeroLetter::F => TurtleLetter::F,
        ZeroLetter::L => TurtleLetter::L,
    };
    let sign = if cw { -1.0 } else { 1.0 };
    let word = tm_prefix_word(k, zero)?;
    let program = TurtleProgram64::new(word, sign * angle_degrees.to_radians())?;
    polyline_output(&run_turtle(&program), out)
}

fn run_cantor(gen: u32, out: Option<PathBuf>) -> Result<Output, Failure> {
    output_format(out.as_deref(), &[Format::Svg])?;
    let sets = (0..=gen)
        .map(cantor_intervals::<f64>)
        .collect::<Result<Vec<CantorSet64>, _>>()?;
    let text = intervals_to_svg(&sets, &RenderStyle::default())?;
    Ok(match out {
        Some(path) => Output::File(path, text),
        None => Output::Stdout(text),
    })
}

fn dispatch(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Seq {
            morphism,
            length,
            coded,
        } => run_seq(&morphism, length, coded),
        Command::Sum {
            p,
            q,
            n,
            method,
            exact,
        } => run_sum(p, q, &n, method, exact),
        Command::Coquet { n } => Ok(Output::Stdout(format!("{}\n", coquet_sum(n)))),
        Command::Curve {
            q,
            gen,
            scale,
            construction,
            out,
        } => run_curve(q, gen, scale, construction, out),
        Command::Turtle {
            k,
            zero_letter,
            angle_degrees,
            ccw: _,
            cw,
            out,
        } => run_turtle_cmd(k, zero_letter, angle_degrees, cw, out),
        Command::Cantor { gen, out } => run_cantor(gen, out),
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Output::Stdout(text)) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_IO
            }
        },
        Ok(Output::File(path, text)) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                EXIT_IO
            }
        },
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
