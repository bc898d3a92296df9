use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use b3ring_core::cox::{enumerate_sections, CoxMonomial};
use b3ring_core::ncpoly::{parse, Alphabet, NcPoly};
use b3ring_core::ore::{from_xy, hilbert_coeffs, normal_form, pbw_basis};
use b3ring_core::picard::{chi, divisor_d, h0_closed, is_ample, DivisorClass, ThetaMatrix, K};
use b3ring_core::thcr::{basis_b, phi_poly, twisted_mul};
use b3ring_core::verify::{run_all_with, CheckRegistry, VerifyContext, DEFAULT_MAX_DEGREE, MIN_MAX_DEGREE};

#[derive(Parser)]
#[command(name = "b3ring", version, about = "Exact computations in R = C<x,y>/(x^5 - yxy, y^2 - xyx) and its twisted coordinate ring B")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    #[value(name = "R")]
    R,
    #[value(name = "B")]
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputAlphabet {
    Xy,
    Wzx,
}

impl InputAlphabet {
    fn alphabet(self) -> Alphabet {
        match self {
            InputAlphabet::Xy => Alphabet::Xy,
            InputAlphabet::Wzx => Alphabet::Wzx,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Theta,
}

#[derive(Subcommand)]
enum Command {
    /// PBW normal form of an expression, written in w, z, x.
    Nf {
        expr: String,
        #[arg(long, value_enum, default_value_t = InputAlphabet::Xy)]
        alphabet: InputAlphabet,
    },
    /// The divisor D_n with chi, h0 and ampleness of D_n - K.
    Divisor {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// h0 of the class aH - cE1 - bE2 - dE3, by counting Cox monomials.
    H0 {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Monomial basis of R_n (PBW) or B_n (Cox monomials).
    Basis {
        #[arg(long, value_enum)]
        ring: Ring,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Product of two expressions; in B the inputs are words in x, y mapped by Phi.
    Mul {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Ring::R)]
        ring: Ring,
        #[arg(long, value_enum, default_value_t = InputAlphabet::Xy)]
        alphabet: InputAlphabet,
    },
    /// dim R_n for n = 0..N.
    Hilbert {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE as i64, allow_negative_numbers = true)]
        max_degree: i64,
        /// Run only the named check (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Record per-check timings (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

enum Failure {
    Usage(String),
}

struct Output {
    command: &'static str,
    inputs: Value,
    text: String,
    result: Value,
}

fn non_negative(n: i64, what: &str) -> Result<usize, Failure> {
    usize::try_from(n).map_err(|_| Failure::Usage(format!("{what} must be non-negative, got {n}")))
}

fn parse_expr(text: &str, alphabet: Alphabet) -> Result<NcPoly, Failure> {
    parse(text, alphabet).map_err(|e| Failure::Usage(format!("cannot parse `{text}`: {e}")))
}

fn to_pbw(p: &NcPoly) -> Result<NcPoly, Failure> {
    let r = if p.alphabet() == Alphabet::Xy { from_xy(p) } else { normal_form(p) };
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn nf(expr: &str, alphabet: InputAlphabet) -> Result<Output, Failure> {
    let p = to_pbw(&parse_expr(expr, alphabet.alphabet())?)?;
    let text = p.to_string();
    Ok(Output {
        command: "nf",
        inputs: json!({ "expr": expr, "alphabet": alphabet.alphabet().to_string() }),
        result: json!(text),
        text,
    })
}

fn divisor(n: i64) -> Result<Output, Failure> {
    let n = non_negative(n, "n")?;
    let d = divisor_d(n);
    let euler = chi(d).map_err(|e| Failure::Usage(e.to_string()))?;
    let closed = h0_closed(n);
    let counted = enumerate_sections(d).dim() as i64;
    let ample = is_ample(d - K);
    let h0 = if closed == counted { closed.to_string() } else { format!("{closed} (counted {counted})") };
    Ok(Output {
        command: "divisor",
        inputs: json!({ "n": n }),
        text: format!("{d} chi={euler} h0={h0} ample(D-K)={ample}"),
        result: json!({
            "divisor": d.to_array(),
            "chi": euler,
            "h0_closed": closed,
            "h0_counted": counted,
            "ample_d_minus_k": ample,
        }),
    })
}

fn h0(a: i64, b: i64, c: i64, d: i64) -> Result<Output, Failure> {
    let class = DivisorClass { a, b, c, d };
    let h0 = enumerate_sections(class).dim();
    let euler = chi(class).ok();
    let mut text = format!("{class} h0={h0}");
    if let Some(e) = euler {
        text.push_str(&format!(" chi={e}"));
    }
    Ok(Output {
        command: "h0",
        inputs: json!({ "divisor": class.to_array() }),
        text,
        result: json!({ "h0": h0, "chi": euler }),
    })
}

fn basis(ring: Ring, n: i64) -> Result<Output, Failure> {
    let n = non_negative(n, "n")?;
    let items: Vec<String> = match ring {
        Ring::R => pbw_basis(n as u32).iter().map(|m| m.to_string()).collect(),
        Ring::B => basis_b(n).basis.iter().map(CoxMonomial::to_string).collect(),
    };
    Ok(Output {
        command: "basis",
        inputs: json!({ "ring": ring_name(ring), "n": n }),
        text: items.join(", "),
        result: json!(items),
    })
}

fn ring_name(ring: Ring) -> &'static str {
    match ring {
        Ring::R => "R",
        Ring::B => "B",
    }
}

fn mul(a: &str, b: &str, ring: Ring, alphabet: InputAlphabet) -> Result<Output, Failure> {
    let text = match ring {
        Ring::R => {
            let (p, q) = (parse_expr(a, alphabet.alphabet())?, parse_expr(b, alphabet.alphabet())?);
            let product = p.mul(&q).map_err(|e| Failure::Usage(e.to_string()))?;
            to_pbw(&product)?.to_string()
        }
        Ring::B => {
            let section = |s: &str| -> Result<_, Failure> {
                phi_poly(&parse_expr(s, Alphabet::Xy)?).map_err(|e| Failure::Usage(format!("`{s}`: {e}")))
            };
            let product = twisted_mul(&section(a)?, &section(b)?).map_err(|e| Failure::Usage(e.to_string()))?;
            product.poly().to_string()
        }
    };
    Ok(Output {
        command: "mul",
        inputs: json!({ "a": a, "b": b, "ring": ring_name(ring), "alphabet": alphabet.alphabet().to_string() }),
        result: json!(text),
        text,
    })
}

fn hilbert(n: i64) -> Result<Output, Failure> {
    let n = non_negative(n, "N")?;
    let coeffs = hilbert_coeffs(n as u32);
    Ok(Output {
        command: "hilbert",
        inputs: json!({ "n": n }),
        text: coeffs.iter().map(usize::to_string).collect::<Vec<_>>().join(", "),
        result: json!(coeffs),
    })
}

fn verify(max_degree: i64, checks: &[String], timing: bool, fault: Option<Fault>) -> Result<(Output, bool), Failure> {
    let n = non_negative(max_degree, "--max-degree")?;
    if n < MIN_MAX_DEGREE {
        return Err(Failure::Usage(format!("--max-degree must be at least {MIN_MAX_DEGREE}, got {n}")));
    }
    let mut ctx = VerifyContext::new(n);
    ctx.record_timing = timing;
    if let Some(Fault::Theta) = fault {
        let mut theta = ThetaMatrix::standard();
        theta.0[0][0] += 1;
        ctx = ctx.with_theta(theta);
    }
    let report = if checks.is_empty() {
        run_all_with(&ctx)
    } else {
        CheckRegistry::default().run(&ctx, checks).map_err(Failure::Usage)?
    };
    let ok = report.all_passed();
    let output = Output {
        command: "verify",
        inputs: json!({ "max_degree": n, "checks": checks }),
        text: report.to_string().trim_end().to_string(),
        result: serde_json::to_value(&report).expect("report serializes"),
    };
    Ok((output, ok))
}

fn run(cli: &Cli) -> Result<(Output, bool), Failure> {
    let ok = |o| Ok((o, true));
    match &cli.command {
        Command::Nf { expr, alphabet } => ok(nf(expr, *alphabet)?),
        Command::Divisor { n } => ok(divisor(*n)?),
        Command::H0 { a, b, c, d } => ok(h0(*a, *b, *c, *d)?),
        Command::Basis { ring, n } => ok(basis(*ring, *n)?),
        Command::Mul { a, b, ring, alphabet } => ok(mul(a, b, *ring, *alphabet)?),
        Command::Hilbert { n } => ok(hilbert(*n)?),
        Command::Verify { max_degree, checks, timing, inject_fault } => {
            verify(*max_degree, checks, *timing, *inject_fault)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => {
                    let doc = json!({ "command": out.command, "inputs": out.inputs, "result": out.result });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
