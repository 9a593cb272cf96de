//! The `chalg` command line front end. All output is exact; exit codes are
//! 0 for success (or an identity that holds), 1 for a check that fails with a
//! witness, 2 for usage and input errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::chident::{ch_multilinear, ch_poly, polarize, sigma, t_multilinear};
use crate::error::{Error, Result};
use crate::findim::{
    ch_degree_with, check_cayley_hamilton, format_element, format_subspace, recover_weights, trace_kernel, ChCheck,
    TraceAlgebra,
};
use crate::freetrace::{parse, TracePoly, VarStyle};
use crate::genmat::{
    diagonal_model, discriminant_relation, generic_algebra_rank, printed_quartic, relation_profile, sica_checks,
    verify, RankStatus, Verdict, DEFAULT_SEED,
};
use crate::pseudochar::{check_pseudocharacter, pseudochar_kernel, CheckMode, FiniteGroup, PseudoCharTable};
use crate::rational::fmt_q;
use crate::strata::stratification_poset;

#[derive(Parser, Debug)]
#[command(name = "chalg", version, about = "Exact computations with trace identities and Cayley-Hamilton algebras")]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Spread tuple enumeration over threads; results do not depend on it.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Cayley-Hamilton polynomial CH_n(x).
    Chpoly {
        #[arg(long)]
        n: usize,
        /// Write the variable as x1 instead of x.
        #[arg(long)]
        indexed: bool,
    },
    /// Fully polarize a homogeneous one-variable polynomial.
    Polarize {
        /// An expression in x, or builtin:chN / builtin:sigmaN.
        poly: String,
    },
    /// Decide whether a polynomial vanishes on n x n matrices.
    Verify {
        /// An expression, or builtin:chN, builtin:mchN, builtin:TK, builtin:sigmaN.
        #[arg(long)]
        poly: String,
        #[arg(long)]
        size: usize,
        /// Random trials before the exact check.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Finite-dimensional algebras with trace read from JSON.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Pseudocharacters of finite groups.
    Pseudochar {
        #[command(subcommand)]
        action: PseudocharAction,
    },
    /// Stratum types, dimensions and the closure poset.
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        /// Print the closure poset instead of the list of types.
        #[arg(long, value_enum)]
        poset: Option<PosetFormat>,
        /// Include sheet, stratum and stabilizer dimensions.
        #[arg(long)]
        dims: bool,
    },
    /// One-variable diagonal models with multiplicities.
    Onevar {
        /// Multiplicities, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        mult: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraAction {
    /// Kernel of the trace form t(xy).
    Kernel {
        #[arg(long = "in")]
        input: String,
    },
    /// Cayley-Hamilton degree.
    Chdeg {
        #[arg(long = "in")]
        input: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Weights of a split semisimple algebra with blocks.
    Weights {
        #[arg(long = "in")]
        input: String,
    },
    /// Rank of the algebra generated by generic elements.
    Rank {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        degree_cap: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum PseudocharAction {
    /// Check the pseudocharacter axioms.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long = "char")]
        character: String,
        /// Check this many random tuples instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        /// Also print the kernel of the trace form and the quotient.
        #[arg(long)]
        kernel: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

/// Runs the command line with `args[0]` the program name.
pub fn run(args: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn builtin(spec: &str) -> Result<TracePoly> {
    let Some(name) = spec.strip_prefix("builtin:") else {
        return parse(spec);
    };
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (kind, num) = name.split_at(split);
    let k: usize = num.parse().map_err(|_| Error::OutOfRange(format!("unknown builtin {spec:?}")))?;
    match kind {
        "ch" => ch_poly(k),
        "mch" => ch_multilinear(k),
        "T" => t_multilinear(k),
        "sigma" => sigma(k),
        _ => Err(Error::OutOfRange(format!("unknown builtin {spec:?}"))),
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Json(format!("cannot read {path}: {e}")))
}

fn io(r: std::io::Result<()>) -> Result<()> {
    r.map_err(|e| Error::Shape(format!("write failed: {e}")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Chpoly { n, indexed } => {
            let style = if *indexed { VarStyle::Indexed } else { VarStyle::Single };
            io(writeln!(out, "{}", ch_poly(*n)?.render(style)))?;
            Ok(0)
        }
        Command::Polarize { poly } => {
            io(writeln!(out, "{}", polarize(&builtin(poly)?)?.render(VarStyle::Indexed)))?;
            Ok(0)
        }
        Command::Verify { poly, size, random } => {
            if *size == 0 {
                return Err(Error::OutOfRange("size must be positive".into()));
            }
            let p = builtin(poly)?;
            match verify(&p, *size, *random, cli.seed) {
                Verdict::Identity => {
                    io(writeln!(out, "identity on {size}x{size} matrices"))?;
                    Ok(0)
                }
                Verdict::NotIdentity(w) => {
                    io(writeln!(out, "not an identity on {size}x{size} matrices"))?;
                    if let Some(w) = w {
                        for (v, m) in &w.assignment {
                            io(writeln!(out, "x{v} = {m}"))?;
                        }
                        io(writeln!(out, "value = {}", w.value))?;
                    }
                    Ok(1)
                }
            }
        }
        Command::Algebra { action } => algebra(action, cli, out),
        Command::Pseudochar { action } => pseudochar(action, cli, out),
        Command::Strata { n, ell, poset, dims } => {
            let p = stratification_poset(*n, *ell)?;
            match poset {
                Some(PosetFormat::Dot) => io(write!(out, "{}", p.to_dot()))?,
                Some(PosetFormat::Json) => io(writeln!(out, "{}", p.to_json()))?,
                None => {
                    for (t, d) in p.nodes.iter().zip(&p.dims) {
                        if *dims {
                            io(writeln!(
                                out,
                                "{t}\tstratum {}\tsheet {}\tstabilizer {} (projective {})",
                                d.stratum, d.sheet, d.stabilizer, d.projective_stabilizer
                            ))?;
                        } else {
                            io(writeln!(out, "{t}"))?;
                        }
                    }
                    for e in p.codim_one_edges() {
                        io(writeln!(out, "codimension 1: {} -> {}", p.nodes[e.upper], p.nodes[e.lower]))?;
                    }
                }
            }
            let audit = p.audit();
            for f in &audit.failures {
                io(writeln!(out, "audit failure: {f}"))?;
            }
            Ok(if audit.ok() { 0 } else { 1 })
        }
        Command::Onevar { mult } => onevar(mult, out),
    }
}

fn algebra(action: &AlgebraAction, cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match action {
        AlgebraAction::Kernel { input } => {
            let a = TraceAlgebra::from_json(&read(input)?)?;
            let k = trace_kernel(&a);
            io(writeln!(out, "dim {}", k.dim()))?;
            io(writeln!(out, "{}", format_subspace(&a, &k)))?;
            Ok(0)
        }
        AlgebraAction::Chdeg { input, n_max } => {
            let a = TraceAlgebra::from_json(&read(input)?)?;
            match ch_degree_with(&a, *n_max, cli.parallel) {
                Some(n) => {
                    io(writeln!(out, "ch_degree {n}"))?;
                    Ok(0)
                }
                None => {
                    io(writeln!(out, "ch_degree none (n_max {n_max})"))?;
                    let t1 = a.trace_of_one();
                    match crate::rational::to_usize(&t1) {
                        Some(n) if n >= 1 && n <= *n_max => {
                            if let ChCheck::Fails { tuple, value } = check_cayley_hamilton(&a, n, cli.parallel) {
                                let names: Vec<&str> = tuple.iter().map(|&i| a.labels()[i].as_str()).collect();
                                io(writeln!(
                                    out,
                                    "CH_{n} fails at ({}) with value {}",
                                    names.join(", "),
                                    format_element(&a, &value)
                                ))?;
                            }
                        }
                        _ => io(writeln!(out, "t(1) = {} is not an integer in 1..={n_max}", fmt_q(&t1)))?,
                    }
                    Ok(1)
                }
            }
        }
        AlgebraAction::Weights { input } => {
            let a = TraceAlgebra::from_json(&read(input)?)?;
            match recover_weights(&a) {
                Ok(w) => {
                    io(writeln!(out, "{w}"))?;
                    io(writeln!(out, "n = {}", w.n()))?;
                    Ok(0)
                }
                Err(e @ Error::NotCayleyHamilton(_)) => {
                    io(writeln!(out, "{e}"))?;
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        AlgebraAction::Rank { input, ell, degree_cap } => {
            let a = TraceAlgebra::from_json(&read(input)?)?;
            let r = generic_algebra_rank(&a, *ell, *degree_cap, cli.seed)?;
            match r.status {
                RankStatus::Stabilized { degree } => {
                    io(writeln!(out, "rank {} (stabilized at word length {degree})", r.rank))?;
                    Ok(0)
                }
                RankStatus::Inconclusive { cap } => {
                    io(writeln!(out, "inconclusive: rank at least {} at word length cap {cap}", r.rank))?;
                    Ok(1)
                }
            }
        }
    }
}

fn pseudochar(action: &PseudocharAction, cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let PseudocharAction::Check { group, character, sample, kernel } = action;
    let g = FiniteGroup::from_json(&read(group)?)?;
    let p = PseudoCharTable::from_json(g, &read(character)?)?;
    let mode = match sample {
        Some(s) => CheckMode::Sampled { samples: *s, seed: cli.seed },
        None => CheckMode::Exhaustive,
    };
    let report = check_pseudocharacter(&p, mode, cli.parallel);
    io(writeln!(out, "{}", report.render()))?;
    if !report.passes() {
        return Ok(1);
    }
    if *kernel {
        let (k, quo) = pseudochar_kernel(&p)?;
        io(writeln!(out, "kernel dim {}", k.dim()))?;
        let deg = ch_degree_with(&quo, p.n + 1, cli.parallel).map_or("none".to_string(), |d| d.to_string());
        io(writeln!(out, "quotient dim {}, ch_degree {deg}", quo.dim()))?;
    }
    Ok(0)
}

fn onevar(mult: &[usize], out: &mut dyn Write) -> Result<i32> {
    let m = diagonal_model(mult)?;
    io(writeln!(out, "n = {}", m.n))?;
    for j in 1..=m.n {
        io(writeln!(out, "{} = {}", crate::genmat::alpha_symbol(j), m.alphas[j]))?;
    }
    match discriminant_relation(mult) {
        Ok(d) => io(writeln!(out, "relation: {d}"))?,
        Err(Error::NoForcedRelation) => io(writeln!(out, "relation: none (all multiplicities are 1)"))?,
        Err(e) => return Err(e),
    }
    if mult == [1, 2] || mult == [2, 1] {
        let r = sica_checks();
        let mark = |b: bool| if b { "holds" } else { "FAILS" };
        io(writeln!(out, "a^2 - 3b = (u-v)^2: {}", mark(r.identities[0])))?;
        io(writeln!(out, "ab - 9c = 2v(u-v)^2: {}", mark(r.identities[1])))?;
        io(writeln!(out, "9c + a^3 - 4ab = u(u-v)^2: {}", mark(r.identities[2])))?;
        io(writeln!(out, "3v^2 - 2av + b = 0: {}", mark(r.v_relation)))?;
        io(writeln!(out, "u^2 - 4au + a^2 - 4b = 0 (as printed): {}", mark(r.u_relation_printed)))?;
        io(writeln!(out, "3u^2 - 2au + 4b - a^2 = 0: {}", mark(r.u_relation_corrected)))?;
        io(writeln!(out, "((a^2-3b)X - (9c+a^3-4ab))((a^2-3b)X - (ab-9c)/2) = 0: {}", mark(r.min_poly_degree_two)))?;
        io(writeln!(out, "same with X^2 in the first factor = 0: {}", mark(r.min_poly_printed_square)))?;
        let pq = relation_profile(&printed_quartic());
        let weights: Vec<String> = pq.weights.iter().map(u32::to_string).collect();
        io(writeln!(
            out,
            "printed quartic {}: weights {{{}}}, vanishes: {}, consistent with degree 4 weight 6: {}",
            printed_quartic(),
            weights.join(", "),
            pq.vanishes,
            pq.is_consistent_with(4, 6)
        ))?;
    }
    Ok(0)
}
