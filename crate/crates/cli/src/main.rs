//! Command-line interface: exact computations in the Hecke-Clifford
//! superalgebra, its q-Schur superalgebra, and the tensor representation,
//! with deterministic human-readable tables or JSON output.

mod parse;

use clap::{Args, Parser, Subcommand, ValueEnum};

use parse::parse_element;
use qschur::coeff::{LaurentV, PolyQ, Ring};
use qschur::combinatorics::{
    double_coset_reps, enumerate_decorated, matrix_to_triple, min_coset_reps, triple_to_matrix,
    Composition, DecoratedMatrix, NonnegMatrix, Permutation,
};
use qschur::hecke_clifford::{HCElement, Involution};
use qschur::schur::{schur_dimension, SchurContext, SchurElement, DEFAULT_MAX_HC_DIM};
use qschur::tensor::{
    irreducible_census, TensorSpace, DEFAULT_MAX_COMMUTANT_BASIS, DEFAULT_MAX_TENSOR_DIM,
};
use qschur::verify::{hc_relation_checks, run_all};

const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_SIZE_GUARD: i32 = 3;

#[derive(Parser)]
#[command(
    name = "qschur",
    about = "Exact computations in the Hecke-Clifford superalgebra and its q-Schur superalgebra",
    long_about = "Exact computations in the Hecke-Clifford superalgebra and its q-Schur \
superalgebra.\n\nElement expressions use the grammar\n\n    expr   := ['-'] term (('+' | '-') term)*\n    \
term   := factor ('*' factor)*\n    factor := atom ['^' ['-'] digits]\n    atom   := 'T' digits | 'c' digits | 'q' | 'v' | digits | '(' expr ')'\n\n\
for example `T1*T2*c1 + (q-1)*c2`. Over the Laurent ring (--ring v), `v` is available and q = v^2.\n\n\
Exit codes: 0 success, 1 a verification check failed, 2 usage error, 3 a size guard refused the computation."
)]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hecke-Clifford algebra arithmetic.
    #[command(subcommand)]
    Hc(HcCmd),
    /// Coset representatives and the matrix <-> double-coset bijection.
    #[command(subcommand)]
    Coset(CosetCmd),
    /// The q-Schur superalgebra: dimensions, basis, products, verification.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// The tensor representation: relations, commutant, census.
    #[command(subcommand)]
    Tensor(TensorCmd),
    /// Run verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingChoice {
    /// Polynomials in q over the integers.
    Q,
    /// Laurent polynomials in v with q = v^2.
    V,
}

#[derive(Args)]
struct HcSize {
    /// Rank of the algebra (number of strands).
    #[arg(long)]
    r: usize,
    /// Raise the dimension guard (default: dimension 2^r r! at most 46080).
    #[arg(long)]
    max_dim: Option<u64>,
}

#[derive(Subcommand)]
enum HcCmd {
    /// Multiply two elements and print the normal form.
    Mul {
        #[command(flatten)]
        size: HcSize,
        /// Coefficient ring for the element expressions.
        #[arg(long, value_enum, default_value = "q")]
        ring: RingChoice,
        /// Left factor, e.g. 'T1*c1'.
        lhs: String,
        /// Right factor, e.g. 'T1*c2'.
        rhs: String,
    },
    /// Check every defining relation at the given rank.
    Relations {
        #[command(flatten)]
        size: HcSize,
    },
    /// Apply one of the (anti)automorphisms to an element.
    Involution {
        #[command(flatten)]
        size: HcSize,
        /// One of: phi, psi, tau, iota, gamma.
        #[arg(long)]
        tag: String,
        /// Coefficient ring for the element expression.
        #[arg(long, value_enum, default_value = "q")]
        ring: RingChoice,
        /// The element, e.g. 'T1*T2*c1 + (q-1)*c2'.
        elem: String,
    },
}

#[derive(Subcommand)]
enum CosetCmd {
    /// Minimal right-coset representatives of a Young subgroup, or minimal
    /// double-coset representatives when --mu is given.
    Reps {
        /// Composition, e.g. '2,1'.
        #[arg(long)]
        lambda: String,
        /// Second composition for double cosets, e.g. '1,2'.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Convert between a nonnegative matrix and its (lambda, d, mu) triple.
    ///
    /// Give --M for matrix -> triple, or --lambda, --d, and --mu for
    /// triple -> matrix. Both directions print the round trip.
    Matrix {
        /// Matrix rows separated by ';', entries by ',', e.g. '2,0;0,1'.
        #[arg(long = "M", value_name = "MATRIX")]
        entries: Option<String>,
        /// Row-margin composition, e.g. '2,1'.
        #[arg(long)]
        lambda: Option<String>,
        /// Minimal double-coset representative in one-line notation, e.g. '3,1,2'.
        #[arg(long)]
        d: Option<String>,
        /// Column-margin composition, e.g. '1,2'.
        #[arg(long)]
        mu: Option<String>,
    },
}

#[derive(Args)]
struct SchurSize {
    /// Number of rows/columns of the decorated matrices.
    #[arg(long)]
    n: usize,
    /// Total matrix sum (the rank of the underlying algebra).
    #[arg(long)]
    r: usize,
    /// Raise the dimension guards.
    #[arg(long)]
    max_dim: Option<u64>,
}

#[derive(Subcommand)]
enum SchurCmd {
    /// The dimension of the q-Schur superalgebra.
    Dim {
        #[command(flatten)]
        size: SchurSize,
    },
    /// List the decorated-matrix basis (optionally one margin block).
    Basis {
        #[command(flatten)]
        size: SchurSize,
        /// Restrict to row margin, e.g. '1,1' (requires --mu).
        #[arg(long)]
        lambda: Option<String>,
        /// Restrict to column margin, e.g. '2,0' (requires --lambda).
        #[arg(long)]
        mu: Option<String>,
    },
    /// Multiply two basis elements (by index) and expand in the basis.
    Mul {
        #[command(flatten)]
        size: SchurSize,
        /// Index of the left factor in the basis order.
        lhs: usize,
        /// Index of the right factor in the basis order.
        rhs: usize,
    },
    /// Check the basis against brute-force intersection dimensions.
    Verify {
        #[command(flatten)]
        size: SchurSize,
    },
}

#[derive(Subcommand)]
enum TensorCmd {
    /// Check every defining relation as an operator identity on the basis.
    Relations {
        /// Number of positive letters (the space has dimension (2n)^r).
        #[arg(long)]
        n: usize,
        /// Tensor power.
        #[arg(long)]
        r: usize,
        /// Raise the dimension guard (default: (2n)^r at most 4096).
        #[arg(long)]
        max_dim: Option<u64>,
    },
    /// Compute the commutant dimension of the action.
    Commutant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Raise the basis-size guards (default: (2n)^r at most 32 here).
        #[arg(long)]
        max_dim: Option<u64>,
    },
    /// The census of irreducible types: strict partitions with their labels.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run the full verification suite.
    All {
        /// Cap on the algebra rank used by the checks.
        #[arg(long, default_value_t = 8)]
        max_r: usize,
        /// Cap on the matrix size used by the checks.
        #[arg(long, default_value_t = 2)]
        max_n: usize,
    },
}

enum CmdError {
    Usage(String),
    SizeGuard(String),
    CheckFailed,
}

impl From<qschur::Error> for CmdError {
    fn from(err: qschur::Error) -> Self {
        match err {
            qschur::Error::SizeGuard(msg) => CmdError::SizeGuard(msg),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<(), CmdError>;

fn main() {
    // Restore the default SIGPIPE disposition so `qschur ... | head` exits
    // quietly instead of panicking on the closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Hc(cmd) => run_hc(cmd, cli.json),
        Cmd::Coset(cmd) => run_coset(cmd, cli.json),
        Cmd::Schur(cmd) => run_schur(cmd, cli.json),
        Cmd::Tensor(cmd) => run_tensor(cmd, cli.json),
        Cmd::Verify(cmd) => run_verify(cmd, cli.json),
    };
    match outcome {
        Ok(()) => {}
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(EXIT_USAGE);
        }
        Err(CmdError::SizeGuard(msg)) => {
            eprintln!("size guard: {msg}");
            std::process::exit(EXIT_SIZE_GUARD);
        }
        Err(CmdError::CheckFailed) => {
            std::process::exit(EXIT_CHECK_FAILED);
        }
    }
}

fn emit(json: bool, value: serde_json::Value, human: impl FnOnce()) {
    if json {
        // Compact single-line JSON; object keys are sorted, so identical
        // arguments always produce identical bytes.
        println!("{}", serde_json::to_string(&value).expect("serializable"));
    } else {
        human();
    }
}

fn parse_composition(text: &str) -> Result<Composition, CmdError> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Result<Vec<usize>, _> = trimmed.split(',').map(|p| p.trim().parse()).collect();
    match parts {
        Ok(parts) if !parts.is_empty() => Ok(Composition::new(parts)),
        _ => Err(CmdError::Usage(format!(
            "'{text}' is not a composition; expected comma-separated nonnegative integers like '2,1'"
        ))),
    }
}

fn parse_permutation(text: &str) -> Result<Permutation, CmdError> {
    let images: Result<Vec<usize>, _> = text.trim().split(',').map(|p| p.trim().parse()).collect();
    let images = images.map_err(|_| {
        CmdError::Usage(format!(
            "'{text}' is not a permutation; expected one-line notation like '3,1,2'"
        ))
    })?;
    Ok(Permutation::from_one_line(&images)?)
}

fn parse_matrix(text: &str) -> Result<NonnegMatrix, CmdError> {
    let mut rows = Vec::new();
    for row_text in text.trim().split(';') {
        let row: Result<Vec<usize>, _> = row_text.split(',').map(|p| p.trim().parse()).collect();
        match row {
            Ok(row) if !row.is_empty() => rows.push(row),
            _ => {
                return Err(CmdError::Usage(format!(
                    "'{text}' is not a matrix; expected rows like '2,0;0,1'"
                )))
            }
        }
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(CmdError::Usage("matrix rows must have equal length".to_string()));
    }
    Ok(NonnegMatrix::new(rows))
}

fn guard_hc_dimension(r: usize, max_dim: Option<u64>) -> Result<(), CmdError> {
    if r == 0 {
        return Err(CmdError::Usage("the rank r must be at least 1".to_string()));
    }
    let cap = max_dim.unwrap_or(DEFAULT_MAX_HC_DIM);
    let dim = (1..=r as u64)
        .try_fold(1u64 << r, |acc, k| acc.checked_mul(k))
        .filter(|&d| d <= cap);
    if dim.is_none() {
        return Err(CmdError::SizeGuard(format!(
            "algebra dimension guard: 2^r r! exceeds {cap} at r = {r}; raise with --max-dim"
        )));
    }
    Ok(())
}

/// The basis enumeration for (n, r) touches C(n^2 + r - 1, r) underlying
/// matrices; refuse counts that would not stay interactive.
fn guard_schur_enumeration(n: usize, r: usize, max_dim: Option<u64>) -> Result<(), CmdError> {
    if n == 0 || r == 0 {
        return Err(CmdError::Usage("both n and r must be at least 1".to_string()));
    }
    let cap = max_dim.unwrap_or(10_000_000);
    let nn = (n as u128) * (n as u128);
    let mut count: u128 = 1;
    for k in 1..=(r as u128) {
        count = count.saturating_mul(nn + k - 1) / k;
        if count > cap as u128 {
            return Err(CmdError::SizeGuard(format!(
                "basis enumeration guard: the decorated-matrix count exceeds {cap} at n = {n}, r = {r}; raise with --max-dim"
            )));
        }
    }
    Ok(())
}

fn ring_name(ring: RingChoice) -> &'static str {
    match ring {
        RingChoice::Q => "q",
        RingChoice::V => "v",
    }
}

fn run_hc(cmd: HcCmd, json: bool) -> CmdResult {
    match cmd {
        HcCmd::Mul { size, ring, lhs, rhs } => {
            guard_hc_dimension(size.r, size.max_dim)?;
            let (display, product_json) = match ring {
                RingChoice::Q => {
                    let a: HCElement<PolyQ> = parse_element(&lhs, size.r)
                        .map_err(|e| CmdError::Usage(e.render(&lhs)))?;
                    let b: HCElement<PolyQ> = parse_element(&rhs, size.r)
                        .map_err(|e| CmdError::Usage(e.render(&rhs)))?;
                    let p = a.mul(&b);
                    (p.to_string(), p.to_json())
                }
                RingChoice::V => {
                    let a: HCElement<LaurentV> = parse_element(&lhs, size.r)
                        .map_err(|e| CmdError::Usage(e.render(&lhs)))?;
                    let b: HCElement<LaurentV> = parse_element(&rhs, size.r)
                        .map_err(|e| CmdError::Usage(e.render(&rhs)))?;
                    let p = a.mul(&b);
                    (p.to_string(), p.to_json())
                }
            };
            emit(
                json,
                serde_json::json!({
                    "r": size.r,
                    "ring": ring_name(ring),
                    "product": product_json,
                }),
                || println!("{display}"),
            );
            Ok(())
        }
        HcCmd::Relations { size } => {
            guard_hc_dimension(size.r, size.max_dim)?;
            let checks = hc_relation_checks(size.r);
            let passed = checks.iter().all(|c| c.ok);
            emit(
                json,
                serde_json::json!({
                    "r": size.r,
                    "checks": checks
                        .iter()
                        .map(|c| serde_json::json!({"name": c.name, "ok": c.ok}))
                        .collect::<Vec<_>>(),
                    "passed": passed,
                }),
                || {
                    for c in &checks {
                        println!("{} {}", if c.ok { "ok  " } else { "FAIL" }, c.name);
                    }
                    println!(
                        "{} of {} relation identities hold",
                        checks.iter().filter(|c| c.ok).count(),
                        checks.len()
                    );
                },
            );
            if passed {
                Ok(())
            } else {
                Err(CmdError::CheckFailed)
            }
        }
        HcCmd::Involution { size, tag, ring, elem } => {
            guard_hc_dimension(size.r, size.max_dim)?;
            let involution = Involution::from_name(&tag).ok_or_else(|| {
                CmdError::Usage(format!(
                    "unknown involution '{tag}'; expected phi, psi, tau, iota, or gamma"
                ))
            })?;
            let (display, image_json) = match ring {
                RingChoice::Q => {
                    let a: HCElement<PolyQ> = parse_element(&elem, size.r)
                        .map_err(|e| CmdError::Usage(e.render(&elem)))?;
                    let img = a.involution(involution);
                    (img.to_string(), img.to_json())
                }
                RingChoice::V => {
                    let a: HCElement<LaurentV> = parse_element(&elem, size.r)
                        .map_err(|e| CmdError::Usage(e.render(&elem)))?;
                    let img = a.involution(involution);
                    (img.to_string(), img.to_json())
                }
            };
            emit(
                json,
                serde_json::json!({
                    "r": size.r,
                    "ring": ring_name(ring),
                    "tag": involution.name(),
                    "image": image_json,
                }),
                || println!("{display}"),
            );
            Ok(())
        }
    }
}

fn run_coset(cmd: CosetCmd, json: bool) -> CmdResult {
    match cmd {
        CosetCmd::Reps { lambda, mu } => {
            let lam = parse_composition(&lambda)?;
            guard_hc_dimension(lam.sum().max(1), None)?;
            let (kind, reps) = match mu {
                Some(mu_text) => {
                    let mu = parse_composition(&mu_text)?;
                    if mu.sum() != lam.sum() {
                        return Err(CmdError::Usage(format!(
                            "margins must have equal sums (got {} and {})",
                            lam.sum(),
                            mu.sum()
                        )));
                    }
                    ("double", double_coset_reps(&lam, &mu))
                }
                None => ("right", min_coset_reps(&lam)),
            };
            emit(
                json,
                serde_json::json!({
                    "kind": kind,
                    "lambda": lam.to_json(),
                    "count": reps.len(),
                    "reps": reps
                        .iter()
                        .map(|w| serde_json::json!({
                            "one_line": w.one_line().collect::<Vec<_>>(),
                            "length": w.length(),
                        }))
                        .collect::<Vec<_>>(),
                }),
                || {
                    for w in &reps {
                        let images: Vec<String> =
                            w.one_line().map(|x| x.to_string()).collect();
                        println!("[{}]  length {}", images.join(","), w.length());
                    }
                    println!("{} {kind}-coset representatives", reps.len());
                },
            );
            Ok(())
        }
        CosetCmd::Matrix { entries, lambda, d, mu } => match (entries, lambda, d, mu) {
            (Some(entries), None, None, None) => {
                let m = parse_matrix(&entries)?;
                guard_hc_dimension(m.sum().max(1), None)?;
                let (lam, rep, mu) = matrix_to_triple(&m);
                let back = triple_to_matrix(&lam, &rep, &mu)?;
                emit(
                    json,
                    serde_json::json!({
                        "matrix": m.to_json(),
                        "lambda": lam.to_json(),
                        "d": rep.to_json(),
                        "mu": mu.to_json(),
                        "roundtrip": back == m,
                    }),
                    || {
                        let images: Vec<String> =
                            rep.one_line().map(|x| x.to_string()).collect();
                        println!("lambda = {lam}");
                        println!("d      = [{}]  (length {})", images.join(","), rep.length());
                        println!("mu     = {mu}");
                        println!("round trip reproduces the matrix: {}", back == m);
                    },
                );
                Ok(())
            }
            (None, Some(lambda), Some(d), Some(mu)) => {
                let lam = parse_composition(&lambda)?;
                let mu = parse_composition(&mu)?;
                let rep = parse_permutation(&d)?;
                if lam.sum() != mu.sum() || rep.rank() != lam.sum() {
                    return Err(CmdError::Usage(format!(
                        "margins and the representative must agree in size (sums {} and {}, rank {})",
                        lam.sum(),
                        mu.sum(),
                        rep.rank()
                    )));
                }
                guard_hc_dimension(lam.sum().max(1), None)?;
                let m = triple_to_matrix(&lam, &rep, &mu)?;
                let (lam2, rep2, mu2) = matrix_to_triple(&m);
                let roundtrip = lam2 == lam && rep2 == rep && mu2 == mu;
                emit(
                    json,
                    serde_json::json!({
                        "lambda": lam.to_json(),
                        "d": rep.to_json(),
                        "mu": mu.to_json(),
                        "matrix": m.to_json(),
                        "roundtrip": roundtrip,
                    }),
                    || {
                        for i in 0..m.rows() {
                            let row: Vec<String> =
                                (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
                            println!("{}", row.join(" "));
                        }
                        println!("round trip reproduces the triple: {roundtrip}");
                    },
                );
                Ok(())
            }
            _ => Err(CmdError::Usage(
                "give either --entries, or all of --lambda, --d, and --mu".to_string(),
            )),
        },
    }
}

fn basis_line(index: usize, dm: &DecoratedMatrix) -> String {
    format!(
        "{index:4}: {dm}  ro={} co={} parity={}",
        dm.ro(),
        dm.co(),
        dm.parity()
    )
}

fn run_schur(cmd: SchurCmd, json: bool) -> CmdResult {
    match cmd {
        SchurCmd::Dim { size } => {
            guard_schur_enumeration(size.n, size.r, size.max_dim)?;
            let dim = schur_dimension(size.n, size.r);
            emit(
                json,
                serde_json::json!({"n": size.n, "r": size.r, "dim": dim}),
                || println!("dim = {dim}"),
            );
            Ok(())
        }
        SchurCmd::Basis { size, lambda, mu } => {
            guard_schur_enumeration(size.n, size.r, size.max_dim)?;
            let margins = match (lambda, mu) {
                (Some(l), Some(m)) => {
                    let lam = parse_composition(&l)?;
                    let mu = parse_composition(&m)?;
                    for c in [&lam, &mu] {
                        if c.num_parts() != size.n || c.sum() != size.r {
                            return Err(CmdError::Usage(format!(
                                "margin {c} must have {} parts summing to {}",
                                size.n, size.r
                            )));
                        }
                    }
                    Some((lam, mu))
                }
                (None, None) => None,
                _ => {
                    return Err(CmdError::Usage(
                        "--lambda and --mu must be given together".to_string(),
                    ))
                }
            };
            let all = enumerate_decorated(size.n, size.r);
            let listed: Vec<(usize, &DecoratedMatrix)> = all
                .iter()
                .enumerate()
                .filter(|(_, dm)| {
                    margins
                        .as_ref()
                        .map(|(lam, mu)| dm.ro() == *lam && dm.co() == *mu)
                        .unwrap_or(true)
                })
                .collect();
            emit(
                json,
                serde_json::json!({
                    "n": size.n,
                    "r": size.r,
                    "count": listed.len(),
                    "basis": listed
                        .iter()
                        .map(|(i, dm)| {
                            let mut obj = serde_json::Map::new();
                            obj.insert("index".to_string(), (*i).into());
                            obj.insert("matrix".to_string(), dm.to_json());
                            serde_json::Value::Object(obj)
                        })
                        .collect::<Vec<_>>(),
                }),
                || {
                    for (i, dm) in &listed {
                        println!("{}", basis_line(*i, dm));
                    }
                    println!("{} basis elements", listed.len());
                },
            );
            Ok(())
        }
        SchurCmd::Mul { size, lhs, rhs } => {
            guard_schur_enumeration(size.n, size.r, size.max_dim)?;
            let ctx = SchurContext::<PolyQ>::with_max_dim(
                size.n,
                size.r,
                size.max_dim.unwrap_or(DEFAULT_MAX_HC_DIM),
            )?;
            let dim = ctx.basis().len();
            for idx in [lhs, rhs] {
                if idx >= dim {
                    return Err(CmdError::Usage(format!(
                        "basis index {idx} is out of range (the basis has {dim} elements)"
                    )));
                }
            }
            let x = SchurElement::basis_vector(size.n, size.r, &ctx.basis()[lhs]);
            let y = SchurElement::basis_vector(size.n, size.r, &ctx.basis()[rhs]);
            let product = ctx.multiply(&x, &y)?;
            let index_of: std::collections::BTreeMap<&DecoratedMatrix, usize> =
                ctx.basis().iter().zip(0..).collect();
            let mut terms: Vec<(usize, &DecoratedMatrix, &PolyQ)> = product
                .terms()
                .map(|(dm, c)| (index_of[dm], dm, c))
                .collect();
            terms.sort_by_key(|(i, _, _)| *i);
            emit(
                json,
                serde_json::json!({
                    "n": size.n,
                    "r": size.r,
                    "lhs": lhs,
                    "rhs": rhs,
                    "terms": terms
                        .iter()
                        .map(|(i, dm, c)| serde_json::json!({
                            "index": i,
                            "matrix": dm.to_json(),
                            "coeff": c.to_json(),
                        }))
                        .collect::<Vec<_>>(),
                }),
                || {
                    if terms.is_empty() {
                        println!("0");
                    }
                    for (i, dm, c) in &terms {
                        println!("({c}) * {}", basis_line(*i, dm));
                    }
                },
            );
            Ok(())
        }
        SchurCmd::Verify { size } => {
            guard_schur_enumeration(size.n, size.r, size.max_dim)?;
            let ctx = SchurContext::<PolyQ>::with_max_dim(
                size.n,
                size.r,
                size.max_dim.unwrap_or(DEFAULT_MAX_HC_DIM),
            )?;
            let mut rows = Vec::new();
            let mut total = 0usize;
            let mut passed = true;
            for lam in ctx.margins().to_vec() {
                for mu in ctx.margins().to_vec() {
                    let count = ctx.block_matrices(&lam, &mu).len();
                    let brute = ctx.intersection_dim_bruteforce(&lam, &mu);
                    let rank = ctx.block_rank(&lam, &mu);
                    let ok = brute == count && rank == count;
                    passed &= ok;
                    total += count;
                    rows.push((lam.clone(), mu.clone(), count, brute, rank, ok));
                }
            }
            let dim = schur_dimension(size.n, size.r);
            passed &= total == dim;
            emit(
                json,
                serde_json::json!({
                    "n": size.n,
                    "r": size.r,
                    "dim": dim,
                    "block_total": total,
                    "passed": passed,
                    "blocks": rows
                        .iter()
                        .map(|(lam, mu, count, brute, rank, ok)| serde_json::json!({
                            "lambda": lam.to_json(),
                            "mu": mu.to_json(),
                            "count": count,
                            "brute_force_dim": brute,
                            "rank": rank,
                            "ok": ok,
                        }))
                        .collect::<Vec<_>>(),
                }),
                || {
                    for (lam, mu, count, brute, rank, ok) in &rows {
                        println!(
                            "{} {lam} x {mu}: count={count} brute={brute} rank={rank}",
                            if *ok { "ok  " } else { "FAIL" }
                        );
                    }
                    println!(
                        "blocks sum to {total}, algebra dimension {dim}: {}",
                        if passed { "ok" } else { "FAIL" }
                    );
                },
            );
            if passed {
                Ok(())
            } else {
                Err(CmdError::CheckFailed)
            }
        }
    }
}

fn run_tensor(cmd: TensorCmd, json: bool) -> CmdResult {
    match cmd {
        TensorCmd::Relations { n, r, max_dim } => {
            let sp = TensorSpace::with_max_dim(n, r, max_dim.unwrap_or(DEFAULT_MAX_TENSOR_DIM))?;
            let checks = sp.check_action_relations();
            let passed = checks.iter().all(|c| c.ok);
            emit(
                json,
                serde_json::json!({
                    "n": n,
                    "r": r,
                    "dim": sp.dim(),
                    "checks": checks
                        .iter()
                        .map(|c| serde_json::json!({"name": c.name, "ok": c.ok}))
                        .collect::<Vec<_>>(),
                    "passed": passed,
                }),
                || {
                    for c in &checks {
                        println!("{} {}", if c.ok { "ok  " } else { "FAIL" }, c.name);
                    }
                    println!(
                        "{} of {} operator identities hold on the {}-dimensional space",
                        checks.iter().filter(|c| c.ok).count(),
                        checks.len(),
                        sp.dim()
                    );
                },
            );
            if passed {
                Ok(())
            } else {
                Err(CmdError::CheckFailed)
            }
        }
        TensorCmd::Commutant { n, r, max_dim } => {
            let space_cap = max_dim.unwrap_or(DEFAULT_MAX_TENSOR_DIM);
            let basis_cap = max_dim
                .map(|d| d as usize)
                .unwrap_or(DEFAULT_MAX_COMMUTANT_BASIS);
            let sp = TensorSpace::with_max_dim(n, r, space_cap)?;
            let commutant = sp.commutant_dim_with_max(basis_cap)?;
            let expected = schur_dimension(n, r);
            let matches = commutant == expected;
            emit(
                json,
                serde_json::json!({
                    "n": n,
                    "r": r,
                    "commutant_dim": commutant,
                    "schur_dim": expected,
                    "match": matches,
                }),
                || {
                    println!("commutant dimension          = {commutant}");
                    println!("endomorphism algebra dimension = {expected}");
                    println!("equal: {matches}");
                },
            );
            if matches {
                Ok(())
            } else {
                Err(CmdError::CheckFailed)
            }
        }
        TensorCmd::Census { n, r } => {
            if n == 0 || r == 0 {
                return Err(CmdError::Usage("both n and r must be at least 1".to_string()));
            }
            let census = irreducible_census(n, r);
            emit(
                json,
                serde_json::json!({
                    "n": n,
                    "r": r,
                    "count": census.len(),
                    "census": census.iter().map(|sp| sp.to_json()).collect::<Vec<_>>(),
                }),
                || {
                    for sp in &census {
                        println!("{sp}  delta={}  type {}", sp.delta(), sp.irr_type());
                    }
                    println!("{} irreducible types", census.len());
                },
            );
            Ok(())
        }
    }
}

fn run_verify(cmd: VerifyCmd, json: bool) -> CmdResult {
    match cmd {
        VerifyCmd::All { max_r, max_n } => {
            let reports = run_all(max_r, max_n, None);
            let passed = reports.iter().all(|rep| rep.passed);
            emit(
                json,
                serde_json::json!({
                    "max_r": max_r,
                    "max_n": max_n,
                    "passed": passed,
                    "reports": reports.iter().map(|rep| rep.to_json()).collect::<Vec<_>>(),
                }),
                || {
                    for rep in &reports {
                        println!(
                            "{} {:2}. {} — {}",
                            if rep.passed { "PASS" } else { "FAIL" },
                            rep.index,
                            rep.name,
                            rep.details
                        );
                    }
                    println!(
                        "{} of {} checks passed",
                        reports.iter().filter(|rep| rep.passed).count(),
                        reports.len()
                    );
                },
            );
            if passed {
                Ok(())
            } else {
                Err(CmdError::CheckFailed)
            }
        }
    }
}
