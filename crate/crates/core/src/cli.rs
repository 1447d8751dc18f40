//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit code and captured output,
//! so the binary is a thin wrapper and every command is testable in-process.
//! Exit codes: 0 success, 1 mathematical negative, 2 input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::Alphabet;
use crate::bracket::{check_identity, BracketExpr, CheckMode};
use crate::envelope::{basis_up_to, gk_estimate, Envelope, MetabelianLieAlgebra, Strategy};
use crate::error::Error;
use crate::jordan::{bn_basis, cohn_witness, identity_suite, jordan_express, low_degree_basis, to_bn, JordanExpr};
use crate::lie::{is_lie, lie_express, lie_span_oracle};
use crate::parse::{parse_expr, parse_template};
use crate::perm::{dimension, enumerate_basis, Multidegree, PermMonomial, PermPolynomial};
use crate::rational::{format_rational, int};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "permalg", version, about = "Exact computations in free perm algebras and perm envelopes")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Default output mode.
    #[arg(long, global = true, value_enum, env = "PERMALG_OUTPUT", default_value = "text")]
    output: OutputMode,
    /// Render dotted letters with a combining dot.
    #[arg(long, global = true)]
    unicode: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form in the free perm algebra.
    Normalize(ExprArg),
    /// Expansion into perm monomials, split by multidegree.
    Expand(ExprArg),
    /// Decide whether an element is a Lie element.
    IsLie(ExprArg),
    /// Write a Lie element as left-normed commutators.
    LieExpress(ExprArg),
    /// Write an element as anticommutator trees.
    JordanExpress(ExprArg),
    /// Check an identity template such as "[[a,b],[c,d]] = 0".
    CheckIdentity {
        #[arg(long, allow_hyphen_values = true)]
        template: String,
        /// Substitute sums of fresh generators for repeated slots.
        #[arg(long)]
        polarized: bool,
    },
    /// Run the built-in identity suite.
    Identities,
    /// Dimension of a homogeneous component.
    Dims {
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        deg: usize,
        /// Comma-separated exponents, e.g. "2,1".
        #[arg(long)]
        multidegree: Option<String>,
        /// Also list the basis monomials.
        #[arg(long)]
        list: bool,
    },
    /// The f-element basis of a homogeneous component of J(X).
    Bn {
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        deg: usize,
    },
    /// Rewrite a left-normed Jordan word over the f-element basis.
    ToBn {
        word: String,
    },
    /// The exceptional quotient of SJ({x,y}).
    CohnWitness,
    /// Enveloping perm algebras of metabelian Lie algebras.
    Envelope {
        #[command(subcommand)]
        action: EnvelopeAction,
    },
    /// Basis growth and its exponent.
    Gk {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Compare the Lie criterion with the commutator span on random elements.
    VerifyLie {
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        deg: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
struct ExprArg {
    #[arg(allow_hyphen_values = true)]
    expr: String,
}

#[derive(Debug, Subcommand)]
enum EnvelopeAction {
    /// Basis split, rewriting rules and normal-form basis.
    Build {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        deg: usize,
    },
    /// Normal form of a dotted expression such as "d(e2)*e1".
    Nf {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_enum, default_value = "leftmost")]
        strategy: StrategyArg,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Validation, compositions and the embedding check.
    Check {
        #[arg(long)]
        algebra: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Rightmost,
}

/// Exit code and the text written to each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    code: i32,
    text: String,
    json: Value,
}

impl Reply {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Self { code: 0, text: text.into(), json }
    }

    fn negative(text: impl Into<String>, json: Value) -> Self {
        Self { code: 1, text: text.into(), json }
    }

    fn verdict(ok: bool, text: impl Into<String>, json: Value) -> Self {
        Self { code: if ok { 0 } else { 1 }, text: text.into(), json }
    }
}

type CmdResult = std::result::Result<Reply, String>;

fn input(e: Error) -> String {
    e.to_string()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json_mode = cli.json || cli.output == OutputMode::Json;
    match dispatch(&cli) {
        Ok(r) => {
            let stdout = if json_mode {
                let mut s = serde_json::to_string_pretty(&r.json).expect("serializable report");
                s.push('\n');
                s
            } else {
                let mut s = r.text;
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            };
            Outcome { code: r.code, stdout, stderr: String::new() }
        }
        Err(msg) => {
            let stdout = if json_mode {
                let mut s = serde_json::to_string_pretty(&json!({ "error": msg })).expect("serializable");
                s.push('\n');
                s
            } else {
                String::new()
            };
            Outcome { code: 2, stdout, stderr: format!("error: {msg}\n") }
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Normalize(a) => normalize(&a.expr),
        Command::Expand(a) => expand(&a.expr),
        Command::IsLie(a) => lie_command(&a.expr, true),
        Command::LieExpress(a) => lie_command(&a.expr, false),
        Command::JordanExpress(a) => jordan_command(&a.expr),
        Command::CheckIdentity { template, polarized } => identity_command(template, *polarized),
        Command::Identities => identities_command(),
        Command::Dims { gens, deg, multidegree, list } => dims(*gens, *deg, multidegree.as_deref(), *list),
        Command::Bn { gens, deg } => bn(*gens, *deg),
        Command::ToBn { word } => to_bn_command(word),
        Command::CohnWitness => cohn(),
        Command::Envelope { action } => envelope_command(action, cli.unicode),
        Command::Gk { algebra, max_deg } => gk(algebra, *max_deg),
        Command::VerifyLie { gens, deg, samples } => verify_lie(*gens, *deg, *samples, cli.seed),
    }
}

fn parsed_poly(text: &str) -> std::result::Result<(PermPolynomial, Alphabet, BracketExpr), String> {
    let p = parse_expr(text).map_err(input)?;
    let poly = p.expr.expand().map_err(input)?;
    Ok((poly, p.alphabet, p.expr))
}

fn term_list(p: &PermPolynomial, names: &Alphabet) -> Value {
    let mut terms: Vec<_> = p.terms().collect();
    terms.reverse();
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|(m, c)| json!({ "monomial": m.render(names), "coefficient": format_rational(c) }))
        .collect();
    Value::Array(terms)
}

fn normalize(text: &str) -> CmdResult {
    let (p, names, _) = parsed_poly(text)?;
    let s = p.render(&names);
    Ok(Reply::ok(&s, json!({ "input": text, "normal_form": s, "terms": term_list(&p, &names) })))
}

fn expand(text: &str) -> CmdResult {
    let (p, names, expr) = parsed_poly(text)?;
    let shown = expr.render(&names);
    let components: Vec<Value> = p
        .components()
        .iter()
        .rev()
        .map(|(md, c)| json!({ "multidegree": md.exponents(), "polynomial": c.render(&names) }))
        .collect();
    let s = p.render(&names);
    Ok(Reply::ok(
        format!("{shown} = {s}"),
        json!({ "input": text, "expression": shown, "expansion": s, "components": components }),
    ))
}

fn lie_command(text: &str, decide: bool) -> CmdResult {
    let (p, names, _) = parsed_poly(text)?;
    match lie_express(&p) {
        Ok(c) => {
            let s = c.render(&names);
            let text = if decide { format!("Lie element: {s}") } else { s.clone() };
            Ok(Reply::ok(text, json!({ "input": text_of(&p, &names), "is_lie": true, "combination": s })))
        }
        Err(Error::NotLie(defect)) => {
            let d = defect.render(&names);
            Ok(Reply::negative(
                format!("not a Lie element; f - D(head f) = {d}"),
                json!({ "input": text_of(&p, &names), "is_lie": false, "defect": d }),
            ))
        }
        Err(e) => Err(input(e)),
    }
}

fn text_of(p: &PermPolynomial, names: &Alphabet) -> String {
    p.render(names)
}

fn jordan_command(text: &str) -> CmdResult {
    let (p, names, _) = parsed_poly(text)?;
    match jordan_express(&p) {
        Ok(j) => {
            let s = j.render(&names);
            Ok(Reply::ok(&s, json!({ "input": text_of(&p, &names), "is_jordan": true, "combination": s })))
        }
        Err(Error::NotJordan(c)) => {
            let d = c.render(&names);
            Ok(Reply::negative(
                format!("not a Jordan element; component outside SJ: {d}"),
                json!({ "input": text_of(&p, &names), "is_jordan": false, "component": d }),
            ))
        }
        Err(e) => Err(input(e)),
    }
}

fn identity_command(template: &str, polarized: bool) -> CmdResult {
    let t = parse_template(template).map_err(input)?;
    let mode = if polarized { CheckMode::Polarized } else { CheckMode::Multilinear };
    let v = check_identity(&t, mode).map_err(input)?;
    let subst: Vec<String> = v.substitution.iter().map(|(s, p)| format!("{s} = {p}")).collect();
    let text = if v.holds {
        format!("holds: {template}")
    } else {
        format!("fails: {template}\nsubstitution: {}\nresidue: {}", subst.join(", "), v.residue)
    };
    Ok(Reply::verdict(v.holds, text, to_value(&v)))
}

fn identities_command() -> CmdResult {
    let r = identity_suite();
    let mut lines: Vec<String> = r
        .identities
        .iter()
        .map(|v| format!("{} {}", if v.holds { "holds" } else { "FAILS" }, v.name))
        .collect();
    for e in &r.expansions {
        lines.push(format!("{} {} = {}", if e.matches { "matches" } else { "DIFFERS" }, e.name, e.actual));
    }
    Ok(Reply::verdict(r.all_hold, lines.join("\n"), to_value(&r)))
}

fn parse_multidegree(text: &str) -> std::result::Result<Multidegree, String> {
    let parts: std::result::Result<Vec<u32>, _> = text.split(',').map(|s| s.trim().parse::<u32>()).collect();
    parts.map(Multidegree::new).map_err(|_| format!("invalid multidegree '{text}'"))
}

fn dims(gens: usize, deg: usize, multidegree: Option<&str>, list: bool) -> CmdResult {
    if gens == 0 || deg == 0 {
        return Err("gens and deg must be positive".into());
    }
    let md = multidegree.map(parse_multidegree).transpose()?;
    let basis = if list || md.is_some() { Some(enumerate_basis(gens, deg, md.as_ref()).map_err(input)?) } else { None };
    let dim = match (&md, &basis) {
        (Some(_), Some(b)) => b.len() as u128,
        _ => dimension(gens, deg),
    };
    let names = Alphabet::indexed(gens);
    let shown: Option<Vec<String>> = basis.filter(|_| list).map(|b| b.iter().map(|m| m.render(&names)).collect());
    let mut text = match &md {
        Some(m) => format!("dim P_{m}({gens} generators) = {dim}"),
        None => format!("dim P_{deg}({gens} generators) = {dim}"),
    };
    if let Some(b) = &shown {
        text.push('\n');
        text.push_str(&b.join("\n"));
    }
    let mut j = json!({ "gens": gens, "degree": deg, "dimension": dim });
    if let Some(m) = &md {
        j["multidegree"] = json!(m.exponents());
    }
    if let Some(b) = shown {
        j["basis"] = json!(b);
    }
    Ok(Reply::ok(text, j))
}

fn bn(gens: usize, deg: usize) -> CmdResult {
    if gens == 0 || deg == 0 {
        return Err("gens and deg must be positive".into());
    }
    let names = Alphabet::indexed(gens);
    let elements: Vec<String> = if deg < 3 {
        low_degree_basis(gens, deg).map_err(input)?.iter().map(|e| e.render(&names)).collect()
    } else {
        bn_basis(gens, deg).map_err(input)?.iter().map(|f| f.render(&names)).collect()
    };
    let dim = dimension(gens, deg);
    let text = format!("|B_{deg}| = {} (dim = {dim})\n{}", elements.len(), elements.join("\n"));
    Ok(Reply::ok(text, json!({ "gens": gens, "degree": deg, "count": elements.len(), "dimension": dim, "elements": elements })))
}

fn word_of(e: &BracketExpr, out: &mut Vec<u32>) -> bool {
    match e {
        BracketExpr::Gen(i) => {
            out.push(*i);
            true
        }
        BracketExpr::Assoc(a, b) => word_of(a, out) && word_of(b, out),
        _ => false,
    }
}

fn to_bn_command(text: &str) -> CmdResult {
    let p = parse_expr(text).map_err(input)?;
    let mut word = Vec::new();
    if !word_of(&p.expr, &mut word) {
        return Err(format!("'{text}' is not a word over generators"));
    }
    let c = to_bn(&word).map_err(input)?;
    let j = JordanExpr::left_normed(&word).expect("nonempty word");
    let verified = c.expand() == j.expand();
    let w: String = word.iter().map(|&i| p.alphabet.name(i)).collect();
    let s = c.render(&p.alphabet);
    Ok(Reply::verdict(verified, format!("{w} = {s}"), json!({ "word": w, "combination": s, "verified": verified })))
}

fn cohn() -> CmdResult {
    let r = cohn_witness().map_err(input)?;
    let text = format!(
        "ideal I of SJ(x,y) generated by:\n  {}\nnormalization: {}\nslice {}:\n  I-slice dim {} spanned by {}\n  J-slice dim {} spanned by {}\n  SJ-slice dim {}\nb = {}\n  b in I: {}\n  b in J: {}\n  b in SJ: {}\nexceptional quotient: {}",
        r.generators.join("\n  "),
        r.normalization,
        r.slice,
        r.i_slice_dim,
        r.i_slice_basis.join(", "),
        r.j_slice_dim,
        r.j_slice_basis.join(", "),
        r.sj_slice_dim,
        r.b,
        r.b_in_i,
        r.b_in_j,
        r.b_in_sj,
        r.exceptional
    );
    Ok(Reply::verdict(r.exceptional, text, to_value(&r)))
}

fn load_algebra(path: &PathBuf) -> std::result::Result<MetabelianLieAlgebra, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    MetabelianLieAlgebra::from_json(&text).map_err(input)
}

fn load_envelope(path: &PathBuf) -> std::result::Result<Envelope, String> {
    Envelope::new(load_algebra(path)?).map_err(input)
}

fn envelope_command(action: &EnvelopeAction, unicode: bool) -> CmdResult {
    match action {
        EnvelopeAction::Build { algebra, deg } => {
            let env = load_envelope(algebra)?;
            let split = env.split_summary();
            let rules: Vec<(String, String)> = env
                .relations()
                .iter()
                .map(|r| (env.render_monomial(&r.redex, unicode), env.render(&r.reduct, unicode)))
                .collect();
            let basis = basis_up_to(&env, *deg).map_err(input)?;
            let levels: Vec<Vec<String>> =
                basis.iter().map(|l| l.iter().map(|m| env.render_monomial(m, unicode)).collect()).collect();
            let mut text = format!("Y = {{{}}}\nZ = {{{}}}\n", split.y.join(", "), split.z.join(", "));
            for d in &split.definitions {
                text.push_str(&format!("where {d}\n"));
            }
            text.push_str("relations:\n");
            for (l, r) in &rules {
                text.push_str(&format!("  {l} -> {r}\n"));
            }
            text.push_str("basis:\n");
            for (d, l) in levels.iter().enumerate() {
                text.push_str(&format!("  degree {} ({}): {}\n", d + 1, l.len(), l.join(", ")));
            }
            let j = json!({
                "dim": env.dim(),
                "split": to_value(&split),
                "relations": rules.iter().map(|(l, r)| json!({ "redex": l, "reduct": r })).collect::<Vec<_>>(),
                "basis": levels.iter().enumerate().map(|(d, l)| json!({ "degree": d + 1, "count": l.len(), "monomials": l })).collect::<Vec<_>>(),
            });
            Ok(Reply::ok(text, j))
        }
        EnvelopeAction::Nf { algebra, strategy, expr } => {
            let env = load_envelope(algebra)?;
            let p = env.parse(expr).map_err(input)?;
            let strategy = match strategy {
                StrategyArg::Leftmost => Strategy::Leftmost,
                StrategyArg::Rightmost => Strategy::Rightmost,
            };
            let nf = env.normal_form(&p, strategy);
            let s = env.render(&nf, unicode);
            Ok(Reply::ok(&s, json!({ "input": expr, "strategy": to_value(&strategy), "normal_form": s })))
        }
        EnvelopeAction::Check { algebra } => {
            let alg = load_algebra(algebra)?;
            let v = alg.validate();
            if !v.valid {
                let mut text = String::from("invalid algebra\n");
                for t in &v.jacobi_violations {
                    text.push_str(&format!("  Jacobi fails on {t:?}\n"));
                }
                for t in &v.metabelian_violations {
                    text.push_str(&format!("  metabelian identity fails on {t:?}\n"));
                }
                return Ok(Reply::negative(text, json!({ "validation": to_value(&v) })));
            }
            let env = Envelope::new(alg).map_err(input)?;
            let comp = env.check_compositions();
            let embed = env.embed_check();
            let mut text = format!("valid metabelian Lie algebra of dimension {}\n", env.dim());
            text.push_str(&format!(
                "compositions: {} checked, {}\n",
                comp.compositions.len(),
                if comp.all_trivial { "all trivial" } else { "NOT all trivial" }
            ));
            for c in comp.compositions.iter().filter(|c| !c.trivial) {
                text.push_str(&format!("  {}: {} vs {}\n", c.ambiguity, c.first, c.second));
            }
            text.push_str(&format!("embedding: {}\n", if embed.passes { "passes" } else { "FAILS" }));
            for p in &embed.pairs {
                text.push_str(&format!(
                    "  d({a})*{b} - d({b})*{a} -> {} (expected {})\n",
                    p.normal_form,
                    p.expected,
                    a = p.pair[0],
                    b = p.pair[1]
                ));
            }
            let ok = comp.all_trivial && embed.passes;
            Ok(Reply::verdict(
                ok,
                text,
                json!({ "validation": to_value(&v), "compositions": to_value(&comp), "embedding": to_value(&embed) }),
            ))
        }
    }
}

fn gk(path: &PathBuf, max_deg: usize) -> CmdResult {
    let env = load_envelope(path)?;
    let r = gk_estimate(&env, max_deg).map_err(input)?;
    let mut text = String::from("degree  count  cumulative\n");
    for (d, (c, n)) in r.counts.iter().zip(&r.cumulative).enumerate() {
        text.push_str(&format!("{:>6}  {c:>5}  {n:>10}\n", d + 1));
    }
    text.push_str(&format!(
        "growth exponent over degrees {}..{}: {:.4} (log-log slope {:.4})",
        r.fit_range[0], r.fit_range[1], r.slope, r.raw_slope
    ));
    Ok(Reply::ok(text, to_value(&r)))
}

fn random_coeff(rng: &mut ChaCha8Rng) -> crate::rational::Rational {
    loop {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            return int(c);
        }
    }
}

fn verify_lie(gens: usize, deg: usize, samples: usize, seed: u64) -> CmdResult {
    if gens == 0 || deg == 0 || gens > 4 || deg > 7 {
        return Err("verify-lie needs 1 <= gens <= 4 and 1 <= deg <= 7".into());
    }
    let oracle = lie_span_oracle(gens, deg, None).map_err(input)?;
    let basis = oracle.basis();
    let monomials: Vec<PermMonomial> = enumerate_basis(gens, deg, None).map_err(input)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    let mut inside = 0;
    let mut mismatches = Vec::new();
    let names = Alphabet::indexed(gens);
    for s in 0..samples {
        let mut f = PermPolynomial::zero();
        for b in &basis {
            if rng.gen_bool(0.5) {
                f += b.scale(&random_coeff(&mut rng));
            }
        }
        if s % 2 == 1 {
            let m = &monomials[rng.gen_range(0..monomials.len())];
            f += PermPolynomial::term(random_coeff(&mut rng), m.clone());
        }
        let member = oracle.contains(&f).map_err(input)?;
        inside += usize::from(member);
        if member == is_lie(&f) {
            agree += 1;
        } else {
            mismatches.push(f.render(&names));
        }
    }
    let ok = agree == samples;
    let text = format!(
        "degree {deg}, {gens} generators: Lie span dim {}, {samples} samples ({inside} inside), criterion agrees on {agree}",
        oracle.dim()
    );
    Ok(Reply::verdict(
        ok,
        text,
        json!({ "gens": gens, "degree": deg, "seed": seed, "span_dim": oracle.dim(), "samples": samples, "inside": inside, "agree": agree, "mismatches": mismatches }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("permalg").chain(args.iter().copied()))
    }

    #[test]
    fn is_lie_example() {
        let o = cli(&["is-lie", "x2*x1*x3 - x1*x2*x3"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "Lie element: [[x2,x1],x3]\n"));
        assert_eq!(cli(&["is-lie", "x1x2"]).code, 1);
    }

    #[test]
    fn negative_leading_expression() {
        let o = cli(&["normalize", "-x1*x2 + x2x1"]);
        assert_eq!(o.stdout, "-x1x2 + x2x1\n");
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(cli(&["normalize", "x1 +"]).code, 2);
        assert_eq!(cli(&["no-such-command"]).code, 2);
        assert_eq!(cli(&["gk", "--algebra", "/nonexistent.json", "--max-deg", "8"]).code, 2);
        assert_eq!(cli(&["to-bn", "x1x2"]).code, 2);
    }

    #[test]
    fn jordan_and_identities() {
        assert_eq!(cli(&["jordan-express", "x1x2"]).code, 1);
        assert_eq!(cli(&["jordan-express", "x1x2 + x2x1"]).stdout, "{x1,x2}\n");
        assert_eq!(cli(&["check-identity", "--template", "[[a,b],[c,d]]"]).code, 0);
        assert_eq!(cli(&["check-identity", "--template", "ab = ba"]).code, 1);
        assert_eq!(cli(&["identities"]).code, 0);
    }

    #[test]
    fn counts() {
        assert_eq!(cli(&["dims", "--gens", "2", "--deg", "3"]).stdout, "dim P_3(2 generators) = 6\n");
        let o = cli(&["--json", "bn", "--gens", "3", "--deg", "3"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["count"], 18);
        assert_eq!(cli(&["to-bn", "x1x2x3"]).stdout, "x1x2x3 = f(x1;x2,x3) + f(x2;x1,x3) + 2f(x3;x1,x2)\n");
    }

    #[test]
    fn cohn_and_verify() {
        let o = cli(&["--json", "cohn-witness"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!((v["i_slice_dim"].as_u64(), v["j_slice_dim"].as_u64()), (Some(1), Some(2)));
        assert_eq!(cli(&["--seed", "7", "verify-lie", "--gens", "2", "--deg", "4", "--samples", "20"]).code, 0);
    }
}
