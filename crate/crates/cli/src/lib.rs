//! Argument handling for the `ordcone` binary, kept in a library so tests
//! can drive it without spawning processes.

use std::fmt;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ordcone_core::bicyclic::{normalize, BicyclicNormal, BicyclicWord};
use ordcone_core::cone::GreenRelation;
use ordcone_core::congruence::{Congruence, CongruenceKind};
use ordcone_core::extended::green_ext;
use ordcone_core::harness::{catalog_groups, run_battery, Suite};
use ordcone_core::parse::{parse_cone_literal, parse_element, parse_group, parse_word, ParseError};
use ordcone_core::report::Report;
use ordcone_core::{AlgebraError, Carrier, CarrierKind, Element, GroupElement, OrderedGroup, SampleSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "ordcone",
    version,
    about = "Exact computations in inverse semigroups of cone translations"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Group: Z, Q or lex(<group>,<group>).
    #[arg(long)]
    group: Option<String>,
    /// Work in the extended semigroup with open cones (d-groups only).
    #[arg(long)]
    ext: bool,
    /// Restrict to the positive cone.
    #[arg(long)]
    plus: bool,
    #[arg(long, env = "ORDCONE_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    count: usize,
    /// Magnitude cap for sampled coordinates.
    #[arg(long, default_value_t = 50)]
    bound: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Multiply elements left to right: a[g;h] literals, words in p and q,
    /// or group elements. Options go before the operands.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        operands: Vec<String>,
    },
    /// Inverse of an element.
    Inv {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        operand: String,
    },
    /// Apply a partial translation to a group element.
    Apply {
        #[command(flatten)]
        common: Common,
        operand: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Test a Green's relation (R, L, H, D or J).
    Green {
        #[command(flatten)]
        common: Common,
        relation: String,
        x: String,
        y: String,
    },
    /// Test a congruence: delta, omega, cmg, tilde_c, tilde_id, tilde_bar.
    Cong {
        #[command(flatten)]
        common: Common,
        name: String,
        x: String,
        y: String,
    },
    /// Canonical class of an element under a congruence.
    Quotient {
        #[command(flatten)]
        common: Common,
        name: String,
        x: String,
    },
    /// Run a property suite, or `all`. Without --group the catalog groups
    /// Z, Q, lex(Z,Z) and lex(Z,Q) are used.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(default_value = "all")]
        suite: String,
    },
}

/// Everything that ends a command with exit code 2.
#[derive(Debug)]
enum UsageError {
    Message(String),
    Parse { arg: String, err: ParseError },
    Algebra(AlgebraError),
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UsageError::Message(m) => f.write_str(m),
            UsageError::Parse { arg, err } => {
                writeln!(f, "in `{arg}`: {err}")?;
                write!(f, "    {arg}\n    {}^", " ".repeat(err.pos))
            }
            UsageError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl From<AlgebraError> for UsageError {
    fn from(e: AlgebraError) -> Self {
        UsageError::Algebra(e)
    }
}

type CliResult<T> = Result<T, UsageError>;

fn parse_arg<T>(arg: &str, f: impl FnOnce(&str) -> Result<T, ParseError>) -> CliResult<T> {
    f(arg).map_err(|err| UsageError::Parse { arg: arg.to_string(), err })
}

impl Common {
    fn group(&self) -> CliResult<OrderedGroup> {
        let spec = self
            .group
            .as_deref()
            .ok_or_else(|| UsageError::Message("--group is required for this command".into()))?;
        parse_arg(spec, parse_group)
    }

    fn carrier(&self) -> CliResult<Carrier> {
        Ok(Carrier::new(self.group()?, CarrierKind::from_flags(self.ext, self.plus))?)
    }

    fn spec(&self) -> CliResult<SampleSpec> {
        let spec = SampleSpec::new(self.seed, self.count, self.bound);
        spec.validate()?;
        Ok(spec)
    }
}

fn is_cone_literal(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with("a[") || t.starts_with("o[")
}

fn is_word(s: &str) -> bool {
    s.contains(['p', 'q'])
}

fn element(carrier: &Carrier, arg: &str) -> CliResult<Element> {
    let lit = parse_arg(arg, |s| parse_cone_literal(carrier.group(), s))?;
    Ok(carrier.element(lit.g, lit.h, lit.tag)?)
}

fn group_element(group: &OrderedGroup, arg: &str) -> CliResult<GroupElement> {
    parse_arg(arg, |s| parse_element(group, s))
}

/// Pure dispatch: parse `argv` (including the program name) and evaluate.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.verb) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn emit(common: &Common, verb: &str, result: impl fmt::Display) -> (i32, String) {
    let text = result.to_string();
    let out = if common.json {
        json!({ "verb": verb, "result": text }).to_string()
    } else {
        text
    };
    (EXIT_OK, out + "\n")
}

fn related_text(r: bool) -> &'static str {
    if r {
        "related"
    } else {
        "not related"
    }
}

fn dispatch(verb: Verb) -> CliResult<(i32, String)> {
    match verb {
        Verb::Mul { common, operands } => mul(&common, &operands),
        Verb::Inv { common, operand } => {
            if is_cone_literal(&operand) {
                let x = element(&common.carrier()?, &operand)?;
                Ok(emit(&common, "inv", x.invert()))
            } else {
                let g = common.group()?;
                Ok(emit(&common, "inv", group_element(&g, &operand)?.inverse()))
            }
        }
        Verb::Apply { common, operand, point } => {
            let carrier = common.carrier()?;
            let x = element(&carrier, &operand)?;
            let v = group_element(carrier.group(), &point)?;
            let out = x.apply_partial(&v)?.map_or_else(|| "undefined".to_string(), |y| y.to_string());
            Ok(emit(&common, "apply", out))
        }
        Verb::Green { common, relation, x, y } => {
            let rel: GreenRelation = relation.parse().map_err(UsageError::Message)?;
            let carrier = common.carrier()?;
            let (x, y) = (element(&carrier, &x)?, element(&carrier, &y)?);
            let r = match (&x, &y) {
                (Element::Ext(p), Element::Ext(q)) => green_ext(rel, p, q)?,
                _ => ordcone_core::cone::green(rel, &x.underlying(), &y.underlying())?,
            };
            Ok(emit(&common, "green", related_text(r)))
        }
        Verb::Cong { common, name, x, y } => {
            let c = congruence(&common, &name)?;
            let (x, y) = (element(c.carrier(), &x)?, element(c.carrier(), &y)?);
            Ok(emit(&common, "cong", related_text(c.related(&x, &y)?)))
        }
        Verb::Quotient { common, name, x } => {
            let c = congruence(&common, &name)?;
            let x = element(c.carrier(), &x)?;
            Ok(emit(&common, "quotient", c.canonical(&x)?))
        }
        Verb::Verify { common, suite } => verify(&common, &suite),
    }
}

fn congruence(common: &Common, name: &str) -> CliResult<Congruence> {
    let kind: CongruenceKind = name.parse().map_err(|_| {
        let names: Vec<_> = CongruenceKind::SHIPPED.iter().map(|k| k.name()).collect();
        UsageError::Message(format!("unknown congruence `{name}` (expected one of {})", names.join(", ")))
    })?;
    Ok(Congruence::new(kind, common.carrier()?)?)
}

fn mul(common: &Common, operands: &[String]) -> CliResult<(i32, String)> {
    let cones = operands.iter().filter(|a| is_cone_literal(a)).count();
    let words = operands.iter().filter(|a| !is_cone_literal(a) && is_word(a)).count();
    if cones == operands.len() {
        let carrier = common.carrier()?;
        let mut acc = element(&carrier, &operands[0])?;
        for arg in &operands[1..] {
            acc = acc.multiply(&element(&carrier, arg)?)?;
        }
        Ok(emit(common, "mul", acc))
    } else if words == operands.len() {
        let mut word = BicyclicWord::default();
        for arg in operands {
            word = word.concat(&parse_arg(arg, parse_word)?);
        }
        let nf: BicyclicNormal = normalize(&word);
        Ok(emit(common, "mul", nf))
    } else if cones == 0 && words == 0 {
        let g = common.group()?;
        let mut acc = group_element(&g, &operands[0])?;
        for arg in &operands[1..] {
            acc = g.op(&acc, &group_element(&g, arg)?)?;
        }
        Ok(emit(common, "mul", acc))
    } else {
        Err(UsageError::Message(
            "operands of mul must all be semigroup literals, all words, or all group elements".into(),
        ))
    }
}

fn verify(common: &Common, suite: &str) -> CliResult<(i32, String)> {
    if common.ext || common.plus {
        return Err(UsageError::Message(
            "--ext and --plus do not apply to verify; suites choose their own carriers".into(),
        ));
    }
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            UsageError::Message(format!("unknown suite `{suite}` (expected `all` or one of {})", names.join(", ")))
        })?]
    };
    let groups = match &common.group {
        Some(_) => vec![common.group()?],
        None => catalog_groups(),
    };
    let reports = run_battery(&groups, &suites, &common.spec()?)?;
    let code = if reports.iter().any(Report::failed) { EXIT_FAILED } else { EXIT_OK };
    let out = if common.json {
        let docs: Vec<Value> = reports.iter().map(Report::to_json).collect();
        let doc = if docs.len() == 1 { docs.into_iter().next().expect("one") } else { Value::Array(docs) };
        serde_json::to_string_pretty(&doc).expect("json")
    } else {
        reports.iter().map(Report::to_text).collect::<Vec<_>>().join("\n")
    };
    Ok((code, out + "\n"))
}
