//! The `sextic` command line: argument parsing, verification drivers and
//! report rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::curvegeom::families::{sample_params, verify_family, Family, Params, FAMILIES};
use crate::curvegeom::{verify_identity, Fe, IDENTITIES};
use crate::error::{Error, Result};
use crate::invariants::{
    abelianization, battery, battery_group, epi_exists, group_order, hom_spectrum, rb3_verify,
    todd_coxeter, FiniteGroupTable, DEFAULT_COSET_LIMIT,
};
use crate::notation::{parse_relators, parse_word};
use crate::presentation::Presentation;
use crate::registry::{
    self, apply_perturbation, bindings_for, case_braid, compare_relators, derived_pi1, get_case,
    get_group, group_presentation, pi1_presentation, pibar_presentation, Binding, CaseRecord,
    DerivedMatch, GroupTag, PerturbationRule,
};
use crate::word::{Generator, Word};

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub anchor: String,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status,
            detail: detail.into(),
            anchor: String::new(),
        }
    }

    pub fn anchored(mut self, anchor: &str) -> Self {
        self.anchor = anchor.to_string();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub target: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
}

impl Report {
    /// 1 if any check failed, else 0.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.checks.iter().any(|c| c.status == Status::Fail))
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(Value::String(s)) = &self.output {
            out.push_str(s);
            if !s.ends_with('\n') {
                out.push('\n');
            }
        } else if let (Some(v), true) = (&self.output, self.checks.is_empty()) {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
        }
        if self.checks.is_empty() {
            return out;
        }
        let _ = writeln!(out, "{} {}", self.command, self.target);
        for c in &self.checks {
            let _ = write!(out, "{:<12} {}: {}", c.status.as_str(), c.name, c.detail);
            if !c.anchor.is_empty() {
                let _ = write!(out, "  [{}]", c.anchor);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} PASS, {} FAIL, {} INCONCLUSIVE",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive)
        );
        out
    }
}

/// Tunables shared by the verification drivers.
#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub coset_limit: usize,
    pub battery: Vec<FiniteGroupTable>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            coset_limit: DEFAULT_COSET_LIMIT,
            battery: battery(),
        }
    }
}

fn spectrum_text(s: &[(String, u64)]) -> String {
    s.iter()
        .map(|(g, n)| format!("{g}:{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn reference_group(tag: GroupTag) -> Option<&'static str> {
    match tag {
        GroupTag::Rb3 => Some("rb3"),
        GroupTag::D4P => Some("d4-perturbed"),
        GroupTag::Minimal => Some("minimal"),
        _ => None,
    }
}

fn spectrum_check(name: &str, p: &Presentation, group: &str, opts: &Options) -> Result<Check> {
    let reference = group_presentation(get_group(group)?)?;
    let got = hom_spectrum(p, &opts.battery);
    let want = hom_spectrum(&reference, &opts.battery);
    let status = Status::from_bool(got == want);
    let detail = if got == want {
        format!("{} (= {group})", spectrum_text(&got))
    } else {
        format!(
            "{} vs {group} {}",
            spectrum_text(&got),
            spectrum_text(&want)
        )
    };
    Ok(Check::new(name, status, detail))
}

fn s3_check(name: &str, p: &Presentation, expected: bool) -> Result<Check> {
    let found = epi_exists(p, &battery_group("S3")?);
    Ok(Check::new(
        name,
        Status::from_bool(found == expected),
        format!(
            "epimorphism onto S3 {}",
            if found { "found" } else { "absent" }
        ),
    ))
}

fn rb3_check(name: &str, p: &Presentation, map: &BTreeMap<String, String>) -> Result<Check> {
    let report = rb3_verify(p, &registry::rb3_assignment(map)?)?;
    let detail = if report.certified() {
        "assignment defines an epimorphism onto Z2*Z3".to_string()
    } else if let Some((r, img)) = report.failing_relators.first() {
        format!("relator {r} maps to {img}")
    } else {
        "image does not reach both u and v within the closure bound".to_string()
    };
    Ok(Check::new(
        name,
        Status::from_bool(report.certified()),
        detail,
    ))
}

/// Checks of the stored claims for one case and each of its perturbations.
pub fn verify_case(case: &CaseRecord, opts: &Options) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if case.pi1_relations.is_empty() {
        checks.push(
            Check::new(
                "presentation",
                Status::Inconclusive,
                format!(
                    "no relations stored; claimed {:?} not checked",
                    case.expected.tag
                ),
            )
            .anchored(&case.expected.anchor),
        );
        return Ok(checks);
    }
    let p = pi1_presentation(case)?;

    if let Some(derived) = derived_pi1(case)? {
        checks.push(derived_check(case, &p, &derived, opts));
    }
    let ab = abelianization(&p);
    if let Some(want) = &case.expected.abelianization {
        checks.push(
            Check::new(
                "abelianization",
                Status::from_bool(&ab.to_string() == want),
                format!("{ab} (expected {want})"),
            )
            .anchored(&case.expected.anchor),
        );
    }
    if let Some(map) = &case.rb3_assignment {
        checks.push(rb3_check("rb3-epimorphism", &p, map)?.anchored(&case.expected.anchor));
    }
    if let Some(s3) = case.expected.s3_epi {
        checks.push(s3_check("s3-epi", &p, s3)?.anchored(&case.expected.anchor));
    }
    if let Some(group) = reference_group(case.expected.tag) {
        checks.push(spectrum_check("spectrum", &p, group, opts)?.anchored(&case.expected.anchor));
    }
    checks.extend(braid_checks(case)?);
    for (rule, binding) in bindings_for(&case.id) {
        checks.extend(verify_binding(case, rule, binding, opts)?);
    }
    Ok(checks)
}

fn derived_check(
    case: &CaseRecord,
    printed: &Presentation,
    derived: &Presentation,
    opts: &Options,
) -> Check {
    match case.derived_match {
        DerivedMatch::Exact => {
            let cmp = compare_relators(printed, derived);
            let detail = if cmp.exact() {
                format!("{} relators match", cmp.matched)
            } else {
                format!(
                    "{} matched; printed only: {}; computed only: {}",
                    cmp.matched,
                    join_words(&cmp.only_printed),
                    join_words(&cmp.only_computed)
                )
            };
            Check::new("double-cover", Status::from_bool(cmp.exact()), detail)
        }
        _ => {
            let (a1, a2) = (abelianization(printed), abelianization(derived));
            let (s1, s2) = (
                hom_spectrum(printed, &opts.battery),
                hom_spectrum(derived, &opts.battery),
            );
            let ok = a1 == a2 && s1 == s2;
            let detail = if ok {
                format!("invariants agree: {a1}, {}", spectrum_text(&s1))
            } else {
                format!(
                    "printed {a1} {}; computed {a2} {}",
                    spectrum_text(&s1),
                    spectrum_text(&s2)
                )
            };
            Check::new("double-cover", Status::from_bool(ok), detail)
        }
    }
}

fn join_words(ws: &[Word]) -> String {
    if ws.is_empty() {
        return "none".into();
    }
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// For braids stored with a printed relation `… = g`, compares the computed
/// relation on `g` with the printed text and with the printed `π̄₁`.
fn braid_checks(case: &CaseRecord) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for rec in &case.braids {
        let Some(text) = &rec.printed_relation else {
            continue;
        };
        let (braid, basis) = case_braid(case, &rec.name)?;
        let rhs = text.rsplit('=').next().unwrap_or_default().trim();
        let g = Generator::new(rhs)?;
        let image = braid.act(&Word::generator(&g), &basis)?;
        let computed = image.mul(&Word::generator(&g).inverse());
        let printed = parse_relators(text)?;
        let literal = printed
            .iter()
            .any(|r| r.cyclic_canonical() == computed.cyclic_canonical());
        checks.push(
            Check::new(
                format!("braid {} literal", rec.name),
                Status::from_bool(literal),
                format!("{}({g}) = {image}", rec.name),
            )
            .anchored(&rec.anchor),
        );
        let pibar = pibar_presentation(case)?;
        let known = pibar
            .relators()
            .iter()
            .any(|r| r.cyclic_canonical() == computed.cyclic_canonical());
        checks.push(
            Check::new(
                format!("braid {} in printed relations", rec.name),
                Status::from_bool(known),
                format!("relator {computed}"),
            )
            .anchored(&rec.anchor),
        );
    }
    Ok(checks)
}

/// Checks of one perturbation binding according to its expected tag.
pub fn verify_binding(
    case: &CaseRecord,
    rule: &PerturbationRule,
    binding: &Binding,
    opts: &Options,
) -> Result<Vec<Check>> {
    let q = apply_perturbation(case, &rule.id, &binding.id)?;
    let prefix = format!("{} [{}]", rule.id, binding.id);
    let anchor = binding.expected.anchor.as_str();
    let mut checks = Vec::new();
    let ab = abelianization(&q);
    if let Some(want) = &binding.expected.abelianization {
        checks.push(
            Check::new(
                format!("{prefix} abelianization"),
                Status::from_bool(&ab.to_string() == want),
                format!("{ab} (expected {want})"),
            )
            .anchored(anchor),
        );
    }
    match binding.expected.tag {
        GroupTag::Abelian => {
            let check = if ab.free_rank > 0 {
                Check::new(
                    format!("{prefix} order"),
                    Status::Fail,
                    format!("infinite: abelianization {ab}"),
                )
            } else {
                match group_order(&q, opts.coset_limit)? {
                    Some(n) => Check::new(
                        format!("{prefix} order"),
                        Status::from_bool(n == 6),
                        format!("coset enumeration index {n}"),
                    ),
                    None => Check::new(
                        format!("{prefix} order"),
                        Status::Inconclusive,
                        format!("coset limit {} exceeded", opts.coset_limit),
                    ),
                }
            };
            checks.push(check.anchored(anchor));
        }
        tag => {
            if let Some(map) = &binding.rb3_assignment {
                checks.push(
                    rb3_check(&format!("{prefix} rb3-epimorphism"), &q, map)?.anchored(anchor),
                );
            }
            if let Some(group) = reference_group(tag) {
                checks.push(
                    spectrum_check(&format!("{prefix} spectrum"), &q, group, opts)?
                        .anchored(anchor),
                );
            }
        }
    }
    if let Some(s3) = binding.expected.s3_epi {
        checks.push(s3_check(&format!("{prefix} s3-epi"), &q, s3)?.anchored(anchor));
    }
    Ok(checks)
}

/// One check per identity.
pub fn verify_identities(ids: &[&str], seed: u64) -> Result<Vec<Check>> {
    ids.iter()
        .map(|id| {
            let r = verify_identity(id, seed)?;
            Ok(Check::new(
                format!("identity {id}"),
                Status::from_bool(r.holds),
                r.detail,
            ))
        })
        .collect()
}

/// One check per parameter point: the given point, else `samples` seeded
/// points (a single point for zero-dimensional families).
pub fn verify_family_points(
    family: Family,
    given: Option<Params>,
    samples: usize,
    seed: u64,
) -> Result<(Vec<Check>, Vec<Value>)> {
    let points: Vec<Params> = match given {
        Some(p) => vec![p],
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = if family.is_sampled() { samples } else { 1 };
            (0..n).map(|_| sample_params(family, &mut rng)).collect()
        }
    };
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for (k, p) in points.iter().enumerate() {
        let r = verify_family(family, p)?;
        let params = r
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        let points = r
            .points
            .iter()
            .map(|pt| {
                format!(
                    "{} at x={} {} found {}",
                    pt.label, pt.x, pt.expected, pt.found
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        checks.push(Check::new(
            format!("{family} #{}", k + 1),
            Status::from_bool(r.pass),
            format!("{params}: {points}"),
        ));
        reports.push(serde_json::to_value(&r)?);
    }
    Ok((checks, reports))
}

#[derive(Parser, Debug)]
#[command(
    name = "sextic",
    version,
    about = "Fundamental groups of symmetric plane sextics"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_COSET_LIMIT, global = true)]
    coset_limit: usize,
    /// Comma separated battery group names.
    #[arg(long, value_delimiter = ',', global = true)]
    battery: Option<Vec<String>>,
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stored cases and perturbation rules.
    #[command(subcommand)]
    Cases(CasesCmd),
    /// Exact curve identities and section families.
    #[command(subcommand)]
    Geometry(GeometryCmd),
    /// Group invariants of a presentation.
    #[command(subcommand)]
    Invariants(InvariantsCmd),
    /// Presentation transformations.
    #[command(subcommand)]
    Present(PresentCmd),
}

#[derive(Subcommand, Debug)]
enum CasesCmd {
    List,
    /// Verify one case, or `all`.
    Verify {
        id: String,
    },
    Export {
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GeometryCmd {
    /// Check one identity, or `all`.
    Identity { id: String },
    /// Check a section family at sampled or given parameters.
    Family {
        name: String,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        /// Parameter `name=value`; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// `case:ID` or `group:ID`.
    target: Option<String>,
    /// Presentation file `<gens | relations>`.
    #[arg(long)]
    presentation: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum InvariantsCmd {
    Abelianize(Source),
    /// Homomorphism counts into battery groups.
    Homcount(Source),
    /// Index of a subgroup by coset enumeration.
    Coset {
        #[command(flatten)]
        source: Source,
        /// Subgroup generators, comma separated words.
        #[arg(long, default_value = "")]
        subgroup: String,
    },
    /// Certify an epimorphism onto Z2*Z3.
    Rb3 {
        #[command(flatten)]
        source: Source,
        /// `generator=image` pairs, comma separated; images in u, v, s1, s2.
        #[arg(long)]
        assign: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum PresentCmd {
    DoubleCover {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        distinguished: String,
    },
    Quotient {
        #[command(flatten)]
        source: Source,
        /// Extra relations, `;` separated.
        #[arg(long)]
        relations: String,
    },
    Normalize(Source),
}

/// Rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            stdout: match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            },
            stderr: String::new(),
            code: report.exit_code(),
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let battery = match &cli.battery {
        Some(names) => names
            .iter()
            .map(|n| battery_group(n.trim()))
            .collect::<Result<Vec<_>>>()?,
        None => battery(),
    };
    let opts = Options {
        seed: cli.seed,
        coset_limit: cli.coset_limit,
        battery,
    };
    let timestamp = (!cli.no_timestamp).then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    let mut report = Report {
        schema: SCHEMA,
        command: String::new(),
        target: String::new(),
        seed: cli.seed,
        timestamp,
        checks: Vec::new(),
        output: None,
    };
    match &cli.command {
        Command::Cases(c) => cases(c, &opts, &mut report)?,
        Command::Geometry(g) => geometry(g, &opts, &mut report)?,
        Command::Invariants(i) => invariants(i, &opts, &mut report)?,
        Command::Present(p) => present(p, &mut report)?,
    }
    Ok(report)
}

fn cases(cmd: &CasesCmd, opts: &Options, report: &mut Report) -> Result<()> {
    match cmd {
        CasesCmd::List => {
            report.command = "cases list".into();
            let rows: Vec<Value> = registry::registry()
                .cases
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "singularities": c.singularities,
                        "curve": c.curve_id,
                        "tag": c.expected.tag,
                        "perturbations": bindings_for(&c.id).len(),
                    })
                })
                .collect();
            report.output = Some(Value::Array(rows));
        }
        CasesCmd::Verify { id } => {
            report.command = "cases verify".into();
            report.target = id.clone();
            if id == "all" {
                for c in &registry::registry().cases {
                    for mut check in verify_case(c, opts)? {
                        check.name = format!("{}: {}", c.id, check.name);
                        report.checks.push(check);
                    }
                }
            } else {
                report.checks = verify_case(get_case(id)?, opts)?;
            }
        }
        CasesCmd::Export { output } => {
            report.command = "cases export".into();
            let text = registry::export_json()?;
            match output {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    report.target = path.display().to_string();
                }
                None => report.output = Some(Value::String(text)),
            }
        }
    }
    Ok(())
}

fn parse_param(text: &str) -> Result<(String, Fe)> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected `name=value`, got `{text}`")))?;
    Ok((k.trim().to_string(), Fe::parse(v)?))
}

fn geometry(cmd: &GeometryCmd, opts: &Options, report: &mut Report) -> Result<()> {
    match cmd {
        GeometryCmd::Identity { id } => {
            report.command = "geometry identity".into();
            report.target = id.clone();
            let ids: Vec<&str> = if id == "all" {
                IDENTITIES.to_vec()
            } else {
                vec![id.as_str()]
            };
            report.checks = verify_identities(&ids, opts.seed)?;
        }
        GeometryCmd::Family {
            name,
            samples,
            params,
        } => {
            report.command = "geometry family".into();
            report.target = name.clone();
            let families: Vec<Family> = if name == "all" {
                FAMILIES.to_vec()
            } else {
                vec![name.parse()?]
            };
            if name == "all" && !params.is_empty() {
                return Err(Error::Precondition("--param needs a single family".into()));
            }
            let given = if params.is_empty() {
                None
            } else {
                Some(
                    params
                        .iter()
                        .map(|p| parse_param(p))
                        .collect::<Result<Params>>()?,
                )
            };
            let mut details = Vec::new();
            for f in families {
                let (checks, reports) =
                    verify_family_points(f, given.clone(), *samples, opts.seed)?;
                report.checks.extend(checks);
                details.extend(reports);
            }
            report.output = Some(Value::Array(details));
        }
    }
    Ok(())
}

fn load(source: &Source) -> Result<(String, Presentation)> {
    match (&source.presentation, &source.target) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            Ok((path.display().to_string(), Presentation::parse(&text)?))
        }
        (None, Some(t)) => {
            let p = if let Some(id) = t.strip_prefix("case:") {
                pi1_presentation(get_case(id)?)?
            } else if let Some(id) = t.strip_prefix("group:") {
                group_presentation(get_group(id)?)?
            } else {
                return Err(Error::Parse(format!(
                    "expected `case:ID` or `group:ID`, got `{t}`"
                )));
            };
            Ok((t.clone(), p))
        }
        _ => Err(Error::Precondition(
            "give exactly one of --presentation FILE or a case:ID / group:ID target".into(),
        )),
    }
}

fn parse_word_list(text: &str) -> Result<Vec<Word>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_word)
        .collect()
}

fn invariants(cmd: &InvariantsCmd, opts: &Options, report: &mut Report) -> Result<()> {
    match cmd {
        InvariantsCmd::Abelianize(src) => {
            report.command = "invariants abelianize".into();
            let (target, p) = load(src)?;
            report.target = target;
            report.output = Some(Value::String(abelianization(&p).to_string()));
        }
        InvariantsCmd::Homcount(src) => {
            report.command = "invariants homcount".into();
            let (target, p) = load(src)?;
            report.target = target;
            let spec = hom_spectrum(&p, &opts.battery);
            report.output = Some(Value::String(spectrum_text(&spec)));
        }
        InvariantsCmd::Coset { source, subgroup } => {
            report.command = "invariants coset".into();
            let (target, p) = load(source)?;
            report.target = target;
            let h = parse_word_list(subgroup)?;
            match todd_coxeter(&p, &h, opts.coset_limit) {
                Ok(n) => {
                    report.output = Some(json!(n));
                    report.checks.push(Check::new(
                        "coset enumeration",
                        Status::Pass,
                        format!("index {n}"),
                    ));
                }
                Err(Error::CosetOverflow { limit }) => {
                    report.checks.push(Check::new(
                        "coset enumeration",
                        Status::Inconclusive,
                        format!("coset limit {limit} exceeded"),
                    ));
                }
                Err(e) => return Err(e),
            }
        }
        InvariantsCmd::Rb3 { source, assign } => {
            report.command = "invariants rb3".into();
            let (target, p) = load(source)?;
            report.target = target.clone();
            let map: BTreeMap<String, String> = match assign {
                Some(text) => text
                    .split(',')
                    .map(|kv| {
                        kv.split_once('=')
                            .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                            .ok_or_else(|| {
                                Error::Parse(format!("expected `gen=image`, got `{kv}`"))
                            })
                    })
                    .collect::<Result<_>>()?,
                None => target
                    .strip_prefix("case:")
                    .and_then(|id| get_case(id).ok())
                    .and_then(|c| c.rb3_assignment.clone())
                    .ok_or_else(|| {
                        Error::Precondition("no assignment given and none stored".into())
                    })?,
            };
            report.checks.push(rb3_check("rb3-epimorphism", &p, &map)?);
        }
    }
    Ok(())
}

fn present(cmd: &PresentCmd, report: &mut Report) -> Result<()> {
    let (name, src, q) = match cmd {
        PresentCmd::DoubleCover {
            source,
            distinguished,
        } => {
            let (t, p) = load(source)?;
            (
                "present double-cover",
                t,
                p.double_cover(&Generator::new(distinguished)?)?,
            )
        }
        PresentCmd::Quotient { source, relations } => {
            let (t, p) = load(source)?;
            let mut extra = Vec::new();
            for chain in relations.split(';').filter(|c| !c.trim().is_empty()) {
                extra.extend(parse_relators(chain)?);
            }
            (
                "present quotient",
                t,
                p.quotient_add_relators(&extra)?.normalize(),
            )
        }
        PresentCmd::Normalize(source) => {
            let (t, p) = load(source)?;
            ("present normalize", t, p.normalize())
        }
    };
    report.command = name.into();
    report.target = src;
    report.output = Some(Value::String(q.to_text()));
    Ok(())
}
