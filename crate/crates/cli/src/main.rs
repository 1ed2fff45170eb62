use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tableau_corners::bijections::*;
use tableau_corners::serial::Object;
use tableau_corners::verify::{catalog, identity, FamilyId, IdentityReport, Multiplier, Source, Verifier, Weighting};
use tableau_corners::{BigInt, BigPoly};

#[derive(Parser)]
#[command(name = "corners", version, about = "Corners of tree-like and alternative tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family, one per line.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Weighted sum of a statistic over a family.
    Poly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "weight")]
        stat: Stat,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check identities from the catalog. Sizes here are the identity's `n`.
    Verify {
        /// Identity id; all identities when omitted.
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, conflicts_with = "sizes")]
        size: Option<usize>,
        #[arg(long, value_parser = parse_range)]
        sizes: Option<RangeInclusive<usize>>,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply a bijection to one serialized object.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        /// JSON file, or `-` for standard input.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply a bijection and its inverse to a whole family.
    Roundtrip {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Draw a serialized object.
    Render {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// tlt, tlt-sym, at, at-star, at-sym, at-b, lp or lp-b.
    #[arg(long)]
    family: Option<FamilyId>,
    /// Object size.
    #[arg(long, conflicts_with = "sizes")]
    size: Option<usize>,
    #[arg(long, value_parser = parse_range)]
    sizes: Option<RangeInclusive<usize>>,
    /// Use the brute-force generator.
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Weight,
    Noc,
    Oc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    Alpha,
    AlphaInv,
    Beta,
    BetaInv,
    Gamma,
    GammaInv,
    Phi,
    Psi,
    Phib,
    Psib,
}

impl Bijection {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn domain(self) -> FamilyId {
        match self {
            Bijection::Alpha | Bijection::Beta => FamilyId::Tlt,
            Bijection::AlphaInv => FamilyId::At,
            Bijection::BetaInv | Bijection::Phi => FamilyId::AtStar,
            Bijection::Gamma => FamilyId::AtSym,
            Bijection::GammaInv | Bijection::Phib => FamilyId::AtB,
            Bijection::Psi => FamilyId::Lp,
            Bijection::Psib => FamilyId::LpB,
        }
    }
}

/// Exit status 1: a check came out false. Exit status 2: bad usage or input.
enum Failure {
    Check(String),
    Usage(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: usize = a.parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: usize = b.strip_prefix('=').unwrap_or(b).parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

impl FamilyArgs {
    fn family(&self) -> Result<FamilyId, Failure> {
        self.family.ok_or_else(|| Failure::Usage("--family is required".into()))
    }

    /// Requested sizes paired with the family index of each. A range skips
    /// sizes the family does not have.
    fn indices(&self, family: FamilyId) -> Result<Vec<(usize, usize)>, Failure> {
        match (self.size, &self.sizes) {
            (Some(s), _) => Ok(vec![(s, family.index_of_size(s)?)]),
            (None, Some(r)) => {
                let found: Vec<_> = r.clone().filter_map(|s| Some((s, family.index_of_size(s).ok()?))).collect();
                if found.is_empty() {
                    return Err(Failure::Usage(format!("{family} has no objects with sizes in {r:?}")));
                }
                Ok(found)
            }
            (None, None) => Err(Failure::Usage("--size or --sizes is required".into())),
        }
    }

    fn verifier(&self) -> Verifier {
        Verifier::new(if self.oracle { Source::Oracle } else { Source::Transport })
    }
}

fn read_object(path: &PathBuf) -> Result<Object, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(Object::from_json_str(&text)?)
}

fn wrong_kind(b: Bijection, o: &Object) -> Failure {
    Failure::Usage(format!("{} expects an object of family {}, got a {}", b.name(), b.domain(), o.kind()))
}

fn apply(b: Bijection, input: &Object) -> Result<Object, Failure> {
    Ok(match (b, input) {
        (Bijection::Alpha, Object::Tlt(t)) => Object::At(alpha(t)),
        (Bijection::Beta, Object::Tlt(t)) => Object::At(beta(t)),
        (Bijection::AlphaInv, Object::At(t)) => Object::Tlt(alpha_inv(t)),
        (Bijection::BetaInv, Object::At(t)) => Object::Tlt(beta_inv(t)?),
        (Bijection::Gamma, Object::At(t)) => Object::AtB(gamma(t)?),
        (Bijection::GammaInv, Object::AtB(t)) => Object::At(gamma_inv(t)),
        (Bijection::Phi, Object::At(t)) => Object::Lp(phi(t)?),
        (Bijection::Psi, Object::Lp(t)) => Object::At(psi(t)),
        (Bijection::Phib, Object::AtB(t)) => Object::LpB(phi_b(t)),
        (Bijection::Psib, Object::LpB(t)) => Object::AtB(psi_b(t)?),
        _ => return Err(wrong_kind(b, input)),
    })
}

fn inverse(b: Bijection) -> Bijection {
    use Bijection::*;
    match b {
        Alpha => AlphaInv,
        AlphaInv => Alpha,
        Beta => BetaInv,
        BetaInv => Beta,
        Gamma => GammaInv,
        GammaInv => Gamma,
        Phi => Psi,
        Psi => Phi,
        Phib => Psib,
        Psib => Phib,
    }
}

/// Statistic contract between an object and its image, in the forward direction.
fn contract(b: Bijection, input: &Object, image: &Object) -> Result<(), BijectionError> {
    use Bijection::*;
    match (b, input, image) {
        (Alpha, Object::Tlt(t), Object::At(a)) | (AlphaInv, Object::At(a), Object::Tlt(t)) => check_alpha(t, a),
        (Beta, Object::Tlt(t), Object::At(a)) | (BetaInv, Object::At(a), Object::Tlt(t)) => check_beta(t, a),
        (Gamma, Object::At(a), Object::AtB(g)) | (GammaInv, Object::AtB(g), Object::At(a)) => check_gamma(a, g),
        (Phi, Object::At(a), Object::Lp(p)) | (Psi, Object::Lp(p), Object::At(a)) => check_phi(a, p),
        (Phib, Object::AtB(a), Object::LpB(p)) | (Psib, Object::LpB(p), Object::AtB(a)) => check_phi_b(a, p),
        _ => Err(BijectionError::InvalidInput("image has the wrong kind".into())),
    }
}

fn multiplier(family: FamilyId, stat: Stat) -> Multiplier {
    match (stat, family) {
        (Stat::Weight, _) => Multiplier::Unit,
        (Stat::Noc, FamilyId::AtB) => Multiplier::NocTypeB,
        (Stat::Noc, _) => Multiplier::Noc,
        (Stat::Oc, _) => Multiplier::Oc,
    }
}

fn enumerate(out: &mut impl Write, args: &FamilyArgs, limit: Option<usize>, format: Format) -> Result<(), Failure> {
    let family = args.family()?;
    let indices = args.indices(family)?;
    let v = args.verifier();
    let mut csv = csv::Writer::from_writer(Vec::new());
    if let Format::Csv = format {
        csv.write_record(["size", "index", "object"])?;
    }
    for (size, n) in indices {
        let objects = v.generate(family, n)?;
        for (k, o) in objects.iter().take(limit.unwrap_or(usize::MAX)).enumerate() {
            match format {
                Format::Json => writeln!(out, "{}", o.to_json_string())?,
                Format::Ascii => writeln!(out, "{}", o.render())?,
                Format::Csv => csv.write_record([size.to_string(), k.to_string(), o.to_json_string()])?,
            }
        }
    }
    if let Format::Csv = format {
        out.write_all(&csv.into_inner().map_err(|e| Failure::Usage(e.to_string()))?)?;
    }
    Ok(())
}

fn poly(out: &mut impl Write, args: &FamilyArgs, stat: Stat, format: Format) -> Result<(), Failure> {
    let family = args.family()?;
    let indices = args.indices(family)?;
    let v = args.verifier();
    let single = indices.len() == 1;
    let mut csv = csv::Writer::from_writer(Vec::new());
    if let Format::Csv = format {
        csv.write_record(["size", "deg_a", "deg_b", "coefficient"])?;
    }
    for (size, n) in indices {
        let p: BigPoly = v.aggregate(family, n, multiplier(family, stat), Weighting::Family)?;
        match format {
            Format::Json if single => writeln!(out, "{}", p.to_json())?,
            Format::Json => writeln!(out, "{}", serde_json::json!({"size": size, "terms": p.to_json()["terms"]}))?,
            Format::Ascii if family.is_univariate() => writeln!(out, "{size}: {}", p.display_x())?,
            Format::Ascii => writeln!(out, "{size}: {p}")?,
            Format::Csv => {
                for ((da, db), c) in p.graded_terms() {
                    csv.write_record([size.to_string(), da.to_string(), db.to_string(), c.to_string()])?;
                }
            }
        }
    }
    if let Format::Csv = format {
        out.write_all(&csv.into_inner().map_err(|e| Failure::Usage(e.to_string()))?)?;
    }
    Ok(())
}

fn verify(
    out: &mut impl Write,
    id: Option<&str>,
    sizes: Option<RangeInclusive<usize>>,
    oracle: bool,
    format: Format,
) -> Result<(), Failure> {
    let specs = match id {
        Some(id) => vec![identity(id)?],
        None => catalog().iter().collect(),
    };
    let v = Verifier::new(if oracle { Source::Oracle } else { Source::Transport });
    let mut failures = Vec::new();
    let mut csv = csv::Writer::from_writer(Vec::new());
    if let Format::Csv = format {
        csv.write_record(["id", "n", "i", "equal", "millis"])?;
    }
    for spec in specs {
        let range = sizes.clone().unwrap_or_else(|| spec.default_range.clone());
        for n in range {
            let reports: Vec<IdentityReport<BigInt>> = v.verify(spec.id, n)?;
            for r in reports {
                match format {
                    Format::Csv => csv.write_record([
                        r.id.to_string(),
                        r.n.to_string(),
                        r.i.map(|i| i.to_string()).unwrap_or_default(),
                        r.equal.to_string(),
                        r.millis.to_string(),
                    ])?,
                    Format::Ascii => {
                        let i = r.i.map(|i| format!(" i={i}")).unwrap_or_default();
                        let verdict = if r.equal { "ok" } else { "DIFFERS" };
                        writeln!(out, "{} n={}{i}: {verdict}", r.id, r.n)?;
                    }
                    Format::Json => writeln!(out, "{}", r.to_json())?,
                }
                if !r.equal {
                    failures.push(format!("{} n={} i={:?}: lhs {} rhs {}", r.id, r.n, r.i, r.lhs, r.rhs));
                }
            }
        }
    }
    if let Format::Csv = format {
        out.write_all(&csv.into_inner().map_err(|e| Failure::Usage(e.to_string()))?)?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failures.join("\n")))
    }
}

fn roundtrip(out: &mut impl Write, b: Bijection, args: &FamilyArgs) -> Result<(), Failure> {
    let family = args.family.unwrap_or(b.domain());
    if family != b.domain() {
        return Err(Failure::Usage(format!("{} acts on {}, not {family}", b.name(), b.domain())));
    }
    let v = args.verifier();
    let back = inverse(b);
    for (size, n) in args.indices(family)? {
        let objects = v.generate(family, n)?;
        let mut images = std::collections::BTreeSet::new();
        for o in objects.iter() {
            let image = apply(b, o)?;
            contract(b, o, &image).map_err(|e| Failure::Check(format!("{}: {e}", o.to_json_string())))?;
            if &apply(back, &image)? != o {
                return Err(Failure::Check(format!("{} does not come back", o.to_json_string())));
            }
            images.insert(image.to_json_string());
        }
        let distinct = images.len() == objects.len();
        writeln!(
            out,
            "{}",
            serde_json::json!({"family": family.id(), "size": size, "objects": objects.len(), "distinct": distinct})
        )?;
        if !distinct {
            return Err(Failure::Check(format!("two objects of size {size} share an image")));
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate { family, limit, format } => enumerate(out, &family, limit, format),
        Command::Poly { family, stat, format } => poly(out, &family, stat, format),
        Command::Verify { identity, size, sizes, oracle, format } => {
            verify(out, identity.as_deref(), size.map(|s| s..=s).or(sizes), oracle, format)
        }
        Command::Map { bijection, input, format } => {
            let image = apply(bijection, &read_object(&input)?)?;
            match format {
                Format::Ascii => write!(out, "{}", image.render())?,
                _ => writeln!(out, "{}", image.to_json_string())?,
            }
            Ok(())
        }
        Command::Roundtrip { bijection, family } => roundtrip(out, bijection, &family),
        Command::Render { input } => {
            write!(out, "{}", read_object(&input)?.render())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
