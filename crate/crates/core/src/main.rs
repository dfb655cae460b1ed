//! Command-line front end: check structure files, derive structures from
//! named constructions, tensor (co)modules, and run functor-level probe
//! checks. Exit code 0 means all checks passed, 1 means an axiom failed,
//! 2 means the input could not be read or resolved.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mbm::builders::{
    check_bimonoid, dual_of_finite_monoid, exterior_line, from_bimonoid, from_semigroup,
    span_of_monoid, SemigroupTable,
};
use mbm::file::{FileBuilder, ResolvedStructure, StructureFile};
use mbm::functorial::{
    check_induced_g_comodule, check_induced_t_module, check_multiplier_bicomonad,
    check_multiplier_bimonad, ProbeSet,
};
use mbm::fusion::{check_derived_properties, check_fusion};
use mbm::mbm::{check_a12, check_mbm, check_minimality_diagrams, check_regular};
use mbm::report::CheckReport;
use mbm::repcat::{
    check_comodule, check_module, module_from_action_vec, tensor_comodules, tensor_modules,
    VecAction,
};
use mbm::scalar::FieldSpec;
use mbm::Error;

#[derive(Parser)]
#[command(name = "mbm", version, about = "Exact checker for multiplier bimonoids")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify every structure in a file against its defining diagrams.
    Check {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include informational diagrams (reported but never gating).
        #[arg(long)]
        informational: bool,
        /// Check structures on one thread each.
        #[arg(long)]
        parallel: bool,
    },
    /// Build a structure file from a named construction.
    Derive {
        #[command(subcommand)]
        what: DeriveCmd,
    },
    /// Tensor two comodules or two modules over equal underlying structures.
    Tensor {
        file: PathBuf,
        first: String,
        second: String,
        /// Name for the tensored structure.
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Functor-level probe checks: the induced multiplier bicomonad and
    /// bimonad for regular structures, induced (co)module laws for the rest.
    Probe {
        file: PathBuf,
        /// Number of probe objects: tensor powers of the carrier, unit first.
        #[arg(long, default_value_t = 3)]
        probes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip probe tuples whose evaluated matrix dimension exceeds this.
        #[arg(long, default_value_t = 1000)]
        max_dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Subcommand)]
enum DeriveCmd {
    /// Span of a named finite semigroup (left-zero-N, right-zero-N, zero-N,
    /// cyclic-N, semilattice-2).
    Semigroup {
        name: String,
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular structure of a named bimonoid (cyclic-N monoid span or
    /// exterior-line); the bimonoid itself is also written.
    Bimonoid {
        name: String,
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular structure of the dual of a named finite monoid (cyclic-N,
    /// semilattice-2).
    DualMonoid {
        name: String,
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the two-sided module determined by a plain action morphism
    /// (declared in the file with shape A.Q -> Q) and append it.
    ModuleFromAction {
        file: PathBuf,
        /// Name of the regular structure acted with.
        #[arg(long)]
        structure: String,
        /// Name of the action morphism.
        #[arg(long)]
        action: String,
        /// Name for the appended module.
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct StructureReport {
    name: String,
    kind: String,
    overall: bool,
    report: CheckReport,
}

#[derive(Serialize)]
struct RunReport {
    tool: String,
    version: String,
    command: String,
    file_hash: String,
    field: String,
    overall: bool,
    structures: Vec<StructureReport>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Axiom and hypothesis failures exit 1; malformed input exits 2.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) | Error::NotSurjective { .. } | Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().cmd {
        Cmd::Check {
            file,
            out,
            format,
            informational,
            parallel,
        } => cmd_check(&file, out.as_deref(), format, informational, parallel),
        Cmd::Derive { what } => cmd_derive(what),
        Cmd::Tensor {
            file,
            first,
            second,
            name,
            out,
        } => cmd_tensor(&file, &first, &second, &name, out.as_deref()),
        Cmd::Probe {
            file,
            probes,
            seed,
            max_dim,
            out,
            format,
            parallel,
        } => cmd_probe(&file, probes, seed, max_dim, out.as_deref(), format, parallel),
    }
}

fn load(path: &Path) -> Result<StructureFile, Error> {
    StructureFile::from_json(&std::fs::read_to_string(path)?)
}

fn check_structure(s: &ResolvedStructure, informational: bool) -> CheckReport {
    let mut rep = CheckReport::new();
    match s {
        ResolvedStructure::Fusion(f) => {
            rep.merge(check_fusion(f));
            rep.merge(check_derived_properties(f));
        }
        ResolvedStructure::Mbm(m) => {
            rep.merge(check_mbm(m));
            rep.merge(check_a12(m));
        }
        ResolvedStructure::Regular(r) => {
            rep.merge(check_regular(r));
            if informational {
                rep.merge(check_minimality_diagrams(r));
            }
        }
        ResolvedStructure::Bimonoid(b) => rep.merge(check_bimonoid(b)),
        ResolvedStructure::Comodule(c) => rep.merge(check_comodule(c)),
        ResolvedStructure::Module(m) => rep.merge(check_module(m)),
    }
    if !informational {
        rep.entries.retain(|e| !e.informational);
    }
    rep
}

fn probe_structure(s: &ResolvedStructure, probes: &[mbm::object::GradedObject], seed: u64, max_dim: usize) -> CheckReport {
    let set = ProbeSet {
        objects: probes.to_vec(),
        seed,
        max_dim,
    };
    let mut rep = CheckReport::new();
    match s {
        ResolvedStructure::Regular(r) => {
            rep.merge_prefixed("bicomonad: ", check_multiplier_bicomonad(r, &set));
            rep.merge_prefixed("bimonad: ", check_multiplier_bimonad(r, &set));
        }
        ResolvedStructure::Comodule(c) => {
            rep.merge_prefixed("induced comodule: ", check_induced_g_comodule(c, &set));
        }
        ResolvedStructure::Module(m) => {
            rep.merge_prefixed("induced module: ", check_induced_t_module(m, &set));
        }
        _ => {}
    }
    rep
}

fn run_reports<F>(
    structures: &[(String, ResolvedStructure)],
    parallel: bool,
    check: F,
) -> Vec<StructureReport>
where
    F: Fn(&ResolvedStructure) -> CheckReport + Sync,
{
    let build = |name: &String, s: &ResolvedStructure| {
        let report = check(s);
        StructureReport {
            name: name.clone(),
            kind: s.kind().to_string(),
            overall: report.overall(),
            report,
        }
    };
    if parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = structures
                .iter()
                .map(|(n, s)| scope.spawn(|| build(n, s)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("checker thread"))
                .collect()
        })
    } else {
        structures.iter().map(|(n, s)| build(n, s)).collect()
    }
}

fn emit(report: &RunReport, out: Option<&Path>, format: Format) -> Result<(), Error> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for sr in &report.structures {
                s.push_str(&format!(
                    "{} {} ({})\n",
                    if sr.overall { "PASS" } else { "FAIL" },
                    sr.name,
                    sr.kind
                ));
                for e in sr.report.entries.iter().filter(|e| !e.pass) {
                    s.push_str(&format!("  failed: {} [{}]\n", e.name, e.axiom));
                }
            }
            s.push_str(&format!(
                "OVERALL {}\n",
                if report.overall { "PASS" } else { "FAIL" }
            ));
            s
        }
    };
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verdict(overall: bool) -> ExitCode {
    if overall {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check(
    path: &Path,
    out: Option<&Path>,
    format: Format,
    informational: bool,
    parallel: bool,
) -> Result<ExitCode, Error> {
    let file = load(path)?;
    let resolved = file.resolve()?;
    let structures = run_reports(&resolved.structures, parallel, |s| {
        check_structure(s, informational)
    });
    let overall = structures.iter().all(|s| s.report.overall());
    let report = RunReport {
        tool: "mbm".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: "check".into(),
        file_hash: file.content_hash(),
        field: file.field.clone(),
        overall,
        structures,
    };
    emit(&report, out, format)?;
    Ok(verdict(overall))
}

fn cmd_probe(
    path: &Path,
    probes: usize,
    seed: u64,
    max_dim: usize,
    out: Option<&Path>,
    format: Format,
    parallel: bool,
) -> Result<ExitCode, Error> {
    let file = load(path)?;
    let resolved = file.resolve()?;
    // Probe objects: unit, carrier, carrier^2, ... of the first regular
    // structure; every structure in one file shares the base context.
    let carrier = resolved
        .structures
        .iter()
        .find_map(|(_, s)| match s {
            ResolvedStructure::Regular(r) => Some(r.a.clone()),
            _ => None,
        })
        .ok_or_else(|| Error::Parse("probe requires a regular structure".into()))?;
    let ctx = &resolved.ctx;
    let mut objects = vec![ctx.unit_object()];
    for _ in 1..probes.max(1) {
        let last = objects.last().unwrap().clone();
        objects.push(ctx.tensor_obj(&last, &carrier));
    }
    let structures = run_reports(&resolved.structures, parallel, |s| {
        probe_structure(s, &objects, seed, max_dim)
    });
    let overall = structures.iter().all(|s| s.report.overall());
    let report = RunReport {
        tool: "mbm".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: "probe".into(),
        file_hash: file.content_hash(),
        field: file.field.clone(),
        overall,
        structures,
    };
    emit(&report, out, format)?;
    Ok(verdict(overall))
}

fn semigroup_by_name(name: &str) -> Result<SemigroupTable, Error> {
    let parse_n = |rest: &str| {
        rest.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad size in semigroup name {name}")))
    };
    if let Some(rest) = name.strip_prefix("left-zero-") {
        Ok(SemigroupTable::left_zero(parse_n(rest)?))
    } else if let Some(rest) = name.strip_prefix("right-zero-") {
        Ok(SemigroupTable::right_zero(parse_n(rest)?))
    } else if let Some(rest) = name.strip_prefix("zero-") {
        Ok(SemigroupTable::zero(parse_n(rest)?))
    } else if let Some(rest) = name.strip_prefix("cyclic-") {
        Ok(SemigroupTable::cyclic_group(parse_n(rest)?))
    } else if name == "semilattice-2" {
        Ok(SemigroupTable::semilattice2())
    } else {
        Err(Error::Parse(format!("unknown semigroup {name}")))
    }
}

fn write_file(file: &StructureFile, out: Option<&Path>) -> Result<(), Error> {
    let text = file.to_canonical_json();
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_derive(what: DeriveCmd) -> Result<ExitCode, Error> {
    match what {
        DeriveCmd::Semigroup { name, field, out } => {
            let field = FieldSpec::parse(&field)?;
            let r = from_semigroup(&semigroup_by_name(&name)?, field)?;
            let mut b = FileBuilder::new(&r.ctx)?;
            b.add_regular(&name, &r)?;
            write_file(&b.finish(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        DeriveCmd::Bimonoid { name, field, out } => {
            let field = FieldSpec::parse(&field)?;
            let bi = if name == "exterior-line" {
                exterior_line(field)?
            } else {
                span_of_monoid(&semigroup_by_name(&name)?, field)?
            };
            let r = from_bimonoid(&bi)?;
            let mut b = FileBuilder::new(&r.ctx)?;
            b.add_bimonoid(&name, &bi)?;
            b.add_regular(&format!("{name}-regular"), &r)?;
            write_file(&b.finish(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        DeriveCmd::DualMonoid { name, field, out } => {
            let field = FieldSpec::parse(&field)?;
            let bi = dual_of_finite_monoid(&semigroup_by_name(&name)?, field)?;
            let r = from_bimonoid(&bi)?;
            let mut b = FileBuilder::new(&r.ctx)?;
            b.add_bimonoid(&format!("dual-{name}"), &bi)?;
            b.add_regular(&format!("dual-{name}-regular"), &r)?;
            write_file(&b.finish(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        DeriveCmd::ModuleFromAction {
            file,
            structure,
            action,
            name,
            out,
        } => {
            let parsed = load(&file)?;
            let resolved = parsed.resolve()?;
            let r = resolved
                .structures
                .iter()
                .find_map(|(n, s)| match s {
                    ResolvedStructure::Regular(r) if n == &structure => Some(r.clone()),
                    _ => None,
                })
                .ok_or_else(|| {
                    Error::Parse(format!("{structure} is not a regular structure in the file"))
                })?;
            let q = resolved
                .morphisms
                .get(&action)
                .ok_or_else(|| Error::Parse(format!("unknown morphism {action}")))?;
            let md = module_from_action_vec(
                &r,
                &VecAction {
                    q_obj: q.cod.clone(),
                    q: q.clone(),
                },
            )?;
            let mut b = FileBuilder::from_file(parsed);
            b.add_module(&name, &structure, &md)?;
            write_file(&b.finish(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_tensor(
    path: &Path,
    first: &str,
    second: &str,
    name: &str,
    out: Option<&Path>,
) -> Result<ExitCode, Error> {
    let file = load(path)?;
    let resolved = file.resolve()?;
    let find = |n: &str| {
        resolved
            .structures
            .iter()
            .find(|(sn, _)| sn == n)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::Parse(format!("unknown structure {n}")))
    };
    let of_name = |n: &str| -> Result<String, Error> {
        file.structures
            .iter()
            .find(|d| d.name == n)
            .and_then(|d| d.refs.get("of").cloned())
            .ok_or_else(|| Error::Parse(format!("structure {n} has no underlying structure")))
    };
    let (of1, of2) = (of_name(first)?, of_name(second)?);
    // Tensoring is only defined over the same structure; compare the
    // content-addressed slices so equal copies under different names work.
    if file.slice_for(&of1)?.content_hash() != file.slice_for(&of2)?.content_hash() {
        return Err(Error::Parse(format!(
            "underlying structures {of1} and {of2} differ"
        )));
    }
    let mut b = FileBuilder::from_file(file.clone());
    match (find(first)?, find(second)?) {
        (ResolvedStructure::Comodule(c), ResolvedStructure::Comodule(d)) => {
            b.add_comodule(name, &of1, &tensor_comodules(c, d)?)?;
        }
        (ResolvedStructure::Module(p), ResolvedStructure::Module(q)) => {
            b.add_module(name, &of1, &tensor_modules(p, q)?)?;
        }
        _ => {
            return Err(Error::Parse(
                "tensor requires two comodules or two modules".into(),
            ))
        }
    }
    write_file(&b.finish(), out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
