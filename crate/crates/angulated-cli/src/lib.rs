//! Argument parsing and command dispatch for the `angulated` binary.
//!
//! Every verb reads JSON inputs (file paths, or `-` for standard input,
//! which may be used once per invocation), prints a JSON report on standard
//! output, and exits 0 when everything passed, 1 when a check ran and
//! failed, and 2 when the input could not be processed.  All numbers in
//! reports are exact rationals rendered as `"p/q"` strings.

use std::fs;
use std::io::Read as _;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use angulated::{
    angle_closure, build_cone, builtin_entries, check_rank_on_objects, decompose_integral,
    decompose_invariant, extreme_rays, find_entry, generate_angle_padded, hilbert_basis,
    phi_eval, psi_mod_eval, rm_axiom_suite, schanuel_check, twist_data, validate_skeleton,
    varphi_eval, AdditiveFn, CategorySkeleton, DecompositionOutcome, EngineContext, Error,
    ErrorKind, GalleryEntry, IndecId, IntegerLattice, MarkedAngle, NakayamaAlgebra,
    NakayamaModule, ObjectClass, ObjectRankProc, Pad, ProjMorphism, RankOnMorphismsView,
    RankOnObjects, Result, SchanuelOutcome,
};

#[derive(Parser)]
#[command(
    name = "angulated",
    version,
    about = "Rank functions, additive invariants, and cones over angulated skeletons"
)]
struct Cli {
    /// Closure depth override; defaults to the order of the suspension.
    #[arg(long, global = true)]
    depth: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a skeleton is well formed
    Validate {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
    },
    /// Check the object axioms of a rank function on the angle closure
    CheckRo {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
        /// Rank JSON; defaults to the first reference rank of a gallery entry
        rank: Option<String>,
    },
    /// Check the morphism axioms induced by a rank function (odd d only)
    CheckRm {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
        /// Rank JSON; defaults to the first reference rank of a gallery entry
        rank: Option<String>,
    },
    /// Alternating half-sum of a closure angle under a rank function (odd d)
    Psi {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
        /// Rank JSON; defaults to the first reference rank of a gallery entry
        rank: Option<String>,
        /// Index into the angle closure
        #[arg(long)]
        angle: usize,
    },
    /// Value of an object class recovered from the morphism side (any d)
    Phi {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
        /// Rank JSON; defaults to the first reference rank of a gallery entry
        rank: Option<String>,
        /// Comma-separated indecomposable labels; empty for the zero object
        #[arg(long)]
        object: String,
    },
    /// Additive value of the image of a morphism between projectives
    Varphi {
        /// Algebra JSON (path or '-')
        algebra: String,
        /// Additive-function JSON (path or '-')
        additive: String,
        /// Morphism JSON (path or '-')
        morphism: String,
    },
    /// Value of a module under a rank function via its presenting morphism
    PsiMod {
        /// Algebra JSON (path or '-')
        algebra: String,
        /// Rank JSON over the projective labels (path or '-')
        rank: String,
        /// Module JSON (path or '-')
        module: String,
        /// Angle dimension of the induced skeleton (odd)
        #[arg(long)]
        d: u32,
    },
    /// Write an invariant additive function as a sum of orbit indicators
    Decompose {
        /// Algebra JSON (path or '-')
        algebra: String,
        /// Additive-function JSON (path or '-')
        additive: String,
        /// Angle dimension fixing the twist (odd)
        #[arg(long)]
        d: u32,
    },
    /// Rational-cone tools over the rank cone of a skeleton
    Cone {
        #[command(subcommand)]
        action: ConeAction,
    },
    /// Compare two generated angles presenting the same module
    Schanuel {
        /// Algebra JSON (path or '-')
        algebra: String,
        /// First module JSON (path or '-')
        module_a: String,
        /// Second module JSON (path or '-')
        module_b: String,
        /// Angle dimension (odd)
        #[arg(long)]
        d: u32,
        /// Trivial-complex pad for the first angle
        #[arg(long = "pad-a", value_name = "STAGE:VERTEX")]
        pad_a: Vec<String>,
        /// Trivial-complex pad for the second angle
        #[arg(long = "pad-b", value_name = "STAGE:VERTEX")]
        pad_b: Vec<String>,
    },
    /// List or emit the built-in example gallery
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ConeAction {
    /// Extreme rays of the rank cone
    Rays {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
    },
    /// Hilbert basis of the integral points of the rank cone
    Hilbert {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
        /// Restrict to vectors whose defects are all even
        #[arg(long)]
        even_defect_lattice: bool,
    },
    /// Decompose a rank function over the Hilbert basis
    Decompose {
        /// Skeleton or gallery-entry JSON (path, or '-' for stdin)
        #[arg(default_value = "-")]
        skeleton: String,
        /// Rank JSON; defaults to the first reference rank of a gallery entry
        rank: Option<String>,
        /// Restrict to vectors whose defects are all even
        #[arg(long)]
        even_defect_lattice: bool,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// Names, notes, and reference ranks of the built-in entries
    List,
    /// Print one entry as JSON
    Emit { name: String },
}

/// Tracks standard input so two arguments cannot both consume it.
struct Inputs {
    stdin_used: bool,
}

impl Inputs {
    fn new() -> Self {
        Inputs { stdin_used: false }
    }

    fn read(&mut self, arg: &str) -> Result<String> {
        if arg == "-" {
            if self.stdin_used {
                return Err(Error::invalid(
                    "standard input may only be read once per invocation",
                ));
            }
            self.stdin_used = true;
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::invalid(format!("reading standard input: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(arg).map_err(|e| Error::invalid(format!("reading '{arg}': {e}")))
        }
    }
}

struct SkeletonSource {
    skeleton: CategorySkeleton,
    default_rank: Option<RankOnObjects>,
}

/// Accepts either a bare skeleton or a gallery entry; entries contribute
/// their first reference rank as the default rank argument.
fn load_skeleton(inputs: &mut Inputs, arg: &str) -> Result<SkeletonSource> {
    let text = inputs.read(arg)?;
    let looks_like_entry = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .is_some_and(|v| v.get("reference_ranks").is_some() || v.get("skeleton").is_some());
    if looks_like_entry {
        let entry = GalleryEntry::from_json(&text)?;
        Ok(SkeletonSource {
            skeleton: entry.skeleton,
            default_rank: entry.reference_ranks.into_iter().next().map(|r| r.rank),
        })
    } else {
        Ok(SkeletonSource {
            skeleton: CategorySkeleton::from_json(&text)?,
            default_rank: None,
        })
    }
}

fn resolve_rank(
    inputs: &mut Inputs,
    source: &mut SkeletonSource,
    rank: &Option<String>,
) -> Result<RankOnObjects> {
    match rank {
        Some(arg) => RankOnObjects::from_json(&inputs.read(arg)?),
        None => source.default_rank.take().ok_or_else(|| {
            Error::invalid(
                "no rank function given: pass one as an argument or use a gallery entry \
                 with reference ranks",
            )
        }),
    }
}

fn parse_pad(text: &str) -> Result<Pad> {
    let bad = || Error::invalid(format!("pad '{text}' is not of the form STAGE:VERTEX"));
    let (stage, vertex) = text.split_once(':').ok_or_else(bad)?;
    Ok(Pad {
        stage: stage.trim().parse().map_err(|_| bad())?,
        vertex: vertex.trim().parse().map_err(|_| bad())?,
    })
}

fn parse_pads(texts: &[String]) -> Result<Vec<Pad>> {
    texts.iter().map(|t| parse_pad(t)).collect()
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn lattice_of(even_defect_lattice: bool) -> IntegerLattice {
    if even_defect_lattice {
        IntegerLattice::EvenDefects
    } else {
        IntegerLattice::All
    }
}

fn run_cone(inputs: &mut Inputs, depth: Option<u32>, action: ConeAction) -> Result<i32> {
    match action {
        ConeAction::Rays { skeleton } => {
            let source = load_skeleton(inputs, &skeleton)?;
            let cone = build_cone(&source.skeleton, depth)?;
            let rays = extreme_rays(&cone)?;
            emit(&json!({ "labels": cone.labels(), "rays": rays }));
            Ok(0)
        }
        ConeAction::Hilbert {
            skeleton,
            even_defect_lattice,
        } => {
            let source = load_skeleton(inputs, &skeleton)?;
            let cone = build_cone(&source.skeleton, depth)?;
            let basis = hilbert_basis(&cone, lattice_of(even_defect_lattice))?;
            emit(&json!({ "labels": cone.labels(), "basis": basis }));
            Ok(0)
        }
        ConeAction::Decompose {
            skeleton,
            rank,
            even_defect_lattice,
        } => {
            let mut source = load_skeleton(inputs, &skeleton)?;
            let r = resolve_rank(inputs, &mut source, &rank)?;
            let cone = build_cone(&source.skeleton, depth)?;
            let outcome = decompose_integral(&r, &cone, lattice_of(even_defect_lattice))?;
            emit(&outcome);
            Ok(match outcome {
                DecompositionOutcome::Unique { .. } | DecompositionOutcome::Multiple { .. } => 0,
                _ => 1,
            })
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    let mut inputs = Inputs::new();
    let depth = cli.depth;
    match cli.command {
        Command::Validate { skeleton } => {
            let source = load_skeleton(&mut inputs, &skeleton)?;
            let report = validate_skeleton(&source.skeleton);
            emit(&report);
            Ok(if report.is_valid() { 0 } else { 1 })
        }
        Command::CheckRo { skeleton, rank } => {
            let mut source = load_skeleton(&mut inputs, &skeleton)?;
            let r = resolve_rank(&mut inputs, &mut source, &rank)?;
            let report = check_rank_on_objects(&r, &source.skeleton, depth)?;
            emit(&report);
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::CheckRm { skeleton, rank } => {
            let mut source = load_skeleton(&mut inputs, &skeleton)?;
            let r = resolve_rank(&mut inputs, &mut source, &rank)?;
            let report = rm_axiom_suite(&r, &source.skeleton, depth)?;
            emit(&report);
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Psi {
            skeleton,
            rank,
            angle,
        } => {
            let mut source = load_skeleton(&mut inputs, &skeleton)?;
            let r = resolve_rank(&mut inputs, &mut source, &rank)?;
            let closure = angle_closure(&source.skeleton, depth)?;
            let template = closure.get(angle).ok_or_else(|| {
                Error::invalid(format!(
                    "angle index {angle} is out of range: the closure has {} angles",
                    closure.len()
                ))
            })?;
            let view = RankOnMorphismsView::new(&r, &source.skeleton, depth)?;
            let value = view.psi(&MarkedAngle(template.clone()))?;
            emit(&json!({ "angle": template, "psi": value }));
            Ok(0)
        }
        Command::Phi {
            skeleton,
            rank,
            object,
        } => {
            let mut source = load_skeleton(&mut inputs, &skeleton)?;
            let r = resolve_rank(&mut inputs, &mut source, &rank)?;
            let labels: Vec<IndecId> = if object.trim().is_empty() {
                Vec::new()
            } else {
                object.split(',').map(|s| IndecId::from(s.trim())).collect()
            };
            let class = ObjectClass::new(labels);
            let view = RankOnMorphismsView::new(&r, &source.skeleton, depth)?;
            let value = phi_eval(&view, &class)?;
            emit(&json!({ "object": class, "phi": value }));
            Ok(0)
        }
        Command::Varphi {
            algebra,
            additive,
            morphism,
        } => {
            let a = NakayamaAlgebra::from_json(&inputs.read(&algebra)?)?;
            let alpha = AdditiveFn::from_json(&inputs.read(&additive)?)?;
            let f = ProjMorphism::from_json(&a, &inputs.read(&morphism)?)?;
            let value = varphi_eval(&alpha, &f)?;
            emit(&json!({ "varphi": value }));
            Ok(0)
        }
        Command::PsiMod {
            algebra,
            rank,
            module,
            d,
        } => {
            let a = NakayamaAlgebra::from_json(&inputs.read(&algebra)?)?;
            let ctx = EngineContext::new(a, d)?;
            let r = RankOnObjects::from_json(&inputs.read(&rank)?)?;
            let m = NakayamaModule::from_json(&a, &inputs.read(&module)?)?;
            let proc = ObjectRankProc {
                ctx: &ctx,
                rank: &r,
            };
            let value = psi_mod_eval(&proc, &a, &m)?;
            emit(&json!({ "psi": value }));
            Ok(0)
        }
        Command::Decompose {
            algebra,
            additive,
            d,
        } => {
            let a = NakayamaAlgebra::from_json(&inputs.read(&algebra)?)?;
            let twist = twist_data(&a, d)?;
            let alpha = AdditiveFn::from_json(&inputs.read(&additive)?)?;
            let terms = decompose_invariant(&alpha, &twist)?;
            emit(&terms);
            Ok(0)
        }
        Command::Cone { action } => run_cone(&mut inputs, depth, action),
        Command::Schanuel {
            algebra,
            module_a,
            module_b,
            d,
            pad_a,
            pad_b,
        } => {
            let a = NakayamaAlgebra::from_json(&inputs.read(&algebra)?)?;
            let ma = NakayamaModule::from_json(&a, &inputs.read(&module_a)?)?;
            let mb = NakayamaModule::from_json(&a, &inputs.read(&module_b)?)?;
            let x = generate_angle_padded(&a, d, &ma, &parse_pads(&pad_a)?)?;
            let y = generate_angle_padded(&a, d, &mb, &parse_pads(&pad_b)?)?;
            let outcome = schanuel_check(&x, &y)?;
            emit(&outcome);
            Ok(match outcome {
                SchanuelOutcome::Compared {
                    identity_holds: true,
                    ..
                } => 0,
                _ => 1,
            })
        }
        Command::Examples { action } => match action {
            ExamplesAction::List => {
                let rows: Vec<serde_json::Value> = builtin_entries()?
                    .into_iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "notes": e.notes,
                            "reference_ranks": e
                                .reference_ranks
                                .iter()
                                .map(|r| r.name.clone())
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                emit(&rows);
                Ok(0)
            }
            ExamplesAction::Emit { name } => {
                emit(&find_entry(&name)?);
                Ok(0)
            }
        },
    }
}

/// Runs the command line given in `argv` (including the program name) and
/// returns the process exit code: 0 on success, 1 when a check fails, 2 on
/// bad input.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err.kind() {
                ErrorKind::CheckFailure => 1,
                ErrorKind::Input => 2,
            }
        }
    }
}
