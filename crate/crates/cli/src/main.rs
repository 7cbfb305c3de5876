mod args;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::json;
use serre_core::{
    canonical_rep, canonicalize, decompose_induced, dual_weight, enumerate_weights, equivalent,
    frobenius_orbit, generic_congruence_facts, hodge_type, inertial_candidates, is_generic,
    jh_factors, verify_congruence_case, verify_range, verify_weight_case, w_explicit_I,
    w_explicit_I_contains, CharExponent, Gl3Weight, LocalWeight, OddPrime, ResidueDegree,
    TameInertialType, WeightOutcome,
};

use args::{Cli, Command, ExplicitCommand, Format, Gl3Command, WeightsCommand};

/// How a command ended, beyond plain success.
enum Failure {
    /// A check ran and did not pass.
    Verification,
    Usage(String),
    /// Well-formed inputs that do not fit together.
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output(cli.format);
    let result = match cli.command {
        Command::Orbits { l, niveau, exp } => orbits(out, l, niveau, exp),
        Command::Weights(cmd) => weights(out, cmd),
        Command::Explicit(cmd) => explicit(out, cmd),
        Command::Gl3(cmd) => gl3(out, cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Verification => {}
                Failure::Usage(msg) | Failure::Mismatch(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}

#[derive(Clone, Copy)]
struct Output(Format);

impl Output {
    /// Prints `text` or the JSON encoding of `value`, depending on the format.
    fn emit<T: Serialize>(self, value: &T, text: impl FnOnce() -> String) {
        match self.0 {
            Format::Text => println!("{}", text()),
            Format::Json => println!("{}", serde_json::to_string(value).expect("serializable")),
        }
    }
}

fn usage(e: serre_core::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn paren(w: &LocalWeight) -> String {
    format!("({w})")
}

fn joined<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct OrbitRecord {
    l: OddPrime,
    niveau: u32,
    exponent: u64,
    orbit: Vec<u64>,
    decomposition: Vec<CharExponent>,
}

fn orbits(out: Output, l: OddPrime, niveau: u32, exp: i128) -> Outcome {
    let orbit: Vec<u64> = frobenius_orbit(l, niveau, exp)
        .map_err(usage)?
        .into_iter()
        .collect();
    let decomposition = decompose_induced(l, niveau, exp).map_err(usage)?;
    let record = OrbitRecord {
        l,
        niveau,
        exponent: CharExponent::new(l, niveau, exp).map_err(usage)?.exponent,
        orbit,
        decomposition,
    };
    out.emit(&record, || {
        let first = &record.decomposition[0];
        format!(
            "orbit {{{}}}\ndecomposition ({},{})x{}",
            joined(&record.orbit, u64::to_string),
            first.niveau,
            first.exponent,
            record.decomposition.len()
        )
    });
    Ok(())
}

fn weights(out: Output, cmd: WeightsCommand) -> Outcome {
    match cmd {
        WeightsCommand::Enumerate { prime, n } => {
            if n == 0 {
                return Err(Failure::Usage("rank must be positive".into()));
            }
            let reps = enumerate_weights(prime.l, n);
            out.emit(&reps, || {
                reps.iter().map(paren).collect::<Vec<_>>().join("\n")
            });
        }
        WeightsCommand::Equivalent { prime, a, b } => {
            if a.rank() != b.rank() {
                return Err(rank_mismatch(a.rank(), b.rank()));
            }
            let eq = equivalent(prime.l, ResidueDegree::ONE, &[a], &[b]);
            out.emit(&json!({ "equivalent": eq }), || eq.to_string());
        }
        WeightsCommand::Canonical { prime, weight } => {
            let rep = canonical_rep(prime.l, &weight.weight);
            out.emit(&rep, || rep.to_string());
        }
        WeightsCommand::Hodge { weight } => {
            let ht = hodge_type(&weight.weight);
            out.emit(&json!({ "hodge_type": ht }), || joined(&ht, i64::to_string));
        }
        WeightsCommand::Dual { weight } => {
            let d = dual_weight(&weight.weight);
            out.emit(&d, || d.to_string());
        }
    }
    Ok(())
}

fn rank_mismatch(expected: usize, found: usize) -> Failure {
    Failure::Mismatch(serre_core::Error::RankMismatch { expected, found }.to_string())
}

/// A type record as accepted on the command line; `l` may be left out.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TypeArg {
    l: Option<i64>,
    pieces: Vec<PieceArg>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PieceArg {
    niveau: u32,
    exponent: i128,
}

fn parse_type(l: OddPrime, text: &str) -> Result<TameInertialType, Failure> {
    let arg: TypeArg = serde_json::from_str(text)
        .map_err(|e| Failure::Usage(format!("bad --type record: {e}")))?;
    if let Some(given) = arg.l {
        if given != l.get() as i64 {
            return Err(Failure::Mismatch(format!(
                "type is over l={given} but --l is {l}"
            )));
        }
    }
    let raw: Vec<(u32, i128)> = arg.pieces.iter().map(|p| (p.niveau, p.exponent)).collect();
    canonicalize(l, &raw).map_err(usage)
}

fn explicit(out: Output, cmd: ExplicitCommand) -> Outcome {
    match cmd {
        ExplicitCommand::Candidates { prime, weight } => {
            let set = inertial_candidates(prime.l, &weight.weight);
            out.emit(&set, || {
                set.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        ExplicitCommand::Membership { prime, weight, ty } => {
            let tau = parse_type(prime.l, &ty)?;
            let a = weight.weight;
            if tau.dimension() != a.rank() {
                return Err(rank_mismatch(tau.dimension(), a.rank()));
            }
            let member = w_explicit_I_contains(prime.l, &tau, &a).map_err(usage)?;
            out.emit(&json!({ "member": member }), || member.to_string());
        }
        ExplicitCommand::Weights { prime, n, ty } => {
            let tau = parse_type(prime.l, &ty)?;
            if tau.dimension() != n {
                return Err(rank_mismatch(n, tau.dimension()));
            }
            let ws = w_explicit_I(prime.l, n, &tau).map_err(usage)?;
            out.emit(&ws, || ws.iter().map(paren).collect::<Vec<_>>().join("\n"));
        }
    }
    Ok(())
}

fn rank_three(w: LocalWeight) -> Result<Gl3Weight, Failure> {
    let rank = w.rank();
    Gl3Weight::try_from(w).map_err(|_| rank_mismatch(3, rank))
}

fn gl3(out: Output, cmd: Gl3Command) -> Outcome {
    match cmd {
        Gl3Command::Jh { prime, weight } => {
            let factors = jh_factors(prime.l, &rank_three(weight.weight)?);
            out.emit(&factors, || joined(&factors, ToString::to_string));
        }
        Gl3Command::Generic {
            prime,
            weight,
            refined,
            niveau,
        } => {
            if niveau.is_some() && !refined {
                return Err(Failure::Usage(
                    "--niveau only applies with --refined".into(),
                ));
            }
            let generic = is_generic(prime.l, &rank_three(weight.weight)?, refined, niveau);
            out.emit(&json!({ "generic": generic }), || generic.to_string());
        }
        Gl3Command::Facts { prime, weight } => {
            let facts = generic_congruence_facts(prime.l, &rank_three(weight.weight)?);
            out.emit(&facts, || {
                let mut lines: Vec<String> = facts
                    .facts
                    .iter()
                    .enumerate()
                    .map(|(i, f)| format!("C{} {f}", i + 1))
                    .collect();
                lines.push(format!("precondition {}", facts.precondition));
                lines.join("\n")
            });
        }
        Gl3Command::Case {
            prime,
            case,
            check_simplification,
        } => {
            let holds = verify_congruence_case(prime.l, case, check_simplification);
            out.emit(
                &json!({ "l": prime.l, "case": case, "holds": holds }),
                || holds.to_string(),
            );
            if !holds {
                return Err(Failure::Verification);
            }
        }
        Gl3Command::WeightCase { prime, weight } => {
            let outcome = verify_weight_case(prime.l, &rank_three(weight.weight)?);
            let (kind, witness) = match &outcome {
                WeightOutcome::NotApplicable => ("not_applicable", None),
                WeightOutcome::Disjoint => ("disjoint", None),
                WeightOutcome::Intersects(t) => ("intersects", Some(t)),
            };
            out.emit(
                &json!({ "outcome": kind, "witness": witness }),
                || match witness {
                    Some(t) => format!("{kind} {t}"),
                    None => kind.to_string(),
                },
            );
        }
        Gl3Command::Verify {
            l_min,
            l_max,
            refined,
        } => {
            if l_min > l_max {
                return Err(Failure::Usage(format!("empty range [{l_min}, {l_max}]")));
            }
            let start = Instant::now();
            let report = verify_range(l_min, l_max, refined);
            eprintln!("verified in {} ms", start.elapsed().as_millis());
            out.emit(&report, || {
                let mut lines = vec![format!(
                    "l in [{l_min}, {l_max}]{}: examined {}, generic {}, skipped {}, failures {}",
                    if refined { " (refined)" } else { "" },
                    report.examined,
                    report.generic,
                    report.skipped.len(),
                    report.failures.len()
                )];
                lines.extend(
                    report
                        .failures
                        .iter()
                        .map(|f| format!("  {}", serde_json::to_string(f).unwrap())),
                );
                lines.push(if report.pass { "pass" } else { "FAIL" }.to_string());
                lines.join("\n")
            });
            if !report.pass {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
