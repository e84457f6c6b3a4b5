use std::ops::RangeInclusive;

use clap::Args;
use serde_json::json;

use nagaolab_core::ring::{sn_witness_search, SearchLimits};
use nagaolab_core::witnesses::{
    kernel_combination_check, verify_witness_suite, CheckStatus, WitnessCaps, WitnessError, WitnessReport,
};

use crate::output::aligned;
use crate::{render_json, CliError, Format, Outcome};

#[derive(Args)]
pub struct VerifyArgs {
    /// Prime range and index range, e.g. `2..3 1..2` (inclusive).
    #[arg(long, num_args = 2, value_names = ["P_RANGE", "K_RANGE"], conflicts_with = "sn", required_unless_present = "sn")]
    witness: Option<Vec<String>>,
    /// Search mod P for N units with all nonempty subset sums units.
    #[arg(long, num_args = 2, value_names = ["P", "N"])]
    sn: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-element range.
fn parse_range(s: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || CliError::usage(format!("bad range {s:?}; expected a..b or a single number"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn witness_error(e: WitnessError) -> CliError {
    match e {
        WitnessError::Inconsistent(_) => CliError::failure(e.to_string()),
        _ => CliError::usage(e.to_string()),
    }
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Informational => "info",
    }
}

fn run_witness(ranges: &[String], format: Format) -> Result<Outcome, CliError> {
    let ps = parse_range(&ranges[0])?;
    let ks = parse_range(&ranges[1])?;
    let k_lo = u32::try_from(*ks.start()).map_err(|_| CliError::usage("k out of range"))?;
    let k_hi = u32::try_from(*ks.end()).map_err(|_| CliError::usage("k out of range"))?;
    let mut report = verify_witness_suite(ps.clone(), k_lo..=k_hi, WitnessCaps::default()).map_err(witness_error)?;
    for p in ps.filter(|p| *p == 2 || *p == 3) {
        for k in k_lo..=k_hi {
            report
                .entries
                .extend(kernel_combination_check(p, k).map_err(witness_error)?.entries);
        }
    }
    let summary = |r: &WitnessReport| {
        (
            r.count(CheckStatus::Pass),
            r.count(CheckStatus::Fail),
            r.count(CheckStatus::Informational),
        )
    };
    let (pass, fail, info) = summary(&report);
    let stdout = match format {
        Format::Json => render_json(&json!({
            "entries": report.entries,
            "summary": {"pass": pass, "fail": fail, "informational": info},
        })),
        Format::Text => {
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|e| vec![status_str(e.status).to_string(), e.id.clone(), e.statement.clone()])
                .collect();
            let mut s = aligned(&["status", "id", "statement"], &rows);
            s.push_str(&format!("\n{pass} passed, {fail} failed, {info} informational\n"));
            s
        }
        Format::Csv => return Err(CliError::usage("verify supports --format text or json")),
    };
    Ok(Outcome {
        stdout,
        code: if report.all_asserted_pass() { 0 } else { 1 },
    })
}

fn run_sn(args: &[u64], format: Format) -> Result<Outcome, CliError> {
    let (p, n) = (args[0], args[1]);
    let n = usize::try_from(n).map_err(|_| CliError::usage("n out of range"))?;
    let w = sn_witness_search(p, n, SearchLimits::default()).map_err(|e| CliError::usage(e.to_string()))?;
    let stdout = match format {
        Format::Json => render_json(&serde_json::to_value(&w).expect("witness serializes")),
        Format::Text => match &w.residues {
            Some(r) => {
                let r: Vec<String> = r.iter().map(u64::to_string).collect();
                format!("S({n}) mod {p}: witness ({})\n", r.join(", "))
            }
            None => format!("S({n}) mod {p}: none exists\n"),
        },
        Format::Csv => return Err(CliError::usage("verify supports --format text or json")),
    };
    Ok(Outcome::ok(stdout))
}

pub fn run(args: VerifyArgs) -> Result<Outcome, CliError> {
    match (&args.witness, &args.sn) {
        (Some(r), _) => run_witness(r, args.format),
        (None, Some(sn)) => run_sn(sn, args.format),
        (None, None) => Err(CliError::usage("give --witness or --sn")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..3").unwrap(), 2..=3);
        assert_eq!(parse_range("2..=5").unwrap(), 2..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("3..2").is_err());
        assert!(parse_range("a..2").is_err());
    }
}
