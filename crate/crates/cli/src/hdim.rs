use clap::Args;
use serde_json::json;

use nagaolab_core::homology::{
    coinvariant_dims, h_table, mv_ledger_check, CoinvOptions, GroupId, HomologyError, MvLedgerEntry,
};
use nagaolab_core::json::{rows_to_csv, rows_to_json, table_rows, DimRow};

use crate::output::aligned;
use crate::{render_json, CliError, Format, Outcome};

const DEFAULT_MAX_DEG_CAP: u64 = 16;
const MAX_I_CAP: u64 = 64;
const COINV_FLAG: &str = "coinv:t-wedge";

#[derive(Args)]
pub struct HdimArgs {
    /// One of tzt, tfpt, bz, bzt, bfp, bfpt, sl2z, e2zt, sl2fpt.
    #[arg(long, required_unless_present_any = ["ledger", "integral"])]
    group: Option<String>,
    /// Coefficient field F_p.
    #[arg(long = "mod", value_name = "P")]
    modulus: u64,
    #[arg(long, default_value_t = 8)]
    max_i: u64,
    /// Truncation degree: polynomials span t^0..t^d.
    #[arg(long, default_value_t = 4)]
    max_deg: u64,
    /// Add the pure-wedge coinvariant rows of t·F_p[t] (groups bfp, bfpt).
    #[arg(long)]
    coinv: bool,
    /// Check dim H_i(E2(Z[t])) = dim H_i(B(Z[t])) + dim H_i(SL2(Z)) - dim H_i(B(Z)).
    #[arg(long)]
    ledger: bool,
    /// Integral homology (not tabulated).
    #[arg(long)]
    integral: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn max_deg_cap() -> Result<u64, CliError> {
    match std::env::var("NAGAOLAB_MAX_DEG") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("NAGAOLAB_MAX_DEG must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DEG_CAP),
    }
}

fn homology_error(e: HomologyError) -> CliError {
    match e {
        HomologyError::Unsupported { .. } => CliError::out_of_scope(e.to_string()),
        _ => CliError::usage(e.to_string()),
    }
}

fn ledger_text(entries: &[MvLedgerEntry]) -> String {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.p.to_string(),
                e.i.to_string(),
                e.d.to_string(),
                e.e2zt.to_string(),
                e.bzt.to_string(),
                e.sl2z.to_string(),
                e.bz.to_string(),
                if e.holds { "ok" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    aligned(&["p", "i", "d", "e2zt", "bzt", "sl2z", "bz", "ledger"], &rows)
}

fn ledger_csv(entries: &[MvLedgerEntry]) -> String {
    let mut s = String::from("p,i,d,e2zt,bzt,sl2z,bz,holds\n");
    for e in entries {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            e.p, e.i, e.d, e.e2zt, e.bzt, e.sl2z, e.bz, e.holds
        ));
    }
    s
}

fn rows_text(rows: &[DimRow]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.group.clone(),
                r.p.to_string(),
                r.d.to_string(),
                r.i.to_string(),
                r.dim.to_string(),
                r.flags.clone(),
            ]
        })
        .collect();
    aligned(&["group", "p", "d", "i", "dim", "flags"], &cells)
}

pub fn run(args: HdimArgs) -> Result<Outcome, CliError> {
    if args.integral {
        return Err(CliError::out_of_scope(
            "integral homology is not tabulated: the Künneth sequence for B(Z[t]) over Z carries Tor \
             terms, and the finite-group homology of SL2(F_p) is not computed; only F_p dimensions \
             (and symbolic wedge classes) are available",
        ));
    }
    let cap = max_deg_cap()?;
    if args.max_deg > cap {
        return Err(CliError::usage(format!(
            "--max-deg {} exceeds the truncation cap {cap} (set NAGAOLAB_MAX_DEG to raise it)",
            args.max_deg
        )));
    }
    if args.max_i > MAX_I_CAP {
        return Err(CliError::usage(format!("--max-i {} exceeds {MAX_I_CAP}", args.max_i)));
    }
    let (p, d) = (args.modulus, args.max_deg);

    let mut rows = Vec::new();
    if let Some(g) = &args.group {
        let group: GroupId = g.parse().map_err(|e: HomologyError| {
            let names: Vec<&str> = GroupId::ALL.iter().map(|g| g.as_str()).collect();
            CliError::usage(format!("{e}; expected one of {}", names.join(", ")))
        })?;
        rows = table_rows(&h_table(group, p, args.max_i, d).map_err(homology_error)?);
        if args.coinv {
            if !matches!(group, GroupId::Bfp | GroupId::Bfpt) {
                return Err(CliError::usage("--coinv applies to --group bfp or bfpt"));
            }
            let d_coinv = if group == GroupId::Bfp { 0 } else { d };
            for i in 0..=args.max_i {
                rows.push(DimRow {
                    group: group.to_string(),
                    p,
                    d: d_coinv,
                    i,
                    dim: coinvariant_dims(p, i, d_coinv, CoinvOptions::T_WEDGE).map_err(homology_error)?,
                    flags: COINV_FLAG.to_string(),
                });
            }
        }
    } else if args.coinv {
        return Err(CliError::usage("--coinv needs --group"));
    }

    let ledger = if args.ledger {
        Some(
            (0..=args.max_i)
                .map(|i| mv_ledger_check(p, i, d))
                .collect::<Result<Vec<_>, _>>()
                .map_err(homology_error)?,
        )
    } else {
        None
    };

    let mut out = String::new();
    match args.format {
        Format::Json => {
            let mut v = json!({ "rows": rows_to_json(&rows) });
            if let Some(l) = &ledger {
                v["ledger"] = serde_json::to_value(l).expect("ledger serializes");
            }
            out.push_str(&render_json(&v));
        }
        Format::Csv => {
            if !rows.is_empty() {
                out.push_str(&rows_to_csv(&rows));
            }
            if let Some(l) = &ledger {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str(&ledger_csv(l));
            }
        }
        Format::Text => {
            if !rows.is_empty() {
                out.push_str(&rows_text(&rows));
            }
            if let Some(l) = &ledger {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str(&ledger_text(l));
            }
        }
    }
    let failed = ledger.as_ref().is_some_and(|l| l.iter().any(|e| !e.holds));
    Ok(Outcome {
        stdout: out,
        code: if failed { 1 } else { 0 },
    })
}
