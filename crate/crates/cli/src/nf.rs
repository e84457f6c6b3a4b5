use clap::{Args, ValueEnum};
use serde_json::Value;

use nagaolab_core::amalgam::{evaluate_word, nf_evaluate, normalize, AmalgamStructure, Letter, NormalForm};
use nagaolab_core::gl2::{Generator, Gl2Error, Mat2};
use nagaolab_core::json::{mat_from_json, mat_to_json, nf_to_json, parse_value, word_from_json, JsonError};
use nagaolab_core::nagao::{letters_from_generators, nagao_normal_form, E2Zt, NagaoError, NagaoFp};

use crate::{read_input, render_json, CliError, Format, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingChoice {
    E2zt,
}

#[derive(Args)]
pub struct NfArgs {
    /// Work in SL2(F_p[t]); accepts a matrix or a word.
    #[arg(
        long = "mod",
        value_name = "P",
        conflicts_with = "ring",
        required_unless_present = "ring"
    )]
    modulus: Option<u64>,
    /// Work in E2(Z[t]); accepts a word only.
    #[arg(long, value_enum)]
    ring: Option<RingChoice>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Matrix `[[a, b], [c, d]]`, JSON word, or `-` for stdin.
    input: String,
}

enum Input {
    Matrix(Mat2),
    Word(Vec<Letter>),
}

fn is_matrix_shape(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|rows| rows.len() == 2 && rows.iter().all(|r| r.as_array().is_some_and(|r| r.len() == 2)))
}

fn json_error(e: JsonError) -> CliError {
    CliError::usage(e.to_string())
}

fn nagao_error(e: NagaoError) -> CliError {
    match e {
        NagaoError::CrossValidation { .. } => CliError::failure(e.to_string()),
        _ => CliError::usage(e.to_string()),
    }
}

fn parse_input<S: AmalgamStructure>(s: &S, text: &str) -> Result<Input, CliError> {
    let text = text.trim();
    match parse_value(text) {
        Ok(v) if is_matrix_shape(&v) => Ok(Input::Matrix(mat_from_json(&v, s.ring()).map_err(json_error)?)),
        Ok(v) => Ok(Input::Word(word_from_json(s, &v).map_err(json_error)?)),
        Err(json_err) => {
            if text.starts_with("[[") {
                Mat2::parse(text, s.ring())
                    .map(Input::Matrix)
                    .map_err(|e| CliError::usage(format!("cannot parse matrix: {e}")))
            } else if text.starts_with('[') || text.starts_with('{') {
                Err(json_error(json_err))
            } else {
                let g = Generator::parse(text, s.ring()).map_err(|e: Gl2Error| CliError::usage(e.to_string()))?;
                Ok(Input::Word(letters_from_generators(s, &[g]).map_err(nagao_error)?))
            }
        }
    }
}

fn render(nf: &NormalForm, format: Format) -> Result<String, CliError> {
    let m = nf_evaluate(nf);
    match format {
        Format::Json => {
            let mut v = nf_to_json(nf);
            v["matrix"] = mat_to_json(&m);
            Ok(render_json(&v))
        }
        Format::Text => {
            let mut s = format!("structure  {}\nhead       {}\n", nf.key(), nf.head());
            if nf.is_empty() {
                s.push_str("tail       (empty)\n");
            }
            for (j, l) in nf.tail().iter().enumerate() {
                let label = if j == 0 { "tail" } else { "" };
                s.push_str(&format!("{label:<11}{}  {}\n", l.factor(), l.element()));
            }
            s.push_str(&format!("length     {}\nmatrix     {m}\n", nf.len()));
            Ok(s)
        }
        Format::Csv => Err(CliError::usage("nf supports --format text or json")),
    }
}

pub fn run(args: NfArgs) -> Result<Outcome, CliError> {
    let text = read_input(&args.input)?;
    let nf = if let Some(p) = args.modulus {
        let s = NagaoFp::new(p).map_err(|e| CliError::usage(e.to_string()))?;
        match parse_input(&s, &text)? {
            Input::Matrix(m) => nagao_normal_form(p, &m).map_err(nagao_error)?,
            Input::Word(w) => {
                let nf = normalize(&s, &w).map_err(|e| CliError::usage(e.to_string()))?;
                let direct = nagao_normal_form(p, &evaluate_word(s.ring(), &w)).map_err(nagao_error)?;
                if direct != nf {
                    return Err(CliError::failure(format!(
                        "word rewriting gave {nf} but the matrix decomposition gave {direct}"
                    )));
                }
                nf
            }
        }
    } else {
        match parse_input(&E2Zt, &text)? {
            Input::Matrix(_) => {
                return Err(CliError::out_of_scope(
                    "bare matrices are refused for E2(Z[t]): membership of a matrix in E2(Z[t]) is not \
                     decided here; pass a word of generators or letters instead",
                ))
            }
            Input::Word(w) => normalize(&E2Zt, &w).map_err(|e| CliError::usage(e.to_string()))?,
        }
    };
    Ok(Outcome::ok(render(&nf, args.format)?))
}
