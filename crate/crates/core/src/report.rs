//! Input files and the full analysis report.
//!
//! An input file declares its variables in a header line ("vars: 4" or
//! "vars: 4 as x,y,z,t") and lists one polynomial per following line; '#'
//! starts a comment and blank lines are skipped. The analysis composes the
//! inverse-system operations into a single deterministic report rendered as
//! text or JSON (schema version 1).

use crate::apolar::{ApolarError, InverseSystem, QDecomposition};
use crate::gradedness::{certify_graded_s3, is_compressed_s3, GradedVerdict, GradednessError};
use crate::multipoly::{parse_with_names, Poly};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("input declares no polynomials")]
    Empty,
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Apolar(#[from] ApolarError),
    #[error(transparent)]
    Gradedness(#[from] GradednessError),
}

/// Parsed input: variable count, optional display names, generators.
#[derive(Debug)]
pub struct InputFile {
    pub num_vars: usize,
    pub names: Option<Vec<String>>,
    pub polys: Vec<Poly>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Parse the header and polynomial lines of an input file.
pub fn parse_input(text: &str) -> Result<InputFile, InputError> {
    let mut num_vars: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut polys = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        match num_vars {
            None => {
                let trimmed = line.trim();
                let rest = trimmed
                    .strip_prefix("vars:")
                    .or_else(|| trimmed.strip_prefix("vars "))
                    .ok_or_else(|| {
                        syntax(line_no, 1, "expected header 'vars: m [as name,...]'")
                    })?;
                let (count_part, alias_part) = match rest.find(" as ") {
                    Some(pos) => (&rest[..pos], Some(&rest[pos + 4..])),
                    None => (rest, None),
                };
                let m: usize = count_part.trim().parse().map_err(|_| {
                    syntax(line_no, 1, format!("invalid variable count '{}'", count_part.trim()))
                })?;
                if m == 0 {
                    return Err(syntax(line_no, 1, "variable count must be positive"));
                }
                if let Some(aliases) = alias_part {
                    let list: Vec<String> =
                        aliases.split(',').map(|s| s.trim().to_string()).collect();
                    if list.len() != m {
                        return Err(syntax(
                            line_no,
                            1,
                            format!("expected {m} aliases, found {}", list.len()),
                        ));
                    }
                    for a in &list {
                        if !valid_name(a) {
                            return Err(syntax(line_no, 1, format!("invalid alias '{a}'")));
                        }
                    }
                    let mut dedup = list.clone();
                    dedup.sort();
                    dedup.dedup();
                    if dedup.len() != list.len() {
                        return Err(syntax(line_no, 1, "aliases must be distinct"));
                    }
                    names = Some(list);
                }
                num_vars = Some(m);
            }
            Some(m) => {
                let name_slice: &[String] = names.as_deref().unwrap_or(&[]);
                let poly = parse_with_names(line, m, name_slice).map_err(|e| {
                    syntax(line_no, e.column + 1, e.message)
                })?;
                polys.push(poly);
            }
        }
    }
    let num_vars = num_vars.ok_or(InputError::Empty)?;
    if polys.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(InputFile {
        num_vars,
        names,
        polys,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GradedStatus {
    Graded,
    NotGraded,
    Unknown,
    NotApplicable,
}

#[derive(Serialize)]
pub struct CertificateReport {
    /// Automorphism coefficients, blocks ordered by variable, entries by the
    /// degree-2 frame; rationals rendered as N or N/D.
    pub automorphism: Vec<String>,
    pub system_rank: usize,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub num_vars: usize,
    pub variable_names: Vec<String>,
    pub hvector: Vec<usize>,
    pub embedding_dim: usize,
    pub socle_degree: u32,
    pub socle_dimension: usize,
    pub is_level: bool,
    pub level_type: Option<usize>,
    pub is_compressed: Option<bool>,
    pub q0_hvector: Option<Vec<usize>>,
    pub c_table: Vec<Vec<usize>>,
    pub q_table: Vec<Vec<usize>>,
    pub apolar_generators: Vec<String>,
    pub graded_status: GradedStatus,
    pub not_graded_witness: Option<[Vec<usize>; 2]>,
    pub unknown_reason: Option<String>,
    pub certificate: Option<CertificateReport>,
}

/// Run the full analysis over a parsed input.
pub fn analyze(input: &InputFile) -> Result<Report, AnalyzeError> {
    let system = InverseSystem::build(input.polys.clone(), input.num_vars)?;
    let names: Vec<String> = match &input.names {
        Some(ns) => ns.clone(),
        None => (1..=input.num_vars).map(|i| format!("x{i}")).collect(),
    };
    let hf = system.hilbert_function();
    let s = system.socle_degree();
    let (level, socle_dimension) = system.is_level();

    let q0_hvector = if level {
        Some(
            system
                .leading_form_system()?
                .hilbert_function()
                .entries()
                .to_vec(),
        )
    } else {
        None
    };

    let model = system.algebra_model();
    let qdec = QDecomposition::compute(&model, s);
    for i in 0..=s as usize {
        let layered: usize = (0..=s as usize).map(|a| qdec.q(a, i)).sum();
        assert_eq!(layered, hf.get(i), "filtration layers must refine HF");
    }

    let is_compressed = if s == 3 && level {
        Some(is_compressed_s3(&system)?)
    } else {
        None
    };

    let (graded_status, not_graded_witness, unknown_reason, certificate) = if s == 3 && level {
        match certify_graded_s3(&system)? {
            GradedVerdict::Graded(cert) => {
                let automorphism = cert
                    .coeffs
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                (
                    GradedStatus::Graded,
                    None,
                    None,
                    Some(CertificateReport {
                        automorphism,
                        system_rank: cert.system_rank,
                        verified: cert.verified,
                    }),
                )
            }
            GradedVerdict::NotGraded { hf, q0_hf } => (
                GradedStatus::NotGraded,
                Some([hf.entries().to_vec(), q0_hf.entries().to_vec()]),
                None,
                None,
            ),
            GradedVerdict::Unknown { reason } => {
                (GradedStatus::Unknown, None, Some(reason), None)
            }
        }
    } else {
        (GradedStatus::NotApplicable, None, None, None)
    };

    let ideal = system.apolar_ideal();
    let apolar_generators = ideal
        .minimal_generators()
        .iter()
        .map(|g| g.to_string_with_names(Some(&names)))
        .collect();

    Ok(Report {
        schema: 1,
        num_vars: input.num_vars,
        variable_names: names,
        hvector: hf.entries().to_vec(),
        embedding_dim: hf.get(1),
        socle_degree: s,
        socle_dimension,
        is_level: level,
        level_type: if level { Some(socle_dimension) } else { None },
        is_compressed,
        q0_hvector,
        c_table: qdec.c_table().to_vec(),
        q_table: qdec.q_table().to_vec(),
        apolar_generators,
        graded_status,
        not_graded_witness,
        unknown_reason,
        certificate,
    })
}

fn fmt_tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!(
            "variables: {} ({})",
            self.num_vars,
            self.variable_names.join(",")
        ));
        line(format!("h-vector: {}", fmt_tuple(&self.hvector)));
        line(format!("embedding dimension: {}", self.embedding_dim));
        line(format!("socle degree: {}", self.socle_degree));
        line(format!("socle dimension: {}", self.socle_dimension));
        match self.level_type {
            Some(t) => line(format!("level: yes (type {t})")),
            None => line("level: no".to_string()),
        }
        match self.is_compressed {
            Some(true) => line("compressed: yes".to_string()),
            Some(false) => line("compressed: no".to_string()),
            None => line("compressed: n/a".to_string()),
        }
        match &self.q0_hvector {
            Some(h) => line(format!("Q(0) h-vector: {}", fmt_tuple(h))),
            None => line("Q(0) h-vector: n/a".to_string()),
        }
        let status = match self.graded_status {
            GradedStatus::Graded => "graded",
            GradedStatus::NotGraded => "not_graded",
            GradedStatus::Unknown => "unknown",
            GradedStatus::NotApplicable => "not_applicable",
        };
        line(format!("graded: {status}"));
        if let Some([a, b]) = &self.not_graded_witness {
            line(format!(
                "  witness: HF {} differs from Q(0) HF {}",
                fmt_tuple(a),
                fmt_tuple(b)
            ));
        }
        if let Some(reason) = &self.unknown_reason {
            line(format!("  reason: {reason}"));
        }
        if let Some(cert) = &self.certificate {
            if cert.automorphism.iter().all(|c| c == "0") {
                line("  automorphism: identity".to_string());
            } else {
                line(format!(
                    "  automorphism coefficients: [{}]",
                    cert.automorphism.join(", ")
                ));
            }
            line(format!(
                "  system rank: {}, verified: {}",
                cert.system_rank, cert.verified
            ));
        }
        line(format!(
            "c-table (rows a=0..{}, cols i=0..{}):",
            self.c_table.len() - 1,
            self.socle_degree
        ));
        for row in &self.c_table {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            line(format!("  {}", cells.join(" ")));
        }
        line(format!(
            "q-table (rows a=0..{}, cols i=0..{}):",
            self.q_table.len() - 1,
            self.socle_degree
        ));
        for row in &self.q_table {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            line(format!("  {}", cells.join(" ")));
        }
        line("apolar ideal minimal generators:".to_string());
        for g in &self.apolar_generators {
            line(format!("  {g}"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ES1222: &str = "vars: 2 as x,y\nx^3\ny^3\n";

    #[test]
    fn parses_header_with_aliases() {
        let input = parse_input(ES1222).unwrap();
        assert_eq!(input.num_vars, 2);
        assert_eq!(input.names.as_deref().unwrap(), ["x", "y"]);
        assert_eq!(input.polys.len(), 2);
    }

    #[test]
    fn parses_header_without_aliases_and_comments() {
        let text = "# two cubes\nvars: 2\nx1^3  # first\n\nx2^3\n";
        let input = parse_input(text).unwrap();
        assert!(input.names.is_none());
        assert_eq!(input.polys.len(), 2);
    }

    #[test]
    fn header_errors() {
        assert!(matches!(
            parse_input("x1^3\n"),
            Err(InputError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_input("vars: 2 as x\nx^2\n"),
            Err(InputError::Syntax { .. })
        ));
        assert!(matches!(
            parse_input("vars: 2 as x,x\nx^2\n"),
            Err(InputError::Syntax { .. })
        ));
        assert!(matches!(
            parse_input("vars: 2\n# nothing\n"),
            Err(InputError::Empty)
        ));
        assert!(matches!(parse_input(""), Err(InputError::Empty)));
    }

    #[test]
    fn poly_errors_carry_line_numbers() {
        let err = parse_input("vars: 2\nx1^3\nx3 + 1\n").unwrap_err();
        match err {
            InputError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn analyze_two_cubes() {
        let report = analyze(&parse_input(ES1222).unwrap()).unwrap();
        assert_eq!(report.hvector, vec![1, 2, 2, 2]);
        assert_eq!(report.level_type, Some(2));
        assert_eq!(report.is_compressed, Some(false));
        assert_eq!(report.graded_status, GradedStatus::Graded);
        assert_eq!(report.apolar_generators, vec!["x y", "x^4", "y^4"]);
        assert_eq!(report.q0_hvector, Some(vec![1, 2, 2, 2]));
    }

    #[test]
    fn analyze_output_is_deterministic() {
        let a = analyze(&parse_input(ES1222).unwrap()).unwrap();
        let b = analyze(&parse_input(ES1222).unwrap()).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn analyze_non_level_system() {
        let report = analyze(&parse_input("vars: 2\nx1^3\nx2^2\n").unwrap()).unwrap();
        assert!(!report.is_level);
        assert_eq!(report.level_type, None);
        assert_eq!(report.is_compressed, None);
        assert_eq!(report.graded_status, GradedStatus::NotApplicable);
        assert_eq!(report.q0_hvector, None);
    }

    #[test]
    fn json_contains_schema_version() {
        let report = analyze(&parse_input(ES1222).unwrap()).unwrap();
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["hvector"].as_array().unwrap().len(), 4);
    }
}
