//! DIMACS CNF text and the JSON mirror.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Formula1in3, Formula3Sat, Lit};

/// Largest variable or clause count accepted from untrusted input.
pub const MAX_CNF_SIZE: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfParseError {
    #[error("no \"p cnf\" header found")]
    MissingHeader,
    #[error("line {line}: literal before the \"p cnf\" header")]
    LiteralBeforeHeader { line: usize },
    #[error("line {line}: malformed header, expected \"p cnf <vars> <clauses>\"")]
    BadHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: declared size exceeds {MAX_CNF_SIZE}")]
    TooLarge { line: usize },
    #[error("line {line}: malformed literal {token:?}")]
    BadLiteral { line: usize, token: String },
    #[error("line {line}: literal {lit} outside the declared {num_vars} variables")]
    LiteralOutOfRange { line: usize, lit: i64, num_vars: usize },
    #[error("line {line}: last clause is not terminated by 0")]
    Unterminated { line: usize },
    #[error("line {line}: header declares {declared} clauses but {found} were read")]
    ClauseCount { line: usize, declared: usize, found: usize },
    #[error("formula JSON: {0}")]
    Json(String),
    #[error("formula JSON clause {clause}: invalid literal {lit}")]
    JsonLiteral { clause: usize, lit: i64 },
}

/// Flavor-agnostic clause list as read from DIMACS.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

impl Cnf {
    /// DIMACS text; `comment` lines are emitted first with a `c ` prefix.
    pub fn to_dimacs(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        for line in comment.into_iter().flat_map(str::lines) {
            out.push_str("c ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("p cnf {} {}\n", self.num_vars, self.clauses.len()));
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn into_1in3(self) -> Formula1in3 {
        Formula1in3 {
            num_vars: self.num_vars,
            clauses: self.clauses,
        }
    }

    pub fn into_3sat(self) -> Formula3Sat {
        Formula3Sat {
            num_vars: self.num_vars,
            clauses: self.clauses,
        }
    }
}

fn parse_size(tok: &str, line: usize) -> Result<usize, CnfParseError> {
    let v: usize = tok.parse().map_err(|_| CnfParseError::BadHeader { line })?;
    if v > MAX_CNF_SIZE {
        return Err(CnfParseError::TooLarge { line });
    }
    Ok(v)
}

/// Parses DIMACS CNF. Comment lines start with `c`; a line starting with
/// `%` ends the input. Clauses may span lines and must end with `0`.
pub fn parse_dimacs(text: &str) -> Result<Cnf, CnfParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        if s.starts_with('%') {
            break;
        }
        last_line = line;
        if s.starts_with('p') {
            if header.is_some() {
                return Err(CnfParseError::DuplicateHeader { line });
            }
            let toks: Vec<&str> = s.split_whitespace().collect();
            if toks.len() != 4 || toks[0] != "p" || toks[1] != "cnf" {
                return Err(CnfParseError::BadHeader { line });
            }
            header = Some((parse_size(toks[2], line)?, parse_size(toks[3], line)?, line));
            continue;
        }
        let Some((num_vars, _, _)) = header else {
            return Err(CnfParseError::LiteralBeforeHeader { line });
        };
        for tok in s.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| CnfParseError::BadLiteral {
                line,
                token: tok.to_string(),
            })?;
            match Lit::from_dimacs(x) {
                None => clauses.push(std::mem::take(&mut current)),
                Some(l) if l.var < num_vars => current.push(l),
                Some(_) => return Err(CnfParseError::LiteralOutOfRange { line, lit: x, num_vars }),
            }
        }
    }
    let (num_vars, declared, header_line) = header.ok_or(CnfParseError::MissingHeader)?;
    if !current.is_empty() {
        return Err(CnfParseError::Unterminated { line: last_line });
    }
    if clauses.len() != declared {
        return Err(CnfParseError::ClauseCount {
            line: header_line,
            declared,
            found: clauses.len(),
        });
    }
    Ok(Cnf { num_vars, clauses })
}

impl Formula1in3 {
    pub fn to_dimacs(&self) -> String {
        self.to_cnf().to_dimacs(Some("flavor 1in3"))
    }

    /// Parses without validating; negative literals and bad occurrence
    /// counts are left for [`Formula1in3::validate`].
    pub fn from_dimacs(text: &str) -> Result<Self, CnfParseError> {
        parse_dimacs(text).map(Cnf::into_1in3)
    }
}

impl Formula3Sat {
    pub fn to_dimacs(&self) -> String {
        self.to_cnf().to_dimacs(Some("flavor 3sat"))
    }

    pub fn from_dimacs(text: &str) -> Result<Self, CnfParseError> {
        parse_dimacs(text).map(Cnf::into_3sat)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    #[serde(rename = "1in3")]
    OneInThree,
    #[serde(rename = "3sat")]
    ThreeSat,
}

/// JSON form of a formula with DIMACS-signed literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormulaDoc {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
    pub flavor: Flavor,
}

impl FormulaDoc {
    pub fn new(cnf: &Cnf, flavor: Flavor) -> Self {
        FormulaDoc {
            num_vars: cnf.num_vars,
            clauses: cnf
                .clauses
                .iter()
                .map(|c| c.iter().map(|l| l.to_dimacs()).collect())
                .collect(),
            flavor,
        }
    }

    pub fn to_cnf(&self) -> Result<Cnf, CnfParseError> {
        let mut clauses = Vec::with_capacity(self.clauses.len());
        for (ci, c) in self.clauses.iter().enumerate() {
            let mut out = Vec::with_capacity(c.len());
            for &x in c {
                match Lit::from_dimacs(x) {
                    Some(l) if l.var < self.num_vars => out.push(l),
                    _ => return Err(CnfParseError::JsonLiteral { clause: ci, lit: x }),
                }
            }
            clauses.push(out);
        }
        Ok(Cnf {
            num_vars: self.num_vars,
            clauses,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Parses the JSON mirror and checks literal ranges.
pub fn parse_formula_json(text: &str) -> Result<(Flavor, Cnf), CnfParseError> {
    let doc: FormulaDoc = serde_json::from_str(text).map_err(|e| CnfParseError::Json(e.to_string()))?;
    if doc.num_vars > MAX_CNF_SIZE {
        return Err(CnfParseError::Json(format!("num_vars exceeds {MAX_CNF_SIZE}")));
    }
    Ok((doc.flavor, doc.to_cnf()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_signed_clause() {
        let f = Formula3Sat::from_dimacs("p cnf 3 1\n1 2 -3 0\n").unwrap();
        assert_eq!(f.num_vars, 3);
        assert_eq!(f.clauses, vec![vec![Lit::pos(0), Lit::pos(1), Lit::neg(2)]]);
        assert_eq!(f.validate(), Ok(()));
    }

    #[test]
    fn comments_multiline_and_terminator() {
        let text = "c hello\n\np cnf 4 2\n1 2\n 3 0 -4\n1 2 0\n%\n0\n";
        let cnf = parse_dimacs(text).unwrap();
        assert_eq!(cnf.clauses.len(), 2);
        assert_eq!(cnf.clauses[1], vec![Lit::neg(3), Lit::pos(0), Lit::pos(1)]);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse_dimacs("c x\np cnf 3 2\n1 2 3 0\n"),
            Err(CnfParseError::ClauseCount {
                line: 2,
                declared: 2,
                found: 1
            })
        );
        assert_eq!(parse_dimacs("p cnf 3\n"), Err(CnfParseError::BadHeader { line: 1 }));
        assert_eq!(parse_dimacs("p dnf 3 1\n"), Err(CnfParseError::BadHeader { line: 1 }));
        assert_eq!(
            parse_dimacs("p cnf 3 1\n1 x 0\n"),
            Err(CnfParseError::BadLiteral {
                line: 2,
                token: "x".into()
            })
        );
        assert_eq!(
            parse_dimacs("p cnf 3 1\n1 2 4 0\n"),
            Err(CnfParseError::LiteralOutOfRange {
                line: 2,
                lit: 4,
                num_vars: 3
            })
        );
        assert_eq!(
            parse_dimacs("p cnf 3 1\n1 2 3\n"),
            Err(CnfParseError::Unterminated { line: 2 })
        );
        assert_eq!(
            parse_dimacs("1 2 3 0\n"),
            Err(CnfParseError::LiteralBeforeHeader { line: 1 })
        );
        assert_eq!(parse_dimacs(""), Err(CnfParseError::MissingHeader));
        assert_eq!(
            parse_dimacs("p cnf 1 0\np cnf 1 0\n"),
            Err(CnfParseError::DuplicateHeader { line: 2 })
        );
        assert_eq!(
            parse_dimacs("p cnf 99999999 0\n"),
            Err(CnfParseError::TooLarge { line: 1 })
        );
    }

    #[test]
    fn negative_literal_survives_1in3_parse() {
        let f = Formula1in3::from_dimacs("p cnf 3 1\n1 -2 3 0\n").unwrap();
        assert!(f.validate().is_err());
    }

    #[test]
    fn emit_format() {
        let f = Formula1in3::from_triples(3, &[[0, 1, 2]; 3]);
        assert_eq!(f.to_dimacs(), "c flavor 1in3\np cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n");
    }

    #[test]
    fn json_mirror() {
        let f = Formula3Sat::new(3, vec![[Lit::pos(0), Lit::neg(1), Lit::pos(2)]]);
        let doc = FormulaDoc::new(&f.to_cnf(), Flavor::ThreeSat);
        let json = doc.to_json();
        assert_eq!(json, r#"{"num_vars":3,"clauses":[[1,-2,3]],"flavor":"3sat"}"#);
        let (flavor, cnf) = parse_formula_json(&json).unwrap();
        assert_eq!(flavor, Flavor::ThreeSat);
        assert_eq!(cnf.into_3sat(), f);
        assert_eq!(
            parse_formula_json(r#"{"num_vars":2,"clauses":[[1,3]],"flavor":"1in3"}"#),
            Err(CnfParseError::JsonLiteral { clause: 0, lit: 3 })
        );
        assert!(parse_formula_json(r#"{"num_vars":2,"clauses":[],"flavor":"2sat"}"#).is_err());
    }
}
