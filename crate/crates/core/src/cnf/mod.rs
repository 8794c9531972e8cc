//! CNF formulas for the two source problems: positive exactly-3-bounded
//! 1-in-3 SAT and 3-SAT with signed literals.

mod dimacs;
mod generate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dimacs::{parse_dimacs, parse_formula_json, Cnf, CnfParseError, Flavor, FormulaDoc, MAX_CNF_SIZE};
pub use generate::{gen_1in3, gen_3sat};

/// Largest variable count the exhaustive solvers accept.
pub const BRUTE_FORCE_MAX_VARS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("brute force limited to {max} variables, formula has {found}")]
    TooManyVariables { max: usize, found: usize },
    #[error("need at least 3 variables, got {0}")]
    TooFewVariables(usize),
    #[error("no valid instance found after {0} attempts")]
    GenerationFailed(usize),
    #[error("formula is invalid: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

/// A literal over a 0-based variable index. DIMACS form is `±(var + 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    /// `None` for 0.
    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Lit {
            var: (x.unsigned_abs() - 1) as usize,
            positive: x > 0,
        })
    }
}

impl Serialize for Lit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_dimacs())
    }
}

impl<'de> Deserialize<'de> for Lit {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let x = i64::deserialize(d)?;
        Lit::from_dimacs(x).ok_or_else(|| serde::de::Error::custom("0 is not a literal"))
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A problem with a formula, reported as data by the validators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("clause {clause} has {len} literals, expected 3")]
    ClauseWidth { clause: usize, len: usize },
    #[error("clause {clause} mentions variable {var} outside 0..{num_vars}")]
    VariableOutOfRange { clause: usize, var: usize, num_vars: usize },
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("clause {clause} contains variable {var} with both signs")]
    Tautology { clause: usize, var: usize },
    #[error("clause {clause} contains negative literal on variable {var}")]
    NegativeLiteral { clause: usize, var: usize },
    #[error("variable {var} occurs {count} times, expected 3")]
    OccurrenceCount { var: usize, count: usize },
}

/// Shared clause checks: width 3, range, distinct variables.
fn clause_violations(num_vars: usize, clauses: &[Vec<Lit>]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (ci, clause) in clauses.iter().enumerate() {
        if clause.len() != 3 {
            out.push(Violation::ClauseWidth {
                clause: ci,
                len: clause.len(),
            });
        }
        for (i, l) in clause.iter().enumerate() {
            if l.var >= num_vars {
                out.push(Violation::VariableOutOfRange {
                    clause: ci,
                    var: l.var,
                    num_vars,
                });
            }
            if let Some(prev) = clause[..i].iter().find(|p| p.var == l.var) {
                out.push(if prev.positive == l.positive {
                    Violation::RepeatedVariable { clause: ci, var: l.var }
                } else {
                    Violation::Tautology { clause: ci, var: l.var }
                });
            }
        }
    }
    out
}

/// Truth value per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn all(num_vars: usize, value: bool) -> Self {
        Assignment(vec![value; num_vars])
    }

    /// Bit `i` of `mask` is the value of variable `i`.
    pub fn from_mask(num_vars: usize, mask: u64) -> Self {
        Assignment((0..num_vars).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn satisfies_lit(&self, l: Lit) -> bool {
        self.0[l.var] == l.positive
    }

    fn true_count(&self, clause: &[Lit]) -> usize {
        clause.iter().filter(|&&l| self.satisfies_lit(l)).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Sat(Assignment),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }

    pub fn assignment(&self) -> Option<&Assignment> {
        match self {
            SatResult::Sat(a) => Some(a),
            SatResult::Unsat => None,
        }
    }
}

fn exhaustive<F>(num_vars: usize, accept: F) -> Result<SatResult, CnfError>
where
    F: Fn(&Assignment) -> bool,
{
    if num_vars > BRUTE_FORCE_MAX_VARS {
        return Err(CnfError::TooManyVariables {
            max: BRUTE_FORCE_MAX_VARS,
            found: num_vars,
        });
    }
    for mask in 0..1u64 << num_vars {
        let a = Assignment::from_mask(num_vars, mask);
        if accept(&a) {
            return Ok(SatResult::Sat(a));
        }
    }
    Ok(SatResult::Unsat)
}

/// Positive exactly-3-bounded 1-in-3 SAT: every clause is three distinct
/// positive variables and every variable occurs in exactly three clauses.
///
/// Clauses are stored as literal lists so that malformed input (negative
/// literals, wrong widths) survives parsing and is reported by
/// [`Formula1in3::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formula1in3 {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

impl Formula1in3 {
    pub fn from_triples(num_vars: usize, triples: &[[usize; 3]]) -> Self {
        Formula1in3 {
            num_vars,
            clauses: triples
                .iter()
                .map(|t| t.iter().map(|&v| Lit::pos(v)).collect())
                .collect(),
        }
    }

    /// Every violated invariant, or `Ok` if there are none.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = clause_violations(self.num_vars, &self.clauses);
        let mut counts = vec![0usize; self.num_vars];
        for (ci, clause) in self.clauses.iter().enumerate() {
            for l in clause {
                if !l.positive {
                    out.push(Violation::NegativeLiteral { clause: ci, var: l.var });
                }
                if l.var < self.num_vars {
                    counts[l.var] += 1;
                }
            }
        }
        for (var, &count) in counts.iter().enumerate() {
            if count != 3 {
                out.push(Violation::OccurrenceCount { var, count });
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Clause variables; meaningful once [`validate`](Self::validate)
    /// passes.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        self.clauses.iter().map(|c| [c[0].var, c[1].var, c[2].var]).collect()
    }

    /// Exactly one true literal in every clause.
    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        a.len() == self.num_vars && self.clauses.iter().all(|c| a.true_count(c) == 1)
    }

    pub fn to_cnf(&self) -> Cnf {
        Cnf {
            num_vars: self.num_vars,
            clauses: self.clauses.clone(),
        }
    }
}

/// Exhaustive 1-in-3 search over all `2^n` assignments, in mask order.
pub fn solve_1in3_brute(f: &Formula1in3) -> Result<SatResult, CnfError> {
    exhaustive(f.num_vars, |a| f.is_satisfied_by(a))
}

/// 3-SAT over exactly-3-literal clauses on distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formula3Sat {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

impl Formula3Sat {
    pub fn new(num_vars: usize, clauses: Vec<[Lit; 3]>) -> Self {
        Formula3Sat {
            num_vars,
            clauses: clauses.into_iter().map(|c| c.to_vec()).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let out = clause_violations(self.num_vars, &self.clauses);
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// At least one true literal in every clause.
    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        a.len() == self.num_vars && self.clauses.iter().all(|c| a.true_count(c) >= 1)
    }

    pub fn to_cnf(&self) -> Cnf {
        Cnf {
            num_vars: self.num_vars,
            clauses: self.clauses.clone(),
        }
    }
}

/// Exhaustive 3-SAT search over all `2^n` assignments, in mask order.
pub fn solve_3sat_brute(f: &Formula3Sat) -> Result<SatResult, CnfError> {
    exhaustive(f.num_vars, |a| f.is_satisfied_by(a))
}

/// Validates a 1-in-3 formula, wrapping violations in an error.
pub fn validate_1in3(f: &Formula1in3) -> Result<(), CnfError> {
    f.validate().map_err(CnfError::Invalid)
}
