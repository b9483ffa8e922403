//! Quantifier strings for small-ball mode definitions.
//!
//! A mode definition is an ordered string of at most four quantified
//! variables, each a polarity (∀/∃) applied to one of the four variable
//! kinds: null sequence of radii (`ns`), approximating sequence (`as`),
//! comparison point (`cp`), comparison sequence (`cs`). The grammar:
//!
//! * `ns` must appear,
//! * `cs` may only appear after `cp`,
//! * no variable appears more than once.
//!
//! Strings parse from and print to a bracketed token syntax, `[Ans Eas]`,
//! with `A`/`E` polarity markers; the Unicode quantifiers `∀`/`∃` are
//! accepted as aliases on input.

mod enumeration;
mod lattice;
mod syntactic;

pub use enumeration::{
    canonical_class, class_members, elimination_verdict, emit_table, enumerate_definitions,
    letter_notation, logical_normal_form, table_to_csv, table_to_json, EliminationVerdict,
    NotMeaningful, RuleId, TableRow,
};
pub use lattice::{
    build_main_lattice, check_scenario, family_separates, min_separating_family, quotient_lattice,
    quotient_scenarios, scenario_partition, ClassLattice, LatticeError, LawsReport,
    QuotientScenario, SeparatingFamily, MAIN_COVERS,
};
pub use syntactic::{derive_edges, undeclared_derivations, EdgeDerivation};

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Quantifier polarity: universal or existential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    ForAll,
    Exists,
}

/// The four quantified variable kinds.
///
/// Ordering is the fixed variable order `ns < as < cp < cs` used both for
/// logical normalization and for the enumeration alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    Ns,
    As,
    Cp,
    Cs,
}

impl Variable {
    pub const ALL: [Variable; 4] = [Variable::Ns, Variable::As, Variable::Cp, Variable::Cs];

    pub fn name(self) -> &'static str {
        match self {
            Variable::Ns => "ns",
            Variable::As => "as",
            Variable::Cp => "cp",
            Variable::Cs => "cs",
        }
    }
}

/// One quantified variable, e.g. `∀ns` or `∃as`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quantifier {
    pub polarity: Polarity,
    pub variable: Variable,
}

impl Quantifier {
    pub const fn new(polarity: Polarity, variable: Variable) -> Self {
        Quantifier { polarity, variable }
    }

    /// Position of this token in the enumeration alphabet:
    /// `∀ns < ∃ns < ∀as < ∃as < ∀cp < ∃cp < ∀cs < ∃cs`.
    pub fn alphabet_index(self) -> usize {
        self.variable as usize * 2 + self.polarity as usize
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.polarity {
            Polarity::ForAll => "∀",
            Polarity::Exists => "∃",
        };
        write!(f, "{}{}", p, self.variable.name())
    }
}

/// Shorthand constructors used heavily in data tables and tests.
pub const fn fa(v: Variable) -> Quantifier {
    Quantifier::new(Polarity::ForAll, v)
}
pub const fn ex(v: Variable) -> Quantifier {
    Quantifier::new(Polarity::Exists, v)
}

/// What stands in the numerator of the ball-mass ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Star1 {
    /// The candidate point itself.
    CandidatePoint,
    /// A member of an approximating sequence (`as` present).
    ApproxSequence,
}

/// What stands in the denominator of the ball-mass ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Star2 {
    /// The supremal ball mass over all centres (no `cp` in the string).
    Sup,
    /// A fixed comparison point.
    ComparisonPoint,
    /// A member of a comparison sequence (`cs` present).
    ComparisonSequence,
}

/// Violations of the quantifier-string grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("string is empty")]
    Empty,
    #[error("string has more than four quantifiers")]
    TooLong,
    #[error("ns must appear")]
    MissingNs,
    #[error("cs may only appear after cp")]
    CsBeforeCp,
    #[error("variable {0} appears more than once")]
    RepeatedVariable(&'static str),
    #[error("cannot parse token {0:?}")]
    BadToken(String),
    #[error("expected a bracketed string like [Ans Eas]")]
    MissingBrackets,
}

/// A grammatical small-ball mode definition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeDefinition {
    quantifiers: Vec<Quantifier>,
}

impl ModeDefinition {
    /// Validates the grammar rules and builds a definition.
    pub fn new(quantifiers: Vec<Quantifier>) -> Result<Self, GrammarError> {
        if quantifiers.is_empty() {
            return Err(GrammarError::Empty);
        }
        if quantifiers.len() > 4 {
            return Err(GrammarError::TooLong);
        }
        let mut seen = [false; 4];
        let mut cp_at = None;
        for (i, q) in quantifiers.iter().enumerate() {
            let v = q.variable as usize;
            if seen[v] {
                return Err(GrammarError::RepeatedVariable(q.variable.name()));
            }
            seen[v] = true;
            if q.variable == Variable::Cp {
                cp_at = Some(i);
            }
            if q.variable == Variable::Cs && cp_at.is_none() {
                return Err(GrammarError::CsBeforeCp);
            }
        }
        if !seen[Variable::Ns as usize] {
            return Err(GrammarError::MissingNs);
        }
        Ok(ModeDefinition { quantifiers })
    }

    pub fn quantifiers(&self) -> &[Quantifier] {
        &self.quantifiers
    }

    pub fn len(&self) -> usize {
        self.quantifiers.len()
    }

    pub fn is_empty(&self) -> bool {
        false // grammar forbids empty strings
    }

    pub fn contains(&self, q: Quantifier) -> bool {
        self.quantifiers.contains(&q)
    }

    pub fn contains_variable(&self, v: Variable) -> bool {
        self.quantifiers.iter().any(|q| q.variable == v)
    }

    /// Index of the given quantifier, if present.
    pub fn position(&self, q: Quantifier) -> Option<usize> {
        self.quantifiers.iter().position(|&x| x == q)
    }

    /// Index of the given variable (either polarity), if present.
    pub fn position_of_variable(&self, v: Variable) -> Option<usize> {
        self.quantifiers.iter().position(|q| q.variable == v)
    }

    /// Numerator convention: an approximating sequence iff `as` appears.
    pub fn star1(&self) -> Star1 {
        if self.contains_variable(Variable::As) {
            Star1::ApproxSequence
        } else {
            Star1::CandidatePoint
        }
    }

    /// Denominator convention: `cs` beats `cp` beats the supremal mass.
    pub fn star2(&self) -> Star2 {
        if self.contains_variable(Variable::Cs) {
            Star2::ComparisonSequence
        } else if self.contains_variable(Variable::Cp) {
            Star2::ComparisonPoint
        } else {
            Star2::Sup
        }
    }

    /// ASCII form, e.g. `[Ans Eas]`. Stable across runs; used in CSV/JSON.
    pub fn ascii(&self) -> String {
        let toks: Vec<String> = self
            .quantifiers
            .iter()
            .map(|q| {
                let p = match q.polarity {
                    Polarity::ForAll => "A",
                    Polarity::Exists => "E",
                };
                format!("{}{}", p, q.variable.name())
            })
            .collect();
        format!("[{}]", toks.join(" "))
    }

    /// Parses `[Ans Eas]`; `∀`/`∃` accepted in place of `A`/`E`.
    pub fn parse(input: &str) -> Result<Self, GrammarError> {
        let s = input.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or(GrammarError::MissingBrackets)?;
        let mut qs = Vec::new();
        for tok in inner.split_whitespace() {
            let (pol, rest) = if let Some(r) = tok.strip_prefix('A').or(tok.strip_prefix('∀')) {
                (Polarity::ForAll, r)
            } else if let Some(r) = tok.strip_prefix('E').or(tok.strip_prefix('∃')) {
                (Polarity::Exists, r)
            } else {
                return Err(GrammarError::BadToken(tok.to_string()));
            };
            let var = match rest {
                "ns" => Variable::Ns,
                "as" => Variable::As,
                "cp" => Variable::Cp,
                "cs" => Variable::Cs,
                _ => return Err(GrammarError::BadToken(tok.to_string())),
            };
            qs.push(Quantifier::new(pol, var));
        }
        ModeDefinition::new(qs)
    }
}

impl fmt::Display for ModeDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, q) in self.quantifiers.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", q)?;
        }
        write!(f, "]")
    }
}

impl Serialize for ModeDefinition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.ascii())
    }
}

impl<'de> Deserialize<'de> for ModeDefinition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        ModeDefinition::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// The ten canonical classes of meaningful small-ball mode definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeClass {
    S,
    Gs,
    Ps,
    Pgs,
    E,
    W,
    Pw,
    Wp,
    Gwap,
    Wgap,
}

impl ModeClass {
    pub const ALL: [ModeClass; 10] = [
        ModeClass::S,
        ModeClass::Gs,
        ModeClass::Ps,
        ModeClass::Pgs,
        ModeClass::E,
        ModeClass::W,
        ModeClass::Pw,
        ModeClass::Wp,
        ModeClass::Gwap,
        ModeClass::Wgap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModeClass::S => "s",
            ModeClass::Gs => "gs",
            ModeClass::Ps => "ps",
            ModeClass::Pgs => "pgs",
            ModeClass::E => "e",
            ModeClass::W => "w",
            ModeClass::Pw => "pw",
            ModeClass::Wp => "wp",
            ModeClass::Gwap => "gwap",
            ModeClass::Wgap => "wgap",
        }
    }

    pub fn from_name(name: &str) -> Option<ModeClass> {
        ModeClass::ALL.iter().copied().find(|c| c.name() == name)
    }

    /// Canonical quantifier string of the class.
    pub fn canonical_string(self) -> ModeDefinition {
        use Variable::*;
        let qs = match self {
            ModeClass::S => vec![fa(Ns)],
            ModeClass::Gs => vec![fa(Ns), ex(As)],
            ModeClass::Ps => vec![ex(Ns)],
            ModeClass::Pgs => vec![ex(Ns), ex(As)],
            ModeClass::E => vec![fa(Cp), fa(Cs), ex(As), fa(Ns)],
            ModeClass::W => vec![fa(Ns), fa(Cp)],
            ModeClass::Pw => vec![ex(Ns), fa(Cp)],
            ModeClass::Wp => vec![fa(Cp), ex(Ns)],
            ModeClass::Gwap => vec![ex(As), fa(Cp), fa(Cs), ex(Ns)],
            ModeClass::Wgap => vec![fa(Cp), ex(As), fa(Cs), ex(Ns)],
        };
        ModeDefinition::new(qs).expect("canonical strings are grammatical")
    }
}

impl fmt::Display for ModeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Variable::*;

    #[test]
    fn grammar_rules() {
        assert!(ModeDefinition::new(vec![fa(Ns)]).is_ok());
        assert_eq!(ModeDefinition::new(vec![]), Err(GrammarError::Empty));
        assert_eq!(
            ModeDefinition::new(vec![fa(As)]),
            Err(GrammarError::MissingNs)
        );
        // cs before any cp
        assert_eq!(
            ModeDefinition::new(vec![fa(Cs), fa(Ns)]),
            Err(GrammarError::CsBeforeCp)
        );
        assert_eq!(
            ModeDefinition::new(vec![fa(Ns), ex(Ns)]),
            Err(GrammarError::RepeatedVariable("ns"))
        );
        assert!(ModeDefinition::new(vec![fa(Cp), fa(Cs), ex(As), fa(Ns)]).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let d = ModeDefinition::parse("[Ans Eas]").unwrap();
        assert_eq!(d.ascii(), "[Ans Eas]");
        assert_eq!(d.to_string(), "[∀ns ∃as]");
        let u = ModeDefinition::parse("[∀cp ∃as ∀cs ∃ns]").unwrap();
        assert_eq!(u.ascii(), "[Acp Eas Acs Ens]");
        assert!(ModeDefinition::parse("Ans").is_err());
        assert!(ModeDefinition::parse("[Xns]").is_err());
    }

    #[test]
    fn star_conventions() {
        let d = ModeDefinition::parse("[Ens Eas]").unwrap();
        assert_eq!(d.star1(), Star1::ApproxSequence);
        assert_eq!(d.star2(), Star2::Sup);
        let d = ModeDefinition::parse("[Ans Acp]").unwrap();
        assert_eq!(d.star1(), Star1::CandidatePoint);
        assert_eq!(d.star2(), Star2::ComparisonPoint);
        let d = ModeDefinition::parse("[Acp Acs Eas Ans]").unwrap();
        assert_eq!(d.star2(), Star2::ComparisonSequence);
    }
}
