//! Enumeration, logical normalization, elimination, and classification of
//! the 282 grammatical quantifier strings.
//!
//! The enumeration order is shortlex: strings sorted by length first, then
//! lexicographically over the alphabet `∀ns < ∃ns < ∀as < ∃as < ∀cp < ∃cp <
//! ∀cs < ∃cs` (variable-major, universal before existential). This makes
//! each canonical class representative the least-indexed member of its
//! class.

use super::{ex, fa, ModeClass, ModeDefinition, Quantifier, Variable};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Elimination rule identifiers, in the fixed matching order.
///
/// The `Ap*` rules detect failure of the atomic property, the `Cp*` rules
/// failure of the cloning property. Any single match eliminates a
/// definition; the order below only fixes which rule gets reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleId {
    ApA,
    ApB,
    ApC,
    ApD,
    ApE,
    CpA,
    CpB,
    CpC,
    CpD,
    CpE,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::ApA => "AP-a",
            RuleId::ApB => "AP-b",
            RuleId::ApC => "AP-c",
            RuleId::ApD => "AP-d",
            RuleId::ApE => "AP-e",
            RuleId::CpA => "CP-a",
            RuleId::CpB => "CP-b",
            RuleId::CpC => "CP-c",
            RuleId::CpD => "CP-d",
            RuleId::CpE => "CP-e",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of the axiom-pattern screen for one definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EliminationVerdict {
    Meaningful,
    Eliminated(RuleId),
}

impl EliminationVerdict {
    pub fn is_meaningful(self) -> bool {
        matches!(self, EliminationVerdict::Meaningful)
    }

    pub fn rule(self) -> Option<RuleId> {
        match self {
            EliminationVerdict::Meaningful => None,
            EliminationVerdict::Eliminated(r) => Some(r),
        }
    }
}

/// All grammatical strings of length ≤ 4 in shortlex order. Count: 282.
pub fn enumerate_definitions() -> Vec<ModeDefinition> {
    let alphabet: Vec<Quantifier> = {
        let mut v = Vec::new();
        for var in Variable::ALL {
            v.push(fa(var));
            v.push(ex(var));
        }
        v
    };
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Quantifier>> = vec![Vec::new()];
    for len in 1..=4usize {
        let mut next = Vec::new();
        for prefix in &stack {
            for &q in &alphabet {
                if prefix.iter().any(|p| p.variable == q.variable) {
                    continue;
                }
                if q.variable == Variable::Cs
                    && !prefix.iter().any(|p| p.variable == Variable::Cp)
                {
                    continue;
                }
                let mut s = prefix.clone();
                s.push(q);
                next.push(s);
            }
        }
        for s in &next {
            if s.len() == len && s.iter().any(|q| q.variable == Variable::Ns) {
                out.push(ModeDefinition::new(s.clone()).expect("generated strings are grammatical"));
            }
        }
        stack = next;
    }
    out
}

/// Sorts every maximal run of same-polarity quantifiers by the variable
/// order `ns < as < cp < cs`. Adjacent same-polarity quantifiers commute
/// logically, so the result defines the same mode map. Idempotent.
pub fn logical_normal_form(d: &ModeDefinition) -> ModeDefinition {
    let mut qs = d.quantifiers().to_vec();
    let mut i = 0;
    while i < qs.len() {
        let mut j = i;
        while j + 1 < qs.len() && qs[j + 1].polarity == qs[i].polarity {
            j += 1;
        }
        qs[i..=j].sort_by_key(|q| q.variable);
        i = j + 1;
    }
    ModeDefinition::new(qs).expect("normalization preserves the grammar")
}

fn has(d: &ModeDefinition, q: Quantifier) -> bool {
    d.contains(q)
}

fn before(d: &ModeDefinition, a: Quantifier, b: Quantifier) -> bool {
    match (d.position(a), d.position(b)) {
        (Some(i), Some(j)) => i < j,
        _ => false,
    }
}

/// Applies the axiom-violation patterns in the fixed order `AP-a..AP-e,
/// CP-a..CP-e` and reports the first match, or `Meaningful`.
///
/// Patterns are matched against the logical normal form: the order
/// conditions below are stated between opposite-polarity quantifiers except
/// in CP-a/CP-d/CP-e, whose `ns`-relative conditions are only well defined
/// once same-polarity runs are in canonical order. Matching on the normal
/// form makes the verdict invariant under logical equivalence.
pub fn elimination_verdict(d: &ModeDefinition) -> EliminationVerdict {
    use Variable::*;
    let d = logical_normal_form(d);
    let pos_ns = d
        .position_of_variable(Ns)
        .expect("grammatical strings contain ns");

    if has(&d, ex(Cp)) {
        return EliminationVerdict::Eliminated(RuleId::ApA);
    }
    if has(&d, fa(Ns)) && has(&d, fa(As)) {
        return EliminationVerdict::Eliminated(RuleId::ApB);
    }
    if has(&d, ex(Cs)) && has(&d, ex(Ns)) {
        return EliminationVerdict::Eliminated(RuleId::ApC);
    }
    if before(&d, ex(Ns), fa(As)) {
        return EliminationVerdict::Eliminated(RuleId::ApD);
    }
    if before(&d, fa(Ns), ex(Cs)) {
        return EliminationVerdict::Eliminated(RuleId::ApE);
    }
    if has(&d, fa(Cp)) {
        let pos_facs = d.position(fa(Cs));
        if let Some(pc) = pos_facs {
            if pos_ns < pc && !has(&d, ex(As)) {
                return EliminationVerdict::Eliminated(RuleId::CpA);
            }
        }
        if has(&d, ex(Ns)) && has(&d, ex(As)) && pos_facs.is_none() {
            return EliminationVerdict::Eliminated(RuleId::CpB);
        }
        if before(&d, fa(Ns), ex(As)) && pos_facs.is_none() {
            return EliminationVerdict::Eliminated(RuleId::CpC);
        }
        if let (Some(pc), Some(pa)) = (pos_facs, d.position(ex(As))) {
            if pos_ns < pc && pa < pc {
                return EliminationVerdict::Eliminated(RuleId::CpD);
            }
            if pos_ns < pa && pc < pa {
                return EliminationVerdict::Eliminated(RuleId::CpE);
            }
        }
    }
    EliminationVerdict::Meaningful
}

/// The 21 meaningful strings grouped by canonical class.
pub fn class_members(class: ModeClass) -> Vec<ModeDefinition> {
    let strings: &[&str] = match class {
        ModeClass::S => &["[Ans]", "[Eas Ans]"],
        ModeClass::Gs => &["[Ans Eas]"],
        ModeClass::Ps => &["[Ens]", "[Aas Ens]"],
        ModeClass::Pgs => &["[Ens Eas]"],
        ModeClass::E => &["[Acp Acs Eas Ans]"],
        ModeClass::W => &[
            "[Ans Acp]",
            "[Eas Ans Acp]",
            "[Acp Eas Ans]",
            "[Acp Ecs Ans]",
            "[Eas Acp Ecs Ans]",
            "[Acp Eas Ecs Ans]",
        ],
        ModeClass::Pw => &["[Ens Acp]", "[Aas Ens Acp]"],
        ModeClass::Wp => &[
            "[Acp Ens]",
            "[Aas Acp Ens]",
            "[Acp Acs Ens]",
            "[Aas Acp Acs Ens]",
        ],
        ModeClass::Gwap => &["[Eas Acp Acs Ens]"],
        ModeClass::Wgap => &["[Acp Eas Acs Ens]"],
    };
    strings
        .iter()
        .map(|s| ModeDefinition::parse(s).expect("class table strings are grammatical"))
        .collect()
}

fn class_lookup() -> &'static BTreeMap<ModeDefinition, ModeClass> {
    static MAP: OnceLock<BTreeMap<ModeDefinition, ModeClass>> = OnceLock::new();
    MAP.get_or_init(|| {
        let mut map = BTreeMap::new();
        for class in ModeClass::ALL {
            for member in class_members(class) {
                map.insert(member, class);
            }
        }
        map
    })
}

/// Classification error for non-meaningful input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("definition {definition} is eliminated by rule {rule}")]
pub struct NotMeaningful {
    pub definition: String,
    pub rule: RuleId,
}

/// Maps a meaningful string onto one of the ten canonical classes.
pub fn canonical_class(d: &ModeDefinition) -> Result<ModeClass, NotMeaningful> {
    let nf = logical_normal_form(d);
    if let Some(&class) = class_lookup().get(&nf) {
        return Ok(class);
    }
    match elimination_verdict(d) {
        EliminationVerdict::Eliminated(rule) => Err(NotMeaningful {
            definition: d.ascii(),
            rule,
        }),
        EliminationVerdict::Meaningful => {
            unreachable!("every meaningful normal form appears in the class table")
        }
    }
}

/// Letter notation over `{g, s, w, p, a, e}`.
///
/// Each valid letter string translates into a quantifier string: `g` to
/// `∃as`, `p` to `∃ns`, `w` to `∀cp`, `a` to `∀cs` (only after `w`), `s`
/// marks comparison against the supremal mass and sits last, and a missing
/// `p` places an implicit leading `∀ns`. The exotic string gets the special
/// token `e`. Definitions outside the image of this translation have no
/// letter form.
pub fn letter_notation(d: &ModeDefinition) -> Option<String> {
    letter_lookup().get(d).cloned()
}

fn letter_lookup() -> &'static BTreeMap<ModeDefinition, String> {
    static MAP: OnceLock<BTreeMap<ModeDefinition, String>> = OnceLock::new();
    MAP.get_or_init(|| {
        let mut map = BTreeMap::new();
        for letters in valid_letter_strings() {
            if let Some(d) = translate_letters(&letters) {
                map.insert(d, letters);
            }
        }
        map.insert(ModeClass::E.canonical_string(), "e".to_string());
        map
    })
}

fn valid_letter_strings() -> Vec<String> {
    // Exactly one of {s, w}; `a` only after `w`; no repeats; `s` last.
    let mut out = Vec::new();
    let optional = ['g', 'p'];
    // strings using `s`
    for mask in 0..4u8 {
        let chosen: Vec<char> = optional
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        for perm in permutations(&chosen) {
            let mut s: String = perm.into_iter().collect();
            s.push('s');
            out.push(s);
        }
    }
    // strings using `w`, possibly with `a` somewhere after it
    for mask in 0..8u8 {
        let with_a = mask >> 2 & 1 == 1;
        let mut letters: Vec<char> = optional
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        letters.push('w');
        if with_a {
            letters.push('a');
        }
        for perm in permutations(&letters) {
            let wp = perm.iter().position(|&c| c == 'w').unwrap();
            if let Some(ap) = perm.iter().position(|&c| c == 'a') {
                if ap < wp {
                    continue;
                }
            }
            out.push(perm.into_iter().collect());
        }
    }
    out.sort();
    out.dedup();
    out
}

fn permutations(items: &[char]) -> Vec<Vec<char>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &c) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, c);
            out.push(tail);
        }
    }
    out
}

fn translate_letters(letters: &str) -> Option<ModeDefinition> {
    use Variable::*;
    let mut qs = Vec::new();
    if !letters.contains('p') {
        qs.push(fa(Ns));
    }
    for c in letters.chars() {
        match c {
            'g' => qs.push(ex(As)),
            'p' => qs.push(ex(Ns)),
            'w' => qs.push(fa(Cp)),
            'a' => qs.push(fa(Cs)),
            's' => {}
            _ => return None,
        }
    }
    ModeDefinition::new(qs).ok()
}

/// One row of the full enumeration table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRow {
    /// 1-based shortlex index.
    pub index: usize,
    pub string: ModeDefinition,
    /// Least index of a logically equivalent string.
    pub logical_rep: usize,
    /// True for the 21 self-representative meaningful strings.
    pub meaningful: bool,
    /// Elimination rule of the string's normal form, when eliminated.
    pub rule: Option<RuleId>,
    /// Least index of an equivalent meaningful string; present iff meaningful.
    pub canonical_rep: Option<usize>,
    pub letter: Option<String>,
}

/// The 282-row table: indices, logical representatives, verdicts, classes.
pub fn emit_table() -> Vec<TableRow> {
    let all = enumerate_definitions();
    let mut index_of: BTreeMap<ModeDefinition, usize> = BTreeMap::new();
    for (i, d) in all.iter().enumerate() {
        index_of.insert(d.clone(), i + 1);
    }
    let mut first_with_nf: BTreeMap<ModeDefinition, usize> = BTreeMap::new();
    for (i, d) in all.iter().enumerate() {
        first_with_nf.entry(logical_normal_form(d)).or_insert(i + 1);
    }
    // least index over all members of each canonical class
    let mut class_first: BTreeMap<ModeClass, usize> = BTreeMap::new();
    for class in ModeClass::ALL {
        let least = class_members(class)
            .iter()
            .map(|m| index_of[m])
            .min()
            .expect("classes are nonempty");
        class_first.insert(class, least);
    }

    all.iter()
        .enumerate()
        .map(|(i, d)| {
            let index = i + 1;
            let nf = logical_normal_form(d);
            let logical_rep = first_with_nf[&nf];
            let verdict = elimination_verdict(d);
            let meaningful = logical_rep == index && verdict.is_meaningful();
            let canonical_rep = if meaningful {
                let class = class_lookup()[&nf];
                Some(class_first[&class])
            } else {
                None
            };
            TableRow {
                index,
                string: d.clone(),
                logical_rep,
                meaningful,
                rule: verdict.rule(),
                canonical_rep,
                letter: letter_notation(d),
            }
        })
        .collect()
}

/// CSV export with the fixed header
/// `index,string,logical_rep,meaningful,rule,canonical_rep,letter`.
pub fn table_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("index,string,logical_rep,meaningful,rule,canonical_rep,letter\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.index,
            r.string.ascii(),
            r.logical_rep,
            r.meaningful,
            r.rule.map(|x| x.name()).unwrap_or(""),
            r.canonical_rep.map(|x| x.to_string()).unwrap_or_default(),
            r.letter.clone().unwrap_or_default(),
        ));
    }
    out
}

/// JSON export of the same rows.
pub fn table_to_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("table rows serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn counts_282_144_21_10() {
        let all = enumerate_definitions();
        assert_eq!(all.len(), 282);
        let nfs: BTreeSet<_> = all.iter().map(logical_normal_form).collect();
        assert_eq!(nfs.len(), 144);
        let meaningful: Vec<_> = nfs
            .iter()
            .filter(|d| elimination_verdict(d).is_meaningful())
            .collect();
        assert_eq!(meaningful.len(), 21);
        let classes: BTreeSet<_> = meaningful
            .iter()
            .map(|d| canonical_class(d).unwrap())
            .collect();
        assert_eq!(classes.len(), 10);
    }

    #[test]
    fn length_one_strings() {
        let all = enumerate_definitions();
        let len1: Vec<String> = all
            .iter()
            .filter(|d| d.len() == 1)
            .map(|d| d.ascii())
            .collect();
        assert_eq!(len1, vec!["[Ans]", "[Ens]"]);
        assert!(all.iter().all(|d| d.ascii() != "[Acs Ans]"));
    }

    #[test]
    fn normal_form_examples() {
        let a = ModeDefinition::parse("[Ens Eas Acp]").unwrap();
        let b = ModeDefinition::parse("[Eas Ens Acp]").unwrap();
        assert_eq!(logical_normal_form(&a), logical_normal_form(&b));
        let s = ModeDefinition::parse("[Ans]").unwrap();
        assert_eq!(logical_normal_form(&s), s);
        // idempotent on everything
        for d in enumerate_definitions() {
            let nf = logical_normal_form(&d);
            assert_eq!(logical_normal_form(&nf), nf);
        }
    }

    #[test]
    fn elimination_examples() {
        let d = ModeDefinition::parse("[Ecp Ans]").unwrap();
        assert_eq!(
            elimination_verdict(&d),
            EliminationVerdict::Eliminated(RuleId::ApA)
        );
        let d = ModeDefinition::parse("[Ans Eas Acp]").unwrap();
        assert_eq!(
            elimination_verdict(&d),
            EliminationVerdict::Eliminated(RuleId::CpC)
        );
        let d = ModeDefinition::parse("[Ans]").unwrap();
        assert_eq!(elimination_verdict(&d), EliminationVerdict::Meaningful);
        // the wag string fails CP-e
        let d = ModeDefinition::parse("[Ans Acp Acs Eas]").unwrap();
        assert_eq!(
            elimination_verdict(&d),
            EliminationVerdict::Eliminated(RuleId::CpE)
        );
    }

    #[test]
    fn verdict_invariant_under_normalization() {
        for d in enumerate_definitions() {
            assert_eq!(
                elimination_verdict(&d),
                elimination_verdict(&logical_normal_form(&d)),
                "verdict changed for {d}"
            );
        }
    }

    #[test]
    fn class_table_examples() {
        let d = ModeDefinition::parse("[Eas Ans]").unwrap();
        assert_eq!(canonical_class(&d).unwrap(), ModeClass::S);
        let d = ModeDefinition::parse("[Acp Eas Ecs Ans]").unwrap();
        assert_eq!(canonical_class(&d).unwrap(), ModeClass::W);
        let d = ModeDefinition::parse("[Aas Acp Acs Ens]").unwrap();
        assert_eq!(canonical_class(&d).unwrap(), ModeClass::Wp);
        let d = ModeDefinition::parse("[Ecp Ans]").unwrap();
        assert!(canonical_class(&d).is_err());
    }

    #[test]
    fn letters() {
        let d = ModeDefinition::parse("[Ans Eas]").unwrap();
        assert_eq!(letter_notation(&d).as_deref(), Some("gs"));
        let d = ModeDefinition::parse("[Acp Acs Eas Ans]").unwrap();
        assert_eq!(letter_notation(&d).as_deref(), Some("e"));
        let d = ModeDefinition::parse("[Ecp Ans]").unwrap();
        assert_eq!(letter_notation(&d), None);
        // wag and wap have letter forms even though wag is eliminated
        let d = ModeDefinition::parse("[Ans Acp Acs Eas]").unwrap();
        assert_eq!(letter_notation(&d).as_deref(), Some("wag"));
        let d = ModeDefinition::parse("[Acp Acs Ens]").unwrap();
        assert_eq!(letter_notation(&d).as_deref(), Some("wap"));
        let d = ModeDefinition::parse("[Ens]").unwrap();
        assert_eq!(letter_notation(&d).as_deref(), Some("ps"));
    }

    #[test]
    fn table_row_counts() {
        let rows = emit_table();
        assert_eq!(rows.len(), 282);
        assert_eq!(rows.iter().filter(|r| r.logical_rep == r.index).count(), 144);
        assert_eq!(rows.iter().filter(|r| r.meaningful).count(), 21);
        assert_eq!(
            rows.iter()
                .filter(|r| r.canonical_rep == Some(r.index))
                .count(),
            10
        );
        // the first row is [Ans], meaningful and self-canonical
        assert_eq!(rows[0].string.ascii(), "[Ans]");
        assert!(rows[0].meaningful);
        assert_eq!(rows[0].canonical_rep, Some(1));
        // every eliminated row carries a rule id; rows with meaningful normal
        // forms carry none
        for r in &rows {
            let v = elimination_verdict(&r.string);
            assert_eq!(r.rule.is_some(), !v.is_meaningful());
            assert!(r.logical_rep <= r.index);
            assert_eq!(r.canonical_rep.is_some(), r.meaningful);
        }
    }

    #[test]
    fn csv_shape() {
        let rows = emit_table();
        let csv = table_to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 283);
        assert_eq!(
            lines[0],
            "index,string,logical_rep,meaningful,rule,canonical_rep,letter"
        );
        assert!(lines[1].starts_with("1,[Ans],1,true,,1,s"));
    }
}
