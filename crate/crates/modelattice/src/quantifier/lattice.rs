//! The implication lattice of the ten canonical mode classes, its law
//! checks, downset machinery, and the quotient lattices for the special
//! measure classes.
//!
//! The order convention: `x ≥ y` means every `x`-mode is a `y`-mode, so the
//! strongest class (`s`) is the top element and `wgap` the bottom.

use super::ModeClass;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Hasse cover data of the main lattice, transcribed from the implication
/// diagram: an entry `(x, y)` says every `x`-mode is a `y`-mode, with no
/// class strictly between.
pub const MAIN_COVERS: [(ModeClass, ModeClass); 12] = {
    use ModeClass::*;
    [
        (S, Gs),
        (S, Ps),
        (S, E),
        (Gs, Pgs),
        (Ps, Pgs),
        (Ps, Pw),
        (E, W),
        (W, Pw),
        (Pw, Wp),
        (Wp, Gwap),
        (Pgs, Gwap),
        (Gwap, Wgap),
    ]
};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum LatticeError {
    #[error("partition does not cover node {0} exactly once")]
    BadPartition(String),
    #[error("quotient relation is not antisymmetric: {0} and {1} imply each other")]
    QuotientNotAntisymmetric(String, String),
    #[error("unknown quotient scenario {0:?}")]
    UnknownScenario(String),
}

/// A finite poset of mode-definition equivalence classes.
#[derive(Debug, Clone)]
pub struct ClassLattice {
    /// Node labels; for quotients these are merged names like `s=gs`.
    labels: Vec<String>,
    /// Members of each node (canonical classes merged into it).
    members: Vec<Vec<ModeClass>>,
    /// Hasse covers as index pairs `(x, y)`, x covering y from above.
    covers: Vec<(usize, usize)>,
    /// Reflexive-transitive closure: `ge[x][y]` = every x-mode is a y-mode.
    ge: Vec<Vec<bool>>,
}

/// Per-law validation outcomes with counterexample witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct LawsReport {
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub meets_exist: bool,
    pub joins_exist: bool,
    /// Every subset has an infimum and a supremum.
    pub complete: bool,
    pub has_top: bool,
    pub has_bottom: bool,
    pub distributive: bool,
    /// Triples `(x, y, z)` violating `x ∧ (y ∨ z) = (x∧y) ∨ (x∧z)` or its
    /// dual, by node label.
    pub distributivity_witnesses: Vec<(String, String, String)>,
}

impl LawsReport {
    /// Poset plus meet/join existence; what quotient construction needs.
    pub fn is_lattice(&self) -> bool {
        self.reflexive
            && self.antisymmetric
            && self.transitive
            && self.meets_exist
            && self.joins_exist
    }

    pub fn all_hold(&self) -> bool {
        self.is_lattice() && self.complete && self.has_top && self.has_bottom && self.distributive
    }
}

impl fmt::Display for LawsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "poset: reflexive={} antisymmetric={} transitive={}",
            self.reflexive, self.antisymmetric, self.transitive
        )?;
        writeln!(
            f,
            "lattice: meets={} joins={} complete={} top={} bottom={}",
            self.meets_exist, self.joins_exist, self.complete, self.has_top, self.has_bottom
        )?;
        write!(f, "distributive: {}", self.distributive)?;
        for (x, y, z) in self.distributivity_witnesses.iter().take(3) {
            write!(f, "\n  violated at ({x}, {y}, {z})")?;
        }
        Ok(())
    }
}

impl ClassLattice {
    fn from_covers(labels: Vec<String>, members: Vec<Vec<ModeClass>>, covers: Vec<(usize, usize)>) -> Self {
        let n = labels.len();
        let mut ge = vec![vec![false; n]; n];
        for (i, row) in ge.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &covers {
            ge[a][b] = true;
        }
        transitive_close(&mut ge);
        ClassLattice {
            labels,
            members,
            covers,
            ge,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn members(&self, node: usize) -> &[ModeClass] {
        &self.members[node]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Node index holding the given canonical class.
    pub fn node_of(&self, class: ModeClass) -> usize {
        self.members
            .iter()
            .position(|m| m.contains(&class))
            .expect("every class belongs to a node")
    }

    /// `x ⊒ y`: every x-mode is a y-mode.
    pub fn implies(&self, x: usize, y: usize) -> bool {
        self.ge[x][y]
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let n = self.node_count();
        let lower: Vec<usize> = (0..n)
            .filter(|&k| self.ge[x][k] && self.ge[y][k])
            .collect();
        lower
            .iter()
            .copied()
            .find(|&k| lower.iter().all(|&m| self.ge[k][m]))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let n = self.node_count();
        let upper: Vec<usize> = (0..n)
            .filter(|&k| self.ge[k][x] && self.ge[k][y])
            .collect();
        upper
            .iter()
            .copied()
            .find(|&k| upper.iter().all(|&m| self.ge[m][k]))
    }

    pub fn top(&self) -> Option<usize> {
        let n = self.node_count();
        (0..n).find(|&t| (0..n).all(|y| self.ge[t][y]))
    }

    pub fn bottom(&self) -> Option<usize> {
        let n = self.node_count();
        (0..n).find(|&b| (0..n).all(|x| self.ge[x][b]))
    }

    /// Runs every lattice law exhaustively and reports witnesses.
    pub fn validate(&self) -> LawsReport {
        let n = self.node_count();
        let reflexive = (0..n).all(|i| self.ge[i][i]);
        let antisymmetric =
            (0..n).all(|i| (0..n).all(|j| i == j || !(self.ge[i][j] && self.ge[j][i])));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| !(self.ge[i][j] && self.ge[j][k]) || self.ge[i][k])
            })
        });
        let meets_exist = (0..n).all(|i| (0..n).all(|j| self.meet(i, j).is_some()));
        let joins_exist = (0..n).all(|i| (0..n).all(|j| self.join(i, j).is_some()));
        // finite completeness: fold meets/joins over every nonempty subset
        let mut complete = meets_exist && joins_exist;
        if complete && n <= 16 {
            'outer: for mask in 1u32..(1 << n) {
                let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let inf = elems
                    .iter()
                    .copied()
                    .try_fold(elems[0], |acc, x| self.meet(acc, x));
                let sup = elems
                    .iter()
                    .copied()
                    .try_fold(elems[0], |acc, x| self.join(acc, x));
                if inf.is_none() || sup.is_none() {
                    complete = false;
                    break 'outer;
                }
            }
        }
        let has_top = self.top().is_some();
        let has_bottom = self.bottom().is_some();

        let mut witnesses = Vec::new();
        if meets_exist && joins_exist {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = self.meet(x, self.join(y, z).unwrap()).unwrap();
                        let rhs = self
                            .join(self.meet(x, y).unwrap(), self.meet(x, z).unwrap())
                            .unwrap();
                        let dual_l = self.join(x, self.meet(y, z).unwrap()).unwrap();
                        let dual_r = self
                            .meet(self.join(x, y).unwrap(), self.join(x, z).unwrap())
                            .unwrap();
                        if lhs != rhs || dual_l != dual_r {
                            witnesses.push((
                                self.labels[x].clone(),
                                self.labels[y].clone(),
                                self.labels[z].clone(),
                            ));
                        }
                    }
                }
            }
        }
        LawsReport {
            reflexive,
            antisymmetric,
            transitive,
            meets_exist,
            joins_exist,
            complete,
            has_top,
            has_bottom,
            distributive: witnesses.is_empty(),
            distributivity_witnesses: witnesses,
        }
    }

    /// All downward-closed subsets, as bitmasks over node indices.
    pub fn downsets(&self) -> Vec<u32> {
        let n = self.node_count();
        (0u32..(1 << n))
            .filter(|&mask| {
                (0..n).all(|x| {
                    mask >> x & 1 == 0
                        || (0..n).all(|y| !self.ge[x][y] || mask >> y & 1 == 1)
                })
            })
            .collect()
    }

    /// Graphviz DOT text: one node per class, one edge per Hasse cover.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mode_lattice {\n  rankdir=TB;\n  node [shape=box];\n");
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.labels[a], self.labels[b]
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn transitive_close(ge: &mut [Vec<bool>]) {
    let n = ge.len();
    for k in 0..n {
        for i in 0..n {
            if ge[i][k] {
                for j in 0..n {
                    if ge[k][j] {
                        ge[i][j] = true;
                    }
                }
            }
        }
    }
}

/// Builds the 10-node main lattice from the transcribed cover data.
pub fn build_main_lattice() -> ClassLattice {
    let labels: Vec<String> = ModeClass::ALL.iter().map(|c| c.name().to_string()).collect();
    let members: Vec<Vec<ModeClass>> = ModeClass::ALL.iter().map(|&c| vec![c]).collect();
    let idx = |c: ModeClass| ModeClass::ALL.iter().position(|&x| x == c).unwrap();
    let covers = MAIN_COVERS.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    ClassLattice::from_covers(labels, members, covers)
}

/// A minimum family of downsets separating the lattice.
#[derive(Debug, Clone, Serialize)]
pub struct SeparatingFamily {
    pub size: usize,
    /// Each witness downset, as sorted node labels.
    pub witness: Vec<Vec<String>>,
}

/// Finds the least `k` such that some `k` downsets separate every ordered
/// pair `(x, y)` with `x` not below `y`: some member contains `y` but not
/// `x`. Pairs with `x ≤ y` are inseparable by downsets (any downset holding
/// `y` holds `x`) and correspond to true implications, so they are exempt.
pub fn min_separating_family(lattice: &ClassLattice) -> SeparatingFamily {
    let n = lattice.node_count();
    let downsets = lattice.downsets();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && !lattice.implies(y, x) {
                pairs.push((x, y));
            }
        }
    }
    let full: u128 = if pairs.len() == 128 {
        u128::MAX
    } else {
        (1u128 << pairs.len()) - 1
    };
    let masks: Vec<u128> = downsets
        .iter()
        .map(|&s| {
            let mut m = 0u128;
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if s >> y & 1 == 1 && s >> x & 1 == 0 {
                    m |= 1 << i;
                }
            }
            m
        })
        .collect();

    fn search(masks: &[u128], full: u128, k: usize) -> Option<Vec<usize>> {
        fn rec(
            masks: &[u128],
            full: u128,
            start: usize,
            acc: u128,
            left: usize,
            chosen: &mut Vec<usize>,
        ) -> bool {
            if acc == full {
                return true;
            }
            if left == 0 {
                return false;
            }
            for i in start..masks.len() {
                let next = acc | masks[i];
                if next == acc {
                    continue;
                }
                chosen.push(i);
                if rec(masks, full, i + 1, next, left - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        if rec(masks, full, 0, 0, k, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    for k in 1..=downsets.len() {
        if let Some(chosen) = search(&masks, full, k) {
            let witness = chosen
                .iter()
                .map(|&c| {
                    let s = downsets[c];
                    (0..n)
                        .filter(|&i| s >> i & 1 == 1)
                        .map(|i| lattice.labels()[i].clone())
                        .collect()
                })
                .collect();
            return SeparatingFamily { size: k, witness };
        }
    }
    unreachable!("the full downset family always separates")
}

/// Checks that the given downsets (by class) jointly separate the lattice.
pub fn family_separates(lattice: &ClassLattice, family: &[Vec<ModeClass>]) -> bool {
    let n = lattice.node_count();
    let sets: Vec<u32> = family
        .iter()
        .map(|s| s.iter().map(|&c| 1u32 << lattice.node_of(c)).sum())
        .collect();
    let downsets = lattice.downsets();
    if sets.iter().any(|s| !downsets.contains(s)) {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && !lattice.implies(y, x) {
                let ok = sets
                    .iter()
                    .any(|&s| s >> y & 1 == 1 && s >> x & 1 == 0);
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Quotients the lattice by a partition of its classes.
///
/// The induced relation `A ⊒ B` holds when some member of `A` implies some
/// member of `B`; its reflexive-transitive closure must be antisymmetric.
pub fn quotient_lattice(
    lattice: &ClassLattice,
    partition: &[Vec<ModeClass>],
) -> Result<ClassLattice, LatticeError> {
    let mut owner: BTreeMap<ModeClass, usize> = BTreeMap::new();
    for (i, group) in partition.iter().enumerate() {
        for &c in group {
            if owner.insert(c, i).is_some() {
                return Err(LatticeError::BadPartition(c.name().to_string()));
            }
        }
    }
    for c in ModeClass::ALL {
        if !owner.contains_key(&c) {
            return Err(LatticeError::BadPartition(c.name().to_string()));
        }
    }
    let k = partition.len();
    let mut ge = vec![vec![false; k]; k];
    for (i, row) in ge.iter_mut().enumerate() {
        row[i] = true;
    }
    for x in ModeClass::ALL {
        for y in ModeClass::ALL {
            if lattice.implies(lattice.node_of(x), lattice.node_of(y)) {
                ge[owner[&x]][owner[&y]] = true;
            }
        }
    }
    transitive_close(&mut ge);
    for a in 0..k {
        for b in 0..k {
            if a != b && ge[a][b] && ge[b][a] {
                return Err(LatticeError::QuotientNotAntisymmetric(
                    label_of(&partition[a]),
                    label_of(&partition[b]),
                ));
            }
        }
    }
    // Hasse covers = transitive reduction
    let mut covers = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a != b && ge[a][b] {
                let direct = !(0..k).any(|c| c != a && c != b && ge[a][c] && ge[c][b]);
                if direct {
                    covers.push((a, b));
                }
            }
        }
    }
    let labels = partition.iter().map(|g| label_of(g)).collect();
    Ok(ClassLattice {
        labels,
        members: partition.to_vec(),
        covers,
        ge,
    })
}

fn label_of(group: &[ModeClass]) -> String {
    group
        .iter()
        .map(|c| c.name())
        .collect::<Vec<_>>()
        .join("=")
}

/// A named coincidence scenario: the partition induced on the ten classes,
/// the expected node count, and the expected cover relation of its figure.
#[derive(Debug, Clone)]
pub struct QuotientScenario {
    pub name: &'static str,
    pub partition: Vec<Vec<ModeClass>>,
    pub expected_nodes: usize,
    /// Expected Hasse covers between groups, identified by any member.
    pub expected_covers: Vec<(ModeClass, ModeClass)>,
}

/// The eleven shipped scenario partitions with their figure data.
pub fn quotient_scenarios() -> Vec<QuotientScenario> {
    use ModeClass::*;
    vec![
        QuotientScenario {
            name: "casio",
            partition: vec![
                vec![S, Gs],
                vec![Ps, Pgs],
                vec![E],
                vec![W],
                vec![Pw],
                vec![Wp, Gwap, Wgap],
            ],
            expected_nodes: 6,
            expected_covers: vec![(S, Ps), (S, E), (Ps, Pw), (E, W), (W, Pw), (Pw, Wp)],
        },
        QuotientScenario {
            name: "casio-everywhere",
            partition: vec![
                vec![S, Gs],
                vec![Ps, Pgs],
                vec![E, W],
                vec![Pw],
                vec![Wp, Gwap, Wgap],
            ],
            expected_nodes: 5,
            expected_covers: vec![(S, Ps), (S, E), (Ps, Pw), (E, Pw), (Pw, Wp)],
        },
        QuotientScenario {
            name: "om",
            partition: vec![
                vec![S],
                vec![Gs],
                vec![Pgs],
                vec![E],
                vec![Ps],
                vec![W, Pw, Wp],
                vec![Gwap],
                vec![Wgap],
            ],
            expected_nodes: 8,
            expected_covers: vec![
                (S, Gs),
                (S, E),
                (S, Ps),
                (Gs, Pgs),
                (Pgs, Gwap),
                (E, W),
                (Ps, Pgs),
                (Ps, W),
                (W, Gwap),
                (Gwap, Wgap),
            ],
        },
        QuotientScenario {
            name: "casio-om",
            partition: vec![
                vec![S, Gs],
                vec![Ps, Pgs],
                vec![E],
                vec![W, Pw, Wp, Gwap, Wgap],
            ],
            expected_nodes: 4,
            expected_covers: vec![(S, Ps), (S, E), (Ps, W), (E, W)],
        },
        QuotientScenario {
            name: "casio-om-everywhere",
            partition: vec![
                vec![S, Gs],
                vec![Ps, Pgs],
                vec![E, W, Pw, Wp, Gwap, Wgap],
            ],
            expected_nodes: 3,
            expected_covers: vec![(S, Ps), (Ps, E)],
        },
        QuotientScenario {
            name: "exists-s",
            partition: vec![
                vec![S, E, W],
                vec![Gs],
                vec![Ps, Pw, Wp],
                vec![Pgs, Gwap, Wgap],
            ],
            expected_nodes: 4,
            expected_covers: vec![(S, Gs), (S, Ps), (Gs, Pgs), (Ps, Pgs)],
        },
        QuotientScenario {
            name: "exists-s-casio",
            partition: vec![
                vec![S, E, W, Gs],
                vec![Ps, Pgs, Pw, Wp, Gwap, Wgap],
            ],
            expected_nodes: 2,
            expected_covers: vec![(S, Ps)],
        },
        QuotientScenario {
            name: "exists-s-om",
            partition: vec![
                vec![S, E, W, Pw, Wp, Ps],
                vec![Gs],
                vec![Pgs, Gwap, Wgap],
            ],
            expected_nodes: 3,
            expected_covers: vec![(S, Gs), (Gs, Pgs)],
        },
        QuotientScenario {
            name: "exists-s-casio-om",
            partition: vec![ModeClass::ALL.to_vec()],
            expected_nodes: 1,
            expected_covers: vec![],
        },
        QuotientScenario {
            name: "gaussian-continuous",
            partition: vec![
                vec![S, Gs],
                vec![Ps, Pgs],
                vec![E, W, Pw, Wp, Gwap, Wgap],
            ],
            expected_nodes: 3,
            expected_covers: vec![(S, Ps), (Ps, E)],
        },
        QuotientScenario {
            name: "gaussian-strong",
            partition: vec![ModeClass::ALL.to_vec()],
            expected_nodes: 1,
            expected_covers: vec![],
        },
    ]
}

/// Looks up a scenario partition by name.
pub fn scenario_partition(name: &str) -> Result<QuotientScenario, LatticeError> {
    quotient_scenarios()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| LatticeError::UnknownScenario(name.to_string()))
}

/// Checks one scenario against its figure data; returns the quotient.
pub fn check_scenario(
    lattice: &ClassLattice,
    scenario: &QuotientScenario,
) -> Result<ClassLattice, String> {
    let q = quotient_lattice(lattice, &scenario.partition).map_err(|e| e.to_string())?;
    if q.node_count() != scenario.expected_nodes {
        return Err(format!(
            "scenario {}: {} nodes, expected {}",
            scenario.name,
            q.node_count(),
            scenario.expected_nodes
        ));
    }
    if !q.validate().is_lattice() {
        return Err(format!("scenario {}: quotient is not a lattice", scenario.name));
    }
    let mut expected: Vec<(usize, usize)> = scenario
        .expected_covers
        .iter()
        .map(|&(a, b)| (q.node_of(a), q.node_of(b)))
        .collect();
    expected.sort_unstable();
    let mut got = q.covers().to_vec();
    got.sort_unstable();
    if got != expected {
        return Err(format!(
            "scenario {}: covering relation mismatch (got {:?}, expected {:?})",
            scenario.name, got, expected
        ));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ModeClass::*;

    #[test]
    fn main_lattice_order() {
        let l = build_main_lattice();
        assert_eq!(l.node_count(), 10);
        assert_eq!(l.covers().len(), 12);
        assert_eq!(l.top(), Some(l.node_of(S)));
        assert_eq!(l.bottom(), Some(l.node_of(Wgap)));
        assert!(l.implies(l.node_of(S), l.node_of(Wgap)));
        assert!(!l.implies(l.node_of(Gs), l.node_of(Wp)));
        assert!(!l.implies(l.node_of(Wp), l.node_of(Gs)));
    }

    #[test]
    fn meets_and_joins() {
        let l = build_main_lattice();
        assert_eq!(l.meet(l.node_of(Gs), l.node_of(E)), Some(l.node_of(Gwap)));
        assert_eq!(l.join(l.node_of(Ps), l.node_of(E)), Some(l.node_of(S)));
    }

    #[test]
    fn laws_report() {
        let l = build_main_lattice();
        let r = l.validate();
        assert!(r.reflexive && r.antisymmetric && r.transitive);
        assert!(r.meets_exist && r.joins_exist && r.complete);
        assert!(r.has_top && r.has_bottom);
        // The order as transcribed contains the pentagon
        // {s, gs, pw, wp, gwap}, so the distributive law fails; see the
        // witness triple (pw, gs, wp).
        assert!(!r.distributive);
        assert!(r
            .distributivity_witnesses
            .contains(&("pw".into(), "gs".into(), "wp".into())));
    }

    #[test]
    fn downset_count_and_separation() {
        let l = build_main_lattice();
        assert_eq!(l.downsets().len(), 24);
        let fam = min_separating_family(&l);
        assert_eq!(fam.size, 6);
        // red-line rows from the counterexample figure
        let red: Vec<Vec<ModeClass>> = vec![
            vec![E, W, Pw, Wp, Gwap, Wgap],
            vec![W, Pw, Wp, Gwap, Wgap],
            vec![Ps, Pgs, Pw, Wp, Gwap, Wgap],
            vec![Wp, Gwap, Wgap],
            vec![Gs, Pgs, Gwap, Wgap],
            vec![Wgap],
        ];
        assert!(family_separates(&l, &red));
    }

    #[test]
    fn two_chain_needs_one_downset() {
        let labels = vec!["top".to_string(), "bottom".to_string()];
        let members = vec![vec![ModeClass::S], vec![ModeClass::Wgap]];
        let chain = ClassLattice::from_covers(labels, members, vec![(0, 1)]);
        let fam = min_separating_family(&chain);
        assert_eq!(fam.size, 1);
        assert_eq!(fam.witness[0], vec!["bottom".to_string()]);
    }

    #[test]
    fn quotient_scenarios_match_figures() {
        let l = build_main_lattice();
        let counts: Vec<usize> = quotient_scenarios()
            .iter()
            .map(|s| check_scenario(&l, s).unwrap().node_count())
            .collect();
        assert_eq!(counts, vec![6, 5, 8, 4, 3, 4, 2, 3, 1, 3, 1]);
    }

    #[test]
    fn singleton_quotient_is_isomorphic() {
        let l = build_main_lattice();
        let partition: Vec<Vec<ModeClass>> = ModeClass::ALL.iter().map(|&c| vec![c]).collect();
        let q = quotient_lattice(&l, &partition).unwrap();
        assert_eq!(q.node_count(), 10);
        let mut a = q.covers().to_vec();
        let mut b = l.covers().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_partition_rejected() {
        let l = build_main_lattice();
        // missing classes
        let p = vec![vec![S]];
        assert!(matches!(
            quotient_lattice(&l, &p),
            Err(LatticeError::BadPartition(_))
        ));
        // duplicated class
        let mut p: Vec<Vec<ModeClass>> = ModeClass::ALL.iter().map(|&c| vec![c]).collect();
        p[1].push(S);
        assert!(matches!(
            quotient_lattice(&l, &p),
            Err(LatticeError::BadPartition(_))
        ));
    }

    #[test]
    fn dot_export_shape() {
        let l = build_main_lattice();
        let dot = l.to_dot();
        assert_eq!(dot.matches(" -> ").count(), 12);
        assert_eq!(dot.matches("\"s\"").count(), 1 + 3); // node line + 3 edges from s
        assert!(dot.starts_with("digraph"));
    }
}
