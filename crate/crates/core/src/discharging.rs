//! Exact discharging on a map.
//!
//! Vertices start with `2 deg(v) - 6` and faces with `deg(f) - 6`, which sum
//! to `-6 chi`. Rules A1 to A4 move charge according to degrees only; rule B
//! then empties every major face (degree at least 7) equally onto its
//! corners. Every movement is written to a [`TransferLedger`].
//!
//! Transfers are per incidence: a vertex meeting a face at two corners pays
//! or receives twice. On polyhedral maps every incidence is simple.

use std::fmt;

use num_traits::Zero;

use crate::curvature::match_light;
use crate::error::DischargeError;
use crate::rational::{int, rat, to_fraction_string, Rational};
use crate::surface_map::{EdgeClass, MapTopology};

/// Faces of at least this degree use the last row of the rule A3 tables
/// and send charge under rule A4.
pub const HUGE_FACE: usize = 2519;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    A1,
    A2,
    A3,
    A4,
    B,
}

impl Rule {
    pub const A_RULES: [Rule; 4] = [Rule::A1, Rule::A2, Rule::A3, Rule::A4];

    pub fn name(self) -> &'static str {
        match self {
            Rule::A1 => "A1",
            Rule::A2 => "A2",
            Rule::A3 => "A3",
            Rule::A4 => "A4",
            Rule::B => "B",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Initial,
    /// Some but not all of A1 to A4 applied.
    DuringA,
    AfterA,
    AfterB,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeState {
    pub vertex_charge: Vec<Rational>,
    pub face_charge: Vec<Rational>,
    applied: Vec<Rule>,
}

impl ChargeState {
    /// `2 deg(v) - 6` on vertices, `deg(f) - 6` on faces.
    pub fn initial(top: &MapTopology) -> Self {
        ChargeState {
            vertex_charge: (0..top.num_vertices())
                .map(|v| int(2 * top.vertex_degree(v) as i64 - 6))
                .collect(),
            face_charge: top
                .face_degrees()
                .iter()
                .map(|&d| int(d as i64 - 6))
                .collect(),
            applied: Vec::new(),
        }
    }

    pub fn applied(&self) -> &[Rule] {
        &self.applied
    }

    pub fn stage(&self) -> Stage {
        if self.applied.contains(&Rule::B) {
            Stage::AfterB
        } else if Rule::A_RULES.iter().all(|r| self.applied.contains(r)) {
            Stage::AfterA
        } else if self.applied.is_empty() {
            Stage::Initial
        } else {
            Stage::DuringA
        }
    }

    pub fn charge(&self, element: Element) -> &Rational {
        match element {
            Element::Vertex(v) => &self.vertex_charge[v],
            Element::Face(f) => &self.face_charge[f],
        }
    }

    fn charge_mut(&mut self, element: Element) -> &mut Rational {
        match element {
            Element::Vertex(v) => &mut self.vertex_charge[v],
            Element::Face(f) => &mut self.face_charge[f],
        }
    }

    pub fn total(&self) -> Rational {
        self.vertex_charge
            .iter()
            .chain(&self.face_charge)
            .fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Same charges, ignoring which rules produced them.
    pub fn same_charges(&self, other: &ChargeState) -> bool {
        self.vertex_charge == other.vertex_charge && self.face_charge == other.face_charge
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub rule: Rule,
    pub source: Element,
    pub target: Element,
    pub amount: Rational,
    /// Degree data that selected the amount.
    pub justification: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransferLedger {
    pub entries: Vec<LedgerEntry>,
}

impl TransferLedger {
    /// Applies every entry, in order, to a copy of `state`. Rules that moved
    /// no charge leave no entries, so compare the result with
    /// [`ChargeState::same_charges`].
    pub fn replay(&self, state: &ChargeState) -> ChargeState {
        let mut out = state.clone();
        for e in &self.entries {
            *out.charge_mut(e.source) -= &e.amount;
            *out.charge_mut(e.target) += &e.amount;
            if !out.applied.contains(&e.rule) {
                out.applied.push(e.rule);
            }
        }
        out
    }

    /// One `rule<TAB>source<TAB>target<TAB>num/den` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                e.rule,
                e.source,
                e.target,
                to_fraction_string(&e.amount)
            ));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn by_rule(&self, rule: Rule) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(move |e| e.rule == rule)
    }
}

fn send(
    state: &mut ChargeState,
    ledger: &mut TransferLedger,
    rule: Rule,
    source: Element,
    target: Element,
    amount: Rational,
    justification: String,
) {
    *state.charge_mut(source) -= &amount;
    *state.charge_mut(target) += &amount;
    ledger.entries.push(LedgerEntry {
        rule,
        source,
        target,
        amount,
        justification,
    });
}

fn mark(state: &mut ChargeState, rule: Rule) {
    if !state.applied.contains(&rule) {
        state.applied.push(rule);
    }
}

/// A1: a vertex of degree at least 4 sends 1, 1/2, 1/5 to each incident
/// 3-, 4-, 5-face.
pub fn apply_rule_a1(state: &mut ChargeState, top: &MapTopology, ledger: &mut TransferLedger) {
    for v in 0..top.num_vertices() {
        let dv = top.vertex_degree(v);
        if dv < 4 {
            continue;
        }
        for &f in top.corner_faces(v) {
            let df = top.face_degree(f);
            let amount = match df {
                3 => int(1),
                4 => rat(1, 2),
                5 => rat(1, 5),
                _ => continue,
            };
            let why = format!("deg(v)={dv} deg(f)={df}");
            send(
                state,
                ledger,
                Rule::A1,
                Element::Vertex(v),
                Element::Face(f),
                amount,
                why,
            );
        }
    }
    mark(state, Rule::A1);
}

/// A2: a vertex of degree at least 4 with at least one 3-face and at least
/// two 6-faces sends an extra 1/10 to each incident 3-face.
pub fn apply_rule_a2(state: &mut ChargeState, top: &MapTopology, ledger: &mut TransferLedger) {
    for v in 0..top.num_vertices() {
        let dv = top.vertex_degree(v);
        if dv < 4 {
            continue;
        }
        let corners = top.corner_faces(v);
        let triangles = corners.iter().filter(|&&f| top.face_degree(f) == 3).count();
        let hexagons = corners.iter().filter(|&&f| top.face_degree(f) == 6).count();
        if triangles == 0 || hexagons < 2 {
            continue;
        }
        for &f in corners.iter().filter(|&&f| top.face_degree(f) == 3) {
            let why = format!("deg(v)={dv} 3-faces={triangles} 6-faces={hexagons}");
            send(
                state,
                ledger,
                Rule::A2,
                Element::Vertex(v),
                Element::Face(f),
                rat(1, 10),
                why,
            );
        }
    }
    mark(state, Rule::A2);
}

/// Charge a major face of degree `major` sends across an edge to a minor
/// face of degree `minor` under rule A3.
pub fn rule_a3_amount(class: EdgeClass, major: usize, minor: usize) -> Option<Rational> {
    let band = match major {
        0..=6 => return None,
        7..=8 => 0,
        9..=12 => 1,
        13..=2518 => 2,
        _ => 3,
    };
    let col = match minor {
        3 => 0,
        4 => 1,
        5 => 2,
        _ => return None,
    };
    const WEAK: [[(i64, i64); 3]; 4] = [
        [(1, 5), (1, 5), (1, 5)],
        [(1, 2), (1, 2), (1, 5)],
        [(1, 1), (1, 2), (1, 5)],
        [(19, 10), (1, 1), (2, 5)],
    ];
    const SEMI_WEAK: [[(i64, i64); 3]; 4] = [
        [(1, 10), (1, 10), (1, 10)],
        [(1, 4), (1, 4), (1, 10)],
        [(1, 2), (1, 4), (1, 10)],
        [(1, 1), (1, 2), (1, 5)],
    ];
    let (n, d) = match class {
        EdgeClass::Weak => WEAK[band][col],
        EdgeClass::SemiWeak => SEMI_WEAK[band][col],
        EdgeClass::Normal => return None,
    };
    Some(rat(n, d))
}

/// A3: across a weak or semi-weak edge, a major face sends charge to the
/// minor face on the other side.
pub fn apply_rule_a3(
    state: &mut ChargeState,
    top: &MapTopology,
    ledger: &mut TransferLedger,
) -> Result<(), DischargeError> {
    for e in 0..top.num_edges() {
        let [f, g] = top.edge_faces(e);
        if f == g {
            return Err(DischargeError::SameFaceBothSides { edge: e, face: f });
        }
        let (df, dg) = (top.face_degree(f), top.face_degree(g));
        let (minor, major) = if df <= 5 && dg >= 7 {
            (f, g)
        } else if dg <= 5 && df >= 7 {
            (g, f)
        } else {
            continue;
        };
        let class = top.classify_edge(e).expect("edge in range");
        let (dmin, dmaj) = (top.face_degree(minor), top.face_degree(major));
        if let Some(amount) = rule_a3_amount(class, dmaj, dmin) {
            let why = format!("edge {e} {class:?} deg(major)={dmaj} deg(minor)={dmin}");
            send(
                state,
                ledger,
                Rule::A3,
                Element::Face(major),
                Element::Face(minor),
                amount,
                why,
            );
        }
    }
    mark(state, Rule::A3);
    Ok(())
}

/// A4: a face of degree `k >= 2519` sends 1/2 to each incident
/// `(3,3,4,k)`-vertex and 1/5 to each incident `(3,3,5,k)`-vertex.
pub fn apply_rule_a4(state: &mut ChargeState, top: &MapTopology, ledger: &mut TransferLedger) {
    for (f, walk) in top.faces().iter().enumerate() {
        let k = walk.degree();
        if k < HUGE_FACE {
            continue;
        }
        for &(v, _) in &walk.corners {
            let t = top.vertex_type(v).expect("vertex in range");
            let amount = if t == [3, 3, 4, k] {
                rat(1, 2)
            } else if t == [3, 3, 5, k] {
                rat(1, 5)
            } else {
                continue;
            };
            let why = format!("deg(f)={k} type(v)={t:?}");
            send(
                state,
                ledger,
                Rule::A4,
                Element::Face(f),
                Element::Vertex(v),
                amount,
                why,
            );
        }
    }
    mark(state, Rule::A4);
}

/// B: every major face sends its whole current charge, split equally, to
/// its corners. There is no sign guard; a negative charge is spread too.
pub fn apply_rule_b(
    state: &mut ChargeState,
    top: &MapTopology,
    ledger: &mut TransferLedger,
) -> Result<(), DischargeError> {
    if state.stage() != Stage::AfterA {
        return Err(DischargeError::OutOfOrder {
            rule: "B",
            reason: format!("expected all of A1-A4 applied, found {:?}", state.applied),
        });
    }
    for (f, walk) in top.faces().iter().enumerate() {
        let k = walk.degree();
        if k < 7 {
            continue;
        }
        let share = &state.face_charge[f] / int(k as i64);
        for &(v, _) in &walk.corners {
            let why = format!("deg(f)={k}");
            send(
                state,
                ledger,
                Rule::B,
                Element::Face(f),
                Element::Vertex(v),
                share.clone(),
                why,
            );
        }
    }
    mark(state, Rule::B);
    Ok(())
}

/// Lower bound on a face's charge after rules A1 to A4.
pub fn face_bound_after_a(degree: usize) -> Rational {
    match degree {
        0..=6 => int(0),
        7 => rat(2, 5),
        8 => rat(6, 5),
        9 => int(1),
        10 => rat(3, 2),
        11 => rat(5, 2),
        12 => int(3),
        d => rat(d as i64, 21),
    }
}

/// Lower bound on a vertex's final charge.
pub fn vertex_bound_after_b() -> Rational {
    rat(1, 21)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub element: Element,
    pub charge: Rational,
    pub bound: Rational,
}

/// Charges compared against their lower bounds.
///
/// The bounds are only guaranteed on maps without light vertices, so
/// violations are informational unless the light census is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundAudit {
    /// Faces below their degree bound after rules A1 to A4.
    pub face_violations_after_a: Vec<Violation>,
    /// Vertices with negative charge after rules A1 to A4.
    pub vertex_violations_after_a: Vec<Violation>,
    /// Vertices below 1/21 after rule B.
    pub vertex_violations_after_b: Vec<Violation>,
    pub light_vertices: usize,
    pub vertices: usize,
}

impl BoundAudit {
    pub fn has_violations(&self) -> bool {
        !(self.face_violations_after_a.is_empty()
            && self.vertex_violations_after_a.is_empty()
            && self.vertex_violations_after_b.is_empty())
    }

    /// Violations on a map with no light vertex contradict the bounds.
    pub fn hard_failure(&self) -> bool {
        self.light_vertices == 0 && self.has_violations()
    }

    pub fn context(&self) -> String {
        match self.light_vertices {
            0 => "no light vertices".to_string(),
            n if n == self.vertices => "all vertices light".to_string(),
            n => format!("{n} of {} vertices light", self.vertices),
        }
    }
}

pub fn audit(top: &MapTopology, after_a: &ChargeState, after_b: &ChargeState) -> BoundAudit {
    let mut face_violations_after_a = Vec::new();
    for (f, c) in after_a.face_charge.iter().enumerate() {
        let bound = face_bound_after_a(top.face_degree(f));
        if *c < bound {
            face_violations_after_a.push(Violation {
                element: Element::Face(f),
                charge: c.clone(),
                bound,
            });
        }
    }
    let below = |charges: &[Rational], bound: Rational| -> Vec<Violation> {
        charges
            .iter()
            .enumerate()
            .filter(|(_, c)| **c < bound)
            .map(|(v, c)| Violation {
                element: Element::Vertex(v),
                charge: c.clone(),
                bound: bound.clone(),
            })
            .collect()
    };
    let light_vertices = (0..top.num_vertices())
        .filter(|&v| match_light(&top.vertex_type(v).expect("vertex in range")).is_some())
        .count();
    BoundAudit {
        face_violations_after_a,
        vertex_violations_after_a: below(&after_a.vertex_charge, int(0)),
        vertex_violations_after_b: below(&after_b.vertex_charge, vertex_bound_after_b()),
        light_vertices,
        vertices: top.num_vertices(),
    }
}

/// Every stage of a discharging run.
#[derive(Clone, Debug)]
pub struct Discharge {
    pub initial: ChargeState,
    pub after_a: ChargeState,
    pub after_b: ChargeState,
    pub ledger: TransferLedger,
    pub audit: BoundAudit,
}

fn check_conservation(
    state: &ChargeState,
    expected: &Rational,
    stage: &str,
) -> Result<(), DischargeError> {
    let total = state.total();
    if &total != expected {
        return Err(DischargeError::Conservation {
            stage: stage.to_string(),
            total: to_fraction_string(&total),
            expected: to_fraction_string(expected),
        });
    }
    Ok(())
}

/// Runs A1, A2, A3, A4 then B, checking after each rule that the total
/// charge is still `-6 chi`.
pub fn run_discharge(top: &MapTopology) -> Result<Discharge, DischargeError> {
    let expected = int(-6 * top.euler_characteristic());
    let initial = ChargeState::initial(top);
    check_conservation(&initial, &expected, "initial")?;
    let mut state = initial.clone();
    let mut ledger = TransferLedger::default();

    apply_rule_a1(&mut state, top, &mut ledger);
    check_conservation(&state, &expected, "A1")?;
    apply_rule_a2(&mut state, top, &mut ledger);
    check_conservation(&state, &expected, "A2")?;
    apply_rule_a3(&mut state, top, &mut ledger)?;
    check_conservation(&state, &expected, "A3")?;
    apply_rule_a4(&mut state, top, &mut ledger);
    check_conservation(&state, &expected, "A4")?;
    let after_a = state.clone();
    apply_rule_b(&mut state, top, &mut ledger)?;
    check_conservation(&state, &expected, "B")?;

    let audit = audit(top, &after_a, &state);
    Ok(Discharge {
        initial,
        after_a,
        after_b: state,
        ledger,
        audit,
    })
}
