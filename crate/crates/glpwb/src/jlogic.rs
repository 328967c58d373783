//! Finite Kripke machinery for the logic J: frame validation, tree-likeness,
//! model checking, the M+ reduction from the polymodal provability logic,
//! bounded countermodel search over tree-like frames, and the frame-level
//! triviality check that rules out Kripke semantics for the full logic.
//!
//! Relations are stored as edge sets `w <_n v`, read as "w is below v":
//! a world satisfies `<n>p` when some `<_n`-smaller world satisfies `p`.

use crate::formula::Formula;
use crate::ordinal::Ordinal;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A finite polymodal frame. `relations[n]` lists the pairs `(w, v)` with
/// `w <_n v`, as indices into `worlds`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFrame {
    pub worlds: Vec<String>,
    pub relations: Vec<BTreeSet<(usize, usize)>>,
}

/// A frame with a valuation assigning each variable a set of worlds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JModel {
    pub frame: JFrame,
    pub valuation: BTreeMap<String, BTreeSet<usize>>,
}

/// One failed frame condition, with the offending worlds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

impl JFrame {
    pub fn new(worlds: Vec<String>, relation_count: usize) -> Self {
        JFrame {
            worlds,
            relations: vec![BTreeSet::new(); relation_count],
        }
    }

    pub fn world_index(&self, name: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w == name)
    }

    fn below(&self, n: usize, w: usize) -> BTreeSet<usize> {
        self.relations[n]
            .iter()
            .filter(|(_, v)| *v == w)
            .map(|(u, _)| *u)
            .collect()
    }

    /// The three J-frame conditions: each relation transitive and
    /// irreflexive, lower relations constant along higher edges, and the
    /// mixed transitivity `w <_m v <_n u  =>  w <_n u` for `n < m`.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let name = |i: usize| self.worlds[i].clone();
        for (n, rel) in self.relations.iter().enumerate() {
            for &(a, b) in rel {
                if a == b {
                    out.push(Violation {
                        condition: "condition 1 (strict order)".into(),
                        detail: format!("{} <_{n} itself", name(a)),
                    });
                }
                for &(c, d) in rel {
                    if b == c && !rel.contains(&(a, d)) {
                        out.push(Violation {
                            condition: "condition 1 (transitivity)".into(),
                            detail: format!(
                                "{} <_{n} {} <_{n} {} without {} <_{n} {}",
                                name(a),
                                name(b),
                                name(d),
                                name(a),
                                name(d)
                            ),
                        });
                    }
                }
            }
        }
        for m in 0..self.relations.len() {
            for n in 0..m {
                for &(w, v) in &self.relations[m] {
                    if self.below(n, w) != self.below(n, v) {
                        out.push(Violation {
                            condition: "condition 2 (lower cones agree)".into(),
                            detail: format!(
                                "{} <_{m} {} but their <_{n} cones differ",
                                name(w),
                                name(v)
                            ),
                        });
                    }
                }
                // w <_m v and v <_n u forces w <_n u
                for &(w, v) in &self.relations[m] {
                    for &(v2, u) in &self.relations[n] {
                        if v == v2 && !self.relations[n].contains(&(w, u)) {
                            out.push(Violation {
                                condition: "condition 3 (mixed transitivity)".into(),
                                detail: format!(
                                    "{} <_{m} {} <_{n} {} without {} <_{n} {}",
                                    name(w),
                                    name(v),
                                    name(u),
                                    name(w),
                                    name(u)
                                ),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// `w <<_n v`: related by some relation at level `n` or above.
    fn beyond(&self, n: usize) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for rel in self.relations.iter().skip(n) {
            out.extend(rel.iter().copied());
        }
        out
    }

    /// Equivalence classes of the symmetric transitive closure of `<<_n`.
    fn classes(&self, n: usize) -> Vec<usize> {
        let mut repr: Vec<usize> = (0..self.worlds.len()).collect();
        fn find(repr: &mut Vec<usize>, i: usize) -> usize {
            if repr[i] != i {
                let r = find(repr, repr[i]);
                repr[i] = r;
            }
            repr[i]
        }
        for &(a, b) in &self.beyond(n) {
            let ra = find(&mut repr, a);
            let rb = find(&mut repr, b);
            if ra != rb {
                repr[ra] = rb;
            }
        }
        (0..self.worlds.len()).map(|i| find(&mut repr, i)).collect()
    }

    /// Tree-likeness: within each `~_n` class, the quotient by `~_(n+1)`
    /// must form a tree under `<_n`, and related classes must relate all
    /// their members pointwise.
    pub fn is_treelike(&self) -> Result<bool, Error> {
        if !self.validate().is_empty() {
            return Err(Error::domain("not a valid J-frame"));
        }
        let levels = self.relations.len();
        for n in 0..levels {
            let coarse = self.classes(n);
            let fine = self.classes(n + 1);
            // quotient edges at level n between fine classes
            let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
            for &(a, b) in &self.relations[n] {
                if fine[a] != fine[b] {
                    edges.insert((fine[a], fine[b]));
                } else {
                    // an edge inside a class collapses the quotient order
                    return Ok(false);
                }
            }
            // clause 2: class-level edges must hold for all member pairs
            for &(ca, cb) in &edges {
                for a in 0..self.worlds.len() {
                    for b in 0..self.worlds.len() {
                        if fine[a] == ca && fine[b] == cb && !self.relations[n].contains(&(a, b)) {
                            return Ok(false);
                        }
                    }
                }
            }
            // clause 1: each coarse class's quotient is a tree under <_n
            let mut coarse_groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            for w in 0..self.worlds.len() {
                coarse_groups.entry(coarse[w]).or_default().insert(fine[w]);
            }
            for group in coarse_groups.values() {
                if !is_tree(group, &edges) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Is the edge set a tree on `nodes`? Edges point upward (child, ancestor)
/// and are transitively closed on valid frames, so we ask: one maximal
/// node, every other node's strict upper set linearly ordered, and
/// everything connected to the root.
fn is_tree(nodes: &BTreeSet<usize>, edges: &BTreeSet<(usize, usize)>) -> bool {
    let ups = |x: usize| -> BTreeSet<usize> {
        edges
            .iter()
            .filter(|(a, _)| *a == x)
            .map(|(_, b)| *b)
            .filter(|b| nodes.contains(b))
            .collect()
    };
    let roots: Vec<usize> = nodes
        .iter()
        .copied()
        .filter(|x| ups(*x).is_empty())
        .collect();
    if roots.len() != 1 {
        return nodes.len() <= 1;
    }
    let root = roots[0];
    for &x in nodes {
        if x == root {
            continue;
        }
        let up = ups(x);
        if !up.contains(&root) {
            return false; // disconnected from the root
        }
        // the ancestors of x must form a chain
        for &a in &up {
            for &b in &up {
                if a != b && !edges.contains(&(a, b)) && !edges.contains(&(b, a)) {
                    return false;
                }
            }
        }
    }
    true
}

impl JModel {
    pub fn holds(&self, world: usize, phi: &Formula) -> Result<bool, Error> {
        match phi {
            Formula::Top => Ok(true),
            Formula::Bot => Ok(false),
            Formula::Var(v) => Ok(self
                .valuation
                .get(v)
                .map(|s| s.contains(&world))
                .unwrap_or(false)),
            Formula::Neg(f) => Ok(!self.holds(world, f)?),
            Formula::And(a, b) => Ok(self.holds(world, a)? && self.holds(world, b)?),
            Formula::Or(a, b) => Ok(self.holds(world, a)? || self.holds(world, b)?),
            Formula::Imp(a, b) => Ok(!self.holds(world, a)? || self.holds(world, b)?),
            Formula::Dia(l, f) => {
                let n = modality_index(l, self.frame.relations.len())?;
                for &(u, v) in &self.frame.relations[n] {
                    if v == world && self.holds(u, f)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Formula::Box_(l, f) => {
                let n = modality_index(l, self.frame.relations.len())?;
                for &(u, v) in &self.frame.relations[n] {
                    if v == world && !self.holds(u, f)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub fn true_everywhere(&self, phi: &Formula) -> Result<bool, Error> {
        for w in 0..self.frame.worlds.len() {
            if !self.holds(w, phi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn modality_index(l: &Ordinal, levels: usize) -> Result<usize, Error> {
    let n = l
        .as_nat()
        .ok_or_else(|| Error::domain(format!("modality {l} is not condensed to a natural")))?;
    let n = n as usize;
    if n >= levels {
        return Err(Error::domain(format!(
            "modality [{n}] out of range: frame has {levels} relations"
        )));
    }
    Ok(n)
}

/// The monotonicity bridge `M(phi)`: for every boxed subformula `[n]psi`
/// (including the boxes hidden in diamonds) and every `n < m <= top`, the
/// implication `[n]psi -> [m]psi`. `M+(phi)` conjoins `M` with `[n]M` for
/// all indices.
///
/// `top` defaults to the largest index appearing in `phi`; passing it
/// explicitly widens the bridge to a larger frame signature.
pub fn m_plus(phi: &Formula, top: Option<u64>) -> Formula {
    let indices = phi.appearing_ordinals();
    let max_appearing = indices.iter().filter_map(|o| o.as_nat()).max();
    let top = match (top, max_appearing) {
        (Some(t), _) => t,
        (None, Some(m)) => m,
        (None, None) => return Formula::Top,
    };
    let mut boxed: Vec<(u64, Formula)> = Vec::new();
    collect_boxed(phi, &mut boxed);
    let mut conjuncts = Vec::new();
    for (n, psi) in &boxed {
        for m in (n + 1)..=top {
            conjuncts.push(Formula::imp(
                Formula::boxed(Ordinal::nat(*n), psi.clone()),
                Formula::boxed(Ordinal::nat(m), psi.clone()),
            ));
        }
    }
    let m_formula = conjoin(conjuncts);
    let mut outer = vec![m_formula.clone()];
    for n in 0..=top {
        outer.push(Formula::boxed(Ordinal::nat(n), m_formula.clone()));
    }
    conjoin(outer)
}

/// Boxed subformulas, with diamonds contributing their dual boxes.
fn collect_boxed(phi: &Formula, out: &mut Vec<(u64, Formula)>) {
    match phi {
        Formula::Top | Formula::Bot | Formula::Var(_) => {}
        Formula::Neg(f) => collect_boxed(f, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            collect_boxed(a, out);
            collect_boxed(b, out);
        }
        Formula::Box_(l, f) => {
            if let Some(n) = l.as_nat() {
                let entry = (n, f.as_ref().clone());
                if !out.contains(&entry) {
                    out.push(entry);
                }
            }
            collect_boxed(f, out);
        }
        Formula::Dia(l, f) => {
            if let Some(n) = l.as_nat() {
                let entry = (n, Formula::neg(f.as_ref().clone()));
                if !out.contains(&entry) {
                    out.push(entry);
                }
            }
            collect_boxed(f, out);
        }
    }
}

fn conjoin(mut fs: Vec<Formula>) -> Formula {
    match fs.len() {
        0 => Formula::Top,
        1 => fs.pop().unwrap(),
        _ => {
            let mut acc = fs.remove(0);
            for f in fs {
                acc = Formula::and(acc, f);
            }
            acc
        }
    }
}

/// Searches tree-like J-frames with at most `max_worlds` worlds (and all
/// valuations of the formula's variables) for a model satisfying `phi`
/// somewhere. `None` means "no model within the bound", not
/// unsatisfiability. The formula must be condensed.
pub fn bounded_sat(phi: &Formula, max_worlds: usize) -> Result<Option<(JModel, usize)>, Error> {
    if max_worlds > 8 {
        return Err(Error::domain("bounded_sat caps at 8 worlds"));
    }
    let indices = phi.appearing_ordinals();
    for idx in &indices {
        if idx.as_nat().is_none() {
            return Err(Error::domain(format!(
                "bounded_sat needs a condensed formula; found modality {idx}"
            )));
        }
    }
    let levels = indices
        .iter()
        .filter_map(|o| o.as_nat())
        .max()
        .map(|m| m as usize + 1)
        .unwrap_or(1);
    let vars: Vec<String> = phi.variables().into_iter().collect();
    for size in 1..=max_worlds {
        for frame in TreeLikeFrames::new(size, levels) {
            debug_assert!(frame.validate().is_empty());
            // all valuations over the formula's variables
            let cells = vars.len() * size;
            let combos: u64 = 1 << cells;
            for mask in 0..combos {
                let mut valuation: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
                for (vi, v) in vars.iter().enumerate() {
                    let mut worlds = BTreeSet::new();
                    for w in 0..size {
                        if mask >> (vi * size + w) & 1 == 1 {
                            worlds.insert(w);
                        }
                    }
                    valuation.insert(v.clone(), worlds);
                }
                let model = JModel {
                    frame: frame.clone(),
                    valuation,
                };
                for w in 0..size {
                    if model.holds(w, phi)? {
                        return Ok(Some((model, w)));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Enumerates tree-like frames of exactly `size` worlds and the given
/// number of relations: a rooted forest of classes at each level, inner
/// classes expanded recursively, class edges filled in pointwise.
struct TreeLikeFrames {
    candidates: Vec<JFrame>,
    next: usize,
}

impl TreeLikeFrames {
    fn new(size: usize, levels: usize) -> Self {
        let shapes = gen_relation_sets(size, 0, levels);
        let candidates = shapes
            .into_iter()
            .map(|relations| JFrame {
                worlds: (0..size).map(|i| format!("w{i}")).collect(),
                relations,
            })
            .filter(|f| f.is_treelike().unwrap_or(false))
            .collect();
        TreeLikeFrames {
            candidates,
            next: 0,
        }
    }
}

impl Iterator for TreeLikeFrames {
    type Item = JFrame;

    fn next(&mut self) -> Option<JFrame> {
        let item = self.candidates.get(self.next).cloned();
        self.next += 1;
        item
    }
}

/// All relation stacks for `size` worlds on levels `level..levels`, where
/// each level partitions the worlds into a rooted forest of classes.
fn gen_relation_sets(
    size: usize,
    level: usize,
    levels: usize,
) -> Vec<Vec<BTreeSet<(usize, usize)>>> {
    if level == levels {
        return vec![Vec::new()];
    }
    let worlds: Vec<usize> = (0..size).collect();
    let mut out = Vec::new();
    // partition worlds into ordered groups (classes of ~ at the next level)
    for partition in partitions(&worlds) {
        // forest structure: parent[i] = None (a root) or an earlier group
        for parents in forests(partition.len()) {
            // transitive edges between groups: strictly descending chains
            let mut edges = BTreeSet::new();
            for (i, p) in parents.iter().enumerate() {
                let mut anc = *p;
                while let Some(a) = anc {
                    for &x in &partition[i] {
                        for &y in &partition[a] {
                            edges.insert((x, y));
                        }
                    }
                    anc = parents[a];
                }
            }
            // the current level relation is fixed; recurse for the finer
            // levels inside each group independently
            let mut inner_options: Vec<Vec<Vec<BTreeSet<(usize, usize)>>>> = Vec::new();
            for group in &partition {
                let renamed = gen_relation_sets(group.len(), level + 1, levels)
                    .into_iter()
                    .map(|stack| {
                        stack
                            .into_iter()
                            .map(|rel| {
                                rel.into_iter()
                                    .map(|(a, b)| (group[a], group[b]))
                                    .collect::<BTreeSet<_>>()
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>();
                inner_options.push(renamed);
            }
            // cartesian product over groups
            let mut stacks: Vec<Vec<BTreeSet<(usize, usize)>>> = vec![Vec::new()];
            for options in inner_options {
                let mut next = Vec::new();
                for prefix in &stacks {
                    for option in &options {
                        let mut merged: Vec<BTreeSet<(usize, usize)>> = Vec::new();
                        for l in 0..(levels - level - 1) {
                            let mut rel = prefix.get(l).cloned().unwrap_or_default();
                            if let Some(extra) = option.get(l) {
                                rel.extend(extra.iter().copied());
                            }
                            merged.push(rel);
                        }
                        next.push(merged);
                    }
                }
                stacks = next;
            }
            for inner in stacks {
                let mut full = vec![edges.clone()];
                full.extend(inner);
                out.push(full);
            }
        }
    }
    out
}

/// All set partitions of `items`, as vectors of groups.
fn partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let rest = &items[1..];
    let mut out = Vec::new();
    for mut partial in partitions(rest) {
        // put `first` in each existing group, or in a new group
        for i in 0..partial.len() {
            let mut copy = partial.clone();
            copy[i].push(first);
            copy[i].sort();
            out.push(copy);
        }
        partial.push(vec![first]);
        out.push(partial);
    }
    out
}

/// All parent assignments over `n` groups where group `i` may attach to an
/// earlier group: a rooted forest on the groups.
fn forests(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::new();
        for prefix in &out {
            let mut with_root = prefix.clone();
            with_root.push(None);
            next.push(with_root);
            for p in 0..i {
                let mut with_parent = prefix.clone();
                with_parent.push(Some(p));
                next.push(with_parent);
            }
        }
        out = next;
    }
    out
}

/// The frame correspondence conditions for the full polymodal logic:
/// transitivity and irreflexivity of each relation, inclusion downward,
/// and lower-cone stability upward. On any frame satisfying all three,
/// every relation above `<_0` is empty.
pub fn glp_frame_triviality(frame: &JFrame) -> bool {
    for rel in &frame.relations {
        for &(a, b) in rel {
            if a == b {
                return false;
            }
            for &(c, d) in rel {
                if b == c && !rel.contains(&(a, d)) {
                    return false;
                }
            }
        }
    }
    for m in 0..frame.relations.len() {
        for n in 0..m {
            // [n]p -> [m]p needs <_m included in <_n
            for &(a, b) in &frame.relations[m] {
                if !frame.relations[n].contains(&(a, b)) {
                    return false;
                }
            }
            // <n>p -> [m]<n>p needs: v <_m w and u <_n w imply u <_n v
            for &(v, w) in &frame.relations[m] {
                for &(u, w2) in &frame.relations[n] {
                    if w == w2 && !frame.relations[n].contains(&(u, v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// --- JSON forms -----------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct FrameJson {
    worlds: Vec<String>,
    relations: Vec<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    valuation: Option<BTreeMap<String, Vec<String>>>,
}

impl JFrame {
    pub fn to_json(&self) -> serde_json::Value {
        frame_json(self, None)
    }

    pub fn from_json(text: &str) -> Result<JFrame, Error> {
        Ok(parse_frame_json(text)?.0)
    }
}

impl JModel {
    pub fn to_json(&self) -> serde_json::Value {
        frame_json(&self.frame, Some(&self.valuation))
    }

    pub fn from_json(text: &str) -> Result<JModel, Error> {
        let (frame, valuation) = parse_frame_json(text)?;
        Ok(JModel {
            frame,
            valuation: valuation.unwrap_or_default(),
        })
    }
}

fn frame_json(
    frame: &JFrame,
    valuation: Option<&BTreeMap<String, BTreeSet<usize>>>,
) -> serde_json::Value {
    let doc = FrameJson {
        worlds: frame.worlds.clone(),
        relations: frame
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|(a, b)| (frame.worlds[*a].clone(), frame.worlds[*b].clone()))
                    .collect()
            })
            .collect(),
        valuation: valuation.map(|val| {
            val.iter()
                .map(|(k, ws)| {
                    (
                        k.clone(),
                        ws.iter().map(|w| frame.worlds[*w].clone()).collect(),
                    )
                })
                .collect()
        }),
    };
    serde_json::to_value(doc).expect("frame serializes")
}

fn parse_frame_json(
    text: &str,
) -> Result<(JFrame, Option<BTreeMap<String, BTreeSet<usize>>>), Error> {
    let doc: FrameJson =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("bad frame JSON: {e}")))?;
    let mut frame = JFrame::new(doc.worlds.clone(), doc.relations.len());
    let names = doc.worlds.clone();
    let lookup = move |name: &str| -> Result<usize, Error> {
        names
            .iter()
            .position(|w| w == name)
            .ok_or_else(|| Error::domain(format!("unknown world {name}")))
    };
    for (n, rel) in doc.relations.iter().enumerate() {
        for (a, b) in rel {
            let edge = (lookup(a)?, lookup(b)?);
            frame.relations[n].insert(edge);
        }
    }
    let valuation = match doc.valuation {
        None => None,
        Some(val) => {
            let mut out = BTreeMap::new();
            for (k, ws) in val {
                let mut set = BTreeSet::new();
                for w in ws {
                    set.insert(lookup(&w)?);
                }
                out.insert(k, set);
            }
            Some(out)
        }
    };
    Ok((frame, valuation))
}
