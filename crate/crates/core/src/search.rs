//! Bounded search over presentation classes, producing replayable transcripts.
//!
//! Search states are presentations whose relators are cyclically reduced; two
//! states are identified when their canonical forms agree. One search edge is a
//! "macro": a branching move (composition with chosen cut points, stabilization,
//! destabilization or replacement) followed by the `Cancel`/`Rotate` moves that
//! cyclically reduce the result. Depth counts macros. Emitted transcripts spell
//! out every primitive move and are replayed before they are returned.
//!
//! States are held as compact letter codes, so generator indices must stay
//! below 32767.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::invariants::{
    abs_det, exponent_matrix, presentation_mod2, row_spaces_compatible, Mod2RowSpace,
};
use crate::presentation::canonical::{canonical_codes, decode, encode, Code};
use crate::presentation::{
    apply_move, normalize, verify_transcript, CanonicalPresentation, Move, MoveSet, Presentation,
    Transcript,
};
use crate::words::{GeneratorId, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    Bfs,
    Iddfs,
    /// Best-first on total relator length.
    Greedy,
}

/// Which canonical forms end a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Goal {
    /// Every relator is a distinct single generator.
    Trivial,
    /// Exactly `k` generators and `k` relators, each relator either empty or a
    /// single letter, no generator killed twice.
    Rank(usize),
    /// Fewer than `k` generators.
    FewerGenerators(usize),
}

impl Goal {
    pub fn accepts(&self, c: &CanonicalPresentation) -> bool {
        let rels: Vec<Vec<Code>> = c.relators().iter().map(encode).collect();
        self.accepts_codes(c.n_generators(), &rels)
    }

    fn accepts_codes(&self, n: usize, rels: &[Vec<Code>]) -> bool {
        let killed_distinct = |allow_empty: bool| {
            let mut seen = HashSet::new();
            rels.iter().all(|w| match w.len() {
                0 => allow_empty,
                1 => seen.insert(w[0] >> 1),
                _ => false,
            })
        };
        match *self {
            Goal::Trivial => rels.len() == n && killed_distinct(false),
            Goal::Rank(k) => n == k && rels.len() == k && killed_distinct(true),
            Goal::FewerGenerators(k) => n < k,
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Trivial => write!(f, "trivial"),
            Goal::Rank(k) => write!(f, "rank:{k}"),
            Goal::FewerGenerators(k) => write!(f, "below:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub move_set: MoveSet,
    /// Maximum number of macro edges from the start.
    pub max_depth: usize,
    pub max_total_length: usize,
    pub max_generators: usize,
    pub strategy: Strategy,
    /// Maximum number of distinct states admitted.
    pub node_budget: usize,
    pub goal: Goal,
    /// Expand BFS layers on the rayon pool. Results are identical to the
    /// single-threaded run because children are merged in layer order.
    pub parallel: bool,
    /// Check every admitted state against the start's invariants.
    pub self_check: bool,
}

impl SearchConfig {
    pub fn new(move_set: MoveSet, goal: Goal) -> SearchConfig {
        SearchConfig {
            move_set,
            max_depth: 12,
            max_total_length: 12,
            max_generators: 4,
            strategy: Strategy::Bfs,
            node_budget: 1_000_000,
            goal,
            parallel: false,
            self_check: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierStats {
    pub states_seen: usize,
    pub max_depth_reached: usize,
    /// States whose expansion was cut off by the depth bound.
    pub depth_cutoffs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Found { transcript: Transcript },
    Exhausted { stats: FrontierStats },
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes_expanded: usize,
    pub dedup_hits: usize,
    /// States that failed the invariant self-check.
    pub self_check_violations: usize,
}

impl SearchResult {
    fn empty() -> SearchResult {
        SearchResult {
            outcome: SearchOutcome::BudgetExceeded,
            nodes_expanded: 0,
            dedup_hits: 0,
            self_check_violations: 0,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Found { .. })
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Exhausted { .. })
    }

    pub fn transcript(&self) -> Option<&Transcript> {
        match &self.outcome {
            SearchOutcome::Found { transcript } => Some(transcript),
            _ => None,
        }
    }
}

/// Appends `Cancel`/`Rotate` moves that cyclically reduce every relator.
pub fn cyclic_cleanup(p: &Presentation, moves: &mut Vec<Move>) -> Presentation {
    let mut p = p.clone();
    for r in 0..p.relators().len() {
        loop {
            let w = &p.relators()[r];
            let mv = if let Some(pos) = w.first_cancellable_pair() {
                Move::Cancel { i: r, pos }
            } else if w.len() >= 2 && w.letters()[0].cancels(w.letters()[w.len() - 1]) {
                Move::Rotate { r, k: w.len() - 1 }
            } else {
                break;
            };
            p = apply_move(&p, &mv).expect("cleanup moves are applicable by construction");
            moves.push(mv);
        }
    }
    p
}

/// One macro edge. Every variant is followed by cyclic cleanup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    /// Rotate `r_i` by `k`, optionally invert `r_j`, rotate `r_j` by `l`, then `r_i <- r_i r_j`.
    Compose {
        i: usize,
        j: usize,
        invert: bool,
        k: usize,
        l: usize,
    },
    Stabilize,
    Destabilize {
        gen: usize,
        relator: usize,
    },
    Replace {
        i: usize,
        j: usize,
        sign: Sign,
    },
}

impl Step {
    fn head(self) -> Vec<Move> {
        match self {
            Step::Compose { i, j, invert, k, l } => {
                let mut head = Vec::with_capacity(4);
                if k > 0 {
                    head.push(Move::Rotate { r: i, k });
                }
                if invert {
                    head.push(Move::Invert { i: j });
                }
                if l > 0 {
                    head.push(Move::Rotate { r: j, k: l });
                }
                head.push(Move::Compose { i, j });
                head
            }
            Step::Stabilize => vec![Move::Stabilize],
            Step::Destabilize { gen, relator } => vec![Move::Destabilize {
                gen: GeneratorId(gen),
                relator,
            }],
            Step::Replace { i, j, sign } => vec![Move::Replace {
                i: GeneratorId(i),
                j: GeneratorId(j),
                sign,
            }],
        }
    }

    /// The primitive moves of this step from `p`, and the resulting presentation.
    fn expand(self, p: &Presentation) -> (Vec<Move>, Presentation) {
        let mut moves = self.head();
        let mut q = p.clone();
        for m in &moves {
            q = apply_move(&q, m).expect("search steps are applicable by construction");
        }
        let q = cyclic_cleanup(&q, &mut moves);
        (moves, q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct State {
    n: usize,
    rels: Vec<Vec<Code>>,
}

const SEP: Code = Code::MAX;

impl State {
    fn from_presentation(p: &Presentation) -> State {
        State {
            n: p.n_generators(),
            rels: p.relators().iter().map(encode).collect(),
        }
    }

    fn to_presentation(&self) -> Presentation {
        Presentation::new(self.n, self.rels.iter().map(|r| decode(r)).collect())
    }

    fn total_length(&self) -> usize {
        self.rels.iter().map(Vec::len).sum()
    }

    fn pack(&self) -> Box<[Code]> {
        pack(self.n, &self.rels)
    }

    fn unpack(packed: &[Code]) -> State {
        let (n, rels) = unpack(packed);
        State { n, rels }
    }

    fn key(&self) -> Box<[Code]> {
        pack(self.n, &canonical_codes(self.n, self.rels.clone()))
    }
}

fn pack(n: usize, rels: &[Vec<Code>]) -> Box<[Code]> {
    let mut out = Vec::with_capacity(1 + rels.iter().map(|r| r.len() + 1).sum::<usize>());
    out.push(Code::try_from(n).expect("too many generators for search"));
    for r in rels {
        out.extend_from_slice(r);
        out.push(SEP);
    }
    out.into_boxed_slice()
}

fn unpack(packed: &[Code]) -> (usize, Vec<Vec<Code>>) {
    let n = usize::from(packed[0]);
    let mut rels = Vec::new();
    let mut cur = Vec::new();
    for &c in &packed[1..] {
        if c == SEP {
            rels.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    (n, rels)
}

fn key_to_canonical(key: &[Code]) -> CanonicalPresentation {
    let (n, rels) = unpack(key);
    normalize(&Presentation::new(
        n,
        rels.iter().map(|r| decode(r)).collect(),
    ))
}

/// Free reduction followed by stripping cancelling ends; the same word the
/// `Cancel`/`Rotate` cleanup produces.
fn cyc_reduce(w: &[Code]) -> Vec<Code> {
    let mut out: Vec<Code> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last() == Some(&(c ^ 1)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    let (mut lo, mut hi) = (0, out.len());
    while hi - lo >= 2 && out[lo] == out[hi - 1] ^ 1 {
        lo += 1;
        hi -= 1;
    }
    out.truncate(hi);
    out.drain(..lo);
    out
}

fn rotated(w: &[Code], k: usize) -> Vec<Code> {
    let mut v = w.to_vec();
    if !v.is_empty() {
        v.rotate_left(k % w.len());
    }
    v
}

fn inverted(w: &[Code]) -> Vec<Code> {
    w.iter().rev().map(|c| c ^ 1).collect()
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    move_set: MoveSet,
    max_total_length: usize,
    max_generators: usize,
    stabilize: bool,
    destabilize: bool,
}

impl Bounds {
    fn from_config(cfg: &SearchConfig) -> Bounds {
        Bounds {
            move_set: cfg.move_set,
            max_total_length: cfg.max_total_length,
            max_generators: cfg.max_generators,
            stabilize: true,
            destabilize: true,
        }
    }
}

/// Macro successors of a cyclically reduced state within the length cap, in a fixed order.
fn successors(s: &State, bounds: &Bounds) -> Vec<(Step, State)> {
    let m = s.rels.len();
    let cap = bounds.max_total_length;
    let total = s.total_length();
    let mut out = Vec::new();

    for i in 0..m {
        let li = s.rels[i].len();
        for j in 0..m {
            let lj = s.rels[j].len();
            if i == j || lj == 0 {
                continue;
            }
            for invert in [false, true] {
                let base_j = if invert {
                    inverted(&s.rels[j])
                } else {
                    s.rels[j].clone()
                };
                for k in 0..li.max(1) {
                    let ri = rotated(&s.rels[i], k);
                    for l in 0..lj {
                        let rj = rotated(&base_j, l);
                        let mut prod = ri.clone();
                        prod.extend_from_slice(&rj);
                        let new_i = cyc_reduce(&prod);
                        if total - li + new_i.len() > cap {
                            continue;
                        }
                        let mut rels = s.rels.clone();
                        rels[i] = new_i;
                        rels[j] = rj;
                        out.push((Step::Compose { i, j, invert, k, l }, State { n: s.n, rels }));
                    }
                }
            }
        }
    }
    if bounds.stabilize && s.n < bounds.max_generators && total < cap {
        let mut rels = s.rels.clone();
        rels.push(vec![(2 * s.n) as Code]);
        out.push((Step::Stabilize, State { n: s.n + 1, rels }));
    }
    if bounds.destabilize {
        for gen in 0..s.n {
            let g = gen as Code;
            for relator in 0..m {
                let r = &s.rels[relator];
                if r.len() != 1 || r[0] >> 1 != g {
                    continue;
                }
                let elsewhere = s
                    .rels
                    .iter()
                    .enumerate()
                    .any(|(t, w)| t != relator && w.iter().any(|c| c >> 1 == g));
                if elsewhere {
                    continue;
                }
                let rels = s
                    .rels
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != relator)
                    .map(|(_, w)| {
                        w.iter()
                            .map(|&c| if c >> 1 > g { c - 2 } else { c })
                            .collect()
                    })
                    .collect();
                out.push((
                    Step::Destabilize { gen, relator },
                    State { n: s.n - 1, rels },
                ));
            }
        }
    }
    if bounds.move_set == MoveSet::Eac {
        for i in 0..s.n {
            for j in 0..s.n {
                if i == j {
                    continue;
                }
                for sign in [Sign::Pos, Sign::Neg] {
                    let (gi, gj) = ((2 * i) as Code, (2 * j) as Code);
                    let js = if sign == Sign::Pos { gj } else { gj | 1 };
                    let rels: Vec<Vec<Code>> = s
                        .rels
                        .iter()
                        .map(|w| {
                            let mut sub = Vec::with_capacity(w.len() * 2);
                            for &c in w {
                                if c == gi {
                                    sub.extend([c, js]);
                                } else if c == gi | 1 {
                                    sub.extend([js ^ 1, c]);
                                } else {
                                    sub.push(c);
                                }
                            }
                            cyc_reduce(&sub)
                        })
                        .collect();
                    if rels.iter().map(Vec::len).sum::<usize>() <= cap {
                        out.push((Step::Replace { i, j, sign }, State { n: s.n, rels }));
                    }
                }
            }
        }
    }
    out
}

fn keyed_successors(s: &State, bounds: &Bounds) -> Vec<(Step, State, Box<[Code]>)> {
    successors(s, bounds)
        .into_iter()
        .map(|(step, t)| {
            let key = t.key();
            (step, t, key)
        })
        .collect()
}

struct SelfCheck {
    det: BigUint,
    mod2: Option<Mod2RowSpace>,
}

impl SelfCheck {
    fn new(p: &Presentation, cfg: &SearchConfig) -> Option<SelfCheck> {
        if !cfg.self_check {
            return None;
        }
        Some(SelfCheck {
            det: abs_det(&exponent_matrix(p)).ok()?,
            mod2: (cfg.move_set == MoveSet::Sac).then(|| presentation_mod2(p)),
        })
    }

    fn holds(&self, s: &State) -> bool {
        let q = s.to_presentation();
        let det_ok = abs_det(&exponent_matrix(&q)).is_ok_and(|d| d == self.det);
        let mod2_ok = self
            .mod2
            .as_ref()
            .is_none_or(|m| row_spaces_compatible(m, &presentation_mod2(&q)));
        det_ok && mod2_ok
    }
}

/// Replays macro steps from the cleaned root, emitting primitive moves.
struct Emitter<'a> {
    initial: &'a Presentation,
    prefix: &'a [Move],
    root: &'a Presentation,
    goal: Goal,
}

impl Emitter<'_> {
    fn found(&self, steps: &[Step]) -> SearchOutcome {
        let mut moves = self.prefix.to_vec();
        let mut p = self.root.clone();
        for step in steps {
            let (mv, q) = step.expand(&p);
            moves.extend(mv);
            p = q;
        }
        let transcript = Transcript {
            initial: self.initial.clone(),
            moves,
        };
        let last = verify_transcript(&transcript).expect("search emits only valid transcripts");
        assert!(
            self.goal.accepts(&normalize(&last)),
            "search transcript does not reach the goal"
        );
        SearchOutcome::Found { transcript }
    }
}

struct Node {
    state: Box<[Code]>,
    parent: u32,
    step: Option<Step>,
    depth: u32,
}

fn path_to(nodes: &[Node], mut idx: usize) -> Vec<Step> {
    let mut steps = Vec::new();
    while let Some(step) = nodes[idx].step {
        steps.push(step);
        idx = nodes[idx].parent as usize;
    }
    steps.reverse();
    steps
}

const LAYER_CHUNK: usize = 4096;

/// Searches for a move sequence from `p` to a presentation accepted by `cfg.goal`.
pub fn search_trivialization(p: &Presentation, cfg: &SearchConfig) -> SearchResult {
    let mut prefix = Vec::new();
    let root = cyclic_cleanup(p, &mut prefix);
    let emitter = Emitter {
        initial: p,
        prefix: &prefix,
        root: &root,
        goal: cfg.goal,
    };
    match cfg.strategy {
        Strategy::Bfs => bfs(&emitter, cfg, true).0,
        Strategy::Iddfs => iddfs(&emitter, cfg),
        Strategy::Greedy => best_first(&emitter, cfg),
    }
}

/// All canonical forms reachable from `p` within the depth, length, generator
/// and budget bounds of `cfg`; the goal is ignored.
pub fn reachable_set(p: &Presentation, cfg: &SearchConfig) -> BTreeSet<CanonicalPresentation> {
    let mut prefix = Vec::new();
    let root = cyclic_cleanup(p, &mut prefix);
    let emitter = Emitter {
        initial: p,
        prefix: &prefix,
        root: &root,
        goal: cfg.goal,
    };
    bfs(&emitter, cfg, false)
        .1
        .iter()
        .map(|k| key_to_canonical(k))
        .collect()
}

fn bfs(e: &Emitter, cfg: &SearchConfig, use_goal: bool) -> (SearchResult, HashSet<Box<[Code]>>) {
    let bounds = Bounds::from_config(cfg);
    let check = SelfCheck::new(e.root, cfg);
    let mut result = SearchResult::empty();
    let root = State::from_presentation(e.root);
    let root_key = root.key();
    let mut visited: HashSet<Box<[Code]>> = HashSet::new();
    visited.insert(root_key);
    if use_goal && cfg.goal.accepts_codes(root.n, &root.rels) {
        result.outcome = e.found(&[]);
        return (result, visited);
    }
    let mut nodes = vec![Node {
        state: root.pack(),
        parent: 0,
        step: None,
        depth: 0,
    }];
    let mut stats = FrontierStats::default();
    let mut layer: Vec<usize> = vec![0];
    while !layer.is_empty() {
        let depth = nodes[layer[0]].depth as usize;
        stats.max_depth_reached = depth;
        if depth >= cfg.max_depth {
            stats.depth_cutoffs += layer.len();
            break;
        }
        let mut next = Vec::new();
        for chunk in layer.chunks(LAYER_CHUNK) {
            let expanded: Vec<Vec<_>> = {
                let expand =
                    |&idx: &usize| keyed_successors(&State::unpack(&nodes[idx].state), &bounds);
                if cfg.parallel {
                    chunk.par_iter().map(expand).collect()
                } else {
                    chunk.iter().map(expand).collect()
                }
            };
            for (&parent, children) in chunk.iter().zip(expanded) {
                result.nodes_expanded += 1;
                for (step, t, key) in children {
                    if visited.contains(&key) {
                        result.dedup_hits += 1;
                        continue;
                    }
                    if visited.len() >= cfg.node_budget {
                        return (result, visited);
                    }
                    if check.as_ref().is_some_and(|c| !c.holds(&t)) {
                        result.self_check_violations += 1;
                    }
                    let accepted = use_goal && {
                        let (n, rels) = unpack(&key);
                        cfg.goal.accepts_codes(n, &rels)
                    };
                    visited.insert(key);
                    nodes.push(Node {
                        state: t.pack(),
                        parent: parent as u32,
                        step: Some(step),
                        depth: (depth + 1) as u32,
                    });
                    let idx = nodes.len() - 1;
                    if accepted {
                        result.outcome = e.found(&path_to(&nodes, idx));
                        return (result, visited);
                    }
                    next.push(idx);
                }
            }
        }
        layer = next;
    }
    stats.states_seen = visited.len();
    result.outcome = SearchOutcome::Exhausted { stats };
    (result, visited)
}

fn iddfs(e: &Emitter, cfg: &SearchConfig) -> SearchResult {
    let bounds = Bounds::from_config(cfg);
    let check = SelfCheck::new(e.root, cfg);
    let mut result = SearchResult::empty();
    let root = State::from_presentation(e.root);
    if cfg.goal.accepts_codes(root.n, &root.rels) {
        result.outcome = e.found(&[]);
        return result;
    }
    let root_key = root.key();
    let mut admitted: HashSet<Box<[Code]>> = HashSet::from([root_key.clone()]);
    let mut stats = FrontierStats::default();
    for limit in 1..=cfg.max_depth {
        // canonical key -> shallowest depth reached in this iteration
        let mut best: HashMap<Box<[Code]>, usize> = HashMap::from([(root_key.clone(), 0)]);
        let mut path: Vec<Step> = Vec::new();
        let mut cutoffs = 0usize;
        let mut stack: Vec<(usize, Vec<(Step, State)>)> = Vec::new();
        result.nodes_expanded += 1;
        let mut first = successors(&root, &bounds);
        first.reverse();
        stack.push((0, first));
        while let Some(frame) = stack.last_mut() {
            let depth = frame.0;
            let Some((step, t)) = frame.1.pop() else {
                stack.pop();
                path.pop();
                continue;
            };
            let key = t.key();
            let d = depth + 1;
            if best.get(&key).is_some_and(|&seen| seen <= d) {
                result.dedup_hits += 1;
                continue;
            }
            if !admitted.contains(&key) {
                if admitted.len() >= cfg.node_budget {
                    return result;
                }
                if check.as_ref().is_some_and(|c| !c.holds(&t)) {
                    result.self_check_violations += 1;
                }
                admitted.insert(key.clone());
            }
            stats.max_depth_reached = stats.max_depth_reached.max(d);
            let (n, rels) = unpack(&key);
            let accepted = cfg.goal.accepts_codes(n, &rels);
            best.insert(key, d);
            if accepted {
                path.push(step);
                result.outcome = e.found(&path);
                return result;
            }
            if d < limit {
                result.nodes_expanded += 1;
                let mut succ = successors(&t, &bounds);
                // popped from the back, so reverse to visit in generation order
                succ.reverse();
                path.push(step);
                stack.push((d, succ));
            } else {
                cutoffs += 1;
            }
        }
        stats.states_seen = best.len();
        stats.depth_cutoffs = cutoffs;
        if cutoffs == 0 {
            break;
        }
    }
    result.outcome = SearchOutcome::Exhausted { stats };
    result
}

fn best_first(e: &Emitter, cfg: &SearchConfig) -> SearchResult {
    let bounds = Bounds::from_config(cfg);
    let check = SelfCheck::new(e.root, cfg);
    let mut result = SearchResult::empty();
    let root = State::from_presentation(e.root);
    if cfg.goal.accepts_codes(root.n, &root.rels) {
        result.outcome = e.found(&[]);
        return result;
    }
    let mut visited: HashSet<Box<[Code]>> = HashSet::from([root.key()]);
    let mut nodes = vec![Node {
        state: root.pack(),
        parent: 0,
        step: None,
        depth: 0,
    }];
    let mut heap = BinaryHeap::from([Reverse((root.total_length(), 0usize))]);
    let mut stats = FrontierStats::default();
    while let Some(Reverse((_, idx))) = heap.pop() {
        let depth = nodes[idx].depth as usize;
        stats.max_depth_reached = stats.max_depth_reached.max(depth);
        if depth >= cfg.max_depth {
            stats.depth_cutoffs += 1;
            continue;
        }
        result.nodes_expanded += 1;
        for (step, t, key) in keyed_successors(&State::unpack(&nodes[idx].state), &bounds) {
            if visited.contains(&key) {
                result.dedup_hits += 1;
                continue;
            }
            if visited.len() >= cfg.node_budget {
                return result;
            }
            if check.as_ref().is_some_and(|c| !c.holds(&t)) {
                result.self_check_violations += 1;
            }
            let (n, rels) = unpack(&key);
            let accepted = cfg.goal.accepts_codes(n, &rels);
            visited.insert(key);
            nodes.push(Node {
                state: t.pack(),
                parent: idx as u32,
                step: Some(step),
                depth: (depth + 1) as u32,
            });
            let child = nodes.len() - 1;
            if accepted {
                result.outcome = e.found(&path_to(&nodes, child));
                return result;
            }
            heap.push(Reverse((t.total_length(), child)));
        }
    }
    stats.states_seen = visited.len();
    result.outcome = SearchOutcome::Exhausted { stats };
    result
}

/// Repeatedly applies the composition step that shortens the presentation
/// most, stopping at a local minimum or after `budget` steps.
///
/// The presentation is cyclically reduced first; each step is a composition
/// (with cut points) followed by cyclic reduction. Ties go to the first
/// candidate in generation order. The generator count never changes.
pub fn greedy_simplify(p: &Presentation, budget: usize) -> Transcript {
    let mut moves = Vec::new();
    let mut current = cyclic_cleanup(p, &mut moves);
    let bounds = Bounds {
        move_set: MoveSet::Sac,
        max_total_length: usize::MAX,
        max_generators: p.n_generators(),
        stabilize: false,
        destabilize: false,
    };
    for _ in 0..budget {
        let state = State::from_presentation(&current);
        let len = state.total_length();
        let best = successors(&state, &bounds)
            .into_iter()
            .filter(|(_, t)| t.total_length() < len)
            .min_by_key(|(_, t)| t.total_length());
        let Some((step, _)) = best else { break };
        let (mv, q) = step.expand(&current);
        moves.extend(mv);
        current = q;
    }
    Transcript {
        initial: p.clone(),
        moves,
    }
}
