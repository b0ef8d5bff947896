//! Bounded Todd-Coxeter enumeration over the trivial subgroup.
//!
//! HLT strategy: each live coset, in definition order, has every relator scanned
//! from it with gaps filled by new definitions, then any still undefined entries
//! of its row are defined. Coincidences are merged immediately through a
//! union-find queue.

use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;
use crate::words::{Sign, Word};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationLimits {
    /// Maximum number of simultaneously live cosets.
    pub max_cosets: usize,
    /// Maximum number of coset definitions plus relator scans.
    pub max_steps: usize,
}

impl EnumerationLimits {
    pub fn new(max_cosets: usize, max_steps: usize) -> EnumerationLimits {
        assert!(max_cosets > 0 && max_steps > 0, "limits must be positive");
        EnumerationLimits {
            max_cosets,
            max_steps,
        }
    }
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_cosets: 100_000,
            max_steps: 10_000_000,
        }
    }
}

/// A completed (or claimed complete) action of the generators on cosets.
///
/// Column `2g` is generator `g`, column `2g + 1` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTable {
    pub n_generators: usize,
    pub rows: Vec<Vec<Option<usize>>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn image(&self, coset: usize, gen: usize, sign: Sign) -> Option<usize> {
        self.rows
            .get(coset)?
            .get(column(gen, sign))
            .copied()
            .flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// The table closed; the presented group has exactly `order` elements.
    Finished {
        order: usize,
        table: CosetTable,
    },
    LimitExceeded {
        live_cosets: usize,
    },
}

impl Outcome {
    pub fn order(&self) -> Option<usize> {
        match self {
            Outcome::Finished { order, .. } => Some(*order),
            Outcome::LimitExceeded { .. } => None,
        }
    }
}

fn column(gen: usize, sign: Sign) -> usize {
    2 * gen + usize::from(sign == Sign::Neg)
}

struct LimitHit;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    steps: usize,
    limits: EnumerationLimits,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ncols: usize, limits: EnumerationLimits) -> Self {
        Enumerator {
            ncols,
            table: vec![NONE; ncols],
            parent: vec![0],
            live: 1,
            steps: 0,
            limits,
            queue: Vec::new(),
        }
    }

    fn defined(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn tick(&mut self) -> Result<(), LimitHit> {
        self.steps += 1;
        if self.steps > self.limits.max_steps {
            Err(LimitHit)
        } else {
            Ok(())
        }
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), LimitHit> {
        if self.live >= self.limits.max_cosets || self.defined() >= NONE as usize {
            return Err(LimitHit);
        }
        self.tick()?;
        let d = self.defined() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (keep, drop) = (k.min(l), k.max(l));
        self.parent[drop as usize] = keep;
        self.live -= 1;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x ^ 1, NONE);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                    continue;
                }
                let fx = self.get(f1, x ^ 1);
                if fx != NONE {
                    self.merge(e1, fx);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, x ^ 1, e1);
                }
            }
        }
        self.queue.clear();
    }

    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), LimitHit> {
        self.tick()?;
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j && self.get(f, word[i as usize]) != NONE {
                f = self.get(f, word[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j as usize] ^ 1) != NONE {
                b = self.get(b, word[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

fn columns_of(w: &Word) -> Vec<usize> {
    w.letters()
        .iter()
        .map(|l| column(l.gen.0, l.sign))
        .collect()
}

/// Runs HLT enumeration of the cosets of the trivial subgroup.
pub fn enumerate(p: &Presentation, limits: EnumerationLimits) -> Outcome {
    let ncols = 2 * p.n_generators();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| columns_of(&w.cyclic_reduce()))
        .collect();
    let mut e = Enumerator::new(ncols, limits);
    let run = |e: &mut Enumerator| -> Result<(), LimitHit> {
        let mut c = 0u32;
        while (c as usize) < e.defined() {
            for w in &relators {
                if !e.is_live(c) {
                    break;
                }
                e.scan_and_fill(c, w)?;
            }
            for x in 0..ncols {
                if !e.is_live(c) {
                    break;
                }
                if e.get(c, x) == NONE {
                    e.define(c, x)?;
                }
            }
            c += 1;
        }
        Ok(())
    };
    if run(&mut e).is_err() {
        return Outcome::LimitExceeded {
            live_cosets: e.live,
        };
    }
    let live: Vec<u32> = (0..e.defined() as u32).filter(|&c| e.is_live(c)).collect();
    let mut index = vec![usize::MAX; e.defined()];
    for (k, &c) in live.iter().enumerate() {
        index[c as usize] = k;
    }
    let rows = live
        .iter()
        .map(|&c| {
            (0..ncols)
                .map(|x| {
                    let d = e.get(c, x);
                    (d != NONE).then(|| index[d as usize])
                })
                .collect()
        })
        .collect();
    let table = CosetTable {
        n_generators: p.n_generators(),
        rows,
    };
    Outcome::Finished {
        order: live.len(),
        table,
    }
}

/// Independent check of a completed table: every entry defined and in range,
/// inverse columns consistent, and every relator a closed loop from every coset.
pub fn verify_table(p: &Presentation, t: &CosetTable) -> bool {
    let ncols = 2 * p.n_generators();
    if t.rows.is_empty() || t.n_generators != p.n_generators() {
        return false;
    }
    let k = t.rows.len();
    for (c, row) in t.rows.iter().enumerate() {
        if row.len() != ncols {
            return false;
        }
        for (x, entry) in row.iter().enumerate() {
            match *entry {
                Some(d) if d < k && t.rows[d][x ^ 1] == Some(c) => {}
                _ => return false,
            }
        }
    }
    for w in p.relators() {
        for start in 0..k {
            let end = w
                .letters()
                .iter()
                .try_fold(start, |c, l| t.rows[c][column(l.gen.0, l.sign)]);
            if end != Some(start) {
                return false;
            }
        }
    }
    true
}
