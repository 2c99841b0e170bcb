//! HLT coset enumeration with union-find coincidence handling.

use std::collections::VecDeque;

use serde::Serialize;

use super::{Presentation, PresentationError, Word};
use crate::group::{close_under_product, ConcreteGroup, GroupError};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CosetStatus {
    Complete,
    BoundExceeded,
}

/// Cosets are numbered from 0 (the subgroup itself). Column `2k` is the
/// action of generator `k`, column `2k + 1` that of its inverse.
#[derive(Clone, Debug)]
pub struct CosetTable {
    generators: Vec<String>,
    rows: Vec<Vec<Option<usize>>>,
    status: CosetStatus,
    subgroup_trivial: bool,
    defined_total: usize,
}

impl CosetTable {
    pub fn status(&self) -> CosetStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == CosetStatus::Complete
    }

    /// Live cosets at termination.
    pub fn coset_count(&self) -> usize {
        self.rows.len()
    }

    /// Cosets defined over the whole run, including ones later merged.
    pub fn defined_total(&self) -> usize {
        self.defined_total
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    pub fn entry(&self, coset: usize, column: usize) -> Option<usize> {
        self.rows[coset][column]
    }

    /// The permutation of cosets induced by generator `k`, if fully defined.
    pub fn action(&self, k: usize) -> Option<Vec<usize>> {
        self.rows.iter().map(|r| r[2 * k]).collect()
    }

    /// Follows `word` from `coset`; `None` if an entry is undefined.
    pub fn trace(&self, coset: usize, word: &Word) -> Option<usize> {
        let mut c = coset;
        for l in word.letters() {
            let k = self.generators.iter().position(|g| *g == l.gen)?;
            c = self.rows[c][2 * k + usize::from(l.inverse)]?;
        }
        Some(c)
    }

    /// Shortest representative word for every coset, in BFS column order.
    pub fn representatives(&self) -> Vec<Option<Word>> {
        let mut reps: Vec<Option<Word>> = vec![None; self.rows.len()];
        reps[0] = Some(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for (col, entry) in self.rows[c].iter().enumerate() {
                if let Some(d) = *entry {
                    if reps[d].is_none() {
                        let step = Word::power_of(
                            &self.generators[col / 2],
                            if col % 2 == 0 { 1 } else { -1 },
                        );
                        reps[d] = Some(reps[c].as_ref().expect("visited").concat(&step));
                        queue.push_back(d);
                    }
                }
            }
        }
        reps
    }

    /// Checks the completeness invariants against `pres`: every entry is
    /// defined, each generator acts as a permutation inverse to its inverse
    /// column, and every relator fixes every coset.
    pub fn verify(&self, pres: &Presentation) -> bool {
        let n = self.rows.len();
        for k in 0..self.generators.len() {
            let (Some(fwd), Some(bwd)) = (
                self.rows
                    .iter()
                    .map(|r| r[2 * k])
                    .collect::<Option<Vec<_>>>(),
                self.rows
                    .iter()
                    .map(|r| r[2 * k + 1])
                    .collect::<Option<Vec<_>>>(),
            ) else {
                return false;
            };
            if (0..n).any(|c| bwd[fwd[c]] != c) {
                return false;
            }
        }
        pres.relators()
            .iter()
            .all(|r| (0..n).all(|c| self.trace(c, r) == Some(c)))
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    bound: usize,
    exceeded: bool,
    queue: Vec<usize>,
    defined: usize,
}

impl Enumerator {
    fn new(ncols: usize, bound: usize) -> Self {
        Self {
            ncols,
            table: vec![NONE; ncols],
            parent: vec![0],
            live: 1,
            bound,
            exceeded: false,
            queue: Vec::new(),
            defined: 1,
        }
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.ncols + x]
    }

    fn set(&mut self, c: usize, x: usize, v: usize) {
        self.table[c * self.ncols + x] = v;
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> bool {
        if self.live >= self.bound {
            self.exceeded = true;
            return false;
        }
        let d = self.allocated();
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live += 1;
        self.defined += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        true
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let g = self.queue[qi];
            qi += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let (mu, nu) = (self.rep(g), self.rep(d));
                if self.get(mu, x) != NONE {
                    let t = self.get(mu, x);
                    self.merge(nu, t);
                } else if self.get(nu, x ^ 1) != NONE {
                    let t = self.get(nu, x ^ 1);
                    self.merge(mu, t);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    /// Scans `word` from `c`, defining cosets to close the cycle. Returns
    /// false only when the bound stops a definition.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> bool {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0, word.len());
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
                b = self.get(b, word[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return true;
            }
            if !self.define(f, word[i]) {
                return false;
            }
        }
    }

    /// Renumbers live cosets in increasing order, dropping dead rows.
    /// Returns the new index of `cursor`. Valid only between coincidence
    /// passes, when live rows reference live cosets only.
    fn compact(&mut self, cursor: usize) -> usize {
        let n = self.allocated();
        let mut new_id = vec![NONE; n];
        let mut next = 0;
        for (c, id) in new_id.iter_mut().enumerate() {
            if self.parent[c] == c {
                *id = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next * self.ncols);
        for c in (0..n).filter(|&c| self.is_live(c)) {
            for x in 0..self.ncols {
                let v = self.get(c, x);
                table.push(if v == NONE { NONE } else { new_id[v] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        (0..cursor).filter(|&c| new_id[c] != NONE).count()
    }
}

fn compile(pres: &Presentation, word: &Word) -> Result<Vec<usize>, PresentationError> {
    word.free_reduce()
        .letters()
        .iter()
        .map(|l| {
            pres.generator_index(&l.gen)
                .map(|k| 2 * k + usize::from(l.inverse))
                .ok_or_else(|| PresentationError::UnknownGenerator(l.gen.clone()))
        })
        .collect()
}

/// Enumerates the cosets of `⟨subgroup_generators⟩` in the group presented
/// by `pres`, stopping with `BoundExceeded` once more than `coset_bound`
/// cosets would be live at the same time.
pub fn todd_coxeter(
    pres: &Presentation,
    subgroup_generators: &[Word],
    coset_bound: usize,
) -> Result<CosetTable, PresentationError> {
    if coset_bound == 0 {
        return Err(PresentationError::ZeroBound);
    }
    let relators = pres
        .relators()
        .iter()
        .map(|r| compile(pres, r))
        .collect::<Result<Vec<_>, _>>()?;
    let subgroup = subgroup_generators
        .iter()
        .map(|s| compile(pres, s))
        .collect::<Result<Vec<_>, _>>()?;
    let ncols = 2 * pres.generators().len();
    let mut e = Enumerator::new(ncols, coset_bound);

    'run: {
        for s in &subgroup {
            if !e.scan_and_fill(0, s) {
                break 'run;
            }
        }
        let mut alpha = 0;
        while alpha < e.allocated() {
            if e.allocated() > 2 * coset_bound + 64 {
                alpha = e.compact(alpha);
                continue;
            }
            if e.is_live(alpha) {
                for r in &relators {
                    if !e.scan_and_fill(alpha, r) {
                        break 'run;
                    }
                    if !e.is_live(alpha) {
                        break;
                    }
                }
                for x in 0..ncols {
                    if e.is_live(alpha) && e.get(alpha, x) == NONE && !e.define(alpha, x) {
                        break 'run;
                    }
                }
            }
            alpha += 1;
        }
    }

    let status = if e.exceeded {
        CosetStatus::BoundExceeded
    } else {
        CosetStatus::Complete
    };
    // Coincidence passes always run to completion, so the table is
    // consistent here even after a bound exit.
    e.compact(0);
    let rows = (0..e.allocated())
        .map(|c| {
            (0..ncols)
                .map(|x| Some(e.get(c, x)).filter(|&v| v != NONE))
                .collect()
        })
        .collect();
    Ok(CosetTable {
        generators: pres.generators().to_vec(),
        rows,
        status,
        subgroup_trivial: subgroup.iter().all(Vec::is_empty),
        defined_total: e.defined,
    })
}

/// The group generated by the coset permutations of a complete table built
/// over the trivial subgroup. Elements carry their coset representative
/// words as labels.
pub fn group_from_coset_table(table: &CosetTable) -> Result<ConcreteGroup, GroupError> {
    if !table.is_complete() || !table.subgroup_trivial {
        return Err(GroupError::Incomplete);
    }
    let gens: Vec<Vec<usize>> = (0..table.generators.len())
        .map(|k| table.action(k).ok_or(GroupError::Incomplete))
        .collect::<Result<_, _>>()?;
    let n = table.coset_count();
    if gens.is_empty() {
        return ConcreteGroup::from_table(vec![vec![0]], None, "trivial presentation");
    }
    let closure = close_under_product(
        &gens,
        |p: &Vec<usize>, q: &Vec<usize>| p.iter().map(|&c| q[c]).collect(),
        |p, q| p == q,
        n,
    )?;
    if closure.group.order() != n {
        return Err(GroupError::Incomplete);
    }
    let reps = table.representatives();
    let labels = closure
        .elements
        .iter()
        .map(|perm| {
            reps[perm[0]]
                .as_ref()
                .map_or_else(|| "?".to_string(), Word::to_string)
        })
        .collect();
    closure
        .group
        .with_labels(labels)
        .map(|g| g.with_provenance("coset enumeration"))
}
