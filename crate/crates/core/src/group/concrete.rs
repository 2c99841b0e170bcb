//! Finite groups materialised as Cayley tables.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::GroupError;

/// A finite group given by its multiplication table.
///
/// Elements are the indices `0..order()`. Whatever produced the group
/// (matrix closure, coset enumeration, a product construction) is recorded
/// only in the labels and the provenance string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupDocument", into = "GroupDocument")]
pub struct ConcreteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    generators: Vec<usize>,
    provenance: String,
}

/// On-disk JSON shape of a [`ConcreteGroup`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDocument {
    pub provenance: String,
    pub order: usize,
    pub labels: Vec<String>,
    #[serde(default)]
    pub generators: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

impl From<ConcreteGroup> for GroupDocument {
    fn from(g: ConcreteGroup) -> Self {
        GroupDocument {
            provenance: g.provenance,
            order: g.table.len(),
            labels: g.labels,
            generators: g.generators,
            table: g.table,
        }
    }
}

impl TryFrom<GroupDocument> for ConcreteGroup {
    type Error = GroupError;
    fn try_from(doc: GroupDocument) -> Result<Self, GroupError> {
        if doc.order != doc.table.len() {
            return Err(GroupError::NotLatinSquare);
        }
        let g = ConcreteGroup::from_table(doc.table, Some(doc.labels), doc.provenance)?;
        g.with_generators(doc.generators)
    }
}

impl ConcreteGroup {
    /// Validates a Cayley table: square, Latin, with a two-sided identity.
    /// Associativity is left to [`ConcreteGroup::audit`].
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        provenance: impl Into<String>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotLatinSquare);
        }
        let mut seen_col = vec![vec![false; n]; n];
        for row in &table {
            if row.len() != n {
                return Err(GroupError::NotLatinSquare);
            }
            let mut seen = vec![false; n];
            for (j, &x) in row.iter().enumerate() {
                if x >= n || seen[x] || seen_col[j][x] {
                    return Err(GroupError::NotLatinSquare);
                }
                seen[x] = true;
                seen_col[j][x] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let inverse = (0..n)
            .map(|g| table[g].iter().position(|&x| x == identity).unwrap())
            .collect::<Vec<_>>();
        if (0..n).any(|g| table[inverse[g]][g] != identity) {
            return Err(GroupError::NoIdentity);
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(_) => return Err(GroupError::LabelCount),
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        Ok(Self {
            table,
            identity,
            inverse,
            labels,
            generators: Vec::new(),
            provenance: provenance.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of the element with the given label.
    pub fn element(&self, label: &str) -> Result<usize, GroupError> {
        self.find_label(label)
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order() {
            return Err(GroupError::LabelCount);
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self, GroupError> {
        if generators.iter().any(|&g| g >= self.order()) {
            return Err(GroupError::InvalidElement);
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn pow(&self, g: usize, n: u64) -> usize {
        (0..n).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ai = self.inv(a);
        let bi = self.inv(b);
        self.mul(self.mul(ai, bi), self.mul(a, b))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order()).all(|b| self.commute(a, b)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Sorted indices of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..n).filter(|&i| inside[i]).collect()
    }

    /// Full structural audit: Latin square, identity row/column, inverses,
    /// and associativity over every triple.
    pub fn audit(&self) -> Result<(), GroupError> {
        let rebuilt = Self::from_table(self.table.clone(), None, "")?;
        if rebuilt.identity != self.identity || rebuilt.inverse != self.inverse {
            return Err(GroupError::NoIdentity);
        }
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a][b];
                for c in 0..n {
                    if self.table[ab][c] != self.table[a][self.table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("group serialises")
    }
}

/// Result of closing a generating set under multiplication.
#[derive(Clone, Debug)]
pub struct Closure<T> {
    pub group: ConcreteGroup,
    /// The element handle for each group index.
    pub elements: Vec<T>,
    /// A generator word (indices into the input list) for each element.
    pub words: Vec<Vec<usize>>,
}

impl<T> Closure<T> {
    /// Replaces the default word labels.
    pub fn relabel(mut self, f: impl Fn(&T) -> String) -> Self {
        let labels = self.elements.iter().map(f).collect();
        self.group = self
            .group
            .with_labels(labels)
            .expect("one label per element");
        self
    }

    pub fn index_of(&self, pred: impl Fn(&T) -> bool) -> Option<usize> {
        self.elements.iter().position(pred)
    }
}

/// Breadth-first closure of `gens` under `mul`, with elements compared by
/// `eq`.
///
/// Elements appear in discovery order: the distinct generators first, then
/// right multiples by each generator in turn. Fails with
/// [`GroupError::BoundExceeded`] once more than `max_size` distinct elements
/// have been found.
pub fn close_under_product<T: Clone>(
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    eq: impl Fn(&T, &T) -> bool,
    max_size: usize,
) -> Result<Closure<T>, GroupError> {
    if gens.is_empty() {
        return Err(GroupError::NoGenerators);
    }
    let mut elements: Vec<T> = Vec::new();
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut gen_index = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        match elements.iter().position(|e| eq(e, g)) {
            Some(pos) => gen_index.push(pos),
            None => {
                if elements.len() == max_size {
                    return Err(GroupError::BoundExceeded(max_size));
                }
                gen_index.push(elements.len());
                elements.push(g.clone());
                words.push(vec![k]);
            }
        }
    }
    // right_mul[k][i] = index of elements[i] · gens[k]
    let mut right_mul: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    let mut cursor = 0;
    while cursor < elements.len() {
        for (k, g) in gens.iter().enumerate() {
            let p = mul(&elements[cursor], g);
            let idx = match elements.iter().position(|e| eq(e, &p)) {
                Some(pos) => pos,
                None => {
                    if elements.len() == max_size {
                        return Err(GroupError::BoundExceeded(max_size));
                    }
                    let mut w = words[cursor].clone();
                    w.push(k);
                    elements.push(p);
                    words.push(w);
                    elements.len() - 1
                }
            };
            right_mul[k].push(idx);
        }
        cursor += 1;
    }
    let n = elements.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| words[j].iter().fold(i, |acc, &k| right_mul[k][acc]))
                .collect()
        })
        .collect();
    let identity = (0..n)
        .find(|&e| table[e][e] == e)
        .ok_or(GroupError::NoIdentity)?;
    let labels = words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            if i == identity {
                "1".to_string()
            } else {
                w.iter()
                    .map(|k| format!("g{k}"))
                    .collect::<Vec<_>>()
                    .join("·")
            }
        })
        .collect();
    let group =
        ConcreteGroup::from_table(table, Some(labels), "closure")?.with_generators(gen_index)?;
    Ok(Closure {
        group,
        elements,
        words,
    })
}

/// A subgroup kept as an index subset of its parent, together with the
/// inherited table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    /// Sorted parent indices; subgroup element `k` is parent element
    /// `embedding[k]`.
    pub embedding: Vec<usize>,
    pub group: ConcreteGroup,
}

impl Subgroup {
    /// Checks that `indices` is closed under the parent table and builds the
    /// inherited group.
    pub fn from_indices(parent: &ConcreteGroup, indices: &[usize]) -> Result<Self, GroupError> {
        let mut embedding = indices.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        if embedding.is_empty() || embedding.iter().any(|&i| i >= parent.order()) {
            return Err(GroupError::NotSubgroup);
        }
        let mut position = vec![usize::MAX; parent.order()];
        for (k, &i) in embedding.iter().enumerate() {
            position[i] = k;
        }
        let mut table = Vec::with_capacity(embedding.len());
        for &a in &embedding {
            let mut row = Vec::with_capacity(embedding.len());
            for &b in &embedding {
                let p = position[parent.mul(a, b)];
                if p == usize::MAX {
                    return Err(GroupError::NotSubgroup);
                }
                row.push(p);
            }
            table.push(row);
        }
        let labels = embedding
            .iter()
            .map(|&i| parent.label(i).to_string())
            .collect();
        let group = ConcreteGroup::from_table(table, Some(labels), parent.provenance())
            .map_err(|_| GroupError::NotSubgroup)?;
        Ok(Self { embedding, group })
    }

    pub fn generated(parent: &ConcreteGroup, gens: &[usize]) -> Self {
        let indices = parent.generated(gens);
        let mut sub = Self::from_indices(parent, &indices).expect("generated set is a subgroup");
        let local: Vec<usize> = gens.iter().map(|g| sub.local(*g).unwrap()).collect();
        sub.group = sub.group.with_generators(local).unwrap();
        sub
    }

    pub fn order(&self) -> usize {
        self.embedding.len()
    }

    pub fn contains(&self, parent_index: usize) -> bool {
        self.embedding.binary_search(&parent_index).is_ok()
    }

    /// Subgroup index of a parent element.
    pub fn local(&self, parent_index: usize) -> Option<usize> {
        self.embedding.binary_search(&parent_index).ok()
    }
}
