//! Finitely presented groups: words, presentations, coset enumeration and
//! the amalgamation recipes.

pub mod bundled;
mod recipes;
mod todd_coxeter;
mod word;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub use recipes::{
    central_product_presentation, presentation_order_audit, quotient_presentation,
    svk_presentation, AuditStep, OrderAudit,
};
pub use todd_coxeter::{group_from_coset_table, todd_coxeter, CosetStatus, CosetTable};
pub use word::{is_valid_name, w, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Syntax(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {0:?} declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("generator sets overlap in {0:?}")]
    OverlappingGenerators(String),
    #[error("coset bound must be at least 1")]
    ZeroBound,
}

impl PresentationError {
    pub(crate) fn syntax(message: String) -> Self {
        Self::Syntax(message)
    }
}

/// `⟨generators | relators⟩`. Relators are freely reduced, nonempty, and
/// distinct up to cyclic rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    provenance: Vec<String>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !is_valid_name(g) {
                return Err(PresentationError::InvalidName(g.clone()));
            }
            if !seen.insert(g.as_str()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let mut p = Self {
            generators,
            relators: Vec::new(),
            provenance: Vec::new(),
        };
        p.add_relators(relators)?;
        Ok(p)
    }

    pub fn from_strs(generators: &[&str], relators: &[&str]) -> Result<Self, PresentationError> {
        let rels = relators
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<Word>, _>>()?;
        Self::new(generators.iter().map(|g| g.to_string()).collect(), rels)
    }

    /// The free group on `generators`.
    pub fn free(generators: &[&str]) -> Result<Self, PresentationError> {
        Self::from_strs(generators, &[])
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }

    pub fn check_word(&self, word: &Word) -> Result<(), PresentationError> {
        match word
            .generators_used()
            .find(|g| self.generator_index(g).is_none())
        {
            Some(g) => Err(PresentationError::UnknownGenerator(g.to_string())),
            None => Ok(()),
        }
    }

    /// Adds relators after validation, skipping trivial ones and cyclic
    /// duplicates.
    pub(crate) fn add_relators(
        &mut self,
        relators: impl IntoIterator<Item = Word>,
    ) -> Result<(), PresentationError> {
        let mut keys: HashSet<Word> = self.relators.iter().map(Word::cyclic_canonical).collect();
        for r in relators {
            self.check_word(&r)?;
            let r = r.free_reduce();
            if r.is_empty() {
                continue;
            }
            if keys.insert(r.cyclic_canonical()) {
                self.relators.push(r);
            }
        }
        Ok(())
    }

    /// Parses the `gens:` / `rel:` text format. Blank lines and lines
    /// starting with `#` are skipped; `#` lines are kept as provenance.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let at = |line: usize| {
            move |e: PresentationError| match e {
                PresentationError::Parse { .. } => e,
                other => PresentationError::Parse {
                    line,
                    message: other.to_string(),
                },
            }
        };
        let mut gens: Option<Vec<String>> = None;
        let mut rels = Vec::new();
        let mut notes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(note) = trimmed.strip_prefix('#') {
                notes.push(note.trim().to_string());
                continue;
            }
            let (key, rest) = trimmed.split_once(':').ok_or(PresentationError::Parse {
                line,
                message: "expected `gens:` or `rel:`".into(),
            })?;
            match key.trim() {
                "gens" => {
                    if gens.is_some() {
                        return Err(PresentationError::Parse {
                            line,
                            message: "second `gens:` line".into(),
                        });
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    Presentation::new(names.clone(), vec![]).map_err(at(line))?;
                    gens = Some(names);
                }
                "rel" => {
                    let g = gens.as_ref().ok_or(PresentationError::Parse {
                        line,
                        message: "`rel:` before `gens:`".into(),
                    })?;
                    let word: Word = rest.parse().map_err(at(line))?;
                    if let Some(bad) = word.generators_used().find(|x| !g.iter().any(|y| y == x)) {
                        return Err(at(line)(PresentationError::UnknownGenerator(
                            bad.to_string(),
                        )));
                    }
                    rels.push(word);
                }
                other => {
                    return Err(PresentationError::Parse {
                        line,
                        message: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        let gens = gens.ok_or(PresentationError::Parse {
            line: 0,
            message: "missing `gens:` line".into(),
        })?;
        let mut p = Presentation::new(gens, rels)?;
        p.provenance = notes;
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for note in &self.provenance {
            writeln!(f, "# {note}")?;
        }
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}
