//! Words in the free group over named generators.

use std::fmt;
use std::str::FromStr;

use super::PresentationError;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: impl Into<String>, inverse: bool) -> Self {
        Self {
            gen: gen.into(),
            inverse,
        }
    }

    pub fn inverted(&self) -> Self {
        Self {
            gen: self.gen.clone(),
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A sequence of generator letters with exponents ±1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn gen(name: &str) -> Self {
        Self(vec![Letter::new(name, false)])
    }

    /// `name^exp`, expanded to `|exp|` letters.
    pub fn power_of(name: &str, exp: i64) -> Self {
        let letter = Letter::new(name, exp < 0);
        Self(vec![letter; exp.unsigned_abs() as usize])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(Letter::inverted).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Self(v)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        Self(
            std::iter::repeat_n(base.0, n.unsigned_abs() as usize)
                .flatten()
                .collect(),
        )
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    /// The relator `lhs · rhs⁻¹` encoding `lhs = rhs`.
    pub fn relation(lhs: &Word, rhs: &Word) -> Self {
        lhs.concat(&rhs.inverse()).free_reduce()
    }

    /// Cancels adjacent `g g⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Self(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    /// Free reduction followed by cancelling inverse letters across the ends.
    pub fn cyclically_reduce(&self) -> Self {
        let mut v = self.free_reduce().0;
        while v.len() >= 2 && v[0].cancels(&v[v.len() - 1]) {
            v.pop();
            v.remove(0);
        }
        Self(v)
    }

    /// Lexicographically least rotation of the cyclic reduction; two
    /// relators with the same canonical form define the same normal closure.
    pub fn cyclic_canonical(&self) -> Self {
        let base = self.cyclically_reduce().0;
        let n = base.len();
        (0..n.max(1))
            .map(|k| {
                let mut r = base[k.min(n)..].to_vec();
                r.extend_from_slice(&base[..k.min(n)]);
                Self(r)
            })
            .min()
            .unwrap_or_default()
    }

    pub fn generators_used(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|l| l.gen.as_str())
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Self {
        Self(
            self.0
                .iter()
                .map(|l| Letter::new(f(&l.gen), l.inverse))
                .collect(),
        )
    }

    /// Replaces every occurrence of `name` by `replacement` (inverted for
    /// inverse letters).
    pub fn substitute(&self, name: &str, replacement: &Word) -> Self {
        let inv = replacement.inverse();
        let mut v = Vec::new();
        for l in &self.0 {
            if l.gen == name {
                v.extend(
                    if l.inverse {
                        inv.0.iter().cloned()
                    } else {
                        replacement.0.iter().cloned()
                    }
                    .collect::<Vec<_>>(),
                );
            } else {
                v.push(l.clone());
            }
        }
        Self(v)
    }
}

impl fmt::Display for Word {
    /// Runs of one letter print as powers: `u^2 xy^-1`. The empty word
    /// prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = &self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == *l {
                j += 1;
            }
            let exp = (j - i) as i64 * if l.inverse { -1 } else { 1 };
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = PresentationError;

    /// Space-separated tokens `name` or `name^k` with `k` a signed integer;
    /// `1` denotes the empty word.
    fn from_str(s: &str) -> Result<Self, PresentationError> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let e: i64 = exp.parse().map_err(|_| {
                        PresentationError::syntax(format!("bad exponent in {token:?}"))
                    })?;
                    (name, e)
                }
                None => (token, 1),
            };
            if !is_valid_name(name) {
                return Err(PresentationError::syntax(format!(
                    "bad generator name {name:?}"
                )));
            }
            letters.extend(Word::power_of(name, exp).0);
        }
        Ok(Self(letters))
    }
}

/// Parses a word, panicking on malformed input. For literals in code and
/// tests.
pub fn w(s: &str) -> Word {
    s.parse()
        .unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
