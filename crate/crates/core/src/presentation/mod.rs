//! Group presentations: parsing, standard constructors, and finite quotients
//! via coset enumeration.

mod coset;
mod parser;

use std::fmt;

use crate::error::{Error, Result};
use crate::perm_group::{Element, FiniteGroup};

pub use coset::{coset_enumerate, DEFAULT_MAX_COSETS};

/// A word as a sequence of `(generator index, nonzero exponent)` terms.
pub type Word = Vec<(usize, i64)>;

/// Named generators plus relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for w in &relators {
            for &(g, e) in w {
                if g >= generator_names.len() {
                    return Err(Error::InvalidParameter(format!("generator index {g} out of range")));
                }
                if e == 0 {
                    return Err(Error::InvalidParameter("zero exponent in relator".into()));
                }
            }
        }
        Ok(GroupPresentation {
            generator_names,
            relators,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parser::parse(text)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Appends relators given in the presentation's own word syntax.
    pub fn with_relators(&self, extra: &[&str]) -> Result<Self> {
        let mut text = self.to_string();
        text.pop();
        for r in extra {
            text.push_str(", ");
            text.push_str(r);
        }
        text.push('>');
        GroupPresentation::parse(&text)
    }

    /// Generators `g` with a relator `g^2` or `g^-2`.
    pub fn involutory_generators(&self) -> Vec<bool> {
        let mut out = vec![false; self.generator_names.len()];
        for w in &self.relators {
            if let [(g, e)] = w.as_slice() {
                if e.abs() == 2 {
                    out[*g] = true;
                }
            }
        }
        out
    }

    /// Parses a single word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let probe = format!("<{}|{}>", self.generator_names.join(","), text);
        let parsed = GroupPresentation::parse(&probe)?;
        match parsed.relators.as_slice() {
            [w] => Ok(w.clone()),
            [] => Ok(Vec::new()),
            _ => Err(Error::Syntax {
                line: 1,
                column: 1,
                message: format!("expected a single word, found `{text}`"),
            }),
        }
    }
}

/// Evaluates `word` in `group`, where generator `i` of the word maps to `images[i]`.
pub fn evaluate_word(group: &FiniteGroup, images: &[Element], word: &[(usize, i64)]) -> Element {
    word.iter().fold(group.identity(), |acc, &(g, e)| group.mul(acc, group.pow(images[g], e)))
}

/// The full triangle group of type `(k, l)` on generators `R0, R2, R1`.
pub fn triangle_group(k: u32, l: u32) -> Result<GroupPresentation> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidParameter(format!("triangle group needs k, l >= 2, got ({k}, {l})")));
    }
    GroupPresentation::parse(&format!(
        "< R0, R2, R1 | R0^2, R2^2, R1^2, (R0 R2)^2, (R1 R2)^{k}, (R0 R1)^{l} >"
    ))
}

/// The free product of two Klein four-groups on `r0, r2, p0, p2`.
pub fn corner_monodromy_group() -> GroupPresentation {
    GroupPresentation::parse("< r0, r2, p0, p2 | r0^2, r2^2, p0^2, p2^2, (r0 r2)^2, (p0 p2)^2 >")
        .expect("static presentation parses")
}

/// Colour-preserving symmetries of the alternately coloured square grid.
pub fn square_grid_group() -> GroupPresentation {
    corner_monodromy_group()
        .with_relators(&["(r0 p0)^2", "(r2 p2)^2"])
        .expect("static presentation parses")
}

fn write_word(f: &mut fmt::Formatter<'_>, names: &[String], word: &[(usize, i64)]) -> fmt::Result {
    for (i, &(g, e)) in word.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}", names[g])?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Prints in the grammar accepted by [`GroupPresentation::parse`].
impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generator_names.join(", "))?;
        for (i, w) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write_word(f, &self.generator_names, w)?;
        }
        write!(f, " >")
    }
}
