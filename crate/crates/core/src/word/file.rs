//! Line-oriented fibration descriptions:
//!
//! ```text
//! # genus-2 fiber over a torus
//! fiber_genus = 2
//! base_genus = 1
//! word = S{1}^2 (c1 c2)^3
//! flat = [c1 c2, c3']
//! ```
//!
//! `word` defaults to the empty word; `flat` may repeat, one line per
//! commutator of the flat part. `#` starts a comment.

use super::{parse_commutator_pair, parse_word, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationFile {
    pub fiber_genus: usize,
    pub base_genus: usize,
    pub word: Word,
    pub flat: Vec<(Word, Word)>,
}

fn file_err(line: usize, message: impl Into<String>) -> Error {
    Error::File { line, message: message.into() }
}

pub fn parse_fibration_file(text: &str) -> Result<FibrationFile> {
    let mut fiber_genus = None;
    let mut base_genus = None;
    let mut word_line: Option<(usize, &str)> = None;
    let mut flat_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(file_err(line_no, format!("expected `key = value`, found `{line}`")));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "fiber_genus" | "base_genus" => {
                let slot = if key == "fiber_genus" { &mut fiber_genus } else { &mut base_genus };
                if slot.is_some() {
                    return Err(file_err(line_no, format!("duplicate key `{key}`")));
                }
                let v: usize = value.parse().map_err(|_| {
                    file_err(line_no, format!("`{key}` must be a non-negative integer, found `{value}`"))
                })?;
                *slot = Some(v);
            }
            "word" => {
                if word_line.is_some() {
                    return Err(file_err(line_no, "duplicate key `word`"));
                }
                word_line = Some((line_no, value));
            }
            "flat" => flat_lines.push((line_no, value)),
            other => return Err(file_err(line_no, format!("unknown key `{other}`"))),
        }
    }

    let fiber_genus = fiber_genus.ok_or_else(|| file_err(0, "missing `fiber_genus`"))?;
    let base_genus = base_genus.ok_or_else(|| file_err(0, "missing `base_genus`"))?;
    if fiber_genus == 0 {
        return Err(file_err(0, "`fiber_genus` must be at least 1"));
    }
    let word = match word_line {
        Some((line, text)) => parse_word(text, fiber_genus).map_err(|e| file_err(line, e.to_string()))?,
        None => Word::empty(fiber_genus),
    };
    let flat = flat_lines
        .into_iter()
        .map(|(line, text)| parse_commutator_pair(text, fiber_genus).map_err(|e| file_err(line, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(FibrationFile { fiber_genus, base_genus, word, flat })
}
