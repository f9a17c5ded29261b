//! Character-table file format:
//!
//! ```text
//! #qsh-char v1
//! #window MIN..MAX L ALPHABET
//! #scalar Q|Qt
//! word<TAB>scalar
//! ...
//! ```
//!
//! Full files carry one line per window word, in canonical order. Partial
//! files (used as constraint input to `char fit`) may cover any subset.

use std::collections::BTreeMap;

use qsh_core::characters::LinearMap;
use qsh_core::{Alphabet, MapKind, Rat, RatFun, Window, Word};

use crate::parse::{CliScalar, Cursor, ParseError};

#[derive(Debug)]
pub enum FileError {
    Syntax { line: usize, message: String },
    Parse { line: usize, inner: ParseError },
    Table(qsh_core::Error),
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FileError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            FileError::Parse { line, inner } => write!(f, "line {line}: {inner}"),
            FileError::Table(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FileError {}

/// A loaded character file with its scalar type resolved.
pub enum CharData {
    Q(LinearMap<Rat>),
    Qt(LinearMap<RatFun>),
}

/// A loaded partial table (constraint file).
pub enum PartialData {
    Q(Window, BTreeMap<Word, Rat>),
    Qt(Window, BTreeMap<Word, RatFun>),
}

fn parse_window(text: &str, line: usize) -> Result<Window, FileError> {
    let syntax = |message: &str| FileError::Syntax { line, message: message.into() };
    let mut parts = text.split_whitespace();
    let range = parts.next().ok_or_else(|| syntax("missing letter range"))?;
    let max_len: usize = parts
        .next()
        .ok_or_else(|| syntax("missing max length"))?
        .parse()
        .map_err(|_| syntax("bad max length"))?;
    let alphabet = match parts.next().ok_or_else(|| syntax("missing alphabet"))? {
        "all" => Alphabet::All,
        "nonpositive" => Alphabet::Nonpositive,
        "negative" => Alphabet::Negative,
        _ => return Err(syntax("alphabet must be all|nonpositive|negative")),
    };
    if parts.next().is_some() {
        return Err(syntax("trailing tokens after alphabet"));
    }
    let (min, max) = range
        .split_once("..")
        .ok_or_else(|| syntax("letter range must be MIN..MAX"))?;
    let min: i64 = min.parse().map_err(|_| syntax("bad letter minimum"))?;
    let max: i64 = max.parse().map_err(|_| syntax("bad letter maximum"))?;
    Window::new(min, max, max_len, alphabet).map_err(FileError::Table)
}

struct Header {
    window: Window,
    scalar: String,
    body_start: usize,
}

fn parse_header(text: &str) -> Result<(Header, Vec<(usize, &str)>), FileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let syntax = |line: usize, message: &str| FileError::Syntax { line, message: message.into() };

    let (n, first) = lines.next().ok_or_else(|| syntax(1, "empty file"))?;
    if first.trim() != "#qsh-char v1" {
        return Err(syntax(n, "expected '#qsh-char v1'"));
    }
    let (n, second) = lines.next().ok_or_else(|| syntax(n, "missing #window line"))?;
    let window = match second.trim().strip_prefix("#window ") {
        Some(rest) => parse_window(rest, n)?,
        None => return Err(syntax(n, "expected '#window MIN..MAX L ALPHABET'")),
    };
    let (n, third) = lines.next().ok_or_else(|| syntax(n, "missing #scalar line"))?;
    let scalar = match third.trim().strip_prefix("#scalar ") {
        Some(tag @ ("Q" | "Qt")) => tag.to_string(),
        _ => return Err(syntax(n, "expected '#scalar Q' or '#scalar Qt'")),
    };
    let body: Vec<(usize, &str)> = lines.collect();
    Ok((Header { window, scalar, body_start: n + 1 }, body))
}

fn parse_body<S: CliScalar>(
    body: &[(usize, &str)],
) -> Result<BTreeMap<Word, S>, FileError> {
    let mut table = BTreeMap::new();
    for &(n, line) in body {
        let (word_text, scalar_text) = line
            .split_once('\t')
            .ok_or_else(|| FileError::Syntax { line: n, message: "expected word<TAB>scalar".into() })?;
        let word = crate::parse::parse_word(word_text.trim())
            .map_err(|inner| FileError::Parse { line: n, inner })?;
        let mut cursor = Cursor::new(scalar_text.trim());
        let value = S::parse_scalar(&mut cursor)
            .and_then(|v| cursor.end().map(|_| v))
            .map_err(|inner| FileError::Parse { line: n, inner })?;
        if table.insert(word.clone(), value).is_some() {
            return Err(FileError::Syntax { line: n, message: format!("duplicate word {word}") });
        }
    }
    Ok(table)
}

/// Loads a full character file; the table must cover the window exactly.
/// The map is marked `character` when its unit value is 1 (the caller still
/// runs `check_character` where multiplicativity matters), `plain` otherwise.
pub fn read_char_file(text: &str) -> Result<CharData, FileError> {
    let (header, body) = parse_header(text)?;
    let _ = header.body_start;
    match header.scalar.as_str() {
        "Q" => {
            let table = parse_body::<Rat>(&body)?;
            let kind = kind_for(&table);
            LinearMap::new(header.window, table, kind)
                .map(CharData::Q)
                .map_err(FileError::Table)
        }
        _ => {
            let table = parse_body::<RatFun>(&body)?;
            let kind = kind_for(&table);
            LinearMap::new(header.window, table, kind)
                .map(CharData::Qt)
                .map_err(FileError::Table)
        }
    }
}

fn kind_for<S: CliScalar>(table: &BTreeMap<Word, S>) -> MapKind {
    match table.get(&Word::empty()) {
        Some(v) if *v == S::one() => MapKind::Character,
        Some(v) if v.is_zero() => MapKind::Infinitesimal,
        _ => MapKind::Plain,
    }
}

/// Loads a partial table (any subset of window words).
pub fn read_partial_file(text: &str) -> Result<PartialData, FileError> {
    let (header, body) = parse_header(text)?;
    match header.scalar.as_str() {
        "Q" => Ok(PartialData::Q(header.window, parse_body::<Rat>(&body)?)),
        _ => Ok(PartialData::Qt(header.window, parse_body::<RatFun>(&body)?)),
    }
}

pub fn write_char_file<S: CliScalar>(map: &LinearMap<S>) -> String {
    let mut out = String::new();
    out.push_str("#qsh-char v1\n");
    out.push_str(&format!("#window {}\n", map.window()));
    out.push_str(&format!("#scalar {}\n", S::TAG));
    for (w, v) in map.table() {
        out.push_str(&format!("{w}\t{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_file_round_trip() {
        let window = Window::new(-2, 0, 2, Alphabet::Nonpositive).unwrap();
        let e = LinearMap::<Rat>::counit_unit(window);
        let text = write_char_file(&e);
        assert!(text.starts_with("#qsh-char v1\n#window -2..0 2 nonpositive\n#scalar Q\n"));
        match read_char_file(&text).unwrap() {
            CharData::Q(back) => assert_eq!(back, e),
            CharData::Qt(_) => panic!("wrong scalar"),
        }
    }

    #[test]
    fn incomplete_tables_are_rejected() {
        let text = "#qsh-char v1\n#window 0..0 1 all\n#scalar Q\n[]\t1\n";
        assert!(matches!(read_char_file(text), Err(FileError::Table(_))));
    }

    #[test]
    fn partial_tables_load_subsets() {
        let text = "#qsh-char v1\n#window -4..0 3 nonpositive\n#scalar Q\n[-1]\t-1/12\n[-3]\t1/120\n";
        match read_partial_file(text).unwrap() {
            PartialData::Q(window, table) => {
                assert_eq!(window.max_len(), 3);
                assert_eq!(table.len(), 2);
            }
            PartialData::Qt(..) => panic!("wrong scalar"),
        }
    }

    #[test]
    fn header_errors_name_the_line() {
        let text = "#qsh-char v1\n#window nonsense\n#scalar Q\n";
        match read_char_file(text).err() {
            Some(FileError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
