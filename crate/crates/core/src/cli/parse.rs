//! Text notations for elements.
//!
//! * partial map: `[2,_,1]` (1-based images, `_` for undefined)
//! * partition: `{1 2'}{2}{1'}` (whitespace-separated points, `'` for the lower row)
//! * shift map: `{-2,-1};+2` (excluded points, then the signed shift)
//! * word: a string over `g`, `h`, `e` (`1` or the empty string for the identity)

use crate::elements::{PartialMap, Partition};
use crate::error::{Error, ParseError, Result};
use crate::pmonoid::Nf;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
            found: match self.peek() {
                Some(c) => format!("{c:?}"),
                None => "end of input".into(),
            },
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("{c:?}")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("end of input")),
        }
    }

    fn digits(&mut self, expected: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error(expected));
        }
        self.text[start..self.pos].parse().map_err(|_| ParseError {
            position: start,
            expected: "a number that fits in 64 bits".into(),
            found: self.text[start..self.pos].to_string(),
        })
    }

    fn positive(&mut self, expected: &str) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.digits(expected)?;
        if v == 0 {
            return Err(ParseError {
                position: start,
                expected: "a point numbered from 1".into(),
                found: "0".into(),
            });
        }
        Ok(v as usize)
    }

    fn signed(&mut self, expected: &str) -> Result<i64, ParseError> {
        self.skip_ws();
        let negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let start = self.pos;
        let v = self.digits(expected)?;
        let v = i64::try_from(v).map_err(|_| ParseError {
            position: start,
            expected: "a 64-bit integer".into(),
            found: v.to_string(),
        })?;
        Ok(if negative { -v } else { v })
    }
}

pub fn parse_partial_map(text: &str) -> Result<PartialMap> {
    let mut cur = Cursor::new(text);
    cur.expect('[')?;
    let mut images = Vec::new();
    loop {
        cur.skip_ws();
        if cur.peek() == Some('_') {
            cur.bump();
            images.push(None);
        } else {
            images.push(Some(cur.positive("a point or '_'")? - 1));
        }
        if cur.eat(']') {
            break;
        }
        cur.expect(',').map_err(|e| ParseError {
            expected: "',' or ']'".into(),
            ..e
        })?;
    }
    cur.end()?;
    PartialMap::new(images)
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut cur = Cursor::new(text);
    let mut blocks: Vec<Vec<(usize, bool)>> = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("'{'").into());
    }
    while cur.peek().is_some() {
        cur.expect('{')?;
        let mut block = Vec::new();
        loop {
            cur.skip_ws();
            if cur.peek() == Some('}') {
                if block.is_empty() {
                    return Err(cur.error("a point").into());
                }
                cur.bump();
                break;
            }
            if !block.is_empty() {
                cur.eat(',');
            }
            let x = cur.positive("a point or '}'")?;
            let primed = cur.peek() == Some('\'');
            if primed {
                cur.bump();
            }
            block.push((x - 1, primed));
        }
        blocks.push(block);
        cur.skip_ws();
    }
    let degree = blocks
        .iter()
        .flatten()
        .map(|(x, _)| x + 1)
        .max()
        .unwrap_or(0);
    let blocks = blocks
        .into_iter()
        .map(|b| {
            b.into_iter()
                .map(|(x, primed)| if primed { degree + x } else { x })
                .collect()
        })
        .collect();
    Partition::from_blocks(degree, blocks)
}

pub fn parse_nf(text: &str) -> Result<Nf> {
    let mut cur = Cursor::new(text);
    cur.expect('{')?;
    let mut excluded = Vec::new();
    if !cur.eat('}') {
        loop {
            excluded.push(cur.signed("an integer")?);
            if cur.eat('}') {
                break;
            }
            cur.expect(',').map_err(|e| ParseError {
                expected: "',' or '}'".into(),
                ..e
            })?;
        }
    }
    cur.expect(';')?;
    let shift = cur.signed("a signed shift such as +2")?;
    cur.end()?;
    let len = excluded.len();
    excluded.sort_unstable();
    excluded.dedup();
    if excluded.len() != len {
        return Err(Error::RepeatedPoint("in excluded set".into()));
    }
    Ok(Nf::new(excluded, shift))
}

/// Words are read left to right; `1` denotes the empty word.
pub fn parse_word(text: &str) -> Result<Nf> {
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(Nf::identity());
    }
    for (i, c) in trimmed.char_indices() {
        if !matches!(c, 'g' | 'h' | 'e') {
            let offset = text.len() - text.trim_start().len();
            return Err(ParseError {
                position: offset + i,
                expected: "one of g, h, e".into(),
                found: format!("{c:?}"),
            }
            .into());
        }
    }
    Nf::from_word(trimmed)
}

/// Accepts either notation for an element of the shift-map monoid.
pub fn parse_nf_or_word(text: &str) -> Result<Nf> {
    if text.trim_start().starts_with('{') {
        parse_nf(text)
    } else {
        parse_word(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::Element;

    #[test]
    fn partial_map_notation() {
        let a = parse_partial_map("[2,_,1]").unwrap();
        assert_eq!(a.images(), &[Some(1), None, Some(0)]);
        assert_eq!(parse_partial_map(" [ 2 , _ ,1 ] ").unwrap(), a);
    }

    #[test]
    fn partition_notation() {
        let a = parse_partition("{1 2'}{2}{1'}").unwrap();
        assert_eq!(a.degree(), 2);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.to_string(), "{1 2'}{2}{1'}");
        assert_eq!(parse_partition("{2}{1'}{2' 1}").unwrap(), a);
    }

    #[test]
    fn nf_notation() {
        let e = parse_nf("{0};+0").unwrap();
        assert_eq!(e, Nf::e());
        let a = parse_nf("{-1,-2};+2").unwrap();
        assert_eq!(a.to_string(), "{-2,-1};+2");
        assert_eq!(parse_nf("{};-3").unwrap(), Nf::new(vec![], -3));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_partial_map("[2,x]").unwrap_err();
        let Error::Parse(p) = err else { panic!() };
        assert_eq!(p.position, 3);

        let err = parse_partition("{1 2'}{2}}").unwrap_err();
        let Error::Parse(p) = err else { panic!() };
        assert_eq!(p.position, 9);

        let err = parse_word("gex").unwrap_err();
        let Error::Parse(p) = err else { panic!() };
        assert_eq!(p.position, 2);
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse_partition("{1 1'}{1}{2 2'}"),
            Err(Error::RepeatedPoint(_))
        ));
        assert!(matches!(
            parse_partition("{1 2}{1'}"),
            Err(Error::UncoveredPoint(_))
        ));
        assert!(matches!(
            parse_partial_map("[3,1]"),
            Err(Error::PointOutOfRange { .. })
        ));
        assert!(parse_nf("{1,1};+0").is_err());
        assert!(parse_partial_map("[0]").is_err());
    }
}
