//! Shared tokenizer for the repo's structured text formats (`voxicon/1`,
//! `scene/1`, `config/1`). Token-based, newline-insensitive, `#` comments.

use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Token {
    Ident(String),
    Number(f64),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Comma,
    Equals,
    Arrow,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Number(n) => write!(f, "number {n}"),
            Token::Str(s) => write!(f, "\"{s}\""),
            Token::LBrace => write!(f, "`{{`"),
            Token::RBrace => write!(f, "`}}`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::Colon => write!(f, "`:`"),
            Token::Comma => write!(f, "`,`"),
            Token::Equals => write!(f, "`=`"),
            Token::Arrow => write!(f, "`->`"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("syntax error at {pos}: {msg}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub msg: String,
}

fn err(pos: Pos, msg: impl Into<String>) -> SyntaxError {
    SyntaxError {
        pos,
        msg: msg.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '+' || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

pub fn tokenize(text: &str) -> Result<Vec<(Token, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1usize;
    let mut col = 1usize;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }

    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else { break };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '{' => {
                bump!();
                out.push((Token::LBrace, pos));
            }
            '}' => {
                bump!();
                out.push((Token::RBrace, pos));
            }
            '(' => {
                bump!();
                out.push((Token::LParen, pos));
            }
            ')' => {
                bump!();
                out.push((Token::RParen, pos));
            }
            ':' => {
                bump!();
                out.push((Token::Colon, pos));
            }
            ',' => {
                bump!();
                out.push((Token::Comma, pos));
            }
            '=' => {
                bump!();
                out.push((Token::Equals, pos));
            }
            '"' => {
                bump!();
                let mut s = String::new();
                loop {
                    match bump!() {
                        Some('"') => break,
                        Some('\\') => match bump!() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some(other) => return Err(err(pos, format!("bad escape \\{other}"))),
                            None => return Err(err(pos, "unterminated string")),
                        },
                        Some(ch) => s.push(ch),
                        None => return Err(err(pos, "unterminated string")),
                    }
                }
                out.push((Token::Str(s), pos));
            }
            '-' => {
                bump!();
                match chars.peek() {
                    Some('>') => {
                        bump!();
                        out.push((Token::Arrow, pos));
                    }
                    Some(&n) if n.is_ascii_digit() || n == '.' => {
                        let num = lex_number(&mut chars, true, pos, &mut line, &mut col)?;
                        out.push((Token::Number(num), pos));
                    }
                    Some(&a) if a.is_ascii_alphabetic() => {
                        let mut s = String::from("-");
                        while let Some(&c) = chars.peek() {
                            if is_ident_continue(c) {
                                s.push(c);
                                bump!();
                            } else {
                                break;
                            }
                        }
                        out.push((Token::Ident(s), pos));
                    }
                    _ => return Err(err(pos, "stray `-`")),
                }
            }
            c if c.is_ascii_digit() || c == '.' => {
                let num = lex_number(&mut chars, false, pos, &mut line, &mut col)?;
                out.push((Token::Number(num), pos));
            }
            c if is_ident_start(c) => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if is_ident_continue(c) || (s.is_empty() && is_ident_start(c)) {
                        s.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push((Token::Ident(s), pos));
            }
            other => return Err(err(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

fn lex_number(
    chars: &mut std::iter::Peekable<std::str::Chars>,
    negative: bool,
    pos: Pos,
    line: &mut usize,
    col: &mut usize,
) -> Result<f64, SyntaxError> {
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    let mut seen_e = false;
    while let Some(&c) = chars.peek() {
        let take = c.is_ascii_digit()
            || c == '.'
            || c == 'e'
            || c == 'E'
            || ((c == '+' || c == '-') && seen_e && matches!(s.chars().last(), Some('e' | 'E')));
        if !take {
            break;
        }
        if c == 'e' || c == 'E' {
            seen_e = true;
        }
        s.push(c);
        let n = chars.next();
        if n == Some('\n') {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    }
    s.parse::<f64>()
        .map_err(|_| err(pos, format!("bad number `{s}`")))
}

/// Token cursor with positioned error reporting.
pub struct Cursor {
    tokens: Vec<(Token, Pos)>,
    pos: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Self, SyntaxError> {
        Ok(Self {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    pub fn here(&self) -> Pos {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|(_, p)| *p)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn fail<T>(&self, msg: impl Into<String>) -> Result<T, SyntaxError> {
        Err(err(self.here(), msg))
    }

    pub fn expect(&mut self, want: &Token) -> Result<(), SyntaxError> {
        let pos = self.here();
        match self.next() {
            Some(t) if t == *want => Ok(()),
            Some(t) => Err(err(pos, format!("expected {want}, found {t}"))),
            None => Err(err(pos, format!("expected {want}, found end of input"))),
        }
    }

    pub fn expect_ident(&mut self) -> Result<String, SyntaxError> {
        let pos = self.here();
        match self.next() {
            Some(Token::Ident(s)) => Ok(s),
            Some(t) => Err(err(pos, format!("expected identifier, found {t}"))),
            None => Err(err(pos, "expected identifier, found end of input")),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<(), SyntaxError> {
        let pos = self.here();
        let id = self.expect_ident()?;
        if id == kw {
            Ok(())
        } else {
            Err(err(pos, format!("expected `{kw}`, found `{id}`")))
        }
    }

    pub fn expect_number(&mut self) -> Result<f64, SyntaxError> {
        let pos = self.here();
        match self.next() {
            Some(Token::Number(n)) => Ok(n),
            Some(t) => Err(err(pos, format!("expected number, found {t}"))),
            None => Err(err(pos, "expected number, found end of input")),
        }
    }

    pub fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn eat_keyword(&mut self, kw: &str) -> bool {
        match self.peek() {
            Some(Token::Ident(s)) if s == kw => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }
}

/// Format an f64 so that parsing it back is lossless (Rust's shortest
/// round-trip `Display`), used by every writer for determinism.
pub fn fmt_f64(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{v:.1}")
    } else {
        format!("{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenizes_mixed_input() {
        let toks = tokenize("object cup { dims: -0.5 0.25 1e-3 } # trailing\nat -> go +y").unwrap();
        let kinds: Vec<&Token> = toks.iter().map(|(t, _)| t).collect();
        assert!(matches!(kinds[0], Token::Ident(s) if s == "object"));
        assert!(matches!(kinds[4], Token::Colon));
        assert!(matches!(kinds[5], Token::Number(n) if *n == -0.5));
        assert!(matches!(kinds[7], Token::Number(n) if *n == 1e-3));
        assert!(matches!(kinds[10], Token::Arrow));
        assert!(matches!(kinds[12], Token::Ident(s) if s == "+y"));
    }

    #[test]
    fn reports_position() {
        let e = tokenize("ok\n  ?").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, col: 3 });
    }

    #[test]
    fn float_formatting_round_trips() {
        for v in [0.0, 1.0, -0.5, 0.1 + 0.2, 1e-9, 123456.789] {
            assert_eq!(fmt_f64(v).parse::<f64>().unwrap(), v);
        }
    }
}
