//! Formula syntax: AST, parser and minimal-parenthesis printer.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! entail  := matimp ( "=>" entail )?        right-assoc
//! matimp  := or ( "->" matimp )?            right-assoc
//! or      := and ( "|" and )*               left-assoc
//! and     := unary ( "&" unary )*           left-assoc
//! unary   := "~" unary | atom | "(" entail ")"
//! atom    := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `¬ ∧ ∨ → ⇒` are accepted as aliases; output is always ASCII.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `φ -> ψ`, an abbreviation for `~φ | ψ`.
    MaterialImp(Box<Formula>, Box<Formula>),
    /// `φ => ψ`: the interpretation of `φ` entails that of `ψ`.
    MeaningImp(Box<Formula>, Box<Formula>),
}

/// Where `=>` may appear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Mode {
    /// Only as the single outermost connective, between `=>`-free operands.
    #[default]
    Strict,
    /// Anywhere; a nested `φ => ψ` is read as the constant valuation
    /// returning its truth set.
    Extended,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "extended" => Ok(Mode::Extended),
            other => Err(format!(
                "unknown mode `{other}` (expected strict or extended)"
            )),
        }
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::MaterialImp(Box::new(l), Box::new(r))
    }

    pub fn entails(l: Formula, r: Formula) -> Self {
        Formula::MeaningImp(Box::new(l), Box::new(r))
    }

    pub fn is_entailment_free(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Not(f) => f.is_entailment_free(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::MaterialImp(l, r) => {
                l.is_entailment_free() && r.is_entailment_free()
            }
            Formula::MeaningImp(..) => false,
        }
    }

    /// Whether this formula is admissible in strict mode.
    pub fn is_strict(&self) -> bool {
        match self {
            Formula::MeaningImp(l, r) => l.is_entailment_free() && r.is_entailment_free(),
            other => other.is_entailment_free(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a);
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::MaterialImp(l, r)
            | Formula::MeaningImp(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::MaterialImp(l, r)
            | Formula::MeaningImp(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::MeaningImp(..) => 1,
            Formula::MaterialImp(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) => 5,
            Formula::Atom(_) => 6,
        }
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    /// `=>` below the outermost connective while parsing in strict mode.
    NestedEntailment,
}

/// A parse failure at a character offset (0-based) of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}", self.describe())]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

impl ParseError {
    fn syntax(position: usize, msg: impl Into<String>) -> Self {
        Self {
            kind: ParseErrorKind::Syntax(msg.into()),
            position,
        }
    }

    fn describe(&self) -> String {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => {
                format!("syntax error at column {}: {msg}", self.position + 1)
            }
            ParseErrorKind::NestedEntailment => format!(
                "nested `=>` at column {} (strict mode allows it only as the outermost connective)",
                self.position + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::DoubleArrow => "`=>`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '¬' => Token::Not,
            '&' | '∧' => Token::And,
            '|' | '∨' => Token::Or,
            '→' => Token::Arrow,
            '⇒' | '⟹' => Token::DoubleArrow,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '-' | '=' => {
                if chars.get(i + 1) == Some(&'>') {
                    i += 1;
                    if c == '-' {
                        Token::Arrow
                    } else {
                        Token::DoubleArrow
                    }
                } else {
                    return Err(ParseError::syntax(start, format!("expected `{c}>`")));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i + 1 < chars.len()
                    && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Token::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(ParseError::syntax(
                    start,
                    format!("unexpected character `{other}`"),
                ));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Token::End, chars.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    /// Operator positions of every `=>` node, in the order nodes are built
    /// (which is post-order over the finished tree).
    entail_positions: Vec<usize>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    fn position(&self) -> usize {
        self.tokens[self.cursor].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.cursor].clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    fn entail(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.matimp()?;
        if *self.peek() == Token::DoubleArrow {
            let (_, pos) = self.bump();
            let rhs = self.entail()?;
            self.entail_positions.push(pos);
            return Ok(Formula::entails(lhs, rhs));
        }
        Ok(lhs)
    }

    fn matimp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Token::Arrow {
            self.bump();
            let rhs = self.matimp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Token::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Token::Not => Ok(Formula::not(self.unary()?)),
            Token::Ident(name) => Ok(Formula::Atom(name)),
            Token::LParen => {
                let inner = self.entail()?;
                let (close, close_pos) = self.bump();
                if close != Token::RParen {
                    return Err(ParseError::syntax(
                        close_pos,
                        format!(
                            "expected `)` to close `(` at column {}, found {}",
                            pos + 1,
                            close.describe()
                        ),
                    ));
                }
                Ok(inner)
            }
            other => Err(ParseError::syntax(
                pos,
                format!("expected a formula, found {}", other.describe()),
            )),
        }
    }
}

pub fn parse(text: &str, mode: Mode) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        cursor: 0,
        entail_positions: Vec::new(),
    };
    let formula = parser.entail()?;
    if *parser.peek() != Token::End {
        return Err(ParseError::syntax(
            parser.position(),
            format!("unexpected {}", parser.peek().describe()),
        ));
    }
    if mode == Mode::Strict {
        if let Some(ordinal) = first_nested_entailment(&formula) {
            return Err(ParseError {
                kind: ParseErrorKind::NestedEntailment,
                position: parser.entail_positions[ordinal],
            });
        }
    }
    Ok(formula)
}

/// Post-order index of the first `=>` node that strict mode forbids.
fn first_nested_entailment(f: &Formula) -> Option<usize> {
    fn walk(f: &Formula, outermost: bool, seen: &mut usize) -> Option<usize> {
        match f {
            Formula::Atom(_) => None,
            Formula::Not(g) => walk(g, false, seen),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::MaterialImp(l, r) => {
                walk(l, false, seen).or_else(|| walk(r, false, seen))
            }
            Formula::MeaningImp(l, r) => {
                if let Some(hit) = walk(l, false, seen).or_else(|| walk(r, false, seen)) {
                    return Some(hit);
                }
                let here = *seen;
                *seen += 1;
                (!outermost).then_some(here)
            }
        }
    }
    walk(f, true, &mut 0)
}

/// Prints with the fewest parentheses that reparse to the same tree.
pub fn format(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, &mut out);
    out
}

fn write_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Not(inner) => {
            out.push('~');
            write_operand(inner, inner.precedence() < f.precedence(), out);
        }
        Formula::And(l, r) | Formula::Or(l, r) => {
            let p = f.precedence();
            write_operand(l, l.precedence() < p, out);
            out.push_str(if matches!(f, Formula::And(..)) {
                " & "
            } else {
                " | "
            });
            write_operand(r, r.precedence() <= p, out);
        }
        Formula::MaterialImp(l, r) | Formula::MeaningImp(l, r) => {
            let p = f.precedence();
            write_operand(l, l.precedence() <= p, out);
            out.push_str(if matches!(f, Formula::MaterialImp(..)) {
                " -> "
            } else {
                " => "
            });
            write_operand(r, r.precedence() < p, out);
        }
    }
}

fn write_operand(f: &Formula, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_formula(f, out);
        out.push(')');
    } else {
        write_formula(f, out);
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}
