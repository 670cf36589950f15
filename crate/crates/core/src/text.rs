//! Text forms of [`Bdd`] values.
//!
//! S-expression grammar (rendered with single spaces):
//!
//! ```text
//! bdd  := "(bdd" SP nat SP node ")"
//! node := "(c" SP bit ")" | "(ite" SP nat SP node SP node ")"
//! ```
//!
//! JSON form: `{"vars": n, "root": node}` where `node` is `{"leaf": b}` or
//! `{"var": k, "then": node, "else": node}`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::bdd::{Bdd, Node};
use crate::error::{Error, Result};

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Leaf(bit) => write!(f, "(c {})", *bit as u8),
            Node::Ite { var, then, els } => write!(f, "(ite {var} {then} {els})"),
        }
    }
}

impl fmt::Display for Bdd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(bdd {} {})", self.nv(), self.root())
    }
}

pub fn to_sexp(b: &Bdd) -> String {
    let mut out = String::new();
    write!(out, "{b}").expect("writing to a String");
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(input: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        match ch {
            '(' => {
                tokens.push((i, Token::Open));
                chars.next();
            }
            ')' => {
                tokens.push((i, Token::Close));
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let start = i;
                let mut end = input.len();
                while let Some(&(j, c)) = chars.peek() {
                    if c == '(' || c == ')' || c.is_whitespace() {
                        end = j;
                        break;
                    }
                    chars.next();
                }
                tokens.push((start, Token::Atom(&input[start..end])));
            }
        }
    }
    tokens
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(at, _)| *at)
    }

    fn fail<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at byte {}", self.offset())))
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let tok = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        tok
    }

    fn expect(&mut self, want: Token<'_>, what: &str) -> Result<()> {
        match self.tokens.get(self.pos) {
            Some((_, t)) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(&format!("expected {what}")),
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Atom(s))) if s.bytes().all(|b| b.is_ascii_digit()) => {
                let v = s.parse::<u32>().or_else(|_| self.fail(&format!("{what} too large")))?;
                self.pos += 1;
                Ok(v)
            }
            _ => self.fail(&format!("expected {what}")),
        }
    }

    fn bdd(&mut self) -> Result<(u32, Node)> {
        self.expect(Token::Open, "`(`")?;
        self.expect(Token::Atom("bdd"), "`bdd`")?;
        let nv = self.number("variable count")?;
        let root = self.node()?;
        self.expect(Token::Close, "`)`")?;
        Ok((nv, root))
    }

    fn node(&mut self) -> Result<Node> {
        self.expect(Token::Open, "`(`")?;
        let node = match self.next() {
            Some(Token::Atom("c")) => match self.next() {
                Some(Token::Atom("0")) => Node::Leaf(false),
                Some(Token::Atom("1")) => Node::Leaf(true),
                _ => {
                    self.pos -= 1;
                    return self.fail("expected leaf bit 0 or 1");
                }
            },
            Some(Token::Atom("ite")) => {
                let var = self.number("variable index")?;
                let then = self.node()?;
                let els = self.node()?;
                Node::ite(var, then, els)
            }
            _ => {
                self.pos -= 1;
                return self.fail("expected `c` or `ite`");
            }
        };
        self.expect(Token::Close, "`)`")?;
        Ok(node)
    }
}

/// Parses one s-expression tree. Any whitespace separates tokens.
pub fn parse_sexp(input: &str) -> Result<Bdd> {
    let mut parser = Parser {
        tokens: tokenize(input),
        pos: 0,
        len: input.len(),
    };
    let (nv, root) = parser.bdd()?;
    if parser.pos != parser.tokens.len() {
        return parser.fail("trailing input");
    }
    Bdd::new(nv, root)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonBdd {
    vars: u32,
    root: JsonNode,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum JsonNode {
    Leaf {
        leaf: u8,
    },
    Ite {
        var: u32,
        then: Box<JsonNode>,
        #[serde(rename = "else")]
        els: Box<JsonNode>,
    },
}

impl From<&Node> for JsonNode {
    fn from(node: &Node) -> Self {
        match node {
            Node::Leaf(bit) => JsonNode::Leaf { leaf: *bit as u8 },
            Node::Ite { var, then, els } => JsonNode::Ite {
                var: *var,
                then: Box::new(then.as_ref().into()),
                els: Box::new(els.as_ref().into()),
            },
        }
    }
}

impl TryFrom<JsonNode> for Node {
    type Error = Error;

    fn try_from(node: JsonNode) -> Result<Self> {
        match node {
            JsonNode::Leaf { leaf: 0 } => Ok(Node::Leaf(false)),
            JsonNode::Leaf { leaf: 1 } => Ok(Node::Leaf(true)),
            JsonNode::Leaf { leaf } => Err(Error::Parse(format!("leaf must be 0 or 1, got {leaf}"))),
            JsonNode::Ite { var, then, els } => {
                Ok(Node::ite(var, (*then).try_into()?, (*els).try_into()?))
            }
        }
    }
}

pub fn to_json(b: &Bdd) -> String {
    let doc = JsonBdd {
        vars: b.nv(),
        root: b.root().into(),
    };
    serde_json::to_string(&doc).expect("tree serializes")
}

pub fn parse_json(input: &str) -> Result<Bdd> {
    let doc: JsonBdd = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    Bdd::new(doc.vars, doc.root.try_into()?)
}

/// Accepts either form, choosing by the first non-blank character.
pub fn parse_any(input: &str) -> Result<Bdd> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_sexp(input)
    }
}
