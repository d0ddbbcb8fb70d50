//! `(J <left> <right>)` / `(U <left> <right>)` serialization, leaves as decimal ids.

use std::fmt;
use std::str::FromStr;

use super::{Cotree, CotreeBuilder, NodeKind};
use crate::error::{Error, Result};

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Item {
            Open(usize),
            Text(&'static str),
        }
        let mut stack = vec![Item::Open(Cotree::ROOT)];
        while let Some(item) = stack.pop() {
            match item {
                Item::Text(s) => f.write_str(s)?,
                Item::Open(x) => match self.kind(x) {
                    NodeKind::Leaf(v) => write!(f, "{v}")?,
                    kind => {
                        let [l, r] = self.children(x).unwrap();
                        f.write_str(if kind == NodeKind::Join { "(J " } else { "(U " })?;
                        stack.push(Item::Text(")"));
                        stack.push(Item::Open(r));
                        stack.push(Item::Text(" "));
                        stack.push(Item::Open(l));
                    }
                },
            }
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Op(NodeKind),
    Vertex(usize),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => tokens.push(Token::Open),
            b')' => tokens.push(Token::Close),
            b'J' => tokens.push(Token::Op(NodeKind::Join)),
            b'U' => tokens.push(Token::Op(NodeKind::Union)),
            b if b.is_ascii_whitespace() => {}
            b if b.is_ascii_digit() => {
                let start = i;
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let v = s[start..=i]
                    .parse()
                    .map_err(|_| Error::parse(1, format!("bad vertex id at byte {start}")))?;
                tokens.push(Token::Vertex(v));
            }
            b => {
                return Err(Error::parse(1, format!("unexpected character `{}`", b as char)));
            }
        }
        i += 1;
    }
    Ok(tokens)
}

impl FromStr for Cotree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::parse(1, msg.to_string());
        let mut b = CotreeBuilder::new();
        // open internal nodes: (kind, children parsed so far)
        let mut open: Vec<(NodeKind, Vec<usize>)> = Vec::new();
        let mut root = None;
        let mut tokens = tokenize(s)?.into_iter().peekable();

        while let Some(tok) = tokens.next() {
            let finished = match tok {
                Token::Vertex(v) => b.leaf(v),
                Token::Open => {
                    match tokens.next() {
                        Some(Token::Op(kind)) => open.push((kind, Vec::new())),
                        _ => return Err(err("`(` must be followed by J or U")),
                    }
                    continue;
                }
                Token::Close => {
                    let (kind, children) = open.pop().ok_or_else(|| err("unbalanced `)`"))?;
                    if children.len() != 2 {
                        return Err(err("internal nodes need exactly two children"));
                    }
                    b.internal(kind, children[0], children[1])
                }
                Token::Op(_) => return Err(err("operator outside parentheses")),
            };
            match open.last_mut() {
                Some((_, children)) => {
                    if children.len() == 2 {
                        return Err(err("internal nodes need exactly two children"));
                    }
                    children.push(finished);
                }
                None => {
                    if root.replace(finished).is_some() || tokens.peek().is_some() {
                        return Err(err("trailing input after cotree"));
                    }
                }
            }
        }
        if !open.is_empty() {
            return Err(err("unbalanced `(`"));
        }
        let root = root.ok_or_else(|| err("empty cotree"))?;
        b.finish(root)
    }
}
