//! The group-expression language.
//!
//! ```text
//! spec := term { "x" term }
//! term := ident "(" arg { "," arg } ")" | ident int | "(" spec ")"
//! ```
//!
//! Products are left-associative. Identifiers are case-sensitive; `D n` is
//! the dihedral group of order `n`. `File` takes a double-quoted path.

use std::fmt;
use std::path::PathBuf;

use crate::families::Recipe;
use crate::Error;

const KEYWORDS: [&str; 15] = [
    "FrobSum", "Schmidt", "Heis", "File", "PSL", "SL", "M3", "C", "E", "D", "Q", "S", "A", "P", "x",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("invalid arguments: {0}")]
    Argument(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(&'static str),
    Int(u64),
    Str(String),
    Open,
    Close,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::Open => f.write_str("`(`"),
            Tok::Close => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn error(&self, offset: usize, expected: Vec<&'static str>, found: String) -> SpecError {
        SpecError::Parse { offset, expected, found }
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(usize, Tok), SpecError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((start, Tok::End));
        };
        let single = match c {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            self.pos += 1;
            return Ok((start, t));
        }
        if c.is_ascii_digit() {
            let len = rest.bytes().take_while(u8::is_ascii_digit).count();
            let n = rest[..len]
                .parse()
                .map_err(|_| self.error(start, vec!["integer below 2^64"], rest[..len].to_string()))?;
            self.pos += len;
            return Ok((start, Tok::Int(n)));
        }
        if c == '"' {
            let mut out = String::new();
            let mut chars = rest.char_indices().skip(1);
            while let Some((i, ch)) = chars.next() {
                match ch {
                    '"' => {
                        self.pos += i + 1;
                        return Ok((start, Tok::Str(out)));
                    }
                    '\\' => match chars.next() {
                        Some((_, e @ ('"' | '\\'))) => out.push(e),
                        Some((j, e)) => return Err(self.error(start + j, vec!["`\\\"`", "`\\\\`"], format!("`\\{e}`"))),
                        None => break,
                    },
                    _ => out.push(ch),
                }
            }
            return Err(self.error(self.src.len(), vec!["`\"`"], "end of input".into()));
        }
        if let Some(kw) = KEYWORDS.iter().filter(|k| rest.starts_with(**k)).max_by_key(|k| k.len()) {
            self.pos += kw.len();
            return Ok((start, Tok::Word(kw)));
        }
        Err(self.error(start, vec!["family name", "`(`"], format!("`{c}`")))
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    peeked: Option<(usize, Tok)>,
}

enum Arg {
    Int(u64),
    Path(String),
}

impl Parser<'_> {
    fn peek(&mut self) -> Result<&(usize, Tok), SpecError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex.next()?);
        }
        Ok(self.peeked.as_ref().expect("just filled"))
    }

    fn bump(&mut self) -> Result<(usize, Tok), SpecError> {
        self.peek()?;
        Ok(self.peeked.take().expect("just filled"))
    }

    fn expect(&mut self, want: Tok, label: &'static str) -> Result<(), SpecError> {
        let (offset, t) = self.bump()?;
        if t == want {
            Ok(())
        } else {
            Err(SpecError::Parse {
                offset,
                expected: vec![label],
                found: t.to_string(),
            })
        }
    }

    fn spec(&mut self) -> Result<Recipe, SpecError> {
        let mut acc = self.term()?;
        while self.peek()?.1 == Tok::Word("x") {
            self.bump()?;
            let rhs = self.term()?;
            acc = Recipe::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Recipe, SpecError> {
        let (offset, t) = self.bump()?;
        match t {
            Tok::Open => {
                let inner = self.spec()?;
                self.expect(Tok::Close, "`)`")?;
                Ok(inner)
            }
            Tok::Word(w) if w != "x" => {
                let args = match self.peek()?.1 {
                    Tok::Open => {
                        self.bump()?;
                        let mut args = vec![self.arg()?];
                        loop {
                            let (o, t) = self.bump()?;
                            match t {
                                Tok::Comma => args.push(self.arg()?),
                                Tok::Close => break,
                                other => {
                                    return Err(SpecError::Parse {
                                        offset: o,
                                        expected: vec!["`,`", "`)`"],
                                        found: other.to_string(),
                                    })
                                }
                            }
                        }
                        args
                    }
                    Tok::Int(_) => vec![self.arg()?],
                    _ => {
                        let (o, t) = self.bump()?;
                        return Err(SpecError::Parse {
                            offset: o,
                            expected: vec!["`(`", "integer"],
                            found: t.to_string(),
                        });
                    }
                };
                leaf(w, args, offset)
            }
            other => Err(SpecError::Parse {
                offset,
                expected: vec!["family name", "`(`"],
                found: other.to_string(),
            }),
        }
    }

    fn arg(&mut self) -> Result<Arg, SpecError> {
        let (offset, t) = self.bump()?;
        match t {
            Tok::Int(n) => Ok(Arg::Int(n)),
            Tok::Str(s) => Ok(Arg::Path(s)),
            other => Err(SpecError::Parse {
                offset,
                expected: vec!["integer", "string"],
                found: other.to_string(),
            }),
        }
    }
}

fn argument_error(msg: String) -> SpecError {
    SpecError::Argument(Error::ParameterOutOfRange(msg))
}

fn leaf(word: &'static str, args: Vec<Arg>, offset: usize) -> Result<Recipe, SpecError> {
    if word == "File" {
        return match args.as_slice() {
            [Arg::Path(p)] => Ok(Recipe::File(PathBuf::from(p))),
            _ => Err(SpecError::Parse {
                offset,
                expected: vec!["File(\"path\")"],
                found: "non-string argument".into(),
            }),
        };
    }
    let mut ints = Vec::with_capacity(args.len());
    for a in args {
        match a {
            Arg::Int(n) => ints.push(n),
            Arg::Path(_) => return Err(argument_error(format!("{word} takes integer arguments"))),
        }
    }
    let small = |n: u64| u32::try_from(n).map_err(|_| argument_error(format!("{n} is too large")));
    let arity = |lo: usize, hi: usize| {
        if (lo..=hi).contains(&ints.len()) {
            Ok(())
        } else {
            Err(argument_error(format!("{word} takes {lo}..={hi} arguments, got {}", ints.len())))
        }
    };
    let recipe = match word {
        "C" => arity(1, 1).map(|_| Recipe::Cyclic(ints[0]))?,
        "D" => arity(1, 1).map(|_| Recipe::Dihedral(ints[0]))?,
        "Q" => arity(1, 1).map(|_| Recipe::Quaternion(ints[0]))?,
        "S" => {
            arity(1, 1)?;
            Recipe::Symmetric(small(ints[0])?)
        }
        "A" => {
            arity(1, 1)?;
            Recipe::Alternating(small(ints[0])?)
        }
        "Heis" => arity(1, 1).map(|_| Recipe::Heisenberg(ints[0]))?,
        "M3" => arity(1, 1).map(|_| Recipe::ModularP3(ints[0]))?,
        "E" => {
            arity(2, 2)?;
            Recipe::ElementaryAbelian {
                p: ints[0],
                k: small(ints[1])?,
            }
        }
        "P" => {
            arity(2, 3)?;
            Recipe::PGroup {
                n: small(ints[0])?,
                p: ints[1],
                q: ints.get(2).copied(),
            }
        }
        "Schmidt" => {
            arity(2, 3)?;
            Recipe::Schmidt {
                p: ints[0],
                q: ints[1],
                beta: small(ints.get(2).copied().unwrap_or(1))?,
            }
        }
        "FrobSum" => {
            arity(3, 4)?;
            Recipe::FrobeniusSum {
                p: ints[0],
                q: ints[1],
                copies: small(ints[2])?,
                twist: ints.get(3).copied().unwrap_or(1),
            }
        }
        "SL" | "PSL" => {
            arity(2, 2)?;
            if ints[0] != 2 {
                return Err(argument_error(format!("only degree 2 is supported, got {}", ints[0])));
            }
            if word == "SL" {
                Recipe::Sl2(ints[1])
            } else {
                Recipe::Psl2(ints[1])
            }
        }
        _ => unreachable!("keyword table and leaf table agree"),
    };
    Ok(recipe)
}

/// Parses without checking family preconditions.
pub fn parse_syntax(text: &str) -> Result<Recipe, SpecError> {
    let mut p = Parser {
        lex: Lexer { src: text, pos: 0 },
        peeked: None,
    };
    let recipe = p.spec()?;
    let (offset, t) = p.bump()?;
    if t != Tok::End {
        return Err(SpecError::Parse {
            offset,
            expected: vec!["`x`", "end of input"],
            found: t.to_string(),
        });
    }
    Ok(recipe)
}

/// Parses and validates a group expression.
pub fn parse_spec(text: &str) -> Result<Recipe, SpecError> {
    let recipe = parse_syntax(text)?;
    recipe.validate()?;
    Ok(recipe)
}

fn quote(path: &str) -> String {
    let mut out = String::from('"');
    for c in path.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Canonical form: single-argument families print as `C9`, the rest with
/// parentheses; defaulted trailing arguments are omitted; the right operand
/// of `x` is parenthesized when it is itself a product.
impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "C{n}"),
            Recipe::Dihedral(n) => write!(f, "D{n}"),
            Recipe::Quaternion(n) => write!(f, "Q{n}"),
            Recipe::Symmetric(n) => write!(f, "S{n}"),
            Recipe::Alternating(n) => write!(f, "A{n}"),
            Recipe::Heisenberg(p) => write!(f, "Heis{p}"),
            Recipe::ModularP3(p) => write!(f, "M3({p})"),
            Recipe::ElementaryAbelian { p, k } => write!(f, "E({p},{k})"),
            Recipe::PGroup { n, p, q: None } => write!(f, "P({n},{p})"),
            Recipe::PGroup { n, p, q: Some(q) } => write!(f, "P({n},{p},{q})"),
            Recipe::Schmidt { p, q, beta: 1 } => write!(f, "Schmidt({p},{q})"),
            Recipe::Schmidt { p, q, beta } => write!(f, "Schmidt({p},{q},{beta})"),
            Recipe::FrobeniusSum { p, q, copies, twist: 1 } => write!(f, "FrobSum({p},{q},{copies})"),
            Recipe::FrobeniusSum { p, q, copies, twist } => write!(f, "FrobSum({p},{q},{copies},{twist})"),
            Recipe::Sl2(q) => write!(f, "SL(2,{q})"),
            Recipe::Psl2(q) => write!(f, "PSL(2,{q})"),
            Recipe::File(path) => write!(f, "File({})", quote(&path.to_string_lossy())),
            Recipe::Product(a, b) => match **b {
                Recipe::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_spec("C9").unwrap(), Recipe::Cyclic(9));
        let s = parse_spec("Schmidt(2,7)").unwrap();
        assert_eq!(s, Recipe::Schmidt { p: 2, q: 7, beta: 1 });
        assert_eq!(s.build().unwrap().order(), 56);
        let prod = parse_spec("C2 x C3").unwrap();
        assert_eq!(prod.build().unwrap().order(), 6);
    }

    #[test]
    fn products_associate_left() {
        let r = parse_spec("C2 x C3 x C5").unwrap();
        assert_eq!(r.to_string(), "C2 x C3 x C5");
        let r = parse_spec("C2 x (C3 x C5)").unwrap();
        assert_eq!(r.to_string(), "C2 x (C3 x C5)");
        assert_eq!(parse_spec("(C2)").unwrap(), Recipe::Cyclic(2));
    }

    #[test]
    fn lexing_is_longest_match() {
        assert_eq!(parse_spec("PSL(2,7)").unwrap(), Recipe::Psl2(7));
        assert_eq!(parse_spec("S 4").unwrap(), Recipe::Symmetric(4));
        assert_eq!(parse_spec("M3 3").unwrap(), Recipe::ModularP3(3));
        assert_eq!(parse_spec("M3(3)").unwrap(), Recipe::ModularP3(3));
        assert_eq!(parse_spec("C(9)").unwrap(), Recipe::Cyclic(9));
        assert!(matches!(parse_spec("C2xC3").unwrap(), Recipe::Product(..)));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = parse_spec("Q(8").unwrap_err();
        assert_eq!(
            err,
            SpecError::Parse {
                offset: 3,
                expected: vec!["`,`", "`)`"],
                found: "end of input".into()
            }
        );
        let SpecError::Parse { offset, .. } = parse_spec("C2 x z").unwrap_err() else {
            panic!()
        };
        assert_eq!(offset, 5);
        let SpecError::Parse { offset, .. } = parse_spec("C2 C3").unwrap_err() else {
            panic!()
        };
        assert_eq!(offset, 3);
        assert!(matches!(parse_spec(""), Err(SpecError::Parse { offset: 0, .. })));
        assert!(matches!(parse_spec("C99999999999999999999999"), Err(SpecError::Parse { .. })));
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(
            parse_spec("P(3,7,5)"),
            Err(SpecError::Argument(Error::BadPowerAutomorphism { p: 7, q: 5 }))
        ));
        assert!(matches!(parse_spec("SL(3,5)"), Err(SpecError::Argument(_))));
        assert!(matches!(parse_spec("Q(12)"), Err(SpecError::Argument(_))));
        assert!(matches!(parse_spec("C(2,3)"), Err(SpecError::Argument(_))));
    }

    #[test]
    fn files_quote_round_trip() {
        let r = Recipe::File(PathBuf::from("dir/we\"ird\\name.gens"));
        assert_eq!(parse_syntax(&r.to_string()).unwrap(), r);
    }
}
