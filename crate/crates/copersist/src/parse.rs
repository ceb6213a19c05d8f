//! Text formats for ideals and graphs.
//!
//! Ideal grammar (whitespace-insensitive, one expression per input):
//!
//! ```text
//! input  := [ 'ring' var (',' var)* ';' ] 'ideal' '(' [ mono (',' mono)* ] ')'
//! mono   := '1' | factor ('*' factor)*
//! factor := var [ '^' nat ]
//! var    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Without a `ring` declaration the ring is inferred from the variables in
//! order of first appearance; with one, the declared order wins and unknown
//! variables are rejected. `ideal ()` denotes the zero ideal. Repeated
//! factors fold (`x*x` parses as `x^2`), and generator lists are
//! minimalized on construction, with a flag recording whether anything was
//! dropped.
//!
//! Graph grammar:
//!
//! ```text
//! graph  := 'graph' var (',' var)* ';' 'edges' '(' [ edge (',' edge)* ] ')'
//! edge   := var '-' var
//! ```

use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::ring::Ring;

/// A parsed ideal expression: the resolved ring, the canonical ideal, and
/// whether minimalization dropped any of the written generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealExpr {
    pub ring: Ring,
    pub ideal: MonomialIdeal,
    pub reduced: bool,
}

impl IdealExpr {
    /// Canonical text form; parsing it back yields an equal expression.
    pub fn render(&self) -> String {
        render_ideal(&self.ideal)
    }
}

/// Renders an ideal in the parseable grammar.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let vars = ideal.ring().vars().join(",");
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    format!("ring {vars}; ideal ({})", gens.join(", "))
}

/// Renders a graph in the parseable grammar.
pub fn render_graph(graph: &SimpleGraph) -> String {
    let vars = graph.vertices().join(",");
    let edges: Vec<String> = graph
        .edges()
        .map(|(a, b)| format!("{}-{}", graph.vertices()[a], graph.vertices()[b]))
        .collect();
    format!("graph {vars}; edges ({})", edges.join(", "))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Nat(u64),
    Caret,
    Star,
    Comma,
    Semi,
    Dash,
    LParen,
    RParen,
    Eof,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err_at(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    bump(d, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while let Some(&d) = chars.peek() {
                if let Some(digit) = d.to_digit(10) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit as u64))
                        .ok_or_else(|| err_at(tline, tcol, "number does not fit in 64 bits"))?;
                    chars.next();
                    bump(d, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Nat(v),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            '^' => Tok::Caret,
            '*' => Tok::Star,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '-' => Tok::Dash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err_at(tline, tcol, format!("unexpected character `{other}`"))),
        };
        chars.next();
        bump(c, &mut line, &mut col);
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Spanned> {
        let t = self.next();
        if t.tok != tok {
            return Err(err_at(t.line, t.col, format!("expected {what}")));
        }
        Ok(t)
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(()),
            _ => Err(err_at(t.line, t.col, format!("expected `{kw}`"))),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.col)),
            _ => Err(err_at(t.line, t.col, format!("expected {what}"))),
        }
    }

    fn ident_list(&mut self, what: &str) -> Result<Vec<(String, usize, usize)>> {
        let mut out = vec![self.ident(what)?];
        while self.peek().tok == Tok::Comma {
            self.next();
            out.push(self.ident(what)?);
        }
        Ok(out)
    }
}

/// One written monomial: list of (variable, exponent, line, col) factors.
type RawMonomial = Vec<(String, u64, usize, usize)>;

fn parse_monomial(p: &mut Parser) -> Result<RawMonomial> {
    if let Tok::Nat(v) = p.peek().tok {
        let t = p.next();
        if v != 1 {
            return Err(err_at(
                t.line,
                t.col,
                "only `1` is a valid constant monomial",
            ));
        }
        return Ok(vec![]);
    }
    let mut factors = Vec::new();
    loop {
        let (name, line, col) = p.ident("a variable")?;
        let exp = if p.peek().tok == Tok::Caret {
            p.next();
            let t = p.next();
            match t.tok {
                Tok::Nat(v) => v,
                _ => return Err(err_at(t.line, t.col, "expected an exponent")),
            }
        } else {
            1
        };
        factors.push((name, exp, line, col));
        if p.peek().tok == Tok::Star {
            p.next();
        } else {
            break;
        }
    }
    Ok(factors)
}

/// Parses an ideal expression; see the module docs for the grammar.
pub fn parse_ideal_text(text: &str) -> Result<IdealExpr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let declared = if p.at_keyword("ring") {
        p.next();
        let vars = p.ident_list("a variable name")?;
        p.expect(Tok::Semi, "`;` after the ring declaration")?;
        Some(vars)
    } else {
        None
    };
    p.keyword("ideal")?;
    p.expect(Tok::LParen, "`(`")?;
    let mut raw_gens: Vec<RawMonomial> = Vec::new();
    if p.peek().tok != Tok::RParen {
        raw_gens.push(parse_monomial(&mut p)?);
        while p.peek().tok == Tok::Comma {
            p.next();
            raw_gens.push(parse_monomial(&mut p)?);
        }
    }
    p.expect(Tok::RParen, "`)`")?;
    let eof = p.next();
    if eof.tok != Tok::Eof {
        return Err(err_at(eof.line, eof.col, "trailing input after the ideal"));
    }

    let ring = match &declared {
        Some(vars) => {
            for (i, (name, line, col)) in vars.iter().enumerate() {
                if vars[..i].iter().any(|(n, _, _)| n == name) {
                    return Err(err_at(*line, *col, format!("duplicate variable {name}")));
                }
            }
            Ring::new(vars.iter().map(|(n, _, _)| n.clone()))?
        }
        None => {
            let mut names: Vec<String> = Vec::new();
            for g in &raw_gens {
                for (name, _, _, _) in g {
                    if !names.contains(name) {
                        names.push(name.clone());
                    }
                }
            }
            if names.is_empty() {
                return Err(err_at(
                    1,
                    1,
                    "no variables: declare a ring for constant ideals",
                ));
            }
            Ring::new(names)?
        }
    };

    let mut gens = Vec::with_capacity(raw_gens.len());
    for raw in &raw_gens {
        let mut exps = vec![0u64; ring.len()];
        for (name, e, line, col) in raw {
            let Some(i) = ring.index_of(name) else {
                return Err(err_at(*line, *col, format!("unknown variable {name}")));
            };
            exps[i] = exps[i]
                .checked_add(*e)
                .ok_or_else(|| err_at(*line, *col, "exponent overflow"))?;
        }
        gens.push(ring.monomial(exps)?);
    }
    let written = gens.len();
    let ideal = MonomialIdeal::new(ring.clone(), gens)?;
    // The unit ideal collapses to one generator; count survivors.
    let reduced = ideal.num_gens() != written;
    Ok(IdealExpr {
        ring,
        ideal,
        reduced,
    })
}

/// Parses a graph description; see the module docs for the grammar.
pub fn parse_graph_text(text: &str) -> Result<SimpleGraph> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    p.keyword("graph")?;
    let vars = p.ident_list("a vertex name")?;
    p.expect(Tok::Semi, "`;` after the vertex list")?;
    p.keyword("edges")?;
    p.expect(Tok::LParen, "`(`")?;
    let mut pairs: Vec<(String, String, usize, usize)> = Vec::new();
    if p.peek().tok != Tok::RParen {
        loop {
            let (a, line, col) = p.ident("a vertex")?;
            p.expect(Tok::Dash, "`-` between edge endpoints")?;
            let (b, _, _) = p.ident("a vertex")?;
            pairs.push((a, b, line, col));
            if p.peek().tok == Tok::Comma {
                p.next();
            } else {
                break;
            }
        }
    }
    p.expect(Tok::RParen, "`)`")?;
    let eof = p.next();
    if eof.tok != Tok::Eof {
        return Err(err_at(eof.line, eof.col, "trailing input after the graph"));
    }

    let names: Vec<String> = vars.iter().map(|(n, _, _)| n.clone()).collect();
    for (i, (name, line, col)) in vars.iter().enumerate() {
        if vars[..i].iter().any(|(n, _, _)| n == name) {
            return Err(err_at(*line, *col, format!("duplicate vertex {name}")));
        }
    }
    let mut index_pairs = Vec::with_capacity(pairs.len());
    for (a, b, line, col) in &pairs {
        let ia = names
            .iter()
            .position(|n| n == a)
            .ok_or_else(|| err_at(*line, *col, format!("unknown vertex {a}")))?;
        let ib = names
            .iter()
            .position(|n| n == b)
            .ok_or_else(|| err_at(*line, *col, format!("unknown vertex {b}")))?;
        if ia == ib {
            return Err(err_at(*line, *col, format!("loop at vertex {a}")));
        }
        index_pairs.push((ia, ib));
    }
    SimpleGraph::from_indices(names, &index_pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_quartic_fixture_text() {
        let e = parse_ideal_text("ring x,y,z,t; ideal (x^4, y^4*z, x^3*y, x*y^3, x^2*y^2*z*t)")
            .unwrap();
        assert_eq!(e.ring.vars(), &["x", "y", "z", "t"]);
        assert_eq!(e.ideal.num_gens(), 5);
        assert!(!e.reduced);
    }

    #[test]
    fn infers_ring_from_first_appearance() {
        let e = parse_ideal_text("ideal (x1)").unwrap();
        assert_eq!(e.ring.vars(), &["x1"]);
        let e = parse_ideal_text("ideal (b*a, c)").unwrap();
        assert_eq!(e.ring.vars(), &["b", "a", "c"]);
    }

    #[test]
    fn folds_repeated_factors() {
        let e = parse_ideal_text("ideal (x1*x1)").unwrap();
        assert_eq!(e.ideal.render(), "(x1^2)");
    }

    #[test]
    fn flags_reduction() {
        let e = parse_ideal_text("ideal (x, x*y)").unwrap();
        assert!(e.reduced);
        assert_eq!(e.ideal.render(), "(x)");
    }

    #[test]
    fn unit_and_zero_ideals() {
        let e = parse_ideal_text("ring x; ideal (1)").unwrap();
        assert!(e.ideal.is_unit());
        let e = parse_ideal_text("ring x; ideal ()").unwrap();
        assert!(e.ideal.is_zero());
    }

    #[test]
    fn error_positions() {
        let err = parse_ideal_text("ideal (x^)").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_ideal_text("ring x;\nideal (x, y)").unwrap_err();
        match err {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 2);
                assert!(msg.contains("unknown variable y"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_is_identity() {
        let texts = [
            "ring x,y,z,t; ideal (x^4, y^4*z, x^3*y, x*y^3, x^2*y^2*z*t)",
            "ideal (a^2*b, c)",
            "ring u,v; ideal ()",
            "ring w; ideal (1)",
        ];
        for t in texts {
            let e = parse_ideal_text(t).unwrap();
            let r = e.render();
            let e2 = parse_ideal_text(&r).unwrap();
            assert_eq!(e.ring, e2.ring);
            assert_eq!(e.ideal, e2.ideal);
            assert_eq!(r, e2.render());
        }
    }

    #[test]
    fn graph_parsing_and_round_trip() {
        let g = parse_graph_text("graph x1,x2,x3; edges (x1-x2, x2-x3)").unwrap();
        assert_eq!(g.num_edges(), 2);
        let r = render_graph(&g);
        assert_eq!(parse_graph_text(&r).unwrap(), g);
        assert!(parse_graph_text("graph a; edges (a-a)").is_err());
        assert!(parse_graph_text("graph a,b; edges (a-c)").is_err());
    }
}
