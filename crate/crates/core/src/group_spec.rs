//! The group-spec mini-language.
//!
//! ```text
//! spec   := "c:" INT | "d:" INT | "ea:" PRIME "^" INT | "a:" INT
//!         | "sd:" PRIME "," INT "," PRIME | "sd:" PRIME "," INT
//!         | "psl2:" INT | "perm:" INT ";" gen ("," gen)*
//! gen    := cycle cycle*
//! cycle  := "(" INT (SPACE INT)* ")"
//! ```
//!
//! `d:m` is the dihedral group of order `2m`. A generator may be a product of
//! disjoint cycles written side by side, as in `(0 1)(2 3)`. `sd:p,n` picks
//! the smallest prime `q = m p^n + 1`. Whitespace between tokens is ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::families::{
    make_alternating, make_cyclic, make_dihedral, make_elementary_abelian, make_metacyclic,
    make_permutation_group, make_psl2, Family, GroupDescriptor,
};
use crate::group::DEFAULT_CAP;
use crate::nt::{dirichlet_search, Prime};
use crate::perm::Permutation;

pub const DEFAULT_M_MAX: u64 = 1_000_000;

/// Largest degree accepted in `perm:` specs.
pub const MAX_PERM_DEGREE: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    /// Enumeration cap for the parsed group.
    pub cap: u64,
    /// Search bound for `m` in `sd:p,n`.
    pub m_max: u64,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            cap: DEFAULT_CAP,
            m_max: DEFAULT_M_MAX,
        }
    }
}

/// A parsed spec together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub raw: String,
    pub descriptor: GroupDescriptor,
}

impl GroupSpec {
    pub fn parse(text: &str, opts: &ParseOptions) -> Result<Self> {
        Ok(GroupSpec {
            raw: text.to_string(),
            descriptor: parse_group_spec(text, opts)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Int(u64),
    Punct(char),
    End,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(Tok<'a>, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start));
        };
        let run = |pred: fn(char) -> bool| rest.find(|ch: char| !pred(ch)).unwrap_or(rest.len());
        if c.is_ascii_digit() {
            let len = run(|ch| ch.is_ascii_digit());
            self.pos += len;
            let n = rest[..len].parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "integer too large".into(),
            })?;
            Ok((Tok::Int(n), start))
        } else if c.is_ascii_alphabetic() {
            let len = run(|ch| ch.is_ascii_alphanumeric());
            self.pos += len;
            Ok((Tok::Word(&rest[..len]), start))
        } else {
            self.pos += c.len_utf8();
            Ok((Tok::Punct(c), start))
        }
    }

    fn peek(&mut self) -> Result<(Tok<'a>, usize)> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }

    fn expect_punct(&mut self, want: char) -> Result<()> {
        match self.next()? {
            (Tok::Punct(c), _) if c == want => Ok(()),
            (t, pos) => Err(unexpected(t, pos, &format!("'{want}'"))),
        }
    }

    fn expect_int(&mut self) -> Result<(u64, usize)> {
        match self.next()? {
            (Tok::Int(n), pos) => Ok((n, pos)),
            (t, pos) => Err(unexpected(t, pos, "an integer")),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.next()? {
            (Tok::End, _) => Ok(()),
            (t, pos) => Err(unexpected(t, pos, "end of input")),
        }
    }
}

fn unexpected(t: Tok<'_>, pos: usize, want: &str) -> Error {
    let found = match t {
        Tok::Word(w) => format!("'{w}'"),
        Tok::Int(n) => format!("integer {n}"),
        Tok::Punct(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    };
    Error::Syntax {
        pos,
        msg: format!("expected {want}, found {found}"),
    }
}

fn semantic(e: Error) -> Error {
    match e {
        Error::TooLarge { .. } | Error::Syntax { .. } | Error::Semantic(_) => e,
        other => Error::Semantic(other.to_string()),
    }
}

fn to_u32(n: u64, pos: usize) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Syntax {
        pos,
        msg: format!("{n} is too large here"),
    })
}

pub fn parse_group_spec(text: &str, opts: &ParseOptions) -> Result<GroupDescriptor> {
    let mut lx = Lexer { text, pos: 0 };
    let (kind, kind_pos) = match lx.next()? {
        (Tok::Word(w), pos) => (w, pos),
        (t, pos) => return Err(unexpected(t, pos, "a group kind (c, d, ea, a, sd, psl2, perm)")),
    };
    lx.expect_punct(':')?;
    let desc = match kind {
        "c" => {
            let (n, _) = lx.expect_int()?;
            lx.expect_end()?;
            make_cyclic(n)
        }
        "d" => {
            let (m, _) = lx.expect_int()?;
            lx.expect_end()?;
            make_dihedral(m)
        }
        "ea" => {
            let (p, _) = lx.expect_int()?;
            lx.expect_punct('^')?;
            let (r, r_pos) = lx.expect_int()?;
            lx.expect_end()?;
            make_elementary_abelian(p, to_u32(r, r_pos)?)
        }
        "a" => {
            let (n, n_pos) = lx.expect_int()?;
            lx.expect_end()?;
            make_alternating(to_u32(n, n_pos)?)
        }
        "sd" => {
            let (p, _) = lx.expect_int()?;
            lx.expect_punct(',')?;
            let (n, n_pos) = lx.expect_int()?;
            let n = to_u32(n, n_pos)?;
            let q = match lx.next()? {
                (Tok::End, _) => None,
                (Tok::Punct(','), _) => {
                    let (q, _) = lx.expect_int()?;
                    lx.expect_end()?;
                    Some(q)
                }
                (t, pos) => return Err(unexpected(t, pos, "',' or end of input")),
            };
            match q {
                Some(q) => make_metacyclic(p, n, q),
                None => {
                    let prime = Prime::new(p).map_err(semantic)?;
                    match dirichlet_search(prime, n, opts.m_max).map_err(semantic)? {
                        Some((_, q)) => make_metacyclic(p, n, q),
                        None => Err(Error::Semantic(format!(
                            "no prime q = m * {p}^{n} + 1 with m <= {}",
                            opts.m_max
                        ))),
                    }
                }
            }
        }
        "psl2" => {
            let (q, _) = lx.expect_int()?;
            lx.expect_end()?;
            make_psl2(q)
        }
        "perm" => {
            let (degree, degree_pos) = lx.expect_int()?;
            if degree > MAX_PERM_DEGREE {
                return Err(Error::Syntax {
                    pos: degree_pos,
                    msg: format!("degree {degree} exceeds {MAX_PERM_DEGREE}"),
                });
            }
            let degree = degree as usize;
            lx.expect_punct(';')?;
            let mut gens = Vec::new();
            loop {
                gens.push(parse_generator(&mut lx, degree)?);
                match lx.next()? {
                    (Tok::End, _) => break,
                    (Tok::Punct(','), _) => continue,
                    (t, pos) => return Err(unexpected(t, pos, "',' or end of input")),
                }
            }
            if degree == 0 {
                return Err(Error::Semantic("degree must be positive".into()));
            }
            make_permutation_group(degree, gens, opts.cap)
        }
        other => {
            return Err(Error::Syntax {
                pos: kind_pos,
                msg: format!("unknown group kind '{other}'"),
            })
        }
    };
    Ok(desc.map_err(semantic)?.with_cap(opts.cap))
}

fn parse_generator(lx: &mut Lexer<'_>, degree: usize) -> Result<Permutation> {
    let mut cycles = Vec::new();
    loop {
        lx.expect_punct('(')?;
        let mut cycle = Vec::new();
        loop {
            match lx.next()? {
                (Tok::Int(x), pos) => cycle.push(u32::try_from(x).map_err(|_| Error::Syntax {
                    pos,
                    msg: format!("point {x} is too large"),
                })?),
                (Tok::Punct(')'), pos) if cycle.is_empty() => {
                    return Err(Error::Syntax {
                        pos,
                        msg: "empty cycle".into(),
                    })
                }
                (Tok::Punct(')'), _) => break,
                (t, pos) => return Err(unexpected(t, pos, "a point or ')'")),
            }
        }
        cycles.push(cycle);
        if !matches!(lx.peek()?.0, Tok::Punct('(')) {
            break;
        }
    }
    if degree == 0 {
        return Err(Error::Semantic("degree must be positive".into()));
    }
    Permutation::from_cycles(degree, &cycles).map_err(semantic)
}

fn render_permutation(out: &mut String, g: &Permutation) {
    let cycles = g.cycles();
    if cycles.is_empty() {
        out.push_str("(0)");
        return;
    }
    for c in cycles {
        out.push('(');
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{x}");
        }
        out.push(')');
    }
}

/// Canonical spec text; parsing it gives back an equal descriptor.
pub fn render_group_spec(g: &GroupDescriptor) -> String {
    match g.family() {
        Family::Cyclic { n } => format!("c:{n}"),
        Family::Dihedral { m } => format!("d:{m}"),
        Family::ElementaryAbelian { p, r } => format!("ea:{p}^{r}"),
        Family::Alternating { n } => format!("a:{n}"),
        Family::Metacyclic { p, n, q, .. } => format!("sd:{p},{n},{q}"),
        Family::Psl2 { p, r } => format!("psl2:{}", p.get().pow(*r)),
        Family::Permutation { degree, generators } => {
            let mut out = format!("perm:{degree};");
            for (i, g) in generators.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                render_permutation(&mut out, g);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> Result<GroupDescriptor> {
        parse_group_spec(s, &ParseOptions::default())
    }

    #[test]
    fn spec_examples() {
        let g = parse("psl2:961").unwrap();
        assert_eq!(g.family(), &Family::Psl2 { p: Prime::new(31).unwrap(), r: 2 });
        let g = parse("sd:2,4").unwrap();
        assert!(matches!(g.family(), Family::Metacyclic { n: 4, q: 17, .. }));
        assert_eq!(g, parse("sd:2,4,17").unwrap());
        assert_eq!(parse("perm:5;(0 1 2 3 4),(0 1)").unwrap().order(), 120);
    }

    #[test]
    fn whitespace_between_tokens() {
        assert_eq!(parse("  sd : 3 , 2 , 19 ").unwrap(), parse("sd:3,2,19").unwrap());
        assert_eq!(
            parse("perm: 4 ; ( 0 1 ) ( 2 3 ) , (0 2)").unwrap(),
            parse("perm:4;(0 1)(2 3),(0 2)").unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("", 0),
            ("x:4", 0),
            ("c4", 2),
            ("c:", 2),
            ("c:4 5", 4),
            ("ea:2,3", 4),
            ("sd:2;4", 4),
            ("perm:3;(0 1", 11),
            ("perm:3;()", 8),
            ("perm:3;(0,1)", 9),
            ("c:99999999999999999999999", 2),
        ];
        for (text, want) in cases {
            match parse(text) {
                Err(Error::Syntax { pos, .. }) => assert_eq!(pos, want, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn semantic_errors_name_the_constraint() {
        let e = parse("sd:2,3,5").unwrap_err();
        assert!(matches!(&e, Error::Semantic(m) if m.contains("does not divide")), "{e}");
        assert!(matches!(parse("psl2:12"), Err(Error::Semantic(m)) if m.contains("prime power")));
        assert!(matches!(parse("ea:4^2"), Err(Error::Semantic(_))));
        assert!(matches!(parse("c:0"), Err(Error::Semantic(_))));
        assert!(matches!(parse("a:9"), Err(Error::Semantic(_))));
        assert!(matches!(parse("perm:3;(0 5)"), Err(Error::Semantic(_))));
        assert!(matches!(parse("perm:3;(0 1)(1 2)"), Err(Error::Semantic(_))));
        assert!(matches!(parse("sd:2,0,5"), Err(Error::Semantic(_))));
        assert!(e.is_usage());
    }

    #[test]
    fn enumeration_cap_is_not_a_usage_error() {
        let opts = ParseOptions { cap: 10, ..ParseOptions::default() };
        let e = parse_group_spec("perm:5;(0 1 2 3 4),(0 1)", &opts).unwrap_err();
        assert_eq!(e, Error::TooLarge { cap: 10 });
        assert!(!e.is_usage());
    }

    #[test]
    fn identity_generator_renders_as_a_fixed_point() {
        let g = parse("perm:3;(1)").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(render_group_spec(&g), "perm:3;(0)");
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just((0..degree as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn arb_spec() -> impl Strategy<Value = String> {
        prop_oneof![
            (1u64..100_000).prop_map(|n| format!("c:{n}")),
            (1u64..100_000).prop_map(|m| format!("d:{m}")),
            (prop::sample::select(vec![2u64, 3, 5, 7, 11]), 1u32..6)
                .prop_map(|(p, r)| format!("ea:{p}^{r}")),
            (1u32..=8).prop_map(|n| format!("a:{n}")),
            (prop::sample::select(vec![2u64, 3, 5]), 1u32..5).prop_map(|(p, n)| format!("sd:{p},{n}")),
            prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 25, 27, 961, 65537, 1 << 20])
                .prop_map(|q| format!("psl2:{q}")),
            (1usize..7)
                .prop_flat_map(|d| (Just(d), prop::collection::vec(arb_perm(d), 1..4)))
                .prop_map(|(d, gens)| {
                    let mut out = format!("perm:{d};");
                    for (i, g) in gens.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        render_permutation(&mut out, g);
                    }
                    out
                }),
        ]
    }

    proptest! {
        #[test]
        fn parse_render_roundtrip(text in arb_spec()) {
            let g = parse(&text).unwrap();
            let rendered = render_group_spec(&g);
            let again = parse(&rendered).unwrap();
            prop_assert_eq!(&again, &g);
            prop_assert_eq!(render_group_spec(&again), rendered);
        }

        #[test]
        fn spaces_between_tokens_are_ignored(text in arb_spec()) {
            let spaced: String = text
                .chars()
                .map(|c| if "():,;^".contains(c) { format!(" {c} ") } else { c.to_string() })
                .collect();
            prop_assert_eq!(parse(&spaced).unwrap(), parse(&text).unwrap());
        }
    }
}
