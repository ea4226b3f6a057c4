//! Text formats: polynomials and ideal files.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := uint | var ('^' uint)?
//! ```
//!
//! Over `F₂` a minus sign is the same as a plus sign, and integer literals
//! are reduced mod 2.
//!
//! An ideal file starts with `ring: name:deg, ...`, may set
//! `order: weighted | dp`, then lists one generator per line. Lines of the
//! form `label: poly` attach named polynomials instead. `#` starts a comment.

use std::collections::BTreeMap;

use super::poly::BinaryPoly;
use super::ring::{GradedRing, Monomial, MonomialOrder};
use crate::error::{Error, Result};

struct Parser<'a> {
    ring: &'a GradedRing,
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.base + self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<(u64, bool)> {
        let start = self.pos;
        let mut value: u64 = 0;
        let mut overflow = false;
        while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            match value.checked_mul(10).and_then(|v| v.checked_add((c - b'0') as u64)) {
                Some(v) => value = v,
                None => overflow = true,
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let odd = self.src[self.pos - 1] % 2 == 1;
        if overflow {
            // only the parity of a huge coefficient matters
            return Ok((u64::MAX, odd));
        }
        Ok((value, odd))
    }

    /// A factor contributes a monomial, or `None` for an even coefficient.
    fn factor(&mut self) -> Result<Option<Monomial>> {
        let n = self.ring.nvars();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let (_, odd) = self.uint()?;
                Ok(odd.then(|| Monomial::one(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self.ring.index_of(name).map_err(|_| {
                    Error::Parse {
                        pos: self.base + start,
                        msg: format!("unknown variable `{name}`"),
                    }
                })?;
                let mut e = 1u64;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let (v, _) = self.uint()?;
                    e = v;
                }
                if e > u16::MAX as u64 {
                    return Err(self.err("exponent too large"));
                }
                let mut m = Monomial::one(n);
                m.0[i] = e as u16;
                Ok(Some(m))
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<Option<Monomial>> {
        let mut m = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            m = match (m, f) {
                (Some(a), Some(b)) => Some(a.mul(&b)),
                _ => None,
            };
        }
        Ok(m)
    }

    fn poly(&mut self) -> Result<BinaryPoly> {
        let mut terms = Vec::new();
        if matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
        }
        terms.extend(self.term()?);
        while let Some(c) = self.peek() {
            if c != b'+' && c != b'-' {
                return Err(self.err(format!("expected `+`, found `{}`", c as char)));
            }
            self.pos += 1;
            terms.extend(self.term()?);
        }
        Ok(BinaryPoly::from_monomials(self.ring, terms))
    }
}

pub fn parse_polynomial(ring: &GradedRing, text: &str) -> Result<BinaryPoly> {
    parse_at(ring, text, 0)
}

fn parse_at(ring: &GradedRing, text: &str, base: usize) -> Result<BinaryPoly> {
    Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
        base,
    }
    .poly()
}

/// Parse `name:deg, name:deg, ...`.
pub fn parse_ring(spec: &str) -> Result<GradedRing> {
    let mut vars = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        let (name, deg) = item.split_once(':').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected name:degree, found `{item}`"),
        })?;
        let deg: u32 = deg.trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad degree in `{item}`"),
        })?;
        vars.push((name.trim().to_string(), deg));
    }
    GradedRing::new(vars)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub ring: GradedRing,
    pub generators: Vec<BinaryPoly>,
    /// Named polynomials such as `k`, `sq1k` or `d5`.
    pub labeled: BTreeMap<String, BinaryPoly>,
}

impl IdealFile {
    pub fn get(&self, label: &str) -> Option<&BinaryPoly> {
        self.labeled.get(label)
    }

    pub fn render(&self) -> String {
        let mut out = format!("ring: {}\n", self.ring);
        if self.ring.order() == MonomialOrder::StandardGrevlex {
            out.push_str("order: dp\n");
        }
        for g in &self.generators {
            out.push_str(&g.render(&self.ring));
            out.push('\n');
        }
        for (label, p) in &self.labeled {
            out.push_str(&format!("{label}: {}\n", p.render(&self.ring)));
        }
        out
    }
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut ring: Option<GradedRing> = None;
    let mut generators = Vec::new();
    let mut labeled = BTreeMap::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let base = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = base + (line.len() - line.trim_start().len());
        let at = |msg: String| Error::Parse { pos: lead, msg };
        match (&ring, trimmed.split_once(':')) {
            (None, Some((key, spec))) if key.trim() == "ring" => {
                ring = Some(parse_ring(spec).map_err(|e| at(e.to_string()))?);
            }
            (None, _) => return Err(at("file must start with a `ring:` line".into())),
            (Some(r), Some((key, value))) if key.trim() == "order" => {
                let order = match value.trim() {
                    "dp" => MonomialOrder::StandardGrevlex,
                    "weighted" | "wdp" => MonomialOrder::WeightedGrevlex,
                    o => return Err(at(format!("unknown order `{o}`"))),
                };
                if !generators.is_empty() || !labeled.is_empty() {
                    return Err(at("`order:` must precede the polynomials".into()));
                }
                ring = Some(r.clone().with_order(order));
            }
            (Some(r), Some((key, value))) => {
                let value_base = lead + key.len() + 1;
                let p = parse_at(r, value, value_base)?;
                if labeled.insert(key.trim().to_string(), p).is_some() {
                    return Err(at(format!("label `{}` given twice", key.trim())));
                }
            }
            (Some(r), None) => {
                let start = lead - base;
                generators.push(parse_at(r, &line[start..], lead)?);
            }
        }
    }
    let ring = ring.ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "missing `ring:` line".into(),
    })?;
    Ok(IdealFile {
        ring,
        generators,
        labeled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> GradedRing {
        parse_ring("y1:1, y2:1, y3:1, b1:2, b2:2, z:2").unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = ring();
        assert_eq!(parse_polynomial(&r, "y1*y2 + y3^2").unwrap().len(), 2);
        let k = parse_polynomial(&r, "z + b1 + y1^2 + b2 + y2^2").unwrap();
        assert_eq!(k.len(), 5);
        assert!(k.is_homogeneous(&r));
        assert!(parse_polynomial(&r, "y1 + y1").unwrap().is_zero());
        assert_eq!(
            parse_polynomial(&r, "b1^2 - y1^2*z").unwrap(),
            parse_polynomial(&r, "b1^2 + y1^2*z").unwrap()
        );
        assert_eq!(parse_polynomial(&r, "2*y1 + 3*y2").unwrap(), parse_polynomial(&r, "y2").unwrap());
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        assert!(parse_polynomial(&r, " 1 ").unwrap().is_one());
    }

    #[test]
    fn parse_errors_report_position() {
        let r = ring();
        assert_eq!(
            parse_polynomial(&r, "y1 + q7").unwrap_err(),
            Error::Parse {
                pos: 5,
                msg: "unknown variable `q7`".into()
            }
        );
        assert!(matches!(parse_polynomial(&r, "y1 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_polynomial(&r, "y1 y2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_polynomial(&r, "y1^"), Err(Error::Parse { .. })));
        assert!(parse_polynomial(&r, "").is_err());
    }

    #[test]
    fn ideal_file() {
        let text = "# comment\nring: x:1, z:2\n\nx^2   # trailing\nx*z\nk: z + x^2\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.ring.nvars(), 2);
        assert_eq!(f.generators.len(), 2);
        assert_eq!(f.get("k").unwrap().render(&f.ring), "x^2 + z");
        let again = parse_ideal_file(&f.render()).unwrap();
        assert_eq!(again, f);

        assert!(parse_ideal_file("x^2\n").is_err());
        let e = parse_ideal_file("ring: x:1\nx + w\n").unwrap_err();
        assert_eq!(e, Error::Parse { pos: 14, msg: "unknown variable `w`".into() });
        let dp = parse_ideal_file("ring: x:1, z:2\norder: dp\nx*z\n").unwrap();
        assert_eq!(dp.ring.order(), MonomialOrder::StandardGrevlex);
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in prop::collection::vec(prop::collection::vec(0u16..4, 6), 0..8)) {
            let r = ring();
            let p = BinaryPoly::from_monomials(&r, terms.into_iter().map(Monomial).collect());
            prop_assert_eq!(parse_polynomial(&r, &p.render(&r)).unwrap(), p);
        }
    }
}
