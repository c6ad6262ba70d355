//! The line-oriented problem file.
//!
//! ```text
//! # cusp, double cover
//! vars: x, y
//! field: Q            # or: Fp 32003
//! order: ds
//! ideal: x^3 + y^4
//! g: x^3
//! range: 2..6
//! ```

use covercone::{FieldSpec, IdealBasis, MonomialOrdering, Polynomial, Ring, RingContext};

use crate::failure::{Failure, Kind};

#[derive(Clone, Debug, Default)]
struct Line {
    number: usize,
    /// Byte offset of the value within the raw line.
    offset: usize,
    value: String,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    pub field: FieldSpec,
    pub order: String,
    pub cover_var: Option<String>,
    pub range: Option<(u32, u32)>,
    ideal_lines: Vec<Line>,
    g_line: Option<Line>,
}

fn parse_error(line: usize, col: usize, msg: impl std::fmt::Display) -> Failure {
    Failure::new(Kind::Parse, format!("line {line}, column {col}: {msg}"))
}

fn single(slot: &mut Option<Line>, key: &str, line: Line) -> Result<(), Failure> {
    if slot.is_some() {
        return Err(parse_error(line.number, 1, format!("duplicate key '{key}'")));
    }
    *slot = Some(line);
    Ok(())
}

fn parse_field(l: &Line) -> Result<FieldSpec, Failure> {
    let v = l.value.as_str();
    if v == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = v
        .strip_prefix("Fp")
        .map(str::trim)
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| parse_error(l.number, l.offset + 1, "field must be 'Q' or 'Fp <prime>'"))?;
    FieldSpec::prime(p).map_err(|e| parse_error(l.number, l.offset + 1, e))
}

fn parse_range(l: &Line) -> Result<(u32, u32), Failure> {
    let bad = || parse_error(l.number, l.offset + 1, "range must be 'lo..hi' with 1 <= lo <= hi");
    let (lo, hi) = match l.value.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (l.value.as_str(), l.value.as_str()),
    };
    let lo: u32 = lo.parse().map_err(|_| bad())?;
    let hi: u32 = hi.parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let (mut vars, mut field, mut order, mut g, mut cover, mut range) =
            (None, None, None, None, None, None);
        let mut ideal_lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let number = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once(':') else {
                return Err(parse_error(number, 1, "expected 'key: value'"));
            };
            let lead = value.len() - value.trim_start().len();
            let line = Line {
                number,
                offset: key.len() + 1 + lead,
                value: value.trim().to_string(),
            };
            match key.trim() {
                "vars" => single(&mut vars, "vars", line)?,
                "field" => single(&mut field, "field", line)?,
                "order" => single(&mut order, "order", line)?,
                "ideal" => ideal_lines.push(line),
                "g" => single(&mut g, "g", line)?,
                "cover_var" => single(&mut cover, "cover_var", line)?,
                "range" => single(&mut range, "range", line)?,
                other => return Err(parse_error(number, 1, format!("unknown key '{other}'"))),
            }
        }
        let vars_line = vars.ok_or_else(|| Failure::new(Kind::Parse, "missing key 'vars'"))?;
        let var_list: Vec<String> = vars_line
            .value
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        let field = field.as_ref().map(parse_field).transpose()?.unwrap_or(FieldSpec::Rationals);
        let order = match &order {
            None => "ds".to_string(),
            Some(l) if l.value == "ds" => l.value.clone(),
            Some(l) => {
                return Err(parse_error(
                    l.number,
                    l.offset + 1,
                    format!("unsupported ordering '{}' (only ds)", l.value),
                ))
            }
        };
        let range = range.as_ref().map(parse_range).transpose()?;
        Ok(ProblemFile {
            vars: var_list,
            field,
            order,
            cover_var: cover.map(|l| l.value),
            range,
            ideal_lines,
            g_line: g,
        })
    }

    pub fn ring(&self) -> Result<Ring, Failure> {
        RingContext::new(&self.vars, MonomialOrdering::LocalDegRevLex, self.field)
            .map_err(|e| Failure::new(Kind::Parse, format!("vars: {e}")))
    }

    fn polynomial(ring: &Ring, line: &Line) -> Result<Polynomial, Failure> {
        covercone::parse_polynomial(&line.value, ring).map_err(|e| match e {
            covercone::Error::Parse { position, message } => {
                parse_error(line.number, line.offset + position + 1, message)
            }
            other => parse_error(line.number, line.offset + 1, other),
        })
    }

    pub fn ideal_basis(&self, ring: &Ring) -> Result<IdealBasis, Failure> {
        let mut gens = Vec::new();
        for l in &self.ideal_lines {
            let p = Self::polynomial(ring, l)?;
            if p.is_zero() {
                return Err(Failure::new(
                    Kind::Improper,
                    format!("line {}: zero generator", l.number),
                ));
            }
            gens.push(p);
        }
        IdealBasis::new(ring, gens).map_err(Failure::from)
    }

    pub fn branch(&self, ring: &Ring) -> Result<Polynomial, Failure> {
        let l = self
            .g_line
            .as_ref()
            .ok_or_else(|| Failure::new(Kind::Parse, "missing key 'g'"))?;
        Self::polynomial(ring, l)
    }

    #[cfg(test)]
    fn ideal_texts(&self) -> Vec<&str> {
        self.ideal_lines.iter().map(|l| l.value.as_str()).collect()
    }

    #[cfg(test)]
    fn g_text(&self) -> Option<&str> {
        self.g_line.as_ref().map(|l| l.value.as_str())
    }

    pub fn field_label(&self) -> String {
        self.field.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_file() {
        let p = ProblemFile::parse(
            "# comment\nvars: x, y\nfield: Fp 101\norder: ds\nideal: x^3 + y^4  # cusp\ng: x^3\ncover_var: w\nrange: 2..6\n",
        )
        .unwrap();
        assert_eq!(p.vars, ["x", "y"]);
        assert_eq!(p.field, FieldSpec::Prime(101));
        assert_eq!(p.ideal_texts(), ["x^3 + y^4"]);
        assert_eq!(p.g_text(), Some("x^3"));
        assert_eq!(p.cover_var.as_deref(), Some("w"));
        assert_eq!(p.range, Some((2, 6)));
    }

    #[test]
    fn defaults() {
        let p = ProblemFile::parse("vars: x y z\nideal: x*y\n").unwrap();
        assert_eq!(p.field, FieldSpec::Rationals);
        assert_eq!(p.order, "ds");
        assert_eq!(p.range, None);
        assert_eq!(p.vars.len(), 3);
    }

    #[test]
    fn ranges() {
        let r = |s: &str| ProblemFile::parse(&format!("vars: x\nrange: {s}\n")).map(|p| p.range);
        assert_eq!(r("3").unwrap(), Some((3, 3)));
        assert_eq!(r("1..=4").unwrap(), Some((1, 4)));
        assert!(r("0..2").is_err());
        assert!(r("5..2").is_err());
        assert!(r("a..b").is_err());
    }

    #[test]
    fn errors_have_positions() {
        let p = ProblemFile::parse("vars: x, y\nideal: x + q\n").unwrap();
        let ring = p.ring().unwrap();
        let e = p.ideal_basis(&ring).unwrap_err();
        assert_eq!(e.kind, Kind::Parse);
        assert!(e.message.starts_with("line 2, column 12"), "{}", e.message);

        for bad in ["vars x", "vars: x\nfoo: 1", "vars: x\nvars: y", "vars: x\norder: dp", "vars: x\nfield: Fp 9"] {
            assert_eq!(ProblemFile::parse(bad).unwrap_err().kind, Kind::Parse, "{bad}");
        }
        assert_eq!(ProblemFile::parse("ideal: x").unwrap_err().kind, Kind::Parse);
    }
}
