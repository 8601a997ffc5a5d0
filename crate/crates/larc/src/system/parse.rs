use super::BilinearSystem;
use crate::lie::{Algebra, BasisElement, Coeff, Family};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// A parse failure with its 1-based line number; line 0 marks file-level
/// problems (no group line at all).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("file contains no group line")]
    MissingGroupLine,
    #[error("first statement must be a group line")]
    GroupLineNotFirst,
    #[error("duplicate group line")]
    DuplicateGroupLine,
    #[error("unknown directive `{0}`; expected group, drift or control")]
    UnknownDirective(String),
    #[error("malformed line; expected `{0}`")]
    Malformed(&'static str),
    #[error("unknown group `{0}`; expected so, sl or gl")]
    UnknownGroup(String),
    #[error("invalid dimension `{0}`; need an integer n >= 2")]
    BadDimension(String),
    #[error("invalid index `{0}`; need an integer in 1..={1}")]
    BadIndex(String, usize),
    #[error("invalid coefficient `{0}`; expected p or p/q with nonzero q")]
    BadCoefficient(String),
    #[error("drift coefficient must be nonzero")]
    ZeroDriftCoefficient,
    #[error("unknown basis tag `{0}`; expected B, E or C")]
    UnknownTag(String),
    #[error("tag {tag} needs two distinct indices")]
    IndicesMustDiffer { tag: char },
    #[error("tag {tag} is not legal for {group}")]
    IllegalTag { tag: char, group: &'static str },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "line {}: {}", self.line, self.kind)
        }
    }
}

impl std::error::Error for ParseError {}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_rational(s: &str) -> Option<Coeff> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).ok()?;
    let d = BigInt::from_str(den).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Coeff::new(n, d))
}

fn parse_index(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v: usize = tok
        .parse()
        .map_err(|_| fail(line, ParseErrorKind::BadIndex(tok.into(), n)))?;
    if v < 1 || v > n {
        return Err(fail(line, ParseErrorKind::BadIndex(tok.into(), n)));
    }
    Ok(v)
}

/// Element from a tag + index pair, normalized so skew pairs store i < j.
/// Returns the element and the sign picked up by the normalization.
fn parse_element(
    algebra: Algebra,
    tag: &str,
    i: usize,
    j: usize,
    line: usize,
    as_control: bool,
) -> Result<(BasisElement, i8), ParseError> {
    let group = algebra.family().name();
    let elem = match tag {
        "B" => {
            if i == j {
                return Err(fail(line, ParseErrorKind::IndicesMustDiffer { tag: 'B' }));
            }
            if i < j {
                (BasisElement::skew(i, j), 1)
            } else {
                (BasisElement::skew(j, i), -1)
            }
        }
        "E" => (BasisElement::unit(i, j), 1),
        "C" => {
            if i == j {
                return Err(fail(line, ParseErrorKind::IndicesMustDiffer { tag: 'C' }));
            }
            (BasisElement::diag_diff(i, j), 1)
        }
        other => return Err(fail(line, ParseErrorKind::UnknownTag(other.into()))),
    };
    let legal = if as_control {
        algebra.check_control(elem.0)
    } else {
        algebra.check_element(elem.0)
    };
    if legal.is_err() {
        return Err(fail(
            line,
            ParseErrorKind::IllegalTag {
                tag: elem.0.tag(),
                group,
            },
        ));
    }
    Ok(elem)
}

pub(super) fn parse_system(src: &str) -> Result<BilinearSystem, ParseError> {
    let mut algebra: Option<Algebra> = None;
    let mut drift_terms: Vec<(BasisElement, Coeff)> = Vec::new();
    let mut controls: Vec<BasisElement> = Vec::new();

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "group" => {
                if algebra.is_some() {
                    return Err(fail(line, ParseErrorKind::DuplicateGroupLine));
                }
                if tokens.len() != 3 {
                    return Err(fail(
                        line,
                        ParseErrorKind::Malformed("group <so|sl|gl> <n>"),
                    ));
                }
                let family = match tokens[1] {
                    "so" => Family::So,
                    "sl" => Family::Sl,
                    "gl" => Family::Gl,
                    other => return Err(fail(line, ParseErrorKind::UnknownGroup(other.into()))),
                };
                let n: usize = tokens[2]
                    .parse()
                    .map_err(|_| fail(line, ParseErrorKind::BadDimension(tokens[2].into())))?;
                let alg = Algebra::new(family, n)
                    .map_err(|_| fail(line, ParseErrorKind::BadDimension(tokens[2].into())))?;
                algebra = Some(alg);
            }
            "drift" => {
                let alg = algebra.ok_or_else(|| fail(line, ParseErrorKind::GroupLineNotFirst))?;
                if tokens.len() != 5 {
                    return Err(fail(
                        line,
                        ParseErrorKind::Malformed("drift <B|E|C> <i> <j> <coeff>"),
                    ));
                }
                let i = parse_index(tokens[2], alg.n(), line)?;
                let j = parse_index(tokens[3], alg.n(), line)?;
                let coeff = parse_rational(tokens[4])
                    .ok_or_else(|| fail(line, ParseErrorKind::BadCoefficient(tokens[4].into())))?;
                if coeff.is_zero() {
                    return Err(fail(line, ParseErrorKind::ZeroDriftCoefficient));
                }
                let (elem, sign) = parse_element(alg, tokens[1], i, j, line, false)?;
                let signed = if sign < 0 { -coeff } else { coeff };
                drift_terms.push((elem, signed));
            }
            "control" => {
                let alg = algebra.ok_or_else(|| fail(line, ParseErrorKind::GroupLineNotFirst))?;
                if tokens.len() != 4 {
                    return Err(fail(
                        line,
                        ParseErrorKind::Malformed("control <B|E|C> <i> <j>"),
                    ));
                }
                let i = parse_index(tokens[2], alg.n(), line)?;
                let j = parse_index(tokens[3], alg.n(), line)?;
                let (elem, _) = parse_element(alg, tokens[1], i, j, line, true)?;
                controls.push(elem);
            }
            other => return Err(fail(line, ParseErrorKind::UnknownDirective(other.into()))),
        }
    }

    let algebra = algebra.ok_or_else(|| fail(0, ParseErrorKind::MissingGroupLine))?;
    let drift = crate::lie::LieVector::from_terms(algebra, drift_terms)
        .expect("drift terms were validated per line");
    Ok(BilinearSystem::new(algebra, drift, controls).expect("controls were validated per line"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parses_a_full_so_system_with_comments() {
        let src = "# demo\n\ngroup so 6\ndrift B 1 2 1\ndrift B 1 3 2   # inline comment\ndrift B 1 4 -3\ncontrol B 1 3\ncontrol B 2 4\n";
        let sys = BilinearSystem::parse(src).unwrap();
        assert_eq!(sys.algebra(), Algebra::so(6));
        assert_eq!(sys.controls().len(), 2);
        assert_eq!(sys.drift().term_count(), 3);
    }

    #[test]
    fn reversed_skew_pair_flips_the_drift_sign_and_normalizes_controls() {
        let sys = BilinearSystem::parse("group so 4\ndrift B 2 1 3\ncontrol B 3 1\n").unwrap();
        let b12 = BasisElement::skew(1, 2);
        assert_eq!(sys.drift().coefficient(b12), -parse_rational("3").unwrap());
        assert_eq!(sys.controls(), &[BasisElement::skew(1, 3)]);
    }

    #[test]
    fn repeated_drift_lines_accumulate() {
        let sys = BilinearSystem::parse("group so 4\ndrift B 1 2 1/2\ndrift B 1 2 1/2\n").unwrap();
        assert!(sys.drift().coefficient(BasisElement::skew(1, 2)).is_one());
        // Accumulation may cancel to zero; the vector normal form drops it.
        let sys2 = BilinearSystem::parse("group so 4\ndrift B 1 2 1\ndrift B 2 1 1\n").unwrap();
        assert!(sys2.is_driftless());
    }

    #[test]
    fn rational_coefficients_parse_in_all_forms() {
        let sys = BilinearSystem::parse("group gl 3\ndrift E 1 2 -5/3\ndrift E 2 2 7\n").unwrap();
        assert_eq!(
            sys.drift().coefficient(BasisElement::unit(1, 2)),
            parse_rational("-5/3").unwrap()
        );
        assert_eq!(sys.drift().trace(), parse_rational("7").unwrap());
    }

    fn expect_err(src: &str, line: usize) -> ParseErrorKind {
        let err = BilinearSystem::parse(src).unwrap_err();
        assert_eq!(err.line, line, "wrong line in {err}");
        err.kind
    }

    #[test]
    fn error_lines_and_kinds() {
        assert!(matches!(
            expect_err("", 0),
            ParseErrorKind::MissingGroupLine
        ));
        assert!(matches!(
            expect_err("drift B 1 2 1\n", 1),
            ParseErrorKind::GroupLineNotFirst
        ));
        assert!(matches!(
            expect_err("group so 4\ngroup so 4\n", 2),
            ParseErrorKind::DuplicateGroupLine
        ));
        assert!(matches!(
            expect_err("group xx 4\n", 1),
            ParseErrorKind::UnknownGroup(_)
        ));
        assert!(matches!(
            expect_err("group so 1\n", 1),
            ParseErrorKind::BadDimension(_)
        ));
        assert!(matches!(
            expect_err("group so 4\nwobble 1 2\n", 2),
            ParseErrorKind::UnknownDirective(_)
        ));
        assert!(matches!(
            expect_err("group so 4\ndrift B 1 5 1\n", 2),
            ParseErrorKind::BadIndex(_, 4)
        ));
        assert!(matches!(
            expect_err("group so 4\ndrift B 1 2 1/0\n", 2),
            ParseErrorKind::BadCoefficient(_)
        ));
        assert!(matches!(
            expect_err("group so 4\ndrift B 1 2 0\n", 2),
            ParseErrorKind::ZeroDriftCoefficient
        ));
        assert!(matches!(
            expect_err("group so 4\ndrift B 1 1 1\n", 2),
            ParseErrorKind::IndicesMustDiffer { .. }
        ));
        assert!(matches!(
            expect_err("group so 4\ndrift E 1 2 1\n", 2),
            ParseErrorKind::IllegalTag { .. }
        ));
        assert!(matches!(
            expect_err("group sl 4\ndrift E 2 2 1\n", 2),
            ParseErrorKind::IllegalTag { .. }
        ));
        assert!(matches!(
            expect_err("group gl 4\ncontrol C 1 2\n", 2),
            ParseErrorKind::IllegalTag { .. }
        ));
        assert!(matches!(
            expect_err("group gl 4\ncontrol E 1\n", 2),
            ParseErrorKind::Malformed(_)
        ));
        assert!(matches!(
            expect_err("group so 4\ndrift B 1 2 x\n", 2),
            ParseErrorKind::BadCoefficient(_)
        ));
    }

    #[test]
    fn sl_diagonal_units_are_rejected_but_c_lines_work() {
        let sys = BilinearSystem::parse("group sl 3\ndrift C 1 3 2\ncontrol C 2 3\n").unwrap();
        assert_eq!(
            sys.drift().coefficient(BasisElement::unit(1, 1)),
            parse_rational("2").unwrap()
        );
        assert_eq!(
            sys.drift().coefficient(BasisElement::unit(3, 3)),
            parse_rational("-2").unwrap()
        );
        assert!(sys.drift().trace().is_zero());
        assert_eq!(sys.controls(), &[BasisElement::diag_diff(2, 3)]);
    }
}
