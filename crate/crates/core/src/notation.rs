//! Text notation shared by the library and the command-line tool:
//! compositions as `[2,3,2,1]`, elements as linear combinations like
//! `3 h[3] - 2 h[1,2] + 1/2 h[1,1,1]`.

use std::fmt;

use num::{One, Signed, Zero};

use crate::compositions::Composition;
use crate::rational::{format_rat, Rat};
use crate::{Error, Result};

/// Format element terms in canonical order: coefficients as `p/q`, unit
/// magnitudes omitted, indices rendered as bracketed part lists.
pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    tag: &str,
    terms: &[(Composition, Rat)],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (index, coeff)) in terms.iter().enumerate() {
        let negative = coeff.is_negative();
        let magnitude = if negative { -coeff.clone() } else { coeff.clone() };
        if i == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if !magnitude.is_one() {
            write!(f, "{} ", format_rat(&magnitude))?;
        }
        write!(f, "{tag}{index}")?;
    }
    Ok(())
}

/// Parse a composition written as `[2,3,1]`, `2,3,1`, or `[]`.
pub fn parse_composition(text: &str) -> Result<Composition> {
    let inner = text.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(inner)
        .trim();
    if inner.is_empty() {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::new();
    for piece in inner.split(',') {
        let piece = piece.trim();
        let value: u32 = piece.parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("expected a positive integer part, found {piece:?}"),
        })?;
        parts.push(value);
    }
    Composition::new(parts)
}

/// One parsed term of a linear combination: coefficient, basis tag, and
/// index composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedTerm {
    pub coeff: Rat,
    pub tag: String,
    pub index: Composition,
}

/// Parse a linear combination in the element notation. `tags` lists the
/// recognized basis tags; longer tags match first so that `For[..]` is
/// not read as `F` followed by garbage.
pub fn parse_linear_combination(text: &str, tags: &[&str]) -> Result<Vec<ParsedTerm>> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut terms = Vec::new();
    let mut sorted_tags: Vec<&str> = tags.to_vec();
    sorted_tags.sort_by_key(|t| std::cmp::Reverse(t.len()));

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::Parse {
            pos,
            msg: "empty expression".into(),
        });
    }
    let mut first = true;
    while pos < bytes.len() {
        // Sign (required between terms, optional on the first).
        let mut sign = Rat::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(Error::Parse {
                pos,
                msg: "expected '+' or '-' between terms".into(),
            });
        }
        first = false;

        // Optional rational coefficient.
        let coeff_start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coeff = if pos > coeff_start {
            let c = crate::rational::parse_rat(&text[coeff_start..pos]).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse {
                    pos: coeff_start,
                    msg,
                },
                other => other,
            })?;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                skip_ws(&mut pos);
            }
            c
        } else {
            Rat::one()
        };

        // Basis tag.
        let rest = &text[pos..];
        let tag = sorted_tags
            .iter()
            .find(|t| rest.starts_with(**t) && rest[t.len()..].trim_start().starts_with('['))
            .ok_or_else(|| Error::Parse {
                pos,
                msg: format!("expected a basis tag from {tags:?}"),
            })?
            .to_string();
        pos += tag.len();
        skip_ws(&mut pos);

        // Bracketed index.
        if pos >= bytes.len() || bytes[pos] != b'[' {
            return Err(Error::Parse {
                pos,
                msg: "expected '[' after the basis tag".into(),
            });
        }
        let close = text[pos..].find(']').ok_or(Error::Parse {
            pos,
            msg: "unclosed '['".into(),
        })? + pos;
        let index = parse_composition(&text[pos..=close])?;
        pos = close + 1;
        skip_ws(&mut pos);

        terms.push(ParsedTerm {
            coeff: sign * coeff,
            tag,
            index,
        });
    }
    Ok(terms)
}

/// Fold parsed terms into a degree-checked coefficient list. All indexed
/// terms must share one degree; the shared degree and the per-tag terms
/// are returned.
pub fn collect_terms(terms: Vec<ParsedTerm>) -> Result<(u32, Vec<ParsedTerm>)> {
    let degree = terms
        .first()
        .map(|t| t.index.size())
        .ok_or(Error::Parse {
            pos: 0,
            msg: "empty expression".into(),
        })?;
    for t in &terms {
        if t.index.size() != degree {
            return Err(Error::SizeMismatch {
                left: t.index.size(),
                right: degree,
            });
        }
    }
    let terms = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
    Ok((degree, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn compositions_parse_both_ways() {
        assert_eq!(
            parse_composition("[2,3,1]").unwrap().parts(),
            &[2, 3, 1]
        );
        assert_eq!(parse_composition("2, 3, 1").unwrap().parts(), &[2, 3, 1]);
        assert_eq!(parse_composition("[]").unwrap(), Composition::empty());
        assert!(parse_composition("[2,0]").is_err());
        assert!(parse_composition("[2,x]").is_err());
    }

    #[test]
    fn linear_combination_grammar() {
        let terms =
            parse_linear_combination("3 h[3] - 2h[1,2] + 1/2 * h[1,1,1]", &["r", "h", "e"]).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].coeff, rat(3));
        assert_eq!(terms[1].coeff, rat(-2));
        assert_eq!(terms[1].index.parts(), &[1, 2]);
        assert_eq!(terms[2].coeff, ratio(1, 2));
        // Maximal munch: For is not F.
        let terms = parse_linear_combination("For[2] - F[1,1]", &["M", "F", "For"]).unwrap();
        assert_eq!(terms[0].tag, "For");
        assert_eq!(terms[1].tag, "F");
        // Leading minus and bare tags.
        let terms = parse_linear_combination("-psi[3]", &["psi", "phi"]).unwrap();
        assert_eq!(terms[0].coeff, rat(-1));
        assert!(parse_linear_combination("", &["r"]).is_err());
        assert!(parse_linear_combination("q[2]", &["r"]).is_err());
        assert!(parse_linear_combination("r[2] r[3]", &["r"]).is_err());
    }

    #[test]
    fn degree_check() {
        let terms = parse_linear_combination("r[2] + r[1,1]", &["r"]).unwrap();
        assert_eq!(collect_terms(terms).unwrap().0, 2);
        let terms = parse_linear_combination("r[2] + r[1,1,1]", &["r"]).unwrap();
        assert!(collect_terms(terms).is_err());
    }
}
