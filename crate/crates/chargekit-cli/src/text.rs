//! The normative text grammars: charge files, set expressions, extended-set
//! expressions and yan model files. Rationals are always written `p/q`.

use chargekit::{
    CanonicalSet, Charge, ExtendedSet, Mode, Part, Primitive, Rational, YanModel,
};
use num::BigInt;

/// Parse failures split into grammar errors (exit 2) and range/semantic
/// errors (exit 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TextErrorKind {
    Parse,
    Range,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextError {
    pub kind: TextErrorKind,
    pub line: usize,
    pub message: String,
}

impl TextError {
    fn parse(line: usize, message: impl Into<String>) -> Self {
        TextError { kind: TextErrorKind::Parse, line, message: message.into() }
    }

    fn range(line: usize, message: impl Into<String>) -> Self {
        TextError { kind: TextErrorKind::Range, line, message: message.into() }
    }
}

impl std::fmt::Display for TextError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            TextErrorKind::Parse => "parse error",
            TextErrorKind::Range => "range error",
        };
        write!(f, "{} at line {}: {}", kind, self.line, self.message)
    }
}

/// `p/q` with an optional sign; a bare integer is accepted as `p/1`.
pub fn parse_rational(token: &str) -> Result<Rational, String> {
    let (numer, denom) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| format!("bad numerator in {token:?}"))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|_| format!("bad denominator in {token:?}"))?;
    if denom == BigInt::from(0) {
        return Err(format!("zero denominator in {token:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Always `p/q`, never a decimal and never a bare integer.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

struct Lines<'a> {
    rows: Vec<(usize, Vec<&'a str>)>,
}

fn tokenize(text: &str) -> Lines<'_> {
    let rows = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect();
    Lines { rows }
}

/// Charge file: a `charge` header line followed by `point x coeff w`,
/// `density a b coeff w` and `leftlim c coeff w` directives.
pub fn parse_charge(text: &str) -> Result<Charge, TextError> {
    let lines = tokenize(text);
    let mut rows = lines.rows.iter();
    match rows.next() {
        Some((_, tokens)) if tokens == &["charge"] => {}
        Some((n, tokens)) => {
            return Err(TextError::parse(*n, format!("expected `charge` header, found {tokens:?}")))
        }
        None => return Err(TextError::parse(1, "empty charge file")),
    }
    let mut terms: Vec<(Primitive, Rational)> = Vec::new();
    for (n, tokens) in rows {
        let n = *n;
        let rat_at = |tok: &str| parse_rational(tok).map_err(|m| TextError::parse(n, m));
        match tokens.as_slice() {
            ["point", x, "coeff", w] => {
                let prim = Primitive::point(rat_at(x)?)
                    .map_err(|e| TextError::range(n, e.to_string()))?;
                terms.push((prim, rat_at(w)?));
            }
            ["density", a, b, "coeff", w] => {
                let prim = Primitive::density(rat_at(a)?, rat_at(b)?)
                    .map_err(|e| TextError::range(n, e.to_string()))?;
                terms.push((prim, rat_at(w)?));
            }
            ["leftlim", c, "coeff", w] => {
                let prim = Primitive::left_limit(rat_at(c)?)
                    .map_err(|e| TextError::range(n, e.to_string()))?;
                terms.push((prim, rat_at(w)?));
            }
            other => {
                return Err(TextError::parse(n, format!("unrecognized directive {other:?}")))
            }
        }
    }
    Ok(Charge::from_terms(terms))
}

pub fn format_charge(charge: &Charge) -> String {
    let mut out = String::from("charge\n");
    for (p, w) in charge.terms() {
        match p {
            Primitive::PointMass(x) => {
                out.push_str(&format!("point {} coeff {}\n", fraction(x), fraction(w)))
            }
            Primitive::Density(a, b) => out.push_str(&format!(
                "density {} {} coeff {}\n",
                fraction(a),
                fraction(b),
                fraction(w)
            )),
            Primitive::LeftLimit(c) => {
                out.push_str(&format!("leftlim {} coeff {}\n", fraction(c), fraction(w)))
            }
        }
    }
    out
}

/// One-line rendering used in report bodies and machine blocks.
pub fn charge_inline(charge: &Charge) -> String {
    if charge.is_zero() {
        return "zero".into();
    }
    charge
        .terms()
        .map(|(p, w)| match p {
            Primitive::PointMass(x) => format!("point {} coeff {}", fraction(x), fraction(w)),
            Primitive::Density(a, b) => {
                format!("density {} {} coeff {}", fraction(a), fraction(b), fraction(w))
            }
            Primitive::LeftLimit(c) => format!("leftlim {} coeff {}", fraction(c), fraction(w)),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Set expression: `[a,b)+[c,d)+...` or `empty`.
pub fn parse_set_expr(expr: &str) -> Result<CanonicalSet, TextError> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "empty" {
        return Ok(CanonicalSet::empty());
    }
    let mut pairs = Vec::new();
    for item in compact.split('+') {
        let inner = item
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| {
                TextError::parse(1, format!("expected `[a,b)` item, found {item:?}"))
            })?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| TextError::parse(1, format!("missing comma in {item:?}")))?;
        let a = parse_rational(a).map_err(|m| TextError::parse(1, m))?;
        let b = parse_rational(b).map_err(|m| TextError::parse(1, m))?;
        pairs.push((a, b));
    }
    CanonicalSet::canonicalize(&pairs).map_err(|e| TextError::range(1, e.to_string()))
}

pub fn format_set(set: &CanonicalSet) -> String {
    if set.is_empty() {
        return "empty".into();
    }
    set.intervals()
        .iter()
        .map(|iv| format!("[{},{})", fraction(&iv.lo), fraction(&iv.hi)))
        .collect::<Vec<_>>()
        .join("+")
}

/// Extended-set expression: items `[a,b]`, `[a,b)`, `(a,b]`, `(a,b)`, `{x}`
/// joined by `+`, or `empty`.
pub fn parse_extended_set_expr(expr: &str) -> Result<ExtendedSet, TextError> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "empty" {
        return Ok(ExtendedSet::empty());
    }
    let mut parts = Vec::new();
    for item in compact.split('+') {
        if let Some(inner) = item.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let x = parse_rational(inner).map_err(|m| TextError::parse(1, m))?;
            parts.push(Part::Point(x));
            continue;
        }
        let mut chars = item.chars();
        let open = chars.next();
        let close = chars.next_back();
        let lo_closed = match open {
            Some('[') => true,
            Some('(') => false,
            _ => {
                return Err(TextError::parse(1, format!("bad interval opener in {item:?}")));
            }
        };
        let hi_closed = match close {
            Some(']') => true,
            Some(')') => false,
            _ => {
                return Err(TextError::parse(1, format!("bad interval closer in {item:?}")));
            }
        };
        let inner: String = chars.collect();
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| TextError::parse(1, format!("missing comma in {item:?}")))?;
        let lo = parse_rational(a).map_err(|m| TextError::parse(1, m))?;
        let hi = parse_rational(b).map_err(|m| TextError::parse(1, m))?;
        parts.push(Part::Interval { lo, lo_closed, hi, hi_closed });
    }
    ExtendedSet::new(parts).map_err(|e| TextError::range(1, e.to_string()))
}

pub fn format_extended_set(set: &ExtendedSet) -> String {
    if set.is_empty() {
        return "empty".into();
    }
    set.parts()
        .iter()
        .map(|p| match p {
            Part::Point(x) => format!("{{{}}}", fraction(x)),
            Part::Interval { lo, lo_closed, hi, hi_closed } => format!(
                "{}{},{}{}",
                if *lo_closed { '[' } else { '(' },
                fraction(lo),
                fraction(hi),
                if *hi_closed { ']' } else { ')' }
            ),
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// Yan model file: `yan` header, `space n`, `lambda r...`, `mode cone|hull`
/// and one `gen r...` line per generator.
pub fn parse_yan_model(text: &str) -> Result<YanModel, TextError> {
    let lines = tokenize(text);
    let mut rows = lines.rows.iter();
    match rows.next() {
        Some((_, tokens)) if tokens == &["yan"] => {}
        Some((n, tokens)) => {
            return Err(TextError::parse(*n, format!("expected `yan` header, found {tokens:?}")))
        }
        None => return Err(TextError::parse(1, "empty yan file")),
    }
    let mut space: Option<usize> = None;
    let mut lambda: Option<Vec<Rational>> = None;
    let mut mode: Option<Mode> = None;
    let mut generators: Vec<Vec<Rational>> = Vec::new();
    let mut last_line = 1;
    for (n, tokens) in rows {
        let n = *n;
        last_line = n;
        let parse_vector = |tokens: &[&str]| -> Result<Vec<Rational>, TextError> {
            let want = space
                .ok_or_else(|| TextError::parse(n, "`space n` must come first"))?;
            if tokens.len() != want {
                return Err(TextError::parse(
                    n,
                    format!("expected {want} entries, found {}", tokens.len()),
                ));
            }
            tokens
                .iter()
                .map(|t| parse_rational(t).map_err(|m| TextError::parse(n, m)))
                .collect()
        };
        match tokens.as_slice() {
            ["space", count] => {
                if space.is_some() {
                    return Err(TextError::parse(n, "duplicate `space` directive"));
                }
                let count: usize = count
                    .parse()
                    .map_err(|_| TextError::parse(n, format!("bad space size {count:?}")))?;
                space = Some(count);
            }
            ["mode", value] => {
                if mode.is_some() {
                    return Err(TextError::parse(n, "duplicate `mode` directive"));
                }
                mode = Some(match *value {
                    "cone" => Mode::Cone,
                    "hull" => Mode::Hull,
                    other => {
                        return Err(TextError::parse(n, format!("unknown mode {other:?}")))
                    }
                });
            }
            ["lambda", rest @ ..] => {
                if lambda.is_some() {
                    return Err(TextError::parse(n, "duplicate `lambda` directive"));
                }
                lambda = Some(parse_vector(rest)?);
            }
            ["gen", rest @ ..] => generators.push(parse_vector(rest)?),
            other => {
                return Err(TextError::parse(n, format!("unrecognized directive {other:?}")))
            }
        }
    }
    let lambda =
        lambda.ok_or_else(|| TextError::parse(last_line, "missing `lambda` directive"))?;
    let mode = mode.ok_or_else(|| TextError::parse(last_line, "missing `mode` directive"))?;
    YanModel::new(lambda, generators, mode).map_err(|e| TextError::range(last_line, e.to_string()))
}

pub fn format_vector(v: &[Rational]) -> String {
    v.iter().map(fraction).collect::<Vec<_>>().join(" ")
}
