//! A small canonical JSON document model: objects keep insertion order,
//! floats print with 17 significant digits in C `%.17g` style, and parsing
//! an emitted document back re-serializes byte-identically.

use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Doc {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Doc>),
    Obj(Vec<(String, Doc)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub at: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JSON parse error at byte {}: {}", self.at, self.message)
    }
}

impl std::error::Error for ParseError {}

/// C-style `%.17g` for finite doubles: 17 significant digits, fixed or
/// scientific notation by the exponent window, trailing zeros stripped.
/// 17 digits round-trip every f64, so re-parsing and re-formatting is stable.
pub fn fmt_g17(v: f64) -> String {
    assert!(v.is_finite(), "non-finite values do not appear in reports");
    if v == 0.0 {
        return "0".to_string();
    }
    let neg = v < 0.0;
    let s = format!("{:.16e}", v.abs()); // d.dddddddddddddddde<exp>
    let (mantissa, exp_str) = s.split_once('e').expect("{:e} always carries an exponent");
    let exp: i32 = exp_str.parse().expect("exponent is an integer");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    debug_assert_eq!(digits.len(), 17);
    let body = if exp < -4 || exp >= 17 {
        let frac = digits[1..].trim_end_matches('0');
        let mant = if frac.is_empty() {
            digits[..1].to_string()
        } else {
            format!("{}.{}", &digits[..1], frac)
        };
        format!("{}e{}{:02}", mant, if exp < 0 { '-' } else { '+' }, exp.abs())
    } else if exp >= 0 {
        let point = exp as usize + 1;
        let int_part = &digits[..point];
        let frac = digits[point..].trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        let frac = format!("{zeros}{digits}");
        let frac = frac.trim_end_matches('0');
        format!("0.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn escape_into(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

impl Doc {
    pub fn emit(&self) -> String {
        let mut out = String::new();
        self.emit_into(&mut out);
        out
    }

    fn emit_into(&self, out: &mut String) {
        match self {
            Doc::Null => out.push_str("null"),
            Doc::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Doc::Int(i) => out.push_str(&i.to_string()),
            Doc::Num(v) => out.push_str(&fmt_g17(*v)),
            Doc::Str(s) => escape_into(out, s),
            Doc::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.emit_into(out);
                }
                out.push(']');
            }
            Doc::Obj(fields) => {
                out.push('{');
                for (i, (k, v)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    escape_into(out, k);
                    out.push(':');
                    v.emit_into(out);
                }
                out.push('}');
            }
        }
    }

    pub fn parse(text: &str) -> Result<Doc, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let doc = parse_value(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(ParseError {
                at: pos,
                message: "trailing content",
            });
        }
        Ok(doc)
    }
}

fn skip_ws(b: &[u8], pos: &mut usize) {
    while *pos < b.len() && matches!(b[*pos], b' ' | b'\t' | b'\n' | b'\r') {
        *pos += 1;
    }
}

fn expect(b: &[u8], pos: &mut usize, lit: &str) -> Result<(), ParseError> {
    if b[*pos..].starts_with(lit.as_bytes()) {
        *pos += lit.len();
        Ok(())
    } else {
        Err(ParseError {
            at: *pos,
            message: "unexpected token",
        })
    }
}

fn parse_value(b: &[u8], pos: &mut usize) -> Result<Doc, ParseError> {
    skip_ws(b, pos);
    if *pos >= b.len() {
        return Err(ParseError {
            at: *pos,
            message: "unexpected end of input",
        });
    }
    match b[*pos] {
        b'n' => expect(b, pos, "null").map(|_| Doc::Null),
        b't' => expect(b, pos, "true").map(|_| Doc::Bool(true)),
        b'f' => expect(b, pos, "false").map(|_| Doc::Bool(false)),
        b'"' => parse_string(b, pos).map(Doc::Str),
        b'[' => {
            *pos += 1;
            let mut items = Vec::new();
            skip_ws(b, pos);
            if *pos < b.len() && b[*pos] == b']' {
                *pos += 1;
                return Ok(Doc::Arr(items));
            }
            loop {
                items.push(parse_value(b, pos)?);
                skip_ws(b, pos);
                match b.get(*pos) {
                    Some(b',') => *pos += 1,
                    Some(b']') => {
                        *pos += 1;
                        return Ok(Doc::Arr(items));
                    }
                    _ => {
                        return Err(ParseError {
                            at: *pos,
                            message: "expected ',' or ']'",
                        })
                    }
                }
            }
        }
        b'{' => {
            *pos += 1;
            let mut fields = Vec::new();
            skip_ws(b, pos);
            if *pos < b.len() && b[*pos] == b'}' {
                *pos += 1;
                return Ok(Doc::Obj(fields));
            }
            loop {
                skip_ws(b, pos);
                let key = parse_string(b, pos)?;
                skip_ws(b, pos);
                if b.get(*pos) != Some(&b':') {
                    return Err(ParseError {
                        at: *pos,
                        message: "expected ':'",
                    });
                }
                *pos += 1;
                let value = parse_value(b, pos)?;
                fields.push((key, value));
                skip_ws(b, pos);
                match b.get(*pos) {
                    Some(b',') => *pos += 1,
                    Some(b'}') => {
                        *pos += 1;
                        return Ok(Doc::Obj(fields));
                    }
                    _ => {
                        return Err(ParseError {
                            at: *pos,
                            message: "expected ',' or '}'",
                        })
                    }
                }
            }
        }
        _ => parse_number(b, pos),
    }
}

fn parse_string(b: &[u8], pos: &mut usize) -> Result<String, ParseError> {
    if b.get(*pos) != Some(&b'"') {
        return Err(ParseError {
            at: *pos,
            message: "expected string",
        });
    }
    *pos += 1;
    let mut out = String::new();
    while *pos < b.len() {
        match b[*pos] {
            b'"' => {
                *pos += 1;
                return Ok(out);
            }
            b'\\' => {
                *pos += 1;
                match b.get(*pos) {
                    Some(b'"') => out.push('"'),
                    Some(b'\\') => out.push('\\'),
                    Some(b'/') => out.push('/'),
                    Some(b'n') => out.push('\n'),
                    Some(b'r') => out.push('\r'),
                    Some(b't') => out.push('\t'),
                    Some(b'b') => out.push('\u{8}'),
                    Some(b'f') => out.push('\u{c}'),
                    Some(b'u') => {
                        let hex = std::str::from_utf8(&b[*pos + 1..*pos + 5]).map_err(|_| {
                            ParseError {
                                at: *pos,
                                message: "bad unicode escape",
                            }
                        })?;
                        let code = u32::from_str_radix(hex, 16).map_err(|_| ParseError {
                            at: *pos,
                            message: "bad unicode escape",
                        })?;
                        out.push(char::from_u32(code).ok_or(ParseError {
                            at: *pos,
                            message: "bad unicode escape",
                        })?);
                        *pos += 4;
                    }
                    _ => {
                        return Err(ParseError {
                            at: *pos,
                            message: "bad escape",
                        })
                    }
                }
                *pos += 1;
            }
            _ => {
                let start = *pos;
                while *pos < b.len() && b[*pos] != b'"' && b[*pos] != b'\\' {
                    *pos += 1;
                }
                out.push_str(std::str::from_utf8(&b[start..*pos]).map_err(|_| ParseError {
                    at: start,
                    message: "invalid utf-8",
                })?);
            }
        }
    }
    Err(ParseError {
        at: *pos,
        message: "unterminated string",
    })
}

fn parse_number(b: &[u8], pos: &mut usize) -> Result<Doc, ParseError> {
    let start = *pos;
    if b.get(*pos) == Some(&b'-') {
        *pos += 1;
    }
    let mut saw_digit = false;
    let mut is_float = false;
    while *pos < b.len() {
        match b[*pos] {
            b'0'..=b'9' => {
                saw_digit = true;
                *pos += 1;
            }
            b'.' | b'e' | b'E' | b'+' | b'-' => {
                is_float = true;
                *pos += 1;
            }
            _ => break,
        }
    }
    if !saw_digit {
        return Err(ParseError {
            at: start,
            message: "expected number",
        });
    }
    let text = std::str::from_utf8(&b[start..*pos]).expect("digits are ascii");
    if is_float {
        text.parse::<f64>()
            .map(Doc::Num)
            .map_err(|_| ParseError {
                at: start,
                message: "bad float",
            })
    } else {
        text.parse::<i64>().map(Doc::Int).map_err(|_| ParseError {
            at: start,
            message: "bad integer",
        })
    }
}

/// Helper for optional floats in reports.
pub fn opt_num(v: Option<f64>) -> Doc {
    match v {
        Some(x) => Doc::Num(x),
        None => Doc::Null,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_fixed_and_scientific() {
        assert_eq!(fmt_g17(0.0), "0");
        assert_eq!(fmt_g17(-0.0), "0");
        assert_eq!(fmt_g17(2.0), "2");
        assert_eq!(fmt_g17(0.0625), "0.0625");
        assert_eq!(fmt_g17(-1.5), "-1.5");
        assert_eq!(fmt_g17(1e-5), "1.0000000000000001e-05");
        assert_eq!(fmt_g17(2.0f64.powi(-20)), "9.5367431640625e-07");
        assert_eq!(fmt_g17(1e300), "1.0000000000000001e+300");
        assert_eq!(fmt_g17(2.0f64.powi(996)), "6.6969287949141708e+299");
        assert_eq!(fmt_g17(12345678901234567.0), "12345678901234568");
        assert_eq!(fmt_g17(1e17), "1e+17");
    }

    #[test]
    fn g17_reparses_to_same_value() {
        for &v in &[
            0.1,
            -0.3333333333333333,
            2.0f64.powi(-40),
            6.02214076e23,
            -7.25e-12,
            f64::MIN_POSITIVE,
        ] {
            let s = fmt_g17(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, v, "{s}");
        }
    }

    #[test]
    fn emit_parse_round_trip_is_byte_identical() {
        let doc = Doc::Obj(vec![
            ("schema_version".into(), Doc::Str("1".into())),
            ("verdict".into(), Doc::Bool(true)),
            ("n".into(), Doc::Int(6)),
            (
                "values".into(),
                Doc::Arr(vec![Doc::Num(0.1), Doc::Num(-2.5e-9), Doc::Null]),
            ),
            ("label".into(), Doc::Str("a \"quoted\" name\n".into())),
        ]);
        let text = doc.emit();
        let reparsed = Doc::parse(&text).unwrap();
        assert_eq!(reparsed.emit(), text);
    }

    #[test]
    fn parse_rejects_trailing_garbage() {
        assert!(Doc::parse("{} x").is_err());
    }
}
