//! Order-literal grammar and 15-significant-digit formatting.
//!
//! Grammar: `A[+|-]Be1[+|-]Ce2[+|-]De3` — a scalar term followed by optional
//! `e1`, `e2`, `e3` terms in that order, each at most once. Coefficients are
//! decimals (`0.2`) or fractions (`1/5`, as in the figure orders); scientific
//! notation is not part of the grammar (`2e1` means `2·e1`, not 20). An
//! omitted coefficient in a vector term means 1 (`3-e2` = `3 - 1 e2`).

use qspline::Quaternion;

/// Parse an order literal; returns a readable message on malformed input.
pub fn parse_order(s: &str) -> Result<Quaternion, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty order literal".into());
    }

    // split into signed terms
    let mut terms: Vec<(f64, String)> = Vec::new();
    let mut sign = 1.0f64;
    let mut cur = String::new();
    let mut first = true;
    for c in compact.chars() {
        match c {
            '+' | '-' if !first || !cur.is_empty() => {
                if cur.is_empty() {
                    return Err(format!("dangling sign in '{s}'"));
                }
                terms.push((sign, std::mem::take(&mut cur)));
                sign = if c == '-' { -1.0 } else { 1.0 };
            }
            '-' => {
                // leading minus on the first term
                sign = -sign;
            }
            '+' => {}
            _ => {
                cur.push(c);
                first = false;
            }
        }
    }
    if cur.is_empty() {
        return Err(format!("dangling sign in '{s}'"));
    }
    terms.push((sign, cur));

    let mut q = Quaternion::ZERO;
    let mut seen_scalar = false;
    let mut last_unit = 0usize; // enforce e1 < e2 < e3 order, each once
    for (sign, body) in terms {
        let (unit, coeff_str) = if let Some(stripped) = body.strip_suffix("e1") {
            (1usize, stripped)
        } else if let Some(stripped) = body.strip_suffix("e2") {
            (2usize, stripped)
        } else if let Some(stripped) = body.strip_suffix("e3") {
            (3usize, stripped)
        } else {
            (0usize, body.as_str())
        };
        let coeff = if unit > 0 && coeff_str.is_empty() {
            1.0
        } else {
            parse_number(coeff_str).map_err(|e| format!("in '{s}': {e}"))?
        };
        let value = sign * coeff;
        match unit {
            0 => {
                if seen_scalar {
                    return Err(format!("'{s}': more than one scalar term"));
                }
                seen_scalar = true;
                if last_unit > 0 {
                    return Err(format!("'{s}': scalar term must come first"));
                }
                q.a = value;
            }
            u => {
                if u <= last_unit {
                    return Err(format!(
                        "'{s}': units must appear in order e1, e2, e3, each once"
                    ));
                }
                last_unit = u;
                match u {
                    1 => q.v1 = value,
                    2 => q.v2 = value,
                    _ => q.v3 = value,
                }
            }
        }
    }
    if !seen_scalar && last_unit == 0 {
        return Err(format!("'{s}': no terms parsed"));
    }
    Ok(q)
}

fn parse_number(s: &str) -> Result<f64, String> {
    if s.is_empty() {
        return Err("missing coefficient".into());
    }
    if s.contains(['e', 'E']) {
        return Err(format!(
            "'{s}': scientific notation is not part of the order grammar"
        ));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: f64 = num
            .parse()
            .map_err(|_| format!("bad fraction numerator '{num}'"))?;
        let d: f64 = den
            .parse()
            .map_err(|_| format!("bad fraction denominator '{den}'"))?;
        if d == 0.0 {
            return Err("fraction with zero denominator".into());
        }
        return Ok(n / d);
    }
    s.parse().map_err(|_| format!("bad number '{s}'"))
}

/// `%.15g`-style formatting: up to 15 significant digits, fixed notation in
/// a sane exponent window, trailing zeros trimmed.
pub fn g15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let mut out = format!("{:.*}", decimals, x);
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        if out == "-0" {
            out = "0".into();
        }
        out
    } else {
        let mut m = format!("{:.14e}", x);
        // split mantissa / exponent, trim mantissa zeros
        if let Some(pos) = m.find('e') {
            let e_part = m.split_off(pos);
            while m.ends_with('0') {
                m.pop();
            }
            if m.ends_with('.') {
                m.pop();
            }
            format!("{m}{e_part}")
        } else {
            m
        }
    }
}

/// Canonical order rendering: `a + v1 e1 + v2 e2 + v3 e3` with 15 significant
/// digits per component.
pub fn format_order(q: &Quaternion) -> String {
    let mut out = g15(q.a);
    for (v, unit) in [(q.v1, "e1"), (q.v2, "e2"), (q.v3, "e3")] {
        if v < 0.0 {
            out.push_str(&format!(" - {} {unit}", g15(-v)));
        } else {
            out.push_str(&format!(" + {} {unit}", g15(v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_order_literals() {
        assert_eq!(parse_order("2").unwrap(), Quaternion::scalar(2.0));
        assert_eq!(parse_order("-2").unwrap(), Quaternion::scalar(-2.0));
        assert_eq!(
            parse_order("3+0.2e1-0.3e2+0.4e3").unwrap(),
            Quaternion::new(3.0, 0.2, -0.3, 0.4)
        );
        assert_eq!(
            parse_order("3+1/5e1").unwrap(),
            Quaternion::new(3.0, 0.2, 0.0, 0.0)
        );
        assert_eq!(
            parse_order("2+1e1").unwrap(),
            Quaternion::new(2.0, 1.0, 0.0, 0.0)
        );
        assert_eq!(
            parse_order("3-e1+e2+2e3").unwrap(),
            Quaternion::new(3.0, -1.0, 1.0, 2.0)
        );
        assert_eq!(parse_order(" 0.4 ").unwrap(), Quaternion::scalar(0.4));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_order("").is_err());
        assert!(parse_order("2e9").is_err()); // sci-notation-looking unit
        assert!(parse_order("1+2").is_err()); // two scalar terms
        assert!(parse_order("1+2e2+1e1").is_err()); // out of order
        assert!(parse_order("1+2e1+3e1").is_err()); // repeated unit
        assert!(parse_order("1/0").is_err());
        assert!(parse_order("+").is_err());
    }

    #[test]
    fn g15_basics() {
        assert_eq!(g15(0.0), "0");
        assert_eq!(g15(24.0), "24");
        assert_eq!(g15(0.25), "0.25");
        assert_eq!(g15(-0.5), "-0.5");
        assert_eq!(g15(1.0 / 3.0), "0.333333333333333");
        assert!(g15(1.5e-9).contains('e') || g15(1.5e-9).starts_with("0.0000000015"));
        assert_eq!(g15(1e20), "1e20");
    }

    #[test]
    fn round_trip_is_canonical() {
        for s in ["2", "3+0.2e1-0.3e2+0.4e3", "3+1/5e1", "-1.5+e2", "0.4"] {
            let q = parse_order(s).unwrap();
            let canon = format_order(&q);
            let q2 = parse_order(&canon).unwrap();
            assert_eq!(q, q2, "round trip through '{canon}'");
            assert_eq!(format_order(&q2), canon);
        }
    }
}
