//! Command-line value syntax: fractions `a/b`, decimals (rationalized),
//! comma lists and complex numbers.

use crate::error::CliError;
use barnes_zeta::exact::{parse_fraction, BigRational, PeriodVector};
use barnes_zeta::reduction::best_convergent;
use num_complex::Complex64;

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

/// `a/b` or an integer exactly; a decimal through its best convergent with
/// denominator at most `max_den`.
pub fn parse_rational(text: &str, max_den: u64) -> Result<BigRational, CliError> {
    let t = text.trim();
    if let Ok(r) = parse_fraction(t) {
        return Ok(r);
    }
    let v: f64 = t.parse().map_err(|_| usage(format!("expected a fraction or decimal, got {text:?}")))?;
    if v == 0.0 {
        return Ok(BigRational::from_integer(0.into()));
    }
    let r = best_convergent(v.abs(), max_den)?;
    Ok(if v < 0.0 { -r } else { r })
}

/// Either a rational shift or the symbol `sym`.
#[derive(Clone, Debug, PartialEq)]
pub enum Shift {
    Symbolic,
    Value(BigRational),
}

pub fn parse_shift(text: &str, max_den: u64) -> Result<Shift, CliError> {
    if matches!(text.trim(), "sym" | "x") {
        Ok(Shift::Symbolic)
    } else {
        parse_rational(text, max_den).map(Shift::Value)
    }
}

pub fn parse_periods(text: &str, max_den: u64) -> Result<PeriodVector, CliError> {
    let entries = text
        .split(',')
        .map(|p| parse_rational(p, max_den))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PeriodVector::new(entries)?)
}

/// `a`, `bi`, `a+bi` or `a-bi`.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || usage(format!("expected a real or complex number, got {text:?}"));
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split before the last sign that is not an exponent sign or the leading one
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    Ok(Complex64::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
}

pub fn parse_range(text: &str) -> Result<(f64, f64), CliError> {
    let bad = || usage(format!("expected a range lo,hi, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let lo: f64 = a.trim().parse().map_err(|_| bad())?;
    let hi: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(lo < hi) {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn parse_steps(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || usage(format!("expected n or n1,n2 positive steps, got {text:?}"));
    let parse = |p: &str| p.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad);
    match text.split_once(',') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}


#[cfg(test)]
mod properties {
    use super::*;
    use barnes_zeta::exact::rat;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn fractions_parse_exactly(p in -1000i64..1000, q in 1i64..1000) {
            prop_assert_eq!(parse_rational(&format!("{p}/{q}"), 10).unwrap(), rat(p, q));
        }

        #[test]
        fn decimals_recover_small_fractions(p in 1i64..200, q in 1i64..200) {
            let text = format!("{}", p as f64 / q as f64);
            prop_assert_eq!(parse_rational(&text, 1000).unwrap(), rat(p, q));
        }

        #[test]
        fn complex_display_round_trips(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let text = if im < 0.0 { format!("{re}{im}i") } else { format!("{re}+{im}i") };
            prop_assert_eq!(parse_complex(&text).unwrap(), Complex64::new(re, im));
        }
    }
}
