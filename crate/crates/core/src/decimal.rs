//! Exact decimal literals used as comparables in instance files.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid decimal literal {0:?}")]
pub struct DecimalError(pub String);

/// A decimal literal compared by exact numeric value. The original text is
/// kept for reporting, so `1.50` and `1.5` compare equal but print as written.
#[derive(Debug, Clone)]
pub struct Decimal {
    literal: String,
    negative: bool,
    // no leading zeros
    int_digits: String,
    // no trailing zeros
    frac_digits: String,
}

impl Decimal {
    pub fn literal(&self) -> &str {
        &self.literal
    }

    fn is_zero(&self) -> bool {
        self.int_digits.is_empty() && self.frac_digits.is_empty()
    }

    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        self.int_digits
            .len()
            .cmp(&other.int_digits.len())
            .then_with(|| self.int_digits.cmp(&other.int_digits))
            .then_with(|| self.frac_digits.cmp(&other.frac_digits))
    }
}

impl FromStr for Decimal {
    type Err = DecimalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || DecimalError(s.to_string());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (body, None),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        if let Some(f) = frac_part {
            if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
        }
        let mut d = Decimal {
            literal: s.to_string(),
            negative,
            int_digits: int_part.trim_start_matches('0').to_string(),
            frac_digits: frac_part.unwrap_or("").trim_end_matches('0').to_string(),
        };
        if d.is_zero() {
            d.negative = false;
        }
        Ok(d)
    }
}

impl PartialEq for Decimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Decimal {}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.negative, other.negative) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => self.cmp_magnitude(other),
            (true, true) => other.cmp_magnitude(self),
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> Decimal {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_orders() {
        assert!(d("1.5") == d("1.50"));
        assert!(d("-0") == d("0.000"));
        assert!(d("10") > d("9.999"));
        assert!(d("-10") < d("-9.5"));
        assert!(d("0.25") < d("0.3"));
        assert_eq!(d("007.10").to_string(), "007.10");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "-", "1.", ".5", "1e3", "+1", "1.2.3", "abc", "1 "] {
            assert!(bad.parse::<Decimal>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn order_matches_integer_order(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000) {
            let fmt = |x: i64| format!("{}{}.{:03}", if x < 0 { "-" } else { "" }, x.abs() / 1000, x.abs() % 1000);
            prop_assert_eq!(d(&fmt(a)).cmp(&d(&fmt(b))), a.cmp(&b));
        }
    }
}
