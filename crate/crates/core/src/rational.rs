//! Exact rational arithmetic helpers.
//!
//! Scores and weights are kept exact so that tie hyperplanes of the
//! projection are decided by equality, never by a floating tolerance.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Reduced fraction with a positive denominator.
pub type Rational = Ratio<i128>;

/// Builds `numer/denom`. Panics on a zero denominator, like [`Ratio::new`].
pub fn ratio(numer: i128, denom: i128) -> Rational {
    Ratio::new(numer, denom)
}

pub fn int(value: i128) -> Rational {
    Ratio::from_integer(value)
}

/// Parses `"p/q"` or `"p"`. Decimal and exponent notation are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if text.contains(['.', 'e', 'E']) {
        return Err(format!(
            "`{text}` is not an exact rational; write it as p/q"
        ));
    }
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: i128 = numer
        .parse()
        .map_err(|_| format!("bad numerator in `{text}`"))?;
    let denom: i128 = denom
        .parse()
        .map_err(|_| format!("bad denominator in `{text}`"))?;
    if denom == 0 {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Ratio::new(numer, denom))
}

/// Always prints `p/q`, including integers (`1/1`).
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Distance of a score vector from the nearest active tie hyperplane.
///
/// `Infinite` is the sentinel for a fully tied projection, where no strict
/// comparison exists. `Finite` values always order below `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Margin {
    Finite(Rational),
    Infinite,
}

impl Margin {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Margin::Finite(value) => Some(value),
            Margin::Infinite => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Margin::Finite(value) => value.is_positive(),
            Margin::Infinite => true,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Margin::Finite(value) if value.is_zero())
    }

    /// `p/q`, or `inf` for the sentinel.
    pub fn to_text(&self) -> String {
        match self {
            Margin::Finite(value) => format_rational(value),
            Margin::Infinite => "inf".to_string(),
        }
    }
}

impl PartialOrd for Margin {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Margin {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Margin::Finite(a), Margin::Finite(b)) => a.cmp(b),
            (Margin::Finite(_), Margin::Infinite) => Ordering::Less,
            (Margin::Infinite, Margin::Finite(_)) => Ordering::Greater,
            (Margin::Infinite, Margin::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Margin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("9/10").unwrap(), ratio(9, 10));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("1").unwrap(), int(1));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e-1").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn formats_as_p_over_q() {
        assert_eq!(format_rational(&ratio(3, 2)), "3/2");
        assert_eq!(format_rational(&int(1)), "1/1");
        assert_eq!(Margin::Infinite.to_text(), "inf");
    }

    #[test]
    fn infinite_margin_dominates() {
        assert!(Margin::Finite(int(1000)) < Margin::Infinite);
        assert!(Margin::Finite(ratio(1, 10)) < Margin::Finite(ratio(1, 2)));
        assert!(Margin::Finite(int(0)).is_zero());
        assert!(!Margin::Finite(int(0)).is_positive());
    }
}
