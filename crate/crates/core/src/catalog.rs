//! Ring catalogs: the built-in default and the one-expression-per-line file
//! format (`#` starts a comment).

use std::fmt;

use crate::error::Error;
use crate::expr;
use crate::ring::{FiniteRing, RingDescriptor};

/// The default verification catalog:
///
/// * `Z_n` for `n` in `2..=64`
/// * `Z_a x Z_b` for `a, b` in `2..=9`
/// * `Z2 x Z2 x Z4`
/// * `Z_n[x]/(x^k)` for `(n, k)` in `(2,2), (2,3), (3,2), (4,2)`
/// * `Z_n (+) Z_m` for `(n, m)` in `(2,2), (4,2), (8,2), (4,4), (9,3)`
pub fn default_catalog() -> Vec<RingDescriptor> {
    use RingDescriptor::*;
    let mut rings: Vec<RingDescriptor> = (2..=64).map(Zn).collect();
    for a in 2..=9 {
        for b in 2..=9 {
            rings.push(Product(vec![Zn(a), Zn(b)]));
        }
    }
    rings.push(Product(vec![Zn(2), Zn(2), Zn(4)]));
    for (n, k) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
        rings.push(TruncPoly { n, k });
    }
    for (n, m) in [(2, 2), (4, 2), (8, 2), (4, 4), (9, 3)] {
        rings.push(Idealize { n, m });
    }
    rings
}

/// A catalog line that failed to parse or to validate. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for CatalogError {}

/// Parses catalog text. Lines are trimmed; blank lines and text after `#`
/// are ignored. Each descriptor is also realized once with the given size
/// cap so that invalid quotients are reported with their line.
pub fn parse_catalog(text: &str, cap: usize) -> Result<Vec<RingDescriptor>, CatalogError> {
    let mut rings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |error: Error| CatalogError { line: i + 1, error };
        let d = expr::parse(line).map_err(|e| at(e.into()))?;
        FiniteRing::build_with_cap(&d, cap).map_err(at)?;
        rings.push(d);
    }
    Ok(rings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::DEFAULT_SIZE_CAP;

    #[test]
    fn default_contents() {
        let c = default_catalog();
        assert_eq!(c.len(), 63 + 64 + 1 + 4 + 5);
        for n in 2..=64 {
            assert!(c.contains(&RingDescriptor::Zn(n)));
        }
        for d in &c {
            FiniteRing::build(d).unwrap();
        }
    }

    #[test]
    fn parses_lines_and_comments() {
        let c = parse_catalog("Z8\nZ32\n", DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(c, vec![RingDescriptor::Zn(8), RingDescriptor::Zn(32)]);
        let c = parse_catalog("# rings\n\n  Z4 x Z2  # product\n", DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_catalog("Z4(+)Z3", DEFAULT_SIZE_CAP).unwrap_err();
        assert_eq!(e.line, 1);
        assert!(matches!(e.error, Error::Parse(_)));
        let e = parse_catalog("Z2\n# ok\nZ8/<3>\n", DEFAULT_SIZE_CAP).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.error, Error::InvalidDescriptor(_)));
        let e = parse_catalog("Z2\nZ100\n", 64).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.error, Error::SizeCapExceeded { .. }));
    }
}
