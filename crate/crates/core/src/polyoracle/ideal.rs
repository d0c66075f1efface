use std::fmt;
use std::str::FromStr;

use super::poly::Poly;
use crate::{Error, Result};

/// Homogeneous ideal given by nonzero homogeneous generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedIdeal {
    generators: Vec<Poly>,
}

impl GradedIdeal {
    pub fn new(generators: Vec<Poly>) -> Result<Self> {
        if let Some(k) = generators.iter().position(Poly::is_zero) {
            return Err(Error::Parse {
                line: k + 1,
                message: "zero generator".into(),
            });
        }
        Ok(GradedIdeal { generators })
    }

    /// The zero ideal.
    pub fn zero() -> Self {
        GradedIdeal::default()
    }

    /// Builds from generator strings.
    pub fn parse_list(gens: &[&str]) -> Result<Self> {
        GradedIdeal::new(gens.iter().map(|g| Poly::parse(g)).collect::<Result<_>>()?)
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }
}

impl FromStr for GradedIdeal {
    type Err = Error;

    /// One generator per line; `#` starts a comment; blank lines are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let p = Poly::parse(line).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line: k + 1, message },
                other => other,
            })?;
            if p.is_zero() {
                return Err(Error::Parse {
                    line: k + 1,
                    message: "zero generator".into(),
                });
            }
            gens.push(p);
        }
        GradedIdeal::new(gens)
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let text = "# limit curve\nx^2\nx*y   # plane line pair\n\ny^4\ny^3*w + x*z^3\n";
        let ideal: GradedIdeal = text.parse().unwrap();
        assert_eq!(ideal.generators().len(), 4);
        assert_eq!(ideal.max_degree(), 4);
        let printed = ideal.to_string();
        assert_eq!(printed, "x^2\nx*y\ny^4\nx*z^3 + y^3*w\n");
        let again: GradedIdeal = printed.parse().unwrap();
        assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = "x\n\ny + z^2\n".parse::<GradedIdeal>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        assert!("x - x\n".parse::<GradedIdeal>().is_err());
    }
}
