use std::str::FromStr;

use uberhom::{Colouring, Error};

/// Which colourings a command runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringSpec {
    /// Explicit bits, vertex 0 first.
    Bits(String),
    All,
    Elementary(usize),
    Level(usize),
}

impl FromStr for ColouringSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let number = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("`{t}` is not a vertex count"))
        };
        if s == "all" {
            Ok(ColouringSpec::All)
        } else if let Some(i) = s.strip_prefix("elementary:") {
            Ok(ColouringSpec::Elementary(number(i)?))
        } else if let Some(j) = s.strip_prefix("level:") {
            Ok(ColouringSpec::Level(number(j)?))
        } else if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') {
            Ok(ColouringSpec::Bits(s.to_string()))
        } else {
            Err(format!(
                "`{s}`: expected bits, `all`, `elementary:<i>` or `level:<j>`"
            ))
        }
    }
}

impl ColouringSpec {
    /// Expands against a complex on `n` vertices; `cap` bounds enumerations.
    pub fn resolve(&self, n: usize, cap: usize) -> Result<Vec<Colouring>, Error> {
        let enumerates = matches!(self, ColouringSpec::All | ColouringSpec::Level(_));
        if enumerates && n > cap {
            return Err(Error::CapExceeded { vertices: n, cap });
        }
        match self {
            ColouringSpec::Bits(bits) => {
                let eps = Colouring::from_str(bits)?;
                if eps.len() != n {
                    return Err(Error::ColouringLength {
                        colouring: eps.len(),
                        vertices: n,
                    });
                }
                Ok(vec![eps])
            }
            ColouringSpec::All => Ok(Colouring::all(n).collect()),
            ColouringSpec::Elementary(i) => Ok(vec![Colouring::elementary(n, *i)?]),
            ColouringSpec::Level(j) if *j > n => Err(Error::InvalidParameter(format!(
                "level {j} exceeds the {n} vertices"
            ))),
            ColouringSpec::Level(j) => Ok(Colouring::level(n, *j).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        assert_eq!("all".parse(), Ok(ColouringSpec::All));
        assert_eq!("elementary:2".parse(), Ok(ColouringSpec::Elementary(2)));
        assert_eq!("level:1".parse(), Ok(ColouringSpec::Level(1)));
        assert_eq!("0110".parse(), Ok(ColouringSpec::Bits("0110".into())));
        assert!("level:x".parse::<ColouringSpec>().is_err());
        assert!("012".parse::<ColouringSpec>().is_err());
    }

    #[test]
    fn resolves_against_the_vertex_count() {
        assert_eq!(ColouringSpec::All.resolve(3, 20).unwrap().len(), 8);
        assert_eq!(ColouringSpec::Level(2).resolve(4, 20).unwrap().len(), 6);
        assert!(matches!(
            ColouringSpec::Bits("10".into()).resolve(3, 20),
            Err(Error::ColouringLength { .. })
        ));
        assert!(matches!(
            ColouringSpec::All.resolve(21, 20),
            Err(Error::CapExceeded { .. })
        ));
    }
}
