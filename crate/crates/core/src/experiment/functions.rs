use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The test functions of the disk experiments, plus constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BuiltinFunction {
    /// `x sin(5x - 6y) + y`
    Example1F,
    /// `sin(10x + y)`
    Example2G,
    /// `exp(x^2 - y^2) - xy`
    Example3H,
    /// Radial step: 1 for `r^2 < 0.5`, 0 for `0.5 <= r^2 <= 0.8`, 0.5 beyond.
    Example4Eta,
    Constant(f64),
}

impl BuiltinFunction {
    pub const EXAMPLES: [BuiltinFunction; 4] = [
        BuiltinFunction::Example1F,
        BuiltinFunction::Example2G,
        BuiltinFunction::Example3H,
        BuiltinFunction::Example4Eta,
    ];

    /// The function used by example `id` in `1..=4`.
    pub fn example(id: u32) -> Result<Self> {
        id.checked_sub(1)
            .and_then(|i| Self::EXAMPLES.get(i as usize))
            .copied()
            .ok_or(Error::Parameter {
                name: "example",
                value: i64::from(id),
                reason: "examples are numbered 1 to 4",
            })
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match *self {
            BuiltinFunction::Example1F => x * (5.0 * x - 6.0 * y).sin() + y,
            BuiltinFunction::Example2G => (10.0 * x + y).sin(),
            BuiltinFunction::Example3H => (x * x - y * y).exp() - x * y,
            BuiltinFunction::Example4Eta => {
                let r2 = x * x + y * y;
                if r2 < 0.5 {
                    1.0
                } else if r2 <= 0.8 {
                    0.0
                } else {
                    0.5
                }
            }
            BuiltinFunction::Constant(c) => c,
        }
    }

    pub fn id(&self) -> String {
        match self {
            BuiltinFunction::Example1F => "example1_f".into(),
            BuiltinFunction::Example2G => "example2_g".into(),
            BuiltinFunction::Example3H => "example3_h".into(),
            BuiltinFunction::Example4Eta => "example4_eta".into(),
            BuiltinFunction::Constant(c) => format!("const:{c}"),
        }
    }

    /// Short name used in file names: `example1` ... `example4`, `const`.
    pub fn short_name(&self) -> &'static str {
        match self {
            BuiltinFunction::Example1F => "example1",
            BuiltinFunction::Example2G => "example2",
            BuiltinFunction::Example3H => "example3",
            BuiltinFunction::Example4Eta => "example4",
            BuiltinFunction::Constant(_) => "const",
        }
    }
}

impl fmt::Display for BuiltinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Accepts the full ids, the short names and `const:<value>`.
impl FromStr for BuiltinFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(v) = s.strip_prefix("const:") {
            return v
                .parse::<f64>()
                .ok()
                .filter(|c| c.is_finite())
                .map(BuiltinFunction::Constant)
                .ok_or_else(|| Error::Contract(format!("bad constant `{v}`")));
        }
        Self::EXAMPLES
            .into_iter()
            .find(|b| b.id() == s || b.short_name() == s)
            .ok_or_else(|| Error::Contract(format!("unknown function `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(BuiltinFunction::Example1F.eval(0.0, 0.0), 0.0);
        assert_eq!(BuiltinFunction::Example3H.eval(0.0, 0.0), 1.0);
        assert_eq!(BuiltinFunction::Example4Eta.eval(0.9, 0.0), 0.5);
        assert_eq!(BuiltinFunction::Example4Eta.eval(0.7, 0.0), 1.0);
        assert_eq!(BuiltinFunction::Example4Eta.eval(0.8, 0.0), 0.0);
        assert_eq!(BuiltinFunction::Example2G.eval(0.1, -1.0), 0.0);
    }

    #[test]
    fn parsing() {
        assert_eq!("example2".parse::<BuiltinFunction>().unwrap(), BuiltinFunction::Example2G);
        assert_eq!("example4_eta".parse::<BuiltinFunction>().unwrap(), BuiltinFunction::Example4Eta);
        assert_eq!("const:1.5".parse::<BuiltinFunction>().unwrap(), BuiltinFunction::Constant(1.5));
        assert!("const:nan".parse::<BuiltinFunction>().is_err());
        assert!("example5".parse::<BuiltinFunction>().is_err());
        assert!(BuiltinFunction::example(0).is_err());
        assert_eq!(BuiltinFunction::example(3).unwrap(), BuiltinFunction::Example3H);
    }
}
