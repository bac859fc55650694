use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::{CliError, CliResult};

/// Parses `p/q` exactly before rounding once to the nearest double; anything
/// else is read as a decimal.
pub fn parse(token: &str) -> CliResult<f64> {
    let token = token.trim();
    let bad = || CliError(format!("cannot read weight `{token}`"));
    if let Some((p, q)) = token.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(CliError(format!("weight `{token}` divides by zero")));
        }
        return BigRational::new(p, q).to_f64().ok_or_else(bad);
    }
    token.parse::<f64>().map_err(|_| bad())
}

pub fn parse_all(tokens: &[String]) -> CliResult<Vec<f64>> {
    tokens.iter().map(|t| parse(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_decimals() {
        assert_eq!(parse("1/3").unwrap(), 1.0 / 3.0);
        assert_eq!(parse(" 2/4 ").unwrap(), 0.5);
        assert_eq!(parse("0.25").unwrap(), 0.25);
        assert_eq!(parse("1").unwrap(), 1.0);
        assert!(parse("1/0").is_err());
        assert!(parse("a/b").is_err());
        assert!(parse("").is_err());
    }
}
