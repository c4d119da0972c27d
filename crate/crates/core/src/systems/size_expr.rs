//! Side lengths as small expressions in `n`: products of integers, `n`,
//! `n^k` (or `n²`), and `c^n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    Const(u64),
    PowN(u32),
    Exp(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SizeExpr {
    factors: Vec<Factor>,
}

impl SizeExpr {
    pub fn n() -> Self {
        SizeExpr {
            factors: vec![Factor::PowN(1)],
        }
    }

    pub fn n_pow(k: u32) -> Self {
        SizeExpr {
            factors: vec![Factor::PowN(k)],
        }
    }

    pub fn constant(c: u64) -> Self {
        SizeExpr {
            factors: vec![Factor::Const(c)],
        }
    }

    pub fn exp(base: u64) -> Self {
        SizeExpr {
            factors: vec![Factor::Exp(base)],
        }
    }

    pub fn eval(&self, n: u64) -> Result<u64> {
        let overflow = || Error::InvalidArgument(format!("{self} overflows at n = {n}"));
        let mut acc = 1u64;
        for f in &self.factors {
            let v = match *f {
                Factor::Const(c) => Some(c),
                Factor::PowN(k) => n.checked_pow(k),
                Factor::Exp(c) => u32::try_from(n).ok().and_then(|e| c.checked_pow(e)),
            };
            acc = v.and_then(|v| acc.checked_mul(v)).ok_or_else(overflow)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SizeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match *factor {
                Factor::Const(c) => write!(f, "{c}")?,
                Factor::PowN(1) => f.write_str("n")?,
                Factor::PowN(k) => write!(f, "n^{k}")?,
                Factor::Exp(c) => write!(f, "{c}^n")?,
            }
        }
        Ok(())
    }
}

fn parse_factor(t: &str) -> Result<Factor> {
    let bad = || Error::Parse(format!("bad size factor {t:?}"));
    let positive = |s: &str| -> Result<u64> {
        match s.parse::<u64>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(bad()),
        }
    };
    if t == "n" {
        return Ok(Factor::PowN(1));
    }
    if let Some(k) = t.strip_prefix("n") {
        let k = k.strip_prefix('^').map(str::to_owned).or_else(|| match k {
            "²" => Some("2".into()),
            "³" => Some("3".into()),
            _ => None,
        });
        let k = k.ok_or_else(bad)?;
        return Ok(Factor::PowN(u32::try_from(positive(&k)?).map_err(|_| bad())?));
    }
    if let Some(base) = t.strip_suffix("^n").or_else(|| t.strip_suffix("ⁿ")) {
        return Ok(Factor::Exp(positive(base)?));
    }
    Ok(Factor::Const(positive(t)?))
}

impl FromStr for SizeExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty size expression".into()));
        }
        let factors = compact.split('*').map(parse_factor).collect::<Result<_>>()?;
        Ok(SizeExpr { factors })
    }
}

impl TryFrom<String> for SizeExpr {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SizeExpr> for String {
    fn from(e: SizeExpr) -> String {
        e.to_string()
    }
}
