//! Text literals for systems and curves.
//!
//! A system literal is `d m1 m2 ...` where every multiplicity token is an
//! integer or `m^k` (the multiplicity `m` repeated `k` times), so `12 7^6`
//! is `L_3(12, 7^6)`. A curve literal is `[curve] delta mu1 mu2 ...`
//! optionally followed by `b i j v` groups giving the incidence `v` with the
//! line through points `i` and `j` (1-based, among the first four points).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::system::{CurveClass, LinearSystem, PointPair};

fn parse_int(token: &str) -> Result<i64> {
    token.parse::<i64>().map_err(|e| Error::Parse {
        token: token.to_string(),
        reason: e.to_string(),
    })
}

fn push_mult_token(token: &str, out: &mut Vec<i64>) -> Result<()> {
    match token.split_once('^') {
        Some((base, count)) => {
            let base = parse_int(base).map_err(|_| Error::Parse {
                token: token.to_string(),
                reason: "bad multiplicity before `^`".into(),
            })?;
            let count: usize = count.parse().map_err(|_| Error::Parse {
                token: token.to_string(),
                reason: "bad repeat count after `^`".into(),
            })?;
            out.extend(std::iter::repeat_n(base, count));
        }
        None => out.push(parse_int(token)?),
    }
    Ok(())
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

impl FromStr for LinearSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut toks = tokens(s);
        let first = toks.next().ok_or(Error::EmptyLiteral)?;
        let degree = parse_int(first)?;
        let mut mults = Vec::new();
        for t in toks {
            push_mult_token(t, &mut mults)?;
        }
        Ok(LinearSystem::new(degree, mults))
    }
}

/// Expanded form, one token per point: `5 4 4 2 2 2 2`.
impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree)?;
        for m in &self.mults {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

fn write_runs(f: &mut impl fmt::Write, values: &[i64]) -> fmt::Result {
    let mut i = 0;
    while i < values.len() {
        let v = values[i];
        let run = values[i..].iter().take_while(|&&x| x == v).count();
        if run > 1 {
            write!(f, " {v}^{run}")?;
        } else {
            write!(f, " {v}")?;
        }
        i += run;
    }
    Ok(())
}

impl LinearSystem {
    /// Compact literal with exponent sugar: `12 7^6`.
    pub fn compact(&self) -> String {
        let mut s = self.degree.to_string();
        write_runs(&mut s, &self.mults).expect("writing to a String");
        s
    }
}

impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut toks = tokens(s).peekable();
        if toks.peek() == Some(&"curve") {
            toks.next();
        }
        let degree = parse_int(toks.next().ok_or(Error::EmptyLiteral)?)?;
        let mut mults = Vec::new();
        let mut incidences: Option<BTreeMap<PointPair, i64>> = None;
        while let Some(t) = toks.next() {
            if t == "b" {
                let mut field = |what: &str| -> Result<i64> {
                    let tok = toks.next().ok_or_else(|| Error::Parse {
                        token: "b".into(),
                        reason: format!("missing {what} in incidence triple"),
                    })?;
                    parse_int(tok)
                };
                let (i, j, v) = (field("i")?, field("j")?, field("value")?);
                if !(1..=4).contains(&i) || !(1..=4).contains(&j) || i == j {
                    return Err(Error::Parse {
                        token: format!("b {i} {j} {v}"),
                        reason: "incidence pair must be two distinct points among 1..4".into(),
                    });
                }
                let pair = PointPair::new(i as usize - 1, j as usize - 1);
                incidences.get_or_insert_with(BTreeMap::new).insert(pair, v);
            } else if incidences.is_some() {
                return Err(Error::Parse {
                    token: t.to_string(),
                    reason: "multiplicities must precede incidence triples".into(),
                });
            } else {
                push_mult_token(t, &mut mults)?;
            }
        }
        match incidences {
            Some(inc) => CurveClass::with_incidences(degree, mults, inc),
            None => Ok(CurveClass::new(degree, mults)),
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "curve {}", self.degree)?;
        for m in &self.mults {
            write!(f, " {m}")?;
        }
        if let Some(inc) = &self.incidences {
            for (p, v) in inc {
                write!(f, " b {} {} {v}", p.0 + 1, p.1 + 1)?;
            }
        }
        Ok(())
    }
}

impl CurveClass {
    /// Compact literal with exponent sugar: `curve 3 1^6`.
    pub fn compact(&self) -> String {
        let mut s = format!("curve {}", self.degree);
        write_runs(&mut s, &self.mults).expect("writing to a String");
        if let Some(inc) = &self.incidences {
            for (p, v) in inc {
                s.push_str(&format!(" b {} {} {v}", p.0 + 1, p.1 + 1));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_exponent_sugar() {
        let l: LinearSystem = "12 7^6".parse().unwrap();
        assert_eq!(l, LinearSystem::homogeneous(12, 7, 6));
        let l: LinearSystem = "16 11 7^8".parse().unwrap();
        assert_eq!(l.mults.len(), 9);
        let l: LinearSystem = "4 3^4 -1^2".parse().unwrap();
        assert_eq!(l.mults, vec![3, 3, 3, 3, -1, -1]);
        let l: LinearSystem = "0".parse().unwrap();
        assert_eq!(l, LinearSystem::new(0, vec![]));
    }

    #[test]
    fn reports_the_bad_token() {
        match "12 7^x".parse::<LinearSystem>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "7^x"),
            other => panic!("unexpected {other:?}"),
        }
        match "d 1".parse::<LinearSystem>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "d"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!("   ".parse::<LinearSystem>(), Err(Error::EmptyLiteral));
    }

    #[test]
    fn display_forms() {
        let l = LinearSystem::new(5, vec![4, 4, 2, 2, 2, 2]);
        assert_eq!(l.to_string(), "5 4 4 2 2 2 2");
        assert_eq!(l.compact(), "5 4^2 2^4");
        assert_eq!(LinearSystem::new(0, vec![]).compact(), "0");
    }

    #[test]
    fn curve_literals() {
        let c: CurveClass = "1 1 1 0 0 0 0".parse().unwrap();
        assert_eq!(c, CurveClass::new(1, vec![1, 1, 0, 0, 0, 0]));
        let c: CurveClass = "curve 3 1^6".parse().unwrap();
        assert_eq!(c.compact(), "curve 3 1^6");
        let c: CurveClass = "curve 1 0 0 0 0 b 1 2 1".parse().unwrap();
        assert_eq!(c.incidence(PointPair(0, 1)), 1);
        assert_eq!(c.incidence(PointPair(2, 3)), 0);
        assert!("curve 1 0 0 b 1 5 1".parse::<CurveClass>().is_err());
        assert!("curve 1 0 0 b 1 2".parse::<CurveClass>().is_err());
    }

    proptest! {
        #[test]
        fn system_literals_round_trip(d in -5i64..40, mults in prop::collection::vec(-3i64..12, 0..14)) {
            let l = LinearSystem::new(d, mults);
            prop_assert_eq!(l.to_string().parse::<LinearSystem>().unwrap(), l.clone());
            prop_assert_eq!(l.compact().parse::<LinearSystem>().unwrap(), l);
        }

        #[test]
        fn curve_literals_round_trip(
            d in -3i64..20,
            mults in prop::collection::vec(-2i64..6, 4..9),
            betas in prop::option::of(prop::collection::vec(-2i64..4, 6)),
        ) {
            let c = match betas {
                Some(b) => {
                    let inc = PointPair::all(4).zip(b).collect();
                    CurveClass::with_incidences(d, mults, inc).unwrap()
                }
                None => CurveClass::new(d, mults),
            };
            prop_assert_eq!(c.to_string().parse::<CurveClass>().unwrap(), c.clone());
            prop_assert_eq!(c.compact().parse::<CurveClass>().unwrap(), c);
        }
    }
}
