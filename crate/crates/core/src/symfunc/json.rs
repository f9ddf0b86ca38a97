//! JSON form of elements: exact decimal strings, terms in canonical
//! partition order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Basis, SymFunc, SymSeries};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
    pub cutoff: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<usize>,
    pub num: String,
    pub den: String,
}

impl ElementJson {
    fn from_coeffs(
        basis: Basis,
        coeffs: BTreeMap<Partition, BigRational>,
        cutoff: Option<usize>,
    ) -> Self {
        ElementJson {
            basis: basis.to_string(),
            terms: coeffs
                .into_iter()
                .map(|(p, c)| TermJson {
                    partition: p.into_parts(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
            cutoff,
        }
    }

    pub fn from_symfunc(f: &SymFunc, basis: Basis) -> Self {
        Self::from_coeffs(basis, f.to_basis(basis), None)
    }

    pub fn from_series(f: &SymSeries, basis: Basis) -> Self {
        Self::from_coeffs(basis, f.to_basis(basis), Some(f.cutoff()))
    }

    fn coefficients(&self) -> Result<(Basis, Vec<(Partition, BigRational)>)> {
        let basis: Basis = self.basis.parse()?;
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let p = Partition::new(t.partition.clone())?;
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad denominator {:?}", t.den)))?;
            if den == BigInt::from(0) {
                return Err(Error::InvalidArgument("zero denominator".into()));
            }
            out.push((p, BigRational::new(num, den)));
        }
        Ok((basis, out))
    }

    /// Reads back a finite element (the `cutoff` field is ignored).
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        let (basis, coeffs) = self.coefficients()?;
        Ok(SymFunc::from_basis_coefficients(
            basis,
            coeffs.iter().map(|(p, c)| (p, c)),
        ))
    }

    /// Reads back a series; a missing cutoff means "exact at its degree".
    pub fn to_series(&self) -> Result<SymSeries> {
        let f = self.to_symfunc()?;
        let cutoff = self.cutoff.unwrap_or_else(|| f.degree());
        if f.degree() > cutoff {
            return Err(Error::InvalidArgument(format!(
                "term of degree {} above cutoff {cutoff}",
                f.degree()
            )));
        }
        Ok(SymSeries::from_symfunc(&f, cutoff))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("element serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_and_round_trip() {
        let h2 = SymFunc::h(2);
        let j = ElementJson::from_symfunc(&h2, Basis::P);
        assert_eq!(
            j.to_json_string(),
            r#"{"basis":"p","terms":[{"partition":[2],"num":"1","den":"2"},{"partition":[1,1],"num":"1","den":"2"}],"cutoff":null}"#
        );
        let back: ElementJson = serde_json::from_str(&j.to_json_string()).unwrap();
        assert_eq!(back.to_symfunc().unwrap(), h2);
        for b in Basis::ALL {
            let j = ElementJson::from_symfunc(&h2, b);
            assert_eq!(j.to_symfunc().unwrap(), h2);
        }
    }

    #[test]
    fn series_carry_cutoff() {
        let h = crate::symfunc::standard_series(crate::symfunc::StandardSeries::H, 3);
        let j = ElementJson::from_series(&h, Basis::H);
        assert_eq!(j.cutoff, Some(3));
        assert_eq!(j.terms.len(), 4);
        assert_eq!(j.to_series().unwrap(), h);
    }

    #[test]
    fn rejects_malformed() {
        let bad = ElementJson {
            basis: "q".into(),
            terms: vec![],
            cutoff: None,
        };
        assert!(bad.to_symfunc().is_err());
        let bad = ElementJson {
            basis: "s".into(),
            terms: vec![TermJson {
                partition: vec![1, 2],
                num: "1".into(),
                den: "1".into(),
            }],
            cutoff: None,
        };
        assert!(bad.to_symfunc().is_err());
    }
}
