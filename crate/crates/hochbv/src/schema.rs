//! JSON description of an algebra.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "m": 4,
//!   "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2}, {"name": "x2", "degree": 4}],
//!   "product": [[1, 1, 2, "1"]],
//!   "differential": [],
//!   "coproduct": [[0, 0, 2, "1"], [0, 1, 1, "1"], [0, 2, 0, "1"]],
//!   "pairing": [[0, 2, "1"], [1, 1, "1"], [2, 0, "1"]],
//!   "counit": [[2, "1"]]
//! }
//! ```
//!
//! Entries are basis indices followed by a coefficient, written `"n/d"`, `"n"` or as a JSON
//! integer. Index 0 is the unit; products with it are implicit. `field` is `"Q"` or `{"Fp": p}`.

use exactlinalg::Field;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::frobenius::{AlgebraData, ClosedData, FrobeniusAlgebra};
use crate::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Named("Q".into())
    }

    /// Parses `Q` or `Fp:<p>` (also `Fp<p>`, `F<p>`).
    pub fn parse(s: &str) -> Option<Self> {
        if s == "Q" {
            return Some(Self::rational());
        }
        let digits = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("Fp")).or_else(|| s.strip_prefix('F'))?;
        digits.parse().ok().map(|fp| FieldSpec::Prime { fp })
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Named(s) => s.clone(),
            FieldSpec::Prime { fp } => format!("Fp:{fp}"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default = "FieldSpec::rational")]
    pub field: FieldSpec,
    pub m: i64,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub product: Vec<Vec<Value>>,
    #[serde(default)]
    pub differential: Vec<Vec<Value>>,
    #[serde(default)]
    pub coproduct: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Vec<Value>>>,
}

fn parse_err(field: String, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { field, message: message.into() }
}

fn entries<F: Field>(table: &str, rows: &[Vec<Value>], arity: usize) -> Result<Vec<(Vec<usize>, F)>, AlgebraError> {
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let at = || format!("{table}[{r}]");
        if row.len() != arity + 1 {
            return Err(parse_err(at(), format!("expected {} indices and a coefficient", arity)));
        }
        let mut idx = Vec::with_capacity(arity);
        for v in &row[..arity] {
            let i = v.as_u64().ok_or_else(|| parse_err(at(), format!("index {v} is not a non-negative integer")))?;
            idx.push(i as usize);
        }
        let c = match &row[arity] {
            Value::String(s) => F::parse(s).map_err(|e| parse_err(at(), e.to_string()))?,
            Value::Number(n) => {
                let i = n.as_i64().ok_or_else(|| parse_err(at(), format!("coefficient {n} is not an integer")))?;
                F::from_i64(i)
            }
            v => return Err(parse_err(at(), format!("coefficient {v} is not a string or integer"))),
        };
        out.push((idx, c));
    }
    Ok(out)
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_data<F: Field>(&self) -> Result<AlgebraData<F>, AlgebraError> {
        let tri = |v: Vec<(Vec<usize>, F)>| -> Vec<(usize, usize, usize, F)> {
            v.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)).collect()
        };
        Ok(AlgebraData {
            names: self.basis.iter().map(|b| b.name.clone()).collect(),
            degrees: self.basis.iter().map(|b| b.degree).collect(),
            m: self.m,
            product: tri(entries("product", &self.product, 3)?),
            differential: entries("differential", &self.differential, 2)?
                .into_iter()
                .map(|(i, c)| (i[0], i[1], c))
                .collect(),
            coproduct: tri(entries("coproduct", &self.coproduct, 3)?),
            pairing: match &self.pairing {
                None => None,
                Some(p) => Some(entries("pairing", p, 2)?.into_iter().map(|(i, c)| (i[0], i[1], c)).collect()),
            },
            counit: match &self.counit {
                None => None,
                Some(p) => Some(entries("counit", p, 1)?.into_iter().map(|(i, c)| (i[0], c)).collect()),
            },
        })
    }

    /// Pairing-side data for [`derive_open_from_closed`](crate::derive_open_from_closed); any
    /// coproduct in the file is ignored.
    pub fn to_closed<F: Field>(&self) -> Result<ClosedData<F>, AlgebraError> {
        let d = self.to_data::<F>()?;
        let pairing = d.pairing.ok_or_else(|| parse_err("pairing".into(), "a closed algebra needs a pairing"))?;
        Ok(ClosedData {
            names: d.names,
            degrees: d.degrees,
            m: d.m,
            product: d.product,
            differential: d.differential,
            pairing,
        })
    }

    pub fn to_algebra<F: Field>(&self) -> Result<FrobeniusAlgebra<F>, AlgebraError> {
        FrobeniusAlgebra::new(self.to_data()?)
    }

    pub fn from_algebra<F: Field>(a: &FrobeniusAlgebra<F>, field: FieldSpec) -> Self {
        let d = a.to_data();
        let row = |idx: &[usize], c: &F| -> Vec<Value> {
            let mut v: Vec<Value> = idx.iter().map(|&i| Value::from(i as u64)).collect();
            v.push(Value::String(c.to_ratio_string()));
            v
        };
        AlgebraFile {
            field,
            m: d.m,
            basis: d.names.iter().zip(&d.degrees).map(|(n, &g)| BasisEntry { name: n.clone(), degree: g }).collect(),
            product: d.product.iter().map(|(i, j, k, c)| row(&[*i, *j, *k], c)).collect(),
            differential: d.differential.iter().map(|(i, k, c)| row(&[*i, *k], c)).collect(),
            coproduct: d.coproduct.iter().map(|(i, j, k, c)| row(&[*i, *j, *k], c)).collect(),
            pairing: d.pairing.map(|p| p.iter().map(|(i, j, c)| row(&[*i, *j], c)).collect()),
            counit: d.counit.map(|p| p.iter().map(|(i, c)| row(&[*i], c)).collect()),
        }
    }
}
