//! JSON element files and dispatch from a runtime ring descriptor.
//!
//! An element file is `{"ring": <descriptor>, "payload": ...}` where the
//! payload is a 2-D array of scalar strings for matrix rings and the
//! canonical integer for finite rings. Integers are also accepted as matrix
//! entries on input; output always uses strings.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::FiniteRing;
use crate::ginverse::{InverseKind, Verdict, WitnessReport};
use crate::matrix::Matrix;
use crate::matrix_ring::{FieldKind, MatrixRing};
use crate::ring::{FieldTag, RingDescriptor, StarRing};
use crate::scalar::{GaussianRational, PrimeField, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Text(String),
    Int(i64),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Index(u32),
    Matrix(Vec<Vec<Cell>>),
}

/// Conversion between ring elements and JSON payloads.
pub trait Codec: StarRing {
    fn decode(&self, p: &Payload) -> Result<Self::Elem>;
    fn encode(&self, x: &Self::Elem) -> Payload;
}

fn payload_error(ring: &impl StarRing, detail: impl Into<String>) -> Error {
    Error::Payload { ring: ring.descriptor().to_string(), detail: detail.into() }
}

impl Codec for FiniteRing {
    fn decode(&self, p: &Payload) -> Result<u32> {
        match p {
            Payload::Index(x) if self.contains(*x) => Ok(*x),
            Payload::Index(x) => Err(payload_error(self, format!("{x} is not below |R| = {}", self.order()))),
            Payload::Matrix(_) => Err(payload_error(self, "finite ring elements are integers")),
        }
    }

    fn encode(&self, x: &u32) -> Payload {
        Payload::Index(*x)
    }
}

impl<F: FieldKind> Codec for MatrixRing<F> {
    fn decode(&self, p: &Payload) -> Result<Matrix<F>> {
        let n = self.dim();
        let Payload::Matrix(rows) = p else {
            return Err(payload_error(self, "expected a 2-D array of scalar strings"));
        };
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(payload_error(self, format!("expected a {n}x{n} array")));
        }
        let data = rows
            .iter()
            .map(|r| r.iter().map(|c| F::parse(&c.text(), self.ctx())).collect::<Result<Vec<F>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(data, self.ctx()))
    }

    fn encode(&self, x: &Matrix<F>) -> Payload {
        Payload::Matrix(
            x.to_rows().iter().map(|r| r.iter().map(|v| Cell::Text(v.to_string())).collect()).collect(),
        )
    }
}

/// Work to be done in whatever ring a descriptor names.
pub trait RingVisitor {
    type Output;
    fn visit<R: Codec>(self, r: &R) -> Self::Output;
}

/// Builds the ring named by `d` and hands it to `v`.
pub fn with_ring<V: RingVisitor>(d: &RingDescriptor, v: V) -> Result<V::Output> {
    d.validate()?;
    Ok(match *d {
        RingDescriptor::Zn { .. } | RingDescriptor::MatZp { .. } => v.visit(&FiniteRing::new(d)?),
        RingDescriptor::MatrixRing { field, n, involution } => match field {
            FieldTag::Rationals => v.visit(&MatrixRing::<Rational>::new(n, (), involution)),
            FieldTag::GaussianRationals => v.visit(&MatrixRing::<GaussianRational>::new(n, (), involution)),
            FieldTag::Prime(p) => v.visit(&MatrixRing::<PrimeField>::new(n, p, involution)),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementFile {
    pub ring: RingDescriptor,
    pub payload: Payload,
}

impl ElementFile {
    pub fn new<R: Codec>(r: &R, x: &R::Elem) -> Self {
        ElementFile { ring: r.descriptor(), payload: r.encode(x) }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads an element file, or the witness of a result file.
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        if value.get("payload").is_none() {
            if let Ok(res) = serde_json::from_value::<ResultFile>(value.clone()) {
                return match res.witness {
                    Some(payload) => Ok(ElementFile { ring: res.ring, payload }),
                    None => Err(Error::Parse(format!("{}: result file has no witness", path.display()))),
                };
            }
        }
        serde_json::from_value(value).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// Decodes the payload, insisting that the file names ring `r`.
    pub fn element<R: Codec>(&self, r: &R) -> Result<R::Elem> {
        let d = r.descriptor();
        if self.ring != d {
            return Err(Error::DescriptorMismatch(d.to_string(), self.ring.to_string()));
        }
        r.decode(&self.payload)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Found,
    NotInvertible,
}

/// Echo of the inputs of a compute or decompose run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputsEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultFile {
    pub status: Status,
    pub kind: InverseKind,
    pub ring: RingDescriptor,
    pub inputs: InputsEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Payload>,
    /// Index of a pseudo core inverse.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<WitnessReport<Payload>>,
}

impl ResultFile {
    /// Checks that a witness is present exactly when found, and verified.
    pub fn check(&self) -> Result<()> {
        let ok = match self.status {
            Status::Found => self.witness.is_some() && self.verify.as_ref().is_some_and(|v| v.overall),
            Status::NotInvertible => self.witness.is_none(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Inconsistent("result file status disagrees with its witness".into()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub status: Status,
    pub ring: RingDescriptor,
    pub inputs: InputsEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Payload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<Payload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a2: Option<Payload>,
    pub verdicts: Vec<Verdict>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Involution;

    struct Show(Payload);

    impl RingVisitor for Show {
        type Output = Result<String>;
        fn visit<R: Codec>(self, r: &R) -> Result<String> {
            let x = r.decode(&self.0)?;
            assert_eq!(r.encode(&x), r.encode(&r.decode(&r.encode(&x))?));
            Ok(r.show(&x))
        }
    }

    fn show(ring: &str, payload: &str) -> Result<String> {
        let p: Payload = serde_json::from_str(payload).unwrap();
        with_ring(&ring.parse()?, Show(p))?
    }

    #[test]
    fn payload_round_trips() {
        assert_eq!(show("Zn:6", "5").unwrap(), "5");
        assert_eq!(show("MatZp:2x2:p2", "12").unwrap(), "[[1, 1], [0, 0]]");
        assert_eq!(show("Mat:Q:2", r#"[["1/2","0"],["-3","4"]]"#).unwrap(), "[[1/2, 0], [-3, 4]]");
        assert_eq!(show("Mat:Q:2", r#"[[1,0],[0,1]]"#).unwrap(), "[[1, 0], [0, 1]]");
        assert_eq!(show("Mat:QI:1:ct", r#"[["1-2i"]]"#).unwrap(), "[[1-2i]]");
        assert_eq!(show("Mat:GF5:1", r#"[["7"]]"#).unwrap(), "[[2]]");
    }

    #[test]
    fn payload_errors() {
        assert!(matches!(show("Zn:6", "6"), Err(Error::Payload { .. })));
        assert!(matches!(show("Zn:6", "[[1]]"), Err(Error::Payload { .. })));
        assert!(matches!(show("Mat:Q:2", r#"[["1"]]"#), Err(Error::Payload { .. })));
        assert!(matches!(show("Mat:Q:1", r#"[["1/0"]]"#), Err(Error::Parse(_))));
        assert!(matches!(show("Mat:Q:1", "3"), Err(Error::Payload { .. })));
    }

    #[test]
    fn element_file_checks_descriptor() {
        let f = ElementFile::parse(r#"{"ring":{"kind":"zn","modulus":12},"payload":3}"#).unwrap();
        assert_eq!(f.element(&FiniteRing::zn(12)).unwrap(), 3);
        assert!(matches!(f.element(&FiniteRing::zn(6)), Err(Error::DescriptorMismatch(..))));
        let m = MatrixRing::<Rational>::new(2, (), Involution::Transpose);
        let e = ElementFile::new(&m, &m.mat(&[&[0, 1], &[0, 0]]));
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(
            text,
            r#"{"ring":{"kind":"matrix-ring","field":"rationals","n":2,"involution":"transpose"},"payload":[["0","1"],["0","0"]]}"#
        );
        assert_eq!(ElementFile::parse(&text).unwrap(), e);
    }

    #[test]
    fn result_file_status_invariant() {
        let r = ResultFile {
            status: Status::Found,
            kind: InverseKind::Inner,
            ring: RingDescriptor::Zn { modulus: 6 },
            inputs: InputsEcho::default(),
            witness: None,
            index: None,
            verify: None,
        };
        assert!(r.check().is_err());
        let r = ResultFile { status: Status::NotInvertible, ..r };
        assert!(r.check().is_ok());
    }
}
