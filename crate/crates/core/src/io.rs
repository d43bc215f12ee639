//! JSON formats for complexes, partitioned complexes and set families.
//!
//! Writers are canonical: one line, facets sorted, so that writing a loaded
//! canonical document reproduces it byte for byte.
//!
//! ```text
//! {"vertices":["a","b","c"],"facets":[[0,1],[1,2]]}
//! {"vertices":["1","2"],"facets":[[0],[1]],"parts":[[0,1]]}
//! {"d":1,"members":{"G1":[[[0,1]],[[2,3]]],"G2":[[["1/2","5/2"]]]}}
//! {"atoms":3,"members":{"ab":[0,1],"bc":[1,2]}}
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::helly::{AtomFamily, AxisBox, Interval, SetFamily, UnionFamily};
use crate::multiproj::PartitionedComplex;

#[derive(Deserialize)]
#[serde(untagged)]
enum Label {
    Text(String),
    Number(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    vertices: Option<Vec<Label>>,
    facets: Vec<Vec<i64>>,
    parts: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize)]
struct OutComplex<'a> {
    vertices: Vec<String>,
    facets: &'a [Simplex],
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<&'a [Vec<usize>]>,
}

fn vertex_id(v: i64, field: &str, n: Option<usize>) -> Result<usize> {
    if v < 0 {
        return Err(Error::Format(format!("{field}: negative vertex id {v}")));
    }
    let v = v as usize;
    if let Some(n) = n {
        if v >= n {
            return Err(Error::Format(format!(
                "{field}: vertex {v} is outside the {n} listed vertices"
            )));
        }
    }
    Ok(v)
}

fn parse_raw(text: &str) -> Result<RawComplex> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn build_complex(raw: &RawComplex) -> Result<SimplicialComplex> {
    if raw.facets.is_empty() && raw.vertices.is_none() {
        return Err(Error::Format(
            "facets: empty list (write \"vertices\": [] as well to mean the void complex)".into(),
        ));
    }
    let n = raw.vertices.as_ref().map(Vec::len);
    let mut facets = Vec::with_capacity(raw.facets.len());
    for (i, f) in raw.facets.iter().enumerate() {
        let ids = f
            .iter()
            .enumerate()
            .map(|(j, &v)| vertex_id(v, &format!("facets[{i}][{j}]"), n))
            .collect::<Result<Vec<usize>>>()?;
        facets.push(Simplex::new(ids));
    }
    let count = n.unwrap_or_else(|| {
        facets
            .iter()
            .filter_map(|f| f.vertices().last())
            .max()
            .map_or(0, |m| m + 1)
    });
    let complex = SimplicialComplex::on_vertices(count, facets).map_err(|e| match e {
        Error::PhantomVertex(v) => Error::Format(format!("vertices[{v}]: vertex lies in no facet")),
        e => e,
    })?;
    match &raw.vertices {
        Some(labels) => complex.with_labels(
            labels
                .iter()
                .map(|l| match l {
                    Label::Text(s) => s.clone(),
                    Label::Number(v) => v.to_string(),
                })
                .collect(),
        ),
        None => Ok(complex),
    }
}

/// Reads a complex; a `parts` field, if present, is ignored.
pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    build_complex(&parse_raw(text)?)
}

fn labels_of(x: &SimplicialComplex) -> Vec<String> {
    (0..x.vertex_count()).map(|v| x.label(v)).collect()
}

pub fn complex_to_json(x: &SimplicialComplex) -> String {
    let out = OutComplex {
        vertices: labels_of(x),
        facets: x.facets(),
        parts: None,
    };
    serde_json::to_string(&out).expect("serializable") + "\n"
}

pub fn partitioned_from_json(text: &str) -> Result<PartitionedComplex> {
    let raw = parse_raw(text)?;
    let complex = build_complex(&raw)?;
    let Some(parts) = &raw.parts else {
        return Err(Error::Format("missing field `parts`".into()));
    };
    let n = Some(complex.vertex_count());
    let parts = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            p.iter()
                .enumerate()
                .map(|(j, &v)| vertex_id(v, &format!("parts[{i}][{j}]"), n))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PartitionedComplex::new(complex, parts)
}

pub fn partitioned_to_json(px: &PartitionedComplex) -> String {
    let out = OutComplex {
        vertices: labels_of(px.complex()),
        facets: px.complex().facets(),
        parts: Some(px.parts()),
    };
    serde_json::to_string(&out).expect("serializable") + "\n"
}

/// Parses `"p/q"`, `"p"` or an integer.
pub fn parse_rational(value: &Value, field: &str) -> Result<BigRational> {
    let bad = |why: &str| Error::Format(format!("{field}: {why}"));
    match value {
        Value::Number(n) => n
            .as_i64()
            .map(|v| BigRational::from_integer(v.into()))
            .ok_or_else(|| bad("numbers must be integers; write fractions as \"p/q\" strings")),
        Value::String(s) => {
            let (p, q) = s.split_once('/').unwrap_or((s, "1"));
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| bad(&format!("malformed rational {s:?}")))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| bad(&format!("malformed rational {s:?}")))?;
            if q.is_zero() {
                return Err(bad(&format!("malformed rational {s:?} (zero denominator)")));
            }
            Ok(BigRational::new(p, q))
        }
        _ => Err(bad("expected a rational")),
    }
}

fn rational_value(r: &BigRational) -> Value {
    if r.is_integer() {
        if let Some(v) = r.numer().to_i64() {
            return Value::from(v);
        }
    }
    Value::from(r.to_string())
}

/// A family read from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Boxes(UnionFamily),
    Atoms(AtomFamily),
}

fn members_of(obj: &Map<String, Value>) -> Result<&Map<String, Value>> {
    obj.get("members")
        .ok_or_else(|| Error::Format("missing field `members`".into()))?
        .as_object()
        .ok_or_else(|| Error::Format("members: expected an object of named members".into()))
}

fn array<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Format(format!("{field}: expected an array")))
}

pub fn family_from_json(text: &str) -> Result<Family> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Format("expected a JSON object".into()))?;
    for key in obj.keys() {
        if !["d", "atoms", "members"].contains(&key.as_str()) {
            return Err(Error::Format(format!("unknown field `{key}`")));
        }
    }
    let members = members_of(obj)?;
    if let Some(atoms) = obj.get("atoms") {
        let n = atoms
            .as_u64()
            .ok_or_else(|| Error::Format("atoms: expected a natural number".into()))? as usize;
        let mut out = Vec::new();
        for (name, m) in members {
            let field = format!("members.{name}");
            let ids = array(m, &field)?
                .iter()
                .enumerate()
                .map(|(j, a)| {
                    let f = format!("{field}[{j}]");
                    vertex_id(
                        a.as_i64()
                            .ok_or_else(|| Error::Format(format!("{f}: expected an atom id")))?,
                        &f,
                        Some(n),
                    )
                })
                .collect::<Result<Vec<usize>>>()?;
            out.push((name.clone(), ids));
        }
        return Ok(Family::Atoms(AtomFamily::new(n, out)?));
    }
    let d = obj
        .get("d")
        .ok_or_else(|| Error::Format("missing field `d`".into()))?
        .as_u64()
        .ok_or_else(|| Error::Format("d: expected a natural number".into()))? as usize;
    let mut out = Vec::new();
    for (name, m) in members {
        let field = format!("members.{name}");
        let mut boxes = Vec::new();
        for (j, b) in array(m, &field)?.iter().enumerate() {
            let bf = format!("{field}[{j}]");
            let axes = array(b, &bf)?;
            if axes.len() != d {
                return Err(Error::Format(format!(
                    "{bf}: expected {d} intervals, found {}",
                    axes.len()
                )));
            }
            let mut intervals = Vec::new();
            for (a, pair) in axes.iter().enumerate() {
                let af = format!("{bf}[{a}]");
                let pair = array(pair, &af)?;
                if pair.len() != 2 {
                    return Err(Error::Format(format!("{af}: expected [lo, hi]")));
                }
                let lo = parse_rational(&pair[0], &format!("{af}[0]"))?;
                let hi = parse_rational(&pair[1], &format!("{af}[1]"))?;
                intervals.push(Interval::new(lo, hi).map_err(|e| Error::Format(format!("{af}: {e}")))?);
            }
            boxes.push(AxisBox::new(intervals));
        }
        out.push((name.clone(), boxes));
    }
    Ok(Family::Boxes(UnionFamily::new(d, out)?))
}

pub fn family_to_json(f: &Family) -> String {
    let mut root = Map::new();
    let mut members = Map::new();
    match f {
        Family::Boxes(u) => {
            root.insert("d".into(), Value::from(u.dimension()));
            for (name, boxes) in u.names().iter().zip(u.members()) {
                let boxes: Vec<Value> = boxes
                    .iter()
                    .map(|b| {
                        Value::Array(
                            b.intervals()
                                .iter()
                                .map(|iv| Value::Array(vec![rational_value(iv.lo()), rational_value(iv.hi())]))
                                .collect(),
                        )
                    })
                    .collect();
                members.insert(name.clone(), Value::Array(boxes));
            }
        }
        Family::Atoms(a) => {
            root.insert("atoms".into(), Value::from(a.atom_count()));
            for (i, m) in a.members().iter().enumerate() {
                members.insert(a.name(i), Value::from(m.iter().copied().collect::<Vec<usize>>()));
            }
        }
    }
    root.insert("members".into(), Value::Object(members));
    serde_json::to_string(&Value::Object(root)).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let text = "{\"vertices\":[\"a\",\"b\",\"c\"],\"facets\":[[0,1],[0,2],[1,2]]}\n";
        let x = complex_from_json(text).unwrap();
        assert_eq!(x, SimplicialComplex::boundary_complex(3).unwrap());
        assert_eq!(complex_to_json(&x), text);
    }

    #[test]
    fn non_maximal_facets_are_canonicalized() {
        let x = complex_from_json(r#"{"vertices":["a","b","c"],"facets":[[2,1],[1],[0,1]]}"#).unwrap();
        assert_eq!(
            complex_to_json(&x),
            "{\"vertices\":[\"a\",\"b\",\"c\"],\"facets\":[[0,1],[1,2]]}\n"
        );
    }

    #[test]
    fn void_and_empty() {
        let void = complex_from_json(r#"{"vertices":[],"facets":[]}"#).unwrap();
        assert!(void.is_void());
        assert!(complex_from_json(r#"{"facets":[]}"#).is_err());
        let empty = complex_from_json(r#"{"vertices":[],"facets":[[]]}"#).unwrap();
        assert!(empty.is_empty_complex());
        assert_eq!(complex_to_json(&empty), "{\"vertices\":[],\"facets\":[[]]}\n");
    }

    #[test]
    fn complex_errors_name_the_field() {
        let e = complex_from_json(r#"{"vertices":["a"],"facets":[[0,3]]}"#).unwrap_err();
        assert!(e.to_string().contains("facets[0][1]"), "{e}");
        let e = complex_from_json(r#"{"vertices":["a","b"],"facets":[[0]]}"#).unwrap_err();
        assert!(e.to_string().contains("vertices[1]"), "{e}");
        let e = complex_from_json(r#"{"facets":[[-1]]}"#).unwrap_err();
        assert!(e.to_string().contains("negative"), "{e}");
        let e = complex_from_json("{\"facets\":\n[[0],]}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        assert!(complex_from_json(r#"{"facets":[[0]],"extra":1}"#).is_err());
    }

    #[test]
    fn partitioned_round_trip() {
        let px = crate::multiproj::extremal_example(2, 2).unwrap();
        let text = partitioned_to_json(&px);
        let back = partitioned_from_json(&text).unwrap();
        assert_eq!(back, px);
        assert_eq!(partitioned_to_json(&back), text);
        assert!(text.starts_with("{\"vertices\":[\"1.1\",\"1.2\",\"2.1\""));
        let bad = r#"{"vertices":["a","b"],"facets":[[0,1]],"parts":[[0,1]]}"#;
        assert!(matches!(partitioned_from_json(bad), Err(Error::InvalidPartition(_))));
        assert!(partitioned_from_json(r#"{"facets":[[0]]}"#).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational(&Value::from("3/6"), "x").unwrap(),
            crate::helly::ratio(1, 2)
        );
        assert_eq!(
            parse_rational(&Value::from(-2), "x").unwrap(),
            crate::helly::ratio(-2, 1)
        );
        assert_eq!(
            parse_rational(&Value::from("7"), "x").unwrap(),
            crate::helly::ratio(7, 1)
        );
        for bad in [Value::from("1/0"), Value::from("a/2"), Value::from(0.5), Value::Null] {
            assert!(matches!(parse_rational(&bad, "x"), Err(Error::Format(_))));
        }
    }

    #[test]
    fn family_round_trip() {
        let text = "{\"d\":2,\"members\":{\"G1\":[[[0,1],[0,1]],[[2,3],[0,1]]],\"G2\":[[[\"1/2\",\"5/2\"],[0,1]]],\"E\":[]}}\n";
        let f = family_from_json(text).unwrap();
        let Family::Boxes(u) = &f else { panic!() };
        assert_eq!(u.len(), 3);
        assert!(u.meets(&[0, 1]));
        assert!(u.member(2).is_none());
        assert_eq!(family_to_json(&f), text);
        let atoms = "{\"atoms\":3,\"members\":{\"ab\":[0,1],\"bc\":[1,2],\"ca\":[0,2]}}\n";
        let a = family_from_json(atoms).unwrap();
        assert_eq!(family_to_json(&a), atoms);
    }

    #[test]
    fn family_errors_name_the_field() {
        let e = family_from_json(r#"{"d":1,"members":{"G1":[[["1/0",1]]]}}"#).unwrap_err();
        assert!(e.to_string().contains("members.G1[0][0][0]"), "{e}");
        let e = family_from_json(r#"{"d":2,"members":{"G1":[[[0,1]]]}}"#).unwrap_err();
        assert!(e.to_string().contains("expected 2 intervals"), "{e}");
        let e = family_from_json(r#"{"d":1,"members":{"G1":[[[2,1]]]}}"#).unwrap_err();
        assert!(matches!(e, Error::Format(_)));
        assert!(family_from_json(r#"{"members":{}}"#).is_err());
    }
}
