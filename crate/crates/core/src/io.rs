//! JSON files for objects, maps and arrows.
//!
//! An object is `{"dims": N, "cells": [{"id", "dim", "marked", "faces"}]}`
//! where `faces` maps a face key (`"i,e"` for cubes, `"j"` for simplices) to
//! `{"op": operator, "cell": id}`.  A map is `{"assign": {src-id: {"op",
//! "cell"}}}` and an arrow adds `"src"` and `"tgt"` objects to a map.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::operator::Operator;
use crate::presheaf::{Arrow, Cube, Presheaf, PresheafMap};

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| schema(path, format!("missing field `{key}`")))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn cube_json<O: Operator>(x: &Presheaf<O>, c: &Cube<O>) -> Value {
    json!({"op": c.op.to_string(), "cell": x.id(c.cell)})
}

fn parse_cube<O: Operator>(v: &Value, src_dim: usize, tgt: &Presheaf<O>, path: &str) -> Result<Cube<O>> {
    let op_text = as_str(field(v, "op", path)?, &format!("{path}.op"))?;
    let op = O::parse(op_text, Some(src_dim)).map_err(|e| schema(&format!("{path}.op"), e.to_string()))?;
    let id = as_str(field(v, "cell", path)?, &format!("{path}.cell"))?;
    let cell = tgt.find(id).ok_or_else(|| schema(&format!("{path}.cell"), format!("unknown cell `{id}`")))?;
    if op.src_dim() != src_dim || op.tgt_dim() != tgt.dim(cell) {
        return Err(schema(path, format!("operator `{op}` does not go from dimension {src_dim} to the dimension of `{id}`")));
    }
    if !op.is_down() {
        return Err(schema(&format!("{path}.op"), format!("`{op}` is not a degeneracy-type operator")));
    }
    Ok(Cube { op, cell })
}

pub fn object_to_json<O: Operator>(x: &Presheaf<O>) -> Value {
    let cells: Vec<Value> = (0..x.len())
        .map(|c| {
            let n = x.dim(c);
            let faces: Map<String, Value> =
                (0..O::face_count(n)).map(|g| (O::face_key(g), cube_json(x, x.face(c, g)))).collect();
            json!({"id": x.id(c), "dim": n, "marked": x.is_marked(c), "faces": faces})
        })
        .collect();
    json!({"dims": x.max_dim().unwrap_or(0), "cells": cells})
}

pub fn object_from_json<O: Operator>(v: &Value) -> Result<Presheaf<O>> {
    let dims = as_usize(field(v, "dims", "$")?, "$.dims")?;
    let cells = field(v, "cells", "$")?.as_array().ok_or_else(|| schema("$.cells", "expected an array"))?;
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(cells.len());
    for (k, c) in cells.iter().enumerate() {
        let path = format!("$.cells[{k}]");
        let dim = as_usize(field(c, "dim", &path)?, &format!("{path}.dim"))?;
        if dim > dims {
            return Err(schema(&format!("{path}.dim"), format!("dimension {dim} exceeds dims = {dims}")));
        }
        order.push((dim, k));
    }
    order.sort();
    let mut x = Presheaf::new();
    for (dim, k) in order {
        let c = &cells[k];
        let path = format!("$.cells[{k}]");
        let id = as_str(field(c, "id", &path)?, &format!("{path}.id"))?;
        let marked = match c.get("marked") {
            None => false,
            Some(m) => m.as_bool().ok_or_else(|| schema(&format!("{path}.marked"), "expected a boolean"))?,
        };
        let mut faces: Vec<Option<Cube<O>>> = vec![None; O::face_count(dim)];
        if dim > 0 {
            let table = as_object(field(c, "faces", &path)?, &format!("{path}.faces"))?;
            for (key, entry) in table {
                let fpath = format!("{path}.faces.{key}");
                let g = O::parse_face_key(key, dim).ok_or_else(|| schema(&fpath, "not a face key for this dimension"))?;
                faces[g] = Some(parse_cube(entry, dim - 1, &x, &fpath)?);
            }
        }
        let faces = faces
            .into_iter()
            .enumerate()
            .map(|(g, f)| f.ok_or_else(|| schema(&format!("{path}.faces"), format!("missing face `{}`", O::face_key(g)))))
            .collect::<Result<Vec<_>>>()?;
        x.add_cell(id, dim, marked, faces).map_err(|e| schema(&path, e.to_string()))?;
    }
    x.validate()?;
    Ok(x)
}

pub fn map_to_json<O: Operator>(src: &Presheaf<O>, tgt: &Presheaf<O>, f: &PresheafMap<O>) -> Value {
    let assign: Map<String, Value> =
        f.assign.iter().enumerate().map(|(c, img)| (src.id(c).to_string(), cube_json(tgt, img))).collect();
    json!({"assign": assign})
}

pub fn map_from_json<O: Operator>(v: &Value, src: &Presheaf<O>, tgt: &Presheaf<O>) -> Result<PresheafMap<O>> {
    let table = as_object(field(v, "assign", "$")?, "$.assign")?;
    let mut assign: Vec<Option<Cube<O>>> = vec![None; src.len()];
    for (key, entry) in table {
        let path = format!("$.assign.{key}");
        let c = src.find(key).ok_or_else(|| schema(&path, "not a cell of the source"))?;
        assign[c] = Some(parse_cube(entry, src.dim(c), tgt, &path)?);
    }
    let assign = assign
        .into_iter()
        .enumerate()
        .map(|(c, a)| a.ok_or_else(|| schema("$.assign", format!("no image for `{}`", src.id(c)))))
        .collect::<Result<Vec<_>>>()?;
    let f = PresheafMap { assign };
    f.validate(src, tgt)?;
    Ok(f)
}

pub fn arrow_to_json<O: Operator>(f: &Arrow<O>) -> Value {
    let mut v = map_to_json(&f.src, &f.tgt, &f.map);
    v["src"] = object_to_json(&f.src);
    v["tgt"] = object_to_json(&f.tgt);
    v
}

pub fn arrow_from_json<O: Operator>(v: &Value) -> Result<Arrow<O>> {
    let nested = |key: &str| -> Result<Presheaf<O>> {
        object_from_json(field(v, key, "$")?).map_err(|e| match e {
            Error::Schema { path, message } => Error::Schema { path: path.replacen('$', &format!("$.{key}"), 1), message },
            other => other,
        })
    };
    let (src, tgt) = (nested("src")?, nested("tgt")?);
    let map = map_from_json(v, &src, &tgt)?;
    Arrow::new(src, tgt, map)
}

pub fn parse_object<O: Operator>(text: &str) -> Result<Presheaf<O>> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))?;
    object_from_json(&v)
}

pub fn parse_arrow<O: Operator>(text: &str) -> Result<Arrow<O>> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))?;
    arrow_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeset::{comical_box_inclusion, comical_cube, MarkedCubicalSet};
    use crate::gray::{tensor, TensorMode};
    use crate::simpset::{complicial, MarkedSimplicialSet};

    #[test]
    fn round_trips() {
        let objects: Vec<MarkedCubicalSet> = vec![
            comical_cube(3, 2, 0).unwrap(),
            tensor(&crate::cubeset::cube(1), &crate::cubeset::marked_cube(1), TensorMode::Pseudo).object,
            crate::cubeset::cubical_nerve(&crate::category::FiniteCategory::free_isomorphism(), 2).unwrap(),
        ];
        for x in objects {
            let back: MarkedCubicalSet = object_from_json(&object_to_json(&x)).unwrap();
            assert_eq!(back, x);
        }
        let s = complicial(3, 1).unwrap();
        let back: MarkedSimplicialSet = parse_object(&object_to_json(&s).to_string()).unwrap();
        assert_eq!(back, s);
        let f = comical_box_inclusion(3, 1, 1).unwrap();
        let g = arrow_from_json(&arrow_to_json(&f)).unwrap();
        assert_eq!((g.src, g.tgt, g.map), (f.src, f.tgt, f.map));
    }

    #[test]
    fn schema_errors_name_the_path() {
        let bad = r#"{"dims": 1, "cells": [{"id": "a", "dim": 0}, {"id": "f", "dim": 1, "faces": {"1,0": {"op": "id", "cell": "a"}}}]}"#;
        match parse_object::<crate::boxcat::BoxOperator>(bad) {
            Err(Error::Schema { path, message }) => {
                assert_eq!(path, "$.cells[1].faces");
                assert!(message.contains("1,1"));
            }
            other => panic!("{other:?}"),
        }
        let bad = r#"{"dims": 1, "cells": [{"id": "a", "dim": 0}, {"id": "f", "dim": 1, "faces": {"1,0": {"op": "id", "cell": "b"}, "1,1": {"op": "id", "cell": "a"}}}]}"#;
        assert!(matches!(parse_object::<crate::boxcat::BoxOperator>(bad), Err(Error::Schema { path, .. }) if path == "$.cells[1].faces.1,0.cell"));
        assert!(matches!(parse_object::<crate::boxcat::BoxOperator>("[1"), Err(Error::Schema { .. })));
    }
}
