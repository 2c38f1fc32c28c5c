use serde_json::{json, Value};

use super::GradedAlgebra;
use crate::abelian::{FinAbGroup, GroupElement};
use crate::error::{Error, Result};
use crate::exactfield::{AnyField, Field};

/// Canonical descriptor: basis reordered stably by degree, constants sorted by `(i, j, k)`.
pub fn algebra_to_json<F: Field>(alg: &GradedAlgebra<F>) -> Value {
    let f = alg.field();
    let mut order: Vec<usize> = (0..alg.dim()).collect();
    order.sort_by(|&x, &y| alg.degree(x).cmp(alg.degree(y)).then(x.cmp(&y)));
    let mut new_index = vec![0; alg.dim()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let mut constants: Vec<(usize, usize, usize, Value)> = alg
        .entries()
        .map(|(i, j, k, c)| (new_index[i], new_index[j], new_index[k], f.elem_to_json(c)))
        .collect();
    constants.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    json!({
        "field": f.descriptor(),
        "group": alg.group(),
        "degrees": order.iter().map(|&i| alg.degree(i).clone()).collect::<Vec<_>>(),
        "unit": order.iter().map(|&i| f.elem_to_json(&alg.unit()[i])).collect::<Vec<_>>(),
        "constants": constants
            .into_iter()
            .map(|(i, j, k, c)| json!({"i": i, "j": j, "k": k, "c": c}))
            .collect::<Vec<_>>(),
    })
}

/// Loads a descriptor; `unit` is optional and solved for when absent.
pub fn algebra_from_json(v: &Value) -> Result<GradedAlgebra<AnyField>> {
    let field = AnyField::from_descriptor(
        v.get("field")
            .ok_or_else(|| Error::Descriptor("algebra descriptor lacks field".into()))?,
    )?;
    let group: FinAbGroup = serde_json::from_value(
        v.get("group")
            .cloned()
            .ok_or_else(|| Error::Descriptor("algebra descriptor lacks group".into()))?,
    )?;
    let group = FinAbGroup::new(group.orders().to_vec())?;
    let degrees: Vec<GroupElement> = serde_json::from_value(
        v.get("degrees")
            .cloned()
            .ok_or_else(|| Error::Descriptor("algebra descriptor lacks degrees".into()))?,
    )?;
    let index = |c: &Value, key: &str| {
        c.get(key)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| Error::Descriptor(format!("constant lacks index {key}: {c}")))
    };
    let entries = match v.get("constants") {
        Some(Value::Array(cs)) => cs
            .iter()
            .map(|c| {
                let val = c
                    .get("c")
                    .ok_or_else(|| Error::Descriptor(format!("constant lacks value: {c}")))?;
                Ok((index(c, "i")?, index(c, "j")?, index(c, "k")?, field.elem_from_json(val)?))
            })
            .collect::<Result<Vec<_>>>()?,
        _ => return Err(Error::Descriptor("algebra descriptor lacks constants array".into())),
    };
    let unit = match v.get("unit") {
        None | Some(Value::Null) => None,
        Some(Value::Array(us)) => Some(us.iter().map(|u| field.elem_from_json(u)).collect::<Result<Vec<_>>>()?),
        Some(other) => return Err(Error::Descriptor(format!("unit must be an array: {other}"))),
    };
    GradedAlgebra::new(field, group, degrees, entries, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rationals;
    use crate::gradedalg::quaternions;

    #[test]
    fn round_trip_is_canonical() {
        let h = quaternions(Rationals::default(), FinAbGroup::new(vec![2]).unwrap());
        let v = algebra_to_json(&h);
        let back = algebra_from_json(&v).unwrap();
        assert_eq!(algebra_to_json(&back), v);
        assert!(back.verify_associative().associative);
    }

    #[test]
    fn malformed_descriptors_are_rejected() {
        assert!(algebra_from_json(&json!({"field": {"kind": "Q"}})).is_err());
        let bad = json!({
            "field": {"kind": "Q"}, "group": {"orders": [2]}, "degrees": [[0]],
            "constants": [{"i": 0, "j": 0, "k": 3, "c": "1"}]
        });
        assert!(matches!(algebra_from_json(&bad), Err(Error::Precondition(_))));
    }
}
