//! When is ⊗ ℚ[X_i]/(X_i^{n_i} − μ_i) a field? Decisions with witnesses.

use graded_division::exactfield::{AnyElem, AnyField, Field, Rationals};
use graded_division::gradedfield::{is_field_general, GradedFieldSpec};

fn main() -> graded_division::Result<()> {
    let q = Rationals::default();
    let cases: &[(&[u64], &[i64])] = &[
        (&[2, 2], &[2, 3]),
        (&[2, 2], &[2, 8]),
        (&[2, 2, 2], &[2, 3, 6]),
        (&[2, 2], &[-1, -3]),
        (&[4], &[-4]),
        (&[3, 2], &[2, 3]),
        (&[6], &[5]),
        (&[2, 8], &[2, 3]),
    ];
    let field = AnyField::Q(q.clone());
    for (orders, mu) in cases {
        let mu: Vec<AnyElem> = mu.iter().map(|&m| AnyElem::Rat(q.from_int(m))).collect();
        let spec = GradedFieldSpec::new(field.clone(), orders.to_vec(), mu)?;
        let d = is_field_general(&spec)?;
        println!("{orders:?} {:<28} {}", format!("{}", spec.to_json()["mu"]), d.to_json(&field));
    }
    Ok(())
}
