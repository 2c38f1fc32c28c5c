//! A Kummer extension graded by Λ/(F^×)^n, its Frobenius counterpart, and the
//! dual action of the character group.

use graded_division::exactfield::ff_construct;
use graded_division::gradedalg::graded_iso_1dim;
use graded_division::gradedfield::{dual_galois_check, frobenius_grading, kummer_grading, KummerSpec};

fn main() -> graded_division::Result<()> {
    let f = ff_construct(7, 1, 0)?;
    let spec = KummerSpec { field: f, n: 3, generators: vec![2] };
    let k = kummer_grading(&spec)?;
    println!("GF(7)(2^(1/3)): dim {}, coset representatives {:?}", k.algebra.dim(), k.coset_reps);
    for (check, verdict) in &k.verification {
        println!("  {check:<28} {verdict}");
    }
    let fr = frobenius_grading(7, 1, 3)?;
    println!("isomorphic to the Frobenius grading: {}", graded_iso_1dim(&k.algebra, &fr.algebra)?.is_some());
    let galois = dual_galois_check(&k.algebra)?;
    println!("character group acts by {} automorphisms: {}", galois.automorphisms, galois.passed());
    Ok(())
}
