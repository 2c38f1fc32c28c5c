//! Hamilton's quaternions as a ℤ_2²-graded division algebra over ℝ, next to the
//! split algebra M_2(ℝ) with the same commutation bicharacter.

use graded_division::abelian::FinAbGroup;
use graded_division::exactfield::{Field, Reals};
use graded_division::gradedalg::graded_iso_1dim;
use graded_division::quasitorus::{commutation_bicharacter, construct, mu_invariant, AltBicharacter, MuFunction};

fn main() -> graded_division::Result<()> {
    let r = Reals::default();
    let g = FinAbGroup::new(vec![2, 2])?;
    let beta = AltBicharacter::from_signs(&g, &[(0, 1)])?;

    let h = construct(&beta, &MuFunction::new(r.clone(), &g, vec![r.from_int(-1), r.from_int(-1)])?)?;
    let split = construct(&beta, &MuFunction::new(r.clone(), &g, vec![r.from_int(1), r.from_int(1)])?)?;

    for (name, a) in [("H", &h), ("M2(R) grading", &split)] {
        println!("{name}: dim {}", a.dim());
        for (check, verdict) in a.verification_log() {
            println!("  {check:<16} {verdict}");
        }
        let b = commutation_bicharacter(a)?;
        let mu = mu_invariant(a)?;
        let squares: Vec<String> = mu.values().iter().map(|x| r.fmt_elem(x)).collect();
        println!("  β(a,b) = -1: {}   μ on generators: {squares:?}", !b.is_trivial());
    }
    // graded division in both cases; only the norm form tells them apart
    println!("H ≅ M2(R) as graded algebras: {}", graded_iso_1dim(&h, &split)?.is_some());
    Ok(())
}
