//! A ℤ_2²×ℤ_3²-graded division algebra over ℚ(ζ_3) split into its 2- and
//! 3-primary tensor factors.

use graded_division::abelian::FinAbGroup;
use graded_division::exactfield::{CyclotomicField, Field};
use graded_division::quasitorus::{construct, primary_decompose, verify_primary_tensor, AltBicharacter, MuFunction};

fn main() -> graded_division::Result<()> {
    let f = CyclotomicField::new(3);
    let g = FinAbGroup::new(vec![2, 2, 3, 3])?;
    // quaternion part on the ℤ_2² factor, symbol algebra (ζ_3) on the ℤ_3² factor
    let beta = AltBicharacter::from_angles(&g, &[(0, 1, 1, 2), (2, 3, 1, 3)])?;
    let mu = MuFunction::new(f.clone(), &g, vec![f.from_int(-1), f.from_int(-1), f.from_int(2), f.from_int(5)])?;
    let a = construct(&beta, &mu)?;
    println!("D: dim {}, graded division: {}", a.dim(), a.is_graded_division()?);
    let parts = primary_decompose(&a)?;
    for (p, part) in &parts {
        println!("  {p}-primary part: dim {}, group {:?}", part.dim(), part.group().orders());
    }
    println!("tensor product of the parts reproduces D: {}", verify_primary_tensor(&a, &parts));
    Ok(())
}
