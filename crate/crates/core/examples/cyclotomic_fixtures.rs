//! Two gradings of ℚ(ζ_8) over ℚ, each mapped onto the cyclotomic field.

use graded_division::gradedfield::dual_galois_check;
use graded_division::gradedfield::fixtures::{q_zeta8_fixtures, verify_fixture};

fn main() -> graded_division::Result<()> {
    for fx in q_zeta8_fixtures()? {
        println!("{} over group {:?}", fx.name, fx.algebra.group().orders());
        for (check, verdict) in verify_fixture(&fx)? {
            println!("  {check:<16} {verdict}");
        }
        match dual_galois_check(&fx.algebra) {
            Ok(r) => println!("  dual to Galois: {} automorphisms, {}", r.automorphisms, r.passed()),
            Err(e) => println!("  dual to Galois: not applicable ({e})"),
        }
    }
    Ok(())
}
