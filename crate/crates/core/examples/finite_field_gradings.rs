//! Which GF(p^{ℓk}) admit a ℤ_k-grading over GF(p^ℓ), and the Frobenius
//! eigenspace grading for prime k.

use graded_division::gradedfield::{ff_grading_exists, frobenius_grading};

fn main() -> graded_division::Result<()> {
    println!("ℤ_k-gradings of GF(p^k) over GF(p)  (+ exists, . none)");
    print!("{:>4}", "p\\k");
    for k in 2..=12 {
        print!("{k:>3}");
    }
    println!();
    for p in [2, 3, 5, 7, 11, 13] {
        print!("{p:>4}");
        for k in 2..=12 {
            print!("{:>3}", if ff_grading_exists(p, 1, k)?.exists { "+" } else { "." });
        }
        println!();
    }

    for (p, ell, q) in [(7, 1, 3), (3, 2, 2), (2, 2, 3)] {
        let fg = frobenius_grading(p, ell, q)?;
        println!(
            "GF({p}^{}) graded by ℤ_{q} over GF({p}^{ell}): dim {}, checks {}",
            ell * q as u32,
            fg.algebra.dim(),
            if fg.passed() { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
