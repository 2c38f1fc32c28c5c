//! Irreducibility of X^n − α: the criterion against Rabin's test over finite
//! fields, and explicit factors read off each obstruction.

use graded_division::exactfield::{ff_construct, poly, Field, Rationals};
use graded_division::gradedfield::{binomial_factor, binomial_obstruction};

fn main() -> graded_division::Result<()> {
    let q = Rationals::default();
    for (alpha, n) in [(2, 4), (-4, 4), (-1, 4), (9, 2), (8, 3), (-64, 12), (3, 6)] {
        let a = q.from_int(alpha);
        match binomial_obstruction(&q, &a, n)? {
            None => println!("X^{n} - ({alpha}) irreducible over Q"),
            Some(ob) => {
                let (g, h) = binomial_factor(&q, &a, n, &ob)?.expect("rational obstruction has a witness");
                let show = |p: &Vec<_>| p.iter().map(|c| q.fmt_elem(c)).collect::<Vec<_>>().join(" ");
                println!("X^{n} - ({alpha}) reducible by {}: [{}] * [{}]", ob.condition(), show(&g), show(&h));
            }
        }
    }

    let mut agree = 0usize;
    let mut total = 0usize;
    for (p, ell) in [(2, 3), (3, 2), (5, 1), (7, 1), (13, 1)] {
        let f = ff_construct(p, ell, 0)?;
        for alpha in f.elements().unwrap().into_iter().filter(|x| !f.is_zero(x)) {
            for n in 1..=12u64 {
                let criterion = binomial_obstruction(&f, &alpha, n)?.is_none();
                let rabin = poly::is_irreducible_finite(&f, &poly::binomial(&f, n as usize, &alpha));
                agree += usize::from(criterion == rabin);
                total += 1;
            }
        }
    }
    println!("finite fields: criterion agrees with Rabin on {agree}/{total} binomials");
    Ok(())
}
