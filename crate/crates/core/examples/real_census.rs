//! Census of real graded-division algebras for a few small gradings groups.
//!
//! ```text
//! cargo run --example real_census -- 2,2 --all-subgroups
//! ```

use std::time::Instant;

use graded_division::abelian::FinAbGroup;
use graded_division::realclass::{classify_all, ClassifyOptions};

fn main() -> graded_division::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let all_subgroups = args.iter().any(|a| a == "--all-subgroups");
    let groups: Vec<Vec<u64>> = match args.iter().find(|a| !a.starts_with("--")) {
        Some(spec) => vec![spec.split(',').map(|x| x.trim().parse().expect("group order")).collect()],
        None => vec![vec![], vec![2], vec![3], vec![4], vec![2, 2], vec![2, 4], vec![2, 2, 2]],
    };
    let opts = ClassifyOptions {
        all_subgroups,
        ..ClassifyOptions::default()
    };
    println!("{:<10} {:>4} {:>4} {:>4} {:>4} {:>6}  oracles  distinct  seconds", "G", "1", "2", "3", "4", "total");
    for orders in groups {
        let g = FinAbGroup::new(orders.clone())?;
        let start = Instant::now();
        let census = classify_all(&g, &opts)?;
        let c = census.counts();
        let n = |i: u8| c.get(&i).copied().unwrap_or(0);
        println!(
            "{:<10} {:>4} {:>4} {:>4} {:>4} {:>6}  {:<7}  {:<8}  {:.2}",
            format!("{orders:?}"),
            n(1),
            n(2),
            n(3),
            n(4),
            census.entries.len(),
            census.all_passed(),
            census.invariants_pairwise_distinct(),
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
