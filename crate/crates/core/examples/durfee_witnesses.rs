//! For small μ, searches for λ with at most k columns and r_λ^μ > 0, and
//! compares with the Durfee-square criterion.

use symfrob::frobenius::{durfee_criterion, witness_search};
use symfrob::partition::partitions_of;

fn main() {
    for k in 1..=2 {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let w = witness_search(&mu, k).unwrap();
                let crit = durfee_criterion(&mu, k);
                assert_eq!(w.is_some(), crit);
                match w {
                    Some(lam) => println!("k={k} mu={mu}: witness {lam}"),
                    None => println!("k={k} mu={mu}: none (Durfee size {})", mu.durfee()),
                }
            }
        }
    }
}
