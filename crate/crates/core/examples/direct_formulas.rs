//! Closed-form expansions of F_Sur on products of h, e and p, compared with
//! the operator route.

use symfrob::frobenius::{fsur, fsur_e_direct, fsur_h_direct, fsur_p_direct, functions_m};
use symfrob::partition::partitions_of;
use symfrob::{Basis, Partition, SymFunc};

fn main() {
    let lam: Partition = "[2,2]".parse().unwrap();
    println!("functions M for h[2,2]:");
    for m in functions_m(lam.parts(), false) {
        println!("  {:?}", m.values());
    }
    println!(
        "F_Sur{{h[2,2]}} = {}",
        fsur_h_direct(&lam).to_expr_string(Basis::H).unwrap()
    );

    let lam: Partition = "[5,3]".parse().unwrap();
    println!(
        "{} binary functions for e[5,3]",
        functions_m(lam.parts(), true).len()
    );
    println!(
        "F_Sur{{e[5,3]}} = {}",
        fsur_e_direct(&lam).to_expr_string(Basis::E).unwrap()
    );

    let mut agree = 0;
    for n in 1..=8 {
        for lam in partitions_of(n) {
            let p = SymFunc::from_basis(Basis::P, &lam);
            assert_eq!(fsur_p_direct(&lam), fsur(&p));
            agree += 1;
        }
    }
    println!("p-formula agrees with the operator on {agree} power sums");
}
