//! The transform evaluated through permutation eigenvalues, checked against
//! F_Sur{f} · H, and a few character values.

use symfrob::frobenius::frobenius_series;
use symfrob::oracles::{character_value, frobenius_via_roots, EvalAtUnity};
use symfrob::{Basis, Partition, SymFunc};

fn main() {
    let mu: Partition = "[3,2,2]".parse().unwrap();
    let ev = EvalAtUnity::new(mu.clone());
    let pk: Vec<String> = (1..=6).map(|k| ev.power_sum(k).to_string()).collect();
    println!("p_k at Xi_{mu}, k = 1..6: {}", pk.join(" "));

    for src in ["[2]", "[1,1]", "[2,1]", "[3]"] {
        let f = SymFunc::from_basis(Basis::S, &src.parse().unwrap());
        let roots = frobenius_via_roots(&f, 5);
        assert_eq!(roots, frobenius_series(&f, 5));
        println!(
            "F{{s{src}}} through degree 5 = {}",
            roots.truncated().to_expr_string(Basis::S).unwrap()
        );
    }

    let lam: Partition = "[2,1]".parse().unwrap();
    for rho in ["[1,1,1]", "[2,1]", "[3]"] {
        let rho: Partition = rho.parse().unwrap();
        println!(
            "chi_{lam}({rho}) = {}",
            character_value(&lam, &rho).unwrap()
        );
    }
}
