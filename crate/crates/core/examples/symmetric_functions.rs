//! Basis changes, the Hall inner product, skewing, plethysm and the
//! Kronecker product.

use symfrob::symfunc::{standard_series, StandardSeries};
use symfrob::{Basis, Partition, SymFunc};

fn main() {
    let lam: Partition = "[2,1]".parse().unwrap();
    let s21 = SymFunc::from_basis(Basis::S, &lam);
    for basis in Basis::ALL {
        let coords: Vec<String> = s21
            .to_basis(basis)
            .iter()
            .map(|(mu, c)| format!("{c}*{}{mu}", basis.tag()))
            .collect();
        println!("s[2,1] = {}", coords.join(" + "));
    }

    let p21 = SymFunc::from_basis(Basis::P, &lam);
    println!("<p[2,1], p[2,1]> = {}", p21.hall(&p21).unwrap());

    // H^⊥ s_λ is the sum of s_μ over horizontal strips λ/μ
    let h = standard_series(StandardSeries::H, 3);
    println!(
        "H^perp s[2,1] = {}",
        s21.skewed_by(&h).unwrap().to_expr_string(Basis::S).unwrap()
    );

    let h2 = SymFunc::h(2);
    println!(
        "h2[h2] = {}",
        h2.plethysm(&h2).to_expr_string(Basis::S).unwrap()
    );
    println!(
        "s[2,1] * s[2,1] = {}",
        s21.kronecker(&s21).to_expr_string(Basis::S).unwrap()
    );
    println!(
        "omega s[2,1] = {}",
        s21.omega().to_expr_string(Basis::S).unwrap()
    );
}
