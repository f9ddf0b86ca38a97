//! The surjective Frobenius transform, its inverse, and the full transform
//! as a truncated series.

use symfrob::expr::Expr;
use symfrob::frobenius::{
    frobenius_series, fsur, fsurinv, stable_transform, stable_transform_inverse, tilde_h, tilde_s,
};
use symfrob::{Basis, Partition};

fn main() {
    for (src, basis) in [
        ("h[2,2]", Basis::H),
        ("e[5,3]", Basis::E),
        ("p[6]", Basis::P),
        ("s[2,1]", Basis::S),
    ] {
        let f = Expr::parse(src).unwrap().eval();
        println!(
            "F_Sur{{{src}}} = {}",
            fsur(&f).to_expr_string(basis).unwrap()
        );
        println!(
            "F_Sur^-1{{{src}}} = {}",
            fsurinv(&f).to_expr_string(basis).unwrap()
        );
    }

    let e1 = Expr::parse("e[1]").unwrap().eval();
    let series = frobenius_series(&e1, 4);
    println!(
        "F{{e[1]}} through degree 4 = {}",
        series.truncated().to_expr_string(Basis::S).unwrap()
    );

    let lam: Partition = "[2,1]".parse().unwrap();
    println!(
        "h~[2,1] = {}",
        tilde_h(&lam).to_expr_string(Basis::H).unwrap()
    );
    println!(
        "s~[2,1] = {}",
        tilde_s(&lam).to_expr_string(Basis::S).unwrap()
    );

    // the stable transform H^⊥ F_Sur and its inverse
    let s21 = Expr::parse("s[2,1]").unwrap().eval();
    let inv = stable_transform_inverse(&s21);
    assert_eq!(stable_transform(&inv), s21);
    println!(
        "stable transform of s[2,1] = {}",
        stable_transform(&s21).to_expr_string(Basis::S).unwrap()
    );
    println!(
        "its inverse on s[2,1] = {}",
        inv.to_expr_string(Basis::S).unwrap()
    );
}
