//! Generating-function identities for F_Sur^-1 and the falling-factorial
//! corollaries.

use symfrob::frobenius::{
    e1_power_divides, falling_factorial, falling_factorial_divides, fsur, fsurinv,
    fsurinv_h_direct, fsurinveprod, genfunc_identity_check, GenFuncIdentity,
};
use symfrob::{Basis, SymFunc};

fn main() {
    for (l, d) in [(1, 5), (2, 4)] {
        println!(
            "reciprocal identity, l = {l}, through degree {d}: {}",
            genfunc_identity_check(l, d, GenFuncIdentity::Reciprocal)
        );
    }
    for (l, d) in [(1, 6), (2, 3)] {
        println!(
            "product identity, l = {l}, through degree {d}: {}",
            genfunc_identity_check(l, d, GenFuncIdentity::Product)
        );
    }

    let e1 = SymFunc::e(1);
    for k in 0..=4 {
        assert_eq!(fsurinv(&e1.pow(k)), falling_factorial(k));
        println!(
            "F_Sur^-1{{e1^{k}}} = {}",
            falling_factorial(k).to_expr_string(Basis::E).unwrap()
        );
    }
    println!(
        "F_Sur^-1{{h4}} = {}",
        fsurinv_h_direct(4).to_expr_string(Basis::H).unwrap()
    );
    println!(
        "F_Sur^-1{{e2 e1^2}} = {}",
        fsurinveprod(&[2], 2).to_expr_string(Basis::E).unwrap()
    );

    let f = &falling_factorial(2) * &SymFunc::e(3);
    println!(
        "e1(e1-1) divides f: {}; e1^2 divides F_Sur{{f}}: {}",
        falling_factorial_divides(&f, 2),
        e1_power_divides(&fsur(&f), 2)
    );
}
