//! Stable restriction coefficients: the unitriangular matrix [a], its
//! inverse [b], and stabilization of r under padding the first row.

use symfrob::frobenius::{
    coeff, stabilization_check, stable_matrix, stable_matrix_inverse, CoeffKind, CoeffQuery,
};
use symfrob::Partition;

fn main() {
    let a = stable_matrix(CoeffKind::A, 4).unwrap();
    let b = stable_matrix(CoeffKind::B, 4).unwrap();
    println!("[a] upper unitriangular: {}", a.is_upper_unitriangular());
    println!("[b] = [a]^-1: {}", stable_matrix_inverse(&a).unwrap() == b);
    println!(
        "[b] signs alternate with size: {}",
        b.has_alternating_signs()
    );
    print!("[b] up to size 4:\n{}", b.to_csv());

    let lam: Partition = "[2,1]".parse().unwrap();
    let mu: Partition = "[1]".parse().unwrap();
    let a_val = coeff(&CoeffQuery::new(CoeffKind::A, lam.clone(), mu.clone())).unwrap();
    for n in 2..=8 {
        let padded = mu.stable_pad(n).unwrap();
        let r = coeff(&CoeffQuery::new(CoeffKind::R, lam.clone(), padded.clone())).unwrap();
        println!("r_[2,1]^{padded} = {r}");
    }
    println!(
        "a_[2,1]^[1] = {a_val}, stabilizes: {}",
        stabilization_check(&lam, &mu).unwrap()
    );
}
