//! The five coefficient families and their tables.

use symfrob::frobenius::{coeff, coeff_by_operator, CoeffKind, CoeffMatrix, CoeffQuery};
use symfrob::Partition;

fn main() {
    let lam: Partition = "[2]".parse().unwrap();
    let mu: Partition = "[2]".parse().unwrap();
    for kind in CoeffKind::ALL {
        let q = CoeffQuery::new(kind, lam.clone(), mu.clone());
        let by_formula = coeff(&q).unwrap();
        let by_transform = coeff_by_operator(&q).unwrap();
        assert_eq!(by_formula, by_transform);
        println!("{kind}_[2]^[2] = {by_formula}");
    }

    let r = CoeffMatrix::by_formula(CoeffKind::R, 3).unwrap();
    print!(
        "restriction coefficients up to size 3 (rows μ, columns λ):\n{}",
        r.to_csv()
    );
}
