//! Parsing and printing symmetric-function expressions.

use symfrob::expr::{Expr, ParseOptions};
use symfrob::Basis;

fn main() {
    let e = Expr::parse("p[3]^2 - 2*e[1,1]").unwrap();
    println!("{e}");
    let f = e.eval();
    for basis in [Basis::M, Basis::S, Basis::P] {
        println!("  in {basis}: {}", f.to_expr_string(basis).unwrap());
    }

    match Expr::parse("s[1,2]") {
        Err(err) => println!("s[1,2]: {err}"),
        Ok(_) => unreachable!(),
    }
    let sorted = Expr::parse_with("h[1,3,0]", ParseOptions { sort_indices: true }).unwrap();
    println!("h[1,3,0] with sorted indices: {sorted}");

    let text = "-(h[2] - 1)^2*s[1]";
    let parsed = Expr::parse(text).unwrap();
    assert_eq!(Expr::parse(&parsed.to_string()).unwrap(), parsed);
    println!(
        "{text} -> {parsed} = {}",
        parsed.eval().to_expr_string(Basis::H).unwrap()
    );
}
