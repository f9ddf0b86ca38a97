//! Lyndon factorization, the partition π(w), necklace counts and the word
//! formula for F_Sur^-1 on e-products.

use symfrob::frobenius::{fsurinv, fsurinv_e_words};
use symfrob::lyndon::{enumerate_lyndon, lyndon_words, witt_count, Alphabet, Word};
use symfrob::{Basis, SymFunc};

fn main() {
    let w = Word::parse("21212121111", None).unwrap();
    let factors: Vec<String> = w.factorize().iter().map(|f| format!("({f})")).collect();
    println!("{w} = {}  pi = {}", factors.concat(), w.pi());

    for l in 1..=3 {
        let counts: Vec<String> = (1..=8).map(|n| witt_count(l, n).to_string()).collect();
        let generated = lyndon_words(l, 8).len();
        println!(
            "l = {l}: Lyndon words by length {}; {generated} up to length 8",
            counts.join(" ")
        );
    }

    for (content, words) in enumerate_lyndon(Alphabet::Pairs(2), 2) {
        let ws: Vec<String> = words.iter().map(Word::to_string).collect();
        println!("pair words with content {content:?}: {}", ws.join(" "));
    }

    let content = [2, 1];
    let by_words = fsurinv_e_words(&content);
    let e21 = SymFunc::from_composition(Basis::E, &content).unwrap();
    assert_eq!(by_words, fsurinv(&e21));
    println!(
        "F_Sur^-1{{e[2,1]}} = {}",
        by_words.to_expr_string(Basis::E).unwrap()
    );
}
