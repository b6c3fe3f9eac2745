//! Writing the twist D(t) as a word in the Serre functor and the shift when
//! gcd(n + 1, d) = 1.

use kuzcalc::hsalgebra::{bezout, serre_power_word, twist_as_serre_word, FunctorWord};

fn main() {
    for (n, d) in [(4u32, 3u32), (5, 5), (6, 4), (3, 3)] {
        match bezout(n as i64 + 1, d as i64) {
            None => println!("n = {n}, d = {d}: gcd(n+1, d) != 1, no word"),
            Some((k1, k2)) => {
                println!("n = {n}, d = {d}: {k1}*{} + {k2}*{d} = 1", n + 1);
                for t in [1, 2, -1] {
                    let (a, b) = twist_as_serre_word(t, n, d).unwrap();
                    let w = serre_power_word(a, b, n, d);
                    assert_eq!(w, FunctorWord::twist(t).normalize(d));
                    println!("  D({t}) = S^{a}[{b}] ~ D({})[{}]", w.twist, w.shift);
                }
            }
        }
    }
}
