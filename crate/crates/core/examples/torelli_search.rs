//! Fingerprints and equivalence witnesses between plane cubics.

use kuzcalc::parse_poly;
use kuzcalc::torelli::{fingerprint, search_equivalence, SearchStrategy};

fn main() -> kuzcalc::Result<()> {
    let w = [1, 1, 1];
    let fermat = parse_poly("x0^3 + x1^3 + x2^3", &w, 3)?;
    let scaled = parse_poly("x1^3 + 8*x2^3 + 27*x0^3", &w, 3)?;
    let hesse = parse_poly("x0^3 + x1^3 + x2^3 + 3*x0*x1*x2", &w, 3)?;

    println!("fingerprint: {:?}", fingerprint(&fermat)?);
    for (name, other) in [("scaled Fermat", &scaled), ("Hesse member", &hesse)] {
        for strategy in [
            SearchStrategy::BoundedScalars { budget: 100_000 },
            SearchStrategy::Symbolic,
            SearchStrategy::Random { trials: 200, seed: 1 },
        ] {
            let out = search_equivalence(&fermat, other, &strategy)?;
            match &out.witness {
                Some(wit) => println!("{name} / {}: witness with c = {}, A = {:?}", strategy.name(), wit.scalar,
                    wit.matrix.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()),
                None => println!("{name} / {}: not found within {}", strategy.name(), out.scope),
            }
        }
    }
    Ok(())
}
