//! Koszul cohomology of the partial derivatives: a smooth cubic has only H^0,
//! while the cusp x0^3 in two variables has syzygies.

use kuzcalc::koszul::build_koszul;
use kuzcalc::parse_poly;

fn table(text: &str, weights: &[u32], d: u64, t_max: i64) -> kuzcalc::Result<()> {
    let omega = parse_poly(text, weights, d)?;
    let k = build_koszul(&omega);
    println!("{text}");
    for p in 0..=k.len() {
        let row: Vec<String> = (0..=t_max).map(|t| k.cohomology_rank(p, t).to_string()).collect();
        println!("  H^{p}: {}", row.join(" "));
    }
    println!("  d o d = 0: {}", k.check_d_squared(t_max).is_ok());
    Ok(())
}

fn main() -> kuzcalc::Result<()> {
    table("x0^3 + x1^3 + x2^3", &[1, 1, 1], 3, 4)?;
    table("x0^3", &[1, 1], 3, 4)
}
