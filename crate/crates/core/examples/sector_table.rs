//! Sectors of the mu_6 action on the sextic double solid in P(1,1,1,1,3).

use kuzcalc::orbifold::sector_data;
use kuzcalc::parse_poly;

fn main() -> kuzcalc::Result<()> {
    let omega = parse_poly("x4^2 + x0^6 + x1^6 + x2^6 + x3^6", &[1, 1, 1, 1, 3], 6)?;
    println!("{:>3}  {:<8} {:>4} {:>4}  restricted", "g", "fixed", "rkW", "k_g");
    for s in sector_data(&omega)? {
        let fixed: Vec<String> = s.sector.fixed_vars.iter().map(|j| format!("x{j}")).collect();
        println!(
            "{:>3}  {:<8} {:>4} {:>4}  {}",
            s.sector.g_index,
            if fixed.is_empty() { "-".into() } else { fixed.join(",") },
            s.sector.rk_w,
            s.sector.character,
            s.omega_g
        );
    }
    Ok(())
}
