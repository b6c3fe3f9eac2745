//! Hom(D, D(t)) for the weighted sextic: the Jacobian ring plus two extra
//! classes at t = 8 coming from the sectors fixing x4.

use kuzcalc::{parse_poly, LgModel};

fn main() -> kuzcalc::Result<()> {
    let omega = parse_poly("x4^2 + x0^6 + x1^6 + x2^6 + x3^6", &[1, 1, 1, 1, 3], 6)?;
    let lg = LgModel::new(&omega)?;
    for t in 0..=16 {
        let cell = lg.hs_dim(t, 0);
        let jac = lg.jacobian().dim(t);
        let mark = if cell.total != jac { "  <- extra" } else { "" };
        println!("t = {t:>2}: Jac_t = {jac:>3}, Hom = {:>3} {:?}{mark}", cell.total, cell.breakdown());
    }
    Ok(())
}
