//! Hochschild cohomology and homology of the cubic fourfold category, read
//! off the bigraded table through the Serre functor S = [2].

use kuzcalc::{LgModel, WeightedPolynomial};

fn main() -> kuzcalc::Result<()> {
    let omega = WeightedPolynomial::fermat(&[1; 6], 3, &[])?;
    let lg = LgModel::new(&omega)?;
    let s = lg.serre_power_word(1, 0);
    println!("Serre functor normalizes to D({})[{}]", s.twist, s.shift);
    for m in 0..=4 {
        let hh = lg.hochschild_cohomology(m);
        let hh_lower = lg.hochschild_homology(m - 2);
        println!(
            "HH^{m} = {:>2} {:?}    HH_{} = {:>2} {:?}",
            hh.total,
            hh.breakdown(),
            m - 2,
            hh_lower.total,
            hh_lower.breakdown()
        );
    }
    let audit = lg.relation_audit((-6, 9), (-4, 4));
    println!("relation audit over {} cells: {}", audit.checked, if audit.passed() { "PASS" } else { "FAIL" });
    Ok(())
}
