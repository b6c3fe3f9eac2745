//! The graded pieces of the sum of Hom(D, D(t)) for cubic threefold and
//! surface, with the extra k^{d-1} in the middle degree of the surface.

use kuzcalc::{LgModel, WeightedPolynomial};

fn main() -> kuzcalc::Result<()> {
    for n_vars in [5, 4] {
        let lg = LgModel::new(&WeightedPolynomial::fermat(&vec![1; n_vars], 3, &[])?)?;
        let s = lg.subalgebra(7, true)?;
        println!("cubic in P^{}:", n_vars - 1);
        for p in &s.pieces {
            println!("  t = {}: {} + {} = {}", p.t, p.jacobian_dim, p.exceptional, p.total);
        }
        println!("  {} structure constants", s.structure_constants.len());
    }
    Ok(())
}
