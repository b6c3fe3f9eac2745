//! Graded pieces, certification and multiplication in the Jacobian ring of
//! the Fermat cubic surface.

use kuzcalc::{parse_poly, JacobianAlgebra};

fn main() -> kuzcalc::Result<()> {
    let omega = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", &[1; 4], 3)?;
    let jac = JacobianAlgebra::new(&omega)?;
    let cert = jac.certify();
    println!("{}", cert.summary());
    println!("Hilbert function: {:?}", jac.hilbert_function(5));

    for t in 0..=jac.socle_degree() as u64 {
        let basis = jac.basis(t);
        let names: Vec<String> = basis.representatives().iter().map(|m| m.to_string()).collect();
        println!("degree {t}: {}", names.join(" "));
    }

    // x0*x1 times x2*x3 lands in the one-dimensional socle
    let a = jac.class_of(&parse_poly("x0*x1", &[1; 4], 2)?)?;
    let b = jac.class_of(&parse_poly("x2*x3", &[1; 4], 2)?)?;
    let prod = jac.multiply(&a, 2, &b, 2)?;
    println!("[x0*x1] * [x2*x3] = {} * [{}]", prod[0], jac.basis(4).representative(0));
    Ok(())
}
