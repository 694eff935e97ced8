//! Betti numbers, projective and cohomological dimension of monomial ideals.

use semigroup_cm::monomial::{betti_table, cd, pd, polarize, radical, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Ring::standard(4);
    for text in ["x, y, z", "x*y, y*z, z*x", "x^2, x*y, y^3", "x*y, z*w", "x^2*y, x*y^2"] {
        let i = r.parse_ideal(text)?;
        let t = betti_table(&i)?;
        println!(
            "{:<18} betti {:?}  pd {}  cd {}  radical {}",
            r.format_ideal(&i),
            t.total,
            pd(&i)?,
            cd(&i)?,
            r.format_ideal(&radical(&i))
        );
    }
    // polarization keeps the Betti numbers and makes the ideal squarefree
    let i = r.parse_ideal("x^2, x*y, y^3")?;
    let p = polarize(&i);
    println!("polarized in {} variables: betti {:?}", p.ideal.nvars(), betti_table(&p.ideal)?.total);
    Ok(())
}
