//! Plane cones with irrational-looking boundary behaviour: classification
//! into the four models, normalization, and rejected parameter pairs.

use semigroup_cm::plane::{classify, classify_agreement, model_regular_pair, normalize_map, param_pair_reject, ModelSemigroup, ModelTag, QuasiRationalCone};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["y >= 0 & x > 0", "x > 0 & y > 0", "y >= 0 & y > 0", "y > 0 & y > 0", "2*x - y >= 0 & x + 3*y > 0"] {
        let c = QuasiRationalCone::parse(text)?;
        let m = classify(&c)?;
        let ok = classify_agreement(&c, &m, 10)?;
        println!("{text:<28} -> {:<3} map {:?} scale {} (box check {})", m.tag.to_string(), m.map, m.scale, ok.value);
    }

    let n = normalize_map(&[vec![1, 0], vec![1, 2]], 8)?;
    println!("normalize (1,0),(1,2): t = {}, phi = {:?}", n.t, n.phi);

    for (tag, f, g) in [(ModelTag::H, [1, 1], [2, 1]), (ModelTag::H1, [3, 1], [-2, 2]), (ModelTag::H2, [-5, 1], [4, 3])] {
        let m = ModelSemigroup::new(tag)?;
        let cert = param_pair_reject(&m, f, g, 16)?;
        let (regular, witness) = model_regular_pair(&m, f, g, 10)?;
        println!("{tag}: X^{f:?}, X^{g:?} share the radical of X^{:?}; regular {regular}, witness {witness:?}", cert.h);
    }
    Ok(())
}
