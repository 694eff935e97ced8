//! A point stream turned into a direct system of free semigroups, and a
//! normal semigroup embedded into sequences.

use semigroup_cm::lazard::{build_direct_system, embed_full, FinSeq, SupportPattern};
use semigroup_cm::semigroup::AffineSemigroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let points: Vec<FinSeq> = ["(1|1)", "(-1,2|1)", "(0,1,1|2)", "(3,-1,1|1)"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let ds = build_direct_system(&points, &SupportPattern::above(1), points.len())?;
    for (n, fam) in ds.families.iter().enumerate() {
        let m: Vec<String> = fam.members().iter().map(|s| s.to_string()).collect();
        println!("stage {n}: N^{} spanned by {}", fam.len(), m.join("  "));
    }
    for (n, t) in ds.transitions.iter().enumerate() {
        println!("stage {n} -> {}: {:?}", n + 1, t.to_i64_rows());
    }

    let h = AffineSemigroup::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]])?;
    let (images, emb, cert) = embed_full(&h, 2)?;
    for (g, im) in h.generators().iter().zip(&images) {
        println!("{g:?} -> {im}");
    }
    println!("support {:?}, injective and full on the box: {}", emb.support(), cert.value);
    Ok(())
}
