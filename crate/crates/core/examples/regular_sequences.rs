//! Regular sequences of monomials: the colon test, the projective dimension
//! test on subsets, and sequences in a semigroup ring with units.

use semigroup_cm::monomial::Ring;
use semigroup_cm::regularity::{is_parameter_sequence_poly, pd_criterion, strip_units, MonomialSequence};
use semigroup_cm::semigroup::AffineSemigroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Ring::standard(3);
    for text in ["x, y^2, z", "x*y, y*z", "x*y, z", "x^2, x*y"] {
        let items = text.split(',').map(|m| r.parse_monomial(m.trim())).collect::<Result<Vec<_>, _>>()?;
        let s = MonomialSequence::new(items)?;
        let rep = pd_criterion(&s)?;
        println!(
            "{text:<10} colon test {:<5} pd test {:<5} coprime {:<5} parameters {:<5} witness {:?}",
            rep.oracle_regular,
            rep.pd_criterion,
            rep.star_condition,
            is_parameter_sequence_poly(&s),
            rep.witness.map(|(j, m)| (j, r.format_monomial(&m)))
        );
    }

    // in k[N^2 x Z] the third coordinate is a unit and does not matter
    let c = AffineSemigroup::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, -1]])?.with_search_bound(3);
    let seq = vec![vec![1, 0, 2], vec![0, 1, -3]];
    let s = strip_units(&c, &seq)?;
    println!("with units: {}  stripped: {}  units {:?}", s.original.value, s.stripped.value, s.units);
    Ok(())
}
