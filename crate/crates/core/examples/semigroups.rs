//! Positivity, normality, saturation and the unit/positive split of a few
//! affine semigroups.

use semigroup_cm::semigroup::{group_rank, is_full, is_normal, is_positive, membership, saturation, split_positive, AffineSemigroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // <2, 3> in Z misses 1, which its saturation N contains
    let numerical = AffineSemigroup::new(1, vec![vec![2], vec![3]])?;
    let normal = is_normal(&numerical)?;
    println!("<2,3>: normal = {}, witness = {:?}", normal.value, normal.witness);
    let sat = saturation(numerical.generators(), 1)?;
    println!("saturation generators: {:?}", sat.generators());

    // the cone over (1,0) and (1,2) with all its lattice points
    let c = AffineSemigroup::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]])?;
    println!("C: positive = {}, normal = {}, rank = {}", is_positive(&c)?.value, is_normal(&c)?.value, group_rank(&c));
    for p in [[3, 5], [3, 7], [0, 0]] {
        println!("  {p:?} in C: {}", membership(&c, &p)?.value);
    }

    // dropping (1,1) gives an index-2 sublattice, but C meets it in exactly
    // the sums of (1,0) and (1,2), so the subsemigroup is still full
    let sub = AffineSemigroup::new(2, vec![vec![1, 0], vec![1, 2]])?;
    let full = is_full(&sub, &c)?;
    println!("<(1,0),(1,2)> full in C: {} (witness {:?})", full.value, full.witness);

    // N x Z splits as units Z times the positive part N
    let with_units = AffineSemigroup::new(2, vec![vec![1, 0], vec![0, 1], vec![0, -1]])?;
    let split = split_positive(&with_units)?;
    println!("N x Z: unit rank {}, positive part {:?}", split.unit_rank, split.positive_part.generators());
    println!("  (3,-4) = unit {:?} + positive {:?}", split.factor(&[3, -4]).unwrap().0, split.factor(&[3, -4]).unwrap().1);
    Ok(())
}
