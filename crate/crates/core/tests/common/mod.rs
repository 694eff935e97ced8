//! Input families shared by the integration tests.
#![allow(dead_code)]

use num::{BigInt, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use semigroup_cm::exact::Rational;
use semigroup_cm::lazard::{is_supported, sequence_rank, FinSeq, IndependentFamily, SupportPattern};
use semigroup_cm::monomial::{monomials_up_to, Monomial, MonomialIdeal};

/// The 80 nonunit monomials in 4 variables with exponents at most 2.
pub fn nonunit_monomials() -> Vec<Monomial> {
    monomials_up_to(4, 2).into_iter().filter(|m| !m.is_unit()).collect()
}

/// Every monomial ideal with 1 to `max_gens` minimal generators drawn from
/// `pool`, i.e. every antichain under divisibility.
pub fn antichain_ideals(pool: &[Monomial], max_gens: usize) -> Vec<MonomialIdeal> {
    fn grow(pool: &[Monomial], start: usize, cur: &mut Vec<Monomial>, max: usize, out: &mut Vec<MonomialIdeal>) {
        for i in start..pool.len() {
            let m = &pool[i];
            if cur.iter().any(|g| g.divides(m) || m.divides(g)) {
                continue;
            }
            cur.push(m.clone());
            out.push(MonomialIdeal::new(4, cur.clone()).expect("same ring"));
            if cur.len() < max {
                grow(pool, i + 1, cur, max, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(pool, 0, &mut Vec::new(), max_gens, &mut out);
    out
}

/// Ordered sequences of length 1 to 3 over `pool`, repetitions allowed.
pub fn sequences_up_to_3(pool: &[Monomial]) -> impl Iterator<Item = Vec<Monomial>> + '_ {
    let ones = pool.iter().map(|a| vec![a.clone()]);
    let twos = pool.iter().flat_map(move |a| pool.iter().map(move |b| vec![a.clone(), b.clone()]));
    let threes = pool
        .iter()
        .flat_map(move |a| pool.iter().flat_map(move |b| pool.iter().map(move |c| vec![a.clone(), b.clone(), c.clone()])));
    ones.chain(twos).chain(threes)
}

fn rational(rng: &mut ChaCha8Rng, lo: i64, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(lo..=9);
        if nonzero && n == 0 {
            continue;
        }
        let d: i64 = rng.gen_range(1..=9);
        return Rational::new(BigInt::from(n), BigInt::from(d));
    }
}

/// A random index set with threshold at most `window` and possibly one
/// exception.
pub fn random_support(rng: &mut ChaCha8Rng, window: usize) -> SupportPattern {
    let l = rng.gen_range(0..=window);
    if rng.gen_bool(0.3) {
        SupportPattern::new(l, [rng.gen_range(1..=window + 1)])
    } else {
        SupportPattern::new(l, [])
    }
}

/// A random I-supported sequence with the given prefix length. Entries are
/// p/q with |p|, q at most 9; negative entries only when `mixed`, and never
/// in the tail.
pub fn random_sequence(rng: &mut ChaCha8Rng, window: usize, support: &SupportPattern, mixed: bool) -> FinSeq {
    let lo = if mixed { -9 } else { 0 };
    let prefix = (1..=window).map(|i| rational(rng, lo, support.contains(i))).collect();
    FinSeq::new(prefix, rational(rng, 1, true))
}

pub fn independent(seqs: &[FinSeq]) -> bool {
    sequence_rank(seqs) == seqs.len()
}

/// Everything the constructions promise, checked from scratch: independence,
/// I-support, the sign condition, and for each input nonnegative
/// coordinates that recombine to it exactly.
pub fn check_family(f: &IndependentFamily, inputs: &[FinSeq], nonnegative: bool) -> Result<(), String> {
    let members = f.members();
    if !independent(members) {
        return Err(format!("dependent family {members:?}"));
    }
    for m in members {
        if !is_supported(m, f.support()) {
            return Err(format!("member {m} is not supported"));
        }
        let sign_ok = if nonnegative { m.is_nonnegative() } else { m.is_almost_nonnegative() };
        if !sign_ok {
            return Err(format!("member {m} has the wrong sign pattern"));
        }
    }
    for v in inputs {
        let c = f.cone_coordinates(v).ok_or_else(|| format!("{v} is not in the cone"))?;
        if c.iter().any(|x| x < &Rational::zero()) {
            return Err(format!("negative coordinates for {v}"));
        }
        let back = members.iter().zip(&c).fold(FinSeq::zero(), |acc, (m, x)| acc.add(&m.scale(x)));
        if &back != v {
            return Err(format!("coordinates of {v} recombine to {back}"));
        }
    }
    Ok(())
}
