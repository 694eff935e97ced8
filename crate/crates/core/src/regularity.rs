//! Regular sequences and parameter sequences of monomials.
//!
//! The oracle decides regularity from colon ideals and nothing else, so it
//! can be compared against the projective-dimension test and the pairwise
//! coprimality condition. Disagreements are reported, not resolved.
//!
//! Weak proregularity holds automatically in the Noetherian rings used here
//! and is never checked.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exact::Rational;
use crate::monomial::{cd, colon, height, pd, Monomial, MonomialError, MonomialIdeal, DEFAULT_GENERATOR_CAP};
use crate::semigroup::{box_points, is_full, is_normal, split_positive, AffineSemigroup, SemigroupError, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("entry {index} is a unit")]
    UnitEntry { index: usize },
    #[error("empty sequence")]
    Empty,
    #[error("{count} entries exceed the cap of {cap}")]
    GeneratorCap { count: usize, cap: usize },
    #[error("extension is not full, witness {witness:?}")]
    NotFull { witness: Vec<i64> },
    #[error("truncation {truncation} is not normal, witness {witness:?}")]
    NotNormal { truncation: usize, witness: Vec<i64> },
    #[error("exponent {exponent:?} is outside the semigroup")]
    NotInSemigroup { exponent: Vec<i64> },
    #[error("generator {generator:?} has a negative entry")]
    NegativeGenerator { generator: Vec<i64> },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// An ordered list of monomials in one polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialSequence {
    items: Vec<Monomial>,
}

impl MonomialSequence {
    pub fn new(items: Vec<Monomial>) -> Result<Self, RegularityError> {
        let first = items.first().ok_or(RegularityError::Empty)?;
        let n = first.nvars();
        if let Some(bad) = items.iter().find(|m| m.nvars() != n) {
            return Err(MonomialError::VariableMismatch { expected: n, found: bad.nvars() }.into());
        }
        Ok(MonomialSequence { items })
    }

    pub fn items(&self) -> &[Monomial] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.items[0].nvars()
    }

    fn ideal_of(&self, indices: impl IntoIterator<Item = usize>) -> MonomialIdeal {
        let gens = indices.into_iter().map(|i| self.items[i].clone()).collect();
        MonomialIdeal::new(self.nvars(), gens).expect("items share a ring")
    }

    fn require_nonunit(&self) -> Result<(), RegularityError> {
        match self.items.iter().position(Monomial::is_unit) {
            Some(i) => Err(RegularityError::UnitEntry { index: i + 1 }),
            None => Ok(()),
        }
    }
}

/// Regularity decided by colons: (x_1..x_{j-1}) : x_j must equal
/// (x_1..x_{j-1}) for each j. On failure, j (from 1) and a monomial in the
/// colon outside the ideal.
pub fn oracle_regular(s: &MonomialSequence) -> Result<(bool, Option<(usize, Monomial)>), RegularityError> {
    s.require_nonunit()?;
    for j in 0..s.len() {
        let before = s.ideal_of(0..j);
        let c = colon(&before, &s.items[j]);
        if let Some(w) = c.gens().iter().find(|g| !before.contains(g)) {
            return Ok((false, Some((j + 1, w.clone()))));
        }
    }
    // entries are nonunits, so the full ideal is proper
    Ok((true, None))
}

/// Every pair of entries is coprime.
pub fn star_condition(s: &MonomialSequence) -> bool {
    let items = s.items();
    items.iter().enumerate().all(|(a, u)| items[a + 1..].iter().all(|v| u.is_coprime(v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub oracle_regular: bool,
    pub pd_criterion: bool,
    pub star_condition: bool,
    pub discrepancy: bool,
    pub witness: Option<(usize, Monomial)>,
    /// pd of A/(subset) for each nonempty subset, indices from 1.
    pub subset_pds: Vec<(Vec<usize>, usize)>,
    pub weak_proregularity: &'static str,
}

/// pd(A/(x_i : i in S)) = |S| for every nonempty S, alongside the oracle
/// and the coprimality condition.
pub fn pd_criterion(s: &MonomialSequence) -> Result<RegularityReport, RegularityError> {
    s.require_nonunit()?;
    let n = s.len();
    if n > DEFAULT_GENERATOR_CAP {
        return Err(RegularityError::GeneratorCap { count: n, cap: DEFAULT_GENERATOR_CAP });
    }
    let mut subset_pds: Vec<(Vec<usize>, usize)> = Vec::with_capacity((1 << n) - 1);
    let mut holds = true;
    for mask in 1usize..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let p = pd(&s.ideal_of(idx.iter().copied()))?;
        holds &= p == idx.len();
        subset_pds.push((idx.iter().map(|i| i + 1).collect(), p));
    }
    subset_pds.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    let (oracle, witness) = oracle_regular(s)?;
    Ok(RegularityReport {
        oracle_regular: oracle,
        pd_criterion: holds,
        star_condition: star_condition(s),
        discrepancy: holds != oracle,
        witness,
        subset_pds,
        weak_proregularity: "assumed (Noetherian)",
    })
}

/// Every prefix ideal is proper and has height equal to its length. A unit
/// entry makes some prefix improper, so the answer is false rather than an
/// error.
pub fn is_parameter_sequence_poly(s: &MonomialSequence) -> bool {
    (1..=s.len()).all(|i| {
        let prefix = s.ideal_of(0..i);
        prefix.is_proper() && height(&prefix).is_ok_and(|h| h == i)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CdSubsetOutcome {
    /// cd of the whole ideal is below the length.
    Inapplicable { cd: usize },
    Passed,
    /// A subset (indices from 1) whose cd differs from its size.
    Failed { subset: Vec<usize>, cd: usize },
}

/// When cd of the whole ideal equals the length n, every k-subset should
/// have cd k.
pub fn cd_subset_check(s: &MonomialSequence) -> Result<CdSubsetOutcome, RegularityError> {
    s.require_nonunit()?;
    let n = s.len();
    let full = cd(&s.ideal_of(0..n))?;
    if full < n {
        return Ok(CdSubsetOutcome::Inapplicable { cd: full });
    }
    for mask in 1usize..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let c = cd(&s.ideal_of(idx.iter().copied()))?;
        if c != idx.len() {
            return Ok(CdSubsetOutcome::Failed { subset: idx.iter().map(|i| i + 1).collect(), cd: c });
        }
    }
    Ok(CdSubsetOutcome::Passed)
}

/// Regularity of X^{h_1}, ..., X^{h_k} in k[C], decided on the search box.
///
/// Multiplication by a monomial respects the C-grading, so X^{h_j} is a
/// zero divisor modulo J = (X^{h_i} : i < j) exactly when some c in C lies
/// outside the semigroup ideal of J while c + h_j lies inside. The
/// sequence must also generate a proper ideal: no -h_i in C.
pub fn semigroup_regular(c: &AffineSemigroup, seq: &[Vec<i64>]) -> Result<Verdict, RegularityError> {
    let oracle = c.oracle()?;
    for h in seq {
        if h.len() != c.ambient_dim() {
            return Err(SemigroupError::DimensionMismatch { expected: c.ambient_dim(), found: h.len() }.into());
        }
        if !oracle.contains(h) {
            return Err(RegularityError::NotInSemigroup { exponent: h.clone() });
        }
        let neg: Vec<i64> = h.iter().map(|x| -x).collect();
        if oracle.contains(&neg) {
            return Ok(Verdict::refuted(h.clone(), false));
        }
    }
    let points: Vec<Vec<i64>> =
        box_points(c.ambient_dim(), c.search_bound()).into_iter().filter(|p| oracle.contains(p)).collect();
    let in_ideal = |p: &[i64], upto: usize| {
        seq[..upto].iter().any(|h| oracle.contains(&p.iter().zip(h).map(|(a, b)| a - b).collect::<Vec<_>>()))
    };
    for j in 1..seq.len() {
        for p in &points {
            let shifted: Vec<i64> = p.iter().zip(&seq[j]).map(|(a, b)| a + b).collect();
            if !in_ideal(p, j) && in_ideal(&shifted, j) {
                return Ok(Verdict::refuted(p.clone(), true));
            }
        }
    }
    Ok(Verdict::holds_on_box())
}

/// Each X^h written as a unit times a monomial of the positive part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrippedSequence {
    pub units: Vec<Vec<i64>>,
    /// Positive parts in the ambient coordinates.
    pub positive_parts: Vec<Vec<i64>>,
    /// Positive parts in the coordinates of the positive semigroup.
    pub positive_coordinates: Vec<Vec<i64>>,
    /// Entries that are units outright.
    pub pure_units: Vec<bool>,
    pub original: Verdict,
    pub stripped: Verdict,
}

impl StrippedSequence {
    /// Regularity does not see unit factors.
    pub fn verdicts_agree(&self) -> bool {
        self.original.value == self.stripped.value
    }
}

pub fn strip_units(c: &AffineSemigroup, seq: &[Vec<i64>]) -> Result<StrippedSequence, RegularityError> {
    let split = split_positive(c)?;
    let mut out = StrippedSequence {
        units: Vec::new(),
        positive_parts: Vec::new(),
        positive_coordinates: Vec::new(),
        pure_units: Vec::new(),
        original: semigroup_regular(c, seq)?,
        stripped: Verdict::exact(true),
    };
    for h in seq {
        let (u, p) = split.factor(h).ok_or_else(|| RegularityError::NotInSemigroup { exponent: h.clone() })?;
        let (_, pc) = split.coordinates(h).expect("factor succeeded");
        out.pure_units.push(p.iter().all(|&x| x == 0));
        out.units.push(u);
        out.positive_parts.push(p);
        out.positive_coordinates.push(pc);
    }
    out.stripped = semigroup_regular(&split.positive_part, &out.positive_coordinates)?;
    Ok(out)
}

/// A finite formal sum of monomials X^c with rational coefficients.
pub type FormalSum = BTreeMap<Vec<i64>, Rational>;

/// The k[sub]-linear projection k[sup] -> k[sub] that drops every monomial
/// outside sub. It splits the inclusion when sub is full in sup.
pub fn retraction(sub: &AffineSemigroup, sup: &AffineSemigroup, element: &FormalSum) -> Result<FormalSum, RegularityError> {
    let full = is_full(sub, sup)?;
    if !full.value {
        return Err(RegularityError::NotFull { witness: full.witness.unwrap_or_default() });
    }
    let sup_oracle = sup.oracle()?;
    let sub_oracle = sub.oracle()?;
    let mut out = FormalSum::new();
    for (c, coeff) in element {
        if !sup_oracle.contains(c) {
            return Err(RegularityError::NotInSemigroup { exponent: c.clone() });
        }
        if sub_oracle.contains(c) {
            out.insert(c.clone(), coeff.clone());
        }
    }
    Ok(out)
}

/// Product of formal sums.
pub fn multiply(a: &FormalSum, b: &FormalSum) -> FormalSum {
    let mut out = FormalSum::new();
    for (x, p) in a {
        for (y, q) in b {
            let e: Vec<i64> = x.iter().zip(y).map(|(s, t)| s + t).collect();
            let v = out.entry(e).or_insert_with(|| Rational::from_integer(0.into()));
            *v += p * q;
        }
    }
    out.retain(|_, v| *v != Rational::from_integer(0.into()));
    out
}

/// H(n): the semigroup generated by the generators supported on the first n
/// coordinates, as a subsemigroup of Z^n. For nonnegative generators this
/// is H intersected with Z^n.
pub fn truncation(gens: &[Vec<i64>], n: usize) -> Result<AffineSemigroup, RegularityError> {
    let inside: Vec<Vec<i64>> = gens
        .iter()
        .filter(|g| g.iter().skip(n).all(|&x| x == 0))
        .map(|g| {
            let mut v = g.clone();
            v.resize(n, 0);
            v
        })
        .collect();
    Ok(AffineSemigroup::new(n, inside)?)
}

fn pad(s: &AffineSemigroup, n: usize) -> Result<AffineSemigroup, RegularityError> {
    let gens = s.generators().iter().map(|g| {
        let mut v = g.clone();
        v.resize(n, 0);
        v
    });
    Ok(AffineSemigroup::new(n, gens.collect())?.with_search_bound(s.search_bound()))
}

/// Truncations H(1), ..., H(depth) of a semigroup in Z^infinity: each is
/// normal, each sits fully in the next, and monomial pairs from H(n) that
/// form a parameter sequence in the polynomial ring on Z^n are regular in
/// k[H(n)]. All on search boxes.
pub fn limit_transfer_check(gens: &[Vec<i64>], depth: usize) -> Result<Verdict, RegularityError> {
    if let Some(g) = gens.iter().find(|g| g.iter().any(|&x| x < 0)) {
        return Err(RegularityError::NegativeGenerator { generator: g.clone() });
    }
    let truncs: Vec<AffineSemigroup> = (1..=depth).map(|n| truncation(gens, n)).collect::<Result<_, _>>()?;
    for (k, h) in truncs.iter().enumerate() {
        let normal = is_normal(h)?;
        if !normal.value {
            return Err(RegularityError::NotNormal { truncation: k + 1, witness: normal.witness.unwrap_or_default() });
        }
    }
    for (k, pair) in truncs.windows(2).enumerate() {
        let lifted = pad(&pair[0], k + 2)?;
        let full = is_full(&lifted, &pair[1])?;
        if !full.value {
            return Ok(full);
        }
    }
    for (k, h) in truncs.iter().enumerate() {
        let n = k + 1;
        let oracle = h.oracle()?;
        let small: Vec<Vec<i64>> = box_points(n, 2).into_iter().filter(|p| p.iter().any(|&x| x != 0) && oracle.contains(p)).collect();
        for a in &small {
            for b in &small {
                let as_monomial = |v: &Vec<i64>| Monomial::new(v.iter().map(|&x| x as u32).collect());
                let seq = MonomialSequence::new(vec![as_monomial(a), as_monomial(b)])?;
                if is_parameter_sequence_poly(&seq) {
                    let v = semigroup_regular(h, &[a.clone(), b.clone()])?;
                    if !v.value {
                        return Ok(v);
                    }
                }
            }
        }
    }
    Ok(Verdict::holds_on_box())
}
