//! Independent families of rational sequences and the direct systems built
//! from them.
//!
//! A sequence is stored as a finite prefix followed by a constant tail, which
//! is exact for everything done here: every construction inspects finitely
//! many irregular coordinates plus one uniform tail. Linear algebra on a list
//! of sequences works on the vectors (x_1, ..., x_W, tail) for a common
//! window W, which determines the sequences completely.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{linear_coordinates, rank_of_vectors, solve, ExactError, IntMatrix, RatMatrix, RatVector, Rational};
use crate::semigroup::{box_points, filtration, is_normal, is_positive, AffineSemigroup, SemigroupError, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LazardError {
    #[error("{0} is not supported on the index set")]
    NotSupported(FinSeq),
    #[error("{0} has a negative entry")]
    NotNonnegative(FinSeq),
    #[error("{0} is negative at infinitely many indices")]
    NotAlmostNonnegative(FinSeq),
    #[error("the family is linearly dependent")]
    Dependent,
    #[error("the zero sequence cannot be adjoined")]
    ZeroSequence,
    #[error("splitting off needs at least two summands, got {summands}")]
    TooFewSummands { summands: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("no admissible family found after {attempts} attempts")]
    NoSolution { attempts: usize },
    #[error("semigroup has a unit, witness {witness:?}")]
    NotPositive { witness: Vec<i64> },
    #[error("semigroup is not normal, witness {witness:?}")]
    NotNormal { witness: Vec<i64> },
    #[error("malformed sequence: {0}")]
    Parse(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A rational sequence x_1, x_2, ... that is constant from index W + 1 on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinSeq {
    prefix: Vec<Rational>,
    tail: Rational,
}

impl FinSeq {
    /// Trailing prefix entries equal to the tail are dropped, so equal
    /// sequences have equal representations.
    pub fn new(mut prefix: Vec<Rational>, tail: Rational) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        FinSeq { prefix, tail }
    }

    pub fn constant(tail: Rational) -> Self {
        FinSeq { prefix: Vec::new(), tail }
    }

    pub fn from_i64(prefix: &[i64], tail: i64) -> Self {
        FinSeq::new(prefix.iter().map(|&x| Rational::from_integer(x.into())).collect(), Rational::from_integer(tail.into()))
    }

    pub fn zero() -> Self {
        FinSeq::constant(Rational::zero())
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn tail(&self) -> &Rational {
        &self.tail
    }

    /// Length of the canonical prefix.
    pub fn window(&self) -> usize {
        self.prefix.len()
    }

    /// The i-th entry, counting from 1.
    pub fn get(&self, i: usize) -> &Rational {
        assert!(i >= 1, "sequences are indexed from 1");
        self.prefix.get(i - 1).unwrap_or(&self.tail)
    }

    /// (x_1, ..., x_w, tail) for w at least the window.
    pub fn coords(&self, w: usize) -> RatVector {
        let mut v: RatVector = (1..=w).map(|i| self.get(i).clone()).collect();
        v.push(self.tail.clone());
        v
    }

    pub fn from_coords(coords: &[Rational]) -> Self {
        let (tail, prefix) = coords.split_last().expect("coordinates include the tail");
        FinSeq::new(prefix.to_vec(), tail.clone())
    }

    fn zip_with(&self, other: &FinSeq, f: impl Fn(&Rational, &Rational) -> Rational) -> FinSeq {
        let w = self.window().max(other.window());
        FinSeq::new((1..=w).map(|i| f(self.get(i), other.get(i))).collect(), f(&self.tail, &other.tail))
    }

    pub fn add(&self, other: &FinSeq) -> FinSeq {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &FinSeq) -> FinSeq {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> FinSeq {
        FinSeq::new(self.prefix.iter().map(|x| x * c).collect(), &self.tail * c)
    }

    pub fn is_zero(&self) -> bool {
        self.prefix.is_empty() && self.tail.is_zero()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.tail.is_negative() && self.prefix.iter().all(|x| !x.is_negative())
    }

    /// Negative at finitely many indices only.
    pub fn is_almost_nonnegative(&self) -> bool {
        !self.tail.is_negative()
    }

    /// Largest index holding a negative entry; `None` when there is none.
    /// Meaningless for a negative tail.
    pub fn last_negative(&self) -> Option<usize> {
        self.prefix.iter().rposition(|x| x.is_negative()).map(|p| p + 1)
    }

    /// Entries at indices <= l, zero afterwards.
    pub fn head_part(&self, l: usize) -> FinSeq {
        FinSeq::new((1..=l).map(|i| self.get(i).clone()).collect(), Rational::zero())
    }

    /// Zero at indices <= l, unchanged afterwards.
    pub fn tail_part(&self, l: usize) -> FinSeq {
        let w = self.window().max(l);
        FinSeq::new((1..=w).map(|i| if i <= l { Rational::zero() } else { self.get(i).clone() }).collect(), self.tail.clone())
    }

    /// x_i + k * tail for i <= l. Linear, with inverse `shear(l, -k)`.
    pub fn shear(&self, l: usize, k: &Rational) -> FinSeq {
        let w = self.window().max(l);
        let lift = &self.tail * k;
        FinSeq::new(
            (1..=w).map(|i| if i <= l { self.get(i) + &lift } else { self.get(i).clone() }).collect(),
            self.tail.clone(),
        )
    }
}

impl fmt::Display for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.prefix.iter().map(|x| x.to_string()).collect();
        write!(f, "({}|{})", p.join(","), self.tail)
    }
}

fn parse_rational(s: &str) -> Result<Rational, LazardError> {
    let s = s.trim();
    Rational::from_str(s).map_err(|_| LazardError::Parse(format!("bad rational {s:?}")))
}

impl FromStr for FinSeq {
    type Err = LazardError;

    /// Accepts `(1,-2,3/2|2)`; the parentheses are optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim();
        let body = body.strip_prefix('(').map_or(body, |b| b.strip_suffix(')').unwrap_or(b));
        let (head, tail) = body.split_once('|').ok_or_else(|| LazardError::Parse(format!("missing '|' in {s:?}")))?;
        let prefix = if head.trim().is_empty() {
            Vec::new()
        } else {
            head.split(',').map(parse_rational).collect::<Result<_, _>>()?
        };
        Ok(FinSeq::new(prefix, parse_rational(tail)?))
    }
}

#[derive(Serialize, Deserialize)]
struct FinSeqDocument {
    prefix: Vec<String>,
    tail: String,
}

impl Serialize for FinSeq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FinSeqDocument { prefix: self.prefix.iter().map(|x| x.to_string()).collect(), tail: self.tail.to_string() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinSeq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = FinSeqDocument::deserialize(d)?;
        let prefix = doc.prefix.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>, _>>();
        let tail = parse_rational(&doc.tail);
        match (prefix, tail) {
            (Ok(p), Ok(t)) => Ok(FinSeq::new(p, t)),
            (Err(e), _) | (_, Err(e)) => Err(serde::de::Error::custom(e)),
        }
    }
}

/// An infinite index set, cofinite in N: indices above `threshold` except
/// the listed exceptions, together with the exceptions at or below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportPattern {
    pub threshold: usize,
    pub exceptions: BTreeSet<usize>,
}

impl SupportPattern {
    pub fn new(threshold: usize, exceptions: impl IntoIterator<Item = usize>) -> Self {
        SupportPattern { threshold, exceptions: exceptions.into_iter().filter(|&e| e >= 1).collect() }
    }

    /// Every index.
    pub fn all() -> Self {
        SupportPattern::new(0, [])
    }

    /// {i > l}
    pub fn above(l: usize) -> Self {
        SupportPattern::new(l, [])
    }

    pub fn contains(&self, i: usize) -> bool {
        if i > self.threshold {
            !self.exceptions.contains(&i)
        } else {
            i >= 1 && self.exceptions.contains(&i)
        }
    }

    /// Every index beyond this one is in the set.
    pub fn horizon(&self) -> usize {
        self.threshold.max(self.exceptions.iter().next_back().copied().unwrap_or(0))
    }

    /// The intersection with {i > l}.
    pub fn restrict_above(&self, l: usize) -> Self {
        SupportPattern::new(self.threshold.max(l), self.exceptions.iter().copied().filter(|&e| e > l))
    }
}

/// Nonzero at every index of I.
pub fn is_supported(a: &FinSeq, support: &SupportPattern) -> bool {
    if a.tail.is_zero() {
        return false;
    }
    let last = a.window().max(support.horizon());
    (1..=last).all(|i| !support.contains(i) || !a.get(i).is_zero())
}

/// (I-supported, almost non-negative).
pub fn classify_sequence(a: &FinSeq, support: &SupportPattern) -> (bool, bool) {
    (is_supported(a, support), a.is_almost_nonnegative())
}

fn common_window<'a>(seqs: impl IntoIterator<Item = &'a FinSeq>) -> usize {
    seqs.into_iter().map(FinSeq::window).max().unwrap_or(0)
}

fn vectors(seqs: &[&FinSeq], w: usize) -> Vec<RatVector> {
    seqs.iter().map(|s| s.coords(w)).collect()
}

pub fn sequence_rank(seqs: &[FinSeq]) -> usize {
    let refs: Vec<&FinSeq> = seqs.iter().collect();
    rank_of_vectors(&vectors(&refs, common_window(seqs.iter())))
}

/// Coefficients of v over an independent family, if v is in its span.
pub fn span_coordinates(family: &[FinSeq], v: &FinSeq) -> Result<Option<RatVector>, LazardError> {
    let w = common_window(family.iter().chain([v]));
    let refs: Vec<&FinSeq> = family.iter().collect();
    linear_coordinates(&vectors(&refs, w), &v.coords(w)).map_err(|e| match e {
        ExactError::DependentGenerators => LazardError::Dependent,
        other => other.into(),
    })
}

/// Nonnegative coefficients of v over an independent family, if any.
pub fn family_cone_coordinates(family: &[FinSeq], v: &FinSeq) -> Result<Option<RatVector>, LazardError> {
    Ok(span_coordinates(family, v)?.filter(|c| c.iter().all(|x| !x.is_negative())))
}

/// What is wrong with a family, checked against the inputs it must cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyDefect {
    Dependent { rank: usize, size: usize },
    Unsupported(usize),
    NotAlmostNonnegative(usize),
    NotCovered(usize),
}

/// Linearly independent, I-supported, almost non-negative sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentFamily {
    members: Vec<FinSeq>,
    support: SupportPattern,
}

impl IndependentFamily {
    pub fn new(members: Vec<FinSeq>, support: SupportPattern) -> Result<Self, LazardError> {
        let f = IndependentFamily { members, support };
        match f.defects(&[]).first() {
            None => Ok(f),
            Some(FamilyDefect::Dependent { .. }) => Err(LazardError::Dependent),
            Some(FamilyDefect::Unsupported(i)) => Err(LazardError::NotSupported(f.members[*i].clone())),
            Some(_) => Err(LazardError::NotAlmostNonnegative(f.members.iter().find(|m| !m.is_almost_nonnegative()).cloned().unwrap_or_else(FinSeq::zero))),
        }
    }

    fn unchecked(members: Vec<FinSeq>, support: &SupportPattern) -> Self {
        IndependentFamily { members, support: support.clone() }
    }

    pub fn members(&self) -> &[FinSeq] {
        &self.members
    }

    pub fn support(&self) -> &SupportPattern {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Nonnegative coefficients of v over the family, if v is in its cone.
    pub fn cone_coordinates(&self, v: &FinSeq) -> Option<RatVector> {
        family_cone_coordinates(&self.members, v).ok().flatten()
    }

    /// Every violated invariant, with `inputs` required to lie in the cone.
    pub fn defects(&self, inputs: &[FinSeq]) -> Vec<FamilyDefect> {
        let mut out = Vec::new();
        let rank = sequence_rank(&self.members);
        if rank != self.members.len() {
            out.push(FamilyDefect::Dependent { rank, size: self.members.len() });
        }
        for (i, m) in self.members.iter().enumerate() {
            if !is_supported(m, &self.support) {
                out.push(FamilyDefect::Unsupported(i));
            }
            if !m.is_almost_nonnegative() {
                out.push(FamilyDefect::NotAlmostNonnegative(i));
            }
        }
        if rank == self.members.len() {
            for (i, v) in inputs.iter().enumerate() {
                if self.cone_coordinates(v).is_none() {
                    out.push(FamilyDefect::NotCovered(i));
                }
            }
        }
        out
    }

    pub fn covers(&self, inputs: &[FinSeq]) -> bool {
        self.defects(inputs).is_empty()
    }
}

fn require_nonnegative_supported(s: &FinSeq, support: &SupportPattern) -> Result<(), LazardError> {
    if !s.is_nonnegative() {
        return Err(LazardError::NotNonnegative(s.clone()));
    }
    if !is_supported(s, support) {
        return Err(LazardError::NotSupported(s.clone()));
    }
    Ok(())
}

fn require_base(betas: &[FinSeq], support: &SupportPattern) -> Result<(), LazardError> {
    for b in betas {
        require_nonnegative_supported(b, support)?;
    }
    if sequence_rank(betas) != betas.len() {
        return Err(LazardError::Dependent);
    }
    Ok(())
}

fn sum(seqs: &[&FinSeq]) -> FinSeq {
    seqs.iter().fold(FinSeq::zero(), |acc, s| acc.add(s))
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// A sequence p with lo < p < hi on I, lo <= p <= hi elsewhere, where
/// lo = max(0, target - rest) and hi = min(first, target), and p outside the
/// span of `family`. Starts from the midpoint; if that lies in the span, one
/// fresh index past every window and the support horizon is nudged by 1/l.
/// No sequence of the family can produce the unit vector at that index, so
/// the first admissible l works.
fn choose_prime(
    family: &[FinSeq],
    first: &FinSeq,
    rest: &FinSeq,
    target: &FinSeq,
    support: &SupportPattern,
) -> Result<FinSeq, LazardError> {
    let w = common_window(family.iter().chain([first, rest, target])).max(support.horizon());
    let bounds = |a: &Rational, r: &Rational, t: &Rational| -> (Rational, Rational) {
        let lo = (t - r).max(Rational::zero());
        let hi = a.min(t).clone();
        (lo, hi)
    };
    let mid = |lo: &Rational, hi: &Rational| (lo + hi) * half();
    let mut prefix = Vec::with_capacity(w + 1);
    for i in 1..=w {
        let (lo, hi) = bounds(first.get(i), rest.get(i), target.get(i));
        prefix.push(mid(&lo, &hi));
    }
    let (lo_t, hi_t) = bounds(&first.tail, &rest.tail, &target.tail);
    let mid_t = mid(&lo_t, &hi_t);
    let spans = |p: &FinSeq| {
        let mut all = family.to_vec();
        all.push(p.clone());
        sequence_rank(&all) == family.len() + 1
    };
    let candidate = FinSeq::new(prefix.clone(), mid_t.clone());
    if spans(&candidate) {
        return Ok(candidate);
    }
    // least l >= 2 with mid_t + 1/l < hi_t
    let gap = &hi_t - &mid_t;
    let start: BigInt = (gap.recip().floor().to_integer() + BigInt::one()).max(BigInt::from(2));
    let mut l = start;
    for _ in 0..64 {
        let v = &mid_t + Rational::new(BigInt::one(), l.clone());
        let mut p = prefix.clone();
        p.push(v);
        let candidate = FinSeq::new(p, mid_t.clone());
        if spans(&candidate) {
            return Ok(candidate);
        }
        l += 1;
    }
    Err(LazardError::NoSolution { attempts: 64 })
}

/// Splits every summand but the last against `target` in turn, adding the
/// split-off pieces to the family, then replaces the last summand by its
/// difference with what is left of `target`. Afterwards the old sum of the
/// summands minus the old target is the plain sum of the modified summands.
fn peel(family: &mut Vec<FinSeq>, mut summands: Vec<usize>, target: usize, support: &SupportPattern) -> Result<(), LazardError> {
    while summands.len() >= 2 {
        let s = summands.remove(0);
        let rest = sum(&summands.iter().map(|&k| &family[k]).collect::<Vec<_>>());
        let p = choose_prime(family, &family[s], &rest, &family[target], support)?;
        family[s] = family[s].sub(&p);
        family[target] = family[target].sub(&p);
        family.push(p);
    }
    let s = summands[0];
    family[s] = family[s].sub(&family[target]);
    Ok(())
}

/// One splitting step. `betas` are beta_1..beta_n and the summands are
/// beta_m..beta_{n-1} (m counted from 1), so that
/// alpha = beta_m + ... + beta_{n-1} - beta_n. Returns beta_m' and the family
/// beta_1, ..., beta_m - beta_m', ..., beta_{n-1}, beta_n - beta_m', beta_m'.
pub fn split_off(betas: &[FinSeq], m: usize, support: &SupportPattern) -> Result<(FinSeq, IndependentFamily), LazardError> {
    let n = betas.len();
    if m == 0 || m > n || n - m < 2 {
        return Err(LazardError::TooFewSummands { summands: n.saturating_sub(m.max(1)) });
    }
    require_base(betas, support)?;
    let summands: Vec<&FinSeq> = betas[m - 1..n - 1].iter().collect();
    let alpha = sum(&summands).sub(&betas[n - 1]);
    require_nonnegative_supported(&alpha, support)?;
    let rest = sum(&summands[1..]);
    let p = choose_prime(betas, &betas[m - 1], &rest, &betas[n - 1], support)?;
    let mut family = betas.to_vec();
    family[m - 1] = family[m - 1].sub(&p);
    family[n - 1] = family[n - 1].sub(&p);
    family.push(p.clone());
    Ok((p, IndependentFamily::unchecked(family, support)))
}

/// Covers alpha = sum eta_i beta_i - beta_n together with the betas, where
/// eta has n - 1 entries.
pub fn resolve_one_negative(betas: &[FinSeq], eta: &[bool], support: &SupportPattern) -> Result<IndependentFamily, LazardError> {
    let n = betas.len();
    if n == 0 || eta.len() != n - 1 {
        return Err(LazardError::LengthMismatch { expected: n.saturating_sub(1), found: eta.len() });
    }
    require_base(betas, support)?;
    let summands: Vec<usize> = (0..n - 1).filter(|&i| eta[i]).collect();
    let alpha = sum(&summands.iter().map(|&i| &betas[i]).collect::<Vec<_>>()).sub(&betas[n - 1]);
    require_nonnegative_supported(&alpha, support)?;
    let mut family = betas.to_vec();
    peel(&mut family, summands, n - 1, support)?;
    Ok(IndependentFamily::unchecked(family, support))
}

/// An independent, I-supported, nonnegative family whose cone holds alpha
/// and every beta.
pub fn resolve(betas: &[FinSeq], alpha: &FinSeq, support: &SupportPattern) -> Result<IndependentFamily, LazardError> {
    require_base(betas, support)?;
    if alpha.is_zero() {
        return Err(LazardError::ZeroSequence);
    }
    require_nonnegative_supported(alpha, support)?;
    let mut family = betas.to_vec();
    let Some(mut c) = span_coordinates(&family, alpha)? else {
        family.push(alpha.clone());
        return Ok(IndependentFamily::unchecked(family, support));
    };
    loop {
        let pos: Vec<usize> = (0..family.len()).filter(|&i| c[i].is_positive()).collect();
        let neg: Vec<usize> = (0..family.len()).filter(|&i| c[i].is_negative()).collect();
        if neg.is_empty() {
            return Ok(IndependentFamily::unchecked(family, support));
        }
        if let [p] = pos[..] {
            family[p] = alpha.clone();
            return Ok(IndependentFamily::unchecked(family, support));
        }
        // normalize to coefficients +1 and -1
        for &i in pos.iter().chain(&neg) {
            family[i] = family[i].scale(&c[i].abs());
        }
        peel(&mut family, pos, neg[0], support)?;
        c = span_coordinates(&family, alpha)?.expect("alpha stays in the span while peeling");
    }
}

/// Folds `resolve` over the inputs, which need not be independent.
pub fn adjoin_closure(betas: &[FinSeq], support: &SupportPattern) -> Result<IndependentFamily, LazardError> {
    let mut family: Vec<FinSeq> = Vec::new();
    for b in betas {
        family = resolve(&family, b, support)?.members;
    }
    Ok(IndependentFamily::unchecked(family, support))
}

/// How `extend_mixed` reached its answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixedRoute {
    /// Every input is nonnegative; plain `resolve`.
    Nonnegative,
    /// alpha is independent of the betas or already in their cone.
    Direct,
    /// Cover the parts beyond the last negative index, then solve for
    /// corrections on the head indices.
    HeadCorrection,
    /// Shear by k times the tail on the head indices, resolve, shear back.
    TailShear { k: BigInt },
}

pub fn extend_mixed(betas: &[FinSeq], alpha: &FinSeq, support: &SupportPattern) -> Result<IndependentFamily, LazardError> {
    Ok(extend_mixed_traced(betas, alpha, support)?.0)
}

const SHEAR_ATTEMPTS: usize = 64;

/// Like `resolve` for almost non-negative inputs.
pub fn extend_mixed_traced(
    betas: &[FinSeq],
    alpha: &FinSeq,
    support: &SupportPattern,
) -> Result<(IndependentFamily, MixedRoute), LazardError> {
    let inputs: Vec<FinSeq> = betas.iter().chain([alpha]).cloned().collect();
    for s in &inputs {
        if !s.is_almost_nonnegative() {
            return Err(LazardError::NotAlmostNonnegative(s.clone()));
        }
        if !is_supported(s, support) {
            return Err(LazardError::NotSupported(s.clone()));
        }
    }
    if sequence_rank(betas) != betas.len() {
        return Err(LazardError::Dependent);
    }
    if inputs.iter().all(FinSeq::is_nonnegative) {
        return Ok((resolve(betas, alpha, support)?, MixedRoute::Nonnegative));
    }
    match span_coordinates(betas, alpha)? {
        None => {
            let mut members = betas.to_vec();
            members.push(alpha.clone());
            return Ok((IndependentFamily::unchecked(members, support), MixedRoute::Direct));
        }
        Some(c) if c.iter().all(|x| !x.is_negative()) => {
            return Ok((IndependentFamily::unchecked(betas.to_vec(), support), MixedRoute::Direct));
        }
        Some(_) => {}
    }
    let l = inputs.iter().filter_map(FinSeq::last_negative).max().expect("some input has a negative entry");

    if let Some(f) = head_correction(&inputs, l, support)? {
        return Ok((f, MixedRoute::HeadCorrection));
    }

    // smallest k making every head entry positive
    let mut k = BigInt::one();
    for s in &inputs {
        for i in 1..=l {
            let need = (-(s.get(i) / &s.tail)).floor().to_integer() + 1;
            k = k.max(need);
        }
    }
    for _ in 0..SHEAR_ATTEMPTS {
        let kr = Rational::from_integer(k.clone());
        let sheared: Vec<FinSeq> = inputs.iter().map(|s| s.shear(l, &kr)).collect();
        let (sb, sa) = sheared.split_at(betas.len());
        let f = resolve(sb, &sa[0], support)?;
        let members: Vec<FinSeq> = f.members.iter().map(|g| g.shear(l, &-kr.clone())).collect();
        let family = IndependentFamily::unchecked(members, support);
        if family.covers(&inputs) {
            return Ok((family, MixedRoute::TailShear { k }));
        }
        k += 1;
    }
    Err(LazardError::NoSolution { attempts: SHEAR_ATTEMPTS })
}

/// Covers the parts of the inputs beyond l by nonnegative sequences vanishing
/// up to l, then looks for head corrections gamma'_k, supported on 1..l, with
/// sum_k q_k(t) gamma'_k equal to the head of input t whenever
/// sum_k q_k(t) gamma_k is its remainder. `None` when that linear system has
/// no solution or the corrected family misses an invariant.
fn head_correction(inputs: &[FinSeq], l: usize, support: &SupportPattern) -> Result<Option<IndependentFamily>, LazardError> {
    let tails: Vec<FinSeq> = inputs.iter().map(|s| s.tail_part(l)).collect();
    let gammas = adjoin_closure(&tails, &support.restrict_above(l))?;
    let s = gammas.len();
    let mut q_rows: Vec<RatVector> = Vec::with_capacity(inputs.len());
    for t in &tails {
        q_rows.push(gammas.cone_coordinates(t).expect("adjoin_closure covers its inputs"));
    }
    let q = RatMatrix::from_rows(q_rows, s)?;
    let mut corrections = vec![Vec::with_capacity(l); s];
    for i in 1..=l {
        let rhs: RatVector = inputs.iter().map(|x| x.get(i).clone()).collect();
        let Some(col) = solve(&q, &rhs) else {
            return Ok(None);
        };
        for (k, v) in col.into_iter().enumerate() {
            corrections[k].push(v);
        }
    }
    let members: Vec<FinSeq> = gammas
        .members
        .iter()
        .zip(corrections)
        .map(|(g, c)| g.add(&FinSeq::new(c, Rational::zero())))
        .collect();
    let family = IndependentFamily::unchecked(members, support);
    Ok(family.covers(inputs).then_some(family))
}

/// Stages of a direct system of free semigroups N^{s_n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSystem {
    pub families: Vec<IndependentFamily>,
    /// transitions[n] has one row per member of stage n + 1 and one column
    /// per member of stage n: column j holds the coordinates of member j of
    /// stage n over stage n + 1.
    pub transitions: Vec<IntMatrix>,
}

impl DirectSystem {
    /// Integer coordinates of v over stage n, when they exist and are nonnegative.
    pub fn stage_coordinates(&self, n: usize, v: &FinSeq) -> Option<Vec<BigInt>> {
        let c = self.families.get(n)?.cone_coordinates(v)?;
        c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    /// The map from stage `from` to stage `to` as a product of transitions.
    pub fn compose(&self, from: usize, to: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(self.families[from].len());
        for t in &self.transitions[from..to] {
            m = t.mul(&m);
        }
        m
    }
}

fn to_int_coords(c: &[Rational]) -> Vec<BigInt> {
    c.iter().map(|x| {
        debug_assert!(x.is_integer());
        x.to_integer()
    }).collect()
}

/// Stage n covers the first n points and stage n - 1, with integer
/// coefficients after each member is divided by the least common multiple
/// of the denominators appearing in its coordinate.
pub fn build_direct_system(points: &[FinSeq], support: &SupportPattern, depth: usize) -> Result<DirectSystem, LazardError> {
    let depth = depth.min(points.len());
    let mut families: Vec<IndependentFamily> = Vec::with_capacity(depth);
    let mut transitions = Vec::new();
    for (n, h) in points.iter().take(depth).enumerate() {
        let prev: Vec<FinSeq> = families.last().map(|f| f.members.clone()).unwrap_or_default();
        let next = extend_mixed(&prev, h, support)?;
        let mut members = next.members;
        let mut needed = prev.clone();
        needed.push(h.clone());
        let coords: Vec<RatVector> = needed
            .iter()
            .map(|v| family_cone_coordinates(&members, v).map(|c| c.expect("extend_mixed covers its inputs")))
            .collect::<Result<_, _>>()?;
        for (k, m) in members.iter_mut().enumerate() {
            let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c[k].denom()));
            if !lcm.is_one() {
                *m = m.scale(&Rational::new(BigInt::one(), lcm));
            }
        }
        if n > 0 {
            let mut t = IntMatrix::zeros(members.len(), prev.len());
            for (j, g) in prev.iter().enumerate() {
                let c = family_cone_coordinates(&members, g)?.expect("previous stage is covered");
                for (k, x) in to_int_coords(&c).into_iter().enumerate() {
                    t.set(k, j, x);
                }
            }
            transitions.push(t);
        }
        families.push(IndependentFamily::unchecked(members, support));
    }
    Ok(DirectSystem { families, transitions })
}

/// Functionals of one stage: a functional positive on the nonzero points of
/// the stage cone, followed by generators of the dual cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingStage {
    pub positive: Vec<i64>,
    pub duals: Vec<Vec<i64>>,
}

/// The map h -> (g^1(h), f^1_1(h), ..., g^d(h), f^d_1(h), ...) with the
/// last positive functional repeated forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StreamEmbedding {
    pub stages: Vec<EmbeddingStage>,
}

fn idot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl StreamEmbedding {
    pub fn image(&self, h: &[i64]) -> FinSeq {
        let mut prefix = Vec::new();
        for st in &self.stages {
            prefix.push(Rational::from_integer(idot(&st.positive, h).into()));
            for f in &st.duals {
                prefix.push(Rational::from_integer(idot(f, h).into()));
            }
        }
        let tail = self.stages.last().map_or(0, |st| idot(&st.positive, h));
        FinSeq::new(prefix, Rational::from_integer(tail.into()))
    }

    /// Total number of prefix slots.
    pub fn width(&self) -> usize {
        self.stages.iter().map(|s| 1 + s.duals.len()).sum()
    }

    /// Position (from 1) of the last positive functional.
    pub fn last_positive_slot(&self) -> usize {
        self.width() - self.stages.last().map_or(0, |s| s.duals.len())
    }

    /// Indices where the image of every nonzero point of the last stage is
    /// positive: the last positive slot and everything past the prefix.
    pub fn support(&self) -> SupportPattern {
        SupportPattern::new(self.width(), [self.last_positive_slot()])
    }

    /// An image difference is almost non-negative exactly when the last
    /// stage functionals are all nonnegative on it, since later stages
    /// repeat the last one.
    pub fn last_block_nonnegative(&self, d: &[i64]) -> bool {
        self.stages.last().is_none_or(|st| idot(&st.positive, d) >= 0 && st.duals.iter().all(|f| idot(f, d) >= 0))
    }
}

/// Functionals for the saturated prefixes of a point stream.
pub fn embed_stream(points: &[Vec<i64>], depth: usize) -> Result<StreamEmbedding, LazardError> {
    let chain = filtration(points, depth)?;
    let mut stages = Vec::with_capacity(chain.len());
    for c in &chain {
        let cone = c.cone()?;
        if !cone.is_pointed() {
            let w = is_positive(c)?.witness.unwrap_or_default();
            return Err(LazardError::NotPositive { witness: w });
        }
        stages.push(EmbeddingStage { positive: cone.interior_dual_sum(), duals: cone.dual().to_vec() });
    }
    Ok(StreamEmbedding { stages })
}

/// Images of the generators of a positive normal semigroup, with a box
/// certificate that the embedding is injective and full.
pub fn embed_full(h: &AffineSemigroup, depth: usize) -> Result<(Vec<FinSeq>, StreamEmbedding, Verdict), LazardError> {
    let pos = is_positive(h)?;
    if !pos.value {
        return Err(LazardError::NotPositive { witness: pos.witness.unwrap_or_default() });
    }
    let normal = is_normal(h)?;
    if !normal.value {
        return Err(LazardError::NotNormal { witness: normal.witness.unwrap_or_default() });
    }
    let emb = embed_stream(h.generators(), depth)?;
    let images = h.generators().iter().map(|g| emb.image(g)).collect();
    Ok((images, emb.clone(), certify_embedding(h, &emb)?))
}

/// Checks on the search box that distinct members have distinct images and
/// that a difference of members with almost non-negative image is a member.
pub fn certify_embedding(h: &AffineSemigroup, emb: &StreamEmbedding) -> Result<Verdict, LazardError> {
    let oracle = h.oracle()?;
    let members: Vec<Vec<i64>> =
        box_points(h.ambient_dim(), h.search_bound()).into_iter().filter(|p| oracle.contains(p)).collect();
    let mut diffs: BTreeSet<Vec<i64>> = BTreeSet::new();
    for x in &members {
        for y in &members {
            if x != y {
                diffs.insert(x.iter().zip(y).map(|(a, b)| a - b).collect());
            }
        }
    }
    let mut diffs: Vec<Vec<i64>> = diffs.into_iter().collect();
    diffs.sort_by_key(|d| (d.iter().map(|x| x.abs()).sum::<i64>(), d.clone()));
    for d in diffs {
        if emb.image(&d).is_zero() {
            return Ok(Verdict::refuted(d, true));
        }
        if emb.last_block_nonnegative(&d) && !oracle.contains(&d) {
            return Ok(Verdict::refuted(d, true));
        }
    }
    Ok(Verdict::holds_on_box())
}
