//! Monomial ideals in a polynomial ring over the rationals.
//!
//! Betti numbers come from the Taylor complex tensored down to the field: the
//! entry between e_D and e_{D minus i} survives (as a sign) exactly when
//! deleting i does not change the lcm. Everything is exact; homology ranks
//! are integer matrix ranks over Q.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::small_int_rank;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("the ideal is the whole ring")]
    ImproperIdeal,
    #[error("{first:?} and {second:?} share a variable")]
    NotCoprime { first: Vec<u32>, second: Vec<u32> },
    #[error("{count} generators exceed the cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },
    #[error("expected {expected} variables, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("exponent multiplier must be positive")]
    ZeroPower,
    #[error("empty generator list")]
    NoGenerators,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// Default cap on generators for anything built on the Taylor complex,
/// which has 2^n basis elements.
pub const DEFAULT_GENERATOR_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn unit(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// self / other, if other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() })
    }

    pub fn pow(&self, t: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * t).collect() }
    }

    /// Exponents clamped to 0/1.
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// Bit i set when x_i divides the monomial.
    pub fn support_mask(&self) -> u64 {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support_mask() & other.support_mask() == 0
    }
}

/// Every monomial in `nvars` variables with each exponent at most `max_exp`,
/// ordered by degree and then lexicographically on exponents.
pub fn monomials_up_to(nvars: usize, max_exp: u32) -> Vec<Monomial> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..nvars {
        out = out.into_iter().flat_map(|p| (0..=max_exp).map(move |e| {
            let mut q = p.clone();
            q.push(e);
            q
        })).collect();
    }
    out.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    out.into_iter().map(Monomial::new).collect()
}

/// Variable names, in declaration order. Sign conventions follow this order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ring {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new(names: Vec<String>) -> Result<Self, MonomialError> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) || names[..i].contains(n) {
                return Err(MonomialError::Parse(n.clone()));
            }
        }
        Ok(Ring { names })
    }

    /// x, y, z, w for up to four variables, x1, x2, ... beyond.
    pub fn standard(nvars: usize) -> Self {
        let names = if nvars <= 4 {
            ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=nvars).map(|i| format!("x{i}")).collect()
        };
        Ring { names }
    }

    /// Variables in order of first appearance in the given monomial texts.
    pub fn infer<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Self, MonomialError> {
        let mut names: Vec<String> = Vec::new();
        for t in texts {
            for (name, _) in factors(t)? {
                if !names.contains(&name) {
                    names.push(name);
                }
            }
        }
        Ring::new(names)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Parses `x^2*y`; `1` is the unit monomial.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial, MonomialError> {
        let mut exps = vec![0u32; self.nvars()];
        for (name, e) in factors(text)? {
            let i = self.names.iter().position(|n| *n == name).ok_or(MonomialError::UnknownVariable(name))?;
            exps[i] += e;
        }
        Ok(Monomial::new(exps))
    }

    /// Comma separated monomials, reduced to minimal generators.
    pub fn parse_ideal(&self, text: &str) -> Result<MonomialIdeal, MonomialError> {
        let gens = split_list(text).map(|t| self.parse_monomial(t)).collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::new(self.nvars(), gens)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps()
            .iter()
            .zip(&self.names)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn format_ideal(&self, i: &MonomialIdeal) -> String {
        let parts: Vec<String> = i.gens().iter().map(|g| self.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Splits a comma separated list, tolerating surrounding parentheses.
pub fn split_list(text: &str) -> impl Iterator<Item = &str> {
    let t = text.trim();
    let t = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    t.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn factors(text: &str) -> Result<Vec<(String, u32)>, MonomialError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(MonomialError::Parse(text.to_string()));
    }
    let mut out = Vec::new();
    for f in text.split('*').map(str::trim) {
        if f == "1" {
            continue;
        }
        let (name, e) = match f.split_once('^') {
            Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| MonomialError::Parse(f.to_string()))?),
            None => (f, 1),
        };
        if !is_identifier(name) {
            return Err(MonomialError::Parse(f.to_string()));
        }
        out.push((name.to_string(), e));
    }
    Ok(out)
}

/// A monomial ideal stored by its minimal generators, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, raw: Vec<Monomial>) -> Result<Self, MonomialError> {
        for g in &raw {
            if g.nvars() != nvars {
                return Err(MonomialError::VariableMismatch { expected: nvars, found: g.nvars() });
            }
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(raw) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(Monomial::is_unit)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Inclusion of ideals, checked on generators.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
        same_ring(self, other)?;
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }
}

fn same_ring(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<(), MonomialError> {
    if i.nvars != j.nvars {
        return Err(MonomialError::VariableMismatch { expected: i.nvars, found: j.nvars });
    }
    Ok(())
}

fn minimalize(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    raw.sort_by_key(|m| (m.degree(), std::cmp::Reverse(m.exps.clone())));
    raw.dedup();
    let mut keep: Vec<Monomial> = Vec::with_capacity(raw.len());
    for m in raw {
        if !keep.iter().any(|k| k.divides(&m)) {
            keep.push(m);
        }
    }
    keep.sort_by(|a, b| b.exps.cmp(&a.exps));
    keep
}

/// Minimal generators of the ideal generated by `raw`.
pub fn min_gens(raw: &[Monomial]) -> Result<MonomialIdeal, MonomialError> {
    let nvars = raw.first().ok_or(MonomialError::NoGenerators)?.nvars();
    MonomialIdeal::new(nvars, raw.to_vec())
}

pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
    same_ring(i, j)?;
    let gens = i.gens.iter().flat_map(|u| j.gens.iter().map(move |v| u.lcm(v))).collect();
    MonomialIdeal::new(i.nvars, gens)
}

/// (i : u)
pub fn colon(i: &MonomialIdeal, u: &Monomial) -> MonomialIdeal {
    let gens = i.gens.iter().map(|g| g.div(&g.gcd(u)).expect("gcd divides")).collect();
    MonomialIdeal { nvars: i.nvars, gens: minimalize(gens) }
}

pub fn radical(i: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal { nvars: i.nvars, gens: minimalize(i.gens.iter().map(Monomial::radical).collect()) }
}

/// Generated by u^t over the generators u.
pub fn frobenius_power(i: &MonomialIdeal, t: u32) -> Result<MonomialIdeal, MonomialError> {
    if t == 0 {
        return Err(MonomialError::ZeroPower);
    }
    Ok(MonomialIdeal { nvars: i.nvars, gens: minimalize(i.gens.iter().map(|g| g.pow(t)).collect()) })
}

/// Polarized ideal in new variables. New variable k stands for copy
/// `copy[k]` (from 1) of original variable `back_map[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub back_map: Vec<usize>,
    pub copy: Vec<u32>,
}

impl Polarization {
    /// Names like x_1, x_2 for the copies of x.
    pub fn ring(&self, original: &Ring) -> Ring {
        let names = self.back_map.iter().zip(&self.copy).map(|(&v, &c)| format!("{}_{c}", original.names()[v])).collect();
        Ring { names }
    }

    /// Substituting every copy by its original variable.
    pub fn depolarize(&self, m: &Monomial, nvars: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        for (k, &e) in m.exps().iter().enumerate() {
            exps[self.back_map[k]] += e;
        }
        Monomial::new(exps)
    }
}

/// Each x^k becomes x_1 x_2 ... x_k. Every variable keeps at least one copy.
pub fn polarize(i: &MonomialIdeal) -> Polarization {
    let n = i.nvars;
    let width: Vec<u32> = (0..n).map(|v| i.gens.iter().map(|g| g.exps[v]).max().unwrap_or(0).max(1)).collect();
    let mut offset = Vec::with_capacity(n);
    let mut back_map = Vec::new();
    let mut copy = Vec::new();
    for (v, &w) in width.iter().enumerate() {
        offset.push(back_map.len());
        for c in 1..=w {
            back_map.push(v);
            copy.push(c);
        }
    }
    let total = back_map.len();
    let gens = i
        .gens
        .iter()
        .map(|g| {
            let mut exps = vec![0; total];
            for v in 0..n {
                for c in 0..g.exps[v] as usize {
                    exps[offset[v] + c] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    Polarization { ideal: MonomialIdeal { nvars: total, gens: minimalize(gens) }, back_map, copy }
}

/// Least number of variables meeting the support of every generator.
pub fn height(i: &MonomialIdeal) -> Result<usize, MonomialError> {
    if !i.is_proper() {
        return Err(MonomialError::ImproperIdeal);
    }
    let supports: Vec<u64> = i.gens.iter().map(Monomial::support_mask).collect();
    let n = i.nvars;
    assert!(n < 32, "height search is exhaustive over variable subsets");
    let mut best = if supports.is_empty() { 0 } else { n };
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < best && supports.iter().all(|s| s & mask != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Total Betti numbers of A/I over Q and the projective dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub total: Vec<usize>,
    pub pd: usize,
}

pub fn betti_table(i: &MonomialIdeal) -> Result<BettiTable, MonomialError> {
    betti_table_capped(i, DEFAULT_GENERATOR_CAP)
}

pub fn pd(i: &MonomialIdeal) -> Result<usize, MonomialError> {
    Ok(betti_table(i)?.pd)
}

/// lcm of every subset of the generators, indexed by bitmask.
fn subset_lcms(gens: &[Monomial], nvars: usize) -> Vec<Monomial> {
    let mut lcms = vec![Monomial::unit(nvars); 1 << gens.len()];
    for mask in 1usize..lcms.len() {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low]);
    }
    lcms
}

/// Bitmasks of size k, in lexicographic order of their index lists.
fn masks_of_size(n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, mask: usize, out: &mut Vec<usize>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..n {
            if n - i >= k {
                rec(i + 1, n, k - 1, mask | (1 << i), out);
            }
        }
    }
    rec(0, n, k, 0, &mut out);
    out
}

/// (-1)^(number of members of the subset below j)
fn taylor_sign(mask: usize, j: usize) -> i64 {
    if (mask & ((1 << j) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn betti_table_capped(i: &MonomialIdeal, cap: usize) -> Result<BettiTable, MonomialError> {
    if !i.is_proper() {
        return Err(MonomialError::ImproperIdeal);
    }
    let n = i.gens.len();
    if n > cap {
        return Err(MonomialError::TooManyGenerators { count: n, cap });
    }
    let lcms = subset_lcms(&i.gens, i.nvars);
    let levels: Vec<Vec<usize>> = (0..=n).map(|k| masks_of_size(n, k)).collect();
    let mut position = vec![0usize; 1 << n];
    for level in &levels {
        for (p, &m) in level.iter().enumerate() {
            position[m] = p;
        }
    }
    // rank of the reduced differential T_k -> T_{k-1}
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        let rows = levels[k - 1].len();
        let mut matrix = vec![vec![0i64; levels[k].len()]; rows];
        let mut any = false;
        for (c, &mask) in levels[k].iter().enumerate() {
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    let face = mask & !(1 << j);
                    if lcms[face] == lcms[mask] {
                        matrix[position[face]][c] = taylor_sign(mask, j);
                        any = true;
                    }
                }
            }
        }
        if any {
            ranks[k] = small_int_rank(&matrix, levels[k].len());
        }
    }
    let total: Vec<usize> = (0..=n).map(|k| levels[k].len() - ranks[k] - ranks[k + 1]).collect();
    let pd = total.iter().rposition(|&b| b != 0).unwrap_or(0);
    Ok(BettiTable { total: total[..=pd].to_vec(), pd })
}

/// cd(I) for a monomial ideal: pd(A / rad I).
pub fn cd(i: &MonomialIdeal) -> Result<usize, MonomialError> {
    let r = radical(i);
    let c = pd(&r)?;
    debug_assert!(c <= pd(i)?);
    Ok(c)
}

/// One entry of a differential: sign times monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub sign: i8,
    pub monomial: Monomial,
}

/// A basis element e_D of a free complex and its multidegree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Label {
    pub subset: Vec<usize>,
    pub degree: Monomial,
}

/// A free complex F_0 <- F_1 <- ... with monomial entries.
/// `differentials[k - 1]` is d_k : F_k -> F_{k-1} as sparse
/// (row, column, entry) triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeComplex {
    pub ranks: Vec<usize>,
    pub labels: Vec<Vec<Label>>,
    pub differentials: Vec<Vec<(usize, usize, Term)>>,
}

impl FreeComplex {
    /// d_{k-1} d_k = 0 for every k, checked entry by entry.
    pub fn is_complex(&self) -> bool {
        for k in 2..=self.differentials.len() {
            let mut acc: HashMap<(usize, usize, Monomial), i64> = HashMap::new();
            for (r1, c1, t1) in &self.differentials[k - 2] {
                for (r2, c2, t2) in &self.differentials[k - 1] {
                    if c1 == r2 {
                        *acc.entry((*r1, *c2, t1.monomial.mul(&t2.monomial))).or_default() +=
                            i64::from(t1.sign) * i64::from(t2.sign);
                    }
                }
            }
            if acc.values().any(|&v| v != 0) {
                return false;
            }
        }
        true
    }

    /// Dense entry lookup; `None` for a zero entry.
    pub fn entry(&self, k: usize, row: usize, col: usize) -> Option<&Term> {
        self.differentials[k - 1].iter().find(|(r, c, _)| *r == row && *c == col).map(|(_, _, t)| t)
    }
}

fn check_gens(gens: &[Monomial]) -> Result<usize, MonomialError> {
    let first = gens.first().ok_or(MonomialError::NoGenerators)?;
    let nvars = first.nvars();
    for g in gens {
        if g.nvars() != nvars {
            return Err(MonomialError::VariableMismatch { expected: nvars, found: g.nvars() });
        }
        if g.is_unit() {
            return Err(MonomialError::ImproperIdeal);
        }
    }
    if gens.len() > DEFAULT_GENERATOR_CAP {
        return Err(MonomialError::TooManyGenerators { count: gens.len(), cap: DEFAULT_GENERATOR_CAP });
    }
    Ok(nvars)
}

/// Complex on subsets of the generators where e_D has degree `degree(D)`
/// and d(e_D) = sum over j in D of sign * degree(D)/degree(D - j) e_{D - j}.
fn subset_complex(gens: &[Monomial], degree: impl Fn(usize) -> Monomial) -> FreeComplex {
    let n = gens.len();
    let levels: Vec<Vec<usize>> = (0..=n).map(|k| masks_of_size(n, k)).collect();
    let mut position = vec![0usize; 1 << n];
    for level in &levels {
        for (p, &m) in level.iter().enumerate() {
            position[m] = p;
        }
    }
    let degrees: Vec<Monomial> = (0..1usize << n).map(&degree).collect();
    let labels = levels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|&m| Label { subset: (0..n).filter(|j| m & (1 << j) != 0).collect(), degree: degrees[m].clone() })
                .collect()
        })
        .collect();
    let mut differentials = Vec::with_capacity(n);
    for level in levels.iter().skip(1) {
        let mut d = Vec::new();
        for (c, &mask) in level.iter().enumerate() {
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    let face = mask & !(1 << j);
                    let q = degrees[mask].div(&degrees[face]).expect("face degree divides");
                    d.push((position[face], c, Term { sign: taylor_sign(mask, j) as i8, monomial: q }));
                }
            }
        }
        d.sort_by_key(|(r, c, _)| (*r, *c));
        differentials.push(d);
    }
    FreeComplex { ranks: levels.iter().map(Vec::len).collect(), labels, differentials }
}

pub fn taylor_complex(gens: &[Monomial]) -> Result<FreeComplex, MonomialError> {
    let nvars = check_gens(gens)?;
    let lcms = subset_lcms(gens, nvars);
    Ok(subset_complex(gens, |m| lcms[m].clone()))
}

pub fn koszul_complex(gens: &[Monomial]) -> Result<FreeComplex, MonomialError> {
    let nvars = check_gens(gens)?;
    let n = gens.len();
    Ok(subset_complex(gens, |m| {
        (0..n).filter(|j| m & (1 << j) != 0).fold(Monomial::unit(nvars), |acc, j| acc.mul(&gens[j]))
    }))
}

/// The Koszul complex, the Taylor complex and the comparison map between
/// them, which is multiplication by product(D)/lcm(D) on e_D.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulComparison {
    pub koszul: FreeComplex,
    pub taylor: FreeComplex,
    pub comparison: Vec<Vec<Monomial>>,
    pub comparison_ok: bool,
}

pub fn koszul_compare(gens: &[Monomial]) -> Result<KoszulComparison, MonomialError> {
    check_gens(gens)?;
    for (a, u) in gens.iter().enumerate() {
        for v in &gens[a + 1..] {
            if !u.is_coprime(v) {
                return Err(MonomialError::NotCoprime { first: u.exps.clone(), second: v.exps.clone() });
            }
        }
    }
    let koszul = koszul_complex(gens)?;
    let taylor = taylor_complex(gens)?;
    let comparison: Vec<Vec<Monomial>> = koszul
        .labels
        .iter()
        .zip(&taylor.labels)
        .map(|(kl, tl)| kl.iter().zip(tl).map(|(a, b)| a.degree.div(&b.degree).expect("lcm divides the product")).collect())
        .collect();
    let comparison_ok = koszul.is_complex()
        && taylor.is_complex()
        && koszul.differentials == taylor.differentials
        && comparison.iter().flatten().all(Monomial::is_unit);
    Ok(KoszulComparison { koszul, taylor, comparison, comparison_ok })
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.total.iter().map(|b| b.to_string()).collect();
        write!(f, "betti ({}) pd {}", parts.join(", "), self.pd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::standard(3)
    }

    fn ideal(s: &str) -> MonomialIdeal {
        ring().parse_ideal(s).unwrap()
    }

    fn m(s: &str) -> Monomial {
        ring().parse_monomial(s).unwrap()
    }

    #[test]
    fn parsing_and_printing() {
        let r = ring();
        assert_eq!(r.format_monomial(&m("x^2*y")), "x^2*y");
        assert_eq!(r.format_monomial(&m("1")), "1");
        assert_eq!(m("x*x"), m("x^2"));
        assert!(r.parse_monomial("q").is_err());
        assert!(r.parse_monomial("x^").is_err());
        assert_eq!(r.format_ideal(&ideal("y^3, x^2*y, x^2")), "(x^2, y^3)");
        let inferred = Ring::infer(["b*a", "c^2"]).unwrap();
        assert_eq!(inferred.names(), &["b", "a", "c"]);
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(ideal("x^2, x^2*y, y^3"), ideal("x^2, y^3"));
        assert_eq!(ideal("x, y, x").gens().len(), 2);
        assert_eq!(ideal("x*y, y*z, z*x").gens().len(), 3);
    }

    #[test]
    fn intersections() {
        assert_eq!(intersect(&ideal("x"), &ideal("y")).unwrap(), ideal("x*y"));
        assert_eq!(intersect(&ideal("x, y"), &ideal("z")).unwrap(), ideal("x*z, y*z"));
        assert_eq!(intersect(&ideal("x^2, y"), &ideal("x")).unwrap(), ideal("x^2, x*y"));
    }

    #[test]
    fn colons() {
        assert_eq!(colon(&ideal("x*y"), &m("y*z")), ideal("x"));
        assert_eq!(colon(&ideal("x"), &m("x")), ideal("1"));
        assert_eq!(colon(&ideal("x^2"), &m("y")), ideal("x^2"));
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(&ideal("x^2*y")), ideal("x*y"));
        assert_eq!(radical(&ideal("x^2, y^3")), ideal("x, y"));
        assert_eq!(radical(&ideal("x*y, y*z")), ideal("x*y, y*z"));
    }

    #[test]
    fn taylor_examples() {
        let t = taylor_complex(&[m("x"), m("y")]).unwrap();
        assert_eq!(t.ranks, vec![1, 2, 1]);
        assert!(t.is_complex());
        assert_eq!(t.differentials, koszul_complex(&[m("x"), m("y")]).unwrap().differentials);

        let t = taylor_complex(&[m("x*y"), m("y*z"), m("x*z")]).unwrap();
        assert_eq!(t.ranks, vec![1, 3, 3, 1]);
        assert_eq!(t.labels[3][0].degree, m("x*y*z"));
        assert!(t.is_complex());
        // d(e_{0,1}) = z e_1 - x e_0 in the sign convention
        assert_eq!(t.entry(2, 0, 0), Some(&Term { sign: -1, monomial: m("z") }));
        assert_eq!(t.entry(2, 1, 0), Some(&Term { sign: 1, monomial: m("x") }));

        let t = taylor_complex(&[m("x")]).unwrap();
        assert_eq!(t.ranks, vec![1, 1]);
        assert_eq!(t.entry(1, 0, 0), Some(&Term { sign: 1, monomial: m("x") }));
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_table(&ideal("x, y")).unwrap(), BettiTable { total: vec![1, 2, 1], pd: 2 });
        assert_eq!(betti_table(&ideal("x*y, y*z, z*x")).unwrap(), BettiTable { total: vec![1, 3, 2], pd: 2 });
        assert_eq!(betti_table(&ideal("x")).unwrap(), BettiTable { total: vec![1, 1], pd: 1 });
        assert_eq!(betti_table(&MonomialIdeal::zero(2)).unwrap(), BettiTable { total: vec![1], pd: 0 });
        assert_eq!(betti_table(&ideal("1")), Err(MonomialError::ImproperIdeal));
        assert!(matches!(
            betti_table_capped(&ideal("x, y, z"), 2),
            Err(MonomialError::TooManyGenerators { count: 3, cap: 2 })
        ));
    }

    #[test]
    fn koszul_comparison() {
        let c = koszul_compare(&[m("x"), m("y")]).unwrap();
        assert!(c.comparison_ok);
        assert_eq!(c.comparison[2], vec![Monomial::unit(3)]);
        assert!(koszul_compare(&[m("x"), m("y"), m("z")]).unwrap().comparison_ok);
        assert_eq!(
            koszul_compare(&[m("x*y"), m("y*z")]).unwrap_err(),
            MonomialError::NotCoprime { first: vec![1, 1, 0], second: vec![0, 1, 1] }
        );
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius_power(&ideal("x, y"), 2).unwrap();
        assert_eq!(f, ideal("x^2, y^2"));
        assert_eq!(pd(&f).unwrap(), 2);
        assert_eq!(pd(&frobenius_power(&ideal("x*y"), 3).unwrap()).unwrap(), 1);
        let i = ideal("x*y, y*z");
        assert_eq!(pd(&frobenius_power(&i, 2).unwrap()).unwrap(), pd(&i).unwrap());
        assert_eq!(frobenius_power(&i, 0), Err(MonomialError::ZeroPower));
    }

    #[test]
    fn polarization_examples() {
        let p = polarize(&ideal("x^2"));
        let pr = p.ring(&ring());
        assert_eq!(pr.format_ideal(&p.ideal), "(x_1*x_2)");
        assert_eq!(pd(&p.ideal).unwrap(), 1);

        let i = ideal("x^2, x*y");
        let p = polarize(&i);
        assert_eq!(p.ring(&ring()).format_ideal(&p.ideal), "(x_1*x_2, x_1*y_1)");
        assert_eq!(betti_table(&p.ideal).unwrap(), betti_table(&i).unwrap());

        let i = ideal("x*y, y*z");
        let p = polarize(&i);
        assert_eq!(p.ideal.gens().len(), 2);
        assert_eq!(p.ideal.nvars(), 3);
        assert_eq!(p.ideal.gens().iter().map(|g| p.depolarize(g, 3)).collect::<Vec<_>>(), i.gens());
    }

    #[test]
    fn heights() {
        assert_eq!(height(&ideal("x, y")).unwrap(), 2);
        assert_eq!(height(&ideal("x*y, y*z")).unwrap(), 1);
        assert_eq!(height(&ideal("x*y, y*z, z*x")).unwrap(), 2);
        assert_eq!(height(&ideal("1")), Err(MonomialError::ImproperIdeal));
    }

    #[test]
    fn cohomological_dimension() {
        assert_eq!(cd(&ideal("x^2")).unwrap(), 1);
        assert_eq!(cd(&ideal("x*y, y*z, z*x")).unwrap(), 2);
        let i = ideal("x^2, x*y");
        assert_eq!(cd(&i).unwrap(), 1);
        assert_eq!(pd(&i).unwrap(), 2);
    }

    #[test]
    fn enumeration() {
        let all = monomials_up_to(2, 2);
        assert_eq!(all.len(), 9);
        assert!(all[0].is_unit());
        assert_eq!(all[1], Monomial::new(vec![1, 0]));
    }
}
