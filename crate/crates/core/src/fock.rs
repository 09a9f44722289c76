//! A truncated weakly monotone Fock space with exact rational coefficients.
//!
//! Basis vectors are weakly decreasing label tuples `e_{i_k} ⊗ ... ⊗ e_{i_1}`
//! with `i_k >= ... >= i_1`, stored leading label first; the empty tuple is
//! the vacuum. `A_i` strips a leading `e_i`, `A†_i` prepends `e_i` when `i`
//! is at least the current leading label. Creation past the truncation depth
//! drops the term.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{rational_string, BigRational};
use crate::report::{IdentityCheck, VerificationReport};

/// Default largest `n` accepted by [`moment_via_fock`].
pub const DEFAULT_FOCK_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("n = {n} exceeds the Fock simulation bound {bound}")]
    SizeExceeded { n: usize, bound: usize },
    #[error("label {label} outside [1, {m}]")]
    LabelOutOfRange { label: u32, m: u32 },
    #[error("truncation depth {depth} too small (need at least {required})")]
    DepthTooSmall { depth: usize, required: usize },
    #[error("word {0} does not alternate between creation and annihilation")]
    NotAlternating(String),
    #[error("word {word} uses label {found}, element is restricted to label {expected}")]
    MixedLabels { word: String, expected: u32, found: u32 },
    #[error("the number of labels m must be positive")]
    NoLabels,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BasisTuple(Vec<u32>);

impl BasisTuple {
    pub fn vacuum() -> Self {
        Self(Vec::new())
    }

    /// Accepts only weakly decreasing, positive labels.
    pub fn new(labels: Vec<u32>) -> Option<Self> {
        let ok = labels.iter().all(|&l| l >= 1) && labels.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Self(labels))
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn leading(&self) -> Option<u32> {
        self.0.first().copied()
    }
}

impl fmt::Display for BasisTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("Ω");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("e{l}")).collect();
        f.write_str(&parts.join("⊗"))
    }
}

/// Finite linear combination of basis tuples; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockState {
    terms: BTreeMap<BasisTuple, BigRational>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(BasisTuple::vacuum())
    }

    pub fn basis(b: BasisTuple) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(b, BigRational::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisTuple, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &BasisTuple) -> BigRational {
        self.terms.get(b).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn vacuum_coefficient(&self) -> BigRational {
        self.coefficient(&BasisTuple::vacuum())
    }

    pub fn add_term(&mut self, b: BasisTuple, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockState, c: &BigRational) {
        for (b, v) in &other.terms {
            self.add_term(b.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &BigRational) -> FockState {
        let mut out = FockState::zero();
        out.add_scaled(self, c);
        out
    }

    /// Exact inner product (real coefficients, orthonormal basis).
    pub fn inner(&self, other: &FockState) -> BigRational {
        self.terms
            .iter()
            .filter_map(|(b, c)| other.terms.get(b).map(|d| c * d))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn max_depth(&self) -> usize {
        self.terms.keys().map(BasisTuple::depth).max().unwrap_or(0)
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("{}·{}", rational_string(c), b)).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    Creation,
    Annihilation,
}

/// `A†_label` or `A_label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub label: u32,
    pub action: Action,
}

impl Letter {
    pub fn create(label: u32) -> Self {
        Self { label, action: Action::Creation }
    }

    pub fn annihilate(label: u32) -> Self {
        Self { label, action: Action::Annihilation }
    }

    /// `+1` for creation, `-1` for annihilation.
    pub fn sign(&self) -> i8 {
        match self.action {
            Action::Creation => 1,
            Action::Annihilation => -1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.action {
            Action::Creation => write!(f, "A†{}", self.label),
            Action::Annihilation => write!(f, "A{}", self.label),
        }
    }
}

/// Product of letters written left to right and applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OperatorWord(pub Vec<Letter>);

impl OperatorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    /// Word from a sign string and labels: `A_{k_1}^{ε(1)} ... A_{k_n}^{ε(n)}`.
    pub fn from_signs(signs: &[i8], labels: &[u32]) -> Self {
        Self(
            signs
                .iter()
                .zip(labels)
                .map(|(&s, &l)| if s > 0 { Letter::create(l) } else { Letter::annihilate(l) })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn then(&self, rhs: &OperatorWord) -> OperatorWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&rhs.0);
        OperatorWord(letters)
    }

    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|w| w[0].action != w[1].action)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Rational linear combination of words (labels unrestricted).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorSum(pub Vec<(BigRational, OperatorWord)>);

impl OperatorSum {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn word(w: OperatorWord) -> Self {
        Self(vec![(BigRational::one(), w)])
    }

    pub fn scaled(c: BigRational, w: OperatorWord) -> Self {
        Self(vec![(c, w)])
    }

    /// Product of sums, distributing over terms.
    pub fn then(&self, rhs: &OperatorSum) -> OperatorSum {
        let mut out = Vec::with_capacity(self.0.len() * rhs.0.len());
        for (a, u) in &self.0 {
            for (b, v) in &rhs.0 {
                out.push((a * b, u.then(v)));
            }
        }
        OperatorSum(out)
    }
}

impl fmt::Display for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(c, w)| format!("({})·{}", rational_string(c), w)).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of the *-algebra generated by a single `A_i`: a combination
/// of alternating words in `A_i`, `A†_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    label: u32,
    sum: OperatorSum,
}

impl AlgebraElement {
    pub fn new(label: u32, terms: Vec<(BigRational, OperatorWord)>) -> Result<Self, FockError> {
        for (_, w) in &terms {
            if let Some(bad) = w.0.iter().find(|l| l.label != label) {
                return Err(FockError::MixedLabels { word: w.to_string(), expected: label, found: bad.label });
            }
            if !w.is_alternating() {
                return Err(FockError::NotAlternating(w.to_string()));
            }
        }
        Ok(Self { label, sum: OperatorSum(terms) })
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn as_sum(&self) -> &OperatorSum {
        &self.sum
    }

    /// Longest word length.
    pub fn word_len(&self) -> usize {
        self.sum.0.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sum.fmt(f)
    }
}

/// The span of basis tuples over labels `[m]` with length at most `depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    m: u32,
    depth: usize,
}

impl FockSpace {
    pub fn new(m: u32, depth: usize) -> Result<Self, FockError> {
        if m == 0 {
            return Err(FockError::NoLabels);
        }
        Ok(Self { m, depth })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn check_label(&self, i: u32) -> Result<(), FockError> {
        if i == 0 || i > self.m {
            Err(FockError::LabelOutOfRange { label: i, m: self.m })
        } else {
            Ok(())
        }
    }

    /// Every basis tuple with length at most `max_depth`, shortest first.
    pub fn basis(&self, max_depth: usize) -> Vec<BasisTuple> {
        let mut out = vec![BasisTuple::vacuum()];
        let mut frontier = vec![Vec::<u32>::new()];
        for _ in 0..max_depth.min(self.depth) {
            let mut next = Vec::new();
            for t in &frontier {
                // Appending on the right keeps the tuple weakly decreasing.
                let cap = t.last().copied().unwrap_or(self.m);
                for l in 1..=cap {
                    let mut u = t.clone();
                    u.push(l);
                    next.push(u);
                }
            }
            out.extend(next.iter().cloned().map(BasisTuple));
            frontier = next;
        }
        out.sort_by(|a, b| a.depth().cmp(&b.depth()).then_with(|| a.cmp(b)));
        out
    }

    pub fn apply_annihilation(&self, i: u32, s: &FockState) -> Result<FockState, FockError> {
        self.check_label(i)?;
        let mut out = FockState::zero();
        for (b, c) in s.terms() {
            if b.leading() == Some(i) {
                out.add_term(BasisTuple(b.0[1..].to_vec()), c.clone());
            }
        }
        Ok(out)
    }

    pub fn apply_creation(&self, i: u32, s: &FockState) -> Result<FockState, FockError> {
        self.check_label(i)?;
        let mut out = FockState::zero();
        for (b, c) in s.terms() {
            if b.depth() >= self.depth {
                continue;
            }
            if b.leading().map_or(true, |lead| i >= lead) {
                let mut labels = Vec::with_capacity(b.depth() + 1);
                labels.push(i);
                labels.extend_from_slice(&b.0);
                out.add_term(BasisTuple(labels), c.clone());
            }
        }
        Ok(out)
    }

    pub fn apply_letter(&self, l: Letter, s: &FockState) -> Result<FockState, FockError> {
        match l.action {
            Action::Creation => self.apply_creation(l.label, s),
            Action::Annihilation => self.apply_annihilation(l.label, s),
        }
    }

    pub fn apply_word(&self, w: &OperatorWord, s: &FockState) -> Result<FockState, FockError> {
        let mut cur = s.clone();
        for &l in w.0.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_letter(l, &cur)?;
        }
        Ok(cur)
    }

    pub fn apply_sum(&self, p: &OperatorSum, s: &FockState) -> Result<FockState, FockError> {
        let mut out = FockState::zero();
        for (c, w) in &p.0 {
            out.add_scaled(&self.apply_word(w, s)?, c);
        }
        Ok(out)
    }

    pub fn apply_element(&self, p: &AlgebraElement, s: &FockState) -> Result<FockState, FockError> {
        self.apply_sum(&p.sum, s)
    }

    /// `S = Σ_{i ≤ m} (A_i + A†_i)`.
    pub fn apply_position_sum(&self, s: &FockState) -> Result<FockState, FockError> {
        let mut out = FockState::zero();
        let one = BigRational::one();
        for i in 1..=self.m {
            out.add_scaled(&self.apply_annihilation(i, s)?, &one);
            out.add_scaled(&self.apply_creation(i, s)?, &one);
        }
        Ok(out)
    }

    /// `⟨Ω, w Ω⟩`.
    pub fn vacuum_expectation(&self, w: &OperatorWord) -> Result<BigRational, FockError> {
        Ok(self.apply_word(w, &FockState::vacuum())?.vacuum_coefficient())
    }

    pub fn expectation(&self, p: &AlgebraElement) -> Result<BigRational, FockError> {
        Ok(self.apply_element(p, &FockState::vacuum())?.vacuum_coefficient())
    }
}

/// `⟨Ω, w Ω⟩` in the space over `[m]` truncated at `depth`.
pub fn vacuum_expectation(w: &OperatorWord, m: u32, depth: usize) -> Result<BigRational, FockError> {
    FockSpace::new(m, depth)?.vacuum_expectation(w)
}

/// `⟨Ω, S^power Ω⟩` at the given truncation depth.
pub fn vacuum_moment(m: u32, power: usize, depth: usize) -> Result<BigRational, FockError> {
    let space = FockSpace::new(m, depth)?;
    let mut state = FockState::vacuum();
    for _ in 0..power {
        state = space.apply_position_sum(&state)?;
    }
    Ok(state.vacuum_coefficient())
}

/// `ω_Ω(S_m^{2n})` by direct simulation at depth `n`: a `2n`-step walk that
/// returns to the vacuum never rises above height `n`.
pub fn moment_via_fock(m: u32, n: usize, bound: usize) -> Result<BigUint, FockError> {
    if n > bound {
        return Err(FockError::SizeExceeded { n, bound });
    }
    let value = vacuum_moment(m, 2 * n, n)?;
    debug_assert!(value.is_integer() && !value.is_negative());
    Ok(value.to_integer().to_biguint().expect("vacuum moments are nonnegative"))
}

/// Kronecker-style gate `α_{j,k} = 1` if `j >= k`, else `0`.
pub fn alpha(j: u32, k: u32) -> BigRational {
    if j >= k {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

use Letter as L;

fn w(letters: &[Letter]) -> OperatorWord {
    OperatorWord(letters.to_vec())
}

/// Checks the commutation relations and projection identities of the
/// creation/annihilation operators on every basis tuple of length at most
/// `depth - 1`. Evaluation uses enough headroom that truncation never bites.
pub fn check_operator_identities(m: u32, depth: usize) -> Result<VerificationReport, FockError> {
    if depth < 3 {
        return Err(FockError::DepthTooSmall { depth, required: 3 });
    }
    const HEADROOM: usize = 4;
    let space = FockSpace::new(m, depth - 1 + HEADROOM)?;
    let basis = space.basis(depth - 1);
    let labels: Vec<u32> = (1..=m).collect();
    let mut report = VerificationReport::default();

    type Instance = (String, OperatorSum, OperatorSum);
    let mut families: Vec<(&str, Vec<Instance>)> = Vec::new();
    let pairs = || labels.iter().flat_map(|&a| labels.iter().map(move |&b| (a, b)));

    families.push((
        "A†_i A†_j = 0 (i < j)",
        pairs()
            .filter(|(i, j)| i < j)
            .map(|(i, j)| {
                (format!("i={i},j={j}"), OperatorSum::word(w(&[L::create(i), L::create(j)])), OperatorSum::zero())
            })
            .collect(),
    ));
    families.push((
        "A_j A_i = 0 (i < j)",
        pairs()
            .filter(|(i, j)| i < j)
            .map(|(i, j)| {
                (
                    format!("i={i},j={j}"),
                    OperatorSum::word(w(&[L::annihilate(j), L::annihilate(i)])),
                    OperatorSum::zero(),
                )
            })
            .collect(),
    ));
    families.push((
        "A_i A†_j = 0 (i != j)",
        pairs()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| {
                (format!("i={i},j={j}"), OperatorSum::word(w(&[L::annihilate(i), L::create(j)])), OperatorSum::zero())
            })
            .collect(),
    ));
    families.push((
        "A_k A_j A†_j = α(j,k) A_k",
        pairs()
            .map(|(j, k)| {
                (
                    format!("j={j},k={k}"),
                    OperatorSum::word(w(&[L::annihilate(k), L::annihilate(j), L::create(j)])),
                    OperatorSum::scaled(alpha(j, k), w(&[L::annihilate(k)])),
                )
            })
            .collect(),
    ));
    families.push((
        "A_j A†_j A†_k = α(j,k) A†_k",
        pairs()
            .map(|(j, k)| {
                (
                    format!("j={j},k={k}"),
                    OperatorSum::word(w(&[L::annihilate(j), L::create(j), L::create(k)])),
                    OperatorSum::scaled(alpha(j, k), w(&[L::create(k)])),
                )
            })
            .collect(),
    ));
    families.push((
        "A_j A†_j A_k = A_k (j >= k)",
        pairs()
            .filter(|(j, k)| j >= k)
            .map(|(j, k)| {
                (
                    format!("j={j},k={k}"),
                    OperatorSum::word(w(&[L::annihilate(j), L::create(j), L::annihilate(k)])),
                    OperatorSum::word(w(&[L::annihilate(k)])),
                )
            })
            .collect(),
    ));
    families.push((
        "A†_k A_j A†_j = A†_k (j >= k)",
        pairs()
            .filter(|(j, k)| j >= k)
            .map(|(j, k)| {
                (
                    format!("j={j},k={k}"),
                    OperatorSum::word(w(&[L::create(k), L::annihilate(j), L::create(j)])),
                    OperatorSum::word(w(&[L::create(k)])),
                )
            })
            .collect(),
    ));
    families.push((
        "A_j A†_j A_k A†_k = A_l A†_l (l = min(j,k))",
        pairs()
            .map(|(j, k)| {
                let l = j.min(k);
                (
                    format!("j={j},k={k}"),
                    OperatorSum::word(w(&[L::annihilate(j), L::create(j), L::annihilate(k), L::create(k)])),
                    OperatorSum::word(w(&[L::annihilate(l), L::create(l)])),
                )
            })
            .collect(),
    ));
    families.push((
        "A_j A_k A†_k A†_j = α(k,j) A_j A†_j",
        pairs()
            .map(|(j, k)| {
                (
                    format!("j={j},k={k}"),
                    OperatorSum::word(w(&[L::annihilate(j), L::annihilate(k), L::create(k), L::create(j)])),
                    OperatorSum::scaled(alpha(k, j), w(&[L::annihilate(j), L::create(j)])),
                )
            })
            .collect(),
    ));
    families.push((
        "(A_i A†_i)^2 = A_i A†_i and (A†_i A_i)^2 = A†_i A_i",
        labels
            .iter()
            .flat_map(|&i| {
                let p = w(&[L::annihilate(i), L::create(i)]);
                let q = w(&[L::create(i), L::annihilate(i)]);
                [
                    (format!("i={i},AA†"), OperatorSum::word(p.then(&p)), OperatorSum::word(p)),
                    (format!("i={i},A†A"), OperatorSum::word(q.then(&q)), OperatorSum::word(q)),
                ]
            })
            .collect(),
    ));
    families.push((
        "A_i A†_i = A_i^p (A†_i)^p (p = 2, 3)",
        labels
            .iter()
            .flat_map(|&i| {
                [2usize, 3].map(|p| {
                    let mut letters = vec![L::annihilate(i); p];
                    letters.extend(std::iter::repeat(L::create(i)).take(p));
                    (
                        format!("i={i},p={p}"),
                        OperatorSum::word(OperatorWord(letters)),
                        OperatorSum::word(w(&[L::annihilate(i), L::create(i)])),
                    )
                })
            })
            .collect(),
    ));

    for (name, instances) in families {
        let mut check = IdentityCheck::new(name);
        for (tag, lhs, rhs) in &instances {
            for v in &basis {
                let s = FockState::basis(v.clone());
                let left = space.apply_sum(lhs, &s)?;
                let right = space.apply_sum(rhs, &s)?;
                check.record(left == right, || format!("{tag} on {v}: lhs = {left}, rhs = {right}"));
            }
        }
        report.push(check);
    }

    let mut adjoint = IdentityCheck::new("<A†_i u, v> = <u, A_i v>");
    for &i in &labels {
        for u in &basis {
            let au = space.apply_creation(i, &FockState::basis(u.clone()))?;
            for v in &basis {
                let av = space.apply_annihilation(i, &FockState::basis(v.clone()))?;
                let lhs = au.inner(&FockState::basis(v.clone()));
                let rhs = FockState::basis(u.clone()).inner(&av);
                adjoint.record(lhs == rhs, || format!("i={i}, u={u}, v={v}"));
            }
        }
    }
    report.push(adjoint);
    Ok(report)
}

/// Random alternating element of the algebra generated by `A_label`.
fn random_element(rng: &mut ChaCha8Rng, label: u32, max_len: usize) -> AlgebraElement {
    let n_terms = rng.gen_range(1..=3);
    let terms = (0..n_terms)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let mut creating = rng.gen_bool(0.5);
            let mut letters = Vec::with_capacity(len);
            for _ in 0..len {
                letters.push(if creating { L::create(label) } else { L::annihilate(label) });
                creating = !creating;
            }
            let mut num = rng.gen_range(-5i64..=5);
            if num == 0 {
                num = 1;
            }
            let den = rng.gen_range(1i64..=4);
            (BigRational::new(BigInt::from(num), BigInt::from(den)), OperatorWord(letters))
        })
        .collect();
    AlgebraElement::new(label, terms).expect("generated words alternate")
}

/// Random "V-shaped" label sequence `j_1 > ... > j_k < ... < j_n` of length
/// at most `max_len`.
fn random_v_shape(rng: &mut ChaCha8Rng, m: u32, max_len: usize) -> Vec<u32> {
    let valley = rng.gen_range(1..=m);
    let mut left: Vec<u32> = (valley + 1..=m).rev().filter(|_| rng.gen_bool(0.5)).collect();
    let mut right: Vec<u32> = (valley + 1..=m).filter(|_| rng.gen_bool(0.5)).collect();
    while left.len() + right.len() + 1 > max_len {
        if !left.is_empty() && (right.is_empty() || rng.gen_bool(0.5)) {
            left.remove(0);
        } else {
            right.pop();
        }
    }
    left.push(valley);
    left.extend(right);
    left
}

/// Seeded randomized check of the monotone independence laws for the
/// single-label algebras:
///
/// * `p_i p_j p_k v = ω(p_j) p_i p_k v` for `i < j > k` on basis `v`;
/// * `ω(p_{j_1} ... p_{j_n}) = Π ω(p_{j_r})` for V-shaped label sequences;
/// * `p_k p_r Ω = ω(p_r) p_k Ω` for `k < r`.
///
/// Word lengths are capped so that no intermediate vector exceeds the
/// truncation depth; all comparisons are exact.
pub fn check_monotone_independence(
    m: u32,
    depth: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, FockError> {
    let space = FockSpace::new(m, depth)?;
    let max_len = (depth / 4).max(1);
    if depth < 3 * max_len {
        return Err(FockError::DepthTooSmall { depth, required: 3 * max_len });
    }
    let probe_basis = space.basis(depth - 3 * max_len);
    let max_factors = (depth / max_len).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut m1 = IdentityCheck::new("M1: p_i p_j p_k = ω(p_j) p_i p_k (i < j > k)");
    let mut m2 = IdentityCheck::new("M2: ω(p_j1 ... p_jn) = Π ω(p_jr) (j_1 > ... > j_k < ... < j_n)");
    let mut pkpr = IdentityCheck::new("p_k p_r Ω = ω(p_r) p_k Ω (k < r)");

    for trial in 0..trials {
        if m >= 2 {
            let j = rng.gen_range(2..=m);
            let i = rng.gen_range(1..j);
            let k = rng.gen_range(1..j);
            let (pi, pj, pk) = (
                random_element(&mut rng, i, max_len),
                random_element(&mut rng, j, max_len),
                random_element(&mut rng, k, max_len),
            );
            let wj = space.expectation(&pj)?;
            for v in &probe_basis {
                let s = FockState::basis(v.clone());
                let pk_v = space.apply_element(&pk, &s)?;
                let lhs = space.apply_element(&pi, &space.apply_element(&pj, &pk_v)?)?;
                let rhs = space.apply_element(&pi, &pk_v)?.scale(&wj);
                m1.record(lhs == rhs, || {
                    format!("trial {trial}, seed {seed}: i={i} p_i={pi}; j={j} p_j={pj}; k={k} p_k={pk}; v={v}")
                });
            }

            let r = rng.gen_range(2..=m);
            let k2 = rng.gen_range(1..r);
            let (pk2, pr) = (random_element(&mut rng, k2, max_len), random_element(&mut rng, r, max_len));
            let pr_vac = space.apply_element(&pr, &FockState::vacuum())?;
            let lhs = space.apply_element(&pk2, &pr_vac)?;
            let rhs = space.apply_element(&pk2, &FockState::vacuum())?.scale(&space.expectation(&pr)?);
            pkpr.record(lhs == rhs, || format!("trial {trial}, seed {seed}: k={k2} p_k={pk2}; r={r} p_r={pr}"));
        }

        let shape = random_v_shape(&mut rng, m, max_factors);
        let elements: Vec<AlgebraElement> = shape.iter().map(|&l| random_element(&mut rng, l, max_len)).collect();
        let mut state = FockState::vacuum();
        for p in elements.iter().rev() {
            state = space.apply_element(p, &state)?;
        }
        let joint = state.vacuum_coefficient();
        let mut product = BigRational::one();
        for p in &elements {
            product *= space.expectation(p)?;
        }
        m2.record(joint == product, || {
            let listed: Vec<String> = elements.iter().map(|p| format!("p_{}={}", p.label(), p)).collect();
            format!("trial {trial}, seed {seed}: shape {shape:?}; {}", listed.join("; "))
        });
    }

    let mut report = VerificationReport::default();
    report.push(m1);
    report.push(m2);
    report.push(pkpr);
    Ok(report)
}
