//! Canonical encodings for three-literal clauses and formulae.
//!
//! A clause over `n` variables is a row of a `2n`-column 0/1 matrix whose
//! columns alternate `x1, !x1, x2, !x2, ..., xn, !xn`, with the `x1` column
//! the most significant. Reading that row as a binary number gives the
//! clause's *signature*; a formula is identified by the strictly descending
//! vector of its clause signatures.

use crate::error::{Error, Result};

/// Hard cap on the ambient variable count. Falsifying sets and assignment
/// scans materialize `2^n` entries, so everything above this is refused at
/// construction instead of thrashing.
pub const MAX_VARS: u8 = 24;

/// Smallest admissible clause signature (three lowest valid columns set).
pub const MIN_SIGNATURE: u64 = 21;

/// A clause signature: the 2n-bit matrix row read as one binary integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(pub u64);

impl Signature {
    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Inclusive signature range `[21, 21 * 2^(2n-5)]` for ambient count `n`.
pub fn signature_bounds(n: u8) -> (u64, u64) {
    (MIN_SIGNATURE, MIN_SIGNATURE << (2 * u64::from(n) - 5))
}

/// One disjunction of exactly three literals over distinct variables.
///
/// Variables are 1-based and stored in ascending order; `positive[i]` is the
/// polarity of `vars[i]`. The ambient count `n` fixes the matrix width, so
/// two clauses with the same literals but different `n` are different values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Clause {
    n: u8,
    vars: [u8; 3],
    positive: [bool; 3],
}

impl Clause {
    /// Builds a clause from `(variable, polarity)` literals.
    pub fn new(n: u8, literals: [(u8, bool); 3]) -> Result<Self> {
        if !(3..=MAX_VARS).contains(&n) {
            return Err(Error::InvalidVarCount {
                n: n as usize,
                max: MAX_VARS as usize,
            });
        }
        let mut lits = literals;
        lits.sort_by_key(|&(v, _)| v);
        for &(v, _) in &lits {
            if v == 0 || v > n {
                return Err(Error::VariableOutOfRange { var: v, n });
            }
        }
        if lits[0].0 == lits[1].0 || lits[1].0 == lits[2].0 {
            let var = if lits[0].0 == lits[1].0 {
                lits[0].0
            } else {
                lits[1].0
            };
            return Err(Error::RepeatedVariable { var });
        }
        Ok(Clause {
            n,
            vars: [lits[0].0, lits[1].0, lits[2].0],
            positive: [lits[0].1, lits[1].1, lits[2].1],
        })
    }

    /// Builds a clause from DIMACS-style signed literals (`-3` means `!x3`).
    pub fn from_dimacs_lits(n: u8, lits: [i32; 3]) -> Result<Self> {
        let mut pairs = [(0u8, false); 3];
        for (slot, &lit) in pairs.iter_mut().zip(lits.iter()) {
            let var = lit.unsigned_abs();
            if lit == 0 || var > u32::from(u8::MAX) {
                return Err(Error::VariableOutOfRange {
                    var: var.min(255) as u8,
                    n,
                });
            }
            *slot = (var as u8, lit > 0);
        }
        Clause::new(n, pairs)
    }

    /// Inverse of [`Clause::signature`]: decodes a row value back to a clause.
    pub fn from_signature(n: u8, value: u64) -> Result<Self> {
        if !(3..=MAX_VARS).contains(&n) {
            return Err(Error::InvalidVarCount {
                n: n as usize,
                max: MAX_VARS as usize,
            });
        }
        let width = 2 * u32::from(n);
        let malformed = |reason| Error::MalformedSignature { n, value, reason };
        if value >> width != 0 {
            return Err(malformed("bits outside the 2n columns"));
        }
        if value.count_ones() != 3 {
            return Err(malformed("exactly three bits must be set"));
        }
        let mut lits = [(0u8, false); 3];
        let mut k = 0;
        for var in 1..=n {
            let pos_bit = 1u64 << (width - (2 * u32::from(var) - 1));
            let neg_bit = pos_bit >> 1;
            match (value & pos_bit != 0, value & neg_bit != 0) {
                (false, false) => {}
                (true, false) => {
                    lits[k] = (var, true);
                    k += 1;
                }
                (false, true) => {
                    lits[k] = (var, false);
                    k += 1;
                }
                (true, true) => {
                    return Err(malformed("two bits in one variable's column pair"));
                }
            }
        }
        debug_assert_eq!(k, 3);
        Clause::new(n, lits)
    }

    #[inline]
    pub fn n(&self) -> u8 {
        self.n
    }

    /// The three literals as `(variable, polarity)`, ascending by variable.
    #[inline]
    pub fn literals(&self) -> [(u8, bool); 3] {
        [
            (self.vars[0], self.positive[0]),
            (self.vars[1], self.positive[1]),
            (self.vars[2], self.positive[2]),
        ]
    }

    /// The matrix row read as a binary number, `x1` column most significant.
    pub fn signature(&self) -> Signature {
        let width = 2 * u64::from(self.n);
        let mut value = 0u64;
        for (var, positive) in self.literals() {
            let column = 2 * (u64::from(var) - 1) + u64::from(!positive);
            value |= 1u64 << (width - 1 - column);
        }
        Signature(value)
    }

    /// True when assignment `v` (bit `i` holds the value of `x_{i+1}`)
    /// makes at least one literal true.
    #[inline]
    pub fn satisfied_by(&self, v: u32) -> bool {
        for (var, positive) in self.literals() {
            let bit = v >> (var - 1) & 1 == 1;
            if bit == positive {
                return true;
            }
        }
        false
    }

    /// The set `S_j` of assignments falsifying this clause; always of size
    /// `2^(n-3)` (the three clause variables are pinned, the rest are free).
    pub fn falsify_set(&self) -> FalsifySet {
        let mut base = 0u32;
        for (var, positive) in self.literals() {
            if !positive {
                base |= 1 << (var - 1);
            }
        }
        let free: Vec<u8> = (1..=self.n)
            .filter(|v| !self.vars.contains(v))
            .collect();
        let mut set = FalsifySet::empty(self.n);
        for k in 0..(1u32 << free.len()) {
            let mut v = base;
            for (bit, &var) in free.iter().enumerate() {
                if k >> bit & 1 == 1 {
                    v |= 1 << (var - 1);
                }
            }
            set.insert(v);
        }
        set
    }
}

impl std::fmt::Display for Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, (var, positive)) in self.literals().iter().enumerate() {
            if i > 0 {
                write!(f, " \u{2228} ")?;
            }
            if !positive {
                write!(f, "\u{00ac}")?;
            }
            write!(f, "x{var}")?;
        }
        write!(f, ")")
    }
}

/// Subset of `{0,1}^n` as a bitset; index `i` encodes the assignment whose
/// `x1` value is the least significant bit of `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FalsifySet {
    n: u8,
    blocks: Vec<u64>,
}

impl FalsifySet {
    pub fn empty(n: u8) -> Self {
        let bits = 1usize << n;
        FalsifySet {
            n,
            blocks: vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    pub fn n(&self) -> u8 {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        self.blocks[(v / 64) as usize] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        self.blocks[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|b| u64::from(b.count_ones())).sum()
    }

    pub fn union_with(&mut self, other: &FalsifySet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    /// True when every assignment in `{0,1}^n` is present.
    pub fn is_full(&self) -> bool {
        self.count_ones() == 1u64 << self.n
    }

    /// Ascending assignment indices of the set bits.
    pub fn ones(&self) -> impl Iterator<Item = u32> + '_ {
        (0..1u32 << self.n).filter(move |&v| self.contains(v))
    }
}

/// Size of a formula measured as its connective count
/// (`m-1` conjunctions, `2m` disjunctions, one negation per negative literal).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeMeasure {
    pub connectives: u64,
}

/// A set of distinct clauses held in strictly descending signature order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    n: u8,
    clauses: Vec<Clause>,
    sigs: Vec<Signature>,
}

impl Formula {
    /// Canonicalizes `clauses` (descending signature order) and validates the
    /// formula invariants: at least one clause, one shared ambient `n`,
    /// no duplicates.
    pub fn new(n: u8, clauses: Vec<Clause>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::EmptyFormula);
        }
        for c in &clauses {
            if c.n() != n {
                return Err(Error::MixedAmbient {
                    clause_n: c.n(),
                    formula_n: n,
                });
            }
        }
        let mut pairs: Vec<(Signature, Clause)> =
            clauses.into_iter().map(|c| (c.signature(), c)).collect();
        pairs.sort_by_key(|&(sig, _)| std::cmp::Reverse(sig));
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateClause {
                    signature: w[0].0.value(),
                });
            }
        }
        let (sigs, clauses) = pairs.into_iter().unzip();
        Ok(Formula { n, clauses, sigs })
    }

    /// Rebuilds a formula from a descending signature tuple.
    pub fn from_signatures(n: u8, values: &[u64]) -> Result<Self> {
        let clauses = values
            .iter()
            .map(|&u| Clause::from_signature(n, u))
            .collect::<Result<Vec<_>>>()?;
        Formula::new(n, clauses)
    }

    /// Internal constructor for clause lists already in canonical order.
    pub(crate) fn from_sorted_unchecked(n: u8, clauses: Vec<Clause>, sigs: Vec<Signature>) -> Self {
        debug_assert!(sigs.windows(2).all(|w| w[0] > w[1]));
        Formula { n, clauses, sigs }
    }

    #[inline]
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Clause count `m`.
    #[inline]
    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    #[inline]
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// The strictly descending signature vector `(u1, ..., um)`.
    #[inline]
    pub fn signatures(&self) -> &[Signature] {
        &self.sigs
    }

    pub fn signature_values(&self) -> Vec<u64> {
        self.sigs.iter().map(|s| s.value()).collect()
    }

    /// Connective count `s`; satisfies `3m-1 <= s <= 6m-1`.
    pub fn size(&self) -> SizeMeasure {
        let m = self.m() as u64;
        let negations: u64 = self
            .clauses
            .iter()
            .flat_map(|c| c.literals())
            .filter(|&(_, positive)| !positive)
            .count() as u64;
        SizeMeasure {
            connectives: 2 * m + (m - 1) + negations,
        }
    }

    /// True when assignment `v` satisfies every clause.
    pub fn satisfied_by(&self, v: u32) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(v))
    }

    /// The sub-formula keeping exactly the clauses at `indices`
    /// (ascending positions into the canonical order).
    pub(crate) fn sub_formula(&self, indices: &[usize]) -> Formula {
        let clauses = indices.iter().map(|&i| self.clauses[i]).collect();
        let sigs = indices.iter().map(|&i| self.sigs[i]).collect();
        Formula::from_sorted_unchecked(self.n, clauses, sigs)
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " \u{2227} ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All `8 * C(n,3)` clauses over `n` variables, descending by signature.
pub fn clause_universe(n: u8) -> Result<Vec<Clause>> {
    if !(3..=MAX_VARS).contains(&n) {
        return Err(Error::InvalidVarCount {
            n: n as usize,
            max: MAX_VARS as usize,
        });
    }
    let mut clauses = Vec::new();
    for a in 1..=n - 2 {
        for b in a + 1..=n - 1 {
            for c in b + 1..=n {
                for pol in 0..8u8 {
                    let clause = Clause::new(
                        n,
                        [
                            (a, pol & 1 != 0),
                            (b, pol & 2 != 0),
                            (c, pol & 4 != 0),
                        ],
                    )?;
                    clauses.push(clause);
                }
            }
        }
    }
    clauses.sort_by_key(|c| std::cmp::Reverse(c.signature()));
    Ok(clauses)
}
