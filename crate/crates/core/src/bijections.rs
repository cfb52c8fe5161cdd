//! Coding by derivation chains.
//!
//! A [`FamilyCodec`] gives each object of size `n` a derivation `derive` to
//! an object of size `n - 1` and an integer `statistic`. Reading the
//! statistics along the chain from size 1 up to `n` yields the object's
//! [`Code`]. When `s -> (derive(s), statistic(s))` is injective on every size
//! class, so is the coding, and two families are put in bijection by matching
//! codes.
//!
//! `chi_encode`, `chi_decode` and [`verify_theorem1`] are written once against
//! the trait; the four shipped codecs only supply `derive`, `statistic`,
//! `grow` and an exhaustive generator for each size class.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::enumeration::{enum_avoiding_perms, enum_codes};
use crate::error::{Error, Result};
use crate::structures::{Code, DyckWord, Permutation, Step, TwoRowTableau};

/// Largest size for which exhaustive class generators are offered.
pub const MAX_EXHAUSTIVE_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Code,
    Dyck,
    Perm,
    Tableau,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Code, Family::Dyck, Family::Perm, Family::Tableau];

    pub fn name(self) -> &'static str {
        match self {
            Family::Code => "code",
            Family::Dyck => "dyck",
            Family::Perm => "perm",
            Family::Tableau => "tableau",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "code" => Ok(Family::Code),
            "dyck" => Ok(Family::Dyck),
            "perm" => Ok(Family::Perm),
            "tableau" => Ok(Family::Tableau),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A member of any of the four families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Object {
    Code(Code),
    Dyck(DyckWord),
    Perm(Permutation),
    Tableau(TwoRowTableau),
}

impl Object {
    pub fn family(&self) -> Family {
        match self {
            Object::Code(_) => Family::Code,
            Object::Dyck(_) => Family::Dyck,
            Object::Perm(_) => Family::Perm,
            Object::Tableau(_) => Family::Tableau,
        }
    }

    /// Common size parameter: code length, permutation length, Dyck
    /// semilength, or the number of columns of an `(n, n)` tableau.
    pub fn size(&self) -> usize {
        match self {
            Object::Code(c) => c.len(),
            Object::Dyck(w) => w.semilength(),
            Object::Perm(p) => p.len(),
            Object::Tableau(t) => t.n(),
        }
    }

    /// Parses the canonical text form of a `family` object.
    pub fn parse(family: Family, text: &str) -> Result<Object> {
        Ok(match family {
            Family::Code => Object::Code(text.parse()?),
            Family::Dyck => Object::Dyck(text.parse()?),
            Family::Perm => {
                let p: Permutation = text.parse()?;
                if !p.is_123_avoiding() {
                    return Err(Error::NotAvoiding);
                }
                Object::Perm(p)
            }
            Family::Tableau => Object::Tableau(text.parse()?),
        })
    }

    /// The codec statistic of this object (0 for the size-0 object).
    pub fn statistic(&self) -> u32 {
        match self {
            Object::Code(c) => CodeCodec.statistic(c),
            Object::Dyck(w) => DyckCodec.statistic(w),
            Object::Perm(p) => PermCodec.statistic(p),
            Object::Tableau(t) => TableauCodec.statistic(t),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Code(c) => c.fmt(f),
            Object::Dyck(w) => w.fmt(f),
            Object::Perm(p) => p.fmt(f),
            Object::Tableau(t) => t.fmt(f),
        }
    }
}

/// A family equipped with a size-decreasing derivation and a statistic.
pub trait FamilyCodec {
    type Item: Clone + Eq + Hash + Ord + fmt::Display;

    fn family(&self) -> Family;

    fn size(&self, s: &Self::Item) -> usize;

    /// The unique object of size 0.
    fn base(&self) -> Self::Item;

    /// Object of size `size(s) - 1`; `None` only for the size-0 object.
    fn derive(&self, s: &Self::Item) -> Option<Self::Item>;

    fn statistic(&self, s: &Self::Item) -> u32;

    /// Inverse of `s -> (derive(s), statistic(s))`: the object of size
    /// `size(t) + 1` deriving to `t` with statistic `k`, if there is one.
    fn grow(&self, t: &Self::Item, k: u32) -> Option<Self::Item>;

    /// Every object of size `n`, generated without going through codes.
    fn objects(&self, n: usize) -> Result<Vec<Self::Item>>;
}

/// Code of `s`: the statistics along its derivation chain, smallest first.
pub fn encode_with<C: FamilyCodec>(codec: &C, s: &C::Item) -> Result<Code> {
    let n = codec.size(s);
    let mut stats = Vec::with_capacity(n);
    let mut cur = s.clone();
    for expected in (0..n).rev() {
        stats.push(codec.statistic(&cur));
        cur = codec.derive(&cur).ok_or_else(|| {
            Error::CodecViolation(format!(
                "{} codec: derive undefined on {cur}",
                codec.family()
            ))
        })?;
        if codec.size(&cur) != expected {
            return Err(Error::CodecViolation(format!(
                "{} codec: derive of {s} chain reached size {} instead of {expected}",
                codec.family(),
                codec.size(&cur)
            )));
        }
    }
    stats.reverse();
    Code::new(stats).map_err(|e| {
        Error::CodecViolation(format!(
            "{} codec: {s} encodes to an invalid code ({e})",
            codec.family()
        ))
    })
}

/// The object whose code is `c`, built by growing from the base object.
pub fn decode_with<C: FamilyCodec>(codec: &C, c: &Code) -> Result<C::Item> {
    let mut cur = codec.base();
    for &k in c.letters() {
        cur = codec.grow(&cur, k).ok_or_else(|| {
            Error::CodecViolation(format!(
                "{} codec: cannot grow {cur} by {k}",
                codec.family()
            ))
        })?;
    }
    Ok(cur)
}

/// Codes themselves: derive drops the last letter, the statistic is the last letter.
#[derive(Clone, Copy, Debug, Default)]
pub struct CodeCodec;

impl FamilyCodec for CodeCodec {
    type Item = Code;

    fn family(&self) -> Family {
        Family::Code
    }

    fn size(&self, s: &Code) -> usize {
        s.len()
    }

    fn base(&self) -> Code {
        Code::void()
    }

    fn derive(&self, s: &Code) -> Option<Code> {
        (!s.is_empty()).then(|| s.truncated())
    }

    fn statistic(&self, s: &Code) -> u32 {
        s.last().unwrap_or(0)
    }

    fn grow(&self, t: &Code, k: u32) -> Option<Code> {
        t.extended(k).ok()
    }

    fn objects(&self, n: usize) -> Result<Vec<Code>> {
        check_exhaustive(n)?;
        // Depth-first over allowed letters; independent of CodeIter's successor rule.
        fn extend(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<Code>) {
            if prefix.len() == n {
                out.push(Code::from_vec_unchecked(prefix.clone()));
                return;
            }
            let bound = prefix.last().map_or(1, |&v| v + 1);
            for v in 1..=bound {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::with_capacity(n), n, &mut out);
        Ok(out)
    }
}

/// Dyck words. The statistic is the number of trailing Down letters, i.e.
/// the height of the last Up step; derive deletes the last Up step and
/// closes the path with Down steps. The resulting code lists the heights of
/// the Up-step endpoints.
#[derive(Clone, Copy, Debug, Default)]
pub struct DyckCodec;

impl FamilyCodec for DyckCodec {
    type Item = DyckWord;

    fn family(&self) -> Family {
        Family::Dyck
    }

    fn size(&self, s: &DyckWord) -> usize {
        s.semilength()
    }

    fn base(&self) -> DyckWord {
        DyckWord::empty()
    }

    fn derive(&self, s: &DyckWord) -> Option<DyckWord> {
        let steps = s.steps();
        let last_up = steps.iter().rposition(|&x| x == Step::Up)?;
        let mut out = steps[..last_up].to_vec();
        let height = out.iter().filter(|&&x| x == Step::Up).count()
            - out.iter().filter(|&&x| x == Step::Down).count();
        out.extend(std::iter::repeat_n(Step::Down, height));
        Some(DyckWord::from_vec_unchecked(out))
    }

    fn statistic(&self, s: &DyckWord) -> u32 {
        s.trailing_descents().unwrap_or(0)
    }

    fn grow(&self, t: &DyckWord, k: u32) -> Option<DyckWord> {
        // Strip the closing descent, go down to k - 1, step up to k, close.
        let top = self.statistic(t);
        if k == 0 || k > top + 1 {
            return None;
        }
        let steps = t.steps();
        let mut out = steps[..steps.len() - top as usize].to_vec();
        out.extend(std::iter::repeat_n(Step::Down, (top + 1 - k) as usize));
        out.push(Step::Up);
        out.extend(std::iter::repeat_n(Step::Down, k as usize));
        Some(DyckWord::from_vec_unchecked(out))
    }

    fn objects(&self, n: usize) -> Result<Vec<DyckWord>> {
        check_exhaustive(n)?;
        fn walk(
            prefix: &mut Vec<Step>,
            ups: usize,
            downs: usize,
            n: usize,
            out: &mut Vec<DyckWord>,
        ) {
            if prefix.len() == 2 * n {
                out.push(DyckWord::from_vec_unchecked(prefix.clone()));
                return;
            }
            if ups < n {
                prefix.push(Step::Up);
                walk(prefix, ups + 1, downs, n, out);
                prefix.pop();
            }
            if downs < ups {
                prefix.push(Step::Down);
                walk(prefix, ups, downs + 1, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        walk(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
        Ok(out)
    }
}

/// 123-avoiding permutations. Derive deletes the largest value; the
/// statistic is the length of the maximal strictly decreasing prefix.
/// `grow(t, k)` inserts `n + 1` in front when `k` is one more than the
/// prefix length of `t`, and right after the `k`-th letter otherwise.
#[derive(Clone, Copy, Debug, Default)]
pub struct PermCodec;

impl FamilyCodec for PermCodec {
    type Item = Permutation;

    fn family(&self) -> Family {
        Family::Perm
    }

    fn size(&self, s: &Permutation) -> usize {
        s.len()
    }

    fn base(&self) -> Permutation {
        Permutation::identity(0)
    }

    fn derive(&self, s: &Permutation) -> Option<Permutation> {
        let n = s.len() as u32;
        if n == 0 {
            return None;
        }
        let image = s.image().iter().copied().filter(|&v| v != n).collect();
        Some(Permutation::from_vec_unchecked(image))
    }

    fn statistic(&self, s: &Permutation) -> u32 {
        s.decreasing_prefix() as u32
    }

    fn grow(&self, t: &Permutation, k: u32) -> Option<Permutation> {
        let prefix = t.decreasing_prefix() as u32;
        let at = if k == prefix + 1 {
            0
        } else if (1..=prefix).contains(&k) {
            k as usize
        } else {
            return None;
        };
        let mut image = t.image().to_vec();
        image.insert(at, t.len() as u32 + 1);
        Some(Permutation::from_vec_unchecked(image))
    }

    fn objects(&self, n: usize) -> Result<Vec<Permutation>> {
        enum_avoiding_perms(n)
    }
}

/// Two-row tableaux, coded through the Dyck word whose Up letters sit at the
/// entries of the first row and whose Down letters sit at the second row.
#[derive(Clone, Copy, Debug, Default)]
pub struct TableauCodec;

impl TableauCodec {
    pub fn to_dyck(t: &TwoRowTableau) -> DyckWord {
        let mut steps = vec![Step::Down; 2 * t.n()];
        for &i in t.row1() {
            steps[i as usize - 1] = Step::Up;
        }
        DyckWord::from_vec_unchecked(steps)
    }

    pub fn from_dyck(w: &DyckWord) -> TwoRowTableau {
        TwoRowTableau::from_rows_unchecked(w.up_positions(), w.down_positions())
    }
}

impl FamilyCodec for TableauCodec {
    type Item = TwoRowTableau;

    fn family(&self) -> Family {
        Family::Tableau
    }

    fn size(&self, s: &TwoRowTableau) -> usize {
        s.n()
    }

    fn base(&self) -> TwoRowTableau {
        TwoRowTableau::default()
    }

    fn derive(&self, s: &TwoRowTableau) -> Option<TwoRowTableau> {
        DyckCodec
            .derive(&Self::to_dyck(s))
            .map(|w| Self::from_dyck(&w))
    }

    fn statistic(&self, s: &TwoRowTableau) -> u32 {
        s.h()
    }

    fn grow(&self, t: &TwoRowTableau, k: u32) -> Option<TwoRowTableau> {
        DyckCodec
            .grow(&Self::to_dyck(t), k)
            .map(|w| Self::from_dyck(&w))
    }

    fn objects(&self, n: usize) -> Result<Vec<TwoRowTableau>> {
        check_exhaustive(n)?;
        // Every n-subset of 1..=2n as the first row, kept when the filling is standard.
        let total = 2 * n as u32;
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << total) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let (row1, row2): (Vec<i64>, Vec<i64>) =
                (1..=i64::from(total)).partition(|&v| mask >> (v - 1) & 1 == 1);
            if let Ok(t) = crate::structures::validate_tableau(&row1, &row2) {
                out.push(t);
            }
        }
        out.sort();
        Ok(out)
    }
}

fn check_exhaustive(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::ResourceLimit(format!(
            "exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )));
    }
    Ok(())
}

/// Code of any family object.
pub fn chi_encode(s: &Object) -> Result<Code> {
    match s {
        Object::Code(c) => encode_with(&CodeCodec, c),
        Object::Dyck(w) => encode_with(&DyckCodec, w),
        Object::Perm(p) => encode_with(&PermCodec, p),
        Object::Tableau(t) => encode_with(&TableauCodec, t),
    }
}

/// The `family` object with code `c`.
pub fn chi_decode(c: &Code, family: Family) -> Result<Object> {
    Ok(match family {
        Family::Code => Object::Code(decode_with(&CodeCodec, c)?),
        Family::Dyck => Object::Dyck(decode_with(&DyckCodec, c)?),
        Family::Perm => Object::Perm(decode_with(&PermCodec, c)?),
        Family::Tableau => Object::Tableau(decode_with(&TableauCodec, c)?),
    })
}

/// Maps `s` to the object of family `to` sharing its code.
pub fn convert(s: &Object, to: Family) -> Result<Object> {
    chi_decode(&chi_encode(s)?, to)
}

/// Outcome of an exhaustive check of the coding conditions on one size class.
/// Every counterexample list is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Theorem1Report {
    pub family: Option<Family>,
    pub n: usize,
    pub objects: usize,
    /// Objects whose derivation does not land in size `n - 1`.
    pub derive_size_failures: Vec<String>,
    /// Objects with a statistic outside the positive integers.
    pub statistic_failures: Vec<String>,
    /// Groups of objects sharing `(derive(s), statistic(s))`.
    pub derivation_collisions: Vec<Vec<String>>,
    /// Groups of objects sharing a code.
    pub code_collisions: Vec<Vec<String>>,
    /// Objects whose code could not be computed or is invalid.
    pub encode_failures: Vec<String>,
    /// Valid codes of length `n` not reached by any object.
    pub missing_codes: Vec<String>,
    /// Objects for which `grow(derive(s), statistic(s)) != s`.
    pub grow_failures: Vec<String>,
    /// `(t, k)` pairs of size `n - 1` for which `derive(grow(t, k)) != t`.
    pub derive_grow_failures: Vec<String>,
    /// Codes whose decoding fails or does not encode back to itself.
    pub decode_failures: Vec<String>,
    /// Number of distinct codes reached.
    pub image_size: usize,
}

impl Theorem1Report {
    pub fn derive_condition(&self) -> bool {
        self.derive_size_failures.is_empty()
    }

    pub fn injectivity_condition(&self) -> bool {
        self.derivation_collisions.is_empty() && self.statistic_failures.is_empty()
    }

    pub fn code_injective(&self) -> bool {
        self.code_collisions.is_empty() && self.encode_failures.is_empty()
    }

    pub fn bijective(&self) -> bool {
        self.code_injective() && self.missing_codes.is_empty()
    }

    pub fn inverse_laws(&self) -> bool {
        self.grow_failures.is_empty()
            && self.derive_grow_failures.is_empty()
            && self.decode_failures.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.derive_condition()
            && self.injectivity_condition()
            && self.code_injective()
            && self.bijective()
            && self.inverse_laws()
    }
}

impl fmt::Display for Theorem1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = self.family.map_or("?", Family::name);
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(
            f,
            "family {family}, n = {}, {} objects",
            self.n, self.objects
        )?;
        writeln!(
            f,
            "derive lands in size n-1: {}",
            mark(self.derive_condition())
        )?;
        writeln!(
            f,
            "(derive, statistic) injective: {}",
            mark(self.injectivity_condition())
        )?;
        writeln!(f, "code injective: {}", mark(self.code_injective()))?;
        writeln!(
            f,
            "image is the full code set: {} ({} codes)",
            mark(self.bijective()),
            self.image_size
        )?;
        writeln!(f, "grow/derive inverse laws: {}", mark(self.inverse_laws()))?;
        let lists: [(&str, &Vec<String>); 7] = [
            ("derive size", &self.derive_size_failures),
            ("statistic", &self.statistic_failures),
            ("encode", &self.encode_failures),
            ("missing code", &self.missing_codes),
            ("grow", &self.grow_failures),
            ("derive-grow", &self.derive_grow_failures),
            ("decode", &self.decode_failures),
        ];
        for (label, items) in lists {
            for item in items {
                writeln!(f, "  counterexample [{label}]: {item}")?;
            }
        }
        for (label, groups) in [
            ("derivation collision", &self.derivation_collisions),
            ("code collision", &self.code_collisions),
        ] {
            for g in groups {
                writeln!(f, "  counterexample [{label}]: {}", g.join(", "))?;
            }
        }
        write!(f, "overall: {}", mark(self.passed()))
    }
}

/// Exhaustively checks, over all size-`n` objects of the codec's family:
/// derive lands in size `n - 1`; `(derive, statistic)` is injective with
/// positive statistic; the code is injective; the code image is exactly the
/// set of valid codes of length `n`; grow and derive are mutually inverse.
pub fn verify_theorem1<C: FamilyCodec>(codec: &C, n: usize) -> Result<Theorem1Report> {
    let objects = codec.objects(n)?;
    let mut report = Theorem1Report {
        family: Some(codec.family()),
        n,
        objects: objects.len(),
        ..Default::default()
    };

    let mut by_derivation: HashMap<(C::Item, u32), Vec<&C::Item>> = HashMap::new();
    let mut by_code: BTreeMap<Code, Vec<&C::Item>> = BTreeMap::new();
    for s in &objects {
        if codec.size(s) != n {
            report.derive_size_failures.push(format!(
                "{s} has size {} in the size-{n} class",
                codec.size(s)
            ));
            continue;
        }
        if n >= 1 {
            match codec.derive(s) {
                Some(d) if codec.size(&d) == n - 1 => {
                    let k = codec.statistic(s);
                    if k == 0 {
                        report.statistic_failures.push(s.to_string());
                    }
                    if codec.grow(&d, k).as_ref() != Some(s) {
                        report.grow_failures.push(s.to_string());
                    }
                    by_derivation.entry((d, k)).or_default().push(s);
                }
                Some(d) => report
                    .derive_size_failures
                    .push(format!("{s} -> {d} (size {})", codec.size(&d))),
                None => report
                    .derive_size_failures
                    .push(format!("{s} -> undefined")),
            }
        }
        match encode_with(codec, s) {
            Ok(c) => by_code.entry(c).or_default().push(s),
            Err(e) => report.encode_failures.push(format!("{s}: {e}")),
        }
    }

    let collisions = |groups: Vec<Vec<&C::Item>>| {
        let mut out: Vec<Vec<String>> = groups
            .into_iter()
            .filter(|g| g.len() > 1)
            .map(|mut g| {
                g.sort();
                g.into_iter().map(ToString::to_string).collect()
            })
            .collect();
        out.sort();
        out
    };
    report.derivation_collisions = collisions(by_derivation.into_values().collect());
    report.code_collisions = collisions(by_code.values().cloned().collect());
    report.image_size = by_code.len();

    let all_codes = enum_codes(n)?;
    report.missing_codes = all_codes
        .iter()
        .filter(|c| !by_code.contains_key(c))
        .map(ToString::to_string)
        .collect();

    for c in &all_codes {
        match decode_with(codec, c) {
            Ok(s) if encode_with(codec, &s).as_ref() == Ok(c) => {}
            Ok(s) => report.decode_failures.push(format!("{c} -> {s}")),
            Err(e) => report.decode_failures.push(format!("{c}: {e}")),
        }
    }

    if n >= 1 {
        let smaller: BTreeSet<C::Item> = codec.objects(n - 1)?.into_iter().collect();
        for t in &smaller {
            for k in 1..=n as u32 + 1 {
                if let Some(g) = codec.grow(t, k) {
                    if codec.derive(&g).as_ref() != Some(t) || codec.statistic(&g) != k {
                        report
                            .derive_grow_failures
                            .push(format!("({t}, {k}) -> {g}"));
                    }
                }
            }
        }
    }

    for list in [
        &mut report.derive_size_failures,
        &mut report.statistic_failures,
        &mut report.encode_failures,
        &mut report.grow_failures,
        &mut report.derive_grow_failures,
        &mut report.decode_failures,
    ] {
        list.sort();
    }
    Ok(report)
}

/// [`verify_theorem1`] for the shipped codec of `family`.
pub fn verify_family(family: Family, n: usize) -> Result<Theorem1Report> {
    match family {
        Family::Code => verify_theorem1(&CodeCodec, n),
        Family::Dyck => verify_theorem1(&DyckCodec, n),
        Family::Perm => verify_theorem1(&PermCodec, n),
        Family::Tableau => verify_theorem1(&TableauCodec, n),
    }
}
