//! Steps, path words, the eight path classes and factor statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One step of a lattice path.
///
/// The derived order `Up < Down < FlatUnit < FlatDouble` is the canonical
/// order used when enumerating a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `(1, 1)`
    Up,
    /// `(1, -1)`
    Down,
    /// `(1, 0)`, the Motzkin flat.
    FlatUnit,
    /// `(2, 0)`, the Schröder flat.
    FlatDouble,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Up, Step::Down, Step::FlatUnit, Step::FlatDouble];

    pub const fn width(self) -> usize {
        match self {
            Step::FlatDouble => 2,
            _ => 1,
        }
    }

    pub const fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::FlatUnit | Step::FlatDouble => 0,
        }
    }

    pub const fn is_flat(self) -> bool {
        matches!(self, Step::FlatUnit | Step::FlatDouble)
    }

    pub const fn reflect(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
            s => s,
        }
    }

    pub const fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::FlatUnit | Step::FlatDouble => 'H',
        }
    }
}

/// Which step the letter `H` stands for when reading a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlatKind {
    Unit,
    Double,
}

impl FlatKind {
    pub const fn step(self) -> Step {
        match self {
            FlatKind::Unit => Step::FlatUnit,
            FlatKind::Double => Step::FlatDouble,
        }
    }
}

fn parse_steps(s: &str, flat: FlatKind) -> Result<Vec<Step>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            'H' => Ok(flat.step()),
            other => Err(Error::Usage(format!(
                "unexpected character {other:?} at position {i} (expected U, D or H)"
            ))),
        })
        .collect()
}

/// A finite word over [`Step`]. The empty word is the empty path.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    steps: Vec<Step>,
}

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord { steps }
    }

    pub fn empty() -> Self {
        PathWord::default()
    }

    /// Reads the serialized form: `U`, `D`, `H` letters, or `-` for the
    /// empty path.
    pub fn parse(s: &str, flat: FlatKind) -> Result<Self> {
        if s == "-" || s.is_empty() {
            return Ok(PathWord::empty());
        }
        parse_steps(s, flat).map(PathWord::new)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Horizontal extent: sum of the step widths.
    pub fn width(&self) -> usize {
        self.steps.iter().map(|s| s.width()).sum()
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// Ordinates at every integer abscissa `0..=width`. A double flat
    /// contributes two samples at the same height.
    pub fn heights(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.width() + 1);
        let mut h = 0;
        out.push(h);
        for step in &self.steps {
            h += step.delta();
            for _ in 0..step.width() {
                out.push(h);
            }
        }
        out
    }

    /// Height at which each step starts.
    pub fn step_levels(&self) -> Vec<i64> {
        let mut h = 0;
        self.steps
            .iter()
            .map(|s| {
                let start = h;
                h += s.delta();
                start
            })
            .collect()
    }

    /// Mirror image about the x-axis.
    pub fn reflect(&self) -> PathWord {
        PathWord::new(self.steps.iter().map(|s| s.reflect()).collect())
    }

    /// Rebuilds a word from a height profile sampled at integer abscissae.
    ///
    /// With [`FlatKind::Double`] every maximal run of equal heights must have
    /// even length; it becomes that many halves of double flats.
    pub fn from_heights(profile: &[i64], flat: FlatKind) -> Result<PathWord> {
        match profile.first() {
            None => return Err(Error::Invariant("empty height profile".into())),
            Some(&h0) if h0 != 0 => {
                return Err(Error::Invariant(format!("profile starts at height {h0}")))
            }
            _ => {}
        }
        let mut steps = Vec::with_capacity(profile.len());
        let mut run = 0usize;
        let flush = |run: &mut usize, steps: &mut Vec<Step>, at: usize| -> Result<()> {
            match flat {
                FlatKind::Unit => steps.extend(std::iter::repeat_n(Step::FlatUnit, *run)),
                FlatKind::Double => {
                    if !(*run).is_multiple_of(2) {
                        return Err(Error::Invariant(format!(
                            "flat run of odd length {} ending at abscissa {at} cannot be written with double flats",
                            *run
                        )));
                    }
                    steps.extend(std::iter::repeat_n(Step::FlatDouble, *run / 2));
                }
            }
            *run = 0;
            Ok(())
        };
        for (x, w) in profile.windows(2).enumerate() {
            match w[1] - w[0] {
                0 => run += 1,
                d @ (1 | -1) => {
                    flush(&mut run, &mut steps, x)?;
                    steps.push(if d == 1 { Step::Up } else { Step::Down });
                }
                d => {
                    return Err(Error::Invariant(format!(
                        "height jumps by {d} at abscissa {x}"
                    )))
                }
            }
        }
        flush(&mut run, &mut steps, profile.len() - 1)?;
        Ok(PathWord::new(steps))
    }

    /// `ω_α`: number of (possibly overlapping) occurrences of `factor`.
    pub fn occurrences(&self, factor: &Factor) -> usize {
        self.positions(factor).count()
    }

    /// `ω*_α`: occurrences of a level-balanced factor that do not sit on
    /// the x-axis, i.e. start at a nonzero height.
    pub fn occurrences_off_axis(&self, factor: &Factor) -> Result<usize> {
        Ok(self
            .occurrences_at_levels(factor)?
            .filter(|&h| h != 0)
            .count())
    }

    /// Occurrences of a level-balanced factor starting (and ending) at
    /// height `level`.
    pub fn occurrences_at_level(&self, factor: &Factor, level: i64) -> Result<usize> {
        Ok(self
            .occurrences_at_levels(factor)?
            .filter(|&h| h == level)
            .count())
    }

    fn occurrences_at_levels<'a>(
        &'a self,
        factor: &'a Factor,
    ) -> Result<impl Iterator<Item = i64> + 'a> {
        if !factor.is_level_balanced() {
            return Err(Error::Contract(format!(
                "factor {factor} is not level-balanced"
            )));
        }
        let levels = self.step_levels();
        Ok(self.positions(factor).map(move |p| levels[p]))
    }

    fn positions<'a>(&'a self, factor: &'a Factor) -> impl Iterator<Item = usize> + 'a {
        self.steps
            .windows(factor.len())
            .enumerate()
            .filter(move |(_, w)| *w == factor.steps())
            .map(|(p, _)| p)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("-");
        }
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let doubles = self.steps.contains(&Step::FlatDouble);
        write!(f, "PathWord({self}{})", if doubles { " /2" } else { "" })
    }
}

/// A non-empty step word looked up inside paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    steps: Vec<Step>,
}

impl Factor {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Usage("a factor must be non-empty".into()));
        }
        Ok(Factor { steps })
    }

    pub fn parse(s: &str, flat: FlatKind) -> Result<Self> {
        Factor::new(parse_steps(s, flat)?)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_level_balanced(&self) -> bool {
        self.steps.iter().map(|s| s.delta()).sum::<i64>() == 0
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

/// The eight path families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    /// Dyck
    DD,
    /// Grand Dyck
    GD,
    /// Motzkin
    MM,
    /// Grand Motzkin
    GM,
    /// Schröder
    SS,
    /// Grand Schröder
    GS,
    /// Fibonacci
    FF,
    /// Grand Fibonacci
    GF,
}

impl ClassKind {
    pub const ALL: [ClassKind; 8] = [
        ClassKind::DD,
        ClassKind::GD,
        ClassKind::MM,
        ClassKind::GM,
        ClassKind::SS,
        ClassKind::GS,
        ClassKind::FF,
        ClassKind::GF,
    ];

    pub const fn code(self) -> &'static str {
        match self {
            ClassKind::DD => "DD",
            ClassKind::GD => "GD",
            ClassKind::MM => "MM",
            ClassKind::GM => "GM",
            ClassKind::SS => "SS",
            ClassKind::GS => "GS",
            ClassKind::FF => "FF",
            ClassKind::GF => "GF",
        }
    }

    pub const fn long_name(self) -> &'static str {
        match self {
            ClassKind::DD => "Dyck",
            ClassKind::GD => "Grand Dyck",
            ClassKind::MM => "Motzkin",
            ClassKind::GM => "Grand Motzkin",
            ClassKind::SS => "Schröder",
            ClassKind::GS => "Grand Schröder",
            ClassKind::FF => "Fibonacci",
            ClassKind::GF => "Grand Fibonacci",
        }
    }

    pub const fn is_grand(self) -> bool {
        matches!(
            self,
            ClassKind::GD | ClassKind::GM | ClassKind::GS | ClassKind::GF
        )
    }

    /// The other member of the (restricted, Grand) pair.
    pub const fn partner(self) -> ClassKind {
        match self {
            ClassKind::DD => ClassKind::GD,
            ClassKind::GD => ClassKind::DD,
            ClassKind::MM => ClassKind::GM,
            ClassKind::GM => ClassKind::MM,
            ClassKind::SS => ClassKind::GS,
            ClassKind::GS => ClassKind::SS,
            ClassKind::FF => ClassKind::GF,
            ClassKind::GF => ClassKind::FF,
        }
    }

    /// Whether the class forms a lattice under the dominance order.
    /// The Fibonacci families are only posets.
    pub const fn is_lattice(self) -> bool {
        !matches!(self, ClassKind::FF | ClassKind::GF)
    }

    pub fn spec(self) -> ClassSpec {
        ClassSpec::of(self)
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassKind::ALL
            .into_iter()
            .find(|k| k.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown class {s:?} (expected one of DD, GD, MM, GM, SS, GS, FF, GF)"
                ))
            })
    }
}

/// How the size parameter `n` of a class is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeSemantics {
    /// Size `n` means width `2n`.
    SemiLength,
    /// Size `n` means `n` unit-width steps.
    Length,
}

/// First reason a word fails to belong to a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DisallowedStep { index: usize, step: Step },
    OutOfWindow { abscissa: usize, height: i64 },
    FlatOffAxis { index: usize, height: i64 },
    EndsOffAxis { height: i64 },
    OddWidth { width: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DisallowedStep { index, step } => {
                write!(f, "step {index} ({step:?}) is not allowed in this class")
            }
            Violation::OutOfWindow { abscissa, height } => {
                write!(
                    f,
                    "height {height} at abscissa {abscissa} is outside the allowed window"
                )
            }
            Violation::FlatOffAxis { index, height } => {
                write!(
                    f,
                    "flat step {index} lies at height {height}, off the x-axis"
                )
            }
            Violation::EndsOffAxis { height } => write!(f, "path ends at height {height}"),
            Violation::OddWidth { width } => {
                write!(
                    f,
                    "width {width} is odd but the class is sized by semi-length"
                )
            }
        }
    }
}

/// Declarative description of a path family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub allowed: &'static [Step],
    pub min_height: Option<i64>,
    pub max_height: Option<i64>,
    pub flats_on_axis_only: bool,
    pub size: SizeSemantics,
}

const UD: &[Step] = &[Step::Up, Step::Down];
const UDH: &[Step] = &[Step::Up, Step::Down, Step::FlatUnit];
const UDHH: &[Step] = &[Step::Up, Step::Down, Step::FlatDouble];

impl ClassSpec {
    pub fn of(kind: ClassKind) -> ClassSpec {
        use ClassKind::*;
        let (allowed, min_height, max_height, flats_on_axis_only, size) = match kind {
            DD => (UD, Some(0), None, false, SizeSemantics::SemiLength),
            GD => (UD, None, None, false, SizeSemantics::SemiLength),
            MM => (UDH, Some(0), None, false, SizeSemantics::Length),
            GM => (UDH, None, None, false, SizeSemantics::Length),
            SS => (UDHH, Some(0), None, false, SizeSemantics::SemiLength),
            GS => (UDHH, None, None, false, SizeSemantics::SemiLength),
            FF => (UDH, Some(0), Some(1), true, SizeSemantics::Length),
            GF => (UDH, Some(-1), Some(1), true, SizeSemantics::Length),
        };
        ClassSpec {
            kind,
            allowed,
            min_height,
            max_height,
            flats_on_axis_only,
            size,
        }
    }

    /// The class of mirror images: same steps, height window negated.
    /// Only enumeration and validation are meaningful on the result.
    pub fn reflected(&self) -> ClassSpec {
        ClassSpec {
            min_height: self.max_height.map(|h| -h),
            max_height: self.min_height.map(|h| -h),
            ..*self
        }
    }

    pub fn flat_kind(&self) -> FlatKind {
        if self.allowed.contains(&Step::FlatDouble) {
            FlatKind::Double
        } else {
            FlatKind::Unit
        }
    }

    pub fn parse_word(&self, s: &str) -> Result<PathWord> {
        PathWord::parse(s, self.flat_kind())
    }

    pub fn parse_factor(&self, s: &str) -> Result<Factor> {
        Factor::parse(s, self.flat_kind())
    }

    /// Width of every member of size `n`.
    pub fn width_for(&self, n: usize) -> usize {
        match self.size {
            SizeSemantics::SemiLength => 2 * n,
            SizeSemantics::Length => n,
        }
    }

    /// Size parameter of a word, if its width is compatible with the class.
    pub fn size_of(&self, word: &PathWord) -> Option<usize> {
        match self.size {
            SizeSemantics::SemiLength => {
                let w = word.width();
                w.is_multiple_of(2).then_some(w / 2)
            }
            SizeSemantics::Length => Some(word.len()),
        }
    }

    fn in_window(&self, h: i64) -> bool {
        self.min_height.is_none_or(|m| h >= m) && self.max_height.is_none_or(|m| h <= m)
    }

    pub fn validate(&self, word: &PathWord) -> Result<(), Violation> {
        let mut h = 0i64;
        let mut x = 0usize;
        for (index, &step) in word.steps().iter().enumerate() {
            if !self.allowed.contains(&step) {
                return Err(Violation::DisallowedStep { index, step });
            }
            if step.is_flat() && self.flats_on_axis_only && h != 0 {
                return Err(Violation::FlatOffAxis { index, height: h });
            }
            h += step.delta();
            x += step.width();
            if !self.in_window(h) {
                return Err(Violation::OutOfWindow {
                    abscissa: x,
                    height: h,
                });
            }
        }
        if h != 0 {
            return Err(Violation::EndsOffAxis { height: h });
        }
        if self.size == SizeSemantics::SemiLength && !x.is_multiple_of(2) {
            return Err(Violation::OddWidth { width: x });
        }
        Ok(())
    }

    pub fn contains(&self, word: &PathWord) -> bool {
        self.validate(word).is_ok()
    }

    /// Every member of size `n`, each exactly once, in lexicographic order
    /// of step sequences.
    pub fn enumerate(&self, n: usize) -> Vec<PathWord> {
        let target = self.width_for(n);
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(target);
        self.extend(target, 0, 0, &mut buf, &mut out);
        out
    }

    fn extend(
        &self,
        target: usize,
        width: usize,
        height: i64,
        buf: &mut Vec<Step>,
        out: &mut Vec<PathWord>,
    ) {
        if width == target {
            if height == 0 {
                out.push(PathWord::new(buf.clone()));
            }
            return;
        }
        for &step in Step::ALL.iter().filter(|s| self.allowed.contains(s)) {
            let next_width = width + step.width();
            if next_width > target {
                continue;
            }
            if step.is_flat() && self.flats_on_axis_only && height != 0 {
                continue;
            }
            let next_height = height + step.delta();
            if !self.in_window(next_height) {
                continue;
            }
            if next_height.unsigned_abs() as usize > target - next_width {
                continue;
            }
            buf.push(step);
            self.extend(target, next_width, next_height, buf, out);
            buf.pop();
        }
    }
}
