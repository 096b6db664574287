//! `{F, L}` turtle programs and the Thue-Morse construction of the Koch curve.
//!
//! `F` steps one unit forward, `L` turns by a fixed angle (`π/3` by default,
//! counterclockwise for positive angles). The curve `W̃_n` is produced through
//! its partial-sum form `Σ_{k<4^n} (-1)^{s_2(k)} j^k`.

use std::fmt;

use num_complex::Complex;

use crate::cycsum::make_curve_spec;
use crate::digits::thue_morse;
use crate::error::{Error, Result};
use crate::geometry::{partial_sum_polyline, Point, Polyline, MAX_VERTICES};
use crate::scalar::Real;
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TurtleLetter {
    /// Move one unit forward.
    F,
    /// Rotate by the program's angle.
    L,
}

impl TurtleLetter {
    pub fn swapped(self) -> Self {
        match self {
            TurtleLetter::F => TurtleLetter::L,
            TurtleLetter::L => TurtleLetter::F,
        }
    }
}

impl fmt::Display for TurtleLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TurtleLetter::F => "F",
            TurtleLetter::L => "L",
        })
    }
}

impl TryFrom<char> for TurtleLetter {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'F' => Ok(TurtleLetter::F),
            'L' => Ok(TurtleLetter::L),
            other => Err(Error::UnknownLetter(other.to_string())),
        }
    }
}

/// Parses an `"FL…"` string.
pub fn parse_turtle_word(s: &str) -> Result<Word<TurtleLetter>> {
    s.chars().map(TurtleLetter::try_from).collect()
}

pub fn format_turtle_word(word: &[TurtleLetter]) -> String {
    word.iter().map(ToString::to_string).collect()
}

/// Letterwise `F ↔ L` exchange.
pub fn swap_letters(word: &[TurtleLetter]) -> Word<TurtleLetter> {
    word.iter().map(|l| l.swapped()).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TurtleProgram<T> {
    pub word: Word<TurtleLetter>,
    /// Turn applied by each `L`, in radians; negative turns clockwise.
    pub angle: T,
}

impl<T: Real> TurtleProgram<T> {
    pub fn new(word: Word<TurtleLetter>, angle: T) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::Domain("turn angle must be finite".into()));
        }
        Ok(TurtleProgram { word, angle })
    }

    /// A program turning by `π/3`.
    pub fn sixty_degrees(word: Word<TurtleLetter>) -> Self {
        TurtleProgram {
            word,
            angle: T::FRAC_PI_3(),
        }
    }

    pub fn parse(s: &str, angle: T) -> Result<Self> {
        Self::new(parse_turtle_word(s)?, angle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurtleState<T> {
    pub position: Point<T>,
    /// Kept in `[0, 2π)`.
    pub heading: T,
}

impl<T: Real> TurtleState<T> {
    fn new() -> Self {
        TurtleState {
            position: Point::origin(),
            heading: T::zero(),
        }
    }

    fn turn(&mut self, angle: T) {
        let tau = T::TAU();
        let mut h = (self.heading + angle) % tau;
        if h < T::zero() {
            h = h + tau;
        }
        if h >= tau {
            h = h - tau;
        }
        self.heading = h;
    }

    fn forward(&mut self) {
        self.position = Point::new(
            self.position.x + self.heading.cos(),
            self.position.y + self.heading.sin(),
        );
    }
}

/// Traces the program from the origin heading along `+x`; each `F` adds a vertex.
pub fn run_turtle<T: Real>(prog: &TurtleProgram<T>) -> Polyline<T> {
    let mut state = TurtleState::new();
    let mut points = vec![state.position];
    for letter in &prog.word {
        match letter {
            TurtleLetter::F => {
                state.forward();
                points.push(state.position);
            }
            TurtleLetter::L => state.turn(prog.angle),
        }
    }
    Polyline::new(points).expect("finite turtle track")
}

/// The first `2^k` Thue-Morse bits written with `zero_letter` for 0 and the
/// other letter for 1.
pub fn tm_prefix_word(k: u32, zero_letter: TurtleLetter) -> Result<Word<TurtleLetter>> {
    if k >= 63 || (1u64 << k) > MAX_VERTICES {
        return Err(Error::Resource(format!(
            "Thue-Morse prefix of length 2^{k}"
        )));
    }
    Ok((0..1u64 << k)
        .map(|n| {
            if thue_morse(&n) == 0 {
                zero_letter
            } else {
                zero_letter.swapped()
            }
        })
        .collect())
}

/// Chunk label in a block decomposition: the block itself, or its letter swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockSign {
    Plain,
    Swapped,
}

impl fmt::Display for BlockSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockSign::Plain => "B",
            BlockSign::Swapped => "B\u{304}",
        })
    }
}

/// Splits `word` into `|block|`-chunks, each equal to `block` or to its swap.
pub fn block_decompose(word: &[TurtleLetter], block: &[TurtleLetter]) -> Result<Vec<BlockSign>> {
    if block.is_empty() || !word.len().is_multiple_of(block.len()) {
        return Err(Error::Domain(format!(
            "word length {} is not a multiple of block length {}",
            word.len(),
            block.len()
        )));
    }
    let swapped = swap_letters(block);
    word.chunks(block.len())
        .enumerate()
        .map(|(chunk, piece)| {
            if piece == block {
                Ok(BlockSign::Plain)
            } else if piece == &swapped[..] {
                Ok(BlockSign::Swapped)
            } else {
                Err(Error::BlockMismatch { chunk })
            }
        })
        .collect()
}

/// How the Thue-Morse curve is scaled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scaling {
    /// `S_{2n} = 2/(3^{2n-2} - 1)`.
    Paper,
    /// `3^{-n}`, which sends the endpoint to `(1, 0)`.
    Natural,
    None,
}

/// `S_m = 2/(3^{m-2} - 1)`, defined and positive only for `m ≥ 3`.
pub fn paper_scale<T: Real>(m: u32) -> Result<T> {
    if m <= 2 {
        return Err(Error::Domain(format!(
            "scaling factor S_{m} = 2/(3^{}-1) is singular or non-positive",
            i64::from(m) - 2
        )));
    }
    let three = T::lit(3.0);
    Ok(T::lit(2.0) / (three.powi(m as i32 - 2) - T::one()))
}

/// `W̃_n`: the partial sums of `(-1)^{s_2(k)} j^k` for `k < 4^n`, scaled.
pub fn maholdener_curve<T: Real>(n: u32, scaling: Scaling) -> Result<Polyline<T>> {
    if n == 0 {
        return Err(Error::Domain("generation must be at least 1".into()));
    }
    let factor = match scaling {
        Scaling::Paper => paper_scale::<T>(2 * n)?,
        Scaling::Natural => T::lit(3.0).powi(-(n as i32)),
        Scaling::None => T::one(),
    };
    let count = 4u64
        .checked_pow(n)
        .ok_or_else(|| Error::Resource(format!("4^{n} segments")))?;
    let spec = make_curve_spec::<T>(2, 3)?;
    let raw = partial_sum_polyline(&spec, count)?;
    Ok(raw.transformed(
        Complex::new(factor, T::zero()),
        Complex::new(T::zero(), T::zero()),
    ))
}
