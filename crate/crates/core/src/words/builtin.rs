use std::fmt;

use crate::digits::{euler_phi, u_term_u64, GroupElement};
use crate::error::{Error, Result};

use super::{Coding, UniformMorphism};

/// Names accepted by [`builtin_morphism`].
pub const BUILTIN_NAMES: [&str; 5] = ["thue-morse", "lambda", "dekking8", "dekking6", "cantor"];

/// Letters of Dekking's compass alphabet `{s, n, o, w, s', n', o', w'}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DekkingLetter {
    S,
    N,
    O,
    W,
    SPrime,
    NPrime,
    OPrime,
    WPrime,
}

impl fmt::Display for DekkingLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DekkingLetter::*;
        f.write_str(match self {
            S => "s",
            N => "n",
            O => "o",
            W => "w",
            SPrime => "s'",
            NPrime => "n'",
            OPrime => "o'",
            WPrime => "w'",
        })
    }
}

/// Common letter type for the name-addressed built-ins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Char(char),
    Dekking(DekkingLetter),
    Unit(GroupElement),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Char(c) => write!(f, "{c}"),
            Symbol::Dekking(d) => write!(f, "{d}"),
            Symbol::Unit(g) => write!(f, "{g}"),
        }
    }
}

/// A built-in morphism with its default seed and, when one exists, its coding.
#[derive(Debug, Clone)]
pub struct BuiltinMorphism {
    pub name: &'static str,
    pub morphism: UniformMorphism<Symbol>,
    pub seed: Symbol,
    pub coding: Option<Coding<Symbol, Symbol>>,
}

/// `(-1)^sign j^power` with `j = e^{2iπ/3}`.
fn unit(sign: u64, power: u64) -> GroupElement {
    GroupElement::reduced(sign, power, 2, 3)
}

/// `0 → 01`, `1 → 10`.
pub fn thue_morse() -> UniformMorphism<char> {
    UniformMorphism::new([('0', vec!['0', '1']), ('1', vec!['1', '0'])]).expect("valid table")
}

/// `0 → a`, `1 → b`.
pub fn thue_morse_coding() -> Coding<char, char> {
    Coding::new([('0', 'a'), ('1', 'b')]).expect("valid coding")
}

/// `0 → 000`, `1 → 101`; seed `1`.
pub fn cantor() -> UniformMorphism<char> {
    UniformMorphism::new([('0', vec!['0', '0', '0']), ('1', vec!['1', '0', '1'])])
        .expect("valid table")
}

/// The length-4 morphism on `{±1, ±j, ±j²}` whose fixed point from `1` is
/// `(-1)^{s_2(n)} j^n`.
pub fn lambda() -> UniformMorphism<GroupElement> {
    let rows = [
        ((0, 0), [(0, 0), (1, 1), (1, 2), (0, 0)]),
        ((1, 0), [(1, 0), (0, 1), (0, 2), (1, 0)]),
        ((0, 1), [(0, 1), (1, 2), (1, 0), (0, 1)]),
        ((1, 1), [(1, 1), (0, 2), (0, 0), (1, 1)]),
        ((0, 2), [(0, 2), (1, 0), (1, 1), (0, 2)]),
        ((1, 2), [(1, 2), (0, 0), (0, 1), (1, 2)]),
    ];
    UniformMorphism::new(
        rows.iter()
            .map(|&((s, k), image)| (unit(s, k), image.iter().map(|&(s, k)| unit(s, k)).collect())),
    )
    .expect("valid table")
}

pub fn dekking8() -> UniformMorphism<DekkingLetter> {
    use DekkingLetter::*;
    UniformMorphism::new([
        (S, vec![S, N, O, W]),
        (W, vec![S, N, O, W]),
        (O, vec![O, W, NPrime, O]),
        (N, vec![N, OPrime, S, N]),
        (SPrime, vec![SPrime, NPrime, OPrime, WPrime]),
        (WPrime, vec![SPrime, NPrime, OPrime, WPrime]),
        (OPrime, vec![OPrime, WPrime, N, OPrime]),
        (NPrime, vec![NPrime, O, SPrime, NPrime]),
    ])
    .expect("valid table")
}

/// Corrected coding: `o → -j` and `o' → j`.
pub fn dekking8_coding() -> Coding<DekkingLetter, GroupElement> {
    use DekkingLetter::*;
    Coding::new([
        (S, unit(0, 0)),
        (W, unit(0, 0)),
        (N, unit(1, 2)),
        (O, unit(1, 1)),
        (SPrime, unit(1, 0)),
        (WPrime, unit(1, 0)),
        (NPrime, unit(0, 2)),
        (OPrime, unit(0, 1)),
    ])
    .expect("valid coding")
}

/// Dekking's morphism with `w` merged into `s` and `w'` into `s'`.
pub fn dekking6() -> UniformMorphism<DekkingLetter> {
    use DekkingLetter::*;
    UniformMorphism::new([
        (S, vec![S, N, O, S]),
        (O, vec![O, S, NPrime, O]),
        (N, vec![N, OPrime, S, N]),
        (SPrime, vec![SPrime, NPrime, OPrime, SPrime]),
        (OPrime, vec![OPrime, SPrime, N, OPrime]),
        (NPrime, vec![NPrime, O, SPrime, NPrime]),
    ])
    .expect("valid table")
}

pub fn dekking6_coding() -> Coding<DekkingLetter, GroupElement> {
    use DekkingLetter::*;
    Coding::new([
        (S, unit(0, 0)),
        (N, unit(1, 2)),
        (O, unit(1, 1)),
        (SPrime, unit(1, 0)),
        (NPrime, unit(0, 2)),
        (OPrime, unit(0, 1)),
    ])
    .expect("valid coding")
}

fn lift_coding<L: super::Letter, M: super::Letter>(
    coding: Coding<L, M>,
    from: impl Fn(L) -> Symbol,
    to: impl Fn(M) -> Symbol,
) -> Coding<Symbol, Symbol> {
    Coding::new(coding.pairs().map(|(l, m)| (from(l), to(m)))).expect("injective relabel")
}

/// Looks up a built-in morphism by name (see [`BUILTIN_NAMES`]).
pub fn builtin_morphism(name: &str) -> Result<BuiltinMorphism> {
    let relabel = "injective relabel";
    let built = match name {
        "thue-morse" => BuiltinMorphism {
            name: "thue-morse",
            morphism: thue_morse().map_letters(Symbol::Char).expect(relabel),
            seed: Symbol::Char('0'),
            coding: Some(lift_coding(thue_morse_coding(), Symbol::Char, Symbol::Char)),
        },
        "lambda" => BuiltinMorphism {
            name: "lambda",
            morphism: lambda().map_letters(Symbol::Unit).expect(relabel),
            seed: Symbol::Unit(unit(0, 0)),
            coding: None,
        },
        "dekking8" => BuiltinMorphism {
            name: "dekking8",
            morphism: dekking8().map_letters(Symbol::Dekking).expect(relabel),
            seed: Symbol::Dekking(DekkingLetter::S),
            coding: Some(lift_coding(
                dekking8_coding(),
                Symbol::Dekking,
                Symbol::Unit,
            )),
        },
        "dekking6" => BuiltinMorphism {
            name: "dekking6",
            morphism: dekking6().map_letters(Symbol::Dekking).expect(relabel),
            seed: Symbol::Dekking(DekkingLetter::S),
            coding: Some(lift_coding(
                dekking6_coding(),
                Symbol::Dekking,
                Symbol::Unit,
            )),
        },
        "cantor" => BuiltinMorphism {
            name: "cantor",
            morphism: cantor().map_letters(Symbol::Char).expect(relabel),
            seed: Symbol::Char('1'),
            coding: None,
        },
        other => return Err(Error::UnknownMorphism(other.to_string())),
    };
    Ok(built)
}

const MAX_GENERAL_TABLE: u64 = 1 << 24;

/// The length-`Q` morphism `z → (u_0 z, …, u_{Q-1} z)` on the `2q` letters
/// `±η_q^k`, where `u_r = (-1)^{s_2(r)} η_q^r` and `Q = 2^{φ(q)}`.
pub fn build_general_morphism(q: u32) -> Result<UniformMorphism<GroupElement>> {
    if q < 2 {
        return Err(Error::InvalidBase(q.into()));
    }
    let phi = euler_phi(q.into());
    if phi >= 32 || (1u64 << phi) * 2 * u64::from(q) > MAX_GENERAL_TABLE {
        return Err(Error::Resource(format!(
            "morphism of length 2^{phi} on {} letters",
            2 * q
        )));
    }
    let block = 1u64 << phi;
    let weights: Vec<GroupElement> = (0..block).map(|r| u_term_u64(r, 2, q)).collect();
    let letters = (0..q).flat_map(|k| [0, 1].map(|s| GroupElement::reduced(s, k.into(), 2, q)));
    UniformMorphism::new(letters.map(|z| (z, weights.iter().map(|&w| z * w).collect())))
}
