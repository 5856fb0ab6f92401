//! Generators, ℤ₂-grading and the super bracket of the centerless twisted
//! N=2 superconformal algebra.
//!
//! The algebra has even generators `L[m]` (m ∈ ℤ) and `T[r]` (r ∈ ½+ℤ) and
//! odd generators `G[p]` (p ∈ ½ℤ), with
//!
//! ```text
//! [L_m, L_n] = (m - n) L_{m+n}        [L_m, T_r] = -r T_{r+m}
//! [T_r, T_s] = 0                      [L_m, G_p] = (m/2 - p) G_{p+m}
//! [T_r, G_p] = G_{p+r}
//! [G_p, G_q] = (-1)^{2p} 2 L_{p+q}           if p + q ∈ ℤ
//!            = (-1)^{2p+1} (p - q) T_{p+q}   if p + q ∈ ½+ℤ
//! ```
//!
//! Every other ordering follows from `[a, b] = -(-1)^{[a][b]} [b, a]`.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::linear::Element;
use crate::scalar::{HalfInt, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    L,
    T,
    G,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::L, Kind::T, Kind::G];

    pub fn parity(self) -> Parity {
        match self {
            Kind::L | Kind::T => Parity::Even,
            Kind::G => Parity::Odd,
        }
    }

    pub fn admits(self, index: HalfInt) -> bool {
        match self {
            Kind::L => index.is_integer(),
            Kind::T => index.is_half_odd(),
            Kind::G => true,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::L => "L",
            Kind::T => "T",
            Kind::G => "G",
        })
    }
}

/// ℤ₂ degree. Addition is xor, multiplication is and, so `(a * b).is_odd()`
/// decides the Koszul sign `(-1)^{[a][b]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_bool(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// `(-1)^{self}` as a rational.
    pub fn sign(self) -> Rational {
        Rational::sign(self.is_odd())
    }
}

impl Add for Parity {
    type Output = Parity;
    /// Addition in ℤ₂.
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() != rhs.is_odd())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() && rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Koszul sign `(-1)^{[a][b]}`.
pub fn koszul(a: Parity, b: Parity) -> Rational {
    (a * b).sign()
}

/// A basis element `L[m]`, `T[r]` or `G[p]`. Ordered by kind (L < T < G),
/// then by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: Kind,
    pub index: HalfInt,
}

impl Generator {
    pub fn new(kind: Kind, index: HalfInt) -> Result<Self> {
        if kind.admits(index) {
            Ok(Generator { kind, index })
        } else {
            Err(Error::IndexDomain { kind, index })
        }
    }

    pub fn l(m: i64) -> Self {
        Generator { kind: Kind::L, index: HalfInt::int(m) }
    }

    /// `T[twice/2]`; panics unless `twice` is odd.
    pub fn t(twice: i64) -> Self {
        Generator::new(Kind::T, HalfInt::half(twice)).expect("T index must lie in 1/2 + Z")
    }

    /// `G[twice/2]`.
    pub fn g(twice: i64) -> Self {
        Generator { kind: Kind::G, index: HalfInt::half(twice) }
    }

    pub fn parity(&self) -> Parity {
        self.kind.parity()
    }

    /// L₀-grading: `[L_0, x] = -degree(x)·x`.
    pub fn degree(&self) -> HalfInt {
        self.index
    }

    /// Every generator whose index lies in `[-bound, bound]`, in canonical order.
    pub fn window(bound: HalfInt) -> Vec<Generator> {
        Kind::ALL
            .iter()
            .flat_map(|&kind| {
                HalfInt::window(bound)
                    .filter(move |&i| kind.admits(i))
                    .map(move |index| Generator { kind, index })
            })
            .collect()
    }

    /// Generators of a given kind and index, if the index is admissible.
    pub fn with_index(kind: Kind, index: HalfInt) -> Option<Generator> {
        kind.admits(index).then_some(Generator { kind, index })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind, self.index)
    }
}

/// A choice of structure constants on the L/T/G basis.
pub trait StructureConstants: Sync {
    /// `[a, b]` as a single scaled generator, or `None` when it vanishes.
    fn bracket_term(&self, a: &Generator, b: &Generator) -> Option<(Rational, Generator)>;

    fn bracket_basis(&self, a: &Generator, b: &Generator) -> Element {
        match self.bracket_term(a, b) {
            Some((c, g)) => Element::term(g, c),
            None => Element::zero(),
        }
    }

    fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                if let Some((c, g)) = self.bracket_term(a, b) {
                    out.add_term(g, c * ca * cb);
                }
            }
        }
        out
    }
}

/// The twisted N=2 algebra.
#[derive(Debug, Clone, Copy, Default)]
pub struct TwistedN2;

fn scaled(coeff: Rational, g: Generator) -> Option<(Rational, Generator)> {
    (!coeff.is_zero()).then_some((coeff, g))
}

impl StructureConstants for TwistedN2 {
    fn bracket_term(&self, a: &Generator, b: &Generator) -> Option<(Rational, Generator)> {
        use Kind::*;
        let (i, j) = (a.index, b.index);
        let sum = i + j;
        match (a.kind, b.kind) {
            (L, L) => scaled((i - j).to_rational(), Generator { kind: L, index: sum }),
            (L, T) => scaled(-j.to_rational(), Generator { kind: T, index: sum }),
            (T, T) => None,
            (L, G) => scaled(
                Rational::new(i.twice(), 4) - j.to_rational(),
                Generator { kind: G, index: sum },
            ),
            (T, G) => scaled(Rational::one(), Generator { kind: G, index: sum }),
            (G, G) => {
                let twice_p_odd = i.twice().rem_euclid(2) == 1;
                if sum.is_integer() {
                    scaled(Rational::from_int(2) * Rational::sign(twice_p_odd), Generator { kind: L, index: sum })
                } else {
                    scaled(
                        Rational::sign(!twice_p_odd) * (i - j).to_rational(),
                        Generator { kind: T, index: sum },
                    )
                }
            }
            // one argument is even, so [a, b] = -[b, a]
            (T, L) | (G, L) | (G, T) => self.bracket_term(b, a).map(|(c, g)| (-c, g)),
        }
    }
}

/// `[a, b]` for basis generators.
pub fn bracket_basis(a: &Generator, b: &Generator) -> Element {
    TwistedN2.bracket_basis(a, b)
}

/// Bilinear bracket of elements.
pub fn bracket(x: &Element, y: &Element) -> Element {
    TwistedN2.bracket(x, y)
}

pub(crate) fn require_homogeneous(x: &Element, what: &str) -> Result<Parity> {
    if x.is_zero() {
        return Ok(Parity::Even);
    }
    x.parity().ok_or_else(|| Error::Homogeneity(format!("{what} = {x}")))
}

/// `[x,[y,z]] - [[x,y],z] - (-1)^{[x][y]} [y,[x,z]]`, zero exactly when the
/// graded Jacobi identity holds on the triple.
pub fn jacobi_defect(x: &Element, y: &Element, z: &Element) -> Result<Element> {
    jacobi_defect_with(&TwistedN2, x, y, z)
}

pub fn jacobi_defect_with(
    sc: &dyn StructureConstants,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    let px = require_homogeneous(x, "x")?;
    let py = require_homogeneous(y, "y")?;
    require_homogeneous(z, "z")?;
    let mut out = sc.bracket(x, &sc.bracket(y, z));
    out.add_scaled(&sc.bracket(&sc.bracket(x, y), z), &Rational::from_int(-1));
    out.add_scaled(&sc.bracket(y, &sc.bracket(x, z)), &-koszul(px, py));
    Ok(out)
}
