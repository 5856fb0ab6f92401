//! Tensor squares and cubes: super-twist, super-cyclic map and the adjoint
//! diagonal action.

use crate::algebra::{koszul, require_homogeneous, Generator, StructureConstants, TwistedN2};
use crate::error::Result;
use crate::linear::{Element, Key2, Key3, Tensor2, Tensor3};
use crate::scalar::Rational;

/// `τ(a⊗b) = (-1)^{[a][b]} b⊗a`.
pub fn twist_tau(t: &Tensor2) -> Tensor2 {
    t.iter()
        .map(|((a, b), c)| ((*b, *a), c * koszul(a.parity(), b.parity())))
        .collect()
}

/// `ξ(a⊗b⊗c) = (-1)^{[a]([b]+[c])} b⊗c⊗a`.
pub fn cyclic_xi(t: &Tensor3) -> Tensor3 {
    t.iter()
        .map(|((a, b, c), k)| ((*b, *c, *a), k * koszul(a.parity(), b.parity() + c.parity())))
        .collect()
}

/// `x∗(a⊗b)` for a single generator `x`, added into `out` with weight `w`.
pub(crate) fn act2_basis_into(x: &Generator, key: &Key2, w: &Rational, out: &mut Tensor2) {
    let (a, b) = key;
    if let Some((c, g)) = TwistedN2.bracket_term(x, a) {
        out.add_term((g, *b), c * w);
    }
    if let Some((c, g)) = TwistedN2.bracket_term(x, b) {
        out.add_term((*a, g), c * w * koszul(x.parity(), a.parity()));
    }
}

pub(crate) fn act3_basis_into(x: &Generator, key: &Key3, w: &Rational, out: &mut Tensor3) {
    let (a, b, c) = key;
    let px = x.parity();
    if let Some((k, g)) = TwistedN2.bracket_term(x, a) {
        out.add_term((g, *b, *c), k * w);
    }
    if let Some((k, g)) = TwistedN2.bracket_term(x, b) {
        out.add_term((*a, g, *c), k * w * koszul(px, a.parity()));
    }
    if let Some((k, g)) = TwistedN2.bracket_term(x, c) {
        out.add_term((*a, *b, g), k * w * koszul(px, a.parity() + b.parity()));
    }
}

/// Adjoint diagonal action on 𝓛⊗𝓛:
/// `x∗(a⊗b) = [x,a]⊗b + (-1)^{[x][a]} a⊗[x,b]`.
pub fn act2(x: &Element, t: &Tensor2) -> Result<Tensor2> {
    require_homogeneous(x, "x")?;
    let mut out = Tensor2::zero();
    for (g, cg) in x {
        for (key, ck) in t {
            act2_basis_into(g, key, &(cg * ck), &mut out);
        }
    }
    Ok(out)
}

/// Leibniz extension of the action to 𝓛⊗³:
/// `x∗(a⊗b⊗c) = [x,a]⊗b⊗c + (-1)^{[x][a]} a⊗[x,b]⊗c + (-1)^{[x]([a]+[b])} a⊗b⊗[x,c]`.
pub fn act3(x: &Element, t: &Tensor3) -> Result<Tensor3> {
    require_homogeneous(x, "x")?;
    let mut out = Tensor3::zero();
    for (g, cg) in x {
        for (key, ck) in t {
            act3_basis_into(g, key, &(cg * ck), &mut out);
        }
    }
    Ok(out)
}

/// Action of a single generator, which is always homogeneous.
pub fn act2_gen(x: &Generator, t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (key, c) in t {
        act2_basis_into(x, key, c, &mut out);
    }
    out
}

pub fn act3_gen(x: &Generator, t: &Tensor3) -> Tensor3 {
    let mut out = Tensor3::zero();
    for (key, c) in t {
        act3_basis_into(x, key, c, &mut out);
    }
    out
}

/// Membership in Im(1⊗1 - τ), decided as `(1⊗1 + τ)t = 0`. Over ℚ the two
/// subspaces coincide because τ is an involution.
pub fn is_super_skew(t: &Tensor2) -> bool {
    (t + &twist_tau(t)).is_zero()
}

/// `½(t - τ(t))`.
pub fn skew_project(t: &Tensor2) -> Tensor2 {
    (t - &twist_tau(t)).scale(&Rational::new(1, 2))
}

/// `x⊗y` for elements.
pub fn tensor2(x: &Element, y: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_term((*a, *b), ca * cb);
        }
    }
    out
}
