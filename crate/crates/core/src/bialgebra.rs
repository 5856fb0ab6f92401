//! Coboundary cobrackets `Δ_r`, the Yang-Baxter expression `c(r)` and the
//! defects of the Lie super-bialgebra axioms.

use std::fmt;

use crate::algebra::{bracket, koszul, require_homogeneous, Generator, Parity, StructureConstants, TwistedN2};
use crate::error::{Error, Result};
use crate::linear::{Element, Tensor2, Tensor3};
use crate::scalar::{HalfInt, Rational};
use crate::tensor::{act2, act2_gen, act3, act3_gen, cyclic_xi, is_super_skew};

/// A parity-homogeneous element `r = Σ a_i⊗b_i` of 𝓛⊗𝓛.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    value: Tensor2,
    parity: Parity,
}

impl RMatrix {
    pub fn new(value: Tensor2) -> Result<Self> {
        let parity = if value.is_zero() {
            Parity::Even
        } else {
            value.parity().ok_or_else(|| Error::Homogeneity(format!("r = {value}")))?
        };
        Ok(RMatrix { value, parity })
    }

    pub fn zero() -> Self {
        RMatrix { value: Tensor2::zero(), parity: Parity::Even }
    }

    pub fn value(&self) -> &Tensor2 {
        &self.value
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_super_skew(&self) -> bool {
        is_super_skew(&self.value)
    }

    fn require_even_skew(&self) -> Result<()> {
        if self.parity.is_odd() {
            return Err(Error::OddR);
        }
        if !self.is_super_skew() {
            return Err(Error::Skewness(self.value.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Bound `N` on `|index|` of the generators used to probe `x∗c(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    pub bound: u32,
}

impl WindowSpec {
    pub fn new(bound: u32) -> Self {
        WindowSpec { bound }
    }

    /// Window generators by ascending `|index|`, ties in canonical order.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gens = Generator::window(HalfInt::int(self.bound as i64));
        gens.sort_by_key(|g| (g.index.abs(), *g));
        gens
    }
}

/// `Δ_r(x) = (-1)^{[r][x]} x∗r`.
pub fn delta_r(r: &RMatrix, x: &Element) -> Result<Tensor2> {
    let px = require_homogeneous(x, "x")?;
    Ok(act2(x, &r.value)?.scale(&koszul(r.parity, px)))
}

fn delta_r_gen(r: &RMatrix, x: &Generator) -> Tensor2 {
    act2_gen(x, &r.value).scale(&koszul(r.parity, x.parity()))
}

/// `[r¹², s¹³] = Σ (-1)^{[a_j][b_i]} [a_i, a_j]⊗b_i⊗b_j`.
pub fn bracket_12_13(r: &RMatrix, s: &RMatrix) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((ai, bi), ci) in &r.value {
        for ((aj, bj), cj) in &s.value {
            if let Some((k, g)) = TwistedN2.bracket_term(ai, aj) {
                out.add_term((g, *bi, *bj), k * ci * cj * koszul(aj.parity(), bi.parity()));
            }
        }
    }
    out
}

/// `[r¹², s²³] = Σ a_i⊗[b_i, a_j]⊗b_j`.
pub fn bracket_12_23(r: &RMatrix, s: &RMatrix) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((ai, bi), ci) in &r.value {
        for ((aj, bj), cj) in &s.value {
            if let Some((k, g)) = TwistedN2.bracket_term(bi, aj) {
                out.add_term((*ai, g, *bj), k * ci * cj);
            }
        }
    }
    out
}

/// `[r¹³, s²³] = Σ (-1)^{[a_j][b_i]} a_i⊗a_j⊗[b_i, b_j]`.
pub fn bracket_13_23(r: &RMatrix, s: &RMatrix) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((ai, bi), ci) in &r.value {
        for ((aj, bj), cj) in &s.value {
            if let Some((k, g)) = TwistedN2.bracket_term(bi, bj) {
                out.add_term((*ai, *aj, g), k * ci * cj * koszul(aj.parity(), bi.parity()));
            }
        }
    }
    out
}

/// `c(r) = [r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]`.
pub fn cybe(r: &RMatrix) -> Tensor3 {
    bracket_12_13(r, r) + bracket_12_23(r, r) + bracket_13_23(r, r)
}

/// Every window generator `x` with `x∗c(r) ≠ 0`, in witness-search order.
pub fn mybe_defects(r: &RMatrix, window: WindowSpec) -> Vec<(Generator, Tensor3)> {
    let c = cybe(r);
    if c.is_zero() {
        return Vec::new();
    }
    window
        .generators()
        .into_iter()
        .map(|x| (x, act3_gen(&x, &c)))
        .filter(|(_, t)| !t.is_zero())
        .collect()
}

/// `(1⊗Δ_r)(a⊗b) = a⊗Δ_r(b)`; the Koszul sign is trivial because `r` is even.
fn one_tensor_delta(r: &RMatrix, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t {
        for ((u, v), k) in &delta_r_gen(r, b) {
            out.add_term((*a, *u, *v), c * k);
        }
    }
    out
}

/// `(1 + ξ + ξ²)·(1⊗Δ_r)·Δ_r(x) - x∗c(r)`, identically zero for even super-skew `r`.
pub fn cojacobi_identity_defect(r: &RMatrix, x: &Element) -> Result<Tensor3> {
    r.require_even_skew()?;
    let d = delta_r(r, x)?;
    let once = one_tensor_delta(r, &d);
    let twice = cyclic_xi(&once);
    let thrice = cyclic_xi(&twice);
    let lhs = once + twice + thrice;
    Ok(lhs - act3(x, &cybe(r))?)
}

/// `Δ_r([x,y]) - x∗Δ_r(y) + (-1)^{[x][y]} y∗Δ_r(x)`, the 1-cocycle defect.
pub fn mixed_compat_defect(r: &RMatrix, x: &Element, y: &Element) -> Result<Tensor2> {
    if r.parity.is_odd() {
        return Err(Error::OddR);
    }
    let px = require_homogeneous(x, "x")?;
    let py = require_homogeneous(y, "y")?;
    let mut out = delta_r(r, &bracket(x, y))?;
    out.add_scaled(&act2(x, &delta_r(r, y)?)?, &Rational::from_int(-1));
    out.add_scaled(&act2(y, &delta_r(r, x)?)?, &koszul(px, py));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub skew: bool,
    pub cybe_zero: bool,
    pub mybe_window_clean: bool,
    /// First generator in search order with `x∗c(r) ≠ 0`.
    pub witness: Option<(Generator, Tensor3)>,
    pub window: WindowSpec,
}

impl ClassifyReport {
    /// Super-skew with `c(r) = 0`: the coboundary is triangular.
    pub fn is_triangular(&self) -> bool {
        self.skew && self.cybe_zero
    }

    /// Flat `key=value` lines in the fixed field order.
    pub fn to_record(&self) -> String {
        let witness = match &self.witness {
            Some((g, t)) => format!("{g} -> {t}"),
            None => "none".to_string(),
        };
        format!(
            "skew={}\ncybe_zero={}\nmybe_window_clean={}\nwitness={}\nwindow={}\n",
            self.skew, self.cybe_zero, self.mybe_window_clean, witness, self.window.bound
        )
    }
}

pub fn classify_r(r: &RMatrix, window: WindowSpec) -> ClassifyReport {
    let c = cybe(r);
    let cybe_zero = c.is_zero();
    let witness = if cybe_zero {
        None
    } else {
        window
            .generators()
            .into_iter()
            .map(|x| (x, act3_gen(&x, &c)))
            .find(|(_, t)| !t.is_zero())
    };
    ClassifyReport {
        skew: r.is_super_skew(),
        cybe_zero,
        mybe_window_clean: witness.is_none(),
        witness,
        window,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator as Gen;

    fn t2(a: Gen, b: Gen) -> Tensor2 {
        Tensor2::basis((a, b))
    }

    fn t3(a: Gen, b: Gen, c: Gen) -> Tensor3 {
        Tensor3::basis((a, b, c))
    }

    fn rm(t: Tensor2) -> RMatrix {
        RMatrix::new(t).unwrap()
    }

    fn triangular() -> RMatrix {
        rm(t2(Gen::l(1), Gen::l(0)) - t2(Gen::l(0), Gen::l(1)))
    }

    fn witt_pair() -> RMatrix {
        rm(t2(Gen::l(1), Gen::l(-1)) - t2(Gen::l(-1), Gen::l(1)))
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rmatrix_requires_homogeneity() {
        let mixed = t2(Gen::l(0), Gen::l(0)) + t2(Gen::l(0), Gen::g(0));
        assert!(matches!(RMatrix::new(mixed), Err(Error::Homogeneity(_))));
        assert_eq!(rm(t2(Gen::l(0), Gen::g(0))).parity(), Parity::Odd);
    }

    #[test]
    fn delta_examples() {
        let r = triangular();
        let l0 = Element::basis(Gen::l(0));
        // L0 acts on the degree-1 piece by -1
        assert_eq!(delta_r(&r, &l0).unwrap(), -r.value().clone());
        assert!(delta_r(&RMatrix::zero(), &l0).unwrap().is_zero());
        // L1*(L1⊗L0 - L0⊗L1) = L1⊗L1 - L1⊗L1 = 0
        let l1 = Element::basis(Gen::l(1));
        assert!(delta_r(&r, &l1).unwrap().is_zero());
    }

    #[test]
    fn r_bracket_examples() {
        let a = rm(t2(Gen::l(0), Gen::l(1)));
        let b = rm(t2(Gen::l(1), Gen::l(0)));
        assert!(bracket_12_13(&a, &a).is_zero());
        assert!(bracket_12_13(&b, &b).is_zero());
        assert_eq!(bracket_12_13(&a, &b), -t3(Gen::l(1), Gen::l(1), Gen::l(0)));

        let l00 = rm(t2(Gen::l(0), Gen::l(0)));
        assert!(bracket_12_23(&l00, &l00).is_zero());
        assert_eq!(bracket_12_23(&a, &a), t3(Gen::l(0), Gen::l(1), Gen::l(1)));
        let g00 = rm(t2(Gen::g(0), Gen::g(0)));
        assert_eq!(bracket_12_23(&g00, &g00), t3(Gen::g(0), Gen::l(0), Gen::g(0)).scale(&q(2)));

        assert!(bracket_13_23(&l00, &l00).is_zero());
        assert_eq!(bracket_13_23(&a, &l00), t3(Gen::l(0), Gen::l(0), Gen::l(1)));
        let g01 = rm(t2(Gen::g(0), Gen::g(1)));
        assert_eq!(
            bracket_13_23(&g01, &g00),
            t3(Gen::g(0), Gen::g(0), Gen::t(1)).scale(&Rational::new(-1, 2))
        );
    }

    #[test]
    fn cybe_examples() {
        assert!(cybe(&triangular()).is_zero());
        assert!(cybe(&RMatrix::zero()).is_zero());
        assert!(!cybe(&witt_pair()).is_zero());
    }

    #[test]
    fn mybe_examples() {
        assert!(mybe_defects(&triangular(), WindowSpec::new(3)).is_empty());
        assert!(mybe_defects(&RMatrix::zero(), WindowSpec::new(5)).is_empty());
        assert!(!mybe_defects(&witt_pair(), WindowSpec::new(3)).is_empty());
    }

    #[test]
    fn cojacobi_examples() {
        let l2 = Element::basis(Gen::l(2));
        assert!(cojacobi_identity_defect(&triangular(), &l2).unwrap().is_zero());
        assert!(cojacobi_identity_defect(&RMatrix::zero(), &l2).unwrap().is_zero());
        let g = Element::basis(Gen::g(1));
        assert!(cojacobi_identity_defect(&witt_pair(), &g).unwrap().is_zero());
    }

    #[test]
    fn cojacobi_preconditions() {
        let l0 = Element::basis(Gen::l(0));
        let not_skew = rm(t2(Gen::l(0), Gen::l(0)));
        assert!(matches!(cojacobi_identity_defect(&not_skew, &l0), Err(Error::Skewness(_))));
        let odd = rm(t2(Gen::l(0), Gen::g(0)) - t2(Gen::g(0), Gen::l(0)));
        assert!(matches!(cojacobi_identity_defect(&odd, &l0), Err(Error::OddR)));
        let mixed = l0.clone() + Element::basis(Gen::g(0));
        assert!(matches!(
            cojacobi_identity_defect(&triangular(), &mixed),
            Err(Error::Homogeneity(_))
        ));
    }

    #[test]
    fn mixed_compat_examples() {
        let l1 = Element::basis(Gen::l(1));
        let lm1 = Element::basis(Gen::l(-1));
        let g0 = Element::basis(Gen::g(0));
        let r = witt_pair();
        assert!(mixed_compat_defect(&r, &l1, &lm1).unwrap().is_zero());
        assert!(mixed_compat_defect(&RMatrix::zero(), &l1, &g0).unwrap().is_zero());
        let skew = rm(t2(Gen::g(1), Gen::g(-1)) + t2(Gen::g(-1), Gen::g(1)));
        assert!(skew.is_super_skew());
        assert!(mixed_compat_defect(&skew, &g0, &g0).unwrap().is_zero());
    }

    #[test]
    fn classify_examples() {
        let w = WindowSpec::new(4);
        let rep = classify_r(&triangular(), w);
        assert!(rep.skew && rep.cybe_zero && rep.mybe_window_clean && rep.witness.is_none());
        assert!(rep.is_triangular());

        let rep = classify_r(&rm(t2(Gen::l(0), Gen::l(0))), w);
        assert!(!rep.skew);

        let rep = classify_r(&witt_pair(), w);
        assert!(rep.skew && !rep.cybe_zero && !rep.mybe_window_clean);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn classify_record_field_order() {
        let rep = classify_r(&triangular(), WindowSpec::new(4));
        assert_eq!(
            rep.to_record(),
            "skew=true\ncybe_zero=true\nmybe_window_clean=true\nwitness=none\nwindow=4\n"
        );
    }
}
