//! Exhaustive axiom checks for a choice of structure constants on a window.

use std::fmt;

use crate::algebra::{koszul, Generator, StructureConstants, TwistedN2};
use crate::linear::Element;
use crate::scalar::{HalfInt, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Antisymmetry,
    Grading,
    L0Eigenvalue,
    Jacobi,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Grading => "grading",
            Axiom::L0Eigenvalue => "l0-eigenvalue",
            Axiom::Jacobi => "jacobi",
        })
    }
}

/// First failing instance of an axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub args: Vec<Generator>,
    pub defect: Element,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|g| g.to_string()).collect();
        write!(f, "{} fails at ({}): defect {}", self.axiom, args.join(", "), self.defect)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub max_index: HalfInt,
    pub generators: usize,
    pub pairs: usize,
    pub triples: usize,
    pub failure: Option<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn to_record(&self) -> String {
        let mut out = format!(
            "max_index={}\ngenerators={}\npairs={}\ntriples={}\nstatus={}\n",
            self.max_index,
            self.generators,
            self.pairs,
            self.triples,
            if self.passed() { "pass" } else { "fail" }
        );
        if let Some(c) = &self.failure {
            out.push_str(&format!("counterexample={c}\n"));
        }
        out
    }
}

/// Runs antisymmetry, grading and L[0]-eigenvalue checks on every pair and
/// the Jacobi identity on every ordered triple of generators with
/// `|index| <= max_index`. Stops at the first failure.
pub fn check_axioms_with(sc: &dyn StructureConstants, max_index: HalfInt) -> AxiomReport {
    let gens = Generator::window(max_index);
    let n = gens.len();
    let mut report = AxiomReport {
        max_index,
        generators: n,
        pairs: n * n,
        triples: n * n * n,
        failure: None,
    };
    report.failure = first_failure(sc, &gens);
    report
}

pub fn check_axioms(max_index: HalfInt) -> AxiomReport {
    check_axioms_with(&TwistedN2, max_index)
}

fn first_failure(sc: &dyn StructureConstants, gens: &[Generator]) -> Option<Counterexample> {
    let fail = |axiom, args: &[Generator], defect: Element| {
        Some(Counterexample { axiom, args: args.to_vec(), defect })
    };
    for a in gens {
        for b in gens {
            let ab = sc.bracket_basis(a, b);
            let mut anti = ab.clone();
            anti.add_scaled(&sc.bracket_basis(b, a), &koszul(a.parity(), b.parity()));
            if !anti.is_zero() {
                return fail(Axiom::Antisymmetry, &[*a, *b], anti);
            }
            let graded = ab.keys().all(|g| {
                g.degree() == a.degree() + b.degree() && g.parity() == a.parity() + b.parity()
            });
            if !graded {
                return fail(Axiom::Grading, &[*a, *b], ab);
            }
        }
    }
    let l0 = Generator::l(0);
    for g in gens {
        let mut defect = sc.bracket_basis(&l0, g);
        defect.add_term(*g, g.degree().to_rational());
        if !defect.is_zero() {
            return fail(Axiom::L0Eigenvalue, &[*g], defect);
        }
    }
    let minus_one = Rational::from_int(-1);
    for x in gens {
        for y in gens {
            let xy = sc.bracket_basis(x, y);
            let sign = -koszul(x.parity(), y.parity());
            for z in gens {
                let xe = Element::basis(*x);
                let ye = Element::basis(*y);
                let ze = Element::basis(*z);
                let mut d = sc.bracket(&xe, &sc.bracket_basis(y, z));
                d.add_scaled(&sc.bracket(&xy, &ze), &minus_one);
                d.add_scaled(&sc.bracket(&ye, &sc.bracket_basis(x, z)), &sign);
                if !d.is_zero() {
                    return fail(Axiom::Jacobi, &[*x, *y, *z], d);
                }
            }
        }
    }
    None
}

/// The algebra with `[T_r, G_p]` doubled. Antisymmetry and grading survive;
/// the Jacobi identity does not. Used as a negative control.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CorruptedTwistedN2;

impl StructureConstants for CorruptedTwistedN2 {
    fn bracket_term(&self, a: &Generator, b: &Generator) -> Option<(Rational, Generator)> {
        use crate::algebra::Kind::{G, T};
        let (c, g) = TwistedN2.bracket_term(a, b)?;
        match (a.kind, b.kind) {
            (T, G) | (G, T) => Some((c * Rational::from_int(2), g)),
            _ => Some((c, g)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_n2_passes_small_window() {
        let r = check_axioms(HalfInt::int(1));
        assert!(r.passed(), "{:?}", r.failure);
        assert_eq!(r.generators, 3 + 2 + 5);
        assert_eq!(r.triples, 1000);
    }

    #[test]
    fn corrupted_constants_break_jacobi_only() {
        let r = check_axioms_with(&CorruptedTwistedN2, HalfInt::int(1));
        let c = r.failure.clone().expect("corruption must be detected");
        assert_eq!(c.axiom, Axiom::Jacobi);
        assert!(!c.defect.is_zero());
        assert!(r.to_record().contains("status=fail\ncounterexample=jacobi fails at ("));
    }
}
