//! Windowed first cohomology of 𝓛 with coefficients in 𝓥 = 𝓛⊗𝓛.
//!
//! A homogeneous derivation `d` of parity `δ` and degree `i` sends a
//! generator `x` of degree `j` into 𝓥_{i+j}. On a finite window the
//! coefficients of every `d(x)` become unknowns and the derivation rule
//!
//! ```text
//! d([x,y]) = (-1)^{δ[x]} x∗d(y) - (-1)^{[y](δ+[x])} y∗d(x)
//! ```
//!
//! becomes a sparse homogeneous linear system over ℚ.
//!
//! Window conventions:
//! * the domain is every generator with `|index| <= domain_bound`;
//! * tensor factors of every unknown satisfy `|index| <= target_bound`;
//! * equations are imposed for pairs with `|index| <= equation_bound`, and
//!   only on *interior* keys whose two factors satisfy
//!   `|index| <= target_bound - equation_bound`. Acting by such `x` moves a
//!   single factor by at most `equation_bound`, so interior rows never read
//!   a coefficient the window dropped.
//! * Derivations are compared with inner derivations on the *observed*
//!   coordinates: domain generators with `|index| <= equation_bound` at
//!   interior keys. The remaining coordinates are boundary data that the
//!   truncated equations do not reach.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{koszul, Generator, Kind, Parity, StructureConstants, TwistedN2};
use crate::error::{Error, Result};
use crate::linear::{Key2, Tensor2};
use crate::linsolve::{self, dot, Echelon, SparseVec};
use crate::scalar::{HalfInt, Rational};
use crate::tensor::act2_basis_into;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DerivationSpec {
    pub parity: Parity,
    pub degree: HalfInt,
    pub domain_bound: u32,
    pub target_bound: u32,
    pub equation_bound: u32,
}

impl DerivationSpec {
    pub fn new(
        parity: Parity,
        degree: HalfInt,
        domain_bound: u32,
        target_bound: u32,
        equation_bound: u32,
    ) -> Result<Self> {
        let spec = DerivationSpec { parity, degree, domain_bound, target_bound, equation_bound };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.equation_bound == 0 || self.domain_bound == 0 || self.target_bound == 0 {
            return Err(Error::Window("bounds must be positive".into()));
        }
        // [x, y] of two equation generators must stay inside the domain
        if 2 * self.equation_bound > self.domain_bound {
            return Err(Error::Window(format!(
                "equation bound {} needs domain bound >= {}",
                self.equation_bound,
                2 * self.equation_bound
            )));
        }
        if self.target_bound < self.equation_bound {
            return Err(Error::Window(format!(
                "target bound {} leaves no interior band for equation bound {}",
                self.target_bound, self.equation_bound
            )));
        }
        Ok(())
    }

    pub fn domain(&self) -> Vec<Generator> {
        Generator::window(HalfInt::int(self.domain_bound as i64))
    }

    pub fn equation_generators(&self) -> Vec<Generator> {
        Generator::window(HalfInt::int(self.equation_bound as i64))
    }

    pub fn interior_bound(&self) -> HalfInt {
        HalfInt::int((self.target_bound - self.equation_bound) as i64)
    }

    pub fn is_interior(&self, key: &Key2) -> bool {
        let b = self.interior_bound();
        key.0.index.abs() <= b && key.1.index.abs() <= b
    }

    /// Unknown slots of `d(x)`: keys of 𝓥_{degree + deg x} with parity `δ + [x]`.
    pub fn target_keys(&self, x: &Generator) -> Vec<Key2> {
        graded_keys(
            self.degree + x.degree(),
            self.parity + x.parity(),
            HalfInt::int(self.target_bound as i64),
        )
    }

    fn is_observed(&self, x: &Generator, key: &Key2) -> bool {
        x.index.abs() <= HalfInt::int(self.equation_bound as i64) && self.is_interior(key)
    }
}

impl fmt::Display for DerivationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parity={} degree={} domain={} target={} eq={}",
            self.parity, self.degree, self.domain_bound, self.target_bound, self.equation_bound
        )
    }
}

/// Canonical basis keys `a⊗b` of 𝓥 with `deg a + deg b = degree`, given
/// total parity, and both `|index| <= bound`.
pub fn graded_keys(degree: HalfInt, parity: Parity, bound: HalfInt) -> Vec<Key2> {
    let mut keys = Vec::new();
    for a in Generator::window(bound) {
        for kind in Kind::ALL {
            if kind.parity() + a.parity() != parity {
                continue;
            }
            let idx = degree - a.index;
            if idx.abs() > bound {
                continue;
            }
            if let Some(b) = Generator::with_index(kind, idx) {
                keys.push((a, b));
            }
        }
    }
    keys.sort();
    keys
}

/// Coefficient-matching system for derivations on a window. The right-hand
/// side is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub spec: DerivationSpec,
    /// Column `k` is the coefficient of `unknowns[k].1` in `d(unknowns[k].0)`.
    pub unknowns: Vec<(Generator, Key2)>,
    pub rows: Vec<SparseVec>,
    /// `(x, y, key)`: the row compares coefficients of `key` in the rule for `(x, y)`.
    pub row_labels: Vec<(Generator, Generator, Key2)>,
    index: HashMap<(Generator, Key2), usize>,
}

impl LinearSystem {
    pub fn num_unknowns(&self) -> usize {
        self.unknowns.len()
    }

    pub fn column(&self, x: &Generator, key: &Key2) -> Option<usize> {
        self.index.get(&(*x, *key)).copied()
    }

    /// `true` when `v` satisfies every row exactly.
    pub fn is_solution(&self, v: &[(usize, Rational)]) -> bool {
        self.rows.iter().all(|r| dot(r, v).is_zero())
    }

    /// The value `d(x)` encoded by a solution vector.
    pub fn evaluate(&self, v: &[(usize, Rational)], x: &Generator) -> Tensor2 {
        v.iter()
            .filter(|(c, _)| self.unknowns[*c].0 == *x)
            .map(|(c, val)| (self.unknowns[*c].1, val.clone()))
            .collect()
    }

    /// `d(x) = ...` lines for every domain generator with nonzero image.
    pub fn describe(&self, v: &[(usize, Rational)]) -> String {
        let mut out = String::new();
        for x in self.spec.domain() {
            let t = self.evaluate(v, &x);
            if !t.is_zero() {
                out.push_str(&format!("d({x}) = {t}\n"));
            }
        }
        out
    }

    fn observed_columns(&self) -> Vec<bool> {
        self.unknowns.iter().map(|(x, k)| self.spec.is_observed(x, k)).collect()
    }
}

/// Builds the derivation system. Rows come in canonical pair order
/// (`x <= y`), then canonical interior-key order; every interior key of
/// the target graded piece gets a row, even if that row is empty.
pub fn build_derivation_system(spec: &DerivationSpec) -> Result<LinearSystem> {
    spec.validate()?;
    let mut unknowns = Vec::new();
    let mut index = HashMap::new();
    let mut slots: HashMap<Generator, Vec<(Key2, usize)>> = HashMap::new();
    for x in spec.domain() {
        let mut mine = Vec::new();
        for key in spec.target_keys(&x) {
            index.insert((x, key), unknowns.len());
            mine.push((key, unknowns.len()));
            unknowns.push((x, key));
        }
        slots.insert(x, mine);
    }

    let eq_gens = spec.equation_generators();
    let mut rows = Vec::new();
    let mut row_labels = Vec::new();
    for (i, x) in eq_gens.iter().enumerate() {
        for y in &eq_gens[i..] {
            // key -> linear form in the unknowns
            let mut expr: HashMap<Key2, Vec<(usize, Rational)>> = HashMap::new();
            if let Some((c, z)) = TwistedN2.bracket_term(x, y) {
                for (key, col) in &slots[&z] {
                    expr.entry(*key).or_default().push((*col, c.clone()));
                }
            }
            let sx = -koszul(spec.parity, x.parity());
            let sy = koszul(y.parity(), spec.parity + x.parity());
            for (actor, target, sign) in [(x, y, &sx), (y, x, &sy)] {
                for (key, col) in &slots[target] {
                    let mut moved = Tensor2::zero();
                    act2_basis_into(actor, key, sign, &mut moved);
                    for (k, c) in &moved {
                        expr.entry(*k).or_default().push((*col, c.clone()));
                    }
                }
            }
            let target_degree = spec.degree + x.degree() + y.degree();
            let target_parity = spec.parity + x.parity() + y.parity();
            let bound = spec.interior_bound();
            for key in graded_keys(target_degree, target_parity, bound) {
                let row = expr.remove(&key).map(linsolve::normalize).unwrap_or_default();
                rows.push(row);
                row_labels.push((*x, *y, key));
            }
        }
    }
    Ok(LinearSystem { spec: *spec, unknowns, rows, row_labels, index })
}

/// Exact basis of a subspace of ℚ^n, in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub ambient: usize,
    pub basis: Vec<SparseVec>,
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn solve_exact(sys: &LinearSystem) -> SolutionSpace {
    SolutionSpace {
        ambient: sys.num_unknowns(),
        basis: linsolve::kernel(&sys.rows, sys.num_unknowns()),
    }
}

/// Unknown-vector of the inner derivation `x ↦ (-1)^{[u][x]} x∗u`, read on
/// the window's unknown slots. `u` must be homogeneous of the spec's parity
/// and degree.
pub fn inner_vector(sys: &LinearSystem, u: &Tensor2) -> Result<SparseVec> {
    let spec = &sys.spec;
    if u.is_zero() {
        return Ok(Vec::new());
    }
    if u.parity() != Some(spec.parity) || u.degree() != Some(spec.degree) {
        return Err(Error::Homogeneity(format!(
            "u = {u} is not homogeneous of parity {} and degree {}",
            spec.parity, spec.degree
        )));
    }
    let mut out = Vec::new();
    for x in spec.domain() {
        let mut image = Tensor2::zero();
        let sign = koszul(spec.parity, x.parity());
        for (key, c) in u {
            act2_basis_into(&x, key, &(c * &sign), &mut image);
        }
        for (key, c) in &image {
            if let Some(col) = sys.column(&x, key) {
                out.push((col, c.clone()));
            }
        }
    }
    Ok(linsolve::normalize(out))
}

/// Span of the inner derivations `u_inn` for `u` ranging over the basis of
/// 𝓥_degree (given parity, factors within the target bound).
pub fn inner_space(spec: &DerivationSpec) -> Result<SolutionSpace> {
    let sys = build_derivation_system(spec)?;
    Ok(inner_space_for(&sys))
}

fn inner_generators(sys: &LinearSystem) -> Vec<SparseVec> {
    let spec = &sys.spec;
    graded_keys(spec.degree, spec.parity, HalfInt::int(spec.target_bound as i64))
        .into_iter()
        .map(|k| inner_vector(sys, &Tensor2::basis(k)).expect("basis keys are homogeneous"))
        .collect()
}

pub fn inner_space_for(sys: &LinearSystem) -> SolutionSpace {
    SolutionSpace {
        ambient: sys.num_unknowns(),
        basis: linsolve::canonical_basis(inner_generators(sys), sys.num_unknowns()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Report {
    pub spec: DerivationSpec,
    pub unknowns: usize,
    pub rows: usize,
    pub der_dim: usize,
    pub inn_dim: usize,
    /// Rank of derivations on the observed coordinates.
    pub observed_der_rank: usize,
    /// Rank of inner derivations on the observed coordinates.
    pub observed_inn_rank: usize,
    pub quotient_dim: usize,
    /// Indices into the derivation basis of vectors outside the inner span.
    pub residuals: Vec<usize>,
    /// Whether every derivation basis vector passes the L[0] anchor check;
    /// `None` in degree zero.
    pub claim1: Option<bool>,
    pub derivations: SolutionSpace,
}

impl H1Report {
    pub fn is_clean(&self) -> bool {
        self.quotient_dim == 0 && self.claim1 != Some(false)
    }

    /// Flat `key=value` record, one field per line.
    pub fn to_record(&self) -> String {
        let s = &self.spec;
        let claim1 = match self.claim1 {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "n/a",
        };
        format!(
            "parity={}\ndegree={}\ndomain={}\ntarget={}\neq={}\nunknowns={}\nrows={}\n\
             der_dim={}\ninn_dim={}\nobserved_der_rank={}\nobserved_inn_rank={}\n\
             quotient_dim={}\nresiduals={}\nclaim1={}\n",
            s.parity,
            s.degree,
            s.domain_bound,
            s.target_bound,
            s.equation_bound,
            self.unknowns,
            self.rows,
            self.der_dim,
            self.inn_dim,
            self.observed_der_rank,
            self.observed_inn_rank,
            self.quotient_dim,
            self.residuals.len(),
            claim1
        )
    }
}

fn project(v: &[(usize, Rational)], keep: &[bool]) -> SparseVec {
    v.iter().filter(|(c, _)| keep[*c]).cloned().collect()
}

/// Derivations modulo inner derivations on the observed coordinates.
pub fn h1_report(spec: &DerivationSpec) -> Result<H1Report> {
    Ok(report_for_system(&build_derivation_system(spec)?))
}

/// [`h1_report`] for an already built (possibly modified) system.
pub fn report_for_system(sys: &LinearSystem) -> H1Report {
    let spec = &sys.spec;
    let der = solve_exact(sys);
    let inner = inner_generators(sys);
    let inn_dim = linsolve::rank(&inner, sys.num_unknowns());

    let keep = sys.observed_columns();
    let mut inner_obs = Echelon::new(sys.num_unknowns());
    for v in &inner {
        inner_obs.insert(project(v, &keep));
    }
    let observed_inn_rank = inner_obs.rank();

    let mut stacked = inner_obs.clone();
    let mut der_obs = Echelon::new(sys.num_unknowns());
    let mut residuals = Vec::new();
    for (k, v) in der.basis.iter().enumerate() {
        let p = project(v, &keep);
        if !inner_obs.contains(p.clone()) {
            residuals.push(k);
        }
        der_obs.insert(p.clone());
        stacked.insert(p);
    }
    let quotient_dim = stacked.rank() - observed_inn_rank;

    let claim1 = if spec.degree == HalfInt::ZERO {
        None
    } else {
        Some(der.basis.iter().all(|v| claim1_holds(sys, v)))
    };

    H1Report {
        spec: *spec,
        unknowns: sys.num_unknowns(),
        rows: sys.rows.len(),
        der_dim: der.dimension(),
        inn_dim,
        observed_der_rank: der_obs.rank(),
        observed_inn_rank,
        quotient_dim,
        residuals,
        claim1,
        derivations: der,
    }
}

fn claim1_holds(sys: &LinearSystem, v: &[(usize, Rational)]) -> bool {
    let spec = &sys.spec;
    let d_l0 = sys.evaluate(v, &Generator::l(0));
    let u = d_l0.scale(&-spec.degree.to_rational().recip());
    let reconstructed = inner_vector(sys, &u).expect("d(L[0]) lies in the degree piece");
    let keep = sys.observed_columns();
    project(v, &keep) == project(&reconstructed, &keep)
}

/// Rebuilds `u = -(1/degree)·d(L[0])` from a solution vector and checks the
/// solution equals `u_inn` on every observed coordinate.
pub fn check_claim1(sys: &LinearSystem, solution: &[(usize, Rational)]) -> Result<bool> {
    if sys.spec.degree == HalfInt::ZERO {
        return Err(Error::DegreeZero);
    }
    Ok(claim1_holds(sys, solution))
}
