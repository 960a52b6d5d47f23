//! The inverse-system engine.
//!
//! An `InverseSystem` is a list of polynomial generators together with the
//! span of all their iterated partial derivatives (the derivative closure),
//! held as a reduced echelon basis with deg-lex pivots. Everything else is
//! read off that closure: Hilbert functions, socle dimension and level type,
//! truncated apolar ideals with minimal generators, the finite-dimensional
//! multiplication model of the quotient algebra, and the filtration tables
//! of the associated graded ring.

use crate::exactlin::{LinError, Rational, RationalMatrix, Subspace};
use crate::hvectors::HVector;
use crate::multipoly::{FrameMode, Monomial, MonomialFrame, Poly, PolyError};
use num::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApolarError {
    #[error("inverse system needs at least one generator")]
    EmptyGeneratorList,
    #[error("generator {0} is the zero polynomial")]
    ZeroGenerator(usize),
    #[error("generator {0} has {1} variables, expected {2}")]
    VariableCountMismatch(usize, usize, usize),
    #[error("generators have different variable counts: {0} vs {1}")]
    MixedVariableCounts(usize, usize),
    #[error("operation requires equal-degree generators with linearly independent leading forms")]
    NotLevelPresentation,
    #[error("truncation of a system of constants is empty")]
    AllGeneratorsConstant,
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Reduced echelon span of sparse polynomials. Pivots are leading monomials
/// in deg-lex order; every pivot monomial occurs in exactly one row, with
/// coefficient 1. Rows are kept sorted by descending pivot.
#[derive(Clone)]
pub(crate) struct PolySpan {
    num_vars: usize,
    rows: Vec<SpanRow>,
}

#[derive(Clone)]
struct SpanRow {
    pivot: Monomial,
    poly: Poly,
}

impl PolySpan {
    pub fn new(num_vars: usize) -> Self {
        PolySpan {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduce `p` against the span. A single pass in descending pivot
    /// order suffices because rows are mutually reduced and subtracting a row
    /// only alters monomials at or below its pivot.
    pub fn reduce(&self, mut p: Poly) -> Poly {
        for row in &self.rows {
            if let Some(c) = p.coeff(&row.pivot).cloned() {
                p.sub_scaled(&c, &row.poly);
            }
        }
        p
    }

    /// Insert `p`; returns the new normalized row when the span grows.
    pub fn insert(&mut self, p: Poly) -> Option<Poly> {
        debug_assert_eq!(p.num_vars(), self.num_vars);
        let reduced = self.reduce(p);
        if reduced.is_zero() {
            return None;
        }
        let pivot = reduced.leading_monomial().cloned().expect("nonzero");
        let lead = reduced.coeff(&pivot).cloned().expect("leading coeff");
        let normalized = reduced.scale(&lead.recip());
        for row in &mut self.rows {
            if let Some(c) = row.poly.coeff(&pivot).cloned() {
                row.poly.sub_scaled(&c, &normalized);
            }
        }
        let at = self
            .rows
            .partition_point(|row| row.pivot > pivot);
        self.rows.insert(
            at,
            SpanRow {
                pivot: pivot.clone(),
                poly: normalized.clone(),
            },
        );
        Some(normalized)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p.clone()).is_zero()
    }

    pub fn row_polys(&self) -> impl Iterator<Item = &Poly> {
        self.rows.iter().map(|r| &r.poly)
    }

    fn pivot_degree_counts(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for row in &self.rows {
            *counts.entry(row.pivot.degree()).or_insert(0usize) += 1;
        }
        counts
    }
}

/// Generators plus the graded slices of their derivative closure.
#[derive(Clone)]
pub struct InverseSystem {
    num_vars: usize,
    generators: Vec<Poly>,
    socle_degree: u32,
    closure: PolySpan,
}

impl std::fmt::Debug for InverseSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InverseSystem")
            .field("num_vars", &self.num_vars)
            .field("generators", &self.generators)
            .field("socle_degree", &self.socle_degree)
            .field("closure_dim", &self.closure.dim())
            .finish()
    }
}

impl InverseSystem {
    /// Span the generators and all their iterated partial derivatives.
    pub fn build(generators: Vec<Poly>, num_vars: usize) -> Result<Self, ApolarError> {
        if generators.is_empty() {
            return Err(ApolarError::EmptyGeneratorList);
        }
        let mut socle_degree = 0;
        for (i, g) in generators.iter().enumerate() {
            if g.num_vars() != num_vars {
                return Err(ApolarError::VariableCountMismatch(
                    i,
                    g.num_vars(),
                    num_vars,
                ));
            }
            match g.degree() {
                None => return Err(ApolarError::ZeroGenerator(i)),
                Some(d) => socle_degree = socle_degree.max(d),
            }
        }
        let mut closure = PolySpan::new(num_vars);
        let mut queue: Vec<Poly> = generators.clone();
        while let Some(p) = queue.pop() {
            if let Some(row) = closure.insert(p) {
                for i in 0..num_vars {
                    let d = row.derivative(i);
                    if !d.is_zero() {
                        queue.push(d);
                    }
                }
            }
        }
        Ok(InverseSystem {
            num_vars,
            generators,
            socle_degree,
            closure,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    /// Dimension of the full derivative closure (the length of the algebra).
    pub fn closure_dim(&self) -> usize {
        self.closure.dim()
    }

    /// HF(i) = dim of the degree-i slice of the closure, i = 0..=s.
    pub fn hilbert_function(&self) -> HVector {
        let counts = self.closure.pivot_degree_counts();
        let dims: Vec<usize> = (0..=self.socle_degree)
            .map(|d| counts.get(&d).copied().unwrap_or(0))
            .collect();
        HVector::new(dims).expect("closure slices always give a valid h-vector")
    }

    /// Homogeneous representatives of the degree-d slice of the closure:
    /// rows with a degree-d pivot project onto independent degree-d forms.
    pub fn degree_slice(&self, d: u32) -> Vec<Poly> {
        self.closure
            .rows
            .iter()
            .filter(|r| r.pivot.degree() == d)
            .map(|r| r.poly.homogeneous_component(d))
            .collect()
    }

    /// The degree-d slice as a subspace over the exact-degree-d frame.
    pub fn slice_subspace(&self, d: u32) -> Subspace {
        let frame = MonomialFrame::new(self.num_vars, d, FrameMode::Exact);
        let vectors = self
            .degree_slice(d)
            .iter()
            .map(|p| p.coeff_vector(&frame).expect("slice stays in frame"))
            .collect();
        Subspace::from_vectors(frame.len(), vectors)
    }

    /// The whole closure as a subspace of the polynomials of degree <= bound.
    pub fn closure_subspace(&self, bound: u32) -> Subspace {
        let frame = MonomialFrame::new(self.num_vars, bound, FrameMode::UpTo);
        let vectors = self
            .closure
            .row_polys()
            .map(|p| p.coeff_vector(&frame).expect("closure stays in frame"))
            .collect();
        Subspace::from_vectors(frame.len(), vectors)
    }

    /// dim Soc(A) = dim V - dim(sum of the images of the partial
    /// derivatives on V), the Matlis dual of multiplication by the
    /// variables.
    pub fn socle_dimension(&self) -> usize {
        let mut derived = PolySpan::new(self.num_vars);
        for p in self.closure.row_polys() {
            for i in 0..self.num_vars {
                let d = p.derivative(i);
                if !d.is_zero() {
                    derived.insert(d);
                }
            }
        }
        self.closure.dim() - derived.dim()
    }

    /// Level test with type. The algebra is level exactly when the socle is
    /// concentrated in top degree, i.e. socle dimension equals HF(s); the
    /// result is cross-checked against the structural criterion (a minimal
    /// generating set of equal degree s with independent leading forms).
    pub fn is_level(&self) -> (bool, usize) {
        let hf = self.hilbert_function();
        let socle = self.socle_dimension();
        let level = socle == hf.last();
        debug_assert_eq!(
            level,
            self.structural_level_check(),
            "socle-count and structural level tests disagree"
        );
        (level, socle)
    }

    /// Structural criterion: after dropping redundant generators, all
    /// remaining ones have degree s and independent leading forms.
    pub(crate) fn structural_level_check(&self) -> bool {
        let minimal = self.minimal_generators();
        if minimal
            .iter()
            .any(|g| g.degree() != Some(self.socle_degree))
        {
            return false;
        }
        let forms: Vec<Poly> = minimal
            .iter()
            .map(|g| g.leading_form().expect("nonzero"))
            .collect();
        leading_forms_independent(&forms, self.num_vars, self.socle_degree)
    }

    /// Generators with every redundant one removed (a generator is redundant
    /// when it lies in the module spanned by the others). Greedy in input
    /// order, so the result is deterministic.
    pub fn minimal_generators(&self) -> Vec<Poly> {
        let mut kept: Vec<Poly> = self.generators.clone();
        let mut j = 0;
        while j < kept.len() {
            if kept.len() == 1 {
                break;
            }
            let others: Vec<Poly> = kept
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, g)| g.clone())
                .collect();
            let span = Self::build(others, self.num_vars).expect("nonempty");
            if span.closure.contains(&kept[j]) {
                kept.remove(j);
            } else {
                j += 1;
            }
        }
        kept
    }

    /// The inverse system generated by the leading forms (the inverse system
    /// of the unique level graded quotient of the associated graded ring).
    /// Redundant generators are dropped first; the remaining ones must have
    /// equal degree and independent leading forms, which is exactly the
    /// level case.
    pub fn leading_form_system(&self) -> Result<InverseSystem, ApolarError> {
        let minimal = self.minimal_generators();
        if minimal
            .iter()
            .any(|g| g.degree() != Some(self.socle_degree))
        {
            return Err(ApolarError::NotLevelPresentation);
        }
        let forms: Vec<Poly> = minimal
            .iter()
            .map(|g| g.leading_form().expect("nonzero"))
            .collect();
        if !leading_forms_independent(&forms, self.num_vars, self.socle_degree) {
            return Err(ApolarError::NotLevelPresentation);
        }
        Self::build(forms, self.num_vars)
    }

    /// Whether the associated graded ring is itself level: true exactly when
    /// the Hilbert functions of the system and of its leading-form system
    /// agree entrywise.
    pub fn graded_ring_is_level(&self) -> Result<bool, ApolarError> {
        let q0 = self.leading_form_system()?;
        Ok(self.hilbert_function() == q0.hilbert_function())
    }

    /// The inverse system generated by all first partials of the generators;
    /// drops the socle degree by one.
    pub fn truncation(&self) -> Result<InverseSystem, ApolarError> {
        let mut gens = Vec::new();
        for g in &self.generators {
            for i in 0..self.num_vars {
                let d = g.derivative(i);
                if !d.is_zero() {
                    gens.push(d);
                }
            }
        }
        if gens.is_empty() {
            return Err(ApolarError::AllGeneratorsConstant);
        }
        Self::build(gens, self.num_vars)
    }

    /// Matrices of multiplication by the variables on the algebra
    /// A = R / Ann, realized as the transposes of the partial derivatives
    /// acting on the closure basis.
    pub fn algebra_model(&self) -> AlgebraModel {
        let n = self.closure.dim();
        let mut ops = Vec::with_capacity(self.num_vars);
        for i in 0..self.num_vars {
            let mut derivative_matrix = RationalMatrix::zeros(n, n);
            for (k, row) in self.closure.rows.iter().enumerate() {
                let mut p = row.poly.derivative(i);
                for (j, other) in self.closure.rows.iter().enumerate() {
                    if let Some(c) = p.coeff(&other.pivot).cloned() {
                        *derivative_matrix.at_mut(j, k) = c.clone();
                        p.sub_scaled(&c, &other.poly);
                    }
                }
                debug_assert!(p.is_zero(), "closure is not derivative-stable");
            }
            ops.push(derivative_matrix.transpose());
        }
        AlgebraModel {
            dim: n,
            mult_ops: ops,
        }
    }

    /// Exact equality of the two modules as subspaces of the polynomial
    /// ring (a module equals its derivative closure, so this decides
    /// R-module equality).
    pub fn module_equal(&self, other: &InverseSystem) -> Result<bool, ApolarError> {
        if self.num_vars != other.num_vars {
            return Err(ApolarError::MixedVariableCounts(
                self.num_vars,
                other.num_vars,
            ));
        }
        let bound = self.socle_degree.max(other.socle_degree);
        Ok(self.closure_subspace(bound) == other.closure_subspace(bound))
    }

    /// Per-degree slices of the apolar ideal Ann(M) together with a minimal
    /// generating set. Degree d holds a basis of the polynomials of degree
    /// <= d killed by contraction against every generator; degree s+1
    /// completes the ideal since the (s+1)-st power of the maximal ideal
    /// annihilates everything.
    pub fn apolar_ideal(&self) -> ApolarIdeal {
        let bound = self.socle_degree + 1;
        let frame = MonomialFrame::new(self.num_vars, bound, FrameMode::UpTo);

        // Matrix of g -> (g . f_1, ..., g . f_tau), columns indexed by the
        // frame; rows are created on demand for the (generator, monomial)
        // coordinates that actually occur.
        let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let mut columns: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(frame.len());
        for mu in frame.iter() {
            let op = Poly::monomial(self.num_vars, mu.clone());
            let mut col = Vec::new();
            for (j, f) in self.generators.iter().enumerate() {
                let image = Poly::contract(&op, f);
                for (nu, c) in image.terms() {
                    let next = row_index.len();
                    let r = *row_index.entry((j, nu.clone())).or_insert(next);
                    col.push((r, c.clone()));
                }
            }
            columns.push(col);
        }
        let nrows = row_index.len();
        let mut matrix = RationalMatrix::zeros(nrows, frame.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                *matrix.at_mut(*r, c) = v.clone();
            }
        }

        let mut per_degree = Vec::with_capacity(bound as usize + 1);
        for d in 0..=bound {
            let prefix = frame.prefix_len_below(d + 1);
            let sub = RationalMatrix::from_fn(nrows, prefix, |i, j| matrix.at(i, j).clone());
            per_degree.push(sub.kernel_basis());
        }

        let minimal_generators = self.extract_minimal_ideal_generators(&frame, &per_degree);
        ApolarIdeal {
            socle_degree: self.socle_degree,
            frame,
            per_degree,
            minimal_generators,
        }
    }

    /// Pick ideal generators degree by degree, skipping whatever already
    /// lies in (maximal ideal) * (ideal) + span of earlier picks; by
    /// Nakayama the result is a minimal generating set.
    fn extract_minimal_ideal_generators(
        &self,
        frame: &MonomialFrame,
        per_degree: &[Subspace],
    ) -> Vec<Poly> {
        let bound = self.socle_degree + 1;
        let full = per_degree
            .last()
            .expect("per-degree slices cover 0..=s+1");
        let mut covered = PolySpan::new(self.num_vars);
        for r in 0..full.dim() {
            let g = poly_from_prefix_vector(frame, full.basis().row(r));
            for i in 0..self.num_vars {
                let shifted = g
                    .mul(&Poly::variable(self.num_vars, i))
                    .truncate_above(bound);
                if !shifted.is_zero() {
                    covered.insert(shifted);
                }
            }
        }
        let ideal_dim = full.dim();
        let multiple_dim = covered.dim();
        let mut chosen = Vec::new();
        for slice in per_degree {
            for r in 0..slice.dim() {
                let g = poly_from_prefix_vector(frame, slice.basis().row(r));
                if covered.insert(g.clone()).is_some() {
                    chosen.push(g);
                }
            }
        }
        debug_assert_eq!(chosen.len(), ideal_dim - multiple_dim);
        chosen
    }
}

fn poly_from_prefix_vector(frame: &MonomialFrame, coords: &[Rational]) -> Poly {
    let mut p = Poly::zero(frame.num_vars());
    for (i, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            p.add_term(frame.monomial(i).clone(), c.clone());
        }
    }
    p
}

fn leading_forms_independent(forms: &[Poly], num_vars: usize, degree: u32) -> bool {
    let frame = MonomialFrame::new(num_vars, degree, FrameMode::Exact);
    let vectors: Vec<Vec<Rational>> = forms
        .iter()
        .map(|f| f.coeff_vector(&frame).expect("forms are homogeneous"))
        .collect();
    Subspace::from_vectors(frame.len(), vectors).dim() == forms.len()
}

/// Truncated apolar ideal: bases of the degree-bounded slices plus minimal
/// generators.
pub struct ApolarIdeal {
    socle_degree: u32,
    frame: MonomialFrame,
    per_degree: Vec<Subspace>,
    minimal_generators: Vec<Poly>,
}

impl ApolarIdeal {
    /// dim of { g of degree <= d : g kills every generator }.
    pub fn slice_dim(&self, d: u32) -> usize {
        self.per_degree[d as usize].dim()
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    pub fn slice(&self, d: u32) -> &Subspace {
        &self.per_degree[d as usize]
    }

    pub fn slice_polys(&self, d: u32) -> Vec<Poly> {
        let s = &self.per_degree[d as usize];
        (0..s.dim())
            .map(|r| poly_from_prefix_vector(&self.frame, s.basis().row(r)))
            .collect()
    }

    pub fn minimal_generators(&self) -> &[Poly] {
        &self.minimal_generators
    }

    /// Codimension bookkeeping: dim of P_{<=d} minus the ideal slice, which
    /// must reproduce the partial sums of the Hilbert function.
    pub fn quotient_dim_upto(&self, d: u32) -> usize {
        self.frame.prefix_len_below(d + 1) - self.slice_dim(d)
    }
}

/// Multiplication operators of A = R/Ann on a fixed basis; X_i is the
/// transpose of the i-th partial derivative on the derivative closure.
pub struct AlgebraModel {
    dim: usize,
    mult_ops: Vec<RationalMatrix>,
}

impl AlgebraModel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vars(&self) -> usize {
        self.mult_ops.len()
    }

    pub fn mult_op(&self, i: usize) -> &RationalMatrix {
        &self.mult_ops[i]
    }

    /// Subspaces m^k A for k = 0..=last, computed by repeatedly applying the
    /// multiplication operators; the union of images over all degree-k
    /// monomial operators is reached after k rounds.
    pub fn power_filtration(&self, last: u32) -> Vec<Subspace> {
        let mut out = Vec::with_capacity(last as usize + 1);
        out.push(Subspace::full(self.dim));
        for _ in 1..=last {
            let vectors = {
                let prev = out.last().expect("nonempty");
                let mut vs = Vec::new();
                for op in &self.mult_ops {
                    for r in 0..prev.dim() {
                        vs.push(op.col_vector_mul(prev.basis().row(r)));
                    }
                }
                vs
            };
            out.push(Subspace::from_vectors(self.dim, vectors));
        }
        out
    }

    /// Subspaces (0 : m^k) for k = 0..=last; each step takes the common
    /// preimage of the previous annihilator under every multiplication
    /// operator, which equals the intersection of the kernels of all
    /// degree-k monomial operators.
    pub fn annihilator_filtration(&self, last: u32) -> Vec<Subspace> {
        let mut out = Vec::with_capacity(last as usize + 1);
        out.push(Subspace::zero(self.dim));
        for _ in 1..=last {
            let stacked = {
                let k_prev = out.last().expect("nonempty").kernel_description();
                let mut acc = RationalMatrix::zeros(0, self.dim);
                for op in &self.mult_ops {
                    acc = acc.stack_below(&k_prev.matmul(op));
                }
                acc
            };
            out.push(stacked.kernel_basis());
        }
        out
    }

    /// Hilbert function read from the power filtration.
    pub fn hilbert_function(&self, socle_degree: u32) -> Vec<usize> {
        let powers = self.power_filtration(socle_degree + 1);
        (0..=socle_degree as usize)
            .map(|i| powers[i].dim() - powers[i + 1].dim())
            .collect()
    }

    /// Socle dimension: kernel of the stacked multiplication operators.
    pub fn socle_dimension(&self) -> usize {
        let mut stacked = RationalMatrix::zeros(0, self.dim);
        for op in &self.mult_ops {
            stacked = stacked.stack_below(op);
        }
        stacked.kernel_basis().dim()
    }
}

/// The filtration tables of the associated graded ring: c[a][i] is the
/// dimension of the degree-i component of the a-th filtration ideal C(a),
/// and q[a][i] = c[a][i] - c[a+1][i] the dimension of the layer Q(a) in
/// degree i.
pub struct QDecomposition {
    socle_degree: u32,
    c: Vec<Vec<usize>>,
    q: Vec<Vec<usize>>,
}

impl QDecomposition {
    /// Build from a multiplication model with the given socle degree.
    pub fn compute(model: &AlgebraModel, socle_degree: u32) -> Self {
        let s = socle_degree;
        let powers = model.power_filtration(s + 1);
        let annihilators = model.annihilator_filtration(s + 1);
        let ann = |e: i64| -> Subspace {
            if e <= 0 {
                Subspace::zero(model.dim())
            } else if e as u32 >= s + 1 {
                Subspace::full(model.dim())
            } else {
                annihilators[e as usize].clone()
            }
        };
        let mut c = Vec::with_capacity(s as usize + 2);
        for a in 0..=(s as i64 + 1) {
            let mut row = Vec::with_capacity(s as usize + 1);
            for i in 0..=(s as i64) {
                let e = s as i64 + 1 - a - i;
                let colon = ann(e);
                let hi = colon
                    .intersect(&powers[i as usize])
                    .expect("same ambient")
                    .dim();
                let lo = colon
                    .intersect(&powers[i as usize + 1])
                    .expect("same ambient")
                    .dim();
                row.push(hi - lo);
            }
            c.push(row);
        }
        let q = (0..=s as usize)
            .map(|a| {
                (0..=s as usize)
                    .map(|i| c[a][i] - c[a + 1][i])
                    .collect::<Vec<_>>()
            })
            .collect();
        QDecomposition {
            socle_degree: s,
            c,
            q,
        }
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    /// c[a][i], defined for a = 0..=s+1 and i = 0..=s.
    pub fn c(&self, a: usize, i: usize) -> usize {
        self.c[a][i]
    }

    /// q[a][i], defined for a = 0..=s and i = 0..=s.
    pub fn q(&self, a: usize, i: usize) -> usize {
        self.q[a][i]
    }

    pub fn c_table(&self) -> &[Vec<usize>] {
        &self.c
    }

    pub fn q_table(&self) -> &[Vec<usize>] {
        &self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::multipoly::parse;

    fn sys(gens: &[&str], m: usize) -> InverseSystem {
        let polys = gens.iter().map(|g| parse(g, m).unwrap()).collect();
        InverseSystem::build(polys, m).unwrap()
    }

    fn hf(is: &InverseSystem) -> Vec<usize> {
        is.hilbert_function().entries().to_vec()
    }

    #[test]
    fn closure_dims_for_two_cubes() {
        let is = sys(&["x1^3", "x2^3"], 2);
        assert_eq!(hf(&is), vec![1, 2, 2, 2]);
        assert_eq!(is.closure_dim(), 7);
    }

    #[test]
    fn closure_of_single_variable() {
        let is = sys(&["x1"], 1);
        assert_eq!(hf(&is), vec![1, 1]);
    }

    #[test]
    fn closure_of_mixed_monomial() {
        // derivatives of x1^2 x2 span {x1 x2, x1^2; x1, x2; 1} by hand
        let is = sys(&["x1^2 x2"], 2);
        assert_eq!(hf(&is), vec![1, 2, 2, 1]);
    }

    #[test]
    fn hilbert_function_of_section_three_generators() {
        let gens = ["x1^3 + x4^2", "x1^2 x2", "x1 x2^2", "x3^3", "x1 x3^2", "x2^3"];
        let is = sys(&gens, 4);
        assert_eq!(hf(&is), vec![1, 4, 5, 6]);
        let leading = is.leading_form_system().unwrap();
        assert_eq!(hf(&leading), vec![1, 3, 5, 6]);
    }

    #[test]
    fn socle_dimensions() {
        assert_eq!(sys(&["x1^3", "x2^3"], 2).socle_dimension(), 2);
        assert_eq!(sys(&["x1^2 x2 + x2^3"], 2).socle_dimension(), 1);
        // socle splits across degrees 2 and 3 here
        assert_eq!(sys(&["x1^3", "x2^2"], 2).socle_dimension(), 2);
    }

    #[test]
    fn level_tests() {
        assert_eq!(sys(&["x1^3", "x2^3"], 2).is_level(), (true, 2));
        assert_eq!(sys(&["x1^3", "x2^2"], 2).is_level().0, false);
        let gens = ["x1^3 + x4^2", "x1^2 x2", "x1 x2^2", "x3^3", "x1 x3^2", "x2^3"];
        assert_eq!(sys(&gens, 4).is_level(), (true, 6));
    }

    #[test]
    fn level_with_redundant_generator() {
        // x1^2 lies in the closure of x1^3, so the module is Gorenstein even
        // though the raw generator list looks degenerate.
        let is = sys(&["x1^3", "x1^3 + x1^2"], 1);
        assert_eq!(is.is_level(), (true, 1));
        assert_eq!(is.minimal_generators().len(), 1);
    }

    #[test]
    fn minimal_generators_drop_contained_closures() {
        let is = sys(&["x1^3", "x1^2", "x2^3"], 2);
        let min = is.minimal_generators();
        assert_eq!(min.len(), 2);
        assert_eq!(min[0], parse("x1^3", 2).unwrap());
        assert_eq!(min[1], parse("x2^3", 2).unwrap());
    }

    #[test]
    fn apolar_ideal_of_two_cubes() {
        let is = sys(&["x1^3", "x2^3"], 2);
        let ideal = is.apolar_ideal();
        let gens: Vec<String> = ideal
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(gens, vec!["x1 x2", "x1^4", "x2^4"]);
    }

    #[test]
    fn apolar_ideal_of_single_variable() {
        let is = sys(&["x1"], 1);
        let gens: Vec<String> = is
            .apolar_ideal()
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(gens, vec!["x1^2"]);
    }

    #[test]
    fn apolar_ideal_codimension_matches_length() {
        // generic-looking binary cubic: length check dim V = sum of HF
        let is = sys(&["x1^3 + 2 x1^2 x2 - x2^3"], 2);
        let ideal = is.apolar_ideal();
        let total: usize = hf(&is).iter().sum();
        assert_eq!(is.closure_dim(), total);
        assert_eq!(ideal.quotient_dim_upto(is.socle_degree() + 1), total);
        for d in 0..=is.socle_degree() {
            let partial: usize = hf(&is).iter().take(d as usize + 1).sum();
            assert_eq!(ideal.quotient_dim_upto(d), partial);
        }
    }

    #[test]
    fn algebra_model_single_square() {
        let is = sys(&["x1^2"], 1);
        let model = is.algebra_model();
        assert_eq!(model.dim(), 3);
        let x = model.mult_op(0);
        assert_eq!(x.matmul(x).matmul(x), RationalMatrix::zeros(3, 3));
        assert!(!x.matmul(x).is_zero());
    }

    #[test]
    fn algebra_model_of_mixed_product() {
        // k[x,y]/(x^2, y^2): X1 X2 nonzero, squares vanish
        let is = sys(&["x1 x2"], 2);
        let model = is.algebra_model();
        assert_eq!(model.dim(), 4);
        let x1 = model.mult_op(0);
        let x2 = model.mult_op(1);
        assert!(x1.matmul(x2) == x2.matmul(x1));
        assert!(!x1.matmul(x2).is_zero());
        assert!(x1.matmul(x1).is_zero());
        assert!(x2.matmul(x2).is_zero());
    }

    #[test]
    fn model_operators_commute_and_are_nilpotent() {
        let is = sys(&["x1^3 + x4^2", "x1^2 x2", "x2^3"], 4);
        let model = is.algebra_model();
        let s = is.socle_degree();
        for i in 0..model.num_vars() {
            for j in 0..model.num_vars() {
                assert_eq!(
                    model.mult_op(i).matmul(model.mult_op(j)),
                    model.mult_op(j).matmul(model.mult_op(i))
                );
            }
            let mut pow = RationalMatrix::identity(model.dim());
            for _ in 0..=s {
                pow = pow.matmul(model.mult_op(i));
            }
            assert!(pow.is_zero());
        }
        assert_eq!(model.hilbert_function(s), hf(&is));
        assert_eq!(model.socle_dimension(), is.socle_dimension());
    }

    #[test]
    fn q_decomposition_of_section_three_generators() {
        let gens = ["x1^3 + x4^2", "x1^2 x2", "x1 x2^2", "x3^3", "x1 x3^2", "x2^3"];
        let is = sys(&gens, 4);
        let model = is.algebra_model();
        let qd = QDecomposition::compute(&model, is.socle_degree());
        assert_eq!(qd.q(1, 1), 1);
        assert_eq!(qd.c(1, 1), 1);
        // degree-1 layer is the only nonzero part of C(1) when s = 3
        for i in [0usize, 2, 3] {
            assert_eq!(qd.c(1, i), 0);
        }
        // layers refine the Hilbert function
        let h = hf(&is);
        for i in 0..=3usize {
            let total: usize = (0..=3).map(|a| qd.q(a, i)).sum();
            assert_eq!(total, h[i]);
        }
    }

    #[test]
    fn q_decomposition_of_homogeneous_system_is_concentrated() {
        let is = sys(&["x1^3", "x2^3"], 2);
        let qd = QDecomposition::compute(&is.algebra_model(), 3);
        for a in 1..=3usize {
            for i in 0..=3usize {
                assert_eq!(qd.q(a, i), 0, "q[{a}][{i}]");
            }
        }
        let h = hf(&is);
        for i in 0..=3usize {
            assert_eq!(qd.q(0, i), h[i]);
        }
    }

    #[test]
    fn leading_form_system_examples() {
        let is = sys(&["x1^3 + x2^2", "x2^3"], 2);
        let q0 = is.leading_form_system().unwrap();
        assert_eq!(
            q0.generators().to_vec(),
            vec![parse("x1^3", 2).unwrap(), parse("x2^3", 2).unwrap()]
        );
        // homogeneous system: leading forms are the generators themselves
        let homog = sys(&["x1^3", "x2^3"], 2);
        assert!(homog
            .module_equal(&homog.leading_form_system().unwrap())
            .unwrap());
    }

    #[test]
    fn graded_level_flags() {
        assert!(sys(&["x1^3", "x2^3"], 2).graded_ring_is_level().unwrap());
        let gens = ["x1^3 + x4^2", "x1^2 x2", "x1 x2^2", "x3^3", "x1 x3^2", "x2^3"];
        assert!(!sys(&gens, 4).graded_ring_is_level().unwrap());
    }

    #[test]
    fn module_equality() {
        let a = sys(&["x1^3"], 1);
        assert!(a.module_equal(&a).unwrap());
        // x is a closure element of x1^3, so the tails coincide
        let b = sys(&["x1^3 + x1"], 1);
        assert!(a.module_equal(&b).unwrap());
        let c = sys(&["x2^3"], 2);
        let d = sys(&["x1^3"], 2);
        assert!(!d.module_equal(&c).unwrap());
    }

    #[test]
    fn module_equality_sees_unaligned_tails() {
        // same graded slices, different modules
        let a = sys(&["x1^3 + x2"], 2);
        let b = sys(&["x1^3"], 2);
        assert_eq!(hf(&a), hf(&b));
        assert!(!a.module_equal(&b).unwrap());
    }

    #[test]
    fn truncation_drops_socle_degree() {
        let is = sys(&["x1^2"], 1);
        let t = is.truncation().unwrap();
        assert_eq!(hf(&t), vec![1, 1]);
        let g = sys(&["x1^3 + x2^3"], 2);
        assert_eq!(hf(&g), vec![1, 2, 2, 1]);
        assert_eq!(hf(&g.truncation().unwrap()), vec![1, 2, 2]);
        let consts = InverseSystem::build(vec![Poly::constant(1, rat(3))], 1).unwrap();
        assert!(matches!(
            consts.truncation(),
            Err(ApolarError::AllGeneratorsConstant)
        ));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            InverseSystem::build(vec![], 2).unwrap_err(),
            ApolarError::EmptyGeneratorList
        );
        assert_eq!(
            InverseSystem::build(vec![Poly::zero(2)], 2).unwrap_err(),
            ApolarError::ZeroGenerator(0)
        );
    }

    #[test]
    fn derivative_iteration_stabilizes_quickly() {
        // fixed point reached in at most s rounds of first derivatives
        let is = sys(&["x1^2 x2 + x3^3", "x1 x3^2"], 3);
        let mut span = PolySpan::new(3);
        let mut frontier: Vec<Poly> = is.generators().to_vec();
        for p in &frontier {
            span.insert(p.clone());
        }
        let mut rounds = 0;
        loop {
            let mut next = Vec::new();
            let mut grew = false;
            for p in &frontier {
                for i in 0..3 {
                    let d = p.derivative(i);
                    if d.is_zero() {
                        continue;
                    }
                    if span.insert(d.clone()).is_some() {
                        grew = true;
                    }
                    next.push(d);
                }
            }
            if !grew {
                break;
            }
            frontier = next;
            rounds += 1;
            assert!(rounds <= is.socle_degree());
        }
        assert_eq!(span.dim(), is.closure_dim());
    }
}
