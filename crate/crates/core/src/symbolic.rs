//! Linear matrix pencils `M(t) = Σ_j t_j M_j` and certified singularity.
//!
//! A Frobenius-type search asks whether some parameter value makes a pencil
//! invertible. Random points settle the positive case. A negative answer needs a
//! proof that `det M(t)` vanishes identically: either the exact expansion of the
//! determinant as a polynomial in `t`, or a shrunk subspace `U` with
//! `dim Σ_j M_j U < dim U`, which forces `M(t)` to be singular for every `t`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{rat, Echelon, RatMatrix, Rational, Subspace};
use crate::sampling::{Sampler, SearchOptions};

/// Multivariate polynomial over the rationals, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    /// `Σ_j coeffs[j] t_j`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let vars = coeffs.len();
        let mut p = Poly::zero(vars);
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; vars];
                e[j] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max().unwrap_or(0)
    }

    pub fn add_assign_scaled(&mut self, other: &Poly, c: &Rational) {
        for (e, x) in &other.terms {
            let v = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *v += c * x;
            if v.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e1, x) in &self.terms {
            for (e2, y) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
                *v += x * y;
                if v.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    pub fn eval(&self, t: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in t.iter().zip(e) {
                for _ in 0..k {
                    m *= x;
                }
            }
            s += m;
        }
        s
    }
}

/// `M(t) = Σ_j t_j M_j`, all coefficients square of the same size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPencil {
    size: usize,
    coeffs: Vec<RatMatrix>,
}

impl LinearPencil {
    pub fn new(size: usize, coeffs: Vec<RatMatrix>) -> Self {
        for m in &coeffs {
            assert!(m.rows() == size && m.cols() == size, "pencil coefficient shape");
        }
        LinearPencil { size, coeffs }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn params(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[RatMatrix] {
        &self.coeffs
    }

    pub fn eval(&self, t: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.size, self.size);
        for (c, x) in t.iter().zip(&self.coeffs) {
            if !c.is_zero() {
                m = m.add(&x.scale(c));
            }
        }
        m
    }

    /// Exact determinant as a polynomial in the parameters, by Laplace expansion
    /// with memoised minors over column subsets.
    pub fn symbolic_determinant(&self) -> Poly {
        let n = self.size;
        let k = self.params();
        assert!(n < 32, "symbolic determinant limited to fewer than 32 rows");
        if n == 0 {
            return Poly::constant(k, Rational::one());
        }
        let entry = |i: usize, j: usize| -> Poly {
            let c: Vec<Rational> = self.coeffs.iter().map(|m| m[(i, j)].clone()).collect();
            Poly::linear(&c)
        };
        // minors of the last rows, keyed by the set of columns used
        let mut level: BTreeMap<u32, Poly> = BTreeMap::new();
        level.insert(0, Poly::constant(k, Rational::one()));
        for i in (0..n).rev() {
            let mut next: BTreeMap<u32, Poly> = BTreeMap::new();
            for (mask, minor) in &level {
                if minor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let e = entry(i, c);
                    if e.is_zero() {
                        continue;
                    }
                    // sign from the position of column c within mask ∪ {c}
                    let before = (mask & ((1u32 << c) - 1)).count_ones();
                    let sign = if before % 2 == 0 { rat(1) } else { rat(-1) };
                    let term = e.mul(minor);
                    next.entry(mask | (1 << c)).or_insert_with(|| Poly::zero(k)).add_assign_scaled(&term, &sign);
                }
            }
            level = next;
        }
        level.remove(&((1u32 << n) - 1)).unwrap_or_else(|| Poly::zero(k))
    }

    /// Looks for a shrunk subspace using the second Wong sequence at a point of
    /// maximal observed rank. Returns `None` when the sequence leaves the image of
    /// `M(t0)`, which means `t0` was not of maximal rank.
    pub fn shrunk_subspace(&self, t0: &[Rational]) -> Option<Subspace> {
        let n = self.size;
        let a = self.eval(t0);
        let mut image = Echelon::new(n);
        for j in 0..n {
            image.insert_dense(&a.column(j));
        }
        if image.rank() == n {
            return None;
        }
        let mut w: Vec<Vec<Rational>> = Vec::new();
        loop {
            let u = preimage(&a, &w);
            let gens: Vec<Vec<Rational>> =
                self.coeffs.iter().flat_map(|m| u.basis().iter().map(move |v| m.apply(v))).collect();
            let next = Subspace::span(n, &gens);
            if next.basis().iter().any(|v| !image.contains(v)) {
                return None;
            }
            if next.dim() == w.len() {
                return if u.dim() > next.dim() { Some(u) } else { None };
            }
            w = next.basis().to_vec();
        }
    }
}

/// `{v : A v ∈ span(w)}`.
fn preimage(a: &RatMatrix, w: &[Vec<Rational>]) -> Subspace {
    let n = a.cols();
    let mut columns: Vec<Vec<Rational>> = (0..n).map(|j| a.column(j)).collect();
    for b in w {
        columns.push(b.iter().map(|x| -x.clone()).collect());
    }
    let kernel = crate::exactlin::null_combinations(&columns, a.rows());
    let gens: Vec<Vec<Rational>> = kernel.into_iter().map(|v| v[..n].to_vec()).collect();
    Subspace::span(n, &gens)
}

/// How a pencil was shown to be singular everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularityMethod {
    /// No parameters and a nonzero size: the pencil is the zero matrix.
    NoParameters,
    /// The determinant polynomial expands to zero.
    DeterminantExpansion,
    /// `dim Σ_j M_j U < dim U` for the stored `U`.
    ShrunkSubspace { subspace: Vec<Vec<Rational>>, image_dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPencilProof {
    pub size: usize,
    pub params: usize,
    pub method: SingularityMethod,
}

impl fmt::Display for SingularPencilProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.method {
            SingularityMethod::NoParameters => {
                write!(f, "the {}x{} pencil has no parameters and is zero", self.size, self.size)
            }
            SingularityMethod::DeterminantExpansion => write!(
                f,
                "determinant of the {}x{} pencil in {} parameters expands to the zero polynomial",
                self.size, self.size, self.params
            ),
            SingularityMethod::ShrunkSubspace { subspace, image_dim } => write!(
                f,
                "a {}-dimensional subspace is mapped by all {} pencil coefficients into a {}-dimensional one",
                subspace.len(),
                self.params,
                image_dim
            ),
        }
    }
}

/// Re-checks a singularity proof against the pencil it claims to describe.
pub fn verify_singular(pencil: &LinearPencil, proof: &SingularPencilProof) -> bool {
    if proof.size != pencil.size() || proof.params != pencil.params() {
        return false;
    }
    match &proof.method {
        SingularityMethod::NoParameters => pencil.params() == 0 && pencil.size() > 0,
        SingularityMethod::DeterminantExpansion => pencil.symbolic_determinant().is_zero(),
        SingularityMethod::ShrunkSubspace { subspace, image_dim } => {
            let n = pencil.size();
            if subspace.iter().any(|v| v.len() != n) {
                return false;
            }
            let u = Subspace::span(n, subspace);
            if u.dim() != subspace.len() {
                return false;
            }
            let gens: Vec<Vec<Rational>> =
                pencil.coefficients().iter().flat_map(|m| subspace.iter().map(move |v| m.apply(v))).collect();
            let img = Subspace::span(n, &gens).dim();
            img == *image_dim && img < u.dim()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    /// No proof of singularity was found and the pencil is above the expansion cap.
    CapExceeded { size: usize, cap: usize },
    /// An invertible point was found but the witness could not be completed.
    Inconclusive(String),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::CapExceeded { size, cap } => write!(
                f,
                "no invertible point found and the {size}x{size} pencil exceeds the symbolic cap {cap}; refusing a negative verdict"
            ),
            SearchError::Inconclusive(s) => write!(f, "inconclusive search: {s}"),
        }
    }
}

pub enum PencilOutcome<C> {
    Found(C),
    Singular(SingularPencilProof),
}

/// Randomized positive search with a certified negative.
///
/// `accept` is called with parameter values at which the pencil is invertible and
/// returns the completed witness, or `None` if completion fails there.
pub fn search_pencil<C>(
    pencil: &LinearPencil,
    opts: &SearchOptions,
    sampler: &mut Sampler,
    mut accept: impl FnMut(&[Rational]) -> Option<C>,
) -> Result<PencilOutcome<C>, SearchError> {
    let (n, k) = (pencil.size(), pencil.params());
    if n == 0 {
        return accept(&crate::exactlin::zero_vec(k))
            .map(PencilOutcome::Found)
            .ok_or_else(|| SearchError::Inconclusive("empty pencil rejected by witness completion".into()));
    }
    if k == 0 {
        return Ok(PencilOutcome::Singular(SingularPencilProof { size: n, params: 0, method: SingularityMethod::NoParameters }));
    }
    let mut best: Option<(usize, Vec<Rational>)> = None;
    let mut rejected = 0usize;
    for _ in 0..opts.trials.max(1) {
        let t = sampler.vector(k);
        let m = pencil.eval(&t);
        let r = m.rank();
        if r == n {
            if let Some(c) = accept(&t) {
                return Ok(PencilOutcome::Found(c));
            }
            rejected += 1;
        }
        if best.as_ref().map_or(true, |(br, _)| r > *br) {
            best = Some((r, t));
        }
    }
    if n <= opts.symbolic_cap {
        let det = pencil.symbolic_determinant();
        if det.is_zero() {
            return Ok(PencilOutcome::Singular(SingularPencilProof {
                size: n,
                params: k,
                method: SingularityMethod::DeterminantExpansion,
            }));
        }
        if let Some(t) = nonvanishing_point(&det, k) {
            if let Some(c) = accept(&t) {
                return Ok(PencilOutcome::Found(c));
            }
        }
        return Err(SearchError::Inconclusive(format!(
            "pencil is generically invertible but witness completion failed at {} points",
            rejected + 1
        )));
    }
    if let Some((r, t0)) = best {
        if r < n {
            if let Some(u) = pencil.shrunk_subspace(&t0) {
                let gens: Vec<Vec<Rational>> =
                    pencil.coefficients().iter().flat_map(|m| u.basis().iter().map(move |v| m.apply(v))).collect();
                let image_dim = Subspace::span(n, &gens).dim();
                return Ok(PencilOutcome::Singular(SingularPencilProof {
                    size: n,
                    params: k,
                    method: SingularityMethod::ShrunkSubspace { subspace: u.basis().to_vec(), image_dim },
                }));
            }
        }
    }
    if rejected > 0 {
        return Err(SearchError::Inconclusive(format!("witness completion failed at {rejected} invertible points")));
    }
    Err(SearchError::CapExceeded { size: n, cap: opts.symbolic_cap })
}

/// A point of `{1, …, deg+1}^k` where a nonzero polynomial does not vanish.
pub fn nonvanishing_point(p: &Poly, k: usize) -> Option<Vec<Rational>> {
    if p.is_zero() {
        return None;
    }
    let base = p.total_degree() as u64 + 1;
    let mut digits = vec![0u64; k];
    loop {
        let t: Vec<Rational> = digits.iter().map(|&d| rat(d as i64 + 1)).collect();
        if !p.eval(&t).is_zero() {
            return Some(t);
        }
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
