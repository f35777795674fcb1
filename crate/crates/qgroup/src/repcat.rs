//! Representations of `H`: the catalog of simple and projective modules,
//! Hom spaces, submodule chains of PIMs, decomposition into
//! indecomposables, the Jacobson radical of `H`, the Gr(2) block model and
//! q-dimensions.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::{CycField, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::{HAlgebra, HElement, HGen};
use crate::linalg::{add_vectors, scale_vector, unit_vector, Echelon, Matrix, SparseRow, Subspace, Vector};
use crate::tensor::BasisAlgebra;

/// Matrices of `K`, `Xp`, `Xm` on a finite-dimensional module.
#[derive(Clone, Debug)]
pub struct Representation {
    field: Arc<CycField>,
    dim: usize,
    k: Matrix,
    xp: Matrix,
    xm: Matrix,
    label: Option<String>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.xp == other.xp && self.xm == other.xm
    }
}

impl Representation {
    pub fn new(k: Matrix, xp: Matrix, xm: Matrix) -> Result<Representation> {
        let dim = k.rows();
        for m in [&k, &xp, &xm] {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.cols() });
            }
        }
        Ok(Representation { field: k.field().clone(), dim, k, xp, xm, label: None })
    }

    pub fn with_label(mut self, label: &str) -> Representation {
        self.label = Some(label.to_string());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.n() as usize
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> &Matrix {
        &self.k
    }

    pub fn xp(&self) -> &Matrix {
        &self.xp
    }

    pub fn xm(&self) -> &Matrix {
        &self.xm
    }

    pub fn generator(&self, g: HGen) -> &Matrix {
        match g {
            HGen::K => &self.k,
            HGen::Xp => &self.xp,
            HGen::Xm => &self.xm,
        }
    }

    pub fn k_inv(&self) -> Matrix {
        self.k.pow(self.n() as u32 - 1)
    }

    /// The trivial module `eps`.
    pub fn trivial(field: &Arc<CycField>) -> Representation {
        let one = Matrix::identity(field, 1);
        let zero = Matrix::zeros(field, 1, 1);
        Representation::new(one, zero.clone(), zero).expect("1x1").with_label("1")
    }

    /// The simple module `L_n` (`1 <= n <= N`) of highest weight `q^(n-1)`.
    pub fn simple(field: &Arc<CycField>, n: usize) -> Representation {
        let big_n = field.n() as usize;
        assert!((1..=big_n).contains(&n), "simple modules have dimension 1..=N");
        let mut k = Matrix::zeros(field, n, n);
        let mut xp = Matrix::zeros(field, n, n);
        let mut xm = Matrix::zeros(field, n, n);
        for i in 0..n {
            k.set(i, i, CycScalar::qpow(field, n as i64 - 1 - 2 * i as i64));
            if i + 1 < n {
                xm.set(i + 1, i, CycScalar::one(field));
            }
            if i > 0 {
                let c = CycScalar::qnumber(field, i as i64) * CycScalar::qnumber(field, (n - i) as i64);
                xp.set(i - 1, i, c);
            }
        }
        Representation::new(k, xp, xm).expect("square").with_label(&simple_label(big_n, n))
    }

    /// `K^N = 1`, `Xp^N = Xm^N = 0`, `K Xp = q^2 Xp K`, `K Xm = q^-2 Xm K`,
    /// `[Xp, Xm] = (K - K^-1)/(q - q^-1)`.
    pub fn check_relations(&self) -> Result<()> {
        let f = &self.field;
        let n = self.n() as u32;
        let id = Matrix::identity(f, self.dim);
        let zero = Matrix::zeros(f, self.dim, self.dim);
        let kinv = self.k_inv();
        let inv_diff = (CycScalar::q(f) - CycScalar::qpow(f, -1)).inv()?;
        let checks = [
            ("K^N = 1", self.k.pow(n), id.clone()),
            ("K K^-1 = 1", self.k.mul(&kinv), id),
            ("Xp^N = 0", self.xp.pow(n), zero.clone()),
            ("Xm^N = 0", self.xm.pow(n), zero),
            ("K Xp = q^2 Xp K", self.k.mul(&self.xp), self.xp.mul(&self.k).scale(&CycScalar::qpow(f, 2))),
            ("K Xm = q^-2 Xm K", self.k.mul(&self.xm), self.xm.mul(&self.k).scale(&CycScalar::qpow(f, -2))),
            ("[Xp, Xm] = (K - K^-1)/(q - q^-1)", self.xp.mul(&self.xm).sub(&self.xm.mul(&self.xp)), self.k.sub(&kinv).scale(&inv_diff)),
        ];
        for (name, l, r) in checks {
            if let Some((i, j)) = l.first_difference(&r) {
                return Err(Error::CheckFailed(alloc::format!("{name} fails at entry ({i}, {j}) in {}", self.describe())));
            }
        }
        Ok(())
    }

    fn describe(&self) -> String {
        match &self.label {
            Some(l) => alloc::format!("module {l}"),
            None => alloc::format!("module of dimension {}", self.dim),
        }
    }

    /// Matrix of an arbitrary element of `H`.
    pub fn rho(&self, h: &HAlgebra, u: &HElement) -> Matrix {
        let n = self.n();
        let pows = |m: &Matrix| {
            let mut v = vec![Matrix::identity(&self.field, self.dim)];
            for i in 1..n {
                let next = v[i - 1].mul(m);
                v.push(next);
            }
            v
        };
        let (pm, pk, pp) = (pows(&self.xm), pows(&self.k), pows(&self.xp));
        let mut out = Matrix::zeros(&self.field, self.dim, self.dim);
        for (&idx, c) in u.terms() {
            let (i, j, k) = h.exponents(idx);
            out = out.add(&pm[i].mul(&pk[j]).mul(&pp[k]).scale(c));
        }
        out
    }

    /// `(1/N) sum_m q^(-jm) K^m`, the projector onto the `q^j`-eigenspace of `K`.
    pub fn weight_projector(&self, j: usize) -> Matrix {
        let f = &self.field;
        let n = self.n();
        let mut out = Matrix::zeros(f, self.dim, self.dim);
        let mut km = Matrix::identity(f, self.dim);
        for m in 0..n {
            out = out.add(&km.scale(&CycScalar::qpow(f, -((j * m) as i64))));
            km = km.mul(&self.k);
        }
        out.scale(&CycScalar::from_rational(f, &num_rational::BigRational::new(1.into(), (n as i64).into())))
    }

    /// Bases of the `q^j`-weight spaces, `j = 0..N`.
    pub fn weight_spaces(&self) -> Vec<Vec<Vector>> {
        (0..self.n()).map(|j| self.weight_projector(j).image()).collect()
    }

    /// Multiplicity of each eigenvalue `q^j` of `K`.
    pub fn k_spectrum(&self) -> Vec<usize> {
        (0..self.n()).map(|j| self.weight_projector(j).rank()).collect()
    }

    /// `rho(h) = (rho_A (x) rho_B)(Delta h)`.
    pub fn tensor(&self, other: &Representation) -> Representation {
        let f = &self.field;
        let ia = Matrix::identity(f, self.dim);
        let ib = Matrix::identity(f, other.dim);
        let k = self.k.kron(&other.k);
        let xp = self.xp.kron(&ib).add(&self.k.kron(&other.xp));
        let xm = self.xm.kron(&other.k_inv()).add(&ia.kron(&other.xm));
        let rep = Representation::new(k, xp, xm).expect("square");
        match (&self.label, &other.label) {
            (Some(a), Some(b)) => rep.with_label(&alloc::format!("{a} x {b}")),
            _ => rep,
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let f = &self.field;
        let d = self.dim + other.dim;
        let block = |a: &Matrix, b: &Matrix| {
            Matrix::from_fn(f, d, d, |i, j| {
                if i < self.dim && j < self.dim {
                    a.get(i, j).clone()
                } else if i >= self.dim && j >= self.dim {
                    b.get(i - self.dim, j - self.dim).clone()
                } else {
                    CycScalar::zero(f)
                }
            })
        };
        Representation::new(block(&self.k, &other.k), block(&self.xp, &other.xp), block(&self.xm, &other.xm)).expect("square")
    }

    pub fn is_invariant(&self, sub: &Subspace) -> bool {
        [&self.k, &self.xp, &self.xm].iter().all(|m| sub.is_invariant(m))
    }

    /// Action on an invariant subspace, in the coordinates of `sub.basis()`.
    pub fn restrict(&self, sub: &Subspace) -> Result<Representation> {
        let r = |m: &Matrix| sub.restrict(m).ok_or_else(|| Error::CheckFailed(String::from("subspace is not invariant")));
        Representation::new(r(&self.k)?, r(&self.xp)?, r(&self.xm)?)
    }

    /// Action on `V / sub`, in coordinates of a complement spanned by standard vectors.
    pub fn quotient(&self, sub: &Subspace) -> Result<Representation> {
        if !self.is_invariant(sub) {
            return Err(Error::CheckFailed(String::from("subspace is not invariant")));
        }
        let comp = sub.complement();
        let mut all: Vec<Vector> = sub.basis().to_vec();
        all.extend(comp.basis().iter().cloned());
        let frame = Subspace::span(&self.field, self.dim, &all);
        let s = sub.dim();
        let d = comp.dim();
        let q = |m: &Matrix| {
            let mut out = Matrix::zeros(&self.field, d, d);
            for (j, b) in comp.basis().iter().enumerate() {
                let c = frame.coords(&m.apply(b)).expect("frame spans");
                for i in 0..d {
                    out.set(i, j, c[s + i].clone());
                }
            }
            out
        };
        Representation::new(q(&self.k), q(&self.xp), q(&self.xm))
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vector]) -> Subspace {
        let mut sub = Subspace::span(&self.field, self.dim, vectors);
        loop {
            let mut all: Vec<Vector> = sub.basis().to_vec();
            for b in sub.basis() {
                for m in [&self.k, &self.xp, &self.xm] {
                    all.push(m.apply(b));
                }
            }
            let next = Subspace::span(&self.field, self.dim, &all);
            if next.dim() == sub.dim() {
                return sub;
            }
            sub = next;
        }
    }

    /// `C = Xm Xp + (q K + q^-1 K^-1)/(q - q^-1)^2`, central in `H`.
    pub fn casimir(&self) -> Matrix {
        let f = &self.field;
        let diff = CycScalar::q(f) - CycScalar::qpow(f, -1);
        let inv = (&diff * &diff).inv().expect("q^2 != 1");
        let t = self.k.scale(&CycScalar::q(f)).add(&self.k_inv().scale(&CycScalar::qpow(f, -1)));
        self.xm.mul(&self.xp).add(&t.scale(&inv))
    }

    /// `Tr(K rho(u))`.
    pub fn qtrace(&self, h: &HAlgebra, u: &HElement) -> CycScalar {
        self.k.mul(&self.rho(h, u)).trace()
    }

    pub fn qdim(&self) -> CycScalar {
        self.k.trace()
    }

    /// Does `t` (a `other.dim x self.dim` matrix) intertwine the two actions?
    pub fn intertwines(&self, other: &Representation, t: &Matrix) -> bool {
        [HGen::K, HGen::Xp, HGen::Xm].iter().all(|&g| t.mul(self.generator(g)) == other.generator(g).mul(t))
    }
}

pub fn simple_label(big_n: usize, n: usize) -> String {
    if n == big_n {
        alloc::format!("{n}_irr")
    } else {
        alloc::format!("{n}")
    }
}

pub fn pim_label(big_n: usize, n: usize) -> String {
    if big_n == 3 {
        match n {
            1 => return String::from("6_odd"),
            2 => return String::from("6_eve"),
            _ => {}
        }
    }
    alloc::format!("P_{n}")
}

/// A module together with a basis of `K`-eigenvectors, used to solve for
/// intertwiners one weight block at a time.
struct WeightFrame {
    basis: Matrix,
    inv: Matrix,
    weights: Vec<usize>,
    xp: Matrix,
    xm: Matrix,
}

impl WeightFrame {
    fn new(v: &Representation) -> WeightFrame {
        let mut cols = Vec::with_capacity(v.dim);
        let mut weights = Vec::with_capacity(v.dim);
        for (j, space) in v.weight_spaces().into_iter().enumerate() {
            for b in space {
                cols.push(b);
                weights.push(j);
            }
        }
        let basis = Matrix::from_columns(&v.field, v.dim, &cols);
        let inv = basis.inverse().expect("K is diagonalizable");
        let xp = inv.mul(&v.xp).mul(&basis);
        let xm = inv.mul(&v.xm).mul(&basis);
        WeightFrame { basis, inv, weights, xp, xm }
    }
}

/// Basis of `Hom_H(V, W)` as `W.dim x V.dim` matrices.
pub fn hom_space(v: &Representation, w: &Representation) -> Vec<Matrix> {
    let f = v.field.clone();
    let fv = WeightFrame::new(v);
    let fw = WeightFrame::new(w);
    // Unknowns: entries (a, b) of T' with equal weights.
    let mut var: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for a in 0..w.dim {
        for b in 0..v.dim {
            if fw.weights[a] == fv.weights[b] {
                let id = var.len();
                var.insert((a, b), id);
            }
        }
    }
    let nvars = var.len();
    if nvars == 0 {
        return Vec::new();
    }
    let mut rows: Vec<SparseRow> = Vec::new();
    for (xv, xw) in [(&fv.xp, &fw.xp), (&fv.xm, &fw.xm)] {
        // (T' X_V - X_W T')[a][b] = 0
        for a in 0..w.dim {
            for b in 0..v.dim {
                let mut row: BTreeMap<usize, CycScalar> = BTreeMap::new();
                for c in 0..v.dim {
                    let x = xv.get(c, b);
                    if x.is_zero() {
                        continue;
                    }
                    if let Some(&id) = var.get(&(a, c)) {
                        let e = row.entry(id).or_insert_with(|| CycScalar::zero(&f));
                        *e += x;
                    }
                }
                for c in 0..w.dim {
                    let x = xw.get(a, c);
                    if x.is_zero() {
                        continue;
                    }
                    if let Some(&id) = var.get(&(c, b)) {
                        let e = row.entry(id).or_insert_with(|| CycScalar::zero(&f));
                        *e -= x;
                    }
                }
                let row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    crate::linalg::nullspace(&f, &rows, nvars)
        .into_iter()
        .map(|sol| {
            let mut t = Matrix::zeros(&f, w.dim, v.dim);
            for (&(a, b), &id) in &var {
                if !sol[id].is_zero() {
                    t.set(a, b, sol[id].clone());
                }
            }
            fw.basis.mul(&t).mul(&fv.inv)
        })
        .collect()
}

/// Basis of the commutant `End_H(V)`.
pub fn endomorphisms(v: &Representation) -> Vec<Matrix> {
    hom_space(v, v)
}

/// Dimension of the radical of a matrix algebra (given by a basis), via the
/// trace form of its natural representation.
pub fn matrix_algebra_radical_dim(field: &Arc<CycField>, basis: &[Matrix]) -> usize {
    let m = basis.len();
    let gram = Matrix::from_fn(field, m, m, |i, j| basis[i].mul(&basis[j]).trace());
    m - gram.rank()
}

/// Is `End_H(V)` local, i.e. is `V` indecomposable?
pub fn is_indecomposable(v: &Representation) -> bool {
    let e = endomorphisms(v);
    e.len() - matrix_algebra_radical_dim(&v.field, &e) == 1
}

/// An isomorphism `a -> b`, if one exists. Both modules must be indecomposable.
pub fn find_isomorphism(a: &Representation, b: &Representation) -> Option<Matrix> {
    if a.dim != b.dim || a.k_spectrum() != b.k_spectrum() {
        return None;
    }
    let (f, _) = split_pair(a, b)?;
    if f.rank() == a.dim {
        Some(f)
    } else {
        None
    }
}

/// `f: M -> U`, `g: U -> M` with `g f = id_M`, if `M` (indecomposable) is a
/// direct summand of `U`.
fn split_pair(m: &Representation, u: &Representation) -> Option<(Matrix, Matrix)> {
    let fs = hom_space(m, u);
    if fs.is_empty() {
        return None;
    }
    let gs = hom_space(u, m);
    for f in &fs {
        for g in &gs {
            let gf = g.mul(f);
            if gf.trace().is_zero() {
                continue;
            }
            let inv = gf.inverse()?;
            return Some((f.clone(), inv.mul(g)));
        }
    }
    None
}

/// Number of direct summands of `U` isomorphic to the indecomposable `M`:
/// rank of `(f, g) -> tr(g f)` on `Hom(M, U) x Hom(U, M)`.
pub fn multiplicity(m: &Representation, u: &Representation) -> usize {
    let fs = hom_space(m, u);
    if fs.is_empty() {
        return 0;
    }
    let gs = hom_space(u, m);
    Matrix::from_fn(&m.field, gs.len(), fs.len(), |i, j| gs[i].mul(&fs[j]).trace()).rank()
}

/// One indecomposable summand of a decomposition.
#[derive(Clone, Debug)]
pub struct Summand {
    pub label: Option<String>,
    pub dim: usize,
    pub k_spectrum: Vec<usize>,
    /// Columns span the summand inside the decomposed module.
    pub embedding: Matrix,
    /// The action in the embedding's coordinates, or the catalog module when matched.
    pub module: Representation,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub dim: usize,
    pub summands: Vec<Summand>,
}

impl DecompositionReport {
    /// Labels with multiplicity, sorted; unnamed summands appear as `?{dim}`.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .summands
            .iter()
            .map(|s| s.label.clone().unwrap_or_else(|| alloc::format!("?{}", s.dim)))
            .collect();
        v.sort();
        v
    }

    /// Each embedding intertwines its summand module into `v`, and together
    /// the embeddings span `v`.
    pub fn verify(&self, v: &Representation) -> Result<()> {
        let mut cols = Vec::new();
        for s in &self.summands {
            if !s.module.intertwines(v, &s.embedding) {
                return Err(Error::CheckFailed(alloc::format!("witness for summand {:?} is not an intertwiner", s.label)));
            }
            cols.extend(s.embedding.columns());
        }
        if Matrix::from_columns(&v.field, v.dim, &cols).rank() != v.dim || cols.len() != v.dim {
            return Err(Error::CheckFailed(String::from("summands do not form a direct sum decomposition")));
        }
        Ok(())
    }

    pub fn all_named(&self) -> bool {
        self.summands.iter().all(|s| s.label.is_some())
    }
}

/// Submodule spanned by the columns of `basis` (in `v` coordinates), as a representation.
fn sub_rep(v: &Representation, basis: &Matrix) -> Representation {
    let sub = Subspace::span(&v.field, v.dim, &basis.columns());
    v.restrict(&sub).expect("invariant")
}

/// Splits `v` into indecomposables. Summands isomorphic to a catalog module
/// carry its label and an explicit embedding of the catalog module.
pub fn decompose(v: &Representation, catalog: &[Representation]) -> Result<DecompositionReport> {
    let f = v.field.clone();
    let mut summands = Vec::new();
    let mut pending = vec![Matrix::identity(&f, v.dim)];
    while let Some(mut basis) = pending.pop() {
        if basis.cols() == 0 {
            continue;
        }
        let mut u = sub_rep(v, &basis);
        for m in catalog {
            while u.dim >= m.dim {
                let Some((emb, proj)) = split_pair(m, &u) else { break };
                summands.push(Summand {
                    label: m.label.clone(),
                    dim: m.dim,
                    k_spectrum: m.k_spectrum(),
                    embedding: basis.mul(&emb),
                    module: m.clone(),
                });
                let ker = proj.kernel();
                if ker.is_empty() {
                    basis = Matrix::zeros(&f, v.dim, 0);
                    u = Representation::new(Matrix::zeros(&f, 0, 0), Matrix::zeros(&f, 0, 0), Matrix::zeros(&f, 0, 0))?;
                    break;
                }
                basis = basis.mul(&Matrix::from_columns(&f, u.dim, &ker));
                u = sub_rep(v, &basis);
            }
            if u.dim == 0 {
                break;
            }
        }
        if u.dim == 0 {
            continue;
        }
        let ends = endomorphisms(&u);
        if ends.len() - matrix_algebra_radical_dim(&f, &ends) == 1 {
            summands.push(Summand { label: None, dim: u.dim, k_spectrum: u.k_spectrum(), embedding: basis.clone(), module: u });
            continue;
        }
        let Some((a, b)) = fitting_split(&u, &ends) else {
            return Err(Error::Unsupported(alloc::format!(
                "cannot split a decomposable remainder of dimension {} with K-spectrum {:?}",
                u.dim,
                u.k_spectrum()
            )));
        };
        pending.push(basis.mul(&Matrix::from_columns(&f, u.dim, &a)));
        pending.push(basis.mul(&Matrix::from_columns(&f, u.dim, &b)));
    }
    Ok(DecompositionReport { dim: v.dim, summands })
}

/// Like [`decompose`] but fails on summands that match no catalog module.
pub fn decompose_named(v: &Representation, catalog: &[Representation]) -> Result<DecompositionReport> {
    let rep = decompose(v, catalog)?;
    if let Some(s) = rep.summands.iter().find(|s| s.label.is_none()) {
        return Err(Error::CheckFailed(alloc::format!(
            "unmatched indecomposable summand of dimension {} with K-spectrum {:?}",
            s.dim, s.k_spectrum
        )));
    }
    Ok(rep)
}

/// `V = im psi^d (+) ker psi^d` for some commutant element `psi = phi + c` that
/// is neither nilpotent nor invertible.
fn fitting_split(u: &Representation, ends: &[Matrix]) -> Option<(Vec<Vector>, Vec<Vector>)> {
    let f = &u.field;
    let id = Matrix::identity(f, u.dim);
    let mut candidates: Vec<Matrix> = Vec::new();
    for (i, e) in ends.iter().enumerate() {
        candidates.push(e.clone());
        if i + 1 < ends.len() {
            candidates.push(e.add(&ends[i + 1]));
        }
    }
    for phi in &candidates {
        for c in [0i64, 1, -1, 2, -2, 3, -3] {
            let psi = phi.add(&id.scale(&CycScalar::from_int(f, c)));
            let p = psi.pow(u.dim as u32);
            let r = p.rank();
            if r > 0 && r < u.dim {
                return Some((p.image(), p.kernel()));
            }
        }
    }
    None
}

/// Simple modules and projective covers.
#[derive(Clone, Debug)]
pub struct Catalog {
    n: usize,
    simples: Vec<Representation>,
    pims: Vec<Representation>,
}

impl Catalog {
    pub fn new(h: &HAlgebra) -> Catalog {
        let f = h.field();
        let n = h.n();
        let simples: Vec<Representation> = (1..=n).map(|k| Representation::simple(f, k)).collect();
        let pims: Vec<Representation> = (1..n).map(|k| projective_cover(h, k).expect("projective cover")).collect();
        Catalog { n, simples, pims }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `L_k`, `1 <= k <= N`.
    pub fn simple(&self, k: usize) -> &Representation {
        &self.simples[k - 1]
    }

    /// `P_k`, the projective cover of `L_k`, `1 <= k < N`.
    pub fn pim(&self, k: usize) -> &Representation {
        &self.pims[k - 1]
    }

    /// The irreducible projective `L_N`.
    pub fn irr(&self) -> &Representation {
        &self.simples[self.n - 1]
    }

    /// Indecomposable projectives followed by the non-projective simples.
    pub fn modules(&self) -> Vec<Representation> {
        let mut v = vec![self.irr().clone()];
        v.extend(self.pims.iter().cloned());
        v.extend(self.simples[..self.n - 1].iter().cloned());
        v
    }

    pub fn get(&self, label: &str) -> Option<&Representation> {
        self.simples.iter().chain(self.pims.iter()).find(|r| r.label.as_deref() == Some(label))
    }

    pub fn labels(&self) -> Vec<String> {
        self.modules().iter().filter_map(|r| r.label.clone()).collect()
    }
}

/// `H (x)_{C[K]} C_lambda` with `lambda = q^l`, on the basis `Xm^i Xp^k (x) v`.
pub fn induced_module(h: &HAlgebra, l: i64) -> Representation {
    let f = h.field();
    let n = h.n();
    let d = n * n;
    let gen = |g: HGen| {
        let mut m = Matrix::zeros(f, d, d);
        for i in 0..n {
            for k in 0..n {
                for (idx, c) in h.product(h.gen_index(g), h.index(i, 0, k)) {
                    let (i2, j2, k2) = h.exponents(*idx);
                    // K^j Xp^k v = (q^(2k) lambda)^j Xp^k v
                    let s = c.mul_qpow(((2 * k2 as i64 + l) * j2 as i64) % n as i64);
                    m.add_at(i2 * n + k2, i * n + k, &s);
                }
            }
        }
        m
    };
    Representation::new(gen(HGen::K), gen(HGen::Xp), gen(HGen::Xm)).expect("square")
}

/// Generalized eigenspace of the Casimir with eigenvalue `c_k` inside the
/// induced module of weight `q^(k-1)`: the projective cover of `L_k`.
pub fn projective_cover(h: &HAlgebra, k: usize) -> Result<Representation> {
    let f = h.field();
    let n = h.n();
    if k == 0 || k >= n {
        return Err(Error::Unsupported(alloc::format!("projective covers are built for 1 <= k < N, got {k}")));
    }
    let ind = induced_module(h, k as i64 - 1);
    let diff = CycScalar::q(f) - CycScalar::qpow(f, -1);
    let ck = (CycScalar::qpow(f, k as i64) + CycScalar::qpow(f, -(k as i64))).div(&(&diff * &diff))?;
    let shifted = ind.casimir().sub(&Matrix::identity(f, ind.dim).scale(&ck));
    let mut p = shifted.clone();
    let mut rank = p.rank();
    loop {
        let next = p.mul(&shifted);
        let r = next.rank();
        if r == rank {
            break;
        }
        p = next;
        rank = r;
    }
    let sub = Subspace::span(f, ind.dim, &p.kernel());
    if sub.dim() != 2 * n {
        return Err(Error::CheckFailed(alloc::format!("projective cover of L_{k} has dimension {} instead of {}", sub.dim(), 2 * n)));
    }
    Ok(ind.restrict(&sub)?.with_label(&pim_label(n, k)))
}

/// Intersection of kernels of all maps to simple modules.
pub fn radical_of_module(v: &Representation, simples: &[Representation]) -> Subspace {
    let f = &v.field;
    let mut rows: Vec<Vector> = Vec::new();
    for s in simples {
        for t in hom_space(v, s) {
            for i in 0..t.rows() {
                rows.push(t.row(i));
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(f, v.dim);
    }
    let m = Matrix::from_fn(f, rows.len(), v.dim, |i, j| rows[i][j].clone());
    Subspace::span(f, v.dim, &m.kernel())
}

/// Sum of images of all maps from simple modules.
pub fn socle_of_module(v: &Representation, simples: &[Representation]) -> Subspace {
    let mut cols: Vec<Vector> = Vec::new();
    for s in simples {
        for t in hom_space(s, v) {
            cols.extend(t.columns());
        }
    }
    Subspace::span(&v.field, v.dim, &cols)
}

/// `socle <= intermediate(lambda) <= radical` inside a projective cover.
#[derive(Clone)]
pub struct SubmoduleChain {
    pub top: usize,
    pub radical: Subspace,
    pub intermediate: Subspace,
    pub socle: Subspace,
}

/// The chain of a `2N`-dimensional PIM. The intermediate submodule is
/// generated by `u1 + lambda u2` over the socle, where `u1, u2` span the highest
/// weight vectors of `rad / soc`.
pub fn submodule_chain(pim: &Representation, simples: &[Representation], lambda: &CycScalar) -> Result<SubmoduleChain> {
    let f = &pim.field;
    let n = pim.n();
    if pim.dim != 2 * n || !is_indecomposable(pim) {
        return Err(Error::Unsupported(alloc::format!("not a {}-dimensional indecomposable projective", 2 * n)));
    }
    let radical = radical_of_module(pim, simples);
    let socle = socle_of_module(pim, simples);
    let top = pim.dim - radical.dim();
    if top == 0 || top >= n || socle.dim() != top || !radical.contains_space(&socle) {
        return Err(Error::Unsupported(String::from("module does not have the radical/socle shape of a projective cover")));
    }
    let w = (n - top - 1) % n;
    let weight = Subspace::span(f, pim.dim, &pim.weight_projector(w).image());
    let cand = radical.intersect(&weight);
    // Combinations of `cand` whose image under Xp lies in the socle.
    let comp = socle.complement();
    let mut frame_vecs = socle.basis().to_vec();
    frame_vecs.extend(comp.basis().iter().cloned());
    let frame = Subspace::span(f, pim.dim, &frame_vecs);
    let s = socle.dim();
    let cols: Vec<Vector> = cand
        .basis()
        .iter()
        .map(|b| {
            let c = frame.coords(&pim.xp.apply(b)).expect("frame spans");
            c[s..].to_vec()
        })
        .collect();
    let m = Matrix::from_columns(f, pim.dim - s, &cols);
    let hw: Vec<Vector> = m
        .kernel()
        .into_iter()
        .map(|sol| {
            let mut v = crate::linalg::zero_vector(f, pim.dim);
            for (i, b) in cand.basis().iter().enumerate() {
                v = add_vectors(&v, &scale_vector(&sol[i], b));
            }
            v
        })
        .filter(|v| !socle.contains(v))
        .collect();
    let hw_space = Subspace::span(f, pim.dim, &hw);
    if hw_space.dim() != 2 {
        return Err(Error::CheckFailed(alloc::format!("expected two highest weight vectors in rad/soc, found {}", hw_space.dim())));
    }
    let (u1, u2) = (&hw_space.basis()[0], &hw_space.basis()[1]);
    let gen = add_vectors(u1, &scale_vector(lambda, u2));
    let mut seeds = vec![gen];
    seeds.extend(socle.basis().iter().cloned());
    let intermediate = pim.generated_submodule(&seeds);
    if intermediate.dim() != n || !radical.contains_space(&intermediate) || !intermediate.contains_space(&socle) {
        return Err(Error::CheckFailed(alloc::format!("intermediate submodule has dimension {}", intermediate.dim())));
    }
    Ok(SubmoduleChain { top, radical, intermediate, socle })
}

/// Left multiplication on `H` itself.
pub fn regular_representation(h: &HAlgebra) -> Representation {
    let f = h.field();
    let d = h.dim();
    let gen = |g: HGen| {
        let mut m = Matrix::zeros(f, d, d);
        for b in 0..d {
            for (c, s) in h.product(h.gen_index(g), b) {
                m.add_at(*c, b, s);
            }
        }
        m
    };
    Representation::new(gen(HGen::K), gen(HGen::Xp), gen(HGen::Xm)).expect("square").with_label("H")
}

/// Jacobson radical of `H` and the shape of `H / J`.
#[derive(Clone)]
pub struct RadicalReport {
    pub radical: Subspace,
    /// Matrix-block dimensions `n^2` of `H / J`, ordered `N^2, (N-1)^2, 1, (N-2)^2, 4, ...`.
    pub block_dims: Vec<usize>,
}

impl RadicalReport {
    pub fn dim(&self) -> usize {
        self.radical.dim()
    }
}

/// Radical as the kernel of `(u, v) -> tr(L_{uv})`.
pub fn radical(h: &HAlgebra) -> Result<RadicalReport> {
    let f = h.field().clone();
    let d = h.dim();
    let tau: Vec<CycScalar> = (0..d)
        .map(|m| {
            let mut t = CycScalar::zero(&f);
            for b in 0..d {
                for (c, s) in h.product(m, b) {
                    if *c == b {
                        t += s;
                    }
                }
            }
            t
        })
        .collect();
    let mut rows: Vec<SparseRow> = Vec::with_capacity(d);
    for a in 0..d {
        let mut row = Vec::new();
        for b in 0..d {
            let mut g = CycScalar::zero(&f);
            for (c, s) in h.product(a, b) {
                if !tau[*c].is_zero() {
                    g += &(s * &tau[*c]);
                }
            }
            if !g.is_zero() {
                row.push((b, g));
            }
        }
        rows.push(row);
    }
    let kernel = crate::linalg::nullspace(&f, &rows, d);
    let radical = Subspace::span(&f, d, &kernel);

    // Burnside: each simple L_n sees all of M_n, and the blocks exhaust H / J.
    let n = h.n();
    let mut block_dims = Vec::new();
    let mut order = vec![n];
    for p in 1..=(n - 1) / 2 {
        order.push(n - p);
        order.push(p);
    }
    for k in order {
        let s = Representation::simple(&f, k);
        let mut e = Echelon::new(&f, k * k);
        for m in 0..d {
            let mat = s.rho(h, &crate::tensor::Element::basis(&f, m));
            let flat: Vector = (0..k * k).map(|i| mat.get(i / k, i % k).clone()).collect();
            e.insert(&flat);
        }
        if e.rank() != k * k {
            return Err(Error::CheckFailed(alloc::format!("H does not act on L_{k} by the full matrix algebra")));
        }
        block_dims.push(k * k);
    }
    let total: usize = block_dims.iter().sum();
    if total + radical.dim() != d {
        return Err(Error::CheckFailed(alloc::format!("blocks {total} + radical {} != {d}", radical.dim())));
    }
    Ok(RadicalReport { radical, block_dims })
}

/// `L_g J` and `J R_g` stay inside `J` for the generators `g`.
pub fn check_radical_ideal(h: &HAlgebra, rad: &Subspace) -> Result<()> {
    let f = h.field();
    let d = h.dim();
    for g in h.generators() {
        for b in rad.basis() {
            let mut left = crate::linalg::zero_vector(f, d);
            let mut right = crate::linalg::zero_vector(f, d);
            for (m, c) in b.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, s) in h.product(g, m) {
                    left[*r] += &(c * s);
                }
                for (r, s) in h.product(m, g) {
                    right[*r] += &(c * s);
                }
            }
            if !rad.contains(&left) || !rad.contains(&right) {
                return Err(Error::CheckFailed(alloc::format!("radical not stable under generator {g}")));
            }
        }
    }
    Ok(())
}

/// The trace form of the regular representation of `H / J` is non-degenerate.
pub fn check_quotient_semisimple(h: &HAlgebra, rad: &Subspace) -> Result<()> {
    let f = h.field();
    let d = h.dim();
    let comp = rad.complement();
    let k = comp.dim();
    let idx: Vec<usize> = comp.basis().iter().map(|v| v.iter().position(|c| !c.is_zero()).expect("unit vector")).collect();
    let mut frame_vecs = rad.basis().to_vec();
    frame_vecs.extend(comp.basis().iter().cloned());
    let frame = Subspace::span(f, d, &frame_vecs);
    let r = rad.dim();
    // Structure constants of H / J on the complement basis.
    let mut sc: Vec<Vec<Vector>> = Vec::with_capacity(k);
    for &a in &idx {
        let mut row = Vec::with_capacity(k);
        for &b in &idx {
            let mut v = crate::linalg::zero_vector(f, d);
            for (c, s) in h.product(a, b) {
                v[*c] += s;
            }
            let coords = frame.coords(&v).expect("frame spans");
            row.push(coords[r..].to_vec());
        }
        sc.push(row);
    }
    let tau: Vec<CycScalar> = (0..k)
        .map(|e| {
            let mut t = CycScalar::zero(f);
            for b in 0..k {
                t += &sc[e][b][b];
            }
            t
        })
        .collect();
    let gram = Matrix::from_fn(f, k, k, |a, b| {
        let mut g = CycScalar::zero(f);
        for e in 0..k {
            if !sc[a][b][e].is_zero() {
                g += &(&sc[a][b][e] * &tau[e]);
            }
        }
        g
    });
    if gram.rank() != k {
        return Err(Error::CheckFailed(alloc::format!("H/J trace form has rank {} < {k}", gram.rank())));
    }
    Ok(())
}

/// `alpha + gamma th1 + delta th2 + beta th1 th2` in the Grassmann algebra Gr(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gr2Scalar {
    pub alpha: CycScalar,
    pub beta: CycScalar,
    pub gamma: CycScalar,
    pub delta: CycScalar,
}

impl Gr2Scalar {
    pub fn new(alpha: CycScalar, beta: CycScalar, gamma: CycScalar, delta: CycScalar) -> Gr2Scalar {
        Gr2Scalar { alpha, beta, gamma, delta }
    }

    pub fn zero(field: &Arc<CycField>) -> Gr2Scalar {
        let z = CycScalar::zero(field);
        Gr2Scalar::new(z.clone(), z.clone(), z.clone(), z)
    }

    pub fn theta1(field: &Arc<CycField>) -> Gr2Scalar {
        let mut g = Gr2Scalar::zero(field);
        g.gamma = CycScalar::one(field);
        g
    }

    pub fn theta2(field: &Arc<CycField>) -> Gr2Scalar {
        let mut g = Gr2Scalar::zero(field);
        g.delta = CycScalar::one(field);
        g
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero() && self.delta.is_zero()
    }

    pub fn is_even(&self) -> bool {
        self.gamma.is_zero() && self.delta.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// Has no component along `1`.
    pub fn is_nilpotent(&self) -> bool {
        self.alpha.is_zero()
    }

    pub fn add(&self, o: &Gr2Scalar) -> Gr2Scalar {
        Gr2Scalar::new(&self.alpha + &o.alpha, &self.beta + &o.beta, &self.gamma + &o.gamma, &self.delta + &o.delta)
    }

    pub fn mul(&self, o: &Gr2Scalar) -> Gr2Scalar {
        Gr2Scalar::new(
            &self.alpha * &o.alpha,
            &self.alpha * &o.beta + &self.beta * &o.alpha + &self.gamma * &o.delta - &self.delta * &o.gamma,
            &self.alpha * &o.gamma + &self.gamma * &o.alpha,
            &self.alpha * &o.delta + &self.delta * &o.alpha,
        )
    }
}

/// One summand of the block decomposition of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    /// `M_N` with complex entries.
    Full(usize),
    /// `M_{a|b}`: even entries on the diagonal blocks, odd entries off them.
    Super(usize, usize),
}

impl Block {
    /// Number of complex parameters.
    pub fn complex_dim(&self) -> usize {
        match *self {
            Block::Full(n) => n * n,
            Block::Super(a, b) => 2 * (a + b) * (a + b),
        }
    }

    /// Parameters along `th1`, `th2` or `th1 th2`.
    pub fn radical_dim(&self) -> usize {
        match *self {
            Block::Full(_) => 0,
            Block::Super(a, b) => a * a + b * b + 4 * a * b,
        }
    }

    /// Dimensions of the simple matrix blocks of the semisimple quotient.
    pub fn semisimple_dims(&self) -> Vec<usize> {
        match *self {
            Block::Full(n) => vec![n * n],
            Block::Super(a, b) => vec![a * a, b * b],
        }
    }

    /// Complex dimension of one column (a projective indecomposable).
    pub fn column_dim(&self) -> usize {
        match *self {
            Block::Full(n) => n,
            Block::Super(a, b) => 2 * (a + b),
        }
    }
}

/// `M_N (+) M_{N-1|1} (+) ... (+) M_{(N+1)/2|(N-1)/2}`.
#[derive(Clone, Debug)]
pub struct BlockModel {
    pub n: usize,
    pub blocks: Vec<Block>,
}

impl BlockModel {
    pub fn new(n: usize) -> BlockModel {
        let mut blocks = vec![Block::Full(n)];
        for p in 1..=(n - 1) / 2 {
            blocks.push(Block::Super(n - p, p));
        }
        BlockModel { n, blocks }
    }

    pub fn complex_dim(&self) -> usize {
        self.blocks.iter().map(Block::complex_dim).sum()
    }

    pub fn radical_dim(&self) -> usize {
        self.blocks.iter().map(Block::radical_dim).sum()
    }

    pub fn semisimple_dims(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(Block::semisimple_dims).collect()
    }

    /// Compares the counts with `H`: total dimension, radical, quotient blocks, PIM dimensions.
    pub fn check_against(&self, h: &HAlgebra, rad: &RadicalReport, catalog: &Catalog) -> Result<()> {
        let n = self.n;
        if self.complex_dim() != h.dim() {
            return Err(Error::CheckFailed(alloc::format!("block model has dimension {} != {}", self.complex_dim(), h.dim())));
        }
        if self.radical_dim() != rad.dim() {
            return Err(Error::CheckFailed(alloc::format!("block radical {} != computed radical {}", self.radical_dim(), rad.dim())));
        }
        if self.semisimple_dims() != rad.block_dims {
            return Err(Error::CheckFailed(alloc::format!("quotient blocks {:?} != {:?}", self.semisimple_dims(), rad.block_dims)));
        }
        for b in &self.blocks {
            match *b {
                Block::Full(k) => {
                    if catalog.irr().dim() != b.column_dim() || k != n {
                        return Err(Error::CheckFailed(String::from("irreducible projective has the wrong dimension")));
                    }
                }
                Block::Super(a, p) => {
                    for k in [a, p] {
                        if catalog.pim(k).dim() != b.column_dim() {
                            return Err(Error::CheckFailed(alloc::format!("P_{k} has dimension {}", catalog.pim(k).dim())));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Square matrix over Gr(2) with an even/odd block pattern of sizes `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    pub a: usize,
    pub b: usize,
    pub entries: Vec<Gr2Scalar>,
}

impl SuperMatrix {
    pub fn zero(field: &Arc<CycField>, a: usize, b: usize) -> SuperMatrix {
        let n = a + b;
        SuperMatrix { a, b, entries: vec![Gr2Scalar::zero(field); n * n] }
    }

    pub fn size(&self) -> usize {
        self.a + self.b
    }

    pub fn get(&self, i: usize, j: usize) -> &Gr2Scalar {
        &self.entries[i * self.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gr2Scalar) {
        let n = self.size();
        self.entries[i * n + j] = v;
    }

    fn even_slot(&self, i: usize, j: usize) -> bool {
        (i < self.a) == (j < self.a)
    }

    /// Entries respect the even/odd pattern.
    pub fn has_block_parity(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| if self.even_slot(i, j) { self.get(i, j).is_even() } else { self.get(i, j).is_odd() }))
    }

    /// All entries are Grassmann-supported.
    pub fn is_radical(&self) -> bool {
        self.entries.iter().all(Gr2Scalar::is_nilpotent)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Gr2Scalar::is_zero)
    }

    pub fn mul(&self, o: &SuperMatrix) -> SuperMatrix {
        let n = self.size();
        let field = self.entries[0].alpha.field().clone();
        let mut out = SuperMatrix::zero(&field, self.a, self.b);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Gr2Scalar::zero(&field);
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(o.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

/// Vectors `e_i` of the standard basis as a list; handy for seeds.
pub fn standard_basis(field: &Arc<CycField>, n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(field, n, i)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn setup(n: u32) -> (Arc<CycField>, HAlgebra) {
        let f = CycField::new(n).unwrap();
        let h = HAlgebra::new(&f);
        (f, h)
    }

    #[test]
    fn catalog_n3() {
        let (f, h) = setup(3);
        let cat = Catalog::new(&h);
        for m in cat.modules() {
            m.check_relations().unwrap();
            assert!(is_indecomposable(&m), "{:?}", m.label());
        }
        let simples: Vec<_> = (1..=3).map(|k| cat.simple(k).clone()).collect();
        assert_eq!(radical_of_module(cat.pim(1), &simples).dim(), 5);
        assert_eq!(radical_of_module(cat.pim(2), &simples).dim(), 4);
        assert_eq!(cat.simple(2).qdim(), CycScalar::from_int(&f, -1));
        let two = cat.simple(2);
        let rep = decompose_named(&two.tensor(two), &cat.modules()).unwrap();
        rep.verify(&two.tensor(two)).unwrap();
        assert_eq!(rep.labels(), vec!["1", "3_irr"]);
    }

    #[test]
    fn chains_n3() {
        let (f, h) = setup(3);
        let cat = Catalog::new(&h);
        let simples: Vec<_> = (1..=3).map(|k| cat.simple(k).clone()).collect();
        for k in 1..3 {
            for l in [0i64, 1, 2] {
                let c = submodule_chain(cat.pim(k), &simples, &CycScalar::from_int(&f, l)).unwrap();
                assert_eq!(c.top, k);
                assert_eq!(c.intermediate.dim(), 3);
            }
        }
    }

    #[test]
    fn radical_n3() {
        let (_, h) = setup(3);
        let r = radical(&h).unwrap();
        assert_eq!(r.dim(), 13);
        assert_eq!(r.block_dims, vec![9, 4, 1]);
        check_radical_ideal(&h, &r.radical).unwrap();
        check_quotient_semisimple(&h, &r.radical).unwrap();
        BlockModel::new(3).check_against(&h, &r, &Catalog::new(&h)).unwrap();
    }

    #[test]
    fn tensor_table_n3() {
        let (_, h) = setup(3);
        let cat = Catalog::new(&h);
        let rows: [(&str, &str, &[&str]); 12] = [
            ("2", "2", &["1", "3_irr"]),
            ("2", "3_irr", &["6_eve"]),
            ("3_irr", "3_irr", &["3_irr", "6_odd"]),
            ("6_eve", "2", &["3_irr", "3_irr", "6_odd"]),
            ("6_odd", "2", &["3_irr", "3_irr", "6_eve"]),
            ("2", "6_eve", &["3_irr", "3_irr", "6_odd"]),
            ("2", "6_odd", &["3_irr", "3_irr", "6_eve"]),
            ("6_eve", "3_irr", &["3_irr", "3_irr", "6_eve", "6_eve"]),
            ("6_odd", "3_irr", &["3_irr", "3_irr", "6_eve", "6_eve"]),
            // Computed values, confirmed by the tops count in `projective_tops_n3`.
            ("6_eve", "6_eve", &["3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"]),
            ("6_eve", "6_odd", &["3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"]),
            ("6_odd", "6_odd", &["3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"]),
        ];
        for (a, b, want) in rows {
            let v = cat.get(a).unwrap().tensor(cat.get(b).unwrap());
            let rep = decompose_named(&v, &cat.modules()).unwrap();
            rep.verify(&v).unwrap();
            assert_eq!(rep.labels(), want, "{a} x {b}");
        }
    }

    /// A projective module is the sum of the covers of its top, so the
    /// multiplicity of `P_k` is `dim Hom(V, L_k)` and that of `L_N` is
    /// `dim Hom(V, L_N)`.
    #[test]
    fn projective_tops_n3() {
        let (_, h) = setup(3);
        let cat = Catalog::new(&h);
        for (a, b) in [("6_eve", "6_eve"), ("6_eve", "6_odd"), ("6_odd", "6_odd"), ("6_odd", "3_irr")] {
            let v = cat.get(a).unwrap().tensor(cat.get(b).unwrap());
            let tops: Vec<usize> = (1..=3).map(|k| hom_space(&v, cat.simple(k)).len()).collect();
            let want = if b == "3_irr" { vec![0, 2, 2] } else { vec![2, 2, 4] };
            assert_eq!(tops, want, "{a} x {b}");
        }
    }

    #[test]
    fn intermediate_depends_on_lambda() {
        let (f, h) = setup(3);
        let cat = Catalog::new(&h);
        let simples: Vec<_> = (1..=3).map(|k| cat.simple(k).clone()).collect();
        let a = submodule_chain(cat.pim(1), &simples, &CycScalar::zero(&f)).unwrap();
        let b = submodule_chain(cat.pim(1), &simples, &CycScalar::one(&f)).unwrap();
        assert!(!a.intermediate.same_as(&b.intermediate));
        assert!(cat.pim(1).is_invariant(&a.intermediate));
        assert!(cat.pim(1).is_invariant(&b.intermediate));
    }

    #[test]
    fn n5_structure() {
        let (f, h) = setup(5);
        let r = radical(&h).unwrap();
        assert_eq!(r.dim(), 70);
        assert_eq!(r.block_dims, vec![25, 16, 1, 9, 4]);
        let cat = Catalog::new(&h);
        BlockModel::new(5).check_against(&h, &r, &cat).unwrap();
        for k in 1..5 {
            assert_eq!(cat.simple(k).qdim(), CycScalar::qnumber(&f, k as i64));
            assert!(cat.pim(k).qdim().is_zero());
        }
        let three = cat.simple(3);
        let v = three.tensor(three);
        let rep = decompose_named(&v, &cat.modules()).unwrap();
        rep.verify(&v).unwrap();
        assert_eq!(rep.labels(), vec!["1", "3", "5_irr"]);
    }
}
