//! Exact linear algebra over `Q(q)`: dense matrices plus a sparse echelon
//! form used for ranks, null spaces, subspace membership and coordinates.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::{CycField, CycScalar};

pub type Vector = Vec<CycScalar>;
pub type SparseRow = Vec<(usize, CycScalar)>;

pub fn zero_vector(field: &Arc<CycField>, n: usize) -> Vector {
    vec![CycScalar::zero(field); n]
}

pub fn unit_vector(field: &Arc<CycField>, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = CycScalar::one(field);
    v
}

pub fn is_zero_vector(v: &[CycScalar]) -> bool {
    v.iter().all(CycScalar::is_zero)
}

pub fn sparse(v: &[CycScalar]) -> SparseRow {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn add_vectors(a: &[CycScalar], b: &[CycScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vector(c: &CycScalar, v: &[CycScalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}; ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![CycScalar::zero(field); rows * cols] }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, CycScalar::one(field));
        }
        m
    }

    pub fn from_fn(field: &Arc<CycField>, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycScalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Arc<CycField>, rows: usize, cols: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &CycScalar) {
        let k = i * self.cols + j;
        self.data[k] = &self.data[k] + v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            }))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = zero_vector(&self.field, self.rows);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] = &out[i] + &(a * vj);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &CycScalar) -> Matrix {
        let data = self.data.iter().map(|a| c * a).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(&self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero(&self.field);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            e.insert(&self.row(i));
        }
        e.rank()
    }

    /// Basis of `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Vec<Vector> {
        let rows: Vec<SparseRow> = (0..self.rows).map(|i| sparse(&self.row(i))).collect();
        nullspace(&self.field, &rows, self.cols)
    }

    /// Basis of the column space.
    pub fn image(&self) -> Vec<Vector> {
        Subspace::span(&self.field, self.rows, &self.columns()).basis().to_vec()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let cols = self.columns();
        let sub = Subspace::span(&self.field, n, &cols);
        if sub.dim() != n {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            let c = sub.coords_in_spanning_set(&unit_vector(&self.field, n, i))?;
            for j in 0..n {
                inv.set(j, i, c[j].clone());
            }
        }
        Some(inv)
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[CycScalar]) -> Option<Vector> {
        let sub = Subspace::span(&self.field, self.rows, &self.columns());
        sub.coords_in_spanning_set(b)
    }

    /// First entry where two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != other.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Row echelon form with sparse rows; rows can carry how they were combined
/// from the inserted vectors.
#[derive(Clone)]
pub struct Echelon {
    field: Arc<CycField>,
    ncols: usize,
    pivots: BTreeMap<usize, (SparseRow, BTreeMap<usize, CycScalar>)>,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: &Arc<CycField>, ncols: usize) -> Echelon {
        Echelon { field: field.clone(), ncols, pivots: BTreeMap::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduce `row` against the pivots; returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce_sparse(&self, row: SparseRow) -> (BTreeMap<usize, CycScalar>, BTreeMap<usize, CycScalar>) {
        let mut r: BTreeMap<usize, CycScalar> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut comb: BTreeMap<usize, CycScalar> = BTreeMap::new();
        let mut cursor = 0usize;
        loop {
            let next = r.range(cursor..).next().map(|(c, v)| (*c, v.clone()));
            let Some((c, val)) = next else { break };
            if let Some((prow, pcomb)) = self.pivots.get(&c) {
                for (j, pv) in prow {
                    let e = r.entry(*j).or_insert_with(|| CycScalar::zero(&self.field));
                    *e = &*e - &(&val * pv);
                    if e.is_zero() {
                        r.remove(j);
                    }
                }
                for (j, pv) in pcomb {
                    let e = comb.entry(*j).or_insert_with(|| CycScalar::zero(&self.field));
                    *e = &*e + &(&val * pv);
                }
            }
            cursor = c + 1;
        }
        (r, comb)
    }

    pub fn reduce(&self, v: &[CycScalar]) -> Vector {
        let (r, _) = self.reduce_sparse(sparse(v));
        let mut out = zero_vector(&self.field, self.ncols);
        for (j, c) in r {
            out[j] = c;
        }
        out
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        self.reduce_sparse(sparse(v)).0.is_empty()
    }

    /// Insert a vector; returns `true` if it was independent of the previous ones.
    pub fn insert(&mut self, v: &[CycScalar]) -> bool {
        self.insert_sparse(sparse(v))
    }

    pub fn insert_sparse(&mut self, row: SparseRow) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (r, comb) = self.reduce_sparse(row);
        let Some((&lead, lv)) = r.iter().next() else { return false };
        let inv = lv.inv().expect("nonzero pivot");
        let prow: SparseRow = r.iter().map(|(j, c)| (*j, c * &inv)).collect();
        // new row = (v - comb) / lead
        let mut pcomb: BTreeMap<usize, CycScalar> = comb.into_iter().map(|(j, c)| (j, -(&c * &inv))).collect();
        pcomb.insert(idx, inv);
        pcomb.retain(|_, c| !c.is_zero());
        self.pivots.insert(lead, (prow, pcomb));
        true
    }

    /// Express `v` in terms of the inserted vectors, if it lies in their span.
    pub fn combination(&self, v: &[CycScalar]) -> Option<Vector> {
        let (r, comb) = self.reduce_sparse(sparse(v));
        if !r.is_empty() {
            return None;
        }
        let mut out = zero_vector(&self.field, self.inserted);
        for (j, c) in comb {
            out[j] = c;
        }
        Some(out)
    }

    /// Basis of the solutions of `row . x = 0` for all inserted rows.
    pub fn nullspace(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = zero_vector(&self.field, self.ncols);
            x[f] = CycScalar::one(&self.field);
            for (&c, (prow, _)) in self.pivots.iter().rev() {
                let mut s = CycScalar::zero(&self.field);
                for (j, a) in prow {
                    if *j != c && !x[*j].is_zero() {
                        s += &(a * &x[*j]);
                    }
                }
                x[c] = -s;
            }
            out.push(x);
        }
        out
    }
}

/// Null space of a system given by sparse rows.
pub fn nullspace(field: &Arc<CycField>, rows: &[SparseRow], ncols: usize) -> Vec<Vector> {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert_sparse(r.clone());
    }
    e.nullspace()
}

/// A subspace of `Q(q)^n` with an independent basis.
#[derive(Clone)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    echelon: Echelon,
    /// Index in the spanning list of each basis vector.
    kept: Vec<usize>,
    spanned: usize,
}

impl Subspace {
    pub fn zero(field: &Arc<CycField>, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), echelon: Echelon::new(field, ambient), kept: Vec::new(), spanned: 0 }
    }

    pub fn full(field: &Arc<CycField>, ambient: usize) -> Subspace {
        let basis: Vec<Vector> = (0..ambient).map(|i| unit_vector(field, ambient, i)).collect();
        Subspace::span(field, ambient, &basis)
    }

    pub fn span(field: &Arc<CycField>, ambient: usize, vectors: &[Vector]) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for (i, v) in vectors.iter().enumerate() {
            if s.echelon.insert(v) {
                s.basis.push(v.clone());
                s.kept.push(i);
            }
        }
        s.spanned = vectors.len();
        s.rebuild();
        s
    }

    fn rebuild(&mut self) {
        let mut e = Echelon::new(&self.echelon.field, self.ambient);
        for b in &self.basis {
            e.insert(b);
        }
        self.echelon = e;
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.echelon.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_space(other)
    }

    /// Coordinates of `v` with respect to `basis()`.
    pub fn coords(&self, v: &[CycScalar]) -> Option<Vector> {
        self.echelon.combination(v)
    }

    /// Coordinates relative to the original spanning list passed to `span`
    /// (zero on discarded dependent vectors).
    fn coords_in_spanning_set(&self, v: &[CycScalar]) -> Option<Vector> {
        let c = self.coords(v)?;
        let mut out = zero_vector(self.field(), self.spanned);
        for (bi, &orig) in self.kept.iter().enumerate() {
            out[orig] = c[bi].clone();
        }
        Some(out)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field(), self.ambient, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // Solve sum a_i u_i = sum b_j w_j.
        let k = self.dim();
        let cols: Vec<Vector> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|w| w.iter().map(|c| -c).collect()))
            .collect();
        let m = Matrix::from_columns(self.field(), self.ambient, &cols);
        let vecs: Vec<Vector> = m
            .kernel()
            .into_iter()
            .map(|sol| {
                let mut v = zero_vector(self.field(), self.ambient);
                for i in 0..k {
                    if !sol[i].is_zero() {
                        v = add_vectors(&v, &scale_vector(&sol[i], &self.basis[i]));
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.field(), self.ambient, &vecs)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<Vector> = self.basis.iter().map(|b| m.apply(b)).collect();
        Subspace::span(self.field(), m.rows(), &imgs)
    }

    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in `basis()` coordinates.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field(), d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let c = self.coords(&m.apply(b))?;
            for i in 0..d {
                out.set(i, j, c[i].clone());
            }
        }
        Some(out)
    }

    /// A complement spanned by standard basis vectors.
    pub fn complement(&self) -> Subspace {
        let f = self.field().clone();
        let mut extra = Vec::new();
        let mut e = self.echelon.clone();
        for i in 0..self.ambient {
            let u = unit_vector(&f, self.ambient, i);
            if e.insert(&u) {
                extra.push(u);
            }
        }
        Subspace::span(&f, self.ambient, &extra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &Arc<CycField>, v: &[i64]) -> Vector {
        v.iter().map(|&k| CycScalar::from_int(f, k)).collect()
    }

    #[test]
    fn rank_kernel_inverse() {
        let f = CycField::new(3).unwrap();
        let m = Matrix::from_fn(&f, 3, 3, |i, j| CycScalar::from_int(&f, (i * 3 + j) as i64));
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vector(&m.apply(&k[0])));
        let a = Matrix::from_fn(&f, 3, 3, |i, j| {
            if i == j {
                CycScalar::q(&f)
            } else if j == i + 1 {
                CycScalar::from_int(&f, 2)
            } else {
                CycScalar::zero(&f)
            }
        });
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
        assert!(m.inverse().is_none());
    }

    #[test]
    fn subspaces() {
        let f = CycField::new(5).unwrap();
        let a = Subspace::span(&f, 3, &[ints(&f, &[1, 0, 0]), ints(&f, &[0, 1, 0])]);
        let b = Subspace::span(&f, 3, &[ints(&f, &[0, 1, 0]), ints(&f, &[0, 0, 1])]);
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.complement().dim(), 1);
        let c = a.coords(&ints(&f, &[2, 3, 0])).unwrap();
        assert_eq!(c, ints(&f, &[2, 3]));
        assert!(a.coords(&ints(&f, &[0, 0, 1])).is_none());
    }

    #[test]
    fn solve_system() {
        let f = CycField::new(3).unwrap();
        let m = Matrix::from_fn(&f, 2, 3, |i, j| CycScalar::from_int(&f, (i + j) as i64));
        let b = ints(&f, &[1, 2]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
    }
}
