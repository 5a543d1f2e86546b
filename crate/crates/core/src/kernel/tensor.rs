use serde::{Deserialize, Serialize};

use super::{KernelError, Matrix, Scalar};

/// Dense row-major tensor. Factors are numbered from 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Tensor {
    dims: Vec<usize>,
    entries: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dims: &[usize]) -> Self {
        let len = dims.iter().product();
        Tensor {
            dims: dims.to_vec(),
            entries: vec![Scalar::zero(); len],
        }
    }

    /// Every factor of extent `n`.
    pub fn cube(n: usize, rank: usize) -> Self {
        Tensor::zeros(&vec![n; rank])
    }

    pub fn from_entries(dims: &[usize], entries: Vec<Scalar>) -> Result<Self, KernelError> {
        let len: usize = dims.iter().product();
        if entries.len() != len {
            return Err(KernelError::Extent(format!(
                "tensor with extents {dims:?} needs {len} entries, got {}",
                entries.len()
            )));
        }
        Ok(Tensor {
            dims: dims.to_vec(),
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len(), "index rank mismatch");
        let mut off = 0;
        for (&i, &d) in idx.iter().zip(&self.dims) {
            assert!(
                i < d,
                "index {idx:?} out of range for extents {:?}",
                self.dims
            );
            off = off * d + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.entries[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.entries[o] = v;
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Scalar {
        let o = self.offset(idx);
        &mut self.entries[o]
    }

    /// Contiguous run of entries along the last factor, with all leading
    /// indices fixed by `prefix`.
    pub fn fiber(&self, prefix: &[usize]) -> &[Scalar] {
        assert_eq!(
            prefix.len() + 1,
            self.dims.len(),
            "fiber prefix rank mismatch"
        );
        let last = *self.dims.last().unwrap();
        let mut off = 0;
        for (&i, &d) in prefix.iter().zip(&self.dims) {
            assert!(
                i < d,
                "index {prefix:?} out of range for extents {:?}",
                self.dims
            );
            off = off * d + i;
        }
        &self.entries[off * last..(off + 1) * last]
    }

    /// Sub-tensor with the leading indices fixed.
    pub fn slice(&self, prefix: &[usize]) -> Tensor {
        let rest = &self.dims[prefix.len()..];
        let len: usize = rest.iter().product();
        let mut off = 0;
        for (&i, &d) in prefix.iter().zip(&self.dims) {
            assert!(i < d);
            off = off * d + i;
        }
        Tensor {
            dims: rest.to_vec(),
            entries: self.entries[off * len..(off + 1) * len].to_vec(),
        }
    }

    /// All multi-indices in lexicographic order.
    pub fn indices(&self) -> MultiIndex {
        MultiIndex::new(&self.dims)
    }

    /// Nonzero entries with their multi-indices, in lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> {
        let dims = self.dims.clone();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| (unravel(o, &dims), v))
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "extent mismatch in tensor sum");
        Tensor {
            dims: self.dims.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(
            self.dims, other.dims,
            "extent mismatch in tensor difference"
        );
        Tensor {
            dims: self.dims.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Tensor {
        Tensor {
            dims: self.dims.clone(),
            entries: self.entries.iter().map(|v| a * v).collect(),
        }
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, a: &Scalar, other: &Tensor) {
        assert_eq!(self.dims, other.dims, "extent mismatch in tensor sum");
        super::vector::axpy(&mut self.entries, a, &other.entries);
    }

    /// Exchanges tensor factors `i` and `j` (the switching operator τ).
    pub fn transpose_factors(&self, i: usize, j: usize) -> Result<Tensor, KernelError> {
        let r = self.rank();
        if i >= r || j >= r {
            return Err(KernelError::Index(format!(
                "factor {} out of range for a rank-{r} tensor",
                i.max(j)
            )));
        }
        if i == j {
            return Err(KernelError::Index(format!(
                "cannot swap factor {i} with itself"
            )));
        }
        let mut perm: Vec<usize> = (0..r).collect();
        perm.swap(i, j);
        Ok(self.permute_factors(&perm))
    }

    /// Result factor `k` is input factor `perm[k]`.
    pub fn permute_factors(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.rank());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zeros(&dims);
        let mut src = vec![0; self.rank()];
        for (idx, v) in self.nonzero() {
            for (k, &p) in perm.iter().enumerate() {
                src[k] = idx[p];
            }
            out.set(&src, v.clone());
        }
        out
    }

    /// Applies `m` to factor `f`: `(1 ⊗ .. ⊗ m ⊗ .. ⊗ 1)`. `m[l][k]` is the
    /// coefficient of `e_l` in `m(e_k)`.
    pub fn map_factor(&self, f: usize, m: &Matrix) -> Tensor {
        assert_eq!(m.cols(), self.dims[f], "map does not match factor extent");
        let mut dims = self.dims.clone();
        dims[f] = m.rows();
        let mut out = Tensor::zeros(&dims);
        for (idx, v) in self.nonzero() {
            let mut tgt = idx.clone();
            for l in 0..m.rows() {
                let c = m.get(l, idx[f]);
                if c.is_zero() {
                    continue;
                }
                tgt[f] = l;
                *out.get_mut(&tgt) += v * c;
            }
        }
        out
    }

    /// Replaces factor `f` by the factors of `op(e_k)`, where `op` is a
    /// tensor whose first index is `k` (e.g. a coproduct `Δ[k][i][j]`).
    pub fn expand_factor(&self, f: usize, op: &Tensor) -> Tensor {
        assert_eq!(
            op.dims[0], self.dims[f],
            "operator does not match factor extent"
        );
        let extra = &op.dims[1..];
        let mut dims = self.dims[..f].to_vec();
        dims.extend_from_slice(extra);
        dims.extend_from_slice(&self.dims[f + 1..]);
        let mut out = Tensor::zeros(&dims);
        let mut tgt = vec![0; dims.len()];
        for (idx, v) in self.nonzero() {
            let image = op.slice(&[idx[f]]);
            for (sub, c) in image.nonzero() {
                tgt[..f].copy_from_slice(&idx[..f]);
                tgt[f..f + sub.len()].copy_from_slice(&sub);
                tgt[f + sub.len()..].copy_from_slice(&idx[f + 1..]);
                *out.get_mut(&tgt) += v * c;
            }
        }
        out
    }

    /// First multi-index where the two tensors differ, in lexicographic order.
    pub fn first_difference(&self, other: &Tensor) -> Option<Vec<usize>> {
        assert_eq!(self.dims, other.dims);
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|o| unravel(o, &self.dims))
    }
}

fn unravel(mut o: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = o % dims[k];
        o /= dims[k];
    }
    idx
}

/// Lexicographic odometer over `0..d0 × 0..d1 × ...`.
#[derive(Clone, Debug)]
pub struct MultiIndex {
    dims: Vec<usize>,
    cur: Option<Vec<usize>>,
}

impl MultiIndex {
    pub fn new(dims: &[usize]) -> Self {
        let cur = if dims.contains(&0) {
            None
        } else {
            Some(vec![0; dims.len()])
        };
        MultiIndex {
            dims: dims.to_vec(),
            cur,
        }
    }
}

impl Iterator for MultiIndex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().unwrap();
        let mut k = self.dims.len();
        loop {
            if k == 0 {
                self.cur = None;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < self.dims[k] {
                break;
            }
            cur[k] = 0;
        }
        Some(out)
    }
}

/// `Σ_{σ∈S3} sgn(σ) e_σ(u) ⊗ e_σ(v) ⊗ e_σ(w)` with 0-based indices, no
/// factorial normalization.
pub fn wedge3(u: usize, v: usize, w: usize, n: usize) -> Result<Tensor, KernelError> {
    if u >= n || v >= n || w >= n {
        return Err(KernelError::Index(format!(
            "wedge index out of range for dimension {n}"
        )));
    }
    let mut t = Tensor::cube(n, 3);
    let args = [u, v, w];
    for (p, sign) in super::perm::S3 {
        let idx = [args[p[0]], args[p[1]], args[p[2]]];
        *t.get_mut(&idx) += Scalar::from_int(sign);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis2(n: usize, i: usize, j: usize) -> Tensor {
        let mut t = Tensor::cube(n, 2);
        t.set(&[i, j], Scalar::one());
        t
    }

    #[test]
    fn swap_basic_tensor() {
        let t = basis2(2, 0, 1);
        assert_eq!(t.transpose_factors(0, 1).unwrap(), basis2(2, 1, 0));
        let s = basis2(2, 0, 0);
        assert_eq!(s.transpose_factors(0, 1).unwrap(), s);
    }

    #[test]
    fn disjoint_swaps_compose() {
        let mut t = Tensor::cube(4, 4);
        t.set(&[0, 1, 2, 3], Scalar::one());
        let r = t
            .transpose_factors(1, 3)
            .unwrap()
            .transpose_factors(0, 2)
            .unwrap();
        let mut expect = Tensor::cube(4, 4);
        expect.set(&[2, 3, 0, 1], Scalar::one());
        assert_eq!(r, expect);
    }

    #[test]
    fn swap_rejects_bad_factors() {
        let t = Tensor::cube(2, 2);
        assert!(t.transpose_factors(0, 2).is_err());
        assert!(t.transpose_factors(1, 1).is_err());
    }

    #[test]
    fn wedge_entries() {
        let w = wedge3(0, 2, 3, 4).unwrap();
        assert_eq!(w.get(&[0, 2, 3]), &Scalar::one());
        assert_eq!(w.get(&[2, 0, 3]), &Scalar::from_int(-1));
        assert_eq!(w.nonzero().count(), 6);
        assert!(wedge3(0, 0, 1, 4).unwrap().is_zero());
        assert!(wedge3(0, 1, 4, 4).is_err());
    }

    #[test]
    fn multi_index_order() {
        let all: Vec<_> = MultiIndex::new(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[3], vec![1, 0]);
        assert_eq!(MultiIndex::new(&[2, 0]).count(), 0);
        assert_eq!(MultiIndex::new(&[]).count(), 1);
    }

    #[test]
    fn expand_factor_matches_manual() {
        // op(e0) = e1 ⊗ e1, applied to factor 1 of e0 ⊗ e0.
        let mut op = Tensor::cube(2, 3);
        op.set(&[0, 1, 1], Scalar::from_int(2));
        let t = basis2(2, 0, 0);
        let r = t.expand_factor(1, &op);
        assert_eq!(r.dims(), &[2, 2, 2]);
        assert_eq!(r.get(&[0, 1, 1]), &Scalar::from_int(2));
        assert_eq!(r.nonzero().count(), 1);
    }
}
