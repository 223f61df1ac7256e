//! Chain spaces `Lambda^k p_+ (x) g`, the homology boundary, Hodge theory and
//! the decomposition of the homology into irreducible Levi components.
//!
//! The boundary operator is the standard one computing Lie algebra homology
//! of `p_+` with coefficients in `g`; on a decomposable 2-chain it reads
//! `-Z2 (x) [Z1,v] + Z1 (x) [Z2,v] - [Z1,Z2] (x) v`, which pins all signs.
//! A global sign flip would change no kernel and no image; the convention
//! above is the one used throughout.
//!
//! Everything is organized by weight: the boundary commutes with the Cartan
//! action, so each weight block can be handled independently. This is what
//! makes degree sweeps over the larger algebras feasible. Homology is
//! computed twice — once as a quotient dimension count per block, once as a
//! harmonic space — and the two are reconciled before anything is reported.

use crate::algebra::GradedLieAlgebra;
use crate::linalg::{rat, QMatrix, Rational};
use crate::roots::{Weight, WeylElement};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Sparse vector over the chain basis of one degree.
pub type SparseChain = Vec<(u32, Rational)>;

/// Chain basis of degree `k`, grouped by weight.
///
/// A chain id encodes `(wedge, value)` as `wedge_index * dim(g) + value_index`
/// where the wedge index points into `wedges` (ascending index vectors over
/// the `p_plus` basis, lexicographic order).
pub struct ChainDegree {
    pub k: usize,
    pub wedges: Vec<Vec<u16>>,
    wedge_rank: HashMap<Vec<u16>, u32>,
    /// packed weight -> sorted chain ids
    pub blocks: BTreeMap<u64, Vec<u32>>,
    /// weight of each wedge (shared prefix of the chain weight)
    wedge_weight: Vec<Weight>,
    gdim: usize,
}

pub fn pack_weight(w: &[i64]) -> u64 {
    let mut acc = 0u64;
    for &x in w {
        let b = x + 128;
        assert!((0..256).contains(&b), "weight coordinate {x} out of packing range");
        acc = (acc << 8) | b as u64;
    }
    acc
}

pub fn unpack_weight(mut key: u64, rank: usize) -> Weight {
    let mut out = vec![0i64; rank];
    for i in (0..rank).rev() {
        out[i] = (key & 0xff) as i64 - 128;
        key >>= 8;
    }
    out
}

impl ChainDegree {
    pub fn dim(&self) -> usize {
        self.wedges.len() * self.gdim
    }

    pub fn chain_id(&self, wedge: &[u16], value: usize) -> u32 {
        self.wedge_rank[wedge] * self.gdim as u32 + value as u32
    }

    pub fn wedge_of(&self, chain: u32) -> &[u16] {
        &self.wedges[(chain / self.gdim as u32) as usize]
    }

    pub fn value_of(&self, chain: u32) -> usize {
        (chain % self.gdim as u32) as usize
    }

    pub fn weight_of(&self, g: &GradedLieAlgebra, chain: u32) -> Weight {
        let mut w = self.wedge_weight[(chain / self.gdim as u32) as usize].clone();
        for (a, b) in w.iter_mut().zip(g.weight(self.value_of(chain))) {
            *a += b;
        }
        w
    }

    pub fn homogeneity_of(&self, g: &GradedLieAlgebra, chain: u32) -> i64 {
        let wedge = self.wedge_of(chain);
        let p_plus = g.p_plus_indices();
        let mut h: i64 = wedge.iter().map(|&i| g.grade(p_plus[i as usize])).sum();
        h += g.grade(self.value_of(chain));
        h
    }
}

/// Enumerates the chain basis of degree `k` and its weight blocks.
pub fn chain_degree(g: &GradedLieAlgebra, k: usize) -> ChainDegree {
    let p_plus = g.p_plus_indices();
    let gdim = g.dim();
    let rank = g.rs.rank;
    let mut wedges: Vec<Vec<u16>> = Vec::new();
    if k <= p_plus.len() {
        let mut combo: Vec<u16> = (0..k as u16).collect();
        loop {
            wedges.push(combo.clone());
            if !next_combination(&mut combo, p_plus.len()) {
                break;
            }
        }
    }
    let wedge_rank: HashMap<Vec<u16>, u32> =
        wedges.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
    let wedge_weight: Vec<Weight> = wedges
        .iter()
        .map(|w| {
            let mut acc = vec![0i64; rank];
            for &i in w {
                for (a, b) in acc.iter_mut().zip(g.weight(p_plus[i as usize])) {
                    *a += b;
                }
            }
            acc
        })
        .collect();

    let mut blocks: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (wi, wweight) in wedge_weight.iter().enumerate() {
        for v in 0..gdim {
            let mut weight = wweight.clone();
            for (a, b) in weight.iter_mut().zip(g.weight(v)) {
                *a += b;
            }
            let id = (wi * gdim + v) as u32;
            blocks.entry(pack_weight(&weight)).or_default().push(id);
        }
    }
    ChainDegree { k, wedges, wedge_rank, blocks, wedge_weight, gdim }
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [u16], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if (combo[i] as usize) < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Boundary of a single chain, as a sparse vector over degree `k-1` ids.
pub fn boundary_of_chain(
    g: &GradedLieAlgebra,
    p_plus: &[usize],
    p_plus_pos: &[Option<u16>],
    deg_k: &ChainDegree,
    deg_km1: &ChainDegree,
    chain: u32,
) -> SparseChain {
    let wedge = deg_k.wedge_of(chain);
    let v = deg_k.value_of(chain);
    let k = wedge.len();
    let mut out: HashMap<u32, Rational> = HashMap::new();
    let mut push = |id: u32, c: Rational| {
        let entry = out.entry(id).or_insert_with(Rational::zero);
        *entry += c;
    };

    // sum_t (-1)^{t+1} (wedge \ t) (x) [Z_t, v]
    for t in 0..k {
        let sign = if t % 2 == 0 { -1i64 } else { 1 };
        let mut rest: Vec<u16> = wedge.to_vec();
        rest.remove(t);
        for &(target, ref c) in g.bracket_basis(p_plus[wedge[t] as usize], v) {
            let id = deg_km1.chain_id(&rest, target);
            push(id, rat(sign) * c);
        }
    }

    // sum_{s<t} (-1)^{s+t} [Z_s, Z_t] ^ (wedge \ {s,t}) (x) v
    for s in 0..k {
        for t in s + 1..k {
            let sign = if (s + t) % 2 == 0 { 1i64 } else { -1 };
            let mut rest: Vec<u16> = wedge.to_vec();
            rest.remove(t);
            rest.remove(s);
            for &(target, ref c) in
                g.bracket_basis(p_plus[wedge[s] as usize], p_plus[wedge[t] as usize])
            {
                let Some(u) = p_plus_pos[target] else {
                    unreachable!("bracket of p_+ elements stays in p_+");
                };
                if rest.contains(&u) {
                    continue;
                }
                let pos = rest.iter().filter(|&&x| x < u).count();
                let ins_sign = if pos % 2 == 0 { 1i64 } else { -1 };
                let mut merged = rest.clone();
                merged.insert(pos, u);
                let id = deg_km1.chain_id(&merged, v);
                push(id, rat(sign * ins_sign) * c);
            }
        }
    }

    let mut result: SparseChain =
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    result.sort_by_key(|&(id, _)| id);
    result
}

/// Position of each algebra basis index inside the `p_plus` list.
pub fn p_plus_positions(g: &GradedLieAlgebra, p_plus: &[usize]) -> Vec<Option<u16>> {
    let mut pos = vec![None; g.dim()];
    for (i, &idx) in p_plus.iter().enumerate() {
        pos[idx] = Some(i as u16);
    }
    pos
}

/// Sparse-column matrix of the boundary from degree `k` to degree `k-1`.
pub struct ChainMap {
    pub from_degree: usize,
    pub dim_from: usize,
    pub dim_to: usize,
    pub cols: Vec<SparseChain>,
}

impl ChainMap {
    pub fn apply(&self, x: &SparseChain) -> SparseChain {
        let mut acc: HashMap<u32, Rational> = HashMap::new();
        for &(i, ref c) in x {
            for &(j, ref d) in &self.cols[i as usize] {
                let e = acc.entry(j).or_insert_with(Rational::zero);
                *e += c * d;
            }
        }
        let mut out: SparseChain = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by_key(|&(id, _)| id);
        out
    }

    pub fn compose(&self, inner: &ChainMap) -> ChainMap {
        // self o inner
        let cols = inner.cols.iter().map(|c| self.apply(c)).collect();
        ChainMap {
            from_degree: inner.from_degree,
            dim_from: inner.dim_from,
            dim_to: self.dim_to,
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}

/// The full boundary matrix in degree `k`; intended for desk-size algebras.
pub fn codifferential(g: &GradedLieAlgebra, k: usize) -> ChainMap {
    let p_plus = g.p_plus_indices();
    let pos = p_plus_positions(g, &p_plus);
    let deg_k = chain_degree(g, k);
    let deg_km1 = chain_degree(g, k - 1);
    let cols = (0..deg_k.dim() as u32)
        .map(|chain| boundary_of_chain(g, &p_plus, &pos, &deg_k, &deg_km1, chain))
        .collect();
    ChainMap { from_degree: k, dim_from: deg_k.dim(), dim_to: deg_km1.dim(), cols }
}

/// Gram matrix of the positive definite inner product on a weight block.
///
/// Wedge factors are pairwise orthogonal, so two chains pair nontrivially
/// only when they share the wedge; the value part uses the algebra Gram.
pub(crate) fn gram_block(g: &GradedLieAlgebra, p_plus: &[usize], deg: &ChainDegree, ids: &[u32]) -> QMatrix {
    let n = ids.len();
    let mut m = QMatrix::zeros(n, n);
    for (a, &ia) in ids.iter().enumerate() {
        let wa = deg.wedge_of(ia);
        let va = deg.value_of(ia);
        let wnorm: Rational = wa
            .iter()
            .map(|&i| g.gram_entry(p_plus[i as usize], p_plus[i as usize]).clone())
            .product();
        for (b, &ib) in ids.iter().enumerate().skip(a) {
            if deg.wedge_of(ib) != wa {
                continue;
            }
            let vb = deg.value_of(ib);
            let val = g.gram_entry(va, vb);
            if !val.is_zero() {
                let v = &wnorm * val;
                m[(a, b)] = v.clone();
                m[(b, a)] = v;
            }
        }
    }
    m
}

/// Boundary block: the matrix of the boundary restricted to the chains `ids`
/// of degree `k`, expressed over the chains `target_ids` of degree `k-1`
/// (both in one weight block). Rows = targets, columns = domain.
pub(crate) fn boundary_block(
    g: &GradedLieAlgebra,
    p_plus: &[usize],
    pos: &[Option<u16>],
    deg_k: &ChainDegree,
    deg_km1: &ChainDegree,
    ids: &[u32],
    target_ids: &[u32],
) -> QMatrix {
    let row_of: HashMap<u32, usize> =
        target_ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut m = QMatrix::zeros(target_ids.len(), ids.len());
    for (col, &chain) in ids.iter().enumerate() {
        for (id, c) in boundary_of_chain(g, p_plus, pos, deg_k, deg_km1, chain) {
            let row = *row_of
                .get(&id)
                .expect("boundary must preserve the weight block");
            m[(row, col)] = c;
        }
    }
    m
}

/// One irreducible Levi component of `H_k`.
#[derive(Clone)]
pub struct HomologyComponent {
    pub degree: usize,
    pub highest_weight: Weight,
    pub dim: usize,
    pub homogeneity: i64,
    /// Nonzero projection to chains with value part in negative grades.
    pub torsion: bool,
    /// Harmonic representatives spanning the component.
    pub harmonic_basis: Vec<SparseChain>,
    /// The highest weight vector (first element of the closure).
    pub hw_vector: SparseChain,
}

/// JSON shape for component tables.
#[derive(Debug, Serialize)]
pub struct ComponentRecord {
    pub degree: usize,
    pub highest_weight: Weight,
    pub dim: usize,
    pub homogeneity: i64,
    pub torsion: bool,
}

impl HomologyComponent {
    pub fn record(&self) -> ComponentRecord {
        ComponentRecord {
            degree: self.degree,
            highest_weight: self.highest_weight.clone(),
            dim: self.dim,
            homogeneity: self.homogeneity,
            torsion: self.torsion,
        }
    }
}

/// Linear action of an algebra basis element on chains (Leibniz over the
/// wedge factors and the value). Only grade-zero actions are used, so the
/// wedge slots stay inside `p_+`.
pub fn act_on_chain(
    g: &GradedLieAlgebra,
    p_plus: &[usize],
    pos: &[Option<u16>],
    deg: &ChainDegree,
    actor: usize,
    chain: u32,
) -> SparseChain {
    let wedge = deg.wedge_of(chain);
    let v = deg.value_of(chain);
    let mut acc: HashMap<u32, Rational> = HashMap::new();
    // value slot
    for &(target, ref c) in g.bracket_basis(actor, v) {
        let id = deg.chain_id(wedge, target);
        *acc.entry(id).or_insert_with(Rational::zero) += c.clone();
    }
    // wedge slots
    for t in 0..wedge.len() {
        for &(target, ref c) in g.bracket_basis(actor, p_plus[wedge[t] as usize]) {
            let u = pos[target].expect("grade-zero action preserves p_+");
            let mut rest: Vec<u16> = wedge.to_vec();
            rest.remove(t);
            if rest.contains(&u) {
                continue;
            }
            let p = rest.iter().filter(|&&x| x < u).count();
            // sign of moving u from slot t to sorted position p
            let sign = if (t + p) % 2 == 0 { 1i64 } else { -1 };
            let mut merged = rest;
            merged.insert(p, u);
            let id = deg.chain_id(&merged, v);
            *acc.entry(id).or_insert_with(Rational::zero) += rat(sign) * c;
        }
    }
    let mut out: SparseChain = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|&(id, _)| id);
    out
}

/// Harmonic data for one degree: per-block harmonic bases plus the rank data
/// of the two adjacent boundaries.
pub struct HarmonicDegree {
    pub k: usize,
    pub deg: ChainDegree,
    /// packed weight -> harmonic basis vectors (dense over the block ids)
    pub harmonic: BTreeMap<u64, Vec<Vec<Rational>>>,
    /// packed weight -> (block dim, rank of boundary out, rank of boundary in)
    pub ranks: BTreeMap<u64, (usize, usize, usize)>,
}

impl HarmonicDegree {
    pub fn total_harmonic_dim(&self) -> usize {
        self.harmonic.values().map(|v| v.len()).sum()
    }

    pub fn quotient_dim(&self) -> usize {
        self.ranks.values().map(|&(d, out, inn)| d - out - inn).sum()
    }
}

/// Computes harmonic spaces `ker(boundary) ∩ ker(adjoint boundary)` per
/// weight block, together with the quotient dimension data.
pub fn harmonic_degree(g: &GradedLieAlgebra, k: usize) -> HarmonicDegree {
    let p_plus = g.p_plus_indices();
    let pos = p_plus_positions(g, &p_plus);
    let deg_km1 = if k > 0 { Some(chain_degree(g, k - 1)) } else { None };
    let deg_k = chain_degree(g, k);
    let deg_kp1 = if k < p_plus.len() { Some(chain_degree(g, k + 1)) } else { None };
    let empty: Vec<u32> = Vec::new();

    let mut harmonic = BTreeMap::new();
    let mut ranks = BTreeMap::new();
    for (&key, ids) in &deg_k.blocks {
        let n = ids.len();
        // Boundary out of degree k.
        let d_out = match &deg_km1 {
            Some(dm) => {
                let targets = dm.blocks.get(&key).cloned().unwrap_or_default();
                boundary_block(g, &p_plus, &pos, &deg_k, dm, ids, &targets)
            }
            None => QMatrix::zeros(0, n),
        };
        // Boundary into degree k, from degree k+1 chains of the same weight.
        let d_in = match &deg_kp1 {
            Some(dp) => {
                let sources = dp.blocks.get(&key).map_or(&empty, |v| v);
                boundary_block(g, &p_plus, &pos, dp, &deg_k, sources, ids)
            }
            None => QMatrix::zeros(n, 0),
        };
        let rank_out = d_out.rank();
        let rank_in = d_in.rank();
        ranks.insert(key, (n, rank_out, rank_in));

        // Harmonic = ker d_out ∩ (im d_in)^perp  (the latter via the Gram).
        let gram = gram_block(g, &p_plus, &deg_k, ids);
        let ortho = d_in.transpose().mul(&gram);
        let mut stacked_rows: Vec<Vec<Rational>> = Vec::new();
        for r in 0..d_out.rows {
            stacked_rows.push(d_out.row(r).to_vec());
        }
        for r in 0..ortho.rows {
            stacked_rows.push(ortho.row(r).to_vec());
        }
        let kernel = if stacked_rows.is_empty() {
            (0..n)
                .map(|i| {
                    let mut e = vec![Rational::zero(); n];
                    e[i] = Rational::one();
                    e
                })
                .collect()
        } else {
            QMatrix::from_rows(stacked_rows).kernel_basis()
        };
        let quotient = n - rank_out - rank_in;
        assert_eq!(
            kernel.len(),
            quotient,
            "harmonic dimension disagrees with quotient dimension in a weight block"
        );
        if !kernel.is_empty() {
            harmonic.insert(key, kernel);
        }
    }
    HarmonicDegree { k, deg: deg_k, harmonic, ranks }
}

fn dense_block_to_sparse(ids: &[u32], v: &[Rational]) -> SparseChain {
    ids.iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&id, c)| (id, c.clone()))
        .collect()
}

/// Decomposes the harmonic space of degree `k` into irreducible Levi
/// components: group by grading eigenvalue and weight, find joint kernels of
/// the Levi raising operators, then generate each component by the lowering
/// operators.
pub fn homology_components(
    g: &GradedLieAlgebra,
    k: usize,
) -> Result<Vec<HomologyComponent>, String> {
    let hd = harmonic_degree(g, k);
    homology_components_from(g, &hd)
}

pub fn homology_components_from(
    g: &GradedLieAlgebra,
    hd: &HarmonicDegree,
) -> Result<Vec<HomologyComponent>, String> {
    let k = hd.k;
    let p_plus = g.p_plus_indices();
    let pos = p_plus_positions(g, &p_plus);
    let raising = g.levi_raising_indices();
    let lowering = g.levi_lowering_indices();
    let rank = g.rs.rank;

    // Highest weight vectors: harmonic vectors killed by every raising op.
    let mut hw_vectors: Vec<(Weight, SparseChain)> = Vec::new();
    for (&key, basis) in &hd.harmonic {
        let ids = &hd.deg.blocks[&key];
        let sparse_basis: Vec<SparseChain> =
            basis.iter().map(|v| dense_block_to_sparse(ids, v)).collect();
        // Rows: stacked images under all raising ops, indexed by target chain.
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut row_index: HashMap<(usize, u32), usize> = HashMap::new();
        for (bi, hvec) in sparse_basis.iter().enumerate() {
            for (a_pos, &a) in raising.iter().enumerate() {
                let mut image: HashMap<u32, Rational> = HashMap::new();
                for &(id, ref c) in hvec {
                    for (tid, tc) in act_on_chain(g, &p_plus, &pos, &hd.deg, a, id) {
                        *image.entry(tid).or_insert_with(Rational::zero) += c * &tc;
                    }
                }
                for (tid, tc) in image {
                    if tc.is_zero() {
                        continue;
                    }
                    let r = *row_index.entry((a_pos, tid)).or_insert_with(|| {
                        rows.push(vec![Rational::zero(); basis.len()]);
                        rows.len() - 1
                    });
                    rows[r][bi] = tc;
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..basis.len())
                .map(|i| {
                    let mut e = vec![Rational::zero(); basis.len()];
                    e[i] = Rational::one();
                    e
                })
                .collect::<Vec<_>>()
        } else {
            QMatrix::from_rows(rows).kernel_basis()
        };
        let weight = unpack_weight(key, rank);
        for coeffs in kernel {
            // Combine harmonic basis vectors with the kernel coefficients.
            let mut acc: HashMap<u32, Rational> = HashMap::new();
            for (c, hvec) in coeffs.iter().zip(&sparse_basis) {
                if c.is_zero() {
                    continue;
                }
                for &(id, ref x) in hvec {
                    *acc.entry(id).or_insert_with(Rational::zero) += c * x;
                }
            }
            let mut v: SparseChain = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort_by_key(|&(id, _)| id);
            hw_vectors.push((weight.clone(), v));
        }
    }

    // Generate each component by lowering closure, tracking independence
    // per weight block.
    let mut components: Vec<HomologyComponent> = Vec::new();
    let mut claimed: BTreeMap<u64, Vec<Vec<Rational>>> = BTreeMap::new(); // echelon rows per block
    for (hw, hw_vec) in hw_vectors {
        let mut basis: Vec<SparseChain> = Vec::new();
        let mut frontier: Vec<SparseChain> = vec![hw_vec.clone()];
        let mut local: BTreeMap<u64, Vec<Vec<Rational>>> = BTreeMap::new();
        let admit = |v: &SparseChain, local: &mut BTreeMap<u64, Vec<Vec<Rational>>>| -> bool {
            if v.is_empty() {
                return false;
            }
            let w = hd.deg.weight_of(g, v[0].0);
            let key = pack_weight(&w);
            let ids = &hd.deg.blocks[&key];
            let index_of: HashMap<u32, usize> =
                ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
            let mut dense = vec![Rational::zero(); ids.len()];
            for &(id, ref c) in v {
                dense[index_of[&id]] = c.clone();
            }
            let rows = local.entry(key).or_default();
            // Reduce against the echelon rows.
            for row in rows.iter() {
                let lead = row.iter().position(|x| !x.is_zero()).unwrap();
                if !dense[lead].is_zero() {
                    let f = &dense[lead] / &row[lead];
                    for (d, r) in dense.iter_mut().zip(row) {
                        let t = &f * r;
                        *d = &*d - &t;
                    }
                }
            }
            if dense.iter().all(|x| x.is_zero()) {
                return false;
            }
            rows.push(dense);
            true
        };
        assert!(admit(&hw_vec, &mut local), "highest weight vector must be nonzero");
        basis.push(hw_vec.clone());
        while let Some(v) = frontier.pop() {
            for &a in &lowering {
                let mut acc: HashMap<u32, Rational> = HashMap::new();
                for &(id, ref c) in &v {
                    for (tid, tc) in act_on_chain(g, &p_plus, &pos, &hd.deg, a, id) {
                        *acc.entry(tid).or_insert_with(Rational::zero) += c * &tc;
                    }
                }
                let mut image: SparseChain =
                    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                image.sort_by_key(|&(id, _)| id);
                if admit(&image, &mut local) {
                    basis.push(image.clone());
                    frontier.push(image);
                }
            }
        }

        // Merge local spans into the claimed ledger; overlaps are a bug.
        for (key, rows) in local {
            claimed.entry(key).or_default().extend(rows);
        }

        // Homogeneity purity: a mixed eigenvalue is an error, not a value.
        let hom = chain_homogeneity(g, &hd.deg, &basis)?;
        let torsion = basis.iter().any(|v| {
            v.iter().any(|&(id, _)| g.grade(hd.deg.value_of(id)) < 0)
        });
        components.push(HomologyComponent {
            degree: k,
            highest_weight: hw,
            dim: basis.len(),
            homogeneity: hom,
            torsion,
            hw_vector: hw_vec,
            harmonic_basis: basis,
        });
    }

    // The components must exactly exhaust the harmonic space.
    let total: usize = components.iter().map(|c| c.dim).sum();
    let harmonic_total = hd.total_harmonic_dim();
    if total != harmonic_total {
        return Err(format!(
            "component dimensions sum to {total} but the harmonic space has dimension {harmonic_total} in degree {k}"
        ));
    }
    for (key, rows) in claimed {
        let expected = hd.harmonic.get(&key).map_or(0, |v| v.len());
        if rows.len() != expected {
            return Err(format!(
                "weight block {:?} covered {} times by components, harmonic dim {}",
                unpack_weight(key, rank),
                rows.len(),
                expected
            ));
        }
    }

    components.sort_by(|a, b| {
        (a.homogeneity, &a.highest_weight).cmp(&(b.homogeneity, &b.highest_weight))
    });
    Ok(components)
}

/// Common grading eigenvalue of a set of chains, or an error if mixed.
fn chain_homogeneity(
    g: &GradedLieAlgebra,
    deg: &ChainDegree,
    vectors: &[SparseChain],
) -> Result<i64, String> {
    let mut seen: Option<i64> = None;
    for v in vectors {
        for &(id, _) in v {
            let h = deg.homogeneity_of(g, id);
            match seen {
                None => seen = Some(h),
                Some(x) if x == h => {}
                Some(x) => {
                    return Err(format!(
                        "mixed homogeneity in a component: {x} and {h}"
                    ))
                }
            }
        }
    }
    seen.ok_or_else(|| "empty component".into())
}

/// Homogeneity of a chain vector: grading eigenvalue or `None` if mixed.
pub fn homogeneity_of(g: &GradedLieAlgebra, deg: &ChainDegree, v: &SparseChain) -> Option<i64> {
    let mut seen: Option<i64> = None;
    for &(id, _) in v {
        let h = deg.homogeneity_of(g, id);
        match seen {
            None => seen = Some(h),
            Some(x) if x == h => {}
            _ => return None,
        }
    }
    seen
}

/// One entry of the combinatorial parametrization of `H_k`.
#[derive(Clone, Debug, Serialize)]
pub struct OracleEntry {
    /// Reduced word of the Weyl group element (1-based node numbers).
    pub word: Vec<usize>,
    /// The shifted weight `w(lambda + rho) - rho`.
    pub shifted_weight: Weight,
    /// Levi-dominant highest weight of the corresponding component: the
    /// dominant representative of minus the shifted weight.
    pub highest_weight: Weight,
    pub dim: num_bigint::BigInt,
    pub homogeneity: i64,
}

/// Kostant's parametrization: one entry per Weyl element of length `k` in
/// the minimal coset representatives, applied to the adjoint highest weight.
/// The component with parameter `w` has lowest weight `-(w . lambda)`, so its
/// highest weight is the Levi-dominant representative of that weight's
/// negative; dimensions come from the Weyl dimension formula over the Levi.
pub fn kostant_oracle(g: &GradedLieAlgebra, k: usize) -> Vec<OracleEntry> {
    let rs = &g.rs;
    let crossed = &g.spec.crossed;
    let lambda = rs.highest_root();
    let reps = rs.minimal_coset_reps(crossed, k);
    let mut out = Vec::new();
    for w in reps.iter().filter(|w| w.length() == k) {
        out.push(oracle_entry(g, w, &lambda));
    }
    out.sort_by(|a, b| (a.homogeneity, &a.highest_weight).cmp(&(b.homogeneity, &b.highest_weight)));
    out
}

pub fn oracle_entry(g: &GradedLieAlgebra, w: &WeylElement, lambda: &[i64]) -> OracleEntry {
    let rs = &g.rs;
    let crossed = &g.spec.crossed;
    let shifted = rs.affine_weyl_action(w, lambda);
    let neg: Weight = shifted.iter().map(|x| -x).collect();
    let hw = rs.levi_dominant(crossed, &neg);
    let dim = rs
        .weyl_dimension_levi(crossed, &hw)
        .expect("oracle weight is Levi-dominant");
    let hom = weight_homogeneity(g, &hw);
    OracleEntry {
        word: w.word.iter().map(|i| i + 1).collect(),
        shifted_weight: shifted,
        highest_weight: hw,
        dim,
        homogeneity: hom,
    }
}

/// Grading-element eigenvalue of a weight: the sum of its root coordinates
/// over the crossed nodes. Exact; asserts integrality.
pub fn weight_homogeneity(g: &GradedLieAlgebra, mu: &[i64]) -> i64 {
    let coords = g.rs.root_coordinates(mu);
    let mut acc = Rational::zero();
    for &c in &g.spec.crossed {
        acc += coords[c].clone();
    }
    assert!(acc.is_integer(), "homogeneity must be integral for lattice weights");
    use num_traits::ToPrimitive;
    acc.to_integer().to_i64().expect("homogeneity fits i64")
}

/// Exact comparison of the computed components against the combinatorial
/// parametrization: multisets of (highest weight, dimension, homogeneity)
/// must agree. Returns a readable mismatch description on failure.
pub fn oracle_agreement(
    g: &GradedLieAlgebra,
    k: usize,
    components: &[HomologyComponent],
) -> Result<Vec<OracleEntry>, String> {
    let oracle = kostant_oracle(g, k);
    let mut left: Vec<(Weight, String, i64)> = components
        .iter()
        .map(|c| (c.highest_weight.clone(), c.dim.to_string(), c.homogeneity))
        .collect();
    let mut right: Vec<(Weight, String, i64)> = oracle
        .iter()
        .map(|o| (o.highest_weight.clone(), o.dim.to_string(), o.homogeneity))
        .collect();
    left.sort();
    right.sort();
    if left != right {
        return Err(format!(
            "degree {k}: components {left:?} disagree with the Weyl parametrization {right:?}"
        ));
    }
    Ok(oracle)
}

/// Hodge Laplacian in degree `k`, assembled blockwise (desk-size algebras).
/// Returns (laplacian, chain degree).
pub fn hodge_laplacian(g: &GradedLieAlgebra, k: usize) -> (ChainMap, ChainDegree) {
    let p_plus = g.p_plus_indices();
    let pos = p_plus_positions(g, &p_plus);
    let deg_km1 = if k > 0 { Some(chain_degree(g, k - 1)) } else { None };
    let deg_k = chain_degree(g, k);
    let deg_kp1 = if k < p_plus.len() { Some(chain_degree(g, k + 1)) } else { None };
    let n = deg_k.dim();
    let mut cols: Vec<SparseChain> = vec![Vec::new(); n];
    let empty: Vec<u32> = Vec::new();
    for (&key, ids) in &deg_k.blocks {
        let gram_k = gram_block(g, &p_plus, &deg_k, ids);
        let gram_k_inv = gram_k.inverse().expect("Gram block is positive definite");
        // down: block of the boundary out of degree k
        let down = match &deg_km1 {
            Some(dm) => {
                let t = dm.blocks.get(&key).cloned().unwrap_or_default();
                let d = boundary_block(g, &p_plus, &pos, &deg_k, dm, ids, &t);
                let gram_m = gram_block(g, &p_plus, dm, &t);
                Some((d, gram_m))
            }
            None => None,
        };
        let up = match &deg_kp1 {
            Some(dp) => {
                let s = dp.blocks.get(&key).map_or(&empty, |v| v);
                let d = boundary_block(g, &p_plus, &pos, dp, &deg_k, s, ids);
                let gram_p = gram_block(g, &p_plus, dp, s);
                Some((d, gram_p))
            }
            None => None,
        };
        // adj(down): G_k^{-1} down^T G_{k-1}; laplacian = adj(down)*down + up*adj(up)
        let mut lap = QMatrix::zeros(ids.len(), ids.len());
        if let Some((d, gm)) = &down {
            let adj = gram_k_inv.mul(&d.transpose()).mul(gm);
            let term = adj.mul(d);
            for a in 0..ids.len() {
                for b in 0..ids.len() {
                    lap[(a, b)] = &lap[(a, b)] + &term[(a, b)];
                }
            }
        }
        if let Some((d, gp)) = &up {
            let gp_inv = gp.inverse().expect("Gram block is positive definite");
            let adj = gp_inv.mul(&d.transpose()).mul(&gram_k);
            let term = d.mul(&adj);
            for a in 0..ids.len() {
                for b in 0..ids.len() {
                    lap[(a, b)] = &lap[(a, b)] + &term[(a, b)];
                }
            }
        }
        for (b, &idb) in ids.iter().enumerate() {
            for (a, &ida) in ids.iter().enumerate() {
                if !lap[(a, b)].is_zero() {
                    cols[idb as usize].push((ida, lap[(a, b)].clone()));
                }
            }
        }
    }
    for c in &mut cols {
        c.sort_by_key(|&(id, _)| id);
    }
    (ChainMap { from_degree: k, dim_from: n, dim_to: n, cols }, deg_k)
}

/// Per-weight dimensions of `H_k` from rank counts alone (no harmonic
/// vectors); the cheap route used by the large sweeps.
pub fn homology_dims_by_weight(g: &GradedLieAlgebra, k: usize) -> BTreeMap<u64, usize> {
    harmonic_rank_data(g, k).into_iter().map(|(key, (n, o, i))| (key, n - o - i)).collect()
}

fn harmonic_rank_data(
    g: &GradedLieAlgebra,
    k: usize,
) -> BTreeMap<u64, (usize, usize, usize)> {
    harmonic_degree(g, k).ranks
}

/// Dense vector over the chain space from a sparse one (tests).
pub fn chain_to_dense(deg: &ChainDegree, v: &SparseChain) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); deg.dim()];
    for &(id, ref c) in v {
        out[id as usize] = c.clone();
    }
    out
}

pub use crate::algebra::SparseVec;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_graded_algebra, StructureSpec};

    fn algebra(name: &str) -> GradedLieAlgebra {
        build_graded_algebra(&StructureSpec::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn boundary_squares_to_zero_small() {
        let g = algebra("grassmannian:2");
        for k in 2..=4 {
            let d1 = codifferential(&g, k - 1);
            let d2 = codifferential(&g, k);
            assert!(d1.compose(&d2).is_zero(), "dd != 0 at degree {k}");
        }
    }

    #[test]
    fn k2_formula_on_decomposables() {
        // boundary(Z1 ^ Z2 (x) v) = -Z2 (x) [Z1,v] + Z1 (x) [Z2,v] - [Z1,Z2] (x) v
        let g = algebra("A3:1,3");
        let p_plus = g.p_plus_indices();
        let pos = p_plus_positions(&g, &p_plus);
        let deg2 = chain_degree(&g, 2);
        let deg1 = chain_degree(&g, 1);
        let gdim = g.dim();
        for wi in 0..deg2.wedges.len() {
            for v in 0..gdim {
                let chain = (wi * gdim + v) as u32;
                let got = boundary_of_chain(&g, &p_plus, &pos, &deg2, &deg1, chain);
                let wedge = deg2.wedges[wi].clone();
                let (z1, z2) = (p_plus[wedge[0] as usize], p_plus[wedge[1] as usize]);
                let mut expected: HashMap<u32, Rational> = HashMap::new();
                for &(t, ref c) in g.bracket_basis(z1, v) {
                    *expected
                        .entry(deg1.chain_id(&[wedge[1]], t))
                        .or_insert_with(Rational::zero) -= c.clone();
                }
                for &(t, ref c) in g.bracket_basis(z2, v) {
                    *expected
                        .entry(deg1.chain_id(&[wedge[0]], t))
                        .or_insert_with(Rational::zero) += c.clone();
                }
                for &(t, ref c) in g.bracket_basis(z1, z2) {
                    let u = pos[t].unwrap();
                    *expected.entry(deg1.chain_id(&[u], v)).or_insert_with(Rational::zero) -=
                        c.clone();
                }
                let expected: HashMap<u32, Rational> =
                    expected.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                let got_map: HashMap<u32, Rational> = got.into_iter().collect();
                assert_eq!(got_map, expected);
            }
        }
    }

    #[test]
    fn one_graded_wedge_term_vanishes() {
        // |1|-graded: [g_1, g_1] = 0, so the merge term contributes nothing.
        let g = algebra("grassmannian:2");
        let p_plus = g.p_plus_indices();
        for &i in &p_plus {
            for &j in &p_plus {
                assert!(g.bracket_basis(i, j).is_empty());
            }
        }
    }

    #[test]
    fn h0_is_bottom_grade() {
        for name in ["grassmannian:2", "quaternionic-contact:1", "A3:1,3"] {
            let g = algebra(name);
            let comps = homology_components(&g, 0).unwrap();
            assert_eq!(comps.len(), 1, "{name}");
            let c = &comps[0];
            assert_eq!(c.dim, g.grade_indices(-g.depth).len(), "{name}");
            assert_eq!(c.homogeneity, -g.depth, "{name}");
        }
    }

    #[test]
    fn grassmannian_n2_h1_and_h2() {
        let g = algebra("grassmannian:2");
        let h1 = homology_components(&g, 1).unwrap();
        assert_eq!(h1.len(), 1);
        assert_eq!(h1[0].dim, 9);
        assert_eq!(h1[0].homogeneity, 0);
        assert_eq!(h1[0].highest_weight, vec![2, -2, 2]);
        let h2 = homology_components(&g, 2).unwrap();
        assert_eq!(h2.len(), 2);
        assert!(h2.iter().all(|c| c.homogeneity == 2));
        assert_eq!(h2.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![5, 5]);
    }

    #[test]
    fn oracle_agreement_small_sweep() {
        for name in ["A2:1", "grassmannian:2", "A3:1,3", "C2:1"] {
            let g = algebra(name);
            let max_k = g.p_plus_indices().len();
            for k in 0..=max_k {
                let comps = homology_components(&g, k).unwrap();
                oracle_agreement(&g, k, &comps).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
    }

    #[test]
    fn grassmannian_n3_h1_contains_dim24_component() {
        let g = algebra("grassmannian:3");
        let h1 = homology_components(&g, 1).unwrap();
        assert!(h1.iter().any(|c| c.dim == 24 && c.homogeneity == 0));
        let h2 = homology_components(&g, 2).unwrap();
        assert_eq!(h2.len(), 2);
    }

    #[test]
    fn euler_characteristic_vanishes() {
        let g = algebra("grassmannian:2");
        let max_k = g.p_plus_indices().len();
        let mut chain_euler = 0i64;
        let mut hom_euler = 0i64;
        for k in 0..=max_k {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            chain_euler += sign * chain_degree(&g, k).dim() as i64;
            let dims: usize = homology_dims_by_weight(&g, k).values().sum();
            hom_euler += sign * dims as i64;
        }
        assert_eq!(chain_euler, 0);
        assert_eq!(hom_euler, 0);
    }

    #[test]
    fn laplacian_kernel_matches_homology() {
        let g = algebra("grassmannian:2");
        for k in 0..=2 {
            let (lap, deg) = hodge_laplacian(&g, k);
            // Kernel dimension per block must equal the harmonic dimension.
            let hd = harmonic_degree(&g, k);
            let mut lap_kernel = 0usize;
            for ids in deg.blocks.values() {
                let index_of: HashMap<u32, usize> =
                    ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
                let mut m = QMatrix::zeros(ids.len(), ids.len());
                for (col, &id) in ids.iter().enumerate() {
                    for &(r, ref c) in &lap.cols[id as usize] {
                        m[(index_of[&r], col)] = c.clone();
                    }
                }
                lap_kernel += ids.len() - m.rank();
            }
            assert_eq!(lap_kernel, hd.total_harmonic_dim(), "degree {k}");
            assert_eq!(hd.total_harmonic_dim(), hd.quotient_dim(), "degree {k}");
        }
    }

    #[test]
    fn laplacian_is_gram_symmetric() {
        // <box x, y> = <x, box y>: G * L is a symmetric matrix per block.
        let g = algebra("A2:1");
        let (lap, deg) = hodge_laplacian(&g, 1);
        let p_plus = g.p_plus_indices();
        for ids in deg.blocks.values() {
            let index_of: HashMap<u32, usize> =
                ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
            let mut m = QMatrix::zeros(ids.len(), ids.len());
            for (col, &id) in ids.iter().enumerate() {
                for &(r, ref c) in &lap.cols[id as usize] {
                    m[(index_of[&r], col)] = c.clone();
                }
            }
            let gram = gram_block(&g, &p_plus, &deg, ids);
            let gl = gram.mul(&m);
            assert_eq!(gl, gl.transpose());
        }
    }

    #[test]
    fn homogeneity_examples() {
        let g = algebra("quaternionic-contact:1");
        // H_0 of a |2|-graded algebra sits in homogeneity -2.
        let h0 = homology_components(&g, 0).unwrap();
        assert_eq!(h0[0].homogeneity, -2);
        // The grading element as a 0-chain has homogeneity 0.
        let deg0 = chain_degree(&g, 0);
        let e: SparseChain = g
            .grading_element
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.clone()))
            .collect();
        assert_eq!(homogeneity_of(&g, &deg0, &e), Some(0));
    }

    #[test]
    fn boundary_preserves_weight_blocks() {
        let g = algebra("A3:1,3");
        let p_plus = g.p_plus_indices();
        let pos = p_plus_positions(&g, &p_plus);
        let deg2 = chain_degree(&g, 2);
        let deg1 = chain_degree(&g, 1);
        for chain in 0..deg2.dim() as u32 {
            let w = deg2.weight_of(&g, chain);
            for (id, _) in boundary_of_chain(&g, &p_plus, &pos, &deg2, &deg1, chain) {
                assert_eq!(deg1.weight_of(&g, id), w);
            }
        }
    }

    #[test]
    fn oracle_k0_is_identity_with_highest_root() {
        let g = algebra("grassmannian:2");
        let o = kostant_oracle(&g, 0);
        assert_eq!(o.len(), 1);
        assert!(o[0].word.is_empty());
        assert_eq!(o[0].shifted_weight, g.rs.highest_root());
        assert_eq!(o[0].homogeneity, -1);
        assert_eq!(o[0].dim, 4.into());
    }
}
