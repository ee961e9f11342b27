//! Exact integer model of the even unimodular lattice II(1,17), its 19
//! Coxeter roots, reflections, fundamental-chamber reduction, and
//! sublattice saturation.
//!
//! Vectors are represented in root coordinates: II(1,17) ≅ Z¹⁹ / Z·c where
//! c is the unique integral relation among the 19 simple roots. Since
//! c₉ = 1, every class has a unique representative with ninth coordinate
//! zero, which is the canonical form used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::linalg;

pub const RANK: usize = 19;

/// Relation coefficients: Σ cᵢ αᵢ = 0.
pub const RELATION: [i64; RANK] = [
    3, 2, 4, 6, 5, 4, 3, 2, 1, 0, -1, -2, -3, -4, -5, -6, -4, -2, -3,
];

/// Canonical slot (0-based index of α₉, whose relation coefficient is 1).
pub const CANONICAL_SLOT: usize = 8;

/// Edges of the Coxeter diagram, 1-based node labels.
pub const EDGES: [(usize, usize); 18] = [
    (1, 4),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 10),
    (10, 11),
    (11, 12),
    (12, 13),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (17, 18),
    (16, 19),
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("root system construction inconsistent: {0}")]
    ConstructionInconsistent(String),
    #[error("reflection vector is not a root (square must be -2)")]
    NotARoot,
    #[error("vector is not in the rational closure of the positive cone")]
    NotInCone,
    #[error("chamber reduction exceeded the iteration cap")]
    NonTermination,
    #[error("generators are dependent over the rationals")]
    DependentGenerators,
    #[error("zero vector not allowed here")]
    ZeroVector,
}

/// A vector of II(1,17) in canonical root coordinates (slot 9 is zero).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl std::fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "λ[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl LatticeVector {
    pub fn zero() -> Self {
        LatticeVector {
            coords: vec![BigInt::zero(); RANK],
        }
    }

    pub fn from_coords(mut coords: Vec<BigInt>) -> Self {
        assert_eq!(coords.len(), RANK);
        let t = coords[CANONICAL_SLOT].clone();
        if !t.is_zero() {
            for (x, &c) in coords.iter_mut().zip(RELATION.iter()) {
                *x -= &t * c;
            }
        }
        debug_assert!(coords[CANONICAL_SLOT].is_zero());
        LatticeVector { coords }
    }

    pub fn from_i64(coords: [i64; RANK]) -> Self {
        Self::from_coords(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// The simple root αᵢ, 1-based.
    pub fn alpha(i: usize) -> Self {
        assert!((1..=RANK).contains(&i));
        let mut c = [0i64; RANK];
        c[i - 1] = 1;
        Self::from_i64(c)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Coordinates in the basis {αᵢ : i ≠ 9} (canonical slot dropped).
    pub fn basis_coords(&self) -> Vec<BigInt> {
        let mut v = Vec::with_capacity(RANK - 1);
        for (i, x) in self.coords.iter().enumerate() {
            if i != CANONICAL_SLOT {
                v.push(x.clone());
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_coords(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_coords(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    /// The symmetric bilinear form, computed through the 19×19 Gram matrix
    /// of the roots (well-defined on classes: the relation is the radical).
    pub fn pair(&self, other: &Self) -> BigInt {
        let rs = root_system();
        let mut total = BigInt::zero();
        for (i, xi) in self.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for (j, yj) in other.coords.iter().enumerate() {
                let g = rs.gram[i][j];
                if g != 0 && !yj.is_zero() {
                    row += yj * g;
                }
            }
            total += xi * row;
        }
        total
    }

    pub fn norm(&self) -> BigInt {
        self.pair(self)
    }

    /// All 19 values aᵢ = v · αᵢ.
    pub fn pairings(&self) -> Vec<BigInt> {
        let rs = root_system();
        (0..RANK)
            .map(|i| {
                let mut s = BigInt::zero();
                for (j, xj) in self.coords.iter().enumerate() {
                    let g = rs.gram[i][j];
                    if g != 0 && !xj.is_zero() {
                        s += xj * g;
                    }
                }
                s
            })
            .collect()
    }

    /// Reflection in a (−2)-root: v ↦ v + (v·r)·r.
    pub fn reflect(&self, root: &Self) -> Result<Self, LatticeError> {
        if root.norm() != BigInt::from(-2) {
            return Err(LatticeError::NotARoot);
        }
        let a = self.pair(root);
        Ok(self.add(&root.scale(&a)))
    }

    /// The diagram involution ι: αᵢ ↦ α₂₀₋ᵢ.
    pub fn involution(&self) -> Self {
        let mut c = vec![BigInt::zero(); RANK];
        for i in 0..RANK {
            c[RANK - 1 - i] = self.coords[i].clone();
        }
        Self::from_coords(c)
    }

    /// W-reduction into the closed fundamental chamber {aᵢ ≥ 0}.
    ///
    /// Requires v ≠ 0 in the rational closure of the positive cone
    /// (v² ≥ 0 and positive pairing with the interior reference point).
    pub fn reduce_to_chamber(&self, cap: u64) -> Result<(Self, u64), LatticeError> {
        if self.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        if self.norm().is_negative() {
            return Err(LatticeError::NotInCone);
        }
        let rs = root_system();
        if !self.pair(&rs.interior).is_positive() {
            return Err(LatticeError::NotInCone);
        }
        let mut v = self.clone();
        let mut steps = 0u64;
        loop {
            let a = v.pairings();
            match a.iter().position(|x| x.is_negative()) {
                None => return Ok((v, steps)),
                Some(i) => {
                    // Reflect in αᵢ: only coordinate i changes.
                    let mut coords = v.coords;
                    coords[i] += &a[i];
                    v = LatticeVector::from_coords(coords);
                    steps += 1;
                    if steps >= cap {
                        return Err(LatticeError::NonTermination);
                    }
                }
            }
        }
    }

    /// β_L = α₃ + 2α₂ − α₁.
    pub fn beta_l() -> Self {
        let mut c = [0i64; RANK];
        c[0] = -1;
        c[1] = 2;
        c[2] = 1;
        Self::from_i64(c)
    }

    /// γ_L = α₃ − α₁.
    pub fn gamma_l() -> Self {
        let mut c = [0i64; RANK];
        c[0] = -1;
        c[2] = 1;
        Self::from_i64(c)
    }

    /// β_R = α₁₇ + 2α₁₈ − α₁₉.
    pub fn beta_r() -> Self {
        Self::beta_l().involution()
    }

    /// γ_R = α₁₇ − α₁₉.
    pub fn gamma_r() -> Self {
        Self::gamma_l().involution()
    }
}

/// Result of a saturation computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult {
    /// Index of the generated sublattice inside its saturation.
    pub index: BigInt,
    /// Elementary divisors of the coordinate matrix.
    pub snf_diagonal: Vec<BigInt>,
}

/// Saturation index of the sublattice spanned by independent generators,
/// via the Smith normal form of their coordinate matrix.
pub fn saturation_index(generators: &[LatticeVector]) -> Result<SaturationResult, LatticeError> {
    let rows: linalg::IMat = generators.iter().map(|g| g.basis_coords()).collect();
    if linalg::rank(&rows) < rows.len() {
        return Err(LatticeError::DependentGenerators);
    }
    Ok(saturation_of_rows(&rows))
}

/// Saturation index of the *span* of an arbitrary (possibly dependent)
/// generating set: a Z-basis of the span is extracted first.
pub fn saturation_of_span(generators: &[LatticeVector]) -> SaturationResult {
    let rows: linalg::IMat = generators.iter().map(|g| g.basis_coords()).collect();
    let basis = linalg::row_basis(&rows);
    saturation_of_rows(&basis)
}

fn saturation_of_rows(rows: &[Vec<BigInt>]) -> SaturationResult {
    if rows.is_empty() {
        return SaturationResult {
            index: BigInt::one(),
            snf_diagonal: Vec::new(),
        };
    }
    let diag = linalg::smith_diagonal(rows);
    let index = diag
        .iter()
        .filter(|d| !d.is_zero())
        .fold(BigInt::one(), |acc, d| acc * d);
    SaturationResult {
        index,
        snf_diagonal: diag,
    }
}

/// The Coxeter system data of II(1,17).
pub struct RootSystemData {
    /// Symmetric 0/1 adjacency of the Coxeter diagram, 0-based.
    pub adjacency: [[bool; RANK]; RANK],
    /// Gram matrix of the 19 roots: −2 on the diagonal, 1 on edges.
    pub gram: [[i64; RANK]; RANK],
    /// Relation coefficients c.
    pub relation: [i64; RANK],
    /// Interior reference point: the unique vector with all aᵢ = 1.
    pub interior: LatticeVector,
}

impl RootSystemData {
    /// ι on 1-based node labels.
    pub fn iota(i: usize) -> usize {
        20 - i
    }
}

static ROOT_SYSTEM: Lazy<RootSystemData> =
    Lazy::new(|| try_build_root_system().expect("II(1,17) root system invariants"));

/// The validated root system singleton.
pub fn root_system() -> &'static RootSystemData {
    &ROOT_SYSTEM
}

/// Builds and fully validates the root system. Exposed separately from the
/// singleton so tests can exercise the validation path.
pub fn try_build_root_system() -> Result<RootSystemData, LatticeError> {
    let bad = |msg: &str| LatticeError::ConstructionInconsistent(msg.to_string());

    let mut adjacency = [[false; RANK]; RANK];
    for &(a, b) in EDGES.iter() {
        adjacency[a - 1][b - 1] = true;
        adjacency[b - 1][a - 1] = true;
    }
    let mut gram = [[0i64; RANK]; RANK];
    for i in 0..RANK {
        gram[i][i] = -2;
        for j in 0..RANK {
            if adjacency[i][j] {
                gram[i][j] = 1;
            }
        }
    }

    // Row-sum constraint: the relation lies in the radical of the Gram,
    // i.e. Σ_{j ∈ N(i)} c_j = 2 c_i for every node i.
    for i in 0..RANK {
        let s: i64 = (0..RANK)
            .filter(|&j| adjacency[i][j])
            .map(|j| RELATION[j])
            .sum();
        if s != 2 * RELATION[i] {
            return Err(bad("relation is not in the radical"));
        }
    }

    // ι-symmetry of the diagram and antisymmetry of the relation.
    for i in 0..RANK {
        if RELATION[RANK - 1 - i] != -RELATION[i] {
            return Err(bad("relation is not ι-antisymmetric"));
        }
        for j in 0..RANK {
            if adjacency[i][j] != adjacency[RANK - 1 - i][RANK - 1 - j] {
                return Err(bad("adjacency is not ι-symmetric"));
            }
        }
    }

    // The induced form on Z¹⁹/Zc: even unimodular of signature (1,17),
    // checked on the 18×18 Gram of {αᵢ : i ≠ 9}.
    let mut sub: linalg::IMat = Vec::with_capacity(RANK - 1);
    for i in 0..RANK {
        if i == CANONICAL_SLOT {
            continue;
        }
        let mut row = Vec::with_capacity(RANK - 1);
        for j in 0..RANK {
            if j != CANONICAL_SLOT {
                row.push(BigInt::from(gram[i][j]));
            }
        }
        sub.push(row);
    }
    let d = linalg::det(&sub);
    if d.magnitude().to_u64() != Some(1) {
        return Err(bad("determinant of the 18×18 Gram is not ±1"));
    }
    let (pos, neg, zero) = linalg::signature(&sub);
    if (pos, neg, zero) != (1, 17, 0) {
        return Err(bad("signature is not (1,17)"));
    }

    // The radical of the full 19×19 Gram is exactly the relation line.
    let full: linalg::IMat = (0..RANK)
        .map(|i| (0..RANK).map(|j| BigInt::from(gram[i][j])).collect())
        .collect();
    let ker = linalg::kernel(&full);
    if ker.len() != 1 {
        return Err(bad("radical of the 19×19 Gram has rank ≠ 1"));
    }
    let k = linalg::primitive(&ker[0]);
    let c_vec: Vec<BigInt> = RELATION.iter().map(|&x| BigInt::from(x)).collect();
    let neg_c: Vec<BigInt> = c_vec.iter().map(|x| -x).collect();
    if k != c_vec && k != neg_c {
        return Err(bad("radical is not spanned by the relation"));
    }

    // Interior reference point: solve (G x)_i = 1 for i ≠ 9 with x₉ = 0;
    // the remaining equation follows from Σ cᵢ = 0.
    let qsub = linalg::to_rational(&sub);
    let ones = vec![BigRational::one(); RANK - 1];
    let sol = linalg::solve(&qsub, &ones).ok_or_else(|| bad("interior point system singular"))?;
    let mut interior_coords = vec![BigInt::zero(); RANK];
    let mut idx = 0;
    for (i, item) in interior_coords.iter_mut().enumerate() {
        if i == CANONICAL_SLOT {
            continue;
        }
        let x = &sol[idx];
        if !x.denom().is_one() {
            return Err(bad("interior point is not integral"));
        }
        *item = x.numer().clone();
        idx += 1;
    }
    let interior = LatticeVector {
        coords: interior_coords,
    };

    let rs = RootSystemData {
        adjacency,
        gram,
        relation: RELATION,
        interior,
    };

    // Derived-vector identities β_L² = −8, γ_L² = −4, β_L·γ_L = −2, and
    // integrality of ½(β_L − γ_L) = α₂ (trivially integral in this model,
    // asserted as an identity).
    let pair = |u: &LatticeVector, v: &LatticeVector| -> BigInt {
        let mut total = BigInt::zero();
        for i in 0..RANK {
            for j in 0..RANK {
                total += &u.coords[i] * &v.coords[j] * rs.gram[i][j];
            }
        }
        total
    };
    let beta = LatticeVector::beta_l();
    let gamma = LatticeVector::gamma_l();
    if pair(&beta, &beta) != BigInt::from(-8)
        || pair(&gamma, &gamma) != BigInt::from(-4)
        || pair(&beta, &gamma) != BigInt::from(-2)
    {
        return Err(bad("β_L/γ_L pairings are wrong"));
    }
    let half = beta.sub(&gamma);
    if half.coords.iter().any(|x| (x % 2i32) != BigInt::zero()) {
        return Err(bad("(β_L − γ_L)/2 is not integral"));
    }
    if half
        .coords
        .iter()
        .zip(LatticeVector::alpha(2).coords.iter())
        .any(|(h, a)| h != &(a * 2))
    {
        return Err(bad("(β_L − γ_L)/2 ≠ α₂"));
    }

    // Interior point really has all aᵢ = 1.
    for i in 0..RANK {
        if pair(&rs.interior, &LatticeVector::alpha(i + 1)) != BigInt::one() {
            return Err(bad("interior point pairing is not all-ones"));
        }
    }

    Ok(rs)
}

/// Exhaustive search for all symmetric 0/1 adjacency matrices with zero
/// diagonal whose row sums against the relation satisfy
/// Σ_{j∈N(i)} c_j = 2 cᵢ. Returns the sorted edge lists of all solutions
/// found within the node budget (an error if the budget is exhausted).
///
/// This is the independent oracle for the Coxeter diagram: the search is
/// expected to find exactly one solution, the edge set of `EDGES`.
pub fn adjacency_search(max_nodes: u64) -> Result<Vec<Vec<(usize, usize)>>, LatticeError> {
    // Edge variables (i,j), i<j, decided row by row. When row i is fully
    // decided its sum constraint is checked exactly; open rows are pruned
    // with exact subset-sum reachability over their undecided columns.
    struct Search {
        adj: [[bool; RANK]; RANK],
        solutions: Vec<Vec<(usize, usize)>>,
        nodes: u64,
        max_nodes: u64,
        overflow: bool,
    }

    // Reachable subset sums over values `vals` as an offset bitset.
    fn reach(vals: &[i64]) -> Vec<bool> {
        let bound: i64 = vals.iter().map(|v| v.abs()).sum();
        let size = (2 * bound + 1) as usize;
        let mut r = vec![false; size];
        r[bound as usize] = true;
        for &v in vals {
            if v == 0 {
                continue;
            }
            let mut nr = r.clone();
            for s in 0..size {
                if r[s] {
                    let t = s as i64 + v;
                    if t >= 0 && (t as usize) < size {
                        nr[t as usize] = true;
                    }
                }
            }
            r = nr;
        }
        r
    }

    fn reachable(vals: &[i64], target: i64) -> bool {
        let bound: i64 = vals.iter().map(|v| v.abs()).sum();
        if target.abs() > bound {
            return false;
        }
        let r = reach(vals);
        r[(target + bound) as usize]
    }

    impl Search {
        // Decide edges (row, col..) for col in row+1..RANK.
        fn go_row(&mut self, row: usize) -> bool {
            if row == RANK {
                let mut edges = Vec::new();
                for i in 0..RANK {
                    for j in i + 1..RANK {
                        if self.adj[i][j] {
                            edges.push((i + 1, j + 1));
                        }
                    }
                }
                self.solutions.push(edges);
                return true;
            }
            // Fixed contribution from already-decided edges (j < row).
            let fixed: i64 = (0..row)
                .filter(|&j| self.adj[j][row])
                .map(|j| RELATION[j])
                .sum();
            let target = 2 * RELATION[row] - fixed;
            let free: Vec<usize> = (row + 1..RANK).collect();
            self.choose(row, &free, 0, target)
        }

        fn choose(&mut self, row: usize, free: &[usize], pos: usize, target: i64) -> bool {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                self.overflow = true;
                return false;
            }
            if pos == free.len() {
                if target != 0 {
                    return true;
                }
                // Row complete: forward-check every open row before
                // descending.
                for j in row + 1..RANK {
                    let fixed: i64 = (0..=row)
                        .filter(|&i| self.adj[i][j])
                        .map(|i| RELATION[i])
                        .sum();
                    let t = 2 * RELATION[j] - fixed;
                    let vals: Vec<i64> = (row + 1..RANK)
                        .filter(|&k| k != j)
                        .map(|k| RELATION[k])
                        .collect();
                    if !reachable(&vals, t) {
                        return true;
                    }
                }
                return self.go_row(row + 1);
            }
            // Prune: can the remaining columns still hit the target?
            let rest: Vec<i64> = free[pos..].iter().map(|&k| RELATION[k]).collect();
            if !reachable(&rest, target) {
                return true;
            }
            let col = free[pos];
            // Branch: edge absent.
            self.adj[row][col] = false;
            self.adj[col][row] = false;
            if !self.choose(row, free, pos + 1, target) {
                return false;
            }
            // Branch: edge present.
            self.adj[row][col] = true;
            self.adj[col][row] = true;
            let ok = self.choose(row, free, pos + 1, target - RELATION[col]);
            self.adj[row][col] = false;
            self.adj[col][row] = false;
            ok
        }
    }

    let mut s = Search {
        adj: [[false; RANK]; RANK],
        solutions: Vec::new(),
        nodes: 0,
        max_nodes,
        overflow: false,
    };
    s.go_row(0);
    if s.overflow {
        return Err(LatticeError::NonTermination);
    }
    Ok(s.solutions)
}

/// A finitely presented lattice with an explicit Gram matrix; used for the
/// small root lattices of the stratum tables and for embedding checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    pub rank: usize,
    pub gram: linalg::IMat,
}

impl GramLattice {
    pub fn new(gram: linalg::IMat) -> Self {
        let rank = gram.len();
        for (i, row) in gram.iter().enumerate() {
            assert_eq!(row.len(), rank);
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x, &gram[j][i], "Gram must be symmetric");
            }
            let _ = i;
        }
        GramLattice { rank, gram }
    }

    pub fn det(&self) -> BigInt {
        linalg::det(&self.gram)
    }

    pub fn signature(&self) -> (usize, usize, usize) {
        linalg::signature(&self.gram)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank).all(|i| (&self.gram[i][i] % 2i32).is_zero())
    }

    fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Negative-definite A_k (k ≥ 1): chain of (−2)-roots.
    pub fn a_k(k: usize) -> Self {
        assert!(k >= 1);
        let mut g = vec![vec![BigInt::zero(); k]; k];
        for i in 0..k {
            g[i][i] = BigInt::from(-2);
            if i + 1 < k {
                g[i][i + 1] = BigInt::one();
                g[i + 1][i] = BigInt::one();
            }
        }
        Self::new(g)
    }

    /// Negative-definite D_k with the small-rank conventions of the
    /// stratum table: D₁ = ⟨−4⟩, D₂ = A₁ ⊕ A₁.
    pub fn d_k(k: usize) -> Self {
        assert!(k >= 1);
        match k {
            1 => Self::from_i64(&[&[-4]]),
            2 => Self::from_i64(&[&[-2, 0], &[0, -2]]),
            _ => {
                // Chain 1..k-1 with a fork: node k attached to node k-2.
                let mut g = vec![vec![BigInt::zero(); k]; k];
                for i in 0..k {
                    g[i][i] = BigInt::from(-2);
                }
                for i in 0..k - 2 {
                    g[i][i + 1] = BigInt::one();
                    g[i + 1][i] = BigInt::one();
                }
                g[k - 3][k - 1] = BigInt::one();
                g[k - 1][k - 3] = BigInt::one();
                Self::new(g)
            }
        }
    }

    /// Negative-definite E_k with the small-rank conventions of the
    /// stratum table: E₁ = ⟨−8⟩, E₂ = [[−2,1],[1,−4]]; E₃ = A₂ ⊕ A₁,
    /// E₄ = A₄, E₅ = D₅, and the standard E₆, E₇, E₈.
    pub fn e_k(k: usize) -> Self {
        assert!((1..=8).contains(&k));
        match k {
            1 => Self::from_i64(&[&[-8]]),
            2 => Self::from_i64(&[&[-2, 1], &[1, -4]]),
            3 => Self::from_i64(&[&[-2, 1, 0], &[1, -2, 0], &[0, 0, -2]]),
            4 => Self::a_k(4),
            5 => Self::d_k(5),
            _ => {
                // Chain 1..k-1 with node k attached to node 3.
                let mut g = vec![vec![BigInt::zero(); k]; k];
                for i in 0..k {
                    g[i][i] = BigInt::from(-2);
                }
                for i in 0..k - 2 {
                    g[i][i + 1] = BigInt::one();
                    g[i + 1][i] = BigInt::one();
                }
                g[2][k - 1] = BigInt::one();
                g[k - 1][2] = BigInt::one();
                Self::new(g)
            }
        }
    }

    /// E'₁ = ⟨−2⟩ from the stratum table.
    pub fn e1_prime() -> Self {
        Self::from_i64(&[&[-2]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_invariants_pass() {
        let rs = try_build_root_system().expect("construction must succeed");
        // Spot-check adjacency: 1–4 and 2–3 present, 1–2 absent.
        assert!(rs.adjacency[0][3]);
        assert!(rs.adjacency[1][2]);
        assert!(!rs.adjacency[0][1]);
    }

    #[test]
    fn relation_pairs_to_zero_with_every_root() {
        // Σ cᵢ αᵢ canonicalizes to the zero vector, and the (non-canonical)
        // relation combination pairs to 0 against every α_j.
        let mut v = LatticeVector::zero();
        for i in 1..=RANK {
            v = v.add(&LatticeVector::alpha(i).scale_i64(RELATION[i - 1]));
        }
        assert!(v.is_zero());
        let rs = root_system();
        for j in 0..RANK {
            let s: i64 = (0..RANK).map(|i| RELATION[i] * rs.gram[i][j]).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn derived_vector_pairings() {
        let b = LatticeVector::beta_l();
        let g = LatticeVector::gamma_l();
        assert_eq!(b.norm(), BigInt::from(-8));
        assert_eq!(g.norm(), BigInt::from(-4));
        assert_eq!(b.pair(&g), BigInt::from(-2));
        let a2 = LatticeVector::alpha(2);
        assert_eq!(a2.pair(&g), BigInt::from(1));
        assert_eq!(a2.norm(), BigInt::from(-2));
    }

    #[test]
    fn reflect_simple_example() {
        // α₄·α₁ = 1, so reflecting α₄ in α₁ gives α₄ + α₁.
        let a4 = LatticeVector::alpha(4);
        let a1 = LatticeVector::alpha(1);
        let r = a4.reflect(&a1).unwrap();
        assert_eq!(r, a4.add(&a1));
        // Involution property.
        assert_eq!(r.reflect(&a1).unwrap(), a4);
    }

    #[test]
    fn involution_on_roots_and_derived() {
        assert_eq!(
            LatticeVector::alpha(1).involution(),
            LatticeVector::alpha(19)
        );
        assert_eq!(LatticeVector::beta_l().involution(), LatticeVector::beta_r());
        assert_eq!(
            LatticeVector::beta_r().norm(),
            BigInt::from(-8)
        );
    }

    #[test]
    fn interior_point_reduces_trivially() {
        let rs = root_system();
        let (w, len) = rs.interior.reduce_to_chamber(1000).unwrap();
        assert_eq!(w, rs.interior);
        assert_eq!(len, 0);
        // One reflection away reduces back with word length 1.
        let v = rs.interior.reflect(&LatticeVector::alpha(2)).unwrap();
        let (w, len) = v.reduce_to_chamber(1000).unwrap();
        assert_eq!(w, rs.interior);
        assert_eq!(len, 1);
    }

    #[test]
    fn saturation_examples() {
        // {2α₂}: index 2.
        let r = saturation_index(&[LatticeVector::alpha(2).scale_i64(2)]).unwrap();
        assert_eq!(r.index, BigInt::from(2));
        // {αᵢ : i ≠ 10}: primitive, index 1.
        let gens: Vec<_> = (1..=RANK)
            .filter(|&i| i != 10)
            .map(LatticeVector::alpha)
            .collect();
        let r = saturation_index(&gens).unwrap();
        assert_eq!(r.index, BigInt::one());
        // All roots except α₂ and α₁₈: index 2 (2:1 extension of D₁₆).
        let gens: Vec<_> = (1..=RANK)
            .filter(|&i| i != 2 && i != 18)
            .map(LatticeVector::alpha)
            .collect();
        let r = saturation_index(&gens).unwrap();
        assert_eq!(r.index, BigInt::from(2));
    }

    #[test]
    fn dependent_generators_rejected() {
        let gens = vec![
            LatticeVector::alpha(1),
            LatticeVector::alpha(2),
            LatticeVector::alpha(1).add(&LatticeVector::alpha(2)),
        ];
        assert_eq!(
            saturation_index(&gens),
            Err(LatticeError::DependentGenerators)
        );
    }

    #[test]
    fn small_lattice_table() {
        assert_eq!(GramLattice::d_k(1).gram[0][0], BigInt::from(-4));
        assert_eq!(GramLattice::e_k(1).gram[0][0], BigInt::from(-8));
        assert_eq!(GramLattice::e1_prime().gram[0][0], BigInt::from(-2));
        let e2 = GramLattice::e_k(2);
        assert_eq!(e2.gram[0][1], BigInt::one());
        assert_eq!(e2.gram[1][1], BigInt::from(-4));
        // |det E_k| = 9 − k.
        for k in 1..=8 {
            assert_eq!(
                GramLattice::e_k(k).det().magnitude().to_u64().unwrap(),
                (9 - k) as u64
            );
        }
        // |det A_k| = k + 1, |det D_k| = 4.
        for k in 1..=8 {
            assert_eq!(
                GramLattice::a_k(k).det().magnitude().to_u64().unwrap(),
                (k + 1) as u64
            );
            assert_eq!(GramLattice::d_k(k).det().magnitude().to_u64().unwrap(), 4);
        }
    }
}
