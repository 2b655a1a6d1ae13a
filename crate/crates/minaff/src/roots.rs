//! Cartan data, roots, and integral weights for the classical types A–D.
//!
//! Nodes are numbered 1..=n in Bourbaki order. Weights are stored in
//! fundamental-weight coordinates (`coords[i-1] = λ(h_i)`), roots in
//! simple-root coordinates; both are always integral. Conversions go
//! through the Cartan matrix, with rationals appearing only inside the
//! dominance solver.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// The four classical series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::A => write!(f, "A"),
            Series::B => write!(f, "B"),
            Series::C => write!(f, "C"),
            Series::D => write!(f, "D"),
        }
    }
}

/// A classical type `X_n`, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    pub series: Series,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootError> {
        let min = match series {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 4,
        };
        if rank < min {
            return Err(RootError::UnsupportedType(format!(
                "{series}{rank}: rank must be at least {min}"
            )));
        }
        Ok(LieType { series, rank })
    }

    /// Parse a compact name such as `B3` or `D4`.
    pub fn parse(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let series = match s.chars().next() {
            Some('A' | 'a') => Series::A,
            Some('B' | 'b') => Series::B,
            Some('C' | 'c') => Series::C,
            Some('D' | 'd') => Series::D,
            _ => return Err(RootError::UnsupportedType(format!("cannot parse type {s:?}"))),
        };
        let rank: usize = s[1..]
            .parse()
            .map_err(|_| RootError::UnsupportedType(format!("cannot parse rank in {s:?}")))?;
        LieType::new(series, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Value `λ(h_i)` at the 1-based node `i`.
    pub fn value(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_sub(*b).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(
            self.0
                .iter()
                .map(|a| a.checked_mul(c).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    /// The `i`-th fundamental weight `ω_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        assert!(i >= 1 && i <= rank, "node index out of range");
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }
}

impl fmt::Debug for Weight {
    fmt_tuple_like!();
}

impl fmt::Display for Weight {
    fmt_tuple_like!();
}

macro_rules! fmt_tuple_like {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(")?;
            for (k, c) in self.0.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
    };
}
use fmt_tuple_like;

/// A root written in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            if c == 1 {
                write!(f, "a{}", k + 1)?;
            } else {
                write!(f, "{}a{}", c, k + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Named positive roots used by the relation tables.
///
/// `AlphaChain(i,j)` is `α_{i,j}`; in type D the convention is
/// `α_{i,n} = α_{i,n-2} + α_n` for `i < n-1` and `α_{n,n} = α_n`.
/// `Theta(i,j)` is `θ_{i,j} = α_{i,n} + α_{j+1,n}` in type B and
/// `α_{i,n-1} + α_{j+1,n}` in type D (`j ≤ n-3` there).
/// `Vartheta(i)` is `ϑ_i = α_{i,n-1} + α_n` (type D).
/// `SpinChain(j)` is the `j`-th weight of the node-(n-2) lowering chain in
/// type D, the root `e_{n-1-2j} + e_{n-2j}`; successive partial sums step
/// down `ω_{n-2} → ω_{n-4} → …`, which is the unique indexing that keeps
/// every chain constituent dominant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialRoot {
    AlphaChain(usize, usize),
    Theta(usize, usize),
    Vartheta(usize),
    SpinChain(usize),
}

/// Cartan matrix, symmetrizer, positive roots, and lacing data for one type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = c_{ij} = α_j(h_i)` (0-based storage).
    cartan: Vec<Vec<i64>>,
    /// Coprime symmetrizer: `d_i c_{ij} = d_j c_{ji}`.
    d: Vec<i64>,
    positive_roots: Vec<Root>,
    /// Lacing number `r∨ = max c_{ij} c_{ji}` over `i ≠ j`.
    lacing: i64,
    dual_coxeter: i64,
    /// Inverse Cartan matrix over the rationals.
    inv_cartan: Vec<Vec<Ratio<i64>>>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
        }
        // Chain bonds; for D the fork replaces the last chain bond.
        let chain_end = match lie_type.series {
            Series::D => n - 2,
            _ => n - 1,
        };
        for i in 0..chain_end.saturating_sub(0) {
            if i + 1 < n && i < chain_end {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        match lie_type.series {
            Series::A => {}
            // Short node n: c_{n,n-1} = -2.
            Series::B => {
                cartan[n - 1][n - 2] = -2;
            }
            // Long node n: c_{n-1,n} = -2.
            Series::C => {
                cartan[n - 2][n - 1] = -2;
            }
            Series::D => {
                cartan[n - 3][n - 2] = -1;
                cartan[n - 2][n - 3] = -1;
                cartan[n - 3][n - 1] = -1;
                cartan[n - 1][n - 3] = -1;
            }
        }
        let d: Vec<i64> = match lie_type.series {
            Series::A | Series::D => vec![1; n],
            Series::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            Series::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
        };
        let lacing = match lie_type.series {
            Series::A | Series::D => 1,
            Series::B | Series::C => 2,
        };
        let dual_coxeter = match lie_type.series {
            Series::A => n as i64 + 1,
            Series::B => 2 * n as i64 - 1,
            Series::C => n as i64 + 1,
            Series::D => 2 * n as i64 - 2,
        };
        let positive_roots = enumerate_positive_roots(lie_type);
        let expected = match lie_type.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
        };
        assert_eq!(positive_roots.len(), expected, "positive root count for {lie_type}");
        let inv_cartan = invert_matrix(&cartan);
        let rs = RootSystem {
            lie_type,
            cartan,
            d,
            positive_roots,
            lacing,
            dual_coxeter,
            inv_cartan,
        };
        debug_assert!(rs.check_symmetrizable());
        rs
    }

    fn check_symmetrizable(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| self.d[i] * self.cartan[i][j] == self.d[j] * self.cartan[j][i])
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `c_{ij} = α_j(h_i)` for 1-based nodes.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Symmetrizer entry `d_i` (1-based).
    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn lacing_number(&self) -> i64 {
        self.lacing
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter
    }

    /// The simple root `α_i` as a weight (`coords[j] = c_{ji}`).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        let n = self.rank();
        Weight((1..=n).map(|j| self.cartan(j, i)).collect())
    }

    /// Weight coordinates of a root: `coords[j] = Σ_i coeffs[i] c_{ji}`.
    pub fn root_weight(&self, root: &Root) -> Weight {
        let n = self.rank();
        assert_eq!(root.coeffs.len(), n);
        let mut coords = vec![0i64; n];
        for (j, slot) in coords.iter_mut().enumerate() {
            for (i, &c) in root.coeffs.iter().enumerate() {
                *slot += c * self.cartan[j][i];
            }
        }
        Weight(coords)
    }

    /// Simple-root coordinates of a weight, if it lies in the root lattice.
    pub fn alpha_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Ratio::new(0, 1);
            for j in 0..n {
                acc += self.inv_cartan[i][j] * Ratio::from_integer(w.0[j]);
            }
            if !acc.is_integer() {
                return None;
            }
            out.push(acc.to_integer());
        }
        Some(out)
    }

    /// Rational simple-root coordinates of a weight.
    pub fn alpha_coords_rational(&self, w: &Weight) -> Vec<Ratio<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.inv_cartan[i][j] * Ratio::from_integer(w.0[j]))
                    .sum()
            })
            .collect()
    }

    /// `μ ≤ λ` in the dominance order: `λ - μ` is a nonnegative integral
    /// combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        match self.alpha_coords(&lambda.sub(mu)) {
            Some(coords) => coords.iter().all(|&c| c >= 0),
            None => false,
        }
    }

    /// The diagram automorphism node map induced by `-w₀`.
    pub fn w0_node(&self, i: usize) -> usize {
        let n = self.rank();
        match self.lie_type.series {
            Series::A => n + 1 - i,
            Series::D if n % 2 == 1 => {
                if i == n - 1 {
                    n
                } else if i == n {
                    n - 1
                } else {
                    i
                }
            }
            _ => i,
        }
    }

    /// `λ* = -w₀ λ`, computed through the diagram automorphism.
    pub fn star_weight(&self, w: &Weight) -> Weight {
        let n = self.rank();
        let mut coords = vec![0i64; n];
        for i in 1..=n {
            coords[self.w0_node(i) - 1] = w.value(i);
        }
        Weight(coords)
    }

    /// Nodes where the weight is nonzero.
    pub fn supp(&self, w: &Weight) -> BTreeSet<usize> {
        (1..=self.rank()).filter(|&i| w.value(i) != 0).collect()
    }

    /// Minimal connected subdiagram containing the support.
    pub fn supp_bar(&self, w: &Weight) -> BTreeSet<usize> {
        self.connected_closure(&self.supp(w))
    }

    /// 1-based neighbours of a node in the Dynkin diagram.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&j| j != i && self.cartan(i, j) != 0)
            .collect()
    }

    /// Minimal connected set of nodes containing `set` (union of tree paths).
    pub fn connected_closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut iter = set.iter();
        let first = match iter.next() {
            Some(&f) => f,
            None => return out,
        };
        out.insert(first);
        for &target in iter {
            for node in self.tree_path(first, target) {
                out.insert(node);
            }
        }
        out
    }

    /// The unique path between two nodes of the (tree) diagram.
    pub fn tree_path(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.rank();
        let mut prev = vec![0usize; n + 1];
        let mut seen = vec![false; n + 1];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    pub fn is_connected(&self, set: &BTreeSet<usize>) -> bool {
        if set.is_empty() {
            return true;
        }
        let first = *set.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut stack = vec![first];
        seen.insert(first);
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if set.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    /// One of the paper-style named roots; see [`SpecialRoot`].
    pub fn special_root(&self, spec: SpecialRoot) -> Result<Root, RootError> {
        let n = self.rank();
        let series = self.lie_type.series;
        let oor = |msg: String| Err(RootError::IndexOutOfRange(msg));
        match spec {
            SpecialRoot::AlphaChain(i, j) => {
                if i < 1 || j < i || j > n {
                    return oor(format!("alpha_chain({i},{j}) for {}", self.lie_type));
                }
                if series == Series::D && j == n {
                    if i == n {
                        return Ok(self.simple_root(n));
                    }
                    if i < n - 1 {
                        let mut r = self.chain_root(i, n - 2);
                        r.coeffs[n - 1] += 1;
                        return Ok(r);
                    }
                    return oor(format!("alpha_chain({i},{j}) is not a root in type D"));
                }
                Ok(self.chain_root(i, j))
            }
            SpecialRoot::Theta(i, j) => {
                let jmax = match series {
                    Series::B => n - 1,
                    Series::D => n - 3,
                    _ => {
                        return Err(RootError::UnsupportedType(format!(
                            "theta roots require type B or D, got {}",
                            self.lie_type
                        )))
                    }
                };
                if i < 1 || j < i || j > jmax {
                    return oor(format!("theta({i},{j}) for {}", self.lie_type));
                }
                self.theta_family(i, j)
            }
            SpecialRoot::Vartheta(i) => {
                if series != Series::D {
                    return Err(RootError::UnsupportedType(format!(
                        "vartheta requires type D, got {}",
                        self.lie_type
                    )));
                }
                if i < 1 || i > n - 2 {
                    return oor(format!("vartheta({i}) for {}", self.lie_type));
                }
                let mut r = self.chain_root(i, n - 1);
                r.coeffs[n - 1] += 1;
                Ok(r)
            }
            SpecialRoot::SpinChain(j) => {
                if series != Series::D {
                    return Err(RootError::UnsupportedType(format!(
                        "spin chain requires type D, got {}",
                        self.lie_type
                    )));
                }
                if j < 1 || 2 * j > n - 2 {
                    return oor(format!("spin_chain({j}) for {}", self.lie_type));
                }
                // e_{n-1-2j} + e_{n-2j}, i.e. the theta-family root θ_{i,i}
                // with i = n-1-2j (Vartheta(n-3) shape when j = 1... general
                // θ_{i,i} = α_{i,n-1} + α_{i+1,n}).
                self.theta_family(n - 1 - 2 * j, n - 1 - 2 * j)
            }
        }
    }

    /// The simple root `α_i` as a Root.
    pub fn simple_root(&self, i: usize) -> Root {
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[i - 1] = 1;
        Root { coeffs }
    }

    /// Consecutive sum `α_i + … + α_j`.
    fn chain_root(&self, i: usize, j: usize) -> Root {
        let mut coeffs = vec![0i64; self.rank()];
        for k in i..=j {
            coeffs[k - 1] = 1;
        }
        Root { coeffs }
    }

    /// The θ-family root `e_i + e_{j+1}`, with `Vartheta(i)` appearing as
    /// the `j = n-2` member in type D.
    pub(crate) fn theta_family(&self, i: usize, j: usize) -> Result<Root, RootError> {
        let n = self.rank();
        match self.lie_type.series {
            Series::B => {
                // α_{i,n} + α_{j+1,n}
                let mut r = self.chain_root(i, n);
                for k in (j + 1)..=n {
                    r.coeffs[k - 1] += 1;
                }
                Ok(r)
            }
            Series::D => {
                // α_{i,n-1} + α_{j+1,n}; for j = n-2 this is ϑ_i.
                let mut r = self.chain_root(i, n - 1);
                if j + 1 == n {
                    return Err(RootError::IndexOutOfRange(format!("theta({i},{j})")));
                }
                if j + 1 == n - 1 {
                    r.coeffs[n - 1] += 1; // + α_n
                } else {
                    for k in (j + 1)..=(n - 2) {
                        r.coeffs[k - 1] += 1;
                    }
                    r.coeffs[n - 1] += 1;
                }
                Ok(r)
            }
            _ => Err(RootError::UnsupportedType(format!(
                "theta roots require type B or D, got {}",
                self.lie_type
            ))),
        }
    }

    /// Reflect into the dominant chamber.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let n = self.rank();
        let mut v = w.0.clone();
        loop {
            let mut done = true;
            for i in 0..n {
                if v[i] < 0 {
                    // s_i: v -> v - v_i α_i
                    let c = v[i];
                    for j in 0..n {
                        v[j] -= c * self.cartan[j][i];
                    }
                    done = false;
                }
            }
            if done {
                return Weight(v);
            }
        }
    }

    /// All distinct weights in the Weyl orbit of a dominant weight.
    pub fn weyl_orbit(&self, dominant: &Weight) -> Vec<Weight> {
        assert!(dominant.is_dominant(), "weyl_orbit needs a dominant weight");
        let coords = orbit_coords(self.lie_type, dominant);
        let mut out = Vec::new();
        let series = self.lie_type.series;
        let has_zero = coords.iter().any(|&x| x == 0);
        let mut abs: Vec<i64> = coords.iter().map(|&x| x.abs()).collect();
        abs.sort_unstable();
        match series {
            Series::A => {
                for perm in multiset_permutations(&coords) {
                    out.push(weight_from_orbit_coords(self.lie_type, &perm));
                }
            }
            Series::B | Series::C | Series::D => {
                for signed in signed_multisets(&abs, series == Series::D && !has_zero) {
                    for perm in multiset_permutations(&signed) {
                        out.push(weight_from_orbit_coords(self.lie_type, &perm));
                    }
                }
            }
        }
        out
    }

    /// Size of the Weyl orbit of a dominant weight.
    pub fn orbit_size(&self, dominant: &Weight) -> u64 {
        // Small ranks; counting by enumeration is exact and fast enough.
        self.weyl_orbit(dominant).len() as u64
    }
}

/// Orbit coordinates: the (doubled, for B/D) Euclidean coordinates in which
/// the Weyl group acts by permutations and sign changes.
fn orbit_coords(ty: LieType, w: &Weight) -> Vec<i64> {
    let n = ty.rank;
    let m = &w.0;
    match ty.series {
        Series::A => {
            // v_k = m_k + … + m_n, v_{n+1} = 0 (barycentric gauge irrelevant).
            let mut v = vec![0i64; n + 1];
            for k in (0..n).rev() {
                v[k] = v[k + 1] + m[k];
            }
            v
        }
        Series::B => {
            // doubled: X_k = 2(m_k + … + m_{n-1}) + m_n
            let mut v = vec![0i64; n];
            v[n - 1] = m[n - 1];
            for k in (0..n - 1).rev() {
                v[k] = v[k + 1] + 2 * m[k];
            }
            v
        }
        Series::C => {
            let mut v = vec![0i64; n];
            v[n - 1] = m[n - 1];
            for k in (0..n - 1).rev() {
                v[k] = v[k + 1] + m[k];
            }
            v
        }
        Series::D => {
            // doubled: X_k = 2(m_k + … + m_{n-2}) + m_{n-1} + m_n
            let mut v = vec![0i64; n];
            v[n - 1] = m[n - 1] - m[n - 2];
            let mut acc = m[n - 1] + m[n - 2];
            v[n - 2] = acc;
            for k in (0..n - 2).rev() {
                acc += 2 * m[k];
                v[k] = acc;
            }
            v
        }
    }
}

fn weight_from_orbit_coords(ty: LieType, v: &[i64]) -> Weight {
    let n = ty.rank;
    let mut m = vec![0i64; n];
    match ty.series {
        Series::A => {
            for k in 0..n {
                m[k] = v[k] - v[k + 1];
            }
        }
        Series::B => {
            for k in 0..n - 1 {
                debug_assert!((v[k] - v[k + 1]) % 2 == 0);
                m[k] = (v[k] - v[k + 1]) / 2;
            }
            m[n - 1] = v[n - 1];
        }
        Series::C => {
            for k in 0..n - 1 {
                m[k] = v[k] - v[k + 1];
            }
            m[n - 1] = v[n - 1];
        }
        Series::D => {
            for k in 0..n - 2 {
                debug_assert!((v[k] - v[k + 1]) % 2 == 0);
                m[k] = (v[k] - v[k + 1]) / 2;
            }
            debug_assert!((v[n - 2] - v[n - 1]) % 2 == 0);
            m[n - 2] = (v[n - 2] - v[n - 1]) / 2;
            m[n - 1] = (v[n - 2] + v[n - 1]) / 2;
        }
    }
    Weight(m)
}

/// All distinct permutations of a multiset, in lexicographic order.
fn multiset_permutations(values: &[i64]) -> Vec<Vec<i64>> {
    let mut v: Vec<i64> = values.to_vec();
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(v.clone());
        // next_permutation
        let len = v.len();
        let mut i = len.wrapping_sub(1);
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = len - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

/// All distinct sign decorations of a multiset of nonnegative values.
/// With `even_only`, the number of flipped (nonzero) entries must be even.
fn signed_multisets(abs_sorted: &[i64], even_only: bool) -> Vec<Vec<i64>> {
    // Group by value; zeros take no sign.
    let mut groups: Vec<(i64, usize)> = Vec::new();
    for &x in abs_sorted {
        match groups.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => groups.push((x, 1)),
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let flips: usize = groups
            .iter()
            .zip(&choice)
            .map(|((v, _), &k)| if *v == 0 { 0 } else { k })
            .sum();
        let ok = !even_only || flips % 2 == 0;
        if ok {
            let mut vals = Vec::with_capacity(abs_sorted.len());
            for ((v, c), &k) in groups.iter().zip(&choice) {
                let k = if *v == 0 { 0 } else { k };
                for _ in 0..k {
                    vals.push(-*v);
                }
                for _ in 0..(c - k) {
                    vals.push(*v);
                }
            }
            out.push(vals);
        }
        // odometer over 0..=c per group (zeros effectively contribute one choice)
        let mut pos = 0;
        loop {
            if pos == groups.len() {
                return out;
            }
            let cap = if groups[pos].0 == 0 { 0 } else { groups[pos].1 };
            if choice[pos] < cap {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn invert_matrix(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Ratio::from_integer(m[i][j])
                    } else {
                        Ratio::from_integer((j - n == i) as i64)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    for j in 0..2 * n {
                        let sub = f * a[col][j];
                        a[r][j] -= sub;
                    }
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn enumerate_positive_roots(ty: LieType) -> Vec<Root> {
    let n = ty.rank;
    let mut roots: Vec<Root> = Vec::new();
    let chain = |i: usize, j: usize| -> Vec<i64> {
        let mut c = vec![0i64; n];
        for k in i..=j {
            c[k - 1] = 1;
        }
        c
    };
    match ty.series {
        Series::A => {
            for i in 1..=n {
                for j in i..=n {
                    roots.push(Root { coeffs: chain(i, j) });
                }
            }
        }
        Series::B => {
            // e_i - e_{j+1} (j<n), e_i (j=n): consecutive chains
            for i in 1..=n {
                for j in i..=n {
                    roots.push(Root { coeffs: chain(i, j) });
                }
            }
            // e_i + e_{j+1} = α_{i,n} + α_{j+1,n}
            for i in 1..=n {
                for j in i..n {
                    let mut c = chain(i, n);
                    for k in (j + 1)..=n {
                        c[k - 1] += 1;
                    }
                    roots.push(Root { coeffs: c });
                }
            }
        }
        Series::C => {
            // e_i - e_{j+1}: consecutive chains up to j = n-1
            for i in 1..=n {
                for j in i..n {
                    roots.push(Root { coeffs: chain(i, j) });
                }
            }
            // e_i + e_j (i ≤ j ≤ n): α_{i,j-1} + 2(α_j+…+α_{n-1}) + α_n
            for i in 1..=n {
                for j in i..=n {
                    let mut c = if j > i { chain(i, j - 1) } else { vec![0i64; n] };
                    for k in j..n {
                        c[k - 1] += 2;
                    }
                    c[n - 1] += 1;
                    roots.push(Root { coeffs: c });
                }
            }
        }
        Series::D => {
            // e_i - e_j (i < j ≤ n): consecutive chains
            for i in 1..=n {
                for j in i..n {
                    roots.push(Root { coeffs: chain(i, j) });
                }
            }
            // e_i + e_n (i ≤ n-2): α_{i,n-2} + α_n
            for i in 1..=(n - 2) {
                let mut c = chain(i, n - 2);
                c[n - 1] += 1;
                roots.push(Root { coeffs: c });
            }
            // e_{n-1} + e_n = α_n
            let mut c = vec![0i64; n];
            c[n - 1] = 1;
            roots.push(Root { coeffs: c });
            // e_i + e_j (i < j ≤ n-1): α_{i,n-1} + α_{j,n}
            for i in 1..=(n - 2) {
                for j in (i + 1)..=(n - 1) {
                    let mut c = chain(i, n - 1);
                    if j == n - 1 {
                        c[n - 1] += 1;
                    } else {
                        for k in j..=(n - 2) {
                            c[k - 1] += 1;
                        }
                        c[n - 1] += 1;
                    }
                    roots.push(Root { coeffs: c });
                }
            }
        }
    }
    roots.sort_by_key(|r| (r.height(), r.coeffs.clone()));
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(LieType::parse(s).unwrap())
    }

    #[test]
    fn b2_cartan_data() {
        let b2 = rs("B2");
        assert_eq!(b2.cartan(1, 2), -1);
        assert_eq!(b2.cartan(2, 1), -2);
        assert_eq!(b2.d(1), 2);
        assert_eq!(b2.d(2), 1);
        assert_eq!(b2.lacing_number(), 2);
    }

    #[test]
    fn a1_forced_data() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan(1, 1), 2);
        assert_eq!(a1.d(1), 1);
        assert_eq!(a1.lacing_number(), 1);
        assert_eq!(a1.dual_coxeter_number(), 2);
    }

    #[test]
    fn d4_root_count() {
        let d4 = rs("D4");
        assert_eq!(d4.positive_roots().len(), 12);
        assert_eq!(d4.lacing_number(), 1);
        assert_eq!(d4.dual_coxeter_number(), 6);
    }

    #[test]
    fn root_counts_match_formulas() {
        for (name, count) in [("A4", 10), ("B3", 9), ("B5", 25), ("C3", 9), ("C4", 16), ("D5", 20)] {
            assert_eq!(rs(name).positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn root_weight_examples() {
        let a2 = rs("A2");
        let alpha1 = a2.simple_root(1);
        assert_eq!(a2.root_weight(&alpha1), Weight(vec![2, -1]));

        let b2 = rs("B2");
        let r = Root { coeffs: vec![1, 1] };
        assert_eq!(b2.root_weight(&r), Weight(vec![1, 0])); // ω₁ = α₁+α₂ in B₂

        let d4 = rs("D4");
        let theta11 = d4.special_root(SpecialRoot::Theta(1, 1)).unwrap();
        assert_eq!(theta11.coeffs, vec![1, 2, 1, 1]);
        assert_eq!(d4.root_weight(&theta11), Weight(vec![0, 1, 0, 0]));
    }

    #[test]
    fn dominance_examples() {
        let b2 = rs("B2");
        let w1 = Weight(vec![1, 0]);
        let w2x2 = Weight(vec![0, 2]);
        assert!(b2.dominance_leq(&w1, &w1));
        assert!(b2.dominance_leq(&w1, &w2x2)); // 2ω₂ - ω₁ = α₂
        assert!(!b2.dominance_leq(&Weight(vec![0, 1]), &w1)); // ω₁ - ω₂ = α₁/2
    }

    #[test]
    fn star_weight_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.star_weight(&Weight(vec![1, 0])), Weight(vec![0, 1]));
        let b3 = rs("B3");
        assert_eq!(b3.star_weight(&Weight(vec![1, 2, 3])), Weight(vec![1, 2, 3]));
        let d5 = rs("D5");
        assert_eq!(
            d5.star_weight(&Weight(vec![0, 0, 0, 1, 0])),
            Weight(vec![0, 0, 0, 0, 1])
        );
        let d4 = rs("D4");
        assert_eq!(d4.star_weight(&Weight(vec![1, 0, 2, 3])), Weight(vec![1, 0, 2, 3]));
    }

    #[test]
    fn star_weight_is_involution_and_preserves_dominance() {
        for name in ["A3", "B3", "C4", "D4", "D5"] {
            let sys = rs(name);
            let n = sys.rank();
            let mut vals = vec![0i64; n];
            for k in 0..n {
                vals[k] = (k as i64 * 7 + 3) % 5;
            }
            let w = Weight(vals);
            let star = sys.star_weight(&w);
            assert!(star.is_dominant());
            assert_eq!(sys.star_weight(&star), w);
        }
    }

    #[test]
    fn special_root_b3_theta22() {
        let b3 = rs("B3");
        let t = b3.special_root(SpecialRoot::Theta(2, 2)).unwrap();
        assert_eq!(t.coeffs, vec![0, 1, 2]);
        assert_eq!(b3.root_weight(&t), Weight(vec![-1, 0, 2]));
    }

    #[test]
    fn special_root_d5_theta22() {
        let d5 = rs("D5");
        let t = d5.special_root(SpecialRoot::Theta(2, 2)).unwrap();
        assert_eq!(t.coeffs, vec![0, 1, 2, 1, 1]);
    }

    #[test]
    fn special_root_d4_vartheta1() {
        let d4 = rs("D4");
        let t = d4.special_root(SpecialRoot::Vartheta(1)).unwrap();
        assert_eq!(t.coeffs, vec![1, 1, 1, 1]);
        assert_eq!(d4.root_weight(&t), Weight(vec![1, -1, 1, 1]));
    }

    #[test]
    fn theta_identities_type_b() {
        let b3 = rs("B3");
        // θ_{1,1} = ω₂, θ_{1,2} = ω₁ - ω₂ + 2ω₃, θ_{2,2} = 2ω₃ - ω₁ (d₃' = 1/2)
        let t11 = b3.special_root(SpecialRoot::Theta(1, 1)).unwrap();
        let t12 = b3.special_root(SpecialRoot::Theta(1, 2)).unwrap();
        assert_eq!(b3.root_weight(&t11), Weight(vec![0, 1, 0]));
        assert_eq!(b3.root_weight(&t12), Weight(vec![1, -1, 2]));
        // B₄: same identities with coefficient 1 at node 3
        let b4 = rs("B4");
        let t12 = b4.special_root(SpecialRoot::Theta(1, 2)).unwrap();
        assert_eq!(b4.root_weight(&t12), Weight(vec![1, -1, 1, 0]));
    }

    #[test]
    fn theta_identities_type_d() {
        let d5 = rs("D5");
        for (spec, coords) in [
            (SpecialRoot::Theta(1, 1), vec![0, 1, 0, 0, 0]),
            (SpecialRoot::Theta(1, 2), vec![1, -1, 1, 0, 0]),
            (SpecialRoot::Theta(2, 2), vec![-1, 0, 1, 0, 0]),
        ] {
            let r = d5.special_root(spec).unwrap();
            assert_eq!(d5.root_weight(&r), Weight(coords));
        }
    }

    #[test]
    fn special_roots_are_positive_roots() {
        for name in ["B2", "B3", "B4", "D4", "D5", "D6"] {
            let sys = rs(name);
            let n = sys.rank();
            let mut specs = Vec::new();
            for i in 1..=n {
                for j in i..=n {
                    if sys.lie_type().series == Series::D && j == n && i == n - 1 {
                        continue;
                    }
                    specs.push(SpecialRoot::AlphaChain(i, j));
                }
            }
            let jmax = if sys.lie_type().series == Series::B { n - 1 } else { n - 3 };
            for i in 1..=jmax {
                for j in i..=jmax {
                    specs.push(SpecialRoot::Theta(i, j));
                }
            }
            if sys.lie_type().series == Series::D {
                for i in 1..=(n - 2) {
                    specs.push(SpecialRoot::Vartheta(i));
                }
                for j in 1..=((n - 2) / 2) {
                    specs.push(SpecialRoot::SpinChain(j));
                }
            }
            for spec in specs {
                let r = sys.special_root(spec).unwrap();
                assert!(
                    sys.positive_roots().contains(&r),
                    "{name}: {spec:?} -> {r:?} not a positive root"
                );
            }
        }
    }

    #[test]
    fn spin_chain_partial_sums_step_down_fundamentals() {
        for name in ["D4", "D5", "D6", "D7"] {
            let sys = rs(name);
            let n = sys.rank();
            let mut acc = Weight::zero(n);
            for j in 1..=((n - 2) / 2) {
                let g = sys.special_root(SpecialRoot::SpinChain(j)).unwrap();
                acc = acc.add(&sys.root_weight(&g));
                // ω_{n-2} - ω_{n-2-2j} (ω_0 = 0)
                let mut expect = Weight::fundamental(n, n - 2);
                if n - 2 >= 2 * j + 1 {
                    let low = n - 2 - 2 * j;
                    if low >= 1 {
                        expect = expect.sub(&Weight::fundamental(n, low));
                    }
                }
                assert_eq!(acc, expect, "{name} spin chain partial sum {j}");
            }
        }
    }

    #[test]
    fn supp_examples() {
        let b4 = rs("B4");
        let w = Weight(vec![1, 0, 0, 2]);
        assert_eq!(b4.supp(&w), BTreeSet::from([1, 4]));
        assert_eq!(b4.supp_bar(&w), BTreeSet::from([1, 2, 3, 4]));
        let d4 = rs("D4");
        let w = Weight(vec![1, 0, 1, 0]);
        assert_eq!(d4.supp(&w), BTreeSet::from([1, 3]));
        assert_eq!(d4.supp_bar(&w), BTreeSet::from([1, 2, 3]));
        assert_eq!(d4.supp(&Weight::zero(4)), BTreeSet::new());
    }

    #[test]
    fn roots_are_below_any_weight_shift() {
        for name in ["A3", "B3", "C3", "D4"] {
            let sys = rs(name);
            let lambda = Weight(vec![2; sys.rank()]);
            for alpha in sys.positive_roots() {
                let shifted = lambda.sub(&sys.root_weight(alpha));
                assert!(sys.dominance_leq(&shifted, &lambda), "{name} {alpha:?}");
            }
        }
    }

    #[test]
    fn weyl_orbit_sizes() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_orbit(&Weight(vec![1, 0])).len(), 3);
        assert_eq!(a2.weyl_orbit(&Weight(vec![1, 1])).len(), 6);
        let b2 = rs("B2");
        assert_eq!(b2.weyl_orbit(&Weight(vec![1, 0])).len(), 4);
        assert_eq!(b2.weyl_orbit(&Weight(vec![0, 1])).len(), 4);
        assert_eq!(b2.weyl_orbit(&Weight(vec![1, 1])).len(), 8);
        let d4 = rs("D4");
        assert_eq!(d4.weyl_orbit(&Weight(vec![1, 0, 0, 0])).len(), 8);
        assert_eq!(d4.weyl_orbit(&Weight(vec![0, 0, 0, 1])).len(), 8);
        assert_eq!(d4.weyl_orbit(&Weight::zero(4)).len(), 1);
    }

    #[test]
    fn weyl_orbit_members_reduce_to_the_dominant_weight() {
        for name in ["A3", "B3", "C3", "D4", "D5"] {
            let sys = rs(name);
            let n = sys.rank();
            let mut vals = vec![0i64; n];
            for k in 0..n {
                vals[k] = ((k as i64) * 3 + 1) % 3;
            }
            let w = Weight(vals);
            let orbit = sys.weyl_orbit(&w);
            let distinct: std::collections::HashSet<_> = orbit.iter().cloned().collect();
            assert_eq!(distinct.len(), orbit.len(), "{name}: orbit has duplicates");
            for v in &orbit {
                assert_eq!(sys.dominant_representative(v), w, "{name}");
            }
        }
    }
}
