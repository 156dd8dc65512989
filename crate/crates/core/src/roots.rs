//! Root-system data for types B and D in orthonormal coordinates,
//! fundamental-alcove enumeration for type D, and the root-counting
//! functions `𝔡_r` and `𝔠_b` with brute-force twins.
//!
//! Weights store doubled coordinates so that spin weights (half-integer
//! entries) stay exact integers.

use serde::Serialize;

use crate::exact::{rat_frac, Rational};
use crate::{Error, Result};

/// A weight of type B_r/D_r in the orthonormal e-basis; `coords2[i]` is
/// twice the i-th coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords2: Vec<i64>,
}

impl Weight {
    pub fn from_coords2(coords2: Vec<i64>) -> Self {
        Weight { coords2 }
    }

    /// Weight with integer coordinates.
    pub fn from_int_coords(coords: &[i64]) -> Self {
        Weight {
            coords2: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords2: vec![0; rank],
        }
    }

    /// Standard basis vector `e_i` (0-indexed).
    pub fn basis(i: usize, rank: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords2[i] = 2;
        w
    }

    pub fn rank(&self) -> usize {
        self.coords2.len()
    }

    pub fn coords2(&self) -> &[i64] {
        &self.coords2
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords2: self
                .coords2
                .iter()
                .zip(&other.coords2)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            coords2: self.coords2.iter().map(|x| c * x).collect(),
        }
    }

    /// Inner product `(self | other)` as an exact rational.
    pub fn inner(&self, other: &Weight) -> Result<Rational> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let dot: i64 = self
            .coords2
            .iter()
            .zip(&other.coords2)
            .map(|(a, b)| a * b)
            .sum();
        Ok(rat_frac(dot, 4))
    }

    /// Four times the inner product, always an integer.
    pub fn inner4(&self, other: &Weight) -> i64 {
        self.coords2
            .iter()
            .zip(&other.coords2)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `(λ | e_1 + e_2)`, an integer for parity-consistent weights.
    pub fn level_pairing(&self) -> i64 {
        (self.coords2[0] + self.coords2[1]) / 2
    }

    /// All doubled coordinates share one parity.
    pub fn parity_consistent(&self) -> bool {
        let p = self.coords2[0].rem_euclid(2);
        self.coords2.iter().all(|c| c.rem_euclid(2) == p)
    }

    /// Dominance for type D: `λ1 ≥ λ2 ≥ … ≥ λ_{r−1} ≥ |λ_r|`.
    pub fn dominant_d(&self) -> bool {
        let r = self.rank();
        let c = &self.coords2;
        c.windows(2).take(r.saturating_sub(2)).all(|w| w[0] >= w[1]) && c[r - 2] >= c[r - 1].abs()
    }

    /// Fundamental weight ω_j (1-indexed) of D_r.
    pub fn fundamental_d(j: usize, rank: usize) -> Self {
        assert!((1..=rank).contains(&j));
        let coords2 = if j <= rank - 2 {
            (0..rank).map(|i| if i < j { 2 } else { 0 }).collect()
        } else if j == rank - 1 {
            (0..rank)
                .map(|i| if i + 1 < rank { 1 } else { -1 })
                .collect()
        } else {
            vec![1; rank]
        };
        Weight { coords2 }
    }

    /// Half-sum of positive roots for D_r: `(r−1, r−2, …, 1, 0)`.
    pub fn rho_d(rank: usize) -> Self {
        Weight {
            coords2: (0..rank)
                .map(|i| 2 * (rank as i64 - 1 - i as i64))
                .collect(),
        }
    }

    /// Half-sum of positive roots for B_b: `(b−½, b−³⁄₂, …, ½)`.
    pub fn rho_b(rank: usize) -> Self {
        Weight {
            coords2: (0..rank)
                .map(|i| 2 * (rank as i64 - i as i64) - 1)
                .collect(),
        }
    }

    /// The three nontrivial invertible weights of `so(2r)_{2r}`:
    /// `λ1 = 2rω_{r−1}`, `λ2 = 2rω_1`, `λ3 = 2rω_r`.
    pub fn invertibles_d(rank: usize) -> [Weight; 3] {
        let two_r = 2 * rank as i64;
        [
            Weight::fundamental_d(rank - 1, rank).scale(two_r),
            Weight::fundamental_d(1, rank).scale(two_r),
            Weight::fundamental_d(rank, rank).scale(two_r),
        ]
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coords2
            .iter()
            .map(|c| {
                if c % 2 == 0 {
                    format!("{}", c / 2)
                } else {
                    format!("{c}/2")
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lie type of the root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LieType {
    B,
    D,
}

/// Positive roots, ρ and the dual Coxeter number.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    pub positive_roots: Vec<Weight>,
    pub rho: Weight,
    pub dual_coxeter: i64,
}

/// Positive roots of B_r/D_r: `e_j ± e_k (j < k)`, plus the short roots
/// `e_i` in type B.
pub fn build_root_system(lie_type: LieType, rank: usize) -> Result<RootSystem> {
    if rank < 2 {
        return Err(Error::RankTooSmall {
            rank: rank as u64,
            min: 2,
        });
    }
    let mut positive_roots = Vec::new();
    for j in 0..rank {
        for k in (j + 1)..rank {
            let mut plus = Weight::zero(rank);
            plus.coords2[j] = 2;
            plus.coords2[k] = 2;
            let mut minus = Weight::zero(rank);
            minus.coords2[j] = 2;
            minus.coords2[k] = -2;
            positive_roots.push(minus);
            positive_roots.push(plus);
        }
    }
    if lie_type == LieType::B {
        for i in 0..rank {
            positive_roots.push(Weight::basis(i, rank));
        }
    }
    let (rho, dual_coxeter) = match lie_type {
        LieType::D => (Weight::rho_d(rank), 2 * rank as i64 - 2),
        LieType::B => (Weight::rho_b(rank), 2 * rank as i64 - 1),
    };
    Ok(RootSystem {
        lie_type,
        rank,
        positive_roots,
        rho,
        dual_coxeter,
    })
}

/// The fundamental alcove of `so(2r)_{2r}`: dominant, parity-consistent
/// weights with `(λ+ρ | α) ≤ 4r−3` for every positive root α. For r ≥ 3
/// this is exactly the level bound `(λ | e_1+e_2) ≤ 2r`; the sharper
/// all-roots form also covers the formal (non-simple) r = 2 case.
/// Deterministic ascending lexicographic order on doubled coordinates.
pub fn alcove_d(rank: usize) -> Result<Vec<Weight>> {
    if rank < 2 {
        return Err(Error::RankTooSmall {
            rank: rank as u64,
            min: 2,
        });
    }
    let level2 = 4 * rank as i64; // doubled level bound: c1 + c2 ≤ 4r
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(rank);
    for parity in [0i64, 1] {
        enumerate(rank, parity, level2, &mut prefix, &mut out);
    }
    if rank == 2 {
        let rho = Weight::rho_d(2);
        out.retain(|w| {
            let lr = w.add(&rho);
            // (λ+ρ | e1−e2) ≤ 4r−3 as well
            (lr.coords2[0] - lr.coords2[1]) / 2 <= 4 * 2 - 3
        });
    }
    out.sort();
    Ok(out)
}

fn enumerate(rank: usize, parity: i64, level2: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
    let depth = prefix.len();
    if depth == rank {
        out.push(Weight {
            coords2: prefix.clone(),
        });
        return;
    }
    // upper/lower bounds for the coordinate at this depth; the level
    // bound c1 + c2 ≤ 4r prunes at depth 1 (the second coordinate)
    let (upper, lower) = if depth == 0 {
        (2 * level2, parity) // c1 can exceed 4r only in the formal r = 2 case
    } else {
        let prev = prefix[depth - 1];
        let upper = if depth == 1 {
            prev.min(level2 - prefix[0])
        } else {
            prev
        };
        let lower = if depth == rank - 1 { -prev } else { 0 };
        (upper, lower)
    };
    let mut c = upper;
    if (c - parity).rem_euclid(2) != 0 {
        c -= 1;
    }
    while c >= lower {
        prefix.push(c);
        enumerate(rank, parity, level2, prefix, out);
        prefix.pop();
        c -= 2;
    }
}

/// Independent enumeration of the alcove by filtering a coordinate box;
/// used as an oracle against the backtracking enumeration.
pub fn alcove_d_bruteforce(rank: usize) -> Result<Vec<Weight>> {
    if rank < 2 {
        return Err(Error::RankTooSmall {
            rank: rank as u64,
            min: 2,
        });
    }
    let sys = build_root_system(LieType::D, rank)?;
    let bound = 4 * rank as i64 + 4;
    let mut out = Vec::new();
    let mut coords = vec![0i64; rank];
    box_scan(&mut coords, 0, bound, &sys, &mut out);
    out.sort();
    Ok(out)
}

fn box_scan(
    coords: &mut Vec<i64>,
    depth: usize,
    bound: i64,
    sys: &RootSystem,
    out: &mut Vec<Weight>,
) {
    if depth == coords.len() {
        let w = Weight {
            coords2: coords.clone(),
        };
        if w.parity_consistent() && w.dominant_d() {
            let shifted = w.add(&sys.rho);
            let limit = 4 * (4 * sys.rank as i64 - 3); // inner4 = 4·(λ+ρ|α)
            if sys
                .positive_roots
                .iter()
                .all(|a| shifted.inner4(a) <= limit)
            {
                out.push(w);
            }
        }
        return;
    }
    for c in -bound..=bound {
        coords[depth] = c;
        box_scan(coords, depth + 1, bound, sys, out);
    }
}

/// `𝔡_r(j) = |{α ∈ Δ₊(D_r) : (α|ρ) = j}|`, closed form.
pub fn d_count(r: u64, j: u64) -> u64 {
    if r < 1 || j < 1 || j > 2 * r.saturating_sub(1) {
        return 0;
    }
    if j < r {
        r - j / 2
    } else if j <= 2 * r - 3 {
        r - (j + 2) / 2 // r − ⌈(j+1)/2⌉
    } else {
        0
    }
}

/// Literal count of positive roots of D_r pairing to `j` against ρ.
pub fn d_count_bruteforce(r: u64, j: u64) -> u64 {
    if r < 2 {
        return 0;
    }
    let sys = build_root_system(LieType::D, r as usize).expect("r >= 2");
    sys.positive_roots
        .iter()
        .filter(|a| a.inner4(&sys.rho) == 4 * j as i64)
        .count() as u64
}

/// `S_r = {1 ≤ j ≤ 2r−3 : 𝔡_r(j)·j odd}`.
pub fn s_set(r: u64) -> Vec<u64> {
    if r < 2 {
        return Vec::new();
    }
    (1..=2 * r - 3)
        .filter(|&j| (d_count(r, j) * j) % 2 == 1)
        .collect()
}

/// `𝔠_b(j) = b − ⌈j/2⌉` for `1 ≤ j ≤ 2b−2`, else 0.
pub fn c_count(b: u64, j: u64) -> u64 {
    if b < 2 || j < 1 || j > 2 * b - 2 {
        return 0;
    }
    b - j.div_ceil(2)
}

/// One line of the alcove JSON-lines dump.
#[derive(Debug, Serialize)]
pub struct AlcoveLine {
    pub coords2: Vec<i64>,
    pub level_pairing: i64,
}

/// Alcove dump as JSON lines (`{"coords2": [...], "level_pairing": n}`).
pub fn alcove_jsonl(rank: usize) -> Result<String> {
    let mut out = String::new();
    for w in alcove_d(rank)? {
        let line = AlcoveLine {
            coords2: w.coords2().to_vec(),
            level_pairing: w.level_pairing(),
        };
        out.push_str(&serde_json::to_string(&line).expect("serializable"));
        out.push('\n');
    }
    Ok(out)
}
