//! Grabiner sequences, ascent/descent style degrees and regularity classes of
//! a square rational matrix.
//!
//! Every chain `N(T^n)`, `R(T^n)` of an operator on `Q^d` is stationary from
//! `n = d` on, so sequences are tabulated for `n = 0..=d` and every infimum
//! is attained inside that window. All subspaces of `Q^d` are closed and all
//! dimensions are finite; the regularity predicates still spell those
//! conditions out through [`is_closed`] and [`is_finite`].

use crate::error::{LabError, Result};
use crate::ratmat::{Mat, Rat, Subspace};

/// `N(T^k)` and `R(T^k)` for `k = 0..=dim+1`.
#[derive(Debug, Clone)]
pub struct PowerChains {
    dim: usize,
    kernels: Vec<Subspace>,
    images: Vec<Subspace>,
}

impl PowerChains {
    pub fn new(t: &Mat) -> Result<Self> {
        let dim = t.ensure_square()?;
        // N(T^{k+1}) = T^{-1} N(T^k) and R(T^{k+1}) = T R(T^k); no powers formed.
        let mut kernels = vec![Subspace::zero(dim)];
        let mut images = vec![Subspace::full(dim)];
        for k in 0..=dim {
            let next_kernel = if kernels[k].is_full() {
                kernels[k].clone()
            } else {
                Subspace::preimage(t, &kernels[k])?
            };
            let next_image = if images[k].is_zero() {
                images[k].clone()
            } else {
                images[k].map(t)?
            };
            kernels.push(next_kernel);
            images.push(next_image);
        }
        Ok(Self {
            dim,
            kernels,
            images,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `N(T^k)`; constant past `dim`.
    pub fn kernel(&self, k: usize) -> &Subspace {
        &self.kernels[k.min(self.dim + 1)]
    }

    /// `R(T^k)`; constant past `dim`.
    pub fn image(&self, k: usize) -> &Subspace {
        &self.images[k.min(self.dim + 1)]
    }

    /// `R(T) + N(T^k)`.
    pub fn range_plus_kernel(&self, k: usize) -> Subspace {
        self.image(1).sum(self.kernel(k)).expect("same ambient")
    }

    /// `c_n(T) = dim X / (R(T) + N(T^n))`.
    pub fn c(&self, n: usize) -> usize {
        self.range_plus_kernel(n).codim()
    }

    /// `c'_n(T) = dim N(T) ∩ R(T^n)`.
    pub fn cp(&self, n: usize) -> usize {
        self.kernel(1)
            .intersect(self.image(n))
            .expect("same ambient")
            .dim()
    }

    /// `k_n(T) = dim (R(T^n) ∩ N(T)) / (R(T^{n+1}) ∩ N(T))`.
    pub fn k(&self, n: usize) -> usize {
        let big = self.image(n).intersect(self.kernel(1)).expect("same ambient");
        let small = self
            .image(n + 1)
            .intersect(self.kernel(1))
            .expect("same ambient");
        big.quotient_dim(&small).expect("range chain is nested")
    }

    /// `dim R(T^n) / R(T^{n+1})`.
    pub fn c_by_range_chain(&self, n: usize) -> usize {
        self.image(n)
            .quotient_dim(self.image(n + 1))
            .expect("range chain is nested")
    }

    /// `dim N(T^{n+1}) / N(T^n)`.
    pub fn cp_by_kernel_chain(&self, n: usize) -> usize {
        self.kernel(n + 1)
            .quotient_dim(self.kernel(n))
            .expect("kernel chain is nested")
    }

    /// `dim (R(T) + N(T^{n+1})) / (R(T) + N(T^n))`.
    pub fn k_by_sum_chain(&self, n: usize) -> usize {
        self.range_plus_kernel(n + 1)
            .quotient_dim(&self.range_plus_kernel(n))
            .expect("sum chain is nested")
    }
}

pub fn c_n(t: &Mat, n: usize) -> Result<usize> {
    Ok(PowerChains::new(t)?.c(n))
}

pub fn cp_n(t: &Mat, n: usize) -> Result<usize> {
    Ok(PowerChains::new(t)?.cp(n))
}

pub fn k_n(t: &Mat, n: usize) -> Result<usize> {
    Ok(PowerChains::new(t)?.k(n))
}

/// All Grabiner sequences of one operator plus the degrees derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantProfile {
    pub dim: usize,
    /// `c_n(T)`, `n = 0..=dim`.
    pub c_seq: Vec<usize>,
    /// `c'_n(T)`, `n = 0..=dim`.
    pub cp_seq: Vec<usize>,
    /// `k_n(T)`, `n = 0..=dim`.
    pub k_seq: Vec<usize>,
    pub asc: usize,
    pub dsc: usize,
    pub asc_e: usize,
    pub dsc_e: usize,
    pub dis: usize,
    pub dis_e: usize,
    pub k_total: usize,
    pub c_total: usize,
    pub cp_total: usize,
    pub hyper_kernel: Subspace,
    pub hyper_range: Subspace,
}

fn first_index(seq: &[usize], pred: impl Fn(usize) -> bool) -> usize {
    seq.iter()
        .position(|&v| pred(v))
        .expect("finite-dimensional sequences reach their limit by n = dim")
}

/// Smallest `n` such that `pred` holds for every entry from `n` on.
fn tail_index(seq: &[usize], pred: impl Fn(usize) -> bool) -> usize {
    seq.iter().rposition(|&v| !pred(v)).map_or(0, |i| i + 1)
}

pub fn is_finite(_dimension: usize) -> bool {
    true
}

/// Closedness of a subspace of `Q^d`: always true.
pub fn is_closed(_subspace: &Subspace) -> bool {
    true
}

impl InvariantProfile {
    pub fn from_chains(chains: &PowerChains) -> Self {
        let dim = chains.dim();
        let c_seq: Vec<usize> = (0..=dim).map(|n| chains.c(n)).collect();
        let cp_seq: Vec<usize> = (0..=dim).map(|n| chains.cp(n)).collect();
        let k_seq: Vec<usize> = (0..=dim).map(|n| chains.k(n)).collect();
        Self {
            dim,
            asc: first_index(&cp_seq, |v| v == 0),
            dsc: first_index(&c_seq, |v| v == 0),
            asc_e: first_index(&cp_seq, is_finite),
            dsc_e: first_index(&c_seq, is_finite),
            dis: tail_index(&k_seq, |v| v == 0),
            dis_e: tail_index(&k_seq, is_finite),
            k_total: k_seq.iter().sum(),
            c_total: c_seq.iter().sum(),
            cp_total: cp_seq.iter().sum(),
            hyper_kernel: chains.kernel(dim).clone(),
            hyper_range: chains.image(dim).clone(),
            c_seq,
            cp_seq,
            k_seq,
        }
    }
}

pub fn profile(t: &Mat) -> Result<InvariantProfile> {
    Ok(InvariantProfile::from_chains(&PowerChains::new(t)?))
}

/// Membership of one operator in `R_1..R_19`, index `i` stored at `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityClass {
    pub memberships: [bool; 19],
    pub notes: [&'static str; 19],
}

impl RegularityClass {
    pub fn contains(&self, i: usize) -> Result<bool> {
        check_index(i)?;
        Ok(self.memberships[i - 1])
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=19).contains(&i) {
        Ok(())
    } else {
        Err(LabError::RegularityIndex(i))
    }
}

const NOTES: [&str; 19] = [
    "c(T) = 0: surjective",
    "c(T) finite: always at finite dimension (lower semi-Browder)",
    "some c_d(T) = 0 with R(T^(d+1)) closed: always (d = dsc)",
    "every c_n(T) finite: always (lower semi-Fredholm)",
    "some c_d(T) finite with R(T^(d+1)) closed: always (d = 0)",
    "c'(T) = 0 and R(T) closed: injective",
    "c'(T) finite and R(T) closed: always (upper semi-Browder)",
    "some c'_d(T) = 0 with R(T^(d+1)) closed: always (d = asc)",
    "every c'_n(T) finite and R(T) closed: always (upper semi-Fredholm)",
    "some c'_d(T) finite with R(T^(d+1)) closed: always (d = 0)",
    "k(T) = 0 and R(T) closed: semi-regular",
    "k(T) finite and R(T) closed: always (essentially semi-regular)",
    "k_n(T) = 0 from some d on with R(T^(d+1)) closed: always (d = dis)",
    "every k_n(T) finite and R(T) closed: always",
    "k_n(T) finite from some d on with R(T^(d+1)) closed: always",
    "some c_d(T) = 0 with R(T) + N(T^d) closed: always (d = dsc)",
    "some c_d(T) finite with R(T) + N(T^d) closed: always",
    "k_n(T) = 0 from some d on with R(T) + N(T^d) closed: always (d = dis)",
    "k_n(T) finite from some d on with R(T) + N(T^d) closed: always",
];

impl RegularityClass {
    pub fn from_profile(p: &InvariantProfile, chains: &PowerChains) -> Self {
        let dims = 0..=p.dim;
        let range_closed = |k: usize| is_closed(chains.image(k));
        let sum_closed = |k: usize| is_closed(&chains.range_plus_kernel(k));
        let k_zero_from = |d: usize| p.k_seq[d.min(p.dim)..].iter().all(|&v| v == 0);
        let k_finite_from = |d: usize| p.k_seq[d.min(p.dim)..].iter().all(|&v| is_finite(v));

        let memberships = [
            p.c_total == 0,
            is_finite(p.c_total),
            dims.clone().any(|d| p.c_seq[d] == 0 && range_closed(d + 1)),
            p.c_seq.iter().all(|&v| is_finite(v)),
            dims.clone().any(|d| is_finite(p.c_seq[d]) && range_closed(d + 1)),
            p.cp_total == 0 && range_closed(1),
            is_finite(p.cp_total) && range_closed(1),
            dims.clone().any(|d| p.cp_seq[d] == 0 && range_closed(d + 1)),
            p.cp_seq.iter().all(|&v| is_finite(v)) && range_closed(1),
            dims.clone().any(|d| is_finite(p.cp_seq[d]) && range_closed(d + 1)),
            p.k_total == 0 && range_closed(1),
            is_finite(p.k_total) && range_closed(1),
            dims.clone().any(|d| k_zero_from(d) && range_closed(d + 1)),
            p.k_seq.iter().all(|&v| is_finite(v)) && range_closed(1),
            dims.clone().any(|d| k_finite_from(d) && range_closed(d + 1)),
            dims.clone().any(|d| p.c_seq[d] == 0 && sum_closed(d)),
            dims.clone().any(|d| is_finite(p.c_seq[d]) && sum_closed(d)),
            dims.clone().any(|d| k_zero_from(d) && sum_closed(d)),
            dims.clone().any(|d| k_finite_from(d) && sum_closed(d)),
        ];
        Self {
            memberships,
            notes: NOTES,
        }
    }
}

pub fn regularity_membership(t: &Mat) -> Result<RegularityClass> {
    let chains = PowerChains::new(t)?;
    let p = InvariantProfile::from_chains(&chains);
    Ok(RegularityClass::from_profile(&p, &chains))
}

/// `lambda ∈ σ_{R_i}(T)`, i.e. `T - lambda I ∉ R_i`.
pub fn sigma_r_membership(t: &Mat, lambda: &Rat, i: usize) -> Result<bool> {
    check_index(i)?;
    t.ensure_square()?;
    Ok(!regularity_membership(&t.shift(lambda))?.memberships[i - 1])
}

/// `dim N(T) - codim R(T)`; identically zero for square matrices.
pub fn fredholm_index(t: &Mat) -> Result<i64> {
    t.ensure_square()?;
    Ok(t.kernel().dim() as i64 - t.image().codim() as i64)
}

pub fn rational_eigenvalues(t: &Mat) -> Result<Vec<(Rat, usize)>> {
    Ok(t.charpoly()?.rational_roots())
}
