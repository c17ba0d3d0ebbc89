//! Super root data for B(0,n) = osp(1,2n), gl(m,n) and B(m,n) = osp(2m+1,2n).
//!
//! Bases: B(0,n) uses σ_1..σ_n with the identity form. gl(m,n) uses
//! ε_1..ε_m, δ_1..δ_n with form diag(+1.., -1..). B(m,n) uses the same
//! ordering with the ε's carrying -1 and the δ's +1, so that B(0,n) sits
//! inside it with (σ_i, σ_j) = δ_ij.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::weight::{half, int, is_integer, Rational, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B0n,
    GLmn,
    Bmn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        let spec = FamilySpec { family, m, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn b0n(n: usize) -> Result<Self> {
        Self::new(Family::B0n, 0, n)
    }

    pub fn gl(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::GLmn, m, n)
    }

    pub fn bmn(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::Bmn, m, n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidFamily(format!("{self}: n must be positive")));
        }
        match self.family {
            Family::B0n if self.m != 0 => {
                Err(Error::InvalidFamily(format!("B(0,n) requires m = 0, got m = {}", self.m)))
            }
            Family::Bmn if self.m == 0 => Err(Error::InvalidFamily("B(m,n) with m = 0 is B(0,n)".into())),
            _ => Ok(()),
        }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::B0n => self.n,
            Family::GLmn | Family::Bmn => self.m + self.n,
        }
    }

    pub fn is_osp_1_2l(&self) -> bool {
        self.family == Family::B0n
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::B0n => write!(f, "B(0,{})", self.n),
            Family::GLmn => write!(f, "gl({},{})", self.m, self.n),
            Family::Bmn => write!(f, "B({},{})", self.m, self.n),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `osp(1,4)`, `osp(3,2)`, `B(0,2)`, `B(1,1)` and `gl(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidFamily(format!("cannot parse family {s:?}"));
        let open = compact.find('(').ok_or_else(bad)?;
        if !compact.ends_with(')') {
            return Err(bad());
        }
        let name = compact[..open].to_ascii_lowercase();
        let (a, b) = compact[open + 1..compact.len() - 1].split_once(',').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        match name.as_str() {
            "b" if a == 0 => Self::b0n(b),
            "b" => Self::bmn(a, b),
            "gl" => Self::gl(a, b),
            "osp" => {
                if a.is_multiple_of(2) || b % 2 == 1 {
                    return Err(Error::InvalidFamily(format!("{s}: only osp(2m+1,2n) is supported")));
                }
                let (m, n) = ((a - 1) / 2, b / 2);
                if m == 0 {
                    Self::b0n(n)
                } else {
                    Self::bmn(m, n)
                }
            }
            _ => Err(bad()),
        }
    }
}

/// Positive even/odd roots, form, simple roots and ρ-vectors of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperRootData {
    spec: FamilySpec,
    delta0_plus: Vec<Weight>,
    delta1_plus: Vec<Weight>,
    delta1_plus_isotropic: Vec<Weight>,
    form: Matrix,
    simple_roots: Vec<Weight>,
    even_simple_roots: Vec<Weight>,
    rho: Weight,
    rho0: Weight,
    rho1: Weight,
    /// Left inverse of the simple-root matrix.
    simple_coord_map: Matrix,
}

/// Builds the root data for a family.
pub fn build_family(spec: FamilySpec) -> Result<SuperRootData> {
    spec.validate()?;
    let rank = spec.rank();
    let e = |i: usize| Weight::unit(rank, i);
    let mut delta0 = Vec::new();
    let mut delta1 = Vec::new();
    let mut simple = Vec::new();

    let form_diag: Vec<Rational> = match spec.family {
        Family::B0n => {
            let l = spec.n;
            for i in 0..l {
                for j in i + 1..l {
                    delta0.push(&e(i) - &e(j));
                    delta0.push(&e(i) + &e(j));
                }
            }
            for i in 0..l {
                delta0.push(e(i).scale(&int(2)));
                delta1.push(e(i));
            }
            for i in 0..l - 1 {
                simple.push(&e(i) - &e(i + 1));
            }
            simple.push(e(l - 1));
            vec![Rational::one(); l]
        }
        Family::GLmn => {
            let (m, n) = (spec.m, spec.n);
            let eps = |i: usize| e(i);
            let del = |j: usize| e(m + j);
            for i in 0..m {
                for j in i + 1..m {
                    delta0.push(&eps(i) - &eps(j));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    delta0.push(&del(i) - &del(j));
                }
            }
            for i in 0..m {
                for j in 0..n {
                    delta1.push(&eps(i) - &del(j));
                }
            }
            for i in 0..m.saturating_sub(1) {
                simple.push(&eps(i) - &eps(i + 1));
            }
            if m > 0 {
                simple.push(&eps(m - 1) - &del(0));
            }
            for j in 0..n - 1 {
                simple.push(&del(j) - &del(j + 1));
            }
            (0..m).map(|_| Rational::one()).chain((0..n).map(|_| -Rational::one())).collect()
        }
        Family::Bmn => {
            let (m, n) = (spec.m, spec.n);
            let eps = |i: usize| e(i);
            let del = |j: usize| e(m + j);
            for i in 0..m {
                for j in i + 1..m {
                    delta0.push(&eps(i) - &eps(j));
                    delta0.push(&eps(i) + &eps(j));
                }
                delta0.push(eps(i));
            }
            for i in 0..n {
                for j in i + 1..n {
                    delta0.push(&del(i) - &del(j));
                    delta0.push(&del(i) + &del(j));
                }
                delta0.push(del(i).scale(&int(2)));
            }
            for i in 0..n {
                for j in 0..m {
                    delta1.push(&del(i) - &eps(j));
                    delta1.push(&del(i) + &eps(j));
                }
                delta1.push(del(i));
            }
            for j in 0..n - 1 {
                simple.push(&del(j) - &del(j + 1));
            }
            simple.push(&del(n - 1) - &eps(0));
            for i in 0..m - 1 {
                simple.push(&eps(i) - &eps(i + 1));
            }
            simple.push(eps(m - 1));
            (0..m).map(|_| -Rational::one()).chain((0..n).map(|_| Rational::one())).collect()
        }
    };

    let form = Matrix::diagonal(&form_diag);
    let sum = |roots: &[Weight]| roots.iter().fold(Weight::zero(rank), |acc, r| &acc + r);
    let rho0 = sum(&delta0).scale(&half());
    let rho1 = sum(&delta1).scale(&half());
    let rho = &rho0 - &rho1;

    let inner_raw = |a: &Weight, b: &Weight| dot_form(&form, a, b);
    let isotropic = delta1.iter().filter(|b| inner_raw(b, b).is_zero()).cloned().collect();

    let even_simple = delta0
        .iter()
        .filter(|a| {
            !delta0.iter().any(|b| {
                let rest = *a - b;
                delta0.contains(&rest)
            })
        })
        .cloned()
        .collect();

    // L = (S^T S)^{-1} S^T is a left inverse for the full column rank matrix S.
    let s = Matrix::from_columns(rank, &simple);
    let st = s.transpose();
    let gram_inv = (&st * &s).inverse().expect("simple roots are linearly independent");
    let simple_coord_map = &gram_inv * &st;

    Ok(SuperRootData {
        spec,
        delta0_plus: delta0,
        delta1_plus: delta1,
        delta1_plus_isotropic: isotropic,
        form,
        simple_roots: simple,
        even_simple_roots: even_simple,
        rho,
        rho0,
        rho1,
        simple_coord_map,
    })
}

fn dot_form(form: &Matrix, a: &Weight, b: &Weight) -> Rational {
    let fb = form.apply(b);
    a.coords().iter().zip(fb.coords()).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

impl SuperRootData {
    pub fn spec(&self) -> FamilySpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn delta0_plus(&self) -> &[Weight] {
        &self.delta0_plus
    }

    pub fn delta1_plus(&self) -> &[Weight] {
        &self.delta1_plus
    }

    pub fn isotropic_roots(&self) -> &[Weight] {
        &self.delta1_plus_isotropic
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Simple roots of the even positive system Δ0⁺ (its indecomposable elements).
    pub fn even_simple_roots(&self) -> &[Weight] {
        &self.even_simple_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho0(&self) -> &Weight {
        &self.rho0
    }

    pub fn rho1(&self) -> &Weight {
        &self.rho1
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        w.ensure_rank(self.rank())
    }

    pub fn require_osp(&self, operation: &'static str) -> Result<()> {
        if self.spec.is_osp_1_2l() {
            Ok(())
        } else {
            Err(Error::WrongFamily { operation, family: self.spec.to_string() })
        }
    }

    /// The invariant bilinear form `μᵀ·F·ν`.
    pub fn inner(&self, mu: &Weight, nu: &Weight) -> Result<Rational> {
        self.check_rank(mu)?;
        self.check_rank(nu)?;
        Ok(dot_form(&self.form, mu, nu))
    }

    /// Coefficients of `x` over the simple roots, if `x` lies in their span.
    pub fn simple_coords(&self, x: &Weight) -> Result<Option<Vec<Rational>>> {
        self.check_rank(x)?;
        let coeffs = self.simple_coord_map.apply(x);
        let back = self
            .simple_roots
            .iter()
            .zip(coeffs.coords())
            .fold(Weight::zero(self.rank()), |acc, (r, c)| &acc + &r.scale(c));
        Ok((back == *x).then(|| coeffs.coords().to_vec()))
    }

    /// Sum of simple-root coefficients, extended linearly to all of h*.
    pub fn height(&self, x: &Weight) -> Result<Rational> {
        self.check_rank(x)?;
        Ok(self.simple_coord_map.apply(x).coord_sum())
    }

    /// `ν ≤ μ` iff `μ - ν` is an ℕ-combination of simple roots.
    pub fn leq(&self, nu: &Weight, mu: &Weight) -> Result<bool> {
        self.check_rank(nu)?;
        self.check_rank(mu)?;
        Ok(match self.simple_coords(&(mu - nu))? {
            Some(c) => c.iter().all(|x| is_integer(x) && !x.is_negative()),
            None => false,
        })
    }

    /// Strict version of [`leq`](Self::leq).
    pub fn lt(&self, nu: &Weight, mu: &Weight) -> Result<bool> {
        Ok(nu != mu && self.leq(nu, mu)?)
    }
}

pub fn inner(data: &SuperRootData, mu: &Weight, nu: &Weight) -> Result<Rational> {
    data.inner(mu, nu)
}

pub fn leq(data: &SuperRootData, nu: &Weight, mu: &Weight) -> Result<bool> {
    data.leq(nu, mu)
}

pub fn isotropic_roots(data: &SuperRootData) -> Vec<Weight> {
    data.isotropic_roots().to_vec()
}
