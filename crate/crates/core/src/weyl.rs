//! The Weyl group of the even part, generated by the even simple reflections.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::roots::{Family, SuperRootData};
use crate::weight::{int, Rational, Weight};

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A group element: an exact matrix plus one word in the simple reflections
/// that produces it. Equality is by matrix.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Matrix,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { matrix: Matrix::identity(rank), word: Vec::new() }
    }

    /// `s_α(x) = x - 2(x,α)/(α,α)·α`
    pub fn reflection(data: &SuperRootData, alpha: &Weight, index: usize) -> Result<Self> {
        let rank = data.rank();
        let norm = data.inner(alpha, alpha)?;
        let columns = (0..rank)
            .map(|j| {
                let e = Weight::unit(rank, j);
                let c = int(2) * data.inner(&e, alpha)? / &norm;
                Ok(&e - &alpha.scale(&c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeylElement { matrix: Matrix::from_columns(rank, &columns), word: vec![index] })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { matrix: &self.matrix * &other.matrix, word }
    }

    pub fn act(&self, mu: &Weight) -> Result<Weight> {
        mu.ensure_rank(self.rank())?;
        Ok(self.matrix.apply(mu))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.rank())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}

pub fn act(w: &WeylElement, mu: &Weight) -> Result<Weight> {
    w.act(mu)
}

/// `w.μ = w(μ+ρ) - ρ`
pub fn dot(data: &SuperRootData, w: &WeylElement, mu: &Weight) -> Result<Weight> {
    data.check_rank(mu)?;
    Ok(&w.act(&(mu + data.rho()))? - data.rho())
}

/// `w✻γ = w(γ-ρ1) + ρ1`, defined on the 0/1 cube Γ of osp(1,2l).
pub fn star(data: &SuperRootData, w: &WeylElement, gamma: &Weight) -> Result<Weight> {
    data.require_osp("star action")?;
    data.check_rank(gamma)?;
    if !crate::flags::in_gamma(gamma) {
        return Err(Error::NotInGamma(gamma.clone()));
    }
    Ok(&w.act(&(gamma - data.rho1()))? + data.rho1())
}

/// Coordinate block acted on by signed (or plain) permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PermBlock {
    range: Range<usize>,
    signed: bool,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    generators: Vec<WeylElement>,
    index: HashMap<Matrix, usize>,
    /// Set when the group is known to be the full product of (signed)
    /// permutation groups on these coordinate blocks.
    perm_blocks: Option<Vec<PermBlock>>,
}

pub fn generate(data: &SuperRootData) -> Result<WeylGroup> {
    generate_with_cap(data, DEFAULT_ORDER_CAP)
}

pub fn generate_with_cap(data: &SuperRootData, cap: usize) -> Result<WeylGroup> {
    let generators = data
        .even_simple_roots()
        .iter()
        .enumerate()
        .map(|(i, a)| WeylElement::reflection(data, a, i))
        .collect::<Result<Vec<_>>>()?;
    let mut group = WeylGroup::close(data.rank(), generators, cap)?;

    let spec = data.spec();
    let blocks = match spec.family {
        Family::B0n => vec![PermBlock { range: 0..spec.n, signed: true }],
        Family::GLmn => vec![
            PermBlock { range: 0..spec.m, signed: false },
            PermBlock { range: spec.m..spec.m + spec.n, signed: false },
        ],
        Family::Bmn => vec![
            PermBlock { range: 0..spec.m, signed: true },
            PermBlock { range: spec.m..spec.m + spec.n, signed: true },
        ],
    };
    let expected: usize = blocks.iter().map(|b| block_order(b.range.len(), b.signed)).product();
    if expected == group.order() && group.elements.iter().all(|w| w.matrix.is_signed_permutation()) {
        group.perm_blocks = Some(blocks);
    }
    Ok(group)
}

fn block_order(k: usize, signed: bool) -> usize {
    let fact: usize = (1..=k).product();
    if signed {
        fact << k
    } else {
        fact
    }
}

impl WeylGroup {
    /// Breadth-first closure of `generators` under right multiplication.
    fn close(rank: usize, generators: Vec<WeylElement>, cap: usize) -> Result<Self> {
        let identity = WeylElement::identity(rank);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity.matrix.clone(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let next = elements[i].compose(g);
                if index.contains_key(&next.matrix) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                index.insert(next.matrix.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
        Ok(WeylGroup { rank, elements, generators, index, perm_blocks: None })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first order; the identity comes first and each
    /// word is of minimal length.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(&w.matrix)
    }

    /// The group element with the same matrix as `matrix`, if present.
    pub fn find(&self, matrix: &Matrix) -> Option<&WeylElement> {
        self.index.get(matrix).map(|&i| &self.elements[i])
    }

    pub fn inverse(&self, w: &WeylElement) -> Option<&WeylElement> {
        let inv = w.matrix.inverse()?;
        self.find(&inv)
    }

    /// `{w(μ+s)}` or, with `unshift`, `{w(μ+s) - s}`.
    pub fn orbit(&self, mu: &Weight, shift: Option<&Weight>, unshift: bool) -> Result<BTreeSet<Weight>> {
        mu.ensure_rank(self.rank)?;
        let start = match shift {
            Some(s) => mu + s,
            None => mu.clone(),
        };
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.matrix.apply(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(match (shift, unshift) {
            (Some(s), true) => seen.into_iter().map(|x| &x - s).collect(),
            _ => seen,
        })
    }

    pub fn stabilizer(&self, mu: &Weight) -> Result<WeylGroup> {
        mu.ensure_rank(self.rank)?;
        let elements: Vec<WeylElement> = self.elements.iter().filter(|w| w.matrix.apply(mu) == *mu).cloned().collect();
        let index = elements.iter().enumerate().map(|(i, w)| (w.matrix.clone(), i)).collect();
        let mut sub = WeylGroup { rank: self.rank, elements, generators: Vec::new(), index, perm_blocks: None };
        sub.generators = sub.greedy_generators();
        Ok(sub)
    }

    /// Generators picked greedily until they generate every element.
    fn greedy_generators(&self) -> Vec<WeylElement> {
        let mut gens: Vec<WeylElement> = Vec::new();
        let mut reached: BTreeSet<Matrix> = BTreeSet::from([Matrix::identity(self.rank)]);
        for w in &self.elements {
            if reached.contains(&w.matrix) {
                continue;
            }
            gens.push(w.clone());
            let mut queue: VecDeque<Matrix> = reached.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &gens {
                    let y = &x * &g.matrix;
                    if reached.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        gens
    }

    pub fn is_subgroup_of(&self, other: &WeylGroup) -> bool {
        self.elements.iter().all(|w| other.contains(w))
    }

    /// Lexicographically greatest element of the orbit of `μ`.
    pub fn canonical_rep(&self, mu: &Weight) -> Result<Weight> {
        mu.ensure_rank(self.rank)?;
        if let Some(blocks) = &self.perm_blocks {
            return Ok(canonical_by_blocks(blocks, mu));
        }
        Ok(self.canonical_rep_exhaustive(mu))
    }

    /// Canonical representative computed by applying every element.
    pub fn canonical_rep_exhaustive(&self, mu: &Weight) -> Weight {
        self.elements.iter().map(|w| w.matrix.apply(mu)).max().expect("group contains the identity")
    }
}

fn canonical_by_blocks(blocks: &[PermBlock], mu: &Weight) -> Weight {
    let mut coords: Vec<Rational> = mu.coords().to_vec();
    for b in blocks {
        let part = &mut coords[b.range.clone()];
        if b.signed {
            for x in part.iter_mut() {
                if *x < Rational::from_integer(0.into()) {
                    *x = -x.clone();
                }
            }
        }
        part.sort_by(|a, b| b.cmp(a));
    }
    Weight::new(coords)
}

pub fn orbit(group: &WeylGroup, mu: &Weight, shifted_by: Option<&Weight>) -> Result<BTreeSet<Weight>> {
    group.orbit(mu, shifted_by, false)
}

pub fn stabilizer(group: &WeylGroup, mu: &Weight) -> Result<WeylGroup> {
    group.stabilizer(mu)
}

pub fn canonical_rep(group: &WeylGroup, mu: &Weight) -> Result<Weight> {
    group.canonical_rep(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_family, FamilySpec};

    fn setup(l: usize) -> (SuperRootData, WeylGroup) {
        let d = build_family(FamilySpec::b0n(l).unwrap()).unwrap();
        let g = generate(&d).unwrap();
        (d, g)
    }

    fn element_with_matrix(g: &WeylGroup, columns: &[Weight]) -> WeylElement {
        let m = Matrix::from_columns(g.rank(), columns);
        g.find(&m).expect("element in group").clone()
    }

    fn swap(g: &WeylGroup) -> WeylElement {
        element_with_matrix(g, &[Weight::from_ints(&[0, 1]), Weight::from_ints(&[1, 0])])
    }

    fn flip2(g: &WeylGroup) -> WeylElement {
        element_with_matrix(g, &[Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, -1])])
    }

    #[test]
    fn group_orders() {
        assert_eq!(setup(1).1.order(), 2);
        assert_eq!(setup(2).1.order(), 8);
        assert_eq!(setup(3).1.order(), 48);
    }

    #[test]
    fn cap_is_enforced() {
        let d = build_family(FamilySpec::b0n(3).unwrap()).unwrap();
        assert_eq!(generate_with_cap(&d, 10).unwrap_err(), Error::GroupTooLarge { cap: 10 });
    }

    #[test]
    fn linear_action_examples() {
        let (_, g) = setup(2);
        let mu = Weight::from_ratios(&[(5, 2), (1, 2)]);
        assert_eq!(g.identity().act(&mu).unwrap(), mu);
        assert_eq!(swap(&g).act(&mu).unwrap(), Weight::from_ratios(&[(1, 2), (5, 2)]));
        let ab = Weight::from_ratios(&[(2, 7), (-3, 5)]);
        assert_eq!(flip2(&g).act(&ab).unwrap(), Weight::from_ratios(&[(2, 7), (3, 5)]));
        assert!(g.identity().act(&Weight::zero(3)).is_err());
    }

    #[test]
    fn dot_action_examples() {
        let (d, g) = setup(2);
        let lam = Weight::from_ints(&[1, 0]);
        assert_eq!(dot(&d, g.identity(), &lam).unwrap(), lam);
        assert_eq!(dot(&d, &swap(&g), &lam).unwrap(), Weight::from_ints(&[-1, 2]));
        let minus_rho = -d.rho();
        assert_eq!(dot(&d, &flip2(&g), &minus_rho).unwrap(), minus_rho);
    }

    #[test]
    fn star_action_examples() {
        let (d, g) = setup(2);
        let gamma = Weight::from_ints(&[1, 0]);
        assert_eq!(star(&d, g.identity(), &gamma).unwrap(), gamma);
        assert_eq!(star(&d, &flip2(&g), &Weight::from_ints(&[0, 0])).unwrap(), Weight::from_ints(&[0, 1]));
        assert_eq!(star(&d, &swap(&g), &gamma).unwrap(), Weight::from_ints(&[0, 1]));
        assert!(matches!(star(&d, &swap(&g), &Weight::from_ints(&[2, 0])), Err(Error::NotInGamma(_))));
        let gl = build_family(FamilySpec::gl(1, 1).unwrap()).unwrap();
        let ggl = generate(&gl).unwrap();
        assert!(matches!(star(&gl, ggl.identity(), &Weight::zero(2)), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn orbit_examples() {
        let (d, g) = setup(2);
        assert_eq!(g.orbit(&Weight::zero(2), None, false).unwrap().len(), 1);
        let lam = &Weight::from_ratios(&[(5, 2), (3, 2)]) - d.rho();
        assert_eq!(g.orbit(&lam, Some(d.rho()), false).unwrap().len(), 8);
        let o = g.orbit(&Weight::from_ints(&[1, 1]), None, false).unwrap();
        let expected: BTreeSet<Weight> =
            [[1, 1], [1, -1], [-1, 1], [-1, -1]].iter().map(|c| Weight::from_ints(c)).collect();
        assert_eq!(o, expected);
    }

    #[test]
    fn stabilizer_examples() {
        let (_, g) = setup(2);
        assert_eq!(g.stabilizer(&Weight::from_ratios(&[(5, 2), (-3, 2)])).unwrap().order(), 1);
        let s = g.stabilizer(&Weight::from_ints(&[3, 0])).unwrap();
        assert_eq!(s.order(), 2);
        assert!(s.contains(&flip2(&g)));
        assert_eq!(g.stabilizer(&Weight::zero(2)).unwrap().order(), 8);
        let (_, g3) = setup(3);
        let s3 = g3.stabilizer(&Weight::from_ints(&[1, 1, 0])).unwrap();
        assert_eq!(s3.order(), 4);
        assert!(!s3.generators().is_empty());
    }

    #[test]
    fn canonical_rep_examples() {
        let (_, g) = setup(2);
        assert_eq!(
            g.canonical_rep(&Weight::from_ratios(&[(-5, 2), (3, 2)])).unwrap(),
            Weight::from_ratios(&[(5, 2), (3, 2)])
        );
        assert_eq!(g.canonical_rep(&Weight::zero(2)).unwrap(), Weight::zero(2));
        assert_eq!(
            g.canonical_rep(&Weight::from_ratios(&[(1, 2), (-5, 2)])).unwrap(),
            Weight::from_ratios(&[(5, 2), (1, 2)])
        );
    }

    #[test]
    fn fast_canonical_rep_agrees_with_exhaustive() {
        let specs = [FamilySpec::b0n(3).unwrap(), FamilySpec::gl(2, 2).unwrap(), FamilySpec::bmn(1, 2).unwrap()];
        let samples = [[(3, 2), (-1, 1), (0, 1)], [(-1, 3), (-1, 3), (2, 1)], [(0, 1), (-7, 2), (7, 2)]];
        for spec in specs {
            let d = build_family(spec).unwrap();
            let g = generate(&d).unwrap();
            assert!(g.perm_blocks.is_some(), "{spec}");
            for s in &samples {
                let mut coords: Vec<(i64, i64)> = s.to_vec();
                coords.resize(d.rank(), (1, 5));
                let mu = Weight::from_ratios(&coords);
                assert_eq!(g.canonical_rep(&mu).unwrap(), g.canonical_rep_exhaustive(&mu), "{spec} {mu}");
            }
        }
    }

    #[test]
    fn inverse_and_words() {
        let (d, g) = setup(3);
        for w in g.elements() {
            let inv = g.inverse(w).unwrap();
            assert!(w.compose(inv).is_identity());
            // the word reproduces the matrix
            let rebuilt =
                w.word().iter().fold(WeylElement::identity(d.rank()), |acc, &i| acc.compose(&g.generators()[i]));
            assert_eq!(&rebuilt, w);
        }
    }
}
