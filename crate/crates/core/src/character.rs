//! Kostant partition functions and truncated Verma characters.
//!
//! Weights are truncated by height below a reference weight: an entry
//! `ν` is kept when `ht(ref) - ht(ν) <= depth`, with `ht` the sum of
//! simple-root coefficients and `ref` the highest of the flag's highest
//! weights. For a single Verma module this is the usual depth below its
//! highest weight.

use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive};

use crate::central::Ambient;
use crate::error::Result;
use crate::flags::{GradedVermaFlag, Parity};
use crate::roots::SuperRootData;
use crate::weight::{int, is_integer, Rational, Weight, WeightFunction};

/// A root in simple-root coordinates, with whether it may repeat.
struct Part {
    coords: Vec<usize>,
    repeatable: bool,
}

fn parts(data: &SuperRootData, even_only: bool) -> Vec<Part> {
    let to_coords = |r: &Weight| -> Vec<usize> {
        data.simple_coords(r)
            .expect("root has family rank")
            .expect("root lies in the simple-root span")
            .iter()
            .map(|c| c.to_usize().expect("positive roots have non-negative integer coefficients"))
            .collect()
    };
    let mut out: Vec<Part> =
        data.delta0_plus().iter().map(|r| Part { coords: to_coords(r), repeatable: true }).collect();
    if !even_only {
        out.extend(data.delta1_plus().iter().map(|r| Part { coords: to_coords(r), repeatable: false }));
    }
    out
}

/// Counting table over the box `0..=dims[i]`, split by the parity of the
/// number of odd roots used.
struct PartitionTable {
    dims: Vec<usize>,
    strides: Vec<usize>,
    counts: Vec<[u64; 2]>,
}

impl PartitionTable {
    fn build(parts: &[Part], dims: &[usize]) -> Self {
        let mut strides = Vec::with_capacity(dims.len());
        let mut size = 1usize;
        for d in dims {
            strides.push(size);
            size *= d + 1;
        }
        let decode =
            |idx: usize| -> Vec<usize> { dims.iter().zip(&strides).map(|(d, s)| (idx / s) % (d + 1)).collect() };
        let cells: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let mut counts = vec![[0u64; 2]; size];
        counts[0] = [1, 0];
        for part in parts {
            if part.coords.iter().zip(dims).any(|(c, d)| c > d) {
                continue;
            }
            let offset: usize = part.coords.iter().zip(&strides).map(|(c, s)| c * s).sum();
            let fits = |idx: usize| cells[idx].iter().zip(&part.coords).all(|(x, c)| x >= c);
            if part.repeatable {
                for idx in 0..size {
                    if fits(idx) {
                        let [e, o] = counts[idx - offset];
                        counts[idx][0] += e;
                        counts[idx][1] += o;
                    }
                }
            } else {
                for idx in (0..size).rev() {
                    if fits(idx) {
                        let [e, o] = counts[idx - offset];
                        counts[idx][0] += o;
                        counts[idx][1] += e;
                    }
                }
            }
        }
        PartitionTable { dims: dims.to_vec(), strides, counts }
    }

    fn get(&self, coords: &[usize]) -> [u64; 2] {
        debug_assert!(coords.iter().zip(&self.dims).all(|(c, d)| c <= d));
        self.counts[coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum::<usize>()]
    }
}

/// Non-negative integer simple coordinates of `nu`, if any.
fn cone_coords(data: &SuperRootData, nu: &Weight) -> Result<Option<Vec<usize>>> {
    Ok(data.simple_coords(nu)?.and_then(|c| {
        c.iter()
            .map(|x| (is_integer(x) && !x.is_negative()).then(|| x.to_usize()).flatten())
            .collect::<Option<Vec<usize>>>()
    }))
}

/// Ways to write `nu` as an ℕ-combination of Δ0⁺ (`even_only`), or of Δ0⁺
/// plus distinct odd positive roots, split by the parity of the number of
/// odd roots used.
pub fn kostant_partition_split(data: &SuperRootData, even_only: bool, nu: &Weight) -> Result<[u64; 2]> {
    let Some(target) = cone_coords(data, nu)? else {
        return Ok([0, 0]);
    };
    let table = PartitionTable::build(&parts(data, even_only), &target);
    Ok(table.get(&target))
}

pub fn kostant_partition(data: &SuperRootData, even_only: bool, nu: &Weight) -> Result<u64> {
    let [e, o] = kostant_partition_split(data, even_only, nu)?;
    Ok(e + o)
}

/// Accumulates truncated Verma characters against a fixed reference height.
struct Truncator<'a> {
    data: &'a SuperRootData,
    depth: usize,
    ref_height: Rational,
    tables: HashMap<(bool, usize), PartitionTable>,
    out: [WeightFunction; 2],
}

impl<'a> Truncator<'a> {
    fn new(data: &'a SuperRootData, depth: usize, ref_height: Rational) -> Self {
        Truncator {
            data,
            depth,
            ref_height,
            tables: HashMap::new(),
            out: [WeightFunction::new(), WeightFunction::new()],
        }
    }

    /// Adds `multiplicity` copies of the Verma module over `ambient` with
    /// highest weight `top` and highest weight vector parity `parity`.
    fn add_verma(&mut self, ambient: Ambient, top: &Weight, parity: Parity, multiplicity: u64) -> Result<()> {
        let gap = &self.ref_height - self.data.height(top)?;
        let room = int(self.depth as i64) - gap;
        if room.is_negative() {
            return Ok(());
        }
        let budget = room.floor().to_integer().to_usize().expect("budget fits usize");
        let even_only = ambient == Ambient::G0;
        let k = self.data.simple_roots().len();
        let data = self.data;
        let table = self
            .tables
            .entry((even_only, budget))
            .or_insert_with(|| PartitionTable::build(&parts(data, even_only), &vec![budget; k]));
        let simple = self.data.simple_roots();
        let mut coords = vec![0usize; k];
        loop {
            if coords.iter().sum::<usize>() <= budget {
                let counts = table.get(&coords);
                let shift = simple
                    .iter()
                    .zip(&coords)
                    .fold(Weight::zero(top.rank()), |acc, (a, &c)| &acc + &a.scale(&int(c as i64)));
                let nu = top - &shift;
                for (j, &c) in counts.iter().enumerate() {
                    let p = if j == 0 { parity } else { parity.flip() };
                    self.out[p.bit() as usize].add_at(nu.clone(), c * multiplicity);
                }
            }
            // odometer over 0..=budget in each coordinate
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                coords[i] += 1;
                if coords[i] <= budget {
                    break;
                }
                coords[i] = 0;
                i += 1;
            }
        }
    }
}

fn max_height(data: &SuperRootData, flag: &GradedVermaFlag) -> Result<Option<Rational>> {
    let mut best: Option<Rational> = None;
    for (w, _, _) in flag.iter() {
        let h = data.height(w)?;
        if best.as_ref().is_none_or(|b| h > *b) {
            best = Some(h);
        }
    }
    Ok(best)
}

/// Truncated character of a flag split by parity: `[even part, odd part]`.
pub fn truncated_character_split(
    data: &SuperRootData,
    flag: &GradedVermaFlag,
    depth: usize,
) -> Result<[WeightFunction; 2]> {
    let Some(ref_height) = max_height(data, flag)? else {
        return Ok([WeightFunction::new(), WeightFunction::new()]);
    };
    let mut t = Truncator::new(data, depth, ref_height);
    for (w, p, m) in flag.iter() {
        t.add_verma(flag.ambient(), w, p, m)?;
    }
    Ok(t.out)
}

/// Truncated character of a flag, parities summed.
pub fn truncated_character(data: &SuperRootData, flag: &GradedVermaFlag, depth: usize) -> Result<WeightFunction> {
    let [even, odd] = truncated_character_split(data, flag, depth)?;
    Ok(&even + &odd)
}

/// Truncated character of `Ind_{g0}^{g} M(μ) ≅ Λ(g1) ⊗ M(μ)`, computed
/// directly as a sum of g0-Verma characters over subsets of all odd roots
/// (positive and negative). The reference weight is `μ + Σ Δ1⁺`.
pub fn truncated_induced_character_split(
    data: &SuperRootData,
    mu: &Weight,
    base: Parity,
    depth: usize,
) -> Result<[WeightFunction; 2]> {
    data.check_rank(mu)?;
    let odd: Vec<Weight> = data.delta1_plus().iter().flat_map(|b| [b.clone(), -b]).collect();
    let top = data.delta1_plus().iter().fold(mu.clone(), |acc, b| &acc + b);
    let mut t = Truncator::new(data, depth, data.height(&top)?);
    let n = odd.len();
    for mask in 0u64..(1 << n) {
        let chosen: Vec<&Weight> = (0..n).filter(|i| (mask >> i) & 1 == 1).map(|i| &odd[i]).collect();
        let weight = chosen.iter().fold(mu.clone(), |acc, b| &acc + *b);
        let parity = Parity::from_count(chosen.len()).plus(base);
        t.add_verma(Ambient::G0, &weight, parity, 1)?;
    }
    Ok(t.out)
}

pub fn truncated_induced_character(data: &SuperRootData, mu: &Weight, depth: usize) -> Result<WeightFunction> {
    let [even, odd] = truncated_induced_character_split(data, mu, Parity::Even, depth)?;
    Ok(&even + &odd)
}
