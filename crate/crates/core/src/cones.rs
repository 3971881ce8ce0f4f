//! Preorders represented by sets of monotone functions into a finite chain.
//!
//! Functions `W -> p` are [`FuncTable`]s and are numbered as base-`p`
//! numerals with index 0 least significant; [`crate::brauer`] uses the same
//! numbering for its codes.

use crate::error::{Error, Result};
use crate::relcore::FiniteRelation;

/// Default cap on the size `p^n` of any enumerated function space.
pub const DEFAULT_FUNCTION_CAP: usize = 4096;

/// The linear order `0 < 1 < .. < size-1`, with `size >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    size: usize,
}

impl Chain {
    pub const TWO: Chain = Chain { size: 2 };

    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::ChainTooSmall(size));
        }
        Ok(Chain { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Greatest element.
    pub fn top(&self) -> u32 {
        (self.size - 1) as u32
    }

    /// `p^n`, refusing anything above `cap`.
    pub fn function_space_size(&self, n: usize, cap: usize) -> Result<usize> {
        let too_big = || Error::BoundExceeded {
            what: "function space size p^n",
            value: (self.size as u128).saturating_pow(n.min(u32::MAX as usize) as u32),
            limit: cap as u128,
        };
        let size = u32::try_from(n)
            .ok()
            .and_then(|n| self.size.checked_pow(n))
            .ok_or_else(too_big)?;
        if size > cap {
            return Err(too_big());
        }
        Ok(size)
    }
}

/// A function `{0, .., n-1} -> p` stored as its table of values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuncTable {
    values: Vec<u32>,
}

impl FuncTable {
    pub fn new(values: Vec<u32>) -> Self {
        FuncTable { values }
    }

    /// Checks every value against the chain.
    pub fn in_chain(values: Vec<u32>, chain: Chain) -> Result<Self> {
        if let Some(&value) = values.iter().find(|&&v| v as usize >= chain.size()) {
            return Err(Error::ValueOutOfChain {
                value,
                chain: chain.size(),
            });
        }
        Ok(FuncTable { values })
    }

    pub fn constant(domain_size: usize, value: u32) -> Self {
        FuncTable {
            values: vec![value; domain_size],
        }
    }

    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, i: usize) -> u32 {
        self.values[i]
    }

    /// Base-`p` code, index 0 least significant.
    pub fn encode(&self, chain: Chain) -> usize {
        self.values
            .iter()
            .rev()
            .fold(0, |acc, &v| acc * chain.size() + v as usize)
    }

    pub fn decode(code: usize, domain_size: usize, chain: Chain) -> Self {
        let mut rest = code;
        let values = (0..domain_size)
            .map(|_| {
                let v = rest % chain.size();
                rest /= chain.size();
                v as u32
            })
            .collect();
        FuncTable { values }
    }

    /// All functions `domain_size -> p` in code order.
    pub fn all(
        domain_size: usize,
        chain: Chain,
        cap: usize,
    ) -> Result<impl Iterator<Item = FuncTable>> {
        let count = chain.function_space_size(domain_size, cap)?;
        Ok((0..count).map(move |code| FuncTable::decode(code, domain_size, chain)))
    }
}

/// Characteristic function of the cone `{y | x R y}`.
pub fn cone_char(r: &FiniteRelation, x: usize, _chain: Chain) -> Result<FuncTable> {
    if x >= r.size() {
        return Err(Error::IndexOutOfRange {
            index: x,
            size: r.size(),
        });
    }
    Ok(FuncTable::new(
        (0..r.size()).map(|y| u32::from(r.contains(x, y))).collect(),
    ))
}

/// `x R y` implies `f(x) <= f(y)`.
pub fn is_monotone(r: &FiniteRelation, f: &FuncTable) -> bool {
    debug_assert_eq!(r.size(), f.domain_size());
    r.pairs().all(|(x, y)| f.get(x) <= f.get(y))
}

/// Every monotone function `W -> p`, in code order.
pub fn monotone_set(r: &FiniteRelation, chain: Chain) -> Result<Vec<FuncTable>> {
    monotone_set_capped(r, chain, DEFAULT_FUNCTION_CAP)
}

pub fn monotone_set_capped(r: &FiniteRelation, chain: Chain, cap: usize) -> Result<Vec<FuncTable>> {
    Ok(FuncTable::all(r.size(), chain, cap)?
        .filter(|f| is_monotone(r, f))
        .collect())
}

/// Every cone function takes the value 1 at its own apex.
pub fn check_prop1(r: &FiniteRelation, chain: Chain) -> Result<bool> {
    for x in 0..r.size() {
        if cone_char(r, x, chain)?.get(x) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every cone function is monotone for `r`.
pub fn check_prop2(r: &FiniteRelation, chain: Chain) -> Result<bool> {
    for x in 0..r.size() {
        if !is_monotone(r, &cone_char(r, x, chain)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x R y` iff every monotone function satisfies `f(x) <= f(y)`.
pub fn check_prop3_star(r: &FiniteRelation, chain: Chain) -> Result<bool> {
    check_prop3_star_capped(r, chain, DEFAULT_FUNCTION_CAP)
}

pub fn check_prop3_star_capped(r: &FiniteRelation, chain: Chain, cap: usize) -> Result<bool> {
    let monotone = monotone_set_capped(r, chain, cap)?;
    let n = r.size();
    Ok((0..n).all(|x| {
        (0..n).all(|y| {
            let below = monotone.iter().all(|f| f.get(x) <= f.get(y));
            r.contains(x, y) == below
        })
    }))
}
