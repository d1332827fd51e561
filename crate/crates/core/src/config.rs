//! Options shared by the factorization drivers.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::gf::GfElem;
use crate::poly::Poly;
use crate::Error;

/// Recombination method.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Subset search for few local factors, knapsack otherwise.
    Auto,
    /// One coefficient at a time (`Q`) or kernel intersection with
    /// increasing precision (`F_q(t)`).
    Knapsack,
    /// Single pass at the precision where the lattice provably equals the
    /// exponent lattice of the true factors.
    AllCoeffs,
    Zassenhaus,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Knapsack => "knapsack",
            Strategy::AllCoeffs => "all-coeffs",
            Strategy::Zassenhaus => "zassenhaus",
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "knapsack" => Ok(Strategy::Knapsack),
            "all-coeffs" => Ok(Strategy::AllCoeffs),
            "zassenhaus" => Ok(Strategy::Zassenhaus),
            _ => Err(Error::InvalidArgument(format!("unknown strategy {s:?}"))),
        }
    }
}

/// Degree bounds on the coefficients of `f g'/g` over `F_q(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundMode {
    Newton,
    Total,
    TDeg,
}

impl BoundMode {
    pub fn name(self) -> &'static str {
        match self {
            BoundMode::Newton => "newton",
            BoundMode::Total => "total",
            BoundMode::TDeg => "tdeg",
        }
    }
}

impl FromStr for BoundMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "newton" => Ok(BoundMode::Newton),
            "total" => Ok(BoundMode::Total),
            "tdeg" => Ok(BoundMode::TDeg),
            _ => Err(Error::InvalidArgument(format!("unknown bound mode {s:?}"))),
        }
    }
}

pub type TraceSink = Arc<dyn Fn(&str) + Send + Sync>;

#[derive(Clone)]
pub struct Config {
    pub strategy: Strategy,
    pub gamma: BigRational,
    /// Forced prime for `Q`.
    pub prime: Option<u64>,
    /// Forced place for `F_q(t)`, a monic irreducible in `t`.
    pub place: Option<Poly<GfElem>>,
    pub bound_mode: BoundMode,
    pub seed: u64,
    /// Largest number of local factors handled by subset search in
    /// [`Strategy::Auto`].
    pub zassenhaus_max_r: usize,
    pub trace: Option<TraceSink>,
}

pub const DEFAULT_SEED: u64 = 0x5eed;

impl Default for Config {
    fn default() -> Self {
        Config {
            strategy: Strategy::Auto,
            gamma: BigRational::from_integer(BigInt::from(2)),
            prime: None,
            place: None,
            bound_mode: BoundMode::Newton,
            seed: DEFAULT_SEED,
            zassenhaus_max_r: 10,
            trace: None,
        }
    }
}

impl fmt::Debug for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Config")
            .field("strategy", &self.strategy)
            .field("gamma", &self.gamma)
            .field("prime", &self.prime)
            .field("place", &self.place)
            .field("bound_mode", &self.bound_mode)
            .field("seed", &self.seed)
            .field("zassenhaus_max_r", &self.zassenhaus_max_r)
            .field("trace", &self.trace.is_some())
            .finish()
    }
}

impl Config {
    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    pub(crate) fn trace(&self, msg: impl FnOnce() -> String) {
        if let Some(t) = &self.trace {
            t(&msg());
        }
    }
}

/// Diagnostics for one squarefree part.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartStats {
    pub degree: usize,
    pub multiplicity: usize,
    pub place: String,
    pub r: usize,
    pub s: usize,
    pub ell_final: usize,
    /// `t`-degree of `v^ell` (function field case only).
    pub sigma: Option<usize>,
    pub strategy: String,
    /// Precision increases after the first attempt.
    pub escalations: usize,
}
