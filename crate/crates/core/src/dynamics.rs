//! The reserve-account model.
//!
//! A principal account pays one unit per tick into a reserve account `R`,
//! from which any nonnegative integer amount may be withdrawn as long as
//! the balance stays nonnegative. Deposits land before withdrawals, so the
//! amount withdrawn at tick `i` is `r_i + 1 - r_{i+1}` and the admissible
//! balance histories are exactly the codes shifted down by one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::enumeration::{enum_codes, rng_from_seed, CodeSampler, MAX_MATERIALIZED_N};
use crate::error::{Error, Result};
use crate::structures::{Code, Trajectory};

pub fn trajectory_from_code(c: &Code) -> Result<Trajectory> {
    Trajectory::from_code(c)
}

/// Amounts `w_1 … w_{n-1}` withdrawn from the reserve at each tick.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WithdrawalSchedule(Vec<u32>);

impl WithdrawalSchedule {
    pub fn amounts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&w| u64::from(w)).sum()
    }
}

impl fmt::Display for WithdrawalSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn withdrawals(t: &Trajectory) -> WithdrawalSchedule {
    WithdrawalSchedule(t.values().windows(2).map(|w| w[0] + 1 - w[1]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatsSource {
    Exact,
    MonteCarlo {
        seed: u64,
        samples: u64,
        shards: usize,
    },
}

/// Global statistics over trajectories of length `n`, kept as exact counts:
/// probabilities and expectations are ratios over `total` (`C_n` for exact
/// reports, the sample count for Monte Carlo ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatsReport {
    pub n: usize,
    pub source: StatsSource,
    /// `final_counts[r]` = number of trajectories ending at reserve `r`.
    pub final_counts: Vec<BigUint>,
    pub total: BigUint,
    pub sum_final: BigUint,
    pub sum_withdrawn: BigUint,
}

impl StatsReport {
    fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
        BigRational::new(num.clone().into(), den.clone().into())
    }

    /// `P(final reserve = r)`.
    pub fn probability(&self, r: usize) -> BigRational {
        let zero = BigUint::zero();
        Self::ratio(self.final_counts.get(r).unwrap_or(&zero), &self.total)
    }

    pub fn expected_final(&self) -> BigRational {
        Self::ratio(&self.sum_final, &self.total)
    }

    pub fn expected_withdrawals(&self) -> BigRational {
        Self::ratio(&self.sum_withdrawn, &self.total)
    }

    /// Named exact values, in a fixed order, for reporting.
    pub fn entries(&self) -> Vec<(String, BigRational)> {
        let mut out = vec![
            ("expected_final_reserve".to_string(), self.expected_final()),
            (
                "expected_total_withdrawals".to_string(),
                self.expected_withdrawals(),
            ),
        ];
        for r in 0..self.final_counts.len() {
            out.push((format!("p_final_{r}"), self.probability(r)));
        }
        out
    }
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            StatsSource::Exact => {
                writeln!(f, "n = {}, exact over {} trajectories", self.n, self.total)?
            }
            StatsSource::MonteCarlo {
                seed,
                samples,
                shards,
            } => writeln!(
                f,
                "n = {}, monte carlo: {samples} samples, seed {seed:#x}, {shards} shard(s)",
                self.n
            )?,
        }
        for (name, value) in self.entries() {
            let approx = rational_to_f64(&value);
            writeln!(f, "{name} = {value} ({approx:.6})")?;
        }
        Ok(())
    }
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Debug, Default)]
struct Tally {
    final_counts: Vec<u64>,
    sum_final: u64,
    sum_withdrawn: u64,
    total: u64,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally {
            final_counts: vec![0; n],
            ..Default::default()
        }
    }

    fn add(&mut self, c: &Code) {
        let t = Trajectory::from_code(c).expect("nonempty code");
        let r = t.final_reserve();
        self.final_counts[r as usize] += 1;
        self.sum_final += u64::from(r);
        self.sum_withdrawn += withdrawals(&t).total();
        self.total += 1;
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.final_counts.iter_mut().zip(other.final_counts) {
            *a += b;
        }
        self.sum_final += other.sum_final;
        self.sum_withdrawn += other.sum_withdrawn;
        self.total += other.total;
        self
    }

    fn into_report(self, n: usize, source: StatsSource) -> StatsReport {
        StatsReport {
            n,
            source,
            final_counts: self.final_counts.into_iter().map(BigUint::from).collect(),
            total: self.total.into(),
            sum_final: self.sum_final.into(),
            sum_withdrawn: self.sum_withdrawn.into(),
        }
    }
}

/// Exact statistics over every trajectory of length `n`.
pub fn exact_stats(n: usize) -> Result<StatsReport> {
    if n == 0 {
        return Err(Error::OutOfRange("statistics need n >= 1".into()));
    }
    if n > MAX_MATERIALIZED_N {
        return Err(Error::ResourceLimit(format!(
            "exact statistics enumerate at most n = {MAX_MATERIALIZED_N}, got {n}"
        )));
    }
    let mut tally = Tally::new(n);
    for c in enum_codes(n)? {
        tally.add(&c);
    }
    Ok(tally.into_report(n, StatsSource::Exact))
}

/// SplitMix64 step, used to derive independent shard seeds from one seed.
fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of shard `index` under master `seed`. With a single shard the
/// master seed is used directly.
pub fn shard_seed(seed: u64, index: usize, shards: usize) -> u64 {
    if shards <= 1 {
        seed
    } else {
        splitmix64(seed ^ splitmix64(index as u64))
    }
}

pub fn monte_carlo_stats(n: usize, samples: u64, seed: u64) -> Result<StatsReport> {
    monte_carlo_stats_sharded(n, samples, seed, 1)
}

/// Monte Carlo estimate from `samples` uniform codes split over `shards`
/// independent streams. The result depends only on `(n, samples, seed, shards)`.
pub fn monte_carlo_stats_sharded(
    n: usize,
    samples: u64,
    seed: u64,
    shards: usize,
) -> Result<StatsReport> {
    if n == 0 {
        return Err(Error::OutOfRange("statistics need n >= 1".into()));
    }
    if samples == 0 {
        return Err(Error::OutOfRange(
            "monte carlo needs at least one sample".into(),
        ));
    }
    let shards = shards.max(1);
    let sampler = CodeSampler::new(n);
    let per = samples / shards as u64;
    let extra = samples % shards as u64;
    let tally = (0..shards)
        .into_par_iter()
        .map(|i| {
            let count = per + u64::from((i as u64) < extra);
            let mut rng = rng_from_seed(shard_seed(seed, i, shards));
            let mut tally = Tally::new(n);
            for _ in 0..count {
                tally.add(&sampler.sample(&mut rng));
            }
            tally
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::new(n), Tally::merge);
    Ok(tally.into_report(
        n,
        StatsSource::MonteCarlo {
            seed,
            samples,
            shards,
        },
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn render_trajectory(t: &Trajectory, format: RenderFormat) -> String {
    render_trajectories(std::slice::from_ref(t), format)
}

/// Step plot of one or more trajectories. ASCII output has one column per
/// tick with `*` at the balance, top row first, and separates plots with a
/// blank line. SVG output overlays all trajectories in one document; the
/// all-zero and strictly rising trajectories are drawn dashed.
pub fn render_trajectories(ts: &[Trajectory], format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => ts.iter().map(ascii).collect::<Vec<_>>().join("\n"),
        RenderFormat::Svg => svg(ts),
    }
}

fn ascii(t: &Trajectory) -> String {
    let values = t.values();
    let top = values.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    for level in (0..=top).rev() {
        let line: String = values
            .iter()
            .map(|&r| if r == level { '*' } else { ' ' })
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn svg(ts: &[Trajectory]) -> String {
    const CELL: usize = 40;
    const PAD: usize = 20;
    let ticks = ts.iter().map(Trajectory::len).max().unwrap_or(0);
    let top = ts
        .iter()
        .flat_map(|t| t.values().iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let width = 2 * PAD + CELL * ticks;
    let height = 2 * PAD + CELL * (top + 1);
    let y = |r: u32| PAD + CELL * (top + 1) - CELL / 2 - CELL * r as usize;

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    out.push_str(&format!(
        "  <line x1=\"{PAD}\" y1=\"{b}\" x2=\"{x2}\" y2=\"{b}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
        b = y(0),
        x2 = width - PAD
    ));
    for t in ts {
        let values = t.values();
        let extreme = values.iter().all(|&r| r == 0)
            || values.iter().enumerate().all(|(i, &r)| r as usize == i);
        let mut points = Vec::with_capacity(2 * values.len());
        for (i, &r) in values.iter().enumerate() {
            points.push(format!("{},{}", PAD + CELL * i, y(r)));
            points.push(format!("{},{}", PAD + CELL * (i + 1), y(r)));
        }
        let dash = if extreme {
            " stroke-dasharray=\"4 4\""
        } else {
            ""
        };
        out.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\"{dash} points=\"{}\"/>\n",
            points.join(" ")
        ));
    }
    out.push_str("</svg>\n");
    out
}
