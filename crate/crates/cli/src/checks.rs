//! The registered checks: how each subcommand expands into parameter points
//! and what is verified at each point.

use std::collections::BTreeMap;
use std::time::Instant;

use pdg_core::cyclotomic::{binom_reduction_check, binomial};
use pdg_core::pdgmod::{end_formality_check, nh_acyclicity_check, nilhecke_relations_check, thick_nilhecke_check};
use pdg_core::qgroup::{frobenius_hom_check, k0_symbol_report, kernel_check, section_check, Ranges};
use pdg_core::symfunc::{
    e_prime, is_slash_coboundary, lima_partitions, split_vars, theta0, Partition, SchurComplex, SchurTensor,
};
use pdg_core::{Error, Prime};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::CliError;
use crate::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Slash,
    Twist,
    Lima,
    Vi,
    Binom,
    Nilhecke,
    Thick,
    Grass,
    Frobenius,
    Theta0,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::Slash,
        Command::Twist,
        Command::Lima,
        Command::Vi,
        Command::Binom,
        Command::Nilhecke,
        Command::Thick,
        Command::Grass,
        Command::Frobenius,
        Command::Theta0,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Slash => "verify-slash",
            Command::Twist => "verify-twist",
            Command::Lima => "verify-lima",
            Command::Vi => "verify-vi",
            Command::Binom => "verify-binom",
            Command::Nilhecke => "verify-nilhecke",
            Command::Thick => "verify-thick",
            Command::Grass => "verify-grass",
            Command::Frobenius => "verify-frobenius",
            Command::Theta0 => "verify-theta0",
        }
    }

    fn section(&self) -> &'static str {
        self.name().trim_start_matches("verify-")
    }
}

/// Command-line overrides; anything left `None` comes from the config.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub p: Option<i64>,
    pub n: Option<i64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub i: Option<i64>,
    pub k: Option<i64>,
    pub cap: Option<i64>,
    pub max: Option<i64>,
}

/// One check at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
}

impl CheckSpec {
    fn new(name: impl Into<String>, params: &[(&str, i64)]) -> Self {
        CheckSpec { name: name.into(), params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect() }
    }

    fn get(&self, key: &str) -> i64 {
        self.params[key]
    }

    fn prime(&self) -> Prime {
        Prime::new(self.get("p") as u32).expect("validated when planned")
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::InvalidParameter(msg.into())
}

fn sweep(flag: Option<i64>, config: &Config, key: &str) -> Result<Vec<i64>, CliError> {
    match flag {
        Some(x) => Ok(vec![x]),
        None => config.ints(key),
    }
}

fn check_prime(p: i64) -> Result<Prime, CliError> {
    u32::try_from(p).ok().and_then(|q| Prime::new(q).ok()).ok_or_else(|| invalid(format!("p = {p} is not a prime")))
}

fn default_cap(flags: &Flags, config: &Config, section: &str, p: i64) -> Result<i64, CliError> {
    let cap = match flags.cap {
        Some(c) => c,
        None => match config.int(&format!("{section}.cap.{p}"))? {
            Some(c) => c,
            None => config.int(&format!("{section}.cap"))?.unwrap_or(8 * p * p),
        },
    };
    if cap < 0 {
        return Err(invalid(format!("degree cap {cap} is negative")));
    }
    Ok(cap)
}

/// Expands a subcommand into its parameter points, rejecting invalid
/// combinations before anything runs.
pub fn plan(cmd: Command, flags: &Flags, config: &Config) -> Result<Vec<CheckSpec>, CliError> {
    let sec = cmd.section();
    let key = |k: &str| format!("{sec}.{k}");
    let primes = sweep(flags.p, config, &key("p"))?;
    let mut out = Vec::new();
    for &p in &primes {
        check_prime(p)?;
        match cmd {
            Command::Slash => {
                let cap = default_cap(flags, config, sec, p)?;
                for n in sweep(flags.n, config, &key("n"))? {
                    if n < 1 {
                        return Err(invalid("Sym_n needs n >= 1"));
                    }
                    out.push(CheckSpec::new(cmd.name(), &[("p", p), ("n", n), ("cap", cap)]));
                }
            }
            Command::Twist => {
                let cap = default_cap(flags, config, sec, p)?;
                for n in sweep(flags.n, config, &key("n"))? {
                    if n < 1 {
                        return Err(invalid("S_n(a) needs n >= 1"));
                    }
                    let r = n % p;
                    let twists: Vec<i64> = match flags.a {
                        Some(a) if (1..=r).contains(&a) => vec![a],
                        Some(a) => return Err(invalid(format!("twist a = {a} must lie in 1..={r} for n = {n}, p = {p}"))),
                        None => (1..=r).collect(),
                    };
                    for a in twists {
                        out.push(CheckSpec::new(cmd.name(), &[("p", p), ("n", n), ("a", a), ("cap", cap)]));
                    }
                }
            }
            Command::Lima => {
                let pairs = match (flags.a, flags.b) {
                    (Some(a), Some(b)) => vec![(a, b)],
                    (None, None) => config.pairs(&key("ab"))?,
                    _ => return Err(invalid("give both --a and --b or neither")),
                };
                for (a, b) in pairs {
                    if a < 0 || b < 0 {
                        return Err(invalid("a and b must be nonnegative"));
                    }
                    out.push(CheckSpec::new(cmd.name(), &[("p", p), ("a", a), ("b", b)]));
                }
            }
            Command::Vi => {
                let is: Vec<i64> = match flags.i {
                    Some(i) => vec![i],
                    None => (1..p).collect(),
                };
                for i in is {
                    if !(1..p).contains(&i) {
                        return Err(invalid(format!("V_i needs 1 <= i < p, got i = {i}")));
                    }
                    for k in sweep(flags.k, config, &key("k"))? {
                        if k < 1 {
                            return Err(invalid("V_i needs k >= 1"));
                        }
                        out.push(CheckSpec::new(cmd.name(), &[("p", p), ("i", i), ("k", k)]));
                    }
                }
            }
            Command::Binom => {
                let max = match flags.max {
                    Some(m) => m,
                    None => config.int(&key("max"))?.ok_or_else(|| CliError::Config(format!("missing key {sec}.max")))?,
                };
                if max < 0 {
                    return Err(invalid("--max must be nonnegative"));
                }
                out.push(CheckSpec::new(cmd.name(), &[("p", p), ("max", max)]));
            }
            Command::Nilhecke => {
                let cap = default_cap(flags, config, sec, p)?;
                out.push(CheckSpec::new(cmd.name(), &[("p", p), ("cap", cap)]));
            }
            Command::Thick => {
                let cap = default_cap(flags, config, sec, p)?;
                for a in sweep(flags.a, config, &key("a"))? {
                    if a < 1 || a * p > 6 {
                        return Err(invalid(format!("thick strands need 1 <= a and a*p <= 6, got a = {a}, p = {p}")));
                    }
                    out.push(CheckSpec::new(cmd.name(), &[("p", p), ("a", a), ("cap", cap)]));
                }
            }
            Command::Grass => {
                let cap = default_cap(flags, config, sec, p)?;
                out.push(CheckSpec::new(cmd.name(), &[("p", p), ("cap", cap)]));
            }
            Command::Frobenius => {
                let ab = flags.max.unwrap_or(2 * p);
                let weight = flags.n.unwrap_or(4 * p);
                if ab < 0 {
                    return Err(invalid("--max must be nonnegative"));
                }
                let range = [("p", p), ("max_ab", ab), ("max_weight", weight)];
                out.push(CheckSpec::new(format!("{}/hom", cmd.name()), &range));
                out.push(CheckSpec::new(format!("{}/kernel", cmd.name()), &range));
                let sab = config.int(&key("section_ab"))?.unwrap_or(3);
                let sn = config.int(&key("section_n"))?.unwrap_or(6);
                out.push(CheckSpec::new(
                    format!("{}/section", cmd.name()),
                    &[("p", p), ("max_ab", sab), ("max_weight", sn)],
                ));
                let pairs: Vec<(i64, i64)> = match (flags.a, flags.b) {
                    (Some(a), Some(b)) => vec![(a, b)],
                    (None, None) => {
                        let m = config.int(&key("k0_max"))?.unwrap_or(2);
                        (0..=m).flat_map(|a| (0..=m).map(move |b| (a, b))).collect()
                    }
                    _ => return Err(invalid("give both --a and --b or neither")),
                };
                for (a, b) in pairs {
                    if a < 0 || b < 0 {
                        return Err(invalid("a and b must be nonnegative"));
                    }
                    out.push(CheckSpec::new(format!("{}/k0", cmd.name()), &[("p", p), ("a", a), ("b", b)]));
                }
            }
            Command::Theta0 => {
                let max = match flags.max {
                    Some(m) => m,
                    None => config.int(&key("max"))?.unwrap_or(2),
                };
                for k in 1..=max {
                    out.push(CheckSpec::new(cmd.name(), &[("p", p), ("k", k)]));
                }
            }
        }
    }
    Ok(out)
}

/// Every subcommand at its defaults.
pub fn plan_all(config: &Config) -> Result<Vec<CheckSpec>, CliError> {
    let mut out = Vec::new();
    for cmd in Command::ALL {
        out.extend(plan(cmd, &Flags::default(), config)?);
    }
    Ok(out)
}

type Outcome = Result<(bool, Value), Error>;

pub fn run_spec(spec: &CheckSpec) -> Report {
    let start = Instant::now();
    let outcome = match spec.name.as_str() {
        "verify-slash" => slash(spec),
        "verify-twist" => twist(spec),
        "verify-lima" => lima(spec),
        "verify-vi" => vi(spec),
        "verify-binom" => binom(spec),
        "verify-nilhecke" => nilhecke(spec),
        "verify-thick" => thick(spec),
        "verify-grass" => grass(spec),
        "verify-frobenius/hom" | "verify-frobenius/kernel" | "verify-frobenius/section" => frobenius(spec),
        "verify-frobenius/k0" => k0(spec),
        "verify-theta0" => theta(spec),
        other => Err(Error::InvalidParameter(format!("unknown check {other}"))),
    };
    let (status, values) = match outcome {
        Ok((true, v)) => (Status::Pass, v),
        Ok((false, v)) => (Status::Fail, v),
        Err(Error::WindowTooSmall(msg)) => (Status::SkippedWindow, json!({ "error": msg })),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    Report {
        check: spec.name.clone(),
        params: spec.params.clone(),
        status,
        values,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the specs on at most `jobs` threads; reports keep the input order.
pub fn run(specs: &[CheckSpec], jobs: Option<usize>) -> Result<Vec<Report>, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(|| specs.par_iter().map(run_spec).collect()))
}

fn pairs<K: ToString + Copy, V: Copy>(m: &BTreeMap<K, V>) -> Vec<(K, V)> {
    m.iter().map(|(k, v)| (*k, *v)).collect()
}

/// Coefficients of Π_{j=1}^{m}(1 − t^{step·j})^{−1} up to degree hi.
fn partition_series(m: i64, step: i64, hi: i64) -> BTreeMap<i64, usize> {
    let len = if hi < 0 { 0 } else { (hi / step + 1) as usize };
    let mut coeffs = vec![0usize; len];
    if len > 0 {
        coeffs[0] = 1;
    }
    for j in 1..=m as usize {
        for e in j..len {
            coeffs[e] += coeffs[e - j];
        }
    }
    coeffs.into_iter().enumerate().map(|(e, c)| (e as i64 * step, c)).collect()
}

fn slash(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let (n, cap) = (spec.get("n") as usize, spec.get("cap"));
    let pu = p.get() as i64;
    let dims = SchurComplex::Sym { n: Some(n) }.build(p, Some(cap))?.slash_dims();
    let (lo, hi) = dims.valid;
    let series = partition_series(n as i64 / pu, 2 * pu * pu, hi);
    let computed = dims.per_k[0].support();
    let expected: BTreeMap<i64, usize> = series.into_iter().filter(|(d, c)| *d >= lo && *c > 0).collect();
    let higher = dims.per_k.iter().skip(1).all(|g| g.is_zero());
    let ok = higher && computed == expected;
    Ok((ok, json!({ "valid": [lo, hi], "h0": pairs(&computed), "expected": pairs(&expected), "higher_vanish": higher })))
}

fn twist(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let (n, a, cap) = (spec.get("n") as usize, spec.get("a") as u32, spec.get("cap"));
    let dims = SchurComplex::Twisted { n, a }.build(p, Some(cap))?.slash_dims();
    let nonzero: Vec<(usize, i64, usize)> = dims
        .per_k
        .iter()
        .enumerate()
        .flat_map(|(k, g)| g.support().into_iter().map(move |(d, m)| (k, d, m)))
        .collect();
    Ok((nonzero.is_empty(), json!({ "valid": [dims.valid.0, dims.valid.1], "nonzero": nonzero })))
}

fn lima(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let (a, b) = (spec.get("a") as usize, spec.get("b") as usize);
    let c = SchurComplex::V { a, b }.build(p, None)?;
    let dims = c.slash_dims();
    let total = dims.combined().total();
    let expected = binomial((a + b) as u64, a as u64);
    let mut by_degree: BTreeMap<i64, Vec<Partition>> = BTreeMap::new();
    for lam in lima_partitions(b, a, p) {
        by_degree.entry(2 * lam.size() as i64).or_default().push(lam);
    }
    let mut cocycles = true;
    let mut independent = true;
    let mut counts_match = dims.concentrated_in_zero();
    for (d, lams) in &by_degree {
        let mut vs = Vec::new();
        for lam in lams {
            let v = c
                .coordinates(*d, &[(lam.clone(), 1)])
                .ok_or_else(|| Error::Internal(format!("{lam} is not a basis vector of V")))?;
            cocycles &= c.apply(*d, &v).is_empty();
            vs.push(v);
        }
        independent &= c.independent_modulo_image(*d, p.get() as usize - 1, &vs);
        counts_match &= dims.per_k[0].get(*d) == Some(lams.len());
    }
    counts_match &= by_degree.values().map(Vec::len).sum::<usize>() == total;
    let ok = expected == total.into() && cocycles && independent && counts_match;
    let lima: Vec<String> = by_degree.values().flatten().map(|l| l.to_string()).collect();
    Ok((
        ok,
        json!({
            "dim": total,
            "expected_dim": expected.to_string(),
            "classes": pairs(&dims.combined().support()),
            "lima": lima,
            "cocycles": cocycles,
            "independent": independent,
        }),
    ))
}

fn vi(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let (i, k) = (spec.get("i") as usize, spec.get("k") as usize);
    let counts = SchurComplex::Vi { i, k }.build(p, None)?.string_counts();
    let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
    for ((_, len), m) in &counts.counts {
        *lengths.entry(*len).or_default() += m;
    }
    let ok = lengths.keys().all(|&l| l == p.get() as usize);
    Ok((ok, json!({ "string_lengths": pairs(&lengths) })))
}

fn binom(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let max = spec.get("max") as u64;
    let failures: Vec<(u64, u64)> =
        (0..=max).flat_map(|a| (0..=max).map(move |b| (a, b))).filter(|&(a, b)| !binom_reduction_check(a, b, p)).collect();
    Ok((failures.is_empty(), json!({ "checked": (max + 1) * (max + 1), "failures": failures })))
}

fn nilhecke(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let cap = spec.get("cap");
    let n = p.get() as usize;
    let relations = nilhecke_relations_check(n, p, 4 * n as i64)?;
    let acyclic = nh_acyclicity_check(p, cap)?;
    Ok((
        relations.passed && acyclic,
        json!({ "relations": relations.passed, "relations_failure": relations.failure, "acyclic": acyclic }),
    ))
}

fn thick(spec: &CheckSpec) -> Outcome {
    let r = thick_nilhecke_check(spec.get("a") as usize, spec.prime(), spec.get("cap"))?;
    Ok((
        r.passed(),
        json!({
            "crossing_squared": r.crossing_squared,
            "braid": r.braid,
            "dot_slide": r.dot_slide,
            "hilbert": r.hilbert,
            "valid": [r.valid.0, r.valid.1],
            "computed": pairs(&r.computed),
            "expected": pairs(&r.expected),
            "failures": r.failures,
        }),
    ))
}

fn grass(spec: &CheckSpec) -> Outcome {
    let r = end_formality_check(spec.prime(), spec.get("cap"))?;
    Ok((
        r.passed(),
        json!({
            "valid": [r.valid.0, r.valid.1],
            "computed": pairs(&r.computed),
            "expected": pairs(&r.expected),
            "higher_vanish": r.higher_vanish,
        }),
    ))
}

fn frobenius(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let ranges = Ranges::new(spec.get("max_ab") as u64, spec.get("max_weight"));
    let r = match spec.name.rsplit('/').next() {
        Some("hom") => frobenius_hom_check(p, ranges)?,
        Some("kernel") => kernel_check(p, ranges)?,
        _ => section_check(p, ranges),
    };
    Ok((r.passed(), json!({ "checked": r.checked, "counterexample": r.failure })))
}

fn k0(spec: &CheckSpec) -> Outcome {
    let r = k0_symbol_report(spec.get("a") as usize, spec.get("b") as usize, spec.prime())?;
    Ok((
        r.passed(),
        json!({
            "classes": r.classes,
            "lima_degrees": r.lima_degrees,
            "value": r.value.to_string(),
            "expected": r.expected.to_string(),
            "generator_shifted_value": r.shifted_value.to_string(),
            "generator_shifted_passes": r.shifted_passed(),
        }),
    ))
}

fn theta(spec: &CheckSpec) -> Outcome {
    let p = spec.prime();
    let pu = p.get() as usize;
    let k = spec.get("k") as usize;
    let image = theta0(&e_prime(k), None, p)?;
    let cocycle = image.diff().is_zero();
    let n = k * pu;
    let d = 2 * (k * pu * pu) as i64;
    let cap = d + 4 * pu as i64;
    let sym = SchurComplex::Sym { n: Some(n) }.build(p, Some(cap))?;
    let restricted = image.with_vars(Some(n));
    let terms: Vec<(Partition, u32)> = restricted.terms().iter().map(|(l, c)| (l.clone(), *c)).collect();
    let v = sym.coordinates(d, &terms).ok_or_else(|| Error::Internal("theta0 image outside Sym_n".into()))?;
    let nonzero_class = !sym.in_image_of_power(d, pu - 1, &v);
    let mut coproduct = Vec::new();
    for (a, b) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
        if (a + b) * pu > 8 {
            continue;
        }
        let (na, nb) = (a * pu, b * pu);
        let whole = theta0(&e_prime(k), Some(na + nb), p)?;
        let split = split_vars(&whole, na, nb)?;
        let mut expected = SchurTensor::zero(na, nb, p);
        for i in 0..=k {
            let left = theta0(&e_prime(i), Some(na), p)?;
            let right = theta0(&e_prime(k - i), Some(nb), p)?;
            for (key, c) in SchurTensor::pure(&left, &right, na, nb).terms {
                expected.add_term(key.0, key.1, c);
            }
        }
        coproduct.push((a, b, is_slash_coboundary(&split.sub(&expected)?)?));
    }
    let ok = cocycle && nonzero_class && coproduct.iter().all(|c| c.2);
    Ok((
        ok,
        json!({ "image": image.to_string(), "cocycle": cocycle, "nonzero_class": nonzero_class, "coproduct": coproduct }),
    ))
}
