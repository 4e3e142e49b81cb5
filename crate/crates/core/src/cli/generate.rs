//! Seeded point-set generators: lattice grids, uniform random points, and
//! planted collinear lines with noise.

use std::collections::HashSet;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cli::CliError;
use crate::geometry::{Point, PointSet, COORD_BOUND};

const DEFAULT_RANDOM_BOX: i64 = 1000;
const PLANT_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    /// All integer points of `[0, w) x [0, h)`.
    Grid { w: i64, h: i64 },
    /// `n` distinct uniform points in `[-bound, bound]^2`.
    Random { n: usize, bound: i64 },
    /// `lines` random lines with `per_line` points each, plus `noise` extra
    /// points, all in `[-bound, bound]^2`.
    Planted {
        lines: usize,
        per_line: usize,
        noise: usize,
        bound: i64,
    },
}

fn bad(spec: &str, why: &str) -> CliError {
    CliError::Generator(format!("'{spec}': {why}"))
}

fn parse_num<T: FromStr>(spec: &str, s: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| bad(spec, &format!("'{s}' is not a number")))
}

impl FromStr for GenSpec {
    type Err = CliError;

    /// Accepts `grid:WxH`, `random:N[,box=B]` and
    /// `planted:lines=L,per_line=K,noise=R[,box=B]`.
    fn from_str(spec: &str) -> Result<Self, CliError> {
        let (kind, args) = spec
            .split_once(':')
            .ok_or_else(|| bad(spec, "expected <kind>:<args>"))?;
        match kind {
            "grid" => {
                let (w, h) = args
                    .split_once(['x', 'X', '×'])
                    .ok_or_else(|| bad(spec, "expected grid:WxH"))?;
                let (w, h) = (parse_num(spec, w)?, parse_num(spec, h)?);
                if w < 1 || h < 1 {
                    return Err(bad(spec, "grid sides must be positive"));
                }
                Ok(GenSpec::Grid { w, h })
            }
            "random" => {
                let mut parts = args.split(',');
                let n = parse_num(spec, parts.next().unwrap_or(""))?;
                let mut bound = DEFAULT_RANDOM_BOX;
                for kv in parts {
                    match kv.split_once('=') {
                        Some(("box", v)) => bound = parse_num(spec, v)?,
                        _ => return Err(bad(spec, &format!("unknown option '{kv}'"))),
                    }
                }
                Ok(GenSpec::Random { n, bound })
            }
            "planted" => {
                let (mut lines, mut per_line, mut noise, mut bound) = (None, None, 0, None);
                for kv in args.split(',') {
                    match kv.split_once('=') {
                        Some(("lines", v)) => lines = Some(parse_num(spec, v)?),
                        Some(("per_line", v)) => per_line = Some(parse_num(spec, v)?),
                        Some(("noise", v)) => noise = parse_num(spec, v)?,
                        Some(("box", v)) => bound = Some(parse_num(spec, v)?),
                        _ => return Err(bad(spec, &format!("unknown option '{kv}'"))),
                    }
                }
                let lines = lines.ok_or_else(|| bad(spec, "missing lines="))?;
                let per_line: usize = per_line.ok_or_else(|| bad(spec, "missing per_line="))?;
                let bound = bound.unwrap_or_else(|| (2 * per_line as i64).max(100));
                Ok(GenSpec::Planted {
                    lines,
                    per_line,
                    noise,
                    bound,
                })
            }
            _ => Err(bad(spec, "unknown generator kind")),
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> Point {
    Point::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Range of `t` with `a + t * d` in `[-bound, bound]`.
fn t_range(a: i64, d: i64, bound: i64) -> (i64, i64) {
    match d.signum() {
        0 => (i64::MIN / 4, i64::MAX / 4),
        1 => {
            let lo = (-bound - a).div_euclid(d) + i64::from((-bound - a).rem_euclid(d) != 0);
            (lo, (bound - a).div_euclid(d))
        }
        _ => t_range(-a, -d, bound),
    }
}

impl GenSpec {
    pub fn generate(&self, seed: u64) -> Result<PointSet, CliError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = match *self {
            GenSpec::Grid { w, h } => {
                if w > COORD_BOUND || h > COORD_BOUND {
                    return Err(CliError::Generator("grid exceeds coordinate bound".into()));
                }
                (0..w)
                    .flat_map(|x| (0..h).map(move |y| Point::new(x, y)))
                    .collect()
            }
            GenSpec::Random { n, bound } => {
                check_bound(bound)?;
                let side = 2 * bound as u128 + 1;
                if (n as u128) > side * side {
                    return Err(CliError::Generator(format!(
                        "{n} distinct points do not fit in box {bound}"
                    )));
                }
                let mut seen = HashSet::with_capacity(n);
                let mut points = Vec::with_capacity(n);
                while points.len() < n {
                    let q = random_point(&mut rng, bound);
                    if seen.insert(q) {
                        points.push(q);
                    }
                }
                points
            }
            GenSpec::Planted {
                lines,
                per_line,
                noise,
                bound,
            } => plant(&mut rng, lines, per_line, noise, bound)?,
        };
        Ok(PointSet::new(points)?)
    }
}

fn check_bound(bound: i64) -> Result<(), CliError> {
    if !(0..=COORD_BOUND).contains(&bound) {
        return Err(CliError::Generator(format!(
            "box {bound} outside [0, 2^30]"
        )));
    }
    Ok(())
}

fn plant(
    rng: &mut ChaCha8Rng,
    lines: usize,
    per_line: usize,
    noise: usize,
    bound: i64,
) -> Result<Vec<Point>, CliError> {
    check_bound(bound)?;
    let mut seen = HashSet::new();
    let mut points = Vec::new();
    let mut push = |q: Point, points: &mut Vec<Point>| {
        if seen.insert(q) {
            points.push(q);
        }
    };

    for _ in 0..lines {
        let mut planted = false;
        for _ in 0..PLANT_ATTEMPTS {
            let (dx, dy) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            if (dx == 0 && dy == 0) || gcd(dx, dy) != 1 {
                continue;
            }
            let anchor = random_point(rng, bound);
            let (lx, hx) = t_range(anchor.x, dx, bound);
            let (ly, hy) = t_range(anchor.y, dy, bound);
            let (lo, hi) = (lx.max(ly), hx.min(hy));
            let span = (hi - lo + 1) as usize;
            if span < per_line {
                continue;
            }
            for t in sample(rng, span, per_line).into_iter() {
                let t = lo + t as i64;
                push(
                    Point::new(anchor.x + t * dx, anchor.y + t * dy),
                    &mut points,
                );
            }
            planted = true;
            break;
        }
        if !planted {
            return Err(CliError::Generator(format!(
                "cannot fit a line of {per_line} points in box {bound}"
            )));
        }
    }

    let side = 2 * bound as u128 + 1;
    if (points.len() + noise) as u128 > side * side {
        return Err(CliError::Generator(format!(
            "{noise} noise points do not fit in box {bound}"
        )));
    }
    let target = points.len() + noise;
    while points.len() < target {
        let q = random_point(rng, bound);
        push(q, &mut points);
    }
    Ok(points)
}
