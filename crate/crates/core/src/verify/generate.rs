//! Seeded instance generators: twisted complexes with `d o d = 0`, crowned
//! diagrams in the admissible subcategory, and random chain maps.

use crate::exactlin::{kernel_basis, saturation_and_projection, IntMatrix};
use crate::franke::{q_inverse, CrownedDiagram};
use crate::percomplex::{ChainMap, PeriodicComplex};
use crate::Result;

use super::rng::SplitMix64;

fn random_matrix(rng: &mut SplitMix64, rows: usize, cols: usize, max_entry: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| crate::exactlin::Int::from(rng.entry(max_entry)))
}

/// Degreewise-free twisted complex with `d o d = 0`: the last differential is
/// sampled freely, earlier ones are random maps composed with the projection
/// that kills the saturation of the incoming image, and the wrap-around
/// differential is additionally forced into the kernel of its successor.
pub fn generate_twisted(
    rng: &mut SplitMix64,
    period: usize,
    max_rank: usize,
    max_entry: i64,
) -> PeriodicComplex {
    let ranks: Vec<usize> = (0..period).map(|_| rng.below(max_rank + 1)).collect();
    let prev = |n: usize| (n + period - 1) % period;

    let mut diff: Vec<IntMatrix> = (0..period)
        .map(|n| IntMatrix::zero(ranks[prev(n)], ranks[n]))
        .collect();

    // d_{N-1} free, then walk down: d_{n-1} must kill im(d_n).
    diff[period - 1] = random_matrix(rng, ranks[period - 2], ranks[period - 1], max_entry);
    for n in (2..period).rev() {
        let (_, proj) = saturation_and_projection(&diff[n]);
        let r = random_matrix(rng, ranks[prev(n - 1)], proj.rows(), max_entry);
        diff[n - 1] = r.mul(&proj);
    }
    // d_0: slot 0 -> slot N-1 must kill im(d_1) and land inside ker(d_{N-1}).
    let (_, proj) = saturation_and_projection(&diff[1]);
    let ker = kernel_basis(&diff[period - 1]);
    let m = random_matrix(rng, ker.cols(), proj.rows(), max_entry);
    diff[0] = ker.mul(&m).mul(&proj);

    PeriodicComplex::new(period, ranks, diff).expect("generator maintains d o d = 0")
}

/// A crowned diagram satisfying the projectivity hypothesis: the split crown
/// of a random twisted complex.
pub fn generate_crown(
    rng: &mut SplitMix64,
    period: usize,
    max_rank: usize,
    max_entry: i64,
) -> Result<(PeriodicComplex, CrownedDiagram)> {
    let m = generate_twisted(rng, period, max_rank, max_entry);
    let x = q_inverse(&m)?;
    Ok((m, x))
}

/// A random chain map `x -> y`, sampled exactly from the lattice of chain
/// maps (the kernel of the commutation constraints).
pub fn generate_chain_map(
    rng: &mut SplitMix64,
    x: &PeriodicComplex,
    y: &PeriodicComplex,
    max_entry: i64,
) -> Result<ChainMap> {
    let p = x.period();
    let prev = |n: usize| (n + p - 1) % p;
    // unknowns: entries of f_n (target.rank(n) x source.rank(n)), row-major
    let mut offsets = vec![0usize; p];
    let mut total = 0;
    for n in 0..p {
        offsets[n] = total;
        total += y.rank(n) * x.rank(n);
    }
    // constraints per slot n: d_Y f_n - f_{n-1} d_X = 0, entrywise
    let mut rows = 0;
    for n in 0..p {
        rows += y.rank(prev(n)) * x.rank(n);
    }
    let mut c = IntMatrix::zero(rows, total);
    let mut row0 = 0;
    for n in 0..p {
        let dy = y.differential(n);
        let dx = x.differential(n);
        let (ry, rx, ry1) = (y.rank(n), x.rank(n), y.rank(prev(n)));
        // (d_Y f_n)[a, b] = sum_k dy[a, k] f_n[k, b]
        for a in 0..ry1 {
            for b in 0..rx {
                let row = row0 + a * rx + b;
                for k in 0..ry {
                    if !dy[(a, k)].is_zero() {
                        c[(row, offsets[n] + k * rx + b)] =
                            c[(row, offsets[n] + k * rx + b)].add(&dy[(a, k)]);
                    }
                }
                // -(f_{n-1} d_X)[a, b] = -sum_k f_{n-1}[a, k] dx[k, b]
                for k in 0..x.rank(prev(n)) {
                    if !dx[(k, b)].is_zero() {
                        let col = offsets[prev(n)] + a * x.rank(prev(n)) + k;
                        c[(row, col)] = c[(row, col)].sub(&dx[(k, b)]);
                    }
                }
            }
        }
        row0 += ry1 * rx;
    }
    let lattice = kernel_basis(&c);
    let coeffs = random_matrix(rng, lattice.cols(), 1, max_entry);
    let solution = lattice.mul(&coeffs);
    let blocks: Vec<IntMatrix> = (0..p)
        .map(|n| {
            IntMatrix::from_fn(y.rank(n), x.rank(n), |a, b| {
                solution[(offsets[n] + a * x.rank(n) + b, 0)].clone()
            })
        })
        .collect();
    ChainMap::new(x.clone(), y.clone(), blocks)
}

/// A random injective matrix (full column rank), by rejection.
pub fn generate_injective_matrix(
    rng: &mut SplitMix64,
    rows: usize,
    cols: usize,
    max_entry: i64,
) -> IntMatrix {
    assert!(rows >= cols);
    loop {
        let m = random_matrix(rng, rows, cols, max_entry);
        if kernel_basis(&m).cols() == 0 {
            return m;
        }
    }
}

/// Greedy shrink of a failing twisted complex: try zeroing entries and
/// dropping the last generator of each slot while the failure reproduces.
pub fn shrink_twisted(
    m: &PeriodicComplex,
    still_fails: &mut dyn FnMut(&PeriodicComplex) -> bool,
) -> PeriodicComplex {
    let mut best = m.clone();
    let mut changed = true;
    while changed {
        changed = false;
        // zero out entries
        'outer: for n in 0..best.period() {
            let d = best.differential(n);
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let mut cand_diff: Vec<IntMatrix> =
                        (0..best.period()).map(|k| best.differential(k).clone()).collect();
                    cand_diff[n][(i, j)] = crate::exactlin::Int::ZERO;
                    if let Ok(cand) =
                        PeriodicComplex::new(best.period(), best.ranks().to_vec(), cand_diff)
                    {
                        if still_fails(&cand) {
                            best = cand;
                            changed = true;
                            continue 'outer;
                        }
                    }
                }
            }
        }
        // drop the last generator of a slot
        for slot in 0..best.period() {
            if best.rank(slot) == 0 {
                continue;
            }
            let mut ranks = best.ranks().to_vec();
            ranks[slot] -= 1;
            let prev = (slot + best.period() - 1) % best.period();
            let next = (slot + 1) % best.period();
            let cand_diff: Vec<IntMatrix> = (0..best.period())
                .map(|k| {
                    let d = best.differential(k);
                    let rows = if k == next { d.rows() - 1 } else { d.rows() };
                    let cols = if k == slot { d.cols() - 1 } else { d.cols() };
                    let _ = prev;
                    IntMatrix::from_fn(rows, cols, |i, j| d[(i, j)].clone())
                })
                .collect();
            if let Ok(cand) = PeriodicComplex::new(best.period(), ranks, cand_diff) {
                if still_fails(&cand) {
                    best = cand;
                    changed = true;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_complexes_are_valid_and_deterministic() {
        for period in 2..=4 {
            for trial in 0..20 {
                let mut r1 = SplitMix64::for_trial(42, "gen", trial);
                let mut r2 = SplitMix64::for_trial(42, "gen", trial);
                let a = generate_twisted(&mut r1, period, 3, 5);
                let b = generate_twisted(&mut r2, period, 3, 5);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn zero_rank_budget_gives_zero_complex() {
        let mut r = SplitMix64::new(9);
        let m = generate_twisted(&mut r, 3, 0, 5);
        assert!(m.is_zero_object());
    }

    #[test]
    fn chain_map_generator_commutes() {
        let mut r = SplitMix64::new(5);
        for _ in 0..10 {
            let x = generate_twisted(&mut r, 2, 2, 3);
            let y = generate_twisted(&mut r, 2, 2, 3);
            // construction validates the chain condition
            let _ = generate_chain_map(&mut r, &x, &y, 2).unwrap();
        }
    }
}
