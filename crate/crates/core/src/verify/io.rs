//! Wire formats: one structured document per object, human-diffable, with
//! integers as JSON numbers (decimal strings beyond 64 bits).

use serde::{Deserialize, Serialize};

use crate::exactlin::{FgAbelianGroup, Int, IntMatrix};
use crate::franke::CrownedDiagram;
use crate::percomplex::{ChainMap, GradedModule, PeriodicComplex};
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct WireComplex {
    pub kind: String,
    pub format_version: u32,
    pub period: usize,
    pub ranks: Vec<usize>,
    /// one row-major matrix per slot: `diff[n]` maps slot n to slot n-1
    pub diff: Vec<Vec<Int>>,
}

pub fn complex_to_wire(x: &PeriodicComplex) -> WireComplex {
    let diff = (0..x.period())
        .map(|n| {
            let d = x.differential(n);
            let mut flat = Vec::with_capacity(d.rows() * d.cols());
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    flat.push(d[(i, j)].clone());
                }
            }
            flat
        })
        .collect();
    WireComplex {
        kind: "periodic_complex".into(),
        format_version: FORMAT_VERSION,
        period: x.period(),
        ranks: x.ranks().to_vec(),
        diff,
    }
}

pub fn complex_from_wire(w: &WireComplex) -> Result<PeriodicComplex> {
    if w.kind != "periodic_complex" {
        return Err(Error::Serialization(format!(
            "expected kind periodic_complex, found {}",
            w.kind
        )));
    }
    if w.period < 2 || w.ranks.len() != w.period || w.diff.len() != w.period {
        return Err(Error::Serialization(
            "period, ranks and diff lengths are inconsistent".into(),
        ));
    }
    let mut diffs = Vec::with_capacity(w.period);
    for n in 0..w.period {
        let rows = w.ranks[(n + w.period - 1) % w.period];
        let cols = w.ranks[n];
        if w.diff[n].len() != rows * cols {
            return Err(Error::Serialization(format!(
                "differential at slot {n} has {} entries, expected {rows}x{cols}",
                w.diff[n].len()
            )));
        }
        diffs.push(IntMatrix::from_fn(rows, cols, |i, j| {
            w.diff[n][i * cols + j].clone()
        }));
    }
    PeriodicComplex::new(w.period, w.ranks.clone(), diffs)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WireModule {
    pub kind: String,
    pub format_version: u32,
    pub period: usize,
    pub slots: Vec<FgAbelianGroup>,
}

pub fn module_to_wire(m: &GradedModule) -> WireModule {
    WireModule {
        kind: "graded_module".into(),
        format_version: FORMAT_VERSION,
        period: m.period,
        slots: m.slots.clone(),
    }
}

pub fn module_from_wire(w: &WireModule) -> Result<GradedModule> {
    if w.kind != "graded_module" {
        return Err(Error::Serialization(format!(
            "expected kind graded_module, found {}",
            w.kind
        )));
    }
    if w.slots.len() != w.period {
        return Err(Error::Serialization("slot count differs from period".into()));
    }
    Ok(GradedModule {
        period: w.period,
        slots: w.slots.clone(),
    })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WireCrown {
    pub kind: String,
    pub format_version: u32,
    pub n: usize,
    /// vertices keyed "b0", ..., "z0", ...
    pub vertices: std::collections::BTreeMap<String, WireComplex>,
    /// edges keyed "(b0,z0)": one row-major block per slot
    pub edges: std::collections::BTreeMap<String, Vec<Vec<Int>>>,
}

pub fn crown_to_wire(x: &CrownedDiagram) -> WireCrown {
    let mut vertices = std::collections::BTreeMap::new();
    let mut edges = std::collections::BTreeMap::new();
    for i in 0..x.n {
        vertices.insert(format!("b{i}"), complex_to_wire(x.beta(i)));
        vertices.insert(format!("z{i}"), complex_to_wire(x.zeta(i)));
    }
    let mut put_edge = |name: String, e: &ChainMap| {
        let blocks = (0..e.source.period())
            .map(|n| {
                let b = e.block(n);
                let mut flat = Vec::new();
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        flat.push(b[(i, j)].clone());
                    }
                }
                flat
            })
            .collect();
        edges.insert(name, blocks);
    };
    for i in 0..x.n {
        put_edge(format!("(b{i},z{i})"), &x.l(i));
        put_edge(format!("(b{},z{i})", (i + x.n - 1) % x.n), &x.k(i));
    }
    WireCrown {
        kind: "crowned_diagram".into(),
        format_version: FORMAT_VERSION,
        n: x.n,
        vertices,
        edges,
    }
}

pub fn crown_from_wire(w: &WireCrown) -> Result<CrownedDiagram> {
    if w.kind != "crowned_diagram" {
        return Err(Error::Serialization(format!(
            "expected kind crowned_diagram, found {}",
            w.kind
        )));
    }
    let get = |k: &str| -> Result<PeriodicComplex> {
        let wc = w
            .vertices
            .get(k)
            .ok_or_else(|| Error::Serialization(format!("missing vertex {k}")))?;
        complex_from_wire(wc)
    };
    let betas: Vec<PeriodicComplex> =
        (0..w.n).map(|i| get(&format!("b{i}"))).collect::<Result<_>>()?;
    let zetas: Vec<PeriodicComplex> =
        (0..w.n).map(|i| get(&format!("z{i}"))).collect::<Result<_>>()?;
    let read_edge = |name: &str, src: &PeriodicComplex, dst: &PeriodicComplex| -> Result<ChainMap> {
        let blocks = w
            .edges
            .get(name)
            .ok_or_else(|| Error::Serialization(format!("missing edge {name}")))?;
        let mats = (0..src.period())
            .map(|n| {
                let rows = dst.rank(n);
                let cols = src.rank(n);
                let flat = &blocks[n];
                if flat.len() != rows * cols {
                    return Err(Error::Serialization(format!(
                        "edge {name} block {n} has {} entries, expected {rows}x{cols}",
                        flat.len()
                    )));
                }
                Ok(IntMatrix::from_fn(rows, cols, |i, j| {
                    flat[i * cols + j].clone()
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(src.clone(), dst.clone(), mats)
    };
    let ls = (0..w.n)
        .map(|i| read_edge(&format!("(b{i},z{i})"), &betas[i], &zetas[i]))
        .collect::<Result<Vec<_>>>()?;
    let ks = (0..w.n)
        .map(|i| {
            read_edge(
                &format!("(b{},z{i})", (i + w.n - 1) % w.n),
                &betas[(i + w.n - 1) % w.n],
                &zetas[i],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    CrownedDiagram::new(w.n, betas, zetas, ls, ks)
}

/// Version check used by all readers: newer majors are errors, anything else
/// a pass-through warning.
pub fn check_version(found: u32) -> Option<String> {
    if found == FORMAT_VERSION {
        None
    } else {
        Some(format!(
            "format_version {found} differs from the supported {FORMAT_VERSION}; proceeding"
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::franke::q_inverse;

    #[test]
    fn complex_round_trip() {
        let m = PeriodicComplex::moore(2, 3);
        let w = complex_to_wire(&m);
        let s = serde_json::to_string(&w).unwrap();
        let w2: WireComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(complex_from_wire(&w2).unwrap(), m);
        assert!(s.contains("\"periodic_complex\""));
    }

    #[test]
    fn malformed_period_is_rejected() {
        let m = PeriodicComplex::moore(2, 3);
        let mut w = complex_to_wire(&m);
        w.period = 1;
        assert!(complex_from_wire(&w).is_err());
        let mut w2 = complex_to_wire(&m);
        w2.diff[1].push(Int::from(7));
        assert!(complex_from_wire(&w2).is_err());
    }

    #[test]
    fn crown_round_trip() {
        let m = PeriodicComplex::moore(3, 4);
        let x = q_inverse(&m).unwrap();
        let w = crown_to_wire(&x);
        let s = serde_json::to_string(&w).unwrap();
        let w2: WireCrown = serde_json::from_str(&s).unwrap();
        let x2 = crown_from_wire(&w2).unwrap();
        for i in 0..3 {
            assert_eq!(x.beta(i), x2.beta(i));
            assert_eq!(x.zeta(i), x2.zeta(i));
        }
    }

    #[test]
    fn module_round_trip() {
        let m = GradedModule {
            period: 2,
            slots: vec![FgAbelianGroup::cyclic(6), FgAbelianGroup::free(2)],
        };
        let w = module_to_wire(&m);
        let s = serde_json::to_string(&w).unwrap();
        let back = module_from_wire(&serde_json::from_str(&s).unwrap()).unwrap();
        assert!(back.is_isomorphic(&m));
    }
}
