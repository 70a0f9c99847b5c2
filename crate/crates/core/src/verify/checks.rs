//! The individual campaign checks. Each one builds its instances from the
//! trial's deterministic stream and returns a pass/fail outcome with a
//! message and the generating data for replay.

use std::collections::HashMap;

use crate::diagramkit::{
    colimit_modules, category_homology, hocofib, hocolim, hocolim_map, homology_diagram,
    pushout_product, ComplexDiagram,
};
use crate::exactlin::{IntMatrix, Presentation, PresentedMap};
use crate::franke::{
    cones_verify, disks_differential_verify, main_theorem_verify, prop_a_verify,
    theorem_a_verify, theorem_b_verify,
};
use crate::percomplex::{
    cone, kunneth_expected, kunneth_map, tensor, ChainMap, GradedModule, PeriodicComplex,
};
use crate::posetkit::{inclusion_i, is_homotopy_final, MonotoneMap};
use crate::Result;

use super::generate::{
    generate_chain_map, generate_crown, generate_injective_matrix, generate_twisted,
};
use super::rng::SplitMix64;

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CheckKind {
    TheoremA,
    TheoremB,
    PropA,
    Cones,
    Disks,
    Main,
    Finality,
    Kunneth,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::TheoremA,
        CheckKind::TheoremB,
        CheckKind::PropA,
        CheckKind::Cones,
        CheckKind::Disks,
        CheckKind::Main,
        CheckKind::Finality,
        CheckKind::Kunneth,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::TheoremA => "theoremA",
            CheckKind::TheoremB => "theoremB",
            CheckKind::PropA => "propA",
            CheckKind::Cones => "cones",
            CheckKind::Disks => "disks",
            CheckKind::Main => "main",
            CheckKind::Finality => "finality",
            CheckKind::Kunneth => "kunneth",
        }
    }

    pub fn parse(s: &str) -> Option<CheckKind> {
        CheckKind::ALL.iter().copied().find(|c| c.name() == s)
    }
}

/// Outcome of one trial: `Ok(())` or a message plus the instances that
/// produced the failure.
pub struct TrialFailure {
    pub message: String,
    pub instances: Vec<PeriodicComplex>,
    pub params: Vec<(String, String)>,
}

pub type TrialOutcome = std::result::Result<(), TrialFailure>;

fn fail(message: impl Into<String>, instances: Vec<PeriodicComplex>) -> TrialOutcome {
    Err(TrialFailure {
        message: message.into(),
        instances,
        params: Vec::new(),
    })
}

pub struct TrialConfig {
    pub period: usize,
    pub max_rank: usize,
    pub max_entry: i64,
}

pub fn run_trial(
    check: CheckKind,
    cfg: &TrialConfig,
    rng: &mut SplitMix64,
    trial: u64,
) -> Result<TrialOutcome> {
    match check {
        CheckKind::TheoremA => theorem_a_trial(cfg, rng),
        CheckKind::TheoremB => theorem_b_trial(cfg, rng),
        CheckKind::PropA => prop_a_trial(cfg, rng),
        CheckKind::Cones => cones_trial(cfg, rng),
        CheckKind::Disks => disks_trial(cfg, trial),
        CheckKind::Main => main_trial(cfg, rng),
        CheckKind::Finality => finality_trial(cfg, rng),
        CheckKind::Kunneth => kunneth_trial(cfg, rng),
    }
}

fn theorem_a_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let (m1, x) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let (m2, y) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    match theorem_a_verify(&x, &y) {
        Ok(_) => Ok(Ok(())),
        Err(e) => Ok(fail(e.to_string(), vec![m1, m2])),
    }
}

fn theorem_b_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let (m1, x) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let (m2, y) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let rep = theorem_b_verify(&x, &y)?;
    let mut bad = Vec::new();
    if !rep.external_vs_tensor {
        bad.push("external product vs tensor of hocolims");
    }
    if !rep.kan_preserves_hocolim {
        bad.push("Kan extension changed the hocolim");
    }
    if !rep.crown_vs_double_crown {
        bad.push("restriction along the crown inclusion changed the hocolim");
    }
    if bad.is_empty() {
        Ok(Ok(()))
    } else {
        Ok(fail(format!("stage failures: {}", bad.join("; ")), vec![m1, m2]))
    }
}

fn prop_a_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let (m1, x) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let (m2, y) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let reps = prop_a_verify(&x, &y)?;
    for r in &reps {
        if !r.all_pass() {
            return Ok(fail(
                format!(
                    "class {}: g0={} g1={} high={} j0={} j1={} eg={} ez={} ker_tor={}",
                    r.class,
                    r.gamma_h0_matches,
                    r.gamma_h1_matches,
                    r.gamma_higher_vanish,
                    r.j_h0_matches,
                    r.j_h1_matches,
                    r.e_gamma_matches,
                    r.e_zeta_matches,
                    r.edge_kernel_is_tor
                ),
                vec![m1, m2],
            ));
        }
    }
    Ok(Ok(()))
}

fn cones_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let (m1, x) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let (m2, y) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let reps = cones_verify(&x, &y)?;
    for r in &reps {
        if !(r.direct_matches && r.counit_route_matches) {
            return Ok(fail(
                format!(
                    "class {}: direct={} counit={}",
                    r.class, r.direct_matches, r.counit_route_matches
                ),
                vec![m1, m2],
            ));
        }
    }
    // cone monoidality on a random pair of chain maps
    let a = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let b = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let c = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let d = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let f = generate_chain_map(rng, &a, &b, cfg.max_entry)?;
    let g = generate_chain_map(rng, &c, &d, cfg.max_entry)?;
    let pp = pushout_product(&f, &g)?;
    let lhs = tensor(&cone(&f).complex, &cone(&g).complex)?.homology();
    let rhs = hocofib(&pp.map)?.total.homology();
    if !lhs.isomorphic_after_fold(&rhs) {
        return Ok(fail(
            format!(
                "cofiber of the pushout-product differs from the tensor of cones: {:?} vs {:?}",
                lhs.slots, rhs.slots
            ),
            vec![a, b, c, d],
        ));
    }
    Ok(Ok(()))
}

fn disks_trial(cfg: &TrialConfig, trial: u64) -> Result<TrialOutcome> {
    let n = cfg.period;
    let idx = trial as usize % (n * n);
    let (s, t) = (idx / n, idx % n);
    let rep = match disks_differential_verify(n, s, t) {
        Ok(rep) => rep,
        Err(e) => {
            return Ok(Err(TrialFailure {
                message: format!("disk pipeline failed at (s, t) = ({s}, {t}): {e}"),
                instances: Vec::new(),
                params: vec![
                    ("s".into(), s.to_string()),
                    ("t".into(), t.to_string()),
                ],
            }))
        }
    };
    if rep.matches {
        Ok(Ok(()))
    } else {
        Ok(Err(TrialFailure {
            message: format!(
                "disk differential mismatch at (s, t) = ({s}, {t}): extracted {:?} expected {:?}",
                rep.extracted, rep.expected
            ),
            instances: Vec::new(),
            params: vec![("s".into(), s.to_string()), ("t".into(), t.to_string())],
        }))
    }
}

fn main_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let m1 = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let m2 = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    match main_theorem_verify(&m1, &m2) {
        Ok(_) => Ok(Ok(())),
        Err(e) => Ok(fail(e.to_string(), vec![m1, m2])),
    }
}

fn finality_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let (m, x) = generate_crown(rng, cfg.period, cfg.max_rank, cfg.max_entry)?;
    let n = cfg.period;

    // Kan extension along the crown inclusion preserves the hocolim.
    let i = inclusion_i(n)?;
    let kan = crate::diagramkit::left_kan(&i, &x.diagram)?;
    let h_crown = hocolim(&x.diagram)?.total.homology();
    let h_dn = hocolim(&kan.diagram)?.total.homology();
    if !h_dn.is_isomorphic(&h_crown) {
        return Ok(fail("Kan extension along i changed the hocolim", vec![m]));
    }

    // Finality: the crown inclusion is final for n >= 3 and restriction
    // preserves the hocolim of the extension; for n = 2 it is not final.
    match is_homotopy_final(&i) {
        Ok(_) if n >= 3 => {
            let restricted = kan.diagram.pullback(&i)?;
            let h_back = hocolim(&restricted)?.total.homology();
            if !h_back.is_isomorphic(&h_crown) {
                return Ok(fail("finality transfer failed along i", vec![m]));
            }
        }
        Ok(_) => return Ok(fail("crown inclusion reported final at period 2", vec![m])),
        Err(_) if n == 2 => {}
        Err(l) => return Ok(fail(format!("coslice {l} not contractible"), vec![m])),
    }

    // H_0 of category homology is the colimit, on the homology diagram.
    let hd = homology_diagram(&x.diagram)?;
    let h0 = category_homology(&hd)?;
    let colim = colimit_modules(&hd)?;
    if !h0[0].is_isomorphic(&colim) {
        return Ok(fail("H_0 of the category differs from the colimit", vec![m]));
    }

    // hocolim invariance under objectwise quasi-isomorphism: pad one vertex
    // with an acyclic cone.
    let pad = cone(&ChainMap::identity(&PeriodicComplex::moore(
        x.vertex_period(),
        2,
    )))
    .complex;
    let padded = pad_crown_vertex(&x.diagram, &pad)?;
    let h_padded = hocolim(&padded)?.total.homology();
    if !h_padded.is_isomorphic(&h_crown) {
        return Ok(fail(
            "hocolim not invariant under objectwise quasi-isomorphism",
            vec![m],
        ));
    }

    // Diagonal recognition: the fold-to-wedge comparison out of the
    // suspension composes with each collapse to an isomorphism.
    let xc = generate_twisted(rng, cfg.period, cfg.max_rank.max(1), cfg.max_entry);
    if !xc.is_zero_object() {
        if let Err(f) = diagonal_recognition(&xc)? {
            return Ok(Err(f));
        }
    }
    Ok(Ok(()))
}

/// Direct-sum an acyclic complex onto the first beta vertex, extending the
/// outgoing edges by zero: an objectwise quasi-isomorphic diagram.
fn pad_crown_vertex(d: &ComplexDiagram, pad: &PeriodicComplex) -> Result<ComplexDiagram> {
    let shape = d.shape.clone();
    let target = 0; // vertex order puts b_0 first
    let vertices: Vec<PeriodicComplex> = (0..shape.len())
        .map(|v| {
            if v == target {
                d.vertex(v).direct_sum(pad)
            } else {
                Ok(d.vertex(v).clone())
            }
        })
        .collect::<Result<_>>()?;
    let mut edges = HashMap::new();
    for (a, b) in shape.covers() {
        let e = d.map(a, b)?;
        let e = if a == target {
            let blocks: Vec<IntMatrix> = (0..d.period())
                .map(|nn| {
                    let mut m = IntMatrix::zero(vertices[b].rank(nn), vertices[a].rank(nn));
                    m.write_block(0, 0, e.block(nn));
                    m
                })
                .collect();
            ChainMap::new(vertices[a].clone(), vertices[b].clone(), blocks)?
        } else {
            e
        };
        edges.insert((a, b), e);
    }
    ComplexDiagram::with_period(shape, vertices, edges, d.period())
}

/// The comparison `hocolim(* <- X -> *) -> hocolim(SX <- 0 -> SX)` composed
/// with each wedge collapse is an isomorphism on homology.
fn diagonal_recognition(x: &PeriodicComplex) -> Result<TrialOutcome> {
    let p = x.period();
    let zero = PeriodicComplex::zero(p);
    let c = cone(&ChainMap::identity(x));
    let shape = crate::posetkit::corner();

    // D1 = (CX <- X -> CX)
    let mut e1 = HashMap::new();
    e1.insert((0, 1), c.incl.clone());
    e1.insert((0, 2), c.incl.clone());
    let d1 = ComplexDiagram::with_period(
        shape.clone(),
        vec![x.clone(), c.complex.clone(), c.complex.clone()],
        e1,
        p,
    )?;
    let sx = x.shift(1);
    // D2 = (SX <- 0 -> SX)
    let mut e2 = HashMap::new();
    e2.insert((0, 1), ChainMap::zero(&zero, &sx)?);
    e2.insert((0, 2), ChainMap::zero(&zero, &sx)?);
    let d2 = ComplexDiagram::with_period(
        shape.clone(),
        vec![zero.clone(), sx.clone(), sx.clone()],
        e2,
        p,
    )?;
    let bar1 = hocolim(&d1)?;
    let bar2 = hocolim(&d2)?;
    let alpha = vec![
        ChainMap::zero(x, &zero)?,
        c.bdry.clone(),
        c.bdry.clone(),
    ];
    let h = hocolim_map(&d1, &d2, &MonotoneMap::identity(&shape), &alpha, &bar1, &bar2)?;

    for flank in [1usize, 2] {
        // collapse the other flank
        let mut e3 = HashMap::new();
        e3.insert((0, 1), ChainMap::zero(&zero, if flank == 1 { &sx } else { &zero })?);
        e3.insert((0, 2), ChainMap::zero(&zero, if flank == 2 { &sx } else { &zero })?);
        let d3 = ComplexDiagram::with_period(
            shape.clone(),
            vec![
                zero.clone(),
                if flank == 1 { sx.clone() } else { zero.clone() },
                if flank == 2 { sx.clone() } else { zero.clone() },
            ],
            e3,
            p,
        )?;
        let bar3 = hocolim(&d3)?;
        let beta = vec![
            ChainMap::identity(&zero),
            if flank == 1 {
                ChainMap::identity(&sx)
            } else {
                ChainMap::zero(&sx, &zero)?
            },
            if flank == 2 {
                ChainMap::identity(&sx)
            } else {
                ChainMap::zero(&sx, &zero)?
            },
        ];
        let collapse =
            hocolim_map(&d2, &d3, &MonotoneMap::identity(&shape), &beta, &bar2, &bar3)?;
        let composite = h.compose(&collapse)?;
        let induced = composite.induced(
            &bar1.total.homology_data(),
            &bar3.total.homology_data(),
        );
        if !induced.is_isomorphism() {
            return Ok(fail(
                format!("diagonal followed by collapse {flank} is not an isomorphism"),
                vec![x.clone()],
            ));
        }
    }
    Ok(Ok(()))
}

fn kunneth_trial(cfg: &TrialConfig, rng: &mut SplitMix64) -> Result<TrialOutcome> {
    let x = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let y = generate_twisted(rng, cfg.period, cfg.max_rank, cfg.max_entry);
    let t = tensor(&x, &y)?;
    let expected = kunneth_expected(&x.homology(), &y.homology(), t.period());
    if !t.homology().is_isomorphic(&expected) {
        return Ok(fail(
            format!(
                "tensor homology {:?} differs from the Kunneth prediction {:?}",
                t.homology().slots,
                expected.slots
            ),
            vec![x, y],
        ));
    }
    let k = kunneth_map(&x, &y)?;
    if !k.is_injective() {
        return Ok(fail("Kunneth comparison map is not injective", vec![x, y]));
    }
    // cokernel is the shifted Tor term
    let hx = x.homology();
    let hy = y.homology();
    let mut tor = GradedModule::zero(t.period());
    for m in 0..t.period() {
        for i in 0..cfg.period {
            for j in 0..cfg.period {
                if (i + j + 1) % cfg.period == m % cfg.period {
                    tor.slots[m] = tor.slots[m].direct_sum(&hx.slots[i].tor(&hy.slots[j]));
                }
            }
        }
    }
    if !k.cokernel().is_isomorphic(&tor) {
        return Ok(fail(
            format!(
                "Kunneth cokernel {:?} differs from the Tor terms {:?}",
                k.cokernel().slots,
                tor.slots
            ),
            vec![x, y],
        ));
    }
    if hx.is_free() && hy.is_free() && !k.is_isomorphism() {
        return Ok(fail(
            "Kunneth map is not an isomorphism despite free homology",
            vec![x, y],
        ));
    }

    // sharp pushout-product kernel on free groups: ker(f box g) = Tor of the
    // cokernels; in particular mono when a cokernel is free
    let rows_f = 1 + rng.below(3);
    let cols_f = 1 + rng.below(rows_f);
    let rows_g = 1 + rng.below(3);
    let cols_g = 1 + rng.below(rows_g);
    let f = generate_injective_matrix(rng, rows_f, cols_f, cfg.max_entry.max(1));
    let g = generate_injective_matrix(rng, rows_g, cols_g, cfg.max_entry.max(1));
    let corner_to_target = module_pushout_product(&f, &g);
    let ker = corner_to_target.kernel_group();
    let tor_fg = crate::exactlin::cokernel(&f).tor(&crate::exactlin::cokernel(&g));
    if ker != tor_fg {
        return Ok(fail(
            format!("pushout-product kernel {ker} differs from Tor {tor_fg}"),
            vec![x, y],
        ));
    }
    Ok(Ok(()))
}

/// The universal map from the pushout corner of `f (x) 1, 1 (x) g` into the
/// terminal tensor, as a presented map of abelian groups.
fn module_pushout_product(f: &IntMatrix, g: &IntMatrix) -> PresentedMap {
    let (a, b) = (f.cols(), f.rows());
    let (c, d) = (g.cols(), g.rows());
    // corner presentation: generators (B (x) C) + (A (x) D), relations the
    // antidiagonal image of A (x) C
    let top = f.kronecker(&IntMatrix::identity(c));
    let bot = IntMatrix::identity(a).kronecker(g).neg();
    let mut rels = IntMatrix::zero(b * c + a * d, a * c);
    rels.write_block(0, 0, &top);
    rels.write_block(b * c, 0, &bot);
    let corner = Presentation::new(b * c + a * d, rels);
    let target = Presentation::free(b * d);
    let mut mat = IntMatrix::zero(b * d, b * c + a * d);
    mat.write_block(0, 0, &IntMatrix::identity(b).kronecker(g));
    mat.write_block(0, b * c, &f.kronecker(&IntMatrix::identity(d)));
    PresentedMap::new(corner, target, mat).expect("corner map is well defined")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FgAbelianGroup;

    #[test]
    fn module_pushout_product_kernel_is_tor() {
        // f = g = x3 on Z: kernel is Tor(Z/3, Z/3) = Z/3
        let f = IntMatrix::from_rows_i64(&[&[3]]);
        let m = module_pushout_product(&f, &f);
        assert_eq!(m.kernel_group(), FgAbelianGroup::cyclic(3));
        // split injection: kernel vanishes
        let s = IntMatrix::from_rows_i64(&[&[1], &[0]]);
        let m = module_pushout_product(&s, &f);
        assert!(m.kernel_group().is_trivial());
    }
}
