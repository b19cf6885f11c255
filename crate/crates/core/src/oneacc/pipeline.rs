//! Randomized construction of embeddings with one accumulation point.
//!
//! Blocks are embedded independently and glued at cut vertices. Finite
//! blocks receive a uniform embedding of the block wired to its
//! boundary-reaching cut vertices; blocks meeting the boundary receive one
//! of the two core embeddings that keep every terminal on a common face,
//! with free choices elsewhere in their Tutte tree. All draws come from one
//! seeded generator in a fixed order: blocks in canonical order, then cut
//! vertices in increasing order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomposition::{
    amalgamate, block_cut_tree, component_embeddings, compose, restrict_to_node, tutte_decomposition, BlockCutTree,
    TutteTree,
};
use crate::embeddability::locally_finite_embeddable;
use crate::ends::{core, cut_infinity, Exhaustion, TruncatedGraph};
use crate::error::{Error, Result};
use crate::graph::{Dart, EdgeId, Graph, VertexId};
use crate::oneacc::acc::{acc, AccReport};
use crate::planarity::{enumerate_planar_embeddings, planar_embedding, EnumerateOptions};
use crate::rotation::{euler_genus, find_face_containing_all, trace_faces, FaceWalk, RotationSystem};

/// Core assignments tried exhaustively before falling back to the wired construction.
pub const MAX_CORE_COMBINATIONS: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockRoute {
    Bridge,
    /// Uniform choice among embeddings of the wired block.
    Wired,
    /// Tutte core with a random sign.
    Core,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoreSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeChoice {
    pub node: usize,
    pub index: usize,
    pub of: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BlockChoice {
    Fixed,
    Wired {
        index: usize,
        of: usize,
    },
    Core {
        sign: CoreSign,
        core_nodes: Vec<usize>,
        /// Core assignments keeping all terminals on one face, when enumerated.
        survivors: Option<usize>,
        free: Vec<FreeChoice>,
        face_index: usize,
        face_candidates: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPlan {
    pub block: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub route: BlockRoute,
    pub meets_boundary: bool,
    pub cut_infinity: Vec<VertexId>,
    /// Rotation of the block, one entry per vertex in `vertices`, as darts of the whole graph.
    pub rotation: Vec<Vec<Dart>>,
    /// Face that receives everything beyond the block's boundary-reaching cut vertices.
    pub distinguished_face: Option<Vec<Dart>>,
    pub choice: BlockChoice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueSegment {
    pub block: usize,
    /// The block is open at this vertex: the rest of the graph goes into its distinguished corner.
    pub open: bool,
    pub start: Dart,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutGluing {
    pub vertex: VertexId,
    pub segments: Vec<GlueSegment>,
    pub order: Vec<Dart>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEmbeddingPlan {
    pub seed: u64,
    pub blocks: Vec<BlockPlan>,
    pub cut_vertices: Vec<CutGluing>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneAccEmbedding {
    pub rotation: RotationSystem,
    pub plan: BlockEmbeddingPlan,
    pub acc: AccReport,
}

struct LocalChoice {
    rot: RotationSystem,
    face: Option<FaceWalk>,
    route: BlockRoute,
    choice: BlockChoice,
}

pub fn random_one_acc_embedding(ex: &Exhaustion, seed: u64) -> Result<OneAccEmbedding> {
    let report = locally_finite_embeddable(ex, false)?;
    if let Some(level) = report.first_obstructed {
        return Err(Error::Obstructed(level));
    }
    let t = ex.deepest();
    let g = &t.graph;
    let n = g.vertex_count();
    let bct = block_cut_tree(g)?;
    let cut_inf = cut_infinity(&bct, &t);
    let on_boundary = t.boundary_mask();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut plans = Vec::with_capacity(bct.blocks.len());
    for (a, block) in bct.blocks.iter().enumerate() {
        let sub = bct.block_subgraph(g, a);
        let b = &sub.graph;
        let local = sub.local_vertices(n);
        let meets_boundary = block.vertices.iter().any(|&v| on_boundary[v]);
        let mut terminals: Vec<VertexId> = cut_inf[a]
            .iter()
            .chain(block.vertices.iter().filter(|&&v| on_boundary[v]))
            .map(|&v| local[v].expect("block vertex"))
            .collect();
        terminals.sort_unstable();
        terminals.dedup();

        let lc = if b.edge_count() == 0 {
            LocalChoice { rot: RotationSystem::from_adjacency(b), face: None, route: BlockRoute::Bridge, choice: BlockChoice::Fixed }
        } else if b.edge_count() == 1 && !b.is_loop(0) {
            let d = Dart::new(0, false);
            LocalChoice {
                rot: RotationSystem::from_adjacency(b),
                face: Some(FaceWalk { darts: vec![d, d.rev()] }),
                route: BlockRoute::Bridge,
                choice: BlockChoice::Fixed,
            }
        } else if !meets_boundary || b.edge_count() <= 2 {
            wired_choice(b, &terminals, &mut rng)?
        } else {
            let special: Vec<VertexId> = cut_inf[a].iter().map(|&v| local[v].expect("block vertex")).collect();
            let boundary: Vec<VertexId> = block.vertices.iter().filter(|&&v| on_boundary[v]).map(|&v| local[v].expect("block vertex")).collect();
            core_choice(b, &boundary, &special, &terminals, &mut rng)?
        };
        if !terminals.is_empty() {
            let face = lc.face.as_ref().ok_or(Error::NoInfiniteFace)?;
            if terminals.iter().any(|&x| !face.contains_vertex(b, x)) {
                return Err(Error::PipelineViolation(format!("block {a}: terminal off the distinguished face")));
            }
        }
        plans.push(BlockPlan {
            block: a,
            vertices: sub.vertex_map.clone(),
            edges: sub.edge_map.clone(),
            route: lc.route,
            meets_boundary,
            cut_infinity: cut_inf[a].clone(),
            rotation: b.vertices().map(|x| lc.rot.order(x).iter().map(|&d| sub.parent_dart(d)).collect()).collect(),
            distinguished_face: lc.face.map(|f| f.darts.iter().map(|&d| sub.parent_dart(d)).collect()),
            choice: lc.choice,
        });
    }

    let (orders, cut_vertices) = glue(g, &bct, &plans, &mut rng)?;
    let rotation = RotationSystem::new(g, orders)?;
    let genus = euler_genus(g, &rotation)?;
    if genus != 0 {
        return Err(Error::PipelineViolation(format!("glued rotation has Euler genus {genus}")));
    }
    let acc = acc(ex, &rotation, &[])?;
    let expected = usize::from(!t.boundary.is_empty());
    if acc.acc != expected {
        return Err(Error::AccNotOne(acc.acc));
    }
    Ok(OneAccEmbedding { rotation, plan: BlockEmbeddingPlan { seed, blocks: plans, cut_vertices }, acc })
}

/// Uniform embedding of `b` plus an auxiliary vertex joined to `terminals`;
/// the distinguished face is the one that surrounded the auxiliary vertex.
fn wired_choice(b: &Graph, terminals: &[VertexId], rng: &mut ChaCha8Rng) -> Result<LocalChoice> {
    let opts = EnumerateOptions { both_chiralities: true, ..Default::default() };
    if terminals.is_empty() {
        let all = enumerate_planar_embeddings(b, opts)?;
        let index = rng.random_range(0..all.len());
        return Ok(LocalChoice {
            rot: all[index].clone(),
            face: None,
            route: BlockRoute::Wired,
            choice: BlockChoice::Wired { index, of: all.len() },
        });
    }
    let m = b.edge_count();
    let mut gw = b.clone();
    let apex = gw.add_vertex();
    for &x in terminals {
        gw.add_edge(apex, x);
    }
    let all = enumerate_planar_embeddings(&gw, opts)?;
    let index = rng.random_range(0..all.len());
    let rw = &all[index];
    let orders = b
        .vertices()
        .map(|x| rw.order(x).iter().copied().filter(|d| d.edge() < m).collect())
        .collect();
    let rot = RotationSystem::new(b, orders)?;
    // Corner of `terminals[0]` that held the auxiliary edge.
    let mut y = rw.next(Dart::new(m, true));
    while y.edge() >= m {
        y = rw.next(y);
    }
    let faces = trace_faces(b, &rot)?;
    let face = faces.into_iter().find(|f| f.darts.contains(&y)).expect("every dart lies on a face");
    Ok(LocalChoice { rot, face: Some(face), route: BlockRoute::Wired, choice: BlockChoice::Wired { index, of: all.len() } })
}

/// Rewrites a rotation between two graphs that share vertex and edge ids
/// but may orient edges differently.
fn reorient(src: &Graph, dst: &Graph, rot: &RotationSystem) -> Result<RotationSystem> {
    let map = |d: Dart| if src.ends(d.edge()) == dst.ends(d.edge()) { d } else { d.rev() };
    RotationSystem::new(dst, rot.orders().iter().map(|o| o.iter().map(|&d| map(d)).collect()).collect())
}

fn composed_on(b: &Graph, tt: &TutteTree, choices: &[RotationSystem]) -> Result<RotationSystem> {
    let (am, r) = compose(tt, choices)?;
    if am.labels.iter().enumerate().any(|(i, &l)| i != l) || am.edge_ids.iter().enumerate().any(|(i, &e)| i != e) {
        return Err(Error::InconsistentTree("amalgam does not cover the block".into()));
    }
    reorient(&am.graph, b, &r)
}

fn core_choice(
    b: &Graph,
    boundary: &[VertexId],
    special: &[VertexId],
    terminals: &[VertexId],
    rng: &mut ChaCha8Rng,
) -> Result<LocalChoice> {
    let tt = tutte_decomposition(b)?;
    let tb = TruncatedGraph::new(b.clone(), boundary.to_vec(), 0)?;
    let marking = core(&tt, special, &tb);
    let options: Vec<Vec<RotationSystem>> = tt.nodes.iter().map(component_embeddings).collect();
    if options.iter().any(|o| o.is_empty()) {
        return Err(Error::NonPlanar);
    }
    let variable: Vec<usize> = marking.core_nodes.iter().copied().filter(|&i| options[i].len() > 1).collect();
    let combos = variable
        .iter()
        .try_fold(1u64, |acc, &i| acc.checked_mul(options[i].len() as u64))
        .unwrap_or(u64::MAX);

    let mut choices: Vec<RotationSystem> = options.iter().map(|o| o[0].clone()).collect();
    let (sign, survivors) = if combos <= MAX_CORE_COMBINATIONS {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for code in 0..combos {
            let digits = mixed_radix(code, &variable, &options);
            for (&i, &k) in variable.iter().zip(&digits) {
                choices[i] = options[i][k].clone();
            }
            let rb = composed_on(b, &tt, &choices)?;
            let faces = trace_faces(b, &rb)?;
            if !find_face_containing_all(b, &faces, terminals).is_empty() {
                found.push(digits);
            }
        }
        if found.is_empty() || found.len() > 2 {
            return Err(Error::PipelineViolation(format!(
                "{} core embeddings keep the terminals on one face",
                found.len()
            )));
        }
        let k = rng.random_range(0..found.len());
        for (&i, &d) in variable.iter().zip(&found[k]) {
            choices[i] = options[i][d].clone();
        }
        (if k == 0 { CoreSign::Plus } else { CoreSign::Minus }, Some(found.len()))
    } else {
        // Too many assignments: read the core off an embedding of the wired block.
        let mut gw = b.clone();
        let apex = gw.add_vertex();
        for &x in terminals {
            gw.add_edge(apex, x);
        }
        let rw = planar_embedding(&gw)?.ok_or(Error::NonPlanar)?;
        let m = b.edge_count();
        let orders = b.vertices().map(|x| rw.order(x).iter().copied().filter(|d| d.edge() < m).collect()).collect();
        let mut rb = RotationSystem::new(b, orders)?;
        let sign = if rng.random_bool(0.5) { CoreSign::Plus } else { CoreSign::Minus };
        if sign == CoreSign::Minus {
            rb = rb.inverse();
        }
        let am = amalgamate(&tt)?;
        let ra = reorient(b, &am.graph, &rb)?;
        for &i in &marking.core_nodes {
            choices[i] = restrict_to_node(&tt, &am, &ra, i)?;
        }
        (sign, None)
    };

    let mut free = Vec::new();
    for i in 0..tt.nodes.len() {
        if !marking.contains(i) && options[i].len() > 1 {
            let index = rng.random_range(0..options[i].len());
            choices[i] = options[i][index].clone();
            free.push(FreeChoice { node: i, index, of: options[i].len() });
        }
    }
    let rot = composed_on(b, &tt, &choices)?;
    let mut faces = trace_faces(b, &rot)?;
    let candidates = find_face_containing_all(b, &faces, terminals);
    if candidates.is_empty() {
        return Err(Error::PipelineViolation("free choices separated the terminals".into()));
    }
    let face_index = rng.random_range(0..candidates.len());
    let face = faces.swap_remove(candidates[face_index]);
    Ok(LocalChoice {
        rot,
        face: Some(face),
        route: BlockRoute::Core,
        choice: BlockChoice::Core {
            sign,
            core_nodes: marking.core_nodes.clone(),
            survivors,
            free,
            face_index,
            face_candidates: candidates.len(),
        },
    })
}

fn mixed_radix(mut code: u64, variable: &[usize], options: &[Vec<RotationSystem>]) -> Vec<usize> {
    variable
        .iter()
        .map(|&i| {
            let r = options[i].len() as u64;
            let d = (code % r) as usize;
            code /= r;
            d
        })
        .collect()
}

/// Per-vertex orders of the whole graph. Open blocks are cut open at their
/// distinguished corner; closed blocks at a random corner; blocks around a
/// cut vertex follow a random cyclic order.
fn glue(
    g: &Graph,
    bct: &BlockCutTree,
    plans: &[BlockPlan],
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<Vec<Dart>>, Vec<CutGluing>)> {
    let block_order = |a: usize, v: VertexId| -> &[Dart] {
        let p = &plans[a];
        let x = p.vertices.binary_search(&v).expect("vertex of block");
        &p.rotation[x]
    };
    let mut orders = Vec::with_capacity(g.vertex_count());
    let mut gluings = Vec::new();
    for v in g.vertices() {
        let blocks = &bct.vertex_blocks[v];
        if blocks.len() < 2 {
            orders.push(blocks.first().map(|&a| block_order(a, v).to_vec()).unwrap_or_default());
            continue;
        }
        let mut segments = Vec::with_capacity(blocks.len());
        for &a in blocks {
            let seq = block_order(a, v);
            let open = plans[a].cut_infinity.contains(&v);
            let start = if open {
                let face = plans[a].distinguished_face.as_ref().ok_or(Error::NoInfiniteFace)?;
                *face
                    .iter()
                    .find(|&&d| g.source(d) == v)
                    .ok_or_else(|| Error::PipelineViolation(format!("cut vertex {v} off the distinguished face")))?
            } else {
                seq[rng.random_range(0..seq.len())]
            };
            segments.push(GlueSegment { block: a, open, start });
        }
        segments[1..].shuffle(rng);
        let mut order = Vec::new();
        for s in &segments {
            let seq = block_order(s.block, v);
            let k = seq.iter().position(|&d| d == s.start).expect("start dart at vertex");
            order.extend(seq[k..].iter().chain(&seq[..k]));
        }
        orders.push(order.clone());
        gluings.push(CutGluing { vertex: v, segments, order });
    }
    Ok((orders, gluings))
}

/// A random planar rotation system of a connected planar graph: random
/// choices in every Tutte tree, random corners and cyclic orders at cut
/// vertices. Not uniform.
pub fn random_planar_rotation(g: &Graph, rng: &mut impl Rng) -> Result<RotationSystem> {
    let bct = block_cut_tree(g)?;
    let mut block_rots: Vec<(Vec<VertexId>, Vec<Vec<Dart>>)> = Vec::with_capacity(bct.blocks.len());
    for a in 0..bct.blocks.len() {
        let sub = bct.block_subgraph(g, a);
        let b = &sub.graph;
        let rot = if b.edge_count() <= 2 || b.has_loops() {
            RotationSystem::from_adjacency(b)
        } else {
            let tt = tutte_decomposition(b)?;
            let mut choices = Vec::with_capacity(tt.nodes.len());
            for node in &tt.nodes {
                let mut opts = component_embeddings(node);
                if opts.is_empty() {
                    return Err(Error::NonPlanar);
                }
                let k = rng.random_range(0..opts.len());
                choices.push(opts.swap_remove(k));
            }
            composed_on(b, &tt, &choices)?
        };
        let orders = b.vertices().map(|x| rot.order(x).iter().map(|&d| sub.parent_dart(d)).collect()).collect();
        block_rots.push((sub.vertex_map.clone(), orders));
    }
    let mut orders = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let mut segs: Vec<Vec<Dart>> = bct.vertex_blocks[v]
            .iter()
            .map(|&a| {
                let (vs, os) = &block_rots[a];
                let mut seq = os[vs.binary_search(&v).expect("vertex of block")].clone();
                if !seq.is_empty() {
                    let k = rng.random_range(0..seq.len());
                    seq.rotate_left(k);
                }
                seq
            })
            .collect();
        segs.shuffle(rng);
        orders.push(segs.concat());
    }
    RotationSystem::new(g, orders)
}
