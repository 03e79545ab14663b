//! Seeded generators for graphs with a known structure certificate:
//! special partitions (thickened hole-family graphs plus universal
//! vertices), 7-saucers, tents, and single-pair mutations.
//!
//! The random source is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded from
//! the 64-bit seed; the same seed and parameters give the same output.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{catalog, t0, NamedGraph};
use crate::decompose::expand_thickening;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::{SaucerPartition, SpecialPartition, TentPartition};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub seed: u64,
    /// Largest clique a single base vertex or attached component grows to.
    pub max_class_size: usize,
    /// Probability that each optional part is nonempty.
    pub p_nonempty: f64,
    /// Inclusive range for the number of `A` components of a saucer.
    pub a_components: (usize, usize),
    /// Inclusive range for the number of `Z` components of a tent.
    pub z_components: (usize, usize),
    /// Inclusive range for `|W|`.
    pub universal_count: (usize, usize),
    /// Upper bound on the vertex count; random sizes are shrunk to fit.
    pub max_vertices: Option<usize>,
    /// Hole-family base graph to use by name instead of a random one.
    pub base: Option<String>,
    /// Leave out every part that produces simplicial vertices (`A`, and
    /// the tent's `Y` and `Z`).
    pub simplicial_free: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 0,
            max_class_size: 3,
            p_nonempty: 0.5,
            a_components: (0, 3),
            z_components: (0, 3),
            universal_count: (0, 2),
            max_vertices: None,
            base: None,
            simplicial_free: false,
        }
    }
}

impl GenParams {
    pub fn with_seed(seed: u64) -> Self {
        GenParams {
            seed,
            ..GenParams::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p_nonempty) {
            return Err(Error::InvalidArgument(format!("p_nonempty {} is not a probability", self.p_nonempty)));
        }
        if self.max_class_size == 0 {
            return Err(Error::InvalidArgument("max_class_size must be at least 1".into()));
        }
        for (name, (lo, hi)) in [
            ("a_components", self.a_components),
            ("z_components", self.z_components),
            ("universal_count", self.universal_count),
        ] {
            if lo > hi {
                return Err(Error::InvalidArgument(format!("{name} range {lo}..={hi} is empty")));
            }
        }
        Ok(())
    }
}

/// Generator output: the graph, its certificate, and the base it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Generated<P> {
    pub graph: Graph,
    pub partition: P,
    pub base: String,
}

/// Which generator to run, for callers that dispatch by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Special,
    Saucer,
    Tent,
}

/// Edge list under construction.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn from_graph(g: &Graph) -> Self {
        Builder {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }

    fn fresh(&mut self, count: usize) -> Vec<usize> {
        let out = (self.n..self.n + count).collect();
        self.n += count;
        out
    }

    fn clique(&mut self, s: &[usize]) {
        for (k, &u) in s.iter().enumerate() {
            self.edges.extend(s[k + 1..].iter().map(|&v| (u, v)));
        }
    }

    fn complete(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            self.edges.extend(b.iter().map(|&v| (u, v)));
        }
    }

    /// Attaches the clique `members` (listed in nested order) to a chain of
    /// shrinking random subsets of `pool`.
    fn nested_attach(&mut self, rng: &mut ChaCha8Rng, members: &[usize], pool: &[usize]) {
        let mut current: Vec<usize> = pool.iter().copied().filter(|_| rng.random_bool(0.6)).collect();
        for &m in members {
            self.edges.extend(current.iter().map(|&t| (m, t)));
            current.retain(|_| rng.random_bool(0.7));
        }
    }

    fn build(self) -> Result<Graph> {
        Graph::new(self.n, &self.edges)
    }
}

fn draw(rng: &mut ChaCha8Rng, (lo, hi): (usize, usize)) -> usize {
    rng.random_range(lo..=hi)
}

fn class_size(rng: &mut ChaCha8Rng, params: &GenParams) -> usize {
    rng.random_range(1..=params.max_class_size)
}

/// Decrements random entries above their minimum until the sum fits `cap`.
fn fit(rng: &mut ChaCha8Rng, counts: &mut [usize], mins: &[usize], cap: Option<usize>) -> Result<()> {
    let Some(cap) = cap else { return Ok(()) };
    let floor: usize = mins.iter().sum();
    if floor > cap {
        return Err(Error::size("generated vertices", cap, floor));
    }
    loop {
        let total: usize = counts.iter().sum();
        if total <= cap {
            return Ok(());
        }
        let reducible: Vec<usize> = (0..counts.len()).filter(|&k| counts[k] > mins[k]).collect();
        let &k = reducible.choose(rng).expect("floor fits the cap");
        counts[k] -= 1;
    }
}

/// Uniformly random relabeling applied to a graph.
fn shuffle_ids(rng: &mut ChaCha8Rng, g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Ok((g.permute(&perm)?, perm))
}

fn remap(perm: &[usize], s: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = s.iter().map(|&v| perm[v]).collect();
    out.sort_unstable();
    out
}

/// Remaps without sorting, for lists whose order carries meaning.
fn remap_ordered(perm: &[usize], s: &[usize]) -> Vec<usize> {
    s.iter().map(|&v| perm[v]).collect()
}

fn remap_special(perm: &[usize], p: &SpecialPartition) -> SpecialPartition {
    SpecialPartition {
        x: std::array::from_fn(|i| remap(perm, &p.x[i])),
        y: std::array::from_fn(|i| remap(perm, &p.y[i])),
        z: std::array::from_fn(|i| remap(perm, &p.z[i])),
        w: remap(perm, &p.w),
    }
}

fn pick_base(rng: &mut ChaCha8Rng, params: &GenParams) -> Result<&'static NamedGraph> {
    let cat = catalog();
    match &params.base {
        Some(name) => cat
            .family
            .iter()
            .find(|g| g.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::InvalidArgument(format!("no hole-family graph named {name}"))),
        None => {
            let reps: Vec<&NamedGraph> = cat.family_representatives().collect();
            Ok(reps.choose(rng).copied().expect("family is nonempty"))
        }
    }
}

/// Places each class of a thickened base graph by its label (`x3` goes to
/// `X3`, and so on).
fn special_from_classes(base: &NamedGraph, classes: &[Vec<usize>], w: Vec<usize>) -> SpecialPartition {
    let mut p = SpecialPartition::default();
    for (label, class) in base.labels.iter().zip(classes) {
        let i: usize = label[1..].parse().expect("hole-family labels end in an index");
        let part = match &label[..1] {
            "x" => &mut p.x[i],
            "y" => &mut p.y[i],
            _ => &mut p.z[i],
        };
        part.extend(class);
    }
    p.w = w;
    p
}

/// Unshuffled special-partition graph plus its builder, shared by the
/// special and saucer generators. `extra` reserves vertex budget for
/// parts the caller adds afterwards and is shrunk along with the rest.
struct SpecialDraft {
    builder: Builder,
    partition: SpecialPartition,
    base: String,
}

fn draft_special(rng: &mut ChaCha8Rng, params: &GenParams, extra: &mut Vec<usize>) -> Result<SpecialDraft> {
    let base = pick_base(rng, params)?;
    let n = base.graph.n();
    let mut counts: Vec<usize> = (0..n).map(|_| class_size(rng, params)).collect();
    counts.push(draw(rng, params.universal_count));
    let mut mins = vec![1; n];
    mins.push(0);
    let split = counts.len();
    counts.append(extra);
    mins.resize(counts.len(), 0);
    fit(rng, &mut counts, &mins, params.max_vertices)?;
    *extra = counts.split_off(split);
    let w_count = counts.pop().expect("universal count");
    let (thick, classes) = expand_thickening(&base.graph, &counts)?;
    let mut builder = Builder::from_graph(&thick);
    let w = builder.fresh(w_count);
    builder.clique(&w);
    builder.complete(&w, &(0..thick.n()).collect::<Vec<_>>());
    Ok(SpecialDraft {
        builder,
        partition: special_from_classes(base, &classes, w),
        base: base.name.clone(),
    })
}

/// A thickening of a random hole-family graph plus universal vertices,
/// with its special partition.
pub fn gen_special(params: &GenParams) -> Result<Generated<SpecialPartition>> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let draft = draft_special(&mut rng, params, &mut Vec::new())?;
    let (graph, perm) = shuffle_ids(&mut rng, &draft.builder.build()?)?;
    Ok(Generated {
        graph,
        partition: remap_special(&perm, &draft.partition),
        base: draft.base,
    })
}

/// A special-partition graph with pendant clique components `A` hung on
/// nested subsets of `W`, `Z` and the `Y(i)` whose `Z(i+2)` is empty.
pub fn gen_saucer(params: &GenParams) -> Result<Generated<SaucerPartition>> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let components = if params.simplicial_free {
        0
    } else {
        draw(&mut rng, params.a_components)
    };
    let mut sizes: Vec<usize> = (0..components).map(|_| class_size(&mut rng, params)).collect();
    let SpecialDraft {
        mut builder,
        partition: special,
        base,
    } = draft_special(&mut rng, params, &mut sizes)?;
    let mut pool: Vec<usize> = special.w.iter().chain(special.z.iter().flatten()).copied().collect();
    for i in 0..7 {
        if special.z[(i + 2) % 7].is_empty() {
            pool.extend(&special.y[i]);
        }
    }
    pool.sort_unstable();
    let mut a_components = Vec::new();
    for size in sizes.into_iter().filter(|&s| s > 0) {
        let comp = builder.fresh(size);
        builder.clique(&comp);
        builder.nested_attach(&mut rng, &comp, &pool);
        a_components.push(comp);
    }
    let (graph, perm) = shuffle_ids(&mut rng, &builder.build()?)?;
    let a_components: Vec<Vec<usize>> = a_components.iter().map(|c| remap_ordered(&perm, c)).collect();
    let mut a: Vec<usize> = a_components.iter().flatten().copied().collect();
    a.sort_unstable();
    Ok(Generated {
        graph,
        partition: SaucerPartition {
            special: remap_special(&perm, &special),
            a,
            a_components,
        },
        base,
    })
}

/// Which of the mutually exclusive tent parts is nonempty.
#[derive(Clone, Copy, PartialEq, Eq)]
enum TentOptional {
    None,
    F2,
    F3,
    Y,
}

/// A tent: a thickened `T0` with at most one of `F2`, `F3`, `Y`, a
/// clique `W`, and `Z` components attached by nested chains into `F` and
/// `W`.
pub fn gen_tent(params: &GenParams) -> Result<Generated<TentPartition>> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let optional = if rng.random_bool(params.p_nonempty) {
        let choices: &[TentOptional] = if params.simplicial_free {
            &[TentOptional::F2, TentOptional::F3]
        } else {
            &[TentOptional::F2, TentOptional::F3, TentOptional::Y]
        };
        *choices.choose(&mut rng).expect("nonempty")
    } else {
        TentOptional::None
    };
    let z_count = if params.simplicial_free {
        0
    } else {
        draw(&mut rng, params.z_components)
    };
    // Counts: 9 core classes, the optional part, W, then Z components.
    let mut counts: Vec<usize> = (0..9).map(|_| class_size(&mut rng, params)).collect();
    counts.push(if optional == TentOptional::None {
        0
    } else {
        class_size(&mut rng, params)
    });
    counts.push(draw(&mut rng, params.universal_count));
    counts.extend((0..z_count).map(|_| class_size(&mut rng, params)));
    let mut mins = vec![1; 9];
    mins.resize(counts.len(), 0);
    fit(&mut rng, &mut counts, &mins, params.max_vertices)?;

    let (thick, classes) = expand_thickening(&t0().graph, &counts[..9])?;
    let mut b = Builder::from_graph(&thick);
    let [a0, a1, b0, b1, b2, b3, c1, c2, c3] = std::array::from_fn(|k| classes[k].clone());
    let opt = b.fresh(counts[9]);
    b.clique(&opt);
    let (mut f2, mut f3, mut y) = (Vec::new(), Vec::new(), Vec::new());
    match optional {
        TentOptional::F2 => {
            for s in [&a0, &a1, &b0, &b1, &b3, &c1, &c3] {
                b.complete(&opt, s);
            }
            f2 = opt;
        }
        TentOptional::F3 => {
            for s in [&a0, &a1, &b0, &b1, &b2, &c1, &c2] {
                b.complete(&opt, s);
            }
            f3 = opt;
        }
        TentOptional::Y => {
            b.complete(&opt, &c2);
            b.complete(&opt, &c3);
            y = opt;
        }
        TentOptional::None => {}
    }
    let w = b.fresh(counts[10]);
    b.clique(&w);
    b.complete(&w, &(0..thick.n()).collect::<Vec<_>>());
    b.complete(&w, &f2);
    b.complete(&w, &f3);
    b.nested_attach(&mut rng, &y, &w);
    let f_and_w: Vec<usize> = f2.iter().chain(&f3).chain(&w).copied().collect();
    let mut z_components = Vec::new();
    for &size in counts[11..].iter().filter(|&&s| s > 0) {
        let comp = b.fresh(size);
        b.clique(&comp);
        b.nested_attach(&mut rng, &comp, &f_and_w);
        z_components.push(comp);
    }
    let (graph, perm) = shuffle_ids(&mut rng, &b.build()?)?;
    let r = |s: &Vec<usize>| remap(&perm, s);
    let partition = TentPartition {
        a0: r(&a0),
        a1: r(&a1),
        b0: r(&b0),
        b1: r(&b1),
        b2: r(&b2),
        b3: r(&b3),
        c1: r(&c1),
        c2: r(&c2),
        c3: r(&c3),
        f2: r(&f2),
        f3: r(&f3),
        w: r(&w),
        y: remap_ordered(&perm, &y),
        z_components: z_components.iter().map(|c| remap_ordered(&perm, c)).collect(),
    };
    Ok(Generated {
        graph,
        partition,
        base: "T0".into(),
    })
}

/// Flips the adjacency of one uniformly random pair. Returns the new graph
/// and the pair.
pub fn mutate(g: &Graph, seed: u64) -> Result<(Graph, (usize, usize))> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("mutation needs at least two vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut k = rng.random_range(0..n * (n - 1) / 2);
    let mut u = 0;
    while k >= n - 1 - u {
        k -= n - 1 - u;
        u += 1;
    }
    let v = u + 1 + k;
    Ok((g.with_flipped(u, v)?, (u, v)))
}
