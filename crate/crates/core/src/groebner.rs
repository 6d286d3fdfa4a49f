//! Buchberger engine: reduced Gröbner bases, ideal membership and equality,
//! elimination, intersection, and the Rees-ideal-by-elimination oracle.
//!
//! This is the brute-force side of every closed-form claim in the library.
//! Pair selection uses the normal strategy (smallest lcm under the active
//! order); pairs are discarded by the coprimality and chain criteria in the
//! Gebauer-Moeller formulation. A configurable guard on basis size and
//! element degree turns runaway computations into a resource error instead
//! of an unbounded run.

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Poly, VarSpace};
use crate::scalar::Field;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

/// Guard limits for a single Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbLimits {
    /// Maximum number of basis elements accumulated during the run.
    pub max_basis: usize,
    /// Maximum total degree of any intermediate basis element.
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_basis: 50_000, max_degree: 120 }
    }
}

impl GbLimits {
    /// Read limits from an environment variable of the form
    /// `"<max_basis>"` or `"<max_basis>,<max_degree>"`.
    pub fn from_env_str(s: &str) -> Result<GbLimits> {
        let mut limits = GbLimits::default();
        let mut parts = s.split(',');
        if let Some(b) = parts.next() {
            limits.max_basis = b
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("bad basis cap '{b}'")))?;
        }
        if let Some(d) = parts.next() {
            limits.max_degree = d
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("bad degree cap '{d}'")))?;
        }
        Ok(limits)
    }
}

/// A reduced Gröbner basis together with its order and source generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Poly>,
    source: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn source(&self) -> &[Poly] {
        &self.source
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains_one(&self) -> bool {
        self.basis.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }
}

/// `lcm(a, b) == target`, allocation-free.
fn lcm_equals(a: &Monomial, b: &Monomial, target: &Monomial) -> bool {
    a.0.iter()
        .zip(&b.0)
        .zip(&target.0)
        .all(|((&x, &y), &t)| x.max(y) == t)
}

/// Divisor lookup index: reducers are bucketed by the least T-block
/// variable in their leading monomial (reducers without T-variables go to
/// a catch-all bucket). A divisor's least T-variable must occur in the
/// monomial being reduced, so a query scans only the buckets of the
/// monomial's own T-support plus the catch-all.
struct DivIndex {
    t_offset: usize,
    n_t: usize,
    buckets: Vec<Vec<u32>>,
    rest: Vec<u32>,
}

impl DivIndex {
    fn new(space: &VarSpace) -> DivIndex {
        DivIndex {
            t_offset: space.num_x(),
            n_t: space.num_t(),
            buckets: vec![Vec::new(); space.num_t()],
            rest: Vec::new(),
        }
    }

    fn insert(&mut self, idx: u32, lm: &Monomial) {
        for v in 0..self.n_t {
            if lm.0[self.t_offset + v] > 0 {
                self.buckets[v].push(idx);
                return;
            }
        }
        self.rest.push(idx);
    }

    /// Find a basis index whose leading monomial divides `m`, skipping
    /// `skip`; deterministic scan order.
    fn find_divisor(
        &self,
        m: &Monomial,
        mmask: u64,
        lms: &[Monomial],
        masks: &[u64],
        skip: usize,
    ) -> Option<usize> {
        for v in 0..self.n_t {
            if m.0[self.t_offset + v] == 0 {
                continue;
            }
            for &gi in &self.buckets[v] {
                let gi = gi as usize;
                if gi != skip && masks[gi] & !mmask == 0 && lms[gi].divides(m) {
                    return Some(gi);
                }
            }
        }
        for &gi in &self.rest {
            let gi = gi as usize;
            if gi != skip && masks[gi] & !mmask == 0 && lms[gi].divides(m) {
                return Some(gi);
            }
        }
        None
    }
}

/// Bitmask of variables with positive exponent, for fast divisibility
/// rejection: `g | m` requires `mask(g) & !mask(m) == 0`.
fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.0.iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i & 63);
        }
    }
    mask
}

struct Engine {
    order: MonomialOrder,
    basis: Vec<Poly>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    /// false once a later element's leading monomial divides this one;
    /// inactive elements stay as reducers but form no new pairs
    active: Vec<bool>,
    index: Option<DivIndex>,
    /// push-only min-heap of (selection key, pair id)
    heap: BinaryHeap<Reverse<(Vec<u8>, u32)>>,
    pair_ij: Vec<(u32, u32)>,
    pair_lcm: Vec<Monomial>,
    pair_mask: Vec<u64>,
    pair_dead: Vec<bool>,
    limits: GbLimits,
    /// per-variable weights making the input homogeneous; when present,
    /// pairs are selected by weighted lcm degree first
    sel_weights: Option<Vec<u64>>,
    trace: bool,
}

impl Engine {
    fn new(order: MonomialOrder, limits: GbLimits, sel_weights: Option<Vec<u64>>) -> Engine {
        Engine {
            order,
            basis: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            index: None,
            heap: BinaryHeap::new(),
            pair_ij: Vec::new(),
            pair_lcm: Vec::new(),
            pair_mask: Vec::new(),
            pair_dead: Vec::new(),
            limits,
            sel_weights,
            trace: std::env::var("STARREES_GB_TRACE").is_ok(),
        }
    }

    fn weighted_deg(&self, m: &Monomial) -> u64 {
        match &self.sel_weights {
            None => 0,
            Some(w) => m.0.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum(),
        }
    }

    fn selection_key(&self, lcm: &Monomial) -> Vec<u8> {
        let mut key = Vec::new();
        if self.sel_weights.is_some() {
            key.extend_from_slice(&self.weighted_deg(lcm).to_be_bytes());
        }
        key.extend_from_slice(&self.order.key_bytes(lcm));
        key
    }

    /// Full normal form of `f` (already sorted under the engine order)
    /// with respect to the current basis.
    fn normal_form(&self, f: Poly) -> Poly {
        match &self.index {
            None => f,
            Some(index) => {
                normal_form_indexed(f, &self.basis, &self.lms, &self.masks, index, usize::MAX, &self.order)
            }
        }
    }

    /// Gebauer-Moeller pair-set update for the freshly appended element `k`.
    fn update_pairs(&mut self, k: usize) {
        let lm_k = self.lms[k].clone();
        let mask_k = self.masks[k];
        // chain (B) criterion: retire old pairs whose lcm is a proper
        // multiple of lm_k seen from both sides (all checks allocation-free)
        for id in 0..self.pair_ij.len() {
            if self.pair_dead[id] {
                continue;
            }
            if mask_k & !self.pair_mask[id] != 0 {
                continue;
            }
            let lcm_ij = &self.pair_lcm[id];
            if !lm_k.divides(lcm_ij) {
                continue;
            }
            let (i, j) = self.pair_ij[id];
            let eq_i = lcm_equals(&self.lms[i as usize], &lm_k, lcm_ij);
            let eq_j = lcm_equals(&self.lms[j as usize], &lm_k, lcm_ij);
            if !eq_i && !eq_j {
                self.pair_dead[id] = true;
            }
        }
        // retire older elements superseded by the new leading monomial:
        // they remain reducers but form no further pairs
        for i in 0..k {
            if self.active[i]
                && mask_k & !self.masks[i] == 0
                && self.lms[i] != lm_k
                && lm_k.divides(&self.lms[i])
            {
                self.active[i] = false;
            }
        }
        // new pairs (i, k): keep only minimal lcms, one per equal class.
        // Divisibility is transitive, so checking against already-accepted
        // survivors (scanned in ascending degree) is equivalent to the full
        // pairwise filter.
        let mut cand: Vec<(usize, Monomial, u32, u64)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| {
                let l = self.lms[i].lcm(&lm_k);
                let deg = l.total_degree();
                let mask = divmask(&l);
                (i, l, deg, mask)
            })
            .collect();
        cand.sort_by(|a, b| a.2.cmp(&b.2).then_with(|| a.1.cmp(&b.1)).then(a.0.cmp(&b.0)));
        let mut survivors: Vec<(usize, Monomial, u32, u64)> = Vec::new();
        'cand: for (i, l, deg, mask) in cand {
            for (_, sl, sdeg, smask) in &survivors {
                if *sdeg == deg && *sl == l {
                    // equal lcm already represented
                    continue 'cand;
                }
                if smask & !mask == 0 && sl.divides(&l) {
                    continue 'cand;
                }
            }
            survivors.push((i, l, deg, mask));
        }
        survivors.sort_by_key(|(i, _, _, _)| *i);
        for (i, l, _, mask) in survivors {
            if self.lms[i].coprime_with(&lm_k) {
                continue;
            }
            let id = self.pair_ij.len() as u32;
            self.heap.push(Reverse((self.selection_key(&l), id)));
            self.pair_ij.push((i as u32, k as u32));
            self.pair_lcm.push(l);
            self.pair_mask.push(mask);
            self.pair_dead.push(false);
        }
    }

    fn add_generator(&mut self, f: Poly) -> Result<()> {
        if f.is_zero() {
            return Ok(());
        }
        if f.total_degree() > self.limits.max_degree {
            return Err(Error::ResourceCap(format!(
                "basis element degree {} exceeds cap {}",
                f.total_degree(),
                self.limits.max_degree
            )));
        }
        let f = f.monic();
        let lm = f.leading_monomial().unwrap().clone();
        let mask = divmask(&lm);
        let idx = self.basis.len() as u32;
        if self.index.is_none() {
            self.index = Some(DivIndex::new(f.space()));
        }
        self.index.as_mut().unwrap().insert(idx, &lm);
        self.masks.push(mask);
        self.lms.push(lm);
        self.active.push(true);
        self.basis.push(f);
        if self.basis.len() > self.limits.max_basis {
            return Err(Error::ResourceCap(format!(
                "basis size exceeds cap {}",
                self.limits.max_basis
            )));
        }
        self.update_pairs(self.basis.len() - 1);
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let mut processed = 0usize;
        while let Some(Reverse((_, id))) = self.heap.pop() {
            if self.pair_dead[id as usize] {
                continue;
            }
            let (i, j) = self.pair_ij[id as usize];
            let s = s_poly(&self.basis[i as usize], &self.basis[j as usize])?;
            let r = self.normal_form(s);
            processed += 1;
            if !r.is_zero() {
                self.add_generator(r)?;
            }
            if self.trace && processed % 2000 == 0 {
                eprintln!(
                    "gb: {} pairs done, basis {}, queue {}",
                    processed,
                    self.basis.len(),
                    self.heap.len()
                );
            }
        }
        Ok(())
    }

    /// Minimalize and tail-reduce into the unique reduced basis.
    fn reduce_basis(&mut self) -> Vec<Poly> {
        if self.basis.is_empty() {
            return Vec::new();
        }
        // minimal generating set of the leading-term ideal
        let space = self.basis[0].space().clone();
        let mut keep: Vec<bool> = vec![true; self.basis.len()];
        for a in 0..self.basis.len() {
            for b in 0..self.basis.len() {
                if a != b
                    && keep[b]
                    && self.masks[b] & !self.masks[a] == 0
                    && self.lms[b].divides(&self.lms[a])
                    && (self.lms[a] != self.lms[b] || b < a)
                {
                    keep[a] = false;
                    break;
                }
            }
        }
        let minimal: Vec<Poly> = self
            .basis
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(p, _)| p.clone())
            .collect();
        let lms: Vec<Monomial> =
            minimal.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
        let masks: Vec<u64> = lms.iter().map(divmask).collect();
        let mut index = DivIndex::new(&space);
        for (i, lm) in lms.iter().enumerate() {
            index.insert(i as u32, lm);
        }
        let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
        for (idx, p) in minimal.iter().enumerate() {
            let r = normal_form_indexed(p.clone(), &minimal, &lms, &masks, &index, idx, &self.order);
            if !r.is_zero() {
                reduced.push(r.monic());
            }
        }
        reduced.sort_by(|a, b| {
            self.order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
        reduced
    }
}

fn s_poly(f: &Poly, g: &Poly) -> Result<Poly> {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let l = lf.lcm(lg);
    let cf = f.leading_coeff().unwrap();
    let cg = g.leading_coeff().unwrap();
    let a = f.mul_term(&lf.div_into(&l), &cf.inverse()?)?;
    let b = g.mul_term(&lg.div_into(&l), &cg.inverse()?)?;
    a.sub(&b)
}

/// Full normal form of `f` modulo `basis`; `skip` excludes one reducer
/// index (used by tail interreduction). `f` must be sorted under `order`.
fn normal_form_impl(
    f: Poly,
    basis: &[Poly],
    lms: &[Monomial],
    masks: &[u64],
    skip: usize,
    order: &MonomialOrder,
) -> Poly {
    let space = f.space().clone();
    let field = f.field();
    let mut rem: Vec<(Monomial, crate::scalar::Scalar)> = Vec::new();
    let mut work = f;
    'outer: while !work.is_zero() {
        let lm = work.leading_monomial().unwrap();
        let lmask = divmask(lm);
        for (gi, (g, glm)) in basis.iter().zip(lms).enumerate() {
            if gi == skip || masks[gi] & !lmask != 0 || !glm.divides(lm) {
                continue;
            }
            let factor = glm.div_into(lm);
            let glc = g.leading_coeff().unwrap();
            let coef = if glc.is_one() {
                work.leading_coeff().unwrap().clone()
            } else {
                work.leading_coeff().unwrap().div(glc).expect("nonzero leading coefficient")
            };
            work = work.sub_shifted(g, &factor, &coef).expect("compatible");
            continue 'outer;
        }
        // leading term is irreducible: move it to the remainder
        let (m, c) = work.pop_leading_term();
        rem.push((m, c));
    }
    Poly::assemble_sorted(space, field, order.clone(), rem)
}

/// Normal form with an indexed divisor lookup.
fn normal_form_indexed(
    f: Poly,
    basis: &[Poly],
    lms: &[Monomial],
    masks: &[u64],
    index: &DivIndex,
    skip: usize,
    order: &MonomialOrder,
) -> Poly {
    let space = f.space().clone();
    let field = f.field();
    let mut rem: Vec<(Monomial, crate::scalar::Scalar)> = Vec::new();
    let mut work = f;
    while !work.is_zero() {
        let lm = work.leading_monomial().unwrap();
        let lmask = divmask(lm);
        match index.find_divisor(lm, lmask, lms, masks, skip) {
            Some(gi) => {
                let g = &basis[gi];
                let factor = lms[gi].div_into(lm);
                let glc = g.leading_coeff().unwrap();
                let coef = if glc.is_one() {
                    work.leading_coeff().unwrap().clone()
                } else {
                    work.leading_coeff().unwrap().div(glc).expect("nonzero leading coefficient")
                };
                work = work.sub_shifted(g, &factor, &coef).expect("compatible");
            }
            None => {
                let (m, c) = work.pop_leading_term();
                rem.push((m, c));
            }
        }
    }
    Poly::assemble_sorted(space, field, order.clone(), rem)
}

fn common_context(gens: &[Poly]) -> Result<Option<(Arc<VarSpace>, Field)>> {
    let Some(first) = gens.iter().find(|g| !g.is_zero() || true) else {
        return Ok(None);
    };
    let space = first.space().clone();
    let field = first.field();
    for g in gens {
        if *g.space().as_ref() != *space || g.field() != field {
            return Err(Error::Incompatible("generators in mixed contexts".into()));
        }
    }
    Ok(Some((space, field)))
}

/// The unique reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger_reduced(
    gens: &[Poly],
    order: MonomialOrder,
    limits: GbLimits,
) -> Result<GroebnerBasis> {
    buchberger_with_selection(gens, order, limits, None)
}

/// Buchberger with an optional selection-weight vector: when the input is
/// homogeneous under the weights, pairs are processed degree by degree,
/// which avoids most redundant reductions. The reduced basis is the same
/// either way.
fn buchberger_with_selection(
    gens: &[Poly],
    order: MonomialOrder,
    limits: GbLimits,
    sel_weights: Option<Vec<u64>>,
) -> Result<GroebnerBasis> {
    if common_context(gens)?.is_none() {
        return Ok(GroebnerBasis { order, basis: Vec::new(), source: Vec::new() });
    }
    let mut engine = Engine::new(order.clone(), limits, sel_weights);
    // interreduce the input as each generator is admitted
    for g in gens {
        let g = g.with_order(order.clone());
        let r = engine.normal_form(g);
        if !r.is_zero() {
            engine.add_generator(r)?;
        }
    }
    engine.run()?;
    let basis = engine.reduce_basis();
    Ok(GroebnerBasis { order, basis, source: gens.to_vec() })
}

/// Normal form of `f` modulo a reduced basis.
pub fn reduce(f: &Poly, gb: &GroebnerBasis) -> Poly {
    let lms: Vec<Monomial> =
        gb.basis.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
    let masks: Vec<u64> = lms.iter().map(divmask).collect();
    let f = f.clone().with_order(gb.order.clone());
    normal_form_impl(f, &gb.basis, &lms, &masks, usize::MAX, &gb.order)
}

/// Ideal membership: the normal form vanishes.
pub fn ideal_member(f: &Poly, gb: &GroebnerBasis) -> bool {
    reduce(f, gb).is_zero()
}

/// Ideal equality through reduced-basis uniqueness under a fixed order.
pub fn ideal_equal(gens_a: &[Poly], gens_b: &[Poly], limits: GbLimits) -> Result<bool> {
    let ga = buchberger_reduced(gens_a, MonomialOrder::DegRevLex, limits)?;
    let gb = buchberger_reduced(gens_b, MonomialOrder::DegRevLex, limits)?;
    Ok(ga.basis == gb.basis)
}

/// Generators of the elimination ideal: basis elements free of the block.
pub fn eliminate(gens: &[Poly], block: &[usize], limits: GbLimits) -> Result<Vec<Poly>> {
    eliminate_with_selection(gens, block, limits, None)
}

fn eliminate_with_selection(
    gens: &[Poly],
    block: &[usize],
    limits: GbLimits,
    sel_weights: Option<Vec<u64>>,
) -> Result<Vec<Poly>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let dim = gens[0].space().dim();
    for &v in block {
        if v >= dim {
            return Err(Error::Parameter(format!("block variable {v} outside the space")));
        }
    }
    let order = MonomialOrder::Block(block.to_vec());
    let gb = buchberger_with_selection(gens, order, limits, sel_weights)?;
    let mut out: Vec<Poly> = gb
        .basis
        .iter()
        .filter(|p| {
            p.terms().iter().all(|(m, _)| block.iter().all(|&v| m.0[v] == 0))
        })
        .cloned()
        .collect();
    // re-sorted under the default order for downstream comparisons
    out = out.into_iter().map(|p| p.with_order(MonomialOrder::DegRevLex)).collect();
    out.sort_by(|a, b| {
        MonomialOrder::DegRevLex.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    Ok(out)
}

/// Ideal intersection via the auxiliary construction s*A + (1-s)*B,
/// eliminating s. Inputs live in an aux-free space; so does the output.
pub fn ideal_intersect(gens_a: &[Poly], gens_b: &[Poly], limits: GbLimits) -> Result<Vec<Poly>> {
    if gens_a.is_empty() {
        return Ok(Vec::new());
    }
    if gens_b.is_empty() {
        return Ok(Vec::new());
    }
    let (space, field) = common_context(gens_a)?.expect("nonempty");
    let (space_b, field_b) = common_context(gens_b)?.expect("nonempty");
    if *space != *space_b || field != field_b {
        return Err(Error::Incompatible("intersection operands in mixed contexts".into()));
    }
    if space.has_aux() {
        return Err(Error::Incompatible(
            "intersection operands may not use the auxiliary variable".into(),
        ));
    }
    let big = space.with_aux();
    let s = Poly::var(big.clone(), field, big.aux_var());
    let one_minus_s = Poly::one(big.clone(), field).sub(&s)?;
    let mut gens: Vec<Poly> = Vec::new();
    for a in gens_a {
        gens.push(a.project_to(big.clone())?.mul(&s)?);
    }
    for b in gens_b {
        gens.push(b.project_to(big.clone())?.mul(&one_minus_s)?);
    }
    let elim = eliminate(&gens, &[big.aux_var()], limits)?;
    elim.into_iter().map(|p| p.project_to(space.clone())).collect()
}

/// Kernel of T_i -> g_i * s by eliminating s from { T_i - s*g_i }.
/// The g_i are polynomials in the x-block of a space whose T-block has one
/// variable per generator; output generators live in the same aux-free space.
pub fn rees_ideal_oracle(gens_g: &[Poly], limits: GbLimits) -> Result<Vec<Poly>> {
    let Some((space, field)) = common_context(gens_g)? else {
        return Ok(Vec::new());
    };
    if space.num_t() != gens_g.len() {
        return Err(Error::Parameter(format!(
            "space has {} T-variables for {} generators",
            space.num_t(),
            gens_g.len()
        )));
    }
    if gens_g.iter().any(|g| g.is_zero()) {
        return Err(Error::Degenerate("zero generator in Rees oracle input".into()));
    }
    let big = space.with_aux();
    let s = Poly::var(big.clone(), field, big.aux_var());
    let mut gens: Vec<Poly> = Vec::with_capacity(gens_g.len());
    for (i, g) in gens_g.iter().enumerate() {
        let t = Poly::var(big.clone(), field, big.t_var(i + 1));
        let gs = g.project_to(big.clone())?.mul(&s)?;
        gens.push(t.sub(&gs)?);
    }
    // selection weights under which T_i - s*g_i is homogeneous whenever the
    // g_i are; degree-layered pair processing keeps the run lean
    let mut weights: Vec<u64> = vec![1; big.dim()];
    for (i, g) in gens_g.iter().enumerate() {
        weights[big.t_var(i + 1)] = g.total_degree() as u64 + 1;
    }
    let elim = eliminate_with_selection(&gens, &[big.aux_var()], limits, Some(weights))?;
    elim.into_iter().map(|p| p.project_to(space.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn sp2() -> Arc<VarSpace> {
        // two x variables named x1, x2 used as x, y below
        VarSpace::new(2, 0)
    }

    fn q(s: &str, sp: &Arc<VarSpace>) -> Poly {
        parse_poly(s, sp, Field::Q).unwrap()
    }

    #[test]
    fn hand_buchberger_run() {
        // {x^2 - 1, x*y - 1} under lex x > y reduces to {x - y, y^2 - 1}
        let sp = sp2();
        let gens = vec![q("x1^2 - 1", &sp), q("x1*x2 - 1", &sp)];
        let gb = buchberger_reduced(&gens, MonomialOrder::Lex, GbLimits::default()).unwrap();
        let basis: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(basis, vec!["x2^2 - 1", "x1 - x2"]);
        assert!(ideal_member(&q("x2^2 - 1", &sp).with_order(MonomialOrder::Lex), &gb));
    }

    #[test]
    fn trivial_bases() {
        let sp = sp2();
        let gens = vec![q("x1", &sp), q("x2", &sp)];
        let gb = buchberger_reduced(&gens, MonomialOrder::DegRevLex, GbLimits::default()).unwrap();
        assert_eq!(gb.basis().len(), 2);
        // membership of 0 and exclusion of 1
        assert!(ideal_member(&Poly::zero(sp.clone(), Field::Q), &gb));
        assert!(!ideal_member(&Poly::one(sp.clone(), Field::Q), &gb));

        let sp2 = VarSpace::new(2, 2);
        let f = parse_poly("x1*T2 - x2*T1", &sp2, Field::Q).unwrap();
        let gb2 = buchberger_reduced(
            std::slice::from_ref(&f),
            MonomialOrder::DegRevLex,
            GbLimits::default(),
        )
        .unwrap();
        assert_eq!(gb2.basis(), &[f.monic()]);
    }

    #[test]
    fn ideal_equality_examples() {
        let sp = sp2();
        let a = vec![q("x1", &sp), q("x2", &sp)];
        let b = vec![q("x2", &sp), q("x1 + x2", &sp)];
        assert!(ideal_equal(&a, &b, GbLimits::default()).unwrap());
        let c = vec![q("x1", &sp)];
        let d = vec![q("x1^2", &sp)];
        assert!(!ideal_equal(&c, &d, GbLimits::default()).unwrap());
    }

    #[test]
    fn elimination_parabola() {
        // eliminate s from {s - x, s^2 - y}: the parabola x^2 - y
        let sp = VarSpace::new(2, 0).with_aux();
        let f = Field::Q;
        let gens = vec![
            parse_poly("s - x1", &sp, f).unwrap(),
            parse_poly("s^2 - x2", &sp, f).unwrap(),
        ];
        let out = eliminate(&gens, &[sp.aux_var()], GbLimits::default()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "x1^2 - x2");
    }

    #[test]
    fn elimination_empty() {
        let sp = VarSpace::new(2, 2);
        let f = parse_poly("x1*T2 - x2*T1", &sp, Field::Q).unwrap();
        let out = eliminate(
            std::slice::from_ref(&f),
            &[sp.x_var(1), sp.x_var(2)],
            GbLimits::default(),
        )
        .unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn intersect_examples() {
        let sp = sp2();
        let a = vec![q("x1", &sp)];
        let b = vec![q("x2", &sp)];
        let out = ideal_intersect(&a, &b, GbLimits::default()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "x1*x2");

        let j = vec![q("x1^2 - x2", &sp)];
        let unit = vec![Poly::one(sp.clone(), Field::Q)];
        let out2 = ideal_intersect(&j, &unit, GbLimits::default()).unwrap();
        assert!(ideal_equal(&out2, &j, GbLimits::default()).unwrap());
    }

    #[test]
    fn rees_oracle_small() {
        // single generator x: T1 and x*s are algebraically independent
        let sp1 = VarSpace::new(1, 1);
        let g = vec![parse_poly("x1", &sp1, Field::Q).unwrap()];
        assert!(rees_ideal_oracle(&g, GbLimits::default()).unwrap().is_empty());

        // two generators (x, y): the Koszul syzygy
        let sp = VarSpace::new(2, 2);
        let g = vec![
            parse_poly("x1", &sp, Field::Q).unwrap(),
            parse_poly("x2", &sp, Field::Q).unwrap(),
        ];
        let out = rees_ideal_oracle(&g, GbLimits::default()).unwrap();
        assert_eq!(out.len(), 1);
        let want = parse_poly("x1*T2 - x2*T1", &sp, Field::Q).unwrap().monic();
        assert_eq!(out[0].monic(), want);
    }

    #[test]
    fn rees_oracle_three_var_star() {
        // g_i = products omitting F_i for {x, y, z}: linear type
        let sp = VarSpace::new(3, 3);
        let f = Field::Fp(101);
        let g = vec![
            parse_poly("x2*x3", &sp, f).unwrap(),
            parse_poly("x1*x3", &sp, f).unwrap(),
            parse_poly("x1*x2", &sp, f).unwrap(),
        ];
        let out = rees_ideal_oracle(&g, GbLimits::default()).unwrap();
        let lambda = vec![
            parse_poly("x1*T1 - x2*T2", &sp, f).unwrap(),
            parse_poly("x2*T2 - x3*T3", &sp, f).unwrap(),
        ];
        assert!(ideal_equal(&out, &lambda, GbLimits::default()).unwrap());
    }

    #[test]
    fn permutation_invariance() {
        let sp = VarSpace::new(3, 0);
        let f = Field::Fp(101);
        let gens = vec![
            parse_poly("x1^2 + x2*x3", &sp, f).unwrap(),
            parse_poly("x1*x2 - x3^2", &sp, f).unwrap(),
            parse_poly("x2^2 - x1*x3", &sp, f).unwrap(),
        ];
        let gb1 = buchberger_reduced(&gens, MonomialOrder::DegRevLex, GbLimits::default()).unwrap();
        let mut perm = gens.clone();
        perm.reverse();
        let gb2 = buchberger_reduced(&perm, MonomialOrder::DegRevLex, GbLimits::default()).unwrap();
        assert_eq!(gb1.basis(), gb2.basis());
        for g in &gens {
            assert!(ideal_member(&g.with_order(MonomialOrder::DegRevLex), &gb1));
        }
    }

    #[test]
    fn resource_cap_fires() {
        let sp = VarSpace::new(2, 0);
        let gens = vec![q("x1^3 - x2", &sp), q("x1*x2^2 - 1", &sp)];
        let tight = GbLimits { max_basis: 1, max_degree: 100 };
        assert!(matches!(
            buchberger_reduced(&gens, MonomialOrder::DegRevLex, tight),
            Err(Error::ResourceCap(_))
        ));
    }
}
