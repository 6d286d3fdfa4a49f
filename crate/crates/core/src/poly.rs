//! Sparse multivariate polynomials over [`Scalar`] in a bigraded variable
//! space split into an x-block (ring variables) and a T-block (Rees
//! variables), with an optional auxiliary elimination variable `s`.
//!
//! Terms are kept sorted strictly descending under the polynomial's active
//! [`MonomialOrder`]; switching orders is an explicit re-sort.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// The ambient variable space: `n` x-variables, `t` T-variables, and
/// optionally one auxiliary variable `s` used by elimination constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpace {
    n: usize,
    t: usize,
    aux: bool,
    x_weights: Vec<u32>,
}

impl VarSpace {
    pub fn new(n: usize, t: usize) -> Arc<VarSpace> {
        Arc::new(VarSpace { n, t, aux: false, x_weights: vec![1; n] })
    }

    pub fn with_weights(n: usize, t: usize, weights: Vec<u32>) -> Result<Arc<VarSpace>> {
        if weights.len() != n {
            return Err(Error::Parameter(format!(
                "expected {n} x-weights, got {}",
                weights.len()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Parameter("x-weights must be positive".into()));
        }
        Ok(Arc::new(VarSpace { n, t, aux: false, x_weights: weights }))
    }

    /// The same space extended by the auxiliary elimination variable.
    pub fn with_aux(&self) -> Arc<VarSpace> {
        Arc::new(VarSpace { n: self.n, t: self.t, aux: true, x_weights: self.x_weights.clone() })
    }

    /// The same space without the auxiliary variable.
    pub fn without_aux(&self) -> Arc<VarSpace> {
        Arc::new(VarSpace { n: self.n, t: self.t, aux: false, x_weights: self.x_weights.clone() })
    }

    pub fn num_x(&self) -> usize {
        self.n
    }

    pub fn num_t(&self) -> usize {
        self.t
    }

    pub fn has_aux(&self) -> bool {
        self.aux
    }

    pub fn x_weights(&self) -> &[u32] {
        &self.x_weights
    }

    pub fn dim(&self) -> usize {
        self.n + self.t + usize::from(self.aux)
    }

    /// Index of `x_j`, 1-based `j`.
    pub fn x_var(&self, j: usize) -> usize {
        assert!(1 <= j && j <= self.n, "x{j} out of range");
        j - 1
    }

    /// Index of `T_i`, 1-based `i`.
    pub fn t_var(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.t, "T{i} out of range");
        self.n + i - 1
    }

    /// Index of the auxiliary variable.
    pub fn aux_var(&self) -> usize {
        assert!(self.aux, "space has no auxiliary variable");
        self.n + self.t
    }

    pub fn var_name(&self, idx: usize) -> String {
        if idx < self.n {
            format!("x{}", idx + 1)
        } else if idx < self.n + self.t {
            format!("T{}", idx - self.n + 1)
        } else {
            "s".to_string()
        }
    }

    pub fn var_by_name(&self, name: &str) -> Option<usize> {
        if name == "s" {
            return self.aux.then(|| self.aux_var());
        }
        if let Some(num) = name.strip_prefix('x') {
            let j: usize = num.parse().ok()?;
            return (1 <= j && j <= self.n).then(|| j - 1);
        }
        if let Some(num) = name.strip_prefix('T') {
            let i: usize = num.parse().ok()?;
            return (1 <= i && i <= self.t).then(|| self.n + i - 1);
        }
        None
    }
}

/// Exponent vector over a [`VarSpace`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(dim: usize) -> Monomial {
        Monomial(vec![0; dim])
    }

    pub fn var(dim: usize, idx: usize) -> Monomial {
        let mut e = vec![0; dim];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }
}

/// Total monomial orders compatible with multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic, variable list x-block first.
    DegRevLex,
    /// Lexicographic, variable list x-block first.
    Lex,
    /// Block elimination order: the designated block is eliminated first
    /// (compared by degrevlex), ties broken by degrevlex on the rest.
    Block(Vec<usize>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex_cmp(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block(block) => {
                let block_cmp = degrevlex_cmp_subset(&a.0, &b.0, block, true);
                if block_cmp != Ordering::Equal {
                    return block_cmp;
                }
                degrevlex_cmp_subset(&a.0, &b.0, block, false)
            }
        }
    }

    /// Encode a monomial into bytes whose lexicographic order agrees with
    /// this monomial order (used for pair-queue keys).
    pub fn key_bytes(&self, m: &Monomial) -> Vec<u8> {
        match self {
            MonomialOrder::DegRevLex => {
                let mut k = Vec::with_capacity(4 + 2 * m.0.len());
                k.extend_from_slice(&m.total_degree().to_be_bytes());
                for &e in m.0.iter().rev() {
                    k.extend_from_slice(&(u16::MAX - e).to_be_bytes());
                }
                k
            }
            MonomialOrder::Lex => {
                let mut k = Vec::with_capacity(2 * m.0.len());
                for &e in &m.0 {
                    k.extend_from_slice(&e.to_be_bytes());
                }
                k
            }
            MonomialOrder::Block(block) => {
                let in_block = membership(block, m.0.len());
                let mut k = Vec::new();
                for pass in [true, false] {
                    let deg: u32 = m
                        .0
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| in_block[*i] == pass)
                        .map(|(_, &e)| e as u32)
                        .sum();
                    k.extend_from_slice(&deg.to_be_bytes());
                    for (i, &e) in m.0.iter().enumerate().rev() {
                        if in_block[i] == pass {
                            k.extend_from_slice(&(u16::MAX - e).to_be_bytes());
                        }
                    }
                }
                k
            }
        }
    }
}

fn membership(block: &[usize], dim: usize) -> Vec<bool> {
    let mut v = vec![false; dim];
    for &i in block {
        v[i] = true;
    }
    v
}

fn degrevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // ties: the last nonzero entry of a - b negative means a > b
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

fn degrevlex_cmp_subset(a: &[u16], b: &[u16], block: &[usize], in_block: bool) -> Ordering {
    let member = membership(block, a.len());
    let da: u32 = a
        .iter()
        .enumerate()
        .filter(|(i, _)| member[*i] == in_block)
        .map(|(_, &e)| e as u32)
        .sum();
    let db: u32 = b
        .iter()
        .enumerate()
        .filter(|(i, _)| member[*i] == in_block)
        .map(|(_, &e)| e as u32)
        .sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if member[i] != in_block {
            continue;
        }
        match a[i].cmp(&b[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

/// Bidegree of a polynomial: either a well-defined (x-degree, T-degree)
/// pair, or the not-bihomogeneous flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bidegree {
    Homogeneous { dx: u32, dt: u32 },
    NotBihomogeneous,
}

/// Sparse multivariate polynomial; immutable after construction.
#[derive(Debug, Clone)]
pub struct Poly {
    space: Arc<VarSpace>,
    field: Field,
    order: MonomialOrder,
    /// (monomial, coefficient), strictly descending under `order`,
    /// no zero coefficients.
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        if *self.space != *other.space || self.field != other.field {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        let mut a: Vec<_> = self.terms.iter().collect();
        let mut b: Vec<_> = other.terms.iter().collect();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        a == b
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(space: Arc<VarSpace>, field: Field) -> Poly {
        Poly { space, field, order: MonomialOrder::DegRevLex, terms: Vec::new() }
    }

    pub fn one(space: Arc<VarSpace>, field: Field) -> Poly {
        let m = Monomial::one(space.dim());
        Poly::from_terms(space, field, vec![(m, field.one())])
    }

    pub fn constant(space: Arc<VarSpace>, c: Scalar) -> Poly {
        let m = Monomial::one(space.dim());
        let field = c.field();
        Poly::from_terms(space, field, vec![(m, c)])
    }

    pub fn var(space: Arc<VarSpace>, field: Field, idx: usize) -> Poly {
        let m = Monomial::var(space.dim(), idx);
        Poly::from_terms(space, field, vec![(m, field.one())])
    }

    pub fn monomial(space: Arc<VarSpace>, field: Field, m: Monomial) -> Poly {
        Poly::from_terms(space, field, vec![(m, field.one())])
    }

    /// Build from arbitrary (monomial, coefficient) pairs: merges duplicates,
    /// drops zeros, sorts descending under degrevlex.
    pub fn from_terms(
        space: Arc<VarSpace>,
        field: Field,
        terms: Vec<(Monomial, Scalar)>,
    ) -> Poly {
        let mut p = Poly { space, field, order: MonomialOrder::DegRevLex, terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let order = self.order.clone();
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c).expect("field checked");
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn space(&self) -> &Arc<VarSpace> {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Re-sort the terms under a different order (explicit by design).
    pub fn with_order(&self, order: MonomialOrder) -> Poly {
        let mut p = self.clone();
        if p.order != order {
            p.order = order;
            let o = p.order.clone();
            p.terms.sort_by(|a, b| o.cmp(&b.0, &a.0));
        }
        p
    }

    fn check_compatible(&self, other: &Poly) -> Result<()> {
        if *self.space != *other.space {
            return Err(Error::Incompatible("polynomials over different variable spaces".into()));
        }
        if self.field != other.field {
            return Err(Error::Incompatible(format!(
                "polynomials over {} and {}",
                self.field, other.field
            )));
        }
        if self.order != other.order {
            return Err(Error::Incompatible(
                "polynomials sorted under different monomial orders".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let order = self.order.clone();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1)?;
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Ok(Poly { space: self.space.clone(), field: self.field, order, terms })
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Poly { space: self.space.clone(), field: self.field, order: self.order.clone(), terms }
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    /// Multiply by a single term, preserving order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Result<Poly> {
        if c.is_zero() {
            return Ok(Poly::zero(self.space.clone(), self.field));
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| Ok((tm.mul(m), tc.mul(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly { space: self.space.clone(), field: self.field, order: self.order.clone(), terms })
    }

    pub fn scale(&self, c: &Scalar) -> Result<Poly> {
        self.mul_term(&Monomial::one(self.space.dim()), c)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let mut acc = Poly::zero(self.space.clone(), self.field);
        acc.order = self.order.clone();
        // iterate over the shorter operand
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c)?)?;
        }
        Ok(acc)
    }

    /// `self - coeff * x^factor * g` in a single merge pass.
    pub fn sub_shifted(&self, g: &Poly, factor: &Monomial, coeff: &Scalar) -> Result<Poly> {
        let order = self.order.clone();
        let mut terms = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        // cache the shifted monomial of g's current term
        let mut gj: Option<(Monomial, Scalar)> = None;
        while i < self.terms.len() && j < g.terms.len() {
            if gj.is_none() {
                let (gm, gc) = &g.terms[j];
                gj = Some((gm.mul(factor), gc.mul(coeff)?.neg()));
            }
            let (sm, sc) = &self.terms[i];
            let (tm, tc) = gj.as_ref().unwrap();
            match order.cmp(sm, tm) {
                Ordering::Greater => {
                    terms.push((sm.clone(), sc.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(gj.take().unwrap());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = sc.add(tc)?;
                    if !c.is_zero() {
                        terms.push((sm.clone(), c));
                    }
                    gj = None;
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        if let Some(t) = gj.take() {
            terms.push(t);
            j += 1;
        }
        for (gm, gc) in &g.terms[j..] {
            terms.push((gm.mul(factor), gc.mul(coeff)?.neg()));
        }
        Ok(Poly { space: self.space.clone(), field: self.field, order, terms })
    }

    /// Remove and return the leading term; panics on the zero polynomial.
    pub fn pop_leading_term(&mut self) -> (Monomial, Scalar) {
        self.terms.remove(0)
    }

    /// Build from terms already strictly descending under `order`.
    pub fn assemble_sorted(
        space: Arc<VarSpace>,
        field: Field,
        order: MonomialOrder,
        terms: Vec<(Monomial, Scalar)>,
    ) -> Poly {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly { space, field, order, terms }
    }

    /// Leading coefficient scaled to 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inverse().expect("nonzero leading coefficient")).unwrap(),
        }
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.space.clone(), self.field);
        quot.order = self.order.clone();
        let dlm = divisor.leading_monomial().unwrap();
        let dlc = divisor.leading_coeff().unwrap();
        while !rem.is_zero() {
            let rlm = rem.leading_monomial().unwrap();
            if !dlm.divides(rlm) {
                return None;
            }
            let qm = dlm.div_into(rlm);
            let qc = rem.leading_coeff().unwrap().div(dlc).ok()?;
            let qt = Poly {
                space: self.space.clone(),
                field: self.field,
                order: self.order.clone(),
                terms: vec![(qm.clone(), qc.clone())],
            };
            rem = rem.sub(&divisor.mul_term(&qm, &qc).ok()?).ok()?;
            quot = quot.add(&qt).ok()?;
        }
        Some(quot)
    }

    /// Greatest monomial dividing every term.
    pub fn content_monomial(&self) -> Result<Monomial> {
        if self.is_zero() {
            return Err(Error::ZeroContent);
        }
        let mut content = self.terms[0].0.clone();
        for (m, _) in &self.terms[1..] {
            content = content.gcd(m);
            if content.is_one() {
                break;
            }
        }
        Ok(content)
    }

    /// Weighted (x-degree, T-degree) when all terms agree; the auxiliary
    /// variable contributes to neither block, so its presence flags
    /// non-bihomogeneity unless the exponent is constant across terms.
    pub fn bidegree(&self) -> Bidegree {
        let mut seen: Option<(u32, u32, u16)> = None;
        let n = self.space.num_x();
        let t = self.space.num_t();
        for (m, _) in &self.terms {
            let dx: u32 = (0..n).map(|j| m.0[j] as u32 * self.space.x_weights()[j]).sum();
            let dt: u32 = (n..n + t).map(|i| m.0[i] as u32).sum();
            let ds = if self.space.has_aux() { m.0[self.space.aux_var()] } else { 0 };
            match seen {
                None => seen = Some((dx, dt, ds)),
                Some(prev) if prev == (dx, dt, ds) => {}
                Some(_) => return Bidegree::NotBihomogeneous,
            }
        }
        let (dx, dt, _) = seen.unwrap_or((0, 0, 0));
        Bidegree::Homogeneous { dx, dt }
    }

    /// Substitute polynomials for selected variables. Unmapped variables stay.
    /// All images must live in `target` over the same field.
    pub fn substitute(
        &self,
        target: Arc<VarSpace>,
        images: &[(usize, Poly)],
    ) -> Result<Poly> {
        let mut image_of: Vec<Option<&Poly>> = vec![None; self.space.dim()];
        for (idx, p) in images {
            if *p.space != *target {
                return Err(Error::Incompatible("substitution image in wrong space".into()));
            }
            image_of[*idx] = Some(p);
        }
        // identity embedding requires same dimension layout for unmapped vars
        let mut acc = Poly::zero(target.clone(), self.field);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target.clone(), c.clone());
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match image_of[idx] {
                    Some(img) => {
                        let mut pw = img.clone();
                        for _ in 1..e {
                            pw = pw.mul(img)?;
                        }
                        term = term.mul(&pw)?;
                    }
                    None => {
                        // the unmapped variable must exist at the same index
                        if idx >= target.dim() {
                            return Err(Error::Incompatible(
                                "unmapped variable outside target space".into(),
                            ));
                        }
                        let mut mono = Monomial::one(target.dim());
                        mono.0[idx] = e;
                        term = term.mul_term(&mono, &self.field.one())?;
                    }
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Reinterpret this polynomial in another space with the same (n, t)
    /// layout; fails if a variable absent from the target is used.
    pub fn project_to(&self, target: Arc<VarSpace>) -> Result<Poly> {
        if self.space.num_x() != target.num_x() || self.space.num_t() != target.num_t() {
            return Err(Error::Incompatible("projection changes the x/T layout".into()));
        }
        let tdim = target.dim();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                if e.len() > tdim {
                    if e[tdim..].iter().any(|&x| x != 0) {
                        return Err(Error::Incompatible(
                            "polynomial uses the auxiliary variable".into(),
                        ));
                    }
                    e.truncate(tdim);
                } else {
                    e.resize(tdim, 0);
                }
                Ok((Monomial(e), c.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(target, self.field, terms).with_order(self.order.clone()))
    }

    /// Reduce rational coefficients mod p (identity on matching prime fields).
    pub fn reduce_mod(&self, p: u64) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), c.reduce_mod(p)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(self.space.clone(), Field::Fp(p), terms)
            .with_order(self.order.clone()))
    }
}

/// Spec-facing polynomial ring arithmetic entry point.
pub fn poly_arith(op: ArithOp, a: &Poly, b: &Poly) -> Result<Poly> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Mul => a.mul(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = scalar_sign_split(c);
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &mag, m, &self.space)?;
        }
        Ok(())
    }
}

fn scalar_sign_split(c: &Scalar) -> (bool, String) {
    match c {
        Scalar::Rat(r) => {
            use num_traits::Signed;
            if r.is_negative() {
                (true, Scalar::Rat(-r).to_string())
            } else {
                (false, c.to_string())
            }
        }
        Scalar::Fp { val, p } => {
            // print small negative residues as subtractions for readability
            if *val > p / 2 {
                (true, (p - val).to_string())
            } else {
                (false, val.to_string())
            }
        }
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff_mag: &str,
    m: &Monomial,
    space: &VarSpace,
) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    for (idx, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = space.var_name(idx);
        if e == 1 {
            factors.push(name);
        } else {
            factors.push(format!("{name}^{e}"));
        }
    }
    if factors.is_empty() {
        return write!(f, "{coeff_mag}");
    }
    if coeff_mag != "1" {
        write!(f, "{coeff_mag}*")?;
    }
    write!(f, "{}", factors.join("*"))
}

/// Parse polynomial text in the library format: terms joined by `+`/`-`,
/// `*` between factors, `^` for exponents, variables `x<k>`, `T<k>`, `s`.
/// The minus sign U+2212 is accepted as a synonym for `-`.
pub fn parse_poly(input: &str, space: &Arc<VarSpace>, field: Field) -> Result<Poly> {
    Parser::new(input, space.clone(), field).parse()
}

struct Parser<'a> {
    src: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    space: Arc<VarSpace>,
    field: Field,
    raw: &'a str,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, space: Arc<VarSpace>, field: Field) -> Self {
        Parser {
            src: input.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            space,
            field,
            raw: input,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn parse(mut self) -> Result<Poly> {
        self.skip_ws();
        if self.raw.trim().is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        let mut sign = 1i64;
        // optional leading sign
        match self.peek() {
            Some('-') | Some('\u{2212}') => {
                self.bump();
                sign = -1;
            }
            Some('+') => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (m, c) = self.parse_term()?;
            let c = if sign < 0 { c.neg() } else { c };
            terms.push((m, c));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    sign = 1;
                }
                Some('-') | Some('\u{2212}') => {
                    self.bump();
                    sign = -1;
                }
                Some(c) => return Err(self.err(format!("unexpected character '{c}'"))),
            }
        }
        Ok(Poly::from_terms(self.space.clone(), self.field, terms))
    }

    fn parse_term(&mut self) -> Result<(Monomial, Scalar)> {
        self.skip_ws();
        let mut coeff = self.field.one();
        let mut mono = Monomial::one(self.space.dim());
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.parse_number()?;
                    coeff = coeff.mul(&num).map_err(|e| self.err(e.to_string()))?;
                }
                Some(c) if c.is_alphabetic() => {
                    let (idx, exp) = self.parse_var_power()?;
                    mono.0[idx] = mono.0[idx]
                        .checked_add(exp)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                continue;
            }
            // juxtaposition is not allowed; a term ends at +, -, or EOF
            break;
        }
        Ok((mono, coeff))
    }

    fn parse_number(&mut self) -> Result<Scalar> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some('/') {
            self.bump();
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
        }
        let text: String = self.src[start..self.pos].iter().collect();
        Scalar::parse(&text, self.field).map_err(|e| self.err(e.to_string()))
    }

    fn parse_var_power(&mut self) -> Result<(usize, u16)> {
        let start = self.pos;
        // variable name: one letter plus digits
        self.bump();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        let name: String = self.src[start..self.pos].iter().collect();
        let idx = self
            .space
            .var_by_name(&name)
            .ok_or_else(|| self.err(format!("unknown variable '{name}'")))?;
        let mut exp: u16 = 1;
        if self.peek() == Some('^') {
            self.bump();
            let estart = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
            let etext: String = self.src[estart..self.pos].iter().collect();
            exp = etext.parse().map_err(|_| self.err("bad exponent"))?;
        }
        Ok((idx, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn space34() -> Arc<VarSpace> {
        VarSpace::new(3, 4)
    }

    fn p(s: &str, sp: &Arc<VarSpace>) -> Poly {
        parse_poly(s, sp, Field::Q).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let sp = space34();
        let a = p("T1 + T2", &sp);
        let b = p("T1 - T2", &sp);
        assert_eq!(a.mul(&b).unwrap(), p("T1^2 - T2^2", &sp));
        let c = p("x1*T1", &sp);
        assert!(c.add(&c.neg()).unwrap().is_zero());
        let sp6 = VarSpace::new(4, 6);
        let l1 = p("x1 + x2 + x3 + x4", &sp6);
        let t5 = p("T5", &sp6);
        assert_eq!(l1.mul(&t5).unwrap(), p("x1*T5 + x2*T5 + x3*T5 + x4*T5", &sp6));
    }

    #[test]
    fn incompatible_operands() {
        let a = p("T1", &space34());
        let b = p("T1", &VarSpace::new(2, 4));
        assert!(a.add(&b).is_err());
        let c = parse_poly("T1", &space34(), Field::Fp(101)).unwrap();
        assert!(a.add(&c).is_err());
    }

    #[test]
    fn content_monomial_examples() {
        let sp = VarSpace::new(4, 6);
        let m1 = p("-T2*T3*T4*T5 + 2*T2*T4*T5*T6 + T3*T4*T5*T6 + 3*T2*T3*T5*T6", &sp);
        let t5 = Monomial::var(sp.dim(), sp.t_var(5));
        assert_eq!(m1.content_monomial().unwrap(), t5);

        let m6 = p("T1*T2*T3*T5 - T1*T2*T3*T4 + T1*T2*T4*T5 + T1*T3*T4*T5 + T2*T3*T4*T5", &sp);
        assert!(m6.content_monomial().unwrap().is_one());

        let f = p("x1^2*T1 + x1*T1^2", &sp);
        let mut expect = Monomial::one(sp.dim());
        expect.0[sp.x_var(1)] = 1;
        expect.0[sp.t_var(1)] = 1;
        assert_eq!(f.content_monomial().unwrap(), expect);

        assert_eq!(Poly::zero(sp, Field::Q).content_monomial(), Err(Error::ZeroContent));
    }

    #[test]
    fn bidegree_examples() {
        let sp = VarSpace::new(4, 6);
        let m6 = p("T1*T2*T3*T5 - T1*T2*T3*T4 + T1*T2*T4*T5 + T1*T3*T4*T5 + T2*T3*T4*T5", &sp);
        assert_eq!(m6.bidegree(), Bidegree::Homogeneous { dx: 0, dt: 4 });
        let l = p("x1*T1 - x2*T2", &sp);
        assert_eq!(l.bidegree(), Bidegree::Homogeneous { dx: 1, dt: 1 });
        let bad = p("x1*T1 + T2", &sp);
        assert_eq!(bad.bidegree(), Bidegree::NotBihomogeneous);
    }

    #[test]
    fn weighted_bidegree() {
        let sp = VarSpace::with_weights(2, 2, vec![2, 2]).unwrap();
        let f = parse_poly("x1*T1 - x2*T2", &sp, Field::Q).unwrap();
        assert_eq!(f.bidegree(), Bidegree::Homogeneous { dx: 2, dt: 1 });
    }

    #[test]
    fn display_parse_roundtrip_examples() {
        let sp = VarSpace::new(4, 6);
        // canonical form: descending under degrevlex
        for text in [
            "-T1*T2*T3*T4 + 3*T1*T2*T3*T6",
            "x1*T1 - x2*T2",
            "T1^2 - T2^2",
            "0",
            "1",
            "-x1 + 5/3*x2",
        ] {
            if text == "0" {
                let z = Poly::zero(sp.clone(), Field::Q);
                assert_eq!(z.to_string(), "0");
                continue;
            }
            let f = p(text, &sp);
            assert_eq!(f.to_string(), text);
        }
        // unicode minus accepted on input
        let f = parse_poly("T1 \u{2212} T2", &sp, Field::Q).unwrap();
        assert_eq!(f, p("T1 - T2", &sp));
    }

    #[test]
    fn degrevlex_vs_lex() {
        let sp = VarSpace::new(2, 0);
        // x1^2 vs x1*x2^2: degree decides under degrevlex
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 2]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        let _ = sp;
    }

    #[test]
    fn block_order_eliminates_first() {
        // block {s}: any monomial containing s beats any without
        let sp = VarSpace::new(1, 1).with_aux();
        let s = Monomial::var(sp.dim(), sp.aux_var());
        let big = Monomial(vec![5, 5, 0]);
        let order = MonomialOrder::Block(vec![sp.aux_var()]);
        assert_eq!(order.cmp(&s, &big), Ordering::Greater);
    }

    fn arb_mono(dim: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, dim).prop_map(Monomial)
    }

    proptest! {
        #[test]
        fn orders_respect_multiplication(
            a in arb_mono(5), b in arb_mono(5), c in arb_mono(5)
        ) {
            for order in [
                MonomialOrder::DegRevLex,
                MonomialOrder::Lex,
                MonomialOrder::Block(vec![0, 2]),
            ] {
                let ab = order.cmp(&a, &b);
                let acbc = order.cmp(&a.mul(&c), &b.mul(&c));
                prop_assert_eq!(ab, acbc);
                // key bytes agree with the comparison
                let ka = order.key_bytes(&a);
                let kb = order.key_bytes(&b);
                prop_assert_eq!(ka.cmp(&kb), ab);
            }
        }

        #[test]
        fn content_scales_with_monomials(m in arb_mono(7)) {
            let sp = VarSpace::new(3, 4);
            let f = p("x1*T1 + x1*T2 + x1*x2", &sp);
            let shifted = f.mul_term(&m, &Field::Q.one()).unwrap();
            let expect = f.content_monomial().unwrap().mul(&m);
            prop_assert_eq!(shifted.content_monomial().unwrap(), expect);
        }

        #[test]
        fn bidegree_additive_under_mul(i in 0u16..3, j in 0u16..3) {
            let sp = VarSpace::new(2, 2);
            let f = parse_poly("x1*T1 - x2*T2", &sp, Field::Q).unwrap();
            let m = Poly::monomial(sp.clone(), Field::Q, Monomial(vec![i, j, 0, 0]));
            let prod = f.mul(&m).unwrap();
            match (f.bidegree(), m.bidegree(), prod.bidegree()) {
                (
                    Bidegree::Homogeneous { dx: a, dt: b },
                    Bidegree::Homogeneous { dx: c, dt: d },
                    Bidegree::Homogeneous { dx: e, dt: g },
                ) => {
                    prop_assert_eq!(e, a + c);
                    prop_assert_eq!(g, b + d);
                }
                _ => prop_assert!(false, "expected bihomogeneous"),
            }
        }

        #[test]
        fn roundtrip_random(coeffs in proptest::collection::vec(-9i64..10, 1..6),
                            monos in proptest::collection::vec(arb_mono(7), 1..6)) {
            let sp = VarSpace::new(3, 4);
            let terms: Vec<_> = coeffs
                .iter()
                .zip(&monos)
                .map(|(&c, m)| (m.clone(), Field::Q.from_i64(c)))
                .collect();
            let f = Poly::from_terms(sp.clone(), Field::Q, terms);
            if !f.is_zero() {
                let text = f.to_string();
                let g = parse_poly(&text, &sp, Field::Q).unwrap();
                prop_assert_eq!(f, g);
            }
        }
    }
}
