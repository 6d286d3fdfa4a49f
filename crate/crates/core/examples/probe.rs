//! Perf probe for the heaviest oracle instances. Dev utility, not part of
//! the test suite: `cargo run --release -p starrees --example probe`.

use starrees::groebner::{buchberger_reduced, eliminate, GbLimits};
use starrees::poly::{Monomial, MonomialOrder, Poly, VarSpace};
use starrees::scalar::Field;
use std::time::Instant;

fn power_gens(t: usize, c: usize, m: u16) -> Vec<Vec<u16>> {
    // exponent vectors of total degree (t-c+1)*m with entries <= m,
    // descending lex
    let target = ((t - c + 1) as u32) * m as u32;
    let mut out = Vec::new();
    let mut cur = vec![0u16; t];
    fn rec(cur: &mut Vec<u16>, idx: usize, remaining: u32, m: u16, out: &mut Vec<Vec<u16>>) {
        if idx == cur.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = (m as u32).min(remaining) as u16;
        for e in (0..=hi).rev() {
            cur[idx] = e;
            rec(cur, idx + 1, remaining - e as u32, m, out);
        }
        cur[idx] = 0;
    }
    rec(&mut cur, 0, target, m, &mut out);
    out
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let t: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let c: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let m: u16 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(2);
    let d: u16 = args.get(4).and_then(|s| s.parse().ok()).unwrap_or(1);

    let gens = power_gens(t, c, m);
    let mu = gens.len();
    println!("t={t} c={c} m={m} d={d}: mu = {mu}");
    let field = Field::Fp(101);
    let space = VarSpace::new(t, mu);
    let aux = space.with_aux();

    let skip_oracle = std::env::var("PROBE_SKIP_ORACLE").is_ok();

    // oracle side: eliminate s from { T_gamma - s * x^(d*gamma) }
    let start = Instant::now();
    let mut oracle_in = Vec::with_capacity(mu);
    for (i, g) in gens.iter().enumerate() {
        let tvar = Poly::var(aux.clone(), field, aux.t_var(i + 1));
        let mut mono = Monomial::one(aux.dim());
        for (j, &e) in g.iter().enumerate() {
            mono.0[j] = e * d;
        }
        mono.0[aux.aux_var()] = 1;
        let gs = Poly::monomial(aux.clone(), field, mono);
        oracle_in.push(tvar.sub(&gs).unwrap());
    }
    let limits = GbLimits { max_basis: 200_000, max_degree: 200 };
    let elim: Vec<Poly> = if skip_oracle {
        Vec::new()
    } else {
        eliminate(&oracle_in, &[aux.aux_var()], limits)
            .unwrap()
            .into_iter()
            .map(|p| p.project_to(space.clone()).unwrap())
            .collect()
    };
    println!("oracle: {} gens in {:.2?}", elim.len(), start.elapsed());

    // closed-form side: linear pairs + equal-sum quadrics
    let start = Instant::now();
    let mut closed: Vec<Poly> = Vec::new();
    for i in 0..mu {
        for j in i + 1..mu {
            // theta = g_j / gcd, delta = g_i / gcd realized in x
            let gi = &gens[i];
            let gj = &gens[j];
            let mut mi = Monomial::one(space.dim());
            let mut mj = Monomial::one(space.dim());
            for k in 0..t {
                let g = gi[k].min(gj[k]);
                mi.0[k] = (gj[k] - g) * d;
                mj.0[k] = (gi[k] - g) * d;
            }
            mi.0[space.t_var(i + 1)] = 1;
            mj.0[space.t_var(j + 1)] = 1;
            let rel = Poly::monomial(space.clone(), field, mi)
                .sub(&Poly::monomial(space.clone(), field, mj))
                .unwrap();
            closed.push(rel);
        }
    }
    let n_linear = closed.len();
    // quadrics: T_a T_b - T_c T_d with equal exponent sums
    use std::collections::HashMap;
    let mut groups: HashMap<Vec<u16>, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..mu {
        for j in i..mu {
            let sum: Vec<u16> = gens[i].iter().zip(&gens[j]).map(|(a, b)| a + b).collect();
            groups.entry(sum).or_default().push((i, j));
        }
    }
    let mut n_quad = 0;
    for (_, pairs) in groups {
        for a in 0..pairs.len() {
            for b in a + 1..pairs.len() {
                let mut ma = Monomial::one(space.dim());
                ma.0[space.t_var(pairs[a].0 + 1)] += 1;
                ma.0[space.t_var(pairs[a].1 + 1)] += 1;
                let mut mb = Monomial::one(space.dim());
                mb.0[space.t_var(pairs[b].0 + 1)] += 1;
                mb.0[space.t_var(pairs[b].1 + 1)] += 1;
                let rel = Poly::monomial(space.clone(), field, ma)
                    .sub(&Poly::monomial(space.clone(), field, mb))
                    .unwrap();
                closed.push(rel);
                n_quad += 1;
            }
        }
    }
    println!("closed side: {n_linear} linear + {n_quad} quadrics");
    let gb1 = buchberger_reduced(&closed, MonomialOrder::DegRevLex, limits).unwrap();
    println!("GB(closed): {} elements in {:.2?}", gb1.basis().len(), start.elapsed());
    if skip_oracle {
        return;
    }

    let start = Instant::now();
    let gb2 = buchberger_reduced(&elim, MonomialOrder::DegRevLex, limits).unwrap();
    println!("GB(oracle): {} elements in {:.2?}", gb2.basis().len(), start.elapsed());
    println!("equal: {}", gb1.basis() == gb2.basis());
    if gb1.basis() != gb2.basis() && std::env::var("PROBE_DIFF").is_ok() {
        println!("--- closed basis:");
        for p in gb1.basis() {
            println!("  {p}");
        }
        println!("--- oracle basis:");
        for p in gb2.basis() {
            println!("  {p}");
        }
    }
}
