//! Gröbner bases over the rationals via Buchberger's algorithm, with
//! term orders parametrized by a variable ranking. The bases returned
//! are reduced and monic, so they are canonical for the given order —
//! two ideals are equal exactly when their reduced bases coincide.

use std::cmp::Ordering;

use crate::exactalg::{ExactAlgError, MultiPoly, Rational, VarSet};

/// Monomial comparison family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Pure lexicographic.
    Lex,
}

/// A term order: a comparison family plus a ranking of the variables
/// from most significant to least.
#[derive(Debug, Clone)]
pub struct TermOrder {
    kind: OrderKind,
    /// Indices into the exponent vector, most significant first.
    ranking: Vec<usize>,
    vars: VarSet,
}

impl TermOrder {
    /// Builds an order over `vars` ranking the named variables from most
    /// significant to least; every variable must appear exactly once.
    pub fn new(kind: OrderKind, vars: &VarSet, ranked: &[&str]) -> Result<TermOrder, ExactAlgError> {
        if ranked.len() != vars.len() {
            return Err(ExactAlgError::InvalidVarSet(format!(
                "term order ranks {} variables but the set has {}",
                ranked.len(),
                vars.len()
            )));
        }
        let mut ranking = Vec::with_capacity(ranked.len());
        let mut seen = vec![false; vars.len()];
        for name in ranked {
            let idx = vars
                .index_of(name)
                .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
            if seen[idx] {
                return Err(ExactAlgError::InvalidVarSet(format!(
                    "variable `{name}` ranked twice"
                )));
            }
            seen[idx] = true;
            ranking.push(idx);
        }
        Ok(TermOrder {
            kind,
            ranking,
            vars: vars.clone(),
        })
    }

    pub fn degrevlex(vars: &VarSet, ranked: &[&str]) -> Result<TermOrder, ExactAlgError> {
        TermOrder::new(OrderKind::DegRevLex, vars, ranked)
    }

    pub fn lex(vars: &VarSet, ranked: &[&str]) -> Result<TermOrder, ExactAlgError> {
        TermOrder::new(OrderKind::Lex, vars, ranked)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Human-readable description, e.g. `degrevlex(a > b > c > d)`.
    pub fn describe(&self) -> String {
        let kind = match self.kind {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::Lex => "lex",
        };
        let ranked: Vec<&str> = self.ranking.iter().map(|&i| self.vars.name(i)).collect();
        format!("{kind}({})", ranked.join(" > "))
    }

    /// Compares two exponent vectors.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.ranking {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // reverse lex tie-break: scan from least significant;
                // at the first difference the *smaller* exponent wins
                for &i in self.ranking.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// The leading exponent vector and coefficient of a nonzero polynomial.
pub fn leading_term(p: &MultiPoly, order: &TermOrder) -> (Vec<u32>, Rational) {
    p.iter_terms()
        .max_by(|(e1, _), (e2, _)| order.cmp(e1, e2))
        .map(|(e, c)| (e.to_vec(), c.clone()))
        .expect("leading term of the zero polynomial")
}

fn monomial_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn monomial_quotient(b: &[u32], a: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn monomial_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn is_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// The remainder of `f` on division by `basis` under `order`: no term of
/// the result is divisible by any basis leading term.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: &TermOrder) -> MultiPoly {
    let vars = order.vars();
    let leads: Vec<(Vec<u32>, Rational)> =
        basis.iter().map(|g| leading_term(g, order)).collect();
    let mut p = f.clone();
    let mut remainder = MultiPoly::zero(vars);
    while !p.is_zero() {
        let (exp, coeff) = leading_term(&p, order);
        match leads.iter().position(|(le, _)| monomial_divides(le, &exp)) {
            Some(i) => {
                let factor = MultiPoly::term(
                    vars,
                    &coeff / &leads[i].1,
                    &monomial_quotient(&exp, &leads[i].0),
                );
                p = p.sub(&factor.mul(&basis[i]));
            }
            None => {
                let term = MultiPoly::term(vars, coeff, &exp);
                remainder = remainder.add(&term);
                p = p.sub(&term);
            }
        }
    }
    remainder
}

/// The reduced, monic Gröbner basis of the ideal generated by `gens`,
/// sorted by descending leading term. Canonical: equal ideals yield
/// equal bases.
pub fn groebner_basis(gens: &[MultiPoly], order: &TermOrder) -> Vec<MultiPoly> {
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }
    for g in &basis {
        assert_eq!(
            g.vars(),
            order.vars(),
            "generators must live in the order's variable set"
        );
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (li, ci) = leading_term(&basis[i], order);
        let (lj, cj) = leading_term(&basis[j], order);
        // Buchberger's first criterion: coprime leading monomials
        if is_coprime(&li, &lj) {
            continue;
        }
        let lcm = monomial_lcm(&li, &lj);
        let vars = order.vars();
        let one = Rational::from_integer(1.into());
        let mi = MultiPoly::term(vars, &one / ci, &monomial_quotient(&lcm, &li));
        let mj = MultiPoly::term(vars, &one / cj, &monomial_quotient(&lcm, &lj));
        let s = mi.mul(&basis[i]).sub(&mj.mul(&basis[j]));
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let new_index = basis.len();
            pairs.extend((0..new_index).map(|k| (k, new_index)));
            basis.push(r);
        }
    }
    reduce_basis(basis, order)
}

/// Minimizes and tail-reduces a Gröbner basis, returning it monic and
/// sorted by descending leading term.
fn reduce_basis(mut basis: Vec<MultiPoly>, order: &TermOrder) -> Vec<MultiPoly> {
    // minimize: drop any element whose leading term another's divides
    let mut keep: Vec<MultiPoly> = Vec::new();
    let leads: Vec<Vec<u32>> = basis
        .iter()
        .map(|g| leading_term(g, order).0)
        .collect();
    for (i, g) in basis.iter().enumerate() {
        let dominated = leads
            .iter()
            .enumerate()
            .any(|(j, lj)| j != i && monomial_divides(lj, &leads[i]) && (leads[i] != *lj || j < i));
        if !dominated {
            keep.push(g.clone());
        }
    }
    basis = keep;
    // tail-reduce each element against the others and normalize
    let mut reduced: Vec<MultiPoly> = Vec::new();
    for i in 0..basis.len() {
        let others: Vec<MultiPoly> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&basis[i], &others, order);
        if !r.is_zero() {
            let (_, lc) = leading_term(&r, order);
            reduced.push(r.scale(&(Rational::from_integer(1.into()) / lc)));
        }
    }
    reduced.sort_by(|a, b| {
        let la = leading_term(a, order).0;
        let lb = leading_term(b, order).0;
        order.cmp(&lb, &la)
    });
    reduced
}

/// Ideal membership: `f` reduces to zero against the basis.
pub fn contains(basis: &[MultiPoly], f: &MultiPoly, order: &TermOrder) -> bool {
    normal_form(f, basis, order).is_zero()
}

/// Whether two generating sets span the same ideal, decided by mutual
/// membership against their reduced bases.
pub fn ideal_equal(gens1: &[MultiPoly], gens2: &[MultiPoly], order: &TermOrder) -> bool {
    let b1 = groebner_basis(gens1, order);
    let b2 = groebner_basis(gens2, order);
    gens2.iter().all(|f| contains(&b1, f, order))
        && gens1.iter().all(|f| contains(&b2, f, order))
}

/// The minimal monomial generators of the initial ideal of a Gröbner
/// basis.
pub fn initial_ideal(basis: &[MultiPoly], order: &TermOrder) -> Vec<Vec<u32>> {
    let mut leads: Vec<Vec<u32>> = basis
        .iter()
        .map(|g| leading_term(g, order).0)
        .collect();
    leads.sort();
    leads.dedup();
    leads
        .iter()
        .filter(|m| {
            let m = m.as_slice();
            !leads
                .iter()
                .any(|n| n.as_slice() != m && monomial_divides(n, m))
        })
        .cloned()
        .collect()
}

/// Renders an exponent vector as a monomial string over `vars`.
pub fn monomial_string(vars: &VarSet, exp: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}
