use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::gb::field::FieldSpec;
use crate::gb::poly::{Grevlex, Polynomial};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A homogeneous Gröbner basis complete for all S-pairs up to `truncation_degree`.
#[derive(Debug, Clone)]
pub struct GBasis {
    ring: Ring,
    field: FieldSpec,
    gens: Vec<Polynomial>,
    truncation_degree: u32,
}

/// Quotients and remainder of multivariate division, `f = sum q_i g_i + r`.
#[derive(Debug, Clone)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Input(usize),
    Pair(usize, usize),
}

fn check_inputs(gens: &[Polynomial]) -> Result<(Ring, FieldSpec)> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Domain("empty generator list".into()))?;
    for g in gens {
        g.check_compatible(first)?;
        if g.is_zero() {
            return Err(Error::Domain("zero generator".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::Domain(format!("inhomogeneous generator {g}")));
        }
    }
    Ok((first.ring().clone(), first.field()))
}

fn degree_u32(d: u64) -> u32 {
    d.min(u32::MAX as u64) as u32
}

/// Truncated homogeneous Buchberger with the normal selection strategy.
pub fn buchberger_truncated(gens: &[Polynomial], dmax: u32) -> Result<GBasis> {
    let (ring, field) = check_inputs(gens)?;
    let top = gens.iter().map(Polynomial::degree).max().unwrap_or(0);
    if top > dmax as u64 {
        return Err(Error::Truncation {
            degree: degree_u32(top),
            limit: dmax,
        });
    }
    let mut basis = GBasis {
        ring,
        field,
        gens: Vec::new(),
        truncation_degree: dmax,
    };
    let mut queue = BinaryHeap::new();
    let mut seq = 0u64;
    for (k, g) in gens.iter().enumerate() {
        queue.push(Reverse((g.degree(), seq, Task::Input(k))));
        seq += 1;
    }
    while let Some(Reverse((_, _, task))) = queue.pop() {
        let candidate = match task {
            Task::Input(k) => gens[k].clone(),
            Task::Pair(i, j) => basis.s_polynomial(i, j)?,
        };
        let h = basis.reduce(&candidate, None)?;
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let lead = h.leading_monomial().expect("nonzero").clone();
        let idx = basis.gens.len();
        for (i, g) in basis.gens.iter().enumerate() {
            let other = g.leading_monomial().expect("nonzero");
            if other.gcd(&lead).is_one() {
                continue;
            }
            let d = other.lcm(&lead).degree();
            if d <= dmax as u64 {
                queue.push(Reverse((d, seq, Task::Pair(i, idx))));
                seq += 1;
            }
        }
        basis.gens.push(h);
    }
    Ok(basis)
}

impl GBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    /// Number of basis elements of total degree `d`.
    pub fn count_of_degree(&self, d: u64) -> usize {
        self.gens.iter().filter(|g| g.degree() == d).count()
    }

    fn s_polynomial(&self, i: usize, j: usize) -> Result<Polynomial> {
        let (a, b) = (&self.gens[i], &self.gens[j]);
        let (la, lb) = (
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        );
        let l = la.lcm(lb);
        let left = a.mul_term(&l.div(la).expect("lcm"), 1)?;
        let right = b.mul_term(&l.div(lb).expect("lcm"), 1)?;
        left.sub(&right)
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        self.gens
            .iter()
            .position(|g| g.leading_monomial().expect("nonzero").divides(m))
    }

    fn reduce(
        &self,
        f: &Polynomial,
        mut quotients: Option<&mut Vec<BTreeMap<Grevlex, u32>>>,
    ) -> Result<Polynomial> {
        let p = self.field;
        let mut work = f.to_map();
        let mut rem = BTreeMap::new();
        while let Some((Grevlex(m), c)) = work.pop_last() {
            let Some(k) = self.find_reducer(&m) else {
                rem.insert(Grevlex(m), c);
                continue;
            };
            let g = &self.gens[k];
            let (lead, lc) = g.leading_term().expect("nonzero");
            let q = m.div(lead).expect("divisor");
            let factor = p.mul(c, p.inv(lc));
            for (t, a) in &g.terms()[1..] {
                match work.entry(Grevlex(t.mul(&q)?)) {
                    Entry::Occupied(mut e) => {
                        let v = p.sub(*e.get(), p.mul(*a, factor));
                        if v == 0 {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    Entry::Vacant(e) => {
                        e.insert(p.neg(p.mul(*a, factor)));
                    }
                }
            }
            if let Some(qs) = quotients.as_deref_mut() {
                let e = qs[k].entry(Grevlex(q)).or_insert(0);
                *e = p.add(*e, factor);
            }
        }
        Ok(Polynomial::from_map(self.ring.clone(), self.field, rem))
    }

    fn check_query(&self, f: &Polynomial) -> Result<()> {
        self.ring.check_same(f.ring())?;
        if self.field != f.field() {
            return Err(Error::Domain(format!(
                "field mismatch: GF({}) vs GF({})",
                self.field.characteristic(),
                f.field().characteristic()
            )));
        }
        if !f.is_homogeneous() {
            return Err(Error::Domain(format!("inhomogeneous polynomial {f}")));
        }
        if f.degree() > self.truncation_degree as u64 {
            return Err(Error::Truncation {
                degree: degree_u32(f.degree()),
                limit: self.truncation_degree,
            });
        }
        Ok(())
    }

    /// Remainder of `f` on division by the basis; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_query(f)?;
        self.reduce(f, None)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Division keeping the quotient of each basis element.
    pub fn divide(&self, f: &Polynomial) -> Result<Division> {
        self.check_query(f)?;
        let mut qs = vec![BTreeMap::new(); self.gens.len()];
        let remainder = self.reduce(f, Some(&mut qs))?;
        let quotients = qs
            .into_iter()
            .map(|q| Polynomial::from_map(self.ring.clone(), self.field, q))
            .collect();
        Ok(Division {
            quotients,
            remainder,
        })
    }
}

/// First partial derivatives of every generator, zeros dropped.
pub fn derivative_ideal(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for g in gens {
        if g.is_zero() {
            return Err(Error::Domain("zero generator".into()));
        }
        for i in 0..g.ring().nvars() {
            let d = g.partial(i);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// All products `g_i * g_j` with `i <= j`.
pub fn pairwise_products(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(gens.len() * (gens.len() + 1) / 2);
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            out.push(a.mul(b)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u64) -> (Ring, FieldSpec) {
        (
            Ring::new(&["x", "y", "z"]).unwrap(),
            FieldSpec::new(p).unwrap(),
        )
    }

    fn poly(r: &Ring, f: FieldSpec, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::new(
            r.clone(),
            f,
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), *c))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn squares_basis_is_itself() {
        let (r, f) = setup(7);
        let g = [
            poly(&r, f, &[(&[2, 0, 0], 1)]),
            poly(&r, f, &[(&[0, 2, 0], 1)]),
        ];
        let gb = buchberger_truncated(&g, 4).unwrap();
        assert_eq!(gb.gens().len(), 2);
        let q = poly(&r, f, &[(&[2, 0, 0], 1), (&[1, 1, 0], 1)]);
        assert_eq!(gb.normal_form(&q).unwrap().to_string(), "x*y");
        assert!(gb.contains(&g[0]).unwrap());
    }

    #[test]
    fn guards() {
        let (r, f) = setup(7);
        let g = [poly(&r, f, &[(&[2, 0, 0], 1)])];
        let gb = buchberger_truncated(&g, 3).unwrap();
        let big = poly(&r, f, &[(&[4, 0, 0], 1)]);
        assert_eq!(
            gb.normal_form(&big),
            Err(Error::Truncation {
                degree: 4,
                limit: 3
            })
        );
        let mixed = poly(&r, f, &[(&[2, 0, 0], 1), (&[0, 1, 0], 1)]);
        assert!(matches!(
            buchberger_truncated(&[mixed], 3),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            buchberger_truncated(&g, 1),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn s_pair_produces_new_element() {
        let (r, f) = setup(7);
        let g = [
            poly(&r, f, &[(&[1, 1, 0], 1)]),
            poly(&r, f, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]),
        ];
        let gb = buchberger_truncated(&g, 4).unwrap();
        // y * (x^2 + yz) - x * xy = y^2 z
        let y2z = poly(&r, f, &[(&[0, 2, 1], 1)]);
        assert!(gb.contains(&y2z).unwrap());
        assert!(!gb.contains(&poly(&r, f, &[(&[0, 2, 0], 1)])).unwrap());
    }

    #[test]
    fn division_quotients_reassemble() {
        let (r, f) = setup(7);
        let g = [
            poly(&r, f, &[(&[1, 1, 0], 1)]),
            poly(&r, f, &[(&[2, 0, 0], 1), (&[0, 1, 1], 3)]),
        ];
        let gb = buchberger_truncated(&g, 4).unwrap();
        let target = poly(&r, f, &[(&[3, 1, 0], 2), (&[1, 2, 1], 5), (&[0, 0, 4], 1)]);
        let div = gb.divide(&target).unwrap();
        let mut acc = div.remainder.clone();
        for (q, b) in div.quotients.iter().zip(gb.gens()) {
            acc = acc.add(&q.mul(b).unwrap()).unwrap();
        }
        assert_eq!(acc, target);
    }

    #[test]
    fn derivatives() {
        let (r, f) = setup(7);
        let g = poly(&r, f, &[(&[2, 1, 0], 1)]);
        let d = derivative_ideal(std::slice::from_ref(&g)).unwrap();
        assert_eq!(
            d.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            ["2*x*y", "x^2"]
        );
        let (_, f2) = setup(2);
        let g2 = poly(&r, f2, &[(&[2, 1, 0], 1)]);
        assert_eq!(derivative_ideal(&[g2]).unwrap().len(), 1);
        let linear = poly(&r, f, &[(&[1, 0, 0], 1), (&[0, 0, 1], 2)]);
        let d = derivative_ideal(&[linear]).unwrap();
        let gb = buchberger_truncated(&d, 2).unwrap();
        assert!(gb.contains(&poly(&r, f, &[(&[0, 0, 0], 1)])).unwrap());
        let zero = Polynomial::zero(r, f);
        assert!(derivative_ideal(&[zero]).is_err());
    }

    #[test]
    fn product_rule_at_two() {
        let (r, f) = setup(32003);
        let g = [
            poly(&r, f, &[(&[2, 0, 0], 1)]),
            poly(&r, f, &[(&[0, 2, 0], 1)]),
        ];
        let gb = buchberger_truncated(&g, 3).unwrap();
        for d in derivative_ideal(&pairwise_products(&g).unwrap()).unwrap() {
            assert!(gb.contains(&d).unwrap(), "{d}");
        }
    }
}
