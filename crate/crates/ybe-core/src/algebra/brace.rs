use std::fmt;

use super::table::OpTable;
use super::AlgebraError;

/// Which brace axiom a table pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraceAxiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    CircAssociative,
    CircIdentity,
    CircInverse,
    Compatibility,
}

/// First failing triple for one axiom family. Unary axioms put the offending
/// element first and zero-fill the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: BraceAxiom,
    pub witness: (usize, usize, usize),
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at {:?}", self.axiom, self.witness)
    }
}

/// Outcome of checking the brace axioms on a pair of tables.
#[derive(Debug, Clone)]
pub struct BraceCheck {
    pub is_brace: bool,
    pub violations: Vec<AxiomViolation>,
}

/// Checks whether `(add, circ)` defines a left brace: `(A,+)` abelian group
/// with identity 0, `(A,∘)` a group with identity 0, and
/// `a∘(b+c) + a = a∘b + a∘c` for all triples. Records the first failing
/// triple per axiom family.
pub fn verify_brace(add: &OpTable, circ: &OpTable) -> Result<BraceCheck, AlgebraError> {
    if add.order() != circ.order() {
        return Err(AlgebraError::TableShape);
    }
    let n = add.order();
    let mut violations = Vec::new();
    let mut record = |axiom: BraceAxiom, witness: (usize, usize, usize), seen: &mut bool| {
        if !*seen {
            violations.push(AxiomViolation { axiom, witness });
            *seen = true;
        }
    };

    let (mut aid, mut ainv, mut cid, mut cinv) = (false, false, false, false);
    for a in 0..n {
        if add.get(a, 0) != a || add.get(0, a) != a {
            record(BraceAxiom::AddIdentity, (a, 0, 0), &mut aid);
        }
        if !(0..n).any(|b| add.get(a, b) == 0) {
            record(BraceAxiom::AddInverse, (a, 0, 0), &mut ainv);
        }
        if circ.get(a, 0) != a || circ.get(0, a) != a {
            record(BraceAxiom::CircIdentity, (a, 0, 0), &mut cid);
        }
        if !(0..n).any(|b| circ.get(a, b) == 0 && circ.get(b, a) == 0) {
            record(BraceAxiom::CircInverse, (a, 0, 0), &mut cinv);
        }
    }

    let (mut acom, mut aass, mut cass, mut comp) = (false, false, false, false);
    'outer: for a in 0..n {
        for b in 0..n {
            if add.get(a, b) != add.get(b, a) {
                record(BraceAxiom::AddCommutative, (a, b, 0), &mut acom);
            }
            for c in 0..n {
                if add.get(add.get(a, b), c) != add.get(a, add.get(b, c)) {
                    record(BraceAxiom::AddAssociative, (a, b, c), &mut aass);
                }
                if circ.get(circ.get(a, b), c) != circ.get(a, circ.get(b, c)) {
                    record(BraceAxiom::CircAssociative, (a, b, c), &mut cass);
                }
                if add.get(circ.get(a, add.get(b, c)), a)
                    != add.get(circ.get(a, b), circ.get(a, c))
                {
                    record(BraceAxiom::Compatibility, (a, b, c), &mut comp);
                }
                if acom && aass && cass && comp {
                    break 'outer;
                }
            }
        }
    }

    Ok(BraceCheck {
        is_brace: violations.is_empty(),
        violations,
    })
}

/// Checks the skew brace axioms: both `(G,+)` and `(G,∘)` are groups with
/// identity 0 (addition need not be commutative) and
/// `a∘(b+c) = a∘b + (−a) + a∘c` for all triples.
pub fn verify_skew_brace(add: &OpTable, circ: &OpTable) -> Result<bool, AlgebraError> {
    if add.order() != circ.order() {
        return Err(AlgebraError::TableShape);
    }
    let n = add.order();
    let mut neg = Vec::with_capacity(n);
    for a in 0..n {
        if add.get(a, 0) != a || add.get(0, a) != a || circ.get(a, 0) != a || circ.get(0, a) != a {
            return Ok(false);
        }
        match (0..n).find(|&b| add.get(a, b) == 0 && add.get(b, a) == 0) {
            Some(b) => neg.push(b),
            None => return Ok(false),
        }
        if !(0..n).any(|b| circ.get(a, b) == 0 && circ.get(b, a) == 0) {
            return Ok(false);
        }
    }
    for (a, &minus_a) in neg.iter().enumerate() {
        for b in 0..n {
            for c in 0..n {
                if add.get(add.get(a, b), c) != add.get(a, add.get(b, c)) {
                    return Ok(false);
                }
                if circ.get(circ.get(a, b), c) != circ.get(a, circ.get(b, c)) {
                    return Ok(false);
                }
                let lhs = circ.get(a, add.get(b, c));
                let rhs = add.get(add.get(circ.get(a, b), minus_a), circ.get(a, c));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A finite left brace: an abelian group `(A,+)` and a group `(A,∘)` on the
/// same elements, sharing the identity 0 and compatible via
/// `a∘(b+c) + a = a∘b + a∘c`. Inverse tables are cached at construction.
#[derive(Debug, Clone)]
pub struct FiniteBrace {
    order: usize,
    add: OpTable,
    circ: OpTable,
    neg: Vec<usize>,
    circ_inv: Vec<usize>,
}

impl FiniteBrace {
    pub fn new(add: OpTable, circ: OpTable) -> Result<Self, AlgebraError> {
        let check = verify_brace(&add, &circ)?;
        if !check.is_brace {
            return Err(AlgebraError::NotABrace(
                check.violations.len(),
                check.violations[0],
            ));
        }
        let n = add.order();
        let neg = (0..n)
            .map(|a| (0..n).find(|&b| add.get(a, b) == 0).unwrap())
            .collect();
        let circ_inv = (0..n)
            .map(|a| (0..n).find(|&b| circ.get(a, b) == 0).unwrap())
            .collect();
        Ok(FiniteBrace {
            order: n,
            add,
            circ,
            neg,
            circ_inv,
        })
    }

    /// The trivial brace on `Z/n`: `a∘b = a+b`.
    pub fn trivial(n: usize) -> Result<Self, AlgebraError> {
        let add = OpTable::from_fn(n, |a, b| (a + b) % n)?;
        FiniteBrace::new(add.clone(), add)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.get(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.get(a, self.neg[b])
    }

    pub fn circ_inv(&self, a: usize) -> usize {
        self.circ_inv[a]
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn circ_table(&self) -> &OpTable {
        &self.circ
    }

    /// Star product `a·b = a∘b − a − b`. In a brace built from a nilpotent
    /// ring this recovers the ring multiplication.
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.sub(self.sub(self.circ(a, b), a), b)
    }

    /// Closure of `set ∪ {0}` under addition.
    pub fn additive_closure(&self, set: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut stack = vec![0usize];
        for &s in set {
            if !member[s] {
                member[s] = true;
                stack.push(s);
            }
        }
        while let Some(a) = stack.pop() {
            let members: Vec<usize> = (0..self.order).filter(|&b| member[b]).collect();
            for b in members {
                let c = self.add(a, b);
                if !member[c] {
                    member[c] = true;
                    stack.push(c);
                }
            }
        }
        (0..self.order).filter(|&a| member[a]).collect()
    }

    /// The smallest subset containing `x` and closed under both `+` and `∘`;
    /// inverses come free from finiteness. This is the one-generator sub-brace.
    pub fn generated_subbrace(&self, x: usize) -> Result<Vec<usize>, AlgebraError> {
        if x >= self.order {
            return Err(AlgebraError::ElementRange {
                element: x,
                order: self.order,
            });
        }
        let mut member = vec![false; self.order];
        member[x] = true;
        let mut changed = true;
        while changed {
            changed = false;
            let members: Vec<usize> = (0..self.order).filter(|&a| member[a]).collect();
            for &a in &members {
                for &b in &members {
                    for c in [self.add(a, b), self.circ(a, b)] {
                        if !member[c] {
                            member[c] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        Ok((0..self.order).filter(|&a| member[a]).collect())
    }

    /// Re-indexes a subset that is closed under `+` and `∘` as a standalone
    /// brace. Fails if the subset is not closed.
    pub fn sub_brace(&self, members: &[usize]) -> Result<FiniteBrace, AlgebraError> {
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in members.iter().enumerate() {
            if g >= self.order {
                return Err(AlgebraError::ElementRange {
                    element: g,
                    order: self.order,
                });
            }
            local[g] = i;
        }
        let m = members.len();
        let project = |table: &dyn Fn(usize, usize) -> usize| -> Result<OpTable, AlgebraError> {
            OpTable::from_fn(m, |a, b| {
                let v = table(members[a], members[b]);
                local[v]
            })
        };
        let add = project(&|a, b| self.add(a, b)).map_err(|_| AlgebraError::TableShape)?;
        let circ = project(&|a, b| self.circ(a, b)).map_err(|_| AlgebraError::TableShape)?;
        FiniteBrace::new(add, circ)
    }
}

/// Star product as a free function, mirroring the other operations.
pub fn star_product(brace: &FiniteBrace, a: usize, b: usize) -> Result<usize, AlgebraError> {
    let n = brace.order();
    for e in [a, b] {
        if e >= n {
            return Err(AlgebraError::ElementRange { element: e, order: n });
        }
    }
    Ok(brace.star(a, b))
}
