use super::brace::FiniteBrace;
use super::table::OpTable;
use super::AlgebraError;

/// A finite (associative, not necessarily unital or commutative) ring on
/// `0..order` with both operations stored as tables.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    order: usize,
    add: OpTable,
    mul: OpTable,
}

impl FiniteRing {
    /// Builds a ring from explicit tables, verifying the ring axioms:
    /// `(elements, add)` must be an abelian group with identity `0` and `mul`
    /// must be associative and distribute over `add` on both sides.
    pub fn new(add: OpTable, mul: OpTable) -> Result<Self, AlgebraError> {
        if add.order() != mul.order() {
            return Err(AlgebraError::TableShape);
        }
        let n = add.order();
        for a in 0..n {
            if add.get(a, 0) != a || add.get(0, a) != a {
                return Err(AlgebraError::NotARing(format!("0 is not an additive identity at {a}")));
            }
            if !(0..n).any(|b| add.get(a, b) == 0) {
                return Err(AlgebraError::NotARing(format!("{a} has no additive inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if add.get(a, b) != add.get(b, a) {
                    return Err(AlgebraError::NotARing(format!("addition not commutative at ({a},{b})")));
                }
                for c in 0..n {
                    if add.get(add.get(a, b), c) != add.get(a, add.get(b, c)) {
                        return Err(AlgebraError::NotARing(format!("addition not associative at ({a},{b},{c})")));
                    }
                    if mul.get(mul.get(a, b), c) != mul.get(a, mul.get(b, c)) {
                        return Err(AlgebraError::NotARing(format!("multiplication not associative at ({a},{b},{c})")));
                    }
                    if mul.get(a, add.get(b, c)) != add.get(mul.get(a, b), mul.get(a, c)) {
                        return Err(AlgebraError::NotARing(format!("left distributivity fails at ({a},{b},{c})")));
                    }
                    if mul.get(add.get(a, b), c) != add.get(mul.get(a, c), mul.get(b, c)) {
                        return Err(AlgebraError::NotARing(format!("right distributivity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteRing { order: n, add, mul })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    /// Closure of `set ∪ {0}` under addition. Finiteness makes the closure a
    /// subgroup, so additive inverses come for free.
    fn additive_closure(&self, set: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut stack: Vec<usize> = vec![0];
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

    /// Power chain `R ⊇ R² ⊇ …` where each term is the additive closure of the
    /// products of the previous term by the whole ring. Returns the chain up to
    /// stabilisation.
    pub fn power_chain(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.order).collect();
        let mut chain = vec![all];
        loop {
            let last = chain.last().unwrap();
            let mut products = Vec::new();
            for a in 0..self.order {
                for &b in last {
                    products.push(self.mul(a, b));
                }
            }
            let next = self.additive_closure(&products);
            if &next == last {
                break;
            }
            chain.push(next.clone());
            if next == [0] {
                break;
            }
        }
        chain
    }

    /// Whether some power of the whole ring vanishes.
    pub fn is_nilpotent(&self) -> bool {
        self.power_chain().last().unwrap() == &[0]
    }
}

/// The zero ring on `Z/n`: cyclic addition, every product zero.
pub fn zero_ring(n: usize) -> Result<FiniteRing, AlgebraError> {
    let add = OpTable::from_fn(n, |a, b| (a + b) % n)?;
    let mul = OpTable::from_fn(n, |_, _| 0)?;
    FiniteRing::new(add, mul)
}

/// The ring of polynomials `a₁x + … + a_{deg−1}x^{deg−1}` over `F_p` with
/// `x^deg = 0`. Element `i` encodes the coefficient vector of `i` in base `p`,
/// least-significant digit belonging to `x`. Nilpotent of class `deg`.
pub fn make_truncated_polynomial_ring(p: u64, deg: usize) -> Result<FiniteRing, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    if deg < 2 {
        return Err(AlgebraError::DegreeTooSmall(deg));
    }
    let coeffs = deg - 1;
    let order = (p as usize)
        .checked_pow(coeffs as u32)
        .ok_or(AlgebraError::OrderTooLarge(usize::MAX))?;
    let p = p as usize;
    let decode = |mut i: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(coeffs);
        for _ in 0..coeffs {
            v.push(i % p);
            i /= p;
        }
        v
    };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let add = OpTable::from_fn(order, |a, b| {
        let (va, vb) = (decode(a), decode(b));
        let sum: Vec<usize> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
        encode(&sum)
    })?;
    let mul = OpTable::from_fn(order, |a, b| {
        let (va, vb) = (decode(a), decode(b));
        // va[k] is the coefficient of x^{k+1}; products of degree >= deg vanish
        let mut prod = vec![0usize; coeffs];
        for (k, &ca) in va.iter().enumerate() {
            for (l, &cb) in vb.iter().enumerate() {
                let degree = k + l + 2;
                if degree < deg {
                    prod[degree - 1] = (prod[degree - 1] + ca * cb) % p;
                }
            }
        }
        encode(&prod)
    })?;
    FiniteRing::new(add, mul)
}

/// The subring `2Z/2^nZ` of `Z/2^n`: element `i` stands for the residue `2i`.
/// Nilpotent of class `n`.
pub fn even_subring(n: usize) -> Result<FiniteRing, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::ExponentTooSmall(n));
    }
    if n >= usize::BITS as usize {
        return Err(AlgebraError::OrderTooLarge(usize::MAX));
    }
    let order = 1usize << (n - 1);
    let add = OpTable::from_fn(order, |a, b| (a + b) % order)?;
    // value 2a * value 2b = 4ab = 2 * (2ab mod 2^{n-1})
    let mul = OpTable::from_fn(order, |a, b| (2 * a * b) % order)?;
    FiniteRing::new(add, mul)
}

/// Strictly upper triangular 3×3 matrices over `F_p`. The smallest family of
/// noncommutative nilpotent rings; element `a + b·p + c·p²` stands for
/// `a·e₁₂ + b·e₂₃ + c·e₁₃`.
pub fn strictly_upper_triangular_ring(p: u64) -> Result<FiniteRing, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let p = p as usize;
    let order = p
        .checked_mul(p)
        .and_then(|q| q.checked_mul(p))
        .ok_or(AlgebraError::OrderTooLarge(usize::MAX))?;
    let unpack = |i: usize| (i % p, (i / p) % p, i / (p * p));
    let pack = |a: usize, b: usize, c: usize| a + b * p + c * p * p;
    let add = OpTable::from_fn(order, |x, y| {
        let (a, b, c) = unpack(x);
        let (d, e, f) = unpack(y);
        pack((a + d) % p, (b + e) % p, (c + f) % p)
    })?;
    // e12·e23 = e13 is the only surviving product
    let mul = OpTable::from_fn(order, |x, y| {
        let (a, _, _) = unpack(x);
        let (_, e, _) = unpack(y);
        pack(0, 0, (a * e) % p)
    })?;
    FiniteRing::new(add, mul)
}

/// Rump's construction: a nilpotent ring becomes a brace under
/// `a ∘ b = a + b + a·b`.
pub fn brace_from_nilpotent_ring(ring: &FiniteRing) -> Result<FiniteBrace, AlgebraError> {
    let chain = ring.power_chain();
    let last = chain.last().unwrap();
    if last != &[0] {
        return Err(AlgebraError::RingNotNilpotent(last.len()));
    }
    let circ = OpTable::from_fn(ring.order(), |a, b| {
        ring.add(ring.add(a, b), ring.mul(a, b))
    })?;
    FiniteBrace::new(ring.add_table().clone(), circ)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
