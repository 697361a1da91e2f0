use super::SolutionError;

/// A map `r` on pairs over `0..n`, stored as a full `(x,y) → (u,v)` table in
/// lexicographic pair order. The table form keeps degenerate and
/// non-involutive inputs representable; the structural checks live in
/// [`solution_properties`] and [`verify_set_ybe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSolution {
    n: usize,
    map: Vec<(usize, usize)>,
}

impl SetSolution {
    pub fn new(n: usize, map: Vec<(usize, usize)>) -> Result<Self, SolutionError> {
        if map.len() != n * n {
            return Err(SolutionError::LengthMismatch {
                expected: n * n,
                got: map.len(),
            });
        }
        for &(u, v) in &map {
            for value in [u, v] {
                if value >= n {
                    return Err(SolutionError::ElementRange { value, n });
                }
            }
        }
        Ok(SetSolution { n, map })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        let mut map = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                map.push(f(x, y));
            }
        }
        SetSolution { n, map }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        self.map[x * self.n + y]
    }

    /// First component `σ_x(y)` of `r(x,y)`.
    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.r(x, y).0
    }

    /// Second component `τ_y(x)` of `r(x,y)`.
    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.r(x, y).1
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n * self.n];
        for &(u, v) in &self.map {
            let idx = u * self.n + v;
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
        }
        true
    }

    /// The row `y ↦ σ_x(y)`.
    pub fn sigma_row(&self, x: usize) -> Vec<usize> {
        (0..self.n).map(|y| self.sigma(x, y)).collect()
    }

    /// The row `x ↦ τ_y(x)`.
    pub fn tau_row(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.tau(y, x)).collect()
    }

    pub(crate) fn braid_holds(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // r1 r2 r1, innermost applied first
                    let (a, b) = self.r(x, y);
                    let (c, d) = self.r(b, z);
                    let (e, f) = self.r(a, c);
                    let lhs = (e, f, d);

                    let (a2, b2) = self.r(y, z);
                    let (c2, d2) = self.r(x, a2);
                    let (e2, f2) = self.r(d2, b2);
                    let rhs = (c2, e2, f2);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Structural flags of a pair map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionProperties {
    pub braid_ok: bool,
    pub involutive: bool,
    pub left_nondeg: bool,
    pub right_nondeg: bool,
}

impl SolutionProperties {
    pub fn is_involutive_nondegenerate_solution(&self) -> bool {
        self.braid_ok && self.involutive && self.left_nondeg && self.right_nondeg
    }
}

/// Checks the braid relation `r₁r₂r₁ = r₂r₁r₂` on all triples, with
/// `r₁ = r×id` and `r₂ = id×r`. The map must be a bijection on pairs.
pub fn verify_set_ybe(s: &SetSolution) -> Result<bool, SolutionError> {
    if !s.is_bijective() {
        return Err(SolutionError::NotBijective);
    }
    Ok(s.braid_holds())
}

/// Computes all four structural flags: the braid relation, involutivity
/// (`r∘r = id` on pairs), and left/right non-degeneracy (bijectivity of every
/// `τ_y` and every `σ_x`).
pub fn solution_properties(s: &SetSolution) -> SolutionProperties {
    let n = s.n();
    let involutive = (0..n).all(|x| {
        (0..n).all(|y| {
            let (u, v) = s.r(x, y);
            s.r(u, v) == (x, y)
        })
    });
    let is_perm = |row: &[usize]| {
        let mut seen = vec![false; n];
        row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    };
    let right_nondeg = (0..n).all(|x| is_perm(&s.sigma_row(x)));
    let left_nondeg = (0..n).all(|y| is_perm(&s.tau_row(y)));
    SolutionProperties {
        braid_ok: s.braid_holds(),
        involutive,
        left_nondeg,
        right_nondeg,
    }
}

/// Restricts a solution to a subset closed under `r`, re-indexing by the
/// sorted subset order. Reports the first escaping pair if the subset is not
/// closed.
pub fn restrict_solution(s: &SetSolution, subset: &[usize]) -> Result<SetSolution, SolutionError> {
    let n = s.n();
    let mut members = subset.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() != subset.len() || members.iter().any(|&x| x >= n) {
        return Err(SolutionError::SetMismatch);
    }
    let mut local = vec![usize::MAX; n];
    for (i, &g) in members.iter().enumerate() {
        local[g] = i;
    }
    let m = members.len();
    let mut map = Vec::with_capacity(m * m);
    for &x in &members {
        for &y in &members {
            let (u, v) = s.r(x, y);
            if local[u] == usize::MAX || local[v] == usize::MAX {
                return Err(SolutionError::NotClosed { x, y, image: (u, v) });
            }
            map.push((local[u], local[v]));
        }
    }
    SetSolution::new(m, map)
}

/// A labelled partition of a subset of `0..n` into pairwise disjoint classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedSet {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl PartitionedSet {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self, SolutionError> {
        let mut seen = vec![false; n];
        let mut sorted = Vec::with_capacity(classes.len());
        for class in classes {
            let mut class = class;
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                if x >= n {
                    return Err(SolutionError::ElementRange { value: x, n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(SolutionError::ClassesNotDisjoint);
                }
            }
            sorted.push(class);
        }
        Ok(PartitionedSet { n, classes: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Whether the classes cover all of `0..n`.
    pub fn covers_all(&self) -> bool {
        self.classes.iter().map(|c| c.len()).sum::<usize>() == self.n
    }

    /// Class index per element; `None` for uncovered elements.
    pub fn class_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &x in class {
                out[x] = Some(i);
            }
        }
        out
    }
}
