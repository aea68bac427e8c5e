use std::collections::HashMap;
use std::fmt;

use super::AlgebraError;

/// Index of an element in a [`GammaSemigroup`], assigned by declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

/// Index of a gamma in a [`GammaSemigroup`], assigned by declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gam(pub usize);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Gam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// One `a γ b = c` line of an unvalidated table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEntry {
    pub left: String,
    pub gamma: String,
    pub right: String,
    pub result: String,
}

impl RawEntry {
    pub fn new(left: &str, gamma: &str, right: &str, result: &str) -> Self {
        Self {
            left: left.to_owned(),
            gamma: gamma.to_owned(),
            right: right.to_owned(),
            result: result.to_owned(),
        }
    }
}

/// Named element and gamma lists plus a list of table entries, as read from input.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawTable {
    pub name: String,
    pub elements: Vec<String>,
    pub gammas: Vec<String>,
    pub entries: Vec<RawEntry>,
}

/// A finite Γ-semigroup given by its total operation table `(a, γ, b) ↦ aγb`.
///
/// Construction only guarantees totality. Associativity is a separate check
/// ([`GammaSemigroup::check_associativity`]) so that broken tables can still be
/// loaded and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSemigroup {
    name: String,
    elements: Vec<String>,
    gammas: Vec<String>,
    table: Vec<Elem>,
    element_ix: HashMap<String, Elem>,
    gamma_ix: HashMap<String, Gam>,
}

/// First 5-tuple, in lexicographic index order, with `(aγb)μc ≠ aγ(bμc)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssociativityViolation {
    pub a: Elem,
    pub gamma: Gam,
    pub b: Elem,
    pub mu: Gam,
    pub c: Elem,
}

impl AssociativityViolation {
    pub fn render(&self, s: &GammaSemigroup) -> String {
        let left = s.op(s.op(self.a, self.gamma, self.b), self.mu, self.c);
        let right = s.op(self.a, self.gamma, s.op(self.b, self.mu, self.c));
        format!(
            "({a} {g} {b}) {m} {c} = {l} but {a} {g} ({b} {m} {c}) = {r}",
            a = s.element_name(self.a),
            g = s.gamma_name(self.gamma),
            b = s.element_name(self.b),
            m = s.gamma_name(self.mu),
            c = s.element_name(self.c),
            l = s.element_name(left),
            r = s.element_name(right),
        )
    }
}

impl fmt::Display for AssociativityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.a, self.gamma, self.b, self.mu, self.c
        )
    }
}

pub(crate) fn is_valid_token(tok: &str) -> bool {
    !tok.is_empty()
        && !tok
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == '=')
        && !tok.contains("->")
}

fn index_names<T: Copy>(
    kind: &'static str,
    names: &[String],
    wrap: impl Fn(usize) -> T,
) -> Result<HashMap<String, T>, AlgebraError> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if !is_valid_token(name) {
            return Err(AlgebraError::InvalidIdentifier(name.clone()));
        }
        if map.insert(name.clone(), wrap(i)).is_some() {
            return Err(AlgebraError::DuplicateIdentifier {
                kind,
                name: name.clone(),
            });
        }
    }
    Ok(map)
}

impl GammaSemigroup {
    /// Checks identifiers and totality of `raw` and builds the table.
    pub fn validate_table(raw: &RawTable) -> Result<Self, AlgebraError> {
        if raw.elements.is_empty() {
            return Err(AlgebraError::EmptyCarrier);
        }
        if raw.gammas.is_empty() {
            return Err(AlgebraError::EmptyGammaSet);
        }
        let element_ix = index_names("element", &raw.elements, Elem)?;
        let gamma_ix = index_names("gamma", &raw.gammas, Gam)?;
        let n = raw.elements.len();
        let g = raw.gammas.len();

        let lookup_elem = |name: &str| {
            element_ix
                .get(name)
                .copied()
                .ok_or_else(|| AlgebraError::UnknownIdentifier(name.to_owned()))
        };
        let mut cells: Vec<Option<Elem>> = vec![None; n * g * n];
        for entry in &raw.entries {
            let a = lookup_elem(&entry.left)?;
            let gamma = gamma_ix
                .get(entry.gamma.as_str())
                .copied()
                .ok_or_else(|| AlgebraError::UnknownIdentifier(entry.gamma.clone()))?;
            let b = lookup_elem(&entry.right)?;
            let c = lookup_elem(&entry.result)?;
            let cell = &mut cells[(a.0 * g + gamma.0) * n + b.0];
            match cell {
                Some(prev) if *prev != c => {
                    return Err(AlgebraError::DuplicateEntry {
                        a: entry.left.clone(),
                        gamma: entry.gamma.clone(),
                        b: entry.right.clone(),
                    })
                }
                _ => *cell = Some(c),
            }
        }
        let mut table = Vec::with_capacity(cells.len());
        for (ix, cell) in cells.into_iter().enumerate() {
            match cell {
                Some(c) => table.push(c),
                None => {
                    let a = ix / (g * n);
                    let gamma = (ix / n) % g;
                    let b = ix % n;
                    return Err(AlgebraError::MissingEntry {
                        a: raw.elements[a].clone(),
                        gamma: raw.gammas[gamma].clone(),
                        b: raw.elements[b].clone(),
                    });
                }
            }
        }
        Ok(Self {
            name: raw.name.clone(),
            elements: raw.elements.clone(),
            gammas: raw.gammas.clone(),
            table,
            element_ix,
            gamma_ix,
        })
    }

    /// Builds a table from a closure over indices.
    ///
    /// Panics if the names are invalid or `op` returns an out-of-range index.
    pub fn from_fn<S: Into<String>>(
        name: &str,
        elements: impl IntoIterator<Item = S>,
        gammas: impl IntoIterator<Item = S>,
        op: impl Fn(Elem, Gam, Elem) -> Elem,
    ) -> Self {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let gammas: Vec<String> = gammas.into_iter().map(Into::into).collect();
        let n = elements.len();
        let g = gammas.len();
        assert!(n > 0 && g > 0, "carrier and gamma set must be nonempty");
        let element_ix = index_names("element", &elements, Elem).expect("valid element names");
        let gamma_ix = index_names("gamma", &gammas, Gam).expect("valid gamma names");
        let mut table = Vec::with_capacity(n * g * n);
        for a in 0..n {
            for gamma in 0..g {
                for b in 0..n {
                    let c = op(Elem(a), Gam(gamma), Elem(b));
                    assert!(c.0 < n, "operation result out of range");
                    table.push(c);
                }
            }
        }
        Self {
            name: name.to_owned(),
            elements,
            gammas,
            table,
            element_ix,
            gamma_ix,
        }
    }

    /// Same table under new names. Index order is preserved.
    pub fn relabel(
        &self,
        name: &str,
        elements: Vec<String>,
        gammas: Vec<String>,
    ) -> Result<Self, AlgebraError> {
        if elements.len() != self.elements.len() || gammas.len() != self.gammas.len() {
            return Err(AlgebraError::RelabelSize);
        }
        let element_ix = index_names("element", &elements, Elem)?;
        let gamma_ix = index_names("gamma", &gammas, Gam)?;
        Ok(Self {
            name: name.to_owned(),
            elements,
            gammas,
            table: self.table.clone(),
            element_ix,
            gamma_ix,
        })
    }

    /// Appends `suffix` to every element name.
    pub fn with_element_suffix(&self, name: &str, suffix: &str) -> Self {
        let elements = self
            .elements
            .iter()
            .map(|e| format!("{e}{suffix}"))
            .collect();
        self.relabel(name, elements, self.gammas.clone())
            .expect("suffixing keeps names distinct")
    }

    /// Reconstructs the raw form, entries in `(a, γ, b)` index order.
    pub fn to_raw(&self) -> RawTable {
        let mut entries = Vec::with_capacity(self.table.len());
        for a in self.elements() {
            for gamma in self.gammas() {
                for b in self.elements() {
                    entries.push(RawEntry::new(
                        self.element_name(a),
                        self.gamma_name(gamma),
                        self.element_name(b),
                        self.element_name(self.op(a, gamma, b)),
                    ));
                }
            }
        }
        RawTable {
            name: self.name.clone(),
            elements: self.elements.clone(),
            gammas: self.gammas.clone(),
            entries,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn gamma_count(&self) -> usize {
        self.gammas.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn gamma_names(&self) -> &[String] {
        &self.gammas
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.elements.len()).map(Elem)
    }

    pub fn gammas(&self) -> impl Iterator<Item = Gam> + Clone {
        (0..self.gammas.len()).map(Gam)
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.element_ix.get(name).copied()
    }

    pub fn gamma(&self, name: &str) -> Option<Gam> {
        self.gamma_ix.get(name).copied()
    }

    pub fn element_name(&self, e: Elem) -> &str {
        &self.elements[e.0]
    }

    pub fn gamma_name(&self, g: Gam) -> &str {
        &self.gammas[g.0]
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.elements.len()
    }

    /// Resolves element names, failing on the first unknown one.
    pub fn resolve_elements<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<Elem>, AlgebraError> {
        names
            .iter()
            .map(|n| {
                self.element(n.as_ref())
                    .ok_or_else(|| AlgebraError::UnknownIdentifier(n.as_ref().to_owned()))
            })
            .collect()
    }

    /// `a γ b`.
    #[inline]
    pub fn op(&self, a: Elem, gamma: Gam, b: Elem) -> Elem {
        let n = self.elements.len();
        self.table[(a.0 * self.gammas.len() + gamma.0) * n + b.0]
    }

    /// Overwrites one cell. Used to build corrupted tables in tests and tools.
    pub fn with_cell(&self, a: Elem, gamma: Gam, b: Elem, result: Elem) -> Self {
        assert!(self.contains(a) && self.contains(b) && self.contains(result));
        let mut out = self.clone();
        let n = self.elements.len();
        out.table[(a.0 * self.gammas.len() + gamma.0) * n + b.0] = result;
        out
    }

    /// Exhaustive scan of `(aγb)μc = aγ(bμc)` in `(a, γ, b, μ, c)` order.
    pub fn check_associativity(&self) -> Result<(), AssociativityViolation> {
        for a in self.elements() {
            for gamma in self.gammas() {
                for b in self.elements() {
                    let ab = self.op(a, gamma, b);
                    for mu in self.gammas() {
                        for c in self.elements() {
                            if self.op(ab, mu, c) != self.op(a, gamma, self.op(b, mu, c)) {
                                return Err(AssociativityViolation { a, gamma, b, mu, c });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_associative(&self) -> bool {
        self.check_associativity().is_ok()
    }

    /// Whether `subset Γ subset ⊆ subset`.
    pub fn is_subsemigroup(&self, subset: &[Elem]) -> Result<bool, AlgebraError> {
        if subset.is_empty() {
            return Err(AlgebraError::EmptySubset);
        }
        let mut member = vec![false; self.size()];
        for &e in subset {
            if !self.contains(e) {
                return Err(AlgebraError::UnknownIdentifier(e.to_string()));
            }
            member[e.0] = true;
        }
        Ok(subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| self.gammas().all(|g| member[self.op(a, g, b).0]))
        }))
    }

    /// Elements `e` with `e γ a = a` for every `γ` and `a`.
    pub fn left_identities(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&e| {
                self.gammas()
                    .all(|g| self.elements().all(|a| self.op(e, g, a) == a))
            })
            .collect()
    }
}
