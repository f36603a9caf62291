use std::collections::HashMap;
use std::sync::Arc;

use crate::coeff::Coefficient;

use super::AlgebraError;

/// Generator alphabet with central pairwise commutators.
///
/// Generators are stored in canonical order and referred to by index. Only
/// the commutators `[g_i, g_j]` with `i > j` are stored; the rest follow by
/// antisymmetry.
#[derive(Debug)]
pub struct AlgebraTable {
    name: String,
    generators: Vec<String>,
    index: HashMap<String, u8>,
    comm: Vec<Vec<Coefficient>>,
    adjoint: Vec<u8>,
    annihilator: Vec<bool>,
}

impl PartialEq for AlgebraTable {
    fn eq(&self, o: &Self) -> bool {
        std::ptr::eq(self, o) || (self.name == o.name && self.generators == o.generators)
    }
}

impl Eq for AlgebraTable {}

impl AlgebraTable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator_name(&self, g: u8) -> &str {
        &self.generators[g as usize]
    }

    pub fn lookup(&self, name: &str) -> Result<u8, AlgebraError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownGenerator { algebra: self.name.clone(), name: name.to_string() })
    }

    /// `[g_i, g_j]`.
    pub fn commutator(&self, i: u8, j: u8) -> Coefficient {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Coefficient::zero(),
            std::cmp::Ordering::Greater => self.comm[i as usize][j as usize].clone(),
            std::cmp::Ordering::Less => -&self.comm[j as usize][i as usize],
        }
    }

    /// Borrowed `[g_i, g_j]` for `i > j`.
    pub(crate) fn lowered(&self, i: u8, j: u8) -> &Coefficient {
        &self.comm[i as usize][j as usize]
    }

    pub fn adjoint_of(&self, g: u8) -> u8 {
        self.adjoint[g as usize]
    }

    pub fn is_self_adjoint(&self, g: u8) -> bool {
        self.adjoint[g as usize] == g
    }

    pub fn has_vacuum(&self) -> bool {
        self.annihilator.iter().any(|a| *a)
    }

    pub fn is_annihilator(&self, g: u8) -> bool {
        self.annihilator[g as usize]
    }

    pub fn is_creator(&self, g: u8) -> bool {
        self.has_vacuum() && !self.annihilator[g as usize]
    }
}

/// Builder for [`AlgebraTable`]; validation happens in [`AlgebraBuilder::build`].
#[derive(Debug, Clone)]
pub struct AlgebraBuilder {
    name: String,
    generators: Vec<String>,
    comm: Vec<(String, String, Coefficient)>,
    adjoints: Vec<(String, String)>,
    annihilators: Vec<String>,
}

impl AlgebraBuilder {
    pub fn new(name: &str) -> Self {
        AlgebraBuilder {
            name: name.to_string(),
            generators: Vec::new(),
            comm: Vec::new(),
            adjoints: Vec::new(),
            annihilators: Vec::new(),
        }
    }

    /// Appends a generator; insertion order is the canonical order.
    pub fn generator(mut self, name: &str) -> Self {
        self.generators.push(name.to_string());
        self
    }

    /// Declares `[a, b] = c`. Unset pairs commute.
    pub fn commutator(mut self, a: &str, b: &str, c: Coefficient) -> Self {
        self.comm.push((a.to_string(), b.to_string(), c));
        self
    }

    /// Pairs `a` and `b` as mutual adjoints. Unpaired generators are
    /// self-adjoint.
    pub fn adjoint(mut self, a: &str, b: &str) -> Self {
        self.adjoints.push((a.to_string(), b.to_string()));
        self
    }

    pub fn annihilator(mut self, a: &str) -> Self {
        self.annihilators.push(a.to_string());
        self
    }

    pub fn build(self) -> Result<Arc<AlgebraTable>, AlgebraError> {
        let invalid = |msg: String| AlgebraError::InvalidAlgebra { algebra: self.name.clone(), reason: msg };
        let n = self.generators.len();
        if n > u8::MAX as usize {
            return Err(invalid("too many generators".into()));
        }
        let mut index = HashMap::new();
        for (k, g) in self.generators.iter().enumerate() {
            if index.insert(g.clone(), k as u8).is_some() {
                return Err(invalid(format!("duplicate generator `{g}`")));
            }
        }
        let find = |g: &str| {
            index.get(g).copied().ok_or_else(|| AlgebraError::UnknownGenerator {
                algebra: self.name.clone(),
                name: g.to_string(),
            })
        };
        let mut comm: Vec<Vec<Option<Coefficient>>> = (0..n).map(|i| vec![None; i]).collect();
        for (a, b, c) in &self.comm {
            let (i, j) = (find(a)?, find(b)?);
            if i == j {
                if !c.is_zero() {
                    return Err(invalid(format!("[{a},{a}] must vanish")));
                }
                continue;
            }
            let (hi, lo, v) = if i > j { (i, j, c.clone()) } else { (j, i, -c) };
            let slot = &mut comm[hi as usize][lo as usize];
            if let Some(old) = slot {
                if *old != v {
                    return Err(invalid(format!("conflicting values for [{a},{b}]")));
                }
            }
            *slot = Some(v);
        }
        let comm: Vec<Vec<Coefficient>> =
            comm.into_iter().map(|row| row.into_iter().map(|c| c.unwrap_or_else(Coefficient::zero)).collect()).collect();

        let mut adjoint: Vec<Option<u8>> = vec![None; n];
        for (a, b) in &self.adjoints {
            let (i, j) = (find(a)?, find(b)?);
            for (x, y) in [(i, j), (j, i)] {
                match adjoint[x as usize] {
                    Some(z) if z != y => {
                        return Err(invalid(format!("adjoint of `{}` declared twice", self.generators[x as usize])))
                    }
                    _ => adjoint[x as usize] = Some(y),
                }
            }
        }
        let adjoint: Vec<u8> = adjoint.into_iter().enumerate().map(|(k, a)| a.unwrap_or(k as u8)).collect();

        let mut annihilator = vec![false; n];
        for a in &self.annihilators {
            annihilator[find(a)? as usize] = true;
        }

        let table = AlgebraTable {
            name: self.name.clone(),
            generators: self.generators.clone(),
            index,
            comm,
            adjoint,
            annihilator,
        };

        // [g,h]^dagger = [h^dagger, g^dagger]
        for i in 0..n as u8 {
            for j in 0..n as u8 {
                let lhs = table.commutator(i, j).conj();
                let rhs = table.commutator(table.adjoint_of(j), table.adjoint_of(i));
                if lhs != rhs {
                    return Err(invalid(format!(
                        "commutators are not compatible with the adjoint at ({}, {})",
                        table.generators[i as usize], table.generators[j as usize]
                    )));
                }
            }
        }
        if table.has_vacuum() {
            for g in 0..n as u8 {
                let a = table.adjoint_of(g);
                if table.is_annihilator(g) == table.is_annihilator(a) {
                    return Err(invalid(format!(
                        "`{}` must pair an annihilator with a creator",
                        table.generators[g as usize]
                    )));
                }
            }
            let last_creator = (0..n).filter(|&k| !table.annihilator[k]).max();
            let first_annihilator = (0..n).filter(|&k| table.annihilator[k]).min();
            if let (Some(c), Some(a)) = (last_creator, first_annihilator) {
                if c > a {
                    return Err(invalid("creators must precede annihilators in the canonical order".into()));
                }
            }
        }
        Ok(Arc::new(table))
    }
}
