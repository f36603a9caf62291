use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeff::Coefficient;

use super::expr::{Expr, Word};
use super::table::AlgebraTable;
use super::AlgebraError;

/// Algebra homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct SubstMap {
    source: Arc<AlgebraTable>,
    target: Arc<AlgebraTable>,
    images: Vec<Expr>,
}

impl SubstMap {
    /// Every source generator needs an image over `target`.
    pub fn new(
        source: &Arc<AlgebraTable>,
        target: &Arc<AlgebraTable>,
        images: impl IntoIterator<Item = (String, Expr)>,
    ) -> Result<Self, AlgebraError> {
        let mut slots: Vec<Option<Expr>> = vec![None; source.len()];
        for (name, img) in images {
            let g = source.lookup(&name)?;
            if img.algebra() != target {
                return Err(AlgebraError::AlgebraMismatch {
                    left: target.name().into(),
                    right: img.algebra().name().into(),
                });
            }
            slots[g as usize] = Some(img.normal_order());
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(k, s)| s.ok_or_else(|| AlgebraError::MissingImage(source.generator_name(k as u8).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubstMap { source: source.clone(), target: target.clone(), images })
    }

    /// Like [`SubstMap::new`], filling in each missing image as the adjoint
    /// of the image of the adjoint generator.
    pub fn with_adjoints(
        source: &Arc<AlgebraTable>,
        target: &Arc<AlgebraTable>,
        images: impl IntoIterator<Item = (String, Expr)>,
    ) -> Result<Self, AlgebraError> {
        let mut given: BTreeMap<u8, Expr> = BTreeMap::new();
        for (name, img) in images {
            given.insert(source.lookup(&name)?, img);
        }
        let mut all = Vec::new();
        for g in 0..source.len() as u8 {
            let img = match given.get(&g) {
                Some(e) => e.clone(),
                None => match given.get(&source.adjoint_of(g)) {
                    Some(e) => e.adjoint(),
                    None => return Err(AlgebraError::MissingImage(source.generator_name(g).to_string())),
                },
            };
            all.push((source.generator_name(g).to_string(), img));
        }
        SubstMap::new(source, target, all)
    }

    pub fn source(&self) -> &Arc<AlgebraTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AlgebraTable> {
        &self.target
    }

    pub fn image(&self, name: &str) -> Result<&Expr, AlgebraError> {
        Ok(&self.images[self.source.lookup(name)? as usize])
    }

    /// `other ∘ self`: first this map, then `other`.
    pub fn then(&self, other: &SubstMap) -> Result<SubstMap, AlgebraError> {
        let images = (0..self.source.len() as u8)
            .map(|g| {
                let img = substitute(&self.images[g as usize], other)?;
                Ok((self.source.generator_name(g).to_string(), img))
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        SubstMap::new(&self.source, &other.target, images)
    }

    /// Applies a coefficient substitution to every image.
    pub fn map_images(
        &self,
        mut f: impl FnMut(&Expr) -> Result<Expr, AlgebraError>,
    ) -> Result<SubstMap, AlgebraError> {
        let images = self.images.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        Ok(SubstMap { source: self.source.clone(), target: self.target.clone(), images })
    }
}

/// Homomorphic image of `e`, normal-ordered over the target algebra.
pub fn substitute(e: &Expr, m: &SubstMap) -> Result<Expr, AlgebraError> {
    if e.algebra() != &m.source {
        return Err(AlgebraError::AlgebraMismatch { left: m.source.name().into(), right: e.algebra().name().into() });
    }
    let mut acc = Expr::zero(&m.target);
    let mut cache: BTreeMap<Vec<u8>, Expr> = BTreeMap::new();
    for (w, c) in e.terms() {
        let img = word_image(w, m, &mut cache);
        acc = acc.checked_add(&img.scale(c))?;
    }
    Ok(acc.normal_order())
}

/// Image of a word, built left to right from cached prefixes.
fn word_image(w: &Word, m: &SubstMap, cache: &mut BTreeMap<Vec<u8>, Expr>) -> Expr {
    let letters = w.letters();
    let mut k = letters.len();
    while k > 0 && !cache.contains_key(&letters[..k]) {
        k -= 1;
    }
    let mut acc = if k == 0 { Expr::scalar(&m.target, Coefficient::one()) } else { cache[&letters[..k]].clone() };
    for j in k..letters.len() {
        acc = (&acc * &m.images[letters[j] as usize]).normal_order();
        cache.insert(letters[..=j].to_vec(), acc.clone());
    }
    acc
}
