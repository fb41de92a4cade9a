use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::cone::{cone_check, cone_product, ConeOf};
use super::NormalCategory;
use crate::error::{Error, Result};

/// A finite multiplication table on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    size: usize,
    entries: Vec<u32>,
}

impl ProductTable {
    pub fn from_fn(size: usize, mut product: impl FnMut(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let k = product(i, j);
                assert!(k < size, "product {i}·{j} = {k} leaves the table");
                entries.push(k as u32);
            }
        }
        Self { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.size + j] as usize
    }

    /// The first triple with `(ij)k ≠ i(jk)`, if any.
    pub fn associativity_violation(&self) -> Option<[usize; 3]> {
        let n = self.size;
        (0..n).into_par_iter().find_map_first(|i| {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    if self.product(ij, k) != self.product(i, self.product(j, k)) {
                        return Some([i, j, k]);
                    }
                }
            }
            None
        })
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&i| self.product(i, i) == i)
            .collect()
    }

    /// Membership table of the principal right ideals `i S¹`.
    pub fn right_ideals(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|i| {
                let mut row = vec![false; self.size];
                row[i] = true;
                for j in 0..self.size {
                    row[self.product(i, j)] = true;
                }
                row
            })
            .collect()
    }

    /// Green's 𝓡 relation read off the table.
    pub fn r_related(&self) -> Vec<Vec<bool>> {
        let ideals = self.right_ideals();
        (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| ideals[i][j] && ideals[j][i])
                    .collect()
            })
            .collect()
    }
}

impl Serialize for ProductTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[u32]> = self.entries.chunks(self.size.max(1)).collect();
        rows.serialize(serializer)
    }
}

/// For every element `x` an element `y` with `x y x = x`, or the first
/// element that has none.
pub fn check_regular(table: &ProductTable) -> std::result::Result<Vec<usize>, usize> {
    (0..table.size())
        .map(|x| {
            (0..table.size())
                .find(|&y| table.product(table.product(x, y), x) == x)
                .ok_or(x)
        })
        .collect()
}

/// The closure of a set of normal cones under the cone product, in sorted
/// order, with its product table and the results of the post-hoc audits.
#[derive(Debug, Clone, Serialize)]
pub struct ConeSemigroup<O, M> {
    pub elements: Vec<super::Cone<O, M>>,
    pub table: ProductTable,
    /// First non-associative triple, if the table has one.
    pub associativity_violation: Option<[usize; 3]>,
    /// Elements failing the compatibility check.
    pub invalid_cones: Vec<usize>,
    /// Elements that are not normal.
    pub non_normal: Vec<usize>,
}

impl<O, M> ConeSemigroup<O, M> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Closes `seeds` under [`cone_product`], failing once more than `bound`
/// elements appear.
pub fn generate_semigroup<C: NormalCategory>(
    cat: &C,
    seeds: &[ConeOf<C>],
    bound: usize,
) -> Result<ConeSemigroup<C::Object, C::Morphism>> {
    let mut elements: Vec<ConeOf<C>> = Vec::new();
    let mut index: HashMap<ConeOf<C>, usize> = HashMap::new();
    for s in seeds {
        if !index.contains_key(s) {
            index.insert(s.clone(), elements.len());
            elements.push(s.clone());
        }
    }
    let mut products: HashMap<(usize, usize), usize> = HashMap::new();
    let mut done = 0;
    while done < elements.len() {
        let current = elements.len();
        let pairs: Vec<(usize, usize)> = (0..current)
            .flat_map(|i| (0..current).map(move |j| (i, j)))
            .filter(|&(i, j)| i >= done || j >= done)
            .collect();
        let results = pairs
            .par_iter()
            .map(|&(i, j)| cone_product(cat, &elements[i], &elements[j]))
            .collect::<Result<Vec<_>>>()?;
        for (&(i, j), cone) in pairs.iter().zip(results) {
            let k = match index.get(&cone) {
                Some(&k) => k,
                None => {
                    if elements.len() >= bound {
                        return Err(Error::BoundExceeded {
                            what: "cone semigroup closure".into(),
                            needed: elements.len() as u128 + 1,
                            bound: bound as u64,
                        });
                    }
                    index.insert(cone.clone(), elements.len());
                    elements.push(cone);
                    elements.len() - 1
                }
            };
            products.insert((i, j), k);
        }
        done = current;
    }

    // canonical order
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
    let mut rank = vec![0; elements.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let table = ProductTable::from_fn(elements.len(), |i, j| rank[products[&(order[i], order[j])]]);
    let mut sorted: Vec<Option<ConeOf<C>>> = elements.into_iter().map(Some).collect();
    let elements: Vec<ConeOf<C>> = order
        .iter()
        .map(|&old| sorted[old].take().unwrap())
        .collect();

    let invalid_cones = elements
        .par_iter()
        .enumerate()
        .filter(|(_, c)| !matches!(cone_check(cat, c), Ok(true)))
        .map(|(i, _)| i)
        .collect();
    let non_normal = elements
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_normal())
        .map(|(i, _)| i)
        .collect();
    let associativity_violation = table.associativity_violation();
    Ok(ConeSemigroup {
        elements,
        table,
        associativity_violation,
        invalid_cones,
        non_normal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_zero_band_is_regular_and_associative() {
        let t = ProductTable::from_fn(3, |i, _| i);
        assert_eq!(t.associativity_violation(), None);
        assert_eq!(t.idempotents(), vec![0, 1, 2]);
        assert_eq!(check_regular(&t), Ok(vec![0, 0, 0]));
    }

    #[test]
    fn null_semigroup_with_nonzero_is_irregular() {
        // {0, a} with every product 0: a·y·a = 0 ≠ a
        let t = ProductTable::from_fn(2, |_, _| 0);
        assert_eq!(t.associativity_violation(), None);
        assert_eq!(check_regular(&t), Err(1));
    }

    #[test]
    fn subtraction_table_is_not_associative() {
        let t = ProductTable::from_fn(3, |i, j| (i + 3 - j) % 3);
        assert!(t.associativity_violation().is_some());
    }

    #[test]
    fn r_relation_on_a_right_zero_band() {
        // x y = y: every x S¹ is the whole table, so all elements are 𝓡-related
        let t = ProductTable::from_fn(2, |_, j| j);
        assert_eq!(t.r_related(), vec![vec![true, true], vec![true, true]]);
        // x y = x: x S¹ = {x}
        let t = ProductTable::from_fn(2, |i, _| i);
        assert_eq!(t.r_related(), vec![vec![true, false], vec![false, true]]);
    }

    #[test]
    fn table_serializes_as_rows() {
        let t = ProductTable::from_fn(2, |i, j| i.max(j));
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[0,1],[1,1]]");
    }
}
