use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::structure::{CayleyTable, Grade, GradingStructure, StructureKind};
use crate::error::{Error, Result};

/// Row data for a degree tuple `(h_1, ..., h_m)`.
///
/// For every admissible starting row `k` (the set `L`), `path(k)` is the
/// 1-based row sequence `(s_1, ..., s_{m+1})` with `s_1 = k` and each step
/// taken by the corresponding degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexData {
    paths: BTreeMap<usize, Vec<usize>>,
}

impl IndexData {
    /// The admissible starting rows, ascending.
    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.keys().copied()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.paths.contains_key(&k)
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, k: usize) -> Option<&[usize]> {
        self.paths.get(&k).map(Vec::as_slice)
    }

    /// The final row `s_{m+1}` reached from `k`.
    pub fn successor(&self, k: usize) -> Option<usize> {
        self.paths.get(&k).and_then(|p| p.last().copied())
    }

    pub fn paths(&self) -> impl Iterator<Item = (usize, &[usize])> + '_ {
        self.paths.iter().map(|(k, p)| (*k, p.as_slice()))
    }
}

/// The grading of `M_n` induced by a tuple of distinct elements, or the
/// matrix-unit grading by `MU_n`.
#[derive(Clone, Debug)]
pub struct ElementaryGrading {
    structure: GradingStructure,
    n: usize,
    tuple: Vec<Grade>,
    degrees: Vec<Vec<Grade>>,
    support: BTreeSet<Grade>,
    positions: HashMap<Grade, usize>,
    descriptor: String,
}

impl ElementaryGrading {
    /// Grading of `M_n` induced by `tuple` over a group structure.
    pub fn new(structure: GradingStructure, tuple: Vec<Grade>) -> Result<Self> {
        if !structure.is_group() {
            return Err(Error::InvalidGrading(
                "an inducing tuple needs a group; use ElementaryGrading::matrix_units".into(),
            ));
        }
        if tuple.is_empty() {
            return Err(Error::InvalidGrading("empty inducing tuple".into()));
        }
        let mut positions = HashMap::new();
        for (k, g) in tuple.iter().enumerate() {
            structure.check(g)?;
            if positions.insert(g.clone(), k + 1).is_some() {
                return Err(Error::InvalidGrading(format!(
                    "inducing tuple repeats {}",
                    structure.format_grade(g)
                )));
            }
        }
        let n = tuple.len();
        let degrees: Vec<Vec<Grade>> = tuple
            .iter()
            .map(|gi| {
                let inv = structure.inverse(gi).expect("group element has an inverse");
                tuple.iter().map(|gj| structure.mul(&inv, gj)).collect()
            })
            .collect();
        let support = degrees.iter().flatten().cloned().collect();
        let descriptor = format!(
            "custom:{}",
            tuple
                .iter()
                .map(|g| structure.format_grade(g))
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(ElementaryGrading {
            structure,
            n,
            tuple,
            degrees,
            support,
            positions,
            descriptor,
        })
    }

    /// `Z_n`-canonical grading: tuple `(1, 2, ..., n)` read mod n.
    pub fn zn(n: usize) -> Result<Self> {
        let structure = GradingStructure::cyclic(n)?;
        let tuple = (1..=n).map(|k| Grade::Elem(k % n)).collect();
        Ok(Self::new(structure, tuple)?.with_descriptor(format!("zn:{n}")))
    }

    /// `Z_p`-canonical grading, with `p` required to be prime.
    pub fn zp(p: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidGrading(format!("{p} is not prime")));
        }
        Ok(Self::zn(p)?.with_descriptor(format!("zp:{p}")))
    }

    /// `Z`-canonical grading on `M_n`: tuple `(1, 2, ..., n)`.
    pub fn integers(n: usize) -> Result<Self> {
        let tuple = (1..=n as i64).map(Grade::int).collect();
        Ok(Self::new(GradingStructure::integers(), tuple)?.with_descriptor(format!("z:{n}")))
    }

    /// The grading of `M_n` by `MU_n`: `e_ij` has degree `(i, j)`.
    pub fn matrix_units(n: usize) -> Result<Self> {
        let structure = GradingStructure::matrix_units(n)?;
        let degrees: Vec<Vec<Grade>> = (1..=n)
            .map(|i| (1..=n).map(|j| Grade::Unit(i, j)).collect())
            .collect();
        let support = degrees.iter().flatten().cloned().collect();
        Ok(ElementaryGrading {
            structure,
            n,
            tuple: Vec::new(),
            degrees,
            support,
            positions: HashMap::new(),
            descriptor: format!("mu:{n}"),
        })
    }

    /// Parses `zn:<n>`, `zp:<p>`, `z:<n>`, `mu:<n>`, or `group:<file>:<g1,...,gn>`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidGrading(format!("{spec}: {why}"));
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected <kind>:<argument>"))?;
        let size = |s: &str| -> Result<usize> {
            match s.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(bad("matrix size must be a positive integer")),
            }
        };
        match kind {
            "zn" => Self::zn(size(rest)?),
            "zp" => Self::zp(size(rest)?),
            "z" => Self::integers(size(rest)?),
            "mu" => Self::matrix_units(size(rest)?),
            "group" => {
                let (file, list) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| bad("expected group:<file>:<g1,...,gn>"))?;
                let text = std::fs::read_to_string(Path::new(file))
                    .map_err(|e| bad(&format!("cannot read {file}: {e}")))?;
                let structure = GradingStructure::finite_group(CayleyTable::parse(&text)?);
                let tuple = list
                    .split(',')
                    .map(|name| structure.grade_from_name(name.trim()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::new(structure, tuple)?.with_descriptor(spec.to_owned()))
            }
            _ => Err(bad("unknown grading kind")),
        }
    }

    pub fn with_descriptor(mut self, descriptor: String) -> Self {
        self.descriptor = descriptor;
        self
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn structure(&self) -> &GradingStructure {
        &self.structure
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The inducing tuple; empty for the matrix-unit grading.
    pub fn tuple(&self) -> &[Grade] {
        &self.tuple
    }

    pub fn is_matrix_unit_grading(&self) -> bool {
        self.structure.kind() == StructureKind::MatrixUnitSemigroup
    }

    /// Degree of `e_ij` (1-based).
    pub fn degree_of_unit(&self, i: usize, j: usize) -> Result<Grade> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(self.degrees[i - 1][j - 1].clone())
    }

    pub fn support(&self) -> &BTreeSet<Grade> {
        &self.support
    }

    pub fn in_support(&self, g: &Grade) -> bool {
        self.support.contains(g)
    }

    /// True for the identity of a group grading; `MU_n` has no neutral element.
    pub fn is_neutral(&self, g: &Grade) -> bool {
        self.structure.is_identity(g)
    }

    pub fn mul(&self, a: &Grade, b: &Grade) -> Grade {
        self.structure.mul(a, b)
    }

    /// The row reached from `row` by a unit of degree `h`, if any.
    pub fn step(&self, row: usize, h: &Grade) -> Option<usize> {
        if row == 0 || row > self.n {
            return None;
        }
        match h {
            Grade::Unit(a, b) if self.is_matrix_unit_grading() => (*a == row).then_some(*b),
            Grade::Zero => None,
            _ if self.is_matrix_unit_grading() => None,
            _ => {
                let target = self.structure.mul(&self.tuple[row - 1], h);
                self.positions.get(&target).copied()
            }
        }
    }

    /// `L_h` together with `s_h^k`.
    pub fn indices_for_degree(&self, h: &Grade) -> IndexData {
        self.indices_for_tuple(std::slice::from_ref(h))
    }

    /// `L_h` and the row sequences for a degree tuple.
    pub fn indices_for_tuple(&self, tuple: &[Grade]) -> IndexData {
        let mut paths = BTreeMap::new();
        'rows: for k in 1..=self.n {
            let mut path = Vec::with_capacity(tuple.len() + 1);
            path.push(k);
            let mut row = k;
            for h in tuple {
                match self.step(row, h) {
                    Some(next) => {
                        row = next;
                        path.push(row);
                    }
                    None => continue 'rows,
                }
            }
            paths.insert(k, path);
        }
        IndexData { paths }
    }

    /// `Some(n)` when this is the `Z_n`-canonical grading.
    pub fn zn_canonical_modulus(&self) -> Option<usize> {
        let m = self.structure.cyclic_order()?;
        let canonical = m == self.n
            && self
                .tuple
                .iter()
                .enumerate()
                .all(|(k, g)| *g == Grade::Elem((k + 1) % m));
        canonical.then_some(m)
    }

    /// True for the `Z`-canonical grading `(1, ..., n)`.
    pub fn is_integer_canonical(&self) -> bool {
        self.structure.kind() == StructureKind::Integers
            && self
                .tuple
                .iter()
                .enumerate()
                .all(|(k, g)| *g == Grade::int(k as i64 + 1))
    }

    /// Reduction of a grade to `Z_n` for the canonical `Z_n` and `Z` gradings.
    pub fn residue(&self, g: &Grade) -> Option<usize> {
        if self.zn_canonical_modulus().is_some() {
            return match g {
                Grade::Elem(k) => Some(*k),
                _ => None,
            };
        }
        if self.is_integer_canonical() {
            if let Grade::Int(v) = g {
                return v.mod_floor(&BigInt::from(self.n)).to_usize();
            }
        }
        None
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(ks: &[usize]) -> Vec<Grade> {
        ks.iter().map(|&k| Grade::Elem(k)).collect()
    }

    #[test]
    fn unit_degrees() {
        let z3 = ElementaryGrading::zn(3).unwrap();
        assert_eq!(z3.degree_of_unit(2, 2).unwrap(), Grade::Elem(0));
        assert_eq!(z3.degree_of_unit(1, 2).unwrap(), Grade::Elem(1));
        let z = ElementaryGrading::integers(3).unwrap();
        assert_eq!(z.degree_of_unit(3, 1).unwrap(), Grade::int(-2));
        assert!(matches!(
            z.degree_of_unit(0, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(z.degree_of_unit(1, 4).is_err());
        let mu = ElementaryGrading::matrix_units(2).unwrap();
        assert_eq!(mu.degree_of_unit(1, 2).unwrap(), Grade::Unit(1, 2));
    }

    #[test]
    fn supports() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        assert_eq!(
            z2.support().iter().cloned().collect::<Vec<_>>(),
            elems(&[0, 1])
        );
        let z = ElementaryGrading::integers(2).unwrap();
        assert_eq!(
            z.support().iter().cloned().collect::<Vec<_>>(),
            vec![Grade::int(-1), Grade::int(0), Grade::int(1)]
        );
        let z4 = ElementaryGrading::integers(4).unwrap();
        let expected: BTreeSet<Grade> = (-3..=3).map(Grade::int).collect();
        assert_eq!(z4.support(), &expected);
    }

    #[test]
    fn index_sets_for_degrees() {
        let z3 = ElementaryGrading::integers(3).unwrap();
        let d = z3.indices_for_degree(&Grade::int(1));
        assert_eq!(d.rows().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.successor(1), Some(2));
        assert_eq!(d.successor(2), Some(3));

        let z2 = ElementaryGrading::zn(2).unwrap();
        let d = z2.indices_for_degree(&Grade::Elem(1));
        assert_eq!(d.rows().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.successor(1), Some(2));
        assert_eq!(d.successor(2), Some(1));

        let z = ElementaryGrading::integers(2).unwrap();
        assert!(z.indices_for_degree(&Grade::int(2)).is_empty());
    }

    #[test]
    fn index_sets_for_tuples() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let d = z2.indices_for_tuple(&elems(&[1, 1]));
        assert_eq!(d.path(1), Some(&[1, 2, 1][..]));
        assert_eq!(d.path(2), Some(&[2, 1, 2][..]));

        let z = ElementaryGrading::integers(2).unwrap();
        assert!(z
            .indices_for_tuple(&[Grade::int(1), Grade::int(1)])
            .is_empty());

        let d = z.indices_for_tuple(&[]);
        assert_eq!(d.rows().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.path(2), Some(&[2][..]));
    }

    #[test]
    fn matrix_unit_rows() {
        let mu = ElementaryGrading::matrix_units(3).unwrap();
        let d = mu.indices_for_tuple(&[Grade::Unit(1, 2), Grade::Unit(2, 3)]);
        assert_eq!(d.rows().collect::<Vec<_>>(), vec![1]);
        assert_eq!(d.path(1), Some(&[1, 2, 3][..]));
        assert!(mu.indices_for_degree(&Grade::Zero).is_empty());
    }

    #[test]
    fn distinctness_enforced() {
        let s = GradingStructure::cyclic(3).unwrap();
        assert!(ElementaryGrading::new(s, elems(&[1, 1, 0])).is_err());
    }

    #[test]
    fn spec_strings() {
        assert_eq!(ElementaryGrading::from_spec("zn:4").unwrap().n(), 4);
        assert_eq!(
            ElementaryGrading::from_spec("zp:5").unwrap().descriptor(),
            "zp:5"
        );
        assert!(ElementaryGrading::from_spec("zp:4").is_err());
        assert!(ElementaryGrading::from_spec("z:0").is_err());
        assert!(ElementaryGrading::from_spec("q:3").is_err());
        assert!(ElementaryGrading::from_spec("mu:2")
            .unwrap()
            .is_matrix_unit_grading());
    }

    #[test]
    fn group_file_spec() {
        let dir = std::env::temp_dir().join(format!("matgrade-klein-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("klein.txt");
        std::fs::write(&path, "e a b c\ne a b c\na e c b\nb c e a\nc b a e\n").unwrap();
        let g = ElementaryGrading::from_spec(&format!("group:{}:e,a,b", path.display())).unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.structure().is_associative());
        // Supp = {e, a, b, c}: a·b = c appears as a unit degree.
        assert_eq!(g.support().len(), 4);
        assert!(g.is_neutral(&g.degree_of_unit(2, 2).unwrap()));
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn canonical_detection() {
        assert_eq!(
            ElementaryGrading::zn(3).unwrap().zn_canonical_modulus(),
            Some(3)
        );
        assert!(ElementaryGrading::integers(3)
            .unwrap()
            .is_integer_canonical());
        let z = ElementaryGrading::integers(3).unwrap();
        assert_eq!(z.residue(&Grade::int(-2)), Some(1));
    }
}
