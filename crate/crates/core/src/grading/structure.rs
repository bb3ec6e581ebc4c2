use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of a grading structure.
///
/// The derived order is the canonical rank used for term ordering:
/// finite-group elements by carrier position, integers by value, matrix
/// units lexicographically, and the absorbing zero last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grade {
    /// Position in the carrier of a finite group.
    Elem(usize),
    /// An element of the integers.
    Int(BigInt),
    /// The matrix unit `(i, j)` of `MU_n`, 1-based.
    Unit(usize, usize),
    /// The absorbing zero of `MU_n`.
    Zero,
}

impl Grade {
    pub fn int(v: i64) -> Grade {
        Grade::Int(BigInt::from(v))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Elem(k) => write!(f, "#{k}"),
            Grade::Int(v) => write!(f, "{v}"),
            Grade::Unit(i, j) => write!(f, "({i},{j})"),
            Grade::Zero => write!(f, "0"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    FiniteGroup,
    Integers,
    MatrixUnitSemigroup,
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl CayleyTable {
    /// Validates closure, associativity, identity, and inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let order = names.len();
        if order == 0 {
            return Err(Error::InvalidGrading("empty carrier".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidGrading(format!(
                    "duplicate element name {name}"
                )));
            }
        }
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(Error::InvalidGrading(format!(
                "Cayley table must be {order}x{order}"
            )));
        }
        if table.iter().flatten().any(|&c| c >= order) {
            return Err(Error::InvalidGrading("table entry outside carrier".into()));
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGrading(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGrading("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(order);
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| {
                    Error::InvalidGrading(format!("element {} has no inverse", names[g]))
                })?;
            inverses.push(inv);
        }
        Ok(CayleyTable {
            names,
            table,
            identity,
            inverses,
        })
    }

    /// Reads the text format: a line of element names, then one table row per element.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidGrading("empty Cayley table file".into()))?;
        let names: Vec<String> = header.split_whitespace().map(str::to_owned).collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(k, s)| (s.as_str(), k))
            .collect();
        let mut table = Vec::new();
        for (row_no, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    index.get(tok).copied().ok_or_else(|| {
                        Error::InvalidGrading(format!(
                            "unknown element {tok} in row {}",
                            row_no + 1
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        CayleyTable::new(names, table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Finite {
        table: CayleyTable,
        /// `Some(n)` when the table is the standard presentation of `Z_n`
        /// (element `k` named `"k"`, product = addition mod n).
        cyclic: Option<usize>,
    },
    Integers,
    MatrixUnits {
        n: usize,
    },
}

/// A finite group, the integers, or the matrix-unit semigroup `MU_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingStructure {
    repr: Repr,
}

impl GradingStructure {
    /// The cyclic group `Z_n` with elements `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGrading("Z_0 is not a finite group".into()));
        }
        let names = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Ok(GradingStructure {
            repr: Repr::Finite {
                table: CayleyTable::new(names, table)?,
                cyclic: Some(n),
            },
        })
    }

    pub fn integers() -> Self {
        GradingStructure {
            repr: Repr::Integers,
        }
    }

    pub fn matrix_units(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGrading("MU_0 is empty".into()));
        }
        Ok(GradingStructure {
            repr: Repr::MatrixUnits { n },
        })
    }

    pub fn finite_group(table: CayleyTable) -> Self {
        GradingStructure {
            repr: Repr::Finite {
                table,
                cyclic: None,
            },
        }
    }

    pub fn kind(&self) -> StructureKind {
        match self.repr {
            Repr::Finite { .. } => StructureKind::FiniteGroup,
            Repr::Integers => StructureKind::Integers,
            Repr::MatrixUnits { .. } => StructureKind::MatrixUnitSemigroup,
        }
    }

    /// `Some(n)` for the built-in `Z_n`.
    pub fn cyclic_order(&self) -> Option<usize> {
        match &self.repr {
            Repr::Finite { cyclic, .. } => *cyclic,
            _ => None,
        }
    }

    pub fn is_group(&self) -> bool {
        !matches!(self.repr, Repr::MatrixUnits { .. })
    }

    /// Explicit element list for finite kinds; `None` for the integers.
    pub fn carrier(&self) -> Option<Vec<Grade>> {
        match &self.repr {
            Repr::Finite { table, .. } => Some((0..table.order()).map(Grade::Elem).collect()),
            Repr::Integers => None,
            Repr::MatrixUnits { n } => {
                let mut out: Vec<Grade> = (1..=*n)
                    .flat_map(|i| (1..=*n).map(move |j| Grade::Unit(i, j)))
                    .collect();
                out.push(Grade::Zero);
                Some(out)
            }
        }
    }

    pub fn contains(&self, g: &Grade) -> bool {
        match (&self.repr, g) {
            (Repr::Finite { table, .. }, Grade::Elem(k)) => *k < table.order(),
            (Repr::Integers, Grade::Int(_)) => true,
            (Repr::MatrixUnits { n }, Grade::Unit(i, j)) => {
                (1..=*n).contains(i) && (1..=*n).contains(j)
            }
            (Repr::MatrixUnits { .. }, Grade::Zero) => true,
            _ => false,
        }
    }

    pub fn check(&self, g: &Grade) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ForeignGrade(g.to_string()))
        }
    }

    /// The structure's product. Panics if either grade belongs to another structure.
    pub fn mul(&self, a: &Grade, b: &Grade) -> Grade {
        match (&self.repr, a, b) {
            (Repr::Finite { table, .. }, Grade::Elem(x), Grade::Elem(y)) => {
                Grade::Elem(table.table[*x][*y])
            }
            (Repr::Integers, Grade::Int(x), Grade::Int(y)) => Grade::Int(x + y),
            (Repr::MatrixUnits { .. }, Grade::Unit(i, j), Grade::Unit(k, l)) => {
                if j == k {
                    Grade::Unit(*i, *l)
                } else {
                    Grade::Zero
                }
            }
            (Repr::MatrixUnits { .. }, Grade::Zero, _)
            | (Repr::MatrixUnits { .. }, _, Grade::Zero) => Grade::Zero,
            _ => panic!("grades {a} and {b} do not belong to this structure"),
        }
    }

    /// The identity element; `MU_n` has none.
    pub fn identity(&self) -> Option<Grade> {
        match &self.repr {
            Repr::Finite { table, .. } => Some(Grade::Elem(table.identity)),
            Repr::Integers => Some(Grade::Int(BigInt::zero())),
            Repr::MatrixUnits { .. } => None,
        }
    }

    pub fn is_identity(&self, g: &Grade) -> bool {
        match (&self.repr, g) {
            (Repr::Finite { table, .. }, Grade::Elem(k)) => *k == table.identity,
            (Repr::Integers, Grade::Int(v)) => v.is_zero(),
            _ => false,
        }
    }

    /// Inverse for group kinds; `None` for `MU_n`.
    pub fn inverse(&self, g: &Grade) -> Option<Grade> {
        match (&self.repr, g) {
            (Repr::Finite { table, .. }, Grade::Elem(k)) => Some(Grade::Elem(table.inverses[*k])),
            (Repr::Integers, Grade::Int(v)) => Some(Grade::Int(-v)),
            _ => None,
        }
    }

    /// Ordered product of a sequence. The empty product is the identity,
    /// which `MU_n` lacks, so it yields `None` there.
    pub fn product<'a>(&self, grades: impl IntoIterator<Item = &'a Grade>) -> Option<Grade> {
        let mut iter = grades.into_iter();
        let first = match iter.next() {
            Some(g) => g.clone(),
            None => return self.identity(),
        };
        Some(iter.fold(first, |acc, g| self.mul(&acc, g)))
    }

    /// Exhaustive associativity check; always true for the integers.
    pub fn is_associative(&self) -> bool {
        let Some(carrier) = self.carrier() else {
            return true;
        };
        carrier.iter().all(|a| {
            carrier.iter().all(|b| {
                carrier
                    .iter()
                    .all(|c| self.mul(&self.mul(a, b), c) == self.mul(a, &self.mul(b, c)))
            })
        })
    }

    /// Interprets an integer literal as a grade.
    pub fn grade_from_int(&self, v: &BigInt) -> Result<Grade> {
        match &self.repr {
            Repr::Finite {
                cyclic: Some(n), ..
            } => {
                let r = v.mod_floor(&BigInt::from(*n));
                Ok(Grade::Elem(r.to_usize().expect("residue fits usize")))
            }
            Repr::Finite { .. } => self.grade_from_name(&v.to_string()),
            Repr::Integers => Ok(Grade::Int(v.clone())),
            Repr::MatrixUnits { .. } if v.is_zero() => Ok(Grade::Zero),
            Repr::MatrixUnits { .. } => Err(Error::ForeignGrade(format!(
                "{v} (MU_n grades are (i,j) or 0)"
            ))),
        }
    }

    /// Looks up a finite-group element by name.
    pub fn grade_from_name(&self, name: &str) -> Result<Grade> {
        match &self.repr {
            Repr::Finite { table, .. } => table
                .names
                .iter()
                .position(|s| s == name)
                .map(Grade::Elem)
                .ok_or_else(|| Error::ForeignGrade(name.to_owned())),
            _ => Err(Error::ForeignGrade(name.to_owned())),
        }
    }

    pub fn grade_from_pair(&self, i: usize, j: usize) -> Result<Grade> {
        let g = Grade::Unit(i, j);
        match self.repr {
            Repr::MatrixUnits { .. } => {
                self.check(&g)?;
                Ok(g)
            }
            _ => Err(Error::ForeignGrade(format!("({i},{j})"))),
        }
    }

    /// Text form accepted back by the polynomial parser.
    pub fn format_grade(&self, g: &Grade) -> String {
        match (&self.repr, g) {
            (Repr::Finite { table, .. }, Grade::Elem(k)) if *k < table.order() => {
                table.names[*k].clone()
            }
            _ => g.to_string(),
        }
    }
}
