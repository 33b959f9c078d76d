//! Ext-dimension tables, their Euler–Poincaré characteristics, and
//! cross-pipeline verification.
//!
//! A table has `dims[r][j] = dim Ext^r(π_a, π_b)` with `j ≡ b·a^{-1} (mod n)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::clifford::CliffordTransfer;
use crate::cyclotomic::{totient, CycNum};
use crate::error::{out_of_range, Error, Result};
use crate::exterior::{isotypic_table, subset_sum_vector};
use crate::koszul::semidirect_cohomology_dim;
use crate::lattice::{standard_a, LatticeRep};

/// Largest `n` accepted by the closed-form table.
pub const MAX_TABLE_N: u32 = 16;
/// Largest `n` for the projector-rank pipeline.
pub const MAX_ORACLE_N: u32 = 10;
/// Largest lattice rank for which a generic table is verified by projector ranks.
pub const MAX_CONJECTURE_RANK: usize = 9;
/// Largest `n` at which `verify` also runs the Clifford transfer.
pub const MAX_VERIFY_CLIFFORD_N: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Ramified,
    Unramified,
    Generic,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Ramified => "ramified",
            CaseTag::Unramified => "unramified",
            CaseTag::Generic => "generic",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ramified" => Ok(CaseTag::Ramified),
            "unramified" => Ok(CaseTag::Unramified),
            "generic" => Ok(CaseTag::Generic),
            _ => Err(Error::Invalid(format!("unknown case tag {s:?}"))),
        }
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm,
    Oracle,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A table of Ext dimensions indexed by degree `r` and residue `j`.
///
/// Rows cover `r = 0..=rank`; every higher degree is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtTable {
    n: u32,
    case: CaseTag,
    dims: Vec<Vec<u64>>,
    provenance: Provenance,
}

#[derive(Serialize)]
struct ExtTableJson<'a> {
    n: u32,
    case: CaseTag,
    dims: &'a [Vec<u64>],
    ep: Vec<i64>,
    provenance: Provenance,
}

impl ExtTable {
    pub fn new(n: u32, case: CaseTag, dims: Vec<Vec<u64>>, provenance: Provenance) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", 0, ">= 1"));
        }
        if dims.is_empty() || dims.iter().any(|row| row.len() != n as usize) {
            return Err(Error::Shape(format!(
                "table for n = {n} needs at least one row of length {n}"
            )));
        }
        Ok(ExtTable {
            n,
            case,
            dims,
            provenance,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn dims(&self) -> &[Vec<u64>] {
        &self.dims
    }

    /// Number of stored degrees.
    pub fn rows(&self) -> usize {
        self.dims.len()
    }

    /// `dim Ext^r` at residue `j`; zero beyond the stored degrees.
    pub fn dim(&self, r: usize, j: i64) -> u64 {
        let j = j.rem_euclid(self.n as i64) as usize;
        self.dims.get(r).map_or(0, |row| row[j])
    }

    /// The Ext dimensions between `π_a` and `π_b`, i.e. column `b - a`.
    pub fn column(&self, j: i64) -> Vec<u64> {
        (0..self.rows()).map(|r| self.dim(r, j)).collect()
    }

    pub fn ep_vector(&self) -> Vec<i64> {
        (0..self.n as i64)
            .map(|j| euler_poincare(self, j))
            .collect()
    }

    /// Violated table invariants, as human-readable strings.
    pub fn check_invariants(&self) -> Vec<String> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for j in 0..n {
            let expect = u64::from(j == 0);
            if self.dim(0, j) != expect {
                out.push(format!(
                    "dims[0][{j}] = {}, expected {expect}",
                    self.dim(0, j)
                ));
            }
        }
        for r in 0..self.rows() {
            for j in 0..n {
                if self.dim(r, j) != self.dim(r, n - j) {
                    out.push(format!(
                        "dims[{r}][{j}] = {} but dims[{r}][{}] = {}",
                        self.dim(r, j),
                        (n - j) % n,
                        self.dim(r, n - j)
                    ));
                }
            }
        }
        if self.case != CaseTag::Generic {
            if self.rows() != self.n as usize {
                out.push(format!("{} rows, expected {}", self.rows(), self.n));
            }
            for j in 0..n {
                let expect = u64::from(j != 0);
                if self.dim(1, j) != expect {
                    out.push(format!(
                        "dims[1][{j}] = {}, expected {expect}",
                        self.dim(1, j)
                    ));
                }
            }
        }
        out
    }

    /// JSON object with keys `n, case, dims, ep, provenance`, in that order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ExtTableJson {
            n: self.n,
            case: self.case,
            dims: &self.dims,
            ep: self.ep_vector(),
            provenance: self.provenance,
        })
        .expect("table serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r");
        for j in 0..self.n {
            out.push_str(&format!(",{j}"));
        }
        out.push('\n');
        for (r, row) in self.dims.iter().enumerate() {
            out.push_str(&r.to_string());
            for d in row {
                out.push_str(&format!(",{d}"));
            }
            out.push('\n');
        }
        out.push_str("ep");
        for e in self.ep_vector() {
            out.push_str(&format!(",{e}"));
        }
        out.push('\n');
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "n = {}, case = {}, provenance = {}\n\n| r \\ j |",
            self.n, self.case, self.provenance
        );
        for j in 0..self.n {
            out.push_str(&format!(" {j} |"));
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(self.n as usize));
        out.push('\n');
        for (r, row) in self.dims.iter().enumerate() {
            out.push_str(&format!("| {r} |"));
            for d in row {
                out.push_str(&format!(" {d} |"));
            }
            out.push('\n');
        }
        out.push_str("| EP |");
        for e in self.ep_vector() {
            out.push_str(&format!(" {e} |"));
        }
        out.push('\n');
        out
    }
}

fn check_table_n(n: u32, limit: u32, what: &'static str) -> Result<()> {
    if n < 2 {
        return Err(out_of_range("n", n as i64, ">= 2"));
    }
    if n > limit {
        return Err(Error::CostGuard { what, n, limit });
    }
    Ok(())
}

fn check_case(case: CaseTag) -> Result<()> {
    if case == CaseTag::Generic {
        return Err(Error::Invalid(
            "the SL_n table takes case ramified or unramified".into(),
        ));
    }
    Ok(())
}

/// The table for `SL_n` from subset-sum counts. Both case tags give the same
/// dimensions.
pub fn theorem2_table(n: u32, case: CaseTag) -> Result<ExtTable> {
    check_case(case)?;
    check_table_n(n, MAX_TABLE_N, "closed-form table")?;
    let dims = (0..n as usize)
        .map(|r| subset_sum_vector(n, r).map(|v| v.mults))
        .collect::<Result<Vec<_>>>()?;
    ExtTable::new(n, case, dims, Provenance::ClosedForm)
}

/// The same table from ranks of isotypic projectors on `Λ^r(A^∨ ⊗ C)`.
pub fn theorem2_oracle_table(n: u32, case: CaseTag) -> Result<ExtTable> {
    check_case(case)?;
    check_table_n(n, MAX_ORACLE_N, "projector-rank table")?;
    let a = standard_a(n)?;
    let dims = (0..n as usize)
        .map(|r| {
            (0..n as i64)
                .map(|j| semidirect_cohomology_dim(&a, j, r).map(|d| d as u64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ExtTable::new(n, case, dims, Provenance::Oracle)
}

/// `Σ_r (-1)^r dims[r][j]`.
pub fn euler_poincare(t: &ExtTable, j: i64) -> i64 {
    (0..t.rows())
        .map(|r| {
            let d = t.dim(r, j) as i64;
            if r % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}

/// The Möbius function.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// The Ramanujan sum `c_n(j) = Σ_{gcd(k,n)=1} ζ_n^{jk}`.
///
/// Evaluated both by summing in `Q(ζ_n)` and by `μ(n/g) φ(n) / φ(n/g)` with
/// `g = gcd(j, n)`; disagreement is an [`Error::Internal`].
pub fn ramanujan_sum(n: u32, j: i64) -> Result<i64> {
    if n == 0 {
        return Err(out_of_range("n", 0, ">= 1"));
    }
    let one = num_rational::BigRational::from_integer(1.into());
    let terms = (1..=n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| (j * k as i64, one.clone()));
    let direct = CycNum::from_exponent_terms(n, terms);
    let direct = direct
        .to_integer()
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| {
            Error::Internal(format!(
                "c_{n}({j}) does not reduce to an integer: {direct}"
            ))
        })?;
    let g = (j.rem_euclid(n as i64) as u32).gcd(&n);
    let m = n / g;
    let closed = mobius(m as u64) * (totient(n) / totient(m)) as i64;
    if direct != closed {
        return Err(Error::Internal(format!(
            "c_{n}({j}): direct sum {direct} but closed form {closed}"
        )));
    }
    Ok(direct)
}

/// Ext table for a lattice `L` with a cyclic action: `dims[r][j]` is the
/// multiplicity of `ζ^j` in `Λ^r(L ⊗ C)`, checked cell by cell against the
/// projector ranks on the dual lattice.
pub fn conjecture_table(l: &LatticeRep) -> Result<ExtTable> {
    if l.rank() > MAX_CONJECTURE_RANK {
        return Err(Error::CostGuard {
            what: "generic table verification (rank)",
            n: l.rank() as u32,
            limit: MAX_CONJECTURE_RANK as u32,
        });
    }
    let dims: Vec<Vec<u64>> = isotypic_table(l)?.into_iter().map(|v| v.mults).collect();
    for (r, row) in dims.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            let check = semidirect_cohomology_dim(l, j as i64, r)? as u64;
            if check != d {
                return Err(Error::Internal(format!(
                    "cell ({r}, {j}): character multiplicity {d} but projector rank {check}"
                )));
            }
        }
    }
    ExtTable::new(l.order(), CaseTag::Generic, dims, Provenance::Oracle)
}

/// The structural alternatives for `π = i_P^G σ` with `P` maximal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem1Structure {
    Irreducible,
    /// Reducible with `σ ≇ σ^w`: indecomposable with distinct factors.
    Indecomposable,
    /// Reducible with `σ ≅ σ^w`: a direct sum of two distinct irreducibles.
    SemisimpleSum,
}

/// Hypotheses on `π = i_P^G σ`, supplied by the user.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Theorem1Config {
    pub reducible: bool,
    /// `σ ≅ σ^w`.
    pub sigma_selfconjugate: bool,
    /// `N_G(M)/M` is trivial.
    pub normalizer_trivial: bool,
}

impl Theorem1Config {
    pub fn check(&self) -> Result<()> {
        if self.normalizer_trivial && self.reducible {
            return Err(Error::InconsistentConfig(
                "N_G(M)/M trivial forces i_P^G σ to be irreducible, but reducible = true".into(),
            ));
        }
        Ok(())
    }

    pub fn structure(&self) -> Result<Theorem1Structure> {
        self.check()?;
        Ok(match (self.reducible, self.sigma_selfconjugate) {
            (false, _) => Theorem1Structure::Irreducible,
            (true, false) => Theorem1Structure::Indecomposable,
            (true, true) => Theorem1Structure::SemisimpleSum,
        })
    }
}

/// `dim Ext^1` among the irreducible subquotients of `π`: `[[1]]` when `π` is
/// irreducible, otherwise `[[0, 1], [1, 0]]`.
pub fn theorem1_ext1(cfg: &Theorem1Config) -> Result<Vec<Vec<u64>>> {
    cfg.check()?;
    Ok(if cfg.reducible {
        vec![vec![0, 1], vec![1, 0]]
    } else {
        vec![vec![1]]
    })
}

/// One disagreeing cell in a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub pipeline: &'static str,
    /// Degree, or `None` for Euler–Poincaré cells.
    pub r: Option<usize>,
    pub j: u32,
    pub expected: i64,
    pub found: i64,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub pipelines: Vec<&'static str>,
    pub cells_checked: usize,
    pub ep: Vec<i64>,
    pub ramanujan: Vec<i64>,
    pub mismatches: Vec<CellMismatch>,
    pub invariant_violations: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.invariant_violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Compares the subset-sum table against character orthogonality and
/// projector ranks (and, for small `n`, the Clifford transfer), and checks
/// the Euler–Poincaré vector against Ramanujan sums.
pub fn verify(n: u32) -> Result<VerifyReport> {
    check_table_n(n, MAX_ORACLE_N, "verification")?;
    let reference = theorem2_table(n, CaseTag::Ramified)?;
    let a = standard_a(n)?;
    let character = isotypic_table(&a)?;
    let mut pipelines = vec!["subset-sum", "character", "projector"];
    let transfer = if n <= MAX_VERIFY_CLIFFORD_N {
        pipelines.push("clifford");
        Some(CliffordTransfer::new(n)?)
    } else {
        None
    };
    let mut mismatches = Vec::new();
    let mut cells = 0;
    let mut record = |pipeline, r: Option<usize>, j: u32, expected: i64, found: i64| {
        cells += 1;
        if expected != found {
            mismatches.push(CellMismatch {
                pipeline,
                r,
                j,
                expected,
                found,
            });
        }
    };
    for (r, row) in character.iter().enumerate() {
        for j in 0..n {
            let expected = reference.dim(r, j as i64) as i64;
            record(
                "character",
                Some(r),
                j,
                expected,
                row.mults[j as usize] as i64,
            );
            let proj = semidirect_cohomology_dim(&a, j as i64, r)? as i64;
            record("projector", Some(r), j, expected, proj);
        }
    }
    if let Some(t) = &transfer {
        for j in 0..n {
            let dims = t.ext_dims(0, j as i64)?;
            for (r, &d) in dims.iter().enumerate() {
                record(
                    "clifford",
                    Some(r),
                    j,
                    reference.dim(r, j as i64) as i64,
                    d as i64,
                );
            }
        }
    }
    let ep = reference.ep_vector();
    let ramanujan = (0..n as i64)
        .map(|j| ramanujan_sum(n, j))
        .collect::<Result<Vec<_>>>()?;
    for j in 0..n {
        record(
            "ep-ramanujan",
            None,
            j,
            ramanujan[j as usize],
            ep[j as usize],
        );
    }
    record("ep-sum", None, 0, 0, ep.iter().sum());
    let invariant_violations = reference.check_invariants();
    Ok(VerifyReport {
        n,
        pipelines,
        cells_checked: cells,
        ep,
        ramanujan,
        mismatches,
        invariant_violations,
    })
}
