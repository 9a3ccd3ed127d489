//! Closed-form constructions of `SH*(n;k)` for `6 <= k <= 10`, and the
//! existence dispatch over all `(n, k)`.
//!
//! Every builder transcribes its rows 1-based, exactly as the formulas are
//! stated (see [`rows`]); [`build`] verifies each array before returning it.

mod k10;
mod k6;
mod k7;
mod k8;
mod k9;
pub(crate) mod rows;

use std::fmt;

use crate::array::PartialArray;
use crate::biembed::diagonal_profile;
use crate::error::ConstructionError;
use crate::verify::{verify, Classification};

pub use k10::{build_k10, build_k10_base, k10_repair};
pub use k6::build_k6;
pub use k7::build_k7;
pub use k8::build_k8;
pub use k9::build_k9;

pub(crate) fn out_of_range(n: usize, k: usize, reason: &str) -> ConstructionError {
    ConstructionError::OutOfRange {
        n,
        k,
        reason: reason.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BuildSpec {
    pub n: usize,
    pub k: usize,
}

impl BuildSpec {
    pub fn new(n: usize, k: usize) -> Self {
        BuildSpec { n, k }
    }

    /// The necessary and sufficient condition for an `H(n;k)` to exist.
    pub fn heffter_exists(&self) -> bool {
        3 <= self.k && self.k <= self.n && matches!((self.n * self.k) % 4, 0 | 3)
    }
}

/// Which row family produced an array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    K6,
    K7ZeroMod4,
    K7OneMod4,
    K8EvenZeroTwoMod6,
    K8EvenFourMod6,
    K8Odd,
    K9ZeroMod4,
    K9ThreeMod8,
    K9SevenMod8,
    K10,
    /// Supplied by the user and verified, not constructed.
    Fixture,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::K6 => "k6-even",
            Family::K7ZeroMod4 => "k7-0mod4",
            Family::K7OneMod4 => "k7-1mod4",
            Family::K8EvenZeroTwoMod6 => "k8-even-0,2mod6",
            Family::K8EvenFourMod6 => "k8-even-4mod6",
            Family::K8Odd => "k8-odd-augmented",
            Family::K9ZeroMod4 => "k9-0mod4",
            Family::K9ThreeMod8 => "k9-3mod8",
            Family::K9SevenMod8 => "k9-7mod8",
            Family::K10 => "k10-even",
            Family::Fixture => "fixture",
        }
    }
}

/// A line interchange, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Swap {
    Rows(usize, usize),
    Columns(usize, usize),
}

impl Swap {
    pub fn apply(&self, h: &mut PartialArray) {
        match *self {
            Swap::Rows(a, b) => h.swap_rows(a - 1, b - 1),
            Swap::Columns(a, b) => h.swap_columns(a - 1, b - 1),
        }
    }
}

impl fmt::Display for Swap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Swap::Rows(a, b) => write!(f, "rows {a} {b}"),
            Swap::Columns(a, b) => write!(f, "columns {a} {b}"),
        }
    }
}

/// Whether the formulas are known to work at this size, or the array was
/// only accepted because it passed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Formula,
    VerifiedAttempt,
    /// A user-supplied array that passed verification.
    Fixture,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub n: usize,
    pub k: usize,
    pub family: Family,
    pub swaps: Vec<Swap>,
    pub basis: Basis,
    pub classification: Classification,
}

impl Manifest {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "#fmt 1\nn={}\nk={}\nfamily={}\n",
            self.n,
            self.k,
            self.family.name()
        );
        for s in &self.swaps {
            out.push_str(&format!("swap={s}\n"));
        }
        let basis = match self.basis {
            Basis::Formula => "formula",
            Basis::VerifiedAttempt => "verified-attempt",
            Basis::Fixture => "verified-fixture",
        };
        out.push_str(&format!(
            "basis={basis}\nclassification={}\n",
            self.classification
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub array: PartialArray,
    pub manifest: Manifest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildOutcome {
    Built(Construction),
    Nonexistent(String),
    NeedsFixture(String),
    OutOfRange(String),
}

impl BuildOutcome {
    pub fn built(self) -> Option<Construction> {
        match self {
            BuildOutcome::Built(c) => Some(c),
            _ => None,
        }
    }
}

fn delegated(n: usize, k: usize) -> BuildOutcome {
    BuildOutcome::NeedsFixture(format!(
        "SH*({n};{k}) has no closed-form construction here; known instances are distributed \
         separately ([web]). Supply one with --fixture FILE"
    ))
}

/// Builds an `SH*(n;k)` when a closed form covers `(n, k)`, verifying it first.
///
/// Returns an error only when a formula that should work produces an array
/// that is not globally simple with the `2nk+2` condition.
pub fn build(spec: BuildSpec) -> Result<BuildOutcome, ConstructionError> {
    let BuildSpec { n, k } = spec;
    if !spec.heffter_exists() {
        return Ok(BuildOutcome::Nonexistent(format!(
            "no H({n};{k}) exists: need 3 <= k <= n and nk = 0 or 3 mod 4"
        )));
    }
    let (family, array, swaps, basis) = match k {
        3..=5 => {
            return Ok(BuildOutcome::NeedsFixture(format!(
                "no closed form for k = {k}; every H({n};{k}) is already SH*, so supply any \
                 Heffter array with --fixture FILE, or find one with the search command for small n"
            )))
        }
        6 => (Family::K6, build_k6(n)?, vec![], Basis::Formula),
        7 if n < 16 && n % 4 == 0 => return Ok(delegated(n, k)),
        7 => {
            let family = if n % 4 == 0 {
                Family::K7ZeroMod4
            } else {
                Family::K7OneMod4
            };
            (family, build_k7(n)?, vec![], Basis::Formula)
        }
        8 if n == 8 || (n % 2 == 1 && n < 21) => return Ok(delegated(n, k)),
        8 => {
            let family = match (n % 2, n % 6) {
                (1, _) => Family::K8Odd,
                (_, 4) => Family::K8EvenFourMod6,
                _ => Family::K8EvenZeroTwoMod6,
            };
            (family, build_k8(n)?, vec![], Basis::Formula)
        }
        9 if n == 11 => return Ok(delegated(n, k)),
        9 => {
            let family = match n % 8 {
                0 | 4 => Family::K9ZeroMod4,
                3 => Family::K9ThreeMod8,
                _ => Family::K9SevenMod8,
            };
            (family, build_k9(n)?, vec![], Basis::Formula)
        }
        10 if n == 10 => return Ok(delegated(n, k)),
        10 => {
            let proven = n % 6 == 0 || n >= 50;
            match build_k10(n)? {
                Some((array, swaps)) => {
                    let basis = if proven {
                        Basis::Formula
                    } else {
                        Basis::VerifiedAttempt
                    };
                    (Family::K10, array, swaps, basis)
                }
                None => return Ok(delegated(n, k)),
            }
        }
        _ => {
            return Ok(BuildOutcome::OutOfRange(format!(
                "closed forms cover 6 <= k <= 10 only (got k = {k})"
            )))
        }
    };
    let classification = verify(&array, k).classification;
    if classification != Classification::GloballySimpleStar {
        return match basis {
            Basis::VerifiedAttempt | Basis::Fixture => Ok(delegated(n, k)),
            Basis::Formula => Err(ConstructionError::Inconsistent {
                n,
                k,
                family: family.name(),
                classification,
            }),
        };
    }
    Ok(BuildOutcome::Built(Construction {
        array,
        manifest: Manifest {
            n,
            k,
            family,
            swaps,
            basis,
            classification,
        },
    }))
}

/// Accepts a user-supplied `SH*(n;k)` after checking its shape and classification.
pub fn accept_fixture(spec: BuildSpec, array: PartialArray) -> Result<Construction, String> {
    let BuildSpec { n, k } = spec;
    if array.rows() != n || array.cols() != n {
        return Err(format!(
            "fixture is {}x{}, expected {n}x{n}",
            array.rows(),
            array.cols()
        ));
    }
    let classification = verify(&array, k).classification;
    if classification != Classification::GloballySimpleStar {
        return Err(format!(
            "fixture is {classification}, GloballySimpleStar is required"
        ));
    }
    Ok(Construction {
        array,
        manifest: Manifest {
            n,
            k,
            family: Family::Fixture,
            swaps: vec![],
            basis: Basis::Fixture,
            classification,
        },
    })
}

/// Cyclically relabels the rows so the filled diagonals become `D_1..D_k`.
///
/// Row `i` of the result is row `i - r + 1` of `h` (1-based, mod `n`).
pub fn standard_form(h: &PartialArray) -> Result<PartialArray, ConstructionError> {
    let profile = diagonal_profile(h).ok_or(ConstructionError::NotDiagonal)?;
    let n = h.rows();
    let shift = profile.r - 1;
    let mut out = PartialArray::empty(n, n).expect("nonempty");
    for ((i, j), v) in h.filled() {
        out.set(((i + shift) % n, j), Some(v)).expect("in bounds");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dispatch_examples() {
        let built = build(BuildSpec::new(8, 6)).unwrap().built().unwrap();
        assert_eq!(built.array, fixtures::sh_star_8_6());
        assert_eq!(built.manifest.family, Family::K6);
        assert!(matches!(
            build(BuildSpec::new(7, 6)).unwrap(),
            BuildOutcome::Nonexistent(_)
        ));
        assert!(matches!(
            build(BuildSpec::new(8, 7)).unwrap(),
            BuildOutcome::NeedsFixture(_)
        ));
        assert!(matches!(
            build(BuildSpec::new(5, 6)).unwrap(),
            BuildOutcome::Nonexistent(_)
        ));
        assert!(matches!(
            build(BuildSpec::new(4, 3)).unwrap(),
            BuildOutcome::NeedsFixture(_)
        ));
        assert!(matches!(
            build(BuildSpec::new(12, 11)).unwrap(),
            BuildOutcome::OutOfRange(_)
        ));
        assert!(matches!(
            build(BuildSpec::new(5, 2)).unwrap(),
            BuildOutcome::Nonexistent(_)
        ));
    }

    #[test]
    fn delegated_sizes() {
        for (n, k) in [
            (8, 7),
            (12, 7),
            (8, 8),
            (9, 8),
            (19, 8),
            (11, 9),
            (10, 10),
            (14, 10),
            (16, 10),
            (20, 10),
            (22, 10),
        ] {
            assert!(
                matches!(
                    build(BuildSpec::new(n, k)).unwrap(),
                    BuildOutcome::NeedsFixture(_)
                ),
                "({n},{k})"
            );
        }
    }

    #[test]
    fn manifest_text() {
        let c = build(BuildSpec::new(52, 10)).unwrap().built().unwrap();
        let text = c.manifest.to_text();
        assert!(text.starts_with("#fmt 1\nn=52\nk=10\n"));
        assert!(text.contains("swap=columns 41 43\n"));
        assert!(text.contains("basis=formula\n"));
        assert!(text.ends_with("classification=GloballySimpleStar\n"));
    }

    #[test]
    fn standard_form_of_the_diagonal_example() {
        let a = fixtures::diagonal_9_5();
        let b = standard_form(&a).unwrap();
        assert_eq!(b, fixtures::diagonal_9_5_standard());
        assert_eq!(standard_form(&b).unwrap(), b);
        assert_eq!(
            standard_form(&fixtures::h8_7()),
            Err(ConstructionError::NotDiagonal)
        );
    }

    #[test]
    fn deterministic() {
        let a = build(BuildSpec::new(21, 8)).unwrap();
        let b = build(BuildSpec::new(21, 8)).unwrap();
        assert_eq!(a, b);
    }
}
