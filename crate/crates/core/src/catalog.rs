//! Built-in algebras, addressable by name from the command line.

use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::io;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog algebra `{0}`")]
    Unknown(String),
    #[error("r_n is defined for n >= 4 (got {0}); r_3 degenerates to the abelian line")]
    RnTooSmall(usize),
    #[error("abelian algebra needs positive dimension")]
    ZeroDimension,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub provenance: String,
}

/// The Maurer-Cartan system of the 5-dimensional example algebra, as text.
pub const REMARK_5D_MC: &str = "\
dim 5
mc
dω1 = ω2∧ω3 + ω1∧ω4
dω2 = ω2∧ω4 - ω2∧ω5
dω3 = ω3∧ω5
dω4 = dω5 = 0
";

fn labelled(labels: &[&str], brackets: &[(usize, usize, &[(usize, i64)])]) -> LieAlgebra {
    let mut g = LieAlgebra::from_labels(labels).expect("distinct labels");
    for &(i, j, terms) in brackets {
        g.set_bracket_terms(i, j, terms).expect("valid bracket");
    }
    g
}

/// `L_n`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// `[e1, e2] = e3`.
pub fn heisenberg_h1() -> LieAlgebra {
    labelled(&["e1", "e2", "e3"], &[(0, 1, &[(2, 1)])])
}

/// `[X1, X2] = X2`.
pub fn r2_aff() -> LieAlgebra {
    labelled(&["X1", "X2"], &[(0, 1, &[(1, 1)])])
}

/// `r_n` on `X1..X_{n-2}` with `[X1, Xj] = Xj` for `2 <= j <= n-2`.
pub fn rn(n: usize) -> Result<LieAlgebra, CatalogError> {
    if n < 4 {
        return Err(CatalogError::RnTooSmall(n));
    }
    let mut g = LieAlgebra::abelian(n - 2);
    for j in 1..n - 2 {
        g.set_bracket_terms(0, j, &[(j, 1)]).expect("valid bracket");
    }
    Ok(g)
}

/// `[X0,X1] = X1, [X0,X2] = X1 + X2, [X0,X3] = X2 + X3`.
pub fn r4_paper() -> LieAlgebra {
    labelled(
        &["X0", "X1", "X2", "X3"],
        &[(0, 1, &[(1, 1)]), (0, 2, &[(1, 1), (2, 1)]), (0, 3, &[(2, 1), (3, 1)])],
    )
}

/// `[X4,X5] = X6, [X4,X7] = X6`.
pub fn r4_0_paper() -> LieAlgebra {
    labelled(&["X4", "X5", "X6", "X7"], &[(0, 1, &[(2, 1)]), (0, 3, &[(2, 1)])])
}

/// The 5-dimensional algebra read off [`REMARK_5D_MC`].
pub fn remark_5d() -> LieAlgebra {
    io::parse_algebra(REMARK_5D_MC).expect("built-in system parses")
}

/// `r4_paper` and `r4_0_paper` side by side on `X0..X9`, joined by
/// `[X0,X4] = X8, [X0,X7] = X9`.
pub fn paper_example_10d() -> LieAlgebra {
    let labels: Vec<String> = (0..10).map(|i| format!("X{i}")).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    labelled(
        &labels,
        &[
            (0, 1, &[(1, 1)]),
            (0, 2, &[(1, 1), (2, 1)]),
            (0, 3, &[(2, 1), (3, 1)]),
            (4, 5, &[(6, 1)]),
            (4, 7, &[(6, 1)]),
            (0, 4, &[(8, 1)]),
            (0, 7, &[(9, 1)]),
        ],
    )
}

fn parametrised(name: &str) -> Option<Result<CatalogEntry, CatalogError>> {
    let param = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = param("abelian_").or_else(|| param("L")) {
        if n == 0 {
            return Some(Err(CatalogError::ZeroDimension));
        }
        return Some(Ok(CatalogEntry {
            name: format!("abelian_{n}"),
            algebra: abelian(n),
            provenance: format!("abelian algebra L_{n}"),
        }));
    }
    if let Some(n) = param("rn_") {
        return Some(rn(n).map(|algebra| CatalogEntry {
            name: format!("rn_{n}"),
            provenance: format!("r_{n}: [X1, Xj] = Xj for 2 <= j <= {}, dimension {}", n - 2, n - 2),
            algebra,
        }));
    }
    None
}

/// Looks up an entry. Parametrised families are written `abelian_<n>`
/// (or `L<n>`) and `rn_<n>`.
pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    if let Some(entry) = parametrised(name) {
        return entry;
    }
    let (algebra, provenance) = match name {
        "heisenberg_h1" | "h1" => (heisenberg_h1(), "Heisenberg algebra h_1: [e1, e2] = e3"),
        "r2_aff" | "r2" => (r2_aff(), "affine algebra aff(1): [X1, X2] = X2"),
        "r4_paper" | "r4" => (r4_paper(), "r_4: [X0,X1] = X1, [X0,X2] = X1 + X2, [X0,X3] = X2 + X3"),
        "r4_0_paper" | "r4_0" => (r4_0_paper(), "r_{4,0}: [X4,X5] = X6, [X4,X7] = X6"),
        "remark_5d" => (remark_5d(), "5-dimensional solvable algebra with N = 1 given by its Maurer-Cartan system"),
        "paper_example_10d" => (
            paper_example_10d(),
            "r_4 and r_{4,0} joined by [X0,X4] = X8, [X0,X7] = X9",
        ),
        _ => return Err(CatalogError::Unknown(name.to_string())),
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        algebra,
        provenance: provenance.to_string(),
    })
}

/// Names listed by `catalog` without an argument.
pub const LISTED: &[&str] = &[
    "abelian_1",
    "abelian_2",
    "heisenberg_h1",
    "r2_aff",
    "rn_5",
    "r4_paper",
    "r4_0_paper",
    "remark_5d",
    "paper_example_10d",
];

pub fn listed() -> Vec<CatalogEntry> {
    LISTED.iter().map(|n| get(n).expect("listed names resolve")).collect()
}

/// The eight solvable algebras whose ordered pairs exercise the product
/// identities: `L1, L2, r2, r_5, r4, r4_0, h1, remark_5d`.
pub fn product_test_set() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("L1", abelian(1)),
        ("L2", abelian(2)),
        ("r2_aff", r2_aff()),
        ("rn_5", rn(5).expect("n >= 4")),
        ("r4_paper", r4_paper()),
        ("r4_0_paper", r4_0_paper()),
        ("heisenberg_h1", heisenberg_h1()),
        ("remark_5d", remark_5d()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, unit_vec};

    #[test]
    fn every_entry_satisfies_jacobi() {
        for e in listed() {
            assert!(e.algebra.check_jacobi().holds(), "{}", e.name);
        }
        for n in 4..12 {
            assert!(rn(n).unwrap().check_jacobi().holds());
        }
    }

    #[test]
    fn documented_dimensions() {
        let g = remark_5d();
        assert_eq!((g.dim(), g.betti1()), (5, 2));
        let r5 = rn(5).unwrap();
        assert_eq!((r5.dim(), r5.betti1()), (3, 1));
        let h1 = heisenberg_h1();
        assert_eq!((h1.dim(), h1.center().dim()), (3, 1));
        assert_eq!(rn(3), Err(CatalogError::RnTooSmall(3)));
    }

    #[test]
    fn remark_brackets_follow_the_sign_convention() {
        // dw(X, Y) = -w([X, Y]) turns dw1 = w2^w3 + w1^w4 into
        // [X2,X3] = -X1 + ..., [X1,X4] = -X1.
        let g = remark_5d();
        let e = |i| unit_vec(5, i);
        let neg = |i| {
            let mut v = unit_vec(5, i);
            v[i] = q(-1);
            v
        };
        assert_eq!(g.bracket(&e(0), &e(3)).unwrap(), neg(0));
        assert_eq!(g.bracket(&e(1), &e(2)).unwrap(), neg(0));
        assert_eq!(g.bracket(&e(1), &e(3)).unwrap(), neg(1));
        assert_eq!(g.bracket(&e(1), &e(4)).unwrap(), e(1));
        assert_eq!(g.bracket(&e(2), &e(4)).unwrap(), neg(2));
        assert_eq!(g.constants().len(), 5);
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(get("L3").unwrap().algebra.dim(), 3);
        assert_eq!(get("abelian_4").unwrap().name, "abelian_4");
        assert_eq!(get("rn_7").unwrap().algebra.dim(), 5);
        assert!(matches!(get("rn_2"), Err(CatalogError::RnTooSmall(2))));
        assert!(matches!(get("nope"), Err(CatalogError::Unknown(_))));
        assert_eq!(get("paper_example_10d").unwrap().algebra.dim(), 10);
    }
}
