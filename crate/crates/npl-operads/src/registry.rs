//! Name-keyed dispatch from check descriptions to typed runners, used by the
//! command line's manifest mode.

use crate::axioms::{run_axiom_filtered, run_mu_compat, AxiomName, Bounds, CheckReport};
use crate::error::{Error, Result};
use crate::instances::{
    arrowpi_npl_structure, arrowpi_square_structure, exp_npl_structure, perm_npl_structure,
    pi_npl_structure, pi_square_structure,
};
use crate::kernel::{
    as_plus, com_plus, concat_product_e, concat_product_l, cycles_npl, identity_operad,
    shuffle_product_l,
};
use crate::polymap::{check_palgebra_morphism, end_term_to_map, EndBasis};
use crate::species::Structure;

/// Which composition of a registered species a check targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Composition {
    /// The structure's own composition (the only one, for most names).
    #[default]
    Base,
    /// The square composition of a compatible pair.
    Square,
    /// The nested pre-Lie composition.
    Npl,
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_lowercase().as_str() {
            "base" | "" => Composition::Base,
            "square" => Composition::Square,
            "npl" => Composition::Npl,
            other => return Err(Error::invalid("composition", other.to_string())),
        })
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Composition::Base => "base",
            Composition::Square => "square",
            Composition::Npl => "npl",
        };
        write!(f, "{s}")
    }
}

/// A fully named check: axiom, target structure, and bounds.
#[derive(Debug, Clone)]
pub struct NamedCheck {
    pub axiom: AxiomName,
    pub structure: String,
    pub composition: Composition,
    /// Product name for compatibility checks.
    pub product: Option<String>,
    /// Vector-space dimension for morphism checks.
    pub dim: usize,
    /// Restrict the third argument of ternary axioms to single-block
    /// monomials (only meaningful on the free structures).
    pub z_single_block: bool,
    pub bounds: Bounds,
}

impl NamedCheck {
    pub fn new(axiom: AxiomName, structure: impl Into<String>) -> Self {
        NamedCheck {
            axiom,
            structure: structure.into(),
            composition: Composition::Base,
            product: None,
            dim: 1,
            z_single_block: false,
            bounds: Bounds::default(),
        }
    }

    pub fn target_name(&self) -> String {
        match self.composition {
            Composition::Base => self.structure.clone(),
            c => format!("{}/{c}", self.structure),
        }
    }
}

/// The registered structure names.
pub fn structure_names() -> Vec<&'static str> {
    vec!["identity", "com+", "as+", "cycles", "exp", "pi", "arrow-pi", "permutations", "end"]
}

/// The registered product names.
pub fn product_names() -> Vec<&'static str> {
    vec!["concat-e", "shuffle-l", "concat-l"]
}

fn run_on<S: Structure>(s: &S, check: &NamedCheck) -> CheckReport
where
    S::T: 'static,
{
    let mut report = run_axiom_filtered(s, check.axiom, &check.bounds, None);
    report.target = check.target_name();
    report
}

/// Single-block filter over monomial-like terms: the term's underlying
/// partition has one block exactly. Falls back to "whole ground set is one
/// block" via the partition of the term's factors.
fn run_on_free<Q: Structure>(
    s: &crate::freecomm::NplFreeStructure<Q>,
    check: &NamedCheck,
) -> CheckReport {
    let mut report = if check.z_single_block {
        run_axiom_filtered(
            s,
            check.axiom,
            &check.bounds,
            Some(&|z: &crate::freecomm::Monomial<Q::T>| z.block_count() == 1),
        )
    } else {
        run_axiom_filtered(s, check.axiom, &check.bounds, None)
    };
    report.target = check.target_name();
    report
}

fn run_on_square<Q, M>(
    s: &crate::freecomm::SquareStructure<Q, M>,
    check: &NamedCheck,
) -> CheckReport
where
    Q: Structure,
    M: crate::species::Product<T = Q::T>,
{
    let mut report = if check.z_single_block {
        run_axiom_filtered(
            s,
            check.axiom,
            &check.bounds,
            Some(&|z: &crate::freecomm::Monomial<Q::T>| z.block_count() == 1),
        )
    } else {
        run_axiom_filtered(s, check.axiom, &check.bounds, None)
    };
    report.target = check.target_name();
    report
}

/// Runs a named check against the registry.
pub fn run_named_check(check: &NamedCheck) -> Result<CheckReport> {
    if check.axiom == AxiomName::MuCompat {
        let product = check
            .product
            .as_deref()
            .ok_or_else(|| Error::invalid("check", "MU-COMPAT needs a product"))?;
        let mut report = match (check.structure.as_str(), product) {
            ("com+", "concat-e") => run_mu_compat(&com_plus(), &concat_product_e(), &check.bounds),
            ("as+", "shuffle-l") => run_mu_compat(&as_plus(), &shuffle_product_l(), &check.bounds),
            ("as+", "concat-l") => run_mu_compat(&as_plus(), &concat_product_l(), &check.bounds),
            (s, p) => {
                return Err(Error::UnknownStructure(format!(
                    "no compatibility pairing for ({s}, {p})"
                )))
            }
        };
        report.target = format!("({}, {})", check.structure, product);
        return Ok(report);
    }
    if check.axiom == AxiomName::Morphism {
        if check.structure != "end" {
            return Err(Error::UnknownStructure(format!(
                "morphism checks are registered for \"end\", not {:?}",
                check.structure
            )));
        }
        let end = EndBasis { dim: check.dim };
        let dim = check.dim;
        let mut report =
            check_palgebra_morphism(&end, dim, &move |t| Ok(end_term_to_map(t, dim)), &check.bounds)?;
        report.target = format!("end(dim={dim}) inclusion");
        return Ok(report);
    }
    if check.z_single_block {
        // only the free structures carry the block filter
        return Ok(match (check.structure.as_str(), check.composition) {
            ("exp", _) => run_on_free(&exp_npl_structure(), check),
            ("pi", Composition::Npl) => run_on_free(&pi_npl_structure(), check),
            ("pi", Composition::Square) => run_on_square(&pi_square_structure(), check),
            ("arrow-pi", Composition::Npl) => run_on_free(&arrowpi_npl_structure(), check),
            ("arrow-pi", Composition::Square) => run_on_square(&arrowpi_square_structure(), check),
            ("permutations", _) => run_on_free(&perm_npl_structure(), check),
            (s, c) => {
                return Err(Error::UnknownStructure(format!(
                    "single-block filter does not apply to {s}/{c}"
                )))
            }
        });
    }
    Ok(match (check.structure.as_str(), check.composition) {
        ("identity", Composition::Base) => run_on(&identity_operad(), check),
        ("com+", Composition::Base) => run_on(&com_plus(), check),
        ("as+", Composition::Base) => run_on(&as_plus(), check),
        ("cycles", Composition::Base | Composition::Npl) => run_on(&cycles_npl(), check),
        ("exp", Composition::Base | Composition::Npl) => run_on(&exp_npl_structure(), check),
        ("pi", Composition::Npl) => run_on(&pi_npl_structure(), check),
        ("pi", Composition::Square) => run_on(&pi_square_structure(), check),
        ("arrow-pi", Composition::Npl) => run_on(&arrowpi_npl_structure(), check),
        ("arrow-pi", Composition::Square) => run_on(&arrowpi_square_structure(), check),
        ("permutations", Composition::Base | Composition::Npl) => {
            run_on(&perm_npl_structure(), check)
        }
        ("end", Composition::Base) => run_on(&EndBasis { dim: check.dim }, check),
        (s, c) => {
            return Err(Error::UnknownStructure(format!("{s} with composition {c}")))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_checks_dispatch() {
        let mut check = NamedCheck::new(AxiomName::A2, "pi");
        check.composition = Composition::Square;
        check.bounds = Bounds::with_max_total(4);
        let report = run_named_check(&check).unwrap();
        assert!(report.passed(), "{}", report.summary_line());
        assert_eq!(report.target, "pi/square");

        let mut check = NamedCheck::new(AxiomName::MuCompat, "as+");
        check.product = Some("concat-l".into());
        check.bounds = Bounds { mu_max_outer: 3, mu_max_inner: 2, ..Bounds::default() };
        assert!(!run_named_check(&check).unwrap().passed());

        assert!(run_named_check(&NamedCheck::new(AxiomName::A1, "nope")).is_err());
    }

    #[test]
    fn morphism_dispatch() {
        let mut check = NamedCheck::new(AxiomName::Morphism, "end");
        check.dim = 1;
        check.bounds = Bounds::with_max_total(3);
        let report = run_named_check(&check).unwrap();
        assert!(report.passed(), "{}", report.summary_line());
    }
}
