//! Benchmark fixtures.

use gradreg_core::verify::{downup, kxy};
use gradreg_core::{compute_groebner, Field, GroebnerData, ModulePresentation, Side};

pub fn downup_data(dmax: u32) -> GroebnerData {
    compute_groebner(&downup(Field::Rational), dmax).expect("down-up presents")
}

pub fn plane_data(field: Field, dmax: u32) -> GroebnerData {
    compute_groebner(&kxy(field), dmax).expect("k[x,y] presents")
}

pub fn trivial(gd: &GroebnerData) -> ModulePresentation {
    ModulePresentation::trivial(gd.algebra(), Side::Left)
}

/// `A/(x^2, xy, y^3)`, a module with a few nonlinear syzygies.
pub fn monomial_quotient(gd: &GroebnerData) -> ModulePresentation {
    ModulePresentation::cyclic("A/(x^2,x*y,y^3)", gd.algebra(), Side::Left, &["x^2", "x*y", "y^3"])
        .expect("monomials parse")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        let gd = plane_data(Field::Rational, 6);
        assert_eq!(gd.dims(), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(monomial_quotient(&gd).relations().len(), 3);
        assert!(trivial(&gd).cover().shifts() == [0]);
    }
}
