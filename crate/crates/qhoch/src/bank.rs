//! The default derivations for the built-in algebras.

use qhoch_core::algebra::{Algebra, Derivation, HigherDerivation};
use qhoch_core::exactnum::SparseVec;

use crate::config::AlgebraSource;

/// Order of the Hasse–Schmidt derivations in the default bank.
pub const BANK_ORDER: usize = 4;

/// Euler on `k[ε]`; `x∂` and `x²∂` on `k[x]/(x^m)`; nothing otherwise.
pub fn derivations(source: &AlgebraSource, alg: &Algebra) -> Vec<(String, Derivation)> {
    let f = alg.field();
    match source {
        AlgebraSource::Dual => vec![("euler".into(), Derivation::euler(alg).expect("Euler derivation"))],
        AlgebraSource::TruncPoly(m) if *m >= 2 => {
            let mut out = vec![("x_d".into(), Derivation::euler(alg).expect("x d/dx"))];
            if *m >= 3 {
                let x = SparseVec::unit(1, f);
                out.push(("x2_d".into(), Derivation::truncpoly(alg, &x).expect("x^2 d/dx")));
            }
            out
        }
        _ => Vec::new(),
    }
}

/// `exp(t d)` for every bank derivation, plus the higher derivation
/// generated by the first two when there are two.
pub fn higher_derivations(source: &AlgebraSource, alg: &Algebra) -> Vec<(String, HigherDerivation)> {
    let ds = derivations(source, alg);
    let mut out: Vec<(String, HigherDerivation)> =
        ds.iter().map(|(name, d)| (format!("exp({name})"), HigherDerivation::exponential(alg, d, BANK_ORDER))).collect();
    if ds.len() >= 2 {
        let pair = [ds[0].1.clone(), ds[1].1.clone()];
        out.push((format!("mixed({}, {})", ds[0].0, ds[1].0), HigherDerivation::compose(alg, &pair, BANK_ORDER)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qhoch_core::algebra::hs_validate;
    use qhoch_core::exactnum::CyclotomicField;

    #[test]
    fn bank_contents() {
        let f = CyclotomicField::new(3).unwrap();
        let alg = Algebra::truncated_polynomial(&f, 3);
        let src = AlgebraSource::TruncPoly(3);
        assert_eq!(derivations(&src, &alg).len(), 2);
        let hs = higher_derivations(&src, &alg);
        assert_eq!(hs.len(), 3);
        for (_, h) in &hs {
            assert_eq!(h.order(), BANK_ORDER);
            assert!(hs_validate(&alg, h.maps()).is_ok());
        }
        assert!(derivations(&AlgebraSource::Field, &Algebra::base_field(&f)).is_empty());
    }
}
