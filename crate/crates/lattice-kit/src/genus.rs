use std::fmt;

use crate::discform::{disc_form, fq_isometric};
use crate::error::LatticeError;
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusVerdict {
    pub signatures: [(usize, usize); 2],
    pub disc_orders: [u64; 2],
    pub forms_isometric: bool,
    pub indefinite: bool,
    pub matches: bool,
}

impl GenusVerdict {
    pub fn conclusion(&self) -> &'static str {
        match (self.matches, self.indefinite) {
            (false, _) => "no match",
            (true, true) => "isomorphic by Nikulin uniqueness (cited)",
            (true, false) => "same genus",
        }
    }
}

impl fmt::Display for GenusVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: signatures {:?} vs {:?}, disc orders {} vs {}",
            self.conclusion(),
            self.signatures[0],
            self.signatures[1],
            self.disc_orders[0],
            self.disc_orders[1]
        )
    }
}

/// Compares rank, signature and discriminant forms. For indefinite lattices of
/// the sizes used here this is the cited uniqueness criterion; the theorem is not
/// re-proved. Failures of the underlying computations read as "no match".
pub fn genus_match_indefinite(a: &Lattice, b: &Lattice) -> GenusVerdict {
    let sig = |l: &Lattice| l.signature().unwrap_or((0, 0));
    let signatures = [sig(a), sig(b)];
    let disc_orders = [a.disc_order(), b.disc_order()];
    let forms_isometric = disc_orders[0] == disc_orders[1]
        && matches!(
            (disc_form(a), disc_form(b)),
            (Ok(x), Ok(y)) if fq_isometric(&x, &y).unwrap_or(false)
        );
    let indefinite = a.is_indefinite() && b.is_indefinite();
    let matches = a.rank() == b.rank() && signatures[0] == signatures[1] && forms_isometric && a.is_even() == b.is_even();
    GenusVerdict { signatures, disc_orders, forms_isometric, indefinite, matches }
}

/// Shorthand used by callers that only want a boolean, propagating bound errors.
pub fn same_genus(a: &Lattice, b: &Lattice) -> Result<bool, LatticeError> {
    if a.rank() != b.rank() || a.signature()? != b.signature()? || a.disc_order() != b.disc_order() {
        return Ok(false);
    }
    fq_isometric(&disc_form(a)?, &disc_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::lattice_sum;

    #[test]
    fn picard_identification() {
        let v = genus_match_indefinite(&lattice_sum("U+D8+D9").unwrap(), &lattice_sum("U+E8+D8+<-4>").unwrap());
        assert!(v.matches);
        assert_eq!(v.signatures[0], (1, 18));
        assert_eq!(v.disc_orders, [16, 16]);
        assert_eq!(v.conclusion(), "isomorphic by Nikulin uniqueness (cited)");
        let v = genus_match_indefinite(&lattice_sum("U+D8+D12").unwrap(), &lattice_sum("U+E8+D12").unwrap());
        assert!(!v.matches);
        let l = lattice_sum("U+D5+D12").unwrap();
        assert!(genus_match_indefinite(&l, &l).matches);
        assert!(same_genus(&l, &lattice_sum("U+D8+D9").unwrap()).unwrap());
    }
}
