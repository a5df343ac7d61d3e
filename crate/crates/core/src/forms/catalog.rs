use super::form::UnimodularForm;
use crate::error::{Error, Result};

/// Names accepted by [`named_form`]; `#` joins them into direct sums.
pub const FORM_CATALOG: &[&str] = &["S4", "CP2", "CP2bar", "S2xS2", "E8"];

pub fn hyperbolic() -> UnimodularForm {
    UnimodularForm::from_rows(&[[0, 1], [1, 0]]).expect("U is unimodular")
}

/// The positive definite E8 lattice as the Cartan matrix of the E8 root system.
pub fn e8() -> UnimodularForm {
    // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
    let mut rows = [[0i64; 8]; 8];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
        rows[a][b] = -1;
        rows[b][a] = -1;
    }
    UnimodularForm::from_rows(&rows).expect("E8 is unimodular")
}

fn single(name: &str) -> Option<UnimodularForm> {
    Some(match name {
        "S4" => UnimodularForm::empty(),
        "CP2" => UnimodularForm::from_rows(&[[1]]).expect("unimodular"),
        "CP2bar" => UnimodularForm::from_rows(&[[-1]]).expect("unimodular"),
        "S2xS2" => hyperbolic(),
        "E8" => e8(),
        _ => return None,
    })
}

/// Resolves a catalog name such as `CP2` or a `#`-joined sum like
/// `CP2#CP2bar#S2xS2` to its intersection form.
pub fn named_form(name: &str) -> Result<UnimodularForm> {
    let mut acc = UnimodularForm::empty();
    for part in name.split('#') {
        let part = part.trim();
        let f = single(part).ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))?;
        acc = acc.direct_sum(&f);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Parity;

    #[test]
    fn e8_invariants() {
        let f = e8();
        assert_eq!(f.rank(), 8);
        assert_eq!(f.signature(), 8);
        assert_eq!(f.parity(), Parity::Even);
    }

    #[test]
    fn joined_names() {
        let f = named_form("CP2#CP2bar").unwrap();
        assert_eq!((f.rank(), f.signature(), f.parity()), (2, 0, Parity::Odd));
        assert_eq!(named_form("S4#S2xS2").unwrap(), hyperbolic());
        assert!(matches!(
            named_form("K3"),
            Err(Error::UnknownCatalogEntry(_))
        ));
        assert!(named_form("CP2#").is_err());
    }
}
