use crate::GroupError;

/// Dimension and topology facts for one classical group at a fixed parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCatalogEntry {
    pub name: String,
    pub dimension: usize,
    pub compact: bool,
    pub connected: bool,
    pub simply_connected: bool,
    pub abelian: bool,
}

/// Looks up a classical group family at parameter `n`. Recognized families:
/// GL, SL, O, SO, Spin, U, SU, Sp (real symplectic, acting on R^{2n}).
pub fn catalog_lookup(name: &str, n: usize) -> Result<GroupCatalogEntry, GroupError> {
    let entry = match name {
        "GL" => GroupCatalogEntry {
            name: format!("GL({n},R)"),
            dimension: n * n,
            compact: false,
            connected: false,
            simply_connected: false,
            abelian: n <= 1,
        },
        "SL" => GroupCatalogEntry {
            name: format!("SL({n},R)"),
            dimension: n * n - 1,
            compact: n <= 1,
            connected: true,
            simply_connected: true,
            abelian: n <= 1,
        },
        "O" => GroupCatalogEntry {
            name: format!("O({n})"),
            dimension: n * (n - 1) / 2,
            compact: true,
            connected: false,
            simply_connected: false,
            abelian: n <= 1,
        },
        "SO" => GroupCatalogEntry {
            name: format!("SO({n})"),
            dimension: n * (n - 1) / 2,
            compact: true,
            connected: true,
            simply_connected: n <= 1,
            abelian: n <= 2,
        },
        "Spin" => GroupCatalogEntry {
            name: format!("Spin({n})"),
            dimension: n * (n - 1) / 2,
            compact: true,
            connected: true,
            simply_connected: true,
            abelian: n <= 2,
        },
        "U" => GroupCatalogEntry {
            name: format!("U({n})"),
            dimension: n * n,
            compact: true,
            connected: true,
            simply_connected: false,
            abelian: n <= 1,
        },
        "SU" => GroupCatalogEntry {
            name: format!("SU({n})"),
            dimension: n * n - 1,
            compact: true,
            connected: true,
            simply_connected: true,
            abelian: n <= 1,
        },
        "Sp" => GroupCatalogEntry {
            name: format!("Sp({},R)", 2 * n),
            dimension: 2 * n * n + n,
            compact: false,
            connected: true,
            simply_connected: false,
            abelian: false,
        },
        _ => return Err(GroupError::UnknownGroup { name: name.to_string() }),
    };
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_row() {
        let e = catalog_lookup("SO", 3).unwrap();
        assert_eq!(e.dimension, 3);
        assert!(e.compact && e.connected && !e.simply_connected && !e.abelian);
        assert_eq!(e.name, "SO(3)");
    }

    #[test]
    fn gl2_row() {
        let e = catalog_lookup("GL", 2).unwrap();
        assert_eq!(e.dimension, 4);
        assert!(!e.compact && !e.connected);
    }

    #[test]
    fn su2_row() {
        let e = catalog_lookup("SU", 2).unwrap();
        assert_eq!(e.dimension, 3);
        assert!(e.compact && e.simply_connected);
    }

    #[test]
    fn sp_dimension_counts_the_full_symplectic_group() {
        let e = catalog_lookup("Sp", 2).unwrap();
        assert_eq!(e.name, "Sp(4,R)");
        assert_eq!(e.dimension, 10);
        assert!(!e.compact && e.connected);
    }

    #[test]
    fn spin_covers_so() {
        let spin = catalog_lookup("Spin", 4).unwrap();
        let so = catalog_lookup("SO", 4).unwrap();
        assert_eq!(spin.dimension, so.dimension);
        assert!(spin.simply_connected && !so.simply_connected);
    }

    #[test]
    fn unknown_family_is_an_error() {
        assert!(matches!(
            catalog_lookup("E8", 8),
            Err(GroupError::UnknownGroup { .. })
        ));
    }
}
