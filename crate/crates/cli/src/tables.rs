//! The published regularity tables for quadrics, r(n+k, n) with 2 <= k <= 100.
//!
//! The second table was printed with the body of the third one, so its column labels
//! (27..51) do not match its contents. It is kept verbatim for reference; the
//! regression checks use it as data for n = 52..76.

use solvdeg::bounds::RegTable;

pub const TABLE_N002_026: &str = include_str!("../data/r_table_n002_026.tsv");
pub const TABLE_N027_051_AS_PRINTED: &str = include_str!("../data/r_table_n027_051_as_printed.tsv");
pub const TABLE_N052_076: &str = include_str!("../data/r_table_n052_076.tsv");
pub const TABLE_N077_100: &str = include_str!("../data/r_table_n077_100.tsv");

pub fn parse(text: &str) -> RegTable {
    RegTable::from_tsv(text).expect("embedded table is well formed")
}

/// The printed second table relabelled with n = 52..76.
pub fn table_two_relabelled() -> RegTable {
    let mut t = parse(TABLE_N027_051_AS_PRINTED);
    t.ns = (52..=76).collect();
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for (text, lo, hi) in [
            (TABLE_N002_026, 2, 26),
            (TABLE_N027_051_AS_PRINTED, 27, 51),
            (TABLE_N052_076, 52, 76),
            (TABLE_N077_100, 77, 100),
        ] {
            let t = parse(text);
            assert_eq!(t.ns, (lo..=hi).collect::<Vec<_>>());
            assert_eq!(t.ks, (2..=100).collect::<Vec<_>>());
        }
    }

    #[test]
    fn second_and_third_bodies_coincide() {
        assert_eq!(
            parse(TABLE_N027_051_AS_PRINTED).entries,
            parse(TABLE_N052_076).entries
        );
    }
}
