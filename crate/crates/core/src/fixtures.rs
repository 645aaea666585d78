//! Bundled example designs.
//!
//! Table-style designs are stored column by column as effect labels; the
//! split-lot designs are given by one basis per flat.

use crate::error::{Error, Result};
use crate::geometry::{flat_from_basis, Design, Flat, Spread, Star};
use crate::gf2::Point;

pub const NAMES: &[&str] = &[
    "spreadn4t2a",
    "spreadn4t2b",
    "spreadn4t2c",
    "spreadn6t3a",
    "spreadn6t3b",
    "spread_IC1",
    "spread_IC2",
    "starn5t3a",
    "starn5t3b",
    "star_PA1",
    "star_PA2",
];

const SPREADN4T2A: &[&[&str]] = &[
    &["D", "BC", "BCD"],
    &["C", "AB", "ABC"],
    &["B", "ACD", "ABCD"],
    &["A", "BD", "ABD"],
    &["CD", "AC", "AD"],
];

const SPREADN4T2B: &[&[&str]] = &[
    &["A", "CD", "ACD"],
    &["C", "ABCD", "ABD"],
    &["D", "B", "BD"],
    &["ABC", "AD", "BCD"],
    &["AC", "AB", "BC"],
];

// a second 1-spread of P_4 with a different V-criterion value
const SPREADN4T2C: &[&[&str]] = &[
    &["ABC", "D", "ABCD"],
    &["CD", "ACD", "A"],
    &["AD", "AB", "BD"],
    &["ABD", "BCD", "AC"],
    &["B", "C", "BC"],
];

const SPREADN6T3A: &[&[&str]] = &[
    &["A", "EF", "AEF", "BCE", "ABCE", "BCF", "ABCF"],
    &["B", "AF", "ABF", "CDF", "BCDF", "ACD", "ABCD"],
    &["C", "AB", "ABC", "ADE", "ACDE", "BDE", "BCDE"],
    &["D", "BC", "BCD", "BEF", "BDEF", "CEF", "CDEF"],
    &["E", "CD", "CDE", "ACF", "ACEF", "ADF", "ADEF"],
    &["F", "DE", "DEF", "ABD", "ABDF", "ABE", "ABEF"],
    &["BD", "BF", "DF", "ACE", "ABCDE", "ABCEF", "ACDEF"],
    &["AC", "CE", "AE", "BDF", "ABCDF", "BCDEF", "ABDEF"],
    &["AD", "BE", "ABDE", "CF", "ACDF", "BCEF", "ABCDEF"],
];

const SPREADN6T3B: &[&[&str]] = &[
    &["ABC", "AEF", "BCEF", "ADEF", "BCDEF", "D", "ABCD"],
    &["E", "ABCEF", "ABCF", "BDE", "BD", "ACDF", "ACDEF"],
    &["DF", "ABCE", "ABCDEF", "C", "CDF", "ABE", "ABDEF"],
    &["B", "DEF", "BDEF", "AF", "ABF", "ADE", "ABDE"],
    &["A", "BDF", "ABDF", "ABCDE", "BCDE", "ACEF", "CEF"],
    &["EF", "AB", "ABEF", "ACE", "ACF", "BCE", "BCF"],
    &["BE", "F", "BEF", "BCDF", "CDEF", "BCD", "CDE"],
    &["ABCDF", "ADF", "BC", "BF", "ACD", "ABD", "CF"],
    &["AC", "AE", "CE", "DE", "ACDE", "AD", "CD"],
];

const SPREAD_IC1: &[[&str; 3]] = &[
    ["A", "EF", "BCE"],
    ["B", "AF", "CDF"],
    ["C", "AB", "ADE"],
    ["D", "BC", "BEF"],
    ["E", "CD", "ACF"],
    ["F", "DE", "ABD"],
    ["BD", "BF", "ACE"],
    ["AC", "CE", "BDF"],
    ["AD", "BE", "CF"],
];

const SPREAD_IC2: &[[&str; 3]] = &[
    ["A", "BD", "CF"],
    ["B", "AF", "CE"],
    ["C", "BF", "DE"],
    ["D", "AC", "BE"],
    ["E", "AB", "DF"],
    ["F", "AE", "CD"],
    ["AD", "BC", "EF"],
    ["ACE", "ADF", "BEF"],
    ["ABC", "ADE", "CEF"],
];

const STARN5T3A: &[&[&str]] = &[
    &["A", "E", "CDE", "AE", "ACD", "ACDE", "CD"],
    &["D", "BC", "BCD", "AD", "ABC", "ABCD", "A"],
    &["C", "BDE", "BCDE", "AC", "ABDE", "ABCDE", "A"],
    &["B", "BCE", "CE", "AB", "ACE", "A", "ABCE"],
    &["DE", "BD", "BE", "A", "ABD", "ABE", "ADE"],
];

const STARN5T3B: &[&[&str]] = &[
    &["ABC", "AC", "CDE", "B", "BCDE", "ABDE", "ADE"],
    &["AE", "DE", "AD", "BCE", "ABCDE", "BCD", "ABC"],
    &["D", "C", "CD", "ABCD", "AB", "ABD", "ABC"],
    &["E", "ACDE", "ACD", "ABCE", "BD", "ABC", "BDE"],
    &["CE", "A", "ACE", "ABC", "BC", "BE", "ABE"],
];

const STAR_PA1: &[&[&str]] = &[&["A", "B", "CDE"], &["C", "AD", "BE"], &["D", "E", "ABC"]];

const STAR_PA2: &[&[&str]] = &[
    &["A", "B", "DE", "ACD"],
    &["C", "AB", "DE", "ACD"],
    &["D", "E", "AB", "ACD"],
];

fn labels_to_sets<S: AsRef<[&'static str]>>(n: usize, columns: &[S]) -> Vec<Vec<Point>> {
    columns
        .iter()
        .map(|c| {
            c.as_ref()
                .iter()
                .map(|l| Point::parse(l, n).expect("fixture labels are valid"))
                .collect()
        })
        .collect()
}

fn flats_from_bases<S: AsRef<[&'static str]>>(n: usize, bases: &[S]) -> Vec<Flat> {
    labels_to_sets(n, bases)
        .iter()
        .map(|b| flat_from_basis(b).expect("fixture bases are independent"))
        .collect()
}

pub fn load(name: &str) -> Result<Design> {
    let design: Design = match name {
        "spreadn4t2a" => Spread::from_sets(4, 2, labels_to_sets(4, SPREADN4T2A))?.into(),
        "spreadn4t2b" => Spread::from_sets(4, 2, labels_to_sets(4, SPREADN4T2B))?.into(),
        "spreadn4t2c" => Spread::from_sets(4, 2, labels_to_sets(4, SPREADN4T2C))?.into(),
        "spreadn6t3a" => Spread::from_sets(6, 3, labels_to_sets(6, SPREADN6T3A))?.into(),
        "spreadn6t3b" => Spread::from_sets(6, 3, labels_to_sets(6, SPREADN6T3B))?.into(),
        "spread_IC1" => Spread::new(6, 3, flats_from_bases(6, SPREAD_IC1))?.into(),
        "spread_IC2" => Spread::new(6, 3, flats_from_bases(6, SPREAD_IC2))?.into(),
        "starn5t3a" => Star::from_sets(5, labels_to_sets(5, STARN5T3A))?.into(),
        "starn5t3b" => Star::from_sets(5, labels_to_sets(5, STARN5T3B))?.into(),
        "star_PA1" => Star::partial(5, flats_from_bases(5, STAR_PA1))?.into(),
        "star_PA2" => Star::partial(5, flats_from_bases(5, STAR_PA2))?.into(),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(design)
}

pub fn spread(name: &str) -> Result<Spread> {
    match load(name)? {
        Design::Spread(s) => Ok(s),
        Design::Star(_) => Err(Error::UnknownFixture(name.to_string())),
    }
}

pub fn star(name: &str) -> Result<Star> {
    match load(name)? {
        Design::Star(s) => Ok(s),
        Design::Spread(_) => Err(Error::UnknownFixture(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        for name in NAMES {
            load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(matches!(load("nope"), Err(Error::UnknownFixture(_))));
        assert!(spread("starn5t3a").is_err());
    }

    #[test]
    fn nuclei() {
        let a = star("starn5t3a").unwrap();
        assert_eq!(a.nucleus().points(), &[Point::parse("A", 5).unwrap()]);
        let b = star("starn5t3b").unwrap();
        assert_eq!(b.nucleus().points(), &[Point::parse("ABC", 5).unwrap()]);
        let pa1 = star("star_PA1").unwrap();
        assert_eq!(pa1.nucleus().points(), &[Point::parse("ABCDE", 5).unwrap()]);
        assert!(!pa1.is_covering());
        let pa2 = star("star_PA2").unwrap();
        let mut want: Vec<Point> = ["DE", "ACD", "AB", "ACE", "ABDE", "BCD", "BCE"]
            .iter()
            .map(|l| Point::parse(l, 5).unwrap())
            .collect();
        want.sort();
        assert_eq!(pa2.nucleus().points(), want.as_slice());
        assert!(pa2.is_covering());
    }

    #[test]
    fn ic1_first_flat_from_basis() {
        let s = spread("spread_IC1").unwrap();
        let first = &s.flats()[0];
        for l in ["A", "EF", "AEF", "BCE", "ABCE", "BCF", "ABCF"] {
            assert!(first.contains(Point::parse(l, 6).unwrap()));
        }
        // the written-out table and the basis form describe the same spread
        let table = spread("spreadn6t3a").unwrap();
        assert_eq!(s.signature(), table.signature());
    }
}
