//! Shared fixtures for the integration suites: worked-example tables and
//! cached catalogs.

#![allow(dead_code)]

use std::sync::OnceLock;

use sexpand_core::{enumerate, Catalog, CayleyTable, Equivalence};

pub fn table(rows: &[&[usize]]) -> CayleyTable {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    CayleyTable::from_rows(&rows).expect("fixture tables are well-formed")
}

pub fn z2() -> CayleyTable {
    table(&[&[1, 2], &[2, 1]])
}

pub fn s_ex1() -> CayleyTable {
    table(&[&[1, 2, 3], &[2, 1, 2], &[3, 2, 1]])
}

pub fn s_ex2() -> CayleyTable {
    table(&[&[1, 1, 1], &[1, 2, 3], &[1, 1, 1]])
}

/// Order-3 catalog entry #16, the semisimplicity hit of the order-3 scan.
pub fn table16() -> CayleyTable {
    table(&[&[1, 1, 3], &[1, 2, 3], &[3, 3, 1]])
}

pub fn s_n3() -> CayleyTable {
    table(&[&[4, 1, 4, 4], &[1, 2, 3, 4], &[4, 3, 4, 4], &[4, 4, 4, 4]])
}

pub fn table42() -> CayleyTable {
    table(&[&[1, 1, 1, 1], &[1, 1, 1, 2], &[1, 1, 1, 3], &[1, 2, 3, 4]])
}

pub fn s770() -> CayleyTable {
    table(&[
        &[1, 1, 1, 1, 1],
        &[1, 2, 1, 1, 5],
        &[1, 1, 3, 4, 1],
        &[1, 1, 4, 3, 1],
        &[1, 5, 1, 1, 2],
    ])
}

/// Catalogs are expensive enough to share across tests.
pub fn catalog(order: usize) -> &'static Catalog {
    static CATS: [OnceLock<Catalog>; 6] = [const { OnceLock::new() }; 6];
    CATS[order - 1]
        .get_or_init(|| enumerate(order, Equivalence::IsoAndAnti).expect("order in range"))
}

pub fn commutative(order: usize) -> &'static Catalog {
    static CATS: [OnceLock<Catalog>; 6] = [const { OnceLock::new() }; 6];
    CATS[order - 1].get_or_init(|| catalog(order).filter_commutative())
}
