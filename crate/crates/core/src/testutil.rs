//! Worked-example tables shared by the unit tests.

pub mod tables {
    use crate::cayley::CayleyTable;

    fn t(rows: &[&[usize]]) -> CayleyTable {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        CayleyTable::from_rows(&rows).expect("fixture tables are well-formed")
    }

    pub fn z2() -> CayleyTable {
        t(&[&[1, 2], &[2, 1]])
    }

    pub fn s_ex1() -> CayleyTable {
        t(&[&[1, 2, 3], &[2, 1, 2], &[3, 2, 1]])
    }

    pub fn s_ex2() -> CayleyTable {
        t(&[&[1, 1, 1], &[1, 2, 3], &[1, 1, 1]])
    }

    pub fn s_ex3() -> CayleyTable {
        t(&[&[1, 1, 3], &[1, 2, 3], &[3, 3, 1]])
    }

    pub fn s_ex4() -> CayleyTable {
        t(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 4, 1, 2], &[4, 1, 2, 3]])
    }

    pub fn s_ex5() -> CayleyTable {
        t(&[
            &[5, 4, 2, 1, 3],
            &[4, 3, 5, 2, 1],
            &[2, 5, 1, 3, 4],
            &[1, 2, 3, 4, 5],
            &[3, 1, 4, 5, 2],
        ])
    }

    pub fn s_ex6() -> CayleyTable {
        t(&[
            &[1, 1, 1, 1, 5, 5, 1, 1, 5, 5],
            &[1, 2, 1, 1, 5, 5, 1, 1, 5, 5],
            &[3, 3, 3, 3, 6, 6, 3, 3, 6, 6],
            &[3, 3, 3, 4, 6, 6, 3, 3, 6, 6],
            &[1, 1, 1, 1, 5, 5, 5, 5, 1, 1],
            &[3, 3, 3, 3, 6, 6, 6, 6, 3, 3],
            &[1, 1, 3, 3, 5, 6, 7, 8, 9, 10],
            &[1, 1, 3, 3, 5, 6, 8, 7, 10, 9],
            &[3, 3, 1, 1, 6, 5, 9, 10, 8, 7],
            &[3, 3, 1, 1, 6, 5, 10, 9, 7, 8],
        ])
    }

    /// `S_E^(2)` with `lambda_0..lambda_3` relabeled `1..4`; also the
    /// order-4 selector example.
    pub fn s_e2() -> CayleyTable {
        t(&[&[1, 2, 3, 4], &[2, 3, 4, 4], &[3, 4, 4, 4], &[4, 4, 4, 4]])
    }

    pub fn s_k3() -> CayleyTable {
        t(&[&[4, 4, 1, 4], &[4, 2, 2, 4], &[1, 2, 3, 4], &[4, 4, 4, 4]])
    }

    pub fn s_n1() -> CayleyTable {
        t(&[&[4, 4, 1, 4], &[4, 2, 4, 4], &[1, 4, 3, 4], &[4, 4, 4, 4]])
    }

    pub fn s_n2() -> CayleyTable {
        t(&[&[2, 3, 4, 4], &[3, 4, 4, 4], &[4, 4, 4, 4], &[4, 4, 4, 4]])
    }

    pub fn s_n3() -> CayleyTable {
        t(&[&[4, 1, 4, 4], &[1, 2, 3, 4], &[4, 3, 4, 4], &[4, 4, 4, 4]])
    }

    /// `S_S3` with `lambda_0..lambda_3` relabeled `1..4`.
    pub fn s_s3() -> CayleyTable {
        t(&[&[3, 4, 1, 4], &[4, 2, 4, 4], &[1, 4, 3, 4], &[4, 4, 4, 4]])
    }

    /// `S_S2` with `lambda_0..lambda_2` relabeled `1..3`.
    pub fn s_s2() -> CayleyTable {
        t(&[&[1, 2, 3], &[2, 3, 2], &[3, 2, 3]])
    }

    /// The order-4 cyclic table printed for `S_M^(3)`.
    pub fn s_m3() -> CayleyTable {
        t(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 4, 1, 2], &[4, 1, 2, 3]])
    }

    pub fn s_m4() -> CayleyTable {
        t(&[
            &[1, 2, 3, 4, 5],
            &[2, 3, 4, 5, 2],
            &[3, 4, 5, 2, 3],
            &[4, 5, 2, 3, 4],
            &[5, 2, 3, 4, 5],
        ])
    }

    /// `S_E^(5)`, order 7.
    pub fn se5() -> CayleyTable {
        t(&[
            &[1, 2, 3, 4, 5, 6, 7],
            &[2, 3, 4, 5, 6, 7, 7],
            &[3, 4, 5, 6, 7, 7, 7],
            &[4, 5, 6, 7, 7, 7, 7],
            &[5, 6, 7, 7, 7, 7, 7],
            &[6, 7, 7, 7, 7, 7, 7],
            &[7, 7, 7, 7, 7, 7, 7],
        ])
    }

    /// `S_M^(6)`, order 7.
    pub fn sm6() -> CayleyTable {
        t(&[
            &[1, 2, 3, 4, 5, 6, 7],
            &[2, 3, 4, 5, 6, 7, 2],
            &[3, 4, 5, 6, 7, 2, 3],
            &[4, 5, 6, 7, 2, 3, 4],
            &[5, 6, 7, 2, 3, 4, 5],
            &[6, 7, 2, 3, 4, 5, 6],
            &[7, 2, 3, 4, 5, 6, 7],
        ])
    }

    /// Catalog entry #42 of order 4, printed in the isomorphism example.
    pub fn table42() -> CayleyTable {
        t(&[&[1, 1, 1, 1], &[1, 1, 1, 2], &[1, 1, 1, 3], &[1, 2, 3, 4]])
    }

    /// Catalog entry #770 of order 5, the semisimplicity-preserving
    /// expansion example.
    pub fn s770() -> CayleyTable {
        t(&[
            &[1, 1, 1, 1, 1],
            &[1, 2, 1, 1, 5],
            &[1, 1, 3, 4, 1],
            &[1, 1, 4, 3, 1],
            &[1, 5, 1, 1, 2],
        ])
    }
}
