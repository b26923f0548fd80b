//! Reference fixtures: the printed generating functions for the 1st..6th
//! powers of the Fibonacci, Lucas, Pell, and Chebyshev-U sequences, and
//! the printed `H_k(1/100)` values for the first two tables.
//!
//! The factor strings are transcribed from the printed tables verbatim,
//! suspected misprints included; classifying them is the verifier's job,
//! so nothing here is "fixed up" by hand.

use crate::error::Error;
use crate::exactnum::{rat_parse, Rational};
use crate::horadam::{preset, HoradamParams};
use crate::polyring::{parse, Polynomial};

/// One printed table row: `H_k` as lists of numerator and denominator
/// factors, plus the printed evaluation at `x = 1/100` where the table has
/// that column.
#[derive(Clone, Debug)]
pub struct TableFixture {
    pub table_id: u8,
    pub k: u32,
    pub num_factors: &'static [&'static str],
    pub den_factors: &'static [&'static str],
    pub point_value: Option<&'static str>,
}

impl TableFixture {
    /// Parameters of the sequence family the table belongs to.
    pub fn params(&self) -> HoradamParams {
        preset(table_preset(self.table_id)).expect("table preset")
    }

    pub fn printed_num(&self) -> Polynomial {
        product(self.num_factors)
    }

    pub fn printed_den(&self) -> Polynomial {
        product(self.den_factors)
    }

    pub fn point(&self) -> Option<Result<Rational, Error>> {
        self.point_value.map(rat_parse)
    }
}

pub fn table_preset(table_id: u8) -> &'static str {
    match table_id {
        1 => "fibonacci",
        2 => "lucas",
        3 => "pell",
        4 => "chebyshev-u",
        _ => panic!("table id must be 1..=4"),
    }
}

fn product(factors: &[&str]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, f| {
        acc * parse(f).expect("fixture factor parses")
    })
}

/// All 24 printed rows, ordered by `(table_id, k)`.
pub fn table_fixtures() -> Vec<TableFixture> {
    let mut out = Vec::with_capacity(24);
    for (table_id, rows, points) in [
        (1u8, TABLE1_ROWS, Some(TABLE1_POINTS)),
        (2, TABLE2_ROWS, Some(TABLE2_POINTS)),
        (3, TABLE3_ROWS, None),
        (4, TABLE4_ROWS, None),
    ] {
        for (i, (num_factors, den_factors)) in rows.iter().enumerate() {
            out.push(TableFixture {
                table_id,
                k: i as u32 + 1,
                num_factors,
                den_factors,
                point_value: points.map(|p| p[i]),
            });
        }
    }
    out
}

pub fn table_fixture(table_id: u8, k: u32) -> Option<TableFixture> {
    table_fixtures()
        .into_iter()
        .find(|f| f.table_id == table_id && f.k == k)
}

type Row = (&'static [&'static str], &'static [&'static str]);

const TABLE1_ROWS: &[Row] = &[
    (&["x"], &["1 - x - x^2"]),
    (&["x", "1 - x"], &["1 + x", "1 - 3x + x^2"]),
    (&["x", "1 - 2x - x^2"], &["1 + x - x^2", "1 - 4x - x^2"]),
    (&["x", "1 + x", "1 - 5x + x^2"], &["1 - x", "1 + 3x + x^2", "1 - 7x + x^2"]),
    (
        &["x", "1 - 7x - 16x^2 + 7x^3 + x^4"],
        &["1 - x - x^2", "1 + 4x - x^2", "1 - 11x - x^2"],
    ),
    (
        &["x", "1 - x", "1 - 11x - 64x^2 - 11x^3 + x^4"],
        &["1 + x", "1 - 3x + x^2", "1 + 7x + x^2", "1 - 18x + x^2"],
    ),
];

const TABLE1_POINTS: &[&str] = &[
    "100/9899",
    "9900/979801",
    "979900/96940301",
    "31986700/3161716833",
    "9284070100/916060399199",
    "97194791100/9554028773189",
];

const TABLE2_ROWS: &[Row] = &[
    (&["2 - x"], &["1 - x - x^2"]),
    (&["4 - 3x - 5x^2"], &["1 + x", "1 - 3x + x^2"]),
    (&["8 - 5x - 36x^2 + 7x^3"], &["1 + x - x^2", "1 - 4x - x^2"]),
    (
        &["16 - 15x - 180x^2 + 156x^3 + 17x^4"],
        &["1 - x", "1 + 3x + x^2", "1 - 7x + x^2"],
    ),
    (
        &["32 - 45x - 835x^2 + 1440x^3 + 745x^4 - 31x^5"],
        &["1 - x - x^2", "1 + 4x - x^2", "1 - 11x - x^2"],
    ),
    (
        &["64 - 167x - 3708x^2 + 12323x^3 + 12597x^4 - 3188x^5 - 65x^6"],
        &["1 + x", "1 - 3x + x^2", "1 + 7x + x^2", "1 - 18x + x^2"],
    ),
];

const TABLE2_POINTS: &[&str] = &[
    "19900/9899",
    "3969500/979801",
    "794640700/96940301",
    "52773853900/3161716833",
    "31467947446900/916060399199",
    "688573873901500/9554028773189",
];

const TABLE3_ROWS: &[Row] = &[
    (&["x"], &["1 - 2x - x^2"]),
    (&["x", "1 - x"], &["1 + x", "1 - 6x + x^2"]),
    (&["x", "1 - 4x - x^2"], &["1 + 2x - x^2", "1 - 14x - x^2"]),
    (&["x", "1 + x", "1 - 14x + x^2"], &["1 - x", "1 + 6x + x^2", "1 - 34x - x^2"]),
    (
        &["x", "1 - 38x - 130x^2 + 38x^3 + x^4"],
        &["1 - 2x - x^2", "1 - 82x - x^2", "1 + 14x - x^2"],
    ),
    (
        &["x", "x - 1", "1 - 104x - 1210x^2 - 104x^3 + x^4"],
        &["1 + x", "1 + 34x + x^2", "1 - 6x + x^2", "1 - 198x + x^2"],
    ),
];

const TABLE4_ROWS: &[Row] = &[
    (&["1"], &["1 - 2tx + x^2"]),
    (&["1 + x"], &["1 - x", "(1 + x)^2 - 4xt^2"]),
    (
        &["1 + 4tx + x^2"],
        &["1 - 2tx + x^2", "1 + 2t(3 - 4t^2)x + x^2"],
    ),
    (
        &["1 + x", "(1 - x)^2 + 12t^2x"],
        &["1 - x", "(1 + x)^2 - 4t^2x", "16t^2(1 - t^2)x + (1 - x)^2"],
    ),
    (
        &["1 - 6tx + 2x^2 + 32t^3x + 96t^4x^2 + 32t^3x^3 - 32t^2x^2 - 6x^3t + x^4"],
        &["1 + 2t(3 - 4t^2)x + x^2", "1 - 2tx + x^2", "1 - 8t^3(4t^2 - 5)x - 10tx + x^2"],
    ),
    (
        &[
            "1 + x",
            "x^4 + 80t^4x^3 - 24x^3t^2 - 2x^2 - 480t^4x^2 + 640t^6x^2 + 88t^2x^2 + 80t^4x - 24t^2x + 1",
        ],
        &[
            "1 - x",
            "(1 + x)^2 - 4t^2x",
            "(1 - x)^2 + 16t^2(1 - t^2)x",
            "(1 + x)^2 - 4t^2(4t^2 - 3)^2x",
        ],
    ),
];

/// The printed closed forms `H_k = A_k / B_k` for `k = 1..4`, in the full
/// symbolic ring over `(x, p, q, a, b)`.
#[derive(Clone, Debug)]
pub struct CorollaryFixture {
    pub k: u32,
    pub a_text: &'static str,
    pub b_text: &'static str,
}

impl CorollaryFixture {
    pub fn printed_a(&self) -> Polynomial {
        parse(self.a_text).expect("corollary A_k parses")
    }

    pub fn printed_b(&self) -> Polynomial {
        parse(self.b_text).expect("corollary B_k parses")
    }
}

pub fn corollary_fixtures() -> Vec<CorollaryFixture> {
    vec![
        CorollaryFixture {
            k: 1,
            a_text: "a + x(b - ap)",
            b_text: "1 - px - x^2q",
        },
        CorollaryFixture {
            k: 2,
            a_text: "(a^2 + xb^2)(xq - 1)a^2 + a^2p^2x(xq + 1) - 2x^2pqab",
            b_text: "(1 + xq)(p^2x - (xq - 1)^2)",
        },
        CorollaryFixture {
            k: 3,
            a_text: "(a^3 + b^3x - a^3p^3x)(1 - q^3x^2) - 2xpq(a^3 + b^3x) - x^2a^3p^4q \
                     + 3ab^2x^2p^2q + 3ab^2x^3pq^3 - 3a^2bx^3p^2q^3 + 3a^2bx^2pq^2 - 3p^2x^2a^3q^2",
            b_text: "(1 + pqx - q^3x^2)(1 - 3pqx - p^3x - q^3x^2)",
        },
        CorollaryFixture {
            k: 4,
            a_text: "a^4 + (b^4 - a^4(p^4 + 3p^2q + q^2))x \
                     - q(5qa^4p^4 + b^4q + a^4q^3 + a^4p^6 + 7q^2a^4p^2 - 6qb^2a^2p^2 - 4b^3ap^3 - 4q^2ba^3p + 3b^4p^2)x^2 \
                     + q^3(-8qba^3p^3 - 3b^4p^2 + a^4q^3 + 5qa^4p^4 - 6b^2a^2p^4 - b^4q + a^4p^6 - 4q^2ba^3p + 8b^3ap^3 + 4q^2a^4p^2 + 4qb^3ap)x^3 \
                     + q^6(ap - b)^4x^4",
            b_text: "(1 - q^2x)((1 + q^2x)^2 + p^2qx)((1 - q^2x)^2 - p^2x(p^2 + 4q))",
        },
    ]
}

pub fn corollary_fixture(k: u32) -> Option<CorollaryFixture> {
    corollary_fixtures().into_iter().find(|f| f.k == k)
}
