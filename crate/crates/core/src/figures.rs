//! Energy-curve presets `fig1`..`fig8` and their exact regeneration check.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::par;
use crate::rational::Rational;
use crate::sweep::{compute_row, SweepRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    ECn,
    LeCn,
    LePlusCn,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::ECn => "e_cn",
            Quantity::LeCn => "le_cn",
            Quantity::LePlusCn => "le_plus_cn",
        }
    }
}

/// One plotted expression over a set of integer abscissas.
#[derive(Clone, Copy)]
pub struct Piece {
    pub quantity: Quantity,
    pub abscissas: &'static [u32],
    pub expr: fn(i64) -> Rational,
    pub label: &'static str,
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.quantity.as_str(), self.label)
    }
}

const ODD_3_21: &[u32] = &[3, 5, 7, 9, 11, 13, 15, 17, 19, 21];
const ODD_5_21: &[u32] = &[5, 7, 9, 11, 13, 15, 17, 19, 21];
const ODD_5_19: &[u32] = &[5, 7, 9, 11, 13, 15, 17, 19];
const EVEN_2_20: &[u32] = &[2, 4, 6, 8, 10, 12, 14, 16, 18, 20];
const EVEN_4_20: &[u32] = &[4, 6, 8, 10, 12, 14, 16, 18, 20];
const EVEN_4_20_NO_8: &[u32] = &[4, 6, 10, 12, 14, 16, 18, 20];
const ALL_2_20: &[u32] = &[
    2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20,
];
const ALL_2_20_NO_4: &[u32] = &[
    2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20,
];

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn piece(
    quantity: Quantity,
    abscissas: &'static [u32],
    label: &'static str,
    expr: fn(i64) -> Rational,
) -> Piece {
    Piece {
        quantity,
        abscissas,
        expr,
        label,
    }
}

impl Figure {
    pub const ALL: [Figure; 8] = [
        Figure::Fig1,
        Figure::Fig2,
        Figure::Fig3,
        Figure::Fig4,
        Figure::Fig5,
        Figure::Fig6,
        Figure::Fig7,
        Figure::Fig8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
            Figure::Fig7 => "fig7",
            Figure::Fig8 => "fig8",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Figure::Fig1 => "D_2n, n odd",
            Figure::Fig2 => "D_2n, n even",
            Figure::Fig3 => "T_4n",
            Figure::Fig4 => "U_(4,m), m odd",
            Figure::Fig5 => "SD_8n, n even",
            Figure::Fig6 => "SD_8n, n odd",
            Figure::Fig7 => "V_8n, n even",
            Figure::Fig8 => "V_8n, n odd",
        }
    }

    /// The instance plotted at abscissa `x`.
    pub fn instance(self, x: u32) -> FamilySpec {
        match self {
            Figure::Fig1 | Figure::Fig2 => FamilySpec::Dihedral { n: x },
            Figure::Fig3 => FamilySpec::Dicyclic { n: x },
            Figure::Fig4 => FamilySpec::Unm { n: 4, m: x },
            Figure::Fig5 | Figure::Fig6 => FamilySpec::Semidihedral { n: x },
            Figure::Fig7 | Figure::Fig8 => FamilySpec::V8n { n: x },
        }
    }

    pub fn pieces(self) -> Vec<Piece> {
        use Quantity::*;
        match self {
            Figure::Fig1 => vec![
                piece(ECn, ODD_3_21, "(x-3)(x-5)/2", |x| q((x - 3) * (x - 5), 2)),
                piece(LeCn, ODD_3_21, "(x-5)(x-3)(x-1)/(x+1)", |x| {
                    q((x - 5) * (x - 3) * (x - 1), x + 1)
                }),
                piece(LePlusCn, ODD_3_21, "(x-5)(x-3)(x+3)/(2(x+1))", |x| {
                    q((x - 5) * (x - 3) * (x + 3), 2 * (x + 1))
                }),
            ],
            Figure::Fig2 => vec![
                piece(ECn, EVEN_4_20, "(x-4)(x-6)/2", |x| q((x - 4) * (x - 6), 2)),
                piece(LeCn, EVEN_4_20, "3(x-6)(x-4)(x-2)/(2(x+2))", |x| {
                    q(3 * (x - 6) * (x - 4) * (x - 2), 2 * (x + 2))
                }),
                piece(LePlusCn, EVEN_4_20_NO_8, "(x-6)(x-4)(x-2)/(x+2)", |x| {
                    q((x - 6) * (x - 4) * (x - 2), x + 2)
                }),
                piece(LePlusCn, &[8], "28/5", |_| q(28, 5)),
            ],
            Figure::Fig3 => vec![
                piece(ECn, ALL_2_20, "2(x-2)(x-3)", |x| {
                    q(2 * (x - 2) * (x - 3), 1)
                }),
                piece(LeCn, ALL_2_20, "6(x-3)(x-2)(x-1)/(x+1)", |x| {
                    q(6 * (x - 3) * (x - 2) * (x - 1), x + 1)
                }),
                piece(LePlusCn, ALL_2_20_NO_4, "4(x-3)(x-2)(x-1)/(x+1)", |x| {
                    q(4 * (x - 3) * (x - 2) * (x - 1), x + 1)
                }),
                piece(LePlusCn, &[4], "28/5", |_| q(28, 5)),
            ],
            Figure::Fig4 => vec![
                piece(ECn, ODD_3_21, "4(2x^2-7x+9)", |x| {
                    q(4 * (2 * x * x - 7 * x + 9), 1)
                }),
                piece(LeCn, ODD_5_21, "4(2x-3)(5x^2-15x+4)/(x+1)", |x| {
                    q(4 * (2 * x - 3) * (5 * x * x - 15 * x + 4), x + 1)
                }),
                piece(LeCn, &[3], "24", |_| q(24, 1)),
                piece(LePlusCn, ODD_5_19, "8(x-3)(x-1)(4x-2)/(x+1)", |x| {
                    q(8 * (x - 3) * (x - 1) * (4 * x - 2), x + 1)
                }),
                piece(LePlusCn, &[3], "24", |_| q(24, 1)),
            ],
            Figure::Fig5 => vec![
                piece(ECn, EVEN_2_20, "2(2x-2)(2x-3)", |x| {
                    q(2 * (2 * x - 2) * (2 * x - 3), 1)
                }),
                piece(LeCn, EVEN_2_20, "12(x-1)(4(x-2)x+3)/(2x+1)", |x| {
                    q(12 * (x - 1) * (4 * (x - 2) * x + 3), 2 * x + 1)
                }),
                piece(LePlusCn, EVEN_4_20, "8(x-1)(2x-3)(2x-1)/(2x+1)", |x| {
                    q(8 * (x - 1) * (2 * x - 3) * (2 * x - 1), 2 * x + 1)
                }),
                piece(LePlusCn, &[2], "28/5", |_| q(28, 5)),
            ],
            Figure::Fig6 => vec![
                piece(ECn, ODD_3_21, "2(2x-3)(2x-4)+12", |x| {
                    q(2 * (2 * x - 3) * (2 * x - 4) + 12, 1)
                }),
                piece(LeCn, ODD_5_19, "4(2x-3)(5(x-3)x+4)/(x+1)", |x| {
                    q(4 * (2 * x - 3) * (5 * (x - 3) * x + 4), x + 1)
                }),
                piece(LeCn, &[3], "24", |_| q(24, 1)),
                piece(LePlusCn, ODD_5_19, "16(x-3)(x-1)(2x-1)/(x+1)", |x| {
                    q(16 * (x - 3) * (x - 1) * (2 * x - 1), x + 1)
                }),
                piece(LePlusCn, &[3], "24", |_| q(24, 1)),
            ],
            Figure::Fig7 => vec![
                piece(ECn, EVEN_2_20, "2(2x-3)(2x-4)", |x| {
                    q(2 * (2 * x - 3) * (2 * x - 4), 1)
                }),
                piece(LeCn, EVEN_2_20, "20(x-2)(x-1)(2x-3)/(x+1)", |x| {
                    q(20 * (x - 2) * (x - 1) * (2 * x - 3), x + 1)
                }),
                piece(LePlusCn, EVEN_2_20, "16(x-2)(x-1)(2x-3)/(x+1)", |x| {
                    q(16 * (x - 2) * (x - 1) * (2 * x - 3), x + 1)
                }),
            ],
            Figure::Fig8 => vec![
                piece(ECn, ODD_3_21, "2(2x-2)(2x-3)", |x| {
                    q(2 * (2 * x - 2) * (2 * x - 3), 1)
                }),
                piece(LeCn, ODD_3_21, "12(x-1)(4(x-2)x+3)/(2x+1)", |x| {
                    q(12 * (x - 1) * (4 * (x - 2) * x + 3), 2 * x + 1)
                }),
                piece(LePlusCn, ODD_3_21, "8(x-1)(2x-3)(2x-1)/(2x+1)", |x| {
                    q(8 * (x - 1) * (2 * x - 3) * (2 * x - 1), 2 * x + 1)
                }),
            ],
        }
    }

    /// Every plotted abscissa, ascending.
    pub fn abscissas(self) -> Vec<u32> {
        let mut xs: Vec<u32> = self
            .pieces()
            .iter()
            .flat_map(|p| p.abscissas.iter().copied())
            .collect();
        xs.sort_unstable();
        xs.dedup();
        xs
    }

    pub fn instances(self) -> Vec<FamilySpec> {
        self.abscissas()
            .into_iter()
            .map(|x| self.instance(x))
            .collect()
    }

    pub fn rows(self) -> Vec<SweepRow> {
        par::map(&self.instances(), |s| compute_row(s, None))
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown figure `{s}` (expected fig1..fig8)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureMismatch {
    pub figure: Figure,
    pub x: u32,
    pub quantity: Quantity,
    pub expression: &'static str,
    pub expected: Rational,
    /// `None` when the instance itself failed.
    pub computed: Option<Rational>,
}

impl fmt::Display for FigureMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let got = self
            .computed
            .as_ref()
            .map_or("error".to_string(), |c| c.to_string());
        write!(
            f,
            "{} x={} {} [{}]: expected {}, computed {}",
            self.figure,
            self.x,
            self.quantity.as_str(),
            self.expression,
            self.expected,
            got
        )
    }
}

/// Compares brute-force energies with each plotted expression; returns the
/// number of points checked and every disagreement.
pub fn check_figure(fig: Figure, rows: &[SweepRow]) -> (usize, Vec<FigureMismatch>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for p in fig.pieces() {
        for &x in p.abscissas {
            checked += 1;
            let spec = fig.instance(x);
            let expected = (p.expr)(x as i64);
            let computed = rows
                .iter()
                .find(|r| r.spec == spec)
                .and_then(|r| r.data.as_ref().ok())
                .map(|d| match p.quantity {
                    Quantity::ECn => d.e_cn.clone(),
                    Quantity::LeCn => d.le_cn.clone(),
                    Quantity::LePlusCn => d.le_plus_cn.clone(),
                });
            if computed.as_ref() != Some(&expected) {
                bad.push(FigureMismatch {
                    figure: fig,
                    x,
                    quantity: p.quantity,
                    expression: p.label,
                    expected,
                    computed,
                });
            }
        }
    }
    (checked, bad)
}
