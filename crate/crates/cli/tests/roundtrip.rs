//! Printing a syntax tree and parsing it back gives the same tree.

use proptest::prelude::*;
use theta_cli::ast::{Command, Expr, Group, JacquetIndex, Pos, Stmt};
use theta_cli::parse::{parse_expr, parse_program, parse_statement};
use theta_core::Exponent;

fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,3}".prop_map(|s| format!("v{s}"))
}

fn exponent() -> impl Strategy<Value = Exponent> {
    (-9i64..=9, prop_oneof![Just(1i64), Just(2), Just(3), Just(4)])
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Exponent::new(n, d))
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![Just(Expr::One), ident().prop_map(|n| Expr::Name(n, Pos::default()))];
    leaf.prop_recursive(4, 32, 4, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            (b(), exponent()).prop_map(|(x, e)| Expr::Pow(x, e)),
            (b(), b()).prop_map(|(x, y)| Expr::Mul(x, y)),
            (b(), b()).prop_map(|(x, y)| Expr::Div(x, y)),
            (b(), b()).prop_map(|(x, y)| Expr::Boxtimes(x, y)),
            (ident(), prop::collection::vec(inner.clone(), 1..4), any::<prop::sample::Index>()).prop_map(
                |(name, args, at)| {
                    let split = (args.len() > 1).then(|| 1 + at.index(args.len() - 1)).filter(|_| at.index(2) == 0);
                    Expr::Call { name, args, split, pos: Pos::default() }
                }
            ),
        ]
    })
}

fn stmt() -> impl Strategy<Value = Stmt> {
    let pos = Pos::default();
    prop_oneof![
        (ident(), prop::option::of(1u32..7), any::<bool>()).prop_map(move |(name, order, unramified)| Stmt::Char {
            name,
            order,
            unramified,
            pos
        }),
        (ident(), expr(), prop::collection::vec(expr(), 0..3)).prop_map(move |(name, omega, selftwists)| Stmt::Sc {
            name,
            omega,
            selftwists,
            pos
        }),
        (ident(), expr()).prop_map(move |(name, value)| Stmt::Rep { name, value, pos }),
        (prop_oneof![Just(Group::Gso22), Just(Group::Gso40), Just(Group::Gsp4)], expr())
            .prop_map(move |(g, x)| Stmt::Command(Command::Lift(g, x), pos)),
        expr().prop_map(move |x| Stmt::Command(Command::Lparam(x), pos)),
        (expr(), expr(), expr()).prop_map(move |(a, b, c)| Stmt::Command(Command::Satake(a, b, c), pos)),
        (1u32..13, 1u32..7, any::<bool>(), 0u32..6, prop::option::of(0u32..6), any::<bool>()).prop_map(
            move |(m, n, orth, i, r, isometry)| {
                let index = if orth { JacquetIndex::T(i) } else { JacquetIndex::K(i) };
                Stmt::Command(Command::Jacquet { m, n, index, r, isometry }, pos)
            }
        ),
    ]
}

proptest! {
    #[test]
    fn expressions_round_trip(x in expr()) {
        let printed = x.to_string();
        let back = parse_expr(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(&back, &x, "{}", printed);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn statements_round_trip(s in stmt()) {
        let printed = s.to_string();
        let back = parse_statement(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(back, s, "{}", printed);
    }

    #[test]
    fn programs_round_trip(stmts in prop::collection::vec(stmt(), 0..6)) {
        let printed: String = stmts.iter().map(|s| format!("{s}\n")).collect();
        let back = parse_program(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(back, stmts);
    }
}
