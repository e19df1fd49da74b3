//! Text specs for groups:
//!
//! ```text
//! cyclic 12
//! product cyclic 2 cyclic 3
//! perm (1,2,3,4,5) (1,2)
//! symmetric 6
//! ```
//!
//! `perm` consumes every following token that starts with `(`; each token
//! is one generator written as a product of disjoint cycles with
//! comma-separated 1-based points.

use super::{parse_cycles, FiniteGroup, GroupError};

/// Closure cap applied to `perm` and `symmetric` specs.
pub const DEFAULT_PERM_CAP: usize = 1 << 20;

pub fn parse_group_spec(text: &str) -> Result<FiniteGroup, GroupError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let mut pos = 0;
    let g = parse_at(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(GroupError::Parse(format!("unexpected trailing token `{}`", tokens[pos])));
    }
    Ok(g)
}

fn parse_at(tokens: &[&str], pos: &mut usize) -> Result<FiniteGroup, GroupError> {
    let head = *tokens
        .get(*pos)
        .ok_or_else(|| GroupError::Parse("unexpected end of spec".into()))?;
    *pos += 1;
    let mut number = |what: &str| -> Result<usize, GroupError> {
        let tok = tokens
            .get(*pos)
            .ok_or_else(|| GroupError::Parse(format!("{what} expects a number")))?;
        *pos += 1;
        tok.parse::<usize>()
            .ok()
            .filter(|&m| m >= 1)
            .ok_or_else(|| GroupError::Parse(format!("bad number `{tok}`")))
    };
    match head {
        "cyclic" => Ok(FiniteGroup::cyclic(number("cyclic")?)),
        "symmetric" => FiniteGroup::symmetric(number("symmetric")?, DEFAULT_PERM_CAP),
        "product" => {
            let a = parse_at(tokens, pos)?;
            let b = parse_at(tokens, pos)?;
            Ok(FiniteGroup::direct_product(&a, &b))
        }
        "perm" => {
            let mut gens = Vec::new();
            while let Some(tok) = tokens.get(*pos).filter(|t| t.starts_with('(')) {
                gens.push(parse_cycles(tok)?);
                *pos += 1;
            }
            if gens.is_empty() {
                return Err(GroupError::Parse("perm expects at least one generator".into()));
            }
            FiniteGroup::permutation_group(&gens, DEFAULT_PERM_CAP)
        }
        other => Err(GroupError::Parse(format!("unknown group kind `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_group_spec("cyclic 12").unwrap().order(), 12);
        assert_eq!(parse_group_spec("product cyclic 2 cyclic 3").unwrap().order(), 6);
        assert_eq!(parse_group_spec("perm (1,2,3,4,5)").unwrap().order(), 5);
        assert_eq!(parse_group_spec("perm (1,2,3,4,5) (1,2)").unwrap().order(), 120);
        assert_eq!(
            parse_group_spec("product perm (1,2)(3,4) cyclic 3").unwrap().order(),
            6
        );
        assert_eq!(parse_group_spec("symmetric 4").unwrap().order(), 24);
    }

    #[test]
    fn spec_round_trips() {
        for text in ["cyclic 7", "product cyclic 2 product cyclic 3 cyclic 5", "perm (1,2,3) (1,2)"] {
            let g = parse_group_spec(text).unwrap();
            let again = parse_group_spec(g.spec()).unwrap();
            assert_eq!(again.order(), g.order());
            assert_eq!(again.spec(), g.spec());
        }
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "cyclic", "cyclic 0", "cyclic x", "perm", "foo 3", "cyclic 3 4", "product cyclic 2"] {
            assert!(parse_group_spec(bad).is_err(), "{bad}");
        }
    }
}
