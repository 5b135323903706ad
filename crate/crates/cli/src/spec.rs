//! Parsing of the `--hess` and `--j` arguments.

use hessenberg_core::hessenberg::{from_type_a_function, height_cutoff, validate_hessenberg};
use hessenberg_core::{Error, HessenbergSpace, Result, RootSystem, RootType, SimpleSubset};

/// Accepted forms:
///
/// - `full`, `borel`
/// - `afunc:2,3,3` for a type-A Hessenberg function `h(1), …, h(n)`
/// - `height:N` for all negative roots of height at least `−N`
/// - `roots:-1,0;0,-1` for an explicit list of negative roots
pub fn parse_hess(rs: &RootSystem, spec: &str) -> Result<HessenbergSpace> {
    let spec = spec.trim();
    match spec {
        "full" => return Ok(HessenbergSpace::full(rs)),
        "borel" => return Ok(HessenbergSpace::borel(rs)),
        _ => {}
    }
    let (kind, body) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("unknown Hessenberg spec {spec:?}")))?;
    match kind {
        "afunc" => {
            if rs.kind() != RootType::A {
                return Err(Error::Parse(format!(
                    "afunc specs need a type A system, got {}",
                    rs.label()
                )));
            }
            from_type_a_function(rs, &parse_list::<usize>(body)?)
        }
        "height" => {
            let h = body
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad height cutoff {body:?}")))?;
            height_cutoff(rs, h)
        }
        "roots" => {
            let mut roots = Vec::new();
            for part in body.split(';').filter(|p| !p.trim().is_empty()) {
                let v = parse_list::<i32>(part)?;
                if v.len() != rs.rank() {
                    return Err(Error::Parse(format!(
                        "root {part:?} has {} coefficients, {} expects {}",
                        v.len(),
                        rs.label(),
                        rs.rank()
                    )));
                }
                let idx = rs.index_of(&v).ok_or_else(|| {
                    Error::Parse(format!("{v:?} is not a root of {}", rs.label()))
                })?;
                roots.push(idx);
            }
            validate_hessenberg(rs, &roots)
        }
        _ => Err(Error::Parse(format!(
            "unknown Hessenberg spec kind {kind:?}"
        ))),
    }
}

/// `all`, `none`, or 1-based indices such as `1,3`.
pub fn parse_j(rs: &RootSystem, spec: &str) -> Result<SimpleSubset> {
    match spec.trim() {
        "all" => Ok(SimpleSubset::full(rs.rank())),
        "none" | "" => Ok(SimpleSubset::EMPTY),
        s => SimpleSubset::from_one_based(&parse_list::<usize>(s)?, rs.rank()),
    }
}

/// Letters such as `ABG` or `a,b,g`.
pub fn parse_types(spec: &str) -> Result<Vec<RootType>> {
    spec.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| {
            RootType::from_letter(c.to_ascii_uppercase())
                .ok_or_else(|| Error::Parse(format!("unknown root system type {c:?}")))
        })
        .collect()
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad number {x:?} in {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::new(RootType::A, 2).unwrap()
    }

    #[test]
    fn hess_forms_agree() {
        let rs = a2();
        let peterson = parse_hess(&rs, "afunc:2,3,3").unwrap();
        assert_eq!(parse_hess(&rs, "roots:-1,0;0,-1").unwrap(), peterson);
        assert_eq!(parse_hess(&rs, "height:1").unwrap(), peterson);
        assert_eq!(
            parse_hess(&rs, "height:2").unwrap(),
            parse_hess(&rs, "full").unwrap()
        );
        assert_eq!(
            parse_hess(&rs, "roots:").unwrap(),
            parse_hess(&rs, "borel").unwrap()
        );
    }

    #[test]
    fn hess_errors() {
        let rs = a2();
        assert!(matches!(parse_hess(&rs, "nope"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_hess(&rs, "roots:-1,0,0"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_hess(&rs, "roots:-2,0"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_hess(&rs, "roots:-1,-1"),
            Err(Error::ClosureViolation { .. })
        ));
        assert!(matches!(
            parse_hess(&rs, "roots:1,0"),
            Err(Error::Precondition(_))
        ));
        let b2 = RootSystem::new(RootType::B, 2).unwrap();
        assert!(matches!(parse_hess(&b2, "afunc:2,2"), Err(Error::Parse(_))));
    }

    #[test]
    fn j_forms() {
        let rs = a2();
        assert_eq!(parse_j(&rs, "all").unwrap(), SimpleSubset(0b11));
        assert_eq!(parse_j(&rs, "none").unwrap(), SimpleSubset::EMPTY);
        assert_eq!(parse_j(&rs, "2").unwrap(), SimpleSubset(0b10));
        assert!(parse_j(&rs, "3").is_err());
        assert!(parse_j(&rs, "x").is_err());
    }

    #[test]
    fn type_letters() {
        assert_eq!(parse_types("G").unwrap(), vec![RootType::G]);
        assert_eq!(parse_types("a,b").unwrap(), vec![RootType::A, RootType::B]);
        assert!(parse_types("Z").is_err());
    }
}
