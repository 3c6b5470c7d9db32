//! Verification suites: one check per line.
//!
//! ```text
//! block <group> <p> [ll=<n>|<n>...] [defect=<shape>]
//! abelian <group> <p>
//! extension <group> <normal> <p>
//! full-defect <group> <normal> <p>
//! product <group> <group> <p>
//! psolvable <group> <p>
//! abelian-scan <p> <max order>
//! ```
//!
//! Group arguments cannot contain spaces (`C4xA5`, not `C4 x A5`).

use crate::error::{CliError, CliResult};
use crate::session::{Expectation, Session};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Block { group: String, p: u32, expect: Expectation },
    Abelian { group: String, p: u32 },
    Extension { group: String, normal: String, p: u32 },
    FullDefect { group: String, normal: String, p: u32 },
    Product { g1: String, g2: String, p: u32 },
    PSolvable { group: String, p: u32 },
    AbelianScan { p: u32, max_order: usize },
}

pub const BUILTIN_SUITE: &str = "\
# single blocks; expectations refer to the principal block
block C2 2 ll=2 defect=2
block C3 3 ll=3 defect=3
block C4 2 ll=4 defect=2^2
block C8 2 ll=8 defect=2^3
block C9 3 ll=9 defect=3^2
block V4 2 ll=3 defect=2x2
block E2^3 2 ll=4 defect=2x2x2
block C4xC2 2 ll=5 defect=2^2x2
block C3xC3 3 ll=5 defect=3x3
block S3 2 ll=2 defect=2
block S3 3 ll=3 defect=3
block A3 3 ll=3 defect=3
block A4 2 ll=3 defect=2x2
block A4 3 ll=3 defect=3
block A5 2 ll=5 defect=2x2
block A6 3 ll=5|7 defect=3x3
block PSL28 2 ll=7 defect=2x2x2
block C2xA5 2 ll=6 defect=2x2x2
block C4xA5 2 ll=8 defect=2^2x2x2

abelian C2 2
abelian C3 3
abelian C4 2
abelian C8 2
abelian C9 3
abelian V4 2
abelian E2^3 2
abelian C4xC2 2
abelian C3xC3 3
abelian A3 3
abelian-scan 2 32
abelian-scan 3 27

extension C4 C2 2
extension C8 C4 2
extension S3 A3 2
extension A4 V4 3

full-defect S3 A3 3
full-defect A4 V4 2

product C2 C2 2
product C4 A5 2
product C2 A5 2

psolvable A4 2
psolvable A4 3
psolvable S3 3
psolvable S3 2
psolvable C2 2
psolvable C3 3
psolvable C4 2
psolvable C8 2
psolvable C9 3
psolvable V4 2
psolvable E2^3 2
psolvable C4xC2 2
psolvable C3xC3 3
psolvable A3 3
";

fn bad(lineno: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("suite line {lineno}: {msg}"))
}

fn prime(lineno: usize, text: &str) -> CliResult<u32> {
    text.parse().map_err(|_| bad(lineno, format!("bad prime {text:?}")))
}

pub fn parse_suite(text: &str) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let check = match words[..] {
            ["block", group, p, ref opts @ ..] => {
                let mut expect = Expectation::default();
                for opt in opts {
                    match opt.split_once('=') {
                        Some(("ll", values)) => {
                            expect.ll = values
                                .split('|')
                                .map(|v| v.parse().map_err(|_| bad(lineno, format!("bad LL {v:?}"))))
                                .collect::<CliResult<_>>()?;
                        }
                        Some(("defect", shape)) => expect.defect = Some(shape.to_string()),
                        _ => return Err(bad(lineno, format!("unknown option {opt:?}"))),
                    }
                }
                Check::Block { group: group.into(), p: prime(lineno, p)?, expect }
            }
            ["abelian", group, p] => Check::Abelian { group: group.into(), p: prime(lineno, p)? },
            ["extension", group, normal, p] => {
                Check::Extension { group: group.into(), normal: normal.into(), p: prime(lineno, p)? }
            }
            ["full-defect", group, normal, p] => {
                Check::FullDefect { group: group.into(), normal: normal.into(), p: prime(lineno, p)? }
            }
            ["product", g1, g2, p] => Check::Product { g1: g1.into(), g2: g2.into(), p: prime(lineno, p)? },
            ["psolvable", group, p] => Check::PSolvable { group: group.into(), p: prime(lineno, p)? },
            ["abelian-scan", p, max] => Check::AbelianScan {
                p: prime(lineno, p)?,
                max_order: max.parse().map_err(|_| bad(lineno, format!("bad order {max:?}")))?,
            },
            _ => return Err(bad(lineno, format!("cannot parse {line:?}"))),
        };
        out.push(check);
    }
    Ok(out)
}

/// `paper` selects the built-in suite; anything else is a file path.
pub fn load_suite(name: &str) -> CliResult<Vec<Check>> {
    if name == "paper" {
        return parse_suite(BUILTIN_SUITE);
    }
    let text = std::fs::read_to_string(name).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
    parse_suite(&text)
}

pub fn run_check(session: &mut Session, check: &Check) -> CliResult<()> {
    match check {
        Check::Block { group, p, expect } => session.run_block(group, *p, None, expect).map(drop),
        Check::Abelian { group, p } => session.run_abelian(group, *p).map(drop),
        Check::Extension { group, normal, p } => session.run_extension(group, normal, *p).map(drop),
        Check::FullDefect { group, normal, p } => session.run_full_defect(group, normal, *p).map(drop),
        Check::Product { g1, g2, p } => session.run_product(g1, g2, *p).map(drop),
        Check::PSolvable { group, p } => session.run_psolvable(group, *p).map(drop),
        Check::AbelianScan { p, max_order } => session.run_abelian_scan(*p, *max_order).map(drop),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_builtin_suite() {
        let checks = parse_suite(BUILTIN_SUITE).unwrap();
        assert!(checks.len() > 40);
        assert!(checks.contains(&Check::Block {
            group: "A6".into(),
            p: 3,
            expect: Expectation { ll: vec![5, 7], defect: Some("3x3".into()) }
        }));
        assert_eq!(parse_suite("\n# nothing\n").unwrap(), vec![]);
    }

    #[test]
    fn rejects_garbage() {
        for text in ["block A5", "block A5 two", "block A5 2 ll=x", "block A5 2 foo=1", "frobnicate", "abelian-scan 2 lots"] {
            assert!(matches!(parse_suite(text), Err(CliError::Input(_))), "{text}");
        }
    }
}
