//! Group specifications: builtin names, `x`-products, and `@file` definitions.
//!
//! A definition file holds one directive per line:
//!
//! ```text
//! name Dic3
//! degree 7
//! gen (1 2 3)
//! gen (1 2)(4 5 6 7)
//!
//! name Dic3xC2
//! product Dic3 C2
//! ```
//!
//! `product` takes two earlier definitions or builtin expressions. Blank
//! lines and `#` comments are ignored. `@path` selects the last group in
//! the file and `@path#name` a named one.

use loewy_core::perm::{parse_cycles, Perm};
use loewy_core::{catalog, FiniteGroup, Subgroup};

use crate::error::{CliError, CliResult};

#[derive(Default)]
struct Draft {
    name: String,
    degree: Option<usize>,
    gens: Vec<String>,
    product: Option<(String, String)>,
    line: usize,
}

fn input(msg: String) -> CliError {
    CliError::Input(msg)
}

/// Parses definition text into named groups, in file order.
pub fn parse_definitions(text: &str) -> CliResult<Vec<(String, FiniteGroup)>> {
    let mut drafts: Vec<Draft> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let lineno = i + 1;
        if key == "name" {
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(input(format!("line {lineno}: name needs one identifier")));
            }
            drafts.push(Draft { name: rest.to_string(), line: lineno, ..Draft::default() });
            continue;
        }
        let draft = drafts
            .last_mut()
            .ok_or_else(|| input(format!("line {lineno}: {key:?} before any name directive")))?;
        match key {
            "degree" => {
                let n = rest.parse().map_err(|_| input(format!("line {lineno}: bad degree {rest:?}")))?;
                draft.degree = Some(n);
            }
            "gen" => draft.gens.push(rest.to_string()),
            "product" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [a, b] = parts[..] else {
                    return Err(input(format!("line {lineno}: product needs two group names")));
                };
                draft.product = Some((a.to_string(), b.to_string()));
            }
            _ => return Err(input(format!("line {lineno}: unknown directive {key:?}"))),
        }
    }
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for d in drafts {
        let group = build(&d, &out)?;
        out.push((d.name, group));
    }
    Ok(out)
}

fn build(d: &Draft, earlier: &[(String, FiniteGroup)]) -> CliResult<FiniteGroup> {
    let at = |e: loewy_core::Error| match e {
        loewy_core::Error::CapExceeded(_) => CliError::from(e),
        _ => input(format!("group {} (line {}): {e}", d.name, d.line)),
    };
    if let Some((a, b)) = &d.product {
        if d.degree.is_some() || !d.gens.is_empty() {
            return Err(input(format!("group {}: product cannot be mixed with degree or gen", d.name)));
        }
        let lookup = |name: &str| -> CliResult<FiniteGroup> {
            match earlier.iter().rev().find(|(n, _)| n == name) {
                Some((_, g)) => Ok(g.clone()),
                None => catalog::builtin(name).map_err(at),
            }
        };
        return lookup(a)?.direct_product(&lookup(b)?).map_err(at);
    }
    let degree = d.degree.ok_or_else(|| input(format!("group {}: missing degree", d.name)))?;
    let perms = d
        .gens
        .iter()
        .map(|g| Perm::from_cycles(degree, &parse_cycles(g)?))
        .collect::<loewy_core::Result<Vec<Perm>>>()
        .map_err(at)?;
    FiniteGroup::close(degree, &perms).map_err(at)
}

/// Resolves a `--group` argument to a display name and a group.
pub fn resolve_group(spec: &str) -> CliResult<(String, FiniteGroup)> {
    if let Some(path) = spec.strip_prefix('@') {
        let (path, wanted) = match path.split_once('#') {
            Some((p, n)) => (p, Some(n)),
            None => (path, None),
        };
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{path}: {e}")))?;
        let mut defs = parse_definitions(&text)?;
        let found = match wanted {
            Some(name) => defs.iter().rposition(|(n, _)| n == name),
            None => defs.len().checked_sub(1),
        };
        let i = found.ok_or_else(|| input(format!("{path}: no group {}", wanted.unwrap_or("defined"))))?;
        return Ok(defs.swap_remove(i));
    }
    let name: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let group = catalog::builtin(&name)?;
    Ok((name, group))
}

/// Resolves a `--normal` argument inside `group`: comma-separated cycle
/// notation generators, or a group spec matched against the normal
/// subgroups by order, commutativity and element orders.
pub fn resolve_normal(group: &FiniteGroup, spec: &str) -> CliResult<Subgroup> {
    let spec = spec.trim();
    let sub = if spec.starts_with('(') {
        let mut gens = Vec::new();
        for text in spec.split(',') {
            let perm = Perm::from_cycles(group.degree(), &parse_cycles(text)?)?;
            let pos = group
                .position(&perm)
                .ok_or_else(|| input(format!("{} is not an element of the group", text.trim())))?;
            gens.push(pos);
        }
        group.generate(&gens)
    } else {
        let (_, target) = resolve_group(spec)?;
        let mut profile = target.order_profile(&target.whole());
        profile.sort_unstable();
        group
            .normal_subgroups()
            .into_iter()
            .find(|s| {
                let mut p = group.order_profile(s);
                p.sort_unstable();
                s.order() == target.order() && group.is_subgroup_abelian(s) == target.is_abelian() && p == profile
            })
            .ok_or_else(|| input(format!("no normal subgroup resembling {spec}")))?
    };
    if !group.is_normal(&sub) {
        return Err(input(format!("{spec} does not generate a normal subgroup")));
    }
    Ok(sub)
}
