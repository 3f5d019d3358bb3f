//! Line-oriented text formats for models and subsets.
//!
//! Model files either list a finite poset
//! (`point <id>`, `le <id1> <id2>`, `elem <sym> vanishes <id>...`) or declare
//! one family (`family <name> generic <id>`, optional `labels primes` or
//! `labels prefix <p>`, then `elements integers` or
//! `elem <sym> vanishes-indices <j>...` and `elem <sym> vanishes-all`).
//! Subset files hold `in <pointref>...` and `cofinite-of <family> except <j>...`.
//! `#` starts a comment.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::indexset::IndexSet;
use super::model::{IntegerElements, SpectrumModel, Tabulated};
use super::shape::{project, set_at, Family, FinitePoset, IndexLabels, PathStep, Shape};
use super::subset::SubsetDesc;
use crate::arith::primes::ActivePrimes;
use crate::{Error, Result};

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(n, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (n + 1, l.split_whitespace().collect()))
    })
}

fn err(n: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {n}: {msg}"))
}

pub fn parse_model(text: &str) -> Result<SpectrumModel> {
    if lines(text).any(|(_, w)| w[0] == "family") {
        parse_family_model(text)
    } else {
        parse_poset_model(text)
    }
}

fn parse_poset_model(text: &str) -> Result<SpectrumModel> {
    let mut ids = Vec::new();
    let mut rel = Vec::new();
    let mut elems: Vec<(usize, String, Vec<String>)> = Vec::new();
    for (n, w) in lines(text) {
        match w.as_slice() {
            ["point", id] => ids.push(id.to_string()),
            ["le", a, b] => rel.push((a.to_string(), b.to_string())),
            ["elem", sym, "vanishes", rest @ ..] => {
                elems.push((n, sym.to_string(), rest.iter().map(|s| s.to_string()).collect()))
            }
            _ => return Err(err(n, format!("unrecognized directive `{}`", w.join(" ")))),
        }
    }
    let poset = FinitePoset::new(&ids, &rel)?;
    let mut table = BTreeMap::new();
    for (n, sym, pts) in elems {
        if let Some(bad) = pts.iter().find(|p| poset.position(p).is_none()) {
            return Err(err(n, format!("unknown point {bad}")));
        }
        table.insert(sym, SubsetDesc::poset(pts));
    }
    SpectrumModel::new("poset", Shape::Poset(poset), Arc::new(Tabulated(table)))
}

fn parse_family_model(text: &str) -> Result<SpectrumModel> {
    let mut name = None;
    let mut generic = None;
    let mut labels = None;
    let mut integers = false;
    let mut table = BTreeMap::new();
    for (n, w) in lines(text) {
        match w.as_slice() {
            ["family", fam, "generic", g] => {
                name = Some(fam.to_string());
                generic = Some(g.to_string());
            }
            ["labels", "primes"] => labels = Some(IndexLabels::Primes(ActivePrimes::all())),
            ["labels", "prefix", p] => labels = Some(IndexLabels::Prefix(p.to_string())),
            ["elements", "integers"] => integers = true,
            ["elem", sym, "vanishes-indices", rest @ ..] => {
                let idx = rest.iter().map(|j| j.parse::<usize>().map_err(|_| err(n, format!("bad index {j}"))));
                table.insert(sym.to_string(), SubsetDesc::family(false, IndexSet::finite(idx.collect::<Result<Vec<_>>>()?)));
            }
            ["elem", sym, "vanishes-all"] => {
                table.insert(sym.to_string(), SubsetDesc::family(true, IndexSet::all()));
            }
            _ => return Err(err(n, format!("unrecognized directive `{}`", w.join(" ")))),
        }
    }
    let name = name.ok_or_else(|| Error::Parse("missing family declaration".into()))?;
    let labels = labels.unwrap_or_else(|| {
        if integers {
            IndexLabels::Primes(ActivePrimes::all())
        } else {
            IndexLabels::Prefix(format!("{name}:"))
        }
    });
    let shape = Shape::Family(Family::new(name.clone(), generic.expect("set with name"), labels));
    if integers {
        if !table.is_empty() {
            return Err(Error::Parse("`elements integers` excludes `elem` rules".into()));
        }
        SpectrumModel::new(name, shape, Arc::new(IntegerElements))
    } else {
        SpectrumModel::new(name, shape, Arc::new(Tabulated(table)))
    }
}

pub fn parse_subset(text: &str, m: &SpectrumModel) -> Result<SubsetDesc> {
    let mut out = m.empty();
    for (n, w) in lines(text) {
        match w.as_slice() {
            ["in", tokens @ ..] => {
                for t in tokens {
                    let p = m.shape.resolve(t).ok_or_else(|| err(n, format!("unknown point {t}")))?;
                    out = out.union(&m.shape.singleton(&p)?)?;
                }
            }
            ["cofinite-of", fam, rest @ ..] => {
                let path = m.shape.family_path(fam).ok_or_else(|| err(n, format!("unknown family {fam}")))?;
                let except = match rest {
                    [] => vec![],
                    ["except", js @ ..] => js
                        .iter()
                        .map(|j| match j.parse::<usize>() {
                            Ok(j) => Ok(j),
                            Err(_) => index_of_label(m, &path, j).ok_or_else(|| err(n, format!("bad index {j}"))),
                        })
                        .collect::<Result<_>>()?,
                    _ => return Err(err(n, "expected `except`")),
                };
                let mut part = m.empty();
                set_at(&mut part, &path, SubsetDesc::family(false, IndexSet::cofinite(except)))?;
                out = out.union(&part)?;
            }
            _ => return Err(err(n, format!("unrecognized directive `{}`", w.join(" ")))),
        }
    }
    Ok(out)
}

fn index_of_label(m: &SpectrumModel, path: &[PathStep], token: &str) -> Option<usize> {
    let p = m.shape.resolve(token)?;
    let single = m.shape.singleton(&p).ok()?;
    match project(path, &single).ok()? {
        SubsetDesc::Family { indices, .. } => indices.first(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::closure::patch_closure;

    #[test]
    fn family_file_and_patch_closure() {
        let m = parse_model("family Z generic (0)\nelements integers\n").unwrap();
        let y = parse_subset("cofinite-of Z\n", &m).unwrap();
        assert_eq!(m.describe(&patch_closure(&m, &y).unwrap()), "(0), all closed points of Z");
        let y = parse_subset("in (2) (3) Z:5\n", &m).unwrap();
        assert_eq!(m.describe(&y), "(13), (2), (3)");
    }

    #[test]
    fn poset_file() {
        let m = parse_model("point p\npoint q\nle p q\nelem a vanishes q\n").unwrap();
        assert_eq!(m.vanishing("a").unwrap(), SubsetDesc::poset(["q"]));
        assert!(parse_model("point p\nelem a vanishes p\npoint q\nle p q\n").is_err());
        assert!(parse_model("point p\nbogus\n").is_err());
    }
}
