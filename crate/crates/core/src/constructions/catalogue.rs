use super::{Atom, GroupExpr};

pub const CATALOGUE_VERSION: &str = "1";

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub name: String,
    pub expr: GroupExpr,
    pub tags: Vec<&'static str>,
}

fn entry(factors: Vec<Atom>, tags: &[&'static str]) -> CatalogueEntry {
    let expr = GroupExpr::new(factors).expect("nonempty");
    CatalogueEntry {
        name: expr.to_string(),
        expr,
        tags: tags.to_vec(),
    }
}

/// The fixed list of groups the verification suites run over.
pub fn catalogue() -> Vec<CatalogueEntry> {
    use Atom::*;
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(entry(vec![Sym(n)], &["symmetric"]));
    }
    for n in 4..=8 {
        let tags: &[&str] = if n >= 5 {
            &["alternating", "simple"]
        } else {
            &["alternating"]
        };
        out.push(entry(vec![Alt(n)], tags));
    }
    for n in [6, 12, 15, 30, 105] {
        out.push(entry(vec![Cyclic(n)], &["cyclic", "abelian"]));
    }
    for m in [4, 5, 7, 9] {
        out.push(entry(vec![Dihedral(m)], &["dihedral"]));
    }
    out.push(entry(
        vec![ElemAbelian(3, 2)],
        &["abelian", "elementary-abelian"],
    ));
    for p in [3, 5] {
        out.push(entry(vec![Extraspecial(p)], &["extraspecial", "p-group"]));
    }
    out.push(entry(vec![Wreath(3)], &["wreath", "p-group"]));
    out.push(entry(
        vec![Semidirect(7, 3)],
        &["frobenius", "sophie-germain"],
    ));
    out.push(entry(vec![Semidirect(13, 3)], &["frobenius"]));
    out.push(entry(
        vec![Semidirect(11, 5)],
        &["frobenius", "sophie-germain"],
    ));
    for q in [5, 7, 11, 13] {
        out.push(entry(vec![Sl2(q)], &["sl2"]));
    }
    out.push(entry(
        vec![Extraspecial(3), Cyclic(5)],
        &["product", "abelian-threshold-sharp"],
    ));
    out.push(entry(
        vec![Extraspecial(3), Dihedral(5), Dihedral(7)],
        &["product", "converse-fails"],
    ));
    out.push(entry(
        vec![Sym(4), Cyclic(5)],
        &["product", "printed-value"],
    ));
    out.push(entry(
        vec![Alt(4), Cyclic(5)],
        &["product", "printed-value"],
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_reparse() {
        let entries = catalogue();
        assert_eq!(entries.len(), 35);
        let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 35);
        for e in &entries {
            assert_eq!(e.name.parse::<GroupExpr>().unwrap(), e.expr);
        }
    }

    #[test]
    fn sophie_germain_tag() {
        let e = catalogue()
            .into_iter()
            .find(|e| e.name == "Semidirect(7,3)")
            .unwrap();
        assert!(e.tags.contains(&"sophie-germain"));
    }
}
