use std::fmt::Write as _;

use hyperspec::census::{subtree_census, subtree_censuses, tree_canonical_code, tree_name};
use hyperspec::constructions::{
    cospectral_vertex_pairs, lookup, saltire_pair, schwenk_pair, schwenk_r6_witness, smith_graph,
    verify_r6_difference, CospectralVertexPair, RootedGraph, SmithFamily,
};
use hyperspec::highorder::{
    eigen_base_set, high_order_graph_test, high_order_tree_test, powers_from_bases, smith_mate_search,
    HighOrderVerdict, Regime, Witness,
};
use hyperspec::moments::{
    coeff_cd_tree, coeff_cd_walk_oracle, power_hypertree_moment, spectral_moment_by_decomposition,
    tree_spectral_moment,
};
use hyperspec::report::{hunt as run_hunt, reproduce_tables};
use hyperspec::spectral::{eigenvalues, is_cospectral, spectral_moment};
use hyperspec::{characteristic_polynomial, parse_graph6, to_graph6, Graph};
use serde_json::{json, Map, Value};

use crate::output::{csv_field, int, key_value_csv, Failure, Output};
use crate::Options;

/// Largest subgraph the CLI hands to the exponential walk oracle.
const CLI_ORACLE_EDGES: usize = 12;
const HUNT_MAX_N: usize = 14;

fn body(pairs: Value) -> Map<String, Value> {
    match pairs {
        Value::Object(m) => m,
        _ => unreachable!("command bodies are objects"),
    }
}

pub fn parse_graph(arg: &str) -> Result<Graph, Failure> {
    if let Ok(g) = lookup(arg) {
        return Ok(g);
    }
    parse_graph6(arg).map_err(|e| {
        Failure::Usage(format!("{arg:?} is neither a catalog name nor a valid graph6 string ({e})"))
    })
}

fn parse_tree(arg: &str) -> Result<Graph, Failure> {
    let g = parse_graph(arg)?;
    if !g.is_tree() {
        return Err(Failure::Usage(format!("{arg:?} is not a tree")));
    }
    Ok(g)
}

fn require_k(o: &Options, min: usize) -> Result<usize, Failure> {
    match o.k {
        Some(k) if k >= min => Ok(k),
        Some(k) => Err(Failure::Usage(format!("--k must be at least {min}, got {k}"))),
        None => Err(Failure::Usage("this command needs --k".into())),
    }
}

fn describe(g: &Graph) -> String {
    format!("{} ({} vertices, {} edges)", to_graph6(g), g.vertex_count(), g.edge_count())
}

pub fn spectrum(arg: &str, o: &Options) -> Result<Output, Failure> {
    let g = parse_graph(arg)?;
    let s = eigenvalues(&g, o.tol)?;
    let rho = s.spectral_radius();
    let mut text = format!("spectrum of {}\n", describe(&g));
    let mut csv = String::from("index,eigenvalue\n");
    for (i, x) in s.eigenvalues.iter().enumerate() {
        let _ = writeln!(text, "  {x:.12}");
        let _ = writeln!(csv, "{i},{x}");
    }
    let _ = writeln!(text, "spectral radius {rho:.12}");
    let b = json!({
        "graph": to_graph6(&g),
        "eigenvalues": s.eigenvalues,
        "spectral_radius": rho,
        "tolerance": o.tol,
    });
    Ok(Output::new("spectrum", body(b), text, csv, true))
}

pub fn charpoly(arg: &str) -> Result<Output, Failure> {
    let g = parse_graph(arg)?;
    let p = characteristic_polynomial(&g);
    let coeffs: Vec<Value> = p.coefficients().iter().map(int).collect();
    let mut csv = String::from("power,coefficient\n");
    for (i, c) in p.coefficients().iter().enumerate() {
        let _ = writeln!(csv, "{i},{c}");
    }
    let text = format!("phi({}) = {p}\n", to_graph6(&g));
    let b = json!({ "graph": to_graph6(&g), "polynomial": p.to_string(), "coefficients": coeffs });
    Ok(Output::new("charpoly", body(b), text, csv, true))
}

pub fn cospectral(a: &str, b: &str) -> Result<Output, Failure> {
    let (g, h) = (parse_graph(a)?, parse_graph(b)?);
    let same = is_cospectral(&g, &h);
    let (pg, ph) = (characteristic_polynomial(&g), characteristic_polynomial(&h));
    let text = format!(
        "{} and {} are {}cospectral\n  {pg}\n  {ph}\n",
        to_graph6(&g),
        to_graph6(&h),
        if same { "" } else { "not " }
    );
    let csv = key_value_csv(&[
        ("first", to_graph6(&g)),
        ("second", to_graph6(&h)),
        ("cospectral", same.to_string()),
    ]);
    let v = json!({
        "first": to_graph6(&g),
        "second": to_graph6(&h),
        "cospectral": same,
        "charpoly_first": pg.to_string(),
        "charpoly_second": ph.to_string(),
    });
    Ok(Output::new("cospectral", body(v), text, csv, true))
}

pub fn census(arg: &str, o: &Options) -> Result<Output, Failure> {
    let t = parse_tree(arg)?;
    if o.m == 0 {
        return Err(Failure::Usage("--m must be positive".into()));
    }
    let c = subtree_census(&t, o.m, o.budget)?;
    let mut rows = Vec::new();
    let mut text = format!("{}-edge subtrees of {}\n", o.m, describe(&t));
    let mut csv = String::from("code,name,graph6,count\n");
    for (code, &n) in &c.counts {
        let shape = to_graph6(&code.to_tree()?);
        let name = tree_name(code);
        let _ = writeln!(text, "  {:<6} {shape:<12} {n}", name.unwrap_or("-"));
        let _ = writeln!(csv, "{},{},{},{n}", code.to_hex(), name.unwrap_or(""), csv_field(&shape));
        rows.push(json!({ "code": code.to_hex(), "name": name, "graph6": shape, "count": n }));
    }
    let _ = writeln!(text, "total {}", c.total());
    let v = json!({ "tree": to_graph6(&t), "m": o.m, "total": c.total(), "counts": rows });
    Ok(Output::new("census", body(v), text, csv, true))
}

pub fn coeff(arg: &str, o: &Options) -> Result<Output, Failure> {
    let t = parse_tree(arg)?;
    let c = coeff_cd_tree(&t, o.d)?;
    let oracle = if t.edge_count() <= CLI_ORACLE_EDGES {
        Some(coeff_cd_walk_oracle(&t, o.d)?)
    } else {
        None
    };
    let ok = oracle.as_ref().is_none_or(|w| *w == c);
    let mut text = format!("c_{}({}) = {c}\n", o.d, to_graph6(&t));
    match &oracle {
        Some(w) if *w == c => text.push_str("walk oracle agrees\n"),
        Some(w) => {
            let _ = writeln!(text, "MISMATCH: walk oracle gives {w}");
        }
        None => {
            let _ = writeln!(text, "walk oracle skipped (more than {CLI_ORACLE_EDGES} edges)");
        }
    }
    let csv = key_value_csv(&[
        ("tree", to_graph6(&t)),
        ("d", o.d.to_string()),
        ("coefficient", c.to_string()),
        ("oracle", oracle.as_ref().map(ToString::to_string).unwrap_or_default()),
    ]);
    let v = json!({
        "tree": to_graph6(&t),
        "d": o.d,
        "coefficient": int(&c),
        "oracle": oracle.as_ref().map(int),
    });
    Ok(Output::new("coeff", body(v), text, csv, ok))
}

pub fn moments(arg: &str, o: &Options) -> Result<Output, Failure> {
    let g = parse_graph(arg)?;
    let trace = spectral_moment(&g, o.d);
    let (method, decomposed) = if g.is_tree() {
        ("subtree census", tree_spectral_moment(&g, o.d, o.budget)?)
    } else {
        ("connected subgraphs", spectral_moment_by_decomposition(&g, o.d, o.budget)?)
    };
    let ok = trace == decomposed;
    let text = format!(
        "S_{}({}) = {trace}\nby {method}: {decomposed}{}\n",
        o.d,
        to_graph6(&g),
        if ok { "" } else { "  MISMATCH" }
    );
    let csv = key_value_csv(&[
        ("graph", to_graph6(&g)),
        ("d", o.d.to_string()),
        ("trace", trace.to_string()),
        ("decomposition", decomposed.to_string()),
    ]);
    let v = json!({
        "graph": to_graph6(&g),
        "d": o.d,
        "trace": int(&trace),
        "decomposition": int(&decomposed),
        "method": method,
    });
    Ok(Output::new("moments", body(v), text, csv, ok))
}

pub fn hyper_moment(arg: &str, o: &Options) -> Result<Output, Failure> {
    let t = parse_tree(arg)?;
    let k = require_k(o, 2)?;
    let s = power_hypertree_moment(&t, k, o.d, o.budget)?;
    // k = 2 is the tree itself
    let check = (k == 2).then(|| spectral_moment(&t, o.d));
    let ok = check.as_ref().is_none_or(|c| *c == s);
    let mut text = format!("S_{}({}-power of {}) = {s}\n", o.d, k, to_graph6(&t));
    if let Some(c) = &check {
        let _ = writeln!(text, "trace of the tree: {c}{}", if ok { "" } else { "  MISMATCH" });
    }
    let csv = key_value_csv(&[
        ("tree", to_graph6(&t)),
        ("k", k.to_string()),
        ("d", o.d.to_string()),
        ("moment", s.to_string()),
    ]);
    let v = json!({ "tree": to_graph6(&t), "k": k, "d": o.d, "moment": int(&s) });
    Ok(Output::new("hyper-moment", body(v), text, csv, ok))
}

pub fn base_set(arg: &str, o: &Options) -> Result<Output, Failure> {
    let g = parse_graph(arg)?;
    let k = require_k(o, 3)?;
    let regime = Regime::for_order(k);
    let base = eigen_base_set(&g, regime, o.tol, o.budget)?;
    let distinct = powers_from_bases(&base.values_f64(), k, o.tol).len();
    let mut text = format!("base set of {} for k={k} ({regime})\n", describe(&g));
    let mut csv = String::from("value,witness,closed_form\n");
    for b in &base.values {
        let w = to_graph6(&b.witness);
        let cf = b.closed_form.as_deref().unwrap_or("");
        let _ = writeln!(text, "  {:<16.12} {w:<12} {cf}", b.value);
        let _ = writeln!(csv, "{},{},{}", b.value, csv_field(&w), csv_field(cf));
    }
    let _ = writeln!(text, "{distinct} distinct eigenvalues of the {k}-power hypergraph");
    let v = json!({
        "graph": to_graph6(&g),
        "k": k,
        "base": base,
        "distinct_eigenvalues": distinct,
    });
    Ok(Output::new("base-set", body(v), text, csv, true))
}

fn verdict_text(v: &HighOrderVerdict) -> String {
    let mut s = format!(
        "cospectral (k=2): {}\nbase sets equal: {}\n",
        v.cospectral_k2, v.base_sets_equal
    );
    if let Some(t) = v.tree_invariants_equal {
        let _ = writeln!(s, "tree invariants equal: {t}");
    }
    match &v.first_witness {
        Some(w) => {
            let _ = writeln!(s, "distinguished: {w}");
        }
        None => s.push_str("not distinguished by any implemented necessary condition\n"),
    }
    s
}

pub fn high_order_test(a: &str, b: &str, o: &Options) -> Result<Output, Failure> {
    let (g, h) = (parse_graph(a)?, parse_graph(b)?);
    let v = if g.is_tree() && h.is_tree() {
        high_order_tree_test(&g, &h, o.m, o.d, o.tol, o.budget)?
    } else {
        high_order_graph_test(&g, &h, o.tol, o.budget)?
    };
    let text = format!("{} vs {}\n{}", to_graph6(&g), to_graph6(&h), verdict_text(&v));
    let csv = key_value_csv(&[
        ("first", to_graph6(&g)),
        ("second", to_graph6(&h)),
        ("cospectral_k2", v.cospectral_k2.to_string()),
        ("base_sets_equal", v.base_sets_equal.to_string()),
        ("distinguished", v.distinguished().to_string()),
        ("witness", v.first_witness.as_ref().map(ToString::to_string).unwrap_or_default()),
    ]);
    let j = json!({ "first": to_graph6(&g), "second": to_graph6(&h), "verdict": v });
    Ok(Output::new("high-order-test", body(j), text, csv, true))
}

pub fn smith(family: &str, size: Option<usize>, o: &Options) -> Result<Output, Failure> {
    let fam: SmithFamily = family
        .parse()
        .map_err(|_| Failure::Usage(format!("unknown Smith family {family:?}")))?;
    let size = match (fam.fixed_size(), size) {
        (Some(s), _) => s,
        (None, Some(s)) => s,
        (None, None) => return Err(Failure::Usage(format!("family {fam} needs a size"))),
    };
    let g = smith_graph(fam, size)?;
    let rho = eigenvalues(&g, o.tol)?.spectral_radius();
    let mates = smith_mate_search(&g, o.tol)?;
    let mate_codes: Vec<String> = mates.iter().map(to_graph6).collect();
    let mut text = format!("{fam} on {} vertices: {}\nspectral radius {rho:.12}\n", size, to_graph6(&g));
    if mates.is_empty() {
        text.push_str("no cospectral Smith mates\n");
    }
    for m in &mates {
        let _ = writeln!(text, "mate {}", to_graph6(m));
    }
    let mut csv = String::from("role,graph6\n");
    let _ = writeln!(csv, "graph,{}", csv_field(&to_graph6(&g)));
    for m in &mate_codes {
        let _ = writeln!(csv, "mate,{}", csv_field(m));
    }
    let v = json!({
        "family": fam.to_string(),
        "size": size,
        "graph": to_graph6(&g),
        "spectral_radius": rho,
        "mates": mate_codes,
    });
    Ok(Output::new("smith", body(v), text, csv, true))
}

pub fn saltire(o: &Options) -> Result<Output, Failure> {
    let (union, star) = saltire_pair();
    let v = high_order_graph_test(&union, &star, o.tol, o.budget)?;
    let ok = v.cospectral_k2 && !v.base_sets_equal;
    let text = format!(
        "C4 + K1 = {}\nK1,4 = {}\n{}",
        to_graph6(&union),
        to_graph6(&star),
        verdict_text(&v)
    );
    let csv = key_value_csv(&[
        ("union", to_graph6(&union)),
        ("star", to_graph6(&star)),
        ("cospectral_k2", v.cospectral_k2.to_string()),
        ("base_sets_equal", v.base_sets_equal.to_string()),
        ("witness", v.first_witness.as_ref().map(ToString::to_string).unwrap_or_default()),
    ]);
    let j = json!({ "union": to_graph6(&union), "star": to_graph6(&star), "verdict": v });
    Ok(Output::new("saltire", body(j), text, csv, ok))
}

fn vertex_pair(tree: &Graph, u: usize, v: usize) -> Result<CospectralVertexPair, Failure> {
    let (a, b) = (u.min(v), u.max(v));
    let p = cospectral_vertex_pairs(tree)?
        .into_iter()
        .find(|p| (p.u, p.v) == (a, b))
        .ok_or_else(|| Failure::Usage(format!("vertices {u} and {v} are not cospectral")))?;
    Ok(if p.u == u { p } else { p.swapped() })
}

fn first_census_difference(a: &Graph, b: &Graph, o: &Options) -> Result<Option<Witness>, Failure> {
    let ca = subtree_censuses(a, 5, o.budget)?;
    let cb = subtree_censuses(b, 5, o.budget)?;
    for (x, y) in ca.iter().zip(&cb) {
        let mut codes: Vec<_> = x.counts.keys().chain(y.counts.keys()).collect();
        codes.sort();
        codes.dedup();
        if let Some(code) = codes.into_iter().find(|c| x.count(c) != y.count(c)) {
            return Ok(Some(Witness::SubtreeCount {
                m: x.m,
                code: code.to_hex(),
                name: tree_name(code).map(str::to_string),
                first: x.count(code),
                second: y.count(code),
            }));
        }
    }
    Ok(None)
}

pub fn schwenk(
    tree: Option<&str>,
    uv: Option<(usize, usize)>,
    attach: Option<(&str, usize)>,
    o: &Options,
) -> Result<Output, Failure> {
    let pair = match (tree, uv) {
        (None, None) => schwenk_r6_witness(),
        (Some(t), Some((u, v))) => vertex_pair(&parse_tree(t)?, u, v)?,
        (None, Some((u, v))) => vertex_pair(&schwenk_r6_witness().tree, u, v)?,
        (Some(_), None) => return Err(Failure::Usage("--tree needs --u and --v".into())),
    };
    if pair.similar {
        return Err(Failure::Usage(format!(
            "vertices {} and {} are similar; the coalescences would be isomorphic",
            pair.u, pair.v
        )));
    }
    let attachments = match attach {
        Some((f, r)) => vec![RootedGraph::new(parse_tree(f)?, r)?],
        None => vec![
            RootedGraph::new(Graph::path(2), 0)?,
            RootedGraph::new(Graph::path(3), 1)?,
            RootedGraph::new(Graph::star(3), 0)?,
        ],
    };

    let mut all_ok = true;
    let mut rows = Vec::new();
    let mut text = format!("T = {}, u = {}, v = {}\n", to_graph6(&pair.tree), pair.u, pair.v);
    let mut csv = String::from("attach,root_degree,f_tu,f_tv,cospectral,non_isomorphic,first_census_difference,r6_difference\n");
    for f in &attachments {
        let (gu, gv) = schwenk_pair(f, &pair)?;
        let cos = is_cospectral(&gu, &gv);
        let non_iso = tree_canonical_code(&gu)? != tree_canonical_code(&gv)?;
        let census = first_census_difference(&gu, &gv, o)?;
        let r6 = verify_r6_difference(f, &pair)?;
        let deg = f.root_degree();
        let holds = r6 == deg as i64;
        all_ok &= cos && non_iso && census.is_some() && holds;
        let census_text = census.as_ref().map(ToString::to_string).unwrap_or_else(|| "none".into());
        let _ = writeln!(
            text,
            "F = {} rooted at {} (degree {deg})\n  F.Tu = {}\n  F.Tv = {}\n  cospectral {cos}, non-isomorphic {non_iso}\n  first census difference: {census_text}\n  N(R6) difference {r6} (expected {deg}){}",
            to_graph6(&f.graph),
            f.root,
            to_graph6(&gu),
            to_graph6(&gv),
            if holds { "" } else { "  MISMATCH" }
        );
        let _ = writeln!(
            csv,
            "{},{deg},{},{},{cos},{non_iso},{},{r6}",
            csv_field(&to_graph6(&f.graph)),
            csv_field(&to_graph6(&gu)),
            csv_field(&to_graph6(&gv)),
            csv_field(&census_text)
        );
        rows.push(json!({
            "attach": to_graph6(&f.graph),
            "root": f.root,
            "root_degree": deg,
            "f_tu": to_graph6(&gu),
            "f_tv": to_graph6(&gv),
            "cospectral": cos,
            "non_isomorphic": non_iso,
            "first_census_difference": census,
            "r6_difference": r6,
            "r6_matches_root_degree": holds,
        }));
    }
    let v = json!({
        "tree": to_graph6(&pair.tree),
        "u": pair.u,
        "v": pair.v,
        "pairs": rows,
    });
    Ok(Output::new("schwenk", body(v), text, csv, all_ok))
}

pub fn mate_search(arg: &str, o: &Options) -> Result<Output, Failure> {
    let g = parse_graph(arg)?;
    let mates = smith_mate_search(&g, o.tol)?;
    let codes: Vec<String> = mates.iter().map(to_graph6).collect();
    let mut text = format!("Smith mates of {}: {}\n", describe(&g), codes.len());
    let mut csv = String::from("graph6,components\n");
    for m in &mates {
        let comps = m.components().len();
        let _ = writeln!(text, "  {} ({comps} components)", to_graph6(m));
        let _ = writeln!(csv, "{},{comps}", csv_field(&to_graph6(m)));
    }
    let v = json!({ "graph": to_graph6(&g), "mates": codes });
    Ok(Output::new("mate-search", body(v), text, csv, true))
}

pub fn tables() -> Result<Output, Failure> {
    let doc = reproduce_tables()?;
    let ok = doc.mismatches.is_empty();
    let mut j = serde_json::to_value(&doc).expect("tables serialize");
    let map = j.as_object_mut().expect("object");
    map.remove("schema_version");
    Ok(Output::new("tables", map.clone(), doc.to_text(), doc.to_csv(), ok))
}

pub fn hunt(n: usize, o: &Options) -> Result<Output, Failure> {
    if n == 0 || n > HUNT_MAX_N {
        return Err(Failure::Usage(format!("hunt supports 1 <= n <= {HUNT_MAX_N}, got {n}")));
    }
    let r = run_hunt(n, o.m, o.d, o.tol, o.budget)?;
    let mut csv = String::from("first,second,stage,witness\n");
    for s in &r.separations {
        let (stage, w) = match &s.witness {
            Some(w) => {
                let tag = serde_json::to_value(w).expect("witness serializes")["stage"]
                    .as_str()
                    .unwrap_or_default()
                    .to_string();
                (tag, w.to_string())
            }
            None => ("undistinguished".to_string(), String::new()),
        };
        let _ = writeln!(csv, "{},{},{stage},{}", csv_field(&s.first), csv_field(&s.second), csv_field(&w));
    }
    let mut j = serde_json::to_value(&r).expect("report serializes");
    let map = j.as_object_mut().expect("object");
    map.remove("schema_version");
    Ok(Output::new("hunt", map.clone(), r.to_text(), csv, true))
}
