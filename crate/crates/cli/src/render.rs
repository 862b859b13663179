//! Text and JSON reports. The two modes agree on all numeric content; text
//! adds layout, JSON adds machine-stable structure. Everything is
//! deterministic so outputs can be golden-tested byte for byte.

use serde_json::json;

use wh_core::classify::{GroupStructure, LabeledVerdict};
use wh_core::cobordism::{CobordismDto, InvertibleCobordism};
use wh_core::numeric::display_float;
use wh_core::text::parse_element;
use wh_core::verdict::Verdict;
use wh_core::whitehead::{
    express_in_generators, generators, rank, ExpressOutcome, GeneratorRegistry, GeneratorSet,
    WhiteheadClass,
};
use wh_core::{tables, CyclicGroupSpec};

fn group_label(g: CyclicGroupSpec) -> String {
    format!("Z/{} (epsilon = {:+})", g.order(), g.epsilon())
}

fn basis_label(set: &GeneratorSet) -> &'static str {
    if set.exact_basis {
        "exact basis"
    } else {
        "Bass-unit subgroup of finite index"
    }
}

fn print_json(v: &serde_json::Value) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

pub fn info(
    group: CyclicGroupSpec,
    registry: &GeneratorRegistry,
    digits: u32,
    json: bool,
) -> anyhow::Result<()> {
    let n = group.order();
    let set = generators(group, registry, digits)?;
    let bar_fixed: Vec<bool> = set.classes.iter().map(|g| &g.bar() == g).collect();
    let trivial = bar_fixed.iter().all(|&b| b);

    if json {
        return print_json(&json!({
            "n": n,
            "epsilon": group.epsilon(),
            "rank": rank(n),
            "exact_basis": set.exact_basis,
            "generators": set.classes.iter().map(|g| g.rep().to_string()).collect::<Vec<_>>(),
            "generators_bar_fixed": bar_fixed,
            "involution_trivial_on_generators": trivial,
        }));
    }

    println!("Wh(Z/{}), epsilon = {:+}", n, group.epsilon());
    if rank(n) == 0 {
        println!("rank: 0 (trivial group)");
    } else {
        println!("rank: {}", rank(n));
    }
    if set.classes.is_empty() {
        println!("generators ({}): none", basis_label(&set));
    } else {
        println!("generators ({}):", basis_label(&set));
        for (i, g) in set.classes.iter().enumerate() {
            let k = i + 1;
            let bar = if bar_fixed[i] {
                format!("bar(g{k}) = g{k}")
            } else {
                format!("bar(g{k}) != g{k}")
            };
            println!("  g{k} = {}   [{bar}]", g.rep());
        }
    }
    println!(
        "involution on generators: {}",
        if trivial { "trivial" } else { "nontrivial" }
    );
    Ok(())
}

fn coordinates_fields(
    class: &WhiteheadClass,
    set: &GeneratorSet,
    digits: u32,
) -> anyhow::Result<(Option<Vec<String>>, String)> {
    match express_in_generators(class, &set.classes, digits)? {
        ExpressOutcome::InSpan(coords) => {
            let strings: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            Ok((Some(strings), basis_label(set).to_string()))
        }
        ExpressOutcome::NotInSpan => Ok((
            None,
            format!("not in the span of the known generators ({})", basis_label(set)),
        )),
    }
}

pub fn class_eval(
    expr: &str,
    group: CyclicGroupSpec,
    registry: &GeneratorRegistry,
    digits: u32,
    json: bool,
) -> anyhow::Result<()> {
    let element = parse_element(expr, group)?;
    let det = element.circulant_determinant();
    let aug = element.augmentation();
    let is_unit = element.is_unit();

    let class_data = if is_unit {
        let class = WhiteheadClass::from_unit(element.clone())?;
        let set = generators(group, registry, digits)?;
        let logs: Vec<String> = class
            .log_vector(digits)
            .iter()
            .map(display_float)
            .collect();
        let (coords, coords_note) = coordinates_fields(&class, &set, digits)?;
        Some((class, logs, coords, coords_note))
    } else {
        None
    };

    if json {
        let mut out = json!({
            "input": expr,
            "canonical": element.to_string(),
            "n": group.order(),
            "epsilon": group.epsilon(),
            "augmentation": aug.to_string(),
            "circulant_determinant": det.to_string(),
            "unit": is_unit,
        });
        if let Some((class, logs, coords, coords_note)) = &class_data {
            out["class"] = json!({
                "representative": class.rep().to_string(),
                "zero": class.is_zero(),
                "log_vector": logs,
                "coordinates": coords,
                "coordinates_note": coords_note,
            });
        }
        return print_json(&out);
    }

    println!("input: {expr}");
    println!("canonical: {element}");
    println!("group: {}", group_label(group));
    println!("augmentation: {aug}");
    println!("circulant determinant: {det}");
    if let Some((class, logs, coords, coords_note)) = &class_data {
        println!("unit: yes");
        println!(
            "class: {}",
            if class.is_zero() {
                "zero (trivial unit)"
            } else {
                "nonzero"
            }
        );
        println!("normalized representative: {}", class.rep());
        println!("log vector: [{}]", logs.join(", "));
        match coords {
            Some(c) => println!("coordinates: [{}]   ({coords_note})", c.join(", ")),
            None => println!("coordinates: {coords_note}"),
        }
    } else {
        println!("unit: no (|det| != 1)");
    }
    Ok(())
}

pub fn cobordism(w: &InvertibleCobordism, title: &str, json: bool) -> anyhow::Result<()> {
    let dto: CobordismDto = w.into();
    if json {
        println!("{}", serde_json::to_string_pretty(&dto)?);
        return Ok(());
    }
    println!(
        "{title}: {} -> {}   (dim {}, pi = Z/{})",
        w.source().name,
        w.target().name,
        w.dim(),
        w.source().pi.order()
    );
    println!("torsion: {}", w.torsion().rep());
    println!("ident: t -> t^{}", w.ident());
    println!(
        "s-cobordism: {}",
        if w.is_s_cobordism() { "yes" } else { "no" }
    );
    println!("---");
    println!("{}", serde_json::to_string_pretty(&dto)?);
    Ok(())
}

pub fn torsion_report(
    w: &InvertibleCobordism,
    registry: &GeneratorRegistry,
    digits: u32,
    json: bool,
) -> anyhow::Result<()> {
    let class = w.torsion();
    let group = class.group();
    let set = generators(group, registry, digits)?;
    let logs: Vec<String> = class.log_vector(digits).iter().map(display_float).collect();
    let (coords, coords_note) = coordinates_fields(class, &set, digits)?;

    if json {
        return print_json(&json!({
            "source": w.source().name,
            "target": w.target().name,
            "torsion": class.rep().to_string(),
            "zero": class.is_zero(),
            "log_vector": logs,
            "coordinates": coords,
            "coordinates_note": coords_note,
        }));
    }
    println!(
        "torsion of {} -> {}: {}",
        w.source().name,
        w.target().name,
        class.rep()
    );
    println!("zero: {}", if class.is_zero() { "yes" } else { "no" });
    println!("log vector: [{}]", logs.join(", "));
    match &coords {
        Some(c) => println!("coordinates: [{}]   ({coords_note})", c.join(", ")),
        None => println!("coordinates: {coords_note}"),
    }
    Ok(())
}

pub fn is_s_report(w: &InvertibleCobordism, json: bool) -> anyhow::Result<()> {
    if json {
        return print_json(&json!({
            "s_cobordism": w.is_s_cobordism(),
            "torsion": w.torsion().rep().to_string(),
        }));
    }
    println!(
        "s-cobordism: {}",
        if w.is_s_cobordism() { "yes" } else { "no" }
    );
    println!("torsion: {}", w.torsion().rep());
    Ok(())
}

pub fn verdict(question: &str, v: &Verdict, json: bool) -> anyhow::Result<()> {
    if json {
        return print_json(&serde_json::to_value(v)?);
    }
    println!("{question}: {}", v.answer);
    println!("citation: {}", v.citation);
    if let Some(c) = &v.caveat {
        println!("caveat: {c}");
    }
    Ok(())
}

pub fn labeled_verdicts(out: &[LabeledVerdict], json: bool) -> anyhow::Result<()> {
    if json {
        return print_json(&serde_json::to_value(out)?);
    }
    for (i, lv) in out.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("{}: {}", lv.conclusion, lv.verdict.answer);
        println!("citation: {}", lv.verdict.citation);
        if let Some(c) = &lv.verdict.caveat {
            println!("caveat: {c}");
        }
    }
    Ok(())
}

pub fn structure(label: &str, s: &GroupStructure, json: bool) -> anyhow::Result<()> {
    if json {
        let mut v = serde_json::to_value(s)?;
        v["display"] = json!(s.to_string());
        return print_json(&v);
    }
    let basis = match s.exactness {
        wh_core::classify::Exactness::Exact => "basis: exact",
        wh_core::classify::Exactness::FiniteIndexSubgroup => {
            "basis: Bass-unit subgroup of finite index"
        }
    };
    println!("{label} = {s}   ({basis})");
    Ok(())
}

pub fn rank_table(max_n: usize, digits: u32, json: bool) -> anyhow::Result<()> {
    let rows = tables::rank_table(max_n, digits)?;
    if json {
        return print_json(&serde_json::to_value(&rows)?);
    }
    println!("  n  rank  lattice");
    for r in &rows {
        println!("{:>3}  {:>4}  {:>7}", r.n, r.rank, r.lattice_rank);
    }
    println!("all rows cross-validated against the Bass-unit log-lattice");
    Ok(())
}

pub fn dc_table(
    max_n: usize,
    registry: &GeneratorRegistry,
    digits: u32,
    json: bool,
) -> anyhow::Result<()> {
    let rows = tables::dc_table(max_n, registry, digits)?;
    if json {
        let vals: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "rank": r.rank,
                    "odd_dim": r.odd_dim.to_string(),
                    "even_dim": r.even_dim.to_string(),
                    "exactness": serde_json::to_value(r.odd_dim.exactness).unwrap(),
                })
            })
            .collect();
        return print_json(&serde_json::to_value(vals)?);
    }
    let odd_width = rows
        .iter()
        .map(|r| r.odd_dim.to_string().len())
        .max()
        .unwrap_or(1)
        .max("D_c(odd dim)".len());
    let even_width = rows
        .iter()
        .map(|r| r.even_dim.to_string().len())
        .max()
        .unwrap_or(1)
        .max("D_c(even dim)".len());
    println!(
        "  n  rank  {:<odd_width$}  {:<even_width$}  basis",
        "D_c(odd dim)", "D_c(even dim)"
    );
    for r in &rows {
        let basis = match r.odd_dim.exactness {
            wh_core::classify::Exactness::Exact => "exact",
            wh_core::classify::Exactness::FiniteIndexSubgroup => "finite-index",
        };
        println!(
            "{:>3}  {:>4}  {:<odd_width$}  {:<even_width$}  {basis}",
            r.n,
            r.rank,
            r.odd_dim.to_string(),
            r.even_dim.to_string()
        );
    }
    Ok(())
}
