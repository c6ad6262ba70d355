use std::fmt::Write as _;

use covercone::cover::{
    degree_bound_check, mult_table, product_structure_check, stabilization_threshold, CoverAnalysis,
    CoverProblem, ProductVerdict, REGULARITY_WARNING,
};
use covercone::hilbert::{finite_difference_asymptotics, hs_function_values};
use covercone::stdbasis::{buchberger_check, leading_ideal};
use covercone::{multiplicity_of_local_ring, standard_basis, Polynomial, Ring};
use serde::Serialize;

use crate::failure::{Failure, Kind};
use crate::problem::ProblemFile;

fn ideal_string(gens: &[Polynomial]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", parts.join(", "))
}

fn header(out: &mut String, ring: &Ring) {
    writeln!(out, "ring: {ring}").unwrap();
}

pub fn cmd_std(file: &ProblemFile) -> Result<String, Failure> {
    let ring = file.ring()?;
    let g0 = file.ideal_basis(&ring)?;
    if g0.is_empty() {
        return Err(Failure::new(Kind::Improper, "empty ideal"));
    }
    let sb = standard_basis(&g0);
    let li = leading_ideal(&sb.basis);
    if li.contains_one() {
        return Err(covercone::Error::UnitIdeal.into());
    }
    if !buchberger_check(&sb.basis).holds() {
        return Err(Failure::new(Kind::Internal, "computed basis fails the standard-basis criterion"));
    }
    let mut out = String::new();
    header(&mut out, &ring);
    writeln!(out, "standard basis ({} elements):", sb.basis.len()).unwrap();
    for g in sb.basis.generators() {
        writeln!(out, "  {g}").unwrap();
    }
    writeln!(out, "leading ideal: {}", li.display(ring.variables())).unwrap();
    writeln!(out, "chain length: {}", sb.chain.len()).unwrap();
    Ok(out)
}

pub fn cmd_mult(file: &ProblemFile, oracle_degree: Option<u32>) -> Result<String, Failure> {
    let ring = file.ring()?;
    let g0 = file.ideal_basis(&ring)?;
    let lm = multiplicity_of_local_ring(&g0)?;
    let mut out = String::new();
    header(&mut out, &ring);
    writeln!(out, "dimension: {}", lm.dimension).unwrap();
    writeln!(out, "multiplicity: {}", lm.multiplicity).unwrap();
    if let Some(s) = oracle_degree {
        let values = hs_function_values(&g0, s)?;
        match finite_difference_asymptotics(&values, ring.nvars(), 3) {
            None => writeln!(out, "oracle (degree {s}): inconclusive, increase --oracle-degree").unwrap(),
            Some((d, e)) if (d, e) == (lm.dimension, lm.multiplicity) => {
                writeln!(out, "oracle (degree {s}): dimension {d}, multiplicity {e}, agrees").unwrap()
            }
            Some((d, e)) => {
                return Err(Failure::new(
                    Kind::Internal,
                    format!(
                        "oracle (degree {s}) found dimension {d}, multiplicity {e}; leading ideal gave {}, {}",
                        lm.dimension, lm.multiplicity
                    ),
                ))
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ProblemEcho {
    vars: Vec<String>,
    field: String,
    order: String,
    ideal: Vec<String>,
    g: String,
    cover_var: String,
    range: [u32; 2],
}

#[derive(Serialize)]
struct RowJson {
    n: u32,
    cone_gens: Vec<String>,
    dim: usize,
    mult: u64,
    stable: bool,
}

#[derive(Serialize)]
struct Checks {
    product_structure: bool,
    degree_bound: bool,
    stabilized_in_range: bool,
}

#[derive(Serialize)]
struct CoverJson {
    problem: ProblemEcho,
    #[serde(rename = "threshold_N")]
    threshold_n: u32,
    stable_cone: Vec<String>,
    rows: Vec<RowJson>,
    checks: Checks,
}

pub fn cmd_cover(file: &ProblemFile, json: bool) -> Result<String, Failure> {
    let ring = file.ring()?;
    let ideal = file.ideal_basis(&ring)?;
    let branch = file.branch(&ring)?;
    let base_mult = multiplicity_of_local_ring(&ideal)?.multiplicity;
    let problem = CoverProblem::new(ideal, branch, file.cover_var.as_deref())?;
    let (lo, hi) = match file.range {
        Some(r) => r,
        None => (1, stabilization_threshold(&problem)?.threshold + 3),
    };
    let a = mult_table(&problem, lo, hi)?;
    let product = product_structure_check(&a);
    let bound = degree_bound_check(&a, base_mult);
    if json {
        let doc = CoverJson {
            problem: ProblemEcho {
                vars: file.vars.clone(),
                field: file.field_label(),
                order: file.order.clone(),
                ideal: problem.ideal_gens().generators().iter().map(|g| g.to_string()).collect(),
                g: problem.branch().to_string(),
                cover_var: problem.cover_var().to_string(),
                range: [lo, hi],
            },
            threshold_n: a.threshold,
            stable_cone: a.stable_cone_gens.iter().map(|g| g.to_string()).collect(),
            rows: a
                .rows
                .iter()
                .map(|r| RowJson {
                    n: r.n,
                    cone_gens: r.cone_gens.iter().map(|g| g.to_string()).collect(),
                    dim: r.dimension,
                    mult: r.multiplicity,
                    stable: r.is_stable(&a),
                })
                .collect(),
            checks: Checks {
                product_structure: product.holds(),
                degree_bound: bound,
                stabilized_in_range: a.stabilized_in_range(),
            },
        };
        let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Failure::new(Kind::Internal, e.to_string()))?;
        s.push('\n');
        return Ok(s);
    }
    Ok(render_table(&ring, &a, &product, bound, base_mult))
}

fn render_table(ring: &Ring, a: &CoverAnalysis, product: &ProductVerdict, bound: bool, base_mult: u64) -> String {
    let p = &a.problem;
    let mut out = String::new();
    header(&mut out, ring);
    writeln!(out, "ideal: {}", ideal_string(p.ideal_gens().generators())).unwrap();
    writeln!(out, "branch: g = {}", p.branch()).unwrap();
    writeln!(out, "cover: I_n = I + <g - {}^n> in {}", p.cover_var(), p.extended_ring()).unwrap();
    writeln!(out).unwrap();

    let head = ["n", "In(I_n)", "dim", "mult", "stable?"];
    let cells: Vec<[String; 5]> = a
        .rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                ideal_string(&r.cone_gens),
                r.dimension.to_string(),
                r.multiplicity.to_string(),
                if r.is_stable(a) { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut width: Vec<usize> = head.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: &[&str]| -> String {
        let parts: Vec<String> = cols
            .iter()
            .zip(&width)
            .enumerate()
            .map(|(i, (c, w))| if i == 1 || i == 4 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        parts.join(" | ").trim_end().to_string()
    };
    writeln!(out, "{}", line(&head)).unwrap();
    let rule: Vec<String> = width.iter().map(|w| "-".repeat(*w)).collect();
    writeln!(out, "{}", rule.join("-+-")).unwrap();
    for row in &cells {
        let cols: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cols)).unwrap();
    }
    writeln!(out).unwrap();

    writeln!(out, "threshold N = {}", a.threshold).unwrap();
    writeln!(out, "stable cone: {}", ideal_string(&a.stable_cone_gens)).unwrap();
    writeln!(out, "stable dimension: {}, stable multiplicity: {}", a.stable_dimension, a.stable_multiplicity).unwrap();
    match product {
        ProductVerdict::Holds => {
            writeln!(out, "product structure: holds (stable cone does not involve {})", p.cover_var()).unwrap()
        }
        ProductVerdict::InvolvesCoverVar(g) => {
            writeln!(out, "product structure: FAILS ({g} involves {})", p.cover_var()).unwrap()
        }
    }
    writeln!(
        out,
        "degree bound mult(B_n) <= n * {base_mult}: {}",
        if bound { "holds" } else { "FAILS" }
    )
    .unwrap();
    if a.stabilized_in_range() {
        writeln!(out, "stabilized in range: yes").unwrap();
    } else {
        writeln!(out, "stabilized in range: NO (no stable rows with n > N, or a row past N differs)").unwrap();
    }
    match a.multiplicity_onset() {
        Some(n) => writeln!(out, "multiplicity constant from n = {n}").unwrap(),
        None => writeln!(out, "multiplicity constant from: not within range").unwrap(),
    }
    writeln!(out, "{REGULARITY_WARNING}").unwrap();
    out
}
