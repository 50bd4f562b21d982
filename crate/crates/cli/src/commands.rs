use std::fs;
use std::path::PathBuf;

use kmgrowth::algebra::{
    build_catalog, finite_subdiagrams, fundamental_weights, invariant_degrees, invert_cartan, AlgebraDescriptor,
    GcmFile, GeneralizedCartanMatrix, Subdiagram, CATALOG_EXAMPLES,
};
use kmgrowth::series::{affine_poincare, finite_poincare, ratio_fit, IntPolynomial, Verdict};
use kmgrowth::weyl::{enumerate_levels, EnumerationOptions, GrowthSeries};
use serde::Serialize;

use crate::output::{self, Format};
use crate::{
    AlgebraSource, CatalogArgs, CliError, EnumerationArgs, FitArgs, GrowthArgs, PoincareArgs, CHECKPOINT_DIR_ENV,
};

pub fn load_algebra(name: Option<&str>, file: Option<&PathBuf>) -> Result<AlgebraDescriptor, CliError> {
    match (name, file) {
        (Some(name), None) => Ok(build_catalog(name)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
            let parsed: GcmFile = serde_json::from_str(&text)
                .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
            Ok(AlgebraDescriptor::custom(GeneralizedCartanMatrix::try_from(parsed)?))
        }
        _ => Err(CliError::invalid("give exactly one of --algebra and --gcm-file")),
    }
}

fn resolve(source: &AlgebraSource) -> Result<AlgebraDescriptor, CliError> {
    load_algebra(source.algebra.as_deref(), source.gcm_file.as_ref())
}

pub fn finite_candidate(name: &str) -> Result<(AlgebraDescriptor, IntPolynomial), CliError> {
    let d = build_catalog(name)?;
    let degrees = invariant_degrees(&d)?;
    Ok((d, finite_poincare(&degrees)?))
}

fn enumeration_options(args: &EnumerationArgs, gcm: &GeneralizedCartanMatrix) -> Result<EnumerationOptions, CliError> {
    let checkpoint = match (&args.checkpoint, std::env::var_os(CHECKPOINT_DIR_ENV)) {
        (Some(path), _) => Some(path.clone()),
        (None, Some(dir)) if !dir.is_empty() => {
            let dir = PathBuf::from(dir);
            fs::create_dir_all(&dir)?;
            Some(dir.join(format!("{}.ckpt", gcm.fingerprint())))
        }
        _ => None,
    };
    Ok(EnumerationOptions {
        workers: args.workers.map(usize::from),
        full_history: args.debug_full_dedup,
        checkpoint,
    })
}

pub fn growth_for(
    descriptor: &AlgebraDescriptor,
    order: usize,
    options: &EnumerationOptions,
) -> Result<GrowthSeries, CliError> {
    let mut g = enumerate_levels(&descriptor.gcm, order, options)?;
    g.algebra = descriptor.name();
    Ok(g)
}

#[derive(Serialize)]
struct CatalogSummary {
    name: String,
    family: String,
    rank: usize,
    finite: bool,
}

#[derive(Serialize)]
struct CatalogDetail {
    name: String,
    family: String,
    rank: usize,
    fingerprint: String,
    labels: Vec<String>,
    matrix: Vec<Vec<i64>>,
    finite: bool,
    degrees: Option<Vec<u32>>,
    inverse: Option<Vec<Vec<String>>>,
    fundamental_weights: Option<Vec<Vec<String>>>,
    subdiagrams: Vec<Subdiagram>,
}

fn stringify<T: ToString>(rows: &[Vec<T>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

pub fn cmd_catalog(args: &CatalogArgs, format: Format) -> Result<(), CliError> {
    if args.algebra.is_none() && args.gcm_file.is_none() {
        let rows: Vec<CatalogSummary> = CATALOG_EXAMPLES
            .iter()
            .map(|name| {
                let d = build_catalog(name).expect("catalog examples are valid");
                CatalogSummary { name: d.name(), family: d.family.to_string(), rank: d.gcm.rank(), finite: d.is_finite() }
            })
            .collect();
        match format {
            Format::Json => output::json(&rows)?,
            Format::Csv => output::rows_csv(&rows)?,
            Format::Text => {
                println!("families: A<n> B<n> C<n> D<n> E6-8 F4 G2 AffA<n> HA<n>");
                for r in &rows {
                    println!("{:<6} rank {:<2} {}", r.name, r.rank, if r.finite { "finite" } else { "infinite" });
                }
            }
        }
        return Ok(());
    }

    let d = load_algebra(args.algebra.as_deref(), args.gcm_file.as_ref())?;
    let inverse = invert_cartan(&d.gcm).ok();
    let weights = fundamental_weights(&d.gcm).ok();
    let detail = CatalogDetail {
        name: d.name(),
        family: d.family.to_string(),
        rank: d.gcm.rank(),
        fingerprint: d.gcm.fingerprint(),
        labels: d.gcm.labels().to_vec(),
        matrix: d.gcm.entries().to_vec(),
        finite: d.is_finite(),
        degrees: invariant_degrees(&d).ok(),
        inverse: inverse.as_ref().map(|m| stringify(m.rows())),
        fundamental_weights: weights.as_deref().map(stringify),
        subdiagrams: finite_subdiagrams(&d.gcm),
    };
    match format {
        Format::Json => output::json(&detail)?,
        Format::Csv => output::rows_csv(d.gcm.entries().iter().cloned())?,
        Format::Text => {
            println!("{} (rank {}, {})", detail.name, detail.rank, if detail.finite { "finite" } else { "infinite" });
            print!("{}", d.gcm);
            if let Some(deg) = &detail.degrees {
                println!("invariant degrees: {}", output::join(deg));
            }
            match &inverse {
                Some(m) => print!("inverse Cartan matrix:\n{m}"),
                None => println!("Cartan matrix is singular"),
            }
            if let Some(w) = &detail.fundamental_weights {
                for (label, coords) in d.gcm.labels().iter().zip(w) {
                    println!("lambda[{label}] = ({})", coords.join(", "));
                }
            }
            for s in &detail.subdiagrams {
                println!("{} -> {}", s.deletion, s.finite_type.catalog_name());
            }
        }
    }
    Ok(())
}

pub fn cmd_growth(args: &GrowthArgs, format: Format) -> Result<(), CliError> {
    let d = resolve(&args.source)?;
    let options = enumeration_options(&args.enumeration, &d.gcm)?;
    let g = growth_for(&d, args.order, &options)?;
    match format {
        Format::Json => output::json(&g)?,
        Format::Csv => output::coeffs_csv(&g.coeffs)?,
        Format::Text => {
            println!("{} through order {}{}", g.algebra, g.order, if g.complete { " (complete)" } else { "" });
            println!("[{}]", output::join(&g.coeffs));
            if g.complete {
                println!("total {}", g.total());
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PoincareOutput {
    algebra: String,
    kind: &'static str,
    order: Option<usize>,
    coeffs: Vec<i64>,
}

pub fn cmd_poincare(args: &PoincareArgs, format: Format) -> Result<(), CliError> {
    let out = match (&args.algebra, &args.affine) {
        (Some(name), None) => {
            let (d, poly) = finite_candidate(name)?;
            PoincareOutput { algebra: d.name(), kind: "polynomial", order: None, coeffs: poly.into_coeffs() }
        }
        (None, Some(name)) => {
            let base = name.strip_prefix("Aff").unwrap_or(name);
            let d = build_catalog(base)?;
            let degrees = invariant_degrees(&d)?;
            let order = args.order.ok_or_else(|| CliError::invalid("--affine needs --order"))?;
            let s = affine_poincare(&degrees, order)?;
            PoincareOutput {
                algebra: format!("{} (affine)", d.name()),
                kind: "affine_series",
                order: Some(order),
                coeffs: s.coeffs().to_vec(),
            }
        }
        _ => return Err(CliError::invalid("give exactly one of --algebra and --affine")),
    };
    match format {
        Format::Json => output::json(&out)?,
        Format::Csv => output::coeffs_csv(&out.coeffs)?,
        Format::Text => {
            match out.order {
                Some(n) => println!("{} through order {n}", out.algebra),
                None => println!(
                    "{}: degree {}, value at t=1 {}",
                    out.algebra,
                    out.coeffs.len() - 1,
                    out.coeffs.iter().sum::<i64>()
                ),
            }
            println!("[{}]", output::join(&out.coeffs));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FitOutput {
    algebra: String,
    candidate: String,
    order: usize,
    margin: usize,
    verdict: Verdict,
    degree: Option<usize>,
    margin_checked: usize,
    evidence: Vec<usize>,
    /// Quotient coefficients for a polynomial verdict, the full expansion
    /// otherwise.
    coeffs: Vec<i64>,
}

pub fn cmd_fit(args: &FitArgs, format: Format) -> Result<(), CliError> {
    let d = resolve(&args.source)?;
    let (cand, numerator) = finite_candidate(&args.candidate)?;
    let margin = args.margin as usize;
    let required = numerator.degree().unwrap_or(0) + margin;
    if args.order < required {
        return Err(CliError::invalid(format!(
            "order {} is too small: {} needs at least {required} with margin {margin}",
            args.order,
            cand.name()
        )));
    }
    let options = enumeration_options(&args.enumeration, &d.gcm)?;
    let g = growth_for(&d, args.order, &options)?;
    let fit = ratio_fit(&numerator, &g, margin)?;
    let coeffs = match &fit.quotient {
        Some(q) => q.coeffs().to_vec(),
        None => fit.expansion.coeffs().to_vec(),
    };
    let out = FitOutput {
        algebra: d.name(),
        candidate: cand.name(),
        order: fit.order,
        margin,
        verdict: fit.verdict,
        degree: fit.degree,
        margin_checked: fit.margin_checked,
        evidence: fit.evidence.clone(),
        coeffs,
    };
    match format {
        Format::Json => output::json(&out)?,
        Format::Csv => output::coeffs_csv(&out.coeffs)?,
        Format::Text => match &fit.quotient {
            Some(q) => {
                println!("{} = P({}) / P_{}(t) through order {}", out.algebra, out.candidate, q.degree().unwrap_or(0), out.order);
                println!("P_{}(t) = {q}", q.degree().unwrap_or(0));
                println!("{} zero coefficients verified past the last nonzero one", out.margin_checked);
            }
            None => {
                println!("{} / P({}): no polynomial quotient through order {}", out.algebra, out.candidate, out.order);
                println!("nonzero coefficients in the top {margin}: {}", output::join(&out.evidence));
                println!("expansion [{}]", output::join(&out.coeffs));
            }
        },
    }
    Ok(())
}
