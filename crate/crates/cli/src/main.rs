//! Command-line front end: parse poset/group/polytope files, run the
//! equivariant Ehrhart and gamma pipeline, and emit human-readable or JSON
//! reports. Exit status: 0 on success, 1 when `--assert` is set and a
//! mathematical verdict fails, 2 on input errors.

use clap::{Args, Parser, Subcommand};
use ordpoly::demo;
use ordpoly::ehrhart::{
    count_points, count_points_bruteforce, decompose_char_polynomial, equivariant_hstar,
    equivariant_hstar_bruteforce, hstar, hstar_via_saturations, lift_factor_polynomial,
};
use ordpoly::gamma::{effectiveness_report, gamma_extract};
use ordpoly::io;
use ordpoly::poset::saturation::saturation_orbits;
use ordpoly::poset::{
    analyze, automorphism_group, ordinal_sum, parity_labeling, Consistency,
    FinitePoset, LabeledPoset,
};
use ordpoly::reptheory::classfn::VirtualCharacter;
use ordpoly::reptheory::dixon::character_table_cached;
use ordpoly::reptheory::perm::PermGroup;
use ordpoly::{CharPolynomial, Error};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ordpoly",
    about = "Equivariant Ehrhart h* and gamma polynomials of order polytopes of sign-graded posets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Poset JSON file; omit together with --demo-d4 to use the built-in
    /// dihedral example
    file: Option<String>,
    /// Use the built-in 8-element poset with its D4 action
    #[arg(long = "demo-d4")]
    demo_d4: bool,
    /// Group selection: "file" (group block of the input, falling back to
    /// the full automorphism group), "full", or "trivial"
    #[arg(long, default_value = "file")]
    subgroup: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a poset file and report its labeling classification
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Equivariant h*-polynomial (and classical h* at the identity)
    Hstar {
        #[command(flatten)]
        input: InputArgs,
        /// Re-run the brute-force fixed-point counter and compare
        #[arg(long)]
        oracle: bool,
        /// Truncation window for the brute-force counter
        #[arg(long = "max-dilate")]
        max_dilate: Option<usize>,
        /// Exit 1 if a cross-check fails
        #[arg(long = "assert")]
        assert_ok: bool,
    },
    /// Equivariant gamma-polynomial with the effectiveness verdict
    Gamma {
        #[command(flatten)]
        input: InputArgs,
        /// Re-run brute-force cross-checks
        #[arg(long)]
        oracle: bool,
        /// Exit 1 when gamma fails to be effective or a cross-check fails
        #[arg(long = "assert")]
        assert_ok: bool,
    },
    /// Saturation census and orbit structure
    Saturations {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run the invariant suite (evaluation lemma, main decomposition,
    /// parity shift, ordinal-sum multiplicativity) on the input
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "max-dilate")]
        max_dilate: Option<usize>,
        /// Exit 1 when any law fails
        #[arg(long = "assert")]
        assert_ok: bool,
    },
    /// Cross-polytope demo (or a polytope JSON file): equivariant h* and
    /// the gamma verdict
    Crosspoly {
        /// Polytope JSON file; defaults to the 3-dimensional cross-polytope
        /// under the coordinate S3-action
        file: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long = "max-dilate")]
        max_dilate: Option<usize>,
        /// Exit 1 when gamma is not effective
        #[arg(long = "assert")]
        assert_ok: bool,
    },
    /// The full dihedral worked example: census, per-orbit ledger, gamma
    #[command(name = "demo-d4")]
    DemoD4 {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_input(input: &InputArgs) -> Result<(LabeledPoset, PermGroup), Error> {
    let (lp, file_group) = if input.demo_d4 {
        (demo::fig1_poset(), Some(demo::d4_group()))
    } else {
        let path = input
            .file
            .as_ref()
            .ok_or_else(|| Error::Parse("a poset file or --demo-d4 is required".into()))?;
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        io::parse_poset_file(&text)?
    };
    let group = match input.subgroup.as_str() {
        "file" => io::select_group(&lp, file_group),
        "full" => automorphism_group(&lp),
        "trivial" => PermGroup::trivial(lp.len()),
        other => {
            return Err(Error::Parse(format!(
                "unknown subgroup selector `{other}` (use file, full, or trivial)"
            )))
        }
    };
    Ok((lp, group))
}

fn consistency_name(c: Consistency) -> &'static str {
    match c {
        Consistency::NotConsistent => "not consistent",
        Consistency::Consistent => "consistent",
        Consistency::Graded => "graded",
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { input } => cmd_validate(&input),
        Command::Hstar {
            input,
            oracle,
            max_dilate,
            assert_ok,
        } => cmd_hstar(&input, oracle, max_dilate, assert_ok),
        Command::Gamma {
            input,
            oracle,
            assert_ok,
        } => cmd_gamma(&input, oracle, assert_ok),
        Command::Saturations { input } => cmd_saturations(&input),
        Command::Verify {
            input,
            max_dilate,
            assert_ok,
        } => cmd_verify(&input, max_dilate, assert_ok),
        Command::Crosspoly {
            file,
            json,
            max_dilate,
            assert_ok,
        } => cmd_crosspoly(file, json, max_dilate, assert_ok),
        Command::DemoD4 { json } => {
            let input = InputArgs {
                file: None,
                demo_d4: true,
                subgroup: "file".into(),
                json,
            };
            let first = cmd_saturations(&input)?;
            let second = cmd_gamma(&input, false, false)?;
            Ok(if first == ExitCode::SUCCESS {
                second
            } else {
                first
            })
        }
    }
}

fn cmd_validate(input: &InputArgs) -> Result<ExitCode, Error> {
    let (lp, group) = load_input(input)?;
    let aut = automorphism_group(&lp);
    if input.json {
        let value = json!({
            "elements": lp.len(),
            "covers": lp.poset().covers().len(),
            "consistency": consistency_name(lp.consistency()),
            "rank": lp.rank().map(|r| r.to_vec()),
            "grade_value": lp.grade_value(),
            "parity_labeling": lp.is_parity_labeling(),
            "one_graded": lp.is_one_graded(),
            "connected": lp.poset().is_connected(),
            "aut_order": aut.order(),
            "group_order": group.order(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "poset: {} elements, {} covers, {}",
            lp.len(),
            lp.poset().covers().len(),
            consistency_name(lp.consistency())
        );
        if let Some(rank) = lp.rank() {
            let pairs: Vec<String> = lp
                .poset()
                .elements()
                .iter()
                .zip(rank.iter())
                .map(|(e, r)| format!("{e}:{r}"))
                .collect();
            println!("ranks: {}", pairs.join(" "));
        }
        if let Some(g) = lp.grade_value() {
            println!("grade value: {g}");
        }
        println!("parity labeling: {}", lp.is_parity_labeling());
        println!("|Aut(P, eps)| = {}, acting group order {}", aut.order(), group.order());
    }
    Ok(ExitCode::SUCCESS)
}

fn render_virtual(v: &VirtualCharacter, names: &[String]) -> String {
    v.display_with(names)
}

fn cmd_hstar(
    input: &InputArgs,
    oracle: bool,
    max_dilate: Option<usize>,
    assert_ok: bool,
) -> Result<ExitCode, Error> {
    let (lp, group) = load_input(input)?;
    let poly = equivariant_hstar(&lp, &group)?;
    let table = character_table_cached(&group)?;
    let decomposed = decompose_char_polynomial(&table, &poly)?;
    let classical = hstar(&lp)?;
    let mut oracle_ok = true;
    if oracle {
        let max_cycle = group
            .elements()
            .iter()
            .flat_map(|g| g.cycle_type())
            .max()
            .unwrap_or(1);
        let window = max_dilate.unwrap_or(lp.len() + max_cycle + 1);
        let brute = equivariant_hstar_bruteforce(&lp, &group, window)?;
        oracle_ok = brute == poly;
    }
    if input.json {
        let mut value = io::char_polynomial_json(&group, &table, &decomposed);
        value["classical_hstar"] = json!(classical.coeffs());
        value["character_table"] = io::character_table_json(&group, &table);
        if oracle {
            value["oracle_match"] = json!(oracle_ok);
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "equivariant h* over a group of order {} with {} classes:",
            group.order(),
            group.class_count()
        );
        for (i, v) in decomposed.iter().enumerate() {
            println!("  t^{i}: {}", render_virtual(v, &table.names));
        }
        println!("classical h* (evaluation at e): {:?}", classical.coeffs());
        if oracle {
            println!(
                "oracle (brute-force fixed counts): {}",
                if oracle_ok { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(if assert_ok && !oracle_ok {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_gamma(input: &InputArgs, oracle: bool, assert_ok: bool) -> Result<ExitCode, Error> {
    let (lp, group) = load_input(input)?;
    let report = effectiveness_report(&lp, &group)?;
    let table = character_table_cached(&group)?;
    let mut oracle_ok = true;
    if oracle {
        let max_cycle = group
            .elements()
            .iter()
            .flat_map(|g| g.cycle_type())
            .max()
            .unwrap_or(1);
        let brute = equivariant_hstar_bruteforce(&lp, &group, lp.len() + max_cycle + 1)?;
        let direct = equivariant_hstar(&lp, &group)?;
        oracle_ok = brute == direct;
        if lp.len() <= 6 {
            for m in 0..=3usize {
                let a = count_points(&lp, m, None)?;
                let b = count_points_bruteforce(&lp, m, None)?;
                if a != b {
                    oracle_ok = false;
                }
            }
        }
    }
    if input.json {
        let mut value = io::report_json(&report);
        value["group"] = json!({
            "order": group.order(),
            "irreducible_names": table.names,
            "degrees": table.degrees,
        });
        if oracle {
            value["oracle_match"] = json!(oracle_ok);
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "gamma polynomial of degree <= {} (s = {}) over {} irreducibles:",
            report.degree_s / 2,
            report.degree_s,
            table.irreducibles.len()
        );
        for (i, v) in report.gamma_saturation.coefficients.iter().enumerate() {
            println!("  gamma_{i}: {}", render_virtual(v, &table.names));
        }
        println!("per-orbit contributions:");
        for o in &report.orbits {
            let profile: Vec<String> = o.block_sizes.iter().map(|s| s.to_string()).collect();
            println!(
                "  blocks ({}), orbit size {}, stabilizer order {}, shift t^{}:",
                profile.join(","),
                o.orbit_size,
                o.stabilizer_order,
                o.shift
            );
            for (i, v) in o.gamma.iter().enumerate() {
                if !v.is_zero_vector() {
                    println!("    gamma_{i}: {}", render_virtual(v, &table.names));
                }
            }
        }
        println!(
            "saturation formula matches h* extraction: {}",
            if report.methods_agree { "yes" } else { "NO" }
        );
        println!(
            "gamma effective: {}",
            if report.all_effective { "yes" } else { "NO" }
        );
        if oracle {
            println!("oracle: {}", if oracle_ok { "PASS" } else { "FAIL" });
        }
    }
    let failed = !report.all_effective || !report.methods_agree || !oracle_ok;
    Ok(if assert_ok && failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_saturations(input: &InputArgs) -> Result<ExitCode, Error> {
    let (lp, group) = load_input(input)?;
    let par = parity_labeling(lp.poset())?;
    let lp_par = analyze(lp.poset().clone(), par)?;
    let orbits = saturation_orbits(&lp_par, &group)?;
    let total: usize = orbits.iter().map(|o| o.orbit_size()).sum();
    if input.json {
        let value = json!({
            "saturations": total,
            "orbit_count": orbits.len(),
            "orbits": orbits
                .iter()
                .map(|o| json!({
                    "blocks": o.representative.block_names(),
                    "block_sizes": o.representative.block_sizes(),
                    "orbit_size": o.orbit_size(),
                    "stabilizer_order": o.stabilizer_order(),
                    "grade_value_one": o.representative.grade_value_one(),
                    "members": o.members.iter().map(|s| s.block_names()).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let sizes: Vec<String> = orbits
            .iter()
            .map(|o| o.orbit_size().to_string())
            .collect();
        println!(
            "{} saturations in {} orbits ({})",
            total,
            orbits.len(),
            sizes.join(",")
        );
        for o in &orbits {
            let blocks: Vec<String> = o
                .representative
                .block_names()
                .iter()
                .map(|b| format!("{{{}}}", b.join(",")))
                .collect();
            println!(
                "  orbit size {}, stabilizer order {}, r_Q(1) = {}: {}",
                o.orbit_size(),
                o.stabilizer_order(),
                o.representative.grade_value_one(),
                blocks.join(" | ")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    input: &InputArgs,
    max_dilate: Option<usize>,
    assert_ok: bool,
) -> Result<ExitCode, Error> {
    let (lp, group) = load_input(input)?;
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    let mut verdicts: Vec<(String, bool)> = Vec::new();

    // (a) evaluation lemma: symbolic vs brute force
    let max_cycle = group
        .elements()
        .iter()
        .flat_map(|g| g.cycle_type())
        .max()
        .unwrap_or(1);
    let window = max_dilate.unwrap_or(lp.len() + max_cycle + 1);
    let direct = equivariant_hstar(&lp, &group)?;
    let brute = equivariant_hstar_bruteforce(&lp, &group, window)?;
    verdicts.push(("evaluation-lemma".into(), direct == brute));

    // (b) main decomposition theorem, on the parity labeling
    let par = parity_labeling(lp.poset())?;
    let lp_par = analyze(lp.poset().clone(), par)?;
    let par_group = if group.elements().iter().all(|g| lp_par.is_automorphism(g)) {
        group.clone()
    } else {
        PermGroup::trivial(lp.len())
    };
    let direct_par = equivariant_hstar(&lp_par, &par_group)?;
    let via_sat = hstar_via_saturations(&lp_par, &par_group)?;
    verdicts.push(("main-decomposition".into(), via_sat == direct_par));

    // (c) parity shift, when the input labeling is graded; the lemma assumes
    // the acting group preserves both labelings
    if lp.is_graded() && par_group.order() == group.order() {
        let r_eps = lp.grade_value().expect("graded");
        let r_par = lp_par.grade_value().expect("parity labeling of graded is graded");
        let diff = r_par - r_eps;
        let ok = if diff % 2 != 0 {
            false
        } else if diff >= 0 {
            direct == direct_par.shift_up((diff / 2) as usize)
        } else {
            direct.shift_up((-diff / 2) as usize) == direct_par
        };
        verdicts.push(("parity-shift".into(), ok));
    }

    // (d) ordinal-sum multiplicativity against a renamed copy of the input
    let renamed = {
        let names: Vec<String> = lp
            .poset()
            .elements()
            .iter()
            .map(|e| format!("{e}'"))
            .collect();
        let covers: Vec<(String, String)> = lp
            .poset()
            .covers()
            .iter()
            .map(|&(a, b)| (names[a].clone(), names[b].clone()))
            .collect();
        let poset = FinitePoset::new(names.clone(), &covers)?;
        let labeling = ordpoly::poset::EdgeLabeling::from_signs(
            &poset,
            lp.labeling().signs().to_vec(),
        )?;
        analyze(poset, labeling)?
    };
    let sum = ordinal_sum(&lp, &renamed, 1)?;
    let product_group = PermGroup::direct_product(&group, &group)?;
    let sum_h = equivariant_hstar(&sum, &product_group)?;
    let left = lift_factor_polynomial(&group, &product_group, lp.len(), true, &direct)?;
    let right = lift_factor_polynomial(&group, &product_group, lp.len(), false, &direct)?;
    verdicts.push(("ordinal-sum-multiplicativity".into(), sum_h == left.mul(&right)));

    let all_ok = verdicts.iter().all(|(_, ok)| *ok);
    if input.json {
        let value = json!({
            "verdicts": verdicts
                .iter()
                .map(|(name, ok)| json!({"law": name, "pass": ok}))
                .collect::<Vec<_>>(),
            "all_pass": all_ok,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        for (name, ok) in &verdicts {
            println!("{name}: {}", if *ok { "PASS" } else { "FAIL" });
        }
    }
    Ok(if assert_ok && !all_ok {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_crosspoly(
    file: Option<String>,
    json_out: bool,
    max_dilate: Option<usize>,
    assert_ok: bool,
) -> Result<ExitCode, Error> {
    let (poly, group) = match file {
        None => (demo::cross_polytope_3(), demo::s3_coordinates()),
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            let (p, g) = io::parse_polytope_file(&text)?;
            let dim = p.dim();
            (p, g.unwrap_or_else(|| PermGroup::trivial(dim)))
        }
    };
    let window = max_dilate.unwrap_or(poly.default_max_dilate());
    let hp: CharPolynomial = poly.equivariant_hstar(&group, window)?;
    let table = character_table_cached(&group)?;
    let decomposed = decompose_char_polynomial(&table, &hp)?;
    let s = hp.degree().unwrap_or(0);
    let palindromic = hp.is_palindromic(s);
    let gamma = if palindromic {
        Some(gamma_extract(&hp, s, &table)?)
    } else {
        None
    };
    let effective = gamma.as_ref().map(|g| g.is_effective());
    if json_out {
        let mut value = io::char_polynomial_json(&group, &table, &decomposed);
        value["palindromic"] = json!(palindromic);
        if let Some(g) = &gamma {
            value["gamma"] = json!(g.multiplicity_rows());
            value["gamma_effective"] = json!(g.is_effective());
            value["gamma_coefficient_effective"] = json!(g.effectiveness());
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "equivariant h* of the polytope (dim {}) under a group of order {}:",
            poly.dim(),
            group.order()
        );
        for (i, v) in decomposed.iter().enumerate() {
            println!("  t^{i}: {}", render_virtual(v, &table.names));
        }
        match &gamma {
            None => println!("h* is not palindromic; no gamma expansion"),
            Some(g) => {
                for (i, v) in g.coefficients.iter().enumerate() {
                    let tag = if v.is_effective() { "" } else { "  [NOT EFFECTIVE]" };
                    println!("  gamma_{i}: {}{tag}", render_virtual(v, &table.names));
                }
                println!(
                    "gamma effective: {}",
                    if g.is_effective() { "yes" } else { "NO" }
                );
            }
        }
    }
    let failed = !effective.unwrap_or(false);
    Ok(if assert_ok && failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
