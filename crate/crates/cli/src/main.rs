use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hecke_clifford::cohomology::{block_x_squared, expected_block_x_squared};
use hecke_clifford::dirac::d_squared_offset;
use hecke_clifford::modules::{check_relations, hermitian_form, steinberg_generators};
use hecke_clifford::{
    dirac_cohomology, distinct_partitions, induced_module, partitions, phi_maps,
    report_schema_version, verify_identities, verify_vogan, verify_zeta_surjective, Algebra,
    AlgebraParams, CartanType, DiracBundle, Partition, Report, Scalar,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hcdirac",
    version,
    about = "Exact checks for degenerate affine Hecke-Clifford algebras"
)]
struct Cli {
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Associativity of the PBW normal form on random triples.
    Pbw(AlgArgs),
    /// D^2 against the Casimir difference, and commutation of D with W and the c_i.
    DiracSquare(AlgArgs),
    /// Relations of the Steinberg-type module and vanishing of D on it.
    Steinberg(AlgArgs),
    /// Dirac cohomology of the induced module X_lambda (type A).
    Cohomology(CohomologyArgs),
    /// Norm identity of the two partition maps for every partition of n.
    Phi(PhiArgs),
    /// Jucys-Murphy map onto the even center of the Sergeev algebra.
    Center(CenterArgs),
    /// Every suite at the given rank.
    All(AlgArgs),
}

fn rational(s: &str) -> Result<Scalar, String> {
    let v: Scalar = s.parse().map_err(|e| format!("{e}"))?;
    if v.as_rational().is_none() {
        return Err(format!("{s} is not rational"));
    }
    Ok(v)
}

#[derive(Args, Clone)]
struct AlgArgs {
    #[arg(long = "type", default_value = "A")]
    ty: CartanType,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Long-root parameter, as an integer or p/q.
    #[arg(long, default_value = "1", value_parser = rational, allow_negative_numbers = true)]
    k: Scalar,
    /// Short-root parameter (type B).
    #[arg(long, default_value = "1", value_parser = rational, allow_negative_numbers = true)]
    ks: Scalar,
    /// Commutator parameter for types B and D; defaults to the Steinberg value.
    #[arg(long = "N", value_parser = rational, allow_negative_numbers = true)]
    big_n: Option<Scalar>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl AlgArgs {
    fn params(&self) -> AlgebraParams {
        match self.ty {
            CartanType::A => AlgebraParams::type_a(self.n, self.k.clone()),
            CartanType::B => {
                let n = self
                    .big_n
                    .clone()
                    .unwrap_or_else(|| AlgebraParams::steinberg_n_b(self.n, &self.k, &self.ks));
                AlgebraParams::type_b(self.n, self.k.clone(), self.ks.clone(), n)
            }
            CartanType::D => {
                let n = self
                    .big_n
                    .clone()
                    .unwrap_or_else(|| AlgebraParams::steinberg_n_d(self.n, &self.k));
                AlgebraParams::type_d(self.n, self.k.clone(), n)
            }
        }
    }
}

#[derive(Args)]
struct CohomologyArgs {
    /// Partition such as "3,1".
    #[arg(long)]
    lambda: Partition,
    #[arg(long, default_value = "1", value_parser = rational, allow_negative_numbers = true)]
    k: Scalar,
}

#[derive(Args)]
struct PhiArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct CenterArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "1", value_parser = rational, allow_negative_numbers = true)]
    k: Scalar,
    /// Highest power sum used; defaults to n.
    #[arg(long)]
    max_r: Option<u32>,
}

fn error_report(name: &str, e: impl std::fmt::Display) -> Report {
    let mut r = Report::new();
    r.push(name, false, json!({ "error": e.to_string() }));
    r
}

fn pbw_suite(a: &AlgArgs) -> Report {
    let params = a.params();
    let alg = match Algebra::new(params) {
        Ok(alg) => alg,
        Err(e) => return error_report("pbw_consistency", e),
    };
    let r = alg.check_pbw_consistency(a.trials, 2, a.seed);
    let mut rep = Report::new();
    rep.push(
        "pbw_consistency",
        r.ok(),
        json!({ "trials": r.trials, "passed": r.passed, "seed": a.seed, "witness": r.witness }),
    );
    rep
}

fn dirac_suite(a: &AlgArgs) -> Report {
    match Algebra::new(a.params()).and_then(|alg| verify_identities(&alg)) {
        Ok(r) => r,
        Err(e) => error_report("dirac_identities", e),
    }
}

fn steinberg_suite(a: &AlgArgs) -> Report {
    let params = a.params();
    let mut rep = Report::new();
    let forced = match params.ty {
        CartanType::A => None,
        CartanType::B => Some(AlgebraParams::steinberg_n_b(
            params.n,
            &params.k_long,
            &params.k_short,
        )),
        CartanType::D => Some(AlgebraParams::steinberg_n_d(params.n, &params.k_long)),
    };
    if let Some(f) = &forced {
        rep.push(
            "steinberg_parameter",
            *f == params.big_n,
            json!({ "expected_N": f, "N": params.big_n }),
        );
    }
    let (alg, gens) = match steinberg_generators(&params) {
        Ok(v) => v,
        Err(e) => return error_report("steinberg_module", e),
    };
    rep.extend(check_relations(&alg, &gens));
    let module = match hecke_clifford::ModuleRep::new_unchecked(
        alg,
        hecke_clifford::modules::ModuleKind::Steinberg,
        gens,
    ) {
        Ok(m) => m,
        Err(e) => return error_report("steinberg_module", e),
    };
    let d = DiracBundle::new(module.algebra()).and_then(|b| module.act_matrix(&b.d));
    match d {
        Ok(m) => rep.push(
            "d_vanishes",
            m.is_zero(),
            json!({ "dim": module.dim(), "nonzero_entries": m.nnz() }),
        ),
        Err(e) => rep.extend(error_report("d_vanishes", e)),
    }
    rep
}

fn cohomology_suite(lambda: &Partition, k: &Scalar) -> Report {
    let mut rep = Report::new();
    let module = match induced_module(lambda, k.clone()) {
        Ok(m) => m,
        Err(e) => return error_report("dirac_cohomology", e),
    };
    match block_x_squared(&module) {
        Ok(b) => {
            let expected = expected_block_x_squared(lambda, k);
            rep.push(
                format!("block_x_squared[{lambda}]"),
                b == expected,
                json!({ "computed": b, "expected": expected }),
            );
        }
        Err(e) => rep.extend(error_report("block_x_squared", e)),
    }
    match hermitian_form(&module) {
        Ok(h) => rep.extend(h.report),
        Err(e) => rep.extend(error_report("hermitian_form", e)),
    }
    if lambda.is_distinct() && !k.is_zero() {
        match verify_vogan(lambda, k) {
            Ok((vogan, coh)) => {
                rep.push("dirac_cohomology", coh.seg_stable, coh.to_json());
                rep.extend(vogan);
            }
            Err(e) => rep.extend(error_report("dirac_cohomology", e)),
        }
    } else {
        // no claim for non-distinct parts: report the computation only
        match dirac_cohomology(&module) {
            Ok(coh) => rep.push("dirac_cohomology", coh.seg_stable, coh.to_json()),
            Err(e) => rep.extend(error_report("dirac_cohomology", e)),
        }
    }
    rep
}

fn phi_suite(n: usize) -> Report {
    let mut rep = Report::new();
    let all = partitions(n);
    let bad: Vec<String> = all
        .iter()
        .filter(|l| !phi_maps(l).consistent())
        .map(ToString::to_string)
        .collect();
    let table: Vec<Value> = all
        .iter()
        .map(|l| {
            let d = phi_maps(l);
            json!({ "lambda": l, "phi1": d.phi1, "norm1_sq": d.norm1_sq, "norm2_sq": d.norm2_sq, "closed_form": d.closed_form })
        })
        .collect();
    rep.push(
        format!("norm_identity[n={n}]"),
        n > 0 && bad.is_empty(),
        json!({ "partitions": table, "failures": bad }),
    );
    rep
}

fn center_suite(n: usize, k: &Scalar, max_r: Option<u32>) -> Report {
    let r = max_r.unwrap_or(n as u32);
    match verify_zeta_surjective(n, k, r) {
        Ok(rep) => rep,
        Err(e) => error_report(&format!("zeta_surjective[n={n}]"), e),
    }
}

fn all_suite(a: &AlgArgs) -> Report {
    let mut rep = Report::new();
    rep.extend(pbw_suite(a));
    let mut d = dirac_suite(a);
    for c in &mut d.checks {
        c.name = format!("dirac:{}", c.name);
    }
    rep.extend(d);
    let mut s = steinberg_suite(a);
    for c in &mut s.checks {
        c.name = format!("steinberg:{}", c.name);
    }
    rep.extend(s);
    if a.ty == CartanType::A {
        for lambda in distinct_partitions(a.n) {
            rep.extend(cohomology_suite(&lambda, &a.k));
        }
        rep.extend(phi_suite(a.n));
        if (2..=4).contains(&a.n) {
            rep.extend(center_suite(a.n, &a.k, None));
        }
    }
    rep
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (suite, params, report) = match &cli.command {
        Command::Pbw(a) => ("pbw", json!(a.params()), pbw_suite(a)),
        Command::DiracSquare(a) => {
            let p = a.params();
            let offset = Algebra::new(p.clone())
                .map(|alg| d_squared_offset(&alg).to_string())
                .ok();
            let mut v = json!(p);
            v["d_squared_constant"] = json!(offset);
            ("dirac-square", v, dirac_suite(a))
        }
        Command::Steinberg(a) => ("steinberg", json!(a.params()), steinberg_suite(a)),
        Command::Cohomology(c) => (
            "cohomology",
            json!({ "lambda": c.lambda, "k": c.k }),
            cohomology_suite(&c.lambda, &c.k),
        ),
        Command::Phi(p) => ("phi", json!({ "n": p.n }), phi_suite(p.n)),
        Command::Center(c) => (
            "center",
            json!({ "n": c.n, "k": c.k, "max_r": c.max_r.unwrap_or(c.n as u32) }),
            center_suite(c.n, &c.k, c.max_r),
        ),
        Command::All(a) => ("all", json!(a.params()), all_suite(a)),
    };
    let elapsed_ms = if cli.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let out = json!({
        "suite": suite,
        "schema_version": report_schema_version(),
        "params": params,
        "checks": report,
        "elapsed_ms": elapsed_ms,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("report serializes")
    );
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
