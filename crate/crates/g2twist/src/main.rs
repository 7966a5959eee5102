//! Command-line front end: evaluate brackets, run verification suites,
//! export structure constants, and print the symbolic ad tables.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports at
//! least one failing identity (or on I/O errors), 2 on usage errors
//! (bad flags, malformed element specs, or a suite/variant combination
//! that is not defined).

use clap::{Parser, Subcommand, ValueEnum};
use g2twist::analysis::{
    eigen_verify, grid_check, identification_check, integer_constants_check, is_cartan,
    jacobi_check, killing_check, min_poly, phi_check, qs3_basis_check, sigma_equality_check,
};
use g2twist::export::{
    export_document, oct_table_csv, render_table, to_csv, to_json, BasisKind,
};
use g2twist::model::{ad_matrix, bracket, parse_element, G2Element, ModelVariant};
use g2twist::octonion::{
    division_table, split_table, verify_all_lemmas, verify_table_laws, TableVariant,
};
use g2twist::report::Report;
use g2twist::scalar::{is_squarefree, rat, Polynomial, Rational};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "g2twist",
    version,
    about = "Exact construction and verification of the two real forms of the 14-dimensional \
             exceptional Lie algebra as twisted ring groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Compact,
    Split,
}

impl From<VariantArg> for ModelVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Compact => ModelVariant::Compact,
            VariantArg::Split => ModelVariant::Split,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Unit,
    Scaled,
    Orthonormal,
}

impl From<BasisArg> for BasisKind {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Unit => BasisKind::Unit,
            BasisArg::Scaled => BasisKind::Scaled,
            BasisArg::Orthonormal => BasisKind::Orthonormal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableArg {
    Division,
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Jacobi,
    Grid,
    Killing,
    Eigen,
    Cartan,
    Semisimple,
    Iso,
    Lemmas,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the bracket of two elements, e.g. "(1,0)g1" "(1,0)g2".
    Bracket {
        #[arg(long, value_enum, default_value_t = VariantArg::Compact)]
        variant: VariantArg,
        /// First operand, a sum of terms "(a,b)gi".
        x: String,
        /// Second operand.
        y: String,
    },
    /// Run a verification suite and report each identity.
    Verify {
        #[arg(long, value_enum, default_value_t = VariantArg::Compact)]
        variant: VariantArg,
        /// Which suite to run.
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Export all nonzero structure constants.
    Export {
        #[arg(long, value_enum, default_value_t = VariantArg::Compact)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = BasisArg::Unit)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the symbolic two-column ad table at an index.
    Table {
        #[arg(long, value_enum, default_value_t = VariantArg::Compact)]
        variant: VariantArg,
        /// Base point, 1..=7.
        i: usize,
    },
    /// Dump an octonion basis-product table as CSV (i,j,sign,target).
    OctTable {
        #[arg(long, value_enum, default_value_t = TableArg::Division)]
        table: TableArg,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Bracket { variant, x, y } => cmd_bracket(variant.into(), &x, &y),
        Command::Verify { variant, suite } => cmd_verify(variant.into(), suite),
        Command::Export { variant, basis, format, out } => {
            cmd_export(variant.into(), basis.into(), format, out.as_deref())
        }
        Command::Table { variant, i } => cmd_table(variant.into(), i),
        Command::OctTable { table, out } => cmd_oct_table(table, out.as_deref()),
    }
}

fn cmd_bracket(variant: ModelVariant, x: &str, y: &str) -> i32 {
    let parse = |label: &str, s: &str| match parse_element(s) {
        Ok(e) => Ok(e),
        Err(err) => {
            eprintln!("error: operand {label}: {err}");
            Err(())
        }
    };
    let (Ok(xe), Ok(ye)) = (parse("x", x), parse("y", y)) else {
        return EXIT_USAGE;
    };
    println!("{}", bracket(variant, &xe, &ye));
    EXIT_OK
}

/// Cartan report: every homogeneous component is abelian and
/// self-normalizing.
fn cartan_report(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("cartan subalgebras ({variant})"));
    for i in 1..=7 {
        let ok = is_cartan(variant, i).expect("index in range");
        report.check(format!("λ{i} is abelian and self-normalizing"), ok);
    }
    report
}

/// Semisimplicity report: squarefree minimal polynomials for all 14
/// canonical ad operators, with the frozen compact polynomials pinned.
fn semisimple_report(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("ad-semisimplicity ({variant})"));
    for pos in 0..14 {
        let x = G2Element::<Rational>::canonical_basis(pos);
        let label = G2Element::<Rational>::canonical_label(pos);
        let p = min_poly(&ad_matrix(variant, &x));
        let squarefree = is_squarefree(&p).expect("minimal polynomial is nonzero");
        report.check(format!("min poly of ad({label}) = {p} is squarefree"), squarefree);
    }
    if variant == ModelVariant::Compact {
        let e_poly = min_poly(&ad_matrix(
            variant,
            &G2Element::<Rational>::canonical_basis(0),
        ));
        let want_e = Polynomial::new(vec![
            rat(0, 1),
            rat(1, 4),
            rat(0, 1),
            rat(5, 4),
            rat(0, 1),
            rat(1, 1),
        ]);
        report.check("E-type minimal polynomial is x(x²+1)(x²+1/4)", e_poly == want_e);
        let f_poly = min_poly(&ad_matrix(
            variant,
            &G2Element::<Rational>::canonical_basis(1),
        ));
        let want_f = Polynomial::new(vec![
            rat(0, 1),
            rat(9, 16),
            rat(0, 1),
            rat(49, 16),
            rat(0, 1),
            rat(7, 2),
            rat(0, 1),
            rat(1, 1),
        ]);
        report.check(
            "F-type minimal polynomial is x(x²+1)(x²+1/4)(x²+9/4)",
            f_poly == want_f,
        );
    }
    report
}

fn eigen_report(variant: ModelVariant) -> Result<Report, g2twist::Error> {
    let mut report = Report::new(format!("eigen structure ({variant})"));
    for i in 1..=7 {
        let sub = eigen_verify(variant, i)?;
        report.absorb(sub);
    }
    Ok(report)
}

fn lemmas_report() -> Report {
    let mut report = Report::new("octonion table laws and operator lemmas");
    report.absorb(verify_table_laws(TableVariant::Division));
    report.absorb(verify_table_laws(TableVariant::Split));
    report.absorb(verify_all_lemmas());
    report
}

fn iso_report(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("isomorphism and form identification ({variant})"));
    if variant == ModelVariant::Compact {
        report.absorb(phi_check());
    }
    report.absorb(identification_check(variant));
    report
}

fn suite_reports(variant: ModelVariant, suite: SuiteArg) -> Result<Vec<Report>, i32> {
    let reports = match suite {
        SuiteArg::Jacobi => vec![jacobi_check(variant)],
        SuiteArg::Grid => vec![grid_check(variant, 20), sigma_equality_check(100)],
        SuiteArg::Killing => vec![killing_check(variant)],
        SuiteArg::Eigen => match eigen_report(variant) {
            Ok(r) => vec![r],
            Err(err) => {
                eprintln!("error: {err}");
                return Err(EXIT_USAGE);
            }
        },
        SuiteArg::Cartan => vec![cartan_report(variant)],
        SuiteArg::Semisimple => vec![semisimple_report(variant)],
        SuiteArg::Iso => vec![iso_report(variant)],
        SuiteArg::Lemmas => vec![lemmas_report()],
        SuiteArg::All => {
            let mut rs = vec![
                jacobi_check(variant),
                grid_check(variant, 20),
                sigma_equality_check(100),
                killing_check(variant),
            ];
            match variant {
                ModelVariant::Compact => {
                    rs.push(eigen_report(variant).expect("compact eigen data"));
                }
                ModelVariant::Split => {
                    let mut skip = Report::new("eigen structure (split)");
                    skip.note(
                        "skipped: the listed eigen data applies to the compact variant only"
                            .to_string(),
                    );
                    rs.push(skip);
                }
            }
            rs.push(cartan_report(variant));
            rs.push(semisimple_report(variant));
            rs.push(iso_report(variant));
            rs.push(lemmas_report());
            rs.push(integer_constants_check(variant));
            rs.push(qs3_basis_check(variant));
            rs
        }
    };
    Ok(reports)
}

fn cmd_verify(variant: ModelVariant, suite: SuiteArg) -> i32 {
    let reports = match suite_reports(variant, suite) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let mut checks = 0usize;
    let mut failures = 0usize;
    for r in &reports {
        println!("{r}");
        println!();
        checks += r.checks.len();
        failures += r.failures();
    }
    println!("TOTAL: {checks} checks, {failures} failures");
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAIL
    }
}

fn write_output(text: &str, out: Option<&std::path::Path>) -> i32 {
    match out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match std::fs::File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
        {
            Ok(()) => EXIT_OK,
            Err(err) => {
                eprintln!("error: cannot write {}: {err}", path.display());
                EXIT_VERIFY_FAIL
            }
        },
    }
}

fn cmd_export(
    variant: ModelVariant,
    basis: BasisKind,
    format: FormatArg,
    out: Option<&std::path::Path>,
) -> i32 {
    let doc = export_document(variant, basis);
    let text = match format {
        FormatArg::Json => to_json(&doc),
        FormatArg::Csv => to_csv(&doc),
    };
    write_output(&text, out)
}

fn cmd_table(variant: ModelVariant, i: usize) -> i32 {
    match render_table(variant, i) {
        Ok(text) => {
            print!("{text}");
            EXIT_OK
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_USAGE
        }
    }
}

fn cmd_oct_table(table: TableArg, out: Option<&std::path::Path>) -> i32 {
    let t = match table {
        TableArg::Division => division_table(),
        TableArg::Split => split_table(),
    };
    write_output(&oct_table_csv(t), out)
}
