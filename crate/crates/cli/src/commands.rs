//! Command execution: every command loads a document, runs the relevant
//! pipelines, and renders a deterministic text report (one line per check).
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 parse or
//! construction errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use scalg::centre::{embed_and_compare, full_centre, morita_amplification_check, FullCentre};
use scalg::double::drinfeld_double;
use scalg::grouplike::{as_dual_group_algebra, as_group_algebra, g_full_centre, graded_full_centre};
use scalg::modalg::ModuleAlgebra;
use scalg::report::AxiomReport;
use scalg::yd::{adjunction_maps, quantum_commutative_check, HModule, YdAlgebra, YdModule};

use crate::format::{parse_scalg, serialize, ObjectData, ScalgDocument, ScalgObject};

#[derive(Debug, Clone)]
pub enum Command {
    Verify { file: PathBuf },
    Centre { file: PathBuf, out: Option<PathBuf> },
    Double { file: PathBuf },
    Crosscheck { file: PathBuf },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

struct Reporter {
    out: String,
    total: usize,
    passed: usize,
}

impl Reporter {
    fn new() -> Self {
        Reporter { out: String::new(), total: 0, passed: 0 }
    }

    fn section(&mut self, title: &str) {
        let _ = writeln!(self.out, "== {title}");
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.out, "{text}");
    }

    fn report(&mut self, report: &AxiomReport) {
        for check in &report.checks {
            self.total += 1;
            if check.passed {
                self.passed += 1;
            }
        }
        let _ = write!(self.out, "{report}");
    }

    fn verdict(&mut self, name: &str, passed: bool) {
        self.total += 1;
        if passed {
            self.passed += 1;
        }
        let _ = writeln!(self.out, "{name}: {}", if passed { "PASS" } else { "FAIL" });
    }

    fn finish(mut self) -> (i32, String) {
        let _ = writeln!(self.out, "== summary: {} checks, {} passed", self.total, self.passed);
        let code = if self.total == self.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
        (code, self.out)
    }
}

pub fn execute(cmd: &Command) -> (i32, String) {
    let result = match cmd {
        Command::Verify { file } => verify(file),
        Command::Centre { file, out } => centre(file, out.as_deref()),
        Command::Double { file } => double(file),
        Command::Crosscheck { file } => crosscheck(file),
    };
    match result {
        Ok(outcome) => outcome,
        Err(message) => (EXIT_ERROR, format!("error: {message}\n")),
    }
}

fn load(file: &Path) -> Result<ScalgDocument, String> {
    let text =
        std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    parse_scalg(&text).map_err(|e| format!("{}: {e}", file.display()))
}

/// The Yetter-Drinfeld algebra declared by an action object carrying a
/// coaction.
fn yd_algebra_of(module: &ModuleAlgebra, coaction: &scalg::StructureTensor) -> Result<YdAlgebra, String> {
    let yd = YdModule::new(
        module.hopf.clone(),
        module.alg.dim,
        module.action.clone(),
        coaction.clone(),
    )
    .map_err(|e| e.to_string())?;
    YdAlgebra::new(yd, module.alg.clone()).map_err(|e| e.to_string())
}

fn verify(file: &Path) -> Result<(i32, String), String> {
    let doc = load(file)?;
    let mut r = Reporter::new();
    for obj in &doc.objects {
        match &obj.data {
            ObjectData::Hopf(h) => {
                r.section(&format!("verify hopf {}", obj.name));
                r.report(&h.verify());
            }
            ObjectData::Algebra(a) => {
                r.section(&format!("verify algebra {}", obj.name));
                r.report(&a.verify());
            }
            ObjectData::Action { module, coaction, .. } => {
                r.section(&format!("verify action {}", obj.name));
                match coaction {
                    None => r.report(&module.verify()),
                    Some(coaction) => {
                        let yd = yd_algebra_of(module, coaction)?;
                        r.report(&yd.verify());
                        r.report(&quantum_commutative_check(&yd));
                    }
                }
            }
            ObjectData::Group(_) => {
                r.section(&format!("verify group {}", obj.name));
                // Group laws are enforced by the loader; reaching this point
                // means they hold.
                r.verdict("group_laws", true);
            }
            ObjectData::Grading { module, .. } => {
                r.section(&format!("verify grading {}", obj.name));
                r.report(&module.verify());
            }
        }
    }
    Ok(r.finish())
}

fn module_objects(doc: &ScalgDocument) -> Vec<(&ScalgObject, &ModuleAlgebra)> {
    doc.objects
        .iter()
        .filter_map(|obj| match &obj.data {
            ObjectData::Action { module, .. } => Some((obj, module)),
            ObjectData::Grading { module, .. } => Some((obj, module)),
            _ => None,
        })
        .collect()
}

fn centre(file: &Path, out: Option<&Path>) -> Result<(i32, String), String> {
    let doc = load(file)?;
    let modules = module_objects(&doc);
    if modules.is_empty() {
        return Err("no action or grading object in the document".into());
    }
    let mut r = Reporter::new();
    let mut exported: Vec<ScalgObject> = Vec::new();
    for (obj, module) in modules {
        let fc = full_centre(module).map_err(|e| e.to_string())?;
        r.section(&format!("centre {}", obj.name));
        r.note(&format!("dim Z(A) = {}", fc.dim()));
        let qc = fc
            .report
            .check("quantum_commutative")
            .map(|c| c.passed)
            .unwrap_or(false);
        r.verdict("quantum commutative", qc);
        r.report(&fc.report);
        if out.is_some() {
            exported.extend(centre_objects(&obj.name, &fc));
        }
    }
    if let Some(path) = out {
        let export = ScalgDocument { field: doc.field, objects: exported };
        std::fs::write(path, serialize(&export)).map_err(|e| format!("{}: {e}", path.display()))?;
        r.note(&format!("wrote {}", path.display()));
    }
    Ok(r.finish())
}

/// The serialized form of a computed centre: its Hopf algebra, the induced
/// algebra, and the action object carrying the Yetter-Drinfeld coaction.
fn centre_objects(name: &str, fc: &FullCentre) -> Vec<ScalgObject> {
    let hopf_name = format!("{name}_hopf");
    let alg_name = format!("{name}_zalg");
    vec![
        ScalgObject {
            name: hopf_name.clone(),
            data: ObjectData::Hopf(fc.yd.module.hopf.clone()),
        },
        ScalgObject {
            name: alg_name.clone(),
            data: ObjectData::Algebra(fc.yd.alg.clone()),
        },
        ScalgObject {
            name: format!("{name}_centre"),
            data: ObjectData::Action {
                hopf_name,
                algebra_name: alg_name,
                module: ModuleAlgebra::new(
                    fc.yd.module.hopf.clone(),
                    fc.yd.alg.clone(),
                    fc.yd.module.action.clone(),
                )
                .expect("restricted tensors are consistent"),
                coaction: Some(fc.yd.module.coaction.clone()),
            },
        },
    ]
}

fn double(file: &Path) -> Result<(i32, String), String> {
    let doc = load(file)?;
    let mut r = Reporter::new();
    let mut seen = false;
    for obj in &doc.objects {
        let ObjectData::Hopf(h) = &obj.data else { continue };
        seen = true;
        let d = drinfeld_double(h).map_err(|e| e.to_string())?;
        r.section(&format!("double {}", obj.name));
        r.note(&format!("dim D(H) = {}", d.hopf.dim));
        r.note(&format!("convention: {}", d.convention.describe()));
        r.report(&d.verify());
    }
    if !seen {
        return Err("no hopf object in the document".into());
    }
    Ok(r.finish())
}

fn crosscheck(file: &Path) -> Result<(i32, String), String> {
    let doc = load(file)?;
    let modules = module_objects(&doc);
    if modules.is_empty() {
        return Err("no action or grading object in the document".into());
    }
    let mut r = Reporter::new();
    for (obj, module) in modules {
        r.section(&format!("crosscheck {}", obj.name));

        r.report(&module.hopf.check_lemma_aux());
        r.report(&embed_and_compare(module).map_err(|e| e.to_string())?);

        let fc = full_centre(module).map_err(|e| e.to_string())?;
        let underlying = HModule::from_module_algebra(module);
        let (_, _, adjunction) = adjunction_maps(&fc.yd.module, &underlying);
        r.report(&adjunction);
        let trivial = HModule::trivial(&module.hopf);
        let (_, _, adjunction) = adjunction_maps(&fc.yd.module, &trivial);
        r.report(&adjunction);

        r.report(&morita_amplification_check(module, 2).map_err(|e| e.to_string())?);

        if as_group_algebra(&module.hopf).is_ok() {
            let g = g_full_centre(module).map_err(|e| e.to_string())?;
            r.report(&g.report);
        }
        if as_dual_group_algebra(&module.hopf).is_ok() {
            let g = graded_full_centre(module).map_err(|e| e.to_string())?;
            r.report(&g.report);
        }
    }
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("../../fixtures")
            .join(name)
    }

    #[test]
    fn verify_f1_exits_zero() {
        let (code, report) = execute(&Command::Verify { file: fixture("f1.scalg") });
        assert_eq!(code, EXIT_OK, "{report}");
    }

    #[test]
    fn centre_f4_reports_dimension_two() {
        let (code, report) = execute(&Command::Centre { file: fixture("f4.scalg"), out: None });
        assert_eq!(code, EXIT_OK, "{report}");
        assert!(report.contains("dim Z(A) = 2"));
        assert!(report.contains("quantum commutative: PASS"));
    }

    #[test]
    fn crosscheck_f4_passes() {
        let (code, report) = execute(&Command::Crosscheck { file: fixture("f4.scalg") });
        assert_eq!(code, EXIT_OK, "{report}");
    }

    #[test]
    fn missing_file_is_an_error() {
        let (code, report) = execute(&Command::Verify { file: PathBuf::from("/nonexistent.scalg") });
        assert_eq!(code, EXIT_ERROR);
        assert!(report.starts_with("error:"));
    }

    #[test]
    fn broken_axioms_exit_one() {
        let dir = std::env::temp_dir().join("scalg-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("broken.scalg");
        // g*g = g breaks associativity/unit.
        std::fs::write(
            &path,
            "scalars rational\nobject hopf bad\ndim 2\nunit 0 1\nmul 0 0 0 1\nmul 0 1 1 1\nmul 1 0 1 1\nmul 1 1 1 1\ncomul 0 0 0 1\ncomul 1 1 1 1\ncounit 0 1\ncounit 1 1\nantipode 0 0 1\nantipode 1 1 1\nend\n",
        )
        .unwrap();
        let (code, report) = execute(&Command::Verify { file: path });
        assert_eq!(code, EXIT_CHECK_FAILED, "{report}");
        assert!(report.contains("FAIL"));
    }
}
