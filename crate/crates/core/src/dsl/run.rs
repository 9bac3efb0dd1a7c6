use sha2::{Digest, Sha256};

use crate::dsl::parse::Document;
use crate::factorization::{chiral_split, ChiralSplit, Factorization};
use crate::invariants::{
    binding_surgery, fibration_report, folded_invariants, matches, openbook_first_homology,
    FibrationOverDisk, FoldedAssembly, InvariantError, SurgeryDirection,
};
use crate::report::{Report, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("unknown word `{0}`")]
    UnknownWord(String),
    #[error("unknown assembly `{0}`")]
    UnknownAssembly(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// The commands the CLI exposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Homology action matrix of a word.
    Action { word: String },
    /// Chiral split of a word, with certificate digest and diagnostics.
    Split { word: String },
    /// Invariants of the fibration a word defines.
    Invariants { word: String },
    /// First homology of the boundary open book of a word.
    OpenbookH1 { word: String },
    /// Invariants of a declared assembly and of both its sides.
    Fold { assembly: String },
    /// Fold, then the binding surgery in the given direction.
    Surgery {
        assembly: String,
        direction: SurgeryDirection,
    },
}

fn lookup_word<'d>(doc: &'d Document, name: &str) -> Result<&'d Factorization, RunError> {
    doc.word(name)
        .map(|w| &w.factorization)
        .ok_or_else(|| RunError::UnknownWord(name.to_string()))
}

fn lookup_assembly(doc: &Document, name: &str) -> Result<FoldedAssembly, RunError> {
    let decl = doc
        .assembly(name)
        .ok_or_else(|| RunError::UnknownAssembly(name.to_string()))?;
    let pos = lookup_word(doc, &decl.positive)?;
    let neg = lookup_word(doc, &decl.negative)?;
    Ok(FoldedAssembly::new(
        FibrationOverDisk::new(pos.clone()),
        FibrationOverDisk::new(neg.clone()),
    )?)
}

/// Executes one command against a parsed document. `echo` is the command
/// line as the user typed it, repeated in the envelope.
pub fn run(command: &Command, doc: &Document, echo: &str) -> Result<Report, RunError> {
    let mut report = Report::envelope(echo);
    match command {
        Command::Action { word } => {
            let w = lookup_word(doc, word)?;
            let action = w.word_action();
            report.push_text("surface", w.surface().to_string());
            report.push_int("word.letters", w.len() as i64);
            report.push("action", Value::Matrix(action.matrix().clone()));
            report.push_flag("action.identity", action.is_identity());
        }
        Command::Split { word } => {
            let w = lookup_word(doc, word)?;
            let split = chiral_split(w);
            push_split(&mut report, w, &split);
        }
        Command::Invariants { word } => {
            let w = lookup_word(doc, word)?;
            let f = FibrationOverDisk::new(w.clone());
            report.push_text("surface", w.surface().to_string());
            report.push_invariants("fibration", &fibration_report(&f));
            if w.has_radical_letters() {
                report.push_flag("fibration.radical_letters", true);
            }
        }
        Command::OpenbookH1 { word } => {
            let w = lookup_word(doc, word)?;
            let ob = FibrationOverDisk::new(w.clone()).boundary_open_book();
            let h1 = openbook_first_homology(&ob).map_err(RunError::from)?;
            report.push_text("page", ob.page().to_string());
            report.push_list("openbook.h1", h1.clone());
            report.push_text(
                "openbook.h1.group",
                crate::invariants::HomologyClass::Known(h1).to_string(),
            );
        }
        Command::Fold { assembly } => {
            let fa = lookup_assembly(doc, assembly)?;
            push_fold(&mut report, &fa);
        }
        Command::Surgery {
            assembly,
            direction,
        } => {
            let fa = lookup_assembly(doc, assembly)?;
            let folded = folded_invariants(&fa);
            report.push_invariants("assembly", &folded);
            let after = binding_surgery(&folded, *direction, None);
            report.push_text(
                "surgery.direction",
                match direction {
                    SurgeryDirection::CircleToSphere => "circle-to-sphere",
                    SurgeryDirection::SphereToCircle => "sphere-to-circle",
                },
            );
            report.push_invariants("surgery", &after);
        }
    }
    Ok(report)
}

fn push_split(report: &mut Report, input: &Factorization, split: &ChiralSplit) {
    report.push_text("surface", input.surface().to_string());
    report.push_int("input.letters", input.len() as i64);
    report.push_int("split.positive.count", split.positive.len() as i64);
    report.push_int("split.negative.count", split.negative.len() as i64);
    for (prefix, part) in [
        ("split.positive", &split.positive),
        ("split.negative", &split.negative),
    ] {
        for (i, letter) in part.letters().iter().enumerate() {
            report.push(
                format!("{prefix}.letter.{i}"),
                Value::Text(letter.to_string()),
            );
        }
    }
    report.push_int("split.moves", split.certificate.len() as i64);
    report.push_text("certificate.digest", certificate_digest(&split.certificate));
    report.push_int(
        "split.max_abs_coefficient",
        split.sorted_word().max_abs_coefficient(),
    );
    let preserved = split.sorted_word().word_action() == input.word_action();
    report.push_flag("split.action_preserved", preserved);
}

fn push_fold(report: &mut Report, fa: &FoldedAssembly) {
    let matching = matches(fa.positive_side(), fa.negative_side()).expect("same surface");
    report.push_text("surface", fa.positive_side().surface().to_string());
    report.push_flag("matching", matching.matched);
    report.push_invariants("assembly", &folded_invariants(fa));
    report.push_invariants("positive", &fibration_report(fa.positive_side()));
    report.push_invariants("negative", &fibration_report(fa.negative_side()));
    if let Ok(h1) = openbook_first_homology(&fa.fold_open_book()) {
        report.push_list("fold.h1", h1.clone());
        report.push_text(
            "fold.h1.group",
            crate::invariants::HomologyClass::Known(h1).to_string(),
        );
    }
}

/// Stable digest of a Hurwitz move certificate.
pub fn certificate_digest(certificate: &[usize]) -> String {
    let mut hasher = Sha256::new();
    for (i, m) in certificate.iter().enumerate() {
        if i > 0 {
            hasher.update(b",");
        }
        hasher.update(m.to_string().as_bytes());
    }
    format!("sha256:{:x}", hasher.finalize())
}
