//! Mechanical re-derivations at small scale: monomial tables, case
//! analyses, axiom checks and the replacement propositions.

mod axioms;
mod cases;
mod fibers;
mod matching;
mod section5;
mod tables;

use std::io::Write;

use serde_json::{json, Value};

use crate::algebra::{free_schur, shifted_free_schur, NcPoly, PolyContext};
use crate::error::Result;
use crate::tableau::{Partition, StrictPartition};

pub use axioms::{verify_axioms, AxiomReport, AxiomSystem, InfoRecord};
pub use cases::{verify_case_analysis, CaseReport, Elimination, Reason};
pub use fibers::{
    hook_representative, hook_representatives_report, plactic_fibers_agree, shifted_fibers_agree,
    HookReport,
};
pub use matching::{content_blocks, count_perfect_matchings, match_block, ContentBlock, Matching};
pub use section5::{
    forced_closure, free_identity_p1_p2, verify_section5, verify_section5_plactic,
    verify_section5_shifted, Closure, EdgeRule, Section5Report,
};
pub use tables::{
    product_monomials, table_specs, verify_table, verify_tables, TableFamily, TableReport,
    TableSpec,
};

/// The small products of free Schur functions that the checks expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Product {
    S1S11,
    S11S1,
    S1S2,
    S2S1,
    P1P21,
    P21P1,
    P1P2,
    P2P1,
    P1P3,
    P3P1,
}

enum Factor {
    Schur(&'static [u32]),
    Shifted(&'static [u32]),
}

impl Factor {
    fn expand(&self, ctx: PolyContext) -> Result<NcPoly> {
        match self {
            Factor::Schur(p) => free_schur(&Partition::new(p.to_vec())?, ctx),
            Factor::Shifted(p) => shifted_free_schur(&StrictPartition::new(p.to_vec())?, ctx),
        }
    }
}

impl Product {
    pub fn name(self) -> &'static str {
        match self {
            Product::S1S11 => "S(1)*S(1,1)",
            Product::S11S1 => "S(1,1)*S(1)",
            Product::S1S2 => "S(1)*S(2)",
            Product::S2S1 => "S(2)*S(1)",
            Product::P1P21 => "P(1)*P(2,1)",
            Product::P21P1 => "P(2,1)*P(1)",
            Product::P1P2 => "P(1)*P(2)",
            Product::P2P1 => "P(2)*P(1)",
            Product::P1P3 => "P(1)*P(3)",
            Product::P3P1 => "P(3)*P(1)",
        }
    }

    fn factors(self) -> (Factor, Factor) {
        use Factor::{Schur, Shifted};
        match self {
            Product::S1S11 => (Schur(&[1]), Schur(&[1, 1])),
            Product::S11S1 => (Schur(&[1, 1]), Schur(&[1])),
            Product::S1S2 => (Schur(&[1]), Schur(&[2])),
            Product::S2S1 => (Schur(&[2]), Schur(&[1])),
            Product::P1P21 => (Shifted(&[1]), Shifted(&[2, 1])),
            Product::P21P1 => (Shifted(&[2, 1]), Shifted(&[1])),
            Product::P1P2 => (Shifted(&[1]), Shifted(&[2])),
            Product::P2P1 => (Shifted(&[2]), Shifted(&[1])),
            Product::P1P3 => (Shifted(&[1]), Shifted(&[3])),
            Product::P3P1 => (Shifted(&[3]), Shifted(&[1])),
        }
    }

    /// The product with its factors swapped.
    pub fn swapped(self) -> Product {
        match self {
            Product::S1S11 => Product::S11S1,
            Product::S11S1 => Product::S1S11,
            Product::S1S2 => Product::S2S1,
            Product::S2S1 => Product::S1S2,
            Product::P1P21 => Product::P21P1,
            Product::P21P1 => Product::P1P21,
            Product::P1P2 => Product::P2P1,
            Product::P2P1 => Product::P1P2,
            Product::P1P3 => Product::P3P1,
            Product::P3P1 => Product::P1P3,
        }
    }

    pub fn expand(self, ctx: PolyContext) -> Result<NcPoly> {
        let (f, g) = self.factors();
        f.expand(ctx)?.mul(&g.expand(ctx)?)
    }
}

/// A report that renders as one JSON line and passes or fails.
pub trait Check {
    fn passed(&self) -> bool;
    fn to_json(&self) -> Value;
}

impl Check for TableReport {
    fn passed(&self) -> bool {
        TableReport::passed(self)
    }
    fn to_json(&self) -> Value {
        TableReport::to_json(self)
    }
}

impl Check for CaseReport {
    fn passed(&self) -> bool {
        CaseReport::passed(self)
    }
    fn to_json(&self) -> Value {
        CaseReport::to_json(self)
    }
}

impl Check for AxiomReport {
    fn passed(&self) -> bool {
        AxiomReport::passed(self)
    }
    fn to_json(&self) -> Value {
        AxiomReport::to_json(self)
    }
}

impl Check for Section5Report {
    fn passed(&self) -> bool {
        Section5Report::passed(self)
    }
    fn to_json(&self) -> Value {
        Section5Report::to_json(self)
    }
}

/// Writes one JSON object per report, then a summary object. Returns
/// whether every report passed.
pub fn write_jsonl<C: Check>(
    out: &mut impl Write,
    check: &str,
    reports: &[C],
    extra: &[Value],
) -> std::io::Result<bool> {
    for r in reports {
        writeln!(out, "{}", r.to_json())?;
    }
    for v in extra {
        writeln!(out, "{v}")?;
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let ok = passed == reports.len();
    let summary = json!({
        "summary": check,
        "total": reports.len(),
        "passed": passed,
        "failed": reports.len() - passed,
        "pass": ok,
    });
    writeln!(out, "{summary}")?;
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swapping_is_an_involution() {
        for p in [
            Product::S1S11,
            Product::P21P1,
            Product::P3P1,
            Product::S2S1,
            Product::P1P2,
        ] {
            assert_eq!(p.swapped().swapped(), p);
            assert_ne!(p.swapped(), p);
        }
    }

    #[test]
    fn summary_line_is_last() {
        let reports = verify_tables(Some(TableFamily::Unshifted1)).unwrap();
        let mut buf = Vec::new();
        assert!(write_jsonl(&mut buf, "tables", &reports, &[]).unwrap());
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        let last: Value = serde_json::from_str(lines[3]).unwrap();
        assert_eq!(last["summary"], "tables");
        assert_eq!(last["passed"], 3);
    }
}
