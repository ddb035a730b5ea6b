//! Output formats: cohomology reports as JSON, CSV or an aligned table, and the
//! cochain complex as JSON, CSV or Graphviz DOT.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use schubert_core::{
    boundary, build_complex, describe_group, CoefficientRing, DegreeGroup, Direction, GradedModule,
    Result,
};

/// Stable JSON shape of a cohomology computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub n: usize,
    pub k: usize,
    pub coefficients: CoefficientRing,
    pub groups: Vec<DegreeGroup>,
}

impl CohomologyReport {
    pub fn new(n: usize, k: usize, module: &GradedModule) -> Self {
        CohomologyReport {
            n,
            k,
            coefficients: module.ring,
            groups: module.groups.clone(),
        }
    }

    pub fn module(&self) -> GradedModule {
        GradedModule {
            ring: self.coefficients,
            groups: self.groups.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Columns `degree,free_rank,torsion`; torsion orders are `;`-separated.
    pub fn write_csv(&self, out: impl io::Write) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["degree", "free_rank", "torsion"])?;
        for g in &self.groups {
            let torsion: Vec<String> = g.torsion.iter().map(u64::to_string).collect();
            w.write_record([
                g.degree.to_string(),
                g.free_rank.to_string(),
                torsion.join(";"),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Integral results with only `Z/2` torsion get the two-column summand count
    /// layout; everything else lists each group.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let two_torsion_only = self.coefficients == CoefficientRing::Integers
            && self
                .groups
                .iter()
                .all(|g| g.torsion.iter().all(|&t| t == 2));
        let title = format!("Gr_{}({})", self.k, self.n);
        if two_torsion_only {
            let _ = writeln!(s, "{title:<12} {:>10} {:>10}", "Z", "Z/2");
            for g in &self.groups {
                let _ = writeln!(
                    s,
                    "{:<12} {:>10} {:>10}",
                    format!("H^{}", g.degree),
                    g.free_rank,
                    g.torsion.len()
                );
            }
        } else {
            let _ = writeln!(
                s,
                "{title:<12} {:>10}  group over {}",
                "rank", self.coefficients
            );
            for g in &self.groups {
                let _ = writeln!(
                    s,
                    "{:<12} {:>10}  {}",
                    format!("H^{}", g.degree),
                    g.free_rank,
                    describe_group(self.coefficients, g)
                );
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub id: String,
    pub label: String,
    pub degree: usize,
}

/// One nonzero coefficient of the cochain differential, `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub source: String,
    pub target: String,
    pub r: usize,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexExport {
    pub n: usize,
    pub k: usize,
    pub cells: Vec<CellRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl ComplexExport {
    /// Cells and edges in canonical basis order: by degree, then lexicographically.
    pub fn build(n: usize, k: usize) -> Result<Self> {
        let c = build_complex(n, k, Direction::Cohomological)?;
        let mut cells = Vec::new();
        let mut edges = Vec::new();
        for (degree, basis) in c.bases().iter().enumerate() {
            for s in basis {
                cells.push(CellRecord {
                    id: s.id(),
                    label: s.label(),
                    degree,
                });
                edges.extend(boundary(s).into_iter().map(|t| EdgeRecord {
                    source: s.id(),
                    target: t.target.id(),
                    r: t.r,
                    value: t.value,
                }));
            }
        }
        Ok(ComplexExport { n, k, cells, edges })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serializes")
    }

    /// Header `source,target,r,value`, one row per edge.
    pub fn write_csv(&self, out: impl io::Write) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(out);
        w.write_record(["source", "target", "r", "value"])?;
        for e in &self.edges {
            w.serialize(e)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Nodes grouped into one rank per degree; `-2` edges blue dotted, `+2` red solid.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"Gr_{}({})\" {{", self.k, self.n);
        let _ = writeln!(s, "  rankdir=LR;");
        let _ = writeln!(s, "  node [shape=plaintext];");
        let mut i = 0;
        while i < self.cells.len() {
            let degree = self.cells[i].degree;
            let _ = write!(s, "  {{ rank=same;");
            while i < self.cells.len() && self.cells[i].degree == degree {
                let c = &self.cells[i];
                let _ = write!(s, " \"{}\" [label=\"{}\"];", c.id, c.label);
                i += 1;
            }
            let _ = writeln!(s, " }}");
        }
        for e in &self.edges {
            let (color, style) = if e.value < 0 {
                ("blue", "dotted")
            } else {
                ("red", "solid")
            };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{:+}\", color={color}, style={style}];",
                e.source, e.target, e.value
            );
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schubert_core::cohomology_closed;

    #[test]
    fn integral_table_counts_summands() {
        let h = cohomology_closed(4, 2, CoefficientRing::Integers).unwrap();
        let t = CohomologyReport::new(4, 2, &h).to_table();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].starts_with("Gr_2(4)"));
        assert_eq!(
            lines[3].split_whitespace().collect::<Vec<_>>(),
            ["H^2", "0", "1"]
        );
    }

    #[test]
    fn general_table_describes_groups() {
        let h = cohomology_closed(4, 2, CoefficientRing::IntegersMod(4)).unwrap();
        let t = CohomologyReport::new(4, 2, &h).to_table();
        assert!(t.contains("(Z/2)^2"));
        assert!(t.lines().nth(1).unwrap().ends_with("Z/4"));
    }

    #[test]
    fn dot_edge_styles() {
        let dot = ComplexExport::build(3, 1).unwrap().to_dot();
        assert!(dot.contains("\"2\" -> \"3\" [label=\"-2\", color=blue, style=dotted];"));
        let dot = ComplexExport::build(6, 3).unwrap().to_dot();
        assert!(dot.contains("\"1-2-5\" -> \"1-3-5\" [label=\"+2\", color=red, style=solid];"));
    }
}
