use super::{Identity, Outcome, SuiteConfig, SuiteName};
use crate::extended::koszul_line_cohomology;

const S: SuiteName = SuiteName::Koszul;

/// Highest polynomial degree in the symbol; lines only need `q ≤ p + c ≤ d + 2`.
const QMAX: usize = 8;

pub fn identities(_cfg: &SuiteConfig) -> Vec<Identity> {
    vec![
        Identity::exact(
            "koszul.cohomology_concentrated",
            S,
            "symbol complex of the extended differential",
            "exact ranks; d ∈ {1,2,3}, q − p = c ∈ −d..2",
            |_| {
                let mut rows = Vec::new();
                let mut pass = true;
                let mut bad = Vec::new();
                for d in 1..=3usize {
                    for c in -(d as i64)..=2 {
                        for e in koszul_line_cohomology(d, c, QMAX) {
                            let expected = usize::from(e.p == d && e.q == 0);
                            if e.dim_cohomology != expected {
                                pass = false;
                                bad.push(format!("d={} p={} q={}: {}", e.d, e.p, e.q, e.dim_cohomology));
                            }
                            rows.push(serde_json::json!({
                                "d": e.d, "c": e.c, "p": e.p, "q": e.q,
                                "dim_space": e.dim_space, "dim_cohomology": e.dim_cohomology,
                            }));
                        }
                    }
                }
                Ok(Outcome {
                    pass,
                    detail: (!bad.is_empty()).then(|| bad.join("; ")),
                    table: Some(serde_json::Value::Array(rows)),
                })
            },
        ),
        Identity::exact(
            "koszul.line_dimensions_d2",
            S,
            "symbol complex in dimension two along q = p",
            "exact; space dimensions (1, 4, 3) and vanishing cohomology",
            |_| {
                let line = koszul_line_cohomology(2, 0, QMAX);
                let spaces: Vec<usize> = line.iter().map(|e| e.dim_space).collect();
                let coh: Vec<usize> = line.iter().map(|e| e.dim_cohomology).collect();
                Ok(Outcome {
                    pass: spaces == [1, 4, 3] && coh == [0, 0, 0],
                    detail: Some(format!("spaces {:?}, cohomology {:?}", spaces, coh)),
                    table: None,
                })
            },
        ),
    ]
}
