//! Bound-table rendering: one row per dimension with the window index `k`,
//! the case, the counting lower bound, the previously known upper bound
//! `2^(n-k)`, the constructive bound of this crate, and whether the
//! independent domination number is exactly known for that dimension.

use clap::ValueEnum;
use cubedom::{alpha_known_exact, classify, lower_bound, upper_bound, Dimension};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Tsv,
    Markdown,
}

struct Row {
    n: u32,
    k: u32,
    case: String,
    lower: u64,
    prior: String,
    bound: String,
    exact: &'static str,
}

fn row(n: u32) -> Row {
    let d = Dimension::new(n).expect("caller validates the range");
    let class = classify(d);
    let ub = upper_bound(d);
    Row {
        n,
        k: class.k,
        case: class.case.to_string(),
        lower: lower_bound(d),
        prior: format!("2^{}", n - class.k),
        bound: ub.to_string(),
        exact: if alpha_known_exact(d) { "yes" } else { "no" },
    }
}

/// Renders rows for `from..=to`. Pure: identical inputs yield identical
/// bytes.
pub fn render(from: u32, to: u32, format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Tsv => {
            out.push_str("n\tk\tcase\tlower\tprior\tbound\texact\n");
            for n in from..=to {
                let r = row(n);
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.n, r.k, r.case, r.lower, r.prior, r.bound, r.exact
                ));
            }
        }
        TableFormat::Markdown => {
            out.push_str("| n | k | case | lower | prior | bound | exact |\n");
            out.push_str("|--:|--:|:-----|------:|:------|:------|:------|\n");
            for n in from..=to {
                let r = row(n);
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    r.n, r.k, r.case, r.lower, r.prior, r.bound, r.exact
                ));
            }
        }
    }
    out
}
