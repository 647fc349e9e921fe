//! Binary parity-check matrices and syndrome computation over GF(2).

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use rand::seq::SliceRandom;
use rand::Rng;

/// Sparse binary parity-check matrix.
///
/// Rows are stored as sorted lists of column indices. A row is a check node,
/// a column a variable node; the row weight is the check node degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    m: usize,
    n: usize,
    rows: Vec<Vec<usize>>,
    seed: Option<u64>,
}

/// Check node degree distribution: `(degree, count)` pairs with strictly
/// increasing degrees. Collapses to a single entry for check-regular codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    entries: Vec<(usize, usize)>,
}

impl DegreeProfile {
    /// Profile of a check-regular code: `count` checks of degree `degree`.
    pub fn regular(degree: usize, count: usize) -> Self {
        assert!(degree >= 1 && count >= 1);
        DegreeProfile {
            entries: vec![(degree, count)],
        }
    }

    /// Builds a profile from `(degree, count)` pairs.
    pub fn new(mut entries: Vec<(usize, usize)>) -> Result<Self> {
        entries.sort_unstable();
        if entries.is_empty() {
            return Err(Error::config("degree profile must not be empty"));
        }
        for window in entries.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::config(format!(
                    "duplicate degree {} in profile",
                    window[0].0
                )));
            }
        }
        for &(d, c) in &entries {
            if d == 0 || c == 0 {
                return Err(Error::config("degrees and counts must be positive"));
            }
        }
        Ok(DegreeProfile { entries })
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Total number of checks, summed over all degree classes.
    pub fn total_checks(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    /// The single check degree if the profile is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        match self.entries.as_slice() {
            [(d, _)] => Some(*d),
            _ => None,
        }
    }
}

impl ParityCheckMatrix {
    /// Builds a matrix from explicit rows (lists of column indices).
    ///
    /// Rows are sorted internally; indices must be in `[0, n)` and unique
    /// within a row, and every row must contain at least one entry.
    pub fn new(n: usize, rows: Vec<Vec<usize>>, seed: Option<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::config("matrix must have at least one column"));
        }
        if rows.is_empty() {
            return Err(Error::config("matrix must have at least one row"));
        }
        let m = rows.len();
        let mut sorted = rows;
        for (j, row) in sorted.iter_mut().enumerate() {
            if row.is_empty() {
                return Err(Error::config(format!("row {} has degree 0", j)));
            }
            row.sort_unstable();
            for pair in row.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::config(format!(
                        "row {} contains duplicate column {}",
                        j, pair[0]
                    )));
                }
            }
            if *row.last().unwrap() >= n {
                return Err(Error::config(format!(
                    "row {} references column {} outside 0..{}",
                    j,
                    row.last().unwrap(),
                    n
                )));
            }
        }
        Ok(ParityCheckMatrix {
            m,
            n,
            rows: sorted,
            seed,
        })
    }

    /// Number of rows (check nodes).
    pub fn num_checks(&self) -> usize {
        self.m
    }

    /// Number of columns (variable nodes).
    pub fn num_variables(&self) -> usize {
        self.n
    }

    /// Column indices of row `j`, ascending.
    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    /// Seed used by the randomized construction, if any.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Total number of stored entries (edges of the Tanner graph).
    pub fn num_edges(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Weight of each column.
    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.n];
        for row in &self.rows {
            for &c in row {
                w[c] += 1;
            }
        }
        w
    }

    /// Syndrome of a hard-decision vector: bit `j` is the XOR of `y` over
    /// the columns of row `j`.
    pub fn syndrome(&self, y: &BitVector) -> Result<BitVector> {
        if y.len() != self.n {
            return Err(Error::Dimension(format!(
                "vector length {} does not match {} columns",
                y.len(),
                self.n
            )));
        }
        let mut s = BitVector::zeros(self.m);
        for (j, row) in self.rows.iter().enumerate() {
            let mut parity = false;
            for &c in row {
                parity ^= y.get(c);
            }
            s.set(j, parity);
        }
        Ok(s)
    }

    /// Aggregates rows by degree.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for row in &self.rows {
            *counts.entry(row.len()).or_insert(0) += 1;
        }
        DegreeProfile {
            entries: counts.into_iter().collect(),
        }
    }
}

/// Maximum number of fresh socket permutations tried before the
/// construction gives up.
const PERMUTATION_RETRIES: usize = 100;

/// Builds a random (dv, d)-regular parity-check matrix with `n` columns.
///
/// Gallager-style socket construction: each variable owns `dv` sockets,
/// each check `d`. A seeded random permutation pairs them; duplicate edges
/// within a row are resolved by swapping the offending socket with a
/// random one. Up to 100 fresh permutations are tried before giving up.
///
/// Deterministic for fixed `(n, dv, d, seed)`.
pub fn build_regular_ldpc(n: usize, dv: usize, d: usize, seed: u64) -> Result<ParityCheckMatrix> {
    build_regular_ldpc_opt(n, dv, d, seed, false)
}

/// [`build_regular_ldpc`] with optional 4-cycle removal.
///
/// With `remove_four_cycles` set, pairs of rows sharing two or more columns
/// are broken up by further socket swaps after construction. Useful for
/// experiments on how syndrome-bit correlation affects estimator spread.
pub fn build_regular_ldpc_opt(
    n: usize,
    dv: usize,
    d: usize,
    seed: u64,
    remove_four_cycles: bool,
) -> Result<ParityCheckMatrix> {
    if d == 0 || dv == 0 {
        return Err(Error::config("degrees must be at least 1"));
    }
    if d > n {
        return Err(Error::config(format!(
            "check degree {} exceeds column count {}",
            d, n
        )));
    }
    let edges = n
        .checked_mul(dv)
        .ok_or_else(|| Error::config("n * dv overflows"))?;
    if edges % d != 0 {
        return Err(Error::config(format!(
            "n * dv = {} is not divisible by check degree {}",
            edges, d
        )));
    }
    let m = edges / d;

    let mut rng = rng_from_seed(seed);
    for _ in 0..PERMUTATION_RETRIES {
        // perm[slot] = variable socket assigned to check socket `slot`;
        // check j owns slots j*d .. (j+1)*d and variable socket s belongs
        // to variable s / dv.
        let mut perm: Vec<usize> = (0..edges).collect();
        perm.shuffle(&mut rng);

        if !resolve_duplicates(&mut perm, m, d, dv, &mut rng) {
            continue;
        }
        if remove_four_cycles && !resolve_four_cycles(&mut perm, m, d, dv, &mut rng) {
            continue;
        }

        let rows: Vec<Vec<usize>> = (0..m)
            .map(|j| {
                let mut row: Vec<usize> = perm[j * d..(j + 1) * d].iter().map(|s| s / dv).collect();
                row.sort_unstable();
                row
            })
            .collect();
        return ParityCheckMatrix::new(n, rows, Some(seed));
    }
    Err(Error::ConstructionFailed(format!(
        "no valid ({}, {})-regular matrix with n = {} after {} permutations",
        dv, d, n, PERMUTATION_RETRIES
    )))
}

/// Swaps sockets until no row contains the same variable twice.
/// Returns false if the swap budget runs out.
///
/// A swap partner is accepted only if it strictly reduces the number of
/// duplicate edges: the partner's variable must be absent from the bad
/// row, and the bad row's variable must either be absent from the
/// partner's row or replace a duplicate there. Such a partner exists even
/// in the densest case d = n (a variable missing from the bad row is
/// duplicated in some other row by pigeonhole), so the repair cannot
/// cycle; a random shake covers anything the scan cannot improve.
fn resolve_duplicates(
    perm: &mut [usize],
    m: usize,
    d: usize,
    dv: usize,
    rng: &mut impl Rng,
) -> bool {
    let total = perm.len();
    let mut budget = 50 * total;
    while let Some(slot) = find_duplicate_slot(perm, m, d, dv) {
        if budget == 0 {
            return false;
        }
        budget -= 1;
        let j = row_of(slot, d);
        let var = perm[slot] / dv;
        let start = rng.random_range(0..total);
        let mut swapped = false;
        for step in 0..total {
            let other = (start + step) % total;
            let k = row_of(other, d);
            if k == j {
                continue;
            }
            let other_var = perm[other] / dv;
            if row_count(perm, j, d, dv, other_var) > 0 {
                continue;
            }
            if row_count(perm, k, d, dv, var) == 0 || row_count(perm, k, d, dv, other_var) >= 2 {
                perm.swap(slot, other);
                swapped = true;
                break;
            }
        }
        if !swapped {
            perm.swap(slot, rng.random_range(0..total));
        }
    }
    true
}

/// First slot whose variable already occurs earlier in its row.
fn find_duplicate_slot(perm: &[usize], m: usize, d: usize, dv: usize) -> Option<usize> {
    let mut seen = vec![usize::MAX; d];
    for j in 0..m {
        let base = j * d;
        for (k, slot) in (base..base + d).enumerate() {
            let var = perm[slot] / dv;
            if seen[..k].contains(&var) {
                return Some(slot);
            }
            seen[k] = var;
        }
    }
    None
}

/// Occurrences of `var` in row `j`.
fn row_count(perm: &[usize], j: usize, d: usize, dv: usize, var: usize) -> usize {
    perm[j * d..(j + 1) * d]
        .iter()
        .filter(|&&s| s / dv == var)
        .count()
}

/// Swaps sockets until no two rows share two or more variables.
/// Swaps that would reintroduce duplicate edges are rolled back.
fn resolve_four_cycles(
    perm: &mut [usize],
    m: usize,
    d: usize,
    dv: usize,
    rng: &mut impl Rng,
) -> bool {
    let total = perm.len();
    let mut budget = 200 * total;
    loop {
        match find_four_cycle(perm, m, d, dv) {
            None => return true,
            Some(slot) => loop {
                if budget == 0 {
                    return false;
                }
                budget -= 1;
                let other = rng.random_range(0..total);
                perm.swap(slot, other);
                if row_of(slot, d) != row_of(other, d)
                    && !row_has_duplicate(perm, row_of(slot, d), d, dv)
                    && !row_has_duplicate(perm, row_of(other, d), d, dv)
                {
                    break;
                }
                // Undo and retry with a different partner.
                perm.swap(slot, other);
            },
        }
    }
}

fn row_of(slot: usize, d: usize) -> usize {
    slot / d
}

fn row_has_duplicate(perm: &[usize], j: usize, d: usize, dv: usize) -> bool {
    let mut vars: Vec<usize> = perm[j * d..(j + 1) * d].iter().map(|s| s / dv).collect();
    vars.sort_unstable();
    vars.windows(2).any(|w| w[0] == w[1])
}

/// Finds one check socket participating in a 4-cycle, if any.
fn find_four_cycle(perm: &[usize], m: usize, d: usize, dv: usize) -> Option<usize> {
    let n_vars = perm.len() / dv;
    let mut var_rows: Vec<Vec<usize>> = vec![Vec::new(); n_vars];
    for j in 0..m {
        for slot in j * d..(j + 1) * d {
            var_rows[perm[slot] / dv].push(j);
        }
    }
    let mut pair_seen = std::collections::HashSet::new();
    for rows in &var_rows {
        for (a, &r1) in rows.iter().enumerate() {
            for &r2 in &rows[a + 1..] {
                let key = if r1 < r2 { (r1, r2) } else { (r2, r1) };
                if !pair_seen.insert(key) {
                    // r1 and r2 share at least two variables; return a slot
                    // of one shared variable in the higher row.
                    let shared: Vec<usize> = (key.1 * d..(key.1 + 1) * d)
                        .filter(|&s| {
                            let v = perm[s] / dv;
                            (key.0 * d..(key.0 + 1) * d).any(|t| perm[t] / dv == v)
                        })
                        .collect();
                    return shared.first().copied();
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// alist text format
// ---------------------------------------------------------------------------

/// Parses a matrix from alist text.
///
/// Layout: `n m` on the first line, maximum column/row degree on the second,
/// then `n` column degrees, `m` row degrees, `n` column adjacency lines
/// (1-based row indices) and `m` row adjacency lines (1-based column
/// indices). Lists are unpadded; the padded variant (0 fillers) is rejected
/// because indices are 1-based.
pub fn load_alist(text: &str) -> Result<ParityCheckMatrix> {
    let mut lines = text.lines().enumerate();

    let mut next_line = |expect: &str| -> Result<(usize, &str)> {
        lines
            .next()
            .map(|(i, l)| (i + 1, l))
            .ok_or_else(|| Error::AlistParse {
                line: text.lines().count() + 1,
                msg: format!("unexpected end of input, expected {}", expect),
            })
    };

    fn parse_ints(line_no: usize, line: &str, expect: usize, what: &str) -> Result<Vec<usize>> {
        let vals: std::result::Result<Vec<usize>, _> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect();
        let vals = vals.map_err(|e| Error::AlistParse {
            line: line_no,
            msg: format!("{}: {}", what, e),
        })?;
        if vals.len() != expect {
            return Err(Error::AlistParse {
                line: line_no,
                msg: format!("{}: expected {} values, found {}", what, expect, vals.len()),
            });
        }
        Ok(vals)
    }

    let (ln, line) = next_line("dimensions")?;
    let dims = parse_ints(ln, line, 2, "dimensions line")?;
    let (n, m) = (dims[0], dims[1]);
    if n == 0 || m == 0 {
        return Err(Error::AlistParse {
            line: ln,
            msg: "dimensions must be positive".into(),
        });
    }

    let (ln, line) = next_line("maximum degrees")?;
    let maxes = parse_ints(ln, line, 2, "maximum degree line")?;
    let (max_col, max_row) = (maxes[0], maxes[1]);

    let (ln, line) = next_line("column degrees")?;
    let col_degs = parse_ints(ln, line, n, "column degree list")?;
    if col_degs.iter().copied().max() != Some(max_col) {
        return Err(Error::AlistParse {
            line: ln,
            msg: format!(
                "declared maximum column degree {} does not match degree list",
                max_col
            ),
        });
    }

    let (ln, line) = next_line("row degrees")?;
    let row_degs = parse_ints(ln, line, m, "row degree list")?;
    if row_degs.iter().copied().max() != Some(max_row) {
        return Err(Error::AlistParse {
            line: ln,
            msg: format!(
                "declared maximum row degree {} does not match degree list",
                max_row
            ),
        });
    }
    if let Some(j) = row_degs.iter().position(|&dg| dg == 0) {
        return Err(Error::AlistParse {
            line: ln,
            msg: format!("row {} has degree 0", j + 1),
        });
    }
    let col_edge_total: usize = col_degs.iter().sum();
    let row_edge_total: usize = row_degs.iter().sum();
    if col_edge_total != row_edge_total {
        return Err(Error::AlistParse {
            line: ln,
            msg: format!(
                "column degrees sum to {} but row degrees sum to {}",
                col_edge_total, row_edge_total
            ),
        });
    }

    // One adjacency list per line; entries 1-based, a 0 is an error.
    let mut parse_adjacency =
        |count: usize, degs: &[usize], upper: usize, what: &str| -> Result<Vec<Vec<usize>>> {
            let mut out = Vec::with_capacity(count);
            for (idx, &deg) in degs.iter().enumerate().take(count) {
                let (ln, line) = next_line(what)?;
                let vals = parse_ints(ln, line, deg, what)?;
                let mut list = Vec::with_capacity(deg);
                for v in vals {
                    if v == 0 {
                        return Err(Error::AlistParse {
                            line: ln,
                            msg: "alist indices are 1-based, found 0".into(),
                        });
                    }
                    if v > upper {
                        return Err(Error::AlistParse {
                            line: ln,
                            msg: format!("index {} exceeds maximum {}", v, upper),
                        });
                    }
                    if list.contains(&(v - 1)) {
                        return Err(Error::AlistParse {
                            line: ln,
                            msg: format!("duplicate index {} in {} {}", v, what, idx + 1),
                        });
                    }
                    list.push(v - 1);
                }
                out.push(list);
            }
            Ok(out)
        };

    let col_lists = parse_adjacency(n, &col_degs, m, "column list")?;
    let col_lists_first_line = 5;
    let row_lists = parse_adjacency(m, &row_degs, n, "row list")?;

    for (extra_no, extra) in lines {
        if !extra.trim().is_empty() {
            return Err(Error::AlistParse {
                line: extra_no + 1,
                msg: "trailing content after adjacency lists".into(),
            });
        }
    }

    // Cross-check: both adjacency views must describe the same incidences.
    let mut cols_from_rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, row) in row_lists.iter().enumerate() {
        for &c in row {
            cols_from_rows[c].push(j);
        }
    }
    for (c, derived) in cols_from_rows.iter_mut().enumerate() {
        derived.sort_unstable();
        let mut declared = col_lists[c].clone();
        declared.sort_unstable();
        if *derived != declared {
            return Err(Error::AlistParse {
                line: col_lists_first_line + c,
                msg: format!("column list {} is inconsistent with the row lists", c + 1),
            });
        }
    }

    ParityCheckMatrix::new(n, row_lists, None)
}

impl ParityCheckMatrix {
    /// Serializes to canonical alist text: single-space separated,
    /// unpadded ascending lists, LF line endings, trailing newline.
    pub fn to_alist(&self) -> String {
        let col_weights = self.column_weights();
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (j, row) in self.rows.iter().enumerate() {
            for &c in row {
                cols[c].push(j);
            }
        }
        let max_col = col_weights.iter().copied().max().unwrap_or(0);
        let max_row = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);

        let join = |vals: &[usize], offset: usize| -> String {
            vals.iter()
                .map(|v| (v + offset).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };

        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.n, self.m));
        out.push_str(&format!("{} {}\n", max_col, max_row));
        out.push_str(&join(&col_weights, 0));
        out.push('\n');
        out.push_str(&join(
            &self.rows.iter().map(|r| r.len()).collect::<Vec<_>>(),
            0,
        ));
        out.push('\n');
        for col in &cols {
            out.push_str(&join(col, 1));
            out.push('\n');
        }
        for row in &self.rows {
            out.push_str(&join(row, 1));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HAMMING_7_4: &str = "7 3\n3 4\n1 1 2 1 2 2 3\n4 4 4\n1\n2\n1 2\n3\n1 3\n2 3\n1 2 3\n1 3 5 7\n2 3 6 7\n4 5 6 7\n";

    #[test]
    fn regular_construction_has_exact_degrees() {
        let h = build_regular_ldpc(2000, 3, 6, 1).unwrap();
        assert_eq!(h.num_checks(), 1000);
        assert_eq!(h.num_variables(), 2000);
        assert!(h.rows().all(|r| r.len() == 6));
        assert!(h.column_weights().iter().all(|&w| w == 3));
        assert_eq!(h.degree_profile().entries(), &[(6, 1000)]);
    }

    #[test]
    fn single_check_covers_all_variables() {
        let h = build_regular_ldpc(6, 1, 6, 0).unwrap();
        assert_eq!(h.num_checks(), 1);
        assert_eq!(h.row(0), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn full_density_rows_are_constructible() {
        // d = n forces every row to contain every variable exactly once;
        // the duplicate repair must find that unique matrix.
        let h = build_regular_ldpc(16, 4, 16, 5).unwrap();
        assert_eq!(h.num_checks(), 4);
        for j in 0..4 {
            assert_eq!(h.row(j), (0..16).collect::<Vec<_>>());
        }
    }

    #[test]
    fn divisibility_violation_is_rejected() {
        let err = build_regular_ldpc(2001, 3, 6, 1).unwrap_err();
        assert!(matches!(err, Error::InvalidConfig(_)), "{err}");
    }

    #[test]
    fn construction_is_deterministic() {
        let a = build_regular_ldpc(120, 3, 6, 77).unwrap();
        let b = build_regular_ldpc(120, 3, 6, 77).unwrap();
        assert_eq!(a, b);
        let c = build_regular_ldpc(120, 3, 6, 78).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn four_cycle_removal_leaves_degrees_intact() {
        let h = build_regular_ldpc_opt(60, 2, 4, 3, true).unwrap();
        assert!(h.rows().all(|r| r.len() == 4));
        assert!(h.column_weights().iter().all(|&w| w == 2));
        // No two rows share two or more columns.
        for a in 0..h.num_checks() {
            for b in a + 1..h.num_checks() {
                let shared = h.row(a).iter().filter(|c| h.row(b).contains(c)).count();
                assert!(shared < 2, "rows {} and {} share {} columns", a, b, shared);
            }
        }
    }

    #[test]
    fn hamming_alist_round_trips() {
        let h = load_alist(HAMMING_7_4).unwrap();
        assert_eq!(h.num_checks(), 3);
        assert_eq!(h.num_variables(), 7);
        assert_eq!(h.row(0), &[0, 2, 4, 6]);
        assert_eq!(h.to_alist(), HAMMING_7_4);
    }

    #[test]
    fn alist_zero_index_is_rejected() {
        let text = HAMMING_7_4.replace("1 3 5 7", "0 3 5 7");
        let err = load_alist(&text).unwrap_err();
        match err {
            Error::AlistParse { line, ref msg } => {
                assert_eq!(line, 12);
                assert!(msg.contains("1-based"), "{msg}");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn alist_inconsistent_lists_are_rejected() {
        // Swap two entries of a column list so it no longer matches the rows.
        let text = HAMMING_7_4.replace("1 2 3\n1 3 5 7", "1 2\n1 3 5 7");
        let err = load_alist(&text).unwrap_err();
        assert!(matches!(err, Error::AlistParse { .. }), "{err}");
    }

    #[test]
    fn syndrome_of_zero_vector_is_zero() {
        let h = build_regular_ldpc(30, 3, 6, 5).unwrap();
        let s = h.syndrome(&BitVector::zeros(30)).unwrap();
        assert_eq!(s.weight(), 0);
    }

    #[test]
    fn syndrome_of_unit_vector_is_matrix_column() {
        let h = load_alist(HAMMING_7_4).unwrap();
        for i in 0..7 {
            let e = BitVector::from_indices(7, &[i]);
            let s = h.syndrome(&e).unwrap();
            let expected: Vec<usize> = (0..3).filter(|&j| h.row(j).contains(&i)).collect();
            assert_eq!(s.support(), expected);
        }
    }

    #[test]
    fn syndrome_rejects_wrong_length() {
        let h = load_alist(HAMMING_7_4).unwrap();
        assert!(matches!(
            h.syndrome(&BitVector::zeros(8)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn syndrome_ignores_codeword_component() {
        // Enumerate the full codebook of the [7,4] Hamming code by brute
        // force and check syndrome(x + e) == syndrome(e).
        let h = load_alist(HAMMING_7_4).unwrap();
        let codewords: Vec<BitVector> = (0u32..128)
            .map(|bits| {
                let mut v = BitVector::zeros(7);
                for i in 0..7 {
                    v.set(i, bits >> i & 1 == 1);
                }
                v
            })
            .filter(|v| h.syndrome(v).unwrap().weight() == 0)
            .collect();
        assert_eq!(codewords.len(), 16);
        let e = BitVector::from_indices(7, &[1, 4]);
        let se = h.syndrome(&e).unwrap();
        for x in &codewords {
            assert_eq!(h.syndrome(&(x ^ &e)).unwrap(), se);
        }
    }

    #[test]
    fn degree_profile_aggregates_rows() {
        let h = build_regular_ldpc(60, 3, 6, 2).unwrap();
        assert_eq!(h.degree_profile().entries(), &[(6, 30)]);

        let irr = ParityCheckMatrix::new(
            6,
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 1, 2, 3, 4]],
            None,
        )
        .unwrap();
        assert_eq!(irr.degree_profile().entries(), &[(3, 2), (5, 1)]);
    }

    #[test]
    fn degree_profile_edge_count_identity() {
        let h = build_regular_ldpc(120, 3, 4, 9).unwrap();
        let profile = h.degree_profile();
        let edge_sum: usize = profile.entries().iter().map(|&(d, c)| d * c).sum();
        assert_eq!(edge_sum, h.num_edges());
    }
}
