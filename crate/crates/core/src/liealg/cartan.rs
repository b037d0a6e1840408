use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSpec {
    entries: Vec<Vec<i64>>,
}

/// Positive roots beyond this many, or root coefficients beyond
/// `COEFF_LIMIT`, are taken as a sign of infinite type.
const ROOT_LIMIT: usize = 4096;
const COEFF_LIMIT: i64 = 1 << 20;

impl CartanSpec {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "Cartan row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(Error::Validation(format!(
                    "Cartan diagonal entry ({0},{0}) is {1}",
                    i + 1,
                    row[i]
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j && a > 0 {
                    return Err(Error::Validation(format!(
                        "Cartan entry ({},{}) = {a} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::Validation(format!(
                        "Cartan zero pattern not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanSpec { entries })
    }

    /// Type `A_m`: a path.
    pub fn type_a(m: usize) -> Self {
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        CartanSpec { entries }
    }

    pub fn b2() -> Self {
        CartanSpec {
            entries: vec![vec![2, -2], vec![-1, 2]],
        }
    }

    pub fn g2() -> Self {
        CartanSpec {
            entries: vec![vec![2, -3], vec![-1, 2]],
        }
    }

    pub fn c3() -> Self {
        CartanSpec {
            entries: vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `a_ij`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Number of positive roots, found as the orbit of the simple roots
    /// under the simple reflections `sᵢ(β) = β − (Σⱼ aᵢⱼβⱼ)αᵢ`.
    pub fn positive_root_count(&self) -> Result<usize> {
        let n = self.size();
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut alpha = vec![0; n];
            alpha[i] = 1;
            roots.insert(alpha.clone());
            queue.push_back(alpha);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| self.entries[i][j] * beta[j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[i] -= pairing;
                if image.iter().any(|&c| c < 0) {
                    // Only αᵢ itself leaves the positive cone.
                    continue;
                }
                if roots.insert(image.clone()) {
                    if roots.len() > ROOT_LIMIT || image[i] > COEFF_LIMIT {
                        return Err(Error::UnsupportedType(format!(
                            "more than {ROOT_LIMIT} positive roots; not of finite type"
                        )));
                    }
                    queue.push_back(image);
                }
            }
        }
        Ok(roots.len())
    }
}
