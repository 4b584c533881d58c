//! Flag types `a = {a_1 < ... < a_r}` in ambient dimension `n`, minimal coset
//! representatives `S_n(a)`, projections to Grassmannians, pair flattenings
//! and the reduction to the fiber of `Fl(a, n) -> Gr(a_1, n)`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FlagType {
    steps: Vec<usize>,
    ambient: usize,
}

impl FlagType {
    /// Steps must satisfy `0 < a_1 < ... < a_r < n`. An empty step list is
    /// allowed and denotes the one-point variety (the fiber of a Grassmannian).
    pub fn new(steps: Vec<usize>, ambient: usize) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::InvalidFlag("ambient dimension must be positive".into()));
        }
        let mut prev = 0;
        for &a in &steps {
            if a <= prev || a >= ambient {
                return Err(Error::InvalidFlag(format!(
                    "steps {steps:?} must be strictly increasing inside 1..{ambient}"
                )));
            }
            prev = a;
        }
        Ok(FlagType { steps, ambient })
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        FlagType::new(vec![k], n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        FlagType::new((1..n).collect(), n)
    }

    pub fn point(ambient: usize) -> Result<Self> {
        FlagType::new(Vec::new(), ambient)
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of steps `r`; see [`FlagType::is_point`] for `r = 0`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_point(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.steps.len() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.steps.len() + 1 == self.ambient
    }

    /// `a_i` with the conventions `a_0 = 0` and `a_{r+1} = n`.
    pub fn boundary(&self, i: usize) -> usize {
        match i {
            0 => 0,
            i if i <= self.len() => self.steps[i - 1],
            i if i == self.len() + 1 => self.ambient,
            _ => panic!("boundary index {i} out of range 0..={}", self.len() + 1),
        }
    }

    /// Block sizes `b_i = a_i - a_{i-1}` for `i` in `1..=r+1`.
    pub fn block_sizes(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .map(|i| self.boundary(i) - self.boundary(i - 1))
            .collect()
    }

    /// Positions of block `A_i = {a_{i-1}+1, ..., a_i}`.
    pub fn block(&self, i: usize) -> RangeInclusive<usize> {
        self.boundary(i - 1) + 1..=self.boundary(i)
    }

    /// `dim Fl(a, n) = sum_i a_i (a_{i+1} - a_i)`.
    pub fn dimension(&self) -> usize {
        (1..=self.len())
            .map(|i| self.boundary(i) * (self.boundary(i + 1) - self.boundary(i)))
            .sum()
    }

    /// Whether `w` lies in `S_n(a)`: ascents at every non-step position.
    pub fn contains(&self, w: &Permutation) -> bool {
        w.size() == self.ambient
            && (1..self.ambient)
                .filter(|i| !self.steps.contains(i))
                .all(|i| w.at(i) < w.at(i + 1))
    }

    pub fn check_member(&self, w: &Permutation) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotMinimalRepresentative {
                perm: w.to_string(),
                flag: self.to_string(),
            })
        }
    }

    /// `S_n(a)` in lexicographic order.
    pub fn minimal_reps(&self) -> Vec<Permutation> {
        let n = self.ambient;
        let sizes = self.block_sizes();
        let mut out = Vec::new();
        let mut values = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        // each block is an increasing run, so choose values block by block
        fn rec(
            sizes: &[usize],
            block: usize,
            filled_in_block: usize,
            values: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Permutation>,
        ) {
            let n = used.len() - 1;
            if values.len() == n {
                out.push(Permutation::from_vec_unchecked(values.clone()));
                return;
            }
            if filled_in_block == sizes[block] {
                rec(sizes, block + 1, 0, values, used, out);
                return;
            }
            let lower = if filled_in_block == 0 {
                1
            } else {
                values[values.len() - 1] + 1
            };
            for v in lower..=n {
                if !used[v] {
                    used[v] = true;
                    values.push(v);
                    rec(sizes, block, filled_in_block + 1, values, used, out);
                    values.pop();
                    used[v] = false;
                }
            }
        }
        rec(&sizes, 0, 0, &mut values, &mut used, &mut out);
        out
    }

    /// `w_a`, the longest element of the parabolic subgroup: reverses every
    /// block internally.
    pub fn longest_parabolic(&self) -> Permutation {
        let mut values = Vec::with_capacity(self.ambient);
        for i in 1..=self.len() + 1 {
            values.extend(self.block(i).rev());
        }
        Permutation::from_vec_unchecked(values)
    }

    /// The maximal-length element `w0 w_a` of `S_n(a)`; indexes the
    /// fundamental class.
    pub fn maximal_rep(&self) -> Permutation {
        Permutation::longest_element(self.ambient)
            .compose(&self.longest_parabolic())
            .expect("same size")
    }

    /// `a_γ = {a_2 - a_1 < ... < a_r - a_1}` in ambient `n - a_1`.
    pub fn fiber(&self) -> Result<FlagType> {
        let a1 = *self
            .steps
            .first()
            .ok_or_else(|| Error::InvalidFlag("the point has no fiber reduction".into()))?;
        FlagType::new(
            self.steps[1..].iter().map(|a| a - a1).collect(),
            self.ambient - a1,
        )
    }

    fn check_step(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                valid: format!("1..={}", self.len()),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(ToString::to_string).collect();
        write!(f, "{}/{}", steps.join(","), self.ambient)
    }
}

impl FromStr for FlagType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (steps, ambient) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("flag type {s:?} must look like \"1,2/4\"")))?;
        let ambient = ambient
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad ambient dimension in {s:?}")))?;
        let steps = steps
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad step {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FlagType::new(steps, ambient)
    }
}

/// A Schubert class `[X_w]` of `Fl(a, n)`, indexed by dimension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SchubertClass {
    w: Permutation,
    flag: FlagType,
}

impl SchubertClass {
    pub fn new(w: Permutation, flag: FlagType) -> Result<Self> {
        flag.check_member(&w)?;
        Ok(SchubertClass { w, flag })
    }

    pub fn perm(&self) -> &Permutation {
        &self.w
    }

    pub fn flag(&self) -> &FlagType {
        &self.flag
    }

    pub fn dimension(&self) -> usize {
        self.w.length()
    }

    pub fn codim(&self) -> usize {
        self.flag.dimension() - self.w.length()
    }

    pub fn dual(&self) -> SchubertClass {
        SchubertClass {
            w: dual(&self.w, &self.flag).expect("member of S_n(a)"),
            flag: self.flag.clone(),
        }
    }
}

/// Codimension of `[X_w]`, i.e. `dim Fl(a, n) - length(w)`.
pub fn codim(w: &Permutation, flag: &FlagType) -> Result<usize> {
    flag.check_member(w)?;
    Ok(flag.dimension() - w.length())
}

/// Checks membership of every entry and that codimensions sum to the
/// dimension of the flag variety.
pub fn check_complementary(tuple: &[Permutation], flag: &FlagType) -> Result<Vec<usize>> {
    let codims = tuple.iter().map(|w| codim(w, flag)).collect::<Result<Vec<_>>>()?;
    let total: usize = codims.iter().sum();
    if total != flag.dimension() {
        return Err(Error::CodimensionMismatch {
            expected: flag.dimension(),
            found: total,
        });
    }
    Ok(codims)
}

/// `w_i`: the image of `w` in `S_n({a_i})`, obtained by sorting the first
/// `a_i` entries and the remaining entries.
pub fn project_to_step(w: &Permutation, flag: &FlagType, i: usize) -> Result<Permutation> {
    flag.check_member(w)?;
    flag.check_step(i)?;
    let cut = flag.boundary(i);
    let mut head = w.values()[..cut].to_vec();
    let mut tail = w.values()[cut..].to_vec();
    head.sort_unstable();
    tail.sort_unstable();
    head.extend(tail);
    Ok(Permutation::from_vec_unchecked(head))
}

/// Codimension of `f_i(X_w)` in `Gr(a_i, n)`:
/// `sum_{j <= a_i} (n - a_i + j - w(j))`.
pub fn projected_codim(w: &Permutation, flag: &FlagType, i: usize) -> Result<usize> {
    flag.check_member(w)?;
    flag.check_step(i)?;
    let n = flag.ambient();
    let ai = flag.boundary(i);
    let top: usize = (1..=ai).map(|j| n - ai + j).sum();
    let used: usize = w.values()[..ai].iter().sum();
    Ok(top - used)
}

/// `w_{i,j} = w_{A_i ∪ A_j}` for `1 <= i < j <= r + 1`.
pub fn flatten_pair(w: &Permutation, flag: &FlagType, i: usize, j: usize) -> Result<Permutation> {
    flag.check_member(w)?;
    let blocks = flag.len() + 1;
    if !(1 <= i && i < j && j <= blocks) {
        return Err(Error::IndexOutOfRange {
            index: if i == 0 || i >= j { i } else { j },
            valid: format!("1 <= i < j <= {blocks}"),
        });
    }
    let positions: Vec<usize> = flag.block(i).chain(flag.block(j)).collect();
    w.flatten(&positions)
}

/// The data attached to `w` by the projection `f_1 : Fl(a, n) -> Gr(a_1, n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaReduction {
    /// `w_1 ∈ S_n({a_1})`.
    pub base: Permutation,
    /// `w_γ ∈ S_{n - a_1}(a_γ)`.
    pub fiber_perm: Permutation,
    pub fiber_flag: FlagType,
}

pub fn gamma_reduce(w: &Permutation, flag: &FlagType) -> Result<GammaReduction> {
    flag.check_member(w)?;
    let fiber_flag = flag.fiber()?;
    let base = project_to_step(w, flag, 1)?;
    let gamma: Vec<usize> = (flag.boundary(1) + 1..=flag.ambient()).collect();
    let fiber_perm = w.flatten(&gamma)?;
    Ok(GammaReduction {
        base,
        fiber_perm,
        fiber_flag,
    })
}

/// Poincaré dual `w∨ = w0 w w_a`.
pub fn dual(w: &Permutation, flag: &FlagType) -> Result<Permutation> {
    flag.check_member(w)?;
    Permutation::longest_element(flag.ambient()).compose(&w.compose(&flag.longest_parabolic())?)
}
