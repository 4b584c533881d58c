use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{partitions_between, Partition};
use crate::error::{Error, Result};

/// `c^ν_{λμ}`: the number of Littlewood–Richardson tableaux of shape `ν/λ`
/// and content `μ`.
///
/// A tableau qualifies when rows weakly increase, columns strictly increase
/// and its reverse reading word (rows top to bottom, each right to left) is
/// a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|row| (lambda.part(row)..nu.part(row)).rev().map(move |col| (row, col)))
        .collect();
    let mut filling: Vec<Vec<usize>> = (0..nu.len()).map(|row| vec![0; nu.part(row)]).collect();
    let mut used = vec![0usize; mu.len() + 1];
    let mut count = 0;
    fill(0, &cells, lambda, mu, &mut filling, &mut used, &mut count);
    count
}

fn fill(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    filling: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut u64,
) {
    if k == cells.len() {
        *count += 1;
        return;
    }
    let (row, col) = cells[k];
    // right neighbour already filled (reading right to left)
    let max_value = if col + 1 < filling[row].len() {
        filling[row][col + 1]
    } else {
        mu.len()
    };
    let min_value = if row > 0 && col >= lambda.part(row - 1) {
        filling[row - 1][col] + 1
    } else {
        1
    };
    for v in min_value..=max_value {
        if used[v] == mu.part(v - 1) {
            continue;
        }
        if v > 1 && used[v] + 1 > used[v - 1] {
            continue;
        }
        used[v] += 1;
        filling[row][col] = v;
        fill(k + 1, cells, lambda, mu, filling, used, count);
        used[v] -= 1;
    }
    filling[row][col] = 0;
}

/// `σ_λ · σ_μ` in `H*(Gr(rows, rows + cols))`: the LR product with every
/// term outside the `rows × cols` rectangle dropped.
pub fn lr_product(lambda: &Partition, mu: &Partition, rows: usize, cols: usize) -> BTreeMap<Partition, u64> {
    partitions_between(lambda, rows, cols, lambda.size() + mu.size())
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Coefficient of the point class `((n-r)^r)` in `Π σ_{λ^k}` inside
/// `Gr(r, n)`; zero unless `Σ |λ^k| = r(n - r)`.
pub fn product_to_point(partitions: &[Partition], r: usize, n: usize) -> Result<BigUint> {
    if r == 0 || r >= n {
        return Err(Error::InvalidFlag(format!("Gr({r},{n}) is not a Grassmannian")));
    }
    let cols = n - r;
    if let Some(bad) = partitions.iter().find(|l| !l.fits(r, cols)) {
        return Err(Error::InvalidPartition(format!(
            "{bad} does not fit the {r}x{cols} rectangle"
        )));
    }
    if partitions.iter().map(Partition::size).sum::<usize>() != r * cols {
        return Ok(BigUint::zero());
    }
    let mut acc: BTreeMap<Partition, BigUint> = BTreeMap::from([(Partition::empty(), BigUint::one())]);
    for lambda in partitions {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (mu, c) in &acc {
            for (nu, d) in lr_product(mu, lambda, r, cols) {
                *next.entry(nu).or_insert_with(BigUint::zero) += c * BigUint::from(d);
            }
        }
        acc = next;
    }
    Ok(acc
        .remove(&Partition::rectangle(r, cols))
        .unwrap_or_else(BigUint::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn all_partitions(max_size: usize, rows: usize, cols: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| partitions_between(&Partition::empty(), rows, cols, s))
            .collect()
    }

    /// Pieri: σ_λ σ_(k) sums over ν/λ horizontal strips of size k.
    fn is_horizontal_strip(lambda: &Partition, nu: &Partition) -> bool {
        nu.contains(lambda) && (0..nu.len()).all(|i| i == 0 || nu.part(i) <= lambda.part(i - 1))
    }

    #[test]
    fn lr_examples() {
        let l = part(&[2, 1]);
        assert_eq!(lr_coefficient(&Partition::empty(), &l, &l), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[2])), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[2, 1])), 0);
        // the first coefficient exceeding one
        assert_eq!(
            lr_coefficient(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])),
            2
        );
    }

    #[test]
    fn lr_is_symmetric() {
        let parts = all_partitions(4, 4, 4);
        for l in &parts {
            for m in &parts {
                for nu in partitions_between(&Partition::empty(), 4, 8, l.size() + m.size()) {
                    assert_eq!(
                        lr_coefficient(l, m, &nu),
                        lr_coefficient(m, l, &nu),
                        "{l} {m} {nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn pieri_rule() {
        for lambda in all_partitions(5, 4, 4) {
            for k in 0..=3 {
                for nu in partitions_between(&lambda, 5, 8, lambda.size() + k) {
                    let expected = u64::from(is_horizontal_strip(&lambda, &nu));
                    assert_eq!(lr_coefficient(&lambda, &part(&[k]), &nu), expected);
                }
            }
        }
    }

    #[test]
    fn product_to_point_examples() {
        let one = part(&[1]);
        assert_eq!(
            product_to_point(&vec![one.clone(); 4], 2, 4).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            product_to_point(&[one.clone(), one.clone(), part(&[2])], 2, 4).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            product_to_point(&[part(&[2, 2]), Partition::empty()], 2, 4).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            product_to_point(&vec![one.clone(); 6], 2, 5).unwrap(),
            BigUint::from(5u32)
        );
        assert!(product_to_point(std::slice::from_ref(&one), 2, 4)
            .unwrap()
            .is_zero());
        assert!(product_to_point(&[part(&[3])], 2, 4).is_err());
        // σ2 · σ11 = 0 in Gr(2,4)
        assert!(product_to_point(&[part(&[2]), part(&[1, 1])], 2, 4)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn product_to_point_ignores_order() {
        let parts = all_partitions(6, 2, 3);
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    if a.size() + b.size() + c.size() != 6 {
                        continue;
                    }
                    let x = product_to_point(&[a.clone(), b.clone(), c.clone()], 2, 5).unwrap();
                    assert_eq!(
                        x,
                        product_to_point(&[c.clone(), b.clone(), a.clone()], 2, 5).unwrap()
                    );
                    assert_eq!(
                        x,
                        product_to_point(&[b.clone(), a.clone(), c.clone()], 2, 5).unwrap()
                    );
                }
            }
        }
    }
}
