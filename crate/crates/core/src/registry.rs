//! Closed forms for the avoidance classes of classical three-element
//! patterns: plain counts, even/odd refinements, and explicit element
//! descriptions where the class has one.
//!
//! Keys are complement-canonicalized pattern sets: the complement map fixes
//! `1/2/3`, `13/2`, `123` and swaps `1/23` with `12/3` while preserving both
//! the class size and the sign split, so each formula is stored once.
//! Formulas apply only on their stated ranges of `n`; below that the lookup
//! returns `None` and callers fall back to brute force.

use crate::enumeration::fibonacci;
use crate::partition::SetPartition;
use crate::pattern::GenPattern;
use num::{BigUint, One, Zero};
use std::sync::OnceLock;

/// The five classical patterns of `[3]`, in mask-bit order.
pub const PI3_LABELS: [&str; 5] = ["1/2/3", "1/23", "12/3", "13/2", "123"];

const A: u8 = 1; // 1/2/3
const B: u8 = 2; // 1/23
const C: u8 = 4; // 12/3
const D: u8 = 8; // 13/2
const E: u8 = 16; // 123

pub fn pi3_patterns() -> &'static [GenPattern; 5] {
    static PATS: OnceLock<[GenPattern; 5]> = OnceLock::new();
    PATS.get_or_init(|| PI3_LABELS.map(|s| s.parse().expect("valid pattern")))
}

/// Mask of a set of patterns, provided they are all classical patterns of
/// `[3]`; `None` otherwise.
pub fn pi3_mask(patterns: &[GenPattern]) -> Option<u8> {
    let mut mask = 0u8;
    for p in patterns {
        if !p.is_classical() || p.k() != 3 {
            return None;
        }
        let part = p.to_partition();
        let bit = pi3_patterns()
            .iter()
            .position(|q| q.to_partition() == part)
            .expect("every partition of [3] is listed");
        mask |= 1 << bit;
    }
    Some(mask)
}

/// Complementing every pattern in the set swaps `1/23` and `12/3`.
pub fn complement_mask(mask: u8) -> u8 {
    let b = (mask >> 1) & 1;
    let c = (mask >> 2) & 1;
    (mask & !(B | C)) | (b << 2) | (c << 1)
}

pub fn canonical_mask(mask: u8) -> u8 {
    mask.min(complement_mask(mask))
}

/// Human-readable label, e.g. `1/2/3;12/3`.
pub fn mask_label(mask: u8) -> String {
    let mut parts = Vec::new();
    for (i, label) in PI3_LABELS.iter().enumerate() {
        if mask & (1 << i) != 0 {
            parts.push(*label);
        }
    }
    parts.join(";")
}

/// `1·3·5⋯(m-1)` for even `m`, the number of perfect matchings of `m`
/// points; the empty product is 1.
fn odd_double_factorial(m: usize) -> BigUint {
    let mut v = BigUint::one();
    let mut f = 1usize;
    while f + 1 < m {
        f += 2;
        v *= BigUint::from(f);
    }
    v
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

/// Number of matchings of `[n]` (partitions with all blocks of size at most
/// two): `sum C(n, 2i) (2i-1)!!`.
fn matchings_total(n: usize) -> BigUint {
    let mut total = BigUint::zero();
    let mut i = 0;
    while 2 * i <= n {
        total += binom(n, 2 * i) * odd_double_factorial(2 * i);
        i += 1;
    }
    total
}

/// Closed-form class size, when registered for this pattern set and `n`.
pub fn closed_count(n: usize, mask: u8) -> Option<BigUint> {
    let m = canonical_mask(mask);
    let popcount = m.count_ones();
    if popcount >= 4 {
        if n < 4 {
            return None;
        }
        return Some(if m & A != 0 && m & E != 0 {
            BigUint::zero()
        } else {
            BigUint::one()
        });
    }
    match m {
        m if m == A && n >= 1 => Some(pow2(n - 1)),
        m if m == B => Some(binom(n, 2) + BigUint::one()),
        m if m == D && n >= 1 => Some(pow2(n - 1)),
        m if m == E => Some(matchings_total(n)),
        m if m == A | B && n >= 3 => Some(big(3)),
        m if m == A | D && n >= 1 => Some(big(n)),
        m if m == A | E && n >= 4 => Some(if n == 4 { big(3) } else { BigUint::zero() }),
        m if m == B | C && n >= 3 => Some(big(3)),
        m if m == B | D && n >= 1 => Some(big(n)),
        m if m == B | E && n >= 1 => Some(big(n)),
        m if m == D | E => Some(fibonacci(n)),
        m if m == A | B | C && n >= 4 => Some(BigUint::one()),
        m if m == A | B | D && n >= 4 => Some(big(2)),
        m if m == A | B | E && n >= 4 => Some(BigUint::zero()),
        m if m == A | D | E && n >= 4 => Some(if n == 4 {
            BigUint::one()
        } else {
            BigUint::zero()
        }),
        m if m == B | C | D && n >= 4 => Some(big(2)),
        m if m == B | C | E && n >= 4 => Some(big(2)),
        m if m == B | D | E && n >= 4 => Some(big(2)),
        _ => None,
    }
}

/// Closed-form even/odd split, when registered. The `123` split follows the
/// sign rule `(-1)^(number of two-element blocks)`: matchings on `4i`
/// matched elements are even, on `4i+2` odd.
pub fn closed_parity(n: usize, mask: u8) -> Option<(BigUint, BigUint)> {
    let m = canonical_mask(mask);
    let odd_n = n % 2 == 1;
    let popcount = m.count_ones();
    if popcount >= 4 {
        if n < 4 {
            return None;
        }
        if m & A != 0 && m & E != 0 {
            return Some((BigUint::zero(), BigUint::zero()));
        }
        // The single avoider is 12…n when 1/2/3 is in the set (two or more
        // blocks are banned), and 1/2/…/n otherwise.
        return Some(if m & A != 0 {
            if odd_n {
                (BigUint::one(), BigUint::zero())
            } else {
                (BigUint::zero(), BigUint::one())
            }
        } else {
            (BigUint::one(), BigUint::zero())
        });
    }
    match m {
        m if m == A && n >= 1 => Some(if odd_n {
            (BigUint::one(), pow2(n - 1) - BigUint::one())
        } else {
            (pow2(n - 1) - BigUint::one(), BigUint::one())
        }),
        m if m == B => {
            let nn = n as i64;
            let even = (nn - 1) * (nn - 1) / 4 + 1;
            let odd = nn * nn / 4;
            Some((big(even as usize), big(odd as usize)))
        }
        m if m == D && n >= 2 => Some((pow2(n - 2), pow2(n - 2))),
        m if m == E => {
            let mut even = BigUint::zero();
            let mut odd = BigUint::zero();
            let mut i = 0;
            while 4 * i <= n {
                even += binom(n, 4 * i) * odd_double_factorial(4 * i);
                i += 1;
            }
            let mut i = 0;
            while 4 * i + 2 <= n {
                odd += binom(n, 4 * i + 2) * odd_double_factorial(4 * i + 2);
                i += 1;
            }
            Some((even, odd))
        }
        m if m == A | B && n >= 4 => Some(if odd_n {
            (BigUint::one(), big(2))
        } else {
            (big(2), BigUint::one())
        }),
        m if m == A | D && n >= 4 => Some(if odd_n {
            (BigUint::one(), big(n - 1))
        } else {
            (big(n - 1), BigUint::one())
        }),
        m if m == A | E && n >= 4 => Some(if n == 4 {
            (big(3), BigUint::zero())
        } else {
            (BigUint::zero(), BigUint::zero())
        }),
        m if m == B | C && n >= 4 => Some(if odd_n {
            (big(2), BigUint::one())
        } else {
            (BigUint::one(), big(2))
        }),
        m if m == B | D && n >= 4 => Some((big(n.div_ceil(2)), big(n / 2))),
        m if m == B | E && n >= 4 => Some((BigUint::one(), big(n - 1))),
        m if m == D | E => {
            let f = fibonacci(n);
            let half_down = &f / big(2);
            let half_up = (&f + BigUint::one()) / big(2);
            Some(match n % 6 {
                0 | 1 => (half_up, half_down),
                2 | 5 => (half_down.clone(), half_down),
                _ => (half_down, half_up),
            })
        }
        m if m == A | B | C && n >= 4 => Some(if odd_n {
            (BigUint::one(), BigUint::zero())
        } else {
            (BigUint::zero(), BigUint::one())
        }),
        m if m == A | B | D && n >= 4 => Some((BigUint::one(), BigUint::one())),
        m if m == A | B | E && n >= 4 => Some((BigUint::zero(), BigUint::zero())),
        m if m == A | D | E && n >= 4 => Some(if n == 4 {
            (BigUint::one(), BigUint::zero())
        } else {
            (BigUint::zero(), BigUint::zero())
        }),
        m if m == B | C | D && n >= 4 => Some(if odd_n {
            (big(2), BigUint::zero())
        } else {
            (BigUint::one(), BigUint::one())
        }),
        m if m == B | C | E && n >= 4 => Some((BigUint::one(), BigUint::one())),
        m if m == B | D | E && n >= 4 => Some((BigUint::one(), BigUint::one())),
        _ => None,
    }
}

fn part(blocks: Vec<Vec<usize>>) -> SetPartition {
    SetPartition::from_blocks(blocks).expect("valid family member")
}

fn single_block(n: usize) -> SetPartition {
    part(vec![(1..=n).collect()])
}

fn singletons(n: usize) -> SetPartition {
    part((1..=n).map(|e| vec![e]).collect())
}

/// Layered matchings of `[n]`, one per composition of `n` into parts 1, 2.
fn layered_matchings(n: usize) -> Vec<SetPartition> {
    if n == 0 {
        return vec![SetPartition::empty()];
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(start: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if start > n {
            out.push(part(blocks.clone()));
            return;
        }
        blocks.push(vec![start]);
        rec(start + 1, n, blocks, out);
        blocks.pop();
        if start < n {
            blocks.push(vec![start, start + 1]);
            rec(start + 2, n, blocks, out);
            blocks.pop();
        }
    }
    rec(1, n, &mut blocks, &mut out);
    out
}

/// Explicit element description of the avoidance class, for the pattern
/// sets whose classes the registry lists element by element. Sorted.
pub fn explicit_avoiders(n: usize, mask: u8) -> Option<Vec<SetPartition>> {
    if let Some(mut direct) = explicit_direct(n, mask) {
        direct.sort();
        return Some(direct);
    }
    // The complement map is a bijection between the two classes.
    let mut v = explicit_direct(n, complement_mask(mask))?;
    for p in &mut v {
        *p = p.complement();
    }
    v.sort();
    Some(v)
}

fn explicit_direct(n: usize, mask: u8) -> Option<Vec<SetPartition>> {
    let popcount = mask.count_ones();
    if popcount >= 4 {
        if n < 4 {
            return None;
        }
        if mask & A != 0 && mask & E != 0 {
            return Some(Vec::new());
        }
        return Some(vec![if mask & A != 0 {
            single_block(n)
        } else {
            singletons(n)
        }]);
    }
    match mask {
        // {1/2/3, 12/3}: 12…n, 1/23…n, 13…n/2
        m if m == A | C && n >= 3 => Some(vec![
            single_block(n),
            part(vec![vec![1], (2..=n).collect()]),
            part(vec![std::iter::once(1).chain(3..=n).collect(), vec![2]]),
        ]),
        // {1/2/3, 13/2}: 12…k/(k+1)…n
        m if m == A | D && n >= 1 => Some(
            (1..=n)
                .map(|k| {
                    if k == n {
                        single_block(n)
                    } else {
                        part(vec![(1..=k).collect(), (k + 1..=n).collect()])
                    }
                })
                .collect(),
        ),
        // {1/2/3, 123}: the three perfect matchings of [4], nothing later
        m if m == A | E && n >= 4 => Some(if n == 4 {
            vec![
                part(vec![vec![1, 2], vec![3, 4]]),
                part(vec![vec![1, 3], vec![2, 4]]),
                part(vec![vec![1, 4], vec![2, 3]]),
            ]
        } else {
            Vec::new()
        }),
        // {1/23, 12/3}: 12…n, 1/2/…/n, 1n/2/3/…/(n-1)
        m if m == B | C && n >= 3 => Some(vec![
            single_block(n),
            singletons(n),
            part(
                std::iter::once(vec![1, n])
                    .chain((2..n).map(|e| vec![e]))
                    .collect(),
            ),
        ]),
        // {12/3, 13/2}: 1/2/…/(k-1)/k(k+1)…n
        m if m == C | D && n >= 1 => Some(
            (1..=n)
                .map(|k| {
                    part(
                        (1..k)
                            .map(|e| vec![e])
                            .chain(std::iter::once((k..=n).collect()))
                            .collect(),
                    )
                })
                .collect(),
        ),
        // {12/3, 123}: min B_i = i with n-1 or n blocks
        m if m == C | E && n >= 1 => {
            let mut v = vec![singletons(n)];
            for i in 1..n {
                v.push(part(
                    (1..n)
                        .map(|e| if e == i { vec![e, n] } else { vec![e] })
                        .collect(),
                ));
            }
            Some(v)
        }
        // {13/2, 123}: layered matchings
        m if m == D | E => Some(layered_matchings(n)),
        // {1/2/3, 12/3, 13/2}: 12…n, 1/23…n
        m if m == A | C | D && n >= 4 => Some(vec![
            single_block(n),
            part(vec![vec![1], (2..=n).collect()]),
        ]),
        m if m == A | C | E && n >= 4 => Some(Vec::new()),
        m if m == A | D | E && n >= 4 => Some(if n == 4 {
            vec![part(vec![vec![1, 2], vec![3, 4]])]
        } else {
            Vec::new()
        }),
        m if m == A | B | C && n >= 4 => Some(vec![single_block(n)]),
        // {12/3, 13/2, 123}: 1/2/…/n, 1/2/…/(n-2)/(n-1)n
        m if m == C | D | E && n >= 4 => Some(vec![
            singletons(n),
            part(
                (1..=n - 2)
                    .map(|e| vec![e])
                    .chain(std::iter::once(vec![n - 1, n]))
                    .collect(),
            ),
        ]),
        // {1/23, 12/3, 13/2}: 12…n, 1/2/…/n
        m if m == B | C | D && n >= 4 => Some(vec![single_block(n), singletons(n)]),
        // {1/23, 12/3, 123}: 1/2/…/n, 1n/2/3/…/(n-1)
        m if m == B | C | E && n >= 4 => Some(vec![
            singletons(n),
            part(
                std::iter::once(vec![1, n])
                    .chain((2..n).map(|e| vec![e]))
                    .collect(),
            ),
        ]),
        _ => None,
    }
}

/// Rows of the triple-restriction table, in its printed order.
pub fn table_33_masks() -> [u8; 7] {
    [
        A | C | D,
        A | C | E,
        A | D | E,
        A | B | C,
        C | D | E,
        B | C | D,
        B | C | E,
    ]
}

/// Rows of the even/odd table for two or more patterns, in printed order.
pub fn table_47_masks() -> [u8; 19] {
    [
        A | C,
        A | D,
        A | E,
        B | C,
        C | D,
        C | E,
        D | E,
        A | B | C,
        A | C | D,
        A | C | E,
        A | D | E,
        B | C | D,
        B | C | E,
        C | D | E,
        A | B | C | D,
        A | B | C | E,
        A | C | D | E,
        B | C | D | E,
        A | B | C | D | E,
    ]
}

/// All masks with at least one pattern, complement-canonicalized and
/// deduplicated: the full registry coverage for cross-checking.
pub fn all_canonical_masks() -> Vec<u8> {
    let mut v: Vec<u8> = (1u8..32).map(canonical_mask).collect();
    v.sort_unstable();
    v.dedup();
    v
}
