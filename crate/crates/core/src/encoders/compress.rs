//! Minterm merging for NEQR compression: position patterns controlling a
//! grayscale bit-plane are repeatedly merged pairwise when they share their
//! don't-care set and differ in exactly one cared bit (Quine-McCluskey style
//! adjacent merging). Every merge replaces two disjoint cubes by their
//! union, so the set keeps covering each position exactly once and the
//! controlled writes stay exact.

/// Cube over the position bits: `value` on the bits in `mask`, don't-care
/// elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Implicant {
    pub mask: u32,
    pub value: u32,
}

impl Implicant {
    pub fn minterm(value: u32, num_bits: usize) -> Self {
        Implicant {
            mask: (1u32 << num_bits) - 1,
            value,
        }
    }
}

/// Merge until no two implicants with identical masks differ in exactly one
/// cared bit. Deterministic: candidates are scanned in sorted order.
pub(crate) fn merge_implicants(mut cubes: Vec<Implicant>) -> Vec<Implicant> {
    loop {
        cubes.sort();
        cubes.dedup();
        let mut merged: Option<(usize, usize, Implicant)> = None;
        'outer: for i in 0..cubes.len() {
            for j in (i + 1)..cubes.len() {
                if cubes[i].mask != cubes[j].mask {
                    continue;
                }
                let diff = cubes[i].value ^ cubes[j].value;
                if diff.count_ones() == 1 {
                    let new = Implicant {
                        mask: cubes[i].mask & !diff,
                        value: cubes[i].value & !diff,
                    };
                    merged = Some((i, j, new));
                    break 'outer;
                }
            }
        }
        match merged {
            Some((i, j, new)) => {
                cubes.remove(j);
                cubes.remove(i);
                cubes.push(new);
            }
            None => return cubes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_cube_collapses_to_empty_mask() {
        let cubes: Vec<Implicant> = (0..4).map(|v| Implicant::minterm(v, 2)).collect();
        let merged = merge_implicants(cubes);
        assert_eq!(merged, vec![Implicant { mask: 0, value: 0 }]);
    }

    #[test]
    fn adjacent_pair_drops_one_bit() {
        // positions 00 and 01 differ in bit 0 -> cared bit 1 only, value 0
        let cubes = vec![Implicant::minterm(0, 2), Implicant::minterm(1, 2)];
        let merged = merge_implicants(cubes);
        assert_eq!(merged, vec![Implicant { mask: 0b10, value: 0 }]);
    }

    #[test]
    fn single_minterm_is_unchanged() {
        let cubes = vec![Implicant::minterm(2, 2)];
        assert_eq!(merge_implicants(cubes.clone()), cubes);
    }

    #[test]
    fn non_adjacent_minterms_stay_separate() {
        // 00 and 11 differ in two bits
        let cubes = vec![Implicant::minterm(0, 2), Implicant::minterm(3, 2)];
        let merged = merge_implicants(cubes.clone());
        assert_eq!(merged, cubes);
    }

    #[test]
    fn coverage_is_preserved_exactly_once() {
        // random-ish subset of a 4-bit space
        let values = [0u32, 1, 2, 3, 5, 7, 8, 10, 13, 15];
        let cubes: Vec<Implicant> = values.iter().map(|&v| Implicant::minterm(v, 4)).collect();
        let merged = merge_implicants(cubes);
        for p in 0u32..16 {
            let covers = merged
                .iter()
                .filter(|c| p & c.mask == c.value)
                .count();
            let expected = values.contains(&p) as usize;
            assert_eq!(covers, expected, "position {p} covered {covers} times");
        }
    }
}
