use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::UnitIntervalOrder;
use crate::symfunc::Partition;
use crate::word::Word;

/// A filling of a Young diagram (English notation) with vertices of `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PTableau {
    rows: Vec<Vec<u8>>,
}

impl PTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(lens).map_err(|_| Error::InvalidArgument("rows do not form a Young diagram".into()))?;
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("validated on construction")
    }

    /// Rows never step down in `P`; columns strictly increase in `P` downwards.
    pub fn is_semistandard(&self, p: &UnitIntervalOrder) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| !p.less(w[1] as usize, w[0] as usize)));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(&below, &above)| p.less(above as usize, below as usize)));
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&a| a >= 1 && a as usize <= p.n())
    }

    /// Columns left to right, each read bottom to top.
    pub fn reading_word(&self) -> Word {
        let width = self.rows.first().map_or(0, |r| r.len());
        let mut w = Vec::new();
        for c in 0..width {
            for r in (0..self.rows.len()).rev() {
                if let Some(&a) = self.rows[r].get(c) {
                    w.push(a);
                }
            }
        }
        Word::new(w)
    }

    pub fn type_vector(&self, n: usize) -> Vec<usize> {
        let mut mu = vec![0; n];
        for &a in self.rows.iter().flatten() {
            mu[a as usize - 1] += 1;
        }
        mu
    }
}

/// All semistandard `P`-tableaux of the given shape; with `bound`, letter
/// `a` is used at most `bound[a-1]` times.
pub fn enumerate_p_tableaux(p: &UnitIntervalOrder, shape: &Partition, bound: Option<&[usize]>) -> Vec<PTableau> {
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut left: Vec<usize> = match bound {
        Some(b) => b.to_vec(),
        None => vec![usize::MAX; p.n()],
    };
    let mut out = Vec::new();
    fill(p, &cells, 0, &mut rows, &mut left, &mut out);
    out
}

fn fill(
    p: &UnitIntervalOrder,
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u8>>,
    left: &mut [usize],
    out: &mut Vec<PTableau>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(PTableau { rows: rows.clone() });
        return;
    };
    for a in 1..=p.n() {
        if left[a - 1] == 0 {
            continue;
        }
        if c > 0 && p.less(a, rows[r][c - 1] as usize) {
            continue;
        }
        if r > 0 && !p.less(rows[r - 1][c] as usize, a) {
            continue;
        }
        rows[r][c] = a as u8;
        left[a - 1] -= 1;
        fill(p, cells, k + 1, rows, left, out);
        left[a - 1] += 1;
    }
    rows[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u8]]) -> PTableau {
        PTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn tableau_example() {
        let p: UnitIntervalOrder = "2,4,4,5,5".parse().unwrap();
        let good = t(&[&[1, 2, 5, 4], &[3, 5], &[5]]);
        assert!(good.is_semistandard(&p));
        assert_eq!(good.reading_word().to_string(), "5315254");
        assert_eq!(good.type_vector(5), vec![1, 1, 1, 1, 3]);
        assert!(!t(&[&[1, 2, 5, 4], &[4, 5], &[5]]).is_semistandard(&p));
        assert!(!t(&[&[1, 2, 5, 3], &[3, 5], &[5]]).is_semistandard(&p));
        let all = enumerate_p_tableaux(&p, &"4,2,1".parse().unwrap(), Some(&[1, 1, 1, 1, 3]));
        assert!(all.contains(&good));
        assert!(all.iter().all(|x| x.is_semistandard(&p)));
    }

    #[test]
    fn single_cell() {
        let p: UnitIntervalOrder = "2,3,3".parse().unwrap();
        assert_eq!(enumerate_p_tableaux(&p, &"1".parse().unwrap(), None).len(), 3);
    }

    /// Enumeration agrees with filtering every filling.
    #[test]
    fn enumeration_matches_filter() {
        let p: UnitIntervalOrder = "2,3,4,4".parse().unwrap();
        for shape in Partition::all(4) {
            let cells = shape.size();
            let mut count = 0;
            for code in 0..4usize.pow(cells as u32) {
                let mut vals = (0..cells).map(|i| (code / 4usize.pow(i as u32) % 4 + 1) as u8);
                let rows: Vec<Vec<u8>> =
                    shape.parts().iter().map(|&l| (0..l).map(|_| vals.next().unwrap()).collect()).collect();
                if PTableau::new(rows).unwrap().is_semistandard(&p) {
                    count += 1;
                }
            }
            assert_eq!(enumerate_p_tableaux(&p, &shape, None).len(), count, "{shape}");
        }
    }

    #[test]
    fn rejects_non_diagram() {
        assert!(PTableau::new(vec![vec![1], vec![1, 2]]).is_err());
    }
}
