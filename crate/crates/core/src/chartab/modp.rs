//! Dense linear algebra over a small prime field F_l.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub l: u64,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.l
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.l - b) % self.l
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.l;
        a %= self.l;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.l));
        self.pow(a, self.l - 2)
    }

    /// A generator of F_l^x.
    pub fn primitive_root(self) -> u64 {
        let n = self.l - 1;
        let mut primes = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                primes.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        (2..self.l)
            .find(|&g| primes.iter().all(|&p| self.pow(g, n / p) != 1))
            .expect("prime fields have primitive roots")
    }

    /// Reduces the rows of `m` to reduced row echelon form in place, dropping
    /// zero rows. Returns the pivot columns.
    pub fn rref(self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(pr) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pr);
            let inv = self.inv(m[row][col]);
            for x in m[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[row].clone();
            for (r, other) in m.iter_mut().enumerate() {
                if r != row && other[col] != 0 {
                    let f = other[col];
                    for (x, &p) in other.iter_mut().zip(&pivot_row) {
                        if p != 0 {
                            *x = self.sub(*x, self.mul(f, p));
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        m.truncate(row);
        pivots
    }

    /// Basis of `{x : a x = 0}` for a square or rectangular matrix `a`.
    pub fn nullspace(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let cols = a.first().map_or(0, Vec::len);
        let mut m = a.to_vec();
        let pivots = self.rref(&mut m);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.sub(0, m[r][free]);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_roots() {
        for l in [7u64, 13, 73, 421] {
            let f = Fp { l };
            let g = f.primitive_root();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..l - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len() as u64, l - 1);
        }
    }

    #[test]
    fn nullspace_of_small_matrix() {
        let f = Fp { l: 7 };
        // rank 1 over F_7
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let s = row
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert_eq!(s, 0);
            }
        }
        assert!(f.nullspace(&[vec![1, 0], vec![0, 1]]).is_empty());
    }
}
