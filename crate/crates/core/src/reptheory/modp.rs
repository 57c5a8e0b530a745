//! Small dense linear algebra over a prime field F_p, used by the character
//! table construction. Matrices are row-major `Vec<u64>` with entries < p.

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A generator of the multiplicative group of F_p.
pub fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    'outer: for g in 2..p {
        for &q in &factors {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root found")
}

#[derive(Debug, Clone)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Matrix, p: u64) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.at(i, j) + a * other.at(k, j)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn det(&self, p: u64) -> u64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u64;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0);
            let pivot = match pivot {
                Some(r) => r,
                None => return 0,
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = p - det;
                if det == p {
                    det = 0;
                }
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let pv_inv = inv_mod(pv, p);
            for r in col + 1..n {
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                let f = f * pv_inv % p;
                for j in col..n {
                    let sub = f * a[col * n + j] % p;
                    a[r * n + j] = (a[r * n + j] + p - sub) % p;
                }
            }
        }
        det % p
    }

    /// Basis of the kernel, as matrix columns.
    pub fn kernel(&self, p: u64) -> Matrix {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| a[r * cols + col] != 0);
            let pivot = match pivot {
                Some(r) => r,
                None => continue,
            };
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
            let inv = inv_mod(a[rank * cols + col], p);
            for j in 0..cols {
                a[rank * cols + j] = a[rank * cols + j] * inv % p;
            }
            for r in 0..rows {
                if r != rank && a[r * cols + col] != 0 {
                    let f = a[r * cols + col];
                    for j in 0..cols {
                        let sub = f * a[rank * cols + j] % p;
                        a[r * cols + j] = (a[r * cols + j] + p - sub) % p;
                    }
                }
            }
            pivot_col_of_row.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Matrix::zero(cols, free_cols.len());
        for (k, &fc) in free_cols.iter().enumerate() {
            out.set(fc, k, 1);
            for (r, &pc) in pivot_cols.iter().enumerate() {
                let v = a[r * cols + fc];
                if v != 0 {
                    out.set(pc, k, (p - v) % p);
                }
            }
        }
        out
    }

    /// Solve `self * x = b` for a full-column-rank `self`; panics when
    /// inconsistent (internal use only).
    pub fn solve(&self, b: &[u64], p: u64) -> Vec<u64> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = vec![0u64; rows * (cols + 1)];
        for r in 0..rows {
            for c in 0..cols {
                a[r * (cols + 1) + c] = self.at(r, c);
            }
            a[r * (cols + 1) + cols] = b[r];
        }
        let w = cols + 1;
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| a[r * w + col] != 0);
            let pivot = match pivot {
                Some(r) => r,
                None => continue,
            };
            for j in 0..w {
                a.swap(pivot * w + j, rank * w + j);
            }
            let inv = inv_mod(a[rank * w + col], p);
            for j in 0..w {
                a[rank * w + j] = a[rank * w + j] * inv % p;
            }
            for r in 0..rows {
                if r != rank && a[r * w + col] != 0 {
                    let f = a[r * w + col];
                    for j in 0..w {
                        let sub = f * a[rank * w + j] % p;
                        a[r * w + j] = (a[r * w + j] + p - sub) % p;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        for r in rank..rows {
            assert_eq!(a[r * w + cols], 0, "inconsistent system");
        }
        let mut x = vec![0u64; cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = a[r * w + cols];
        }
        x
    }
}
