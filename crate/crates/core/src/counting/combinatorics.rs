use num_bigint::BigUint;
use num_traits::One;

/// Factorials `0!..=max!` as big integers.
#[derive(Clone, Debug)]
pub struct Factorials(Vec<BigUint>);

impl Factorials {
    pub fn up_to(max: usize) -> Self {
        let mut table = Vec::with_capacity(max + 1);
        table.push(BigUint::one());
        for i in 1..=max {
            let next = &table[i - 1] * BigUint::from(i);
            table.push(next);
        }
        Factorials(table)
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.0[n]
    }

    pub fn binomial(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::ZERO;
        }
        self.get(n) / (self.get(k) * self.get(n - k))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division
    // is exact at every step.
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// `(r_1 + ... + r_l)! / (r_1! ... r_l!)`, as a product of binomials.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Weak compositions: every tuple of `parts` nonnegative integers summing to
/// `total`, in lexicographic order. Zero parts yield the empty tuple exactly
/// when `total == 0`.
#[derive(Clone, Debug)]
pub struct Compositions {
    total: usize,
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(total: usize, parts: usize) -> Self {
        let current = match parts {
            0 if total == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut v = vec![0; parts];
                v[parts - 1] = total;
                Some(v)
            }
        };
        Compositions { total, current }
    }

    /// Compositions whose parts are all at least `min`.
    pub fn bounded_below(total: usize, parts: usize, min: usize) -> impl Iterator<Item = Vec<usize>> {
        let floor = parts * min;
        let inner = (total >= floor).then(|| Compositions::new(total - floor, parts));
        inner.into_iter().flatten().map(move |mut v| {
            v.iter_mut().for_each(|x| *x += min);
            v
        })
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let m = out.len();
        if m >= 2 {
            // Lexicographic successor: move one unit from the tail into the
            // rightmost position that can still grow, and reset everything after.
            let mut next = out.clone();
            let mut i = m - 2;
            loop {
                let used: usize = next[..=i].iter().sum();
                if used < self.total {
                    next[i] += 1;
                    let used = used + 1;
                    for x in next[i + 1..].iter_mut() {
                        *x = 0;
                    }
                    next[m - 1] = self.total - used;
                    self.current = Some(next);
                    break;
                }
                if i == 0 {
                    break;
                }
                i -= 1;
            }
        }
        Some(out)
    }
}
