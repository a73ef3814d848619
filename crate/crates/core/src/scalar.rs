//! Scalar embeddings for root-of-unity coefficients.
//!
//! Three homes for `zeta_N^e`:
//! - exact: cyclotomic integers `Z[zeta_N] = Z[x]/Phi_N(x)`, kept reduced so
//!   equality is equality of complex numbers (no field division anywhere);
//! - modular: the image of `zeta_N` as a fixed element of exact order `N` in
//!   a prime field with `p = 1 mod N`, for linear algebra over `F_p`;
//! - float: `Complex64` with a fixed comparison tolerance.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{is_prime_u64, mul_mod, pow_mod};

/// Coefficients of the cyclotomic polynomial `Phi_n`, ascending degree.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division
    let mut f = vec![0i64; n as usize + 1];
    f[0] = -1;
    f[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            f = poly_div_exact(&f, &phi_d);
        }
    }
    f
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    q
}

/// A cyclotomic integer in `Z[zeta_N]`, stored as a polynomial in `zeta_N`
/// of degree below `phi(N)` (canonically reduced, so `==` is numeric
/// equality).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycInt {
    modulus: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(modulus: u32) -> Self {
        let deg = euler_phi(modulus) as usize;
        CycInt {
            modulus,
            coeffs: vec![0; deg.max(1)],
        }
    }

    pub fn from_integer(modulus: u32, v: i64) -> Self {
        let mut c = CycInt::zero(modulus);
        c.coeffs[0] = v;
        c
    }

    pub fn one(modulus: u32) -> Self {
        CycInt::from_integer(modulus, 1)
    }

    /// `zeta_N^e`.
    pub fn root_power(modulus: u32, e: u32) -> Self {
        let e = (e % modulus) as usize;
        let mut raw = vec![0i64; modulus as usize];
        raw[e] = 1;
        CycInt::reduce(modulus, raw)
    }

    fn reduce(modulus: u32, mut raw: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(modulus);
        let deg = phi.len() - 1;
        if raw.len() < deg {
            raw.resize(deg.max(1), 0);
        }
        // remainder mod the monic Phi_N
        for i in (deg..raw.len()).rev() {
            let c = raw[i];
            if c != 0 {
                raw[i] = 0;
                for (j, &pc) in phi.iter().enumerate().take(deg) {
                    raw[i - deg + j] -= c * pc;
                }
            }
        }
        raw.truncate(deg.max(1));
        CycInt {
            modulus,
            coeffs: raw,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.modulus, other.modulus);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycInt {
            modulus: self.modulus,
            coeffs,
        }
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.modulus, other.modulus);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycInt {
            modulus: self.modulus,
            coeffs,
        }
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.modulus, other.modulus);
        let mut raw = vec![0i64; self.coeffs.len() + other.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        CycInt::reduce(self.modulus, raw)
    }

    pub fn scale(&self, k: i64) -> CycInt {
        CycInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let zeta = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.modulus as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        for &c in &self.coeffs {
            acc += pow * c as f64;
            pow *= zeta;
        }
        acc
    }

    /// Evaluation in `F_p` at a fixed root of order `N`.
    pub fn to_modular(&self, emb: &ModularEmbedding) -> u64 {
        assert_eq!(self.modulus, emb.modulus);
        let p = emb.prime;
        let mut acc = 0u64;
        let mut pow = 1u64;
        for &c in &self.coeffs {
            let cm = c.rem_euclid(p as i64) as u64;
            acc = (acc + mul_mod(cm, pow, p)) % p;
            pow = mul_mod(pow, emb.root, p);
        }
        acc
    }
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `zeta_N -> root` in `F_p` with `p = 1 mod N` and `root` of exact order N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularEmbedding {
    pub prime: u64,
    pub modulus: u32,
    pub root: u64,
}

impl ModularEmbedding {
    pub fn new(prime: u64, modulus: u32) -> Result<Self> {
        if !is_prime_u64(prime) {
            return Err(Error::BadSpec(format!("{} is not prime", prime)));
        }
        if modulus == 0 || (prime - 1) % modulus as u64 != 0 {
            return Err(Error::BadPrime {
                p: prime,
                n: modulus,
            });
        }
        let g = primitive_root(prime);
        let root = pow_mod(g, (prime - 1) / modulus as u64, prime);
        debug_assert!(has_exact_order(root, modulus as u64, prime));
        Ok(ModularEmbedding {
            prime,
            modulus,
            root,
        })
    }

    pub fn root_power(&self, e: u32) -> u64 {
        pow_mod(self.root, (e % self.modulus) as u64, self.prime)
    }

    /// Smallest admissible primes above `floor`.
    pub fn admissible_primes(modulus: u32, floor: u64, count: usize) -> Vec<u64> {
        let step = modulus.max(1) as u64;
        let mut p = floor / step * step + 1;
        let mut out = Vec::new();
        while out.len() < count {
            if p > floor && is_prime_u64(p) && (p - 1) % step == 0 {
                out.push(p);
            }
            p += step;
        }
        out
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut q = 2u64;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("every prime has a primitive root")
}

fn has_exact_order(x: u64, n: u64, p: u64) -> bool {
    if pow_mod(x, n, p) != 1 {
        return false;
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut q = 2u64;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    factors.iter().all(|&f| pow_mod(x, n / f, p) != 1)
}

/// Comparison tolerance used by all floating-point scalar paths.
pub const FLOAT_TOL: f64 = 1e-9;

/// A scalar in whichever embedding is active.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(CycInt),
    Float(Complex64),
}

impl Scalar {
    pub fn root_power(modulus: u32, e: u32) -> Scalar {
        Scalar::Exact(CycInt::root_power(modulus, e))
    }

    pub fn zero_exact(modulus: u32) -> Scalar {
        Scalar::Exact(CycInt::zero(modulus))
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(c) => c.to_complex(),
            Scalar::Float(z) => *z,
        }
    }

    pub fn approx_eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self.to_complex() - other.to_complex()).norm() <= FLOAT_TOL,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Float(z) => z.norm() <= FLOAT_TOL,
        }
    }
}
