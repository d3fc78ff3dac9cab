//! Multivariate integer polynomial gcd.
//!
//! Cheap structural cases are handled first (constants, variables occurring in
//! only one argument, coprimality detected from univariate images). The general
//! case runs a dense modular algorithm: images modulo word-sized primes computed
//! by recursive evaluation/interpolation, lifted by Chinese remaindering and
//! confirmed by exact trial division over the integers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::monomial::Monomial;
use super::zpoly::{bigint_mod, inv_mod, pow_mod, ZPoly};
use super::var::NVARS;

/// Gcd with non-negative leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    gcd_cofactors(a, b).0
}

/// Returns `(g, a/g, b/g)` where `g` is the gcd in the Laurent ring normalized
/// to a positive leading coefficient and monomial content equal to the
/// componentwise minimum of those of `a` and `b`.
pub fn gcd_cofactors(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    if a.is_zero() && b.is_zero() {
        return (ZPoly::zero(), ZPoly::zero(), ZPoly::zero());
    }
    if a.is_zero() {
        let s = sign_unit(b);
        return (b.scale(&s), ZPoly::zero(), ZPoly::constant(s));
    }
    if b.is_zero() {
        let s = sign_unit(a);
        return (a.scale(&s), ZPoly::constant(s), ZPoly::zero());
    }
    let (ma, a1) = a.split_monomial_content();
    let (mb, b1) = b.split_monomial_content();
    let gm = ma.meet(&mb);
    let (g, ca, cb) = poly_gcd(&a1, &b1);
    (g.mul_monomial(&gm), ca.mul_monomial(&(ma / gm)), cb.mul_monomial(&(mb / gm)))
}

fn sign_unit(p: &ZPoly) -> BigInt {
    if p.leading_sign() < 0 {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// Integer content carrying the sign of the leading coefficient.
fn signed_content(p: &ZPoly) -> BigInt {
    let c = p.content();
    if p.leading_sign() < 0 {
        -c
    } else {
        c
    }
}

/// Gcd of nonzero polynomials without monomial content.
fn poly_gcd(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    let ia = signed_content(a);
    let ib = signed_content(b);
    let ig = ia.gcd(&ib);
    let ap = a.div_exact_int(&ia);
    let bp = b.div_exact_int(&ib);
    let (g, ca, cb) = primitive_gcd(&ap, &bp);
    (g.scale(&ig), ca.scale(&(&ia / &ig)), cb.scale(&(&ib / &ig)))
}

/// Gcd of primitive polynomials with positive leading coefficients and no
/// monomial content.
fn primitive_gcd(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    if a.is_constant() || b.is_constant() {
        return (ZPoly::one(), a.clone(), b.clone());
    }
    if a == b {
        return (a.clone(), ZPoly::one(), ZPoly::one());
    }
    let ma = a.var_mask();
    let mb = b.var_mask();
    let only_a = ma & !mb;
    let only_b = mb & !ma;
    if only_a != 0 || only_b != 0 {
        let mut parts = Vec::new();
        if only_a != 0 {
            parts.extend(a.coefficients_in(only_a));
        } else {
            parts.push(a.clone());
        }
        if only_b != 0 {
            parts.extend(b.coefficients_in(only_b));
        } else {
            parts.push(b.clone());
        }
        return with_cofactors(a, b, multi_gcd(parts));
    }
    let vars: Vec<usize> = (0..NVARS).filter(|i| ma & (1 << i) != 0).collect();
    let mut rng = StdRng::seed_from_u64(0x9e37_79b9_7f4a_7c15 ^ (a.len() as u64) << 20 ^ b.len() as u64);
    let bounds = degree_bounds(a, b, &vars, &mut rng);
    if bounds.iter().all(|&d| d == 0) {
        return (ZPoly::one(), a.clone(), b.clone());
    }
    let zero_mask: u32 = vars.iter().zip(&bounds).filter(|(_, &d)| d == 0).fold(0, |m, (&v, _)| m | 1 << v);
    if zero_mask != 0 {
        let mut parts = a.coefficients_in(zero_mask);
        parts.extend(b.coefficients_in(zero_mask));
        return with_cofactors(a, b, multi_gcd(parts));
    }
    let degs_a: Vec<usize> = vars.iter().map(|&v| max_exp(a, v)).collect();
    let degs_b: Vec<usize> = vars.iter().map(|&v| max_exp(b, v)).collect();
    if bounds == degs_b {
        if let Some(q) = a.div_exact(b) {
            return (b.clone(), q, ZPoly::one());
        }
    }
    if bounds == degs_a {
        if let Some(q) = b.div_exact(a) {
            return (a.clone(), ZPoly::one(), q);
        }
    }
    modular_gcd(a, b, &vars, &bounds, &mut rng)
}

fn with_cofactors(a: &ZPoly, b: &ZPoly, g: ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    let ca = a.div_exact(&g).expect("gcd divides first argument");
    let cb = b.div_exact(&g).expect("gcd divides second argument");
    (g, ca, cb)
}

/// Gcd of a list, smallest operands first, stopping early at 1.
fn multi_gcd(mut parts: Vec<ZPoly>) -> ZPoly {
    parts.sort_by_key(|p| p.len());
    let mut it = parts.into_iter();
    let mut g = match it.next() {
        Some(p) => p,
        None => return ZPoly::zero(),
    };
    g = g.scale(&signed_content(&g)).div_exact_int(&(g.content() * g.content()));
    for p in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, &p);
    }
    g
}

fn max_exp(p: &ZPoly, v: usize) -> usize {
    p.terms().iter().map(|(m, _)| m.0[v]).max().unwrap_or(0).max(0) as usize
}

/// Primes below 2^31, descending.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Primes {
        Primes { next: (1 << 31) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 2 {
            let n = self.next;
            self.next -= 1;
            if is_prime(n) {
                return Some(n);
            }
        }
        None
    }
}

/// Deterministic Miller-Rabin for `n < 3_215_031_751`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Upper bounds on the gcd degree in each variable, from univariate images at
/// random points. Each bound is valid whenever the image keeps the degree of
/// `a`, which is enforced.
fn degree_bounds(a: &ZPoly, b: &ZPoly, vars: &[usize], rng: &mut StdRng) -> Vec<usize> {
    let p = Primes::new().nth(3).unwrap();
    vars.iter()
        .map(|&v| {
            let da = max_exp(a, v);
            let db = max_exp(b, v);
            for _ in 0..20 {
                let mut pt = [1u64; NVARS];
                for &w in vars {
                    pt[w] = rng.gen_range(2..p);
                }
                let ua = univariate_image(a, v, &pt, p);
                let ub = univariate_image(b, v, &pt, p);
                if ua.len() == da + 1 && ub.len() == db + 1 {
                    return upoly::gcd(&ua, &ub, p).len() - 1;
                }
            }
            da.min(db)
        })
        .collect()
}

fn univariate_image(a: &ZPoly, v: usize, pt: &[u64; NVARS], p: u64) -> Vec<u64> {
    let hi = a.max_exponents();
    let tables: Vec<Vec<u64>> = (0..NVARS)
        .map(|i| {
            let mut t = Vec::with_capacity(hi.0[i].max(0) as usize + 1);
            let mut cur = 1u64;
            for _ in 0..=hi.0[i].max(0) {
                t.push(cur);
                cur = cur * pt[i] % p;
            }
            t
        })
        .collect();
    let mut out = vec![0u64; hi.0[v].max(0) as usize + 1];
    for (m, c) in a.terms() {
        let mut t = bigint_mod(c, p);
        for i in 0..NVARS {
            if i != v && m.0[i] != 0 {
                t = t * tables[i][m.0[i] as usize] % p;
            }
        }
        let e = m.0[v] as usize;
        out[e] = (out[e] + t) % p;
    }
    upoly::trim(&mut out);
    out
}

/// Dense multivariate polynomial over `Z/p`. Variable 0 is the most
/// significant in the lexicographic order and varies slowest in storage; the
/// last variable is contiguous.
#[derive(Clone, Debug)]
struct Dense {
    dims: Vec<usize>,
    c: Vec<u64>,
}

impl Dense {
    fn from_zpoly(a: &ZPoly, vars: &[usize], p: u64) -> Dense {
        let dims: Vec<usize> = vars.iter().map(|&v| max_exp(a, v) + 1).collect();
        let strides = strides(&dims);
        let mut c = vec![0u64; dims.iter().product()];
        for (m, x) in a.terms() {
            let idx: usize = vars.iter().zip(&strides).map(|(&v, &s)| m.0[v] as usize * s).sum();
            c[idx] = bigint_mod(x, p);
        }
        Dense { dims, c }
    }

    fn nvars(&self) -> usize {
        self.dims.len()
    }

    fn last_dim(&self) -> usize {
        *self.dims.last().unwrap()
    }

    fn columns(&self) -> std::slice::Chunks<'_, u64> {
        self.c.chunks(self.last_dim())
    }

    /// Substitutes `alpha` for the last variable.
    fn eval_last(&self, alpha: u64, p: u64) -> Dense {
        let c = self.columns().map(|col| upoly::eval(col, alpha, p)).collect();
        Dense { dims: self.dims[..self.nvars() - 1].to_vec(), c }
    }

    /// Largest nonzero index, i.e. the lexicographically leading term.
    fn leading_index(&self) -> Option<usize> {
        self.c.iter().rposition(|&x| x != 0)
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        let mut e = vec![0; self.dims.len()];
        for i in (0..self.dims.len()).rev() {
            e[i] = idx % self.dims[i];
            idx /= self.dims[i];
        }
        e
    }

    fn make_monic(&mut self, p: u64) {
        if let Some(i) = self.leading_index() {
            let inv = inv_mod(self.c[i], p);
            for x in self.c.iter_mut() {
                *x = *x * inv % p;
            }
        }
    }

    fn is_constant(&self) -> bool {
        self.c.iter().skip(1).all(|&x| x == 0)
    }
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Lex comparison of exponent vectors.
fn cmp_exps(a: &[usize], b: &[usize]) -> Ordering {
    a.cmp(b)
}

/// Monic gcd over `Z/p` of nonzero dense polynomials in the same variables.
fn dense_gcd(a: &Dense, b: &Dense, p: u64, rng: &mut StdRng) -> Dense {
    let k = a.nvars();
    if k == 1 {
        let g = upoly::gcd(&a.c, &b.c, p);
        return Dense { dims: vec![g.len()], c: g };
    }
    // Content and primitive parts with respect to the last variable.
    let ca = column_content(a, p);
    let cb = column_content(b, p);
    let cont = upoly::gcd(&ca, &cb, p);
    let a = divide_columns(a, &ca, p);
    let b = divide_columns(b, &cb, p);
    let la = leading_column(&a);
    let lb = leading_column(&b);
    let gl = upoly::gcd(&la, &lb, p);
    let dy = (upoly::degree(&gl)) + (a.last_dim() - 1).min(b.last_dim() - 1);

    let xdims: Vec<usize> = a.dims[..k - 1].iter().zip(&b.dims[..k - 1]).map(|(x, y)| *x.min(y)).collect();
    let xlen: usize = xdims.iter().product();
    let mut lm: Option<Vec<usize>> = None;
    let mut cols: Vec<Vec<u64>> = Vec::new();
    let mut modulus: Vec<u64> = vec![1];
    let mut npts = 0usize;
    loop {
        let alpha = rng.gen_range(0..p);
        if upoly::eval(&la, alpha, p) == 0 || upoly::eval(&lb, alpha, p) == 0 {
            continue;
        }
        let ga = dense_gcd(&a.eval_last(alpha, p), &b.eval_last(alpha, p), p, rng);
        if ga.is_constant() {
            return constant_in_x(&cont, k, p);
        }
        let gi = ga.leading_index().unwrap();
        let ge = ga.exponents(gi);
        if ge.iter().zip(&xdims).any(|(e, d)| e >= d) || !fits(&ga, &xdims) {
            continue;
        }
        match lm.as_ref().map(|l| cmp_exps(&ge, l)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Less) | None => {
                lm = Some(ge);
                cols = vec![Vec::new(); xlen];
                modulus = vec![1];
                npts = 0;
            }
            Some(Ordering::Equal) => {}
        }
        let scale = upoly::eval(&gl, alpha, p);
        let values = reshape(&ga, &xdims, p, scale);
        let m_alpha = upoly::eval(&modulus, alpha, p);
        let m_inv = inv_mod(m_alpha, p);
        let mut changed = false;
        for (col, v) in cols.iter_mut().zip(values) {
            let cur = upoly::eval(col, alpha, p);
            let diff = (v + p - cur) % p;
            if diff != 0 {
                changed = true;
                let t = diff * m_inv % p;
                let upd = upoly::scale(&modulus, t, p);
                upoly::add_assign(col, &upd, p);
            }
        }
        upoly::mul_linear(&mut modulus, alpha, p);
        npts += 1;
        if (npts > 1 && !changed) || npts > dy {
            let ny = cols.iter().map(|c| c.len()).max().unwrap_or(1).max(1);
            let mut dims = xdims.clone();
            dims.push(ny);
            let mut c = vec![0u64; xlen * ny];
            for (j, col) in cols.iter().enumerate() {
                c[j * ny..j * ny + col.len()].copy_from_slice(col);
            }
            let h = Dense { dims, c };
            let hc = column_content(&h, p);
            let h = divide_columns(&h, &hc, p);
            let mut h = multiply_columns(&h, &cont, p);
            h.make_monic(p);
            return h;
        }
    }
}

fn fits(g: &Dense, xdims: &[usize]) -> bool {
    let idx = g.leading_index();
    match idx {
        None => true,
        Some(_) => g
            .c
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .all(|(i, _)| g.exponents(i).iter().zip(xdims).all(|(e, d)| e < d)),
    }
}

/// Re-indexes `g` into the shape `xdims`, scaled by `scale`.
fn reshape(g: &Dense, xdims: &[usize], p: u64, scale: u64) -> Vec<u64> {
    let st = strides(xdims);
    let mut out = vec![0u64; xdims.iter().product()];
    for (i, &x) in g.c.iter().enumerate() {
        if x != 0 {
            let idx: usize = g.exponents(i).iter().zip(&st).map(|(e, s)| e * s).sum();
            out[idx] = x * scale % p;
        }
    }
    out
}

fn constant_in_x(cont: &[u64], k: usize, p: u64) -> Dense {
    let mut dims = vec![1; k - 1];
    dims.push(cont.len());
    let mut d = Dense { dims, c: cont.to_vec() };
    d.make_monic(p);
    d
}

fn column_content(a: &Dense, p: u64) -> Vec<u64> {
    let mut g: Vec<u64> = Vec::new();
    for col in a.columns() {
        let mut col = col.to_vec();
        upoly::trim(&mut col);
        if col.is_empty() {
            continue;
        }
        g = if g.is_empty() { upoly::monic(&col, p) } else { upoly::gcd(&g, &col, p) };
        if g.len() == 1 {
            break;
        }
    }
    if g.is_empty() {
        vec![1]
    } else {
        g
    }
}

fn divide_columns(a: &Dense, d: &[u64], p: u64) -> Dense {
    if d.len() == 1 && d[0] == 1 {
        return a.clone();
    }
    let ny = a.last_dim() + 1 - d.len();
    let mut dims = a.dims.clone();
    *dims.last_mut().unwrap() = ny.max(1);
    let mut c = Vec::with_capacity(a.c.len() / a.last_dim() * ny);
    for col in a.columns() {
        let mut q = upoly::div_exact(col, d, p);
        q.resize(ny.max(1), 0);
        c.extend(q);
    }
    Dense { dims, c }
}

fn multiply_columns(a: &Dense, d: &[u64], p: u64) -> Dense {
    if d.len() == 1 && d[0] == 1 {
        return a.clone();
    }
    let ny = a.last_dim() + d.len() - 1;
    let mut dims = a.dims.clone();
    *dims.last_mut().unwrap() = ny;
    let mut c = Vec::with_capacity(a.c.len() / a.last_dim() * ny);
    for col in a.columns() {
        let mut q = upoly::mul(col, d, p);
        q.resize(ny, 0);
        c.extend(q);
    }
    Dense { dims, c }
}

fn leading_column(a: &Dense) -> Vec<u64> {
    let i = a.leading_index().expect("nonzero polynomial");
    let ny = a.last_dim();
    let j = i / ny;
    let mut col = a.c[j * ny..(j + 1) * ny].to_vec();
    upoly::trim(&mut col);
    col
}

/// Integer gcd through images modulo primes.
fn modular_gcd(a: &ZPoly, b: &ZPoly, vars: &[usize], bounds: &[usize], rng: &mut StdRng) -> (ZPoly, ZPoly, ZPoly) {
    let gdims: Vec<usize> = bounds.iter().map(|d| d + 1).collect();
    // Order variables so the one with the largest gcd degree is handled by the
    // univariate Euclidean base case and small ones are interpolated.
    let mut order: Vec<usize> = (0..vars.len()).collect();
    order.sort_by(|&i, &j| gdims[j].cmp(&gdims[i]).then(i.cmp(&j)));
    let vars: Vec<usize> = order.iter().map(|&i| vars[i]).collect();
    let gdims: Vec<usize> = order.iter().map(|&i| gdims[i]).collect();

    let lead = |z: &ZPoly| -> BigInt {
        z.terms()
            .iter()
            .max_by(|x, y| {
                let ex: Vec<i32> = vars.iter().map(|&v| x.0 .0[v]).collect();
                let ey: Vec<i32> = vars.iter().map(|&v| y.0 .0[v]).collect();
                ex.cmp(&ey)
            })
            .unwrap()
            .1
            .clone()
    };
    let lca = lead(a);
    let lcb = lead(b);
    let gamma = lca.gcd(&lcb);
    let glen: usize = gdims.iter().product();
    let gst = strides(&gdims);

    let mut h: Vec<BigInt> = Vec::new();
    let mut hlm: Option<Vec<usize>> = None;
    let mut modulus = BigInt::one();
    for p in Primes::new() {
        let pb = BigInt::from(p);
        if (&lca % &pb).is_zero() || (&lcb % &pb).is_zero() {
            continue;
        }
        let ad = Dense::from_zpoly(a, &vars, p);
        let bd = Dense::from_zpoly(b, &vars, p);
        let g = dense_gcd(&ad, &bd, p, rng);
        if g.is_constant() {
            return (ZPoly::one(), a.clone(), b.clone());
        }
        let ge = g.exponents(g.leading_index().unwrap());
        if !fits(&g, &gdims) {
            continue;
        }
        let gm = bigint_mod(&gamma, p);
        let mut img = vec![0u64; glen];
        for (i, &x) in g.c.iter().enumerate() {
            if x != 0 {
                let idx: usize = g.exponents(i).iter().zip(&gst).map(|(e, s)| e * s).sum();
                img[idx] = x * gm % p;
            }
        }
        match hlm.as_ref().map(|l| cmp_exps(&ge, l)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Less) | None => {
                hlm = Some(ge);
                h = img.iter().map(|&x| symmetric(x, p)).collect();
                modulus = pb;
                continue;
            }
            Some(Ordering::Equal) => {}
        }
        let m_inv = inv_mod(bigint_mod(&modulus, p), p);
        let new_mod = &modulus * &pb;
        let half = &new_mod >> 1;
        let mut changed = false;
        for (hc, &v) in h.iter_mut().zip(&img) {
            let cur = bigint_mod(hc, p);
            let t = (v + p - cur) % p * m_inv % p;
            if t != 0 {
                changed = true;
                let mut x = &*hc + &modulus * BigInt::from(t);
                if x > half {
                    x -= &new_mod;
                }
                *hc = x;
            }
        }
        modulus = new_mod;
        if changed {
            continue;
        }
        let cand = ZPoly::from_terms(h.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mut m = Monomial::ONE;
            let mut r = i;
            for j in (0..vars.len()).rev() {
                m.0[vars[j]] = (r % gdims[j]) as i32;
                r /= gdims[j];
            }
            (m, c.clone())
        }));
        let cand = cand.div_exact_int(&signed_content(&cand));
        if let Some(ca) = a.div_exact(&cand) {
            if let Some(cb) = b.div_exact(&cand) {
                return (cand, ca, cb);
            }
        }
    }
    unreachable!("ran out of word-sized primes")
}

fn symmetric(x: u64, p: u64) -> BigInt {
    if x > p / 2 {
        BigInt::from(x) - BigInt::from(p)
    } else {
        BigInt::from(x)
    }
}

/// Dense univariate polynomials over `Z/p`, lowest degree first, trimmed so the
/// last entry is nonzero (the zero polynomial is empty).
mod upoly {
    use super::inv_mod;

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn degree(a: &[u64]) -> usize {
        a.len().saturating_sub(1)
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
    }

    pub fn monic(a: &[u64], p: u64) -> Vec<u64> {
        let inv = inv_mod(*a.last().unwrap(), p);
        a.iter().map(|&c| c * inv % p).collect()
    }

    pub fn scale(a: &[u64], t: u64, p: u64) -> Vec<u64> {
        a.iter().map(|&c| c * t % p).collect()
    }

    pub fn add_assign(a: &mut Vec<u64>, b: &[u64], p: u64) {
        if a.len() < b.len() {
            a.resize(b.len(), 0);
        }
        for (x, &y) in a.iter_mut().zip(b) {
            *x = (*x + y) % p;
        }
        trim(a);
    }

    /// Multiplies by `(y - alpha)`.
    pub fn mul_linear(a: &mut Vec<u64>, alpha: u64, p: u64) {
        let na = (p - alpha) % p;
        a.push(0);
        for i in (0..a.len()).rev() {
            let lower = if i > 0 { a[i - 1] } else { 0 };
            a[i] = (lower + a[i] * na) % p;
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` by `b` (in place); `b` nonzero.
    fn rem_assign(a: &mut Vec<u64>, b: &[u64], p: u64) {
        trim(a);
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        while a.len() > db {
            let lead = a[a.len() - 1] * inv % p;
            let shift = a.len() - 1 - db;
            if lead != 0 {
                for (j, &c) in b.iter().enumerate() {
                    a[shift + j] = (a[shift + j] + p - lead * c % p) % p;
                }
            }
            a.pop();
            trim(a);
        }
    }

    /// Monic gcd; `gcd(0, 0)` is empty.
    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            rem_assign(&mut x, &y, p);
            std::mem::swap(&mut x, &mut y);
        }
        if x.is_empty() {
            x
        } else {
            monic(&x, p)
        }
    }

    /// Quotient of an exact division.
    pub fn div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        if r.is_empty() {
            return Vec::new();
        }
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let lead = r[r.len() - 1] * inv % p;
            let shift = r.len() - 1 - db;
            q[shift] = lead;
            for (j, &c) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - lead * c % p) % p;
            }
            r.pop();
        }
        debug_assert!(r.iter().all(|&x| x == 0));
        trim(&mut q);
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::laurent::LaurentPoly;
    use crate::arith::var::Var;

    fn z(p: LaurentPoly) -> ZPoly {
        ZPoly::from_laurent(&p).0
    }

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = Primes::new().take(3).collect();
        assert_eq!(ps[0], 2147483647);
        assert!(ps.iter().all(|&p| is_prime(p)));
        assert!(!is_prime(2147483649));
    }

    #[test]
    fn univariate_common_factor() {
        let s = v(Var::S);
        let f = s.clone() - one();
        let a = z(f.clone() * (s.clone() + one()));
        let b = z(f.clone() * (s.pow(2) + one()));
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(g, z(f));
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
    }

    #[test]
    fn trivariate_common_factor() {
        let (s, m, n) = (v(Var::S), v(Var::Qm), v(Var::Qn));
        let f = s.clone() * m.pow(2) * n.clone() - n.pow(3) + LaurentPoly::from_i64(2) * s.pow(3);
        let x = m.clone() * n.clone() + s.pow(2) - one();
        let y = s.clone() * m.clone() - n.pow(2) * LaurentPoly::from_i64(5) + m.pow(3);
        let a = z(f.clone() * x.clone() * x.clone());
        let b = z(f.clone() * y.clone() * x.clone());
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(g, z(f * x));
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
    }

    #[test]
    fn coprime_and_integer_content() {
        let (s, m) = (v(Var::S), v(Var::Qm));
        let a = z((s.clone() * m.clone() - one()) * LaurentPoly::from_i64(6));
        let b = z((s.clone() + m.clone()) * LaurentPoly::from_i64(4));
        let (g, _, _) = gcd_cofactors(&a, &b);
        assert_eq!(g, ZPoly::constant(BigInt::from(2)));
    }

    #[test]
    fn laurent_monomial_content() {
        let s = v(Var::S);
        let a = z(LaurentPoly::var_pow(Var::S, -3) * (s.clone() - one()));
        let b = z(LaurentPoly::var_pow(Var::S, 2) * (s.pow(2) - one()));
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(g, z(LaurentPoly::var_pow(Var::S, -3) * (s.clone() - one())));
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
    }

    #[test]
    fn variable_in_one_argument_only() {
        let (s, m, n) = (v(Var::S), v(Var::Qm), v(Var::Qn));
        let f = s.clone() * m.clone() - one();
        let a = z(f.clone() * (n.clone() + s.clone()));
        let b = z(f.clone() * (m.clone() + one()));
        assert_eq!(gcd(&a, &b), z(f));
    }

    fn s_pochhammer(k: i32) -> LaurentPoly {
        (1..=k).fold(one(), |acc, j| acc * (one() - LaurentPoly::var_pow(Var::S, 2 * j)))
    }

    #[test]
    fn univariate_with_repeated_cyclotomic_factors() {
        let a = z(s_pochhammer(2) * s_pochhammer(6) * LaurentPoly::var_pow(Var::S, -4));
        let b = z(s_pochhammer(5) * s_pochhammer(5) * s_pochhammer(1));
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
        assert_eq!(g.max_exponents().0[Var::S as usize] - g.min_exponents().0[Var::S as usize], 44);
    }
}
