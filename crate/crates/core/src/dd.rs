//! Double-double arithmetic: unevaluated sums of two f64s giving ~31
//! significant decimal digits.
//!
//! The imaginary-order Bessel quadrature in [`crate::specfun`] needs this
//! because downstream consumers multiply the kernel by factors up to
//! ~e^40; plain f64 quadrature noise (~1e-16 absolute) would then swamp
//! results that are themselves exponentially small. Only the operations
//! that quadrature needs are provided: add/sub/mul/div, exp, sin/cos,
//! and the Gauss-Legendre node solve.
//!
//! Error model: add/sub/mul/div are accurate to ~1e-32 relative; exp and
//! sin/cos to ~1e-30 after argument reduction (arguments up to ~1e3).

/// Two-float representation: value = hi + lo, with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b| or a == 0
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

pub const LN2: Dd = Dd {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};
pub const PI: Dd = Dd {
    hi: 3.141592653589793,
    lo: 1.2246467991473532e-16,
};
pub const FRAC_PI_2: Dd = Dd {
    hi: 1.5707963267948966,
    lo: 6.123233995736766e-17,
};
pub const TWO_PI: Dd = Dd {
    hi: 6.283185307179586,
    lo: 2.4492935982947064e-16,
};

impl Dd {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(a: f64) -> Self {
        Dd { hi: a, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (s1, s2) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, b: Dd) -> Dd {
        self.add(b.neg())
    }

    #[inline]
    pub fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + self.hi * b.lo + self.lo * b.hi;
        let (s, e) = quick_two_sum(p1, p2);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (s, e) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self.sub(b.mul_f64(q1));
        let q2 = r.hi / b.hi;
        let r = r.sub(b.mul_f64(q2));
        let q3 = r.hi / b.hi;
        Dd::new(q1, q2).add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        // full-precision divide; multiplying by a rounded 1/b instead
        // would cap the result at f64 accuracy
        self.div(Dd::from_f64(b))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::from_f64(1.0).div(self)
    }

    #[inline]
    pub fn sqr(self) -> Dd {
        self.mul(self)
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    /// exp(self), accurate to ~1e-30 relative for |self| <= ~700.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::from_f64(0.0);
        }
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        // self = k ln2 + r, |r| <= ln2/2, then exp(r) by Taylor.
        let k = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(k));
        let mut sum = Dd::from_f64(1.0);
        let mut term = Dd::from_f64(1.0);
        for n in 1..40 {
            term = term.mul(r).div_f64(n as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1.0e-35 {
                break;
            }
        }
        let scale = k as i32;
        Dd {
            hi: ldexp(sum.hi, scale),
            lo: ldexp(sum.lo, scale),
        }
    }

    /// (sin(self), cos(self)) with argument reduction mod 2*pi, accurate
    /// to ~1e-30 absolute for |self| <= ~1e4.
    pub fn sin_cos(self) -> (Dd, Dd) {
        // reduce mod pi/2 and track the quadrant
        let k = (self.to_f64() / FRAC_PI_2.hi).round();
        let r = self.sub(FRAC_PI_2.mul_f64(k));
        let quadrant = (k as i64).rem_euclid(4);
        let (s, c) = sin_cos_taylor(r);
        match quadrant {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    /// cosh(self) via two exponentials (no cancellation for large args;
    /// for |self| < 1 the relative error stays ~1e-30 because both terms
    /// are positive).
    pub fn cosh(self) -> Dd {
        let e = self.exp();
        e.add(self.neg().exp()).mul_f64(0.5)
    }

    pub fn sinh(self) -> Dd {
        if self.hi.abs() > 0.1 {
            let e = self.exp();
            return e.sub(self.neg().exp()).mul_f64(0.5);
        }
        // series near zero to avoid cancellation
        let mut sum = self;
        let mut term = self;
        let x2 = self.sqr();
        let mut n = 1.0;
        loop {
            term = term.mul(x2).div_f64((n + 1.0) * (n + 2.0));
            sum = sum.add(term);
            n += 2.0;
            if term.hi.abs() < 1.0e-35 * sum.hi.abs().max(1.0e-300) {
                return sum;
            }
        }
    }
}

fn ldexp(x: f64, e: i32) -> f64 {
    // exact scaling by 2^e; e stays small enough that one powi is safe
    x * (2.0f64).powi(e)
}

fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
    // |r| <= pi/4
    let r2 = r.sqr();
    let mut s = r;
    let mut term = r;
    let mut n = 1.0;
    loop {
        term = term.mul(r2).div_f64(-(n + 1.0) * (n + 2.0));
        s = s.add(term);
        n += 2.0;
        if term.hi.abs() < 1.0e-35 {
            break;
        }
    }
    let mut c = Dd::from_f64(1.0);
    term = Dd::from_f64(1.0);
    n = 0.0;
    loop {
        term = term.mul(r2).div_f64(-(n + 1.0) * (n + 2.0));
        c = c.add(term);
        n += 2.0;
        if term.hi.abs() < 1.0e-35 {
            break;
        }
    }
    (s, c)
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed in double-double
/// so that panel quadrature keeps ~30-digit accuracy. (f64 nodes would
/// reintroduce the very eps-level noise this module exists to remove.)
pub fn gauss_legendre(n: usize) -> (Vec<Dd>, Vec<Dd>) {
    let mut nodes = vec![Dd::from_f64(0.0); n];
    let mut weights = vec![Dd::from_f64(0.0); n];
    for k in 0..n {
        // Chebyshev-like seed, then Newton on P_n in dd arithmetic
        let mut x = Dd::from_f64(
            (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos(),
        );
        let mut dp = Dd::from_f64(0.0);
        for _ in 0..64 {
            let (p, d) = legendre_pair(n, x);
            dp = d;
            let step = p.div(d);
            x = x.sub(step);
            if step.hi.abs() < 1.0e-31 {
                let (p2, d2) = legendre_pair(n, x);
                dp = d2;
                x = x.sub(p2.div(d2));
                break;
            }
        }
        let one_minus_x2 = Dd::from_f64(1.0).sub(x.sqr());
        // w = 2 / ((1 - x^2) P_n'(x)^2)
        weights[k] = Dd::from_f64(2.0).div(one_minus_x2.mul(dp.sqr()));
        nodes[k] = x;
    }
    (nodes, weights)
}

/// (P_n(x), P_n'(x)) by the three-term recurrence in dd.
fn legendre_pair(n: usize, x: Dd) -> (Dd, Dd) {
    let mut p0 = Dd::from_f64(1.0);
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        // j P_j = (2j - 1) x P_{j-1} - (j - 1) P_{j-2}; the integer
        // factors are exact, the single divide keeps dd precision
        let p2 = x
            .mul(p1)
            .mul_f64(2.0 * jf - 1.0)
            .sub(p0.mul_f64(jf - 1.0))
            .div_f64(jf);
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let num = x.mul(p1).sub(p0).mul_f64(n as f64);
    let den = x.sqr().add_f64(-1.0);
    (p1, num.div(den))
}
