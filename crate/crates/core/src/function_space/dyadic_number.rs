use std::cmp::Ordering;
use std::fmt;

/// An exact dyadic rational `num / 2^log2den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    log2den: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, log2den: 0 };

    pub fn new(num: i128, log2den: u32) -> Self {
        let mut d = Dyadic { num, log2den };
        d.reduce();
        d
    }

    /// Caller guarantees lowest terms.
    pub(crate) const fn from_parts(num: i128, log2den: u32) -> Self {
        Dyadic { num, log2den }
    }

    pub fn integer(n: i64) -> Self {
        Dyadic::new(n as i128, 0)
    }

    fn reduce(&mut self) {
        if self.num == 0 {
            self.log2den = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.log2den);
        self.num >>= tz;
        self.log2den -= tz;
    }

    pub fn num(self) -> i128 {
        self.num
    }

    pub fn log2den(self) -> u32 {
        self.log2den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.log2den == 0
    }

    fn aligned(self, other: Dyadic) -> (i128, i128, u32) {
        let e = self.log2den.max(other.log2den);
        (
            self.num << (e - self.log2den),
            other.num << (e - other.log2den),
            e,
        )
    }

    pub fn double(self) -> Dyadic {
        if self.log2den > 0 {
            Dyadic::new(self.num, self.log2den - 1)
        } else {
            Dyadic::new(self.num * 2, 0)
        }
    }

    pub fn half(self) -> Dyadic {
        Dyadic::new(self.num, self.log2den + 1)
    }

    /// Representative in [0, 1).
    pub fn frac(self) -> Dyadic {
        let one = 1i128 << self.log2den;
        Dyadic::new(self.num.rem_euclid(one), self.log2den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / (2f64).powi(self.log2den as i32)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.log2den)
        }
    }
}

impl std::ops::Add for Dyadic {
    type Output = Dyadic;

    fn add(self, other: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a + b, e)
    }
}

impl std::ops::Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, other: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a - b, e)
    }
}

impl std::ops::Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic::new(-self.num, self.log2den)
    }
}

impl std::ops::Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, other: Dyadic) -> Dyadic {
        Dyadic::new(self.num * other.num, self.log2den + other.log2den)
    }
}
