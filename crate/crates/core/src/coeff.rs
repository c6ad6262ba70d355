//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Coefficients carry their field with them. Mixing fields in one operation is a
//! programming error and panics; polynomial code checks ring identity first, so
//! it never reaches that point through the public API.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The field polynomial coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// `F_p` for an odd prime `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if p > 2 && is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coefficient {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match *self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => Coefficient::Modular {
                residue: reduce_bigint(n, p),
                modulus: p,
            },
        }
    }

    /// `num / den`. Fails when `den` is zero in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient> {
        match *self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::Parse {
                        position: 0,
                        message: "division by zero".into(),
                    });
                }
                Ok(Coefficient::Rational(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::Prime(p) => {
                let d = reduce_bigint(den, p);
                if d == 0 {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!("denominator {den} vanishes modulo {p}"),
                    });
                }
                let n = Coefficient::Modular {
                    residue: reduce_bigint(num, p),
                    modulus: p,
                };
                let d = Coefficient::Modular { residue: d, modulus: p };
                Ok(&n / &d)
            }
        }
    }

    pub fn contains(&self, c: &Coefficient) -> bool {
        c.field() == *self
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    /// Always stored in lowest terms with a positive denominator.
    Rational(BigRational),
    /// `residue` lies in `[0, modulus)`.
    Modular { residue: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> FieldSpec {
        match self {
            Coefficient::Rational(_) => FieldSpec::Rationals,
            Coefficient::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_zero(),
            Coefficient::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_one(),
            Coefficient::Modular { residue, .. } => *residue == 1,
        }
    }

    /// Only rationals have a sign; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_negative(),
            Coefficient::Modular { .. } => false,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Coefficient> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coefficient::Rational(q) => Coefficient::Rational(q.recip()),
            Coefficient::Modular { residue, modulus } => Coefficient::Modular {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn abs(&self) -> Coefficient {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

fn mismatch() -> ! {
    panic!("coefficient arithmetic across different fields")
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Modular { residue: a, modulus: p },
                Coefficient::Modular { residue: b, modulus: q },
            ) if p == q => Coefficient::Modular {
                residue: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Modular { residue, modulus } => Coefficient::Modular {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Modular { residue: a, modulus: p },
                Coefficient::Modular { residue: b, modulus: q },
            ) if p == q => Coefficient::Modular {
                residue: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => mismatch(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &Coefficient {
    type Output = Coefficient;
    /// Panics on division by zero.
    fn div(self, rhs: &Coefficient) -> Coefficient {
        let inv = rhs.inverse().expect("coefficient division by zero");
        self * &inv
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coefficient::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
