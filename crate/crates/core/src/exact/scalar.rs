//! The ground field ℚ(i): exact complex scalars with rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// An exact scalar `a + b·i` with arbitrary-precision rational `a`, `b`.
///
/// Both parts are kept in lowest terms with positive denominators by the
/// underlying rational type, so equality is decidable and exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(v)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real scalar. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// `(a/b) + (c/d)·i`. Panics if `b == 0` or `d == 0`.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re² + im²`; zero iff the scalar is zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(i)");
        let n = self.norm_sqr();
        GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re + &rhs.re,
            im: self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<'a> Neg for &'a GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> Self {
        (&self).mul(&rhs.inv())
    }
}

impl<'a, 'b> Div<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'b GaussianRational) -> GaussianRational {
        self.mul(&rhs.inv())
    }
}

/// Formats a rational as `p/q` (or just `p` when `q == 1`).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional sign; `q` must be nonzero.
pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let bad = || ExactError::ParseRational {
        input: s.to_string(),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for GaussianRational {
    /// Compact form: `p/q`, `p/qi`, or `p/q+r/si` / `p/q-r/si`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let im_str = |im: &BigRational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", format_rational(im))
            }
        };
        if self.re.is_zero() {
            return write!(f, "{}", im_str(&self.im));
        }
        if self.im.is_positive() {
            write!(f, "{}+{}", format_rational(&self.re), im_str(&self.im))
        } else {
            write!(f, "{}{}", format_rational(&self.re), im_str(&self.im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for GaussianRational {
    type Err = ExactError;

    /// Accepts the compact coefficient syntax: `p/q`, `p/qi`, `i`, `-i`,
    /// `p/q+r/si`, `p/q-r/si`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::ParseRational {
            input: s.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        // Split a trailing imaginary term off, if present.
        if let Some(body) = t.strip_suffix('i') {
            // Find the sign that separates the real part from the imaginary
            // part; skip position 0 so leading signs stay with the first term.
            let mut split_at = None;
            for (idx, ch) in body.char_indices().skip(1) {
                if (ch == '+' || ch == '-') && !body[..idx].ends_with('/') {
                    split_at = Some(idx);
                }
            }
            let (re_str, im_str) = match split_at {
                Some(idx) => (&body[..idx], &body[idx..]),
                None => ("0", body),
            };
            let im = match im_str {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                other => parse_rational(other)?,
            };
            return Ok(GaussianRational::new(parse_rational(re_str)?, im));
        }
        Ok(GaussianRational::new(
            parse_rational(t)?,
            BigRational::zero(),
        ))
    }
}

// Wire format: {"re": "p/q", "im": "p/q"}.
impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &format_rational(&self.re))?;
        st.serialize_field("im", &format_rational(&self.im))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            re: String,
            im: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let re = parse_rational(&raw.re).map_err(D::Error::custom)?;
        let im = parse_rational(&raw.im).map_err(D::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, q_: i64) -> GaussianRational {
        GaussianRational::from_ratio(p, q_)
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = GaussianRational::from_parts(1, 2, -1, 3); // 1/2 - 1/3 i
        let b = GaussianRational::from_parts(2, 3, 1, 6);
        let prod = (&a).mul(&b);
        // (1/2 - i/3)(2/3 + i/6) = 1/3 + 1/18 + i(1/12 - 2/9)
        assert_eq!(
            prod,
            GaussianRational::from_parts(7, 18, -5, 36),
            "got {prod}"
        );
        let back = (&prod).div(&b);
        assert_eq!(back, a);
    }

    #[test]
    fn inverse_against_norm() {
        let a = GaussianRational::from_parts(3, 5, -2, 7);
        let prod = (&a).mul(&a.inv());
        assert_eq!(prod, GaussianRational::one());
    }

    #[test]
    fn denominators_stay_reduced() {
        let a = q(2, 4);
        assert_eq!(format_rational(a.re()), "1/2");
        let b = q(1, 2) + q(1, 2);
        assert_eq!(format_rational(b.re()), "1");
        assert!(b.re().denom().is_one());
    }

    #[test]
    fn parse_compact_coefficients() {
        let cases = [
            ("1", GaussianRational::one()),
            ("-1/2", q(-1, 2)),
            ("i", GaussianRational::i()),
            ("-i", -GaussianRational::i()),
            ("2i", GaussianRational::from_parts(0, 1, 2, 1)),
            ("1/2+1/3i", GaussianRational::from_parts(1, 2, 1, 3)),
            ("1/2-2i", GaussianRational::from_parts(1, 2, -2, 1)),
            ("-3/4-1/4i", GaussianRational::from_parts(-3, 4, -1, 4)),
        ];
        for (input, expected) in cases {
            let got: GaussianRational = input.parse().unwrap();
            assert_eq!(got, expected, "parsing {input:?}");
        }
        assert!("".parse::<GaussianRational>().is_err());
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let values = [
            GaussianRational::zero(),
            q(5, 3),
            q(-5, 3),
            GaussianRational::i(),
            GaussianRational::from_parts(1, 2, -1, 3),
        ];
        for v in values {
            let shown = v.to_string();
            let back: GaussianRational = shown.parse().unwrap();
            assert_eq!(back, v, "round-tripping {shown}");
        }
    }

    #[test]
    fn json_round_trip() {
        let v = GaussianRational::from_parts(-7, 3, 22, 5);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"re":"-7/3","im":"22/5"}"#);
        let back: GaussianRational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
