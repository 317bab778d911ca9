//! Exact rationals and their text forms.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator after each operation.

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Element of the field ℚ(i).
pub type GaussianRational = Complex<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

/// Re-reduces a rational that may have been assembled by hand.
pub fn normalize(r: &Rational) -> Rational {
    Rational::new(r.numer().clone(), r.denom().clone())
}

/// |z|² = z·z̄, always a non-negative rational.
pub fn abs_sq(z: &GaussianRational) -> Rational {
    &z.re * &z.re + &z.im * &z.im
}

/// Parses an integer (`-3`), a fraction (`5/4`) or a finite decimal
/// (`0.25`, `-1.5`) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in `{s}`"))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in `{s}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(format!("bad decimal `{s}`"));
        }
        let digits = format!("{whole_digits}{frac}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| format!("bad decimal `{s}`"))?
        };
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    s.parse::<BigInt>()
        .map(Rational::from_integer)
        .map_err(|_| format!("bad number `{s}`"))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn pow10(places: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), places)
}

fn render_scaled(scaled: &BigInt, places: usize) -> String {
    let negative = scaled.sign() == Sign::Minus;
    let digits = scaled.abs().to_string();
    let body = if places == 0 {
        digits
    } else if digits.len() <= places {
        format!("0.{}{}", "0".repeat(places - digits.len()), digits)
    } else {
        let (int_part, frac_part) = digits.split_at(digits.len() - places);
        format!("{int_part}.{frac_part}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Largest decimal with `places` fractional digits that is ≤ r.
pub fn decimal_floor(r: &Rational, places: usize) -> String {
    let scaled = (r * Rational::from_integer(pow10(places))).floor();
    render_scaled(scaled.numer(), places)
}

/// Smallest decimal with `places` fractional digits that is ≥ r.
pub fn decimal_ceil(r: &Rational, places: usize) -> String {
    let scaled = (r * Rational::from_integer(pow10(places))).ceil();
    render_scaled(scaled.numer(), places)
}

/// Rounds to `sig` significant digits (half away from zero) in plain
/// positional notation.
pub fn decimal_significant(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let sig = sig.max(1);
    let abs = r.abs();
    // exponent e with 10^e <= |r| < 10^(e+1)
    let mut exp: i64 = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    let ten = int(10);
    let pow = |e: i64| -> Rational {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            num_traits::pow(ten.clone(), (-e) as usize).recip()
        }
    };
    while pow(exp) > abs {
        exp -= 1;
    }
    while pow(exp + 1) <= abs {
        exp += 1;
    }
    let places = (sig as i64 - 1 - exp).max(0) as usize;
    let scaled = &abs * Rational::from_integer(pow10(places));
    let half = rat(1, 2);
    let mut rounded = (scaled + half).floor().to_integer();
    // digits beyond the significant window (only when exp >= sig)
    let drop = (exp + 1 - sig as i64).max(0) as u32;
    if drop > 0 {
        let unit = pow10(drop as usize);
        let (q, rem) = rounded.div_rem(&unit);
        rounded = if rem * 2 >= unit { q + BigInt::one() } else { q } * unit;
    }
    let text = render_scaled(&rounded, places);
    if r.is_negative() {
        format!("-{text}")
    } else {
        text
    }
}

/// `decimal (exact)` as used throughout human-readable reports.
pub fn describe(r: &Rational) -> String {
    if r.is_integer() {
        format_rational(r)
    } else {
        format!("{} ({})", decimal_significant(r, 6), format_rational(r))
    }
}

/// Serde adapter storing rationals as canonical strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }

    pub mod option {
        use super::super::{format_rational, parse_rational, Rational};
        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&format_rational(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| parse_rational(&t).map_err(D::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use super::super::{format_rational, parse_rational, Rational};
        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(rs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(rs.iter().map(format_rational))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| parse_rational(t).map_err(D::Error::custom))
                .collect()
        }
    }
}
