use num_rational::BigRational;
use serde_json::Value;

use super::{ff_construct, CyclotomicField, Field, FiniteField, Rationals, Reals};
use crate::error::{Error, Result};

/// Runtime-selected field, used where the field comes from user input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyField {
    Q(Rationals),
    R(Reals),
    GF(FiniteField),
    Cyclotomic(CyclotomicField),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyElem {
    Rat(BigRational),
    GF(u32),
    Cyc(Vec<BigRational>),
}

impl AnyField {
    /// Parses `Q`, `R`, `GF(p)`, `GF(p^l)` or `cyclotomic(N)`.
    pub fn parse(s: &str) -> Result<AnyField> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Descriptor(format!("unknown field {s:?}"));
        let inner = |prefix: &str| {
            t.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
        };
        match t.as_str() {
            "Q" => return Ok(AnyField::Q(Rationals::default())),
            "R" => return Ok(AnyField::R(Reals)),
            _ => {}
        }
        if let Some(arg) = inner("GF") {
            let (p, l) = match arg.split_once('^') {
                Some((p, l)) => (p, l),
                None => (arg, "1"),
            };
            let p: u64 = p.parse().map_err(|_| bad())?;
            let l: u32 = l.parse().map_err(|_| bad())?;
            return Ok(AnyField::GF(ff_construct(p, l, 0)?));
        }
        if let Some(arg) = inner("cyclotomic") {
            let n: u64 = arg.parse().map_err(|_| bad())?;
            if n == 0 || n > 256 {
                return Err(Error::Descriptor(format!("unsupported conductor {n}")));
            }
            return Ok(AnyField::Cyclotomic(CyclotomicField::new(n)));
        }
        Err(bad())
    }

    pub fn from_descriptor(v: &Value) -> Result<AnyField> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Descriptor(format!("field descriptor lacks kind: {v}")))?;
        let int = |key: &str| {
            v.get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Descriptor(format!("field descriptor lacks {key}: {v}")))
        };
        match kind {
            "Q" => Ok(AnyField::Q(Rationals::default())),
            "R" => Ok(AnyField::R(Reals)),
            "GF" => {
                let p = int("p")?;
                let modulus = match v.get("modulus") {
                    Some(Value::Array(cs)) => cs
                        .iter()
                        .map(|c| {
                            c.as_u64()
                                .ok_or_else(|| Error::Descriptor(format!("bad modulus coefficient {c}")))
                        })
                        .collect::<Result<Vec<u64>>>()?,
                    _ => return Ok(AnyField::GF(ff_construct(p, int("ell")? as u32, 0)?)),
                };
                Ok(AnyField::GF(FiniteField::with_modulus(p, modulus)?))
            }
            "cyclotomic" => Ok(AnyField::Cyclotomic(CyclotomicField::new(int("conductor")?))),
            other => Err(Error::Descriptor(format!("unknown field kind {other:?}"))),
        }
    }
}

macro_rules! dispatch {
    ($self:expr, $f:ident => $body:expr) => {
        match $self {
            AnyField::Q($f) => $body,
            AnyField::R($f) => $body,
            AnyField::GF($f) => $body,
            AnyField::Cyclotomic($f) => $body,
        }
    };
}

impl AnyField {
    fn wrap_rat(x: BigRational) -> AnyElem {
        AnyElem::Rat(x)
    }
}

fn rat(e: &AnyElem) -> &BigRational {
    match e {
        AnyElem::Rat(x) => x,
        other => panic!("expected rational element, got {other:?}"),
    }
}

fn gf(e: &AnyElem) -> &u32 {
    match e {
        AnyElem::GF(x) => x,
        other => panic!("expected finite-field element, got {other:?}"),
    }
}

fn cyc(e: &AnyElem) -> &Vec<BigRational> {
    match e {
        AnyElem::Cyc(x) => x,
        other => panic!("expected cyclotomic element, got {other:?}"),
    }
}

/// Applies a unary element operation in the matching concrete field.
macro_rules! lift1 {
    ($self:expr, $a:expr, |$f:ident, $x:ident| $body:expr, $wrap:ident) => {
        match $self {
            AnyField::Q($f) => {
                let $x = rat($a);
                $wrap!(Rat, $body)
            }
            AnyField::R($f) => {
                let $x = rat($a);
                $wrap!(Rat, $body)
            }
            AnyField::GF($f) => {
                let $x = gf($a);
                $wrap!(GF, $body)
            }
            AnyField::Cyclotomic($f) => {
                let $x = cyc($a);
                $wrap!(Cyc, $body)
            }
        }
    };
}

macro_rules! lift2 {
    ($self:expr, $a:expr, $b:expr, |$f:ident, $x:ident, $y:ident| $body:expr, $wrap:ident) => {
        match $self {
            AnyField::Q($f) => {
                let ($x, $y) = (rat($a), rat($b));
                $wrap!(Rat, $body)
            }
            AnyField::R($f) => {
                let ($x, $y) = (rat($a), rat($b));
                $wrap!(Rat, $body)
            }
            AnyField::GF($f) => {
                let ($x, $y) = (gf($a), gf($b));
                $wrap!(GF, $body)
            }
            AnyField::Cyclotomic($f) => {
                let ($x, $y) = (cyc($a), cyc($b));
                $wrap!(Cyc, $body)
            }
        }
    };
}

macro_rules! elem {
    ($v:ident, $e:expr) => {
        AnyElem::$v($e)
    };
}
macro_rules! plain {
    ($v:ident, $e:expr) => {
        $e
    };
}
macro_rules! res_elem {
    ($v:ident, $e:expr) => {
        $e.map(AnyElem::$v)
    };
}
macro_rules! opt_elem {
    ($v:ident, $e:expr) => {
        $e.map(AnyElem::$v)
    };
}
macro_rules! res_vec {
    ($v:ident, $e:expr) => {
        $e.map(|v| v.into_iter().map(AnyElem::$v).collect())
    };
}

impl Field for AnyField {
    type Elem = AnyElem;

    fn zero(&self) -> AnyElem {
        match self {
            AnyField::Q(f) => Self::wrap_rat(f.zero()),
            AnyField::R(f) => Self::wrap_rat(f.zero()),
            AnyField::GF(f) => AnyElem::GF(f.zero()),
            AnyField::Cyclotomic(f) => AnyElem::Cyc(f.zero()),
        }
    }
    fn one(&self) -> AnyElem {
        match self {
            AnyField::Q(f) => Self::wrap_rat(f.one()),
            AnyField::R(f) => Self::wrap_rat(f.one()),
            AnyField::GF(f) => AnyElem::GF(f.one()),
            AnyField::Cyclotomic(f) => AnyElem::Cyc(f.one()),
        }
    }
    fn from_int(&self, n: i64) -> AnyElem {
        match self {
            AnyField::Q(f) => Self::wrap_rat(f.from_int(n)),
            AnyField::R(f) => Self::wrap_rat(f.from_int(n)),
            AnyField::GF(f) => AnyElem::GF(f.from_int(n)),
            AnyField::Cyclotomic(f) => AnyElem::Cyc(f.from_int(n)),
        }
    }
    fn add(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        lift2!(self, a, b, |f, x, y| f.add(x, y), elem)
    }
    fn sub(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        lift2!(self, a, b, |f, x, y| f.sub(x, y), elem)
    }
    fn neg(&self, a: &AnyElem) -> AnyElem {
        lift1!(self, a, |f, x| f.neg(x), elem)
    }
    fn mul(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        lift2!(self, a, b, |f, x, y| f.mul(x, y), elem)
    }
    fn inv(&self, a: &AnyElem) -> Result<AnyElem> {
        lift1!(self, a, |f, x| f.inv(x), res_elem)
    }
    fn is_zero(&self, a: &AnyElem) -> bool {
        lift1!(self, a, |f, x| f.is_zero(x), plain)
    }
    fn pow(&self, a: &AnyElem, n: u64) -> AnyElem {
        lift1!(self, a, |f, x| f.pow(x, n), elem)
    }
    fn characteristic(&self) -> u64 {
        dispatch!(self, f => f.characteristic())
    }
    fn roots_of_unity_count(&self) -> u64 {
        dispatch!(self, f => f.roots_of_unity_count())
    }
    fn root_of_unity(&self, n: u64) -> Option<AnyElem> {
        match self {
            AnyField::Q(f) => opt_elem!(Rat, f.root_of_unity(n)),
            AnyField::R(f) => opt_elem!(Rat, f.root_of_unity(n)),
            AnyField::GF(f) => opt_elem!(GF, f.root_of_unity(n)),
            AnyField::Cyclotomic(f) => opt_elem!(Cyc, f.root_of_unity(n)),
        }
    }
    fn is_nth_power(&self, x: &AnyElem, n: u64) -> Result<bool> {
        lift1!(self, x, |f, v| f.is_nth_power(v, n), plain)
    }
    fn nth_power_class(&self, x: &AnyElem, n: u64) -> Result<AnyElem> {
        lift1!(self, x, |f, v| f.nth_power_class(v, n), res_elem)
    }
    fn nth_roots(&self, x: &AnyElem, n: u64) -> Result<Vec<AnyElem>> {
        lift1!(self, x, |f, v| f.nth_roots(v, n), res_vec)
    }
    fn descriptor(&self) -> Value {
        dispatch!(self, f => f.descriptor())
    }
    fn elem_to_json(&self, a: &AnyElem) -> Value {
        lift1!(self, a, |f, x| f.elem_to_json(x), plain)
    }
    fn elem_from_json(&self, v: &Value) -> Result<AnyElem> {
        match self {
            AnyField::Q(f) => res_elem!(Rat, f.elem_from_json(v)),
            AnyField::R(f) => res_elem!(Rat, f.elem_from_json(v)),
            AnyField::GF(f) => res_elem!(GF, f.elem_from_json(v)),
            AnyField::Cyclotomic(f) => res_elem!(Cyc, f.elem_from_json(v)),
        }
    }
    fn fmt_elem(&self, a: &AnyElem) -> String {
        lift1!(self, a, |f, x| f.fmt_elem(x), plain)
    }
    fn elements(&self) -> Option<Vec<AnyElem>> {
        match self {
            AnyField::GF(f) => f.elements().map(|v| v.into_iter().map(AnyElem::GF).collect()),
            _ => None,
        }
    }
    fn is_normalized_constant(&self, c: &AnyElem) -> bool {
        lift1!(self, c, |f, x| f.is_normalized_constant(x), plain)
    }
    fn sign(&self, a: &AnyElem) -> Option<i8> {
        lift1!(self, a, |f, x| f.sign(x), plain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert!(matches!(AnyField::parse("Q").unwrap(), AnyField::Q(_)));
        assert!(matches!(AnyField::parse("R").unwrap(), AnyField::R(_)));
        match AnyField::parse("GF(7^2)").unwrap() {
            AnyField::GF(f) => assert_eq!(f.order(), 49),
            _ => panic!(),
        }
        assert!(AnyField::parse("GF(6)").is_err());
        assert!(AnyField::parse("Z").is_err());
        let c = AnyField::parse("cyclotomic(8)").unwrap();
        assert_eq!(AnyField::from_descriptor(&c.descriptor()).unwrap(), c);
        let g = AnyField::parse("GF(3^3)").unwrap();
        assert_eq!(AnyField::from_descriptor(&g.descriptor()).unwrap(), g);
    }

    #[test]
    fn delegated_arithmetic() {
        let f = AnyField::parse("GF(7)").unwrap();
        let three = f.from_int(3);
        assert_eq!(f.mul(&three, &f.from_int(5)), f.one());
        assert!(!f.is_nth_power(&three, 3).unwrap());
        let q = AnyField::parse("Q").unwrap();
        assert_eq!(q.fmt_elem(&q.inv(&q.from_int(-4)).unwrap()), "-1/4");
    }
}
