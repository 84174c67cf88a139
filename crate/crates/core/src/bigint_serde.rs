//! Integers that fit in `i64` serialize as JSON numbers, larger ones as
//! decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Small(i64),
    Large(String),
}

fn to_repr(x: &BigInt) -> Repr {
    x.to_i64().map_or_else(|| Repr::Large(x.to_string()), Repr::Small)
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
    match r {
        Repr::Small(v) => Ok(v.into()),
        Repr::Large(s) => s.parse().map_err(|_| E::custom(format!("invalid integer {s:?}"))),
    }
}

pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_repr(x).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    from_repr(Repr::deserialize(d)?)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(from_repr::<D::Error>)
            .collect::<Result<_, _>>()
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct W {
        #[serde(with = "super")]
        x: BigInt,
        #[serde(with = "super::vec")]
        xs: Vec<BigInt>,
    }

    #[test]
    fn small_and_large() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let w = W { x: big.clone(), xs: vec![BigInt::from(-7), big] };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"x":"123456789012345678901234567890","xs":[-7,"123456789012345678901234567890"]}"#);
        assert_eq!(serde_json::from_str::<W>(&s).unwrap(), w);
    }
}
