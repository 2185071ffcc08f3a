//! Serde adapter for `i128` fields: JSON numbers while the magnitude stays
//! within `2^53 − 1`, decimal strings beyond that.

use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

pub const MAX_SAFE: i128 = (1 << 53) - 1;

pub fn serialize<S: Serializer>(v: &i128, ser: S) -> Result<S::Ok, S::Error> {
    if v.abs() <= MAX_SAFE {
        ser.serialize_i64(*v as i64)
    } else {
        ser.serialize_str(&v.to_string())
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = i128;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<i128, E> {
        Ok(v as i128)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<i128, E> {
        Ok(v as i128)
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<i128, E> {
        v.parse().map_err(E::custom)
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<i128, D::Error> {
    de.deserialize_any(IntVisitor)
}

/// The same encoding for an optional value; `None` becomes `null`.
pub mod option {
    use serde::{Deserialize, Deserializer, Serializer};

    struct Wrapped(i128);

    impl<'de> Deserialize<'de> for Wrapped {
        fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
            super::deserialize(de).map(Wrapped)
        }
    }

    pub fn serialize<S: Serializer>(v: &Option<i128>, ser: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => super::serialize(x, ser),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<i128>, D::Error> {
        Ok(Option::<Wrapped>::deserialize(de)?.map(|w| w.0))
    }
}

/// The same encoding applied element-wise to a fixed-size array.
pub mod array {
    use serde::ser::SerializeTuple;
    use serde::{Deserialize, Deserializer, Serializer};

    struct Wrapped(i128);

    impl<'de> Deserialize<'de> for Wrapped {
        fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
            super::deserialize(de).map(Wrapped)
        }
    }

    pub fn serialize<S: Serializer, const N: usize>(
        v: &[i128; N],
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        struct One<'a>(&'a i128);
        impl serde::Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                super::serialize(self.0, ser)
            }
        }
        let mut tup = ser.serialize_tuple(N)?;
        for x in v {
            tup.serialize_element(&One(x))?;
        }
        tup.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        de: D,
    ) -> Result<[i128; N], D::Error> {
        let items: Vec<Wrapped> = Vec::deserialize(de)?;
        let len = items.len();
        let values: Vec<i128> = items.into_iter().map(|w| w.0).collect();
        values
            .try_into()
            .map_err(|_| serde::de::Error::invalid_length(len, &"a fixed-size integer array"))
    }
}
