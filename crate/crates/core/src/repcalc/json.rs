use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{mk_chain, mk_cycle, Decomposition, Multiplicity, RepClass};
use crate::error::{Error, Result};
use crate::words::{LassoWord, Word};

/// Wire form of a multiplicity: a positive integer or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultiplicityJson {
    Finite(u64),
    Infinite(InfTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfTag {
    #[serde(rename = "inf")]
    Inf,
}

impl From<Multiplicity> for MultiplicityJson {
    fn from(m: Multiplicity) -> Self {
        match m {
            Multiplicity::Finite(k) => MultiplicityJson::Finite(k),
            Multiplicity::Omega => MultiplicityJson::Infinite(InfTag::Inf),
        }
    }
}

impl From<MultiplicityJson> for Multiplicity {
    fn from(m: MultiplicityJson) -> Self {
        match m {
            MultiplicityJson::Finite(k) => Multiplicity::Finite(k),
            MultiplicityJson::Infinite(_) => Multiplicity::Omega,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComponentJson {
    Cycle { word: Vec<u32>, multiplicity: MultiplicityJson },
    Chain { prefix: Vec<u32>, cycle: Vec<u32>, multiplicity: MultiplicityJson },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub alphabet: u32,
    pub components: Vec<ComponentJson>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        let components = d
            .components()
            .map(|(c, m)| match c {
                RepClass::Cycle(w) => {
                    ComponentJson::Cycle { word: w.letters().to_vec(), multiplicity: m.into() }
                }
                RepClass::Chain(l) => ComponentJson::Chain {
                    prefix: l.prefix_letters().to_vec(),
                    cycle: l.cycle_letters().to_vec(),
                    multiplicity: m.into(),
                },
            })
            .collect();
        DecompositionJson { alphabet: d.alphabet(), components }
    }
}

impl TryFrom<DecompositionJson> for Decomposition {
    type Error = Error;

    fn try_from(j: DecompositionJson) -> Result<Self> {
        let n = j.alphabet;
        let mut d = Decomposition::empty(n);
        for c in j.components {
            let (class, m) = match c {
                ComponentJson::Cycle { word, multiplicity } => {
                    (mk_cycle(n, &Word::new(n, word)?)?, multiplicity)
                }
                ComponentJson::Chain { prefix, cycle, multiplicity } => {
                    (mk_chain(n, &LassoWord::from_letters(n, prefix, cycle)?)?, multiplicity)
                }
            };
            d.add(class, m.into())?;
        }
        Ok(d)
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DecompositionJson::deserialize(d)?;
        Decomposition::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format() {
        let mut d = Decomposition::empty(4);
        d.add(RepClass::cycle(4, &[4, 2]).unwrap(), Multiplicity::ONE).unwrap();
        d.add(RepClass::chain(4, &[3], &[2, 1]).unwrap(), Multiplicity::Omega).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(
            s,
            r#"{"alphabet":4,"components":[{"kind":"cycle","word":[2,4],"multiplicity":1},{"kind":"chain","prefix":[],"cycle":[1,2],"multiplicity":"inf"}]}"#
        );
        let back: Decomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_bad_letters() {
        let s = r#"{"alphabet":2,"components":[{"kind":"cycle","word":[3],"multiplicity":1}]}"#;
        assert!(serde_json::from_str::<Decomposition>(s).is_err());
        let s = r#"{"alphabet":2,"components":[{"kind":"cycle","word":[1],"multiplicity":"lots"}]}"#;
        assert!(serde_json::from_str::<Decomposition>(s).is_err());
    }
}
