use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{mk_endo, PermEndo};
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Wire form: `{"alphabet": N, "depth": l, "map": [[K, g(K)], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoJson {
    pub alphabet: u32,
    pub depth: usize,
    pub map: Vec<(Vec<Letter>, Vec<Letter>)>,
}

impl From<&PermEndo> for EndoJson {
    fn from(e: &PermEndo) -> Self {
        EndoJson {
            alphabet: e.alphabet(),
            depth: e.depth(),
            map: e.pairs().into_iter().map(|(k, j)| (k.into_letters(), j.into_letters())).collect(),
        }
    }
}

impl TryFrom<EndoJson> for PermEndo {
    type Error = Error;

    fn try_from(j: EndoJson) -> Result<Self> {
        let n = j.alphabet;
        let pairs = j
            .map
            .into_iter()
            .map(|(k, g)| Ok((Word::new(n, k)?, Word::new(n, g)?)))
            .collect::<Result<Vec<_>>>()?;
        mk_endo(n, j.depth, &pairs)
    }
}

impl Serialize for PermEndo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EndoJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermEndo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PermEndo::try_from(EndoJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endocalc::builtin;

    #[test]
    fn round_trip() {
        let psi = builtin("psi13").unwrap();
        let s = serde_json::to_string(&psi).unwrap();
        assert_eq!(
            s,
            r#"{"alphabet":2,"depth":2,"map":[[[1,1],[2,1]],[[1,2],[1,2]],[[2,1],[1,1]],[[2,2],[2,2]]]}"#
        );
        assert_eq!(serde_json::from_str::<PermEndo>(&s).unwrap(), psi);
    }

    #[test]
    fn padded_input_reduces() {
        let s = r#"{"alphabet":2,"depth":2,"map":[[[1,1],[2,1]],[[1,2],[2,2]],[[2,1],[1,1]],[[2,2],[1,2]]]}"#;
        let e: PermEndo = serde_json::from_str(s).unwrap();
        assert_eq!(e.depth(), 1);
        let bad = r#"{"alphabet":2,"depth":1,"map":[[[1],[1]],[[2],[1]]]}"#;
        assert!(serde_json::from_str::<PermEndo>(bad).is_err());
    }
}
