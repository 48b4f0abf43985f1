//! JSON documents for profiles and acts.
//!
//! Numbers may be JSON integers, decimal strings (`"0.2"`) or fraction
//! strings (`"1/5"`); all are read exactly. Output always uses the canonical
//! `p` / `p/q` strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{vector::serde_rational, Polytope, Rational, Vector};
use crate::preferences::{AffineUtility, Act, Agent, Profile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UtilityDocument {
    pub coeffs: Vector,
    #[serde(with = "serde_rational", default = "zero")]
    pub constant: Rational,
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AgentDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub utility: UtilityDocument,
    /// Generators of the belief polytope; redundant points are dropped.
    pub beliefs: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedAct {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rows: Vec<Vector>,
}

impl NamedAct {
    pub fn to_act(&self) -> Result<Act> {
        Act::new(self.rows.clone())
    }

    pub fn from_act(name: Option<String>, act: &Act) -> Self {
        NamedAct { name, rows: act.rows().to_vec() }
    }

    pub fn label(&self, index: usize) -> String {
        self.name.clone().unwrap_or_else(|| format!("act{index}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlantedPair {
    pub f: Vec<Vector>,
    pub g: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDocument {
    pub states: usize,
    pub outcome_dim: usize,
    pub agents: Vec<AgentDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub society: Option<AgentDocument>,
    /// Act pairs the fuzzer evaluates before sampling.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub planted: Vec<PlantedPair>,
}

fn agent_from_doc(doc: &AgentDocument) -> Result<Agent> {
    let utility = AffineUtility::new(doc.utility.coeffs.clone(), doc.utility.constant.clone())?;
    let agent = Agent::new(utility, Polytope::new(doc.beliefs.clone())?);
    Ok(match &doc.name {
        Some(name) => agent.named(name.clone()),
        None => agent,
    })
}

fn agent_to_doc(agent: &Agent) -> AgentDocument {
    AgentDocument {
        name: agent.name.clone(),
        utility: UtilityDocument { coeffs: agent.utility.coeffs.clone(), constant: agent.utility.constant.clone() },
        beliefs: agent.beliefs.vertices().to_vec(),
    }
}

impl ProfileDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_profile(&self) -> Result<Profile> {
        let agents = self.agents.iter().map(agent_from_doc).collect::<Result<Vec<_>>>()?;
        let society = self.society.as_ref().map(agent_from_doc).transpose()?;
        let prof = Profile::new(agents, society)?;
        if prof.states != self.states || prof.outcome_dim != self.outcome_dim {
            return Err(Error::InvalidProfile(vec![format!(
                "declared {} states and outcome dimension {}, agents have {} and {}",
                self.states, self.outcome_dim, prof.states, prof.outcome_dim
            )]));
        }
        Ok(prof)
    }

    pub fn from_profile(prof: &Profile) -> Self {
        ProfileDocument {
            states: prof.states,
            outcome_dim: prof.outcome_dim,
            agents: prof.agents.iter().map(agent_to_doc).collect(),
            society: prof.society.as_ref().map(agent_to_doc),
            planted: Vec::new(),
        }
    }

    pub fn planted_pairs(&self) -> Result<Vec<(Act, Act)>> {
        self.planted.iter().map(|p| Ok((Act::new(p.f.clone())?, Act::new(p.g.clone())?))).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActsDocument {
    pub acts: Vec<NamedAct>,
}

impl ActsDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: ActsDocument = serde_json::from_str(text)?;
        if doc.acts.is_empty() {
            return Err(Error::EmptyInput("acts document"));
        }
        Ok(doc)
    }

    pub fn to_acts(&self) -> Result<Vec<Act>> {
        self.acts.iter().map(NamedAct::to_act).collect()
    }

    /// The first two acts, as the pair `(f, g)`.
    pub fn pair(&self) -> Result<(Act, Act)> {
        match self.acts.as_slice() {
            [f, g, ..] => Ok((f.to_act()?, g.to_act()?)),
            _ => Err(Error::Parse("an act pair needs at least two acts".into())),
        }
    }
}

/// Reads and parses a profile document, returning the document as well so
/// its planted pairs stay available.
pub fn load_profile(path: &Path) -> Result<(ProfileDocument, Profile)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let doc = ProfileDocument::parse(&text)?;
    let prof = doc.to_profile()?;
    Ok((doc, prof))
}

pub fn load_acts(path: &Path) -> Result<ActsDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    ActsDocument::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    const EXAMPLE: &str = r#"{
        "states": 2,
        "outcome_dim": 2,
        "agents": [
            {"name": "Ann", "utility": {"coeffs": [1, 0]}, "beliefs": [["0.2", "0.8"], ["0.8", "0.2"], ["1/2", "1/2"]]},
            {"name": "Bob", "utility": {"coeffs": [0, 1], "constant": "-3/2"}, "beliefs": [["0.2", "0.8"], ["0.8", "0.2"]]}
        ],
        "society": {"utility": {"coeffs": ["1/2", "1/2"]}, "beliefs": [["0.2", "0.8"], ["0.8", "0.2"]]},
        "planted": [{"f": [[0, 0], [0, 0]], "g": [[30, -70], [-70, 30]]}]
    }"#;

    #[test]
    fn parses_exactly() {
        let doc = ProfileDocument::parse(EXAMPLE).unwrap();
        let prof = doc.to_profile().unwrap();
        assert_eq!(prof.agents[0].beliefs.vertices().len(), 2);
        assert_eq!(prof.agents[0].beliefs.vertices()[0][0], rat(1, 5));
        assert_eq!(prof.agents[1].utility.constant, rat(-3, 2));
        assert_eq!(prof.agents[0].name.as_deref(), Some("Ann"));
        assert_eq!(doc.planted_pairs().unwrap().len(), 1);
    }

    #[test]
    fn round_trip_is_identity() {
        let prof = ProfileDocument::parse(EXAMPLE).unwrap().to_profile().unwrap();
        let text = ProfileDocument::from_profile(&prof).to_json().unwrap();
        let again = ProfileDocument::parse(&text).unwrap().to_profile().unwrap();
        assert_eq!(prof, again);
    }

    #[test]
    fn rejects_floats_and_bad_shapes() {
        let floaty = EXAMPLE.replace("[1, 0]", "[1.0, 0]");
        assert!(ProfileDocument::parse(&floaty).is_err());
        let wrong_dim = EXAMPLE.replace("\"outcome_dim\": 2", "\"outcome_dim\": 3");
        assert!(ProfileDocument::parse(&wrong_dim).unwrap().to_profile().is_err());
        let bad_prior = EXAMPLE.replace("[\"0.8\", \"0.2\"], [\"1/2\"", "[\"0.9\", \"0.2\"], [\"1/2\"");
        assert!(ProfileDocument::parse(&bad_prior).unwrap().to_profile().is_err());
        assert!(ActsDocument::parse(r#"{"acts": []}"#).is_err());
    }

    #[test]
    fn acts_pair() {
        let doc = ActsDocument::parse(r#"{"acts": [{"name": "sq", "rows": [[0, 0], [0, 0]]}, {"rows": [[30, -70], [-70, 30]]}]}"#)
            .unwrap();
        let (f, g) = doc.pair().unwrap();
        assert!(f.is_constant());
        assert!(!g.is_constant());
        assert_eq!(doc.acts[1].label(1), "act1");
    }
}
