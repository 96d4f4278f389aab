use std::collections::BTreeMap;
use std::fmt;

/// A small step `(dx, dy)` with `dx, dy` in `{-1, 0, 1}`, not both zero.
pub type Step = (i8, i8);

pub const COMPASS: [(&str, Step); 8] = [
    ("N", (0, 1)),
    ("NE", (1, 1)),
    ("E", (1, 0)),
    ("SE", (1, -1)),
    ("S", (0, -1)),
    ("SW", (-1, -1)),
    ("W", (-1, 0)),
    ("NW", (-1, 1)),
];

pub fn step_name(step: Step) -> &'static str {
    COMPASS.iter().find(|(_, s)| *s == step).map(|(n, _)| *n).expect("small step")
}

pub fn step_by_name(name: &str) -> Option<Step> {
    COMPASS.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|(_, s)| *s)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("unknown model {0:?}")]
    UnknownModel(String),
    #[error("step ({0}, {1}) is not a small step")]
    LargeStep(i64, i64),
    #[error("model has no steps")]
    Empty,
    #[error("step {0} has multiplicity zero")]
    ZeroMultiplicity(String),
}

/// A multiset of small steps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StepModel {
    name: String,
    steps: BTreeMap<Step, u32>,
}

impl StepModel {
    pub fn new<I>(name: impl Into<String>, steps: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = ((i64, i64), u32)>,
    {
        let mut map = BTreeMap::new();
        for ((dx, dy), m) in steps {
            if !(-1..=1).contains(&dx) || !(-1..=1).contains(&dy) || (dx, dy) == (0, 0) {
                return Err(ModelError::LargeStep(dx, dy));
            }
            let step = (dx as i8, dy as i8);
            if m == 0 {
                return Err(ModelError::ZeroMultiplicity(step_name(step).into()));
            }
            *map.entry(step).or_insert(0) += m;
        }
        if map.is_empty() {
            return Err(ModelError::Empty);
        }
        Ok(StepModel { name: name.into(), steps: map })
    }

    /// Builds a model from compass names, e.g. `&[("W", 1), ("NE", 2)]`.
    pub fn from_compass(name: &str, steps: &[(&str, u32)]) -> Self {
        let steps = steps
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(n, m)| {
                let (dx, dy) = step_by_name(n).unwrap_or_else(|| panic!("bad step name {n}"));
                ((dx as i64, dy as i64), *m)
            });
        StepModel::new(name, steps).expect("valid built-in model")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn steps(&self) -> impl Iterator<Item = (Step, u32)> + '_ {
        self.steps.iter().map(|(s, m)| (*s, *m))
    }

    pub fn multiplicity(&self, step: Step) -> u32 {
        self.steps.get(&step).copied().unwrap_or(0)
    }

    pub fn num_steps(&self) -> u32 {
        self.steps.values().sum()
    }

    /// The model reflected in the diagonal, `(dx, dy) -> (dy, dx)`.
    pub fn transpose(&self) -> Self {
        StepModel {
            name: format!("{}^T", self.name),
            steps: self.steps.iter().map(|(&(dx, dy), &m)| ((dy, dx), m)).collect(),
        }
    }

    /// Whether the model is unchanged by `(dx, dy) -> (dy, dx)`.
    pub fn is_diagonal_symmetric(&self) -> bool {
        self.transpose().steps == self.steps
    }

    /// Compact description such as `{W, SW, E x2, NE}`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = COMPASS
            .iter()
            .filter_map(|(n, s)| match self.multiplicity(*s) {
                0 => None,
                1 => Some(n.to_string()),
                m => Some(format!("{n} x{m}")),
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn gessel() -> Self {
        StepModel::from_compass("gessel", &[("E", 1), ("NE", 1), ("W", 1), ("SW", 1)])
    }

    pub fn kreweras() -> Self {
        StepModel::from_compass("kreweras", &[("W", 1), ("S", 1), ("NE", 1)])
    }

    pub fn square() -> Self {
        StepModel::from_compass("square", &[("E", 1), ("N", 1), ("W", 1), ("S", 1)])
    }

    pub fn w_se_ne() -> Self {
        StepModel::from_compass("w-se-ne", &[("W", 1), ("SE", 1), ("NE", 1)])
    }

    pub fn w_e_se_ne() -> Self {
        StepModel::from_compass("w-e-se-ne", &[("W", 1), ("E", 1), ("SE", 1), ("NE", 1)])
    }

    /// `{W, SW, SE, NE, E x2, S x lambda}`; the S step is absent for `lambda = 0`.
    pub fn weighted(lambda: u32) -> Self {
        StepModel::from_compass(
            &format!("weighted:{lambda}"),
            &[("W", 1), ("SW", 1), ("SE", 1), ("NE", 1), ("E", 2), ("S", lambda)],
        )
    }

    /// Three weighted models, `g10a` to `g10c`, whose groups have order 10.
    pub fn g10a() -> Self {
        StepModel::from_compass("g10a", &[("W", 1), ("NW", 1), ("N", 2), ("NE", 1), ("E", 2), ("SE", 1), ("S", 1)])
    }

    pub fn g10b() -> Self {
        StepModel::from_compass("g10b", &[("SW", 1), ("W", 2), ("NW", 1), ("N", 1), ("E", 1), ("SE", 1), ("S", 2)])
    }

    pub fn g10c() -> Self {
        StepModel::from_compass("g10c", &[("SW", 1), ("W", 2), ("NW", 1), ("N", 2), ("E", 1), ("NE", 1), ("S", 1)])
    }

    /// Looks a model up by name. `weighted` takes its weight as
    /// `weighted:K` and defaults to `K = 1`.
    pub fn by_name(name: &str) -> Result<Self, ModelError> {
        let lower = name.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("weighted") {
            let lambda = match rest.strip_prefix(':').or_else(|| rest.strip_prefix('=')) {
                Some(k) => k.parse().map_err(|_| ModelError::UnknownModel(name.into()))?,
                None if rest.is_empty() => 1,
                None => return Err(ModelError::UnknownModel(name.into())),
            };
            return Ok(StepModel::weighted(lambda));
        }
        match lower.as_str() {
            "gessel" => Ok(StepModel::gessel()),
            "kreweras" => Ok(StepModel::kreweras()),
            "square" => Ok(StepModel::square()),
            "w-se-ne" => Ok(StepModel::w_se_ne()),
            "w-e-se-ne" => Ok(StepModel::w_e_se_ne()),
            "g10a" => Ok(StepModel::g10a()),
            "g10b" => Ok(StepModel::g10b()),
            "g10c" => Ok(StepModel::g10c()),
            _ => Err(ModelError::UnknownModel(name.into())),
        }
    }

    /// Every named model, with the weighted model at `lambda = 1`.
    pub fn registry() -> Vec<StepModel> {
        vec![
            StepModel::gessel(),
            StepModel::kreweras(),
            StepModel::square(),
            StepModel::w_se_ne(),
            StepModel::w_e_se_ne(),
            StepModel::weighted(1),
            StepModel::g10a(),
            StepModel::g10b(),
            StepModel::g10c(),
        ]
    }

    pub const NAMES: [&'static str; 9] =
        ["gessel", "kreweras", "square", "w-se-ne", "w-e-se-ne", "weighted", "g10a", "g10b", "g10c"];
}

impl fmt::Debug for StepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name, self.describe())
    }
}

impl fmt::Display for StepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_resolve() {
        for name in StepModel::NAMES {
            assert!(StepModel::by_name(name).is_ok(), "{name}");
        }
        assert_eq!(StepModel::by_name("weighted:5").unwrap().multiplicity((0, -1)), 5);
        assert_eq!(StepModel::by_name("weighted:0").unwrap().multiplicity((0, -1)), 0);
        assert!(StepModel::by_name("gesel").is_err());
    }

    #[test]
    fn rejects_bad_steps() {
        assert_eq!(StepModel::new("x", [((2, 0), 1)]), Err(ModelError::LargeStep(2, 0)));
        assert_eq!(StepModel::new("x", [((0, 0), 1)]), Err(ModelError::LargeStep(0, 0)));
        assert_eq!(StepModel::new("x", Vec::new()), Err(ModelError::Empty));
    }

    #[test]
    fn describes_multiplicities() {
        assert_eq!(StepModel::weighted(3).describe(), "{NE, E x2, SE, S x3, SW, W}");
        assert_eq!(StepModel::g10a().num_steps(), 9);
    }
}
