use std::fmt;

/// Number of coordinate variables in the global universe.
pub const NVARS: usize = 7;

/// A coordinate variable. The declaration order is the global variable order:
/// `s` first, then the color variables, then the summation-index variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Var {
    S,
    Qm,
    Qn,
    TQ1,
    TQ2,
    TQ3,
    TQ4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::S, Var::Qm, Var::Qn, Var::TQ1, Var::TQ2, Var::TQ3, Var::TQ4];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub const fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::Qm => "Qm",
            Var::Qn => "Qn",
            Var::TQ1 => "tQ1",
            Var::TQ2 => "tQ2",
            Var::TQ3 => "tQ3",
            Var::TQ4 => "tQ4",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
