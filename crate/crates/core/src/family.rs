//! Group family descriptors and their textual syntax (`dihedral:n=7`,
//! `unm:n=3,m=5`, `central_ext:base=q8,m=3`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Base group of a central extension `base x Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CentralBase {
    D8,
    Q8,
    Heisenberg(u32),
}

impl CentralBase {
    pub fn order(&self) -> u64 {
        match *self {
            CentralBase::D8 | CentralBase::Q8 => 8,
            CentralBase::Heisenberg(p) => u64::from(p).pow(3),
        }
    }

    /// Prime `p` with `base / Z(base) = Z_p x Z_p`.
    pub fn prime(&self) -> u32 {
        match *self {
            CentralBase::D8 | CentralBase::Q8 => 2,
            CentralBase::Heisenberg(p) => p,
        }
    }
}

impl fmt::Display for CentralBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralBase::D8 => f.write_str("d8"),
            CentralBase::Q8 => f.write_str("q8"),
            CentralBase::Heisenberg(p) => write!(f, "heisenberg{p}"),
        }
    }
}

impl FromStr for CentralBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "d8" => Ok(CentralBase::D8),
            "q8" => Ok(CentralBase::Q8),
            _ => {
                let digits = s
                    .strip_prefix("heisenberg")
                    .or_else(|| s.strip_prefix('h'))
                    .ok_or_else(|| Error::Parse(format!("unknown central base `{s}`")))?;
                let p = digits
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad Heisenberg prime in `{s}`")))?;
                Ok(CentralBase::Heisenberg(p))
            }
        }
    }
}

/// Family tag without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Dihedral,
    Dicyclic,
    Semidihedral,
    U6n,
    Unm,
    V8n,
    Heisenberg,
    CentralExt,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Dihedral,
        FamilyKind::Dicyclic,
        FamilyKind::Semidihedral,
        FamilyKind::U6n,
        FamilyKind::Unm,
        FamilyKind::V8n,
        FamilyKind::Heisenberg,
        FamilyKind::CentralExt,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Dicyclic => "dicyclic",
            FamilyKind::Semidihedral => "semidihedral",
            FamilyKind::U6n => "u6n",
            FamilyKind::Unm => "unm",
            FamilyKind::V8n => "v8n",
            FamilyKind::Heisenberg => "heisenberg",
            FamilyKind::CentralExt => "central_ext",
        }
    }

    /// Parameter names in canonical order.
    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            FamilyKind::Unm => &["n", "m"],
            FamilyKind::Heisenberg => &["p"],
            FamilyKind::CentralExt => &["base", "m"],
            _ => &["n"],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// One concrete member of a group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `D_2n`, order `2n`, `n >= 3`.
    Dihedral { n: u32 },
    /// `T_4n`, order `4n`, `n >= 2`.
    Dicyclic { n: u32 },
    /// `SD_8n`, order `8n`, `n >= 2`.
    Semidihedral { n: u32 },
    /// `U_6n`, order `6n`, `n >= 2`.
    U6n { n: u32 },
    /// `U_(n,m)`, order `2nm`, `n, m >= 2`.
    Unm { n: u32, m: u32 },
    /// `V_8n`, order `8n`, `n >= 2`.
    V8n { n: u32 },
    /// Unitriangular 3x3 matrices over `Z_p`, order `p^3`.
    Heisenberg { p: u32 },
    /// `base x Z_m`.
    CentralExt { base: CentralBase, m: u32 },
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Dihedral { .. } => FamilyKind::Dihedral,
            FamilySpec::Dicyclic { .. } => FamilyKind::Dicyclic,
            FamilySpec::Semidihedral { .. } => FamilyKind::Semidihedral,
            FamilySpec::U6n { .. } => FamilyKind::U6n,
            FamilySpec::Unm { .. } => FamilyKind::Unm,
            FamilySpec::V8n { .. } => FamilyKind::V8n,
            FamilySpec::Heisenberg { .. } => FamilyKind::Heisenberg,
            FamilySpec::CentralExt { .. } => FamilyKind::CentralExt,
        }
    }

    /// Checks the parameter bounds of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            FamilySpec::Dihedral { n } if n < 3 => bad(format!("dihedral needs n >= 3, got {n}")),
            FamilySpec::Dicyclic { n } if n < 2 => bad(format!("dicyclic needs n >= 2, got {n}")),
            FamilySpec::Semidihedral { n } if n < 2 => {
                bad(format!("semidihedral needs n >= 2, got {n}"))
            }
            FamilySpec::U6n { n } if n < 2 => bad(format!("u6n needs n >= 2, got {n}")),
            FamilySpec::Unm { n, m } if n < 2 || m < 2 => {
                bad(format!("unm needs n, m >= 2, got n={n}, m={m}"))
            }
            FamilySpec::V8n { n } if n < 2 => bad(format!("v8n needs n >= 2, got {n}")),
            FamilySpec::Heisenberg { p } if !is_prime(p) => {
                bad(format!("heisenberg needs a prime p, got {p}"))
            }
            FamilySpec::CentralExt { m, .. } if m < 1 => {
                bad(format!("central_ext needs m >= 1, got {m}"))
            }
            FamilySpec::CentralExt {
                base: CentralBase::Heisenberg(p),
                ..
            } if !is_prime(p) => bad(format!("heisenberg base needs a prime p, got {p}")),
            _ => Ok(()),
        }
    }

    /// Group order, saturating on overflow.
    pub fn order(&self) -> u64 {
        let n = |v: u32| u64::from(v);
        match *self {
            FamilySpec::Dihedral { n: k } => 2 * n(k),
            FamilySpec::Dicyclic { n: k } => 4 * n(k),
            FamilySpec::Semidihedral { n: k } => 8 * n(k),
            FamilySpec::U6n { n: k } => 6 * n(k),
            FamilySpec::Unm { n: a, m: b } => 2 * n(a) * n(b),
            FamilySpec::V8n { n: k } => 8 * n(k),
            FamilySpec::Heisenberg { p } => n(p).saturating_pow(3),
            FamilySpec::CentralExt { base, m } => base.order().saturating_mul(n(m)),
        }
    }

    /// Parameter assignments in canonical order, e.g. `[("n", "3"), ("m", "5")]`.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match *self {
            FamilySpec::Dihedral { n }
            | FamilySpec::Dicyclic { n }
            | FamilySpec::Semidihedral { n }
            | FamilySpec::U6n { n }
            | FamilySpec::V8n { n } => vec![("n", n.to_string())],
            FamilySpec::Unm { n, m } => vec![("n", n.to_string()), ("m", m.to_string())],
            FamilySpec::Heisenberg { p } => vec![("p", p.to_string())],
            FamilySpec::CentralExt { base, m } => {
                vec![("base", base.to_string()), ("m", m.to_string())]
            }
        }
    }

    /// `n=3;m=5` form used in CSV cells.
    pub fn params_compact(&self) -> String {
        self.params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Conventional group name, e.g. `D_14`, `SD_16`, `U_(3,5)`.
    pub fn group_name(&self) -> String {
        match *self {
            FamilySpec::Dihedral { .. } => format!("D_{}", self.order()),
            FamilySpec::Dicyclic { .. } => format!("T_{}", self.order()),
            FamilySpec::Semidihedral { .. } => format!("SD_{}", self.order()),
            FamilySpec::U6n { .. } => format!("U_{}", self.order()),
            FamilySpec::Unm { n, m } => format!("U_({n},{m})"),
            FamilySpec::V8n { .. } => format!("V_{}", self.order()),
            FamilySpec::Heisenberg { p } => format!("Heis({p})"),
            FamilySpec::CentralExt { base, m } => {
                let b = match base {
                    CentralBase::D8 => "D_8".to_string(),
                    CentralBase::Q8 => "Q_8".to_string(),
                    CentralBase::Heisenberg(p) => format!("Heis({p})"),
                };
                format!("{b}xZ_{m}")
            }
        }
    }

    /// Builds a spec from a kind plus named parameters.
    pub fn from_parts(kind: FamilyKind, params: &[(String, String)]) -> Result<Self> {
        let get = |name: &str| -> Result<&str> {
            params
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| Error::Parse(format!("{kind} is missing parameter `{name}`")))
        };
        let num = |name: &str| -> Result<u32> {
            let v = get(name)?;
            v.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("parameter `{name}` is not an integer: `{v}`")))
        };
        for (k, _) in params {
            if !kind.param_names().contains(&k.as_str()) {
                return Err(Error::Parse(format!("{kind} has no parameter `{k}`")));
            }
        }
        let spec = match kind {
            FamilyKind::Dihedral => FamilySpec::Dihedral { n: num("n")? },
            FamilyKind::Dicyclic => FamilySpec::Dicyclic { n: num("n")? },
            FamilyKind::Semidihedral => FamilySpec::Semidihedral { n: num("n")? },
            FamilyKind::U6n => FamilySpec::U6n { n: num("n")? },
            FamilyKind::Unm => FamilySpec::Unm {
                n: num("n")?,
                m: num("m")?,
            },
            FamilyKind::V8n => FamilySpec::V8n { n: num("n")? },
            FamilyKind::Heisenberg => FamilySpec::Heisenberg { p: num("p")? },
            FamilyKind::CentralExt => FamilySpec::CentralExt {
                base: get("base")?.parse()?,
                m: num("m")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Splits `kind:k1=v1,k2=v2` into the kind and raw key/value pairs.
pub(crate) fn split_spec(s: &str) -> Result<(FamilyKind, Vec<(String, String)>)> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected `family:key=value,...`, got `{s}`")))?;
    let kind: FamilyKind = kind.parse()?;
    let mut params = Vec::new();
    for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
        params.push((k.trim().to_ascii_lowercase(), v.trim().to_string()));
    }
    Ok((kind, params))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = split_spec(s)?;
        FamilySpec::from_parts(kind, &params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{}:{}", self.kind(), params)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cli_syntax() {
        assert_eq!(
            "dihedral:n=7".parse::<FamilySpec>().unwrap(),
            FamilySpec::Dihedral { n: 7 }
        );
        assert_eq!(
            "unm:n=3,m=5".parse::<FamilySpec>().unwrap(),
            FamilySpec::Unm { n: 3, m: 5 }
        );
        assert_eq!(
            "central_ext:base=q8,m=3".parse::<FamilySpec>().unwrap(),
            FamilySpec::CentralExt {
                base: CentralBase::Q8,
                m: 3
            }
        );
        assert_eq!(
            "central_ext:base=h3,m=2".parse::<FamilySpec>().unwrap(),
            FamilySpec::CentralExt {
                base: CentralBase::Heisenberg(3),
                m: 2
            }
        );
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "dihedral:n=7",
            "dicyclic:n=2",
            "semidihedral:n=3",
            "u6n:n=4",
            "unm:n=3,m=5",
            "v8n:n=2",
            "heisenberg:p=5",
            "central_ext:base=d8,m=4",
            "central_ext:base=heisenberg3,m=2",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            "dihedral:n=2".parse::<FamilySpec>(),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            "heisenberg:p=4".parse::<FamilySpec>(),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            "unm:n=1,m=3".parse::<FamilySpec>(),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            "unm:n=3".parse::<FamilySpec>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "dihedral:k=3".parse::<FamilySpec>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "cyclic:n=3".parse::<FamilySpec>(),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(FamilySpec::Unm { n: 3, m: 5 }.order(), 30);
        assert_eq!(FamilySpec::Heisenberg { p: 5 }.order(), 125);
        assert_eq!(
            FamilySpec::CentralExt {
                base: CentralBase::D8,
                m: 3
            }
            .order(),
            24
        );
        assert_eq!(FamilySpec::Semidihedral { n: 2 }.group_name(), "SD_16");
    }
}
