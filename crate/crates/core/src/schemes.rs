//! Coloring schemes as validity predicates over `(tree, q, coloring)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::treelib::{Tree, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("unknown scheme `{0}` (expected proper, cf, odd, sr, nm, kscf:K, star or xhom)")]
    UnknownScheme(String),
    #[error("kscf parameter must be a positive integer, got `{0}`")]
    BadStrength(String),
    #[error("coloring has {found} entries but the tree has {expected} vertices")]
    Length { expected: usize, found: usize },
    #[error("color {color} at vertex {vertex} is outside 1..={q}")]
    ColorRange { vertex: usize, color: u32, q: u32 },
    #[error("q must be at least 1")]
    ZeroColors,
}

/// Which validity predicate applies to a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    /// No monochromatic edge.
    Proper,
    /// Some color occurs exactly once in every closed neighborhood.
    ConflictFree,
    /// Some color occurs an odd number of times in every closed neighborhood.
    Odd,
    /// No color repeats inside any closed neighborhood.
    StarRainbow,
    /// Every closed neighborhood sees at least two colors.
    NonMonochromatic,
    /// At least `k` colors occur exactly once in every closed neighborhood.
    KStrongConflictFree(u32),
    /// Proper, and every path on four vertices sees at least three colors.
    StarColoring,
    /// Existence homomorphism to the completely looped graph on `q` vertices:
    /// every vertex has a neighbor of its own color.
    XHomLooped,
}

impl Scheme {
    /// Every scheme with a fixed parameter choice (`kscf:2` for the strong variant).
    pub const ALL: [Scheme; 8] = [
        Scheme::Proper,
        Scheme::ConflictFree,
        Scheme::Odd,
        Scheme::StarRainbow,
        Scheme::NonMonochromatic,
        Scheme::KStrongConflictFree(2),
        Scheme::StarColoring,
        Scheme::XHomLooped,
    ];

    /// File-name friendly form of [`Scheme`]'s display name.
    pub fn slug(&self) -> String {
        self.to_string().replace(':', "")
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Proper => f.write_str("proper"),
            Scheme::ConflictFree => f.write_str("cf"),
            Scheme::Odd => f.write_str("odd"),
            Scheme::StarRainbow => f.write_str("sr"),
            Scheme::NonMonochromatic => f.write_str("nm"),
            Scheme::KStrongConflictFree(k) => write!(f, "kscf:{k}"),
            Scheme::StarColoring => f.write_str("star"),
            Scheme::XHomLooped => f.write_str("xhom"),
        }
    }
}

impl FromStr for Scheme {
    type Err = SchemeError;

    fn from_str(s: &str) -> Result<Self, SchemeError> {
        let s = s.trim();
        Ok(match s {
            "proper" => Scheme::Proper,
            "cf" => Scheme::ConflictFree,
            "odd" => Scheme::Odd,
            "sr" => Scheme::StarRainbow,
            "nm" => Scheme::NonMonochromatic,
            "star" => Scheme::StarColoring,
            "xhom" => Scheme::XHomLooped,
            _ => {
                let Some(k) = s.strip_prefix("kscf:") else {
                    return Err(SchemeError::UnknownScheme(s.to_string()));
                };
                match k.parse::<u32>() {
                    Ok(k) if k >= 1 => Scheme::KStrongConflictFree(k),
                    _ => return Err(SchemeError::BadStrength(k.to_string())),
                }
            }
        })
    }
}

impl Serialize for Scheme {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scheme {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A vertex coloring with colors in `1..=q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    q: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, q: u32) -> Result<Self, SchemeError> {
        if q == 0 {
            return Err(SchemeError::ZeroColors);
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > q) {
            return Err(SchemeError::ColorRange { vertex, color, q });
        }
        Ok(Coloring { colors, q })
    }

    /// Like [`Coloring::new`] but also checks the length against `t`.
    pub fn for_tree(t: &Tree, colors: Vec<u32>, q: u32) -> Result<Self, SchemeError> {
        if colors.len() != t.n() {
            return Err(SchemeError::Length {
                expected: t.n(),
                found: colors.len(),
            });
        }
        Coloring::new(colors, q)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// Color multiplicities over a vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorMultiset(BTreeMap<u32, usize>);

impl ColorMultiset {
    pub fn multiplicity(&self, color: u32) -> usize {
        self.0.get(&color).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.0.iter().map(|(&c, &m)| (c, m))
    }

    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

impl FromIterator<u32> for ColorMultiset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut map = BTreeMap::new();
        for c in iter {
            *map.entry(c).or_insert(0) += 1;
        }
        ColorMultiset(map)
    }
}

/// Multiset of colors on `N[v]`.
pub fn closed_neighborhood_colors(t: &Tree, c: &Coloring, v: usize) -> ColorMultiset {
    std::iter::once(v)
        .chain(t.neighbors(v).iter().copied())
        .map(|w| c.color(w))
        .collect()
}

/// Summary of the color multiplicities on one closed neighborhood; every
/// per-vertex condition is a function of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LocalStats {
    pub distinct: u32,
    pub singletons: u32,
    pub has_odd: bool,
    pub max_multiplicity: u32,
    /// Multiplicity of the center's own color.
    pub center_multiplicity: u32,
}

impl LocalStats {
    /// `center` is the color of `v`; `neighbors` the colors of `N(v)`.
    pub fn collect(center: u32, neighbors: impl Iterator<Item = u32>) -> LocalStats {
        let mut buf = [0u32; MAX_VERTICES];
        buf[0] = center;
        let mut len = 1;
        for c in neighbors {
            buf[len] = c;
            len += 1;
        }
        let vals = &mut buf[..len];
        vals.sort_unstable();
        let mut stats = LocalStats {
            distinct: 0,
            singletons: 0,
            has_odd: false,
            max_multiplicity: 0,
            center_multiplicity: 0,
        };
        for run in vals.chunk_by(|a, b| a == b) {
            let m = run.len() as u32;
            stats.distinct += 1;
            stats.singletons += u32::from(m == 1);
            stats.has_odd |= m % 2 == 1;
            stats.max_multiplicity = stats.max_multiplicity.max(m);
            if run[0] == center {
                stats.center_multiplicity = m;
            }
        }
        stats
    }

    /// The per-vertex condition of `scheme`. For star colorings this is only
    /// the properness half; the four-vertex paths are checked separately.
    pub fn satisfies(&self, scheme: Scheme) -> bool {
        match scheme {
            Scheme::Proper | Scheme::StarColoring => self.center_multiplicity == 1,
            Scheme::ConflictFree => self.singletons >= 1,
            Scheme::Odd => self.has_odd,
            Scheme::StarRainbow => self.max_multiplicity == 1,
            Scheme::NonMonochromatic => self.distinct >= 2,
            Scheme::KStrongConflictFree(k) => self.singletons >= k,
            Scheme::XHomLooped => self.center_multiplicity >= 2,
        }
    }
}

/// Whether a path `a - b - c - d` is colored with only two colors.
/// Assumes the coloring is proper along the path.
#[inline]
pub(crate) fn two_colored_p4(a: u32, b: u32, c: u32, d: u32) -> bool {
    a == c && b == d
}

/// Every path on four vertices as `[u', u, v, v']`, one orientation per path:
/// each edge `(u, v)` with `u < v` serves as the middle edge.
pub fn four_vertex_paths(t: &Tree) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for &(u, v) in t.edges() {
        for &a in t.neighbors(u).iter().filter(|&&a| a != v) {
            for &d in t.neighbors(v).iter().filter(|&&d| d != u) {
                out.push([a, u, v, d]);
            }
        }
    }
    out
}

/// Whether `c` is a valid coloring of `t` under `scheme`.
///
/// Panics if the coloring length differs from the tree's vertex count.
pub fn is_valid(t: &Tree, c: &Coloring, scheme: Scheme) -> bool {
    assert_eq!(c.len(), t.n(), "coloring length must match the tree");
    let locally_ok = (0..t.n())
        .all(|v| LocalStats::collect(c.color(v), t.neighbors(v).iter().map(|&w| c.color(w))).satisfies(scheme));
    if !locally_ok {
        return false;
    }
    if scheme == Scheme::StarColoring {
        return four_vertex_paths(t)
            .iter()
            .all(|p| !two_colored_p4(c.color(p[0]), c.color(p[1]), c.color(p[2]), c.color(p[3])));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(colors: &[u32], q: u32) -> Coloring {
        Coloring::new(colors.to_vec(), q).unwrap()
    }

    #[test]
    fn closed_neighborhoods() {
        let p3 = Tree::path(3).unwrap();
        let m = closed_neighborhood_colors(&p3, &col(&[1, 2, 1], 2), 1);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        let s4 = Tree::star(4).unwrap();
        let m = closed_neighborhood_colors(&s4, &col(&[1, 2, 2, 2], 2), 0);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 3)]);
        assert_eq!(m.total(), 4);
        let p1 = Tree::path(1).unwrap();
        let m = closed_neighborhood_colors(&p1, &col(&[3], 3), 0);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(3, 1)]);
    }

    #[test]
    fn predicate_examples() {
        let p4 = Tree::path(4).unwrap();
        assert!(is_valid(&p4, &col(&[1, 2, 2, 1], 2), Scheme::ConflictFree));
        assert!(!is_valid(&p4, &col(&[1, 1, 1, 1], 2), Scheme::ConflictFree));
        assert!(!is_valid(&p4, &col(&[1, 2, 1, 2], 2), Scheme::StarColoring));
        assert!(is_valid(&p4, &col(&[1, 2, 1, 2], 2), Scheme::Proper));
        assert!(is_valid(&p4, &col(&[1, 2, 1, 3], 3), Scheme::StarColoring));

        let s4 = Tree::star(4).unwrap();
        assert!(is_valid(&s4, &col(&[1, 1, 1, 1], 2), Scheme::XHomLooped));
        assert!(!is_valid(&s4, &col(&[1, 1, 1, 2], 2), Scheme::XHomLooped));

        let p3 = Tree::path(3).unwrap();
        assert!(is_valid(&p3, &col(&[1, 2, 3], 3), Scheme::StarRainbow));
        assert!(!is_valid(&p3, &col(&[1, 2, 1], 3), Scheme::StarRainbow));
    }

    #[test]
    fn single_vertex_literal_semantics() {
        let p1 = Tree::path(1).unwrap();
        for q in 1..=3 {
            for color in 1..=q {
                let c = col(&[color], q);
                for s in [
                    Scheme::Proper,
                    Scheme::ConflictFree,
                    Scheme::Odd,
                    Scheme::StarRainbow,
                    Scheme::StarColoring,
                    Scheme::KStrongConflictFree(1),
                ] {
                    assert!(is_valid(&p1, &c, s), "{s}");
                }
                for s in [
                    Scheme::NonMonochromatic,
                    Scheme::KStrongConflictFree(2),
                    Scheme::KStrongConflictFree(3),
                    Scheme::XHomLooped,
                ] {
                    assert!(!is_valid(&p1, &c, s), "{s}");
                }
            }
        }
    }

    #[test]
    fn four_vertex_paths_of_small_trees() {
        assert!(four_vertex_paths(&Tree::star(6).unwrap()).is_empty());
        assert_eq!(four_vertex_paths(&Tree::path(4).unwrap()), vec![[0, 1, 2, 3]]);
        assert_eq!(four_vertex_paths(&Tree::path(6).unwrap()).len(), 3);
        // Balanced double star: 2 x 2 choices of ends around the central edge.
        assert_eq!(four_vertex_paths(&Tree::double_star(2, 2).unwrap()).len(), 4);
    }

    #[test]
    fn scheme_names_round_trip() {
        for s in Scheme::ALL.into_iter().chain([Scheme::KStrongConflictFree(5)]) {
            assert_eq!(s.to_string().parse::<Scheme>().unwrap(), s);
        }
        assert_eq!("kscf:2".parse::<Scheme>().unwrap().slug(), "kscf2");
        assert_eq!("kscf:0".parse::<Scheme>(), Err(SchemeError::BadStrength("0".into())));
        assert_eq!("kscf:x".parse::<Scheme>(), Err(SchemeError::BadStrength("x".into())));
        assert!(matches!(
            "rainbow".parse::<Scheme>(),
            Err(SchemeError::UnknownScheme(_))
        ));
    }

    #[test]
    fn coloring_validation() {
        assert_eq!(Coloring::new(vec![1], 0), Err(SchemeError::ZeroColors));
        assert_eq!(
            Coloring::new(vec![1, 0], 2),
            Err(SchemeError::ColorRange {
                vertex: 1,
                color: 0,
                q: 2
            })
        );
        assert_eq!(
            Coloring::new(vec![3], 2),
            Err(SchemeError::ColorRange {
                vertex: 0,
                color: 3,
                q: 2
            })
        );
        let p3 = Tree::path(3).unwrap();
        assert_eq!(
            Coloring::for_tree(&p3, vec![1, 1], 2),
            Err(SchemeError::Length { expected: 3, found: 2 })
        );
    }
}
