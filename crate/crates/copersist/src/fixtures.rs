//! Built-in corpus of ideals and graphs exercised by the test suites and
//! addressable from the command line by id. Every entry is stored in the
//! text grammar of [`crate::parse`], so the corpus doubles as parser input.

use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::parse::{parse_graph_text, parse_ideal_text};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Ideal,
    Graph,
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub kind: FixtureKind,
    pub text: &'static str,
    pub description: &'static str,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "quartic_xyzt",
        kind: FixtureKind::Ideal,
        text: "ring x,y,z,t; ideal (x^4, y^4*z, x^3*y, x*y^3, x^2*y^2*z*t)",
        description: "copersistent quartic in four variables; t leaves the support of every power past the first, and polarization destroys copersistence",
    },
    Fixture {
        id: "quartic_xyzt_polarized",
        kind: FixtureKind::Ideal,
        text: "ring x_1,x_2,x_3,x_4,y_1,y_2,y_3,y_4,z_1,t_1; ideal (x_1*x_2*x_3*x_4, y_1*y_2*y_3*y_4*z_1, x_1*x_2*x_3*y_1, x_1*y_1*y_2*y_3, x_1*x_2*y_1*y_2*z_1*t_1)",
        description: "polarization of quartic_xyzt; gains the embedded prime (x_1,x_3,y_3,z_1) at the second power",
    },
    Fixture {
        id: "quartic_x1x4",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4; ideal (x1^3*x2, x1*x2^3, x2^4, x1^4*x3, x1^4*x4)",
        description: "loses copersistence at the first step (the maximal ideal enters at power 2) while its polarization is normally torsion-free",
    },
    Fixture {
        id: "quartic_x1x4_polarized",
        kind: FixtureKind::Ideal,
        text: "ring x1_1,x1_2,x1_3,x1_4,x2_1,x2_2,x2_3,x2_4,x3_1,x4_1; ideal (x1_1*x1_2*x1_3*x2_1, x1_1*x2_1*x2_2*x2_3, x2_1*x2_2*x2_3*x2_4, x1_1*x1_2*x1_3*x1_4*x3_1, x1_1*x1_2*x1_3*x1_4*x4_1)",
        description: "squarefree polarization of quartic_x1x4; a bipartite cover ideal extended by a whisker, normally torsion-free with twelve associated primes",
    },
    Fixture {
        id: "deletion_sensitive",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4; ideal (x1*x4, x2^2, x1*x2, x3*x4^2, x3^2*x4, x2*x3*x4, x1*x3^2)",
        description: "normal, copersistent four-variable ideal; deleting x3 leaves (x1*x4, x2^2, x1*x2), which picks up (x1,x2,x4) at power 2",
    },
    Fixture {
        id: "staircase_d2",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3; ideal (x1^4, x1^3*x2, x1*x2^3, x2^4, x1^2*x2^2*x3)",
        description: "staircase with socle term, step d=2: Ass is {(x1,x2),(x1,x2,x3)} below power d and {(x1,x2)} from d on",
    },
    Fixture {
        id: "staircase_d3",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3; ideal (x1^5, x1^4*x2, x1*x2^4, x2^5, x1^3*x2^2*x3)",
        description: "staircase with socle term, step d=3",
    },
    Fixture {
        id: "expansion_demo",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3; ideal (x1*x2^2, x2*x3, x3^3)",
        description: "three-generator ideal for exercising ring expansion with the tuple (3,1,2)",
    },
    Fixture {
        id: "expansion_demo_expanded",
        kind: FixtureKind::Ideal,
        text: "ring x1_1,x1_2,x1_3,x2_1,x3_1,x3_2; ideal (x1_1*x2_1^2, x1_2*x2_1^2, x1_3*x2_1^2, x2_1*x3_1, x2_1*x3_2, x3_1^3, x3_1^2*x3_2, x3_1*x3_2^2, x3_2^3)",
        description: "expansion of expansion_demo by (3,1,2): nine generators over six variables",
    },
    Fixture {
        id: "weighting_demo",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5; ideal (x1^2*x4, x2^4*x4^2*x5, x1*x3^2*x5^3)",
        description: "three-generator ideal for exercising the weight substitution (3,2,2,4,1)",
    },
    Fixture {
        id: "weighting_demo_weighted",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5; ideal (x1^6*x4^4, x2^8*x4^8*x5, x1^3*x3^4*x5^3)",
        description: "weighting_demo after the substitution x1->x1^3, x2->x2^2, x3->x3^2, x4->x4^4, x5->x5",
    },
    Fixture {
        id: "pentagon_cyclic",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5; ideal (x1*x2^2*x3, x2*x3^2*x4, x3*x4^2*x5, x4*x5^2*x1, x5*x1^2*x2)",
        description: "cyclic degree-4 ideal on five variables; the maximal ideal sits in Ass at power 1, leaves at powers 2 and 3, and returns at power 4",
    },
    Fixture {
        id: "pentagon_cyclic_loc4",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4; ideal (x1*x2^2*x3, x2*x3^2*x4, x3*x4^2, x1*x4, x1^2*x2)",
        description: "pentagon_cyclic with x5 set to 1; normal, normally torsion-free, five associated primes",
    },
    Fixture {
        id: "c5_chord_whisker",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5,x6; ideal (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1, x1*x4*x6)",
        description: "edge ideal of C5 plus the cubic x1*x4*x6; normal and nearly copersistent with threshold 1 and augmenting prime (x1..x5)",
    },
    Fixture {
        id: "c5_chord",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5; ideal (x1*x2, x2*x3, x3*x4, x4*x5, x5*x1, x1*x4)",
        description: "edge ideal of C5 with the chord x1-x4 (c5_chord_whisker with x6 set to 1); loses copersistence at the first step",
    },
    Fixture {
        id: "c7_plus_edge",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5,x6,x7,x8,x9; ideal (x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x7, x7*x1, x8*x9)",
        description: "edge ideal of C7 plus a variable-disjoint edge; Ass is constant through power 3 and gains two 8-variable primes at power 4, so no single augmenting prime suffices",
    },
    Fixture {
        id: "depth_jump_6",
        kind: FixtureKind::Ideal,
        text: "ring x1,x2,x3,x4,x5,x6; ideal (x1^6, x1^5*x2, x1*x2^5, x2^6, x1^4*x2^4*x3, x1^4*x2^4*x4, x1^4*x5^2*x6^3, x2^4*x5^3*x6^2)",
        description: "six-variable ideal whose Ass sequence sheds different primes at powers 2 and 3; needs the two augmenting primes (x1,x2,x5,x6) and (x1..x6)",
    },
    Fixture {
        id: "g_c3",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3; edges (x1-x2, x2-x3, x3-x1)",
        description: "triangle; the smallest odd cycle, almost bipartite",
    },
    Fixture {
        id: "g_c4",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4; edges (x1-x2, x2-x3, x3-x4, x4-x1)",
        description: "square; bipartite",
    },
    Fixture {
        id: "g_c5",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4,x5; edges (x1-x2, x2-x3, x3-x4, x4-x5, x5-x1)",
        description: "pentagon; odd cycle, almost bipartite",
    },
    Fixture {
        id: "g_c7",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4,x5,x6,x7; edges (x1-x2, x2-x3, x3-x4, x4-x5, x5-x6, x6-x7, x7-x1)",
        description: "heptagon; odd cycle",
    },
    Fixture {
        id: "g_p3",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3; edges (x1-x2, x2-x3)",
        description: "path on three vertices",
    },
    Fixture {
        id: "g_p4",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4; edges (x1-x2, x2-x3, x3-x4)",
        description: "path on four vertices; bipartite",
    },
    Fixture {
        id: "g_c5_pendant",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4,x5,x6; edges (x1-x2, x2-x3, x3-x4, x4-x5, x5-x1, x1-x6)",
        description: "pentagon with a pendant vertex; connected with exactly one induced odd cycle",
    },
    Fixture {
        id: "g_two_triangles",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4,x5,x6,x7,x8; edges (x1-x2, x2-x3, x1-x3, x3-x4, x4-x5, x5-x6, x6-x7, x7-x8, x6-x8)",
        description: "two triangles joined by a path of length three; two induced odd cycles, so neither bipartite nor almost bipartite",
    },
    Fixture {
        id: "g_two_triangles_near",
        kind: FixtureKind::Graph,
        text: "graph x1,x2,x3,x4,x5,x6,x7; edges (x1-x2, x2-x3, x1-x3, x3-x4, x4-x5, x5-x6, x6-x7, x5-x7)",
        description: "two triangles joined by a path of length two; carries a pair of disjoint chordless odd cycles at distance two, so the third edge-ideal power is not integrally closed",
    },
];

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

pub fn find(id: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.id == id)
}

/// Parses the fixture as an ideal.
pub fn ideal(id: &str) -> Result<MonomialIdeal> {
    let f = find(id).ok_or_else(|| Error::UnknownFixture(id.to_string()))?;
    match f.kind {
        FixtureKind::Ideal => Ok(parse_ideal_text(f.text)?.ideal),
        FixtureKind::Graph => Err(Error::Invalid(format!("fixture {id} is a graph"))),
    }
}

/// Parses the fixture as a graph.
pub fn graph(id: &str) -> Result<SimpleGraph> {
    let f = find(id).ok_or_else(|| Error::UnknownFixture(id.to_string()))?;
    match f.kind {
        FixtureKind::Graph => parse_graph_text(f.text),
        FixtureKind::Ideal => Err(Error::Invalid(format!("fixture {id} is an ideal"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{render_graph, render_ideal};

    #[test]
    fn every_fixture_parses_and_round_trips() {
        for f in all() {
            match f.kind {
                FixtureKind::Ideal => {
                    let e = parse_ideal_text(f.text).unwrap_or_else(|err| {
                        panic!("fixture {} failed to parse: {err}", f.id)
                    });
                    let again = parse_ideal_text(&render_ideal(&e.ideal)).unwrap();
                    assert_eq!(again.ideal, e.ideal, "round trip of {}", f.id);
                    assert!(!e.ideal.is_zero());
                }
                FixtureKind::Graph => {
                    let g = parse_graph_text(f.text).unwrap_or_else(|err| {
                        panic!("fixture {} failed to parse: {err}", f.id)
                    });
                    let again = parse_graph_text(&render_graph(&g)).unwrap();
                    assert_eq!(again, g, "round trip of {}", f.id);
                }
            }
        }
    }

    #[test]
    fn fixture_generators_are_already_minimal() {
        for f in all() {
            if f.kind == FixtureKind::Ideal {
                let e = parse_ideal_text(f.text).unwrap();
                assert!(!e.reduced, "fixture {} lists a non-minimal generator", f.id);
            }
        }
    }

    #[test]
    fn ids_are_unique() {
        for (i, f) in all().iter().enumerate() {
            assert!(
                all()[..i].iter().all(|g| g.id != f.id),
                "duplicate id {}",
                f.id
            );
        }
    }

    #[test]
    fn lookup_by_kind() {
        assert!(ideal("quartic_xyzt").is_ok());
        assert!(graph("g_c5").is_ok());
        assert!(ideal("g_c5").is_err());
        assert!(graph("quartic_xyzt").is_err());
        assert!(matches!(ideal("nope"), Err(Error::UnknownFixture(_))));
    }
}
