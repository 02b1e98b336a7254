//! Bundled example graphs.

use crate::graph::Graph;

/// Eleven-vertex graph whose edge ring is Cohen–Macaulay in characteristic 0
/// but not in characteristic 2. Its independence complex is an 11-vertex
/// triangulation of the real projective plane.
pub const FIG1_EDGES: &str = "11 25
1 4
1 5
1 8
1 9
2 5
2 6
2 8
2 10
2 11
3 6
3 7
3 9
3 10
4 7
4 8
4 11
5 9
5 10
5 11
6 8
6 9
6 11
7 10
7 11
9 11
";

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &["fig1"];

/// Edge-list text of a bundled fixture.
pub fn fixture_text(name: &str) -> Option<&'static str> {
    match name {
        "fig1" => Some(FIG1_EDGES),
        _ => None,
    }
}

pub fn fixture(name: &str) -> Option<Graph> {
    fixture_text(name).map(|t| Graph::parse(t).expect("bundled fixtures parse"))
}

pub fn fig1() -> Graph {
    fixture("fig1").unwrap()
}
