use zx_core::text::{from_text, to_text};
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VertexKind};

#[test]
fn round_trip() {
    let mut d = Diagram::new();
    let i = d.add_input(0);
    let z = d.add_vertex_at(VertexKind::Z(Phase::new(3)), 0, 1);
    let x = d.add_vertex(VertexKind::X(Phase::PI));
    let o = d.add_output(0);
    d.add_edge(i, z, EdgeKind::Plain).unwrap();
    d.add_edge(z, x, EdgeKind::Star).unwrap();
    d.add_edge(z, z, EdgeKind::Hadamard).unwrap();
    d.add_edge(z, o, EdgeKind::Hadamard).unwrap();
    d.set_scalar(ExactScalar::new(1, -3, 0, 2, 4));
    let s = to_text(&d);
    let back = from_text(&s).unwrap();
    assert_eq!(to_text(&back), s);
}

#[test]
fn diagnostics_carry_line_numbers() {
    let e = from_text("zxd 1\nV 0 Z 0\nE 0 9 P\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(from_text("zxd 2\n").is_err());
    let e = from_text("zxd 1\nV 0 B 0\nIN 0\n").unwrap_err();
    assert!(e.msg.contains("degree"));
}
