"""Walk every exceptional root system through the classification pipeline.

    python demos/root_systems.py
"""

from liemech.algebra import (
    build_root_system,
    cartan_matrix,
    classify_diagram,
    diagram_to_text,
    dynkin_diagram,
    root_angles,
    simple_roots,
    verify_root_system,
)


def describe(family, rank):
    rs = build_root_system(family, rank)
    report = verify_root_system(rs)
    base = simple_roots(rs)
    diagram = dynkin_diagram(cartan_matrix(base), base)
    (label,) = classify_diagram(diagram)
    print(f"{family}{rank}: {len(rs)} roots in R^{rs.ambient_dim}, axioms ok={report.ok}")
    print("  angles:", ", ".join(f"{a:g}" for a in root_angles(rs)))
    edges = [ln for ln in diagram_to_text(diagram).splitlines() if not ln.startswith("node")]
    print("  edges:", "; ".join(edges))
    print(f"  classified back as {label[0]}{label[1]}")


if __name__ == "__main__":
    for family, rank in [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]:
        describe(family, rank)
