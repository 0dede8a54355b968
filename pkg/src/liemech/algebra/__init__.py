"""Structure-constant Lie algebras, root systems, Cartan matrices and Dynkin diagrams."""

from liemech.algebra.dynkin import (
    CartanMatrix,
    DynkinDiagram,
    Edge,
    cartan_matrix,
    check_admissible,
    classify_diagram,
    classify_root_system,
    diagram_from_text,
    diagram_to_text,
    dynkin_diagram,
    simple_roots,
)
from liemech.algebra.roots import (
    ALLOWED_ANGLES,
    AxiomReport,
    RootSystem,
    build_root_system,
    e8_fixed_roots,
    expected_root_count,
    reflect,
    root_angles,
    verify_root_system,
)
from liemech.algebra.structure import (
    StructureAlgebra,
    abelian_algebra,
    is_semisimple,
    jacobi_defect,
    killing_form,
    killing_matrix,
    se2_algebra,
    se3_algebra,
    sl2_algebra,
    so3_algebra,
)

__all__ = [
    "ALLOWED_ANGLES", "AxiomReport", "CartanMatrix", "DynkinDiagram", "Edge", "RootSystem",
    "StructureAlgebra", "abelian_algebra", "build_root_system", "cartan_matrix", "check_admissible",
    "classify_diagram", "classify_root_system", "diagram_from_text", "diagram_to_text",
    "dynkin_diagram", "e8_fixed_roots", "expected_root_count", "is_semisimple", "jacobi_defect",
    "killing_form", "killing_matrix", "reflect", "root_angles", "se2_algebra", "se3_algebra",
    "simple_roots", "sl2_algebra", "so3_algebra", "verify_root_system",
]
