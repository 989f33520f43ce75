"""Z2^n gradings of the classical Lie algebras, computed exactly from Clifford algebras."""
from .blocks import BlockGrading, block_grade_of_entry, verify_block_grading
from .classification import (
    ClassificationRow,
    rep_R2,
    table1,
    verify_named_dimension,
    verify_symplectic_iso,
)
from .clifford import (
    AdjointSpec,
    CapacityError,
    CliffordElement,
    CliffordError,
    Signature,
    adjoint,
    blade,
    blade_mul,
    classify_clifford,
    conjugation,
    element_mul,
    format_element,
    grade_of,
    parse_element,
    reversion,
    tensor_product,
)
from .higher import (
    HigherPresentation,
    IsomorphismMap,
    lemma1_embed,
    prop2,
    table2_adjoint_map,
    verify_higher_presentation,
)
from .lie import (
    ClosureError,
    GradingGroup,
    LieAlgebraBasis,
    StructureConstants,
    aut_basis,
    aut_basis_oracle,
    blade_adjoint_sign,
    effective_grading,
    structure_constants,
)
from .matrix import GradedMatrix, MetricSignature, bracket, grade_components, matrix_adjoint, reassemble
from .report import Certificate

__version__ = "0.1.0"
