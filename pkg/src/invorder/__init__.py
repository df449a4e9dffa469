"""Group-invariant linear extensions of orders.

Finite instances use permutation actions (:mod:`invorder.action`,
:mod:`invorder.extension`); translation-invariant orders on Z^k use exact
cone certificates (:mod:`invorder.lattice`).
"""

from .action import (
    EquivalenceClasses,
    GroupElem,
    PermAction,
    Permutation,
    condition_no_finite_orbits,
    cyclic_action,
    element_orbit,
    generate_group,
    orbits,
    powerset_action,
    quotient_action,
    sim_g,
    trivial_action,
)
from .errors import (
    CapExceeded,
    InadmissiblePair,
    InputError,
    InvorderError,
    MathematicalFailure,
    NonAbelianError,
    NotPointedError,
    NotSeparable,
    OrbitConditionError,
)
from .extension import (
    extend_step,
    intersection_of_invariant_extensions,
    invariant_linear_extension,
    invariant_linear_preorder_extension,
    is_strongly_invariant,
    leq_g,
    powerset_preorder,
)
from .kernels import BACKEND
from .lattice import (
    ConeOrder,
    WeightOrder,
    cone_member,
    gordan_certificate,
    monoid_member_bounded,
    separating_extension,
    weight_compare,
    weight_extension,
)
from .relations import (
    Relation,
    RelationClass,
    Universe,
    chain_summary,
    classify,
    enumerate_linear_extensions,
    is_invariant,
    strict_part,
    to_dot,
    topo_linear_extension,
    transitive_closure,
)

__all__ = [
    "BACKEND",
    "CapExceeded",
    "chain_summary",
    "classify",
    "condition_no_finite_orbits",
    "cone_member",
    "ConeOrder",
    "cyclic_action",
    "element_orbit",
    "enumerate_linear_extensions",
    "EquivalenceClasses",
    "extend_step",
    "generate_group",
    "gordan_certificate",
    "GroupElem",
    "InadmissiblePair",
    "InputError",
    "intersection_of_invariant_extensions",
    "invariant_linear_extension",
    "invariant_linear_preorder_extension",
    "InvorderError",
    "is_invariant",
    "is_strongly_invariant",
    "leq_g",
    "MathematicalFailure",
    "monoid_member_bounded",
    "NonAbelianError",
    "NotPointedError",
    "NotSeparable",
    "OrbitConditionError",
    "orbits",
    "PermAction",
    "Permutation",
    "powerset_action",
    "powerset_preorder",
    "quotient_action",
    "Relation",
    "RelationClass",
    "separating_extension",
    "sim_g",
    "strict_part",
    "to_dot",
    "topo_linear_extension",
    "transitive_closure",
    "trivial_action",
    "Universe",
    "weight_compare",
    "weight_extension",
    "WeightOrder",
]

__version__ = "0.1.0"
