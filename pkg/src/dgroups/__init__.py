"""Deficient conjugacy classes in finite permutation groups.

The engine enumerates every element of a permutation group, computes which
non-trivial classes are deficient (cyclic subgroup strictly inside the
centralizer), and matches defect-0 and defect-1 groups against their
complete list of structural forms.
"""
__version__ = "0.1.0"

from .perm import Permutation, PermutationError, compose, element_order, inverse, parse_cycles
from .group import (
    LIMITS,
    CapExceeded,
    ConjugacyClass,
    Group,
    GroupError,
    all_subgroups,
    center,
    centralizer,
    conjugacy_classes,
    cyclic_subgroup,
    derived_subgroup,
    element_order_profile,
    frobenius_structure,
    generate,
    is_isomorphic,
    is_nilpotent,
    is_simple,
    is_solvable,
    normal_subgroups,
    sylow_subgroup,
)
from .deficiency import (
    DeficiencyReport,
    PreconditionError,
    check_prop_A1,
    check_prop_A2,
    check_theorem_GH,
    check_theorem_N,
    defect,
    is_deficient,
)
from .classify import ClassificationInconsistency, ClassificationVerdict, classify, recognize_only
from . import families
