"""Exact commutativity and n-th nilpotency degrees of finite groups."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .families import (  # noqa: F401
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    from_permutation_generators,
    heisenberg,
    symmetric,
)
from .group import (  # noqa: F401
    FiniteGroup,
    QuotientGroup,
    Subgroup,
    center,
    centralizer,
    commutator,
    from_cayley_table,
    intersection,
    is_normal,
    iterated_commutator,
    n_fold_commutator_subgroup,
    nilpotency_class,
    quotient,
    structure_probe,
    subgroup_generated,
    upper_central_series,
)
from .kernels import BACKEND  # noqa: F401
from .measure import (  # noqa: F401
    DegreeValue,
    Method,
    commutator_distribution,
    degree,
    haar_measure_of_subgroup,
    relative_degree_bruteforce,
    relative_degree_centralizer,
    relative_degree_dp,
)
