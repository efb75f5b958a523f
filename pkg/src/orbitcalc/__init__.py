"""Nilpotent orbits of classical Lie algebras: closure order, Kraft-Procesi
degenerations, induction, and Q-factorial terminalizations with their flops."""

__version__ = "0.1.0"

from .catalog import (  # noqa: E402
    Algebra,
    NilpotentOrbit,
    enumerate_orbits,
    jm_flag_type,
    jm_picard_number,
    make_orbit,
    orbit_dimension,
    parse_algebra,
    weighted_dynkin,
)
from .degenerations import (  # noqa: E402
    classify_irreducible,
    closure_poset,
    degeneration_codim,
    kp_reduce,
    minimal_degenerations,
    singular_locus_codim,
)
from .errors import InvalidInput, InvariantViolation  # noqa: E402
from .induction import (  # noqa: E402
    available_peels,
    induce,
    induced_orbit_set,
    is_rigid,
    peel,
    peel_another_type,
)
from .partitions import (  # noqa: E402
    Epsilon,
    Partition,
    collapse,
    dominates,
    enumerate_admissible,
    has_full_members,
    is_admissible,
    is_very_even,
    parse_partition,
    transpose,
)
from .terminalization import (  # noqa: E402
    composed_flag_type,
    enumerate_terminalizations,
    flop_graph,
    is_q_factorial_terminal,
    terminalize_one,
    terminalize_type_a,
)
