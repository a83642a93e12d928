"""Finite groups, fusion systems, partial groups and localities, with an
executable verification suite over a corpus of small concrete groups.

The five public layers:

* :mod:`plocal.groups` - permutation groups, subgroup lattices, Sylow
  subgroups, automorphism groups, subnormality, group K-normalizers;
* :mod:`plocal.fusion` - fusion systems as explicit categories, saturation,
  K-normalizer subsystems, centric/subcentric sets, p-power index,
  normal subsystems;
* :mod:`plocal.locality` - group-backed partial groups and localities,
  restriction, the restricted K-normalizers, partial normal subgroups,
  product subsystems;
* :mod:`plocal.verify` - one checker per verified statement and the suite
  driver;
* :mod:`plocal.cli` - corpus parsing, caching and the command-line front
  end (console script ``plocal``).
"""

from .errors import PLocalError
from .perm import Perm, perm_from_cycles
from .groups import (
    AutGroup,
    FiniteGroup,
    GroupInjection,
    Subgroup,
    all_subgroups,
    aut_group,
    centralizer,
    core_Op,
    generate_group,
    group_K_normalizer,
    inn_group,
    is_characteristic_p,
    is_subnormal,
    normalizer,
    subnormal_chain,
    sylow_subgroup,
)
from .fusion import (
    FusionSystem,
    K_normalizer_subsystem,
    centralizer_subsystem,
    centric_set,
    close_generated,
    fusion_of_group,
    has_p_power_index,
    hyperfocal_subgroup,
    is_fully_K_normalized,
    is_normal_subsystem,
    is_saturated,
    is_strongly_closed,
    is_weakly_normal,
    normalizer_subsystem,
    subcentric_set,
)
from .locality import (
    Locality,
    PartialGroup,
    PartialSubgroup,
    S_f,
    S_w,
    bC,
    bN,
    bN_K,
    build_group_locality,
    find_normal_for,
    fusion_of_partial,
    is_partial_normal,
    K_normalizer_partial,
    product_fusion,
    product_partial,
    restrict,
    verify_locality,
    verify_partial_group,
    verify_subcentric_locality,
)
from .report import VerificationReport

__version__ = "0.1.0"
