"""Signed set partitions of types B and D, their noncrossing and nonnesting
families, and an explicit bijection NN^D(n) -> NC^D(n)."""
from .bijection import (
    IotaCase,
    XiCase,
    f_forward,
    f_inverse,
    in_iota_image,
    iota,
    iota_inverse,
    nc_to_nn_d,
    nn_to_nc_d,
    xi,
    xi_inverse,
)
from .diagrams import (
    NCCase,
    NNKind,
    b_arc_diagram,
    classify_nc_b_minus_d,
    classify_nn_d_minus_b,
    crosses_d,
    d_arc_diagram,
    interleaves,
    is_noncrossing_b,
    is_noncrossing_d,
    is_nonnesting_b,
    is_nonnesting_d,
)
from .enumeration import Family, FamilyIndex, build_index, enumerate_all, family_index, verify_counts
from .errors import *  # noqa: F401,F403
from .partition import (
    SignedPartition,
    StatProfile,
    canonicalize,
    is_d_partition,
    parse,
    render,
    shape,
    stat_profile,
)
from .roots import Antichain, Root, antichain_to_partition, antichains, partition_to_antichain, positive_roots

__version__ = "0.1.0"
