"""Finite inverse symmetric semigroups, partial wreath products, and their
R- and L-cross-sections."""
from .isn import (
    PartialBijection,
    chain,
    chain_decompose,
    compose,
    cycle,
    enumerate_is,
    green_H,
    green_L,
    green_R,
    identity,
    idempotents,
    inverse,
    make,
    natural_order,
    open_chain,
    parse_element,
    zero,
)
from .wreath import (
    WreathElement,
    act_super,
    enumerate_wreath,
    w_compose,
    w_green_L,
    w_green_R,
    w_identity,
    w_inverse,
    w_zero,
)
from .cross_sections import (
    CrossSection,
    OrderedPartition,
    build_l_cross_section,
    build_r_cross_section,
    build_wreath_l_cross_section,
    build_wreath_r_cross_section,
    parse_partition,
    type_vector,
    validate_cross_section,
)
from .structure import (
    Conjugator,
    conjugator_isn,
    conjugator_wreath,
    count_N_e,
    find_isomorphisms,
    recover_partition,
)
from .counting import count_noniso_wreath, partition_count

__version__ = "0.1.0"
