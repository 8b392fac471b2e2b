"""Embed q-ary 1-error-correcting codes and partitions into 1-perfect codes."""

from .components import (
    Coset,
    LinearFunctional,
    SubspaceBasis,
    annihilator,
    check_line_relation,
    check_plane_relation,
    component_basis,
    cosets_disjoint,
    joint_span,
    neighborhood,
    switched_code_member,
)
from .embed import EmbeddingSpec, build_embedding, embedded_contains, enumerate_embedded, shorten
from .gf import FieldSpec, create_field
from .hamming import HammingCode, hamming_code
from .kernels import BACKEND
from .partition import (
    PartitionSpec,
    PartLabel,
    build_partition,
    classify,
    classify_batch,
    enumerate_part,
    part_contains,
    shorten_part,
)
from .projgeom import enumerate_points, line_through, lines_through_point, normalize, plane_through
from .verify import (
    VerificationReport,
    brute_force_weight3,
    is_one_code,
    is_partition,
    is_perfect_exhaustive,
    is_perfect_sampled,
)

__version__ = "0.1.0"
