from ._corpus import KINDS, MANIFEST, GenSpec, generate, instances, read_manifest, write_corpus
from ._enumeration import (
    BURNSIDE_MAX_N,
    ENUMERATION_MAX_N,
    count_isomorphism_classes_burnside,
    enumerate_all,
)
from ._generators import (
    generate_kdag,
    generate_partial_kdag,
    make_rng,
    random_digraph,
    random_min_out_degree_2,
)

__all__ = [
    "BURNSIDE_MAX_N",
    "ENUMERATION_MAX_N",
    "KINDS",
    "MANIFEST",
    "GenSpec",
    "count_isomorphism_classes_burnside",
    "enumerate_all",
    "generate",
    "generate_kdag",
    "generate_partial_kdag",
    "instances",
    "make_rng",
    "random_digraph",
    "random_min_out_degree_2",
    "read_manifest",
    "write_corpus",
]
