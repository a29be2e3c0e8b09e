import json
import logging
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from kellyminors.digraph import Digraph, write_edge_list
from kellyminors.exceptions import DomainError, FormatError
from kellyminors.utils import ignore_extra_fields

from ._enumeration import enumerate_all
from ._generators import (
    generate_kdag,
    generate_partial_kdag,
    random_digraph,
    random_min_out_degree_2,
)

logger = logging.getLogger(__name__)

KINDS = ("kdag", "partial_kdag", "random_digraph", "out_degree_ge_2", "exhaustive")
MANIFEST = "manifest.json"


@ignore_extra_fields
@dataclass(frozen=True)
class GenSpec:
    """
    Describes one generated instance (or, for ``exhaustive``, one family).

    Attributes:
        kind: One of ``kdag``, ``partial_kdag``, ``random_digraph``,
            ``out_degree_ge_2`` or ``exhaustive``.
        n: Vertex count.
        k: Parameter of the k-DAG kinds.
        seed: 64-bit seed of the PCG64 stream.
        edge_prob: Arc probability of the random kinds; the keep
            probability for ``partial_kdag``.
    """

    kind: str
    n: int
    k: int = 0
    seed: int = 0
    edge_prob: float = 0.5

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError("Unknown generator kind", self.kind)
        if self.n < 0:
            raise DomainError("Vertex count must be non-negative", str(self.n))
        if self.seed < 0:
            raise DomainError("Seed must be non-negative", str(self.seed))
        if not 0.0 <= self.edge_prob <= 1.0:
            raise DomainError("edge_prob must lie in [0, 1]", str(self.edge_prob))

    @property
    def filename(self) -> str:
        return f"{self.kind}_n{self.n}_s{self.seed}.dg"


def generate(spec: GenSpec) -> Digraph:
    """
    Builds the instance `spec` describes. For ``exhaustive`` the seed
    indexes the isomorphism classes in enumeration order.
    """

    if spec.kind == "kdag":
        return generate_kdag(spec.n, spec.k, spec.seed)
    if spec.kind == "partial_kdag":
        return generate_partial_kdag(spec.n, spec.k, spec.seed, spec.edge_prob)
    if spec.kind == "random_digraph":
        return random_digraph(spec.n, spec.edge_prob, spec.seed)
    if spec.kind == "out_degree_ge_2":
        return random_min_out_degree_2(spec.n, spec.seed, spec.edge_prob)
    for index, g in enumerate(enumerate_all(spec.n)):
        if index == spec.seed:
            return g
    raise DomainError("No isomorphism class with that index", f"n={spec.n} seed={spec.seed}")


def instances(spec: GenSpec, count: int) -> Iterator[Tuple[GenSpec, Digraph]]:
    """
    `count` instances with consecutive seeds starting at ``spec.seed``;
    every class when the kind is ``exhaustive``.
    """

    if spec.kind == "exhaustive":
        for index, g in enumerate(enumerate_all(spec.n)):
            yield replace(spec, seed=index), g
        return
    for offset in range(count):
        item = replace(spec, seed=spec.seed + offset)
        yield item, generate(item)


def write_corpus(spec: GenSpec, count: int, directory: Union[str, Path]) -> List[Path]:
    """
    Writes one edge-list file per instance plus a ``manifest.json`` listing
    the `GenSpec` of every file.

    Returns:
        The paths written, manifest last.
    """

    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise FormatError("Cannot create corpus directory", exc) from exc

    written = []
    entries = []
    manifest = directory / MANIFEST
    try:
        for item, g in instances(spec, count):
            written.append(write_edge_list(g, directory / item.filename))
            entries.append({**asdict(item), "file": item.filename})
        manifest.write_text(json.dumps(entries, indent=2, sort_keys=True), encoding="utf-8")
    except OSError as exc:
        raise FormatError("Cannot write corpus", exc) from exc
    written.append(manifest)
    logger.info("wrote %d %s instances to %s", len(entries), spec.kind, directory)
    return written


def read_manifest(directory: Union[str, Path]) -> List[GenSpec]:
    path = Path(directory) / MANIFEST
    try:
        entries = json.loads(path.read_text(encoding="utf-8"))
        return [GenSpec(**entry) for entry in entries]
    except OSError as exc:
        raise FormatError("Cannot read corpus manifest", exc) from exc
    except json.JSONDecodeError as exc:
        raise FormatError("Corpus manifest is not valid JSON", exc, line=exc.lineno) from exc
    except TypeError as exc:
        raise FormatError("Malformed corpus manifest", exc) from exc
