import logging
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from kellyminors.exceptions import DomainError, InternalInvariantError
from kellyminors.minor import WitnessScript

from ._context import common_in_neighbors, common_out_neighbors
from ._workspace import CaseFailed, Workspace

logger = logging.getLogger(__name__)

_Candidate = Tuple[int, int, int, int]


def _blocker(ws: Workspace, u: int, v: int, hidden: FrozenSet[int] = frozenset()) -> int:
    g = ws.graph
    if not g.has_arc(u, v) or g.has_arc(v, u):
        raise CaseFailed(f"({u}, {v}) is not a one-way arc")
    found = common_in_neighbors(g, u, v) - hidden
    if not found:
        raise CaseFailed(f"arc ({u}, {v}) has no blocker")
    return min(found)


def _other_out(ws: Workspace, v: int, known: int) -> int:
    outs = ws.graph.out_neighbors(v)
    if len(outs) != 2 or known not in outs:
        raise CaseFailed(f"vertex {v} does not have out-neighbours {{{known}, *}}")
    (other,) = outs - {known}
    return other


def _path_or_none(ws: Workspace, source: int, targets: Iterable[int], forbidden) -> Optional[List[int]]:
    try:
        return ws.path(source, targets, forbidden)
    except CaseFailed:
        return None


def strict(case: str, handler: Callable[[], WitnessScript]) -> WitnessScript:
    try:
        return handler()
    except (CaseFailed, DomainError) as exc:
        raise InternalInvariantError(f"case {case} did not produce a witness", exc) from exc


def back_arc_case(
    ws: Workspace,
    w: int,
    u: int,
    v: int,
    via: Optional[Sequence[int]] = None,
    path: Optional[Sequence[int]] = None,
) -> WitnessScript:
    """
    Handles w -> u, w -> v, u -> w with {u, v} bidirected and no arc
    v -> w.

    With `via` the arc u -> w is still a path: it starts at an out-neighbour
    of u, ends at w and avoids u and v. Its inner vertices are left alone
    and it is contracted into w right before the witness is certified.
    `path` replaces the search from the other out-neighbour of v.

    Raises:
        CaseFailed: The live graph does not follow the expected shape.
    """

    g = ws.graph
    hidden = frozenset(via[:-1]) if via else frozenset()
    if via:
        back = via[-1] == w and g.has_arc(u, via[0]) and not hidden & {u, v, w}
    else:
        back = g.has_arc(u, w)
    if not (g.has_arc(w, u) and g.has_arc(w, v) and back and g.is_bidirected(u, v)):
        raise CaseFailed("back-arc case needs w->u, w->v, u->w and u<->v")
    if g.has_arc(v, w):
        raise CaseFailed("back-arc case needs v -/-> w")

    def certify(keep: Iterable[int], target: str) -> WitnessScript:
        if via:
            ws.collapse(via)
        return ws.certify(keep, target)

    a = _other_out(ws, v, u)
    if path is None:
        path = ws.path(a, {u, v, w}, hidden)
    elif path[0] != a or path[-1] not in (u, v, w) or hidden & set(path):
        raise CaseFailed(f"path {list(path)} does not lead from {a} back to {{{u}, {v}, {w}}}")
    end = path[-1]
    avoid = {u, v, w} | hidden

    if end == w:
        logger.debug("path from %d reaches %d: K3 on %s", a, w, (u, v, w))
        ws.collapse(path)
        return certify({u, v, w}, "k3")

    if end == u:
        if ws.graph.has_arc(a, v):
            logger.debug("path from %d reaches %d with %d<->%d: N4", a, u, a, v)
            ws.shorten(path)
            return certify({u, v, w, a}, "n4")
        b = _blocker(ws, v, a, hidden)
        p_ab = ws.path(a, {b}, avoid)
        logger.debug("path from %d reaches %d, %d blocks (%d, %d): N4 by forking", a, u, b, v, a)
        x = ws.fork(p_ab, path)
        ws.out_contract(b, v)
        return certify({u, v, w, x}, "n4")

    if ws.graph.has_arc(a, v):
        below = common_in_neighbors(ws.graph, a, v) - {u, w} - hidden
        if below:
            b = min(below)
            logger.debug("%d<->%d with common in-neighbour %d: M5", a, v, b)
            ws.shorten(ws.path(a, {b}, avoid))
            return certify({u, v, w, a, b}, "m5")
        if u in common_out_neighbors(ws.graph, a, v):
            logger.debug("%d<->%d with common out-neighbour %d: N4", a, v, u)
            return certify({u, v, w, a}, "n4")
        raise CaseFailed(f"bidirected {{{a}, {v}}} has no common neighbour")

    b = _blocker(ws, v, a, hidden)
    c = _blocker(ws, b, v, hidden)

    if ws.graph.has_arc(a, b):
        p_ac = ws.path(a, {c}, avoid)
        if b not in p_ac:
            logger.debug("%d blocks (%d, %d), %d blocks (%d, %d), a->b: M5 through %d", b, v, a, c, b, v, c)
            ws.shorten(p_ac)
            ws.out_contract(c, v)
            return certify({u, v, w, a, b}, "m5")
        ws.shorten(p_ac[p_ac.index(b):])
        ws.out_contract(a, b)
        return certify({u, v, w, b, c}, "m5")

    d = _blocker(ws, b, a, hidden)
    p_ad = ws.path(a, {d}, avoid | {b, c})
    p_ac = ws.path(a, {c}, avoid | {b, d})
    logger.debug("%d blocks (%d, %d), %d blocks (%d, %d): M5 by forking", c, b, v, d, b, a)
    x = ws.fork(p_ad, p_ac)
    ws.out_contract(c, v)
    ws.out_contract(d, b)
    return certify({u, v, w, x, b}, "m5")


def common_in_case(ws: Workspace, w: int, u: int, v: int) -> WitnessScript:
    """Handles w -> u, w -> v with {u, v} bidirected and no arc back to w."""
    return strict("common in-neighbour", lambda: _common_in(ws, w, u, v))


def _common_in(ws: Workspace, w: int, u: int, v: int) -> WitnessScript:
    g = ws.graph
    if not (g.has_arc(w, u) and g.has_arc(w, v) and g.is_bidirected(u, v)):
        raise CaseFailed("common in-neighbour case needs w->u, w->v and u<->v")
    if g.has_arc(u, w) or g.has_arc(v, w):
        raise CaseFailed("common in-neighbour case needs no arc back to w")

    a = _other_out(ws, v, u)
    b = _other_out(ws, u, v)
    if a == b:
        logger.debug("u and v share out-neighbour %d: K3", a)
        ws.collapse(ws.path(a, {w}, {u, v}))
        return ws.certify({u, v, w}, "k3")

    p_aw = _path_or_none(ws, a, {w}, {u, v})
    p_bw = _path_or_none(ws, b, {w}, {u, v})
    if p_aw is not None and p_bw is not None:
        return _two_paths(ws, w, u, v, p_aw, p_bw)
    if p_aw is None:
        if p_bw is None:
            raise CaseFailed("no path to the common in-neighbour avoids the bidirected edge")
        u, v, a, b, p_aw = v, u, b, a, p_bw

    # Every path from b reaches {u, v} before it can touch p_aw.
    hidden = set(p_aw[:-1])
    path = _path_or_none(ws, b, {v}, {u, w} | hidden)
    if path is None:
        path = ws.path(b, {u}, {v, w} | hidden)
    logger.debug("only %d reaches %d freely; %d reaches %d: back-arc construction", a, w, b, path[-1])
    return back_arc_case(ws, w, v, u, via=p_aw, path=path)


def _two_paths(ws: Workspace, w: int, u: int, v: int, p_aw: List[int], p_bw: List[int]) -> WitnessScript:
    on_a = set(p_aw)
    j = next(i for i, p in enumerate(p_bw) if p in on_a)
    x = p_bw[j]
    i = p_aw.index(x)
    logger.debug("two paths to %d meet at %d: K3", w, x)
    ws.collapse(p_aw[: i + 1])
    ws.collapse(p_bw[: j + 1])
    if x != w:
        ws.collapse(p_aw[i:])
    return ws.certify({u, v, w}, "k3")


def common_out_case(ws: Workspace, w: int, u: int, v: int) -> WitnessScript:
    """
    Handles u -> w, v -> w with {u, v} bidirected when no bidirected edge
    has a common in-neighbour. Then `w` blocks an arc between its own two
    out-neighbours.
    """

    g = ws.graph
    outs = sorted(g.out_neighbors(w))
    blocked = [(x, y) for x in outs for y in outs if x != y and g.has_arc(x, y) and not g.has_arc(y, x)]
    if len(outs) != 2 or not blocked:
        raise InternalInvariantError("common out-neighbour blocks no arc", f"w={w} outs={outs}")
    a, b = blocked[0]
    if not g.has_arc(a, w):
        raise InternalInvariantError(
            "blocked arc leaves a one-way out-neighbour", f"w={w} a={a} b={b}"
        )

    def run() -> WitnessScript:
        nonlocal u, v
        path = ws.path(b, {u, v}, {w, a})
        if path[-1] == u:
            u, v = v, u
        logger.debug("%d blocks (%d, %d); path from %d reaches %d: N4", w, a, b, b, v)
        ws.collapse(path)
        return ws.certify({u, v, w, a}, "n4")

    return strict("common out-neighbour", run)


def candidates(ws: Workspace) -> List[_Candidate]:
    """
    ``(rank, u, v, w)`` for every bidirected edge {u, v} and every common
    neighbour w: 1 when w is joined both ways, 2 when w is a common
    in-neighbour with one arc back, 3 with none, 4 for a common
    out-neighbour only.
    """

    g = ws.graph
    found = []
    for u, v in g.bidirected_pairs():
        ins = common_in_neighbors(g, u, v)
        outs = common_out_neighbors(g, u, v)
        for w in sorted(ins | outs):
            if w in ins and w in outs:
                rank = 1
            elif w in ins:
                rank = 2 if g.has_arc(u, w) or g.has_arc(v, w) else 3
            else:
                rank = 4
            found.append((rank, u, v, w))
    return sorted(found)


def dispatch(ws: Workspace) -> WitnessScript:
    found = candidates(ws)
    if not found:
        raise InternalInvariantError("no bidirected edge has a common neighbour")
    rank, u, v, w = found[0]
    logger.debug("dispatch rank=%d u=%d v=%d w=%d on n=%d", rank, u, v, w, ws.graph.order)

    if rank == 1:
        return strict("triangle", lambda: ws.certify({u, v, w}, "k3"))
    if rank == 2:
        if not ws.graph.has_arc(u, w):
            u, v = v, u
        return strict("back arc", lambda: back_arc_case(ws, w, u, v))
    if rank == 3:
        return common_in_case(ws, w, u, v)
    return common_out_case(ws, w, u, v)
