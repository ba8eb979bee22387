"""Registry of two-party protocols runnable through :func:`graphcc.comm.run_protocol`.

Both parties run the same generator function; it branches on ``view.role``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..comm import ProtocolOutcome, Transcript, run_protocol
from ..graph import EdgePartition
from ..matching import check_bipartition
from .bipartite import bipartiteness
from .bitmap import euler_trivial, triangle
from .connectivity import connectivity, spanning_forest
from .matching import hopcroft_karp


def _no_params(inst: EdgePartition, params: dict) -> dict:
    if params:
        raise TypeError(f"unexpected protocol parameters {sorted(params)}")
    return {}


def _matching_params(inst: EdgePartition, params: dict) -> dict:
    if set(params) != {"left_set"}:
        raise TypeError("matching-hk takes exactly one parameter, left_set")
    left = check_bipartition(inst.union(), params["left_set"])
    return {"left_set": tuple(sorted(left))}


@dataclass(frozen=True)
class ProtocolSpec:
    party: Callable
    prepare: Callable[[EdgePartition, dict], dict] = _no_params


PROTOCOLS: dict[str, ProtocolSpec] = {
    "connectivity": ProtocolSpec(connectivity),
    "spanning-forest": ProtocolSpec(spanning_forest),
    "bipartite": ProtocolSpec(bipartiteness),
    "matching-hk": ProtocolSpec(hopcroft_karp, _matching_params),
    "euler-trivial": ProtocolSpec(euler_trivial),
    "triangle": ProtocolSpec(triangle),
}


def connectivity_protocol(inst: EdgePartition, seed=0) -> ProtocolOutcome:
    return run_protocol("connectivity", inst, seed)


def spanning_forest_protocol(inst: EdgePartition, seed=0) -> ProtocolOutcome:
    return run_protocol("spanning-forest", inst, seed)


def bipartiteness_protocol(inst: EdgePartition, seed=0) -> ProtocolOutcome:
    return run_protocol("bipartite", inst, seed)


def matching_hk_protocol(inst: EdgePartition, left_set, seed=0) -> ProtocolOutcome:
    return run_protocol("matching-hk", inst, seed, left_set=left_set)


def euler_trivial_protocol(inst: EdgePartition, seed=0) -> ProtocolOutcome:
    return run_protocol("euler-trivial", inst, seed)


def triangle_protocol(inst: EdgePartition, seed=0) -> ProtocolOutcome:
    return run_protocol("triangle", inst, seed)


def hk_phase_count(t: Transcript) -> int:
    """Phases of a matching-hk run, the final search that finds nothing included."""
    return sum(1 for m in t.messages if m.label == "end-phase") + 1


def discovery_announcements(t: Transcript) -> list[dict[str, list[int]]]:
    """Vertex ids announced as discoveries, grouped per phase and per search kind.

    Labels ``bfs``/``forward``/``color``/``discover`` mark discovery messages;
    the vertex id follows a 1-bit continue flag or a 2-bit opcode. A run
    without ``end-phase`` markers is a single phase.
    """
    offsets = {"bfs": 1, "color": 1, "discover": 1, "forward": 2}
    phases: list[dict[str, list[int]]] = [{}]
    for m in t.messages:
        if m.label == "end-phase":
            phases.append({})
        elif m.label in offsets:
            k = offsets[m.label]
            width = {"color": len(m.payload) - 2, "discover": (len(m.payload) - 1) // 2}.get(
                m.label, len(m.payload) - k)
            vid = int(m.payload[k:k + width], 2) if width else 0
            phases[-1].setdefault(m.label, []).append(vid)
    return phases


__all__ = [
    "PROTOCOLS", "ProtocolSpec", "connectivity_protocol", "spanning_forest_protocol",
    "bipartiteness_protocol", "matching_hk_protocol", "euler_trivial_protocol",
    "triangle_protocol", "hk_phase_count", "discovery_announcements",
]
