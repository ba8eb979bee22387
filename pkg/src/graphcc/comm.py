"""Two-party lockstep runtime with bit-exact transcript accounting.

A party is a generator function ``party(view)``. It yields :class:`Send`
to put bits on the wire and :class:`Recv` to read a fixed number of bits
from what the other side has sent; its return value is its output.
The runtime gives the floor to Alice first and keeps running the floor
holder until it blocks on a read that cannot be satisfied, then hands the
floor over. Parties share nothing except ``n_vertices``, the protocol
parameters and the bits on the wire.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Generator, Iterable

from .graph import Edge, EdgePartition, Graph, norm_edge


class Role(enum.Enum):
    ALICE = "A"
    BOB = "B"

    @property
    def other(self) -> "Role":
        return Role.BOB if self is Role.ALICE else Role.ALICE


ALICE, BOB = Role.ALICE, Role.BOB


class ProtocolViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class Send:
    bits: str
    label: str | None = None


@dataclass(frozen=True)
class Recv:
    width: int


@dataclass(frozen=True)
class Message:
    sender: Role
    payload: str
    # analysis tag for transcript post-processing; never delivered to the receiver
    label: str | None = None

    def __len__(self) -> int:
        return len(self.payload)

    def hex(self) -> str:
        return format(int(self.payload, 2), f"0{(len(self.payload) + 3) // 4}x")


@dataclass
class Transcript:
    messages: list[Message] = field(default_factory=list)

    @property
    def total_bits(self) -> int:
        return sum(len(m) for m in self.messages)

    @property
    def rounds(self) -> int:
        return sum(1 for i, m in enumerate(self.messages) if i == 0 or self.messages[i - 1].sender != m.sender)

    def bits_from(self, role: Role) -> str:
        return "".join(m.payload for m in self.messages if m.sender is role)

    def dump_lines(self) -> list[str]:
        return [f"{i} {m.sender.value} {len(m)} {m.hex()}" for i, m in enumerate(self.messages)]


def transcript_cost(t: Transcript) -> tuple[int, int]:
    return t.total_bits, t.rounds


@dataclass(frozen=True)
class PartyView:
    """Everything one party may look at: its own edges, the shared
    parameters, and its private coins."""

    role: Role
    n_vertices: int
    edges: frozenset[Edge]
    seed: int | str = 0
    params: dict = field(default_factory=dict)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        return Graph(self.n_vertices, self.edges).adjacency

    @cached_property
    def rng(self) -> random.Random:
        return random.Random(f"{self.seed}/{self.role.value}")


@dataclass
class ProtocolOutcome:
    output: Any
    transcript: Transcript
    alice_output: Any
    bob_output: Any

    @property
    def bits(self) -> int:
        return self.transcript.total_bits

    @property
    def rounds(self) -> int:
        return self.transcript.rounds

    def summary(self) -> str:
        return f"bits={self.bits} rounds={self.rounds} output={format_output(self.output)}"


def format_output(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


PartyFn = Callable[[PartyView], Generator[Any, Any, Any]]


class _Runner:
    def __init__(self, role: Role, gen):
        self.role = role
        self.gen = gen
        self.inbox = ""
        self.pending: Any = None
        self.done = False
        self.result: Any = None

    def step(self, value=None):
        try:
            self.pending = self.gen.send(value)
        except StopIteration as stop:
            self.done = True
            self.result = stop.value
            self.pending = None


def run_parties(alice: PartyFn, bob: PartyFn, alice_view: PartyView, bob_view: PartyView) -> ProtocolOutcome:
    transcript = Transcript()
    runners = {ALICE: _Runner(ALICE, alice(alice_view)), BOB: _Runner(BOB, bob(bob_view))}
    for r in runners.values():
        r.step(None)
    floor = ALICE
    while True:
        me, peer = runners[floor], runners[floor.other]
        while not me.done:
            req = me.pending
            if isinstance(req, Send):
                bits = req.bits
                if not bits or set(bits) - {"0", "1"}:
                    raise ProtocolViolation(f"{me.role.name} sent malformed payload {bits!r}")
                if me.inbox:
                    raise ProtocolViolation(
                        f"{me.role.name} sent out of turn with {len(me.inbox)} unread bits")
                if not transcript.messages and me.role is not ALICE:
                    raise ProtocolViolation("Alice must speak first")
                transcript.messages.append(Message(me.role, bits, req.label))
                peer.inbox += bits
                me.step(None)
            elif isinstance(req, Recv):
                if req.width < 1:
                    raise ProtocolViolation(f"{me.role.name} requested a {req.width}-bit field")
                if len(me.inbox) < req.width:
                    break
                data, me.inbox = me.inbox[:req.width], me.inbox[req.width:]
                me.step(data)
            else:
                raise ProtocolViolation(f"{me.role.name} yielded {req!r}")
        if me.done and peer.done:
            break
        peer_blocked = isinstance(peer.pending, Recv) and len(peer.inbox) < peer.pending.width
        if me.done and peer_blocked:
            raise ProtocolViolation(f"{peer.role.name} waits for bits after {me.role.name} halted")
        if peer_blocked:
            raise ProtocolViolation("deadlock: both parties wait for bits")
        floor = floor.other
    for r in runners.values():
        if r.inbox:
            raise ProtocolViolation(f"{r.role.name} halted with {len(r.inbox)} unread bits")
    a, b = runners[ALICE].result, runners[BOB].result
    if a != b:
        raise ProtocolViolation(f"parties disagree: Alice={a!r} Bob={b!r}")
    return ProtocolOutcome(a, transcript, a, b)


def run_protocol(protocol: str, inst: EdgePartition, seed: int | str = 0, **params) -> ProtocolOutcome:
    """Run a registered protocol on an edge partition; deterministic given ``seed``."""
    from .protocols import PROTOCOLS

    try:
        entry = PROTOCOLS[protocol]
    except KeyError:
        raise ValueError(f"unknown protocol {protocol!r}; choose from {sorted(PROTOCOLS)}") from None
    params = entry.prepare(inst, params)
    views = [PartyView(role, inst.n_vertices, edges, seed, dict(params))
             for role, edges in ((ALICE, inst.edges_a), (BOB, inst.edges_b))]
    return run_parties(entry.party, entry.party, *views)


# -- wire helpers -------------------------------------------------------------

def vertex_width(n: int) -> int:
    """ceil(log2 n) bits, the field width for a vertex id in [0, n)."""
    return max(0, math.ceil(math.log2(n))) if n > 1 else 0


def enc(value: int, width: int) -> str:
    if value < 0 or value >= 1 << width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def dec(bits: str) -> int:
    return int(bits, 2) if bits else 0


def recv_uint(width: int):
    if width == 0:
        return 0
    return dec((yield Recv(width)))


# -- instance generation ------------------------------------------------------

SPLIT_MODES = ("random", "interleave", "all_alice", "file")


def split_edges(g: Graph, mode: str = "random", seed: int | str = 0, path=None) -> EdgePartition:
    """Distribute the edges of ``g`` between the parties.

    ``random`` flips an independent seeded coin per edge in canonical order;
    ``interleave`` alternates A, B, A, ... over the sorted edges; ``file``
    reads a partition file and checks it covers exactly ``E(g)``.
    """
    edges = g.sorted_edges()
    if mode == "all_alice":
        return EdgePartition(g.n_vertices, frozenset(edges), frozenset(), disjoint=True)
    if mode == "interleave":
        return EdgePartition(g.n_vertices, frozenset(edges[0::2]), frozenset(edges[1::2]), disjoint=True)
    if mode == "random":
        rng = random.Random(f"split/{seed}")
        a, b = [], []
        for e in edges:
            (a if rng.random() < 0.5 else b).append(e)
        return EdgePartition(g.n_vertices, frozenset(a), frozenset(b), disjoint=True)
    if mode == "file":
        from .io import read_partition

        if path is None:
            raise ValueError("file split mode needs a partition path")
        part = read_partition(path)
        if part.n_vertices != g.n_vertices or part.union().edges != g.edges:
            raise ValueError(f"partition file {path} does not cover the graph's edge set")
        return part
    raise ValueError(f"unknown split mode {mode!r}; choose from {SPLIT_MODES}")


def overlapping_split(g: Graph, seed: int | str = 0, p_both: float = 0.2) -> EdgePartition:
    """Random split where each edge is held by both parties with probability ``p_both``."""
    rng = random.Random(f"overlap/{seed}")
    a, b = [], []
    for e in g.sorted_edges():
        r = rng.random()
        if r < p_both:
            a.append(e)
            b.append(e)
        elif r < (1 + p_both) / 2:
            a.append(e)
        else:
            b.append(e)
    return EdgePartition(g.n_vertices, frozenset(a), frozenset(b))


def edges_of(pairs: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    return frozenset(norm_edge(u, v) for u, v in pairs)
