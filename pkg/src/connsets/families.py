"""Constructors and closed-form counts for the named graph families.

Families are described by a :class:`FamilySpec` (a kind plus integer
parameters) with a compact text syntax for the command line, e.g.
``"L:9"``, ``"dumbbell:3,4,2"``, ``"theta:2,3,4"``.  Construction uses a
fixed vertex numbering per family (hubs first, then cycle and path
interiors in order) so that builds are byte-for-byte reproducible in
graph6 output.

Conventions that pin down the ambiguous corners:

* ``dumbbell(p, q, r)`` joins cycles of p and q vertices through a path
  on r vertices whose endpoints are identified with one vertex of each
  cycle, giving ``p + q + r - 2`` vertices in total.  ``r = 1`` means both
  identifications hit the same vertex, i.e. the two cycles share it.
* ``theta(a, b, c)`` joins two hub vertices by three internally disjoint
  paths of a, b, c vertices counted including both hubs; ``a = 2`` is a
  direct hub-hub edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormatError, ParameterError
from .graphs import Graph

# Kinds with a fixed arity; "E" kinds are zero-parameter named graphs.
_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "tadpole": 1,
    "dumbbell": 3,
    "typeII": 2,
    "theta": 3,
    "A": 1,
    "L": 1,
    "B": 1,
    "R": 1,
    "Q": 1,
}

E_NAMES = ("A4", "E51", "E52", "E61", "E62", "E7", "E8")

_ALIASES = {
    "p": "path",
    "path": "path",
    "c": "cycle",
    "cycle": "cycle",
    "s": "star",
    "star": "star",
    "d": "tadpole",
    "tadpole": "tadpole",
    "dumbbell": "dumbbell",
    "typeii": "typeII",
    "type2": "typeII",
    "theta": "theta",
    "a": "A",
    "l": "L",
    "b": "B",
    "r": "R",
    "q": "Q",
}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of a named family instance."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind in _ARITY:
            if len(self.params) != _ARITY[self.kind]:
                raise ParameterError(
                    f"{self.kind} takes {_ARITY[self.kind]} parameter(s), "
                    f"got {len(self.params)}"
                )
        elif self.kind in E_NAMES:
            if self.params:
                raise ParameterError(f"{self.kind} takes no parameters")
        else:
            raise ParameterError(f"unknown family kind {self.kind!r}")
        _validate(self.kind, self.params)

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def _validate(kind: str, params: tuple[int, ...]) -> None:
    if kind == "path" or kind == "star":
        _require(params[0] >= 1, f"{kind} needs n >= 1, got n={params[0]}")
    elif kind == "cycle":
        _require(params[0] >= 3, f"cycle needs n >= 3, got n={params[0]}")
    elif kind == "tadpole":
        _require(params[0] >= 4, f"tadpole needs m >= 4, got m={params[0]}")
    elif kind == "dumbbell":
        p, q, r = params
        _require(p >= 3, f"dumbbell needs p >= 3, got p={p}")
        _require(q >= 3, f"dumbbell needs q >= 3, got q={q}")
        _require(r >= 1, f"dumbbell needs r >= 1, got r={r}")
    elif kind == "typeII":
        p, q = params
        _require(p >= 3, f"typeII needs p >= 3, got p={p}")
        _require(q >= 3, f"typeII needs q >= 3, got q={q}")
    elif kind == "theta":
        a, b, c = params
        _require(2 <= a <= b <= c, f"theta needs 2 <= a <= b <= c, got {params}")
        _require(b >= 3, f"theta needs b >= 3, got b={b}")
    elif kind == "A":
        _require(params[0] >= 4, f"A needs n >= 4, got n={params[0]}")
    elif kind == "L":
        _require(params[0] >= 5, f"L needs n >= 5, got n={params[0]}")
    elif kind == "B":
        _require(params[0] >= 5, f"B needs n >= 5, got n={params[0]}")
    elif kind == "R":
        _require(params[0] >= 6, f"R needs n >= 6, got n={params[0]}")
    elif kind == "Q":
        _require(params[0] > 2, f"Q needs n > 2, got n={params[0]}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the text syntax ``kind:param,param,...``.

    Errors name the offending token so the CLI can surface them as-is.
    """
    body = text.strip()
    if not body:
        raise FormatError("empty family spec")
    name, sep, rest = body.partition(":")
    name = name.strip()
    key = name.lower()
    if name in E_NAMES or name.upper() in E_NAMES:
        if sep:
            raise FormatError(f"family {name.upper()!r} takes no parameters")
        return FamilySpec(name.upper())
    if key not in _ALIASES:
        raise FormatError(f"unknown family name {name!r}")
    kind = _ALIASES[key]
    if not sep:
        raise FormatError(f"family {name!r} requires parameters, e.g. {name}:5")
    params = []
    for tok in rest.split(","):
        tok = tok.strip()
        try:
            params.append(int(tok))
        except ValueError:
            raise FormatError(f"bad parameter {tok!r} in family spec {text!r}") from None
    return FamilySpec(kind, tuple(params))


# ---------------------------------------------------------------------------
# Constructors


def _path_graph(n: int, label: str) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], label)


def _cycle_graph(n: int, label: str) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label)


def _star_graph(n: int, label: str) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)], label)


def _tadpole_graph(m: int, label: str) -> Graph:
    # Triangle 0-1-2, path hanging off vertex 0; pendant end is m-1.
    edges = [(0, 1), (0, 2), (1, 2)]
    chain = [0] + list(range(3, m))
    edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return Graph.from_edges(m, edges, label)


def _dumbbell_graph(p: int, q: int, r: int, label: str) -> Graph:
    n = p + q + r - 2
    a = 0
    b = 0 if r == 1 else 1
    nxt = max(a, b) + 1
    edges: list[tuple[int, int]] = []

    def ring(hub: int, size: int, start: int) -> int:
        ids = [hub] + list(range(start, start + size - 1))
        edges.extend((ids[i], ids[i + 1]) for i in range(size - 1))
        edges.append((ids[-1], hub))
        return start + size - 1

    nxt = ring(a, p, nxt)
    nxt = ring(b, q, nxt)
    if r == 2:
        edges.append((a, b))
    elif r > 2:
        interior = list(range(nxt, nxt + r - 2))
        chain = [a] + interior + [b]
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
        nxt += r - 2
    assert nxt == n
    return Graph.from_edges(n, edges, label)


def _theta_graph(a: int, b: int, c: int, label: str) -> Graph:
    n = a + b + c - 4
    edges: list[tuple[int, int]] = []
    nxt = 2
    for length in (a, b, c):
        if length == 2:
            edges.append((0, 1))
            continue
        interior = list(range(nxt, nxt + length - 2))
        chain = [0] + interior + [1]
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
        nxt += length - 2
    assert nxt == n
    return Graph.from_edges(n, edges, label)


def _a_family_graph(n: int, label: str) -> Graph:
    # theta(2,3,3) on 0..3 (hubs 0 and 1 adjacent; 2 and 3 of degree two),
    # with a path appended at the degree-two vertex 2.
    edges = [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]
    chain = [2] + list(range(4, n))
    edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return Graph.from_edges(n, edges, label)


def _b_family_graph(n: int, label: str) -> Graph:
    # theta(2,3,3) on 0..3 with n-4 pendant edges at the degree-three hub 0.
    edges = [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]
    edges += [(0, i) for i in range(4, n)]
    return Graph.from_edges(n, edges, label)


def _r_family_graph(n: int, label: str) -> Graph:
    # Two triangles sharing vertex 0, plus n-5 pendant edges at 0.
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]
    edges += [(0, i) for i in range(5, n)]
    return Graph.from_edges(n, edges, label)


def _q_family_graph(n: int, label: str) -> Graph:
    # Star with centre 0 plus one edge between the leaves 1 and 2.
    edges = [(0, i) for i in range(1, n)] + [(1, 2)]
    return Graph.from_edges(n, edges, label)


# Named small theta graphs, frozen as explicit edge lists so that their
# isomorphism to the corresponding theta specs is a real check.
_E_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "A4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    "E51": (5, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]),
    "E52": (5, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)]),
    "E61": (6, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 5), (4, 5), (0, 3)]),
    "E62": (6, [(0, 1), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (3, 5)]),
    "E7": (7, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 5), (4, 5), (0, 6), (6, 3)]),
    "E8": (8, [(0, 1), (0, 4), (0, 6), (1, 2), (2, 3), (3, 5), (3, 7), (4, 5), (6, 7)]),
}

# The theta parameters each named graph realises.
E_THETA: dict[str, tuple[int, int, int]] = {
    "A4": (2, 3, 3),
    "E51": (2, 3, 4),
    "E52": (3, 3, 3),
    "E61": (2, 4, 4),
    "E62": (3, 3, 4),
    "E7": (3, 4, 4),
    "E8": (4, 4, 4),
}


def build(spec: FamilySpec) -> Graph:
    """Construct the concrete graph of a family instance."""
    kind, params = spec.kind, spec.params
    label = str(spec)
    if kind == "path":
        return _path_graph(params[0], label)
    if kind == "cycle":
        return _cycle_graph(params[0], label)
    if kind == "star":
        return _star_graph(params[0], label)
    if kind == "tadpole":
        return _tadpole_graph(params[0], label)
    if kind == "dumbbell":
        return _dumbbell_graph(*params, label)
    if kind == "typeII":
        p, q = params
        return _dumbbell_graph(p, q, 1, label)
    if kind == "theta":
        return _theta_graph(*params, label)
    if kind == "A":
        return _a_family_graph(params[0], label)
    if kind == "L":
        return _dumbbell_graph(3, 3, params[0] - 4, label)
    if kind == "B":
        return _b_family_graph(params[0], label)
    if kind == "R":
        return _r_family_graph(params[0], label)
    if kind == "Q":
        return _q_family_graph(params[0], label)
    n, edges = _E_EDGES[kind]
    return Graph.from_edges(n, edges, label)


def closed_form(spec: FamilySpec) -> int | None:
    """Closed-form count where one exists, else ``None``.

    Families without a general formula (dumbbell, typeII, theta, Q) are
    counted through the counting module instead.
    """
    kind, params = spec.kind, spec.params
    if kind == "path":
        n = params[0]
        return n * (n + 1) // 2
    if kind == "cycle":
        n = params[0]
        return n * n - n + 1
    if kind == "star":
        n = params[0]
        return (1 << (n - 1)) + n - 1
    if kind == "tadpole":
        m = params[0]
        return (m - 1) * (m + 4) // 2
    if kind == "L":
        n = params[0]
        return (n + 6) * (n - 1) // 2
    if kind == "A":
        n = params[0]
        return (n * n + 7 * n - 16) // 2
    if kind == "R":
        n = params[0]
        return n + 1 + (1 << (n - 1))
    if kind == "B":
        n = params[0]
        return n + 2 + (1 << (n - 1))
    if kind in E_NAMES:
        return dict(e_graph_reference())[kind][0]
    return None


def e_graph_reference() -> list[tuple[str, tuple[int, int]]]:
    """Reference totals and rooted-count bounds for the named theta graphs.

    Rows are ``(name, (total, max over v of the rooted count))``.
    """
    return [
        ("A4", (14, 8)),
        ("E52", (26, 15)),
        ("E51", (24, 14)),
        ("E62", (42, 25)),
        ("E61", (40, 25)),
        ("E7", (66, 41)),
        ("E8", (100, 64)),
    ]
