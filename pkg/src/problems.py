# src/problems.py
"""Source problems of the reductions: graphs, set systems, integer sets and PCP pairs."""
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Tuple

from src.errors import AlphabetError, MalformedInputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; edges stored as (u, v) with u < v."""
    n: int
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def of(cls, n: int, edges) -> "Graph":
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}")
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    def closed_neighborhood(self, u: int) -> FrozenSet[int]:
        nbrs = {u}
        for a, b in self.edges:
            if a == u:
                nbrs.add(b)
            elif b == u:
                nbrs.add(a)
        return frozenset(nbrs)

    def describe(self) -> dict:
        return {"kind": "graph", "n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise MalformedInputError("edge list needs an 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError:
        raise MalformedInputError("edge list entries must be integer pairs") from None
    if len(edges) != m:
        raise MalformedInputError(f"header announces {m} edges, found {len(edges)}")
    return Graph.of(n, edges)


@dataclass(frozen=True)
class SetSystem:
    """Universe {1..universe} and a collection of nonempty subsets (duplicates kept in input order)."""
    universe: int
    sets: Tuple[FrozenSet[int], ...]

    @classmethod
    def of(cls, universe: int, sets) -> "SetSystem":
        checked = []
        for s in sets:
            s = frozenset(s)
            if not s:
                raise MalformedInputError("set systems take nonempty sets only")
            if any(not 1 <= x <= universe for x in s):
                raise MalformedInputError(f"set {sorted(s)} leaves the universe 1..{universe}")
            checked.append(s)
        return cls(universe, tuple(checked))

    def describe(self) -> dict:
        return {"kind": "set_system", "universe": self.universe, "sets": [sorted(s) for s in self.sets]}


def parse_set_system(data) -> SetSystem:
    try:
        return SetSystem.of(int(data["universe"]), data["sets"])
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInputError(f"bad set system JSON: {e}") from None


def parse_numbers(data) -> List[Fraction]:
    """A JSON list of numbers (or {"numbers": [...]}); strings may be "a/b"."""
    if isinstance(data, dict):
        data = data.get("numbers")
    if not isinstance(data, list):
        raise MalformedInputError("expected a list of numbers")
    out = []
    for x in data:
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise MalformedInputError(f"not an exact number: {x!r}")
        try:
            out.append(Fraction(x))
        except ValueError:
            raise MalformedInputError(f"not an exact number: {x!r}") from None
    return out


@dataclass(frozen=True)
class PcpInstance:
    pairs: Tuple[Tuple[str, str], ...]

    @classmethod
    def of(cls, pairs) -> "PcpInstance":
        checked = []
        for pair in pairs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise MalformedInputError(f"PCP entries are pairs, got {pair!r}")
            for word in pair:
                check_binary(word)
            checked.append((pair[0], pair[1]))
        return cls(tuple(checked))

    def describe(self) -> dict:
        return {"kind": "pcp", "pairs": [list(p) for p in self.pairs]}


def check_binary(word: str):
    if not isinstance(word, str) or any(c not in "01" for c in word):
        raise AlphabetError(f"not a binary word: {word!r}")


def parse_pcp(data) -> PcpInstance:
    if not isinstance(data, list):
        raise MalformedInputError("PCP input is a JSON list of word pairs")
    if not data:
        raise MalformedInputError("PCP input has no pairs")
    return PcpInstance.of(data)


def read_json(path: str):
    with open(path, 'r', encoding='utf-8') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{path} is not valid JSON: {e}") from None
