from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    """Vertex colouring with colours ``0..k-1``, every colour used."""

    colors: tuple[int, ...]
    k: int

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Coloring":
        """Renumber arbitrary hashable labels to ``0..k-1`` by first use."""
        seen: dict = {}
        out = []
        for lab in labels:
            if lab is None:
                raise InvalidInputError("uncoloured vertex")
            out.append(seen.setdefault(lab, len(seen)))
        return cls(tuple(out), len(seen))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Coloring":
        labels: list = [None] * n
        for c, cls_ in enumerate(classes):
            for v in cls_:
                labels[v] = c
        return cls.from_labels(labels)

    def classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].add(v)
        return [frozenset(s) for s in out]

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if any(not 0 <= c < self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


@dataclass(frozen=True)
class EdgeColoring:
    """Colour per edge; ``edges[i]`` receives ``colors[i]``."""

    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    k: int

    def is_proper(self) -> bool:
        seen: set[tuple[int, int]] = set()
        for (u, v), c in zip(self.edges, self.colors):
            if not 0 <= c < self.k:
                return False
            for x in (u, v):
                if (x, c) in seen:
                    return False
                seen.add((x, c))
        return True
