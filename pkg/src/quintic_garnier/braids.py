"""Braid moves on representation tuples and finite orbit enumeration.

The elementary move of index i sends ``(.., M_i, M_{i+1}, ..)`` to
``(.., M_i M_{i+1} M_i^-1, M_i, ..)``; its inverse is
``(M_{i+1}, M_{i+1}^-1 M_i M_{i+1})``.  Words act letter by letter, first
letter first.  Two flavors are supported: ``b4`` (indices 1..3, acting on
4-tuples) and ``spherical5`` (indices 1..4, acting on product-identity
5-tuples).

Orbits are breadth-first closures deduplicated by the exact fifteen-trace
tuple of the underlying class; the element set is independent of generator
order and scheduling, while provenance edges may differ.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Optional, Sequence, Union

from .reps import RepTuple, TraceTuple, trace_coordinates, trace_of_five
from .ring import LaurentPoly, VarContext, lp_substitute
from .sl2 import Mat2


class BraidWord:
    """Signed generator letters with a declared flavor."""

    __slots__ = ("letters", "flavor", "name")

    def __init__(self, letters: Iterable[int], flavor: str = "b4",
                 name: Optional[str] = None):
        self.letters = tuple(int(x) for x in letters)
        if flavor not in ("b4", "spherical5"):
            raise ValueError("flavor is 'b4' or 'spherical5'")
        top = 3 if flavor == "b4" else 4
        for x in self.letters:
            if x == 0 or abs(x) > top:
                raise IndexError(f"letter {x} out of range for {flavor}")
        self.flavor = flavor
        self.name = name or "".join(
            (f"s{abs(x)}" if x > 0 else f"s{abs(x)}'") for x in self.letters) or "e"

    def inverse(self) -> "BraidWord":
        return BraidWord([-x for x in reversed(self.letters)], self.flavor,
                         name=self.name + "^-1")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters, self.flavor)

    def __pow__(self, n: int) -> "BraidWord":
        if n < 0:
            return self.inverse() ** (-n)
        return BraidWord(self.letters * n, self.flavor)

    def permutation(self, strands: int) -> tuple[int, ...]:
        """Underlying strand permutation (image of each position)."""
        perm = list(range(strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def __repr__(self):
        return f"BraidWord({self.name})"


def _apply_letter(mats: list[Mat2], x: int) -> None:
    i = abs(x) - 1
    a, b = mats[i], mats[i + 1]
    if x > 0:
        mats[i], mats[i + 1] = a * b * a.inverse(), a
    else:
        mats[i], mats[i + 1] = b, b.inverse() * a * b


def braid_act(word: BraidWord, rho: Union[RepTuple, Sequence[Mat2]]):
    """Apply a braid word; returns the same shape as the input."""
    if isinstance(rho, RepTuple):
        if word.flavor != "b4":
            raise IndexError("a 4-tuple carries only the b4 action")
        mats = list(rho.mats)
        for x in word.letters:
            _apply_letter(mats, x)
        return RepTuple(*mats)
    mats = list(rho)
    top = 3 if word.flavor == "b4" else 4
    if len(mats) <= top:
        raise IndexError("tuple too short for flavor")
    for x in word.letters:
        _apply_letter(mats, x)
    return tuple(mats)


def pure_generators() -> list[BraidWord]:
    """The six standard pure braid generators A_{ij}, 1 <= i < j <= 4.

    ``A_{ij}`` conjugates the square of the i-th elementary move by the
    descending run of moves between j-1 and i+1; each induces the identity
    strand permutation.
    """
    out = []
    for i in range(1, 4):
        for j in range(i + 1, 5):
            run = list(range(j - 1, i, -1))
            letters = run + [i, i] + [-x for x in reversed(run)]
            out.append(BraidWord(letters, "b4", name=f"A{i}{j}"))
    return out


def full_twist() -> BraidWord:
    """The square of the half twist; generates the center of the 4-strand group."""
    half = BraidWord([1, 2, 1, 3, 2, 1], "b4", name="D")
    return BraidWord(half.letters * 2, "b4", name="D^2")


def center_check(rho: RepTuple) -> bool:
    """Full twist acts as conjugation by M1 M2 M3 M4 and fixes the trace tuple."""
    acted = braid_act(full_twist(), rho)
    if trace_coordinates(acted) != trace_coordinates(rho):
        return False
    p = rho.mats[0] * rho.mats[1] * rho.mats[2] * rho.mats[3]
    return acted == rho.conjugate_by(p)


class OrbitResult:
    """Finite (or truncated) orbit: canonical trace tuples plus provenance."""

    def __init__(self, seed_name: str, elements: list[TraceTuple],
                 edges: list[tuple[int, str, int]], status: str,
                 generators: list[str], cutoff: int):
        order = sorted(range(len(elements)), key=lambda i: elements[i].serialize())
        rank = {old: new for new, old in enumerate(order)}
        self.seed_name = seed_name
        self.elements = [elements[i] for i in order]
        self.edges = sorted((rank[a], g, rank[b]) for a, g, b in edges)
        self.status = status  # "closed" | "cutoff"
        self.generators = generators
        self.cutoff = cutoff

    def __len__(self):
        return len(self.elements)

    def element_set(self) -> set[TraceTuple]:
        return set(self.elements)

    def substituted_set(self, sigma: Mapping[str, LaurentPoly],
                        target: Optional[VarContext] = None) -> set[TraceTuple]:
        return {e.substitute(sigma, target) for e in self.elements}

    def variables(self) -> tuple[str, ...]:
        if not self.elements:
            return ()
        return self.elements[0].values[0].ctx.names

    def to_json(self) -> dict:
        return {
            "seed": self.seed_name,
            "generators": self.generators,
            "status": self.status,
            "cutoff": self.cutoff,
            "size": len(self.elements),
            "variables": list(self.variables()),
            "elements": [list(e.serialize()) for e in self.elements],
            "edges": [list(e) for e in self.edges],
        }

    def write(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")


def orbit(seed: RepTuple, generators: Sequence[BraidWord], cutoff: int = 1000,
          seed_name: str = "seed") -> OrbitResult:
    """Closure of the seed's class under the given words and their inverses."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    gens = []
    for g in generators:
        gens.append((g.name, g))
        gens.append((g.name + "^-1", g.inverse()))
    start = trace_coordinates(seed)
    index = {start: 0}
    elements = [start]
    reps = [seed]
    edges: list[tuple[int, str, int]] = []
    frontier = [0]
    status = "closed"
    while frontier:
        nxt = []
        for i in frontier:
            for gname, g in gens:
                image = braid_act(g, reps[i])
                key = trace_coordinates(image)
                j = index.get(key)
                if j is None:
                    if len(elements) >= cutoff:
                        status = "cutoff"
                        frontier = []
                        nxt = []
                        break
                    j = len(elements)
                    index[key] = j
                    elements.append(key)
                    reps.append(image)
                    nxt.append(j)
                edges.append((i, gname, j))
            else:
                continue
            break
        frontier = nxt
    return OrbitResult(seed_name, elements, edges, status,
                       [g.name for g in generators], cutoff)


def extended_orbit(seed: RepTuple, cutoff: int = 10000,
                   seed_name: str = "seed") -> OrbitResult:
    """Closure of the 5-tuple under the four spherical elementary moves.

    Elements are keyed by the trace tuple of the first four matrices; the
    fifth matrix participates through the last move.
    """
    gens = []
    for i in (1, 2, 3, 4):
        w = BraidWord([i], "spherical5")
        gens.append((w.name, w))
        gens.append((w.name + "^-1", w.inverse()))
    start5 = seed.five()
    start = trace_of_five(start5)
    index = {start: 0}
    elements = [start]
    reps = [start5]
    edges: list[tuple[int, str, int]] = []
    frontier = [0]
    status = "closed"
    while frontier:
        nxt = []
        for i in frontier:
            for gname, g in gens:
                image = braid_act(g, reps[i])
                key = trace_of_five(image)
                j = index.get(key)
                if j is None:
                    if len(elements) >= cutoff:
                        status = "cutoff"
                        frontier = []
                        nxt = []
                        break
                    j = len(elements)
                    index[key] = j
                    elements.append(key)
                    reps.append(image)
                    nxt.append(j)
                edges.append((i, gname, j))
            else:
                continue
            break
        frontier = nxt
    return OrbitResult(seed_name, elements, edges, status,
                       ["s1", "s2", "s3", "s4"], cutoff)


def orbit_compare(a: Union[OrbitResult, Iterable[TraceTuple]],
                  b: Union[OrbitResult, Iterable[TraceTuple]],
                  sigma: Optional[Mapping[str, LaurentPoly]] = None,
                  target: Optional[VarContext] = None) -> dict:
    """Set relation between ``sigma(a)`` and ``b``.

    Returns a dict with ``relation`` in {"equal", "a_contains_b",
    "b_contains_a", "overlap", "disjoint"} and witness serializations.
    """
    sa = a.element_set() if isinstance(a, OrbitResult) else set(a)
    sb = b.element_set() if isinstance(b, OrbitResult) else set(b)
    if sigma:
        sa = {e.substitute(sigma, target) for e in sa}
    common = sa & sb
    if not common:
        relation = "disjoint"
    elif sa == sb:
        relation = "equal"
    elif sb <= sa:
        relation = "a_contains_b"
    elif sa <= sb:
        relation = "b_contains_a"
    else:
        relation = "overlap"
    witnesses = sorted(e.serialize() for e in common)[:4]
    return {"relation": relation, "common": len(common),
            "size_a": len(sa), "size_b": len(sb),
            "witnesses": [list(w) for w in witnesses]}


def parse_substitution(text: str, src: VarContext,
                       target: VarContext) -> dict[str, LaurentPoly]:
    """Parse ``u=-s,v=s`` into a signed-monomial substitution map."""
    from .ring import parse_poly

    sigma: dict[str, LaurentPoly] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, _, rhs = piece.partition("=")
        name = name.strip()
        if name not in src.index:
            raise ValueError(f"unknown source variable {name!r}")
        image = parse_poly(target, rhs.strip())
        if not image.is_monomial():
            raise ValueError(f"image of {name!r} is not a signed monomial")
        sigma[name] = image
    return sigma
