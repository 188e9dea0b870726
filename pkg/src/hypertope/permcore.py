"""Finite permutation group kernel.

Elements are permutations of {0, ..., n-1} stored as image tuples, groups are
fully enumerated element sets with a fixed lexicographic total order.  This is
deliberately the dumb-but-exact representation: every higher-level test in
this package (coset decompositions, product sets, intersection conditions)
reduces to plain set computations over these enumerations.
"""

from __future__ import annotations

import itertools
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_ELEMENT_CAP = 100_000


class GroupTooLargeError(RuntimeError):
    """Closure enumeration exceeded the configured element cap."""

    def __init__(self, cap: int):
        super().__init__(f"group too large: closure exceeds element cap {cap}")
        self.cap = cap


@total_ordering
class Permutation:
    """A permutation of {0, ..., n-1} as the tuple of images.

    Composition is a right action: ``(p * q)(x) == q(p(x))``, i.e. p acts
    first.  Cosets ``H g`` therefore transform as ``H g -> H (g h)`` under
    right multiplication by ``h``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation(o[x] for x in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition, cycles led by their minimal point."""
        seen: set[int] = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        result = 1
        for cycle in self.cycles():
            result = result * len(cycle) // _gcd(result, len(cycle))
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation[{body}]"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-action composition: apply p first, then q."""
    return p * q


class PermGroup:
    """A finite permutation group held as its full, sorted element list."""

    __slots__ = ("degree", "generators", "elements", "_eset", "_hash")

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._eset = frozenset(self.elements)
        self._hash: Optional[int] = None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        e = Permutation.identity(degree)
        return cls(degree, (), (e,))

    @classmethod
    def _from_elements(cls, degree: int, elements: Iterable[Permutation],
                       generators: Optional[Sequence[Permutation]] = None) -> "PermGroup":
        elements = tuple(sorted(set(elements)))
        if generators is None:
            generators = tuple(g for g in elements if not g.is_identity())
        return cls(degree, generators, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._eset

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._eset <= other._eset

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._eset == other._eset)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, self.elements))
        return self._hash

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def generate_group(degree: int, gens: Sequence[Permutation],
                   cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Close a generator list under composition and inverse.

    Breadth-first closure from the identity; the element list comes out
    sorted, so the result is independent of generator order.  Raises
    GroupTooLargeError as soon as the closure exceeds ``cap``.
    """
    gens = tuple(dict.fromkeys(gens))  # dedupe, keep first occurrence
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        new: list[Permutation] = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise GroupTooLargeError(cap)
                    new.append(y)
        frontier = new
    return PermGroup(degree, gens, sorted(seen))


class ElementSet:
    """Ordered, duplicate-free set of permutations of one degree."""

    __slots__ = ("degree", "members", "_mset")

    def __init__(self, degree: int, members: Iterable[Permutation]):
        self.degree = degree
        self.members = tuple(sorted(set(members)))
        self._mset = frozenset(self.members)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._mset

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ElementSet) and self._mset == other._mset

    def __hash__(self) -> int:
        return hash(self._mset)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.degree, self._mset & other._mset)

    def __repr__(self) -> str:
        return f"ElementSet(degree={self.degree}, size={len(self.members)})"


def subgroup_intersection(H: PermGroup, K: PermGroup) -> PermGroup:
    """H ∩ K, iterating the smaller group and testing membership in the larger."""
    if H.degree != K.degree:
        raise ValueError("degree mismatch")
    small, large = (H, K) if H.order <= K.order else (K, H)
    return PermGroup._from_elements(H.degree, (x for x in small if x in large))


def product_set(H: PermGroup, K: PermGroup,
                cap: int = DEFAULT_ELEMENT_CAP) -> ElementSet:
    """The set HK = {h k : h in H, k in K}; |HK| = |H||K| / |H ∩ K|."""
    if H.degree != K.degree:
        raise ValueError("degree mismatch")
    out: set[Permutation] = set()
    for h in H:
        for k in K:
            out.add(h * k)
            if len(out) > cap:
                raise GroupTooLargeError(cap)
    return ElementSet(H.degree, out)


class RightCoset:
    """A right coset H g with its canonical (lexicographically minimal) representative."""

    __slots__ = ("subgroup", "representative", "_hash")

    def __init__(self, subgroup: PermGroup, representative: Permutation):
        self.subgroup = subgroup
        self.representative = representative
        self._hash: Optional[int] = None

    def elements(self) -> Iterator[Permutation]:
        g = self.representative
        return (h * g for h in self.subgroup)

    def __contains__(self, p: Permutation) -> bool:
        return p * self.representative.inverse() in self.subgroup

    def shift(self, g: Permutation) -> "RightCoset":
        """The coset H (rep g), re-canonicalized."""
        return right_coset(self.subgroup, self.representative * g)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RightCoset)
                and self.representative == other.representative
                and self.subgroup == other.subgroup)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.subgroup, self.representative))
        return self._hash

    def __repr__(self) -> str:
        return f"RightCoset({self.subgroup!r} * {self.representative!r})"


def right_coset(H: PermGroup, g: Permutation) -> RightCoset:
    """The coset H g with canonical representative min(H g)."""
    if H.degree != g.degree:
        raise ValueError("degree mismatch")
    return RightCoset(H, min(h * g for h in H))


def right_coset_decomposition(G: PermGroup, H: PermGroup) -> list[RightCoset]:
    """All right cosets of H in G, ordered by canonical representative."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    seen: set[Permutation] = set()
    cosets = []
    for g in G.elements:  # sorted, so the first unseen member of a coset is its minimum
        if g in seen:
            continue
        members = [h * g for h in H]
        seen.update(members)
        cosets.append(RightCoset(H, g))
    return cosets


def double_coset_decomposition(H: PermGroup, S: ElementSet,
                               K: PermGroup) -> list[ElementSet]:
    """Partition S into double cosets H x K, ordered by minimal member.

    S must be a union of (H, K)-double cosets; a class leaking outside S is
    reported as an error.
    """
    if H.degree != S.degree or K.degree != S.degree:
        raise ValueError("degree mismatch")
    seen: set[Permutation] = set()
    classes = []
    for x in S.members:
        if x in seen:
            continue
        block = {h * x * k for h in H for k in K}
        if not block <= S._mset:
            raise ValueError("S is not a union of (H, K)-double cosets")
        seen.update(block)
        classes.append(ElementSet(S.degree, block))
    return classes


def _direct_product_pair(p: Permutation, q: Permutation) -> Permutation:
    d = p.degree
    return Permutation(tuple(p.images) + tuple(d + x for x in q.images))


def extends_to_homomorphism(G: PermGroup, gens: Sequence[Permutation],
                            images: Sequence[Permutation]) -> bool:
    """Does gens[i] -> images[i] extend to a homomorphism on G?

    Graph-of-homomorphism test: the subgroup D of the direct product
    generated by the pairs (gens[i], images[i]) projects onto G, so the map
    is well defined iff |D| == |G|.
    """
    if len(gens) != len(images):
        raise ValueError("generator/image length mismatch")
    if images and len({q.degree for q in images}) != 1:
        raise ValueError("images do not share a common degree")
    for g in gens:
        if g not in G:
            raise ValueError("generator not in G")
    if generate_group(G.degree, gens, cap=G.order).order != G.order:
        raise ValueError("gens do not generate G")
    if not gens:
        return True
    paired = [_direct_product_pair(p, q) for p, q in zip(gens, images)]
    try:
        D = generate_group(paired[0].degree, paired, cap=G.order)
    except GroupTooLargeError:
        return False  # |D| > |G|: the graph meets {1} x <images> nontrivially
    return D.order == G.order


def inverting_automorphism_exists(G: PermGroup, R: Sequence[Permutation]) -> bool:
    """Is there an automorphism of G inverting every element of R?

    R must generate G.  When r -> r^-1 extends to a homomorphism, the image
    contains every r^-1 and hence generates G, so the extension is
    automatically an automorphism.
    """
    return extends_to_homomorphism(G, list(R), [r.inverse() for r in R])
