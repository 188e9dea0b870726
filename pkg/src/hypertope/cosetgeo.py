"""Coset incidence systems in the sense of Tits.

Elements of type i are the right cosets of the i-th distinguished subgroup;
two cosets are incident iff they intersect.  Flags, residues, truncations and
the geometric property tests (geometry / thin / firm / connected / residually
connected / flag-transitive / chamber orbits) all live here.

Residues are computed combinatorially by filtering element lists, so they
remain meaningful when the system is not flag-transitive.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Optional, Sequence

from .permcore import (
    ElementSet,
    PermGroup,
    Permutation,
    RightCoset,
    generate_group,
    product_set,
    right_coset,
    right_coset_decomposition,
    subgroup_intersection,
)

TypedElement = tuple[int, RightCoset]


def cosets_intersect(c1: RightCoset, c2: RightCoset) -> bool:
    """Is H1 g1 ∩ H2 g2 nonempty?  Equivalent to g1 g2^-1 in H1 H2."""
    if c1.subgroup.degree != c2.subgroup.degree:
        raise ValueError("degree mismatch")
    target = c1.representative * c2.representative.inverse()
    H1, H2 = c1.subgroup, c2.subgroup
    if H1.order <= H2.order:
        return any(h.inverse() * target in H2 for h in H1)
    return any(target * h.inverse() in H1 for h in H2)


class Flag:
    """A set of pairwise incident elements, at most one per type.

    Stored as a type-indexed assignment, which makes the one-element-per-type
    constraint structural.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, items: Iterable[TypedElement]):
        self.items = tuple(sorted(items, key=lambda tc: tc[0]))
        if len({t for t, _ in self.items}) != len(self.items):
            raise ValueError("flag assigns more than one element to a type")
        self._hash: Optional[int] = None

    @property
    def types(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.items)

    @property
    def rank(self) -> int:
        return len(self.items)

    def get(self, t: int) -> RightCoset:
        for tt, c in self.items:
            if tt == t:
                return c
        raise KeyError(t)

    def restrict(self, types: Iterable[int]) -> "Flag":
        ts = set(types)
        return Flag((t, c) for t, c in self.items if t in ts)

    def extend(self, t: int, c: RightCoset) -> "Flag":
        return Flag(self.items + ((t, c),))

    def shift(self, g: Permutation) -> "Flag":
        """Image of the flag under right multiplication by g."""
        return Flag((t, c.shift(g)) for t, c in self.items)

    def sort_key(self):
        return tuple((t, c.representative.images) for t, c in self.items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Flag) and self.items == other.items

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.items)
        return self._hash

    def __repr__(self) -> str:
        return f"Flag(types={self.types})"


class Chamber(Flag):
    """A flag whose domain is the full type set."""


class IncidenceView:
    """An explicit incidence system: typed elements plus an incidence predicate.

    This is the combinatorial side of a coset geometry, and it is closed
    under taking residues, which is exactly what the graph-based residual
    connectedness test needs.
    """

    def __init__(self, types: Sequence[int],
                 elements_by_type: dict[int, Sequence[TypedElement]],
                 incident_fn: Callable[[TypedElement, TypedElement], bool]):
        self.types = tuple(sorted(types))
        self.elements_by_type = {t: tuple(elements_by_type[t]) for t in self.types}
        self._incident = incident_fn

    @property
    def rank(self) -> int:
        return len(self.types)

    def all_elements(self) -> list[TypedElement]:
        return [e for t in self.types for e in self.elements_by_type[t]]

    def incident(self, a: TypedElement, b: TypedElement) -> bool:
        if a[0] == b[0]:
            return a == b
        return self._incident(a, b)

    def flags_of_type(self, J: Iterable[int]) -> list[Flag]:
        """All flags with domain exactly J, in canonical order."""
        J = sorted(J)
        if not set(J) <= set(self.types):
            raise ValueError("flag type outside the type set")
        flags: list[Flag] = []

        def backtrack(idx: int, chosen: list[TypedElement]):
            if idx == len(J):
                flags.append(Flag(chosen))
                return
            for e in self.elements_by_type[J[idx]]:
                if all(self.incident(e, c) for c in chosen):
                    chosen.append(e)
                    backtrack(idx + 1, chosen)
                    chosen.pop()

        backtrack(0, [])
        return flags

    def chambers(self) -> list[Chamber]:
        return [Chamber(f.items) for f in self.flags_of_type(self.types)]

    def residue(self, flag: Flag) -> "IncidenceView":
        """Elements incident to every element of the flag, over the remaining types."""
        remaining = [t for t in self.types if t not in flag.types]
        if not remaining:
            raise ValueError("a chamber has an empty residue type set")
        flag_elems = list(flag.items)
        by_type = {
            t: [e for e in self.elements_by_type[t]
                if all(self.incident(e, fe) for fe in flag_elems)]
            for t in remaining
        }
        return IncidenceView(remaining, by_type, self._incident)

    def is_connected(self) -> bool:
        """Literal incidence-graph connectivity (isolated vertices count)."""
        verts = self.all_elements()
        if len(verts) <= 1:
            return True
        index = {v: i for i, v in enumerate(verts)}
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j, w in enumerate(verts):
                if j not in seen and self.incident(verts[i], w):
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(verts)

    def is_geometry(self) -> bool:
        """Does every flag extend to a chamber?"""
        chambers = self.chambers()
        covered: set[frozenset[TypedElement]] = set()
        for ch in chambers:
            items = ch.items
            for k in range(len(items) + 1):
                for sub in itertools.combinations(items, k):
                    covered.add(frozenset(sub))
        for k in range(self.rank + 1):
            for J in itertools.combinations(self.types, k):
                for f in self.flags_of_type(J):
                    if frozenset(f.items) not in covered:
                        return False
        return True

    def _corank1_residue_sizes(self):
        for missing in self.types:
            others = [t for t in self.types if t != missing]
            for f in self.flags_of_type(others):
                flag_elems = list(f.items)
                yield sum(
                    1 for e in self.elements_by_type[missing]
                    if all(self.incident(e, fe) for fe in flag_elems)
                )

    def is_thin(self) -> bool:
        return all(n == 2 for n in self._corank1_residue_sizes())

    def is_firm(self) -> bool:
        return all(n >= 2 for n in self._corank1_residue_sizes())

    def is_residually_connected(self) -> bool:
        """Every residue of rank >= 2, including the whole system, is connected.

        Residues of residues are residues of the union flag, so a flat sweep
        over flags of corank >= 2 is equivalent to the recursive definition.
        """
        if self.rank < 2:
            return True
        if not self.is_connected():
            return False
        for k in range(1, self.rank - 1):
            for J in itertools.combinations(self.types, k):
                for f in self.flags_of_type(J):
                    if not self.residue(f).is_connected():
                        return False
        return True


class CosetGeometry:
    """Coset incidence system of a group with an indexed family of subgroups.

    Element lists and pairwise product sets are materialized lazily and
    cached; the object is otherwise immutable.
    """

    def __init__(self, group: PermGroup, parabolics: Sequence[PermGroup]):
        for H in parabolics:
            if not H.is_subgroup_of(group):
                raise ValueError("parabolic is not a subgroup of the group")
        self.group = group
        self.parabolics = tuple(parabolics)
        self._elements: dict[int, tuple[RightCoset, ...]] = {}
        self._products: dict[tuple[int, int], frozenset[Permutation]] = {}

    @property
    def rank(self) -> int:
        return len(self.parabolics)

    @property
    def type_set(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    def elements_of_type(self, i: int) -> tuple[RightCoset, ...]:
        if i not in self._elements:
            self._elements[i] = tuple(
                right_coset_decomposition(self.group, self.parabolics[i]))
        return self._elements[i]

    def _product(self, i: int, j: int) -> frozenset[Permutation]:
        key = (i, j)
        if key not in self._products:
            self._products[key] = product_set(
                self.parabolics[i], self.parabolics[j], cap=self.group.order)._mset
        return self._products[key]

    def incident(self, i: int, c1: RightCoset, j: int, c2: RightCoset) -> bool:
        """Typed incidence: same-type elements are incident iff equal."""
        if i == j:
            return c1 == c2
        return (c1.representative * c2.representative.inverse()) in self._product(i, j)

    def base_chamber(self) -> Chamber:
        """The chamber of the identity cosets; always pairwise incident."""
        return Chamber((i, right_coset(self.parabolics[i], self.group.identity))
                       for i in self.type_set)

    def view(self) -> IncidenceView:
        by_type = {i: [(i, c) for c in self.elements_of_type(i)]
                   for i in self.type_set}
        return IncidenceView(
            self.type_set, by_type,
            lambda a, b: self.incident(a[0], a[1], b[0], b[1]))

    # -- flag and chamber enumeration ------------------------------------

    def flags_of_type(self, J: Iterable[int]) -> list[Flag]:
        return self.view().flags_of_type(J)

    def chambers(self) -> list[Chamber]:
        return self.view().chambers()

    def residue(self, flag: Flag) -> IncidenceView:
        if set(flag.types) == set(self.type_set):
            raise ValueError("residue of a chamber is empty")
        return self.view().residue(flag)

    # -- geometric property tests ----------------------------------------

    def is_geometry(self) -> bool:
        return self.view().is_geometry()

    def is_thin(self) -> bool:
        return self.view().is_thin()

    def is_firm(self) -> bool:
        return self.view().is_firm()

    def is_connected(self) -> bool:
        return self.view().is_connected()

    def is_residually_connected_graph(self) -> bool:
        return self.view().is_residually_connected()

    def is_residually_connected_group(self, verify_flag_transitive: bool = False) -> bool:
        """Group-theoretic residual connectedness for flag-transitive geometries.

        True iff the parabolic of J is generated by the parabolics of
        J ∪ {i}, for every J with at least two missing types.  Only valid
        when the geometry is flag-transitive; the caller asserts that unless
        ``verify_flag_transitive`` is set.
        """
        if verify_flag_transitive and not (self.is_geometry() and self.is_flag_transitive()):
            raise ValueError("group-theoretic test requires a flag-transitive geometry")
        I = self.type_set
        for k in range(0, self.rank - 1):
            for J in itertools.combinations(I, k):
                G_J = self._parabolic_of(J)
                gens: list[Permutation] = []
                for i in I:
                    if i not in J:
                        gens.extend(self._parabolic_of(J + (i,)).elements)
                generated = generate_group(self.group.degree, gens, cap=G_J.order + 1)
                if generated.order != G_J.order:
                    return False
        return True

    def _parabolic_of(self, J: Sequence[int]) -> PermGroup:
        """Intersection of the maximal parabolics indexed by J (G for empty J)."""
        result = self.group
        for j in J:
            result = subgroup_intersection(result, self.parabolics[j])
        return result

    # -- truncation -------------------------------------------------------

    def truncation(self, J: Iterable[int]) -> "CosetGeometry":
        J = sorted(set(J))
        if not J:
            raise ValueError("truncation to an empty type set")
        if not set(J) <= set(self.type_set):
            raise ValueError("truncation types outside the type set")
        return CosetGeometry(self.group, [self.parabolics[j] for j in J])

    # -- group actions ----------------------------------------------------

    def flag_orbit(self, start: Flag) -> set[Flag]:
        gens = self.group.generators or self.group.elements
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for f in frontier:
                for g in gens:
                    img = f.shift(g)
                    if img not in orbit:
                        orbit.add(img)
                        new.append(img)
            frontier = new
        return orbit

    def chamber_orbits(self) -> list[list[Chamber]]:
        """Orbits of right multiplication on chambers, ordered by minimal chamber."""
        chambers = sorted(self.chambers(), key=Chamber.sort_key)
        seen: set[Flag] = set()
        orbits = []
        for ch in chambers:
            if ch in seen:
                continue
            orbit = self.flag_orbit(ch)
            seen.update(orbit)
            orbits.append(sorted((Chamber(f.items) for f in orbit), key=Chamber.sort_key))
        return orbits

    def is_chamber_transitive(self) -> bool:
        """One orbit on chambers.  Rank < 3 is free by the Tits construction."""
        if self.rank <= 2:
            return True
        chambers = self.chambers()
        if not chambers:
            return True
        return len(self.flag_orbit(chambers[0])) == len(chambers)

    def is_flag_transitive(self) -> bool:
        """Transitive on flags of every type.

        For geometries, chamber transitivity is equivalent (every flag is a
        restriction of a chamber), so the per-type sweep only runs for
        non-geometries.
        """
        if self.rank <= 2:
            return True
        if self.is_geometry():
            return self.is_chamber_transitive()
        for k in range(1, self.rank + 1):
            for J in itertools.combinations(self.type_set, k):
                flags = self.flags_of_type(J)
                if flags and len(self.flag_orbit(flags[0])) != len(flags):
                    return False
        return True

    def adjacent_chambers(self, chamber: Chamber, i: int) -> list[Chamber]:
        """Chambers agreeing with ``chamber`` outside type i and differing at i."""
        rest = [(t, c) for t, c in chamber.items if t != i]
        current = chamber.get(i)
        out = []
        for c in self.elements_of_type(i):
            if c != current and all(self.incident(i, c, t, e) for t, e in rest):
                out.append(Chamber(rest + [(i, c)]))
        return sorted(out, key=Chamber.sort_key)

    def __repr__(self) -> str:
        orders = ", ".join(str(H.order) for H in self.parabolics)
        return f"CosetGeometry(|G|={self.group.order}, parabolic orders=[{orders}])"


def build(group: PermGroup, parabolics: Sequence[PermGroup]) -> CosetGeometry:
    return CosetGeometry(group, parabolics)


def is_flag_transitive_via_rank3(geometry: CosetGeometry) -> bool:
    """Rank-reduction flag-transitivity test for a system with an appended subgroup.

    ``geometry`` has parabolics (G_0, ..., G_{r-1}, H).  Requires the system
    over the first r parabolics to be flag-transitive and the induced system
    on H (with parabolics G_i ∩ H) to be a flag-transitive geometry; then the
    full system is a flag-transitive geometry iff every rank-3 system
    (G_i, G_j, H) is one.
    """
    if geometry.rank < 3:
        raise ValueError("need at least two base parabolics plus the appended subgroup")
    *base, H = geometry.parabolics
    outer = CosetGeometry(geometry.group, base)
    if not outer.is_flag_transitive():
        raise ValueError("base system is not flag-transitive")
    induced = CosetGeometry(H, [subgroup_intersection(Gi, H) for Gi in base])
    if not (induced.is_geometry() and induced.is_flag_transitive()):
        raise ValueError("induced system on the appended subgroup is not a flag-transitive geometry")
    for i in range(len(base)):
        for j in range(i + 1, len(base)):
            sub = CosetGeometry(geometry.group, [base[i], base[j], H])
            if not (sub.is_geometry() and sub.is_flag_transitive()):
                return False
    return True
