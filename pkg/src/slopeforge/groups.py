"""Finite groups as explicit multiplication structures.

Groups are stored as an ordered element list (identity first) plus a
composition rule on the raw element values; everything else (inverses,
conjugacy classes, subgroup closures, normal subgroups) is derived and cached.
Raw values are hashable, so closure and orbit computations are dict-driven,
and groups up to the configured order bound (default 10000) can be enumerated
in full.  Wreath products compose lazily and never require enumerating the
ambient product, only the subgroups actually built inside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iter_product

from .exactnum import is_prime

DEFAULT_MAX_ORDER = 10000


class GroupError(ValueError):
    pass


class GoursatDichotomyError(GroupError):
    """The full-or-twisted-diagonal dichotomy fails for the given subgroup.

    Only possible for abelian bases with more than two coordinates, where
    e.g. the sum-zero hyperplane of (C_q)^3 is shift-stable and surjects onto
    the first factor without being full or a graph.
    """


def _perm_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Function composition (a after b): (a*b)(i) = a(b(i))."""
    return tuple(a[x] for x in b)


def _perm_inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class FiniteGroup:
    """A finite group over an ordered list of raw element values.

    compose/inverse operate on raw values; public mul/inv operate on indices.
    The identity always has index 0 and elements are kept in a deterministic
    order, so derived data (classes, subgroups) is reproducible.
    """

    def __init__(self, elements, compose, inverse, identity, generators=None,
                 name="group"):
        elements = list(elements)
        if identity not in elements:
            raise GroupError("identity missing from element list")
        rest = sorted(e for e in elements if e != identity)
        self.elements = [identity] + rest
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise GroupError("duplicate elements")
        self._compose = compose
        self._inverse = inverse
        self.name = name
        if generators is None:
            self._generators_raw = None
        else:
            self._generators_raw = [g for g in generators if g != identity]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, i: int, j: int) -> int:
        return self.index[self._compose(self.elements[i], self.elements[j])]

    @cached_property
    def _inv_list(self) -> list[int]:
        return [self.index[self._inverse(e)] for e in self.elements]

    def inv(self, i: int) -> int:
        return self._inv_list[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(i), -k)
        out = 0
        base = i
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element_order(self, i: int) -> int:
        n = 1
        x = i
        while x != 0:
            x = self.mul(x, i)
            n += 1
        return n

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        e = 1
        for i in range(self.order):
            e = lcm(e, self.element_order(i))
        return e

    @cached_property
    def generators(self) -> list[int]:
        """Generator indices; computed greedily when not supplied."""
        if self._generators_raw is not None:
            return sorted(self.index[g] for g in self._generators_raw)
        gens: list[int] = []
        reached = {0}
        for i in range(1, self.order):
            if i not in reached:
                gens.append(i)
                reached = set(subgroup_closure(self, gens))
                if len(reached) == self.order:
                    break
        return gens

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            self.mul(a, b) == self.mul(b, a) for a in gens for b in gens
        )

    # -- conjugacy structure --

    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes as sorted index tuples, ordered by minimal element.

        The identity class {0} always comes first.
        """
        gens = self.generators or list(range(1, self.order))
        gen_pairs = [(g, self.inv(g)) for g in gens]
        seen = [False] * self.order
        classes = []
        for start in range(self.order):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            seen[start] = True
            while frontier:
                x = frontier.pop()
                for g, ginv in gen_pairs:
                    y = self.mul(ginv, self.mul(x, g))
                    if not seen[y]:
                        seen[y] = True
                        orbit.add(y)
                        frontier.append(y)
            classes.append(tuple(sorted(orbit)))
        return classes

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * self.order
        for ci, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                out[x] = ci
        return out

    @property
    def class_representatives(self) -> list[int]:
        return [cls[0] for cls in self.conjugacy_classes]

    @cached_property
    def inverse_class(self) -> list[int]:
        return [self.class_of[self.inv(cls[0])] for cls in self.conjugacy_classes]

    # -- common subgroups --

    def subgroup(self, elements) -> Subgroup:
        return Subgroup(self, tuple(sorted(set(elements))))

    def trivial_subgroup(self) -> Subgroup:
        if not hasattr(self, "_trivial_subgroup"):
            self._trivial_subgroup = Subgroup(self, (0,))
        return self._trivial_subgroup

    def full_subgroup(self) -> Subgroup:
        if not hasattr(self, "_full_subgroup"):
            self._full_subgroup = Subgroup(
                self, tuple(range(self.order)), tuple(self.generators)
            )
        return self._full_subgroup

    @cached_property
    def center(self) -> tuple[int, ...]:
        gens = self.generators or list(range(self.order))
        return tuple(
            x for x in range(self.order)
            if all(self.mul(x, g) == self.mul(g, x) for g in gens)
        )

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def subgroup_closure(G: FiniteGroup, generators) -> tuple[int, ...]:
    """Sorted index tuple of the subgroup generated by the given indices."""
    members = {0}
    gens = [g for g in generators if g != 0]
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return tuple(sorted(members))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.elements or self.elements[0] != 0:
            raise GroupError("a subgroup must contain the identity")
        eset = frozenset(self.elements)
        object.__setattr__(self, "_set", eset)
        G = self.parent
        for x in self.elements:
            if G.inv(x) not in eset:
                raise GroupError("subgroup not closed under inversion")
        gens = self.generators or self.elements
        for x in gens:
            for y in self.elements:
                if G.mul(y, x) not in eset:
                    raise GroupError("subgroup not closed under products")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> frozenset[int]:
        return self._set

    def __contains__(self, i: int) -> bool:
        return i in self._set

    @property
    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def is_normal(self) -> bool:
        G = self.parent
        gens = G.generators or range(G.order)
        for g in gens:
            ginv = G.inv(g)
            for x in (self.generators or self.elements):
                if G.mul(ginv, G.mul(x, g)) not in self._set:
                    return False
        return True

    @cached_property
    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; raw values are parent indices."""
        G = self.parent
        return FiniteGroup(
            self.elements,
            compose=G.mul,
            inverse=G.inv,
            identity=0,
            generators=list(self.generators) or None,
            name=f"{G.name}-sub{self.order}",
        )

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name})"


def generated_subgroup(G: FiniteGroup, generators) -> Subgroup:
    gens = tuple(sorted(set(g for g in generators if g != 0)))
    return Subgroup(G, subgroup_closure(G, gens), gens)


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets gH as sorted tuples, ordered by minimal element."""
    seen = [False] * G.order
    cosets = []
    for g in range(G.order):
        if seen[g]:
            continue
        coset = tuple(sorted(G.mul(g, h) for h in H.elements))
        for x in coset:
            seen[x] = True
        cosets.append(coset)
    return cosets


def coset_transversal(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Minimal-element representatives of the left cosets (identity first)."""
    return [c[0] for c in left_cosets(G, H)]


# -- group constructors -------------------------------------------------------


def group_from_permutations(generators, name="permgroup",
                            max_order=DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Closure of permutations given as tuples of 0-indexed images."""
    gens = [tuple(g) for g in generators]
    degree = len(gens[0]) if gens else 1
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"{g} is not a permutation of 0..{degree - 1}")
    identity = tuple(range(degree))
    members = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _perm_compose(x, g)
            if y not in members:
                if len(members) >= max_order:
                    raise GroupError(f"closure exceeds order bound {max_order}")
                members.add(y)
                frontier.append(y)
    return FiniteGroup(members, _perm_compose, _perm_inverse, identity,
                       generators=gens, name=name)


def group_from_cayley_table(table, name="tablegroup") -> FiniteGroup:
    """Group from an n x n table of indices; the identity is located and checked."""
    n = len(table)
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise GroupError("table rows must be permutations of 0..n-1")
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != list(range(n)):
            raise GroupError("table columns must be permutations of 0..n-1")
    identity = next(
        (e for e in range(n)
         if all(table[e][j] == j for j in range(n))
         and all(table[i][e] == i for i in range(n))),
        None,
    )
    if identity is None:
        raise GroupError("table has no identity")
    if n <= 64:
        triples = iter_product(range(n), repeat=3)
    else:
        import random

        rng = random.Random(0xC0FFEE)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(4096))
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError("table is not associative")
    inv = [0] * n
    for i in range(n):
        inv[i] = next(j for j in range(n) if table[i][j] == identity)
    return FiniteGroup(
        range(n),
        compose=lambda a, b: table[a][b],
        inverse=lambda a: inv[a],
        identity=identity,
        name=name,
    )


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("order must be positive")
    if n == 1:
        return group_from_permutations([], name="C1")
    cycle = tuple(list(range(1, n)) + [0])
    return group_from_permutations([cycle], name=f"C{n}")


def symmetric_group(n: int) -> FiniteGroup:
    if n <= 1:
        return group_from_permutations([], name=f"S{n}")
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return group_from_permutations([swap, cycle], name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if n <= 2:
        return group_from_permutations([], name=f"A{n}")
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n == 3:
        return group_from_permutations([three], name="A3")
    if n % 2:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = tuple([0] + list(range(2, n)) + [1])
    return group_from_permutations([three, big], name=f"A{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on n points."""
    if n < 2:
        raise GroupError("dihedral group needs n >= 2")
    rot = tuple(list(range(1, n)) + [0])
    flip = tuple((n - i) % n for i in range(n))
    return group_from_permutations([rot, flip], name=f"D{n}")


def quaternion_group() -> FiniteGroup:
    """The quaternion group of order 8, elements x^a y^b with y x = x^-1 y."""

    def compose(u, v):
        a, b = u
        c, d = v
        e = (a + (c if b == 0 else -c) + (2 if b and d else 0)) % 4
        return (e, b ^ d)

    def inverse(u):
        a, b = u
        if b == 0:
            return ((-a) % 4, 0)
        return ((a + 2) % 4, 1)

    elements = [(a, b) for a in range(4) for b in range(2)]
    return FiniteGroup(elements, compose, inverse, (0, 0),
                       generators=[(1, 0), (0, 1)], name="Q8")


def elementary_abelian_group(p: int, k: int) -> FiniteGroup:
    if not is_prime(p) or k < 1:
        raise GroupError("need a prime p and k >= 1")

    def compose(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    def inverse(u):
        return tuple((-a) % p for a in u)

    elements = list(iter_product(range(p), repeat=k))
    gens = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
    return FiniteGroup(elements, compose, inverse, (0,) * k,
                       generators=gens, name=f"E{p}^{k}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    def compose(u, v):
        return (G.mul(u[0], v[0]), H.mul(u[1], v[1]))

    def inverse(u):
        return (G.inv(u[0]), H.inv(u[1]))

    elements = list(iter_product(range(G.order), range(H.order)))
    gens = [(g, 0) for g in G.generators] + [(0, h) for h in H.generators]
    return FiniteGroup(elements, compose, inverse, (0, 0),
                       generators=gens, name=f"{G.name}x{H.name}")


def direct_power(H: FiniteGroup, k: int) -> FiniteGroup:
    """H^k with raw values the k-tuples of H element indices."""
    if k < 1:
        raise GroupError("power must be positive")

    def compose(u, v):
        return tuple(H.mul(a, b) for a, b in zip(u, v))

    def inverse(u):
        return tuple(H.inv(a) for a in u)

    elements = list(iter_product(range(H.order), repeat=k))
    gens = []
    for pos in range(k):
        for g in H.generators:
            gens.append(tuple(g if i == pos else 0 for i in range(k)))
    return FiniteGroup(elements, compose, inverse, (0,) * k,
                       generators=gens, name=f"{H.name}^{k}")


def heisenberg_group(p: int) -> FiniteGroup:
    """Unitriangular 3x3 group over F_p: extraspecial of order p^3, exponent p
    for odd p (p = 2 gives the dihedral group of order 8)."""
    if not is_prime(p):
        raise GroupError("p must be prime")

    def compose(u, v):
        a, b, c = u
        d, e, f = v
        return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)

    def inverse(u):
        a, b, c = u
        return ((-a) % p, (-b) % p, (a * b - c) % p)

    elements = list(iter_product(range(p), repeat=3))
    return FiniteGroup(elements, compose, inverse, (0, 0, 0),
                       generators=[(1, 0, 0), (0, 1, 0)], name=f"Heis{p}")


def extraspecial_exponent_p2_group(p: int) -> FiniteGroup:
    """The other extraspecial group of order p^3: C_(p^2) semidirect C_p,
    the generator of C_p acting by x -> x^(1+p) (p = 2 gives the quaternions
    up to isomorphism of tables, but use quaternion_group for Q8)."""
    if not is_prime(p):
        raise GroupError("p must be prime")
    p2 = p * p

    def compose(u, v):
        i, j = u
        k, l = v
        return ((i + k * pow(1 + p, j, p2)) % p2, (j + l) % p)

    def inverse(u):
        i, j = u
        k = (-j) % p
        return ((-i * pow(1 + p, k, p2)) % p2, k)

    elements = [(i, j) for i in range(p2) for j in range(p)]
    return FiniteGroup(elements, compose, inverse, (0, 0),
                       generators=[(1, 0), (0, 1)], name=f"ES{p}^3+")


# -- normal subgroup lattice ---------------------------------------------------


def _closure_of_class_union(G: FiniteGroup, class_elems) -> Subgroup:
    """Subgroup generated by a conjugation-closed element set (hence normal)."""
    gens: list[int] = []
    members: tuple[int, ...] = (0,)
    mset = {0}
    for c in class_elems:
        if c not in mset:
            gens.append(c)
            members = subgroup_closure(G, gens)
            mset = set(members)
    return Subgroup(G, members, tuple(sorted(gens)))


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes."""
    closures = {}
    base = []
    for cls in G.conjugacy_classes:
        if cls == (0,):
            continue
        N = _closure_of_class_union(G, cls)
        if N.elements not in closures:
            closures[N.elements] = N
            base.append(N)
    found = {(0,): G.trivial_subgroup()}
    for N in base:
        found.setdefault(N.elements, N)
    frontier = list(base)
    while frontier:
        A = frontier.pop()
        for B in list(found.values()):
            if B.order == 1:
                continue
            if set(B.elements) <= set(A.elements) or set(A.elements) <= set(B.elements):
                continue
            gens = tuple(sorted(set(A.generators) | set(B.generators)))
            J = Subgroup(G, subgroup_closure(G, gens), gens)
            if J.elements not in found:
                found[J.elements] = J
                frontier.append(J)
    full = tuple(range(G.order))
    if full not in found:
        found[full] = Subgroup(G, full, tuple(G.generators))
    return sorted(found.values(), key=lambda S: (S.order, S.elements))


def is_simple(G: FiniteGroup) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


def longest_normal_chain(subgroups: list[Subgroup]) -> int:
    """Longest chain under inclusion in the given list (endpoints included)."""
    order = sorted(subgroups, key=lambda S: S.order)
    sets = [set(S.elements) for S in order]
    best = [1] * len(order)
    for i in range(len(order)):
        for j in range(i):
            if len(sets[j]) < len(sets[i]) and sets[j] <= sets[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


# -- wreath products and the coset embedding ----------------------------------


class WreathProduct:
    """Gamma wr H for a permutation group Gamma on n points and a base H.

    Elements are written sigma.(h_1, ..., h_n) and stored raw as
    (sigma, (i_1, ..., i_n)) with sigma an image tuple and i_k indices into H.
    Conjugation satisfies sigma^-1 (h_1,...,h_n) sigma = (h_sigma(1), ...,
    h_sigma(n)), which forces the product rule used here.  Composition is lazy:
    the full product is only enumerated by group().
    """

    def __init__(self, base: FiniteGroup, top_perms):
        self.base = base
        self.top = sorted(set(tuple(t) for t in top_perms))
        self.n = len(self.top[0])
        ident = tuple(range(self.n))
        if ident not in self.top:
            raise GroupError("top permutation set must contain the identity")
        for a in self.top:
            if len(a) != self.n or sorted(a) != list(range(self.n)):
                raise GroupError("top elements must be permutations")
            if _perm_inverse(a) not in self.top:
                raise GroupError("top permutation set must be a group")
        self.top_identity = ident
        self.identity = (ident, (0,) * self.n)

    @property
    def order(self) -> int:
        return len(self.top) * self.base.order**self.n

    def compose(self, u, v):
        s1, h1 = u
        s2, h2 = v
        mul = self.base.mul
        return (
            _perm_compose(s1, s2),
            tuple(mul(h1[s2[i]], h2[i]) for i in range(self.n)),
        )

    def inverse(self, u):
        s, h = u
        sinv = _perm_inverse(s)
        inv = self.base.inv
        return (sinv, tuple(inv(h[sinv[i]]) for i in range(self.n)))

    def base_element(self, h_indices) -> tuple:
        return (self.top_identity, tuple(h_indices))

    def top_element(self, sigma) -> tuple:
        return (tuple(sigma), (0,) * self.n)

    def group(self, max_order=DEFAULT_MAX_ORDER) -> FiniteGroup:
        """Enumerate the full wreath product (within the order bound)."""
        if self.order > max_order:
            raise GroupError(
                f"wreath product order {self.order} exceeds bound {max_order}"
            )
        elements = [
            (s, h)
            for s in self.top
            for h in iter_product(range(self.base.order), repeat=self.n)
        ]
        gens = [self.top_element(s) for s in _generating_perms(self.top)]
        for g in self.base.generators:
            gens.append(self.base_element([g] + [0] * (self.n - 1)))
        return FiniteGroup(elements, self.compose, self.inverse, self.identity,
                           generators=gens,
                           name=f"{len(self.top)}wr{self.base.name}")

    def subgroup_from_raw(self, raws, name="wreath-sub",
                          max_order=DEFAULT_MAX_ORDER) -> FiniteGroup:
        """Closure of raw wreath elements as a standalone FiniteGroup."""
        members = {self.identity}
        frontier = [self.identity]
        gens = [tuple(r) if not isinstance(r, tuple) else r for r in raws]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.compose(x, g)
                if y not in members:
                    if len(members) >= max_order:
                        raise GroupError(f"closure exceeds order bound {max_order}")
                    members.add(y)
                    frontier.append(y)
        return FiniteGroup(members, self.compose, self.inverse, self.identity,
                           generators=gens, name=name)


def _generating_perms(perms) -> list[tuple[int, ...]]:
    ident = tuple(range(len(perms[0])))
    gens: list[tuple[int, ...]] = []
    reached = {ident}
    for p in perms:
        if p not in reached:
            gens.append(p)
            frontier = list(reached)
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = _perm_compose(x, g)
                    if y not in reached:
                        reached.add(y)
                        frontier.append(y)
    return gens


def cyclic_rotations(n: int) -> list[tuple[int, ...]]:
    """The cyclic group generated by i -> i+1 mod n, as image tuples."""
    rot = tuple(list(range(1, n)) + [0])
    out = [tuple(range(n))]
    cur = rot
    while cur != out[0]:
        out.append(cur)
        cur = _perm_compose(cur, rot)
    return out


def wreath_cyclic(H: FiniteGroup, ell: int) -> WreathProduct:
    """C_ell wr H with the cyclic group rotating the ell coordinates."""
    if ell < 1:
        raise GroupError("ell must be >= 1")
    return WreathProduct(H, cyclic_rotations(ell))


@dataclass(frozen=True)
class WreathEmbedding:
    """The coset embedding G -> S_n wr H for H of index n.

    images[g] = (sigma_g, (t_1, ..., t_n)) with t_i = gamma_(sigma_g(i))^-1 g
    gamma_i in H; sigma_g is left translation on the cosets gamma_i H.  The
    t_i are stored as indices into H.as_group.
    """

    wreath: WreathProduct
    images: tuple[tuple, ...]
    transversal: tuple[int, ...]
    subgroup: Subgroup

    def image_of(self, g: int):
        return self.images[g]


def embed_in_wreath(G: FiniteGroup, H: Subgroup,
                    transversal=None) -> WreathEmbedding:
    """Embed G into S_n wr H via a left-coset transversal.

    g maps to sigma_g.(t_1, ..., t_n) where g gamma_i lies in the coset
    gamma_(sigma_g(i)) H and t_i = gamma_(sigma_g(i))^-1 g gamma_i.  Changing
    the transversal changes the image only by an inner automorphism of the
    wreath product.
    """
    cosets = left_cosets(G, H)
    n = len(cosets)
    if transversal is None:
        transversal = [c[0] for c in cosets]
    transversal = list(transversal)
    if len(transversal) != n:
        raise GroupError(f"transversal must have {n} entries")
    hit = set()
    for t in transversal:
        c_idx = next(i for i, c in enumerate(cosets) if t in c)
        hit.add(c_idx)
    if len(hit) != n:
        raise GroupError("invalid transversal: cosets repeated or missed")
    Hgroup = H.as_group
    images = []
    sigmas = set()
    for g in range(G.order):
        sigma = [0] * n
        parts = [0] * n
        for i, gamma in enumerate(transversal):
            gg = G.mul(g, gamma)
            target = next(
                j for j, t in enumerate(transversal)
                if G.mul(G.inv(t), gg) in H
            )
            sigma[i] = target
            parts[i] = Hgroup.index[G.mul(G.inv(transversal[target]), gg)]
        images.append((tuple(sigma), tuple(parts)))
        sigmas.add(tuple(sigma))
    # close the sigma images into the top permutation group
    frontier = list(sigmas)
    top = set(sigmas)
    top.add(tuple(range(n)))
    while frontier:
        x = frontier.pop()
        for y in list(top):
            z = _perm_compose(x, y)
            if z not in top:
                top.add(z)
                frontier.append(z)
    W = WreathProduct(Hgroup, top)
    return WreathEmbedding(W, tuple(images), tuple(transversal), H)


# -- classifiers ---------------------------------------------------------------


@dataclass(frozen=True)
class GoursatResult:
    """Either the full power H^ell, or a twisted diagonal given by the
    automorphisms phi_2, ..., phi_ell of H (phi_1 is the identity)."""

    full: bool
    automorphisms: tuple[tuple[int, ...], ...] = ()


def _rotate(t: tuple, k: int = 1) -> tuple:
    return t[k:] + t[:k]


def goursat_classify(Hp, H: FiniteGroup, ell: int) -> GoursatResult:
    """Classify a shift-stable subgroup of H^ell surjecting onto the first
    factor, for simple H and prime ell: it is full or a twisted diagonal."""
    if isinstance(Hp, Subgroup):
        elems = [Hp.parent.elements[i] for i in Hp.elements]
    else:
        elems = [tuple(t) for t in Hp]
    eset = set(elems)
    if not is_prime(ell):
        raise GroupError(f"ell = {ell} must be prime")
    for t in elems:
        if len(t) != ell:
            raise GroupError("elements must be ell-tuples")
    for t in elems:
        if _rotate(t) not in eset:
            raise GroupError("subgroup is not stable under the coordinate shift")
    first = {t[0] for t in elems}
    if len(first) != H.order:
        raise GroupError("subgroup does not surject onto the first factor")
    if not is_simple(H):
        raise GroupError("base group is not simple")
    if len(elems) == H.order**ell:
        return GoursatResult(full=True)
    by_first = {}
    for t in elems:
        if t[0] in by_first:
            raise GoursatDichotomyError(
                "subgroup is neither full nor a graph over the first factor "
                "(possible only for an abelian base with ell > 2)"
            )
        by_first[t[0]] = t
    phis = []
    for j in range(1, ell):
        phi = tuple(by_first[h][j] for h in range(H.order))
        if sorted(phi) != list(range(H.order)):
            raise GroupError("coordinate map is not a bijection")
        for a in range(H.order):
            for b in range(H.order):
                if phi[H.mul(a, b)] != H.mul(phi[a], phi[b]):
                    raise GroupError("coordinate map is not an automorphism")
        phis.append(phi)
    rebuilt = {tuple([h] + [phi[h] for phi in phis]) for h in range(H.order)}
    if rebuilt != eset:
        raise GroupError("twisted diagonal reconstruction failed")
    return GoursatResult(full=False, automorphisms=tuple(phis))


@dataclass(frozen=True)
class WreathCaseReport:
    """Classification of a subgroup of C_ell wr H covering the top C_ell."""

    case: str  # "full_wreath" or "semidirect"
    abelian_base: bool
    goursat: GoursatResult
    normal_subgroup_orders: tuple[int, ...]
    max_normal_chain_length: int
    chain_bound_ok: bool | None
    trichotomy_ok: bool | None
    direct_product: bool | None
    complement_witness: tuple | None
    normal_subgroups: tuple[Subgroup, ...] = field(compare=False, default=())


def classify_wreath_subgroup(W: WreathProduct,
                             gbar: FiniteGroup) -> WreathCaseReport:
    """Case analysis for subgroups of C_ell wr H covering the top.

    Either the base intersection is all of H^ell (full wreath case) or it is a
    twisted diagonal copy of H (semidirect case).  For non-abelian simple H
    the normal subgroups are verified to be exactly 1, the base intersection
    and the whole group, and no normal chain is longer than 3; for abelian H
    the trichotomy fails (diagonals become normal) so it is only flagged.
    In the semidirect case a direct-product complement is searched for.
    """
    ell = W.n
    if not is_prime(ell):
        raise GroupError(f"top degree ell = {ell} must be prime")
    if len(W.top) != ell:
        raise GroupError("top group must be the cyclic rotation group")
    H = W.base
    if not is_simple(H):
        raise GroupError("base group is not simple")
    abelian = H.is_abelian()
    tops = {gbar.elements[i][0] for i in range(gbar.order)}
    if len(tops) != ell:
        raise GroupError("subgroup does not cover the top cyclic group")
    kernel_raws = [gbar.elements[i] for i in range(gbar.order)
                   if gbar.elements[i][0] == W.top_identity]
    base_tuples = [h for (_, h) in kernel_raws]
    goursat = goursat_classify(base_tuples, H, ell)
    case = "full_wreath" if goursat.full else "semidirect"

    normals = normal_subgroups(gbar)
    orders = tuple(S.order for S in normals)
    chain = longest_normal_chain(normals)

    direct_product = None
    witness = None
    if case == "semidirect":
        direct_product = False
        kernel_idx = [gbar.index[r] for r in kernel_raws]
        kgens = generated_subgroup(gbar, kernel_idx).generators or tuple(kernel_idx)
        for t in range(1, gbar.order):
            if gbar.elements[t][0] == W.top_identity:
                continue
            if gbar.element_order(t) != ell:
                continue
            if all(gbar.mul(t, k) == gbar.mul(k, t) for k in kgens):
                direct_product = True
                witness = gbar.elements[t]
                break

    trichotomy_ok = None
    chain_ok = None
    if not abelian:
        chain_ok = chain <= 3
        if not direct_product:
            # the only normal subgroups are 1, the base intersection, the whole
            kernel_set = frozenset(gbar.index[r] for r in kernel_raws)
            expected = {frozenset({0}), kernel_set, frozenset(range(gbar.order))}
            trichotomy_ok = {frozenset(S.elements) for S in normals} == expected
    return WreathCaseReport(
        case=case,
        abelian_base=abelian,
        goursat=goursat,
        normal_subgroup_orders=orders,
        max_normal_chain_length=chain,
        chain_bound_ok=chain_ok,
        trichotomy_ok=trichotomy_ok,
        direct_product=direct_product,
        complement_witness=witness,
        normal_subgroups=tuple(normals),
    )


# -- automorphisms -------------------------------------------------------------


def _hom_from_generator_images(G: FiniteGroup, gens: list[int],
                               images: list[int]) -> list[int] | None:
    """Total map G -> G extending gens -> images multiplicatively, or None."""
    f = {0: 0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        fx = f[x]
        for g, img in zip(gens, images):
            y = G.mul(x, g)
            fy = G.mul(fx, img)
            if y in f:
                if f[y] != fy:
                    return None
            else:
                f[y] = fy
                frontier.append(y)
    if len(f) != G.order:
        return None
    return [f[i] for i in range(G.order)]


def _greedy_generating_sequence(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    size = 1
    while size < G.order:
        best, best_size = None, size
        for cand in range(1, G.order):
            trial = subgroup_closure(G, gens + [cand])
            if len(trial) > best_size:
                best, best_size = cand, len(trial)
                if best_size == G.order:
                    break
        gens.append(best)
        size = best_size
    return gens


def automorphism_count(G: FiniteGroup, search_bound=2_000_000) -> int:
    """|Aut(G)| by exhaustive search over generator images."""
    if G.order == 1:
        return 1
    gens = _greedy_generating_sequence(G)
    class_sizes = {i: len(G.conjugacy_classes[G.class_of[i]])
                   for i in range(G.order)}
    orders = [G.element_order(i) for i in range(G.order)]
    candidate_lists = []
    space = 1
    for g in gens:
        cands = [x for x in range(G.order)
                 if orders[x] == orders[g] and class_sizes[x] == class_sizes[g]]
        candidate_lists.append(cands)
        space *= len(cands)
    if space > search_bound:
        raise GroupError(
            f"automorphism search space {space} exceeds bound {search_bound}"
        )
    count = 0
    for images in iter_product(*candidate_lists):
        f = _hom_from_generator_images(G, gens, list(images))
        if f is not None and len(set(f)) == G.order:
            count += 1
    return count


def outer_automorphism_order(G: FiniteGroup, search_bound=2_000_000) -> int:
    """|Aut(G)| / |Inn(G)| by brute-force automorphism enumeration."""
    aut = automorphism_count(G, search_bound)
    inn = G.order // len(G.center)
    if aut % inn:
        raise AssertionError("inner automorphisms must divide the total count")
    return aut // inn


def select_prime(excluded, forbidden_divisors) -> int:
    """Smallest prime outside `excluded` dividing no entry of the list."""
    excluded = set(excluded)
    forbidden = [abs(int(x)) for x in forbidden_divisors]
    if any(x == 0 for x in forbidden):
        raise GroupError("zero is divisible by every prime")
    ell = 2
    while True:
        if is_prime(ell) and ell not in excluded and all(x % ell for x in forbidden):
            return ell
        ell += 1
