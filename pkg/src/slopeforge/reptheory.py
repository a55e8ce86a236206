"""Characters of finite groups over exact cyclotomic scalars.

Class functions are value vectors indexed by the conjugacy classes of their
group.  Complete character tables are computed with the Dixon-Schneider
modular method: the class-sum matrices are simultaneously diagonalized over a
prime field F_ell with ell = 1 mod exponent(G), degrees and values are read
off mod ell, and the values are lifted to exact cyclotomic numbers through
the discrete Fourier coefficients of the power map.  Matrix representations
over cyclotomics exist as oracles for induction and tensor induction.

Conjugation of character values is realized by evaluating at inverse
elements, so no complex-conjugation operation on scalars is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt

import numpy as np

from .exactnum import Cyclotomic, is_prime
from .groups import FiniteGroup, Subgroup, left_cosets
from . import modp

DEFAULT_TABLE_BOUND = 2000
MATRIX_GROUP_BOUND = 100
MATRIX_DIM_BOUND = 8


class RepTheoryError(ValueError):
    pass


@dataclass(frozen=True)
class ClassFunction:
    """A cyclotomic-valued function on the conjugacy classes of a group."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.conjugacy_classes):
            raise RepTheoryError("one value per conjugacy class required")

    @property
    def degree(self) -> Fraction:
        """Value at the identity class."""
        return self.values[0].rational_value()

    def value_at(self, element: int) -> Cyclotomic:
        return self.values[self.group.class_of[element]]

    def dual(self) -> ClassFunction:
        """g -> value at g^-1."""
        inv = self.group.inverse_class
        return ClassFunction(self.group,
                             tuple(self.values[inv[c]] for c in range(len(self.values))))

    def _check_same_group(self, other):
        if self.group is not other.group:
            raise RepTheoryError("class functions live on different groups")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check_same_group(other)
        return ClassFunction(self.group,
                             tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check_same_group(other)
        return ClassFunction(self.group,
                             tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check_same_group(other)
            return ClassFunction(self.group,
                                 tuple(a * b for a, b in zip(self.values, other.values)))
        scalar = Cyclotomic.coerce(other)
        return ClassFunction(self.group, tuple(scalar * v for v in self.values))

    __rmul__ = __mul__

    def power(self, n: int) -> ClassFunction:
        out = trivial_character(self.group)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __hash__(self):
        return hash((id(self.group), len(self.values)))

    def __repr__(self):
        return f"ClassFunction({self.group.name}, {[str(v) for v in self.values]})"


def trivial_character(G: FiniteGroup) -> ClassFunction:
    one = Cyclotomic.rational(1)
    return ClassFunction(G, (one,) * len(G.conjugacy_classes))


def regular_character(G: FiniteGroup) -> ClassFunction:
    vals = [Cyclotomic.rational(0)] * len(G.conjugacy_classes)
    vals[0] = Cyclotomic.rational(G.order)
    return ClassFunction(G, tuple(vals))


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over g of chi(g) psi(g^-1), computed classwise."""
    chi._check_same_group(psi)
    G = chi.group
    inv = G.inverse_class
    total = Cyclotomic.rational(0)
    for c, cls in enumerate(G.conjugacy_classes):
        total = total + len(cls) * (chi.values[c] * psi.values[inv[c]])
    return total * Fraction(1, G.order)


def inner_product_int(chi: ClassFunction, psi: ClassFunction) -> int:
    val = inner_product(chi, psi)
    return val.integer_value()


def restrict(chi: ClassFunction, H: Subgroup) -> ClassFunction:
    """Transport values along the class fusion of H into its parent."""
    if H.parent is not chi.group:
        raise RepTheoryError("subgroup does not live in the character's group")
    Hg = H.as_group
    vals = tuple(chi.value_at(Hg.elements[rep]) for rep in Hg.class_representatives)
    return ClassFunction(Hg, vals)


def conjugate_character(chi: ClassFunction, H: Subgroup, gamma: int) -> ClassFunction:
    """The conjugate character h -> chi(gamma^-1 h gamma) on a normal subgroup."""
    G = H.parent
    if not H.is_normal():
        raise RepTheoryError("conjugation needs a normal subgroup")
    if chi.group is not H.as_group:
        raise RepTheoryError("character must live on the subgroup")
    Hg = H.as_group
    ginv = G.inv(gamma)
    vals = []
    for rep in Hg.class_representatives:
        h = Hg.elements[rep]
        vals.append(chi.value_at(Hg.index[G.mul(ginv, G.mul(h, gamma))]))
    return ClassFunction(Hg, tuple(vals))


def induce(chi: ClassFunction, H: Subgroup) -> ClassFunction:
    """Frobenius induced character (1/|H|) sum over x with x^-1 g x in H."""
    G = H.parent
    Hg = H.as_group
    if chi.group is not Hg:
        raise RepTheoryError("character must live on the subgroup")
    vals = []
    for cls in G.conjugacy_classes:
        g = cls[0]
        total = Cyclotomic.rational(0)
        for x in range(G.order):
            y = G.mul(G.inv(x), G.mul(g, x))
            if y in H:
                total = total + chi.value_at(Hg.index[y])
        vals.append(total * Fraction(1, H.order))
    return ClassFunction(G, tuple(vals))


def tensor_induce(chi: ClassFunction, H: Subgroup,
                  transversal=None) -> ClassFunction:
    """Tensor-induced character via the cycle decomposition on G/H.

    The value at g is the product over the orbits O of g on the cosets
    gamma_i H of chi(gamma_i^-1 g^|O| gamma_i) for any coset representative
    gamma_i in O; the result does not depend on the transversal.  The degree
    is deg(chi)^[G:H].
    """
    G = H.parent
    Hg = H.as_group
    if chi.group is not Hg:
        raise RepTheoryError("character must live on the subgroup")
    cosets = left_cosets(G, H)
    n = len(cosets)
    if transversal is None:
        transversal = [c[0] for c in cosets]
    if len(transversal) != n:
        raise RepTheoryError("transversal size mismatch")
    coset_of = {}
    for idx, c in enumerate(cosets):
        for x in c:
            coset_of[x] = idx
    slot_of = [coset_of[t] for t in transversal]
    if sorted(slot_of) != list(range(n)):
        raise RepTheoryError("invalid transversal")
    vals = []
    for cls in G.conjugacy_classes:
        g = cls[0]
        # permutation of transversal slots induced by left translation
        perm = [0] * n
        for i, gamma in enumerate(transversal):
            target_coset = coset_of[G.mul(g, gamma)]
            perm[i] = slot_of.index(target_coset)
        value = Cyclotomic.rational(1)
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            gamma = transversal[i]
            inside = G.mul(G.inv(gamma), G.mul(G.power(g, length), gamma))
            value = value * chi.value_at(Hg.index[inside])
        vals.append(value)
    return ClassFunction(G, tuple(vals))


def mackey_check(V: ClassFunction, W: ClassFunction,
                 H: Subgroup) -> tuple[bool, dict]:
    """Ind(V) Ind(W) = sum over transversal of Ind(conj(V) W), H normal."""
    G = H.parent
    if not H.is_normal():
        raise RepTheoryError("the decomposition needs a normal subgroup")
    lhs = induce(V, H) * induce(W, H)
    transversal = [c[0] for c in left_cosets(G, H)]
    rhs = None
    for gamma in transversal:
        term = induce(conjugate_character(V, H, gamma) * W, H)
        rhs = term if rhs is None else rhs + term
    ok = lhs == rhs
    witness = {
        "lhs": [str_of_cyclotomic(v) for v in lhs.values],
        "rhs": [str_of_cyclotomic(v) for v in rhs.values],
    }
    return ok, witness


def str_of_cyclotomic(v: Cyclotomic) -> str:
    from .exactnum import rational_to_str

    if v.is_rational:
        return rational_to_str(v.rational_value())
    return "z%d:[%s]" % (v.conductor, ",".join(rational_to_str(c) for c in v.coeffs))


# -- character tables (Dixon-Schneider) ---------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    irreducibles: tuple[ClassFunction, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(chi.degree) for chi in self.irreducibles)

    def decompose(self, chi: ClassFunction) -> tuple[int, ...]:
        """Multiplicities of chi over the irreducibles (must be integers)."""
        mults = []
        for irr in self.irreducibles:
            mults.append(inner_product(chi, irr).integer_value())
        return tuple(mults)

    def is_character(self, chi: ClassFunction) -> bool:
        try:
            return all(m >= 0 for m in self.decompose(chi))
        except ValueError:
            return False


def _class_matrices(G: FiniteGroup) -> list[np.ndarray]:
    r = len(G.conjugacy_classes)
    class_of = G.class_of
    reps = G.class_representatives
    mats = [np.zeros((r, r), dtype=np.int64) for _ in range(r)]
    for k, z in enumerate(reps):
        for x in range(G.order):
            i = class_of[x]
            j = class_of[G.mul(G.inv(x), z)]
            mats[i][j, k] += 1
    return mats


def _find_modulus(G: FiniteGroup) -> int:
    e = G.exponent
    ell = e + 1
    floor_bound = 2 * isqrt(G.order) + 1
    while True:
        if ell > floor_bound and is_prime(ell):
            return ell
        ell += e if e > 1 else 1


def _primitive_root_of_unity(ell: int, e: int) -> int:
    for g in range(2, ell):
        w = pow(g, (ell - 1) // e, ell)
        ok = w != 1 or e == 1
        for q in _prime_factors(e):
            if pow(w, e // q, ell) == 1:
                ok = False
                break
        if ok:
            return w
    raise AssertionError("no primitive root found")


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _split_eigenvectors(mats: list[np.ndarray], ell: int) -> list[np.ndarray]:
    """Common eigenvectors (one per character) of the commuting class matrices."""
    r = mats[0].shape[0]
    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for idx in range(1, r):
        if all(basis.shape[0] == 1 for basis, _ in spaces):
            break
        M = mats[idx]
        new_spaces = []
        for basis, pivots in spaces:
            d = basis.shape[0]
            if d == 1:
                new_spaces.append((basis, pivots))
                continue
            action = np.zeros((d, d), dtype=np.int64)
            for b in range(d):
                img = (M @ basis[b]) % ell
                action[b] = modp.coords_in_rref_basis(img, basis, pivots, ell)
            # in row coordinates c the action is c -> c @ action
            cp = modp.charpoly(action, ell)
            for root in modp.distinct_roots(cp, ell, seed=idx):
                shifted = (action - root * np.eye(d, dtype=np.int64)) % ell
                ker = modp.kernel_basis(shifted.T, ell)
                sub = (ker @ basis) % ell
                sub_r, sub_p = modp.rref(sub, ell)
                new_spaces.append((sub_r, sub_p))
        spaces = new_spaces
    if any(basis.shape[0] != 1 for basis, _ in spaces):
        raise AssertionError("class matrices failed to split to common eigenvectors")
    return [basis[0] for basis, _ in spaces]


def character_table(G: FiniteGroup,
                    max_order: int = DEFAULT_TABLE_BOUND) -> CharacterTable:
    """Complete irreducible character table with exact cyclotomic values."""
    if G.order > max_order:
        raise RepTheoryError(
            f"group order {G.order} exceeds the table bound {max_order}"
        )
    return _character_table_cached(G)


_TABLE_CACHE: dict[int, CharacterTable] = {}


def _character_table_cached(G: FiniteGroup) -> CharacterTable:
    cached = _TABLE_CACHE.get(id(G))
    if cached is not None and cached.group is G:
        return cached
    table = _dixon_schneider(G)
    _TABLE_CACHE[id(G)] = table
    return table


def _dixon_schneider(G: FiniteGroup) -> CharacterTable:
    classes = G.conjugacy_classes
    r = len(classes)
    reps = G.class_representatives
    sizes = [len(c) for c in classes]
    inv_class = G.inverse_class
    if r == 1:
        table = CharacterTable(G, (trivial_character(G),))
        _verify_table_degrees(table)
        return table
    e = G.exponent
    ell = _find_modulus(G)
    omega = _primitive_root_of_unity(ell, e)
    mats = _class_matrices(G)
    vectors = _split_eigenvectors(mats, ell)

    order_mod = G.order % ell
    size_inv = [modp.inv_mod(s, ell) for s in sizes]
    chars_mod = []
    degrees = []
    for v in vectors:
        v = (v * modp.inv_mod(int(v[0]), ell)) % ell
        s = 0
        for k in range(r):
            s = (s + int(v[k]) * int(v[inv_class[k]]) * size_inv[k]) % ell
        d_sq = (order_mod * modp.inv_mod(s, ell)) % ell
        d = next((x for x in range(1, isqrt(G.order) + 1)
                  if (x * x) % ell == d_sq), None)
        if d is None:
            raise AssertionError("degree lift failed")
        degrees.append(d)
        chars_mod.append([(d * int(v[k]) * size_inv[k]) % ell for k in range(r)])
    if sum(d * d for d in degrees) != G.order:
        raise AssertionError("sum of squared degrees must equal the group order")

    # power maps: class of rep^t for each class
    power_classes = []
    orders = []
    for k, g in enumerate(reps):
        m = G.element_order(g)
        orders.append(m)
        row = [0] * m
        x = 0
        for t in range(m):
            row[t] = G.class_of[x]
            x = G.mul(x, g)
        power_classes.append(row)

    # lift all characters at once per class: the vector of root-of-unity
    # multiplicities is the inverse DFT of the power-map values mod ell
    chars_np = np.array(chars_mod, dtype=np.int64)  # rows chi, cols classes
    value_coeffs: list[list[list[int]]] = [[None] * r for _ in chars_mod]
    for k in range(r):
        m = orders[k]
        wm_inv = modp.inv_mod(pow(omega, e // m, ell), ell)
        m_inv = modp.inv_mod(m, ell)
        powers = np.empty(m, dtype=np.int64)
        acc = 1
        for t in range(m):
            powers[t] = acc
            acc = (acc * wm_inv) % ell
        dft = np.empty((m, m), dtype=np.int64)
        for u in range(m):
            dft[u] = powers[(u * np.arange(m)) % m]
        pow_vals = chars_np[:, power_classes[k]]  # (nchars, m)
        cs = (dft @ pow_vals.T) % ell
        cs = (cs * m_inv) % ell  # (m, nchars)
        for i, d in enumerate(degrees):
            col = cs[:, i]
            if (col > d).any():
                raise AssertionError("eigenvalue multiplicity lift out of range")
            value_coeffs[i][k] = [int(c) for c in col]

    irreducibles = []
    for i, d in enumerate(degrees):
        values = []
        for k in range(r):
            values.append(Cyclotomic(orders[k], value_coeffs[i][k]))
        if values[0] != Cyclotomic.rational(d):
            raise AssertionError("lifted degree mismatch")
        irreducibles.append(ClassFunction(G, tuple(values)))

    # deterministic order: trivial character first, then by degree and values
    def sort_key(chi: ClassFunction):
        return (int(chi.degree),
                [(v.conductor, v.coeffs) for v in chi.values])

    triv = trivial_character(G)
    rest = sorted((c for c in irreducibles if c != triv), key=sort_key)
    table = CharacterTable(G, (triv,) + tuple(rest))
    if len(table.irreducibles) != r:
        raise AssertionError("table must have one irreducible per class")
    _verify_table_degrees(table)
    _verify_orthogonality_mod(table, chars_mod, degrees, ell)
    return table


def _verify_table_degrees(table: CharacterTable):
    G = table.group
    total = 0
    for d in table.degrees:
        if d < 1 or G.order % d:
            raise AssertionError("irreducible degrees must divide the group order")
        total += d * d
    if total != G.order:
        raise AssertionError("sum of squared degrees must equal the group order")


def _verify_orthogonality_mod(table, chars_mod, degrees, ell):
    G = table.group
    r = len(chars_mod)
    sizes = [len(c) for c in G.conjugacy_classes]
    inv_class = G.inverse_class
    for i in range(r):
        for j in range(r):
            s = 0
            for k in range(r):
                s = (s + sizes[k] * chars_mod[i][k] * chars_mod[j][inv_class[k]]) % ell
            expected = G.order % ell if i == j else 0
            if s != expected:
                raise AssertionError("modular orthogonality check failed")


def irreducible_dims_gcd(G: FiniteGroup) -> int:
    """gcd of the degrees of the non-trivial irreducibles."""
    if G.order == 1:
        raise RepTheoryError("the trivial group has no non-trivial irreducible")
    table = character_table(G)
    degs = [int(chi.degree) for chi in table.irreducibles[1:]]
    return reduce(gcd, degs)


def tind_summand_check(chi: ClassFunction, H: Subgroup) -> bool:
    """(Ind chi)^(tensor n) minus TensorInd chi decomposes non-negatively."""
    G = H.parent
    n = G.order // H.order
    table = character_table(G)
    big = induce(chi, H).power(n)
    diff = big - tensor_induce(chi, H)
    try:
        mults = table.decompose(diff)
    except ValueError:
        return False
    return all(m >= 0 for m in mults)


# -- explicit matrix representations (oracles) ---------------------------------


Matrix = tuple[tuple[Cyclotomic, ...], ...]


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Cyclotomic.rational(0)
            for t in range(k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_identity(n: int) -> Matrix:
    one, zero = Cyclotomic.rational(1), Cyclotomic.rational(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def _mat_trace(A: Matrix) -> Cyclotomic:
    acc = Cyclotomic.rational(0)
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


def _mat_kronecker(A: Matrix, B: Matrix) -> Matrix:
    na, nb = len(A), len(B)
    out = []
    for i in range(na):
        for k in range(nb):
            row = []
            for j in range(na):
                for l in range(nb):
                    row.append(A[i][j] * B[k][l])
            out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class MatrixRep:
    """Invertible cyclotomic matrices, one per group element, multiplicative."""

    group: FiniteGroup
    dimension: int
    matrices: tuple[Matrix, ...]

    def matrix_of(self, g: int) -> Matrix:
        return self.matrices[g]

    def character(self) -> ClassFunction:
        vals = tuple(_mat_trace(self.matrices[rep])
                     for rep in self.group.class_representatives)
        return ClassFunction(self.group, vals)


def rep_from_generator_images(G: FiniteGroup, generator_indices,
                              images) -> MatrixRep:
    """Extend generator images multiplicatively; rejects inconsistent images."""
    if G.order > MATRIX_GROUP_BOUND:
        raise RepTheoryError(f"matrix representations bounded to |G| <= {MATRIX_GROUP_BOUND}")
    images = [tuple(tuple(Cyclotomic.coerce(x) for x in row) for row in m)
              for m in images]
    dims = {len(m) for m in images} | {len(row) for m in images for row in m}
    if len(images) != len(list(generator_indices)):
        raise RepTheoryError("need one image per generator")
    if not images:
        dim = 1
    else:
        if len(dims) != 1:
            raise RepTheoryError("generator images must be square of equal size")
        dim = dims.pop()
    if dim > MATRIX_DIM_BOUND:
        raise RepTheoryError(f"matrix representations bounded to dim <= {MATRIX_DIM_BOUND}")
    mats: dict[int, Matrix] = {0: _mat_identity(dim)}
    frontier = [0]
    gen_list = list(zip(generator_indices, images))
    while frontier:
        x = frontier.pop()
        for g, mg in gen_list:
            y = G.mul(x, g)
            my = _mat_mul(mats[x], mg)
            if y in mats:
                if mats[y] != my:
                    raise RepTheoryError("generator images are not multiplicative")
            else:
                mats[y] = my
                frontier.append(y)
    if len(mats) != G.order:
        raise RepTheoryError("generators do not generate the group")
    return MatrixRep(G, dim, tuple(mats[i] for i in range(G.order)))


def direct_sum(rep1: MatrixRep, rep2: MatrixRep) -> MatrixRep:
    if rep1.group is not rep2.group:
        raise RepTheoryError("representations live on different groups")
    zero = Cyclotomic.rational(0)
    n1, n2 = rep1.dimension, rep2.dimension
    mats = []
    for g in range(rep1.group.order):
        A, B = rep1.matrices[g], rep2.matrices[g]
        top = tuple(row + (zero,) * n2 for row in A)
        bottom = tuple((zero,) * n1 + row for row in B)
        mats.append(top + bottom)
    return MatrixRep(rep1.group, n1 + n2, tuple(mats))


def tensor(rep1: MatrixRep, rep2: MatrixRep) -> MatrixRep:
    if rep1.group is not rep2.group:
        raise RepTheoryError("representations live on different groups")
    mats = tuple(_mat_kronecker(rep1.matrices[g], rep2.matrices[g])
                 for g in range(rep1.group.order))
    return MatrixRep(rep1.group, rep1.dimension * rep2.dimension, mats)


def _embedding_data(G: FiniteGroup, H: Subgroup, transversal):
    cosets = left_cosets(G, H)
    n = len(cosets)
    if transversal is None:
        transversal = [c[0] for c in cosets]
    coset_of = {}
    for idx, c in enumerate(cosets):
        for x in c:
            coset_of[x] = idx
    slot_of = [coset_of[t] for t in transversal]
    if len(transversal) != n or sorted(slot_of) != list(range(n)):
        raise RepTheoryError("invalid transversal")
    return transversal, coset_of, slot_of, n


def _coset_permutation(G, g, transversal, coset_of, slot_of):
    n = len(transversal)
    perm = [0] * n
    for i, gamma in enumerate(transversal):
        perm[i] = slot_of.index(coset_of[G.mul(g, gamma)])
    return perm


def induced_matrix_rep(rep: MatrixRep, H: Subgroup,
                       transversal=None) -> MatrixRep:
    """Block-permutation matrices of the induced representation on V^n."""
    G = H.parent
    Hg = H.as_group
    if rep.group is not Hg:
        raise RepTheoryError("representation must live on the subgroup")
    transversal, coset_of, slot_of, n = _embedding_data(G, H, transversal)
    d = rep.dimension
    if n * d > MATRIX_DIM_BOUND:
        raise RepTheoryError("induced dimension exceeds the matrix bound")
    zero = Cyclotomic.rational(0)
    mats = []
    for g in range(G.order):
        perm = _coset_permutation(G, g, transversal, coset_of, slot_of)
        blocks = {}
        for j in range(n):
            t_j = G.mul(G.inv(transversal[perm[j]]), G.mul(g, transversal[j]))
            blocks[(perm[j], j)] = rep.matrix_of(Hg.index[t_j])
        big = [[zero] * (n * d) for _ in range(n * d)]
        for (bi, bj), M in blocks.items():
            for a in range(d):
                for b in range(d):
                    big[bi * d + a][bj * d + b] = M[a][b]
        mats.append(tuple(tuple(row) for row in big))
    return MatrixRep(G, n * d, tuple(mats))


def tensor_induced_matrix_rep(rep: MatrixRep, H: Subgroup,
                              transversal=None) -> MatrixRep:
    """Explicit matrices of the tensor-induced representation on V^(tensor n)."""
    G = H.parent
    Hg = H.as_group
    if rep.group is not Hg:
        raise RepTheoryError("representation must live on the subgroup")
    transversal, coset_of, slot_of, n = _embedding_data(G, H, transversal)
    d = rep.dimension
    if d**n > MATRIX_DIM_BOUND:
        raise RepTheoryError("tensor-induced dimension exceeds the matrix bound")
    from itertools import product as iter_product

    indices = list(iter_product(range(d), repeat=n))
    mats = []
    for g in range(G.order):
        perm = _coset_permutation(G, g, transversal, coset_of, slot_of)
        inv_perm = [0] * n
        for i, t in enumerate(perm):
            inv_perm[t] = i
        slot_mats = []
        for j in range(n):
            t_j = G.mul(G.inv(transversal[perm[j]]), G.mul(g, transversal[j]))
            slot_mats.append(rep.matrix_of(Hg.index[t_j]))
        big = []
        for I in indices:
            row = []
            for J in indices:
                acc = Cyclotomic.rational(1)
                # slot i of the output receives slot inv_perm(i) of the input
                for i in range(n):
                    src = inv_perm[i]
                    acc = acc * slot_mats[src][I[i]][J[src]]
                    if not acc:
                        break
                row.append(acc)
            big.append(tuple(row))
        mats.append(tuple(big))
    return MatrixRep(G, d**n, tuple(mats))


def character_of(rep: MatrixRep) -> ClassFunction:
    return rep.character()
