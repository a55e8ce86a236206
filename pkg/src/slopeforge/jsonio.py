"""JSON wire formats shared by the command line front-end.

All numeric payloads are exact strings ("3/4"), never floats.  Parsers raise
InputError with a positional path so malformed documents are diagnosed
precisely; emitted documents carry a top-level "format": 1 field.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import Cyclotomic, rational_from_str, rational_to_str
from .filtered import BreakChain, LowerChain
from .groups import (FiniteGroup, Subgroup, group_from_cayley_table,
                     group_from_permutations)
from .newton import NewtonPolygon, SlopeMultiset
from .reptheory import ClassFunction
from .robba import RankOneOperator

FORMAT_VERSION = 1


class InputError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise InputError(path, message)


def parse_rational(obj, path: str) -> Fraction:
    _expect(isinstance(obj, (str, int)), path, "expected a rational string")
    try:
        return rational_from_str(str(obj))
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def rational_json(q) -> str:
    return rational_to_str(q)


# -- slope multisets and polygons -------------------------------------------------


def parse_slope_multiset(obj, path: str = "$") -> SlopeMultiset:
    _expect(isinstance(obj, dict), path, "expected an object")
    slopes = obj.get("slopes")
    _expect(isinstance(slopes, list), f"{path}.slopes", "expected a list")
    pairs = []
    for i, entry in enumerate(slopes):
        epath = f"{path}.slopes[{i}]"
        _expect(isinstance(entry, list) and len(entry) == 2, epath,
                "expected [slope, multiplicity]")
        slope = parse_rational(entry[0], f"{epath}[0]")
        _expect(isinstance(entry[1], int) and entry[1] >= 1, f"{epath}[1]",
                "expected a positive integer multiplicity")
        pairs.append((slope, entry[1]))
    try:
        return SlopeMultiset.from_pairs(pairs)
    except ValueError as exc:
        raise InputError(f"{path}.slopes", str(exc)) from None


def slope_multiset_json(ms: SlopeMultiset) -> dict:
    return {"slopes": [[rational_json(s), m] for s, m in ms.entries]}


def polygon_json(np: NewtonPolygon) -> dict:
    return {
        "vertices": [[rational_json(x), rational_json(y)] for x, y in np.vertices],
        "height": rational_json(np.height),
        "integral": np.is_integral(),
    }


# -- cyclotomics and class functions ------------------------------------------------


def parse_cyclotomic(obj, path: str) -> Cyclotomic:
    if isinstance(obj, (str, int)):
        return Cyclotomic.rational(parse_rational(obj, path))
    _expect(isinstance(obj, dict), path, "expected a rational string or an object")
    _expect("conductor" in obj and "coefficients" in obj, path,
            "expected keys conductor, coefficients")
    n = obj["conductor"]
    _expect(isinstance(n, int) and n >= 1, f"{path}.conductor",
            "expected a positive integer")
    coeffs = obj["coefficients"]
    _expect(isinstance(coeffs, list), f"{path}.coefficients", "expected a list")
    vals = [parse_rational(c, f"{path}.coefficients[{i}]")
            for i, c in enumerate(coeffs)]
    return Cyclotomic(n, vals)


def cyclotomic_json(v: Cyclotomic):
    if v.is_rational:
        return rational_json(v.rational_value())
    return {
        "conductor": v.conductor,
        "coefficients": [rational_json(c) for c in v.coeffs],
    }


def parse_class_function(obj, G: FiniteGroup, path: str) -> ClassFunction:
    _expect(isinstance(obj, dict), path, "expected an object")
    vals = obj.get("values")
    _expect(isinstance(vals, list), f"{path}.values", "expected a list")
    r = len(G.conjugacy_classes)
    _expect(len(vals) == r, f"{path}.values",
            f"expected {r} values (one per conjugacy class)")
    parsed = tuple(parse_cyclotomic(v, f"{path}.values[{i}]")
                   for i, v in enumerate(vals))
    return ClassFunction(G, parsed)


def class_function_json(chi: ClassFunction) -> dict:
    return {"values": [cyclotomic_json(v) for v in chi.values]}


# -- groups and subgroups ----------------------------------------------------------------


def parse_group(obj, path: str = "$.group") -> FiniteGroup:
    _expect(isinstance(obj, dict), path, "expected an object")
    if "permutation_generators" in obj:
        gens = obj["permutation_generators"]
        _expect(isinstance(gens, list), f"{path}.permutation_generators",
                "expected a list of permutations")
        perms = []
        for i, g in enumerate(gens):
            gpath = f"{path}.permutation_generators[{i}]"
            _expect(isinstance(g, list) and all(isinstance(x, int) for x in g),
                    gpath, "expected a list of 1-indexed images")
            _expect(sorted(g) == list(range(1, len(g) + 1)), gpath,
                    "not a permutation of 1..n")
            perms.append(tuple(x - 1 for x in g))
        try:
            return group_from_permutations(perms)
        except ValueError as exc:
            raise InputError(path, str(exc)) from None
    if "cayley_table" in obj:
        table = obj["cayley_table"]
        _expect(isinstance(table, list), f"{path}.cayley_table",
                "expected a list of rows")
        try:
            return group_from_cayley_table(table)
        except ValueError as exc:
            raise InputError(f"{path}.cayley_table", str(exc)) from None
    raise InputError(path, "expected permutation_generators or cayley_table")


def parse_subgroup(obj, G: FiniteGroup, path: str) -> Subgroup:
    _expect(isinstance(obj, list) and all(isinstance(x, int) for x in obj),
            path, "expected a list of element indices")
    _expect(all(0 <= x < G.order for x in obj), path,
            f"indices must lie in 0..{G.order - 1}")
    try:
        return G.subgroup(obj)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def subgroup_json(H: Subgroup) -> list[int]:
    return list(H.elements)


# -- chains ------------------------------------------------------------------------------


def parse_break_chain(obj, path: str = "$") -> tuple[FiniteGroup, BreakChain]:
    _expect(isinstance(obj, dict), path, "expected an object")
    G = parse_group(obj.get("group"), f"{path}.group")
    breaks = obj.get("breaks")
    subs = obj.get("subgroups")
    _expect(isinstance(breaks, list), f"{path}.breaks", "expected a list")
    _expect(isinstance(subs, list), f"{path}.subgroups", "expected a list")
    _expect(len(breaks) == len(subs), f"{path}.subgroups",
            "need one subgroup per break")
    bvals = tuple(parse_rational(b, f"{path}.breaks[{i}]")
                  for i, b in enumerate(breaks))
    svals = tuple(parse_subgroup(s, G, f"{path}.subgroups[{i}]")
                  for i, s in enumerate(subs))
    try:
        return G, BreakChain(G, bvals, svals)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def break_chain_json(chain: BreakChain) -> dict:
    return {
        "breaks": [rational_json(b) for b in chain.breaks],
        "subgroups": [subgroup_json(H) for H in chain.subgroups],
    }


def parse_lower_chain(obj, path: str = "$") -> tuple[FiniteGroup, LowerChain]:
    _expect(isinstance(obj, dict), path, "expected an object")
    G = parse_group(obj.get("group"), f"{path}.group")
    lower = obj.get("lower")
    _expect(isinstance(lower, list) and lower, f"{path}.lower",
            "expected a non-empty list of element-index lists")
    subs = tuple(parse_subgroup(s, G, f"{path}.lower[{i}]")
                 for i, s in enumerate(lower))
    try:
        return G, LowerChain(G, subs)
    except ValueError as exc:
        raise InputError(f"{path}.lower", str(exc)) from None


# -- rank-one operators ----------------------------------------------------------------------


def parse_rank_one_operator(obj, path: str = "$") -> RankOneOperator:
    _expect(isinstance(obj, dict), path, "expected an object")
    p = obj.get("p")
    _expect(isinstance(p, int) and p >= 2, f"{path}.p", "expected a prime")
    coeffs = obj.get("coefficients")
    _expect(isinstance(coeffs, list), f"{path}.coefficients", "expected a list")
    vals = [parse_rational(c, f"{path}.coefficients[{i}]")
            for i, c in enumerate(coeffs)]
    try:
        return RankOneOperator.make(p, vals)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def rank_one_operator_json(op: RankOneOperator) -> dict:
    return {"p": op.p, "coefficients": [rational_json(c) for c in op.coeffs]}
