"""
p-th root extraction on towers of p-th root adjunctions over F_p
"""

import logging
from functools import reduce
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..arith.mpoly import MPoly
from ..utils.calculations import solve_linear, solve_mod_p
from ..utils.errors import UnsupportedTower
from .element import Element
from .tower import Tower

logger = logging.getLogger(__name__)


def _root_adjunctions(tower: Tower) -> List[Tuple[str, Element]]:
    """
    ``(generator, c)`` for every algebraic generator, each with minpoly x^p - c
    and c free of algebraic generators

    Raises:
        UnsupportedTower: For any other algebraic generator
    """
    p = tower.field.characteristic
    found = []
    for g in tower.gens:
        if not g.is_algebraic:
            continue
        coeffs = g.minpoly.coeffs
        shape_ok = g.degree == p and all(c.is_zero() for c in coeffs[1:p])
        if not shape_ok:
            raise UnsupportedTower(f"generator '{g.name}' is not a p-th root adjunction")
        c = tower.coerce(-coeffs[0])
        if not c.is_free():
            raise UnsupportedTower(f"generator '{g.name}' is a p-th root of a non-free element {c}")
        found.append((g.name, c))
    return found


def _monomial_exponents(c: Element, free: Tuple[str, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """``(kappa, E)`` when ``c == kappa * prod(free ** E)``, else None"""
    if len(c.num) != 1 or len(c.den) != 1:
        return None
    (num_exp, num_coeff), = c.num.terms.items()
    (den_exp, den_coeff), = c.den.terms.items()
    field = c.owner.field
    exponents = []
    for name in free:
        k = c.num.variables.index(name)
        exponents.append(num_exp[k] - den_exp[k])
    return field.div(num_coeff, den_coeff), tuple(exponents)


def _free_root(u: Element) -> Optional[Element]:
    """p-th root of an element free of algebraic generators, read off its exponents"""
    tower = u.owner
    p = tower.field.characteristic
    power = u.num * u.den ** (p - 1)
    terms = {}
    for exponents, coeff in power.terms.items():
        if any(x % p for x in exponents):
            return None
        terms[tuple(x // p for x in exponents)] = coeff
    return tower.element(MPoly(tower.field, power.variables, terms), u.den)


def _residue_split(poly: MPoly, positions: Sequence[int], p: int) -> Dict[Tuple[int, ...], MPoly]:
    """
    ``poly = sum_E x^E * poly_E`` over residues E in [0, p)^n of the free
    exponents; every ``poly_E`` is a polynomial in p-th powers
    """
    parts: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
    for exponents, coeff in poly.terms.items():
        residue = tuple(exponents[k] % p for k in positions)
        lowered = list(exponents)
        for k, r in zip(positions, residue):
            lowered[k] -= r
        parts.setdefault(residue, {})[tuple(lowered)] = coeff
    return {residue: MPoly(poly.field, poly.variables, terms) for residue, terms in parts.items()}


def _monomial_root(e: Element, monomial: List[Tuple[str, object, Tuple[int, ...]]]) -> Optional[Element]:
    """Root of a free ``e`` when every radicand is a monomial: one mod-p solve per term"""
    tower = e.owner
    p = tower.field.characteristic
    field = tower.field
    free = tower.free_names()

    # e = N/D = (N * D^(p-1)) / D^p
    target = e.num * e.den ** (p - 1)
    positions = [target.variables.index(name) for name in free]
    columns = [[x % p for x in exponents] for _, _, exponents in monomial]
    pieces: List[Tuple[Tuple[int, ...], Dict[str, int], object]] = []
    for exponents, coeff in target.terms.items():
        v = [exponents[k] for k in positions]
        solution = solve_mod_p(columns, v, p)
        if solution is None:
            logger.debug("term with exponents %s has no root in %s", v, tower)
            return None
        rest = list(v)
        factor = coeff
        roots: Dict[str, int] = {}
        for m, (name, kappa, column) in zip(solution, monomial):
            if m == 0:
                continue
            roots[name] = m
            factor = field.mul(factor, field.power(kappa, -m))
            rest = [r - m * x for r, x in zip(rest, column)]
        # the coefficient is its own p-th root in F_p
        pieces.append((tuple(r // p for r in rest), roots, factor))

    shift = [max([0] + [-piece[0][j] for piece in pieces]) for j in range(len(free))]
    root_num = MPoly.zero(field, tower.variables)
    width = len(tower.variables)
    for lowered, roots, factor in pieces:
        exps = [0] * width
        for j, k in enumerate(positions):
            exps[k] = lowered[j] + shift[j]
        for name, m in roots.items():
            exps[tower.position(name)] = m
        root_num = root_num + MPoly(field, tower.variables, {tuple(exps): factor})
    shift_exps = [0] * width
    for j, k in enumerate(positions):
        shift_exps[k] = shift[j]
    root_den = MPoly(field, tower.variables, {tuple(shift_exps): 1}) * e.den
    return tower.element(root_num, root_den)


def _linear_root(e: Element, adjunctions: List[Tuple[str, Element]]) -> Optional[Element]:
    """
    Root of a free ``e`` through arbitrary radicands c_j = P_j/Q_j.

    A root is ``sum_m R_m * a^m / D`` over m in [0, p)^k with ``e = N/D``.
    Writing ``c_j = P_j Q_j^(p-1) / Q_j^p`` turns ``N D^(p-1) = sum_m U_m
    prod (P_j Q_j^(p-1))^m_j`` into a linear system for ``U_m`` over the free
    field, one equation per exponent residue mod p. The solution lies in the
    field of p-th powers and ``R_m = U_m^(1/p) * prod Q_j^m_j``.
    """
    tower = e.owner
    p = tower.field.characteristic
    field = tower.field
    target = e.num * e.den ** (p - 1)
    variables = target.variables
    positions = [variables.index(name) for name in tower.free_names()]
    radicands = [(c.num * c.den ** (p - 1)).with_variables(variables) for _, c in adjunctions]

    one = MPoly.constant(field, variables, 1)
    exponents = list(product(range(p), repeat=len(adjunctions)))
    columns = []
    for m in exponents:
        power = reduce(lambda acc, pair: acc * pair[0] ** pair[1], zip(radicands, m), one)
        columns.append(_residue_split(power, positions, p))
    rhs = _residue_split(target, positions, p)
    residues = sorted(set(rhs).union(*columns))
    zero = MPoly.zero(field, variables)
    matrix = [[tower.from_mpoly(column.get(residue, zero)) for column in columns] for residue in residues]
    solution = solve_linear(matrix, [tower.from_mpoly(rhs.get(residue, zero)) for residue in residues])
    if solution is None:
        logger.debug("%s is not a p-th power in %s", e, tower)
        return None

    root = tower.zero()
    for m, u in zip(exponents, solution):
        if u.is_zero():
            continue
        coefficient = _free_root(u)
        if coefficient is None:
            # only reachable when the radicands are p-dependent
            return None
        for (name, c), k in zip(adjunctions, m):
            coefficient = coefficient * tower.from_mpoly(c.den) ** k * tower.gen(name) ** k
        root = root + coefficient
    return root / tower.from_mpoly(e.den)


def is_pth_power(e: Element) -> Optional[Element]:
    """
    p-th root of ``e`` in its tower, or None when there is none

    Supported towers: purely transcendental over F_p, or with every algebraic
    generator a p-th root of an element free of algebraic generators.

    Raises:
        UnsupportedTower: In characteristic 0 or for other algebraic generators
    """
    tower = e.owner
    p = tower.field.characteristic
    if p == 0:
        raise UnsupportedTower("p-th roots are only defined in positive characteristic")
    adjunctions = _root_adjunctions(tower)
    if e.is_zero():
        return e
    for name, c in adjunctions:
        if e == c:
            return tower.gen(name)
    if not e.is_free():
        # p-th powers of such towers never involve the adjoined roots
        return None

    free = tower.free_names()
    monomial = []
    for name, c in adjunctions:
        shape = _monomial_exponents(c, free)
        if shape is None:
            return _linear_root(e, adjunctions)
        monomial.append((name, shape[0], shape[1]))
    return _monomial_root(e, monomial)
