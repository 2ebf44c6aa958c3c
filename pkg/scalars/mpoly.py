"""Multivariate polynomials in named weight variables.

MPoly values are sympy PolyElement objects over QQ; this module adds exact
evaluation and a deterministic term-list serialization.
"""
from typing import Dict, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from errors import MissingVariable
from scalars.field_domain import parse_rational, rational_to_string


def mpoly_ring(names: Sequence[str]):
    """Returns the sympy polynomial ring over QQ in the given variables"""
    return ring(",".join(names), QQ)[0]


def ring_gens(poly_ring) -> Dict[str, object]:
    return {str(sym): gen for sym, gen in zip(poly_ring.symbols, poly_ring.gens)}


def mpoly_eval(p, assignment: Mapping[str, object]):
    """Evaluate p exactly at rational values for its variables.

    :param p: polynomial from mpoly_ring
    :param assignment: variable name -> rational
    :return: the rational value
    """
    names = [str(sym) for sym in p.ring.symbols]
    used = set()
    for monom in p.monoms():
        used.update(i for i, e in enumerate(monom) if e)
    values = []
    for i, name in enumerate(names):
        if name in assignment:
            values.append(QQ.convert(assignment[name]))
        elif i in used:
            raise MissingVariable(f"no value for {name}")
        else:
            values.append(QQ(0))
    total = QQ(0)
    for monom, coeff in p.terms():
        term = QQ.convert(coeff)
        for value, exponent in zip(values, monom):
            if exponent:
                term *= value ** exponent
        total += term
    return total


def mpoly_terms(p) -> List[Tuple[str, Dict[str, int]]]:
    """Sorted sparse term list [(coefficient "p/q", {var: exponent}), ...]"""
    names = [str(sym) for sym in p.ring.symbols]
    terms = []
    for monom, coeff in sorted(p.terms(), key=lambda term: term[0], reverse=True):
        powers = {names[i]: e for i, e in enumerate(monom) if e}
        terms.append((rational_to_string(QQ.convert(coeff)), powers))
    return terms


def mpoly_from_terms(poly_ring, terms) -> object:
    gens = ring_gens(poly_ring)
    result = poly_ring.zero
    for coeff, powers in terms:
        term = poly_ring(parse_rational(coeff))
        for name, exponent in powers.items():
            term *= gens[name] ** int(exponent)
        result += term
    return result


def is_homogeneous_of_degree(p, degree: int) -> bool:
    return all(sum(monom) == degree for monom in p.monoms())
