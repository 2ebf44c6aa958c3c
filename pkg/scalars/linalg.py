"""Exact linear algebra over a Field through sympy's DomainMatrix."""
from typing import Dict, List, Sequence

from sympy.matrices.exceptions import NonInvertibleMatrixError
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from errors import SingularSystem
from scalars.field_interface import Field


def entry_domain(matrix: Sequence[Sequence]):
    """The sympy domain of the first entry that knows its parent, QQ otherwise"""
    for row in matrix:
        for entry in row:
            parent = getattr(entry, "parent", None)
            if callable(parent):
                return parent()
    return QQ


def domain_determinant(matrix: Sequence[Sequence], domain=None):
    """Determinant over a sympy domain, inferred from the entries when not given"""
    if domain is None:
        domain = entry_domain(matrix)
    size = len(matrix)
    if size == 0:
        return domain.one
    rows = [[domain.convert(a) for a in row] for row in matrix]
    return DomainMatrix(rows, (size, size), domain).det()


def determinant(matrix: Sequence[Sequence], field: Field):
    """Determinant of a square matrix of field elements"""
    return domain_determinant(matrix, field.sympy_domain())


def solve_sparse(rows: List[Dict[int, object]], rhs: List, domain) -> List:
    """Solve a square sparse system by LU decomposition.

    :param rows: row i as {column: coefficient}, coefficients in domain
    :param rhs: right-hand side values in domain
    :param domain: sympy field domain of the entries
    :return: solution vector
    """
    size = len(rows)
    entries = {i: {j: a for j, a in row.items() if a} for i, row in enumerate(rows)}
    system = DomainMatrix({i: row for i, row in entries.items() if row}, (size, size), domain)
    column = DomainMatrix({i: {0: b} for i, b in enumerate(rhs) if b}, (size, 1), domain)
    try:
        solution = system.lu_solve(column)
    except (DMNonInvertibleMatrixError, NonInvertibleMatrixError) as e:
        raise SingularSystem(f"singular {size}x{size} system") from e
    return [row[0] for row in solution.to_list()]
