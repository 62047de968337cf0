"""Exact rational matrices.

Thin adapter over sympy's ``DomainMatrix`` on the field ``QQ``. Every matrix
handled by the package is built here, in dense format, and never has a zero
dimension: empty blocks are simply not stored by the graded layer.
"""

from fractions import Fraction
from typing import List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Rational = type(QQ.one)

def qq(value):
    """Returns value as an element of QQ.

    Accepts integers, fractions, QQ elements and strings "num/den" or "num".
    """
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, bool):
        raise TypeError(f'Not a rational: {value!r}')
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        num, _, den = value.strip().partition('/')
        if not den:
            return QQ(int(num))
        if int(den) == 0:
            raise ZeroDivisionError(f'Zero denominator in {value!r}')
        return QQ(int(num), int(den))
    raise TypeError(f'Not a rational: {value!r}')

def num_den(value):
    "Returns the reduced (numerator, denominator) pair, denominator > 0"
    return int(QQ.numer(value)), int(QQ.denom(value))

def qq_str(value) -> str:
    "The 'num/den' encoding"
    num, den = num_den(value)
    return f'{num}/{den}'

def matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    "Dense matrix from a non empty list of non empty rows of rationals"
    nrows, ncols = len(rows), len(rows[0])
    return DomainMatrix([[qq(val) for val in row] for row in rows], (nrows, ncols), QQ)

def eye(size: int) -> DomainMatrix:
    "Dense identity matrix"
    return DomainMatrix(
        [[QQ.one if row == col else QQ.zero for col in range(size)] for row in range(size)],
        (size, size), QQ)

def embedding(size: int, total: int, offset: int) -> DomainMatrix:
    "The total × size matrix of the inclusion of the coordinates [offset, offset + size)"
    return DomainMatrix(
        [[QQ.one if row == offset + col else QQ.zero for col in range(size)]
         for row in range(total)],
        (total, size), QQ)

def rows_of(mat: DomainMatrix) -> List[list]:
    "List of rows of QQ elements"
    return mat.to_list()

def is_zero(mat: DomainMatrix) -> bool:
    "True if every entry vanishes"
    return all(not val for row in mat.to_list() for val in row)

def scale(mat: DomainMatrix, value) -> DomainMatrix:
    "value·mat (value non zero)"
    value = qq(value)
    return DomainMatrix(
        [[value * val for val in row] for row in mat.to_list()], mat.shape, QQ)

def submatrix(mat: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
    "The submatrix on the given row and column indices (both non empty)"
    data = mat.to_list()
    return DomainMatrix(
        [[data[row][col] for col in cols] for row in rows], (len(rows), len(cols)), QQ)

def rank(mat: DomainMatrix) -> int:
    "Exact rank"
    return mat.rank()

def inverse(mat: DomainMatrix) -> DomainMatrix:
    "Exact inverse of a square invertible matrix"
    return mat.inv()

def to_strings(mat: DomainMatrix) -> List[List[str]]:
    "Rows encoded as 'num/den' strings"
    return [[qq_str(val) for val in row] for row in mat.to_list()]
