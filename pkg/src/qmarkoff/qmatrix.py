"""2x2 matrices over Z[q, q^-1] and the two word-to-matrix homomorphisms.

``M_q`` sends a to the lower-triangular generator and b to the
upper-triangular one; ``mu_q`` sends each letter to a fixed product of those
generators and recovers the classical Markoff matrices at q = 1.
"""

from __future__ import annotations

from .laurent import ONE, Q, ZERO, LaurentPoly
from .words import BINARY, SIGMA, apply_morphism, require_word


class QMatrix:
    """Immutable 2x2 matrix with LaurentPoly entries."""

    __slots__ = ("_e",)

    def __init__(self, m11: LaurentPoly, m12: LaurentPoly,
                 m21: LaurentPoly, m22: LaurentPoly) -> None:
        self._e = (m11, m12, m21, m22)

    @classmethod
    def identity(cls) -> QMatrix:
        return cls(ONE, ZERO, ZERO, ONE)

    @property
    def m11(self) -> LaurentPoly:
        return self._e[0]

    @property
    def m12(self) -> LaurentPoly:
        return self._e[1]

    @property
    def m21(self) -> LaurentPoly:
        return self._e[2]

    @property
    def m22(self) -> LaurentPoly:
        return self._e[3]

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        """Row-major entry tuple."""
        return self._e

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __mul__(self, other: QMatrix) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        a, b, c, d = self._e
        e, f, g, h = other._e
        return QMatrix(a * e + b * g, a * f + b * h,
                       c * e + d * g, c * f + d * h)

    def __sub__(self, other: QMatrix) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return QMatrix(*(x - y for x, y in zip(self._e, other._e)))

    def __add__(self, other: QMatrix) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return QMatrix(*(x + y for x, y in zip(self._e, other._e)))

    def scale(self, factor: LaurentPoly) -> QMatrix:
        return QMatrix(*(factor * x for x in self._e))

    def transpose(self) -> QMatrix:
        a, b, c, d = self._e
        return QMatrix(a, c, b, d)

    def det(self) -> LaurentPoly:
        a, b, c, d = self._e
        return a * d - b * c

    def trace(self) -> LaurentPoly:
        return self._e[0] + self._e[3]

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self._e)

    def at_one(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Evaluate every entry at q = 1."""
        a, b, c, d = (x.eval_at_one() for x in self._e)
        return ((a, b), (c, d))

    def to_json_dict(self) -> dict:
        keys = ("m11", "m12", "m21", "m22")
        return {k: p.to_json_dict() for k, p in zip(keys, self._e)}

    @classmethod
    def from_json_dict(cls, data: dict) -> QMatrix:
        return cls(*(LaurentPoly.from_json_dict(data[k])
                     for k in ("m11", "m12", "m21", "m22")))

    def __repr__(self) -> str:
        a, b, c, d = self._e
        return f"QMatrix([[{a}, {b}], [{c}, {d}]])"


# Named constant matrices.
L_Q = QMatrix(Q, ZERO, Q, ONE)
R_Q = QMatrix(Q, ONE, ZERO, ONE)
Q_Q = QMatrix(Q, ZERO, ZERO, ONE)
Q_Q_INV = QMatrix(LaurentPoly.q(-1), ZERO, ZERO, ONE)
S_MAT = QMatrix(ZERO, LaurentPoly.from_int(-1), ONE, ZERO)

MU_A = R_Q * L_Q
MU_B = R_Q * R_Q * L_Q * L_Q

_M_LETTER = {"a": L_Q, "b": R_Q}
_MU_LETTER = {"a": MU_A, "b": MU_B}


def M_q(w: str) -> QMatrix:
    """Product of the letter generators of w (a -> L, b -> R); identity for the empty word."""
    require_word(w, BINARY)
    out = QMatrix.identity()
    for ch in w:
        out = out * _M_LETTER[ch]
    return out


def mu_q(w: str) -> QMatrix:
    """Product of the per-letter matrices MU_A and MU_B over w."""
    require_word(w, BINARY)
    out = QMatrix.identity()
    for ch in w:
        out = out * _MU_LETTER[ch]
    return out


def mu_q_via_sigma(w: str) -> QMatrix:
    """Alternative route to mu_q(w) through M_q and the morphism sigma.

    Kept as an independent path so tests can cross-check the base matrices.
    """
    require_word(w, BINARY)
    return M_q(apply_morphism(SIGMA, w))


def char_poly_scaled_a() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Coefficients (1, -trace, det) of the characteristic polynomial of q^-1 * mu_q(a).

    Computed from the trace and determinant of the scaled matrix, not
    hard-coded, so the result doubles as a consistency check.
    """
    scaled = MU_A.scale(LaurentPoly.q(-1))
    return ONE, -scaled.trace(), scaled.det()
