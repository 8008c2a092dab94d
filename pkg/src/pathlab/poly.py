"""Exact integer polynomial arithmetic in t and in (q, t).

Two small immutable wrappers: :class:`TPoly` is a dense univariate polynomial
in t with integer coefficients (ascending order, trailing zeros trimmed), and
:class:`QTPoly` is a sparse bivariate polynomial in q and t keyed by exponent
pairs.  Both are hashable and support exact arithmetic with Python ints, so
they can be used as dictionary keys and compared for equality without any
tolerance.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class TPoly:
    """Polynomial in t with int coefficients, stored densely in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("TPoly is immutable")

    @classmethod
    def zero(cls) -> "TPoly":
        return cls()

    @classmethod
    def one(cls) -> "TPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "TPoly":
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TPoly((other,))
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("TPoly", self.coeffs))

    def __add__(self, other) -> "TPoly":
        if isinstance(other, int):
            other = TPoly((other,))
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return TPoly(
            x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)
        )

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "TPoly":
        return self + (-other if isinstance(other, TPoly) else -other)

    def __rsub__(self, other) -> "TPoly":
        return (-self) + other

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, int):
            return TPoly(c * other for c in self.coeffs)
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {"var": "t", "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> "TPoly":
        if data.get("var") != "t":
            raise ValueError("expected a univariate polynomial in t")
        return cls(int(c) for c in data["coeffs"])


class QTPoly:
    """Polynomial in q and t, stored sparsely as {(q_deg, t_deg): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for (dq, dt), c in terms.items():
                if c:
                    if dq < 0 or dt < 0:
                        raise ValueError("exponents must be nonnegative")
                    clean[(int(dq), int(dt))] = int(c)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QTPoly is immutable")

    @classmethod
    def zero(cls) -> "QTPoly":
        return cls()

    @classmethod
    def one(cls) -> "QTPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, q_deg: int, t_deg: int, coeff: int = 1) -> "QTPoly":
        return cls({(q_deg, t_deg): coeff})

    @classmethod
    def from_t(cls, p: TPoly) -> "QTPoly":
        return cls({(0, d): c for d, c in enumerate(p.coeffs)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QTPoly({(0, 0): other})
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("QTPoly", frozenset(self.terms.items())))

    def __add__(self, other) -> "QTPoly":
        if isinstance(other, int):
            other = QTPoly({(0, 0): other})
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QTPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QTPoly":
        return QTPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "QTPoly":
        if isinstance(other, int):
            other = QTPoly({(0, 0): other})
        return self + (-other)

    def __mul__(self, other) -> "QTPoly":
        if isinstance(other, int):
            return QTPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, QTPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (aq, at), a in self.terms.items():
            for (bq, bt), b in other.terms.items():
                key = (aq + bq, at + bt)
                out[key] = out.get(key, 0) + a * b
        return QTPoly(out)

    __rmul__ = __mul__

    def eval_q(self, q: int) -> TPoly:
        """Substitute an integer for q, leaving a polynomial in t."""
        out: dict[int, int] = {}
        for (dq, dt), c in self.terms.items():
            out[dt] = out.get(dt, 0) + c * q**dq
        if not out:
            return TPoly()
        coeffs = [0] * (max(out) + 1)
        for dt, c in out.items():
            coeffs[dt] = c
        return TPoly(coeffs)

    def __call__(self, q: int, t: int) -> int:
        return sum(c * q**dq * t**dt for (dq, dt), c in self.terms.items())

    def sorted_terms(self) -> Iterator[tuple[int, int, int]]:
        for (dq, dt) in sorted(self.terms):
            yield dq, dt, self.terms[(dq, dt)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for dq, dt, c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or (dq == 0 and dt == 0):
                factors.append(str(abs(c)))
            if dq:
                factors.append("q" if dq == 1 else f"q^{dq}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            parts.append(("-" if c < 0 else "+", "*".join(factors)))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QTPoly({self.terms!r})"

    def to_json(self) -> dict:
        return {"vars": ["q", "t"], "terms": [list(t) for t in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "QTPoly":
        if list(data.get("vars", ())) != ["q", "t"]:
            raise ValueError("expected a bivariate polynomial in q, t")
        return cls({(int(dq), int(dt)): int(c) for dq, dt, c in data["terms"]})


def t_analog(n: int) -> TPoly:
    """[n]_t = 1 + t + ... + t^(n-1); [0]_t = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TPoly((1,) * n)


def t_factorial(n: int) -> TPoly:
    """[n]_t! = [1]_t [2]_t ... [n]_t, with [0]_t! = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = TPoly.one()
    for m in range(1, n + 1):
        out = out * t_analog(m)
    return out


def q_analog(n: int) -> QTPoly:
    """[n]_q = 1 + q + ... + q^(n-1) as a QTPoly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return QTPoly({(d, 0): 1 for d in range(n)})


def eval_q(p: QTPoly, q: int) -> TPoly:
    return p.eval_q(q)


def _is_alternating(perm: tuple[int, ...]) -> bool:
    # starts with a descent, then strictly alternates
    return all(
        (perm[i] > perm[i + 1]) == (i % 2 == 0) for i in range(len(perm) - 1)
    )


def _pattern_count(perm: tuple[int, ...]) -> int:
    # occurrences (i, j) with 1 < i+1 < j <= n and perm[i+1] < perm[j] < perm[i],
    # in 1-based indexing: the middle letter is adjacent to the large one.
    n = len(perm)
    count = 0
    for i in range(n - 1):  # 0-based position of the large letter
        lo, hi = perm[i + 1], perm[i]
        if lo < hi:
            count += sum(lo < perm[j] < hi for j in range(i + 2, n))
    return count


def euler_t(n: int) -> TPoly:
    """Generating polynomial of down-up alternating permutations of size n.

    Permutations with s1 > s2 < s3 > s4 < ... are weighted by t to the number
    of occurrences of the dashed pattern whose middle and largest letters are
    adjacent (large immediately before small, with a mid-valued letter later).
    Evaluating at t = 1 gives the alternating-permutation numbers
    1, 1, 2, 5, 16, 61, 272, ...
    """
    if n < 1:
        raise ValueError("n must be positive")
    acc: dict[int, int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        if _is_alternating(perm):
            d = _pattern_count(perm)
            acc[d] = acc.get(d, 0) + 1
    coeffs = [0] * (max(acc) + 1)
    for d, c in acc.items():
        coeffs[d] = c
    return TPoly(coeffs)
