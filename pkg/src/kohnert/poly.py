"""Sparse integer polynomials in x_1..x_n and the operators acting on them.

Exponent vectors are tuples of length ``n``.  ``n`` is carried explicitly and
widened on demand; two polynomials that differ only by trailing unused
variables compare equal.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .diagram import Permutation, WeakComposition, pad
from .errors import NotKeyPositiveError, PreconditionError

Exponent = tuple[int, ...]


def _strip(e: Exponent) -> Exponent:
    end = len(e)
    while end and e[end - 1] == 0:
        end -= 1
    return e[:end]


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("n", "_terms", "_key")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = (), n: int = 0):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        width = n
        raw = []
        for e, c in items:
            e = tuple(int(x) for x in e)
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            raw.append((e, int(c)))
            width = max(width, len(_strip(e)))
        for e, c in raw:
            e = pad(e, width)
            acc[e] = acc.get(e, 0) + c
        self.n = width
        self._terms = {e: c for e, c in acc.items() if c}
        self._key = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], n: int) -> "Polynomial":
        # trusted: keys already have length n and no zero coefficients
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._key = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({}, 0)

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({(): 1}, 0)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coef: int = 1) -> "Polynomial":
        return cls({tuple(exponent): coef}, n=len(exponent))

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        return cls.monomial((0,) * (i - 1) + (1,))

    @classmethod
    def x_product(cls, k: int) -> "Polynomial":
        """``x_1 x_2 ... x_k``."""
        return cls.monomial((1,) * k)

    # -- access -------------------------------------------------------------

    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self, descending: bool = False) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), reverse=descending)

    def coefficient(self, exponent: Sequence[int]) -> int:
        e = tuple(exponent)
        if len(_strip(e)) > self.n:
            return 0
        return self._terms.get(pad(_strip(e), self.n), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def widen(self, n: int) -> "Polynomial":
        if n <= self.n:
            return self
        extra = (0,) * (n - self.n)
        return Polynomial._raw({e + extra: c for e, c in self._terms.items()}, n)

    def _canonical(self):
        if self._key is None:
            self._key = frozenset((_strip(e), c) for e, c in self._terms.items())
        return self._key

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.one() * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.one() * other
        n = max(self.n, other.n)
        a, b = self.widen(n), other.widen(n)
        out = dict(a._terms)
        for e, c in b._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out, n)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.n)

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial._raw({}, self.n)
            return Polynomial._raw({e: c * other for e, c in self._terms.items()}, self.n)
        n = max(self.n, other.n)
        a, b = self.widen(n), other.widen(n)
        out: dict[Exponent, int] = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, n)

    __rmul__ = __mul__

    def swap(self, i: int) -> "Polynomial":
        """``s_i . f``: exchange ``x_i`` and ``x_{i+1}``."""
        f = self.widen(i + 1)
        out = {}
        for e, c in f._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial._raw(out, f.n)

    def is_symmetric_in(self, i: int) -> bool:
        return self.swap(i) == self

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return pretty(self)


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def _monomial_str(e: Exponent) -> str:
    parts = []
    for i, p in enumerate(e, start=1):
        if p == 1:
            parts.append(f"x{i}")
        elif p > 1:
            parts.append(f"x{i}^{p}")
    return "*".join(parts)


def pretty(f: Polynomial) -> str:
    """Human-readable form, lex-largest term first, e.g. ``x1^2*x2 + x1*x2^2``."""
    if not f:
        return "0"
    chunks = []
    for k, (e, c) in enumerate(f.sorted_terms(descending=True)):
        mono = _monomial_str(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(("- " if c < 0 else "+ ") + body)
    return " ".join(chunks)


def to_json(f: Polynomial) -> dict:
    return {
        "n": f.n,
        "terms": [{"exp": list(e), "coef": c} for e, c in f.sorted_terms()],
    }


def from_json(data: dict | str) -> Polynomial:
    if isinstance(data, str):
        data = json.loads(data)
    return Polynomial({tuple(t["exp"]): t["coef"] for t in data["terms"]}, n=data["n"])


def specialize_ones(f: Polynomial) -> int:
    """Value at ``x_1 = ... = x_n = 1``."""
    return sum(c for _, c in f.items())


# ---------------------------------------------------------------------------
# divided differences and Demazure operators
# ---------------------------------------------------------------------------


def _check_index(i: int) -> None:
    if not isinstance(i, int) or i < 1:
        raise PreconditionError(f"operator index must be a positive integer, got {i!r}")


def _exact_quotient(g: Polynomial, i: int) -> Polynomial:
    """Divide ``g`` by ``x_i - x_{i+1}``; raise if there is a remainder."""
    k = i - 1
    rem = dict(g._terms)
    quo: dict[Exponent, int] = {}
    # Long division with leading variable x_i: each step removes a term with
    # x_i-degree d and creates one of x_i-degree d-1.
    while True:
        best = None
        for e in rem:
            if e[k] and (best is None or (e[k], e) > (best[k], best)):
                best = e
        if best is None:
            break
        c = rem.pop(best)
        q = best[:k] + (best[k] - 1,) + best[k + 1 :]
        quo[q] = quo.get(q, 0) + c
        t = q[: k + 1] + (q[k + 1] + 1,) + q[k + 2 :]
        v = rem.get(t, 0) + c
        if v:
            rem[t] = v
        else:
            rem.pop(t, None)
    if rem:
        raise ArithmeticError(f"x{i} - x{i + 1} does not divide the polynomial")
    return Polynomial._raw({e: c for e, c in quo.items() if c}, g.n)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed by exact long division."""
    _check_index(i)
    f = f.widen(i + 1)
    return _exact_quotient(f - f.swap(i), i)


def demazure_pi(f: Polynomial, i: int) -> Polynomial:
    """Isobaric divided difference ``pi_i(f) = d_i(x_i f)``."""
    _check_index(i)
    return divided_difference(Polynomial.variable(i) * f, i)


def pi_word(f: Polynomial, word: Sequence[int]) -> Polynomial:
    """Apply ``pi_{word[0]} ... pi_{word[-1]}``; the last letter acts first."""
    for i in reversed(word):
        f = demazure_pi(f, i)
    return f


# ---------------------------------------------------------------------------
# key polynomials
# ---------------------------------------------------------------------------


def sorting_permutation(a: Sequence[int]) -> tuple[Permutation, list[int]]:
    """Minimal permutation carrying ``sort(a)`` to ``a`` plus a reduced word.

    The word records the adjacent swaps of a bubble sort of ``a`` into weakly
    decreasing order; ``key_polynomial(a) = pi_word(x^sort(a), word)``.
    """
    a = list(a)
    n = len(a)
    word: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                word.append(i + 1)
                changed = True
    return Permutation.from_word(word, n), word


@lru_cache(maxsize=8192)
def _key_cached(a: WeakComposition) -> Polynomial:
    lam = tuple(sorted(a, reverse=True))
    _, word = sorting_permutation(a)
    return pi_word(Polynomial.monomial(lam), word).widen(len(a))


def key_polynomial(a: Sequence[int]) -> Polynomial:
    """Demazure character via Demazure operators on ``x^sort(a)``."""
    return _key_cached(tuple(int(x) for x in a))


def key_polynomial_kohnert(a: Sequence[int]) -> Polynomial:
    """Demazure character via Kohnert's rule on the key diagram."""
    from .closure import kohnert_polynomial
    from .diagram import key_diagram

    return kohnert_polynomial(key_diagram(a)).widen(len(a))


def key_expand(f: Polynomial) -> list[tuple[WeakComposition, int]]:
    """Write ``f`` as a nonnegative sum of key polynomials.

    Each step takes the lexicographically smallest surviving exponent ``a``
    (where ``kappa_a`` has its unique minimal term ``x^a``) and subtracts
    ``c * kappa_a``.  Compositions are padded to ``f.n``.
    """
    n = f.n
    rest = f
    out: list[tuple[WeakComposition, int]] = []
    while rest:
        a, c = min(rest.items())
        if c < 0 or any(v < 0 for _, v in rest.items()):
            raise NotKeyPositiveError(f"negative coefficient at x^{a} during key expansion", rest)
        out.append((pad(a, n), c))
        rest = rest - key_polynomial(a) * c
    return out
