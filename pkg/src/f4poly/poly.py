"""Exact sparse polynomials in 26 variables and the first-order operators,
dual involution, and weight grading used by the folded-algebra realization."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

NVARS = 26

Exponent = Tuple[int, ...]
Coeff = Union[int, Fraction]
Weight = Tuple[int, int, int, int]

ZERO_EXP: Exponent = (0,) * NVARS

# Eigenvalues of the four diagonal generators on each variable x1..x26.
# Cross-checked against the diagonal operators in the representation module.
VARIABLE_WEIGHTS: Tuple[Weight, ...] = (
    (0, 0, 0, 1),
    (0, 0, 1, -1),
    (0, 1, -1, 0),
    (1, -1, 1, 0),
    (1, 0, -1, 1),
    (-1, 0, 1, 0),
    (1, 0, 0, -1),
    (-1, 1, -1, 1),
    (-1, 1, 0, -1),
    (0, -1, 1, 1),
    (0, -1, 2, -1),
    (0, 0, -1, 2),
    (0, 0, 0, 0),
    (0, 0, 0, 0),
    (0, 0, 1, -2),
    (0, 1, -2, 1),
    (0, 1, -1, -1),
    (1, -1, 0, 1),
    (1, -1, 1, -1),
    (-1, 0, 0, 1),
    (1, 0, -1, 0),
    (-1, 0, 1, -1),
    (-1, 1, -1, 0),
    (0, -1, 1, 0),
    (0, 0, -1, 1),
    (0, 0, 0, -1),
)

# Variable pairing of the dual involution: position j maps to _DUAL_POS[j]
# (0-based); the two central variables are fixed but change sign.
_DUAL_POS: Tuple[int, ...] = tuple(j if j in (12, 13) else 25 - j for j in range(NVARS))


def _as_coeff(value: Coeff) -> Coeff:
    if isinstance(value, (int, Fraction)):
        return value
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


class Polynomial:
    """Sparse polynomial mapping 26-entry exponent tuples to exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Coeff] | None = None) -> None:
        clean: Dict[Exponent, Coeff] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[exp] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Coeff]) -> "Polynomial":
        out = cls.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, value: Coeff) -> "Polynomial":
        return cls({ZERO_EXP: _as_coeff(value)})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        if not 1 <= index <= NVARS:
            raise ValueError(f"variable index must be in 1..{NVARS}, got {index}")
        exp = tuple(1 if j == index - 1 else 0 for j in range(NVARS))
        return cls._raw({exp: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Coeff = 1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != NVARS or any(k < 0 for k in exp):
            raise ValueError("exponent must be 26 nonnegative integers")
        coeff = _as_coeff(coeff)
        return cls._raw({exp: coeff}) if coeff else cls.zero()

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exp), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {ZERO_EXP: other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Union["Polynomial", Coeff]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other) if other else Polynomial.zero()
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            new = out.get(exp, 0) + coeff
            if new:
                out[exp] = new
            elif exp in out:
                del out[exp]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["Polynomial", Coeff]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Union["Polynomial", Coeff]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero()
            return Polynomial._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Exponent, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(exp, 0) + c1 * c2
                if new:
                    out[exp] = new
                elif exp in out:
                    del out[exp]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not supported")
        result = Polynomial.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def partial(self, index: int) -> "Polynomial":
        """Partial derivative with respect to variable `index` (1-based)."""
        j = index - 1
        out: Dict[Exponent, Coeff] = {}
        for exp, coeff in self.terms.items():
            k = exp[j]
            if k:
                out[exp[:j] + (k - 1,) + exp[j + 1 :]] = k * coeff
        return Polynomial._raw(out)

    def sorted_terms(self) -> List[Tuple[Exponent, Coeff]]:
        """Terms ordered by total degree then lexicographically, both descending."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: List[str] = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for j, k in enumerate(exp):
                if k == 1:
                    factors.append(f"x{j + 1}")
                elif k:
                    factors.append(f"x{j + 1}^{k}")
            body = "*".join(factors)
            if not body:
                piece = str(coeff)
            elif coeff == 1:
                piece = body
            elif coeff == -1:
                piece = f"-{body}"
            else:
                piece = f"{coeff}*{body}"
            if chunks and not piece.startswith("-"):
                chunks.append(f"+ {piece}")
            elif chunks:
                chunks.append(f"- {piece[1:]}")
            else:
                chunks.append(piece)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def from_pairs(pairs: Iterable[Tuple[Coeff, Sequence[int]]]) -> Polynomial:
    """Build a polynomial from (coefficient, variable-index list) products."""
    acc: Dict[Exponent, Coeff] = {}
    for coeff, indices in pairs:
        exp = [0] * NVARS
        for idx in indices:
            exp[idx - 1] += 1
        key = tuple(exp)
        new = acc.get(key, 0) + coeff
        if new:
            acc[key] = new
        elif key in acc:
            del acc[key]
    return Polynomial._raw(acc)


def dual(poly: Polynomial) -> Polynomial:
    """Degree-preserving involution pairing xr with x(27-r) and negating x13, x14."""
    out: Dict[Exponent, Coeff] = {}
    for exp, coeff in poly.terms.items():
        new = [0] * NVARS
        for j, k in enumerate(exp):
            if k:
                new[_DUAL_POS[j]] = k
        if (exp[12] + exp[13]) % 2:
            coeff = -coeff
        out[tuple(new)] = coeff
    return Polynomial._raw(out)


class Derivation:
    """First-order differential operator: a polynomial coefficient per variable."""

    __slots__ = ("parts",)

    def __init__(self, parts: Mapping[int, Polynomial] | None = None) -> None:
        clean: Dict[int, Polynomial] = {}
        if parts:
            for var, poly in parts.items():
                if not 1 <= var <= NVARS:
                    raise ValueError(f"variable index must be in 1..{NVARS}, got {var}")
                if poly.terms:
                    clean[var] = poly
        self.parts = clean

    @classmethod
    def zero(cls) -> "Derivation":
        return cls()

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, Coeff]]) -> "Derivation":
        """Build sum of c * x_r * d/dx_s from (r, s, c) triples."""
        acc: Dict[int, Polynomial] = {}
        for r, s, c in terms:
            piece = Polynomial.variable(r) * c
            acc[s] = acc.get(s, Polynomial.zero()) + piece
        return cls(acc)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[Coeff]]) -> "Derivation":
        """Linear operator with entries m[i][j]: x_(i+1) coefficient on d/dx_(j+1)."""
        acc: Dict[int, Polynomial] = {}
        for i, row in enumerate(matrix):
            for j, value in enumerate(row):
                if value:
                    acc[j + 1] = acc.get(j + 1, Polynomial.zero()) + Polynomial.variable(i + 1) * value
        return cls(acc)

    def matrix(self) -> List[List[Coeff]]:
        """26x26 matrix of a linear operator; raises if any part is not linear."""
        out = [[0] * NVARS for _ in range(NVARS)]
        for var, poly in self.parts.items():
            for exp, coeff in poly.terms.items():
                if sum(exp) != 1:
                    raise ValueError("operator is not linear in the variables")
                out[exp.index(1)][var - 1] = coeff
        return out

    def apply(self, poly: Polynomial) -> Polynomial:
        total = Polynomial.zero()
        for var, part in self.parts.items():
            d = poly.partial(var)
            if d.terms:
                total = total + part * d
        return total

    __call__ = apply

    def commutator(self, other: "Derivation") -> "Derivation":
        acc: Dict[int, Polynomial] = {}
        for var, part in other.parts.items():
            piece = self.apply(part)
            if piece.terms:
                acc[var] = acc.get(var, Polynomial.zero()) + piece
        for var, part in self.parts.items():
            piece = other.apply(part)
            if piece.terms:
                acc[var] = acc.get(var, Polynomial.zero()) - piece
        return Derivation(acc)

    def __add__(self, other: "Derivation") -> "Derivation":
        if not isinstance(other, Derivation):
            return NotImplemented
        acc = dict(self.parts)
        for var, part in other.parts.items():
            acc[var] = acc.get(var, Polynomial.zero()) + part
        return Derivation(acc)

    def __sub__(self, other: "Derivation") -> "Derivation":
        if not isinstance(other, Derivation):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Derivation":
        return Derivation({v: -p for v, p in self.parts.items()})

    def __rmul__(self, scalar: Coeff) -> "Derivation":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return Derivation.zero()
        return Derivation({v: p * scalar for v, p in self.parts.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.parts == other.parts

    def __repr__(self) -> str:
        if not self.parts:
            return "Derivation(0)"
        pieces = [f"({self.parts[v]})*d{v}" for v in sorted(self.parts)]
        return "Derivation(" + " + ".join(pieces) + ")"


def dual_op(op: Derivation) -> Derivation:
    """Conjugate a derivation by the dual involution."""
    acc: Dict[int, Polynomial] = {}
    for var, part in op.parts.items():
        image = dual(part)
        if var in (13, 14):
            new_var = var
            image = -image
        else:
            new_var = 27 - var
        acc[new_var] = acc.get(new_var, Polynomial.zero()) + image
    return Derivation(acc)


class WeightError(ValueError):
    """Raised when a polynomial mixes monomials of different weights."""

    def __init__(self, first: Weight, second: Weight) -> None:
        super().__init__(f"mixed weights {first} and {second}")
        self.first = first
        self.second = second


def exponent_weight(exp: Sequence[int]) -> Weight:
    """Sum of variable weights with multiplicity for one monomial."""
    totals = [0, 0, 0, 0]
    for j, k in enumerate(exp):
        if k:
            w = VARIABLE_WEIGHTS[j]
            for i in range(4):
                totals[i] += k * w[i]
    return (totals[0], totals[1], totals[2], totals[3])


def weight(poly: Polynomial) -> Weight:
    """Common weight of all monomials; raises WeightError if they disagree."""
    if not poly.terms:
        raise ValueError("the zero polynomial has no well-defined weight")
    result: Weight | None = None
    for exp in poly.terms:
        w = exponent_weight(exp)
        if result is None:
            result = w
        elif w != result:
            raise WeightError(result, w)
    assert result is not None
    return result


def monomials_of_degree(degree: int) -> Iterator[Exponent]:
    """All exponent tuples of the given total degree, in a fixed canonical order."""
    if degree < 0:
        return
    for combo in combinations_with_replacement(range(NVARS), degree):
        exp = [0] * NVARS
        for j in combo:
            exp[j] += 1
        yield tuple(exp)


@lru_cache(maxsize=None)
def degree_weight_table(degree: int) -> Dict[Weight, Tuple[Exponent, ...]]:
    """Monomials of one degree grouped by weight, keys sorted descending."""
    groups: Dict[Weight, List[Exponent]] = {}
    for exp in monomials_of_degree(degree):
        groups.setdefault(exponent_weight(exp), []).append(exp)
    return {w: tuple(groups[w]) for w in sorted(groups, reverse=True)}


def weight_subspace_basis(degree: int, target: Weight) -> Tuple[Exponent, ...]:
    """Monomial basis of one weight subspace at the given degree."""
    return degree_weight_table(degree).get(tuple(target), ())


def poly_to_json(poly: Polynomial) -> List[Dict[str, object]]:
    """Serialize to a list of {exp, num, den} records in canonical term order."""
    out = []
    for exp, coeff in poly.sorted_terms():
        frac = Fraction(coeff)
        out.append({"exp": list(exp), "num": str(frac.numerator), "den": str(frac.denominator)})
    return out


def poly_from_json(data: Iterable[Mapping[str, object]]) -> Polynomial:
    """Inverse of poly_to_json."""
    terms: Dict[Exponent, Coeff] = {}
    for record in data:
        exp = tuple(int(k) for k in record["exp"])  # type: ignore[arg-type]
        coeff = Fraction(int(str(record["num"])), int(str(record["den"])))
        if coeff.denominator == 1:
            coeff = coeff.numerator
        if coeff:
            terms[exp] = terms.get(exp, 0) + coeff
    return Polynomial(terms)
