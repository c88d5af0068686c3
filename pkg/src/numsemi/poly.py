"""Sparse multivariate integer polynomials with weighted variables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per variable")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> WeightedPolynomial:
        return WeightedPolynomial(self, {})

    def const(self, c: int) -> WeightedPolynomial:
        return WeightedPolynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Exponents, coeff: int = 1) -> WeightedPolynomial:
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        return WeightedPolynomial(self, {tuple(exps): coeff})

    def var(self, name: str) -> WeightedPolynomial:
        i = self.names.index(name)
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    def gens(self) -> tuple[WeightedPolynomial, ...]:
        return tuple(self.var(n) for n in self.names)

    def weight_of(self, exps: Exponents) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))


class WeightedPolynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, int]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def _coerce(self, other) -> WeightedPolynomial:
        if isinstance(other, WeightedPolynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return WeightedPolynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPolynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return WeightedPolynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = self.ring.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> set[int]:
        return {self.ring.weight_of(e) for e in self.terms}

    def is_isobaric(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self) -> int:
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError(f"polynomial is not isobaric: weights {sorted(ws)}")
        return ws.pop()

    def substitute_curve(self) -> dict[int, int]:
        """Image under X_j -> t^{weight_j}, as {power of t: coefficient}."""
        out: dict[int, int] = {}
        for e, c in self.terms.items():
            k = self.ring.weight_of(e)
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
